//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a law is violated (a failing `verify`
//! run or a map that is not an endomorphism), 2 on usage and parse errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::element::{Element, GreenRelation};
use crate::endo::{classify_window, factor, parse_endo_expression, EndoNormalForm};
use crate::error::Error;
use crate::family::{closure_witness, parse_tails, Family};
use crate::verify::{all_hold, SuiteConfig, Verifier};
use crate::window::WindowMap;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "bicyclic", version, about = "Arithmetic and endomorphisms of the bicyclic extension B_w^F")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Family of tail indices for element commands, e.g. "0,1,2".
    #[arg(long, global = true, default_value = "0,1")]
    pub family: String,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply two elements.
    Mul { x: String, y: String },
    /// Inverse of an element.
    Inv { x: String },
    /// Whether an element is idempotent.
    Idem { x: String },
    /// Whether x precedes y in the natural partial order.
    Leq { x: String, y: String },
    /// Green's relation R, L or H between two elements.
    Green { relation: String, x: String, y: String },
    /// Apply an endomorphism expression to an element.
    EndoApply {
        #[arg(long)]
        expr: String,
        x: String,
    },
    /// Compose expressions left to right into normal form.
    EndoCompose {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Factor an endomorphism as e1 ; w^n.
    EndoFactor {
        #[arg(long)]
        expr: String,
    },
    /// Classify a sampled map read from a JSON window file.
    EndoClassify {
        #[arg(long)]
        map: PathBuf,
    },
    /// Check a family of tail indices for omega-closure.
    FamilyCheck { tails: String },
    /// Run the verification suite.
    Verify {
        /// Window bound for pair and triple checks.
        #[arg(long, default_value_t = 6)]
        window: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }
}

/// Parses arguments (including the program name) and executes.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code,
                }
            } else {
                Outcome::ok(rendered)
            }
        }
    }
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn usage_error(err: Error) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {err}\n"),
        code: EXIT_USAGE,
    }
}

fn render_form(e: &EndoNormalForm) -> serde_json::Value {
    let unit = e.unit_image();
    json!({
        "expr": e.to_string(),
        "monoid_part": e.monoid_part,
        "power": e.power,
        "s": unit.i,
        "p": unit.f,
        "predicates": e.predicates(),
    })
}

fn factor_text(e: &EndoNormalForm) -> String {
    let unit = e.unit_image();
    format!(
        "{} ; w^{}\ns={} p={} n={}\n",
        e.monoid_part, e.power, unit.i, unit.f, e.power
    )
}

/// Runs the suite and renders one line per law; exit code 1 on any violation.
pub fn verify_outcome(verifier: &Verifier, config: &SuiteConfig, json: bool) -> Outcome {
    let reports = verifier.suite(config);
    let mut out = String::new();
    for r in &reports {
        if json {
            out.push_str(&line(serde_json::to_string(r).expect("reports serialize")));
        } else {
            out.push_str(&line(r));
        }
    }
    Outcome {
        stdout: out,
        stderr: String::new(),
        code: if all_hold(&reports) { EXIT_OK } else { EXIT_VIOLATION },
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    match try_execute(cli) {
        Ok(out) => out,
        Err(Error::NotEndomorphism(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("law violation: not an endomorphism: {msg}\n"),
            code: EXIT_VIOLATION,
        },
        Err(e) => usage_error(e),
    }
}

fn try_execute(cli: &Cli) -> Result<Outcome, Error> {
    let json = cli.json;
    let family = || -> Result<Family, Error> { Family::new(parse_tails(&cli.family)?, false) };
    let element = |text: &str| -> Result<Element, Error> { family()?.parse_element(text) };
    let truth = |b: bool| {
        if json {
            line(json!({ "result": b }))
        } else {
            line(b)
        }
    };
    let render_element = |x: Element| {
        if json {
            line(serde_json::to_string(&x).expect("elements serialize"))
        } else {
            line(x)
        }
    };
    let out = match &cli.command {
        Command::Mul { x, y } => {
            let (x, y) = (element(x)?, element(y)?);
            render_element(family()?.multiply(x, y)?)
        }
        Command::Inv { x } => render_element(element(x)?.inverse()),
        Command::Idem { x } => truth(element(x)?.is_idempotent()),
        Command::Leq { x, y } => truth(element(x)?.natural_leq(element(y)?)),
        Command::Green { relation, x, y } => {
            let relation: GreenRelation = relation.parse()?;
            truth(element(x)?.green_related(element(y)?, relation))
        }
        Command::EndoApply { expr, x } => {
            let e = parse_endo_expression(expr)?;
            let x = Family::f2()
                .parse_element(x)?
                .as_triple()
                .ok_or(Error::NoZero)?;
            render_element(e.apply(x)?.into())
        }
        Command::EndoCompose { exprs } => {
            let mut acc = EndoNormalForm::IDENTITY;
            for text in exprs {
                acc = acc.then(&parse_endo_expression(text)?)?;
            }
            if json {
                line(render_form(&acc))
            } else {
                line(acc)
            }
        }
        Command::EndoFactor { expr } => {
            let e = parse_endo_expression(expr)?;
            let factored = factor(&e)?;
            if json {
                line(render_form(&factored))
            } else {
                factor_text(&factored)
            }
        }
        Command::EndoClassify { map } => {
            let text = std::fs::read_to_string(map)
                .map_err(|e| Error::WindowMap(format!("{}: {e}", map.display())))?;
            let m = WindowMap::from_json(&text)?;
            let e = classify_window(&m)?;
            if json {
                line(render_form(&e))
            } else {
                line(e)
            }
        }
        Command::FamilyCheck { tails } => {
            let tails = parse_tails(tails)?;
            let witness = closure_witness(&tails)?;
            match (json, witness) {
                (true, w) => line(json!({
                    "closed": w.is_none(),
                    "witness": w.map(|w| json!({"a": w.a, "b": w.b, "n": w.n, "produced": w.produced})),
                })),
                (false, None) => line("ω-closed"),
                (false, Some(w)) => line(format!("not ω-closed: witness {w}")),
            }
        }
        Command::Verify { window } => {
            if *window > 8 {
                return Err(Error::InvalidParameter(format!(
                    "--window {window} exceeds 8"
                )));
            }
            let config = SuiteConfig {
                triple_window: *window,
                ..SuiteConfig::default()
            };
            return Ok(verify_outcome(&Verifier::default(), &config, json));
        }
    };
    Ok(Outcome::ok(out))
}
