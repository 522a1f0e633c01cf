//! Exhaustive bounded-window law checks.
//!
//! Each check enumerates a finite window in canonical order and records
//! counterexamples in a [`LawReport`]. Checks that validate a closed form use
//! an independent route: iterated `ϖ` for `ϖⁿ`, pointwise evaluation for
//! composition, plain multiplication for corners.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::element::{Element, GreenRelation, Triple};
use crate::endo::{
    apply_pi, classify_window, compose, compose_pointwise, factor, pi_power_preimage,
    CornerDescriptor, EndoNormalForm, MonoidPart,
};
use crate::error::Result;
use crate::family::{validate_family, Family};
use crate::set::BoundedSubset;
use crate::window::{window, window_over, ElementMap, WindowMap};

/// Stored counterexamples per report; `violation_count` keeps the total.
pub const MAX_RECORDED: usize = 50;

/// The semigroup product used by the checks.
pub type Product = fn(Triple, Triple) -> Result<Triple>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub checked: u64,
    pub skipped: u64,
    pub violation_count: u64,
    pub violations: Vec<String>,
}

impl LawReport {
    pub fn new(law: impl Into<String>) -> Self {
        LawReport {
            law: law.into(),
            checked: 0,
            skipped: 0,
            violation_count: 0,
            violations: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.violation_count == 0
    }

    pub fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violation_count += 1;
            if self.violations.len() < MAX_RECORDED {
                self.violations.push(counterexample());
            }
        }
    }

    fn merge(&mut self, other: LawReport) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        for v in other.violations {
            if self.violations.len() < MAX_RECORDED {
                self.violations.push(v);
            }
        }
        self.violation_count += other.violation_count;
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.holds() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} (checked {}", self.law, self.checked)?;
        if self.skipped > 0 {
            write!(f, ", skipped {}", self.skipped)?;
        }
        write!(f, ")")?;
        if !self.holds() {
            write!(f, ": {} violations", self.violation_count)?;
            if let Some(first) = self.violations.first() {
                write!(f, ", e.g. {first}")?;
            }
        }
        Ok(())
    }
}

/// Runs `body` for each item in parallel and merges the partial reports in
/// item order.
fn par_law<T, F>(law: &str, items: &[T], body: F) -> LawReport
where
    T: Sync,
    F: Fn(&T, &mut LawReport) + Sync + Send,
{
    let parts: Vec<LawReport> = items
        .par_iter()
        .map(|item| {
            let mut part = LawReport::new(law);
            body(item, &mut part);
            part
        })
        .collect();
    let mut report = LawReport::new(law);
    for part in parts {
        report.merge(part);
    }
    report
}

/// Parameter ranges for endomorphism sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sweep {
    pub max_k: u64,
    pub max_power: u64,
}

impl Default for Sweep {
    fn default() -> Self {
        Sweep {
            max_k: 4,
            max_power: 5,
        }
    }
}

impl Sweep {
    /// Every legal monoidal part with `k <= max_k`.
    pub fn monoid_parts(&self) -> Vec<MonoidPart> {
        let mut parts = Vec::new();
        for k in 1..=self.max_k {
            parts.extend((0..k).map(|p| MonoidPart::Alpha { k, p }));
        }
        for k in 2..=self.max_k {
            parts.extend((1..k).map(|p| MonoidPart::Beta { k, p }));
        }
        parts.extend((1..=self.max_k).map(|k| MonoidPart::Gamma { k }));
        parts.extend((1..=self.max_k).map(|k| MonoidPart::Delta { k }));
        parts.push(MonoidPart::AnnUnit);
        parts
    }

    pub fn forms(&self) -> Vec<EndoNormalForm> {
        let mut out = Vec::new();
        for part in self.monoid_parts() {
            for power in 0..=self.max_power {
                out.push(EndoNormalForm {
                    monoid_part: part,
                    power,
                });
            }
        }
        out
    }
}

/// `(x·y)m = (x)m·(y)m` for all window pairs, with products from `product`.
///
/// Pairs whose product (or whose factors) have no image under `m` are
/// counted as skipped.
pub fn check_homomorphism_with<M: ElementMap + ?Sized + Sync>(
    product: Product,
    m: &M,
    bound: u64,
) -> LawReport {
    let elems = window(bound);
    par_law("homomorphism", &elems, |&x, report| {
        for &y in &elems {
            let lhs = product(x, y).ok().and_then(|xy| m.image(xy));
            let rhs = match (m.image(x), m.image(y)) {
                (Some(a), Some(b)) => product(a, b).ok(),
                _ => None,
            };
            match (lhs, rhs) {
                (Some(l), Some(r)) => report.check(l == r, || {
                    format!("x={x} y={y}: (xy)m={l} but (x)m(y)m={r}")
                }),
                _ => report.skipped += 1,
            }
        }
    })
}

/// The law checks, parameterised by the semigroup product so that a broken
/// product can be fed through the same suite.
#[derive(Clone, Copy)]
pub struct Verifier {
    product: Product,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            product: Triple::mul,
        }
    }
}

impl Verifier {
    pub fn with_product(product: Product) -> Self {
        Verifier { product }
    }

    fn mul(&self, x: Triple, y: Triple) -> Option<Triple> {
        (self.product)(x, y).ok()
    }

    pub fn check_associativity(&self, bound: u64, family: &Family) -> LawReport {
        let tails: Vec<u64> = family.tails().iter().copied().collect();
        let elems = window_over(bound, &tails);
        let law = format!("associativity (family {family}, N={bound})");
        par_law(&law, &elems, |&x, report| {
            for &y in &elems {
                let xy = self.mul(x, y);
                for &z in &elems {
                    let left = xy.and_then(|xy| self.mul(xy, z));
                    let right = self.mul(y, z).and_then(|yz| self.mul(x, yz));
                    let closed = left.is_some_and(|t| family.contains(t.set()));
                    report.check(left.is_some() && left == right && closed, || {
                        format!("x={x} y={y} z={z}: (xy)z={left:?} x(yz)={right:?}")
                    });
                }
            }
        })
    }

    pub fn check_unit(&self, bound: u64) -> LawReport {
        let mut report = LawReport::new(format!("unit (0,0,[0)) (N={bound})"));
        for x in window(bound) {
            let l = self.mul(Triple::UNIT, x);
            let r = self.mul(x, Triple::UNIT);
            report.check(l == Some(x) && r == Some(x), || format!("x={x}: 1x={l:?} x1={r:?}"));
        }
        report
    }

    /// Zero of the quotient absorbs on both sides.
    pub fn check_zero_absorption(&self, bound: u64) -> LawReport {
        let family = Family::f2().with_empty();
        let mut report = LawReport::new(format!("zero absorption (N={bound})"));
        for x in window(bound).into_iter().map(Element::from).chain([Element::Zero]) {
            let l = family.multiply(Element::Zero, x);
            let r = family.multiply(x, Element::Zero);
            report.check(l == Ok(Element::Zero) && r == Ok(Element::Zero), || {
                format!("x={x}: 0x={l:?} x0={r:?}")
            });
        }
        report
    }

    pub fn check_homomorphism<M: ElementMap + ?Sized + Sync>(&self, m: &M, bound: u64) -> LawReport {
        check_homomorphism_with(self.product, m, bound)
    }

    pub fn check_pi_homomorphism(&self, bound: u64) -> LawReport {
        let pi = EndoNormalForm::pi_power(1);
        let mut report = self.check_homomorphism(&pi, bound);
        report.law = format!("w is a homomorphism (N={bound})");
        report
    }

    pub fn check_injective<M: ElementMap + ?Sized>(&self, law: &str, m: &M, bound: u64) -> LawReport {
        let mut report = LawReport::new(law);
        let mut seen: BTreeMap<Triple, Triple> = BTreeMap::new();
        for x in window(bound) {
            match m.image(x) {
                Some(y) => {
                    let prev = seen.insert(y, x);
                    report.check(prev.is_none(), || format!("{} and {x} both map to {y}", prev.unwrap()));
                }
                None => report.skipped += 1,
            }
        }
        report
    }

    /// Closed-form `ϖⁿ` against `n` iterations of `ϖ`.
    pub fn check_pi_power_closed_form(&self, bound: u64, max_power: u64) -> LawReport {
        let mut report = LawReport::new(format!(
            "closed-form w^n equals iterated w (N={bound}, n<={max_power})"
        ));
        for x in window(bound) {
            let mut iterated = x;
            for n in 0..=max_power {
                let closed = crate::endo::apply_pi_power(x, n).ok();
                report.check(closed == Some(iterated), || {
                    format!("x={x} n={n}: closed {closed:?}, iterated {iterated}")
                });
                iterated = apply_pi(iterated).expect("window stays small");
            }
        }
        report
    }

    /// Corner membership by `e x e = x` against image membership of
    /// `ϖ^{2s+p}`.
    pub fn check_corners(&self, max_s: u64, bound: u64) -> LawReport {
        let mut report = LawReport::new(format!(
            "corner B(s,p) equals image of w^(2s+p) (s<={max_s}, N={bound})"
        ));
        for s in 0..=max_s {
            for p in 0..=1 {
                let c = CornerDescriptor { s, p };
                let e = c.idempotent();
                for x in window(bound) {
                    let in_corner = self
                        .mul(e, x)
                        .and_then(|ex| self.mul(ex, e))
                        .is_some_and(|exe| exe == x);
                    let in_image = pi_power_preimage(x, c.pi_exponent()).is_some();
                    report.check(in_corner == in_image, || {
                        format!("s={s} p={p} x={x}: corner {in_corner}, image {in_image}")
                    });
                }
            }
        }
        report
    }

    /// The exponent `2s − 1` for `B(s, 1)` fails at `s = 1`: the element
    /// `(0,0,[1))` lies in the image of `ϖ¹` but not in `B(1, 1)`.
    pub fn check_odd_corner_counterexample(&self) -> LawReport {
        let mut report = LawReport::new("exponent 2s-1 for B(s,1) refuted at s=1, x=(0,0,[1))");
        let e = Triple::new(1, 1, 1);
        let x = Triple::new(0, 0, 1);
        let exe = self.mul(e, x).and_then(|ex| self.mul(ex, e));
        let in_image_pi1 = pi_power_preimage(x, 1).is_some();
        report.check(exe == Some(e), || format!("e x e = {exe:?}, expected (1,1,[1))"));
        report.check(in_image_pi1, || "(0,0,[1)) is not in the image of w".into());
        report.check(exe != Some(x), || "(0,0,[1)) lies in B(1,1)".into());
        report
    }

    pub fn check_endo_homomorphism(&self, sweep: &Sweep, bound: u64) -> LawReport {
        let forms = sweep.forms();
        let mut report = par_law("", &forms, |e, report| {
            report.merge(self.check_homomorphism(e, bound));
        });
        report.law = format!(
            "normal forms are endomorphisms (k<={}, n<={}, N={bound})",
            sweep.max_k, sweep.max_power
        );
        report
    }

    /// `factor ∘ apply` is the identity and distinct forms have distinct
    /// windows.
    pub fn check_factorization_uniqueness(&self, sweep: &Sweep, bound: u64) -> LawReport {
        let mut report = LawReport::new(format!(
            "unique factorization e = e1 w^n (k<={}, n<={}, N={bound})",
            sweep.max_k, sweep.max_power
        ));
        let mut windows: BTreeMap<Vec<Triple>, EndoNormalForm> = BTreeMap::new();
        for e in sweep.forms() {
            let recovered = factor(&e);
            report.check(recovered.as_ref() == Ok(&e), || format!("{e} factors as {recovered:?}"));
            let images: Vec<Triple> = window(bound).into_iter().map(|x| e.apply(x).unwrap()).collect();
            let prev = windows.insert(images, e);
            report.check(prev.is_none(), || format!("{} and {e} agree on the window", prev.unwrap()));
        }
        report
    }

    /// Sampled windows classify back to the form that produced them, and
    /// the family matches window-level injectivity and constancy.
    pub fn check_classification(&self, sweep: &Sweep, bound: u64) -> LawReport {
        let forms = sweep.forms();
        let mut report = par_law("", &forms, |e, report| {
            let m = match WindowMap::tabulate(e, bound) {
                Ok(m) => m,
                Err(err) => return report.check(false, || format!("{e}: {err}")),
            };
            let got = classify_window(&m);
            report.check(got.as_ref() == Ok(e), || format!("{e} classified as {got:?}"));
            let pred = e.predicates();
            report.check(pred.injective == m.is_injective(), || {
                format!("{e}: injective flag {} but window injective {}", pred.injective, m.is_injective())
            });
            report.check(pred.annihilating == m.is_constant(), || {
                format!("{e}: annihilating flag {} but window constant {}", pred.annihilating, m.is_constant())
            });
        });
        report.law = format!("classification into alpha/beta/gamma/delta/annihilating (N={bound})");
        report
    }

    /// Injectivity and annihilation of `ε₁ϖⁿ` match those of `ε₁`.
    pub fn check_predicate_transfer(&self, sweep: &Sweep, bound: u64) -> LawReport {
        let mut report = LawReport::new(format!("injective/annihilating transfer between e and e1 (N={bound})"));
        for e in sweep.forms() {
            let e1 = EndoNormalForm {
                monoid_part: e.monoid_part,
                power: 0,
            };
            let (Ok(m), Ok(m1)) = (WindowMap::tabulate(&e, bound), WindowMap::tabulate(&e1, bound)) else {
                report.check(false, || format!("{e}: window not representable"));
                continue;
            };
            let pred = e.predicates();
            report.check(
                m.is_injective() == m1.is_injective() && m.is_injective() == pred.injective,
                || format!("{e}: injective {} vs e1 {}", m.is_injective(), m1.is_injective()),
            );
            report.check(
                m.is_constant() == m1.is_constant() && m.is_constant() == pred.annihilating,
                || format!("{e}: constant {} vs e1 {}", m.is_constant(), m1.is_constant()),
            );
            report.check(pred.monoidal == (e.apply(Triple::UNIT).ok() == Some(Triple::UNIT)), || {
                format!("{e}: monoidal flag disagrees with unit image")
            });
        }
        report
    }

    /// Closed-form composition against pointwise composition, coherence on
    /// the window, and associativity.
    pub fn check_composition(&self, sweep: &Sweep, bound: u64) -> LawReport {
        let forms = sweep.forms();
        let elems = window(bound);
        let mut report = par_law("", &forms, |f, report| {
            for g in &forms {
                let fast = compose(f, g);
                let oracle = compose_pointwise(f, g);
                report.check(fast.is_ok() && fast == oracle, || {
                    format!("{f} then {g}: closed {fast:?}, pointwise {oracle:?}")
                });
                let Ok(h) = fast else { continue };
                for &x in &elems {
                    let direct = f.apply(x).and_then(|y| g.apply(y));
                    let via = h.apply(x);
                    report.check(direct == via, || format!("{f} then {g} at {x}: {direct:?} vs {via:?}"));
                }
            }
        });
        report.law = format!("composition coherence (N={bound})");
        report
    }

    pub fn check_composition_associativity(&self, sweep: &Sweep) -> LawReport {
        let forms = sweep.forms();
        let mut report = par_law("", &forms, |f, report| {
            for g in &forms {
                let fg = compose(f, g);
                for h in &forms {
                    let left = fg.as_ref().ok().and_then(|fg| compose(fg, h).ok());
                    let right = compose(g, h).ok().and_then(|gh| compose(f, &gh).ok());
                    report.check(left.is_some() && left == right, || {
                        format!("({f};{g});{h}={left:?} but {f};({g};{h})={right:?}")
                    });
                }
            }
        });
        report.law = "composition is associative".into();
        report
    }

    /// The annihilating endomorphisms form a right-zero semigroup and an
    /// ideal of the endomorphism monoid.
    pub fn check_minimal_ideal(&self, sweep: &Sweep, max_ann: u64) -> LawReport {
        let mut report = LawReport::new(format!("annihilating maps: right zeros and minimal ideal (n<={max_ann})"));
        let anns: Vec<EndoNormalForm> = (0..=max_ann)
            .map(|n| EndoNormalForm {
                monoid_part: MonoidPart::AnnUnit,
                power: n,
            })
            .collect();
        let mut values = BTreeSet::new();
        for a in &anns {
            report.check(values.insert(a.apply(Triple::UNIT).ok()), || format!("{a} repeats a constant"));
            for b in &anns {
                let ab = compose(a, b);
                report.check(ab.as_ref() == Ok(b), || format!("{a} then {b} = {ab:?}"));
            }
        }
        for e in sweep.forms() {
            for a in &anns {
                let ea = compose(&e, a);
                report.check(ea.as_ref() == Ok(a), || format!("{e} then {a} = {ea:?}"));
                let ae = compose(a, &e);
                let predicted = e.apply(a.unit_image()).ok().map(|v| EndoNormalForm {
                    monoid_part: MonoidPart::AnnUnit,
                    power: 2 * v.i + v.f,
                });
                report.check(ae.is_ok() && ae.as_ref().ok() == predicted.as_ref(), || {
                    format!("{a} then {e} = {ae:?}, predicted {predicted:?}")
                });
            }
        }
        report
    }

    /// Brute-force ω-closure on truncated sets for every nonempty subset of
    /// `{0..max_index}`, compared with the interval test and with
    /// [`validate_family`].
    pub fn oracle_family_interval(&self, max_index: u64) -> LawReport {
        let mut report = LawReport::new(format!("omega-closure oracle (subsets of 0..={max_index})"));
        let limit = 3 * max_index + 3;
        let tail = |n: u64| -> BTreeSet<i64> { (n as i64..=limit as i64).collect() };
        for mask in 1u32..(1 << (max_index + 1)) {
            let tails: BTreeSet<u64> = (0..=max_index).filter(|b| mask & (1 << b) != 0).collect();
            let mut brute = true;
            'outer: for &a in &tails {
                for &b in &tails {
                    for n in 0..=max_index as i64 {
                        let shifted: BTreeSet<i64> = tail(b).iter().map(|x| x - n).collect();
                        let meet: BTreeSet<i64> = tail(a).intersection(&shifted).copied().collect();
                        let least = *meet.iter().next().expect("tails overlap");
                        if !tails.contains(&(least as u64)) {
                            brute = false;
                            break 'outer;
                        }
                    }
                }
            }
            let lo = *tails.iter().next().unwrap();
            let hi = *tails.iter().next_back().unwrap();
            let interval = tails.len() as u64 == hi - lo + 1;
            let validated = validate_family(&tails).unwrap_or(false);
            report.check(brute == interval && interval == validated, || {
                format!("{tails:?}: brute {brute}, interval {interval}, validate {validated}")
            });
        }
        report
    }

    /// `(−1 + F) ∩ F = F` against successor closure, over every subset
    /// whose finite part and tail start lie below `support`.
    pub fn check_inductive_sweep(&self, support: u64) -> LawReport {
        let mut report = LawReport::new(format!("inductive iff (-1+F)∩F=F (support<={support})"));
        let tails = std::iter::once(None).chain((0..=support).map(Some));
        for tail in tails {
            let width = tail.unwrap_or(support);
            for mask in 0u64..(1 << width) {
                let finite = (0..width).filter(|b| mask & (1 << b) != 0);
                let f = BoundedSubset::new(finite, tail);
                if f.tail() != tail || f.finite_part().len() != mask.count_ones() as usize {
                    // non-canonical duplicate of a set visited elsewhere
                    continue;
                }
                let (lhs, rhs) = check_inductive_characterization(&f);
                report.check(lhs == rhs, || format!("F={f}: identity {lhs}, inductive {rhs}"));
            }
        }
        report
    }

    /// Inverse uniqueness, idempotents, the natural order and Green's
    /// R/L/H on the window.
    pub fn check_inverse_semigroup(&self, bound: u64) -> Vec<LawReport> {
        let elems = window(bound);
        let wide = window(2 * bound);
        let idempotents: Vec<Triple> = wide.iter().copied().filter(|e| e.i == e.j).collect();

        let inverse = par_law(&format!("unique inverse (N={bound}, search N={})", 2 * bound), &elems, |&x, report| {
            let found: Vec<Triple> = wide
                .iter()
                .copied()
                .filter(|&y| {
                    let xyx = self.mul(x, y).and_then(|xy| self.mul(xy, x));
                    let yxy = self.mul(y, x).and_then(|yx| self.mul(yx, y));
                    xyx == Some(x) && yxy == Some(y)
                })
                .collect();
            report.check(found == [x.inverse()], || format!("x={x}: inverses {found:?}"));
        });

        let mut idem = LawReport::new(format!("idempotents are (i,i,[p)) (N={bound})"));
        for &x in &elems {
            let squares = self.mul(x, x) == Some(x);
            idem.check(squares == (x.i == x.j) && x.is_idempotent() == squares, || {
                format!("x={x}: x*x=x is {squares}")
            });
        }

        let leq = |x: Triple, y: Triple| -> bool {
            self.mul(x, x.inverse())
                .and_then(|e| self.mul(e, y))
                .is_some_and(|z| z == x)
        };
        let order = par_law(&format!("natural order closed form equals s=te (N={bound})"), &elems, |&x, report| {
            for &y in &elems {
                let closed = leq(x, y);
                let exists = idempotents.iter().any(|&e| self.mul(y, e) == Some(x));
                report.check(closed == exists && x.natural_leq(y) == closed, || {
                    format!("x={x} y={y}: closed {closed}, existential {exists}")
                });
            }
        });

        let partial = par_law(&format!("natural order is a partial order (N={bound})"), &elems, |&x, report| {
            report.check(leq(x, x), || format!("{x} not reflexive"));
            for &y in &elems {
                let xy = leq(x, y);
                report.check(!(xy && leq(y, x)) || x == y, || format!("{x} and {y} antisymmetry"));
                if xy {
                    for &z in &elems {
                        report.check(!leq(y, z) || leq(x, z), || format!("{x}<={y}<={z} not transitive"));
                    }
                }
            }
        });

        let mut reports = vec![inverse, idem, order, partial];
        for relation in [GreenRelation::R, GreenRelation::L, GreenRelation::H] {
            reports.push(self.check_green_equivalence(relation, &elems));
        }
        reports
    }

    fn check_green_equivalence(&self, relation: GreenRelation, elems: &[Triple]) -> LawReport {
        let law = format!("Green {relation:?} is an equivalence");
        let key = |x: Triple| -> (Option<Triple>, Option<Triple>) {
            let r = self.mul(x, x.inverse());
            let l = self.mul(x.inverse(), x);
            match relation {
                GreenRelation::R => (r, None),
                GreenRelation::L => (None, l),
                GreenRelation::H => (r, l),
            }
        };
        let related = |x: Triple, y: Triple| key(x) == key(y);
        par_law(&law, elems, |&x, report| {
            report.check(related(x, x), || format!("{x} not reflexive"));
            for &y in elems {
                let xy = related(x, y);
                report.check(xy == related(y, x), || format!("{x},{y} not symmetric"));
                report.check(xy == x.green_related(y, relation), || format!("{x},{y} disagrees with green_related"));
                if xy {
                    for &z in elems {
                        report.check(!related(y, z) || related(x, z), || format!("{x},{y},{z} not transitive"));
                    }
                }
            }
        })
    }

    /// Every check at its default bound.
    pub fn default_suite(&self) -> Vec<LawReport> {
        self.suite(&SuiteConfig::default())
    }

    pub fn suite(&self, config: &SuiteConfig) -> Vec<LawReport> {
        let n = config.triple_window;
        let sweep = config.sweep;
        let mut reports = vec![
            self.check_associativity(n, &Family::f2()),
            self.check_associativity(4, &Family::new([0, 1, 2], false).expect("interval family")),
            self.check_unit(n),
            self.check_zero_absorption(n),
        ];
        reports.extend(self.check_inverse_semigroup(n));
        reports.extend([
            self.check_pi_homomorphism(n),
            self.check_injective("w is injective", &EndoNormalForm::pi_power(1), n),
            self.check_pi_power_closed_form(n, 12),
            self.check_corners(4, 10),
            self.check_odd_corner_counterexample(),
            self.check_endo_homomorphism(&sweep, n),
            self.check_factorization_uniqueness(&sweep, config.map_window),
            self.check_classification(&sweep, config.map_window),
            self.check_predicate_transfer(&sweep, config.map_window),
            self.check_composition(&sweep, n),
            self.check_composition_associativity(&sweep),
            self.check_minimal_ideal(&sweep, 10),
            self.oracle_family_interval(8),
            self.check_inductive_sweep(config.inductive_support),
        ]);
        reports
    }
}

/// Window sizes for [`Verifier::suite`].
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    /// Bound for checks that range over pairs or triples of elements.
    pub triple_window: u64,
    /// Bound for comparing and classifying sampled maps.
    pub map_window: u64,
    pub sweep: Sweep,
    /// Finite parts and tail starts range below this bound in the
    /// inductive-set sweep.
    pub inductive_support: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            triple_window: 6,
            map_window: 8,
            sweep: Sweep::default(),
            inductive_support: 20,
        }
    }
}

/// `([(−1 + F) ∩ F = F], [F is inductive])`; the two must agree.
pub fn check_inductive_characterization(f: &BoundedSubset) -> (bool, bool) {
    (f.shift_down_intersect() == *f, f.is_inductive())
}

pub fn all_hold(reports: &[LawReport]) -> bool {
    reports.iter().all(LawReport::holds)
}
