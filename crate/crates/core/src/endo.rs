//! Endomorphisms of B_ω^𝓕² in the normal form `ε₁ϖⁿ`.
//!
//! Maps act on the right: `ε₁ϖⁿ` first applies the monoidal part `ε₁` and
//! then `n` copies of `ϖ`. Every endomorphism has exactly one such form,
//! where `ε₁` is one of `α_{k,p}`, `β_{k,p}`, `γ_k`, `δ_k` or the constant
//! map onto the unit.

use std::fmt;

use serde::Serialize;

use crate::element::Triple;
use crate::error::{Error, Result};
use crate::verify::check_homomorphism_with;
use crate::window::{window, ElementMap, FnMap, WindowMap};

/// Window used to confirm a recovered normal form against a map that is
/// not itself sampled.
pub const CONFIRM_BOUND: u64 = 8;

/// Minimal window for classification: the probe set needs `i, j <= 2`.
pub const MIN_CLASSIFY_BOUND: u64 = 2;

/// Elements whose images pin down every normal form.
pub const PROBES: [Triple; 7] = [
    Triple::new(0, 0, 0),
    Triple::new(1, 1, 0),
    Triple::new(2, 2, 0),
    Triple::new(0, 0, 1),
    Triple::new(1, 1, 1),
    Triple::new(0, 1, 0),
    Triple::new(1, 0, 0),
];

fn checked_mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn checked_add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn ensure_f2(x: Triple) -> Result<()> {
    if x.f > 1 {
        Err(Error::NotInF2(x.to_string()))
    } else {
        Ok(())
    }
}

/// The endomorphism `ϖ`: `[0)` triples move to `[1)`, `[1)` triples move to
/// `[0)` one step further along the diagonal.
pub fn apply_pi(x: Triple) -> Result<Triple> {
    ensure_f2(x)?;
    if x.f == 0 {
        Ok(Triple::new(x.i, x.j, 1))
    } else {
        Ok(Triple::new(checked_add(x.i, 1)?, checked_add(x.j, 1)?, 0))
    }
}

/// `(x)ϖⁿ` in closed form.
pub fn apply_pi_power(x: Triple, n: u64) -> Result<Triple> {
    ensure_f2(x)?;
    let half = n / 2;
    let shift = |d: u64| -> Result<(u64, u64)> { Ok((checked_add(x.i, d)?, checked_add(x.j, d)?)) };
    if n.is_multiple_of(2) {
        let (i, j) = shift(half)?;
        Ok(Triple::new(i, j, x.f))
    } else if x.f == 0 {
        let (i, j) = shift(half)?;
        Ok(Triple::new(i, j, 1))
    } else {
        let (i, j) = shift(half + 1)?;
        Ok(Triple::new(i, j, 0))
    }
}

/// Inverse of `ϖⁿ` on its image; `None` when `y` is not in the image.
pub fn pi_power_preimage(y: Triple, n: u64) -> Option<Triple> {
    if y.f > 1 {
        return None;
    }
    let s = n / 2;
    let back = |d: u64, f: u64| {
        Some(Triple::new(y.i.checked_sub(d)?, y.j.checked_sub(d)?, f))
    };
    match (n % 2, y.f) {
        (0, f) => back(s, f),
        (_, 1) => back(s, 0),
        (_, _) => back(s + 1, 1),
    }
}

/// A monoidal endomorphism of B_ω^𝓕² (one fixing the unit `(0,0,[0))`).
///
/// Construct through the checked constructors; the identity is `α_{1,0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MonoidPart {
    /// `(i,j,[0)) ↦ (ki,kj,[0))`, `(i,j,[1)) ↦ (p+ki,p+kj,[1))`, `k >= 1`, `p < k`.
    Alpha { k: u64, p: u64 },
    /// `(i,j,[0)) ↦ (ki,kj,[0))`, `(i,j,[1)) ↦ (p+ki,p+kj,[0))`, `k >= 2`, `1 <= p < k`.
    Beta { k: u64, p: u64 },
    /// Both layers to `(ki,kj,[0))`.
    Gamma { k: u64 },
    /// `(i,j,[0)) ↦ (ki,kj,[0))`, `(i,j,[1)) ↦ (k(i+1),k(j+1),[0))`.
    Delta { k: u64 },
    /// The constant map onto the unit, `χ_{0,0}`.
    AnnUnit,
}

impl MonoidPart {
    pub const IDENTITY: MonoidPart = MonoidPart::Alpha { k: 1, p: 0 };

    pub fn alpha(k: u64, p: u64) -> Result<Self> {
        MonoidPart::Alpha { k, p }.validated()
    }

    pub fn beta(k: u64, p: u64) -> Result<Self> {
        MonoidPart::Beta { k, p }.validated()
    }

    pub fn gamma(k: u64) -> Result<Self> {
        MonoidPart::Gamma { k }.validated()
    }

    pub fn delta(k: u64) -> Result<Self> {
        MonoidPart::Delta { k }.validated()
    }

    pub fn validated(self) -> Result<Self> {
        let ok = match self {
            MonoidPart::Alpha { k, p } => k >= 1 && p < k,
            MonoidPart::Beta { k, p } => k >= 2 && p >= 1 && p < k,
            MonoidPart::Gamma { k } | MonoidPart::Delta { k } => k >= 1,
            MonoidPart::AnnUnit => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidParameter(format!("{self} is out of range")))
        }
    }

    /// Multiplier on the diagonal; zero for the annihilating part.
    pub fn scale(self) -> u64 {
        match self {
            MonoidPart::Alpha { k, .. }
            | MonoidPart::Beta { k, .. }
            | MonoidPart::Gamma { k }
            | MonoidPart::Delta { k } => k,
            MonoidPart::AnnUnit => 0,
        }
    }

    pub fn apply(self, x: Triple) -> Result<Triple> {
        ensure_f2(x)?;
        let scaled = |k: u64, offset: u64| -> Result<(u64, u64)> {
            Ok((
                checked_add(offset, checked_mul(k, x.i)?)?,
                checked_add(offset, checked_mul(k, x.j)?)?,
            ))
        };
        let (i, j, f) = match (self, x.f) {
            (MonoidPart::AnnUnit, _) => return Ok(Triple::UNIT),
            (_, 0) => {
                let (i, j) = scaled(self.scale(), 0)?;
                (i, j, 0)
            }
            (MonoidPart::Alpha { k, p }, _) => {
                let (i, j) = scaled(k, p)?;
                (i, j, 1)
            }
            (MonoidPart::Beta { k, p }, _) => {
                let (i, j) = scaled(k, p)?;
                (i, j, 0)
            }
            (MonoidPart::Gamma { k }, _) => {
                let (i, j) = scaled(k, 0)?;
                (i, j, 0)
            }
            (MonoidPart::Delta { k }, _) => {
                let (i, j) = scaled(k, k)?;
                (i, j, 0)
            }
        };
        Ok(Triple::new(i, j, f))
    }

    /// `self` followed by `next`, both monoidal.
    fn then(self, next: MonoidPart) -> Result<MonoidPart> {
        use MonoidPart::*;
        let k2 = next.scale();
        Ok(match (self, next) {
            (AnnUnit, _) | (_, AnnUnit) => AnnUnit,
            (Gamma { k }, _) => Gamma { k: checked_mul(k, k2)? },
            (Delta { k }, _) => Delta { k: checked_mul(k, k2)? },
            (Beta { k, p }, _) => Beta {
                k: checked_mul(k, k2)?,
                p: checked_mul(k2, p)?,
            },
            (Alpha { k, p }, Alpha { p: p2, .. }) => Alpha {
                k: checked_mul(k, k2)?,
                p: checked_add(p2, checked_mul(k2, p)?)?,
            },
            (Alpha { k, p }, Beta { p: p2, .. }) => Beta {
                k: checked_mul(k, k2)?,
                p: checked_add(p2, checked_mul(k2, p)?)?,
            },
            (Alpha { k, p: 0 }, Gamma { .. }) => Gamma { k: checked_mul(k, k2)? },
            (Alpha { k, p }, Gamma { .. }) => Beta {
                k: checked_mul(k, k2)?,
                p: checked_mul(k2, p)?,
            },
            (Alpha { k, p }, Delta { .. }) if p + 1 == k => Delta { k: checked_mul(k, k2)? },
            (Alpha { k, p }, Delta { .. }) => Beta {
                k: checked_mul(k, k2)?,
                p: checked_mul(k2, p + 1)?,
            },
        })
    }

    /// Rewrites `ϖ` followed by `self` as `part` followed by `ϖ^c`.
    fn after_pi(self) -> Result<(MonoidPart, u64)> {
        use MonoidPart::*;
        Ok(match self {
            Alpha { k, p } => (Alpha { k, p: k - 1 - p }, checked_add(checked_mul(2, p)?, 1)?),
            Beta { k, p } => (Beta { k, p: k - p }, checked_mul(2, p)?),
            Gamma { k } => (Delta { k }, 0),
            Delta { k } => (Gamma { k }, checked_mul(2, k)?),
            AnnUnit => (AnnUnit, 0),
        })
    }

    /// Rewrites `ϖⁿ` followed by `self` as `part` followed by `ϖ^c`.
    fn after_pi_power(self, n: u64) -> Result<(MonoidPart, u64)> {
        // ϖ² then a part with scale k equals the part then ϖ^{2k}
        let even = checked_mul(checked_mul(2, self.scale())?, n / 2)?;
        if n.is_multiple_of(2) {
            Ok((self, even))
        } else {
            let (part, c) = self.after_pi()?;
            Ok((part, checked_add(c, even)?))
        }
    }
}

impl fmt::Display for MonoidPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidPart::Alpha { k, p } => write!(f, "alpha[{k},{p}]"),
            MonoidPart::Beta { k, p } => write!(f, "beta[{k},{p}]"),
            MonoidPart::Gamma { k } => write!(f, "gamma[{k}]"),
            MonoidPart::Delta { k } => write!(f, "delta[{k}]"),
            MonoidPart::AnnUnit => f.write_str("chi[0,0]"),
        }
    }
}

/// The endomorphism "apply `monoid_part`, then `ϖ` `power` times".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EndoNormalForm {
    pub monoid_part: MonoidPart,
    pub power: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EndoPredicates {
    pub injective: bool,
    pub annihilating: bool,
    pub monoidal: bool,
}

impl EndoNormalForm {
    pub const IDENTITY: EndoNormalForm = EndoNormalForm {
        monoid_part: MonoidPart::IDENTITY,
        power: 0,
    };

    pub fn new(monoid_part: MonoidPart, power: u64) -> Result<Self> {
        Ok(EndoNormalForm {
            monoid_part: monoid_part.validated()?,
            power,
        })
    }

    pub fn monoidal(monoid_part: MonoidPart) -> Result<Self> {
        Self::new(monoid_part, 0)
    }

    /// `ϖⁿ`.
    pub fn pi_power(n: u64) -> Self {
        EndoNormalForm {
            monoid_part: MonoidPart::IDENTITY,
            power: n,
        }
    }

    /// The constant map onto the idempotent `(s,s,[q))`, stored as `χ_{0,0}ϖ^{2s+q}`.
    pub fn chi(s: u64, q: u64) -> Result<Self> {
        if q > 1 {
            return Err(Error::InvalidParameter(format!("chi[{s},{q}]: q must be 0 or 1")));
        }
        Ok(EndoNormalForm {
            monoid_part: MonoidPart::AnnUnit,
            power: checked_add(checked_mul(2, s)?, q)?,
        })
    }

    /// `(s, q)` of the idempotent this map is constant at, if annihilating.
    pub fn chi_index(&self) -> Option<(u64, u64)> {
        match self.monoid_part {
            MonoidPart::AnnUnit => Some((self.power / 2, self.power % 2)),
            _ => None,
        }
    }

    pub fn apply(&self, x: Triple) -> Result<Triple> {
        apply_pi_power(self.monoid_part.apply(x)?, self.power)
    }

    /// Image of the unit, `(s,s,[p))` with `power = 2s + p`.
    pub fn unit_image(&self) -> Triple {
        let s = self.power / 2;
        Triple::new(s, s, self.power % 2)
    }

    pub fn predicates(&self) -> EndoPredicates {
        EndoPredicates {
            injective: matches!(
                self.monoid_part,
                MonoidPart::Alpha { .. } | MonoidPart::Beta { .. }
            ),
            annihilating: self.monoid_part == MonoidPart::AnnUnit,
            monoidal: self.power == 0,
        }
    }

    /// `self` followed by `next`, from the closed composition rules.
    pub fn then(&self, next: &EndoNormalForm) -> Result<EndoNormalForm> {
        let (moved, extra) = next.monoid_part.after_pi_power(self.power)?;
        Ok(EndoNormalForm {
            monoid_part: self.monoid_part.then(moved)?,
            power: checked_add(extra, next.power)?,
        })
    }
}

/// `f` then `g`.
pub fn compose(f: &EndoNormalForm, g: &EndoNormalForm) -> Result<EndoNormalForm> {
    f.then(g)
}

/// `f` then `g`, computed pointwise and classified back into normal form.
pub fn compose_pointwise(f: &EndoNormalForm, g: &EndoNormalForm) -> Result<EndoNormalForm> {
    factor(&FnMap(|x| g.apply(f.apply(x).ok()?).ok()))
}

impl ElementMap for EndoNormalForm {
    fn image(&self, x: Triple) -> Option<Triple> {
        self.apply(x).ok()
    }
}

impl fmt::Display for EndoNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((s, q)) = self.chi_index() {
            return write!(f, "chi[{s},{q}]");
        }
        match (self.monoid_part == MonoidPart::IDENTITY, self.power) {
            (true, 0) => f.write_str("id"),
            (true, n) => write!(f, "w^{n}"),
            (false, 0) => write!(f, "{}", self.monoid_part),
            (false, n) => write!(f, "{};w^{n}", self.monoid_part),
        }
    }
}

/// Recovers the normal form of an endomorphism from its values.
///
/// The unit goes to an idempotent `(s,s,[p))`, which fixes `n = 2s + p`;
/// undoing `ϖⁿ` on the probe images then exposes the monoidal part. The
/// result is confirmed on the map's own window, or on `CONFIRM_BOUND` when
/// the map is not sampled.
pub fn factor<M: ElementMap + ?Sized>(map: &M) -> Result<EndoNormalForm> {
    let at = |x: Triple| {
        map.image(x)
            .ok_or_else(|| Error::Unclassified(format!("no image for {x}")))
    };
    let unit = at(Triple::UNIT)?;
    if unit.i != unit.j || unit.f > 1 {
        return Err(Error::NotEndomorphism(format!(
            "the unit maps to {unit}, which is not an idempotent"
        )));
    }
    let n = checked_add(checked_mul(2, unit.i)?, unit.f)?;
    let residual = |x: Triple| -> Result<Triple> {
        let y = at(x)?;
        pi_power_preimage(y, n).ok_or_else(|| {
            Error::NotEndomorphism(format!(
                "{x} maps to {y}, outside the image of w^{n} that contains the unit's image"
            ))
        })
    };
    let diag = residual(Triple::new(1, 1, 0))?;
    let upper = residual(Triple::new(0, 0, 1))?;
    let unmatched = || Error::Unclassified(format!("(1,1,[0)) ↦ {diag}, (0,0,[1)) ↦ {upper} after removing w^{n}"));
    if diag.i != diag.j || diag.f != 0 || upper.i != upper.j {
        return Err(unmatched());
    }
    let k = diag.i;
    let offset = upper.i;
    let part = if k == 0 {
        MonoidPart::AnnUnit
    } else if upper.f == 1 {
        MonoidPart::alpha(k, offset).map_err(|_| unmatched())?
    } else if offset == 0 {
        MonoidPart::Gamma { k }
    } else if offset == k {
        MonoidPart::Delta { k }
    } else {
        MonoidPart::beta(k, offset).map_err(|_| unmatched())?
    };
    let candidate = EndoNormalForm {
        monoid_part: part,
        power: n,
    };
    let bound = map.bound().unwrap_or(CONFIRM_BOUND);
    for x in PROBES.into_iter().chain(window(bound)) {
        if let Some(y) = map.image(x) {
            let expected = candidate.apply(x)?;
            if expected != y {
                return Err(Error::Unclassified(format!(
                    "{candidate} sends {x} to {expected}, the map gives {y}"
                )));
            }
        }
    }
    Ok(candidate)
}

/// Classifies a sampled endomorphism.
///
/// The homomorphism law is checked on every pair whose product stays in the
/// window before recovering parameters.
pub fn classify_window(m: &WindowMap) -> Result<EndoNormalForm> {
    if m.window_bound() < MIN_CLASSIFY_BOUND {
        return Err(Error::WindowTooSmall(m.window_bound(), MIN_CLASSIFY_BOUND));
    }
    let report = check_homomorphism_with(Triple::mul, m, m.window_bound());
    if let Some(first) = report.violations.first() {
        return Err(Error::NotEndomorphism(first.clone()));
    }
    factor(m)
}

/// The local submonoid `(s,s,[p)) S (s,s,[p))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CornerDescriptor {
    pub s: u64,
    pub p: u64,
}

impl CornerDescriptor {
    pub fn idempotent(&self) -> Triple {
        Triple::new(self.s, self.s, self.p)
    }

    /// Exponent `m` with the corner equal to the image of `ϖ^m`.
    pub fn pi_exponent(&self) -> u64 {
        2 * self.s + self.p
    }
}

/// `e x e = x` for the corner's idempotent `e`.
pub fn corner_membership(c: CornerDescriptor, x: Triple) -> bool {
    let e = c.idempotent();
    e.mul(x).and_then(|ex| ex.mul(e)).is_ok_and(|exe| exe == x)
}

/// Parses `alpha[k,p]`, `beta[k,p]`, `gamma[k]`, `delta[k]`, `chi[s,q]`,
/// `w^n` (or `w`) and `id`, chained left to right with `;`.
pub fn parse_endo_expression(text: &str) -> Result<EndoNormalForm> {
    let mut parser = ExprParser { text, pos: 0 };
    let mut acc = parser.term()?;
    loop {
        parser.skip_ws();
        if parser.eat(';') {
            let next = parser.term()?;
            acc = compose(&acc, &next)?;
        } else if parser.pos == text.len() {
            return Ok(acc);
        } else {
            return Err(parser.error("expected ';' or end of input"));
        }
    }
}

impl std::str::FromStr for EndoNormalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_endo_expression(s)
    }
}

struct ExprParser<'a> {
    text: &'a str,
    pos: usize,
}

impl ExprParser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Expression {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        let start = self.pos;
        self.pos += len;
        &self.text[start..self.pos]
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a natural number"));
        }
        let digits = &self.rest()[..len];
        let value = digits.parse().map_err(|_| Error::Overflow)?;
        self.pos += len;
        Ok(value)
    }

    fn args<const N: usize>(&mut self) -> Result<[u64; N]> {
        self.expect('[')?;
        let mut out = [0; N];
        for (idx, slot) in out.iter_mut().enumerate() {
            if idx > 0 {
                self.expect(',')?;
            }
            *slot = self.number()?;
        }
        self.expect(']')?;
        Ok(out)
    }

    fn term(&mut self) -> Result<EndoNormalForm> {
        let start = self.pos;
        match self.ident() {
            "alpha" => {
                let [k, p] = self.args()?;
                EndoNormalForm::monoidal(MonoidPart::alpha(k, p)?)
            }
            "beta" => {
                let [k, p] = self.args()?;
                EndoNormalForm::monoidal(MonoidPart::beta(k, p)?)
            }
            "gamma" => {
                let [k] = self.args()?;
                EndoNormalForm::monoidal(MonoidPart::gamma(k)?)
            }
            "delta" => {
                let [k] = self.args()?;
                EndoNormalForm::monoidal(MonoidPart::delta(k)?)
            }
            "chi" => {
                let [s, q] = self.args()?;
                EndoNormalForm::chi(s, q)
            }
            "w" => {
                let n = if self.eat('^') { self.number()? } else { 1 };
                Ok(EndoNormalForm::pi_power(n))
            }
            "id" => Ok(EndoNormalForm::IDENTITY),
            "" => Err(self.error("expected a term")),
            other => {
                let msg = format!("unknown term {other:?}");
                self.pos = start;
                Err(self.error(&msg))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: u64, j: u64, f: u64) -> Triple {
        Triple::new(i, j, f)
    }

    fn nf(part: MonoidPart, n: u64) -> EndoNormalForm {
        EndoNormalForm::new(part, n).unwrap()
    }

    #[test]
    fn pi_examples() {
        assert_eq!(apply_pi(t(5, 0, 0)).unwrap(), t(5, 0, 1));
        assert_eq!(apply_pi(t(3, 2, 1)).unwrap(), t(4, 3, 0));
        assert!(matches!(apply_pi(t(0, 0, 2)), Err(Error::NotInF2(_))));
    }

    #[test]
    fn pi_power_examples() {
        assert_eq!(apply_pi_power(t(0, 0, 1), 3).unwrap(), t(2, 2, 0));
        assert_eq!(apply_pi_power(t(1, 2, 0), 4).unwrap(), t(3, 4, 0));
        assert_eq!(apply_pi_power(t(7, 1, 1), 0).unwrap(), t(7, 1, 1));
    }

    #[test]
    fn preimage_inverts_power() {
        for x in window(4) {
            for n in 0..8 {
                let y = apply_pi_power(x, n).unwrap();
                assert_eq!(pi_power_preimage(y, n), Some(x));
            }
        }
        assert_eq!(pi_power_preimage(t(0, 0, 1), 2), None);
        assert_eq!(pi_power_preimage(t(0, 3, 0), 1), None);
    }

    #[test]
    fn apply_examples() {
        let x = t(1, 2, 1);
        assert_eq!(nf(MonoidPart::Alpha { k: 2, p: 1 }, 0).apply(x).unwrap(), t(3, 5, 1));
        assert_eq!(nf(MonoidPart::Delta { k: 2 }, 0).apply(x).unwrap(), t(4, 6, 0));
        assert_eq!(nf(MonoidPart::Gamma { k: 2 }, 0).apply(x).unwrap(), t(2, 4, 0));
        for y in window(3) {
            assert_eq!(nf(MonoidPart::AnnUnit, 5).apply(y).unwrap(), t(2, 2, 1));
        }
    }

    #[test]
    fn constructor_ranges() {
        assert!(MonoidPart::alpha(0, 0).is_err());
        assert!(MonoidPart::alpha(2, 2).is_err());
        assert!(MonoidPart::beta(2, 0).is_err());
        assert!(MonoidPart::beta(1, 0).is_err());
        assert!(MonoidPart::beta(3, 2).is_ok());
        assert!(MonoidPart::gamma(0).is_err());
        assert!(MonoidPart::delta(0).is_err());
        assert!(EndoNormalForm::chi(1, 2).is_err());
    }

    #[test]
    fn compose_examples() {
        let w = EndoNormalForm::pi_power;
        assert_eq!(compose(&w(2), &w(3)).unwrap(), w(5));
        let g2 = nf(MonoidPart::Gamma { k: 2 }, 0);
        let g3 = nf(MonoidPart::Gamma { k: 3 }, 0);
        assert_eq!(compose(&g2, &g3).unwrap(), nf(MonoidPart::Gamma { k: 6 }, 0));
        let ann4 = nf(MonoidPart::AnnUnit, 4);
        assert_eq!(compose(&ann4, &w(1)).unwrap(), nf(MonoidPart::AnnUnit, 5));
        assert_eq!(compose(&ann4, &g2).unwrap(), nf(MonoidPart::AnnUnit, 8));
        let chi = EndoNormalForm::chi(2, 1).unwrap();
        let b = nf(MonoidPart::Beta { k: 3, p: 2 }, 4);
        assert_eq!(compose(&b, &chi).unwrap(), chi);
    }

    #[test]
    fn compose_matches_pointwise_on_small_sweep() {
        let parts = [
            MonoidPart::IDENTITY,
            MonoidPart::Alpha { k: 3, p: 1 },
            MonoidPart::Alpha { k: 2, p: 1 },
            MonoidPart::Beta { k: 3, p: 1 },
            MonoidPart::Gamma { k: 2 },
            MonoidPart::Delta { k: 1 },
            MonoidPart::AnnUnit,
        ];
        for &a in &parts {
            for &b in &parts {
                for n in 0..4 {
                    for m in 0..3 {
                        let f = nf(a, n);
                        let g = nf(b, m);
                        assert_eq!(compose(&f, &g).unwrap(), compose_pointwise(&f, &g).unwrap(), "{f} then {g}");
                    }
                }
            }
        }
    }

    #[test]
    fn factor_examples() {
        let e = nf(MonoidPart::Alpha { k: 2, p: 1 }, 3);
        assert_eq!(e.unit_image(), t(1, 1, 1));
        assert_eq!(factor(&e).unwrap(), e);
        assert_eq!(factor(&FnMap(Some)).unwrap(), EndoNormalForm::IDENTITY);
        let constant = FnMap(|_| Some(t(2, 2, 1)));
        assert_eq!(factor(&constant).unwrap(), nf(MonoidPart::AnnUnit, 5));
    }

    #[test]
    fn factor_rejects_non_idempotent_unit_image() {
        let shifty = FnMap(|x: Triple| Some(t(x.i + 1, x.j, x.f)));
        assert!(matches!(factor(&shifty), Err(Error::NotEndomorphism(_))));
    }

    #[test]
    fn classify_examples() {
        let alpha = FnMap(|x: Triple| {
            Some(if x.f == 0 {
                t(2 * x.i, 2 * x.j, 0)
            } else {
                t(1 + 2 * x.i, 1 + 2 * x.j, 1)
            })
        });
        let m = WindowMap::tabulate(&alpha, 8).unwrap();
        assert_eq!(classify_window(&m).unwrap(), nf(MonoidPart::Alpha { k: 2, p: 1 }, 0));

        let constant = WindowMap::tabulate(&FnMap(|_| Some(t(3, 3, 1))), 8).unwrap();
        assert_eq!(classify_window(&constant).unwrap(), nf(MonoidPart::AnnUnit, 7));

        let delta = FnMap(|x: Triple| {
            Some(if x.f == 0 {
                t(2 * x.i, 2 * x.j, 0)
            } else {
                t(2 * x.i + 2, 2 * x.j + 2, 0)
            })
        });
        let m = WindowMap::tabulate(&delta, 8).unwrap();
        assert_eq!(classify_window(&m).unwrap(), nf(MonoidPart::Delta { k: 2 }, 0));
    }

    #[test]
    fn classify_rejects_small_or_broken_windows() {
        let tiny = WindowMap::tabulate(&FnMap(Some), 1).unwrap();
        assert_eq!(classify_window(&tiny), Err(Error::WindowTooSmall(1, 2)));
        let broken = WindowMap::tabulate(&FnMap(Some), 4)
            .unwrap()
            .with_entry(t(0, 0, 1), t(0, 0, 0))
            .unwrap();
        assert!(matches!(classify_window(&broken), Err(Error::NotEndomorphism(_))));
    }

    #[test]
    fn predicate_examples() {
        let p = nf(MonoidPart::Beta { k: 3, p: 2 }, 4).predicates();
        assert!(p.injective && !p.annihilating && !p.monoidal);
        let p = nf(MonoidPart::Gamma { k: 1 }, 0).predicates();
        assert!(!p.injective && !p.annihilating && p.monoidal);
        let p = nf(MonoidPart::AnnUnit, 0).predicates();
        assert!(p.annihilating && p.monoidal && !p.injective);
    }

    #[test]
    fn corner_examples() {
        let c01 = CornerDescriptor { s: 0, p: 1 };
        assert!(corner_membership(c01, t(0, 0, 1)));
        assert!(!corner_membership(c01, t(0, 0, 0)));
        let c10 = CornerDescriptor { s: 1, p: 0 };
        assert!(corner_membership(c10, t(1, 1, 1)));
        assert!(!corner_membership(c10, t(0, 0, 1)));
    }

    #[test]
    fn expression_examples() {
        let e = parse_endo_expression("alpha[2,1];w^3").unwrap();
        assert_eq!(e, nf(MonoidPart::Alpha { k: 2, p: 1 }, 3));
        assert_eq!(parse_endo_expression("chi[2,1]").unwrap(), nf(MonoidPart::AnnUnit, 5));
        assert_eq!(
            parse_endo_expression("gamma[2];gamma[3]").unwrap(),
            nf(MonoidPart::Gamma { k: 6 }, 0)
        );
        assert_eq!(parse_endo_expression(" alpha[2, 1] ; w^3 ").unwrap(), e);
        assert_eq!(parse_endo_expression("id").unwrap(), EndoNormalForm::IDENTITY);
        assert_eq!(parse_endo_expression("w;w").unwrap(), EndoNormalForm::pi_power(2));
    }

    #[test]
    fn expression_errors() {
        assert!(matches!(parse_endo_expression("beta[2,0]"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_endo_expression("alpha[2]"), Err(Error::Expression { .. })));
        assert!(matches!(parse_endo_expression("sigma[1]"), Err(Error::Expression { pos: 0, .. })));
        assert!(matches!(parse_endo_expression("id;"), Err(Error::Expression { .. })));
        assert!(matches!(parse_endo_expression("id id"), Err(Error::Expression { .. })));
        assert!(matches!(
            parse_endo_expression("w^99999999999999999999999"),
            Err(Error::Overflow)
        ));
        assert!(matches!(
            parse_endo_expression("gamma[4294967296];gamma[4294967296]"),
            Err(Error::Overflow)
        ));
    }

    #[test]
    fn display_is_canonical() {
        for text in ["id", "w^4", "alpha[2,1];w^3", "beta[3,2]", "chi[2,1]", "delta[5];w^1"] {
            assert_eq!(parse_endo_expression(text).unwrap().to_string(), text);
        }
        assert_eq!(parse_endo_expression("w").unwrap().to_string(), "w^1");
    }
}
