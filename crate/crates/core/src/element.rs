//! Elements of B_ω^𝓕 and their inverse-semigroup structure.
//!
//! A nonzero element is a triple `(i, j, [f))`. Products follow the
//! three-case rule on the bicyclic coordinates, with the set component
//! shifted by the coordinate mismatch and intersected.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::set::{shift_intersect, InductiveSet};

/// A triple `(i, j, [f))` with `[f)` a nonempty tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub i: u64,
    pub j: u64,
    pub f: u64,
}

impl Triple {
    pub const UNIT: Triple = Triple { i: 0, j: 0, f: 0 };

    pub const fn new(i: u64, j: u64, f: u64) -> Self {
        Triple { i, j, f }
    }

    pub fn set(self) -> InductiveSet {
        InductiveSet::Tail(self.f)
    }

    /// The semigroup product. Never leaves the tails of an ω-closed family.
    #[allow(clippy::should_implement_trait)] // fallible, so not `ops::Mul`
    pub fn mul(self, rhs: Triple) -> Result<Triple> {
        let (i, j, set) = product_parts(self, rhs)?;
        match set {
            InductiveSet::Tail(f) => Ok(Triple { i, j, f }),
            // tails are nonempty and so are their shifted intersections
            InductiveSet::Empty => unreachable!("intersection of tails is a tail"),
        }
    }

    pub fn inverse(self) -> Triple {
        Triple {
            i: self.j,
            j: self.i,
            f: self.f,
        }
    }

    pub fn is_idempotent(self) -> bool {
        matches!(self.mul(self), Ok(sq) if sq == self)
    }

    /// `x x⁻¹`, the idempotent generating the principal right ideal.
    pub fn left_idempotent(self) -> Triple {
        Triple::new(self.i, self.i, self.f)
    }

    /// `x⁻¹ x`.
    pub fn right_idempotent(self) -> Triple {
        Triple::new(self.j, self.j, self.f)
    }

    /// Natural partial order, decided by the closed form `x = x x⁻¹ y`.
    pub fn natural_leq(self, other: Triple) -> bool {
        self.mul(self.inverse())
            .and_then(|e| e.mul(other))
            .is_ok_and(|z| z == self)
    }

    pub fn green_related(self, other: Triple, relation: GreenRelation) -> bool {
        let r = || self.mul(self.inverse()).ok() == other.mul(other.inverse()).ok();
        let l = || self.inverse().mul(self).ok() == other.inverse().mul(other).ok();
        match relation {
            GreenRelation::R => r(),
            GreenRelation::L => l(),
            GreenRelation::H => r() && l(),
        }
    }
}

fn product_parts(x: Triple, y: Triple) -> Result<(u64, u64, InductiveSet)> {
    let diff = |a: u64, b: u64| -> Result<i64> {
        i64::try_from(a as i128 - b as i128).map_err(|_| Error::Overflow)
    };
    Ok(match x.j.cmp(&y.i) {
        Ordering::Less => (
            x.i.checked_add(y.i - x.j).ok_or(Error::Overflow)?,
            y.j,
            shift_intersect(diff(x.j, y.i)?, x.set(), y.set()),
        ),
        Ordering::Equal => (x.i, y.j, shift_intersect(0, x.set(), y.set())),
        Ordering::Greater => (
            x.i,
            (x.j - y.i).checked_add(y.j).ok_or(Error::Overflow)?,
            shift_intersect(diff(y.i, x.j)?, y.set(), x.set()),
        ),
    })
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},[{}))", self.i, self.j, self.f)
    }
}

impl FromStr for Triple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<Element>()? {
            Element::Triple(t) => Ok(t),
            Element::Zero => Err(Error::MalformedElement(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GreenRelation {
    R,
    L,
    H,
}

impl FromStr for GreenRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" => Ok(GreenRelation::R),
            "L" | "l" => Ok(GreenRelation::L),
            "H" | "h" => Ok(GreenRelation::H),
            _ => Err(Error::InvalidParameter(format!(
                "unknown Green relation {s:?} (expected R, L or H)"
            ))),
        }
    }
}

/// An element of B_ω^𝓕: a triple, or the zero of the quotient by the
/// ideal of empty-set triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Triple(Triple),
    Zero,
}

impl Element {
    pub const UNIT: Element = Element::Triple(Triple::UNIT);

    pub const fn triple(i: u64, j: u64, f: u64) -> Self {
        Element::Triple(Triple::new(i, j, f))
    }

    pub fn as_triple(self) -> Option<Triple> {
        match self {
            Element::Triple(t) => Some(t),
            Element::Zero => None,
        }
    }

    /// Product without family checks. Zero absorbs; an empty set component
    /// collapses to Zero.
    #[allow(clippy::should_implement_trait)] // fallible, so not `ops::Mul`
    pub fn mul(self, rhs: Element) -> Result<Element> {
        match (self, rhs) {
            (Element::Triple(x), Element::Triple(y)) => {
                let (i, j, set) = product_parts(x, y)?;
                Ok(match set {
                    InductiveSet::Tail(f) => Element::triple(i, j, f),
                    InductiveSet::Empty => Element::Zero,
                })
            }
            _ => Ok(Element::Zero),
        }
    }

    /// Zero is its own inverse.
    pub fn inverse(self) -> Element {
        match self {
            Element::Triple(t) => Element::Triple(t.inverse()),
            Element::Zero => Element::Zero,
        }
    }

    pub fn is_idempotent(self) -> bool {
        matches!(self.mul(self), Ok(sq) if sq == self)
    }

    pub fn natural_leq(self, other: Element) -> bool {
        self.mul(self.inverse())
            .and_then(|e| e.mul(other))
            .is_ok_and(|z| z == self)
    }

    pub fn green_related(self, other: Element, relation: GreenRelation) -> bool {
        match (self, other) {
            (Element::Triple(x), Element::Triple(y)) => x.green_related(y, relation),
            (Element::Zero, Element::Zero) => true,
            _ => false,
        }
    }
}

impl From<Triple> for Element {
    fn from(t: Triple) -> Self {
        Element::Triple(t)
    }
}

impl Family {
    pub fn check(&self, x: Element) -> Result<()> {
        match x {
            Element::Triple(t) if self.contains(t.set()) => Ok(()),
            Element::Triple(t) => Err(Error::NotInFamily(t.f)),
            Element::Zero if self.includes_empty() => Ok(()),
            Element::Zero => Err(Error::NoZero),
        }
    }

    /// The product in B_ω^𝓕 for this family.
    pub fn multiply(&self, x: Element, y: Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        x.mul(y)
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let x: Element = text.parse()?;
        self.check(x)?;
        Ok(x)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Triple(t) => t.fmt(f),
            Element::Zero => f.write_str("0"),
        }
    }
}

impl FromStr for Element {
    type Err = Error;

    /// Grammar: `(i,j,[p))` with decimal naturals, or `0` for Zero.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedElement(s.to_string());
        let text = s.trim();
        if text == "0" {
            return Ok(Element::Zero);
        }
        let body = text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix("))"))
            .ok_or_else(bad)?;
        let mut parts = body.splitn(3, ',');
        let mut natural = |prefix: &str| -> Result<u64> {
            let part = parts.next().ok_or_else(bad)?;
            let digits = part.strip_prefix(prefix).ok_or_else(bad)?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            digits.parse().map_err(|_| bad())
        };
        let i = natural("")?;
        let j = natural("")?;
        let f = natural("[")?;
        Ok(Element::triple(i, j, f))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ElementRepr {
    Triple { i: u64, j: u64, f: u64 },
    Zero { zero: bool },
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match *self {
            Element::Triple(Triple { i, j, f }) => ElementRepr::Triple { i, j, f },
            Element::Zero => ElementRepr::Zero { zero: true },
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match ElementRepr::deserialize(deserializer)? {
            ElementRepr::Triple { i, j, f } => Ok(Element::triple(i, j, f)),
            ElementRepr::Zero { zero: true } => Ok(Element::Zero),
            ElementRepr::Zero { zero: false } => {
                Err(serde::de::Error::custom("\"zero\" must be true"))
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

    #[test]
    fn multiply_cases() {
        let f2 = Family::f2();
        let m = |x: Triple, y: Triple| f2.multiply(x.into(), y.into()).unwrap();
        assert_eq!(m(t(2, 1, 0), t(3, 4, 1)), t(4, 4, 1).into());
        assert_eq!(m(t(1, 3, 1), t(2, 5, 0)), t(1, 6, 1).into());
        assert_eq!(m(t(2, 2, 0), t(2, 2, 1)), t(2, 2, 1).into());
        assert_eq!(m(Triple::UNIT, t(5, 3, 1)), t(5, 3, 1).into());
    }

    #[test]
    fn multiply_rejects_foreign_tail() {
        let f2 = Family::f2();
        assert_eq!(
            f2.multiply(Element::triple(1, 2, 3), Element::UNIT),
            Err(Error::NotInFamily(3))
        );
        assert_eq!(f2.multiply(Element::Zero, Element::UNIT), Err(Error::NoZero));
    }

    #[test]
    fn zero_absorbs() {
        let fam = Family::f2().with_empty();
        let x = Element::triple(3, 1, 1);
        assert_eq!(fam.multiply(Element::Zero, x), Ok(Element::Zero));
        assert_eq!(fam.multiply(x, Element::Zero), Ok(Element::Zero));
        assert!(Element::Zero.is_idempotent());
        assert_eq!(Element::Zero.inverse(), Element::Zero);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(t(2, 5, 1).inverse(), t(5, 2, 1));
        assert_eq!(t(3, 3, 0).inverse(), t(3, 3, 0));
        assert_eq!(t(0, 4, 0).inverse(), t(4, 0, 0));
        let x = t(2, 5, 1);
        let y = x.inverse();
        assert_eq!(x.mul(y).unwrap().mul(x).unwrap(), x);
        assert_eq!(y.mul(x).unwrap().mul(y).unwrap(), y);
    }

    #[test]
    fn idempotent_examples() {
        assert!(t(3, 3, 1).is_idempotent());
        assert!(!t(2, 3, 0).is_idempotent());
    }

    #[test]
    fn order_examples() {
        assert!(t(1, 1, 0).natural_leq(Triple::UNIT));
        assert!(t(0, 0, 1).natural_leq(Triple::UNIT));
        assert!(!Triple::UNIT.natural_leq(t(0, 0, 1)));
        assert!(t(4, 2, 1).natural_leq(t(4, 2, 1)));
    }

    #[test]
    fn green_examples() {
        use GreenRelation::*;
        assert!(t(2, 3, 0).green_related(t(2, 5, 0), R));
        assert!(!t(2, 3, 0).green_related(t(2, 3, 1), R));
        assert!(!t(2, 3, 0).green_related(t(2, 5, 0), L));
        assert!(t(4, 3, 1).green_related(t(4, 3, 1), H));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!("(2,5,[1))".parse::<Element>(), Ok(Element::triple(2, 5, 1)));
        assert_eq!("(0,0,[0))".parse::<Element>(), Ok(Element::UNIT));
        assert_eq!(" 0 ".parse::<Element>(), Ok(Element::Zero));
        assert_eq!(Element::triple(2, 5, 1).to_string(), "(2,5,[1))");
        for bad in ["", "(1,2,[0)", "(1,2,0))", "(1,-2,[0))", "(a,2,[0))", "(1,2,[0)),", "(1,2,[))"] {
            assert!(bad.parse::<Element>().is_err(), "{bad}");
        }
        assert_eq!(
            Family::f2().parse_element("(1,2,[3))"),
            Err(Error::NotInFamily(3))
        );
    }

    #[test]
    fn json_rendering() {
        let x = Element::triple(4, 4, 1);
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"{"i":4,"j":4,"f":1}"#);
        assert_eq!(serde_json::to_string(&Element::Zero).unwrap(), r#"{"zero":true}"#);
        let back: Element = serde_json::from_str(r#"{"zero":true}"#).unwrap();
        assert_eq!(back, Element::Zero);
        assert!(serde_json::from_str::<Element>(r#"{"zero":false}"#).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = t(u64::MAX, 0, 0);
        assert_eq!(big.mul(t(1, 0, 0)), Err(Error::Overflow));
        assert!(!big.is_idempotent());
    }
}
