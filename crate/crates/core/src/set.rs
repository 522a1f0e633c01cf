//! Inductive subsets of ω and bounded candidate subsets.
//!
//! Every nonempty inductive subset of ω is a tail `[n) = {n, n+1, ...}`, so
//! a tail is stored as its least element and every set operation reduces to
//! integer arithmetic on that index.

use std::collections::BTreeSet;
use std::fmt;

/// An inductive subset of ω: either a tail `[n)` or the empty set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InductiveSet {
    Tail(u64),
    Empty,
}

impl InductiveSet {
    pub fn is_empty(self) -> bool {
        matches!(self, InductiveSet::Empty)
    }

    pub fn contains(self, x: u64) -> bool {
        match self {
            InductiveSet::Tail(n) => x >= n,
            InductiveSet::Empty => false,
        }
    }
}

impl fmt::Display for InductiveSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InductiveSet::Tail(n) => write!(f, "[{n})"),
            InductiveSet::Empty => f.write_str("∅"),
        }
    }
}

/// Computes `(m + f1) ∩ f2` as a subset of ω.
///
/// The shifted tail may start below zero; the intersection with `f2 ⊆ ω`
/// clips it, so the result is `[max(a + m, b))`.
pub fn shift_intersect(m: i64, f1: InductiveSet, f2: InductiveSet) -> InductiveSet {
    match (f1, f2) {
        (InductiveSet::Tail(a), InductiveSet::Tail(b)) => {
            let start = (a as i128 + m as i128).max(b as i128);
            // start >= b >= 0; saturates only past u64::MAX
            InductiveSet::Tail(u64::try_from(start).unwrap_or(u64::MAX))
        }
        _ => InductiveSet::Empty,
    }
}

/// A subset of ω given as a finite part plus an optional attached tail.
///
/// Canonical split: when `tail = Some(t)`, no member of `finite_part` is `>= t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BoundedSubset {
    finite_part: BTreeSet<u64>,
    tail: Option<u64>,
}

impl BoundedSubset {
    /// Builds a subset, folding any finite members that fall inside the tail
    /// into it and extending the tail downwards over a contiguous run.
    pub fn new(finite_part: impl IntoIterator<Item = u64>, tail: Option<u64>) -> Self {
        let mut finite_part: BTreeSet<u64> = finite_part.into_iter().collect();
        let mut tail = tail;
        if let Some(mut t) = tail {
            finite_part.retain(|&x| x < t);
            while t > 0 && finite_part.remove(&(t - 1)) {
                t -= 1;
            }
            tail = Some(t);
        }
        BoundedSubset { finite_part, tail }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn tail_from(n: u64) -> Self {
        Self::new([], Some(n))
    }

    pub fn finite_part(&self) -> &BTreeSet<u64> {
        &self.finite_part
    }

    pub fn tail(&self) -> Option<u64> {
        self.tail
    }

    pub fn is_empty(&self) -> bool {
        self.finite_part.is_empty() && self.tail.is_none()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.tail.is_some_and(|t| x >= t) || self.finite_part.contains(&x)
    }

    /// `(-1 + F) ∩ F`, i.e. the members `x` of `F` with `x + 1 ∈ F`.
    ///
    /// Computed as a genuine shift of the whole set followed by an
    /// intersection; the -1 produced by shifting 0 is dropped by the
    /// intersection with `F ⊆ ω`.
    pub fn shift_down_intersect(&self) -> BoundedSubset {
        let shifted_finite = self
            .finite_part
            .iter()
            .filter(|&&x| x > 0)
            .map(|&x| x - 1);
        let shifted = BoundedSubset::new(
            shifted_finite,
            self.tail.map(|t| t.saturating_sub(1)),
        );
        self.intersect(&shifted)
    }

    pub fn intersect(&self, other: &BoundedSubset) -> BoundedSubset {
        let tail = match (self.tail, other.tail) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
        // a finite member of either side may still meet the other's tail
        let finite = self
            .finite_part
            .iter()
            .chain(other.finite_part.iter())
            .copied()
            .filter(|&x| self.contains(x) && other.contains(x));
        let finite_from_tails: Vec<u64> = match (self.tail, other.tail, tail) {
            (Some(a), Some(b), Some(t)) => (a.min(b)..t)
                .filter(|&x| self.contains(x) && other.contains(x))
                .collect(),
            _ => Vec::new(),
        };
        BoundedSubset::new(finite.chain(finite_from_tails), tail)
    }

    /// Successor closure checked member by member: `i ∈ F ⇒ i + 1 ∈ F`.
    pub fn is_inductive(&self) -> bool {
        self.finite_part.iter().all(|&x| self.contains(x + 1))
    }

    /// The inductive set this subset equals, if it is one.
    pub fn as_inductive(&self) -> Option<InductiveSet> {
        match (self.finite_part.is_empty(), self.tail) {
            (true, Some(t)) => Some(InductiveSet::Tail(t)),
            (true, None) => Some(InductiveSet::Empty),
            _ => None,
        }
    }
}

impl fmt::Display for BoundedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let mut parts: Vec<String> = Vec::new();
        if !self.finite_part.is_empty() {
            let items: Vec<String> = self.finite_part.iter().map(u64::to_string).collect();
            parts.push(format!("{{{}}}", items.join(",")));
        }
        if let Some(t) = self.tail {
            parts.push(format!("[{t})"));
        }
        f.write_str(&parts.join(" ∪ "))
    }
}
