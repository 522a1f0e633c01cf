//! ω-closed families of inductive subsets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::set::InductiveSet;

/// A finite ω-closed family of inductive subsets of ω, given by tail indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    tails: BTreeSet<u64>,
    includes_empty: bool,
}

/// A pair `(a, b)` and shift `n` whose intersection `[a) ∩ (−n + [b))`
/// leaves the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureWitness {
    pub a: u64,
    pub b: u64,
    pub n: u64,
    pub produced: u64,
}

impl fmt::Display for ClosureWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{})∩(−{}+[{})) = [{})",
            self.a, self.n, self.b, self.produced
        )
    }
}

/// Searches for a closure violation among the tails.
///
/// For a pair `(a, b)` the produced indices are `max(a, b − n)`; shifts
/// beyond `max(tails)` add nothing new, so the search is finite.
pub fn closure_witness(tails: &BTreeSet<u64>) -> Result<Option<ClosureWitness>> {
    let max = *tails.iter().next_back().ok_or(Error::EmptyFamily)?;
    for &a in tails {
        for &b in tails {
            for n in 0..=max {
                let produced = a.max(b.saturating_sub(n));
                if !tails.contains(&produced) {
                    return Ok(Some(ClosureWitness { a, b, n, produced }));
                }
            }
        }
    }
    Ok(None)
}

/// True iff the tails form an ω-closed family.
pub fn validate_family(tails: &BTreeSet<u64>) -> Result<bool> {
    Ok(closure_witness(tails)?.is_none())
}

impl Family {
    pub fn new(tails: impl IntoIterator<Item = u64>, includes_empty: bool) -> Result<Self> {
        let tails: BTreeSet<u64> = tails.into_iter().collect();
        if let Some(w) = closure_witness(&tails)? {
            return Err(Error::NotClosed {
                a: w.a,
                b: w.b,
                n: w.n,
                got: w.produced,
            });
        }
        Ok(Family {
            tails,
            includes_empty,
        })
    }

    /// The two-element family `{[0), [1)}`.
    pub fn f2() -> Self {
        Family {
            tails: BTreeSet::from([0, 1]),
            includes_empty: false,
        }
    }

    pub fn tails(&self) -> &BTreeSet<u64> {
        &self.tails
    }

    pub fn includes_empty(&self) -> bool {
        self.includes_empty
    }

    pub fn contains(&self, set: InductiveSet) -> bool {
        match set {
            InductiveSet::Tail(n) => self.tails.contains(&n),
            InductiveSet::Empty => self.includes_empty,
        }
    }

    pub fn with_empty(mut self) -> Self {
        self.includes_empty = true;
        self
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.tails.iter().map(u64::to_string).collect();
        f.write_str(&items.join(","))
    }
}

/// Parses comma-separated tail indices such as `"0,1"` without checking closure.
pub fn parse_tails(text: &str) -> Result<BTreeSet<u64>> {
    let bad = || Error::MalformedFamily(text.to_string());
    let tails = text
        .split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| bad()))
        .collect::<Result<BTreeSet<u64>>>()?;
    if tails.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(tails)
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::new(parse_tails(s)?, false)
    }
}
