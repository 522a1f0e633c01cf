//! Finite samples of maps on B_ω^𝓕².

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::element::Triple;
use crate::error::{Error, Result};

/// Anything that can be evaluated pointwise on triples.
///
/// `image` returns `None` outside the map's domain (a sampled window) or
/// when the image is not representable.
pub trait ElementMap {
    fn image(&self, x: Triple) -> Option<Triple>;

    /// Largest coordinate of a sampled domain, if the map is only sampled.
    fn bound(&self) -> Option<u64> {
        None
    }
}

/// Adapts a closure into an [`ElementMap`].
pub struct FnMap<F>(pub F);

impl<F: Fn(Triple) -> Option<Triple>> ElementMap for FnMap<F> {
    fn image(&self, x: Triple) -> Option<Triple> {
        (self.0)(x)
    }
}

/// All triples `(i, j, [p))` with `i, j <= bound` and `p` drawn from `tails`,
/// in canonical `(i, j, p)` order.
pub fn window_over(bound: u64, tails: &[u64]) -> Vec<Triple> {
    let mut out = Vec::with_capacity(((bound + 1) * (bound + 1)) as usize * tails.len());
    for i in 0..=bound {
        for j in 0..=bound {
            for &f in tails {
                out.push(Triple::new(i, j, f));
            }
        }
    }
    out
}

/// The window `i, j <= bound` of B_ω^𝓕².
pub fn window(bound: u64) -> Vec<Triple> {
    window_over(bound, &[0, 1])
}

/// A total function on the window `i, j <= N`, `p ∈ {0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowMap {
    bound: u64,
    entries: BTreeMap<Triple, Triple>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    from: [u64; 3],
    to: [u64; 3],
}

impl WindowMap {
    /// Samples `map` on the window. Fails if some image is undefined.
    pub fn tabulate<M: ElementMap + ?Sized>(map: &M, bound: u64) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for x in window(bound) {
            let y = map
                .image(x)
                .ok_or_else(|| Error::WindowMap(format!("no image for {x}")))?;
            entries.insert(x, y);
        }
        Self::from_entries(entries)
    }

    /// Builds a map from explicit entries; the window bound is inferred and
    /// the entries must cover it exactly.
    pub fn from_entries(entries: BTreeMap<Triple, Triple>) -> Result<Self> {
        let bound = entries
            .keys()
            .map(|x| x.i.max(x.j))
            .max()
            .ok_or_else(|| Error::WindowMap("no entries".into()))?;
        for (x, y) in &entries {
            if x.f > 1 {
                return Err(Error::NotInF2(x.to_string()));
            }
            if y.f > 1 {
                return Err(Error::NotInF2(y.to_string()));
            }
        }
        if let Some(missing) = window(bound).into_iter().find(|x| !entries.contains_key(x)) {
            return Err(Error::WindowMap(format!(
                "not total on window {bound}: missing {missing}"
            )));
        }
        Ok(WindowMap { bound, entries })
    }

    pub fn window_bound(&self) -> u64 {
        self.bound
    }

    pub fn entries(&self) -> &BTreeMap<Triple, Triple> {
        &self.entries
    }

    pub fn get(&self, x: Triple) -> Option<Triple> {
        self.entries.get(&x).copied()
    }

    /// Replaces a single image; used to build deliberately broken maps.
    pub fn with_entry(mut self, from: Triple, to: Triple) -> Result<Self> {
        if !self.entries.contains_key(&from) {
            return Err(Error::WindowMap(format!("{from} is outside the window")));
        }
        if to.f > 1 {
            return Err(Error::NotInF2(to.to_string()));
        }
        self.entries.insert(from, to);
        Ok(self)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.entries.values().all(|y| seen.insert(*y))
    }

    pub fn is_constant(&self) -> bool {
        let mut values = self.entries.values();
        let first = values.next();
        values.all(|y| Some(y) == first)
    }

    /// JSON array of `{"from":[i,j,p],"to":[i,j,p]}` objects.
    pub fn to_json(&self) -> String {
        let entries: Vec<Entry> = self
            .entries
            .iter()
            .map(|(x, y)| Entry {
                from: [x.i, x.j, x.f],
                to: [y.i, y.j, y.f],
            })
            .collect();
        serde_json::to_string(&entries).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<Entry> =
            serde_json::from_str(text).map_err(|e| Error::WindowMap(e.to_string()))?;
        let mut map = BTreeMap::new();
        for e in entries {
            let from = Triple::new(e.from[0], e.from[1], e.from[2]);
            let to = Triple::new(e.to[0], e.to[1], e.to[2]);
            if let Some(prev) = map.insert(from, to) {
                if prev != to {
                    return Err(Error::WindowMap(format!("conflicting images for {from}")));
                }
            }
        }
        Self::from_entries(map)
    }
}

impl ElementMap for WindowMap {
    fn image(&self, x: Triple) -> Option<Triple> {
        self.get(x)
    }

    fn bound(&self) -> Option<u64> {
        Some(self.bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity() -> WindowMap {
        WindowMap::tabulate(&FnMap(Some), 3).unwrap()
    }

    #[test]
    fn window_sizes() {
        assert_eq!(window(0).len(), 2);
        assert_eq!(window(6).len(), 98);
        assert_eq!(window(8).len(), 162);
    }

    #[test]
    fn json_shape() {
        let m = WindowMap::tabulate(&FnMap(Some), 0).unwrap();
        assert_eq!(
            m.to_json(),
            r#"[{"from":[0,0,0],"to":[0,0,0]},{"from":[0,0,1],"to":[0,0,1]}]"#
        );
        assert_eq!(WindowMap::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn rejects_partial_windows() {
        let text = r#"[{"from":[0,0,0],"to":[0,0,0]},{"from":[1,1,0],"to":[0,0,0]}]"#;
        assert!(matches!(WindowMap::from_json(text), Err(Error::WindowMap(_))));
    }

    #[test]
    fn rejects_foreign_targets() {
        let text = r#"[{"from":[0,0,0],"to":[0,0,2]},{"from":[0,0,1],"to":[0,0,0]}]"#;
        assert!(matches!(WindowMap::from_json(text), Err(Error::NotInF2(_))));
    }

    #[test]
    fn injective_and_constant() {
        let id = identity();
        assert!(id.is_injective());
        assert!(!id.is_constant());
        let c = WindowMap::tabulate(&FnMap(|_| Some(Triple::new(1, 1, 0))), 2).unwrap();
        assert!(c.is_constant());
        assert!(!c.is_injective());
    }
}
