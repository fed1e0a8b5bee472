//! Item universes and symmetric 2-structures.
//!
//! A 2-structure is a complete loop-free graph over a fixed universe of
//! items together with an equivalence class for every unordered pair.
//! A plain graph is the two-class case: class 1 for present edges and
//! class 0 for absent ones. Class 0 is reserved throughout for
//! "absent / below threshold", which lets plain, thresholded and
//! bucketed graphs share one representation.

use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Dense index of an item inside a universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ItemId(pub u32);

impl ItemId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for ItemId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Equivalence class of an edge. Class 0 always means "absent".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeClass(pub u32);

impl EdgeClass {
    pub const ABSENT: EdgeClass = EdgeClass(0);
}

impl std::fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An item of the universe: a dense id plus a unique label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Item {
    pub id: ItemId,
    pub label: String,
}

/// A symmetric 2-structure: a total, symmetric class map over all
/// unordered pairs of distinct items.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoStructure {
    items: Vec<Item>,
    /// Upper-triangle class storage, row-major: pair (i, j) with i < j
    /// lives at `i*(2n-i-1)/2 + (j-i-1)`.
    classes: Vec<EdgeClass>,
}

fn default_labels(n: usize) -> Vec<String> {
    // Single letters read better in small examples and diagnostics.
    (0..n)
        .map(|i| {
            if n <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("v{i}")
            }
        })
        .collect()
}

impl TwoStructure {
    fn with_capacity(labels: Vec<String>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::input(format!("duplicate item label {l:?}")));
            }
        }
        let n = labels.len();
        let items = labels
            .into_iter()
            .enumerate()
            .map(|(i, label)| Item { id: ItemId(i as u32), label })
            .collect();
        Ok(TwoStructure { items, classes: vec![EdgeClass::ABSENT; n * n.saturating_sub(1) / 2] })
    }

    /// Builds a plain graph: listed pairs get class 1, all others class 0.
    pub fn from_edge_list(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let pairs: Vec<(u32, u32, EdgeClass)> =
            edges.iter().map(|&(u, v)| (u, v, EdgeClass(1))).collect();
        Self::from_classified_pairs(default_labels(n), &pairs)
    }

    /// Builds a 2-structure from explicitly classified pairs; unlisted
    /// pairs default to class 0. Rejects self-pairs, out-of-range
    /// vertices, and conflicting duplicates.
    pub fn from_classified_pairs(
        labels: Vec<String>,
        pairs: &[(u32, u32, EdgeClass)],
    ) -> Result<Self> {
        let mut s = Self::with_capacity(labels)?;
        let n = s.len();
        let mut assigned = vec![false; s.classes.len()];
        for &(u, v, class) in pairs {
            if u == v {
                return Err(Error::input(format!("self-pair ({u}, {v})")));
            }
            if u as usize >= n || v as usize >= n {
                return Err(Error::input(format!(
                    "pair ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            let idx = s.tri_index(ItemId(u), ItemId(v));
            if assigned[idx] && s.classes[idx] != class {
                return Err(Error::input(format!(
                    "pair ({u}, {v}) assigned conflicting classes {} and {}",
                    s.classes[idx], class
                )));
            }
            assigned[idx] = true;
            s.classes[idx] = class;
        }
        Ok(s)
    }

    /// Builds a 2-structure by evaluating `class` on every unordered pair.
    pub fn from_class_fn(
        labels: Vec<String>,
        mut class: impl FnMut(ItemId, ItemId) -> EdgeClass,
    ) -> Result<Self> {
        let mut s = Self::with_capacity(labels)?;
        let n = s.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let idx = s.tri_index(ItemId(i as u32), ItemId(j as u32));
                s.classes[idx] = class(ItemId(i as u32), ItemId(j as u32));
            }
        }
        Ok(s)
    }

    #[inline]
    fn tri_index(&self, a: ItemId, b: ItemId) -> usize {
        let n = self.len();
        let (i, j) = if a.0 < b.0 { (a.index(), b.index()) } else { (b.index(), a.index()) };
        debug_assert!(i < j && j < n);
        i * (2 * n - i - 1) / 2 + (j - i - 1)
    }

    /// Number of items in the universe.
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn labels(&self) -> Vec<String> {
        self.items.iter().map(|i| i.label.clone()).collect()
    }

    pub fn label(&self, id: ItemId) -> &str {
        &self.items[id.index()].label
    }

    pub fn item_by_label(&self, label: &str) -> Option<ItemId> {
        self.items.iter().find(|i| i.label == label).map(|i| i.id)
    }

    /// The class of the unordered pair `{a, b}`. Panics on a self-pair.
    pub fn class(&self, a: ItemId, b: ItemId) -> EdgeClass {
        assert!(a != b, "edge classes are undefined on self-pairs");
        self.classes[self.tri_index(a, b)]
    }

    /// Distinct classes present among the pairs (including class 0 if it
    /// occurs). Empty and single-item universes have no pairs.
    pub fn distinct_classes(&self) -> BTreeSet<EdgeClass> {
        self.classes.iter().copied().collect()
    }

    /// Swaps classes 0 and 1 on every pair. Only defined for structures
    /// that use classes 0 and 1 exclusively.
    pub fn complement(&self) -> Result<Self> {
        let present = self.distinct_classes();
        if present.iter().any(|c| c.0 > 1) {
            return Err(Error::Unsupported(
                "complement is only defined for two-class structures".into(),
            ));
        }
        let mut out = self.clone();
        for c in &mut out.classes {
            *c = if *c == EdgeClass(0) { EdgeClass(1) } else { EdgeClass(0) };
        }
        Ok(out)
    }

    /// All item ids in order.
    pub fn item_ids(&self) -> impl Iterator<Item = ItemId> + '_ {
        (0..self.len()).map(|i| ItemId(i as u32))
    }
}
