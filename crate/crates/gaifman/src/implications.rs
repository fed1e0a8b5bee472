//! Pair-antecedent implications and their closure space.
//!
//! Every pair of items `{x, y}` that some third item can tell apart
//! yields the implication `xy => D(x, y)`, where the distinguishing set
//! `D(x, y)` collects the items connected to x and y by inequivalent
//! edges. The closed sets of these implications are exactly the clans of
//! the structure, strong closures are exactly strong clans, and the
//! shape of the closure lattice reveals each strong clan's type.

use crate::error::{Error, Result};
use crate::model::{ItemId, TwoStructure};
use std::collections::{BTreeMap, HashMap};

/// Default cap on universe size for closed-set enumeration: a complete
/// clan makes every subset closed, so the count is exponential.
pub const LATTICE_GUARD: usize = 16;

/// One pair-antecedent implication `xy => consequent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Implication {
    pub antecedent: (ItemId, ItemId),
    /// Nonempty, sorted, disjoint from the antecedent.
    pub consequent: Vec<ItemId>,
}

/// A set of pair-antecedent implications over a fixed universe,
/// at most one implication per unordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicationSet {
    labels: Vec<String>,
    map: BTreeMap<(u32, u32), Vec<ItemId>>,
}

fn norm(x: ItemId, y: ItemId) -> (u32, u32) {
    if x.0 < y.0 {
        (x.0, y.0)
    } else {
        (y.0, x.0)
    }
}

impl ImplicationSet {
    pub fn new(labels: Vec<String>) -> Self {
        ImplicationSet { labels, map: BTreeMap::new() }
    }

    pub fn universe_len(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, id: ItemId) -> &str {
        &self.labels[id.index()]
    }

    pub fn item_by_label(&self, label: &str) -> Option<ItemId> {
        self.labels.iter().position(|l| l == label).map(|i| ItemId(i as u32))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Adds `xy => consequent`. Empty consequents are discarded (a pair
    /// nothing distinguishes carries no implication).
    pub fn add(&mut self, x: ItemId, y: ItemId, mut consequent: Vec<ItemId>) -> Result<()> {
        if x == y {
            return Err(Error::input("antecedent must be a pair of distinct items"));
        }
        let n = self.labels.len();
        if x.index() >= n || y.index() >= n || consequent.iter().any(|z| z.index() >= n) {
            return Err(Error::input("implication references items outside the universe"));
        }
        if consequent.iter().any(|&z| z == x || z == y) {
            return Err(Error::input("consequent must be disjoint from the antecedent"));
        }
        consequent.sort_unstable();
        consequent.dedup();
        if consequent.is_empty() {
            return Ok(());
        }
        let key = norm(x, y);
        if let Some(existing) = self.map.get(&key) {
            if *existing != consequent {
                return Err(Error::input(format!(
                    "pair ({}, {}) has two different consequents",
                    self.label(x),
                    self.label(y)
                )));
            }
            return Ok(());
        }
        self.map.insert(key, consequent);
        Ok(())
    }

    /// The stored consequent for the unordered pair, if any.
    pub fn consequent(&self, x: ItemId, y: ItemId) -> Option<&[ItemId]> {
        self.map.get(&norm(x, y)).map(|v| v.as_slice())
    }

    /// All implications ordered by antecedent pair.
    pub fn implications(&self) -> impl Iterator<Item = Implication> + '_ {
        self.map.iter().map(|(&(x, y), cons)| Implication {
            antecedent: (ItemId(x), ItemId(y)),
            consequent: cons.clone(),
        })
    }

    /// Least fixpoint of `set` under the implications: repeatedly adds the
    /// consequent of every implication whose antecedent pair is inside.
    pub fn closure(&self, set: &[ItemId]) -> Vec<ItemId> {
        let n = self.labels.len();
        let mut present = vec![false; n];
        for &i in set {
            present[i.index()] = true;
        }
        let mut changed = true;
        while changed {
            changed = false;
            for (&(x, y), cons) in &self.map {
                if present[x as usize] && present[y as usize] {
                    for z in cons {
                        if !present[z.index()] {
                            present[z.index()] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        (0..n).filter(|&i| present[i]).map(|i| ItemId(i as u32)).collect()
    }

    fn mask_rules(&self) -> Vec<(u64, u64)> {
        self.map
            .iter()
            .map(|(&(x, y), cons)| {
                let pair = (1u64 << x) | (1u64 << y);
                let mut c = 0u64;
                for z in cons {
                    c |= 1u64 << z.0;
                }
                (pair, c)
            })
            .collect()
    }

    fn closure_mask(rules: &[(u64, u64)], mut m: u64) -> u64 {
        loop {
            let mut grew = false;
            for &(pair, cons) in rules {
                if m & pair == pair && cons & !m != 0 {
                    m |= cons;
                    grew = true;
                }
            }
            if !grew {
                return m;
            }
        }
    }

    /// Enumerates every closed set in lectic order and assembles the
    /// closure lattice. Refuses universes larger than `guard`.
    pub fn enumerate_closed_sets(&self, guard: usize) -> Result<ClosureLattice> {
        let n = self.labels.len();
        if n > guard.min(63) {
            return Err(Error::GuardExceeded { size: n, guard: guard.min(63) });
        }
        let rules = self.mask_rules();
        let mut sets = Vec::new();
        let mut current = Some(Self::closure_mask(&rules, 0));
        while let Some(a) = current {
            sets.push(a);
            current = Self::next_closed(&rules, n, a);
        }
        Ok(ClosureLattice::assemble(self.labels.clone(), sets))
    }

    /// The lectic successor of the closed set `a`, if any.
    fn next_closed(rules: &[(u64, u64)], n: usize, a: u64) -> Option<u64> {
        for i in (0..n).rev() {
            let bit = 1u64 << i;
            if a & bit != 0 {
                continue;
            }
            let below = bit - 1;
            let b = Self::closure_mask(rules, (a & below) | bit);
            if (b & below) & !a == 0 {
                return Some(b);
            }
        }
        None
    }
}

/// Items connected to `x` and `y` by inequivalent edges, excluding the
/// pair itself.
pub fn distinguishing_set(s: &TwoStructure, x: ItemId, y: ItemId) -> Result<Vec<ItemId>> {
    if x == y {
        return Err(Error::input("distinguishing set needs two distinct items"));
    }
    Ok(s.item_ids()
        .filter(|&z| z != x && z != y && s.class(x, z) != s.class(y, z))
        .collect())
}

/// One implication per unordered pair with a nonempty distinguishing set.
pub fn generate_implications(s: &TwoStructure) -> ImplicationSet {
    let mut out = ImplicationSet::new(s.labels());
    let n = s.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let (x, y) = (ItemId(i as u32), ItemId(j as u32));
            let d = distinguishing_set(s, x, y).expect("distinct by construction");
            if !d.is_empty() {
                out.add(x, y, d).expect("valid by construction");
            }
        }
    }
    out
}

/// Whether a strong set's type is judged against the two-class or the
/// multi-class child-count bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeBound {
    /// Two edge classes: a primitive quotient has more than three parts.
    TwoClass,
    /// Three or more edge classes: more than two parts suffice.
    MultiClass,
}

impl TypeBound {
    pub fn for_structure(s: &TwoStructure) -> TypeBound {
        if s.distinct_classes().len() >= 3 {
            TypeBound::MultiClass
        } else {
            TypeBound::TwoClass
        }
    }

    fn min_children_exclusive(self) -> usize {
        match self {
            TypeBound::TwoClass => 3,
            TypeBound::MultiClass => 2,
        }
    }
}

/// Type of a clan as read off the closure lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClanType {
    Complete,
    Primitive,
}

/// All closed sets of an implication set with their immediate-subset
/// (Hasse) relation and strong flags. The empty set participates in the
/// lattice but is never flagged strong.
#[derive(Debug, Clone)]
pub struct ClosureLattice {
    labels: Vec<String>,
    sets: Vec<u64>,
    index: HashMap<u64, usize>,
    children: Vec<Vec<usize>>,
    strong: Vec<bool>,
}

fn overlap(a: u64, b: u64) -> bool {
    a & b != 0 && a & !b != 0 && b & !a != 0
}

impl ClosureLattice {
    fn assemble(labels: Vec<String>, sets: Vec<u64>) -> Self {
        let index: HashMap<u64, usize> = sets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        // order by size descending so that Hasse children can be picked
        // greedily as the maximal proper closed subsets
        let mut by_size: Vec<usize> = (0..sets.len()).collect();
        by_size.sort_by_key(|&i| std::cmp::Reverse(sets[i].count_ones()));
        let mut children = vec![Vec::new(); sets.len()];
        for (i, &x) in sets.iter().enumerate() {
            let mut kept: Vec<usize> = Vec::new();
            for &j in &by_size {
                let y = sets[j];
                if y == x || y & !x != 0 {
                    continue;
                }
                // a proper closed subset is immediate iff it is maximal,
                // i.e. not inside a child already kept
                if kept.iter().all(|&k| y & !sets[k] != 0) {
                    kept.push(j);
                }
            }
            children[i] = kept;
        }
        let strong = sets
            .iter()
            .map(|&x| x != 0 && sets.iter().all(|&y| !overlap(x, y)))
            .collect();
        ClosureLattice { labels, sets, index, children, strong }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    fn mask_of(&self, set: &[ItemId]) -> u64 {
        set.iter().fold(0u64, |m, i| m | (1u64 << i.0))
    }

    fn items_of(&self, mask: u64) -> Vec<ItemId> {
        (0..self.labels.len()).filter(|&i| mask & (1 << i) != 0).map(|i| ItemId(i as u32)).collect()
    }

    /// Every closed set, in lectic enumeration order.
    pub fn closed_sets(&self) -> Vec<Vec<ItemId>> {
        self.sets.iter().map(|&m| self.items_of(m)).collect()
    }

    pub fn contains(&self, set: &[ItemId]) -> bool {
        self.index.contains_key(&self.mask_of(set))
    }

    pub fn is_strong(&self, set: &[ItemId]) -> bool {
        self.index.get(&self.mask_of(set)).map(|&i| self.strong[i]).unwrap_or(false)
    }

    /// Closed sets overlapping no other closed set (the empty set excluded).
    pub fn strong_sets(&self) -> Vec<Vec<ItemId>> {
        self.sets
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.strong[i])
            .map(|(_, &m)| self.items_of(m))
            .collect()
    }

    /// Immediate closed subsets of `set` in the Hasse diagram.
    pub fn children_of(&self, set: &[ItemId]) -> Option<Vec<Vec<ItemId>>> {
        let &i = self.index.get(&self.mask_of(set))?;
        Some(self.children[i].iter().map(|&j| self.items_of(self.sets[j])).collect())
    }

    fn universe_mask(&self) -> u64 {
        if self.labels.is_empty() {
            0
        } else {
            (1u64 << self.labels.len()) - 1
        }
    }

    fn universe_index(&self) -> Option<usize> {
        self.index.get(&self.universe_mask()).copied()
    }

    pub(crate) fn set_mask(&self, i: usize) -> u64 {
        self.sets[i]
    }

    pub(crate) fn strong_flag(&self, i: usize) -> bool {
        self.strong[i]
    }

    pub(crate) fn children_idx(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    pub(crate) fn index_of_mask(&self, mask: u64) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    pub(crate) fn items_of_mask(&self, mask: u64) -> Vec<ItemId> {
        self.items_of(mask)
    }
}

/// Reads the type of a strong closed set off the lattice: primitive iff
/// all its Hasse children are strong and there are more of them than the
/// bound for the class regime.
pub fn infer_clan_type(
    lattice: &ClosureLattice,
    set: &[ItemId],
    bound: TypeBound,
) -> Result<ClanType> {
    let mask = set.iter().fold(0u64, |m, i| m | (1u64 << i.0));
    let idx = lattice
        .index_of_mask(mask)
        .ok_or_else(|| Error::input("set is not closed in this lattice"))?;
    if !lattice.strong_flag(idx) {
        return Err(Error::input("type inference needs a strong closed set"));
    }
    if mask.count_ones() < 2 {
        return Err(Error::input("type inference needs at least two items"));
    }
    let kids = lattice.children_idx(idx);
    let all_strong = kids.iter().all(|&k| lattice.strong_flag(k));
    if all_strong && kids.len() > bound.min_children_exclusive() {
        Ok(ClanType::Primitive)
    } else {
        Ok(ClanType::Complete)
    }
}

/// A decomposition-tree skeleton recovered from a closure lattice:
/// strong closed sets ordered by inclusion, internal nodes typed, no
/// edge colors (those are not recoverable in general).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonNode {
    pub set: Vec<ItemId>,
    /// `None` for leaves (singletons).
    pub clan_type: Option<ClanType>,
    pub children: Vec<SkeletonNode>,
}

/// Builds the tree of strong closed sets ordered by inclusion.
pub fn lattice_to_tree(lattice: &ClosureLattice, bound: TypeBound) -> Result<SkeletonNode> {
    let root = lattice
        .universe_index()
        .ok_or_else(|| Error::input("lattice has no universe set"))?;
    build_skeleton(lattice, lattice.set_mask(root), bound)
}

fn build_skeleton(lattice: &ClosureLattice, mask: u64, bound: TypeBound) -> Result<SkeletonNode> {
    let set = lattice.items_of_mask(mask);
    if mask.count_ones() <= 1 {
        return Ok(SkeletonNode { set, clan_type: None, children: Vec::new() });
    }
    // maximal strong closed sets properly inside this one
    let mut kids: Vec<u64> = Vec::new();
    let mut candidates: Vec<u64> = (0..lattice.len())
        .filter(|&i| lattice.strong_flag(i))
        .map(|i| lattice.set_mask(i))
        .filter(|&m| m & !mask == 0 && m != mask)
        .collect();
    candidates.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    for m in candidates {
        if kids.iter().all(|&k| m & !k != 0) {
            kids.push(m);
        }
    }
    kids.sort_by_key(|m| m.trailing_zeros());
    let ty = infer_clan_type(lattice, &set, bound)?;
    let children =
        kids.into_iter().map(|k| build_skeleton(lattice, k, bound)).collect::<Result<_>>()?;
    Ok(SkeletonNode { set, clan_type: Some(ty), children })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::EdgeClass;

    fn nested_triple_graph() -> TwoStructure {
        TwoStructure::from_edge_list(5, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
            .unwrap()
    }

    fn tricolor_structure() -> TwoStructure {
        TwoStructure::from_classified_pairs(
            vec!["a".into(), "b".into(), "c".into(), "d".into(), "e".into()],
            &[(0, 2, EdgeClass(1)), (1, 2, EdgeClass(2)), (3, 4, EdgeClass(1))],
        )
        .unwrap()
    }

    fn ids(v: &[u32]) -> Vec<ItemId> {
        v.iter().map(|&i| ItemId(i)).collect()
    }

    #[test]
    fn distinguishing_sets_of_the_nested_triple_graph() {
        let s = nested_triple_graph();
        assert_eq!(distinguishing_set(&s, ItemId(0), ItemId(3)).unwrap(), ids(&[1, 2]));
        assert_eq!(distinguishing_set(&s, ItemId(0), ItemId(1)).unwrap(), ids(&[]));
        assert!(distinguishing_set(&s, ItemId(0), ItemId(0)).is_err());
    }

    #[test]
    fn tricolor_distinguishing_set() {
        let s = tricolor_structure();
        assert_eq!(distinguishing_set(&s, ItemId(2), ItemId(3)).unwrap(), ids(&[0, 1, 4]));
    }

    #[test]
    fn implication_generation_keeps_only_nonempty_consequents() {
        let s = nested_triple_graph();
        let b = generate_implications(&s);
        let got: Vec<((u32, u32), Vec<u32>)> = b
            .implications()
            .map(|i| ((i.antecedent.0 .0, i.antecedent.1 .0), i.consequent.iter().map(|z| z.0).collect()))
            .collect();
        assert_eq!(
            got,
            vec![
                ((0, 3), vec![1, 2]),
                ((0, 4), vec![1, 2]),
                ((1, 3), vec![0, 2]),
                ((1, 4), vec![0, 2]),
                ((2, 3), vec![0, 1]),
                ((2, 4), vec![0, 1]),
            ]
        );
    }

    #[test]
    fn complete_structures_have_no_implications() {
        let s = TwoStructure::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert!(generate_implications(&s).is_empty());
    }

    #[test]
    fn tricolor_structure_has_nine_implications_and_a_closed_pair() {
        let s = tricolor_structure();
        let b = generate_implications(&s);
        assert_eq!(b.len(), 9);
        assert!(b.consequent(ItemId(3), ItemId(4)).is_none());
        assert_eq!(b.consequent(ItemId(2), ItemId(4)).unwrap(), ids(&[0, 1, 3]).as_slice());
    }

    #[test]
    fn closure_fixpoint() {
        let s = nested_triple_graph();
        let b = generate_implications(&s);
        assert_eq!(b.closure(&ids(&[3, 4])), ids(&[3, 4]));
        assert_eq!(b.closure(&[]), ids(&[]));
        assert_eq!(b.closure(&ids(&[0])), ids(&[0]));
        assert_eq!(b.closure(&ids(&[0, 3])), ids(&[0, 1, 2, 3]));
    }

    #[test]
    fn closed_sets_of_the_nested_triple_graph() {
        let s = nested_triple_graph();
        let b = generate_implications(&s);
        let lattice = b.enumerate_closed_sets(LATTICE_GUARD).unwrap();
        let mut mids: Vec<Vec<u32>> = lattice
            .closed_sets()
            .into_iter()
            .filter(|c| c.len() >= 2 && c.len() < 5)
            .map(|c| c.iter().map(|i| i.0).collect())
            .collect();
        mids.sort();
        assert_eq!(
            mids,
            vec![
                vec![0, 1],
                vec![0, 1, 2],
                vec![0, 1, 2, 3],
                vec![0, 1, 2, 4],
                vec![0, 2],
                vec![1, 2],
                vec![3, 4],
            ]
        );
    }

    #[test]
    fn empty_implication_set_closes_every_subset() {
        let b = ImplicationSet::new(vec!["a".into(), "b".into()]);
        let lattice = b.enumerate_closed_sets(LATTICE_GUARD).unwrap();
        assert_eq!(lattice.len(), 4); // {}, {a}, {b}, {a,b}
        let mut strong = lattice.strong_sets();
        strong.sort();
        assert_eq!(strong, vec![ids(&[0]), ids(&[0, 1]), ids(&[1])]);
    }

    #[test]
    fn strong_sets_of_the_nested_triple_graph() {
        let s = nested_triple_graph();
        let b = generate_implications(&s);
        let lattice = b.enumerate_closed_sets(LATTICE_GUARD).unwrap();
        let mut strong = lattice.strong_sets();
        strong.sort();
        assert_eq!(
            strong,
            vec![
                ids(&[0]),
                ids(&[0, 1, 2]),
                ids(&[0, 1, 2, 3, 4]),
                ids(&[1]),
                ids(&[2]),
                ids(&[3]),
                ids(&[4]),
            ]
        );
    }

    #[test]
    fn guard_refusal() {
        let labels: Vec<String> = (0..17).map(|i| format!("i{i}")).collect();
        let b = ImplicationSet::new(labels);
        assert!(matches!(
            b.enumerate_closed_sets(LATTICE_GUARD),
            Err(Error::GuardExceeded { size: 17, guard: 16 })
        ));
    }

    #[test]
    fn closure_axioms_hold_on_a_sample() {
        let s = tricolor_structure();
        let b = generate_implications(&s);
        let sample: Vec<Vec<ItemId>> =
            vec![ids(&[]), ids(&[0]), ids(&[0, 1]), ids(&[1, 3]), ids(&[0, 2, 4])];
        for x in &sample {
            let cx = b.closure(x);
            // extensivity
            assert!(x.iter().all(|i| cx.contains(i)));
            // idempotency
            assert_eq!(b.closure(&cx), cx);
            // monotonicity against supersets from the sample
            for y in &sample {
                if x.iter().all(|i| y.contains(i)) {
                    let cy = b.closure(y);
                    assert!(cx.iter().all(|i| cy.contains(i)));
                }
            }
        }
    }

    #[test]
    fn intersection_of_closed_sets_is_closed() {
        let s = nested_triple_graph();
        let b = generate_implications(&s);
        let lattice = b.enumerate_closed_sets(LATTICE_GUARD).unwrap();
        let sets = lattice.closed_sets();
        for x in &sets {
            for y in &sets {
                let inter: Vec<ItemId> = x.iter().copied().filter(|i| y.contains(i)).collect();
                assert!(lattice.contains(&inter), "intersection {inter:?} must be closed");
            }
        }
    }

    #[test]
    fn tricolor_lattice_types_match_the_class_regime() {
        let s = tricolor_structure();
        let b = generate_implications(&s);
        let lattice = b.enumerate_closed_sets(LATTICE_GUARD).unwrap();
        let bound = TypeBound::for_structure(&s);
        assert_eq!(bound, TypeBound::MultiClass);
        // the tri-colored triple has three strong singleton children
        assert_eq!(infer_clan_type(&lattice, &ids(&[0, 1, 2]), bound).unwrap(), ClanType::Primitive);
        assert_eq!(infer_clan_type(&lattice, &ids(&[3, 4]), bound).unwrap(), ClanType::Complete);
        // non-strong sets are rejected
        assert!(infer_clan_type(&lattice, &ids(&[0, 2]), bound).is_err());
    }

    #[test]
    fn skeleton_matches_the_decomposition_shape() {
        let s = tricolor_structure();
        let b = generate_implications(&s);
        let lattice = b.enumerate_closed_sets(LATTICE_GUARD).unwrap();
        let tree = lattice_to_tree(&lattice, TypeBound::for_structure(&s)).unwrap();
        assert_eq!(tree.set, ids(&[0, 1, 2, 3, 4]));
        assert_eq!(tree.clan_type, Some(ClanType::Complete));
        assert_eq!(tree.children.len(), 2);
        assert_eq!(tree.children[0].set, ids(&[0, 1, 2]));
        assert_eq!(tree.children[0].clan_type, Some(ClanType::Primitive));
        assert_eq!(tree.children[1].set, ids(&[3, 4]));
        assert_eq!(tree.children[1].clan_type, Some(ClanType::Complete));
    }

    #[test]
    fn skeleton_of_the_nested_triple_graph() {
        let s = nested_triple_graph();
        let b = generate_implications(&s);
        let lattice = b.enumerate_closed_sets(LATTICE_GUARD).unwrap();
        let tree = lattice_to_tree(&lattice, TypeBound::for_structure(&s)).unwrap();
        assert_eq!(tree.clan_type, Some(ClanType::Complete));
        let kids: Vec<(Vec<u32>, Option<ClanType>)> = tree
            .children
            .iter()
            .map(|c| (c.set.iter().map(|i| i.0).collect(), c.clan_type))
            .collect();
        assert_eq!(
            kids,
            vec![
                (vec![0, 1, 2], Some(ClanType::Complete)),
                (vec![3], None),
                (vec![4], None),
            ]
        );
    }

    #[test]
    fn single_item_skeleton_is_a_leaf() {
        let b = ImplicationSet::new(vec!["a".into()]);
        let lattice = b.enumerate_closed_sets(LATTICE_GUARD).unwrap();
        let tree = lattice_to_tree(&lattice, TypeBound::TwoClass).unwrap();
        assert_eq!(tree.set, ids(&[0]));
        assert_eq!(tree.clan_type, None);
        assert!(tree.children.is_empty());
    }
}
