//! Brute-force ground truth on small structures.
//!
//! Everything here favors obviousness over speed: exhaustive subset
//! scans with a hard guard, plus an independently built strong-clan tree
//! used to validate the incremental engine.

use crate::decompose::{DecompositionTree, NodeId, NodeKind};
use crate::error::{Error, Result};
use crate::model::{EdgeClass, ItemId, TwoStructure};

/// Hard cap for exhaustive subset enumeration.
pub const ORACLE_GUARD: usize = 16;

/// True iff no external item sees two members through inequivalent
/// edges. The empty set, singletons and the universe always qualify.
pub fn is_clan(s: &TwoStructure, members: &[ItemId]) -> bool {
    let inside = |x: ItemId| members.contains(&x);
    for x in s.item_ids() {
        if inside(x) {
            continue;
        }
        let mut first: Option<EdgeClass> = None;
        for &y in members {
            let c = s.class(x, y);
            match first {
                None => first = Some(c),
                Some(f) if f != c => return false,
                _ => {}
            }
        }
    }
    true
}

fn guard_check(s: &TwoStructure, guard: usize) -> Result<()> {
    if s.len() > guard {
        return Err(Error::GuardExceeded { size: s.len(), guard });
    }
    Ok(())
}

fn mask_items(mask: u32, n: usize) -> Vec<ItemId> {
    (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| ItemId(i as u32)).collect()
}

fn clan_masks(s: &TwoStructure) -> Vec<u32> {
    let n = s.len();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let members = mask_items(mask, n);
        if is_clan(s, &members) {
            out.push(mask);
        }
    }
    out
}

/// Every nonempty clan, smallest mask first.
pub fn all_clans(s: &TwoStructure, guard: usize) -> Result<Vec<Vec<ItemId>>> {
    guard_check(s, guard)?;
    Ok(clan_masks(s).into_iter().map(|m| mask_items(m, s.len())).collect())
}

fn overlap(a: u32, b: u32) -> bool {
    a & b != 0 && a & !b != 0 && b & !a != 0
}

fn strong_clan_masks(s: &TwoStructure) -> Vec<u32> {
    let clans = clan_masks(s);
    clans.iter().copied().filter(|&c| clans.iter().all(|&d| !overlap(c, d))).collect()
}

/// Clans that overlap no other clan.
pub fn strong_clans(s: &TwoStructure, guard: usize) -> Result<Vec<Vec<ItemId>>> {
    guard_check(s, guard)?;
    Ok(strong_clan_masks(s).into_iter().map(|m| mask_items(m, s.len())).collect())
}

/// Builds the decomposition tree straight from the strong clans, ordered
/// by inclusion, typing each node by direct inspection of its quotient
/// cross-edges. Independent of the incremental insertion path.
pub fn brute_force_tree(s: &TwoStructure) -> Result<DecompositionTree> {
    guard_check(s, ORACLE_GUARD)?;
    let mut tree = DecompositionTree::new(s);
    let n = s.len();
    if n == 0 {
        return Ok(tree);
    }
    let strong = strong_clan_masks(s);
    let universe: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let root = build_node(&mut tree, s, &strong, universe);
    tree.adopt_manual_root(root);
    Ok(tree)
}

fn build_node(
    tree: &mut DecompositionTree,
    s: &TwoStructure,
    strong: &[u32],
    mask: u32,
) -> NodeId {
    let items = mask_items(mask, s.len());
    if items.len() == 1 {
        return tree.manual_leaf(items[0]);
    }
    // children: maximal strong clans properly inside this one
    let mut inside: Vec<u32> =
        strong.iter().copied().filter(|&m| m & !mask == 0 && m != mask).collect();
    inside.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut child_masks: Vec<u32> = Vec::new();
    for m in inside {
        if child_masks.iter().all(|&k| m & !k != 0) {
            child_masks.push(m);
        }
    }
    child_masks.sort_by_key(|m| m.trailing_zeros());
    let reps: Vec<ItemId> = child_masks
        .iter()
        .map(|&m| ItemId(m.trailing_zeros()))
        .collect();
    let mut cross: Option<EdgeClass> = None;
    let mut complete = true;
    for i in 0..reps.len() {
        for j in (i + 1)..reps.len() {
            let c = s.class(reps[i], reps[j]);
            match cross {
                None => cross = Some(c),
                Some(f) if f != c => complete = false,
                _ => {}
            }
        }
    }
    let kind = if complete {
        NodeKind::Complete(cross)
    } else {
        NodeKind::Primitive
    };
    let children: Vec<NodeId> =
        child_masks.iter().map(|&m| build_node(tree, s, strong, m)).collect();
    tree.manual_internal(kind, children)
}

/// Checks every internal node of a tree against its structure: children
/// partition the node, complete nodes have uniform cross-edges of their
/// color, primitive quotients admit only trivial clans.
pub fn verify_tree_nodes(tree: &DecompositionTree) -> std::result::Result<(), String> {
    for node in tree.internal_nodes() {
        let children = tree.children(node);
        if children.len() == 1 && tree.vertices(node).len() == 1 {
            continue; // trivial single-item wrapper
        }
        if children.len() < 2 {
            return Err(format!("internal node {node:?} has fewer than two children"));
        }
        let total: usize = children.iter().map(|&c| tree.vertices(c).len()).sum();
        if total != tree.vertices(node).len() {
            return Err(format!("children of {node:?} do not partition the node"));
        }
        let q = quotient_structure(tree, node);
        match tree.kind(node) {
            NodeKind::Complete(color) => {
                let color = color.ok_or_else(|| format!("complete node {node:?} lacks a color"))?;
                for i in 0..children.len() {
                    for j in (i + 1)..children.len() {
                        let c = q.class(ItemId(i as u32), ItemId(j as u32));
                        if c != color {
                            return Err(format!(
                                "complete node {node:?} of color {color} has a cross-edge of class {c}"
                            ));
                        }
                    }
                }
            }
            NodeKind::Primitive => {
                let clans = all_clans(&q, ORACLE_GUARD).map_err(|e| e.to_string())?;
                if clans.iter().any(|c| c.len() >= 2 && c.len() < q.len()) {
                    return Err(format!("primitive node {node:?} has a nontrivial quotient clan"));
                }
            }
            _ => unreachable!(),
        }
    }
    Ok(())
}

/// The quotient of an internal node: one vertex per child, cross-edge
/// classes read through representatives (well-defined since children are
/// clans).
pub fn quotient_structure(tree: &DecompositionTree, node: NodeId) -> TwoStructure {
    let children = tree.children(node);
    let labels: Vec<String> = (0..children.len()).map(|i| format!("q{i}")).collect();
    let reps: Vec<ItemId> = children.iter().map(|&c| tree.vertices(c)[0]).collect();
    let s = tree.structure();
    TwoStructure::from_class_fn(labels, |a, b| s.class(reps[a.index()], reps[b.index()]))
        .expect("quotient labels are unique")
}

/// Looks for an induced path on four vertices in a two-class structure
/// (class 1 edges are "present").
pub fn has_induced_p4(s: &TwoStructure) -> bool {
    let n = s.len();
    let edge = |a: usize, b: usize| s.class(ItemId(a as u32), ItemId(b as u32)) == EdgeClass(1);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if a == b || a == c || a == d || b == c || b == d || c == d {
                        continue;
                    }
                    if edge(a, b) && edge(b, c) && edge(c, d) && !edge(a, c) && !edge(a, d) && !edge(b, d)
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Small deterministic generator for reproducible random structures.
#[derive(Debug, Clone)]
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// In-place uniform shuffle.
    pub fn shuffle<T>(&mut self, slice: &mut [T]) {
        for i in (1..slice.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            slice.swap(i, j);
        }
    }
}

/// A uniformly random 2-structure with `n` items and classes `0..classes`.
pub fn random_structure(rng: &mut SplitMix64, n: usize, classes: u32) -> TwoStructure {
    let labels: Vec<String> = (0..n)
        .map(|i| if n <= 26 { ((b'a' + i as u8) as char).to_string() } else { format!("v{i}") })
        .collect();
    TwoStructure::from_class_fn(labels, |_, _| EdgeClass(rng.below(classes as u64) as u32))
        .expect("generated labels are unique")
}
