//! Rebuilding a two-class structure from its implications.
//!
//! The implications of a graph say which edges must differ in status and
//! which must agree: if `z` is in the consequent of `xy => ...` then
//! exactly one of `(x,z)`, `(y,z)` is an edge, and if `z` outside the
//! pair is not, both have the same status. An auxiliary connected graph
//! on all vertex pairs carries those same/different labels; fixing one
//! edge's status propagates to all of them, so the graph is recovered up
//! to complement depending on the seed chosen.

use crate::error::{Error, Result};
use crate::implications::{generate_implications, ImplicationSet};
use crate::model::{EdgeClass, ItemId, TwoStructure};
use std::collections::HashMap;

/// Auxiliary graph on vertex pairs. Vertices appear in chain-construction
/// order; each edge label says whether the two pairs share edge status
/// (`true`) or differ (`false`).
#[derive(Debug, Clone)]
pub struct PairGraph {
    n: usize,
    vertices: Vec<(ItemId, ItemId)>,
    index: HashMap<(u32, u32), usize>,
    edges: Vec<(usize, usize, bool)>,
}

impl PairGraph {
    pub fn universe_len(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[(ItemId, ItemId)] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, bool)] {
        &self.edges
    }

    pub fn contains_edge(&self, p: (ItemId, ItemId), q: (ItemId, ItemId)) -> Option<bool> {
        let pi = *self.index.get(&norm(p))?;
        let qi = *self.index.get(&norm(q))?;
        self.edges
            .iter()
            .find(|&&(a, b, _)| (a, b) == (pi, qi) || (a, b) == (qi, pi))
            .map(|&(_, _, same)| same)
    }
}

fn norm(p: (ItemId, ItemId)) -> (u32, u32) {
    if p.0 .0 < p.1 .0 {
        (p.0 .0, p.1 .0)
    } else {
        (p.1 .0, p.0 .0)
    }
}

fn consequent_contains(b: &ImplicationSet, x: ItemId, y: ItemId, probe: ItemId) -> bool {
    b.consequent(x, y).is_some_and(|z| z.contains(&probe))
}

/// Builds the connected pair graph with chain edges: the pairs on the
/// first vertex form one chain, and each column `(·, v_j)` another.
/// A missing implication means an empty consequent, hence label `true`.
pub fn build_pair_graph(b: &ImplicationSet) -> PairGraph {
    let n = b.universe_len();
    let mut g = PairGraph { n, vertices: Vec::new(), index: HashMap::new(), edges: Vec::new() };
    let push = |g: &mut PairGraph, i: usize, j: usize| -> usize {
        let pair = (ItemId(i as u32), ItemId(j as u32));
        let idx = g.vertices.len();
        g.vertices.push(pair);
        g.index.insert(norm(pair), idx);
        idx
    };
    // 1-based chain indices mirror the construction order: (v1,v2), then
    // for each j: (v1,vj) followed by (v2,vj) .. (v_{j-1},vj).
    for j in 2..=n {
        let first = push(&mut g, 0, j - 1);
        if j > 2 {
            let prev = g.index[&(0, (j - 2) as u32)];
            let same = !consequent_contains(b, ItemId((j - 2) as u32), ItemId((j - 1) as u32), ItemId(0));
            g.edges.push((prev, first, same));
            for i in 2..j {
                let idx = push(&mut g, i - 1, j - 1);
                let prev = g.index[&((i - 2) as u32, (j - 1) as u32)];
                let same =
                    !consequent_contains(b, ItemId((i - 2) as u32), ItemId((i - 1) as u32), ItemId((j - 1) as u32));
                g.edges.push((prev, idx, same));
            }
        }
    }
    g
}

/// The chain-edge path between two pair-vertices. With 1-based indices
/// `(l,k)` and `(m,p)`, `k <= p`, the path has `|l-m|` edges when `k == p`
/// and `(l-1) + (p-k) + (m-1)` edges otherwise.
pub fn pair_path(
    p1: (ItemId, ItemId),
    p2: (ItemId, ItemId),
    n: usize,
) -> Result<Vec<(ItemId, ItemId)>> {
    let check = |p: (ItemId, ItemId)| -> Result<(usize, usize)> {
        if p.0 == p.1 {
            return Err(Error::input("pair vertices need two distinct items"));
        }
        let (a, b) = norm(p);
        if (b as usize) >= n {
            return Err(Error::input("pair references an item outside the universe"));
        }
        Ok((a as usize + 1, b as usize + 1))
    };
    let a = check(p1)?;
    let b = check(p2)?;
    if a == b {
        return Err(Error::input("the two pair vertices must differ"));
    }
    // orient so the second pair has the larger column
    let (swapped, (l, k), (m, p)) = if a.1 <= b.1 { (false, a, b) } else { (true, b, a) };
    let mut path: Vec<(usize, usize)> = Vec::new();
    if k == p {
        let (lo, hi) = (l.min(m), l.max(m));
        for i in lo..=hi {
            path.push((i, p));
        }
        if l > m {
            path.reverse();
        }
    } else {
        for i in (1..=l).rev() {
            path.push((i, k));
        }
        for i in (k + 1)..=p {
            path.push((1, i));
        }
        for i in 2..=m {
            path.push((i, p));
        }
    }
    if swapped {
        path.reverse();
    }
    Ok(path.into_iter().map(|(i, j)| (ItemId((i - 1) as u32), ItemId((j - 1) as u32))).collect())
}

/// Two pair-vertices plus whether they must share edge status.
type Constraint = ((u32, u32), (u32, u32), bool);

/// Full same/different constraint list implied by the set: one constraint
/// per pair `{x,y}` and probe `w`. Pairs without an implication constrain
/// every probe to equal status.
fn constraints(b: &ImplicationSet) -> Vec<Constraint> {
    let n = b.universe_len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in (x + 1)..n {
            let (xi, yi) = (ItemId(x as u32), ItemId(y as u32));
            for w in 0..n {
                if w == x || w == y {
                    continue;
                }
                let wi = ItemId(w as u32);
                let same = !consequent_contains(b, xi, yi, wi);
                out.push((norm((xi, wi)), norm((yi, wi)), same));
            }
        }
    }
    out
}

/// Reconstructs a two-class structure from the implications, seeding the
/// first pair as present or absent. Fails when the constraints conflict,
/// i.e. the set is not the implication set of any graph.
pub fn reconstruct(b: &ImplicationSet, seed_present: bool) -> Result<TwoStructure> {
    let n = b.universe_len();
    if n < 2 {
        return TwoStructure::from_classified_pairs(b.labels().to_vec(), &[]);
    }
    let pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|i| ((i + 1)..n as u32).map(move |j| (i, j)))
        .collect();
    let index: HashMap<(u32, u32), usize> =
        pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); pairs.len()];
    for (p, q, same) in constraints(b) {
        let (pi, qi) = (index[&p], index[&q]);
        adj[pi].push((qi, same));
        adj[qi].push((pi, same));
    }
    let mut status: Vec<Option<bool>> = vec![None; pairs.len()];
    let seed = index[&(0, 1)];
    status[seed] = Some(seed_present);
    let mut queue = std::collections::VecDeque::from([seed]);
    while let Some(p) = queue.pop_front() {
        let sp = status[p].expect("queued vertices are assigned");
        for &(q, same) in &adj[p] {
            let want = if same { sp } else { !sp };
            match status[q] {
                None => {
                    status[q] = Some(want);
                    queue.push_back(q);
                }
                Some(have) if have == want => {}
                Some(_) => {
                    let (x, y) = pairs[q];
                    return Err(Error::NotFromGraph(format!(
                        "pair ({}, {}) receives conflicting statuses",
                        b.label(ItemId(x)),
                        b.label(ItemId(y))
                    )));
                }
            }
        }
    }
    let classified: Vec<(u32, u32, EdgeClass)> = pairs
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| {
            let class = if status[k] == Some(true) { EdgeClass(1) } else { EdgeClass(0) };
            (i, j, class)
        })
        .collect();
    TwoStructure::from_classified_pairs(b.labels().to_vec(), &classified)
}

/// True when the structure's implications reconstruct, under both seeds,
/// a complementary pair of graphs with the same implications, one of
/// which is the structure itself.
pub fn verify_roundtrip(s: &TwoStructure) -> bool {
    if s.distinct_classes().iter().any(|c| c.0 > 1) {
        return false;
    }
    let b = generate_implications(s);
    let (Ok(g1), Ok(g2)) = (reconstruct(&b, true), reconstruct(&b, false)) else {
        return false;
    };
    generate_implications(&g1) == b
        && generate_implications(&g2) == b
        && (g1 == *s || g2 == *s)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Implications of a five-vertex graph with edges ab, ac, ad, cd, ce.
    fn five_vertex_basis() -> ImplicationSet {
        let labels = vec!["a".into(), "b".into(), "c".into(), "d".into(), "e".into()];
        let mut b = ImplicationSet::new(labels);
        let ids = |v: &[u32]| v.iter().map(|&i| ItemId(i)).collect::<Vec<_>>();
        let pairs: [((u32, u32), &[u32]); 10] = [
            ((0, 1), &[2, 3]),
            ((0, 2), &[1, 4]),
            ((0, 3), &[1]),
            ((0, 4), &[1, 3]),
            ((1, 2), &[3, 4]),
            ((1, 3), &[2]),
            ((1, 4), &[0, 2]),
            ((2, 3), &[4]),
            ((2, 4), &[0, 3]),
            ((3, 4), &[0]),
        ];
        for ((x, y), z) in pairs {
            b.add(ItemId(x), ItemId(y), ids(z)).unwrap();
        }
        b
    }

    #[test]
    fn pair_graph_vertices_follow_chain_order() {
        let b = five_vertex_basis();
        let g = build_pair_graph(&b);
        let want: Vec<(u32, u32)> = vec![
            (0, 1),
            (0, 2),
            (1, 2),
            (0, 3),
            (1, 3),
            (2, 3),
            (0, 4),
            (1, 4),
            (2, 4),
            (3, 4),
        ];
        let got: Vec<(u32, u32)> = g.vertices().iter().map(|&(a, b)| (a.0, b.0)).collect();
        assert_eq!(got, want);
        assert_eq!(g.edges().len(), want.len() - 1); // a spanning tree
    }

    #[test]
    fn pair_graph_labels_encode_same_or_different_status() {
        let b = five_vertex_basis();
        let g = build_pair_graph(&b);
        let p = |x: u32, y: u32| (ItemId(x), ItemId(y));
        // (a,b) and (a,c) share status; (a,c) and (b,c) differ
        assert_eq!(g.contains_edge(p(0, 1), p(0, 2)), Some(true));
        assert_eq!(g.contains_edge(p(0, 2), p(1, 2)), Some(false));
    }

    #[test]
    fn two_items_without_implications_give_one_isolated_pair_vertex() {
        let b = ImplicationSet::new(vec!["a".into(), "b".into()]);
        let g = build_pair_graph(&b);
        assert_eq!(g.vertices().len(), 1);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn path_within_one_column_has_distance_many_steps() {
        let path = pair_path((ItemId(0), ItemId(2)), (ItemId(1), ItemId(2)), 5).unwrap();
        assert_eq!(path, vec![(ItemId(0), ItemId(2)), (ItemId(1), ItemId(2))]);
    }

    #[test]
    fn cross_column_path_length_matches_the_closed_form() {
        // 1-based (l,k) = (2,3), (m,p) = (1,4): length (l-1)+(p-k)+(m-1) = 2
        let path = pair_path((ItemId(1), ItemId(2)), (ItemId(0), ItemId(3)), 5).unwrap();
        assert_eq!(path.len(), 3); // two edges
        assert_eq!(path.first(), Some(&(ItemId(1), ItemId(2))));
        assert_eq!(path.last(), Some(&(ItemId(0), ItemId(3))));
    }

    #[test]
    fn degenerate_paths_are_rejected() {
        assert!(pair_path((ItemId(0), ItemId(1)), (ItemId(0), ItemId(1)), 4).is_err());
        assert!(pair_path((ItemId(0), ItemId(0)), (ItemId(0), ItemId(1)), 4).is_err());
    }

    #[test]
    fn every_pair_of_pair_vertices_is_connected_by_chain_edges() {
        let b = five_vertex_basis();
        let g = build_pair_graph(&b);
        for &p in g.vertices() {
            for &q in g.vertices() {
                if p == q {
                    continue;
                }
                let path = pair_path(p, q, 5).unwrap();
                assert_eq!(path.first(), Some(&p));
                assert_eq!(path.last(), Some(&q));
                for w in path.windows(2) {
                    assert!(
                        g.contains_edge(w[0], w[1]).is_some(),
                        "missing chain edge between {:?} and {:?}",
                        w[0],
                        w[1]
                    );
                }
            }
        }
    }

    #[test]
    fn reconstruction_recovers_the_graph_up_to_complement() {
        let b = five_vertex_basis();
        let g = reconstruct(&b, true).unwrap();
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for i in 0..5u32 {
            for j in (i + 1)..5 {
                if g.class(ItemId(i), ItemId(j)) == EdgeClass(1) {
                    edges.push((i, j));
                }
            }
        }
        assert_eq!(edges, vec![(0, 1), (0, 2), (0, 3), (2, 3), (2, 4)]);
        let h = reconstruct(&b, false).unwrap();
        assert_eq!(h, g.complement().unwrap());
        assert_eq!(generate_implications(&g), b);
        assert_eq!(generate_implications(&h), b);
    }

    #[test]
    fn empty_implications_reconstruct_complete_or_edgeless() {
        let b = ImplicationSet::new(vec!["a".into(), "b".into(), "c".into()]);
        let g = reconstruct(&b, false).unwrap();
        assert!(g.distinct_classes().iter().all(|c| c.0 == 0));
        let h = reconstruct(&b, true).unwrap();
        assert!(h.distinct_classes().iter().all(|c| c.0 == 1));
    }

    #[test]
    fn impossible_constraint_sets_are_rejected() {
        // "only c tells a and b apart, nothing else tells anything apart"
        // cannot hold in any graph on three vertices
        let mut b = ImplicationSet::new(vec!["a".into(), "b".into(), "c".into()]);
        b.add(ItemId(0), ItemId(1), vec![ItemId(2)]).unwrap();
        assert!(matches!(reconstruct(&b, true), Err(Error::NotFromGraph(_))));
    }

    #[test]
    fn roundtrip_holds_for_a_handful_of_graphs() {
        let g = TwoStructure::from_edge_list(5, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
            .unwrap();
        assert!(verify_roundtrip(&g));
        let complete = TwoStructure::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert!(verify_roundtrip(&complete));
        let edgeless = TwoStructure::from_edge_list(3, &[]).unwrap();
        assert!(verify_roundtrip(&edgeless));
    }
}
