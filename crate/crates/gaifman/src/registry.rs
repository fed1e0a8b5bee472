//! Union-find registry for edge equivalence classes.
//!
//! Elements are *directed* endpoint pairs over vertices and clan nodes;
//! both orientations of an edge are always created and unioned together.
//! Base vertex pairs are registered up front from the structure, one
//! find-class per edge class. Vertex-to-clan edges are added later as
//! clans get packed. Union uses the union-by-rank heuristic.

use crate::error::{Error, Result};
use crate::model::{EdgeClass, ItemId, TwoStructure};
use std::collections::HashMap;

/// A registry endpoint: a vertex or a clan node. Clan ids share the id
/// space with vertices via an offset of the vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Endpoint(u32);

/// Operation counters for complexity assertions in tests.
#[derive(Debug, Clone, Copy, Default)]
pub struct RegistryStats {
    /// Number of `find` calls made through the public query surface.
    pub finds: u64,
    /// Parent-chain nodes touched across all finds (including internal ones).
    pub visits: u64,
    pub make_sets: u64,
    pub unions: u64,
}

/// Plain union-by-rank disjoint sets, instrumented with a visit counter.
#[derive(Debug, Clone, Default)]
pub(crate) struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
    pub(crate) visits: u64,
}

impl UnionFind {
    pub(crate) fn make_set(&mut self) -> u32 {
        let id = self.parent.len() as u32;
        self.parent.push(id);
        self.rank.push(0);
        id
    }

    pub(crate) fn find(&mut self, mut x: u32) -> u32 {
        self.visits += 1;
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
            self.visits += 1;
        }
        x
    }

    pub(crate) fn union(&mut self, a: u32, b: u32) -> u32 {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return ra;
        }
        let (hi, lo) = if self.rank[ra as usize] >= self.rank[rb as usize] { (ra, rb) } else { (rb, ra) };
        self.parent[lo as usize] = hi;
        if self.rank[hi as usize] == self.rank[lo as usize] {
            self.rank[hi as usize] += 1;
        }
        hi
    }

}

#[derive(Debug, Clone)]
pub struct EdgeRegistry {
    n_vertices: usize,
    /// Slot per directed base pair, indexed `a * n + b`; u32::MAX = unset.
    base_slots: Vec<u32>,
    /// Slots for directed pairs involving at least one clan endpoint.
    ext_slots: HashMap<(u32, u32), u32>,
    uf: UnionFind,
    /// Class tag per element; unions never merge different classes.
    class_of: Vec<EdgeClass>,
    /// First element seen for each class; unioning into the anchor keeps
    /// one find-class per edge class.
    anchors: HashMap<EdgeClass, u32>,
    stats: RegistryStats,
}

impl EdgeRegistry {
    /// Builds the registry and registers every base vertex pair of the
    /// structure, both orientations unified, same-class pairs merged.
    pub fn new(structure: &TwoStructure) -> Self {
        let n = structure.len();
        let mut reg = EdgeRegistry {
            n_vertices: n,
            base_slots: vec![u32::MAX; n * n],
            ext_slots: HashMap::new(),
            uf: UnionFind::default(),
            class_of: Vec::new(),
            anchors: HashMap::new(),
            stats: RegistryStats::default(),
        };
        for i in 0..n {
            for j in (i + 1)..n {
                let (a, b) = (ItemId(i as u32), ItemId(j as u32));
                reg.register_edge(reg.vertex(a), reg.vertex(b), structure.class(a, b));
            }
        }
        reg
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn vertex(&self, id: ItemId) -> Endpoint {
        debug_assert!(id.index() < self.n_vertices);
        Endpoint(id.0)
    }

    pub fn clan(&self, clan_id: u32) -> Endpoint {
        Endpoint(self.n_vertices as u32 + clan_id)
    }

    fn slot(&self, a: Endpoint, b: Endpoint) -> Option<u32> {
        let n = self.n_vertices as u32;
        if a.0 < n && b.0 < n {
            let s = self.base_slots[(a.0 * n + b.0) as usize];
            (s != u32::MAX).then_some(s)
        } else {
            self.ext_slots.get(&(a.0, b.0)).copied()
        }
    }

    fn put_slot(&mut self, a: Endpoint, b: Endpoint, elem: u32) {
        let n = self.n_vertices as u32;
        if a.0 < n && b.0 < n {
            self.base_slots[(a.0 * n + b.0) as usize] = elem;
        } else {
            self.ext_slots.insert((a.0, b.0), elem);
        }
    }

    fn make_set(&mut self, class: EdgeClass) -> u32 {
        self.stats.make_sets += 1;
        let e = self.uf.make_set();
        self.class_of.push(class);
        e
    }

    fn union(&mut self, a: u32, b: u32) {
        debug_assert_eq!(self.class_of[a as usize], self.class_of[b as usize]);
        self.stats.unions += 1;
        self.uf.union(a, b);
    }

    /// Creates both directed orientations of the edge `{a, b}`, unions
    /// them together and into the find-class of `class`. Registering the
    /// same edge with the same class again is a no-op.
    pub fn register_edge(&mut self, a: Endpoint, b: Endpoint, class: EdgeClass) {
        assert!(a != b, "no self-edges");
        if let Some(existing) = self.slot(a, b) {
            debug_assert_eq!(
                self.class_of[existing as usize], class,
                "edge re-registered with a different class"
            );
            return;
        }
        let e1 = self.make_set(class);
        let e2 = self.make_set(class);
        self.put_slot(a, b, e1);
        self.put_slot(b, a, e2);
        self.union(e1, e2);
        match self.anchors.get(&class) {
            Some(&anchor) => self.union(anchor, e1),
            None => {
                self.anchors.insert(class, e1);
            }
        }
    }

    /// The canonical find-representative of the edge between `a` and `b`,
    /// or `None` if that edge was never established.
    pub fn representative(&mut self, a: Endpoint, b: Endpoint) -> Option<u32> {
        let slot = self.slot(a, b)?;
        self.stats.finds += 1;
        Some(self.uf.find(slot))
    }

    /// The edge class between `a` and `b`, or `None` when undefined
    /// (e.g. a clan that is not visible from a vertex).
    pub fn edge_class(&mut self, a: Endpoint, b: Endpoint) -> Option<EdgeClass> {
        let root = self.representative(a, b)?;
        Some(self.class_of[root as usize])
    }

    pub fn stats(&self) -> RegistryStats {
        let mut s = self.stats;
        s.visits = self.uf.visits;
        s
    }

    /// Checks that ids form a valid insertion order permutation.
    pub(crate) fn check_order(&self, order: &[ItemId]) -> Result<()> {
        let mut seen = vec![false; self.n_vertices];
        for id in order {
            if id.index() >= self.n_vertices || seen[id.index()] {
                return Err(Error::input("insertion order must be a permutation of the universe"));
            }
            seen[id.index()] = true;
        }
        if seen.iter().all(|&s| s) {
            Ok(())
        } else {
            Err(Error::input("insertion order must cover every item"))
        }
    }
}
