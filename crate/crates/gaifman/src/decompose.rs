//! Incremental strong-clan decomposition.
//!
//! Vertices are inserted one at a time into a decomposition tree whose
//! internal nodes are exactly the nonsingleton strong clans of the
//! inserted sub-structure. Each internal node is complete (all quotient
//! cross-edges in one class, its color) or primitive (only trivial
//! subclans in the quotient).
//!
//! Inserting a vertex classifies each child of the current clan as
//! visible with the clan color, visible with another color, or
//! nonvisible, then dispatches on the clan type. Nonvisible children are
//! split into their finest visible strong subclans. Edges from external
//! vertices to clans are kept in a union-find registry; a clan whose
//! vertex set changes gets a fresh registry id so stale entries are
//! never consulted again.

use crate::error::{Error, Result};
use crate::model::{EdgeClass, ItemId, TwoStructure};
use crate::registry::{EdgeRegistry, Endpoint};
use std::collections::BTreeMap;

/// Index of a node in the tree arena.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    fn index(self) -> usize {
        self.0 as usize
    }
}

/// Shape of a tree node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    /// A single item.
    Leaf(ItemId),
    /// Synthetic leaf standing in for `count` collapsed siblings.
    Others(u32),
    /// All quotient cross-edges share this color. `None` only on the
    /// trivial single-child root of a one-item tree.
    Complete(Option<EdgeClass>),
    /// The quotient has only trivial subclans.
    Primitive,
}

#[derive(Debug, Clone)]
struct NodeData {
    kind: NodeKind,
    children: Vec<NodeId>,
    /// Sorted vertex set of the subtree.
    vertices: Vec<ItemId>,
}

/// How each child of a clan relates to a vertex being inserted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VisibilityPartition {
    /// Children seen with the color of the clan (complete clans only).
    pub with_clan_color: Vec<NodeId>,
    /// Other visible children, each with the color it is seen with.
    pub visible: Vec<(NodeId, EdgeClass)>,
    /// Children whose members the vertex sees in different ways.
    pub nonvisible: Vec<NodeId>,
}

/// Which insertion rule fired at the top of an insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertCase {
    /// Empty tree or single-child root.
    Initial,
    /// Complete clan, vertex seen with the clan color everywhere: joins the quotient.
    JoinComplete,
    /// Complete clan, some but not all children seen with the clan color:
    /// the rest move into a sibling subclan that absorbs the vertex.
    SubclanComplete,
    /// Complete clan uniformly visible with another color: new two-child root above it.
    SuperiorFromComplete,
    /// Complete clan becomes primitive; visible children group by color,
    /// nonvisible children split.
    CompleteBecomesPrimitive,
    /// Primitive clan with a child that sees the rest exactly as the vertex
    /// does: recurse into that child.
    RecurseIntoLikeChild,
    /// Primitive clan uniformly visible: new two-child complete clan above it.
    SuperiorFromPrimitive,
    /// Primitive clan absorbs the vertex; nonvisible children split.
    JoinPrimitive,
}

/// A strong-clan decomposition tree over (a prefix of) a 2-structure.
#[derive(Debug, Clone)]
pub struct DecompositionTree {
    structure: TwoStructure,
    nodes: Vec<NodeData>,
    root: Option<NodeId>,
    registry: EdgeRegistry,
    inserted: Vec<bool>,
    leaf_ids: Vec<Option<NodeId>>,
    insert_cases: Vec<InsertCase>,
}

impl DecompositionTree {
    /// An empty tree over `structure`; all base edges are registered.
    pub fn new(structure: &TwoStructure) -> Self {
        DecompositionTree {
            registry: EdgeRegistry::new(structure),
            structure: structure.clone(),
            nodes: Vec::new(),
            root: None,
            inserted: vec![false; structure.len()],
            leaf_ids: vec![None; structure.len()],
            insert_cases: Vec::new(),
        }
    }

    pub fn structure(&self) -> &TwoStructure {
        &self.structure
    }

    pub fn root(&self) -> NodeId {
        self.root.expect("empty tree has no root")
    }

    pub fn is_inserted(&self, item: ItemId) -> bool {
        self.inserted[item.index()]
    }

    pub fn kind(&self, node: NodeId) -> &NodeKind {
        &self.nodes[node.index()].kind
    }

    pub fn children(&self, node: NodeId) -> &[NodeId] {
        &self.nodes[node.index()].children
    }

    pub fn vertices(&self, node: NodeId) -> &[ItemId] {
        &self.nodes[node.index()].vertices
    }

    pub fn is_leaf(&self, node: NodeId) -> bool {
        matches!(self.nodes[node.index()].kind, NodeKind::Leaf(_) | NodeKind::Others(_))
    }

    /// The registry endpoint of an internal node.
    pub fn clan_endpoint(&self, node: NodeId) -> Endpoint {
        self.registry.clan(node.0)
    }

    pub fn registry_mut(&mut self) -> &mut EdgeRegistry {
        &mut self.registry
    }

    /// Insertion rule fired by each `insert` call so far, in order.
    pub fn insert_cases(&self) -> &[InsertCase] {
        &self.insert_cases
    }

    /// All internal (clan) nodes currently reachable from the root.
    pub fn internal_nodes(&self) -> Vec<NodeId> {
        let mut out = Vec::new();
        if let Some(root) = self.root {
            let mut stack = vec![root];
            while let Some(n) = stack.pop() {
                if !self.is_leaf(n) {
                    out.push(n);
                    stack.extend(self.children(n).iter().copied());
                }
            }
        }
        out
    }

    fn alloc(&mut self, kind: NodeKind, children: Vec<NodeId>) -> NodeId {
        let mut vertices: Vec<ItemId> =
            children.iter().flat_map(|c| self.nodes[c.index()].vertices.iter().copied()).collect();
        vertices.sort_unstable();
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(NodeData { kind, children, vertices });
        id
    }

    /// Arena hooks for trees assembled by other means (the brute-force
    /// oracle); such trees support canonical-form and read access only.
    pub(crate) fn manual_leaf(&mut self, item: ItemId) -> NodeId {
        self.leaf(item)
    }

    pub(crate) fn manual_internal(&mut self, kind: NodeKind, children: Vec<NodeId>) -> NodeId {
        self.alloc(kind, children)
    }

    pub(crate) fn adopt_manual_root(&mut self, root: NodeId) {
        self.inserted.iter_mut().for_each(|f| *f = true);
        self.root = Some(root);
    }

    fn leaf(&mut self, item: ItemId) -> NodeId {
        if let Some(id) = self.leaf_ids[item.index()] {
            return id;
        }
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(NodeData {
            kind: NodeKind::Leaf(item),
            children: Vec::new(),
            vertices: vec![item],
        });
        self.leaf_ids[item.index()] = Some(id);
        id
    }

    /// The color with which `x` sees `child`, if `x` sees it at all.
    /// Leaves resolve through base edges, clans through packed edges.
    fn child_view(&mut self, x: ItemId, child: NodeId) -> Option<EdgeClass> {
        let target = match self.nodes[child.index()].kind {
            NodeKind::Leaf(item) => self.registry.vertex(item),
            _ => self.registry.clan(child.0),
        };
        let xe = self.registry.vertex(x);
        self.registry.edge_class(xe, target)
    }

    /// Classifies every child of `clan` against the vertex `x`.
    pub fn classify_visibility(&mut self, x: ItemId, clan: NodeId) -> VisibilityPartition {
        let children = self.nodes[clan.index()].children.clone();
        let clan_color = match self.nodes[clan.index()].kind {
            NodeKind::Complete(c) => c,
            _ => None,
        };
        let mut part = VisibilityPartition::default();
        for child in children {
            match self.child_view(x, child) {
                Some(c) if Some(c) == clan_color => part.with_clan_color.push(child),
                Some(c) => part.visible.push((child, c)),
                None => part.nonvisible.push(child),
            }
        }
        part
    }

    /// Registers edges from every external vertex that sees all quotient
    /// members of `node` uniformly. Used when a clan node is created.
    fn pack_full(&mut self, node: NodeId) {
        let members = self.nodes[node.index()].children.clone();
        let mut in_node = vec![false; self.structure.len()];
        for v in &self.nodes[node.index()].vertices {
            in_node[v.index()] = true;
        }
        let clan_ep = self.registry.clan(node.0);
        for (w, _) in in_node.iter().enumerate().filter(|&(_, inside)| !inside) {
            let w_id = ItemId(w as u32);
            let mut seen: Option<EdgeClass> = None;
            let mut uniform = true;
            for &m in &members {
                match (self.child_view(w_id, m), seen) {
                    (Some(c), None) => seen = Some(c),
                    (Some(c), Some(first)) if c == first => {}
                    _ => {
                        uniform = false;
                        break;
                    }
                }
            }
            if uniform {
                if let Some(c) = seen {
                    let we = self.registry.vertex(w_id);
                    self.registry.register_edge(we, clan_ep, c);
                }
            }
        }
    }

    /// Re-derives the packed edges of a clan that grew by exactly the new
    /// vertex `v`: an external vertex sees the grown clan iff it saw the
    /// old one and sees `v` with the same color.
    fn pack_grown(&mut self, node: NodeId, old: NodeId, v: ItemId) {
        let mut in_node = vec![false; self.structure.len()];
        for u in &self.nodes[node.index()].vertices {
            in_node[u.index()] = true;
        }
        let old_ep = self.registry.clan(old.0);
        let new_ep = self.registry.clan(node.0);
        for (w, _) in in_node.iter().enumerate().filter(|&(_, inside)| !inside) {
            let w_id = ItemId(w as u32);
            let we = self.registry.vertex(w_id);
            let Some(c1) = self.registry.edge_class(we, old_ep) else { continue };
            let ve = self.registry.vertex(v);
            if self.registry.edge_class(we, ve) == Some(c1) {
                self.registry.register_edge(we, new_ep, c1);
            }
        }
    }

    /// Copies packed edges onto a fresh node with the same vertex set.
    fn copy_packed(&mut self, node: NodeId, old: NodeId) {
        let mut in_node = vec![false; self.structure.len()];
        for u in &self.nodes[node.index()].vertices {
            in_node[u.index()] = true;
        }
        let old_ep = self.registry.clan(old.0);
        let new_ep = self.registry.clan(node.0);
        for (w, _) in in_node.iter().enumerate().filter(|&(_, inside)| !inside) {
            let we = self.registry.vertex(ItemId(w as u32));
            if let Some(c) = self.registry.edge_class(we, old_ep) {
                self.registry.register_edge(we, new_ep, c);
            }
        }
    }

    /// Splits a clan that `x` cannot see into the maximal strong clans
    /// below it that `x` does see. Primitive clans keep their visible
    /// children; complete clans group visible children by the color `x`
    /// sees them with, each group of two or more becoming one new clan
    /// with the old clan's color.
    fn split(&mut self, clan: NodeId, x: ItemId) -> Vec<NodeId> {
        debug_assert!(
            {
                let ep = self.registry.clan(clan.0);
                let xe = self.registry.vertex(x);
                self.registry.edge_class(xe, ep).is_none()
            },
            "split precondition: the vertex must not see the clan"
        );
        let children = self.nodes[clan.index()].children.clone();
        let kind = self.nodes[clan.index()].kind.clone();
        let mut out = Vec::new();
        match kind {
            NodeKind::Primitive => {
                for child in children {
                    if self.child_view(x, child).is_some() {
                        out.push(child);
                    } else {
                        out.extend(self.split(child, x));
                    }
                }
            }
            NodeKind::Complete(color) => {
                let color = color.expect("complete clan with two or more children has a color");
                let mut groups: BTreeMap<EdgeClass, Vec<NodeId>> = BTreeMap::new();
                for child in children {
                    match self.child_view(x, child) {
                        Some(c) => groups.entry(c).or_default().push(child),
                        None => out.extend(self.split(child, x)),
                    }
                }
                for (_, group) in groups {
                    if group.len() == 1 {
                        out.push(group[0]);
                    } else {
                        let node = self.alloc(NodeKind::Complete(Some(color)), group);
                        self.pack_full(node);
                        out.push(node);
                    }
                }
            }
            NodeKind::Leaf(_) | NodeKind::Others(_) => unreachable!("leaves are always visible"),
        }
        out
    }

    /// New clan `{m, v}` colored by the edge between them.
    fn make_pair(&mut self, m: NodeId, v: ItemId) -> NodeId {
        let color = self.child_view(v, m).expect("pair partner must be visible");
        let leaf = self.leaf(v);
        let node = self.alloc(NodeKind::Complete(Some(color)), vec![m, leaf]);
        self.pack_full(node);
        node
    }

    /// For a primitive clan: the unique child that sees every other child
    /// exactly as `x` does, if any.
    fn like_child(&mut self, clan: NodeId, x: ItemId) -> Option<usize> {
        let children = self.nodes[clan.index()].children.clone();
        let views: Vec<Option<EdgeClass>> =
            children.iter().map(|&c| self.child_view(x, c)).collect();
        let mut found = None;
        for (i, &cand) in children.iter().enumerate() {
            let rep = self.nodes[cand.index()].vertices[0];
            let mut like = true;
            for (j, &other) in children.iter().enumerate() {
                if i == j {
                    continue;
                }
                let other_rep = self.nodes[other.index()].vertices[0];
                if views[j] != Some(self.structure.class(rep, other_rep)) {
                    like = false;
                    break;
                }
            }
            if like {
                debug_assert!(found.is_none(), "at most one child can mirror the new vertex");
                found = Some(i);
                if !cfg!(debug_assertions) {
                    break;
                }
            }
        }
        found
    }

    fn record(slot: &mut Option<InsertCase>, case: InsertCase) {
        if slot.is_none() {
            *slot = Some(case);
        }
    }

    /// Inserts `x` into the subtree rooted at `clan`, returning the id of
    /// the updated clan. Nodes whose vertex set changes are re-allocated.
    fn insert_into(&mut self, clan: NodeId, x: ItemId, case: &mut Option<InsertCase>) -> NodeId {
        let children = self.nodes[clan.index()].children.clone();

        // Initial case: a quotient of one element absorbs the vertex into
        // a complete clan of two; the edge color is unambiguous.
        if children.len() <= 1 {
            Self::record(case, InsertCase::Initial);
            let partner = children[0];
            let color = self.child_view(x, partner).expect("single member is always visible");
            let leaf = self.leaf(x);
            let node = self.alloc(NodeKind::Complete(Some(color)), vec![partner, leaf]);
            self.pack_full(node);
            return node;
        }

        match self.nodes[clan.index()].kind.clone() {
            NodeKind::Complete(color) => {
                let color = color.expect("complete clan with two or more children has a color");
                let part = self.classify_visibility(x, clan);

                if part.with_clan_color.len() == children.len() {
                    // Seen with the clan color everywhere: join the quotient.
                    Self::record(case, InsertCase::JoinComplete);
                    let leaf = self.leaf(x);
                    let mut kids = children;
                    kids.push(leaf);
                    let node = self.alloc(NodeKind::Complete(Some(color)), kids);
                    self.pack_grown(node, clan, x);
                    node
                } else if !part.with_clan_color.is_empty() {
                    // The children not seen with the clan color move into a
                    // sibling subclan, and the vertex descends into it.
                    Self::record(case, InsertCase::SubclanComplete);
                    let movers: Vec<NodeId> = children
                        .iter()
                        .copied()
                        .filter(|c| !part.with_clan_color.contains(c))
                        .collect();
                    let sub = if movers.len() == 1 {
                        let m = movers[0];
                        if self.is_leaf(m) {
                            self.make_pair(m, x)
                        } else {
                            self.insert_into(m, x, case)
                        }
                    } else {
                        let aux = self.alloc(NodeKind::Complete(Some(color)), movers);
                        self.pack_full(aux);
                        self.insert_into(aux, x, case)
                    };
                    let mut kids = part.with_clan_color;
                    kids.push(sub);
                    let node = self.alloc(NodeKind::Complete(Some(color)), kids);
                    self.pack_grown(node, clan, x);
                    node
                } else if part.nonvisible.is_empty()
                    && part.visible.iter().all(|&(_, c)| c == part.visible[0].1)
                {
                    // Uniformly visible with a different color: the clan and
                    // the vertex become the quotient of a superior clan.
                    Self::record(case, InsertCase::SuperiorFromComplete);
                    let q = part.visible[0].1;
                    let aux = self.alloc(NodeKind::Complete(Some(color)), children);
                    self.copy_packed(aux, clan);
                    let leaf = self.leaf(x);
                    let node = self.alloc(NodeKind::Complete(Some(q)), vec![aux, leaf]);
                    self.pack_grown(node, clan, x);
                    node
                } else {
                    // The clan turns primitive: visible children group by
                    // their seen color, nonvisible children split.
                    Self::record(case, InsertCase::CompleteBecomesPrimitive);
                    let seen: BTreeMap<NodeId, EdgeClass> = part.visible.iter().copied().collect();
                    let mut group_of: BTreeMap<EdgeClass, Vec<NodeId>> = BTreeMap::new();
                    for &(child, c) in &part.visible {
                        group_of.entry(c).or_default().push(child);
                    }
                    let mut emitted: BTreeMap<EdgeClass, bool> = BTreeMap::new();
                    let mut kids = Vec::new();
                    for child in children {
                        if let Some(&c) = seen.get(&child) {
                            let group = &group_of[&c];
                            if group.len() == 1 {
                                kids.push(child);
                            } else if !emitted.get(&c).copied().unwrap_or(false) {
                                emitted.insert(c, true);
                                let node =
                                    self.alloc(NodeKind::Complete(Some(color)), group.clone());
                                self.pack_full(node);
                                kids.push(node);
                            }
                        } else {
                            kids.extend(self.split(child, x));
                        }
                    }
                    kids.push(self.leaf(x));
                    let node = self.alloc(NodeKind::Primitive, kids);
                    self.pack_grown(node, clan, x);
                    node
                }
            }
            NodeKind::Primitive => {
                if let Some(i) = self.like_child(clan, x) {
                    // One child mirrors the vertex: recurse into it.
                    Self::record(case, InsertCase::RecurseIntoLikeChild);
                    let m = children[i];
                    let sub = if self.is_leaf(m) {
                        self.make_pair(m, x)
                    } else {
                        self.insert_into(m, x, case)
                    };
                    let mut kids = children;
                    kids[i] = sub;
                    let node = self.alloc(NodeKind::Primitive, kids);
                    self.pack_grown(node, clan, x);
                    return node;
                }
                let part = self.classify_visibility(x, clan);
                if part.nonvisible.is_empty()
                    && part.visible.iter().all(|&(_, c)| c == part.visible[0].1)
                {
                    // Uniformly visible: superior complete clan of two.
                    Self::record(case, InsertCase::SuperiorFromPrimitive);
                    let q = part.visible[0].1;
                    let aux = self.alloc(NodeKind::Primitive, children);
                    self.copy_packed(aux, clan);
                    let leaf = self.leaf(x);
                    let node = self.alloc(NodeKind::Complete(Some(q)), vec![aux, leaf]);
                    self.pack_grown(node, clan, x);
                    node
                } else {
                    // The vertex joins the quotient; nonvisible children split.
                    Self::record(case, InsertCase::JoinPrimitive);
                    let mut kids = Vec::new();
                    for child in children {
                        if part.nonvisible.contains(&child) {
                            kids.extend(self.split(child, x));
                        } else {
                            kids.push(child);
                        }
                    }
                    kids.push(self.leaf(x));
                    let node = self.alloc(NodeKind::Primitive, kids);
                    self.pack_grown(node, clan, x);
                    node
                }
            }
            NodeKind::Leaf(_) | NodeKind::Others(_) => {
                unreachable!("insertion target is always an internal node")
            }
        }
    }

    /// Inserts the next vertex at the root.
    pub fn insert(&mut self, x: ItemId) -> Result<()> {
        if x.index() >= self.structure.len() {
            return Err(Error::input(format!("item {x} outside the universe")));
        }
        if self.inserted[x.index()] {
            return Err(Error::input(format!("item {x} inserted twice")));
        }
        self.inserted[x.index()] = true;
        match self.root {
            None => {
                let leaf = self.leaf(x);
                let node = self.alloc(NodeKind::Complete(None), vec![leaf]);
                self.pack_full(node);
                self.root = Some(node);
                self.insert_cases.push(InsertCase::Initial);
            }
            Some(root) => {
                let mut case = None;
                let new_root = self.insert_into(root, x, &mut case);
                self.root = Some(new_root);
                self.insert_cases.push(case.expect("every insertion fires a rule"));
            }
        }
        Ok(())
    }

    /// Collapses, within every complete class-0 node, groups of at least
    /// `min_leaves` leaf children into a single synthetic node. Returns a
    /// rewritten copy; the original tree is untouched.
    pub fn group_others(&self, min_leaves: usize) -> Result<DecompositionTree> {
        if min_leaves < 2 {
            return Err(Error::input("grouping threshold must be at least 2"));
        }
        let mut out = self.clone();
        if let Some(root) = out.root {
            let new_root = out.group_others_rec(root, min_leaves);
            out.root = Some(new_root);
        }
        Ok(out)
    }

    fn group_others_rec(&mut self, node: NodeId, min_leaves: usize) -> NodeId {
        if self.is_leaf(node) {
            return node;
        }
        let kind = self.nodes[node.index()].kind.clone();
        let children = self.nodes[node.index()].children.clone();
        let rewritten: Vec<NodeId> =
            children.iter().map(|&c| self.group_others_rec(c, min_leaves)).collect();
        let collapsible = matches!(kind, NodeKind::Complete(Some(EdgeClass(0))));
        if collapsible {
            let leaf_count = rewritten
                .iter()
                .filter(|&&c| matches!(self.nodes[c.index()].kind, NodeKind::Leaf(_)))
                .count();
            if leaf_count >= min_leaves {
                let mut kids: Vec<NodeId> = rewritten
                    .iter()
                    .copied()
                    .filter(|&c| !matches!(self.nodes[c.index()].kind, NodeKind::Leaf(_)))
                    .collect();
                let others = NodeId(self.nodes.len() as u32);
                self.nodes.push(NodeData {
                    kind: NodeKind::Others(leaf_count as u32),
                    children: Vec::new(),
                    vertices: Vec::new(),
                });
                kids.push(others);
                self.nodes[node.index()].children = kids;
                return node;
            }
        }
        self.nodes[node.index()].children = rewritten;
        node
    }

    /// Canonical text form: children sorted by minimum contained item,
    /// colors renamed in order of first appearance, single-child wrappers
    /// skipped. Equal trees produce equal strings, and so do trees that
    /// differ only by child order or a bijective recoloring.
    pub fn canonical_form(&self) -> String {
        match self.root {
            None => String::new(),
            Some(root) => {
                let canon = self.canon_node(root);
                let mut palette = BTreeMap::new();
                let mut s = String::new();
                render_canon(&canon, &mut palette, &mut s);
                s
            }
        }
    }

    fn canon_node(&self, node: NodeId) -> CanonNode {
        let data = &self.nodes[node.index()];
        match &data.kind {
            NodeKind::Leaf(item) => CanonNode {
                min: item.0,
                label: Some(self.structure.label(*item).to_string()),
                color: None,
                primitive: false,
                children: Vec::new(),
            },
            NodeKind::Others(count) => CanonNode {
                min: u32::MAX,
                label: Some(format!("Others({count})")),
                color: None,
                primitive: false,
                children: Vec::new(),
            },
            NodeKind::Complete(_) | NodeKind::Primitive if data.children.len() == 1 => {
                self.canon_node(data.children[0])
            }
            NodeKind::Complete(color) => {
                let mut children: Vec<CanonNode> =
                    data.children.iter().map(|&c| self.canon_node(c)).collect();
                children.sort_by_key(|c| c.min);
                CanonNode {
                    min: children.first().map(|c| c.min).unwrap_or(u32::MAX),
                    label: None,
                    color: *color,
                    primitive: false,
                    children,
                }
            }
            NodeKind::Primitive => {
                let mut children: Vec<CanonNode> =
                    data.children.iter().map(|&c| self.canon_node(c)).collect();
                children.sort_by_key(|c| c.min);
                CanonNode {
                    min: children.first().map(|c| c.min).unwrap_or(u32::MAX),
                    label: None,
                    color: None,
                    primitive: true,
                    children,
                }
            }
        }
    }
}

struct CanonNode {
    min: u32,
    label: Option<String>,
    color: Option<EdgeClass>,
    primitive: bool,
    children: Vec<CanonNode>,
}

fn render_canon(node: &CanonNode, palette: &mut BTreeMap<EdgeClass, usize>, out: &mut String) {
    if let Some(label) = &node.label {
        out.push_str(label);
        return;
    }
    if node.primitive {
        out.push('P');
    } else {
        let color = node.color.expect("complete canon nodes carry a color");
        let next = palette.len();
        let idx = *palette.entry(color).or_insert(next);
        out.push('C');
        out.push_str(&idx.to_string());
    }
    out.push('[');
    for (i, child) in node.children.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        render_canon(child, palette, out);
    }
    out.push(']');
}

/// Decomposes a 2-structure by inserting vertices in universe order.
pub fn decompose(structure: &TwoStructure) -> DecompositionTree {
    let mut tree = DecompositionTree::new(structure);
    for id in structure.item_ids() {
        tree.insert(id).expect("universe order inserts each item once");
    }
    tree
}

/// Decomposes with an explicit insertion order (a permutation of the universe).
pub fn decompose_with_order(structure: &TwoStructure, order: &[ItemId]) -> Result<DecompositionTree> {
    let mut tree = DecompositionTree::new(structure);
    tree.registry_mut().check_order(order)?;
    for &id in order {
        tree.insert(id)?;
    }
    Ok(tree)
}
