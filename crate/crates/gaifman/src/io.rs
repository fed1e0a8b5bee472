//! Text formats: graph files, implication files, the lattice report and
//! DOT rendering of decomposition trees.
//!
//! Graph file: a line `n <count>`, an optional `labels <l0> <l1> ...`
//! line, then one `u v <class>` line per pair; unlisted pairs default to
//! class 0 and `#` starts a comment.
//!
//! Implication file: one implication per line as `x y -> z1 z2 ...` with
//! item labels as tokens, `#` comments, and an optional `items:` header
//! declaring the universe (needed for items that appear in no
//! implication).

use crate::decompose::{DecompositionTree, NodeId, NodeKind};
use crate::error::{Error, Result};
use crate::implications::{ClosureLattice, ImplicationSet};
use crate::model::{EdgeClass, ItemId, TwoStructure};

pub fn parse_graph_file(text: &str) -> Result<TwoStructure> {
    let mut n: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut pairs: Vec<(u32, u32, EdgeClass)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let head = tokens.next().unwrap();
        let err = |msg: &str| Error::Parse { line: lineno + 1, msg: msg.to_string() };
        match head {
            "n" => {
                let count = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| err("expected `n <count>`"))?;
                if n.replace(count).is_some() {
                    return Err(err("duplicate `n` line"));
                }
            }
            "labels" => {
                let ls: Vec<String> = tokens.map(|t| t.to_string()).collect();
                let n = n.ok_or_else(|| err("`labels` must follow the `n` line"))?;
                if ls.len() != n {
                    return Err(err("label count does not match `n`"));
                }
                labels = Some(ls);
            }
            _ => {
                let n = n.ok_or_else(|| err("edge line before the `n` line"))?;
                let u = head.parse::<u32>().map_err(|_| err("bad vertex"))?;
                let v = tokens
                    .next()
                    .and_then(|t| t.parse::<u32>().ok())
                    .ok_or_else(|| err("expected `u v <class>`"))?;
                let class = tokens
                    .next()
                    .and_then(|t| t.parse::<u32>().ok())
                    .ok_or_else(|| err("expected `u v <class>`"))?;
                if tokens.next().is_some() {
                    return Err(err("trailing tokens on edge line"));
                }
                if u == v {
                    return Err(err("self-pair"));
                }
                if u as usize >= n || v as usize >= n {
                    return Err(err("vertex out of range"));
                }
                pairs.push((u, v, EdgeClass(class)));
            }
        }
    }
    let n = n.ok_or_else(|| Error::input("graph file needs an `n <count>` line"))?;
    let labels = labels.unwrap_or_else(|| {
        (0..n)
            .map(|i| if n <= 26 { ((b'a' + i as u8) as char).to_string() } else { format!("v{i}") })
            .collect()
    });
    TwoStructure::from_classified_pairs(labels, &pairs)
}

/// Deterministic inverse of `parse_graph_file`; class-0 pairs are omitted.
pub fn render_graph_file(s: &TwoStructure) -> String {
    let mut out = format!("n {}\n", s.len());
    out.push_str("labels");
    for item in s.items() {
        out.push(' ');
        out.push_str(&item.label);
    }
    out.push('\n');
    for i in 0..s.len() {
        for j in (i + 1)..s.len() {
            let c = s.class(ItemId(i as u32), ItemId(j as u32));
            if c != EdgeClass(0) {
                out.push_str(&format!("{i} {j} {c}\n"));
            }
        }
    }
    out
}

pub fn parse_implications(text: &str) -> Result<ImplicationSet> {
    struct Raw {
        line: usize,
        x: String,
        y: String,
        z: Vec<String>,
    }
    let mut declared: Vec<String> = Vec::new();
    let mut raws: Vec<Raw> = Vec::new();
    let mut order: Vec<String> = Vec::new();
    let mut known = std::collections::BTreeSet::new();
    let note = |order: &mut Vec<String>, known: &mut std::collections::BTreeSet<String>, t: &str| {
        if known.insert(t.to_string()) {
            order.push(t.to_string());
        }
    };
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("items:") {
            for t in rest.split_whitespace() {
                declared.push(t.to_string());
                note(&mut order, &mut known, t);
            }
            continue;
        }
        let err = |msg: &str| Error::Parse { line: lineno + 1, msg: msg.to_string() };
        let (lhs, rhs) = line.split_once("->").ok_or_else(|| err("expected `x y -> z1 z2 ...`"))?;
        let ants: Vec<&str> = lhs.split_whitespace().collect();
        if ants.len() != 2 {
            return Err(err("antecedent must be exactly two items"));
        }
        let cons: Vec<&str> = rhs.split_whitespace().collect();
        note(&mut order, &mut known, ants[0]);
        note(&mut order, &mut known, ants[1]);
        for c in &cons {
            note(&mut order, &mut known, c);
        }
        raws.push(Raw {
            line: lineno + 1,
            x: ants[0].to_string(),
            y: ants[1].to_string(),
            z: cons.into_iter().map(|c| c.to_string()).collect(),
        });
    }
    let mut set = ImplicationSet::new(order);
    for raw in raws {
        let lookup = |l: &str| set.item_by_label(l).expect("every mentioned item is interned");
        let x = lookup(&raw.x);
        let y = lookup(&raw.y);
        let z: Vec<ItemId> = raw.z.iter().map(|l| lookup(l)).collect();
        set.add(x, y, z).map_err(|e| Error::Parse { line: raw.line, msg: e.to_string() })?;
    }
    Ok(set)
}

/// Deterministic inverse of `parse_implications`: an `items:` line
/// declaring the universe followed by implications in pair order.
pub fn render_implications(set: &ImplicationSet) -> String {
    let mut out = String::from("items:");
    for l in set.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for imp in set.implications() {
        out.push_str(set.label(imp.antecedent.0));
        out.push(' ');
        out.push_str(set.label(imp.antecedent.1));
        out.push_str(" ->");
        for z in &imp.consequent {
            out.push(' ');
            out.push_str(set.label(*z));
        }
        out.push('\n');
    }
    out
}

/// Plain-text closure lattice: one closed set per line, children
/// indented under their parents starting from the universe, strong sets
/// marked with `*`. Shared children reappear under each parent.
pub fn lattice_report(lattice: &ClosureLattice) -> String {
    let mut out = String::new();
    let sets = lattice.closed_sets();
    let universe: Vec<ItemId> = match sets.iter().max_by_key(|s| s.len()) {
        Some(u) => u.clone(),
        None => return out,
    };
    fn emit(lattice: &ClosureLattice, set: &[ItemId], depth: usize, out: &mut String) {
        if set.is_empty() {
            return;
        }
        out.push_str(&"  ".repeat(depth));
        let labels: Vec<&str> = set.iter().map(|&i| lattice.labels()[i.index()].as_str()).collect();
        out.push_str(&labels.join(" "));
        if lattice.is_strong(set) {
            out.push_str(" *");
        }
        out.push('\n');
        let mut kids = lattice.children_of(set).unwrap_or_default();
        kids.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        for kid in kids {
            emit(lattice, &kid, depth + 1, out);
        }
    }
    emit(lattice, &universe, 0, &mut out);
    out
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    h
}

fn dot_label(raw: &str) -> String {
    let mut label: String = raw.chars().take(64).collect();
    if raw.chars().count() > 64 {
        label.truncate(label.char_indices().nth(56).map(|(i, _)| i).unwrap_or(label.len()));
        label.push_str(&format!("~{:06x}", fnv1a(raw.as_bytes()) & 0xFF_FFFF));
    }
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

fn edge_style(class: EdgeClass) -> String {
    match class.0 {
        1 => "solid".into(),
        2 => "dashed".into(),
        3 => "dotted".into(),
        4 => "bold".into(),
        _ => "solid".into(),
    }
}

/// Renders a decomposition tree as DOT: every internal node becomes a
/// box showing its quotient as one dot per child, cross-edges drawn per
/// class (class 0 omitted), leaves labeled, synthetic grouped leaves
/// drawn as dashed boxes. Output is byte-deterministic: children are
/// ordered by minimum contained item.
pub fn render_dot(tree: &DecompositionTree) -> String {
    let mut out = String::from("digraph decomposition {\n");
    out.push_str("  graph [compound=true, fontname=\"Helvetica\"];\n");
    out.push_str("  node [fontname=\"Helvetica\"];\n");
    out.push_str("  edge [arrowhead=none];\n");
    let mut counter = 0usize;
    if !tree.structure().is_empty() {
        render_node(tree, tree.root(), 1, &mut counter, &mut out);
    }
    out.push_str("}\n");
    out
}

/// Emits `node` and returns the DOT id of its representative vertex (the
/// anchor an incoming link should point at) plus, for internal nodes,
/// the cluster name for `lhead`.
fn render_node(
    tree: &DecompositionTree,
    node: NodeId,
    indent: usize,
    counter: &mut usize,
    out: &mut String,
) -> (String, Option<String>) {
    let pad = "  ".repeat(indent);
    match tree.kind(node) {
        NodeKind::Leaf(item) => {
            let id = format!("leaf{}", item.0);
            let label = dot_label(tree.structure().label(*item));
            out.push_str(&format!("{pad}{id} [shape=box, label=\"{label}\"];\n"));
            (id, None)
        }
        NodeKind::Others(count) => {
            let id = format!("others{}", *counter);
            *counter += 1;
            out.push_str(&format!(
                "{pad}{id} [shape=box, style=dashed, label=\"Others({count})\"];\n"
            ));
            (id, None)
        }
        NodeKind::Complete(_) | NodeKind::Primitive => {
            let me = *counter;
            *counter += 1;
            let cluster = format!("cluster{me}");
            out.push_str(&format!("{pad}subgraph {cluster} {{\n"));
            out.push_str(&format!("{pad}  graph [label=\"\", style=rounded];\n"));

            // children ordered by minimum contained item, synthetic last
            let mut children: Vec<NodeId> = tree.children(node).to_vec();
            children.sort_by_key(|&c| {
                tree.vertices(c).first().map(|i| i.0).unwrap_or(u32::MAX)
            });

            let dots: Vec<String> =
                (0..children.len()).map(|i| format!("q{me}_{i}")).collect();
            for d in &dots {
                out.push_str(&format!("{pad}  {d} [shape=point, width=0.12];\n"));
            }

            // quotient cross-edges, class-0 omitted
            let s = tree.structure();
            for i in 0..children.len() {
                for j in (i + 1)..children.len() {
                    let (ri, rj) = (tree.vertices(children[i]).first(), tree.vertices(children[j]).first());
                    let (Some(&ri), Some(&rj)) = (ri, rj) else { continue };
                    let class = s.class(ri, rj);
                    if class == EdgeClass(0) {
                        continue;
                    }
                    let style = edge_style(class);
                    let extra = if class.0 > 4 { format!(", label=\"c{}\"", class.0) } else { String::new() };
                    out.push_str(&format!(
                        "{pad}  {} -> {} [style={style}{extra}];\n",
                        dots[i], dots[j]
                    ));
                }
            }
            out.push_str(&format!("{pad}}}\n"));

            // link each quotient dot down to its child
            for (i, &child) in children.iter().enumerate() {
                let (anchor, lhead) = render_node(tree, child, indent, counter, out);
                match lhead {
                    Some(cl) => out.push_str(&format!(
                        "{pad}{} -> {anchor} [lhead={cl}, style=solid];\n",
                        dots[i]
                    )),
                    None => out.push_str(&format!("{pad}{} -> {anchor} [style=solid];\n", dots[i])),
                }
            }
            (dots.first().cloned().unwrap_or_else(|| format!("q{me}_0")), Some(cluster))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::decompose;
    use crate::implications::{generate_implications, LATTICE_GUARD};

    fn nested_triple_graph_file() -> &'static str {
        "n 5\nlabels a b c d e\n0 3 1\n0 4 1\n1 3 1\n1 4 1\n2 3 1\n2 4 1\n3 4 1\n"
    }

    #[test]
    fn graph_file_round_trip() {
        let s = parse_graph_file(nested_triple_graph_file()).unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(s.class(ItemId(0), ItemId(3)), EdgeClass(1));
        assert_eq!(s.class(ItemId(0), ItemId(1)), EdgeClass(0));
        let rendered = render_graph_file(&s);
        let again = parse_graph_file(&rendered).unwrap();
        assert_eq!(again, s);
    }

    #[test]
    fn lone_count_line_is_an_edgeless_structure() {
        let s = parse_graph_file("n 2\n").unwrap();
        assert_eq!(s.class(ItemId(0), ItemId(1)), EdgeClass(0));
    }

    #[test]
    fn tri_class_graph_file() {
        let text = "n 5\nlabels a b c d e\n0 2 1\n1 2 2\n3 4 1\n";
        let s = parse_graph_file(text).unwrap();
        let b = generate_implications(&s);
        assert_eq!(b.len(), 9);
    }

    #[test]
    fn graph_file_errors() {
        assert!(parse_graph_file("n 3\n0 0 1\n").is_err());
        assert!(parse_graph_file("n 3\n0 7 1\n").is_err());
        assert!(parse_graph_file("n 3\n0 1 1\n1 0 2\n").is_err());
        assert!(parse_graph_file("0 1 1\n").is_err());
    }

    #[test]
    fn implication_file_round_trip() {
        let text = "\
# six implications
a d -> b c
a e -> b c
b d -> a c
b e -> a c
c d -> a b
c e -> a b
";
        let set = parse_implications(text).unwrap();
        assert_eq!(set.len(), 6);
        assert_eq!(set.labels(), &["a", "d", "b", "c", "e"]);
        let rendered = render_implications(&set);
        let again = parse_implications(&rendered).unwrap();
        assert_eq!(again, set);
    }

    #[test]
    fn comments_only_file_is_empty() {
        let set = parse_implications("# nothing\n\n# here\n").unwrap();
        assert!(set.is_empty());
        assert_eq!(set.universe_len(), 0);
    }

    #[test]
    fn items_header_declares_extra_universe_members() {
        let set = parse_implications("items: a b c\n").unwrap();
        assert!(set.is_empty());
        assert_eq!(set.labels(), &["a", "b", "c"]);
    }

    #[test]
    fn implication_file_errors() {
        assert!(parse_implications("a -> b\n").is_err());
        assert!(parse_implications("a b c -> d\n").is_err());
        assert!(parse_implications("a b -> a\n").is_err());
        assert!(parse_implications("a b -> c\na b -> d\n").is_err());
        // an empty consequent is dropped rather than rejected
        let set = parse_implications("a b ->\n").unwrap();
        assert!(set.is_empty());
        assert_eq!(set.universe_len(), 2);
    }

    #[test]
    fn lattice_report_marks_strong_sets() {
        let s = parse_graph_file(nested_triple_graph_file()).unwrap();
        let b = generate_implications(&s);
        let lattice = b.enumerate_closed_sets(LATTICE_GUARD).unwrap();
        let report = lattice_report(&lattice);
        let first = report.lines().next().unwrap();
        assert_eq!(first, "a b c d e *");
        assert!(report.lines().any(|l| l.trim_start() == "a b c *"));
        assert!(report.lines().any(|l| l.trim_start() == "d e"));
    }

    #[test]
    fn dot_output_is_stable() {
        let s = parse_graph_file(nested_triple_graph_file()).unwrap();
        let tree = decompose(&s);
        let dot = render_dot(&tree);
        assert_eq!(dot, render_dot(&tree));
        assert!(dot.contains("subgraph cluster0"));
        assert!(dot.contains("leaf3 [shape=box, label=\"d\"]"));
        // inner box of three disconnected dots: cluster1 has no cross-edges
        let cluster1: Vec<&str> = dot
            .lines()
            .skip_while(|l| !l.contains("subgraph cluster1"))
            .take_while(|l| !l.trim().starts_with('}'))
            .collect();
        assert!(cluster1.iter().all(|l| !l.contains("->")));
    }

    #[test]
    fn dot_single_leaf() {
        let s = TwoStructure::from_edge_list(1, &[]).unwrap();
        let tree = decompose(&s);
        let dot = render_dot(&tree);
        assert!(dot.contains("leaf0 [shape=box, label=\"a\"]"));
    }

    #[test]
    fn long_labels_are_truncated_with_a_stable_suffix() {
        let long = "x".repeat(100);
        let a = dot_label(&long);
        let b = dot_label(&long);
        assert_eq!(a, b);
        assert!(a.chars().count() <= 64);
        assert_ne!(dot_label(&"y".repeat(100)), a);
    }
}
