//! Randomized invariants over seeded structures.

use gaifman::*;
use proptest::prelude::*;

fn arb_structure(max_n: usize, max_classes: u32) -> impl Strategy<Value = TwoStructure> {
    (2..=max_n, 2..=max_classes, any::<u64>()).prop_map(move |(n, classes, seed)| {
        let mut rng = SplitMix64(seed);
        random_structure(&mut rng, n, classes)
    })
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = TwoStructure> {
    arb_structure(max_n, 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution(s in arb_graph(8)) {
        let c = s.complement().unwrap();
        prop_assert_eq!(c.complement().unwrap(), s);
    }

    #[test]
    fn registered_classes_are_symmetric(s in arb_structure(8, 4)) {
        let mut reg = EdgeRegistry::new(&s);
        for x in s.item_ids() {
            for y in s.item_ids() {
                if x == y {
                    continue;
                }
                let (xe, ye) = (reg.vertex(x), reg.vertex(y));
                prop_assert_eq!(reg.edge_class(xe, ye), Some(s.class(x, y)));
                prop_assert_eq!(reg.representative(xe, ye), reg.representative(ye, xe));
            }
        }
    }

    #[test]
    fn implication_text_roundtrips(s in arb_structure(8, 4)) {
        let set = generate_implications(&s);
        let parsed = io::parse_implications(&io::render_implications(&set)).unwrap();
        prop_assert_eq!(parsed, set);
    }

    #[test]
    fn graph_file_roundtrips(s in arb_structure(8, 4)) {
        let parsed = io::parse_graph_file(&io::render_graph_file(&s)).unwrap();
        prop_assert_eq!(parsed, s);
    }

    #[test]
    fn closure_is_extensive_idempotent_and_monotone(
        s in arb_structure(7, 3),
        raw in proptest::collection::vec(0u32..7, 0..5),
        extra in 0u32..7,
    ) {
        let b = generate_implications(&s);
        let n = s.len() as u32;
        let base: Vec<ItemId> = raw.iter().map(|&i| ItemId(i % n)).collect();
        let cx = b.closure(&base);
        // extensivity
        prop_assert!(base.iter().all(|i| cx.contains(i)));
        // idempotency
        prop_assert_eq!(b.closure(&cx), cx.clone());
        // monotonicity along a superset chain
        let mut bigger = base.clone();
        bigger.push(ItemId(extra % n));
        let cy = b.closure(&bigger);
        prop_assert!(cx.iter().all(|i| cy.contains(i)));
    }

    #[test]
    fn reconstruction_seeds_give_complements(s in arb_graph(8)) {
        let b = generate_implications(&s);
        let g = reconstruct(&b, true).unwrap();
        let h = reconstruct(&b, false).unwrap();
        prop_assert_eq!(h, g.complement().unwrap());
        prop_assert!(verify_roundtrip(&s));
    }

    #[test]
    fn pair_paths_ride_on_chain_edges(
        n in 3usize..8,
        seed in any::<u64>(),
    ) {
        let mut rng = SplitMix64(seed);
        let pick = |rng: &mut SplitMix64| {
            let a = rng.below(n as u64) as u32;
            let mut b = rng.below(n as u64) as u32;
            while b == a {
                b = rng.below(n as u64) as u32;
            }
            (ItemId(a.min(b)), ItemId(a.max(b)))
        };
        let p1 = pick(&mut rng);
        let mut p2 = pick(&mut rng);
        while p2 == p1 {
            p2 = pick(&mut rng);
        }
        // chain edges exist even for an empty implication set
        let set = ImplicationSet::new((0..n).map(|i| format!("i{i}")).collect());
        let g = build_pair_graph(&set);
        let path = pair_path(p1, p2, n).unwrap();
        prop_assert_eq!(path.first(), Some(&p1));
        prop_assert_eq!(path.last(), Some(&p2));
        for w in path.windows(2) {
            prop_assert!(g.contains_edge(w[0], w[1]).is_some());
        }
        // closed-form edge count, in the 1-based index convention
        let (l, k) = (p1.0.0 as usize + 1, p1.1.0 as usize + 1);
        let (m, p) = (p2.0.0 as usize + 1, p2.1.0 as usize + 1);
        let expected = if k == p {
            l.abs_diff(m)
        } else if k < p {
            (l - 1) + (p - k) + (m - 1)
        } else {
            (m - 1) + (k - p) + (l - 1)
        };
        prop_assert_eq!(path.len() - 1, expected);
    }

    #[test]
    fn decomposition_nodes_are_well_typed(s in arb_structure(8, 4)) {
        let tree = decompose(&s);
        prop_assert!(verify_tree_nodes(&tree).is_ok());
        for node in tree.internal_nodes() {
            if !matches!(tree.kind(node), NodeKind::Primitive) {
                continue;
            }
            let q = quotient_structure(&tree, node);
            // a three-part primitive quotient needs three distinct classes;
            // with two classes a primitive quotient has at least four parts
            if tree.children(node).len() == 3 {
                prop_assert!(q.distinct_classes().len() >= 3);
            }
            if q.distinct_classes().len() <= 2 {
                prop_assert!(tree.children(node).len() >= 4);
            }
        }
    }

    #[test]
    fn grouping_conserves_items(s in arb_graph(8), k in 2usize..5) {
        let tree = decompose(&s);
        let grouped = tree.group_others(k).unwrap();
        // collapsed leaves are accounted for by the synthetic counts
        let mut leaves = 0usize;
        let mut collapsed = 0usize;
        let mut stack = vec![grouped.root()];
        while let Some(n) = stack.pop() {
            match grouped.kind(n) {
                NodeKind::Leaf(_) => leaves += 1,
                NodeKind::Others(c) => collapsed += *c as usize,
                _ => stack.extend(grouped.children(n).iter().copied()),
            }
        }
        prop_assert_eq!(leaves + collapsed, s.len());
        // the ungrouped tree is untouched
        prop_assert_eq!(tree.canonical_form(), decompose(&s).canonical_form());
    }
}
