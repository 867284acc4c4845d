mod common;

use common::{member, perturb};
use proptest::prelude::*;
use ttwfree::decompose::decompose_with_budget;
use ttwfree::oracles::{find_pattern, is_bipartite, kuratowski_witness, PatternKind};
use ttwfree::synthesis::families;
use ttwfree::{analyze, brute_force_verdict, decompose, planarity_verdict, potential, Graph, SeparatorSplit};

fn check_flags(g: &Graph) -> Result<(), TestCaseError> {
    let r = analyze(g).unwrap();
    let b = brute_force_verdict(g).unwrap();
    prop_assert_eq!(r.ttw_free, b.ttw_free, "ttw {:?}", g.edges().collect::<Vec<_>>());
    prop_assert_eq!(r.even_wheel_free, b.even_wheel_free);
    prop_assert_eq!(r.even_hole_free, b.even_hole_free);
    prop_assert_eq!(r.bipartite_theta_wac_free, b.bipartite_theta_wac_free);
    if r.ttw_free {
        let t = decompose(g).unwrap();
        prop_assert_eq!(planarity_verdict(&t).unwrap(), kuratowski_witness(g).unwrap().is_none());
    }
    Ok(())
}

const PROPERTIES: [PatternKind; 8] = [
    PatternKind::Theta,
    PatternKind::Triangle,
    PatternKind::Wac,
    PatternKind::Turtle,
    PatternKind::CWac,
    PatternKind::EvenHole,
    PatternKind::Prism,
    PatternKind::EvenWheel,
];

/// For every separator of the tree: the node is free of each pattern iff
/// all of its blocks are, and likewise for bipartiteness and atomicity.
fn check_preservation(g: &Graph) -> Result<(), TestCaseError> {
    let Ok(t) = decompose_with_budget(g, Some(usize::MAX)) else { return Ok(()) };
    for node in &t.nodes {
        let Some(sep) = &node.separator else { continue };
        let blocks: Vec<&Graph> = node.children.iter().map(|&c| &t.nodes[c].graph).collect();
        for kind in PROPERTIES {
            let free = |h: &Graph| find_pattern(h, kind).unwrap().is_none();
            prop_assert_eq!(free(&node.graph), blocks.iter().all(|b| free(b)), "{} across {}", kind, sep.kind_name());
        }
        let bip = |h: &Graph| is_bipartite(h).is_bipartite();
        prop_assert_eq!(bip(&node.graph), blocks.iter().all(|b| bip(b)));
        if !matches!(sep, SeparatorSplit::Clique { .. }) {
            let atomic = |h: &Graph| ttwfree::find_clique_separator(h).is_none();
            prop_assert_eq!(atomic(&node.graph), blocks.iter().all(|b| atomic(b)));
        }
    }
    Ok(())
}

#[test]
fn named_graphs() {
    for g in [
        Graph::cycle(6),
        families::petersen(),
        families::cube(),
        Graph::complete_bipartite(2, 3),
        families::full_daisy(4).0,
        families::two_wheels_on_2_separator(),
    ] {
        let r = analyze(&g).unwrap();
        let b = brute_force_verdict(&g).unwrap();
        assert_eq!((r.ttw_free, r.even_wheel_free, r.even_hole_free, r.bipartite_theta_wac_free),
            (b.ttw_free, b.even_wheel_free, b.even_hole_free, b.bipartite_theta_wac_free));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn members_agree_with_oracles(seed in 0u64..1_000_000) {
        let g = member(seed, 1, 12);
        prop_assert!(analyze(&g).unwrap().ttw_free);
        check_flags(&g)?;
    }

    #[test]
    fn perturbed_members_agree_with_oracles(seed in 0u64..1_000_000, k in 1usize..4) {
        let g = perturb(&member(seed, 4, 12), seed, k);
        check_flags(&g)?;
    }

    #[test]
    fn random_graphs_agree_with_oracles(seed in 0u64..1_000_000, p in 0.1f64..0.5) {
        check_flags(&families::random_graph(seed, 9, p))?;
    }

    #[test]
    fn separators_preserve_patterns(seed in 0u64..1_000_000, k in 0usize..3) {
        let g = perturb(&member(seed, 4, 12), seed ^ 0x5a5a, k);
        check_preservation(&g)?;
    }

    #[test]
    fn node_budget_and_potential(seed in 0u64..1_000_000) {
        let g = member(seed, 1, 40);
        let t = decompose(&g).unwrap();
        prop_assert!(t.len() < 2 * g.n());
        for node in &t.nodes {
            let f = ttwfree::decompose::potential_of_type(&node.graph, node.node_type);
            prop_assert_eq!(f, potential(&node.graph));
            if node.is_leaf() {
                prop_assert!(f >= 1);
            } else {
                let sum: i64 = node.children.iter().map(|&c| potential(&t.nodes[c].graph)).sum();
                prop_assert!(f >= sum, "f = {} < {}", f, sum);
            }
        }
    }
}
