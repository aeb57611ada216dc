//! Structural invariants checked on random inputs.

use std::sync::OnceLock;

use e0graph_core::infinite::{Ball, BallGraph, GeometricGroup};
use e0graph_core::{
    excess, is_adjacent, CoxeterSystem, E0Graph, Element, FiniteGroup, GroupSpec, InvolutionSet, ValencyDistribution,
    Word,
};
use proptest::prelude::*;

const LABELS: &[&str] = &["A4", "B4", "D5", "F4", "H3", "I2(7)", "A2xB2"];

struct Fixture {
    group: FiniteGroup,
    involutions: InvolutionSet,
    graph: E0Graph,
}

fn fixtures() -> &'static [Fixture] {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| {
        LABELS
            .iter()
            .map(|label| {
                let group = FiniteGroup::from_label(label).unwrap();
                let involutions = InvolutionSet::enumerate(&group);
                let graph = E0Graph::build(&group);
                Fixture { group, involutions, graph }
            })
            .collect()
    })
}

/// A fixture index plus raw letters, reduced modulo the fixture's rank.
fn group_and_words() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (0..LABELS.len(), prop::collection::vec(0usize..64, 0..24), prop::collection::vec(0usize..64, 0..24))
}

fn element(g: &FiniteGroup, raw: &[usize]) -> Element {
    g.element_from_word(&Word::new(raw.iter().map(|r| r % g.rank() + 1).collect())).unwrap()
}

proptest! {
    #[test]
    fn word_display_roundtrip(letters in prop::collection::vec(1usize..20, 0..30)) {
        let w = Word::new(letters);
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn distribution_display_roundtrip(pairs in prop::collection::btree_map(0usize..500, 1usize..1000, 0..12)) {
        let d = ValencyDistribution::from_pairs(pairs);
        prop_assert_eq!(d.to_string().parse::<ValencyDistribution>().unwrap(), d);
    }

    #[test]
    fn length_changes_by_one((fi, a, b) in group_and_words()) {
        let g = &fixtures()[fi].group;
        let w = element(g, &a);
        let s = b.first().copied().unwrap_or(0) % g.rank();
        let ws = g.mul_generator(&w, s);
        prop_assert_eq!(g.length(&ws).abs_diff(g.length(&w)), 1);
        prop_assert_eq!(g.is_right_descent(&w, s), g.length(&ws) < g.length(&w));
    }

    #[test]
    fn length_is_inverse_invariant((fi, a, _b) in group_and_words()) {
        let g = &fixtures()[fi].group;
        let w = element(g, &a);
        prop_assert_eq!(g.length(&g.inverse(&w)), g.length(&w));
        prop_assert_eq!(g.length(&w), g.n_set(&w).len());
    }

    #[test]
    fn length_of_product((fi, a, b) in group_and_words()) {
        let g = &fixtures()[fi].group;
        let (x, y) = (element(g, &a), element(g, &b));
        let shared = g.n_set_bits(&x).intersection(&g.n_set_bits(&g.inverse(&y))).count();
        prop_assert_eq!(g.length(&g.mul(&x, &y)) + 2 * shared, g.length(&x) + g.length(&y));
    }

    #[test]
    fn reduced_word_spells_element((fi, a, _b) in group_and_words()) {
        let g = &fixtures()[fi].group;
        let w = element(g, &a);
        let word = g.reduced_word(&w);
        prop_assert_eq!(word.len(), g.length(&w));
        prop_assert_eq!(g.element_from_word(&word).unwrap(), w);
    }

    #[test]
    fn adjacency_is_symmetric_and_matches_lengths(fi in 0..LABELS.len(), i in 0usize..10_000, j in 0usize..10_000) {
        let f = &fixtures()[fi];
        let n = f.involutions.len();
        let (i, j) = (i % n, j % n);
        let (x, y) = (f.involutions.element(i), f.involutions.element(j));
        let additive = f.group.length(&f.group.mul(x, y)) == f.group.length(x) + f.group.length(y);
        prop_assert_eq!(f.graph.is_adjacent_index(i, j), f.graph.is_adjacent_index(j, i));
        prop_assert_eq!(f.graph.is_adjacent_index(i, j), i != j && additive);
        prop_assert_eq!(is_adjacent(&f.group, x, y), additive);
    }

    #[test]
    fn involutions_have_zero_excess(fi in 0..LABELS.len(), i in 0usize..10_000) {
        let f = &fixtures()[fi];
        let x = f.involutions.element(i % f.involutions.len());
        prop_assert_eq!(excess(&f.group, &f.involutions, x), 0);
    }

    #[test]
    fn conjugating_by_a_generator_moves_length_by_zero_or_two(fi in 0..LABELS.len(), i in 0usize..10_000, s in 0usize..8) {
        let f = &fixtures()[fi];
        let g = &f.group;
        let x = f.involutions.element(i % f.involutions.len());
        let r = g.generator(s % g.rank() + 1).unwrap();
        let rxr = g.mul(&g.mul(&r, x), &r);
        prop_assert!(g.is_involution(&rxr));
        let diff = g.length(&rxr).abs_diff(g.length(x));
        prop_assert!(diff == 0 || diff == 2, "difference {}", diff);
        if diff == 0 {
            prop_assert_eq!(&rxr, x);
        }
    }
}

#[test]
fn ball_degrees_grow_with_radius() {
    for label in ["U3", "U4"] {
        let group = GeometricGroup::new(&GroupSpec::parse(label).unwrap());
        let small = BallGraph::build(&group, 3).unwrap();
        let large = BallGraph::build(&group, 5).unwrap();
        for v in 0..small.vertex_count() {
            let w = large.vertex_of_word(small.word(v)).unwrap().expect("smaller ball embeds");
            assert!(large.degree(w) >= small.degree(v), "{label}: degree of {} shrank", small.word(v));
        }
        assert!(Ball::enumerate(&group, 3).unwrap().len() < Ball::enumerate(&group, 5).unwrap().len());
    }
}
