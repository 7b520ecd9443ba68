use super::*;
use crate::braid::{are_conjugate, linking_matrix_of_word, parse_word, ConjugacyLimits};
use crate::grid::validate_presentation;
use proptest::prelude::*;

fn w(text: &str) -> BraidWord {
    parse_word(text).unwrap()
}

#[test]
fn single_positive_crossing_closes_to_unknot() {
    let (g, trace) = braid_to_grid(&w("n=2: 1"));
    assert!(validate_presentation(&g).is_empty());
    assert_eq!(trace.letter_to_arcs.len(), 1);
    let (count, m) = grid_components_and_linking(&g).unwrap();
    assert_eq!(count, 1);
    // One positive self-crossing: writhe +1 on the diagonal.
    assert_eq!(m.crossings, alloc::vec![alloc::vec![1]]);
}

#[test]
fn empty_word_builds_disjoint_squares() {
    let (g, _) = braid_to_grid(&w("n=2:"));
    assert!(validate_presentation(&g).is_empty());
    assert_eq!(g.vertical_count(), 4);
    let (count, m) = grid_components_and_linking(&g).unwrap();
    assert_eq!(count, 2);
    assert_eq!(m.crossings[0][1], 0);
}

#[test]
fn hopf_link_agrees_with_word_oracle() {
    let word = w("n=2: 1 1");
    let (g, trace) = braid_to_grid(&word);
    assert!(validate_presentation(&g).is_empty());
    assert_eq!(g.vertical_count(), 4);
    let wm = linking_matrix_of_word(&word);
    assert_eq!(linking_agrees(&word, &wm, &g, &trace), Ok(true));
    let (count, gm) = grid_components_and_linking(&g).unwrap();
    assert_eq!(count, 2);
    assert_eq!(gm.crossings[0][1], 2);
}

#[test]
fn complexity_is_letters_plus_closures() {
    // All strands moved: letters + n closure arcs.
    assert_eq!(braid_to_grid(&w("n=2: 1 1")).0.vertical_count(), 4);
    assert_eq!(braid_to_grid(&w("n=2: 1 1 1")).0.vertical_count(), 5);
    assert_eq!(braid_to_grid(&w("n=3: 1 2")).0.vertical_count(), 5);
    // Untouched strands close as squares: two arcs each.
    assert_eq!(braid_to_grid(&w("n=3: 1 1")).0.vertical_count(), 6);
}

#[test]
fn square_unknot_flattens_to_one_strand() {
    let g = crate::grid::fixtures::square_unknot();
    let (word, _) = grid_to_braid(&g).unwrap();
    assert_eq!(word.strands(), 1);
    assert!(word.is_empty());
}

#[test]
fn hopf_roundtrip_is_conjugate_to_original() {
    let word = w("n=2: 1 1");
    let (g, _) = braid_to_grid(&word);
    let (back, _) = grid_to_braid(&g).unwrap();
    assert_eq!(back.strands(), 2);
    assert_eq!(back.exponent_sum(), 2);
    let limits = ConjugacyLimits::default();
    assert_eq!(are_conjugate(&back, &word, &limits), Ok(true));
}

#[test]
fn grid_to_braid_rejects_interval_bookkeeping() {
    let g = crate::grid::fixtures::square_unknot();
    let (with_walls, _) = crate::grid::place_shearing_intervals(&g, 1).into_iter().next().unwrap();
    assert!(grid_to_braid(&with_walls).is_err());
    assert!(grid_to_braid(&strip_intervals(&with_walls)).is_ok());
}

fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let top = (n - 1) as i32;
    prop::collection::vec(
        (1..=top).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]),
        0..=max_len,
    )
    .prop_map(move |ls| BraidWord::new(n, ls).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn construction_always_validates(word in arb_word(5, 10)) {
        let (g, _) = braid_to_grid(&word);
        prop_assert!(validate_presentation(&g).is_empty());
    }

    #[test]
    fn dual_oracle_linking_agreement(word in arb_word(5, 10)) {
        let (g, trace) = braid_to_grid(&word);
        let wm = linking_matrix_of_word(&word);
        prop_assert_eq!(linking_agrees(&word, &wm, &g, &trace), Ok(true));
    }

    #[test]
    fn roundtrip_preserves_components_and_linking(word in arb_word(4, 9)) {
        let (g, _) = braid_to_grid(&word);
        let (back, _) = grid_to_braid(&g).unwrap();
        prop_assert_eq!(back.strands(), word.strands());
        let a = crate::braid::closure_components(&word);
        let b = crate::braid::closure_components(&back);
        prop_assert_eq!(a.count, b.count);
        prop_assert_eq!(word.exponent_sum(), back.exponent_sum());
    }

    #[test]
    fn roundtrip_is_conjugate_for_small_words(word in arb_word(4, 8)) {
        let (g, _) = braid_to_grid(&word);
        let (back, _) = grid_to_braid(&g).unwrap();
        let limits = ConjugacyLimits::default();
        prop_assert_eq!(are_conjugate(&back, &word, &limits), Ok(true));
    }

    #[test]
    fn construction_is_deterministic(word in arb_word(4, 8)) {
        let (g1, t1) = braid_to_grid(&word);
        let (g2, t2) = braid_to_grid(&word);
        prop_assert_eq!(g1, g2);
        prop_assert_eq!(t1, t2);
    }
}
