use super::fixtures::{square_unknot, staircase_unknot};
use super::*;
use crate::grid::moves::MoveRules;

#[test]
fn square_unknot_is_valid() {
    let g = square_unknot();
    assert!(validate_presentation(&g).is_empty());
    assert_eq!(complexity(&g), Ok(2));
}

#[test]
fn empty_diagram_is_flagged() {
    let g = ArcPresentation::empty();
    assert_eq!(validate_presentation(&g), alloc::vec![Violation::EmptyDiagram]);
    assert_eq!(complexity(&g), Err(GridError::EmptyDiagram));
}

#[test]
fn duplicate_row_is_flagged() {
    let mut g = square_unknot();
    let h = g.row_order[0];
    g.row_order.push(h);
    assert!(validate_presentation(&g)
        .iter()
        .any(|v| matches!(v, Violation::DuplicateRow { .. })));
}

#[test]
fn broken_incidence_is_flagged() {
    let mut g = square_unknot();
    let (&h, _) = g.horizontals.iter().next().unwrap();
    let wrong = g.horizontals[&h].v_start;
    g.horizontals.get_mut(&h).unwrap().v_end = wrong;
    assert!(validate_presentation(&g)
        .iter()
        .any(|v| matches!(v, Violation::SelfLoop { .. } | Violation::BrokenIncidence { .. })));
}

#[test]
fn square_unknot_has_one_component_and_no_linking() {
    let g = square_unknot();
    let (count, m) = grid_components_and_linking(&g).unwrap();
    assert_eq!(count, 1);
    assert_eq!(m.crossings, alloc::vec![alloc::vec![0]]);
}

#[test]
fn staircase_is_valid_and_simplifies() {
    let g = staircase_unknot(3);
    assert!(validate_presentation(&g).is_empty());
    let sc = ShearingConfig::default();
    let m = Marking::default();
    let rules = MoveRules::default();
    assert_eq!(sheared_complexity(&g, &sc), 3);
    let moves = enumerate_elementary_moves(&g, &sc, &m, &rules);
    let simplify = moves
        .iter()
        .find(|mv| matches!(mv, ElementaryMove::VSimplify { .. } | ElementaryMove::HSimplify { .. }))
        .expect("staircase admits a simplification");
    let (g2, _, _) = apply_elementary_move(&g, &sc, &m, simplify, &rules).unwrap();
    assert!(validate_presentation(&g2).is_empty());
    assert_eq!(sheared_complexity(&g2, &sc), 2);
}

#[test]
fn flavor1_is_always_available_on_plain_diagrams() {
    let g = square_unknot();
    let sc = ShearingConfig::default();
    let moves = enumerate_elementary_moves(&g, &sc, &Marking::default(), &MoveRules::default());
    assert!(moves
        .iter()
        .any(|mv| matches!(mv, ElementaryMove::HExchangeFlavor1 { .. })));
}

#[test]
fn flavor2_requires_nested_spans() {
    // Two stacked squares sharing no columns: all spans disjoint, so the
    // flavor-2 move between the two middle rows applies only when nested or
    // disjoint. Build overlapping, non-nested spans instead.
    let g = staircase_unknot(4);
    let sc = ShearingConfig::default();
    let m = Marking::default();
    let rules = MoveRules::default();
    // Rows 0 (span 0→1) and 1 (span 1→2): overlapping at column 1 and not
    // nested, so no flavor-2 exchange between them.
    let res = apply_elementary_move(
        &g,
        &sc,
        &m,
        &ElementaryMove::HExchangeFlavor2 { row_a: 0, row_b: 1 },
        &rules,
    );
    assert!(matches!(res, Err(GridError::PreconditionViolated(_))));
}

#[test]
fn hsimplify_requires_shared_vertical() {
    let g = staircase_unknot(4);
    let sc = ShearingConfig::default();
    let res = apply_elementary_move(
        &g,
        &sc,
        &Marking::default(),
        &ElementaryMove::HSimplify { row_a: 0, row_b: 2 },
        &MoveRules::default(),
    );
    assert!(res.is_err());
}

#[test]
fn moves_referencing_absent_rows_fail() {
    let g = square_unknot();
    let sc = ShearingConfig::default();
    let res = apply_elementary_move(
        &g,
        &sc,
        &Marking::default(),
        &ElementaryMove::HSimplify { row_a: 5, row_b: 6 },
        &MoveRules::default(),
    );
    assert_eq!(res, Err(GridError::PreconditionViolated("row out of range".into())));
}

/// Two side-by-side squares with interleaved rows; two disjoint circles.
fn side_by_side_squares() -> ArcPresentation {
    let mut g = ArcPresentation::empty();
    let (ab, bb, at, bt) = (g.fresh_id(), g.fresh_id(), g.fresh_id(), g.fresh_id());
    let (a0, a1, b0, b1) = (g.fresh_id(), g.fresh_id(), g.fresh_id(), g.fresh_id());
    g.horizontals.insert(ab, HorizontalArc { v_start: a0, v_end: a1, interval: None });
    g.horizontals.insert(at, HorizontalArc { v_start: a1, v_end: a0, interval: None });
    g.horizontals.insert(bb, HorizontalArc { v_start: b0, v_end: b1, interval: None });
    g.horizontals.insert(bt, HorizontalArc { v_start: b1, v_end: b0, interval: None });
    g.verticals.insert(a0, VerticalArc { h_in: at, h_out: ab, interval: None });
    g.verticals.insert(a1, VerticalArc { h_in: ab, h_out: at, interval: None });
    g.verticals.insert(b0, VerticalArc { h_in: bt, h_out: bb, interval: None });
    g.verticals.insert(b1, VerticalArc { h_in: bb, h_out: bt, interval: None });
    g.row_order = alloc::vec![ab, bb, at, bt];
    g.col_order = alloc::vec![Site::Col(a0), Site::Col(a1), Site::Col(b0), Site::Col(b1)];
    g
}

#[test]
fn flavor2_exchange_is_an_involution() {
    let g = side_by_side_squares();
    assert!(validate_presentation(&g).is_empty());
    let (count, m) = grid_components_and_linking(&g).unwrap();
    assert_eq!(count, 2);
    assert_eq!(m.crossings[0][1], 0);

    // Rows 1 and 2 hold one arc of each square, with nested spans.
    let sc = ShearingConfig::default();
    let mk = Marking::default();
    let rules = MoveRules::default();
    let mv = ElementaryMove::HExchangeFlavor2 { row_a: 1, row_b: 2 };
    let (g2, _, m2) = apply_elementary_move(&g, &sc, &mk, &mv, &rules).unwrap();
    let (g3, _, _) = apply_elementary_move(&g2, &sc, &m2, &mv, &rules).unwrap();
    assert_eq!(canonical_key(&g, &sc, &mk), canonical_key(&g3, &sc, &mk));
}

#[test]
fn canonical_key_ignores_interval_interiors_and_separates_moves() {
    let g = staircase_unknot(4);
    let placements = place_shearing_intervals(&g, 1);
    assert_eq!(placements.len(), 4);
    let (g1, sc) = &placements[0];
    let m = Marking::default();
    let rules = MoveRules::default();
    let k0 = canonical_key(g1, sc, &m);

    // A shear deposit changes only the interval interior, not the key
    // footprint of the outside restriction except for the pushed arc
    // leaving it.
    let moves = enumerate_elementary_moves(g1, sc, &m, &rules);
    let shear = moves
        .iter()
        .find(|mv| matches!(mv, ElementaryMove::ShearVSimplify { .. }))
        .expect("a vertical arc borders the fresh interval");
    let (g2, _, m2) = apply_elementary_move(g1, sc, &m, shear, &rules).unwrap();
    assert!(validate_presentation(&g2).is_empty());
    let k1 = canonical_key(&g2, sc, &m2);
    assert_ne!(k0, k1);

    // A non-shear exchange changes the key.
    if let Some(mv) = moves
        .iter()
        .find(|mv| matches!(mv, ElementaryMove::HExchangeFlavor2 { .. }))
    {
        let (g3, _, m3) = apply_elementary_move(g1, sc, &m, mv, &rules).unwrap();
        assert_ne!(canonical_key(&g3, sc, &m3), k0);
    }
}

#[test]
fn key_is_rotation_invariant_without_walls() {
    let g = staircase_unknot(5);
    let sc = ShearingConfig::default();
    let m = Marking::default();
    let base = canonical_key(&g, &sc, &m);
    let mut rotated = g.clone();
    rotated.col_order.rotate_left(2);
    assert_eq!(canonical_key(&rotated, &sc, &m), base);
}

#[test]
fn placements_count_and_tags() {
    let g = square_unknot();
    assert_eq!(place_shearing_intervals(&g, 0).len(), 1);
    assert_eq!(place_shearing_intervals(&g, 1).len(), 2);
    assert_eq!(place_shearing_intervals(&g, 2).len(), 2);
    assert_eq!(place_shearing_intervals(&g, 3).len(), 4);
    let (g1, sc) = &place_shearing_intervals(&g, 2)[0];
    assert!(validate_presentation(g1).is_empty());
    assert_eq!(sc.walls[0], (WallTag::Front, WallTag::Front));
    assert_eq!(sc.walls[1], (WallTag::Back, WallTag::Back));
    assert_eq!(sheared_complexity(g1, sc), 2);
}

#[test]
fn shear_deposit_reduces_sheared_complexity_only() {
    let g = staircase_unknot(3);
    let (g1, sc) = place_shearing_intervals(&g, 1).into_iter().next().unwrap();
    let m = Marking::default();
    let rules = MoveRules::default();
    let mv = enumerate_elementary_moves(&g1, &sc, &m, &rules)
        .into_iter()
        .find(|mv| matches!(mv, ElementaryMove::ShearVSimplify { .. }))
        .unwrap();
    let before = sheared_complexity(&g1, &sc);
    let (g2, _, _) = apply_elementary_move(&g1, &sc, &m, &mv, &rules).unwrap();
    assert_eq!(sheared_complexity(&g2, &sc), before - 1);
    assert_eq!(complexity(&g2), complexity(&g1));
    let (c1, l1) = grid_components_and_linking(&g1).unwrap();
    let (c2, l2) = grid_components_and_linking(&g2).unwrap();
    assert_eq!(c1, c2);
    assert_eq!(l1, l2);
}

#[test]
fn exchange_moves_are_reversible() {
    let g = staircase_unknot(4);
    let sc = ShearingConfig::default();
    let m = Marking::default();
    let rules = MoveRules::default();
    let k0 = canonical_key(&g, &sc, &m);
    for mv in enumerate_elementary_moves(&g, &sc, &m, &rules) {
        if !matches!(
            mv,
            ElementaryMove::HExchangeFlavor1 { .. }
                | ElementaryMove::HExchangeFlavor2 { .. }
                | ElementaryMove::VExchange { .. }
        ) {
            continue;
        }
        let (g2, _, m2) = apply_elementary_move(&g, &sc, &m, &mv, &rules).unwrap();
        let back = enumerate_elementary_moves(&g2, &sc, &m2, &rules)
            .into_iter()
            .filter(|b| core::mem::discriminant(b) == core::mem::discriminant(&mv))
            .find_map(|b| {
                let (g3, _, m3) = apply_elementary_move(&g2, &sc, &m2, &b, &rules).ok()?;
                (canonical_key(&g3, &sc, &m3) == k0).then_some(b)
            });
        assert!(back.is_some(), "no inverse for {mv:?}");
    }
}
