//! Hand-built diagrams for tests.

use super::{ArcPresentation, HorizontalArc, Site, VerticalArc};
use alloc::vec;

/// The square unknot: two vertical and two horizontal arcs.
///
/// Columns 0, 1; rows 0, 1. The bottom arc runs forward from column 0 to
/// column 1, the top arc wraps from column 1 back to column 0.
pub fn square_unknot() -> ArcPresentation {
    let mut g = ArcPresentation::empty();
    let h_bot = g.fresh_id();
    let h_top = g.fresh_id();
    let v0 = g.fresh_id();
    let v1 = g.fresh_id();
    g.horizontals.insert(h_bot, HorizontalArc { v_start: v0, v_end: v1, interval: None });
    g.horizontals.insert(h_top, HorizontalArc { v_start: v1, v_end: v0, interval: None });
    g.verticals.insert(v0, VerticalArc { h_in: h_top, h_out: h_bot, interval: None });
    g.verticals.insert(v1, VerticalArc { h_in: h_bot, h_out: h_top, interval: None });
    g.row_order = vec![h_bot, h_top];
    g.col_order = vec![Site::Col(v0), Site::Col(v1)];
    g
}

/// A staircase unknot with the given number of steps (vertical arcs).
///
/// Step `k` sits at column `k` and joins rows `k` and `k+1`-ish in a spiral
/// that closes up after `steps` arcs; `steps >= 2`.
pub fn staircase_unknot(steps: usize) -> ArcPresentation {
    assert!(steps >= 2);
    let mut g = ArcPresentation::empty();
    let hs: alloc::vec::Vec<_> = (0..steps).map(|_| g.fresh_id()).collect();
    let vs: alloc::vec::Vec<_> = (0..steps).map(|_| g.fresh_id()).collect();
    for k in 0..steps {
        // Horizontal k runs from column k to column k+1 (cyclically) at row
        // k; vertical k sits at column k.
        let next = (k + 1) % steps;
        g.horizontals.insert(hs[k], HorizontalArc { v_start: vs[k], v_end: vs[next], interval: None });
        g.verticals.insert(vs[k], VerticalArc { h_in: hs[(k + steps - 1) % steps], h_out: hs[k], interval: None });
    }
    g.row_order = hs.clone();
    g.col_order = vs.iter().map(|&v| Site::Col(v)).collect();
    g
}
