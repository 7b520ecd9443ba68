//! Enumeration and application of the elementary moves.
//!
//! `try_apply_elementary_move` is the single source of truth: it validates
//! every precondition from scratch and rewrites the diagram. Enumeration
//! generates candidate operands and keeps those the validator accepts, so an
//! enumerated move always applies.

use super::{
    sheared_complexity, ArcId, ArcPresentation, ElementaryMove, GridError, HorizontalArc,
    Marking, ShearingConfig, Site, VerticalArc, WallTag,
};
use alloc::string::ToString;
use alloc::vec::Vec;

/// Per-search restrictions on shear moves.
#[derive(Debug, Clone, Copy, Default)]
pub struct MoveRules {
    /// Forbid shear vertical simplifications that would extend an edge-path
    /// horizontal into an interval (the destabilization search needs this;
    /// the exchange and flype searches deposit the edge-path ends).
    pub forbid_shear_v_on_e: bool,
}

fn fail<T>(msg: &str) -> Result<T, GridError> {
    Err(GridError::PreconditionViolated(msg.to_string()))
}

impl ArcPresentation {
    fn visible_rows(&self) -> Vec<(usize, ArcId)> {
        self.row_order
            .iter()
            .enumerate()
            .filter(|(_, h)| self.horizontals[h].interval.is_none())
            .map(|(i, &h)| (i, h))
            .collect()
    }

    /// The contiguous cyclic run of sites occupied by walls and interval
    /// residents, as (first, last) site indices; `None` without intervals.
    fn gap_run(&self) -> Option<(usize, usize)> {
        let n = self.col_order.len();
        let inside = |i: usize| match self.col_order[i] {
            Site::Wall { .. } => true,
            Site::Col(v) => self.verticals[&v].interval.is_some(),
        };
        let mut start = None;
        for i in 0..n {
            if inside(i) && !inside((i + n - 1) % n) {
                start = Some(i);
                break;
            }
        }
        let start = start?;
        let mut end = start;
        while inside((end + 1) % n) {
            end = (end + 1) % n;
        }
        Some((start, end))
    }

    /// Closed-span membership: whether `site` lies in the closed forward
    /// range `[a, b]`.
    fn site_within(&self, a: usize, b: usize, site: usize) -> bool {
        site == a || site == b || self.site_strictly_between(a, b, site)
    }

    /// Whether the closed span of `h` intersects the closed site range
    /// `[j1, j2]`.
    fn span_meets_range(&self, h: ArcId, j1: usize, j2: usize) -> bool {
        let (a, b) = self.span_sites(h);
        // Either some endpoint of one range lies in the other.
        self.site_within(j1, j2, a)
            || self.site_within(j1, j2, b)
            || self.site_within(a, b, j1)
            || self.site_within(a, b, j2)
    }

    fn spans_nested_or_disjoint(&self, ha: ArcId, hb: ArcId) -> bool {
        let (a1, a2) = self.span_sites(ha);
        let (b1, b2) = self.span_sites(hb);
        let n = self.col_order.len();
        let contains = |x1: usize, x2: usize, y1: usize, y2: usize| {
            let len = (x2 + n - x1) % n;
            let o1 = (y1 + n - x1) % n;
            let o2 = (y2 + n - x1) % n;
            o1 <= o2 && o2 <= len
        };
        let disjoint = !self.site_within(a1, a2, b1)
            && !self.site_within(a1, a2, b2)
            && !self.site_within(b1, b2, a1)
            && !self.site_within(b1, b2, a2);
        contains(a1, a2, b1, b2) || contains(b1, b2, a1, a2) || disjoint
    }

    fn rows_nested_or_disjoint(&self, va: ArcId, vb: ArcId) -> bool {
        let (a_in, a_out) = self.v_rows(va);
        let (b_in, b_out) = self.v_rows(vb);
        let (a_lo, a_hi) = (a_in.min(a_out), a_in.max(a_out));
        let (b_lo, b_hi) = (b_in.min(b_out), b_in.max(b_out));
        let contains =
            |lo1: usize, hi1: usize, lo2: usize, hi2: usize| lo1 <= lo2 && hi2 <= hi1;
        let disjoint = a_hi < b_lo || b_hi < a_lo;
        contains(a_lo, a_hi, b_lo, b_hi) || contains(b_lo, b_hi, a_lo, a_hi) || disjoint
    }
}

/// Applies a move after validating its precondition, returning the rewritten
/// state. The shearing configuration itself never changes.
pub fn apply_elementary_move(
    g: &ArcPresentation,
    sc: &ShearingConfig,
    m: &Marking,
    mv: &ElementaryMove,
    rules: &MoveRules,
) -> Result<(ArcPresentation, ShearingConfig, Marking), GridError> {
    let before = sheared_complexity(g, sc);
    let (g2, m2) = try_apply(g, sc, m, mv, rules)?;
    let after = sheared_complexity(&g2, sc);
    let expected_drop = matches!(
        mv,
        ElementaryMove::HSimplify { .. }
            | ElementaryMove::VSimplify { .. }
            | ElementaryMove::ShearVSimplify { .. }
    );
    debug_assert_eq!(after, if expected_drop { before - 1 } else { before });
    Ok((g2, sc.clone(), m2))
}

/// Every applicable move, in a fixed deterministic order: kind first, then
/// ascending operand indices.
pub fn enumerate_elementary_moves(
    g: &ArcPresentation,
    sc: &ShearingConfig,
    m: &Marking,
    rules: &MoveRules,
) -> Vec<ElementaryMove> {
    let mut out = Vec::new();
    let mut push_if_ok = |mv: ElementaryMove| {
        if try_apply(g, sc, m, &mv, rules).is_ok() {
            out.push(mv);
        }
    };

    for top_to_bottom in [false, true] {
        push_if_ok(ElementaryMove::HExchangeFlavor1 { top_to_bottom });
    }

    let vis_rows = g.visible_rows();
    for w in vis_rows.windows(2) {
        let (row_a, row_b) = (w[0].0, w[1].0);
        push_if_ok(ElementaryMove::HExchangeFlavor2 { row_a, row_b });
        push_if_ok(ElementaryMove::HSimplify { row_a, row_b });
    }

    let n = g.col_order.len();
    for p in 0..n {
        let q = (p + 1) % n;
        if let (Site::Col(u), Site::Col(w)) = (g.col_order[p], g.col_order[q]) {
            if let (Some(ra), Some(rb)) = (g.col_rank_of(u), g.col_rank_of(w)) {
                push_if_ok(ElementaryMove::VExchange { col_a: ra, col_b: rb });
                push_if_ok(ElementaryMove::VSimplify { col_a: ra, col_b: rb });
            }
        }
    }

    if let Some((run_start, run_end)) = g.gap_run() {
        // Shear vertical simplifications: verticals adjacent to a wall.
        for p in 0..n {
            let Site::Col(v) = g.col_order[p] else { continue };
            if g.verticals[&v].interval.is_some() {
                continue;
            }
            let rank = g.col_rank_of(v).unwrap();
            if let Site::Wall { interval, exit: false } = g.col_order[(p + 1) % n] {
                push_if_ok(ElementaryMove::ShearVSimplify { col: rank, interval: interval as usize });
            }
            if let Site::Wall { interval, exit: true } = g.col_order[(p + n - 1) % n] {
                push_if_ok(ElementaryMove::ShearVSimplify { col: rank, interval: interval as usize });
            }
        }
        // Shear horizontal exchanges at the two gap-boundary walls.
        let j1 = (run_end + 1) % n;
        let j2 = (run_start + n - 1) % n;
        let mut j_rows: Vec<usize> = g
            .visible_rows()
            .into_iter()
            .filter(|&(_, h)| g.span_meets_range(h, j1, j2))
            .map(|(row, _)| row)
            .collect();
        j_rows.sort_unstable();
        for w in j_rows.windows(2) {
            for (inner_row, outer_row) in [(w[0], w[1]), (w[1], w[0])] {
                if let Site::Wall { interval, exit: false } = g.col_order[run_start] {
                    push_if_ok(ElementaryMove::ShearHExchange {
                        inner_row,
                        outer_row,
                        interval: interval as usize,
                        at_exit: false,
                    });
                }
                if let Site::Wall { interval, exit: true } = g.col_order[run_end] {
                    push_if_ok(ElementaryMove::ShearHExchange {
                        inner_row,
                        outer_row,
                        interval: interval as usize,
                        at_exit: true,
                    });
                }
            }
        }
    }

    out.sort_unstable();
    out.dedup();
    out
}

fn try_apply(
    g: &ArcPresentation,
    sc: &ShearingConfig,
    m: &Marking,
    mv: &ElementaryMove,
    rules: &MoveRules,
) -> Result<(ArcPresentation, Marking), GridError> {
    match *mv {
        ElementaryMove::HExchangeFlavor1 { top_to_bottom } => flavor1(g, m, top_to_bottom),
        ElementaryMove::HExchangeFlavor2 { row_a, row_b } => flavor2(g, m, row_a, row_b),
        ElementaryMove::VExchange { col_a, col_b } => v_exchange(g, m, col_a, col_b),
        ElementaryMove::HSimplify { row_a, row_b } => h_simplify(g, m, row_a, row_b),
        ElementaryMove::VSimplify { col_a, col_b } => v_simplify(g, m, col_a, col_b),
        ElementaryMove::ShearVSimplify { col, interval } => {
            shear_v_simplify(g, sc, m, rules, col, interval)
        }
        ElementaryMove::ShearHExchange { inner_row, outer_row, interval, at_exit } => {
            shear_h_exchange(g, sc, m, inner_row, outer_row, interval, at_exit)
        }
    }
}

fn visible(g: &ArcPresentation, h: ArcId) -> bool {
    g.horizontals[&h].interval.is_none()
}

fn visible_adjacent(g: &ArcPresentation, row_a: usize, row_b: usize) -> bool {
    row_a < row_b
        && (row_a + 1..row_b).all(|r| {
            let h = g.row_order[r];
            g.horizontals[&h].interval.is_some()
        })
}

fn flavor1(
    g: &ArcPresentation,
    m: &Marking,
    top_to_bottom: bool,
) -> Result<(ArcPresentation, Marking), GridError> {
    let vis = g.visible_rows();
    if vis.len() < 2 {
        return fail("need two visible rows");
    }
    let (pos, mover) = if top_to_bottom { *vis.last().unwrap() } else { vis[0] };
    // The mover may not be crossed over by any vertical arc.
    let (a, b) = g.span_sites(mover);
    for (&v, _) in &g.verticals {
        let site = g.site_of(v).unwrap();
        if !g.site_strictly_between(a, b, site) {
            continue;
        }
        let (rin, rout) = g.v_rows(v);
        let (lo, hi) = (rin.min(rout), rin.max(rout));
        if pos > lo && pos < hi {
            return fail("extreme arc is crossed by a vertical arc");
        }
    }
    let mut g2 = g.clone();
    g2.row_order.remove(pos);
    if top_to_bottom {
        g2.row_order.insert(0, mover);
    } else {
        g2.row_order.push(mover);
    }
    Ok((g2, m.clone()))
}

fn flavor2(
    g: &ArcPresentation,
    m: &Marking,
    row_a: usize,
    row_b: usize,
) -> Result<(ArcPresentation, Marking), GridError> {
    if row_a >= g.row_order.len() || row_b >= g.row_order.len() {
        return fail("row out of range");
    }
    let ha = g.row_order[row_a];
    let hb = g.row_order[row_b];
    if !visible(g, ha) || !visible(g, hb) {
        return fail("operand is interval resident");
    }
    if !visible_adjacent(g, row_a, row_b) {
        return fail("rows not consecutive");
    }
    let (a1, a2) = g.span_sites(ha);
    let (b1, b2) = g.span_sites(hb);
    if !g.range_wall_free(a1, a2) || !g.range_wall_free(b1, b2) {
        return fail("span meets a shearing interval");
    }
    if !g.spans_nested_or_disjoint(ha, hb) {
        return fail("spans not nested");
    }
    let mut g2 = g.clone();
    g2.row_order.swap(row_a, row_b);
    Ok((g2, m.clone()))
}

fn v_exchange(
    g: &ArcPresentation,
    m: &Marking,
    col_a: usize,
    col_b: usize,
) -> Result<(ArcPresentation, Marking), GridError> {
    let (Some(u), Some(w)) = (g.vertical_at_rank(col_a), g.vertical_at_rank(col_b)) else {
        return fail("column out of range");
    };
    if g.verticals[&u].interval.is_some() || g.verticals[&w].interval.is_some() {
        return fail("operand is interval resident");
    }
    let pu = g.site_of(u).unwrap();
    let pw = g.site_of(w).unwrap();
    if (pu + 1) % g.col_order.len() != pw {
        return fail("columns not consecutive");
    }
    if !g.rows_nested_or_disjoint(u, w) {
        return fail("row spans not nested");
    }
    let mut g2 = g.clone();
    g2.col_order.swap(pu, pw);
    Ok((g2, m.clone()))
}

/// Replaces an id in the edge path, or drops it when the survivor already
/// sits next to it.
fn transport_e_path(e_path: &mut Vec<ArcId>, dropped: ArcId, survivor: ArcId) {
    if let Some(pos) = e_path.iter().position(|&h| h == dropped) {
        if e_path.contains(&survivor) {
            e_path.remove(pos);
        } else {
            e_path[pos] = survivor;
        }
    }
}

fn h_simplify(
    g: &ArcPresentation,
    m: &Marking,
    row_a: usize,
    row_b: usize,
) -> Result<(ArcPresentation, Marking), GridError> {
    if row_a >= g.row_order.len() || row_b >= g.row_order.len() {
        return fail("row out of range");
    }
    let ha = g.row_order[row_a];
    let hb = g.row_order[row_b];
    if !visible(g, ha) || !visible(g, hb) {
        return fail("operand is interval resident");
    }
    if !visible_adjacent(g, row_a.min(row_b), row_a.max(row_b)) {
        return fail("rows not consecutive");
    }
    // Path order: `first` runs into the shared vertical, which delivers
    // `second`.
    let (first, second) = if g.verticals[&g.horizontals[&ha].v_end].h_out == hb {
        (ha, hb)
    } else if g.verticals[&g.horizontals[&hb].v_end].h_out == ha {
        (hb, ha)
    } else {
        return fail("no shared vertical arc");
    };
    let shared = g.horizontals[&first].v_end;
    if g.verticals[&shared].interval.is_some() {
        return fail("shared vertical is interval resident");
    }
    if m.protected.contains(&first) || m.protected.contains(&second) {
        return fail("merge would alter a protected arc");
    }
    let (a, _c1) = g.span_sites(first);
    let (c, b) = g.span_sites(second);
    if !g.site_strictly_between(c, a, b) {
        return fail("merged span would close the circle");
    }
    // The moved portion keeps its crossings with interval residents.
    let (r_first, r_second) = (g.row_of(first).unwrap(), g.row_of(second).unwrap());
    for (&v, arc) in &g.verticals {
        if arc.interval.is_none() {
            continue;
        }
        let site = g.site_of(v).unwrap();
        if !g.site_strictly_between(c, b, site) {
            continue;
        }
        let (rin, rout) = g.v_rows(v);
        let (lo, hi) = (rin.min(rout), rin.max(rout));
        let in_first = r_first > lo && r_first < hi;
        let in_second = r_second > lo && r_second < hi;
        if in_first != in_second {
            return fail("row change would alter a resident crossing");
        }
    }
    let mut g2 = g.clone();
    let mut m2 = m.clone();
    let second_arc = g2.horizontals.remove(&second).unwrap();
    g2.row_order.retain(|&h| h != second);
    let shared_site = g2.site_of(shared).unwrap();
    g2.col_order.remove(shared_site);
    g2.verticals.remove(&shared);
    g2.horizontals.get_mut(&first).unwrap().v_end = second_arc.v_end;
    g2.verticals.get_mut(&second_arc.v_end).unwrap().h_in = first;
    transport_e_path(&mut m2.e_path, second, first);
    Ok((g2, m2))
}

fn v_simplify(
    g: &ArcPresentation,
    m: &Marking,
    col_a: usize,
    col_b: usize,
) -> Result<(ArcPresentation, Marking), GridError> {
    let (Some(u), Some(w)) = (g.vertical_at_rank(col_a), g.vertical_at_rank(col_b)) else {
        return fail("column out of range");
    };
    if g.verticals[&u].interval.is_some() || g.verticals[&w].interval.is_some() {
        return fail("operand is interval resident");
    }
    let pu = g.site_of(u).unwrap();
    let pw = g.site_of(w).unwrap();
    let n = g.col_order.len();
    if (pu + 1) % n != pw {
        return fail("columns not consecutive");
    }
    // The shared horizontal must be the short hop from `u` to `w`.
    let hop = g.verticals[&u].h_out;
    if g.horizontals[&hop].v_end != w {
        return fail("no shared horizontal arc");
    }
    if !visible(g, hop) {
        return fail("shared horizontal is interval resident");
    }
    let next = g.verticals[&w].h_out;
    if m.protected.contains(&hop) || m.protected.contains(&next) {
        return fail("merge would alter a protected arc");
    }
    if next == hop {
        return fail("two-arc component cannot simplify");
    }
    // Union span of `hop` and `next` must stay a proper arc.
    let (_, x) = g.span_sites(next);
    if x == pu || g.site_strictly_between(pw, x, pu) {
        return fail("merged span would close the circle");
    }
    let mut g2 = g.clone();
    let mut m2 = m.clone();
    let hop_id = hop;
    g2.horizontals.remove(&hop_id);
    g2.row_order.retain(|&h| h != hop_id);
    g2.col_order.remove(pw);
    g2.verticals.remove(&w);
    g2.verticals.get_mut(&u).unwrap().h_out = next;
    g2.horizontals.get_mut(&next).unwrap().v_start = u;
    transport_e_path(&mut m2.e_path, hop_id, next);
    Ok((g2, m2))
}

/// Flags a horizontal arc resident when its whole span lies inside one
/// interval block.
fn reflag_if_contained(g: &mut ArcPresentation, h: ArcId) {
    let arc = &g.horizontals[&h];
    let (vs, ve) = (arc.v_start, arc.v_end);
    let (Some(i1), Some(i2)) = (g.verticals[&vs].interval, g.verticals[&ve].interval) else {
        return;
    };
    if i1 != i2 {
        return;
    }
    let (a, b) = g.span_sites(h);
    let walls = g.wall_sites();
    let Some(&(ex, _, _)) = walls.iter().find(|&&(_, w, e)| w == i1 && e) else { return };
    if !g.site_strictly_between(a, b, ex) {
        g.horizontals.get_mut(&h).unwrap().interval = Some(i1);
    }
}

fn shear_v_simplify(
    g: &ArcPresentation,
    sc: &ShearingConfig,
    m: &Marking,
    rules: &MoveRules,
    col: usize,
    interval: usize,
) -> Result<(ArcPresentation, Marking), GridError> {
    let Some(v) = g.vertical_at_rank(col) else {
        return fail("column out of range");
    };
    if g.verticals[&v].interval.is_some() {
        return fail("operand is interval resident");
    }
    if interval >= sc.walls.len() {
        return fail("interval out of range");
    }
    let p = g.site_of(v).unwrap();
    let n = g.col_order.len();
    let forward = match g.col_order[(p + 1) % n] {
        Site::Wall { interval: i, exit: false } if i as usize == interval => true,
        _ => match g.col_order[(p + n - 1) % n] {
            Site::Wall { interval: i, exit: true } if i as usize == interval => false,
            _ => return fail("vertical arc not adjacent to the interval"),
        },
    };
    let (entry_tag, exit_tag) = sc.walls[interval];
    if forward && entry_tag != WallTag::Front {
        return fail("entry wall rejects forward pushes");
    }
    if !forward && exit_tag != WallTag::Back {
        return fail("exit wall rejects backward pushes");
    }
    let arc = &g.verticals[&v];
    let (h_in, h_out) = (arc.h_in, arc.h_out);
    if m.protected.contains(&h_in) || m.protected.contains(&h_out) {
        return fail("push would alter a protected arc");
    }
    if rules.forbid_shear_v_on_e && (m.e_path.contains(&h_in) || m.e_path.contains(&h_out)) {
        return fail("push would shear an edge-path arc");
    }
    let mut g2 = g.clone();
    g2.col_order.remove(p);
    // Re-locate the wall after the removal shifted indices.
    let wall_pos = g2
        .col_order
        .iter()
        .position(|s| matches!(s, Site::Wall { interval: i, exit } if *i as usize == interval && *exit != forward))
        .unwrap();
    if forward {
        g2.col_order.insert(wall_pos + 1, Site::Col(v));
    } else {
        g2.col_order.insert(wall_pos, Site::Col(v));
    }
    g2.verticals.get_mut(&v).unwrap().interval = Some(interval as u8);
    reflag_if_contained(&mut g2, h_in);
    reflag_if_contained(&mut g2, h_out);
    Ok((g2, m.clone()))
}

#[allow(clippy::too_many_arguments)]
fn shear_h_exchange(
    g: &ArcPresentation,
    sc: &ShearingConfig,
    m: &Marking,
    inner_row: usize,
    outer_row: usize,
    interval: usize,
    at_exit: bool,
) -> Result<(ArcPresentation, Marking), GridError> {
    if inner_row >= g.row_order.len() || outer_row >= g.row_order.len() || inner_row == outer_row {
        return fail("row out of range");
    }
    let inner = g.row_order[inner_row];
    let outer = g.row_order[outer_row];
    if !visible(g, inner) || !visible(g, outer) {
        return fail("operand is interval resident");
    }
    for h in [inner, outer] {
        if m.e_path.contains(&h) || m.protected.contains(&h) {
            return fail("shear exchange on a protected arc");
        }
    }
    let Some((run_start, run_end)) = g.gap_run() else {
        return fail("no shearing intervals");
    };
    let n = g.col_order.len();
    let wall_site = if at_exit { run_end } else { run_start };
    match g.col_order[wall_site] {
        Site::Wall { interval: i, exit } if i as usize == interval && exit == at_exit => {}
        _ => return fail("wall does not bound the outside region"),
    }
    if interval >= sc.walls.len() {
        return fail("interval out of range");
    }
    let (entry_tag, exit_tag) = sc.walls[interval];
    if at_exit && exit_tag != WallTag::Back {
        return fail("exit wall rejects backward cuts");
    }
    if !at_exit && entry_tag != WallTag::Front {
        return fail("entry wall rejects forward cuts");
    }
    let j1 = (run_end + 1) % n;
    let j2 = (run_start + n - 1) % n;
    // Inner lies wholly outside the gap.
    let (ia, ib) = g.span_sites(inner);
    if !g.site_within(j1, j2, ia) || !g.site_within(j1, j2, ib) || !g.range_wall_free(ia, ib) {
        return fail("inner arc leaves the outside region");
    }
    // Outer crosses the boundary wall, with its outside end an endpoint and
    // its inside end resident in the gap.
    let (oa, ob) = g.span_sites(outer);
    if !g.span_crosses_site(outer, wall_site) {
        return fail("outer arc does not cross the wall");
    }
    let (outside_end, inside_end) = if at_exit { (ob, oa) } else { (oa, ob) };
    if !g.site_within(j1, j2, outside_end) {
        return fail("outer arc's outside end is not in the outside region");
    }
    let inside_gap =
        g.site_within(run_start, run_end, inside_end) && inside_end != run_start && inside_end != run_end;
    if !inside_gap {
        return fail("outer arc does not terminate inside the gap");
    }
    // Nesting of the outside pieces: inner within outer's outside piece.
    let (pa, pb) = if at_exit { (j1, ob) } else { (oa, j2) };
    let contains = |x1: usize, x2: usize, y1: usize, y2: usize| {
        let len = (x2 + n - x1) % n;
        let o1 = (y1 + n - x1) % n;
        let o2 = (y2 + n - x1) % n;
        o1 <= o2 && o2 <= len
    };
    if !contains(pa, pb, ia, ib) {
        return fail("inner piece not nested in outer piece");
    }
    // Consecutive among arcs meeting the outside region.
    let (lo, hi) = (inner_row.min(outer_row), inner_row.max(outer_row));
    for (row, h) in g.visible_rows() {
        if row > lo && row < hi && g.span_meets_range(h, j1, j2) {
            return fail("rows not consecutive over the outside region");
        }
    }
    // No strand may be jogged across: nothing between the rows crosses the
    // wall.
    for r in lo + 1..hi {
        let h = g.row_order[r];
        if g.span_crosses_site(h, wall_site) {
            return fail("a strand between the rows crosses the wall");
        }
    }

    let mut g2 = g.clone();
    let mut m2 = m.clone();
    let far = g2.fresh_id();
    let vn = g2.fresh_id();
    let outer_arc = g2.horizontals[&outer].clone();
    if at_exit {
        // outer = [inside → outside]; far keeps the inside part.
        let old_start = outer_arc.v_start;
        g2.horizontals.insert(far, HorizontalArc { v_start: old_start, v_end: vn, interval: None });
        g2.verticals.insert(vn, VerticalArc { h_in: far, h_out: outer, interval: Some(interval as u8) });
        g2.verticals.get_mut(&old_start).unwrap().h_out = far;
        g2.horizontals.get_mut(&outer).unwrap().v_start = vn;
        let wall_pos = g2.col_order.iter().position(|s| *s == g.col_order[run_end]).unwrap();
        g2.col_order.insert(wall_pos, Site::Col(vn));
    } else {
        // outer = [outside → inside]; far keeps the inside part.
        let old_end = outer_arc.v_end;
        g2.horizontals.insert(far, HorizontalArc { v_start: vn, v_end: old_end, interval: None });
        g2.verticals.insert(vn, VerticalArc { h_in: outer, h_out: far, interval: Some(interval as u8) });
        g2.verticals.get_mut(&old_end).unwrap().h_in = far;
        g2.horizontals.get_mut(&outer).unwrap().v_end = vn;
        let wall_pos = g2.col_order.iter().position(|s| *s == g.col_order[run_start]).unwrap();
        g2.col_order.insert(wall_pos + 1, Site::Col(vn));
    }
    // Heights: swap the two outside pieces, then give the far part its own
    // row adjacent to the outer arc's old height, away from the inner row.
    g2.row_order.swap(inner_row, outer_row);
    if outer_row > inner_row {
        g2.row_order.insert(outer_row + 1, far);
    } else {
        g2.row_order.insert(outer_row, far);
    }
    reflag_if_contained(&mut g2, far);
    let _ = &mut m2;
    Ok((g2, m2))
}
