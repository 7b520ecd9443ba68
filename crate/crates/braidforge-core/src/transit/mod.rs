//! The two presentation transitions: braid word → arc presentation and arc
//! presentation → braid word.
//!
//! The forward construction keeps one running horizontal arc per strand
//! track. Each letter turns the crossing strand with a single vertical arc
//! placed so that it passes exactly its partner's arc, which realizes the
//! letter's crossing with the right sign. The closure then joins each
//! track's final arc to its initial arc with one vertical arc per track, in
//! an order chosen so no closure arc crosses anything; strands untouched by
//! any letter close into free-standing squares.

use crate::braid::{closure_components, BraidWord, LinkingMatrix};
use crate::grid::{
    grid_components_and_linking, ArcId, ArcPresentation, GridError, HorizontalArc, Site,
    VerticalArc,
};
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

/// Where a transition started.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SourceKind {
    Braid,
    Grid,
}

/// Bookkeeping tying the source to the produced presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionTrace {
    pub source: SourceKind,
    /// Braid → grid: the vertical arc created by each letter, in word order.
    pub letter_to_arcs: Vec<Vec<ArcId>>,
    /// Braid → grid: per track, the arc holding the strand at the seam.
    pub seam_arcs: Vec<ArcId>,
    /// Grid → braid: letters emitted while sweeping each column, in cyclic
    /// column order.
    pub column_to_letters: Vec<(usize, Vec<i32>)>,
}

/// Builds the arc presentation of a closed braid word.
///
/// Deterministic; the result always validates. Complexity is the letter
/// count plus one closure arc per moved strand plus two arcs per strand the
/// word never moves.
pub fn braid_to_grid(w: &BraidWord) -> (ArcPresentation, TransitionTrace) {
    let n = w.strands();
    let mut g = ArcPresentation::empty();
    // Initial running arcs, rows in track order.
    let initial: Vec<ArcId> = (0..n).map(|_| g.fresh_id()).collect();
    for &h in &initial {
        g.horizontals.insert(h, HorizontalArc { v_start: 0, v_end: 0, interval: None });
        g.row_order.push(h);
    }
    let mut runner: Vec<ArcId> = initial.clone();
    let mut letter_to_arcs = Vec::with_capacity(w.len());

    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let (lo, hi) = (i, i + 1);
        let (mover, partner) = if l > 0 { (runner[lo], runner[hi]) } else { (runner[hi], runner[lo]) };
        let fresh = g.fresh_id();
        let v = g.fresh_id();
        g.horizontals.insert(fresh, HorizontalArc { v_start: v, v_end: 0, interval: None });
        g.horizontals.get_mut(&mover).unwrap().v_end = v;
        g.verticals.insert(v, VerticalArc { h_in: mover, h_out: fresh, interval: None });
        g.col_order.push(Site::Col(v));
        let partner_row = g.row_of(partner).unwrap();
        if l > 0 {
            g.row_order.insert(partner_row + 1, fresh);
        } else {
            g.row_order.insert(partner_row, fresh);
        }
        if l > 0 {
            runner[hi] = fresh;
            runner[lo] = partner;
        } else {
            runner[lo] = fresh;
            runner[hi] = partner;
        }
        letter_to_arcs.push(vec![v]);
    }

    // Closure: join runner[t] back to initial[t], ordering the closures so
    // each joining vertical arc crosses nothing.
    let moved: Vec<usize> = (0..n).filter(|&t| runner[t] != initial[t]).collect();
    let untouched: Vec<usize> = (0..n).filter(|&t| runner[t] == initial[t]).collect();
    let order = closure_order(&g, &runner, &initial, &untouched, &moved)
        .expect("no admissible closure order");
    for &t in &order {
        let v = g.fresh_id();
        g.horizontals.get_mut(&runner[t]).unwrap().v_end = v;
        g.horizontals.get_mut(&initial[t]).unwrap().v_start = v;
        g.verticals.insert(v, VerticalArc { h_in: runner[t], h_out: initial[t], interval: None });
        g.col_order.push(Site::Col(v));
    }
    // Untouched strands become free-standing squares.
    for &t in &untouched {
        let base = initial[t];
        let lid = g.fresh_id();
        let v1 = g.fresh_id();
        let v2 = g.fresh_id();
        g.horizontals.insert(lid, HorizontalArc { v_start: v1, v_end: v2, interval: None });
        g.horizontals.get_mut(&base).unwrap().v_end = v1;
        g.horizontals.get_mut(&base).unwrap().v_start = v2;
        g.verticals.insert(v1, VerticalArc { h_in: base, h_out: lid, interval: None });
        g.verticals.insert(v2, VerticalArc { h_in: lid, h_out: base, interval: None });
        let row = g.row_of(base).unwrap();
        g.row_order.insert(row + 1, lid);
        g.col_order.push(Site::Col(v1));
        g.col_order.push(Site::Col(v2));
    }
    let trace = TransitionTrace {
        source: SourceKind::Braid,
        letter_to_arcs,
        seam_arcs: initial,
        column_to_letters: Vec::new(),
    };
    (g, trace)
}

/// Finds a closure order in which every joining arc crosses nothing: when
/// track `t` closes, no unclosed final row, closed initial row, or untouched
/// row may lie strictly between its final and initial rows.
fn closure_order(
    g: &ArcPresentation,
    runner: &[ArcId],
    initial: &[ArcId],
    untouched: &[usize],
    moved: &[usize],
) -> Option<Vec<usize>> {
    let row = |h: ArcId| g.row_of(h).unwrap();
    let untouched_rows: Vec<usize> = untouched.iter().map(|&t| row(initial[t])).collect();
    fn search(
        g: &ArcPresentation,
        runner: &[ArcId],
        initial: &[ArcId],
        untouched_rows: &[usize],
        remaining: &mut Vec<usize>,
        closed: &mut Vec<usize>,
        out: &mut Vec<usize>,
    ) -> bool {
        if remaining.is_empty() {
            return true;
        }
        for idx in 0..remaining.len() {
            let t = remaining[idx];
            // A strand that never turned spans from its own closure column
            // to the closure column of the track it ended on, wrapping the
            // seam; that track must close first.
            if remaining.iter().any(|&u| u != t && runner[u] == initial[t]) {
                continue;
            }
            let f = g.row_of(runner[t]).unwrap();
            let i = g.row_of(initial[t]).unwrap();
            let (lo, hi) = (f.min(i), f.max(i));
            let blocked = remaining
                .iter()
                .filter(|&&u| u != t)
                .map(|&u| g.row_of(runner[u]).unwrap())
                .chain(closed.iter().map(|&u| g.row_of(initial[u]).unwrap()))
                .chain(untouched_rows.iter().copied())
                .any(|r| r > lo && r < hi);
            if blocked {
                continue;
            }
            remaining.remove(idx);
            closed.push(t);
            out.push(t);
            if search(g, runner, initial, untouched_rows, remaining, closed, out) {
                return true;
            }
            out.pop();
            closed.pop();
            remaining.insert(idx, t);
        }
        false
    }
    let mut remaining = moved.to_vec();
    let mut closed = Vec::new();
    let mut out = Vec::new();
    if search(g, runner, initial, &untouched_rows, &mut remaining, &mut closed, &mut out) {
        Some(out)
    } else {
        None
    }
}

/// Removes all shearing-interval bookkeeping, keeping every arc as an
/// ordinary one.
pub fn strip_intervals(g: &ArcPresentation) -> ArcPresentation {
    let mut g2 = g.clone();
    g2.col_order.retain(|s| matches!(s, Site::Col(_)));
    for v in g2.verticals.values_mut() {
        v.interval = None;
    }
    for h in g2.horizontals.values_mut() {
        h.interval = None;
    }
    g2
}

/// Reads a braid word off an arc presentation by sweeping the columns
/// forward and recording each strand's rank changes.
pub fn grid_to_braid(g: &ArcPresentation) -> Result<(BraidWord, TransitionTrace), GridError> {
    let violations = crate::grid::validate_presentation(g);
    if !violations.is_empty() {
        return Err(GridError::InvalidDiagram(violations));
    }
    if g.col_order.iter().any(|s| matches!(s, Site::Wall { .. })) {
        return Err(GridError::PreconditionViolated(
            "strip shearing intervals before flattening".into(),
        ));
    }
    let sites = g.col_order.len();
    // Active strands over the gap entering site 0: arcs whose span covers
    // the boundary between the last site and site 0.
    let covers_seam = |h: ArcId| {
        let (a, b) = g.span_sites(h);
        // Forward from a, the seam (after site `sites-1`) is passed before b.
        let off_seam = (sites - 1 + sites - a) % sites;
        let off_b = (b + sites - a) % sites;
        off_seam < off_b || b < a || (b == a && false)
    };
    let mut active: Vec<ArcId> = g
        .horizontals
        .keys()
        .copied()
        .filter(|&h| covers_seam(h))
        .collect();
    active.sort_by_key(|&h| g.row_of(h).unwrap());
    let strands = active.len();
    if strands == 0 {
        return Err(GridError::EmptyDiagram);
    }
    let mut letters = Vec::new();
    let mut column_to_letters = Vec::new();
    for (site, s) in g.col_order.iter().enumerate() {
        let Site::Col(v) = s else { continue };
        let arc = &g.verticals[v];
        let Some(pos) = active.iter().position(|&h| h == arc.h_in) else {
            return Err(GridError::InvalidDiagram(vec![]));
        };
        active.remove(pos);
        let out_row = g.row_of(arc.h_out).unwrap();
        let dest = active
            .iter()
            .position(|&h| g.row_of(h).unwrap() > out_row)
            .unwrap_or(active.len());
        let mut emitted = Vec::new();
        if dest > pos {
            // Strand rises past `dest - pos` strands.
            for k in pos..dest {
                emitted.push((k + 1) as i32);
            }
        } else {
            for k in (dest..pos).rev() {
                emitted.push(-((k + 1) as i32));
            }
        }
        active.insert(dest, arc.h_out);
        letters.extend_from_slice(&emitted);
        column_to_letters.push((site, emitted));
        if active.len() != strands {
            return Err(GridError::InvalidDiagram(vec![]));
        }
    }
    let word = BraidWord::new(strands, letters)
        .map_err(|_| GridError::PreconditionViolated("inconsistent sweep".into()))?;
    let trace = TransitionTrace {
        source: SourceKind::Grid,
        letter_to_arcs: Vec::new(),
        seam_arcs: Vec::new(),
        column_to_letters,
    };
    Ok((word, trace))
}

/// Compares the word-side and grid-side linking data under the canonical
/// strand ↔ component correspondence of a construction trace.
pub fn linking_agrees(
    word: &BraidWord,
    word_matrix: &LinkingMatrix,
    g: &ArcPresentation,
    trace: &TransitionTrace,
) -> Result<bool, GridError> {
    let (grid_count, grid_matrix) = grid_components_and_linking(g)?;
    let closure = closure_components(word);
    if closure.count != grid_count || word_matrix.components != grid_count {
        return Ok(false);
    }
    let (_, labels) = g.components();
    // Word component of strand t ↔ grid component of its seam arc.
    let mut map: BTreeMap<usize, usize> = BTreeMap::new();
    for (t, &arc) in trace.seam_arcs.iter().enumerate() {
        let wc = closure.assignment[t];
        let gc = labels[&arc];
        if let Some(&prev) = map.get(&wc) {
            if prev != gc {
                return Ok(false);
            }
        } else {
            map.insert(wc, gc);
        }
    }
    if map.len() != grid_count {
        return Ok(false);
    }
    for a in 0..grid_count {
        for b in 0..grid_count {
            if word_matrix.crossings[a][b] != grid_matrix.crossings[map[&a]][map[&b]] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
