//! Arc presentations: rectangular diagrams on the cylinder.
//!
//! A diagram is a set of horizontal arcs (distinct heights, oriented forward
//! in the angle coordinate) and vertical arcs (distinct angles), alternating
//! around each link component. Internally arcs carry stable ids and the
//! geometry lives in two order structures: `row_order` (heights, bottom to
//! top) and `col_order` (a cyclic sequence of sites, where a site is either a
//! vertical arc or a shearing-interval wall).
//!
//! Shearing intervals occupy column gaps. Their two walls are sites in the
//! cyclic order; arcs deposited by shear moves sit between the walls and are
//! flagged with their interval. The complexity measure counts vertical arcs;
//! the sheared complexity counts only those outside the intervals.

mod moves;

pub use moves::{apply_elementary_move, enumerate_elementary_moves, MoveRules};

use crate::braid::LinkingMatrix;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use serde::{Deserialize, Serialize};

/// Stable identifier of an arc within one diagram lineage.
pub type ArcId = u32;

/// Orientation of a vertical arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dir {
    Up,
    Down,
}

/// A vertical arc: receives the strand from `h_in`, delivers it to `h_out`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerticalArc {
    pub h_in: ArcId,
    pub h_out: ArcId,
    pub interval: Option<u8>,
}

/// A horizontal arc, traversed forward in the angle coordinate from the
/// vertical arc `v_start` (which delivers it) to `v_end` (which receives it).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HorizontalArc {
    pub v_start: ArcId,
    pub v_end: ArcId,
    pub interval: Option<u8>,
}

/// One entry of the cyclic column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Site {
    Col(ArcId),
    Wall { interval: u8, exit: bool },
}

/// An arc presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcPresentation {
    pub verticals: BTreeMap<ArcId, VerticalArc>,
    pub horizontals: BTreeMap<ArcId, HorizontalArc>,
    /// Cyclic column order: vertical-arc sites and interval walls.
    pub col_order: Vec<Site>,
    /// Linear row order, bottom to top: horizontal-arc ids.
    pub row_order: Vec<ArcId>,
    next_id: ArcId,
}

/// Wall tag controlling which shear pushes a wall accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WallTag {
    /// Accepts deposits pushed forward across it.
    Front,
    /// Accepts deposits pushed backward across it.
    Back,
}

/// The shearing intervals of a search root: per interval, the tags of its
/// entry wall (first crossed going forward) and exit wall.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct ShearingConfig {
    pub walls: Vec<(WallTag, WallTag)>,
}

impl ShearingConfig {
    pub fn interval_count(&self) -> usize {
        self.walls.len()
    }
}

/// The protected structure tracked through a search: the edge-path (as its
/// horizontal arcs, in path order) and extra protected horizontal arcs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Marking {
    pub e_path: Vec<ArcId>,
    pub protected: Vec<ArcId>,
}

/// A structured invariant violation found by `validate_presentation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyDiagram,
    BrokenIncidence { arc: ArcId },
    DanglingReference { arc: ArcId },
    DuplicateSite { arc: ArcId },
    DuplicateRow { arc: ArcId },
    SelfLoop { arc: ArcId },
    ArcCountMismatch { verticals: usize, horizontals: usize },
    MalformedIntervals,
    ResidencyBreach { arc: ArcId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyDiagram => write!(f, "empty diagram"),
            Violation::BrokenIncidence { arc } => write!(f, "broken incidence at arc {arc}"),
            Violation::DanglingReference { arc } => write!(f, "dangling reference to arc {arc}"),
            Violation::DuplicateSite { arc } => write!(f, "vertical arc {arc} occupies two sites"),
            Violation::DuplicateRow { arc } => write!(f, "horizontal arc {arc} occupies two rows"),
            Violation::SelfLoop { arc } => write!(f, "arc {arc} closes on itself"),
            Violation::ArcCountMismatch { verticals, horizontals } => {
                write!(f, "{verticals} vertical vs {horizontals} horizontal arcs")
            }
            Violation::MalformedIntervals => write!(f, "malformed shearing intervals"),
            Violation::ResidencyBreach { arc } => write!(f, "arc {arc} breaches interval residency"),
        }
    }
}

/// Errors from grid operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridError {
    EmptyDiagram,
    PreconditionViolated(String),
    InvalidDiagram(Vec<Violation>),
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridError::EmptyDiagram => write!(f, "empty diagram"),
            GridError::PreconditionViolated(msg) => write!(f, "precondition violated: {msg}"),
            GridError::InvalidDiagram(vs) => write!(f, "invalid diagram ({} violations)", vs.len()),
        }
    }
}

/// The seven elementary move kinds, with operands in global coordinates
/// (row positions bottom-up, column positions in cyclic site order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum ElementaryMove {
    /// Relocate the extreme-row arc to the opposite extreme.
    HExchangeFlavor1 { top_to_bottom: bool },
    /// Swap the rows of two nested, consecutive horizontal arcs.
    HExchangeFlavor2 { row_a: usize, row_b: usize },
    /// Swap the columns of two nested, cyclically consecutive vertical arcs.
    VExchange { col_a: usize, col_b: usize },
    /// Merge two row-consecutive horizontal arcs across a shared vertical.
    HSimplify { row_a: usize, row_b: usize },
    /// Merge two column-consecutive vertical arcs across a shared horizontal.
    VSimplify { col_a: usize, col_b: usize },
    /// Swap rows of two arcs nested over the outside region, cutting the
    /// outer one inside an interval.
    ShearHExchange { inner_row: usize, outer_row: usize, interval: usize, at_exit: bool },
    /// Push a vertical arc into an adjacent interval.
    ShearVSimplify { col: usize, interval: usize },
}

impl ArcPresentation {
    pub fn empty() -> Self {
        ArcPresentation {
            verticals: BTreeMap::new(),
            horizontals: BTreeMap::new(),
            col_order: Vec::new(),
            row_order: Vec::new(),
            next_id: 0,
        }
    }

    pub fn fresh_id(&mut self) -> ArcId {
        let id = self.next_id;
        self.next_id += 1;
        id
    }

    /// Number of vertical arcs, interval residents included.
    pub fn vertical_count(&self) -> usize {
        self.verticals.len()
    }

    /// Site index of a vertical arc.
    pub fn site_of(&self, v: ArcId) -> Option<usize> {
        self.col_order.iter().position(|s| matches!(s, Site::Col(id) if *id == v))
    }

    /// Row position of a horizontal arc.
    pub fn row_of(&self, h: ArcId) -> Option<usize> {
        self.row_order.iter().position(|&id| id == h)
    }

    /// Column rank of a vertical arc (its index among vertical arcs, in the
    /// stored cyclic order).
    pub fn col_rank_of(&self, v: ArcId) -> Option<usize> {
        let mut rank = 0;
        for s in &self.col_order {
            if let Site::Col(id) = s {
                if *id == v {
                    return Some(rank);
                }
                rank += 1;
            }
        }
        None
    }

    /// Vertical arc at a column rank.
    pub fn vertical_at_rank(&self, rank: usize) -> Option<ArcId> {
        let mut r = 0;
        for s in &self.col_order {
            if let Site::Col(id) = s {
                if r == rank {
                    return Some(*id);
                }
                r += 1;
            }
        }
        None
    }

    /// The two endpoint rows of a vertical arc: (incoming, outgoing).
    pub fn v_rows(&self, v: ArcId) -> (usize, usize) {
        let arc = &self.verticals[&v];
        (self.row_of(arc.h_in).unwrap(), self.row_of(arc.h_out).unwrap())
    }

    pub fn v_dir(&self, v: ArcId) -> Dir {
        let (rin, rout) = self.v_rows(v);
        if rout > rin {
            Dir::Up
        } else {
            Dir::Down
        }
    }

    /// Whether `site` lies strictly inside the forward cyclic range
    /// `(from, to)` of `col_order` indices.
    pub fn site_strictly_between(&self, from: usize, to: usize, site: usize) -> bool {
        let n = self.col_order.len();
        if from == to {
            return false;
        }
        let span = (to + n - from) % n;
        let off = (site + n - from) % n;
        off > 0 && off < span
    }

    /// Span of a horizontal arc as (start site, end site).
    pub fn span_sites(&self, h: ArcId) -> (usize, usize) {
        let arc = &self.horizontals[&h];
        (self.site_of(arc.v_start).unwrap(), self.site_of(arc.v_end).unwrap())
    }

    /// Whether the span of `h` covers `site` strictly (endpoints excluded).
    pub fn span_crosses_site(&self, h: ArcId, site: usize) -> bool {
        let (a, b) = self.span_sites(h);
        self.site_strictly_between(a, b, site)
    }

    /// True when the forward range `(a, b)` contains no wall site strictly
    /// inside.
    pub fn range_wall_free(&self, a: usize, b: usize) -> bool {
        self.col_order
            .iter()
            .enumerate()
            .filter(|(_, s)| matches!(s, Site::Wall { .. }))
            .all(|(i, _)| !self.site_strictly_between(a, b, i))
    }

    /// All wall sites, as (site index, interval, exit flag), in cyclic order.
    pub fn wall_sites(&self) -> Vec<(usize, u8, bool)> {
        self.col_order
            .iter()
            .enumerate()
            .filter_map(|(i, s)| match s {
                Site::Wall { interval, exit } => Some((i, *interval, *exit)),
                _ => None,
            })
            .collect()
    }

    /// Components as a map arc id → component index, plus the count.
    /// Components are numbered by their lowest horizontal row.
    pub fn components(&self) -> (usize, BTreeMap<ArcId, usize>) {
        let mut labels: BTreeMap<ArcId, usize> = BTreeMap::new();
        let mut comps: Vec<Vec<ArcId>> = Vec::new();
        let mut seen: BTreeSet<ArcId> = BTreeSet::new();
        for &h0 in &self.row_order {
            if seen.contains(&h0) {
                continue;
            }
            let mut members = Vec::new();
            let mut h = h0;
            loop {
                seen.insert(h);
                members.push(h);
                let v = self.horizontals[&h].v_end;
                h = self.verticals[&v].h_out;
                if h == h0 {
                    break;
                }
            }
            comps.push(members);
        }
        // row_order scan already visits components bottom-up.
        for (idx, members) in comps.iter().enumerate() {
            for &h in members {
                labels.insert(h, idx);
                let v = self.horizontals[&h].v_end;
                labels.insert(v, idx);
            }
        }
        (comps.len(), labels)
    }

    /// Winding of each component: how many of its horizontal arcs span any
    /// fixed angle (the count is angle independent).
    pub fn component_windings(&self) -> Vec<usize> {
        let (count, labels) = self.components();
        let mut windings = vec![0usize; count];
        if self.col_order.is_empty() {
            return windings;
        }
        // Probe the gap after site 0.
        for (&h, arc) in &self.horizontals {
            let (a, b) = self.span_sites(h);
            let _ = arc;
            let n = self.col_order.len();
            let covers = {
                // Gap between site 0 and site 1 (cyclically): covered when the
                // forward span from a to b passes the boundary after site 0.
                let span = (b + n - a) % n;
                let off = (0 + n - a) % n;
                off < span
            };
            if covers {
                windings[labels[&h]] += 1;
            }
        }
        windings
    }
}

/// Checks all structural invariants; empty result means the diagram is valid.
pub fn validate_presentation(g: &ArcPresentation) -> Vec<Violation> {
    let mut out = Vec::new();
    if g.verticals.is_empty() && g.horizontals.is_empty() {
        return vec![Violation::EmptyDiagram];
    }
    if g.verticals.len() != g.horizontals.len() {
        out.push(Violation::ArcCountMismatch {
            verticals: g.verticals.len(),
            horizontals: g.horizontals.len(),
        });
    }
    // Site and row occupancy: each arc exactly once.
    let mut seen_cols: BTreeSet<ArcId> = BTreeSet::new();
    for s in &g.col_order {
        if let Site::Col(v) = s {
            if !g.verticals.contains_key(v) {
                out.push(Violation::DanglingReference { arc: *v });
            }
            if !seen_cols.insert(*v) {
                out.push(Violation::DuplicateSite { arc: *v });
            }
        }
    }
    for v in g.verticals.keys() {
        if !seen_cols.contains(v) {
            out.push(Violation::DanglingReference { arc: *v });
        }
    }
    let mut seen_rows: BTreeSet<ArcId> = BTreeSet::new();
    for h in &g.row_order {
        if !g.horizontals.contains_key(h) {
            out.push(Violation::DanglingReference { arc: *h });
        }
        if !seen_rows.insert(*h) {
            out.push(Violation::DuplicateRow { arc: *h });
        }
    }
    for h in g.horizontals.keys() {
        if !seen_rows.contains(h) {
            out.push(Violation::DanglingReference { arc: *h });
        }
    }
    // Incidence: h.v_start.h_out == h and h.v_end.h_in == h, both ways.
    for (&h, arc) in &g.horizontals {
        if arc.v_start == arc.v_end {
            out.push(Violation::SelfLoop { arc: h });
            continue;
        }
        match (g.verticals.get(&arc.v_start), g.verticals.get(&arc.v_end)) {
            (Some(vs), Some(ve)) => {
                if vs.h_out != h || ve.h_in != h {
                    out.push(Violation::BrokenIncidence { arc: h });
                }
            }
            _ => out.push(Violation::DanglingReference { arc: h }),
        }
    }
    for (&v, arc) in &g.verticals {
        if arc.h_in == arc.h_out {
            out.push(Violation::SelfLoop { arc: v });
            continue;
        }
        match (g.horizontals.get(&arc.h_in), g.horizontals.get(&arc.h_out)) {
            (Some(hi), Some(ho)) => {
                if hi.v_end != v || ho.v_start != v {
                    out.push(Violation::BrokenIncidence { arc: v });
                }
            }
            _ => out.push(Violation::DanglingReference { arc: v }),
        }
    }
    if !out.is_empty() {
        return out;
    }
    // Interval structure: for each interval, sites form a consecutive block
    // [entry wall, resident columns, exit wall]; resident flags agree.
    let walls = g.wall_sites();
    let interval_count = walls.iter().map(|&(_, i, _)| i as usize + 1).max().unwrap_or(0);
    let mut ok_intervals = walls.len() == 2 * interval_count;
    for i in 0..interval_count {
        let entry = walls.iter().find(|&&(_, w, exit)| w as usize == i && !exit);
        let exit = walls.iter().find(|&&(_, w, exit)| w as usize == i && exit);
        let (Some(&(en, _, _)), Some(&(ex, _, _))) = (entry, exit) else {
            ok_intervals = false;
            break;
        };
        // Sites strictly inside (en, ex) must be columns resident in i.
        let n = g.col_order.len();
        let mut p = (en + 1) % n;
        while p != ex {
            match g.col_order[p] {
                Site::Col(v) if g.verticals[&v].interval == Some(i as u8) => {}
                _ => {
                    ok_intervals = false;
                }
            }
            p = (p + 1) % n;
        }
    }
    if !ok_intervals {
        out.push(Violation::MalformedIntervals);
        return out;
    }
    // Residency: flagged verticals sit inside their interval block; flagged
    // horizontals span within it.
    for (&v, arc) in &g.verticals {
        let site = g.site_of(v).unwrap();
        let inside = interval_of_site(g, site);
        if arc.interval != inside {
            out.push(Violation::ResidencyBreach { arc: v });
        }
    }
    for (&h, arc) in &g.horizontals {
        if let Some(i) = arc.interval {
            let (a, b) = g.span_sites(h);
            let walls = g.wall_sites();
            let en = walls.iter().find(|&&(_, w, exit)| w == i && !exit).map(|&(s, _, _)| s);
            let ex = walls.iter().find(|&&(_, w, exit)| w == i && exit).map(|&(s, _, _)| s);
            let (Some(en), Some(ex)) = (en, ex) else {
                out.push(Violation::ResidencyBreach { arc: h });
                continue;
            };
            let within = g.site_strictly_between(en, ex, a)
                && g.site_strictly_between(en, ex, b)
                && !g.site_strictly_between(a, b, ex);
            if !within {
                out.push(Violation::ResidencyBreach { arc: h });
            }
        }
    }
    out
}

/// The interval whose block contains this site, if any.
pub(crate) fn interval_of_site(g: &ArcPresentation, site: usize) -> Option<u8> {
    let walls = g.wall_sites();
    for &(en, i, exit) in &walls {
        if exit {
            continue;
        }
        let ex = walls
            .iter()
            .find(|&&(_, w, e)| w == i && e)
            .map(|&(s, _, _)| s)
            .unwrap_or(en);
        if g.site_strictly_between(en, ex, site) {
            return Some(i);
        }
        let _ = exit;
    }
    None
}

/// Number of vertical arcs (interval residents included).
pub fn complexity(g: &ArcPresentation) -> Result<usize, GridError> {
    if g.verticals.is_empty() {
        return Err(GridError::EmptyDiagram);
    }
    Ok(g.verticals.len())
}

/// Number of vertical arcs outside all shearing intervals.
pub fn sheared_complexity(g: &ArcPresentation, _sc: &ShearingConfig) -> usize {
    g.verticals.values().filter(|v| v.interval.is_none()).count()
}

/// Components and linking of the diagram under the vertical-over-horizontal
/// crossing model: a crossing is a vertical arc passing a horizontal arc's
/// row strictly inside its own row span, at a column strictly inside the
/// horizontal arc's span; its sign is `+1` for upward vertical arcs.
pub fn grid_components_and_linking(g: &ArcPresentation) -> Result<(usize, LinkingMatrix), GridError> {
    if g.verticals.is_empty() {
        return Err(GridError::EmptyDiagram);
    }
    let (count, labels) = g.components();
    let mut m = LinkingMatrix::zero(count);
    for (&v, _) in &g.verticals {
        let site = g.site_of(v).unwrap();
        let (rin, rout) = g.v_rows(v);
        let (lo, hi) = (rin.min(rout), rin.max(rout));
        let sign = if rout > rin { 1i64 } else { -1i64 };
        for (&h, _) in &g.horizontals {
            let row = g.row_of(h).unwrap();
            if row > lo && row < hi && g.span_crosses_site(h, site) {
                m.add_crossing(labels[&v], labels[&h], sign);
            }
        }
    }
    Ok((count, m))
}

/// Inserts `k` empty shearing intervals consecutively into one column gap,
/// one configuration per gap (two tag variants per gap for `k = 3`).
///
/// Tags: one interval gets (Front, Back) so either side feeds it; two get
/// Front for the earlier and Back for the later, so each side of the gap
/// feeds its own interval; three get uniform per-interval tags in the two
/// variants Front-Back-Front and Back-Front-Back.
pub fn place_shearing_intervals(
    g: &ArcPresentation,
    k: usize,
) -> Vec<(ArcPresentation, ShearingConfig)> {
    if k == 0 {
        return vec![(g.clone(), ShearingConfig::default())];
    }
    let tag_sets: Vec<Vec<(WallTag, WallTag)>> = match k {
        1 => vec![vec![(WallTag::Front, WallTag::Back)]],
        2 => vec![vec![(WallTag::Front, WallTag::Front), (WallTag::Back, WallTag::Back)]],
        3 => vec![
            vec![
                (WallTag::Front, WallTag::Front),
                (WallTag::Back, WallTag::Back),
                (WallTag::Front, WallTag::Front),
            ],
            vec![
                (WallTag::Back, WallTag::Back),
                (WallTag::Front, WallTag::Front),
                (WallTag::Back, WallTag::Back),
            ],
        ],
        _ => return Vec::new(),
    };
    let mut out = Vec::new();
    let gaps = g.col_order.len();
    for gap in 0..gaps {
        for tags in &tag_sets {
            let mut d = g.clone();
            let mut insert_at = gap + 1;
            for i in 0..k {
                d.col_order.insert(insert_at, Site::Wall { interval: i as u8, exit: false });
                d.col_order.insert(insert_at + 1, Site::Wall { interval: i as u8, exit: true });
                insert_at += 2;
            }
            out.push((d, ShearingConfig { walls: tags.clone() }));
        }
    }
    out
}

/// Endpoint encoding used by canonical keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum EndKey {
    Out(u32),
    In(u8),
}

/// A memoization key: the diagram restricted outside the intervals, with
/// rows and columns replaced by their ranks among visible arcs and interval
/// interiors collapsed to the interval index their strands end in, plus the
/// marking. Rows are keyed up to cyclic rotation (the orbit of the flavor-1
/// relocation); columns are keyed up to rotation when no walls anchor them.
pub fn canonical_key(g: &ArcPresentation, _sc: &ShearingConfig, m: &Marking) -> Vec<u8> {
    let walls = g.wall_sites();
    let n = g.col_order.len();
    let visible_cols: Vec<(usize, ArcId)> = g
        .col_order
        .iter()
        .enumerate()
        .filter_map(|(i, s)| match s {
            Site::Col(v) if g.verticals[v].interval.is_none() => Some((i, *v)),
            _ => None,
        })
        .collect();
    let visible_rows: Vec<ArcId> = g
        .row_order
        .iter()
        .copied()
        .filter(|h| g.horizontals[h].interval.is_none())
        .collect();
    let origin = walls.last().map(|&(s, _, _)| (s + 1) % n).unwrap_or(0);

    let encode_from = |origin_site: usize, row_rot: usize| -> Vec<u8> {
        let mut rank_of: BTreeMap<ArcId, u32> = BTreeMap::new();
        let mut ordered: Vec<(usize, ArcId)> = visible_cols
            .iter()
            .map(|&(site, v)| (((site + n - origin_site) % n), v))
            .collect();
        ordered.sort_unstable();
        for (rank, &(_, v)) in ordered.iter().enumerate() {
            rank_of.insert(v, rank as u32);
        }
        let end_key = |v: ArcId| -> EndKey {
            match g.verticals[&v].interval {
                None => EndKey::Out(rank_of[&v]),
                Some(i) => EndKey::In(i),
            }
        };
        let mut bytes = Vec::new();
        bytes.push(visible_rows.len() as u8);
        bytes.push(visible_cols.len() as u8);
        for k in 0..visible_rows.len() {
            let h = visible_rows[(k + row_rot) % visible_rows.len()];
            let arc = &g.horizontals[&h];
            for end in [end_key(arc.v_start), end_key(arc.v_end)] {
                match end {
                    EndKey::Out(r) => {
                        bytes.push(0);
                        bytes.extend_from_slice(&r.to_le_bytes());
                    }
                    EndKey::In(i) => {
                        bytes.push(1);
                        bytes.push(i);
                    }
                }
            }
            let e_pos = m.e_path.iter().position(|&e| e == h).map(|p| p as u8 + 1).unwrap_or(0);
            bytes.push(e_pos);
            bytes.push(u8::from(m.protected.contains(&h)));
        }
        bytes
    };

    let row_rots = visible_rows.len().max(1);
    if walls.is_empty() {
        let mut best: Option<Vec<u8>> = None;
        for &(site, _) in &visible_cols {
            for r in 0..row_rots {
                let k = encode_from(site, r);
                if best.as_ref().is_none_or(|b| k < *b) {
                    best = Some(k);
                }
            }
        }
        best.unwrap_or_default()
    } else {
        (0..row_rots).map(|r| encode_from(origin, r)).min().unwrap_or_default()
    }
}

#[cfg(test)]
mod tests;

#[cfg(test)]
pub(crate) mod fixtures;
