//! Recognizers for destabilization, thin exchange moves, elementary flypes,
//! and double destabilization, plus the relatedness deciders.
//!
//! Each recognizer first tries the syntactic detector on the cyclically
//! reduced word, then searches the braid-isotopy class: it builds the arc
//! presentation, places shearing intervals in every column gap, enumerates
//! the admissible edge-path markings, and runs a memoized monotone search
//! over elementary moves. A terminal state is one whose marking has shrunk
//! to the target pattern and whose flattened word passes the corresponding
//! syntactic detector; the path to it is returned as a replayable
//! certificate.

use crate::braid::{
    apply_elementary_flype, apply_exchange_move, are_conjugate, cyclic_reduce,
    destabilize_word, detect_destabilization_form, detect_double_destabilization_form,
    enumerate_elementary_flype_forms, enumerate_exchange_forms, BraidWord, ConjugacyError,
    ConjugacyLimits,
};
use crate::grid::{
    self, apply_elementary_move, canonical_key, enumerate_elementary_moves,
    place_shearing_intervals, sheared_complexity, ArcId, ArcPresentation, ElementaryMove,
    Marking, MoveRules, ShearingConfig,
};
use crate::transit::{braid_to_grid, grid_to_braid, strip_intervals};
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::Cell;
use core::fmt;
use serde::{Deserialize, Serialize};

/// Caps making "state space exhausted" and "gave up" distinguishable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_states: usize,
    pub max_moves_per_certificate: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_states: 100_000, max_moves_per_certificate: 256 }
    }
}

/// The four recognized move kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum MoveKind {
    Destabilization,
    ThinExchange,
    ElementaryFlype,
    DoubleDestabilization,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MoveKind::Destabilization => "destabilization",
            MoveKind::ThinExchange => "thin exchange move",
            MoveKind::ElementaryFlype => "elementary flype",
            MoveKind::DoubleDestabilization => "double destabilization",
        };
        f.write_str(s)
    }
}

/// What a certificate claims about its terminal diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub kind: MoveKind,
    /// The braid word of the terminal diagram, which passes the kind's
    /// syntactic detector.
    pub terminal_word: BraidWord,
    /// Rows of the marking's horizontal arcs in the terminal diagram.
    pub witness_rows: Vec<usize>,
}

/// A replayable witness: the initial diagram, the move sequence, and the
/// claimed terminal pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveCertificate {
    pub initial_word: BraidWord,
    pub initial_grid: ArcPresentation,
    pub config: ShearingConfig,
    pub initial_marking: Marking,
    pub moves: Vec<ElementaryMove>,
    pub claim: Claim,
}

/// Outcome of a recognition run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Found(MoveCertificate),
    NotAdmitted,
    Inconclusive { states_visited: usize },
}

impl Verdict {
    pub fn is_found(&self) -> bool {
        matches!(self, Verdict::Found(_))
    }
}

/// A verdict together with search statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionResult {
    pub verdict: Verdict,
    pub states_visited: usize,
}

/// Errors replaying a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReplayError {
    InvalidInitialDiagram,
    InvalidMoveAtStep(usize),
    ComplexityIncreased(usize),
    PatternMismatch,
}

impl fmt::Display for ReplayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReplayError::InvalidInitialDiagram => write!(f, "initial diagram is invalid"),
            ReplayError::InvalidMoveAtStep(k) => write!(f, "move {k} does not apply"),
            ReplayError::ComplexityIncreased(k) => write!(f, "complexity increased at move {k}"),
            ReplayError::PatternMismatch => write!(f, "terminal pattern does not match the claim"),
        }
    }
}

fn move_rules(kind: MoveKind) -> MoveRules {
    MoveRules { forbid_shear_v_on_e: matches!(kind, MoveKind::Destabilization) }
}

/// The horizontal arcs crossing every wall of the gap, in row order.
fn gap_crossers(g: &ArcPresentation) -> Vec<ArcId> {
    let walls = g.wall_sites();
    g.row_order
        .iter()
        .copied()
        .filter(|&h| walls.iter().all(|&(site, _, _)| g.span_crosses_site(h, site)))
        .collect()
}

/// The forward path of horizontal arcs from one gap crosser to the next one
/// on its component.
fn edge_path_from(g: &ArcPresentation, start: ArcId, crossers: &BTreeSet<ArcId>) -> Option<Vec<ArcId>> {
    let mut path = vec![start];
    let mut h = start;
    loop {
        let v = g.horizontals[&h].v_end;
        h = g.verticals[&v].h_out;
        if h == start {
            return None;
        }
        path.push(h);
        if crossers.contains(&h) {
            return Some(path);
        }
    }
}

struct RootState {
    grid: ArcPresentation,
    config: ShearingConfig,
    marking: Marking,
}

/// Enumerates the search roots for a move kind on one word.
fn roots_for(kind: MoveKind, word: &BraidWord) -> Vec<RootState> {
    let (g0, _) = braid_to_grid(word);
    let k = match kind {
        MoveKind::Destabilization => 1,
        MoveKind::ThinExchange | MoveKind::DoubleDestabilization => 2,
        MoveKind::ElementaryFlype => 3,
    };
    let mut roots = Vec::new();
    for (g, sc) in place_shearing_intervals(&g0, k) {
        let crossers = gap_crossers(&g);
        let crosser_set: BTreeSet<ArcId> = crossers.iter().copied().collect();
        let (_, labels) = g.components();
        let windings = g.component_windings();
        for &start in &crossers {
            if kind == MoveKind::Destabilization && windings[labels[&start]] < 2 {
                continue;
            }
            let Some(path) = edge_path_from(&g, start, &crosser_set) else { continue };
            let e_set: BTreeSet<ArcId> = path.iter().copied().collect();
            match kind {
                MoveKind::Destabilization => {
                    roots.push(RootState {
                        grid: g.clone(),
                        config: sc.clone(),
                        marking: Marking { e_path: path, protected: vec![] },
                    });
                }
                MoveKind::ThinExchange | MoveKind::DoubleDestabilization => {
                    for &hat in &crossers {
                        if e_set.contains(&hat) {
                            continue;
                        }
                        roots.push(RootState {
                            grid: g.clone(),
                            config: sc.clone(),
                            marking: Marking { e_path: path.clone(), protected: vec![hat] },
                        });
                    }
                }
                MoveKind::ElementaryFlype => {
                    for (i, &hat1) in crossers.iter().enumerate() {
                        if e_set.contains(&hat1) {
                            continue;
                        }
                        for &hat2 in crossers.iter().skip(i + 1) {
                            if e_set.contains(&hat2) {
                                continue;
                            }
                            roots.push(RootState {
                                grid: g.clone(),
                                config: sc.clone(),
                                marking: Marking {
                                    e_path: path.clone(),
                                    protected: vec![hat1, hat2],
                                },
                            });
                        }
                    }
                }
            }
        }
    }
    roots
}

/// Pattern length of the shrunk edge path per kind.
fn terminal_e_len(kind: MoveKind) -> usize {
    match kind {
        MoveKind::Destabilization | MoveKind::ElementaryFlype => 2,
        MoveKind::ThinExchange | MoveKind::DoubleDestabilization => 1,
    }
}

/// Whether a flattened word passes the kind's syntactic detector.
fn word_passes(kind: MoveKind, word: &BraidWord) -> bool {
    match kind {
        MoveKind::Destabilization => detect_destabilization_form(word).is_some(),
        MoveKind::ThinExchange => !enumerate_exchange_forms(word).is_empty(),
        MoveKind::ElementaryFlype => !enumerate_elementary_flype_forms(word).is_empty(),
        MoveKind::DoubleDestabilization => !double_destab_splits(word).is_empty(),
    }
}

/// Cyclic splittings `W · U` with `U` over indices `≥ n-3` and `W` over
/// indices `≤ n-3`, both sides of the 2-strand-crossing footprint.
pub fn double_destab_splits(word: &BraidWord) -> Vec<(Vec<i32>, Vec<i32>)> {
    let n = word.strands();
    if n < 4 || word.is_empty() {
        return Vec::new();
    }
    let lo_limit = (n - 3) as i32;
    let mut out: Vec<(Vec<i32>, Vec<i32>)> = Vec::new();
    let len = word.len();
    for rot in 0..len {
        let rotated = word.rotated(rot);
        for split in 1..=len {
            let (w_block, u_block) = rotated.letters().split_at(len - split);
            if u_block.iter().any(|&l| l.abs() < lo_limit) {
                continue;
            }
            if w_block.iter().any(|&l| l.abs() > lo_limit) {
                continue;
            }
            if u_block.is_empty() {
                continue;
            }
            let key = (w_block.to_vec(), u_block.to_vec());
            if !out.contains(&key) {
                out.push(key);
            }
        }
    }
    out
}

struct SearchOutcome {
    found: Option<MoveCertificate>,
    capped: bool,
}

/// Memoized monotone search over one root, breadth-first by
/// (sheared complexity, insertion order).
fn search_root(
    kind: MoveKind,
    initial_word: &BraidWord,
    root: &RootState,
    budget: &SearchBudget,
    states_used: &mut usize,
    accept: &mut dyn FnMut(&BraidWord) -> bool,
) -> SearchOutcome {
    let rules = move_rules(kind);
    struct Node {
        grid: ArcPresentation,
        marking: Marking,
        parent: Option<(usize, ElementaryMove)>,
        depth: usize,
    }
    let mut nodes: Vec<Node> = Vec::new();
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    // Queue keyed by (sheared complexity, insertion sequence).
    let mut queue: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut capped = false;

    let key0 = canonical_key(&root.grid, &root.config, &root.marking);
    seen.insert(key0);
    nodes.push(Node { grid: root.grid.clone(), marking: root.marking.clone(), parent: None, depth: 0 });
    queue.insert((sheared_complexity(&root.grid, &root.config), 0));

    while let Some(&(cx, idx)) = queue.iter().next() {
        queue.remove(&(cx, idx));
        if *states_used >= budget.max_states {
            capped = true;
            break;
        }
        *states_used += 1;

        // Terminal test: pattern plus authoritative word-level detector.
        let (depth, flat) = {
            let node = &nodes[idx];
            let flat = if node.marking.e_path.len() == terminal_e_len(kind) {
                grid_to_braid(&strip_intervals(&node.grid)).ok().map(|(w, _)| w)
            } else {
                None
            };
            (node.depth, flat)
        };
        if let Some(word) = flat {
            if word_passes(kind, &word) && accept(&word) {
                // Reconstruct the move path.
                let mut moves = Vec::new();
                let mut cur = idx;
                while let Some((p, mv)) = nodes[cur].parent {
                    moves.push(mv);
                    cur = p;
                }
                moves.reverse();
                let witness_rows = nodes[idx]
                    .marking
                    .e_path
                    .iter()
                    .filter_map(|&h| nodes[idx].grid.row_of(h))
                    .collect();
                return SearchOutcome {
                    found: Some(MoveCertificate {
                        initial_word: initial_word.clone(),
                        initial_grid: root.grid.clone(),
                        config: root.config.clone(),
                        initial_marking: root.marking.clone(),
                        moves,
                        claim: Claim { kind, terminal_word: word, witness_rows },
                    }),
                    capped,
                };
            }
        }

        if depth >= budget.max_moves_per_certificate {
            capped = true;
            continue;
        }
        let (grid, marking) = (nodes[idx].grid.clone(), nodes[idx].marking.clone());
        for mv in enumerate_elementary_moves(&grid, &root.config, &marking, &rules) {
            let Ok((g2, _, m2)) = apply_elementary_move(&grid, &root.config, &marking, &mv, &rules)
            else {
                continue;
            };
            let key = canonical_key(&g2, &root.config, &m2);
            if !seen.insert(key) {
                continue;
            }
            let seq = nodes.len();
            let cx2 = sheared_complexity(&g2, &root.config);
            nodes.push(Node { grid: g2, marking: m2, parent: Some((idx, mv)), depth: depth + 1 });
            queue.insert((cx2, seq));
        }
    }
    capped |= !queue.is_empty();
    SearchOutcome { found: None, capped }
}

fn fast_certificate(kind: MoveKind, word: &BraidWord) -> MoveCertificate {
    let (g, _) = braid_to_grid(word);
    let (flat, _) = grid_to_braid(&g).expect("fresh construction flattens");
    MoveCertificate {
        initial_word: word.clone(),
        initial_grid: g,
        config: ShearingConfig::default(),
        initial_marking: Marking::default(),
        moves: Vec::new(),
        claim: Claim { kind, terminal_word: flat, witness_rows: Vec::new() },
    }
}

fn recognize(
    kind: MoveKind,
    w: &BraidWord,
    budget: &SearchBudget,
    accept: &mut dyn FnMut(&BraidWord) -> bool,
) -> RecognitionResult {
    let reduced = cyclic_reduce(w);
    // Syntactic fast path on the reduced word.
    if word_passes(kind, &reduced) && accept(&reduced) {
        return RecognitionResult {
            verdict: Verdict::Found(fast_certificate(kind, &reduced)),
            states_visited: 0,
        };
    }
    if reduced.is_empty() {
        return RecognitionResult { verdict: Verdict::NotAdmitted, states_visited: 0 };
    }
    let mut states_used = 0usize;
    let mut capped = false;
    for root in roots_for(kind, &reduced) {
        let outcome = search_root(kind, &reduced, &root, budget, &mut states_used, accept);
        capped |= outcome.capped;
        if let Some(cert) = outcome.found {
            return RecognitionResult { verdict: Verdict::Found(cert), states_visited: states_used };
        }
    }
    let verdict = if capped {
        Verdict::Inconclusive { states_visited: states_used }
    } else {
        Verdict::NotAdmitted
    };
    RecognitionResult { verdict, states_visited: states_used }
}

/// Decides whether the closed braid is braid isotopic to one of the form
/// `W σ_{n-1}^{±1}`.
pub fn recognize_destabilization(w: &BraidWord, budget: &SearchBudget) -> RecognitionResult {
    if w.strands() < 2 {
        return RecognitionResult { verdict: Verdict::NotAdmitted, states_visited: 0 };
    }
    recognize(MoveKind::Destabilization, w, budget, &mut |_| true)
}

/// Decides whether the closed braid is braid isotopic to one admitting an
/// exchange move; the certificate witnesses a thin one.
pub fn recognize_thin_exchange(w: &BraidWord, budget: &SearchBudget) -> RecognitionResult {
    if w.strands() < 4 {
        return RecognitionResult { verdict: Verdict::NotAdmitted, states_visited: 0 };
    }
    recognize(MoveKind::ThinExchange, w, budget, &mut |_| true)
}

/// Decides whether the closed braid is braid isotopic to one admitting an
/// elementary flype.
pub fn recognize_elementary_flype(w: &BraidWord, budget: &SearchBudget) -> RecognitionResult {
    if w.strands() < 3 {
        return RecognitionResult { verdict: Verdict::NotAdmitted, states_visited: 0 };
    }
    recognize(MoveKind::ElementaryFlype, w, budget, &mut |_| true)
}

/// The 2-strand crossing block on 4 strands: `σ₂^ε σ₃^ε σ₁^ε σ₂^ε`.
fn two_strand_crossing(eps: i8) -> BraidWord {
    let e = eps as i32;
    BraidWord::new(4, vec![2 * e, 3 * e, e, 2 * e]).unwrap()
}

/// Checks one `W | U` split per the double-destabilization procedure: the
/// U-block, on its own four strands, destabilizes twice and is conjugate to
/// a 2-strand crossing.
fn check_double_split(
    u_block: &[i32],
    n: usize,
    budget: &SearchBudget,
    capped: &mut bool,
) -> Option<i8> {
    let shift = (n - 4) as i32;
    let letters: Vec<i32> = u_block
        .iter()
        .map(|&l| if l > 0 { l - shift } else { l + shift })
        .collect();
    if letters.iter().any(|&l| l == 0 || l.abs() > 3) {
        return None;
    }
    let u4 = BraidWord::new(4, letters).ok()?;
    // First destabilization of the U-block.
    let first = recognize_destabilization(&u4, budget);
    let cert = match first.verdict {
        Verdict::Found(c) => c,
        Verdict::NotAdmitted => return None,
        Verdict::Inconclusive { .. } => {
            *capped = true;
            return None;
        }
    };
    let once = destabilize_word(&cyclic_reduce(&cert.claim.terminal_word)).ok()?;
    // Second destabilization on the result.
    match recognize_destabilization(&once, budget).verdict {
        Verdict::Found(_) => {}
        Verdict::NotAdmitted => return None,
        Verdict::Inconclusive { .. } => {
            *capped = true;
            return None;
        }
    }
    let limits = ConjugacyLimits::default();
    for eps in [1i8, -1] {
        match are_conjugate(&u4, &two_strand_crossing(eps), &limits) {
            Ok(true) => return Some(eps),
            Ok(false) => {}
            Err(_) => *capped = true,
        }
    }
    None
}

/// Decides whether the closed braid is braid isotopic to one of the form
/// `W σ_{n-2}^ε σ_{n-1}^ε σ_{n-3}^ε σ_{n-2}^ε` with `W` over indices
/// `≤ n-3`.
pub fn recognize_double_destabilization(w: &BraidWord, budget: &SearchBudget) -> RecognitionResult {
    if w.strands() < 4 {
        return RecognitionResult { verdict: Verdict::NotAdmitted, states_visited: 0 };
    }
    let reduced = cyclic_reduce(w);
    if let Ok(Some(_)) = detect_double_destabilization_form(&reduced) {
        return RecognitionResult {
            verdict: Verdict::Found(fast_certificate(MoveKind::DoubleDestabilization, &reduced)),
            states_visited: 0,
        };
    }
    let n = w.strands();
    let sub_capped = Cell::new(false);
    let budget_copy = *budget;
    let mut accept = |word: &BraidWord| {
        let mut local_capped = false;
        let hit = double_destab_splits(word)
            .into_iter()
            .any(|(_, u)| check_double_split(&u, n, &budget_copy, &mut local_capped).is_some());
        if local_capped {
            sub_capped.set(true);
        }
        hit
    };
    let mut result = recognize(MoveKind::DoubleDestabilization, w, budget, &mut accept);
    if sub_capped.get() {
        if let Verdict::NotAdmitted = result.verdict {
            result.verdict = Verdict::Inconclusive { states_visited: result.states_visited };
        }
    }
    result
}

/// Relatedness decider errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelateError {
    BudgetExceeded,
    IncompatibleStrands { x: usize, y: usize },
}

impl fmt::Display for RelateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelateError::BudgetExceeded => write!(f, "conjugacy budget exceeded"),
            RelateError::IncompatibleStrands { x, y } => {
                write!(f, "incompatible strand counts {x} vs {y}")
            }
        }
    }
}

/// The relatedness relations decided by `related_by_move`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum RelationKind {
    ThinExchange,
    ElementaryFlype,
    DoubleDestab,
}

/// A verdict for relatedness, carrying the witnessing move when found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationVerdict {
    Found { witness: String, states_visited: usize },
    NotAdmitted,
    Inconclusive { states_visited: usize },
}

/// Collects the candidate in-form words of `x`: its reduced word plus every
/// terminal word the search reaches, across all roots, within budget.
fn collect_form_words(
    kind: MoveKind,
    x: &BraidWord,
    budget: &SearchBudget,
    capped: &mut bool,
) -> Vec<BraidWord> {
    let reduced = cyclic_reduce(x);
    let mut words: Vec<BraidWord> = Vec::new();
    if word_passes(kind, &reduced) {
        words.push(reduced.clone());
    }
    if reduced.is_empty() {
        return words;
    }
    let mut states_used = 0usize;
    for root in roots_for(kind, &reduced) {
        // Run the root to exhaustion, collecting every distinct terminal.
        let mut collect = |word: &BraidWord| {
            if !words.contains(word) {
                words.push(word.clone());
            }
            false // keep searching
        };
        let outcome = search_root(kind, &reduced, &root, budget, &mut states_used, &mut collect);
        *capped |= outcome.capped;
    }
    words
}

/// Decides whether `y` is obtained from `x` by a single move of the given
/// kind, up to braid isotopy.
pub fn related_by_move(
    x: &BraidWord,
    y: &BraidWord,
    kind: RelationKind,
    budget: &SearchBudget,
) -> Result<RelationVerdict, RelateError> {
    let limits = ConjugacyLimits::default();
    let expected_y_strands = match kind {
        RelationKind::ThinExchange | RelationKind::ElementaryFlype => x.strands(),
        RelationKind::DoubleDestab => x.strands().saturating_sub(2),
    };
    if y.strands() != expected_y_strands {
        return Err(RelateError::IncompatibleStrands { x: x.strands(), y: y.strands() });
    }
    // Exponent-sum prefilter.
    let dx = y.exponent_sum() - x.exponent_sum();
    let sum_ok = match kind {
        RelationKind::ThinExchange | RelationKind::ElementaryFlype => dx == 0,
        RelationKind::DoubleDestab => dx == 2 || dx == -2,
    };
    if !sum_ok {
        return Ok(RelationVerdict::NotAdmitted);
    }
    let mut capped = false;
    let check = |candidate: &BraidWord, witness: String| -> Result<Option<String>, RelateError> {
        match are_conjugate(candidate, y, &limits) {
            Ok(true) => Ok(Some(witness)),
            Ok(false) => Ok(None),
            Err(ConjugacyError::BudgetExceeded { .. }) => Err(RelateError::BudgetExceeded),
            Err(ConjugacyError::StrandMismatch) => Ok(None),
        }
    };
    match kind {
        RelationKind::ThinExchange => {
            let words = collect_form_words(MoveKind::ThinExchange, x, budget, &mut capped);
            for word in &words {
                for form in enumerate_exchange_forms(word).into_iter().filter(|f| f.thin) {
                    for sign in [1i8, -1] {
                        let candidate = apply_exchange_move(word, &form, sign)
                            .expect("enumerated form applies");
                        let witness = format_witness(word, &candidate);
                        if let Some(wit) = check(&candidate, witness)? {
                            return Ok(RelationVerdict::Found { witness: wit, states_visited: 0 });
                        }
                    }
                }
            }
        }
        RelationKind::ElementaryFlype => {
            let words = collect_form_words(MoveKind::ElementaryFlype, x, budget, &mut capped);
            for word in &words {
                for form in enumerate_elementary_flype_forms(word) {
                    let candidate =
                        apply_elementary_flype(word, &form).expect("enumerated form applies");
                    let witness = format_witness(word, &candidate);
                    if let Some(wit) = check(&candidate, witness)? {
                        return Ok(RelationVerdict::Found { witness: wit, states_visited: 0 });
                    }
                }
            }
        }
        RelationKind::DoubleDestab => {
            let n = x.strands();
            let words = collect_form_words(MoveKind::DoubleDestabilization, x, budget, &mut capped);
            for word in &words {
                for (w_block, u_block) in double_destab_splits(word) {
                    let Some(eps) = check_double_split(&u_block, n, budget, &mut capped) else {
                        continue;
                    };
                    // The double destabilization lands on W σ_{n-3}^{2ε}.
                    let mut letters = w_block.clone();
                    let top = (n - 3) as i32;
                    letters.push(eps as i32 * top);
                    letters.push(eps as i32 * top);
                    let Ok(candidate) = BraidWord::new(n - 2, letters) else { continue };
                    let witness = format_witness(word, &candidate);
                    if let Some(wit) = check(&candidate, witness)? {
                        return Ok(RelationVerdict::Found { witness: wit, states_visited: 0 });
                    }
                }
            }
        }
    }
    if capped {
        Ok(RelationVerdict::Inconclusive { states_visited: 0 })
    } else {
        Ok(RelationVerdict::NotAdmitted)
    }
}

fn format_witness(from: &BraidWord, to: &BraidWord) -> String {
    use alloc::string::ToString;
    let mut s = from.to_string();
    s.push_str("  ->  ");
    s.push_str(&to.to_string());
    s
}

/// Replays a certificate: every move must apply, the sheared complexity must
/// never increase, and the terminal diagram must exhibit the claim.
pub fn replay_certificate(c: &MoveCertificate) -> Result<(), ReplayError> {
    if !grid::validate_presentation(&c.initial_grid).is_empty() {
        return Err(ReplayError::InvalidInitialDiagram);
    }
    let rules = move_rules(c.claim.kind);
    let mut g = c.initial_grid.clone();
    let mut m = c.initial_marking.clone();
    let mut cx = sheared_complexity(&g, &c.config);
    for (k, mv) in c.moves.iter().enumerate() {
        let (g2, _, m2) = apply_elementary_move(&g, &c.config, &m, mv, &rules)
            .map_err(|_| ReplayError::InvalidMoveAtStep(k))?;
        let cx2 = sheared_complexity(&g2, &c.config);
        if cx2 > cx {
            return Err(ReplayError::ComplexityIncreased(k));
        }
        g = g2;
        m = m2;
        cx = cx2;
    }
    if !c.moves.is_empty() && m.e_path.len() != terminal_e_len(c.claim.kind) {
        return Err(ReplayError::PatternMismatch);
    }
    let (flat, _) = grid_to_braid(&strip_intervals(&g)).map_err(|_| ReplayError::PatternMismatch)?;
    if flat != c.claim.terminal_word {
        return Err(ReplayError::PatternMismatch);
    }
    if !word_passes(c.claim.kind, &flat) {
        return Err(ReplayError::PatternMismatch);
    }
    Ok(())
}
