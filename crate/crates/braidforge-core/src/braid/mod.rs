//! Braid words as cyclic words in the Artin generators.
//!
//! A closed braid on `n` strands is recorded as a cyclic word over
//! `σ_1^{±1}, …, σ_{n-1}^{±1}`. This module carries the syntactic face of the
//! calculus: parsing, free cyclic reduction, closure invariants (components
//! and the linking matrix), the detectors for the four move forms, the move
//! appliers, and a Garside-based conjugacy decider.

mod garside;

pub use garside::{left_normal_form, GarsideForm, Permutation};

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use serde::{Deserialize, Serialize};

/// Errors produced by braid-word operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    /// Input text does not match the `n=<N>: <ints>` format.
    Malformed(String),
    /// A letter index lies outside `1..=n-1`.
    IndexOutOfRange { index: i32, strands: usize },
    /// Strand count too small for the requested form.
    StrandCountTooSmall { strands: usize, required: usize },
    /// The word is not of the form `W σ_{n-1}^{±1}`.
    NotInDestabilizationForm,
    /// A supplied form does not match the word it is applied to.
    FormMismatch,
}

impl fmt::Display for BraidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidError::Malformed(msg) => write!(f, "malformed braid word: {msg}"),
            BraidError::IndexOutOfRange { index, strands } => {
                write!(f, "letter index {index} out of range for {strands} strands")
            }
            BraidError::StrandCountTooSmall { strands, required } => {
                write!(f, "strand count {strands} too small (need at least {required})")
            }
            BraidError::NotInDestabilizationForm => write!(f, "word does not destabilize"),
            BraidError::FormMismatch => write!(f, "form does not match word"),
        }
    }
}

/// A braid word: a strand count `n` and signed generator letters.
///
/// Letter `i > 0` is `σ_i`, letter `-i` is `σ_i⁻¹`, with `1 ≤ i ≤ n-1`.
/// The word is read cyclically: rotations present the same closed braid.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    #[serde(rename = "n")]
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a word, checking every letter against the strand count.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands < 1 {
            return Err(BraidError::Malformed("strand count must be positive".to_string()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > strands - 1 {
                return Err(BraidError::IndexOutOfRange { index: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The identity word on `n` strands.
    pub fn identity(strands: usize) -> Self {
        BraidWord { strands: strands.max(1), letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of letter signs; a conjugacy invariant.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// The word rotated left by `k` positions (same closed braid).
    pub fn rotated(&self, k: usize) -> Self {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = Vec::with_capacity(self.letters.len());
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        BraidWord { strands: self.strands, letters }
    }

    /// The reverse word with inverted letters (the group inverse).
    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// Concatenation (group product); both must share a strand count.
    pub fn concat(&self, other: &BraidWord) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::FormMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// `g · self · g⁻¹`.
    pub fn conjugated_by(&self, g: &BraidWord) -> Result<Self, BraidError> {
        g.concat(self)?.concat(&g.inverse())
    }

    /// True if two words are equal up to cyclic rotation.
    pub fn cyclically_equal(&self, other: &BraidWord) -> bool {
        if self.strands != other.strands || self.letters.len() != other.letters.len() {
            return false;
        }
        if self.letters.is_empty() {
            return true;
        }
        (0..self.letters.len()).any(|k| self.rotated(k).letters == other.letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// Parses the documented text format `n=<N>: <i1> <i2> ...`.
pub fn parse_word(text: &str) -> Result<BraidWord, BraidError> {
    let text = text.trim();
    let rest = text
        .strip_prefix("n=")
        .ok_or_else(|| BraidError::Malformed("expected prefix \"n=\"".to_string()))?;
    let (n_str, letters_str) = rest
        .split_once(':')
        .ok_or_else(|| BraidError::Malformed("expected ':' after strand count".to_string()))?;
    let strands: usize = n_str
        .trim()
        .parse()
        .map_err(|_| BraidError::Malformed(format!("bad strand count {:?}", n_str.trim())))?;
    if strands < 1 {
        return Err(BraidError::Malformed("strand count must be positive".to_string()));
    }
    let mut letters = Vec::new();
    for tok in letters_str.split_whitespace() {
        let l: i32 = tok
            .parse()
            .map_err(|_| BraidError::Malformed(format!("bad letter {tok:?}")))?;
        letters.push(l);
    }
    BraidWord::new(strands, letters)
}

/// Renders a word in the same text format `parse_word` accepts.
pub fn format_word(w: &BraidWord) -> String {
    w.to_string()
}

/// Removes all (cyclically adjacent included) `σ_i^ε σ_i^{-ε}` pairs.
pub fn cyclic_reduce(w: &BraidWord) -> BraidWord {
    let mut letters = w.letters.clone();
    loop {
        let mut reduced = Vec::with_capacity(letters.len());
        for &l in &letters {
            if reduced.last().is_some_and(|&p| p == -l) {
                reduced.pop();
            } else {
                reduced.push(l);
            }
        }
        // Cancellation across the cyclic seam.
        let mut changed = false;
        while reduced.len() >= 2 && *reduced.first().unwrap() == -*reduced.last().unwrap() {
            reduced.remove(0);
            reduced.pop();
            changed = true;
        }
        let stable = reduced.len() == letters.len() && !changed;
        letters = reduced;
        if stable {
            break;
        }
    }
    BraidWord { strands: w.strands, letters }
}

/// The closure permutation, its cycle count, and a strand → component map.
///
/// Strand `s` (0-based) exits at track `perm[s]`; components are the cycles,
/// numbered by their smallest strand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureComponents {
    pub perm: Vec<usize>,
    pub count: usize,
    pub assignment: Vec<usize>,
}

pub fn closure_components(w: &BraidWord) -> ClosureComponents {
    let n = w.strands;
    // who[t] = strand currently occupying track t (0-based).
    let mut who: Vec<usize> = (0..n).collect();
    for &l in &w.letters {
        let i = l.unsigned_abs() as usize - 1;
        who.swap(i, i + 1);
    }
    let mut perm = vec![0usize; n];
    for (track, &strand) in who.iter().enumerate() {
        perm[strand] = track;
    }
    let mut assignment = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if assignment[start] != usize::MAX {
            continue;
        }
        let mut s = start;
        loop {
            assignment[s] = count;
            s = perm[s];
            if s == start {
                break;
            }
        }
        count += 1;
    }
    ClosureComponents { perm, count, assignment }
}

/// Linking data of a closed-braid diagram, stored exactly.
///
/// `crossings[a][b]` for `a ≠ b` is the signed number of crossings between
/// components `a` and `b` (twice their linking number); `crossings[a][a]` is
/// the signed count of self-crossings (the self-writhe).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingMatrix {
    pub components: usize,
    pub crossings: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn zero(components: usize) -> Self {
        LinkingMatrix { components, crossings: vec![vec![0; components]; components] }
    }

    pub fn add_crossing(&mut self, a: usize, b: usize, sign: i64) {
        if a == b {
            self.crossings[a][a] += sign;
        } else {
            self.crossings[a][b] += sign;
            self.crossings[b][a] += sign;
        }
    }

    /// Linking number between distinct components `a`, `b`, in half units.
    pub fn twice_linking(&self, a: usize, b: usize) -> i64 {
        self.crossings[a][b]
    }

    /// Equality up to a simultaneous relabeling of components. Component
    /// labels follow strand numbering, which moves that conjugate the
    /// closure permutation may shuffle.
    pub fn equivalent(&self, other: &LinkingMatrix) -> bool {
        if self.components != other.components {
            return false;
        }
        let n = self.components;
        let mut perm: Vec<usize> = (0..n).collect();
        // Small component counts: check every bijection.
        loop {
            if (0..n).all(|a| (0..n).all(|b| self.crossings[a][b] == other.crossings[perm[a]][perm[b]])) {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The linking matrix computed on the standard projection of the word.
///
/// Every letter is one crossing between the two strands currently at its
/// tracks, with sign equal to the letter's sign.
pub fn linking_matrix_of_word(w: &BraidWord) -> LinkingMatrix {
    let closure = closure_components(w);
    let n = w.strands;
    let mut who: Vec<usize> = (0..n).collect();
    let mut m = LinkingMatrix::zero(closure.count);
    for &l in &w.letters {
        let i = l.unsigned_abs() as usize - 1;
        let (sa, sb) = (who[i], who[i + 1]);
        m.add_crossing(closure.assignment[sa], closure.assignment[sb], l.signum() as i64);
        who.swap(i, i + 1);
    }
    m
}

/// Returns `W` if the word, up to rotation, is `W σ_{n-1}^{±1}`.
///
/// The count of top-index letters is rotation invariant, so the test is that
/// exactly one letter has index `n-1`; `W` lives on `n-1` strands.
pub fn detect_destabilization_form(w: &BraidWord) -> Option<BraidWord> {
    if w.strands < 2 {
        return None;
    }
    let top = (w.strands - 1) as i32;
    let mut hits = w.letters.iter().enumerate().filter(|(_, &l)| l.abs() == top);
    let (pos, _) = hits.next()?;
    if hits.next().is_some() {
        return None;
    }
    let mut letters = Vec::with_capacity(w.letters.len() - 1);
    letters.extend_from_slice(&w.letters[pos + 1..]);
    letters.extend_from_slice(&w.letters[..pos]);
    Some(BraidWord { strands: w.strands - 1, letters })
}

/// Removes the lone `σ_{n-1}^{±1}`, dropping to `n-1` strands.
pub fn destabilize_word(w: &BraidWord) -> Result<BraidWord, BraidError> {
    detect_destabilization_form(w).ok_or(BraidError::NotInDestabilizationForm)
}

/// Returns `(W, ε)` if some rotation ends with the uniform-sign block
/// `σ_{n-2}^ε σ_{n-1}^ε σ_{n-3}^ε σ_{n-2}^ε` and the prefix `W` uses only
/// indices `≤ n-3`. `W` is returned on `n-2` strands, its home after the
/// double destabilization.
pub fn detect_double_destabilization_form(
    w: &BraidWord,
) -> Result<Option<(BraidWord, i8)>, BraidError> {
    let n = w.strands;
    if n < 4 {
        return Err(BraidError::StrandCountTooSmall { strands: n, required: 4 });
    }
    let len = w.letters.len();
    if len < 4 {
        return Ok(None);
    }
    let pattern_idx = [n - 2, n - 1, n - 3, n - 2];
    'rot: for r in 0..len {
        let rotated = w.rotated(r);
        let (prefix, tail) = rotated.letters.split_at(len - 4);
        let eps = tail[0].signum();
        for (k, &l) in tail.iter().enumerate() {
            if l.signum() != eps || l.unsigned_abs() as usize != pattern_idx[k] {
                continue 'rot;
            }
        }
        if prefix.iter().any(|&l| l.unsigned_abs() as usize > n - 3) {
            continue;
        }
        let word = BraidWord { strands: n - 2, letters: prefix.to_vec() };
        return Ok(Some((word, eps as i8)));
    }
    Ok(None)
}

/// One admissible `W U` splitting of a cyclic word.
///
/// `W` uses indices `≤ t`, `U` uses indices `≥ s`, with `1 < s ≤ t < n-1`;
/// `thin` marks the forms of minimal `t - s` over the whole word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeForm {
    pub rotation: usize,
    pub split: usize,
    pub s: usize,
    pub t: usize,
    pub w_block: Vec<i32>,
    pub u_block: Vec<i32>,
    pub thin: bool,
}

/// Lexicographically least representative of a block under rotations that
/// move a commuting suffix (all indices `≤ s-2`) to the front.
fn canonical_w_block(w_block: &[i32], s: usize) -> Vec<i32> {
    let commutes = |l: i32| (l.unsigned_abs() as usize) + 2 <= s;
    let mut best = w_block.to_vec();
    let mut frontier = vec![w_block.to_vec()];
    let mut seen: BTreeSet<Vec<i32>> = frontier.iter().cloned().collect();
    while let Some(cur) = frontier.pop() {
        if cur < best {
            best = cur.clone();
        }
        // Rotate any commuting suffix (of any length) to the front.
        let mut k = cur.len();
        while k > 0 && commutes(cur[k - 1]) {
            k -= 1;
            let mut next = cur[k..].to_vec();
            next.extend_from_slice(&cur[..k]);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    best
}

/// All admissible exchange forms of the word, one representative per class of
/// the commuting-block equivalence.
pub fn enumerate_exchange_forms(w: &BraidWord) -> Vec<ExchangeForm> {
    let n = w.strands;
    let len = w.letters.len();
    let mut forms: Vec<ExchangeForm> = Vec::new();
    if n < 4 || len < 2 {
        return forms;
    }
    let mut seen: BTreeSet<(usize, usize, Vec<i32>, Vec<i32>)> = BTreeSet::new();
    for rotation in 0..len {
        let rotated = w.rotated(rotation);
        for split in 1..len {
            let (w_block, u_block) = rotated.letters.split_at(split);
            let w_max = w_block.iter().map(|&l| l.unsigned_abs() as usize).max().unwrap();
            let u_min = u_block.iter().map(|&l| l.unsigned_abs() as usize).min().unwrap();
            for s in 2..=n - 2 {
                if u_min < s {
                    continue;
                }
                for t in s..=n - 2 {
                    if w_max > t {
                        continue;
                    }
                    let key = (
                        s,
                        t,
                        canonical_w_block(w_block, s),
                        u_block.to_vec(),
                    );
                    if seen.insert(key) {
                        forms.push(ExchangeForm {
                            rotation,
                            split,
                            s,
                            t,
                            w_block: w_block.to_vec(),
                            u_block: u_block.to_vec(),
                            thin: false,
                        });
                    }
                }
            }
        }
    }
    if let Some(min_gap) = forms.iter().map(|f| f.t - f.s).min() {
        for f in &mut forms {
            f.thin = f.t - f.s == min_gap;
        }
    }
    forms
}

/// The positive half twist `Δ` on strands `a..=b`, written as
/// `(σ_a)(σ_{a+1} σ_a)…(σ_{b-1} … σ_a)`.
fn half_twist_letters(a: usize, b: usize) -> Vec<i32> {
    let mut letters = Vec::new();
    for hi in a..b {
        for i in (a..=hi).rev() {
            letters.push(i as i32);
        }
    }
    letters
}

/// The full twist `τ_{[s,t+1]}^{sign}` on strands `s..=t+1`, expanded as the
/// square of the positive half twist (inverted and reversed for `sign = -1`).
pub fn full_twist_letters(s: usize, t: usize, sign: i8) -> Vec<i32> {
    let mut tw = half_twist_letters(s, t + 1);
    let second = tw.clone();
    tw.extend(second);
    if sign < 0 {
        tw.reverse();
        for l in &mut tw {
            *l = -*l;
        }
    }
    tw
}

fn exchange_form_matches(w: &BraidWord, f: &ExchangeForm) -> bool {
    let len = w.letters.len();
    if f.split == 0 || f.split >= len {
        return false;
    }
    let rotated = w.rotated(f.rotation);
    let (wb, ub) = rotated.letters.split_at(f.split);
    let n = w.strands;
    wb == f.w_block
        && ub == f.u_block
        && 1 < f.s
        && f.s <= f.t
        && f.t < n - 1
        && wb.iter().all(|&l| (l.unsigned_abs() as usize) <= f.t)
        && ub.iter().all(|&l| (l.unsigned_abs() as usize) >= f.s)
}

/// Rewrites `W U` to `W τ^{sign} U τ^{-sign}` with `τ` the full twist on
/// strands `s..=t+1`.
pub fn apply_exchange_move(
    w: &BraidWord,
    f: &ExchangeForm,
    twist_sign: i8,
) -> Result<BraidWord, BraidError> {
    if !exchange_form_matches(w, f) {
        return Err(BraidError::FormMismatch);
    }
    let mut letters = f.w_block.clone();
    letters.extend(full_twist_letters(f.s, f.t, twist_sign));
    letters.extend_from_slice(&f.u_block);
    letters.extend(full_twist_letters(f.s, f.t, -twist_sign));
    BraidWord::new(w.strands, letters)
}

/// One `W₁ σ_{n-1}^p W₂ σ_{n-1}^δ` splitting of a cyclic word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlypeForm {
    pub rotation: usize,
    pub w1_block: Vec<i32>,
    pub w2_block: Vec<i32>,
    pub p: i32,
    pub delta: i8,
}

fn freely_reduced_len(block: &[i32]) -> usize {
    let mut stack: Vec<i32> = Vec::new();
    for &l in block {
        if stack.last().is_some_and(|&p| p == -l) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    stack.len()
}

/// All rotations exhibiting exactly two maximal index-`(n-1)` blocks, one of
/// uniform sign (`σ^p`) and one a single letter, with both `W` blocks
/// nonempty after free reduction.
pub fn enumerate_elementary_flype_forms(w: &BraidWord) -> Vec<FlypeForm> {
    let n = w.strands;
    let len = w.letters.len();
    let mut forms = Vec::new();
    if n < 3 || len < 4 {
        return forms;
    }
    let top = (n - 1) as i32;
    for rotation in 0..len {
        let rotated = w.rotated(rotation);
        let ls = &rotated.letters;
        // Require the rotated word to end with the lone σ_{n-1}^δ letter.
        let delta_letter = ls[len - 1];
        if delta_letter.abs() != top {
            continue;
        }
        // Locate the other maximal top-index block inside ls[..len-1].
        let body = &ls[..len - 1];
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        let mut i = 0;
        while i < body.len() {
            if body[i].abs() == top {
                let start = i;
                while i < body.len() && body[i].abs() == top {
                    i += 1;
                }
                blocks.push((start, i));
            } else {
                i += 1;
            }
        }
        let [(bs, be)] = blocks[..] else { continue };
        let block = &body[bs..be];
        let sign = block[0].signum();
        if block.iter().any(|&l| l.signum() != sign) {
            continue;
        }
        let w1 = &body[..bs];
        let w2 = &body[be..];
        if freely_reduced_len(w1) == 0 || freely_reduced_len(w2) == 0 {
            continue;
        }
        forms.push(FlypeForm {
            rotation,
            w1_block: w1.to_vec(),
            w2_block: w2.to_vec(),
            p: sign * block.len() as i32,
            delta: delta_letter.signum() as i8,
        });
    }
    forms
}

fn flype_form_matches(w: &BraidWord, f: &FlypeForm) -> bool {
    enumerate_elementary_flype_forms(w).iter().any(|g| g == f)
}

/// Rewrites `W₁ σ_{n-1}^p W₂ σ_{n-1}^δ` to `W₁ σ_{n-1}^δ W₂ σ_{n-1}^p`.
pub fn apply_elementary_flype(w: &BraidWord, f: &FlypeForm) -> Result<BraidWord, BraidError> {
    if !flype_form_matches(w, f) {
        return Err(BraidError::FormMismatch);
    }
    let top = (w.strands - 1) as i32;
    let mut letters = f.w1_block.clone();
    letters.push(f.delta as i32 * top);
    letters.extend_from_slice(&f.w2_block);
    for _ in 0..f.p.unsigned_abs() {
        letters.push(f.p.signum() * top);
    }
    BraidWord::new(w.strands, letters)
}

pub use garside::{are_conjugate, ConjugacyError, ConjugacyLimits};

#[cfg(test)]
mod tests;
