//! Garside left normal forms and a super-summit-set conjugacy decider.
//!
//! Simple elements are permutation braids, stored as the permutation arrays
//! they induce on strand positions. A braid product `A·B` (A first) induces
//! the position map `i ↦ B[A[i]]`.

use super::{BraidWord, ClosureComponents};
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

/// A permutation on strand positions; entry `i` is the exit track of the
/// strand entering at track `i`.
pub type Permutation = Vec<u8>;

fn identity_perm(n: usize) -> Permutation {
    (0..n as u8).collect()
}

fn reversal(n: usize) -> Permutation {
    (0..n as u8).rev().collect()
}

fn is_identity(p: &[u8]) -> bool {
    p.iter().enumerate().all(|(i, &v)| v as usize == i)
}

fn invert(p: &[u8]) -> Permutation {
    let mut inv = vec![0u8; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v as usize] = i as u8;
    }
    inv
}

/// Position map of `a` then `b`.
fn compose(a: &[u8], b: &[u8]) -> Permutation {
    a.iter().map(|&x| b[x as usize]).collect()
}

/// The flip `τ(A) = Δ A Δ⁻¹`; an involution on simple elements.
fn flip(p: &[u8]) -> Permutation {
    let n = p.len();
    (0..n).map(|x| (n - 1) as u8 - p[n - 1 - x]).collect()
}

/// Generators `i` with `ℓ(s_i · B) < ℓ(B)` (1-based `i`, positions `i-1, i`).
fn starting_set(b: &[u8]) -> Vec<usize> {
    (1..b.len()).filter(|&i| b[i - 1] > b[i]).collect()
}

/// Whether `ℓ(A · s_i) < ℓ(A)`.
fn finishes_with(a: &[u8], i: usize) -> bool {
    let inv = invert(a);
    inv[i - 1] > inv[i]
}

/// The left Garside normal form `Δ^inf · A₁ ⋯ A_k` of a braid word.
///
/// Consecutive factors are left-weighted; no factor is trivial or `Δ`.
/// Equal group elements always produce identical forms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GarsideForm {
    pub strands: usize,
    pub infimum: i64,
    pub factors: Vec<Permutation>,
}

impl GarsideForm {
    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// The permutation induced on strand positions.
    pub fn permutation(&self) -> Permutation {
        let n = self.strands;
        let mut p = if self.infimum.rem_euclid(2) == 1 { reversal(n) } else { identity_perm(n) };
        for f in &self.factors {
            p = compose(&p, f);
        }
        p
    }
}

/// Makes the pair left-weighted by sliding head letters of `b` into `a`.
fn left_weight_pair(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut changed = false;
    loop {
        let mut slid = false;
        for i in starting_set(b) {
            if !finishes_with(a, i) {
                // a ← a·s_i (swap values i-1, i); b ← s_i⁻¹·b (swap inputs).
                let pa = a.iter().position(|&v| v as usize == i - 1).unwrap();
                let pb = a.iter().position(|&v| v as usize == i).unwrap();
                a.swap(pa, pb);
                b.swap(i - 1, i);
                slid = true;
                changed = true;
                break;
            }
        }
        if !slid {
            return changed;
        }
    }
}

/// Normalizes a `(strands, infimum, factor list)` triple into a form.
fn normalize(strands: usize, mut infimum: i64, mut factors: Vec<Permutation>) -> GarsideForm {
    let delta = reversal(strands);
    loop {
        let mut changed = false;
        for j in (0..factors.len().saturating_sub(1)).rev() {
            let (head, tail) = factors.split_at_mut(j + 1);
            changed |= left_weight_pair(&mut head[j], &mut tail[0]);
        }
        if !changed {
            break;
        }
    }
    while factors.last().is_some_and(|f| is_identity(f)) {
        factors.pop();
    }
    let leading = factors.iter().take_while(|f| **f == delta).count();
    if leading > 0 {
        infimum += leading as i64;
        factors.drain(..leading);
    }
    GarsideForm { strands, infimum, factors }
}

/// Computes the left normal form of a word.
pub fn left_normal_form(w: &BraidWord) -> GarsideForm {
    let n = w.strands();
    let delta = reversal(n);
    // Tokens: each letter is a simple or Δ⁻¹·simple; Δ⁻¹ then migrates left
    // across simples via the flip automorphism (τ² = id).
    let mut delta_inv_total = 0i64;
    let mut simples: Vec<(Permutation, i64)> = Vec::new();
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        let mut s = identity_perm(n);
        s.swap(i - 1, i);
        if l > 0 {
            simples.push((s, delta_inv_total));
        } else {
            delta_inv_total += 1;
            // σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹); the complement has perm s_i ∘ Δ.
            let comp = compose(&delta, &s);
            simples.push((comp, delta_inv_total));
        }
    }
    let factors = simples
        .into_iter()
        .map(|(p, seen_before)| {
            let passes = delta_inv_total - seen_before;
            if passes.rem_euclid(2) == 1 {
                flip(&p)
            } else {
                p
            }
        })
        .collect();
    normalize(n, -delta_inv_total, factors)
}

/// Group product of two forms.
fn form_product(a: &GarsideForm, b: &GarsideForm) -> GarsideForm {
    let n = a.strands;
    let infimum = a.infimum + b.infimum;
    let mut factors: Vec<Permutation> = Vec::new();
    // a's factors cross b's Δ^inf on the way left; each crossing applies τ.
    let passes = b.infimum.rem_euclid(2);
    for f in &a.factors {
        factors.push(if passes == 1 { flip(f) } else { f.clone() });
    }
    factors.extend(b.factors.iter().cloned());
    normalize(n, infimum, factors)
}

/// Group inverse of a form.
fn form_inverse(a: &GarsideForm) -> GarsideForm {
    let n = a.strands;
    let delta = reversal(n);
    // (Δ^p A₁⋯A_k)⁻¹ = A_k⁻¹ ⋯ A₁⁻¹ Δ^{-p}; A⁻¹ = comp(A) · Δ⁻¹ where
    // A·comp(A) = Δ.
    let infimum = -(a.infimum) - a.factors.len() as i64;
    let mut factors: Vec<Permutation> = Vec::new();
    for (j, f) in a.factors.iter().rev().enumerate() {
        // comp(f) = f⁻¹ then Δ; it shifts left across the Δ⁻¹ of every later
        // inverse plus Δ^{-p}, one τ per crossing.
        let comp = compose(&invert(f), &delta);
        let passes = (a.factors.len() - j) as i64 + a.infimum;
        factors.push(if passes.rem_euclid(2) == 1 { flip(&comp) } else { comp });
    }
    normalize(n, infimum, factors)
}

/// `g⁻¹ · x · g` for a whole-form conjugator.
fn form_conjugate(x: &GarsideForm, g: &GarsideForm) -> GarsideForm {
    form_product(&form_product(&form_inverse(g), x), g)
}

fn simple_form(strands: usize, p: Permutation) -> GarsideForm {
    normalize(strands, 0, vec![p])
}

/// Cycling: `Δ^p A₁⋯A_k ↦ Δ^p A₂⋯A_k τ^{-p}(A₁)`.
fn cycling(x: &GarsideForm) -> GarsideForm {
    if x.factors.is_empty() {
        return x.clone();
    }
    let mut factors: Vec<Permutation> = x.factors[1..].to_vec();
    let head = if x.infimum.rem_euclid(2) == 1 { flip(&x.factors[0]) } else { x.factors[0].clone() };
    factors.push(head);
    normalize(x.strands, x.infimum, factors)
}

/// Decycling: `Δ^p A₁⋯A_k ↦ Δ^p τ^p(A_k) A₁⋯A_{k-1}`.
fn decycling(x: &GarsideForm) -> GarsideForm {
    if x.factors.is_empty() {
        return x.clone();
    }
    let last = x.factors.last().unwrap();
    let head = if x.infimum.rem_euclid(2) == 1 { flip(last) } else { last.clone() };
    let mut factors = vec![head];
    factors.extend_from_slice(&x.factors[..x.factors.len() - 1]);
    normalize(x.strands, x.infimum, factors)
}

/// Repeated cycling and decycling until both the infimum is maximal and the
/// supremum minimal: a representative in the super summit set.
fn summit_representative(x: &GarsideForm) -> GarsideForm {
    let mut cur = x.clone();
    loop {
        let mut improved = false;
        // Raise the infimum by cycling until the orbit repeats.
        loop {
            let mut seen: BTreeSet<GarsideForm> = BTreeSet::new();
            seen.insert(cur.clone());
            let mut raised = false;
            loop {
                let next = cycling(&cur);
                if next.infimum > cur.infimum {
                    cur = next;
                    raised = true;
                    improved = true;
                    break;
                }
                if !seen.insert(next.clone()) {
                    break;
                }
                cur = next;
            }
            if !raised {
                break;
            }
        }
        // Lower the supremum by decycling until the orbit repeats.
        loop {
            let mut seen: BTreeSet<GarsideForm> = BTreeSet::new();
            seen.insert(cur.clone());
            let mut lowered = false;
            loop {
                let next = decycling(&cur);
                if next.supremum() < cur.supremum() {
                    cur = next;
                    lowered = true;
                    improved = true;
                    break;
                }
                if !seen.insert(next.clone()) {
                    break;
                }
                cur = next;
            }
            if !lowered {
                break;
            }
        }
        if !improved {
            return cur;
        }
    }
}

/// Practical caps for the conjugacy decider.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjugacyLimits {
    pub max_strands: usize,
    pub max_summit_size: usize,
}

impl Default for ConjugacyLimits {
    fn default() -> Self {
        ConjugacyLimits { max_strands: 6, max_summit_size: 100_000 }
    }
}

/// A budget overrun, reported instead of guessing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjugacyError {
    BudgetExceeded { summit_size: usize },
    StrandMismatch,
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur = identity_perm(n);
    fn heap(k: usize, cur: &mut Permutation, out: &mut Vec<Permutation>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out.sort();
    out
}

fn cycle_type(c: &ClosureComponents) -> Vec<usize> {
    let mut lengths = vec![0usize; c.count];
    for &comp in &c.assignment {
        lengths[comp] += 1;
    }
    lengths.sort_unstable();
    lengths
}

/// Decides conjugacy in `B_n` within the configured budget.
///
/// Cheap invariants (exponent sum, permutation cycle type) filter first; the
/// remainder compares super summit sets, enumerated by closing the summit
/// representative under conjugation by simple elements.
pub fn are_conjugate(
    a: &BraidWord,
    b: &BraidWord,
    limits: &ConjugacyLimits,
) -> Result<bool, ConjugacyError> {
    if a.strands() != b.strands() {
        return Err(ConjugacyError::StrandMismatch);
    }
    if a.exponent_sum() != b.exponent_sum() {
        return Ok(false);
    }
    let ca = super::closure_components(a);
    let cb = super::closure_components(b);
    if cycle_type(&ca) != cycle_type(&cb) {
        return Ok(false);
    }
    let fa = left_normal_form(a);
    let fb = left_normal_form(b);
    if fa == fb {
        return Ok(true);
    }
    let n = a.strands();
    if n > limits.max_strands {
        return Err(ConjugacyError::BudgetExceeded { summit_size: 0 });
    }
    let sa = summit_representative(&fa);
    let sb = summit_representative(&fb);
    if sa.infimum != sb.infimum || sa.supremum() != sb.supremum() {
        return Ok(false);
    }
    if sa == sb {
        return Ok(true);
    }
    // Enumerate the super summit set of `a`, watching for `b`'s representative.
    let simples: Vec<GarsideForm> = all_permutations(n)
        .into_iter()
        .filter(|p| !is_identity(p))
        .map(|p| simple_form(n, p))
        .collect();
    let mut set: BTreeSet<GarsideForm> = BTreeSet::new();
    set.insert(sa.clone());
    let mut queue = vec![sa];
    while let Some(x) = queue.pop() {
        for g in &simples {
            let y = form_conjugate(&x, g);
            if y.infimum != sb.infimum || y.supremum() != sb.supremum() {
                continue;
            }
            if y == sb {
                return Ok(true);
            }
            if set.insert(y.clone()) {
                if set.len() > limits.max_summit_size {
                    return Err(ConjugacyError::BudgetExceeded { summit_size: set.len() });
                }
                queue.push(y);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_word;

    fn form(text: &str) -> GarsideForm {
        left_normal_form(&parse_word(text).unwrap())
    }

    #[test]
    fn delta_in_b3_has_infimum_one_and_no_factors() {
        let f = form("n=3: 1 2 1");
        assert_eq!(f.infimum, 1);
        assert!(f.factors.is_empty());
    }

    #[test]
    fn identity_word_is_trivial_form() {
        let f = form("n=4:");
        assert!(f.is_trivial());
    }

    #[test]
    fn b2_inverse_generator_is_delta_inverse() {
        let f = form("n=2: -1");
        assert_eq!(f.infimum, -1);
        assert!(f.factors.is_empty());
    }

    #[test]
    fn braid_relation_preserves_normal_form() {
        assert_eq!(form("n=3: 1 2 1"), form("n=3: 2 1 2"));
        assert_eq!(form("n=4: 1 3"), form("n=4: 3 1"));
        assert_eq!(form("n=4: 1 2 1 3 2 -1"), form("n=4: 2 1 2 3 2 -1"));
    }

    #[test]
    fn free_cancellation_preserves_normal_form() {
        assert_eq!(form("n=3: 1 -1"), form("n=3:"));
        assert_eq!(form("n=3: 2 1 -1 -2 2"), form("n=3: 2"));
    }

    #[test]
    fn product_and_inverse_are_consistent() {
        let x = form("n=4: 1 -2 3 3 -1");
        let xi = form_inverse(&x);
        assert!(form_product(&x, &xi).is_trivial());
        assert!(form_product(&xi, &x).is_trivial());
    }

    #[test]
    fn permutation_of_form_matches_word_traversal() {
        let w = parse_word("n=4: 1 2 3 1 2").unwrap();
        let f = left_normal_form(&w);
        let c = crate::braid::closure_components(&w);
        let perm: Vec<u8> = {
            let mut p = vec![0u8; 4];
            for (s, &t) in c.perm.iter().enumerate() {
                p[s] = t as u8;
            }
            p
        };
        assert_eq!(f.permutation(), perm);
    }

    #[test]
    fn conjugate_words_are_detected() {
        let limits = ConjugacyLimits::default();
        let a = parse_word("n=3: 1 2").unwrap();
        let b = parse_word("n=3: 2 1").unwrap();
        assert_eq!(are_conjugate(&a, &b, &limits), Ok(true));
        let c = parse_word("n=2: 1").unwrap();
        let d = parse_word("n=2: -1").unwrap();
        assert_eq!(are_conjugate(&c, &d, &limits), Ok(false));
    }

    #[test]
    fn explicit_conjugation_is_detected() {
        let limits = ConjugacyLimits::default();
        let w = parse_word("n=4: 1 -3 2 2").unwrap();
        let g = parse_word("n=4: 2 3 -1 2").unwrap();
        let conj = w.conjugated_by(&g).unwrap();
        assert_eq!(are_conjugate(&w, &conj, &limits), Ok(true));
    }

    #[test]
    fn distinct_classes_with_equal_abelianization_are_separated() {
        let limits = ConjugacyLimits::default();
        // σ₁³ and σ₁ σ₂ σ₁ have exponent sum 3 on 3 strands but differ:
        // the trefoil closure vs the unknot-with-writhe closure.
        let a = parse_word("n=3: 1 1 1").unwrap();
        let b = parse_word("n=3: 1 2 1").unwrap();
        assert_eq!(are_conjugate(&a, &b, &limits), Ok(false));
    }
}
