//! Seeded generation of recognizer instances: words built in a target form,
//! then hidden by conjugation and braid-isotopy rewrites.

use crate::braid::{
    detect_destabilization_form, detect_double_destabilization_form,
    enumerate_elementary_flype_forms, enumerate_exchange_forms, BraidWord,
};
use crate::recognize::MoveKind;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Parameters of one generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub target_move: MoveKind,
    pub n: usize,
    pub core_length: usize,
    pub obf_conj_length: usize,
    pub obf_rewrites: usize,
    pub seed: u64,
}

/// A generated instance: the obfuscated word and the hidden in-form witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub word: BraidWord,
    pub hidden_witness: BraidWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusError {
    IncompatibleStrands { target: MoveKind, n: usize, required: usize },
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusError::IncompatibleStrands { target, n, required } => {
                write!(f, "{target} needs at least {required} strands, got {n}")
            }
        }
    }
}

struct Rng(ChaCha8Rng);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(ChaCha8Rng::seed_from_u64(seed))
    }

    fn below(&mut self, n: usize) -> usize {
        (self.0.next_u64() % n as u64) as usize
    }

    fn sign(&mut self) -> i32 {
        if self.0.next_u64() & 1 == 0 {
            1
        } else {
            -1
        }
    }

    /// A random letter with index in `lo..=hi`.
    fn letter(&mut self, lo: usize, hi: usize) -> i32 {
        let idx = lo + self.below(hi - lo + 1);
        self.sign() * idx as i32
    }

    fn letters(&mut self, len: usize, lo: usize, hi: usize) -> Vec<i32> {
        (0..len).map(|_| self.letter(lo, hi)).collect()
    }
}

fn required_strands(kind: MoveKind) -> usize {
    match kind {
        MoveKind::Destabilization => 2,
        MoveKind::ElementaryFlype => 3,
        MoveKind::ThinExchange | MoveKind::DoubleDestabilization => 4,
    }
}

fn in_form_word(spec: &InstanceSpec, rng: &mut Rng) -> BraidWord {
    let n = spec.n;
    let len = spec.core_length;
    match spec.target_move {
        MoveKind::Destabilization => {
            let mut letters =
                if n >= 3 { rng.letters(len, 1, n - 2) } else { Vec::new() };
            letters.push(rng.sign() * (n - 1) as i32);
            BraidWord::new(n, letters).unwrap()
        }
        MoveKind::ThinExchange => {
            // W over indices ≤ t, U over indices ≥ s, both nonempty.
            let s = 2 + rng.below(n - 3);
            let t = s + rng.below(n - 1 - s);
            let w_len = 1 + len / 2;
            let u_len = 1 + len - len / 2;
            let mut letters = rng.letters(w_len, 1, t);
            letters.extend(rng.letters(u_len, s, n - 1));
            BraidWord::new(n, letters).unwrap()
        }
        MoveKind::ElementaryFlype => {
            let top = (n - 1) as i32;
            loop {
                let mut letters = rng.letters(1 + len / 2, 1, n - 2);
                let p_sign = rng.sign();
                for _ in 0..1 + rng.below(3) {
                    letters.push(p_sign * top);
                }
                letters.extend(rng.letters(1 + len - len / 2, 1, n - 2));
                letters.push(rng.sign() * top);
                let word = BraidWord::new(n, letters).unwrap();
                if !enumerate_elementary_flype_forms(&word).is_empty() {
                    return word;
                }
            }
        }
        MoveKind::DoubleDestabilization => {
            let eps = rng.sign();
            let mut letters =
                if n >= 5 { rng.letters(len, 1, n - 3) } else { rng.letters(len, 1, 1) };
            if n == 4 {
                // W over indices ≤ n-3 = 1.
                letters = rng.letters(len, 1, 1);
            }
            letters.push(eps * (n - 2) as i32);
            letters.push(eps * (n - 1) as i32);
            letters.push(eps * (n - 3) as i32);
            letters.push(eps * (n - 2) as i32);
            BraidWord::new(n, letters).unwrap()
        }
    }
}

fn detector_fires(kind: MoveKind, word: &BraidWord) -> bool {
    match kind {
        MoveKind::Destabilization => detect_destabilization_form(word).is_some(),
        MoveKind::ThinExchange => !enumerate_exchange_forms(word).is_empty(),
        MoveKind::ElementaryFlype => !enumerate_elementary_flype_forms(word).is_empty(),
        MoveKind::DoubleDestabilization => {
            matches!(detect_double_destabilization_form(word), Ok(Some(_)))
        }
    }
}

/// One braid-isotopy rewrite at a pseudo-random site: rotation, far
/// commutation, the type-III interchange
/// `σ_i^ε σ_{i+1}^δ σ_i^δ ↔ σ_{i+1}^δ σ_i^δ σ_{i+1}^ε`, or a free
/// insertion.
fn rewrite(word: &mut Vec<i32>, n: usize, rng: &mut Rng) {
    let kind = rng.below(4);
    let len = word.len();
    match kind {
        0 if len > 1 => {
            let k = rng.below(len);
            word.rotate_left(k);
        }
        1 if len >= 2 => {
            // Far commutation at the first admissible site at or after a
            // random start.
            let start = rng.below(len);
            for off in 0..len - 1 {
                let k = (start + off) % (len - 1);
                let (a, b) = (word[k], word[k + 1]);
                if (a.abs() - b.abs()).abs() >= 2 {
                    word.swap(k, k + 1);
                    break;
                }
            }
        }
        2 if len >= 3 => {
            let start = rng.below(len);
            for off in 0..len - 2 {
                let k = (start + off) % (len - 2);
                let (a, b, c) = (word[k], word[k + 1], word[k + 2]);
                let (ia, ib, ic) = (a.abs(), b.abs(), c.abs());
                if (ia - ib).abs() == 1 && ic == ia && b.signum() == c.signum() {
                    // σ_i^ε σ_j^δ σ_i^δ → σ_j^δ σ_i^δ σ_j^ε.
                    let (eps, delta) = (a.signum(), b.signum());
                    let (i, j) = (ia, ib);
                    word[k] = delta * j;
                    word[k + 1] = delta * i;
                    word[k + 2] = eps * j;
                    break;
                }
            }
        }
        _ => {
            // Free insertion of a cancelling pair.
            let l = 1 + rng.below(n - 1);
            let s = rng.sign();
            let k = rng.below(len + 1);
            word.insert(k, s * l as i32);
            word.insert(k + 1, -s * l as i32);
        }
    }
}

/// Builds a word in the target form, conjugates it by a random word, and
/// applies braid-isotopy rewrites. Deterministic per seed.
pub fn random_obfuscated_instance(spec: &InstanceSpec) -> Result<Instance, CorpusError> {
    let required = required_strands(spec.target_move);
    if spec.n < required {
        return Err(CorpusError::IncompatibleStrands {
            target: spec.target_move,
            n: spec.n,
            required,
        });
    }
    let mut rng = Rng::new(spec.seed);
    let hidden = in_form_word(spec, &mut rng);
    debug_assert!(detector_fires(spec.target_move, &hidden));
    let conj = BraidWord::new(spec.n, rng.letters(spec.obf_conj_length, 1, spec.n - 1)).unwrap();
    let mut word = hidden.conjugated_by(&conj).unwrap();
    let mut letters = word.letters().to_vec();
    for _ in 0..spec.obf_rewrites {
        rewrite(&mut letters, spec.n, &mut rng);
    }
    word = BraidWord::new(spec.n, letters).unwrap();
    Ok(Instance { word, hidden_witness: hidden })
}

/// A short deterministic id for an instance, used by reports.
pub fn instance_id(spec: &InstanceSpec) -> String {
    use alloc::format;
    let tag = match spec.target_move {
        MoveKind::Destabilization => "destab",
        MoveKind::ThinExchange => "thinex",
        MoveKind::ElementaryFlype => "flype",
        MoveKind::DoubleDestabilization => "ddestab",
    };
    format!("{tag}-n{}-c{}-g{}-r{}-s{}", spec.n, spec.core_length, spec.obf_conj_length, spec.obf_rewrites, spec.seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{are_conjugate, ConjugacyLimits};

    fn spec(kind: MoveKind, n: usize, seed: u64) -> InstanceSpec {
        InstanceSpec {
            target_move: kind,
            n,
            core_length: 3,
            obf_conj_length: 3,
            obf_rewrites: 4,
            seed,
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let s = spec(MoveKind::Destabilization, 4, 7);
        let a = random_obfuscated_instance(&s).unwrap();
        let b = random_obfuscated_instance(&s).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn hidden_witness_is_in_form() {
        for (kind, n) in [
            (MoveKind::Destabilization, 4),
            (MoveKind::ThinExchange, 4),
            (MoveKind::ThinExchange, 5),
            (MoveKind::ElementaryFlype, 3),
            (MoveKind::DoubleDestabilization, 4),
            (MoveKind::DoubleDestabilization, 5),
        ] {
            for seed in 0..8 {
                let inst = random_obfuscated_instance(&spec(kind, n, seed)).unwrap();
                assert!(detector_fires(kind, &inst.hidden_witness), "{kind} seed {seed}");
            }
        }
    }

    #[test]
    fn too_few_strands_is_an_error() {
        let s = spec(MoveKind::ThinExchange, 3, 0);
        assert!(matches!(
            random_obfuscated_instance(&s),
            Err(CorpusError::IncompatibleStrands { .. })
        ));
    }

    #[test]
    fn obfuscation_preserves_conjugacy_class() {
        let limits = ConjugacyLimits::default();
        for seed in 0..6 {
            let inst =
                random_obfuscated_instance(&spec(MoveKind::Destabilization, 4, seed)).unwrap();
            assert_eq!(are_conjugate(&inst.word, &inst.hidden_witness, &limits), Ok(true));
        }
    }
}
