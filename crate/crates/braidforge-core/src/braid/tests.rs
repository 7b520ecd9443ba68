use super::*;
use proptest::prelude::*;

fn w(text: &str) -> BraidWord {
    parse_word(text).unwrap()
}

#[test]
fn parse_and_format_roundtrip() {
    let word = w("n=3: 1 2");
    assert_eq!(word.strands(), 3);
    assert_eq!(word.letters(), &[1, 2]);
    assert_eq!(format_word(&word), "n=3: 1 2");

    let trefoil = w("n=2: 1 1 1");
    assert_eq!(trefoil.letters(), &[1, 1, 1]);

    assert_eq!(
        parse_word("n=3: 3"),
        Err(BraidError::IndexOutOfRange { index: 3, strands: 3 })
    );
    assert!(matches!(parse_word("nonsense"), Err(BraidError::Malformed(_))));
    assert!(matches!(parse_word("n=0:"), Err(BraidError::Malformed(_))));
    assert_eq!(format_word(&w("n=4:")), "n=4:");
}

#[test]
fn cyclic_reduce_cases() {
    assert!(cyclic_reduce(&w("n=2: 1 -1")).is_empty());
    assert_eq!(cyclic_reduce(&w("n=3: 2 1 -2")).letters(), &[1]);
    assert_eq!(cyclic_reduce(&w("n=3: 1 2")).letters(), &[1, 2]);
    // Nested cancellation across the seam.
    assert!(cyclic_reduce(&w("n=3: 2 1 -1 -2")).is_empty());
    assert_eq!(cyclic_reduce(&w("n=3: -2 1 2")).letters(), &[1]);
}

#[test]
fn closure_component_counts() {
    let hopf = closure_components(&w("n=2: 1 1"));
    assert_eq!(hopf.count, 2);
    assert_eq!(hopf.perm, alloc::vec![0, 1]);

    let id3 = closure_components(&w("n=3:"));
    assert_eq!(id3.count, 3);

    let cyc = closure_components(&w("n=3: 1 2"));
    assert_eq!(cyc.count, 1);
}

#[test]
fn linking_matrix_examples() {
    // Hopf link: two positive crossings between the components, lk = +1.
    let hopf = linking_matrix_of_word(&w("n=2: 1 1"));
    assert_eq!(hopf.components, 2);
    assert_eq!(hopf.twice_linking(0, 1), 2);

    let empty = linking_matrix_of_word(&w("n=3:"));
    assert_eq!(empty.components, 3);
    assert!(empty.crossings.iter().flatten().all(|&c| c == 0));

    let negative_hopf = linking_matrix_of_word(&w("n=2: -1 -1"));
    assert_eq!(negative_hopf.twice_linking(0, 1), -2);

    // Self-writhe lands on the diagonal, unhalved.
    let trefoil = linking_matrix_of_word(&w("n=2: 1 1 1"));
    assert_eq!(trefoil.components, 1);
    assert_eq!(trefoil.crossings[0][0], 3);
}

#[test]
fn destabilization_detection() {
    assert_eq!(detect_destabilization_form(&w("n=3: 1 2")), Some(w("n=2: 1")));
    assert_eq!(detect_destabilization_form(&w("n=3: 2 1 2")), None);
    assert_eq!(detect_destabilization_form(&w("n=2: 1")), Some(w("n=1:")));
    // Rotation is handled: the top letter need not be last.
    assert_eq!(detect_destabilization_form(&w("n=3: 2 1")), Some(w("n=2: 1")));

    assert_eq!(destabilize_word(&w("n=3: 1 2")), Ok(w("n=2: 1")));
    assert_eq!(destabilize_word(&w("n=3: 2 1 2")), Err(BraidError::NotInDestabilizationForm));
}

#[test]
fn double_destabilization_detection() {
    let found = detect_double_destabilization_form(&w("n=4: 1 2 3 1 2")).unwrap();
    assert_eq!(found, Some((w("n=2: 1"), 1)));

    assert_eq!(detect_double_destabilization_form(&w("n=4: 1 2 3 1 -2")).unwrap(), None);

    let negative = detect_double_destabilization_form(&w("n=4: -2 -3 -1 -2")).unwrap();
    assert_eq!(negative, Some((w("n=2:"), -1)));

    assert_eq!(
        detect_double_destabilization_form(&w("n=3: 1 2")),
        Err(BraidError::StrandCountTooSmall { strands: 3, required: 4 })
    );
}

#[test]
fn exchange_form_enumeration() {
    let forms = enumerate_exchange_forms(&w("n=4: 1 3"));
    assert_eq!(forms.len(), 1);
    let f = &forms[0];
    assert_eq!((f.s, f.t), (2, 2));
    assert_eq!(f.w_block, alloc::vec![1]);
    assert_eq!(f.u_block, alloc::vec![3]);
    assert!(f.thin);

    let forms = enumerate_exchange_forms(&w("n=4: 1 2 1 3"));
    assert!(forms
        .iter()
        .any(|f| f.w_block == alloc::vec![1, 2, 1] && f.u_block == alloc::vec![3] && (f.s, f.t) == (2, 2)));

    assert!(enumerate_exchange_forms(&w("n=3: 1 2")).is_empty());
}

#[test]
fn exchange_forms_stable_under_rotation() {
    let a = w("n=5: 1 2 1 4 3 4");
    let classes = |word: &BraidWord| {
        let mut keys: Vec<(usize, usize, Vec<i32>, Vec<i32>)> = enumerate_exchange_forms(word)
            .into_iter()
            .map(|f| (f.s, f.t, super::canonical_w_block(&f.w_block, f.s), f.u_block))
            .collect();
        keys.sort();
        keys
    };
    let base = classes(&a);
    for k in 1..a.len() {
        assert_eq!(classes(&a.rotated(k)), base, "rotation {k}");
    }
}

#[test]
fn exchange_move_application() {
    let word = w("n=4: 1 3");
    let f = enumerate_exchange_forms(&word).into_iter().next().unwrap();
    let plus = apply_exchange_move(&word, &f, 1).unwrap();
    assert_eq!(plus.letters(), &[1, 2, 2, 3, -2, -2]);
    let minus = apply_exchange_move(&word, &f, -1).unwrap();
    assert_eq!(minus.letters(), &[1, -2, -2, 3, 2, 2]);

    assert_eq!(linking_matrix_of_word(&word), linking_matrix_of_word(&plus));
    assert_eq!(linking_matrix_of_word(&word), linking_matrix_of_word(&minus));

    let other = w("n=4: 3 1");
    assert_eq!(apply_exchange_move(&other, &f, 1), Err(BraidError::FormMismatch));
}

#[test]
fn flype_form_enumeration() {
    let forms = enumerate_elementary_flype_forms(&w("n=3: 1 2 2 1 2"));
    assert!(forms
        .iter()
        .any(|f| f.w1_block == alloc::vec![1] && f.p == 2 && f.w2_block == alloc::vec![1] && f.delta == 1));

    assert!(enumerate_elementary_flype_forms(&w("n=4: 1 3 2")).is_empty());
    // Degenerate: empty W₂ under the nonempty-blocks convention.
    assert!(enumerate_elementary_flype_forms(&w("n=3: 1 2 2")).is_empty());
}

#[test]
fn flype_application() {
    let word = w("n=3: 1 2 2 1 2");
    let f = enumerate_elementary_flype_forms(&word)
        .into_iter()
        .find(|f| f.p == 2)
        .unwrap();
    let flyped = apply_elementary_flype(&word, &f).unwrap();
    assert_eq!(flyped.letters(), &[1, 2, 1, 2, 2]);
    assert!(linking_matrix_of_word(&word).equivalent(&linking_matrix_of_word(&flyped)));

    // p = 1 with δ = +1 is symmetric.
    let sym = w("n=3: 1 2 1 2");
    let g = enumerate_elementary_flype_forms(&sym).into_iter().next().unwrap();
    let once = apply_elementary_flype(&sym, &g).unwrap();
    assert!(once.cyclically_equal(&sym));

    let signed = w("n=3: 1 2 2 1 -2");
    let h = enumerate_elementary_flype_forms(&signed)
        .into_iter()
        .find(|f| f.p == 2)
        .unwrap();
    let swapped = apply_elementary_flype(&signed, &h).unwrap();
    assert_eq!(swapped.letters(), &[1, -2, 1, 2, 2]);
}

#[test]
fn flype_is_involution_up_to_rotation() {
    for text in ["n=3: 1 2 2 1 2", "n=3: 1 2 2 1 -2", "n=4: 1 2 3 3 3 2 1 3"] {
        let word = w(text);
        let f = enumerate_elementary_flype_forms(&word).into_iter().next().unwrap();
        let once = apply_elementary_flype(&word, &f).unwrap();
        let back = enumerate_elementary_flype_forms(&once)
            .into_iter()
            .find(|g| g.p == f.p && g.delta == f.delta)
            .unwrap();
        let twice = apply_elementary_flype(&once, &back).unwrap();
        assert!(twice.cyclically_equal(&word), "{text}");
    }
}

#[test]
fn conjugacy_is_equivalence_on_samples() {
    let limits = ConjugacyLimits::default();
    let sample = [w("n=3: 1 2"), w("n=3: 2 1"), w("n=3: 1 2 1 -2")];
    for a in &sample {
        assert_eq!(are_conjugate(a, a, &limits), Ok(true));
    }
    for a in &sample {
        for b in &sample {
            assert_eq!(are_conjugate(a, b, &limits), are_conjugate(b, a, &limits));
        }
    }
    // Transitivity on the sampled triple: all three are conjugate.
    assert_eq!(are_conjugate(&sample[0], &sample[1], &limits), Ok(true));
    assert_eq!(are_conjugate(&sample[1], &sample[2], &limits), Ok(true));
    assert_eq!(are_conjugate(&sample[0], &sample[2], &limits), Ok(true));
}

fn arb_letters(n: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let top = (n - 1) as i32;
    prop::collection::vec(
        (1..=top).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]),
        0..=max_len,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_conjugates_are_conjugate(ls in arb_letters(4, 6), gs in arb_letters(4, 4)) {
        let limits = ConjugacyLimits::default();
        let word = BraidWord::new(4, ls).unwrap();
        let g = BraidWord::new(4, gs).unwrap();
        let conj = word.conjugated_by(&g).unwrap();
        prop_assert_eq!(are_conjugate(&word, &conj, &limits), Ok(true));
    }

    #[test]
    fn normal_form_invariant_under_relations(ls in arb_letters(4, 8), seed in 0u64..1000) {
        // Rewrite by braid relations and far commutation at a pseudo-random
        // admissible site; the normal form must not move.
        let word = BraidWord::new(4, ls).unwrap();
        let mut letters = word.letters().to_vec();
        let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
        for _ in 0..6 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if letters.len() < 2 {
                break;
            }
            let k = (state >> 33) as usize % letters.len().saturating_sub(1);
            let (a, b) = (letters[k], letters[k + 1]);
            let (ia, ib) = (a.abs(), b.abs());
            if (ia - ib).abs() >= 2 {
                letters.swap(k, k + 1);
            } else if k + 2 < letters.len() {
                let c = letters[k + 2];
                // σ_i σ_j σ_i ↔ σ_j σ_i σ_j for |i-j| = 1, all positive or
                // all negative.
                if a == c && (ia - ib).abs() == 1 && a.signum() == b.signum() {
                    letters[k] = b;
                    letters[k + 1] = a;
                    letters[k + 2] = b;
                }
            }
        }
        let rewritten = BraidWord::new(4, letters).unwrap();
        prop_assert_eq!(left_normal_form(&word), left_normal_form(&rewritten));
    }

    #[test]
    fn cyclic_reduce_preserves_closure_invariants(ls in arb_letters(4, 10)) {
        let word = BraidWord::new(4, ls).unwrap();
        let reduced = cyclic_reduce(&word);
        prop_assert_eq!(closure_components(&word).count, closure_components(&reduced).count);
        prop_assert!(linking_matrix_of_word(&word).equivalent(&linking_matrix_of_word(&reduced)));
    }

    #[test]
    fn exchange_moves_preserve_closure_invariants(ls in arb_letters(5, 8)) {
        let word = BraidWord::new(5, ls).unwrap();
        for f in enumerate_exchange_forms(&word).into_iter().take(4) {
            for sign in [1, -1] {
                let moved = apply_exchange_move(&word, &f, sign).unwrap();
                prop_assert_eq!(closure_components(&word).count, closure_components(&moved).count);
                prop_assert!(linking_matrix_of_word(&word).equivalent(&linking_matrix_of_word(&moved)));
            }
        }
    }

    #[test]
    fn destabilization_preserves_offdiagonal_linking(ls in arb_letters(3, 6)) {
        let mut letters = ls;
        letters.push(3);
        let word = BraidWord::new(4, letters).unwrap();
        if let Some(inner) = detect_destabilization_form(&word) {
            let before = linking_matrix_of_word(&word);
            let after = linking_matrix_of_word(&inner);
            prop_assert_eq!(closure_components(&word).count, closure_components(&inner).count);
            prop_assert_eq!(before.components, after.components);
            for a in 0..before.components {
                for b in 0..before.components {
                    if a != b {
                        prop_assert_eq!(before.crossings[a][b], after.crossings[a][b]);
                    }
                }
            }
        }
    }
}
