use nalgebra::DMatrix;
use proptest::prelude::*;
use qeclab::channels::{dephasing_channel, depolarizing_channel, enumerate_kraus, Asymmetry, MarkovChannelSpec};
use qeclab::closed_forms;
use qeclab::codes::{codeword_matrix, CodeName};
use qeclab::metrics::{gamma_matrix, verify_dfs};
use qeclab::pauli::{PauliLetter, PauliString, Phase, StateVector};
use qeclab::qec::{build_recovery, restricted, select_correctable, DecoderPolicy};
use qeclab::C64;

fn kron(a: &DMatrix<C64>, b: &DMatrix<C64>) -> DMatrix<C64> {
    a.kronecker(b)
}

/// Dense matrix built letter by letter, qubit 1 leftmost.
fn dense(w: &PauliString) -> DMatrix<C64> {
    let mut m = DMatrix::from_element(1, 1, C64::new(1.0, 0.0));
    for letter in w.letters() {
        m = kron(&m, &letter.matrix());
    }
    m * w.phase().to_complex()
}

fn max_diff(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn word(n: usize) -> impl Strategy<Value = PauliString> {
    (prop::collection::vec(0usize..4, n), 0u32..4).prop_map(|(letters, k)| {
        let letters: Vec<PauliLetter> = letters.into_iter().map(|i| PauliLetter::ALL[i]).collect();
        PauliString::from_letters(&letters)
            .unwrap()
            .with_phase(Phase::from_exponent(k))
    })
}

fn word_pair() -> impl Strategy<Value = (PauliString, PauliString)> {
    (1usize..=5).prop_flat_map(|n| (word(n), word(n)))
}

fn word_and_state() -> impl Strategy<Value = (PauliString, StateVector)> {
    (1usize..=5).prop_flat_map(|n| {
        let amps = prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1 << n);
        (word(n), amps).prop_map(|(w, a)| {
            let v = StateVector::from_amplitudes(a.into_iter().map(|(re, im)| C64::new(re, im)).collect()).unwrap();
            (w, v)
        })
    })
}

fn simplex() -> impl Strategy<Value = Asymmetry> {
    (0.0f64..1.0, 0.0f64..1.0).prop_map(|(a, b)| {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        Asymmetry::new(lo, hi - lo, 1.0 - hi).unwrap()
    })
}

fn channel_spec() -> impl Strategy<Value = MarkovChannelSpec> {
    (1usize..=5, 0.0f64..=1.0, 0.0f64..=1.0, simplex(), any::<bool>()).prop_map(|(n, p, mu, alpha, dephasing)| {
        if dephasing {
            dephasing_channel(n, p, mu).unwrap()
        } else {
            depolarizing_channel(n, p, mu, alpha).unwrap()
        }
    })
}

fn dephasing_code() -> impl Strategy<Value = CodeName> {
    prop::sample::select(vec![CodeName::Rc3, CodeName::Dfs2, CodeName::Conc6])
}

proptest! {
    #[test]
    fn multiply_matches_dense((a, b) in word_pair()) {
        let ab = a.multiply(&b).unwrap();
        prop_assert!(max_diff(&dense(&ab), &(dense(&a) * dense(&b))) < 1e-12);
    }

    #[test]
    fn commutes_matches_dense((a, b) in word_pair()) {
        let (da, db) = (dense(&a), dense(&b));
        let dense_commutes = max_diff(&(&da * &db), &(&db * &da)) < 1e-12;
        prop_assert_eq!(a.commutes(&b).unwrap(), dense_commutes);
    }

    #[test]
    fn apply_matches_dense((w, v) in word_and_state()) {
        let fast = w.apply(&v).unwrap();
        let slow = dense(&w) * v.amplitudes();
        let diff = (fast.amplitudes() - slow).iter().map(|z| z.norm()).fold(0.0, f64::max);
        prop_assert!(diff < 1e-12);
        prop_assert!(max_diff(&w.to_dense().0, &dense(&w)) < 1e-12);
    }

    #[test]
    fn adjoint_matches_dense(w in (1usize..=5).prop_flat_map(word)) {
        prop_assert!(max_diff(&dense(&w.adjoint()), &dense(&w).adjoint()) < 1e-12);
    }

    #[test]
    fn display_parse_round_trip(w in (1usize..=8).prop_flat_map(word)) {
        let text = w.to_string();
        let back: PauliString = text.parse().unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn kraus_weights_sum_to_one(spec in channel_spec()) {
        let ks = enumerate_kraus(&spec);
        prop_assert_eq!(ks.len(), spec.alphabet().len().pow(spec.n_qubits() as u32));
        prop_assert!(ks.elements().iter().all(|k| k.weight >= 0.0));
        prop_assert!((ks.total_weight() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn memoryless_weights_factorize(spec in channel_spec()) {
        let spec = MarkovChannelSpec::new(spec.n_qubits(), spec.alphabet().clone(), 0.0).unwrap();
        let alphabet = spec.alphabet();
        for k in enumerate_kraus(&spec).elements() {
            let product: f64 = k.word.letters().map(|l| alphabet.marginal(alphabet.position(l).unwrap())).product();
            prop_assert!((k.weight - product).abs() < 1e-15);
        }
    }

    #[test]
    fn full_memory_repeats_one_letter(spec in channel_spec()) {
        let spec = MarkovChannelSpec::new(spec.n_qubits(), spec.alphabet().clone(), 1.0).unwrap();
        let alphabet = spec.alphabet();
        for k in enumerate_kraus(&spec).elements() {
            let letters: Vec<PauliLetter> = k.word.letters().collect();
            if letters.iter().all(|&l| l == letters[0]) {
                let want = alphabet.marginal(alphabet.position(letters[0]).unwrap());
                prop_assert!((k.weight - want).abs() < 1e-15);
            } else {
                prop_assert_eq!(k.weight, 0.0);
            }
        }
    }

    #[test]
    fn restriction_matches_dense(name in prop::sample::select(CodeName::ALL.to_vec()), seed in any::<u64>()) {
        let code = name.build();
        let n = code.n_qubits();
        let mut s = seed;
        let letters: Vec<PauliLetter> = (0..n).map(|_| { let l = PauliLetter::ALL[(s % 4) as usize]; s /= 4; l }).collect();
        let w = PauliString::from_letters(&letters).unwrap().with_phase(Phase::from_exponent((s % 4) as u32));
        let c = codeword_matrix(&code);
        let oracle = c.adjoint() * dense(&w) * &c;
        let m = restricted(&code, &w).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                prop_assert!((m.get(i, j) - oracle[(i, j)]).norm() < 1e-12);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gamma_is_a_density_matrix(name in dephasing_code(), greedy in any::<bool>(), mu in 0.0f64..=1.0, p in 0.0f64..=0.5) {
        let code = name.build();
        let ks = enumerate_kraus(&dephasing_channel(code.n_qubits(), p, mu).unwrap());
        let policy = if greedy { DecoderPolicy::GreedyMaxProbability } else { DecoderPolicy::FixedList };
        let sel = select_correctable(&code, &ks, policy).unwrap();
        let g = gamma_matrix(&code, &sel, &ks).unwrap();
        let m = g.matrix();
        prop_assert!(max_diff(m, &m.adjoint()) < 1e-12);
        prop_assert!(g.eigenvalues().iter().all(|&l| l >= -1e-12));
        prop_assert!((g.trace() - sel.total_weight(&ks)).abs() < 1e-12);
        let s = g.entropy().unwrap();
        prop_assert!(s >= -1e-12 && s <= (g.dim() as f64).log2() + 1e-12);
    }

    #[test]
    fn greedy_selection_satisfies_kl(name in dephasing_code(), mu in 0.0f64..=1.0, p in 0.0f64..=0.5) {
        let code = name.build();
        let ks = enumerate_kraus(&dephasing_channel(code.n_qubits(), p, mu).unwrap());
        let sel = select_correctable(&code, &ks, DecoderPolicy::GreedyMaxProbability).unwrap();
        prop_assert!(sel.kl_violations().is_empty());
        let c = codeword_matrix(&code);
        for &a in sel.indices() {
            for &b in sel.indices() {
                let m = c.adjoint() * dense(&ks.get(a).word).adjoint() * dense(&ks.get(b).word) * &c;
                let off = m[(0, 1)].norm().max(m[(1, 0)].norm()).max((m[(0, 0)] - m[(1, 1)]).norm());
                prop_assert!(off < 1e-10);
            }
        }
        let rec = build_recovery(&code, &sel, &ks).unwrap();
        prop_assert!(rec.trace_preservation_error(&code) < 1e-10);
        prop_assert!(rec.image_orthonormality_error() < 1e-10);
    }

    #[test]
    fn dfs_gamma_has_rank_one(mu in 0.0f64..=1.0, p in 0.0f64..0.999) {
        let code = CodeName::Dfs2.build();
        let ks = enumerate_kraus(&dephasing_channel(2, p, mu).unwrap());
        let sel = select_correctable(&code, &ks, DecoderPolicy::FixedList).unwrap();
        let mut ev = gamma_matrix(&code, &sel, &ks).unwrap().eigenvalues();
        ev.sort_by(f64::total_cmp);
        let a = ks.weight(ks.index_of(&"II".parse().unwrap()).unwrap());
        let b = ks.weight(ks.index_of(&"ZZ".parse().unwrap()).unwrap());
        prop_assert!(ev[0].abs() < 1e-12);
        prop_assert!((ev[1] - (a + b)).abs() < 1e-12);
        prop_assert!((ev[1] - closed_forms::dfs_lambda_plus(mu, p).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn dfs_is_decoherence_free_only_without_flips(p in 0.0f64..=0.5) {
        let code = CodeName::Dfs2.build();
        prop_assert!(verify_dfs(&code, &enumerate_kraus(&dephasing_channel(2, p, 1.0).unwrap())).unwrap());
        prop_assert!(verify_dfs(&code, &enumerate_kraus(&dephasing_channel(2, 0.0, p).unwrap())).unwrap());
        if p > 0.0 {
            prop_assert!(!verify_dfs(&code, &enumerate_kraus(&dephasing_channel(2, p, 0.5).unwrap())).unwrap());
        }
    }
}
