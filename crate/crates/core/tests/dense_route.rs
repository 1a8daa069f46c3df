use nalgebra::DMatrix;
use qeclab::analysis::Evaluator;
use qeclab::channels::{dephasing_channel, depolarizing_channel, enumerate_kraus, Asymmetry, KrausSet};
use qeclab::codes::{codeword_matrix, CodeName, CodeSpace};
use qeclab::metrics::{entanglement_fidelity_raw, entanglement_fidelity_recovered, FidelityMode};
use qeclab::pauli::PauliString;
use qeclab::qec::{build_recovery, select_correctable, DecoderPolicy, RecoverySet};
use qeclab::C64;

fn dense(w: &PauliString) -> DMatrix<C64> {
    let mut m = DMatrix::from_element(1, 1, C64::new(1.0, 0.0));
    for letter in w.letters() {
        m = m.kronecker(&letter.matrix());
    }
    m * w.phase().to_complex()
}

/// `(1/4) Σ_k p̃_k Σ_R |tr(C† R P_k C)|²` with every operator dense.
fn dense_fidelity(code: &CodeSpace, ks: &KrausSet, rec: &RecoverySet) -> f64 {
    let c = codeword_matrix(code);
    let mut recoveries: Vec<DMatrix<C64>> = (0..rec.operators().len())
        .map(|l| rec.dense_operator(code, l).0)
        .collect();
    if let Some(pr) = rec.complement_projector() {
        recoveries.push(pr.0);
    }
    let mut f = 0.0;
    for k in ks.elements() {
        if k.weight == 0.0 {
            continue;
        }
        let a = dense(&k.word) * &c;
        for r in &recoveries {
            f += k.weight * (c.adjoint() * r * &a).trace().norm_sqr() / 4.0;
        }
    }
    f
}

fn channel(name: CodeName, mu: f64, p: f64) -> KrausSet {
    let n = name.n_qubits();
    match name {
        CodeName::FiveQubit => enumerate_kraus(&depolarizing_channel(n, p, mu, Asymmetry::SYMMETRIC).unwrap()),
        _ => enumerate_kraus(&dephasing_channel(n, p, mu).unwrap()),
    }
}

#[test]
fn full_fidelity_matches_dense_route() {
    let points = [(0.0, 0.1), (0.3, 0.05), (0.7, 0.25), (1.0, 0.4)];
    for name in [CodeName::Rc3, CodeName::Dfs2, CodeName::Conc6] {
        let code = name.build();
        for policy in [DecoderPolicy::FixedList, DecoderPolicy::GreedyMaxProbability] {
            for (mu, p) in points {
                let ks = channel(name, mu, p);
                let sel = select_correctable(&code, &ks, policy).unwrap();
                let rec = build_recovery(&code, &sel, &ks).unwrap();
                let fast = entanglement_fidelity_recovered(&code, &ks, &rec, FidelityMode::RecoveredFull).unwrap();
                let slow = dense_fidelity(&code, &ks, &rec);
                assert!(
                    (fast - slow).abs() < 1e-10,
                    "{name} {policy:?} mu={mu} p={p}: {fast} vs {slow}"
                );
            }
        }
    }
}

#[test]
fn five_qubit_full_fidelity_matches_dense_route() {
    let code = CodeName::FiveQubit.build();
    let ks = channel(CodeName::FiveQubit, 0.2, 0.05);
    let sel = select_correctable(&code, &ks, DecoderPolicy::FixedList).unwrap();
    let rec = build_recovery(&code, &sel, &ks).unwrap();
    let fast = entanglement_fidelity_recovered(&code, &ks, &rec, FidelityMode::RecoveredFull).unwrap();
    assert!((fast - dense_fidelity(&code, &ks, &rec)).abs() < 1e-10);
}

#[test]
fn raw_fidelity_matches_dense_trace() {
    for name in CodeName::ALL {
        let ks = channel(name, 0.4, 0.2);
        let dim = (1u64 << name.n_qubits()) as f64;
        let slow: f64 = ks
            .elements()
            .iter()
            .map(|k| k.weight * dense(&k.word).trace().norm_sqr())
            .sum::<f64>()
            / (dim * dim);
        assert!((entanglement_fidelity_raw(&ks) - slow).abs() < 1e-12);
    }
}

#[test]
fn evaluator_matches_explicit_pipeline() {
    for name in CodeName::ALL {
        let eval = Evaluator::preset(name);
        let code = name.build();
        let ks = channel(name, 0.35, 0.15);
        let sel = select_correctable(&code, &ks, DecoderPolicy::FixedList).unwrap();
        let rec = build_recovery(&code, &sel, &ks).unwrap();
        let want = entanglement_fidelity_recovered(&code, &ks, &rec, FidelityMode::RecoveredTruncated).unwrap();
        assert_eq!(eval.fidelity(0.35, 0.15).unwrap(), want);
        let point = eval.evaluate(0.35, 0.15).unwrap();
        assert_eq!(point.fidelity, want);
        assert_eq!(point.selection.indices(), sel.indices());
    }
}
