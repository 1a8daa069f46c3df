//! Code-restricted matrices, Knill-Laflamme checks, correctable-set
//! selection and recovery construction.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::channels::KrausSet;
use crate::codes::CodeSpace;
use crate::metrics::{self, GammaMatrix};
use crate::pauli::{DenseOperator, PauliString, StateVector};
use crate::{Error, Result, C64};

/// Absolute tolerance for "proportional to the identity" on 2×2 entries.
pub const KL_TOL: f64 = 1e-10;

const ZERO: C64 = C64::new(0.0, 0.0);

/// `m[i][j] = ⟨i_L|O|j_L⟩`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RestrictedMatrix([[C64; 2]; 2]);

impl RestrictedMatrix {
    pub fn new(m: [[C64; 2]; 2]) -> Self {
        RestrictedMatrix(m)
    }

    pub fn identity() -> Self {
        let one = C64::new(1.0, 0.0);
        RestrictedMatrix([[one, ZERO], [ZERO, one]])
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.0[i][j]
    }

    pub fn entries(&self) -> [[C64; 2]; 2] {
        self.0
    }

    pub fn trace(&self) -> C64 {
        self.0[0][0] + self.0[1][1]
    }

    /// `tr(m) / 2`.
    pub fn identity_component(&self) -> C64 {
        self.trace() * 0.5
    }

    pub fn scale(&self, c: C64) -> Self {
        let m = self.0;
        RestrictedMatrix([[m[0][0] * c, m[0][1] * c], [m[1][0] * c, m[1][1] * c]])
    }

    pub fn mul(&self, other: &RestrictedMatrix) -> Self {
        let (a, b) = (self.0, other.0);
        let mut out = [[ZERO; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        RestrictedMatrix(out)
    }

    pub fn adjoint(&self) -> Self {
        let m = self.0;
        RestrictedMatrix([[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]])
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_diff(&self, other: &RestrictedMatrix) -> f64 {
        let mut d = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        d
    }

    /// `Some(λ)` when `m = λ I` within `tol`.
    pub fn scalar_multiple(&self, tol: f64) -> Option<C64> {
        let lambda = self.identity_component();
        (self.max_diff(&RestrictedMatrix::identity().scale(lambda)) < tol).then_some(lambda)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() < tol
    }
}

/// `⟨i_L|word|j_L⟩`.
pub fn restricted(code: &CodeSpace, word: &PauliString) -> Result<RestrictedMatrix> {
    code.restrict_word(word)
}

pub fn restricted_operator(code: &CodeSpace, op: &DenseOperator) -> Result<RestrictedMatrix> {
    code.restrict_operator(op)
}

/// `Some(λ)` when `P_C A P_C = λ P_C`, with `A = sqrt(weight) · word`.
pub fn is_detectable(code: &CodeSpace, word: &PauliString, weight: f64) -> Result<Option<C64>> {
    Ok(restricted(code, word)?
        .scalar_multiple(KL_TOL)
        .map(|l| l * weight.sqrt()))
}

/// Unweighted KL coefficient `c` with `P_C a† b P_C = c P_C`, if any.
pub fn kl_coefficient(code: &CodeSpace, a: &PauliString, b: &PauliString) -> Result<Option<C64>> {
    let m = restricted(code, &a.adjoint().multiply(b)?)?;
    Ok(m.scalar_multiple(KL_TOL))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecoderPolicy {
    GreedyMaxProbability,
    FixedList,
}

impl DecoderPolicy {
    /// Command-line spelling.
    pub fn as_str(self) -> &'static str {
        match self {
            DecoderPolicy::GreedyMaxProbability => "greedy",
            DecoderPolicy::FixedList => "paper",
        }
    }
}

impl fmt::Display for DecoderPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DecoderPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greedy" | "greedy_max_probability" => Ok(DecoderPolicy::GreedyMaxProbability),
            "paper" | "fixed_list" => Ok(DecoderPolicy::FixedList),
            _ => Err(Error::argument(format!(
                "unknown decoder {s:?} (expected greedy or paper)"
            ))),
        }
    }
}

/// The fixed correctable list of a preset code, in its listed order.
pub fn fixed_list_words(code_label: &str) -> Result<Vec<PauliString>> {
    let words: Vec<String> = match code_label {
        "rc3" => ["III", "ZII", "IZI", "IIZ"].iter().map(|s| s.to_string()).collect(),
        "dfs2" => vec!["II".into(), "ZZ".into()],
        "conc6" => {
            let z_on =
                |qubits: &[usize]| -> String { (1..=6).map(|q| if qubits.contains(&q) { 'Z' } else { 'I' }).collect() };
            let mut v = vec![z_on(&[])];
            v.extend((1..=6).map(|q| z_on(&[q])));
            for a in 1..=6 {
                for b in a + 1..=6 {
                    v.push(z_on(&[a, b]));
                }
            }
            let triples: [[usize; 3]; 10] = [
                [1, 3, 5],
                [1, 3, 6],
                [1, 4, 5],
                [1, 4, 6],
                [1, 5, 6],
                [2, 3, 4],
                [2, 3, 5],
                [2, 3, 6],
                [2, 4, 5],
                [2, 4, 6],
            ];
            v.extend(triples.iter().map(|t| z_on(t)));
            v
        }
        "five_qubit" => {
            let mut v = vec!["IIIII".to_string()];
            for q in 0..5 {
                for letter in ['X', 'Y', 'Z'] {
                    v.push((0..5).map(|i| if i == q { letter } else { 'I' }).collect());
                }
            }
            v
        }
        other => return Err(Error::argument(format!("no fixed correctable list for code {other:?}"))),
    };
    words.iter().map(|w| w.parse()).collect()
}

/// A subset of Kraus indices treated as correctable, with its Γ.
#[derive(Clone, Debug)]
pub struct CorrectableSelection {
    indices: Vec<usize>,
    policy: DecoderPolicy,
    gamma: GammaMatrix,
    kl_violations: Vec<(usize, usize)>,
}

impl CorrectableSelection {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn policy(&self) -> DecoderPolicy {
        self.policy
    }

    pub fn gamma(&self) -> &GammaMatrix {
        &self.gamma
    }

    /// Kraus-index pairs in the selection that fail the KL condition.
    pub fn kl_violations(&self) -> &[(usize, usize)] {
        &self.kl_violations
    }

    pub fn total_weight(&self, ks: &KrausSet) -> f64 {
        self.indices.iter().map(|&i| ks.weight(i)).sum()
    }
}

fn by_weight_then_index(ks: &KrausSet, indices: &mut [usize]) {
    indices.sort_by(|&a, &b| ks.weight(b).total_cmp(&ks.weight(a)).then(a.cmp(&b)));
}

fn check_sizes(code: &CodeSpace, ks: &KrausSet) -> Result<()> {
    if code.n_qubits() != ks.n_qubits() {
        return Err(Error::argument(format!(
            "{}-qubit channel on {}-qubit code {}",
            ks.n_qubits(),
            code.n_qubits(),
            code.label()
        )));
    }
    Ok(())
}

pub fn select_correctable(code: &CodeSpace, ks: &KrausSet, policy: DecoderPolicy) -> Result<CorrectableSelection> {
    check_sizes(code, ks)?;
    let indices = match policy {
        DecoderPolicy::GreedyMaxProbability => {
            let mut order: Vec<usize> = (0..ks.len()).collect();
            by_weight_then_index(ks, &mut order);
            let mut admitted: Vec<usize> = Vec::new();
            for k in order {
                let word = &ks.get(k).word;
                let mut ok = true;
                for &m in &admitted {
                    if kl_coefficient(code, &ks.get(m).word, word)?.is_none() {
                        ok = false;
                        break;
                    }
                }
                // a word must also be detectable against itself, which Pauli words always are
                if ok {
                    admitted.push(k);
                }
            }
            admitted
        }
        DecoderPolicy::FixedList => fixed_list_words(code.label())?
            .iter()
            .map(|w| {
                ks.index_of(w)
                    .ok_or_else(|| Error::argument(format!("word {w} is not in the {} channel alphabet", code.label())))
            })
            .collect::<Result<Vec<usize>>>()?,
    };

    let mut kl_violations = Vec::new();
    for (a, &l) in indices.iter().enumerate() {
        for &m in &indices[a + 1..] {
            if kl_coefficient(code, &ks.get(l).word, &ks.get(m).word)?.is_none() {
                kl_violations.push((l, m));
            }
        }
    }
    let gamma = metrics::gamma_from_indices(code, &indices, ks, policy == DecoderPolicy::GreedyMaxProbability)?;
    Ok(CorrectableSelection {
        indices,
        policy,
        gamma,
        kl_violations,
    })
}

/// One recovery operator `R = Σ_i |i_L⟩⟨v^i|` with `v^i = P_rep |i_L⟩`.
#[derive(Clone, Debug)]
pub struct RecoveryOperator {
    representative: usize,
    partners: Vec<usize>,
    images: [StateVector; 2],
    refill: bool,
}

impl RecoveryOperator {
    /// Kraus index whose images define the operator.
    pub fn representative(&self) -> usize {
        self.representative
    }

    /// Further selected Kraus indices with the same image subspace.
    pub fn partners(&self) -> &[usize] {
        &self.partners
    }

    pub fn images(&self) -> &[StateVector; 2] {
        &self.images
    }

    /// True when the operator was added to fill space vacated by dropped
    /// words rather than coming from the selection.
    pub fn is_refill(&self) -> bool {
        self.refill
    }
}

/// Recovery operators plus an orthonormal basis of the space they miss.
#[derive(Clone, Debug)]
pub struct RecoverySet {
    code_label: String,
    n_qubits: usize,
    kraus_len: usize,
    operators: Vec<RecoveryOperator>,
    complement: Vec<StateVector>,
    served: Vec<usize>,
    dropped: Vec<usize>,
}

impl RecoverySet {
    pub fn operators(&self) -> &[RecoveryOperator] {
        &self.operators
    }

    pub fn complement(&self) -> &[StateVector] {
        &self.complement
    }

    pub fn has_complement(&self) -> bool {
        !self.complement.is_empty()
    }

    /// Selected Kraus indices recovered by some operator.
    pub fn served(&self) -> &[usize] {
        &self.served
    }

    /// Selected Kraus indices whose images clash with an earlier word.
    pub fn dropped(&self) -> &[usize] {
        &self.dropped
    }

    pub fn code_label(&self) -> &str {
        &self.code_label
    }

    pub(crate) fn check_matches(&self, code: &CodeSpace, ks: &KrausSet) -> Result<()> {
        if self.code_label != code.label() || self.n_qubits != code.n_qubits() || self.kraus_len != ks.len() {
            return Err(Error::argument(format!(
                "recovery built for {} does not match code {} with {} Kraus words",
                self.code_label,
                code.label(),
                ks.len()
            )));
        }
        Ok(())
    }

    /// Dense `R_l`.
    pub fn dense_operator(&self, code: &CodeSpace, l: usize) -> DenseOperator {
        let op = &self.operators[l];
        let a = DenseOperator::outer(code.codeword(0), &op.images[0]);
        let b = DenseOperator::outer(code.codeword(1), &op.images[1]);
        DenseOperator(a.0 + b.0)
    }

    /// Dense projector onto the complement, if any.
    pub fn complement_projector(&self) -> Option<DenseOperator> {
        let dim = 1usize << self.n_qubits;
        if self.complement.is_empty() {
            return None;
        }
        let mut m = DMatrix::from_element(dim, dim, ZERO);
        for v in &self.complement {
            m += DenseOperator::outer(v, v).0;
        }
        Some(DenseOperator(m))
    }

    /// `max |Σ_l R_l†R_l + R_⊥†R_⊥ − I|`.
    pub fn trace_preservation_error(&self, code: &CodeSpace) -> f64 {
        let dim = 1usize << self.n_qubits;
        let mut sum = DMatrix::from_element(dim, dim, ZERO);
        for l in 0..self.operators.len() {
            let r = self.dense_operator(code, l).0;
            sum += r.adjoint() * r;
        }
        if let Some(p) = self.complement_projector() {
            sum += p.0.adjoint() * p.0;
        }
        (sum - DMatrix::<C64>::identity(dim, dim))
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// Largest deviation of all image vectors from an orthonormal family.
    pub fn image_orthonormality_error(&self) -> f64 {
        let vs: Vec<&StateVector> = self.operators.iter().flat_map(|o| o.images.iter()).collect();
        let mut worst = 0.0f64;
        for (a, va) in vs.iter().enumerate() {
            for (b, vb) in vs.iter().enumerate() {
                let expect = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((va.inner(vb) - C64::new(expect, 0.0)).norm());
            }
        }
        worst
    }
}

enum Placement {
    New,
    Partner(usize),
    Conflict,
}

fn place(code: &CodeSpace, ks: &KrausSet, ops: &[RecoveryOperator], k: usize) -> Result<Placement> {
    let word = &ks.get(k).word;
    let mut partner = None;
    for (l, op) in ops.iter().enumerate() {
        let m = restricted(code, &ks.get(op.representative).word.adjoint().multiply(word)?)?;
        if m.is_zero(KL_TOL) {
            continue;
        }
        match m.scalar_multiple(KL_TOL) {
            Some(c) if (c.norm() - 1.0).abs() < KL_TOL && partner.is_none() => partner = Some(l),
            _ => return Ok(Placement::Conflict),
        }
    }
    Ok(partner.map_or(Placement::New, Placement::Partner))
}

fn new_operator(code: &CodeSpace, ks: &KrausSet, k: usize, refill: bool) -> Result<RecoveryOperator> {
    let word = &ks.get(k).word;
    Ok(RecoveryOperator {
        representative: k,
        partners: Vec::new(),
        images: [word.apply(code.codeword(0))?, word.apply(code.codeword(1))?],
        refill,
    })
}

/// Builds recovery operators from the selection's image subspaces.
///
/// Words are visited by weight (descending) then enumeration index. A word
/// whose images are orthogonal to every existing operator opens a new one; a
/// word whose images coincide with an operator's up to a phase joins it. Any
/// other overlap is an error for greedy selections; for fixed lists the word
/// is dropped and the vacated space is refilled from unselected words.
pub fn build_recovery(code: &CodeSpace, sel: &CorrectableSelection, ks: &KrausSet) -> Result<RecoverySet> {
    check_sizes(code, ks)?;
    let mut order = sel.indices.clone();
    by_weight_then_index(ks, &mut order);

    let mut ops: Vec<RecoveryOperator> = Vec::new();
    let mut served = Vec::new();
    let mut dropped = Vec::new();
    for k in order {
        match place(code, ks, &ops, k)? {
            Placement::New => {
                ops.push(new_operator(code, ks, k, false)?);
                served.push(k);
            }
            Placement::Partner(l) => {
                ops[l].partners.push(k);
                served.push(k);
            }
            Placement::Conflict => {
                if sel.policy == DecoderPolicy::GreedyMaxProbability {
                    return Err(Error::precondition(format!(
                        "images of {} overlap an existing recovery subspace",
                        ks.get(k).word
                    )));
                }
                dropped.push(k);
            }
        }
    }

    if !dropped.is_empty() {
        let mut rest: Vec<usize> = (0..ks.len()).filter(|i| !sel.indices.contains(i)).collect();
        by_weight_then_index(ks, &mut rest);
        for k in rest {
            if 2 * ops.len() >= code.dim() {
                break;
            }
            if let Placement::New = place(code, ks, &ops, k)? {
                ops.push(new_operator(code, ks, k, true)?);
            }
        }
    }

    let complement = complement_basis(code.dim(), &ops);
    Ok(RecoverySet {
        code_label: code.label().to_string(),
        n_qubits: code.n_qubits(),
        kraus_len: ks.len(),
        operators: ops,
        complement,
        served,
        dropped,
    })
}

fn complement_basis(dim: usize, ops: &[RecoveryOperator]) -> Vec<StateVector> {
    let mut basis: Vec<StateVector> = ops.iter().flat_map(|o| o.images.iter().cloned()).collect();
    let covered = basis.len();
    let n = dim.trailing_zeros() as usize;
    for b in 0..dim {
        if basis.len() >= dim {
            break;
        }
        let mut v = StateVector::basis(n, b);
        for u in &basis {
            let c = u.inner(&v);
            v = StateVector::from_amplitudes((v.amplitudes() - u.amplitudes() * c).iter().copied().collect())
                .expect("same dimension");
        }
        let norm = v.norm();
        if norm > 1e-8 {
            basis.push(v.scale(C64::new(1.0 / norm, 0.0)));
        }
    }
    basis.split_off(covered)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{dephasing_channel, depolarizing_channel, enumerate_kraus, Asymmetry};
    use crate::codes::{concatenated_code, dfs_two_qubit, five_qubit_code, repetition_plus_code};

    fn w(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn restricted_examples() {
        let rc = repetition_plus_code();
        assert!(
            restricted(&rc, &w("III"))
                .unwrap()
                .max_diff(&RestrictedMatrix::identity())
                < 1e-15
        );
        let dfs = dfs_two_qubit();
        let zz = restricted(&dfs, &w("ZZ")).unwrap();
        assert!(zz.max_diff(&RestrictedMatrix::identity().scale(C64::new(-1.0, 0.0))) < 1e-15);
        let zi = restricted(&dfs, &w("ZI")).unwrap();
        let one = C64::new(1.0, 0.0);
        assert!(zi.max_diff(&RestrictedMatrix::new([[one, ZERO], [ZERO, -one]])) < 1e-15);
        assert!(restricted(&dfs, &w("ZZZ")).is_err());
    }

    #[test]
    fn detectability_of_listed_words() {
        let rc = repetition_plus_code();
        let lambda = is_detectable(&rc, &w("ZII"), 0.3).unwrap().unwrap();
        assert!(lambda.norm() < 1e-15);
        assert!(is_detectable(&rc, &w("ZZZ"), 0.3).unwrap().is_none());

        let ks = enumerate_kraus(&dephasing_channel(2, 0.1, 0.2).unwrap());
        let dfs = dfs_two_qubit();
        let detectable: Vec<String> = ks
            .elements()
            .iter()
            .filter(|k| is_detectable(&dfs, &k.word, k.weight).unwrap().is_some())
            .map(|k| k.word.to_string())
            .collect();
        assert_eq!(detectable, vec!["+II", "+ZZ"]);

        let ks = enumerate_kraus(&dephasing_channel(6, 0.1, 0.2).unwrap());
        let conc = concatenated_code();
        let bad: Vec<String> = ks
            .elements()
            .iter()
            .filter(|k| is_detectable(&conc, &k.word, k.weight).unwrap().is_none())
            .map(|k| k.word.to_string())
            .collect();
        assert_eq!(bad, vec!["+ZZZZZZ"]);
    }

    #[test]
    fn greedy_rc3_set() {
        let rc = repetition_plus_code();
        let ks = enumerate_kraus(&dephasing_channel(3, 0.2, 0.4).unwrap());
        let sel = select_correctable(&rc, &ks, DecoderPolicy::GreedyMaxProbability).unwrap();
        let mut words: Vec<String> = sel.indices().iter().map(|&i| ks.get(i).word.to_string()).collect();
        words.sort();
        assert_eq!(words, vec!["+III", "+IIZ", "+IZI", "+ZII"]);
        assert!(sel.kl_violations().is_empty());
    }

    #[test]
    fn fixed_lists() {
        let conc = concatenated_code();
        let ks = enumerate_kraus(&dephasing_channel(6, 0.1, 0.3).unwrap());
        let sel = select_correctable(&conc, &ks, DecoderPolicy::FixedList).unwrap();
        assert_eq!(sel.len(), 32);
        let mut pairs: Vec<(String, String)> = sel
            .kl_violations()
            .iter()
            .map(|&(a, b)| (ks.get(a).word.to_string(), ks.get(b).word.to_string()))
            .collect();
        pairs.sort();
        assert_eq!(pairs.len(), 5);
        assert!(pairs.contains(&("+ZIZIZI".into(), "+IZIZIZ".into())));

        let rec = build_recovery(&conc, &sel, &ks).unwrap();
        assert_eq!(rec.operators().len(), 32);
        assert_eq!(rec.dropped().len(), 5);
        assert_eq!(rec.operators().iter().filter(|o| o.is_refill()).count(), 5);
        assert!(!rec.has_complement());
        assert!(rec.trace_preservation_error(&conc) < 1e-10);

        let rc = repetition_plus_code();
        let ks3 = enumerate_kraus(&dephasing_channel(3, 0.1, 0.3).unwrap());
        assert!(select_correctable(&rc, &ks3, DecoderPolicy::FixedList)
            .unwrap()
            .kl_violations()
            .is_empty());
        let dep = enumerate_kraus(&depolarizing_channel(3, 0.1, 0.3, Asymmetry::SYMMETRIC).unwrap());
        assert!(select_correctable(&rc, &dep, DecoderPolicy::FixedList).is_ok());
        assert!(matches!(fixed_list_words("steane"), Err(Error::Argument(_))));
    }

    #[test]
    fn recovery_counts() {
        let rc = repetition_plus_code();
        let ks = enumerate_kraus(&dephasing_channel(3, 0.1, 0.3).unwrap());
        let sel = select_correctable(&rc, &ks, DecoderPolicy::FixedList).unwrap();
        let rec = build_recovery(&rc, &sel, &ks).unwrap();
        assert_eq!(rec.operators().len(), 4);
        assert!(!rec.has_complement());
        assert!(rec.trace_preservation_error(&rc) < 1e-10);
        assert!(rec.image_orthonormality_error() < 1e-10);

        // R for Z² sends |-++>-style images back: R|+-+> = |0_L>
        let l = rec
            .operators()
            .iter()
            .position(|o| ks.get(o.representative()).word == w("IZI"))
            .unwrap();
        let r = rec.dense_operator(&rc, l);
        let back = r.apply(&crate::pauli::StateVector::product("+-+").unwrap()).unwrap();
        assert!(back.max_diff(rc.codeword(0)) < 1e-12);
        let back = r.apply(&crate::pauli::StateVector::product("-+-").unwrap()).unwrap();
        assert!(back.max_diff(rc.codeword(1)) < 1e-12);

        let dfs = dfs_two_qubit();
        let ks = enumerate_kraus(&dephasing_channel(2, 0.1, 0.3).unwrap());
        for policy in [DecoderPolicy::FixedList, DecoderPolicy::GreedyMaxProbability] {
            let sel = select_correctable(&dfs, &ks, policy).unwrap();
            let rec = build_recovery(&dfs, &sel, &ks).unwrap();
            assert_eq!(rec.operators().len(), 1);
            assert_eq!(rec.operators()[0].partners().len(), 1);
            assert_eq!(rec.complement().len(), 2);
            assert!(rec.complement()[0].max_diff(&StateVector::basis(2, 0)) < 1e-15);
            assert!(rec.complement()[1].max_diff(&StateVector::basis(2, 3)) < 1e-15);
            assert!(rec.trace_preservation_error(&dfs) < 1e-10);
        }

        let five = five_qubit_code();
        let ks = enumerate_kraus(&depolarizing_channel(5, 0.1, 0.0, Asymmetry::SYMMETRIC).unwrap());
        for policy in [DecoderPolicy::FixedList, DecoderPolicy::GreedyMaxProbability] {
            let sel = select_correctable(&five, &ks, policy).unwrap();
            let rec = build_recovery(&five, &sel, &ks).unwrap();
            assert_eq!(rec.operators().len(), 16);
            assert!(!rec.has_complement());
            assert!(rec.trace_preservation_error(&five) < 1e-10);
        }
    }

    #[test]
    fn five_qubit_greedy_is_syndrome_classes_times_stabilizer() {
        let five = five_qubit_code();
        let spec = crate::codes::five_qubit_stabilizer();
        let ks = enumerate_kraus(&depolarizing_channel(5, 0.1, 0.0, Asymmetry::SYMMETRIC).unwrap());
        let sel = select_correctable(&five, &ks, DecoderPolicy::GreedyMaxProbability).unwrap();
        assert_eq!(sel.len(), 256);
        let mut per_syndrome = [0usize; 16];
        for &i in sel.indices() {
            per_syndrome[spec.syndrome(&ks.get(i).word).unwrap() as usize] += 1;
        }
        assert!(per_syndrome.iter().all(|&c| c == 16));
        // every leader has weight at most one
        let leaders = sel.indices().iter().filter(|&&i| ks.get(i).word.weight() <= 1).count();
        assert_eq!(leaders, 16);
        for &l in sel.indices() {
            for &m in sel.indices() {
                let m2 = restricted(&five, &ks.get(l).word.adjoint().multiply(&ks.get(m).word).unwrap()).unwrap();
                assert!(m2.scalar_multiple(KL_TOL).is_some());
            }
        }
    }

    #[test]
    fn decoder_names() {
        assert_eq!(
            "greedy".parse::<DecoderPolicy>().unwrap(),
            DecoderPolicy::GreedyMaxProbability
        );
        assert_eq!("paper".parse::<DecoderPolicy>().unwrap(), DecoderPolicy::FixedList);
        assert!("best".parse::<DecoderPolicy>().is_err());
    }
}
