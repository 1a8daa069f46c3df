//! Entanglement fidelity, the error-correction matrix Γ and entropies built
//! from it, Lindblad and Choi matrices, and the DFS verifier.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::channels::KrausSet;
use crate::codes::CodeSpace;
use crate::pauli::{DenseOperator, PauliString};
use crate::qec::{restricted, CorrectableSelection, RecoverySet, KL_TOL};
use crate::{Error, Result, C64};

const HERMITIAN_TOL: f64 = 1e-10;
const NEGATIVE_EIG_TOL: f64 = 1e-10;
const RANK_TOL: f64 = 1e-12;
const ZERO: C64 = C64::new(0.0, 0.0);

/// Hermitian PSD matrix of KL coefficients `γ_lm` over a selection.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaMatrix(DMatrix<C64>);

impl GammaMatrix {
    pub fn new(m: DMatrix<C64>) -> Result<Self> {
        check_hermitian(&m, 1e-12)?;
        Ok(GammaMatrix(m))
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.0)
    }

    /// Number of eigenvalues above `RANK_TOL · λ_max`.
    pub fn rank(&self) -> usize {
        let eig = self.eigenvalues();
        let max = eig.iter().copied().fold(0.0, f64::max);
        if max <= 0.0 {
            return 0;
        }
        eig.iter().filter(|&&l| l > RANK_TOL * max).count()
    }

    pub fn entropy(&self) -> Result<f64> {
        entropy_of_spectrum(&self.eigenvalues())
    }
}

fn check_hermitian(m: &DMatrix<C64>, tol: f64) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(Error::argument(format!(
            "matrix is {}x{}, not square",
            m.nrows(),
            m.ncols()
        )));
    }
    for i in 0..m.nrows() {
        for j in 0..=i {
            let d = (m[(i, j)] - m[(j, i)].conj()).norm();
            if d > tol {
                return Err(Error::argument(format!(
                    "matrix is not Hermitian: entry ({i}, {j}) off by {d}"
                )));
            }
        }
    }
    Ok(())
}

fn is_diagonal(m: &DMatrix<C64>) -> bool {
    (0..m.nrows()).all(|i| (0..m.ncols()).all(|j| i == j || m[(i, j)] == ZERO))
}

fn hermitian_eigenvalues(m: &DMatrix<C64>) -> Vec<f64> {
    let mut eig: Vec<f64> = if is_diagonal(m) {
        m.diagonal().iter().map(|c| c.re).collect()
    } else {
        m.clone().symmetric_eigenvalues().iter().copied().collect()
    };
    eig.sort_by(f64::total_cmp);
    // rank one: the eigenvalue is the trace
    let max = eig.last().copied().unwrap_or(0.0);
    if max > 0.0 && eig[..eig.len() - 1].iter().all(|l| l.abs() <= RANK_TOL * max) {
        let n = eig.len();
        eig.iter_mut().for_each(|l| *l = 0.0);
        eig[n - 1] = m.diagonal().iter().map(|c| c.re).sum();
    }
    eig
}

fn entropy_of_spectrum(eig: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &l in eig {
        if l < -NEGATIVE_EIG_TOL {
            return Err(Error::precondition(format!("eigenvalue {l} is negative")));
        }
        if l > 0.0 {
            s -= l * l.log2();
        }
    }
    Ok(s)
}

/// `−Σ λ log₂ λ` over the eigenvalues of a Hermitian PSD matrix.
pub fn von_neumann_entropy(m: &DMatrix<C64>) -> Result<f64> {
    check_hermitian(m, HERMITIAN_TOL)?;
    entropy_of_spectrum(&hermitian_eigenvalues(m))
}

/// `−Σ p log₂ p`.
pub fn shannon_entropy(probabilities: &[f64]) -> f64 {
    probabilities.iter().filter(|&&p| p > 0.0).map(|&p| -p * p.log2()).sum()
}

/// Γ over `indices`: `γ_lm = sqrt(p̃_l p̃_m) · tr(⟨A_l†A_m⟩_C) / 2`.
///
/// With `strict` a pair that fails the KL condition is an error; otherwise
/// only the identity component of its restricted product is kept.
pub(crate) fn gamma_from_indices(
    code: &CodeSpace,
    indices: &[usize],
    ks: &KrausSet,
    strict: bool,
) -> Result<GammaMatrix> {
    let d = indices.len();
    let mut m = DMatrix::from_element(d, d, ZERO);
    for (a, &l) in indices.iter().enumerate() {
        for (b, &k) in indices.iter().enumerate().skip(a) {
            let r = restricted(code, &ks.get(l).word.adjoint().multiply(&ks.get(k).word)?)?;
            let c = match r.scalar_multiple(KL_TOL) {
                Some(c) => c,
                None if strict => {
                    return Err(Error::precondition(format!(
                        "{} and {} violate the KL condition",
                        ks.get(l).word,
                        ks.get(k).word
                    )))
                }
                None => r.identity_component(),
            };
            let g = c * (ks.weight(l) * ks.weight(k)).sqrt();
            m[(a, b)] = g;
            m[(b, a)] = g.conj();
        }
        m[(a, a)] = C64::new(m[(a, a)].re, 0.0);
    }
    GammaMatrix::new(m)
}

pub fn gamma_matrix(code: &CodeSpace, sel: &CorrectableSelection, ks: &KrausSet) -> Result<GammaMatrix> {
    let strict = sel.policy() == crate::qec::DecoderPolicy::GreedyMaxProbability;
    gamma_from_indices(code, sel.indices(), ks, strict)
}

/// `S(Γ)` for the selection.
pub fn code_entropy(code: &CodeSpace, sel: &CorrectableSelection, ks: &KrausSet) -> Result<f64> {
    if code.n_qubits() != ks.n_qubits() {
        return Err(Error::argument("code and channel sizes differ"));
    }
    sel.gamma().entropy()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FidelityMode {
    Raw,
    RecoveredFull,
    RecoveredTruncated,
}

impl FidelityMode {
    pub fn as_str(self) -> &'static str {
        match self {
            FidelityMode::Raw => "raw",
            FidelityMode::RecoveredFull => "full",
            FidelityMode::RecoveredTruncated => "truncated",
        }
    }
}

impl fmt::Display for FidelityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FidelityMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(FidelityMode::Raw),
            "full" | "recovered_full" => Ok(FidelityMode::RecoveredFull),
            "truncated" | "recovered_truncated" => Ok(FidelityMode::RecoveredTruncated),
            _ => Err(Error::argument(format!(
                "unknown fidelity mode {s:?} (expected truncated, full or raw)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FidelityReport {
    pub value: f64,
    pub mode: FidelityMode,
    pub mu: f64,
    pub p: f64,
    pub alpha: [f64; 3],
}

/// `(1/4^n) Σ_k p̃_k |tr P_k|²`.
pub fn entanglement_fidelity_raw(ks: &KrausSet) -> f64 {
    let dim = (1u64 << ks.n_qubits()) as f64;
    ks.elements()
        .iter()
        .map(|k| k.weight * k.word.trace().norm_sqr())
        .sum::<f64>()
        / (dim * dim)
}

/// `Π_comp |i_L⟩` for both codewords, or `None` without a complement branch.
fn complement_shadows(code: &CodeSpace, rec: &RecoverySet) -> Option<[DVector<C64>; 2]> {
    if !rec.has_complement() {
        return None;
    }
    Some(std::array::from_fn(|i| {
        let cw = code.codeword(i);
        rec.complement()
            .iter()
            .fold(DVector::from_element(cw.dim(), ZERO), |acc, c| {
                acc + c.amplitudes() * c.inner(cw)
            })
    }))
}

fn recovered_term(
    code: &CodeSpace,
    ks: &KrausSet,
    rec: &RecoverySet,
    shadows: Option<&[DVector<C64>; 2]>,
    k: usize,
) -> Result<f64> {
    let word = &ks.get(k).word;
    let mut acc = 0.0;
    for op in rec.operators() {
        let m = restricted(code, &ks.get(op.representative()).word.adjoint().multiply(word)?)?;
        acc += m.trace().norm_sqr();
    }
    if let Some(shadows) = shadows {
        let mut t = ZERO;
        for (i, u) in shadows.iter().enumerate() {
            t += u.dotc(word.apply(code.codeword(i))?.amplitudes());
        }
        acc += t.norm_sqr();
    }
    Ok(ks.weight(k) * acc / 4.0)
}

/// `(1/4) Σ_k Σ_l |tr [R_l A_k]_C|²`.
///
/// `RecoveredTruncated` runs `k` over the selection only. Selected words that
/// were dropped while building the recovery count with their own weight, as
/// if each had its own recovery branch.
pub fn entanglement_fidelity_recovered(
    code: &CodeSpace,
    ks: &KrausSet,
    rec: &RecoverySet,
    mode: FidelityMode,
) -> Result<f64> {
    rec.check_matches(code, ks)?;
    let shadows = complement_shadows(code, rec);
    let term = |k: usize| recovered_term(code, ks, rec, shadows.as_ref(), k);
    match mode {
        FidelityMode::Raw => Ok(entanglement_fidelity_raw(ks)),
        FidelityMode::RecoveredFull => (0..ks.len()).map(term).sum(),
        FidelityMode::RecoveredTruncated => {
            let served: f64 = rec.served().iter().map(|&k| term(k)).sum::<Result<f64>>()?;
            let dropped: f64 = rec.dropped().iter().map(|&k| ks.weight(k)).sum();
            Ok(served + dropped)
        }
    }
}

/// `1 − F`.
pub fn failure_probability(fidelity: f64) -> f64 {
    1.0 - fidelity
}

/// `Tr(ρ Q)` for a Pauli word `Q`.
fn trace_with_word(rho: &DMatrix<C64>, q: &PauliString) -> C64 {
    (0..rho.nrows())
        .map(|b| {
            let (row, coeff) = q.column_entry(b);
            rho[(b, row)] * coeff
        })
        .sum()
}

fn check_density(rho: &DenseOperator, n: usize) -> Result<()> {
    if rho.dim() != 1 << n {
        return Err(Error::argument(format!(
            "density operator of dimension {} on {n} qubits",
            rho.dim()
        )));
    }
    check_hermitian(rho.matrix(), HERMITIAN_TOL)?;
    let tr = rho.trace();
    if (tr - C64::new(1.0, 0.0)).norm() > HERMITIAN_TOL {
        return Err(Error::argument(format!("density operator has trace {tr}")));
    }
    if hermitian_eigenvalues(rho.matrix())
        .first()
        .is_some_and(|&l| l < -NEGATIVE_EIG_TOL)
    {
        return Err(Error::argument("density operator is not positive semidefinite"));
    }
    Ok(())
}

/// `Tr ρ² > 1 − 1e-10`.
pub fn is_pure(rho: &DenseOperator) -> bool {
    (rho.matrix() * rho.matrix()).trace().re > 1.0 - 1e-10
}

/// `σ_lm = sqrt(p̃_l p̃_m) Tr(ρ P_l† P_m)` over the given Kraus indices.
pub fn lindblad_matrix_on(rho: &DenseOperator, ks: &KrausSet, indices: &[usize]) -> Result<DMatrix<C64>> {
    check_density(rho, ks.n_qubits())?;
    let d = indices.len();
    let mut m = DMatrix::from_element(d, d, ZERO);
    for (a, &l) in indices.iter().enumerate() {
        for (b, &k) in indices.iter().enumerate() {
            let q = ks.get(l).word.adjoint().multiply(&ks.get(k).word)?;
            m[(a, b)] = trace_with_word(rho.matrix(), &q) * (ks.weight(l) * ks.weight(k)).sqrt();
        }
    }
    Ok(m)
}

/// Lindblad matrix over every Kraus word.
pub fn lindblad_matrix(rho: &DenseOperator, ks: &KrausSet) -> Result<DMatrix<C64>> {
    let all: Vec<usize> = (0..ks.len()).collect();
    lindblad_matrix_on(rho, ks, &all)
}

/// `D_lm = Tr(A_l† A_m)`.
pub fn choi_matrix(ks: &KrausSet) -> Result<DMatrix<C64>> {
    let d = ks.len();
    let mut m = DMatrix::from_element(d, d, ZERO);
    for l in 0..d {
        for k in 0..d {
            let q = ks.get(l).word.adjoint().multiply(&ks.get(k).word)?;
            m[(l, k)] = q.trace() * (ks.weight(l) * ks.weight(k)).sqrt();
        }
    }
    Ok(m)
}

/// `Λ(ρ) = Σ_k p̃_k P_k ρ P_k†`.
pub fn apply_channel(rho: &DenseOperator, ks: &KrausSet) -> Result<DenseOperator> {
    check_density(rho, ks.n_qubits())?;
    let dim = rho.dim();
    let mut out = DMatrix::from_element(dim, dim, ZERO);
    for k in ks.elements() {
        if k.weight == 0.0 {
            continue;
        }
        let cols: Vec<(usize, C64)> = (0..dim).map(|b| k.word.column_entry(b)).collect();
        for (a, &(ra, ca)) in cols.iter().enumerate() {
            for (b, &(rb, cb)) in cols.iter().enumerate() {
                out[(ra, rb)] += ca * rho.matrix()[(a, b)] * cb.conj() * k.weight;
            }
        }
    }
    Ok(DenseOperator(out))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LindbladBoundsReport {
    /// `S(ρ)`
    pub input_entropy: f64,
    /// `S(Λ(ρ))`
    pub output_entropy: f64,
    /// `S(σ)`
    pub exchange_entropy: f64,
    pub holds: bool,
}

/// Checks `|S(Λ(ρ)) − S(σ)| ≤ S(ρ) ≤ S(Λ(ρ)) + S(σ)` within `1e-8`.
pub fn lindblad_bounds_check(rho: &DenseOperator, ks: &KrausSet) -> Result<LindbladBoundsReport> {
    let tol = 1e-8;
    let input_entropy = von_neumann_entropy(rho.matrix())?;
    let output_entropy = von_neumann_entropy(apply_channel(rho, ks)?.matrix())?;
    let exchange_entropy = von_neumann_entropy(&lindblad_matrix(rho, ks)?)?;
    let holds = (output_entropy - exchange_entropy).abs() <= input_entropy + tol
        && input_entropy <= output_entropy + exchange_entropy + tol;
    Ok(LindbladBoundsReport {
        input_entropy,
        output_entropy,
        exchange_entropy,
        holds,
    })
}

/// True when every Kraus operator restricts to `g_k U` for one common
/// unitary `U` and none of them leaks out of the code.
pub fn verify_dfs(code: &CodeSpace, ks: &KrausSet) -> Result<bool> {
    if code.n_qubits() != ks.n_qubits() {
        return Err(Error::argument("code and channel sizes differ"));
    }
    let mut reference = None;
    for k in ks.elements() {
        if k.weight == 0.0 {
            continue;
        }
        let m = restricted(code, &k.word)?;
        // P_k is unitary, so the restriction is unitary exactly when nothing leaks
        if m.adjoint().mul(&m).max_diff(&crate::qec::RestrictedMatrix::identity()) > KL_TOL {
            return Ok(false);
        }
        match reference {
            None => reference = Some(m),
            Some(u) => {
                let rel = m.mul(&u.adjoint());
                if rel.scalar_multiple(KL_TOL).is_none() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
