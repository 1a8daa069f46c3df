//! Hand-transcribed polynomials for fidelities and entropies of the four
//! codes. They are independent of the Kraus/recovery pipeline and serve as
//! oracles for it.

use crate::channels::Asymmetry;
use crate::metrics::shannon_entropy;
use crate::{Error, Result};

fn check_domain(mu: f64, p: f64) -> Result<()> {
    if !(0.0..1.0).contains(&p) {
        return Err(Error::argument(format!("p = {p} outside [0, 1)")));
    }
    if !(0.0..=1.0).contains(&mu) {
        return Err(Error::argument(format!("mu = {mu} outside [0, 1]")));
    }
    Ok(())
}

/// Dephasing marginals and transitions, `p_ab = p(a | b)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransitionShorthand {
    pub p0: f64,
    pub p1: f64,
    pub p00: f64,
    pub p01: f64,
    pub p10: f64,
    pub p11: f64,
}

impl TransitionShorthand {
    pub fn new(mu: f64, p: f64) -> Result<Self> {
        check_domain(mu, p)?;
        Ok(TransitionShorthand {
            p0: 1.0 - p,
            p1: p,
            p00: (1.0 - mu) * (1.0 - p) + mu,
            p01: (1.0 - mu) * (1.0 - p),
            p10: (1.0 - mu) * p,
            p11: (1.0 - mu) * p + mu,
        })
    }
}

/// Three-qubit repetition code.
pub fn f_phase3(mu: f64, p: f64) -> Result<f64> {
    check_domain(mu, p)?;
    let (p2, p3) = (p * p, p * p * p);
    Ok(mu * mu * (2.0 * p3 - 3.0 * p2 + p) + mu * (-4.0 * p3 + 6.0 * p2 - 2.0 * p) + (2.0 * p3 - 3.0 * p2 + 1.0))
}

/// Two-qubit decoherence-free subspace.
pub fn f_dfs2(mu: f64, p: f64) -> Result<f64> {
    check_domain(mu, p)?;
    Ok(mu * (-2.0 * p * p + 2.0 * p) + (2.0 * p * p - 2.0 * p + 1.0))
}

/// The 18-term monomial expansion of the concatenated-code fidelity.
pub fn f_conc6(mu: f64, p: f64) -> Result<f64> {
    let TransitionShorthand {
        p0,
        p1,
        p00,
        p01,
        p10,
        p11,
    } = TransitionShorthand::new(mu, p)?;
    Ok(p00.powi(5) * p0
        + 2.0 * p00.powi(4) * p10 * p0
        + 4.0 * p00.powi(3) * p01 * p10 * p0
        + p00.powi(3) * p10 * p11 * p0
        + 3.0 * p00.powi(2) * p01 * p10.powi(2) * p0
        + p00.powi(3) * p01 * p10 * p1
        + 3.0 * p00.powi(2) * p01 * p10 * p11 * p0
        + 3.0 * p00 * p01.powi(2) * p10.powi(2) * p0
        + 3.0 * p00.powi(2) * p01.powi(2) * p10 * p1
        + p00.powi(3) * p01 * p11 * p1
        + p01.powi(2) * p10.powi(3) * p0
        + 2.0 * p00 * p01.powi(2) * p10.powi(2) * p1
        + p00 * p01 * p10.powi(2) * p11 * p0
        + p00.powi(2) * p01 * p10 * p11 * p1
        + p00 * p01 * p10 * p11.powi(2) * p0
        + 2.0 * p01.powi(2) * p10.powi(2) * p11 * p0
        + p00 * p01.powi(2) * p10 * p11 * p1
        + p01.powi(3) * p10.powi(2) * p1)
}

/// The concatenated-code fidelity expanded in powers of `μ`.
pub fn f_conc6_polynomial(mu: f64, p: f64) -> Result<f64> {
    check_domain(mu, p)?;
    let pw = |k: i32| p.powi(k);
    let rows = [
        -6.0 * pw(5) + 15.0 * pw(4) - 10.0 * pw(3) + 1.0,
        20.0 * pw(5) - 53.0 * pw(4) + 46.0 * pw(3) - 13.0 * pw(2),
        -20.0 * pw(5) + 58.0 * pw(4) - 60.0 * pw(3) + 25.0 * pw(2) - 3.0 * p,
        -6.0 * pw(4) + 12.0 * pw(3) - 7.0 * pw(2) + p,
        10.0 * pw(5) - 25.0 * pw(4) + 22.0 * pw(3) - 8.0 * pw(2) + p,
        -4.0 * pw(5) + 11.0 * pw(4) - 10.0 * pw(3) + 3.0 * pw(2),
    ];
    Ok(rows.iter().rev().fold(0.0, |acc, c| acc * mu + c))
}

/// The 32 weights `f_0 … f_31` of the concatenated-code entropy.
pub fn conc6_terms(mu: f64, p: f64) -> Result<[f64; 32]> {
    let TransitionShorthand {
        p0,
        p1,
        p00,
        p01,
        p10,
        p11,
    } = TransitionShorthand::new(mu, p)?;
    let groups: [(usize, f64); 18] = [
        (1, p00.powi(5) * p0),
        (2, p00.powi(4) * p10 * p0),
        (4, p00.powi(3) * p01 * p10 * p0),
        (1, p00.powi(3) * p10 * p11 * p0),
        (3, p00.powi(2) * p01 * p10.powi(2) * p0),
        (1, p00.powi(3) * p01 * p10 * p1),
        (3, p00.powi(2) * p01 * p10 * p11 * p0),
        (3, p00 * p01.powi(2) * p10.powi(2) * p0),
        (3, p00.powi(2) * p01.powi(2) * p10 * p1),
        (1, p00.powi(3) * p01 * p11 * p1),
        (1, p01.powi(2) * p10.powi(3) * p0),
        (2, p00 * p01.powi(2) * p10.powi(2) * p1),
        (1, p00 * p01 * p10.powi(2) * p11 * p0),
        (1, p00.powi(2) * p01 * p10 * p11 * p1),
        (1, p00 * p01 * p10 * p11.powi(2) * p0),
        (2, p01.powi(2) * p10.powi(2) * p11 * p0),
        (1, p00 * p01.powi(2) * p10 * p11 * p1),
        (1, p01.powi(3) * p10.powi(2) * p1),
    ];
    let mut out = [0.0; 32];
    let mut slot = 0;
    for (count, value) in groups {
        for _ in 0..count {
            out[slot] = value;
            slot += 1;
        }
    }
    debug_assert_eq!(slot, 32);
    Ok(out)
}

/// The sixteen weights `f'_0 … f'_15` of the five-qubit code: identity, six
/// end-position single errors, nine interior single errors.
pub fn five_terms(mu: f64, p: f64, alpha: Asymmetry) -> Result<[f64; 16]> {
    check_domain(mu, p)?;
    alpha.validate()?;
    let p0 = 1.0 - p;
    let p00 = (1.0 - mu) * (1.0 - p) + mu;
    let p0j = (1.0 - mu) * (1.0 - p);
    let pj = alpha.as_array().map(|a| a * p);
    let pj0 = alpha.as_array().map(|a| a * p * (1.0 - mu));

    let mut out = [0.0; 16];
    out[0] = p00.powi(4) * p0;
    for j in 0..3 {
        out[1 + j] = p00.powi(3) * p0 * pj0[j];
        out[4 + j] = p00.powi(3) * p0j * pj[j];
        for r in 0..3 {
            out[7 + 3 * j + r] = p00.powi(2) * p0j * p0 * pj0[j];
        }
    }
    Ok(out)
}

/// Symmetric-noise form with every error letter at `p/3`.
pub fn five_terms_symmetric(mu: f64, p: f64) -> Result<[f64; 16]> {
    check_domain(mu, p)?;
    let p0 = 1.0 - p;
    let p00 = (1.0 - mu) * (1.0 - p) + mu;
    let p01 = (1.0 - mu) * (1.0 - p);
    let p10 = p / 3.0 * (1.0 - mu);
    let mut out = [0.0; 16];
    out[0] = p00.powi(4) * p0;
    out[1..7].fill(p00.powi(3) * p10 * p0);
    out[7..].fill(p00.powi(2) * p01 * p10 * p0);
    Ok(out)
}

/// Five-qubit code fidelity.
pub fn f_five(mu: f64, p: f64, alpha: Asymmetry) -> Result<f64> {
    Ok(five_terms(mu, p, alpha)?.iter().sum())
}

/// Repetition-code entropy from the diagonal of its Γ.
pub fn s_rc(mu: f64, p: f64) -> Result<f64> {
    let t = TransitionShorthand::new(mu, p)?;
    Ok(shannon_entropy(&[
        t.p00 * t.p00 * t.p0,
        t.p00 * t.p10 * t.p0,
        t.p01 * t.p10 * t.p0,
        t.p00 * t.p01 * t.p1,
    ]))
}

/// The nonzero DFS Γ eigenvalue `λ₊`.
pub fn dfs_lambda_plus(mu: f64, p: f64) -> Result<f64> {
    check_domain(mu, p)?;
    Ok(mu * (-2.0 * p * p + 2.0 * p) + (2.0 * p * p - 2.0 * p + 1.0))
}

pub fn s_dfs(mu: f64, p: f64) -> Result<f64> {
    Ok(shannon_entropy(&[dfs_lambda_plus(mu, p)?]))
}

pub fn s_conc(mu: f64, p: f64) -> Result<f64> {
    Ok(shannon_entropy(&conc6_terms(mu, p)?))
}

pub fn s_five(mu: f64, p: f64, alpha: Asymmetry) -> Result<f64> {
    Ok(shannon_entropy(&five_terms(mu, p, alpha)?))
}
