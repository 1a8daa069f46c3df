//! Parameter sweeps, threshold and crossover curves, the five-qubit entropy
//! difference and the datasets behind each figure.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::channels::{dephasing_channel, depolarizing_channel, enumerate_kraus, Asymmetry, ChannelModel, KrausSet};
use crate::codes::{CodeName, CodeSpace};
use crate::grid::Grid;
use crate::metrics::{self, FidelityMode};
use crate::qec::{build_recovery, select_correctable, CorrectableSelection, DecoderPolicy, RecoverySet};
use crate::{Error, Result, C64};

/// Values with `|f| ≤ ZERO_TOL` count as exact zeros during root scans.
pub const ZERO_TOL: f64 = 1e-12;
const SCAN_POINTS: usize = 101;
const MAX_BISECTIONS: usize = 200;
const BISECTION_TOL: f64 = 1e-9;

/// Formats a float with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "none".to_string(), fmt_f64)
}

/// Everything computed at one `(μ, p)` point.
#[derive(Clone, Debug)]
pub struct PointEvaluation {
    pub kraus: KrausSet,
    pub selection: CorrectableSelection,
    pub recovery: RecoverySet,
    pub fidelity: f64,
    pub entropy: f64,
}

/// Code, noise model and decoding choices shared by every point of a sweep.
#[derive(Clone, Debug)]
pub struct Evaluator {
    name: CodeName,
    code: CodeSpace,
    model: ChannelModel,
    alpha: Asymmetry,
    decoder: DecoderPolicy,
    mode: FidelityMode,
}

impl Evaluator {
    pub fn new(
        name: CodeName,
        model: ChannelModel,
        alpha: Asymmetry,
        decoder: DecoderPolicy,
        mode: FidelityMode,
    ) -> Result<Self> {
        alpha.validate()?;
        Ok(Evaluator {
            name,
            code: name.build(),
            model,
            alpha,
            decoder,
            mode,
        })
    }

    /// Default model for the code, fixed-list decoder, truncated fidelity.
    pub fn preset(name: CodeName) -> Self {
        Evaluator::new(
            name,
            name.default_model(),
            Asymmetry::SYMMETRIC,
            DecoderPolicy::FixedList,
            FidelityMode::RecoveredTruncated,
        )
        .expect("symmetric asymmetry is valid")
    }

    pub fn with_alpha(mut self, alpha: Asymmetry) -> Result<Self> {
        alpha.validate()?;
        self.alpha = alpha;
        Ok(self)
    }

    pub fn code_name(&self) -> CodeName {
        self.name
    }

    pub fn code(&self) -> &CodeSpace {
        &self.code
    }

    pub fn model(&self) -> ChannelModel {
        self.model
    }

    pub fn alpha(&self) -> Asymmetry {
        self.alpha
    }

    pub fn decoder(&self) -> DecoderPolicy {
        self.decoder
    }

    pub fn mode(&self) -> FidelityMode {
        self.mode
    }

    pub fn channel(&self, mu: f64, p: f64) -> Result<KrausSet> {
        let n = self.code.n_qubits();
        let spec = match self.model {
            ChannelModel::Dephasing => dephasing_channel(n, p, mu)?,
            ChannelModel::Depolarizing => depolarizing_channel(n, p, mu, self.alpha)?,
        };
        Ok(enumerate_kraus(&spec))
    }

    pub fn evaluate(&self, mu: f64, p: f64) -> Result<PointEvaluation> {
        let kraus = self.channel(mu, p)?;
        let selection = select_correctable(&self.code, &kraus, self.decoder)?;
        let recovery = build_recovery(&self.code, &selection, &kraus)?;
        let fidelity = metrics::entanglement_fidelity_recovered(&self.code, &kraus, &recovery, self.mode)?;
        let entropy = metrics::code_entropy(&self.code, &selection, &kraus)?;
        Ok(PointEvaluation {
            kraus,
            selection,
            recovery,
            fidelity,
            entropy,
        })
    }

    pub fn fidelity(&self, mu: f64, p: f64) -> Result<f64> {
        let kraus = self.channel(mu, p)?;
        let selection = select_correctable(&self.code, &kraus, self.decoder)?;
        let recovery = build_recovery(&self.code, &selection, &kraus)?;
        metrics::entanglement_fidelity_recovered(&self.code, &kraus, &recovery, self.mode)
    }

    pub fn entropy(&self, mu: f64, p: f64) -> Result<f64> {
        let kraus = self.channel(mu, p)?;
        let selection = select_correctable(&self.code, &kraus, self.decoder)?;
        metrics::code_entropy(&self.code, &selection, &kraus)
    }

    /// Single-point summary with selection and recovery details.
    pub fn report(&self, mu: f64, p: f64) -> Result<PointReport> {
        let e = self.evaluate(mu, p)?;
        let g = e.selection.gamma().matrix();
        let gamma = (0..g.nrows())
            .map(|i| (0..g.ncols()).map(|j| complex_pair(g[(i, j)])).collect())
            .collect();
        Ok(PointReport {
            code: self.name.as_str().to_string(),
            model: self.model.name().to_string(),
            mu,
            p,
            alpha: self.alpha.as_array(),
            fidelity: e.fidelity,
            entropy: e.entropy,
            gamma_rank: e.selection.gamma().rank(),
            decoder: self.decoder.as_str().to_string(),
            mode: self.mode.as_str().to_string(),
            selection: e
                .selection
                .indices()
                .iter()
                .map(|&i| e.kraus.get(i).word.to_string())
                .collect(),
            selection_indices: e.selection.indices().to_vec(),
            gamma,
            kl_violations: e.selection.kl_violations().to_vec(),
            recovery_operators: e.recovery.operators().len(),
            recovery_refills: e.recovery.operators().iter().filter(|o| o.is_refill()).count(),
            dropped: e.recovery.dropped().to_vec(),
            complement_dim: e.recovery.complement().len(),
        })
    }
}

fn complex_pair(c: C64) -> [f64; 2] {
    [c.re, c.im]
}

#[derive(Clone, Debug, Serialize)]
pub struct PointReport {
    pub code: String,
    pub model: String,
    pub mu: f64,
    pub p: f64,
    pub alpha: [f64; 3],
    pub fidelity: f64,
    pub entropy: f64,
    pub gamma_rank: usize,
    pub decoder: String,
    pub mode: String,
    pub selection: Vec<String>,
    pub selection_indices: Vec<usize>,
    /// Rows of `[re, im]` pairs.
    pub gamma: Vec<Vec<[f64; 2]>>,
    pub kl_violations: Vec<(usize, usize)>,
    pub recovery_operators: usize,
    pub recovery_refills: usize,
    pub dropped: Vec<usize>,
    pub complement_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub mu: f64,
    pub p: f64,
    pub alpha: [f64; 3],
    pub fidelity: f64,
    pub failure_probability: f64,
    pub entropy: f64,
    pub gamma_rank: usize,
}

/// Rows ordered by `(p, μ)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepTable {
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("mu,p,alpha_x,alpha_y,alpha_z,fidelity,failure_probability,entropy,gamma_rank\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                fmt_f64(r.mu),
                fmt_f64(r.p),
                fmt_f64(r.alpha[0]),
                fmt_f64(r.alpha[1]),
                fmt_f64(r.alpha[2]),
                fmt_f64(r.fidelity),
                fmt_f64(r.failure_probability),
                fmt_f64(r.entropy),
                r.gamma_rank
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.rows).expect("rows serialize") + "\n"
    }
}

pub fn sweep(eval: &Evaluator, mu_grid: &[f64], p_grid: &[f64]) -> Result<SweepTable> {
    if mu_grid.is_empty() || p_grid.is_empty() {
        return Err(Error::argument("sweep grids must be nonempty"));
    }
    let points: Vec<(f64, f64)> = p_grid
        .iter()
        .flat_map(|&p| mu_grid.iter().map(move |&mu| (mu, p)))
        .collect();
    let rows = points
        .par_iter()
        .map(|&(mu, p)| {
            let e = eval.evaluate(mu, p)?;
            Ok(SweepRow {
                mu,
                p,
                alpha: eval.alpha.as_array(),
                fidelity: e.fidelity,
                failure_probability: metrics::failure_probability(e.fidelity),
                entropy: e.entropy,
                gamma_rank: e.selection.gamma().rank(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable { rows })
}

/// Roots of `f` on `[lo, hi]`, ascending.
///
/// A 101-point scan marks points with `|f| ≤ 1e-12` as zeros. Each strict
/// sign change between neighbouring nonzero samples is bisected to a bracket
/// narrower than `1e-9`; an isolated zero sample is itself a root, while runs
/// of zeros are skipped.
pub fn find_roots<F>(f: F, lo: f64, hi: f64) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<f64>,
{
    let xs = Grid::new(lo, hi, SCAN_POINTS)?.values();
    let ys = xs.iter().map(|&x| f(x)).collect::<Result<Vec<f64>>>()?;
    if let Some(bad) = ys.iter().find(|y| !y.is_finite()) {
        return Err(Error::Numeric(format!("root scan hit a non-finite value {bad}")));
    }
    let is_zero = |y: f64| y.abs() <= ZERO_TOL;
    let mut roots = Vec::new();
    let mut i = 0;
    while i < xs.len() {
        if is_zero(ys[i]) {
            let start = i;
            while i + 1 < xs.len() && is_zero(ys[i + 1]) {
                i += 1;
            }
            if i == start {
                roots.push(xs[i]);
            }
        } else if i + 1 < xs.len() && !is_zero(ys[i + 1]) && ys[i].signum() != ys[i + 1].signum() {
            roots.push(bisect(&f, xs[i], xs[i + 1], ys[i])?);
        }
        i += 1;
    }
    Ok(roots)
}

fn bisect<F>(f: &F, mut a: f64, mut b: f64, fa: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut sa = fa.signum();
    for _ in 0..MAX_BISECTIONS {
        if b - a < BISECTION_TOL {
            break;
        }
        let m = 0.5 * (a + b);
        let fm = f(m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == sa {
            a = m;
            sa = fm.signum();
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdPoint {
    pub p: f64,
    pub mu_bar: Option<f64>,
}

/// Smallest `μ̄` with `1 − F(μ̄, p) = p`, or `None` when there is none (and
/// always at `p = 0`).
pub fn threshold_point<F>(fidelity_fn: &F, p: f64) -> Result<Option<f64>>
where
    F: Fn(f64, f64) -> Result<f64>,
{
    if p == 0.0 {
        return Ok(None);
    }
    let roots = find_roots(|mu| Ok(1.0 - fidelity_fn(mu, p)? - p), 0.0, 1.0)?;
    Ok(roots.first().copied())
}

pub fn threshold_curve<F>(fidelity_fn: F, p_grid: &[f64]) -> Result<Vec<ThresholdPoint>>
where
    F: Fn(f64, f64) -> Result<f64> + Sync,
{
    p_grid
        .par_iter()
        .map(|&p| {
            Ok(ThresholdPoint {
                p,
                mu_bar: threshold_point(&fidelity_fn, p)?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossoverPoint {
    pub p: f64,
    pub mu_bar: Vec<f64>,
}

/// Every `μ̄` with `F_1(μ̄, p) = F_2(μ̄, p)`, ascending.
pub fn crossover_curve<F, G>(f1: F, f2: G, p_grid: &[f64]) -> Result<Vec<CrossoverPoint>>
where
    F: Fn(f64, f64) -> Result<f64> + Sync,
    G: Fn(f64, f64) -> Result<f64> + Sync,
{
    p_grid
        .par_iter()
        .map(|&p| {
            let mu_bar = find_roots(|mu| Ok(f1(mu, p)? - f2(mu, p)?), 0.0, 1.0)?;
            Ok(CrossoverPoint { p, mu_bar })
        })
        .collect()
}

/// Weights of the asymmetric noise used for the entropy comparison.
pub fn reference_asymmetry() -> Asymmetry {
    Asymmetry {
        x: 0.25,
        y: 0.25,
        z: 0.5,
    }
}

/// `Δ_S(p) = S_sym − S_asym` for the five-qubit code at `μ = 0`.
pub fn delta_entropy(p_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    if p_grid.is_empty() {
        return Err(Error::argument("p grid must be nonempty"));
    }
    let sym = Evaluator::preset(CodeName::FiveQubit);
    let asym = Evaluator::preset(CodeName::FiveQubit).with_alpha(reference_asymmetry())?;
    p_grid
        .par_iter()
        .map(|&p| Ok((p, sym.entropy(0.0, p)? - asym.entropy(0.0, p)?)))
        .collect()
}

/// A figure's dataset: comment lines followed by CSV.
#[derive(Clone, Debug, PartialEq)]
pub struct Figure {
    pub number: u32,
    pub comments: Vec<String>,
    pub header: String,
    pub rows: Vec<String>,
}

impl Figure {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "# {c}");
        }
        let _ = writeln!(out, "{}", self.header);
        for r in &self.rows {
            let _ = writeln!(out, "{r}");
        }
        out
    }
}

pub const FIGURE_POINTS: usize = 201;

fn axis(start: f64, stop: f64) -> Vec<f64> {
    Grid::new(start, stop, FIGURE_POINTS).expect("figure axis").values()
}

fn curve_rows(series: &[(String, Vec<(f64, f64)>)]) -> Vec<String> {
    series
        .iter()
        .flat_map(|(label, pts)| {
            pts.iter()
                .map(move |(x, y)| format!("{},{label},{}", fmt_f64(*x), fmt_f64(*y)))
        })
        .collect()
}

fn along_mu<F>(eval: &Evaluator, p: f64, mus: &[f64], value: F) -> Result<Vec<(f64, f64)>>
where
    F: Fn(&Evaluator, f64, f64) -> Result<f64> + Sync,
{
    mus.par_iter().map(|&mu| Ok((mu, value(eval, mu, p)?))).collect()
}

fn along_p<F>(eval: &Evaluator, mu: f64, ps: &[f64], value: F) -> Result<Vec<(f64, f64)>>
where
    F: Fn(&Evaluator, f64, f64) -> Result<f64> + Sync,
{
    ps.par_iter().map(|&p| Ok((p, value(eval, mu, p)?))).collect()
}

fn label(x: f64) -> String {
    format!("{x}")
}

/// Dataset behind figure `number` (1 to 10).
pub fn figure(number: u32) -> Result<Figure> {
    let fid = |e: &Evaluator, mu: f64, p: f64| e.fidelity(mu, p);
    let ent = |e: &Evaluator, mu: f64, p: f64| e.entropy(mu, p);
    let common = "truncated entanglement fidelity, fixed correctable lists".to_string();
    let (comments, header, rows) = match number {
        1 => {
            let ps = axis(0.0, 0.5);
            let mut rows = Vec::new();
            for name in [CodeName::Conc6, CodeName::Dfs2, CodeName::Rc3] {
                let e = Evaluator::preset(name);
                for t in threshold_curve(|mu, p| e.fidelity(mu, p), &ps)? {
                    rows.push(format!("{},{name},{}", fmt_f64(t.p), fmt_opt(t.mu_bar)));
                }
            }
            (
                vec![
                    "figure 1: threshold curves 1 - F(mu_bar, p) = p for conc6, dfs2, rc3".into(),
                    "p in [0, 0.5], 201 points; smallest root in mu on [0, 1]; none when no root".into(),
                    common,
                ],
                "p,code,mu_bar".to_string(),
                rows,
            )
        }
        2 => {
            let ps = axis(0.0, 0.5);
            let conc = Evaluator::preset(CodeName::Conc6);
            let mut rows = Vec::new();
            for other in [CodeName::Dfs2, CodeName::Rc3] {
                let e = Evaluator::preset(other);
                let pair = format!("conc6-{other}");
                for c in crossover_curve(|mu, p| conc.fidelity(mu, p), |mu, p| e.fidelity(mu, p), &ps)? {
                    if c.mu_bar.is_empty() {
                        rows.push(format!("{},{pair},none", fmt_f64(c.p)));
                    }
                    for m in c.mu_bar {
                        rows.push(format!("{},{pair},{}", fmt_f64(c.p), fmt_f64(m)));
                    }
                }
            }
            (
                vec![
                    "figure 2: crossover curves F_conc6(mu_bar, p) = F_other(mu_bar, p)".into(),
                    "p in [0, 0.5], 201 points; every root in mu on [0, 1], ascending; none when no root".into(),
                    common,
                ],
                "p,pair,mu_bar".to_string(),
                rows,
            )
        }
        3 => {
            let mus = axis(0.0, 1.0);
            let mut series = Vec::new();
            for name in [CodeName::Conc6, CodeName::Dfs2, CodeName::Rc3] {
                series.push((name.to_string(), along_mu(&Evaluator::preset(name), 0.01, &mus, fid)?));
            }
            (
                vec![
                    "figure 3: entanglement fidelity vs mu at p = 0.01".into(),
                    "mu in [0, 1], 201 points".into(),
                    common,
                ],
                "mu,code,fidelity".to_string(),
                curve_rows(&series),
            )
        }
        4 | 6 | 7 => {
            let (name, ps) = match number {
                4 => (CodeName::Rc3, vec![0.02, 0.025, 0.03]),
                6 => (CodeName::Dfs2, vec![0.1, 0.05, 0.01]),
                _ => (CodeName::Conc6, vec![0.1, 0.05, 0.01]),
            };
            let mus = axis(0.0, 1.0);
            let e = Evaluator::preset(name);
            let mut series = Vec::new();
            for &p in &ps {
                series.push((label(p), along_mu(&e, p, &mus, ent)?));
            }
            let ps_text: Vec<String> = ps.iter().map(|p| label(*p)).collect();
            (
                vec![
                    format!("figure {number}: {name} code entropy vs mu"),
                    format!("mu in [0, 1], 201 points; p in {{{}}}", ps_text.join(", ")),
                    "code entropy S(Gamma), log base 2, fixed correctable lists".into(),
                ],
                "mu,p,entropy".to_string(),
                curve_rows(&series),
            )
        }
        5 => {
            let ps = axis(0.0, 0.5);
            let e = Evaluator::preset(CodeName::Dfs2);
            let mus = [1.0, 0.9, 0.75, 0.5, 0.0];
            let mut series = Vec::new();
            for &mu in &mus {
                series.push((label(mu), along_p(&e, mu, &ps, ent)?));
            }
            (
                vec![
                    "figure 5: dfs2 code entropy vs p".into(),
                    "p in [0, 0.5], 201 points; mu in {1, 0.9, 0.75, 0.5, 0}".into(),
                    "code entropy S(Gamma), log base 2, fixed correctable lists".into(),
                ],
                "p,mu,entropy".to_string(),
                curve_rows(&series),
            )
        }
        8 => {
            let ps = axis(0.0, 0.2);
            let e = Evaluator::preset(CodeName::FiveQubit);
            let rows = threshold_curve(|mu, p| e.fidelity(mu, p), &ps)?
                .iter()
                .map(|t| format!("{},{}", fmt_f64(t.p), fmt_opt(t.mu_bar)))
                .collect();
            (
                vec![
                    "figure 8: five_qubit threshold curve 1 - F(mu_bar, p) = p".into(),
                    "p in [0, 0.2], 201 points; symmetric depolarizing noise; smallest root in mu on [0, 1]".into(),
                    common,
                ],
                "p,mu_bar".to_string(),
                rows,
            )
        }
        9 => {
            let mus = axis(0.0, 0.33);
            let e = Evaluator::preset(CodeName::FiveQubit);
            let mut series = Vec::new();
            for p in [0.045, 0.041, 0.0375] {
                series.push((label(p), along_mu(&e, p, &mus, fid)?));
            }
            (
                vec![
                    "figure 9: five_qubit entanglement fidelity vs mu".into(),
                    "mu in [0, 0.33], 201 points; p in {0.045, 0.041, 0.0375}; symmetric depolarizing noise".into(),
                    common,
                ],
                "mu,p,fidelity".to_string(),
                curve_rows(&series),
            )
        }
        10 => {
            let ps = axis(0.0, 0.5);
            let rows = delta_entropy(&ps)?
                .iter()
                .map(|(p, d)| format!("{},{}", fmt_f64(*p), fmt_f64(*d)))
                .collect();
            (
                vec![
                    "figure 10: five_qubit entropy difference S_sym - S_asym at mu = 0".into(),
                    "p in [0, 0.5], 201 points; asymmetric weights (1/4, 1/4, 1/2)".into(),
                ],
                "p,delta_entropy".to_string(),
                rows,
            )
        }
        _ => return Err(Error::argument(format!("no figure {number} (expected 1 to 10)"))),
    };
    Ok(Figure {
        number,
        comments,
        header,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms;

    #[test]
    fn roots_of_simple_functions() {
        let r = find_roots(|x| Ok(x - 0.3), 0.0, 1.0).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0] - 0.3).abs() < 1e-9);
        let r = find_roots(|x| Ok((x - 0.25) * (x - 0.755)), 0.0, 1.0).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0] - 0.25).abs() < 1e-9 && (r[1] - 0.755).abs() < 1e-9);
        assert!(find_roots(|_| Ok(0.0), 0.0, 1.0).unwrap().is_empty());
        assert_eq!(find_roots(|x| Ok(1.0 - x), 0.0, 1.0).unwrap(), vec![1.0]);
        assert!(find_roots(|x| Ok(x * x + 1.0), 0.0, 1.0).unwrap().is_empty());
    }

    #[test]
    fn dfs_threshold_matches_linear_root() {
        let f = |mu: f64, p: f64| closed_forms::f_dfs2(mu, p);
        for p in [0.05, 0.1, 0.2, 0.4] {
            let mu = threshold_point(&f, p).unwrap().unwrap();
            let analytic = (1.0 - 2.0 * p) / (2.0 - 2.0 * p);
            assert!((mu - analytic).abs() < 1e-8);
            assert!((1.0 - f(mu, p).unwrap() - p).abs() < 1e-8);
        }
        assert_eq!(threshold_point(&f, 0.0).unwrap(), None);
    }

    #[test]
    fn sweep_orders_rows_by_p_then_mu() {
        let e = Evaluator::preset(CodeName::Rc3);
        let t = sweep(&e, &[0.0, 0.5, 1.0], &[0.2, 0.0]).unwrap();
        let keys: Vec<(f64, f64)> = t.rows.iter().map(|r| (r.p, r.mu)).collect();
        assert_eq!(
            keys,
            vec![(0.2, 0.0), (0.2, 0.5), (0.2, 1.0), (0.0, 0.0), (0.0, 0.5), (0.0, 1.0)]
        );
        assert!(t.rows[3..].iter().all(|r| r.fidelity == 1.0));
        assert!(sweep(&e, &[], &[0.1]).is_err());
        let csv = t.to_csv();
        assert_eq!(csv.lines().count(), 7);
        assert!(csv
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("0.0000000000000000e0,2.0000000000000001e-1,"));
    }

    #[test]
    fn delta_entropy_positive_and_zero_at_origin() {
        let d = delta_entropy(&[0.0, 0.1, 0.3]).unwrap();
        assert_eq!(d[0].1, 0.0);
        assert!(d[1].1 > 0.0 && d[2].1 > 0.0);
    }

    #[test]
    fn unknown_figure() {
        assert!(matches!(figure(11), Err(Error::Argument(_))));
        assert!(matches!(figure(0), Err(Error::Argument(_))));
    }

    #[test]
    fn point_report_serializes() {
        let r = Evaluator::preset(CodeName::Dfs2).report(0.3, 0.1).unwrap();
        assert_eq!(r.gamma_rank, 1);
        assert_eq!(r.complement_dim, 2);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"decoder\":\"paper\""));
    }
}
