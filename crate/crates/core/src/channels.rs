//! Markov-correlated Pauli memory channels.
//!
//! Errors along an `n`-qubit register form a first-order Markov chain over
//! an alphabet of Pauli letters:
//!
//! ```text
//! p(i_k | i_{k-1}) = (1 - μ) p_{i_k} + μ δ(i_k, i_{k-1})
//! ```
//!
//! Chain step `k` acts on tensor position `n + 1 - k`, so the first symbol of
//! the chain is the rightmost factor of the Kraus word.

use serde::{Deserialize, Serialize};

use crate::pauli::{PauliLetter, PauliString};
use crate::{Error, Result};

const SUM_TOL: f64 = 1e-12;
const MAX_WORDS: usize = 1 << 16;

/// Marginal error probabilities per letter. The first entry is always the
/// identity.
#[derive(Clone, Debug, PartialEq)]
pub struct ErrorAlphabet {
    entries: Vec<(PauliLetter, f64)>,
}

impl ErrorAlphabet {
    pub fn new(entries: Vec<(PauliLetter, f64)>) -> Result<Self> {
        if entries.first().map(|e| e.0) != Some(PauliLetter::I) {
            return Err(Error::argument("alphabet must start with the identity letter"));
        }
        for (i, (letter, prob)) in entries.iter().enumerate() {
            if !(prob.is_finite() && *prob >= 0.0) {
                return Err(Error::argument(format!("probability of {letter:?} is {prob}")));
            }
            if entries[..i].iter().any(|e| e.0 == *letter) {
                return Err(Error::argument(format!("letter {letter:?} repeated in alphabet")));
            }
        }
        let total: f64 = entries.iter().map(|e| e.1).sum();
        if (total - 1.0).abs() > SUM_TOL {
            return Err(Error::argument(format!("alphabet probabilities sum to {total}")));
        }
        Ok(ErrorAlphabet { entries })
    }

    /// `{I: 1-p, Z: p}`.
    pub fn dephasing(p: f64) -> Result<Self> {
        check_error_probability(p)?;
        ErrorAlphabet::new(vec![(PauliLetter::I, 1.0 - p), (PauliLetter::Z, p)])
    }

    /// `{I: 1-p, X: αx p, Y: αy p, Z: αz p}`.
    pub fn depolarizing(p: f64, alpha: Asymmetry) -> Result<Self> {
        check_error_probability(p)?;
        alpha.validate()?;
        ErrorAlphabet::new(vec![
            (PauliLetter::I, 1.0 - p),
            (PauliLetter::X, alpha.x * p),
            (PauliLetter::Y, alpha.y * p),
            (PauliLetter::Z, alpha.z * p),
        ])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(PauliLetter, f64)] {
        &self.entries
    }

    pub fn letter(&self, symbol: usize) -> PauliLetter {
        self.entries[symbol].0
    }

    pub fn marginal(&self, symbol: usize) -> f64 {
        self.entries[symbol].1
    }

    pub fn position(&self, letter: PauliLetter) -> Option<usize> {
        self.entries.iter().position(|e| e.0 == letter)
    }
}

fn check_error_probability(p: f64) -> Result<()> {
    if !(0.0..1.0).contains(&p) {
        return Err(Error::argument(format!("error probability {p} outside [0, 1)")));
    }
    Ok(())
}

/// Relative weights `(αx, αy, αz)` of the three Pauli error types; they lie
/// on the probability simplex.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Asymmetry {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Asymmetry {
    pub const SYMMETRIC: Asymmetry = Asymmetry {
        x: 1.0 / 3.0,
        y: 1.0 / 3.0,
        z: 1.0 / 3.0,
    };

    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let a = Asymmetry { x, y, z };
        a.validate()?;
        Ok(a)
    }

    pub fn validate(&self) -> Result<()> {
        let parts = [self.x, self.y, self.z];
        if parts.iter().any(|v| !v.is_finite() || *v < -SUM_TOL) || (parts.iter().sum::<f64>() - 1.0).abs() > SUM_TOL {
            return Err(Error::argument(format!(
                "asymmetry ({}, {}, {}) is not on the simplex",
                self.x, self.y, self.z
            )));
        }
        Ok(())
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl Default for Asymmetry {
    fn default() -> Self {
        Asymmetry::SYMMETRIC
    }
}

impl From<[f64; 3]> for Asymmetry {
    fn from(a: [f64; 3]) -> Self {
        Asymmetry {
            x: a[0],
            y: a[1],
            z: a[2],
        }
    }
}

impl From<Asymmetry> for [f64; 3] {
    fn from(a: Asymmetry) -> Self {
        a.as_array()
    }
}

/// Correlated noise model on `n_qubits` qubits with memory `μ`.
#[derive(Clone, Debug, PartialEq)]
pub struct MarkovChannelSpec {
    n_qubits: usize,
    alphabet: ErrorAlphabet,
    memory: f64,
}

impl MarkovChannelSpec {
    pub fn new(n_qubits: usize, alphabet: ErrorAlphabet, memory: f64) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::argument("channel needs at least one qubit"));
        }
        if !(0.0..=1.0).contains(&memory) {
            return Err(Error::argument(format!("memory parameter {memory} outside [0, 1]")));
        }
        let words = (alphabet.len() as f64).powi(n_qubits as i32);
        if words > MAX_WORDS as f64 {
            return Err(Error::argument(format!(
                "{} letters on {n_qubits} qubits is too many Kraus words to enumerate",
                alphabet.len()
            )));
        }
        Ok(MarkovChannelSpec {
            n_qubits,
            alphabet,
            memory,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn alphabet(&self) -> &ErrorAlphabet {
        &self.alphabet
    }

    pub fn memory(&self) -> f64 {
        self.memory
    }

    pub fn conditional_prob(&self, next: usize, prev: usize) -> Result<f64> {
        conditional_prob(&self.alphabet, self.memory, next, prev)
    }
}

/// `p(next | prev) = (1 - μ) p_next + μ [next = prev]`.
pub fn conditional_prob(alphabet: &ErrorAlphabet, memory: f64, next: usize, prev: usize) -> Result<f64> {
    if next >= alphabet.len() || prev >= alphabet.len() {
        return Err(Error::argument(format!(
            "symbol ({next}, {prev}) outside an alphabet of {}",
            alphabet.len()
        )));
    }
    if !(0.0..=1.0).contains(&memory) {
        return Err(Error::argument(format!("memory parameter {memory} outside [0, 1]")));
    }
    let stay = if next == prev { memory } else { 0.0 };
    Ok((1.0 - memory) * alphabet.marginal(next) + stay)
}

pub fn dephasing_channel(n: usize, p: f64, memory: f64) -> Result<MarkovChannelSpec> {
    MarkovChannelSpec::new(n, ErrorAlphabet::dephasing(p)?, memory)
}

pub fn depolarizing_channel(n: usize, p: f64, memory: f64, alpha: Asymmetry) -> Result<MarkovChannelSpec> {
    MarkovChannelSpec::new(n, ErrorAlphabet::depolarizing(p, alpha)?, memory)
}

/// A Pauli word with probability `weight`; the Kraus operator is
/// `sqrt(weight) · word`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedKraus {
    pub word: PauliString,
    pub weight: f64,
}

impl WeightedKraus {
    pub fn amplitude(&self) -> f64 {
        self.weight.sqrt()
    }
}

/// Every chain of a [`MarkovChannelSpec`] with its probability.
///
/// Element `k` is the word whose letters, read from qubit 1 to qubit n as
/// alphabet positions, spell `k` in base `alphabet.len()`.
#[derive(Clone, Debug)]
pub struct KrausSet {
    n_qubits: usize,
    letters: Vec<PauliLetter>,
    elements: Vec<WeightedKraus>,
}

impl KrausSet {
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn elements(&self) -> &[WeightedKraus] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, index: usize) -> &WeightedKraus {
        &self.elements[index]
    }

    pub fn weight(&self, index: usize) -> f64 {
        self.elements[index].weight
    }

    pub fn total_weight(&self) -> f64 {
        self.elements.iter().map(|k| k.weight).sum()
    }

    /// Enumeration index of `word` (its phase is ignored).
    pub fn index_of(&self, word: &PauliString) -> Option<usize> {
        if word.num_qubits() != self.n_qubits {
            return None;
        }
        let base = self.letters.len();
        word.letters().try_fold(0usize, |acc, letter| {
            self.letters.iter().position(|&l| l == letter).map(|d| acc * base + d)
        })
    }
}

pub fn enumerate_kraus(spec: &MarkovChannelSpec) -> KrausSet {
    let n = spec.n_qubits;
    let alphabet = &spec.alphabet;
    let base = alphabet.len();
    let count = base.pow(n as u32);
    let letters: Vec<PauliLetter> = alphabet.entries().iter().map(|e| e.0).collect();

    let mut elements = Vec::with_capacity(count);
    let mut digits = vec![0usize; n];
    for index in 0..count {
        // digits[q] is the symbol on qubit q + 1
        let mut rest = index;
        for q in (0..n).rev() {
            digits[q] = rest % base;
            rest /= base;
        }
        // chain step 1 sits on the last qubit
        let mut prev = digits[n - 1];
        let mut weight = alphabet.marginal(prev);
        for q in (0..n - 1).rev() {
            let next = digits[q];
            weight *= (1.0 - spec.memory) * alphabet.marginal(next) + if next == prev { spec.memory } else { 0.0 };
            prev = next;
        }
        let word_letters: Vec<PauliLetter> = digits.iter().map(|&d| letters[d]).collect();
        let word = PauliString::from_letters(&word_letters).expect("qubit count checked by MarkovChannelSpec::new");
        elements.push(WeightedKraus { word, weight });
    }
    KrausSet {
        n_qubits: n,
        letters,
        elements,
    }
}

/// Noise family of a channel description.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChannelModel {
    Dephasing,
    Depolarizing,
}

impl ChannelModel {
    pub fn name(self) -> &'static str {
        match self {
            ChannelModel::Dephasing => "dephasing",
            ChannelModel::Depolarizing => "depolarizing",
        }
    }
}

impl std::str::FromStr for ChannelModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dephasing" => Ok(ChannelModel::Dephasing),
            "depolarizing" => Ok(ChannelModel::Depolarizing),
            _ => Err(Error::argument(format!("unknown channel model {s:?}"))),
        }
    }
}

/// Serializable channel description `{model, n, p, mu, alpha}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChannelConfig {
    pub model: ChannelModel,
    pub n: usize,
    pub p: f64,
    pub mu: f64,
    #[serde(default)]
    pub alpha: Asymmetry,
}

impl ChannelConfig {
    pub fn to_spec(&self) -> Result<MarkovChannelSpec> {
        match self.model {
            ChannelModel::Dephasing => dephasing_channel(self.n, self.p, self.mu),
            ChannelModel::Depolarizing => depolarizing_channel(self.n, self.p, self.mu, self.alpha),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn conditional_probability_examples() {
        let a = ErrorAlphabet::dephasing(0.2).unwrap();
        let v = conditional_prob(&a, 0.3, 1, 1).unwrap();
        assert!((v - 0.44).abs() < 1e-15);
        for (next, prev) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let memoryless = conditional_prob(&a, 0.0, next, prev).unwrap();
            assert_eq!(memoryless, a.marginal(next));
            let perfect = conditional_prob(&a, 1.0, next, prev).unwrap();
            assert_eq!(perfect, if next == prev { 1.0 } else { 0.0 });
        }
        assert!(matches!(conditional_prob(&a, 0.3, 2, 0), Err(Error::Argument(_))));
    }

    #[test]
    fn conditional_rows_sum_to_one() {
        let a = ErrorAlphabet::depolarizing(0.3, Asymmetry::new(0.25, 0.25, 0.5).unwrap()).unwrap();
        for mu in [0.0, 0.4, 1.0] {
            for prev in 0..4 {
                let s: f64 = (0..4).map(|next| conditional_prob(&a, mu, next, prev).unwrap()).sum();
                assert!((s - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn two_qubit_dephasing_weights_follow_position_convention() {
        let (p, mu) = (0.13, 0.37);
        let ks = enumerate_kraus(&dephasing_channel(2, p, mu).unwrap());
        let p0 = 1.0 - p;
        let p00 = (1.0 - mu) * (1.0 - p) + mu;
        let p01 = (1.0 - mu) * (1.0 - p);
        let p10 = (1.0 - mu) * p;
        let p11 = (1.0 - mu) * p + mu;
        let expect = [("II", p00 * p0), ("ZI", p10 * p0), ("IZ", p01 * p), ("ZZ", p11 * p)];
        for (w, value) in expect {
            let idx = ks.index_of(&word(w)).unwrap();
            assert!((ks.weight(idx) - value).abs() < 1e-15, "{w}");
        }
    }

    #[test]
    fn memoryless_three_qubit_product() {
        let ks = enumerate_kraus(&dephasing_channel(3, 0.1, 0.0).unwrap());
        let idx = ks.index_of(&word("ZZZ")).unwrap();
        assert!((ks.weight(idx) - 0.001).abs() < 1e-15);
    }

    #[test]
    fn alphabets() {
        let sym = ErrorAlphabet::depolarizing(0.3, Asymmetry::SYMMETRIC).unwrap();
        let m: Vec<f64> = sym.entries().iter().map(|e| e.1).collect();
        for (a, b) in m.iter().zip([0.7, 0.1, 0.1, 0.1]) {
            assert!((a - b).abs() < 1e-15);
        }
        let asym = ErrorAlphabet::depolarizing(0.2, Asymmetry::new(0.25, 0.25, 0.5).unwrap()).unwrap();
        let m: Vec<f64> = asym.entries().iter().map(|e| e.1).collect();
        for (a, b) in m.iter().zip([0.8, 0.05, 0.05, 0.1]) {
            assert!((a - b).abs() < 1e-15);
        }
        assert!(Asymmetry::new(0.5, 0.5, 0.5).is_err());
        assert!(ErrorAlphabet::dephasing(1.0).is_err());
    }

    #[test]
    fn zero_noise_has_single_identity_word() {
        let ks = enumerate_kraus(&depolarizing_channel(2, 0.0, 0.4, Asymmetry::SYMMETRIC).unwrap());
        let nonzero: Vec<_> = ks.elements().iter().filter(|k| k.weight > 0.0).collect();
        assert_eq!(nonzero.len(), 1);
        assert!(nonzero[0].word.is_identity_word());
        assert_eq!(nonzero[0].weight, 1.0);
    }

    #[test]
    fn enumeration_order_reads_word_as_number() {
        let ks = enumerate_kraus(&dephasing_channel(3, 0.1, 0.2).unwrap());
        let words: Vec<String> = ks.elements().iter().map(|k| k.word.to_string()).collect();
        assert_eq!(words[0], "+III");
        assert_eq!(words[1], "+IIZ");
        assert_eq!(words[4], "+ZII");
        assert_eq!(words[7], "+ZZZ");
        for (i, k) in ks.elements().iter().enumerate() {
            assert_eq!(ks.index_of(&k.word), Some(i));
        }
        assert_eq!(ks.index_of(&word("XII")), None);
    }

    #[test]
    fn channel_config_json() {
        let json = r#"{"model":"depolarizing","n":5,"p":0.1,"mu":0.2,"alpha":[0.25,0.25,0.5]}"#;
        let cfg: ChannelConfig = serde_json::from_str(json).unwrap();
        assert_eq!(
            cfg.alpha,
            Asymmetry {
                x: 0.25,
                y: 0.25,
                z: 0.5
            }
        );
        let spec = cfg.to_spec().unwrap();
        assert_eq!(spec.n_qubits(), 5);
        let back = serde_json::to_string(&cfg).unwrap();
        assert_eq!(back, json);

        let cfg: ChannelConfig = serde_json::from_str(r#"{"model":"dephasing","n":3,"p":0.1,"mu":0.0}"#).unwrap();
        assert_eq!(cfg.alpha, Asymmetry::SYMMETRIC);
    }
}
