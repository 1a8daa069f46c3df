//! Exact phased Pauli strings and their realization on dense vectors and
//! matrices.
//!
//! Qubit 1 is the leftmost tensor factor and the most significant bit of a
//! computational-basis label, so `|01⟩` is basis index 1 and `Z⊗I` acts with
//! a sign on the high bit.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::{Error, Result, C64};

/// Largest register the dense realizations are allowed to build.
pub const MAX_QUBITS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub const ALL: [PauliLetter; 4] = [PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

    fn xz(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (false, true),
        }
    }

    fn from_xz(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (false, true) => PauliLetter::Z,
        }
    }

    /// Single-qubit product `self · other = phase · letter`.
    pub fn product(self, other: PauliLetter) -> (Phase, PauliLetter) {
        use PauliLetter::*;
        let phase = match (self, other) {
            (X, Y) | (Y, Z) | (Z, X) => Phase::I,
            (Y, X) | (Z, Y) | (X, Z) => Phase::MINUS_I,
            _ => Phase::ONE,
        };
        let (ax, az) = self.xz();
        let (bx, bz) = other.xz();
        (phase, PauliLetter::from_xz(ax ^ bx, az ^ bz))
    }

    pub fn to_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(PauliLetter::I),
            'X' => Some(PauliLetter::X),
            'Y' => Some(PauliLetter::Y),
            'Z' => Some(PauliLetter::Z),
            _ => None,
        }
    }

    /// The 2×2 matrix of the letter.
    pub fn matrix(self) -> DMatrix<C64> {
        let o = C64::new(0.0, 0.0);
        let l = C64::new(1.0, 0.0);
        let i = C64::new(0.0, 1.0);
        let entries = match self {
            PauliLetter::I => [l, o, o, l],
            PauliLetter::X => [o, l, l, o],
            PauliLetter::Y => [o, -i, i, o],
            PauliLetter::Z => [l, o, o, -l],
        };
        DMatrix::from_row_slice(2, 2, &entries)
    }
}

/// A fourth root of unity `i^k`, stored exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_exponent(k: u32) -> Self {
        Phase((k % 4) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn conj(self) -> Self {
        Phase((4 - self.0) % 4)
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn to_complex(self) -> C64 {
        match self.0 {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        }
    }
}

impl Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

/// Phased n-qubit Pauli word `phase · P_1 ⊗ … ⊗ P_n`.
///
/// Letters are kept as x/z bit masks where qubit `q` (1-based, leftmost
/// factor first) sits at bit `n - q`, matching the basis-label convention.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x: u64,
    z: u64,
    phase: Phase,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_QUBITS).contains(&n), "qubit count {n} out of range");
        PauliString {
            n,
            x: 0,
            z: 0,
            phase: Phase::ONE,
        }
    }

    pub fn from_letters(letters: &[PauliLetter]) -> Result<Self> {
        if letters.is_empty() || letters.len() > MAX_QUBITS {
            return Err(Error::argument(format!(
                "Pauli string needs 1..={MAX_QUBITS} letters, got {}",
                letters.len()
            )));
        }
        let n = letters.len();
        let mut s = PauliString::identity(n);
        for (q, &letter) in letters.iter().enumerate() {
            s.set_letter(q, letter);
        }
        Ok(s)
    }

    /// `letter` on 1-based qubit `qubit`, identity elsewhere.
    pub fn single(n: usize, qubit: usize, letter: PauliLetter) -> Self {
        assert!((1..=n).contains(&qubit), "qubit {qubit} out of range for n = {n}");
        let mut s = PauliString::identity(n);
        s.set_letter(qubit - 1, letter);
        s
    }

    /// Builds from raw masks; bit `n - q` of each mask belongs to qubit `q`.
    pub fn from_masks(n: usize, x: u64, z: u64, phase: Phase) -> Self {
        assert!((1..=MAX_QUBITS).contains(&n));
        let mask = (1u64 << n) - 1;
        PauliString {
            n,
            x: x & mask,
            z: z & mask,
            phase,
        }
    }

    fn set_letter(&mut self, q0: usize, letter: PauliLetter) {
        let bit = 1u64 << (self.n - 1 - q0);
        let (x, z) = letter.xz();
        self.x = if x { self.x | bit } else { self.x & !bit };
        self.z = if z { self.z | bit } else { self.z & !bit };
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn x_mask(&self) -> u64 {
        self.x
    }

    pub fn z_mask(&self) -> u64 {
        self.z
    }

    pub fn with_phase(&self, phase: Phase) -> Self {
        PauliString { phase, ..self.clone() }
    }

    /// Same letters, phase reset to +1.
    pub fn unphased(&self) -> Self {
        self.with_phase(Phase::ONE)
    }

    /// Letter on 1-based qubit `qubit`.
    pub fn letter(&self, qubit: usize) -> PauliLetter {
        let bit = 1u64 << (self.n - qubit);
        PauliLetter::from_xz(self.x & bit != 0, self.z & bit != 0)
    }

    pub fn letters(&self) -> impl Iterator<Item = PauliLetter> + '_ {
        (1..=self.n).map(|q| self.letter(q))
    }

    pub fn weight(&self) -> usize {
        (self.x | self.z).count_ones() as usize
    }

    pub fn is_identity_word(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// Dense index `(x << n) | z` of the letters, ignoring the phase.
    pub fn symplectic_index(&self) -> usize {
        ((self.x << self.n) | self.z) as usize
    }

    pub fn adjoint(&self) -> Self {
        self.with_phase(self.phase.conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase.is_real()
    }

    fn check_len(&self, other: &PauliString) -> Result<()> {
        if self.n != other.n {
            return Err(Error::argument(format!(
                "Pauli strings act on {} and {} qubits",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Phased product `self · other`.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        self.check_len(other)?;
        let (a, b) = (self, other);
        let (ax, ay, az) = (a.x & !a.z, a.x & a.z, !a.x & a.z);
        let (bx, by, bz) = (b.x & !b.z, b.x & b.z, !b.x & b.z);
        // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i
        let plus = (ax & by) | (ay & bz) | (az & bx);
        let minus = (ay & bx) | (az & by) | (ax & bz);
        let k = plus.count_ones() + 3 * minus.count_ones();
        Ok(PauliString {
            n: self.n,
            x: a.x ^ b.x,
            z: a.z ^ b.z,
            phase: a.phase * b.phase * Phase::from_exponent(k),
        })
    }

    /// True iff the two strings commute.
    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        self.check_len(other)?;
        let anti = (self.x & other.z) ^ (self.z & other.x);
        Ok(anti.count_ones().is_multiple_of(2))
    }

    /// Exact action on a state vector: X flips a bit, Z applies `(-1)^bit`,
    /// Y = iXZ.
    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if v.num_qubits() != self.n {
            return Err(Error::argument(format!(
                "{}-qubit Pauli string applied to a {}-qubit state",
                self.n,
                v.num_qubits()
            )));
        }
        let coeff = self.xz_coefficient();
        let amps = v.amplitudes();
        let mut out = DVector::from_element(amps.len(), C64::new(0.0, 0.0));
        for (b, &a) in amps.iter().enumerate() {
            let sign = if (self.z & b as u64).count_ones().is_multiple_of(2) {
                1.0
            } else {
                -1.0
            };
            out[b ^ self.x as usize] = coeff * a * sign;
        }
        Ok(StateVector::from_dvector(out))
    }

    /// Scalar c with `self = c · X^x Z^z`.
    fn xz_coefficient(&self) -> C64 {
        let y_count = (self.x & self.z).count_ones();
        (self.phase * Phase::from_exponent(y_count)).to_complex()
    }

    /// Matrix element `⟨b ⊕ x| self |b⟩`; the only nonzero entry in column `b`.
    pub fn column_entry(&self, b: usize) -> (usize, C64) {
        let sign = if (self.z & b as u64).count_ones().is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        (b ^ self.x as usize, self.xz_coefficient() * sign)
    }

    /// Dense 2^n × 2^n matrix built as a Kronecker product of the letters.
    pub fn to_dense(&self) -> DenseOperator {
        let mut m = DMatrix::from_element(1, 1, self.phase.to_complex());
        for letter in self.letters() {
            m = m.kronecker(&letter.matrix());
        }
        DenseOperator(m)
    }

    pub fn trace(&self) -> C64 {
        if self.is_identity_word() {
            self.phase.to_complex() * (1u64 << self.n) as f64
        } else {
            C64::new(0.0, 0.0)
        }
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.phase {
            Phase::ONE => "+",
            Phase::I => "+i",
            Phase::MINUS_ONE => "-",
            _ => "-i",
        };
        f.write_str(prefix)?;
        for letter in self.letters() {
            write!(f, "{}", letter.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Parses `±[i]LLLL…`; a missing sign means `+`.
    fn from_str(s: &str) -> Result<Self> {
        let mut rest = s.trim();
        let mut phase = Phase::ONE;
        if let Some(r) = rest.strip_prefix('-') {
            phase = Phase::MINUS_ONE;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        if let Some(r) = rest.strip_prefix('i') {
            phase = phase * Phase::I;
            rest = r;
        }
        let letters = rest
            .chars()
            .map(|c| {
                PauliLetter::from_char(c).ok_or_else(|| Error::argument(format!("bad Pauli letter {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PauliString::from_letters(&letters)?.with_phase(phase))
    }
}

/// Vector of `2^n` complex amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector(DVector<C64>);

impl StateVector {
    pub fn from_amplitudes(amplitudes: Vec<C64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() || len > 1 << MAX_QUBITS {
            return Err(Error::argument(format!("state length {len} is not 2^n with n ≥ 1")));
        }
        Ok(StateVector(DVector::from_vec(amplitudes)))
    }

    pub(crate) fn from_dvector(v: DVector<C64>) -> Self {
        StateVector(v)
    }

    /// Computational basis state `|index⟩` on `n` qubits.
    pub fn basis(n: usize, index: usize) -> Self {
        let mut v = DVector::from_element(1 << n, C64::new(0.0, 0.0));
        v[index] = C64::new(1.0, 0.0);
        StateVector(v)
    }

    /// Product state from a label over `0 1 + -`, e.g. `"+-+"`.
    pub fn product(label: &str) -> Result<Self> {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mut v = DVector::from_element(1, C64::new(1.0, 0.0));
        for c in label.chars() {
            let single = match c {
                '0' => [1.0, 0.0],
                '1' => [0.0, 1.0],
                '+' => [h, h],
                '-' => [h, -h],
                _ => return Err(Error::argument(format!("bad product-state symbol {c:?}"))),
            };
            let s = DVector::from_iterator(2, single.iter().map(|&a| C64::new(a, 0.0)));
            v = v.kronecker(&s);
        }
        StateVector::from_amplitudes(v.iter().copied().collect())
    }

    pub fn num_qubits(&self) -> usize {
        self.0.len().trailing_zeros() as usize
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.0
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> C64 {
        self.0.dotc(&other.0)
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn scale(&self, c: C64) -> StateVector {
        StateVector(&self.0 * c)
    }

    pub fn kron(&self, other: &StateVector) -> StateVector {
        StateVector(self.0.kronecker(&other.0))
    }

    /// Largest absolute difference between amplitudes.
    pub fn max_diff(&self, other: &StateVector) -> f64 {
        (&self.0 - &other.0).iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Dense `2^n × 2^n` complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator(pub DMatrix<C64>);

impl DenseOperator {
    pub fn new(m: DMatrix<C64>) -> Result<Self> {
        if m.nrows() != m.ncols() || m.nrows() < 2 || !m.nrows().is_power_of_two() {
            return Err(Error::argument(format!(
                "operator shape {}x{} is not a square power of two",
                m.nrows(),
                m.ncols()
            )));
        }
        Ok(DenseOperator(m))
    }

    pub fn identity(n: usize) -> Self {
        DenseOperator(DMatrix::identity(1 << n, 1 << n))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if v.dim() != self.dim() {
            return Err(Error::argument("operator and state dimensions differ"));
        }
        Ok(StateVector(&self.0 * v.amplitudes()))
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn max_diff(&self, other: &DenseOperator) -> f64 {
        (&self.0 - &other.0).iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `|a⟩⟨b|`.
    pub fn outer(a: &StateVector, b: &StateVector) -> Self {
        DenseOperator(a.amplitudes() * b.amplitudes().adjoint())
    }
}
