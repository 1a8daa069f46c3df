//! The four one-logical-qubit codes and the concatenation construction.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use nalgebra::DMatrix;

use crate::channels::ChannelModel;
use crate::pauli::{DenseOperator, PauliString, StateVector};
use crate::qec::RestrictedMatrix;
use crate::{Error, Result, C64};

const ORTHONORMAL_TOL: f64 = 1e-12;
const TABLE_MAX_QUBITS: usize = 8;

/// Two orthonormal codewords `|0_L⟩, |1_L⟩` on `n` qubits.
#[derive(Clone)]
pub struct CodeSpace {
    label: String,
    codewords: [StateVector; 2],
    table: OnceLock<Arc<Vec<RestrictedMatrix>>>,
}

impl fmt::Debug for CodeSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CodeSpace")
            .field("label", &self.label)
            .field("n_qubits", &self.n_qubits())
            .finish()
    }
}

impl CodeSpace {
    /// Validates orthonormality and fixes each codeword's global phase so its
    /// first largest-magnitude amplitude is real and positive.
    pub fn new(label: impl Into<String>, zero: StateVector, one: StateVector) -> Result<Self> {
        if zero.dim() != one.dim() {
            return Err(Error::argument(format!(
                "codeword dimensions differ: {} vs {}",
                zero.dim(),
                one.dim()
            )));
        }
        let zero = fix_global_phase(&zero);
        let one = fix_global_phase(&one);
        for (name, v) in [("|0_L>", &zero), ("|1_L>", &one)] {
            if (v.norm() - 1.0).abs() > ORTHONORMAL_TOL {
                return Err(Error::precondition(format!("{name} has norm {}", v.norm())));
            }
        }
        let overlap = zero.inner(&one).norm();
        if overlap > ORTHONORMAL_TOL {
            return Err(Error::precondition(format!("codewords overlap by {overlap}")));
        }
        Ok(CodeSpace {
            label: label.into(),
            codewords: [zero, one],
            table: OnceLock::new(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn n_qubits(&self) -> usize {
        self.codewords[0].num_qubits()
    }

    pub fn dim(&self) -> usize {
        self.codewords[0].dim()
    }

    pub fn codeword(&self, i: usize) -> &StateVector {
        &self.codewords[i]
    }

    pub fn codewords(&self) -> &[StateVector; 2] {
        &self.codewords
    }

    pub fn projector(&self) -> DenseOperator {
        let p0 = DenseOperator::outer(&self.codewords[0], &self.codewords[0]);
        let p1 = DenseOperator::outer(&self.codewords[1], &self.codewords[1]);
        DenseOperator(p0.0 + p1.0)
    }

    /// `⟨i_L|word|j_L⟩` for every `i, j`.
    pub fn restrict_word(&self, word: &PauliString) -> Result<RestrictedMatrix> {
        if word.num_qubits() != self.n_qubits() {
            return Err(Error::argument(format!(
                "{}-qubit word on a {}-qubit code",
                word.num_qubits(),
                self.n_qubits()
            )));
        }
        if self.n_qubits() > TABLE_MAX_QUBITS {
            return self.restrict_word_direct(word);
        }
        let table = self.table.get_or_init(|| Arc::new(self.build_table()));
        Ok(table[word.symplectic_index()].scale(word.phase().to_complex()))
    }

    /// `⟨i_L|op|j_L⟩` for a dense operator.
    pub fn restrict_operator(&self, op: &DenseOperator) -> Result<RestrictedMatrix> {
        if op.dim() != self.dim() {
            return Err(Error::argument(format!(
                "operator dimension {} vs code dimension {}",
                op.dim(),
                self.dim()
            )));
        }
        let images = [op.apply(&self.codewords[0])?, op.apply(&self.codewords[1])?];
        Ok(self.sandwich(&images))
    }

    fn restrict_word_direct(&self, word: &PauliString) -> Result<RestrictedMatrix> {
        let images = [word.apply(&self.codewords[0])?, word.apply(&self.codewords[1])?];
        Ok(self.sandwich(&images))
    }

    fn sandwich(&self, images: &[StateVector; 2]) -> RestrictedMatrix {
        let mut m = [[C64::new(0.0, 0.0); 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = self.codewords[i].inner(&images[j]);
            }
        }
        RestrictedMatrix::new(m)
    }

    fn build_table(&self) -> Vec<RestrictedMatrix> {
        let n = self.n_qubits();
        let size = 1usize << (2 * n);
        let zmask = (1u64 << n) - 1;
        (0..size)
            .map(|idx| {
                if idx == 0 {
                    // codewords are orthonormal by construction
                    return RestrictedMatrix::identity();
                }
                let idx = idx as u64;
                let word = PauliString::from_masks(n, idx >> n, idx & zmask, crate::pauli::Phase::ONE);
                self.restrict_word_direct(&word).expect("table word matches code size")
            })
            .collect()
    }
}

fn fix_global_phase(v: &StateVector) -> StateVector {
    let amps = v.amplitudes();
    let mut best = 0;
    let mut best_mag = -1.0;
    for (i, a) in amps.iter().enumerate() {
        // strict comparison keeps the first maximum; the slack absorbs rounding
        if a.norm() > best_mag + 1e-12 {
            best = i;
            best_mag = a.norm();
        }
    }
    if best_mag <= 0.0 {
        return v.clone();
    }
    let a = amps[best];
    v.scale(a.conj() / a.norm())
}

/// Commuting stabilizer generators with one pair of logical operators.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilizerSpec {
    generators: Vec<PauliString>,
    logical_x: PauliString,
    logical_z: PauliString,
}

impl StabilizerSpec {
    pub fn new(generators: Vec<PauliString>, logical_x: PauliString, logical_z: PauliString) -> Result<Self> {
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                if !a.commutes(b)? {
                    return Err(Error::precondition(format!("generators {a} and {b} anticommute")));
                }
            }
            for l in [&logical_x, &logical_z] {
                if !a.commutes(l)? {
                    return Err(Error::precondition(format!("logical {l} anticommutes with {a}")));
                }
            }
        }
        if logical_x.commutes(&logical_z)? {
            return Err(Error::precondition("logical X and Z commute"));
        }
        Ok(StabilizerSpec {
            generators,
            logical_x,
            logical_z,
        })
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn logical_x(&self) -> &PauliString {
        &self.logical_x
    }

    pub fn logical_z(&self) -> &PauliString {
        &self.logical_z
    }

    /// Bit `i` is set when `error` anticommutes with generator `i`.
    pub fn syndrome(&self, error: &PauliString) -> Result<u32> {
        let mut s = 0;
        for (i, g) in self.generators.iter().enumerate() {
            if !g.commutes(error)? {
                s |= 1 << i;
            }
        }
        Ok(s)
    }

    /// Normalized `∏(I + g_i)|seed⟩`.
    pub fn project(&self, seed: &StateVector) -> Result<StateVector> {
        let mut v = seed.clone();
        for g in &self.generators {
            let gv = g.apply(&v)?;
            v = StateVector::from_amplitudes((v.amplitudes() + gv.amplitudes()).iter().copied().collect())?;
        }
        let norm = v.norm();
        if norm < 1e-12 {
            return Err(Error::Internal("stabilizer projection of the seed vanished".into()));
        }
        Ok(v.scale(C64::new(1.0 / norm, 0.0)))
    }
}

/// `|0_L⟩ = |+++⟩`, `|1_L⟩ = |−−−⟩`.
pub fn repetition_plus_code() -> CodeSpace {
    CodeSpace::new(
        "rc3",
        StateVector::product("+++").unwrap(),
        StateVector::product("---").unwrap(),
    )
    .expect("product states are orthonormal")
}

/// `|0_L⟩ = |01⟩`, `|1_L⟩ = |10⟩`.
pub fn dfs_two_qubit() -> CodeSpace {
    CodeSpace::new(
        "dfs2",
        StateVector::product("01").unwrap(),
        StateVector::product("10").unwrap(),
    )
    .expect("basis states are orthonormal")
}

/// One-qubit code with `|0_L⟩ = |0⟩`, `|1_L⟩ = |1⟩`.
pub fn trivial_code() -> CodeSpace {
    CodeSpace::new("trivial", StateVector::basis(1, 0), StateVector::basis(1, 1)).expect("basis states")
}

/// Replaces each physical qubit of `outer` by a block of `inner`: basis
/// value `b` on an outer qubit becomes the inner codeword `|b_L⟩`.
pub fn concatenate(outer: &CodeSpace, inner: &CodeSpace) -> Result<CodeSpace> {
    let n_outer = outer.n_qubits();
    let total = n_outer * inner.n_qubits();
    if total > crate::pauli::MAX_QUBITS {
        return Err(Error::argument(format!("concatenated code would have {total} qubits")));
    }
    let encode = |v: &StateVector| -> Result<StateVector> {
        let mut acc = vec![C64::new(0.0, 0.0); 1 << total];
        for (b, amp) in v.amplitudes().iter().enumerate() {
            if amp.norm() == 0.0 {
                continue;
            }
            let mut block = inner.codeword((b >> (n_outer - 1)) & 1).clone();
            for q in 1..n_outer {
                block = block.kron(inner.codeword((b >> (n_outer - 1 - q)) & 1));
            }
            for (slot, x) in acc.iter_mut().zip(block.amplitudes().iter()) {
                *slot += amp * x;
            }
        }
        StateVector::from_amplitudes(acc)
    };
    let label = format!("{}*{}", outer.label(), inner.label());
    CodeSpace::new(label, encode(outer.codeword(0))?, encode(outer.codeword(1))?)
}

/// `|0_L⟩ = |+++−−−⟩`, `|1_L⟩ = |−−−+++⟩`.
pub fn concatenated_code() -> CodeSpace {
    let c = concatenate(&dfs_two_qubit(), &repetition_plus_code()).expect("six qubits");
    CodeSpace {
        label: "conc6".into(),
        ..c
    }
}

pub fn five_qubit_stabilizer() -> StabilizerSpec {
    let gens = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    StabilizerSpec::new(gens, "XXXXX".parse().unwrap(), "ZZZZZ".parse().unwrap())
        .expect("cyclic five-qubit generators are consistent")
}

/// The perfect `[[5,1,3]]` code with `|1_L⟩ = X̄|0_L⟩`.
pub fn five_qubit_code() -> CodeSpace {
    let spec = five_qubit_stabilizer();
    let zero = spec
        .project(&StateVector::basis(5, 0))
        .expect("|00000> has nonzero projection");
    let one = spec.logical_x().apply(&zero).expect("five-qubit sizes");
    CodeSpace::new("five_qubit", zero, one).expect("stabilizer codewords are orthonormal")
}

/// Named presets selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodeName {
    Rc3,
    Dfs2,
    Conc6,
    FiveQubit,
}

impl CodeName {
    pub const ALL: [CodeName; 4] = [CodeName::Rc3, CodeName::Dfs2, CodeName::Conc6, CodeName::FiveQubit];

    pub fn as_str(self) -> &'static str {
        match self {
            CodeName::Rc3 => "rc3",
            CodeName::Dfs2 => "dfs2",
            CodeName::Conc6 => "conc6",
            CodeName::FiveQubit => "five_qubit",
        }
    }

    pub fn build(self) -> CodeSpace {
        match self {
            CodeName::Rc3 => repetition_plus_code(),
            CodeName::Dfs2 => dfs_two_qubit(),
            CodeName::Conc6 => concatenated_code(),
            CodeName::FiveQubit => five_qubit_code(),
        }
    }

    pub fn n_qubits(self) -> usize {
        match self {
            CodeName::Rc3 => 3,
            CodeName::Dfs2 => 2,
            CodeName::Conc6 => 6,
            CodeName::FiveQubit => 5,
        }
    }

    pub fn default_model(self) -> ChannelModel {
        match self {
            CodeName::FiveQubit => ChannelModel::Depolarizing,
            _ => ChannelModel::Dephasing,
        }
    }
}

impl fmt::Display for CodeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CodeName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CodeName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::argument(format!("unknown code {s:?} (expected rc3, dfs2, conc6 or five_qubit)")))
    }
}

/// Dense matrix with `|i_L⟩⟨j_L|` blocks, used by tests and reports.
pub fn codeword_matrix(code: &CodeSpace) -> DMatrix<C64> {
    DMatrix::from_columns(&[
        code.codeword(0).amplitudes().clone(),
        code.codeword(1).amplitudes().clone(),
    ])
}
