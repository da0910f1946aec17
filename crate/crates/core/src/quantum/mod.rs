//! Finite-dimensional density operators, qubit channels and distance measures.

mod channel;
pub mod random;
mod spectrum;

pub use channel::{standard_channel, ChannelKind, KrausChannel};
pub use spectrum::{
    c, clamp_drift, conjugate, hermitian_defect, identity, kron, real_trace, trace_norm, CMatrix,
    Spectrum, PSD_TOL,
};

use crate::error::{Error, Result};
use std::fmt;

/// Tolerance on `|m - m†|` entries.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Tolerance on the trace for (sub)normalization checks.
pub const TRACE_TOL: f64 = 1e-10;

/// A Hermitian, positive semidefinite matrix with trace at most one.
#[derive(Clone, PartialEq)]
pub struct DensityOperator {
    matrix: CMatrix,
}

impl fmt::Debug for DensityOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensityOperator(dim = {}) {}", self.dim(), self.matrix)
    }
}

impl DensityOperator {
    /// Validates Hermiticity, positivity and subnormalization.
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if !matrix.is_square() || matrix.nrows() == 0 {
            return Err(Error::InvalidState(format!(
                "matrix must be square and non-empty, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let defect = hermitian_defect(&matrix);
        if defect > HERMITIAN_TOL {
            return Err(Error::InvalidState(format!("not Hermitian (defect {defect:e})")));
        }
        let min = Spectrum::of(&matrix).min_value();
        if min < -PSD_TOL {
            return Err(Error::InvalidState(format!("not positive (eigenvalue {min:e})")));
        }
        let tr = real_trace(&matrix);
        if !(-TRACE_TOL..=1.0 + TRACE_TOL).contains(&tr) {
            return Err(Error::InvalidState(format!("trace {tr} outside [0, 1]")));
        }
        Ok(DensityOperator { matrix })
    }

    /// Like [`DensityOperator::new`] but additionally requires unit trace.
    pub fn normalized(matrix: CMatrix) -> Result<Self> {
        let rho = Self::new(matrix)?;
        if !rho.is_normalized() {
            return Err(Error::InvalidState(format!("trace {} is not 1", rho.trace())));
        }
        Ok(rho)
    }

    /// Skips validation; the caller guarantees the invariants.
    pub(crate) fn from_matrix_unchecked(matrix: CMatrix) -> Self {
        DensityOperator { matrix }
    }

    /// Projector onto a (not necessarily normalized) vector, normalized.
    pub fn pure(amplitudes: &[num_complex::Complex64]) -> Result<Self> {
        let v = CMatrix::from_column_slice(amplitudes.len(), 1, amplitudes);
        let norm = v.norm();
        if norm == 0.0 {
            return Err(Error::InvalidState("zero state vector".into()));
        }
        let v = v.unscale(norm);
        Ok(DensityOperator { matrix: &v * v.adjoint() })
    }

    /// Computational basis state `|index⟩⟨index|`.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut m = CMatrix::zeros(dim, dim);
        m[(index, index)] = c(1.0, 0.0);
        DensityOperator { matrix: m }
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        DensityOperator { matrix: identity(dim).unscale(dim as f64) }
    }

    /// Diagonal state with the given (nonnegative) weights.
    pub fn diagonal(weights: &[f64]) -> Result<Self> {
        let d = weights.len();
        let mut m = CMatrix::zeros(d, d);
        for (i, &w) in weights.iter().enumerate() {
            m[(i, i)] = c(w, 0.0);
        }
        Self::new(m)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn trace(&self) -> f64 {
        real_trace(&self.matrix)
    }

    pub fn is_normalized(&self) -> bool {
        (self.trace() - 1.0).abs() <= TRACE_TOL
    }

    pub fn purity(&self) -> f64 {
        real_trace(&(&self.matrix * &self.matrix))
    }

    pub fn spectrum(&self) -> Spectrum {
        Spectrum::of(&self.matrix)
    }

    /// `u ρ u†` for a unitary `u`.
    pub fn conjugated(&self, u: &CMatrix) -> Result<Self> {
        if u.nrows() != self.dim() || u.ncols() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: u.nrows() });
        }
        Ok(DensityOperator { matrix: conjugate(u, &self.matrix) })
    }

    /// Convex combination `Σ p_i ρ_i`.
    pub fn mixture(parts: &[(f64, &DensityOperator)]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidState("empty mixture".into()))?;
        let d = first.1.dim();
        let mut m = CMatrix::zeros(d, d);
        for (p, rho) in parts {
            check_dims(d, rho.dim())?;
            m += rho.matrix.scale(*p);
        }
        Self::new(m)
    }

    /// Largest invariant violation; used by the property tests.
    pub fn invariant_defect(&self) -> (f64, f64, f64) {
        (
            hermitian_defect(&self.matrix),
            self.spectrum().min_value(),
            self.trace(),
        )
    }
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        Err(Error::DimensionMismatch { expected, found })
    } else {
        Ok(())
    }
}

/// Kronecker product `a ⊗ b`.
pub fn tensor(a: &DensityOperator, b: &DensityOperator) -> DensityOperator {
    DensityOperator::from_matrix_unchecked(kron(&a.matrix, &b.matrix))
}

/// Traces out every subsystem not listed in `keep`.
///
/// `dims` lists the subsystem dimensions in tensor order; kept subsystems keep
/// their relative order.
pub fn partial_trace(rho: &DensityOperator, dims: &[usize], keep: &[usize]) -> Result<DensityOperator> {
    partial_trace_matrix(&rho.matrix, dims, keep).map(DensityOperator::from_matrix_unchecked)
}

pub fn partial_trace_matrix(m: &CMatrix, dims: &[usize], keep: &[usize]) -> Result<CMatrix> {
    let total: usize = dims.iter().product();
    check_dims(total, m.nrows())?;
    if dims.contains(&0) {
        return Err(Error::InvalidParameter("subsystem dimension 0".into()));
    }
    let mut kept_mask = vec![false; dims.len()];
    for &k in keep {
        if k >= dims.len() || kept_mask[k] {
            return Err(Error::InvalidParameter(format!("bad subsystem index {k}")));
        }
        kept_mask[k] = true;
    }
    let kept: Vec<usize> = (0..dims.len()).filter(|&i| kept_mask[i]).collect();
    let traced: Vec<usize> = (0..dims.len()).filter(|&i| !kept_mask[i]).collect();
    let dk: usize = kept.iter().map(|&i| dims[i]).product();
    let dt: usize = traced.iter().map(|&i| dims[i]).product();

    // strides of each subsystem in the full index
    let mut stride = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        stride[i] = stride[i + 1] * dims[i + 1];
    }
    let offset = |subsystems: &[usize], mut idx: usize| -> usize {
        let mut full = 0;
        for &s in subsystems.iter().rev() {
            full += (idx % dims[s]) * stride[s];
            idx /= dims[s];
        }
        full
    };
    let kept_off: Vec<usize> = (0..dk).map(|a| offset(&kept, a)).collect();
    let traced_off: Vec<usize> = (0..dt).map(|t| offset(&traced, t)).collect();

    let mut out = CMatrix::zeros(dk, dk);
    for a in 0..dk {
        for b in 0..dk {
            let mut acc = c(0.0, 0.0);
            for &t in &traced_off {
                acc += m[(kept_off[a] + t, kept_off[b] + t)];
            }
            out[(a, b)] = acc;
        }
    }
    Ok(out)
}

/// Generalized trace distance `½‖ρ−σ‖₁ + ½|tr(ρ−σ)|`.
pub fn trace_distance(rho: &DensityOperator, sigma: &DensityOperator) -> Result<f64> {
    check_dims(rho.dim(), sigma.dim())?;
    let diff = &rho.matrix - &sigma.matrix;
    Ok(0.5 * trace_norm(&diff) + 0.5 * real_trace(&diff).abs())
}

/// Generalized fidelity `(‖√ρ√σ‖₁ + √((1−tr ρ)(1−tr σ)))²`.
pub fn fidelity(rho: &DensityOperator, sigma: &DensityOperator) -> Result<f64> {
    check_dims(rho.dim(), sigma.dim())?;
    let sqrt_rho = rho.spectrum().map(|v| clamp_drift(v).max(0.0).sqrt());
    let inner = &sqrt_rho * &sigma.matrix * &sqrt_rho;
    // ‖√ρ√σ‖₁ = tr √(√ρ σ √ρ)
    let overlap: f64 = Spectrum::of(&inner)
        .clamped_values()
        .map(|v| v.max(0.0).sqrt())
        .sum();
    let defect = ((1.0 - rho.trace()).max(0.0) * (1.0 - sigma.trace()).max(0.0)).sqrt();
    Ok((overlap + defect).powi(2).min(1.0))
}

/// Purified distance `√(1 − F)`.
pub fn purified_distance(rho: &DensityOperator, sigma: &DensityOperator) -> Result<f64> {
    Ok((1.0 - fidelity(rho, sigma)?).max(0.0).sqrt())
}

/// Preparation / measurement basis of a BB84 qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Computational basis {|0⟩, |1⟩}.
    Z,
    /// Hadamard basis {|+⟩, |−⟩}.
    X,
}

/// State vector amplitudes of the BB84 state with the given basis and bit.
pub fn bb84_amplitudes(basis: Basis, bit: bool) -> [num_complex::Complex64; 2] {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    match (basis, bit) {
        (Basis::Z, false) => [c(1.0, 0.0), c(0.0, 0.0)],
        (Basis::Z, true) => [c(0.0, 0.0), c(1.0, 0.0)],
        (Basis::X, false) => [c(h, 0.0), c(h, 0.0)],
        (Basis::X, true) => [c(h, 0.0), c(-h, 0.0)],
    }
}

pub fn bb84_state(basis: Basis, bit: bool) -> DensityOperator {
    let a = bb84_amplitudes(basis, bit);
    let v = CMatrix::from_column_slice(2, 1, &a);
    DensityOperator::from_matrix_unchecked(&v * v.adjoint())
}

/// `|0⟩, |1⟩, |+⟩, |−⟩` in that order.
pub fn bb84_states() -> [DensityOperator; 4] {
    [
        bb84_state(Basis::Z, false),
        bb84_state(Basis::Z, true),
        bb84_state(Basis::X, false),
        bb84_state(Basis::X, true),
    ]
}

/// The bit-flip encoder `U_Y = |0⟩⟨1| − |1⟩⟨0|`.
pub fn u_y() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)])
}

pub fn pauli_x() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
}

pub fn pauli_y() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)])
}

pub fn pauli_z() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)])
}

/// A finite ensemble `{p(x), ρ_x}` of normalized states.
#[derive(Debug, Clone)]
pub struct Ensemble {
    entries: Vec<(f64, DensityOperator)>,
}

impl Ensemble {
    pub fn new(entries: Vec<(f64, DensityOperator)>) -> Result<Self> {
        let first = entries
            .first()
            .ok_or_else(|| Error::InvalidEnsemble("no entries".into()))?;
        let d = first.1.dim();
        let mut total = 0.0;
        for (p, rho) in &entries {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::InvalidEnsemble(format!("probability {p} outside [0, 1]")));
            }
            if rho.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, found: rho.dim() });
            }
            if !rho.is_normalized() {
                return Err(Error::InvalidEnsemble("member state is not normalized".into()));
            }
            total += p;
        }
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidEnsemble(format!("probabilities sum to {total}")));
        }
        Ok(Ensemble { entries })
    }

    /// Equal weights over the given states.
    pub fn uniform(states: Vec<DensityOperator>) -> Result<Self> {
        let p = 1.0 / states.len() as f64;
        Self::new(states.into_iter().map(|s| (p, s)).collect())
    }

    pub fn entries(&self) -> &[(f64, DensityOperator)] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries[0].1.dim()
    }

    /// Average state `Σ p(x) ρ_x`.
    pub fn average(&self) -> DensityOperator {
        let d = self.dim();
        let mut m = CMatrix::zeros(d, d);
        for (p, rho) in &self.entries {
            m += rho.matrix().scale(*p);
        }
        DensityOperator::from_matrix_unchecked(m)
    }

    /// Pushes every member through a channel.
    pub fn through(&self, ch: &KrausChannel) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|(p, rho)| Ok((*p, ch.apply(rho)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ensemble { entries })
    }
}
