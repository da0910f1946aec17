use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;

/// Eigenvalues in `(-PSD_TOL, 0)` are treated as floating-point drift and clamped to zero.
pub const PSD_TOL: f64 = 1e-10;

/// Eigendecomposition `m = V diag(values) V†` of a Hermitian matrix.
///
/// Every matrix function in the crate (log, sqrt, powers, absolute value) goes
/// through this type.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub values: DVector<f64>,
    pub vectors: CMatrix,
}

impl Spectrum {
    /// Decomposes the Hermitian part `(m + m†)/2` of a square matrix.
    pub fn of(m: &CMatrix) -> Self {
        let herm = (m + m.adjoint()).scale(0.5);
        let eig = SymmetricEigen::new(herm);
        Spectrum {
            values: eig.eigenvalues,
            vectors: eig.eigenvectors,
        }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Eigenvalues with small negative drift clamped to zero.
    pub fn clamped_values(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().map(|&v| clamp_drift(v))
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    /// `V diag(f(values)) V†`.
    pub fn map<F: Fn(f64) -> f64>(&self, f: F) -> CMatrix {
        let d = self.dim();
        let mut scaled = self.vectors.clone();
        for c in 0..d {
            let s = f(self.values[c]);
            for r in 0..d {
                scaled[(r, c)] *= s;
            }
        }
        scaled * self.vectors.adjoint()
    }
}

#[inline]
pub fn clamp_drift(v: f64) -> f64 {
    if v < 0.0 && v > -PSD_TOL {
        0.0
    } else {
        v
    }
}

/// Largest absolute entry of `m - m†`.
pub fn hermitian_defect(m: &CMatrix) -> f64 {
    let diff = m - m.adjoint();
    diff.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Real part of the trace.
pub fn real_trace(m: &CMatrix) -> f64 {
    m.trace().re
}

/// Trace norm of a Hermitian matrix.
pub fn trace_norm(m: &CMatrix) -> f64 {
    Spectrum::of(m).values.iter().map(|v| v.abs()).sum()
}

pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

pub fn identity(d: usize) -> CMatrix {
    CMatrix::identity(d, d)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `a ρ b` style conjugation `u m u†`.
pub fn conjugate(u: &CMatrix, m: &CMatrix) -> CMatrix {
    u * m * u.adjoint()
}
