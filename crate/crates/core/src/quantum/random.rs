//! Seeded generators for random states and unitaries (Ginibre / Haar).

use super::spectrum::{c, identity, CMatrix};
use super::DensityOperator;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

fn ginibre<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        c(re, im)
    })
}

/// Full-rank random density matrix `G G† / tr(G G†)` (Hilbert–Schmidt measure).
pub fn random_density_matrix<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> CMatrix {
    let g = ginibre(rng, dim, dim);
    let m = &g * g.adjoint();
    let tr = m.trace().re;
    m.unscale(tr)
}

pub fn random_density<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> DensityOperator {
    DensityOperator::from_matrix_unchecked(random_density_matrix(rng, dim))
}

/// Random state whose eigenvalues are all at least `floor` (requires `floor * dim < 1`).
pub fn random_density_with_floor<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    floor: f64,
) -> DensityOperator {
    assert!(floor >= 0.0 && floor * (dim as f64) < 1.0);
    let base = random_density_matrix(rng, dim);
    let mixed = base.scale(1.0 - floor * dim as f64) + identity(dim).scale(floor);
    DensityOperator::from_matrix_unchecked(mixed)
}

/// Random pure state `|ψ⟩⟨ψ|`.
pub fn random_pure<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> DensityOperator {
    let g = ginibre(rng, dim, 1);
    let norm = g.norm();
    let v = g.unscale(norm);
    DensityOperator::from_matrix_unchecked(&v * v.adjoint())
}

/// Haar-random unitary via QR of a Ginibre matrix with the phase of `R`'s diagonal removed.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> CMatrix {
    let g = ginibre(rng, dim, dim);
    let qr = g.qr();
    let (mut q, r) = qr.unpack();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    q
}
