//! Divergences and entropies (all in bits).
//!
//! `D`, `V` and the second log-ratio moment are evaluated from the joint
//! spectral data of `ρ` and `σ`: with `ρ = Σ λ_i |v_i⟩⟨v_i|` and
//! `σ = Σ μ_j |w_j⟩⟨w_j|`, every quantity is a moment of the random variable
//! `log λ_i − log μ_j` under the weights `λ_i |⟨v_i|w_j⟩|²`.

use crate::error::{Error, Result};
use crate::quantum::{clamp_drift, CMatrix, DensityOperator, Ensemble, KrausChannel, Spectrum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::f64::consts::{LN_2, PI};

/// Eigenvalues at or below this count as outside the support.
pub const SUPPORT_TOL: f64 = 1e-12;

/// `log₂ e`, the nats-to-bits factor that appears in the finite-length penalties.
pub const LOG2_E: f64 = std::f64::consts::LOG2_E;

/// Base-2 logarithm; the only place natural logs are converted.
#[inline]
pub fn log2(x: f64) -> f64 {
    x.ln() / LN_2
}

/// Binary entropy `h(p)` in bits.
pub fn binary_entropy(p: f64) -> f64 {
    let term = |x: f64| if x > 0.0 { -x * log2(x) } else { 0.0 };
    term(p) + term(1.0 - p)
}

/// The pair `(ρ, σ)` reduced to weighted log-ratios.
#[derive(Debug, Clone)]
pub struct DivergencePair {
    terms: Vec<(f64, f64)>,
    trace: f64,
}

impl DivergencePair {
    /// Accepts arbitrary PSD matrices (no trace restriction), so that the
    /// scaled and unnormalized operators appearing in the single-letter
    /// identities can be handled directly.
    pub fn new(rho: &CMatrix, sigma: &CMatrix) -> Result<Self> {
        if rho.shape() != sigma.shape() {
            return Err(Error::DimensionMismatch { expected: rho.nrows(), found: sigma.nrows() });
        }
        let sr = Spectrum::of(rho);
        let ss = Spectrum::of(sigma);
        let overlap = sr.vectors.adjoint() * &ss.vectors;
        let lambdas: Vec<f64> = sr.clamped_values().map(|v| v.max(0.0)).collect();
        let mus: Vec<f64> = ss.clamped_values().collect();

        let mut leak = 0.0;
        let mut terms = Vec::new();
        for (i, &lam) in lambdas.iter().enumerate() {
            if lam <= 0.0 {
                continue;
            }
            let log_lam = log2(lam);
            for (j, &mu) in mus.iter().enumerate() {
                let w = lam * overlap[(i, j)].norm_sqr();
                if mu <= SUPPORT_TOL {
                    leak += w;
                } else if w > 0.0 {
                    terms.push((w, log_lam - log2(mu)));
                }
            }
        }
        // tr(ρ Π_ker σ) > 0 means supp ρ ⊄ supp σ
        if leak > SUPPORT_TOL {
            return Err(Error::InfiniteDivergence);
        }
        Ok(DivergencePair { terms, trace: lambdas.iter().sum() })
    }

    pub fn of(rho: &DensityOperator, sigma: &DensityOperator) -> Result<Self> {
        Self::new(rho.matrix(), sigma.matrix())
    }

    /// `tr ρ(log ρ − log σ)`.
    pub fn relative_entropy(&self) -> f64 {
        self.terms.iter().map(|(w, x)| w * x).sum()
    }

    /// `tr ρ(log ρ − log σ)²`.
    pub fn second_moment(&self) -> f64 {
        self.terms.iter().map(|(w, x)| w * x * x).sum()
    }

    /// `tr ρ(log ρ − log σ − D)²`; equals `second_moment − D²` for unit-trace `ρ`.
    pub fn variance(&self) -> f64 {
        let d = self.relative_entropy();
        self.terms.iter().map(|(w, x)| w * (x - d) * (x - d)).sum()
    }

    pub fn trace(&self) -> f64 {
        self.trace
    }
}

/// Umegaki relative entropy `D(ρ‖σ) = tr ρ(log ρ − log σ)` in bits.
pub fn rel_entropy(rho: &DensityOperator, sigma: &DensityOperator) -> Result<f64> {
    Ok(DivergencePair::of(rho, sigma)?.relative_entropy())
}

/// Relative entropy variance `V(ρ‖σ) = tr ρ(log ρ − log σ − D)²` in bits².
pub fn rel_entropy_variance(rho: &DensityOperator, sigma: &DensityOperator) -> Result<f64> {
    Ok(DivergencePair::of(rho, sigma)?.variance())
}

/// Both `D` and `V` from one decomposition.
pub fn rel_entropy_and_variance(rho: &DensityOperator, sigma: &DensityOperator) -> Result<(f64, f64)> {
    let pair = DivergencePair::of(rho, sigma)?;
    Ok((pair.relative_entropy(), pair.variance()))
}

/// Minimal (sandwiched) Rényi divergence
/// `D̃_α(ρ‖σ) = log(‖σ^{(1−α)/2α} ρ σ^{(1−α)/2α}‖_α^α / tr ρ) / (α − 1)`.
pub fn renyi_divergence(alpha: f64, rho: &DensityOperator, sigma: &DensityOperator) -> Result<f64> {
    renyi_divergence_matrix(alpha, rho.matrix(), sigma.matrix())
}

pub fn renyi_divergence_matrix(alpha: f64, rho: &CMatrix, sigma: &CMatrix) -> Result<f64> {
    if !(alpha.is_finite() && alpha > 0.0 && alpha != 1.0) {
        return Err(Error::InvalidParameter(format!("Rényi order {alpha} not in (0,1)∪(1,∞)")));
    }
    if rho.shape() != sigma.shape() {
        return Err(Error::DimensionMismatch { expected: rho.nrows(), found: sigma.nrows() });
    }
    let tr_rho = rho.trace().re;
    if tr_rho <= 0.0 {
        return Err(Error::InvalidParameter("ρ has zero trace".into()));
    }
    let ss = Spectrum::of(sigma);
    if alpha > 1.0 {
        // negative powers of σ need ρ ≪ σ
        DivergencePair::new(rho, sigma)?;
    }
    let gamma = (1.0 - alpha) / (2.0 * alpha);
    let sigma_pow = ss.map(|mu| {
        let mu = clamp_drift(mu);
        if mu > SUPPORT_TOL {
            mu.powf(gamma)
        } else {
            0.0
        }
    });
    let sandwiched = &sigma_pow * rho * &sigma_pow;
    let q: f64 = Spectrum::of(&sandwiched)
        .clamped_values()
        .map(|v| if v > 0.0 { v.powf(alpha) } else { 0.0 })
        .sum();
    if q <= 0.0 {
        // α < 1 with ρ ⊥ σ
        return Err(Error::InfiniteDivergence);
    }
    Ok(log2(q / tr_rho) / (alpha - 1.0))
}

/// Von Neumann entropy `H(ρ) = −tr ρ log ρ` in bits.
pub fn von_neumann_entropy(rho: &DensityOperator) -> f64 {
    spectrum_entropy(&rho.spectrum())
}

fn spectrum_entropy(s: &Spectrum) -> f64 {
    s.clamped_values()
        .filter(|&v| v > 0.0)
        .map(|v| -v * log2(v))
        .sum()
}

/// Holevo quantity `χ = H(Σ p ρ) − Σ p H(ρ)` of an ensemble.
pub fn holevo_ensemble(e: &Ensemble) -> f64 {
    let avg = von_neumann_entropy(&e.average());
    let members: f64 = e
        .entries()
        .iter()
        .map(|(p, rho)| if *p > 0.0 { p * von_neumann_entropy(rho) } else { 0.0 })
        .sum();
    (avg - members).max(0.0)
}

/// Settings of the qubit-channel Holevo optimizer.
#[derive(Debug, Clone, Copy)]
pub struct HolevoSearch {
    pub polar_steps: usize,
    pub azimuth_steps: usize,
    pub iterations: usize,
    pub initial_step: f64,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for HolevoSearch {
    fn default() -> Self {
        HolevoSearch {
            polar_steps: 12,
            azimuth_steps: 24,
            iterations: 200,
            initial_step: 0.5,
            restarts: 3,
            seed: 0,
        }
    }
}

/// Result of [`holevo_channel`]: the value and the optimizing input ensemble.
#[derive(Debug, Clone)]
pub struct HolevoOptimum {
    pub chi: f64,
    /// `(weight, θ, φ)` of each pure input state on the Bloch sphere.
    pub inputs: Vec<(f64, f64, f64)>,
}

fn bloch_state(theta: f64, phi: f64) -> DensityOperator {
    let a = num_complex::Complex64::new((theta / 2.0).cos(), 0.0);
    let b = num_complex::Complex64::from_polar((theta / 2.0).sin(), phi);
    DensityOperator::pure(&[a, b]).expect("unit vector")
}

/// Holevo information `χ(𝓝)` of a qubit-input channel, maximized over
/// ensembles of four pure input states.
///
/// A coarse grid over antipodal input pairs seeds a coordinate ascent on the
/// four Bloch directions and the (softmax) weights.
pub fn holevo_channel(ch: &KrausChannel) -> Result<f64> {
    Ok(holevo_channel_with(ch, &HolevoSearch::default())?.chi)
}

pub fn holevo_channel_with(ch: &KrausChannel, search: &HolevoSearch) -> Result<HolevoOptimum> {
    if ch.input_dim() != 2 {
        return Err(Error::Unsupported(format!(
            "Holevo capacity search only supports qubit inputs, got dimension {}",
            ch.input_dim()
        )));
    }
    // params: [θ₀, φ₀, …, θ₃, φ₃, u₀, …, u₃]
    let objective = |x: &[f64; 12]| -> f64 {
        let z: f64 = x[8..].iter().map(|u| u.exp()).sum();
        let mut entries = Vec::with_capacity(4);
        for s in 0..4 {
            let p = x[8 + s].exp() / z;
            let out = ch.apply(&bloch_state(x[2 * s], x[2 * s + 1])).expect("qubit input");
            entries.push((p, out));
        }
        chi_of(&entries)
    };

    let mut best_dir = (0.0, 0.0);
    let mut best_val = f64::NEG_INFINITY;
    for i in 0..search.polar_steps {
        // only the upper hemisphere: the pair (n, −n) covers the rest
        let theta = (i as f64 + 0.5) * PI / (2.0 * search.polar_steps as f64);
        for j in 0..search.azimuth_steps {
            let phi = 2.0 * PI * j as f64 / search.azimuth_steps as f64;
            let up = ch.apply(&bloch_state(theta, phi))?;
            let down = ch.apply(&bloch_state(PI - theta, phi + PI))?;
            let v = chi_of(&[(0.5, up), (0.5, down)]);
            if v > best_val {
                best_val = v;
                best_dir = (theta, phi);
            }
        }
    }

    let mut rng = ChaCha20Rng::seed_from_u64(search.seed);
    let (t, p) = best_dir;
    let mut starts = vec![[t, p, PI - t, p + PI, t, p, PI - t, p + PI, 0.0, 0.0, 0.0, 0.0]];
    for _ in 0..search.restarts {
        let mut x = [0.0; 12];
        for s in 0..4 {
            x[2 * s] = rng.gen_range(0.0..PI);
            x[2 * s + 1] = rng.gen_range(0.0..2.0 * PI);
            x[8 + s] = rng.gen_range(-0.5..0.5);
        }
        starts.push(x);
    }

    let mut best = (f64::NEG_INFINITY, starts[0]);
    for mut x in starts {
        let mut val = objective(&x);
        let mut step = search.initial_step;
        for _ in 0..search.iterations {
            let mut improved = false;
            for coord in 0..12 {
                for dir in [1.0, -1.0] {
                    let mut trial = x;
                    trial[coord] += dir * step;
                    let v = objective(&trial);
                    if v > val {
                        val = v;
                        x = trial;
                        improved = true;
                        break;
                    }
                }
            }
            if !improved {
                step *= 0.5;
                if step < 1e-9 {
                    break;
                }
            }
        }
        if val > best.0 {
            best = (val, x);
        }
    }

    let x = best.1;
    let z: f64 = x[8..].iter().map(|u| u.exp()).sum();
    let inputs = (0..4)
        .map(|s| (x[8 + s].exp() / z, x[2 * s], x[2 * s + 1]))
        .collect();
    Ok(HolevoOptimum { chi: best.0.max(best_val), inputs })
}

fn chi_of(entries: &[(f64, DensityOperator)]) -> f64 {
    let d = entries[0].1.dim();
    let mut avg = CMatrix::zeros(d, d);
    let mut members = 0.0;
    for (p, rho) in entries {
        avg += rho.matrix().scale(*p);
        members += p * von_neumann_entropy(rho);
    }
    spectrum_entropy(&Spectrum::of(&avg)) - members
}

/// `g(ε) = −log(1 − √(1 − ε²))`, the smoothing penalty per channel use.
pub fn g_epsilon(eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::InvalidParameter(format!("ε = {eps} not in (0, 1]")));
    }
    Ok(-log2(1.0 - (1.0 - eps * eps).max(0.0).sqrt()))
}

/// Classical conditional min-entropy `−log Σ_z max_x p(x, z)`.
///
/// `joint[x][z]` holds the probability of the pair `(x, z)`.
pub fn minentropy_classical(joint: &[Vec<f64>]) -> Result<f64> {
    let cols = joint.first().map(|r| r.len()).unwrap_or(0);
    if cols == 0 || joint.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidParameter("pmf must be a non-empty rectangular table".into()));
    }
    let mut total = 0.0;
    for row in joint {
        for &p in row {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!("probability {p} outside [0, 1]")));
            }
            total += p;
        }
    }
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidParameter(format!("pmf sums to {total}")));
    }
    let guess: f64 = (0..cols)
        .map(|z| joint.iter().map(|r| r[z]).fold(0.0, f64::max))
        .sum();
    Ok(-log2(guess))
}
