//! Finite-length lower bounds on the smooth min-entropy of a coded
//! classical-quantum state and the key length they certify.
//!
//! All quantities are in bits. The single-letter route goes through
//! [`lemma1_d_exact`] and [`lemma1_v`]; [`oracle`] recomputes both from the
//! explicit joint state.

mod eve;
pub mod oracle;
mod report;

pub use eve::{bb84_preparation, eve_bit_states, eve_bit_states_from_probes, EveModel};
pub use oracle::{brute_force_joint, brute_force_joint_d, brute_force_joint_v};
pub use report::{BoundKind, BoundParams, BoundReport, BoundTerms, ChiSource};

use crate::codes::{bit, BinaryLinearCode, WeightStats};
use crate::entropy::{g_epsilon, holevo_ensemble, log2, DivergencePair, LOG2_E};
use crate::error::{Error, Result};
use crate::quantum::{CMatrix, DensityOperator, Ensemble};

/// Largest entry-wise deviation tolerated when testing `U ρ̃ U† = ρ̃`.
pub const ENCODER_SYMMETRY_TOL: f64 = 1e-12;

/// `D` and `V` of each bit-conditional state against their average.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BitDivergences {
    pub d0: f64,
    pub d1: f64,
    pub v0: f64,
    pub v1: f64,
}

/// Eve's states `ρ⁰, ρ¹` given the encoded bit, with `ρ̃ = ½ρ⁰ + ½ρ¹`.
#[derive(Debug, Clone)]
pub struct BitConditionalStates {
    rho0: DensityOperator,
    rho1: DensityOperator,
    rho_tilde: DensityOperator,
    symmetric: bool,
}

impl BitConditionalStates {
    pub fn new(rho0: DensityOperator, rho1: DensityOperator) -> Result<Self> {
        if rho0.dim() != rho1.dim() {
            return Err(Error::DimensionMismatch { expected: rho0.dim(), found: rho1.dim() });
        }
        if !rho0.is_normalized() || !rho1.is_normalized() {
            return Err(Error::InvalidState("bit-conditional states must have unit trace".into()));
        }
        let rho_tilde = DensityOperator::mixture(&[(0.5, &rho0), (0.5, &rho1)])?;
        Ok(BitConditionalStates { rho0, rho1, rho_tilde, symmetric: false })
    }

    /// `ρ¹ = U ρ⁰ U†`. When `U` also fixes `ρ̃` (true for `U_Y`, whose square is
    /// `−I`), the two bit states have identical divergences to `ρ̃`, and they are
    /// reported as such rather than recomputed.
    pub fn from_unitary_encoder(rho0: DensityOperator, u: &CMatrix) -> Result<Self> {
        let rho1 = rho0.conjugated(u)?;
        let mut s = Self::new(rho0, rho1)?;
        let moved = s.rho_tilde.conjugated(u)?;
        let defect = (moved.matrix() - s.rho_tilde.matrix())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        s.symmetric = defect <= ENCODER_SYMMETRY_TOL;
        Ok(s)
    }

    pub fn rho0(&self) -> &DensityOperator {
        &self.rho0
    }

    pub fn rho1(&self) -> &DensityOperator {
        &self.rho1
    }

    pub fn rho_tilde(&self) -> &DensityOperator {
        &self.rho_tilde
    }

    pub fn state(&self, b: bool) -> &DensityOperator {
        if b {
            &self.rho1
        } else {
            &self.rho0
        }
    }

    /// True when built from an encoder unitary that leaves `ρ̃` invariant.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn divergences(&self) -> Result<BitDivergences> {
        let p0 = DivergencePair::of(&self.rho0, &self.rho_tilde)?;
        let (d0, v0) = (p0.relative_entropy(), p0.variance());
        if self.symmetric {
            return Ok(BitDivergences { d0, d1: d0, v0, v1: v0 });
        }
        let p1 = DivergencePair::of(&self.rho1, &self.rho_tilde)?;
        Ok(BitDivergences { d0, d1: p1.relative_entropy(), v0, v1: p1.variance() })
    }

    /// `χ{½ρ⁰, ½ρ¹}`.
    pub fn holevo(&self) -> f64 {
        let e = Ensemble::new(vec![(0.5, self.rho0.clone()), (0.5, self.rho1.clone())])
            .expect("normalized bit states");
        holevo_ensemble(&e)
    }
}

/// `ρ_{XⁿZⁿ} = Σᵢ (1/M)|i⟩⟨i| ⊗ (⊗ⱼ ρⱼ^{(xᵢⱼ)})` with a uniform prior over the `M = 2^k` codewords.
#[derive(Debug, Clone)]
pub struct CodedCQState {
    code: BinaryLinearCode,
    states: Vec<[DensityOperator; 2]>,
    dims: Vec<usize>,
}

/// `(D, V)` for bit 0 and bit 1 at one position.
type BitPairDivergences = [Option<(f64, f64)>; 2];

impl CodedCQState {
    /// `states[j]` holds the position-`j` states for bit 0 and bit 1.
    pub fn new(code: BinaryLinearCode, states: Vec<[DensityOperator; 2]>) -> Result<Self> {
        if states.len() != code.n() {
            return Err(Error::LengthMismatch { expected: code.n(), found: states.len() });
        }
        let mut dims = Vec::with_capacity(states.len());
        for [a, b] in &states {
            if a.dim() != b.dim() {
                return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
            }
            if !a.is_normalized() || !b.is_normalized() {
                return Err(Error::InvalidState("position states must have unit trace".into()));
            }
            dims.push(a.dim());
        }
        Ok(CodedCQState { code, states, dims })
    }

    /// Every position uses the same pair `ρ⁰, ρ¹`.
    pub fn homogeneous(code: BinaryLinearCode, bits: &BitConditionalStates) -> Result<Self> {
        let states = vec![[bits.rho0.clone(), bits.rho1.clone()]; code.n()];
        Self::new(code, states)
    }

    pub fn code(&self) -> &BinaryLinearCode {
        &self.code
    }

    pub fn state(&self, j: usize, b: bool) -> &DensityOperator {
        &self.states[j][b as usize]
    }

    pub fn local_dims(&self) -> &[usize] {
        &self.dims
    }

    /// Fraction of codewords with a 1 at position `j`: ½ for balanced positions, 0 otherwise.
    pub fn one_fraction(&self, j: usize) -> f64 {
        if self.code.is_position_balanced()[j] {
            0.5
        } else {
            0.0
        }
    }

    /// The position-`j` ensemble `{(1 − q), ρⱼ⁰; q, ρⱼ¹}` induced by the codebook.
    pub fn position_ensemble(&self, j: usize) -> Ensemble {
        let q = self.one_fraction(j);
        Ensemble::new(vec![(1.0 - q, self.states[j][0].clone()), (q, self.states[j][1].clone())])
            .expect("validated position states")
    }

    /// `D` and `V` of each bit state at each position against its position average;
    /// bits that never occur at a position are `None`.
    fn position_divergences(&self) -> Result<Vec<BitPairDivergences>> {
        (0..self.code.n())
            .map(|j| {
                let avg = self.position_ensemble(j).average();
                let q = self.one_fraction(j);
                let mut out = [None, None];
                for (b, used) in [(0, q < 1.0), (1, q > 0.0)] {
                    if used {
                        let p = DivergencePair::of(&self.states[j][b], &avg)?;
                        out[b] = Some((p.relative_entropy(), p.variance()));
                    }
                }
                Ok(out)
            })
            .collect()
    }
}

/// `D(ρ_{XⁿZⁿ} ‖ I ⊗ σ_{Zⁿ}) = −nR_code + Σⱼ χⱼ`, with `χⱼ` the Holevo
/// quantity of the position-`j` ensemble.
pub fn lemma1_d_exact(s: &CodedCQState) -> Result<f64> {
    // surfaces support violations before the Holevo sum
    s.position_divergences()?;
    let chi: f64 = (0..s.code.n()).map(|j| holevo_ensemble(&s.position_ensemble(j))).sum();
    Ok(chi - s.code.k() as f64)
}

/// `V(ρ_{XⁿZⁿ} ‖ I ⊗ σ_{Zⁿ})` from the single-letter terms:
/// `Eᵢ[Σⱼ Vᵢⱼ] + Eᵢ[(Σⱼ Dᵢⱼ)²] − (Eᵢ[Σⱼ Dᵢⱼ])²`.
pub fn lemma1_v(s: &CodedCQState) -> Result<f64> {
    let per = s.position_divergences()?;
    let n = s.code.n();
    let mut sums = Vec::with_capacity(1 << s.code.k());
    s.code.for_each_codeword(|_, cw| {
        let (mut d, mut v) = (0.0, 0.0);
        for (j, entry) in per.iter().enumerate().take(n) {
            let (dj, vj) = entry[bit(cw, j) as usize].expect("occurring bit");
            d += dj;
            v += vj;
        }
        sums.push((d, v));
    })?;
    let m = sums.len() as f64;
    let mean_v = sums.iter().map(|s| s.1).sum::<f64>() / m;
    let mean_d = sums.iter().map(|s| s.0).sum::<f64>() / m;
    let var_d = sums.iter().map(|s| (s.0 - mean_d).powi(2)).sum::<f64>() / m;
    Ok(mean_v + var_d)
}

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("eps = {eps} outside (0, 1)")))
    }
}

fn check_common(n: usize, r_code: f64, chi: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("block length must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&r_code) {
        return Err(Error::InvalidParameter(format!("code rate {r_code} outside [0, 1]")));
    }
    if !(chi.is_finite() && chi >= 0.0) {
        return Err(Error::InvalidParameter(format!("chi = {chi} must be finite and non-negative")));
    }
    Ok(())
}

fn check_nonneg(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} = {v} must be finite and non-negative")))
    }
}

/// `nR − nχ − V/(2n log e) − C/n² − n g(ε)`, evaluated at `α = 1 + 1/n`.
pub fn thm2_bound(n: usize, r_code: f64, chi: f64, v: f64, c: f64, eps: f64) -> Result<BoundReport> {
    check_common(n, r_code, chi)?;
    check_nonneg("V", v)?;
    check_nonneg("C", c)?;
    check_eps(eps)?;
    let nf = n as f64;
    let a1 = 1.0 / nf; // α − 1
    let terms = BoundTerms {
        rate_term: nf * r_code,
        holevo_term: nf * chi,
        v_penalty: a1 * v / (2.0 * LOG2_E),
        g_term: nf * g_epsilon(eps)?,
        remainder: c * a1 * a1,
        ..Default::default()
    };
    let params = BoundParams { n, r_code, chi, v, c, eps, ..Default::default() };
    Ok(BoundReport::from_terms(BoundKind::Thm2, terms, params))
}

/// `log₂(2^a + 2)` without overflow for large `a`.
fn log2_pow_plus_two(a: f64) -> f64 {
    if a > 0.0 {
        a + log2(1.0 + 2f64.powf(1.0 - a))
    } else {
        log2(2f64.powf(a) + 2.0)
    }
}

/// Smallest block length `(8/5) log(2/ε²)` accepted by [`thm1_bound`].
pub fn thm1_min_length(eps: f64) -> f64 {
    1.6 * log2(2.0 / (eps * eps))
}

/// `B m (R − χ) − 4√B log(2^{mR/2} + 2) √(log(2/ε²))` for `n = B m` split into
/// `B` sub-blocks of `m` channel uses.
pub fn thm1_bound(b_sub: usize, m: usize, r_code: f64, chi: f64, eps: f64) -> Result<BoundReport> {
    if b_sub == 0 || m == 0 {
        return Err(Error::InvalidParameter("sub-block count and length must be positive".into()));
    }
    let n = b_sub * m;
    check_common(n, r_code, chi)?;
    check_eps(eps)?;
    let floor = thm1_min_length(eps);
    if (n as f64) < floor {
        return Err(Error::Precondition(format!(
            "n = {n} is below the minimum block length (8/5) log(2/eps^2) = {floor}"
        )));
    }
    let nf = n as f64;
    let terms = BoundTerms {
        rate_term: nf * r_code,
        holevo_term: nf * chi,
        sqrt_term: 4.0
            * (b_sub as f64).sqrt()
            * log2_pow_plus_two(m as f64 * r_code / 2.0)
            * log2(2.0 / (eps * eps)).sqrt(),
        ..Default::default()
    };
    let params = BoundParams {
        n,
        r_code,
        chi,
        eps,
        b_sub: Some(b_sub),
        m: Some(m),
        ..Default::default()
    };
    Ok(BoundReport::from_terms(BoundKind::Thm1, terms, params))
}

/// Weight-distribution form for a linear code whose positions are all balanced:
/// `nR − nχ − n g(ε) − [V⁰n + (V¹−V⁰)E[wt]]/(2n log e) − (D¹−D⁰)² var(wt)/(2n log e) − C/n²`.
pub fn cor1_bound(
    stats: &WeightStats,
    balanced: &[bool],
    r_code: f64,
    chi: f64,
    bits: &BitConditionalStates,
    c: f64,
    eps: f64,
) -> Result<BoundReport> {
    let n = stats.n;
    check_common(n, r_code, chi)?;
    check_nonneg("C", c)?;
    check_eps(eps)?;
    if balanced.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: balanced.len() });
    }
    let unbalanced: Vec<usize> = (0..n).filter(|&j| !balanced[j]).collect();
    if !unbalanced.is_empty() {
        return Err(Error::Precondition(format!(
            "code positions {unbalanced:?} are not balanced; the weight-distribution bound requires every generator column to be nonzero"
        )));
    }
    let mut params = BoundParams { n, r_code, chi, c, eps, ..Default::default() };
    let dv = match bits.divergences() {
        Ok(dv) => dv,
        Err(Error::InfiniteDivergence) => return Ok(BoundReport::infinite(BoundKind::Cor1, params)),
        Err(e) => return Err(e),
    };
    let nf = n as f64;
    let scale = 2.0 * nf * LOG2_E;
    let mean_v = dv.v0 * nf + (dv.v1 - dv.v0) * stats.mean_weight;
    let spread = (dv.d1 - dv.d0).powi(2) * stats.var_weight;
    params.v = mean_v + spread;
    let terms = BoundTerms {
        rate_term: nf * r_code,
        holevo_term: nf * chi,
        v_penalty: mean_v / scale,
        weight_variance_term: spread / scale,
        g_term: nf * g_epsilon(eps)?,
        remainder: c / (nf * nf),
        ..Default::default()
    };
    Ok(BoundReport::from_terms(BoundKind::Cor1, terms, params))
}

/// Unitary-encoder form: `nR − nχ − n g(ε) − V(ρ⁰‖ρ̃)/(2 log e) − C/n²`.
pub fn cor2_bound(n: usize, r_code: f64, chi: f64, v0: f64, c: f64, eps: f64) -> Result<BoundReport> {
    check_common(n, r_code, chi)?;
    check_nonneg("V", v0)?;
    check_nonneg("C", c)?;
    check_eps(eps)?;
    let nf = n as f64;
    let terms = BoundTerms {
        rate_term: nf * r_code,
        holevo_term: nf * chi,
        v_penalty: v0 / (2.0 * LOG2_E),
        g_term: nf * g_epsilon(eps)?,
        remainder: c / (nf * nf),
        ..Default::default()
    };
    let params = BoundParams { n, r_code, chi, v: v0, c, eps, ..Default::default() };
    Ok(BoundReport::from_terms(BoundKind::Cor2, terms, params))
}

/// Leftover-hash key length `⌊h − 2 log(1/ε_hash)⌋`, clamped at 0.
pub fn extractable_key_length(hmin_lower: f64, eps_hash: f64) -> Result<usize> {
    if !(eps_hash > 0.0 && eps_hash <= 1.0) {
        return Err(Error::InvalidParameter(format!("eps_hash = {eps_hash} outside (0, 1]")));
    }
    let raw = (hmin_lower - 2.0 * log2(1.0 / eps_hash)).floor();
    Ok(if raw.is_finite() && raw > 0.0 { raw as usize } else { 0 })
}
