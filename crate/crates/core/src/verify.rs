//! Randomized self-checks of the single-letter identities, shared by the
//! command-line `verify` command and the acceptance tests.

use crate::bounds::{
    brute_force_joint, cor1_bound, cor2_bound, lemma1_d_exact, lemma1_v, BitConditionalStates,
    CodedCQState,
};
use crate::codes::BinaryLinearCode;
use crate::entropy::{log2, rel_entropy_and_variance, DivergencePair};
use crate::error::Result;
use crate::quantum::random::{random_density, random_density_with_floor, random_unitary};
use crate::quantum::{kron, u_y, DensityOperator};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::fmt;

/// Smallest eigenvalue of the random conditional states used by the oracle suite.
pub const EIGENVALUE_FLOOR: f64 = 0.05;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub trials: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl CheckResult {
    fn new(name: &'static str, tolerance: f64) -> Self {
        CheckResult { name, trials: 0, max_deviation: 0.0, tolerance }
    }

    fn record(&mut self, deviation: f64) {
        self.trials += 1;
        // NaN must fail the check
        if deviation.is_nan() || deviation > self.max_deviation {
            self.max_deviation = deviation;
        }
    }

    pub fn passed(&self) -> bool {
        self.trials > 0 && self.max_deviation <= self.tolerance
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} trials, max deviation {:e} (tolerance {:e})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.trials,
            self.max_deviation,
            self.tolerance
        )
    }
}

/// A random coded state with `n ≤ 6`, `k ≤ 3` and qubit conditional states.
pub fn random_small_instance<R: Rng + ?Sized>(rng: &mut R) -> Result<CodedCQState> {
    let n = rng.gen_range(1..=6);
    let k = rng.gen_range(1..=n.min(3));
    let code = BinaryLinearCode::random(k, n, rng.gen())?;
    let states = (0..n)
        .map(|_| {
            [
                random_density_with_floor(rng, 2, EIGENVALUE_FLOOR),
                random_density_with_floor(rng, 2, EIGENVALUE_FLOOR),
            ]
        })
        .collect();
    CodedCQState::new(code, states)
}

/// Single-letter `D`, `V` against the explicit joint computation. `perturb_v`
/// is added to the single-letter `V` to exercise the failure path.
pub fn oracle_equivalence(trials: usize, seed: u64, perturb_v: f64) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut d = CheckResult::new("oracle D", 1e-9);
    let mut v = CheckResult::new("oracle V", 1e-8);
    for _ in 0..trials {
        let s = random_small_instance(&mut rng)?;
        let (bd, bv) = brute_force_joint(&s)?;
        d.record((lemma1_d_exact(&s)? - bd).abs());
        v.record((lemma1_v(&s)? + perturb_v - bv).abs());
    }
    Ok(vec![d, v])
}

/// Scalar factoring of `D` and of the second log-ratio moment for `aρ`,
/// on random two-qubit product pairs.
pub fn factoring_identities(trials: usize, seed: u64) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut d = CheckResult::new("factor-out D", 1e-9);
    let mut v = CheckResult::new("factor-out V", 1e-8);
    for _ in 0..trials {
        let rho = kron(random_density(&mut rng, 2).matrix(), random_density(&mut rng, 2).matrix());
        let sigma = kron(random_density(&mut rng, 2).matrix(), random_density(&mut rng, 2).matrix());
        let a: f64 = rng.gen_range(0.05..2.0);
        let base = DivergencePair::new(&rho, &sigma)?;
        let scaled = DivergencePair::new(&rho.scale(a), &sigma)?;
        let la = log2(a);
        d.record((scaled.relative_entropy() - (a * la + a * base.relative_entropy())).abs());
        let rhs = a * base.second_moment() + a * la * la + 2.0 * a * la * base.relative_entropy();
        v.record((scaled.second_moment() - rhs).abs());
    }
    Ok(vec![d, v])
}

/// `D`, `V` under a common random unitary, and the collapse of the
/// weight-distribution bound onto the unitary-encoder bound for `ρ¹ = U_Y ρ⁰ U_Y†`.
pub fn unitary_invariance(trials: usize, seed: u64) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut dv = CheckResult::new("unitary invariance of D and V", 1e-10);
    let mut bounds = CheckResult::new("cor1 = cor2 under U_Y encoding", 1e-10);
    let mut coeff = CheckResult::new("var(wt) coefficient under U_Y encoding", 0.0);
    let code = BinaryLinearCode::reed_muller_1(3)?;
    let stats = code.enumerate_weights()?;
    let balanced = code.is_position_balanced();
    for _ in 0..trials {
        let rho = random_density(&mut rng, 2);
        let sigma = random_density(&mut rng, 2);
        let u = random_unitary(&mut rng, 2);
        let (d0, v0) = rel_entropy_and_variance(&rho, &sigma)?;
        let (d1, v1) = rel_entropy_and_variance(&rho.conjugated(&u)?, &sigma.conjugated(&u)?)?;
        dv.record((d0 - d1).abs().max((v0 - v1).abs()));

        let rho0: DensityOperator = random_density(&mut rng, 2);
        let bits = BitConditionalStates::from_unitary_encoder(rho0, &u_y())?;
        let div = bits.divergences()?;
        let chi = bits.holevo();
        let c = rng.gen_range(0.0..2.0);
        let eps = rng.gen_range(0.05..0.95);
        let r1 = cor1_bound(&stats, &balanced, code.rate(), chi, &bits, c, eps)?;
        let r2 = cor2_bound(code.n(), code.rate(), chi, div.v0, c, eps)?;
        bounds.record((r1.bound_bits - r2.bound_bits).abs());
        coeff.record(((div.d1 - div.d0).powi(2)).abs());
    }
    Ok(vec![dv, bounds, coeff])
}

/// All suites in a fixed order.
pub fn run_all(trials: usize, seed: u64, perturb_v: f64) -> Result<Vec<CheckResult>> {
    let mut out = oracle_equivalence(trials, seed, perturb_v)?;
    out.extend(factoring_identities(trials, seed.wrapping_add(1))?);
    out.extend(unitary_invariance(trials, seed.wrapping_add(2))?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suites_pass() {
        for r in run_all(30, 7, 0.0).unwrap() {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn perturbation_is_detected() {
        let r = oracle_equivalence(5, 1, 1e-3).unwrap();
        assert!(r[0].passed());
        assert!(!r[1].passed());
    }

    #[test]
    fn suites_are_reproducible() {
        assert_eq!(run_all(5, 3, 0.0).unwrap(), run_all(5, 3, 0.0).unwrap());
    }

    #[test]
    fn nan_deviation_fails() {
        let mut c = CheckResult::new("x", 1.0);
        c.record(f64::NAN);
        assert!(!c.passed());
    }
}
