//! Brute-force evaluation of `D` and `V` for the full coded state
//! `ρ_{XⁿZⁿ} = Σᵢ (1/M)|i⟩⟨i| ⊗ ρ_{Zⁿ}^{(i)}` against `I ⊗ σ_{Zⁿ}`.

use super::CodedCQState;
use crate::entropy::DivergencePair;
use crate::error::{Error, Result};
use crate::quantum::{kron, CMatrix};

pub const ORACLE_MAX_N: usize = 6;
pub const ORACLE_MAX_K: usize = 3;
pub const ORACLE_MAX_DIM: usize = 512;

fn check_size(s: &CodedCQState) -> Result<()> {
    let (n, k) = (s.code().n(), s.code().k());
    let dim = (1usize << k) * s.local_dims().iter().product::<usize>();
    if n > ORACLE_MAX_N || k > ORACLE_MAX_K || dim > ORACLE_MAX_DIM {
        return Err(Error::Precondition(format!(
            "brute-force oracle limited to n <= {ORACLE_MAX_N}, k <= {ORACLE_MAX_K}, dimension <= {ORACLE_MAX_DIM} (got n = {n}, k = {k}, dimension {dim})"
        )));
    }
    Ok(())
}

/// The explicit pair `(ρ_{XⁿZⁿ}, I ⊗ σ_{Zⁿ})` with `σ_{Zⁿ} = ⊗ⱼ σⱼ`, each
/// `σⱼ` averaged directly over the codebook.
pub fn joint_operators(s: &CodedCQState) -> Result<(CMatrix, CMatrix)> {
    check_size(s)?;
    let code = s.code();
    let n = code.n();
    let m = 1usize << code.k();
    let inv_m = 1.0 / m as f64;
    let codewords: Vec<u128> = (0..m as u128).map(|msg| code.encode_word(msg)).collect();

    let local = |j: usize, cw: u128| s.state(j, (cw >> j) & 1 == 1).matrix();
    let product = |f: &dyn Fn(usize) -> CMatrix| {
        (1..n).fold(f(0), |acc, j| kron(&acc, &f(j)))
    };

    let sigma = product(&|j| {
        let d = s.local_dims()[j];
        codewords
            .iter()
            .fold(CMatrix::zeros(d, d), |acc, &cw| acc + local(j, cw).scale(inv_m))
    });
    let dz = sigma.nrows();
    let mut rho = CMatrix::zeros(m * dz, m * dz);
    let mut id_sigma = CMatrix::zeros(m * dz, m * dz);
    for (i, &cw) in codewords.iter().enumerate() {
        let block = product(&|j| local(j, cw).clone()).scale(inv_m);
        rho.view_mut((i * dz, i * dz), (dz, dz)).copy_from(&block);
        id_sigma.view_mut((i * dz, i * dz), (dz, dz)).copy_from(&sigma);
    }
    Ok((rho, id_sigma))
}

/// `(D, V)` of the joint state, with `V = tr ρ(log ρ − log I⊗σ)² − D²`.
pub fn brute_force_joint(s: &CodedCQState) -> Result<(f64, f64)> {
    let (rho, sigma) = joint_operators(s)?;
    let pair = DivergencePair::new(&rho, &sigma)?;
    let d = pair.relative_entropy();
    Ok((d, pair.second_moment() - d * d))
}

pub fn brute_force_joint_d(s: &CodedCQState) -> Result<f64> {
    Ok(brute_force_joint(s)?.0)
}

pub fn brute_force_joint_v(s: &CodedCQState) -> Result<f64> {
    Ok(brute_force_joint(s)?.1)
}
