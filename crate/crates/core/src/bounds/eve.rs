//! Eavesdropper models and the resulting bit-conditional states of Eve's ancillas.

use super::BitConditionalStates;
use crate::error::{Error, Result};
use crate::quantum::{
    bb84_states, c, identity, kron, partial_trace_matrix, u_y, CMatrix, DensityOperator, Ensemble,
    KrausChannel,
};

/// Per-qubit probe applied identically on the forward and backward passes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EveModel {
    None,
    /// With probability `fraction`, measure in the computational basis, keep the
    /// outcome and resend the post-measurement state.
    InterceptResend { fraction: f64 },
    /// Controlled rotation by angle `strength · π` from the qubit onto a fresh
    /// ancilla in `|0⟩`; Eve keeps the ancilla. Strength 1 is a CNOT copy.
    EntanglingProbe { strength: f64 },
}

impl EveModel {
    pub fn validate(&self) -> Result<()> {
        let (name, v) = match *self {
            EveModel::None => return Ok(()),
            EveModel::InterceptResend { fraction } => ("intercept fraction", fraction),
            EveModel::EntanglingProbe { strength } => ("probe strength", strength),
        };
        if (0.0..=1.0).contains(&v) {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("{name} {v} outside [0, 1]")))
        }
    }

    /// The probe as a qubit channel; its Stinespring environment is Eve's ancilla.
    pub fn probe(&self) -> Result<KrausChannel> {
        self.validate()?;
        let zero = c(0.0, 0.0);
        let diag = |a: f64, b: f64| CMatrix::from_row_slice(2, 2, &[c(a, 0.0), zero, zero, c(b, 0.0)]);
        match *self {
            EveModel::None => Ok(KrausChannel::identity(2)),
            EveModel::InterceptResend { fraction: f } => KrausChannel::new(vec![
                identity(2).scale((1.0 - f).sqrt()),
                diag(f.sqrt(), 0.0),
                diag(0.0, f.sqrt()),
            ]),
            EveModel::EntanglingProbe { strength: s } => {
                let half = s * std::f64::consts::PI / 2.0;
                KrausChannel::new(vec![diag(1.0, half.cos()), diag(0.0, half.sin())])
            }
        }
    }
}

/// Uniform distribution over the four BB84 states.
pub fn bb84_preparation() -> Ensemble {
    Ensemble::uniform(bb84_states().to_vec()).expect("BB84 states form an ensemble")
}

/// Eve's state given the encoded bit, for the model applied on both passes.
pub fn eve_bit_states(attack: &EveModel, preparation: &Ensemble) -> Result<BitConditionalStates> {
    let probe = attack.probe()?;
    eve_bit_states_from_probes(&probe, &probe, preparation)
}

/// Eve's joint ancilla state `E₂E₁` given the encoded bit.
///
/// Each prepared state passes the forward probe (environment `E₁`), is encoded
/// with `U_Y^b` and passes the backward probe (environment `E₂`). The qubit is
/// traced out and the result averaged over the preparation ensemble.
pub fn eve_bit_states_from_probes(
    forward: &KrausChannel,
    backward: &KrausChannel,
    preparation: &Ensemble,
) -> Result<BitConditionalStates> {
    for ch in [forward, backward] {
        if ch.input_dim() != 2 || ch.output_dim() != 2 {
            return Err(Error::InvalidChannel("probes must map a qubit to a qubit".into()));
        }
    }
    if preparation.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: preparation.dim() });
    }
    let (e1, e2) = (forward.ops().len(), backward.ops().len());
    let vf = forward.isometry();
    let vb = kron(&backward.isometry(), &identity(e1));
    let encoders = [identity(2), u_y()];

    let states = encoders
        .iter()
        .map(|u| {
            let enc = kron(u, &identity(e1));
            let mut eve = CMatrix::zeros(e2 * e1, e2 * e1);
            for (p, psi) in preparation.entries() {
                let tau = &vf * psi.matrix() * vf.adjoint();
                let tau = &enc * tau * enc.adjoint();
                let full = &vb * tau * vb.adjoint();
                eve += partial_trace_matrix(&full, &[2, e2, e1], &[1, 2])?.scale(*p);
            }
            DensityOperator::normalized(eve)
        })
        .collect::<Result<Vec<_>>>()?;
    let [rho0, rho1]: [DensityOperator; 2] = states.try_into().expect("two encoders");
    BitConditionalStates::new(rho0, rho1)
}
