use super::spectrum::{c, identity, CMatrix};
use super::{pauli_x, pauli_y, pauli_z, DensityOperator};
use crate::error::{Error, Result};

/// Completeness tolerance for `Σ K†K = I`.
pub const CPTP_TOL: f64 = 1e-10;

/// A CPTP map given by Kraus operators `K_i` of shape `d_out × d_in`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    ops: Vec<CMatrix>,
    din: usize,
    dout: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    /// `ρ ↦ (1−p)ρ + p I/2`
    Depolarizing,
    /// `ρ ↦ (1−p/2)ρ + (p/2) ZρZ`; `p = 1` removes all coherence.
    Dephasing,
    /// Decay `|1⟩ → |0⟩` with probability `γ`.
    AmplitudeDamping,
}

impl std::str::FromStr for ChannelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "depolarizing" => Ok(ChannelKind::Depolarizing),
            "dephasing" => Ok(ChannelKind::Dephasing),
            "amplitude_damping" => Ok(ChannelKind::AmplitudeDamping),
            other => Err(Error::Parse(format!("unknown channel kind '{other}'"))),
        }
    }
}

impl KrausChannel {
    pub fn new(ops: Vec<CMatrix>) -> Result<Self> {
        let first = ops
            .first()
            .ok_or_else(|| Error::InvalidChannel("no Kraus operators".into()))?;
        let (dout, din) = first.shape();
        let mut sum = CMatrix::zeros(din, din);
        for k in &ops {
            if k.shape() != (dout, din) {
                return Err(Error::InvalidChannel("Kraus operators have mixed shapes".into()));
            }
            sum += k.adjoint() * k;
        }
        let defect = (sum - identity(din))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if defect > CPTP_TOL {
            return Err(Error::InvalidChannel(format!(
                "Kraus operators are not trace preserving (defect {defect:e})"
            )));
        }
        Ok(KrausChannel { ops, din, dout })
    }

    pub fn identity(dim: usize) -> Self {
        KrausChannel { ops: vec![identity(dim)], din: dim, dout: dim }
    }

    /// Single-Kraus channel `ρ ↦ UρU†`.
    pub fn unitary(u: CMatrix) -> Result<Self> {
        Self::new(vec![u])
    }

    pub fn ops(&self) -> &[CMatrix] {
        &self.ops
    }

    pub fn input_dim(&self) -> usize {
        self.din
    }

    pub fn output_dim(&self) -> usize {
        self.dout
    }

    pub fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        Ok(DensityOperator::from_matrix_unchecked(self.apply_matrix(rho.matrix())?))
    }

    pub fn apply_matrix(&self, rho: &CMatrix) -> Result<CMatrix> {
        if rho.nrows() != self.din {
            return Err(Error::DimensionMismatch { expected: self.din, found: rho.nrows() });
        }
        let mut out = CMatrix::zeros(self.dout, self.dout);
        for k in &self.ops {
            out += k * rho * k.adjoint();
        }
        Ok(out)
    }

    /// Stinespring isometry `V = Σ_k K_k ⊗ |k⟩`, output ordered as (system, environment).
    pub fn isometry(&self) -> CMatrix {
        let e = self.ops.len();
        let mut v = CMatrix::zeros(self.dout * e, self.din);
        for (k, op) in self.ops.iter().enumerate() {
            for r in 0..self.dout {
                for col in 0..self.din {
                    v[(r * e + k, col)] = op[(r, col)];
                }
            }
        }
        v
    }

    /// Complementary channel: the environment's output of the Stinespring dilation.
    pub fn complementary(&self) -> KrausChannel {
        let e = self.ops.len();
        // F_i = Σ_k |k⟩⟨i| K_k, one operator per system output index i
        let ops = (0..self.dout)
            .map(|i| {
                let mut f = CMatrix::zeros(e, self.din);
                for (k, op) in self.ops.iter().enumerate() {
                    for col in 0..self.din {
                        f[(k, col)] = op[(i, col)];
                    }
                }
                f
            })
            .collect();
        KrausChannel { ops, din: self.din, dout: e }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &KrausChannel) -> Result<KrausChannel> {
        if other.din != self.dout {
            return Err(Error::DimensionMismatch { expected: self.dout, found: other.din });
        }
        let ops = other
            .ops
            .iter()
            .flat_map(|b| self.ops.iter().map(move |a| b * a))
            .collect();
        Ok(KrausChannel { ops, din: self.din, dout: other.dout })
    }
}

/// Standard single-qubit noise channels with parameter in `[0, 1]`.
pub fn standard_channel(kind: ChannelKind, param: f64) -> Result<KrausChannel> {
    if !(0.0..=1.0).contains(&param) {
        return Err(Error::InvalidParameter(format!("channel parameter {param} outside [0, 1]")));
    }
    let ops = match kind {
        ChannelKind::Depolarizing => {
            let a = (1.0 - 0.75 * param).sqrt();
            let b = (param / 4.0).sqrt();
            vec![identity(2).scale(a), pauli_x().scale(b), pauli_y().scale(b), pauli_z().scale(b)]
        }
        ChannelKind::Dephasing => {
            let a = (1.0 - param / 2.0).sqrt();
            let b = (param / 2.0).sqrt();
            vec![identity(2).scale(a), pauli_z().scale(b)]
        }
        ChannelKind::AmplitudeDamping => {
            let zero = c(0.0, 0.0);
            let k0 = CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), zero, zero, c((1.0 - param).sqrt(), 0.0)]);
            let k1 = CMatrix::from_row_slice(2, 2, &[zero, c(param.sqrt(), 0.0), zero, zero]);
            vec![k0, k1]
        }
    };
    KrausChannel::new(ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::random::{random_density, random_unitary};
    use crate::quantum::{bb84_states, partial_trace_matrix};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn max_abs(m: &CMatrix) -> f64 {
        m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn identity_channel_leaves_state_unchanged() {
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        let rho = random_density(&mut rng, 3);
        let out = KrausChannel::identity(3).apply(&rho).unwrap();
        assert!(max_abs(&(out.matrix() - rho.matrix())) < 1e-15);
    }

    #[test]
    fn full_depolarization_gives_maximally_mixed() {
        let ch = standard_channel(ChannelKind::Depolarizing, 1.0).unwrap();
        let out = ch.apply(&DensityOperator::basis(2, 0)).unwrap();
        assert!(max_abs(&(out.matrix() - DensityOperator::maximally_mixed(2).matrix())) < 1e-15);
    }

    #[test]
    fn depolarizing_spectrum_on_pure_state() {
        for &p in &[0.0, 0.1, 0.37, 0.8] {
            let ch = standard_channel(ChannelKind::Depolarizing, p).unwrap();
            let out = ch.apply(&DensityOperator::basis(2, 0)).unwrap();
            let mut ev: Vec<f64> = out.spectrum().values.iter().cloned().collect();
            ev.sort_by(f64::total_cmp);
            assert!((ev[0] - p / 2.0).abs() < 1e-14);
            assert!((ev[1] - (1.0 - p / 2.0)).abs() < 1e-14);
        }
    }

    #[test]
    fn depolarizing_zero_is_identity_and_dephasing_one_kills_coherence() {
        let mut rng = ChaCha20Rng::seed_from_u64(2);
        let rho = random_density(&mut rng, 2);
        let id = standard_channel(ChannelKind::Depolarizing, 0.0).unwrap();
        assert!(max_abs(&(id.apply(&rho).unwrap().matrix() - rho.matrix())) < 1e-15);
        let deph = standard_channel(ChannelKind::Dephasing, 1.0).unwrap();
        let out = deph.apply(&rho).unwrap();
        assert!(out.matrix()[(0, 1)].norm() < 1e-15);
        assert!((out.matrix()[(0, 0)] - rho.matrix()[(0, 0)]).norm() < 1e-15);
    }

    #[test]
    fn amplitude_damping_on_excited_state() {
        for &g in &[0.0, 0.25, 0.9, 1.0] {
            let ch = standard_channel(ChannelKind::AmplitudeDamping, g).unwrap();
            let out = ch.apply(&DensityOperator::basis(2, 1)).unwrap();
            let expected = DensityOperator::diagonal(&[g, 1.0 - g]).unwrap();
            assert!(max_abs(&(out.matrix() - expected.matrix())) < 1e-15);
        }
    }

    #[test]
    fn rejects_non_cptp_and_bad_parameters() {
        assert!(KrausChannel::new(vec![identity(2).scale(0.5)]).is_err());
        assert!(KrausChannel::new(vec![]).is_err());
        assert!(standard_channel(ChannelKind::Dephasing, 1.5).is_err());
        let ch = KrausChannel::identity(2);
        assert!(ch.apply(&DensityOperator::maximally_mixed(3)).is_err());
    }

    #[test]
    fn channels_preserve_trace_and_positivity() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        let kinds = [ChannelKind::Depolarizing, ChannelKind::Dephasing, ChannelKind::AmplitudeDamping];
        for t in 0..1000 {
            let kind = kinds[t % 3];
            let ch = standard_channel(kind, rng.gen::<f64>()).unwrap();
            let u = KrausChannel::unitary(random_unitary(&mut rng, 2)).unwrap();
            let ch = ch.then(&u).unwrap();
            let rho = random_density(&mut rng, 2);
            let out = ch.apply(&rho).unwrap();
            let (herm, min, tr) = out.invariant_defect();
            assert!(herm < 1e-12 && min > -1e-12 && (tr - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn complementary_matches_stinespring_partial_trace() {
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        let ch = standard_channel(ChannelKind::AmplitudeDamping, 0.3).unwrap();
        let v = ch.isometry();
        assert!(max_abs(&(v.adjoint() * &v - identity(2))) < 1e-14);
        for s in bb84_states().iter().chain([random_density(&mut rng, 2)].iter()) {
            let joint = &v * s.matrix() * v.adjoint();
            let env = partial_trace_matrix(&joint, &[2, 2], &[1]).unwrap();
            let sys = partial_trace_matrix(&joint, &[2, 2], &[0]).unwrap();
            let comp = ch.complementary().apply(s).unwrap();
            assert!(max_abs(&(comp.matrix() - env)) < 1e-14);
            assert!(max_abs(&(ch.apply(s).unwrap().matrix() - sys)) < 1e-14);
        }
    }
}
