//! JSON scenario files.

use crate::CliError;
use qsdc_core::bounds::{BoundKind, EveModel};
use qsdc_core::codes::BinaryLinearCode;
use qsdc_core::protocol::ProtocolConfig;
use qsdc_core::quantum::{standard_channel, ChannelKind, KrausChannel};
use serde::Deserialize;
use std::path::{Path, PathBuf};

pub const DEFAULT_CODE: &str = "rm_1_4";
pub const DEFAULT_PILOTS: usize = 8;

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    /// Built-in code name; mutually exclusive with `code_file`.
    pub code: Option<String>,
    /// Generator file, relative to the scenario file.
    pub code_file: Option<PathBuf>,
    pub pilots: Option<usize>,
    pub message_bits: Option<usize>,
    pub forward_channel: Option<ChannelSpec>,
    pub backward_channel: Option<ChannelSpec>,
    pub eve: Option<EveSpec>,
    pub qber_abort_forward: Option<f64>,
    pub qber_abort_backward: Option<f64>,
    pub eps: Option<f64>,
    pub eps_hash: Option<f64>,
    #[serde(rename = "C")]
    pub c: Option<f64>,
    pub bound: Option<String>,
    pub blocks: Option<usize>,
    pub initial_pool_bits: Option<usize>,
    pub max_retransmissions: Option<usize>,
    pub seed: Option<u64>,
    /// Fixed Holevo quantity for `bounds`; by default it is computed from Eve's model.
    pub chi: Option<f64>,
    pub sweep: Option<Sweep>,
    #[serde(skip)]
    pub base_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelSpec {
    pub kind: String,
    pub param: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case", deny_unknown_fields)]
pub enum EveSpec {
    None {},
    InterceptResend { fraction: f64 },
    EntanglingProbe { strength: f64 },
}

impl EveSpec {
    pub fn model(self) -> EveModel {
        match self {
            EveSpec::None {} => EveModel::None,
            EveSpec::InterceptResend { fraction } => EveModel::InterceptResend { fraction },
            EveSpec::EntanglingProbe { strength } => EveModel::EntanglingProbe { strength },
        }
    }
}

/// Grid axes; an absent axis holds the scenario's single value.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    pub n: Option<Vec<usize>>,
    pub eps: Option<Vec<f64>>,
    /// Replaces the parameter of the scenario's attack model.
    pub attack_strength: Option<Vec<f64>>,
    pub bounds: Option<Vec<String>>,
    /// Sub-block length for the one-shot bound; defaults to `n` (one sub-block).
    pub thm1_m: Option<usize>,
}

fn config<T>(e: impl std::fmt::Display) -> Result<T, CliError> {
    Err(CliError::Config(e.to_string()))
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).or_else(config)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        let mut s = Self::from_json(&text)?;
        s.base_dir = path.parent().map(Path::to_path_buf);
        s.code()?;
        Ok(s)
    }

    pub fn code(&self) -> Result<BinaryLinearCode, CliError> {
        match (&self.code, &self.code_file) {
            (Some(_), Some(_)) => config("give either 'code' or 'code_file', not both"),
            (_, Some(file)) => {
                let path = match &self.base_dir {
                    Some(dir) if file.is_relative() => dir.join(file),
                    _ => file.clone(),
                };
                BinaryLinearCode::load(&path).or_else(config)
            }
            (name, None) => BinaryLinearCode::builtin(name.as_deref().unwrap_or(DEFAULT_CODE)).or_else(config),
        }
    }

    pub fn eve(&self) -> EveModel {
        self.eve.unwrap_or(EveSpec::None {}).model()
    }

    pub fn bound_kinds(&self) -> Result<Vec<BoundKind>, CliError> {
        match self.sweep.as_ref().and_then(|s| s.bounds.as_ref()) {
            None => Ok(BoundKind::ALL.to_vec()),
            Some(names) => names.iter().map(|n| n.parse().or_else(config)).collect(),
        }
    }

    pub fn protocol_config(&self, seed_override: Option<u64>) -> Result<ProtocolConfig, CliError> {
        let code = self.code()?;
        let mut cfg = ProtocolConfig::new(code, self.pilots.unwrap_or(DEFAULT_PILOTS), 0);
        if let Some(m) = self.message_bits {
            cfg.message_bits = m;
        }
        cfg.forward_channel = channel(self.forward_channel.as_ref())?;
        cfg.backward_channel = channel(self.backward_channel.as_ref())?;
        cfg.eve = self.eve();
        let set = |target: &mut f64, v: Option<f64>| {
            if let Some(v) = v {
                *target = v;
            }
        };
        set(&mut cfg.qber_abort_forward, self.qber_abort_forward);
        set(&mut cfg.qber_abort_backward, self.qber_abort_backward);
        set(&mut cfg.eps, self.eps);
        set(&mut cfg.eps_hash, self.eps_hash);
        set(&mut cfg.c, self.c);
        if let Some(b) = &self.bound {
            cfg.bound = b.parse().or_else(config)?;
        }
        cfg.blocks = self.blocks.unwrap_or(cfg.blocks);
        cfg.initial_pool_bits = self.initial_pool_bits.unwrap_or(cfg.code.k());
        cfg.max_retransmissions = self.max_retransmissions.unwrap_or(cfg.max_retransmissions);
        cfg.seed = seed_override.or(self.seed).unwrap_or(0);
        cfg.validate().or_else(config)?;
        Ok(cfg)
    }
}

fn channel(spec: Option<&ChannelSpec>) -> Result<KrausChannel, CliError> {
    match spec {
        None => Ok(KrausChannel::identity(2)),
        Some(s) => {
            let kind: ChannelKind = s.kind.parse().or_else(config)?;
            standard_channel(kind, s.param).or_else(config)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unknown_keys() {
        assert!(matches!(Scenario::from_json(r#"{"blocks": 3, "colour": 1}"#), Err(CliError::Config(_))));
        assert!(Scenario::from_json(r#"{"sweep": {"m": [1]}}"#).is_err());
        assert!(Scenario::from_json(r#"{"eve": {"model": "none", "x": 1}}"#).is_err());
    }

    #[test]
    fn parses_full_scenario() {
        let s = Scenario::from_json(
            r#"{
                "code": "hamming_7_4", "pilots": 4, "message_bits": 2,
                "forward_channel": {"kind": "depolarizing", "param": 0.05},
                "eve": {"model": "entangling_probe", "strength": 0.2},
                "eps": 0.9, "C": 1.0, "bound": "thm2", "blocks": 7, "seed": 5,
                "sweep": {"n": [7], "eps": [0.5, 0.9], "bounds": ["thm2", "cor2"]}
            }"#,
        )
        .unwrap();
        let cfg = s.protocol_config(None).unwrap();
        assert_eq!((cfg.n(), cfg.pilots, cfg.message_bits, cfg.blocks, cfg.seed), (7, 4, 2, 7, 5));
        assert_eq!(cfg.bound, BoundKind::Thm2);
        assert_eq!(cfg.eve, EveModel::EntanglingProbe { strength: 0.2 });
        assert_eq!(s.protocol_config(Some(9)).unwrap().seed, 9);
        assert_eq!(s.bound_kinds().unwrap(), vec![BoundKind::Thm2, BoundKind::Cor2]);
    }

    #[test]
    fn invalid_values_are_config_errors() {
        let bad = [
            r#"{"code": "golay"}"#,
            r#"{"forward_channel": {"kind": "erasure", "param": 0.1}}"#,
            r#"{"qber_abort_forward": 0.7}"#,
            r#"{"code": "rm_1_4", "code_file": "g.txt"}"#,
            r#"{"bound": "thm9"}"#,
        ];
        for text in bad {
            let s = Scenario::from_json(text).unwrap();
            assert!(matches!(s.protocol_config(None), Err(CliError::Config(_))), "{text}");
        }
    }
}
