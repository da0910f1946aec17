//! Drivers behind the `qsdc` binary. Each command returns its full output as a
//! string so that it can be written to a file or standard output unchanged.

pub mod scenario;

use qsdc_core::bounds::{
    cor1_bound, cor2_bound, eve_bit_states, lemma1_v, thm1_bound, thm2_bound, bb84_preparation,
    BoundKind, BoundReport, ChiSource, CodedCQState, EveModel,
};
use qsdc_core::codes::{BinaryLinearCode, WeightStats, MAX_BLOCK_LENGTH};
use qsdc_core::protocol::run_session;
use qsdc_core::verify;
use qsdc_core::Error;
use rayon::prelude::*;
use scenario::Scenario;
use std::fmt::Write as _;
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{0}")]
    Compute(#[from] Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Every error is a configuration or input problem; exit code 1 is
    /// reserved for failed verification.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Divergence gap above which the unitary-encoder bound is flagged as unverified.
const SYMMETRY_TOL: f64 = 1e-9;

pub fn bounds_header() -> String {
    format!("attack_strength,{}", BoundReport::csv_header())
}

fn with_strength(model: EveModel, s: f64) -> Result<EveModel, CliError> {
    match model {
        EveModel::None => Err(CliError::Config("attack_strength sweep needs an attack model in 'eve'".into())),
        EveModel::InterceptResend { .. } => Ok(EveModel::InterceptResend { fraction: s }),
        EveModel::EntanglingProbe { .. } => Ok(EveModel::EntanglingProbe { strength: s }),
    }
}

fn strength_of(model: EveModel) -> Option<f64> {
    match model {
        EveModel::None => None,
        EveModel::InterceptResend { fraction } => Some(fraction),
        EveModel::EntanglingProbe { strength } => Some(strength),
    }
}

#[derive(Debug, Clone, Copy)]
struct GridPoint {
    n: usize,
    eps: f64,
    eve: EveModel,
}

/// Code used at block length `n`: the scenario's code when the lengths agree,
/// otherwise a random code of the same rate seeded by the scenario seed.
fn code_at(base: &BinaryLinearCode, n: usize, seed: u64) -> Result<BinaryLinearCode, Error> {
    if n == base.n() {
        return Ok(base.clone());
    }
    if n > MAX_BLOCK_LENGTH {
        return Err(Error::Precondition(format!(
            "code-dependent bounds need n <= {MAX_BLOCK_LENGTH}"
        )));
    }
    let k = ((base.rate() * n as f64).round() as usize).clamp(1, n);
    BinaryLinearCode::random(k, n, seed)
}

fn rate_at(base: &BinaryLinearCode, n: usize) -> f64 {
    if n == base.n() {
        base.rate()
    } else {
        ((base.rate() * n as f64).round()).clamp(1.0, n as f64) / n as f64
    }
}

fn bound_row(
    sc: &Scenario,
    base: &BinaryLinearCode,
    p: GridPoint,
    kind: BoundKind,
    thm1_m: Option<usize>,
) -> Result<BoundReport, CliError> {
    let bits = eve_bit_states(&p.eve, &bb84_preparation())?;
    let (chi, source) = match sc.chi {
        Some(chi) => (chi, ChiSource::Supplied),
        None => (bits.holevo(), ChiSource::Ensemble),
    };
    let c = sc.c.unwrap_or(0.0);
    let seed = sc.seed.unwrap_or(0);
    let rate = rate_at(base, p.n);
    let report = match kind {
        BoundKind::Thm1 => {
            let m = thm1_m.unwrap_or(p.n);
            if m == 0 || !p.n.is_multiple_of(m) {
                return Err(CliError::Config(format!("thm1_m = {m} does not divide n = {}", p.n)));
            }
            thm1_bound(p.n / m, m, rate, chi, p.eps)?
        }
        BoundKind::Thm2 => {
            let code = code_at(base, p.n, seed)?;
            let v = lemma1_v(&CodedCQState::homogeneous(code, &bits)?)?;
            thm2_bound(p.n, rate, chi, v, c, p.eps)?
        }
        BoundKind::Cor1 => {
            let code = code_at(base, p.n, seed)?;
            let stats = code.enumerate_weights()?;
            cor1_bound(&stats, &code.is_position_balanced(), rate, chi, &bits, c, p.eps)?
        }
        BoundKind::Cor2 => {
            let dv = bits.divergences()?;
            let mut r = cor2_bound(p.n, rate, chi, dv.v0, c, p.eps)?;
            if (dv.d1 - dv.d0).abs() > SYMMETRY_TOL || (dv.v1 - dv.v0).abs() > SYMMETRY_TOL {
                r.add_caveat("bit-conditional divergences differ so the unitary-encoder hypothesis is not met");
            }
            r
        }
    };
    Ok(report.with_chi_source(source))
}

/// One CSV row per grid point and requested bound, in grid order
/// `n × eps × attack_strength × bound`. Refusals appear as `#` comment rows.
pub fn cmd_bounds(sc: &Scenario, jobs: usize) -> Result<String, CliError> {
    let base = sc.code()?;
    let sweep = sc.sweep.clone().unwrap_or_default();
    let eve = sc.eve();
    eve.validate().map_err(|e| CliError::Config(e.to_string()))?;
    let ns = sweep.n.clone().unwrap_or_else(|| vec![base.n()]);
    let epss = sweep.eps.clone().unwrap_or_else(|| vec![sc.eps.unwrap_or(0.5)]);
    let eves: Vec<EveModel> = match &sweep.attack_strength {
        None => vec![eve],
        Some(list) => list.iter().map(|&s| with_strength(eve, s)).collect::<Result<_, _>>()?,
    };
    for e in &eves {
        e.validate().map_err(|e| CliError::Config(e.to_string()))?;
    }
    let kinds = sc.bound_kinds()?;

    let mut tasks = Vec::new();
    for &n in &ns {
        for &eps in &epss {
            for &e in &eves {
                for &kind in &kinds {
                    tasks.push((GridPoint { n, eps, eve: e }, kind));
                }
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Config(e.to_string()))?;
    let rows: Vec<Result<String, CliError>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(p, kind)| {
                let strength = strength_of(p.eve).map(|s| s.to_string()).unwrap_or_default();
                match bound_row(sc, &base, p, kind, sweep.thm1_m) {
                    Ok(r) => Ok(format!("{strength},{}", r.csv_row())),
                    Err(CliError::Compute(
                        e @ (Error::Precondition(_) | Error::CodeTooLarge { .. } | Error::InvalidParameter(_)),
                    )) => Ok(format!("# skipped {kind} at n={} eps={} attack_strength={strength}: {e}", p.n, p.eps)),
                    Err(e) => Err(e),
                }
            })
            .collect()
    });
    let mut out = bounds_header();
    out.push('\n');
    for row in rows {
        out.push_str(&row?);
        out.push('\n');
    }
    Ok(out)
}

pub fn cmd_simulate(sc: &Scenario, seed: Option<u64>) -> Result<String, CliError> {
    let cfg = sc.protocol_config(seed)?;
    Ok(run_session(&cfg)?.to_csv())
}

/// Verification report and whether every check passed.
pub fn cmd_verify(trials: usize, seed: u64, perturb_v: f64) -> Result<(String, bool), CliError> {
    if trials == 0 {
        return Err(CliError::Config("trials must be positive".into()));
    }
    let results = verify::run_all(trials, seed, perturb_v)?;
    let mut out = String::new();
    for r in &results {
        let _ = writeln!(out, "{r}");
    }
    let ok = results.iter().all(|r| r.passed());
    let _ = writeln!(out, "{}", if ok { "all checks passed" } else { "verification FAILED" });
    Ok((out, ok))
}

pub const CODES_HEADER: &str = "n,k,mean_weight,var_weight,penalty_factor,balanced";

fn stats_report(stats: &WeightStats, k: f64, balanced: Option<&[bool]>) -> String {
    let bal = balanced
        .map(|b| b.iter().map(|&x| if x { '1' } else { '0' }).collect::<String>())
        .unwrap_or_default();
    let mut out = format!(
        "{CODES_HEADER}\n{},{},{},{},{},{}\n",
        stats.n,
        k,
        stats.mean_weight,
        stats.var_weight,
        stats.penalty_factor(),
        bal
    );
    for (w, c) in &stats.enumerator {
        let _ = writeln!(out, "# weight {w} count {c}");
    }
    out
}

/// Weight statistics of a built-in code, or of a generator file if `name` is an existing file.
pub fn cmd_codes(name: &str) -> Result<String, CliError> {
    let path = Path::new(name);
    let code = if path.is_file() {
        BinaryLinearCode::load(path)
    } else {
        BinaryLinearCode::builtin(name)
    }
    .map_err(|e| CliError::Config(e.to_string()))?;
    cmd_codes_of(&code)
}

pub fn cmd_codes_of(code: &BinaryLinearCode) -> Result<String, CliError> {
    let stats = code.enumerate_weights()?;
    Ok(stats_report(&stats, code.k() as f64, Some(&code.is_position_balanced())))
}

/// Statistics of an externally supplied weight enumerator (`weight count` lines).
pub fn cmd_codes_enumerator(path: &Path) -> Result<String, CliError> {
    let stats = WeightStats::load_enumerator(path).map_err(|e| CliError::Config(e.to_string()))?;
    let k = (stats.codeword_count() as f64).log2();
    Ok(stats_report(&stats, k, None))
}
