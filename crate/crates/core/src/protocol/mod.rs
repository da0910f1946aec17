//! Monte-Carlo simulation of the two-way block protocol: Bob sends BB84
//! states, Alice encodes a padded codeword with `U_Y` flips and returns them,
//! both sides estimate the channel from pilots, and each completed block
//! refreshes the key pool through privacy amplification of the codeword.
//!
//! Eve's probes act on every qubit in both directions. Their effect on the
//! qubits is simulated exactly; what they reveal is accounted for only through
//! the key-length bound evaluated at the estimated error rates.

mod hash;
mod pool;

pub use hash::toeplitz_hash;
pub use pool::{KeyPool, PoolEntry};

use crate::bounds::{
    bb84_preparation, cor1_bound, eve_bit_states_from_probes, extractable_key_length, lemma1_v,
    thm2_bound, BoundKind, BoundReport, ChiSource, CodedCQState, EveModel,
};
use crate::codes::{BinaryLinearCode, WeightStats, MAX_ENUMERATION_K};
use crate::error::{Error, Result};
use crate::quantum::{
    bb84_amplitudes, bb84_state, standard_channel, u_y, Basis, ChannelKind, CMatrix, KrausChannel,
};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::collections::HashMap;
use std::fmt::Write as _;

#[derive(Debug, Clone)]
pub struct ProtocolConfig {
    pub code: BinaryLinearCode,
    /// Pilot qubits per pass.
    pub pilots: usize,
    /// Secret message bits per block; the remaining `k − message_bits` code
    /// inputs are filled with private random bits.
    pub message_bits: usize,
    pub forward_channel: KrausChannel,
    pub backward_channel: KrausChannel,
    pub eve: EveModel,
    pub qber_abort_forward: f64,
    pub qber_abort_backward: f64,
    /// Smoothing parameter of the min-entropy bound.
    pub eps: f64,
    pub eps_hash: f64,
    /// Remainder constant of the second-order bounds.
    pub c: f64,
    /// Bound used for the key length: `Cor1` or `Thm2`.
    pub bound: BoundKind,
    pub blocks: usize,
    pub initial_pool_bits: usize,
    pub max_retransmissions: usize,
    pub seed: u64,
}

impl ProtocolConfig {
    /// Noiseless links, no eavesdropper, all message bits used, default thresholds.
    pub fn new(code: BinaryLinearCode, pilots: usize, seed: u64) -> Self {
        let k = code.k();
        ProtocolConfig {
            code,
            pilots,
            message_bits: k,
            forward_channel: KrausChannel::identity(2),
            backward_channel: KrausChannel::identity(2),
            eve: EveModel::None,
            qber_abort_forward: 0.11,
            qber_abort_backward: 0.11,
            eps: 0.5,
            eps_hash: 0.5,
            c: 0.0,
            bound: BoundKind::Cor1,
            blocks: 1,
            initial_pool_bits: k,
            max_retransmissions: 3,
            seed,
        }
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        if self.pilots == 0 {
            return bad("at least one pilot qubit is required".into());
        }
        for (name, t) in [("forward", self.qber_abort_forward), ("backward", self.qber_abort_backward)] {
            if !(0.0..=0.5).contains(&t) {
                return bad(format!("{name} abort threshold {t} outside [0, 0.5]"));
            }
        }
        if self.message_bits > self.code.k() {
            return bad(format!("message_bits = {} exceeds code dimension {}", self.message_bits, self.code.k()));
        }
        if self.code.k() > MAX_ENUMERATION_K {
            return Err(Error::CodeTooLarge { k: self.code.k(), limit: MAX_ENUMERATION_K });
        }
        for ch in [&self.forward_channel, &self.backward_channel] {
            if ch.input_dim() != 2 || ch.output_dim() != 2 {
                return Err(Error::InvalidChannel("protocol channels must act on qubits".into()));
            }
        }
        self.eve.validate()?;
        if !(self.eps > 0.0 && self.eps < 1.0) {
            return bad(format!("eps = {} outside (0, 1)", self.eps));
        }
        if !(self.eps_hash > 0.0 && self.eps_hash <= 1.0) {
            return bad(format!("eps_hash = {} outside (0, 1]", self.eps_hash));
        }
        if !(self.c.is_finite() && self.c >= 0.0) {
            return bad(format!("C = {} must be non-negative", self.c));
        }
        match self.bound {
            BoundKind::Cor1 if !self.code.all_positions_balanced() => Err(Error::Precondition(
                "the weight-distribution bound needs a code with no all-zero generator column".into(),
            )),
            BoundKind::Cor1 | BoundKind::Thm2 => Ok(()),
            other => Err(Error::Unsupported(format!("bound '{other}' cannot drive the key length"))),
        }
    }
}

/// A qubit as Bob prepared it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PreparedQubit {
    pub basis: Basis,
    pub bit: bool,
}

impl PreparedQubit {
    pub fn matrix(&self) -> CMatrix {
        bb84_state(self.basis, self.bit).into_matrix()
    }
}

/// Uniform draws from `{|0⟩, |1⟩, |+⟩, |−⟩}`.
pub fn prepare_qubits<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<PreparedQubit> {
    (0..count)
        .map(|_| {
            let basis = if rng.gen() { Basis::X } else { Basis::Z };
            PreparedQubit { basis, bit: rng.gen() }
        })
        .collect()
}

/// Samples a measurement of `rho` in `basis`; returns the outcome bit.
pub fn measure<R: Rng + ?Sized>(rng: &mut R, rho: &CMatrix, basis: Basis) -> bool {
    let v = bb84_amplitudes(basis, true);
    let p1 = (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .map(|(i, j)| (v[i].conj() * rho[(i, j)] * v[j]).re)
        .sum::<f64>();
    rng.gen::<f64>() < p1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Proceed,
    Retransmit,
}

fn decide(qber: Option<f64>, threshold: f64) -> Decision {
    match qber {
        Some(q) if q <= threshold => Decision::Proceed,
        _ => Decision::Retransmit,
    }
}

/// Pilot error estimate: `errors / checked`, `None` when nothing could be checked.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PilotCheck {
    pub checked: usize,
    pub errors: usize,
}

impl PilotCheck {
    pub fn qber(&self) -> Option<f64> {
        (self.checked > 0).then(|| self.errors as f64 / self.checked as f64)
    }
}

#[derive(Debug, Clone)]
pub struct ForwardResult {
    /// States of all `n + p` qubits as received by Alice.
    pub qubits: Vec<CMatrix>,
    /// Sorted pilot positions.
    pub pilot_positions: Vec<usize>,
    pub pilots: PilotCheck,
    pub decision: Decision,
}

impl ForwardResult {
    pub fn qber(&self) -> Option<f64> {
        self.pilots.qber()
    }
}

/// Sends Bob's qubits through `link`; Alice measures `p` random ones in a random
/// basis and the error rate is taken over pilots whose basis matched Bob's.
pub fn forward_phase<R: Rng + ?Sized>(
    cfg: &ProtocolConfig,
    link: &KrausChannel,
    rng: &mut R,
    prepared: &[PreparedQubit],
) -> Result<ForwardResult> {
    let qubits = prepared
        .iter()
        .map(|q| link.apply_matrix(&q.matrix()))
        .collect::<Result<Vec<_>>>()?;
    let mut pilot_positions = sample(rng, prepared.len(), cfg.pilots).into_vec();
    pilot_positions.sort_unstable();
    let mut pilots = PilotCheck { checked: 0, errors: 0 };
    for &pos in &pilot_positions {
        let basis = if rng.gen() { Basis::X } else { Basis::Z };
        let outcome = measure(rng, &qubits[pos], basis);
        if basis == prepared[pos].basis {
            pilots.checked += 1;
            pilots.errors += (outcome != prepared[pos].bit) as usize;
        }
    }
    let decision = decide(pilots.qber(), cfg.qber_abort_forward);
    Ok(ForwardResult { qubits, pilot_positions, pilots, decision })
}

#[derive(Debug, Clone)]
pub struct EncodeResult {
    /// `K^mix`, drawn from the pool.
    pub pad: Vec<bool>,
    /// `L`: `W ⊕ K^mix` followed by the private filler bits; the code input.
    pub padded: Vec<bool>,
    pub codeword: Vec<bool>,
    /// Qubits to send back, payload encoded and fresh pilots in the pilot slots.
    pub qubits: Vec<CMatrix>,
    pub backward_pilots: Vec<(usize, PreparedQubit)>,
}

/// Pads `message` with pool bits, encodes it and flips payload qubit `j` with `U_Y` iff `c_j = 1`.
pub fn encode_block<R: Rng + ?Sized>(
    cfg: &ProtocolConfig,
    pool: &mut KeyPool,
    block: usize,
    rng: &mut R,
    message: &[bool],
    forward: &ForwardResult,
) -> Result<EncodeResult> {
    if message.len() != cfg.message_bits {
        return Err(Error::LengthMismatch { expected: cfg.message_bits, found: message.len() });
    }
    let pad = pool.take(block, message.len())?;
    let mut padded: Vec<bool> = message.iter().zip(&pad).map(|(w, k)| w ^ k).collect();
    padded.extend((message.len()..cfg.code.k()).map(|_| rng.gen::<bool>()));
    let codeword = cfg.code.encode(&padded)?;

    let uy = u_y();
    let mut qubits = forward.qubits.clone();
    let mut payload = codeword.iter();
    let mut backward_pilots = Vec::with_capacity(cfg.pilots);
    let mut pilot_slots = forward.pilot_positions.iter().peekable();
    for (pos, q) in qubits.iter_mut().enumerate() {
        if pilot_slots.peek() == Some(&&pos) {
            pilot_slots.next();
            let fresh = prepare_qubits(rng, 1)[0];
            *q = fresh.matrix();
            backward_pilots.push((pos, fresh));
        } else if *payload.next().expect("n payload slots") {
            *q = &uy * &*q * uy.adjoint();
        }
    }
    Ok(EncodeResult { pad, padded, codeword, qubits, backward_pilots })
}

#[derive(Debug, Clone)]
pub struct BackwardResult {
    /// Payload qubits as received by Bob, pilots removed.
    pub payload: Vec<CMatrix>,
    pub pilots: PilotCheck,
    pub decision: Decision,
}

impl BackwardResult {
    pub fn qber(&self) -> Option<f64> {
        self.pilots.qber()
    }
}

/// Sends Alice's qubits through `link`; Alice reveals the pilot positions and
/// states, Bob measures them in the announced basis.
pub fn backward_phase<R: Rng + ?Sized>(
    cfg: &ProtocolConfig,
    link: &KrausChannel,
    rng: &mut R,
    encoded: &EncodeResult,
) -> Result<BackwardResult> {
    let mut received = encoded
        .qubits
        .iter()
        .map(|q| link.apply_matrix(q).map(Some))
        .collect::<Result<Vec<_>>>()?;
    let mut pilots = PilotCheck { checked: 0, errors: 0 };
    for (pos, prep) in &encoded.backward_pilots {
        let q = received[*pos].take().expect("pilot slot");
        pilots.checked += 1;
        pilots.errors += (measure(rng, &q, prep.basis) != prep.bit) as usize;
    }
    let payload = received.into_iter().flatten().collect();
    let decision = decide(pilots.qber(), cfg.qber_abort_backward);
    Ok(BackwardResult { payload, pilots, decision })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub flips: Vec<bool>,
    /// `L̂`
    pub padded: Vec<bool>,
    pub codeword: Vec<bool>,
    /// `Ŵ = L̂ ⊕ K^mix` on the message positions.
    pub message: Vec<bool>,
}

/// Bob measures each payload qubit in its preparation basis; a flip reads as
/// bit 1. The flips are ML-decoded and the pad removed.
pub fn decode_block<R: Rng + ?Sized>(
    cfg: &ProtocolConfig,
    rng: &mut R,
    payload: &[CMatrix],
    prepared: &[PreparedQubit],
    pad: &[bool],
) -> Result<DecodeResult> {
    if payload.len() != cfg.n() || prepared.len() != cfg.n() {
        return Err(Error::LengthMismatch { expected: cfg.n(), found: payload.len().min(prepared.len()) });
    }
    let flips: Vec<bool> = payload
        .iter()
        .zip(prepared)
        .map(|(q, p)| measure(rng, q, p.basis) != p.bit)
        .collect();
    let padded = cfg.code.ml_decode(&flips)?;
    let codeword = cfg.code.encode(&padded)?;
    let message = padded.iter().zip(pad).map(|(l, k)| l ^ k).collect();
    Ok(DecodeResult { flips, padded, codeword, message })
}

/// Hashes the codeword down to `key_len` bits with a public Toeplitz seed.
pub fn privacy_amplify(codeword: &[bool], key_len: usize, seed: u64) -> Vec<bool> {
    toeplitz_hash(codeword, seed, key_len.min(codeword.len()))
}

/// Key-length evaluation at an estimated pair of pilot error rates.
///
/// Each direction's error rate `Q` is mapped to a depolarizing probe with
/// parameter `min(2Q, 1)` whose environment is handed to Eve.
#[derive(Debug, Clone)]
pub struct KeyRateModel {
    code: BinaryLinearCode,
    kind: BoundKind,
    stats: Option<WeightStats>,
    c: f64,
    eps: f64,
    eps_hash: f64,
    cache: HashMap<(u64, u64), (BoundReport, usize)>,
}

impl KeyRateModel {
    pub fn new(cfg: &ProtocolConfig) -> Result<Self> {
        let stats = match cfg.bound {
            BoundKind::Cor1 => Some(cfg.code.enumerate_weights()?),
            _ => None,
        };
        Ok(KeyRateModel {
            code: cfg.code.clone(),
            kind: cfg.bound,
            stats,
            c: cfg.c,
            eps: cfg.eps,
            eps_hash: cfg.eps_hash,
            cache: HashMap::new(),
        })
    }

    pub fn evaluate(&self, qber_forward: f64, qber_backward: f64) -> Result<BoundReport> {
        let probe = |q: f64| standard_channel(ChannelKind::Depolarizing, (2.0 * q).clamp(0.0, 1.0));
        let bits = eve_bit_states_from_probes(&probe(qber_forward)?, &probe(qber_backward)?, &bb84_preparation())?;
        let chi = bits.holevo();
        let (n, rate) = (self.code.n(), self.code.rate());
        let report = match (self.kind, &self.stats) {
            (BoundKind::Cor1, Some(stats)) => {
                cor1_bound(stats, &self.code.is_position_balanced(), rate, chi, &bits, self.c, self.eps)?
            }
            _ => {
                let v = lemma1_v(&CodedCQState::homogeneous(self.code.clone(), &bits)?)?;
                thm2_bound(n, rate, chi, v, self.c, self.eps)?
            }
        };
        Ok(report.with_chi_source(ChiSource::Ensemble))
    }

    pub fn key_length(&mut self, qber_forward: f64, qber_backward: f64) -> Result<usize> {
        let key = (qber_forward.to_bits(), qber_backward.to_bits());
        if let Some((_, l)) = self.cache.get(&key) {
            return Ok(*l);
        }
        let report = self.evaluate(qber_forward, qber_backward)?;
        let l = extractable_key_length(report.bound_bits, self.eps_hash)?.min(self.code.n());
        self.cache.insert(key, (report, l));
        Ok(l)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Completed,
    Retransmit,
    Abort,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Completed => "completed",
            Outcome::Retransmit => "retransmit",
            Outcome::Abort => "abort",
        }
    }
}

/// One attempt at a block; retransmitted blocks produce several rows with the same index.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockTranscript {
    pub block: usize,
    pub attempt: usize,
    pub outcome: Outcome,
    pub qber_forward: Option<f64>,
    pub qber_backward: Option<f64>,
    pub decode_correct: bool,
    pub key_consumed: usize,
    pub key_produced: usize,
    /// Alice's pool size after the attempt.
    pub pool_after: usize,
    /// `W`
    pub message: Vec<bool>,
    /// `L`
    pub padded: Vec<bool>,
    /// `Ŵ`
    pub estimate: Vec<bool>,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SessionSummary {
    pub blocks_started: usize,
    pub completed: usize,
    pub retransmissions: usize,
    pub aborts: usize,
    pub decode_errors: usize,
    /// Empirical reliability failure rate over completed blocks.
    pub error_rate: f64,
    pub initial_pool: usize,
    pub final_pool: usize,
    pub consumed: usize,
    pub produced: usize,
    /// Whether Alice's and Bob's pools hold identical bits at the end.
    pub pools_agree: bool,
    pub halted_at: Option<usize>,
    pub eps: f64,
    pub eps_hash: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SessionResult {
    pub transcripts: Vec<BlockTranscript>,
    pub summary: SessionSummary,
}

pub const TRANSCRIPT_HEADER: &str =
    "block,outcome,qber_fwd,qber_bwd,decode_correct,key_consumed,key_produced,pool_after";

impl SessionResult {
    /// Transcript CSV with a trailing `#` summary row.
    pub fn to_csv(&self) -> String {
        let opt = |q: Option<f64>| q.map(|v| v.to_string()).unwrap_or_default();
        let mut out = String::from(TRANSCRIPT_HEADER);
        out.push('\n');
        for t in &self.transcripts {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                t.block,
                t.outcome.name(),
                opt(t.qber_forward),
                opt(t.qber_backward),
                t.decode_correct,
                t.key_consumed,
                t.key_produced,
                t.pool_after
            );
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "# blocks={} completed={} retransmissions={} aborts={} decode_errors={} error_rate={} initial_pool={} final_pool={} consumed={} produced={} net_key={} pools_agree={} halted_at={} eps={} eps_hash={}",
            s.blocks_started,
            s.completed,
            s.retransmissions,
            s.aborts,
            s.decode_errors,
            s.error_rate,
            s.initial_pool,
            s.final_pool,
            s.consumed,
            s.produced,
            s.produced as i64 - s.consumed as i64,
            s.pools_agree,
            s.halted_at.map(|b| b.to_string()).unwrap_or_else(|| "none".into()),
            s.eps,
            s.eps_hash
        );
        out
    }
}

struct Session<'a> {
    cfg: &'a ProtocolConfig,
    forward: KrausChannel,
    backward: KrausChannel,
    model: KeyRateModel,
    alice: KeyPool,
    bob: KeyPool,
    rng: ChaCha20Rng,
}

impl Session<'_> {
    fn attempt(&mut self, block: usize, attempt: usize) -> Result<BlockTranscript> {
        let cfg = self.cfg;
        let mut t = BlockTranscript {
            block,
            attempt,
            outcome: Outcome::Retransmit,
            qber_forward: None,
            qber_backward: None,
            decode_correct: false,
            key_consumed: 0,
            key_produced: 0,
            pool_after: 0,
            message: Vec::new(),
            padded: Vec::new(),
            estimate: Vec::new(),
            reason: None,
        };
        let rng = &mut self.rng;
        let prepared = prepare_qubits(rng, cfg.n() + cfg.pilots);
        let fwd = forward_phase(cfg, &self.forward, rng, &prepared)?;
        t.qber_forward = fwd.qber();
        if fwd.decision == Decision::Retransmit {
            t.reason = Some("forward error rate above threshold".into());
            t.pool_after = self.alice.available();
            return Ok(t);
        }

        t.message = (0..cfg.message_bits).map(|_| rng.gen()).collect();
        let enc = match encode_block(cfg, &mut self.alice, block, rng, &t.message, &fwd) {
            Ok(enc) => enc,
            Err(e @ Error::PoolUnderflow { .. }) => {
                t.outcome = Outcome::Abort;
                t.reason = Some(e.to_string());
                t.pool_after = self.alice.available();
                return Ok(t);
            }
            Err(e) => return Err(e),
        };
        let bob_pad = self.bob.take(block, cfg.message_bits)?;
        t.key_consumed = enc.pad.len();
        t.padded = enc.padded.clone();

        let bwd = backward_phase(cfg, &self.backward, rng, &enc)?;
        t.qber_backward = bwd.qber();
        if bwd.decision == Decision::Retransmit {
            t.reason = Some("backward error rate above threshold".into());
            t.pool_after = self.alice.available();
            return Ok(t);
        }

        let payload_prep: Vec<PreparedQubit> = prepared
            .iter()
            .enumerate()
            .filter(|(i, _)| fwd.pilot_positions.binary_search(i).is_err())
            .map(|(_, p)| *p)
            .collect();
        let dec = decode_block(cfg, rng, &bwd.payload, &payload_prep, &bob_pad)?;
        t.decode_correct = dec.message == t.message;
        t.estimate = dec.message;

        let (qf, qb) = (t.qber_forward.unwrap_or(0.0), t.qber_backward.unwrap_or(0.0));
        let len = self.model.key_length(qf, qb)?;
        let seed = rng.gen();
        let alice_key = privacy_amplify(&enc.codeword, len, seed);
        let bob_key = privacy_amplify(&dec.codeword, len, seed);
        self.alice.add(block, &alice_key);
        self.bob.add(block, &bob_key);
        t.key_produced = alice_key.len();
        t.pool_after = self.alice.available();
        t.outcome = Outcome::Completed;
        Ok(t)
    }
}

/// Runs `cfg.blocks` sequential blocks. A block is retried on a threshold
/// violation up to `max_retransmissions` times and aborted after that; an
/// abort (including a pool shortfall) ends the session.
pub fn run_session(cfg: &ProtocolConfig) -> Result<SessionResult> {
    cfg.validate()?;
    let probe = cfg.eve.probe()?;
    let mut rng = ChaCha20Rng::seed_from_u64(cfg.seed);
    let initial: Vec<bool> = (0..cfg.initial_pool_bits).map(|_| rng.gen()).collect();
    let mut s = Session {
        cfg,
        forward: probe.then(&cfg.forward_channel)?,
        backward: probe.then(&cfg.backward_channel)?,
        model: KeyRateModel::new(cfg)?,
        alice: KeyPool::new(initial.clone()),
        bob: KeyPool::new(initial),
        rng,
    };
    let mut transcripts = Vec::new();
    let mut halted_at = None;
    let mut blocks_started = 0;
    'blocks: for block in 0..cfg.blocks {
        blocks_started += 1;
        for attempt in 0..=cfg.max_retransmissions {
            let mut t = s.attempt(block, attempt)?;
            if t.outcome == Outcome::Retransmit && attempt == cfg.max_retransmissions {
                t.outcome = Outcome::Abort;
                let why = t.reason.take().unwrap_or_default();
                t.reason = Some(format!("retransmission limit reached ({why})"));
            }
            let outcome = t.outcome;
            transcripts.push(t);
            match outcome {
                Outcome::Completed => continue 'blocks,
                Outcome::Abort => {
                    halted_at = Some(block);
                    break 'blocks;
                }
                Outcome::Retransmit => {}
            }
        }
    }

    let count = |o: Outcome| transcripts.iter().filter(|t| t.outcome == o).count();
    let completed = count(Outcome::Completed);
    let decode_errors = transcripts
        .iter()
        .filter(|t| t.outcome == Outcome::Completed && !t.decode_correct)
        .count();
    let summary = SessionSummary {
        blocks_started,
        completed,
        retransmissions: count(Outcome::Retransmit),
        aborts: count(Outcome::Abort),
        decode_errors,
        error_rate: if completed > 0 { decode_errors as f64 / completed as f64 } else { 0.0 },
        initial_pool: s.alice.initial(),
        final_pool: s.alice.available(),
        consumed: s.alice.total_consumed(),
        produced: s.alice.total_produced(),
        pools_agree: s.alice.contents().eq(s.bob.contents()),
        halted_at,
        eps: cfg.eps,
        eps_hash: cfg.eps_hash,
    };
    debug_assert!(s.alice.reconciles());
    Ok(SessionResult { transcripts, summary })
}
