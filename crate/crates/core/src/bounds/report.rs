use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundKind {
    Thm1,
    Thm2,
    Cor1,
    Cor2,
}

impl BoundKind {
    pub const ALL: [BoundKind; 4] = [BoundKind::Thm1, BoundKind::Thm2, BoundKind::Cor1, BoundKind::Cor2];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Thm1 => "thm1",
            BoundKind::Thm2 => "thm2",
            BoundKind::Cor1 => "cor1",
            BoundKind::Cor2 => "cor2",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown bound '{s}'")))
    }
}

/// Where the Holevo quantity fed to a bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChiSource {
    /// Given directly by the caller.
    #[default]
    Supplied,
    /// `χ(𝓝)` maximized over channel inputs.
    Channel,
    /// Holevo quantity of the per-position bit ensemble.
    Ensemble,
}

impl ChiSource {
    pub fn name(self) -> &'static str {
        match self {
            ChiSource::Supplied => "supplied",
            ChiSource::Channel => "channel",
            ChiSource::Ensemble => "ensemble",
        }
    }
}

/// Individual contributions; the bound is `rate − holevo − v − weight_variance − g − remainder − sqrt`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BoundTerms {
    /// `n R_code`
    pub rate_term: f64,
    /// `n χ`
    pub holevo_term: f64,
    /// Relative-entropy-variance penalty.
    pub v_penalty: f64,
    /// `(D¹ − D⁰)² var(wt) / (2n log e)`; nonzero only for the weight-distribution bound.
    pub weight_variance_term: f64,
    /// `n g(ε)`
    pub g_term: f64,
    /// `C / n²`
    pub remainder: f64,
    /// Sub-block concentration term of the one-shot bound.
    pub sqrt_term: f64,
}

impl BoundTerms {
    pub fn total(&self) -> f64 {
        self.rate_term
            - self.holevo_term
            - self.v_penalty
            - self.weight_variance_term
            - self.g_term
            - self.remainder
            - self.sqrt_term
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BoundParams {
    pub n: usize,
    pub r_code: f64,
    pub chi: f64,
    /// Variance entering the penalty: the joint `V` for thm2/cor1, the single-letter `V⁰` for cor2.
    pub v: f64,
    pub c: f64,
    pub eps: f64,
    pub b_sub: Option<usize>,
    pub m: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub bound_bits: f64,
    pub terms: BoundTerms,
    pub params: BoundParams,
    pub chi_source: ChiSource,
    /// Set when a divergence diverged; the bound is then reported as 0.
    pub infinite_divergence: bool,
    pub caveat: Option<String>,
}

pub(crate) const REMAINDER_CAVEAT: &str =
    "Taylor remainder constant C is user supplied; C = 0 omits the remainder";

impl BoundReport {
    pub(crate) fn from_terms(kind: BoundKind, terms: BoundTerms, params: BoundParams) -> Self {
        let caveat = (kind != BoundKind::Thm1).then(|| REMAINDER_CAVEAT.to_string());
        BoundReport {
            kind,
            bound_bits: terms.total(),
            terms,
            params,
            chi_source: ChiSource::Supplied,
            infinite_divergence: false,
            caveat,
        }
    }

    pub(crate) fn infinite(kind: BoundKind, params: BoundParams) -> Self {
        BoundReport {
            kind,
            bound_bits: 0.0,
            terms: BoundTerms::default(),
            params,
            chi_source: ChiSource::Supplied,
            infinite_divergence: true,
            caveat: Some("a conditional-state divergence is infinite; no key can be certified".into()),
        }
    }

    pub fn with_chi_source(mut self, source: ChiSource) -> Self {
        self.chi_source = source;
        self
    }

    /// Appends to any existing caveat.
    pub fn add_caveat(&mut self, text: &str) {
        self.caveat = Some(match self.caveat.take() {
            Some(old) => format!("{old}; {text}"),
            None => text.to_string(),
        });
    }

    pub fn csv_header() -> &'static str {
        "bound,n,R_code,chi,chi_source,V,C,eps,B_sub,m,bound_bits,rate_term,holevo_term,v_penalty,weight_variance_term,g_term,remainder,sqrt_term,infinite_divergence,caveat"
    }

    pub fn csv_row(&self) -> String {
        let p = &self.params;
        let t = &self.terms;
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},\"{}\"",
            self.kind,
            p.n,
            p.r_code,
            p.chi,
            self.chi_source.name(),
            p.v,
            p.c,
            p.eps,
            opt(p.b_sub),
            opt(p.m),
            self.bound_bits,
            t.rate_term,
            t.holevo_term,
            t.v_penalty,
            t.weight_variance_term,
            t.g_term,
            t.remainder,
            t.sqrt_term,
            self.infinite_divergence,
            self.caveat.as_deref().unwrap_or_default().replace('"', "\"\"")
        )
    }
}
