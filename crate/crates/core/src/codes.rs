//! Binary linear codes over GF(2), exhaustive weight enumeration and ML decoding.
//!
//! Codewords are packed into a `u128`, bit `j` holding coordinate `j`, so block
//! lengths up to 128 are supported. Enumeration walks the message space in
//! Gray-code order, which costs one row XOR and one popcount per codeword.

use crate::entropy::LOG2_E;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

/// Largest dimension accepted by exhaustive enumeration and ML decoding.
pub const MAX_ENUMERATION_K: usize = 24;
pub const MAX_BLOCK_LENGTH: usize = 128;

pub type Word = u128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryLinearCode {
    k: usize,
    n: usize,
    rows: Vec<Word>,
}

/// Exact weight distribution of a code plus its first two moments.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightStats {
    pub n: usize,
    pub mean_weight: f64,
    pub var_weight: f64,
    pub enumerator: BTreeMap<usize, u128>,
}

impl WeightStats {
    pub fn from_enumerator(n: usize, enumerator: BTreeMap<usize, u128>) -> Result<Self> {
        let total: u128 = enumerator.values().sum();
        if total == 0 {
            return Err(Error::InvalidCode("empty weight enumerator".into()));
        }
        if let Some((&w, _)) = enumerator.iter().next_back() {
            if w > n {
                return Err(Error::InvalidCode(format!("weight {w} exceeds block length {n}")));
            }
        }
        let first: u128 = enumerator.iter().map(|(&w, &c)| c * w as u128).sum();
        let mean = first as f64 / total as f64;
        let var = enumerator
            .iter()
            .map(|(&w, &c)| c as f64 * (w as f64 - mean).powi(2))
            .sum::<f64>()
            / total as f64;
        Ok(WeightStats { n, mean_weight: mean, var_weight: var, enumerator })
    }

    pub fn codeword_count(&self) -> u128 {
        self.enumerator.values().sum()
    }

    /// `var(wt) / (2 n log e)`, the weight-variance penalty factor.
    pub fn penalty_factor(&self) -> f64 {
        self.var_weight / (2.0 * self.n as f64 * LOG2_E)
    }

    /// Parses a weight-enumerator file: an optional `n <length>` line, then
    /// `<weight> <count>` pairs; `#` starts a comment.
    pub fn parse_enumerator(text: &str, n: Option<usize>) -> Result<Self> {
        let mut declared = n;
        let mut enumerator = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("line {}: expected '<weight> <count>'", lineno + 1));
            match fields.as_slice() {
                ["n", len] => declared = Some(len.parse().map_err(|_| bad())?),
                [w, c] => {
                    let w: usize = w.parse().map_err(|_| bad())?;
                    let c: u128 = c.parse().map_err(|_| bad())?;
                    *enumerator.entry(w).or_insert(0) += c;
                }
                _ => return Err(bad()),
            }
        }
        let n = declared
            .or_else(|| enumerator.keys().next_back().copied())
            .ok_or_else(|| Error::Parse("no block length given".into()))?;
        Self::from_enumerator(n, enumerator)
    }

    pub fn load_enumerator(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse_enumerator(&text, None)
    }
}

impl BinaryLinearCode {
    /// Builds a code from generator rows given as bit vectors; rank must equal the row count.
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::InvalidCode("generator has no rows".into()));
        }
        let n = rows[0].len();
        if n == 0 || n > MAX_BLOCK_LENGTH {
            return Err(Error::InvalidCode(format!("block length {n} not in 1..={MAX_BLOCK_LENGTH}")));
        }
        if k > n {
            return Err(Error::InvalidCode(format!("k = {k} exceeds n = {n}")));
        }
        let mut packed = Vec::with_capacity(k);
        for r in rows {
            if r.len() != n {
                return Err(Error::InvalidCode("generator rows differ in length".into()));
            }
            packed.push(pack(r));
        }
        Self::from_words(k, n, packed)
    }

    fn from_words(k: usize, n: usize, rows: Vec<Word>) -> Result<Self> {
        if gf2_rank(&rows) != k {
            return Err(Error::InvalidCode("generator matrix is not full rank".into()));
        }
        Ok(BinaryLinearCode { k, n, rows })
    }

    /// `[1 1 … 1]`, a `(n, 1)` code.
    pub fn repetition(n: usize) -> Result<Self> {
        Self::from_rows(&[vec![true; n]])
    }

    /// Systematic `(7, 4)` Hamming code `[I₄ | P]`.
    pub fn hamming_7_4() -> Self {
        let rows = ["1000110", "0100101", "0010011", "0001111"];
        Self::parse_rows(&rows).expect("valid Hamming generator")
    }

    /// First-order Reed–Muller code `RM(1, m)`: length `2^m`, dimension `m + 1`.
    pub fn reed_muller_1(m: usize) -> Result<Self> {
        if m > 7 {
            return Err(Error::InvalidCode(format!("RM(1,{m}) exceeds block length {MAX_BLOCK_LENGTH}")));
        }
        let n = 1usize << m;
        let mut rows = vec![vec![true; n]];
        for i in 0..m {
            rows.push((0..n).map(|j| (j >> i) & 1 == 1).collect());
        }
        Self::from_rows(&rows)
    }

    /// Uniformly random full-rank `k × n` generator, reproducible per seed.
    pub fn random(k: usize, n: usize, seed: u64) -> Result<Self> {
        if k == 0 || k > n || n > MAX_BLOCK_LENGTH {
            return Err(Error::InvalidCode(format!("random({k},{n}) is not a valid shape")));
        }
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let mask = if n == 128 { Word::MAX } else { (1u128 << n) - 1 };
        loop {
            let rows: Vec<Word> = (0..k).map(|_| rng.gen::<Word>() & mask).collect();
            if gf2_rank(&rows) == k {
                return Ok(BinaryLinearCode { k, n, rows });
            }
        }
    }

    /// Resolves `repetition(n)`, `hamming_7_4`, `rm_1_<m>` or `random(k,n,seed)`.
    pub fn builtin(name: &str) -> Result<Self> {
        let name = name.trim();
        let args = |prefix: &str| -> Option<Vec<u64>> {
            let inner = name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            inner.split(',').map(|s| s.trim().parse().ok()).collect()
        };
        if name == "hamming_7_4" {
            return Ok(Self::hamming_7_4());
        }
        if let Some(m) = name.strip_prefix("rm_1_").and_then(|m| m.parse::<usize>().ok()) {
            return Self::reed_muller_1(m);
        }
        if let Some(a) = args("repetition") {
            if let [n] = a.as_slice() {
                return Self::repetition(*n as usize);
            }
        }
        if let Some(a) = args("random") {
            if let [k, n, seed] = a.as_slice() {
                return Self::random(*k as usize, *n as usize, *seed);
            }
        }
        Err(Error::Parse(format!("unknown code '{name}'")))
    }

    fn parse_rows(rows: &[&str]) -> Result<Self> {
        let bits = rows
            .iter()
            .map(|r| {
                r.chars()
                    .map(|ch| match ch {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(Error::Parse(format!("invalid generator character '{other}'"))),
                    })
                    .collect::<Result<Vec<bool>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&bits)
    }

    /// Plain-text generator: first line `k n`, then `k` lines of `n` characters in `{0,1}`.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty generator file".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|s| s.parse().map_err(|_| Error::Parse(format!("bad header '{header}'"))))
            .collect::<Result<_>>()?;
        let [k, n] = dims[..] else {
            return Err(Error::Parse(format!("header must be 'k n', got '{header}'")));
        };
        let rows: Vec<&str> = lines.collect();
        if rows.len() != k {
            return Err(Error::Parse(format!("expected {k} generator rows, found {}", rows.len())));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Parse(format!("row '{r}' does not have {n} columns")));
        }
        Self::parse_rows(&rows)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_text(&text)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.k, self.n);
        for &r in &self.rows {
            s.extend((0..self.n).map(|j| if bit(r, j) { '1' } else { '0' }));
            s.push('\n');
        }
        s
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `R_code = k / n`.
    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }

    pub fn generator_rows(&self) -> &[Word] {
        &self.rows
    }

    /// `m · G` for a packed message (bit `r` selects row `r`).
    pub fn encode_word(&self, message: Word) -> Word {
        self.rows
            .iter()
            .enumerate()
            .filter(|(r, _)| bit(message, *r))
            .fold(0, |acc, (_, &row)| acc ^ row)
    }

    pub fn encode(&self, message: &[bool]) -> Result<Vec<bool>> {
        if message.len() != self.k {
            return Err(Error::LengthMismatch { expected: self.k, found: message.len() });
        }
        Ok(unpack(self.encode_word(pack(message)), self.n))
    }

    fn check_enumerable(&self) -> Result<()> {
        if self.k > MAX_ENUMERATION_K {
            Err(Error::CodeTooLarge { k: self.k, limit: MAX_ENUMERATION_K })
        } else {
            Ok(())
        }
    }

    /// Visits `(message, codeword)` for all `2^k` messages in Gray-code order.
    pub fn for_each_codeword<F: FnMut(Word, Word)>(&self, mut f: F) -> Result<()> {
        self.check_enumerable()?;
        let (mut msg, mut cw) = (0 as Word, 0 as Word);
        f(msg, cw);
        for t in 1u64..(1u64 << self.k) {
            let r = t.trailing_zeros() as usize;
            msg ^= 1 << r;
            cw ^= self.rows[r];
            f(msg, cw);
        }
        Ok(())
    }

    /// Exact weight enumerator over all `2^k` codewords.
    pub fn enumerate_weights(&self) -> Result<WeightStats> {
        let mut counts = vec![0u128; self.n + 1];
        self.for_each_codeword(|_, cw| counts[cw.count_ones() as usize] += 1)?;
        let enumerator = counts
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c > 0)
            .collect();
        WeightStats::from_enumerator(self.n, enumerator)
    }

    /// Per coordinate: true iff the generator column is nonzero, in which case
    /// exactly half of the codewords carry a 1 there.
    pub fn is_position_balanced(&self) -> Vec<bool> {
        let support = self.rows.iter().fold(0, |acc, &r| acc | r);
        (0..self.n).map(|j| bit(support, j)).collect()
    }

    pub fn all_positions_balanced(&self) -> bool {
        self.is_position_balanced().into_iter().all(|b| b)
    }

    pub fn min_distance(&self) -> Result<usize> {
        let mut best = usize::MAX;
        self.for_each_codeword(|msg, cw| {
            if msg != 0 {
                best = best.min(cw.count_ones() as usize);
            }
        })?;
        Ok(best)
    }

    /// Message of the nearest codeword in Hamming distance; ties go to the smallest message index.
    pub fn ml_decode_word(&self, received: Word) -> Result<Word> {
        let mut best = (u32::MAX, 0 as Word);
        self.for_each_codeword(|msg, cw| {
            let d = (cw ^ received).count_ones();
            if (d, msg) < best {
                best = (d, msg);
            }
        })?;
        Ok(best.1)
    }

    pub fn ml_decode(&self, received: &[bool]) -> Result<Vec<bool>> {
        if received.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: received.len() });
        }
        Ok(unpack(self.ml_decode_word(pack(received))?, self.k))
    }
}

impl FromStr for BinaryLinearCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::builtin(s)
    }
}

#[inline]
pub fn bit(word: Word, j: usize) -> bool {
    (word >> j) & 1 == 1
}

pub fn pack(bits: &[bool]) -> Word {
    assert!(bits.len() <= 128, "at most 128 bits fit in a word");
    bits.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .fold(0, |acc, (j, _)| acc | (1 << j))
}

pub fn unpack(word: Word, len: usize) -> Vec<bool> {
    (0..len).map(|j| bit(word, j)).collect()
}

fn gf2_rank(rows: &[Word]) -> usize {
    let mut rows = rows.to_vec();
    let mut rank = 0;
    for col in 0..128 {
        let Some(pivot) = (rank..rows.len()).find(|&r| bit(rows[r], col)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && bit(*row, col) {
                *row ^= p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent enumeration: natural message order, codeword rebuilt from scratch.
    fn naive_enumerator(code: &BinaryLinearCode) -> BTreeMap<usize, u128> {
        let mut out = BTreeMap::new();
        for m in 0..(1u64 << code.k()) {
            let msg: Vec<bool> = (0..code.k()).map(|r| (m >> r) & 1 == 1).collect();
            let w = code.encode(&msg).unwrap().iter().filter(|&&b| b).count();
            *out.entry(w).or_insert(0) += 1;
        }
        out
    }

    #[test]
    fn encode_anchors() {
        let h = BinaryLinearCode::hamming_7_4();
        assert_eq!(h.encode(&[false; 4]).unwrap(), vec![false; 7]);
        let rep = BinaryLinearCode::repetition(3).unwrap();
        assert_eq!(rep.encode(&[true]).unwrap(), vec![true; 3]);
        for r in 0..4 {
            let mut msg = vec![false; 4];
            msg[r] = true;
            assert_eq!(pack(&h.encode(&msg).unwrap()), h.generator_rows()[r]);
        }
        assert_eq!(h.encode(&[true; 3]), Err(Error::LengthMismatch { expected: 4, found: 3 }));
    }

    #[test]
    fn reed_muller_1_4_weights() {
        let rm = BinaryLinearCode::reed_muller_1(4).unwrap();
        assert_eq!((rm.n(), rm.k()), (16, 5));
        let stats = rm.enumerate_weights().unwrap();
        let expected: BTreeMap<usize, u128> = [(0, 1), (8, 30), (16, 1)].into_iter().collect();
        assert_eq!(stats.enumerator, expected);
        assert_eq!(stats.mean_weight, 8.0);
        assert_eq!(stats.var_weight, 4.0);
        assert!((stats.penalty_factor() - 4.0 / (32.0 * LOG2_E)).abs() < 1e-15);
        assert!((stats.penalty_factor() - 0.0866).abs() < 1e-4);
    }

    #[test]
    fn repetition_weights() {
        for n in 1..=12 {
            let stats = BinaryLinearCode::repetition(n).unwrap().enumerate_weights().unwrap();
            let expected: BTreeMap<usize, u128> = [(0, 1), (n, 1)].into_iter().collect();
            assert_eq!(stats.enumerator, expected);
            assert!((stats.var_weight - (n * n) as f64 / 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn gray_enumeration_matches_naive_enumeration() {
        let codes = [
            BinaryLinearCode::hamming_7_4(),
            BinaryLinearCode::reed_muller_1(3).unwrap(),
            BinaryLinearCode::random(6, 11, 3).unwrap(),
            BinaryLinearCode::random(9, 20, 4).unwrap(),
        ];
        for code in &codes {
            let stats = code.enumerate_weights().unwrap();
            assert_eq!(stats.enumerator, naive_enumerator(code));
            assert_eq!(stats.codeword_count(), 1u128 << code.k());
            let recomputed = WeightStats::from_enumerator(code.n(), naive_enumerator(code)).unwrap();
            assert!((stats.mean_weight - recomputed.mean_weight).abs() < 1e-9);
            assert!((stats.var_weight - recomputed.var_weight).abs() < 1e-9);
        }
        let h: BTreeMap<usize, u128> = [(0, 1), (3, 7), (4, 7), (7, 1)].into_iter().collect();
        assert_eq!(BinaryLinearCode::hamming_7_4().enumerate_weights().unwrap().enumerator, h);
    }

    #[test]
    fn coordinates_are_zero_or_exactly_balanced() {
        for seed in 0..20 {
            let code = BinaryLinearCode::random(1 + seed as usize % 8, 12, seed).unwrap();
            let mut ones = vec![0u64; code.n()];
            code.for_each_codeword(|_, cw| {
                for (j, o) in ones.iter_mut().enumerate() {
                    *o += bit(cw, j) as u64;
                }
            })
            .unwrap();
            let balanced = code.is_position_balanced();
            for j in 0..code.n() {
                let half = 1u64 << (code.k() - 1);
                assert!(ones[j] == 0 || ones[j] == half);
                assert_eq!(balanced[j], ones[j] == half);
            }
        }
    }

    #[test]
    fn zero_column_is_unbalanced() {
        let code = BinaryLinearCode::from_text("2 4\n1010\n0110\n").unwrap();
        assert_eq!(code.is_position_balanced(), vec![true, true, true, false]);
        assert!(BinaryLinearCode::hamming_7_4().all_positions_balanced());
    }

    #[test]
    fn distinct_nonzero_columns_give_variance_n_over_4() {
        // pairwise-independent coordinates: wt is a sum of pairwise independent fair bits
        let rm = BinaryLinearCode::reed_muller_1(5).unwrap();
        let s = rm.enumerate_weights().unwrap();
        assert_eq!(s.var_weight, rm.n() as f64 / 4.0);
        let h = BinaryLinearCode::hamming_7_4().enumerate_weights().unwrap();
        assert_eq!(h.var_weight, 7.0 / 4.0);
    }

    #[test]
    fn hamming_decodes_every_single_error() {
        let h = BinaryLinearCode::hamming_7_4();
        assert_eq!(h.min_distance().unwrap(), 3);
        for m in 0..16u128 {
            let cw = h.encode_word(m);
            assert_eq!(h.ml_decode_word(cw).unwrap(), m);
            for j in 0..7 {
                assert_eq!(h.ml_decode_word(cw ^ (1 << j)).unwrap(), m);
            }
        }
    }

    #[test]
    fn repetition_corrects_below_half_distance() {
        let rep = BinaryLinearCode::repetition(5).unwrap();
        for m in [false, true] {
            let cw = rep.encode(&[m]).unwrap();
            for e in 0..32u32 {
                if e.count_ones() >= 3 {
                    continue;
                }
                let rx: Vec<bool> = cw.iter().enumerate().map(|(j, &b)| b ^ ((e >> j) & 1 == 1)).collect();
                assert_eq!(rep.ml_decode(&rx).unwrap(), vec![m]);
            }
        }
    }

    #[test]
    fn decoder_breaks_ties_toward_smallest_message() {
        let rep = BinaryLinearCode::repetition(2).unwrap();
        // 10 is at distance 1 from both 00 and 11
        assert_eq!(rep.ml_decode(&[true, false]).unwrap(), vec![false]);
    }

    #[test]
    fn builtin_names() {
        let rm = BinaryLinearCode::builtin("rm_1_4").unwrap();
        assert_eq!((rm.n(), rm.k()), (16, 5));
        assert_eq!(BinaryLinearCode::builtin("repetition(3)").unwrap().n(), 3);
        assert_eq!(BinaryLinearCode::builtin("hamming_7_4").unwrap().k(), 4);
        let a = BinaryLinearCode::builtin("random(5, 12, 99)").unwrap();
        assert_eq!(a, BinaryLinearCode::random(5, 12, 99).unwrap());
        assert_ne!(a, BinaryLinearCode::random(5, 12, 98).unwrap());
        assert!(BinaryLinearCode::builtin("golay").is_err());
    }

    #[test]
    fn text_format_round_trip_and_errors() {
        let code = BinaryLinearCode::random(4, 9, 1).unwrap();
        assert_eq!(BinaryLinearCode::from_text(&code.to_text()).unwrap(), code);
        assert!(BinaryLinearCode::from_text("2 3\n101\n").is_err());
        assert!(BinaryLinearCode::from_text("2 3\n101\n10\n").is_err());
        assert!(BinaryLinearCode::from_text("2 3\n101\n101\n").is_err()); // rank 1
        assert!(BinaryLinearCode::from_text("1 3\n1x1\n").is_err());
    }

    #[test]
    fn enumeration_refuses_large_k() {
        let code = BinaryLinearCode::random(25, 40, 0).unwrap();
        assert_eq!(code.enumerate_weights(), Err(Error::CodeTooLarge { k: 25, limit: 24 }));
        assert!(code.ml_decode(&[false; 40]).is_err());
    }

    #[test]
    fn enumerator_file_parsing() {
        let s = WeightStats::parse_enumerator("# rm(1,4)\nn 16\n0 1\n8 30\n16 1\n", None).unwrap();
        assert_eq!(s.var_weight, 4.0);
        assert_eq!(s.n, 16);
        assert!(WeightStats::parse_enumerator("0 1 2\n", None).is_err());
        assert!(WeightStats::parse_enumerator("n 4\n5 1\n", None).is_err());
    }
}
