use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// `T · x` over GF(2) with `T[i][j] = r[i − j + len(x) − 1]`; the diagonal
/// constants `r` are drawn from a generator seeded with `seed`.
pub fn toeplitz_hash(bits: &[bool], seed: u64, out_len: usize) -> Vec<bool> {
    if out_len == 0 {
        return Vec::new();
    }
    let n = bits.len();
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let r: Vec<bool> = (0..n + out_len - 1).map(|_| rng.gen()).collect();
    (0..out_len)
        .map(|i| {
            bits.iter()
                .enumerate()
                .filter(|(_, &x)| x)
                .fold(false, |acc, (j, _)| acc ^ r[i + n - 1 - j])
        })
        .collect()
}
