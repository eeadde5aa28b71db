//! Dense, unpacked reference computations. Nothing here touches the
//! library's packed kernels, pruning or symmetry reduction.

#![allow(dead_code)]

use rand::Rng;

/// `A[i][j] = a[(j - i) mod n]`, 0-based.
pub fn dense_matrix(a: &[u8]) -> Vec<Vec<u8>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| a[(j + n - i) % n]).collect())
        .collect()
}

/// `(m | m A)` by schoolbook matrix-vector product mod 2.
pub fn dense_encode(a: &[u8], m: &[u8]) -> Vec<u8> {
    let n = a.len();
    let mat = dense_matrix(a);
    let mut out = m.to_vec();
    for j in 0..n {
        let s: u32 = mat
            .iter()
            .zip(m)
            .map(|(row, &mi)| (mi & row[j]) as u32)
            .sum();
        out.push((s % 2) as u8);
    }
    out
}

fn message(bits: u64, n: usize) -> Vec<u8> {
    (0..n).map(|i| (bits >> i & 1) as u8).collect()
}

/// Weight distribution over every message, no shortcuts.
pub fn brute_distribution(a: &[u8]) -> Vec<u64> {
    let n = a.len();
    let mut counts = vec![0u64; 2 * n + 1];
    for bits in 0..1u64 << n {
        let c = dense_encode(a, &message(bits, n));
        counts[c.iter().map(|&b| b as usize).sum::<usize>()] += 1;
    }
    counts
}

/// Minimum weight over all `2^n - 1` nonzero messages.
pub fn brute_min_distance(a: &[u8]) -> usize {
    let n = a.len();
    (1..1u64 << n)
        .map(|bits| {
            dense_encode(a, &message(bits, n))
                .iter()
                .map(|&b| b as usize)
                .sum::<usize>()
        })
        .min()
        .unwrap()
}

pub fn to_bits_string(a: &[u8]) -> String {
    a.iter()
        .map(|b| b.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Random generator vector with zero first entry.
pub fn random_alpha<R: Rng>(rng: &mut R, n: usize) -> Vec<u8> {
    let mut a: Vec<u8> = (0..n).map(|_| rng.gen_range(0..2)).collect();
    a[0] = 0;
    a
}

/// Sum of binomial-weighted Krawtchouk terms in i128: independent of the
/// library's big-integer MacWilliams implementation. Valid for lengths
/// where the intermediate sums fit (length <= 40).
pub fn dual_distribution_i128(counts: &[u64], k_dim: usize) -> Vec<i128> {
    let len = counts.len() - 1;
    let binom = |n: usize, k: usize| -> i128 {
        if k > n {
            return 0;
        }
        (0..k).fold(1i128, |acc, t| acc * (n - t) as i128 / (t + 1) as i128)
    };
    (0..=len)
        .map(|j| {
            let s: i128 = (0..=len)
                .map(|i| {
                    let kr: i128 = (0..=j)
                        .map(|t| {
                            let sign = if t % 2 == 0 { 1 } else { -1 };
                            sign * binom(i, t) * binom(len - i, j - t)
                        })
                        .sum();
                    counts[i] as i128 * kr
                })
                .sum();
            assert_eq!(s % (1i128 << k_dim), 0, "non-integral dual coefficient");
            s >> k_dim
        })
        .collect()
}
