//! Minimum distance, weight distributions and the MacWilliams transform.
//!
//! The minimum distance search enumerates messages by increasing weight `k`.
//! A message of weight `k` yields a codeword of weight `k + wt(m A)`, so once
//! `k` reaches the best weight found so far no heavier message can improve
//! on it. Rotating a message rotates both halves of its codeword, which
//! leaves the weight unchanged; only supports containing row 1 are visited.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{min_degree_bound, CirculantCode, Codeword, GeneratorVector};
use crate::kernel;

/// Smallest `A`-half weight among messages of weight `k`, with the
/// lexicographically smallest message support attaining it (1-based rows).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerWeightMinimum {
    pub k: usize,
    pub a_weight: usize,
    pub support: Vec<usize>,
}

impl PerWeightMinimum {
    pub fn codeword_weight(&self) -> usize {
        self.k + self.a_weight
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceResult {
    /// Minimum distance, or only an upper bound when `exact` is false.
    pub d: usize,
    pub witness: Codeword,
    /// Message support of `witness`, 1-based.
    pub witness_rows: Vec<usize>,
    /// One entry per message weight examined, ascending in `k`.
    pub per_weight_minima: Vec<PerWeightMinimum>,
    pub exact: bool,
}

fn level_minimum(alpha: &GeneratorVector, k: usize) -> Result<PerWeightMinimum> {
    let hits = kernel::first_hits(alpha, k, alpha.n())?;
    let (a_weight, support) = hits
        .into_iter()
        .enumerate()
        .find_map(|(a, hit)| hit.map(|s| (a, s)))
        .expect("every message weight 1..=n has at least one support");
    Ok(PerWeightMinimum {
        k,
        a_weight,
        support: support.into_iter().map(|j| j + 1).collect(),
    })
}

fn codeword_for_rows(alpha: &GeneratorVector, rows: &[usize]) -> Codeword {
    CirculantCode::new(alpha.clone())
        .combine_rows(rows)
        .expect("rows come from enumeration and are in range")
}

/// Exact minimum distance of `(I | A(alpha))`.
///
/// With `stop_below = Some(l)` the search stops after the first message
/// weight level at which a codeword of weight `< l` has been seen; the result
/// is then flagged inexact unless the search had finished anyway.
///
/// Among minimum-weight codewords the witness is the one whose message
/// support is lexicographically smallest.
pub fn min_distance(alpha: &GeneratorVector, stop_below: Option<usize>) -> Result<DistanceResult> {
    let n = alpha.n();
    let mut best = min_degree_bound(alpha);
    let mut best_rows = vec![1];
    let mut per_weight_minima = Vec::new();
    let mut k = 1;
    while k < best && k <= n {
        let level = level_minimum(alpha, k)?;
        let w = level.codeword_weight();
        if w < best || (w == best && level.support < best_rows) {
            best = w;
            best_rows = level.support.clone();
        }
        per_weight_minima.push(level);
        k += 1;
        if matches!(stop_below, Some(l) if best < l) {
            break;
        }
    }
    let exact = k >= best || k > n;
    Ok(DistanceResult {
        d: best,
        witness: codeword_for_rows(alpha, &best_rows),
        witness_rows: best_rows,
        per_weight_minima,
        exact,
    })
}

/// Per-weight minima for message weights `1..=min(max_k, n)`, with no
/// pruning: the full table a caller can compare row by row.
pub fn weight_profile(alpha: &GeneratorVector, max_k: usize) -> Result<Vec<PerWeightMinimum>> {
    (1..=max_k.min(alpha.n()))
        .map(|k| level_minimum(alpha, k))
        .collect()
}

/// Counts `A_0..A_L` of codewords by Hamming weight, `L` the code length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightDistribution {
    code_length: usize,
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn new(code_length: usize, counts: Vec<u64>) -> Result<Self> {
        if counts.len() != code_length + 1 {
            return Err(Error::InvalidDistribution(format!(
                "{} counts for code length {code_length}",
                counts.len()
            )));
        }
        Ok(Self {
            code_length,
            counts,
        })
    }

    pub fn code_length(&self) -> usize {
        self.code_length
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `A_i`; zero past the code length.
    pub fn get(&self, i: usize) -> u64 {
        self.counts.get(i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().map(|&c| BigUint::from(c)).sum()
    }

    /// Whether the counts add up to exactly `2^dimension`.
    pub fn sums_to_power_of_two(&self, dimension: usize) -> bool {
        self.total() == BigUint::one() << dimension
    }

    /// Smallest nonzero weight present, i.e. the minimum distance.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..=self.code_length).find(|&i| self.counts[i] > 0)
    }

    /// First weight at which the two distributions differ.
    pub fn first_difference(&self, other: &WeightDistribution) -> Option<usize> {
        let len = self.code_length.max(other.code_length);
        (0..=len).find(|&i| self.get(i) != other.get(i))
    }

    /// `weight,count` lines with a header, one line per weight `0..=L`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,count\n");
        for (i, c) in self.counts.iter().enumerate() {
            let _ = writeln!(out, "{i},{c}");
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct DistributionOptions {
    /// Largest `n` for which the full `2^n` sweep is attempted.
    pub max_n: usize,
}

impl Default for DistributionOptions {
    fn default() -> Self {
        Self { max_n: 32 }
    }
}

/// Hard ceiling: message indices and per-weight counters are `u64`.
const DISTRIBUTION_HARD_LIMIT: usize = 63;

pub fn weight_distribution(alpha: &GeneratorVector) -> Result<WeightDistribution> {
    weight_distribution_with(alpha, &DistributionOptions::default())
}

/// Exact weight distribution over all `2^n` messages.
pub fn weight_distribution_with(
    alpha: &GeneratorVector,
    options: &DistributionOptions,
) -> Result<WeightDistribution> {
    let n = alpha.n();
    let limit = options.max_n.min(DISTRIBUTION_HARD_LIMIT);
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    WeightDistribution::new(2 * n, kernel::distribution(alpha)?)
}

/// Renders `1+133z^8+2052z^10+...`, ascending, zero terms omitted.
pub fn enumerator_string(w: &WeightDistribution) -> String {
    let terms: Vec<String> = w
        .counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "z".to_string(),
            (1, c) => format!("{c}z"),
            (i, 1) => format!("z^{i}"),
            (i, c) => format!("{c}z^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Parses the polynomial text produced by [`enumerator_string`]. Whitespace
/// is ignored. The sum of the coefficients is not checked.
pub fn parse_enumerator(text: &str, code_length: usize) -> Result<WeightDistribution> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let malformed = || Error::MalformedEnumerator(text.to_string());
    let mut counts = vec![0u64; code_length + 1];
    for term in compact.split('+') {
        let (coeff, exp) = match term.split_once('z') {
            None => (term, 0),
            Some((c, rest)) => {
                let exp = match rest.strip_prefix('^') {
                    Some(e) => e.parse::<usize>().map_err(|_| malformed())?,
                    None if rest.is_empty() => 1,
                    None => return Err(malformed()),
                };
                (c, exp)
            }
        };
        let coeff = match coeff {
            "" if exp > 0 => 1,
            c => c.parse::<u64>().map_err(|_| malformed())?,
        };
        if exp > code_length || counts[exp] != 0 {
            return Err(malformed());
        }
        counts[exp] = coeff;
    }
    WeightDistribution::new(code_length, counts)
}

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut table = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for i in 0..=n {
        table[i][0] = BigInt::one();
        for j in 1..=i {
            table[i][j] = &table[i - 1][j - 1] + &table[i - 1][j];
        }
    }
    table
}

/// Weight distribution of the dual code,
/// `B_j = 2^-k * sum_i A_i K_j(i)` with the binary Krawtchouk polynomial
/// `K_j(i) = sum_t (-1)^t C(i,t) C(n-i, j-t)`, computed exactly.
pub fn macwilliams_dual(
    w: &WeightDistribution,
    n_len: usize,
    k_dim: usize,
) -> Result<WeightDistribution> {
    if w.code_length != n_len {
        return Err(Error::InvalidDistribution(format!(
            "distribution has length {}, expected {n_len}",
            w.code_length
        )));
    }
    if !w.sums_to_power_of_two(k_dim) {
        return Err(Error::InvalidDistribution(format!(
            "counts sum to {}, not 2^{k_dim}",
            w.total()
        )));
    }
    let c = binomials(n_len);
    let krawtchouk = |j: usize, i: usize| -> BigInt {
        (0..=j.min(i))
            .filter(|&t| j - t <= n_len - i)
            .map(|t| {
                let term = &c[i][t] * &c[n_len - i][j - t];
                if t % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    };
    let size = BigInt::one() << k_dim;
    let dual = (0..=n_len)
        .map(|j| {
            let sum: BigInt = (0..=n_len)
                .filter(|&i| w.counts[i] > 0)
                .map(|i| BigInt::from(w.counts[i]) * krawtchouk(j, i))
                .sum();
            if !(&sum % &size).is_zero() {
                return Err(Error::InvalidDistribution(format!(
                    "dual coefficient B_{j} is not an integer"
                )));
            }
            let b = sum / &size;
            if b.is_negative() {
                return Err(Error::InvalidDistribution(format!(
                    "dual coefficient B_{j} is negative"
                )));
            }
            b.to_u64().ok_or_else(|| {
                Error::InvalidDistribution(format!("dual coefficient B_{j} overflows u64"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    WeightDistribution::new(n_len, dual)
}
