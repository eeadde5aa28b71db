//! Enumeration kernels over packed rows of the circulant block.
//!
//! Rows are packed into fixed-size word arrays so the inner loops are a
//! handful of XORs and popcounts. Only the `A` half is tracked: the identity
//! half of a codeword has weight equal to the message weight.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::GeneratorVector;

pub(crate) const MAX_WORDS: usize = 8;
pub(crate) const MAX_N: usize = 64 * MAX_WORDS;

type Block<const W: usize> = [u64; W];

#[inline(always)]
fn xor<const W: usize>(a: &Block<W>, b: &Block<W>) -> Block<W> {
    let mut out = [0u64; W];
    for i in 0..W {
        out[i] = a[i] ^ b[i];
    }
    out
}

#[inline(always)]
fn popcount<const W: usize>(a: &Block<W>) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}

fn pack<const W: usize>(alpha: &GeneratorVector) -> Vec<Block<W>> {
    (0..alpha.n())
        .map(|r| {
            let row = alpha.bits().rotate_right(r);
            let mut block = [0u64; W];
            block[..row.words().len()].copy_from_slice(row.words());
            block
        })
        .collect()
}

/// For each `A`-half weight `a` in `0..=max_a`, the lexicographically first
/// message support (0-based, sorted) of size `k` containing index 0 whose
/// codeword has that `A`-half weight.
pub(crate) type FirstHits = Vec<Option<Vec<usize>>>;

fn merge_hits(mut acc: FirstHits, other: FirstHits) -> FirstHits {
    for (slot, hit) in acc.iter_mut().zip(other) {
        if slot.is_none() {
            *slot = hit;
        }
    }
    acc
}

struct Level<'a, const W: usize> {
    rows: &'a [Block<W>],
    max_a: usize,
    hits: FirstHits,
    missing: usize,
}

impl<const W: usize> Level<'_, W> {
    fn visit(&mut self, start: usize, remaining: usize, acc: &Block<W>, support: &mut Vec<usize>) {
        let n = self.rows.len();
        if remaining == 0 {
            let a = popcount(acc);
            if a <= self.max_a && self.hits[a].is_none() {
                self.hits[a] = Some(support.clone());
                self.missing -= 1;
            }
            return;
        }
        for j in start..=n - remaining {
            if self.missing == 0 {
                return;
            }
            support.push(j);
            self.visit(j + 1, remaining - 1, &xor(acc, &self.rows[j]), support);
            support.pop();
        }
    }
}

fn first_hits_w<const W: usize>(alpha: &GeneratorVector, k: usize, max_a: usize) -> FirstHits {
    let rows = pack::<W>(alpha);
    let n = rows.len();
    let empty = || vec![None; max_a + 1];
    let run = |prefix: Vec<usize>, acc: Block<W>| {
        let mut level = Level {
            rows: &rows,
            max_a,
            hits: empty(),
            missing: max_a + 1,
        };
        let start = prefix.last().map_or(0, |&j| j + 1);
        let remaining = k - prefix.len();
        let mut support = prefix;
        level.visit(start, remaining, &acc, &mut support);
        level.hits
    };
    match k {
        0 => empty(),
        1 => run(vec![0], rows[0]),
        _ => (1..=n + 1 - k)
            .into_par_iter()
            .map(|s| run(vec![0, s], xor(&rows[0], &rows[s])))
            .collect::<Vec<_>>()
            .into_iter()
            .fold(empty(), merge_hits),
    }
}

fn distribution_w<const W: usize>(alpha: &GeneratorVector) -> Vec<u64> {
    let rows = pack::<W>(alpha);
    let n = rows.len();
    let chunk_bits = n.min(10);
    let chunk_len = 1u64 << (n - chunk_bits);
    (0..1u64 << chunk_bits)
        .into_par_iter()
        .map(|t| {
            let mut counts = vec![0u64; 2 * n + 1];
            let first = t * chunk_len;
            let mut gray = first ^ (first >> 1);
            let mut acc = [0u64; W];
            for (r, row) in rows.iter().enumerate() {
                if gray >> r & 1 == 1 {
                    acc = xor(&acc, row);
                }
            }
            let mut msg_weight = gray.count_ones() as usize;
            counts[msg_weight + popcount(&acc)] += 1;
            for i in first + 1..first + chunk_len {
                let bit = i.trailing_zeros() as usize;
                gray ^= 1 << bit;
                acc = xor(&acc, &rows[bit]);
                if gray >> bit & 1 == 1 {
                    msg_weight += 1;
                } else {
                    msg_weight -= 1;
                }
                counts[msg_weight + popcount(&acc)] += 1;
            }
            counts
        })
        .reduce(
            || vec![0u64; 2 * n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

macro_rules! dispatch {
    ($alpha:expr, $f:ident $(, $arg:expr)*) => {{
        let n = $alpha.n();
        match n.div_ceil(64) {
            1 => $f::<1>($alpha $(, $arg)*),
            2 => $f::<2>($alpha $(, $arg)*),
            3 => $f::<3>($alpha $(, $arg)*),
            4 => $f::<4>($alpha $(, $arg)*),
            5 => $f::<5>($alpha $(, $arg)*),
            6 => $f::<6>($alpha $(, $arg)*),
            7 => $f::<7>($alpha $(, $arg)*),
            8 => $f::<8>($alpha $(, $arg)*),
            _ => return Err(Error::TooLarge { n, limit: MAX_N }),
        }
    }};
}

pub(crate) fn first_hits(alpha: &GeneratorVector, k: usize, max_a: usize) -> Result<FirstHits> {
    Ok(dispatch!(alpha, first_hits_w, k, max_a))
}

/// Weight counts `A_0..A_{2n}` over all `2^n` messages, visited in Gray-code
/// order. Caller guarantees `n < 64`.
pub(crate) fn distribution(alpha: &GeneratorVector) -> Result<Vec<u64>> {
    assert!(alpha.n() < 64);
    Ok(dispatch!(alpha, distribution_w))
}
