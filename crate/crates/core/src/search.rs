//! Local search that removes "bad" ones from a generator vector.
//!
//! A codeword is bad when its weight is below the target distance. For each
//! bad weight the search keeps one certificate: the set of generator rows
//! whose sum is that codeword. A one at position `p` of the generator vector
//! is a bad element when, pooled over all certificates, the GF(2) sums
//! `c_i = sum_l a[j_l, j_i + p - 1]` contain more zeros than ones. The first
//! bad element in scan order `2..n` is cleared and the distance recomputed.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::bounds::{lookup, BoundsEntry, BoundsTable};
use crate::distance::min_distance;
use crate::error::{Error, Result};
use crate::gf2::{CirculantCode, CirculantMatrix, Codeword, GeneratorVector};
use crate::kernel;

/// A codeword of weight below the target together with the generator rows
/// (1-based, ascending) that sum to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BadCodewordCertificate {
    pub weight: usize,
    pub rows: Vec<usize>,
    pub codeword: Codeword,
}

/// One certificate per weight `w` in `d..target` for which a codeword of
/// weight `w` exists, ascending by weight.
///
/// For each weight the certificate uses the fewest rows possible and, among
/// those, the lexicographically smallest row set.
pub fn find_bad_codewords(
    alpha: &GeneratorVector,
    target: usize,
) -> Result<Vec<BadCodewordCertificate>> {
    let d = min_distance(alpha, None)?.d;
    if d >= target {
        return Err(Error::AlreadyMeetsTarget { d, target });
    }
    let n = alpha.n();
    let wanted = target - d;
    let mut found: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for k in 1..target.min(n + 1) {
        let hits = kernel::first_hits(alpha, k, target - 1 - k)?;
        for (a, hit) in hits.into_iter().enumerate() {
            if let Some(support) = hit {
                found
                    .entry(k + a)
                    .or_insert_with(|| support.into_iter().map(|j| j + 1).collect());
            }
        }
        if found.len() == wanted {
            break;
        }
    }
    let code = CirculantCode::new(alpha.clone());
    found
        .into_iter()
        .map(|(weight, rows)| {
            let codeword = code.combine_rows(&rows)?;
            debug_assert_eq!(codeword.weight(), weight);
            Ok(BadCodewordCertificate {
                weight,
                rows,
                codeword,
            })
        })
        .collect()
}

/// Pooled c-values for one position of the generator vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementScore {
    /// 1-based position `p`.
    pub position: usize,
    /// One sequence per scored certificate, `c_1..c_r`.
    pub c_values: Vec<Vec<u8>>,
    pub zeros: usize,
    pub ones: usize,
    pub is_bad: bool,
}

fn check_position(alpha: &GeneratorVector, p: usize) -> Result<()> {
    let n = alpha.n();
    if p == 0 || p > n {
        return Err(Error::IndexOutOfRange { index: p, n });
    }
    if p == 1 {
        return Err(Error::DiagonalPosition(p));
    }
    if !alpha.b(p) {
        return Err(Error::ZeroElement(p));
    }
    Ok(())
}

/// Scores the one at position `p` (1-based, `2..=n`) against `certs`.
///
/// Certificates whose rows do not all carry `b_p` at column `j + p - 1` are
/// skipped; for circulant rows that column always holds `b_p`.
pub fn score_element(
    alpha: &GeneratorVector,
    p: usize,
    certs: &[BadCodewordCertificate],
) -> Result<ElementScore> {
    check_position(alpha, p)?;
    let n = alpha.n();
    let matrix = CirculantMatrix::new(alpha.clone());
    let column = |j: usize| (j + p - 2) % n + 1;
    let mut c_values = Vec::with_capacity(certs.len());
    for cert in certs {
        let rows = &cert.rows;
        if !rows.iter().all(|&j| matrix.entry(j, column(j))) {
            debug_assert!(false, "circulant row lost its shifted diagonal");
            continue;
        }
        let cs: Vec<u8> = rows
            .iter()
            .map(|&ji| {
                let col = column(ji);
                rows.iter().filter(|&&jl| matrix.entry(jl, col)).count() as u8 % 2
            })
            .collect();
        c_values.push(cs);
    }
    let ones = c_values.iter().flatten().filter(|&&c| c == 1).count();
    let zeros = c_values.iter().map(Vec::len).sum::<usize>() - ones;
    Ok(ElementScore {
        position: p,
        c_values,
        zeros,
        ones,
        is_bad: zeros > ones,
    })
}

/// `alpha` with the one at position `p` (1-based) cleared.
pub fn flip(alpha: &GeneratorVector, p: usize) -> Result<GeneratorVector> {
    check_position(alpha, p)?;
    let mut bits = alpha.bits().clone();
    bits.set(p - 1, false);
    GeneratorVector::new(bits)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Reached,
    Stalled,
    IterationCap,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Reached => "Reached",
            Outcome::Stalled => "Stalled",
            Outcome::IterationCap => "IterationCap",
        })
    }
}

/// One pass of the loop: the vector examined, its distance, the certificates
/// found, and the position cleared (none when the scan found no bad element).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchStep {
    pub iter: usize,
    pub alpha: GeneratorVector,
    pub d: usize,
    pub flipped: Option<usize>,
    pub certificates: Vec<BadCodewordCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchTrace {
    pub target: usize,
    pub steps: Vec<SearchStep>,
    pub outcome: Outcome,
    pub final_alpha: GeneratorVector,
    pub final_d: usize,
}

#[derive(Serialize)]
struct Summary<'a> {
    outcome: Outcome,
    target: usize,
    iterations: usize,
    final_d: usize,
    final_alpha: &'a GeneratorVector,
}

impl SearchTrace {
    /// `iter,flipped_pos,d,alpha` lines (`-` when nothing was flipped), then
    /// a JSON summary record on the last line.
    pub fn to_log(&self) -> String {
        let mut out = String::from("iter,flipped_pos,d,alpha\n");
        for s in &self.steps {
            let flipped = s.flipped.map_or("-".to_string(), |p| p.to_string());
            let _ = writeln!(out, "{},{},{},{}", s.iter, flipped, s.d, s.alpha);
        }
        let summary = Summary {
            outcome: self.outcome,
            target: self.target,
            iterations: self.steps.len(),
            final_d: self.final_d,
            final_alpha: &self.final_alpha,
        };
        out.push_str(&serde_json::to_string(&summary).expect("summary serializes"));
        out.push('\n');
        out
    }
}

/// Runs the bad-element search until the code reaches `target`, no bad
/// element remains, or `max_iters` flips have been made.
pub fn improve(alpha: &GeneratorVector, target: usize, max_iters: usize) -> Result<SearchTrace> {
    let mut current = alpha.clone();
    let mut steps = Vec::new();
    let mut outcome = Outcome::IterationCap;
    for iter in 1..=max_iters.max(1) {
        if min_distance(&current, Some(target))?.d >= target {
            outcome = Outcome::Reached;
            break;
        }
        let certificates = find_bad_codewords(&current, target)?;
        let d = certificates[0].weight;
        let mut flipped = None;
        for p in current.ones() {
            if score_element(&current, p, &certificates)?.is_bad {
                flipped = Some(p);
                break;
            }
        }
        steps.push(SearchStep {
            iter,
            alpha: current.clone(),
            d,
            flipped,
            certificates,
        });
        match flipped {
            Some(p) => current = flip(&current, p)?,
            None => {
                outcome = Outcome::Stalled;
                break;
            }
        }
    }
    let final_d = min_distance(&current, None)?.d;
    if outcome == Outcome::IterationCap && final_d >= target {
        outcome = Outcome::Reached;
    }
    Ok(SearchTrace {
        target,
        steps,
        outcome,
        final_alpha: current,
        final_d,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CodeClass {
    /// Meets the upper bound.
    Optimum,
    /// Meets the lower bound only.
    ProposedOptimum,
    Suboptimal,
}

impl fmt::Display for CodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeClass::Optimum => "Optimum",
            CodeClass::ProposedOptimum => "ProposedOptimum",
            CodeClass::Suboptimal => "Suboptimal",
        })
    }
}

impl CodeClass {
    pub fn of(d: usize, bounds: &BoundsEntry) -> Self {
        if d < bounds.lower {
            CodeClass::Suboptimal
        } else if d >= bounds.upper {
            CodeClass::Optimum
        } else {
            CodeClass::ProposedOptimum
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub class: CodeClass,
    pub d: usize,
    pub bounds: BoundsEntry,
}

/// Classifies `(I | A(alpha))` against the `[2n, n]` entry of `bounds`.
pub fn classify(alpha: &GeneratorVector, bounds: &BoundsTable) -> Result<Classification> {
    let n = alpha.n();
    let entry = *lookup(bounds, 2 * n, n)?;
    let d = min_distance(alpha, None)?.d;
    Ok(Classification {
        class: CodeClass::of(d, &entry),
        d,
        bounds: entry,
    })
}
