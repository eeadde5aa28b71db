//! Generator vectors, circulant matrices and the `(I | A)` code they define.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bits::BitVector;
use crate::error::{Error, Result};

/// First row `(b_1, ..., b_n)` of a circulant matrix with zero diagonal.
///
/// `b_1 = 0` is enforced. Symmetry (`b_{1+k} = b_{1+n-k}`) is not: vectors
/// produced by the local search usually leave the undirected-graph class, so
/// [`is_graph_vector`] reports it instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeneratorVector {
    bits: BitVector,
}

impl GeneratorVector {
    pub fn new(bits: BitVector) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyVector);
        }
        if bits.get(0) {
            return Err(Error::NonZeroDiagonal);
        }
        Ok(Self { bits })
    }

    /// All-zero vector of order `n` (the empty graph).
    pub fn zero(n: usize) -> Result<Self> {
        Self::new(BitVector::zeros(n))
    }

    /// Builds a vector from the 1-based positions that hold a one.
    pub fn from_ones(n: usize, positions: &[usize]) -> Result<Self> {
        let mut bits = BitVector::zeros(n);
        for &p in positions {
            if p == 0 || p > n {
                return Err(Error::IndexOutOfRange { index: p, n });
            }
            bits.set(p - 1, true);
        }
        Self::new(bits)
    }

    pub fn n(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    /// `b_p`, 1-based.
    pub fn b(&self, p: usize) -> bool {
        self.bits.get(p - 1)
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones()
    }

    /// 1-based positions holding a one.
    pub fn ones(&self) -> Vec<usize> {
        self.bits.ones().map(|i| i + 1).collect()
    }
}

impl fmt::Display for GeneratorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.bits.fmt(f)
    }
}

impl fmt::Debug for GeneratorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneratorVector({})", self.bits)
    }
}

impl FromStr for GeneratorVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.parse()?)
    }
}

impl Serialize for GeneratorVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Connection set `S = {a_1 < ... < a_k}` of the circulant graph `C(n, S)`,
/// with every offset in `(0, (n+1)/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    n: usize,
    offsets: Vec<usize>,
}

impl ConnectionSet {
    pub fn new(n: usize, offsets: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVector);
        }
        let mut offsets: Vec<usize> = offsets.into_iter().collect();
        offsets.sort_unstable();
        for w in offsets.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateOffset(w[0]));
            }
        }
        // 0 < a < (n+1)/2  <=>  1 <= a and 2a <= n
        if let Some(&offset) = offsets.iter().find(|&&a| a == 0 || 2 * a > n) {
            return Err(Error::OffsetOutOfRange {
                n,
                offset,
                bound: format!("{}/2", n + 1),
            });
        }
        Ok(Self { n, offsets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }
}

/// Parses `n:a1,a2,...`, e.g. `17:1,2,4,8`. `9:` is the empty set.
impl FromStr for ConnectionSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let malformed = || Error::MalformedConnectionSet(s.to_string());
        let (n, rest) = s.trim().split_once(':').ok_or_else(malformed)?;
        let n: usize = n.trim().parse().map_err(|_| malformed())?;
        let offsets = rest
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| malformed()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, offsets)
    }
}

/// Generator vector of the circulant graph `C(n, S)`: vertex 0 is adjacent
/// to `±a (mod n)` for every offset `a`.
pub fn vector_from_connection_set(s: &ConnectionSet) -> GeneratorVector {
    let n = s.n;
    let mut bits = BitVector::zeros(n);
    for &a in &s.offsets {
        bits.set(a, true);
        bits.set(n - a, true);
    }
    GeneratorVector::new(bits).expect("offsets are nonzero mod n")
}

fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    (2..)
        .take_while(|d| d * d <= p)
        .all(|d| !p.is_multiple_of(d))
}

/// Generator vector of the quadratic-residue (Paley) graph on `Z_p`:
/// `b_{1+k} = 1` iff `k` is a nonzero square mod `p`.
pub fn paley_vector(p: usize) -> Result<GeneratorVector> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 1 {
        return Err(Error::NotOneModFour(p));
    }
    let mut bits = BitVector::zeros(p);
    for k in 1..p {
        bits.set(k * k % p, true);
    }
    GeneratorVector::new(bits)
}

/// Row `i` (1-based) of the circulant matrix generated by `alpha`: `alpha`
/// rotated right by `i - 1` places.
pub fn circulant_row(alpha: &GeneratorVector, i: usize) -> Result<BitVector> {
    let n = alpha.n();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(alpha.bits.rotate_right(i - 1))
}

/// `true` iff the circulant matrix of `alpha` is symmetric, i.e. `alpha` is
/// the first row of an undirected graph's adjacency matrix.
pub fn is_graph_vector(alpha: &GeneratorVector) -> bool {
    let n = alpha.n();
    (1..n).all(|k| alpha.bits.get(k) == alpha.bits.get(n - k))
}

/// `wt(alpha) + 1`, an upper bound on the minimum distance of `(I | A)`:
/// row 1 of the generator matrix has exactly this weight.
pub fn min_degree_bound(alpha: &GeneratorVector) -> usize {
    alpha.weight() + 1
}

/// The `n x n` circulant matrix generated by a vector. Rows are produced on
/// demand and never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantMatrix {
    alpha: GeneratorVector,
}

impl CirculantMatrix {
    pub fn new(alpha: GeneratorVector) -> Self {
        Self { alpha }
    }

    pub fn order(&self) -> usize {
        self.alpha.n()
    }

    pub fn alpha(&self) -> &GeneratorVector {
        &self.alpha
    }

    /// `a_{i,j} = b_{((j - i) mod n) + 1}`, both indices 1-based.
    pub fn entry(&self, i: usize, j: usize) -> bool {
        let n = self.order();
        assert!((1..=n).contains(&i) && (1..=n).contains(&j));
        self.alpha.bits.get((j + n - i) % n)
    }

    pub fn row(&self, i: usize) -> Result<BitVector> {
        circulant_row(&self.alpha, i)
    }

    pub fn rows(&self) -> impl Iterator<Item = BitVector> + '_ {
        (0..self.order()).map(|r| self.alpha.bits.rotate_right(r))
    }
}

/// The `[2n, n]` binary code with generator matrix `(I | A(alpha))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantCode {
    alpha: GeneratorVector,
}

impl CirculantCode {
    pub fn new(alpha: GeneratorVector) -> Self {
        Self { alpha }
    }

    pub fn alpha(&self) -> &GeneratorVector {
        &self.alpha
    }

    pub fn length(&self) -> usize {
        2 * self.alpha.n()
    }

    /// Always `n`: the identity block makes the generator matrix full rank.
    pub fn dimension(&self) -> usize {
        self.alpha.n()
    }

    pub fn matrix(&self) -> CirculantMatrix {
        CirculantMatrix::new(self.alpha.clone())
    }

    /// Generator row `j` (1-based): `(e_j | row j of A)`.
    pub fn generator_row(&self, j: usize) -> Result<Codeword> {
        let n = self.alpha.n();
        let a = circulant_row(&self.alpha, j)?;
        let mut e = BitVector::zeros(n);
        e.set(j - 1, true);
        Ok(Codeword::new(e.concat(&a)))
    }

    /// XOR of the generator rows with the given 1-based indices.
    pub fn combine_rows(&self, rows: &[usize]) -> Result<Codeword> {
        let n = self.alpha.n();
        let mut message = BitVector::zeros(n);
        for &j in rows {
            if j == 0 || j > n {
                return Err(Error::IndexOutOfRange { index: j, n });
            }
            message.toggle(j - 1);
        }
        encode(self, &message)
    }
}

/// A codeword of a `(I | A)` code with its cached Hamming weight.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    bits: BitVector,
    weight: usize,
}

impl Codeword {
    pub fn new(bits: BitVector) -> Self {
        let weight = bits.count_ones();
        Self { bits, weight }
    }

    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// The message half (identity block).
    pub fn info_part(&self) -> BitVector {
        self.bits.slice(0, self.len() / 2)
    }

    /// The `message * A` half.
    pub fn check_part(&self) -> BitVector {
        self.bits.slice(self.len() / 2, self.len())
    }

    /// 1-based positions of the ones.
    pub fn support(&self) -> Vec<usize> {
        self.bits.ones().map(|i| i + 1).collect()
    }
}

/// Both halves separated by ` | `.
impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.info_part(), self.check_part())
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Codeword(wt={}; {self})", self.weight)
    }
}

impl Serialize for Codeword {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.bits)
    }
}

/// `(m | m A)` over GF(2).
pub fn encode(code: &CirculantCode, message: &BitVector) -> Result<Codeword> {
    let n = code.dimension();
    if message.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: message.len(),
        });
    }
    let mut check = BitVector::zeros(n);
    for r in message.ones() {
        check.xor_assign(&code.alpha.bits.rotate_right(r));
    }
    Ok(Codeword::new(message.concat(&check)))
}
