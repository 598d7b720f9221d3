//! Weight enumerators by exhaustive enumeration, the MacWilliams transform
//! and distance extraction.
//!
//! Enumeration walks the GF(2)-span of `{g₁, αg₁, …, g_k, αg_k}` in binary
//! reflected Gray code order, so consecutive codewords differ by exactly one
//! scaled generator row and each step costs one bitplane XOR and a popcount.
//! The `4^k` index range may be split into contiguous blocks that run on
//! separate threads; per-block histograms are summed, so the result does not
//! depend on how the range is split.

use std::fmt;
use std::num::NonZeroUsize;

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Vector};

/// Largest dimension `k` that may be enumerated (`4^k` codewords).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_dim: usize,
}

impl Budget {
    pub const DEFAULT_MAX_DIM: usize = 16;

    pub fn new(max_dim: usize) -> Self {
        Budget { max_dim }
    }

    pub fn check(&self, k: usize) -> Result<()> {
        if k > self.max_dim {
            return Err(Error::Budget {
                k,
                max_dim: self.max_dim,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_MAX_DIM)
    }
}

/// Coefficients `A₀ … Aₙ` of `W(x, y) = Σ Aⱼ x^(n-j) y^j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    n: usize,
    coefficients: Vec<u128>,
}

impl WeightEnumerator {
    /// `coefficients` must have exactly `n + 1` entries.
    pub fn new(n: usize, coefficients: Vec<u128>) -> Result<Self> {
        if coefficients.len() != n + 1 {
            return Err(Error::Dimension {
                expected: n + 1,
                found: coefficients.len(),
            });
        }
        Ok(WeightEnumerator { n, coefficients })
    }

    /// Builds an enumerator from sparse `(j, Aⱼ)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, u128)]) -> Result<Self> {
        let mut coefficients = vec![0u128; n + 1];
        for &(j, a) in pairs {
            if j > n {
                return Err(Error::IndexOutOfRange { index: j, len: n + 1 });
            }
            coefficients[j] += a;
        }
        Ok(WeightEnumerator { n, coefficients })
    }

    /// Enumerator of the `[n, 0]` code.
    pub fn zero_code(n: usize) -> Self {
        let mut coefficients = vec![0; n + 1];
        coefficients[0] = 1;
        WeightEnumerator { n, coefficients }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[u128] {
        &self.coefficients
    }

    pub fn coefficient(&self, j: usize) -> u128 {
        self.coefficients.get(j).copied().unwrap_or(0)
    }

    /// Total number of words counted.
    pub fn total(&self) -> u128 {
        self.coefficients.iter().sum()
    }

    /// Nonzero `(j, Aⱼ)` pairs in ascending `j`.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, u128)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(j, &a)| (j, a))
    }

    /// Whether any word of positive weight is counted.
    pub fn has_nonzero_words(&self) -> bool {
        self.coefficients[1..].iter().any(|&a| a > 0)
    }

    /// Smallest `j ≥ 1` with `Aⱼ > 0`, or `n + 1` when no such `j` exists.
    pub fn min_distance(&self) -> usize {
        min_distance(self)
    }
}

/// Text form: one `j A_j` line per nonzero coefficient.
impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, a) in self.nonzero_terms() {
            writeln!(f, "{j} {a}")?;
        }
        Ok(())
    }
}

/// Smallest `j ≥ 1` with `Aⱼ > 0`. The zero code yields the sentinel `n + 1`;
/// use [`WeightEnumerator::has_nonzero_words`] to tell it apart.
pub fn min_distance(w: &WeightEnumerator) -> usize {
    (1..=w.n)
        .find(|&j| w.coefficients[j] > 0)
        .unwrap_or(w.n + 1)
}

fn default_partitions() -> usize {
    std::thread::available_parallelism()
        .map(NonZeroUsize::get)
        .unwrap_or(1)
        .min(16)
}

/// Exact weight enumerator of `code` by enumerating all `4^k` codewords.
pub fn weight_enumerator(code: &LinearCode, budget: Budget) -> Result<WeightEnumerator> {
    weight_enumerator_partitioned(code, budget, default_partitions())
}

/// As [`weight_enumerator`], splitting the Gray-code walk into `partitions`
/// contiguous blocks processed on separate threads.
pub fn weight_enumerator_partitioned(
    code: &LinearCode,
    budget: Budget,
    partitions: usize,
) -> Result<WeightEnumerator> {
    budget.check(code.k())?;
    let n = code.n();
    let gens: Vec<Gf4Vector> = code
        .generator()
        .iter()
        .flat_map(|g| [g.clone(), g.scale(Gf4::ALPHA)])
        .collect();
    let walk = GrayWalk::new(&gens, n);
    let total: u64 = 1u64 << gens.len();
    let blocks = (partitions.max(1) as u64).min(total);
    let block_len = total.div_ceil(blocks);

    let mut hist = vec![0u128; n + 1];
    if blocks == 1 {
        for (j, c) in walk.histogram(0, total).into_iter().enumerate() {
            hist[j] += c as u128;
        }
    } else {
        let parts: Vec<Vec<u64>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..blocks)
                .map(|b| {
                    let start = b * block_len;
                    let end = (start + block_len).min(total);
                    let walk = &walk;
                    s.spawn(move || walk.histogram(start, end))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        });
        for part in parts {
            for (j, c) in part.into_iter().enumerate() {
                hist[j] += c as u128;
            }
        }
    }
    let w = WeightEnumerator::new(n, hist)?;
    if w.total() != 1u128 << gens.len() {
        return Err(Error::Internal(format!(
            "enumerated {} words, expected 4^{}",
            w.total(),
            code.k()
        )));
    }
    Ok(w)
}

/// Gray-code enumeration over the additive generators, flattened to planes.
struct GrayWalk {
    n: usize,
    words: usize,
    // generator g occupies lo[g*words..(g+1)*words], likewise hi
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl GrayWalk {
    fn new(gens: &[Gf4Vector], n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut lo = Vec::with_capacity(gens.len() * words);
        let mut hi = Vec::with_capacity(gens.len() * words);
        for g in gens {
            let (l, h) = g.planes();
            lo.extend_from_slice(l);
            hi.extend_from_slice(h);
            lo.resize(lo.len() + words - l.len(), 0);
            hi.resize(hi.len() + words - h.len(), 0);
        }
        GrayWalk { n, words, lo, hi }
    }

    /// Weight histogram of codewords with Gray indices in `start..end`.
    fn histogram(&self, start: u64, end: u64) -> Vec<u64> {
        let mut hist = vec![0u64; self.n + 1];
        if start >= end {
            return hist;
        }
        let w = self.words;
        let gray = start ^ (start >> 1);
        let mut cur_lo = vec![0u64; w];
        let mut cur_hi = vec![0u64; w];
        let mut bits = gray;
        while bits != 0 {
            let g = bits.trailing_zeros() as usize;
            for i in 0..w {
                cur_lo[i] ^= self.lo[g * w + i];
                cur_hi[i] ^= self.hi[g * w + i];
            }
            bits &= bits - 1;
        }
        if w == 1 {
            let (mut l, mut h) = (cur_lo[0], cur_hi[0]);
            hist[(l | h).count_ones() as usize] += 1;
            for idx in start + 1..end {
                let g = idx.trailing_zeros() as usize;
                l ^= self.lo[g];
                h ^= self.hi[g];
                hist[(l | h).count_ones() as usize] += 1;
            }
        } else {
            let weight = |l: &[u64], h: &[u64]| -> usize {
                l.iter().zip(h).map(|(a, b)| (a | b).count_ones() as usize).sum()
            };
            hist[weight(&cur_lo, &cur_hi)] += 1;
            for idx in start + 1..end {
                let g = idx.trailing_zeros() as usize;
                for i in 0..w {
                    cur_lo[i] ^= self.lo[g * w + i];
                    cur_hi[i] ^= self.hi[g * w + i];
                }
                hist[weight(&cur_lo, &cur_hi)] += 1;
            }
        }
        hist
    }
}

fn overflow() -> Error {
    Error::Internal("integer overflow in MacWilliams transform".into())
}

/// Coefficients of `(1 + 3y)^(n-i) (1 - y)^i` for `j = 0..=n`.
fn krawtchouk_row(n: usize, i: usize) -> Result<Vec<i128>> {
    let mut poly = vec![0i128; n + 1];
    poly[0] = 1;
    let mut deg = 0;
    let mut times = |poly: &mut Vec<i128>, c: i128| -> Result<()> {
        // multiply by (1 + c·y)
        for j in (1..=deg + 1).rev() {
            let t = poly[j - 1].checked_mul(c).ok_or_else(overflow)?;
            poly[j] = poly[j].checked_add(t).ok_or_else(overflow)?;
        }
        deg += 1;
        Ok(())
    };
    for _ in 0..n - i {
        times(&mut poly, 3)?;
    }
    for _ in 0..i {
        times(&mut poly, -1)?;
    }
    Ok(poly)
}

/// Enumerator of the dual of a linear `[n, k]` code from the code's
/// enumerator: `W⊥(x, y) = 4^(-k) W(x + 3y, x - y)`.
///
/// The `4^(-k)` factor is `2^(-2k)`, the additive-code normalisation for a
/// linear code viewed as an additive `(n, 2^(2k))` code. Every coefficient
/// must divide exactly; a remainder means `w` or `k` is wrong.
pub fn macwilliams(w: &WeightEnumerator, k: usize) -> Result<WeightEnumerator> {
    let n = w.n;
    if k > n {
        return Err(Error::Precondition(format!(
            "dimension {k} exceeds length {n}"
        )));
    }
    let scale: i128 = 1i128.checked_shl(2 * k as u32).filter(|&s| s > 0).ok_or_else(overflow)?;
    let mut acc = vec![0i128; n + 1];
    for (i, &a) in w.coefficients.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let a = i128::try_from(a).map_err(|_| overflow())?;
        let row = krawtchouk_row(n, i)?;
        for j in 0..=n {
            let t = a.checked_mul(row[j]).ok_or_else(overflow)?;
            acc[j] = acc[j].checked_add(t).ok_or_else(overflow)?;
        }
    }
    let mut out = Vec::with_capacity(n + 1);
    for (j, v) in acc.into_iter().enumerate() {
        if v % scale != 0 {
            return Err(Error::Internal(format!(
                "MacWilliams coefficient {j} ({v}) is not divisible by 4^{k}"
            )));
        }
        let q = v / scale;
        if q < 0 {
            return Err(Error::Internal(format!(
                "MacWilliams coefficient {j} is negative ({q})"
            )));
        }
        out.push(q as u128);
    }
    WeightEnumerator::new(n, out)
}

/// Minimum distance of the hermitian dual, via MacWilliams on the enumerated
/// code. The dual itself is never enumerated.
pub fn dual_distance(code: &LinearCode, budget: Budget) -> Result<usize> {
    let w = weight_enumerator(code, budget)?;
    Ok(min_distance(&macwilliams(&w, code.k())?))
}
