//! Test-only oracles and random code generators.
//!
//! The oracles use per-entry table arithmetic and plain base-4 message
//! enumeration, independent of the bitsliced Gray-code path.

#![allow(dead_code)]

use gf4codes::{Gf4, Gf4Vector, LinearCode};
use rand::Rng;

pub const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
pub const CONJ: [u8; 4] = [0, 1, 3, 2];

pub fn naive_herm(x: &[u8], y: &[u8]) -> u8 {
    x.iter()
        .zip(y)
        .fold(0, |acc, (&a, &b)| acc ^ MUL[a as usize][CONJ[b as usize] as usize])
}

/// Weight histogram of the span of `rows` by iterating over all `4^k`
/// messages with table arithmetic.
pub fn naive_span_histogram(rows: &[Vec<u8>], n: usize) -> Vec<u128> {
    let k = rows.len();
    let mut hist = vec![0u128; n + 1];
    let mut msg = vec![0u8; k];
    loop {
        let mut word = vec![0u8; n];
        for (c, row) in msg.iter().zip(rows) {
            for (w, &e) in word.iter_mut().zip(row) {
                *w ^= MUL[*c as usize][e as usize];
            }
        }
        hist[word.iter().filter(|&&e| e != 0).count()] += 1;
        // base-4 increment
        let mut i = 0;
        loop {
            if i == k {
                return hist;
            }
            msg[i] += 1;
            if msg[i] < 4 {
                break;
            }
            msg[i] = 0;
            i += 1;
        }
    }
}

pub fn digits_of(rows: &[Gf4Vector]) -> Vec<Vec<u8>> {
    rows.iter().map(|r| r.to_digits()).collect()
}

/// Dual enumerator computed directly: checks the dual basis against the
/// generator with table arithmetic, then enumerates its span.
pub fn direct_dual_histogram(code: &LinearCode) -> Vec<u128> {
    let g = digits_of(code.generator());
    let h = digits_of(code.dual_basis());
    assert_eq!(h.len(), code.n() - code.k(), "dual dimension");
    for a in &h {
        for b in &g {
            assert_eq!(naive_herm(a, b), 0, "dual basis row not orthogonal");
        }
    }
    naive_span_histogram(&h, code.n())
}

pub fn min_nonzero_weight(hist: &[u128]) -> usize {
    (1..hist.len()).find(|&j| hist[j] > 0).unwrap_or(hist.len())
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> Gf4Vector {
    let d: Vec<u8> = (0..n).map(|_| rng.gen_range(0..4)).collect();
    Gf4Vector::from_digits(&d).unwrap()
}

pub fn random_combination<R: Rng>(rng: &mut R, basis: &[Gf4Vector], n: usize) -> Gf4Vector {
    let mut v = Gf4Vector::zeros(n);
    for b in basis {
        v.axpy(Gf4::from_digit(rng.gen_range(0..4)).unwrap(), b);
    }
    v
}

/// Random hermitian self-dual code of even length `n`, grown one isotropic
/// vector of the current dual at a time.
pub fn random_self_dual<R: Rng>(rng: &mut R, n: usize) -> LinearCode {
    assert!(n.is_multiple_of(2));
    let mut rows: Vec<Gf4Vector> = Vec::new();
    while rows.len() < n / 2 {
        let current = if rows.is_empty() {
            LinearCode::zero(n)
        } else {
            LinearCode::from_rows(rows.clone()).unwrap()
        };
        let v = random_combination(rng, current.dual_basis(), n);
        if v.is_zero() || v.weight() % 2 == 1 || current.contains(&v).unwrap() {
            continue;
        }
        rows.push(v);
    }
    let c = LinearCode::from_rows(rows).unwrap();
    assert!(c.is_self_dual());
    c
}

/// Random self-orthogonal `[n-1, n/2-1]` code: a random self-dual code
/// shortened at a random coordinate.
pub fn random_shortened_self_dual<R: Rng>(rng: &mut R, n: usize) -> LinearCode {
    let sd = random_self_dual(rng, n);
    sd.shorten(rng.gen_range(0..n)).unwrap()
}

/// Random `[n, k]` code from random rows (rank may come out below `k`).
pub fn random_code<R: Rng>(rng: &mut R, n: usize, k: usize) -> LinearCode {
    let rows = (0..k).map(|_| random_vector(rng, n)).collect();
    LinearCode::from_rows(rows).unwrap()
}
