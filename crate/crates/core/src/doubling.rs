//! The doubling construction.
//!
//! Given two hermitian self-orthogonal `[n, k]` codes `C₁`, `C₂` with
//! generator matrices `G₁`, `G₂`, and odd-weight vectors `x⁽¹⁾ ∈ C₁⊥`,
//! `x⁽²⁾ ∈ C₂⊥`, the matrices
//!
//! ```text
//!        | G₁    G₂    0 |            | G₁    G₂    0 0 |
//!   G′ = | x⁽¹⁾  0     1 |      G″ =  | x⁽¹⁾  0     1 0 |
//!                                     | 0     x⁽²⁾  0 1 |
//! ```
//!
//! generate self-orthogonal `[2n+1, k+1]` and `[2n+2, k+2]` codes. Row `i` of
//! `G₁` is paired with row `i` of `G₂`, so the generator order of the inputs
//! matters for the exact matrix (not for the parameters).
//!
//! The auxiliary code `Cᵢᵢ` is spanned by `[Gᵢ | 0]` and `[x⁽ⁱ⁾ | 1]`. Every
//! word of `C₁₁⊥` padded with zeros is a word of `(C′)⊥`, which gives
//! `d((C′)⊥) ≤ min(d(C₁₁⊥), d(C₂⊥))` and
//! `d((C″)⊥) ≤ min(d(C₁₁⊥), d(C₂₂⊥))`.

use crate::codes::{GeneratorMatrix, LinearCode};
use crate::enumerator::{dual_distance, Budget};
use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Vector};

/// An odd-weight vector in the hermitian dual of some code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddDualVector {
    vector: Gf4Vector,
    weight: usize,
}

impl OddDualVector {
    /// Validates `vector` against `code`.
    pub fn new(code: &LinearCode, vector: Gf4Vector) -> Result<Self> {
        check_odd_dual(code, &vector)?;
        let weight = vector.weight();
        Ok(OddDualVector { vector, weight })
    }

    /// The all-one vector, if it qualifies for `code`.
    pub fn all_ones(code: &LinearCode) -> Result<Self> {
        Self::new(code, Gf4Vector::ones(code.n()))
    }

    pub fn vector(&self) -> &Gf4Vector {
        &self.vector
    }

    pub fn weight(&self) -> usize {
        self.weight
    }
}

fn check_odd_dual(code: &LinearCode, x: &Gf4Vector) -> Result<()> {
    if x.len() != code.n() {
        return Err(Error::Dimension {
            expected: code.n(),
            found: x.len(),
        });
    }
    if x.weight().is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "vector has even weight {}",
            x.weight()
        )));
    }
    if !code.is_in_dual(x)? {
        return Err(Error::Precondition(
            "vector is not in the hermitian dual of the code".into(),
        ));
    }
    Ok(())
}

fn check_pair(c1: &LinearCode, c2: &LinearCode) -> Result<()> {
    if c1.n() != c2.n() || c1.k() != c2.k() {
        return Err(Error::Precondition(format!(
            "input codes differ: [{}, {}] vs [{}, {}]",
            c1.n(),
            c1.k(),
            c2.n(),
            c2.k()
        )));
    }
    for (name, c) in [("first", c1), ("second", c2)] {
        if !c.is_hermitian_self_orthogonal() {
            return Err(Error::Precondition(format!(
                "{name} input code is not hermitian self-orthogonal"
            )));
        }
    }
    Ok(())
}

fn row(parts: &[&Gf4Vector]) -> Gf4Vector {
    parts
        .iter()
        .skip(1)
        .fold(parts[0].clone(), |acc, p| acc.concat(p))
}

fn tail(bits: &[Gf4]) -> Gf4Vector {
    Gf4Vector::from_elements(bits)
}

/// Raw `G′` matrix, no validation beyond shapes.
pub fn matrix_prime(c1: &LinearCode, c2: &LinearCode, x1: &Gf4Vector) -> Result<GeneratorMatrix> {
    let n = c1.n();
    let zero_n = Gf4Vector::zeros(n);
    let mut rows: Vec<Gf4Vector> = c1
        .generator()
        .iter()
        .zip(c2.generator())
        .map(|(a, b)| row(&[a, b, &tail(&[Gf4::ZERO])]))
        .collect();
    rows.push(row(&[x1, &zero_n, &tail(&[Gf4::ONE])]));
    GeneratorMatrix::new(rows)
}

/// Raw `G″` matrix, no validation beyond shapes.
pub fn matrix_double_prime(
    c1: &LinearCode,
    c2: &LinearCode,
    x1: &Gf4Vector,
    x2: &Gf4Vector,
) -> Result<GeneratorMatrix> {
    let n = c1.n();
    let zero_n = Gf4Vector::zeros(n);
    let mut rows: Vec<Gf4Vector> = c1
        .generator()
        .iter()
        .zip(c2.generator())
        .map(|(a, b)| row(&[a, b, &tail(&[Gf4::ZERO, Gf4::ZERO])]))
        .collect();
    rows.push(row(&[x1, &zero_n, &tail(&[Gf4::ONE, Gf4::ZERO])]));
    rows.push(row(&[&zero_n, x2, &tail(&[Gf4::ZERO, Gf4::ONE])]));
    GeneratorMatrix::new(rows)
}

fn verify(code: LinearCode, n: usize, k: usize, what: &str) -> Result<LinearCode> {
    if code.n() != n || code.k() != k {
        return Err(Error::Construction(format!(
            "{what} has parameters [{}, {}], expected [{n}, {k}]",
            code.n(),
            code.k()
        )));
    }
    if !code.is_hermitian_self_orthogonal() {
        return Err(Error::Construction(format!(
            "{what} is not hermitian self-orthogonal"
        )));
    }
    Ok(code)
}

/// The `[2n+1, k+1]` code generated by `G′`.
pub fn double_odd(c1: &LinearCode, c2: &LinearCode, x1: &OddDualVector) -> Result<LinearCode> {
    check_pair(c1, c2)?;
    check_odd_dual(c1, x1.vector())?;
    let code = LinearCode::from_generator(matrix_prime(c1, c2, x1.vector())?);
    verify(code, 2 * c1.n() + 1, c1.k() + 1, "C'")
}

/// The `[2n+2, k+2]` code generated by `G″`.
pub fn double_even(
    c1: &LinearCode,
    c2: &LinearCode,
    x1: &OddDualVector,
    x2: &OddDualVector,
) -> Result<LinearCode> {
    check_pair(c1, c2)?;
    check_odd_dual(c1, x1.vector())?;
    check_odd_dual(c2, x2.vector())?;
    let m = matrix_double_prime(c1, c2, x1.vector(), x2.vector())?;
    let code = LinearCode::from_generator(m);
    verify(code, 2 * c1.n() + 2, c1.k() + 2, "C''")
}

/// The `[n+1, k+1]` code spanned by `[G | 0]` and `[x | 1]`.
pub fn auxiliary_code(c: &LinearCode, x: &OddDualVector) -> Result<LinearCode> {
    check_odd_dual(c, x.vector())?;
    let mut rows: Vec<Gf4Vector> = c
        .generator()
        .iter()
        .map(|g| g.concat(&tail(&[Gf4::ZERO])))
        .collect();
    rows.push(x.vector().concat(&tail(&[Gf4::ONE])));
    let code = LinearCode::from_rows(rows)?;
    if code.k() != c.k() + 1 {
        return Err(Error::Construction(format!(
            "auxiliary code has dimension {}, expected {}",
            code.k(),
            c.k() + 1
        )));
    }
    Ok(code)
}

/// Upper bounds on the dual distances of `C′` and `C″`:
/// `(min(d(C₁₁⊥), d(C₂⊥)), min(d(C₁₁⊥), d(C₂₂⊥)))`.
pub fn dual_distance_bounds(
    c1: &LinearCode,
    c2: &LinearCode,
    x1: &OddDualVector,
    x2: &OddDualVector,
    budget: Budget,
) -> Result<(usize, usize)> {
    check_pair(c1, c2)?;
    let d11 = dual_distance(&auxiliary_code(c1, x1)?, budget)?;
    let d22 = dual_distance(&auxiliary_code(c2, x2)?, budget)?;
    let d2 = dual_distance(c2, budget)?;
    Ok((d11.min(d2), d11.min(d22)))
}

/// Both doubled codes together with their auxiliary codes and bounds.
#[derive(Clone, Debug)]
pub struct DoublingResult {
    pub code_prime: LinearCode,
    pub code_double_prime: LinearCode,
    pub c11: LinearCode,
    pub c22: LinearCode,
    pub bound_prime: usize,
    pub bound_double_prime: usize,
}

/// Runs both constructions and computes the bounds.
pub fn double(
    c1: &LinearCode,
    c2: &LinearCode,
    x1: &OddDualVector,
    x2: &OddDualVector,
    budget: Budget,
) -> Result<DoublingResult> {
    let code_prime = double_odd(c1, c2, x1)?;
    let code_double_prime = double_even(c1, c2, x1, x2)?;
    let c11 = auxiliary_code(c1, x1)?;
    let c22 = auxiliary_code(c2, x2)?;
    let d11 = dual_distance(&c11, budget)?;
    let d22 = dual_distance(&c22, budget)?;
    let d2 = dual_distance(c2, budget)?;
    Ok(DoublingResult {
        code_prime,
        code_double_prime,
        c11,
        c22,
        bound_prime: d11.min(d2),
        bound_double_prime: d11.min(d22),
    })
}

/// Searches the hermitian dual of `c` for an odd-weight vector.
///
/// The all-one vector is tried first. After that, combinations of up to
/// `max_rows` dual-basis rows are scanned: by number of rows, then row
/// indices in lexicographic order, then nonzero scalars in digit order.
pub fn find_odd_dual_vector(c: &LinearCode, max_rows: usize) -> Option<OddDualVector> {
    if let Ok(x) = OddDualVector::all_ones(c) {
        return Some(x);
    }
    let basis = c.dual_basis();
    for size in 1..=max_rows.min(basis.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let mut scalars = vec![0usize; size];
            loop {
                let mut v = Gf4Vector::zeros(c.n());
                for (&i, &s) in idx.iter().zip(&scalars) {
                    v.axpy(Gf4::NONZERO[s], &basis[i]);
                }
                if v.weight() % 2 == 1 {
                    let weight = v.weight();
                    return Some(OddDualVector { vector: v, weight });
                }
                if !next_scalars(&mut scalars) {
                    break;
                }
            }
            if !next_combination(&mut idx, basis.len()) {
                break;
            }
        }
    }
    None
}

fn next_scalars(s: &mut [usize]) -> bool {
    for pos in (0..s.len()).rev() {
        if s[pos] < 2 {
            s[pos] += 1;
            return true;
        }
        s[pos] = 0;
    }
    false
}

fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    for pos in (0..k).rev() {
        if idx[pos] < m - k + pos {
            idx[pos] += 1;
            for q in pos + 1..k {
                idx[q] = idx[q - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5_2() -> LinearCode {
        LinearCode::from_rows(vec![
            Gf4Vector::from_digits(&[1, 0, 1, 2, 2]).unwrap(),
            Gf4Vector::from_digits(&[0, 1, 2, 2, 1]).unwrap(),
        ])
        .unwrap()
    }

    fn hexacode() -> LinearCode {
        LinearCode::from_rows(vec![
            Gf4Vector::from_digits(&[1, 0, 0, 1, 2, 2]).unwrap(),
            Gf4Vector::from_digits(&[0, 1, 0, 2, 1, 2]).unwrap(),
            Gf4Vector::from_digits(&[0, 0, 1, 2, 2, 1]).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn five_two_doubles() {
        let c = c5_2();
        let x = OddDualVector::all_ones(&c).unwrap();
        assert_eq!(x.weight(), 5);
        let cp = double_odd(&c, &c, &x).unwrap();
        assert_eq!((cp.n(), cp.k()), (11, 3));
        let cpp = double_even(&c, &c, &x, &x).unwrap();
        assert_eq!((cpp.n(), cpp.k()), (12, 4));
        assert_eq!(dual_distance(&cp, Budget::default()).unwrap(), 3);
        assert_eq!(dual_distance(&cpp, Budget::default()).unwrap(), 4);
    }

    #[test]
    fn matrix_layout_puts_tail_last() {
        let c = c5_2();
        let x = Gf4Vector::ones(5);
        let m = matrix_double_prime(&c, &c, &x, &x).unwrap();
        assert_eq!(
            m.to_string(),
            "12 4\n\
             1 0 1 2 2 1 0 1 2 2 0 0\n\
             0 1 2 2 1 0 1 2 2 1 0 0\n\
             1 1 1 1 1 0 0 0 0 0 1 0\n\
             0 0 0 0 0 1 1 1 1 1 0 1\n"
        );
    }

    #[test]
    fn bounds_for_five_two() {
        let c = c5_2();
        let x = OddDualVector::all_ones(&c).unwrap();
        let r = double(&c, &c, &x, &x, Budget::default()).unwrap();
        assert!(r.bound_prime >= 3);
        assert!(r.bound_double_prime >= 4);
        assert_eq!(
            (r.bound_prime, r.bound_double_prime),
            dual_distance_bounds(&c, &c, &x, &x, Budget::default()).unwrap()
        );
        assert_eq!((r.c11.n(), r.c11.k()), (6, 3));
        // the auxiliary code of the shortened hexacode is self-dual again
        assert!(r.c11.is_self_dual());
    }

    #[test]
    fn even_weight_vector_is_rejected() {
        let c = c5_2();
        let x = Gf4Vector::from_digits(&[1, 1, 0, 0, 0]).unwrap();
        assert!(matches!(OddDualVector::new(&c, x.clone()), Err(Error::Precondition(_))));
        // forced through the raw matrix, the bottom row has norm wt(x) + 1 = 1
        let m = matrix_prime(&c, &c, &x).unwrap();
        let bottom = m.rows().last().unwrap();
        assert_eq!(bottom.hermitian_inner(bottom).unwrap(), Gf4::ONE);
        assert!(!LinearCode::from_generator(m).is_hermitian_self_orthogonal());
    }

    #[test]
    fn non_dual_vector_is_rejected() {
        let c = c5_2();
        let x = Gf4Vector::from_digits(&[1, 0, 0, 0, 0]).unwrap();
        assert!(OddDualVector::new(&c, x).is_err());
    }

    #[test]
    fn mismatched_inputs_are_rejected() {
        let c = c5_2();
        let x = OddDualVector::all_ones(&c).unwrap();
        let h = hexacode();
        assert!(matches!(double_odd(&c, &h, &x), Err(Error::Precondition(_))));
        let not_so = LinearCode::from_rows(vec![
            Gf4Vector::from_digits(&[1, 0, 0, 0, 0]).unwrap(),
            Gf4Vector::from_digits(&[0, 1, 0, 0, 0]).unwrap(),
        ])
        .unwrap();
        assert!(double_odd(&c, &not_so, &x).is_err());
    }

    #[test]
    fn search_prefers_all_ones() {
        let c = c5_2();
        let x = find_odd_dual_vector(&c, 3).unwrap();
        assert_eq!(x.vector(), &Gf4Vector::ones(5));
    }

    #[test]
    fn search_fails_for_self_dual_code() {
        assert!(find_odd_dual_vector(&hexacode(), 3).is_none());
    }

    #[test]
    fn search_finds_combinations() {
        // all-ones (length 4) has even weight, so the scan must produce something else
        let c = LinearCode::from_rows(vec![Gf4Vector::from_digits(&[1, 1, 0, 0]).unwrap()]).unwrap();
        let x = find_odd_dual_vector(&c, 2).unwrap();
        assert_eq!(x.weight() % 2, 1);
        assert!(c.is_in_dual(x.vector()).unwrap());
        // deterministic
        assert_eq!(find_odd_dual_vector(&c, 2), Some(x));
    }

    #[test]
    fn combination_order() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }
}
