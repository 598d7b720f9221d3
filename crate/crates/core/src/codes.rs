//! Linear codes over GF(4): generator matrices, row reduction, hermitian
//! duals, shortening and the self-orthogonality predicates.

use std::fmt;

use crate::enumerator::{self, Budget};
use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Vector};

/// A list of `k` rows of common length `n`. Rows need not be independent;
/// [`LinearCode`] is where rank is enforced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    n: usize,
    rows: Vec<Gf4Vector>,
}

impl GeneratorMatrix {
    /// Fails on an empty row list or ragged rows.
    pub fn new(rows: Vec<Gf4Vector>) -> Result<Self> {
        let first = rows.first().ok_or_else(|| Error::Format {
            line: 0,
            msg: "generator matrix has no rows".into(),
        })?;
        let n = first.len();
        if n == 0 {
            return Err(Error::Format {
                line: 0,
                msg: "generator matrix has zero columns".into(),
            });
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::Format {
                    line: i + 1,
                    msg: format!("row {} has length {}, expected {n}", i + 1, r.len()),
                });
            }
        }
        Ok(GeneratorMatrix { n, rows })
    }

    /// Convenience constructor from digit rows.
    pub fn from_digit_rows(rows: &[&[u8]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| Gf4Vector::from_digits(r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Gf4Vector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Gf4Vector> {
        self.rows
    }
}

/// Emits the matrix text format: header `n k`, then one row of digits per line.
impl fmt::Display for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.rows.len())?;
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Reduced row echelon form with leftmost pivots, pivot entries equal to 1.
/// Zero rows are discarded. Returns the rows and their pivot columns.
pub fn rref(rows: &[Gf4Vector]) -> (Vec<Gf4Vector>, Vec<usize>) {
    let mut m: Vec<Gf4Vector> = rows.to_vec();
    let n = m.first().map_or(0, Gf4Vector::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i].get(col).is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r].get(col).inverse().expect("pivot is nonzero");
        m[r].scale_in_place(inv);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r {
                let c = row.get(col);
                if !c.is_zero() {
                    row.axpy(c, &pivot_row);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of `{ v : Σⱼ rowᵢ[j]·v[j] = 0 for all i }`, one vector per free
/// column in ascending order.
fn kernel(rows: &[Gf4Vector], n: usize) -> Vec<Gf4Vector> {
    let (red, pivots) = rref(rows);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = Gf4Vector::unit(n, f, Gf4::ONE);
            // v[p] = -R[i][f], and -x = x
            for (row, &p) in red.iter().zip(&pivots) {
                v.set(p, row.get(f));
            }
            v
        })
        .collect()
}

/// A linear `[n, k]` code over GF(4).
///
/// `generator` keeps the caller's independent rows in their original order
/// (so constructed matrices print exactly as assembled). The reduced form
/// and the hermitian dual basis are computed eagerly.
#[derive(Clone, Debug)]
pub struct LinearCode {
    n: usize,
    generator: Vec<Gf4Vector>,
    reduced: Vec<Gf4Vector>,
    pivots: Vec<usize>,
    dual_basis: Vec<Gf4Vector>,
    dropped_rows: usize,
}

impl LinearCode {
    /// Builds the code spanned by `rows`. Dependent rows are dropped and
    /// counted in [`LinearCode::dropped_rows`].
    pub fn from_rows(rows: Vec<Gf4Vector>) -> Result<Self> {
        let m = GeneratorMatrix::new(rows)?;
        Ok(Self::from_generator(m))
    }

    pub fn from_generator(m: GeneratorMatrix) -> Self {
        let n = m.n();
        let total = m.k();
        let mut kept = Vec::new();
        let mut echelon: Vec<(usize, Gf4Vector)> = Vec::new();
        for row in m.into_rows() {
            let mut v = row.clone();
            for (p, e) in &echelon {
                let c = v.get(*p);
                if !c.is_zero() {
                    v.axpy(c, e);
                }
            }
            if let Some(p) = v.leading_index() {
                let inv = v.get(p).inverse().expect("nonzero leading entry");
                v.scale_in_place(inv);
                echelon.push((p, v));
                kept.push(row);
            }
        }
        let dropped_rows = total - kept.len();
        Self::from_independent(n, kept, dropped_rows)
    }

    fn from_independent(n: usize, generator: Vec<Gf4Vector>, dropped_rows: usize) -> Self {
        let (reduced, pivots) = rref(&generator);
        debug_assert_eq!(reduced.len(), generator.len());
        let conj: Vec<Gf4Vector> = generator.iter().map(Gf4Vector::conjugate).collect();
        let dual_basis = if conj.is_empty() {
            (0..n).map(|i| Gf4Vector::unit(n, i, Gf4::ONE)).collect()
        } else {
            kernel(&conj, n)
        };
        debug_assert_eq!(reduced.len() + dual_basis.len(), n);
        LinearCode {
            n,
            generator,
            reduced,
            pivots,
            dual_basis,
            dropped_rows,
        }
    }

    /// The `[n, 0]` code.
    pub fn zero(n: usize) -> Self {
        Self::from_independent(n, Vec::new(), 0)
    }

    /// The whole space GF(4)^n.
    pub fn full(n: usize) -> Self {
        let rows = (0..n).map(|i| Gf4Vector::unit(n, i, Gf4::ONE)).collect();
        Self::from_independent(n, rows, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.len()
    }

    /// Number of input rows discarded as linearly dependent.
    pub fn dropped_rows(&self) -> usize {
        self.dropped_rows
    }

    pub fn generator(&self) -> &[Gf4Vector] {
        &self.generator
    }

    pub fn generator_matrix(&self) -> Option<GeneratorMatrix> {
        GeneratorMatrix::new(self.generator.clone()).ok()
    }

    pub fn reduced(&self) -> &[Gf4Vector] {
        &self.reduced
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis of the hermitian dual, `n - k` rows.
    pub fn dual_basis(&self) -> &[Gf4Vector] {
        &self.dual_basis
    }

    /// The hermitian dual `[n, n-k]` code.
    pub fn dual(&self) -> LinearCode {
        LinearCode::from_independent(self.n, self.dual_basis.clone(), 0)
    }

    /// Membership in the row space.
    pub fn contains(&self, v: &Gf4Vector) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: v.len(),
            });
        }
        let mut r = v.clone();
        for (row, &p) in self.reduced.iter().zip(&self.pivots) {
            let c = r.get(p);
            if !c.is_zero() {
                r.axpy(c, row);
            }
        }
        Ok(r.is_zero())
    }

    /// True when `v` is hermitian-orthogonal to every generator row.
    pub fn is_in_dual(&self, v: &Gf4Vector) -> Result<bool> {
        for g in &self.generator {
            if !v.hermitian_inner(g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same row space.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.n == other.n && self.k() == other.k() && self.reduced == other.reduced
    }

    pub fn is_hermitian_self_orthogonal(&self) -> bool {
        let g = &self.generator;
        (0..g.len()).all(|i| {
            (i..g.len()).all(|j| g[i].hermitian_inner(&g[j]).is_ok_and(|v| v.is_zero()))
        })
    }

    /// Trace self-orthogonality. The trace form is only GF(2)-bilinear, so it
    /// is checked on the additive generating set `{g, α·g}`.
    pub fn is_trace_self_orthogonal(&self) -> bool {
        let add_gens: Vec<Gf4Vector> = self
            .generator
            .iter()
            .flat_map(|g| [g.clone(), g.scale(Gf4::ALPHA)])
            .collect();
        (0..add_gens.len()).all(|i| {
            (i..add_gens.len()).all(|j| add_gens[i].trace_inner(&add_gens[j]) == Ok(0))
        })
    }

    /// Hermitian self-dual: self-orthogonal with `2k = n`.
    pub fn is_self_dual(&self) -> bool {
        2 * self.k() == self.n && self.is_hermitian_self_orthogonal()
    }

    /// Whether every codeword has even weight.
    ///
    /// Self-orthogonal codes are even, so for them the answer comes from the
    /// generator rows. Anything else is enumerated under `budget`.
    pub fn is_even(&self, budget: Budget) -> Result<bool> {
        if self.is_hermitian_self_orthogonal() {
            return Ok(true);
        }
        let w = enumerator::weight_enumerator(self, budget)?;
        Ok(w.coefficients()
            .iter()
            .enumerate()
            .all(|(j, &a)| j % 2 == 0 || a == 0))
    }

    /// Codewords vanishing at `position`, with that coordinate deleted.
    pub fn shorten(&self, position: usize) -> Result<LinearCode> {
        if position >= self.n {
            return Err(Error::IndexOutOfRange {
                index: position,
                len: self.n,
            });
        }
        if self.n == 1 {
            return Err(Error::Precondition(
                "cannot shorten a length-1 code".into(),
            ));
        }
        let mut rows = self.reduced.clone();
        if let Some(p) = rows.iter().position(|r| !r.get(position).is_zero()) {
            let inv = rows[p].get(position).inverse().expect("nonzero entry");
            let pivot_row = rows.remove(p).scale(inv);
            for r in rows.iter_mut() {
                let c = r.get(position);
                if !c.is_zero() {
                    r.axpy(c, &pivot_row);
                }
            }
        }
        let rows: Vec<Gf4Vector> = rows.iter().map(|r| r.remove(position)).collect();
        if rows.is_empty() {
            return Ok(LinearCode::zero(self.n - 1));
        }
        Ok(LinearCode::from_generator(GeneratorMatrix::new(rows)?))
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.same_code(other)
    }
}

/// `k` rows, row `i` being `first_row` cyclically shifted right by `i`.
pub fn circulant(first_row: &Gf4Vector, k: usize) -> Result<GeneratorMatrix> {
    if k == 0 || k > first_row.len() {
        return Err(Error::Precondition(format!(
            "circulant row count {k} must lie in 1..={}",
            first_row.len()
        )));
    }
    GeneratorMatrix::new((0..k).map(|i| first_row.rotate_right(i)).collect())
}
