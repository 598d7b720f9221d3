//! Quantum code parameters of a self-orthogonal linear code.
//!
//! A trace self-orthogonal additive code `C` of size `2^(n-k)` with no words
//! of weight `< d` in `C⊥ \ C` gives an `[[n, k, d]]` quantum code. For a
//! linear `[n, kc]` code this is `[[n, n - 2kc, d]]`. The code is pure when
//! `C⊥` itself has no nonzero words of weight `< d`.
//!
//! Both distances come from weight enumerators only: `W(C)` by enumeration,
//! `W(C⊥)` by MacWilliams. Since `C ⊆ C⊥`, `Aⱼ(C⊥) - Aⱼ(C)` counts the words
//! of weight `j` in `C⊥ \ C`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use crate::codes::LinearCode;
use crate::enumerator::{macwilliams, min_distance, weight_enumerator, Budget, WeightEnumerator};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuantumParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub pure: bool,
    /// `C = C⊥`: the difference set is empty and `d` is the minimum
    /// distance of `C` by convention.
    pub degenerate: bool,
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]", self.n, self.k, self.d)?;
        if self.degenerate {
            f.write_str(" degenerate")
        } else if self.pure {
            f.write_str(" pure")
        } else {
            f.write_str(" impure")
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PurityReport {
    /// Smallest weight in `C⊥ \ C`.
    pub d: usize,
    /// Minimum distance of `C⊥`.
    pub d_dual: usize,
    pub pure: bool,
    pub degenerate: bool,
}

struct Enumerators {
    primal: WeightEnumerator,
    dual: WeightEnumerator,
}

fn enumerators(code: &LinearCode, budget: Budget) -> Result<Enumerators> {
    if !code.is_hermitian_self_orthogonal() {
        return Err(Error::Precondition(
            "code is not hermitian self-orthogonal".into(),
        ));
    }
    let primal = weight_enumerator(code, budget)?;
    let dual = macwilliams(&primal, code.k())?;
    for (j, (&a, &b)) in primal.coefficients().iter().zip(dual.coefficients()).enumerate() {
        if b < a {
            return Err(Error::Internal(format!(
                "A_{j}(C⊥) = {b} is smaller than A_{j}(C) = {a} for a self-orthogonal code"
            )));
        }
    }
    Ok(Enumerators { primal, dual })
}

/// The difference-set distance, the dual distance and purity.
pub fn purity_report(code: &LinearCode, budget: Budget) -> Result<PurityReport> {
    let e = enumerators(code, budget)?;
    let d_dual = min_distance(&e.dual);
    let n = code.n();
    let diff = (1..=n).find(|&j| e.dual.coefficient(j) > e.primal.coefficient(j));
    let (d, degenerate) = match diff {
        Some(d) => (d, false),
        None => (min_distance(&e.primal), true),
    };
    Ok(PurityReport {
        d,
        d_dual,
        pure: d == d_dual,
        degenerate,
    })
}

/// `[[n, n - 2k, d]]` and purity for a self-orthogonal `[n, k]` code.
pub fn quantum_params(code: &LinearCode, budget: Budget) -> Result<QuantumParams> {
    let r = purity_report(code, budget)?;
    Ok(QuantumParams {
        n: code.n(),
        k: code.n() - 2 * code.k(),
        d: r.d,
        pure: r.pure,
        degenerate: r.degenerate,
    })
}

/// Known lower and upper bounds on `d` for `[[n, k]]` quantum codes, used
/// only to annotate results.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundsTable {
    entries: BTreeMap<(usize, usize), (usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Annotation {
    /// `d` meets the upper bound.
    Optimal,
    /// `d` lies within the bounds but below the upper bound.
    WithinBounds { lower: usize, upper: usize },
    /// `d` is above the listed upper bound, so the table or the code is wrong.
    ExceedsUpper { upper: usize },
    /// `d` improves on the listed lower bound.
    NewLower { lower: usize, upper: usize },
    NotListed,
}

impl fmt::Display for Annotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Annotation::Optimal => f.write_str("optimal"),
            Annotation::WithinBounds { lower, upper } => write!(f, "within bounds {lower}-{upper}"),
            Annotation::ExceedsUpper { upper } => write!(f, "exceeds upper bound {upper}"),
            Annotation::NewLower { lower, upper } => {
                write!(f, "improves lower bound {lower} (upper {upper})")
            }
            Annotation::NotListed => f.write_str("not listed"),
        }
    }
}

impl BoundsTable {
    /// Parses CSV rows `n,k,d_lower,d_upper`. A header row starting with
    /// `n` and `#` comment lines are skipped.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut entries = BTreeMap::new();
        for (i, rec) in reader.records().enumerate() {
            let rec = rec.map_err(|e| Error::Format {
                line: i + 1,
                msg: e.to_string(),
            })?;
            let line = rec.position().map_or(i + 1, |p| p.line() as usize);
            if rec.get(0) == Some("n") {
                continue;
            }
            if rec.len() != 4 {
                return Err(Error::Format {
                    line,
                    msg: format!("expected 4 fields n,k,d_lower,d_upper, found {}", rec.len()),
                });
            }
            let mut vals = [0usize; 4];
            for (slot, field) in vals.iter_mut().zip(rec.iter()) {
                *slot = field.parse().map_err(|_| Error::Format {
                    line,
                    msg: format!("`{field}` is not a non-negative integer"),
                })?;
            }
            let [n, k, lo, hi] = vals;
            if lo > hi {
                return Err(Error::Format {
                    line,
                    msg: format!("lower bound {lo} exceeds upper bound {hi}"),
                });
            }
            entries.insert((n, k), (lo, hi));
        }
        Ok(BoundsTable { entries })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        Self::from_csv(&std::fs::read_to_string(path)?)
    }

    pub fn get(&self, n: usize, k: usize) -> Option<(usize, usize)> {
        self.entries.get(&(n, k)).copied()
    }

    pub fn annotate(&self, p: &QuantumParams) -> Annotation {
        match self.get(p.n, p.k) {
            None => Annotation::NotListed,
            Some((_, upper)) if p.d > upper => Annotation::ExceedsUpper { upper },
            Some((_, upper)) if p.d == upper => Annotation::Optimal,
            Some((lower, upper)) if p.d > lower => Annotation::NewLower { lower, upper },
            Some((lower, upper)) => Annotation::WithinBounds { lower, upper },
        }
    }
}
