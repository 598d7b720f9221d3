//! Named codes, built from embedded matrices and validated on access.
//!
//! | name                 | code                                                     |
//! |----------------------|----------------------------------------------------------|
//! | `c5_2`               | self-orthogonal `[5,2,4]`, shortened hexacode            |
//! | `c13_6_a`, `c13_6_b` | circulant self-orthogonal `[13,6]` codes                 |
//! | `hexacode`           | self-dual `[6,3,4]`                                      |
//! | `hexacode_shortened` | the hexacode shortened at coordinate 0, `[5,2,4]`        |
//! | `sd8_4_4`            | self-dual `[8,4,4]`: extended binary Hamming code over GF(4) |
//! | `c7_3`               | `sd8_4_4` shortened at its last coordinate, `[7,3,4]`    |
//! | `q14`                | self-dual `[14,7,6]`, `c13_6_a` bordered by the all-one row |
//!
//! The hexacode, `sd8_4_4` and `q14` generators are standard constructions,
//! not transcribed matrices; each is checked for self-duality and minimum
//! distance by enumeration whenever it is loaded.

use crate::codes::{circulant, GeneratorMatrix, LinearCode};
use crate::doubling::{auxiliary_code, OddDualVector};
use crate::enumerator::{min_distance, weight_enumerator, Budget};
use crate::error::{Error, Result};
use crate::gf4::Gf4Vector;

/// Expected parameters checked when an entry is loaded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expected {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub self_dual: bool,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub code: LinearCode,
    pub provenance: &'static str,
    pub expected: Option<Expected>,
}

/// First rows of the two circulant `[13,6]` generators.
pub const C13_6_A_FIRST_ROW: [u8; 13] = [0, 0, 0, 0, 1, 0, 0, 2, 1, 0, 2, 3, 3];
pub const C13_6_B_FIRST_ROW: [u8; 13] = [0, 0, 0, 0, 1, 1, 3, 0, 2, 3, 0, 0, 2];

const NAMES: [&str; 8] = [
    "c13_6_a",
    "c13_6_b",
    "c5_2",
    "c7_3",
    "hexacode",
    "hexacode_shortened",
    "q14",
    "sd8_4_4",
];

/// Sorted entry names.
pub fn list() -> Vec<&'static str> {
    let mut names = NAMES.to_vec();
    names.sort_unstable();
    names
}

fn rows(digits: &[&[u8]]) -> Result<LinearCode> {
    Ok(LinearCode::from_generator(GeneratorMatrix::from_digit_rows(
        digits,
    )?))
}

fn hexacode() -> Result<LinearCode> {
    rows(&[&[1, 0, 0, 1, 2, 2], &[0, 1, 0, 2, 1, 2], &[0, 0, 1, 2, 2, 1]])
}

fn sd8_4_4() -> Result<LinearCode> {
    rows(&[
        &[1, 1, 1, 1, 0, 0, 0, 0],
        &[0, 0, 1, 1, 1, 1, 0, 0],
        &[0, 0, 0, 0, 1, 1, 1, 1],
        &[0, 1, 0, 1, 0, 1, 0, 1],
    ])
}

fn c13(first: &[u8; 13]) -> Result<LinearCode> {
    Ok(LinearCode::from_generator(circulant(
        &Gf4Vector::from_digits(first)?,
        6,
    )?))
}

fn build(name: &str) -> Result<CatalogEntry> {
    let exp = |n, k, d, self_dual| {
        Some(Expected {
            n,
            k,
            d,
            self_dual,
        })
    };
    let entry = match name {
        "c5_2" => CatalogEntry {
            name: "c5_2",
            code: rows(&[&[1, 0, 1, 2, 2], &[0, 1, 2, 2, 1]])?,
            provenance: "published generator matrix of a self-orthogonal [5,2,4] code",
            expected: exp(5, 2, 4, false),
        },
        "c13_6_a" => CatalogEntry {
            name: "c13_6_a",
            code: c13(&C13_6_A_FIRST_ROW)?,
            provenance: "published circulant generator G1 of a self-orthogonal [13,6] code",
            expected: exp(13, 6, 6, false),
        },
        "c13_6_b" => CatalogEntry {
            name: "c13_6_b",
            code: c13(&C13_6_B_FIRST_ROW)?,
            provenance: "published circulant generator G2 of a self-orthogonal [13,6] code",
            expected: exp(13, 6, 6, false),
        },
        "hexacode" => CatalogEntry {
            name: "hexacode",
            code: hexacode()?,
            provenance: "derived: hexacode, self-dual [6,3,4]",
            expected: exp(6, 3, 4, true),
        },
        "hexacode_shortened" => CatalogEntry {
            name: "hexacode_shortened",
            code: hexacode()?.shorten(0)?,
            provenance: "derived: hexacode shortened at coordinate 0",
            expected: exp(5, 2, 4, false),
        },
        "sd8_4_4" => CatalogEntry {
            name: "sd8_4_4",
            code: sd8_4_4()?,
            provenance: "derived: extended binary Hamming [8,4,4] code read over GF(4)",
            expected: exp(8, 4, 4, true),
        },
        "c7_3" => CatalogEntry {
            name: "c7_3",
            code: sd8_4_4()?.shorten(7)?,
            provenance: "derived: sd8_4_4 shortened at coordinate 7",
            expected: exp(7, 3, 4, false),
        },
        "q14" => {
            let c = c13(&C13_6_A_FIRST_ROW)?;
            let x = OddDualVector::all_ones(&c)?;
            CatalogEntry {
                name: "q14",
                code: auxiliary_code(&c, &x)?,
                provenance: "derived: c13_6_a with a zero column, plus the all-one row; self-dual [14,7,6]",
                expected: exp(14, 7, 6, true),
            }
        }
        _ => {
            return Err(Error::UnknownCatalog {
                name: name.to_string(),
                available: list().into_iter().map(String::from).collect(),
            })
        }
    };
    Ok(entry)
}

fn validate(e: &CatalogEntry) -> Result<()> {
    let c = &e.code;
    let bad = |msg: String| Error::Internal(format!("catalog entry {}: {msg}", e.name));
    if c.dropped_rows() != 0 {
        return Err(bad(format!("{} dependent rows", c.dropped_rows())));
    }
    if !c.is_hermitian_self_orthogonal() {
        return Err(bad("not hermitian self-orthogonal".into()));
    }
    if let Some(x) = e.expected {
        if (c.n(), c.k()) != (x.n, x.k) {
            return Err(bad(format!("parameters [{}, {}]", c.n(), c.k())));
        }
        if x.self_dual != c.is_self_dual() {
            return Err(bad(format!("self-duality is {}", c.is_self_dual())));
        }
        let d = min_distance(&weight_enumerator(c, Budget::default())?);
        if d != x.d {
            return Err(bad(format!("minimum distance {d}, expected {}", x.d)));
        }
    }
    Ok(())
}

/// Looks up and validates an entry.
pub fn get(name: &str) -> Result<CatalogEntry> {
    let e = build(name)?;
    validate(&e)?;
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_loads() {
        for name in list() {
            let e = get(name).unwrap_or_else(|err| panic!("{name}: {err}"));
            assert_eq!(e.name, name);
        }
    }

    #[test]
    fn list_is_sorted_and_stable() {
        let a = list();
        assert_eq!(a, list());
        let mut sorted = a.clone();
        sorted.sort();
        assert_eq!(a, sorted);
        for n in ["c5_2", "c13_6_a", "c13_6_b"] {
            assert!(a.contains(&n));
        }
    }

    #[test]
    fn unknown_name_lists_alternatives() {
        let err = get("golay").unwrap_err();
        assert!(matches!(err, Error::UnknownCatalog { .. }));
        assert!(err.to_string().contains("c13_6_a"));
    }

    #[test]
    fn c5_2_rows() {
        let e = get("c5_2").unwrap();
        let digits: Vec<Vec<u8>> = e.code.generator().iter().map(|r| r.to_digits()).collect();
        assert_eq!(digits, vec![vec![1, 0, 1, 2, 2], vec![0, 1, 2, 2, 1]]);
    }

    #[test]
    fn hexacode_profile() {
        // frozen from brute-force enumeration: 1 + 45y^4 + 18y^6
        let e = get("hexacode").unwrap();
        let w = weight_enumerator(&e.code, Budget::default()).unwrap();
        assert_eq!(w.coefficients(), &[1, 0, 0, 0, 45, 0, 18]);
    }

    #[test]
    fn q14_profile() {
        // frozen from brute-force enumeration
        let w = weight_enumerator(&get("q14").unwrap().code, Budget::default()).unwrap();
        assert_eq!(
            w.coefficients(),
            &[1, 0, 0, 0, 0, 0, 273, 0, 2457, 0, 7098, 0, 6006, 0, 549]
        );
    }
}
