//! Text formats shared by the library and the command line.
//!
//! Matrix files: a header line `n k`, then `k` lines of `n` whitespace
//! separated digits from `{0, 1, 2, 3}` (2 = α, 3 = α²). Blank lines and
//! lines starting with `#` are ignored.
//!
//! Enumerator files: lines `j A_j` for the nonzero coefficients in ascending
//! `j`. Optional `# n: <len>` and `# k: <dim>` comment lines carry the code
//! parameters.

use crate::codes::GeneratorMatrix;
use crate::enumerator::WeightEnumerator;
use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Vector};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format {
        line,
        msg: msg.into(),
    }
}

/// Parses the matrix text format.
pub fn parse_matrix(text: &str) -> Result<GeneratorMatrix> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| format_err(0, "missing `n k` header"))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| format_err(hline, format!("header `{header}` is not `n k`")))?;
    let [n, k] = dims[..] else {
        return Err(format_err(hline, format!("header `{header}` is not `n k`")));
    };
    if n == 0 || k == 0 {
        return Err(format_err(hline, "n and k must be positive"));
    }

    let mut rows = Vec::with_capacity(k);
    for (lineno, line) in lines {
        if rows.len() == k {
            return Err(format_err(
                lineno,
                format!("more than the {k} rows declared in the header"),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for tok in line.split_whitespace() {
            let d = match tok.as_bytes() {
                [b @ b'0'..=b'3'] => Gf4::from_digit(b - b'0').expect("digit in range"),
                _ => {
                    return Err(format_err(
                        lineno,
                        format!("`{tok}` is not a GF(4) digit 0-3"),
                    ))
                }
            };
            row.push(d);
        }
        if row.len() != n {
            return Err(format_err(
                lineno,
                format!("row has {} entries, header says {n}", row.len()),
            ));
        }
        rows.push(Gf4Vector::from_elements(&row));
    }
    if rows.len() != k {
        return Err(format_err(
            hline,
            format!("header declares {k} rows, found {}", rows.len()),
        ));
    }
    GeneratorMatrix::new(rows)
}

/// Inverse of [`parse_matrix`].
pub fn emit_matrix(m: &GeneratorMatrix) -> String {
    m.to_string()
}

/// An enumerator read from text, with the dimension if the file names it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratorFile {
    pub enumerator: WeightEnumerator,
    pub k: Option<usize>,
}

fn header_value(line: &str, key: &str) -> Option<String> {
    let rest = line.strip_prefix('#')?.trim_start();
    let rest = rest.strip_prefix(key)?.trim_start();
    Some(rest.strip_prefix(':')?.trim().to_string())
}

/// Parses `j A_j` lines. `n` overrides any `# n:` header; without either the
/// length is taken to be the largest `j`.
pub fn parse_enumerator(text: &str, n: Option<usize>) -> Result<EnumeratorFile> {
    let mut header_n = None;
    let mut header_k = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        for (key, slot) in [("n", &mut header_n), ("k", &mut header_k)] {
            if let Some(v) = header_value(line, key) {
                *slot = Some(v.parse::<usize>().map_err(|_| {
                    format_err(i + 1, format!("bad `{key}` header value `{v}`"))
                })?);
            }
        }
    }
    let mut pairs = Vec::new();
    for (lineno, line) in content_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [j, a] = toks[..] else {
            return Err(format_err(lineno, "expected `j A_j`"));
        };
        let j: usize = j
            .parse()
            .map_err(|_| format_err(lineno, format!("bad weight `{j}`")))?;
        let a: u128 = a
            .parse()
            .map_err(|_| format_err(lineno, format!("bad coefficient `{a}`")))?;
        if pairs.last().is_some_and(|&(prev, _)| prev >= j) {
            return Err(format_err(lineno, "weights must be strictly ascending"));
        }
        pairs.push((j, a));
    }
    let n = n
        .or(header_n)
        .or_else(|| pairs.last().map(|&(j, _)| j))
        .ok_or_else(|| format_err(0, "empty enumerator"))?;
    let enumerator = WeightEnumerator::from_pairs(n, &pairs).map_err(|_| {
        format_err(0, format!("a weight exceeds the code length {n}"))
    })?;
    Ok(EnumeratorFile {
        enumerator,
        k: header_k,
    })
}

/// Enumerator text with the parameter header lines.
pub fn emit_enumerator(w: &WeightEnumerator, k: Option<usize>) -> String {
    let mut out = format!("# n: {}\n", w.n());
    if let Some(k) = k {
        out.push_str(&format!("# k: {k}\n"));
    }
    out.push_str(&w.to_string());
    out
}

/// CSV rendering `j,A_j` with a header row.
pub fn enumerator_csv(w: &WeightEnumerator) -> String {
    let mut out = String::from("j,A_j\n");
    for (j, a) in w.nonzero_terms() {
        out.push_str(&format!("{j},{a}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const G1_TEXT: &str = "\
# circulant [13,6]
13 6
0 0 0 0 1 0 0 2 1 0 2 3 3
3 0 0 0 0 1 0 0 2 1 0 2 3
3 3 0 0 0 0 1 0 0 2 1 0 2
2 3 3 0 0 0 0 1 0 0 2 1 0

0 2 3 3 0 0 0 0 1 0 0 2 1
1 0 2 3 3 0 0 0 0 1 0 0 2
";

    #[test]
    fn parses_printed_matrix() {
        let m = parse_matrix(G1_TEXT).unwrap();
        assert_eq!((m.n(), m.k()), (13, 6));
        let first = Gf4Vector::from_digits(&[0, 0, 0, 0, 1, 0, 0, 2, 1, 0, 2, 3, 3]).unwrap();
        assert_eq!(m, crate::codes::circulant(&first, 6).unwrap());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_matrix("2 1\n1 4\n").unwrap_err();
        assert_eq!(err, Error::Format { line: 2, msg: "`4` is not a GF(4) digit 0-3".into() });
        assert!(matches!(parse_matrix("3 1\n1 1\n"), Err(Error::Format { line: 2, .. })));
        assert!(matches!(parse_matrix("2 2\n1 1\n"), Err(Error::Format { line: 1, .. })));
        assert!(matches!(parse_matrix("2 1\n1 1\n0 1\n"), Err(Error::Format { line: 3, .. })));
        assert!(matches!(parse_matrix("2\n1 1\n"), Err(Error::Format { line: 1, .. })));
        assert!(matches!(parse_matrix("# nothing\n"), Err(Error::Format { .. })));
        assert!(parse_matrix("2 1\n1 x\n").is_err());
    }

    #[test]
    fn enumerator_text() {
        let w = WeightEnumerator::from_pairs(5, &[(0, 1), (4, 15)]).unwrap();
        let text = emit_enumerator(&w, Some(2));
        assert_eq!(text, "# n: 5\n# k: 2\n0 1\n4 15\n");
        let back = parse_enumerator(&text, None).unwrap();
        assert_eq!(back.enumerator, w);
        assert_eq!(back.k, Some(2));
        // length falls back to the largest weight
        assert_eq!(parse_enumerator("0 1\n4 15\n", None).unwrap().enumerator.n(), 4);
        assert!(parse_enumerator("4 15\n0 1\n", None).is_err());
        assert!(parse_enumerator("0 1\n9 1\n", Some(5)).is_err());
        assert_eq!(enumerator_csv(&w), "j,A_j\n0,1\n4,15\n");
    }

    fn matrix() -> impl Strategy<Value = Vec<Vec<u8>>> {
        (1usize..40, 1usize..8).prop_flat_map(|(n, k)| {
            prop::collection::vec(prop::collection::vec(0u8..4, n), k)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn emit_parse_round_trip(rows in matrix()) {
            let m = GeneratorMatrix::new(
                rows.iter().map(|r| Gf4Vector::from_digits(r).unwrap()).collect(),
            ).unwrap();
            let text = emit_matrix(&m);
            let back = parse_matrix(&text).unwrap();
            prop_assert_eq!(&back, &m);
            prop_assert_eq!(emit_matrix(&back), text);
        }
    }
}
