//! The `gf4code` command line.
//!
//! [`run`] parses arguments, executes one verb and returns the exit code with
//! the text destined for stdout and stderr, so the binary stays a thin shell
//! and the whole surface is testable in-process.
//!
//! Exit codes: 0 success, 2 usage or unreadable input, 3 precondition
//! violation, 4 enumeration budget exceeded, 5 internal consistency error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog;
use crate::codes::{circulant, LinearCode};
use crate::doubling::{self, find_odd_dual_vector, OddDualVector};
use crate::enumerator::{self, Budget, WeightEnumerator};
use crate::error::{Error, Result};
use crate::format;
use crate::gf4::Gf4Vector;
use crate::quantum::{self, BoundsTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Format { .. }
        | Error::Io(_)
        | Error::UnknownCatalog { .. }
        | Error::Dimension { .. }
        | Error::IndexOutOfRange { .. } => EXIT_USAGE,
        Error::Precondition(_) | Error::Construction(_) => EXIT_PRECONDITION,
        Error::Budget { .. } => EXIT_RESOURCE,
        Error::Internal(_) => EXIT_INTERNAL,
    }
}

#[derive(Parser, Debug)]
#[command(name = "gf4code", version, about = "Quaternary self-orthogonal codes and their quantum parameters")]
pub struct Cli {
    /// Largest dimension k that may be enumerated (4^k codewords).
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_MAX_DIM)]
    pub max_dim: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// [2n+1, k+1]
    Odd,
    /// [2n+2, k+2]
    Even,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Report dimension, self-orthogonality and evenness.
    Check { input: String },
    /// Weight enumerator by enumeration.
    Wenum {
        input: String,
        #[arg(long)]
        csv: bool,
    },
    /// Dual enumerator from an enumerator file.
    Macwilliams {
        file: PathBuf,
        /// Code length (defaults to the `# n:` header).
        #[arg(long)]
        n: Option<usize>,
        /// Code dimension (defaults to the `# k:` header).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        csv: bool,
    },
    /// Minimum distance of the hermitian dual.
    DualDistance { input: String },
    /// Shorten at a coordinate.
    Shorten {
        input: String,
        #[arg(long)]
        position: usize,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Circulant generator matrix from a first row.
    Circulant {
        /// Digits, e.g. "0 0 0 0 1 0 0 2 1 0 2 3 3".
        #[arg(long)]
        first_row: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Doubling construction.
    Double {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// `allones`, `search:<max rows>`, or a file with one row of digits.
        #[arg(long)]
        x1: String,
        #[arg(long, default_value = "allones")]
        x2: String,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Quantum code parameters of a self-orthogonal code.
    Quantum {
        input: String,
        /// CSV `n,k,d_lower,d_upper` used to annotate the result.
        #[arg(long)]
        bounds: Option<PathBuf>,
    },
    /// List catalog entries, or print one as a matrix.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut out = String::new();
    match execute(&cli, &mut out) {
        Ok(code) => Outcome {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: out,
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Loads `catalog:<name>` or a matrix file.
pub fn load_code(input: &str) -> Result<LinearCode> {
    if let Some(name) = input.strip_prefix("catalog:") {
        return Ok(catalog::get(name)?.code);
    }
    let text = read(Path::new(input))?;
    Ok(LinearCode::from_generator(format::parse_matrix(&text)?))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn parse_digits(text: &str) -> Result<Gf4Vector> {
    let digits = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.starts_with('#'))
        .flat_map(str::split_whitespace)
        .map(|t| match t.as_bytes() {
            [b @ b'0'..=b'3'] => Ok(b - b'0'),
            _ => Err(Error::Format {
                line: 1,
                msg: format!("`{t}` is not a GF(4) digit 0-3"),
            }),
        })
        .collect::<Result<Vec<u8>>>()?;
    if digits.is_empty() {
        return Err(Error::Format {
            line: 1,
            msg: "empty vector".into(),
        });
    }
    Gf4Vector::from_digits(&digits)
}

fn odd_vector(spec: &str, code: &LinearCode) -> Result<OddDualVector> {
    if spec == "allones" {
        return OddDualVector::all_ones(code);
    }
    if let Some(limit) = spec.strip_prefix("search:") {
        let limit: usize = limit.parse().map_err(|_| Error::Format {
            line: 0,
            msg: format!("bad search limit `{limit}`"),
        })?;
        return find_odd_dual_vector(code, limit).ok_or_else(|| {
            Error::Precondition(format!(
                "no odd-weight dual vector found combining up to {limit} dual basis rows"
            ))
        });
    }
    OddDualVector::new(code, parse_digits(&read(Path::new(spec))?)?)
}

fn enumerator_report(out: &mut String, w: &WeightEnumerator, k: usize, csv: bool) {
    if csv {
        out.push_str(&format::enumerator_csv(w));
        return;
    }
    let _ = writeln!(out, "# n: {}", w.n());
    let _ = writeln!(out, "# k: {k}");
    let _ = writeln!(out, "# codewords: {}", w.total());
    if w.has_nonzero_words() {
        let _ = writeln!(out, "# min_weight: {}", w.min_distance());
    } else {
        let _ = writeln!(out, "# min_weight: none (zero code)");
    }
    out.push_str(&w.to_string());
}

fn matrix_output(out: &mut String, code: &LinearCode, emit: Option<&PathBuf>) -> Result<()> {
    let text = code
        .generator_matrix()
        .map(|m| format::emit_matrix(&m))
        .ok_or_else(|| Error::Precondition("result is the zero code".into()))?;
    match emit {
        Some(p) => {
            write_file(p, &text)?;
            let _ = writeln!(out, "emitted: {}", p.display());
        }
        None => out.push_str(&text),
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut String) -> Result<i32> {
    let budget = Budget::new(cli.max_dim);
    match &cli.command {
        Command::Check { input } => {
            let c = load_code(input)?;
            let herm = c.is_hermitian_self_orthogonal();
            let _ = writeln!(out, "n: {}", c.n());
            let _ = writeln!(out, "k: {}", c.k());
            let _ = writeln!(out, "dropped_rows: {}", c.dropped_rows());
            let _ = writeln!(out, "hermitian_self_orthogonal: {herm}");
            let _ = writeln!(out, "trace_self_orthogonal: {}", c.is_trace_self_orthogonal());
            let _ = writeln!(out, "self_dual: {}", c.is_self_dual());
            let _ = writeln!(out, "even: {}", c.is_even(budget)?);
            if herm {
                Ok(EXIT_OK)
            } else {
                let _ = writeln!(out, "status: not self-orthogonal");
                Ok(EXIT_PRECONDITION)
            }
        }
        Command::Wenum { input, csv } => {
            let c = load_code(input)?;
            let w = enumerator::weight_enumerator(&c, budget)?;
            enumerator_report(out, &w, c.k(), *csv);
            Ok(EXIT_OK)
        }
        Command::Macwilliams { file, n, k, csv } => {
            let parsed = format::parse_enumerator(&read(file)?, *n)?;
            let k = k.or(parsed.k).ok_or_else(|| Error::Format {
                line: 0,
                msg: "dimension unknown: pass --k or add a `# k:` header".into(),
            })?;
            let w = &parsed.enumerator;
            let dual = enumerator::macwilliams(w, k)?;
            enumerator_report(out, &dual, w.n() - k, *csv);
            Ok(EXIT_OK)
        }
        Command::DualDistance { input } => {
            let c = load_code(input)?;
            let _ = writeln!(out, "n: {}", c.n());
            let _ = writeln!(out, "k: {}", c.k());
            let _ = writeln!(out, "dual_distance: {}", enumerator::dual_distance(&c, budget)?);
            Ok(EXIT_OK)
        }
        Command::Shorten {
            input,
            position,
            emit,
        } => {
            let s = load_code(input)?.shorten(*position)?;
            matrix_output(out, &s, emit.as_ref())?;
            Ok(EXIT_OK)
        }
        Command::Circulant { first_row, k, emit } => {
            let m = circulant(&parse_digits(first_row)?, *k)?;
            let text = format::emit_matrix(&m);
            match emit {
                Some(p) => {
                    write_file(p, &text)?;
                    let _ = writeln!(out, "emitted: {}", p.display());
                }
                None => out.push_str(&text),
            }
            Ok(EXIT_OK)
        }
        Command::Double {
            a,
            b,
            x1,
            x2,
            mode,
            emit,
        } => {
            let c1 = load_code(a)?;
            let c2 = load_code(b)?;
            let v1 = odd_vector(x1, &c1)?;
            let v2 = odd_vector(x2, &c2)?;
            let (code, bound) = match mode {
                Mode::Odd => {
                    let c = doubling::double_odd(&c1, &c2, &v1)?;
                    let (b, _) = doubling::dual_distance_bounds(&c1, &c2, &v1, &v2, budget)?;
                    (c, b)
                }
                Mode::Even => {
                    let c = doubling::double_even(&c1, &c2, &v1, &v2)?;
                    let (_, b) = doubling::dual_distance_bounds(&c1, &c2, &v1, &v2, budget)?;
                    (c, b)
                }
            };
            let dd = enumerator::dual_distance(&code, budget)?;
            let _ = writeln!(out, "mode: {}", if *mode == Mode::Odd { "odd" } else { "even" });
            let _ = writeln!(out, "n: {}", code.n());
            let _ = writeln!(out, "k: {}", code.k());
            let _ = writeln!(out, "x1_weight: {}", v1.weight());
            if *mode == Mode::Even {
                let _ = writeln!(out, "x2_weight: {}", v2.weight());
            }
            let _ = writeln!(out, "hermitian_self_orthogonal: {}", code.is_hermitian_self_orthogonal());
            let _ = writeln!(out, "dual_distance: {dd}");
            let _ = writeln!(out, "dual_distance_bound: {bound}");
            if dd > bound {
                return Err(Error::Internal(format!(
                    "dual distance {dd} exceeds the bound {bound}"
                )));
            }
            matrix_output(out, &code, emit.as_ref())?;
            Ok(EXIT_OK)
        }
        Command::Quantum { input, bounds } => {
            let c = load_code(input)?;
            let r = quantum::purity_report(&c, budget)?;
            let q = quantum::quantum_params(&c, budget)?;
            let _ = writeln!(out, "{q}");
            let _ = writeln!(out, "d: {}", r.d);
            let _ = writeln!(out, "d_dual: {}", r.d_dual);
            if let Some(p) = bounds {
                let table = BoundsTable::from_path(p)?;
                let _ = writeln!(out, "annotation: {}", table.annotate(&q));
            }
            Ok(EXIT_OK)
        }
        Command::Catalog { name, emit } => {
            match name {
                None => {
                    for n in catalog::list() {
                        let _ = writeln!(out, "{n}");
                    }
                }
                Some(name) => {
                    let e = catalog::get(name)?;
                    if emit.is_none() {
                        let _ = writeln!(out, "# {}: {}", e.name, e.provenance);
                    }
                    matrix_output(out, &e.code, emit.as_ref())?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("gf4code").chain(args.iter().copied()))
    }

    #[test]
    fn wenum_five_two() {
        let o = run_args(&["wenum", "catalog:c5_2"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(
            o.stdout,
            "# n: 5\n# k: 2\n# codewords: 16\n# min_weight: 4\n0 1\n4 15\n"
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["wenum", "catalog:nope"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["wenum", "/no/such/file"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn budget_exit_code() {
        let o = run_args(&["--max-dim", "3", "wenum", "catalog:c13_6_a"]);
        assert_eq!(o.code, EXIT_RESOURCE);
        assert!(o.stderr.contains("budget"));
    }

    #[test]
    fn catalog_listing() {
        let o = run_args(&["catalog"]);
        assert_eq!(o.stdout.lines().collect::<Vec<_>>(), catalog::list());
    }

    #[test]
    fn circulant_prints_matrix() {
        let o = run_args(&["circulant", "--first-row", "1 2 0", "--k", "2"]);
        assert_eq!(o.stdout, "3 2\n1 2 0\n0 1 2\n");
        assert_eq!(run_args(&["circulant", "--first-row", "1 2 0", "--k", "4"]).code, EXIT_PRECONDITION);
    }

    #[test]
    fn double_odd_five_two() {
        let o = run_args(&["double", "--a", "catalog:c5_2", "--b", "catalog:c5_2", "--x1", "allones", "--mode", "odd"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.contains("n: 11\nk: 3\n"));
        assert!(o.stdout.contains("dual_distance: 3\n"));
    }

    #[test]
    fn double_with_search() {
        let o = run_args(&["double", "--a", "catalog:c7_3", "--b", "catalog:c7_3", "--x1", "search:2", "--x2", "search:2", "--mode", "even"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.contains("n: 16\nk: 5\n"));
        let o = run_args(&["double", "--a", "catalog:hexacode", "--b", "catalog:hexacode", "--x1", "search:3", "--mode", "odd"]);
        assert_eq!(o.code, EXIT_PRECONDITION);
    }

    #[test]
    fn quantum_of_self_dual_is_degenerate() {
        let o = run_args(&["quantum", "catalog:q14"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.starts_with("[[14,0,6]] degenerate\n"));
    }
}
