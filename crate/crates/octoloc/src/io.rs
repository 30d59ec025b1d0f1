//! Line-oriented text format for complexes, plus content hashing.
//!
//! ```text
//! # comment
//! complex <n_vertices>
//! e <u> <v>            one line per edge
//! s <v1> <v2> ... <vk>  optional declared maximal simplices
//! ```
//!
//! Canonical serialization writes the header, then edges sorted
//! lexicographically, then declared simplices sorted lexicographically.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::complex::{ComplexError, SimplicialComplex};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Complex {
        line: usize,
        #[source]
        source: ComplexError,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the text format. Duplicate edges are fine; malformed lines,
/// out-of-range vertices, and self-loops are not.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex, FormatError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut simplices: Vec<Vec<usize>> = Vec::new();
    let mut header_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().unwrap();
        match keyword {
            "complex" => {
                if n.is_some() {
                    return Err(parse_err(lineno, "duplicate `complex` header"));
                }
                let count = tokens
                    .next()
                    .ok_or_else(|| parse_err(lineno, "`complex` needs a vertex count"))?;
                let count: usize = count
                    .parse()
                    .map_err(|_| parse_err(lineno, format!("bad vertex count `{count}`")))?;
                if tokens.next().is_some() {
                    return Err(parse_err(lineno, "trailing tokens after vertex count"));
                }
                n = Some(count);
                header_line = lineno;
            }
            "e" => {
                if n.is_none() {
                    return Err(parse_err(lineno, "`e` before `complex` header"));
                }
                let mut ends = [0usize; 2];
                for slot in &mut ends {
                    let tok = tokens
                        .next()
                        .ok_or_else(|| parse_err(lineno, "`e` needs two endpoints"))?;
                    *slot = tok
                        .parse()
                        .map_err(|_| parse_err(lineno, format!("bad vertex `{tok}`")))?;
                }
                if tokens.next().is_some() {
                    return Err(parse_err(lineno, "trailing tokens on edge line"));
                }
                edges.push((ends[0], ends[1]));
            }
            "s" => {
                if n.is_none() {
                    return Err(parse_err(lineno, "`s` before `complex` header"));
                }
                let mut verts = Vec::new();
                for tok in tokens {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| parse_err(lineno, format!("bad vertex `{tok}`")))?;
                    verts.push(v);
                }
                if verts.is_empty() {
                    return Err(parse_err(lineno, "`s` needs at least one vertex"));
                }
                simplices.push(verts);
            }
            other => {
                return Err(parse_err(lineno, format!("unknown keyword `{other}`")));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(text.lines().count().max(1), "missing `complex` header"))?;
    let wrap = |source: ComplexError| FormatError::Complex {
        line: header_line,
        source,
    };
    if simplices.is_empty() {
        SimplicialComplex::from_edges(n, &edges).map_err(wrap)
    } else {
        SimplicialComplex::with_declared_simplices(n, &edges, simplices).map_err(wrap)
    }
}

/// Canonical serialization: header, sorted edges, sorted declared simplices.
pub fn write_complex(x: &SimplicialComplex) -> String {
    let mut out = String::new();
    writeln!(out, "complex {}", x.n_vertices()).unwrap();
    for (u, v) in x.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    if let Some(declared) = x.declared_simplices() {
        for s in declared {
            out.push('s');
            for v in s {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
    }
    out
}

pub fn read_complex_file(path: &Path) -> Result<SimplicialComplex, FormatError> {
    let text = fs::read_to_string(path)?;
    parse_complex(&text)
}

pub fn write_complex_file(path: &Path, x: &SimplicialComplex) -> Result<(), FormatError> {
    fs::write(path, write_complex(x))?;
    Ok(())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest {
        write!(out, "{b:02x}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, GeneratorSpec};
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let text = "# a square\ncomplex 4\n\ne 0 1\ne 1 2 # chord-free\ne 2 3\ne 3 0\n";
        let x = parse_complex(text).unwrap();
        assert_eq!(x.n_vertices(), 4);
        assert_eq!(x.n_edges(), 4);
    }

    #[test]
    fn declared_simplices_round_trip() {
        let text = "complex 3\ne 0 1\ne 1 2\ne 0 2\ns 0 1\ns 1 2\ns 0 2\n";
        let x = parse_complex(text).unwrap();
        assert!(!x.is_flag());
        let again = parse_complex(&write_complex(&x)).unwrap();
        assert_eq!(x, again);
    }

    #[test]
    fn error_cases() {
        assert!(matches!(parse_complex(""), Err(FormatError::Parse { .. })));
        assert!(matches!(
            parse_complex("e 0 1\ncomplex 2\n"),
            Err(FormatError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_complex("complex 2\ne 0 2\n"),
            Err(FormatError::Complex { .. })
        ));
        assert!(matches!(
            parse_complex("complex 2\ne 1 1\n"),
            Err(FormatError::Complex { .. })
        ));
        assert!(matches!(
            parse_complex("complex 2\nq 0 1\n"),
            Err(FormatError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_complex("complex 2\ne 0\n"),
            Err(FormatError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn canonical_output_is_sorted() {
        let x = SimplicialComplex::from_edges(4, &[(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(write_complex(&x), "complex 4\ne 0 1\ne 0 2\ne 2 3\n");
    }

    proptest! {
        /// parse(write(x)) == x on generator output.
        #[test]
        fn round_trip_on_generators(pick in 0usize..5, n in 4usize..9) {
            let spec = match pick {
                0 => GeneratorSpec::Cycle(n),
                1 => GeneratorSpec::Wheel(n),
                2 => GeneratorSpec::Octahedron,
                3 => GeneratorSpec::TriangularLatticeDisk(1 + n % 2),
                _ => GeneratorSpec::RandomFlag { n, p: 0.4, seed: n as u64 },
            };
            let x = generate(&spec).unwrap();
            let again = parse_complex(&write_complex(&x)).unwrap();
            prop_assert_eq!(x, again);
        }
    }
}
