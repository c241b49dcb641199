//! Plain-text fan files.
//!
//! ```text
//! # Hirzebruch surface F1
//! name F1
//! dim 2
//! ray 1 0
//! ray 0 1
//! ray -1 1
//! ray 0 -1
//! cone 0 1
//! cone 1 2
//! cone 2 3
//! cone 3 0
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Ray indices are
//! 0-based in declaration order.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use thiserror::Error;
use toricmdp::fan::Fan;
use toricmdp::linalg::IntVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanFile {
    pub name: Option<String>,
    pub dim: usize,
    pub rays: Vec<IntVector>,
    pub cones: Vec<Vec<usize>>,
}

impl FanFile {
    pub fn to_fan(&self) -> toricmdp::Result<Fan> {
        Fan::new(self.dim, self.rays.clone(), self.cones.clone())
    }

    /// Canonical text form; parsing it returns an equal value.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            writeln!(out, "name {name}").unwrap();
        }
        writeln!(out, "dim {}", self.dim).unwrap();
        for r in &self.rays {
            let entries: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(out, "ray {}", entries.join(" ")).unwrap();
        }
        for c in &self.cones {
            let entries: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            writeln!(out, "cone {}", entries.join(" ")).unwrap();
        }
        out
    }
}

impl fmt::Display for FanFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

pub fn parse_fan_file(text: &str) -> Result<FanFile, ParseError> {
    let err = |line: usize, column: usize, message: String| ParseError {
        line,
        column,
        message,
    };
    let mut name = None;
    let mut dim: Option<usize> = None;
    let mut rays = Vec::new();
    // cone entries keep their positions for the range check at the end
    let mut cones: Vec<Vec<(usize, usize, usize)>> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks = tokens(raw);
        let (kw_col, keyword) = toks[0];
        let args = &toks[1..];
        match keyword {
            "name" => {
                if args.is_empty() {
                    return Err(err(line_no, kw_col, "name needs a value".into()));
                }
                let start = args[0].0;
                let value: String = raw.chars().skip(start - 1).collect();
                name = Some(value.trim_end().to_string());
            }
            "dim" => {
                if dim.is_some() {
                    return Err(err(line_no, kw_col, "dim given twice".into()));
                }
                if args.len() != 1 {
                    return Err(err(line_no, kw_col, "dim takes exactly one value".into()));
                }
                let (col, tok) = args[0];
                let n: usize = tok
                    .parse()
                    .map_err(|_| err(line_no, col, format!("invalid dimension `{tok}`")))?;
                if n == 0 {
                    return Err(err(line_no, col, "dimension must be positive".into()));
                }
                dim = Some(n);
            }
            "ray" => {
                let Some(n) = dim else {
                    return Err(err(line_no, kw_col, "missing dim before ray".into()));
                };
                if args.len() != n {
                    return Err(err(
                        line_no,
                        kw_col,
                        format!("dimension mismatch: ray has {} entries, expected {n}", args.len()),
                    ));
                }
                let mut v = Vec::with_capacity(n);
                for &(col, tok) in args {
                    let x: BigInt = tok
                        .parse()
                        .map_err(|_| err(line_no, col, format!("invalid integer `{tok}`")))?;
                    v.push(x);
                }
                rays.push(IntVector(v));
            }
            "cone" => {
                let Some(n) = dim else {
                    return Err(err(line_no, kw_col, "missing dim before cone".into()));
                };
                if args.len() != n {
                    return Err(err(
                        line_no,
                        kw_col,
                        format!("dimension mismatch: cone has {} indices, expected {n}", args.len()),
                    ));
                }
                let mut c = Vec::with_capacity(n);
                for &(col, tok) in args {
                    let i: usize = tok
                        .parse()
                        .map_err(|_| err(line_no, col, format!("invalid ray index `{tok}`")))?;
                    c.push((i, line_no, col));
                }
                cones.push(c);
            }
            other => {
                return Err(err(line_no, kw_col, format!("unknown keyword `{other}`")));
            }
        }
    }

    let Some(dim) = dim else {
        return Err(err(last_line + 1, 1, "missing dim".into()));
    };
    let mut out_cones = Vec::with_capacity(cones.len());
    for c in cones {
        let mut indices = Vec::with_capacity(c.len());
        for (i, line, col) in c {
            if i >= rays.len() {
                return Err(err(
                    line,
                    col,
                    format!("ray index {i} out of range ({} rays)", rays.len()),
                ));
            }
            indices.push(i);
        }
        out_cones.push(indices);
    }
    Ok(FanFile {
        name,
        dim,
        rays,
        cones: out_cones,
    })
}
