//! Plain-text matrix files.
//!
//! ```text
//! N
//! re(r11) im(r11) re(r12) im(r12) ... re(r1N) im(r1N)
//! ...
//! re(rN1) im(rN1) ...                 re(rNN) im(rNN)
//! ```
//!
//! UTF-8, `\n` line endings, floats with 17 significant digits.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Result, UqpError};
use crate::hermitian::HermitianMatrix;

/// Scientific notation with 17 significant digits; parses back bit-exactly.
pub fn format_f64(x: f64) -> String {
    format!("{:.16e}", x)
}

pub fn format_matrix(r: &HermitianMatrix) -> String {
    let n = r.n();
    let mut out = String::with_capacity(n * n * 50);
    out.push_str(&n.to_string());
    out.push('\n');
    for i in 0..n {
        let cells: Vec<String> = r
            .row(i)
            .iter()
            .flat_map(|z| [format_f64(z.re), format_f64(z.im)])
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<HermitianMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or(UqpError::EmptyMatrix)?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| UqpError::Parse(format!("bad dimension line {header:?}")))?;
    if n == 0 {
        return Err(UqpError::EmptyMatrix);
    }
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| UqpError::Parse(format!("expected {n} rows, found {i}")))?;
        let vals = line
            .split_whitespace()
            .map(|t| t.parse::<f64>().map_err(|_| UqpError::Parse(format!("bad float {t:?} in row {}", i + 1))))
            .collect::<Result<Vec<f64>>>()?;
        if vals.len() != 2 * n {
            return Err(UqpError::Parse(format!(
                "row {} has {} values, expected {}",
                i + 1,
                vals.len(),
                2 * n
            )));
        }
        entries.extend(vals.chunks_exact(2).map(|p| Complex64::new(p[0], p[1])));
    }
    if lines.next().is_some() {
        return Err(UqpError::Parse(format!("trailing data after {n} rows")));
    }
    HermitianMatrix::from_row_major(n, entries)
}

pub fn write_matrix<W: Write>(r: &HermitianMatrix, mut w: W) -> Result<()> {
    w.write_all(format_matrix(r).as_bytes())?;
    Ok(())
}

pub fn write_matrix_file(r: &HermitianMatrix, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, format_matrix(r))?;
    Ok(())
}

pub fn read_matrix_file(path: impl AsRef<Path>) -> Result<HermitianMatrix> {
    parse_matrix(&fs::read_to_string(path)?)
}
