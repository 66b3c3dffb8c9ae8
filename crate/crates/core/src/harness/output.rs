//! CSV and empirical-CDF emission.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Result, UqpError};
use crate::matrix_io::format_f64;
use crate::solvers::Method;

use super::ExperimentRecord;

pub const CSV_HEADER: [&str; 10] = [
    "n",
    "matrix_seed",
    "method",
    "value",
    "normalized_value",
    "spectral_hi",
    "prop1_ratio",
    "thm1_applicable",
    "prop2_applicable",
    "runtime_micros",
];

/// One parsed CSV row.
#[derive(Clone, Debug, PartialEq)]
pub struct CsvRow {
    pub n: usize,
    pub matrix_seed: u64,
    pub method: Method,
    pub value: f64,
    pub normalized_value: f64,
    pub spectral_hi: f64,
    pub prop1_ratio: f64,
    pub thm1_applicable: bool,
    pub prop2_applicable: bool,
    pub runtime_micros: u64,
}

fn writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w)
}

pub fn write_csv<W: Write>(records: &[ExperimentRecord], w: W) -> Result<()> {
    if records.is_empty() {
        return Err(UqpError::InvalidConfig("no records to emit".into()));
    }
    let mut wtr = writer(w);
    wtr.write_record(CSV_HEADER)?;
    for r in records {
        wtr.write_record([
            r.n.to_string(),
            r.matrix_seed.to_string(),
            r.method.tag().to_string(),
            format_f64(r.value),
            format_f64(r.normalized_value),
            format_f64(r.bounds.spectral_hi),
            format_f64(r.bounds.prop1_ratio),
            r.bounds.thm1_applicable.to_string(),
            r.bounds.prop2_applicable.to_string(),
            r.runtime_micros.to_string(),
        ])?;
    }
    wtr.flush()?;
    Ok(())
}

pub fn emit_csv(records: &[ExperimentRecord], path: impl AsRef<Path>) -> Result<()> {
    write_csv(records, File::create(path)?)
}

fn field<T: std::str::FromStr>(rec: &csv::StringRecord, i: usize) -> Result<T> {
    let raw = rec.get(i).ok_or_else(|| UqpError::Parse(format!("missing column {}", CSV_HEADER[i])))?;
    raw.parse()
        .map_err(|_| UqpError::Parse(format!("bad {} value {raw:?}", CSV_HEADER[i])))
}

pub fn read_csv<R: Read>(r: R) -> Result<Vec<CsvRow>> {
    let mut rdr = csv::Reader::from_reader(r);
    let header = rdr.headers()?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(UqpError::Parse(format!("unexpected header {header:?}")));
    }
    rdr.records()
        .map(|rec| {
            let rec = rec?;
            Ok(CsvRow {
                n: field(&rec, 0)?,
                matrix_seed: field(&rec, 1)?,
                method: rec.get(2).unwrap_or_default().parse()?,
                value: field(&rec, 3)?,
                normalized_value: field(&rec, 4)?,
                spectral_hi: field(&rec, 5)?,
                prop1_ratio: field(&rec, 6)?,
                thm1_applicable: field(&rec, 7)?,
                prop2_applicable: field(&rec, 8)?,
                runtime_micros: field(&rec, 9)?,
            })
        })
        .collect()
}

/// Empirical CDF of normalized values for one `(method, n)` slice:
/// ascending values with cumulative fractions `(k + 1) / count`.
pub fn emit_cdf(records: &[ExperimentRecord], method: Method, n: usize) -> Result<Vec<(f64, f64)>> {
    let mut vals: Vec<f64> = records
        .iter()
        .filter(|r| r.method == method && r.n == n)
        .map(|r| r.normalized_value)
        .collect();
    if vals.is_empty() {
        return Err(UqpError::NoMatchingRecords { method: method.tag().into(), n });
    }
    vals.sort_by(f64::total_cmp);
    let count = vals.len() as f64;
    Ok(vals.into_iter().enumerate().map(|(k, v)| (v, (k + 1) as f64 / count)).collect())
}

/// CDF table for every `(method, n)` present, columns
/// `method,n,normalized_value,cumulative_fraction`.
pub fn write_cdf_csv<W: Write>(records: &[ExperimentRecord], w: W) -> Result<()> {
    let mut keys: Vec<(Method, usize)> = records.iter().map(|r| (r.method, r.n)).collect();
    keys.sort();
    keys.dedup();
    let mut wtr = writer(w);
    wtr.write_record(["method", "n", "normalized_value", "cumulative_fraction"])?;
    for (method, n) in keys {
        for (v, f) in emit_cdf(records, method, n)? {
            wtr.write_record([method.tag().to_string(), n.to_string(), format_f64(v), format_f64(f)])?;
        }
    }
    wtr.flush()?;
    Ok(())
}
