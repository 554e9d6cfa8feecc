//! Row types and the streaming CSV/JSON writer.

use std::io::Write;

use serde::{Deserialize, Serialize};

use semigroup_lengths::{to_decimal_string, Fraction, Rational};

/// Decimal places used for every `*_decimal` column.
pub const PLACES: u32 = 6;

pub fn decimal(q: &Rational) -> String {
    to_decimal_string(q, PLACES)
}

pub fn decimal_f64(x: f64) -> String {
    format!("{x:.prec$}", prec = PLACES as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsRow {
    pub n: u64,
    pub kind: String,
    pub mean: Fraction,
    pub mean_decimal: String,
    pub median_decimal: String,
    pub mode: Fraction,
    pub stdev_decimal: String,
    pub min: Fraction,
    pub max: Fraction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistogramRow {
    pub n: u64,
    pub m: i128,
    pub count: u128,
    pub position: Fraction,
    pub position_decimal: String,
    pub scaled_value: Fraction,
    pub scaled_value_decimal: String,
    pub density: Fraction,
    pub density_decimal: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowRow {
    pub n: u64,
    pub alpha: Fraction,
    pub beta: Fraction,
    pub count: u128,
    pub scaled_mass: Fraction,
    pub scaled_mass_decimal: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRow {
    pub n: u64,
    pub alpha: Fraction,
    pub beta: Fraction,
    pub count: u128,
    pub scaled_mass: Fraction,
    pub scaled_mass_decimal: String,
    pub integral: Fraction,
    pub integral_decimal: String,
    pub error: Fraction,
    pub error_decimal: String,
    pub theorem_bound: Fraction,
    pub theorem_bound_decimal: String,
    pub refined_bound: Fraction,
    pub refined_bound_decimal: String,
    pub within_theorem_bound: bool,
    pub within_refined_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueRow {
    pub n: u64,
    pub d: i128,
    pub c: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupersymRow {
    pub n: u64,
    pub q: u64,
    pub r: u64,
    pub x1: u64,
    pub x2: u64,
    pub x3: u64,
    pub offset: i128,
    pub passed: bool,
}

enum Backend<W: Write> {
    Csv(Box<csv::Writer<W>>),
    Json { out: W, rows: usize },
}

/// Writes rows one at a time. CSV gets a header row; JSON is a single
/// object `{"config": ..., "rows": [...]}` with one row per line.
pub struct RowSink<W: Write> {
    backend: Backend<W>,
}

impl<W: Write> RowSink<W> {
    pub fn new<C: Serialize>(format: Format, mut out: W, config: &C) -> crate::Result<Self> {
        let backend = match format {
            Format::Csv => Backend::Csv(Box::new(
                csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(out),
            )),
            Format::Json => {
                out.write_all(b"{\"config\":")?;
                serde_json::to_writer(&mut out, config)?;
                out.write_all(b",\"rows\":[")?;
                Backend::Json { out, rows: 0 }
            }
        };
        Ok(RowSink { backend })
    }

    pub fn push<R: Serialize>(&mut self, row: &R) -> crate::Result<()> {
        match &mut self.backend {
            Backend::Csv(w) => w.serialize(row)?,
            Backend::Json { out, rows } => {
                out.write_all(if *rows == 0 { b"\n" } else { b",\n" })?;
                serde_json::to_writer(&mut *out, row)?;
                *rows += 1;
            }
        }
        Ok(())
    }

    pub fn finish(self) -> crate::Result<W> {
        match self.backend {
            Backend::Csv(w) => w.into_inner().map_err(|e| crate::CliError::Io(e.into_error())),
            Backend::Json { mut out, .. } => {
                out.write_all(b"\n]}\n")?;
                out.flush()?;
                Ok(out)
            }
        }
    }
}
