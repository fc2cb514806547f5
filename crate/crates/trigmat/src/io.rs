//! Matrix CSV exchange format: a `dim=<d>` header line followed by d rows of
//! d comma-separated values, 17 significant digits each.

use std::io::{BufRead, Write};

use crate::matrix::Mat;

#[derive(Debug, thiserror::Error)]
pub enum CsvError {
    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("csv parse error: {0}")]
    Parse(String),
}

pub fn write_matrix<W: Write>(out: &mut W, m: &Mat) -> Result<(), CsvError> {
    if m.rows() != m.cols() {
        return Err(CsvError::Parse(format!(
            "matrix csv format is square-only, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    writeln!(out, "dim={}", m.rows())?;
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| format!("{:.16e}", m[(i, j)])).collect();
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(())
}

pub fn read_matrix<R: BufRead>(input: R) -> Result<Mat, CsvError> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .ok_or_else(|| CsvError::Parse("empty input".into()))??;
    let dim: usize = header
        .strip_prefix("dim=")
        .ok_or_else(|| CsvError::Parse(format!("expected 'dim=<d>' header, got '{header}'")))?
        .trim()
        .parse()
        .map_err(|e| CsvError::Parse(format!("bad dimension: {e}")))?;
    if dim == 0 {
        return Err(CsvError::Parse("dimension must be positive".into()));
    }
    let mut m = Mat::zeros(dim, dim);
    for i in 0..dim {
        let line = lines
            .next()
            .ok_or_else(|| CsvError::Parse(format!("missing row {}", i + 1)))??;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != dim {
            return Err(CsvError::Parse(format!(
                "row {} has {} fields, expected {dim}",
                i + 1,
                fields.len()
            )));
        }
        for (j, f) in fields.iter().enumerate() {
            m[(i, j)] = f
                .trim()
                .parse()
                .map_err(|e| CsvError::Parse(format!("row {}, field {}: {e}", i + 1, j + 1)))?;
        }
    }
    Ok(m)
}

/// Reads a vector file: decimal values separated by commas, whitespace, or
/// newlines.
pub fn read_vector<R: BufRead>(input: R) -> Result<Vec<f64>, CsvError> {
    let mut values = Vec::new();
    for line in input.lines() {
        let line = line?;
        for tok in line.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            values.push(
                tok.parse()
                    .map_err(|e| CsvError::Parse(format!("bad value '{tok}': {e}")))?,
            );
        }
    }
    Ok(values)
}
