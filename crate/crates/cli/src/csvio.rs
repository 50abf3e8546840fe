use std::path::Path;

use archgeom_core::boxcount::DimensionReport;
use archgeom_core::stats::DimSeries;

use crate::error::{io_err, CliError};

/// Reads a rectangular CSV of labeled numeric columns (header row, `.`
/// decimal point). Errors carry the row and column of the first offense.
pub fn read_series(path: &Path) -> Result<Vec<DimSeries>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let labels: Vec<String> =
        reader.headers().map_err(csv_err(path))?.iter().map(str::to_owned).collect();
    if labels.is_empty() {
        return Err(CliError::Input(format!("{}: empty header row", path.display())));
    }
    let mut columns: Vec<Vec<f64>> = vec![Vec::new(); labels.len()];
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(csv_err(path))?;
        let row = i + 2; // 1-based, after the header
        if record.len() != labels.len() {
            return Err(CliError::Input(format!(
                "{}: row {row} has {} fields, expected {}",
                path.display(),
                record.len(),
                labels.len()
            )));
        }
        for (j, field) in record.iter().enumerate() {
            let value: f64 = field.parse().map_err(|_| {
                CliError::Input(format!(
                    "{}: row {row}, column {} ({}): not a number: {field:?}",
                    path.display(),
                    j + 1,
                    labels[j]
                ))
            })?;
            columns[j].push(value);
        }
    }
    labels
        .into_iter()
        .zip(columns)
        .map(|(label, values)| DimSeries::new(label, values).map_err(CliError::from))
        .collect()
}

fn csv_err(path: &Path) -> impl Fn(csv::Error) -> CliError + '_ {
    move |e| CliError::Input(format!("{}: {e}", path.display()))
}

/// `delta,count,pairwise_dim` rows, largest scale first; the first row has
/// no pairwise dimension. Numbers use shortest round-trip formatting.
pub fn boxcount_csv(report: &DimensionReport) -> String {
    let mut out = String::from("delta,count,pairwise_dim\n");
    for (i, record) in report.series.records.iter().enumerate() {
        let dim = match i.checked_sub(1).and_then(|k| report.pairwise.get(k)) {
            Some(p) => p.dim.to_string(),
            None => String::new(),
        };
        out.push_str(&format!("{},{},{dim}\n", record.delta, record.count));
    }
    out
}

/// Parses `--pairs "a,b;c,d"` into label pairs.
pub fn parse_pairs(spec: &str) -> Result<Vec<(String, String)>, CliError> {
    spec.split(';')
        .filter(|part| !part.is_empty())
        .map(|part| match part.split(',').map(str::trim).collect::<Vec<_>>().as_slice() {
            [a, b] if !a.is_empty() && !b.is_empty() => Ok((a.to_string(), b.to_string())),
            _ => Err(CliError::Usage(format!(
                "--pairs expects 'colA,colB[;colC,colD...]', got {part:?}"
            ))),
        })
        .collect()
}

pub fn io_read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| io_err(path, e))
}

pub fn io_write(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|e| io_err(path, e))
}
