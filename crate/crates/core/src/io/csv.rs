use std::fs::File;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::ols::{Column, Dataset};

/// Which file to read and which columns to pull from it.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvSpec {
    pub path: PathBuf,
    pub response: String,
    pub predictors: Vec<String>,
    pub delimiter: u8,
}

impl CsvSpec {
    pub fn new(path: impl Into<PathBuf>, response: &str, predictors: &[&str]) -> Self {
        Self {
            path: path.into(),
            response: response.to_string(),
            predictors: predictors.iter().map(|s| s.to_string()).collect(),
            delimiter: b',',
        }
    }

    pub fn with_delimiter(mut self, delimiter: u8) -> Self {
        self.delimiter = delimiter;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.predictors.is_empty() {
            return Err(Error::EmptySubset);
        }
        if self.predictors.contains(&self.response) {
            return Err(Error::DuplicateName(self.response.clone()));
        }
        Ok(())
    }
}

/// Reads the selected columns of a headed CSV file as 64-bit floats.
pub fn load_csv(spec: &CsvSpec) -> Result<Dataset> {
    spec.validate()?;
    let file = File::open(&spec.path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::FileNotFound(spec.path.clone()),
        _ => Error::Io(format!("{}: {e}", spec.path.display())),
    })?;
    read_csv(file, spec)
}

/// Same as [`load_csv`] but from any reader; `spec.path` is ignored.
pub fn read_csv<R: Read>(reader: R, spec: &CsvSpec) -> Result<Dataset> {
    spec.validate()?;
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(spec.delimiter)
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let headers = rdr.headers().map_err(csv_error)?.clone();
    let wanted: Vec<&str> = std::iter::once(spec.response.as_str())
        .chain(spec.predictors.iter().map(String::as_str))
        .collect();
    let positions = wanted
        .iter()
        .map(|name| {
            headers
                .iter()
                .position(|h| h == *name)
                .ok_or_else(|| Error::MissingColumn(name.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut values: Vec<Vec<f64>> = vec![Vec::new(); wanted.len()];
    for (i, record) in rdr.records().enumerate() {
        let record = record.map_err(csv_error)?;
        // data rows are numbered from 1; the header is row 0
        let row = i + 1;
        for (k, &pos) in positions.iter().enumerate() {
            let cell = record.get(pos).ok_or_else(|| Error::ParseError {
                row,
                column: pos + 1,
                message: format!("row has {} fields", record.len()),
            })?;
            let v: f64 = cell.parse().map_err(|_| Error::NonNumericCell {
                row,
                column: wanted[k].to_string(),
                value: cell.to_string(),
            })?;
            values[k].push(v);
        }
    }
    if values[0].is_empty() {
        return Err(Error::EmptyData);
    }

    let columns = wanted
        .iter()
        .zip(values)
        .map(|(name, v)| Column::new(*name, v))
        .collect();
    let predictors: Vec<&str> = spec.predictors.iter().map(String::as_str).collect();
    Dataset::new(columns, &spec.response, &predictors)
}

fn csv_error(e: csv::Error) -> Error {
    match e.position() {
        Some(pos) => Error::ParseError {
            row: pos.record() as usize,
            column: 0,
            message: e.to_string(),
        },
        None if matches!(e.kind(), csv::ErrorKind::Io(_)) => Error::Io(e.to_string()),
        None => Error::ParseError {
            row: 0,
            column: 0,
            message: e.to_string(),
        },
    }
}

/// Writes every column of `d` (response first) at full round-trip precision.
pub fn write_csv<W: Write>(d: &Dataset, writer: W, delimiter: u8) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .delimiter(delimiter)
        .from_writer(writer);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(d.columns().iter().map(|c| c.name.as_str()))
        .map_err(io)?;
    for i in 0..d.n() {
        w.write_record(d.columns().iter().map(|c| c.values[i].to_string()))
            .map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

/// Convenience wrapper around [`write_csv`] for a file path.
pub fn save_csv(d: &Dataset, path: &Path, delimiter: u8) -> Result<()> {
    write_csv(d, File::create(path)?, delimiter)
}
