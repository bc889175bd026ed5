//! CSV ingestion, missing-record elimination, min-max normalization and
//! the parity train/test split.
//!
//! Records with a missing-value token are dropped whole; surviving records
//! keep their file order, which the parity split depends on. Normalization
//! statistics are computed on the full dataset before splitting, and the
//! target column is normalized along with the inputs.

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("failed to open {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("malformed csv in {path}: {source}")]
    Csv {
        path: String,
        #[source]
        source: csv::Error,
    },
    #[error("target column '{0}' not found in header")]
    UnknownTargetColumn(String),
    #[error("record {record}: column '{column}' holds non-numeric value '{value}'")]
    NonNumericCell {
        record: usize,
        column: String,
        value: String,
    },
    #[error("no records survived missing-value elimination")]
    NoSurvivingRecords,
    #[error("dataset is empty")]
    EmptyDataset,
}

/// One record: input vector plus the regression target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub inputs: Vec<f64>,
    pub target: f64,
}

/// An ordered collection of samples sharing one schema. Order is preserved
/// from the source file because the train/test split is positional.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    pub samples: Vec<Sample>,
    pub input_names: Vec<String>,
    pub target_name: String,
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Number of input columns.
    pub fn input_dim(&self) -> usize {
        self.input_names.len()
    }

    /// Input rows as an owned N x d matrix.
    pub fn input_matrix(&self) -> Vec<Vec<f64>> {
        self.samples.iter().map(|s| s.inputs.clone()).collect()
    }

    pub fn targets(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.target).collect()
    }

    /// Write the dataset back out in its CSV layout for audit.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        write!(w, "{}", self.input_names.join(","))?;
        writeln!(w, ",{}", self.target_name)?;
        for s in &self.samples {
            for v in &s.inputs {
                write!(w, "{v},")?;
            }
            writeln!(w, "{}", s.target)?;
        }
        Ok(())
    }
}

/// Per-column min/max in raw units, inputs first and the target last.
/// Columns with `max == min` are flagged constant and map to 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormParams {
    pub names: Vec<String>,
    pub min: Vec<f64>,
    pub max: Vec<f64>,
    pub constant: Vec<bool>,
}

impl NormParams {
    pub fn column_count(&self) -> usize {
        self.names.len()
    }

    /// Index of the target column (always stored last).
    pub fn target_index(&self) -> usize {
        self.names.len() - 1
    }

    pub fn normalize_value(&self, col: usize, raw: f64) -> f64 {
        if self.constant[col] {
            0.0
        } else {
            (raw - self.min[col]) / (self.max[col] - self.min[col])
        }
    }

    pub fn denormalize_value(&self, col: usize, normalized: f64) -> f64 {
        if self.constant[col] {
            self.min[col]
        } else {
            self.min[col] + normalized * (self.max[col] - self.min[col])
        }
    }

    pub fn normalize_inputs(&self, raw: &[f64]) -> Vec<f64> {
        raw.iter()
            .enumerate()
            .map(|(j, &v)| self.normalize_value(j, v))
            .collect()
    }

    pub fn denormalize_target(&self, normalized: f64) -> f64 {
        self.denormalize_value(self.target_index(), normalized)
    }
}

/// Load a comma-separated file with a header row, dropping every record
/// that contains `missing_token` in any cell. `target_column` names the
/// column predicted; all other columns become inputs, in header order.
pub fn load_csv(
    path: &Path,
    target_column: &str,
    missing_token: &str,
) -> Result<Dataset, DatasetError> {
    let display = path.display().to_string();
    let file = File::open(path).map_err(|source| DatasetError::Io {
        path: display.clone(),
        source,
    })?;
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(BufReader::new(file));

    let headers: Vec<String> = rdr
        .headers()
        .map_err(|source| DatasetError::Csv {
            path: display.clone(),
            source,
        })?
        .iter()
        .map(str::to_owned)
        .collect();
    let target_idx = headers
        .iter()
        .position(|h| h == target_column)
        .ok_or_else(|| DatasetError::UnknownTargetColumn(target_column.to_owned()))?;
    let input_names: Vec<String> = headers
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != target_idx)
        .map(|(_, h)| h.clone())
        .collect();

    let mut samples = Vec::new();
    for (idx, record) in rdr.records().enumerate() {
        let record = record.map_err(|source| DatasetError::Csv {
            path: display.clone(),
            source,
        })?;
        if record.iter().any(|cell| cell == missing_token) {
            continue;
        }
        let mut inputs = Vec::with_capacity(headers.len() - 1);
        let mut target = 0.0;
        for (col, cell) in record.iter().enumerate() {
            let value: f64 = cell.parse().map_err(|_| DatasetError::NonNumericCell {
                record: idx + 1,
                column: headers[col].clone(),
                value: cell.to_owned(),
            })?;
            if col == target_idx {
                target = value;
            } else {
                inputs.push(value);
            }
        }
        samples.push(Sample { inputs, target });
    }

    if samples.is_empty() {
        return Err(DatasetError::NoSurvivingRecords);
    }
    Ok(Dataset {
        samples,
        input_names,
        target_name: target_column.to_owned(),
    })
}

/// Map every column (inputs and target) to `[0, 1]` by `(x - min) / (max - min)`.
/// Constant columns map to 0 everywhere and are flagged in the returned
/// [`NormParams`], which retains the raw ranges for de-normalization.
pub fn normalize_minmax(d: &Dataset) -> Result<(Dataset, NormParams), DatasetError> {
    if d.is_empty() {
        return Err(DatasetError::EmptyDataset);
    }
    let n_inputs = d.input_dim();
    let cols = n_inputs + 1;
    let column = |s: &Sample, c: usize| if c < n_inputs { s.inputs[c] } else { s.target };

    let mut min = vec![f64::INFINITY; cols];
    let mut max = vec![f64::NEG_INFINITY; cols];
    for s in &d.samples {
        for c in 0..cols {
            let v = column(s, c);
            min[c] = min[c].min(v);
            max[c] = max[c].max(v);
        }
    }
    let constant: Vec<bool> = (0..cols).map(|c| min[c] == max[c]).collect();

    let mut names = d.input_names.clone();
    names.push(d.target_name.clone());
    let params = NormParams {
        names,
        min,
        max,
        constant,
    };

    let samples = d
        .samples
        .iter()
        .map(|s| Sample {
            inputs: (0..n_inputs)
                .map(|c| params.normalize_value(c, s.inputs[c]))
                .collect(),
            target: params.normalize_value(n_inputs, s.target),
        })
        .collect();

    Ok((
        Dataset {
            samples,
            input_names: d.input_names.clone(),
            target_name: d.target_name.clone(),
        },
        params,
    ))
}

/// Split by 1-based record position: even positions form the first
/// returned dataset (the training half by default convention), odd
/// positions the second. Sizes differ by at most one.
pub fn split_even_odd(d: &Dataset) -> (Dataset, Dataset) {
    let pick = |keep_even: bool| Dataset {
        samples: d
            .samples
            .iter()
            .enumerate()
            .filter(|(i, _)| ((i + 1) % 2 == 0) == keep_even)
            .map(|(_, s)| s.clone())
            .collect(),
        input_names: d.input_names.clone(),
        target_name: d.target_name.clone(),
    };
    (pick(true), pick(false))
}
