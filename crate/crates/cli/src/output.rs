//! CSV and JSON emission. Numbers in CSV use six fixed decimals.

use std::path::Path;

use rfqmst::{ObjectivePair, TreeGenotype};
use serde::Serialize;

use crate::error::CliError;
use crate::Format;

pub fn fmt6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

/// Renders a table as CSV text.
pub fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Config(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

pub fn ensure_dir(path: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(path).map_err(|e| CliError::io(path, e))
}

#[derive(Debug, Serialize)]
pub struct PointJson {
    pub f1: f64,
    pub f2: f64,
    pub genotype: String,
}

#[derive(Debug, Serialize)]
pub struct LevelsJson {
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta1: f64,
    pub beta2: f64,
}

impl From<rfqmst::ConfidenceLevels<f64>> for LevelsJson {
    fn from(l: rfqmst::ConfidenceLevels<f64>) -> Self {
        Self {
            alpha1: l.alpha1,
            alpha2: l.alpha2,
            beta1: l.beta1,
            beta2: l.beta2,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FrontJson {
    pub instance: String,
    pub levels: LevelsJson,
    pub points: Vec<PointJson>,
}

pub const FRONT_HEADER: [&str; 3] = ["f1", "f2", "genotype_bits"];

pub fn front_rows(front: &[(TreeGenotype, ObjectivePair<f64>)]) -> Vec<Vec<String>> {
    front
        .iter()
        .map(|(g, o)| vec![fmt6(o.f1), fmt6(o.f2), g.to_string()])
        .collect()
}

/// A front as CSV (`f1,f2,genotype_bits`) or JSON.
pub fn render_front(
    front: &[(TreeGenotype, ObjectivePair<f64>)],
    format: Format,
    instance: &str,
    levels: rfqmst::ConfidenceLevels<f64>,
) -> Result<String, CliError> {
    match format {
        Format::Csv => csv_text(&FRONT_HEADER, &front_rows(front)),
        Format::Json => {
            let doc = FrontJson {
                instance: instance.to_string(),
                levels: levels.into(),
                points: front
                    .iter()
                    .map(|(g, o)| PointJson {
                        f1: o.f1,
                        f2: o.f2,
                        genotype: g.to_string(),
                    })
                    .collect(),
            };
            Ok(serde_json::to_string_pretty(&doc)? + "\n")
        }
    }
}

pub fn extension(format: Format) -> &'static str {
    match format {
        Format::Csv => "csv",
        Format::Json => "json",
    }
}
