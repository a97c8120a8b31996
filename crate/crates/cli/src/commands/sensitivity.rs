//! `sensitivity`: exact fronts over a grid of confidence levels.

use std::io::Write;
use std::path::Path;

use rfqmst::exact::{enumerate_spanning_trees, EvaluatedTrees, FrontEntry};
use rfqmst::{ConfidenceLevels, EvalContext, ObjectivePair};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::output::{csv_text, fmt6, write_file};
use crate::{Format, SensitivityArgs};

#[derive(Debug, Clone, Copy, Deserialize)]
struct Expected {
    beta: f64,
    alpha: f64,
    f1: f64,
    f2: f64,
}

fn read_expected(path: &Path) -> Result<Vec<Expected>, CliError> {
    let mut reader = csv::Reader::from_path(path)?;
    reader
        .deserialize()
        .map(|r| r.map_err(CliError::from))
        .collect()
}

/// Entry closest to the ideal point after scaling the front to the unit box.
fn knee(front: &[FrontEntry<f64>]) -> &FrontEntry<f64> {
    let get = |f: fn(&ObjectivePair<f64>) -> f64| {
        let lo = front
            .iter()
            .map(|e| f(&e.objectives))
            .fold(f64::INFINITY, f64::min);
        let hi = front
            .iter()
            .map(|e| f(&e.objectives))
            .fold(f64::NEG_INFINITY, f64::max);
        (lo, hi - lo)
    };
    let (lo1, r1) = get(|o| o.f1);
    let (lo2, r2) = get(|o| o.f2);
    let scale = |x: f64, lo: f64, r: f64| if r > 0.0 { (x - lo) / r } else { 0.0 };
    let dist = |e: &FrontEntry<f64>| {
        scale(e.objectives.f1, lo1, r1).hypot(scale(e.objectives.f2, lo2, r2))
    };
    front
        .iter()
        .min_by(|a, b| dist(a).total_cmp(&dist(b)))
        .expect("front is never empty")
}

#[derive(Debug, Serialize)]
struct Cell {
    beta: f64,
    alpha: f64,
    front_size: usize,
    min_f1: [f64; 2],
    min_f2: [f64; 2],
    knee: [f64; 2],
    knee_genotype: String,
    expected: Option<[f64; 2]>,
    /// `on_front`, `achievable` (some tree attains it, off the front) or
    /// `unattained`
    status: Option<&'static str>,
}

pub fn sensitivity(args: &SensitivityArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (inst, _) = super::load_instance(&args.instance.instance, 1)?;
    let expected = args
        .expected
        .as_deref()
        .map(read_expected)
        .transpose()?
        .unwrap_or_default();
    let trees = enumerate_spanning_trees(&inst)?;
    let close = |a: &ObjectivePair<f64>, e: &Expected| {
        (a.f1 - e.f1).abs() <= args.tol && (a.f2 - e.f2).abs() <= args.tol
    };

    let mut cells = Vec::new();
    for &beta in &args.betas {
        for &alpha in &args.alphas {
            let levels = ConfidenceLevels::uniform(alpha, beta)
                .map_err(|e| CliError::Config(e.to_string()))?;
            let ctx = EvalContext::new(&inst, levels);
            let evaluated = EvaluatedTrees::from_trees(&ctx, &trees);
            let front = evaluated.pareto_front().entries;
            let first = front.first().expect("nonempty").objectives;
            let last = front.last().expect("nonempty").objectives;
            let k = knee(&front);
            let exp = expected
                .iter()
                .find(|e| (e.beta - beta).abs() < 1e-9 && (e.alpha - alpha).abs() < 1e-9);
            let status = exp.map(|e| {
                if front.iter().any(|f| close(&f.objectives, e)) {
                    "on_front"
                } else if evaluated.entries.iter().any(|(_, o)| close(o, e)) {
                    "achievable"
                } else {
                    "unattained"
                }
            });
            cells.push(Cell {
                beta,
                alpha,
                front_size: front.len(),
                min_f1: [first.f1, first.f2],
                min_f2: [last.f1, last.f2],
                knee: [k.objectives.f1, k.objectives.f2],
                knee_genotype: k.tree.to_string(),
                expected: exp.map(|e| [e.f1, e.f2]),
                status,
            });
        }
    }

    let text = match args.output.format {
        Format::Json => serde_json::to_string_pretty(&cells)? + "\n",
        Format::Csv => {
            let header = [
                "beta",
                "alpha",
                "front_size",
                "min_f1_f1",
                "min_f1_f2",
                "min_f2_f1",
                "min_f2_f2",
                "knee_f1",
                "knee_f2",
                "knee_genotype",
                "expected_f1",
                "expected_f2",
                "status",
            ];
            let rows: Vec<Vec<String>> = cells
                .iter()
                .map(|c| {
                    let mut row = vec![
                        format!("{}", c.beta),
                        format!("{}", c.alpha),
                        c.front_size.to_string(),
                    ];
                    row.extend(
                        [c.min_f1, c.min_f2, c.knee]
                            .iter()
                            .flatten()
                            .map(|&x| fmt6(x)),
                    );
                    row.push(c.knee_genotype.clone());
                    match c.expected {
                        Some([a, b]) => row.extend([fmt6(a), fmt6(b)]),
                        None => row.extend([String::new(), String::new()]),
                    }
                    row.push(c.status.unwrap_or("").to_string());
                    row
                })
                .collect();
            csv_text(&header, &rows)?
        }
    };
    match &args.output.out {
        Some(path) => write_file(path, &text),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}
