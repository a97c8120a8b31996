//! `experiment`: indicator statistics over instances, algorithms and level
//! regimes, in long form and in per-regime wide tables.

use std::io::Write;

use rfqmst::metrics::{build_reference_front, summarize_runs, Indicators};
use rfqmst::{ConfidenceLevels, EvalContext};

use super::solve::{
    front_of, indicator_header, merge_solutions, stats_rows, Solutions, STATS_HEADER,
};
use crate::error::CliError;
use crate::output::{csv_text, ensure_dir, fmt6, render_front, write_file};
use crate::{Algorithm, ExperimentArgs, Format};

fn parse_regime(s: &str) -> Result<(f64, f64), CliError> {
    let bad = || CliError::Config(format!("regime `{s}` is not `alpha:beta`"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

/// Table header for wide layouts: `instance,indicator,<alg>_<a>,<alg>_<b>,...`.
fn wide_header(algorithms: &[Algorithm], a: &str, b: &str) -> Vec<String> {
    let mut h = vec!["instance".to_string(), "indicator".to_string()];
    for alg in algorithms {
        h.push(format!("{}_{a}", alg.id()));
        h.push(format!("{}_{b}", alg.id()));
    }
    h
}

pub fn experiment(args: &ExperimentArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    if args.runs == 0 {
        return Err(CliError::Config("--runs must be at least 1".into()));
    }
    let algorithms = args
        .algorithms
        .iter()
        .map(|a| Algorithm::parse(a))
        .collect::<Result<Vec<_>, _>>()?;
    let regimes = args
        .regimes
        .iter()
        .map(|r| parse_regime(r))
        .collect::<Result<Vec<_>, _>>()?;
    if algorithms.is_empty() || regimes.is_empty() || args.instances.is_empty() {
        return Err(CliError::Config(
            "need at least one instance, algorithm and regime".into(),
        ));
    }
    let instances = args
        .instances
        .iter()
        .map(|spec| super::load_instance(spec, args.search.seed))
        .collect::<Result<Vec<_>, _>>()?;
    ensure_dir(&args.out)?;

    for &(alpha, beta) in &regimes {
        let levels =
            ConfidenceLevels::uniform(alpha, beta).map_err(|e| CliError::Config(e.to_string()))?;
        let tag = format!("a{alpha}_b{beta}");
        let mut stats = Vec::new();
        let mut raw = Vec::new();
        let mut mean_sd = Vec::new();
        let mut median_iqr = Vec::new();

        for (inst, name) in &instances {
            let ctx = EvalContext::new(inst, levels);
            let mut per_alg: Vec<Vec<Solutions>> = Vec::new();
            for &alg in &algorithms {
                let runs = (0..args.runs)
                    .map(|i| {
                        super::run_algorithm(&ctx, alg, &args.search, args.search.seed + i as u64)
                            .map(|r| r.front)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                per_alg.push(runs);
            }
            let fronts: Vec<Vec<_>> = per_alg
                .iter()
                .map(|runs| runs.iter().map(front_of).collect())
                .collect();
            let reference =
                build_reference_front(&fronts.iter().flatten().cloned().collect::<Vec<_>>());
            let merged = merge_solutions(per_alg.iter().flatten());
            write_file(
                &args.out.join(format!("reference_{name}_{tag}.csv")),
                &render_front(&merged, Format::Csv, name, levels)?,
            )?;

            let mut summaries = Vec::new();
            for (alg, alg_fronts) in algorithms.iter().zip(&fronts) {
                let ind: Vec<Indicators<f64>> = alg_fronts
                    .iter()
                    .map(|f| Indicators::compute(f, &reference))
                    .collect();
                for (i, v) in ind.iter().enumerate() {
                    let mut row = vec![
                        name.clone(),
                        alg.id().to_string(),
                        i.to_string(),
                        (args.search.seed + i as u64).to_string(),
                    ];
                    row.extend(v.values().map(fmt6));
                    raw.push(row);
                }
                stats.extend(stats_rows(name, alg.id(), &ind));
                summaries.push(
                    (0..Indicators::<f64>::NAMES.len())
                        .map(|k| {
                            summarize_runs(&ind.iter().map(|v| v.values()[k]).collect::<Vec<_>>())
                        })
                        .collect::<Vec<_>>(),
                );
            }
            for (k, indicator) in Indicators::<f64>::NAMES.iter().enumerate() {
                let mut ms = vec![name.clone(), indicator.to_string()];
                let mut mi = ms.clone();
                for s in &summaries {
                    ms.extend([fmt6(s[k].mean), fmt6(s[k].sd)]);
                    mi.extend([fmt6(s[k].median), fmt6(s[k].iqr)]);
                }
                mean_sd.push(ms);
                median_iqr.push(mi);
            }
        }

        let out = |file: String| args.out.join(file);
        write_file(
            &out(format!("stats_{tag}.csv")),
            &csv_text(&STATS_HEADER, &stats)?,
        )?;
        let raw_header = indicator_header(&["instance", "algorithm", "run", "seed"]);
        write_file(
            &out(format!("indicators_{tag}.csv")),
            &csv_text(&raw_header, &raw)?,
        )?;
        let h = wide_header(&algorithms, "mean", "sd");
        let h: Vec<&str> = h.iter().map(String::as_str).collect();
        write_file(
            &out(format!("table_mean_sd_{tag}.csv")),
            &csv_text(&h, &mean_sd)?,
        )?;
        let h = wide_header(&algorithms, "median", "iqr");
        let h: Vec<&str> = h.iter().map(String::as_str).collect();
        write_file(
            &out(format!("table_median_iqr_{tag}.csv")),
            &csv_text(&h, &median_iqr)?,
        )?;
        writeln!(
            stdout,
            "alpha={alpha} beta={beta}: {} instances x {} algorithms x {} runs",
            instances.len(),
            algorithms.len(),
            args.runs
        )?;
    }
    Ok(())
}
