//! `solve`: repeated MOEA runs, reference front and indicators.

use std::io::Write;

use rfqmst::metrics::{build_reference_front, summarize_runs, Front, Indicators};
use rfqmst::{EvalContext, ObjectivePair, TreeGenotype};

use crate::error::CliError;
use crate::output::{csv_text, ensure_dir, extension, fmt6, render_front, write_file};
use crate::SolveArgs;

pub(crate) type Solutions = Vec<(TreeGenotype, ObjectivePair<f64>)>;

/// Nondominated union of several solution sets, lowest genotype per point.
pub(crate) fn merge_solutions<'a>(sets: impl IntoIterator<Item = &'a Solutions>) -> Solutions {
    let all: Solutions = sets.into_iter().flatten().cloned().collect();
    front_of(&all)
        .points()
        .iter()
        .map(|p| {
            let g = all
                .iter()
                .filter(|(_, o)| o == p)
                .map(|(g, _)| g)
                .min()
                .expect("point came from a set");
            (g.clone(), *p)
        })
        .collect()
}

pub(crate) fn front_of(solutions: &Solutions) -> Front<f64> {
    Front::new(solutions.iter().map(|(_, o)| *o).collect())
}

pub(crate) fn indicator_header(lead: &[&'static str]) -> Vec<&'static str> {
    let mut h = lead.to_vec();
    h.extend(Indicators::<f64>::NAMES);
    h
}

pub(crate) const STATS_HEADER: [&str; 7] = [
    "instance",
    "algorithm",
    "indicator",
    "mean",
    "sd",
    "median",
    "iqr",
];

/// One `STATS_HEADER` row per indicator.
pub(crate) fn stats_rows(
    instance: &str,
    algorithm: &str,
    runs: &[Indicators<f64>],
) -> Vec<Vec<String>> {
    Indicators::<f64>::NAMES
        .iter()
        .enumerate()
        .map(|(k, name)| {
            let values: Vec<f64> = runs.iter().map(|r| r.values()[k]).collect();
            let s = summarize_runs(&values);
            vec![
                instance.to_string(),
                algorithm.to_string(),
                name.to_string(),
                fmt6(s.mean),
                fmt6(s.sd),
                fmt6(s.median),
                fmt6(s.iqr),
            ]
        })
        .collect()
}

pub fn solve(args: &SolveArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    if args.runs == 0 {
        return Err(CliError::Config("--runs must be at least 1".into()));
    }
    let (inst, name) = super::load_instance(&args.instance.instance, args.search.seed)?;
    let levels = args.levels.resolve()?;
    let ctx = EvalContext::new(&inst, levels);

    let mut runs: Vec<Solutions> = Vec::with_capacity(args.runs);
    for i in 0..args.runs {
        let seed = args.search.seed + i as u64;
        runs.push(super::run_algorithm(&ctx, args.algorithm, &args.search, seed)?.front);
    }
    let reference = merge_solutions(&runs);
    let fronts: Vec<Front<f64>> = runs.iter().map(front_of).collect();
    let ref_front = build_reference_front(&fronts);
    let indicators: Vec<Indicators<f64>> = fronts
        .iter()
        .map(|f| Indicators::compute(f, &ref_front))
        .collect();
    let summary = csv_text(
        &STATS_HEADER,
        &stats_rows(&name, args.algorithm.id(), &indicators),
    )?;

    if let Some(dir) = &args.output.out {
        ensure_dir(dir)?;
        let ext = extension(args.output.format);
        for (i, run) in runs.iter().enumerate() {
            let text = render_front(run, args.output.format, &name, levels)?;
            write_file(&dir.join(format!("run_{i:03}.{ext}")), &text)?;
        }
        let text = render_front(&reference, args.output.format, &name, levels)?;
        write_file(&dir.join(format!("reference_front.{ext}")), &text)?;
        let rows: Vec<Vec<String>> = indicators
            .iter()
            .enumerate()
            .map(|(i, ind)| {
                let mut row = vec![i.to_string(), (args.search.seed + i as u64).to_string()];
                row.extend(ind.values().map(fmt6));
                row
            })
            .collect();
        write_file(
            &dir.join("indicators.csv"),
            &csv_text(&indicator_header(&["run", "seed"]), &rows)?,
        )?;
        write_file(&dir.join("summary.csv"), &summary)?;
    }
    stdout.write_all(summary.as_bytes())?;
    Ok(())
}
