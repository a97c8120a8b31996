//! `exact`: enumerated Pareto front plus the epsilon-constraint trace.

use std::io::Write;

use rfqmst::exact::{
    enumerate_spanning_trees, exact_pareto_front_with_ties, EvaluatedTrees, Primary,
};
use rfqmst::EvalContext;

use crate::error::CliError;
use crate::output::{csv_text, ensure_dir, fmt6, render_front, write_file, FRONT_HEADER};
use crate::{ExactArgs, Format};

pub fn exact(args: &ExactArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (inst, name) = super::load_instance(&args.instance.instance, 1)?;
    let levels = args.levels.resolve()?;
    let ctx = EvalContext::new(&inst, levels);
    let trees = enumerate_spanning_trees(&inst)?;
    let evaluated = EvaluatedTrees::from_trees(&ctx, &trees);
    let front: Vec<_> = evaluated
        .pareto_front()
        .entries
        .into_iter()
        .map(|e| (e.tree, e.objectives))
        .collect();

    let Some(dir) = &args.output.out else {
        let text = render_front(&front, args.output.format, &name, levels)?;
        return Ok(stdout.write_all(text.as_bytes())?);
    };
    ensure_dir(dir)?;
    write_file(
        &dir.join("front.csv"),
        &render_front(&front, Format::Csv, &name, levels)?,
    )?;
    write_file(
        &dir.join("front.json"),
        &render_front(&front, Format::Json, &name, levels)?,
    )?;

    if !args.no_sweep {
        let rows: Vec<Vec<String>> = [(Primary::F1, "f1"), (Primary::F2, "f2")]
            .into_iter()
            .flat_map(|(p, label)| {
                evaluated
                    .epsilon_trace(p)
                    .into_iter()
                    .map(move |(eps, t, o)| {
                        vec![
                            label.to_string(),
                            fmt6(eps),
                            fmt6(o.f1),
                            fmt6(o.f2),
                            t.to_string(),
                        ]
                    })
            })
            .collect();
        let header = ["primary", "epsilon", "f1", "f2", "genotype_bits"];
        write_file(&dir.join("epsilon_sweep.csv"), &csv_text(&header, &rows)?)?;
    }

    if args.ties {
        let rows: Vec<Vec<String>> = exact_pareto_front_with_ties(&ctx)?
            .entries
            .iter()
            .flat_map(|e| {
                std::iter::once(&e.tree)
                    .chain(&e.ties)
                    .map(|t| vec![fmt6(e.objectives.f1), fmt6(e.objectives.f2), t.to_string()])
            })
            .collect();
        write_file(&dir.join("ties.csv"), &csv_text(&FRONT_HEADER, &rows)?)?;
    }

    writeln!(
        stdout,
        "{name}: {} spanning trees, {} Pareto points, written to {}",
        trees.len(),
        front.len(),
        dir.display()
    )?;
    Ok(())
}
