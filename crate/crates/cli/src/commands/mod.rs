//! Command implementations and the helpers they share.

mod exact;
mod experiment;
mod sensitivity;
mod solve;
mod tree;

use std::io::Write;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rfqmst::instance::Instance;
use rfqmst::moea::{mochc_run, nsga2_run, MochcParams, NsgaParams, RunResult};
use rfqmst::{generate_random, paper_instance, parse_instance, serialize_instance, EvalContext};

use crate::error::CliError;
use crate::output::{csv_text, fmt6, write_file};
use crate::{Algorithm, EvalArgs, Format, GenArgs, SearchArgs};

pub use exact::exact;
pub use experiment::experiment;
pub use sensitivity::sensitivity;
pub use solve::solve;

/// Parses `QMST_<n>_<m>` with an optional `:<seed>` suffix.
fn generator_spec(spec: &str) -> Option<(usize, usize, Option<u64>)> {
    let (name, seed) = match spec.split_once(':') {
        Some((name, seed)) => (name, Some(seed.parse().ok()?)),
        None => (spec, None),
    };
    let rest = name.strip_prefix("QMST_")?;
    let (n, m) = rest.split_once('_')?;
    Some((n.parse().ok()?, m.parse().ok()?, seed))
}

/// Resolves `paper`, a generator spec or a file path. Returns the instance
/// and a short name for reports.
pub fn load_instance(spec: &str, default_seed: u64) -> Result<(Instance<f64>, String), CliError> {
    if spec == "paper" {
        return Ok((paper_instance(), "paper".into()));
    }
    let path = Path::new(spec);
    if !path.exists() {
        if let Some((n, m, seed)) = generator_spec(spec) {
            let name = spec.split(':').next().unwrap_or(spec).to_string();
            return Ok((generate_random(n, m, seed.unwrap_or(default_seed))?, name));
        }
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let inst = parse_instance(&text).map_err(|e| CliError::Config(format!("{spec}: {e}")))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok((inst, name))
}

pub(crate) fn run_algorithm(
    ctx: &EvalContext<'_, f64>,
    algorithm: Algorithm,
    search: &SearchArgs,
    seed: u64,
) -> Result<RunResult<f64>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let result = match algorithm {
        Algorithm::Nsga2 => {
            let params = NsgaParams {
                population: search.pop,
                max_evaluations: search.evals,
                ..NsgaParams::default()
            };
            nsga2_run(ctx, &params, &mut rng)?
        }
        Algorithm::Mochc => {
            let params = MochcParams {
                population: search.pop,
                max_evaluations: search.evals,
                ..MochcParams::default()
            };
            mochc_run(ctx, &params, &mut rng)?
        }
    };
    Ok(result)
}

pub fn gen(args: &GenArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let inst = generate_random::<f64>(args.n, args.m, args.seed)?;
    let text = serialize_instance(&inst);
    match &args.out {
        Some(path) => write_file(path, &text),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

pub fn eval(args: &EvalArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (inst, _) = load_instance(&args.instance.instance, 1)?;
    let levels = args.levels.resolve()?;
    let tree = tree::parse_tree(&inst, &args.tree)?;
    let f = EvalContext::new(&inst, levels).evaluate(&tree);
    let text = match args.format {
        Format::Csv => csv_text(
            &["f1", "f2", "spanning_tree", "genotype_bits"],
            &[vec![
                fmt6(f.f1),
                fmt6(f.f2),
                "true".into(),
                tree.to_string(),
            ]],
        )?,
        Format::Json => {
            let doc = serde_json::json!({
                "f1": f.f1,
                "f2": f.f2,
                "spanning_tree": true,
                "genotype": tree.to_string(),
            });
            serde_json::to_string_pretty(&doc)? + "\n"
        }
    };
    Ok(stdout.write_all(text.as_bytes())?)
}
