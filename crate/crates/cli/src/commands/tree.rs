//! Tree arguments: bit strings or edge lists.

use rfqmst::instance::Instance;
use rfqmst::qmst::is_spanning_tree;
use rfqmst::{Error, TreeGenotype};

use crate::error::CliError;

fn edge_id(inst: &Instance<f64>, item: &str) -> Result<usize, CliError> {
    let unknown = || CliError::Config(format!("unknown edge `{item}`"));
    if let Some((a, b)) = item.split_once('-') {
        let a: usize = a.trim().parse().map_err(|_| unknown())?;
        let b: usize = b.trim().parse().map_err(|_| unknown())?;
        if a == 0 || b == 0 {
            return Err(unknown());
        }
        return inst.find_edge(a - 1, b - 1).ok_or_else(unknown);
    }
    inst.find_label(item).ok_or_else(unknown)
}

/// Explains why `bits` is not a spanning tree.
fn violation(inst: &Instance<f64>, bits: &[bool]) -> String {
    let k = bits.iter().filter(|&&b| b).count();
    let need = inst.vertex_count() - 1;
    if k != need {
        format!("{k} edges selected, a spanning tree needs exactly {need}")
    } else {
        "selected edges contain a cycle".into()
    }
}

/// Accepts a bit string in edge order, or comma-separated edges given as
/// labels (`e12`) or 1-based vertex pairs (`1-2`).
pub fn parse_tree(inst: &Instance<f64>, text: &str) -> Result<TreeGenotype, CliError> {
    let text = text.trim();
    let bits = if !text.is_empty() && text.chars().all(|c| c == '0' || c == '1') {
        let bits = text.parse::<TreeGenotype>()?.into_bits();
        if bits.len() != inst.edge_count() {
            return Err(Error::LengthMismatch {
                expected: inst.edge_count(),
                got: bits.len(),
            }
            .into());
        }
        bits
    } else {
        let mut bits = vec![false; inst.edge_count()];
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            bits[edge_id(inst, item)?] = true;
        }
        bits
    };
    if !is_spanning_tree(inst, &bits) {
        return Err(Error::NotSpanningTree(violation(inst, &bits)).into());
    }
    Ok(TreeGenotype::from_bits(bits))
}
