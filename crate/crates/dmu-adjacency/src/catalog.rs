//! Enumerates every multisingularity type admissible for a germ and builds
//! complete, deterministic adjacency tables.

use num_traits::Zero;
use rayon::prelude::*;

use crate::formula::{adjacency_index, AdjacencyReport, FormulaError};
use crate::types::{DGerm, MultisingularityType};

/// One table row: a candidate type and its full adjacency report.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub ty: MultisingularityType,
    pub report: AdjacencyReport,
}

/// All A-type products with `codim <= mu + 2`, the largest codimension for
/// which any term of the index can still be nonzero (the `Pi2` bound).
///
/// Ordered by codimension, then lexicographically on the expanded factor
/// list, so identical inputs always produce identical tables.
pub fn enumerate_candidate_types(germ: DGerm) -> Vec<MultisingularityType> {
    types_with_codim_at_most(germ.mu() + 2)
}

/// All A-type products (including the empty one) with codimension at most
/// `budget`, in the catalog order.
pub fn types_with_codim_at_most(budget: u64) -> Vec<MultisingularityType> {
    let mut out = Vec::new();
    let mut factors = Vec::new();
    collect_types(budget, 1, &mut factors, &mut out);
    out.sort_by_cached_key(ordering_key);
    out
}

/// Depth-first over factor maps with strictly increasing index, so every
/// multiset is emitted exactly once.
fn collect_types(
    remaining: u64,
    min_index: u64,
    acc: &mut Vec<(u64, u64)>,
    out: &mut Vec<MultisingularityType>,
) {
    out.push(MultisingularityType::from_factors(acc.iter().copied()));
    let mut index = min_index;
    while index < remaining {
        let cost = index + 1;
        let mut exponent = 1;
        while exponent * cost <= remaining {
            acc.push((index, exponent));
            collect_types(remaining - exponent * cost, index + 1, acc, out);
            acc.pop();
            exponent += 1;
        }
        index += 1;
    }
}

fn ordering_key(ty: &MultisingularityType) -> (u64, Vec<u64>) {
    let mut expanded = Vec::new();
    for (index, exponent) in ty.factors() {
        expanded.extend(std::iter::repeat_n(index, exponent as usize));
    }
    (ty.codim(), expanded)
}

/// Evaluates the adjacency index for every candidate type. Rows with index
/// zero (non-adjacent types) are dropped unless `include_zero` is set.
///
/// Candidates are evaluated in parallel; the ordering of the result is the
/// candidate order and does not depend on scheduling.
pub fn build_table(germ: DGerm, include_zero: bool) -> Result<Vec<CatalogEntry>, FormulaError> {
    let candidates = enumerate_candidate_types(germ);
    let results: Vec<Result<CatalogEntry, FormulaError>> = candidates
        .into_par_iter()
        .map(|ty| adjacency_index(germ, &ty).map(|report| CatalogEntry { ty, report }))
        .collect();
    let mut entries = Vec::with_capacity(results.len());
    for result in results {
        entries.push(result?);
    }
    if !include_zero {
        entries.retain(|entry| !entry.report.j.is_zero());
    }
    Ok(entries)
}
