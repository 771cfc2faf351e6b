use serde::{Deserialize, Serialize};

use crate::engine::{independence_poly_with, EngineConfig};
use crate::error::Result;
use crate::families::{expand_spec_range, FamilyRegistry};
use crate::poly::IntPoly;
use crate::properties::{analyze, PropertyReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub spec: String,
    pub n: usize,
    pub edges: usize,
    pub poly: IntPoly,
    pub report: PropertyReport,
}

/// One row per concrete spec after range expansion, e.g.
/// `caterpillar:1..12`.
pub fn family_scan(spec: &str, families: &FamilyRegistry, cfg: &EngineConfig) -> Result<Vec<ScanRow>> {
    expand_spec_range(spec)?
        .into_iter()
        .map(|spec| {
            let inst = families.resolve(&spec)?;
            let poly = independence_poly_with(&inst.graph, cfg)?;
            Ok(ScanRow {
                n: inst.graph.n(),
                edges: inst.graph.edge_count(),
                report: analyze(&poly),
                poly,
                spec,
            })
        })
        .collect()
}
