//! The serializable invariant report: everything the crate can say about one
//! graph, in a fixed field order shared by the JSON and text renderings.

use crate::blocks::BlockDecomposition;
use crate::dim::{krull_dim_linear, min_cutset_witness};
use crate::graph::Vertex;
use crate::oracle::{Oracle, OracleError};
use crate::reg::{compute_regularity, depth_projdim, flower_signatures, reg_bounds_totals};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportBounds {
    pub flower_lower: usize,
    pub path_lower: usize,
    pub clique_upper: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFlower {
    pub vertex: Vertex,
    pub max_cdeg_f: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportOracle {
    pub used: bool,
    pub dim_bruteforce: Option<usize>,
    pub minh_height: Option<usize>,
    pub maxh_height: Option<usize>,
}

/// Per-component breakdown, emitted for disconnected inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportComponent {
    pub vertices: Vec<Vertex>,
    pub n: usize,
    pub edge_count: usize,
    pub krull_dimension: usize,
    pub regularity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub is_block_graph: bool,
    pub depth: usize,
    pub projective_dimension: usize,
    pub krull_dimension: usize,
    pub dim_witness: Vec<Vertex>,
    pub regularity: usize,
    pub reg_bounds: ReportBounds,
    pub flowers: Vec<ReportFlower>,
    pub indecomposable_part_count: usize,
    pub oracle: ReportOracle,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ReportComponent>>,
}

/// Computes the full report. With `oracle` set the exhaustive census runs
/// too and its numbers are embedded; a graph over the size cap surfaces the
/// error instead of silently skipping the check.
pub fn build_report(
    bd: &BlockDecomposition,
    oracle: Option<&Oracle>,
) -> Result<InvariantReport, OracleError> {
    let g = bd.graph();
    let n = g.vertex_count();
    let (depth, projdim) = depth_projdim(g);
    let witness = min_cutset_witness(bd);
    let bounds = reg_bounds_totals(bd);
    let flowers = flower_signatures(bd)
        .into_iter()
        .map(|s| ReportFlower { vertex: s.vertex, max_cdeg_f: s.max_cdeg_f })
        .collect();

    let oracle_part = match oracle {
        Some(o) => {
            let summary = o.minh_maxh(g)?;
            ReportOracle {
                used: true,
                dim_bruteforce: Some(summary.dim),
                minh_height: Some(summary.minh[0].height),
                maxh_height: Some(summary.maxh[0].height),
            }
        }
        None => ReportOracle { used: false, dim_bruteforce: None, minh_height: None, maxh_height: None },
    };

    let components = if bd.component_count() > 1 {
        let mut list = Vec::new();
        for comp in bd.components() {
            let (sub, _) = g.induced_subgraph(comp);
            let sub_bd = crate::blocks::validate_block_graph(&sub)
                .expect("induced subgraphs of a block graph stay block graphs");
            list.push(ReportComponent {
                vertices: comp.clone(),
                n: sub.vertex_count(),
                edge_count: sub.edge_count(),
                krull_dimension: krull_dim_linear(&sub_bd),
                regularity: compute_regularity(&sub_bd),
            });
        }
        Some(list)
    } else {
        None
    };

    Ok(InvariantReport {
        n,
        edge_count: g.edge_count(),
        component_count: bd.component_count(),
        is_block_graph: true,
        depth,
        projective_dimension: projdim,
        krull_dimension: krull_dim_linear(bd),
        dim_witness: witness.cutset.vertices.clone(),
        regularity: compute_regularity(bd),
        reg_bounds: ReportBounds {
            flower_lower: bounds.flower_lower,
            path_lower: bounds.path_lower,
            clique_upper: bounds.clique_upper,
        },
        flowers,
        indecomposable_part_count: bd.split_indecomposable().parts.len(),
        oracle: oracle_part,
        components,
    })
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// `" a b c"` for a nonempty list, `""` for an empty one, so `key:{}` lines
/// carry no trailing space.
pub(crate) fn list_field<T: ToString>(items: &[T]) -> String {
    if items.is_empty() {
        String::new()
    } else {
        format!(" {}", join(items))
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

impl InvariantReport {
    /// `key: value` lines in field order; the one stable diffable rendering
    /// besides the JSON.
    pub fn to_text(&self) -> String {
        let mut lines = vec![
            format!("n: {}", self.n),
            format!("edge_count: {}", self.edge_count),
            format!("component_count: {}", self.component_count),
            format!("is_block_graph: {}", self.is_block_graph),
            format!("depth: {}", self.depth),
            format!("projective_dimension: {}", self.projective_dimension),
            format!("krull_dimension: {}", self.krull_dimension),
            format!("dim_witness:{}", list_field(&self.dim_witness)),
            format!("regularity: {}", self.regularity),
            format!("reg_bounds.flower_lower: {}", self.reg_bounds.flower_lower),
            format!("reg_bounds.path_lower: {}", self.reg_bounds.path_lower),
            format!("reg_bounds.clique_upper: {}", self.reg_bounds.clique_upper),
            format!(
                "flowers:{}",
                list_field(
                    &self
                        .flowers
                        .iter()
                        .map(|f| format!("{}:{}", f.vertex, f.max_cdeg_f))
                        .collect::<Vec<_>>()
                )
            ),
            format!("indecomposable_part_count: {}", self.indecomposable_part_count),
            format!("oracle.used: {}", self.oracle.used),
            format!("oracle.dim_bruteforce: {}", opt(self.oracle.dim_bruteforce)),
            format!("oracle.minh_height: {}", opt(self.oracle.minh_height)),
            format!("oracle.maxh_height: {}", opt(self.oracle.maxh_height)),
        ];
        if let Some(components) = &self.components {
            for (i, c) in components.iter().enumerate() {
                lines.push(format!(
                    "component {}: n={} edges={} dim={} reg={} vertices={}",
                    i + 1,
                    c.n,
                    c.edge_count,
                    c.krull_dimension,
                    c.regularity,
                    join(&c.vertices)
                ));
            }
        }
        let mut text = lines.join("\n");
        text.push('\n');
        text
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
