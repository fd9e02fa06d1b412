//! The combinatorial shadow of the minimal wonderful model: boundary strata
//! indexed by nested sets, the blow-up order, point encodings and their
//! stabilizers, and Springer regularity.
//!
//! No blow-up is carried out. A stratum `D_T` is recorded only through its
//! nested set `T`, and `D_T ⊆ D_{T'}` iff `T ⊇ T'`.

mod point;
mod springer;

pub use point::{
    generic_point_in_orthogonal, normalize_point_encoding, stabilizer_of_point, ChainStep,
    PointEncoding, PointEncodingJson, PointInput, StabilizerReport, VectorJson,
};
pub use springer::{
    is_regular_element, is_springer_generic, springer_generic_line, RegularReport, SpringerReport,
};

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::arrangement::Subspace;
use crate::building::{BuildingSet, NestedSet};
use crate::caps::Caps;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stratum {
    /// Members of the nested set, e.g. `{0,4}`; the open stratum is `{}`.
    pub id: String,
    pub nested_set: NestedSet,
    pub codim: usize,
}

/// Strata of the boundary with their covering relations.
#[derive(Clone, Debug, Serialize)]
pub struct Stratification {
    pub strata: Vec<Stratum>,
    /// `(i, j)`: stratum `j` is a codimension-one stratum in the closure of
    /// stratum `i`.
    pub edges: Vec<(usize, usize)>,
}

fn stratum_id(members: &[usize]) -> String {
    let items: Vec<String> = members.iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub fn stratification(f: &BuildingSet, caps: &Caps) -> Result<Stratification, Error> {
    let sets = f.enumerate_nested_sets(None, caps)?;
    let index: HashMap<&[usize], usize> = sets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.members.as_slice(), i))
        .collect();
    let mut edges = Vec::new();
    for (j, s) in sets.iter().enumerate() {
        for k in 0..s.len() {
            let mut parent = s.members.clone();
            parent.remove(k);
            edges.push((index[parent.as_slice()], j));
        }
    }
    edges.sort_unstable();
    let strata = sets
        .iter()
        .map(|s| Stratum {
            id: stratum_id(&s.members),
            nested_set: s.clone(),
            codim: s.len(),
        })
        .collect();
    Ok(Stratification { strata, edges })
}

impl Stratification {
    /// Number of strata of each codimension.
    pub fn counts_by_codim(&self) -> Vec<usize> {
        let top = self.strata.iter().map(|s| s.codim).max().unwrap_or(0);
        let mut counts = vec![0; top + 1];
        for s in &self.strata {
            counts[s.codim] += 1;
        }
        counts
    }

    /// Graphviz rendering; `label` names the elements of `ℱ`.
    pub fn to_dot(&self, label: impl Fn(usize) -> String) -> String {
        let mut out = String::from("digraph strata {\n  rankdir=TB;\n");
        for (i, s) in self.strata.iter().enumerate() {
            let names: Vec<String> = s.nested_set.members.iter().map(|&m| label(m)).collect();
            let text = if names.is_empty() {
                "open".to_string()
            } else {
                names.join(" ")
            };
            writeln!(
                out,
                "  n{i} [label=\"{}\" codim={}];",
                text.replace('"', "\\\""),
                s.codim
            )
            .unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self, label: impl Fn(usize) -> String) -> serde_json::Value {
        let nodes: Vec<serde_json::Value> = self
            .strata
            .iter()
            .map(|s| {
                serde_json::json!({
                    "id": s.id,
                    "codim": s.codim,
                    "members": s.nested_set.members,
                    "labels": s.nested_set.members.iter().map(|&m| label(m)).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "nodes": nodes,
            "edges": self.edges.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
        })
    }
}

/// Centers of the successive blow-ups: the orthogonals `F^⊥` inside `V`
/// for `F ∈ ℱ`, by increasing dimension. The first one is the origin.
pub fn blowup_sequence(f: &BuildingSet) -> Result<Vec<Subspace>, Error> {
    if f.index_of(f.space()).is_none() {
        return Err(Error::invalid(
            "the whole space is not in the building set (reducible arrangement)",
        ));
    }
    let mut seq: Vec<Subspace> = (0..f.len())
        .map(|p| f.element(p).orthogonal_in(f.space()))
        .collect();
    seq.sort();
    Ok(seq)
}
