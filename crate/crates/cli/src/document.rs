use std::collections::HashMap;

use liealg::{fmt_half, AlgebraSpec, Series, Weight};
use parabolic::{Arrow, EdgeKind, LabeledGraph, ParabolicSpec, Vertex};
use serde::{Deserialize, Serialize};

/// JSON form of a labeled graph. Weights are lists of fraction strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub algebra: String,
    pub sigma: Vec<usize>,
    pub lambda: Option<Vec<String>>,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: usize,
    pub weight: Vec<String>,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub from: usize,
    pub to: usize,
    pub order: Option<i64>,
    pub kind: Option<String>,
}

pub fn weight_strings(w: &Weight) -> Vec<String> {
    w.twice().iter().map(|t| fmt_half(*t)).collect()
}

fn parse_weight_strings(v: &[String]) -> Result<Weight, String> {
    let twice = v
        .iter()
        .map(|s| match s.split_once('/') {
            None => s.parse::<i64>().map(|x| 2 * x).map_err(|_| format!("bad coordinate {s:?}")),
            Some((p, "2")) => p.parse::<i64>().map_err(|_| format!("bad coordinate {s:?}")),
            _ => Err(format!("bad coordinate {s:?}")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Weight::from_twice(twice))
}

fn parse_algebra(s: &str) -> Result<AlgebraSpec, String> {
    let series = match s.get(..1) {
        Some("B") => Series::B,
        Some("D") => Series::D,
        _ => return Err(format!("unknown algebra {s:?}")),
    };
    let rank: usize = s[1..].parse().map_err(|_| format!("unknown algebra {s:?}"))?;
    AlgebraSpec::new(series, rank).map_err(|e| e.to_string())
}

impl GraphDocument {
    pub fn from_graph(g: &LabeledGraph) -> Self {
        GraphDocument {
            algebra: g.spec.algebra.to_string(),
            sigma: vec![g.spec.k],
            lambda: g.lambda.as_ref().map(weight_strings),
            vertices: g
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| VertexDoc { id, weight: weight_strings(&v.weight), label: v.label.clone() })
                .collect(),
            edges: g
                .arrows
                .iter()
                .map(|a| EdgeDoc {
                    from: a.from,
                    to: a.to,
                    order: a.order,
                    kind: a.kind.map(|k| k.as_str().to_string()),
                })
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<LabeledGraph, String> {
        let algebra = parse_algebra(&self.algebra)?;
        let k = match self.sigma.as_slice() {
            [k] => *k,
            s => return Err(format!("expected one crossed node, got {}", s.len())),
        };
        let spec = ParabolicSpec::new(algebra, k).map_err(|e| e.to_string())?;
        let mut pos = HashMap::new();
        let mut vertices = Vec::new();
        for v in &self.vertices {
            if pos.insert(v.id, vertices.len()).is_some() {
                return Err(format!("duplicate vertex id {}", v.id));
            }
            let weight = parse_weight_strings(&v.weight)?;
            if weight.rank() != algebra.rank {
                return Err(format!("vertex {} has {} coordinates", v.id, weight.rank()));
            }
            vertices.push(Vertex { weight, label: v.label.clone() });
        }
        let lookup = |id: usize| pos.get(&id).copied().ok_or_else(|| format!("edge references unknown id {id}"));
        let mut arrows = Vec::new();
        for e in &self.edges {
            let kind = match &e.kind {
                None => None,
                Some(s) => Some(EdgeKind::parse(s).ok_or_else(|| format!("unknown edge kind {s:?}"))?),
            };
            arrows.push(Arrow { from: lookup(e.from)?, to: lookup(e.to)?, order: e.order, kind });
        }
        let lambda = self.lambda.as_deref().map(parse_weight_strings).transpose()?;
        Ok(LabeledGraph { spec, lambda, vertices, arrows })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        serde_json::from_str(s).map_err(|e| e.to_string())
    }
}
