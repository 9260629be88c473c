use std::collections::HashSet;

use serde_json::json;

use crate::error::Result;
use crate::garside::word::format_positive_word;
use crate::parabolic::ParabolicSubgroup;

use super::complex_neighbors;

/// Vertices of the complex within `radius` edges of `center`, with every
/// edge between them.
#[derive(Clone, Debug)]
pub struct ComplexBall {
    pub center: ParabolicSubgroup,
    pub radius: usize,
    pub vertices: Vec<ParabolicSubgroup>,
    pub edges: Vec<(usize, usize)>,
}

pub fn complex_ball(center: &ParabolicSubgroup, radius: usize, budget: usize) -> Result<ComplexBall> {
    let mut seen: HashSet<ParabolicSubgroup> = HashSet::new();
    seen.insert(center.clone());
    let mut frontier = vec![center.clone()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for p in &frontier {
            for q in complex_neighbors(p, budget)? {
                if seen.insert(q.clone()) {
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    let mut vertices: Vec<ParabolicSubgroup> = seen.into_iter().collect();
    vertices.sort();
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if vertices[i].z().commutes_with(vertices[j].z()) {
                edges.push((i, j));
            }
        }
    }
    Ok(ComplexBall { center: center.clone(), radius, vertices, edges })
}

fn label(p: &ParabolicSubgroup) -> (String, Vec<usize>) {
    let word = format_positive_word(&p.standardizer().positive_word().unwrap_or_default());
    (word, p.base().iter().map(|s| s.index() + 1).collect())
}

impl ComplexBall {
    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<_> = self
            .vertices
            .iter()
            .map(|p| {
                let (w, b) = label(p);
                json!({"standardizer": w, "base": b})
            })
            .collect();
        json!({
            "center": self.vertices.iter().position(|p| *p == self.center),
            "radius": self.radius,
            "vertices": vertices,
            "edges": self.edges,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph complex {\n");
        for (i, p) in self.vertices.iter().enumerate() {
            let (w, b) = label(p);
            let b: Vec<String> = b.iter().map(|i| format!("s{i}")).collect();
            let shape = if *p == self.center { ", shape=box" } else { "" };
            out.push_str(&format!("  v{i} [label=\"[{w}] {{{}}}\"{shape}];\n", b.join(",")));
        }
        for (i, j) in &self.edges {
            out.push_str(&format!("  v{i} -- v{j};\n"));
        }
        out.push_str("}\n");
        out
    }
}
