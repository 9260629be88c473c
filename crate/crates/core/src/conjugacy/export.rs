use serde_json::json;

use crate::garside::word::format_positive_word;
use crate::garside::GroupElement;
use crate::parabolic::standard_z;

use super::graph::SummitGraph;

fn word(x: &GroupElement) -> String {
    match x.positive_word() {
        Some(w) if w.is_empty() => "1".into(),
        Some(w) => format_positive_word(&w),
        None => x.to_string(),
    }
}

impl SummitGraph {
    pub fn to_json(&self) -> serde_json::Value {
        let arrows: Vec<_> = self
            .arrows
            .iter()
            .map(|a| json!({"from": a.from, "to": a.to, "label": word(&a.label)}))
            .collect();
        json!({
            "kind": self.kind.name(),
            "structureExponent": self.structure_exponent,
            "suMaxPower": self.su_max_power,
            "vertices": self.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "witnesses": self.witness.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "arrows": arrows,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph {} {{\n", self.kind.name());
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{}\"];\n", word(v)));
        }
        for a in &self.arrows {
            out.push_str(&format!("  v{} -> v{} [label=\"{}\"];\n", a.from, a.to, word(&a.label)));
        }
        out.push_str("}\n");
        out
    }

    /// For each arrow `u → v` labelled `x`, the triple
    /// `(z_{supp(u)}, z_{supp(v)}, x)`; the label conjugates the first central
    /// element to the second whenever the vertices are positive.
    pub fn support_action(&self) -> Vec<(GroupElement, GroupElement, GroupElement)> {
        self.arrows
            .iter()
            .map(|a| {
                let zu = standard_z(a.label.context(), self.vertices[a.from].support());
                let zv = standard_z(a.label.context(), self.vertices[a.to].support());
                (zu, zv, a.label.clone())
            })
            .collect()
    }
}

/// DOT rendering of the action of arrow labels on central elements.
pub fn support_action_dot(graph: &SummitGraph) -> String {
    let mut nodes: Vec<GroupElement> = Vec::new();
    let mut edges: Vec<(usize, usize, String)> = Vec::new();
    for (zu, zv, x) in graph.support_action() {
        let mut index = |z: GroupElement| match nodes.iter().position(|n| *n == z) {
            Some(i) => i,
            None => {
                nodes.push(z);
                nodes.len() - 1
            }
        };
        let (i, j) = (index(zu), index(zv));
        let e = (i, j, word(&x));
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    let mut out = String::from("digraph z_action {\n");
    for (i, z) in nodes.iter().enumerate() {
        out.push_str(&format!("  z{i} [label=\"{}\"];\n", word(z)));
    }
    for (i, j, l) in edges {
        out.push_str(&format!("  z{i} -> z{j} [label=\"{l}\"];\n"));
    }
    out.push_str("}\n");
    out
}
