use std::collections::HashSet;

use rayon::prelude::*;
use serde_json::json;

use crate::error::Result;
use crate::garside::GroupElement;
use crate::parabolic::{parabolic_closure, ParabolicSubgroup};

use super::elements_over;

/// Evidence attached to a computed intersection or join.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub witness: Option<GroupElement>,
    pub budget: usize,
    /// Named containment checks and their outcomes.
    pub verified_inclusions: Vec<(String, bool)>,
    /// False when the search could not confirm the answer within the budget.
    pub complete: bool,
}

impl Certificate {
    pub fn to_json(&self) -> serde_json::Value {
        let inclusions: serde_json::Map<String, serde_json::Value> =
            self.verified_inclusions.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        json!({
            "witness": self.witness.as_ref().map(|w| w.to_json()),
            "budget": self.budget,
            "verifiedInclusions": inclusions,
            "complete": self.complete,
        })
    }
}

#[derive(Clone, Debug)]
pub struct LatticeResult {
    pub subgroup: ParabolicSubgroup,
    pub certificate: Certificate,
}

fn result(r: ParabolicSubgroup, witness: Option<GroupElement>, budget: usize, checks: Vec<(String, bool)>) -> LatticeResult {
    let complete = checks.iter().all(|(_, ok)| *ok);
    LatticeResult { subgroup: r, certificate: Certificate { witness, budget, verified_inclusions: checks, complete } }
}

/// `P ∩ Q`: the closure of a common element of maximal `φ`, searched among
/// `b·w·b^{-1}` with `w ∈ A_X` of length at most `budget`.
pub fn intersect(p: &ParabolicSubgroup, q: &ParabolicSubgroup, budget: usize) -> Result<LatticeResult> {
    p.require_same_group(q)?;
    if q.contains_subgroup(p) {
        return Ok(result(p.clone(), Some(p.z().clone()), budget, vec![("P ⊆ Q".into(), true)]));
    }
    if p.contains_subgroup(q) {
        return Ok(result(q.clone(), Some(q.z().clone()), budget, vec![("Q ⊆ P".into(), true)]));
    }
    let ctx = p.context();
    let b = p.standardizer();
    let qs = q.conjugated(b);
    let common: Vec<GroupElement> = elements_over(ctx, p.base(), budget)
        .into_par_iter()
        .filter(|w| !w.is_identity() && qs.contains_element(w))
        .collect();
    let mut best: Option<(ParabolicSubgroup, GroupElement)> = None;
    let mut tried: HashSet<GroupElement> = HashSet::new();
    for w in &common {
        if best.as_ref().is_some_and(|(r, _)| r.contains_element(w)) {
            continue;
        }
        let mut candidates = vec![w.clone()];
        if let Some((_, z)) = &best {
            for k in 1..=2 {
                candidates.push(w.mul(&z.pow(k)));
                candidates.push(z.pow(k).mul(w));
            }
        }
        for c in candidates {
            if !tried.insert(c.clone()) {
                continue;
            }
            let r = parabolic_closure(&c)?;
            if best.as_ref().is_none_or(|(cur, _)| r.delta_length() > cur.delta_length()) {
                let z = r.z().clone();
                best = Some((r, z));
            }
        }
    }
    let binv = b.inverse();
    let (r, witness) = match best {
        None => (ParabolicSubgroup::trivial(ctx), None),
        Some((r, z)) => (r.conjugated(&binv), Some(z.conjugate(&binv))),
    };
    let covered = common.iter().all(|w| r.contains_element(&w.conjugate(&binv)));
    let checks = vec![
        ("z_R ∈ P".into(), p.contains_element(r.z())),
        ("z_R ∈ Q".into(), q.contains_element(r.z())),
        ("common elements within budget lie in R".into(), covered),
    ];
    Ok(result(r, witness, budget, checks))
}

/// Smallest parabolic subgroup containing `P` and `Q` among closures of
/// `z_P^i z_Q^j` and the subgroups `g·A_Y·g^{-1}` with `|g| ≤ budget`.
pub fn join(p: &ParabolicSubgroup, q: &ParabolicSubgroup, budget: usize) -> Result<LatticeResult> {
    p.require_same_group(q)?;
    if q.contains_subgroup(p) {
        return Ok(result(q.clone(), Some(q.z().clone()), budget, vec![("P ⊆ Q".into(), true)]));
    }
    if p.contains_subgroup(q) {
        return Ok(result(p.clone(), Some(p.z().clone()), budget, vec![("Q ⊆ P".into(), true)]));
    }
    let ctx = p.context();
    let holds = |r: &ParabolicSubgroup| r.contains_subgroup(p) && r.contains_subgroup(q);
    let mut candidates: Vec<(ParabolicSubgroup, Option<GroupElement>)> = Vec::new();
    for (i, j) in [(1, 1), (1, 2), (2, 1), (1, -1), (1, 3), (3, 1), (2, 3)] {
        let g = p.z().pow(i).mul(&q.z().pow(j));
        let r = parabolic_closure(&g)?;
        if holds(&r) {
            candidates.push((r, Some(g)));
        }
    }
    let bases: Vec<_> = ctx.all_generators().subsets().filter(|y| !y.is_empty()).collect();
    let enumerated: Vec<ParabolicSubgroup> = elements_over(ctx, ctx.all_generators(), budget)
        .par_iter()
        .flat_map_iter(|g| bases.iter().map(move |&y| ParabolicSubgroup::new(g, y)))
        .filter(holds)
        .collect();
    let mut seen = HashSet::new();
    candidates.extend(enumerated.into_iter().map(|r| (r, None)));
    candidates.retain(|(r, _)| seen.insert(r.clone()));
    candidates.sort_by(|a, b| a.0.cmp(&b.0));
    let minimum = candidates.iter().find(|(r, _)| candidates.iter().all(|(s, _)| s.contains_subgroup(r)));
    let (r, witness, minimal) = match minimum {
        Some((r, w)) => (r.clone(), w.clone(), true),
        None => {
            let (r, w) = candidates
                .iter()
                .min_by_key(|(r, _)| r.delta_length())
                .cloned()
                .unwrap_or((ParabolicSubgroup::whole(ctx), None));
            (r, w, false)
        }
    };
    let checks = vec![
        ("P ⊆ R".into(), r.contains_subgroup(p)),
        ("Q ⊆ R".into(), r.contains_subgroup(q)),
        ("R minimal among candidates".into(), minimal),
    ];
    Ok(result(r, witness, budget, checks))
}
