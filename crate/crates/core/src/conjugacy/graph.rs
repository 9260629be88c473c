//! Summit graphs: vertices are the elements of a summit set, arrows are the
//! minimal positive conjugators between them.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::coxeter::{GeneratorId, GeneratorSet};
use crate::error::{Error, Result};
use crate::garside::{GarsideStructure, GroupElement};

use super::summit::Summit;
use super::SummitKind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub label: GroupElement,
}

#[derive(Clone, Debug)]
pub struct SummitGraph {
    pub kind: SummitKind,
    pub structure_exponent: u32,
    pub vertices: Vec<GroupElement>,
    pub arrows: Vec<Arrow>,
    /// `witness[i]^{-1} · α · witness[i] = vertices[i]`.
    pub witness: Vec<GroupElement>,
    /// Power bound used for SU membership, when relevant.
    pub su_max_power: Option<u32>,
    pub summit: Summit,
}

/// First letters of a positive element.
pub(crate) fn starting_letters(x: &GroupElement) -> GeneratorSet {
    let ctx = x.context();
    if x.delta_power() > 0 {
        ctx.all_generators()
    } else {
        x.factors().first().map(|a| a.starting_set()).unwrap_or(GeneratorSet::EMPTY)
    }
}

/// For each generator `s`, the smallest positive `x ≼ Δ^N` with `s ≼ x` and
/// `v^x` in the set. Found by breadth-first search by length; convexity makes
/// the first hit the unique minimum.
pub fn minimal_conjugators(summit: &Summit, v: &GroupElement) -> Result<Vec<(GeneratorId, GroupElement)>> {
    let s = &summit.structure;
    let ctx = s.context();
    let n = s.exponent() as i64;
    let mut pending: GeneratorSet = ctx.all_generators();
    let mut found: Vec<(GeneratorId, GroupElement)> = Vec::new();
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut level = vec![GroupElement::identity(ctx)];
    while !pending.is_empty() {
        let mut next = Vec::new();
        for x in &level {
            for t in ctx.spec().generators() {
                let y = x.mul(&GroupElement::generator(ctx, t));
                if y.sup() > n || !seen.insert(y.clone()) {
                    continue;
                }
                next.push(y);
            }
        }
        if next.is_empty() {
            return Err(Error::BudgetExceeded("no conjugator below the Garside element".into()));
        }
        let hits: Vec<(GroupElement, GeneratorSet)> = next
            .par_iter()
            .filter(|y| !starting_letters(y).intersection(pending).is_empty())
            .filter(|y| summit.contains(&v.conjugate(y)))
            .map(|y| (y.clone(), starting_letters(y)))
            .collect();
        let mut claimed = GeneratorSet::EMPTY;
        for (y, letters) in hits {
            for s in letters.intersection(pending).iter() {
                if claimed.contains(s) {
                    return Err(Error::BudgetExceeded(format!("two minimal conjugators for {s}: convexity fails")));
                }
                claimed.insert(s);
                found.push((s, y.clone()));
            }
        }
        pending = pending.difference(claimed);
        level = next;
    }
    found.sort_by_key(|(s, _)| *s);
    Ok(found)
}

/// The minimal conjugators that have no other minimal conjugator as a
/// proper prefix; these label the arrows leaving `v`.
pub fn arrows_from(summit: &Summit, v: &GroupElement) -> Result<Vec<GroupElement>> {
    let rho = minimal_conjugators(summit, v)?;
    let mut labels: Vec<GroupElement> = Vec::new();
    for (_, x) in &rho {
        if !labels.contains(x) {
            labels.push(x.clone());
        }
    }
    let minimal: Vec<GroupElement> = labels
        .iter()
        .filter(|x| !labels.iter().any(|y| y != *x && y.is_prefix_of(x)))
        .cloned()
        .collect();
    Ok(minimal)
}

pub fn compute_summit_graph(
    alpha: &GroupElement,
    kind: SummitKind,
    structure: &GarsideStructure,
    su_max_power: u32,
    max_vertices: usize,
) -> Result<SummitGraph> {
    let (summit, seed, seed_conj) = Summit::with_seed(kind, structure, alpha, su_max_power)?;
    let mut index: HashMap<GroupElement, usize> = HashMap::new();
    let mut vertices = vec![seed.clone()];
    let mut witness = vec![seed_conj];
    index.insert(seed, 0);
    let mut raw_arrows: Vec<(usize, usize, GroupElement)> = Vec::new();
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let out: Vec<Result<Vec<(GroupElement, GroupElement)>>> = frontier
            .par_iter()
            .map(|&i| {
                let v = &vertices[i];
                Ok(arrows_from(&summit, v)?.into_iter().map(|x| (v.conjugate(&x), x)).collect())
            })
            .collect();
        let mut next = Vec::new();
        for (&i, targets) in frontier.iter().zip(out) {
            for (target, label) in targets? {
                let j = match index.get(&target) {
                    Some(&j) => j,
                    None => {
                        let j = vertices.len();
                        if j >= max_vertices {
                            return Err(Error::BudgetExceeded(format!("summit graph exceeds {max_vertices} vertices")));
                        }
                        index.insert(target.clone(), j);
                        witness.push(witness[i].mul(&label));
                        vertices.push(target);
                        next.push(j);
                        j
                    }
                };
                raw_arrows.push((i, j, label));
            }
        }
        frontier = next;
    }
    // canonical order: vertices sorted by normal form, arrows by endpoints and label
    let mut order: Vec<usize> = (0..vertices.len()).collect();
    order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
    let mut rank = vec![0; vertices.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let mut arrows: Vec<Arrow> =
        raw_arrows.into_iter().map(|(a, b, label)| Arrow { from: rank[a], to: rank[b], label }).collect();
    arrows.sort_by(|x, y| (x.from, x.to, &x.label).cmp(&(y.from, y.to, &y.label)));
    Ok(SummitGraph {
        kind,
        structure_exponent: structure.exponent(),
        vertices: order.iter().map(|&i| vertices[i].clone()).collect(),
        witness: order.iter().map(|&i| witness[i].clone()).collect(),
        arrows,
        su_max_power: (kind == SummitKind::Su).then_some(su_max_power),
        summit,
    })
}

impl SummitGraph {
    pub fn contains(&self, x: &GroupElement) -> bool {
        self.summit.contains(x)
    }

    pub fn vertex_index(&self, x: &GroupElement) -> Option<usize> {
        self.vertices.iter().position(|v| v == x)
    }

    pub fn arrows_from(&self, i: usize) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(move |a| a.from == i)
    }
}
