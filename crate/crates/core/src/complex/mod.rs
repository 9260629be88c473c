//! Adjacency, intersections and joins of parabolic subgroups, and local
//! pieces of the complex of irreducible parabolic subgroups.

mod ball;
mod lattice;

use std::collections::HashSet;

use rayon::prelude::*;

use crate::context::Group;
use crate::coxeter::GeneratorSet;
use crate::error::{Error, Result};
use crate::garside::GroupElement;
use crate::parabolic::ParabolicSubgroup;

pub use ball::{complex_ball, ComplexBall};
pub use lattice::{intersect, join, Certificate, LatticeResult};

/// Elements of `A_X` given by signed words over `X` of length at most
/// `radius`, in order of first appearance.
pub fn elements_over(ctx: &Group, x: GeneratorSet, radius: usize) -> Vec<GroupElement> {
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let one = GroupElement::identity(ctx);
    seen.insert(one.clone());
    let mut all = vec![one.clone()];
    let mut level = vec![one];
    let letters: Vec<GroupElement> = x
        .iter()
        .flat_map(|s| {
            let g = GroupElement::generator(ctx, s);
            [g.inverse(), g]
        })
        .collect();
    for _ in 0..radius {
        let mut next = Vec::new();
        for e in &level {
            for l in &letters {
                let f = e.mul(l);
                if seen.insert(f.clone()) {
                    next.push(f);
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

pub fn z_commute(p: &ParabolicSubgroup, q: &ParabolicSubgroup) -> Result<bool> {
    p.require_same_group(q)?;
    Ok(p.z().commutes_with(q.z()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdjacencyCondition {
    /// `P ⊊ Q`.
    ProperSubsetPQ,
    /// `Q ⊊ P`.
    ProperSubsetQP,
    /// `P ∩ Q = {1}` and every element of `P` commutes with every element of `Q`.
    DisjointCommuting,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyVerdict {
    pub commute: bool,
    pub condition: Option<AdjacencyCondition>,
}

fn check_vertex(p: &ParabolicSubgroup) -> Result<()> {
    if !p.is_proper() {
        return Err(Error::NotProper);
    }
    if !p.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    Ok(())
}

/// Which of the three adjacency conditions hold, decided without looking at
/// the central elements' commutation.
pub fn holding_conditions(
    p: &ParabolicSubgroup,
    q: &ParabolicSubgroup,
    budget: usize,
) -> Result<Vec<AdjacencyCondition>> {
    p.require_same_group(q)?;
    let mut out = Vec::new();
    if p != q && q.contains_subgroup(p) {
        out.push(AdjacencyCondition::ProperSubsetPQ);
    }
    if p != q && p.contains_subgroup(q) {
        out.push(AdjacencyCondition::ProperSubsetQP);
    }
    let gp = p.generators();
    let gq = q.generators();
    let elementwise = gp.iter().all(|a| gq.iter().all(|b| a.commutes_with(b)));
    if elementwise && intersect(p, q, budget)?.subgroup.is_trivial() {
        out.push(AdjacencyCondition::DisjointCommuting);
    }
    Ok(out)
}

pub fn characterize_pair(p: &ParabolicSubgroup, q: &ParabolicSubgroup, budget: usize) -> Result<AdjacencyVerdict> {
    p.require_same_group(q)?;
    check_vertex(p)?;
    check_vertex(q)?;
    if p == q {
        return Err(Error::EqualSubgroups);
    }
    let commute = z_commute(p, q)?;
    let holding = holding_conditions(p, q, budget)?;
    let condition = match holding[..] {
        [c] => Some(c),
        _ => None,
    };
    Ok(AdjacencyVerdict { commute, condition })
}

/// Proper irreducible `Q = g·A_Y·g^{-1}` with `|g| ≤ budget` whose central
/// element commutes with that of `P`.
pub fn complex_neighbors(p: &ParabolicSubgroup, budget: usize) -> Result<Vec<ParabolicSubgroup>> {
    check_vertex(p)?;
    let ctx = p.context();
    let bases: Vec<GeneratorSet> = ctx
        .all_generators()
        .subsets()
        .filter(|&y| ctx.is_irreducible(y) && y != ctx.all_generators())
        .collect();
    let conjugators = elements_over(ctx, ctx.all_generators(), budget);
    let found: Vec<ParabolicSubgroup> = conjugators
        .par_iter()
        .flat_map_iter(|g| bases.iter().map(move |&y| ParabolicSubgroup::new(g, y)))
        .filter(|q| q != p && p.z().commutes_with(q.z()))
        .collect();
    let mut unique: Vec<ParabolicSubgroup> = found.into_iter().collect::<HashSet<_>>().into_iter().collect();
    unique.sort();
    Ok(unique)
}

/// Whether both positive words contain `path` as a subsequence. The path
/// must have consecutive letters that do not commute and no letter equal to
/// the one two steps later.
pub fn subsequence_invariance_check(
    ctx: &Group,
    w1: &[crate::GeneratorId],
    w2: &[crate::GeneratorId],
    path: &[crate::GeneratorId],
) -> Result<bool> {
    for pair in path.windows(2) {
        if ctx.spec().commute(pair[0], pair[1]) {
            return Err(Error::InvalidPath(format!("{} and {} commute", pair[0], pair[1])));
        }
    }
    for triple in path.windows(3) {
        if triple[0] == triple[2] {
            return Err(Error::InvalidPath(format!("{} repeats two steps later", triple[0])));
        }
    }
    let has = |w: &[crate::GeneratorId]| {
        let mut it = w.iter();
        path.iter().all(|s| it.any(|t| t == s))
    };
    Ok(has(w1) && has(w2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::group;
    use crate::GeneratorId;

    fn std(ctx: &Group, ix: &[usize]) -> ParabolicSubgroup {
        ParabolicSubgroup::standard(ctx, GeneratorSet::from_indices(ix.iter().copied()))
    }

    #[test]
    fn commuting_central_elements() {
        let a2 = group("A2").unwrap();
        assert!(z_commute(&std(&a2, &[0]), &ParabolicSubgroup::whole(&a2)).unwrap());
        assert!(!z_commute(&std(&a2, &[0]), &std(&a2, &[1])).unwrap());
        let a4 = group("A4").unwrap();
        assert!(z_commute(&std(&a4, &[0]), &std(&a4, &[2])).unwrap());
    }

    #[test]
    fn verdicts() {
        let a2 = group("A2").unwrap();
        assert_eq!(characterize_pair(&std(&a2, &[0]), &ParabolicSubgroup::whole(&a2), 3), Err(Error::NotProper));
        let a4 = group("A4").unwrap();
        let v = characterize_pair(&std(&a4, &[0]), &std(&a4, &[2]), 3).unwrap();
        assert_eq!(v, AdjacencyVerdict { commute: true, condition: Some(AdjacencyCondition::DisjointCommuting) });
        let v = characterize_pair(&std(&a4, &[0]), &std(&a4, &[0, 1]), 3).unwrap();
        assert_eq!(v, AdjacencyVerdict { commute: true, condition: Some(AdjacencyCondition::ProperSubsetPQ) });
        let v = characterize_pair(&std(&a4, &[0]), &std(&a4, &[1]), 3).unwrap();
        assert_eq!(v, AdjacencyVerdict { commute: false, condition: None });
        assert_eq!(characterize_pair(&std(&a4, &[0, 2]), &std(&a4, &[1]), 3), Err(Error::NotIrreducible));
        assert_eq!(characterize_pair(&std(&a4, &[1]), &std(&a4, &[1]), 3), Err(Error::EqualSubgroups));
    }

    #[test]
    fn standard_neighbours() {
        let a2 = group("A2").unwrap();
        assert!(complex_neighbors(&std(&a2, &[0]), 0).unwrap().is_empty());
        let a4 = group("A4").unwrap();
        let p = std(&a4, &[0]);
        let n = complex_neighbors(&p, 0).unwrap();
        for q in [std(&a4, &[2]), std(&a4, &[3]), std(&a4, &[2, 3]), std(&a4, &[0, 1])] {
            assert!(n.contains(&q), "{q}");
        }
        assert!(!n.contains(&p));
        assert!(!n.contains(&std(&a4, &[1])));
    }

    #[test]
    fn subsequences() {
        let a3 = group("A3").unwrap();
        let g = |i: u8| GeneratorId(i);
        assert!(subsequence_invariance_check(&a3, &[g(0), g(1), g(0)], &[g(1), g(0), g(1)], &[g(0), g(1)]).unwrap());
        assert!(!subsequence_invariance_check(&a3, &[g(1), g(1)], &[g(1), g(1)], &[g(0), g(1)]).unwrap());
        assert!(subsequence_invariance_check(&a3, &[], &[], &[g(0), g(2)]).is_err());
        assert!(subsequence_invariance_check(&a3, &[], &[], &[g(0), g(1), g(0)]).is_err());
    }
}
