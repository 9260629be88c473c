use std::collections::HashSet;

use rayon::prelude::*;

use crate::context::Group;
use crate::error::{Error, Result};
use crate::garside::GroupElement;
use crate::parabolic::ParabolicSubgroup;

use super::Ball;

/// Every `g·A_X·g^{-1}` with `g` a signed word of length at most the bound,
/// deduplicated by central element.
#[derive(Clone, Debug)]
pub struct EnumeratedParabolics {
    pub ctx: Group,
    pub conjugator_bound: usize,
    pub items: Vec<ParabolicSubgroup>,
}

impl EnumeratedParabolics {
    pub fn new(ctx: &Group, conjugator_bound: usize) -> Result<Self> {
        let ball = Ball::new(ctx, conjugator_bound)?;
        let subsets: Vec<_> = ctx.all_generators().subsets().collect();
        let mut seen = HashSet::new();
        let mut items = Vec::new();
        for (_, word) in ball.iter() {
            let g = GroupElement::from_letters(ctx, word);
            for &x in &subsets {
                let p = ParabolicSubgroup::new(&g, x);
                if seen.insert(p.clone()) {
                    items.push(p);
                }
            }
        }
        items.sort();
        Ok(EnumeratedParabolics { ctx: ctx.clone(), conjugator_bound, items })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// The enumerated subgroup containing `alpha` that lies inside every
    /// other enumerated subgroup containing `alpha`.
    pub fn closure(&self, alpha: &GroupElement) -> Result<ParabolicSubgroup> {
        let holders: Vec<&ParabolicSubgroup> = self.items.iter().filter(|p| p.contains_element(alpha)).collect();
        holders
            .iter()
            .find(|p| holders.iter().all(|q| q.contains_subgroup(p)))
            .map(|p| (*p).clone())
            .ok_or(Error::NoMinimumFound(holders.len()))
    }
}

pub fn closure_oracle(alpha: &GroupElement, conjugator_bound: usize) -> Result<ParabolicSubgroup> {
    EnumeratedParabolics::new(alpha.context(), conjugator_bound)?.closure(alpha)
}

/// Elements of the signed ball of the given radius lying in both subgroups.
pub fn intersect_oracle(p: &ParabolicSubgroup, q: &ParabolicSubgroup, radius: usize) -> Result<Vec<GroupElement>> {
    p.require_same_group(q)?;
    let ball = Ball::new(p.context(), radius)?;
    Ok(intersect_in(&ball, p, q))
}

/// As [`intersect_oracle`], reusing a precomputed ball.
pub fn intersect_in(ball: &Ball, p: &ParabolicSubgroup, q: &ParabolicSubgroup) -> Vec<GroupElement> {
    ball.elements.par_iter().filter(|u| p.contains_element(u) && q.contains_element(u)).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::group;
    use crate::coxeter::GeneratorSet;

    fn std(ctx: &Group, ix: &[usize]) -> ParabolicSubgroup {
        ParabolicSubgroup::standard(ctx, GeneratorSet::from_indices(ix.iter().copied()))
    }

    #[test]
    fn enumeration_contains_standard_subgroups() {
        let a2 = group("A2").unwrap();
        let e = EnumeratedParabolics::new(&a2, 1).unwrap();
        for x in a2.all_generators().subsets() {
            assert!(e.items.contains(&ParabolicSubgroup::standard(&a2, x)));
        }
    }

    #[test]
    fn oracle_closures() {
        let a2 = group("A2").unwrap();
        let s1 = GroupElement::parse(&a2, "s1").unwrap();
        assert_eq!(closure_oracle(&s1, 2).unwrap(), std(&a2, &[0]));
        assert_eq!(closure_oracle(&GroupElement::delta(&a2), 1).unwrap(), ParabolicSubgroup::whole(&a2));
        let a4 = group("A4").unwrap();
        let a = GroupElement::parse(&a4, "s1 s2").unwrap();
        assert_eq!(closure_oracle(&a, 1).unwrap(), std(&a4, &[0, 1]));
    }

    #[test]
    fn oracle_intersections() {
        let a4 = group("A4").unwrap();
        let common = intersect_oracle(&std(&a4, &[0]), &std(&a4, &[2]), 3).unwrap();
        assert_eq!(common, vec![GroupElement::identity(&a4)]);
        let a3 = group("A3").unwrap();
        let common = intersect_oracle(&std(&a3, &[0, 1]), &std(&a3, &[1, 2]), 3).unwrap();
        assert!(common.iter().all(|u| u.support().is_subset(GeneratorSet::from_indices([1]))));
        assert_eq!(common.len(), 7);
    }
}
