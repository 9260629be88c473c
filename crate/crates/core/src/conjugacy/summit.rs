//! Seeds and membership tests for the summit sets.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::garside::{GarsideStructure, GroupElement};

use super::SummitKind;

const ORBIT_CAP: usize = 1_000_000;

type Step = fn(&GarsideStructure, &GroupElement) -> (GroupElement, GroupElement);

pub(crate) fn cycling_step(s: &GarsideStructure, x: &GroupElement) -> (GroupElement, GroupElement) {
    s.cycling(x)
}

pub(crate) fn decycling_step(s: &GarsideStructure, x: &GroupElement) -> (GroupElement, GroupElement) {
    s.decycling(x)
}

/// Whether `x` returns to itself under `step`.
pub(crate) fn is_periodic(s: &GarsideStructure, x: &GroupElement, step: Step) -> bool {
    orbit_period(s, x, step).is_some()
}

/// Least `k > 0` with `step^k(x) = x`, if any.
pub(crate) fn orbit_period(s: &GarsideStructure, x: &GroupElement, step: Step) -> Option<usize> {
    let mut seen = std::collections::HashSet::new();
    let mut y = x.clone();
    for k in 1..ORBIT_CAP {
        y = step(s, &y).0;
        if y == *x {
            return Some(k);
        }
        if !seen.insert(y.clone()) {
            return None;
        }
    }
    None
}

/// Iterates `step` until an element repeats; returns the first periodic
/// element reached and the conjugator leading to it.
pub(crate) fn enter_cycle(s: &GarsideStructure, x: &GroupElement, step: Step) -> (GroupElement, GroupElement) {
    let mut index: HashMap<GroupElement, usize> = HashMap::new();
    let mut trail = vec![(x.clone(), GroupElement::identity(s.context()))];
    index.insert(x.clone(), 0);
    loop {
        let (cur, acc) = trail.last().unwrap().clone();
        let (next, k) = step(s, &cur);
        if let Some(&i) = index.get(&next) {
            return trail.swap_remove(i);
        }
        index.insert(next.clone(), trail.len());
        trail.push((next, acc.mul(&k)));
    }
}

/// Iterated cycling until the infimum is maximal, then iterated decycling
/// until the supremum is minimal. The result lies in the super summit set.
pub fn sss_seed(s: &GarsideStructure, x: &GroupElement) -> (GroupElement, GroupElement) {
    let bound = s.exponent() as usize * s.context().delta_simple().len().max(1);
    let (y, c1) = improve(s, x, cycling_step, bound, |s, a, b| s.inf(a) > s.inf(b));
    let (z, c2) = improve(s, &y, decycling_step, bound, |s, a, b| s.sup(a) < s.sup(b));
    (z, c1.mul(&c2))
}

fn improve(
    s: &GarsideStructure,
    x: &GroupElement,
    step: Step,
    bound: usize,
    better: fn(&GarsideStructure, &GroupElement, &GroupElement) -> bool,
) -> (GroupElement, GroupElement) {
    let mut best = (x.clone(), GroupElement::identity(s.context()));
    let mut cur = best.clone();
    let mut seen = std::collections::HashSet::new();
    seen.insert(x.clone());
    let mut stall = 0;
    while stall < bound {
        let (next, k) = step(s, &cur.0);
        cur = (next, cur.1.mul(&k));
        if better(s, &cur.0, &best.0) {
            best = cur.clone();
            seen.clear();
            stall = 0;
        } else {
            stall += 1;
        }
        if !seen.insert(cur.0.clone()) {
            break;
        }
    }
    best
}

pub fn uss_seed(s: &GarsideStructure, x: &GroupElement) -> (GroupElement, GroupElement) {
    let (y, c1) = sss_seed(s, x);
    let (z, c2) = enter_cycle(s, &y, cycling_step);
    (z, c1.mul(&c2))
}

pub fn rsss_seed(s: &GarsideStructure, x: &GroupElement) -> (GroupElement, GroupElement) {
    let (mut y, mut acc) = sss_seed(s, x);
    loop {
        let (z, c) = enter_cycle(s, &y, cycling_step);
        acc = acc.mul(&c);
        y = z;
        if is_periodic(s, &y, decycling_step) {
            return (y, acc);
        }
        let (z, c) = enter_cycle(s, &y, decycling_step);
        acc = acc.mul(&c);
        y = z;
        if is_periodic(s, &y, cycling_step) {
            return (y, acc);
        }
    }
}

/// Conjugates into `SU` for `|m| ≤ max_power`: whenever `x^m` is not in its
/// ultra summit set, `x` is conjugated by the conjugator that brings `x^m`
/// there.
pub fn su_seed(s: &GarsideStructure, x: &GroupElement, max_power: u32) -> Result<(GroupElement, GroupElement)> {
    let (mut y, mut acc) = rsss_seed(s, x);
    let powers = su_powers(max_power);
    let summits: Vec<(i64, i64)> = powers
        .iter()
        .map(|&m| {
            let (z, _) = sss_seed(s, &y.pow(m));
            (s.inf(&z), s.sup(&z))
        })
        .collect();
    for _round in 0..64 {
        let mut changed = false;
        for (&m, &(i, j)) in powers.iter().zip(&summits) {
            let ym = y.pow(m);
            if in_uss_with(s, &ym, i, j) {
                continue;
            }
            let (_, c) = uss_seed(s, &ym);
            y = y.conjugate(&c);
            acc = acc.mul(&c);
            changed = true;
        }
        if !changed {
            return Ok((y, acc));
        }
    }
    Err(Error::BudgetExceeded("SU conjugation did not stabilise".into()))
}

pub(crate) fn su_powers(max_power: u32) -> Vec<i64> {
    (1..=max_power as i64).flat_map(|m| [m, -m]).collect()
}

fn in_uss_with(s: &GarsideStructure, x: &GroupElement, inf: i64, sup: i64) -> bool {
    s.inf(x) == inf && s.sup(x) == sup && is_periodic(s, x, cycling_step)
}

/// A membership predicate for one summit set of a fixed conjugacy class.
#[derive(Clone, Debug)]
pub struct Summit {
    pub kind: SummitKind,
    pub structure: GarsideStructure,
    pub inf: i64,
    pub sup: i64,
    /// `(m, inf, sup)` of the summit of `α^m`, for SU.
    pub powers: Vec<(i64, i64, i64)>,
    pub su_max_power: u32,
}

impl Summit {
    /// Builds the predicate and a seed element of the set, with the
    /// conjugator `c` such that `seed = c^{-1} x c`.
    pub fn with_seed(
        kind: SummitKind,
        s: &GarsideStructure,
        x: &GroupElement,
        su_max_power: u32,
    ) -> Result<(Summit, GroupElement, GroupElement)> {
        let (sss, c_sss) = sss_seed(s, x);
        let mut summit = Summit {
            kind,
            structure: s.clone(),
            inf: s.inf(&sss),
            sup: s.sup(&sss),
            powers: Vec::new(),
            su_max_power,
        };
        let (seed, c) = match kind {
            SummitKind::PositiveConjugates => {
                let (y, c) = sss_seed(&GarsideStructure::classical(s.context()), x);
                if y.inf() < 0 {
                    return Err(Error::EmptySet);
                }
                (y, c)
            }
            SummitKind::Sss => (sss, c_sss),
            SummitKind::Uss => uss_seed(s, x),
            SummitKind::Rsss => rsss_seed(s, x),
            SummitKind::Su => {
                let (y, c) = su_seed(s, x, su_max_power)?;
                summit.powers = su_powers(su_max_power)
                    .into_iter()
                    .map(|m| {
                        let (z, _) = sss_seed(s, &y.pow(m));
                        (m, s.inf(&z), s.sup(&z))
                    })
                    .collect();
                (y, c)
            }
        };
        debug_assert!(summit.contains(&seed));
        Ok((summit, seed, c))
    }

    pub fn contains(&self, y: &GroupElement) -> bool {
        let s = &self.structure;
        let in_sss = || s.inf(y) == self.inf && s.sup(y) == self.sup;
        match self.kind {
            SummitKind::PositiveConjugates => y.is_positive(),
            SummitKind::Sss => in_sss(),
            SummitKind::Uss => in_sss() && is_periodic(s, y, cycling_step),
            SummitKind::Rsss => {
                in_sss() && is_periodic(s, y, cycling_step) && is_periodic(s, y, decycling_step)
            }
            SummitKind::Su => self.powers.iter().all(|&(m, i, j)| in_uss_with(s, &y.pow(m), i, j)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::group;

    fn p(ctx: &crate::Group, t: &str) -> GroupElement {
        GroupElement::parse(ctx, t).unwrap()
    }

    #[test]
    fn seeds_are_conjugates_in_their_sets() {
        let ctx = group("A3").unwrap();
        let s = GarsideStructure::classical(&ctx);
        for w in ["s1 s2^-1 s3 s1 s1", "s2^-1 s2^-1 s1 s3", "s1 s2 s3 s1 s2^-1 s1^-1 s3^-1"] {
            let x = p(&ctx, w);
            for kind in [SummitKind::Sss, SummitKind::Uss, SummitKind::Rsss, SummitKind::Su] {
                let (summit, seed, c) = Summit::with_seed(kind, &s, &x, 3).unwrap();
                assert_eq!(x.conjugate(&c), seed);
                assert!(summit.contains(&seed), "{w} {kind:?}");
            }
        }
    }

    #[test]
    fn positive_conjugates() {
        let ctx = group("A2").unwrap();
        let s = GarsideStructure::classical(&ctx);
        let x = p(&ctx, "s1^-1 s2 s1 s1");
        let (_, seed, _) = Summit::with_seed(SummitKind::PositiveConjugates, &s, &x, 1).unwrap();
        assert!(seed.is_positive());
        let y = p(&ctx, "s1 s2^-1");
        assert_eq!(Summit::with_seed(SummitKind::PositiveConjugates, &s, &y, 1).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn periodicity() {
        let ctx = group("A2").unwrap();
        let s = GarsideStructure::classical(&ctx);
        let d = GroupElement::delta(&ctx);
        assert_eq!(orbit_period(&s, &d, cycling_step), Some(1));
        let x = p(&ctx, "s1 s2 s2");
        assert!(!is_periodic(&s, &x, cycling_step));
    }
}
