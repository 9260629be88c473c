use crate::error::{Error, Result};
use crate::garside::{GarsideStructure, GroupElement};

use super::summit::Summit;
use super::SummitKind;

/// Outcome of the search for an element lying in `I_N` for every `N` tried.
#[derive(Clone, Debug)]
pub struct InfinityResult {
    pub element: GroupElement,
    /// `element = conjugator^{-1} · α · conjugator`.
    pub conjugator: GroupElement,
    /// Last exponent tested; the element lies in `I_n` for all `n ≤ n_star`.
    pub n_star: u32,
}

const MAX_ROUNDS: usize = 64;
const MAX_EXPONENT: u32 = 64;

/// Conjugates `α` into `I_n` for `n = 1, 2, …`, re-checking the earlier
/// exponents after every move, and stops after `window` consecutive
/// exponents beyond the canonical length that needed no move.
pub fn element_of_i_infinity(
    alpha: &GroupElement,
    kind: SummitKind,
    window: u32,
    su_max_power: u32,
) -> Result<InfinityResult> {
    if kind == SummitKind::PositiveConjugates {
        return Err(Error::Parse("I_∞ is defined for SSS, USS, RSSS and SU only".into()));
    }
    let ctx = alpha.context();
    let mut beta = alpha.clone();
    let mut conj = GroupElement::identity(ctx);
    let mut quiet = 0;
    let mut n = 1;
    loop {
        let moved = settle(&mut beta, &mut conj, kind, n, su_max_power)?;
        if moved || n as usize <= beta.canonical_length() {
            quiet = 0;
        } else {
            quiet += 1;
        }
        if quiet >= window.max(1) || beta.is_delta_power() {
            return Ok(InfinityResult { element: beta, conjugator: conj, n_star: n });
        }
        n += 1;
        if n > MAX_EXPONENT {
            return Err(Error::BudgetExceeded(format!("I_∞ search did not stabilise by N = {MAX_EXPONENT}")));
        }
    }
}

/// Makes `beta` a member of `I_1, …, I_n`. Returns whether it moved.
fn settle(
    beta: &mut GroupElement,
    conj: &mut GroupElement,
    kind: SummitKind,
    n: u32,
    su_max_power: u32,
) -> Result<bool> {
    let ctx = beta.context().clone();
    let mut moved = false;
    for _ in 0..MAX_ROUNDS {
        let mut changed = false;
        for k in (1..=n).rev() {
            let s = GarsideStructure::new(&ctx, k);
            let (summit, seed, c) = Summit::with_seed(kind, &s, beta, su_max_power)?;
            if !summit.contains(beta) {
                *beta = seed;
                *conj = conj.mul(&c);
                changed = true;
            }
        }
        if !changed {
            return Ok(moved);
        }
        moved = true;
    }
    Err(Error::BudgetExceeded(format!("no common element of I_1..I_{n} found")))
}

/// Whether `beta` belongs to `I_k` for every `k ≤ n`.
pub fn in_all_summits(beta: &GroupElement, kind: SummitKind, n: u32, su_max_power: u32) -> Result<bool> {
    for k in 1..=n {
        let s = GarsideStructure::new(beta.context(), k);
        let (summit, _, _) = Summit::with_seed(kind, &s, beta, su_max_power)?;
        if !summit.contains(beta) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::group;

    #[test]
    fn delta_powers_are_fixed() {
        let ctx = group("A3").unwrap();
        let d = GroupElement::delta_pow(&ctx, 2);
        let r = element_of_i_infinity(&d, SummitKind::Rsss, 3, 2).unwrap();
        assert_eq!(r.element, d);
        assert_eq!(r.n_star, 1);
    }

    #[test]
    fn a2_example_is_positive_with_full_support() {
        let ctx = group("A2").unwrap();
        let a = GroupElement::parse(&ctx, "s1 s1 s2").unwrap();
        let r = element_of_i_infinity(&a, SummitKind::Rsss, 3, 2).unwrap();
        assert_eq!(a.conjugate(&r.conjugator), r.element);
        assert!(r.element.is_positive());
        assert_eq!(r.element.support(), ctx.all_generators());
        assert!(in_all_summits(&r.element, SummitKind::Rsss, r.n_star, 2).unwrap());
    }

    #[test]
    fn every_kind_settles() {
        let ctx = group("A3").unwrap();
        let a = GroupElement::parse(&ctx, "s1 s2^-1 s3 s2 s2 s1^-1").unwrap();
        for kind in [SummitKind::Sss, SummitKind::Uss, SummitKind::Rsss, SummitKind::Su] {
            let r = element_of_i_infinity(&a, kind, 3, 2).unwrap();
            assert_eq!(a.conjugate(&r.conjugator), r.element);
            assert!(in_all_summits(&r.element, kind, r.n_star, 2).unwrap(), "{kind:?}");
        }
    }
}
