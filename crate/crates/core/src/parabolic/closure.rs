use crate::conjugacy::{element_of_i_infinity, sss_seed, SummitKind};
use crate::error::Result;
use crate::garside::{GarsideStructure, GroupElement};

use super::ParabolicSubgroup;

const DEFAULT_WINDOW: u32 = 3;

/// The smallest parabolic subgroup containing `alpha`.
pub fn parabolic_closure(alpha: &GroupElement) -> Result<ParabolicSubgroup> {
    parabolic_closure_with(alpha, DEFAULT_WINDOW)
}

pub fn parabolic_closure_with(alpha: &GroupElement, window: u32) -> Result<ParabolicSubgroup> {
    let ctx = alpha.context();
    if alpha.is_identity() {
        return Ok(ParabolicSubgroup::trivial(ctx));
    }
    // a positive conjugate exists exactly when the maximal infimum is ≥ 0
    let (beta, c) = sss_seed(&GarsideStructure::classical(ctx), alpha);
    let (beta, c) = if beta.inf() >= 0 {
        (beta, c)
    } else {
        let r = element_of_i_infinity(alpha, SummitKind::Rsss, window, 1)?;
        (r.element, r.conjugator)
    };
    let base = beta.support();
    Ok(ParabolicSubgroup::standard(ctx, base).conjugated(&c.inverse()))
}

/// `|Δ_U|` for the standardized base `U` of the closure of `gamma`.
pub fn phi(gamma: &GroupElement) -> Result<usize> {
    Ok(parabolic_closure(gamma)?.delta_length())
}
