use crate::error::{Error, Result};
use crate::garside::{GarsideStructure, GroupElement};

use super::summit::Summit;
use super::SummitKind;

const PERIOD_CAP: usize = 100_000;

/// The transports of a conjugator along the cycling orbits of `v` and `w`.
#[derive(Clone, Debug)]
pub struct TransportRecord {
    pub v: GroupElement,
    pub w: GroupElement,
    /// Positive conjugator with `x^{-1} v x = w`.
    pub x: GroupElement,
    pub orbit_period: usize,
    /// `(c^i(v), c^i(w), x^{(i)})` for `0 ≤ i ≤ orbit_period`.
    pub iterates: Vec<(GroupElement, GroupElement, GroupElement)>,
}

/// `C_t(v) = ι(v) ι(c(v)) ⋯ ι(c^{t-1}(v))`, so that `c^t(v) = C_t(v)^{-1} v C_t(v)`.
pub fn iterated_cycling_conjugator(s: &GarsideStructure, v: &GroupElement, t: usize) -> GroupElement {
    let mut acc = GroupElement::identity(s.context());
    let mut cur = v.clone();
    for _ in 0..t {
        let (next, c) = s.cycling(&cur);
        acc = acc.mul(&c);
        cur = next;
    }
    acc
}

fn check_inputs(s: &GarsideStructure, v: &GroupElement, w: &GroupElement, x: &GroupElement) -> Result<()> {
    for e in [w, x] {
        if !crate::garside::same_group(v.context(), e.context()) {
            return Err(Error::ContextMismatch);
        }
    }
    if v.conjugate(x) != *w {
        return Err(Error::NotConjugating);
    }
    let (summit, _, _) = Summit::with_seed(SummitKind::Uss, s, v, 1)?;
    if !summit.contains(v) || !summit.contains(w) {
        return Err(Error::NotInUss);
    }
    Ok(())
}

pub fn transport_orbit(
    v: &GroupElement,
    w: &GroupElement,
    x: &GroupElement,
    s: &GarsideStructure,
) -> Result<TransportRecord> {
    check_inputs(s, v, w, x)?;
    let ctx = v.context();
    // a central Δ-power moves x into the positive monoid
    let central = ctx.tau_order();
    let shift = if x.inf() < 0 { (-x.inf() + central - 1) / central * central } else { 0 };
    let x = x.mul(&GroupElement::delta_pow(ctx, shift));
    let mut iterates = vec![(v.clone(), w.clone(), x.clone())];
    for k in 1..=PERIOD_CAP {
        let (cv, iv) = s.cycling(&iterates[k - 1].0);
        let (cw, iw) = s.cycling(&iterates[k - 1].1);
        let nx = iv.inverse().mul(&iterates[k - 1].2).mul(&iw);
        let done = cv == *v && cw == *w && nx == x;
        iterates.push((cv, cw, nx));
        if done {
            return Ok(TransportRecord { v: v.clone(), w: w.clone(), x, orbit_period: k, iterates });
        }
    }
    Err(Error::BudgetExceeded("transport did not return within the period cap".into()))
}

/// Least `M`, a multiple of the transport period with `Δ^{NM}` central,
/// together with `C̃_M(v) = C_M(v) Δ^{-NM}` and `C̃_M(w)`.
pub fn stable_twisted_conjugator(
    v: &GroupElement,
    w: &GroupElement,
    x: &GroupElement,
    s: &GarsideStructure,
) -> Result<(usize, GroupElement, GroupElement)> {
    let record = transport_orbit(v, w, x, s)?;
    let ctx = v.context();
    let n = s.exponent() as i64;
    let period = record.orbit_period;
    let mut m = period;
    while (n * m as i64) % ctx.tau_order() != 0 {
        m += period;
    }
    let twist = GroupElement::delta_pow(ctx, -n * m as i64);
    let cv = iterated_cycling_conjugator(s, v, m).mul(&twist);
    let cw = iterated_cycling_conjugator(s, w, m).mul(&twist);
    Ok((m, cv, cw))
}
