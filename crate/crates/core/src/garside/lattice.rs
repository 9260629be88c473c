//! Prefix and suffix lattice operations on arbitrary group elements.

use crate::error::{Error, Result};

use super::element::same_group;
use super::{GroupElement, SimpleElement};

impl GroupElement {
    fn check_same(&self, other: &Self) -> Result<()> {
        if same_group(self.context(), other.context()) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// `self ∧ Δ` for a positive element.
    fn head(&self) -> SimpleElement {
        debug_assert!(self.is_positive());
        let ctx = self.context();
        if self.delta_power() > 0 {
            ctx.delta_simple().clone()
        } else {
            self.factors().first().cloned().unwrap_or_else(|| ctx.simple_identity())
        }
    }

    /// `t^{-1} · self` for a simple prefix `t` of a positive element.
    pub(crate) fn left_divide_simple(&self, t: &SimpleElement) -> Self {
        let ctx = self.context();
        let p = self.delta_power();
        if p > 0 {
            let c = ctx.right_complement(t);
            let c = if (p - 1) % 2 == 1 { ctx.tau_simple(&c) } else { c };
            let rest = std::iter::once(c).chain(self.factors().iter().cloned());
            GroupElement::from_parts(ctx, p - 1, rest)
        } else {
            let first = &self.factors()[0];
            let q = ctx.coxeter_mul(&ctx.coxeter_inverse(t), first);
            debug_assert_eq!(q.len() + t.len(), first.len());
            let rest = std::iter::once(q).chain(self.factors()[1..].iter().cloned());
            GroupElement::from_parts(ctx, p, rest)
        }
    }

    fn positive_meet(a: &Self, b: &Self) -> Self {
        let ctx = a.context();
        let mut acc = GroupElement::identity(ctx);
        let (mut a, mut b) = (a.clone(), b.clone());
        loop {
            let t = ctx.simple_meet(&a.head(), &b.head());
            if t.is_identity() {
                return acc;
            }
            acc = acc.mul_simple(&t);
            a = a.left_divide_simple(&t);
            b = b.left_divide_simple(&t);
        }
    }

    /// Greatest common prefix.
    pub fn meet_prefix(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let ctx = self.context();
        let m = self.inf().min(other.inf());
        let shift = GroupElement::delta_pow(ctx, -m);
        let meet = Self::positive_meet(&shift.mul(self), &shift.mul(other));
        Ok(GroupElement::delta_pow(ctx, m).mul(&meet))
    }

    /// Least common multiple for the prefix order.
    pub fn join_prefix(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let ctx = self.context();
        let m = self.sup().max(other.sup());
        let top = GroupElement::delta_pow(ctx, m);
        let ca = self.inverse().mul(&top);
        let cb = other.inverse().mul(&top);
        let s = ca.meet_suffix(&cb)?;
        Ok(top.mul(&s.inverse()))
    }

    /// Greatest common suffix.
    pub fn meet_suffix(&self, other: &Self) -> Result<Self> {
        Ok(self.reverse().meet_prefix(&other.reverse())?.reverse())
    }

    /// Least common multiple for the suffix order.
    pub fn join_suffix(&self, other: &Self) -> Result<Self> {
        Ok(self.reverse().join_prefix(&other.reverse())?.reverse())
    }

    /// The anti-automorphism fixing every generator (it reverses words).
    pub fn reverse(&self) -> Self {
        let ctx = self.context();
        let p = self.delta_power();
        let factors = self.factors().iter().rev().map(|a| {
            let r = ctx.coxeter_inverse(a);
            if p.rem_euclid(2) == 1 {
                ctx.tau_simple(&r)
            } else {
                r
            }
        });
        GroupElement::from_parts(ctx, p, factors)
    }

    /// `self ≼ other`, i.e. `self^{-1} other` is positive.
    pub fn is_prefix_of(&self, other: &Self) -> bool {
        self.inverse().mul(other).is_positive()
    }

    /// `other` is a suffix of `self`: `self · other^{-1}` is positive.
    pub fn has_suffix(&self, other: &Self) -> bool {
        self.mul(&other.inverse()).is_positive()
    }
}
