//! The np-normal form `x^{-1} y` and its mirror, the pn-normal form `a b^{-1}`,
//! together with the support of an element.

use crate::coxeter::GeneratorSet;

use super::GroupElement;

/// `x^{-1} y` with `x`, `y` positive and `x ∧ y = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedForm {
    pub negative: GroupElement,
    pub positive: GroupElement,
}

/// `a b^{-1}` with `a`, `b` positive sharing no nontrivial suffix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PnForm {
    pub positive: GroupElement,
    pub negative: GroupElement,
}

impl MixedForm {
    pub fn element(&self) -> GroupElement {
        self.negative.inverse().mul(&self.positive)
    }

    pub fn support(&self) -> GeneratorSet {
        self.negative.positive_support().union(self.positive.positive_support())
    }
}

impl PnForm {
    pub fn element(&self) -> GroupElement {
        self.positive.mul(&self.negative.inverse())
    }
}

impl GroupElement {
    pub fn np_normal_form(&self) -> MixedForm {
        if self.is_positive() {
            return MixedForm { negative: GroupElement::identity(self.context()), positive: self.clone() };
        }
        let one = GroupElement::identity(self.context());
        let x = self.meet_prefix(&one).expect("same group").inverse();
        let y = x.mul(self);
        MixedForm { negative: x, positive: y }
    }

    pub fn pn_normal_form(&self) -> PnForm {
        if self.is_positive() {
            return PnForm { positive: self.clone(), negative: GroupElement::identity(self.context()) };
        }
        let one = GroupElement::identity(self.context());
        let b = self.meet_suffix(&one).expect("same group").inverse();
        let a = self.mul(&b);
        PnForm { positive: a, negative: b }
    }

    /// Letters of a positive element; `S` whenever `Δ` divides it.
    fn positive_support(&self) -> GeneratorSet {
        debug_assert!(self.is_positive());
        let ctx = self.context();
        if self.delta_power() > 0 {
            return ctx.all_generators();
        }
        self.factors().iter().fold(GeneratorSet::EMPTY, |acc, a| acc.union(ctx.simple_support(a)))
    }

    /// Generators occurring in the np-normal form.
    pub fn support(&self) -> GeneratorSet {
        if self.is_positive() {
            self.positive_support()
        } else {
            self.np_normal_form().support()
        }
    }
}
