//! Parabolic subgroups `g·A_X·g^{-1}`, keyed by their central element `z_P`.

mod closure;

use std::fmt;
use std::hash::{Hash, Hasher};

use serde_json::json;

use crate::context::Group;
use crate::coxeter::{GeneratorId, GeneratorSet};
use crate::error::{Error, Result};
use crate::garside::word::format_positive_word;
use crate::garside::{same_group, GroupElement};

pub use closure::{parabolic_closure, parabolic_closure_with, phi};

/// `r_{X,t} = Δ_X^{-1} Δ_{X∪{t}}`.
pub fn ribbon(ctx: &Group, x: GeneratorSet, t: GeneratorId) -> GroupElement {
    let mut xt = x;
    xt.insert(t);
    let dx = GroupElement::from_simple(ctx, ctx.longest_element(x).clone());
    let dxt = GroupElement::from_simple(ctx, ctx.longest_element(xt).clone());
    dx.inverse().mul(&dxt)
}

/// `z_X = Δ_X^e`.
pub fn standard_z(ctx: &Group, x: GeneratorSet) -> GroupElement {
    if x.is_empty() {
        return GroupElement::identity(ctx);
    }
    GroupElement::from_simple(ctx, ctx.longest_element(x).clone()).pow(ctx.central_exponent(x))
}

/// A parabolic subgroup stored as `b·A_Y·b^{-1}` where `b` is its minimal
/// standardizer.
#[derive(Clone, Debug)]
pub struct ParabolicSubgroup {
    standardizer: GroupElement,
    base: GeneratorSet,
    z: GroupElement,
}

impl PartialEq for ParabolicSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.z == other.z
    }
}

impl Eq for ParabolicSubgroup {}

impl Hash for ParabolicSubgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.z.hash(state)
    }
}

impl PartialOrd for ParabolicSubgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ParabolicSubgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.base.len(), &self.standardizer, self.base.0).cmp(&(other.base.len(), &other.standardizer, other.base.0))
    }
}

impl ParabolicSubgroup {
    /// `g·A_X·g^{-1}`.
    pub fn new(g: &GroupElement, x: GeneratorSet) -> Self {
        let ctx = g.context();
        let z = standard_z(ctx, x).conjugate(&g.inverse());
        Self::from_z(z)
    }

    pub fn standard(ctx: &Group, x: GeneratorSet) -> Self {
        ParabolicSubgroup { standardizer: GroupElement::identity(ctx), base: x, z: standard_z(ctx, x) }
    }

    pub fn trivial(ctx: &Group) -> Self {
        Self::standard(ctx, GeneratorSet::EMPTY)
    }

    pub fn whole(ctx: &Group) -> Self {
        Self::standard(ctx, ctx.all_generators())
    }

    /// Rebuilds the subgroup from a valid central element: with `z = a b^{-1}`
    /// in pn-normal form, `b^{-1} z b = b^{-1} a` is the positive `z_Y`.
    fn from_z(z: GroupElement) -> Self {
        let pn = z.pn_normal_form();
        let b = pn.negative;
        let zy = b.inverse().mul(&pn.positive);
        debug_assert!(zy.is_positive(), "conjugated central element is not positive: {zy}");
        let base = zy.support();
        debug_assert_eq!(zy, standard_z(z.context(), base));
        ParabolicSubgroup { standardizer: b, base, z }
    }

    pub fn context(&self) -> &Group {
        self.z.context()
    }

    pub fn z(&self) -> &GroupElement {
        &self.z
    }

    pub fn base(&self) -> GeneratorSet {
        self.base
    }

    pub fn standardizer(&self) -> &GroupElement {
        &self.standardizer
    }

    /// `(b, Y)` with `b` the least positive element such that `b^{-1} P b = A_Y`.
    pub fn minimal_standardizer(&self) -> (GroupElement, GeneratorSet) {
        (self.standardizer.clone(), self.base)
    }

    pub fn is_trivial(&self) -> bool {
        self.base.is_empty()
    }

    pub fn is_standard(&self) -> bool {
        self.standardizer.is_identity()
    }

    /// Neither trivial nor the whole group.
    pub fn is_proper(&self) -> bool {
        !self.base.is_empty() && self.base != self.context().all_generators()
    }

    pub fn is_irreducible(&self) -> bool {
        self.context().is_irreducible(self.base)
    }

    /// `x^{-1} P x`.
    pub fn conjugated(&self, x: &GroupElement) -> Self {
        Self::from_z(self.z.conjugate(x))
    }

    pub fn contains_element(&self, alpha: &GroupElement) -> bool {
        if !same_group(self.context(), alpha.context()) {
            return false;
        }
        alpha.conjugate(&self.standardizer).support().is_subset(self.base)
    }

    /// `Q ⊆ P`, tested as `z_Q ∈ P`.
    pub fn contains_subgroup(&self, q: &ParabolicSubgroup) -> bool {
        self.contains_element(&q.z)
    }

    /// `b·s·b^{-1}` for each `s` in the base.
    pub fn generators(&self) -> Vec<GroupElement> {
        let ctx = self.context();
        let binv = self.standardizer.inverse();
        self.base.iter().map(|s| GroupElement::generator(ctx, s).conjugate(&binv)).collect()
    }

    /// `|Δ_Y|` for the standardized base `Y`.
    pub fn delta_length(&self) -> usize {
        self.context().longest_element(self.base).len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "standardizer": format_positive_word(&self.standardizer.positive_word().unwrap_or_default()),
            "base": self.base.iter().map(|s| s.index() + 1).collect::<Vec<_>>(),
            "z": self.z.to_json(),
        })
    }

    pub fn from_json(ctx: &Group, value: &serde_json::Value) -> Result<Self> {
        let bad = || Error::Parse(format!("not a parabolic subgroup: {value}"));
        let word = value.get("standardizer").and_then(|v| v.as_str()).ok_or_else(bad)?;
        let b = GroupElement::parse(ctx, word)?;
        let mut base = GeneratorSet::EMPTY;
        for i in value.get("base").and_then(|v| v.as_array()).ok_or_else(bad)? {
            let i = i.as_u64().filter(|&i| i >= 1 && (i as usize) <= ctx.rank()).ok_or_else(bad)?;
            base.insert(GeneratorId(i as u8 - 1));
        }
        Ok(Self::new(&b, base))
    }

    pub fn require_same_group(&self, other: &Self) -> Result<()> {
        if same_group(self.context(), other.context()) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }
}

/// Equality of subgroups, decided by their central elements.
pub fn parabolic_equal(p: &ParabolicSubgroup, q: &ParabolicSubgroup) -> Result<bool> {
    p.require_same_group(q)?;
    Ok(p == q)
}

pub fn conjugated_parabolic(p: &ParabolicSubgroup, x: &GroupElement) -> ParabolicSubgroup {
    p.conjugated(x)
}

pub fn contains_element(p: &ParabolicSubgroup, alpha: &GroupElement) -> bool {
    p.contains_element(alpha)
}

pub fn minimal_standardizer(p: &ParabolicSubgroup) -> (GroupElement, GeneratorSet) {
    p.minimal_standardizer()
}

pub fn z_of(p: &ParabolicSubgroup) -> GroupElement {
    p.z.clone()
}

impl fmt::Display for ParabolicSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_standard() {
            return write!(f, "A_{}", self.base);
        }
        let w = format_positive_word(&self.standardizer.positive_word().unwrap_or_default());
        write!(f, "({w}) · A_{} · ({w})^-1", self.base)
    }
}
