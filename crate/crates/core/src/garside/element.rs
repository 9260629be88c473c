//! Elements of `A_S` in classical left normal form `Δ^p · a_1 ⋯ a_r`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::context::{Group, GroupContext};
use crate::coxeter::GeneratorId;
use crate::error::{Error, Result};

use super::SimpleElement;

/// The left normal form: `Δ^delta_power` followed by left-weighted factors,
/// none of which is `1` or `Δ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CanonicalForm {
    pub delta_power: i64,
    pub factors: Vec<SimpleElement>,
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.delta_power
            .cmp(&other.delta_power)
            .then_with(|| self.factors.len().cmp(&other.factors.len()))
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

/// A letter of a signed word: `s` or `s^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: GeneratorId,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(s: GeneratorId) -> Self {
        Letter { generator: s, inverse: false }
    }

    pub fn neg(s: GeneratorId) -> Self {
        Letter { generator: s, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.generator)
        } else {
            write!(f, "{}", self.generator)
        }
    }
}

#[derive(Clone)]
pub struct GroupElement {
    ctx: Group,
    form: CanonicalForm,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.form == other.form
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.form.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.form.cmp(&other.form)
    }
}

pub(crate) fn same_group(a: &Group, b: &Group) -> bool {
    Arc::ptr_eq(a, b) || a.spec() == b.spec()
}

/// Appends `b` to a left normal form held as `(p, f)`, restoring the
/// left-greedy condition by sweeping leftwards.
fn push_factor(ctx: &GroupContext, p: &mut i64, f: &mut Vec<SimpleElement>, b: SimpleElement) {
    if b.is_identity() {
        return;
    }
    f.push(b);
    let mut i = f.len() - 1;
    while i > 0 {
        let (left, right) = f.split_at_mut(i);
        if !ctx.left_weight(&mut left[i - 1], &mut right[0]) {
            break;
        }
        i -= 1;
    }
    let delta = ctx.delta_simple();
    let lead = f.iter().take_while(|a| *a == delta).count();
    if lead > 0 {
        f.drain(..lead);
        *p += lead as i64;
    }
    while f.last().is_some_and(SimpleElement::is_identity) {
        f.pop();
    }
    debug_assert!(f.iter().all(|a| !a.is_identity()));
}

impl GroupElement {
    pub(crate) fn from_form_unchecked(ctx: &Group, form: CanonicalForm) -> Self {
        GroupElement { ctx: ctx.clone(), form }
    }

    pub fn identity(ctx: &Group) -> Self {
        Self::delta_pow(ctx, 0)
    }

    pub fn delta(ctx: &Group) -> Self {
        Self::delta_pow(ctx, 1)
    }

    pub fn delta_pow(ctx: &Group, k: i64) -> Self {
        Self::from_form_unchecked(ctx, CanonicalForm { delta_power: k, factors: Vec::new() })
    }

    pub fn generator(ctx: &Group, s: GeneratorId) -> Self {
        Self::from_simple(ctx, ctx.generator(s))
    }

    pub fn from_simple(ctx: &Group, a: SimpleElement) -> Self {
        Self::from_parts(ctx, 0, [a])
    }

    /// Normal form of `Δ^p · b_1 ⋯ b_k` for arbitrary simple `b_i`.
    pub fn from_parts<I: IntoIterator<Item = SimpleElement>>(ctx: &Group, p: i64, factors: I) -> Self {
        let mut power = p;
        let mut f = Vec::new();
        for b in factors {
            push_factor(ctx, &mut power, &mut f, b);
        }
        Self::from_form_unchecked(ctx, CanonicalForm { delta_power: power, factors: f })
    }

    pub fn from_letters(ctx: &Group, word: &[Letter]) -> Self {
        let mut power = 0i64;
        let mut f: Vec<SimpleElement> = Vec::new();
        for l in word {
            if l.inverse {
                // s^{-1} = Δ^{-1} · (Δ s^{-1}), and X Δ^{-1} = Δ^{-1} τ(X)
                for a in f.iter_mut() {
                    *a = ctx.tau_simple(a);
                }
                power -= 1;
                let c = ctx.left_complement(&ctx.generator(l.generator));
                push_factor(ctx, &mut power, &mut f, c);
            } else {
                push_factor(ctx, &mut power, &mut f, ctx.generator(l.generator));
            }
        }
        Self::from_form_unchecked(ctx, CanonicalForm { delta_power: power, factors: f })
    }

    pub fn from_positive_word(ctx: &Group, word: &[GeneratorId]) -> Self {
        let letters: Vec<Letter> = word.iter().copied().map(Letter::pos).collect();
        Self::from_letters(ctx, &letters)
    }

    pub fn context(&self) -> &Group {
        &self.ctx
    }

    pub fn form(&self) -> &CanonicalForm {
        &self.form
    }

    pub fn delta_power(&self) -> i64 {
        self.form.delta_power
    }

    pub fn factors(&self) -> &[SimpleElement] {
        &self.form.factors
    }

    pub fn inf(&self) -> i64 {
        self.form.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.form.delta_power + self.form.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.form.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.form.delta_power == 0 && self.form.factors.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.form.delta_power >= 0
    }

    pub fn is_delta_power(&self) -> bool {
        self.form.factors.is_empty()
    }

    /// Length of a positive element as a word in `S`.
    pub fn positive_length(&self) -> Option<usize> {
        self.is_positive().then(|| {
            self.form.delta_power as usize * self.ctx.delta_simple().len()
                + self.form.factors.iter().map(SimpleElement::len).sum::<usize>()
        })
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if !same_group(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(self.mul(other))
    }

    /// `self · other`. Panics if the elements come from different groups.
    pub fn mul(&self, other: &Self) -> Self {
        assert!(same_group(&self.ctx, &other.ctx), "elements belong to different groups");
        let ctx = &self.ctx;
        let q = other.form.delta_power;
        let mut power = self.form.delta_power + q;
        let mut f: Vec<SimpleElement> = if q.rem_euclid(2) == 1 {
            self.form.factors.iter().map(|a| ctx.tau_simple(a)).collect()
        } else {
            self.form.factors.clone()
        };
        for b in &other.form.factors {
            push_factor(ctx, &mut power, &mut f, b.clone());
        }
        Self::from_form_unchecked(ctx, CanonicalForm { delta_power: power, factors: f })
    }

    pub fn mul_simple(&self, a: &SimpleElement) -> Self {
        let mut power = self.form.delta_power;
        let mut f = self.form.factors.clone();
        push_factor(&self.ctx, &mut power, &mut f, a.clone());
        Self::from_form_unchecked(&self.ctx, CanonicalForm { delta_power: power, factors: f })
    }

    pub fn inverse(&self) -> Self {
        let ctx = &self.ctx;
        let p = self.form.delta_power;
        let r = self.form.factors.len() as i64;
        let mut power = -p - r;
        let mut f = Vec::with_capacity(r as usize);
        for (k, a) in self.form.factors.iter().rev().enumerate() {
            let c = ctx.left_complement(a);
            let c = if (r - 1 - k as i64 + p).rem_euclid(2) == 1 { ctx.tau_simple(&c) } else { c };
            push_factor(ctx, &mut power, &mut f, c);
        }
        Self::from_form_unchecked(ctx, CanonicalForm { delta_power: power, factors: f })
    }

    pub fn pow(&self, m: i64) -> Self {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(&self.ctx);
        let mut sq = base;
        let mut e = m.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// The conjugate `x^{-1} · self · x`.
    pub fn conjugate(&self, x: &Self) -> Self {
        x.inverse().mul(self).mul(x)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// `τ^k(self) = Δ^{-k} · self · Δ^k`.
    pub fn tau_pow(&self, k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            return self.clone();
        }
        let f = self.form.factors.iter().map(|a| self.ctx.tau_simple(a)).collect();
        Self::from_form_unchecked(&self.ctx, CanonicalForm { delta_power: self.form.delta_power, factors: f })
    }

    /// A signed word representing the element: `Δ^p` spelled out letter by
    /// letter, followed by the reduced words of the factors.
    pub fn to_letters(&self) -> Vec<Letter> {
        let ctx = &self.ctx;
        let mut out = Vec::new();
        let dw = ctx.simple_word(ctx.delta_simple());
        let p = self.form.delta_power;
        for _ in 0..p.max(0) {
            out.extend(dw.iter().copied().map(Letter::pos));
        }
        for _ in 0..(-p).max(0) {
            out.extend(dw.iter().rev().copied().map(Letter::neg));
        }
        for a in &self.form.factors {
            out.extend(ctx.simple_word(a).into_iter().map(Letter::pos));
        }
        out
    }

    /// Letters of a positive element, `None` if the element is not positive.
    pub fn positive_word(&self) -> Option<Vec<GeneratorId>> {
        self.is_positive().then(|| self.to_letters().into_iter().map(|l| l.generator).collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let factors: Vec<Vec<usize>> = self
            .form
            .factors
            .iter()
            .map(|a| self.ctx.simple_word(a).into_iter().map(|s| s.index() + 1).collect())
            .collect();
        serde_json::json!({ "deltaPower": self.form.delta_power, "factors": factors })
    }

    pub fn from_json(ctx: &Group, value: &serde_json::Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("canonical form JSON: {m}"));
        let p = value.get("deltaPower").and_then(|v| v.as_i64()).ok_or_else(|| bad("missing deltaPower"))?;
        let arr = value.get("factors").and_then(|v| v.as_array()).ok_or_else(|| bad("missing factors"))?;
        let mut simples = Vec::new();
        for fac in arr {
            let letters = fac.as_array().ok_or_else(|| bad("factor is not a list"))?;
            let mut word = Vec::new();
            for l in letters {
                let i = l.as_u64().ok_or_else(|| bad("letter is not an integer"))? as usize;
                if i == 0 || i > ctx.rank() {
                    return Err(bad(&format!("generator index {i} out of range")));
                }
                word.push(GeneratorId((i - 1) as u8));
            }
            simples.push(ctx.simple_from_word(&word).ok_or(Error::NotSimple(1))?);
        }
        Ok(Self::from_parts(ctx, p, simples))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.form.delta_power)?;
        if self.form.factors.is_empty() {
            return Ok(());
        }
        write!(f, " · ")?;
        for a in &self.form.factors {
            let w: Vec<String> = self.ctx.simple_word(a).iter().map(|s| s.to_string()).collect();
            write!(f, "({})", w.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::ops::Mul for &GroupElement {
    type Output = GroupElement;

    fn mul(self, rhs: &GroupElement) -> GroupElement {
        GroupElement::mul(self, rhs)
    }
}
