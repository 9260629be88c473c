//! The Garside structures `(A_S, A_S^+, Δ_S^N)`. Normal forms for `N > 1`
//! are derived from the classical one by grouping factors in blocks of `N`.

use std::fmt;

use crate::context::Group;
use crate::coxeter::GeneratorId;
use crate::error::{Error, Result};

use super::{GroupElement, Letter, SimpleElement};

#[derive(Clone, Debug)]
pub struct GarsideStructure {
    ctx: Group,
    n: u32,
}

/// Left normal form for `Δ^N`: `(Δ^N)^power · f_1 ⋯ f_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormN {
    pub exponent: u32,
    pub delta_power: i64,
    pub factors: Vec<GroupElement>,
}

impl fmt::Display for NormalFormN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 1 {
            write!(f, "Δ^{}", self.delta_power)?;
        } else {
            write!(f, "(Δ^{})^{}", self.exponent, self.delta_power)?;
        }
        if self.factors.is_empty() {
            return Ok(());
        }
        write!(f, " · ")?;
        for x in &self.factors {
            let w = x.positive_word().expect("factors are positive");
            let w: Vec<String> = w.iter().map(|s| s.to_string()).collect();
            write!(f, "({})", w.join(" "))?;
        }
        Ok(())
    }
}

impl GarsideStructure {
    pub fn new(ctx: &Group, n: u32) -> Self {
        assert!(n >= 1, "the Garside exponent must be positive");
        GarsideStructure { ctx: ctx.clone(), n }
    }

    pub fn classical(ctx: &Group) -> Self {
        Self::new(ctx, 1)
    }

    pub fn context(&self) -> &Group {
        &self.ctx
    }

    pub fn exponent(&self) -> u32 {
        self.n
    }

    pub fn garside_element(&self) -> GroupElement {
        GroupElement::delta_pow(&self.ctx, self.n as i64)
    }

    /// `(P, p')` with `p = N·P + p'` and `0 ≤ p' < N`.
    fn split(&self, u: &GroupElement) -> (i64, usize) {
        let n = self.n as i64;
        let p = u.delta_power();
        (p.div_euclid(n), p.rem_euclid(n) as usize)
    }

    /// Classical simple factors after `Δ^{N·P}`: `p'` copies of `Δ` then the
    /// factors of the classical normal form.
    fn classical_tail(&self, u: &GroupElement) -> Vec<SimpleElement> {
        let (_, rem) = self.split(u);
        let mut out = vec![self.ctx.delta_simple().clone(); rem];
        out.extend(u.factors().iter().cloned());
        out
    }

    pub fn normal_form(&self, u: &GroupElement) -> NormalFormN {
        let (big, _) = self.split(u);
        let factors = self
            .classical_tail(u)
            .chunks(self.n as usize)
            .map(|c| GroupElement::from_parts(&self.ctx, 0, c.iter().cloned()))
            .collect();
        NormalFormN { exponent: self.n, delta_power: big, factors }
    }

    pub fn left_normal_form(&self, word: &[Letter]) -> NormalFormN {
        self.normal_form(&GroupElement::from_letters(&self.ctx, word))
    }

    pub fn inf(&self, u: &GroupElement) -> i64 {
        self.split(u).0
    }

    pub fn canonical_length(&self, u: &GroupElement) -> usize {
        let (_, rem) = self.split(u);
        (rem + u.canonical_length()).div_ceil(self.n as usize)
    }

    pub fn sup(&self, u: &GroupElement) -> i64 {
        self.inf(u) + self.canonical_length(u) as i64
    }

    /// Whether `x` is a simple element for `Δ^N`, i.e. `1 ≼ x ≼ Δ^N`.
    pub fn is_simple(&self, x: &GroupElement) -> bool {
        x.is_positive() && x.sup() <= self.n as i64
    }

    /// `∂(s) = s^{-1} Δ^N`.
    pub fn complement(&self, s: &GroupElement) -> Result<GroupElement> {
        if !self.is_simple(s) {
            return Err(Error::NotSimple(self.n));
        }
        Ok(s.inverse().mul(&self.garside_element()))
    }

    /// `ι(α) = τ^{-P}(first factor)`, with `τ` the conjugation by `Δ^N`.
    pub fn initial_factor(&self, u: &GroupElement) -> GroupElement {
        let nf = self.normal_form(u);
        match nf.factors.first() {
            None => GroupElement::identity(&self.ctx),
            Some(f) => f.tau_pow(nf.delta_power * self.n as i64),
        }
    }

    pub fn final_factor(&self, u: &GroupElement) -> GroupElement {
        let nf = self.normal_form(u);
        nf.factors.last().cloned().unwrap_or_else(|| GroupElement::identity(&self.ctx))
    }

    /// `(c(α), ι(α))` with `c(α) = ι(α)^{-1} α ι(α)`.
    pub fn cycling(&self, u: &GroupElement) -> (GroupElement, GroupElement) {
        let x = self.initial_factor(u);
        (u.conjugate(&x), x)
    }

    /// `(d(α), α_r^{-1})` with `d(α) = α_r α α_r^{-1}`.
    pub fn decycling(&self, u: &GroupElement) -> (GroupElement, GroupElement) {
        let x = self.final_factor(u).inverse();
        (u.conjugate(&x), x)
    }

    /// `(c̃(α), ι(α) Δ^{-N})`; equal to `τ^{-1}(c(α))`.
    pub fn twisted_cycling(&self, u: &GroupElement) -> (GroupElement, GroupElement) {
        let x = self.initial_factor(u).mul(&GroupElement::delta_pow(&self.ctx, -(self.n as i64)));
        (u.conjugate(&x), x)
    }

    /// Conjugation by `Δ^N`.
    pub fn tau(&self, u: &GroupElement) -> GroupElement {
        u.tau_pow(self.n as i64)
    }
}

/// Witness of the rewriting `α s = t α` for a simple `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterRewrite {
    pub alpha: GroupElement,
    pub s: GeneratorId,
    pub t: GeneratorId,
}

/// If `t ⋠ α` and `t ≼ α s`, returns the verified equality `α s = t α`.
/// Fails with `NotSimple` when `α` is not a simple element.
pub fn simple_times_letter_rewrite(
    alpha: &GroupElement,
    t: GeneratorId,
    s: GeneratorId,
) -> Result<Option<LetterRewrite>> {
    let ctx = alpha.context();
    if !(alpha.is_positive() && alpha.sup() <= 1) {
        return Err(Error::NotSimple(1));
    }
    let tt = GroupElement::generator(ctx, t);
    let ss = GroupElement::generator(ctx, s);
    if tt.is_prefix_of(alpha) {
        return Ok(None);
    }
    let alpha_s = alpha.mul(&ss);
    if !tt.is_prefix_of(&alpha_s) {
        return Ok(None);
    }
    if alpha_s != tt.mul(alpha) {
        return Ok(None);
    }
    Ok(Some(LetterRewrite { alpha: alpha.clone(), s, t }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::group;
    use crate::garside::word::parse_letters;

    fn p(ctx: &Group, s: &str) -> GroupElement {
        GroupElement::parse(ctx, s).unwrap()
    }

    #[test]
    fn grouping_factors() {
        let a2 = group("A2").unwrap();
        let s2 = GarsideStructure::new(&a2, 2);
        let nf = s2.left_normal_form(&parse_letters(&a2, "s2 s1 s1 s2").unwrap());
        assert_eq!(nf.delta_power, 0);
        assert_eq!(nf.factors, vec![p(&a2, "s2 s1 s1 s2")]);
        let s1 = GarsideStructure::classical(&a2);
        assert_eq!(s1.normal_form(&p(&a2, "s2 s1 s1 s2")).factors.len(), 2);
        let u = p(&a2, "D^3 s1 s2 s2");
        assert_eq!(s2.inf(&u), 1);
        assert_eq!(s2.sup(&u), 3);
        assert_eq!(s2.normal_form(&u).to_string(), "(Δ^2)^1 · (s1 s2 s1 s1 s2)(s2)");
        let v = p(&a2, "D^-3 s1");
        assert_eq!(s2.inf(&v), -2);
        assert_eq!(s2.sup(&v), -1);
    }

    #[test]
    fn cycling_examples() {
        let a2 = group("A2").unwrap();
        let s = GarsideStructure::classical(&a2);
        let u = p(&a2, "s1 s2 s2");
        assert_eq!(s.initial_factor(&u), p(&a2, "s1 s2"));
        let (c, x) = s.cycling(&u);
        assert_eq!(c, GroupElement::delta(&a2));
        assert_eq!(x, p(&a2, "s1 s2"));
        assert!(s.initial_factor(&GroupElement::delta_pow(&a2, 3)).is_identity());
        let w = p(&a2, "D^-1 s1 s1");
        assert_eq!(s.initial_factor(&w), p(&a2, "s2"));
        let v = p(&a2, "s2^-1 s1");
        let (_, conj) = s.twisted_cycling(&v);
        assert_eq!(conj, p(&a2, "s2^-1"));
        let (d, y) = s.decycling(&u);
        assert_eq!(d, u.conjugate(&y));
        assert_eq!(y, p(&a2, "s2^-1"));
    }

    #[test]
    fn complements() {
        let a2 = group("A2").unwrap();
        let s = GarsideStructure::classical(&a2);
        assert_eq!(s.complement(&p(&a2, "s1 s2")).unwrap(), p(&a2, "s1"));
        assert_eq!(s.complement(&p(&a2, "")).unwrap(), GroupElement::delta(&a2));
        assert!(s.complement(&GroupElement::delta(&a2)).unwrap().is_identity());
        assert_eq!(s.complement(&p(&a2, "s1 s1")), Err(Error::NotSimple(1)));
        let s2 = GarsideStructure::new(&a2, 2);
        let x = p(&a2, "s1 s1");
        assert_eq!(s2.complement(&s2.complement(&x).unwrap()).unwrap(), s2.tau(&x));
    }

    #[test]
    fn letter_rewrite() {
        let a2 = group("A2").unwrap();
        let (g0, g1) = (GeneratorId(0), GeneratorId(1));
        assert_eq!(simple_times_letter_rewrite(&p(&a2, "s1"), g1, g1).unwrap(), None);
        assert!(simple_times_letter_rewrite(&p(&a2, ""), g0, g0).unwrap().is_some());
        let w = simple_times_letter_rewrite(&p(&a2, "s1 s2"), g1, g0).unwrap().unwrap();
        assert_eq!(w.alpha.mul(&p(&a2, "s1")), p(&a2, "s2").mul(&w.alpha));
        let b2 = group("I2(4)").unwrap();
        assert_eq!(simple_times_letter_rewrite(&p(&b2, "s1 s1 s2 s1"), g1, g1), Err(Error::NotSimple(1)));
    }
}
