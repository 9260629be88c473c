//! Simple elements of the classical Garside structure, realised as elements
//! of the finite Coxeter group.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::context::GroupContext;
use crate::coxeter::{GeneratorId, GeneratorSet, Perm};

/// A prefix of `Δ_S`, stored as the corresponding Coxeter group element.
#[derive(Clone)]
pub struct SimpleElement {
    pub(crate) perm: Perm,
    len: u16,
    left: GeneratorSet,
    right: GeneratorSet,
}

impl SimpleElement {
    pub(crate) fn from_perm(ctx: &GroupContext, perm: Perm) -> Self {
        let roots = ctx.roots();
        SimpleElement {
            len: roots.length(&perm) as u16,
            left: roots.left_descents(&perm),
            right: roots.right_descents(&perm),
            perm,
        }
    }

    pub(crate) fn placeholder(perm: Perm) -> Self {
        SimpleElement { perm, len: 0, left: GeneratorSet::EMPTY, right: GeneratorSet::EMPTY }
    }

    /// Word length.
    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    /// Generators `s` with `s ≼ self`.
    pub fn starting_set(&self) -> GeneratorSet {
        self.left
    }

    /// Generators `s` with `self ≽ s` (final letters).
    pub fn finishing_set(&self) -> GeneratorSet {
        self.right
    }
}

impl PartialEq for SimpleElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
    }
}

impl Eq for SimpleElement {}

impl Hash for SimpleElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

impl PartialOrd for SimpleElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SimpleElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| self.perm.cmp(&other.perm))
    }
}

impl fmt::Debug for SimpleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Simple(len={}, L={}, R={})", self.len, self.left, self.right)
    }
}

impl GroupContext {
    pub fn simple_identity(&self) -> SimpleElement {
        SimpleElement::from_perm(self, self.roots().identity.clone())
    }

    pub fn generator(&self, s: GeneratorId) -> SimpleElement {
        SimpleElement::from_perm(self, self.roots().gens[s.index()].clone())
    }

    /// Product in the Coxeter group; a simple element only when lengths add.
    pub(crate) fn coxeter_mul(&self, a: &SimpleElement, b: &SimpleElement) -> SimpleElement {
        SimpleElement::from_perm(self, self.roots().compose(&a.perm, &b.perm))
    }

    pub(crate) fn coxeter_inverse(&self, a: &SimpleElement) -> SimpleElement {
        SimpleElement::from_perm(self, self.roots().inverse(&a.perm))
    }

    pub(crate) fn mul_gen_right(&self, a: &SimpleElement, s: GeneratorId) -> SimpleElement {
        SimpleElement::from_perm(self, self.roots().compose(&a.perm, &self.roots().gens[s.index()]))
    }

    pub(crate) fn mul_gen_left(&self, s: GeneratorId, a: &SimpleElement) -> SimpleElement {
        SimpleElement::from_perm(self, self.roots().compose(&self.roots().gens[s.index()], &a.perm))
    }

    /// `a·b` when it is simple, i.e. when lengths add.
    pub fn simple_product(&self, a: &SimpleElement, b: &SimpleElement) -> Option<SimpleElement> {
        let p = self.coxeter_mul(a, b);
        (p.len() == a.len() + b.len()).then_some(p)
    }

    /// `a ≼ b` in the prefix order.
    pub fn simple_is_prefix(&self, a: &SimpleElement, b: &SimpleElement) -> bool {
        let q = self.coxeter_mul(&self.coxeter_inverse(a), b);
        a.len() + q.len() == b.len()
    }

    /// `a ≽ b`: `b` is a suffix of `a`.
    pub fn simple_is_suffix(&self, a: &SimpleElement, b: &SimpleElement) -> bool {
        let q = self.coxeter_mul(a, &self.coxeter_inverse(b));
        q.len() + b.len() == a.len()
    }

    /// `τ(a) = Δ^{-1} a Δ`.
    pub fn tau_simple(&self, a: &SimpleElement) -> SimpleElement {
        let d = &self.delta_simple().perm;
        let r = self.roots();
        SimpleElement::from_perm(self, r.compose(&r.compose(d, &a.perm), d))
    }

    /// Right complement `∂(a) = a^{-1} Δ`.
    pub fn right_complement(&self, a: &SimpleElement) -> SimpleElement {
        self.coxeter_mul(&self.coxeter_inverse(a), self.delta_simple())
    }

    /// Left complement `Δ a^{-1}`, the inverse map of `∂`.
    pub fn left_complement(&self, a: &SimpleElement) -> SimpleElement {
        self.coxeter_mul(self.delta_simple(), &self.coxeter_inverse(a))
    }

    /// Greatest common prefix of two simple elements.
    pub fn simple_meet(&self, a: &SimpleElement, b: &SimpleElement) -> SimpleElement {
        let (mut a, mut b) = (a.clone(), b.clone());
        let mut acc = self.simple_identity();
        loop {
            let Some(s) = a.starting_set().intersection(b.starting_set()).first() else {
                return acc;
            };
            acc = self.mul_gen_right(&acc, s);
            a = self.mul_gen_left(s, &a);
            b = self.mul_gen_left(s, &b);
        }
    }

    /// Greatest common suffix of two simple elements.
    pub fn simple_meet_suffix(&self, a: &SimpleElement, b: &SimpleElement) -> SimpleElement {
        let (mut a, mut b) = (a.clone(), b.clone());
        let mut acc = self.simple_identity();
        loop {
            let Some(s) = a.finishing_set().intersection(b.finishing_set()).first() else {
                return acc;
            };
            acc = self.mul_gen_left(s, &acc);
            a = self.mul_gen_right(&a, s);
            b = self.mul_gen_right(&b, s);
        }
    }

    /// Least common multiple for the prefix order.
    pub fn simple_join(&self, a: &SimpleElement, b: &SimpleElement) -> SimpleElement {
        let m = self.simple_meet_suffix(&self.right_complement(a), &self.right_complement(b));
        self.left_complement(&m)
    }

    /// Least common multiple for the suffix order.
    pub fn simple_join_suffix(&self, a: &SimpleElement, b: &SimpleElement) -> SimpleElement {
        // a ↦ Δ a^{-1} turns the suffix order into the reversed prefix order
        let m = self.simple_meet(&self.left_complement(a), &self.left_complement(b));
        self.right_complement(&m)
    }

    /// Lexicographically first reduced word.
    pub fn simple_word(&self, a: &SimpleElement) -> Vec<GeneratorId> {
        let mut w = Vec::with_capacity(a.len());
        let mut cur = a.clone();
        while let Some(s) = cur.starting_set().first() {
            w.push(s);
            cur = self.mul_gen_left(s, &cur);
        }
        w
    }

    pub fn simple_support(&self, a: &SimpleElement) -> GeneratorSet {
        GeneratorSet::from_indices(self.simple_word(a).into_iter().map(GeneratorId::index))
    }

    pub fn simple_from_word(&self, word: &[GeneratorId]) -> Option<SimpleElement> {
        let mut acc = self.simple_identity();
        for &s in word {
            if acc.finishing_set().contains(s) {
                return None;
            }
            acc = self.mul_gen_right(&acc, s);
        }
        Some(acc)
    }

    /// Makes the pair `(a, b)` left-weighted, preserving the product `ab`.
    pub(crate) fn left_weight(&self, a: &mut SimpleElement, b: &mut SimpleElement) -> bool {
        let mut changed = false;
        loop {
            let Some(s) = b.starting_set().difference(a.finishing_set()).first() else {
                return changed;
            };
            *a = self.mul_gen_right(a, s);
            *b = self.mul_gen_left(s, b);
            changed = true;
        }
    }

    /// Every simple element, by breadth-first search over the Cayley graph of
    /// the Coxeter group. Intended for small groups.
    pub fn all_simples(&self) -> Vec<SimpleElement> {
        let mut seen = std::collections::HashSet::new();
        let mut out = vec![self.simple_identity()];
        seen.insert(out[0].clone());
        let mut head = 0;
        while head < out.len() {
            let cur = out[head].clone();
            for s in self.spec().generators() {
                if !cur.finishing_set().contains(s) {
                    let next = self.mul_gen_right(&cur, s);
                    if seen.insert(next.clone()) {
                        out.push(next);
                    }
                }
            }
            head += 1;
        }
        out
    }
}
