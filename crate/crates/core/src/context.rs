//! The shared, immutable description of an Artin–Tits group of spherical
//! type: its Coxeter data, `Δ_S`, `τ_S` and the longest elements `Δ_X`.

use std::fmt;
use std::sync::Arc;

use crate::coxeter::{classify, ComponentType, CoxeterSpec, GeneratorId, GeneratorSet, RootSystem};
use crate::error::{Error, Result};
use crate::garside::SimpleElement;

pub const DEFAULT_RANK_CAP: usize = 10;

pub struct GroupContext {
    spec: CoxeterSpec,
    types: Vec<(GeneratorSet, ComponentType)>,
    roots: RootSystem,
    delta: SimpleElement,
    tau: Vec<GeneratorId>,
    /// `Δ_X` for every subset, indexed by mask.
    deltas: Vec<SimpleElement>,
}

impl fmt::Debug for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupContext({})", self.type_name())
    }
}

pub type Group = Arc<GroupContext>;

/// Builds a context with the default rank cap.
pub fn build_context(spec: CoxeterSpec) -> Result<Group> {
    build_context_with_cap(spec, DEFAULT_RANK_CAP)
}

pub fn build_context_with_cap(spec: CoxeterSpec, rank_cap: usize) -> Result<Group> {
    if spec.rank > rank_cap {
        return Err(Error::RankTooLarge { rank: spec.rank, cap: rank_cap });
    }
    let types = classify(&spec)?;
    let roots = RootSystem::new(&spec);
    let mut ctx = GroupContext {
        types,
        delta: SimpleElement::placeholder(roots.identity.clone()),
        tau: Vec::new(),
        deltas: Vec::new(),
        roots,
        spec,
    };
    let full = GeneratorSet::full(ctx.spec.rank);
    ctx.deltas = (0..=full.0).map(|m| ctx.compute_longest(GeneratorSet(m))).collect();
    ctx.delta = ctx.deltas[full.0 as usize].clone();
    ctx.tau = ctx.compute_tau(full);
    Ok(Arc::new(ctx))
}

/// Parses a type token and builds its context.
pub fn group(token: &str) -> Result<Group> {
    build_context(CoxeterSpec::parse(token)?)
}

impl GroupContext {
    pub(crate) fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn spec(&self) -> &CoxeterSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn all_generators(&self) -> GeneratorSet {
        GeneratorSet::full(self.rank())
    }

    pub fn component_types(&self) -> &[(GeneratorSet, ComponentType)] {
        &self.types
    }

    pub fn type_name(&self) -> String {
        self.types.iter().map(|(_, t)| t.to_string()).collect::<Vec<_>>().join("x")
    }

    /// Order of the Coxeter group `W_S`.
    pub fn coxeter_order(&self) -> u128 {
        self.types.iter().map(|(_, t)| t.order()).product()
    }

    pub fn delta_simple(&self) -> &SimpleElement {
        &self.delta
    }

    /// `τ_S(s) = Δ_S^{-1} s Δ_S`.
    pub fn tau(&self, s: GeneratorId) -> GeneratorId {
        self.tau[s.index()]
    }

    /// Whether `τ_S` is the identity, i.e. `Δ_S` is central.
    pub fn delta_is_central(&self) -> bool {
        self.tau.iter().enumerate().all(|(i, s)| s.index() == i)
    }

    /// Smallest `e ≥ 1` such that `Δ_S^e` is central.
    pub fn tau_order(&self) -> i64 {
        if self.delta_is_central() {
            1
        } else {
            2
        }
    }

    /// `Δ_X`, the least common multiple of the generators in `X`.
    pub fn longest_element(&self, x: GeneratorSet) -> &SimpleElement {
        &self.deltas[x.0 as usize]
    }

    /// The permutation `s ↦ Δ_X^{-1} s Δ_X` of `X`, as a table indexed by
    /// generator (entries outside `X` map to themselves).
    pub fn delta_permutation(&self, x: GeneratorSet) -> Vec<GeneratorId> {
        self.compute_tau(x)
    }

    /// Connected components of `Γ_X`.
    pub fn components(&self, x: GeneratorSet) -> Vec<GeneratorSet> {
        crate::coxeter::graph_components(&self.spec, x)
    }

    pub fn is_irreducible(&self, x: GeneratorSet) -> bool {
        !x.is_empty() && self.components(x).len() == 1
    }

    /// `e ∈ {1, 2}` with `z_X = Δ_X^e`: 1 exactly when `Δ_X` is central in `A_X`.
    pub fn central_exponent(&self, x: GeneratorSet) -> i64 {
        let perm = self.delta_permutation(x);
        if x.iter().all(|s| perm[s.index()] == s) {
            1
        } else {
            2
        }
    }

    fn compute_longest(&self, x: GeneratorSet) -> SimpleElement {
        let mut w = self.roots.identity.clone();
        loop {
            let descents = self.roots.right_descents(&w);
            match x.difference(descents).first() {
                Some(s) => w = self.roots.compose(&w, &self.roots.gens[s.index()]),
                None => return SimpleElement::from_perm(self, w),
            }
        }
    }

    fn compute_tau(&self, x: GeneratorSet) -> Vec<GeneratorId> {
        // Δ_X(α_s) = -α_{τ_X(s)} for s in X
        let d = &self.deltas[x.0 as usize].perm;
        let npos = self.roots.npos;
        self.spec
            .generators()
            .map(|s| {
                if x.contains(s) {
                    let img = d[s.index()] as usize;
                    debug_assert!(img >= npos && img - npos < self.rank());
                    GeneratorId((img - npos) as u8)
                } else {
                    s
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: u8) -> GeneratorId {
        GeneratorId(i)
    }

    #[test]
    fn delta_lengths() {
        let a2 = group("A2").unwrap();
        assert_eq!(a2.delta_simple().len(), 3);
        let b2 = group("I2(4)").unwrap();
        assert_eq!(b2.delta_simple().len(), 4);
        assert_eq!(b2.simple_word(b2.delta_simple()), vec![g(0), g(1), g(0), g(1)]);
        let a1 = group("A1").unwrap();
        assert_eq!(a1.delta_simple(), &a1.generator(g(0)));
        assert!(a1.delta_is_central());
        for (t, ty) in [("A4", ComponentType::A(4)), ("B3", ComponentType::B(3)), ("D4", ComponentType::D(4)), ("F4", ComponentType::F4), ("H3", ComponentType::H(3))] {
            let ctx = group(t).unwrap();
            assert_eq!(ctx.delta_simple().len(), ty.longest_length(), "{t}");
        }
    }

    #[test]
    fn longest_elements_of_subsets() {
        let a4 = group("A4").unwrap();
        let x12 = GeneratorSet::from_indices([0, 1]);
        assert_eq!(a4.simple_word(a4.longest_element(x12)), vec![g(0), g(1), g(0)]);
        let x123 = GeneratorSet::from_indices([0, 1, 2]);
        let d = a4.longest_element(x123);
        assert_eq!(d.len(), 6);
        assert_eq!(Some(d.clone()), a4.simple_from_word(&[g(0), g(1), g(0), g(2), g(1), g(0)]));
        assert_eq!(a4.longest_element(GeneratorSet::singleton(g(3))), &a4.generator(g(3)));
        assert!(a4.longest_element(GeneratorSet::EMPTY).is_identity());
    }

    #[test]
    fn delta_permutations() {
        let a2 = group("A2").unwrap();
        let full = a2.all_generators();
        assert_eq!(a2.delta_permutation(full), vec![g(1), g(0)]);
        assert_eq!(a2.central_exponent(full), 2);
        let b2 = group("I2(4)").unwrap();
        assert_eq!(b2.delta_permutation(b2.all_generators()), vec![g(0), g(1)]);
        assert_eq!(b2.central_exponent(b2.all_generators()), 1);
        assert_eq!(a2.central_exponent(GeneratorSet::singleton(g(0))), 1);
    }

    #[test]
    fn components_of_subsets() {
        let a4 = group("A4").unwrap();
        assert_eq!(
            a4.components(GeneratorSet::from_indices([0, 1, 3])),
            vec![GeneratorSet::from_indices([0, 1]), GeneratorSet::from_indices([3])]
        );
        assert_eq!(a4.components(GeneratorSet::from_indices([0, 2])).len(), 2);
        assert_eq!(a4.components(a4.all_generators()), vec![a4.all_generators()]);
    }

    #[test]
    fn rank_cap_and_rejection() {
        assert!(matches!(
            build_context_with_cap(CoxeterSpec::parse("A5").unwrap(), 4),
            Err(Error::RankTooLarge { .. })
        ));
        let tri = CoxeterSpec::from_matrix(vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert!(matches!(build_context(tri), Err(Error::NonSphericalType(_))));
        for t in ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "F4", "H3", "I2(5)", "I2(8)"] {
            assert!(group(t).is_ok(), "{t}");
        }
    }
}
