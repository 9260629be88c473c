use artin_core::conjugacy::{compute_summit_graph, Summit, SummitKind};
use artin_core::garside::{GarsideStructure, GroupElement, Letter};
use artin_core::{group, GeneratorId, GeneratorSet, Group};
use proptest::prelude::*;

fn arb_word(rank: u8, len: usize) -> impl Strategy<Value = Vec<(u8, bool)>> {
    prop::collection::vec((0..rank, any::<bool>()), 1..=len)
}

fn element(ctx: &Group, w: &[(u8, bool)]) -> GroupElement {
    let letters: Vec<Letter> = w.iter().map(|&(g, inv)| Letter { generator: GeneratorId(g), inverse: inv }).collect();
    GroupElement::from_letters(ctx, &letters)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn tau_commutes_with_cycling_and_decycling(w in arb_word(3, 8), n in 1u32..=2) {
        let ctx = group("A3").unwrap();
        let s = GarsideStructure::new(&ctx, n);
        let a = element(&ctx, &w);
        prop_assert_eq!(s.tau(&s.cycling(&a).0), s.cycling(&s.tau(&a)).0);
        prop_assert_eq!(s.tau(&s.decycling(&a).0), s.decycling(&s.tau(&a)).0);
    }

    #[test]
    fn conjugators_conjugate(w in arb_word(3, 8), n in 1u32..=2) {
        let ctx = group("A3").unwrap();
        let s = GarsideStructure::new(&ctx, n);
        let a = element(&ctx, &w);
        for (r, c) in [s.cycling(&a), s.decycling(&a), s.twisted_cycling(&a)] {
            prop_assert_eq!(a.conjugate(&c), r);
        }
        prop_assert_eq!(s.tau(&s.twisted_cycling(&a).0), s.cycling(&a).0);
    }

    #[test]
    fn decycling_is_inverse_twisted_cycling_of_the_inverse(w in arb_word(3, 8), n in 1u32..=2) {
        let ctx = group("A3").unwrap();
        let s = GarsideStructure::new(&ctx, n);
        let a = element(&ctx, &w);
        prop_assert_eq!(s.decycling(&a).0, s.twisted_cycling(&a.inverse()).0.inverse());
    }

    #[test]
    fn cycling_never_raises_the_canonical_length(w in arb_word(2, 10)) {
        let ctx = group("I2(5)").unwrap();
        let s = GarsideStructure::classical(&ctx);
        let a = element(&ctx, &w);
        let (c, _) = s.cycling(&a);
        prop_assert!(s.inf(&c) >= s.inf(&a));
        prop_assert!(s.sup(&s.decycling(&a).0) <= s.sup(&a));
    }

    #[test]
    fn positive_elements_of_a_standard_parabolic_cycle_inside_it(w in prop::collection::vec(0u8..2, 1..8)) {
        let ctx = group("A3").unwrap();
        let x = GeneratorSet::from_indices([0, 1]);
        let s = GarsideStructure::classical(&ctx);
        let a = element(&ctx, &w.iter().map(|&g| (g, false)).collect::<Vec<_>>());
        for (r, c) in [s.cycling(&a), s.decycling(&a)] {
            prop_assert!(r.support().is_subset(x));
            prop_assert!(c.support().is_subset(x));
        }
    }
}

fn sample(ctx: &Group) -> Vec<GroupElement> {
    ["s1", "s1 s2", "s1 s2^-1", "s1 s2 s3", "s1^-1 s3 s2", "s2 s2 s1^-1 s3", "D s1", "D^-1 s3 s2 s1 s1"]
        .iter()
        .filter_map(|w| GroupElement::parse(ctx, w).ok())
        .collect()
}

#[test]
fn rsss_is_closed_under_inversion() {
    let ctx = group("A3").unwrap();
    for n in [1, 2] {
        let s = GarsideStructure::new(&ctx, n);
        for a in sample(&ctx) {
            let g = compute_summit_graph(&a, SummitKind::Rsss, &s, 4, 10_000).unwrap();
            let (inv, _, _) = Summit::with_seed(SummitKind::Rsss, &s, &a.inverse(), 4).unwrap();
            for v in &g.vertices {
                assert!(inv.contains(&v.inverse()), "N={n} α={a} v={v}");
            }
            let h = compute_summit_graph(&a.inverse(), SummitKind::Rsss, &s, 4, 10_000).unwrap();
            assert_eq!(g.vertices.len(), h.vertices.len(), "N={n} α={a}");
        }
    }
}

#[test]
fn nested_summit_sets() {
    let ctx = group("A3").unwrap();
    for n in [1, 2] {
        let s = GarsideStructure::new(&ctx, n);
        for a in sample(&ctx) {
            let graphs: Vec<_> = [SummitKind::Sss, SummitKind::Uss, SummitKind::Rsss, SummitKind::Su]
                .into_iter()
                .map(|k| compute_summit_graph(&a, k, &s, 4, 10_000).unwrap())
                .collect();
            for pair in graphs.windows(2) {
                for v in &pair[1].vertices {
                    assert!(pair[0].contains(v), "N={n} α={a} {:?} ⊄ {:?}", pair[1].kind, pair[0].kind);
                }
                assert!(pair[1].vertices.len() <= pair[0].vertices.len());
            }
        }
    }
}

#[test]
fn witnesses_conjugate_alpha_to_each_vertex() {
    let ctx = group("B3").unwrap();
    let s = GarsideStructure::classical(&ctx);
    for a in sample(&ctx) {
        let g = compute_summit_graph(&a, SummitKind::Uss, &s, 4, 10_000).unwrap();
        for (v, w) in g.vertices.iter().zip(&g.witness) {
            assert_eq!(&a.conjugate(w), v);
        }
        for arrow in &g.arrows {
            assert_eq!(g.vertices[arrow.from].conjugate(&arrow.label), g.vertices[arrow.to]);
            assert!(arrow.label.is_positive());
        }
    }
}
