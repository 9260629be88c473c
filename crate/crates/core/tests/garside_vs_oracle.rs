use artin_core::garside::{GarsideStructure, GroupElement};
use artin_core::oracle::{self, Ball, Order};
use artin_core::{group, GeneratorSet, Group};
use proptest::prelude::*;

fn partners(ctx: &Group) -> Vec<GroupElement> {
    Ball::new(ctx, 2).unwrap().elements
}

#[test]
fn normal_forms_match_the_greedy_oracle() {
    for (t, r) in [("A2", 4), ("I2(4)", 3), ("A3", 3)] {
        let ctx = group(t).unwrap();
        let simples = oracle::enumerate_simples(&ctx).unwrap();
        for (e, w) in Ball::new(&ctx, r).unwrap().iter() {
            let (p, f) = oracle::brute_normal_form(&ctx, w, &simples);
            assert_eq!(p, e.delta_power(), "{t} {e}");
            let ours: Vec<GroupElement> = e.factors().iter().map(|a| GroupElement::from_simple(&ctx, a.clone())).collect();
            assert_eq!(f, ours, "{t} {e}");
            assert_eq!(oracle::signed_length(w), oracle::signed_length(&e.to_letters()));
            assert_eq!(oracle::type_a_permutation(&ctx, w), oracle::type_a_permutation(&ctx, &e.to_letters()));
        }
    }
}

#[test]
fn lattice_operations_match_brute_force() {
    for (t, r) in [("A2", 3), ("I2(4)", 2), ("A3", 2)] {
        let ctx = group(t).unwrap();
        let ps = partners(&ctx);
        for u in Ball::new(&ctx, r).unwrap().elements.iter().step_by(3) {
            for v in ps.iter().step_by(2) {
                for order in [Order::Prefix, Order::Suffix] {
                    let (m, j) = match order {
                        Order::Prefix => (u.meet_prefix(v).unwrap(), u.join_prefix(v).unwrap()),
                        Order::Suffix => (u.meet_suffix(v).unwrap(), u.join_suffix(v).unwrap()),
                    };
                    assert_eq!(m, oracle::brute_meet(u, v, order).unwrap(), "{t} meet {order:?} {u} {v}");
                    assert_eq!(j, oracle::brute_join(u, v, order).unwrap(), "{t} join {order:?} {u} {v}");
                }
            }
        }
    }
}

#[test]
fn mixed_forms_match_brute_force() {
    for (t, r) in [("A2", 4), ("I2(4)", 3), ("A3", 3)] {
        let ctx = group(t).unwrap();
        for u in Ball::new(&ctx, r).unwrap().elements {
            let np = u.np_normal_form();
            assert_eq!((np.negative.clone(), np.positive.clone()), oracle::brute_np(&u).unwrap(), "{t} {u}");
            assert_eq!(np.element(), u);
            let pn = u.pn_normal_form();
            assert_eq!((pn.positive.clone(), pn.negative.clone()), oracle::brute_pn(&u).unwrap(), "{t} {u}");
            assert_eq!(pn.element(), u);
        }
    }
}

#[test]
fn infimum_and_supremum_are_extremal() {
    let ctx = group("A3").unwrap();
    for u in Ball::new(&ctx, 3).unwrap().elements {
        let d = |k: i64| GroupElement::delta_pow(&ctx, k);
        assert!(d(u.inf()).is_prefix_of(&u));
        assert!(!d(u.inf() + 1).is_prefix_of(&u));
        assert!(u.is_prefix_of(&d(u.sup())));
        assert!(!u.is_prefix_of(&d(u.sup() - 1)));
    }
}

#[test]
fn parabolic_np_forms_agree_with_the_subgroup() {
    let a4 = group("A4").unwrap();
    let a3 = group("A3").unwrap();
    let x = GeneratorSet::from_indices([0, 1, 2]);
    for (e, w) in Ball::new(&a3, 4).unwrap().iter() {
        let big = GroupElement::from_letters(&a4, w);
        assert!(big.support().is_subset(x));
        let small_np = e.np_normal_form();
        let big_np = big.np_normal_form();
        assert_eq!(small_np.negative.positive_word(), big_np.negative.positive_word());
        assert_eq!(small_np.positive.positive_word(), big_np.positive.positive_word());
    }
}

#[test]
fn regrouped_np_parts_are_simple() {
    let ctx = group("A3").unwrap();
    for u in Ball::new(&ctx, 4).unwrap().elements {
        let np = u.np_normal_form();
        let n = np.negative.sup().max(np.positive.sup()).max(1) as u32;
        let s = GarsideStructure::new(&ctx, n);
        assert!(s.is_simple(&np.negative) && s.is_simple(&np.positive));
    }
}

#[test]
fn domino_pattern_of_delta_x_powers() {
    for t in ["A3", "I2(4)"] {
        let ctx = group(t).unwrap();
        for x in ctx.all_generators().subsets() {
            if x.is_empty() {
                continue;
            }
            let dx = GroupElement::from_simple(&ctx, ctx.longest_element(x).clone());
            for alpha in Ball::positive(&ctx, 4).unwrap().elements {
                let r = alpha.sup();
                for m in (r + 1)..=8 {
                    let e = dx.pow(m).mul(&alpha);
                    let nf = GarsideStructure::classical(&ctx).normal_form(&e);
                    let mut all: Vec<GroupElement> =
                        (0..nf.delta_power).map(|_| GroupElement::delta(&ctx)).collect();
                    all.extend(nf.factors.iter().cloned());
                    for i in (r + 1)..m {
                        let xi = &all[(i - 1) as usize];
                        let y = xi.support();
                        assert_eq!(
                            *xi,
                            GroupElement::from_simple(&ctx, ctx.longest_element(y).clone()),
                            "{t} X={x} α={alpha} m={m} i={i}"
                        );
                    }
                }
            }
        }
    }
}

fn arb_word(rank: usize, len: usize) -> impl Strategy<Value = Vec<(u8, bool)>> {
    prop::collection::vec((0..rank as u8, any::<bool>()), 0..=len)
}

fn element(ctx: &Group, w: &[(u8, bool)]) -> GroupElement {
    let letters: Vec<_> = w
        .iter()
        .map(|&(g, inv)| artin_core::garside::Letter { generator: artin_core::GeneratorId(g), inverse: inv })
        .collect();
    GroupElement::from_letters(ctx, &letters)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lattice_laws(a in arb_word(3, 6), b in arb_word(3, 6), c in arb_word(3, 6)) {
        let ctx = group("A3").unwrap();
        let (a, b, c) = (element(&ctx, &a), element(&ctx, &b), element(&ctx, &c));
        let m = |x: &GroupElement, y: &GroupElement| x.meet_prefix(y).unwrap();
        let j = |x: &GroupElement, y: &GroupElement| x.join_prefix(y).unwrap();
        prop_assert_eq!(m(&a, &b), m(&b, &a));
        prop_assert_eq!(j(&a, &b), j(&b, &a));
        prop_assert_eq!(m(&m(&a, &b), &c), m(&a, &m(&b, &c)));
        prop_assert_eq!(j(&j(&a, &b), &c), j(&a, &j(&b, &c)));
        prop_assert_eq!(m(&a, &a), a.clone());
        prop_assert!(m(&a, &b).is_prefix_of(&a));
        prop_assert!(a.is_prefix_of(&j(&a, &b)));
        prop_assert_eq!(m(&a, &j(&a, &b)), a.clone());
        let ms = a.meet_suffix(&b).unwrap();
        prop_assert!(a.has_suffix(&ms) && b.has_suffix(&ms));
        prop_assert_eq!(a.join_suffix(&b).unwrap(), b.join_suffix(&a).unwrap());
    }

    #[test]
    fn normal_form_is_canonical(w in arb_word(2, 10)) {
        let ctx = group("I2(4)").unwrap();
        let e = element(&ctx, &w);
        let again = GroupElement::from_letters(&ctx, &e.to_letters());
        prop_assert_eq!(&again, &e);
        let shuffled = GroupElement::from_parts(&ctx, e.delta_power(), e.factors().iter().cloned());
        prop_assert_eq!(&shuffled, &e);
        let reparsed = GroupElement::parse(&ctx, &e.to_string()).unwrap();
        prop_assert_eq!(reparsed, e);
    }
}
