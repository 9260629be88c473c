use artin_core::garside::GroupElement;
use artin_core::oracle::{Ball, EnumeratedParabolics};
use artin_core::parabolic::{parabolic_closure, ParabolicSubgroup};
use artin_core::{group, GeneratorSet, Group};

fn subgroups(ctx: &Group, radius: usize) -> Vec<ParabolicSubgroup> {
    let mut out = Vec::new();
    for g in Ball::new(ctx, radius).unwrap().elements {
        for x in ctx.all_generators().subsets() {
            let p = ParabolicSubgroup::new(&g, x);
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

#[test]
fn closure_contains_the_element_and_is_stable_under_powers() {
    for t in ["A3", "B3"] {
        let ctx = group(t).unwrap();
        for a in Ball::new(&ctx, 3).unwrap().elements {
            let p = parabolic_closure(&a).unwrap();
            assert!(p.contains_element(&a), "{t} {a}");
            for m in [-2, -1, 2, 3] {
                assert_eq!(parabolic_closure(&a.pow(m)).unwrap(), p, "{t} α={a} m={m}");
            }
        }
    }
}

#[test]
fn closure_of_a_central_element_is_its_subgroup() {
    for t in ["A3", "B3", "A2xA1"] {
        let ctx = group(t).unwrap();
        for p in subgroups(&ctx, 2) {
            assert_eq!(parabolic_closure(p.z()).unwrap(), p, "{t} {p}");
        }
    }
}

#[test]
fn standardizer_sends_the_subgroup_to_its_base() {
    let ctx = group("A4").unwrap();
    for p in subgroups(&ctx, 2) {
        let (b, y) = p.minimal_standardizer();
        assert!(b.is_positive());
        assert_eq!(p.conjugated(&b), ParabolicSubgroup::standard(&ctx, y));
        for g in p.generators() {
            assert!(p.contains_element(&g));
        }
    }
}

#[test]
fn normalizer_is_the_centralizer_of_z() {
    let ctx = group("A3").unwrap();
    let ball = Ball::new(&ctx, 3).unwrap().elements;
    for p in subgroups(&ctx, 1) {
        for x in &ball {
            assert_eq!(p.conjugated(x) == p, p.z().commutes_with(x), "{p} x={x}");
        }
    }
}

#[test]
fn commuting_elements_normalize_each_others_closures() {
    let ctx = group("A3").unwrap();
    let ball = Ball::new(&ctx, 3).unwrap().elements;
    for a in ball.iter().step_by(5) {
        let p = parabolic_closure(a).unwrap();
        for b in &ball {
            if a.commutes_with(b) {
                assert_eq!(p.conjugated(b), p, "α={a} β={b}");
            }
            assert_eq!(parabolic_closure(&a.conjugate(b)).unwrap(), p.conjugated(b));
        }
    }
}

#[test]
fn closure_agrees_with_enumeration() {
    for (t, r) in [("A2", 4), ("I2(5)", 4), ("A3", 3)] {
        let ctx = group(t).unwrap();
        let oracle = EnumeratedParabolics::new(&ctx, 3).unwrap();
        for a in Ball::new(&ctx, r).unwrap().elements {
            assert_eq!(parabolic_closure(&a).unwrap(), oracle.closure(&a).unwrap(), "{t} {a}");
        }
    }
}

#[test]
fn json_round_trip() {
    let ctx = group("B3").unwrap();
    for p in subgroups(&ctx, 2) {
        assert_eq!(ParabolicSubgroup::from_json(&ctx, &p.to_json()).unwrap(), p);
    }
    let x = GeneratorSet::from_indices([0, 2]);
    assert!(!ParabolicSubgroup::standard(&ctx, x).is_irreducible());
    assert!(ParabolicSubgroup::new(&GroupElement::parse(&ctx, "s2").unwrap(), x).is_proper());
}
