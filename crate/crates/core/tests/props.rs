//! Property tests for the algebraic core: exact-arithmetic laws, the
//! category laws of generalized relations, the finite reductions used by
//! the order layer, and the independent ball-inclusion characterization
//! of the lower reflexivization.

use proptest::prelude::*;

use qdt_core::grel::GRel;
use qdt_core::metric::{classify, reflexivize_lower, reflexivize_upper, BallKind};
use qdt_core::oracle::{generate, named_carrier, random_rel, random_square_table, GenKind};
use qdt_core::order::{is_directed, is_directed_fast};
use qdt_core::xreal::ExtReal;
use qdt_core::{Carrier, Subset};

fn ext_real() -> impl Strategy<Value = ExtReal> {
    prop_oneof![
        3 => (0u64..=12, 1u64..=6).prop_map(|(n, d)| ExtReal::ratio(n, d)),
        1 => Just(ExtReal::zero()),
        1 => Just(ExtReal::infinity()),
    ]
}

fn square(max: usize) -> impl Strategy<Value = GRel> {
    (1..=max, any::<u64>()).prop_map(|(n, seed)| random_square_table(n, seed))
}

fn distance(max: usize) -> impl Strategy<Value = GRel> {
    (1..=max, any::<u64>()).prop_map(|(n, seed)| generate(GenKind::Distance, n, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn addition_monoid_laws(a in ext_real(), b in ext_real(), c in ext_real()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &ExtReal::zero(), a.clone());
    }

    #[test]
    fn truncated_subtraction_laws(a in ext_real(), b in ext_real()) {
        prop_assert_eq!(a.truncated_sub(&a), ExtReal::zero());
        if b.is_finite() {
            prop_assert!(&a.truncated_sub(&b) + &b >= a);
        }
    }

    #[test]
    fn order_is_compatible_with_addition(a in ext_real(), b in ext_real(), c in ext_real()) {
        if a <= b {
            prop_assert!(&a + &c <= &b + &c);
        }
    }

    #[test]
    fn composition_is_associative_and_monotone(
        sizes in (1usize..=4, 1usize..=4, 1usize..=4, 1usize..=4),
        seeds in (any::<u64>(), any::<u64>(), any::<u64>(), any::<u64>()),
    ) {
        let (w, x, y, z) = sizes;
        let cw = named_carrier("w", w);
        let cx = named_carrier("x", x);
        let cy = named_carrier("y", y);
        let cz = named_carrier("z", z);
        let a = random_rel(&cw, &cx, seeds.0);
        let b = random_rel(&cx, &cy, seeds.1);
        let c = random_rel(&cy, &cz, seeds.2);
        prop_assert_eq!(
            a.compose(&b).unwrap().compose(&c).unwrap(),
            a.compose(&b.compose(&c).unwrap()).unwrap()
        );
        // monotonicity: shrinking one factor shrinks the composite
        let a2 = random_rel(&cw, &cx, seeds.3);
        let smaller = a.meet(&a2).unwrap();
        prop_assert!(smaller.compose(&b).unwrap().leq(&a.compose(&b).unwrap()));
        // the involution reverses composition
        prop_assert_eq!(
            a.compose(&b).unwrap().opposite(),
            b.opposite().compose(&a.opposite()).unwrap()
        );
    }

    #[test]
    fn kan_adjunction_chain(
        sizes in (1usize..=4, 1usize..=4, 1usize..=4),
        seeds in (any::<u64>(), any::<u64>(), any::<u64>()),
    ) {
        let (x, y, z) = sizes;
        let cx = named_carrier("x", x);
        let cy = named_carrier("y", y);
        let cz = named_carrier("z", z);
        let f = random_rel(&cx, &cy, seeds.0);
        let d = random_rel(&cx, &cz, seeds.1);
        let e = random_rel(&cz, &cy, seeds.2);
        let right = f.kan_right(&e).unwrap().leq(&d);
        let middle = f.leq(&d.compose(&e).unwrap());
        let left = d.kan_left(&f).unwrap().leq(&e);
        prop_assert_eq!(right, middle);
        prop_assert_eq!(middle, left);
    }

    #[test]
    fn division_function_dominates(f in square(4), seed in any::<u64>()) {
        // f(x) ≤ (f/g)(g(x)) with (f/g)(r) = sup over g-sublevel of f
        let g = random_square_table(f.source().len(), seed);
        for x in f.source().indices() {
            for y in f.source().indices() {
                let fx = f.at(x, y);
                let gx = g.at(x, y);
                let sublevel_sup = ExtReal::sup(
                    f.cells().filter(|(i, j, _)| g.at(*i, *j) <= gx).map(|(_, _, v)| v),
                );
                prop_assert!(*fx <= sublevel_sup);
            }
        }
    }

    #[test]
    fn uniformity_composition_reduces_to_zero_relation(d in square(4), seed in any::<u64>()) {
        // e ∘ Φᵈ = sup_n (e ∘ n·d): the scaled composites increase toward
        // e ∘ ≤ᵈ and agree with it on every finite cell once n·minpos(d)
        // clears every finite value of e
        let e = random_square_table(d.source().len(), seed);
        let reduced = e.compose(&d.zero_relation()).unwrap();
        let scale = |k: u64| -> GRel {
            GRel::from_fn(d.source().clone(), d.source().clone(), |i, j| {
                match d.at(i, j).as_rational() {
                    Some(r) => ExtReal::from_rational(
                        r * num::BigRational::from_integer(num::BigInt::from(k)),
                    )
                    .unwrap(),
                    None => ExtReal::infinity(),
                }
            })
        };
        let min_pos = ExtReal::inf(
            d.cells().map(|(_, _, v)| v.clone()).filter(|v| !v.is_zero() && v.is_finite()),
        );
        let max_fin = ExtReal::sup(e.cells().map(|(_, _, v)| v.clone()).filter(|v| v.is_finite()));
        let n_big: u64 = match (min_pos.as_rational(), max_fin.as_rational()) {
            (Some(p), Some(m)) => {
                let ratio = m / p;
                (ratio.to_integer().try_into().unwrap_or(0u64)) + 2
            }
            _ => 2,
        };
        let small = e.compose(&scale(1)).unwrap();
        let mid = e.compose(&scale(2)).unwrap();
        let big = e.compose(&scale(n_big)).unwrap();
        prop_assert!(small.leq(&mid));
        prop_assert!(mid.leq(&big));
        prop_assert!(big.leq(&reduced));
        for (i, j, v) in reduced.cells() {
            if v.is_finite() {
                prop_assert_eq!(big.at(i, j), v);
            }
        }
    }

    #[test]
    fn zero_relation_is_lax_functorial(d in square(4), seed in any::<u64>()) {
        let e = random_square_table(d.source().len(), seed);
        let composed_then_zero = d.compose(&e).unwrap().zero_relation();
        let zero_then_composed = d.zero_relation().compose(&e.zero_relation()).unwrap();
        prop_assert!(composed_then_zero.leq(&zero_then_composed));
    }

    #[test]
    fn reflexivizations_are_hemimetrics(d in square(4)) {
        let up = reflexivize_upper(&d).unwrap();
        let low = reflexivize_lower(&d).unwrap();
        prop_assert!(classify(&up).unwrap().is_hemimetric);
        prop_assert!(classify(&low).unwrap().is_hemimetric);
    }

    #[test]
    fn directedness_criteria_agree(d in square(5)) {
        for y in d.source().powerset() {
            prop_assert_eq!(is_directed(&y, &d).unwrap(), is_directed_fast(&y, &d));
        }
    }

    #[test]
    fn lower_reflexivization_matches_ball_inclusion(d in square(4)) {
        // x d̲ y is the least ε such that every lower ball of x sits in
        // the ε-enlarged lower ball of y, over the finite candidate set of
        // truncated value differences; the infimum is attained there
        let lower = reflexivize_lower(&d).unwrap();
        let carrier = d.source();
        let values: Vec<ExtReal> = {
            let mut v: Vec<ExtReal> = d.cells().map(|(_, _, c)| c.clone()).collect();
            v.push(ExtReal::zero());
            v.sort();
            v.dedup();
            v
        };
        for x in carrier.indices() {
            for y in carrier.indices() {
                let mut candidates: Vec<ExtReal> = Vec::new();
                for z in carrier.indices() {
                    candidates.push(d.at(z, y).truncated_sub(d.at(z, x)));
                }
                candidates.sort();
                candidates.dedup();
                let included = |eps: &ExtReal| -> bool {
                    let mut radii: Vec<ExtReal> = Vec::new();
                    for v in &values {
                        if v.is_finite() {
                            radii.push(v.truncated_sub(eps));
                            radii.push(&(v.clone()) + &ExtReal::from_int(1));
                        }
                    }
                    radii.push(ExtReal::infinity());
                    radii.iter().all(|r| {
                        let bx = qdt_core::metric::ball(&d, x, r, BallKind::Lower);
                        let enlarged = &r.clone() + eps;
                        let by = qdt_core::metric::ball(&d, y, &enlarged, BallKind::Lower);
                        bx.is_subset_of(&by)
                    })
                };
                let attained = ExtReal::inf(candidates.iter().filter(|eps| included(eps)));
                prop_assert_eq!(&attained, lower.at(x, y));
            }
        }
    }

    #[test]
    fn quotient_of_a_hemimetric_is_a_quasimetric(seed in any::<u64>(), n in 1usize..=4) {
        let d = generate(GenKind::Hemimetric, n, seed).unwrap();
        let (q, map) = qdt_core::metric::quotient_equivalent(&d).unwrap();
        prop_assert!(classify(&q).unwrap().is_quasimetric);
        prop_assert_eq!(map.len(), n);
    }

    #[test]
    fn distances_compose_atop_their_closure(d in distance(4)) {
        prop_assert!(d.leq(&d.compose(&d).unwrap()));
        // and every distance is its own min-plus closure
        prop_assert_eq!(d.meet(&d.compose(&d).unwrap()).unwrap(), d);
    }

    #[test]
    fn json_round_trips(d in square(4)) {
        let s = qdt_core::json::grel_to_string(&d);
        prop_assert_eq!(qdt_core::json::grel_from_str(&s).unwrap(), d);
    }

    #[test]
    fn restriction_is_a_sub_table(d in square(4), bits in any::<u64>()) {
        let n = d.source().len();
        let keep = Subset::from_bits(bits & ((1 << n) - 1));
        if !keep.is_empty() {
            let r = d.restrict(&keep).unwrap();
            let kept: Vec<usize> = keep.iter().collect();
            for (i, j, v) in r.cells() {
                prop_assert_eq!(v, d.at(kept[i], kept[j]));
            }
        }
    }
}

#[test]
fn carrier_labels_stay_unique_under_quotient() {
    let c = Carrier::new(["a", "b", "c"]).unwrap();
    let d = GRel::zero_rel(c);
    let (q, map) = qdt_core::metric::quotient_equivalent(&d).unwrap();
    assert_eq!(q.source().len(), 1);
    assert_eq!(map, vec![0, 0, 0]);
}
