use proptest::prelude::*;

use zilch::jet::{divergence, euler_operator, total_derivative, Field, RealPoly};
use zilch::minkowski::MetricConvention;
use zilch::noether::forms::lagrangian_standard;
use zilch::ring::q;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::A), Just(Field::C)]
}

/// A jet coordinate of order at most `max`.
fn factor(max: usize) -> impl Strategy<Value = RealPoly> {
    (field(), 0..4usize, prop::collection::vec(0..4usize, 0..=max)).prop_map(|(f, c, d)| RealPoly::jet(f, c, &d))
}

/// Sums of up to four monomials of degree one or two.
fn poly(max: usize) -> impl Strategy<Value = RealPoly> {
    let term = (-3i64..=3, prop::collection::vec(factor(max), 1..=2)).prop_map(|(k, fs)| {
        fs.into_iter().fold(RealPoly::constant(q(k, 1)), |acc, f| acc.mul_ref(&f))
    });
    prop::collection::vec(term, 1..=4).prop_map(|ts| ts.into_iter().fold(RealPoly::new(), |acc, t| &acc + &t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn total_derivatives_commute(p in poly(2), a in 0..4usize, b in 0..4usize) {
        let ab = total_derivative(&total_derivative(&p, a).unwrap(), b).unwrap();
        let ba = total_derivative(&total_derivative(&p, b).unwrap(), a).unwrap();
        prop_assert!((&ab - &ba).is_empty());
    }

    #[test]
    fn total_derivative_obeys_leibniz(p in poly(1), r in poly(1), a in 0..4usize) {
        let lhs = total_derivative(&p.mul_ref(&r), a).unwrap();
        let rhs = &total_derivative(&p, a).unwrap().mul_ref(&r) + &p.mul_ref(&total_derivative(&r, a).unwrap());
        prop_assert!((&lhs - &rhs).is_empty());
    }

    #[test]
    fn euler_operator_kills_divergences(w0 in poly(1), w1 in poly(1), w2 in poly(1), w3 in poly(1)) {
        let div = divergence(&[w0, w1, w2, w3]).unwrap();
        for f in [Field::A, Field::C] {
            for c in 0..4 {
                prop_assert!(euler_operator(&div, f, c).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn euler_operator_is_linear(p in poly(1), r in poly(1), k in -4i64..=4, c in 0..4usize) {
        let lhs = euler_operator(&(&p + &r.scale_by(&q(k, 1))), Field::A, c).unwrap();
        let rhs = &euler_operator(&p, Field::A, c).unwrap() + &euler_operator(&r, Field::A, c).unwrap().scale_by(&q(k, 1));
        prop_assert!((&lhs - &rhs).is_empty());
    }
}

#[test]
fn maxwell_lagrangian_text_is_stable() {
    let golden = include_str!("golden/lagrangian_standard.txt");
    assert_eq!(lagrangian_standard(&MetricConvention::default()).to_text(), golden);
}
