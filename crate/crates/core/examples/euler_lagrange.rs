//! Jet calculus on the Maxwell Lagrangian: the Euler operator gives the
//! field equations, kills total divergences, and total derivatives commute.

use zilch::jet::{divergence, euler_operator, total_derivative, Field, RealPoly};
use zilch::minkowski::MetricConvention;
use zilch::noether::forms::{lagrangian_standard, standard_euler};

fn main() {
    let conv = MetricConvention::default();
    let l = lagrangian_standard(&conv);
    println!("L = {} terms, jet order {}", l.len(), l.max_order());

    for a in 0..4 {
        let e = euler_operator(&l, Field::A, a).unwrap();
        let expected = standard_euler(&conv, a);
        println!("E_A{a}(L) = -F^{a}b_,b: {}", (&e - &expected).is_empty());
    }

    // a divergence of anything first order has no Euler-Lagrange expression
    let w: [RealPoly; 4] = std::array::from_fn(|b| {
        RealPoly::jet(Field::A, b, &[]).mul_ref(&RealPoly::jet(Field::C, (b + 1) % 4, &[b]))
    });
    let div = divergence(&w).unwrap();
    let killed = (0..4).all(|a| {
        [Field::A, Field::C]
            .into_iter()
            .all(|f| euler_operator(&div, f, a).unwrap().is_empty())
    });
    println!("Euler operator of a total divergence vanishes: {killed}");

    let d01 = total_derivative(&total_derivative(&l, 0).unwrap(), 1).unwrap();
    let d10 = total_derivative(&total_derivative(&l, 1).unwrap(), 0).unwrap();
    println!("D_0 D_1 L = D_1 D_0 L: {}", (&d01 - &d10).is_empty());
    println!("\nL =\n{}", l.to_text());
}
