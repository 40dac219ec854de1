//! The zilch is unchanged by a duality rotation of the field, exactly for a
//! rational rotation parameter and to rounding for an arbitrary angle.

use zilch::catalog::{DualityRotation, SolutionKind, SolutionSpec};
use zilch::minkowski::MetricConvention;
use zilch::noether::ZilchForm;
use zilch::numeric::eval_zilch;
use zilch::ring::q;

fn main() {
    let conv = MetricConvention::default();
    let mut standing = SolutionSpec::new(SolutionKind::StandingWave);
    standing.direction = [0.0, 3.0, 4.0];
    standing.polarization = [1.0, 0.0, 0.0];
    let sol = standing.build(&conv).unwrap();
    let x = [0.4, 0.1, -0.3, 0.2];
    let z = eval_zilch(&sol.sample(x), ZilchForm::DualitySymmetric, &conv).unwrap();
    for r in [
        DualityRotation::Parameter(q(1, 1)),
        DualityRotation::Parameter(q(1, 3)),
        DualityRotation::Parameter(q(-2, 5)),
        DualityRotation::Angle(0.7),
    ] {
        let rotated = sol.rotated(&r).sample(x);
        let zr = eval_zilch(&rotated, ZilchForm::DualitySymmetric, &conv).unwrap();
        let (c, s) = r.cos_sin();
        println!(
            "angle {:+.4} (cos {c:+.4}, sin {s:+.4}): field moved by {:.3}, zilch moved by {:.1e}",
            r.angle(),
            rotated.max_abs_diff(&sol.sample(x)),
            z.max_abs_diff(&zr)
        );
    }
}
