//! Build the catalog solutions in both conventions and check that they
//! satisfy the duality constraint and the field equations.

use zilch::catalog::{constraint_residual, on_shell_residual, Gauge, PolarizationKind, SolutionKind, SolutionSpec};
use zilch::minkowski::MetricConvention;
use zilch::numeric::electric_magnetic;

fn main() {
    let mut standing = SolutionSpec::new(SolutionKind::StandingWave);
    standing.polarization_kind = PolarizationKind::Circular;
    let specs = [
        ("linear", SolutionSpec::linear()),
        ("linear, Lorenz gauge", SolutionSpec::linear().with_gauge(Gauge::Lorenz)),
        ("circular +", SolutionSpec::circular(1)),
        ("circular -, oblique", SolutionSpec::circular(-1).with_direction([1.0, 2.0, 2.0], [2.0, -2.0, 1.0])),
        ("circular standing", standing),
    ];
    let x = [0.3, -0.2, 0.7, 1.1];
    for conv in MetricConvention::all() {
        println!("{conv}");
        for (name, spec) in &specs {
            let sol = spec.build(&conv).unwrap();
            let s = sol.sample(x);
            let em = electric_magnetic(&s, &conv).unwrap();
            println!(
                "  {name:<22} constraint {:.1e}  field equations {:.1e}  E = {:+.3?}  B = {:+.3?}",
                constraint_residual(&s, &conv),
                on_shell_residual(&s, &conv),
                em.e,
                em.b
            );
        }
    }
}
