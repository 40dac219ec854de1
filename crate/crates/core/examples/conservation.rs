//! On-shell conservation of every zilch form, with random off-shell jets as
//! a negative control.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zilch::catalog::{random_events, random_jets, SolutionKind, SolutionSpec};
use zilch::minkowski::MetricConvention;
use zilch::noether::ZilchForm;
use zilch::numeric::{divergence_residual_sample, divergence_residuals_analytic};

fn main() {
    let conv = MetricConvention::default();
    let mut crossed = SolutionSpec::new(SolutionKind::Superposition);
    crossed.components = vec![
        SolutionSpec::circular(1),
        SolutionSpec::linear().with_direction([0.0, 1.0, 0.0], [0.0, 0.0, 1.0]).with_amplitude(0.6),
    ];
    let sol = crossed.build(&conv).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let events = random_events(&mut rng, 200, sol.omega);
    let on_shell = divergence_residuals_analytic(&sol, &ZilchForm::ALL, &events).unwrap();

    println!("{:<20} {:>12} {:>12}", "form", "solution", "random jets");
    for (form, r) in ZilchForm::ALL.into_iter().zip(on_shell) {
        let off_shell = (0..10)
            .map(|_| divergence_residual_sample(&random_jets(&mut rng, [0.0; 4]), form, &conv).unwrap())
            .fold(f64::INFINITY, f64::min);
        println!("{:<20} {r:>12.2e} {off_shell:>12.2e}", form.name());
    }
}
