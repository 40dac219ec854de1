//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//!
//! Tolerances and runtime limits are pinned below. Runtimes are wall-clock
//! for the criterion's own work in the test profile.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zilch::catalog::{
    random_events, random_jets, AnalyticSolution, DualityRotation, Gauge, PolarizationKind, SolutionKind, SolutionSpec,
};
use zilch::minkowski::{MetricConvention, Rank3};
use zilch::noether::{identity_suite, Coefficients, IdentityReport, Mutation, ZilchForm};
use zilch::numeric::{
    contraction_decomposition, divergence_residuals_analytic, divergence_residual_grid, divergence_residual_sample,
    eval_decomposition, eval_zilch, optical_chirality, zilch_scale, DecompositionVariant, GridSpec,
};
use zilch::ring::q;

const SYMBOLIC_LIMIT: Duration = Duration::from_secs(30);
const CONSERVATION_LIMIT: Duration = Duration::from_secs(10);
const GRID_LIMIT: Duration = Duration::from_secs(60);

const ALGEBRAIC_TOL: f64 = 1e-12;
const CONSERVATION_TOL: f64 = 1e-10;
const NEGATIVE_CONTROL_MIN: f64 = 1e-2;
const CONTRACTION_TOL: f64 = 1e-11;
const SHELL_VARIANT_TOL: f64 = 1e-10;
const CHIRALITY_TOL: f64 = 1e-12;
const DUALITY_TOL: f64 = 1e-12;
const ORDER_WINDOW: (f64, f64) = (3.5, 4.5);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

struct Suites {
    conventions: [MetricConvention; 2],
    reports: Vec<Vec<IdentityReport>>,
    elapsed: Duration,
}

impl Suites {
    fn run() -> Self {
        let conventions = MetricConvention::all();
        let start = Instant::now();
        let reports = conventions.iter().map(|c| identity_suite(c, &Coefficients::default())).collect();
        Suites { conventions, reports, elapsed: start.elapsed() }
    }

    /// Every named identity exactly zero in both conventions, with the
    /// expected number of index assignments.
    fn all_zero(&self, names: &[(&str, usize)]) -> Outcome {
        let mut bad = Vec::new();
        for (conv, reports) in self.conventions.iter().zip(&self.reports) {
            for (name, assignments) in names {
                match reports.iter().find(|r| r.name == *name) {
                    Some(r) if r.residual_zero && r.assignments == *assignments => {}
                    Some(r) => bad.push(format!("{name} [{conv}]: zero={} over {}", r.residual_zero, r.assignments)),
                    None => bad.push(format!("{name} missing")),
                }
            }
        }
        let list = names.iter().map(|(n, k)| format!("{n} x{k}")).collect::<Vec<_>>().join(", ");
        if bad.is_empty() {
            outcome(true, format!("exact zero in +--- and -+++: {list}"))
        } else {
            outcome(false, bad.join("; "))
        }
    }
}

fn within(limit: Duration, t: Duration, o: Outcome) -> Outcome {
    let pass = o.pass && t <= limit;
    outcome(pass, format!("{} ({:.2} s, limit {} s)", o.detail, t.as_secs_f64(), limit.as_secs()))
}

fn spec(kind: SolutionKind) -> SolutionSpec {
    SolutionSpec::new(kind)
}

/// Every catalog entry, named.
fn catalog(conv: &MetricConvention) -> Vec<(&'static str, AnalyticSolution)> {
    let mut counter = spec(SolutionKind::Superposition);
    counter.components = vec![
        SolutionSpec::circular(1),
        SolutionSpec::circular(1).with_direction([0.0, 0.0, -1.0], [1.0, 0.0, 0.0]).with_amplitude(0.8),
    ];
    let mut circular_standing = spec(SolutionKind::StandingWave);
    circular_standing.polarization_kind = PolarizationKind::Circular;
    [
        ("linear", SolutionSpec::linear()),
        ("circular+", SolutionSpec::circular(1)),
        ("circular-", SolutionSpec::circular(-1).with_direction([1.0, 2.0, 2.0], [2.0, -2.0, 1.0])),
        ("linear-lorenz", SolutionSpec::linear().with_gauge(Gauge::Lorenz).with_amplitude(0.5)),
        ("standing", spec(SolutionKind::StandingWave)),
        ("standing-circular", circular_standing),
        ("counter-propagating", counter),
    ]
    .into_iter()
    .map(|(n, s)| (n, s.build(conv).expect("catalog entry")))
    .collect()
}

fn c06_algebra(s: &Suites) -> Outcome {
    let exact = s.all_zero(&[("algebra.symmetric", 192), ("algebra.traceless", 12)]);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst: f64 = 0.0;
    for conv in MetricConvention::all() {
        for _ in 0..100 {
            let jets = random_jets(&mut rng, [0.0; 4]);
            for form in [ZilchForm::Kibble1, ZilchForm::Kibble2, ZilchForm::Kibble3] {
                let z = eval_zilch(&jets, form, &conv).unwrap();
                let swapped = Rank3::from_fn(|a, b, c| z.t[b][a][c]);
                worst = worst.max(z.max_abs_diff(&swapped));
                for t in z.trace_first_pair(&conv) {
                    worst = worst.max(t.abs());
                }
            }
        }
    }
    outcome(
        exact.pass && worst <= ALGEBRAIC_TOL,
        format!("{}; numeric on 100 random jets: {worst:.1e} <= {ALGEBRAIC_TOL:.0e}", exact.detail),
    )
}

fn c07_conservation() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut least_control = f64::INFINITY;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for conv in MetricConvention::all() {
        for (i, (_, sol)) in catalog(&conv).into_iter().enumerate() {
            let events = random_events(&mut ChaCha8Rng::seed_from_u64(700 + i as u64), 200, sol.omega);
            for r in divergence_residuals_analytic(&sol, &ZilchForm::ALL, &events).unwrap() {
                worst = worst.max(r);
            }
        }
        for _ in 0..10 {
            let jets = random_jets(&mut rng, [0.0; 4]);
            for form in ZilchForm::ALL {
                least_control = least_control.min(divergence_residual_sample(&jets, form, &conv).unwrap());
            }
        }
    }
    let o = outcome(
        worst <= CONSERVATION_TOL && least_control >= NEGATIVE_CONTROL_MIN,
        format!(
            "7 solutions x 200 events x 8 forms: {worst:.1e} <= {CONSERVATION_TOL:.0e}; random jets: {least_control:.1e} >= {NEGATIVE_CONTROL_MIN:.0e}"
        ),
    );
    within(CONSERVATION_LIMIT, start.elapsed(), o)
}

fn c08_decomposition() -> Outcome {
    let mut contraction: f64 = 0.0;
    let mut variants: f64 = 0.0;
    for conv in MetricConvention::all() {
        for (i, (_, sol)) in catalog(&conv).into_iter().enumerate() {
            for x in random_events(&mut ChaCha8Rng::seed_from_u64(800 + i as u64), 50, sol.omega) {
                let s = sol.sample(x);
                let c = contraction_decomposition(&s, &conv).unwrap();
                let off = eval_decomposition(&s, &conv, DecompositionVariant::OffShell).unwrap();
                let on = eval_decomposition(&s, &conv, DecompositionVariant::OnShellForm).unwrap();
                let scale = zilch_scale(&s);
                contraction = contraction.max(c.max_abs_diff(&off) / scale).max(c.max_abs_diff(&on) / scale);
                variants = variants.max(off.max_abs_diff(&on) / scale);
            }
        }
    }
    // chirality: sign follows helicity, zero for linear polarization
    let mut flips = true;
    let mut linear: f64 = 0.0;
    for conv in MetricConvention::all() {
        let plus = SolutionSpec::circular(1).build(&conv).unwrap();
        let minus = SolutionSpec::circular(-1).build(&conv).unwrap();
        let lin = SolutionSpec::linear().with_direction([1.0, 2.0, 2.0], [2.0, -2.0, 1.0]).build(&conv).unwrap();
        for x in random_events(&mut ChaCha8Rng::seed_from_u64(88), 50, 1.0) {
            let cp = optical_chirality(&plus.sample(x), &conv).unwrap();
            let cm = optical_chirality(&minus.sample(x), &conv).unwrap();
            flips &= cp > 0.0 && cm < 0.0 && (cp + cm).abs() <= CHIRALITY_TOL;
            linear = linear.max(optical_chirality(&lin.sample(x), &conv).unwrap().abs());
        }
    }
    outcome(
        contraction <= CONTRACTION_TOL && variants <= SHELL_VARIANT_TOL && flips && linear <= CHIRALITY_TOL,
        format!(
            "contraction vs formulas {contraction:.1e} <= {CONTRACTION_TOL:.0e}; off vs on shell {variants:.1e} <= {SHELL_VARIANT_TOL:.0e}; helicity flips sign: {flips}; linear {linear:.1e} <= {CHIRALITY_TOL:.0e}"
        ),
    )
}

fn c09_duality(s: &Suites) -> Outcome {
    let exact = s.all_zero(&[("duality.zilch_invariance", 192)]);
    let mut worst: f64 = 0.0;
    for conv in MetricConvention::all() {
        for (i, (_, sol)) in catalog(&conv).into_iter().enumerate() {
            for x in random_events(&mut ChaCha8Rng::seed_from_u64(900 + i as u64), 10, sol.omega) {
                let s = sol.sample(x);
                for t in [q(1, 1), q(2, 1), q(1, 3)] {
                    let r = DualityRotation::Parameter(t).apply(&s);
                    for form in ZilchForm::ALL {
                        let z = eval_zilch(&s, form, &conv).unwrap();
                        worst = worst.max(z.max_abs_diff(&eval_zilch(&r, form, &conv).unwrap()));
                    }
                }
            }
        }
    }
    outcome(
        exact.pass && worst <= DUALITY_TOL,
        format!("{}; numeric, t in {{1, 2, 1/3}}: {worst:.1e} <= {DUALITY_TOL:.0e}", exact.detail),
    )
}

fn c10_grid() -> Outcome {
    let start = Instant::now();
    // a single circular plane wave has constant zilch components (so does
    // a circular standing wave), which central differences reproduce
    // exactly; two crossed circular waves make the components vary
    let mut crossed = spec(SolutionKind::Superposition);
    crossed.components = vec![
        SolutionSpec::circular(1),
        SolutionSpec::circular(1).with_direction([1.0, 2.0, 2.0], [2.0, -2.0, 1.0]).with_amplitude(0.7),
    ];
    let mut orders = Vec::new();
    for conv in MetricConvention::all() {
        let sol = crossed.build(&conv).unwrap();
        let grid = GridSpec::for_frequency(sol.omega, 4);
        let rows = divergence_residual_grid(&sol, ZilchForm::Kibble3, &grid).unwrap();
        orders.extend(rows.iter().filter_map(|r| r.observed_order));
    }
    let ok = orders.len() == 6 && orders.iter().all(|p| (ORDER_WINDOW.0..=ORDER_WINDOW.1).contains(p));
    let shown = orders.iter().map(|p| format!("{p:.3}")).collect::<Vec<_>>().join(", ");
    let o = outcome(ok, format!("crossed circular waves, 4th-order stencil, 3 refinements, both signatures: [{shown}] in [{}, {}]", ORDER_WINDOW.0, ORDER_WINDOW.1));
    within(GRID_LIMIT, start.elapsed(), o)
}

fn c11_mutations() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for m in Mutation::ALL {
        let co = m.apply(Coefficients::default());
        for conv in MetricConvention::all() {
            let reports = identity_suite(&conv, &co);
            let hit = reports.iter().find(|r| r.name == m.target()).map(|r| !r.residual_zero && r.witness.is_some());
            pass &= hit == Some(true);
        }
        lines.push(format!("{} -> {}", m.name(), m.target()));
    }
    outcome(pass, format!("each breaks its target with a witness: {}", lines.join(", ")))
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() {
    let suites = Suites::run();
    let symbolic = |names: &[(&str, usize)]| within(SYMBOLIC_LIMIT, suites.elapsed, suites.all_zero(names));
    let criteria: Vec<Criterion> = vec![
        ("variational symmetry, real", Box::new(|| symbolic(&[("symmetry.real", 10)]))),
        (
            "variational symmetry, complex",
            Box::new(|| symbolic(&[("symmetry.complex", 10), ("symmetry.complex_matches_real", 10), ("symmetry.complex_boundary_matches_real", 64)])),
        ),
        ("characteristic form", Box::new(|| suites.all_zero(&[("characteristic.real", 10), ("characteristic.complex", 10)]))),
        (
            "triviality ledger",
            Box::new(|| {
                suites.all_zero(&[
                    ("trivial.divergence_free", 10),
                    ("trivial.noether_minus_modified", 64),
                    ("trivial.noether_minus_zilch", 64),
                    ("modified.euler_terms", 64),
                ])
            }),
        ),
        (
            "equivalent forms",
            Box::new(|| {
                suites.all_zero(&[
                    ("equivalent.zprime_is_symmetrized_zilch", 64),
                    ("equivalent.zilch_from_zprime", 64),
                    ("lipkin.trivial_term", 64),
                    ("lipkin.difference_is_trivial", 10),
                    ("kibble.first_equals_third", 64),
                    ("kibble.second_equals_third", 64),
                ])
            }),
        ),
        ("symmetric and traceless", Box::new(|| c06_algebra(&suites))),
        ("on-shell conservation", Box::new(c07_conservation)),
        ("time-space decomposition", Box::new(c08_decomposition)),
        ("duality invariance", Box::new(|| c09_duality(&suites))),
        ("grid convergence order", Box::new(c10_grid)),
        ("mutation sensitivity", Box::new(c11_mutations)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += usize::from(!o.pass);
        println!("{} {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
