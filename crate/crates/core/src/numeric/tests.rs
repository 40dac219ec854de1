use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::catalog::{
    apply_zilch_symmetry_step, random_events, random_jets, AnalyticSolution, Gauge, SolutionKind, SolutionSpec,
    ZilchSymmetryStep,
};
use crate::jet::total_derivative;
use crate::catalog::DualityRotation;
use crate::minkowski::{MetricConvention, Rank3};
use crate::noether::forms::{boundary_term, lagrangian_real};
use crate::noether::{Coefficients, Reduction, Strengths, ZilchForm};
use crate::ring::Rational;

const OBLIQUE: ([f64; 3], [f64; 3]) = ([1.0, 2.0, 2.0], [2.0, -2.0, 1.0]);

fn catalog(conv: &MetricConvention) -> Vec<(String, AnalyticSolution)> {
    let mut specs = vec![
        SolutionSpec::linear(),
        SolutionSpec::circular(1),
        SolutionSpec::circular(-1).with_direction(OBLIQUE.0, OBLIQUE.1),
        SolutionSpec::linear().with_gauge(Gauge::Lorenz).with_amplitude(0.7),
        SolutionSpec::new(SolutionKind::StandingWave),
    ];
    let mut sup = SolutionSpec::new(SolutionKind::Superposition);
    sup.components = vec![
        SolutionSpec::circular(1),
        SolutionSpec::linear().with_direction([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]).with_amplitude(0.5),
    ];
    specs.push(sup);
    specs
        .into_iter()
        .map(|s| (format!("{:?}/{:?}", s.kind, s.gauge), s.build(conv).unwrap()))
        .collect()
}

/// Two non-parallel waves, so the bilinear currents vary in space and time.
fn crossed_waves(conv: &MetricConvention) -> AnalyticSolution {
    let mut sup = SolutionSpec::new(SolutionKind::Superposition);
    sup.components = vec![
        SolutionSpec::circular(1).with_direction(OBLIQUE.0, OBLIQUE.1),
        SolutionSpec::linear().with_direction([0.0, 1.0, 0.0], [0.0, 0.0, 1.0]).with_amplitude(0.6),
    ];
    sup.build(conv).unwrap()
}

fn events(n: usize) -> Vec<[f64; 4]> {
    random_events(&mut ChaCha8Rng::seed_from_u64(7), n, 1.0)
}

#[test]
fn circular_wave_fields_have_equal_constant_magnitude() {
    for conv in MetricConvention::all() {
        let sol = SolutionSpec::circular(1).with_amplitude(1.5).build(&conv).unwrap();
        for x in events(20) {
            let f = electric_magnetic(&sol.sample(x), &conv).unwrap();
            let norm = |v: [f64; 3]| v.iter().map(|c| c * c).sum::<f64>().sqrt();
            assert!((norm(f.e) - 1.5).abs() < 1e-13);
            assert!((norm(f.b) - 1.5).abs() < 1e-13);
            let s = [f.e[1] * f.b[2] - f.e[2] * f.b[1], f.e[2] * f.b[0] - f.e[0] * f.b[2], f.e[0] * f.b[1] - f.e[1] * f.b[0]];
            assert!(s[2] > 2.0, "poynting vector along +z in {conv}");
        }
    }
}

#[test]
fn chirality_sign_follows_helicity() {
    for conv in MetricConvention::all() {
        for h in [1, -1] {
            let omega = 2.0;
            let mut spec = SolutionSpec::circular(h).with_amplitude(0.5);
            spec.omega = omega;
            let sol = spec.build(&conv).unwrap();
            for x in events(10) {
                let c = optical_chirality(&sol.sample(x), &conv).unwrap();
                let want = 2.0 * h as f64 * 0.25 * omega.powi(3);
                assert!((c - want).abs() < 1e-12, "{conv} h={h}: {c} vs {want}");
                let z = eval_zilch(&sol.sample(x), ZilchForm::Kibble1, &conv).unwrap();
                assert!((z.t[0][0][0] + conv.zilch_sign() * want).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn all_forms_agree_on_solutions() {
    for conv in MetricConvention::all() {
        for (name, sol) in catalog(&conv) {
            for x in events(6) {
                let s = sol.sample(x);
                let reference = eval_zilch(&s, ZilchForm::Kibble1, &conv).unwrap();
                for form in ZilchForm::ALL {
                    let z = eval_zilch_equivalent(&s, form, &conv).unwrap();
                    let d = z.max_abs_diff(&reference);
                    assert!(d < 1e-12 * (1.0 + reference.max_abs()), "{conv} {name} {form:?}: {d}");
                }
                assert!(modification_term(&s, &conv).unwrap().max_abs() < 1e-12);
            }
        }
    }
}

#[test]
fn lipkin_term_is_what_separates_the_canonical_forms() {
    let conv = MetricConvention::default();
    let s = crossed_waves(&conv).sample([0.3, 0.1, -0.2, 0.4]);
    let k = eval_zilch(&s, ZilchForm::Kibble1, &conv).unwrap();
    let ap = eval_zilch(&s, ZilchForm::AncoPohjanpelto, &conv).unwrap();
    assert!(ap.max_abs_diff(&k) > 1e-3);
}

#[test]
fn decomposition_formulas_match_contraction() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for conv in MetricConvention::all() {
        for x in events(5) {
            let s = random_jets(&mut rng, x);
            let c = contraction_decomposition(&s, &conv).unwrap();
            let off = eval_decomposition(&s, &conv, DecompositionVariant::OffShell).unwrap();
            assert!(off.max_abs_diff(&c) < 1e-12, "{conv} off shell");
            let on = eval_decomposition(&s, &conv, DecompositionVariant::OnShellForm).unwrap();
            assert!(on.max_abs_diff(&c) > 1e-3, "on-shell formulas should need the field equations");
            let rw = zi0j_rewritten(&s, &conv).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    assert!((rw[i][j] - off.zi0j[i][j]).abs() < 1e-12);
                }
            }
        }
        for (name, sol) in catalog(&conv) {
            for x in events(5) {
                let s = sol.sample(x);
                let c = contraction_decomposition(&s, &conv).unwrap();
                let on = eval_decomposition(&s, &conv, DecompositionVariant::OnShellForm).unwrap();
                assert!(on.max_abs_diff(&c) < 1e-12 * (1.0 + c.max_abs()), "{conv} {name}");
            }
        }
    }
}

#[test]
fn stress_energy_is_traceless_with_positive_energy() {
    for conv in MetricConvention::all() {
        for (name, sol) in catalog(&conv) {
            for x in events(5) {
                let s = sol.sample(x);
                let t = eval_stress_energy(&s, &conv).unwrap();
                let tr: f64 = (0..4).map(|a| conv.g(a) as f64 * t.m[a][a]).sum();
                assert!(tr.abs() < 1e-13, "{conv} {name}");
                let f = electric_magnetic(&s, &conv).unwrap();
                let u = 0.5 * (f.e.iter().map(|v| v * v).sum::<f64>() + f.b.iter().map(|v| v * v).sum::<f64>());
                let t00_mixed = conv.g(0) as f64 * t.m[0][0];
                assert!((-t00_mixed - u).abs() < 1e-13, "{conv} {name}");
            }
        }
    }
}

#[test]
fn zilch_is_gauge_independent() {
    for conv in MetricConvention::all() {
        let a = SolutionSpec::linear().build(&conv).unwrap();
        let b = SolutionSpec::linear().with_gauge(Gauge::Lorenz).build(&conv).unwrap();
        for x in events(5) {
            for form in ZilchForm::ALL {
                let za = eval_zilch(&a.sample(x), form, &conv).unwrap();
                let zb = eval_zilch(&b.sample(x), form, &conv).unwrap();
                assert!(za.max_abs_diff(&zb) < 1e-13, "{form:?}");
            }
        }
    }
}

#[test]
fn divergence_vanishes_on_solutions_only() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for conv in MetricConvention::all() {
        for (name, sol) in catalog(&conv) {
            for form in ZilchForm::ALL {
                let r = divergence_residual_analytic(&sol, form, &events(8)).unwrap();
                assert!(r < 1e-12, "{conv} {name} {form:?}: {r}");
            }
        }
        for form in ZilchForm::ALL {
            let r = divergence_residual_sample(&random_jets(&mut rng, [0.0; 4]), form, &conv).unwrap();
            assert!(r > 1e-3, "{form:?} should not be conserved off shell: {r}");
        }
    }
}

#[test]
fn zilch_step_changes_lagrangian_by_half_the_boundary_divergence() {
    let co = Coefficients::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for conv in MetricConvention::all() {
        let st = Strengths::<Rational>::real(conv, Reduction::Extended);
        let lag = lagrangian_real(&st);
        let div_u: Vec<Vec<_>> = (0..4)
            .map(|a| {
                (0..4)
                    .map(|b| {
                        let mut acc = crate::jet::RealPoly::new();
                        for c in 0..4 {
                            acc.add_assign_ref(&total_derivative(&boundary_term(&st, &co, a, b, c), c).unwrap());
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let zeta = [[0.3, -0.2, 0.0, 0.5], [-0.2, 1.0, 0.4, 0.0], [0.0, 0.4, -0.7, 0.1], [0.5, 0.0, 0.1, 0.2]];
        let step = ZilchSymmetryStep::new(zeta).unwrap();
        let sol = SolutionSpec::circular(1).with_direction(OBLIQUE.0, OBLIQUE.1).build(&conv).unwrap();
        let samples = [random_jets(&mut rng, [0.0; 4]), sol.sample([0.2, -0.1, 0.3, 0.5])];
        for s in samples {
            let moved = apply_zilch_symmetry_step(&s, &step).unwrap();
            let dl = eval_jet_polynomial(&lag, &moved).unwrap().slope;
            let mut want = 0.0;
            for a in 0..4 {
                for b in 0..4 {
                    want += 0.5 * zeta[a][b] * eval_jet_polynomial(&div_u[a][b], &s).unwrap();
                }
            }
            assert!((dl - want).abs() < 1e-12 * (1.0 + want.abs()), "{conv}: {dl} vs {want}");
        }
    }
}

#[test]
fn grid_convergence_matches_stencil_order() {
    let conv = MetricConvention::default();
    let sol = crossed_waves(&conv);
    for order in [2u8, 4, 6] {
        let grid = GridSpec::for_frequency(1.0, order);
        let rows = divergence_residual_grid(&sol, ZilchForm::Kibble1, &grid).unwrap();
        for r in &rows[1..] {
            let p = r.observed_order.unwrap();
            assert!((p - order as f64).abs() < 0.3, "order {order}: {rows:?}");
        }
    }
}

#[test]
fn grid_residual_is_quadratic_in_amplitude() {
    let conv = MetricConvention::default();
    let sol = crossed_waves(&conv);
    let mut grid = GridSpec::for_frequency(1.0, 4);
    grid.levels = 2;
    let r1 = divergence_residual_grid(&sol, ZilchForm::Kibble3, &grid).unwrap();
    let r3 = divergence_residual_grid(&sol.scaled(3.0), ZilchForm::Kibble3, &grid).unwrap();
    for (a, b) in r1.iter().zip(&r3) {
        assert!((b.residual / a.residual - 9.0).abs() < 1e-9);
    }
}

#[test]
fn kibble_forms_are_symmetric_and_traceless_on_random_jets() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for conv in MetricConvention::all() {
        for _ in 0..100 {
            let s = random_jets(&mut rng, [0.0; 4]);
            for form in [ZilchForm::Kibble1, ZilchForm::Kibble2, ZilchForm::Kibble3] {
                let z = eval_zilch(&s, form, &conv).unwrap();
                let sym = Rank3::from_fn(|a, b, c| z.t[b][a][c]);
                assert!(z.max_abs_diff(&sym) < 1e-12);
                for (c, tr) in z.trace_first_pair(&conv).iter().enumerate() {
                    assert!(tr.abs() < 1e-12, "{form:?} trace at {c}");
                }
            }
        }
    }
}

#[test]
fn equivalent_form_relations_hold_on_random_jets() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for conv in MetricConvention::all() {
        for _ in 0..10 {
            let s = random_jets(&mut rng, [0.0; 4]);
            let z = eval_zilch(&s, ZilchForm::Kibble1, &conv).unwrap();
            let zp = eval_zilch(&s, ZilchForm::AncoPohjanpelto, &conv).unwrap();
            let sym_of_z = Rank3::from_fn(|a, b, c| 0.5 * (z.t[c][a][b] + z.t[c][b][a]));
            assert!(zp.max_abs_diff(&sym_of_z) < 1e-12);
            let back = Rank3::from_fn(|a, b, c| {
                let total: f64 = [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]]
                    .iter()
                    .map(|&[x, y, w]| zp.t[x][y][w])
                    .sum();
                -2.0 * zp.t[a][b][c] + 0.5 * total
            });
            assert!(z.max_abs_diff(&back) < 1e-12);
        }
    }
}

#[test]
fn zilch_is_invariant_under_rational_duality_rotations() {
    for conv in MetricConvention::all() {
        for (name, sol) in catalog(&conv) {
            for t in [Rational::new(1, 1), Rational::new(2, 1), Rational::new(1, 3)] {
                let r = DualityRotation::Parameter(t);
                let rotated = sol.rotated(&r);
                for x in events(3) {
                    let s = sol.sample(x);
                    let rs = r.apply(&s);
                    assert!(rotated.sample(x).max_abs_diff(&rs) < 1e-14);
                    for form in ZilchForm::ALL {
                        let d = eval_zilch(&s, form, &conv).unwrap().max_abs_diff(&eval_zilch(&rs, form, &conv).unwrap());
                        assert!(d < 1e-12, "{conv} {name} t={t} {form:?}: {d}");
                    }
                }
            }
        }
    }
}

#[test]
fn modification_term_vanishes_only_on_shell() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let conv = MetricConvention::default();
    let m = modification_term(&random_jets(&mut rng, [0.0; 4]), &conv).unwrap();
    assert!(m.max_abs() > 1e-2);
}

#[test]
fn linear_polarization_has_no_chirality() {
    for conv in MetricConvention::all() {
        let sol = SolutionSpec::linear().with_direction(OBLIQUE.0, OBLIQUE.1).build(&conv).unwrap();
        for x in events(10) {
            assert!(optical_chirality(&sol.sample(x), &conv).unwrap().abs() < 1e-12);
        }
    }
}

#[test]
fn zero_field_gives_zero_tensors() {
    let conv = MetricConvention::default();
    let s = crate::catalog::FieldSample::<f64>::zero([0.0; 4]);
    for form in ZilchForm::ALL {
        assert_eq!(eval_zilch(&s, form, &conv).unwrap().max_abs(), 0.0);
    }
    assert_eq!(eval_stress_energy(&s, &conv).unwrap().max_abs(), 0.0);
}

#[test]
fn grid_refuses_unresolved_and_malformed_input() {
    let conv = MetricConvention::default();
    let sol = SolutionSpec::circular(1).build(&conv).unwrap();
    let mut grid = GridSpec::for_frequency(1.0, 4);
    grid.spacing *= 2.0;
    assert!(matches!(
        divergence_residual_grid(&sol, ZilchForm::Kibble1, &grid),
        Err(NumericError::Unresolved { .. })
    ));
    let mut grid = GridSpec::for_frequency(1.0, 4);
    grid.stencil_order = 3;
    assert!(matches!(divergence_residual_grid(&sol, ZilchForm::Kibble1, &grid), Err(NumericError::BadGrid(_))));
}

#[test]
fn shallow_samples_are_rejected() {
    let conv = MetricConvention::default();
    let s = crate::catalog::FieldSample::<f64>::from_fn([0.0; 4], 1, |_, _, _| 1.0);
    assert_eq!(
        eval_zilch(&s, ZilchForm::Kibble1, &conv).unwrap_err(),
        NumericError::InsufficientDepth { needed: 2, got: 1 }
    );
}

#[test]
fn csv_layout() {
    let rows = [ConvergenceRow { h: 0.5, residual: 1e-3, relative: 1e-3, observed_order: None }, ConvergenceRow {
        h: 0.25,
        residual: 2.5e-4,
        relative: 2.5e-4,
        observed_order: Some(2.0),
    }];
    let mut buf = Vec::new();
    write_convergence_csv(&mut buf, &rows).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(text.lines().next(), Some("h,residual,observed_order"));
    assert!(text.lines().nth(1).unwrap().ends_with(','));
    let mut buf = Vec::new();
    write_rank3_csv(&mut buf, &[([0.0; 4], crate::minkowski::Rank3::zero())]).unwrap();
    assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 65);
}
