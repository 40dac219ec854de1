//! Exact vacuum Maxwell solutions with closed-form derivatives of every
//! order, their magnetic duality partners, and the sample type the numeric
//! evaluators work on.

mod sample;
mod spec;
mod transform;

pub use sample::{deriv_slot, random_jets, FieldSample, MULTI_INDICES, NDERIV};
pub use spec::{Gauge, PolarizationKind, SolutionKind, SolutionSpec, SpecError};
pub use transform::{
    apply_zilch_symmetry_step, constraint_residual, on_shell_residual, DualityRotation, StepError, ZilchSymmetryStep,
};

use crate::jet::{Derivs, Field};
use crate::minkowski::MetricConvention;
use crate::ring::Dual;

/// One monochromatic component `u_a = alpha_a cos(phi) + beta_a sin(phi)`
/// with `phi = p_a x^a`, for both potentials.
#[derive(Debug, Clone, PartialEq)]
pub struct Mode {
    /// `p_a = d_a phi = (omega, -k)`.
    pub p: [f64; 4],
    pub a_cos: [f64; 4],
    pub a_sin: [f64; 4],
    pub c_cos: [f64; 4],
    pub c_sin: [f64; 4],
}

impl Mode {
    fn phase(&self, x: &[f64; 4]) -> f64 {
        (0..4).map(|a| self.p[a] * x[a]).sum()
    }

    /// `d_J u_comp` at phase `phi`.
    fn deriv(&self, field: Field, comp: usize, j: &Derivs, phi: f64) -> f64 {
        let (cc, ss) = match field {
            Field::A => (self.a_cos[comp], self.a_sin[comp]),
            _ => (self.c_cos[comp], self.c_sin[comp]),
        };
        if cc == 0.0 && ss == 0.0 {
            return 0.0;
        }
        let mut pj = 1.0;
        for (d, &n) in j.0.iter().enumerate() {
            pj *= self.p[d].powi(n as i32);
        }
        let (s, c) = phi.sin_cos();
        // n-th derivatives of cos and sin
        let (dc, ds) = match j.order() % 4 {
            0 => (c, s),
            1 => (-s, c),
            2 => (-c, -s),
            _ => (s, -c),
        };
        pj * (cc * dc + ss * ds)
    }
}

/// A closed-form solution in a fixed metric convention.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticSolution {
    pub conv: MetricConvention,
    pub modes: Vec<Mode>,
    /// Wave frequency scale, used for normalization and grid checks.
    pub omega: f64,
}

impl AnalyticSolution {
    /// `d_J u_comp` at an event.
    pub fn deriv(&self, field: Field, comp: usize, j: &Derivs, x: &[f64; 4]) -> f64 {
        self.modes.iter().map(|m| m.deriv(field, comp, j, m.phase(x))).sum()
    }

    /// Jets through order 3, exact to rounding.
    pub fn sample(&self, x: [f64; 4]) -> FieldSample<f64> {
        FieldSample::from_fn(x, 3, |field, comp, j| self.deriv(field, comp, j, &x))
    }

    /// Jets through order 3 carrying their exact derivative along `dir` as
    /// the dual part.
    pub fn sample_directional(&self, x: [f64; 4], dir: [f64; 4]) -> FieldSample<Dual> {
        FieldSample::from_fn(x, 3, |field, comp, j| {
            let slope = (0..4)
                .filter(|&d| dir[d] != 0.0)
                .map(|d| dir[d] * self.deriv(field, comp, &j.with(d), &x))
                .sum();
            Dual::new(self.deriv(field, comp, j, &x), slope)
        })
    }

    /// Sum of two solutions in the same convention.
    pub fn superpose(&self, other: &AnalyticSolution) -> AnalyticSolution {
        let mut modes = self.modes.clone();
        modes.extend(other.modes.iter().cloned());
        AnalyticSolution {
            conv: self.conv,
            modes,
            omega: self.omega.max(other.omega),
        }
    }

    /// Multiply both potentials by a constant.
    pub fn scaled(&self, k: f64) -> AnalyticSolution {
        let s = |v: [f64; 4]| v.map(|x| x * k);
        AnalyticSolution {
            conv: self.conv,
            modes: self
                .modes
                .iter()
                .map(|m| Mode {
                    p: m.p,
                    a_cos: s(m.a_cos),
                    a_sin: s(m.a_sin),
                    c_cos: s(m.c_cos),
                    c_sin: s(m.c_sin),
                })
                .collect(),
            omega: self.omega,
        }
    }

    /// The solution with every mode's potentials rotated by `r`.
    pub fn rotated(&self, r: &DualityRotation) -> AnalyticSolution {
        let (cos, sin) = r.cos_sin();
        let mix = |a: [f64; 4], c: [f64; 4], wa: f64, wc: f64| std::array::from_fn(|i| wa * a[i] + wc * c[i]);
        AnalyticSolution {
            conv: self.conv,
            modes: self
                .modes
                .iter()
                .map(|m| Mode {
                    p: m.p,
                    a_cos: mix(m.a_cos, m.c_cos, cos, sin),
                    a_sin: mix(m.a_sin, m.c_sin, cos, sin),
                    c_cos: mix(m.a_cos, m.c_cos, -sin, cos),
                    c_sin: mix(m.a_sin, m.c_sin, -sin, cos),
                })
                .collect(),
            omega: self.omega,
        }
    }
}

/// Seeded events spread over a few wavelengths around the origin.
pub fn random_events(rng: &mut impl rand::Rng, n: usize, omega: f64) -> Vec<[f64; 4]> {
    let span = 4.0 * std::f64::consts::PI / omega;
    (0..n)
        .map(|_| std::array::from_fn(|_| rng.random_range(-span..span)))
        .collect()
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::ring::q;

    fn specs() -> Vec<SolutionSpec> {
        let mut sup = SolutionSpec::new(SolutionKind::Superposition);
        sup.components = vec![
            SolutionSpec::circular(-1).with_direction([1.0, 2.0, 2.0], [2.0, -2.0, 1.0]),
            SolutionSpec::linear().with_direction([0.0, 1.0, 0.0], [1.0, 0.0, 0.0]),
        ];
        vec![
            SolutionSpec::linear(),
            SolutionSpec::circular(1).with_amplitude(2.0),
            SolutionSpec::linear().with_gauge(Gauge::Lorenz),
            SolutionSpec::circular(-1).with_gauge(Gauge::Lorenz),
            SolutionSpec::new(SolutionKind::StandingWave),
            sup,
        ]
    }

    fn events() -> Vec<[f64; 4]> {
        random_events(&mut ChaCha8Rng::seed_from_u64(1), 12, 1.0)
    }

    #[test]
    fn catalog_satisfies_field_equations_and_constraint() {
        for conv in MetricConvention::all() {
            for spec in specs() {
                let sol = spec.build(&conv).unwrap();
                for x in events() {
                    let s = sol.sample(x);
                    assert!(constraint_residual(&s, &conv) <= 1e-13, "{conv} {spec:?}");
                    assert!(on_shell_residual(&s, &conv) <= 1e-12, "{conv} {spec:?}");
                }
            }
        }
    }

    #[test]
    fn lorenz_gauge_has_time_component_and_zero_divergence() {
        for conv in MetricConvention::all() {
            let sol = SolutionSpec::linear().with_gauge(Gauge::Lorenz).build(&conv).unwrap();
            let x = [0.1, 0.2, 0.3, 0.4];
            let s = sol.sample(x);
            assert!(s.d(Field::A, 0, &[]).abs() > 1e-3);
            for field in [Field::A, Field::C] {
                let div: f64 = (0..4).map(|a| conv.g(a) as f64 * s.d(field, a, &[a])).sum();
                assert!(div.abs() < 1e-14);
            }
        }
    }

    /// Eighth-order central difference of the order-2 jets against the
    /// closed-form order-3 jets.
    #[test]
    fn closed_form_derivatives_match_finite_differences() {
        const W: [f64; 4] = [4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0];
        let conv = MetricConvention::default();
        let sol = specs().pop().unwrap().build(&conv).unwrap();
        let h = 0.05;
        for x in events().into_iter().take(3) {
            for j in MULTI_INDICES.iter().filter(|j| j.order() == 2) {
                for d in 0..4 {
                    for comp in 0..4 {
                        let at = |k: f64| {
                            let mut y = x;
                            y[d] += k * h;
                            sol.deriv(Field::C, comp, j, &y)
                        };
                        let fd: f64 = W.iter().enumerate().map(|(i, w)| w * (at(i as f64 + 1.0) - at(-(i as f64) - 1.0))).sum::<f64>() / h;
                        let exact = sol.deriv(Field::C, comp, &j.with(d), &x);
                        assert!((fd - exact).abs() < 1e-9, "{j:?}+{d}: {fd} vs {exact}");
                    }
                }
            }
        }
    }

    #[test]
    fn directional_samples_carry_exact_slopes() {
        let conv = MetricConvention::default();
        let sol = SolutionSpec::circular(1).build(&conv).unwrap();
        let x = [0.4, -0.3, 0.2, 0.9];
        let dir = [0.5, 0.0, -1.0, 2.0];
        let from_sample = sol.sample(x).directional(dir);
        let closed = sol.sample_directional(x, dir);
        for comp in 0..4 {
            for k in 0..NDERIV {
                if MULTI_INDICES[k].order() < 3 {
                    assert!((from_sample.a[comp][k].slope - closed.a[comp][k].slope).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn duality_rotations_compose() {
        let conv = MetricConvention::default();
        let sol = SolutionSpec::circular(1).build(&conv).unwrap();
        let (r1, r2) = (DualityRotation::Angle(0.4), DualityRotation::Angle(1.1));
        let two = sol.rotated(&r1).rotated(&r2);
        let one = sol.rotated(&DualityRotation::Angle(1.5));
        let x = [0.3, 0.0, 1.0, -0.5];
        let (a, b) = (two.sample(x), one.sample(x));
        assert!(a.a.iter().flatten().zip(b.a.iter().flatten()).all(|(u, v)| (u - v).abs() < 1e-14));
        let rotated_sample = r1.apply(&sol.sample(x));
        assert!(rotated_sample.c.iter().flatten().zip(sol.rotated(&r1).sample(x).c.iter().flatten()).all(|(u, v)| (u - v).abs() < 1e-14));

        // t = 1 is a quarter turn, A -> C, C -> -A
        let quarter = DualityRotation::Parameter(q(1, 1));
        assert_eq!(quarter.exact(), Some((q(0, 1), q(1, 1))));
        let r = quarter.apply(&sol.sample(x));
        let s = sol.sample(x);
        assert_eq!(r.a, s.c);
        assert_eq!(r.c, s.a.map(|row| row.map(|v| -v)));
        // rotated fields still satisfy the constraint
        assert!(constraint_residual(&sol.rotated(&DualityRotation::Angle(0.7)).sample(x), &conv) < 1e-13);
    }

    #[test]
    fn symmetry_step_rejects_asymmetric_parameter() {
        let mut z = [[0.0; 4]; 4];
        z[1][2] = 1.0;
        assert_eq!(ZilchSymmetryStep::new(z).unwrap_err(), StepError::NotSymmetric { a: 2, b: 1 });
        let step = ZilchSymmetryStep::new([[1.0; 4]; 4]).unwrap();
        let shallow = FieldSample::<f64>::from_fn([0.0; 4], 2, |_, _, _| 0.0);
        assert_eq!(apply_zilch_symmetry_step(&shallow, &step).unwrap_err(), StepError::TooShallow(2));
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let conv = MetricConvention::default();
        let bad = SolutionSpec::linear().with_direction([0.0, 0.0, 1.0], [0.0, 1.0, 1.0]);
        assert!(bad.build(&conv).unwrap_err().to_string().contains("orthogonal"));
        let mut s = SolutionSpec::linear();
        s.omega = -1.0;
        assert!(s.build(&conv).is_err());
        assert!(SolutionSpec::new(SolutionKind::Superposition).build(&conv).is_err());
        let parsed: Result<SolutionSpec, _> = toml::from_str("kind = \"linear-plane-wave\"\nfrequency = 2.0\n");
        assert!(parsed.is_err());
        let parsed: SolutionSpec = toml::from_str("kind = \"circular-plane-wave\"\nhelicity = -1\n").unwrap();
        assert_eq!(parsed.helicity, -1);
    }
}
