use super::sample::{FieldSample, MULTI_INDICES};
use crate::jet::Field;
use crate::minkowski::{dual_array, MetricConvention};
use crate::noether::forms::rotation_from_parameter;
use crate::ring::{Dual, Rational};

/// Rotation `A -> A cos + C sin`, `C -> -A sin + C cos`, by an angle or by
/// the exact rational parameter `t` with `cos = (1-t^2)/(1+t^2)`,
/// `sin = 2t/(1+t^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DualityRotation {
    Angle(f64),
    Parameter(Rational),
}

impl DualityRotation {
    pub fn exact(&self) -> Option<(Rational, Rational)> {
        match self {
            DualityRotation::Parameter(t) => Some(rotation_from_parameter(*t)),
            DualityRotation::Angle(_) => None,
        }
    }

    pub fn cos_sin(&self) -> (f64, f64) {
        match self {
            DualityRotation::Angle(a) => (a.cos(), a.sin()),
            DualityRotation::Parameter(_) => {
                let (c, s) = self.exact().expect("rational");
                let f = |r: Rational| *r.numer() as f64 / *r.denom() as f64;
                (f(c), f(s))
            }
        }
    }

    pub fn angle(&self) -> f64 {
        let (c, s) = self.cos_sin();
        s.atan2(c)
    }

    /// Rotate every jet of a sample.
    pub fn apply(&self, s: &FieldSample<f64>) -> FieldSample<f64> {
        let (cos, sin) = self.cos_sin();
        let mut out = s.clone();
        for comp in 0..4 {
            for k in 0..MULTI_INDICES.len() {
                let (a, c) = (s.a[comp][k], s.c[comp][k]);
                out.a[comp][k] = cos * a + sin * c;
                out.c[comp][k] = -sin * a + cos * c;
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StepError {
    #[error("zeta is not symmetric at ({a}, {b})")]
    NotSymmetric { a: usize, b: usize },
    #[error("a symmetry step needs sample depth >= 3, got {0}")]
    TooShallow(u8),
}

/// Infinitesimal zilch step with symmetric parameter `zeta^ab`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZilchSymmetryStep {
    zeta: [[f64; 4]; 4],
}

impl ZilchSymmetryStep {
    pub fn new(zeta: [[f64; 4]; 4]) -> Result<Self, StepError> {
        for a in 0..4 {
            for b in 0..a {
                if zeta[a][b] != zeta[b][a] {
                    return Err(StepError::NotSymmetric { a, b });
                }
            }
        }
        Ok(Self { zeta })
    }

    pub fn zeta(&self) -> &[[f64; 4]; 4] {
        &self.zeta
    }
}

/// First-order image of a sample under `A_c -> A_c - zeta^ab G_ca,b`,
/// `C_c -> C_c + zeta^ab F_ca,b`: the value is the input, the dual part the
/// change per unit step. Valid through order `depth - 2`.
pub fn apply_zilch_symmetry_step(s: &FieldSample<f64>, step: &ZilchSymmetryStep) -> Result<FieldSample<Dual>, StepError> {
    if s.depth < 3 {
        return Err(StepError::TooShallow(s.depth));
    }
    let depth = s.depth - 2;
    let z = &step.zeta;
    Ok(FieldSample::from_fn(s.event, depth, |field, comp, j| {
        let dirs = j.dirs();
        let mut change = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                if z[a][b] == 0.0 {
                    continue;
                }
                let mut bd = vec![b];
                bd.extend_from_slice(&dirs);
                change += z[a][b]
                    * match field {
                        Field::A => -s.strength(Field::C, comp, a, &bd),
                        _ => s.strength(Field::A, comp, a, &bd),
                    };
            }
        }
        Dual::new(s.d(field, comp, &dirs), change)
    }))
}

/// Largest `|M_a|`, `|N_a|` relative to the largest first derivative of
/// either field strength. Zero for a zero field.
pub fn on_shell_residual(s: &FieldSample<f64>, conv: &MetricConvention) -> f64 {
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for field in [Field::A, Field::C] {
        for a in 0..4 {
            let mut m = 0.0;
            for b in 0..4 {
                m += 0.5 * conv.g(b) as f64 * s.strength(field, b, a, &[b]);
                for c in 0..4 {
                    scale = scale.max(s.strength(field, a, b, &[c]).abs());
                }
            }
            worst = worst.max(m.abs());
        }
    }
    if scale == 0.0 {
        0.0
    } else {
        worst / scale
    }
}

/// Largest `|G_ab,J - *F_ab,J|` over `|J| < depth`, relative to the largest
/// `|F_ab,J|`.
pub fn constraint_residual(s: &FieldSample<f64>, conv: &MetricConvention) -> f64 {
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for j in MULTI_INDICES.iter().filter(|j| j.order() < s.depth) {
        let dirs = j.dirs();
        let f: [[f64; 4]; 4] = std::array::from_fn(|a| std::array::from_fn(|b| s.strength(Field::A, a, b, &dirs)));
        let sf = dual_array(&f, conv);
        for a in 0..4 {
            for b in 0..4 {
                scale = scale.max(f[a][b].abs());
                worst = worst.max((s.strength(Field::C, a, b, &dirs) - sf[a][b]).abs());
            }
        }
    }
    if scale == 0.0 {
        worst
    } else {
        worst / scale
    }
}
