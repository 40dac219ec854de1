//! Time-space split of Kibble's form for the observer `u^a = (1,0,0,0)`.

use serde::Serialize;

use super::{eval_zilch, NumericError};
use crate::catalog::FieldSample;
use crate::jet::Field;
use crate::minkowski::MetricConvention;
use crate::noether::ZilchForm;

type V3 = [f64; 3];

/// Physical fields and their spacetime derivatives, `de[mu][i] = d_mu E_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ElectricMagnetic {
    pub e: V3,
    pub b: V3,
    pub de: [V3; 4],
    pub db: [V3; 4],
}

fn eps3(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// `E_i = s F_0i`, `B_k = -s/2 eps_ijk F_ij` with `s = g_00`.
pub fn electric_magnetic(s: &FieldSample<f64>, conv: &MetricConvention) -> Result<ElectricMagnetic, NumericError> {
    if s.depth < 2 {
        return Err(NumericError::InsufficientDepth { needed: 2, got: s.depth });
    }
    let sg = conv.g(0) as f64;
    let fields = |dirs: &[usize]| -> (V3, V3) {
        let f = |a, b| s.strength(Field::A, a, b, dirs);
        let e = std::array::from_fn(|i| sg * f(0, i + 1));
        let b = std::array::from_fn(|k| {
            let mut acc = 0.0;
            for i in 0..3 {
                for j in 0..3 {
                    acc += eps3(i, j, k) * f(i + 1, j + 1);
                }
            }
            -0.5 * sg * acc
        });
        (e, b)
    };
    let (e, b) = fields(&[]);
    let d: [(V3, V3); 4] = std::array::from_fn(|mu| fields(&[mu]));
    Ok(ElectricMagnetic {
        e,
        b,
        de: d.map(|x| x.0),
        db: d.map(|x| x.1),
    })
}

fn dot(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: V3, b: V3) -> V3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// `(curl v)_i = eps_ijk d_j v_k` from spacetime derivatives of `v`.
fn curl(dv: &[V3; 4]) -> V3 {
    std::array::from_fn(|i| {
        let mut acc = 0.0;
        for j in 0..3 {
            for k in 0..3 {
                acc += eps3(i, j, k) * dv[j + 1][k];
            }
        }
        acc
    })
}

/// Optical chirality `E . curl E + B . curl B`.
pub fn optical_chirality(s: &FieldSample<f64>, conv: &MetricConvention) -> Result<f64, NumericError> {
    let f = electric_magnetic(s, conv)?;
    Ok(dot(f.e, curl(&f.de)) + dot(f.b, curl(&f.db)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionVariant {
    /// formulas valid for any field
    OffShell,
    /// formulas after using the source-free field equations
    OnShellForm,
    /// direct contraction of the four-dimensional tensor
    Contraction,
}

/// Blocks of `Z_abc` split along `u^a` and the spatial triad `e^a_i`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecompositionReport {
    pub variant: DecompositionVariant,
    pub z000: f64,
    pub z00i: V3,
    pub zi00: V3,
    pub zi0j: [V3; 3],
    pub zij0: [V3; 3],
    pub zijk: [[V3; 3]; 3],
}

impl DecompositionReport {
    fn values(&self) -> Vec<f64> {
        let mut v = vec![self.z000];
        v.extend(self.z00i);
        v.extend(self.zi00);
        v.extend(self.zi0j.iter().flatten());
        v.extend(self.zij0.iter().flatten());
        v.extend(self.zijk.iter().flatten().flatten());
        v
    }

    pub fn max_abs(&self) -> f64 {
        self.values().into_iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        self.values()
            .into_iter()
            .zip(o.values())
            .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
    }

    fn scaled(mut self, k: f64) -> Self {
        self.z000 *= k;
        for v in [&mut self.z00i, &mut self.zi00] {
            v.iter_mut().for_each(|x| *x *= k);
        }
        for m in [&mut self.zi0j, &mut self.zij0] {
            m.iter_mut().flatten().for_each(|x| *x *= k);
        }
        self.zijk.iter_mut().flatten().flatten().for_each(|x| *x *= k);
        self
    }
}

/// The blocks from the closed formulas in `E`, `B` and their derivatives,
/// expressed in the sign convention of `conv`.
pub fn eval_decomposition(
    s: &FieldSample<f64>,
    conv: &MetricConvention,
    variant: DecompositionVariant,
) -> Result<DecompositionReport, NumericError> {
    if variant == DecompositionVariant::Contraction {
        return contraction_decomposition(s, conv);
    }
    let f = electric_magnetic(s, conv)?;
    let (e, b) = (f.e, f.b);
    let (et, bt) = (f.de[0], f.db[0]);
    let (ce, cb) = (curl(&f.de), curl(&f.db));
    let grad = |dv: &[V3; 4], i: usize, j: usize| dv[j + 1][i]; // d_j v_i
    let delta = |i: usize, j: usize| if i == j { 1.0 } else { 0.0 };

    let z00i_off: V3 = std::array::from_fn(|i| (0..3).map(|j| e[j] * grad(&f.db, j, i) - b[j] * grad(&f.de, j, i)).sum());
    let zijk: [[V3; 3]; 3] = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            std::array::from_fn(|k| {
                delta(i, j) * z00i_off[k] - e[i] * grad(&f.db, j, k) - e[j] * grad(&f.db, i, k)
                    + b[i] * grad(&f.de, j, k)
                    + b[j] * grad(&f.de, i, k)
            })
        })
    });
    // eps_ikl (E_j,k E_l + B_j,k B_l)
    let twist = |i: usize, j: usize| -> f64 {
        let mut acc = 0.0;
        for k in 0..3 {
            for l in 0..3 {
                acc += eps3(i, k, l) * (grad(&f.de, j, k) * e[l] + grad(&f.db, j, k) * b[l]);
            }
        }
        acc
    };

    let report = match variant {
        DecompositionVariant::OffShell => {
            let z000 = dot(e, bt) - dot(b, et);
            DecompositionReport {
                variant,
                z000,
                z00i: z00i_off,
                zi00: std::array::from_fn(|i| cross(e, et)[i] + cross(b, bt)[i]),
                zi0j: std::array::from_fn(|i| {
                    std::array::from_fn(|j| {
                        let mut acc = 0.0;
                        for k in 0..3 {
                            for l in 0..3 {
                                acc += eps3(i, k, l) * (e[k] * grad(&f.de, l, j) + b[k] * grad(&f.db, l, j));
                            }
                        }
                        acc
                    })
                }),
                zij0: std::array::from_fn(|i| {
                    std::array::from_fn(|j| {
                        delta(i, j) * z000 + et[i] * b[j] + et[j] * b[i] - bt[i] * e[j] - bt[j] * e[i]
                    })
                }),
                zijk,
            }
        }
        _ => {
            let z000 = -dot(e, ce) - dot(b, cb);
            let zi00: V3 = std::array::from_fn(|i| cross(e, cb)[i] - cross(b, ce)[i]);
            let zij0: [V3; 3] = std::array::from_fn(|i| {
                std::array::from_fn(|j| delta(i, j) * z000 + cb[i] * b[j] + cb[j] * b[i] + ce[i] * e[j] + ce[j] * e[i])
            });
            DecompositionReport {
                variant,
                z000,
                // (E . grad) B - (B . grad) E
                z00i: std::array::from_fn(|i| {
                    zi00[i] + (0..3).map(|j| e[j] * grad(&f.db, i, j) - b[j] * grad(&f.de, i, j)).sum::<f64>()
                }),
                zi00,
                zi0j: std::array::from_fn(|i| {
                    std::array::from_fn(|j| zij0[i][j] - e[i] * ce[j] - b[i] * cb[j] - twist(i, j))
                }),
                zij0,
                zijk,
            }
        }
    };
    Ok(report.scaled(conv.zilch_sign()))
}

/// `u^a u^b e^c_i Z_abc` and siblings, contracted from Kibble's first form.
pub fn contraction_decomposition(s: &FieldSample<f64>, conv: &MetricConvention) -> Result<DecompositionReport, NumericError> {
    let z = eval_zilch(s, ZilchForm::Kibble1, conv)?;
    let t = |a: usize, b: usize, c: usize| z.t[a][b][c];
    Ok(DecompositionReport {
        variant: DecompositionVariant::Contraction,
        z000: t(0, 0, 0),
        z00i: std::array::from_fn(|i| t(0, 0, i + 1)),
        zi00: std::array::from_fn(|i| t(i + 1, 0, 0)),
        zi0j: std::array::from_fn(|i| std::array::from_fn(|j| t(i + 1, 0, j + 1))),
        zij0: std::array::from_fn(|i| std::array::from_fn(|j| t(i + 1, j + 1, 0))),
        zijk: std::array::from_fn(|i| std::array::from_fn(|j| std::array::from_fn(|k| t(i + 1, j + 1, k + 1)))),
    })
}

/// Second expression for `Z_i0j`: an algebraic rewrite of the first, valid
/// off shell.
pub fn zi0j_rewritten(s: &FieldSample<f64>, conv: &MetricConvention) -> Result<[V3; 3], NumericError> {
    let f = electric_magnetic(s, conv)?;
    let (ce, cb) = (curl(&f.de), curl(&f.db));
    let grad = |dv: &[V3; 4], i: usize, j: usize| dv[j + 1][i];
    let chir = dot(f.e, ce) + dot(f.b, cb);
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut tw = 0.0;
            for k in 0..3 {
                for l in 0..3 {
                    tw += eps3(i, k, l) * (grad(&f.de, j, k) * f.e[l] + grad(&f.db, j, k) * f.b[l]);
                }
            }
            let d = if i == j { 1.0 } else { 0.0 };
            conv.zilch_sign() * (-d * chir + ce[i] * f.e[j] + cb[i] * f.b[j] - tw)
        })
    }))
}
