use super::NumericError;
use crate::catalog::FieldSample;
use crate::jet::Field;
use crate::minkowski::{dual_array, MetricConvention, Rank2, Rank3};
use crate::noether::ZilchForm;
use crate::jet::{RealPoly, Var};
use crate::ring::{q, Ring};

type M2<S> = [[S; 4]; 4];
type M3<S> = [[[S; 4]; 4]; 4];

/// Field strengths and their first derivatives at one sample:
/// `F`, `G` from the potentials and `*F` from `F`.
#[derive(Debug, Clone)]
pub struct FieldTensors<S> {
    pub conv: MetricConvention,
    pub f: M2<S>,
    /// `df[a][b][c] = F_ab,c`
    pub df: M3<S>,
    pub g: M2<S>,
    pub dg: M3<S>,
    pub sf: M2<S>,
    pub dsf: M3<S>,
}

impl<S: Ring> FieldTensors<S> {
    pub fn new(s: &FieldSample<S>, conv: &MetricConvention) -> Result<Self, NumericError> {
        if s.depth < 2 {
            return Err(NumericError::InsufficientDepth { needed: 2, got: s.depth });
        }
        let strength = |field: Field, dirs: &[usize]| -> M2<S> {
            std::array::from_fn(|a| std::array::from_fn(|b| s.strength(field, a, b, dirs)))
        };
        let deriv = |field: Field| -> M3<S> {
            let by_c: [M2<S>; 4] = std::array::from_fn(|c| strength(field, &[c]));
            std::array::from_fn(|a| std::array::from_fn(|b| std::array::from_fn(|c| by_c[c][a][b].clone())))
        };
        let f = strength(Field::A, &[]);
        let df = deriv(Field::A);
        let sf = dual_array(&f, conv);
        let dsf_by_c: [M2<S>; 4] = std::array::from_fn(|c| {
            let fc: M2<S> = std::array::from_fn(|a| std::array::from_fn(|b| df[a][b][c].clone()));
            dual_array(&fc, conv)
        });
        let dsf = std::array::from_fn(|a| std::array::from_fn(|b| std::array::from_fn(|c| dsf_by_c[c][a][b].clone())));
        Ok(Self {
            conv: *conv,
            f,
            df,
            g: strength(Field::C, &[]),
            dg: deriv(Field::C),
            sf,
            dsf,
        })
    }

    /// `(F, *F)` for the standard forms, `(F, G)` for the duality-symmetric ones.
    fn pair(&self, form: ZilchForm) -> Pair<'_, S> {
        let (y, dy) = if form.is_standard() { (&self.sf, &self.dsf) } else { (&self.g, &self.dg) };
        Pair {
            conv: &self.conv,
            x: &self.f,
            dx: &self.df,
            y,
            dy,
        }
    }
}

struct Pair<'a, S> {
    conv: &'a MetricConvention,
    x: &'a M2<S>,
    dx: &'a M3<S>,
    y: &'a M2<S>,
    dy: &'a M3<S>,
}

impl<S: Ring> Pair<'_, S> {
    fn g(&self, a: usize) -> S {
        S::from_int(self.conv.g(a))
    }

    fn kibble1(&self, a: usize, b: usize, c: usize) -> S {
        (0..4).fold(S::zero(), |acc, d| {
            acc + self.g(d)
                * (self.y[a][d].clone() * self.dx[d][b][c].clone() - self.x[a][d].clone() * self.dy[d][b][c].clone())
        })
    }

    fn kibble2(&self, a: usize, b: usize, c: usize) -> S {
        let mut acc = (0..4).fold(S::zero(), |acc, d| {
            acc + self.g(d)
                * (self.y[d][a].clone() * self.dx[b][d][c].clone() + self.y[d][b].clone() * self.dx[a][d][c].clone())
        });
        if a == b {
            let mut tr = S::zero();
            for d in 0..4 {
                for e in 0..4 {
                    tr = tr + self.g(d) * self.g(e) * self.y[d][e].clone() * self.dx[e][d][c].clone();
                }
            }
            acc = acc - (self.g(a) * tr).scale(q(1, 2));
        }
        acc
    }

    fn kibble3(&self, a: usize, b: usize, c: usize) -> S {
        (0..4)
            .fold(S::zero(), |acc, d| {
                acc + self.g(d)
                    * (self.y[d][a].clone() * self.dx[b][d][c].clone() + self.y[d][b].clone() * self.dx[a][d][c].clone()
                        - self.x[d][a].clone() * self.dy[b][d][c].clone()
                        - self.x[d][b].clone() * self.dy[a][d][c].clone())
            })
            .scale(q(1, 2))
    }

    fn anco(&self, a: usize, b: usize, c: usize) -> S {
        (0..4).fold(S::zero(), |acc, d| {
            let xs = (self.dx[d][a][b].clone() + self.dx[d][b][a].clone()).scale(q(1, 2));
            let ys = (self.dy[d][a][b].clone() + self.dy[d][b][a].clone()).scale(q(1, 2));
            acc + self.g(d) * (self.y[c][d].clone() * xs - self.x[c][d].clone() * ys)
        })
    }

    /// `2 (y_(a^[c x_b)^d])_,d` with `c` lowered.
    fn lipkin_trivial(&self, a: usize, b: usize, c: usize) -> S {
        // d_k (y_i^m x_j^n)
        let w = |i: usize, j: usize, m: usize, n: usize, k: usize| {
            self.g(m)
                * self.g(n)
                * (self.dy[i][m][k].clone() * self.x[j][n].clone() + self.y[i][m].clone() * self.dx[j][n][k].clone())
        };
        let mut acc = S::zero();
        for d in 0..4 {
            acc = acc + w(a, b, c, d, d) - w(a, b, d, c, d) + w(b, a, c, d, d) - w(b, a, d, c, d);
        }
        // 2 * 1/2 * 1/2, then lower c
        acc.scale(q(1, 2)) * self.g(c)
    }

    /// `U_ab^c` with `c` lowered.
    fn boundary(&self, a: usize, b: usize, c: usize) -> S {
        let x_of = |bb: usize| {
            let mut acc = S::zero();
            for d in 0..4 {
                for e in 0..4 {
                    let t = (self.x[d][e].clone() * self.dy[d][e][bb].clone()).scale(q(-1, 2))
                        + (self.y[d][e].clone() * self.dx[d][e][bb].clone()).scale(q(1, 2));
                    acc = acc + self.g(d) * self.g(e) * t;
                }
            }
            acc
        };
        let mut out = S::zero();
        if a == c {
            out = out + x_of(b);
        }
        if b == c {
            out = out + x_of(a);
        }
        out.scale(q(1, 2)) * self.g(c)
    }

    /// `M_d = 1/2 x^b_d,b`
    fn half_div(&self, x: &M3<S>, d: usize) -> S {
        (0..4).fold(S::zero(), |acc, b| acc + self.g(b) * x[b][d][b].clone()).scale(q(1, 2))
    }

    /// `4 G_(a^e kappa_b)e^cd M_d - 4 F_(a^e kappa_b)e^cd N_d` with `c` lowered.
    fn modification(&self, a: usize, b: usize, c: usize) -> S {
        let m: [S; 4] = std::array::from_fn(|d| self.half_div(self.dx, d));
        let n: [S; 4] = std::array::from_fn(|d| self.half_div(self.dy, d));
        // u_i^d w_d g_jc - u_ic w_j
        let term = |u: &M2<S>, w: &[S; 4], i: usize, j: usize| {
            let mut t = S::zero();
            if j == c {
                for d in 0..4 {
                    t = t + self.g(d) * u[i][d].clone() * w[d].clone();
                }
                t = t * self.g(c);
            }
            t - u[i][c].clone() * w[j].clone()
        };
        let gm = term(self.y, &m, a, b) + term(self.y, &m, b, a);
        let fn_ = term(self.x, &n, a, b) + term(self.x, &n, b, a);
        gm - fn_
    }

    fn eval(&self, form: ZilchForm, a: usize, b: usize, c: usize) -> S {
        match form {
            ZilchForm::Kibble1 => self.kibble1(a, b, c),
            ZilchForm::Kibble2 => self.kibble2(a, b, c),
            ZilchForm::Kibble3 | ZilchForm::DualitySymmetric => self.kibble3(a, b, c),
            ZilchForm::AncoPohjanpelto => self.anco(a, b, c),
            ZilchForm::Lipkin => self.anco(a, b, c) + self.lipkin_trivial(a, b, c),
            ZilchForm::Noether => self.anco(a, b, c) + self.boundary(a, b, c),
            ZilchForm::Modified => self.kibble3(a, b, c) + self.modification(a, b, c),
        }
    }
}

/// `Z_abc` of a form at a sample of depth at least 2.
pub fn eval_zilch<S: Ring>(s: &FieldSample<S>, form: ZilchForm, conv: &MetricConvention) -> Result<Rank3<S>, NumericError> {
    let t = FieldTensors::new(s, conv)?;
    let p = t.pair(form);
    Ok(Rank3::from_fn(|a, b, c| p.eval(form, a, b, c)))
}

/// `Z_abc` plus the trivial current that separates the form from the
/// Kibble forms on shell: the Lipkin term for the Anco-Pohjanpelto and
/// Noether forms, nothing otherwise.
pub fn eval_zilch_equivalent<S: Ring>(
    s: &FieldSample<S>,
    form: ZilchForm,
    conv: &MetricConvention,
) -> Result<Rank3<S>, NumericError> {
    let t = FieldTensors::new(s, conv)?;
    let p = t.pair(form);
    let adjust = matches!(form, ZilchForm::AncoPohjanpelto | ZilchForm::Noether);
    Ok(Rank3::from_fn(|a, b, c| {
        let z = p.eval(form, a, b, c);
        if adjust {
            z + p.lipkin_trivial(a, b, c)
        } else {
            z
        }
    }))
}

/// The modified-current correction alone, `Zt - Z`.
pub fn modification_term<S: Ring>(s: &FieldSample<S>, conv: &MetricConvention) -> Result<Rank3<S>, NumericError> {
    let t = FieldTensors::new(s, conv)?;
    let p = t.pair(ZilchForm::Modified);
    Ok(Rank3::from_fn(|a, b, c| p.modification(a, b, c)))
}

/// `T_ab = -1/2 (F F + *F *F)_ab`, matrix products taken through the metric.
pub fn eval_stress_energy<S: Ring>(s: &FieldSample<S>, conv: &MetricConvention) -> Result<Rank2<S>, NumericError> {
    if s.depth < 1 {
        return Err(NumericError::InsufficientDepth { needed: 1, got: s.depth });
    }
    let f: M2<S> = std::array::from_fn(|a| std::array::from_fn(|b| s.strength(Field::A, a, b, &[])));
    let sf = dual_array(&f, conv);
    Ok(Rank2::from_fn(|a, b| {
        (0..4)
            .fold(S::zero(), |acc, c| {
                acc + S::from_int(conv.g(c)) * (f[a][c].clone() * f[c][b].clone() + sf[a][c].clone() * sf[c][b].clone())
            })
            .scale(q(-1, 2))
    }))
}

/// Value of a symbolic jet polynomial at a sample. Deferred strength
/// symbols `G_ab,K` take the sample's `C` strengths. Explicit coordinates
/// are not supported.
pub fn eval_jet_polynomial<S: Ring>(p: &RealPoly, s: &FieldSample<S>) -> Result<S, NumericError> {
    if p.max_order() > s.depth {
        return Err(NumericError::InsufficientDepth { needed: p.max_order(), got: s.depth });
    }
    if p.vars().any(|v| matches!(v, Var::Coord(_))) {
        return Err(NumericError::ExplicitCoordinate);
    }
    let val = |v: &Var| -> S {
        match v {
            Var::Jet(j) => s.d(j.field, j.component as usize, &j.derivs.dirs()),
            Var::Strength(g) => s.strength(Field::C, g.a as usize, g.b as usize, &g.derivs.dirs()),
            Var::Coord(_) => unreachable!("rejected above"),
        }
    };
    Ok(p.terms().fold(S::zero(), |acc, (m, c)| {
        acc + m.iter().fold(S::from_ratio(*c), |t, v| t * val(v))
    }))
}
