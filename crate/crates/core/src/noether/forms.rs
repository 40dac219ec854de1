//! Symbolic building blocks: Lagrangians, Euler expressions, zilch forms,
//! characteristics and boundary terms, all in concrete components.
//!
//! Currents carry their last index up (`J_ab^c`), the natural position for
//! taking a divergence.

use serde::{Deserialize, Serialize};

use crate::jet::{
    conjugate, substitute, total_derivative, Coeff, ComplexPoly, EvolutionaryField, Field, Gauss,
    JetPolynomial, RealPoly, Var,
};
use crate::minkowski::{kappa, kappa_mixed, MetricConvention};
use crate::ring::{gi, gr, q, Rational};

use super::strengths::{antisym, kd, sym, Reduction, Strengths};
use super::Coefficients;

type P<K> = JetPolynomial<K>;

/// Total derivative of a fixed formula; the formulas stay within the jet
/// order cap, so an overflow is a programming error.
pub(crate) fn d<K: Coeff>(p: &P<K>, dir: usize) -> P<K> {
    total_derivative(p, dir).expect("formula exceeds the jet order cap")
}

fn k<K: Coeff>(n: i64, den: i64) -> K {
    K::from_ratio(q(n, den))
}

fn ci() -> Gauss {
    Gauss(gi())
}

fn cr(r: Rational) -> Gauss {
    Gauss(gr(r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LagrangianKind {
    Standard,
    RealDualitySymmetric,
    ComplexDualitySymmetric,
}

/// Which zilch expression to build or evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZilchForm {
    /// `*F_ad F^d_b,c - F_ad *F^d_b,c`
    #[serde(rename = "kibble-1")]
    Kibble1,
    /// `2 *F^d_(a F_b)d,c - 1/2 g_ab *F^d_e F^e_d,c`
    #[serde(rename = "kibble-2")]
    Kibble2,
    /// `*F^d_(a F_b)d,c - F^d_(a *F_b)d,c`
    #[serde(rename = "kibble-3")]
    Kibble3,
    /// `G^d_(a F_b)d,c - F^d_(a G_b)d,c`
    DualitySymmetric,
    /// `*F^cd F_d(a,b) - F^cd *F_d(a,b) + 2 (*F_(a^[c F_b)^d])_,d`
    Lipkin,
    /// `*F^cd F_d(a,b) - F^cd *F_d(a,b)`
    AncoPohjanpelto,
    /// duality-symmetric form plus the terms proportional to `M`, `N`
    Modified,
    /// Noether current of the zilch symmetry
    Noether,
}

impl ZilchForm {
    pub const ALL: [ZilchForm; 8] = [
        ZilchForm::Kibble1,
        ZilchForm::Kibble2,
        ZilchForm::Kibble3,
        ZilchForm::DualitySymmetric,
        ZilchForm::Lipkin,
        ZilchForm::AncoPohjanpelto,
        ZilchForm::Modified,
        ZilchForm::Noether,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ZilchForm::Kibble1 => "kibble-1",
            ZilchForm::Kibble2 => "kibble-2",
            ZilchForm::Kibble3 => "kibble-3",
            ZilchForm::DualitySymmetric => "duality-symmetric",
            ZilchForm::Lipkin => "lipkin",
            ZilchForm::AncoPohjanpelto => "anco-pohjanpelto",
            ZilchForm::Modified => "modified",
            ZilchForm::Noether => "noether",
        }
    }

    /// Forms of standard Maxwell theory, built from `F` and `*F` only.
    pub fn is_standard(self) -> bool {
        !matches!(self, ZilchForm::DualitySymmetric | ZilchForm::Modified | ZilchForm::Noether)
    }
}

// Lagrangians ----------------------------------------------------------------

/// `-1/8 (x_ab x^ab + y_ab y^ab)`.
pub fn lagrangian_real<K: Coeff>(s: &Strengths<K>) -> P<K> {
    let mut out = P::new();
    for a in 0..4 {
        for b in 0..4 {
            let w = s.g(a) * s.g(b) * k(-1, 8);
            let xx = s.x(a, b, &[]).mul_ref(&s.x(a, b, &[]));
            let yy = s.y(a, b, &[]).mul_ref(&s.y(a, b, &[]));
            out.add_assign_ref(&(&xx + &yy).scale_by(&w));
        }
    }
    out
}

/// `-kappa^abcd u_a,b v_c,d` summed over the given field pairs with weight.
fn kappa_form<K: Coeff>(conv: &MetricConvention, pairs: &[(Field, Field, K)]) -> P<K> {
    let mut out = P::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for e in 0..4 {
                    let kap = kappa(conv, a, b, c, e) * q(conv.g(a) * conv.g(b) * conv.g(c) * conv.g(e), 1);
                    if kap == q(0, 1) {
                        continue;
                    }
                    for (u, v, w) in pairs {
                        let term = P::jet(*u, a, &[b]).mul_ref(&P::jet(*v, c, &[e]));
                        out.add_assign_ref(&term.scale_by(&(w.clone() * K::from_ratio(-kap))));
                    }
                }
            }
        }
    }
    out
}

/// `1/4 F^a_b F^b_a` in `A` jets.
pub fn lagrangian_standard(conv: &MetricConvention) -> RealPoly {
    let s = Strengths::<Rational>::real(*conv, Reduction::Reduced);
    let mut out = P::new();
    for a in 0..4 {
        for b in 0..4 {
            let w = q(conv.g(a) * conv.g(b), 4);
            out.add_assign_ref(&s.x(a, b, &[]).mul_ref(&s.x(b, a, &[])).scale_by(&w));
        }
    }
    out
}

/// `-kappa^abcd A_a,b A_c,d`.
pub fn lagrangian_standard_kappa(conv: &MetricConvention) -> RealPoly {
    kappa_form(conv, &[(Field::A, Field::A, q(1, 1))])
}

/// `-1/2 kappa^abcd (A_a,b A_c,d + C_a,b C_c,d)`.
pub fn lagrangian_real_kappa(conv: &MetricConvention) -> RealPoly {
    kappa_form(conv, &[(Field::A, Field::A, q(1, 2)), (Field::C, Field::C, q(1, 2))])
}

/// `-1/2 x_ab y^ab` with `(x, y) = (F_s, conj F_s)`.
pub fn lagrangian_complex(s: &Strengths<Gauss>) -> ComplexPoly {
    let mut out = P::new();
    for a in 0..4 {
        for b in 0..4 {
            let w = s.g(a) * s.g(b) * cr(q(-1, 2));
            out.add_assign_ref(&s.x(a, b, &[]).mul_ref(&s.y(a, b, &[])).scale_by(&w));
        }
    }
    out
}

/// `-1/2 kappa^abcd Ac_a,b conj(Ac)_c,d`.
pub fn lagrangian_complex_kappa(conv: &MetricConvention) -> ComplexPoly {
    kappa_form(conv, &[(Field::Ac, Field::Acb, cr(q(1, 2)))])
}

/// Lagrangian of the requested kind, over the Gaussian rationals.
pub fn build_lagrangian(kind: LagrangianKind, conv: &MetricConvention) -> ComplexPoly {
    match kind {
        LagrangianKind::Standard => lagrangian_standard(conv).complexify(),
        LagrangianKind::RealDualitySymmetric => lagrangian_real(&Strengths::<Rational>::real(*conv, Reduction::Extended)).complexify(),
        LagrangianKind::ComplexDualitySymmetric => lagrangian_complex(&Strengths::complex_native(*conv)),
    }
}

// Euler expressions -----------------------------------------------------------

/// `1/2 x^b_a,b`, i.e. `M_a` for `x = F` and `N_a` for `x = G`.
pub fn half_divergence_x<K: Coeff>(s: &Strengths<K>, a: usize) -> P<K> {
    let mut out = P::new();
    for b in 0..4 {
        out.add_assign_ref(&s.x(b, a, &[b]).scale_by(&(s.g(b) * k(1, 2))));
    }
    out
}

pub fn half_divergence_y<K: Coeff>(s: &Strengths<K>, a: usize) -> P<K> {
    let mut out = P::new();
    for b in 0..4 {
        out.add_assign_ref(&s.y(b, a, &[b]).scale_by(&(s.g(b) * k(1, 2))));
    }
    out
}

/// `1/2 box u_a - 1/2 (div u)_,a` for a potential `u`.
pub fn wave_form<K: Coeff>(conv: &MetricConvention, field: Field, a: usize) -> P<K> {
    let mut out = P::new();
    for b in 0..4 {
        let w = K::from_ratio(q(conv.g(b), 2));
        out.add_assign_ref(&P::jet(field, a, &[b, b]).scale_by(&w));
        out.add_assign_ref(&P::jet(field, b, &[b, a]).scale_by(&-w));
    }
    out
}

/// `-F^ab_,b` for the standard Lagrangian.
pub fn standard_euler(conv: &MetricConvention, a: usize) -> RealPoly {
    let s = Strengths::<Rational>::real(*conv, Reduction::Reduced);
    let mut out = P::new();
    for b in 0..4 {
        out.add_assign_ref(&s.x(a, b, &[b]).scale_by(&q(-conv.g(a) * conv.g(b), 1)));
    }
    out
}

// Real zilch forms (current index up) -----------------------------------------

/// `y^d_(a x_b)d,c - x^d_(a y_b)d,c`, all indices down.
fn anticommutator_form<K: Coeff>(s: &Strengths<K>, a: usize, b: usize, c: usize) -> P<K> {
    let mut out = P::new();
    for dd in 0..4 {
        let g = s.g(dd) * k(1, 2);
        let t = &(&s.y(dd, a, &[]).mul_ref(&s.x(b, dd, &[c])) + &s.y(dd, b, &[]).mul_ref(&s.x(a, dd, &[c])))
            - &(&s.x(dd, a, &[]).mul_ref(&s.y(b, dd, &[c])) + &s.x(dd, b, &[]).mul_ref(&s.y(a, dd, &[c])));
        out.add_assign_ref(&t.scale_by(&g));
    }
    out
}

/// `y_ad x^d_b,c - x_ad y^d_b,c`, all indices down.
fn kibble1_lower<K: Coeff>(s: &Strengths<K>, a: usize, b: usize, c: usize) -> P<K> {
    let mut out = P::new();
    for dd in 0..4 {
        let t = &s.y(a, dd, &[]).mul_ref(&s.x(dd, b, &[c])) - &s.x(a, dd, &[]).mul_ref(&s.y(dd, b, &[c]));
        out.add_assign_ref(&t.scale_by(&s.g(dd)));
    }
    out
}

/// `2 y^d_(a x_b)d,c - 1/2 g_ab y^d_e x^e_d,c`, all indices down.
fn kibble2_lower<K: Coeff>(s: &Strengths<K>, a: usize, b: usize, c: usize) -> P<K> {
    let mut out = P::new();
    for dd in 0..4 {
        let t = &s.y(dd, a, &[]).mul_ref(&s.x(b, dd, &[c])) + &s.y(dd, b, &[]).mul_ref(&s.x(a, dd, &[c]));
        out.add_assign_ref(&t.scale_by(&s.g(dd)));
    }
    if a == b {
        for dd in 0..4 {
            for e in 0..4 {
                let w = s.g(a) * s.g(dd) * s.g(e) * k(-1, 2);
                out.add_assign_ref(&s.y(dd, e, &[]).mul_ref(&s.x(e, dd, &[c])).scale_by(&w));
            }
        }
    }
    out
}

/// `y_c^d x_d(a,b) - x_c^d y_d(a,b)`, all indices down.
fn anco_lower<K: Coeff>(s: &Strengths<K>, a: usize, b: usize, c: usize) -> P<K> {
    let mut out = P::new();
    for dd in 0..4 {
        let xs = sym(a, b, |i, j| s.x(dd, i, &[j]));
        let ys = sym(a, b, |i, j| s.y(dd, i, &[j]));
        let t = &s.y(c, dd, &[]).mul_ref(&xs) - &s.x(c, dd, &[]).mul_ref(&ys);
        out.add_assign_ref(&t.scale_by(&s.g(dd)));
    }
    out
}

/// `2 (y_(a^[c x_b)^d])_,d`, the trivial term of Lipkin's form.
pub fn lipkin_trivial<K: Coeff>(s: &Strengths<K>, a: usize, b: usize, c: usize) -> P<K> {
    let mut out = P::new();
    for dd in 0..4 {
        let w = sym(a, b, |i, j| {
            antisym(c, dd, |m, n| s.y(i, m, &[]).mul_ref(&s.x(j, n, &[])).scale_by(&(s.g(m) * s.g(n))))
        });
        out.add_assign_ref(&d(&w, dd));
    }
    out.scale_by(&k(2, 1))
}

/// `U_ab^c = u1 delta_(a^c y^de_,b) x_de + u2 delta_(a^c x^de_,b) y_de`.
pub fn boundary_term<K: Coeff>(s: &Strengths<K>, co: &Coefficients, a: usize, b: usize, c: usize) -> P<K> {
    let x_b = |bb: usize| {
        let mut out = P::new();
        for dd in 0..4 {
            for e in 0..4 {
                let g = s.g(dd) * s.g(e);
                let t = &s.y(dd, e, &[bb]).mul_ref(&s.x(dd, e, &[])).scale_by(&K::from_ratio(co.u_first))
                    + &s.x(dd, e, &[bb]).mul_ref(&s.y(dd, e, &[])).scale_by(&K::from_ratio(co.u_second));
                out.add_assign_ref(&t.scale_by(&g));
            }
        }
        out
    };
    sym(a, b, |i, j| if i == c { x_b(j) } else { P::new() })
}

/// `2 (x_(a^[c y_b)^d] - delta_(a^[c y_b)e x^d]e + delta_(a^[c x_b)e y^d]e)_,d`.
pub fn trivial_difference<K: Coeff>(s: &Strengths<K>, co: &Coefficients, a: usize, b: usize, c: usize) -> P<K> {
    let mixed = |u: &dyn Fn(usize, usize) -> P<K>, v: &dyn Fn(usize, usize) -> P<K>, j: usize, n: usize| {
        // u_je v^ne
        let mut out = P::new();
        for e in 0..4 {
            out.add_assign_ref(&u(j, e).mul_ref(&v(n, e)).scale_by(&(s.g(n) * s.g(e))));
        }
        out
    };
    let x0 = |i: usize, j: usize| s.x(i, j, &[]);
    let y0 = |i: usize, j: usize| s.y(i, j, &[]);
    let mut out = P::new();
    for dd in 0..4 {
        let w = sym(a, b, |i, j| {
            antisym(c, dd, |m, n| {
                let mut t = s.x(i, m, &[]).mul_ref(&s.y(j, n, &[])).scale_by(&(s.g(m) * s.g(n)));
                if co.delta_terms && i == m {
                    t = &t - &mixed(&y0, &x0, j, n);
                    t = &t + &mixed(&x0, &y0, j, n);
                }
                t
            })
        });
        out.add_assign_ref(&d(&w, dd));
    }
    out.scale_by(&k(2, 1))
}

/// `zg G_(a^e kappa_b)e^cd M_d + zf F_(a^e kappa_b)e^cd N_d` with `M`, `N`
/// supplied per lower index.
pub fn modification<K: Coeff>(
    s: &Strengths<K>,
    co: &Coefficients,
    m: &[P<K>; 4],
    n: &[P<K>; 4],
    a: usize,
    b: usize,
    c: usize,
) -> P<K> {
    let mut out = P::new();
    for e in 0..4 {
        for dd in 0..4 {
            let ga = sym(a, b, |i, j| s.y(i, e, &[]).scale_by(&(s.g(e) * K::from_ratio(kappa_mixed(j, e, c, dd)))));
            let fa = sym(a, b, |i, j| s.x(i, e, &[]).scale_by(&(s.g(e) * K::from_ratio(kappa_mixed(j, e, c, dd)))));
            out.add_assign_ref(&ga.mul_ref(&m[dd]).scale_by(&K::from_ratio(co.zmod_g)));
            out.add_assign_ref(&fa.mul_ref(&n[dd]).scale_by(&K::from_ratio(co.zmod_f)));
        }
    }
    out
}

/// Hand-built `M_a`, `N_a` (lower index) of the real pair.
pub fn euler_pair<K: Coeff>(s: &Strengths<K>) -> ([P<K>; 4], [P<K>; 4]) {
    (
        std::array::from_fn(|a| half_divergence_x(s, a)),
        std::array::from_fn(|a| half_divergence_y(s, a)),
    )
}

/// Real zilch current `Z_ab^c` of the requested form.
///
/// Standard forms read `(x, y)` as `(F, *F)`, so they should be given a
/// reduced pair; the duality-symmetric forms read `(F, G)`.
pub fn zilch_real<K: Coeff>(form: ZilchForm, s: &Strengths<K>, co: &Coefficients, a: usize, b: usize, c: usize) -> P<K> {
    let up = s.g(c);
    match form {
        ZilchForm::Kibble1 => kibble1_lower(s, a, b, c).scale_by(&up),
        ZilchForm::Kibble2 => kibble2_lower(s, a, b, c).scale_by(&up),
        ZilchForm::Kibble3 | ZilchForm::DualitySymmetric => anticommutator_form(s, a, b, c).scale_by(&up),
        ZilchForm::AncoPohjanpelto => anco_lower(s, a, b, c).scale_by(&up),
        ZilchForm::Lipkin => &anco_lower(s, a, b, c).scale_by(&up) + &lipkin_trivial(s, a, b, c),
        ZilchForm::Noether => &anco_lower(s, a, b, c).scale_by(&up) + &boundary_term(s, co, a, b, c),
        ZilchForm::Modified => {
            let (m, n) = euler_pair(s);
            &anticommutator_form(s, a, b, c).scale_by(&up) + &modification(s, co, &m, &n, a, b, c)
        }
    }
}

/// `q G_c(a,b)` and `p F_c(a,b)`.
pub fn characteristic_real<K: Coeff>(s: &Strengths<K>, co: &Coefficients, a: usize, b: usize, c: usize) -> (P<K>, P<K>) {
    let qq = sym(a, b, |i, j| s.y(c, i, &[j])).scale_by(&K::from_ratio(co.q));
    let pp = sym(a, b, |i, j| s.x(c, i, &[j])).scale_by(&K::from_ratio(co.p));
    (qq, pp)
}

/// `v_ab = Q_abc d/dA_c + P_abc d/dC_c`; needs an extended pair.
pub fn generator_real<K: Coeff>(s: &Strengths<K>, co: &Coefficients, a: usize, b: usize) -> EvolutionaryField<K> {
    let mut v = EvolutionaryField::new();
    for c in 0..4 {
        let (qq, pp) = characteristic_real(s, co, a, b, c);
        v.insert(Field::A, c, qq);
        v.insert(Field::C, c, pp);
    }
    v
}

// Complex formulation ----------------------------------------------------------

/// `M_a = 1/2 conj(F_s)^b_a,b` (lower index).
pub fn euler_complex(s: &Strengths<Gauss>, a: usize) -> ComplexPoly {
    half_divergence_y(s, a)
}

/// `Z_ab^c = 2i conj(F_s)^d_(a F_s b)d,c + c.c.`
pub fn zilch_complex(s: &Strengths<Gauss>, a: usize, b: usize, c: usize) -> ComplexPoly {
    let mut t = P::new();
    for dd in 0..4 {
        let u = &s.y(dd, a, &[]).mul_ref(&s.x(b, dd, &[c])) + &s.y(dd, b, &[]).mul_ref(&s.x(a, dd, &[c]));
        t.add_assign_ref(&u.scale_by(&(s.g(dd) * s.g(c) * ci())));
    }
    &t + &conjugate(&t)
}

/// `8i F_s e(a kappa_b)^ecd M_d + c.c.`
pub fn modification_complex(s: &Strengths<Gauss>, m: &[ComplexPoly; 4], a: usize, b: usize, c: usize) -> ComplexPoly {
    let conv = s.conv;
    let mut t = P::new();
    for e in 0..4 {
        for dd in 0..4 {
            let f = sym(a, b, |i, j| {
                let kap = kappa(&conv, j, e, c, dd) * q(conv.g(e) * conv.g(c) * conv.g(dd), 1);
                s.x(e, i, &[]).scale_by(&cr(kap))
            });
            t.add_assign_ref(&f.mul_ref(&m[dd]));
        }
    }
    let t = t.scale_by(&(ci() * cr(q(8, 1))));
    &t + &conjugate(&t)
}

/// Modified complex current with `M` from the given lower-index family.
pub fn zilch_complex_modified(s: &Strengths<Gauss>, m: &[ComplexPoly; 4], a: usize, b: usize, c: usize) -> ComplexPoly {
    &zilch_complex(s, a, b, c) + &modification_complex(s, m, a, b, c)
}

/// `Q_abc = s 4i F_s c(a,b)`.
pub fn characteristic_complex(s: &Strengths<Gauss>, co: &Coefficients, a: usize, b: usize, c: usize) -> ComplexPoly {
    let w = ci() * cr(q(4 * co.complex_q_sign, 1));
    sym(a, b, |i, j| s.x(c, i, &[j])).scale_by(&w)
}

/// `v_ab = Q_abc d/dAc_c + conj(Q)_abc d/dconj(Ac)_c`; needs native sources.
pub fn generator_complex(s: &Strengths<Gauss>, co: &Coefficients, a: usize, b: usize) -> EvolutionaryField<Gauss> {
    let mut v = EvolutionaryField::new();
    for c in 0..4 {
        let qq = characteristic_complex(s, co, a, b, c);
        v.insert(Field::Acb, c, conjugate(&qq));
        v.insert(Field::Ac, c, qq);
    }
    v
}

/// `U_ab^c = s i delta_(a^c F_s^de_,b) conj(F_s)_de + c.c.`
pub fn boundary_term_complex(s: &Strengths<Gauss>, co: &Coefficients, a: usize, b: usize, c: usize) -> ComplexPoly {
    let x_b = |bb: usize| {
        let mut out = P::new();
        for dd in 0..4 {
            for e in 0..4 {
                let w = s.g(dd) * s.g(e);
                out.add_assign_ref(&s.x(dd, e, &[bb]).mul_ref(&s.y(dd, e, &[])).scale_by(&w));
            }
        }
        out
    };
    let t = sym(a, b, |i, j| if i == c { x_b(j) } else { P::new() })
        .scale_by(&(ci() * cr(q(co.complex_q_sign, 1))));
    &t + &conjugate(&t)
}

/// `Z'_ab^c = 2i conj(F_s)_d(a,b) F_s^dc - 2i F_s d(a,b) conj(F_s)^dc`.
pub fn zprime_complex(s: &Strengths<Gauss>, a: usize, b: usize, c: usize) -> ComplexPoly {
    let two_i = ci() * cr(q(2, 1));
    let mut out = P::new();
    for dd in 0..4 {
        let w = s.g(dd) * s.g(c) * two_i;
        let ys = sym(a, b, |i, j| s.y(dd, i, &[j]));
        let xs = sym(a, b, |i, j| s.x(dd, i, &[j]));
        let t = &ys.mul_ref(&s.x(dd, c, &[])) - &xs.mul_ref(&s.y(dd, c, &[]));
        out.add_assign_ref(&t.scale_by(&w));
    }
    out
}

// Substitutions ----------------------------------------------------------------

/// `Ac -> A + iC`, `conj(Ac) -> A - iC`.
pub fn complex_to_real(p: &ComplexPoly) -> ComplexPoly {
    substitute(p, |v| match v {
        Var::Jet(j) if matches!(j.field, Field::Ac | Field::Acb) => {
            let sign = if j.field == Field::Ac { 1 } else { -1 };
            let dirs = j.derivs.dirs();
            let a = ComplexPoly::jet(Field::A, j.component as usize, &dirs);
            let c = ComplexPoly::jet(Field::C, j.component as usize, &dirs);
            Some(&a + &c.scale_by(&Gauss(gi() * gr(q(sign, 1)))))
        }
        _ => None,
    })
}

/// Exact rational duality rotation `(cos, sin) = ((1-t^2)/(1+t^2), 2t/(1+t^2))`.
pub fn rotation_from_parameter(t: Rational) -> (Rational, Rational) {
    let one = q(1, 1);
    let den = one + t * t;
    ((one - t * t) / den, (t + t) / den)
}

/// `A -> A cos + C sin`, `C -> -A sin + C cos` on every jet.
pub fn rotate_potentials<K: Coeff>(p: &P<K>, cos: Rational, sin: Rational) -> P<K> {
    substitute(p, |v| match v {
        Var::Jet(j) if matches!(j.field, Field::A | Field::C) => {
            let dirs = j.derivs.dirs();
            let a = P::jet(Field::A, j.component as usize, &dirs);
            let c = P::jet(Field::C, j.component as usize, &dirs);
            let (wa, wc) = if j.field == Field::A { (cos, sin) } else { (-sin, cos) };
            Some(&a.scale_by(&K::from_ratio(wa)) + &c.scale_by(&K::from_ratio(wc)))
        }
        _ => None,
    })
}

/// `Ac -> phase Ac`, `conj(Ac) -> conj(phase) conj(Ac)`.
pub fn rotate_complex(p: &ComplexPoly, phase: Gauss) -> ComplexPoly {
    substitute(p, |v| match v {
        Var::Jet(j) if matches!(j.field, Field::Ac | Field::Acb) => {
            let w = if j.field == Field::Ac { phase } else { Gauss(phase.0.conj()) };
            Some(ComplexPoly::var(*v).scale_by(&w))
        }
        _ => None,
    })
}

/// Kronecker delta helper re-exported for the verification layer.
pub fn delta<K: Coeff>(a: usize, b: usize) -> K {
    kd(a, b)
}
