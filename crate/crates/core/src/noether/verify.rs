//! The exact identity suite. Each check expands its free indices over all
//! concrete assignments and demands the empty polynomial for every one.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::jet::{
    conjugate, euler_operator, noether_current, prolong_apply, substitute, substitute_duality_constraint, Coeff,
    ComplexPoly, EvolutionaryField, Field, Gauss, JetPolynomial, RealPoly, Var,
};
use crate::minkowski::{kappa_mixed, verify_kibble_matrix_identity, MetricConvention, Rank2};
use crate::ring::{gi, gr, q, Rational};

use super::forms::*;
use super::strengths::{sym, Reduction, Strengths};
use super::Coefficients;

type P<K> = JetPolynomial<K>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Formulation {
    Algebraic,
    Standard,
    Real,
    Complex,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub terms: usize,
    /// Leading lines of the residual in the canonical text form.
    pub polynomial: String,
}

/// Outcome of one identity over all of its index assignments.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    /// The identity as a formula.
    pub anchor: String,
    pub formulation: Formulation,
    pub convention: String,
    pub assignments: usize,
    pub residual_zero: bool,
    pub witness: Option<Witness>,
}

const WITNESS_LINES: usize = 12;

fn witness_of<K: Coeff>(indices: Vec<usize>, p: &P<K>) -> Witness {
    let text = p.to_text();
    let polynomial: Vec<&str> = text.lines().take(WITNESS_LINES).collect();
    Witness {
        indices,
        terms: p.len(),
        polynomial: polynomial.join("\n"),
    }
}

fn pairs() -> Vec<Vec<usize>> {
    let mut v = Vec::new();
    for a in 0..4 {
        for b in a..4 {
            v.push(vec![a, b]);
        }
    }
    v
}

fn pair_currents() -> Vec<Vec<usize>> {
    pairs()
        .into_iter()
        .flat_map(|p| (0..4).map(move |c| vec![p[0], p[1], c]))
        .collect()
}

fn triples() -> Vec<Vec<usize>> {
    (0..64).map(|i| vec![i / 16, (i / 4) % 4, i % 4]).collect()
}

fn single() -> Vec<Vec<usize>> {
    vec![vec![]]
}

fn check<K: Coeff>(
    name: &str,
    anchor: &str,
    formulation: Formulation,
    conv: &MetricConvention,
    assignments: Vec<Vec<usize>>,
    f: impl Fn(&[usize]) -> P<K> + Sync,
) -> IdentityReport {
    let n = assignments.len();
    let residuals: Vec<P<K>> = assignments.par_iter().map(|idx| f(idx)).collect();
    let witness = assignments
        .into_iter()
        .zip(residuals.iter())
        .find(|(_, r)| !r.is_empty())
        .map(|(idx, r)| witness_of(idx, r));
    IdentityReport {
        name: name.to_string(),
        anchor: anchor.to_string(),
        formulation,
        convention: conv.to_string(),
        assignments: n,
        residual_zero: witness.is_none(),
        witness,
    }
}

fn div<K: Coeff>(f: impl Fn(usize) -> P<K>) -> P<K> {
    let mut out = P::new();
    for c in 0..4 {
        out.add_assign_ref(&d(&f(c), c));
    }
    out
}

fn ext<K: Coeff>(conv: &MetricConvention) -> Strengths<K> {
    Strengths::real(*conv, Reduction::Extended)
}

fn red<K: Coeff>(conv: &MetricConvention) -> Strengths<K> {
    Strengths::real(*conv, Reduction::Reduced)
}

fn lower<K: Coeff>(conv: &MetricConvention, c: usize, p: P<K>) -> P<K> {
    p.scale_by(&K::from_int(conv.g(c)))
}

fn set_c_to_zero(p: &RealPoly) -> RealPoly {
    substitute(p, |v| match v {
        Var::Jet(j) if j.field == Field::C => Some(RealPoly::new()),
        _ => None,
    })
}

/// Every check of the real and standard formulations.
pub fn real_identities(conv: &MetricConvention, co: &Coefficients) -> Vec<IdentityReport> {
    type Check<'a> = Box<dyn Fn() -> IdentityReport + Sync + Send + 'a>;
    let cv = *conv;
    let co = *co;
    let conv = &cv;
    let lag = lagrangian_real::<Rational>(&ext(conv));
    let lag = &lag;
    let std_lag = lagrangian_standard(conv);
    let std_lag = &std_lag;
    use Formulation::*;

    let checks: Vec<Check> = vec![
        Box::new(move || {
            check("lagrangian.standard_forms", "1/4 F^a_b F^b_a = -kappa^abcd A_a,b A_c,d", Standard, conv, single(), |_| {
                std_lag - &lagrangian_standard_kappa(conv)
            })
        }),
        Box::new(move || {
            check("lagrangian.real_forms", "-1/8 (F_ab F^ab + G_ab G^ab) = -1/2 kappa^abcd (A_a,b A_c,d + C_a,b C_c,d)", Real, conv, single(), |_| {
                lag - &lagrangian_real_kappa(conv)
            })
        }),
        Box::new(move || {
            check("lagrangian.real_reduces_to_standard", "L_ds(C = 0) = 1/2 L", Real, conv, single(), |_| {
                &set_c_to_zero(lag) - &std_lag.scale_by(&q(1, 2))
            })
        }),
        Box::new(move || {
            check("euler.standard", "E^a(L) = -F^ab_,b", Standard, conv, (0..4).map(|a| vec![a]).collect(), |i| {
                &euler_operator(std_lag, Field::A, i[0]).expect("first order") - &standard_euler(conv, i[0])
            })
        }),
        Box::new(move || {
            let s = ext::<Rational>(conv);
            let (m, n) = euler_pair(&s);
            check("euler.real", "E_A^a(L_ds) = M^a, E_C^a(L_ds) = N^a", Real, conv, fam2(), |i| {
                let (field, hand) = if i[0] == 0 { (Field::A, &m) } else { (Field::C, &n) };
                &euler_operator(lag, field, i[1]).expect("first order") - &lower(conv, i[1], hand[i[1]].clone())
            })
        }),
        Box::new(move || {
            let s = ext::<Rational>(conv);
            let (m, n) = euler_pair(&s);
            check("euler.real_wave_form", "M_a = 1/2 box A_a - 1/2 (div A)_,a, N_a likewise", Real, conv, fam2(), |i| {
                let (field, hand) = if i[0] == 0 { (Field::A, &m) } else { (Field::C, &n) };
                &hand[i[1]] - &wave_form(conv, field, i[1])
            })
        }),
        Box::new(move || {
            check("scaling.standard", "pr v(L) = 2 L for Q_c = A_c", Standard, conv, single(), |_| {
                let mut v = EvolutionaryField::new();
                for c in 0..4 {
                    v.insert(Field::A, c, RealPoly::jet(Field::A, c, &[]));
                }
                &prolong_apply(&v, std_lag, 1).expect("order") - &std_lag.scale_by(&q(2, 1))
            })
        }),
        Box::new(move || {
            check("symmetry.real", "pr v_ab(L_ds) = U_ab^c_,c", Real, conv, pairs(), |i| {
                let s = ext::<Rational>(conv);
                let v = generator_real(&s, &co, i[0], i[1]);
                &prolong_apply(&v, lag, 1).expect("order") - &div(|c| boundary_term(&s, &co, i[0], i[1], c))
            })
        }),
        Box::new(move || {
            check(
                "characteristic.real_intermediate",
                "Z_ab^c_,c = (4 G_(a^e kappa_b)e^cd M_c)_,d - 2 G_c(a,b) M^c - (4 F_(a^e kappa_b)e^cd N_c)_,d + 2 F_c(a,b) N^c",
                Real,
                conv,
                pairs(),
                |i| {
                    let s = ext::<Rational>(conv);
                    let (m, n) = euler_pair(&s);
                    let (a, b) = (i[0], i[1]);
                    let mut r = div(|c| zilch_real(ZilchForm::DualitySymmetric, &s, &co, a, b, c));
                    for dd in 0..4 {
                        let mut t = RealPoly::new();
                        for e in 0..4 {
                            for c in 0..4 {
                                let w = |u: &dyn Fn(usize, usize) -> RealPoly, x: &RealPoly| {
                                    sym(a, b, |ii, jj| u(ii, e).scale_by(&(q(conv.g(e), 1) * kappa_mixed(jj, e, c, dd)))).mul_ref(x)
                                };
                                t.add_assign_ref(&w(&|p, r| s.y(p, r, &[]), &m[c]).scale_by(&q(-4, 1)));
                                t.add_assign_ref(&w(&|p, r| s.x(p, r, &[]), &n[c]).scale_by(&q(4, 1)));
                            }
                        }
                        r.add_assign_ref(&d(&t, dd));
                    }
                    for c in 0..4 {
                        let g = q(conv.g(c), 1);
                        r.add_assign_ref(&sym(a, b, |ii, jj| s.y(c, ii, &[jj])).mul_ref(&m[c]).scale_by(&(g * q(2, 1))));
                        r.add_assign_ref(&sym(a, b, |ii, jj| s.x(c, ii, &[jj])).mul_ref(&n[c]).scale_by(&(g * q(-2, 1))));
                    }
                    r
                },
            )
        }),
        Box::new(move || {
            check("characteristic.real", "Zt_ab^c_,c = Q_abc M^c + P_abc N^c", Real, conv, pairs(), |i| {
                let s = ext::<Rational>(conv);
                let (m, n) = euler_pair(&s);
                let (a, b) = (i[0], i[1]);
                let mut r = div(|c| zilch_real(ZilchForm::Modified, &s, &co, a, b, c));
                for c in 0..4 {
                    let (qq, pp) = characteristic_real(&s, &co, a, b, c);
                    let rhs = &qq.mul_ref(&m[c]) + &pp.mul_ref(&n[c]);
                    r = &r - &lower(conv, c, rhs);
                }
                r
            })
        }),
        Box::new(move || {
            check("noether.real_current", "-Q_abd dL/dA_d,c - P_abd dL/dC_d,c + U_ab^c = Z'_ab^c", Real, conv, pair_currents(), |i| {
                let s = ext::<Rational>(conv);
                let (a, b, c) = (i[0], i[1], i[2]);
                let v = generator_real(&s, &co, a, b);
                let u: [RealPoly; 4] = std::array::from_fn(|cc| boundary_term(&s, &co, a, b, cc));
                let j = noether_current(&v, lag, &u).expect("first order");
                &j[c] - &zilch_real(ZilchForm::Noether, &s, &co, a, b, c)
            })
        }),
        Box::new(move || {
            check("trivial.divergence_free", "(2 (F_(a^[c G_b)^d] - delta_(a^[c G_b)e F^d]e + delta_(a^[c F_b)e G^d]e)_,d)_,c = 0", Real, conv, pairs(), |i| {
                let s = ext::<Rational>(conv);
                div(|c| trivial_difference(&s, &co, i[0], i[1], c))
            })
        }),
        Box::new(move || {
            check("trivial.noether_minus_modified", "Z'_ab^c - Zt_ab^c = 2 (F_(a^[c G_b)^d] - delta_(a^[c G_b)e F^d]e + delta_(a^[c F_b)e G^d]e)_,d", Real, conv, triples(), |i| {
                let s = ext::<Rational>(conv);
                let (a, b, c) = (i[0], i[1], i[2]);
                let base = Coefficients::default();
                &(&zilch_real(ZilchForm::Noether, &s, &base, a, b, c) - &zilch_real(ZilchForm::Modified, &s, &base, a, b, c))
                    - &trivial_difference(&s, &co, a, b, c)
            })
        }),
        Box::new(move || {
            check(
                "trivial.noether_minus_zilch",
                "Z'_ab^c - Z_ab^c = 4 G_(a^e kappa_b)e^cd M_d - 4 F_(a^e kappa_b)e^cd N_d + 2 (...)_,d",
                Real,
                conv,
                triples(),
                |i| {
                    let s = ext::<Rational>(conv);
                    let (m, n) = euler_pair(&s);
                    let (a, b, c) = (i[0], i[1], i[2]);
                    let base = Coefficients::default();
                    let lhs = &zilch_real(ZilchForm::Noether, &s, &base, a, b, c) - &zilch_real(ZilchForm::DualitySymmetric, &s, &base, a, b, c);
                    &(&lhs - &modification(&s, &co, &m, &n, a, b, c)) - &trivial_difference(&s, &co, a, b, c)
                },
            )
        }),
        Box::new(move || {
            check("modified.euler_terms", "Zt_ab^c - Z_ab^c = 4 G_(a^e kappa_b)e^cd E_d(A) - 4 F_(a^e kappa_b)e^cd E_d(C)", Real, conv, triples(), |i| {
                let s = ext::<Rational>(conv);
                let (a, b, c) = (i[0], i[1], i[2]);
                let e = |field: Field| -> [RealPoly; 4] {
                    std::array::from_fn(|dd| lower(conv, dd, euler_operator(lag, field, dd).expect("first order")))
                };
                let built = &zilch_real(ZilchForm::DualitySymmetric, &s, &co, a, b, c) + &modification(&s, &co, &e(Field::A), &e(Field::C), a, b, c);
                &built - &zilch_real(ZilchForm::Modified, &s, &co, a, b, c)
            })
        }),
        Box::new(move || {
            check("reduction.duality_symmetric_to_kibble", "Z_ab^c(G = *F) = *F^d_(a F_b)d,c - F^d_(a *F_b)d,c", Real, conv, triples(), |i| {
                let s = Strengths::<Rational>::real(*conv, Reduction::Deferred);
                let (a, b, c) = (i[0], i[1], i[2]);
                let z = zilch_real(ZilchForm::DualitySymmetric, &s, &co, a, b, c);
                &substitute_duality_constraint(&z, conv).expect("strength pattern") - &zilch_real(ZilchForm::Kibble3, &red(conv), &co, a, b, c)
            })
        }),
        Box::new(move || {
            check("reduction.boundary_vanishes", "U_ab^c(G = *F) = 0", Real, conv, triples(), |i| {
                let s = Strengths::<Rational>::real(*conv, Reduction::Deferred);
                substitute_duality_constraint(&boundary_term(&s, &Coefficients::default(), i[0], i[1], i[2]), conv).expect("strength pattern")
            })
        }),
        Box::new(move || {
            check("reduction.noether_to_anco", "Z'_ab^c(G = *F) = *F^cd F_d(a,b) - F^cd *F_d(a,b)", Real, conv, triples(), |i| {
                let s = Strengths::<Rational>::real(*conv, Reduction::Deferred);
                let (a, b, c) = (i[0], i[1], i[2]);
                let z = zilch_real(ZilchForm::Noether, &s, &co, a, b, c);
                &substitute_duality_constraint(&z, conv).expect("strength pattern") - &zilch_real(ZilchForm::AncoPohjanpelto, &red(conv), &co, a, b, c)
            })
        }),
        Box::new(move || {
            check("equivalent.zprime_is_symmetrized_zilch", "Z'_abc = Z_c(ab)", Standard, conv, triples(), |i| {
                let s = red::<Rational>(conv);
                let z = |a, b, c| lower(conv, c, zilch_real(ZilchForm::Kibble1, &s, &co, a, b, c));
                let zp = |a, b, c| lower(conv, c, zilch_real(ZilchForm::AncoPohjanpelto, &s, &co, a, b, c));
                let (a, b, c) = (i[0], i[1], i[2]);
                &zp(a, b, c) - &(&z(c, a, b) + &z(c, b, a)).scale_by(&q(1, 2))
            })
        }),
        Box::new(move || {
            check("equivalent.zilch_from_zprime", "Z_abc = -2 Z'_abc + 3 Z'_(abc)", Standard, conv, triples(), |i| {
                let s = red::<Rational>(conv);
                let z = |a, b, c| lower(conv, c, zilch_real(ZilchForm::Kibble1, &s, &co, a, b, c));
                let zp = |a, b, c| lower(conv, c, zilch_real(ZilchForm::AncoPohjanpelto, &s, &co, a, b, c));
                let (a, b, c) = (i[0], i[1], i[2]);
                let mut total = RealPoly::new();
                for [x, y, w] in [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
                    total.add_assign_ref(&zp(x, y, w));
                }
                &(&z(a, b, c) + &zp(a, b, c).scale_by(&q(2, 1))) - &total.scale_by(&q(1, 2))
            })
        }),
        Box::new(move || {
            check("lipkin.difference_is_trivial", "(Lipkin_ab^c - Z'_ab^c)_,c = 0", Standard, conv, pairs(), |i| {
                let s = red::<Rational>(conv);
                div(|c| &zilch_real(ZilchForm::Lipkin, &s, &co, i[0], i[1], c) - &zilch_real(ZilchForm::AncoPohjanpelto, &s, &co, i[0], i[1], c))
            })
        }),
        Box::new(move || {
            check("lipkin.trivial_term", "2 (*F_(a^[c F_b)^d])_,d = -(2 (F_(a^[c G_b)^d] - delta_(a^[c G_b)e F^d]e + delta_(a^[c F_b)e G^d]e)_,d)(G = *F)", Standard, conv, triples(), |i| {
                let s = Strengths::<Rational>::real(*conv, Reduction::Deferred);
                let (a, b, c) = (i[0], i[1], i[2]);
                let t = substitute_duality_constraint(&trivial_difference(&s, &Coefficients::default(), a, b, c), conv).expect("strength pattern");
                &lipkin_trivial(&red::<Rational>(conv), a, b, c) + &t
            })
        }),
        Box::new(move || {
            check("kibble.first_equals_third", "*F_ad F^d_b,c - F_ad *F^d_b,c = *F^d_(a F_b)d,c - F^d_(a *F_b)d,c", Standard, conv, triples(), |i| {
                let s = red::<Rational>(conv);
                &zilch_real(ZilchForm::Kibble1, &s, &co, i[0], i[1], i[2]) - &zilch_real(ZilchForm::Kibble3, &s, &co, i[0], i[1], i[2])
            })
        }),
        Box::new(move || {
            check("kibble.second_equals_third", "2 *F^d_(a F_b)d,c - 1/2 g_ab *F^d_e F^e_d,c = *F^d_(a F_b)d,c - F^d_(a *F_b)d,c", Standard, conv, triples(), |i| {
                let s = red::<Rational>(conv);
                &zilch_real(ZilchForm::Kibble2, &s, &co, i[0], i[1], i[2]) - &zilch_real(ZilchForm::Kibble3, &s, &co, i[0], i[1], i[2])
            })
        }),
        Box::new(move || {
            check("algebra.symmetric", "Z_abc = Z_(ab)c for the Kibble forms", Standard, conv, form_triples(), |i| {
                let s = red::<Rational>(conv);
                let form = KIBBLE[i[0]];
                &zilch_real(form, &s, &co, i[1], i[2], i[3]) - &zilch_real(form, &s, &co, i[2], i[1], i[3])
            })
        }),
        Box::new(move || {
            check("algebra.traceless", "Z^a_ac = 0 for the Kibble forms", Standard, conv, form_singles(), |i| {
                let s = red::<Rational>(conv);
                let form = KIBBLE[i[0]];
                let mut t = RealPoly::new();
                for a in 0..4 {
                    t.add_assign_ref(&zilch_real(form, &s, &co, a, a, i[1]).scale_by(&q(conv.g(a), 1)));
                }
                t
            })
        }),
        Box::new(move || {
            check("duality.zilch_invariance", "Z_ab^c(A cos + C sin, -A sin + C cos) = Z_ab^c, t in {1, 2, 1/3}", Real, conv, rotations(), |i| {
                let s = ext::<Rational>(conv);
                let (cos, sin) = rotation_from_parameter(ROTATIONS[i[0]]);
                let z = zilch_real(ZilchForm::DualitySymmetric, &s, &co, i[1], i[2], i[3]);
                &rotate_potentials(&z, cos, sin) - &z
            })
        }),
        Box::new(move || {
            check("duality.characteristic_covariance", "(Q, P) -> (Q cos + P sin, -Q sin + P cos)", Real, conv, rotations(), |i| {
                let s = ext::<Rational>(conv);
                let (cos, sin) = rotation_from_parameter(ROTATIONS[i[0]]);
                let (qq, pp) = characteristic_real(&s, &co, i[1], i[2], i[3]);
                let rq = &rotate_potentials(&qq, cos, sin) - &(&qq.scale_by(&cos) + &pp.scale_by(&sin));
                let rp = &rotate_potentials(&pp, cos, sin) - &(&pp.scale_by(&cos) - &qq.scale_by(&sin));
                &rq + &rp.mul_ref(&RealPoly::coord(0))
            })
        }),
        Box::new(move || kibble_matrix_report(conv)),
    ];
    checks.par_iter().map(|c| c()).collect()
}

const KIBBLE: [ZilchForm; 3] = [ZilchForm::Kibble1, ZilchForm::Kibble2, ZilchForm::Kibble3];
const ROTATIONS: [Rational; 3] = [
    Rational::new_raw(1, 1),
    Rational::new_raw(2, 1),
    Rational::new_raw(1, 3),
];

fn fam2() -> Vec<Vec<usize>> {
    (0..2).flat_map(|f| (0..4).map(move |a| vec![f, a])).collect()
}

fn form_triples() -> Vec<Vec<usize>> {
    (0..KIBBLE.len())
        .flat_map(|f| triples().into_iter().map(move |t| [vec![f], t].concat()))
        .collect()
}

fn form_singles() -> Vec<Vec<usize>> {
    (0..KIBBLE.len()).flat_map(|f| (0..4).map(move |c| vec![f, c])).collect()
}

fn rotations() -> Vec<Vec<usize>> {
    (0..ROTATIONS.len())
        .flat_map(|r| triples().into_iter().map(move |t| [vec![r], t].concat()))
        .collect()
}

/// `F *F = 1/4 tr(F *F) 1` on 20 seeded random rational antisymmetric matrices.
fn kibble_matrix_report(conv: &MetricConvention) -> IdentityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut failed = None;
    for trial in 0..20 {
        let f = Rank2::<Rational>::from_upper(|_, _| q(rng.random_range(-9..=9), rng.random_range(1..=6)));
        if !verify_kibble_matrix_identity(&f, conv, 0.0) {
            failed = Some(trial);
            break;
        }
    }
    IdentityReport {
        name: "algebra.kibble_matrix_identity".into(),
        anchor: "F *F = 1/4 tr(F *F) 1".into(),
        formulation: Formulation::Algebraic,
        convention: conv.to_string(),
        assignments: 20,
        residual_zero: failed.is_none(),
        witness: failed.map(|t| Witness {
            indices: vec![t],
            terms: 0,
            polynomial: format!("random matrix {t} violates the identity"),
        }),
    }
}

fn g(r: Rational) -> Gauss {
    Gauss(gr(r))
}

fn gi_() -> Gauss {
    Gauss(gi())
}

/// Every check of the complex formulation.
pub fn complex_identities(conv: &MetricConvention, co: &Coefficients) -> Vec<IdentityReport> {
    type Check<'a> = Box<dyn Fn() -> IdentityReport + Sync + Send + 'a>;
    let cv = *conv;
    let co = *co;
    let conv = &cv;
    let lag = lagrangian_complex(&Strengths::complex_native(*conv));
    let lag = &lag;
    let real_lag = lagrangian_real::<Rational>(&ext(conv));
    let real_lag = &real_lag;
    use Formulation::Complex;

    let checks: Vec<Check> = vec![
        Box::new(move || {
            check("lagrangian.complex_forms", "-1/2 F_s ab conj(F_s)^ab = -1/2 kappa^abcd Ac_a,b conj(Ac)_c,d", Complex, conv, single(), |_| {
                lag - &lagrangian_complex_kappa(conv)
            })
        }),
        Box::new(move || {
            check("lagrangian.complex_is_real", "conj(L_c) = L_c", Complex, conv, single(), |_| &conjugate(lag) - lag)
        }),
        Box::new(move || {
            check("lagrangian.complex_matches_real", "L_c(Ac = A + iC) = L_ds", Complex, conv, single(), |_| {
                &complex_to_real(lag) - &real_lag.complexify()
            })
        }),
        Box::new(move || {
            check("euler.complex", "E_Ac^a(L_c) = M^a = 1/2 conj(F_s)^ba_,b, E_conj(Ac)^a = conj(M^a)", Complex, conv, fam2(), |i| {
                let s = Strengths::complex_native(*conv);
                let a = i[1];
                let m = euler_complex(&s, a).scale_by(&g(q(conv.g(a), 1)));
                if i[0] == 0 {
                    &euler_operator(lag, Field::Ac, a).expect("first order") - &m
                } else {
                    &euler_operator(lag, Field::Acb, a).expect("first order") - &conjugate(&m)
                }
            })
        }),
        Box::new(move || {
            check("euler.complex_wave_form", "M_a = 1/4 box conj(Ac)_a - 1/4 (div conj(Ac))_,a", Complex, conv, (0..4).map(|a| vec![a]).collect(), |i| {
                let s = Strengths::complex_native(*conv);
                &euler_complex(&s, i[0]) - &wave_form::<Gauss>(conv, Field::Acb, i[0]).scale_by(&g(q(1, 2)))
            })
        }),
        Box::new(move || {
            check("symmetry.complex", "pr v_ab(L_c) = U_ab^c_,c", Complex, conv, pairs(), |i| {
                let s = Strengths::complex_native(*conv);
                let v = generator_complex(&s, &co, i[0], i[1]);
                &prolong_apply(&v, lag, 1).expect("order") - &div(|c| boundary_term_complex(&s, &co, i[0], i[1], c))
            })
        }),
        Box::new(move || {
            check("symmetry.complex_matches_real", "pr v_ab(L_c)(Ac = A + iC) = pr v_ab(L_ds)", Complex, conv, pairs(), |i| {
                let s = Strengths::complex_native(*conv);
                let v = generator_complex(&s, &co, i[0], i[1]);
                let rs = ext::<Rational>(conv);
                let vr = generator_real(&rs, &Coefficients::default(), i[0], i[1]);
                &complex_to_real(&prolong_apply(&v, lag, 1).expect("order")) - &prolong_apply(&vr, real_lag, 1).expect("order").complexify()
            })
        }),
        Box::new(move || {
            check("symmetry.complex_boundary_matches_real", "U_c ab^c(Ac = A + iC) = U_ab^c", Complex, conv, triples(), |i| {
                let s = Strengths::complex_native(*conv);
                let rs = ext::<Rational>(conv);
                let (a, b, c) = (i[0], i[1], i[2]);
                &complex_to_real(&boundary_term_complex(&s, &co, a, b, c)) - &boundary_term(&rs, &Coefficients::default(), a, b, c).complexify()
            })
        }),
        Box::new(move || {
            check("characteristic.complex", "Zt_ab^c_,c = Q_ab^c M_c + c.c.", Complex, conv, pairs(), |i| {
                let s = Strengths::complex_native(*conv);
                let m: [ComplexPoly; 4] = std::array::from_fn(|a| euler_complex(&s, a));
                let (a, b) = (i[0], i[1]);
                let mut r = div(|c| zilch_complex_modified(&s, &m, a, b, c));
                for c in 0..4 {
                    let t = characteristic_complex(&s, &co, a, b, c).mul_ref(&m[c]).scale_by(&g(q(conv.g(c), 1)));
                    r = &(&r - &t) - &conjugate(&t);
                }
                r
            })
        }),
        Box::new(move || {
            check("complex.zilch_matches_real", "(2i conj(F_s)^d_(a F_s b)d,c + c.c.)(Ac = A + iC) = G^d_(a F_b)d,c - F^d_(a G_b)d,c", Complex, conv, triples(), |i| {
                let s = Strengths::complex_native(*conv);
                let (a, b, c) = (i[0], i[1], i[2]);
                &complex_to_real(&zilch_complex(&s, a, b, c))
                    - &zilch_real(ZilchForm::DualitySymmetric, &ext::<Rational>(conv), &co, a, b, c).complexify()
            })
        }),
        Box::new(move || {
            check("complex.modified_matches_real", "Zt_c ab^c(Ac = A + iC) = Zt_ab^c", Complex, conv, triples(), |i| {
                let s = Strengths::complex_native(*conv);
                let m: [ComplexPoly; 4] = std::array::from_fn(|a| euler_complex(&s, a));
                let (a, b, c) = (i[0], i[1], i[2]);
                &complex_to_real(&zilch_complex_modified(&s, &m, a, b, c))
                    - &zilch_real(ZilchForm::Modified, &ext::<Rational>(conv), &Coefficients::default(), a, b, c).complexify()
            })
        }),
        Box::new(move || {
            check("noether.complex_current", "(-Q_abd dL/dAc_d,c + c.c. + U_ab^c)(Ac = A + iC) = Z'_ab^c", Complex, conv, pair_currents(), |i| {
                let s = Strengths::complex_native(*conv);
                let (a, b, c) = (i[0], i[1], i[2]);
                let v = generator_complex(&s, &co, a, b);
                let u: [ComplexPoly; 4] = std::array::from_fn(|cc| boundary_term_complex(&s, &co, a, b, cc));
                let j = noether_current(&v, lag, &u).expect("first order");
                &complex_to_real(&j[c]) - &zilch_real(ZilchForm::Noether, &ext::<Rational>(conv), &Coefficients::default(), a, b, c).complexify()
            })
        }),
        Box::new(move || {
            check("reduction.complex_zprime", "(2i conj(F_s)_d(a,b) F_s^dc - 2i F_s d(a,b) conj(F_s)^dc)(G = *F) = Z'_ab^c", Complex, conv, triples(), |i| {
                let s = Strengths::complex_from_real(*conv, Reduction::Deferred);
                let (a, b, c) = (i[0], i[1], i[2]);
                &substitute_duality_constraint(&zprime_complex(&s, a, b, c), conv).expect("strength pattern")
                    - &zilch_real(ZilchForm::AncoPohjanpelto, &red::<Rational>(conv), &co, a, b, c).complexify()
            })
        }),
        Box::new(move || {
            check("duality.complex_characteristic_phase", "Q_abc(-i Ac) = -i Q_abc", Complex, conv, triples(), |i| {
                let s = Strengths::complex_native(*conv);
                let minus_i = Gauss(-gi());
                let qq = characteristic_complex(&s, &co, i[0], i[1], i[2]);
                &rotate_complex(&qq, minus_i) - &qq.scale_by(&minus_i)
            })
        }),
        Box::new(move || {
            check("duality.complex_lagrangian_phase", "L_c(e^(-i alpha) Ac) = L_c", Complex, conv, (0..2).map(|k| vec![k]).collect(), |i| {
                let phase = if i[0] == 0 { Gauss(-gi()) } else { g(q(3, 5)) + gi_() * g(q(-4, 5)) };
                &rotate_complex(lag, phase) - lag
            })
        }),
    ];
    checks.par_iter().map(|c| c()).collect()
}

/// The full suite for one convention.
pub fn identity_suite(conv: &MetricConvention, co: &Coefficients) -> Vec<IdentityReport> {
    let (mut r, c) = rayon::join(|| real_identities(conv, co), || complex_identities(conv, co));
    r.extend(c);
    r
}

/// Whether a form is symmetric and traceless in its first pair, in a given
/// set of jet variables.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FormStatus {
    pub form: ZilchForm,
    pub reduction: &'static str,
    pub symmetric: bool,
    pub traceless: bool,
}

/// Symmetry and trace of every form, with `G` independent (extended) and
/// with `G = *F` in `A` jets (reduced). Recorded, not asserted.
pub fn form_status(conv: &MetricConvention) -> Vec<FormStatus> {
    let co = Coefficients::default();
    let mut jobs = Vec::new();
    for form in ZilchForm::ALL {
        for reduction in [Reduction::Extended, Reduction::Reduced] {
            jobs.push((form, reduction));
        }
    }
    jobs.par_iter()
        .map(|&(form, reduction)| {
            let s = Strengths::<Rational>::real(*conv, reduction);
            let z = |a, b, c| zilch_real(form, &s, &co, a, b, c);
            let symmetric = triples().iter().all(|i| z(i[0], i[1], i[2]) == z(i[1], i[0], i[2]));
            let traceless = (0..4).all(|c| {
                let mut t = RealPoly::new();
                for a in 0..4 {
                    t.add_assign_ref(&z(a, a, c).scale_by(&q(conv.g(a), 1)));
                }
                t.is_empty()
            });
            FormStatus {
                form,
                reduction: if reduction == Reduction::Extended { "extended" } else { "reduced" },
                symmetric,
                traceless,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_exactly_zero() {
        for conv in MetricConvention::all() {
            let bad: Vec<String> = identity_suite(&conv, &Coefficients::default())
                .into_iter()
                .filter(|r| !r.residual_zero)
                .map(|r| format!("{} {}: {:?}", r.name, r.convention, r.witness))
                .collect();
            assert!(bad.is_empty(), "{}", bad.join("\n"));
        }
    }

    #[test]
    fn every_mutation_breaks_its_target() {
        let conv = MetricConvention::default();
        for m in crate::noether::Mutation::ALL {
            let reports = identity_suite(&conv, &m.apply(Coefficients::default()));
            let target = reports.iter().find(|r| r.name == m.target()).expect("target exists");
            assert!(!target.residual_zero, "{m} left {} intact", m.target());
            assert!(target.witness.as_ref().unwrap().terms > 0);
        }
    }

    #[test]
    fn kibble_forms_are_symmetric_and_traceless_when_reduced() {
        for st in form_status(&MetricConvention::default()) {
            if !st.form.is_standard() || st.reduction != "reduced" {
                continue;
            }
            if matches!(st.form, ZilchForm::Kibble1 | ZilchForm::Kibble2 | ZilchForm::Kibble3) {
                assert!(st.symmetric && st.traceless, "{st:?}");
            }
        }
    }
}
