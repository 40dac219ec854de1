//! Field strengths in jet variables and the duality constraint `G = *F`.

use crate::minkowski::MetricConvention;
use crate::ring::q;

use super::calculus::substitute;
use super::coord::{Field, Var};
use super::poly::{Coeff, JetPolynomial};
use super::JetError;

/// `F_ab,K = u_b,aK - u_a,bK` for the potential `u = field`.
pub fn strength<K: Coeff>(field: Field, a: usize, b: usize, dirs: &[usize]) -> JetPolynomial<K> {
    let mut da = dirs.to_vec();
    da.push(a);
    let mut db = dirs.to_vec();
    db.push(b);
    &JetPolynomial::jet(field, b, &da) - &JetPolynomial::jet(field, a, &db)
}

/// `*F_ab,K = 1/2 eps_abcd F^cd_,K` expanded in jets of `field`.
pub fn dual_strength<K: Coeff>(
    conv: &MetricConvention,
    field: Field,
    a: usize,
    b: usize,
    dirs: &[usize],
) -> JetPolynomial<K> {
    let mut out = JetPolynomial::new();
    for c in 0..4 {
        for d in (c + 1)..4 {
            // the c<d and d<c halves of the sum are equal
            let e = conv.epsilon(a, b, c, d) * conv.g(c) * conv.g(d);
            if e != 0 {
                out.add_assign_ref(&strength::<K>(field, c, d, dirs).scale_by(&K::from_ratio(q(e, 1))));
            }
        }
    }
    out
}

/// Replace every deferred `G_ab,K` by its potential form in `C` jets.
pub fn expand_strengths<K: Coeff>(p: &JetPolynomial<K>) -> JetPolynomial<K> {
    substitute(p, |v| match v {
        Var::Strength(s) => Some(strength(Field::C, s.a as usize, s.b as usize, &s.derivs.dirs())),
        _ => None,
    })
}

/// Impose `G = *F`: every deferred `G_ab,K` becomes the matching derivative of
/// the dual of `F`, expanded in `A` jets. Fails on `C` jets that do not sit
/// inside a deferred strength.
pub fn substitute_duality_constraint<K: Coeff>(
    p: &JetPolynomial<K>,
    conv: &MetricConvention,
) -> Result<JetPolynomial<K>, JetError> {
    for (m, _) in p.terms() {
        if m.iter().any(|v| matches!(v, Var::Jet(j) if j.field == Field::C)) {
            let text: Vec<String> = m.iter().map(|v| v.to_string()).collect();
            return Err(JetError::BareCJet {
                monomial: text.join(" "),
            });
        }
    }
    Ok(substitute(p, |v| match v {
        Var::Strength(s) => Some(dual_strength(conv, Field::A, s.a as usize, s.b as usize, &s.derivs.dirs())),
        _ => None,
    }))
}
