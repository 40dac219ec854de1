//! Total derivatives, Euler operators and prolongations on jet polynomials.

use std::collections::HashMap;

use super::coord::{Derivs, Field, JetCoordinate, Var};
use super::family::EvolutionaryField;
use super::poly::{sorted, Coeff, JetPolynomial, Monomial};
use super::JetError;

/// Total derivative `d/dx^dir`, acting through every jet coordinate by the
/// chain rule and on explicit coordinates as `d x^a / d x^b = delta`.
pub fn total_derivative<K: Coeff>(p: &JetPolynomial<K>, dir: usize) -> Result<JetPolynomial<K>, JetError> {
    let mut out = JetPolynomial::new();
    for (m, c) in p.terms() {
        for i in 0..m.len() {
            let replaced = match m[i] {
                Var::Coord(a) => {
                    if a as usize != dir {
                        continue;
                    }
                    None
                }
                Var::Jet(j) => Some(Var::Jet(j.differentiate(dir)?)),
                Var::Strength(s) => Some(Var::Strength(s.differentiate(dir)?)),
            };
            let mut nm: Monomial = Monomial::with_capacity(m.len());
            for (k, v) in m.iter().enumerate() {
                if k != i {
                    nm.push(*v);
                }
            }
            if let Some(v) = replaced {
                nm.push(v);
            }
            out.add_term(sorted(nm), c.clone());
        }
    }
    Ok(out)
}

/// Repeated total derivative along every direction of `derivs`.
pub fn total_derivative_multi<K: Coeff>(p: &JetPolynomial<K>, derivs: &Derivs) -> Result<JetPolynomial<K>, JetError> {
    let mut cur = p.clone();
    for d in derivs.dirs() {
        cur = total_derivative(&cur, d)?;
    }
    Ok(cur)
}

/// Divergence `d_c W^c` of a vector of polynomials.
pub fn divergence<K: Coeff>(w: &[JetPolynomial<K>; 4]) -> Result<JetPolynomial<K>, JetError> {
    let mut out = JetPolynomial::new();
    for (c, wc) in w.iter().enumerate() {
        out.add_assign_ref(&total_derivative(wc, c)?);
    }
    Ok(out)
}

/// Partial derivative with respect to one variable, all others held fixed.
pub fn partial<K: Coeff>(p: &JetPolynomial<K>, var: &Var) -> JetPolynomial<K> {
    let mut out = JetPolynomial::new();
    for (m, c) in p.terms() {
        let mult = m.iter().filter(|v| *v == var).count();
        if mult == 0 {
            continue;
        }
        let mut nm = m.clone();
        let pos = nm.iter().position(|v| v == var).expect("present");
        nm.remove(pos);
        out.add_term(nm, c.clone().scale(crate::ring::q(mult as i64, 1)));
    }
    out
}

/// Euler operator `E_u = sum_J (-D)_J d/du_J` for the component `u` of a
/// field, summed over distinct sorted multi-indices `|J| <= 2`.
pub fn euler_operator<K: Coeff>(
    l: &JetPolynomial<K>,
    field: Field,
    component: usize,
) -> Result<JetPolynomial<K>, JetError> {
    let order = l.max_order();
    if order > 2 {
        return Err(JetError::EulerOrder { order, max: 2 });
    }
    let mut out = JetPolynomial::new();
    for k in 0..=order {
        for j in Derivs::all_of_order(k) {
            let var = Var::Jet(JetCoordinate {
                field,
                component: component as u8,
                derivs: j,
            });
            let dp = partial(l, &var);
            if dp.is_empty() {
                continue;
            }
            let term = total_derivative_multi(&dp, &j)?;
            if k % 2 == 1 {
                out = &out - &term;
            } else {
                out.add_assign_ref(&term);
            }
        }
    }
    Ok(out)
}

/// Prolonged action `pr v (p) = sum_{u, J} (D_J Q_u) dp/du_J`.
///
/// Fails when `p` has jet order above `max_order`, or when differentiating
/// the characteristic `max_order` times would leave the jet space.
pub fn prolong_apply<K: Coeff>(
    v: &EvolutionaryField<K>,
    p: &JetPolynomial<K>,
    max_order: u8,
) -> Result<JetPolynomial<K>, JetError> {
    let p_order = p.max_order();
    if p_order > max_order {
        return Err(JetError::ProlongationOrder {
            needed: p_order,
            requested: max_order,
        });
    }
    let q_order = v.max_order();
    if q_order + max_order > super::coord::MAX_ORDER {
        return Err(JetError::OrderOverflow {
            coordinate: format!("characteristic of order {q_order} prolonged to order {max_order}"),
            max: super::coord::MAX_ORDER,
        });
    }
    if p.contains_strengths() {
        return Err(JetError::DeferredStrength);
    }
    let mut cache: HashMap<(Field, u8, Derivs), JetPolynomial<K>> = HashMap::new();
    let mut out = JetPolynomial::new();
    for var in p.vars() {
        let Var::Jet(j) = var else { continue };
        let Some(q) = v.get(j.field, j.component as usize) else { continue };
        let key = (j.field, j.component, j.derivs);
        let dq = match cache.get(&key) {
            Some(d) => d.clone(),
            None => {
                let d = total_derivative_multi(q, &j.derivs)?;
                cache.insert(key, d.clone());
                d
            }
        };
        if dq.is_empty() {
            continue;
        }
        out.add_assign_ref(&dq.mul_ref(&partial(p, &var)));
    }
    Ok(out)
}

/// Conserved current `J^a = -sum_u Q_u dL/du_{,a} + U^a` of a first-order
/// Lagrangian under a variational symmetry with boundary term `U`.
pub fn noether_current<K: Coeff>(
    v: &EvolutionaryField<K>,
    l: &JetPolynomial<K>,
    u: &[JetPolynomial<K>; 4],
) -> Result<[JetPolynomial<K>; 4], JetError> {
    let order = l.max_order();
    if order > 1 {
        return Err(JetError::EulerOrder { order, max: 1 });
    }
    let mut out = u.clone();
    for ((field, comp), qv) in v.iter() {
        for (a, slot) in out.iter_mut().enumerate() {
            let var = Var::Jet(JetCoordinate::new(field, comp, &[a]));
            let dl = partial(l, &var);
            if !dl.is_empty() {
                *slot = &*slot - &qv.mul_ref(&dl);
            }
        }
    }
    Ok(out)
}

/// Ring homomorphism replacing selected variables by polynomials.
pub fn substitute<K: Coeff>(
    p: &JetPolynomial<K>,
    f: impl Fn(&Var) -> Option<JetPolynomial<K>>,
) -> JetPolynomial<K> {
    let mut cache: HashMap<Var, Option<JetPolynomial<K>>> = HashMap::new();
    let mut out = JetPolynomial::new();
    for (m, c) in p.terms() {
        let mut acc = JetPolynomial::constant(c.clone());
        let mut kept = Monomial::new();
        for v in m {
            let image = cache.entry(*v).or_insert_with(|| f(v));
            match image {
                Some(img) => acc = acc.mul_ref(img),
                None => kept.push(*v),
            }
        }
        if !kept.is_empty() {
            let mut mono = JetPolynomial::new();
            mono.add_term(kept, K::one());
            acc = acc.mul_ref(&mono);
        }
        out.add_assign_ref(&acc);
    }
    out
}

/// Complex conjugation on Gaussian-rational polynomials: conjugates every
/// coefficient and swaps `Ac <-> Acb`.
pub fn conjugate<K: Coeff>(p: &JetPolynomial<K>) -> JetPolynomial<K> {
    let mut out = JetPolynomial::new();
    for (m, c) in p.terms() {
        let nm: Monomial = m
            .iter()
            .map(|v| match v {
                Var::Jet(j) => Var::Jet(JetCoordinate {
                    field: j.field.conjugate(),
                    ..*j
                }),
                other => *other,
            })
            .collect();
        out.add_term(sorted(nm), c.conj());
    }
    out
}
