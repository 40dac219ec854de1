//! Sources of the two field strengths a formula is built from.
//!
//! Every symbolic zilch or Lagrangian formula is written once against a
//! pair `(x, y)` of antisymmetric strengths. Choosing where the pair comes
//! from selects the theory: independent `F`, `G` (extended), `G` kept as a
//! deferred symbol, `G = *F` in `A` jets (reduced), or the self-dual pair
//! `(F_s, conj F_s)` of the complex formulation.

use crate::jet::{dual_strength, strength, Coeff, ComplexPoly, Field, Gauss, JetPolynomial};
use crate::minkowski::MetricConvention;
use crate::ring::{gi, gr, q, Rational};

type Source<K> = Box<dyn Fn(usize, usize, &[usize]) -> JetPolynomial<K> + Send + Sync>;

/// How the magnetic strength `G` relates to the jets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    /// `G` from independent `C` jets.
    Extended,
    /// `G` as deferred symbols awaiting the duality constraint.
    Deferred,
    /// `G = *F` expanded in `A` jets.
    Reduced,
}

pub struct Strengths<K> {
    pub conv: MetricConvention,
    x: Source<K>,
    y: Source<K>,
}

impl<K: Coeff> Strengths<K> {
    /// The real pair `(F, G)`.
    pub fn real(conv: MetricConvention, reduction: Reduction) -> Self {
        let y: Source<K> = match reduction {
            Reduction::Extended => Box::new(|a, b, d| strength(Field::C, a, b, d)),
            Reduction::Deferred => Box::new(|a, b, d| JetPolynomial::strength(a, b, d)),
            Reduction::Reduced => Box::new(move |a, b, d| dual_strength(&conv, Field::A, a, b, d)),
        };
        Self {
            conv,
            x: Box::new(|a, b, d| strength(Field::A, a, b, d)),
            y,
        }
    }

    /// First strength of the pair, `x_ab,K`.
    pub fn x(&self, a: usize, b: usize, d: &[usize]) -> JetPolynomial<K> {
        (self.x)(a, b, d)
    }

    /// Second strength of the pair, `y_ab,K`.
    pub fn y(&self, a: usize, b: usize, d: &[usize]) -> JetPolynomial<K> {
        (self.y)(a, b, d)
    }

    /// Metric entry as a coefficient.
    pub fn g(&self, a: usize) -> K {
        K::from_int(self.conv.g(a))
    }
}

impl Strengths<Gauss> {
    /// `(F_s, conj F_s)` with `F_s = -Ac_[a,b]`, the complex potentials
    /// treated as independent fields.
    pub fn complex_native(conv: MetricConvention) -> Self {
        Self {
            conv,
            x: Box::new(|a, b, d| strength(Field::Ac, a, b, d).scale_by(&half())),
            y: Box::new(|a, b, d| strength(Field::Acb, a, b, d).scale_by(&half())),
        }
    }

    /// `(F_s, conj F_s)` with `F_s = (F + iG)/2` built from a real pair; with
    /// extended sources this is the native pair after `Ac = A + iC`.
    pub fn complex_from_real(conv: MetricConvention, reduction: Reduction) -> Self {
        let real = std::sync::Arc::new(Strengths::<Gauss>::real(conv, reduction));
        let r2 = real.clone();
        Self {
            conv,
            x: Box::new(move |a, b, d| self_dual(&real, a, b, d, 1)),
            y: Box::new(move |a, b, d| self_dual(&r2, a, b, d, -1)),
        }
    }
}

fn half() -> Gauss {
    Gauss(gr(q(1, 2)))
}

fn self_dual(real: &Strengths<Gauss>, a: usize, b: usize, d: &[usize], sign: i64) -> ComplexPoly {
    let i = Gauss(gi() * gr(Rational::from_integer(sign)));
    &real.x(a, b, d).scale_by(&half()) + &real.y(a, b, d).scale_by(&(i * half()))
}

/// Symmetrization over two slots: `(f(a,b) + f(b,a)) / 2`.
pub fn sym<K: Coeff>(a: usize, b: usize, f: impl Fn(usize, usize) -> JetPolynomial<K>) -> JetPolynomial<K> {
    (&f(a, b) + &f(b, a)).scale_by(&K::from_ratio(q(1, 2)))
}

/// Antisymmetrization over two slots: `(f(c,d) - f(d,c)) / 2`.
pub fn antisym<K: Coeff>(c: usize, d: usize, f: impl Fn(usize, usize) -> JetPolynomial<K>) -> JetPolynomial<K> {
    (&f(c, d) - &f(d, c)).scale_by(&K::from_ratio(q(1, 2)))
}

/// Kronecker delta as a coefficient.
pub fn kd<K: Coeff>(a: usize, b: usize) -> K {
    K::from_int((a == b) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::{substitute, Var};
    use crate::ring::Ring;

    #[test]
    fn native_and_composite_agree_after_substitution() {
        let conv = MetricConvention::default();
        let native = Strengths::complex_native(conv);
        let composite = Strengths::complex_from_real(conv, Reduction::Extended);
        let to_real = |v: &Var| match v {
            Var::Jet(j) if j.field == Field::Ac || j.field == Field::Acb => {
                let sign = if j.field == Field::Ac { 1 } else { -1 };
                let dirs = j.derivs.dirs();
                let a = ComplexPoly::jet(Field::A, j.component as usize, &dirs);
                let c = ComplexPoly::jet(Field::C, j.component as usize, &dirs);
                Some(&a + &c.scale_by(&Gauss(gi() * gr(Rational::from_integer(sign)))))
            }
            _ => None,
        };
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(substitute(&native.x(a, b, &[2]), to_real), composite.x(a, b, &[2]));
                assert_eq!(substitute(&native.y(a, b, &[]), to_real), composite.y(a, b, &[]));
            }
        }
        assert!(native.x(1, 1, &[]).is_zero());
    }
}
