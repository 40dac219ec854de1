use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::ring::{fmt_gauss, fmt_rational, GaussRational, Rational, Ring, Scalar};

use super::coord::{Derivs, Field, JetCoordinate, StrengthCoordinate, Var};

/// Highest total degree of a monomial.
pub const MAX_DEGREE: usize = 4;

/// Sorted product of variables (with repetition).
pub type Monomial = SmallVec<[Var; MAX_DEGREE]>;

/// Exact coefficient ring of a [`JetPolynomial`].
pub trait Coeff: Scalar + Ord {
    fn render(&self) -> String;
    fn conj(&self) -> Self;
    fn to_gauss(&self) -> GaussRational;
}

impl Coeff for Rational {
    fn render(&self) -> String {
        fmt_rational(self)
    }
    fn conj(&self) -> Self {
        *self
    }
    fn to_gauss(&self) -> GaussRational {
        GaussRational::new(*self, Rational::from_integer(0))
    }
}

/// Gaussian rationals ordered lexicographically by (re, im); the order only
/// serves deterministic sorting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gauss(pub GaussRational);

impl PartialOrd for Gauss {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gauss {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.re, self.0.im).cmp(&(other.0.re, other.0.im))
    }
}

impl Add for Gauss {
    type Output = Gauss;
    fn add(self, o: Gauss) -> Gauss {
        Gauss(self.0 + o.0)
    }
}
impl Sub for Gauss {
    type Output = Gauss;
    fn sub(self, o: Gauss) -> Gauss {
        Gauss(self.0 - o.0)
    }
}
impl Mul for Gauss {
    type Output = Gauss;
    fn mul(self, o: Gauss) -> Gauss {
        Gauss(self.0 * o.0)
    }
}
impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss(-self.0)
    }
}

impl Ring for Gauss {
    fn zero() -> Self {
        Gauss(<GaussRational as Ring>::zero())
    }
    fn one() -> Self {
        Gauss(<GaussRational as Ring>::one())
    }
    fn from_ratio(r: Rational) -> Self {
        Gauss(<GaussRational as Ring>::from_ratio(r))
    }
    fn is_zero(&self) -> bool {
        Ring::is_zero(&self.0)
    }
}

impl Scalar for Gauss {
    fn magnitude(&self) -> f64 {
        self.0.magnitude()
    }
    fn is_exact() -> bool {
        true
    }
}

impl Coeff for Gauss {
    fn render(&self) -> String {
        fmt_gauss(&self.0)
    }
    fn conj(&self) -> Self {
        Gauss(self.0.conj())
    }
    fn to_gauss(&self) -> GaussRational {
        self.0
    }
}

/// Exact sparse polynomial in jet coordinates, explicit coordinates `x^a`
/// and deferred field-strength symbols.
///
/// Zero coefficients are never stored, so two polynomials in potential jets
/// are equal exactly when their term maps coincide.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct JetPolynomial<K> {
    terms: BTreeMap<Monomial, K>,
}

pub type RealPoly = JetPolynomial<Rational>;
pub type ComplexPoly = JetPolynomial<Gauss>;

impl<K: Coeff> JetPolynomial<K> {
    pub fn new() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: K) -> Self {
        let mut p = Self::new();
        p.add_term(Monomial::new(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut m = Monomial::new();
        m.push(v);
        let mut p = Self::new();
        p.add_term(m, K::one());
        p
    }

    pub fn jet(field: Field, component: usize, dirs: &[usize]) -> Self {
        Self::var(Var::Jet(JetCoordinate::new(field, component, dirs)))
    }

    pub fn coord(a: usize) -> Self {
        Self::var(Var::Coord(a as u8))
    }

    /// Deferred `G_{ab,K}`; antisymmetry is applied here, so `a > b` yields
    /// `-G_{ba,K}` and `a == b` yields zero.
    pub fn strength(a: usize, b: usize, dirs: &[usize]) -> Self {
        if a == b {
            return Self::new();
        }
        let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        let p = Self::var(Var::Strength(StrengthCoordinate {
            a: lo as u8,
            b: hi as u8,
            derivs: Derivs::from_dirs(dirs),
        }));
        if sign < 0 {
            -p
        } else {
            p
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&K> {
        self.terms.get(m)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        assert!(
            m.len() <= MAX_DEGREE,
            "monomial degree {} exceeds the cap of {MAX_DEGREE}",
            m.len()
        );
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_assign_ref(&mut self, o: &Self) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale_by(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        let mut out = Self::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(merge(m1, m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Highest derivative order among potential jets (deferred strengths
    /// count as order `|K| + 1`).
    pub fn max_order(&self) -> u8 {
        self.vars()
            .map(|v| match v {
                Var::Jet(j) => j.order(),
                Var::Strength(s) => s.derivs.order() + 1,
                Var::Coord(_) => 0,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    /// Distinct variables, sorted.
    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        let mut all: Vec<Var> = self.terms.keys().flat_map(|m| m.iter().copied()).collect();
        all.sort();
        all.dedup();
        all.into_iter()
    }

    pub fn contains_field(&self, field: Field) -> bool {
        self.vars().any(|v| matches!(v, Var::Jet(j) if j.field == field))
    }

    pub fn contains_strengths(&self) -> bool {
        self.vars().any(|v| matches!(v, Var::Strength(_)))
    }

    /// Deterministic text form: one monomial per line, coefficient first,
    /// then the variables in sorted order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (m, c) in &self.terms {
            out.push_str(&c.render());
            for v in m {
                out.push(' ');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// Apply a coefficient map (for example a ring embedding).
    pub fn map_coeffs<K2: Coeff>(&self, f: impl Fn(&K) -> K2) -> JetPolynomial<K2> {
        let mut out = JetPolynomial::new();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl JetPolynomial<Rational> {
    /// Embed into the Gaussian rationals.
    pub fn complexify(&self) -> ComplexPoly {
        self.map_coeffs(|c| Gauss(c.to_gauss()))
    }

    pub fn eval_f64(&self, val: impl Fn(&Var) -> f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let c = *c.numer() as f64 / *c.denom() as f64;
                m.iter().fold(c, |acc, v| acc * val(v))
            })
            .sum()
    }
}

impl JetPolynomial<Gauss> {
    /// Real and imaginary parts.
    pub fn split(&self) -> (RealPoly, RealPoly) {
        let mut re = RealPoly::new();
        let mut im = RealPoly::new();
        for (m, c) in &self.terms {
            re.add_term(m.clone(), c.0.re);
            im.add_term(m.clone(), c.0.im);
        }
        (re, im)
    }

    pub fn from_rational(p: &RealPoly) -> Self {
        p.complexify()
    }
}

fn merge(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Monomial::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

pub(crate) fn sorted(mut m: Monomial) -> Monomial {
    m.sort();
    m
}

impl<K: Coeff> fmt::Debug for JetPolynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(self.to_text().trim_end())
    }
}

impl<K: Coeff> fmt::Display for JetPolynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<K: Coeff> Add for JetPolynomial<K> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        if self.terms.len() < o.terms.len() {
            let mut o = o;
            o.add_assign_ref(&self);
            return o;
        }
        self.add_assign_ref(&o);
        self
    }
}

impl<K: Coeff> Sub for JetPolynomial<K> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<K: Coeff> Neg for JetPolynomial<K> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<K: Coeff> Mul for JetPolynomial<K> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl<K: Coeff> Add for &JetPolynomial<K> {
    type Output = JetPolynomial<K>;
    fn add(self, o: Self) -> JetPolynomial<K> {
        let mut out = self.clone();
        out.add_assign_ref(o);
        out
    }
}

impl<K: Coeff> Sub for &JetPolynomial<K> {
    type Output = JetPolynomial<K>;
    fn sub(self, o: Self) -> JetPolynomial<K> {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<K: Coeff> Mul for &JetPolynomial<K> {
    type Output = JetPolynomial<K>;
    fn mul(self, o: Self) -> JetPolynomial<K> {
        self.mul_ref(o)
    }
}

impl<K: Coeff> Ring for JetPolynomial<K> {
    fn zero() -> Self {
        Self::new()
    }
    fn one() -> Self {
        Self::constant(K::one())
    }
    fn from_ratio(r: Rational) -> Self {
        Self::constant(K::from_ratio(r))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn scale(self, r: Rational) -> Self {
        self.scale_by(&K::from_ratio(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    fn a(c: usize, d: &[usize]) -> RealPoly {
        RealPoly::jet(Field::A, c, d)
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = &a(0, &[1]) - &a(0, &[1]);
        assert!(p.is_empty());
        let p = &a(0, &[1, 2]) - &a(0, &[2, 1]);
        assert!(p.is_empty());
    }

    #[test]
    fn product_is_sorted_and_commutative() {
        let p = &a(1, &[]) * &a(0, &[3]);
        let r = &a(0, &[3]) * &a(1, &[]);
        assert_eq!(p, r);
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn text_form_is_deterministic() {
        let p = a(0, &[2, 1]).scale(q(-1, 2)) + RealPoly::from_int(3) * RealPoly::jet(Field::C, 3, &[]);
        assert_eq!(p.to_text(), "-1/2 A[0;12]\n3 C[3;]\n");
        let z = ComplexPoly::jet(Field::Ac, 1, &[0]).scale_by(&Gauss(crate::ring::gi()));
        assert_eq!(z.to_text(), "(0+1i) Ac[1;0]\n");
    }

    #[test]
    fn strength_symbol_is_antisymmetric() {
        let g = RealPoly::strength(2, 1, &[0]);
        assert_eq!(g, -RealPoly::strength(1, 2, &[0]));
        assert!(RealPoly::strength(3, 3, &[]).is_empty());
    }

    #[test]
    #[should_panic(expected = "exceeds the cap")]
    fn degree_cap_is_asserted() {
        let x = a(0, &[]);
        let x5 = &(&(&(&x * &x) * &x) * &x) * &x;
        drop(x5);
    }
}
