//! Flat-spacetime tensor algebra over the index range `0..4`.
//!
//! Tensors are stored with all indices down, fully (no packed antisymmetric
//! storage). The metric is diagonal, so raising or lowering an index is a
//! sign flip per component.
//!
//! Conventions (frozen, shared with the numeric evaluators):
//!
//! | quantity          | definition                                   |
//! |-------------------|----------------------------------------------|
//! | `g_ab`            | `diag(s, -s, -s, -s)`, `s = +1` for `+---`   |
//! | `eps_abcd`        | totally antisymmetric, `eps_0123 = e`        |
//! | `F_ab`            | `A_b,a - A_a,b`                              |
//! | `*F_ab`           | `1/2 eps_abcd F^cd`                          |
//! | `kappa_abcd`      | `g_c[a g_b]d`                                |
//! | `Rank3` storage   | `Z[a][b][c]` = `Z_abc`, `c` the current index |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{q, Rational, Ring, Scalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TensorError {
    #[error("tensor is not antisymmetric: M[{a}][{b}] != -M[{b}][{a}]")]
    NotAntisymmetric { a: usize, b: usize },
    #[error("unsupported signature '{0}', expected '+---' or '-+++'")]
    BadSignature(String),
    #[error("epsilon0123 must be +1 or -1, got {0}")]
    BadEpsilon(i64),
    #[error("metric conventions differ: {0} vs {1}")]
    ConventionMismatch(MetricConvention, MetricConvention),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Signature {
    /// `(+,-,-,-)`
    #[serde(rename = "+---")]
    MostlyMinus,
    /// `(-,+,+,+)`
    #[serde(rename = "-+++")]
    MostlyPlus,
}

impl Signature {
    /// Sign of `g_00`.
    pub fn time_sign(self) -> i64 {
        match self {
            Signature::MostlyMinus => 1,
            Signature::MostlyPlus => -1,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Signature::MostlyMinus => f.write_str("+---"),
            Signature::MostlyPlus => f.write_str("-+++"),
        }
    }
}

impl FromStr for Signature {
    type Err = TensorError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+---" => Ok(Signature::MostlyMinus),
            "-+++" => Ok(Signature::MostlyPlus),
            other => Err(TensorError::BadSignature(other.to_string())),
        }
    }
}

/// Metric signature plus orientation of the Levi-Civita symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MetricConvention {
    pub signature: Signature,
    pub epsilon0123: i8,
}

impl Default for MetricConvention {
    fn default() -> Self {
        Self {
            signature: Signature::MostlyMinus,
            epsilon0123: 1,
        }
    }
}

impl fmt::Display for MetricConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} eps0123={:+}", self.signature, self.epsilon0123)
    }
}

impl MetricConvention {
    pub fn new(signature: Signature, epsilon0123: i64) -> Result<Self, TensorError> {
        match epsilon0123 {
            1 | -1 => Ok(Self {
                signature,
                epsilon0123: epsilon0123 as i8,
            }),
            e => Err(TensorError::BadEpsilon(e)),
        }
    }

    /// Both supported signatures with `eps_0123 = +1`.
    pub fn all() -> [MetricConvention; 2] {
        [
            MetricConvention::default(),
            MetricConvention {
                signature: Signature::MostlyPlus,
                epsilon0123: 1,
            },
        ]
    }

    /// Diagonal metric entry `g_aa` (equal to `g^aa`).
    pub fn g(&self, a: usize) -> i64 {
        let s = self.signature.time_sign();
        if a == 0 {
            s
        } else {
            -s
        }
    }

    pub fn metric(&self, a: usize, b: usize) -> i64 {
        if a == b {
            self.g(a)
        } else {
            0
        }
    }

    /// `eps_abcd` with all indices down.
    pub fn epsilon(&self, a: usize, b: usize, c: usize, d: usize) -> i64 {
        permutation_sign([a, b, c, d]) * self.epsilon0123 as i64
    }

    /// `eps^abcd` with all indices up.
    pub fn epsilon_up(&self, a: usize, b: usize, c: usize, d: usize) -> i64 {
        self.epsilon(a, b, c, d) * self.g(a) * self.g(b) * self.g(c) * self.g(d)
    }

    /// Overall sign relating `Z_abc` in this convention to its value in the
    /// reference convention (`+---`, `eps_0123 = +1`) for the same physical
    /// electric and magnetic fields.
    pub fn zilch_sign(&self) -> f64 {
        (self.signature.time_sign() * self.epsilon0123 as i64) as f64
    }

    pub fn ensure_same(&self, other: &MetricConvention) -> Result<(), TensorError> {
        if self == other {
            Ok(())
        } else {
            Err(TensorError::ConventionMismatch(*self, *other))
        }
    }
}

/// Sign of a permutation of `0..4`; zero if an index repeats.
pub fn permutation_sign(mut idx: [usize; 4]) -> i64 {
    for i in 0..4 {
        for j in (i + 1)..4 {
            if idx[i] == idx[j] {
                return 0;
            }
        }
    }
    let mut sign = 1;
    for i in 0..4 {
        for j in 0..3 - i {
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    sign
}

/// `kappa_abcd = g_c[a g_b]d`, all indices down.
pub fn kappa(conv: &MetricConvention, a: usize, b: usize, c: usize, d: usize) -> Rational {
    let v = conv.metric(c, a) * conv.metric(b, d) - conv.metric(c, b) * conv.metric(a, d);
    q(v, 2)
}

/// `kappa_ab^cd = 1/2 (delta_a^c delta_b^d - delta_b^c delta_a^d)`.
pub fn kappa_mixed(a: usize, b: usize, c: usize, d: usize) -> Rational {
    let v = (a == c && b == d) as i64 - (b == c && a == d) as i64;
    q(v, 2)
}

pub fn delta(a: usize, b: usize) -> Rational {
    q((a == b) as i64, 1)
}

/// Rank-2 tensor with both indices down. Equality compares components only.
#[derive(Clone, Debug)]
pub struct Rank2<S> {
    pub m: [[S; 4]; 4],
    antisymmetric: bool,
}

impl<S: PartialEq> PartialEq for Rank2<S> {
    fn eq(&self, o: &Self) -> bool {
        self.m == o.m
    }
}

impl<S: Ring> Rank2<S> {
    pub fn from_fn(f: impl FnMut(usize, usize) -> S) -> Self {
        let mut f = f;
        Self {
            m: std::array::from_fn(|a| std::array::from_fn(|b| f(a, b))),
            antisymmetric: false,
        }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| S::zero())
    }

    /// Build a tensor flagged antisymmetric; fails unless `M_ab = -M_ba`
    /// holds exactly.
    pub fn antisymmetric(m: [[S; 4]; 4]) -> Result<Self, TensorError> {
        for a in 0..4 {
            for b in a..4 {
                if m[a][b] != -m[b][a].clone() {
                    return Err(TensorError::NotAntisymmetric { a, b });
                }
            }
        }
        Ok(Self {
            m,
            antisymmetric: true,
        })
    }

    /// Antisymmetric tensor from its upper-triangle entries `M_ab`, `a < b`.
    pub fn from_upper(mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut m: [[S; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| S::zero()));
        for a in 0..4 {
            for b in (a + 1)..4 {
                let v = f(a, b);
                m[b][a] = -v.clone();
                m[a][b] = v;
            }
        }
        Self {
            m,
            antisymmetric: true,
        }
    }

    pub fn is_flagged_antisymmetric(&self) -> bool {
        self.antisymmetric
    }

    pub fn get(&self, a: usize, b: usize) -> &S {
        &self.m[a][b]
    }

    /// `M^ab` as a plain array.
    pub fn raised(&self, conv: &MetricConvention) -> [[S; 4]; 4] {
        std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                self.m[a][b]
                    .clone()
                    .scale(Rational::from_integer(conv.g(a) * conv.g(b)))
            })
        })
    }

    /// `M^a_b` (first index raised).
    pub fn mixed(&self, conv: &MetricConvention) -> [[S; 4]; 4] {
        std::array::from_fn(|a| {
            std::array::from_fn(|b| self.m[a][b].clone().scale(Rational::from_integer(conv.g(a))))
        })
    }

    /// Lower both indices of an array holding `M^ab`.
    pub fn lower_from(up: &[[S; 4]; 4], conv: &MetricConvention) -> Self {
        Self::from_fn(|a, b| {
            up[a][b]
                .clone()
                .scale(Rational::from_integer(conv.g(a) * conv.g(b)))
        })
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Rank2<T> {
        Rank2 {
            m: std::array::from_fn(|a| std::array::from_fn(|b| f(&self.m[a][b]))),
            antisymmetric: self.antisymmetric,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Rank2 {
            m: std::array::from_fn(|a| {
                std::array::from_fn(|b| self.m[a][b].clone() + other.m[a][b].clone())
            }),
            antisymmetric: self.antisymmetric && other.antisymmetric,
        }
    }

    pub fn scaled(&self, r: Rational) -> Self {
        Rank2 {
            m: std::array::from_fn(|a| std::array::from_fn(|b| self.m[a][b].clone().scale(r))),
            antisymmetric: self.antisymmetric,
        }
    }
}

impl<S: Scalar> Rank2<S> {
    pub fn max_abs(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|x| x.magnitude())
            .fold(0.0, f64::max)
    }
}

/// Rank-3 tensor `T_abc`, all indices down.
#[derive(Clone, Debug, PartialEq)]
pub struct Rank3<S> {
    pub t: [[[S; 4]; 4]; 4],
}

impl<S: Ring> Rank3<S> {
    pub fn from_fn(mut f: impl FnMut(usize, usize, usize) -> S) -> Self {
        Self {
            t: std::array::from_fn(|a| {
                std::array::from_fn(|b| std::array::from_fn(|c| f(a, b, c)))
            }),
        }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _, _| S::zero())
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &S {
        &self.t[a][b][c]
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_fn(|a, b, c| self.t[a][b][c].clone() + o.t[a][b][c].clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_fn(|a, b, c| self.t[a][b][c].clone() - o.t[a][b][c].clone())
    }

    /// Lower the last index of an array holding `T_ab^c`.
    pub fn lower_last(up: &Self, conv: &MetricConvention) -> Self {
        Self::from_fn(|a, b, c| up.t[a][b][c].clone().scale(Rational::from_integer(conv.g(c))))
    }

    /// `T_(ab)c`
    pub fn symmetrize_first_pair(&self) -> Self {
        Self::from_fn(|a, b, c| (self.t[a][b][c].clone() + self.t[b][a][c].clone()).scale(q(1, 2)))
    }

    /// `T_(abc)`
    pub fn symmetrize_all(&self) -> Self {
        Self::from_fn(|a, b, c| {
            let perms = [
                (a, b, c),
                (a, c, b),
                (b, a, c),
                (b, c, a),
                (c, a, b),
                (c, b, a),
            ];
            perms
                .iter()
                .fold(S::zero(), |acc, &(x, y, z)| acc + self.t[x][y][z].clone())
                .scale(q(1, 6))
        })
    }

    /// `T^a_ac` as a covector in `c`.
    pub fn trace_first_pair(&self, conv: &MetricConvention) -> [S; 4] {
        std::array::from_fn(|c| {
            (0..4).fold(S::zero(), |acc, a| {
                acc + self.t[a][a][c].clone().scale(Rational::from_integer(conv.g(a)))
            })
        })
    }
}

impl<S: Scalar> Rank3<S> {
    pub fn max_abs(&self) -> f64 {
        self.t
            .iter()
            .flatten()
            .flatten()
            .map(|x| x.magnitude())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        self.sub(o).max_abs()
    }
}

fn dual_components<S: Ring>(m: &[[S; 4]; 4], conv: &MetricConvention) -> [[S; 4]; 4] {
    std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            let mut acc = S::zero();
            for c in 0..4 {
                for d in 0..4 {
                    let e = conv.epsilon(a, b, c, d);
                    if e != 0 {
                        let w = q(e * conv.g(c) * conv.g(d), 2);
                        acc = acc + m[c][d].clone().scale(w);
                    }
                }
            }
            acc
        })
    })
}

/// `*F_ab = 1/2 eps_abcd F^cd`.
pub fn hodge_dual<S: Ring>(f: &Rank2<S>, conv: &MetricConvention) -> Result<Rank2<S>, TensorError> {
    if !f.antisymmetric {
        Rank2::antisymmetric(f.m.clone())?;
    }
    Ok(Rank2 {
        m: dual_components(&f.m, conv),
        antisymmetric: true,
    })
}

/// Dual of an array assumed antisymmetric; used inside formulas where the
/// input is antisymmetric by construction.
pub fn dual_array<S: Ring>(m: &[[S; 4]; 4], conv: &MetricConvention) -> [[S; 4]; 4] {
    dual_components(m, conv)
}

/// `M_[ab] = kappa_ab^cd M_cd`.
pub fn kappa_contract<S: Ring>(m: &Rank2<S>) -> Rank2<S> {
    let out = std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            let mut acc = S::zero();
            for c in 0..4 {
                for d in 0..4 {
                    let k = kappa_mixed(a, b, c, d);
                    if k != q(0, 1) {
                        acc = acc + m.m[c][d].clone().scale(k);
                    }
                }
            }
            acc
        })
    });
    Rank2 {
        m: out,
        antisymmetric: true,
    }
}

/// Matrix product of mixed-index arrays: `(X Y)^a_b = X^a_c Y^c_b`.
pub fn matmul<S: Ring>(x: &[[S; 4]; 4], y: &[[S; 4]; 4]) -> [[S; 4]; 4] {
    std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            (0..4).fold(S::zero(), |acc, c| acc + x[a][c].clone() * y[c][b].clone())
        })
    })
}

pub fn trace<S: Ring>(x: &[[S; 4]; 4]) -> S {
    (0..4).fold(S::zero(), |acc, a| acc + x[a][a].clone())
}

/// Residual of `F *F - 1/4 tr(F *F) 1` as mixed-index components.
///
/// The dual is taken by the component formula without an antisymmetry
/// check, so a non-antisymmetric input produces a genuine residual.
pub fn kibble_matrix_residual<S: Ring>(f: &Rank2<S>, conv: &MetricConvention) -> [[S; 4]; 4] {
    let dual = dual_components(&f.m, conv);
    let fm = f.mixed(conv);
    let dm = Rank2 {
        m: dual,
        antisymmetric: false,
    }
    .mixed(conv);
    let prod = matmul(&fm, &dm);
    let quarter = trace(&prod).scale(q(1, 4));
    std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            if a == b {
                prod[a][b].clone() - quarter.clone()
            } else {
                prod[a][b].clone()
            }
        })
    })
}

/// Check `F *F = 1/4 tr(F *F) 1`: exactly for exact rings, otherwise within
/// `tol` relative to `max|F|^2`. Inputs that are not antisymmetric fail.
pub fn verify_kibble_matrix_identity<S: Scalar>(f: &Rank2<S>, conv: &MetricConvention, tol: f64) -> bool {
    let scale = f.max_abs().powi(2).max(f64::MIN_POSITIVE);
    let antisym = (0..4).all(|a| {
        (0..4).all(|b| {
            let s = f.m[a][b].clone() + f.m[b][a].clone();
            if S::is_exact() {
                s.is_zero()
            } else {
                s.magnitude() <= tol * scale.sqrt()
            }
        })
    });
    if !antisym {
        return false;
    }
    let r = kibble_matrix_residual(f, conv);
    if S::is_exact() {
        r.iter().flatten().all(|x| x.is_zero())
    } else {
        r.iter().flatten().all(|x| x.magnitude() <= tol * scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_antisym(rng: &mut ChaCha8Rng) -> Rank2<Rational> {
        Rank2::from_upper(|_, _| q(rng.random_range(-9..=9), rng.random_range(1..=5)))
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(permutation_sign([0, 1, 2, 3]), 1);
        assert_eq!(permutation_sign([1, 0, 2, 3]), -1);
        assert_eq!(permutation_sign([3, 2, 1, 0]), 1);
        assert_eq!(permutation_sign([0, 0, 2, 3]), 0);
    }

    #[test]
    fn dual_of_zero_is_zero() {
        let z = Rank2::<Rational>::from_upper(|_, _| q(0, 1));
        for conv in MetricConvention::all() {
            assert_eq!(hodge_dual(&z, &conv).unwrap(), z);
        }
    }

    #[test]
    fn dual_of_f01() {
        // Brute force: *F_ab = 1/2 eps_abcd g^cc g^dd F_cd with only F_01 = -F_10 = 1.
        // In +--- with eps_0123 = +1: F^01 = -1, so *F_23 = 1/2 (eps_2301 F^01 + eps_2310 F^10) = -1.
        let f = Rank2::from_upper(|a, b| if (a, b) == (0, 1) { q(1, 1) } else { q(0, 1) });
        let conv = MetricConvention::default();
        let d = hodge_dual(&f, &conv).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let expect = match (a, b) {
                    (2, 3) => q(-1, 1),
                    (3, 2) => q(1, 1),
                    _ => q(0, 1),
                };
                assert_eq!(d.m[a][b], expect, "({a},{b})");
            }
        }
        // Flipping the orientation flips the dual; flipping the signature leaves
        // g^00 g^11 unchanged so the value is the same.
        let other = MetricConvention::new(Signature::MostlyPlus, 1).unwrap();
        assert_eq!(hodge_dual(&f, &other).unwrap().m[2][3], q(-1, 1));
        let flipped = MetricConvention::new(Signature::MostlyMinus, -1).unwrap();
        assert_eq!(hodge_dual(&f, &flipped).unwrap().m[2][3], q(1, 1));
    }

    #[test]
    fn double_dual_is_minus_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for conv in MetricConvention::all() {
            for _ in 0..20 {
                let f = random_antisym(&mut rng);
                let dd = hodge_dual(&hodge_dual(&f, &conv).unwrap(), &conv).unwrap();
                assert_eq!(dd, f.scaled(q(-1, 1)));
            }
        }
    }

    #[test]
    fn dual_rejects_symmetric_input() {
        let s = Rank2::from_fn(|a, b| q((a + b) as i64, 1));
        assert!(matches!(
            hodge_dual(&s, &MetricConvention::default()),
            Err(TensorError::NotAntisymmetric { .. })
        ));
    }

    #[test]
    fn kappa_symmetries() {
        for conv in MetricConvention::all() {
            for a in 0..4 {
                for b in 0..4 {
                    for c in 0..4 {
                        for d in 0..4 {
                            let k = kappa(&conv, a, b, c, d);
                            assert_eq!(k, kappa(&conv, c, d, a, b));
                            assert_eq!(k, -kappa(&conv, b, a, c, d));
                            let cyclic = kappa(&conv, a, b, c, d)
                                + kappa(&conv, a, c, d, b)
                                + kappa(&conv, a, d, b, c);
                            assert_eq!(cyclic, q(0, 1));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kappa_projects_antisymmetric_part() {
        let sym = Rank2::from_fn(|a, b| q((a * b + a + b) as i64, 1));
        assert_eq!(kappa_contract(&sym), Rank2::zero());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let anti = random_antisym(&mut rng);
        assert_eq!(kappa_contract(&anti).m, anti.m);
        let e01 = Rank2::from_fn(|a, b| if (a, b) == (0, 1) { q(1, 1) } else { q(0, 1) });
        let p = kappa_contract(&e01);
        assert_eq!(p.m[0][1], q(1, 2));
        assert_eq!(p.m[1][0], q(-1, 2));
    }

    #[test]
    fn kappa_mixed_matches_raised_kappa() {
        for conv in MetricConvention::all() {
            for a in 0..4 {
                for b in 0..4 {
                    for c in 0..4 {
                        for d in 0..4 {
                            let raised = kappa(&conv, a, b, c, d) * q(conv.g(c) * conv.g(d), 1);
                            assert_eq!(raised, kappa_mixed(a, b, c, d));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn raise_then_lower_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for conv in MetricConvention::all() {
            let m = Rank2::from_fn(|_, _| q(rng.random_range(-5..5), 3));
            assert_eq!(Rank2::lower_from(&m.raised(&conv), &conv).m, m.m);
            let fm = Rank2::from_fn(|_, _| rng.random_range(-1.0..1.0));
            assert_eq!(Rank2::lower_from(&fm.raised(&conv), &conv).m, fm.m);
        }
    }

    #[test]
    fn kibble_identity_exact_and_float() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for conv in MetricConvention::all() {
            assert!(verify_kibble_matrix_identity(&Rank2::<Rational>::from_upper(|_, _| q(0, 1)), &conv, 0.0));
            for _ in 0..20 {
                assert!(verify_kibble_matrix_identity(&random_antisym(&mut rng), &conv, 0.0));
            }
            let ff = Rank2::from_upper(|_, _| rng.random_range(-1.0..1.0));
            assert!(verify_kibble_matrix_identity(&ff, &conv, 1e-13));
        }
    }

    #[test]
    fn kibble_identity_fails_for_symmetric_matrix() {
        let s = Rank2::from_fn(|a, b| if (a, b) == (0, 1) || (a, b) == (1, 0) { q(1, 1) } else { q(0, 1) });
        assert!(!verify_kibble_matrix_identity(&s, &MetricConvention::default(), 0.0));
    }

    #[test]
    fn symmetric_part_is_invisible_to_the_dual() {
        // Scan all symmetric matrices with entries in {-1, 0, 1} on a few
        // slots: the dual annihilates them, so the raw residual vanishes and
        // only the antisymmetry precondition can reject them.
        let conv = MetricConvention::default();
        for bits in 0..81u32 {
            let mut v = bits;
            let mut e = [0i64; 4];
            for slot in e.iter_mut() {
                *slot = (v % 3) as i64 - 1;
                v /= 3;
            }
            let s = Rank2::from_fn(|a, b| match (a.min(b), a.max(b)) {
                (0, 1) => q(e[0], 1),
                (1, 2) => q(e[1], 1),
                (0, 3) => q(e[2], 1),
                (2, 2) => q(e[3], 1),
                _ => q(0, 1),
            });
            let r = kibble_matrix_residual(&s, &conv);
            assert!(r.iter().flatten().all(|x| *x == q(0, 1)));
        }
    }

    #[test]
    fn generic_matrix_has_genuine_residual() {
        // antisymmetric part plus a symmetric perturbation
        let m = Rank2::from_fn(|a, b| match (a, b) {
            (0, 1) => q(1, 1),
            (1, 0) => q(-1, 1),
            (2, 3) => q(2, 1),
            (3, 2) => q(-2, 1),
            (0, 2) | (2, 0) => q(1, 1),
            _ => q(0, 1),
        });
        let r = kibble_matrix_residual(&m, &MetricConvention::default());
        assert!(r.iter().flatten().any(|x| *x != q(0, 1)));
    }
}
