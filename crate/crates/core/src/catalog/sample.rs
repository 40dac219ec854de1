use std::collections::HashMap;
use std::sync::LazyLock;

use rand::Rng;

use crate::jet::{Derivs, Field};
use crate::ring::{Dual, Ring};

/// Number of sorted multi-indices of order at most 3 in four dimensions.
pub const NDERIV: usize = 35;

/// Storage order of the derivative slots: by order, then by sorted counts.
pub static MULTI_INDICES: LazyLock<Vec<Derivs>> =
    LazyLock::new(|| (0..=3).flat_map(Derivs::all_of_order).collect());

static SLOTS: LazyLock<HashMap<Derivs, usize>> =
    LazyLock::new(|| MULTI_INDICES.iter().enumerate().map(|(i, d)| (*d, i)).collect());

/// Slot of a multi-index, or `None` beyond order 3.
pub fn deriv_slot(d: &Derivs) -> Option<usize> {
    SLOTS.get(d).copied()
}

/// Numeric jet point: every symmetrized derivative of every component of
/// `A` and `C` through order `depth`. Slots above `depth` hold zero.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldSample<S> {
    pub event: [f64; 4],
    pub depth: u8,
    pub a: [[S; NDERIV]; 4],
    pub c: [[S; NDERIV]; 4],
}

impl<S: Ring> FieldSample<S> {
    pub fn from_fn(event: [f64; 4], depth: u8, mut f: impl FnMut(Field, usize, &Derivs) -> S) -> Self {
        let mut table = |field: Field| -> [[S; NDERIV]; 4] {
            std::array::from_fn(|comp| {
                std::array::from_fn(|k| {
                    let j = &MULTI_INDICES[k];
                    if j.order() <= depth {
                        f(field, comp, j)
                    } else {
                        S::zero()
                    }
                })
            })
        };
        let a = table(Field::A);
        let c = table(Field::C);
        Self { event, depth, a, c }
    }

    pub fn zero(event: [f64; 4]) -> Self {
        Self::from_fn(event, 3, |_, _, _| S::zero())
    }

    /// `d_dirs u_comp` for `u` one of `A`, `C`.
    pub fn d(&self, field: Field, comp: usize, dirs: &[usize]) -> S {
        let j = Derivs::from_dirs(dirs);
        debug_assert!(j.order() <= self.depth, "sample depth {} < {}", self.depth, j.order());
        let k = deriv_slot(&j).expect("derivative order <= 3");
        match field {
            Field::A => self.a[comp][k].clone(),
            Field::C => self.c[comp][k].clone(),
            other => panic!("no {} jets in a real sample", other.label()),
        }
    }

    /// `u_b,aK - u_a,bK`, i.e. `F` for `A` and `G` for `C`.
    pub fn strength(&self, field: Field, a: usize, b: usize, dirs: &[usize]) -> S {
        let with = |first: usize| {
            let mut v = Vec::with_capacity(dirs.len() + 1);
            v.push(first);
            v.extend_from_slice(dirs);
            v
        };
        self.d(field, b, &with(a)) - self.d(field, a, &with(b))
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> FieldSample<T> {
        FieldSample {
            event: self.event,
            depth: self.depth,
            a: std::array::from_fn(|c| std::array::from_fn(|k| f(&self.a[c][k]))),
            c: std::array::from_fn(|c| std::array::from_fn(|k| f(&self.c[c][k]))),
        }
    }
}

impl FieldSample<f64> {
    /// Dual sample whose slope is the derivative along `dir`. Exact for
    /// slots below the top order, so the result has one order less depth.
    pub fn directional(&self, dir: [f64; 4]) -> FieldSample<Dual> {
        let depth = self.depth.saturating_sub(1);
        let slope = |t: &[[f64; NDERIV]; 4], comp: usize, j: &Derivs| -> f64 {
            (0..4)
                .filter(|&d| dir[d] != 0.0)
                .map(|d| dir[d] * t[comp][deriv_slot(&j.with(d)).expect("below top order")])
                .sum()
        };
        FieldSample::from_fn(self.event, depth, |field, comp, j| {
            let t = if field == Field::A { &self.a } else { &self.c };
            Dual::new(t[comp][deriv_slot(j).expect("stored")], slope(t, comp, j))
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.a.iter().chain(self.c.iter()).flatten().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        let (x, y) = (self.a.iter().chain(self.c.iter()).flatten(), o.a.iter().chain(o.c.iter()).flatten());
        x.zip(y).fold(0.0, |m, (u, v)| m.max((u - v).abs()))
    }
}

/// Independent uniform values in `[-1, 1]` for every jet slot: a generic
/// off-shell point.
pub fn random_jets(rng: &mut impl Rng, event: [f64; 4]) -> FieldSample<f64> {
    FieldSample::from_fn(event, 3, |_, _, _| rng.random_range(-1.0..=1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slots_cover_order_three() {
        assert_eq!(MULTI_INDICES.len(), NDERIV);
        assert_eq!(deriv_slot(&Derivs::none()), Some(0));
        assert_eq!(deriv_slot(&Derivs::from_dirs(&[3, 0, 1])), deriv_slot(&Derivs::from_dirs(&[0, 1, 3])));
        assert!(deriv_slot(&Derivs::from_dirs(&[0, 0, 0, 0])).is_none());
    }
}
