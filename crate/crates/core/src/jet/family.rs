use std::collections::BTreeMap;

use rayon::prelude::*;

use super::coord::Field;
use super::poly::{Coeff, JetPolynomial};

/// A tensor-valued symbolic quantity: one polynomial per assignment of its
/// free indices, stored densely in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeIndexFamily<K: Coeff> {
    slots: Vec<String>,
    entries: Vec<JetPolynomial<K>>,
}

fn unflatten(mut flat: usize, rank: usize) -> Vec<usize> {
    let mut idx = vec![0; rank];
    for slot in idx.iter_mut().rev() {
        *slot = flat % 4;
        flat /= 4;
    }
    idx
}

fn flatten(idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| {
        debug_assert!(i < 4);
        acc * 4 + i
    })
}

impl<K: Coeff> FreeIndexFamily<K> {
    /// Build every entry in parallel. `slots` names the free indices.
    pub fn build<F>(slots: &[&str], f: F) -> Self
    where
        F: Fn(&[usize]) -> JetPolynomial<K> + Sync,
    {
        let rank = slots.len();
        let entries = (0..4usize.pow(rank as u32))
            .into_par_iter()
            .map(|flat| f(&unflatten(flat, rank)))
            .collect();
        Self {
            slots: slots.iter().map(|s| s.to_string()).collect(),
            entries,
        }
    }

    /// Fallible variant of [`FreeIndexFamily::build`].
    pub fn try_build<E, F>(slots: &[&str], f: F) -> Result<Self, E>
    where
        E: Send,
        F: Fn(&[usize]) -> Result<JetPolynomial<K>, E> + Sync,
    {
        let rank = slots.len();
        let entries = (0..4usize.pow(rank as u32))
            .into_par_iter()
            .map(|flat| f(&unflatten(flat, rank)))
            .collect::<Result<Vec<_>, E>>()?;
        Ok(Self {
            slots: slots.iter().map(|s| s.to_string()).collect(),
            entries,
        })
    }

    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[String] {
        &self.slots
    }

    pub fn get(&self, idx: &[usize]) -> &JetPolynomial<K> {
        assert_eq!(idx.len(), self.rank(), "index count does not match family rank");
        &self.entries[flatten(idx)]
    }

    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &JetPolynomial<K>)> {
        let rank = self.rank();
        self.entries.iter().enumerate().map(move |(i, p)| (unflatten(i, rank), p))
    }

    /// Entry-wise map, in parallel.
    pub fn map<K2: Coeff>(&self, f: impl Fn(&[usize], &JetPolynomial<K>) -> JetPolynomial<K2> + Sync) -> FreeIndexFamily<K2> {
        let rank = self.rank();
        let entries = self
            .entries
            .par_iter()
            .enumerate()
            .map(|(i, p)| f(&unflatten(i, rank), p))
            .collect();
        FreeIndexFamily {
            slots: self.slots.clone(),
            entries,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.rank(), o.rank());
        self.map(|idx, p| p - o.get(idx))
    }

    pub fn is_identically_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_empty())
    }

    /// First nonzero entry, if any.
    pub fn witness(&self) -> Option<(Vec<usize>, &JetPolynomial<K>)> {
        self.entries().find(|(_, p)| !p.is_empty())
    }

    /// Whether swapping slots `i` and `j` leaves every entry unchanged.
    pub fn is_symmetric_in(&self, i: usize, j: usize) -> bool {
        self.entries().all(|(idx, p)| {
            let mut sw = idx.clone();
            sw.swap(i, j);
            self.get(&sw) == p
        })
    }
}

/// Generalized symmetry generator in evolutionary form: one characteristic
/// per (field, component).
#[derive(Clone, Debug, PartialEq, Default)]
pub struct EvolutionaryField<K: Coeff> {
    characteristic: BTreeMap<(Field, u8), JetPolynomial<K>>,
}

impl<K: Coeff> EvolutionaryField<K> {
    pub fn new() -> Self {
        Self {
            characteristic: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, field: Field, component: usize, q: JetPolynomial<K>) {
        assert!(component < 4);
        self.characteristic.insert((field, component as u8), q);
    }

    pub fn get(&self, field: Field, component: usize) -> Option<&JetPolynomial<K>> {
        self.characteristic.get(&(field, component as u8))
    }

    pub fn iter(&self) -> impl Iterator<Item = ((Field, usize), &JetPolynomial<K>)> {
        self.characteristic.iter().map(|(&(f, c), q)| ((f, c as usize), q))
    }

    pub fn fields(&self) -> impl Iterator<Item = Field> + '_ {
        let mut v: Vec<Field> = self.characteristic.keys().map(|k| k.0).collect();
        v.dedup();
        v.into_iter()
    }

    /// Highest jet order among the characteristic components.
    pub fn max_order(&self) -> u8 {
        self.characteristic.values().map(|q| q.max_order()).max().unwrap_or(0)
    }
}
