//! Finite linear combinations with Laurent coefficients.
//!
//! Polynomials, tensors and exterior-algebra elements are all instances of
//! [`LinComb`] over different basis types; the key's `Ord` decides the term
//! order used for iteration and rendering.

use alloc::collections::BTreeMap;
use core::ops::{AddAssign, Neg, SubAssign};

use crate::laurent::LaurentPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, LaurentPoly>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single term `coeff * key`.
    pub fn term(key: K, coeff: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, LaurentPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending key order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&K, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl DoubleEndedIterator<Item = &K> + '_ {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> Option<&LaurentPoly> {
        self.terms.get(key)
    }

    /// Greatest key with a nonzero coefficient.
    pub fn leading(&self) -> Option<(&K, &LaurentPoly)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, key: K, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += &coeff;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    /// `self += coeff * other`.
    pub fn add_scaled(&mut self, other: &Self, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * coeff);
        }
    }

    pub fn scale(&self, coeff: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, coeff);
        out
    }

    /// Removes and returns the greatest term.
    pub fn pop_last(&mut self) -> Option<(K, LaurentPoly)> {
        self.terms.pop_last()
    }

    /// Linear extension of `f` from basis keys to combinations over `L`.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Applies a coefficient map and drops terms that become zero.
    pub fn map_coeffs(&self, mut f: impl FnMut(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, LaurentPoly)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, LaurentPoly)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> IntoIterator for LinComb<K> {
    type Item = (K, LaurentPoly);
    type IntoIter = alloc::collections::btree_map::IntoIter<K, LaurentPoly>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c);
        }
    }
}

impl<K: Ord + Clone> core::ops::Add<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> core::ops::Sub<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.map_coeffs(|c| -c)
    }
}

impl<K: Ord + Clone + core::fmt::Debug> core::fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
