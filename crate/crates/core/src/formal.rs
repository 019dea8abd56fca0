//! Formal linear combinations over an ordered basis.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use crate::scalar::Coeff;

/// Finite linear combination; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FormalSum<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord, C> Default for FormalSum<K, C> {
    fn default() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, C: Coeff> FormalSum<K, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(k: K, c: C) -> Self {
        let mut s = Self::zero();
        s.add_term(k, c);
        s
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, C::one())
    }

    pub fn add_term(&mut self, k: K, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn coeff(&self, k: &K) -> C {
        self.terms.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, C> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &o.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &o.terms {
            out.add_term(k.clone(), -v.clone());
        }
        out
    }

    /// Bilinear product given a rule on basis pairs.
    pub fn bilinear<F>(&self, o: &Self, mut rule: F) -> Self
    where
        F: FnMut(&K, &K) -> Self,
    {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let c = ca.clone() * cb.clone();
                for (k, v) in rule(a, b).terms {
                    out.add_term(k, v * c.clone());
                }
            }
        }
        out
    }

    /// Linear extension of a map on basis keys.
    pub fn linear<K2, F>(&self, mut f: F) -> FormalSum<K2, C>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> FormalSum<K2, C>,
    {
        let mut out = FormalSum::zero();
        for (k, c) in &self.terms {
            for (k2, v) in f(k).terms {
                out.add_term(k2, v * c.clone());
            }
        }
        out
    }

    pub fn map_coeffs<C2: Coeff, F: FnMut(&C) -> C2>(&self, mut f: F) -> FormalSum<K, C2> {
        let mut out = FormalSum::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }
}

impl<K: Ord + Clone, C: Coeff> FromIterator<(K, C)> for FormalSum<K, C> {
    fn from_iter<I: IntoIterator<Item = (K, C)>>(it: I) -> Self {
        let mut s = Self::zero();
        for (k, c) in it {
            s.add_term(k, c);
        }
        s
    }
}

impl<'a, K: Ord, C> IntoIterator for &'a FormalSum<K, C> {
    type Item = (&'a K, &'a C);
    type IntoIter = btree_map::Iter<'a, K, C>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + fmt::Display, C: fmt::Display> fmt::Display for FormalSum<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{k}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    #[test]
    fn cancellation_prunes() {
        let mut s: FormalSum<u32, Rational> = FormalSum::term(1, rat(2));
        s.add_term(1, rat(-2));
        assert!(s.is_zero());
        s.add_term(3, rat(0));
        assert!(s.is_empty());
    }

    #[test]
    fn bilinear_matches_manual() {
        let a: FormalSum<u32, Rational> = [(1, rat(1)), (2, rat(3))].into_iter().collect();
        let b: FormalSum<u32, Rational> = [(1, rat(2))].into_iter().collect();
        let p = a.bilinear(&b, |x, y| FormalSum::basis(x + y));
        assert_eq!(p.coeff(&2), rat(2));
        assert_eq!(p.coeff(&3), rat(6));
        assert_eq!(a.sub(&a), FormalSum::zero());
    }
}
