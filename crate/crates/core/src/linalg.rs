//! Sparse Gaussian elimination over the rationals.

use std::collections::BTreeMap;
use std::ops::Bound::{Excluded, Unbounded};

use num_traits::One;

use crate::lincomb::{Key, LinComb};
use crate::scalar::Scalar;

/// Incremental row echelon form that remembers how each row was built
/// from the inserted vectors.
pub struct Echelon<K: Key> {
    rows: Vec<(LinComb<K>, LinComb<usize>)>,
    pivots: BTreeMap<K, usize>,
    inserted: usize,
}

impl<K: Key> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Key> Echelon<K> {
    pub fn new() -> Self {
        Echelon { rows: Vec::new(), pivots: BTreeMap::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: LinComb<K>, mut combo: LinComb<usize>) -> (LinComb<K>, LinComb<usize>) {
        let mut pos: Option<K> = None;
        loop {
            let next = {
                let mut it: Box<dyn Iterator<Item = (&K, &Scalar)>> = match &pos {
                    None => Box::new(v.map().iter()),
                    Some(p) => Box::new(v.map().range((Excluded(p.clone()), Unbounded))),
                };
                it.find(|(k, _)| self.pivots.contains_key(*k)).map(|(k, c)| (k.clone(), c.clone()))
            };
            let Some((k, c)) = next else { break };
            let (row, row_combo) = &self.rows[self.pivots[&k]];
            let neg = -c;
            v.add_scaled(row, &neg);
            combo.add_scaled(row_combo, &neg);
            pos = Some(k);
        }
        (v, combo)
    }

    /// Inserts the next vector; returns whether it was independent.
    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let (r, combo) = self.reduce(v.clone(), LinComb::basis(idx));
        let Some((k, c)) = r.first().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = c.recip();
        self.pivots.insert(k, self.rows.len());
        self.rows.push((r.scale(&inv), combo.scale(&inv)));
        true
    }

    /// Coefficients expressing `target` in the inserted vectors, if it lies in their span.
    pub fn solve(&self, target: &LinComb<K>) -> Option<LinComb<usize>> {
        let (r, combo) = self.reduce(target.clone(), LinComb::zero());
        if r.is_zero() {
            Some(combo.scale(&-Scalar::one()))
        } else {
            None
        }
    }

    pub fn contains(&self, target: &LinComb<K>) -> bool {
        self.reduce(target.clone(), LinComb::zero()).0.is_zero()
    }
}

pub fn rank<K: Key>(vectors: &[LinComb<K>]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use proptest::prelude::*;

    fn v(c: &[i64]) -> LinComb<usize> {
        c.iter().enumerate().map(|(i, &x)| (i, int(x))).collect()
    }

    #[test]
    fn rank_and_solve() {
        let vs = [v(&[1, 2, 0]), v(&[0, 1, 1]), v(&[1, 3, 1])];
        assert_eq!(rank(&vs), 2);
        let mut e = Echelon::new();
        for x in &vs[..2] {
            e.insert(x);
        }
        let sol = e.solve(&v(&[2, 5, 1])).unwrap();
        assert_eq!(sol, v(&[2, 1]));
        assert!(e.solve(&v(&[0, 0, 1])).is_none());
    }

    proptest! {
        #[test]
        fn solve_reconstructs(rows in proptest::collection::vec(proptest::collection::vec(-3i64..4, 4), 1..5),
                              coefs in proptest::collection::vec(-3i64..4, 5)) {
            let vs: Vec<_> = rows.iter().map(|r| v(r)).collect();
            let target: LinComb<usize> = vs.iter().zip(&coefs).map(|(x, &c)| x.scale(&int(c))).sum();
            let mut e = Echelon::new();
            for x in &vs { e.insert(x); }
            let sol = e.solve(&target).unwrap();
            let rebuilt: LinComb<usize> = sol.iter().map(|(&i, c)| vs[i].scale(c)).sum();
            prop_assert_eq!(rebuilt, target);
        }
    }
}
