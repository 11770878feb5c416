//! The universal enveloping algebra U(g) on sorted PBW words, its
//! identification with S^c(g) and the symmetric multibraces of g.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use cha_core::error::check_bound;
use cha_core::hopf::{conv_log, product_of};
use cha_core::words::symmetrize;
use cha_core::{Algebra, Coalgebra, Graded, LinComb, Result, SymWord};

use crate::comas::ComAs;
use crate::lie::LieAlgebra;
use crate::smb::SmbStructure;

pub type Pbw = Vec<usize>;

/// U(g) with the basis of nondecreasing words in the basis order of g.
pub struct Uea {
    lie: Arc<LieAlgebra>,
    bound: usize,
    straight: Mutex<HashMap<Pbw, LinComb<Pbw>>>,
    to_sym: Mutex<HashMap<Pbw, LinComb<SymWord<usize>>>>,
}

impl Uea {
    pub fn new(lie: Arc<LieAlgebra>, bound: usize) -> Self {
        Uea { lie, bound, straight: Mutex::new(HashMap::new()), to_sym: Mutex::new(HashMap::new()) }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Rewrites the first descent x_j x_i (j > i) as x_i x_j + [x_j, x_i]
    /// until the word is sorted.
    pub fn straighten(&self, word: &[usize]) -> LinComb<Pbw> {
        let Some(i) = (1..word.len()).find(|&i| word[i - 1] > word[i]) else {
            return LinComb::basis(word.to_vec());
        };
        if let Some(hit) = self.straight.lock().unwrap().get(word) {
            return hit.clone();
        }
        let mut swapped = word.to_vec();
        swapped.swap(i - 1, i);
        let mut out = self.straighten(&swapped);
        for (&k, c) in self.lie.bracket(word[i - 1], word[i]).iter() {
            let mut shorter = word[..i - 1].to_vec();
            shorter.push(k);
            shorter.extend_from_slice(&word[i + 1..]);
            out.add_scaled(&self.straighten(&shorter), c);
        }
        self.straight.lock().unwrap().insert(word.to_vec(), out.clone());
        out
    }

    pub fn mul(&self, a: &[usize], b: &[usize]) -> Result<LinComb<Pbw>> {
        check_bound(a.len() + b.len(), self.bound)?;
        Ok(self.straighten(&[a, b].concat()))
    }

    /// (1/n!) Σ_σ x_σ(1)⋯x_σ(n), the coalgebra isomorphism S^c(g) → U(g).
    pub fn sym(&self, w: &SymWord<usize>) -> LinComb<Pbw> {
        symmetrize(w, true).map_linear(|word| self.straighten(&word.0))
    }

    pub fn sym_lin(&self, x: &LinComb<SymWord<usize>>) -> LinComb<Pbw> {
        x.map_linear(|w| self.sym(w))
    }

    /// Inverse of [`Uea::sym`]: sym(w) is w plus shorter words.
    pub fn unsym(&self, word: &[usize]) -> LinComb<SymWord<usize>> {
        if let Some(hit) = self.to_sym.lock().unwrap().get(word) {
            return hit.clone();
        }
        let top = SymWord::new(word.to_vec());
        let mut out = LinComb::basis(top.clone());
        let lower = self.sym(&top) - LinComb::basis(word.to_vec());
        for (w, c) in lower.iter() {
            out.add_scaled(&self.unsym(w), &-c.clone());
        }
        self.to_sym.lock().unwrap().insert(word.to_vec(), out.clone());
        out
    }

    pub fn unsym_lin(&self, x: &LinComb<Pbw>) -> LinComb<SymWord<usize>> {
        x.map_linear(|w| self.unsym(w))
    }

    /// e^(1) = log⋆(Id).
    pub fn eulerian_first(&self, x: &LinComb<Pbw>) -> Result<LinComb<Pbw>> {
        conv_log(self, x, self.bound)
    }
}

impl Graded for Uea {
    type Key = Pbw;
    fn unit(&self) -> Pbw {
        Vec::new()
    }
    fn degree(&self, k: &Pbw) -> usize {
        k.len()
    }
}

impl Algebra for Uea {
    fn product(&self, a: &Pbw, b: &Pbw) -> LinComb<Pbw> {
        self.straighten(&[a.as_slice(), b.as_slice()].concat())
    }
}

/// Generators are primitive; subwords of a sorted word are sorted, so Δ is
/// the sum over subsets of positions.
impl Coalgebra for Uea {
    fn coproduct(&self, k: &Pbw) -> LinComb<(Pbw, Pbw)> {
        let n = k.len();
        let mut out = LinComb::zero();
        for mask in 0u64..(1u64 << n) {
            let (mut l, mut r) = (Vec::new(), Vec::new());
            for (i, &g) in k.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    l.push(g);
                } else {
                    r.push(g);
                }
            }
            out.add_term((l, r), cha_core::scalar::one());
        }
        out
    }
}

/// M_pq(x; y) = e^(1)(sym(x) * sym(y)) read in the basis of g.
pub fn lie_to_smb(uea: Arc<Uea>) -> SmbStructure<usize> {
    let bound = uea.bound();
    SmbStructure::new(bound, move |u, v| {
        let prod = product_of(uea.as_ref(), &uea.sym(u), &uea.sym(v));
        let prim = uea.eulerian_first(&prod).expect("within the degree bound");
        debug_assert!(prim.keys().all(|w| w.len() == 1));
        prim.map_keys(|w| w[0])
    })
    .memoized()
}

/// S(g) with the polynomial product and the product of U(g) carried over
/// by symmetrization.
pub struct SymmetrizedUea(pub Arc<Uea>);

impl Graded for SymmetrizedUea {
    type Key = SymWord<usize>;
    fn unit(&self) -> Self::Key {
        SymWord::empty()
    }
    fn degree(&self, k: &Self::Key) -> usize {
        k.degree()
    }
}

impl ComAs for SymmetrizedUea {
    fn star(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key> {
        let u = self.0.as_ref();
        u.unsym_lin(&product_of(u, &u.sym(a), &u.sym(b)))
    }
    fn dot(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key> {
        LinComb::basis(a.union(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cha_core::scalar::{frac, int};

    fn heisenberg() -> Uea {
        Uea::new(Arc::new(LieAlgebra::free_nilpotent(2, 2)), 6)
    }

    #[test]
    fn single_straightening_step() {
        let u = heisenberg();
        let got = u.straighten(&[1, 0]);
        let expected: LinComb<Pbw> = [(vec![0, 1], int(1)), (vec![2], int(-1))].into_iter().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn abelian_is_polynomial() {
        let u = Uea::new(Arc::new(LieAlgebra::abelian(&["a", "b"])), 6);
        assert_eq!(u.straighten(&[1, 0, 1]), LinComb::basis(vec![0, 1, 1]));
    }

    #[test]
    fn sym_round_trip() {
        let u = heisenberg();
        let w = SymWord::new(vec![1, 0, 1]);
        assert_eq!(u.unsym_lin(&u.sym(&w)), LinComb::basis(w));
        let xy = u.sym(&SymWord::new(vec![0, 1]));
        let expected: LinComb<Pbw> = [(vec![0, 1], int(1)), (vec![2], frac(-1, 2))].into_iter().collect();
        assert_eq!(xy, expected);
    }
}
