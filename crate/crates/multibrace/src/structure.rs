//! Truncated families of operations M_pq.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use cha_core::{Key, LinComb};

use crate::expand_word;

type Eval<G> = Arc<dyn Fn(&[G], &[G]) -> LinComb<G> + Send + Sync>;

/// Operations M_pq(u; v) on basis words, with the mandated values
/// M_00 = 0, M_10 = M_01 = id and M_p0 = M_0q = 0 for p, q ≥ 2 built in.
#[derive(Clone)]
pub struct MbStructure<G: Key> {
    bound: usize,
    eval: Eval<G>,
    memo: Option<Arc<Mutex<HashMap<(Vec<G>, Vec<G>), LinComb<G>>>>>,
}

impl<G: Key> MbStructure<G> {
    /// `eval` is only consulted for p, q ≥ 1.
    pub fn new(bound: usize, eval: impl Fn(&[G], &[G]) -> LinComb<G> + Send + Sync + 'static) -> Self {
        MbStructure { bound, eval: Arc::new(eval), memo: None }
    }

    /// All M_pq with p + q ≥ 2 vanish.
    pub fn trivial(bound: usize) -> Self {
        Self::new(bound, |_, _| LinComb::zero())
    }

    /// Caches evaluations; observably identical to the uncached structure.
    pub fn memoized(mut self) -> Self {
        self.memo = Some(Arc::new(Mutex::new(HashMap::new())));
        self
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn m(&self, u: &[G], v: &[G]) -> LinComb<G> {
        match (u.len(), v.len()) {
            (0, 0) => LinComb::zero(),
            (1, 0) => LinComb::basis(u[0].clone()),
            (0, 1) => LinComb::basis(v[0].clone()),
            (_, 0) | (0, _) => LinComb::zero(),
            _ => {
                let Some(memo) = &self.memo else {
                    return (self.eval)(u, v);
                };
                let key = (u.to_vec(), v.to_vec());
                if let Some(hit) = memo.lock().unwrap().get(&key) {
                    return hit.clone();
                }
                let value = (self.eval)(u, v);
                memo.lock().unwrap().insert(key, value.clone());
                value
            }
        }
    }

    /// Multilinear extension to words of linear combinations.
    pub fn m_lin(&self, u: &[LinComb<G>], v: &[LinComb<G>]) -> LinComb<G> {
        let us = expand_word(u);
        let vs = expand_word(v);
        us.bilinear(&vs, |a, b| self.m(a, b))
    }
}

/// Operations M_1q only; every M_pq with p ≥ 2 is zero.
#[derive(Clone)]
pub struct BraceStructure<G: Key> {
    bound: usize,
    eval: Arc<dyn Fn(&G, &[G]) -> LinComb<G> + Send + Sync>,
}

impl<G: Key> BraceStructure<G> {
    /// `eval(x, ys)` is consulted for |ys| ≥ 1.
    pub fn new(bound: usize, eval: impl Fn(&G, &[G]) -> LinComb<G> + Send + Sync + 'static) -> Self {
        BraceStructure { bound, eval: Arc::new(eval) }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// {x; y_1, …, y_q}, with {x; ∅} = x.
    pub fn brace(&self, x: &G, ys: &[G]) -> LinComb<G> {
        if ys.is_empty() {
            LinComb::basis(x.clone())
        } else {
            (self.eval)(x, ys)
        }
    }

    pub fn brace_lin(&self, x: &LinComb<G>, ys: &[LinComb<G>]) -> LinComb<G> {
        let words = expand_word(ys);
        x.bilinear(&words, |a, w| self.brace(a, w))
    }

    pub fn into_mb(self) -> MbStructure<G> {
        let bound = self.bound;
        MbStructure::new(bound, move |u, v| {
            if u.len() == 1 {
                self.brace(&u[0], v)
            } else {
                LinComb::zero()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cha_core::scalar::int;

    #[test]
    fn mandated_values() {
        let m = MbStructure::<u32>::new(6, |_, _| LinComb::basis(99));
        assert!(m.m(&[], &[]).is_zero());
        assert_eq!(m.m(&[3], &[]), LinComb::basis(3));
        assert_eq!(m.m(&[], &[4]), LinComb::basis(4));
        assert!(m.m(&[1, 2], &[]).is_zero());
        assert!(m.m(&[], &[1, 2]).is_zero());
        assert_eq!(m.m(&[1], &[2]), LinComb::basis(99));
    }

    #[test]
    fn multilinear_and_memo() {
        let m = MbStructure::<u32>::new(6, |u, v| LinComb::basis(u[0] * 10 + v[0])).memoized();
        let a: LinComb<u32> = [(1, int(2)), (2, int(1))].into_iter().collect();
        let got = m.m_lin(&[a], &[LinComb::basis(3)]);
        assert_eq!(got, [(13, int(2)), (23, int(1))].into_iter().collect());
        assert_eq!(m.m(&[1], &[3]), LinComb::basis(13));
    }

    #[test]
    fn brace_embeds() {
        let b = BraceStructure::<u32>::new(6, |x, ys| LinComb::basis(x + ys.iter().sum::<u32>()));
        let m = b.clone().into_mb();
        assert_eq!(m.m(&[1], &[2, 3]), LinComb::basis(6));
        assert!(m.m(&[1, 2], &[3]).is_zero());
        assert_eq!(b.brace(&5, &[]), LinComb::basis(5));
    }
}
