//! Multibrace and brace operations read off from dipterous, 2-associative
//! and dendriform structures.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use cha_core::hopf::product_of;
use cha_core::scalar::{int, one};
use cha_core::{Key, LinComb};
use cha_multibrace::{BraceStructure, MbStructure};

use crate::context::{dot_lin, omega_prec, omega_succ, prec_lin, succ_lin, Dendriform, Dipterous, TwoAs};

type Star<K> = dyn Fn(&LinComb<K>, &LinComb<K>) -> LinComb<K> + Send + Sync;
type Omega<K> = dyn Fn(&[LinComb<K>]) -> LinComb<K> + Send + Sync;

/// M_pq := ω(u)*ω(v) − Σ_{k≥2} ω(M_{i_1 j_1} ⋯ M_{i_k j_k}) for a word map ω.
struct Inductive<K: Key> {
    star: Box<Star<K>>,
    omega: Box<Omega<K>>,
    memo: Mutex<HashMap<(Vec<K>, Vec<K>), LinComb<K>>>,
}

impl<K: Key> Inductive<K> {
    fn m(&self, u: &[K], v: &[K]) -> LinComb<K> {
        match (u.len(), v.len()) {
            (0, 0) => return LinComb::zero(),
            (1, 0) => return LinComb::basis(u[0].clone()),
            (0, 1) => return LinComb::basis(v[0].clone()),
            (_, 0) | (0, _) => return LinComb::zero(),
            _ => {}
        }
        let key = (u.to_vec(), v.to_vec());
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let basis = |w: &[K]| w.iter().map(|g| LinComb::basis(g.clone())).collect::<Vec<_>>();
        let mut value = (self.star)(&(self.omega)(&basis(u)), &(self.omega)(&basis(v)));
        let lower = self.splittings(u, v, 0, 0, true);
        for (word, c) in lower.iter() {
            value.add_scaled(&(self.omega)(&basis(word)), &-c.clone());
        }
        self.memo.lock().unwrap().insert(key, value.clone());
        value
    }

    /// Words M(block_1)…M(block_k) over splittings of the suffixes; at the
    /// top level the single block holding everything is left out.
    fn splittings(&self, u: &[K], v: &[K], a: usize, b: usize, top: bool) -> LinComb<Vec<K>> {
        if a == u.len() && b == v.len() {
            return LinComb::basis(Vec::new());
        }
        let mut out = LinComb::zero();
        for p in 0..=u.len() - a {
            for q in 0..=v.len() - b {
                if (p, q) == (0, 0) || (q == 0 && p >= 2) || (p == 0 && q >= 2) {
                    continue;
                }
                if top && a + p == u.len() && b + q == v.len() {
                    continue;
                }
                let head = self.m(&u[a..a + p], &v[b..b + q]);
                if head.is_zero() {
                    continue;
                }
                let tail = self.splittings(u, v, a + p, b + q, false);
                out += head.bilinear(&tail, |g, w| LinComb::basis([std::slice::from_ref(g), w.as_slice()].concat()));
            }
        }
        out
    }
}

fn inductive_mb<K: Key>(bound: usize, star: Box<Star<K>>, omega: Box<Omega<K>>) -> MbStructure<K> {
    let ind = Arc::new(Inductive { star, omega, memo: Mutex::new(HashMap::new()) });
    MbStructure::new(bound, move |u, v| ind.m(u, v))
}

/// The multibrace structure of a dipterous algebra, with ω the left-normed ≻.
pub fn mb_from_dipt<C>(ctx: Arc<C>, bound: usize) -> MbStructure<C::Key>
where
    C: Dipterous + Send + Sync + 'static,
{
    let c1 = ctx.clone();
    inductive_mb(
        bound,
        Box::new(move |x, y| product_of(c1.as_ref(), x, y)),
        Box::new(move |w| omega_succ(ctx.as_ref(), w).expect("ω applied to the augmentation ideal")),
    )
}

/// The multibrace structure of a 2-associative algebra, with ω the `·`-product.
pub fn mb_from_2as<C>(ctx: Arc<C>, bound: usize) -> MbStructure<C::Key>
where
    C: TwoAs + Send + Sync + 'static,
{
    let c1 = ctx.clone();
    inductive_mb(
        bound,
        Box::new(move |x, y| product_of(c1.as_ref(), x, y)),
        Box::new(move |w| {
            let mut acc = LinComb::basis(ctx.unit());
            for x in w {
                acc = dot_lin(ctx.as_ref(), &acc, x);
            }
            acc
        }),
    )
}

/// M_1q(v; v_1…v_q) = Σ_i (−1)^i ω_≺(v_1…v_i) ≻ v ≺ ω^≻(v_{i+1}…v_q),
/// with the empty iterated products read as the unit.
pub fn brace_from_dend<C>(ctx: Arc<C>, bound: usize) -> BraceStructure<C::Key>
where
    C: Dendriform + Send + Sync + 'static,
{
    BraceStructure::new(bound, move |v: &C::Key, ys: &[C::Key]| {
        let c = ctx.as_ref();
        let unit = LinComb::basis(c.unit());
        let letters: Vec<LinComb<C::Key>> = ys.iter().map(|y| LinComb::basis(y.clone())).collect();
        let mut out = LinComb::zero();
        for i in 0..=ys.len() {
            let left = if i == 0 { unit.clone() } else { omega_prec(c, &letters[..i]).unwrap() };
            let right = if i == ys.len() { unit.clone() } else { omega_succ(c, &letters[i..]).unwrap() };
            let middle = succ_lin(c, &left, &LinComb::basis(v.clone())).unwrap();
            let term = prec_lin(c, &middle, &right).unwrap();
            let sign = if i % 2 == 0 { one() } else { int(-1) };
            out.add_scaled(&term, &sign);
        }
        out
    })
}
