//! Graded (co)algebra traits and the convolution calculus on them.

use std::marker::PhantomData;
use std::rc::Rc;

use num_traits::One;

use crate::error::{check_bound, Error, Result};
use crate::lincomb::{Key, LinComb};
use crate::scalar::{factorial_q, frac, Scalar};
use crate::words::{deconcat, shuffle, unshuffle, SymWord, Word};

pub trait Graded {
    type Key: Key;
    fn unit(&self) -> Self::Key;
    fn degree(&self, k: &Self::Key) -> usize;
    fn is_unit(&self, k: &Self::Key) -> bool {
        self.degree(k) == 0
    }
}

/// Counital coalgebra with counit the coefficient of the unit.
pub trait Coalgebra: Graded {
    fn coproduct(&self, k: &Self::Key) -> LinComb<(Self::Key, Self::Key)>;
}

/// Unital algebra with unit `Graded::unit`.
pub trait Algebra: Graded {
    fn product(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;
}

pub fn coproduct_of<C: Coalgebra>(c: &C, x: &LinComb<C::Key>) -> LinComb<(C::Key, C::Key)> {
    x.map_linear(|k| c.coproduct(k))
}

pub fn product_of<A: Algebra>(a: &A, x: &LinComb<A::Key>, y: &LinComb<A::Key>) -> LinComb<A::Key> {
    x.bilinear(y, |p, q| a.product(p, q))
}

/// Product of a word of basis keys, folded from the left; empty word gives the unit.
pub fn multiply_all<A: Algebra>(a: &A, word: &[A::Key]) -> LinComb<A::Key> {
    let mut acc = LinComb::basis(a.unit());
    for k in word {
        acc = acc.map_linear(|p| a.product(p, k));
    }
    acc
}

pub fn counit<C: Graded>(c: &C, x: &LinComb<C::Key>) -> Scalar {
    x.coeff(&c.unit())
}

/// Drops the unit component of `x`.
pub fn augmentation_part<C: Graded>(c: &C, x: &LinComb<C::Key>) -> LinComb<C::Key> {
    x.filter(|k| !c.is_unit(k))
}

/// Δ̄(x) = Δ(x) − x⊗1 − 1⊗x on the augmentation ideal.
pub fn reduced_coproduct<C: Coalgebra>(c: &C, x: &LinComb<C::Key>) -> LinComb<(C::Key, C::Key)> {
    x.map_linear(|k| {
        if c.is_unit(k) {
            return LinComb::zero();
        }
        let mut d = c.coproduct(k);
        d.add_term((k.clone(), c.unit()), -Scalar::one());
        d.add_term((c.unit(), k.clone()), -Scalar::one());
        d
    })
}

/// Δ̄^n with `n` tensor legs: Δ̄^1 is the projection onto the augmentation ideal.
pub fn reduced_iterate<C: Coalgebra>(c: &C, n: usize, x: &LinComb<C::Key>) -> LinComb<Vec<C::Key>> {
    assert!(n >= 1, "reduced_iterate needs n >= 1");
    let mut cur: LinComb<Vec<C::Key>> = augmentation_part(c, x).map_keys(|k| vec![k.clone()]);
    for _ in 1..n {
        cur = split_last(c, &cur);
        if cur.is_zero() {
            break;
        }
    }
    cur
}

fn split_last<C: Coalgebra>(c: &C, words: &LinComb<Vec<C::Key>>) -> LinComb<Vec<C::Key>> {
    words.map_linear(|w| {
        let (last, init) = w.split_last().expect("nonempty tensor");
        reduced_coproduct(c, &LinComb::basis(last.clone())).map_keys(|(a, b)| {
            let mut v = init.to_vec();
            v.push(a.clone());
            v.push(b.clone());
            v
        })
    })
}

/// Least `r` with Δ̄^n(x) = 0 for all n > r.
pub fn filtration_degree<C: Coalgebra>(c: &C, x: &LinComb<C::Key>, bound: usize) -> Result<usize> {
    if x.is_zero() {
        return Err(Error::invalid("filtration degree of zero"));
    }
    let aug = augmentation_part(c, x);
    if aug.is_zero() {
        return Ok(0);
    }
    let mut cur = aug.map_keys(|k| vec![k.clone()]);
    let mut r = 1;
    loop {
        let next = split_last(c, &cur);
        if next.is_zero() {
            return Ok(r);
        }
        r += 1;
        check_bound(r, bound)?;
        cur = next;
    }
}

/// Σ_n coeff(n) · combine(Δ̄^n(x)), stopping once Δ̄^n vanishes.
pub fn reduced_series<C: Coalgebra>(
    c: &C,
    x: &LinComb<C::Key>,
    bound: usize,
    mut coeff: impl FnMut(usize) -> Scalar,
    mut combine: impl FnMut(&[C::Key]) -> LinComb<C::Key>,
) -> Result<LinComb<C::Key>> {
    let mut out = LinComb::zero();
    let mut cur = augmentation_part(c, x).map_keys(|k| vec![k.clone()]);
    let mut n = 1;
    while !cur.is_zero() {
        check_bound(n, bound)?;
        let image = cur.map_linear(|w| combine(w));
        out.add_scaled(&image, &coeff(n));
        cur = split_last(c, &cur);
        n += 1;
    }
    Ok(out)
}

/// A linear endomorphism given on basis keys.
pub type LinearMap<'a, K> = Rc<dyn Fn(&K) -> LinComb<K> + 'a>;

pub fn apply<K: Key>(f: &LinearMap<'_, K>, x: &LinComb<K>) -> LinComb<K> {
    x.map_linear(|k| f(k))
}

pub fn identity<'a, K: Key>() -> LinearMap<'a, K> {
    Rc::new(|k: &K| LinComb::basis(k.clone()))
}

/// η∘ε, the convolution unit.
pub fn unit_counit<'a, C: Graded>(c: &'a C) -> LinearMap<'a, C::Key> {
    Rc::new(move |k: &C::Key| {
        if c.is_unit(k) {
            LinComb::basis(c.unit())
        } else {
            LinComb::zero()
        }
    })
}

/// J = Id − η∘ε.
pub fn augmentation_projection<'a, C: Graded>(c: &'a C) -> LinearMap<'a, C::Key> {
    Rc::new(move |k: &C::Key| {
        if c.is_unit(k) {
            LinComb::zero()
        } else {
            LinComb::basis(k.clone())
        }
    })
}

/// (f⋆g)(x) = Σ f(x₁)·g(x₂).
pub fn convolve<'a, C: Algebra + Coalgebra>(
    c: &'a C,
    f: LinearMap<'a, C::Key>,
    g: LinearMap<'a, C::Key>,
) -> LinearMap<'a, C::Key> {
    Rc::new(move |k: &C::Key| {
        c.coproduct(k).map_linear(|(a, b)| product_of(c, &f(a), &g(b)))
    })
}

/// e^(1) = log⋆(Id) = Σ_k (−1)^{k+1}/k · J^{⋆k}.
pub fn conv_log<C: Algebra + Coalgebra>(c: &C, x: &LinComb<C::Key>, bound: usize) -> Result<LinComb<C::Key>> {
    reduced_series(
        c,
        x,
        bound,
        |k| {
            let s = frac(1, k as i64);
            if k % 2 == 1 {
                s
            } else {
                -s
            }
        },
        |w| multiply_all(c, w),
    )
}

/// e^(i) = (e^(1))^{⋆i} / i!.
pub fn eulerian<C: Algebra + Coalgebra>(
    c: &C,
    i: usize,
    x: &LinComb<C::Key>,
    bound: usize,
) -> Result<LinComb<C::Key>> {
    if i == 0 {
        return Err(Error::invalid("Eulerian index must be positive"));
    }
    let legs = reduced_iterate(c, i, x);
    let mut out = LinComb::zero();
    for (w, coef) in legs.iter() {
        let mut acc = LinComb::basis(c.unit());
        for k in w {
            let e = conv_log(c, &LinComb::basis(k.clone()), bound)?;
            acc = product_of(c, &acc, &e);
        }
        out.add_scaled(&acc, coef);
    }
    Ok(out.scale(&factorial_q(i).recip()))
}

/// The polynomial algebra S(V): multiset union with unshuffle.
pub struct Polynomial<G>(PhantomData<G>);

impl<G> Polynomial<G> {
    pub fn new() -> Self {
        Polynomial(PhantomData)
    }
}

impl<G> Default for Polynomial<G> {
    fn default() -> Self {
        Self::new()
    }
}

impl<G: Key> Graded for Polynomial<G> {
    type Key = SymWord<G>;
    fn unit(&self) -> Self::Key {
        SymWord::empty()
    }
    fn degree(&self, k: &Self::Key) -> usize {
        k.degree()
    }
}

impl<G: Key> Algebra for Polynomial<G> {
    fn product(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key> {
        LinComb::basis(a.union(b))
    }
}

impl<G: Key> Coalgebra for Polynomial<G> {
    fn coproduct(&self, k: &Self::Key) -> LinComb<(Self::Key, Self::Key)> {
        unshuffle(k)
    }
}

/// T(V) with the shuffle product and deconcatenation.
pub struct ShuffleAlgebra<G>(PhantomData<G>);

impl<G> ShuffleAlgebra<G> {
    pub fn new() -> Self {
        ShuffleAlgebra(PhantomData)
    }
}

impl<G> Default for ShuffleAlgebra<G> {
    fn default() -> Self {
        Self::new()
    }
}

impl<G: Key> Graded for ShuffleAlgebra<G> {
    type Key = Word<G>;
    fn unit(&self) -> Self::Key {
        Word::empty()
    }
    fn degree(&self, k: &Self::Key) -> usize {
        k.degree()
    }
}

impl<G: Key> Algebra for ShuffleAlgebra<G> {
    fn product(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key> {
        shuffle(&a.0, &b.0)
    }
}

impl<G: Key> Coalgebra for ShuffleAlgebra<G> {
    fn coproduct(&self, k: &Self::Key) -> LinComb<(Self::Key, Self::Key)> {
        deconcat(k)
    }
}

/// T(V) with concatenation and deconcatenation (an infinitesimal bialgebra).
pub struct ConcatAlgebra<G>(PhantomData<G>);

impl<G> ConcatAlgebra<G> {
    pub fn new() -> Self {
        ConcatAlgebra(PhantomData)
    }
}

impl<G> Default for ConcatAlgebra<G> {
    fn default() -> Self {
        Self::new()
    }
}

impl<G: Key> Graded for ConcatAlgebra<G> {
    type Key = Word<G>;
    fn unit(&self) -> Self::Key {
        Word::empty()
    }
    fn degree(&self, k: &Self::Key) -> usize {
        k.degree()
    }
}

impl<G: Key> Algebra for ConcatAlgebra<G> {
    fn product(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key> {
        LinComb::basis(a.concat(b))
    }
}

impl<G: Key> Coalgebra for ConcatAlgebra<G> {
    fn coproduct(&self, k: &Self::Key) -> LinComb<(Self::Key, Self::Key)> {
        deconcat(k)
    }
}
