//! Operation traits for dipterous, dendriform and 2-associative algebras,
//! and the iterated products built from them.

use cha_core::error::Error;
use cha_core::hopf::{product_of, Algebra, Graded};
use cha_core::{Key, LinComb, Result};
use cha_multibrace::{mb_to_product, MbStructure};

/// An associative product `*` plus a right operation `≻` with
/// (x*y)≻z = x≻(y≻z), extended by 1≻x = x and x≻1 = 0.
pub trait Dipterous: Algebra {
    fn succ(&self, a: &Self::Key, b: &Self::Key) -> Result<LinComb<Self::Key>>;
}

/// A dipterous algebra whose derived `≺` satisfies the middle relation;
/// extended by 1≺x = 0 and x≺1 = x.
pub trait Dendriform: Dipterous {
    fn prec(&self, a: &Self::Key, b: &Self::Key) -> Result<LinComb<Self::Key>>;
}

/// Two associative products sharing a unit: `*` (the `Algebra` product) and `·`.
pub trait TwoAs: Algebra {
    fn dot(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;
}

pub fn succ_lin<C: Dipterous>(c: &C, x: &LinComb<C::Key>, y: &LinComb<C::Key>) -> Result<LinComb<C::Key>> {
    x.try_bilinear(y, |a, b| c.succ(a, b))
}

pub fn prec_lin<C: Dendriform>(c: &C, x: &LinComb<C::Key>, y: &LinComb<C::Key>) -> Result<LinComb<C::Key>> {
    x.try_bilinear(y, |a, b| c.prec(a, b))
}

/// x≺y := x*y − x≻y in any dipterous algebra.
pub fn derived_prec<C: Dipterous>(c: &C, x: &LinComb<C::Key>, y: &LinComb<C::Key>) -> Result<LinComb<C::Key>> {
    Ok(product_of(c, x, y) - succ_lin(c, x, y)?)
}

pub fn dot_lin<C: TwoAs>(c: &C, x: &LinComb<C::Key>, y: &LinComb<C::Key>) -> LinComb<C::Key> {
    x.bilinear(y, |a, b| c.dot(a, b))
}

fn nonempty<T>(xs: &[T]) -> Result<()> {
    if xs.is_empty() {
        Err(Error::invalid("iterated product of an empty word"))
    } else {
        Ok(())
    }
}

/// ((x_1≻x_2)≻…)≻x_n
pub fn omega_succ<C: Dipterous>(c: &C, xs: &[LinComb<C::Key>]) -> Result<LinComb<C::Key>> {
    nonempty(xs)?;
    let mut acc = xs[0].clone();
    for x in &xs[1..] {
        acc = succ_lin(c, &acc, x)?;
    }
    Ok(acc)
}

/// x_1≻(x_2≻(…≻x_n))
pub fn omega_succ_right<C: Dipterous>(c: &C, xs: &[LinComb<C::Key>]) -> Result<LinComb<C::Key>> {
    nonempty(xs)?;
    let mut acc = xs[xs.len() - 1].clone();
    for x in xs[..xs.len() - 1].iter().rev() {
        acc = succ_lin(c, x, &acc)?;
    }
    Ok(acc)
}

/// x_1≺(x_2≺(…≺x_n))
pub fn omega_prec<C: Dendriform>(c: &C, xs: &[LinComb<C::Key>]) -> Result<LinComb<C::Key>> {
    nonempty(xs)?;
    let mut acc = xs[xs.len() - 1].clone();
    for x in xs[..xs.len() - 1].iter().rev() {
        acc = prec_lin(c, x, &acc)?;
    }
    Ok(acc)
}

/// T^c(R) with the product rebuilt from a multibrace structure, the
/// concatenation `·`, and the right operation
/// u≻(v_1…v_l) = (u*(v_1…v_{l-1}))·v_l.
#[derive(Clone)]
pub struct TensorContext<G: Key> {
    pub m: MbStructure<G>,
}

impl<G: Key> Graded for TensorContext<G> {
    type Key = Vec<G>;
    fn unit(&self) -> Vec<G> {
        Vec::new()
    }
    fn degree(&self, k: &Vec<G>) -> usize {
        k.len()
    }
}

impl<G: Key> Algebra for TensorContext<G> {
    fn product(&self, a: &Vec<G>, b: &Vec<G>) -> LinComb<Vec<G>> {
        mb_to_product(&self.m, a, b).expect("tensor context used beyond its degree bound")
    }
}

impl<G: Key> Dipterous for TensorContext<G> {
    fn succ(&self, a: &Vec<G>, b: &Vec<G>) -> Result<LinComb<Vec<G>>> {
        let Some((last, init)) = b.split_last() else {
            return if a.is_empty() { Err(Error::UnitProduct("1 ≻ 1")) } else { Ok(LinComb::zero()) };
        };
        Ok(self.product(a, &init.to_vec()).map_keys(|w| {
            let mut w = w.clone();
            w.push(last.clone());
            w
        }))
    }
}

impl<G: Key> TwoAs for TensorContext<G> {
    fn dot(&self, a: &Vec<G>, b: &Vec<G>) -> LinComb<Vec<G>> {
        LinComb::basis([a.as_slice(), b.as_slice()].concat())
    }
}
