//! The dipterous and dendriform structures on A ⊗ A used by coproducts.

use cha_core::hopf::{Algebra, Graded};
use cha_core::{LinComb, Result};

use crate::context::{Dendriform, Dipterous};

pub type Pairs<K> = LinComb<(K, K)>;

pub fn unit_pair<C: Graded>(c: &C) -> Pairs<C::Key> {
    LinComb::basis((c.unit(), c.unit()))
}

/// (a⊗b)*(a'⊗b') = (a*a')⊗(b*b')
pub fn star<C: Algebra>(c: &C, x: &Pairs<C::Key>, y: &Pairs<C::Key>) -> Pairs<C::Key> {
    x.bilinear(y, |(a, b), (a2, b2)| c.product(a, a2).tensor(&c.product(b, b2)))
}

fn half<C: Algebra>(
    c: &C,
    x: &Pairs<C::Key>,
    y: &Pairs<C::Key>,
    op: impl Fn(&C::Key, &C::Key) -> Result<LinComb<C::Key>>,
) -> Result<Pairs<C::Key>> {
    x.try_bilinear(y, |(a, b), (a2, b2)| {
        if c.is_unit(b) && c.is_unit(b2) {
            Ok(op(a, a2)?.tensor(&LinComb::basis(c.unit())))
        } else {
            Ok(c.product(a, a2).tensor(&op(b, b2)?))
        }
    })
}

/// (a⊗b)≻(a'⊗b') = (a*a')⊗(b≻b'), and (a≻a')⊗1 when b = b' = 1.
pub fn succ<C: Dipterous>(c: &C, x: &Pairs<C::Key>, y: &Pairs<C::Key>) -> Result<Pairs<C::Key>> {
    half(c, x, y, |a, b| c.succ(a, b))
}

/// The ≺ analogue of [`succ`].
pub fn prec<C: Dendriform>(c: &C, x: &Pairs<C::Key>, y: &Pairs<C::Key>) -> Result<Pairs<C::Key>> {
    half(c, x, y, |a, b| c.prec(a, b))
}
