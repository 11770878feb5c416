//! Symmetric multibraces of a ComAs bialgebra: a commutative product `·`
//! and an associative product `*` sharing a unit and a cocommutative
//! coproduct.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use cha_core::{Graded, Key, LinComb, SymWord};

use crate::smb::{partition_sum, SmbStructure};

pub trait ComAs: Graded {
    fn star(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;
    fn dot(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;
}

pub fn star_lin<C: ComAs>(c: &C, x: &LinComb<C::Key>, y: &LinComb<C::Key>) -> LinComb<C::Key> {
    x.bilinear(y, |a, b| c.star(a, b))
}

pub fn dot_lin<C: ComAs>(c: &C, x: &LinComb<C::Key>, y: &LinComb<C::Key>) -> LinComb<C::Key> {
    x.bilinear(y, |a, b| c.dot(a, b))
}

/// x_1·x_2·…·x_n, the unit for the empty word.
pub fn dot_all<C: ComAs>(c: &C, letters: &[C::Key]) -> LinComb<C::Key> {
    let mut acc = LinComb::basis(c.unit());
    for x in letters {
        acc = acc.map_linear(|a| c.dot(a, x));
    }
    acc
}

struct Recursive<C: ComAs> {
    ctx: Arc<C>,
    memo: Mutex<HashMap<(SymWord<C::Key>, SymWord<C::Key>), LinComb<C::Key>>>,
}

impl<C: ComAs> Recursive<C> {
    fn m(&self, u: &SymWord<C::Key>, v: &SymWord<C::Key>) -> LinComb<C::Key> {
        match (u.degree(), v.degree()) {
            (0, 0) => return LinComb::zero(),
            (1, 0) => return LinComb::basis(u.letters()[0].clone()),
            (0, 1) => return LinComb::basis(v.letters()[0].clone()),
            (_, 0) | (0, _) => return LinComb::zero(),
            _ => {}
        }
        let key = (u.clone(), v.clone());
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let c = self.ctx.as_ref();
        let whole = star_lin(c, &dot_all(c, u.letters()), &dot_all(c, v.letters()));
        let lower = partition_sum(u, v, true, |a, b| self.m(a, b), |x, y| dot_lin(c, x, y), LinComb::basis(c.unit()));
        let value = whole - lower;
        self.memo.lock().unwrap().insert(key, value.clone());
        value
    }
}

/// M_nm(x; y) := (x_1⋯x_n)*(y_1⋯y_m) minus the partition terms with at
/// least two blocks, whose products are taken with `·`. The operations are
/// meaningful on primitive arguments.
pub fn comas_to_smb<C>(ctx: Arc<C>, bound: usize) -> SmbStructure<C::Key>
where
    C: ComAs + Send + Sync + 'static,
{
    let rec = Arc::new(Recursive { ctx, memo: Mutex::new(HashMap::new()) });
    SmbStructure::new(bound, move |u, v| rec.m(u, v))
}

/// S(V) with the polynomial product as `·` and a supplied `*`.
pub struct PolynomialComAs<G: Key> {
    star: Box<dyn Fn(&SymWord<G>, &SymWord<G>) -> LinComb<SymWord<G>> + Send + Sync>,
}

impl<G: Key> PolynomialComAs<G> {
    pub fn new(star: impl Fn(&SymWord<G>, &SymWord<G>) -> LinComb<SymWord<G>> + Send + Sync + 'static) -> Self {
        PolynomialComAs { star: Box::new(star) }
    }

    /// `*` equal to `·`.
    pub fn commutative() -> Self {
        Self::new(|a, b| LinComb::basis(a.union(b)))
    }
}

impl<G: Key> Graded for PolynomialComAs<G> {
    type Key = SymWord<G>;
    fn unit(&self) -> Self::Key {
        SymWord::empty()
    }
    fn degree(&self, k: &Self::Key) -> usize {
        k.degree()
    }
}

impl<G: Key> ComAs for PolynomialComAs<G> {
    fn star(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key> {
        (self.star)(a, b)
    }
    fn dot(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key> {
        LinComb::basis(a.union(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutative_star_has_no_multibraces() {
        let ctx = Arc::new(PolynomialComAs::<u32>::commutative());
        let m = comas_to_smb(ctx, 6);
        let x = |g: u32| SymWord::letter(g);
        assert!(m.m(&SymWord::new(vec![x(1)]), &SymWord::new(vec![x(2)])).is_zero());
        assert!(m.m(&SymWord::new(vec![x(1)]), &SymWord::new(vec![x(2), x(3)])).is_zero());
        assert!(m.m(&SymWord::new(vec![x(1), x(2)]), &SymWord::new(vec![x(3), x(4)])).is_zero());
        assert_eq!(m.m(&SymWord::new(vec![x(1)]), &SymWord::empty()), LinComb::basis(x(1)));
    }
}
