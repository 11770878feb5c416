//! Pre-Lie algebras, their symmetric braces and the free pre-Lie algebra
//! on rooted trees.

use std::collections::HashMap;
use std::fmt::Debug;
use std::sync::{Arc, Mutex};

use cha_combinatorics::rooted::{RTree, RootedTree};
use cha_core::{Error, Key, LinComb, Report, Result, SymWord};

use crate::smb::SmbStructure;

pub trait PreLie: Send + Sync {
    type Elem: Key;
    fn prelie(&self, a: &Self::Elem, b: &Self::Elem) -> LinComb<Self::Elem>;
}

pub fn prelie_lin<P: PreLie>(p: &P, x: &LinComb<P::Elem>, y: &LinComb<P::Elem>) -> LinComb<P::Elem> {
    x.bilinear(y, |a, b| p.prelie(a, b))
}

/// {{x,y},z} − {x,{y,z}}, the associator.
pub fn associator<P: PreLie>(p: &P, x: &P::Elem, y: &P::Elem, z: &P::Elem) -> LinComb<P::Elem> {
    let (x, y, z) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()), LinComb::basis(z.clone()));
    prelie_lin(p, &prelie_lin(p, &x, &y), &z) - prelie_lin(p, &x, &prelie_lin(p, &y, &z))
}

/// The associator is symmetric in its last two arguments on all triples.
pub fn check_prelie_identity<P: PreLie>(p: &P, samples: &[P::Elem]) -> Report
where
    P::Elem: Debug,
{
    let mut report = Report::new("pre-Lie");
    for x in samples {
        for y in samples {
            for z in samples {
                if associator(p, x, y, z) != associator(p, x, z, y) {
                    report.fail("identity", format!("{x:?} {y:?} {z:?}"));
                    return report;
                }
            }
        }
    }
    report.pass("identity");
    report
}

/// Structure constants {e_i, e_j} = table[i][j] on a finite basis.
pub struct PreLieTable {
    table: Vec<Vec<LinComb<usize>>>,
}

impl PreLieTable {
    pub fn new(table: Vec<Vec<LinComb<usize>>>) -> Self {
        PreLieTable { table }
    }

    pub fn zero(dim: usize) -> Self {
        PreLieTable { table: vec![vec![LinComb::zero(); dim]; dim] }
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }
}

impl PreLie for PreLieTable {
    type Elem = usize;
    fn prelie(&self, a: &usize, b: &usize) -> LinComb<usize> {
        self.table[*a][*b].clone()
    }
}

/// The free pre-Lie algebra on labeled non-planar rooted trees: {ω, ω'}
/// grafts the root of ω' below each vertex of ω in turn.
#[derive(Default)]
pub struct FreePreLie<L>(std::marker::PhantomData<L>);

impl<L> FreePreLie<L> {
    pub fn new() -> Self {
        FreePreLie(std::marker::PhantomData)
    }
}

impl<L: Key> PreLie for FreePreLie<L> {
    type Elem = RTree<L>;
    fn prelie(&self, a: &RTree<L>, b: &RTree<L>) -> LinComb<RTree<L>> {
        a.attach_everywhere(b).into_iter().map(|t| (t, cha_core::scalar::one())).collect()
    }
}

pub fn prelie_free_product<L: Key>(a: &LinComb<RTree<L>>, b: &LinComb<RTree<L>>) -> LinComb<RTree<L>> {
    prelie_lin(&FreePreLie::new(), a, b)
}

/// The operations M_1n built from {−,−} by the recursion
/// M_1n(x; y_1…y_n) = {M_1(n−1)(x; y_1…y_{n−1}), y_n}
///                    − Σ_i M_1(n−1)(x; y_1…{y_i, y_n}…y_{n−1}).
pub struct GuinOudom<P: PreLie> {
    prelie: Arc<P>,
    memo: Mutex<HashMap<(P::Elem, Vec<P::Elem>), LinComb<P::Elem>>>,
}

impl<P: PreLie + 'static> GuinOudom<P> {
    /// Follows the recursion with `ys` in the given order.
    pub fn brace_ordered(&self, x: &P::Elem, ys: &[P::Elem]) -> LinComb<P::Elem> {
        let n = ys.len();
        match n {
            0 => return LinComb::basis(x.clone()),
            1 => return self.prelie.prelie(x, &ys[0]),
            _ => {}
        }
        let key = (x.clone(), ys.to_vec());
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let last = &ys[n - 1];
        let init = &ys[..n - 1];
        let mut out = self.brace_ordered(x, init).map_linear(|z| self.prelie.prelie(z, last));
        for i in 0..n - 1 {
            for (t, c) in self.prelie.prelie(&ys[i], last).iter() {
                let mut w = init.to_vec();
                w[i] = t.clone();
                out.add_scaled(&self.brace_ordered(x, &w), &-c.clone());
            }
        }
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    pub fn brace(&self, x: &P::Elem, ys: &SymWord<P::Elem>) -> LinComb<P::Elem> {
        self.brace_ordered(x, ys.letters())
    }

    /// The symmetric brace algebra as an SMB structure with M_pq = 0 for p ≥ 2.
    pub fn to_smb(self: &Arc<Self>, bound: usize) -> SmbStructure<P::Elem> {
        let me = self.clone();
        SmbStructure::new(bound, move |u, v| {
            if u.degree() == 1 {
                me.brace(&u.letters()[0], v)
            } else {
                LinComb::zero()
            }
        })
    }
}

/// Checks the pre-Lie identity on `samples` and returns the symmetric braces.
pub fn guin_oudom<P>(prelie: Arc<P>, samples: &[P::Elem]) -> Result<Arc<GuinOudom<P>>>
where
    P: PreLie + 'static,
    P::Elem: Debug,
{
    let report = check_prelie_identity(prelie.as_ref(), samples);
    if let Some(bad) = report.failures().next() {
        return Err(Error::invalid(format!("pre-Lie identity fails on {}", bad.detail)));
    }
    Ok(Arc::new(GuinOudom { prelie, memo: Mutex::new(HashMap::new()) }))
}

/// M_1m(M_1n(x; y); z) = Σ over assignments of each z to one of the y's or
/// to x of M_1(n+k)(x; M_1(y_1; z_1)…M_1(y_n; z_n) z_{n+1}).
pub fn symmetric_brace_sides<G: Key>(m: &SmbStructure<G>, x: &G, ys: &[G], zs: &[G]) -> (LinComb<G>, LinComb<G>) {
    let b = |g: &G| LinComb::basis(g.clone());
    let bys: Vec<_> = ys.iter().map(b).collect();
    let bzs: Vec<_> = zs.iter().map(b).collect();
    let left = m.m_lin(&[m.m_lin(&[b(x)], &bys)], &bzs);
    let n = ys.len();
    let mut right = LinComb::zero();
    let mut slots = vec![0usize; zs.len()];
    loop {
        let mut args: Vec<LinComb<G>> = (0..n)
            .map(|i| {
                let mine: Vec<_> = zs.iter().zip(&slots).filter(|(_, &s)| s == i).map(|(z, _)| b(z)).collect();
                m.m_lin(&[b(&ys[i])], &mine)
            })
            .collect();
        args.extend(zs.iter().zip(&slots).filter(|(_, &s)| s == n).map(|(z, _)| b(z)));
        right += m.m_lin(&[b(x)], &args);
        let Some(pos) = slots.iter().position(|&s| s < n) else { break };
        slots[pos] += 1;
        for s in &mut slots[..pos] {
            *s = 0;
        }
    }
    (left, right)
}

/// The brace relation for every (n, m) with n, m ≥ 1 and 1 + n + m ≤ max_arity,
/// on the first letters of `alphabet` (cycled when short).
pub fn check_symmetric_brace<G>(m: &SmbStructure<G>, alphabet: &[G], max_arity: usize) -> Report
where
    G: Key + std::fmt::Display,
{
    let mut report = Report::new("symmetric-brace");
    let at = |i: usize| alphabet[i % alphabet.len()].clone();
    for n in 1..max_arity {
        for k in 1..max_arity.saturating_sub(n) {
            let x = at(0);
            let ys: Vec<G> = (1..=n).map(at).collect();
            let zs: Vec<G> = (n + 1..=n + k).map(at).collect();
            let (left, right) = symmetric_brace_sides(m, &x, &ys, &zs);
            let id = format!("n{n}-m{k}");
            if left == right {
                report.pass(id);
            } else {
                report.fail(id, format!("sides differ by {}", &left - &right));
            }
        }
    }
    report
}

/// The Grossman–Larson structure: symmetric braces of the free pre-Lie
/// algebra on one generator.
pub fn grossman_larson(bound: usize) -> SmbStructure<RootedTree> {
    let go = guin_oudom(Arc::new(FreePreLie::<()>::new()), &[]).expect("no samples to violate");
    go.to_smb(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cha_core::scalar::int;

    fn x(l: u32) -> RTree<u32> {
        RTree::leaf(l)
    }

    #[test]
    fn free_products_match_pictures() {
        let p = FreePreLie::<u32>::new();
        let xy = p.prelie(&x(1), &x(2));
        let ladder = RTree::new(1, vec![x(2)]);
        assert_eq!(xy, LinComb::basis(ladder.clone()));
        let x_yz = prelie_lin(&p, &LinComb::basis(x(1)), &p.prelie(&x(2), &x(3)));
        let ladder3 = RTree::new(1, vec![RTree::new(2, vec![x(3)])]);
        assert_eq!(x_yz, LinComb::basis(ladder3.clone()));
        let xy_z = prelie_lin(&p, &xy, &LinComb::basis(x(3)));
        let expected: LinComb<_> = [(ladder3, int(1)), (RTree::new(1, vec![x(2), x(3)]), int(1))].into_iter().collect();
        assert_eq!(xy_z, expected);
    }

    #[test]
    fn zero_prelie_has_zero_braces() {
        let go = guin_oudom(Arc::new(PreLieTable::zero(3)), &[0, 1, 2]).unwrap();
        assert!(go.brace_ordered(&0, &[1]).is_zero());
        assert!(go.brace_ordered(&0, &[1, 2]).is_zero());
        assert!(go.brace_ordered(&0, &[1, 2, 0]).is_zero());
    }

    #[test]
    fn rejects_non_prelie() {
        let mut table = vec![vec![LinComb::zero(); 3]; 3];
        table[0][1] = LinComb::basis(2);
        table[2][0] = LinComb::basis(1);
        assert!(guin_oudom(Arc::new(PreLieTable::new(table)), &[0, 1, 2]).is_err());
    }
}
