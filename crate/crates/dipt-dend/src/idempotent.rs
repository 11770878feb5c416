//! The dendriform idempotent e, the infinitesimal idempotent e_inf, and
//! the primitive basis of the free dendriform algebra.

use cha_core::hopf::{reduced_coproduct, reduced_series, Coalgebra};
use cha_core::linalg::Echelon;
use cha_core::scalar::{int, one};
use cha_core::{Key, LinComb, Report, Result};

use crate::context::{omega_succ_right, Dendriform};
use crate::dend::{DendTree, FreeDend};

fn sign(n: usize) -> cha_core::Scalar {
    if n % 2 == 1 {
        one()
    } else {
        int(-1)
    }
}

/// e = Σ_n (−1)^{n+1} ω^n_≻ ∘ Δ̄^n with ω^n_≻ right-normed.
pub fn e_dend<C: Dendriform + Coalgebra>(c: &C, x: &LinComb<C::Key>, bound: usize) -> Result<LinComb<C::Key>> {
    reduced_series(c, x, bound, sign, |word| {
        let letters: Vec<_> = word.iter().map(|k| LinComb::basis(k.clone())).collect();
        omega_succ_right(c, &letters).expect("legs of Δ̄ lie in the augmentation ideal")
    })
}

/// e_inf = Σ_i (−1)^{i+1} ×^i ∘ Δ̄^i for a product × given on basis keys.
pub fn e_inf<C, F>(c: &C, times: F, x: &LinComb<C::Key>, bound: usize) -> Result<LinComb<C::Key>>
where
    C: Coalgebra,
    F: Fn(&C::Key, &C::Key) -> LinComb<C::Key>,
{
    reduced_series(c, x, bound, sign, |word| {
        let mut acc = LinComb::basis(word[0].clone());
        for k in &word[1..] {
            acc = acc.bilinear(&LinComb::basis(k.clone()), |a, b| times(a, b));
        }
        acc
    })
}

/// {e(|∨t) : t with n−1 internal vertices}.
pub fn primitive_basis_dend(d: &FreeDend, n: usize, bound: usize) -> Result<Vec<LinComb<DendTree>>> {
    cha_core::error::check_bound(n, bound)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    d.basis(n - 1)
        .into_iter()
        .map(|t| e_dend(d, &LinComb::basis(DendTree::node(DendTree::Leaf, 1, t)), bound))
        .collect()
}

pub fn is_primitive<C: Coalgebra>(c: &C, x: &LinComb<C::Key>) -> bool {
    reduced_coproduct(c, x).is_zero()
}

/// dim of the kernel of Δ̄ on the span of `basis`.
pub fn primitive_dimension<C: Coalgebra>(c: &C, basis: &[C::Key]) -> usize
where
    C::Key: Key,
{
    let mut ech = Echelon::new();
    for k in basis {
        ech.insert(&reduced_coproduct(c, &LinComb::basis(k.clone())));
    }
    basis.len() - ech.rank()
}

/// The listed properties of e on the free dendriform algebra through `maxdeg`.
pub fn check_idempotent(d: &FreeDend, maxdeg: usize) -> Report {
    use crate::context::Dipterous;
    let mut report = Report::new("dend-idempotent");
    let mut primitive_valued = true;
    let mut projector = true;
    for n in 1..=maxdeg {
        for t in d.basis(n) {
            let e = e_dend(d, &LinComb::basis(t.clone()), maxdeg).unwrap();
            primitive_valued &= is_primitive(d, &e);
            projector &= e_dend(d, &e, maxdeg).unwrap() == e;
        }
    }
    report.push("primitive-valued", primitive_valued, "");
    report.push("idempotent", projector, "e∘e = e");
    let mut kills = true;
    for a in 1..maxdeg {
        for b in 1..=maxdeg - a {
            for x in d.basis(a) {
                for y in d.basis(b) {
                    let s = d.succ(&x, &y).unwrap();
                    kills &= e_dend(d, &s, maxdeg).unwrap().is_zero();
                }
            }
        }
    }
    report.push("kills-succ", kills, "e(x≻y) = 0");
    let mut fixes = true;
    let mut dims = Vec::new();
    for n in 1..=maxdeg {
        let prims = primitive_basis_dend(d, n, maxdeg).unwrap();
        fixes &= prims.iter().all(|p| is_primitive(d, p) && e_dend(d, p, maxdeg).unwrap() == *p);
        let mut ech = Echelon::new();
        for p in &prims {
            ech.insert(p);
        }
        let kernel = primitive_dimension(d, &d.basis(n));
        let catalan = cha_combinatorics::catalan(n - 1);
        let want = usize::try_from(catalan).unwrap();
        dims.push(ech.rank());
        fixes &= ech.rank() == want && kernel == want;
    }
    report.push("fixes-primitives", fixes, format!("primitive dimensions {dims:?}"));
    report
}
