//! Eulerian idempotents e^(i) = (e^(1))^{⋆i}/i! on a cocommutative
//! conilpotent Hopf algebra.

use std::fmt::Debug;

use cha_core::hopf::{augmentation_part, eulerian};
use cha_core::{Algebra, Coalgebra, LinComb, Report, Result};

/// e^(i) applied to `x`.
pub fn eulerian_idempotent<C: Algebra + Coalgebra>(
    c: &C,
    i: usize,
    x: &LinComb<C::Key>,
    bound: usize,
) -> Result<LinComb<C::Key>> {
    eulerian(c, i, x, bound)
}

/// Σ_i e^(i) = Id on the augmentation ideal and e^(i)∘e^(j) = δ_ij e^(i),
/// on samples of degree ≤ bound.
pub fn check_eulerian<C>(c: &C, samples: &[C::Key], bound: usize) -> Result<Report>
where
    C: Algebra + Coalgebra,
    C::Key: Debug,
{
    let mut report = Report::new("eulerian");
    let mut resolution = None;
    let mut orthogonal = None;
    for k in samples {
        let n = c.degree(k);
        if n == 0 {
            continue;
        }
        let x = LinComb::basis(k.clone());
        let parts: Vec<_> = (1..=n).map(|i| eulerian(c, i, &x, bound)).collect::<Result<_>>()?;
        let total: LinComb<C::Key> = parts.iter().cloned().sum();
        if resolution.is_none() && total != augmentation_part(c, &x) {
            resolution = Some(format!("{k:?}"));
        }
        for (i, part) in parts.iter().enumerate() {
            for j in 1..=n {
                let twice = eulerian(c, j, part, bound)?;
                let expected = if i + 1 == j { part.clone() } else { LinComb::zero() };
                if orthogonal.is_none() && twice != expected {
                    orthogonal = Some(format!("e^({j}) e^({}) on {k:?}", i + 1));
                }
            }
        }
    }
    for (id, failure) in [("sum-is-identity", resolution), ("orthogonal-idempotents", orthogonal)] {
        match failure {
            Some(w) => report.fail(id, w),
            None => report.pass(id),
        }
    }
    Ok(report)
}
