//! Graded dimensions of the one-generator free algebras and their primitive
//! parts, and the generating-series identities relating them.

use cha_combinatorics::series::check_composition;
use cha_core::Report;

use crate::dend::FreeDend;
use crate::dipt::FreeDipt;
use crate::idempotent::primitive_dimension;

pub fn dipt_dims(maxdeg: usize) -> Vec<u64> {
    let d = FreeDipt::new();
    (1..=maxdeg).map(|n| d.basis(n).len() as u64).collect()
}

pub fn dend_dims(maxdeg: usize) -> Vec<u64> {
    let d = FreeDend::new();
    (1..=maxdeg).map(|n| d.basis(n).len() as u64).collect()
}

/// dim Prim(Dipt)_n, computed as the kernel of the reduced coproduct.
pub fn mb_dims(maxdeg: usize) -> Vec<u64> {
    let d = FreeDipt::new();
    (1..=maxdeg).map(|n| primitive_dimension(&d, &d.basis(n)) as u64).collect()
}

pub fn brace_dims(maxdeg: usize) -> Vec<u64> {
    let d = FreeDend::new();
    (1..=maxdeg).map(|n| primitive_dimension(&d, &d.basis(n)) as u64).collect()
}

/// f_A = f_As ∘ f_P for (As, Dend, Brace) and (As, Dipt, MB).
pub fn check_series(maxdeg: usize) -> Report {
    let ones = vec![1u64; maxdeg];
    let mut report = Report::new("series");
    report.merge(check_composition("As-Dend-Brace", &dend_dims(maxdeg), &ones, &brace_dims(maxdeg), maxdeg));
    report.merge(check_composition("As-Dipt-MB", &dipt_dims(maxdeg), &ones, &mb_dims(maxdeg), maxdeg));
    report
}
