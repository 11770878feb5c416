//! Truncated integer power series and the generating-series identities.

use cha_core::Report;
use num_bigint::BigInt;

use crate::planar;

/// Coefficients c_0, c_1, …, truncated at a fixed length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series(pub Vec<BigInt>);

impl Series {
    pub fn from_u64(coeffs: &[u64]) -> Self {
        Series(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn at(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &Series) -> Series {
        let n = self.len().min(other.len());
        Series((0..n).map(|k| (0..=k).map(|i| self.at(i) * other.at(k - i)).sum()).collect())
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.len().min(other.len());
        Series((0..n).map(|k| self.at(k) + other.at(k)).collect())
    }

    /// `self ∘ g` for `g` without constant term.
    pub fn compose(&self, g: &Series) -> Series {
        assert!(g.at(0) == BigInt::from(0), "inner series must vanish at 0");
        let n = self.len().min(g.len());
        let mut out = Series(vec![BigInt::from(0); n]);
        let mut power = Series((0..n).map(|i| BigInt::from((i == 0) as u8)).collect());
        for k in 0..n {
            for i in 0..n {
                out.0[i] += self.at(k) * power.at(i);
            }
            power = power.mul(g);
        }
        out
    }
}

/// Checks f_A = f_C ∘ f_P coefficientwise in degrees 1..=maxdeg; inputs
/// list the coefficients of degrees 1, 2, ….
pub fn check_composition(name: &str, a: &[u64], c: &[u64], p: &[u64], maxdeg: usize) -> Report {
    let mut report = Report::new(format!("series-{name}"));
    let lift = |v: &[u64]| {
        let mut s = vec![0u64];
        s.extend(v.iter().take(maxdeg));
        Series::from_u64(&s)
    };
    let (fa, fc, fp) = (lift(a), lift(c), lift(p));
    let comp = fc.compose(&fp);
    for k in 1..=maxdeg {
        let lhs = fa.at(k);
        let rhs = comp.at(k);
        if lhs == rhs {
            report.pass(format!("t^{k}"));
        } else {
            report.fail(format!("t^{k}"), format!("f_A has {lhs}, composite has {rhs}"));
            break;
        }
    }
    report
}

/// 2tC² − (1+t)C + 1 = 0 for C(t) = Σ |PT_{n+1}| tⁿ, through t^maxdeg.
pub fn check_supercatalan(maxdeg: usize) -> Report {
    let mut report = Report::new("supercatalan");
    let coeffs: Vec<u64> = (1..=maxdeg + 1).map(|n| planar::enumerate(n).len() as u64).collect();
    let c = Series::from_u64(&coeffs);
    let c2 = c.mul(&c);
    for k in 0..=maxdeg {
        let two_t_c2 = if k == 0 { BigInt::from(0) } else { BigInt::from(2) * c2.at(k - 1) };
        let one_plus_t_c = c.at(k) + if k == 0 { BigInt::from(0) } else { c.at(k - 1) };
        let constant = BigInt::from((k == 0) as u8);
        let value = two_t_c2 - one_plus_t_c + constant;
        if value == BigInt::from(0) {
            report.pass(format!("t^{k}"));
        } else {
            report.fail(format!("t^{k}"), format!("coefficient {value} (|PT| row {coeffs:?})"));
            break;
        }
    }
    report
}
