//! Recursions for M_n1 and M_nm in the free dipterous algebra.

use std::sync::Arc;

use cha_core::{LinComb, Report};
use cha_multibrace::MbStructure;

use crate::context::succ_lin;
use crate::dipt::{DiptMono, FreeDipt};
use crate::extract::mb_from_dipt;

type El = LinComb<DiptMono>;

fn gens(d: &FreeDipt, from: u32, n: usize) -> Vec<El> {
    (0..n as u32).map(|i| d.gen(from + i)).collect()
}

/// (left side, right side) of
/// M_n1(x_1…x_n; y) = M_(n−1)1((x_1≻x_2)x_3…x_n; y) − x_1≻M_(n−1)1(x_2…x_n; y).
pub fn first_identity(d: &FreeDipt, m: &MbStructure<DiptMono>, n: usize) -> (El, El) {
    let xs = gens(d, 1, n);
    let y = d.gen(n as u32 + 1);
    let left = m.m_lin(&xs, std::slice::from_ref(&y));
    let mut merged = vec![succ_lin(d, &xs[0], &xs[1]).unwrap()];
    merged.extend_from_slice(&xs[2..]);
    let right = m.m_lin(&merged, std::slice::from_ref(&y))
        - succ_lin(d, &xs[0], &m.m_lin(&xs[1..], std::slice::from_ref(&y))).unwrap();
    (left, right)
}

/// (left side, M_n(m−1)(x; (y_1≻y_2)y_3…y_m), y_1≻M_n(m−1)(x; y_2…y_m)).
pub fn second_identity_parts(d: &FreeDipt, mb: &MbStructure<DiptMono>, n: usize, m: usize) -> (El, El, El) {
    let xs = gens(d, 1, n);
    let ys = gens(d, n as u32 + 1, m);
    let left = mb.m_lin(&xs, &ys);
    let mut merged = vec![succ_lin(d, &ys[0], &ys[1]).unwrap()];
    merged.extend_from_slice(&ys[2..]);
    let first = mb.m_lin(&xs, &merged);
    let second = succ_lin(d, &ys[0], &mb.m_lin(&xs, &ys[1..])).unwrap();
    (left, first, second)
}

/// The first identity for n = 3, 4 and the second for (n, m) in
/// {(1,2), (2,2), (1,3)}, restricted to n+1 ≤ maxdeg and n+m ≤ maxdeg.
pub fn check_dipterous_recursions(maxdeg: usize) -> Report {
    let d = Arc::new(FreeDipt::new());
    let mb = mb_from_dipt(d.clone(), maxdeg.max(2));
    let mut report = Report::new("dipterous-recursions");
    for n in [3, 4] {
        if n + 1 > maxdeg {
            continue;
        }
        let (l, r) = first_identity(&d, &mb, n);
        report.push(format!("first-n{n}"), l == r, format!("M_{n}1 has {} terms", l.len()));
    }
    for (n, m) in [(1, 2), (2, 2), (1, 3)] {
        if n + m > maxdeg {
            continue;
        }
        let (l, a, b) = second_identity_parts(&d, &mb, n, m);
        let holds = l == &a - &b;
        let detail = if holds {
            format!("M_{n}{m} has {} terms", l.len())
        } else if l == &a + &b {
            "holds only with +y_1≻M".to_string()
        } else {
            "fails with either sign".to_string()
        };
        report.push(format!("second-n{n}-m{m}"), holds, detail);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_arguments_vanish() {
        let d = Arc::new(FreeDipt::new());
        let mb = mb_from_dipt(d.clone(), 6);
        let one = LinComb::basis(DiptMono::unit());
        assert!(mb.m_lin(&[one.clone(), d.gen(1)], &[]).is_zero());
    }

    #[test]
    fn recursions_hold() {
        let r = check_dipterous_recursions(5);
        assert!(r.ok(), "{r}");
    }
}
