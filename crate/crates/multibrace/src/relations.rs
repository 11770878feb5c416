//! Checkers for the relations R_ijk, the brace relation and right-sidedness.

use cha_combinatorics::composition::weak;
use cha_core::{Error, Key, LinComb, Report, Result};

use crate::product::{length_tuples, mb_to_product, product_to_mb, sample_tuples, ChaProduct};
use crate::structure::{BraceStructure, MbStructure};

fn show<G: Key>(x: &LinComb<G>) -> String {
    x.format_with(|g| format!("{g:?}"))
}

/// Both sides of R_ijk on (u, v, w): the R-components of (u*v)*w and u*(v*w),
/// each written as Σ M_{l,k}(blocks of u*v; w) and Σ M_{i,l}(u; blocks of v*w).
pub fn r_sides<G: Key>(m: &MbStructure<G>, u: &[G], v: &[G], w: &[G]) -> Result<(LinComb<G>, LinComb<G>)> {
    let uv = mb_to_product(m, u, v)?;
    let vw = mb_to_product(m, v, w)?;
    let left = uv.map_linear(|word| m.m(word, w));
    let right = vw.map_linear(|word| m.m(u, word));
    Ok((left, right))
}

/// R_ijk on the given sample triples (u, v, w) of lengths (i, j, k).
pub fn check_r<G: Key>(m: &MbStructure<G>, i: usize, j: usize, k: usize, samples: &[(Vec<G>, Vec<G>, Vec<G>)]) -> Result<Report> {
    if i + j + k > m.bound() {
        return Err(Error::DegreeBound { degree: i + j + k, bound: m.bound() });
    }
    let mut report = Report::new("R");
    let id = format!("R{i}{j}{k}");
    for (u, v, w) in samples {
        if (u.len(), v.len(), w.len()) != (i, j, k) {
            return Err(Error::invalid(format!("sample lengths do not match R{i}{j}{k}")));
        }
        let (left, right) = r_sides(m, u, v, w)?;
        if left != right {
            let diff = &left - &right;
            let (g, c) = diff.first().unwrap();
            report.fail(id, format!("u={u:?} v={v:?} w={w:?}: first differing term {g:?} with coefficient {c}"));
            return Ok(report);
        }
    }
    report.pass(id);
    Ok(report)
}

/// Every R_ijk with i, j, k ≥ 1 and i+j+k ≤ maxdeg, on samples drawn from `alphabet`.
pub fn check_r_all<G: Key>(m: &MbStructure<G>, alphabet: &[G], maxdeg: usize) -> Result<Report> {
    let mut report = Report::new("R");
    for lens in length_tuples(3, maxdeg) {
        if lens.iter().any(|&l| l == 0) {
            continue;
        }
        let samples: Vec<_> = sample_tuples(alphabet, &lens)
            .into_iter()
            .map(|t| (t[0].clone(), t[1].clone(), t[2].clone()))
            .collect();
        report.merge(check_r(m, lens[0], lens[1], lens[2], &samples)?);
    }
    Ok(report)
}

/// Right-hand side of the brace relation: z's distributed in order around
/// and into the y's.
pub fn brace_relation_rhs<G: Key>(b: &BraceStructure<G>, x: &G, ys: &[G], zs: &[G]) -> LinComb<G> {
    let n = ys.len();
    let mut out = LinComb::zero();
    for parts in weak(zs.len(), 2 * n + 1) {
        let mut args: Vec<LinComb<G>> = Vec::new();
        let mut pos = 0;
        for (slot, &size) in parts.0.iter().enumerate() {
            let block = &zs[pos..pos + size];
            pos += size;
            if slot % 2 == 0 {
                args.extend(block.iter().map(|z| LinComb::basis(z.clone())));
            } else {
                args.push(b.brace(&ys[slot / 2], block));
            }
        }
        out += b.brace_lin(&LinComb::basis(x.clone()), &args);
    }
    out
}

/// {{x; y_1..y_n}; z_1..z_m} against the distributed sum on each sample.
pub fn check_brace<G: Key>(b: &BraceStructure<G>, n: usize, m: usize, samples: &[(G, Vec<G>, Vec<G>)]) -> Result<Report> {
    if 1 + n + m > b.bound() {
        return Err(Error::DegreeBound { degree: 1 + n + m, bound: b.bound() });
    }
    let mut report = Report::new("brace");
    let id = format!("brace-{n}-{m}");
    for (x, ys, zs) in samples {
        if (ys.len(), zs.len()) != (n, m) {
            return Err(Error::invalid("sample lengths do not match the arity"));
        }
        let inner = b.brace(x, ys);
        let zs_lin: Vec<LinComb<G>> = zs.iter().map(|z| LinComb::basis(z.clone())).collect();
        let left = b.brace_lin(&inner, &zs_lin);
        let right = brace_relation_rhs(b, x, ys, zs);
        if left != right {
            report.fail(id, format!("x={x:?} ys={ys:?} zs={zs:?}: difference {}", show(&(left - right))));
            return Ok(report);
        }
    }
    report.pass(id);
    Ok(report)
}

/// Every brace relation with 1+n+m ≤ maxdeg, on samples drawn from `alphabet`.
pub fn check_brace_all<G: Key>(b: &BraceStructure<G>, alphabet: &[G], maxdeg: usize) -> Result<Report> {
    let mut report = Report::new("brace");
    for n in 0..maxdeg {
        for m in 0..maxdeg - n {
            let samples: Vec<_> = sample_tuples(alphabet, &[1, n, m])
                .into_iter()
                .map(|t| (t[0][0].clone(), t[1].clone(), t[2].clone()))
                .collect();
            report.merge(check_brace(b, n, m, &samples)?);
        }
    }
    Ok(report)
}

/// Outcome of the two right-sidedness tests.
#[derive(Clone, Debug)]
pub struct RightSided {
    /// Words of length ≥ q multiply into words of length ≥ q.
    pub ideal: bool,
    /// The extracted M_pq vanish for p ≥ 2.
    pub vanishing: bool,
    pub violations: Vec<String>,
}

impl RightSided {
    pub fn is_rightsided(&self) -> bool {
        self.ideal && self.vanishing
    }

    pub fn agree(&self) -> bool {
        self.ideal == self.vanishing
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("right-sided");
        r.push("agree", self.agree(), format!("ideal={} vanishing={}", self.ideal, self.vanishing));
        r
    }
}

pub fn check_rightsided<G: Key>(star: &ChaProduct<G>, maxdeg: usize) -> RightSided {
    let m = product_to_mb(star);
    let mut out = RightSided { ideal: true, vanishing: true, violations: Vec::new() };
    for lens in length_tuples(2, maxdeg.min(star.bound())) {
        for t in sample_tuples(star.alphabet(), &lens) {
            let (u, v) = (&t[0], &t[1]);
            let prod = star.mul(u, v).unwrap();
            if let Some((w, _)) = prod.iter().find(|(w, _)| w.len() < u.len()) {
                out.ideal = false;
                out.violations.push(format!("ideal: {u:?}*{v:?} contains {w:?}"));
            }
            if u.len() >= 2 && !v.is_empty() {
                let value = m.m(u, v);
                if !value.is_zero() {
                    out.vanishing = false;
                    out.violations.push(format!("M{}{}({u:?};{v:?}) = {}", u.len(), v.len(), show(&value)));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cha_core::scalar::int;

    #[test]
    fn trivial_satisfies_everything() {
        let m = MbStructure::<u32>::trivial(6);
        let r = check_r_all(&m, &[1, 2, 3], 5).unwrap();
        assert!(r.ok(), "{r}");
        let b = BraceStructure::<u32>::new(6, |_, _| LinComb::zero());
        assert!(check_brace_all(&b, &[1, 2, 3], 5).unwrap().ok());
    }

    #[test]
    fn r111_instance() {
        // M_11(x; y) = x + y on integer letters, M_pq = 0 otherwise: associative and commutative.
        let m = MbStructure::<u32>::new(6, |u, v| {
            if u.len() == 1 && v.len() == 1 {
                LinComb::basis(u[0] + v[0])
            } else {
                LinComb::zero()
            }
        });
        let (l, r) = r_sides(&m, &[1], &[10], &[100]).unwrap();
        // explicit R_111: M_21(uv+vu; w) + M_11(M_11(u;v); w) = M_11(u; M_11(v;w)) + M_12(u; vw+wv)
        assert_eq!(l, LinComb::basis(111));
        assert_eq!(r, LinComb::basis(111));
    }

    #[test]
    fn nonassociative_fails_r111() {
        let m = MbStructure::<u32>::new(6, |u, v| {
            if u.len() == 1 && v.len() == 1 {
                LinComb::basis(2 * u[0] + v[0])
            } else {
                LinComb::zero()
            }
        });
        let r = check_r(&m, 1, 1, 1, &[(vec![1], vec![10], vec![100])]).unwrap();
        assert!(!r.ok());
    }

    #[test]
    fn rightsided_examples() {
        let alphabet: Vec<u32> = (1..=3).collect();
        let sh = ChaProduct::shuffle(6, alphabet.clone());
        let rs = check_rightsided(&sh, 4);
        assert!(rs.is_rightsided() && rs.agree());

        let with_m21 = MbStructure::<u32>::new(6, |u, v| {
            if u.len() == 2 && v.len() == 1 {
                LinComb::term(u[0] + u[1] + v[0], int(1))
            } else {
                LinComb::zero()
            }
        });
        let rs = check_rightsided(&ChaProduct::from_mb(with_m21, alphabet.clone()), 4);
        assert!(!rs.ideal && !rs.vanishing && rs.agree());

        let brace = BraceStructure::<u32>::new(6, |x, ys| LinComb::basis(x * 7 + ys.iter().sum::<u32>()));
        let rs = check_rightsided(&ChaProduct::from_mb(brace.into_mb(), alphabet), 4);
        assert!(rs.is_rightsided() && rs.agree());
    }
}
