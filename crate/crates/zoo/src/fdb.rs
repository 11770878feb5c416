//! The Faà di Bruno pre-Lie algebra on x_1, x_2, … and the coproduct of
//! its dual polynomial algebra in a_1, a_2, ….

use std::sync::Arc;

use num_bigint::BigInt;

use cha_core::error::check_bound;
use cha_core::scalar::{factorial, int, zero};
use cha_core::{Error, LinComb, Report, Result, Scalar, SymWord};
use cha_symmetric::prelie::{associator, check_symmetric_brace, PreLie};
use cha_symmetric::{guin_oudom, smb_to_product, SmbStructure};

type Coefficient = Arc<dyn Fn(usize, usize) -> Scalar + Send + Sync>;

/// {x_p, x_q} = c(p, q) x_{p+q} on generators indexed from 1.
#[derive(Clone)]
pub struct FaaDiBruno {
    coefficient: Coefficient,
}

impl FaaDiBruno {
    /// c(p, q) = −p.
    pub fn new() -> Self {
        FaaDiBruno::with_coefficient(|p, _| int(-(p as i64)))
    }

    pub fn with_coefficient(c: impl Fn(usize, usize) -> Scalar + Send + Sync + 'static) -> Self {
        FaaDiBruno { coefficient: Arc::new(c) }
    }
}

impl Default for FaaDiBruno {
    fn default() -> Self {
        FaaDiBruno::new()
    }
}

impl PreLie for FaaDiBruno {
    type Elem = usize;
    fn prelie(&self, p: &usize, q: &usize) -> LinComb<usize> {
        LinComb::term(p + q, (self.coefficient)(*p, *q))
    }
}

fn positive(indices: &[usize]) -> Result<()> {
    if indices.contains(&0) {
        Err(Error::invalid("generator indices start at 1"))
    } else {
        Ok(())
    }
}

/// {x_p, x_q} = −p·x_{p+q}.
pub fn fdb_prelie(p: usize, q: usize) -> Result<LinComb<usize>> {
    positive(&[p, q])?;
    Ok(FaaDiBruno::new().prelie(&p, &q))
}

pub fn fdb_associator(p: usize, q: usize, r: usize) -> Result<LinComb<usize>> {
    positive(&[p, q, r])?;
    Ok(associator(&FaaDiBruno::new(), &p, &q, &r))
}

/// [x_p, x_q] = {x_p, x_q} − {x_q, x_p}.
pub fn fdb_bracket(p: usize, q: usize) -> Result<LinComb<usize>> {
    Ok(fdb_prelie(p, q)? - fdb_prelie(q, p)?)
}

/// The associator equals p²·x_{p+q+r} (so it is symmetric in q, r) for
/// all p + q + r ≤ max_weight.
pub fn check_fdb_prelie(max_weight: usize) -> Report {
    let mut report = Report::new("fdb-prelie");
    let mut failure = None;
    'all: for p in 1..=max_weight {
        for q in 1..=max_weight {
            for r in 1..=max_weight {
                if p + q + r > max_weight {
                    continue;
                }
                let value = fdb_associator(p, q, r).expect("positive indices");
                let expected = LinComb::term(p + q + r, int((p * p) as i64));
                if value != expected || value != fdb_associator(p, r, q).expect("positive indices") {
                    failure = Some(format!("(p,q,r) = ({p},{q},{r}): {value}"));
                    break 'all;
                }
            }
        }
    }
    match failure {
        None => report.pass(format!("associator-p2-weight-{max_weight}")),
        Some(w) => report.fail(format!("associator-p2-weight-{max_weight}"), w),
    }
    report
}

/// A commutative monomial a_{i_1}⋯a_{i_k}, stored by its indices.
pub type FdbMonomial = SymWord<usize>;

pub fn format_monomial(m: &FdbMonomial) -> String {
    if m.is_empty() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    let letters = m.letters();
    let mut i = 0;
    while i < letters.len() {
        let j = (i..letters.len()).find(|&j| letters[j] != letters[i]).unwrap_or(letters.len());
        match j - i {
            1 => parts.push(format!("a{}", letters[i])),
            e => parts.push(format!("a{}^{e}", letters[i])),
        }
        i = j;
    }
    parts.join("*")
}

/// `a1^e1*a2^e2*…`, or `1`.
pub fn parse_monomial(s: &str) -> Result<FdbMonomial> {
    let s = s.trim();
    if s == "1" {
        return Ok(FdbMonomial::empty());
    }
    let mut letters = Vec::new();
    let mut offset = 0;
    for factor in s.split('*') {
        let bad = || Error::parse(offset, format!("expected `aN` or `aN^E`, found `{factor}`"));
        let body = factor.strip_prefix('a').ok_or_else(bad)?;
        let (index, exponent) = match body.split_once('^') {
            Some((i, e)) => (i, e.parse::<usize>().map_err(|_| bad())?),
            None => (body, 1),
        };
        let index: usize = index.parse().map_err(|_| bad())?;
        if index == 0 || exponent == 0 {
            return Err(bad());
        }
        letters.extend(std::iter::repeat(index).take(exponent));
        offset += factor.len() + 1;
    }
    Ok(FdbMonomial::new(letters))
}

pub fn format_pairs(x: &LinComb<(FdbMonomial, FdbMonomial)>) -> String {
    x.format_with(|(a, b)| format!("{} (x) {}", format_monomial(a), format_monomial(b)))
}

/// Partitions of n into positive parts, parts nonincreasing.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            cur.push(part);
            go(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// n! / (λ_1!⋯λ_n! (1!)^{λ_1}⋯(n!)^{λ_n}) for the partition with λ_i parts equal to i.
fn multinomial(n: usize, parts: &[usize]) -> Scalar {
    let mut denominator = BigInt::from(1);
    for &p in parts {
        denominator *= factorial(p);
    }
    denominator *= SymWord::new(parts.to_vec()).multiplicity_factor();
    Scalar::new(factorial(n), denominator)
}

/// Δ(a_n) = Σ_k Σ_λ binom(n; λ, k) a_1^{λ_1}⋯a_n^{λ_n} ⊗ a_k.
pub fn fdb_coproduct(n: usize) -> Result<LinComb<(FdbMonomial, FdbMonomial)>> {
    if n == 0 {
        return Err(Error::invalid("a_n is defined for n >= 1"));
    }
    Ok(partitions(n)
        .into_iter()
        .map(|parts| {
            let c = multinomial(n, &parts);
            let k = parts.len();
            ((FdbMonomial::new(parts), FdbMonomial::letter(k)), c)
        })
        .collect())
}

/// Δ extended multiplicatively to monomials.
pub fn fdb_coproduct_monomial(m: &FdbMonomial) -> Result<LinComb<(FdbMonomial, FdbMonomial)>> {
    let mut acc = LinComb::basis((FdbMonomial::empty(), FdbMonomial::empty()));
    for &n in m.letters() {
        acc = acc.bilinear(&fdb_coproduct(n)?, |(a, b), (c, d)| LinComb::basis((a.union(c), b.union(d))));
    }
    Ok(acc)
}

/// Monomials of index weight Σ i_j = n.
pub fn monomials(n: usize) -> Vec<FdbMonomial> {
    partitions(n).into_iter().map(FdbMonomial::new).collect()
}

fn index_weight(m: &FdbMonomial) -> usize {
    m.letters().iter().sum()
}

/// Coassociativity on monomials of index weight ≤ max_weight, and
/// linearity of the second legs of Δ(a_n).
pub fn check_fdb_coproduct(max_weight: usize) -> Result<Report> {
    let mut report = Report::new("fdb-coproduct");
    let mut coassoc = None;
    let mut linear = None;
    for w in 1..=max_weight {
        for m in monomials(w) {
            let d = fdb_coproduct_monomial(&m)?;
            let left: LinComb<(FdbMonomial, FdbMonomial, FdbMonomial)> = d.try_map_linear(|(a, b)| {
                Ok::<_, Error>(fdb_coproduct_monomial(a)?.map_keys(|(x, y)| (x.clone(), y.clone(), b.clone())))
            })?;
            let right: LinComb<(FdbMonomial, FdbMonomial, FdbMonomial)> = d.try_map_linear(|(a, b)| {
                Ok::<_, Error>(fdb_coproduct_monomial(b)?.map_keys(|(x, y)| (a.clone(), x.clone(), y.clone())))
            })?;
            if coassoc.is_none() && left != right {
                coassoc = Some(format_monomial(&m));
            }
        }
        let d = fdb_coproduct(w)?;
        if linear.is_none() && d.keys().any(|(a, b)| b.degree() != 1 || index_weight(a) != w) {
            linear = Some(format!("a{w}"));
        }
    }
    match coassoc {
        None => report.pass(format!("coassociative-weight-{max_weight}")),
        Some(w) => report.fail(format!("coassociative-weight-{max_weight}"), w),
    }
    match linear {
        None => report.pass("second-legs-linear"),
        Some(w) => report.fail("second-legs-linear", w),
    }
    Ok(report)
}

/// Symmetric words in x of index weight n.
fn sym_words(n: usize) -> Vec<SymWord<usize>> {
    partitions(n).into_iter().map(SymWord::new).collect()
}

/// Pairing convention a_n = scale(n)·x*_{n−1}, with x*_0 = a_1 = 1.
pub struct DualBasis {
    pub name: &'static str,
    scale: Arc<dyn Fn(usize) -> Scalar + Send + Sync>,
}

impl DualBasis {
    pub fn new(name: &'static str, scale: impl Fn(usize) -> Scalar + Send + Sync + 'static) -> Self {
        DualBasis { name, scale: Arc::new(scale) }
    }

    /// a_n = (1/n!)·x*_{n−1}.
    pub fn inverse_factorial() -> Self {
        DualBasis::new("a_n = x*_(n-1) / n!", |n| Scalar::new(1.into(), factorial(n)))
    }

    /// a_n = n!·x*_{n−1}.
    pub fn factorial() -> Self {
        DualBasis::new("a_n = n! x*_(n-1)", |n| Scalar::from_integer(factorial(n)))
    }

    pub fn scale(&self, n: usize) -> Scalar {
        (self.scale)(n)
    }

    /// The dual basis vector of a symmetric word X, written in the a's:
    /// X* = Π_j x*_{m_j} / mult(X) and x*_m = a_{m+1} / scale(m+1).
    pub fn dual_of(&self, x: &SymWord<usize>) -> (FdbMonomial, Scalar) {
        let mut c = Scalar::new(1.into(), x.multiplicity_factor());
        for &m in x.letters() {
            c /= self.scale(m + 1);
        }
        (FdbMonomial::new(x.letters().iter().map(|m| m + 1).collect()), c)
    }
}

/// Δ(a_n) with a_1 set to 1, as read off from a product on S^c(F) through
/// ⟨Δ(a_n), X ⊗ Y⟩ = ⟨a_n, Y * X⟩, the orientation of the GL/CK pairing.
pub fn dual_coproduct(smb: &SmbStructure<usize>, basis: &DualBasis, n: usize) -> Result<LinComb<(FdbMonomial, FdbMonomial)>> {
    let d = n - 1;
    let target = SymWord::letter(d);
    let mut out = LinComb::zero();
    for i in 0..=d {
        for x in sym_words(i) {
            for y in sym_words(d - i) {
                let c = smb_to_product(smb, &y, &x)?.coeff(&target);
                if c == zero() {
                    continue;
                }
                let (mx, cx) = basis.dual_of(&x);
                let (my, cy) = basis.dual_of(&y);
                out.add_term((mx, my), c * cx * cy * basis.scale(n));
            }
        }
    }
    Ok(out)
}

fn drop_a1(m: &FdbMonomial) -> FdbMonomial {
    FdbMonomial::new(m.letters().iter().copied().filter(|&i| i != 1).collect())
}

/// The displayed Δ(a_n) with a_1 = 1.
pub fn fdb_coproduct_reduced(n: usize) -> Result<LinComb<(FdbMonomial, FdbMonomial)>> {
    Ok(fdb_coproduct(n)?.map_keys(|(a, b)| (drop_a1(a), drop_a1(b))))
}

/// Compares the coproduct dual to the symmetric-brace product of `prelie`
/// with the displayed Δ(a_n) for n − 1 = 1..=maxdeg.
pub fn fdb_cross_check_with(prelie: FaaDiBruno, basis: &DualBasis, maxdeg: usize) -> Result<Report> {
    check_bound(maxdeg, 5)?;
    let mut report = Report::new("fdb-cross-check");
    report.note("convention", basis.name);
    let samples: Vec<usize> = (1..=maxdeg.max(1)).collect();
    let go = guin_oudom(Arc::new(prelie), &samples)?;
    let smb = go.to_smb(maxdeg.max(1)).memoized();
    for d in 1..=maxdeg {
        let n = d + 1;
        let computed = dual_coproduct(&smb, basis, n)?;
        let displayed = fdb_coproduct_reduced(n)?;
        let id = format!("weight-{d}");
        if computed == displayed {
            report.pass(id);
        } else {
            report.fail(
                id,
                format!("Delta(a{n}) from the product: {}; displayed: {}", format_pairs(&computed), format_pairs(&displayed)),
            );
        }
    }
    Ok(report)
}

/// The cross-check for {x_p, x_q} = −p x_{p+q} and a_n = (1/n!) x*_{n−1}.
pub fn fdb_cross_check(maxdeg: usize) -> Result<Report> {
    fdb_cross_check_with(FaaDiBruno::new(), &DualBasis::inverse_factorial(), maxdeg)
}

/// The same comparison for {x_p, x_q} = (p+1) x_{p+q} and a_n = n! x*_{n−1}.
pub fn fdb_cross_check_shifted(maxdeg: usize) -> Result<Report> {
    let prelie = FaaDiBruno::with_coefficient(|p, _| int(p as i64 + 1));
    fdb_cross_check_with(prelie, &DualBasis::factorial(), maxdeg)
}

/// The symmetric brace relation for the Guin–Oudom braces of F.
pub fn check_fdb_braces(max_arity: usize) -> Result<Report> {
    let samples: Vec<usize> = (1..=3).collect();
    let go = guin_oudom(Arc::new(FaaDiBruno::new()), &samples)?;
    let smb = go.to_smb(max_arity.max(1));
    Ok(check_symmetric_brace(&smb, &[1, 2, 1, 3, 2], max_arity))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cha_core::scalar::{frac, one};

    fn m(s: &str) -> FdbMonomial {
        parse_monomial(s).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(fdb_prelie(1, 1).unwrap(), LinComb::term(2, int(-1)));
        assert_eq!(fdb_associator(2, 1, 1).unwrap(), LinComb::term(4, int(4)));
        assert_eq!(fdb_bracket(1, 3).unwrap(), LinComb::term(4, int(2)));
        assert!(fdb_prelie(0, 2).is_err());
    }

    #[test]
    fn monomial_text() {
        assert_eq!(format_monomial(&m("a2*a1^2")), "a1^2*a2");
        assert_eq!(m("1"), FdbMonomial::empty());
        assert!(parse_monomial("a0").is_err());
        assert!(parse_monomial("b1").is_err());
    }

    #[test]
    fn low_coproducts() {
        let one_pair: LinComb<_> = [((m("a1"), m("a1")), one())].into_iter().collect();
        assert_eq!(fdb_coproduct(1).unwrap(), one_pair);
        let two: LinComb<_> = [((m("a2"), m("a1")), one()), ((m("a1^2"), m("a2")), one())].into_iter().collect();
        assert_eq!(fdb_coproduct(2).unwrap(), two);
        assert_eq!(fdb_coproduct(3).unwrap().coeff(&(m("a1*a2"), m("a2"))), int(3));
        assert_eq!(multinomial(4, &[2, 2]), int(3));
        assert_eq!(DualBasis::inverse_factorial().scale(3), frac(1, 6));
    }
}
