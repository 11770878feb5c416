//! Quasi-symmetric functions in the monomial basis x_{n_1…n_r}: the
//! quasi-shuffle product, deconcatenation, the extracted multibrace data
//! and the commutative tridendriform split.

use std::fmt;

use cha_combinatorics::cursor::Cursor;
use cha_core::scalar::one;
use cha_core::{Algebra, Coalgebra, Error, Graded, LinComb, Report, Result};
use cha_multibrace::{product_to_mb, ChaProduct};

/// A composition with positive parts; the empty one is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QsymKey(Vec<usize>);

impl QsymKey {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("composition parts are positive"));
        }
        Ok(QsymKey(parts))
    }

    pub fn unit() -> Self {
        QsymKey(Vec::new())
    }

    pub fn part(n: usize) -> Self {
        assert!(n > 0, "composition parts are positive");
        QsymKey(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// `x[n1,n2,…]`, or `1` for the empty composition.
    pub fn parse(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s.trim());
        if c.peek() == Some(b'1') {
            c.bump();
            c.finish()?;
            return Ok(QsymKey::unit());
        }
        c.expect(b'x')?;
        c.expect(b'[')?;
        let mut parts = Vec::new();
        loop {
            c.skip_ws();
            let start = c.pos;
            let n = c.number()?;
            if n == 0 {
                return Err(c.error_at(start, "composition parts are positive"));
            }
            parts.push(n);
            match c.bump() {
                Some(b',') => continue,
                Some(b']') => break,
                _ => return Err(c.error("expected `,` or `]`")),
            }
        }
        c.finish()?;
        Ok(QsymKey(parts))
    }
}

impl fmt::Display for QsymKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "x[{}]", parts.join(","))
    }
}

pub type QsymElement = LinComb<QsymKey>;

fn prepend(head: usize, rest: &LinComb<Vec<usize>>) -> LinComb<Vec<usize>> {
    rest.map_keys(|w| {
        let mut v = Vec::with_capacity(w.len() + 1);
        v.push(head);
        v.extend_from_slice(w);
        v
    })
}

/// The quasi-shuffle of two sequences of parts.
pub fn quasi_shuffle(a: &[usize], b: &[usize]) -> LinComb<Vec<usize>> {
    let (Some((&x, a_rest)), Some((&y, b_rest))) = (a.split_first(), b.split_first()) else {
        return LinComb::basis([a, b].concat());
    };
    let mut out = prepend(x, &quasi_shuffle(a_rest, b));
    out += prepend(y, &quasi_shuffle(a, b_rest));
    out += prepend(x + y, &quasi_shuffle(a_rest, b_rest));
    out
}

pub fn qsym_product(a: &QsymElement, b: &QsymElement) -> QsymElement {
    a.bilinear(b, |u, v| quasi_shuffle(&u.0, &v.0).map_keys(|w| QsymKey(w.clone())))
}

/// Deconcatenation Σ_j x_{n_1…n_j} ⊗ x_{n_{j+1}…n_r}.
pub fn qsym_coproduct(k: &QsymKey) -> LinComb<(QsymKey, QsymKey)> {
    (0..=k.0.len()).map(|j| ((QsymKey(k.0[..j].to_vec()), QsymKey(k.0[j..].to_vec())), one())).collect()
}

/// The three parts of the quasi-shuffle of nonempty a and b, sorted by
/// where the first part of each term comes from: (a only, b only, merged).
pub fn ctd_split(a: &QsymKey, b: &QsymKey) -> Result<(QsymElement, QsymElement, QsymElement)> {
    let (Some((&x, a_rest)), Some((&y, b_rest))) = (a.0.split_first(), b.0.split_first()) else {
        return Err(Error::invalid("the tridendriform operations need nonempty keys"));
    };
    let wrap = |head: usize, l: &[usize], r: &[usize]| prepend(head, &quasi_shuffle(l, r)).map_keys(|w| QsymKey(w.clone()));
    Ok((wrap(x, a_rest, &b.0), wrap(y, &a.0, b_rest), wrap(x + y, a_rest, b_rest)))
}

/// x ≺ y: terms whose first part comes from x alone.
pub fn ctd_prec(x: &QsymElement, y: &QsymElement) -> Result<QsymElement> {
    x.try_bilinear(y, |a, b| Ok(ctd_split(a, b)?.0))
}

/// x · y: terms whose first part is a merge.
pub fn ctd_dot(x: &QsymElement, y: &QsymElement) -> Result<QsymElement> {
    x.try_bilinear(y, |a, b| Ok(ctd_split(a, b)?.2))
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Qsym;

impl Graded for Qsym {
    type Key = QsymKey;
    fn unit(&self) -> QsymKey {
        QsymKey::unit()
    }
    fn degree(&self, k: &QsymKey) -> usize {
        k.degree()
    }
}

impl Algebra for Qsym {
    fn product(&self, a: &QsymKey, b: &QsymKey) -> QsymElement {
        quasi_shuffle(&a.0, &b.0).map_keys(|w| QsymKey(w.clone()))
    }
}

impl Coalgebra for Qsym {
    fn coproduct(&self, k: &QsymKey) -> LinComb<(QsymKey, QsymKey)> {
        qsym_coproduct(k)
    }
}

/// Compositions of n.
pub fn compositions(n: usize) -> Vec<QsymKey> {
    cha_combinatorics::composition::positive(n).into_iter().map(|c| QsymKey(c.0)).collect()
}

/// The quasi-shuffle on T^c(⊕ K x_n), with letters the parts.
pub fn qsym_tensor_product(bound: usize, max_part: usize) -> ChaProduct<usize> {
    ChaProduct::new(bound, (1..=max_part).collect(), |u, v| Ok(quasi_shuffle(u, v)))
}

/// The multibrace data of the quasi-shuffle against the table
/// M_11(x_i; x_j) = x_{i+j}, every other M_pq = 0, on inputs of degree ≤ maxdeg.
pub fn qsym_mb_check(maxdeg: usize) -> Report {
    let mut report = Report::new("qsym-mb");
    let star = qsym_tensor_product(maxdeg, maxdeg);
    let mb = product_to_mb(&star);
    let mut table = None;
    'all: for n in 2..=maxdeg {
        for a in 0..=n {
            for u in compositions(a) {
                for v in compositions(n - a) {
                    let (p, q) = (u.0.len(), v.0.len());
                    if p + q < 2 {
                        continue;
                    }
                    let got = mb.m(&u.0, &v.0);
                    let expected = if (p, q) == (1, 1) { LinComb::basis(u.0[0] + v.0[0]) } else { LinComb::zero() };
                    if got != expected {
                        table = Some(format!("M_{p}{q}({u}; {v}) = {}", got.format_with(|i| format!("x[{i}]"))));
                        break 'all;
                    }
                }
            }
        }
    }
    match table {
        None => report.pass(format!("table-deg-{maxdeg}")),
        Some(w) => report.fail(format!("table-deg-{maxdeg}"), w),
    }
    report
}

/// The four commutative tridendriform relations on all triples of nonempty
/// keys of total degree ≤ maxdeg.
pub fn qsym_ctd_check(maxdeg: usize) -> Result<Report> {
    let mut report = Report::new("qsym-ctd");
    let b = |k: &QsymKey| LinComb::basis(k.clone());
    type Side = fn(&QsymElement, &QsymElement, &QsymElement) -> Result<(QsymElement, QsymElement)>;
    let relations: [(&str, Side); 4] = [
        ("prec-prec", |x, y, z| {
            let inner = ctd_prec(y, z)? + ctd_prec(z, y)? + ctd_dot(y, z)?;
            Ok((ctd_prec(&ctd_prec(x, y)?, z)?, ctd_prec(x, &inner)?))
        }),
        ("prec-dot", |x, y, z| Ok((ctd_dot(&ctd_prec(x, y)?, z)?, ctd_dot(x, &ctd_prec(z, y)?)?))),
        ("dot-prec", |x, y, z| Ok((ctd_prec(&ctd_dot(x, y)?, z)?, ctd_dot(x, &ctd_prec(y, z)?)?))),
        ("dot-dot", |x, y, z| Ok((ctd_dot(&ctd_dot(x, y)?, z)?, ctd_dot(x, &ctd_dot(y, z)?)?))),
    ];
    let mut triples = Vec::new();
    for i in 1..=maxdeg {
        for j in 1..=maxdeg.saturating_sub(i) {
            for k in 1..=maxdeg.saturating_sub(i + j) {
                for x in compositions(i) {
                    for y in compositions(j) {
                        for z in compositions(k) {
                            triples.push((x.clone(), y.clone(), z));
                        }
                    }
                }
            }
        }
    }
    for (name, sides) in relations {
        let mut failure = None;
        for (x, y, z) in &triples {
            let (left, right) = sides(&b(x), &b(y), &b(z))?;
            if left != right {
                failure = Some(format!("x={x} y={y} z={z}: {left} vs {right}"));
                break;
            }
        }
        match failure {
            None => report.pass(name),
            Some(w) => report.fail(name, w),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cha_core::scalar::int;

    fn k(s: &str) -> QsymKey {
        QsymKey::parse(s).unwrap()
    }

    #[test]
    fn small_products() {
        let got = qsym_product(&LinComb::basis(k("x[1]")), &LinComb::basis(k("x[1]")));
        let expected: QsymElement = [(k("x[1,1]"), int(2)), (k("x[2]"), int(1))].into_iter().collect();
        assert_eq!(got, expected);
        let got = qsym_product(&LinComb::basis(k("x[1]")), &LinComb::basis(k("x[2]")));
        assert_eq!(got.to_string(), "x[1,2] + x[2,1] + x[3]");
        assert_eq!(qsym_product(&LinComb::basis(QsymKey::unit()), &LinComb::basis(k("x[2,1]"))), LinComb::basis(k("x[2,1]")));
    }

    #[test]
    fn text_forms() {
        assert_eq!(k("x[2,1]").to_string(), "x[2,1]");
        assert_eq!(k("1"), QsymKey::unit());
        assert!(QsymKey::parse("x[0]").is_err());
        assert!(QsymKey::parse("x[1,").is_err());
        assert!(QsymKey::parse("y[1]").is_err());
    }

    #[test]
    fn deconcatenation() {
        let d = qsym_coproduct(&k("x[2,1]"));
        let expected: LinComb<_> = [
            ((QsymKey::unit(), k("x[2,1]")), one()),
            ((k("x[2]"), k("x[1]")), one()),
            ((k("x[2,1]"), QsymKey::unit()), one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(d, expected);
        assert_eq!(qsym_coproduct(&k("x[3]")).len(), 2);
    }

    #[test]
    fn split_covers_product() {
        let (a, b) = (k("x[1,2]"), k("x[2]"));
        let (p, s, d) = ctd_split(&a, &b).unwrap();
        assert_eq!(p + s + d, qsym_product(&LinComb::basis(a.clone()), &LinComb::basis(b.clone())));
        let (_, s2, _) = ctd_split(&b, &a).unwrap();
        assert_eq!(ctd_split(&a, &b).unwrap().0, s2);
        assert!(ctd_split(&QsymKey::unit(), &a).is_err());
    }
}
