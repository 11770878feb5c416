//! Symmetric multibrace structures and the products they encode on the
//! cofree cocommutative coalgebra S^c(R).

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use cha_core::error::check_bound;
use cha_core::words::unshuffle;
use cha_core::{Key, LinComb, Report, Result, SymWord};

type Eval<G> = Arc<dyn Fn(&SymWord<G>, &SymWord<G>) -> LinComb<G> + Send + Sync>;
type Memo<G> = Arc<Mutex<HashMap<(SymWord<G>, SymWord<G>), LinComb<G>>>>;

/// Operations M_pq on multisets, with M_00 = 0, M_10 = M_01 = id and
/// M_p0 = M_0q = 0 for p, q ≥ 2 built in.
#[derive(Clone)]
pub struct SmbStructure<G: Key> {
    bound: usize,
    eval: Eval<G>,
    memo: Option<Memo<G>>,
}

impl<G: Key> SmbStructure<G> {
    /// `eval` is only consulted for p, q ≥ 1.
    pub fn new(
        bound: usize,
        eval: impl Fn(&SymWord<G>, &SymWord<G>) -> LinComb<G> + Send + Sync + 'static,
    ) -> Self {
        SmbStructure { bound, eval: Arc::new(eval), memo: None }
    }

    pub fn trivial(bound: usize) -> Self {
        Self::new(bound, |_, _| LinComb::zero())
    }

    /// Only M_11 is nonzero.
    pub fn from_m11(bound: usize, m11: impl Fn(&G, &G) -> LinComb<G> + Send + Sync + 'static) -> Self {
        Self::new(bound, move |u, v| {
            if u.degree() == 1 && v.degree() == 1 {
                m11(&u.letters()[0], &v.letters()[0])
            } else {
                LinComb::zero()
            }
        })
    }

    pub fn memoized(mut self) -> Self {
        self.memo = Some(Arc::new(Mutex::new(HashMap::new())));
        self
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn m(&self, u: &SymWord<G>, v: &SymWord<G>) -> LinComb<G> {
        match (u.degree(), v.degree()) {
            (0, 0) => LinComb::zero(),
            (1, 0) => LinComb::basis(u.letters()[0].clone()),
            (0, 1) => LinComb::basis(v.letters()[0].clone()),
            (_, 0) | (0, _) => LinComb::zero(),
            _ => {
                let Some(memo) = &self.memo else {
                    return (self.eval)(u, v);
                };
                let key = (u.clone(), v.clone());
                if let Some(hit) = memo.lock().unwrap().get(&key) {
                    return hit.clone();
                }
                let value = (self.eval)(u, v);
                memo.lock().unwrap().insert(key, value.clone());
                value
            }
        }
    }

    /// Multilinear extension; arguments are read as commuting letters.
    pub fn m_lin(&self, u: &[LinComb<G>], v: &[LinComb<G>]) -> LinComb<G> {
        let us = expand_sym(u);
        let vs = expand_sym(v);
        us.bilinear(&vs, |a, b| self.m(a, b))
    }
}

/// Expands a product of linear combinations into symmetric words.
pub fn expand_sym<G: Key>(letters: &[LinComb<G>]) -> LinComb<SymWord<G>> {
    let mut acc: LinComb<Vec<G>> = LinComb::basis(Vec::new());
    for l in letters {
        acc = acc.bilinear(l, |w, g| {
            let mut w = w.clone();
            w.push(g.clone());
            LinComb::basis(w)
        });
    }
    acc.map_keys(|w| SymWord::new(w.clone()))
}

/// Set partitions of `0..n`, each block a bit mask; blocks are listed by
/// their smallest element.
pub fn set_partitions(n: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        let low = rest & rest.wrapping_neg();
        let others = rest & !low;
        let mut sub = others;
        loop {
            cur.push(low | sub);
            go(others & !sub, cur, out);
            cur.pop();
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
    }
    let mut out = Vec::new();
    go(((1u64 << n) - 1) as u32, &mut Vec::new(), &mut out);
    out
}

/// The letters of `u` then `v` selected by mask, as the pair of blocks.
fn blocks<G: Key>(u: &SymWord<G>, v: &SymWord<G>, mask: u32) -> (SymWord<G>, SymWord<G>) {
    let p = u.degree();
    let pick = |w: &SymWord<G>, offset: usize| {
        SymWord::new(
            w.letters()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> (i + offset) & 1 == 1)
                .map(|(_, g)| g.clone())
                .collect(),
        )
    };
    (pick(u, 0), pick(v, p))
}

/// Σ over set partitions of the letters of `u` and `v` of the commutative
/// product of the block values `value(u_B, v_B)`; `skip_single` drops the
/// partition with one block.
pub(crate) fn partition_sum<G: Key, V: Key, K: Key>(
    u: &SymWord<G>,
    v: &SymWord<G>,
    skip_single: bool,
    mut value: impl FnMut(&SymWord<G>, &SymWord<G>) -> LinComb<V>,
    mut mul: impl FnMut(&LinComb<K>, &LinComb<V>) -> LinComb<K>,
    unit: LinComb<K>,
) -> LinComb<K> {
    let mut out = LinComb::zero();
    'outer: for part in set_partitions(u.degree() + v.degree()) {
        if skip_single && part.len() == 1 {
            continue;
        }
        let mut acc = unit.clone();
        for &mask in &part {
            let (a, b) = blocks(u, v, mask);
            let x = value(&a, &b);
            if x.is_zero() {
                continue 'outer;
            }
            acc = mul(&acc, &x);
        }
        out += acc;
    }
    out
}

fn push_letter<G: Key>(acc: &LinComb<SymWord<G>>, x: &LinComb<G>) -> LinComb<SymWord<G>> {
    acc.bilinear(x, |w, g| LinComb::basis(w.union(&SymWord::letter(g.clone()))))
}

/// u*v = Σ_k 1/k! Σ over ordered assignments of the letters to k blocks of
/// the product of the M-values, which is the sum over set partitions.
pub fn smb_to_product<G: Key>(m: &SmbStructure<G>, u: &SymWord<G>, v: &SymWord<G>) -> Result<LinComb<SymWord<G>>> {
    check_bound(u.degree() + v.degree(), m.bound())?;
    Ok(partition_sum(u, v, false, |a, b| m.m(a, b), push_letter, LinComb::basis(SymWord::empty())))
}

pub fn smb_product_lin<G: Key>(
    m: &SmbStructure<G>,
    x: &LinComb<SymWord<G>>,
    y: &LinComb<SymWord<G>>,
) -> Result<LinComb<SymWord<G>>> {
    x.try_bilinear(y, |u, v| smb_to_product(m, u, v))
}

/// The R-components of (u*v)*w and u*(v*w).
pub fn sr_sides<G: Key>(
    m: &SmbStructure<G>,
    u: &SymWord<G>,
    v: &SymWord<G>,
    w: &SymWord<G>,
) -> Result<(LinComb<G>, LinComb<G>)> {
    let left = smb_to_product(m, u, v)?.map_linear(|big| m.m(big, w));
    let right = smb_to_product(m, v, w)?.map_linear(|big| m.m(u, big));
    Ok((left, right))
}

/// All multisets of the given size over `alphabet`.
pub fn multisets<G: Key>(alphabet: &[G], size: usize) -> Vec<SymWord<G>> {
    fn go<G: Key>(alphabet: &[G], start: usize, size: usize, cur: &mut Vec<G>, out: &mut Vec<SymWord<G>>) {
        if cur.len() == size {
            out.push(SymWord::new(cur.clone()));
            return;
        }
        for i in start..alphabet.len() {
            cur.push(alphabet[i].clone());
            go(alphabet, i, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(alphabet, 0, size, &mut Vec::new(), &mut out);
    out
}

/// Every tuple of multisets over `alphabet` with the given sizes.
pub fn multiset_tuples<G: Key>(alphabet: &[G], sizes: &[usize]) -> Vec<Vec<SymWord<G>>> {
    let mut out: Vec<Vec<SymWord<G>>> = vec![Vec::new()];
    for &s in sizes {
        let words = multisets(alphabet, s);
        out = out
            .into_iter()
            .flat_map(|t| {
                words.iter().map(move |w| {
                    let mut t = t.clone();
                    t.push(w.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// (SR_ijk) on the given triples of multisets.
pub fn check_sr<G>(
    m: &SmbStructure<G>,
    (i, j, k): (usize, usize, usize),
    samples: &[(SymWord<G>, SymWord<G>, SymWord<G>)],
) -> Result<Report>
where
    G: Key + std::fmt::Display,
{
    check_bound(i + j + k, m.bound())?;
    let mut report = Report::new("SR");
    let id = format!("SR-{i}-{j}-{k}");
    for (u, v, w) in samples {
        let (left, right) = sr_sides(m, u, v, w)?;
        if left != right {
            let diff = &left - &right;
            report.fail(id, format!("u={u} v={v} w={w}: sides differ by {diff}"));
            return Ok(report);
        }
    }
    report.pass(id);
    Ok(report)
}

/// Every (SR_ijk) with i, j, k ≥ 1 and i+j+k ≤ maxdeg.
pub fn check_sr_all<G>(m: &SmbStructure<G>, alphabet: &[G], maxdeg: usize) -> Result<Report>
where
    G: Key + std::fmt::Display,
{
    let mut report = Report::new("SR");
    for total in 3..=maxdeg {
        for i in 1..total - 1 {
            for j in 1..total - i {
                let k = total - i - j;
                let samples: Vec<_> = multiset_tuples(alphabet, &[i, j, k])
                    .into_iter()
                    .map(|t| (t[0].clone(), t[1].clone(), t[2].clone()))
                    .collect();
                report.checks.extend(check_sr(m, (i, j, k), &samples)?.checks);
            }
        }
    }
    Ok(report)
}

fn b<G: Key>(g: &G) -> LinComb<G> {
    LinComb::basis(g.clone())
}

/// M_21(uv;w) + M_11(M_11(u;v);w) against M_11(u;M_11(v;w)) + M_12(u;vw).
pub fn sr111<G: Key>(m: &SmbStructure<G>, u: &G, v: &G, w: &G) -> (LinComb<G>, LinComb<G>) {
    let left = m.m_lin(&[b(u), b(v)], &[b(w)]) + m.m_lin(&[m.m_lin(&[b(u)], &[b(v)])], &[b(w)]);
    let right = m.m_lin(&[b(u)], &[m.m_lin(&[b(v)], &[b(w)])]) + m.m_lin(&[b(u)], &[b(v), b(w)]);
    (left, right)
}

pub fn sr112<G: Key>(m: &SmbStructure<G>, u: &G, v: &G, w: &G, x: &G) -> (LinComb<G>, LinComb<G>) {
    let m11 = |a: &G, c: &G| m.m_lin(&[b(a)], &[b(c)]);
    let left = m.m_lin(&[b(u), b(v)], &[b(w), b(x)]) + m.m_lin(&[m11(u, v)], &[b(w), b(x)]);
    let right = m.m_lin(&[b(u)], &[b(v), b(w), b(x)])
        + m.m_lin(&[b(u)], &[m11(v, w), b(x)])
        + m.m_lin(&[b(u)], &[b(w), m11(v, x)])
        + m.m_lin(&[b(u)], &[m.m_lin(&[b(v)], &[b(w), b(x)])]);
    (left, right)
}

pub fn sr121<G: Key>(m: &SmbStructure<G>, u: &G, v: &G, w: &G, x: &G) -> (LinComb<G>, LinComb<G>) {
    let m11 = |a: &G, c: &G| m.m_lin(&[b(a)], &[b(c)]);
    let left = m.m_lin(&[b(u), b(v), b(w)], &[b(x)])
        + m.m_lin(&[m11(u, v), b(w)], &[b(x)])
        + m.m_lin(&[b(v), m11(u, w)], &[b(x)])
        + m.m_lin(&[m.m_lin(&[b(u)], &[b(v), b(w)])], &[b(x)]);
    let right = m.m_lin(&[b(u)], &[b(v), b(w), b(x)])
        + m.m_lin(&[b(u)], &[b(v), m11(w, x)])
        + m.m_lin(&[b(u)], &[m11(v, x), b(w)])
        + m.m_lin(&[b(u)], &[m.m_lin(&[b(v), b(w)], &[b(x)])]);
    (left, right)
}

/// The third term on the left is M_21(M_11(u;w)v; x).
pub fn sr211<G: Key>(m: &SmbStructure<G>, u: &G, v: &G, w: &G, x: &G) -> (LinComb<G>, LinComb<G>) {
    let m11 = |a: &G, c: &G| m.m_lin(&[b(a)], &[b(c)]);
    let left = m.m_lin(&[b(u), b(v), b(w)], &[b(x)])
        + m.m_lin(&[b(u), m11(v, w)], &[b(x)])
        + m.m_lin(&[m11(u, w), b(v)], &[b(x)])
        + m.m_lin(&[m.m_lin(&[b(u), b(v)], &[b(w)])], &[b(x)]);
    let right = m.m_lin(&[b(u), b(v)], &[b(w), b(x)]) + m.m_lin(&[b(u), b(v)], &[m11(w, x)]);
    (left, right)
}

/// The four explicit low relations on letters `u, v, w, x` (cycled from
/// `letters` when fewer are given).
pub fn check_sr_displayed<G: Key + std::fmt::Display>(m: &SmbStructure<G>, letters: &[G]) -> Report {
    let at = |i: usize| &letters[i % letters.len()];
    let (u, v, w, x) = (at(0), at(1), at(2), at(3));
    let mut report = Report::new("SR-displayed");
    let cases = [
        ("SR-1-1-1", sr111(m, u, v, w)),
        ("SR-1-1-2", sr112(m, u, v, w, x)),
        ("SR-1-2-1", sr121(m, u, v, w, x)),
        ("SR-2-1-1", sr211(m, u, v, w, x)),
    ];
    for (id, (left, right)) in cases {
        if left == right {
            report.pass(id);
        } else {
            report.fail(id, format!("sides differ by {}", &left - &right));
        }
    }
    report
}

/// (u*v)*w = u*(v*w) on nonempty multisets of total degree ≤ maxdeg.
pub fn check_associative<G>(m: &SmbStructure<G>, alphabet: &[G], maxdeg: usize) -> Result<Report>
where
    G: Key + std::fmt::Display,
{
    let mut report = Report::new("associativity");
    for total in 3..=maxdeg {
        let id = format!("deg-{total}");
        let mut failure = None;
        'search: for i in 1..total - 1 {
            for j in 1..total - i {
                let k = total - i - j;
                for t in multiset_tuples(alphabet, &[i, j, k]) {
                    let (u, v, w) = (&t[0], &t[1], &t[2]);
                    let left = smb_product_lin(m, &smb_to_product(m, u, v)?, &LinComb::basis(w.clone()))?;
                    let right = smb_product_lin(m, &LinComb::basis(u.clone()), &smb_to_product(m, v, w)?)?;
                    if left != right {
                        failure = Some(format!("u={u} v={v} w={w}"));
                        break 'search;
                    }
                }
            }
        }
        match failure {
            Some(w) => report.fail(id, w),
            None => report.pass(id),
        }
    }
    Ok(report)
}

/// Δ(u*v) = Σ (u₁*v₁)⊗(u₂*v₂) for the unshuffle coproduct, and 1 is a unit.
pub fn check_hopf<G>(m: &SmbStructure<G>, alphabet: &[G], maxdeg: usize) -> Result<Report>
where
    G: Key + std::fmt::Display,
{
    let mut report = Report::new("hopf");
    for total in 1..=maxdeg {
        let id = format!("deg-{total}");
        let mut failure = None;
        'search: for i in 0..=total {
            for t in multiset_tuples(alphabet, &[i, total - i]) {
                let (u, v) = (&t[0], &t[1]);
                let prod = smb_to_product(m, u, v)?;
                if i == 0 && prod != LinComb::basis(v.clone()) || i == total && prod != LinComb::basis(u.clone()) {
                    failure = Some(format!("unit fails on u={u} v={v}"));
                    break 'search;
                }
                let left = prod.map_linear(unshuffle);
                let mut right = LinComb::zero();
                for ((u1, u2), a) in unshuffle(u).iter() {
                    for ((v1, v2), c) in unshuffle(v).iter() {
                        let t = smb_to_product(m, u1, v1)?.tensor(&smb_to_product(m, u2, v2)?);
                        right.add_scaled(&t, &(a * c));
                    }
                }
                if left != right {
                    failure = Some(format!("u={u} v={v}"));
                    break 'search;
                }
            }
        }
        match failure {
            Some(w) => report.fail(id, w),
            None => report.pass(id),
        }
    }
    Ok(report)
}
