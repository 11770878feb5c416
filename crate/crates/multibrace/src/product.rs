//! Products on the tensor coalgebra and their multibrace data.

use std::collections::HashMap;
use std::sync::Arc;

use cha_core::error::check_bound;
use cha_core::{Key, LinComb, Report, Result};

use crate::structure::MbStructure;

type ProductFn<G> = Arc<dyn Fn(&[G], &[G]) -> Result<LinComb<Vec<G>>> + Send + Sync>;

/// A degree-truncated product on T^c(R) together with an alphabet of
/// generators used to draw sample words.
#[derive(Clone)]
pub struct ChaProduct<G: Key> {
    bound: usize,
    alphabet: Vec<G>,
    product: ProductFn<G>,
}

impl<G: Key> ChaProduct<G> {
    pub fn new(
        bound: usize,
        alphabet: Vec<G>,
        product: impl Fn(&[G], &[G]) -> Result<LinComb<Vec<G>>> + Send + Sync + 'static,
    ) -> Self {
        ChaProduct { bound, alphabet, product: Arc::new(product) }
    }

    pub fn from_mb(m: MbStructure<G>, alphabet: Vec<G>) -> Self {
        let bound = m.bound();
        ChaProduct::new(bound, alphabet, move |u, v| mb_to_product(&m, u, v))
    }

    /// The shuffle product, whose multibrace data vanishes beyond M_10, M_01.
    pub fn shuffle(bound: usize, alphabet: Vec<G>) -> Self {
        ChaProduct::new(bound, alphabet, move |u, v| {
            check_bound(u.len() + v.len(), bound)?;
            Ok(cha_core::words::shuffle(u, v).map_keys(|w| w.0.clone()))
        })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn alphabet(&self) -> &[G] {
        &self.alphabet
    }

    pub fn mul(&self, u: &[G], v: &[G]) -> Result<LinComb<Vec<G>>> {
        check_bound(u.len() + v.len(), self.bound)?;
        (self.product)(u, v)
    }

    pub fn mul_lin(&self, x: &LinComb<Vec<G>>, y: &LinComb<Vec<G>>) -> Result<LinComb<Vec<G>>> {
        x.try_bilinear(y, |u, v| self.mul(u, v))
    }
}

/// u*v as the sum over simultaneous splittings of u and v into blocks.
pub fn mb_to_product<G: Key>(m: &MbStructure<G>, u: &[G], v: &[G]) -> Result<LinComb<Vec<G>>> {
    check_bound(u.len() + v.len(), m.bound())?;
    let mut memo = HashMap::new();
    Ok(suffix_product(m, u, v, 0, 0, &mut memo))
}

fn suffix_product<G: Key>(
    m: &MbStructure<G>,
    u: &[G],
    v: &[G],
    a: usize,
    b: usize,
    memo: &mut HashMap<(usize, usize), LinComb<Vec<G>>>,
) -> LinComb<Vec<G>> {
    if a == u.len() && b == v.len() {
        return LinComb::basis(Vec::new());
    }
    if let Some(hit) = memo.get(&(a, b)) {
        return hit.clone();
    }
    let mut out = LinComb::zero();
    for p in 0..=u.len() - a {
        for q in 0..=v.len() - b {
            if (p, q) == (0, 0) || (q == 0 && p >= 2) || (p == 0 && q >= 2) {
                continue;
            }
            let head = m.m(&u[a..a + p], &v[b..b + q]);
            if head.is_zero() {
                continue;
            }
            let tail = suffix_product(m, u, v, a + p, b + q, memo);
            out += head.bilinear(&tail, |g, w| {
                let mut word = Vec::with_capacity(w.len() + 1);
                word.push(g.clone());
                word.extend_from_slice(w);
                LinComb::basis(word)
            });
        }
    }
    memo.insert((a, b), out.clone());
    out
}

/// M_pq(u; v) read off as the length-one component of u*v.
pub fn product_to_mb<G: Key>(star: &ChaProduct<G>) -> MbStructure<G> {
    let star = star.clone();
    MbStructure::new(star.bound(), move |u, v| {
        star.mul(u, v)
            .map(|prod| {
                prod.iter()
                    .filter(|(w, _)| w.len() == 1)
                    .map(|(w, c)| (w[0].clone(), c.clone()))
                    .collect()
            })
            .unwrap_or_default()
    })
}

/// Every tuple of words over `alphabet` with the given lengths.
pub fn sample_tuples<G: Clone>(alphabet: &[G], lens: &[usize]) -> Vec<Vec<Vec<G>>> {
    let mut out: Vec<Vec<Vec<G>>> = vec![Vec::new()];
    for &l in lens {
        let words = all_words(alphabet, l);
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

fn all_words<G: Clone>(alphabet: &[G], len: usize) -> Vec<Vec<G>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<G>| {
                alphabet.iter().map(move |g| {
                    let mut w = w.clone();
                    w.push(g.clone());
                    w
                })
            })
            .collect();
    }
    out
}

/// All (a_1, …, a_r) of non-negative integers with sum at most `max`.
pub(crate) fn length_tuples(r: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(r: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for a in 0..=left {
            cur.push(a);
            go(r, left - a, cur, out);
            cur.pop();
        }
    }
    go(r, max, &mut Vec::new(), &mut out);
    out
}

fn show<G: Key>(x: &LinComb<Vec<G>>) -> String {
    x.format_with(|w| format!("{w:?}"))
}

/// (u*v)*w = u*(v*w) on sample words of total degree ≤ maxdeg.
pub fn check_associative<G: Key>(star: &ChaProduct<G>, maxdeg: usize) -> Report {
    let mut report = Report::new("associativity");
    for lens in length_tuples(3, maxdeg.min(star.bound())) {
        let mut failed = None;
        for t in sample_tuples(star.alphabet(), &lens) {
            let (u, v, w) = (LinComb::basis(t[0].clone()), LinComb::basis(t[1].clone()), LinComb::basis(t[2].clone()));
            let left = star.mul_lin(&star.mul_lin(&u, &v).unwrap(), &w).unwrap();
            let right = star.mul_lin(&u, &star.mul_lin(&v, &w).unwrap()).unwrap();
            if left != right {
                failed = Some(format!("u={:?} v={:?} w={:?}: diff {}", t[0], t[1], t[2], show(&(left - right))));
                break;
            }
        }
        let id = format!("{}-{}-{}", lens[0], lens[1], lens[2]);
        match failed {
            None => report.pass(id),
            Some(w) => report.fail(id, w),
        }
    }
    report
}

fn deconcat_pairs<G: Key>(w: &[G]) -> LinComb<(Vec<G>, Vec<G>)> {
    (0..=w.len()).map(|i| ((w[..i].to_vec(), w[i..].to_vec()), cha_core::scalar::one())).collect()
}

/// Δ(u*v) = Δ(u)*Δ(v) for deconcatenation, componentwise on tensors.
pub fn check_hopf<G: Key>(star: &ChaProduct<G>, maxdeg: usize) -> Report {
    let mut report = Report::new("hopf");
    for lens in length_tuples(2, maxdeg.min(star.bound())) {
        let mut failed = None;
        for t in sample_tuples(star.alphabet(), &lens) {
            let prod = star.mul(&t[0], &t[1]).unwrap();
            let left = prod.map_linear(|w| deconcat_pairs(w));
            let right = deconcat_pairs(&t[0]).bilinear(&deconcat_pairs(&t[1]), |(a1, a2), (b1, b2)| {
                let first = star.mul(a1, b1).unwrap();
                let second = star.mul(a2, b2).unwrap();
                first.tensor(&second)
            });
            if left != right {
                failed = Some(format!("u={:?} v={:?}", t[0], t[1]));
                break;
            }
        }
        let id = format!("{}-{}", lens[0], lens[1]);
        match failed {
            None => report.pass(id),
            Some(w) => report.fail(id, w),
        }
    }
    report
}

/// The unit laws ()*u = u = u*().
pub fn check_unital<G: Key>(star: &ChaProduct<G>, maxdeg: usize) -> Report {
    let mut report = Report::new("unit");
    for len in 0..=maxdeg.min(star.bound()) {
        let ok = sample_tuples(star.alphabet(), &[len]).iter().all(|t| {
            let u = LinComb::basis(t[0].clone());
            star.mul(&[], &t[0]).unwrap() == u && star.mul(&t[0], &[]).unwrap() == u
        });
        report.push(format!("degree-{len}"), ok, "");
    }
    report
}

/// Compares star with the product rebuilt from its extracted M_pq.
pub fn check_round_trip<G: Key>(star: &ChaProduct<G>, maxdeg: usize) -> Report {
    let mut report = Report::new("round-trip");
    let rebuilt = ChaProduct::from_mb(product_to_mb(star), star.alphabet().to_vec());
    for lens in length_tuples(2, maxdeg.min(star.bound())) {
        let mut failed = None;
        for t in sample_tuples(star.alphabet(), &lens) {
            let a = star.mul(&t[0], &t[1]).unwrap();
            let b = rebuilt.mul(&t[0], &t[1]).unwrap();
            if a != b {
                failed = Some(format!("u={:?} v={:?}: diff {}", t[0], t[1], show(&(a - b))));
                break;
            }
        }
        let id = format!("{}-{}", lens[0], lens[1]);
        match failed {
            None => report.pass(id),
            Some(w) => report.fail(id, w),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use cha_core::scalar::int;

    fn sample_m() -> MbStructure<u32> {
        // distinguishable outputs: M_pq(u;v) = letter 100p+10q+(first letter)
        MbStructure::new(6, |u, v| LinComb::basis(100 * u.len() as u32 + 10 * v.len() as u32 + u[0]))
    }

    fn word(ws: &[&[u32]]) -> LinComb<Vec<u32>> {
        ws.iter().map(|w| (w.to_vec(), int(1))).collect()
    }

    #[test]
    fn one_by_one() {
        let got = mb_to_product(&sample_m(), &[1], &[2]).unwrap();
        assert_eq!(got, word(&[&[1, 2], &[2, 1], &[111]]));
    }

    #[test]
    fn unit() {
        let got = mb_to_product(&sample_m(), &[], &[4, 5]).unwrap();
        assert_eq!(got, word(&[&[4, 5]]));
    }

    #[test]
    fn two_by_one() {
        let got = mb_to_product(&sample_m(), &[1, 2], &[3]).unwrap();
        let m11_x2 = 110 + 2;
        let m11_x1 = 110 + 1;
        let m21 = 210 + 1;
        assert_eq!(got, word(&[&[1, 2, 3], &[1, 3, 2], &[3, 1, 2], &[1, m11_x2], &[m11_x1, 2], &[m21]]));
    }

    #[test]
    fn degree_bound() {
        let m = MbStructure::<u32>::trivial(2);
        assert!(mb_to_product(&m, &[1, 2], &[3]).is_err());
    }

    #[test]
    fn trivial_is_shuffle() {
        let m = MbStructure::<u32>::trivial(6);
        let sh = ChaProduct::shuffle(6, vec![1, 2, 3, 4, 5]);
        for (u, v) in [(vec![1, 2], vec![3]), (vec![1], vec![2, 3, 4])] {
            assert_eq!(mb_to_product(&m, &u, &v).unwrap(), sh.mul(&u, &v).unwrap());
        }
    }

    #[test]
    fn shuffle_extracts_to_zero() {
        let m = product_to_mb(&ChaProduct::shuffle(6, vec![1, 2, 3]));
        assert!(m.m(&[1], &[2]).is_zero());
        assert!(m.m(&[1, 2], &[3]).is_zero());
        assert_eq!(m.m(&[1], &[]), LinComb::basis(1));
    }

    #[test]
    fn samples() {
        assert_eq!(sample_tuples(&[1, 2, 3], &[1, 2]).len(), 27);
        assert_eq!(sample_tuples(&[1, 2], &[2, 1]).len(), 8);
    }
}
