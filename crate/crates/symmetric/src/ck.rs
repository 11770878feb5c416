//! Forests of rooted trees, admissible cuts and the Connes–Kreimer
//! coproduct, with its duality against the Grossman–Larson product.

use cha_combinatorics::cursor::Cursor;
use cha_combinatorics::rooted::{self, RootedTree};
use cha_core::error::check_bound;
use cha_core::scalar::one;
use cha_core::{Algebra, Coalgebra, Graded, LinComb, Report, Result, Scalar, SymWord};
use num_bigint::BigInt;

use crate::prelie::grossman_larson;
use crate::smb::smb_to_product;

/// A commutative monomial in rooted trees; the empty forest is 1.
pub type Forest = SymWord<RootedTree>;

pub fn forest_vertices(f: &Forest) -> usize {
    f.letters().iter().map(RootedTree::vertices).sum()
}

/// `{t1, t2, …}` of tree literals, or `1` for the empty forest.
pub fn parse_forest(s: &str) -> Result<Forest> {
    let mut c = Cursor::new(s);
    if c.peek() == Some(b'1') {
        c.bump();
        c.finish()?;
        return Ok(Forest::empty());
    }
    c.expect(b'{')?;
    let mut trees = Vec::new();
    if c.peek() != Some(b'}') {
        loop {
            trees.push(RootedTree::parse_at(&mut c)?);
            match c.bump() {
                Some(b',') => continue,
                Some(b'}') => break,
                _ => return Err(c.error("expected `,` or `}`")),
            }
        }
    } else {
        c.bump();
    }
    c.finish()?;
    Ok(Forest::new(trees))
}

pub fn format_forest(f: &Forest) -> String {
    if f.is_empty() {
        "1".to_string()
    } else {
        f.to_string()
    }
}

/// One admissible cut: the pruned branches and the part holding the root,
/// which is absent for the cut under the root.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cut {
    pub pruned: Forest,
    pub trunk: Option<RootedTree>,
}

/// Every admissible cut, listed once per set of cut edges, including the
/// cut under the root and the empty cut.
pub fn admissible_cuts(t: &RootedTree) -> Vec<Cut> {
    let mut out = vec![Cut { pruned: Forest::letter(t.clone()), trunk: None }];
    for (pruned, trunk) in rooted_cuts(t) {
        out.push(Cut { pruned: Forest::new(pruned), trunk: Some(trunk) });
    }
    out
}

/// Cuts keeping the root: each child is either cut off or cut inside.
fn rooted_cuts(t: &RootedTree) -> Vec<(Vec<RootedTree>, RootedTree)> {
    let mut partial: Vec<(Vec<RootedTree>, Vec<RootedTree>)> = vec![(Vec::new(), Vec::new())];
    for child in t.children() {
        let mut options = vec![(vec![child.clone()], None)];
        options.extend(rooted_cuts(child).into_iter().map(|(p, k)| (p, Some(k))));
        partial = partial
            .into_iter()
            .flat_map(|(pruned, kept)| {
                options.iter().map(move |(p, k)| {
                    let mut pruned = pruned.clone();
                    pruned.extend(p.iter().cloned());
                    let mut kept = kept.clone();
                    kept.extend(k.iter().cloned());
                    (pruned, kept)
                })
            })
            .collect();
    }
    partial.into_iter().map(|(p, k)| (p, RootedTree::from_children(k))).collect()
}

/// The free commutative algebra on rooted trees with Δ(t) = Σ_c P_c ⊗ R_c.
pub struct ConnesKreimer {
    bound: usize,
}

impl ConnesKreimer {
    pub fn new(bound: usize) -> Self {
        ConnesKreimer { bound }
    }

    pub fn coproduct_checked(&self, f: &Forest) -> Result<LinComb<(Forest, Forest)>> {
        check_bound(forest_vertices(f), self.bound)?;
        Ok(self.coproduct(f))
    }
}

pub fn tree_coproduct(t: &RootedTree) -> LinComb<(Forest, Forest)> {
    admissible_cuts(t)
        .into_iter()
        .map(|c| ((c.pruned, c.trunk.map(Forest::letter).unwrap_or_else(Forest::empty)), one()))
        .collect()
}

impl Graded for ConnesKreimer {
    type Key = Forest;
    fn unit(&self) -> Forest {
        Forest::empty()
    }
    fn degree(&self, f: &Forest) -> usize {
        forest_vertices(f)
    }
}

impl Algebra for ConnesKreimer {
    fn product(&self, a: &Forest, b: &Forest) -> LinComb<Forest> {
        LinComb::basis(a.union(b))
    }
}

impl Coalgebra for ConnesKreimer {
    fn coproduct(&self, f: &Forest) -> LinComb<(Forest, Forest)> {
        let mut acc = LinComb::basis((Forest::empty(), Forest::empty()));
        for t in f.letters() {
            acc = acc.bilinear(&tree_coproduct(t), |(a, b), (c, d)| LinComb::basis((a.union(c), b.union(d))));
        }
        acc
    }
}

pub fn ck_coproduct(f: &Forest, bound: usize) -> Result<LinComb<(Forest, Forest)>> {
    ConnesKreimer::new(bound).coproduct_checked(f)
}

/// All forests with `n` vertices.
pub fn forests(n: usize) -> Vec<Forest> {
    fn go(n: usize, min: Option<&RootedTree>, out: &mut Vec<Vec<RootedTree>>, cur: &mut Vec<RootedTree>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for size in 1..=n {
            for t in rooted::enumerate(size) {
                if min.is_some_and(|m| &t < m) {
                    continue;
                }
                cur.push(t.clone());
                go(n - size, Some(&t), out, cur);
                cur.pop();
            }
        }
    }
    let mut raw = Vec::new();
    go(n, None, &mut raw, &mut Vec::new());
    let mut out: Vec<Forest> = raw.into_iter().map(Forest::new).collect();
    out.sort();
    out.dedup();
    out
}

/// ⟨f, f⟩ = Π_t |Aut(t)| times the factorials of the tree multiplicities.
pub fn pairing_norm(f: &Forest) -> BigInt {
    let aut: BigInt = f.letters().iter().map(RootedTree::automorphisms).product();
    aut * f.multiplicity_factor()
}

pub const PAIRING_CONVENTION: &str =
    "<t,t> = |Aut(t)| on trees, forests: product of tree factors times multiplicity factorials; <u *GL v, w> = <v (x) u, Delta_CK w>";

/// ⟨u *_GL v, w⟩ = ⟨v ⊗ u, Δ_CK(w)⟩ for all forests with |u| + |v| = |w| ≤ maxdeg.
pub fn pairing_gl_ck(maxdeg: usize) -> Result<Report> {
    let mut report = Report::new("gl-ck-pairing");
    report.note("normalization", PAIRING_CONVENTION);
    let gl = grossman_larson(maxdeg.max(1));
    let ck = ConnesKreimer::new(maxdeg.max(1));
    let by_degree: Vec<Vec<Forest>> = (0..=maxdeg).map(forests).collect();
    for n in 1..=maxdeg {
        let id = format!("deg-{n}");
        let mut failure = None;
        'all: for w in &by_degree[n] {
            let delta = ck.coproduct_checked(w)?;
            let nw = Scalar::from_integer(pairing_norm(w));
            for i in 0..=n {
                for u in &by_degree[i] {
                    for v in &by_degree[n - i] {
                        let left = smb_to_product(&gl, u, v)?.coeff(w) * &nw;
                        let right = delta.coeff(&(v.clone(), u.clone()))
                            * Scalar::from_integer(pairing_norm(u) * pairing_norm(v));
                        if left != right {
                            failure = Some(format!(
                                "u={} v={} w={}: {} vs {}",
                                format_forest(u),
                                format_forest(v),
                                format_forest(w),
                                left,
                                right
                            ));
                            break 'all;
                        }
                    }
                }
            }
        }
        match failure {
            Some(f) => report.fail(id, f),
            None => report.pass(id),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cha_core::scalar::int;

    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    #[test]
    fn cuts_of_small_trees() {
        assert_eq!(admissible_cuts(&RootedTree::vertex()).len(), 2);
        assert_eq!(admissible_cuts(&RootedTree::ladder(2)).len(), 3);
        let cuts = admissible_cuts(&RootedTree::corolla(2));
        assert_eq!(cuts.len(), 5);
        let single = cuts
            .iter()
            .filter(|c| c.pruned == f("{[]}") && c.trunk == Some(RootedTree::ladder(2)))
            .count();
        assert_eq!(single, 2);
    }

    #[test]
    fn coproduct_of_corolla() {
        let d = tree_coproduct(&RootedTree::corolla(2));
        let expected: LinComb<_> = [
            ((f("{[[] []]}"), f("1")), int(1)),
            ((f("1"), f("{[[] []]}")), int(1)),
            ((f("{[]}"), f("{[[]]}")), int(2)),
            ((f("{[], []}"), f("{[]}")), int(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(d, expected);
    }

    #[test]
    fn forest_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| forests(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20]);
        assert_eq!(format_forest(&f("{[[]], []}")), "{[], [[]]}");
        assert!(parse_forest("{[]").is_err());
    }
}
