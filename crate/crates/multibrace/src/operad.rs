//! Brace expressions, their normal forms as labeled planar trees, and the
//! partial compositions of the brace operad.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use cha_combinatorics::composition::weak;
use cha_combinatorics::cursor::Cursor;
use cha_combinatorics::perm::{self, Permutation};
use cha_combinatorics::unreduced::{self, label_preorder, Labeled};
use cha_combinatorics::Put;
use cha_core::{Error, LinComb, Report, Result};

/// `x_n` or `{head; arg, …}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BraceExpr {
    Atom(u32),
    Brace(Box<BraceExpr>, Vec<BraceExpr>),
}

pub type Tree = Labeled<u32>;

/// Linear combination of (shape, permutation) pairs of a common arity.
pub type OperadElement = LinComb<(Put, Permutation)>;

impl BraceExpr {
    pub fn brace(head: BraceExpr, args: Vec<BraceExpr>) -> Self {
        BraceExpr::Brace(Box::new(head), args)
    }

    pub fn atoms(&self) -> usize {
        match self {
            BraceExpr::Atom(_) => 1,
            BraceExpr::Brace(h, args) => h.atoms() + args.iter().map(BraceExpr::atoms).sum::<usize>(),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let e = Self::parse_at(&mut c)?;
        c.finish()?;
        Ok(e)
    }

    fn parse_at(c: &mut Cursor) -> Result<Self> {
        match c.peek() {
            Some(b'x') => {
                c.bump();
                let n = c.number()?;
                u32::try_from(n).map(BraceExpr::Atom).map_err(|_| c.error("generator index too large"))
            }
            Some(b'{') => {
                c.bump();
                let head = Self::parse_at(c)?;
                let mut args = Vec::new();
                match c.bump() {
                    Some(b'}') => return Ok(BraceExpr::brace(head, args)),
                    Some(b';') => {}
                    _ => return Err(c.error_at(c.pos.saturating_sub(1), "expected `;` or `}`")),
                }
                if c.peek() == Some(b'}') {
                    c.bump();
                    return Ok(BraceExpr::brace(head, args));
                }
                loop {
                    args.push(Self::parse_at(c)?);
                    match c.bump() {
                        Some(b',') => continue,
                        Some(b'}') => return Ok(BraceExpr::brace(head, args)),
                        _ => return Err(c.error_at(c.pos.saturating_sub(1), "expected `,` or `}`")),
                    }
                }
            }
            Some(_) => Err(c.error("expected `x<n>` or `{`")),
            None => Err(c.error("unexpected end of input")),
        }
    }

    pub fn from_tree(t: &Tree) -> Self {
        if t.children.is_empty() {
            BraceExpr::Atom(t.label)
        } else {
            BraceExpr::brace(BraceExpr::Atom(t.label), t.children.iter().map(Self::from_tree).collect())
        }
    }

    fn as_tree(&self) -> Option<Tree> {
        match self {
            BraceExpr::Atom(a) => Some(Labeled::leaf(*a)),
            BraceExpr::Brace(h, args) if !args.is_empty() => match h.as_ref() {
                BraceExpr::Atom(a) => Some(Labeled {
                    label: *a,
                    children: args.iter().map(BraceExpr::as_tree).collect::<Option<_>>()?,
                }),
                _ => None,
            },
            _ => None,
        }
    }
}

impl fmt::Display for BraceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraceExpr::Atom(a) => write!(f, "x{a}"),
            BraceExpr::Brace(h, args) => {
                write!(f, "{{{h}")?;
                for (i, a) in args.iter().enumerate() {
                    f.write_str(if i == 0 { "; " } else { ", " })?;
                    write!(f, "{a}")?;
                }
                f.write_str("}")
            }
        }
    }
}

pub fn format_trees(x: &LinComb<Tree>) -> String {
    x.format_with(|t| BraceExpr::from_tree(t).to_string())
}

/// Concatenation of word-valued combinations.
fn concat_all(parts: Vec<LinComb<Vec<Tree>>>) -> LinComb<Vec<Tree>> {
    parts.into_iter().fold(LinComb::basis(Vec::new()), |acc, p| {
        acc.bilinear(&p, |a, b| {
            let mut w = a.clone();
            w.extend_from_slice(b);
            LinComb::basis(w)
        })
    })
}

/// {t; c_1, …, c_m} for a tree t: the c's are distributed in order around
/// and into the children of the root.
pub fn insert(t: &Tree, cs: &[Tree]) -> LinComb<Tree> {
    if cs.is_empty() {
        return LinComb::basis(t.clone());
    }
    let l = t.children.len();
    let mut out = LinComb::zero();
    for parts in weak(cs.len(), 2 * l + 1) {
        let mut pieces = Vec::with_capacity(2 * l + 1);
        let mut pos = 0;
        for (slot, &size) in parts.0.iter().enumerate() {
            let block = &cs[pos..pos + size];
            pos += size;
            if slot % 2 == 0 {
                pieces.push(LinComb::basis(block.to_vec()));
            } else {
                pieces.push(insert(&t.children[slot / 2], block).map_keys(|c| vec![c.clone()]));
            }
        }
        out += concat_all(pieces).map_keys(|children| Labeled { label: t.label, children: children.clone() });
    }
    out
}

fn normal_form(e: &BraceExpr) -> LinComb<Tree> {
    match e {
        BraceExpr::Atom(a) => LinComb::basis(Labeled::leaf(*a)),
        BraceExpr::Brace(h, args) => {
            let heads = normal_form(h);
            let args = concat_all(args.iter().map(|a| normal_form(a).map_keys(|t| vec![t.clone()])).collect());
            heads.bilinear(&args, |t, cs| insert(t, cs))
        }
    }
}

/// Expands nested braces into a combination of labeled trees.
pub fn brace_normalize(e: &BraceExpr, bound: usize) -> Result<LinComb<Tree>> {
    cha_core::error::check_bound(e.atoms(), bound)?;
    Ok(normal_form(e))
}

fn redexes(e: &BraceExpr, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if let BraceExpr::Brace(h, args) = e {
        if args.is_empty() || matches!(h.as_ref(), BraceExpr::Brace(..)) {
            out.push(path.clone());
        }
        path.push(0);
        redexes(h, path, out);
        path.pop();
        for (i, a) in args.iter().enumerate() {
            path.push(i + 1);
            redexes(a, path, out);
            path.pop();
        }
    }
}

/// One application of {y; ∅} = y or of the brace relation, read left to right.
fn rewrite_root(e: &BraceExpr) -> LinComb<BraceExpr> {
    let BraceExpr::Brace(h, zs) = e else { unreachable!() };
    if zs.is_empty() {
        return LinComb::basis(h.as_ref().clone());
    }
    let BraceExpr::Brace(x, ys) = h.as_ref() else { unreachable!() };
    let n = ys.len();
    let mut out = LinComb::zero();
    for parts in weak(zs.len(), 2 * n + 1) {
        let mut args = Vec::new();
        let mut pos = 0;
        for (slot, &size) in parts.0.iter().enumerate() {
            let block = &zs[pos..pos + size];
            pos += size;
            if slot % 2 == 0 {
                args.extend_from_slice(block);
            } else if block.is_empty() {
                args.push(ys[slot / 2].clone());
            } else {
                args.push(BraceExpr::brace(ys[slot / 2].clone(), block.to_vec()));
            }
        }
        out.add_term(BraceExpr::brace(x.as_ref().clone(), args), cha_core::scalar::one());
    }
    out
}

fn rewrite_at(e: &BraceExpr, path: &[usize]) -> LinComb<BraceExpr> {
    let Some((&step, rest)) = path.split_first() else {
        return rewrite_root(e);
    };
    let BraceExpr::Brace(h, args) = e else { unreachable!() };
    if step == 0 {
        rewrite_at(h, rest).map_keys(|nh| BraceExpr::brace(nh.clone(), args.clone()))
    } else {
        rewrite_at(&args[step - 1], rest).map_keys(|na| {
            let mut args = args.clone();
            args[step - 1] = na.clone();
            BraceExpr::brace(h.as_ref().clone(), args)
        })
    }
}

/// Normalizes by single rewrite steps, choosing the term and redex at random.
pub fn rewrite_normalize(e: &BraceExpr, rng: &mut impl Rng) -> LinComb<Tree> {
    let mut state = LinComb::basis(e.clone());
    loop {
        let pending: Vec<(BraceExpr, Vec<Vec<usize>>)> = state
            .keys()
            .filter_map(|t| {
                let mut found = Vec::new();
                redexes(t, &mut Vec::new(), &mut found);
                (!found.is_empty()).then(|| (t.clone(), found))
            })
            .collect();
        let Some((term, spots)) = pending.choose(rng) else { break };
        let spot = spots.choose(rng).unwrap();
        let c = state.coeff(term);
        state.add_term(term.clone(), -c.clone());
        state.add_scaled(&rewrite_at(term, spot), &c);
    }
    state.iter().map(|(t, c)| (t.as_tree().expect("normal form is a tree"), c.clone())).collect()
}

/// Every expression whose atoms read x_1, …, x_n from left to right, with no
/// empty argument lists.
pub fn enumerate_exprs(n: usize) -> Vec<BraceExpr> {
    fn on(range: (u32, u32)) -> Vec<BraceExpr> {
        let (lo, hi) = range;
        if hi - lo == 1 {
            return vec![BraceExpr::Atom(lo)];
        }
        let mut out = Vec::new();
        for split in lo + 1..hi {
            for head in on((lo, split)) {
                for args in sequences(split, hi) {
                    out.push(BraceExpr::brace(head.clone(), args));
                }
            }
        }
        out
    }
    fn sequences(lo: u32, hi: u32) -> Vec<Vec<BraceExpr>> {
        if lo == hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for split in lo + 1..=hi {
            for first in on((lo, split)) {
                for rest in sequences(split, hi) {
                    let mut v = vec![first.clone()];
                    v.extend(rest);
                    out.push(v);
                }
            }
        }
        out
    }
    if n == 0 {
        return Vec::new();
    }
    on((1, n as u32 + 1))
}

/// Rewriting reaches `brace_normalize` under `strategies` seeded random orders.
pub fn check_confluence(max_atoms: usize, strategies: u64, seed: u64) -> Report {
    use rand::SeedableRng;
    let mut report = Report::new("brace-rewrite");
    for n in 1..=max_atoms {
        let mut witness = None;
        let exprs = enumerate_exprs(n);
        'outer: for e in &exprs {
            let expected = normal_form(e);
            for s in 0..strategies {
                let mut rng = rand::rngs::StdRng::seed_from_u64(seed.wrapping_add(s));
                if rewrite_normalize(e, &mut rng) != expected {
                    witness = Some(format!("{e} under strategy {s}"));
                    break 'outer;
                }
            }
        }
        match witness {
            None => report.push(format!("atoms-{n}"), true, format!("{} expressions", exprs.len())),
            Some(w) => report.fail(format!("atoms-{n}"), w),
        }
    }
    report
}

/// The vertex in preorder position j carries the generator σ⁻¹(j).
pub fn to_labeled(t: &Put, sigma: &Permutation) -> Tree {
    let labels: Vec<u32> = sigma.inverse().word().iter().map(|&x| x as u32).collect();
    label_preorder(t, &labels)
}

pub fn from_labeled(t: &Tree) -> (Put, Permutation) {
    let word: Vec<usize> = t.preorder().iter().map(|&x| x as usize).collect();
    let inverse = Permutation::new(word).expect("labels form a permutation");
    (t.shape(), inverse.inverse())
}

pub fn unit() -> (Put, Permutation) {
    (Put::vertex(), Permutation::identity(1))
}

pub fn arity(x: &OperadElement) -> Result<usize> {
    let mut arities = x.keys().map(|(t, _)| t.vertices());
    let Some(first) = arities.next() else {
        return Err(Error::invalid("zero element has no arity"));
    };
    if arities.any(|a| a != first) {
        return Err(Error::invalid("terms of different arities"));
    }
    Ok(first)
}

fn substitute(t: &Tree, target: u32, replacement: &Tree) -> LinComb<Tree> {
    if t.label == target {
        return insert(replacement, &t.children);
    }
    let kids = concat_all(t.children.iter().map(|c| substitute(c, target, replacement).map_keys(|k| vec![k.clone()])).collect());
    kids.map_keys(|children| Labeled { label: t.label, children: children.clone() })
}

fn compose_basis(mu: &(Put, Permutation), i: usize, nu: &(Put, Permutation)) -> OperadElement {
    let n = nu.0.vertices() as u32;
    let i = i as u32;
    let outer = to_labeled(&mu.0, &mu.1).relabel(&mut |&a| match a.cmp(&i) {
        std::cmp::Ordering::Less => a,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => a + n - 1,
    });
    let inner = to_labeled(&nu.0, &nu.1).relabel(&mut |&a| a + i - 1);
    substitute(&outer, 0, &inner).map_keys(from_labeled)
}

/// μ ∘_i ν: the i-th generator of μ is replaced by ν and the result expanded.
pub fn brace_compose(mu: &OperadElement, i: usize, nu: &OperadElement) -> Result<OperadElement> {
    let m = arity(mu)?;
    arity(nu)?;
    if i == 0 || i > m {
        return Err(Error::invalid(format!("composition index {i} out of range 1..={m}")));
    }
    Ok(mu.bilinear(nu, |a, b| compose_basis(a, i, b)))
}

pub fn format_element(x: &OperadElement) -> String {
    x.format_with(|(t, s)| format!("{t} x {s}"))
}

pub fn parse_element(s: &str) -> Result<OperadElement> {
    let x = cha_core::text::parse_lincomb(s, |term| {
        let (tree, sigma) = term.rsplit_once(" x ").ok_or_else(|| Error::parse(0, "expected `TREE x PERM`"))?;
        let t = Put::parse(tree)?;
        let p = Permutation::parse(sigma).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::parse(tree.len() + 3 + pos, msg),
            other => other,
        })?;
        if t.vertices() != p.len() {
            return Err(Error::parse(0, "tree and permutation sizes differ"));
        }
        Ok((t, p))
    })?;
    arity(&x)?;
    Ok(x)
}

fn basis_of_arity(n: usize) -> Vec<(Put, Permutation)> {
    let mut out = Vec::new();
    for t in unreduced::enumerate(n) {
        for p in perm::enumerate(n) {
            out.push((t.clone(), p));
        }
    }
    out
}

/// Unit laws and sequential/parallel associativity on basis elements whose
/// arities sum to at most `max_total`.
pub fn check_operad_axioms(max_total: usize) -> Report {
    let mut report = Report::new("brace-operad");
    let bases: Vec<Vec<(Put, Permutation)>> = (0..=max_total).map(basis_of_arity).collect();
    let e = LinComb::basis(unit());
    let mut unit_fail = None;
    for n in 1..max_total {
        for b in &bases[n] {
            let x = LinComb::basis(b.clone());
            if brace_compose(&e, 1, &x).unwrap() != x {
                unit_fail.get_or_insert(format!("id o1 {}", format_element(&x)));
            }
            for i in 1..=n {
                if brace_compose(&x, i, &e).unwrap() != x {
                    unit_fail.get_or_insert(format!("{} o{i} id", format_element(&x)));
                }
            }
        }
    }
    match unit_fail {
        None => report.pass("unit"),
        Some(w) => report.fail("unit", w),
    }
    let mut sequential = None;
    let mut parallel = None;
    let mut count = 0usize;
    for a in 1..=max_total {
        for b in 1..=max_total - a {
            for c in 1..=max_total.saturating_sub(a + b) {
                for l in &bases[a] {
                    for m in &bases[b] {
                        for n in &bases[c] {
                            let (l, m, n) = (LinComb::basis(l.clone()), LinComb::basis(m.clone()), LinComb::basis(n.clone()));
                            for i in 1..=a {
                                for j in 1..=b {
                                    count += 1;
                                    let left = brace_compose(&brace_compose(&l, i, &m).unwrap(), i + j - 1, &n).unwrap();
                                    let right = brace_compose(&l, i, &brace_compose(&m, j, &n).unwrap()).unwrap();
                                    if left != right && sequential.is_none() {
                                        sequential = Some(format!("({} o{i} {}) o{} {}", format_element(&l), format_element(&m), i + j - 1, format_element(&n)));
                                    }
                                }
                                for k in i + 1..=a {
                                    let left = brace_compose(&brace_compose(&l, i, &m).unwrap(), k + b - 1, &n).unwrap();
                                    let right = brace_compose(&brace_compose(&l, k, &n).unwrap(), i, &m).unwrap();
                                    if left != right && parallel.is_none() {
                                        parallel = Some(format!("{} with o{i}, o{k}", format_element(&l)));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    match sequential {
        None => report.push("sequential", true, format!("{count} instances")),
        Some(w) => report.fail("sequential", w),
    }
    match parallel {
        None => report.pass("parallel"),
        Some(w) => report.fail("parallel", w),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use cha_core::scalar::int;

    fn trees(exprs: &[&str]) -> LinComb<Tree> {
        exprs
            .iter()
            .map(|s| (BraceExpr::parse(s).unwrap().as_tree().unwrap(), int(1)))
            .collect()
    }

    #[test]
    fn parse_and_display() {
        let e = BraceExpr::parse("{{x1; x2}; x3}").unwrap();
        assert_eq!(e.to_string(), "{{x1; x2}; x3}");
        assert!(BraceExpr::parse("{x1; }").is_ok());
        assert!(BraceExpr::parse("{x1; x2").is_err());
        assert!(BraceExpr::parse("y1").is_err());
    }

    #[test]
    fn normal_forms() {
        let n = |s: &str| brace_normalize(&BraceExpr::parse(s).unwrap(), 6).unwrap();
        assert_eq!(n("{x1; x2}"), trees(&["{x1; x2}"]));
        assert_eq!(n("{x1; {x2; x3}}"), trees(&["{x1; {x2; x3}}"]));
        assert_eq!(n("{{x1; x2}; x3}"), trees(&["{x1; x2, x3}", "{x1; {x2; x3}}", "{x1; x3, x2}"]));
        assert!(brace_normalize(&BraceExpr::parse("{x1; x2, x3}").unwrap(), 2).is_err());
    }

    #[test]
    fn rewriting_agrees() {
        let r = check_confluence(4, 4, 7);
        assert!(r.ok(), "{r}");
        assert_eq!(enumerate_exprs(2).len(), 1);
        assert_eq!(enumerate_exprs(3).len(), 3);
    }

    #[test]
    fn first_composition_example() {
        let ladder = parse_element("[[]] x 12").unwrap();
        let got = brace_compose(&ladder, 1, &ladder).unwrap();
        let expected = parse_element("[[] []] x 123 + [[[]]] x 123 + [[] []] x 132").unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn grafting_example() {
        let c3 = LinComb::basis((Put::corolla(3), Permutation::identity(4)));
        let c2 = LinComb::basis((Put::corolla(2), Permutation::identity(3)));
        let got = brace_compose(&c3, 2, &c2).unwrap();
        let grafted = Put::with_children(vec![Put::corolla(2), Put::vertex(), Put::vertex()]);
        assert_eq!(got, LinComb::basis((grafted, Permutation::identity(6))));
    }

    #[test]
    fn index_out_of_range() {
        let ladder = parse_element("[[]] x 12").unwrap();
        assert!(brace_compose(&ladder, 3, &ladder).is_err());
        assert!(brace_compose(&ladder, 0, &ladder).is_err());
    }

    #[test]
    fn labeling_round_trip() {
        for (t, p) in basis_of_arity(4) {
            assert_eq!(from_labeled(&to_labeled(&t, &p)), (t, p));
        }
    }
}
