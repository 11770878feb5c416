//! Planar unreduced rooted trees, graded by vertices.

use std::fmt;

use cha_core::Result;

use crate::binary::Pbt;
use crate::cursor::Cursor;

/// A vertex with an ordered list of child subtrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Put {
    pub children: Vec<Put>,
}

impl Put {
    pub fn vertex() -> Self {
        Put { children: Vec::new() }
    }

    pub fn with_children(children: Vec<Put>) -> Self {
        Put { children }
    }

    pub fn vertices(&self) -> usize {
        1 + self.children.iter().map(Put::vertices).sum::<usize>()
    }

    /// Vertical chain of `n` vertices.
    pub fn ladder(n: usize) -> Self {
        assert!(n >= 1);
        let mut t = Put::vertex();
        for _ in 1..n {
            t = Put::with_children(vec![t]);
        }
        t
    }

    /// Root with `k` leaf children.
    pub fn corolla(k: usize) -> Self {
        Put::with_children(vec![Put::vertex(); k])
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let t = Self::parse_at(&mut c)?;
        c.finish()?;
        Ok(t)
    }

    pub fn parse_at(c: &mut Cursor) -> Result<Self> {
        c.expect(b'[')?;
        let mut children = Vec::new();
        loop {
            match c.peek() {
                Some(b']') => {
                    c.bump();
                    return Ok(Put { children });
                }
                Some(b'[') => children.push(Self::parse_at(c)?),
                Some(_) => return Err(c.error("expected `[` or `]`")),
                None => return Err(c.error("unclosed `[`")),
            }
        }
    }
}

impl fmt::Display for Put {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, t) in self.children.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

/// `x ∨ y`: `y` becomes the rightmost child of the root of `x`.
pub fn graft_unreduced(x: &Put, y: &Put) -> Put {
    let mut out = x.clone();
    out.children.push(y.clone());
    out
}

/// The bijection PBT_n → PUT_n with φ(|) = • and φ(t∨s) = φ(t)∨φ(s).
pub fn phi(t: &Pbt) -> Put {
    match t {
        Pbt::Leaf => Put::vertex(),
        Pbt::Node(l, r) => graft_unreduced(&phi(l), &phi(r)),
    }
}

/// Inverse of [`phi`].
pub fn phi_inverse(t: &Put) -> Pbt {
    let mut acc = Pbt::Leaf;
    for c in &t.children {
        acc = Pbt::over(acc, phi_inverse(c));
    }
    acc
}

/// A planar rooted tree with a label on every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeled<L> {
    pub label: L,
    pub children: Vec<Labeled<L>>,
}

impl<L: Clone> Labeled<L> {
    pub fn leaf(label: L) -> Self {
        Labeled { label, children: Vec::new() }
    }

    pub fn shape(&self) -> Put {
        Put { children: self.children.iter().map(Labeled::shape).collect() }
    }

    /// Labels read in preorder.
    pub fn preorder(&self) -> Vec<L> {
        let mut out = Vec::new();
        fn go<L: Clone>(t: &Labeled<L>, out: &mut Vec<L>) {
            out.push(t.label.clone());
            for c in &t.children {
                go(c, out);
            }
        }
        go(self, &mut out);
        out
    }

    pub fn relabel<M>(&self, f: &mut impl FnMut(&L) -> M) -> Labeled<M> {
        Labeled {
            label: f(&self.label),
            children: self.children.iter().map(|c| c.relabel(f)).collect(),
        }
    }

    pub fn vertices(&self) -> usize {
        1 + self.children.iter().map(Labeled::vertices).sum::<usize>()
    }
}

/// Puts the labels `labels` on the vertices of `t` in preorder.
pub fn label_preorder<L: Clone>(t: &Put, labels: &[L]) -> Labeled<L> {
    fn go<L: Clone>(t: &Put, labels: &[L], next: &mut usize) -> Labeled<L> {
        let label = labels[*next].clone();
        *next += 1;
        Labeled { label, children: t.children.iter().map(|c| go(c, labels, next)).collect() }
    }
    let mut next = 0;
    go(t, labels, &mut next)
}

/// Root labeled 1, then each child subtree in turn from left to right.
pub fn standard_labeling(t: &Put) -> Labeled<usize> {
    let labels: Vec<usize> = (1..=t.vertices()).collect();
    label_preorder(t, &labels)
}

fn forests(n: usize, table: &[Vec<Put>]) -> Vec<Vec<Put>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for t in &table[first] {
            for rest in forests(n - first, table) {
                let mut f = vec![t.clone()];
                f.extend(rest);
                out.push(f);
            }
        }
    }
    out
}

/// PUT_n by vertices, sorted.
pub fn enumerate(n: usize) -> Vec<Put> {
    let mut table: Vec<Vec<Put>> = vec![Vec::new()];
    for m in 1..=n {
        let mut ts: Vec<_> = forests(m - 1, &table).into_iter().map(Put::with_children).collect();
        ts.sort();
        table.push(ts);
    }
    if n == 0 {
        return Vec::new();
    }
    table.swap_remove(n)
}
