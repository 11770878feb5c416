//! Non-planar rooted trees in canonical form (children sorted recursively).

use std::fmt;

use cha_core::scalar::factorial;
use num_bigint::BigInt;

use cha_core::Result;

use crate::cursor::Cursor;
use crate::unreduced::Put;

/// How a vertex label is written in front of its bracket.
pub trait VertexLabel {
    fn write_label(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl VertexLabel for () {
    fn write_label(&self, _: &mut fmt::Formatter<'_>) -> fmt::Result {
        Ok(())
    }
}

impl VertexLabel for u32 {
    fn write_label(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{self}")
    }
}

/// A rooted tree whose children form a multiset, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RTree<L> {
    label: L,
    children: Vec<RTree<L>>,
}

pub type RootedTree = RTree<()>;

impl<L: Ord + Clone> RTree<L> {
    pub fn new(label: L, mut children: Vec<RTree<L>>) -> Self {
        children.sort();
        RTree { label, children }
    }

    pub fn leaf(label: L) -> Self {
        RTree { label, children: Vec::new() }
    }

    pub fn label(&self) -> &L {
        &self.label
    }

    pub fn children(&self) -> &[RTree<L>] {
        &self.children
    }

    pub fn vertices(&self) -> usize {
        1 + self.children.iter().map(RTree::vertices).sum::<usize>()
    }

    /// Order of the automorphism group fixing the root.
    pub fn automorphisms(&self) -> BigInt {
        let mut out = BigInt::from(1);
        let mut i = 0;
        while i < self.children.len() {
            let mut j = i;
            while j < self.children.len() && self.children[j] == self.children[i] {
                j += 1;
            }
            out *= factorial(j - i);
            i = j;
        }
        for c in &self.children {
            out *= c.automorphisms();
        }
        out
    }

    /// Adds `sub` as a new child of the root.
    pub fn attach_at_root(&self, sub: RTree<L>) -> Self {
        let mut cs = self.children.clone();
        cs.push(sub);
        RTree::new(self.label.clone(), cs)
    }

    /// Every tree obtained by attaching `sub` below one vertex of `self`,
    /// listed once per vertex.
    pub fn attach_everywhere(&self, sub: &RTree<L>) -> Vec<Self> {
        let mut out = vec![self.attach_at_root(sub.clone())];
        for (i, c) in self.children.iter().enumerate() {
            for grown in c.attach_everywhere(sub) {
                let mut cs = self.children.clone();
                cs[i] = grown;
                out.push(RTree::new(self.label.clone(), cs));
            }
        }
        out
    }

    pub fn map_labels<M: Ord + Clone>(&self, f: &mut impl FnMut(&L) -> M) -> RTree<M> {
        RTree::new(f(&self.label), self.children.iter().map(|c| c.map_labels(f)).collect())
    }
}

impl RootedTree {
    pub fn vertex() -> Self {
        RTree::leaf(())
    }

    pub fn from_children(children: Vec<RootedTree>) -> Self {
        RTree::new((), children)
    }

    pub fn ladder(n: usize) -> Self {
        let mut t = Self::vertex();
        for _ in 1..n {
            t = Self::from_children(vec![t]);
        }
        t
    }

    pub fn corolla(k: usize) -> Self {
        Self::from_children(vec![Self::vertex(); k])
    }

    pub fn from_put(t: &Put) -> Self {
        Self::from_children(t.children.iter().map(Self::from_put).collect())
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(Self::from_put(&Put::parse(s)?))
    }

    pub fn parse_at(c: &mut Cursor) -> Result<Self> {
        Ok(Self::from_put(&Put::parse_at(c)?))
    }
}

impl<L: VertexLabel> fmt::Display for RTree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.label.write_label(f)?;
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

/// Nondecreasing sequences of trees with total `n` vertices, all ≥ `lower`.
fn forests(n: usize, lower: Option<&RootedTree>, table: &[Vec<RootedTree>]) -> Vec<Vec<RootedTree>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for size in 1..=n {
        for t in &table[size] {
            if lower.is_some_and(|l| t < l) {
                continue;
            }
            for rest in forests(n - size, Some(t), table) {
                let mut f = vec![t.clone()];
                f.extend(rest);
                out.push(f);
            }
        }
    }
    out
}

/// UT_n by vertices, sorted.
pub fn enumerate(n: usize) -> Vec<RootedTree> {
    let mut table: Vec<Vec<RootedTree>> = vec![Vec::new()];
    for m in 1..=n {
        let mut ts: Vec<_> = forests(m - 1, None, &table).into_iter().map(RootedTree::from_children).collect();
        ts.sort();
        ts.dedup();
        table.push(ts);
    }
    if n == 0 {
        return Vec::new();
    }
    table.swap_remove(n)
}

/// Rooted trees on the vertex set {1..n}: Σ n!/|Aut(t)|.
pub fn count_labeled(n: usize) -> BigInt {
    enumerate(n).iter().map(|t| factorial(n) / t.automorphisms()).sum()
}
