//! The free dendriform algebra on planar binary trees, decorated between leaves.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use cha_combinatorics::binary::{self, Pbt};
use cha_combinatorics::cursor::Cursor;
use cha_core::hopf::{Algebra, Coalgebra, Graded};
use cha_core::{Error, LinComb, Result};

use crate::context::{Dendriform, Dipterous};
use crate::dipt::{parse_labels, write_labels};
use crate::tensor::{self, Pairs};

/// A planar binary tree whose internal vertices carry generator labels;
/// read in order, the labels sit between consecutive leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DendTree {
    Leaf,
    Node(Box<DendTree>, u32, Box<DendTree>),
}

impl DendTree {
    pub fn node(l: DendTree, g: u32, r: DendTree) -> Self {
        DendTree::Node(Box::new(l), g, Box::new(r))
    }

    /// The tree `Y` labeled `g`.
    pub fn generator(g: u32) -> Self {
        Self::node(DendTree::Leaf, g, DendTree::Leaf)
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, DendTree::Leaf)
    }

    pub fn degree(&self) -> usize {
        match self {
            DendTree::Leaf => 0,
            DendTree::Node(l, _, r) => 1 + l.degree() + r.degree(),
        }
    }

    pub fn shape(&self) -> Pbt {
        match self {
            DendTree::Leaf => Pbt::Leaf,
            DendTree::Node(l, _, r) => Pbt::over(l.shape(), r.shape()),
        }
    }

    pub fn labels(&self) -> Vec<u32> {
        let mut out = Vec::new();
        fn go(t: &DendTree, out: &mut Vec<u32>) {
            if let DendTree::Node(l, g, r) = t {
                go(l, out);
                out.push(*g);
                go(r, out);
            }
        }
        go(self, &mut out);
        out
    }

    /// Decorates `shape` with `labels` in order.
    pub fn decorate(shape: &Pbt, labels: &[u32]) -> Result<Self> {
        if labels.len() != shape.internal() {
            return Err(Error::invalid("one label per internal vertex expected"));
        }
        fn go(t: &Pbt, labels: &[u32], next: &mut usize) -> DendTree {
            match t {
                Pbt::Leaf => DendTree::Leaf,
                Pbt::Node(l, r) => {
                    let left = go(l, labels, next);
                    let g = labels[*next];
                    *next += 1;
                    DendTree::node(left, g, go(r, labels, next))
                }
            }
        }
        Ok(go(shape, labels, &mut 0))
    }

    pub fn undecorated(shape: &Pbt) -> Self {
        Self::decorate(shape, &vec![1; shape.internal()]).unwrap()
    }

    /// A planar binary tree literal with an optional `{g1,g2,…}` suffix.
    pub fn parse(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let shape = Pbt::parse_at(&mut c)?;
        let t = if c.peek() == Some(b'{') {
            let start = c.pos;
            let labels = parse_labels(&mut c)?;
            Self::decorate(&shape, &labels).map_err(|e| Error::parse(start, e.to_string()))?
        } else {
            Self::undecorated(&shape)
        };
        c.finish()?;
        Ok(t)
    }
}

impl fmt::Display for DendTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape())?;
        write_labels(f, &self.labels())
    }
}

/// Planar binary trees with t≺s = t^l∨(t^r*s) and t≻s = (t*s^l)∨s^r.
#[derive(Default)]
pub struct FreeDend {
    cache: Mutex<HashMap<DendTree, Pairs<DendTree>>>,
}

impl FreeDend {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn gen(&self, g: u32) -> LinComb<DendTree> {
        LinComb::basis(DendTree::generator(g))
    }

    /// Undecorated trees with `n` internal vertices.
    pub fn basis(&self, n: usize) -> Vec<DendTree> {
        binary::enumerate(n + 1).iter().map(DendTree::undecorated).collect()
    }

    fn star(&self, a: &DendTree, b: &DendTree) -> LinComb<DendTree> {
        if a.is_unit() {
            return LinComb::basis(b.clone());
        }
        if b.is_unit() {
            return LinComb::basis(a.clone());
        }
        self.prec(a, b).unwrap() + self.succ(a, b).unwrap()
    }
}

impl Graded for FreeDend {
    type Key = DendTree;
    fn unit(&self) -> DendTree {
        DendTree::Leaf
    }
    fn degree(&self, k: &DendTree) -> usize {
        k.degree()
    }
}

impl Algebra for FreeDend {
    fn product(&self, a: &DendTree, b: &DendTree) -> LinComb<DendTree> {
        self.star(a, b)
    }
}

impl Dipterous for FreeDend {
    fn succ(&self, a: &DendTree, b: &DendTree) -> Result<LinComb<DendTree>> {
        match (a, b) {
            (DendTree::Leaf, DendTree::Leaf) => Err(Error::UnitProduct("1 ≻ 1")),
            (DendTree::Leaf, _) => Ok(LinComb::basis(b.clone())),
            (_, DendTree::Leaf) => Ok(LinComb::zero()),
            (_, DendTree::Node(bl, g, br)) => {
                Ok(self.star(a, bl).map_keys(|l| DendTree::node(l.clone(), *g, br.as_ref().clone())))
            }
        }
    }
}

impl Dendriform for FreeDend {
    fn prec(&self, a: &DendTree, b: &DendTree) -> Result<LinComb<DendTree>> {
        match (a, b) {
            (DendTree::Leaf, DendTree::Leaf) => Err(Error::UnitProduct("1 ≺ 1")),
            (DendTree::Leaf, _) => Ok(LinComb::zero()),
            (_, DendTree::Leaf) => Ok(LinComb::basis(a.clone())),
            (DendTree::Node(al, g, ar), _) => {
                Ok(self.star(ar, b).map_keys(|r| DendTree::node(al.as_ref().clone(), *g, r.clone())))
            }
        }
    }
}

impl Coalgebra for FreeDend {
    /// Recursion on t = t^l ≻ Y ≺ t^r with Y primitive.
    fn coproduct(&self, k: &DendTree) -> Pairs<DendTree> {
        let DendTree::Node(l, g, r) = k else {
            return tensor::unit_pair(self);
        };
        if let Some(hit) = self.cache.lock().unwrap().get(k) {
            return hit.clone();
        }
        let y = DendTree::generator(*g);
        let mut acc = LinComb::basis((y.clone(), DendTree::Leaf));
        acc.add_term((DendTree::Leaf, y), cha_core::scalar::one());
        if !l.is_unit() {
            acc = tensor::succ(self, &self.coproduct(l), &acc).unwrap();
        }
        if !r.is_unit() {
            acc = tensor::prec(self, &acc, &self.coproduct(r)).unwrap();
        }
        self.cache.lock().unwrap().insert(k.clone(), acc.clone());
        acc
    }
}
