//! The free dipterous algebra on monomials of planar trees.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use cha_combinatorics::cursor::Cursor;
use cha_combinatorics::planar::{self, PlanarTree};
use cha_core::hopf::{Algebra, Coalgebra, Graded};
use cha_core::{Error, LinComb, Result};

use crate::context::Dipterous;
use crate::tensor::{self, Pairs};

/// t_1 t_2 … t_k with generator labels on the leaves, read left to right
/// across the whole monomial. The empty monomial is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiptMono {
    pub trees: Vec<PlanarTree>,
    pub labels: Vec<u32>,
}

impl DiptMono {
    pub fn unit() -> Self {
        DiptMono { trees: Vec::new(), labels: Vec::new() }
    }

    /// The one-leaf tree labeled `g`.
    pub fn generator(g: u32) -> Self {
        DiptMono { trees: vec![PlanarTree::Leaf], labels: vec![g] }
    }

    /// Labels every leaf with the generator 1.
    pub fn undecorated(trees: Vec<PlanarTree>) -> Self {
        let n = trees.iter().map(PlanarTree::leaves).sum();
        DiptMono { trees, labels: vec![1; n] }
    }

    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    pub fn is_unit(&self) -> bool {
        self.trees.is_empty()
    }

    /// Splits into single-tree monomials.
    pub fn factors(&self) -> Vec<DiptMono> {
        let mut pos = 0;
        self.trees
            .iter()
            .map(|t| {
                let n = t.leaves();
                let m = DiptMono { trees: vec![t.clone()], labels: self.labels[pos..pos + n].to_vec() };
                pos += n;
                m
            })
            .collect()
    }

    pub fn concat(&self, other: &DiptMono) -> DiptMono {
        DiptMono {
            trees: [self.trees.as_slice(), other.trees.as_slice()].concat(),
            labels: [self.labels.as_slice(), other.labels.as_slice()].concat(),
        }
    }

    /// Text form: `1`, or tree literals separated by spaces with an optional
    /// `{g1,g2,…}` listing the leaf labels.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim() == "1" {
            return Ok(Self::unit());
        }
        let mut c = Cursor::new(s);
        let mut trees = Vec::new();
        while matches!(c.peek(), Some(b'.') | Some(b'(')) {
            trees.push(PlanarTree::parse_at(&mut c)?);
        }
        if trees.is_empty() {
            return Err(c.error("expected a planar tree or `1`"));
        }
        let mut m = Self::undecorated(trees);
        if c.peek() == Some(b'{') {
            let start = c.pos;
            m.labels = parse_labels(&mut c)?;
            if m.labels.len() != m.trees.iter().map(PlanarTree::leaves).sum::<usize>() {
                return Err(Error::parse(start, "one label per leaf expected"));
            }
        }
        c.finish()?;
        Ok(m)
    }
}

pub(crate) fn parse_labels(c: &mut Cursor) -> Result<Vec<u32>> {
    c.expect(b'{')?;
    let mut out = Vec::new();
    loop {
        let n = c.number()?;
        out.push(u32::try_from(n).map_err(|_| c.error("label too large"))?);
        match c.bump() {
            Some(b',') => continue,
            Some(b'}') => return Ok(out),
            _ => return Err(c.error_at(c.pos.saturating_sub(1), "expected `,` or `}`")),
        }
    }
}

pub(crate) fn write_labels(f: &mut fmt::Formatter<'_>, labels: &[u32]) -> fmt::Result {
    if labels.iter().all(|&g| g == 1) {
        return Ok(());
    }
    let parts: Vec<String> = labels.iter().map(u32::to_string).collect();
    write!(f, "{{{}}}", parts.join(","))
}

impl fmt::Display for DiptMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.trees.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" "))?;
        write_labels(f, &self.labels)
    }
}

/// T(PT∞) with concatenation and the right operation
/// (t_1…t_k)≻(s_1…s_l) = t_1∨(t_2∨(…∨⋁(t_k, s_1, …, s_l))).
#[derive(Default)]
pub struct FreeDipt {
    cache: Mutex<HashMap<DiptMono, Pairs<DiptMono>>>,
}

impl FreeDipt {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn gen(&self, g: u32) -> LinComb<DiptMono> {
        LinComb::basis(DiptMono::generator(g))
    }

    /// All undecorated monomials of degree `n`.
    pub fn basis(&self, n: usize) -> Vec<DiptMono> {
        if n == 0 {
            return vec![DiptMono::unit()];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for t in planar::enumerate(first) {
                for rest in self.basis(n - first) {
                    let head = DiptMono::undecorated(vec![t.clone()]);
                    out.push(head.concat(&rest));
                }
            }
        }
        out.sort();
        out
    }

    fn tree_coproduct(&self, m: &DiptMono) -> Pairs<DiptMono> {
        if let Some(hit) = self.cache.lock().unwrap().get(m) {
            return hit.clone();
        }
        let value = match &m.trees[0] {
            PlanarTree::Leaf => {
                let mut d = LinComb::basis((m.clone(), DiptMono::unit()));
                d.add_term((DiptMono::unit(), m.clone()), cha_core::scalar::one());
                d
            }
            PlanarTree::Node(children) => {
                // ⋁(x_1, …, x_k) = x_1 ≻ (x_2 … x_k)
                let whole = DiptMono { trees: children.clone(), labels: m.labels.clone() };
                let mut parts = whole.factors();
                let first = parts.remove(0);
                let rest = parts.into_iter().fold(DiptMono::unit(), |acc, p| acc.concat(&p));
                let left = self.tree_coproduct(&first);
                let right = self.coproduct(&rest);
                tensor::succ(self, &left, &right).expect("augmentation ideal on the left")
            }
        };
        self.cache.lock().unwrap().insert(m.clone(), value.clone());
        value
    }
}

impl Graded for FreeDipt {
    type Key = DiptMono;
    fn unit(&self) -> DiptMono {
        DiptMono::unit()
    }
    fn degree(&self, k: &DiptMono) -> usize {
        k.degree()
    }
}

impl Algebra for FreeDipt {
    fn product(&self, a: &DiptMono, b: &DiptMono) -> LinComb<DiptMono> {
        LinComb::basis(a.concat(b))
    }
}

impl Dipterous for FreeDipt {
    fn succ(&self, a: &DiptMono, b: &DiptMono) -> Result<LinComb<DiptMono>> {
        match (a.is_unit(), b.is_unit()) {
            (true, true) => Err(Error::UnitProduct("1 ≻ 1")),
            (true, false) => Ok(LinComb::basis(b.clone())),
            (false, true) => Ok(LinComb::zero()),
            (false, false) => {
                let (last, init) = a.trees.split_last().unwrap();
                let mut inner = vec![last.clone()];
                inner.extend(b.trees.iter().cloned());
                let mut tree = PlanarTree::Node(inner);
                for t in init.iter().rev() {
                    tree = PlanarTree::Node(vec![t.clone(), tree]);
                }
                Ok(LinComb::basis(DiptMono { trees: vec![tree], labels: [a.labels.as_slice(), b.labels.as_slice()].concat() }))
            }
        }
    }
}

impl Coalgebra for FreeDipt {
    /// The dipterous morphism with primitive generators, multiplicative on monomials.
    fn coproduct(&self, k: &DiptMono) -> Pairs<DiptMono> {
        k.factors()
            .iter()
            .fold(tensor::unit_pair(self), |acc, t| tensor::star(self, &acc, &self.tree_coproduct(t)))
    }
}
