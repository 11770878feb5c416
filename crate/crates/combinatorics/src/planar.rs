//! Reduced planar rooted trees, graded by leaves.

use std::fmt;

use cha_core::{Error, Result};

use crate::cursor::Cursor;

/// A planar tree in which every internal vertex has at least two inputs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlanarTree {
    Leaf,
    Node(Vec<PlanarTree>),
}

impl PlanarTree {
    pub fn leaves(&self) -> usize {
        match self {
            PlanarTree::Leaf => 1,
            PlanarTree::Node(cs) => cs.iter().map(PlanarTree::leaves).sum(),
        }
    }

    /// The 2-leaf tree.
    pub fn y() -> Self {
        PlanarTree::Node(vec![PlanarTree::Leaf, PlanarTree::Leaf])
    }

    /// Joins the roots of `parts` to a new vertex.
    pub fn graft(parts: Vec<PlanarTree>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::invalid("grafting needs at least two trees"));
        }
        Ok(PlanarTree::Node(parts))
    }

    pub fn ungraft(&self) -> Option<&[PlanarTree]> {
        match self {
            PlanarTree::Leaf => None,
            PlanarTree::Node(cs) => Some(cs),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let t = Self::parse_at(&mut c)?;
        c.finish()?;
        Ok(t)
    }

    pub fn parse_at(c: &mut Cursor) -> Result<Self> {
        match c.peek() {
            Some(b'.') => {
                c.bump();
                Ok(PlanarTree::Leaf)
            }
            Some(b'(') => {
                let open = c.pos;
                c.bump();
                let mut kids = Vec::new();
                while c.peek() != Some(b')') {
                    if c.at_end() {
                        return Err(c.error("unclosed `(`"));
                    }
                    kids.push(Self::parse_at(c)?);
                }
                c.bump();
                if kids.len() < 2 {
                    return Err(c.error_at(open, "a vertex needs at least two inputs"));
                }
                Ok(PlanarTree::Node(kids))
            }
            _ => Err(c.error("expected `.` or `(`")),
        }
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarTree::Leaf => f.write_str("."),
            PlanarTree::Node(cs) => {
                f.write_str("(")?;
                for (i, t) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// All ordered sequences of trees with the given total number of leaves,
/// each sequence at least `min_len` long.
fn sequences(n: usize, min_len: usize, table: &[Vec<PlanarTree>]) -> Vec<Vec<PlanarTree>> {
    let mut out = Vec::new();
    fn go(rest: usize, cur: &mut Vec<PlanarTree>, min_len: usize, table: &[Vec<PlanarTree>], out: &mut Vec<Vec<PlanarTree>>) {
        if rest == 0 {
            if cur.len() >= min_len {
                out.push(cur.clone());
            }
            return;
        }
        for first in 1..=rest.min(table.len() - 1) {
            for t in &table[first] {
                cur.push(t.clone());
                go(rest - first, cur, min_len, table, out);
                cur.pop();
            }
        }
    }
    go(n, &mut Vec::new(), min_len, table, &mut out);
    out
}

/// PT_n, sorted.
pub fn enumerate(n: usize) -> Vec<PlanarTree> {
    let mut table: Vec<Vec<PlanarTree>> = vec![Vec::new(), vec![PlanarTree::Leaf]];
    for m in 2..=n {
        let mut ts: Vec<_> = sequences(m, 2, &table).into_iter().map(PlanarTree::Node).collect();
        ts.sort();
        table.push(ts);
    }
    if n == 0 {
        return Vec::new();
    }
    table.swap_remove(n)
}
