//! Planar binary trees, graded by leaves.

use std::fmt;

use cha_core::{Error, Result};

use crate::cursor::Cursor;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pbt {
    Leaf,
    Node(Box<Pbt>, Box<Pbt>),
}

impl Pbt {
    /// `l ∨ r`
    pub fn over(l: Pbt, r: Pbt) -> Self {
        Pbt::Node(Box::new(l), Box::new(r))
    }

    /// The tree `| ∨ |`.
    pub fn y() -> Self {
        Pbt::over(Pbt::Leaf, Pbt::Leaf)
    }

    pub fn leaves(&self) -> usize {
        self.internal() + 1
    }

    pub fn internal(&self) -> usize {
        match self {
            Pbt::Leaf => 0,
            Pbt::Node(l, r) => 1 + l.internal() + r.internal(),
        }
    }

    pub fn split(&self) -> Option<(&Pbt, &Pbt)> {
        match self {
            Pbt::Leaf => None,
            Pbt::Node(l, r) => Some((l, r)),
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
                Ok(Pbt::Leaf)
            }
            Some(b'(') => {
                let open = c.pos;
                c.bump();
                let l = Self::parse_at(c)?;
                if c.peek() == Some(b')') {
                    return Err(Error::parse(open, "a binary vertex needs exactly two inputs"));
                }
                let r = Self::parse_at(c)?;
                if c.peek() != Some(b')') {
                    return Err(Error::parse(open, "a binary vertex needs exactly two inputs"));
                }
                c.bump();
                Ok(Pbt::over(l, r))
            }
            _ => Err(c.error("expected `.` or `(`")),
        }
    }
}

impl fmt::Display for Pbt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pbt::Leaf => f.write_str("."),
            Pbt::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

/// PBT_n by leaves, sorted.
pub fn enumerate(n: usize) -> Vec<Pbt> {
    let mut table: Vec<Vec<Pbt>> = vec![Vec::new(), vec![Pbt::Leaf]];
    for m in 2..=n {
        let mut ts = Vec::new();
        for l in 1..m {
            for a in &table[l] {
                for b in &table[m - l] {
                    ts.push(Pbt::over(a.clone(), b.clone()));
                }
            }
        }
        ts.sort();
        table.push(ts);
    }
    if n == 0 {
        return Vec::new();
    }
    table.swap_remove(n)
}
