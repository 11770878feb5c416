//! Compositions: ordered sequences of nonnegative integers.

use std::fmt;

use cha_core::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" {
            return Ok(Composition(Vec::new()));
        }
        s.split('.')
            .map(|p| p.parse::<usize>().map_err(|_| Error::parse(0, format!("bad part `{p}`"))))
            .collect::<Result<_>>()
            .map(Composition)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join("."))
    }
}

/// All ways to write `m` as an ordered sum of `r` nonnegative parts.
pub fn weak(m: usize, r: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    fn go(m: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if r == 1 {
            cur.push(m);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for first in 0..=m {
            cur.push(first);
            go(m - first, r - 1, cur, out);
            cur.pop();
        }
    }
    if r == 0 {
        if m == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    go(m, r, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `m` into positive parts.
pub fn positive(m: usize) -> Vec<Composition> {
    if m == 0 {
        return vec![Composition(Vec::new())];
    }
    let mut out = Vec::new();
    for first in 1..=m {
        for rest in positive(m - first) {
            let mut v = vec![first];
            v.extend(rest.0);
            out.push(Composition(v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(weak(2, 3).len(), 6);
        assert!(weak(4, 3).iter().all(|c| c.sum() == 4));
        assert_eq!(positive(4).len(), 8);
        assert_eq!(weak(0, 0).len(), 1);
    }

    #[test]
    fn text() {
        let c = Composition(vec![2, 0, 1]);
        assert_eq!(c.to_string(), "2.0.1");
        assert_eq!(Composition::parse("2.0.1").unwrap(), c);
    }
}
