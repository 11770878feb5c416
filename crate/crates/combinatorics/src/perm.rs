//! Permutations in one-line notation.

use std::fmt;

use cha_core::{Error, Result};

/// σ stored as the word σ(1)…σ(n).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::invalid(format!("{word:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// σ(i), 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// σ×τ: τ shifted past the letters of σ.
    pub fn cross(&self, other: &Permutation) -> Permutation {
        let n = self.len();
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&x| x + n));
        Permutation(v)
    }

    /// σ·(v_1…v_n) = v_{σ⁻¹(1)}…v_{σ⁻¹(n)}.
    pub fn act<T: Clone>(&self, word: &[T]) -> Vec<T> {
        let inv = self.inverse();
        inv.0.iter().map(|&i| word[i - 1].clone()).collect()
    }

    /// No proper prefix is a permutation of an initial segment.
    pub fn is_irreducible(&self) -> bool {
        let mut max = 0;
        for (i, &x) in self.0.iter().enumerate() {
            max = max.max(x);
            if max == i + 1 && i + 1 < self.len() {
                return false;
            }
        }
        !self.is_empty()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" {
            return Ok(Permutation(Vec::new()));
        }
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| Error::parse(0, format!("bad entry `{p}`"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .enumerate()
                .map(|(i, c)| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::parse(i, "expected a digit")))
                .collect::<Result<_>>()?
        };
        Permutation::new(word).map_err(|e| Error::parse(0, e.to_string()))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let sep = if self.len() > 9 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

/// The order-isomorphic relabeling of distinct integers onto 1..n.
pub fn std(word: &[usize]) -> Result<Permutation> {
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid("std needs pairwise distinct entries"));
    }
    Ok(Permutation(word.iter().map(|x| sorted.binary_search(x).unwrap() + 1).collect()))
}

/// Permutations δ of p+q letters increasing on {1..p} and on {p+1..p+q}.
pub fn shuffles(p: usize, q: usize) -> Vec<Permutation> {
    let n = p + q;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(next: usize, n: usize, p: usize, chosen: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if chosen.len() == p {
            let rest: Vec<usize> = (1..=n).filter(|x| !chosen.contains(x)).collect();
            let mut w = chosen.clone();
            w.extend(rest);
            out.push(Permutation(w));
            return;
        }
        for x in next..=n {
            chosen.push(x);
            go(x + 1, n, p, chosen, out);
            chosen.pop();
        }
    }
    go(1, n, p, &mut chosen, &mut out);
    out.sort();
    out
}

/// S_n in lexicographic order.
pub fn enumerate(n: usize) -> Vec<Permutation> {
    cha_core::words::permutations(n)
        .into_iter()
        .map(|p| Permutation(p.into_iter().map(|i| i + 1).collect()))
        .collect()
}

pub fn irreducibles(n: usize) -> Vec<Permutation> {
    enumerate(n).into_iter().filter(Permutation::is_irreducible).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use cha_core::scalar::binomial;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn standardization() {
        assert_eq!(std(&[4, 2]).unwrap(), p("21"));
        assert_eq!(std(&[1, 2, 3]).unwrap(), p("123"));
        assert_eq!(std(&[3, 1]).unwrap(), p("21"));
        assert!(std(&[2, 2]).is_err());
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffles(1, 1).len(), 2);
        assert_eq!(shuffles(2, 1).len(), 3);
        assert_eq!(shuffles(2, 2).len(), 6);
        assert_eq!(shuffles(0, 3), vec![Permutation::identity(3)]);
    }

    #[test]
    fn irreducible_counts() {
        let c: Vec<_> = (1..=5).map(|n| irreducibles(n).len()).collect();
        assert_eq!(c, [1, 1, 3, 13, 71]);
        assert_eq!(irreducibles(3), vec![p("231"), p("312"), p("321")]);
    }

    #[test]
    fn text_forms() {
        let long = Permutation::identity(10);
        assert_eq!(long.to_string(), "1,2,3,4,5,6,7,8,9,10");
        assert_eq!(Permutation::parse(&long.to_string()).unwrap(), long);
        assert_eq!(Permutation::default().to_string(), "()");
        assert!(Permutation::parse("112").is_err());
    }

    #[test]
    fn left_action() {
        assert_eq!(p("132").act(&['a', 'b', 'c']), vec!['a', 'c', 'b']);
        assert_eq!(p("231").act(&['a', 'b', 'c']), vec!['c', 'a', 'b']);
    }

    proptest! {
        #[test]
        fn group_laws(a in 0usize..24, b in 0usize..24, c in 0usize..24) {
            let s = enumerate(4);
            let (x, y, z) = (&s[a], &s[b], &s[c]);
            prop_assert_eq!(x.compose(y).compose(z), x.compose(&y.compose(z)));
            prop_assert_eq!(x.compose(&x.inverse()), Permutation::identity(4));
            prop_assert_eq!(x.compose(y).act(&[1, 2, 3, 4]), x.act(&y.act(&[1, 2, 3, 4])));
        }

        #[test]
        fn shuffles_monotone(p in 0usize..4, q in 0usize..4) {
            let all = shuffles(p, q);
            prop_assert_eq!(all.len(), binomial(p + q, p).to_string().parse::<usize>().unwrap());
            let distinct: BTreeSet<_> = all.iter().cloned().collect();
            prop_assert_eq!(distinct.len(), all.len());
            for d in &all {
                prop_assert!(d.word()[..p].windows(2).all(|w| w[0] < w[1]));
                prop_assert!(d.word()[p..].windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}
