//! Tensor words with deconcatenation and symmetric words with unshuffle.

use std::fmt::{self, Display};

use crate::lincomb::{Key, LinComb};
use crate::scalar::{factorial_q, Scalar};

/// An ordered word of generators; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word<G>(pub Vec<G>);

impl<G: Clone> Word<G> {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: G) -> Self {
        Word(vec![g])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[G] {
        &self.0
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }
}

impl<G> From<Vec<G>> for Word<G> {
    fn from(v: Vec<G>) -> Self {
        Word(v)
    }
}

impl<G: Display> Display for Word<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// Sum of all splittings `x_1…x_i ⊗ x_{i+1}…x_n`.
pub fn deconcat<G: Key>(w: &Word<G>) -> LinComb<(Word<G>, Word<G>)> {
    (0..=w.0.len())
        .map(|i| {
            (
                (Word(w.0[..i].to_vec()), Word(w.0[i..].to_vec())),
                Scalar::from_integer(1.into()),
            )
        })
        .collect()
}

/// All interleavings of two words, as a sequence of choices.
pub fn shuffle<G: Key>(a: &[G], b: &[G]) -> LinComb<Word<G>> {
    let mut out = LinComb::zero();
    let mut buf = Vec::with_capacity(a.len() + b.len());
    fn go<G: Key>(a: &[G], b: &[G], buf: &mut Vec<G>, out: &mut LinComb<Word<G>>) {
        if a.is_empty() || b.is_empty() {
            let mut w = buf.clone();
            w.extend_from_slice(a);
            w.extend_from_slice(b);
            out.add_term(Word(w), Scalar::from_integer(1.into()));
            return;
        }
        buf.push(a[0].clone());
        go(&a[1..], b, buf, out);
        buf.pop();
        buf.push(b[0].clone());
        go(a, &b[1..], buf, out);
        buf.pop();
    }
    go(a, b, &mut buf, &mut out);
    out
}

/// A finite multiset of generators stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SymWord<G>(Vec<G>);

impl<G: Ord + Clone> SymWord<G> {
    pub fn empty() -> Self {
        SymWord(Vec::new())
    }

    pub fn new(mut letters: Vec<G>) -> Self {
        letters.sort();
        SymWord(letters)
    }

    pub fn letter(g: G) -> Self {
        SymWord(vec![g])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[G] {
        &self.0
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        SymWord::new(v)
    }

    /// Product of the factorials of the letter multiplicities.
    pub fn multiplicity_factor(&self) -> num_bigint::BigInt {
        let mut out = num_bigint::BigInt::from(1);
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            out *= crate::scalar::factorial(j - i);
            i = j;
        }
        out
    }
}

impl<G: Display> Display for SymWord<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

/// Sum over all subsets of positions of `left ⊗ complement`.
pub fn unshuffle<G: Key>(w: &SymWord<G>) -> LinComb<(SymWord<G>, SymWord<G>)> {
    let n = w.0.len();
    let mut out = LinComb::zero();
    for mask in 0u64..(1u64 << n) {
        let (mut l, mut r) = (Vec::new(), Vec::new());
        for (i, g) in w.0.iter().enumerate() {
            if mask >> i & 1 == 1 {
                l.push(g.clone());
            } else {
                r.push(g.clone());
            }
        }
        out.add_term((SymWord(l), SymWord(r)), Scalar::from_integer(1.into()));
    }
    out
}

/// Sum of all orderings of a multiset, divided by `n!` when `normalized`.
pub fn symmetrize<G: Key>(w: &SymWord<G>, normalized: bool) -> LinComb<Word<G>> {
    let mut out = LinComb::zero();
    for p in permutations(w.0.len()) {
        let word: Vec<G> = p.iter().map(|&i| w.0[i].clone()).collect();
        out.add_term(Word(word), Scalar::from_integer(1.into()));
    }
    if normalized {
        out = out.scale(&(factorial_q(w.0.len()).recip()));
    }
    out
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use proptest::prelude::*;

    fn w(s: &str) -> Word<char> {
        Word(s.chars().collect())
    }

    #[test]
    fn deconcat_two_letters() {
        let d = deconcat(&w("ab"));
        let expected: LinComb<_> = [
            ((w(""), w("ab")), int(1)),
            ((w("a"), w("b")), int(1)),
            ((w("ab"), w("")), int(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(d, expected);
        assert_eq!(deconcat(&w("")).len(), 1);
    }

    #[test]
    fn unshuffle_repeated_letter() {
        let d = unshuffle(&SymWord::new(vec!['x', 'x']));
        let x = SymWord::letter('x');
        assert_eq!(d.coeff(&(x.clone(), x)), int(2));
        assert_eq!(d.len(), 3);
        let d = unshuffle(&SymWord::new(vec!['y', 'x']));
        assert_eq!(d.len(), 4);
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffle(&['a', 'b'], &['c']).len(), 3);
        assert_eq!(shuffle(&['a'], &['a']).coeff(&w("aa")), int(2));
        assert_eq!(permutations(4).len(), 24);
    }

    fn coassoc_tensor(word: &Word<char>) -> bool {
        let left: LinComb<(Word<char>, Word<char>, Word<char>)> = deconcat(word)
            .map_linear(|(a, b)| deconcat(a).map_keys(|(x, y)| (x.clone(), y.clone(), b.clone())));
        let right = deconcat(word)
            .map_linear(|(a, b)| deconcat(b).map_keys(|(x, y)| (a.clone(), x.clone(), y.clone())));
        left == right
    }

    proptest! {
        #[test]
        fn deconcat_coassociative(s in "[abc]{0,5}") {
            prop_assert!(coassoc_tensor(&w(&s)));
        }

        #[test]
        fn unshuffle_coassociative_cocommutative(s in "[abc]{0,5}") {
            let word = SymWord::new(s.chars().collect());
            let d = unshuffle(&word);
            let swapped = d.map_keys(|(a, b)| (b.clone(), a.clone()));
            prop_assert_eq!(&d, &swapped);
            let left: LinComb<(SymWord<char>, SymWord<char>, SymWord<char>)> = d.map_linear(|(a, b)| {
                unshuffle(a).map_keys(|(x, y)| (x.clone(), y.clone(), b.clone()))
            });
            let right = d.map_linear(|(a, b)| {
                unshuffle(b).map_keys(|(x, y)| (a.clone(), x.clone(), y.clone()))
            });
            prop_assert_eq!(left, right);
        }

        #[test]
        fn sym_storage_order_independent(mut v in proptest::collection::vec(0u8..4, 0..6)) {
            let a = SymWord::new(v.clone());
            v.reverse();
            prop_assert_eq!(a, SymWord::new(v));
        }
    }
}
