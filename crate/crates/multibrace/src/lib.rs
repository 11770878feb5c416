//! Multibrace structures and the products they encode on the tensor
//! coalgebra, with relation checkers and the brace operad.

pub mod operad;
pub mod product;
pub mod relations;
pub mod structure;

pub use product::{mb_to_product, product_to_mb, ChaProduct};
pub use structure::{BraceStructure, MbStructure};

use cha_core::{Key, LinComb};

/// Expands a word of linear combinations into a combination of words.
pub fn expand_word<G: Key>(letters: &[LinComb<G>]) -> LinComb<Vec<G>> {
    let mut acc: LinComb<Vec<G>> = LinComb::basis(Vec::new());
    for l in letters {
        acc = acc.bilinear(l, |w, g| {
            let mut w = w.clone();
            w.push(g.clone());
            LinComb::basis(w)
        });
    }
    acc
}

/// Sequences of pairs (i_a, j_a) ≠ (0,0) summing to (i, j), skipping the
/// blocks (p,0) and (0,q) with p,q ≥ 2 on which every structure vanishes.
pub fn block_splittings(i: usize, j: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    fn go(i: usize, j: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if i == 0 && j == 0 {
            out.push(cur.clone());
            return;
        }
        for a in 0..=i {
            for b in 0..=j {
                if (a, b) == (0, 0) || (b == 0 && a >= 2) || (a == 0 && b >= 2) {
                    continue;
                }
                cur.push((a, b));
                go(i - a, j - b, cur, out);
                cur.pop();
            }
        }
    }
    go(i, j, &mut Vec::new(), &mut out);
    out
}
