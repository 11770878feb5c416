use std::sync::Arc;

use cha_combinatorics::rooted::{self, RTree, RootedTree};
use cha_core::linalg::rank;
use cha_core::scalar::int;
use cha_core::words::unshuffle;
use cha_core::{Coalgebra, LinComb};
use cha_symmetric::ck::{admissible_cuts, ck_coproduct, forests, pairing_gl_ck, parse_forest, ConnesKreimer, Forest};
use cha_symmetric::prelie::{
    check_prelie_identity, check_symmetric_brace, grossman_larson, guin_oudom, prelie_free_product, FreePreLie, PreLie,
};
use cha_symmetric::smb::{check_associative, check_hopf, smb_product_lin, smb_to_product};
use proptest::prelude::*;

fn f(s: &str) -> Forest {
    parse_forest(s).unwrap()
}

fn labeled_trees(max_vertices: usize, labels: &[u32]) -> Vec<RTree<u32>> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        for shape in rooted::enumerate(n) {
            let mut stack = vec![Vec::<u32>::new()];
            for _ in 0..n {
                stack = stack
                    .into_iter()
                    .flat_map(|w| labels.iter().map(move |&l| [w.clone(), vec![l]].concat()))
                    .collect();
            }
            for word in stack {
                let mut it = word.into_iter();
                out.push(shape.map_labels(&mut |_| it.next().unwrap()));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[test]
fn free_prelie_identity_on_small_trees() {
    let p = FreePreLie::<u32>::new();
    let trees = labeled_trees(2, &[1, 2]);
    for x in &trees {
        for y in &trees {
            for z in &trees {
                if x.vertices() + y.vertices() + z.vertices() > 4 {
                    continue;
                }
                let report = check_prelie_identity(&p, &[x.clone(), y.clone(), z.clone()]);
                assert!(report.ok(), "{x} {y} {z}");
            }
        }
    }
}

/// The span of iterated products of one generator, by degree.
#[test]
fn one_generator_dimensions() {
    let mut spans: Vec<Vec<LinComb<RootedTree>>> = vec![Vec::new(), vec![LinComb::basis(RootedTree::vertex())]];
    for n in 2..=5 {
        let mut here = Vec::new();
        for i in 1..n {
            for a in &spans[i] {
                for b in &spans[n - i] {
                    here.push(prelie_free_product(a, b));
                }
            }
        }
        spans.push(here);
    }
    let dims: Vec<usize> = (1..=5).map(|n| rank(&spans[n])).collect();
    assert_eq!(dims, vec![1, 1, 2, 4, 9]);
}

/// Multilinear part: products of distinct generators 1..n span n^{n-1} trees.
#[test]
fn multilinear_dimensions() {
    use std::collections::BTreeMap;
    let mut spans: BTreeMap<u32, Vec<LinComb<RTree<u32>>>> = BTreeMap::new();
    for g in 0..4 {
        spans.insert(1 << g, vec![LinComb::basis(RTree::leaf(g + 1))]);
    }
    for mask in 1u32..16 {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut here = Vec::new();
        let mut sub = (mask - 1) & mask;
        while sub > 0 {
            for a in &spans[&sub] {
                for b in &spans[&(mask & !sub)] {
                    here.push(prelie_free_product(a, b));
                }
            }
            sub = (sub - 1) & mask;
        }
        spans.insert(mask, here);
    }
    for n in 1..=4u32 {
        assert_eq!(rank(&spans[&((1 << n) - 1)]), n.pow(n - 1) as usize);
    }
    for n in 1..=5u32 {
        assert_eq!(rooted::count_labeled(n as usize), (n as u64).pow(n - 1).into());
    }
}

#[test]
fn guin_oudom_braces_of_free_prelie() {
    let p = Arc::new(FreePreLie::<u32>::new());
    let gens: Vec<RTree<u32>> = (1..=5).map(RTree::leaf).collect();
    let go = guin_oudom(p.clone(), &gens).unwrap();
    let (x, y1, y2) = (&gens[0], &gens[1], &gens[2]);
    let b = |t: &RTree<u32>| LinComb::basis(t.clone());
    let expected = prelie_free_product(&p.prelie(x, y1), &b(y2)) - prelie_free_product(&b(x), &p.prelie(y1, y2));
    assert_eq!(go.brace_ordered(x, &[y1.clone(), y2.clone()]), expected);
    assert_eq!(go.brace_ordered(x, &[y2.clone(), y1.clone()]), expected);
    // {x; y1 y2} grafts y1 and y2 onto x separately: the corolla
    assert_eq!(expected, LinComb::basis(RTree::new(1, vec![RTree::leaf(2), RTree::leaf(3)])));
    let ys = [gens[1].clone(), gens[2].clone(), gens[3].clone()];
    let reference = go.brace_ordered(x, &ys);
    for perm in [[1, 0, 2], [2, 1, 0], [0, 2, 1]] {
        let permuted: Vec<_> = perm.iter().map(|&i| ys[i].clone()).collect();
        assert_eq!(go.brace_ordered(x, &permuted), reference);
    }
    let m = go.to_smb(6);
    let r = check_symmetric_brace(&m, &gens, 4);
    assert!(r.ok(), "{r}");
    let composite = RTree::new(1, vec![RTree::leaf(2)]);
    let r = check_symmetric_brace(&m, &[composite, gens[2].clone(), gens[3].clone(), gens[4].clone()], 4);
    assert!(r.ok(), "{r}");
}

#[test]
fn grossman_larson_product() {
    let gl = grossman_larson(6);
    let dot = || f("{[]}");
    let got = smb_to_product(&gl, &dot(), &dot()).unwrap();
    let expected: LinComb<Forest> = [(f("{[[]]}"), int(1)), (f("{[], []}"), int(1))].into_iter().collect();
    assert_eq!(got, expected);
    let v = f("{[[]], []}");
    assert_eq!(smb_to_product(&gl, &Forest::empty(), &v).unwrap(), LinComb::basis(v.clone()));
    let trees: Vec<RootedTree> = (1..=2).flat_map(rooted::enumerate).collect();
    let r = check_associative(&gl, &trees, 4).unwrap();
    assert!(r.ok(), "{r}");
    let r = check_hopf(&gl, &trees, 4).unwrap();
    assert!(r.ok(), "{r}");
    // exhaustive on forests up to four vertices
    for n in 0..=4 {
        for i in 0..=n {
            for j in 0..=n - i {
                for u in forests(i) {
                    for v in forests(j) {
                        for w in forests(n - i - j) {
                            let left = smb_product_lin(&gl, &smb_to_product(&gl, &u, &v).unwrap(), &LinComb::basis(w.clone())).unwrap();
                            let right = smb_product_lin(&gl, &LinComb::basis(u.clone()), &smb_to_product(&gl, &v, &w).unwrap()).unwrap();
                            assert_eq!(left, right);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn connes_kreimer_examples() {
    let pairs = |items: &[(&str, &str, i64)]| -> LinComb<(Forest, Forest)> {
        items.iter().map(|(a, b, c)| ((f(a), f(b)), int(*c))).collect()
    };
    assert_eq!(ck_coproduct(&f("{[]}"), 6).unwrap(), pairs(&[("{[]}", "1", 1), ("1", "{[]}", 1)]));
    assert_eq!(
        ck_coproduct(&f("{[[]]}"), 6).unwrap(),
        pairs(&[("{[[]]}", "1", 1), ("1", "{[[]]}", 1), ("{[]}", "{[]}", 1)])
    );
    assert_eq!(
        ck_coproduct(&f("{[[] []]}"), 6).unwrap(),
        pairs(&[("{[[] []]}", "1", 1), ("1", "{[[] []]}", 1), ("{[]}", "{[[]]}", 2), ("{[], []}", "{[]}", 1)])
    );
    assert!(ck_coproduct(&f("{[[[[]]]], [[]]}"), 5).is_err());
    let vertex_cuts = admissible_cuts(&RootedTree::vertex());
    assert_eq!(vertex_cuts.len(), 2);
}

#[test]
fn connes_kreimer_bialgebra() {
    let ck = ConnesKreimer::new(6);
    for n in 0..=4 {
        for w in forests(n) {
            let d = ck.coproduct(&w);
            let left: LinComb<(Forest, Forest, Forest)> =
                d.map_linear(|(a, b)| ck.coproduct(a).map_keys(|(x, y)| (x.clone(), y.clone(), b.clone())));
            let right = d.map_linear(|(a, b)| ck.coproduct(b).map_keys(|(x, y)| (a.clone(), x.clone(), y.clone())));
            assert_eq!(left, right, "{w}");
            if w.degree() == 1 && n > 0 {
                // trees: the legs holding the root of Δ̄ are single trees
                for ((p, r), _) in d.iter() {
                    if !p.is_empty() && !r.is_empty() {
                        assert_eq!(r.degree(), 1);
                    }
                }
            }
        }
    }
    for i in 0..=2 {
        for j in 0..=2 {
            for a in forests(i) {
                for b in forests(j) {
                    let joint = ck.coproduct(&a.union(&b));
                    let split = ck.coproduct(&a).bilinear(&ck.coproduct(&b), |(a1, a2), (b1, b2)| {
                        LinComb::basis((a1.union(b1), a2.union(b2)))
                    });
                    assert_eq!(joint, split);
                }
            }
        }
    }
}

#[test]
fn duality_with_grossman_larson() {
    let r = pairing_gl_ck(4).unwrap();
    assert!(r.ok(), "{r}");
    assert!(r.checks.iter().any(|c| c.id == "normalization" && c.detail.contains("Aut")));
}

#[test]
fn unshuffle_is_cocommutative_on_forests() {
    let w = f("{[], [], [[]]}");
    let d = unshuffle(&w);
    assert_eq!(d.coeff(&(f("{[]}"), f("{[], [[]]}"))), int(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn prelie_identity_on_random_labeled_trees(a in 0usize..14, b in 0usize..14, c in 0usize..14) {
        let trees = labeled_trees(2, &[1, 2, 3]);
        let p = FreePreLie::<u32>::new();
        let (x, y, z) = (&trees[a % trees.len()], &trees[b % trees.len()], &trees[c % trees.len()]);
        prop_assert!(check_prelie_identity(&p, &[x.clone(), y.clone(), z.clone()]).ok());
    }
}
