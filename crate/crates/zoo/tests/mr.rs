use cha_combinatorics::perm::{self, Permutation};
use cha_core::hopf::product_of;
use cha_core::scalar::{int, one};
use cha_core::{Coalgebra, LinComb};
use cha_dipt_dend::context::{prec_lin, succ_lin};
use cha_dipt_dend::idempotent::{is_primitive, primitive_dimension};
use cha_zoo::mr::*;
use proptest::prelude::*;

fn p(s: &str) -> Permutation {
    Permutation::parse(s).unwrap()
}

fn el(terms: &[(&str, i64)]) -> MrElement {
    terms.iter().map(|(s, c)| (p(s), int(*c))).collect()
}

/// Interleavings of σ's word with τ's word shifted by |σ|.
fn interleavings(s: &Permutation, t: &Permutation) -> MrElement {
    fn go(a: &[usize], b: &[usize], cur: &mut Vec<usize>, out: &mut MrElement) {
        if a.is_empty() && b.is_empty() {
            out.add_term(Permutation::new(cur.clone()).unwrap(), one());
            return;
        }
        if let Some((&x, rest)) = a.split_first() {
            cur.push(x);
            go(rest, b, cur, out);
            cur.pop();
        }
        if let Some((&y, rest)) = b.split_first() {
            cur.push(y);
            go(a, rest, cur, out);
            cur.pop();
        }
    }
    let shifted: Vec<usize> = t.word().iter().map(|x| x + s.len()).collect();
    let mut out = LinComb::zero();
    go(s.word(), &shifted, &mut Vec::new(), &mut out);
    out
}

/// σ ∉ S_i × S_{n−i} for every 1 ≤ i < n.
fn irreducible_by_definition(s: &Permutation) -> bool {
    let n = s.len();
    (1..n).all(|i| {
        let mut head: Vec<usize> = s.word()[..i].to_vec();
        head.sort();
        head != (1..=i).collect::<Vec<_>>()
    })
}

fn perms_up_to(n: usize) -> Vec<Permutation> {
    (0..=n).flat_map(perm::enumerate).collect()
}

#[test]
fn displayed_phi_values() {
    assert_eq!(mr_phi(&[p("21")], 4).unwrap(), el(&[("21", 1), ("12", -1)]));
    assert_eq!(mr_phi(&[p("231")], 4).unwrap(), el(&[("231", 1), ("132", -1)]));
    assert_eq!(mr_phi(&[p("312")], 4).unwrap(), el(&[("312", 1), ("213", -1)]));
    assert_eq!(mr_phi(&[p("321")], 4).unwrap(), el(&[("321", 1), ("132", -1), ("213", -1), ("123", 1)]));
}

#[test]
fn displayed_primitives() {
    let mr = MalvenutoReutenauer;
    assert!(is_primitive(&mr, &el(&[("12", 1), ("21", -1)])));
    for x in [
        el(&[("213", 1), ("312", -1)]),
        el(&[("231", 1), ("132", -1)]),
        el(&[("321", 1), ("132", -1), ("213", -1), ("123", 1)]),
    ] {
        assert!(is_primitive(&mr, &x), "{x}");
    }
    let dims: Vec<usize> = (1..=4).map(|n| primitive_dimension(&mr, &perm::enumerate(n))).collect();
    let irreducible: Vec<usize> =
        (1..=4).map(|n| perm::enumerate(n).iter().filter(|s| irreducible_by_definition(s)).count()).collect();
    assert_eq!(dims, irreducible);
    assert_eq!(dims, vec![1, 1, 3, 13]);
}

#[test]
fn product_is_the_shifted_shuffle() {
    for s in perms_up_to(3) {
        for t in perms_up_to(3) {
            assert_eq!(mr_product(&s, &t), interleavings(&s, &t), "{s} * {t}");
        }
    }
}

#[test]
fn hopf_algebra_through_degree_four() {
    let mr = MalvenutoReutenauer;
    let all = perms_up_to(4);
    for s in &all {
        for t in &all {
            if s.len() + t.len() > 4 {
                continue;
            }
            let left = product_of(&mr, &LinComb::basis(s.clone()), &LinComb::basis(t.clone()))
                .map_linear(|k| mr.coproduct(k));
            let right = mr.coproduct(s).bilinear(&mr.coproduct(t), |(a, b), (c, d)| {
                mr_product(a, c).tensor(&mr_product(b, d))
            });
            assert_eq!(left, right, "{s} {t}");
            for r in &all {
                if s.len() + t.len() + r.len() > 4 {
                    continue;
                }
                let (x, y, z) = (LinComb::basis(s.clone()), LinComb::basis(t.clone()), LinComb::basis(r.clone()));
                assert_eq!(product_of(&mr, &product_of(&mr, &x, &y), &z), product_of(&mr, &x, &product_of(&mr, &y, &z)));
            }
        }
        let d = mr.coproduct(s);
        let left: LinComb<(Permutation, Permutation, Permutation)> =
            d.map_linear(|(a, b)| mr.coproduct(a).map_keys(|(x, y)| (x.clone(), y.clone(), b.clone())));
        let right = d.map_linear(|(a, b)| mr.coproduct(b).map_keys(|(x, y)| (a.clone(), x.clone(), y.clone())));
        assert_eq!(left, right, "coassociativity on {s}");
    }
}

#[test]
fn dendriform_relations_through_degree_four() {
    let mr = MalvenutoReutenauer;
    let nonempty: Vec<Permutation> = (1..=2).flat_map(perm::enumerate).collect();
    for a in &nonempty {
        for b in &nonempty {
            for c in &nonempty {
                if a.len() + b.len() + c.len() > 4 {
                    continue;
                }
                let (x, y, z) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()), LinComb::basis(c.clone()));
                let yz = product_of(&mr, &y, &z);
                let xy = product_of(&mr, &x, &y);
                let prec = |u: &MrElement, v: &MrElement| prec_lin(&mr, u, v).unwrap();
                let succ = |u: &MrElement, v: &MrElement| succ_lin(&mr, u, v).unwrap();
                assert_eq!(prec(&prec(&x, &y), &z), prec(&x, &yz));
                assert_eq!(prec(&succ(&x, &y), &z), succ(&x, &prec(&y, &z)));
                assert_eq!(succ(&xy, &z), succ(&x, &succ(&y, &z)));
            }
        }
    }
}

#[test]
fn half_shuffles_split_the_product() {
    for s in (1..=3).flat_map(perm::enumerate) {
        for t in (1..=3).flat_map(perm::enumerate) {
            let (succ, prec) = mr_half_shuffles(&s, &t).unwrap();
            assert_eq!(succ + prec, mr_product(&s, &t));
        }
    }
}

#[test]
fn charts_are_bijective_coalgebra_maps() {
    for chart in [Chart::Phi, Chart::Theta] {
        let c = MrChart::new(chart, 4);
        let ranks: Vec<usize> = (1..=4).map(|n| c.rank(n).unwrap()).collect();
        assert_eq!(ranks, vec![1, 2, 6, 24]);
        for w in (1..=4).flat_map(irreducible_words) {
            assert!(c.is_coalgebra_map_on(&w).unwrap(), "{chart} on {w:?}");
            let image = c.image(&w).unwrap();
            assert_eq!(c.preimage(&image).unwrap(), LinComb::basis(w.clone()));
        }
    }
}

#[test]
fn dendriform_idempotent_on_irreducibles() {
    for s in (1..=4).flat_map(perm::irreducibles) {
        let e = mr_e(&LinComb::basis(s.clone()), 4).unwrap();
        assert!(is_primitive(&MalvenutoReutenauer, &e));
        assert_eq!(e.coeff(&s), one());
        assert_eq!(mr_e(&e, 4).unwrap(), e);
    }
    assert_eq!(mr_e(&LinComb::basis(p("231")), 4).unwrap(), el(&[("231", 1), ("132", -1), ("312", -1), ("213", 1)]));
}

#[test]
fn extracted_structures() {
    let r = mr_extract_structures(4).unwrap();
    let status = |id: &str| r.checks.iter().find(|c| c.id.ends_with(id)).unwrap_or_else(|| panic!("{id} missing")).pass;
    for id in [
        "phi-bijective",
        "theta-bijective",
        "phi-coalgebra-map",
        "theta-coalgebra-map",
        "phi-R211",
        "theta-R112",
        "phi-round-trip",
        "theta-round-trip",
        "theta-right-sided",
        "agree-deg-1",
        "agree-deg-2",
        "differ-deg-4",
    ] {
        assert!(status(id), "{id}: {r}");
    }
    let higher = r.checks.iter().find(|c| c.id == "phi-higher-operations").unwrap();
    assert!(higher.detail.starts_with("nonzero"), "{}", higher.detail);
    let deg3 = r.checks.iter().find(|c| c.id == "agree-deg-3").unwrap();
    assert!(!deg3.pass);
    assert!(deg3.detail.contains("phi - theta on 1|21 = 213 - 312"), "{}", deg3.detail);
}

proptest! {
    #[test]
    fn product_size_and_unit(a in 0usize..24, b in 0usize..6) {
        let s = &perm::enumerate(4)[a];
        let t = &perm::enumerate(3)[b];
        let prod = mr_product(s, t);
        prop_assert_eq!(prod.len(), 35);
        prop_assert!(prod.iter().all(|(_, c)| *c == one()));
        prop_assert_eq!(mr_product(&Permutation::default(), s), LinComb::basis(s.clone()));
        prop_assert_eq!(mr_product(s, &Permutation::default()), LinComb::basis(s.clone()));
    }
}
