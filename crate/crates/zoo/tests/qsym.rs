use std::collections::BTreeMap;

use cha_core::hopf::product_of;
use cha_core::scalar::int;
use cha_core::{Coalgebra, LinComb};
use cha_dipt_dend::idempotent::primitive_dimension;
use cha_zoo::qsym::*;
use proptest::prelude::*;

const VARIABLES: usize = 6;

type Poly = BTreeMap<Vec<usize>, i64>;

/// M_C(ξ_1, …, ξ_6) as an honest polynomial.
fn monomial_quasisymmetric(c: &[usize]) -> Poly {
    fn go(c: &[usize], from: usize, exps: &mut Vec<usize>, out: &mut Poly) {
        let Some((&first, rest)) = c.split_first() else {
            *out.entry(exps.clone()).or_default() += 1;
            return;
        };
        for i in from..VARIABLES {
            exps[i] = first;
            go(rest, i + 1, exps, out);
            exps[i] = 0;
        }
    }
    let mut out = Poly::new();
    go(c, 0, &mut vec![0; VARIABLES], &mut out);
    out
}

fn multiply(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Reads off the M-expansion from the leading-variable monomials.
fn expand(p: &Poly) -> LinComb<QsymKey> {
    p.iter()
        .filter(|(e, _)| {
            let len = e.iter().take_while(|&&x| x > 0).count();
            e[len..].iter().all(|&x| x == 0)
        })
        .map(|(e, c)| (QsymKey::new(e.iter().copied().filter(|&x| x > 0).collect()).unwrap(), int(*c)))
        .collect()
}

fn b(k: &QsymKey) -> QsymElement {
    LinComb::basis(k.clone())
}

fn keys_up_to(n: usize) -> Vec<QsymKey> {
    (0..=n).flat_map(compositions).collect()
}

fn composition() -> impl Strategy<Value = QsymKey> {
    prop::collection::vec(1usize..=3, 0..=3).prop_map(|v| QsymKey::new(v).unwrap())
}

#[test]
fn product_matches_polynomials_exhaustively() {
    for x in keys_up_to(3) {
        for y in keys_up_to(3) {
            let poly = multiply(&monomial_quasisymmetric(x.parts()), &monomial_quasisymmetric(y.parts()));
            assert_eq!(qsym_product(&b(&x), &b(&y)), expand(&poly), "{x} * {y}");
        }
    }
}

#[test]
fn commutative_and_associative_through_degree_five() {
    let keys = keys_up_to(5);
    for x in &keys {
        for y in &keys {
            if x.degree() + y.degree() > 5 {
                continue;
            }
            let xy = qsym_product(&b(x), &b(y));
            assert_eq!(xy, qsym_product(&b(y), &b(x)));
            for z in &keys {
                if x.degree() + y.degree() + z.degree() > 5 {
                    continue;
                }
                assert_eq!(qsym_product(&xy, &b(z)), qsym_product(&b(x), &qsym_product(&b(y), &b(z))));
            }
        }
    }
}

#[test]
fn hopf_through_degree_four() {
    let keys = keys_up_to(4);
    for x in &keys {
        for y in &keys {
            if x.degree() + y.degree() > 4 {
                continue;
            }
            let left = product_of(&Qsym, &b(x), &b(y)).map_linear(qsym_coproduct);
            let right = qsym_coproduct(x).bilinear(&qsym_coproduct(y), |(a, c), (d, e)| {
                qsym_product(&b(a), &b(d)).tensor(&qsym_product(&b(c), &b(e)))
            });
            assert_eq!(left, right, "{x} {y}");
        }
    }
    let dims: Vec<usize> = (1..=4).map(|n| primitive_dimension(&Qsym, &compositions(n))).collect();
    assert_eq!(dims, vec![1, 1, 1, 1]);
    assert_eq!(compositions(4).len(), 8);
}

#[test]
fn multibrace_table() {
    for n in 2..=4 {
        let r = qsym_mb_check(n);
        assert!(r.ok(), "{r}");
    }
    let mb = cha_multibrace::product_to_mb(&qsym_tensor_product(4, 4));
    assert_eq!(mb.m(&[1], &[2]), LinComb::basis(3));
    assert!(mb.m(&[1], &[1, 1]).is_zero());
    assert!(mb.m(&[1, 1], &[1]).is_zero());
}

#[test]
fn tridendriform_relations() {
    let r = qsym_ctd_check(6).unwrap();
    assert!(r.ok(), "{r}");
    assert_eq!(r.checks.len(), 4);
}

#[test]
fn tridendriform_split_is_the_product() {
    let nonempty: Vec<QsymKey> = (1..=3).flat_map(compositions).collect();
    for x in &nonempty {
        for y in &nonempty {
            let (prec, succ, dot) = ctd_split(x, y).unwrap();
            assert_eq!(prec.clone() + succ.clone() + dot.clone(), qsym_product(&b(x), &b(y)));
            let (prec_rev, succ_rev, dot_rev) = ctd_split(y, x).unwrap();
            assert_eq!(prec, succ_rev);
            assert_eq!(succ, prec_rev);
            assert_eq!(dot, dot_rev);
        }
    }
}

proptest! {
    #[test]
    fn product_matches_polynomials(x in composition(), y in composition()) {
        prop_assume!(x.parts().len() + y.parts().len() <= VARIABLES);
        let poly = multiply(&monomial_quasisymmetric(x.parts()), &monomial_quasisymmetric(y.parts()));
        prop_assert_eq!(qsym_product(&b(&x), &b(&y)), expand(&poly));
    }

    #[test]
    fn text_round_trip(x in composition()) {
        prop_assert_eq!(QsymKey::parse(&x.to_string()).unwrap(), x.clone());
        prop_assert_eq!(Qsym.coproduct(&x).len(), x.parts().len() + 1);
    }
}
