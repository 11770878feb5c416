use cha_core::scalar::one;
use cha_core::words::shuffle;
use cha_core::LinComb;
use cha_multibrace::operad::{insert, Tree};
use cha_multibrace::product::{check_associative, check_hopf, check_round_trip, check_unital};
use cha_multibrace::relations::{check_brace_all, check_r, check_r_all, check_rightsided};
use cha_multibrace::{mb_to_product, product_to_mb, BraceStructure, ChaProduct, MbStructure};
use cha_combinatorics::unreduced::Labeled;
use proptest::prelude::*;

fn quasi_shuffle_mb() -> MbStructure<u32> {
    MbStructure::new(6, |u, v| {
        if u.len() == 1 && v.len() == 1 {
            LinComb::basis(u[0] + v[0])
        } else {
            LinComb::zero()
        }
    })
}

// recursive quasi-shuffle, written independently of the block-splitting formula
fn quasi_shuffle(u: &[u32], v: &[u32]) -> LinComb<Vec<u32>> {
    if u.is_empty() || v.is_empty() {
        return LinComb::basis([u, v].concat());
    }
    let prefix = |g: u32, x: LinComb<Vec<u32>>| x.map_keys(|w| [vec![g], w.clone()].concat());
    prefix(u[0], quasi_shuffle(&u[1..], v)) + prefix(v[0], quasi_shuffle(u, &v[1..])) + prefix(u[0] + v[0], quasi_shuffle(&u[1..], &v[1..]))
}

fn free_brace() -> BraceStructure<Tree> {
    BraceStructure::new(6, |x, ys| insert(x, ys))
}

fn leaves(n: u32) -> Vec<Tree> {
    (1..=n).map(Labeled::leaf).collect()
}

fn skewed_mb() -> MbStructure<u32> {
    MbStructure::new(6, |u, v| {
        if u.len() == 1 && v.len() == 1 {
            LinComb::basis(2 * u[0] + v[0])
        } else {
            LinComb::zero()
        }
    })
}

#[test]
fn quasi_shuffle_matches_recursion() {
    for (u, v) in [(vec![1, 2], vec![3]), (vec![1], vec![2, 4]), (vec![1, 1], vec![2, 2])] {
        assert_eq!(mb_to_product(&quasi_shuffle_mb(), &u, &v).unwrap(), quasi_shuffle(&u, &v));
    }
}

#[test]
fn trivial_structure_gives_shuffle() {
    let m = MbStructure::<u32>::trivial(6);
    let got = mb_to_product(&m, &[1, 2], &[3, 4]).unwrap();
    assert_eq!(got, shuffle(&[1, 2], &[3, 4]).map_keys(|w| w.0.clone()));
}

#[test]
fn passing_structures_give_hopf_products() {
    let cases: Vec<(&str, bool)> = vec![
        ("trivial", {
            let m = MbStructure::<u32>::trivial(6);
            let alphabet: Vec<u32> = (1..=3).collect();
            check_r_all(&m, &alphabet, 4).unwrap().ok() && {
                let star = ChaProduct::from_mb(m, alphabet);
                check_associative(&star, 4).ok() && check_hopf(&star, 4).ok() && check_unital(&star, 4).ok()
            }
        }),
        ("quasi-shuffle", {
            let m = quasi_shuffle_mb();
            check_r_all(&m, &[1, 2], 4).unwrap().ok() && {
                let star = ChaProduct::from_mb(m, vec![1, 2]);
                check_associative(&star, 4).ok() && check_hopf(&star, 4).ok()
            }
        }),
        ("free brace", {
            let b = free_brace();
            check_brace_all(&b, &leaves(3), 4).unwrap().ok() && {
                let m = b.into_mb();
                check_r_all(&m, &leaves(3), 4).unwrap().ok() && {
                    let star = ChaProduct::from_mb(m, leaves(3));
                    check_associative(&star, 4).ok() && check_hopf(&star, 4).ok()
                }
            }
        }),
    ];
    for (name, ok) in cases {
        assert!(ok, "{name}");
    }
}

#[test]
fn failing_r111_breaks_associativity_in_degree_three() {
    let m = skewed_mb();
    assert!(!check_r(&m, 1, 1, 1, &[(vec![1], vec![2], vec![4])]).unwrap().ok());
    let star = ChaProduct::from_mb(m, (1..=3).collect());
    let report = check_associative(&star, 3);
    assert!(report.checks.iter().any(|c| c.id == "1-1-1" && !c.pass));
    assert!(report.checks.iter().filter(|c| !c.pass).all(|c| c.id.split('-').map(|d| d.parse::<usize>().unwrap()).sum::<usize>() == 3));
    // reconstruction is still a coalgebra map
    assert!(check_hopf(&star, 4).ok());
}

#[test]
fn free_brace_is_rightsided() {
    let star = ChaProduct::from_mb(free_brace().into_mb(), leaves(3));
    let rs = check_rightsided(&star, 4);
    assert!(rs.is_rightsided() && rs.agree());
    let qs = check_rightsided(&ChaProduct::from_mb(quasi_shuffle_mb(), vec![1, 2]), 4);
    assert!(qs.is_rightsided());
}

#[test]
fn round_trip_of_shuffle() {
    let sh = ChaProduct::shuffle(6, (1..=3).collect());
    assert!(check_round_trip(&sh, 5).ok());
    let m = product_to_mb(&sh);
    assert!(m.m(&[1], &[2, 3]).is_zero());
}

fn arbitrary_mb(salt: u32) -> MbStructure<u32> {
    MbStructure::new(6, move |u, v| {
        let h = u.iter().chain(v).fold(salt, |acc, &g| acc.wrapping_mul(31).wrapping_add(g)) % 7;
        if h == 0 {
            LinComb::zero()
        } else {
            let mut out = LinComb::basis(100 + h);
            out.add_term(200 + u.len() as u32, one());
            out
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extraction_inverts_reconstruction(salt in 0u32..1000, u in prop::collection::vec(1u32..4, 0..4), v in prop::collection::vec(1u32..4, 0..3)) {
        let m = arbitrary_mb(salt);
        let star = ChaProduct::from_mb(m.clone(), vec![1, 2, 3]);
        let back = product_to_mb(&star);
        prop_assert_eq!(back.m(&u, &v), m.m(&u, &v));
    }

    #[test]
    fn reconstruction_is_a_coalgebra_map(salt in 0u32..1000) {
        let star = ChaProduct::from_mb(arbitrary_mb(salt), vec![1, 2]);
        prop_assert!(check_hopf(&star, 4).ok());
        prop_assert!(check_unital(&star, 4).ok());
    }
}
