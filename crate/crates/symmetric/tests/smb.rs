use cha_core::scalar::int;
use cha_core::{LinComb, SymWord};
use cha_symmetric::smb::{
    check_associative, check_hopf, check_sr_all, check_sr_displayed, smb_to_product, sr111, SmbStructure,
};
use proptest::prelude::*;

fn s(v: &[u32]) -> SymWord<u32> {
    SymWord::new(v.to_vec())
}

/// Multiplication of the monoid (N, +) as M_11.
fn additive(bound: usize) -> SmbStructure<u32> {
    SmbStructure::from_m11(bound, |a, b| LinComb::basis(a + b))
}

#[test]
fn associative_m11_alone_passes() {
    let m = additive(6);
    assert!(check_sr_all(&m, &[1, 2, 4, 8], 4).unwrap().ok());
    assert!(check_associative(&m, &[1, 2, 4, 8], 4).unwrap().ok());
    assert!(check_hopf(&m, &[1, 2, 4], 4).unwrap().ok());
}

#[test]
fn nonassociative_m11_alone_fails_at_degree_three() {
    let m = SmbStructure::from_m11(6, |a: &u32, b: &u32| LinComb::basis(10 * a + b));
    let (left, right) = sr111(&m, &1, &2, &3);
    assert_ne!(left, right);
    let sr = check_sr_all(&m, &[1, 2, 3, 4], 4).unwrap();
    assert!(sr.checks.iter().any(|c| c.id == "SR-1-1-1" && !c.pass));
    let assoc = check_associative(&m, &[1, 2, 3, 4], 4).unwrap();
    assert!(!assoc.checks.iter().find(|c| c.id == "deg-3").unwrap().pass);
    assert!(check_hopf(&m, &[1, 2, 3], 4).unwrap().ok());
}

#[test]
fn m12_correction_restores_relation() {
    // M_11(a;b) = ab in a commutative monoid algebra on powers of two is
    // associative; adding M_12 alone then breaks SR_111.
    let broken = SmbStructure::new(6, |u: &SymWord<u32>, v: &SymWord<u32>| match (u.degree(), v.degree()) {
        (1, 1) => LinComb::basis(u.letters()[0] + v.letters()[0]),
        (1, 2) => LinComb::basis(u.letters()[0]),
        _ => LinComb::zero(),
    });
    assert!(!check_sr_displayed(&broken, &[1, 2, 4, 8]).ok());
    assert!(!check_associative(&broken, &[1, 2, 4], 3).unwrap().ok());
}

#[test]
fn displayed_relations_on_trivial() {
    let m = SmbStructure::<u32>::trivial(6);
    assert!(check_sr_displayed(&m, &[1, 2, 3, 4]).ok());
    let p = smb_to_product(&m, &s(&[1, 2]), &s(&[3])).unwrap();
    assert_eq!(p, LinComb::term(s(&[1, 2, 3]), int(1)));
}

fn table_structure(table: Vec<u32>) -> SmbStructure<u32> {
    SmbStructure::from_m11(6, move |a, b| {
        let v = table[(*a as usize) * 3 + *b as usize];
        if v == 3 {
            LinComb::zero()
        } else {
            LinComb::basis(v)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relations_iff_associative(table in proptest::collection::vec(0u32..4, 9)) {
        let m = table_structure(table);
        let sr = check_sr_all(&m, &[0, 1, 2], 4).unwrap().ok();
        let assoc = check_associative(&m, &[0, 1, 2], 4).unwrap().ok();
        prop_assert_eq!(sr, assoc);
    }

    #[test]
    fn always_hopf_and_unital(table in proptest::collection::vec(0u32..4, 9)) {
        let m = table_structure(table);
        prop_assert!(check_hopf(&m, &[0, 1, 2], 3).unwrap().ok());
    }
}

