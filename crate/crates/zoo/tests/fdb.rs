use cha_core::scalar::{factorial, int, zero};
use cha_core::{LinComb, Scalar};
use cha_zoo::fdb::*;
use proptest::prelude::*;

fn m(s: &str) -> FdbMonomial {
    parse_monomial(s).unwrap()
}

fn stirling2(n: usize, k: usize) -> i64 {
    let mut table = vec![vec![0i64; n + 1]; n + 1];
    table[0][0] = 1;
    for i in 1..=n {
        for j in 1..=i {
            table[i][j] = j as i64 * table[i - 1][j] + table[i - 1][j - 1];
        }
    }
    table[n][k]
}

/// Truncated power series in t with rational coefficients.
fn series_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let n = a.len();
    let mut out = vec![zero(); n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

/// n!·[t^n] f(g(t)) for f = Σ c_k t^k/k!, g = Σ b_k t^k/k!.
fn composed_coefficient(b: &[i64], c: &[i64], n: usize) -> Scalar {
    let len = n + 1;
    let g: Vec<Scalar> =
        (0..len).map(|k| if k == 0 { zero() } else { int(b[k - 1]) / Scalar::from_integer(factorial(k)) }).collect();
    let mut power = vec![zero(); len];
    power[0] = int(1);
    let mut total = vec![zero(); len];
    for k in 1..len {
        power = series_mul(&power, &g);
        let ck = int(c[k - 1]) / Scalar::from_integer(factorial(k));
        for i in 0..len {
            total[i] += &power[i] * &ck;
        }
    }
    &total[n] * Scalar::from_integer(factorial(n))
}

fn evaluate(x: &FdbMonomial, values: &[i64]) -> Scalar {
    x.letters().iter().map(|&i| int(values[i - 1])).product()
}

#[test]
fn prelie_and_associator() {
    assert_eq!(fdb_prelie(2, 3).unwrap(), LinComb::term(5, int(-2)));
    assert_eq!(fdb_bracket(2, 3).unwrap(), LinComb::term(5, int(1)));
    for p in 1..=7 {
        for q in 1..=(8 - p) {
            for r in 1..=(9 - p - q) {
                assert_eq!(fdb_associator(p, q, r).unwrap(), LinComb::term(p + q + r, int((p * p) as i64)));
            }
        }
    }
    assert!(fdb_prelie(0, 1).is_err());
    let report = check_fdb_prelie(9);
    assert!(report.ok(), "{report}");
}

#[test]
fn low_coproducts() {
    assert_eq!(format_pairs(&fdb_coproduct(1).unwrap()), "a1 (x) a1");
    let expected: LinComb<_> = [((m("a2"), m("a1")), int(1)), ((m("a1^2"), m("a2")), int(1))].into_iter().collect();
    assert_eq!(fdb_coproduct(2).unwrap(), expected);
    let d3 = fdb_coproduct(3).unwrap();
    assert_eq!(d3.coeff(&(m("a1*a2"), m("a2"))), int(3));
    assert!(fdb_coproduct(0).is_err());
}

#[test]
fn coefficients_sum_to_stirling_numbers() {
    for n in 1..=7 {
        let d = fdb_coproduct(n).unwrap();
        for k in 1..=n {
            let total: Scalar = d.iter().filter(|((_, b), _)| b == &FdbMonomial::letter(k)).map(|(_, c)| c.clone()).sum();
            assert_eq!(total, int(stirling2(n, k)), "n={n} k={k}");
        }
    }
}

#[test]
fn coassociative_with_linear_second_legs() {
    let report = check_fdb_coproduct(6).unwrap();
    assert!(report.ok(), "{report}");
    assert_eq!(monomials(5).len(), 7);
}

#[test]
fn cross_check_under_the_inverse_factorial_convention() {
    let report = fdb_cross_check(3).unwrap();
    let status: Vec<bool> = report.checks.iter().filter(|c| c.id.starts_with("weight-")).map(|c| c.pass).collect();
    assert_eq!(status, vec![true, false, false]);
    let d3 = dual_coproduct_detail(&report, "weight-2");
    assert!(d3.ends_with("1 (x) a3 - 2/3*a2 (x) a2 + a3 (x) 1; displayed: 1 (x) a3 + 3*a2 (x) a2 + a3 (x) 1"), "{d3}");
}

fn dual_coproduct_detail(report: &cha_core::Report, id: &str) -> String {
    report.checks.iter().find(|c| c.id == id).unwrap().detail.clone()
}

#[test]
fn cross_check_under_the_shifted_convention() {
    let report = fdb_cross_check_shifted(4).unwrap();
    assert!(report.ok(), "{report}");
}

#[test]
fn symmetric_braces() {
    let report = check_fdb_braces(4).unwrap();
    assert!(report.ok(), "{report}");
}

proptest! {
    /// Δ(a_n) evaluated at (b, c) is the n-th Taylor coefficient of f∘g.
    #[test]
    fn coproduct_is_series_composition(
        n in 1usize..=6,
        b in prop::collection::vec(-3i64..=3, 6),
        c in prop::collection::vec(-3i64..=3, 6),
    ) {
        let d = fdb_coproduct(n).unwrap();
        let value: Scalar = d.iter().map(|((x, y), coeff)| coeff * evaluate(x, &b) * evaluate(y, &c)).sum();
        prop_assert_eq!(value, composed_coefficient(&b, &c, n));
    }

    #[test]
    fn monomial_text_round_trip(parts in prop::collection::vec(1usize..=4, 0..=4)) {
        let x = FdbMonomial::new(parts);
        prop_assert_eq!(parse_monomial(&format_monomial(&x)).unwrap(), x);
    }
}
