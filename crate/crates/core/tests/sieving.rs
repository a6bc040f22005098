use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

use flamingo::sieving::*;
use flamingo::tableaux::*;
use flamingo::webs::*;

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

/// `p(e^{2πi·k/n})` in floating point, for comparison with exact evaluation.
fn complex_value(p: &QPolynomial, n: usize, k: usize) -> (f64, f64) {
    let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    for (j, c) in p.coeffs().iter().enumerate() {
        let c: f64 = c.to_string().parse().unwrap();
        re += c * (theta * j as f64).cos();
        im += c * (theta * j as f64).sin();
    }
    (re, im)
}

/// Gaussian binomials from the q-Pascal recurrence.
fn pascal(n: usize, k: usize) -> QPolynomial {
    if k == 0 || k == n {
        return QPolynomial::one();
    }
    if k > n {
        return QPolynomial::zero();
    }
    pascal(n - 1, k - 1).add(&pascal(n - 1, k).shifted(k))
}

fn shapes(max_n: usize) -> Vec<(usize, usize)> {
    (3..=max_n).flat_map(|n| (1..=n / 3).map(move |d| (n, d))).collect()
}

#[test]
fn q_integers_and_factorials() {
    assert_eq!(q_int(3), QPolynomial::from_i64(&[1, 1, 1]));
    assert_eq!(q_int(0), QPolynomial::zero());
    assert_eq!(q_factorial(3), QPolynomial::from_i64(&[1, 2, 2, 1]));
    assert_eq!(q_factorial(5).eval_i64(1), int(120));
    assert_eq!(format!("{}", QPolynomial::from_i64(&[1, -2, 0, 3])), "3q^3 - 2q + 1");
}

#[test]
fn q_binomial_values() {
    let b = q_binomial(10, 4);
    assert_eq!(b, pascal(10, 4));
    assert_eq!(b.eval_i64(1), int(210));
    assert_eq!(b.eval_i64(-1), int(10));
    assert_eq!(q_binomial(3, 5), QPolynomial::zero());
}

#[test]
fn division_is_checked() {
    let p = QPolynomial::from_i64(&[1, 0, 1]);
    assert!(p.div_exact(&q_int(2)).is_err());
    assert!(p.div_exact(&QPolynomial::zero()).is_err());
    assert_eq!(q_int(6).div_exact(&q_int(2)).unwrap(), QPolynomial::from_i64(&[1, 0, 1, 0, 1]));
}

#[test]
fn cyclotomic_polynomials() {
    assert_eq!(cyclotomic(1), QPolynomial::from_i64(&[-1, 1]));
    assert_eq!(cyclotomic(2), QPolynomial::from_i64(&[1, 1]));
    assert_eq!(cyclotomic(6), QPolynomial::from_i64(&[1, -1, 1]));
    assert_eq!(cyclotomic(12), QPolynomial::from_i64(&[1, 0, -1, 0, 1]));
    for m in 1..=24 {
        let product = (1..=m).filter(|e| m % e == 0).fold(QPolynomial::one(), |acc, e| acc.mul(&cyclotomic(e)));
        assert_eq!(product, QPolynomial::monomial(m).sub(&QPolynomial::one()), "m = {m}");
    }
}

#[test]
fn fake_degree_at_ten_three() {
    assert_eq!(fake_degree(10, 3).unwrap(), q_binomial(10, 4).shifted(12));
    assert_eq!(shift_exponent(&FlamingoShape::sl3(10, 3).unwrap()), 12);
}

#[test]
fn fake_degree_specializes_to_the_hook_length_formula() {
    for (n, d) in shapes(12) {
        let x = fake_degree(n, d).unwrap();
        let count: BigInt = count_syt(&FlamingoShape::sl3(n, d).unwrap()).into();
        assert_eq!(x.eval_i64(1), count, "({n},{d})");
        // The lowest power is the shift `b(λ)`.
        assert_eq!(x.valuation(), Some(shift_exponent(&FlamingoShape::sl3(n, d).unwrap())));
    }
}

#[test]
fn roots_of_unity_at_ten_three() {
    let x = fake_degree(10, 3).unwrap();
    assert_eq!(eval_at_root(&x, 10, 5).unwrap(), int(10));
    assert_eq!(eval_at_root(&x, 10, 10).unwrap(), int(210));
    assert_eq!(eval_at_root(&x, 10, 2).unwrap(), int(0));
    assert!(eval_at_root(&QPolynomial::monomial(1), 3, 1).is_err());
    let v = CyclotomicValue::of(&QPolynomial::monomial(1), 3);
    assert_eq!(v.m(), 3);
    assert_eq!(v.as_integer(), None);
}

#[test]
fn exact_evaluation_matches_floating_point() {
    for (n, d) in shapes(12) {
        let x = fake_degree(n, d).unwrap();
        for i in 1..=n {
            let exact = eval_at_root(&x, n, i).unwrap();
            let (re, im) = complex_value(&x, n, i);
            let exact: f64 = exact.to_string().parse().unwrap();
            assert!((re - exact).abs() < 1e-6 && im.abs() < 1e-6, "({n},{d}) i={i}: {re}+{im}i vs {exact}");
        }
    }
}

#[test]
fn csp_small_cases() {
    let r = verify_csp(3, 1).unwrap();
    assert!(r.passed());
    assert_eq!(r.fixed_vector(), vec![1, 1, 1]);
    assert!(r.rows.iter().all(|row| row.value == int(1)));
    assert!(verify_csp(6, 2).unwrap().passed());
}

#[test]
fn csp_at_nine_three_is_strict() {
    let r = verify_csp(9, 3).unwrap();
    assert!(r.strict());
    assert!(r.passed(), "{}", r.to_text());
    assert!(r.rows.iter().all(|row| row.value == BigInt::from(row.fixed)));
}

#[test]
fn csp_at_ten_three() {
    let r = verify_csp(10, 3).unwrap();
    assert!(!r.strict());
    assert!(r.passed(), "{}", r.to_text());
    assert_eq!(r.total, 210);
    assert_eq!(r.fixed_vector(), vec![0, 0, 0, 0, 10, 0, 0, 0, 0, 210]);
    assert_eq!(r.first_failure(), None);
    let json = r.to_json();
    assert_eq!(json["rows"][4]["value"], 10);
    assert!(r.to_text().contains("   5    2       10         10  pass"));
}

#[test]
fn csp_up_to_ten() {
    for (n, d) in shapes(10) {
        let r = verify_csp(n, d).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert!(r.burnside);
        if n % 2 == 1 {
            assert!(r.strict(), "({n},{d})");
        }
    }
    // Even n carries signs: AW(4, 1) is fixed by every rotation, but X(ζ) = -1.
    let r = verify_csp(4, 1).unwrap();
    assert_eq!(r.fixed_vector(), vec![1, 1, 1, 1]);
    assert_eq!(r.rows[0].value, int(-1));
    assert!(!r.strict());
}

#[test]
fn orbit_census_at_ten_three() {
    let webs = enumerate_aw(10, 3).unwrap();
    let mut sizes: Vec<usize> = rotation_orbits(&webs).iter().map(|o| o.len()).collect();
    sizes.sort_unstable();
    let mut expected = vec![5, 5];
    expected.extend(std::iter::repeat_n(10, 20));
    assert_eq!(sizes, expected);
}

#[test]
fn rotation_cases_are_exclusive() {
    assert_eq!(rotation_cases(3, 1, 1), vec![RotationCase::DividesDMinusOne]);
    assert_eq!(rotation_cases(6, 1, 2), vec![RotationCase::DividesDMinusOne]);
    assert_eq!(rotation_cases(6, 2, 2), vec![RotationCase::ThreeDividesDPlusOne]);
    assert_eq!(rotation_cases(10, 3, 5), vec![RotationCase::DividesDMinusOne]);
    assert!(rotation_cases(10, 3, 3).is_empty());
    assert_eq!(predicted_rotation_sign(10, 3, 5, RotationCase::DividesDMinusOne), -1);
}

#[test]
fn rotation_signs_up_to_ten() {
    for (n, d) in shapes(10) {
        let r = rotation_sign_check(n, d).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        // One row per web fixed by a proper divisor rotation, counted by the fake degree.
        let x = fake_degree(n, d).unwrap();
        let fixed: BigInt = (1..n).filter(|i| n % i == 0).map(|i| eval_at_root(&x, n, i).unwrap().abs()).sum();
        assert_eq!(BigInt::from(r.rows.len()), fixed, "({n},{d})");
    }
    let tripod = rotation_sign_check(3, 1).unwrap();
    assert_eq!(tripod.rows.len(), 1);
    assert_eq!(tripod.rows[0].actual, 1);
}

proptest! {
    #[test]
    fn exact_evaluation_agrees_when_defined(coeffs in proptest::collection::vec(-5i64..6, 0..14), n in 1usize..13, i in 1usize..13) {
        let p = QPolynomial::from_i64(&coeffs);
        let (re, im) = complex_value(&p, n, i);
        match eval_at_root(&p, n, i) {
            Ok(v) => {
                let v: f64 = v.to_string().parse().unwrap();
                prop_assert!((re - v).abs() < 1e-6 && im.abs() < 1e-6);
            }
            // A non-constant residue: the value is not an integer, or not real.
            Err(_) => prop_assert!(im.abs() > 1e-6 || (re - re.round()).abs() > 1e-6),
        }
    }

    #[test]
    fn q_pascal_recurrence(n in 1usize..14, k in 0usize..14) {
        prop_assume!(k <= n);
        prop_assert_eq!(q_binomial(n, k), pascal(n, k));
        prop_assert_eq!(q_binomial(n, k).coeffs().iter().rev().cloned().collect::<Vec<_>>(), q_binomial(n, k).coeffs().to_vec());
    }
}
