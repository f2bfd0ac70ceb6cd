use habiro::polyring::{poly_mod_prime, subresultant_bezout, Degree, ModPPolynomial};
use habiro::{Error, IntPolynomial, RatPolynomial};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn int_poly(max_len: usize, range: i64) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-range..=range, 0..max_len).prop_map(|cs| IntPolynomial::from_i64s(&cs))
}

fn unit_leading(max_len: usize, range: i64) -> impl Strategy<Value = IntPolynomial> {
    (prop::collection::vec(-range..=range, 0..max_len), prop::bool::ANY).prop_map(|(mut cs, neg)| {
        cs.push(if neg { -1 } else { 1 });
        IntPolynomial::from_i64s(&cs)
    })
}

fn nonconstant(max_len: usize, range: i64) -> impl Strategy<Value = IntPolynomial> {
    (prop::collection::vec(-range..=range, 1..max_len), 1..=range).prop_map(|(mut cs, lead)| {
        cs.push(lead);
        IntPolynomial::from_i64s(&cs)
    })
}

/// Determinant of the Sylvester matrix by fraction-free Gaussian
/// elimination.
fn sylvester_resultant(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (i, c) in a.coeffs().iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (i, c) in b.coeffs().iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        let Some(p) = (k..size).find(|&r| !rows[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            rows.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = &rows[i][j] * &rows[k][k] - &rows[i][k] * &rows[k][j];
                let (quo, rem) = v.div_rem(&prev);
                assert!(rem.is_zero());
                rows[i][j] = quo;
            }
            rows[i][k] = BigInt::zero();
        }
        prev = rows[k][k].clone();
    }
    sign * prev
}

fn is_canonical(f: &IntPolynomial) -> bool {
    f.coeffs().last().map_or(true, |c| !c.is_zero())
}

#[test]
fn sylvester_oracle_matches_known_values() {
    let a = IntPolynomial::from_i64s(&[-1, 1]);
    let b = IntPolynomial::from_i64s(&[1, 1]);
    assert_eq!(sylvester_resultant(&a, &b), BigInt::from(2));
    let c = subresultant_bezout(&a, &b).unwrap();
    assert_eq!(c.resultant, BigInt::from(2));
    assert!(c.verify(&a, &b));
}

#[test]
fn spec_resultant_examples() {
    let phi3 = IntPolynomial::from_i64s(&[1, 1, 1]);
    let c = subresultant_bezout(&phi3, &IntPolynomial::from_i64s(&[-1, 1])).unwrap();
    assert_eq!(c.resultant, BigInt::from(3));
    let (phi4, phi6) = (IntPolynomial::from_i64s(&[1, 0, 1]), IntPolynomial::from_i64s(&[1, -1, 1]));
    let c = subresultant_bezout(&phi4, &phi6).unwrap();
    assert_eq!(c.resultant, BigInt::one());
    assert_eq!(&(&c.u * &phi4) + &(&c.v * &phi6), IntPolynomial::one());
    assert_eq!(subresultant_bezout(&IntPolynomial::zero(), &IntPolynomial::zero()), Err(Error::BothZero));
}

#[test]
fn mod_prime_examples() {
    let r = poly_mod_prime(&IntPolynomial::from_i64s(&[1, 1]), 2).unwrap();
    assert_eq!(r, poly_mod_prime(&IntPolynomial::from_i64s(&[-1, 1]), 2).unwrap());
    let sq = ModPPolynomial::new(2, vec![1, 1]).unwrap().pow(2);
    assert_eq!(poly_mod_prime(&IntPolynomial::from_i64s(&[1, 0, 1]), 2).unwrap(), sq);
    assert!(poly_mod_prime(&IntPolynomial::from_i64s(&[6, 0, 3]), 3).unwrap().is_zero());
    assert_eq!(poly_mod_prime(&IntPolynomial::one(), 4), Err(Error::NotPrime(4)));
}

#[test]
fn serialization_format() {
    let f = IntPolynomial::from_i64s(&[1, 0, 0, -1]);
    assert_eq!(serde_json::to_string(&f).unwrap(), r#"["1","0","0","-1"]"#);
    let back: IntPolynomial = serde_json::from_str(r#"["1","0","0","-1","0"]"#).unwrap();
    assert_eq!(back, f);
    let r = RatPolynomial::from_ratios(&[(1, 2), (-3, 1)]);
    assert_eq!(serde_json::to_string(&r).unwrap(), r#"["1/2","-3"]"#);
    assert_eq!(IntPolynomial::zero().degree(), Degree::NegInfinity);
    assert!(Degree::NegInfinity < Degree::Finite(0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn divmod_reconstructs(a in int_poly(20, 50), g in unit_leading(8, 20)) {
        let (quot, rem) = a.divmod(&g).unwrap();
        prop_assert_eq!(&(&g * &quot) + &rem, a);
        prop_assert!(rem.degree() < g.degree());
        prop_assert!(is_canonical(&quot) && is_canonical(&rem));
    }

    #[test]
    fn rational_divmod_reconstructs(a in int_poly(15, 30), g in nonconstant(6, 9)) {
        let (a, g) = (a.to_rational(), g.to_rational());
        let (quot, rem) = a.divmod(&g).unwrap();
        prop_assert_eq!(&(&g * &quot) + &rem, a);
        prop_assert!(rem.degree() < g.degree());
    }

    #[test]
    fn arithmetic_is_canonical(a in int_poly(12, 5), b in int_poly(12, 5)) {
        prop_assert!(is_canonical(&(&a + &b)));
        prop_assert!(is_canonical(&(&a - &b)));
        prop_assert!(is_canonical(&(&a * &b)));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn mod_prime_is_a_homomorphism(a in int_poly(12, 100), b in int_poly(12, 100), pi in 0usize..5) {
        let p = [2u64, 3, 5, 7, 101][pi];
        let (ra, rb) = (poly_mod_prime(&a, p).unwrap(), poly_mod_prime(&b, p).unwrap());
        prop_assert_eq!(poly_mod_prime(&(&a + &b), p).unwrap(), ra.add(&rb));
        prop_assert_eq!(poly_mod_prime(&(&a - &b), p).unwrap(), ra.sub(&rb));
        prop_assert_eq!(poly_mod_prime(&(&a * &b), p).unwrap(), ra.mul(&rb));
    }

    #[test]
    fn resultant_matches_sylvester(a in nonconstant(7, 6), b in nonconstant(7, 6)) {
        let cert = subresultant_bezout(&a, &b).unwrap();
        prop_assert!(cert.verify(&a, &b));
        prop_assert_eq!(&cert.resultant, &sylvester_resultant(&a, &b));
    }

    #[test]
    fn resultant_with_common_factor_vanishes(a in nonconstant(4, 5), b in nonconstant(4, 5), c in nonconstant(3, 5)) {
        let cert = subresultant_bezout(&(&a * &c), &(&b * &c)).unwrap();
        prop_assert!(cert.resultant.is_zero());
        prop_assert!(cert.verify(&(&a * &c), &(&b * &c)));
    }

    #[test]
    fn divisibility_check(a in int_poly(8, 9), g in nonconstant(4, 4)) {
        let prod = &a * &g;
        prop_assert!(prod.is_divisible_by(&g));
        prop_assert_eq!(prod.exact_quotient(&g), if g.is_zero() { None } else { Some(a) });
    }
}
