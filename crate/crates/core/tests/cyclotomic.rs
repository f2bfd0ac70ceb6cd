use habiro::cyclotomic::{
    arrow_witness, arrow_witness_default, c_value, congruence_check, connected_components,
    cyclotomic_coprimality, divisors, euler_phi, is_adjacent, phi, pochhammer, AdjacencyGraph, CValue,
    Coprimality, RingDescriptor,
};
use habiro::polyring::poly_mod_prime;
use habiro::{Error, IntPolynomial};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Totient by counting, independent of factorization.
fn totient_by_count(n: u64) -> u64 {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u64
}

/// `Some(p)` if `r` is a positive power of the prime `p`.
fn prime_power_base(r: u64) -> Option<u64> {
    if r < 2 {
        return None;
    }
    let p = (2..=r).find(|d| r % d == 0)?;
    let mut x = r;
    while x % p == 0 {
        x /= p;
    }
    (x == 1).then_some(p)
}

fn ratio_prime(m: u64, n: u64) -> Option<u64> {
    let (lo, hi) = if m < n { (m, n) } else { (n, m) };
    if hi % lo == 0 {
        prime_power_base(hi / lo)
    } else {
        None
    }
}

fn q_pow_minus_one(n: usize) -> IntPolynomial {
    IntPolynomial::monomial(BigInt::one(), n) - IntPolynomial::one()
}

#[test]
fn product_law_and_degrees() {
    for n in 1..=200u64 {
        let prod = divisors(n).into_iter().fold(IntPolynomial::one(), |acc, d| &acc * &*phi(d));
        assert_eq!(prod, q_pow_minus_one(n as usize), "n = {n}");
        assert_eq!(phi(n).degree().finite(), Some(totient_by_count(n) as usize));
        assert_eq!(euler_phi(n), totient_by_count(n));
    }
}

#[test]
fn small_cyclotomic_values() {
    assert_eq!(*phi(1), IntPolynomial::from_i64s(&[-1, 1]));
    assert_eq!(*phi(2), IntPolynomial::from_i64s(&[1, 1]));
    assert_eq!(*phi(12), IntPolynomial::from_i64s(&[1, 0, -1, 0, 1]));
    // first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
    assert!(phi(105).coeffs().iter().any(|c| *c == BigInt::from(-2)));
}

#[test]
fn pochhammer_recurrence() {
    let mut direct = IntPolynomial::one();
    assert_eq!(pochhammer(0), direct);
    for n in 1..=40u64 {
        direct = &direct * &(IntPolynomial::one() - IntPolynomial::monomial(BigInt::one(), n as usize));
        assert_eq!(pochhammer(n), &pochhammer(n - 1) * &(IntPolynomial::one() - IntPolynomial::monomial(BigInt::one(), n as usize)));
        assert_eq!(pochhammer(n), direct);
    }
}

#[test]
fn c_values() {
    for m in 1..=100u64 {
        assert_eq!(c_value(m, m), CValue::Zero);
        for n in 1..=100u64 {
            let c = c_value(m, n);
            assert_eq!(c, c_value(n, m));
            if m != n {
                let expect = ratio_prime(m, n).map_or(CValue::One, CValue::Prime);
                assert_eq!(c, expect, "({m}, {n})");
            }
        }
    }
}

#[test]
fn adjacency_over_z_and_q() {
    let (z, q) = (RingDescriptor::integers(), RingDescriptor::rationals());
    for m in 1..=100u64 {
        for n in 1..=100u64 {
            assert_eq!(is_adjacent(&z, m, n), m == n || ratio_prime(m, n).is_some());
            assert_eq!(is_adjacent(&q, m, n), m == n);
        }
    }
}

#[test]
fn adjacency_is_c_adic_separatedness() {
    let descs = [
        RingDescriptor::integers(),
        RingDescriptor::rationals(),
        RingDescriptor::localized(2).unwrap(),
        RingDescriptor::localized(6).unwrap(),
        RingDescriptor::zero_ring(),
    ];
    for d in &descs {
        for m in 1..=40u64 {
            for n in 1..=40u64 {
                let expect = m == n || d.is_c_adically_separated(c_value(m, n));
                assert_eq!(is_adjacent(d, m, n), expect, "{} ({m}, {n})", d.name());
            }
        }
    }
}

#[test]
fn graph_components() {
    let all: Vec<u64> = (1..=30).collect();
    assert_eq!(connected_components(&RingDescriptor::integers(), &all).unwrap().len(), 1);
    assert_eq!(connected_components(&RingDescriptor::rationals(), &all).unwrap().len(), 30);
    assert_eq!(connected_components(&RingDescriptor::zero_ring(), &all).unwrap().len(), 1);
    let half = RingDescriptor::localized(2).unwrap();
    assert!(!is_adjacent(&half, 1, 2));
    assert!(is_adjacent(&half, 1, 3));
    assert_eq!(
        connected_components(&half, &[1, 2, 4, 8, 3]).unwrap(),
        vec![vec![1, 3], vec![2], vec![4], vec![8]]
    );
    let g = AdjacencyGraph::new(RingDescriptor::integers(), [1, 2, 6]).unwrap();
    assert!(g.is_connected());
    assert_eq!(AdjacencyGraph::new(RingDescriptor::integers(), []).err(), Some(Error::EmptySet));
    assert!("Z1/6".parse::<RingDescriptor>().is_ok());
    assert!("R".parse::<RingDescriptor>().is_err());
}

#[test]
fn congruence_lemma() {
    for p in [2u64, 3, 5, 7] {
        let mut e = 1u32;
        while p.pow(e) <= 400 {
            for n in 1..=400 / p.pow(e) {
                let r = congruence_check(n, p, e).unwrap();
                let expect = if n % p == 0 { p.pow(e) } else { (p - 1) * p.pow(e - 1) };
                assert_eq!(r.d, expect);
                assert!(r.holds, "({n}, {p}, {e})");
                // independent check in F_p[q]
                let lhs = poly_mod_prime(&phi(p.pow(e) * n), p).unwrap();
                let rhs = poly_mod_prime(&phi(n), p).unwrap().pow(expect);
                assert_eq!(lhs, rhs);
            }
            e += 1;
        }
    }
    assert!(congruence_check(3, 4, 1).is_err());
}

#[test]
fn coprimality_dichotomy() {
    for n in 2..=60u64 {
        for m in 1..n {
            match cyclotomic_coprimality(m, n).unwrap() {
                Coprimality::Unit { u, v } => {
                    assert_eq!(c_value(m, n), CValue::One);
                    assert_eq!(&(&u * &*phi(m)) + &(&v * &*phi(n)), IntPolynomial::one());
                }
                Coprimality::CommonPrime { p, resultant, exponent } => {
                    assert_eq!(c_value(m, n), CValue::Prime(p));
                    assert!(exponent >= 1);
                    assert_eq!(resultant.magnitude(), &num_bigint::BigUint::from(p).pow(exponent));
                }
            }
        }
    }
    assert_eq!(cyclotomic_coprimality(3, 3).err(), Some(Error::EqualIndices(3)));
}

#[test]
fn arrow_witnesses() {
    let two = BigInt::from(2);
    assert_eq!(arrow_witness(&phi(4), &phi(2), &two, 4).unwrap(), Some(1));
    assert_eq!(arrow_witness(&phi(2), &phi(4), &two, 4).unwrap(), Some(2));
    assert_eq!(arrow_witness(&phi(2), &phi(3), &BigInt::zero(), 4).unwrap(), None);
    assert_eq!(arrow_witness(&phi(2), &phi(3), &BigInt::one(), 4).unwrap(), Some(0));
    assert!(matches!(
        arrow_witness(&phi(2), &IntPolynomial::from_i64s(&[1, 2]), &two, 4),
        Err(Error::NonUnitLeadingCoefficient(_))
    ));
    // prime-power ratios always have a witness within the degree bound
    for (m, n) in [(1u64, 2u64), (3, 9), (5, 10), (4, 8), (6, 18)] {
        let p = BigInt::from(ratio_prime(m, n).unwrap());
        assert!(arrow_witness_default(&phi(n), &phi(m), &p).unwrap().is_some(), "({m}, {n})");
        assert!(arrow_witness_default(&phi(m), &phi(n), &p).unwrap().is_some(), "({n}, {m})");
    }
}

#[test]
fn concurrent_cache_reads() {
    let handles: Vec<_> = (0..8u64)
        .map(|t| std::thread::spawn(move || (1..=150u64).map(|n| phi(n + t).len()).sum::<usize>()))
        .collect();
    for h in handles {
        assert!(h.join().unwrap() > 0);
    }
}
