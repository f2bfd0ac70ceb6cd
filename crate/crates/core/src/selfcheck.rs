//! The invariant suite behind `cyclo selfcheck`.
//!
//! Each check is exact and self-contained; sizes follow the documented
//! acceptance ranges.

use num_bigint::BigInt;
use num_traits::One;

use crate::completion::{
    alternating_unit, check_q_inverse, from_digits, reduce, series_realize, to_digits, unit_inverse_mod,
    FiltrationChain, SeriesSpec,
};
use crate::cyclotomic::{
    c_value, congruence_check, connected_components, cyclotomic_coprimality, divisors, is_adjacent, phi,
    CValue, Coprimality, RingDescriptor,
};
use crate::error::Result;
use crate::polyring::IntPolynomial;
use crate::qcrt::{integer_witness_search, rho_q_kernel_witness};
use crate::rootexp::{evaluate_at_root, ohtsuki_series, ohtsuki_series_termwise, taylor_at_root, CyclotomicInteger};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Small deterministic generator so the suite needs no RNG dependency.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn poly(&mut self, len: usize, range: i64) -> IntPolynomial {
        IntPolynomial::new(
            (0..len)
                .map(|_| BigInt::from((self.next() % (2 * range as u64 + 1)) as i64 - range))
                .collect(),
        )
    }
}

fn q_inverse() -> Result<(bool, String)> {
    for n in 0..=30 {
        if !check_q_inverse(n)? {
            return Ok((false, format!("fails at level {n}")));
        }
    }
    Ok((true, "levels 0..=30".into()))
}

fn product_law() -> Result<(bool, String)> {
    for n in 1..=200u64 {
        let prod = divisors(n).into_iter().fold(IntPolynomial::one(), |acc, d| &acc * &*phi(d));
        let target = IntPolynomial::monomial(BigInt::one(), n as usize) - IntPolynomial::one();
        if prod != target {
            return Ok((false, format!("fails at n = {n}")));
        }
    }
    Ok((true, "n <= 200".into()))
}

fn congruences() -> Result<(bool, String)> {
    let mut count = 0;
    for p in [2u64, 3, 5, 7] {
        for e in 1u32.. {
            let pe = p.pow(e);
            if pe > 400 {
                break;
            }
            for n in 1..=400 / pe {
                let r = congruence_check(n, p, e)?;
                if !r.holds || !r.closed_form_matches() {
                    return Ok((false, format!("fails at (n, p, e) = ({n}, {p}, {e})")));
                }
                count += 1;
            }
        }
    }
    Ok((true, format!("{count} triples")))
}

fn coprimality() -> Result<(bool, String)> {
    for n in 2..=60u64 {
        for m in 1..n {
            let ok = match (cyclotomic_coprimality(m, n)?, c_value(m, n)) {
                (Coprimality::Unit { u, v }, CValue::One) => {
                    &(&u * &*phi(m)) + &(&v * &*phi(n)) == IntPolynomial::one()
                }
                (Coprimality::CommonPrime { p, .. }, CValue::Prime(q)) => p == q,
                _ => false,
            };
            if !ok {
                return Ok((false, format!("fails at ({m}, {n})")));
            }
        }
    }
    Ok((true, "1 <= m < n <= 60".into()))
}

fn digits() -> Result<(bool, String)> {
    let chain = FiltrationChain::pochhammer();
    let mut rng = SplitMix(0x5eed);
    for _ in 0..100 {
        let len = 1 + (rng.next() % 99) as usize;
        let f = rng.poly(len, 50);
        let a = reduce(&f, &chain, 14)?;
        let d = to_digits(&a)?;
        if from_digits(&d, 14)? != a {
            return Ok((false, format!("round trip fails for {f}")));
        }
    }
    Ok((true, "100 samples at level 14".into()))
}

fn tau_sigma() -> Result<(bool, String)> {
    let chain = FiltrationChain::pochhammer();
    let mut rng = SplitMix(0x7a0);
    for _ in 0..20 {
        let a = reduce(&rng.poly(60, 20), &chain, 12)?;
        for n in 1..=12 {
            if taylor_at_root(&a, n, 0)?.coeffs[0] != evaluate_at_root(&a, n)? {
                return Ok((false, format!("order {n} disagrees")));
            }
        }
    }
    Ok((true, "20 samples, orders 1..=12".into()))
}

fn kz_values() -> Result<(bool, String)> {
    let a = series_realize(&SeriesSpec::kontsevich_zagier(), &FiltrationChain::pochhammer(), 3)?;
    let expect = [
        CyclotomicInteger::from_int(1, 1),
        CyclotomicInteger::from_int(2, 3),
        CyclotomicInteger::from_coeffs(3, vec![5.into(), (-1).into()]),
    ];
    for (n, e) in (1..=3).zip(expect) {
        if evaluate_at_root(&a, n)? != e {
            return Ok((false, format!("order {n}")));
        }
    }
    Ok((true, "(1, 3, 5 - z)".into()))
}

fn ohtsuki() -> Result<(bool, String)> {
    let kz = SeriesSpec::kontsevich_zagier();
    let chain = FiltrationChain::pochhammer();
    let low = taylor_at_root(&series_realize(&kz, &chain, 9)?, 1, 8)?;
    let high = taylor_at_root(&series_realize(&kz, &chain, 15)?, 1, 8)?;
    let termwise = ohtsuki_series_termwise(&kz, 8)?;
    let direct = ohtsuki_series(&kz, 8)?;
    let ok = low.coeffs == high.coeffs && low.coeffs == termwise && direct.coeffs == termwise;
    Ok((ok, "KZ at q = 1 through index 8".into()))
}

fn q_contrast() -> Result<(bool, String)> {
    for n in 1..=5 {
        if !rho_q_kernel_witness(n)?.is_valid() {
            return Ok((false, format!("witness at level {n}")));
        }
    }
    let none = integer_witness_search(1, 1, 10).is_none();
    Ok((none, "levels 1..=5, integer box |c| <= 10".into()))
}

fn alternating_units() -> Result<(bool, String)> {
    for m in [3u64, 5] {
        let g = alternating_unit(m)?;
        for n in 1..=25u64 {
            if num_integer::gcd(n, 2 * m) != 1 {
                continue;
            }
            let modulus = IntPolynomial::monomial(BigInt::one(), n as usize) - IntPolynomial::one();
            match unit_inverse_mod(&g, &modulus)? {
                Some(w) if (&g * &w).rem(&modulus)?.is_one() => {}
                _ => return Ok((false, format!("m = {m}, n = {n}"))),
            }
        }
    }
    Ok((true, "m in {3, 5}, n <= 25".into()))
}

fn graph_facts() -> Result<(bool, String)> {
    let all: Vec<u64> = (1..=30).collect();
    let z = connected_components(&RingDescriptor::integers(), &all)?.len() == 1;
    let q = connected_components(&RingDescriptor::rationals(), &all)?.len() == 30;
    let half = RingDescriptor::localized(2)?;
    let loc = !is_adjacent(&half, 1, 2) && is_adjacent(&half, 1, 3);
    Ok((z && q && loc, "Z connected, Q discrete, Z[1/2] local".into()))
}

type Check = fn() -> Result<(bool, String)>;

const CHECKS: &[(&str, Check)] = &[
    ("q_inverse", q_inverse),
    ("cyclotomic_product", product_law),
    ("congruence_lemma", congruences),
    ("coprimality", coprimality),
    ("digit_round_trip", digits),
    ("tau_sigma", tau_sigma),
    ("kz_values", kz_values),
    ("ohtsuki_stability", ohtsuki),
    ("q_contrast", q_contrast),
    ("alternating_units", alternating_units),
    ("graph_facts", graph_facts),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Run every check; errors count as failures.
pub fn run_all() -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|(name, f)| match f() {
            Ok((passed, detail)) => CheckOutcome { name, passed, detail },
            Err(e) => CheckOutcome { name, passed: false, detail: e.to_string() },
        })
        .collect()
}
