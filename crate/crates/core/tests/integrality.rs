//! The integer routes agree with the rational definitions.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;
use tiltcount_core::closed_forms::{a_s, bailey, binom, catalan_bracket};
use tiltcount_core::Series;

const T_MAX: u64 = 2000;

fn factorials() -> &'static [BigUint] {
    static F: OnceLock<Vec<BigUint>> = OnceLock::new();
    F.get_or_init(|| {
        let mut f = vec![BigUint::from(1u32)];
        for k in 1..=T_MAX + 1 {
            let next = f.last().unwrap() * k;
            f.push(next);
        }
        f
    })
}

fn binom_fact(t: u64, s: u64) -> BigInt {
    let f = factorials();
    BigInt::from(&f[t as usize] / (&f[s as usize] * &f[(t - s) as usize]))
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn as_int(q: BigRational) -> BigUint {
    assert!(q.is_integer(), "{q} is not an integer");
    q.to_integer().try_into().expect("nonnegative")
}

fn bailey_rational(t: u64, s: u64) -> BigUint {
    as_int(ratio((s + t) as i64, t as i64) * BigRational::from(binom_fact(t, s)))
}

fn catalan_rational(t: u64, s: u64) -> BigUint {
    as_int(ratio((t + 1 - 2 * s) as i64, (t - s + 1) as i64) * BigRational::from(binom_fact(t, s)))
}

#[test]
fn binom_matches_factorials() {
    for t in (0..=T_MAX).step_by(37) {
        for s in 0..=t {
            assert_eq!(BigInt::from(binom(t, s)), binom_fact(t, s));
        }
    }
}

#[test]
fn small_region_exhaustive() {
    for t in 1..=120 {
        for s in 0..=t {
            assert_eq!(bailey(t, s).unwrap(), bailey_rational(t, s));
            if 2 * s <= t + 1 {
                assert_eq!(catalan_bracket(t, s).unwrap(), catalan_rational(t, s));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn bailey_is_integral(t in 1..=T_MAX, frac in 0.0f64..=1.0) {
        let s = (frac * t as f64) as u64;
        prop_assert_eq!(bailey(t, s).unwrap(), bailey_rational(t, s));
    }

    #[test]
    fn catalan_is_integral(t in 0..=T_MAX, frac in 0.0f64..=1.0) {
        let s = (frac * t.div_ceil(2) as f64) as u64;
        prop_assert_eq!(catalan_bracket(t, s).unwrap(), catalan_rational(t, s));
    }

    #[test]
    fn a_closed_form_is_integral(n in 1..=T_MAX / 2, frac in 0.0f64..=1.0) {
        let s = (frac * n as f64) as u64;
        let q = ratio((n - s + 1) as i64, (n + 1) as i64) * BigRational::from(binom_fact(n + s, s));
        prop_assert_eq!(a_s(Series::A, n as usize, s as usize).unwrap(), as_int(q));
    }

    #[test]
    fn d_closed_form_is_integral(n in 3..=T_MAX / 2, frac in 0.0f64..=1.0) {
        let s = (frac * n as f64) as u64;
        let expected = if s == 0 {
            BigUint::from(1u32)
        } else if s < n {
            bailey_rational(n + s - 2, s)
        } else {
            let q = ratio((3 * n - 4) as i64, (2 * n - 2) as i64)
                * BigRational::from(binom_fact(2 * n - 2, n - 2));
            as_int(q)
        };
        prop_assert_eq!(a_s(Series::D, n as usize, s as usize).unwrap(), expected);
    }
}
