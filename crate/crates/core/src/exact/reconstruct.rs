//! Recovering exact rationals from certified enclosures.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{ExactRational, RealInterval};
use crate::error::{Error, Result};

/// The unique `p/q` with `q ≤ denominator_bound` inside `x`.
///
/// Requires width < 1/(2·bound²): two distinct fractions with denominators up
/// to the bound are at least 1/bound² apart, and any such fraction in `x` is a
/// continued-fraction convergent of the midpoint (Legendre).
pub fn rational_reconstruct(x: &RealInterval, denominator_bound: &BigInt) -> Result<ExactRational> {
    if denominator_bound < &BigInt::one() {
        return Err(Error::InvalidArgument(
            "denominator bound must be positive".into(),
        ));
    }
    let b2 = ExactRational::from_integer(denominator_bound * denominator_bound * 2);
    if x.width() * &b2 >= ExactRational::one() {
        return Err(Error::AmbiguousInterval);
    }
    let mid = x.midpoint();
    for c in convergents(&mid) {
        if c.denom() > denominator_bound {
            break;
        }
        if x.contains(&c) {
            return Ok(c);
        }
    }
    Err(Error::NoRationalInInterval)
}

/// Continued-fraction convergents of `q`, in order.
pub fn convergents(q: &ExactRational) -> Vec<ExactRational> {
    let mut out = Vec::new();
    let (mut n, mut d) = (q.numer().clone(), q.denom().clone());
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::zero(), BigInt::one());
    while !d.is_zero() {
        let (a, r) = n.div_mod_floor(&d);
        let p2 = &a * &p0 + &p1;
        let q2 = &a * &q0 + &q1;
        out.push(ExactRational::new(p2.clone(), q2.clone()));
        p1 = std::mem::replace(&mut p0, p2);
        q1 = std::mem::replace(&mut q0, q2);
        n = std::mem::replace(&mut d, r);
    }
    out
}

/// The unique integer inside `x`, which must have width < 1.
pub fn round_to_integer(x: &RealInterval) -> Result<BigInt> {
    if x.width() >= ExactRational::one() {
        return Err(Error::AmbiguousInterval);
    }
    let n = x.upper().floor();
    if x.contains(&ExactRational::from_integer(n.clone())) {
        Ok(n)
    } else {
        Err(Error::NoRationalInInterval)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn decimal_enclosure(num: &str, digits: u32) -> RealInterval {
        // [x, x + 10^-digits] around a truncated decimal expansion
        let x: ExactRational = format!("{num}/{}", BigInt::from(10).pow(digits))
            .parse()
            .unwrap();
        let ulp = ExactRational::new(1, BigInt::from(10).pow(digits));
        RealInterval::from_bounds(&x, &(x.clone() + ulp), 256).unwrap()
    }

    #[test]
    fn thirtieth_from_forty_digits() {
        let x = decimal_enclosure(&"3".repeat(39), 40);
        let r = rational_reconstruct(&x, &BigInt::from(1_000_000)).unwrap();
        assert_eq!(r, rat(1, 30));
    }

    #[test]
    fn gamma_two_round_trip() {
        let x = RealInterval::from_rational(&rat(11, 5760), 136);
        let r = rational_reconstruct(&x, &BigInt::from(1_000_000)).unwrap();
        assert_eq!(r, rat(11, 5760));
    }

    #[test]
    fn wide_interval_is_ambiguous() {
        let x = RealInterval::from_bounds(&rat(0, 1), &rat(1, 10), 64).unwrap();
        assert_eq!(
            rational_reconstruct(&x, &BigInt::from(1_000_000)),
            Err(Error::AmbiguousInterval)
        );
    }

    #[test]
    fn convergents_of_golden_ratio_approximant() {
        let c = convergents(&rat(13, 8));
        assert_eq!(c, vec![rat(1, 1), rat(2, 1), rat(3, 2), rat(5, 3), rat(13, 8)]);
    }

    #[test]
    fn integer_rounding() {
        let x = RealInterval::from_bounds(&rat(-2401, 100), &rat(-1199, 50), 64).unwrap();
        assert_eq!(round_to_integer(&x).unwrap(), BigInt::from(-24));
        let y = RealInterval::from_bounds(&rat(1, 3), &rat(2, 3), 64).unwrap();
        assert_eq!(round_to_integer(&y), Err(Error::NoRationalInInterval));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn reconstruct_inverts_enclosure(p in -9_999_999_999i64..10_000_000_000, q in 1i64..10_000_000_000) {
            let x = rat(p, q);
            let iv = RealInterval::from_rational(&x, 256);
            let back = rational_reconstruct(&iv, &BigInt::from(10_000_000_000i64)).unwrap();
            prop_assert_eq!(back, x);
        }
    }
}
