//! Bernoulli numbers and polynomials.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use super::ExactRational;

fn cache() -> &'static Mutex<Vec<ExactRational>> {
    static CACHE: OnceLock<Mutex<Vec<ExactRational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![ExactRational::one()]))
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `B_m` with `B_1 = -1/2`, so that `ζ(1 - m) = -B_m / m` for `m ≥ 2`.
///
/// Uses the recurrence `Σ_{j=0}^{m} C(m+1, j) B_j = 0`; values are memoized.
pub fn bernoulli(m: u32) -> ExactRational {
    let mut table = cache().lock().expect("bernoulli cache poisoned");
    while table.len() <= m as usize {
        let n = table.len() as u32;
        if n >= 3 && n % 2 == 1 {
            table.push(ExactRational::zero());
            continue;
        }
        let mut acc = ExactRational::zero();
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += &(ExactRational::from_integer(binomial(n + 1, j as u32)) * b);
            }
        }
        table.push(-acc / ExactRational::from(i64::from(n) + 1));
    }
    table[m as usize].clone()
}

/// `B_m(x) = Σ_{j=0}^{m} C(m, j) B_j x^{m-j}`.
pub fn bernoulli_polynomial(m: u32, x: &ExactRational) -> ExactRational {
    // Horner in x over the coefficients C(m, j) B_j, highest power first.
    let mut acc = ExactRational::zero();
    for j in 0..=m {
        acc = acc * x + ExactRational::from_integer(binomial(m, j)) * bernoulli(j);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), rat(0, 1));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(8), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(bernoulli_polynomial(1, &rat(0, 1)), rat(-1, 2));
        assert_eq!(bernoulli_polynomial(2, &rat(0, 1)), rat(1, 6));
        // x^2 - x + 1/6 at 1/2
        assert_eq!(bernoulli_polynomial(2, &rat(1, 2)), rat(-1, 12));
    }

    #[test]
    fn even_signs_alternate() {
        for m in (2..=60).step_by(2) {
            let expected = if (m / 2) % 2 == 1 { 1 } else { -1 };
            assert_eq!(bernoulli(m).signum(), expected, "B_{m}");
        }
    }

    proptest! {
        #[test]
        fn difference_equation(m in 0u32..=30, p in -50i64..50, q in 1i64..40) {
            let x = rat(p, q);
            let lhs = bernoulli_polynomial(m, &(x.clone() + rat(1, 1)))
                - bernoulli_polynomial(m, &x);
            let rhs = if m == 0 {
                rat(0, 1)
            } else {
                ExactRational::from(i64::from(m)) * x.pow(m as i32 - 1)
            };
            prop_assert_eq!(lhs, rhs);
        }
    }
}
