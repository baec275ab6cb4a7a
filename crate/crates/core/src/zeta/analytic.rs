//! Certified enclosures of zeta and L-values at integers `s ≥ 2`.

use num_bigint::BigInt;

use super::character::{kronecker_character, DirichletCharacter};
use crate::error::Result;
use crate::exact::{bernoulli, ExactRational, RealInterval};
use crate::numberfields::arith::primes_up_to;
use crate::numberfields::FieldDescriptor;

/// Rising factorial `(s)_n = s (s+1) ... (s+n-1)`.
fn rising(s: u32, n: u32) -> BigInt {
    (0..n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(s + k))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

/// Hurwitz zeta `ζ(s, a) = Σ_{k≥0} (k + a)^{-s}` for integer `s ≥ 2` and
/// rational `0 < a ≤ 1`, by Euler–Maclaurin summation.
///
/// With integer `s` every term is rational; the remainder after `K`
/// correction terms is at most `|B_{2K}|/(2K)! · (s)_{2K-1} · (N+a)^{1-s-2K}`.
pub fn hurwitz_zeta_enclosure(s: u32, a: &ExactRational, prec: u32) -> RealInterval {
    assert!(s >= 2, "Hurwitz zeta enclosure needs s >= 2");
    assert!(a.is_positive() && *a <= 1, "shift must lie in (0, 1]");
    let work = prec + 16;
    let k_terms = prec / 6 + 8;
    let n_terms = prec / 8 + 16;
    let s_i = s as i32;

    let mut sum = RealInterval::from_integer(0, work);
    for k in 0..n_terms {
        let x = a.clone() + ExactRational::from(i64::from(k));
        sum = &sum + &RealInterval::from_rational(&x.pow(-s_i), work);
    }
    let big_n = a.clone() + ExactRational::from(i64::from(n_terms));
    let integral = big_n.pow(1 - s_i) / ExactRational::from(i64::from(s - 1));
    let half = big_n.pow(-s_i) / ExactRational::from(2);
    sum = &sum + &RealInterval::from_rational(&(integral + half), work);
    for j in 1..=k_terms {
        let c = bernoulli(2 * j) / ExactRational::from_integer(factorial(2 * j))
            * ExactRational::from_integer(rising(s, 2 * j - 1))
            * big_n.pow(1 - s_i - 2 * j as i32);
        sum = &sum + &RealInterval::from_rational(&c, work);
    }
    let r = bernoulli(2 * k_terms).abs() / ExactRational::from_integer(factorial(2 * k_terms))
        * ExactRational::from_integer(rising(s, 2 * k_terms - 1))
        * big_n.pow(1 - s_i - 2 * k_terms as i32);
    let tail = RealInterval::from_bounds(&-r.clone(), &r, work).expect("ordered");
    (&sum + &tail).with_precision(prec)
}

/// `L(s, χ) = f^{-s} Σ_{a=1}^{f} χ(a) ζ(s, a/f)`.
pub fn dirichlet_l_positive_enclosure(chi: &DirichletCharacter, s: u32, prec: u32) -> RealInterval {
    let f = chi.conductor() as i64;
    let mut sum = RealInterval::from_integer(0, prec);
    for a in 1..=f {
        let c = chi.value(a);
        if c == 0 {
            continue;
        }
        let h = hurwitz_zeta_enclosure(s, &ExactRational::new(a, f), prec);
        sum = if c > 0 { &sum + &h } else { &sum - &h };
    }
    let scale = ExactRational::from(f).pow(-(s as i32));
    &sum * &RealInterval::from_rational(&scale, prec)
}

/// `ζ_k(s)` for `[k:ℚ] ≤ 2` through the factorization `ζ · L(·, χ_D)`.
///
/// Returns `None` for fields of higher degree.
pub fn abelian_zeta_positive_enclosure(
    field: &FieldDescriptor,
    s: u32,
    prec: u32,
) -> Result<Option<RealInterval>> {
    let zeta = hurwitz_zeta_enclosure(s, &ExactRational::one(), prec);
    match field.degree() {
        1 => Ok(Some(zeta)),
        2 => {
            let d: i64 = field
                .discriminant()
                .try_into()
                .map_err(|_| crate::Error::NotFundamental(field.discriminant().clone()))?;
            let chi = kronecker_character(d)?;
            Ok(Some(&zeta * &dirichlet_l_positive_enclosure(&chi, s, prec)))
        }
        _ => Ok(None),
    }
}

/// Enclosure of `ζ_k(s)` from the Euler product over primes `p ≤ prime_bound`.
///
/// The omitted factor lies in `[1, exp(L)]` with
/// `L = d·P^{1-s} / ((s-1)(1 - P^{-s}))`, bounded above by `1/(1 - L)`.
pub fn euler_product_enclosure(
    field: &FieldDescriptor,
    s: u32,
    prime_bound: u64,
    prec: u32,
) -> Result<RealInterval> {
    assert!(s >= 2, "Euler product enclosure needs s >= 2");
    let work = prec + 32;
    let mut prod = RealInterval::from_integer(1, work);
    for p in primes_up_to(prime_bound) {
        let split = field.place_splitting(p)?;
        for &(f, _) in &split.factors {
            let q = BigInt::from(p).pow(f * s);
            let factor = ExactRational::new(q.clone(), q - 1);
            prod = &prod * &RealInterval::from_rational(&factor, work);
        }
    }
    let big_p = ExactRational::from(prime_bound);
    let s_i = s as i32;
    let l = ExactRational::from(i64::from(field.degree())) * big_p.pow(1 - s_i)
        / (ExactRational::from(i64::from(s - 1)) * (ExactRational::one() - big_p.pow(-s_i)));
    let tail_upper = if l < ExactRational::one() {
        (ExactRational::one() - l).recip()
    } else {
        exp_upper(&l)
    };
    let tail = RealInterval::from_bounds(&ExactRational::one(), &tail_upper, work)?;
    Ok((&prod * &tail).with_precision(prec))
}

/// A rational upper bound for `exp(x)`, `x ≥ 0`.
fn exp_upper(x: &ExactRational) -> ExactRational {
    RealInterval::from_rational(x, 64).exp().upper()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn zeta_two_is_pi_squared_over_six() {
        let z = hurwitz_zeta_enclosure(2, &rat(1, 1), 256);
        let pi = RealInterval::pi(256);
        let want = (&pi * &pi).checked_div(&RealInterval::from_integer(6, 256)).unwrap();
        assert!(z.intersect(&want).is_some());
        assert!(z.relative_width().unwrap() < rat(1, 1 << 40).pow(5));
    }

    #[test]
    fn hurwitz_half_is_odd_zeta() {
        // ζ(4, 1/2) = 15 ζ(4)
        let h = hurwitz_zeta_enclosure(4, &rat(1, 2), 128);
        let z = hurwitz_zeta_enclosure(4, &rat(1, 1), 128);
        let z15 = &z * &RealInterval::from_integer(15, 128);
        assert!(h.intersect(&z15).is_some());
    }
}
