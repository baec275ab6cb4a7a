//! A multiple of `w_m(k)`, the largest `N` for which `Gal(k(μ_N)/k)` has
//! exponent dividing `m`. By Deligne–Ribet, `w_m(k)·ζ_k(1 - m)` is an integer.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::numberfields::arith::primes_up_to;

fn span(gens: &[u64], modulus: u64) -> BTreeSet<u64> {
    let mut set = BTreeSet::from([1 % modulus]);
    let mut frontier = vec![1 % modulus];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x * g % modulus;
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

fn product_size(a: &BTreeSet<u64>, b: &BTreeSet<u64>, modulus: u64) -> usize {
    let mut out = HashSet::new();
    for x in a {
        for y in b {
            out.insert(x * y % modulus);
        }
    }
    out.len()
}

/// Could the subfield of `ℚ(μ_{ℓ^n})` cut out by some `H` with `Gal(ℚ(μ)/F) = H`
/// of exponent dividing `m` lie in a totally real field of degree `d` and
/// discriminant `disc`? Only necessary conditions are tested, so the answer
/// over-approximates and the resulting multiple is safe.
fn admissible(l: u64, n: u32, m: u64, d: u64, disc: &BigInt) -> bool {
    let modulus = l.pow(n);
    let units: Vec<u64> = (1..=modulus)
        .map(|x| x % modulus)
        .filter(|&x| x.gcd(&l) == 1)
        .collect();
    let order = units.len();
    let minus_one = (modulus - 1) % modulus.max(1);
    let pow_is_one = |x: u64| {
        let mut r = 1 % modulus;
        for _ in 0..m {
            r = r * x % modulus;
        }
        r == 1 % modulus
    };
    let candidates: Vec<u64> = units.iter().copied().filter(|&x| pow_is_one(x)).collect();
    if !pow_is_one(minus_one) {
        return false;
    }
    let filters: Vec<BTreeSet<u64>> = (0..n)
        .map(|c| {
            let step = l.pow(c);
            units
                .iter()
                .copied()
                .filter(|&x| c == 0 || (x % step) == 1 % step)
                .collect()
        })
        .collect();
    let mut seen = HashSet::new();
    for (i, &a) in candidates.iter().enumerate() {
        for &b in &candidates[i..] {
            let h = span(&[minus_one, a, b], modulus);
            if !seen.insert(h.clone()) {
                continue;
            }
            let index = (order / h.len()) as u64;
            if d % index != 0 {
                continue;
            }
            // conductor-discriminant formula for the fixed field of h
            let v: u64 = filters
                .iter()
                .map(|u| index - (order / product_size(u, &h, modulus)) as u64)
                .sum();
            let power = BigInt::from(l).pow((v * (d / index)) as u32);
            if (disc % power).is_zero() {
                return true;
            }
        }
    }
    false
}

/// A positive multiple of `w_m(k)` for a totally real field of degree `d`
/// and discriminant `disc`, `m` even.
pub fn integrality_multiple(m: u32, d: u32, disc: &BigInt) -> BigInt {
    assert!(m >= 2 && m % 2 == 0, "w_m is used for even m");
    let (m, d) = (u64::from(m), u64::from(d));
    let cap = 2 * m * d;
    let mut out = BigInt::from(1);
    for l in primes_up_to(cap + 1) {
        let mut best = 0;
        let mut n = 1;
        loop {
            let phi = l.pow(n - 1) * (l - 1);
            if phi > cap {
                break;
            }
            if admissible(l, n, m, d, disc) {
                best = n;
            }
            n += 1;
        }
        out *= BigInt::from(l).pow(best);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_field() {
        let one = BigInt::from(1);
        assert_eq!(integrality_multiple(2, 1, &one), BigInt::from(24));
        assert_eq!(integrality_multiple(4, 1, &one), BigInt::from(240));
        assert_eq!(integrality_multiple(6, 1, &one), BigInt::from(504));
    }

    #[test]
    fn small_fields() {
        assert_eq!(integrality_multiple(2, 2, &BigInt::from(5)), BigInt::from(120));
        assert_eq!(integrality_multiple(2, 2, &BigInt::from(8)), BigInt::from(48));
        assert_eq!(integrality_multiple(2, 3, &BigInt::from(49)), BigInt::from(168));
    }
}
