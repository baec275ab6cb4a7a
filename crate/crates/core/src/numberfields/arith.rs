//! Small-integer number theory helpers.

/// All primes `≤ n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(k, &b)| b.then_some(k as u64))
        .collect()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `q = p^f` with `p` prime, or `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut m = q;
    let mut f = 0;
    while m % p == 0 {
        m /= p;
        f += 1;
    }
    (m == 1).then_some((p, f))
}

/// Jacobi symbol `(a | n)` for odd positive `n`.
fn jacobi(a: i64, n: i64) -> i32 {
    debug_assert!(n > 0 && n % 2 == 1);
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut t = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Kronecker symbol `(d | n)` for `n ≥ 1`.
pub fn kronecker(d: i64, n: i64) -> i32 {
    assert!(n >= 1, "kronecker symbol needs a positive lower argument");
    let mut n = n;
    let mut t = 1;
    while n % 2 == 0 {
        n /= 2;
        t *= match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
    }
    if t == 0 {
        return 0;
    }
    t * jacobi(d, n)
}

/// Is `d` the discriminant of a quadratic field (`d ≠ 1`)?
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let squarefree = |m: i64| {
        let m = m.abs();
        let mut k = 2;
        while k * k <= m {
            if m % (k * k) == 0 {
                return false;
            }
            k += 1;
        }
        true
    };
    match d.rem_euclid(4) {
        1 => squarefree(d),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && squarefree(m)
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_up_to(10_000).len(), 1229);
        assert!(is_prime(9973) && !is_prime(9971));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn kronecker_values() {
        let chi5: Vec<i32> = (1..=5).map(|n| kronecker(5, n)).collect();
        assert_eq!(chi5, vec![1, -1, -1, 1, 0]);
        let chi8: Vec<i32> = (1..=8).map(|n| kronecker(8, n)).collect();
        assert_eq!(chi8, vec![1, 0, -1, 0, -1, 0, 1, 0]);
        assert_eq!(kronecker(12, 11), 1);
        assert_eq!(kronecker(12, 5), -1);
    }

    #[test]
    fn fundamental() {
        let f: Vec<i64> = (2..=30).filter(|&d| is_fundamental_discriminant(d)).collect();
        assert_eq!(f, vec![5, 8, 12, 13, 17, 21, 24, 28, 29]);
    }
}
