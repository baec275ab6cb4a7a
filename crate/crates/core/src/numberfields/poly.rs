//! Polynomials over ℤ and over prime fields.
//!
//! Coefficients are ascending: `[a0, a1, ..., an]` is `a0 + a1·x + ... + an·x^n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense polynomial over 𝔽_p, trimmed so the last coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Fp {
    p: u64,
    c: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

impl Fp {
    fn new(p: u64, mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Fp { p, c }
    }

    fn one(p: u64) -> Self {
        Fp::new(p, vec![1])
    }

    fn x(p: u64) -> Self {
        Fp::new(p, vec![0, 1])
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn is_one(&self) -> bool {
        self.c == [1]
    }

    /// Degree; the zero polynomial reports 0 (callers check `is_zero`).
    fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn monic(&self) -> Self {
        match self.c.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = invmod(lc, self.p);
                Fp::new(self.p, self.c.iter().map(|&a| mulmod(a, inv, self.p)).collect())
            }
        }
    }

    fn sub(&self, o: &Fp) -> Fp {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = o.c.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        Fp::new(self.p, c)
    }

    fn mul(&self, o: &Fp) -> Fp {
        if self.is_zero() || o.is_zero() {
            return Fp::new(self.p, vec![]);
        }
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] = (c[i + j] + mulmod(a, b, self.p)) % self.p;
            }
        }
        Fp::new(self.p, c)
    }

    fn divrem(&self, d: &Fp) -> (Fp, Fp) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let p = self.p;
        let mut r = self.c.clone();
        let dd = d.deg();
        let inv = invmod(*d.c.last().expect("nonzero"), p);
        if r.len() < d.c.len() {
            return (Fp::new(p, vec![]), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = mulmod(r[k + dd], inv, p);
            q[k] = coef;
            if coef != 0 {
                for (j, &b) in d.c.iter().enumerate() {
                    r[k + j] = (r[k + j] + p - mulmod(coef, b, p)) % p;
                }
            }
        }
        r.truncate(dd);
        (Fp::new(p, q), Fp::new(p, r))
    }

    fn rem(&self, d: &Fp) -> Fp {
        self.divrem(d).1
    }

    fn div(&self, d: &Fp) -> Fp {
        self.divrem(d).0
    }

    fn gcd(&self, o: &Fp) -> Fp {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> Fp {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| mulmod(a, i as u64 % self.p, self.p))
            .collect();
        Fp::new(self.p, c)
    }

    /// `self^e mod m`.
    fn powmod(&self, mut e: u64, m: &Fp) -> Fp {
        let mut r = Fp::one(self.p).rem(m);
        let mut b = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b).rem(m);
            }
            b = b.mul(&b).rem(m);
            e >>= 1;
        }
        r
    }

    /// The `p`-th root of a polynomial whose derivative vanishes.
    fn pth_root(&self) -> Fp {
        let p = self.p as usize;
        Fp::new(self.p, self.c.iter().step_by(p).copied().collect())
    }

    /// Squarefree decomposition: pairs (squarefree factor, multiplicity).
    fn squarefree(&self) -> Vec<(Fp, u32)> {
        let mut out = Vec::new();
        let f = self.monic();
        let g = f.derivative();
        if g.is_zero() {
            if f.deg() > 0 {
                for (h, m) in f.pth_root().squarefree() {
                    out.push((h, m * self.p as u32));
                }
            }
            return out;
        }
        let mut c = f.gcd(&g);
        let mut w = f.div(&c);
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.div(&y);
            if fac.deg() > 0 {
                out.push((fac.monic(), i));
            }
            i += 1;
            w = y;
            c = c.div(&w);
        }
        if !c.is_one() && c.deg() > 0 {
            for (h, m) in c.pth_root().squarefree() {
                out.push((h, m * self.p as u32));
            }
        }
        out
    }

    /// Degrees of the irreducible factors of a squarefree monic polynomial.
    fn distinct_degrees(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut f = self.clone();
        let x = Fp::x(self.p);
        let mut h = x.clone();
        let mut d = 1;
        while f.deg() >= 2 * d {
            h = h.powmod(self.p, &f);
            let g = f.gcd(&h.sub(&x));
            if g.deg() > 0 {
                for _ in 0..g.deg() / d {
                    out.push(d as u32);
                }
                f = f.div(&g);
                h = h.rem(&f);
            }
            d += 1;
        }
        if f.deg() > 0 {
            out.push(f.deg() as u32);
        }
        out
    }
}

/// Factor pattern of a monic integer polynomial modulo `p`: one
/// `(degree, multiplicity)` pair per irreducible factor, sorted.
pub fn factor_degrees_mod_p(poly: &[BigInt], p: u64) -> Vec<(u32, u32)> {
    let pb = BigInt::from(p);
    let c = poly
        .iter()
        .map(|a| a.mod_floor(&pb).to_u64().expect("reduced coefficient"))
        .collect();
    let f = Fp::new(p, c);
    let mut out = Vec::new();
    for (g, m) in f.squarefree() {
        for d in g.distinct_degrees() {
            out.push((d, m));
        }
    }
    out.sort_unstable();
    out
}

/// Determinant of a square integer matrix by fraction-free elimination.
fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Resultant of two integer polynomials via the Sylvester matrix.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut s = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (j, a) in f.iter().rev().enumerate() {
            s[i][i + j] = a.clone();
        }
    }
    for i in 0..m {
        for (j, b) in g.iter().rev().enumerate() {
            s[n + i][i + j] = b.clone();
        }
    }
    bareiss(s)
}

/// Discriminant of a monic integer polynomial.
pub fn discriminant(poly: &[BigInt]) -> BigInt {
    let n = poly.len() - 1;
    if n <= 1 {
        return BigInt::one();
    }
    let deriv: Vec<BigInt> = poly
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, a)| a * BigInt::from(i))
        .collect();
    let r = resultant(poly, &deriv);
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// Exact integer square root, if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn golden_ratio_polynomial() {
        let f = z(&[-1, -1, 1]);
        assert_eq!(factor_degrees_mod_p(&f, 2), vec![(2, 1)]);
        assert_eq!(factor_degrees_mod_p(&f, 11), vec![(1, 1), (1, 1)]);
        assert_eq!(factor_degrees_mod_p(&f, 5), vec![(1, 2)]);
        assert_eq!(discriminant(&f), BigInt::from(5));
    }

    #[test]
    fn inseparable_pieces() {
        // x^4 + 1 over F_2 is (x + 1)^4
        assert_eq!(factor_degrees_mod_p(&z(&[1, 0, 0, 0, 1]), 2), vec![(1, 4)]);
        // x^6 - x^3 over F_3: x^3 (x - 1)^3
        assert_eq!(factor_degrees_mod_p(&z(&[0, 0, 0, -1, 0, 0, 1]), 3), vec![(1, 3), (1, 3)]);
        // (x^2 + 1)^2 (x + 1) over F_3
        assert_eq!(
            factor_degrees_mod_p(&z(&[1, 1, 2, 2, 1, 1]), 3),
            vec![(1, 1), (2, 2)]
        );
    }

    #[test]
    fn cubic_discriminants() {
        assert_eq!(discriminant(&z(&[1, -2, -1, 1])), BigInt::from(49));
        assert_eq!(discriminant(&z(&[-2, 0, 1])), BigInt::from(8));
        assert_eq!(discriminant(&z(&[8, -10, -1, 1])), BigInt::from(961 * 4));
    }

    #[test]
    fn degree_sum_matches() {
        let f = z(&[-1, 3, 3, -4, -1, 1]);
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let total: u32 = factor_degrees_mod_p(&f, p).iter().map(|(d, m)| d * m).sum();
            assert_eq!(total, 5);
        }
    }
}
