//! Real intervals with dyadic endpoints and outward rounding.
//!
//! Every endpoint is `m·2^e` with a big-integer mantissa trimmed to the working
//! precision; lower endpoints round toward -∞, upper ones toward +∞.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ExactRational;
use crate::error::{Error, Result};

/// Default working precision in bits.
pub const DEFAULT_PRECISION: u32 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Dir {
    Down,
    Up,
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

fn div_dir(a: &BigInt, b: &BigInt, dir: Dir) -> BigInt {
    match dir {
        Dir::Down => a.div_floor(b),
        Dir::Up => -((-a).div_floor(b)),
    }
}

/// `m·2^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Dyadic {
    m: BigInt,
    e: i64,
}

impl Dyadic {
    fn int(m: BigInt) -> Self {
        Dyadic { m, e: 0 }
    }

    fn zero() -> Self {
        Dyadic::int(BigInt::zero())
    }

    fn round(self, prec: u32, dir: Dir) -> Self {
        let bits = self.m.bits();
        if bits <= u64::from(prec) {
            return self;
        }
        let k = bits - u64::from(prec);
        Dyadic {
            m: div_dir(&self.m, &pow2(k), dir),
            e: self.e + k as i64,
        }
    }

    fn to_rational(&self) -> ExactRational {
        if self.e >= 0 {
            ExactRational::from_integer(&self.m << self.e as u64)
        } else {
            ExactRational::new(self.m.clone(), pow2(self.e.unsigned_abs()))
        }
    }

    /// Exact comparison.
    fn cmp_to(&self, other: &Dyadic) -> std::cmp::Ordering {
        let e = self.e.min(other.e);
        let a = &self.m << (self.e - e) as u64;
        let b = &other.m << (other.e - e) as u64;
        a.cmp(&b)
    }

    fn add(&self, other: &Dyadic) -> Dyadic {
        let e = self.e.min(other.e);
        Dyadic {
            m: (&self.m << (self.e - e) as u64) + (&other.m << (other.e - e) as u64),
            e,
        }
    }

    fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic {
            m: &self.m * &other.m,
            e: self.e + other.e,
        }
    }

    fn neg(&self) -> Dyadic {
        Dyadic {
            m: -&self.m,
            e: self.e,
        }
    }

    fn is_negative(&self) -> bool {
        self.m.is_negative()
    }

    /// `a / b` rounded in direction `dir` to `prec` bits.
    fn div(a: &Dyadic, b: &Dyadic, prec: u32, dir: Dir) -> Dyadic {
        assert!(!b.m.is_zero(), "division by zero");
        let shift = i64::from(prec) + b.m.bits() as i64 - a.m.bits() as i64 + 2;
        let k = shift.max(0) as u64;
        let (num, den) = if b.m.is_negative() {
            (-(&a.m << k), -&b.m)
        } else {
            (&a.m << k, b.m.clone())
        };
        Dyadic {
            m: div_dir(&num, &den, dir),
            e: a.e - b.e - k as i64,
        }
        .round(prec, dir)
    }

    fn from_rational(q: &ExactRational, prec: u32, dir: Dir) -> Dyadic {
        Dyadic::div(
            &Dyadic::int(q.numer().clone()),
            &Dyadic::int(q.denom().clone()),
            prec,
            dir,
        )
    }

    /// Square root of a non-negative dyadic, rounded in direction `dir`.
    fn sqrt(&self, prec: u32, dir: Dir) -> Dyadic {
        assert!(!self.is_negative(), "square root of a negative number");
        if self.m.is_zero() {
            return Dyadic::zero();
        }
        let want = 2 * u64::from(prec) + 4;
        let mut s = want.saturating_sub(self.m.bits());
        if (self.e - s as i64).rem_euclid(2) != 0 {
            s += 1;
        }
        let big = &self.m << s;
        let mut root = big.sqrt();
        if dir == Dir::Up && &root * &root != big {
            root += 1;
        }
        Dyadic {
            m: root,
            e: (self.e - s as i64) / 2,
        }
        .round(prec, dir)
    }
}

/// A closed interval `[lower, upper]` of reals with dyadic endpoints.
#[derive(Clone, PartialEq, Eq)]
pub struct RealInterval {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
}

impl RealInterval {
    fn from_parts(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        debug_assert!(lo.cmp_to(&hi) != std::cmp::Ordering::Greater);
        RealInterval {
            lo: lo.round(prec, Dir::Down),
            hi: hi.round(prec, Dir::Up),
            prec,
        }
    }

    /// Tightest enclosure of `q` at `prec` bits (a point when `q` is dyadic).
    pub fn from_rational(q: &ExactRational, prec: u32) -> Self {
        RealInterval {
            lo: Dyadic::from_rational(q, prec, Dir::Down),
            hi: Dyadic::from_rational(q, prec, Dir::Up),
            prec,
        }
    }

    pub fn from_integer(n: impl Into<BigInt>, prec: u32) -> Self {
        let d = Dyadic::int(n.into());
        RealInterval::from_parts(d.clone(), d, prec)
    }

    /// The interval `[lower, upper]`; fails if `lower > upper`.
    pub fn from_bounds(lower: &ExactRational, upper: &ExactRational, prec: u32) -> Result<Self> {
        if lower > upper {
            return Err(Error::InvalidArgument(format!(
                "interval bounds out of order: {lower} > {upper}"
            )));
        }
        Ok(RealInterval {
            lo: Dyadic::from_rational(lower, prec, Dir::Down),
            hi: Dyadic::from_rational(upper, prec, Dir::Up),
            prec,
        })
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// Re-round to another precision (outward).
    pub fn with_precision(&self, prec: u32) -> Self {
        RealInterval::from_parts(self.lo.clone(), self.hi.clone(), prec)
    }

    pub fn lower(&self) -> ExactRational {
        self.lo.to_rational()
    }

    pub fn upper(&self) -> ExactRational {
        self.hi.to_rational()
    }

    pub fn width(&self) -> ExactRational {
        self.upper() - self.lower()
    }

    pub fn midpoint(&self) -> ExactRational {
        (self.lower() + self.upper()) / ExactRational::from(2)
    }

    /// Width divided by the smallest absolute value in the interval; `None`
    /// when the interval contains zero.
    pub fn relative_width(&self) -> Option<ExactRational> {
        if self.contains_zero() {
            return None;
        }
        let m = if self.lo.is_negative() {
            self.upper().abs()
        } else {
            self.lower()
        };
        Some(self.width() / m)
    }

    pub fn contains(&self, q: &ExactRational) -> bool {
        &self.lower() <= q && q <= &self.upper()
    }

    pub fn contains_interval(&self, other: &RealInterval) -> bool {
        self.lo.cmp_to(&other.lo) != std::cmp::Ordering::Greater
            && other.hi.cmp_to(&self.hi) != std::cmp::Ordering::Greater
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.m.is_positive() && !self.hi.m.is_negative()
    }

    /// Every point is `< other`'s every point.
    pub fn certainly_lt(&self, other: &RealInterval) -> bool {
        self.hi.cmp_to(&other.lo) == std::cmp::Ordering::Less
    }

    pub fn certainly_gt(&self, other: &RealInterval) -> bool {
        other.certainly_lt(self)
    }

    pub fn certainly_lt_rational(&self, q: &ExactRational) -> bool {
        &self.upper() < q
    }

    pub fn certainly_gt_rational(&self, q: &ExactRational) -> bool {
        &self.lower() > q
    }

    pub fn certainly_positive(&self) -> bool {
        self.lo.m.is_positive()
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &RealInterval) -> RealInterval {
        let lo = if self.lo.cmp_to(&other.lo).is_le() {
            self.lo.clone()
        } else {
            other.lo.clone()
        };
        let hi = if self.hi.cmp_to(&other.hi).is_ge() {
            self.hi.clone()
        } else {
            other.hi.clone()
        };
        RealInterval::from_parts(lo, hi, self.prec.max(other.prec))
    }

    /// Intersection, or `None` if disjoint.
    pub fn intersect(&self, other: &RealInterval) -> Option<RealInterval> {
        let lo = if self.lo.cmp_to(&other.lo).is_ge() {
            &self.lo
        } else {
            &other.lo
        };
        let hi = if self.hi.cmp_to(&other.hi).is_le() {
            &self.hi
        } else {
            &other.hi
        };
        if lo.cmp_to(hi).is_gt() {
            return None;
        }
        Some(RealInterval {
            lo: lo.clone(),
            hi: hi.clone(),
            prec: self.prec.max(other.prec),
        })
    }

    fn prec_with(&self, other: &RealInterval) -> u32 {
        self.prec.max(other.prec)
    }

    /// Division; `None` if the divisor contains zero.
    pub fn checked_div(&self, other: &RealInterval) -> Option<RealInterval> {
        if other.contains_zero() {
            return None;
        }
        let prec = self.prec_with(other);
        let a = [&self.lo, &self.hi];
        let b = [&other.lo, &other.hi];
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for x in a {
            for y in b {
                let d = Dyadic::div(x, y, prec, Dir::Down);
                let u = Dyadic::div(x, y, prec, Dir::Up);
                if lo.as_ref().is_none_or(|l| d.cmp_to(l).is_lt()) {
                    lo = Some(d);
                }
                if hi.as_ref().is_none_or(|h| u.cmp_to(h).is_gt()) {
                    hi = Some(u);
                }
            }
        }
        Some(RealInterval::from_parts(lo?, hi?, prec))
    }

    pub fn recip(&self) -> Option<RealInterval> {
        RealInterval::from_integer(1, self.prec).checked_div(self)
    }

    /// Integer power by repeated squaring; negative exponents go through the reciprocal.
    pub fn powi(&self, n: i64) -> RealInterval {
        if n < 0 {
            return self
                .powi(-n)
                .recip()
                .expect("negative power of an interval containing zero");
        }
        if n % 2 == 0 && self.contains_zero() {
            // even power straddling zero: [0, max(lo², hi²)]
            let a = self.lo.mul(&self.lo);
            let b = self.hi.mul(&self.hi);
            let m = if a.cmp_to(&b).is_ge() { a } else { b };
            let top = RealInterval::from_parts(m.clone(), m, self.prec).powi(n / 2);
            return RealInterval::from_parts(Dyadic::zero(), top.hi, self.prec);
        }
        let mut acc = RealInterval::from_integer(1, self.prec);
        let mut base = self.clone();
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn sqrt(&self) -> RealInterval {
        assert!(
            !self.lo.is_negative(),
            "square root of an interval with negative points"
        );
        RealInterval {
            lo: self.lo.sqrt(self.prec, Dir::Down),
            hi: self.hi.sqrt(self.prec, Dir::Up),
            prec: self.prec,
        }
    }

    /// `exp` is increasing, so the endpoints are handled separately.
    pub fn exp(&self) -> RealInterval {
        let lo = exp_dyadic(&self.lo, self.prec);
        let hi = exp_dyadic(&self.hi, self.prec);
        RealInterval::from_parts(lo.lo, hi.hi, self.prec)
    }

    /// π at `prec` bits.
    pub fn pi(prec: u32) -> RealInterval {
        static CACHE: OnceLock<Mutex<HashMap<u32, RealInterval>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(p) = cache.lock().expect("pi cache poisoned").get(&prec) {
            return p.clone();
        }
        let work = prec + 32;
        let a = atan_inv(5, work);
        let b = atan_inv(239, work);
        let p = (&(&a * &RealInterval::from_integer(16, work))
            - &(&b * &RealInterval::from_integer(4, work)))
            .with_precision(prec);
        cache
            .lock()
            .expect("pi cache poisoned")
            .insert(prec, p.clone());
        p
    }

    pub fn lower_f64(&self) -> f64 {
        self.lower().to_f64()
    }

    pub fn upper_f64(&self) -> f64 {
        self.upper().to_f64()
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64()
    }

    /// Number of leading significant decimal digits shared by every point.
    pub fn certified_digits(&self) -> u32 {
        if self.contains_zero() {
            return 0;
        }
        let lo = self.lower().abs();
        let hi = self.upper().abs();
        let (small, big) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        // digits d such that both endpoints round down to the same d-digit prefix
        let mut digits = 0;
        for d in 1..=200u32 {
            let e = decimal_exponent(&big);
            let scale = ExactRational::from(10).pow(d as i32 - 1 - e);
            if (small.clone() * &scale).floor() == (big.clone() * &scale).floor() {
                digits = d;
            } else {
                break;
            }
        }
        digits
    }

    /// Midpoint in scientific notation with `digits` significant digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        decimal_string(&self.midpoint(), digits.max(1))
    }
}

/// `floor(log10 |q|)` for nonzero `q`.
pub(crate) fn decimal_exponent(q: &ExactRational) -> i32 {
    let q = q.abs();
    let bits = q.numer().bits() as i64 - q.denom().bits() as i64;
    let mut e = (bits as f64 * std::f64::consts::LOG10_2).floor() as i32;
    let ten = ExactRational::from(10);
    loop {
        let p = ten.pow(e);
        if q < p {
            e -= 1;
        } else if q >= p * &ten {
            e += 1;
        } else {
            return e;
        }
    }
}

/// Scientific notation, round half up, for display only.
pub fn decimal_string(q: &ExactRational, digits: u32) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let sign = if q.is_negative() { "-" } else { "" };
    let a = q.abs();
    let mut e = decimal_exponent(&a);
    let scale = ExactRational::from(10).pow(digits as i32 - 1 - e);
    let mut m = (a * &scale + ExactRational::new(1, 2)).floor();
    if m.to_string().len() > digits as usize {
        m /= 10;
        e += 1;
    }
    let s = m.to_string();
    let (head, tail) = s.split_at(1);
    let mant = if tail.is_empty() {
        head.to_string()
    } else {
        format!("{head}.{tail}")
    };
    if e == 0 {
        format!("{sign}{mant}")
    } else {
        format!("{sign}{mant}e{e}")
    }
}

/// `atan(1/n)` via its alternating series; the tail is bounded by the next term.
fn atan_inv(n: u32, prec: u32) -> RealInterval {
    let n2 = BigInt::from(n) * BigInt::from(n);
    let mut sum = RealInterval::from_integer(0, prec);
    let mut pow = BigInt::from(n);
    let mut k: u64 = 0;
    loop {
        let term = ExactRational::new(1, 1) / ExactRational::from_integer(&pow * BigInt::from(2 * k + 1));
        let t = RealInterval::from_rational(&term, prec);
        sum = if k % 2 == 0 { &sum + &t } else { &sum - &t };
        let next = ExactRational::new(1, 1)
            / ExactRational::from_integer(&pow * &n2 * BigInt::from(2 * k + 3));
        if next.numer().bits() + u64::from(prec) + 8 < next.denom().bits() {
            let tail = RealInterval::from_bounds(&-next.clone(), &next, prec).expect("ordered");
            return &sum + &tail;
        }
        pow *= &n2;
        k += 1;
    }
}

/// Enclosure of `exp(x)` for a single dyadic point.
fn exp_dyadic(x: &Dyadic, prec: u32) -> RealInterval {
    // halve until |y| ≤ 1/2, then square back
    let mag = x.m.bits() as i64 + x.e;
    let k = (mag + 1).max(0) as u64;
    let work = prec + 16 + k as u32;
    let y = RealInterval::from_parts(
        Dyadic {
            m: x.m.clone(),
            e: x.e - k as i64,
        },
        Dyadic {
            m: x.m.clone(),
            e: x.e - k as i64,
        },
        work,
    );
    let mut sum = RealInterval::from_integer(1, work);
    let mut term = RealInterval::from_integer(1, work);
    let mut n: i64 = 1;
    let threshold = ExactRational::new(1, 1) / ExactRational::from_integer(pow2(u64::from(work) + 4));
    loop {
        term = term
            .checked_div(&RealInterval::from_integer(n, work))
            .expect("nonzero");
        term = &term * &y;
        sum = &sum + &term;
        n += 1;
        // remaining terms ≤ |term|·Σ (1/2)^j ≤ 2|term| since |y| ≤ 1/2
        let bound = term.upper().abs().max(term.lower().abs());
        if bound < threshold {
            let r = bound * ExactRational::from(2);
            let tail = RealInterval::from_bounds(&-r.clone(), &r, work).expect("ordered");
            sum = &sum + &tail;
            break;
        }
    }
    for _ in 0..k {
        sum = &sum * &sum;
    }
    sum.with_precision(prec)
}

impl<'a> Add<&'a RealInterval> for &'a RealInterval {
    type Output = RealInterval;
    fn add(self, rhs: &'a RealInterval) -> RealInterval {
        RealInterval::from_parts(self.lo.add(&rhs.lo), self.hi.add(&rhs.hi), self.prec_with(rhs))
    }
}

impl<'a> Sub<&'a RealInterval> for &'a RealInterval {
    type Output = RealInterval;
    fn sub(self, rhs: &'a RealInterval) -> RealInterval {
        RealInterval::from_parts(
            self.lo.add(&rhs.hi.neg()),
            self.hi.add(&rhs.lo.neg()),
            self.prec_with(rhs),
        )
    }
}

impl<'a> Mul<&'a RealInterval> for &'a RealInterval {
    type Output = RealInterval;
    fn mul(self, rhs: &'a RealInterval) -> RealInterval {
        let p = [
            self.lo.mul(&rhs.lo),
            self.lo.mul(&rhs.hi),
            self.hi.mul(&rhs.lo),
            self.hi.mul(&rhs.hi),
        ];
        let mut lo = &p[0];
        let mut hi = &p[0];
        for x in &p[1..] {
            if x.cmp_to(lo).is_lt() {
                lo = x;
            }
            if x.cmp_to(hi).is_gt() {
                hi = x;
            }
        }
        RealInterval::from_parts(lo.clone(), hi.clone(), self.prec_with(rhs))
    }
}

impl Add for RealInterval {
    type Output = RealInterval;
    fn add(self, rhs: RealInterval) -> RealInterval {
        &self + &rhs
    }
}

impl Sub for RealInterval {
    type Output = RealInterval;
    fn sub(self, rhs: RealInterval) -> RealInterval {
        &self - &rhs
    }
}

impl Mul for RealInterval {
    type Output = RealInterval;
    fn mul(self, rhs: RealInterval) -> RealInterval {
        &self * &rhs
    }
}

impl Neg for &RealInterval {
    type Output = RealInterval;
    fn neg(self) -> RealInterval {
        RealInterval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            prec: self.prec,
        }
    }
}

impl Neg for RealInterval {
    type Output = RealInterval;
    fn neg(self) -> RealInterval {
        -&self
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.certified_digits().clamp(3, 40);
        write!(
            f,
            "[{}, {}]",
            decimal_string(&self.lower(), digits + 2),
            decimal_string(&self.upper(), digits + 2)
        )
    }
}

impl fmt::Debug for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealInterval{} @{} bits", self, self.prec)
    }
}

#[derive(Serialize, Deserialize)]
struct IntervalRepr {
    lower: ExactRational,
    upper: ExactRational,
    precision: u32,
}

impl Serialize for RealInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IntervalRepr {
            lower: self.lower(),
            upper: self.upper(),
            precision: self.prec,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RealInterval {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = IntervalRepr::deserialize(deserializer)?;
        RealInterval::from_bounds(&r.lower, &r.upper, r.precision).map_err(serde::de::Error::custom)
    }
}
