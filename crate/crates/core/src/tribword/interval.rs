//! Outward-rounded dyadic intervals.
//!
//! An [`Interval`] is `[lo / 2^bits, hi / 2^bits]` with integer endpoints.
//! Every operation rounds the lower end down and the upper end up, so the
//! true value of any expression built from exact inputs stays inside.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    bits: u32,
}

fn shr_floor(x: &BigInt, s: u32) -> BigInt {
    // BigInt >> rounds toward negative infinity.
    x >> s
}

fn shr_ceil(x: &BigInt, s: u32) -> BigInt {
    -((-x) >> s)
}

fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

impl Interval {
    /// `[lo, hi] / 2^bits`; panics if `lo > hi`.
    pub fn from_scaled(lo: BigInt, hi: BigInt, bits: u32) -> Self {
        assert!(lo <= hi, "empty interval");
        Self { lo, hi, bits }
    }

    /// The exact integer `n`.
    pub fn exact(n: impl Into<BigInt>, bits: u32) -> Self {
        let v = n.into() << bits;
        Self {
            lo: v.clone(),
            hi: v,
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn lo_scaled(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi_scaled(&self) -> &BigInt {
        &self.hi
    }

    /// Same enclosure expressed with `bits` fractional bits.
    pub fn with_bits(&self, bits: u32) -> Self {
        match bits.cmp(&self.bits) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let s = bits - self.bits;
                Self {
                    lo: &self.lo << s,
                    hi: &self.hi << s,
                    bits,
                }
            }
            Ordering::Less => {
                let s = self.bits - bits;
                Self {
                    lo: shr_floor(&self.lo, s),
                    hi: shr_ceil(&self.hi, s),
                    bits,
                }
            }
        }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let bits = self.bits.max(other.bits);
        (self.with_bits(bits), other.with_bits(bits))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        Self {
            lo: a.lo + b.lo,
            hi: a.hi + b.hi,
            bits: a.bits,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        Self {
            lo: a.lo - b.hi,
            hi: a.hi - b.lo,
            bits: a.bits,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -&self.hi,
            hi: -&self.lo,
            bits: self.bits,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let products = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
        let min = products.iter().min().expect("four products");
        let max = products.iter().max().expect("four products");
        Self {
            lo: shr_floor(min, a.bits),
            hi: shr_ceil(max, a.bits),
            bits: a.bits,
        }
    }

    /// Multiplication by an exact integer.
    pub fn scale(&self, k: &BigInt) -> Self {
        let (lo, hi) = if k.is_negative() {
            (&self.hi * k, &self.lo * k)
        } else {
            (&self.lo * k, &self.hi * k)
        };
        Self {
            lo,
            hi,
            bits: self.bits,
        }
    }

    /// Division; `None` when the divisor contains zero.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if other.contains_zero() {
            return None;
        }
        let (a, b) = self.aligned(other);
        let num = [&a.lo << a.bits, &a.hi << a.bits];
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for n in &num {
            for d in [&b.lo, &b.hi] {
                let f = n.div_floor(d);
                let c = div_ceil(n, d);
                lo = Some(lo.map_or(f.clone(), |l| l.min(f)));
                hi = Some(hi.map_or(c.clone(), |h| h.max(c)));
            }
        }
        Some(Self {
            lo: lo.expect("nonempty"),
            hi: hi.expect("nonempty"),
            bits: a.bits,
        })
    }

    pub fn recip(&self) -> Option<Self> {
        Self::exact(1, self.bits).div(self)
    }

    /// Square root of a nonnegative interval; `None` if it dips below zero.
    pub fn sqrt(&self) -> Option<Self> {
        if self.lo.is_negative() {
            return None;
        }
        let lo = (&self.lo << self.bits).sqrt();
        let hi_arg = &self.hi << self.bits;
        let mut hi = hi_arg.sqrt();
        if &hi * &hi < hi_arg {
            hi += 1;
        }
        Some(Self {
            lo,
            hi,
            bits: self.bits,
        })
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut result = Self::exact(1, self.bits);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Enclosure of `|x|` for `x` in the interval.
    pub fn abs(&self) -> Self {
        if self.lo.is_negative() && self.hi.is_positive() {
            Self {
                lo: BigInt::zero(),
                hi: self.hi.clone().max(-&self.lo),
                bits: self.bits,
            }
        } else if self.hi.sign() != Sign::Plus && self.lo.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }

    /// Certain ordering: `Some(Less)` if every point is below every point of
    /// `other`, and so on; `None` when the intervals overlap.
    pub fn certain_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b) = self.aligned(other);
        if a.hi < b.lo {
            Some(Ordering::Less)
        } else if a.lo > b.hi {
            Some(Ordering::Greater)
        } else if a.lo == a.hi && a == b {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// `true` when every point is strictly below the exact rational `num/den`.
    pub fn lt_ratio(&self, num: i64, den: u64) -> bool {
        // hi / 2^bits < num / den  <=>  hi * den < num * 2^bits
        &self.hi * BigInt::from(den) < (BigInt::from(num) << self.bits)
    }

    /// `true` when every point is strictly above `num/den`.
    pub fn gt_ratio(&self, num: i64, den: u64) -> bool {
        &self.lo * BigInt::from(den) > (BigInt::from(num) << self.bits)
    }

    /// Width as a float (upper bound up to float rounding).
    pub fn width(&self) -> f64 {
        scaled_to_f64(&(&self.hi - &self.lo), self.bits)
    }

    pub fn lower_f64(&self) -> f64 {
        scaled_to_f64(&self.lo, self.bits)
    }

    pub fn upper_f64(&self) -> f64 {
        scaled_to_f64(&self.hi, self.bits)
    }

    pub fn mid_f64(&self) -> f64 {
        scaled_to_f64(&(&self.lo + &self.hi), self.bits + 1)
    }

    /// Decimal rendering of the midpoint with `places` digits after the
    /// point, computed exactly from the endpoints.
    pub fn to_decimal(&self, places: usize) -> String {
        self.render(places, true)
    }

    /// Like [`Interval::to_decimal`] but truncated toward zero.
    pub fn to_decimal_truncated(&self, places: usize) -> String {
        self.render(places, false)
    }

    fn render(&self, places: usize, round: bool) -> String {
        let sum = &self.lo + &self.hi;
        let ten_pow = BigInt::from(10u32).pow(places as u32);
        let denom = BigInt::one() << (self.bits + 1);
        let scaled = &sum * &ten_pow;
        // round half away from zero
        let (q, r) = scaled.abs().div_rem(&denom);
        let q = if round && (&r << 1u32) >= denom { q + 1 } else { q };
        let negative = sum.is_negative() && !q.is_zero();
        let digits = q.to_string();
        let padded = format!("{:0>width$}", digits, width = places + 1);
        let (int, frac) = padded.split_at(padded.len() - places);
        let sign = if negative { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

fn scaled_to_f64(x: &BigInt, bits: u32) -> f64 {
    // Keep 64 significant bits before converting.
    let len = x.bits() as i64;
    let drop = (len - 64).max(0);
    let mantissa = (x >> drop as u32).to_f64().unwrap_or(f64::NAN);
    mantissa * 2f64.powi((drop - bits as i64) as i32)
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:.17e}, {:.17e}] ({} bits)",
            self.lower_f64(),
            self.upper_f64(),
            self.bits
        )
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(f.precision().unwrap_or(7)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn third(bits: u32) -> Interval {
        Interval::exact(1, bits).div(&Interval::exact(3, bits)).unwrap()
    }

    #[test]
    fn division_encloses_one_third() {
        let t = third(40);
        assert!(t.gt_ratio(333_333, 1_000_000));
        assert!(t.lt_ratio(333_334, 1_000_000));
        let back = t.mul(&Interval::exact(3, 40));
        assert!(back.lt_ratio(1_000_001, 1_000_000) && back.gt_ratio(999_999, 1_000_000));
    }

    #[test]
    fn sqrt_two() {
        let r = Interval::exact(2, 60).sqrt().unwrap();
        assert!(r.gt_ratio(14142135, 10_000_000));
        assert!(r.lt_ratio(14142136, 10_000_000));
        assert!(!r.mul(&r).contains_zero());
        assert!(Interval::exact(-1, 10).sqrt().is_none());
    }

    #[test]
    fn mul_handles_signs() {
        let a = Interval::exact(-3, 8).sub(&third(8));
        let b = a.mul(&a);
        assert!(b.is_positive());
        assert!(b.gt_ratio(111, 10) && b.lt_ratio(112, 10));
    }

    #[test]
    fn abs_and_ordering() {
        let x = Interval::from_scaled(BigInt::from(-5), BigInt::from(3), 2);
        assert_eq!(x.abs().lo_scaled(), &BigInt::zero());
        assert_eq!(x.abs().hi_scaled(), &BigInt::from(5));
        assert_eq!(third(20).certain_cmp(&Interval::exact(1, 20)), Some(Ordering::Less));
        assert_eq!(third(20).certain_cmp(&third(20)), None);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(third(80).to_decimal(7), "0.3333333");
        assert_eq!(third(80).neg().to_decimal(3), "-0.333");
        assert_eq!(Interval::exact(2, 5).to_decimal(2), "2.00");
        assert_eq!(third(80).scale(&BigInt::from(2)).to_decimal_truncated(2), "0.66");
        assert_eq!(Interval::exact(-1, 5).div(&Interval::exact(8, 5)).unwrap().to_decimal(1), "-0.1");
    }
}
