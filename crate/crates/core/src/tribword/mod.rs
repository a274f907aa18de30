//! Certified arithmetic around the Tribonacci constant, the sign pattern of
//! `T_{n+1} - αT_n`, successor-deviation records, and the Tribonacci word.

pub mod interval;
mod records;
mod word;

use std::collections::BTreeMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::numeration::tribonacci;
pub use interval::Interval;
pub use records::{
    constructed_record, records, successor_deviation, successor_deviation_at, RecordEntry,
    RecordSign,
};
pub use word::{
    a_position_bounds, fibonacci_word, letter_at, letter_positions, tribonacci_word,
    BoundsReport, Letter,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("sign not separated from zero at {0} bits")]
    PrecisionCeiling(u32),
}

/// Default cap on working precision for sign certification.
pub const MAX_BITS: u32 = 1 << 16;

/// The real root α of `x³ − x² − x − 1`, kept as an isolating interval
/// with dyadic endpoints that can be refined on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicReal {
    lo: BigInt,
    bits: u32,
}

// f(L / 2^p) scaled by 2^{3p}
fn cubic_sign(l: &BigInt, p: u32) -> std::cmp::Ordering {
    let one = BigInt::one() << p;
    let l2 = l * l;
    let value = &l2 * l - (&l2 << p) - ((l * &one) << p) - (&one << (2 * p));
    value.sign().cmp(&num_bigint::Sign::NoSign)
}

impl AlgebraicReal {
    /// α enclosed in `[1, 2]`.
    pub fn tribonacci_constant() -> Self {
        Self {
            lo: BigInt::one(),
            bits: 0,
        }
    }

    /// Bisects until the interval has width `2^-bits`.
    pub fn refine_to(&mut self, bits: u32) {
        use std::cmp::Ordering::Less;
        while self.bits < bits {
            let lo = &self.lo << 1u32;
            let mid = &lo + 1;
            self.bits += 1;
            self.lo = if cubic_sign(&mid, self.bits) == Less { mid } else { lo };
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Enclosure with `bits` fractional bits; the polynomial changes sign
    /// between the endpoints.
    pub fn interval(&self) -> Interval {
        Interval::from_scaled(self.lo.clone(), &self.lo + 1, self.bits)
    }
}

static ALPHA_CACHE: Mutex<BTreeMap<u32, AlgebraicReal>> = Mutex::new(BTreeMap::new());

/// α to `bits` fractional bits (width `2^-bits`).
pub fn alpha_bits(bits: u32) -> Interval {
    let mut cache = ALPHA_CACHE.lock().expect("alpha cache poisoned");
    if let Some(a) = cache.get(&bits) {
        return a.interval();
    }
    let mut a = cache
        .range(..bits)
        .next_back()
        .map(|(_, a)| a.clone())
        .unwrap_or_else(AlgebraicReal::tribonacci_constant);
    a.refine_to(bits);
    let iv = a.interval();
    cache.insert(bits, a);
    iv
}

/// α with width below `10^-digits`.
pub fn alpha(digits: u32) -> Interval {
    let bits = (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + 2;
    alpha_bits(bits)
}

/// Certified data on the complex pair β, γ of the cubic.
#[derive(Clone, Debug)]
pub struct CompanionRoots {
    /// `|β| = |γ| = α^{-1/2}`.
    pub modulus: Interval,
    /// `|β − γ| = sqrt(4/α − (α − 1)²)`.
    pub gap: Interval,
    /// `cos ψ` for the polar angle ψ of β.
    pub cos_psi: Interval,
    /// Enclosure of ψ (from `acos`, widened by 1e-12 on each side).
    pub psi: (f64, f64),
}

impl CompanionRoots {
    pub fn at_bits(bits: u32) -> Self {
        let a = alpha_bits(bits);
        let one = Interval::exact(1, bits);
        let modulus = a.sqrt().and_then(|s| s.recip()).expect("alpha > 0");
        let four_over_a = Interval::exact(4, bits).div(&a).expect("alpha > 0");
        let am1 = a.sub(&one);
        let gap = four_over_a
            .sub(&am1.mul(&am1))
            .sqrt()
            .expect("discriminant is negative");
        let half = Interval::exact(1, bits).div(&Interval::exact(2, bits)).expect("2 != 0");
        // Re β = (1 − α)/2, |β| = α^{-1/2}
        let cos_psi = one.sub(&a).mul(&half).mul(&a.sqrt().expect("alpha > 0"));
        let psi = (
            cos_psi.upper_f64().clamp(-1.0, 1.0).acos() - 1e-12,
            cos_psi.lower_f64().clamp(-1.0, 1.0).acos() + 1e-12,
        );
        Self {
            modulus,
            gap,
            cos_psi,
            psi,
        }
    }

    /// Upper bound `2|β|^n / |β − γ|` on `|T_{n+1} − αT_n|`.
    pub fn delta_bound(&self, n: u32) -> Interval {
        self.modulus
            .powi(n)
            .scale(&BigInt::from(2))
            .div(&self.gap)
            .expect("gap > 0")
    }

    /// `2(α^{-m/2} + α^{-(m+1)/2}) / (|β − γ|(1 − α^{-3/2}))`: the bound on
    /// the total contribution of representation digits of index ≥ `m`.
    pub fn tail_bound(&self, m: u32) -> Interval {
        let bits = self.modulus.bits();
        let numerator = self
            .modulus
            .powi(m)
            .add(&self.modulus.powi(m + 1))
            .scale(&BigInt::from(2));
        let denom = self
            .gap
            .mul(&Interval::exact(1, bits).sub(&self.modulus.powi(3)));
        numerator.div(&denom).expect("positive denominator")
    }
}

/// Certified enclosure of `T_{n+1} − α·T_n`, refined until its sign is
/// decided. `n = 0` gives the exact zero.
pub fn delta(n: usize) -> Result<Interval, CertifyError> {
    delta_with_ceiling(n, MAX_BITS)
}

pub fn delta_with_ceiling(n: usize, max_bits: u32) -> Result<Interval, CertifyError> {
    let next = BigInt::from(tribonacci(n + 1));
    let current = BigInt::from(tribonacci(n));
    if current == BigInt::from(0) {
        return Ok(Interval::exact(next, 64));
    }
    let mut bits = 64 + 2 * n as u32;
    loop {
        let bits_now = bits.min(max_bits);
        let value = Interval::exact(next.clone(), bits_now).sub(&alpha_bits(bits_now).scale(&current));
        if !value.contains_zero() {
            return Ok(value);
        }
        if bits_now == max_bits {
            return Err(CertifyError::PrecisionCeiling(max_bits));
        }
        bits *= 2;
    }
}

/// Partition of `0..=n` by the sign of `T_{k+1} − αT_k`: indices where it
/// is nonnegative (`P`) and negative (`Q`).
pub fn sign_sequences(n: usize) -> Result<(Vec<usize>, Vec<usize>), CertifyError> {
    let mut p = Vec::new();
    let mut q = Vec::new();
    for k in 0..=n {
        if delta(k)?.is_negative() {
            q.push(k);
        } else {
            p.push(k);
        }
    }
    Ok((p, q))
}

/// `r·α^c/(α − 1)` at 30 significant digits.
pub fn entry_estimate(r: u64, c: u32) -> Interval {
    let a = alpha(30);
    let bits = a.bits();
    a.powi(c)
        .scale(&BigInt::from(r))
        .div(&a.sub(&Interval::exact(1, bits)))
        .expect("alpha > 1")
}
