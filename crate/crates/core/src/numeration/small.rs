//! Machine-word fast path.
//!
//! A canonical representation whose length is at most 64 is stored as a
//! bitmask: bit `k` is the digit at position `k` counted from the right.
//! Reading such a mask in binary gives exactly the Tribbinary numbers.

use std::sync::OnceLock;

/// Number of digit positions a mask can hold.
pub const POSITIONS: usize = 64;

/// `weights()[k]` is the Tribonacci number of index `k + 3`.
pub fn weights() -> &'static [u64; POSITIONS] {
    static W: OnceLock<[u64; POSITIONS]> = OnceLock::new();
    W.get_or_init(|| {
        let mut w = [0u64; POSITIONS];
        w[0] = 1;
        w[1] = 2;
        w[2] = 4;
        for k in 3..POSITIONS {
            w[k] = w[k - 1] + w[k - 2] + w[k - 3];
        }
        w
    })
}

/// Largest value whose canonical representation fits in a mask.
pub fn max_value() -> u64 {
    // Canonical words of length <= 64 are exactly the values below the
    // Tribonacci number of index 67.
    let w = weights();
    w[63] + w[62] + w[61] - 1
}

/// Tribonacci number `T_n` when it fits in a `u64`.
pub fn tribonacci(n: usize) -> Option<u64> {
    match n {
        0 | 1 => Some(0),
        2 => Some(1),
        _ => {
            let w = weights();
            let k = n - 3;
            if k < POSITIONS {
                Some(w[k])
            } else if k == POSITIONS {
                Some(w[63] + w[62] + w[61])
            } else {
                None
            }
        }
    }
}

/// Greedy canonical representation of `n` as a mask.
pub fn to_mask(mut n: u64) -> Option<u64> {
    if n > max_value() {
        return None;
    }
    let w = weights();
    let mut mask = 0u64;
    for k in (0..POSITIONS).rev() {
        if w[k] <= n {
            n -= w[k];
            mask |= 1 << k;
        }
    }
    debug_assert_eq!(n, 0);
    Some(mask)
}

/// Weighted digit sum of a mask (canonical or not).
pub fn eval_mask(mask: u64) -> u64 {
    let w = weights();
    let mut m = mask;
    let mut total = 0u64;
    while m != 0 {
        let k = m.trailing_zeros() as usize;
        total += w[k];
        m &= m - 1;
    }
    total
}

/// True when no three consecutive bits are set.
pub fn is_tribbinary(x: u64) -> bool {
    x & (x >> 1) & (x >> 2) == 0
}

/// Tribonacci successor, `None` when the shifted mask overflows.
pub fn successor(n: u64) -> Option<u64> {
    let mask = to_mask(n)?;
    if mask >> 63 != 0 {
        return None;
    }
    Some(eval_mask(mask << 1))
}

/// `k`-fold successor.
pub fn successor_k(n: u64, k: u32) -> Option<u64> {
    let mask = to_mask(n)?;
    if k >= 64 || (k > 0 && mask >> (64 - k) != 0) {
        return if mask == 0 { Some(0) } else { None };
    }
    Some(eval_mask(mask << k))
}

/// Value of the base-U word encoded by `mask` (weights 0, 1, 2, 3, 6, 11, ...).
pub fn eval_base_u(mask: u64) -> u64 {
    let w = weights();
    let mut m = mask & !1;
    let mut total = 0u64;
    while m != 0 {
        let k = m.trailing_zeros() as usize;
        total += w[k] - w[k - 1];
        m &= m - 1;
    }
    total
}

/// Row of the Trithoff array whose first column holds `v`, if `v` ends in 1.
pub fn row_number(v: u64) -> Option<u64> {
    let mask = to_mask(v)?;
    if mask & 1 == 0 {
        return None;
    }
    Some(v - eval_mask(mask >> 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_start_like_tribonacci() {
        assert_eq!(&weights()[..8], &[1, 2, 4, 7, 13, 24, 44, 81]);
    }

    #[test]
    fn max_value_is_last_representable() {
        let m = max_value();
        assert_eq!(m + 1, tribonacci(67).unwrap());
        assert!(to_mask(m).is_some());
        assert!(to_mask(m + 1).is_none());
    }

    #[test]
    fn masks_are_tribbinary() {
        for n in 0..5000u64 {
            let m = to_mask(n).unwrap();
            assert!(is_tribbinary(m));
            assert_eq!(eval_mask(m), n);
        }
    }

    #[test]
    fn nine_is_1010() {
        assert_eq!(to_mask(9), Some(0b1010));
        assert_eq!(successor(9), Some(17));
        assert_eq!(row_number(5), Some(3));
        assert_eq!(row_number(14), Some(7));
        assert_eq!(row_number(2), None);
    }
}
