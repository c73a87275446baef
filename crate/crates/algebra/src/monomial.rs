//! Monomials packed into a `u128`, one exponent byte per variable.
//!
//! Slot `k` lives in byte `k` (bits `8k..8k+8`). Exponents stay below 128 so
//! the top bit of every byte is free, which makes divisibility, lcm and gcd
//! branch-free SWAR operations.

use std::fmt;

pub const MAX_VARS: usize = 16;
pub const MAX_EXPONENT: u32 = 127;

const LOW: u128 = 0x0101_0101_0101_0101_0101_0101_0101_0101;
const HIGH: u128 = LOW << 7;
const EVEN_BYTES: u128 = 0x00FF_00FF_00FF_00FF_00FF_00FF_00FF_00FF;
const LOW16: u128 = 0x0001_0001_0001_0001_0001_0001_0001_0001;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(k: usize) -> Monomial {
        assert!(k < MAX_VARS, "variable slot {k} out of range");
        Monomial(1u128 << (8 * k))
    }

    /// `None` if a slot is out of range or an exponent exceeds [`MAX_EXPONENT`].
    pub fn from_exponents(exps: &[u32]) -> Option<Monomial> {
        if exps.len() > MAX_VARS {
            return None;
        }
        let mut packed = 0u128;
        for (k, &e) in exps.iter().enumerate() {
            if e > MAX_EXPONENT {
                return None;
            }
            packed |= (e as u128) << (8 * k);
        }
        Some(Monomial(packed))
    }

    pub fn from_packed(packed: u128) -> Monomial {
        debug_assert_eq!(packed & HIGH, 0);
        Monomial(packed)
    }

    pub fn packed(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn exponent(self, k: usize) -> u32 {
        ((self.0 >> (8 * k)) & 0xFF) as u32
    }

    pub fn exponents(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|k| self.exponent(k)).collect()
    }

    #[inline]
    pub fn degree(self) -> u32 {
        let pairs = (self.0 & EVEN_BYTES) + ((self.0 >> 8) & EVEN_BYTES);
        (pairs.wrapping_mul(LOW16) >> 112) as u32
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Panics if an exponent would exceed [`MAX_EXPONENT`].
    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    #[inline]
    pub fn checked_mul(self, other: Monomial) -> Option<Monomial> {
        let s = self.0 + other.0;
        (s & HIGH == 0).then_some(Monomial(s))
    }

    #[inline]
    pub fn divides(self, other: Monomial) -> bool {
        ((other.0 | HIGH) - self.0) & HIGH == HIGH
    }

    /// `self / d`; the caller guarantees `d` divides `self`.
    #[inline]
    pub fn div(self, d: Monomial) -> Monomial {
        debug_assert!(d.divides(self));
        Monomial(self.0 - d.0)
    }

    pub fn checked_div(self, d: Monomial) -> Option<Monomial> {
        d.divides(self).then(|| Monomial(self.0 - d.0))
    }

    #[inline]
    fn ge_mask(self, other: Monomial) -> u128 {
        let ge = ((self.0 | HIGH) - other.0) & HIGH;
        (ge >> 7) * 0xFF
    }

    #[inline]
    pub fn lcm(self, other: Monomial) -> Monomial {
        let m = self.ge_mask(other);
        Monomial((self.0 & m) | (other.0 & !m))
    }

    #[inline]
    pub fn gcd(self, other: Monomial) -> Monomial {
        let m = self.ge_mask(other);
        Monomial((other.0 & m) | (self.0 & !m))
    }

    #[inline]
    fn nonzero_lanes(self) -> u128 {
        (self.0 + LOW * 0x7F) & HIGH
    }

    #[inline]
    pub fn is_coprime(self, other: Monomial) -> bool {
        self.nonzero_lanes() & other.nonzero_lanes() == 0
    }

    /// Bit `k` set iff slot `k` has a positive exponent.
    pub fn support(self) -> u32 {
        let nz = self.nonzero_lanes();
        (0..MAX_VARS).fold(0, |acc, k| acc | (((nz >> (8 * k + 7)) & 1) as u32) << k)
    }

    /// Keeps the bytes selected by a lane mask (see [`lane_mask`]).
    #[inline]
    pub fn restrict(self, mask: u128) -> Monomial {
        Monomial(self.0 & mask)
    }
}

/// A byte mask with `0xFF` in every listed slot.
pub fn lane_mask(slots: impl IntoIterator<Item = usize>) -> u128 {
    slots.into_iter().fold(0, |m, k| {
        assert!(k < MAX_VARS, "variable slot {k} out of range");
        m | 0xFFu128 << (8 * k)
    })
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = (0..MAX_VARS)
            .rev()
            .find(|&k| self.exponent(k) > 0)
            .map_or(0, |k| k + 1);
        write!(f, "m{:?}", self.exponents(last))
    }
}
