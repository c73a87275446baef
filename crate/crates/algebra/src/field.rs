use crate::AlgebraError;

/// Default characteristic.
pub const DEFAULT_PRIME: u32 = 32003;

/// The prime field GF(p) with elements stored as `u32` in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Odd primes below 2^31 only.
    pub fn new(p: u32) -> Result<Field, AlgebraError> {
        if p <= 2 || p >= 1 << 31 || !is_prime(p) {
            return Err(AlgebraError::InvalidPrime(p as u64));
        }
        Ok(Field { p })
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        t0.rem_euclid(self.p as i64) as u32
    }

    pub fn div(self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub fn from_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Symmetric representative in `-(p-1)/2..=(p-1)/2`.
    pub fn to_signed(self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Default for Field {
    fn default() -> Self {
        Field { p: DEFAULT_PRIME }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes_and_two() {
        for p in [0, 1, 2, 4, 9, 32001] {
            assert!(Field::new(p).is_err(), "{p}");
        }
        assert!(Field::new(3).is_ok());
        assert!(Field::new(32003).is_ok());
        assert!(Field::new(2_147_483_647).is_ok());
        assert!(Field::new(4_294_967_291).is_err());
    }

    #[test]
    fn inverses() {
        let f = Field::new(32003).unwrap();
        for a in [1, 2, 3, 17, 32002, 12345] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.from_i64(-1), 32002);
        assert_eq!(f.to_signed(32002), -1);
        assert_eq!(f.sub(0, 1), 32002);
        assert_eq!(f.add(32002, 1), 0);
    }
}
