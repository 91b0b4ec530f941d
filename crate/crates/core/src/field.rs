//! Prime fields F_p with p < 2^16.

use crate::error::{Error, Result};

/// A prime field F_p. Residues are handled as `u32` in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u16,
}

impl PrimeField {
    /// Builds F_p, rejecting non-prime moduli.
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || p >= (1 << 16) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u16 })
    }

    /// The binary field F_2.
    pub fn f2() -> Self {
        PrimeField { p: 2 }
    }

    pub fn modulus(&self) -> u32 {
        u32::from(self.p)
    }

    pub fn is_binary(&self) -> bool {
        self.p == 2
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.modulus()
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.modulus() { s - self.modulus() } else { s }
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b { a - b } else { a + self.modulus() - b }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 { 0 } else { self.modulus() - a }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        // p < 2^16, so the product of two residues fits in u32.
        (a * b) % self.modulus()
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0 && a < self.modulus());
        // Fermat: a^(p-2) mod p.
        self.pow(a, self.modulus() as u64 - 2)
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        base %= self.modulus();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn reduce(&self, a: u64) -> u32 {
        (a % u64::from(self.modulus())) as u32
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_primes_rejects_composites() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(65521).is_ok()); // largest prime below 2^16
        assert!(matches!(PrimeField::new(1), Err(Error::NotPrime(1))));
        assert!(matches!(PrimeField::new(4), Err(Error::NotPrime(4))));
        assert!(matches!(PrimeField::new(0), Err(Error::NotPrime(0))));
        assert!(matches!(PrimeField::new(65536), Err(Error::NotPrime(_))));
    }

    #[test]
    fn arithmetic_mod_p() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(3, 5), 1);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.neg(3), 4);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), 5);
        assert_eq!(f.pow(3, 6), 1);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn binary_field() {
        let f = PrimeField::f2();
        assert!(f.is_binary());
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.inv(1), 1);
    }
}
