//! Exact arithmetic in prime fields F_p, p < 2^31.
//!
//! Residues are stored as `u64` in `[0, p)`. Since `p < 2^31`, products of
//! two residues fit in a `u64` without overflow, so every operation is a
//! single widening multiply or add followed by one reduction.

use crate::error::{Error, Result};

/// A prime field F_p, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Builds F_p after a deterministic primality check (trial division is
    /// exact for the supported range p < 2^31).
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary signed integer to its least non-negative residue.
    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat; panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "division by zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn div(&self, a: u64, b: u64) -> u64 {
        self.mul(a, self.inv(b))
    }

    pub fn scalar(&self, value: i64) -> Scalar {
        Scalar {
            field: *self,
            value: self.reduce(value),
        }
    }

    /// All field elements, in residue order.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.p
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A residue tied to its field. Mixing fields in arithmetic is a programmer
/// error and panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scalar {
    field: PrimeField,
    value: u64,
}

impl Scalar {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Renders as the least non-negative residue, except p-1 prints as -1.
    pub fn signed_repr(&self) -> i64 {
        if self.value == self.field.p - 1 && self.field.p > 2 {
            -1
        } else {
            self.value as i64
        }
    }

    fn check(&self, other: &Scalar) {
        assert_eq!(
            self.field, other.field,
            "scalars from different prime fields"
        );
    }
}

impl std::ops::Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.check(&rhs);
        Scalar {
            field: self.field,
            value: self.field.add(self.value, rhs.value),
        }
    }
}

impl std::ops::Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.check(&rhs);
        Scalar {
            field: self.field,
            value: self.field.sub(self.value, rhs.value),
        }
    }
}

impl std::ops::Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.check(&rhs);
        Scalar {
            field: self.field,
            value: self.field.mul(self.value, rhs.value),
        }
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: self.field,
            value: self.field.neg(self.value),
        }
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}
