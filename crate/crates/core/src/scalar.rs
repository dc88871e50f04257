//! Coefficient rings for evaluating invariants.
//!
//! Evaluation code is generic over [`Scalar`]: exact integers (`i64`,
//! `i128`, [`BigInt`]) or residues modulo a compile-time prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The Mersenne prime `2^61 - 1`.
pub const MERSENNE_61: u64 = (1 << 61) - 1;

/// A commutative ring that signed integer coefficients embed into.
pub trait Scalar:
    Clone + fmt::Debug + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    fn from_coefficient(c: i64) -> Self;

    /// `self / d` when the division is exact in this ring.
    fn divide_exact(&self, d: u64) -> Option<Self>;

    /// Rejects ill-formed rings (a composite modulus, for instance).
    fn validate() -> Result<()> {
        Ok(())
    }
}

macro_rules! primitive_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_coefficient(c: i64) -> Self {
                c as $t
            }

            fn divide_exact(&self, d: u64) -> Option<Self> {
                let d = <$t>::try_from(d).ok()?;
                (d != 0 && self % d == 0).then(|| self / d)
            }
        }
    )*};
}

primitive_scalar!(i64, i128);

impl Scalar for BigInt {
    fn from_coefficient(c: i64) -> Self {
        BigInt::from(c)
    }

    fn divide_exact(&self, d: u64) -> Option<Self> {
        let d = BigInt::from(d);
        (!d.is_zero() && (self % &d).is_zero()).then(|| self / d)
    }
}

/// An element of `Z / P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Residue<const P: u64>(u64);

impl<const P: u64> Residue<P> {
    pub fn new(x: u64) -> Self {
        Residue(x % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat's little theorem; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(P - 2))
    }
}

impl<const P: u64> fmt::Debug for Residue<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Residue<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Residue<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 as u128 + rhs.0 as u128;
        Residue((s % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Residue<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<const P: u64> Neg for Residue<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Residue(P - self.0)
        }
    }
}

impl<const P: u64> Mul for Residue<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Residue(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Zero for Residue<P> {
    fn zero() -> Self {
        Residue(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Residue<P> {
    fn one() -> Self {
        Residue(1 % P)
    }
}

impl<const P: u64> Scalar for Residue<P> {
    fn from_coefficient(c: i64) -> Self {
        let r = Residue::new(c.unsigned_abs());
        if c < 0 {
            -r
        } else {
            r
        }
    }

    /// Multiplies by the inverse of `d`, which exists whenever `P` is a
    /// prime not dividing `d`.
    fn divide_exact(&self, d: u64) -> Option<Self> {
        Residue::<P>::new(d).inverse().map(|inv| *self * inv)
    }

    fn validate() -> Result<()> {
        if is_prime(P) {
            Ok(())
        } else {
            Err(Error::NotPrime(P))
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    type R = Residue<MERSENNE_61>;

    #[test]
    fn residue_arithmetic() {
        let a = R::new(MERSENNE_61 - 1);
        assert_eq!((a + R::new(2)).value(), 1);
        assert_eq!((R::new(3) - R::new(5)).value(), MERSENNE_61 - 2);
        assert_eq!(R::from_coefficient(-1), a);
        let x = R::new(123_456_789);
        assert_eq!(x * x.inverse().unwrap(), R::one());
        assert_eq!(R::new(12).divide_exact(4).unwrap(), R::new(3));
    }

    #[test]
    fn primality() {
        assert!(is_prime(MERSENNE_61));
        assert!(is_prime(2) && is_prime(97));
        assert!(!is_prime(1) && !is_prime(91) && !is_prime(MERSENNE_61 + 2));
        assert!(R::validate().is_ok());
        assert_eq!(Residue::<91>::validate(), Err(Error::NotPrime(91)));
    }

    #[test]
    fn exact_division_on_integers() {
        assert_eq!(12i64.divide_exact(4), Some(3));
        assert_eq!(13i64.divide_exact(4), None);
        assert_eq!(BigInt::from(10).divide_exact(5), Some(BigInt::from(2)));
        assert_eq!(BigInt::from(10).divide_exact(3), None);
    }
}
