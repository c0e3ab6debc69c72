//! Scalar abstraction for exact elimination.
//!
//! All matrix entries produced by the complex builders are small integers;
//! elimination happens over a coefficient field chosen at run time. The
//! [`Scalar`] trait captures exactly the operations the eliminators need and
//! is implemented by [`num_rational::BigRational`] and by [`Fp`], a prime
//! field element that carries its modulus.

use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Field scalar usable by the generic elimination routines.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
        + Div<Output = Self>
{
}

/// Element of a prime field `F_p` with the modulus stored alongside the
/// value.
///
/// `Zero::zero()` and `One::one()` cannot know a modulus, so the constants
/// carry modulus 0 and adopt the modulus of the other operand on first use.
/// Mixing two distinct nonzero moduli is a programming error and panics.
#[derive(Debug, Clone, Copy)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, p: u64) -> Self {
        debug_assert!(p >= 2);
        let m = p as i64;
        let v = ((value % m) + m) % m;
        Fp {
            value: v as u64,
            modulus: p,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    fn join(a: u64, b: u64) -> u64 {
        match (a, b) {
            (0, m) | (m, 0) => m,
            (m, n) => {
                assert_eq!(m, n, "mixed prime-field moduli {m} and {n}");
                m
            }
        }
    }

    fn reduce(value: u64, modulus: u64) -> Fp {
        let value = if modulus == 0 { value } else { value % modulus };
        Fp { value, modulus }
    }

    fn inverse(&self) -> Fp {
        assert!(self.value != 0, "division by zero in F_p");
        assert!(self.modulus != 0, "inverse of a modulus-free constant");
        // extended Euclid on (value, modulus)
        let (mut r0, mut r1) = (self.modulus as i128, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "modulus must be prime");
        let p = self.modulus as i128;
        let inv = ((t0 % p) + p) % p;
        Fp {
            value: inv as u64,
            modulus: self.modulus,
        }
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        match (self.modulus, other.modulus) {
            (0, _) | (_, 0) => self.value == other.value,
            (m, n) => m == n && self.value == other.value,
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let m = Fp::join(self.modulus, rhs.modulus);
        Fp::reduce(self.value + rhs.value, m)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let m = Fp::join(self.modulus, rhs.modulus);
        if m == 0 {
            // both are 0/1 constants; only 0-0 and 1-1 and 1-0 stay representable
            assert!(self.value >= rhs.value, "modulus-free underflow");
            return Fp::reduce(self.value - rhs.value, 0);
        }
        Fp::reduce(self.value + m - rhs.value % m, m)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.value == 0 {
            self
        } else {
            assert!(self.modulus != 0, "negating a modulus-free constant");
            Fp::reduce(self.modulus - self.value, self.modulus)
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let m = Fp::join(self.modulus, rhs.modulus);
        if m == 0 {
            return Fp::reduce(self.value * rhs.value, 0);
        }
        let prod = (self.value as u128 * rhs.value as u128 % m as u128) as u64;
        Fp { value: prod, modulus: m }
    }
}

impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        let m = Fp::join(self.modulus, rhs.modulus);
        if rhs.value == 1 && rhs.modulus == 0 {
            return self;
        }
        let rhs = Fp { value: rhs.value, modulus: m };
        self * rhs.inverse()
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp { value: 0, modulus: 0 }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp { value: 1, modulus: 0 }
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_7() {
        let a = Fp::new(3, 7);
        let b = Fp::new(5, 7);
        assert_eq!(a + b, Fp::new(1, 7));
        assert_eq!(a - b, Fp::new(-2, 7));
        assert_eq!(a * b, Fp::new(1, 7));
        assert_eq!(a / b, Fp::new(3 * 3, 7)); // 5^{-1} = 3 mod 7
        assert_eq!(-a, Fp::new(4, 7));
    }

    #[test]
    fn constants_adopt_modulus() {
        let a = Fp::new(4, 5);
        assert_eq!(a + Fp::zero(), a);
        assert_eq!(a * Fp::one(), a);
        assert!((a - a).is_zero());
    }

    #[test]
    fn negative_values_reduce() {
        assert_eq!(Fp::new(-1, 3), Fp::new(2, 3));
        assert_eq!(Fp::new(-6, 3), Fp::new(0, 3));
    }
}
