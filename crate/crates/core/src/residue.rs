//! Residues of `Z_q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// An element of `Z_q`, stored as its representative in `[0, q-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u32,
    modulus: u32,
}

impl Residue {
    /// Reduces `value` into `Z_modulus`.
    pub fn new(value: i64, modulus: u32) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        let value = value.rem_euclid(modulus as i64) as u32;
        Ok(Self { value, modulus })
    }

    pub fn zero(modulus: u32) -> Result<Self> {
        Self::new(0, modulus)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_unit(self) -> bool {
        gcd(self.value as u64, self.modulus as u64) == 1
    }

    /// Multiplicative inverse, if `self` is a unit.
    pub fn inverse(self) -> Option<Self> {
        let (g, x, _) = ext_gcd(self.value as i64, self.modulus as i64);
        (g == 1).then(|| Self {
            value: x.rem_euclid(self.modulus as i64) as u32,
            modulus: self.modulus,
        })
    }

    fn check(self, other: Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "arithmetic between residues of different moduli"
        );
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        Self {
            value: ((self.value as u64 + rhs.value as u64) % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Self {
        Self {
            value: neg_mod(self.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        Self {
            value: ((self.value as u64 * rhs.value as u64) % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }
}

#[inline]
pub(crate) fn neg_mod(x: u32, q: u32) -> u32 {
    if x == 0 {
        0
    } else {
        q - x
    }
}

#[inline]
pub(crate) fn add_mod(x: u32, y: u32, q: u32) -> u32 {
    ((x as u64 + y as u64) % q as u64) as u32
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_negative_values() {
        let r = Residue::new(-3, 11).unwrap();
        assert_eq!(r.value(), 8);
        assert_eq!((-r).value(), 3);
    }

    #[test]
    fn rejects_trivial_modulus() {
        assert_eq!(Residue::new(0, 1), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn inverse_exists_for_units_only() {
        let three = Residue::new(3, 10).unwrap();
        assert_eq!(three.inverse().unwrap().value(), 7);
        assert!(Residue::new(4, 10).unwrap().inverse().is_none());
        for q in 2..30u32 {
            for v in 0..q {
                let r = Residue::new(v as i64, q).unwrap();
                match r.inverse() {
                    Some(inv) => assert_eq!((r * inv).value(), 1 % q),
                    None => assert!(!r.is_unit()),
                }
            }
        }
    }

    #[test]
    fn self_negative_for_even_modulus() {
        let five = Residue::new(5, 10).unwrap();
        assert_eq!(-five, five);
        assert_eq!(five - five, Residue::zero(10).unwrap());
    }
}
