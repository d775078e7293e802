//! Coefficient fields: the rationals and prime fields F_p.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::rational::Rational;

/// The ground field of a computation, identified by its characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime and a != 0 mod p, so a^(p-2) is the inverse.
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let p64 = p as u64;
    let mut base = a as u64 % p64;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p64;
        }
        base = base * base % p64;
        e >>= 1;
    }
    acc as u32
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// F_p for an odd prime `p`.
    pub fn prime(p: u32) -> Result<Self, AlgebraError> {
        if p == 2 || !is_prime(p) {
            return Err(AlgebraError::InvalidCharacteristic(p));
        }
        Ok(Field::Prime(p))
    }

    /// `0` selects the rationals, anything else must be an odd prime.
    pub fn from_characteristic(p: u32) -> Result<Self, AlgebraError> {
        if p == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(p)
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(Rational::ZERO),
            Field::Prime(p) => Coeff::P { v: 0, p },
        }
    }

    pub fn one(self) -> Coeff {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(Rational::from_int(n)),
            Field::Prime(p) => Coeff::P { v: n.rem_euclid(p as i64) as u32, p },
        }
    }

    /// Embeds a rational; fails when `p` divides the denominator.
    pub fn rational(self, r: &Rational) -> Result<Coeff, AlgebraError> {
        match self {
            Field::Rational => Ok(Coeff::Q(r.clone())),
            Field::Prime(p) => r
                .residue(p)
                .map(|v| Coeff::P { v, p })
                .ok_or_else(|| AlgebraError::NotInvertibleModP { value: r.clone(), p }),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// A field element. Prime-field residues carry their modulus.
///
/// Arithmetic between elements of different fields is a logic error and
/// panics; the polynomial layer rejects mismatched inputs before reaching it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(Rational),
    P { v: u32, p: u32 },
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Q(_) => Field::Rational,
            Coeff::P { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_zero(),
            Coeff::P { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_one(),
            Coeff::P { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Coeff> {
        match self {
            Coeff::Q(r) => r.recip().map(Coeff::Q),
            Coeff::P { v: 0, .. } => None,
            Coeff::P { v, p } => Some(Coeff::P { v: inv_mod(*v, *p), p: *p }),
        }
    }

    pub fn pow(&self, e: u32) -> Coeff {
        match self {
            Coeff::Q(r) => Coeff::Q(r.pow(e)),
            Coeff::P { v, p } => Coeff::P { v: pow_mod(*v, e, *p), p: *p },
        }
    }

    /// Rational value, if this is a characteristic-zero coefficient.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Coeff::Q(r) => Some(r),
            Coeff::P { .. } => None,
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_negative(),
            Coeff::P { .. } => false,
        }
    }

    fn mismatch(a: &Coeff, b: &Coeff) -> ! {
        panic!("coefficient field mismatch: {} vs {}", a.field(), b.field())
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a + b),
            (Coeff::P { v: a, p }, Coeff::P { v: b, p: q }) if p == q => {
                Coeff::P { v: ((*a as u64 + *b as u64) % *p as u64) as u32, p: *p }
            }
            _ => Coeff::mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a * b),
            (Coeff::P { v: a, p }, Coeff::P { v: b, p: q }) if p == q => {
                Coeff::P { v: ((*a as u64 * *b as u64) % *p as u64) as u32, p: *p }
            }
            _ => Coeff::mismatch(self, rhs),
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Q(a) => Coeff::Q(-a),
            Coeff::P { v: 0, p } => Coeff::P { v: 0, p: *p },
            Coeff::P { v, p } => Coeff::P { v: p - v, p: *p },
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(r) => fmt::Display::fmt(r, f),
            Coeff::P { v, .. } => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(r) => write!(f, "{r}"),
            Coeff::P { v, p } => write!(f, "{v} (mod {p})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_two_and_composites() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert_eq!(Field::prime(5).unwrap().characteristic(), 5);
    }

    #[test]
    fn six_is_one_mod_five() {
        let f = Field::Prime(5);
        assert_eq!(&f.int(3) + &f.int(3), f.int(1));
        assert_eq!(f.int(-1), f.int(4));
        assert_eq!(f.int(2).inv().unwrap(), f.int(3));
    }

    #[test]
    fn rational_embedding_mod_p() {
        let f = Field::Prime(3);
        assert!(f.rational(&Rational::new(1, 3)).is_err());
        assert_eq!(f.rational(&Rational::new(1, 2)).unwrap(), f.int(2));
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_characteristic_panics() {
        let _ = &Field::Prime(5).int(1) + &Field::Prime(7).int(1);
    }
}
