//! Coefficient fields for the Gröbner kernel: the rationals, and a word-size
//! prime field used for fast probing.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::exactmat::Scalar;

pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }
}

impl Coeff for Scalar {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Residues modulo the prime `2^31 - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp(u32);

impl Fp {
    pub const P: u64 = 2_147_483_647;

    fn from_bigint(b: &BigInt) -> Self {
        let p = BigInt::from(Self::P);
        let r = ((b % &p) + &p) % &p;
        Fp(r.to_u32().expect("reduced residue"))
    }

    /// Image of a rational; `None` when the denominator vanishes mod p.
    pub fn from_scalar(s: &Scalar) -> Option<Self> {
        let d = Self::from_bigint(s.denom());
        (d.0 != 0).then(|| Self::from_bigint(s.numer()).mul(&d.inv()))
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % Self::P;
            }
            base = base * base % Self::P;
            e >>= 1;
        }
        Fp(acc as u32)
    }
}

impl Coeff for Fp {
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn is_one(&self) -> bool {
        self.0 == 1
    }
    fn add(&self, o: &Self) -> Self {
        Fp(((self.0 as u64 + o.0 as u64) % Self::P) as u32)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp((self.0 as u64 * o.0 as u64 % Self::P) as u32)
    }
    fn neg(&self) -> Self {
        Fp(((Self::P - self.0 as u64) % Self::P) as u32)
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(Self::P - 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::frac;

    #[test]
    fn prime_field_arithmetic() {
        let a = Fp(12345);
        assert!(a.mul(&a.inv()).is_one());
        assert!(a.add(&a.neg()).is_zero());
        assert!(Fp::from_scalar(&frac(1, 2)).unwrap().mul(&Fp(2)).is_one());
        assert_eq!(Fp::from_scalar(&frac(-3, 1)).unwrap(), Fp((Fp::P - 3) as u32));
        assert_eq!(Fp::from_scalar(&frac(1, Fp::P as i64)), None);
    }
}
