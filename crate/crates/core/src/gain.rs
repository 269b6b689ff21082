//! Exact arithmetic in the cyclic group of k-th roots of unity.
//!
//! A gain `t` in the group of order `k` stands for `exp(2πi·t/k)`. Products
//! are exponent sums and conjugates are exponent negations, both mod `k`, so
//! every combinatorial computation stays exact.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The cyclic group of `order`-th roots of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GainGroup {
    order: u32,
}

impl GainGroup {
    /// Group of the mixed-graph setting, `{1, i, -1, -i}`.
    pub const MIXED: GainGroup = GainGroup { order: 4 };

    pub fn new(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGroup);
        }
        Ok(Self { order })
    }

    pub fn order(self) -> u32 {
        self.order
    }

    pub fn one(self) -> Gain {
        Gain { exp: 0, order: self.order }
    }

    /// Element `exp(2πi·exp/k)`; `exp` is reduced mod `k`.
    pub fn element(self, exp: i64) -> Gain {
        Gain { exp: exp.rem_euclid(self.order as i64) as u32, order: self.order }
    }

    /// Like [`GainGroup::element`] but rejects exponents outside `[0, k)`.
    pub fn checked_element(self, exp: i64) -> Result<Gain> {
        if exp < 0 || exp >= self.order as i64 {
            return Err(Error::ExponentOutOfRange { exp, order: self.order });
        }
        Ok(self.element(exp))
    }

    /// `-1`, present only for even order.
    pub fn minus_one(self) -> Option<Gain> {
        self.order.is_multiple_of(2).then(|| self.element(self.order as i64 / 2))
    }

    /// `i`, present only when 4 divides the order.
    pub fn imaginary_unit(self) -> Option<Gain> {
        self.order.is_multiple_of(4).then(|| self.element(self.order as i64 / 4))
    }

    pub fn elements(self) -> impl Iterator<Item = Gain> {
        (0..self.order).map(move |exp| Gain { exp, order: self.order })
    }
}

impl Default for GainGroup {
    fn default() -> Self {
        Self::MIXED
    }
}

/// An element of a [`GainGroup`], stored as its reduced exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Gain {
    exp: u32,
    order: u32,
}

impl Gain {
    pub fn exp(self) -> u32 {
        self.exp
    }

    pub fn group(self) -> GainGroup {
        GainGroup { order: self.order }
    }

    pub fn is_one(self) -> bool {
        self.exp == 0
    }

    /// Product, failing when the operands live in different groups.
    pub fn try_mul(self, other: Gain) -> Result<Gain> {
        if self.order != other.order {
            return Err(Error::GroupMismatch { left: self.order, right: other.order });
        }
        Ok(Gain { exp: (self.exp + other.exp) % self.order, order: self.order })
    }

    pub fn conj(self) -> Gain {
        Gain { exp: (self.order - self.exp) % self.order, order: self.order }
    }

    pub fn pow(self, e: u64) -> Gain {
        let exp = (self.exp as u64 * (e % self.order as u64)) % self.order as u64;
        Gain { exp: exp as u32, order: self.order }
    }

    /// Complex value of the gain. Multiples of a quarter turn are produced
    /// exactly, so `{1, i, -1, -i}` never carry rounding noise.
    pub fn to_complex<T: Scalar>(self) -> Complex<T> {
        let k = self.order as u64;
        let t = self.exp as u64;
        if (4 * t).is_multiple_of(k) {
            let (re, im) = match (4 * t) / k {
                0 => (1.0, 0.0),
                1 => (0.0, 1.0),
                2 => (-1.0, 0.0),
                _ => (0.0, -1.0),
            };
            return Complex::new(T::lit(re), T::lit(im));
        }
        let angle = T::TAU() * T::lit(t as f64) / T::lit(k as f64);
        Complex::new(angle.cos(), angle.sin())
    }

    /// Real part of the gain, exact for quarter turns.
    pub fn real_part<T: Scalar>(self) -> T {
        self.to_complex::<T>().re
    }
}

impl Mul for Gain {
    type Output = Gain;

    /// # Panics
    ///
    /// When the operands belong to different groups; use [`Gain::try_mul`]
    /// for a fallible product.
    fn mul(self, rhs: Gain) -> Gain {
        match self.try_mul(rhs) {
            Ok(g) => g,
            Err(e) => panic!("{e}"),
        }
    }
}

impl fmt::Display for Gain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 4 {
            let s = ["1", "i", "-1", "-i"][self.exp as usize];
            return f.write_str(s);
        }
        if self.exp == 0 {
            return f.write_str("1");
        }
        if 2 * self.exp == self.order {
            return f.write_str("-1");
        }
        write!(f, "w{}^{}", self.order, self.exp)
    }
}

/// Product `a · b`, failing on group mismatch.
pub fn gain_mul(a: Gain, b: Gain) -> Result<Gain> {
    a.try_mul(b)
}

pub fn gain_conj(a: Gain) -> Gain {
    a.conj()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(order: u32, exp: i64) -> Gain {
        GainGroup::new(order).unwrap().element(exp)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(gain_mul(g(4, 1), g(4, 1)).unwrap(), g(4, 2));
        assert_eq!(gain_mul(g(4, 1), g(4, 3)).unwrap(), g(4, 0));
        assert_eq!(gain_mul(g(6, 1), g(6, 5)).unwrap(), g(6, 0));
    }

    #[test]
    fn mul_rejects_mismatched_groups() {
        assert_eq!(gain_mul(g(4, 1), g(6, 1)), Err(Error::GroupMismatch { left: 4, right: 6 }));
    }

    #[test]
    fn conj_examples() {
        assert_eq!(gain_conj(g(4, 1)), g(4, 3));
        assert_eq!(gain_conj(g(4, 2)), g(4, 2));
        assert_eq!(gain_conj(g(4, 0)), g(4, 0));
    }

    #[test]
    fn group_axioms_exhaustive() {
        for k in 1..=12 {
            let grp = GainGroup::new(k).unwrap();
            for a in grp.elements() {
                assert_eq!(a.conj().conj(), a);
                assert!((a * a.conj()).is_one());
                for b in grp.elements() {
                    assert_eq!(a * b, b * a);
                    assert_eq!((a * b).conj(), a.conj() * b.conj());
                    for c in grp.elements() {
                        assert_eq!((a * b) * c, a * (b * c));
                    }
                }
            }
        }
    }

    #[test]
    fn quarter_turns_are_exact() {
        let z: Complex<f64> = g(4, 1).to_complex();
        assert_eq!((z.re, z.im), (0.0, 1.0));
        let z: Complex<f64> = g(8, 6).to_complex();
        assert_eq!((z.re, z.im), (0.0, -1.0));
        let z: Complex<f64> = g(6, 1).to_complex();
        assert!((z.re - 0.5).abs() < 1e-15);
        assert!((z.im - 3f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn checked_element_range() {
        let grp = GainGroup::MIXED;
        assert!(grp.checked_element(4).is_err());
        assert!(grp.checked_element(-1).is_err());
        assert_eq!(grp.checked_element(3).unwrap().exp(), 3);
        assert!(GainGroup::new(0).is_err());
    }

    #[test]
    fn display_uses_unit_names_for_order_four() {
        let names: Vec<String> = GainGroup::MIXED.elements().map(|x| x.to_string()).collect();
        assert_eq!(names, ["1", "i", "-1", "-i"]);
    }
}
