//! Counting words over `{1, i, -i}` by the product of their letters.
//!
//! `α_x(n)` is the number of words of length `n` over `{1, i, -i}` whose
//! product is `x`. It is also the size of the switching class of a mixed
//! `n`-cycle with cycle gain `x`. The vector `α(n)`, ordered as
//! `(α_1, α_-1, α_i, α_-i)`, satisfies `α(n) = L α(n-1)` with `α(0) = e_1`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gain::Gain;

/// The transfer matrix `[[I, J], [J, I]]` in `(1, -1, i, -i)` order.
const TRANSFER: [[u8; 4]; 4] = [[1, 0, 1, 1], [0, 1, 1, 1], [1, 1, 1, 0], [1, 1, 0, 1]];

/// Position of a mixed-group gain in `(1, -1, i, -i)` order.
pub fn slot(x: Gain) -> Result<usize> {
    if x.group().order() != 4 {
        return Err(Error::MixedModeOrder(x.group().order()));
    }
    Ok([0, 2, 1, 3][x.exp() as usize])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCountVector {
    n: usize,
    alpha: [BigUint; 4],
}

impl ClassCountVector {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `(α_1, α_-1, α_i, α_-i)`.
    pub fn components(&self) -> &[BigUint; 4] {
        &self.alpha
    }

    pub fn get(&self, x: Gain) -> Result<&BigUint> {
        Ok(&self.alpha[slot(x)?])
    }

    pub fn total(&self) -> BigUint {
        self.alpha.iter().sum()
    }
}

impl Serialize for ClassCountVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.alpha.iter().map(|a| a.to_string()).collect();
        strs.serialize(s)
    }
}

/// `α(n)` by iterating the transfer matrix from `α(0) = (1, 0, 0, 0)`.
pub fn alpha_vector(n: usize) -> ClassCountVector {
    let mut alpha: [BigUint; 4] = [BigUint::one(), BigUint::zero(), BigUint::zero(), BigUint::zero()];
    for _ in 0..n {
        alpha = std::array::from_fn(|r| (0..4).filter(|&c| TRANSFER[r][c] == 1).map(|c| alpha[c].clone()).sum());
    }
    ClassCountVector { n, alpha }
}

/// `α(n)` as the first column of the closed form of `L^n`:
/// `(3^n + 1)/4 · J - Q` for odd `n` and `(3^n - 1)/4 · J + I` for even `n`,
/// where `Q = J - L`.
pub fn alpha_closed_form(n: usize) -> ClassCountVector {
    let three_n = BigInt::from(3u8).pow(n as u32);
    let first_column: [BigInt; 4] = if n % 2 == 1 {
        let scale: BigInt = (three_n + 1) / 4;
        std::array::from_fn(|r| {
            let q = 1 - BigInt::from(TRANSFER[r][0]);
            &scale - q
        })
    } else {
        let scale: BigInt = (three_n - 1) / 4;
        std::array::from_fn(|r| if r == 0 { &scale + 1 } else { scale.clone() })
    };
    let alpha = first_column.map(|x| {
        debug_assert!(!x.is_negative());
        x.to_biguint().expect("class counts are nonnegative")
    });
    ClassCountVector { n, alpha }
}

/// `α_x(n)`.
pub fn alpha(n: usize, x: Gain) -> Result<BigUint> {
    Ok(alpha_vector(n).get(x)?.clone())
}

/// Size of the switching class of a mixed `n`-cycle whose cycle gain is `zeta`.
pub fn cycle_class_size(n: usize, zeta: Gain) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let s = slot(zeta)?;
    let three_n = BigUint::from(3u8).pow(n as u32);
    let size = match (n % 2 == 1, s) {
        (true, 1) => (three_n - 3u8) / 4u8,
        (true, _) => (three_n + 1u8) / 4u8,
        (false, 0) => (three_n + 3u8) / 4u8,
        (false, _) => (three_n - 1u8) / 4u8,
    };
    Ok(size)
}
