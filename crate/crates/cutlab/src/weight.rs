//! Exact non-negative integer weights.
//!
//! Cut values are sums of edge weights and must never be rounded: the
//! perturbation scheme multiplies weights by `2^m` and the power-of-two
//! constructions go past 64 bits quickly. `Weight` keeps values in a
//! machine word while they fit and transparently promotes to a big
//! integer once they do not. The representation is normalized (a value
//! that fits in `u64` is always stored as `Word`), which makes the
//! derived `Eq`/`Ord`/`Hash` canonical: `Word` sorts before `Big`, and
//! under normalization every `Big` really is larger than every `Word`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Shl, Shr, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Repr {
    Word(u64),
    Big(BigUint),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Repr);

impl Weight {
    pub const ZERO: Weight = Weight(Repr::Word(0));
    pub const ONE: Weight = Weight(Repr::Word(1));

    fn from_big(b: BigUint) -> Weight {
        match b.to_u64() {
            Some(w) => Weight(Repr::Word(w)),
            None => Weight(Repr::Big(b)),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Word(0))
    }

    pub fn to_u64(&self) -> Option<u64> {
        match &self.0 {
            Repr::Word(w) => Some(*w),
            Repr::Big(_) => None,
        }
    }

    pub fn to_big(&self) -> BigUint {
        match &self.0 {
            Repr::Word(w) => BigUint::from(*w),
            Repr::Big(b) => b.clone(),
        }
    }

    /// Number of bits in the binary representation; 0 for the value 0.
    pub fn bits(&self) -> u64 {
        match &self.0 {
            Repr::Word(w) => (64 - w.leading_zeros()) as u64,
            Repr::Big(b) => b.bits(),
        }
    }

    /// 2^exp, used by the power-of-two weight constructions.
    pub fn pow2(exp: usize) -> Weight {
        if exp < 64 {
            Weight(Repr::Word(1u64 << exp))
        } else {
            Weight(Repr::Big(BigUint::from(1u8) << exp))
        }
    }

    pub fn checked_sub(&self, rhs: &Weight) -> Option<Weight> {
        match (&self.0, &rhs.0) {
            (Repr::Word(a), Repr::Word(b)) => a.checked_sub(*b).map(|w| Weight(Repr::Word(w))),
            _ => {
                let (a, b) = (self.to_big(), rhs.to_big());
                if a < b {
                    None
                } else {
                    Some(Weight::from_big(a - b))
                }
            }
        }
    }

    /// Minimal big-endian byte representation (empty for 0).
    pub fn to_bytes_be(&self) -> Vec<u8> {
        match &self.0 {
            Repr::Word(0) => Vec::new(),
            Repr::Word(w) => {
                let raw = w.to_be_bytes();
                let skip = raw.iter().take_while(|&&b| b == 0).count();
                raw[skip..].to_vec()
            }
            Repr::Big(b) => b.to_bytes_be(),
        }
    }

    pub fn from_bytes_be(bytes: &[u8]) -> Weight {
        Weight::from_big(BigUint::from_bytes_be(bytes))
    }
}

impl From<u64> for Weight {
    fn from(w: u64) -> Weight {
        Weight(Repr::Word(w))
    }
}

impl From<u32> for Weight {
    fn from(w: u32) -> Weight {
        Weight(Repr::Word(w as u64))
    }
}

impl From<BigUint> for Weight {
    fn from(b: BigUint) -> Weight {
        Weight::from_big(b)
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        match (&self.0, &rhs.0) {
            (Repr::Word(a), Repr::Word(b)) => match a.checked_add(*b) {
                Some(w) => Weight(Repr::Word(w)),
                None => Weight(Repr::Big(BigUint::from(*a) + BigUint::from(*b))),
            },
            _ => Weight::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        *self = &*self + &rhs;
    }
}

/// Panics on underflow; solver residual arithmetic never subtracts more
/// than the available capacity, so underflow is a bug, not an input error.
impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.checked_sub(rhs).expect("weight underflow")
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Mul<u64> for &Weight {
    type Output = Weight;
    fn mul(self, rhs: u64) -> Weight {
        match &self.0 {
            Repr::Word(a) => match a.checked_mul(rhs) {
                Some(w) => Weight(Repr::Word(w)),
                None => Weight::from_big(BigUint::from(*a) * rhs),
            },
            Repr::Big(b) => Weight::from_big(b * rhs),
        }
    }
}

impl Shl<usize> for &Weight {
    type Output = Weight;
    fn shl(self, rhs: usize) -> Weight {
        match &self.0 {
            Repr::Word(a) => {
                if *a == 0 {
                    Weight::ZERO
                } else if rhs < 64 && a.leading_zeros() as usize >= rhs {
                    Weight(Repr::Word(a << rhs))
                } else {
                    Weight(Repr::Big(BigUint::from(*a) << rhs))
                }
            }
            Repr::Big(b) => Weight::from_big(b << rhs),
        }
    }
}

impl Shr<usize> for &Weight {
    type Output = Weight;
    fn shr(self, rhs: usize) -> Weight {
        match &self.0 {
            Repr::Word(a) => {
                if rhs >= 64 {
                    Weight::ZERO
                } else {
                    Weight(Repr::Word(a >> rhs))
                }
            }
            Repr::Big(b) => Weight::from_big(b >> rhs),
        }
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        let mut acc = Weight::ZERO;
        for w in iter {
            acc += w;
        }
        acc
    }
}

impl<'a> Sum<&'a Weight> for Weight {
    fn sum<I: Iterator<Item = &'a Weight>>(iter: I) -> Weight {
        let mut acc = Weight::ZERO;
        for w in iter {
            acc += w;
        }
        acc
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Word(w) => write!(f, "{w}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Weight {
    type Err = String;

    /// Decimal digits only: signs, floats, and empty strings are rejected.
    fn from_str(s: &str) -> std::result::Result<Weight, String> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!(
                "invalid weight {s:?}: expected a non-negative decimal integer"
            ));
        }
        if let Ok(w) = s.parse::<u64>() {
            return Ok(Weight::from(w));
        }
        let b: BigUint = s
            .parse()
            .map_err(|e| format!("invalid weight {s:?}: {e}"))?;
        Ok(Weight::from_big(b))
    }
}
