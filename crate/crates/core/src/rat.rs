//! Ground field: exact rationals.
//!
//! `BigRational` already maintains the invariants we need (reduced fraction,
//! positive denominator, zero is 0/1), so the engine uses it directly under
//! the alias `Rat`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;
pub type Int = BigInt;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Fraction `n/d` as a rational. Panics on `d == 0`.
pub fn ratq(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn is_int(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
