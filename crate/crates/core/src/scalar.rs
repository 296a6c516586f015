//! Coefficient types.
//!
//! Everything in the crate that does not need integer content (gcd/lcm) is
//! written against [`Scalar`], so the same polynomial and determinant code
//! runs over `BigRational`, `Ratio<i64>` or, for quick experiments, `f64`.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num};

/// A coefficient field. Division is assumed exact whenever it is used.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive {
    fn from_u64_exact(v: u64) -> Self {
        Self::from_u64(v).expect("integer not representable in scalar type")
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive {}

/// `n!` in the scalar type.
pub fn factorial<C: Scalar>(n: u32) -> C {
    (1..=n as u64).fold(C::one(), |acc, k| acc * C::from_u64_exact(k))
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial<C: Scalar>(n: u64, k: u64) -> C {
    if k > n {
        return C::zero();
    }
    let k = k.min(n - k);
    let mut acc = C::one();
    for i in 0..k {
        acc = acc * C::from_u64_exact(n - i) / C::from_u64_exact(i + 1);
    }
    acc
}

/// Parse `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// `"p/q"` with the denominator always present, e.g. `"48/1"`.
pub fn format_fraction(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}
