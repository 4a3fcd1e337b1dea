//! Coefficient scalars for the polynomial types.
//!
//! Everything in this crate is generic over a field-like scalar exposed
//! through `num-traits`. The intended instantiation is exact rationals
//! ([`crate::Rat`]); `f64` also satisfies the bounds for quick approximate
//! experiments, but none of the exactness guarantees survive rounding.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Field-like coefficient scalar: exact rationals in the default aliases.
pub trait Scalar: Num + Clone + Neg<Output = Self> + FromPrimitive + Debug {}

impl<T: Num + Clone + Neg<Output = Self> + FromPrimitive + Debug> Scalar for T {}

/// Embed a machine integer into the scalar field.
pub fn from_int<C: Scalar>(n: i64) -> C {
    C::from_i64(n).expect("integer embeds into the coefficient field")
}

/// The fraction `num/den` in the scalar field.
pub fn ratio<C: Scalar>(num: i64, den: i64) -> C {
    assert!(den != 0, "zero denominator");
    from_int::<C>(num) / from_int::<C>(den)
}

/// Generalized binomial coefficient `C(top, k)` for integer `top` (possibly
/// negative), computed as the product `prod_{j<k} (top - j)/(j + 1)` in the
/// scalar field so no intermediate overflows machine integers.
pub fn binomial<C: Scalar>(top: i64, k: u32) -> C {
    let mut acc = C::one();
    for j in 0..k as i64 {
        acc = acc * from_int::<C>(top - j) / from_int::<C>(j + 1);
    }
    acc
}

/// `base^exp` for a signed exponent; negative exponents invert.
///
/// Panics on `0^e` with `e < 0`.
pub fn pow_int<C: Scalar>(base: &C, exp: i64) -> C {
    if exp == 0 {
        return C::one();
    }
    let mut acc = C::one();
    for _ in 0..exp.unsigned_abs() {
        acc = acc * base.clone();
    }
    if exp < 0 {
        assert!(!acc.is_zero(), "negative power of zero");
        C::one() / acc
    } else {
        acc
    }
}
