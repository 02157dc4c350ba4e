//! Scalar abstraction over the number type used for probabilities.
//!
//! All probability-table and distribution arithmetic in this crate is exact
//! rational arithmetic in disguise: sums, products and convex combinations of
//! table entries. Running it over [`f64`] gives the fast path; running it over
//! [`num_rational::BigRational`] turns every dyadic claim (such as corner
//! probabilities of the form 2^-N) into an equality check instead of a
//! tolerance check.

use std::fmt::{Debug, Display};

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, NumAssign, Signed, ToPrimitive, Zero};

/// Number type usable as a probability or correlation value.
pub trait Scalar:
    Num
    + NumAssign
    + Signed
    + FromPrimitive
    + ToPrimitive
    + PartialOrd
    + Clone
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Absolute tolerance for normalization and no-signaling checks.
    ///
    /// Exact types return zero, turning every check into an equality.
    fn validation_tol() -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("small integer must be representable")
    }

    /// The fraction `num / den`.
    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().expect("scalar must be convertible to f64")
    }
}

impl Scalar for f64 {
    fn validation_tol() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    // 1e-12 is below f32 resolution; this is the analogous single-precision bar.
    fn validation_tol() -> Self {
        1e-5
    }
}

impl Scalar for BigRational {
    fn validation_tol() -> Self {
        Self::zero()
    }
}
