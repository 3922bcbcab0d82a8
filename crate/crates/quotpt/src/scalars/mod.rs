//! Exact arithmetic foundation: rationals, Laurent polynomials in the
//! equivariant parameter `t`, truncated series and rational functions in the
//! box-counting variable `q`, and the generalized binomial coefficient.
//!
//! Everything here is exact; no floating point enters at any stage.

mod qratfun;
mod qseries;
mod tpoly;

pub use qratfun::QRatFun;
pub use qseries::QSeries;
pub use tpoly::TPoly;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator (maintained by `num-rational`).
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics on d = 0.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// n! as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=i64::from(n) {
        acc *= k;
    }
    acc
}

/// Generalized binomial coefficient `n(n-1)...(n-k+1) / k!` for any integer
/// `n` and nonnegative `k`, so the usual binomial expansion holds for
/// negative exponents as well. Always integer-valued.
pub fn binomial(n: i64, k: u32) -> Rat {
    let mut num = BigInt::one();
    for i in 0..i64::from(k) {
        num *= n - i;
    }
    Rat::new(num, factorial(k))
}

/// Integer power of a rational, with negative exponents inverting the base.
/// Panics when a zero base is raised to a negative power.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp == 0 {
        return Rat::one();
    }
    let positive = base.pow(exp.unsigned_abs().try_into().expect("exponent too large"));
    if exp > 0 {
        positive
    } else {
        assert!(!positive.is_zero(), "zero raised to a negative power");
        positive.recip()
    }
}

/// Render a rational as `n` or `n/d`.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rat_is_negative(r: &Rat) -> bool {
    r.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_standard_values() {
        assert_eq!(binomial(5, 2), rat(10));
        assert_eq!(binomial(-1, 3), rat(-1));
        assert_eq!(binomial(0, 0), rat(1));
        assert_eq!(binomial(7, 0), rat(1));
        assert_eq!(binomial(-3, 2), rat(6));
    }

    #[test]
    fn binomial_vanishes_above_nonnegative_upper_index() {
        // Needed so the finite closed-form sums terminate when d+1-g >= 0.
        for n in 0..8i64 {
            for k in (n + 1)..=(n + 5) {
                assert_eq!(binomial(n, k as u32), rat(0), "binomial({n},{k})");
            }
        }
    }

    #[test]
    fn binomial_pascal_recurrence() {
        for n in -10..=10i64 {
            for k in 1..=10u32 {
                let lhs = binomial(n, k);
                let rhs = binomial(n - 1, k - 1) + binomial(n - 1, k);
                assert_eq!(lhs, rhs, "Pascal fails at ({n},{k})");
            }
        }
    }

    #[test]
    fn binomial_is_integer_valued() {
        for n in -12..=12i64 {
            for k in 0..=12u32 {
                assert!(
                    binomial(n, k).denom().is_one(),
                    "binomial({n},{k}) not integral"
                );
            }
        }
    }

    #[test]
    fn rat_pow_inverts() {
        let half = ratio(1, 2);
        assert_eq!(rat_pow(&half, -2), rat(4));
        assert_eq!(rat_pow(&rat(3), 3), rat(27));
        assert_eq!(rat_pow(&rat(5), 0), rat(1));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
