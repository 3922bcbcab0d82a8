//! Laurent polynomials in the equivariant parameter `t` over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::{rat, rat_is_negative, rat_pow, rat_string, Rat};

/// Element of Q[t, t^-1], stored as a sparse map from exponent to nonzero
/// coefficient. Zero coefficients are pruned after every operation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TPoly {
    terms: BTreeMap<i64, Rat>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        TPoly::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        TPoly::monomial(c, 0)
    }

    /// c * t^exp
    pub fn monomial(c: Rat, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        TPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        TPoly::constant(rat(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0) == rat(1)
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    /// Iterate (exponent, coefficient) pairs in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The single (coefficient, exponent) pair when `self` is a nonzero
    /// monomial, `None` otherwise.
    pub fn as_monomial(&self) -> Option<(Rat, i64)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    /// True when the polynomial is a rational constant (possibly zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn add_term(&mut self, exp: i64, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, c: &Rat) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiply by c * t^exp.
    pub fn mul_monomial(&self, c: &Rat, exp: i64) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            terms: self.terms.iter().map(|(e, x)| (e + exp, x * c)).collect(),
        }
    }

    /// Integer power. Negative exponents require the base to be a nonzero
    /// monomial c*t^k (the units of Q[t,t^-1]).
    pub fn pow(&self, exp: i64) -> TPoly {
        if exp < 0 {
            let (c, e) = self
                .as_monomial()
                .expect("negative power of a non-monomial Laurent polynomial");
            return TPoly::monomial(rat_pow(&c, exp), e * exp);
        }
        let mut acc = TPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.add_term(e, &(-c.clone()));
        }
        out
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        let mut out = TPoly::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in rhs.iter() {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        for (e, c) in rhs.iter() {
            self.add_term(e, c);
        }
    }
}

/// Canonical text form: terms sorted by exponent, e.g. `2 - 3/2*t^2 + t^5`.
impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.iter() {
            let neg = rat_is_negative(c);
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let unit = abs == rat(1);
            if e == 0 {
                write!(f, "{}", rat_string(&abs))?;
            } else {
                if !unit {
                    write!(f, "{}*", rat_string(&abs))?;
                }
                if e == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ratio;

    fn t(exp: i64) -> TPoly {
        TPoly::monomial(rat(1), exp)
    }

    #[test]
    fn monomials_multiply() {
        let lhs = TPoly::monomial(rat(2), 1);
        let rhs = TPoly::monomial(rat(3), -1);
        assert_eq!(&lhs * &rhs, TPoly::from_int(6));
    }

    #[test]
    fn cancellation_prunes_storage() {
        let diff = &t(1) - &t(1);
        assert!(diff.is_zero());
        assert_eq!(diff.num_terms(), 0);
    }

    #[test]
    fn difference_of_squares() {
        let one_plus = &TPoly::one() + &t(1);
        let one_minus = &TPoly::one() - &t(1);
        let expect = &TPoly::one() - &t(2);
        assert_eq!(&one_plus * &one_minus, expect);
    }

    #[test]
    fn negative_powers_of_monomials() {
        let m = TPoly::monomial(rat(2), 1);
        assert_eq!(m.pow(-2), TPoly::monomial(ratio(1, 4), -2));
        assert_eq!(&m.pow(-1) * &m, TPoly::one());
    }

    #[test]
    fn display_is_sorted_and_canonical() {
        let mut p = TPoly::monomial(rat(1), 2);
        p.add_term(-1, &rat(-2));
        p.add_term(0, &ratio(1, 2));
        assert_eq!(p.to_string(), "-2*t^-1 + 1/2 + t^2");
        assert_eq!(TPoly::zero().to_string(), "0");
        assert_eq!(TPoly::monomial(rat(8), 2).to_string(), "8*t^2");
    }
}
