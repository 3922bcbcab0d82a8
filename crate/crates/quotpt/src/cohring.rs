//! The truncated graded ring Q[t,t^-1][a1, a2, th1, th2, B] housing every
//! localization integrand.
//!
//! All five generators commute. th1, th2 are nilpotent above the genus, B
//! above twice the genus, and every class is truncated at a complex degree
//! bound chosen by the caller (the virtual dimension of the component being
//! integrated, since only top-degree terms survive integration).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::scalars::{binomial, factorial, rat, Rat, TPoly};
use crate::{Error, Result};

/// Exponent vector of a monomial a1^p1 a2^p2 th1^j th2^k B^l.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct CohMono {
    pub a1: u32,
    pub a2: u32,
    pub th1: u32,
    pub th2: u32,
    pub bb: u32,
}

impl CohMono {
    pub const ONE: CohMono = CohMono {
        a1: 0,
        a2: 0,
        th1: 0,
        th2: 0,
        bb: 0,
    };

    pub fn degree(&self) -> u32 {
        self.a1 + self.a2 + self.th1 + self.th2 + self.bb
    }

    fn combine(&self, other: &CohMono) -> CohMono {
        CohMono {
            a1: self.a1 + other.a1,
            a2: self.a2 + other.a2,
            th1: self.th1 + other.th1,
            th2: self.th2 + other.th2,
            bb: self.bb + other.bb,
        }
    }
}

/// Shared context: genus and truncation degree. Classes from different
/// contexts never mix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CohRing {
    pub genus: i64,
    pub max_deg: u32,
}

impl CohRing {
    pub fn new(genus: i64, max_deg: u32) -> Self {
        assert!(genus >= 0, "genus must be nonnegative");
        CohRing { genus, max_deg }
    }

    fn admissible(&self, m: &CohMono) -> bool {
        i64::from(m.th1) <= self.genus
            && i64::from(m.th2) <= self.genus
            && i64::from(m.bb) <= 2 * self.genus
            && m.degree() <= self.max_deg
    }

    pub fn zero(&self) -> CohClass {
        CohClass {
            ring: *self,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> CohClass {
        self.scalar(TPoly::one())
    }

    pub fn scalar(&self, c: TPoly) -> CohClass {
        self.monomial(CohMono::ONE, c)
    }

    pub fn monomial(&self, m: CohMono, c: TPoly) -> CohClass {
        let mut cls = self.zero();
        cls.add_term(m, &c);
        cls
    }

    pub fn a1(&self) -> CohClass {
        self.monomial(
            CohMono {
                a1: 1,
                ..CohMono::ONE
            },
            TPoly::one(),
        )
    }

    pub fn a2(&self) -> CohClass {
        self.monomial(
            CohMono {
                a2: 1,
                ..CohMono::ONE
            },
            TPoly::one(),
        )
    }

    pub fn theta1(&self) -> CohClass {
        self.monomial(
            CohMono {
                th1: 1,
                ..CohMono::ONE
            },
            TPoly::one(),
        )
    }

    pub fn theta2(&self) -> CohClass {
        self.monomial(
            CohMono {
                th2: 1,
                ..CohMono::ONE
            },
            TPoly::one(),
        )
    }

    /// The cross-term class B pairing the two odd blocks.
    pub fn cross(&self) -> CohClass {
        self.monomial(
            CohMono {
                bb: 1,
                ..CohMono::ONE
            },
            TPoly::one(),
        )
    }

    /// The equivariant scalar w*t.
    pub fn t_scalar(&self, w: i64) -> CohClass {
        self.scalar(TPoly::monomial(rat(w), 1))
    }
}

/// Sparse class: finite map from admissible monomials to nonzero Laurent
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohClass {
    ring: CohRing,
    terms: BTreeMap<CohMono, TPoly>,
}

impl CohClass {
    pub fn ring(&self) -> CohRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &CohMono) -> TPoly {
        self.terms.get(m).cloned().unwrap_or_else(TPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CohMono, &TPoly)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: CohMono, c: &TPoly) {
        if c.is_zero() || !self.ring.admissible(&m) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &TPoly) -> CohClass {
        if c.is_zero() {
            return self.ring.zero();
        }
        CohClass {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// The coefficient of the identity monomial: the part with no a, theta
    /// or B factors.
    pub fn generator_free_part(&self) -> TPoly {
        self.coeff(&CohMono::ONE)
    }

    /// Strictly positive-degree part.
    fn nilpotent_part(&self) -> CohClass {
        CohClass {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() > 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Integer power in the truncated ring. Negative exponents require the
    /// generator-free part to be a single nonzero t-monomial, the units of
    /// the localized ring; the nilpotent remainder is expanded by the
    /// binomial series, finite by truncation.
    pub fn pow(&self, exp: i64) -> Result<CohClass> {
        if exp >= 0 {
            let mut acc = self.ring.one();
            for _ in 0..exp {
                acc = &acc * self;
            }
            return Ok(acc);
        }
        let unit = self.generator_free_part();
        let (c, e) = unit.as_monomial().ok_or(Error::NotInvertible)?;
        let unit_inv = TPoly::monomial(rat(1) / &c, -e);
        let nil = self.nilpotent_part().scale(&unit_inv);
        // (u(1+nu))^exp = u^exp * sum_m binomial(exp, m) nu^m
        let mut acc = self.ring.zero();
        let mut nu_pow = self.ring.one();
        for m in 0..=self.ring.max_deg {
            let coef = binomial(exp, m);
            if !coef.is_zero() {
                acc = &acc + &nu_pow.scale(&TPoly::constant(coef));
            }
            if m < self.ring.max_deg {
                nu_pow = &nu_pow * &nil;
                if nu_pow.is_zero() {
                    break;
                }
            }
        }
        Ok(acc.scale(&unit.pow(exp)))
    }

    /// Exponential of a nilpotent class: sum_m x^m / m!, finite by
    /// truncation. Errors when the generator-free part is nonzero.
    pub fn exp(&self) -> Result<CohClass> {
        if !self.generator_free_part().is_zero() {
            return Err(Error::NonNilpotentExponential);
        }
        let mut acc = self.ring.one();
        let mut x_pow = self.ring.one();
        for m in 1..=self.ring.max_deg {
            x_pow = &x_pow * self;
            if x_pow.is_zero() {
                break;
            }
            let inv_fact = Rat::new(1.into(), factorial(m));
            acc = &acc + &x_pow.scale(&TPoly::constant(inv_fact));
        }
        Ok(acc)
    }

    /// When every (t-exponent, monomial) pair satisfies
    /// t-exponent + complex degree = c for one constant c, returns it.
    pub fn homogeneity_constant(&self) -> Option<i64> {
        let mut constant = None;
        for (m, c) in &self.terms {
            for (t_exp, _) in c.iter() {
                let total = t_exp + i64::from(m.degree());
                match constant {
                    None => constant = Some(total),
                    Some(k) if k == total => {}
                    Some(_) => return None,
                }
            }
        }
        constant
    }
}

impl Add for &CohClass {
    type Output = CohClass;
    fn add(self, rhs: &CohClass) -> CohClass {
        assert_eq!(self.ring, rhs.ring, "mixed ring contexts");
        let mut out = self.clone();
        for (m, c) in rhs.iter() {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &CohClass {
    type Output = CohClass;
    fn sub(self, rhs: &CohClass) -> CohClass {
        self + &(-rhs)
    }
}

impl Neg for &CohClass {
    type Output = CohClass;
    fn neg(self) -> CohClass {
        CohClass {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &CohClass {
    type Output = CohClass;
    fn mul(self, rhs: &CohClass) -> CohClass {
        assert_eq!(self.ring, rhs.ring, "mixed ring contexts");
        let mut out = self.ring.zero();
        for (m1, c1) in self.iter() {
            for (m2, c2) in rhs.iter() {
                let m = m1.combine(m2);
                if !self.ring.admissible(&m) {
                    continue;
                }
                out.add_term(m, &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mut gens = String::new();
            for (name, e) in [
                ("a1", m.a1),
                ("a2", m.a2),
                ("th1", m.th1),
                ("th2", m.th2),
                ("B", m.bb),
            ] {
                match e {
                    0 => {}
                    1 => gens.push_str(&format!("*{}", name)),
                    _ => gens.push_str(&format!("*{}^{}", name, e)),
                }
            }
            parts.push(format!("({}){}", c, gens));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ratio;

    #[test]
    fn square_of_a_sum() {
        let r = CohRing::new(2, 4);
        let s = &r.a1() + &r.a2();
        let sq = &s * &s;
        assert_eq!(
            sq.coeff(&CohMono {
                a1: 2,
                ..CohMono::ONE
            }),
            TPoly::one()
        );
        assert_eq!(
            sq.coeff(&CohMono {
                a1: 1,
                a2: 1,
                ..CohMono::ONE
            }),
            TPoly::from_int(2)
        );
        assert_eq!(
            sq.coeff(&CohMono {
                a2: 2,
                ..CohMono::ONE
            }),
            TPoly::one()
        );
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn theta_is_nilpotent_above_genus() {
        let r = CohRing::new(1, 4);
        let th = r.theta1();
        assert!((&th * &th).is_zero());
    }

    #[test]
    fn scalars_act_coefficientwise() {
        let r = CohRing::new(1, 2);
        let t_theta = &r.t_scalar(1) * &r.theta1();
        assert_eq!(
            t_theta.coeff(&CohMono {
                th1: 1,
                ..CohMono::ONE
            }),
            TPoly::monomial(rat(1), 1)
        );
    }

    #[test]
    fn geometric_inverse_of_a_minus_t() {
        // (a1 - t)^-1 at max_deg 2: -t^-1 - t^-2 a1 - t^-3 a1^2
        let r = CohRing::new(0, 2);
        let base = &r.a1() - &r.t_scalar(1);
        let inv = base.pow(-1).unwrap();
        assert_eq!(inv.coeff(&CohMono::ONE), TPoly::monomial(rat(-1), -1));
        assert_eq!(
            inv.coeff(&CohMono {
                a1: 1,
                ..CohMono::ONE
            }),
            TPoly::monomial(rat(-1), -2)
        );
        assert_eq!(
            inv.coeff(&CohMono {
                a1: 2,
                ..CohMono::ONE
            }),
            TPoly::monomial(rat(-1), -3)
        );
        assert_eq!(&inv * &base, r.one());
    }

    #[test]
    fn negative_power_of_scalar_unit() {
        let r = CohRing::new(0, 1);
        let inv_sq = r.t_scalar(2).pow(-2).unwrap();
        assert_eq!(
            inv_sq.generator_free_part(),
            TPoly::monomial(ratio(1, 4), -2)
        );
    }

    #[test]
    fn binomial_theorem_coefficient() {
        let r = CohRing::new(0, 4);
        let base = &r.t_scalar(1) + &r.a1();
        let fourth = base.pow(4).unwrap();
        assert_eq!(
            fourth.coeff(&CohMono {
                a1: 1,
                ..CohMono::ONE
            }),
            TPoly::monomial(rat(4), 3)
        );
    }

    #[test]
    fn non_unit_base_rejected() {
        let r = CohRing::new(1, 2);
        let base = &r.a1() - &r.t_scalar(1); // fine
        assert!(base.pow(-1).is_ok());
        let bad = &(&r.t_scalar(1) + &r.one()) + &r.a1(); // 1 + t is not a monomial
        assert_eq!(bad.pow(-1), Err(Error::NotInvertible));
    }

    #[test]
    fn exponentials_of_nilpotents() {
        let r1 = CohRing::new(1, 1);
        assert_eq!(r1.zero().exp().unwrap(), r1.one());

        // exp(-th1/t) at g=1: 1 - t^-1 th1, since th1^2 = 0
        let x = r1.theta1().scale(&TPoly::monomial(rat(-1), -1));
        let e = x.exp().unwrap();
        assert_eq!(e.coeff(&CohMono::ONE), TPoly::one());
        assert_eq!(
            e.coeff(&CohMono {
                th1: 1,
                ..CohMono::ONE
            }),
            TPoly::monomial(rat(-1), -1)
        );
        assert_eq!(e.num_terms(), 2);

        // exp(th1 + th2) at g=1, max_deg 2: 1 + th1 + th2 + th1 th2
        let r2 = CohRing::new(1, 2);
        let e2 = (&r2.theta1() + &r2.theta2()).exp().unwrap();
        assert_eq!(e2.num_terms(), 4);
        assert_eq!(
            e2.coeff(&CohMono {
                th1: 1,
                th2: 1,
                ..CohMono::ONE
            }),
            TPoly::one()
        );

        assert_eq!(r2.one().exp(), Err(Error::NonNilpotentExponential));
    }

    proptest::proptest! {
        #[test]
        fn ring_axioms_on_random_classes(seed_a in sample_class(), seed_b in sample_class(), seed_c in sample_class()) {
            let (a, b, c) = (seed_a, seed_b, seed_c);
            proptest::prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            proptest::prop_assert_eq!(&a * &b, &b * &a);
            proptest::prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn inverse_multiplies_to_one(unit_w in 1i64..4, scale in 1i64..5, cls in sample_class()) {
            let r = cls.ring();
            let base = &r.scalar(TPoly::monomial(rat(scale), unit_w)) + &cls.nilpotent_part();
            let inv = base.pow(-1).unwrap();
            proptest::prop_assert_eq!(&inv * &base, r.one());
        }

        #[test]
        fn exp_is_a_homomorphism(x in sample_class(), y in sample_class()) {
            let (x, y) = (x.nilpotent_part(), y.nilpotent_part());
            let lhs = (&x + &y).exp().unwrap();
            let rhs = &x.exp().unwrap() * &y.exp().unwrap();
            proptest::prop_assert_eq!(lhs, rhs);
        }

        /// Powers of units add exponents across the positive/negative split,
        /// exercising the binomial-series path against plain multiplication.
        #[test]
        fn unit_powers_add_exponents(
            cls in sample_class(),
            unit_w in -2i64..=2,
            a in -3i64..=3,
            b in -3i64..=3,
        ) {
            let r = cls.ring();
            let w = if unit_w == 0 { 1 } else { unit_w };
            let base = &r.scalar(TPoly::monomial(rat(w), 1)) + &cls.nilpotent_part();
            let lhs = &base.pow(a).unwrap() * &base.pow(b).unwrap();
            let rhs = base.pow(a + b).unwrap();
            proptest::prop_assert_eq!(lhs, rhs);
        }
    }

    /// Random classes in a fixed genus-2, degree-3 context with small
    /// coefficients.
    fn sample_class() -> impl proptest::strategy::Strategy<Value = CohClass> {
        use proptest::prelude::*;
        let mono =
            (0u32..3, 0u32..3, 0u32..2, 0u32..2, 0u32..2).prop_map(|(a1, a2, th1, th2, bb)| {
                CohMono {
                    a1,
                    a2,
                    th1,
                    th2,
                    bb,
                }
            });
        let term = (mono, -3i64..=3, -1i64..=1);
        proptest::collection::vec(term, 0..6).prop_map(|terms| {
            let ring = CohRing::new(2, 3);
            let mut cls = ring.zero();
            for (m, c, e) in terms {
                cls = &cls + &ring.monomial(m, TPoly::monomial(rat(c), e));
            }
            cls
        })
    }
}
