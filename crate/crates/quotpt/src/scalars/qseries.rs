//! Truncated Laurent series in the box-counting variable `q`, with
//! coefficients in Q[t, t^-1].

use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_traits::Signed;

use super::{rat, rat_string, TPoly};

/// Laurent series known exactly for every exponent `<= order`. Coefficients
/// below `min_exp` are exactly zero; nothing is claimed beyond `order`.
#[derive(Debug, Clone)]
pub struct QSeries {
    min_exp: i64,
    coeffs: Vec<TPoly>,
    order: i64,
}

impl QSeries {
    /// The zero series, exact through `order`.
    pub fn zero(order: i64) -> Self {
        QSeries {
            min_exp: order + 1,
            coeffs: Vec::new(),
            order,
        }
    }

    pub fn one(order: i64) -> Self {
        QSeries::monomial(TPoly::one(), 0, order)
    }

    /// c * q^exp, exact through `order`.
    pub fn monomial(c: TPoly, exp: i64, order: i64) -> Self {
        let mut s = QSeries::zero(order);
        s.set_coeff(exp, c);
        s
    }

    pub fn from_coeffs(min_exp: i64, coeffs: Vec<TPoly>, order: i64) -> Self {
        assert_eq!(
            coeffs.len() as i64,
            (order - min_exp + 1).max(0),
            "length mismatch"
        );
        let mut s = QSeries {
            min_exp,
            coeffs,
            order,
        };
        s.normalize();
        s
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Coefficient of q^exp. Panics when `exp` lies beyond the truncation
    /// order, where the coefficient is unknown.
    pub fn coeff(&self, exp: i64) -> TPoly {
        assert!(
            exp <= self.order,
            "coefficient of q^{exp} beyond truncation order {}",
            self.order
        );
        if exp < self.min_exp {
            TPoly::zero()
        } else {
            self.coeffs[(exp - self.min_exp) as usize].clone()
        }
    }

    pub fn set_coeff(&mut self, exp: i64, c: TPoly) {
        assert!(
            exp <= self.order,
            "cannot set coefficient beyond truncation order"
        );
        if exp < self.min_exp {
            if c.is_zero() {
                return;
            }
            let pad = (self.min_exp - exp) as usize;
            let mut new_coeffs = Vec::with_capacity(pad + self.coeffs.len());
            new_coeffs.push(c);
            new_coeffs.extend(std::iter::repeat_with(TPoly::zero).take(pad - 1));
            new_coeffs.append(&mut self.coeffs);
            self.coeffs = new_coeffs;
            self.min_exp = exp;
        } else {
            self.coeffs[(exp - self.min_exp) as usize] = c;
        }
        self.normalize();
    }

    /// Exponents `min_exp..=order` paired with their coefficients.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &TPoly)> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (self.min_exp + i as i64, c))
    }

    fn normalize(&mut self) {
        while let Some(first) = self.coeffs.first() {
            if first.is_zero() {
                self.coeffs.remove(0);
                self.min_exp += 1;
            } else {
                break;
            }
        }
        if self.coeffs.is_empty() {
            self.min_exp = self.order + 1;
        }
    }

    /// Lowest nonzero term, or `None` for the (truncated) zero series.
    pub fn leading(&self) -> Option<(i64, &TPoly)> {
        self.coeffs.first().map(|c| (self.min_exp, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, order: i64) -> QSeries {
        assert!(order <= self.order, "cannot extend a truncated series");
        let len = (order - self.min_exp + 1).max(0) as usize;
        QSeries::from_coeffs(
            self.min_exp.min(order + 1),
            self.coeffs.iter().take(len).cloned().collect(),
            order,
        )
    }

    pub fn scale(&self, c: &TPoly) -> QSeries {
        let coeffs = self.coeffs.iter().map(|x| x * c).collect();
        QSeries::from_coeffs(self.min_exp, coeffs, self.order)
    }

    /// Substitute q -> -q.
    pub fn substitute_neg_q(&self) -> QSeries {
        let coeffs = self
            .iter()
            .map(|(e, c)| if e.rem_euclid(2) == 1 { -c } else { c.clone() })
            .collect();
        QSeries::from_coeffs(self.min_exp, coeffs, self.order)
    }

    /// Multiplicative inverse. The lowest coefficient must be a unit of
    /// Q[t,t^-1] (a nonzero monomial); the result is exact through
    /// `order - 2*min_exp`.
    pub fn invert(&self) -> QSeries {
        let (m, lead) = self.leading().expect("cannot invert the zero series");
        let (lc, le) = lead
            .as_monomial()
            .expect("cannot invert a series whose lowest coefficient is not a t-monomial");
        let window = (self.order - m) as usize;
        let lead_inv = TPoly::monomial(rat(1) / lc, -le);
        let mut inv: Vec<TPoly> = Vec::with_capacity(window + 1);
        inv.push(lead_inv.clone());
        for j in 1..=window {
            let mut acc = TPoly::zero();
            for i in 1..=j {
                let u = self.coeff(m + i as i64);
                if u.is_zero() {
                    continue;
                }
                acc += &(&u * &inv[j - i]);
            }
            inv.push((&-&acc) * &lead_inv);
        }
        QSeries::from_coeffs(-m, inv, self.order - 2 * m)
    }

    /// Integer power; negative exponents go through `invert`.
    pub fn pow(&self, exp: i64) -> QSeries {
        if exp < 0 {
            return self.invert().pow(-exp);
        }
        if exp == 0 {
            return QSeries::one(self.order);
        }
        let mut acc = self.clone();
        for _ in 1..exp {
            acc = &acc * self;
        }
        acc
    }

    /// True when the two series agree on every exponent where both are exact.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        let hi = self.order.min(other.order);
        let lo = self.min_exp.min(other.min_exp).min(hi);
        (lo..=hi).all(|k| self.coeff(k) == other.coeff(k))
    }
}

/// Equality means the same truncation order and the same coefficients
/// everywhere below it.
impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.agrees_with(other)
    }
}

impl Eq for QSeries {}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let order = self.order.min(rhs.order);
        let min_exp = self.min_exp.min(rhs.min_exp).min(order + 1);
        let coeffs = (min_exp..=order)
            .map(|k| {
                let a = if k <= self.order {
                    self.coeff(k)
                } else {
                    TPoly::zero()
                };
                let b = if k <= rhs.order {
                    rhs.coeff(k)
                } else {
                    TPoly::zero()
                };
                &a + &b
            })
            .collect();
        QSeries::from_coeffs(min_exp, coeffs, order)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        QSeries::from_coeffs(self.min_exp, coeffs, self.order)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        // Exactness window: the unknown tail of one factor (starting just
        // past its order) first touches the product at order + min_exp of
        // the other side, so the product is exact through
        // min(order_a + min_b, order_b + min_a). Zero-through-order series
        // participate via the min_exp = order + 1 convention.
        let order = (self.order + rhs.min_exp).min(rhs.order + self.min_exp);
        let min_exp = self.min_exp + rhs.min_exp;
        let mut coeffs = vec![TPoly::zero(); (order - min_exp + 1).max(0) as usize];
        for (i, a) in self.iter() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.iter() {
                let k = i + j;
                if k > order {
                    break;
                }
                coeffs[(k - min_exp) as usize] += &(a * b);
            }
        }
        QSeries::from_coeffs(min_exp, coeffs, order)
    }
}

/// Canonical text form, e.g. `-2*q^3 + 4*q^4 - 10*q^5`. Multi-term
/// coefficients are parenthesized.
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.iter() {
            if c.is_zero() {
                continue;
            }
            let rendered = render_coeff(c);
            let (sign_neg, body) = match rendered.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, rendered),
            };
            if first {
                if sign_neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign_neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let q_part = match m {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{}", m),
            };
            match (body.as_str(), q_part.as_str()) {
                (b, "") => write!(f, "{}", b)?,
                ("1", q) => write!(f, "{}", q)?,
                (b, q) => write!(f, "{}*{}", b, q)?,
            }
        }
        Ok(())
    }
}

/// One q-coefficient as a factor: bare for monomials, parenthesized otherwise.
fn render_coeff(c: &TPoly) -> String {
    match c.as_monomial() {
        Some((r, 0)) => rat_string(&r),
        Some((r, e)) => {
            let t_part = if e == 1 {
                "t".to_string()
            } else {
                format!("t^{}", e)
            };
            if r == super::rat(1) {
                t_part
            } else if r == super::rat(-1) {
                format!("-{}", t_part)
            } else {
                let sign = if r.is_negative() { "-" } else { "" };
                format!("{}{}*{}", sign, rat_string(&r.abs()), t_part)
            }
        }
        None => format!("({})", c),
    }
}
