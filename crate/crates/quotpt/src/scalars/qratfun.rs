//! Exact rational functions in `q` with Q[t,t^-1] numerators, the carriers
//! of the closed-form partition functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat, rat_string, QSeries, Rat, TPoly};

/// Laurent polynomial in `q` over Q[t,t^-1] divided by a polynomial in `q`
/// with rational coefficients and nonzero constant term. The nonzero
/// constant term guarantees a well-defined Laurent expansion; common
/// factors of the form q - r with rational r are cancelled and the
/// denominator is scaled to constant term 1.
#[derive(Debug, Clone)]
pub struct QRatFun {
    num: BTreeMap<i64, TPoly>,
    den: BTreeMap<i64, Rat>,
}

fn num_insert(map: &mut BTreeMap<i64, TPoly>, exp: i64, c: TPoly) {
    if c.is_zero() {
        return;
    }
    match map.entry(exp) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get() + &c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

fn num_mul(a: &BTreeMap<i64, TPoly>, b: &BTreeMap<i64, TPoly>) -> BTreeMap<i64, TPoly> {
    let mut out = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            num_insert(&mut out, ea + eb, ca * cb);
        }
    }
    out
}

fn den_insert(map: &mut BTreeMap<i64, Rat>, exp: i64, c: Rat) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(exp).or_insert_with(Rat::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(&exp);
    }
}

fn den_mul(a: &BTreeMap<i64, Rat>, b: &BTreeMap<i64, Rat>) -> BTreeMap<i64, Rat> {
    let mut out = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            den_insert(&mut out, ea + eb, ca * cb);
        }
    }
    out
}

/// Divide a rational-coefficient polynomial by (q - root), returning the
/// quotient when the division is exact.
fn den_div_linear(p: &BTreeMap<i64, Rat>, root: &Rat) -> Option<BTreeMap<i64, Rat>> {
    let deg = *p.keys().next_back()?;
    let mut quot = BTreeMap::new();
    let mut carry = Rat::zero();
    for e in (0..=deg).rev() {
        let c = p.get(&e).cloned().unwrap_or_else(Rat::zero);
        carry = c + &carry * root;
        if e > 0 {
            den_insert(&mut quot, e - 1, carry.clone());
        }
    }
    if carry.is_zero() {
        Some(quot)
    } else {
        None
    }
}

/// Same synthetic division for the numerator, which has TPoly coefficients.
fn num_div_linear(p: &BTreeMap<i64, TPoly>, root: &Rat) -> Option<BTreeMap<i64, TPoly>> {
    if p.is_empty() {
        return Some(BTreeMap::new());
    }
    let lo = *p.keys().next().unwrap();
    let hi = *p.keys().next_back().unwrap();
    let mut quot = BTreeMap::new();
    let mut carry = TPoly::zero();
    for e in (lo..=hi).rev() {
        let c = p.get(&e).cloned().unwrap_or_else(TPoly::zero);
        carry = &c + &carry.scale(root);
        if e > lo {
            num_insert(&mut quot, e - 1, carry.clone());
        }
    }
    if carry.is_zero() {
        // p = (q - root) * quot * q^lo adjusted: shift accounts for the
        // Laurent offset of the lowest stored exponent.
        Some(quot)
    } else {
        None
    }
}

impl QRatFun {
    pub fn zero() -> Self {
        QRatFun {
            num: BTreeMap::new(),
            den: [(0, rat(1))].into(),
        }
    }

    pub fn one() -> Self {
        QRatFun::constant(TPoly::one())
    }

    pub fn constant(c: TPoly) -> Self {
        QRatFun::q_monomial(c, 0)
    }

    /// c * q^exp (any sign of exp).
    pub fn q_monomial(c: TPoly, exp: i64) -> Self {
        let mut num = BTreeMap::new();
        num_insert(&mut num, exp, c);
        QRatFun {
            num,
            den: [(0, rat(1))].into(),
        }
    }

    /// 1 + q, the ubiquitous factor of the closed forms.
    pub fn one_plus_q() -> Self {
        &QRatFun::one() + &QRatFun::q_monomial(TPoly::one(), 1)
    }

    /// Multiply every numerator coefficient by a rational scalar.
    pub fn scale(&self, c: &Rat) -> QRatFun {
        if c.is_zero() {
            return QRatFun::zero();
        }
        QRatFun {
            num: self.num.iter().map(|(e, x)| (*e, x.scale(c))).collect(),
            den: self.den.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Cancel common linear factors detected by their rational roots and
    /// scale the denominator to constant term one.
    fn reduce(&mut self) {
        if self.num.is_empty() {
            self.den = [(0, rat(1))].into();
            return;
        }
        for root in [rat(1), rat(-1)] {
            loop {
                // den(root) == 0 detects the factor; both sides must divide
                // exactly for a cancellation.
                let den_at_root: Rat = self
                    .den
                    .iter()
                    .map(|(e, c)| c * super::rat_pow(&root, *e))
                    .sum();
                if !den_at_root.is_zero() {
                    break;
                }
                let den_q =
                    den_div_linear(&self.den, &root).expect("root found but division failed");
                match num_div_linear(&self.num, &root) {
                    Some(num_q) => {
                        self.den = den_q;
                        self.num = num_q;
                    }
                    None => break,
                }
            }
        }
        let c0 = self.den.get(&0).cloned().unwrap_or_else(Rat::zero);
        assert!(!c0.is_zero(), "denominator lost its constant term");
        if !c0.is_one() {
            let inv = c0.recip();
            self.den = self.den.iter().map(|(e, c)| (*e, c * &inv)).collect();
            self.num = self.num.iter().map(|(e, c)| (*e, c.scale(&inv))).collect();
        }
    }

    /// Integer power. Negative powers require the numerator to be a t-monomial
    /// multiple of a rational q-polynomial, so that it can serve as a
    /// denominator after factoring the t-monomial out.
    pub fn pow(&self, exp: i64) -> QRatFun {
        if exp < 0 {
            return self.invert().pow(-exp);
        }
        let mut acc = QRatFun::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    fn invert(&self) -> QRatFun {
        assert!(!self.is_zero(), "division by the zero rational function");
        let lo = *self.num.keys().next().unwrap();
        // Shift the numerator to nonnegative q-exponents, then split off a
        // single t-monomial so the new denominator is t-free.
        let mut t_exp: Option<i64> = None;
        for c in self.num.values() {
            let (_, e) = c
                .as_monomial()
                .expect("inverse requires t-monomial numerator coefficients");
            match t_exp {
                None => t_exp = Some(e),
                Some(known) => assert_eq!(
                    known, e,
                    "inverse requires a uniform t-power in the numerator"
                ),
            }
        }
        let t_exp = t_exp.unwrap();
        let new_den: BTreeMap<i64, Rat> = self
            .num
            .iter()
            .map(|(e, c)| {
                let (r, _) = c.as_monomial().unwrap();
                (e - lo, r)
            })
            .collect();
        let mut new_num = BTreeMap::new();
        for (e, c) in &self.den {
            num_insert(&mut new_num, e - lo, TPoly::monomial(c.clone(), -t_exp));
        }
        let mut out = QRatFun {
            num: new_num,
            den: new_den,
        };
        out.reduce();
        out
    }

    /// Laurent expansion, exact through q^order.
    pub fn expand(&self, order: i64) -> QSeries {
        if self.is_zeros_through(order) {
            return QSeries::zero(order);
        }
        let lo = *self.num.keys().next().unwrap();
        let den0 = self.den.get(&0).cloned().unwrap_or_else(Rat::zero);
        assert!(!den0.is_zero());
        let inv0 = den0.recip();
        let mut coeffs: Vec<TPoly> = Vec::new();
        for k in lo..=order {
            let mut acc = self.num.get(&k).cloned().unwrap_or_else(TPoly::zero);
            for (i, d) in self.den.iter() {
                if *i == 0 {
                    continue;
                }
                let idx = k - i - lo;
                if idx >= 0 && (idx as usize) < coeffs.len() {
                    let prev: &TPoly = &coeffs[idx as usize];
                    acc = &acc - &prev.scale(d);
                }
            }
            coeffs.push(acc.scale(&inv0));
        }
        QSeries::from_coeffs(lo, coeffs, order)
    }

    fn is_zeros_through(&self, order: i64) -> bool {
        self.is_zero() || *self.num.keys().next().unwrap() > order
    }
}

impl PartialEq for QRatFun {
    /// Exact equality by cross-multiplication; independent of the reduced
    /// representation.
    fn eq(&self, other: &Self) -> bool {
        let lhs = num_mul(
            &self.num,
            &other
                .den
                .iter()
                .map(|(e, c)| (*e, TPoly::constant(c.clone())))
                .collect(),
        );
        let rhs = num_mul(
            &other.num,
            &self
                .den
                .iter()
                .map(|(e, c)| (*e, TPoly::constant(c.clone())))
                .collect(),
        );
        lhs == rhs
    }
}

impl Eq for QRatFun {}

impl Add for &QRatFun {
    type Output = QRatFun;
    fn add(self, rhs: &QRatFun) -> QRatFun {
        let rhs_den: BTreeMap<i64, TPoly> = rhs
            .den
            .iter()
            .map(|(e, c)| (*e, TPoly::constant(c.clone())))
            .collect();
        let lhs_den: BTreeMap<i64, TPoly> = self
            .den
            .iter()
            .map(|(e, c)| (*e, TPoly::constant(c.clone())))
            .collect();
        let mut num = num_mul(&self.num, &rhs_den);
        for (e, c) in num_mul(&rhs.num, &lhs_den) {
            num_insert(&mut num, e, c);
        }
        let mut out = QRatFun {
            num,
            den: den_mul(&self.den, &rhs.den),
        };
        out.reduce();
        out
    }
}

impl Sub for &QRatFun {
    type Output = QRatFun;
    fn sub(self, rhs: &QRatFun) -> QRatFun {
        self + &(-rhs)
    }
}

impl Neg for &QRatFun {
    type Output = QRatFun;
    fn neg(self) -> QRatFun {
        QRatFun {
            num: self.num.iter().map(|(e, c)| (*e, -c)).collect(),
            den: self.den.clone(),
        }
    }
}

impl Mul for &QRatFun {
    type Output = QRatFun;
    fn mul(self, rhs: &QRatFun) -> QRatFun {
        let mut out = QRatFun {
            num: num_mul(&self.num, &rhs.num),
            den: den_mul(&self.den, &rhs.den),
        };
        out.reduce();
        out
    }
}

impl fmt::Display for QRatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let num_terms: Vec<String> = self
            .num
            .iter()
            .map(|(e, c)| match e {
                0 => format!("({})", c),
                1 => format!("({})*q", c),
                _ => format!("({})*q^{}", c, e),
            })
            .collect();
        let den_is_one =
            self.den.len() == 1 && self.den.get(&0).map(|c| c.is_one()).unwrap_or(false);
        if den_is_one {
            write!(f, "{}", num_terms.join(" + "))
        } else {
            let den_terms: Vec<String> = self
                .den
                .iter()
                .map(|(e, c)| match e {
                    0 => rat_string(c),
                    1 => format!("{}*q", rat_string(c)),
                    _ => format!("{}*q^{}", rat_string(c), e),
                })
                .collect();
            write!(
                f,
                "[{}] / [{}]",
                num_terms.join(" + "),
                den_terms.join(" + ")
            )
        }
    }
}
