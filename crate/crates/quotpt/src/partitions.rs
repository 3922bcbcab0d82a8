//! Closed-form partition functions and correspondence checks: the exact
//! rational form of the stable-pairs series, its sine-form counterpart on
//! the Gromov-Witten side, the MacMahon degree-zero series, and maximal
//! subbundle counts.
//!
//! The change of variables between the two sides never touches complex
//! exponentials: everything is routed through the algebraic bridge
//! s = (2 sin u/2)^2 = q^-1 (1+q)^2, keeping all computations rational.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::localization::{minimal_chi, GeomData};
use crate::scalars::{binomial, rat, rat_pow, ratio, QRatFun, QSeries, TPoly};

/// The substitution target for s: q^-1 (1+q)^2.
pub fn s_bridge() -> QRatFun {
    &QRatFun::q_monomial(TPoly::one(), -1) * &QRatFun::one_plus_q().pow(2)
}

/// 1 - s/4 under the bridge, which collapses to -(1-q)^2 / (4q).
fn one_minus_quarter_s() -> QRatFun {
    &QRatFun::one() - &s_bridge().scale(&ratio(1, 4))
}

/// The even part of the binomial expansion, sum_j binom(k, 2j) (s/4)^j, as
/// an exact rational function of q through the bridge. Finite for k >= 0;
/// for k < 0 it is the finite opposite-sign sum divided by (1-s/4)^(-k),
/// which is the resummation identity behind the transformed regime.
fn even_binomial_sum(k: i64) -> QRatFun {
    if k < 0 {
        return &even_binomial_sum(-k) * &one_minus_quarter_s().pow(k);
    }
    let s = s_bridge();
    let mut acc = QRatFun::zero();
    let mut j = 0;
    while 2 * j <= k {
        let coeff = binomial(k, (2 * j) as u32) * rat_pow(&ratio(1, 4), j);
        acc = &acc + &s.pow(j).scale(&coeff);
        j += 1;
    }
    acc
}

/// The closed form of the degree-2 stable-pairs series as an exact rational
/// function of q. For d+1-g >= 0 this is the finite sum
/// t^(4g-4-2d) sum_i binom(d+1-g, 2i) 2^(2g-1-2i) q^(2-2g-i) (1+q)^(2d+2i);
/// below that regime the resummed finite form is used instead.
pub fn pt_closed_form(gd: &GeomData) -> QRatFun {
    let (g, d) = (gd.genus, gd.degree);
    if d + 1 - g >= 0 {
        let one_plus_q = QRatFun::one_plus_q();
        let mut acc = QRatFun::zero();
        let mut i = 0;
        while 2 * i <= d + 1 - g {
            let coeff = binomial(d + 1 - g, (2 * i) as u32) * rat_pow(&rat(2), 2 * g - 1 - 2 * i);
            let term = &QRatFun::q_monomial(TPoly::constant(coeff), 2 - 2 * g - i)
                * &one_plus_q.pow(2 * d + 2 * i);
            acc = &acc + &term;
            i += 1;
        }
        &acc * &QRatFun::constant(TPoly::monomial(rat(1), 4 * g - 4 - 2 * d))
    } else {
        pt_closed_form_resummed(gd)
    }
}

/// The resummed route, valid in both regimes: the q-substituted form of
/// t^(4g-4-2d) 2^(2g-1) s^d (1-s/4)^(d+1-g) sum_j binom(g-1-d, 2j) (s/4)^j
/// times the q-power bridging the two sides. Equals [`pt_closed_form`]
/// everywhere; it is the primary definition when d+1-g < 0.
pub fn pt_closed_form_resummed(gd: &GeomData) -> QRatFun {
    let (g, d) = (gd.genus, gd.degree);
    let prefactor = TPoly::monomial(rat_pow(&rat(2), 2 * g - 1), 4 * g - 4 - 2 * d);
    let base = &QRatFun::q_monomial(prefactor, d + 2 - 2 * g)
        * &(&s_bridge().pow(d) * &one_minus_quarter_s().pow(d + 1 - g));
    &base * &even_binomial_sum(g - 1 - d)
}

/// The s-variable bookkeeping of the Gromov-Witten side: the series equals
/// `t_prefactor * u^u_power * (1-s/4)^cos_power * sum_m s_terms[m] s^m`,
/// with s-exponents stored absolutely (so s^d appears as a key shift).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SForm {
    pub t_prefactor: TPoly,
    pub u_power: i64,
    pub cos_power: i64,
    pub s_terms: BTreeMap<i64, TPoly>,
}

impl fmt::Display for SForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) * u^{}", self.t_prefactor, self.u_power)?;
        if self.cos_power != 0 {
            write!(f, " * (1 - s/4)^{}", self.cos_power)?;
        }
        let terms: Vec<String> = self
            .s_terms
            .iter()
            .map(|(m, c)| format!("({})*s^{}", c, m))
            .collect();
        write!(f, " * [{}]", terms.join(" + "))
    }
}

/// The degree-2 Gromov-Witten partition function in the s variable. For
/// d+1-g >= 0 the finite sine-power sum applies directly; otherwise the
/// transformed representation with a (1-s/4) power is used.
pub fn gw_s_form(gd: &GeomData) -> SForm {
    let (g, d) = (gd.genus, gd.degree);
    let t_prefactor = TPoly::monomial(rat(1), 4 * g - 4 - 2 * d);
    let u_power = 4 * g - 4 - 2 * d;
    let mut s_terms = BTreeMap::new();
    if d + 1 - g >= 0 {
        let mut i = 0;
        while 2 * i <= d + 1 - g {
            let coeff = binomial(d + 1 - g, (2 * i) as u32) * rat_pow(&rat(2), 2 * g - 1 - 2 * i);
            s_terms.insert(d + i, TPoly::constant(coeff));
            i += 1;
        }
        SForm {
            t_prefactor,
            u_power,
            cos_power: 0,
            s_terms,
        }
    } else {
        let fold = rat_pow(&rat(2), 2 * g - 1);
        let mut j = 0;
        while 2 * j <= g - 1 - d {
            let coeff = &fold * binomial(g - 1 - d, (2 * j) as u32) * rat_pow(&ratio(1, 4), j);
            s_terms.insert(d + j, TPoly::constant(coeff));
            j += 1;
        }
        SForm {
            t_prefactor,
            u_power,
            cos_power: d + 1 - g,
            s_terms,
        }
    }
}

/// The correspondence check: substitute the bridge into the s-form of the
/// Gromov-Witten series, apply the degree-2 variable change, and compare
/// exactly with the closed stable-pairs form. Returns both sides.
pub fn gw_pt_sides(gd: &GeomData) -> (QRatFun, QRatFun) {
    let (g, d) = (gd.genus, gd.degree);
    let form = gw_s_form(gd);
    let s = s_bridge();
    let mut sum = QRatFun::zero();
    for (m, c) in &form.s_terms {
        sum = &sum + &(&QRatFun::constant(c.clone()) * &s.pow(*m));
    }
    let cos_factor = one_minus_quarter_s().pow(form.cos_power);
    let lhs = &(&QRatFun::q_monomial(form.t_prefactor, d + 2 - 2 * g) * &cos_factor) * &sum;
    (lhs, pt_closed_form(gd))
}

/// True when the two sides of the degree-2 correspondence agree exactly.
pub fn gw_pt_check(gd: &GeomData) -> bool {
    let (lhs, rhs) = gw_pt_sides(gd);
    lhs == rhs
}

/// The MacMahon function prod_n (1 - q^n)^(-n), exact through q^order.
pub fn macmahon(order: i64) -> QSeries {
    assert!(order >= 0, "order must be nonnegative");
    let mut acc = QSeries::one(order);
    for n in 1..=order {
        // inverse of (1 - q^n): the geometric series in q^n
        let mut geo = QSeries::zero(order);
        let mut k = 0;
        while n * k <= order {
            geo.set_coeff(n * k, TPoly::one());
            k += 1;
        }
        acc = &acc * &geo.pow(n);
    }
    acc
}

/// The degree-zero Donaldson-Thomas series M(-q)^(8g-8-d), exact through
/// q^order.
pub fn dt_degree_zero(gd: &GeomData, order: i64) -> QSeries {
    let exponent = 8 * gd.genus - 8 - gd.degree;
    macmahon(order).substitute_neg_q().pow(exponent)
}

/// Minimal Euler characteristic and the invariant carried there. The parity
/// epsilon and the maximal subsheaf degree e solve g - 1 + eps = d - 2e;
/// the value follows the closed form, with the (d+1-g) factor present in
/// the eps = 1 branch.
pub fn minimal_invariant(gd: &GeomData) -> (i64, TPoly) {
    let (g, d) = (gd.genus, gd.degree);
    let eps = (d - g + 1).rem_euclid(2);
    let e = (d - g + 1 - eps) / 2;
    let chi_min = 2 - 2 * g - e;
    debug_assert_eq!(chi_min, minimal_chi(gd));
    let value = if eps == 0 {
        TPoly::monomial(rat_pow(&rat(2), 3 * g - 2 - d), 4 * g - 4 - 2 * d)
    } else {
        TPoly::monomial(
            rat(d + 1 - g) * rat_pow(&rat(2), 3 * g - 1 - d),
            4 * g - 4 - 2 * d,
        )
    };
    (chi_min, value)
}

/// The number of maximal line subbundles of a generic rank-2 bundle in the
/// opposite-parity regime: 2^g, the rank-to-the-genus count of the
/// zero-dimensional Quot scheme.
pub fn maximal_subbundle_count(genus: i64) -> BigInt {
    assert!(genus >= 0);
    BigInt::from(1) << genus
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrals::{quot_intersection, quot_theta_integral, QuotContext};
    use crate::scalars::Rat;
    use num_bigint::BigInt;

    #[test]
    fn bridge_identity() {
        // 2 + q + q^-1 == q^-1 (1+q)^2
        let lhs = &(&QRatFun::constant(TPoly::from_int(2)) + &QRatFun::q_monomial(TPoly::one(), 1))
            + &QRatFun::q_monomial(TPoly::one(), -1);
        assert_eq!(lhs, s_bridge());
    }

    #[test]
    fn even_binomial_resummation_identity() {
        // (1-x)^k + (1+x)^k = 2 sum_j binom(k,2j) x^(2j) for k >= 0, the
        // polynomial identity behind the negative-regime resummation.
        for k in 0..=9i64 {
            let one = TPoly::one();
            let x = TPoly::monomial(rat(1), 1);
            let lhs = &(&one - &x).pow(k) + &(&one + &x).pow(k);
            let mut rhs = TPoly::zero();
            let mut j = 0;
            while 2 * j <= k {
                rhs += &TPoly::monomial(binomial(k, (2 * j) as u32) * rat(2), 2 * j);
                j += 1;
            }
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn closed_form_for_local_p1() {
        // -2 q^3 (1+q)^-4 (1-q)^-2
        let gd = GeomData::new(0, -2);
        let expected = &QRatFun::q_monomial(TPoly::from_int(-2), 3)
            * &(&QRatFun::one_plus_q().pow(-4)
                * &(&QRatFun::one() - &QRatFun::q_monomial(TPoly::one(), 1)).pow(-2));
        assert_eq!(pt_closed_form(&gd), expected);
    }

    #[test]
    fn closed_form_collapses_at_genus_one() {
        // (1,1): only i = 0 survives, giving 2 t^-2 (1+q)^2.
        let gd = GeomData::new(1, 1);
        let expected =
            &QRatFun::constant(TPoly::monomial(rat(2), -2)) * &QRatFun::one_plus_q().pow(2);
        assert_eq!(pt_closed_form(&gd), expected);

        // (1,0): the single i = 0 term is the constant 2.
        assert_eq!(
            pt_closed_form(&GeomData::new(1, 0)),
            QRatFun::constant(TPoly::from_int(2))
        );
    }

    #[test]
    fn resummed_route_matches_direct_sum_in_its_regime() {
        for g in 0..=3i64 {
            for d in -4..=4i64 {
                if d + 1 - g < 0 {
                    continue;
                }
                let gd = GeomData::new(g, d);
                assert_eq!(
                    pt_closed_form(&gd),
                    pt_closed_form_resummed(&gd),
                    "regimes disagree at ({g},{d})"
                );
            }
        }
    }

    #[test]
    fn s_form_bookkeeping() {
        // (1,1): prefactor (ut)^-2, single s-term 2 s.
        let form = gw_s_form(&GeomData::new(1, 1));
        assert_eq!(form.u_power, -2);
        assert_eq!(form.t_prefactor, TPoly::monomial(rat(1), -2));
        assert_eq!(form.cos_power, 0);
        assert_eq!(form.s_terms, [(1, TPoly::from_int(2))].into());

        // (1,0): constant s-term 2.
        let form = gw_s_form(&GeomData::new(1, 0));
        assert_eq!(form.s_terms, [(0, TPoly::from_int(2))].into());

        // (0,-2): transformed regime with a single folded term (1/2) s^-2.
        let form = gw_s_form(&GeomData::new(0, -2));
        assert_eq!(form.cos_power, -1);
        assert_eq!(form.s_terms, [(-2, TPoly::constant(ratio(1, 2)))].into());
    }

    #[test]
    fn correspondence_holds_on_the_grid() {
        for (g, d) in [(0i64, -2i64), (1, 1), (2, 3)] {
            assert!(gw_pt_check(&GeomData::new(g, d)), "({g},{d})");
        }
    }

    #[test]
    fn macmahon_expansion() {
        let m = macmahon(5);
        assert_eq!(m.to_string(), "1 + q + 3*q^2 + 6*q^3 + 13*q^4 + 24*q^5");
        assert_eq!(macmahon(0), QSeries::one(0));
        let neg = macmahon(2).substitute_neg_q();
        assert_eq!(neg.to_string(), "1 - q + 3*q^2");
    }

    #[test]
    fn macmahon_coefficients_increase() {
        let m = macmahon(12);
        let mut prev = rat(0);
        for k in 0..=12 {
            let c = m.coeff(k);
            let (value, t_exp) = c.as_monomial().expect("integer coefficient");
            assert_eq!(t_exp, 0);
            assert!(value.denom() == &BigInt::from(1));
            assert!(value >= prev, "not weakly increasing at {k}");
            prev = value;
        }
    }

    #[test]
    fn dt_degree_zero_series() {
        assert_eq!(dt_degree_zero(&GeomData::new(1, 0), 4), QSeries::one(4));

        let z = dt_degree_zero(&GeomData::new(0, -2), 1);
        assert_eq!(z.coeff(0), TPoly::one());
        assert_eq!(z.coeff(1), TPoly::from_int(6));

        let z = dt_degree_zero(&GeomData::new(2, 1), 1);
        assert_eq!(z.coeff(1), TPoly::from_int(-7));

        // exponent zero: identically 1
        let z = dt_degree_zero(&GeomData::new(1, 0), 8);
        assert_eq!(z, QSeries::one(8));
    }

    #[test]
    fn minimal_invariants() {
        let (chi, value) = minimal_invariant(&GeomData::new(0, -2));
        assert_eq!((chi, value), (3, TPoly::from_int(-2)));

        let (chi, value) = minimal_invariant(&GeomData::new(2, 1));
        assert_eq!((chi, value), (-2, TPoly::monomial(rat(8), 2)));

        let (chi, value) = minimal_invariant(&GeomData::new(1, 1));
        assert_eq!((chi, value), (0, TPoly::monomial(rat(2), -2)));
    }

    #[test]
    fn lowest_order_of_closed_form_is_the_minimal_invariant() {
        for g in 0..=3i64 {
            for d in -3..=3i64 {
                let gd = GeomData::new(g, d);
                let (chi_min, value) = minimal_invariant(&gd);
                let series = pt_closed_form(&gd).expand(chi_min + 2);
                let (lead_exp, lead) = series.leading().expect("nonzero series");
                assert_eq!(lead_exp, chi_min, "({g},{d})");
                assert_eq!(lead, &value, "({g},{d})");
            }
        }
    }

    #[test]
    fn subbundle_count_cross_checks() {
        assert_eq!(maximal_subbundle_count(0), BigInt::from(1));
        assert_eq!(maximal_subbundle_count(2), BigInt::from(4));
        assert_eq!(maximal_subbundle_count(3), BigInt::from(8));
        for g in 0..=4i64 {
            // 2^g is the zero-dimensional Quot integral at rank 2 and the
            // top theta integral (2 theta)^g / g!.
            let e = 1 - g;
            let d = 2 * e - (1 - g);
            let ctx = QuotContext::rank2(g, d, e, 0);
            assert_eq!(ctx.quot_vdim(), 0);
            let count = TPoly::constant(Rat::new(maximal_subbundle_count(g), 1.into()));
            assert_eq!(quot_intersection(&ctx, 0, 0), count);
            // top theta integral N^g g!/g! is the same count
            assert_eq!(quot_theta_integral(&ctx, g), count);
        }
    }
}
