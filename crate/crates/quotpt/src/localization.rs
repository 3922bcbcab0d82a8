//! The localization pipeline: T-fixed component enumeration, equivariant
//! Euler classes of the virtual normal bundle, and the stable-pairs
//! residue invariants assembled from them.

use crate::cohring::{CohClass, CohRing};
use crate::integrals::{integrate_y, QuotContext};
use crate::scalars::{QSeries, TPoly};
use crate::{Error, Result};

/// Genus of the base curve and degree of the rank-2 bundle. The residue
/// invariants depend on the bundle only through these.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeomData {
    pub genus: i64,
    pub degree: i64,
}

impl GeomData {
    pub fn new(genus: i64, degree: i64) -> Self {
        assert!(genus >= 0, "genus must be nonnegative");
        GeomData { genus, degree }
    }
}

/// One T-fixed component Quot^e E x Sym^n C, with its derived discrete
/// invariants. Only components with nonnegative expected dimension are
/// constructed; the virtual class of the others vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixedComponent {
    pub sub_degree: i64,
    pub sym_points: i64,
    pub euler_char: i64,
    pub quot_vdim: i64,
    pub total_vdim: i64,
}

impl FixedComponent {
    pub fn new(gd: &GeomData, sub_degree: i64, sym_points: i64) -> Result<Self> {
        if sym_points < 0 {
            return Err(Error::InvalidArgument("negative divisor degree".into()));
        }
        let quot_vdim = 1 - gd.genus + gd.degree - 2 * sub_degree;
        if quot_vdim < 0 {
            return Err(Error::NegativeExpectedDimension);
        }
        let m = 2 * sym_points - sub_degree;
        Ok(FixedComponent {
            sub_degree,
            sym_points,
            euler_char: 2 - 2 * gd.genus + m,
            quot_vdim,
            total_vdim: quot_vdim + sym_points,
        })
    }

    pub fn context(&self, gd: &GeomData) -> QuotContext {
        QuotContext::rank2(gd.genus, gd.degree, self.sub_degree, self.sym_points)
    }
}

/// All fixed components with 2n - e = m, sorted by n. The list is finite:
/// raising n forces e up and the Quot expected dimension below zero.
pub fn fixed_components(gd: &GeomData, m: i64) -> Vec<FixedComponent> {
    let mut out = Vec::new();
    let mut n = 0;
    loop {
        let e = 2 * n - m;
        match FixedComponent::new(gd, e, n) {
            Ok(comp) => out.push(comp),
            Err(Error::NegativeExpectedDimension) => break,
            Err(_) => unreachable!(),
        }
        n += 1;
    }
    out
}

/// Smallest Euler characteristic carrying a fixed component: n = 0 and the
/// deepest subsheaf degree with nonnegative expected dimension.
pub fn minimal_chi(gd: &GeomData) -> i64 {
    let e_max = (1 - gd.genus + gd.degree).div_euclid(2);
    2 - 2 * gd.genus - e_max
}

/// Discrete descriptor of an equivariant line-bundle class on the fixed
/// locus times the curve: coefficients of a1, a2 in c1, the t-weight, the
/// multiples of the two odd blocks, and the fiber degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineClass {
    pub a1: i64,
    pub a2: i64,
    pub weight: i64,
    pub odd1: i64,
    pub odd2: i64,
    pub fiber: i64,
}

impl LineClass {
    /// The universal subsheaf S.
    pub fn sub(e: i64) -> Self {
        LineClass {
            a1: -1,
            a2: 0,
            weight: 1,
            odd1: 1,
            odd2: 0,
            fiber: e,
        }
    }

    /// Its dual S^v.
    pub fn sub_dual(e: i64) -> Self {
        LineClass {
            a1: 1,
            a2: 0,
            weight: -1,
            odd1: -1,
            odd2: 0,
            fiber: -e,
        }
    }

    /// The universal divisor line bundle D on the symmetric-product factor.
    pub fn divisor(n: i64) -> Self {
        LineClass {
            a1: 0,
            a2: 1,
            weight: 0,
            odd1: 0,
            odd2: -1,
            fiber: n,
        }
    }

    pub fn divisor_dual(n: i64) -> Self {
        LineClass {
            a1: 0,
            a2: -1,
            weight: 0,
            odd1: 0,
            odd2: 1,
            fiber: -n,
        }
    }

    /// The determinant of the fixed rank-2 bundle, weight 2.
    pub fn det_bundle(d: i64) -> Self {
        LineClass {
            a1: 0,
            a2: 0,
            weight: 2,
            odd1: 0,
            odd2: 0,
            fiber: d,
        }
    }

    pub fn trivial() -> Self {
        LineClass {
            a1: 0,
            a2: 0,
            weight: 0,
            odd1: 0,
            odd2: 0,
            fiber: 0,
        }
    }

    /// Tensor product: all descriptors add.
    pub fn tensor(&self, other: &LineClass) -> LineClass {
        LineClass {
            a1: self.a1 + other.a1,
            a2: self.a2 + other.a2,
            weight: self.weight + other.weight,
            odd1: self.odd1 + other.odd1,
            odd2: self.odd2 + other.odd2,
            fiber: self.fiber + other.fiber,
        }
    }
}

/// One summand of the virtual normal bundle: a line-bundle class, possibly
/// tensored with the fixed rank-2 bundle, with a multiplicity and a side.
/// `inverted` marks the summands entering the normal bundle positively,
/// whose Euler classes are divided out of e_T(-N^vir).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PushTerm {
    pub line: LineClass,
    pub with_bundle: bool,
    pub inverted: bool,
    pub multiplicity: u32,
}

impl PushTerm {
    pub fn total_weight(&self) -> i64 {
        self.line.weight + if self.with_bundle { 1 } else { 0 }
    }
}

/// The ten summands of the virtual normal bundle of Quot^e E x Sym^n C in
/// the stable-pairs space. Total weights are asserted nonzero: the fixed
/// part of the obstruction theory never enters the Euler class.
pub fn nvir_terms(gd: &GeomData, comp: &FixedComponent) -> Vec<PushTerm> {
    let e = comp.sub_degree;
    let n = comp.sym_points;
    let d = gd.degree;
    let sub = LineClass::sub(e);
    let sub_dual = LineClass::sub_dual(e);
    let div = LineClass::divisor(n);
    let div_dual = LineClass::divisor_dual(n);
    let det = LineClass::det_bundle(d);

    let term = |line: LineClass, with_bundle: bool, inverted: bool, multiplicity: u32| PushTerm {
        line,
        with_bundle,
        inverted,
        multiplicity,
    };

    let terms = vec![
        // positive side: S^v D, D^v det E, D^v S det E, 2E, SE
        term(sub_dual.tensor(&div), false, true, 1),
        term(div_dual.tensor(&det), false, true, 1),
        term(div_dual.tensor(&sub).tensor(&det), false, true, 1),
        term(LineClass::trivial(), true, true, 2),
        term(sub, true, true, 1),
        // negative side: S^v, 2 det E, S det E, S, S^v det E
        term(sub_dual, false, false, 1),
        term(det, false, false, 2),
        term(sub.tensor(&det), false, false, 1),
        term(sub, false, false, 1),
        term(sub_dual.tensor(&det), false, false, 1),
    ];
    let weights: Vec<i64> = terms.iter().map(PushTerm::total_weight).collect();
    assert_eq!(
        weights,
        vec![-1, 2, 3, 1, 2, -1, 2, 3, 1, 1],
        "weight audit failed"
    );
    terms
}

/// Equivariant Euler class of the pushforward of one summand, as a class
/// c^chi * exp(-rho * Theta / c) where c = x1 a1 + x2 a2 + w t, Theta is
/// the square of the odd part, rho the rank multiplier, and chi the
/// Riemann-Roch rank of the pushforward.
pub fn euler_pushforward(term: &PushTerm, gd: &GeomData, max_deg: u32) -> Result<CohClass> {
    let w_tot = term.total_weight();
    if w_tot == 0 {
        return Err(Error::ZeroWeight);
    }
    let g = gd.genus;
    let ring = CohRing::new(g, max_deg);
    let c = &(&ring.a1().scale(&TPoly::from_int(term.line.a1))
        + &ring.a2().scale(&TPoly::from_int(term.line.a2)))
        + &ring.t_scalar(w_tot);
    let (rho, fiber_extra) = if term.with_bundle {
        (2, gd.degree)
    } else {
        (1, 0)
    };
    let chi = rho * (1 - g + term.line.fiber) + fiber_extra;

    // (u1 g1 + u2 g2)^2 = -2 (u1^2 th1 + u2^2 th2 + u1 u2 B) eta, so the
    // pushforward's Chern class is exp of -rho Theta / c with:
    let (u1, u2) = (term.line.odd1, term.line.odd2);
    let theta = &(&ring.theta1().scale(&TPoly::from_int(u1 * u1))
        + &ring.theta2().scale(&TPoly::from_int(u2 * u2)))
        + &ring.cross().scale(&TPoly::from_int(u1 * u2));

    let head = c.pow(chi)?;
    let exp_arg = (&theta * &c.pow(-1)?).scale(&TPoly::from_int(-rho));
    Ok(&head * &exp_arg.exp()?)
}

/// e_T(-N^vir) for one fixed component, truncated at its virtual dimension.
pub fn nvir_inverse_euler(gd: &GeomData, comp: &FixedComponent) -> Result<CohClass> {
    let max_deg = comp.total_vdim as u32;
    let ring = CohRing::new(gd.genus, max_deg);
    let mut acc = ring.one();
    for term in nvir_terms(gd, comp) {
        let pf = euler_pushforward(&term, gd, max_deg)?;
        let exponent = if term.inverted {
            -i64::from(term.multiplicity)
        } else {
            i64::from(term.multiplicity)
        };
        acc = &acc * &pf.pow(exponent)?;
    }
    // every summand is homogeneous in (t-exponent + degree), so the product
    // must be too
    debug_assert!(acc.homogeneity_constant().is_some());
    Ok(acc)
}

/// The local contribution of one fixed component: the integral of
/// e_T(-N^vir) against the component's virtual class. Always a rational
/// multiple of a single power of t.
pub fn component_contribution(gd: &GeomData, comp: &FixedComponent) -> Result<TPoly> {
    let class = nvir_inverse_euler(gd, comp)?;
    integrate_y(&class, &comp.context(gd))
}

fn invariant_impl(gd: &GeomData, chi: i64, parallel: bool) -> TPoly {
    let m = chi - 2 + 2 * gd.genus;
    let comps = fixed_components(gd, m);
    let gd = *gd;
    let parts = crate::exec::map_collect(comps, parallel, move |comp| {
        component_contribution(&gd, &comp).expect("enumerated component must integrate")
    });
    let mut total = TPoly::zero();
    for p in parts {
        total += &p;
    }
    total
}

/// The stable-pairs residue invariant at Euler characteristic chi: the sum
/// of the contributions of all fixed components. Parallel over components
/// when the `parallel` feature is enabled.
pub fn pt_invariant(gd: &GeomData, chi: i64) -> TPoly {
    invariant_impl(gd, chi, true)
}

/// Sequential evaluation of [`pt_invariant`]; results are identical.
pub fn pt_invariant_seq(gd: &GeomData, chi: i64) -> TPoly {
    invariant_impl(gd, chi, false)
}

fn series_impl(gd: &GeomData, chi_max: i64, parallel: bool) -> Result<QSeries> {
    let chi_min = minimal_chi(gd);
    if chi_max < chi_min {
        return Err(Error::InvalidArgument(format!(
            "chi_max {chi_max} is below the minimal Euler characteristic {chi_min}"
        )));
    }
    let mut jobs = Vec::new();
    for chi in chi_min..=chi_max {
        let m = chi - 2 + 2 * gd.genus;
        for comp in fixed_components(gd, m) {
            jobs.push((chi, comp));
        }
    }
    let gd_copy = *gd;
    let parts = crate::exec::map_collect(jobs, parallel, move |(chi, comp)| {
        let value =
            component_contribution(&gd_copy, &comp).expect("enumerated component must integrate");
        (chi, value)
    });
    let mut coeffs = vec![TPoly::zero(); (chi_max - chi_min + 1) as usize];
    for (chi, value) in parts {
        coeffs[(chi - chi_min) as usize] += &value;
    }
    Ok(QSeries::from_coeffs(chi_min, coeffs, chi_max))
}

/// The generating series of stable-pairs invariants through q^chi_max,
/// exact: sum over chi of pt_invariant(chi) q^chi.
pub fn pt_series(gd: &GeomData, chi_max: i64) -> Result<QSeries> {
    series_impl(gd, chi_max, true)
}

/// Sequential evaluation of [`pt_series`]; results are identical.
pub fn pt_series_seq(gd: &GeomData, chi_max: i64) -> Result<QSeries> {
    series_impl(gd, chi_max, false)
}

/// Genus-zero contribution C(d, e, n), computed independently of the
/// pushforward machinery: the coefficient of a1^(1+d-2e) a2^n in the
/// explicit genus-zero rational expression, with all ten factors written
/// out by hand.
pub fn genus0_contribution(d: i64, e: i64, n: i64) -> Result<TPoly> {
    let vdim1 = 1 + d - 2 * e;
    if vdim1 < 0 {
        return Err(Error::NegativeExpectedDimension);
    }
    if n < 0 {
        return Err(Error::InvalidArgument("negative divisor degree".into()));
    }
    let ring = CohRing::new(0, (vdim1 + n) as u32);
    let a1 = ring.a1();
    let a2 = ring.a2();
    let t = ring.t_scalar(1);
    let t2 = ring.t_scalar(2);
    let t3 = ring.t_scalar(3);

    let factors: Vec<(CohClass, i64)> = vec![
        (&a1 - &t, 1 - e),
        (t2.clone(), 2 + 2 * d),
        (&t3 - &a1, 1 + d + e),
        (&t - &a1, 1 + e),
        (&t + &a1, 1 + d - e),
        (&(&a1 + &a2) - &t, -(1 + n - e)),
        (&t2 - &a2, -(1 + d - n)),
        (&(&t3 - &a1) - &a2, -(1 + d + e - n)),
        (t.clone(), -(4 + 2 * d)),
        (&t2 - &a1, -(2 + d + 2 * e)),
    ];
    let mut acc = ring.one();
    for (base, exp) in factors {
        acc = &acc * &base.pow(exp)?;
    }
    Ok(acc.coeff(&crate::cohring::CohMono {
        a1: vdim1 as u32,
        a2: n as u32,
        ..crate::cohring::CohMono::ONE
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohring::CohMono;
    use crate::scalars::{rat, ratio};

    #[test]
    fn component_lists_for_local_p1() {
        let gd = GeomData::new(0, -2);
        let comps = fixed_components(&gd, 1);
        assert_eq!(comps.len(), 1);
        assert_eq!((comps[0].sub_degree, comps[0].sym_points), (-1, 0));

        let comps = fixed_components(&gd, 3);
        let pairs: Vec<_> = comps.iter().map(|c| (c.sub_degree, c.sym_points)).collect();
        assert_eq!(pairs, vec![(-3, 0), (-1, 1)]);
    }

    #[test]
    fn component_list_discards_negative_expected_dimension() {
        let gd = GeomData::new(1, 1);
        let comps = fixed_components(&gd, 0);
        let pairs: Vec<_> = comps.iter().map(|c| (c.sub_degree, c.sym_points)).collect();
        assert_eq!(pairs, vec![(0, 0)]); // (e=2, n=1) fails: vdim = -3
    }

    #[test]
    fn euler_characteristic_indexing() {
        let gd = GeomData::new(0, -2);
        let comp = FixedComponent::new(&gd, -1, 0).unwrap();
        assert_eq!(comp.euler_char, 3);
        assert_eq!(minimal_chi(&gd), 3);
        assert_eq!(minimal_chi(&GeomData::new(2, 1)), -2);
        assert_eq!(minimal_chi(&GeomData::new(1, 1)), 0);
    }

    #[test]
    fn weight_audit_on_the_ten_summands() {
        let gd = GeomData::new(2, 3);
        let comp = FixedComponent::new(&gd, 0, 1).unwrap();
        let weights: Vec<i64> = nvir_terms(&gd, &comp)
            .iter()
            .map(PushTerm::total_weight)
            .collect();
        assert_eq!(weights, vec![-1, 2, 3, 1, 2, -1, 2, 3, 1, 1]);
    }

    #[test]
    fn each_euler_factor_is_homogeneous() {
        // Every pushforward c^chi exp(-rho Theta/c) is homogeneous, with
        // t-exponent plus degree equal to chi; the product's constant is
        // the signed sum over the ten summands.
        let gd = GeomData::new(2, 2);
        let comp = FixedComponent::new(&gd, -1, 1).unwrap();
        let max_deg = comp.total_vdim as u32;
        let mut total = 0;
        for term in nvir_terms(&gd, &comp) {
            let pf = euler_pushforward(&term, &gd, max_deg).unwrap();
            let constant = pf.homogeneity_constant().expect("factor homogeneous");
            let sign = if term.inverted { -1 } else { 1 };
            total += sign * i64::from(term.multiplicity) * constant;
        }
        let product = nvir_inverse_euler(&gd, &comp).unwrap();
        assert_eq!(product.homogeneity_constant(), Some(total));
    }

    #[test]
    fn pushforward_of_bare_bundle_is_a_power_of_t() {
        // The fixed rank-2 summand alone: t^(2 - 2g + d).
        let gd = GeomData::new(1, 3);
        let term = PushTerm {
            line: LineClass::trivial(),
            with_bundle: true,
            inverted: false,
            multiplicity: 1,
        };
        let pf = euler_pushforward(&term, &gd, 2).unwrap();
        assert_eq!(pf.generator_free_part(), TPoly::monomial(rat(1), 3));
        assert_eq!(pf.num_terms(), 1);
    }

    #[test]
    fn pushforward_of_sub_dual_times_divisor() {
        // (a1+a2-t)^(1-g+n-e) exp(-(th1+th2+B)/(a1+a2-t)) at g=1, e=-1, n=1.
        let gd = GeomData::new(1, 0);
        let (e, n) = (-1, 1);
        let term = PushTerm {
            line: LineClass::sub_dual(e).tensor(&LineClass::divisor(n)),
            with_bundle: false,
            inverted: true,
            multiplicity: 1,
        };
        let max_deg = 3;
        let pf = euler_pushforward(&term, &gd, max_deg).unwrap();

        let ring = CohRing::new(1, max_deg);
        let c = &(&ring.a1() + &ring.a2()) - &ring.t_scalar(1);
        let theta = &(&ring.theta1() + &ring.theta2()) + &ring.cross();
        let expected =
            &c.pow(n - e).unwrap() * &(-(&(&theta * &c.pow(-1).unwrap()))).exp().unwrap();
        assert_eq!(pf, expected);
    }

    #[test]
    fn pushforward_of_sub_times_det() {
        // (3t-a1)^(1-g+e+d) exp(-th1/(3t-a1)).
        let gd = GeomData::new(2, 1);
        let e = 0;
        let term = PushTerm {
            line: LineClass::sub(e).tensor(&LineClass::det_bundle(gd.degree)),
            with_bundle: false,
            inverted: false,
            multiplicity: 1,
        };
        let max_deg = 2;
        let pf = euler_pushforward(&term, &gd, max_deg).unwrap();
        let ring = CohRing::new(2, max_deg);
        let c = &ring.t_scalar(3) - &ring.a1();
        let expected = &c.pow(1 - 2 + e + 1).unwrap()
            * &(-(&(&ring.theta1() * &c.pow(-1).unwrap()))).exp().unwrap();
        assert_eq!(pf, expected);
    }

    #[test]
    fn zero_weight_rejected() {
        let gd = GeomData::new(1, 0);
        let term = PushTerm {
            line: LineClass::divisor(1),
            with_bundle: false,
            inverted: false,
            multiplicity: 1,
        };
        assert_eq!(euler_pushforward(&term, &gd, 1), Err(Error::ZeroWeight));
    }

    #[test]
    fn nvir_leading_coefficients_at_n_zero() {
        // Constant, th1 and a1 coefficients of e_T(-N^vir) on Quot^e E:
        // 2^(g-2e-1) t^(3g-3-d-2e), -2^(g-2e-1) t^(3g-4-d-2e),
        // 2^(g-2e-2)(2-2g+3d-2e) t^(3g-4-d-2e).
        for (g, d, e) in [
            (1i64, 1i64, 0i64),
            (1, 2, 0),
            (2, 1, -1),
            (2, 3, 0),
            (3, 2, -1),
            (0, 2, 0),
        ] {
            let gd = GeomData::new(g, d);
            let comp = FixedComponent::new(&gd, e, 0).unwrap();
            assert!(comp.quot_vdim >= 1, "grid point must keep degree-one terms");
            let class = nvir_inverse_euler(&gd, &comp).unwrap();
            let two_pow = |k: i64| crate::scalars::rat_pow(&rat(2), k);
            assert_eq!(
                class.coeff(&CohMono::ONE),
                TPoly::monomial(two_pow(g - 2 * e - 1), 3 * g - 3 - d - 2 * e),
                "constant term at ({g},{d},{e})"
            );
            if g >= 1 {
                assert_eq!(
                    class.coeff(&CohMono {
                        th1: 1,
                        ..CohMono::ONE
                    }),
                    TPoly::monomial(-two_pow(g - 2 * e - 1), 3 * g - 4 - d - 2 * e),
                    "th1 term at ({g},{d},{e})"
                );
            }
            assert_eq!(
                class.coeff(&CohMono {
                    a1: 1,
                    ..CohMono::ONE
                }),
                TPoly::monomial(
                    two_pow(g - 2 * e - 2) * rat(2 - 2 * g + 3 * d - 2 * e),
                    3 * g - 4 - d - 2 * e
                ),
                "a1 term at ({g},{d},{e})"
            );
        }
    }

    #[test]
    fn local_p1_component_contributions() {
        let gd = GeomData::new(0, -2);
        let check = |e: i64, n: i64, expect: i64| {
            let comp = FixedComponent::new(&gd, e, n).unwrap();
            assert_eq!(
                component_contribution(&gd, &comp).unwrap(),
                TPoly::from_int(expect),
                "C(-2,{e},{n})"
            );
        };
        check(-1, 0, -2);
        check(-1, 1, -28);
        check(-3, 1, -8404);
    }

    #[test]
    fn pt_invariants_for_local_p1() {
        let gd = GeomData::new(0, -2);
        assert_eq!(pt_invariant(&gd, 4), TPoly::from_int(4));
        assert_eq!(pt_invariant(&gd, 5), TPoly::from_int(-10));
    }

    #[test]
    fn minimal_invariant_by_full_localization() {
        // (g,d) = (2,1): chi_min = -2, value 8 t^2.
        let gd = GeomData::new(2, 1);
        assert_eq!(pt_invariant(&gd, -2), TPoly::monomial(rat(8), 2));
    }

    #[test]
    fn series_for_local_p1() {
        let gd = GeomData::new(0, -2);
        let series = pt_series(&gd, 7).unwrap();
        assert_eq!(
            series.to_string(),
            "-2*q^3 + 4*q^4 - 10*q^5 + 16*q^6 - 28*q^7"
        );
        assert_eq!(pt_series_seq(&gd, 7).unwrap(), series);
    }

    #[test]
    fn series_below_minimal_chi_is_rejected() {
        let gd = GeomData::new(0, -2);
        assert!(matches!(pt_series(&gd, 2), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn invariants_below_minimal_chi_vanish() {
        // empty component list
        for (g, d) in [(0i64, -2i64), (1, 1), (2, 3)] {
            let gd = GeomData::new(g, d);
            let chi = minimal_chi(&gd) - 1;
            assert!(fixed_components(&gd, chi - 2 + 2 * g).is_empty());
            assert_eq!(pt_invariant(&gd, chi), TPoly::zero());
        }
    }

    #[test]
    fn genus_one_series_matches_closed_form_prefix() {
        // 2 t^-2 (1+q)^2: coefficients 2, 4, 2 then zero.
        let gd = GeomData::new(1, 1);
        let series = pt_series(&gd, 2).unwrap();
        assert_eq!(series.coeff(0), TPoly::monomial(rat(2), -2));
        assert_eq!(series.coeff(1), TPoly::monomial(rat(4), -2));
        assert_eq!(series.coeff(2), TPoly::monomial(rat(2), -2));
    }

    #[test]
    fn genus0_route_matches_known_table() {
        let table = [
            ((-1, 0), -2i64),
            ((-2, 0), 4),
            ((-3, 0), 18),
            ((-1, 1), -28),
            ((-4, 0), 424),
            ((-2, 1), -408),
            ((-5, 0), 7750),
            ((-3, 1), -8404),
            ((-1, 2), 626),
        ];
        for ((e, n), expect) in table {
            assert_eq!(
                genus0_contribution(-2, e, n).unwrap(),
                TPoly::from_int(expect),
                "C(-2,{e},{n})"
            );
        }
    }

    #[test]
    fn genus0_route_agrees_with_pipeline() {
        for d in -3..=1i64 {
            for e in -4..=0i64 {
                for n in 0..=2i64 {
                    if 1 + d - 2 * e < 0 {
                        continue;
                    }
                    let gd = GeomData::new(0, d);
                    let comp = FixedComponent::new(&gd, e, n).unwrap();
                    assert_eq!(
                        genus0_contribution(d, e, n).unwrap(),
                        component_contribution(&gd, &comp).unwrap(),
                        "(d,e,n) = ({d},{e},{n})"
                    );
                }
            }
        }
    }

    #[test]
    fn genus0_rejects_negative_expected_dimension() {
        assert_eq!(
            genus0_contribution(-2, 1, 0),
            Err(Error::NegativeExpectedDimension)
        );
    }

    #[test]
    fn homogeneity_and_t_purity() {
        for (g, d) in [(0i64, -2i64), (1, 1), (2, 1), (2, 2)] {
            let gd = GeomData::new(g, d);
            for m in [0i64, 1, 2, 3] {
                for comp in fixed_components(&gd, m) {
                    let class = nvir_inverse_euler(&gd, &comp).unwrap();
                    let expected_const = -3 + 3 * g - d - 2 * comp.sub_degree + comp.sym_points;
                    assert_eq!(
                        class.homogeneity_constant(),
                        Some(expected_const),
                        "homogeneity at ({g},{d}) e={} n={}",
                        comp.sub_degree,
                        comp.sym_points
                    );
                    let value = component_contribution(&gd, &comp).unwrap();
                    if !value.is_zero() {
                        let (_, t_exp) = value.as_monomial().expect("contribution is t-pure");
                        assert_eq!(t_exp, 4 * g - 4 - 2 * d, "t-purity at ({g},{d})");
                    }
                }
            }
        }
    }

    #[test]
    fn contribution_can_be_fractional_in_t() {
        // The minimal component of (0,-1) carries 1/2 t^-2.
        let gd = GeomData::new(0, -1);
        let comp = FixedComponent::new(&gd, 0, 0).unwrap();
        assert_eq!(
            component_contribution(&gd, &comp).unwrap(),
            TPoly::monomial(ratio(1, 2), -2)
        );
    }
}
