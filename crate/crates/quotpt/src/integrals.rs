//! The virtual intersection pairing over Quot-scheme x symmetric-product
//! fixed loci, via closed-form monomial rules valid for any bundle rank.

use num_traits::Zero;

use crate::cohring::CohClass;
use crate::scalars::{binomial, factorial, rat, rat_pow, Rat, TPoly};
use crate::{Error, Result};

/// Discrete data of one integration context: genus, bundle rank and degree,
/// subsheaf degree, and the size of the symmetric-product factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotContext {
    pub genus: i64,
    pub rank: i64,
    pub degree: i64,
    pub sub_degree: i64,
    pub sym_points: i64,
}

impl QuotContext {
    pub fn new(genus: i64, rank: i64, degree: i64, sub_degree: i64, sym_points: i64) -> Self {
        assert!(genus >= 0, "genus must be nonnegative");
        assert!(rank >= 1, "rank must be positive");
        assert!(
            sym_points >= 0,
            "symmetric product size must be nonnegative"
        );
        QuotContext {
            genus,
            rank,
            degree,
            sub_degree,
            sym_points,
        }
    }

    /// Rank-2 pipeline context.
    pub fn rank2(genus: i64, degree: i64, sub_degree: i64, sym_points: i64) -> Self {
        QuotContext::new(genus, 2, degree, sub_degree, sym_points)
    }

    /// Expected dimension of the Quot factor:
    /// (1-g)(N-1) + d - N*e, which is 1 - g + d - 2e at rank two.
    pub fn quot_vdim(&self) -> i64 {
        (1 - self.genus) * (self.rank - 1) + self.degree - self.rank * self.sub_degree
    }

    /// Expected dimension of the full fixed component.
    pub fn total_vdim(&self) -> i64 {
        self.quot_vdim() + self.sym_points
    }
}

/// Value of the pairing on a single monomial a1^p1 a2^p2 th1^j th2^k B^l,
/// zero unless the degrees land exactly on the virtual dimensions of the
/// two factors with an even power of B: l = 2h contributes
/// (-1)^h binom(2h,h) h! g! (g-h)! N^(g-j-h) / ((g-j-h)! (g-k-h)!).
/// The h! factor is forced by the brute-force expansion of B^(2h); see
/// oracle::tests::cross_power_expansion for the certification.
fn monomial_integral(ctx: &QuotContext, p1: i64, p2: i64, j: i64, k: i64, l: i64) -> Rat {
    if l % 2 != 0 {
        return rat(0);
    }
    let half = l / 2;
    let g = ctx.genus;
    if p1 + j + half != ctx.quot_vdim() || p2 + k + half != ctx.sym_points {
        return rat(0);
    }
    if j + half > g || k + half > g {
        return rat(0);
    }
    let sign = if half % 2 == 0 { rat(1) } else { rat(-1) };
    let num = factorial(g as u32) * factorial((g - half) as u32) * factorial(half as u32);
    let den = factorial((g - j - half) as u32) * factorial((g - k - half) as u32);
    sign * binomial(2 * half, half as u32)
        * Rat::new(num, den)
        * rat_pow(&rat(ctx.rank), g - j - half)
}

/// Integrate a class against the virtual class of
/// Quot^e E x Sym^n C, monomial by monomial. The class must live in a ring
/// of matching genus, truncated no lower than the total virtual dimension.
pub fn integrate_y(class: &CohClass, ctx: &QuotContext) -> Result<TPoly> {
    let vdim1 = ctx.quot_vdim();
    if vdim1 < 0 {
        return Err(Error::NegativeExpectedDimension);
    }
    let ring = class.ring();
    assert_eq!(
        ring.genus, ctx.genus,
        "class genus does not match the integration context"
    );
    assert!(
        i64::from(ring.max_deg) >= ctx.total_vdim(),
        "class truncated below the virtual dimension"
    );
    let mut out = TPoly::zero();
    for (m, c) in class.iter() {
        let weight = monomial_integral(
            ctx,
            i64::from(m.a1),
            i64::from(m.a2),
            i64::from(m.th1),
            i64::from(m.th2),
            i64::from(m.bb),
        );
        if !weight.is_zero() {
            out += &c.scale(&weight);
        }
    }
    Ok(out)
}

/// Pairing of a^aExp against an even monomial with `even_pairs` pairs on the
/// Quot factor alone: N^(g - even_pairs) when the degrees match, else zero.
pub fn quot_intersection(ctx: &QuotContext, a_exp: i64, even_pairs: i64) -> TPoly {
    assert!(
        (0..=ctx.genus).contains(&even_pairs),
        "pair count out of range"
    );
    if a_exp != ctx.quot_vdim() - even_pairs {
        return TPoly::zero();
    }
    TPoly::constant(rat_pow(&rat(ctx.rank), ctx.genus - even_pairs))
}

/// The theta-power integral over the Quot factor:
/// integral of a^(m-1+k) theta^(g-k) equals N^k g!/k!.
pub fn quot_theta_integral(ctx: &QuotContext, k: i64) -> TPoly {
    assert!((0..=ctx.genus).contains(&k), "theta index out of range");
    let value =
        rat_pow(&rat(ctx.rank), k) * Rat::new(factorial(ctx.genus as u32), factorial(k as u32));
    TPoly::constant(value)
}
