//! Brute-force validator for the closed-form monomial pairing: expands
//! theta and cross-term classes literally in the exterior algebra on 4g odd
//! generators and integrates term by term with the base rules.
//!
//! Generators are indexed factor-major: bits 0..2g are the odd classes of
//! the Quot factor, bits 2g..4g those of the symmetric-product factor.
//! Sets are stored sorted in that canonical order, so splitting a monomial
//! into its two factor blocks carries no extra Koszul sign; all signs are
//! tracked at wedge time.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::integrals::QuotContext;
use crate::scalars::{rat, rat_pow, Rat};

/// A wedge monomial: a set of odd generators (bitmask over 4g bits) times
/// powers of the two even classes a1, a2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExtMono {
    pub gens: u64,
    pub a1: u32,
    pub a2: u32,
}

/// Element of the exterior algebra with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtClass {
    genus: i64,
    terms: BTreeMap<ExtMono, Rat>,
}

/// Sign of moving every generator of `right` past the larger generators of
/// `left`: parity of the number of out-of-order pairs in the concatenation.
fn merge_sign(left: u64, right: u64) -> i32 {
    let mut inversions = 0u32;
    let mut r = right;
    while r != 0 {
        let bit = r.trailing_zeros();
        // generators of `left` strictly above `bit` must hop over it
        inversions += (left >> (bit + 1)).count_ones();
        r &= r - 1;
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl ExtClass {
    pub fn zero(genus: i64) -> Self {
        assert!(genus >= 0);
        ExtClass {
            genus,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(genus: i64) -> Self {
        ExtClass::monomial(
            genus,
            ExtMono {
                gens: 0,
                a1: 0,
                a2: 0,
            },
            rat(1),
        )
    }

    pub fn monomial(genus: i64, m: ExtMono, c: Rat) -> Self {
        let mut cls = ExtClass::zero(genus);
        cls.add_term(m, c);
        cls
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &ExtMono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, m: ExtMono, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Bit index of b_{factor,i} for factor in {1,2} and i in 1..=2g.
    pub fn gen_bit(genus: i64, factor: u8, i: i64) -> u32 {
        assert!(factor == 1 || factor == 2);
        assert!((1..=2 * genus).contains(&i), "generator index out of range");
        let offset = if factor == 1 { 0 } else { 2 * genus };
        (offset + i - 1) as u32
    }

    /// A single odd generator b_{factor,i}.
    pub fn generator(genus: i64, factor: u8, i: i64) -> Self {
        let bit = ExtClass::gen_bit(genus, factor, i);
        ExtClass::monomial(
            genus,
            ExtMono {
                gens: 1 << bit,
                a1: 0,
                a2: 0,
            },
            rat(1),
        )
    }

    /// theta for one factor: the sum over i of b_i b_{g+i}.
    pub fn theta(genus: i64, factor: u8) -> Self {
        let mut cls = ExtClass::zero(genus);
        for i in 1..=genus {
            let lo = ExtClass::gen_bit(genus, factor, i);
            let hi = ExtClass::gen_bit(genus, factor, genus + i);
            cls.add_term(
                ExtMono {
                    gens: (1 << lo) | (1 << hi),
                    a1: 0,
                    a2: 0,
                },
                rat(1),
            );
        }
        cls
    }

    /// The cross-term class B: sum over i of
    /// b_{1,i} b_{2,g+i} - b_{1,g+i} b_{2,i}.
    pub fn cross(genus: i64) -> Self {
        let mut cls = ExtClass::zero(genus);
        for i in 1..=genus {
            let plus = (1u64 << ExtClass::gen_bit(genus, 1, i))
                | (1 << ExtClass::gen_bit(genus, 2, genus + i));
            let minus = (1u64 << ExtClass::gen_bit(genus, 1, genus + i))
                | (1 << ExtClass::gen_bit(genus, 2, i));
            cls.add_term(
                ExtMono {
                    gens: plus,
                    a1: 0,
                    a2: 0,
                },
                rat(1),
            );
            cls.add_term(
                ExtMono {
                    gens: minus,
                    a1: 0,
                    a2: 0,
                },
                rat(-1),
            );
        }
        cls
    }

    /// Multiply by a1^p1 a2^p2.
    pub fn mul_a(&self, p1: u32, p2: u32) -> Self {
        ExtClass {
            genus: self.genus,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        ExtMono {
                            gens: m.gens,
                            a1: m.a1 + p1,
                            a2: m.a2 + p2,
                        },
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Signed exterior product: repeated generators annihilate, the sign is
    /// the parity of the permutation sorting the concatenation.
    pub fn wedge(&self, rhs: &ExtClass) -> ExtClass {
        assert_eq!(self.genus, rhs.genus, "mixed genus");
        let mut out = ExtClass::zero(self.genus);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                if m1.gens & m2.gens != 0 {
                    continue;
                }
                let sign = merge_sign(m1.gens, m2.gens);
                let m = ExtMono {
                    gens: m1.gens | m2.gens,
                    a1: m1.a1 + m2.a1,
                    a2: m1.a2 + m2.a2,
                };
                out.add_term(m, c1 * c2 * rat(sign.into()));
            }
        }
        out
    }

    pub fn wedge_pow(&self, exp: u32) -> ExtClass {
        let mut acc = ExtClass::one(self.genus);
        for _ in 0..exp {
            acc = acc.wedge(self);
        }
        acc
    }
}

/// Split a factor block into its pair count when it is an even monomial:
/// the set must contain b_i exactly when it contains b_{g+i}. Returns the
/// pair count and the sign relating the sorted order to the oriented
/// pair-by-pair order b_{i1} b_{g+i1} b_{i2} b_{g+i2} ...
fn even_block(genus: i64, block: u64) -> Option<(i64, i32)> {
    let low_mask = (1u64 << genus) - 1;
    let lows = block & low_mask;
    let highs = block >> genus;
    if lows != highs {
        return None;
    }
    let pairs = lows.count_ones() as i64;
    // Sorting b_{i1} .. b_{is} b_{g+i1} .. b_{g+is} into pair order moves
    // the k-th high generator past s-k lows: total parity s(s-1)/2.
    let sign = if (pairs * (pairs - 1) / 2) % 2 == 0 {
        1
    } else {
        -1
    };
    Some((pairs, sign))
}

/// Integrate an exterior class against the product of the two base rules:
/// the Quot factor contributes N^(g - pairs) on even monomials with the
/// matching a-power, the symmetric-product factor contributes 1.
pub fn oracle_integrate(class: &ExtClass, ctx: &QuotContext) -> Rat {
    let g = class.genus();
    assert_eq!(g, ctx.genus, "context genus mismatch");
    let vdim1 = ctx.quot_vdim();
    let n = ctx.sym_points;
    let factor_mask = (1u64 << (2 * g)) - 1;
    let mut total = Rat::zero();
    for (m, c) in &class.terms {
        let block1 = m.gens & factor_mask;
        let block2 = m.gens >> (2 * g);
        let Some((s1, sign1)) = even_block(g, block1) else {
            continue;
        };
        let Some((s2, sign2)) = even_block(g, block2) else {
            continue;
        };
        if i64::from(m.a1) != vdim1 - s1 || i64::from(m.a2) != n - s2 {
            continue;
        }
        let value = rat_pow(&rat(ctx.rank), g - s1);
        total += c * value * rat((sign1 * sign2).into());
    }
    total
}

/// One row of the validation sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationRow {
    pub genus: i64,
    pub theta1_pow: i64,
    pub theta2_pow: i64,
    pub cross_pairs: i64,
    pub oracle: Rat,
    pub closed_form: Rat,
}

impl ValidationRow {
    pub fn matches(&self) -> bool {
        self.oracle == self.closed_form
    }
}

/// The closed form the oracle certifies, for arbitrary rank: the pairing
/// of a1^(vdim-j-l) a2^(n-k-l) th1^j th2^k B^(2l), which carries a factor
/// l! on top of binom(2l,l) from the multinomial expansion of B^(2l).
pub fn closed_form_integral(genus: i64, rank: i64, j: i64, k: i64, l: i64) -> Rat {
    use crate::scalars::{binomial, factorial};
    let num = factorial(genus as u32) * factorial((genus - l) as u32) * factorial(l as u32);
    let den = factorial((genus - j - l) as u32) * factorial((genus - k - l) as u32);
    let sign = if l % 2 == 0 { rat(1) } else { rat(-1) };
    sign * binomial(2 * l, l as u32) * Rat::new(num, den) * rat_pow(&rat(rank), genus - j - l)
}

/// Compare the brute-force pairing of th1^j th2^k B^(2l) (with the forced
/// a-powers) against the closed form, for every admissible (j,k,l) with
/// genus at most `gmax`. Costs grow like 2^(4g); keep gmax <= 4.
pub fn validate_monomial_integrals(gmax: i64, rank: i64, parallel: bool) -> Vec<ValidationRow> {
    assert!(
        (0..=4).contains(&gmax),
        "validation sweep capped at genus 4"
    );
    let mut cases = Vec::new();
    for g in 0..=gmax {
        for l in 0..=g {
            for j in 0..=(g - l) {
                for k in 0..=(g - l) {
                    cases.push((g, j, k, l));
                }
            }
        }
    }
    crate::exec::map_collect(cases, parallel, move |(g, j, k, l)| {
        // Realize the forced a-powers in a context with vdim1 = j + l + 1
        // and n = k + l + 1 so both a-exponents are strictly positive.
        let vdim1 = j + l + 1;
        let n = k + l + 1;
        let d = vdim1 - (1 - g) * (rank - 1);
        let ctx = QuotContext::new(g, rank, d, 0, n);
        debug_assert_eq!(ctx.quot_vdim(), vdim1);
        let class = ExtClass::theta(g, 1)
            .wedge_pow(j as u32)
            .wedge(&ExtClass::theta(g, 2).wedge_pow(k as u32))
            .wedge(&ExtClass::cross(g).wedge_pow(2 * l as u32))
            .mul_a((vdim1 - j - l) as u32, (n - k - l) as u32);
        ValidationRow {
            genus: g,
            theta1_pow: j,
            theta2_pow: k,
            cross_pairs: l,
            oracle: oracle_integrate(&class, &ctx),
            closed_form: closed_form_integral(g, rank, j, k, l),
        }
    })
}
