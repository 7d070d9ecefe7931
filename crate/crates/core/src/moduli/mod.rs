//! Genus 2: the seven automorphism strata of `M_2`, the equivariant series of
//! `M_{2,n}` assembled from them, its Euler-characteristic tables, and the
//! hyperelliptic generalization with its unknown coefficients.
//!
//! A genus-2 curve is a double cover of `ℙ¹` branched at 6 points; each stratum
//! corresponds to a symmetric configuration of those points. The class data
//! below list, for every automorphism type, the element order, orbit lengths
//! of its action on the curve, and how many group elements share them.

mod hyperelliptic;
mod linexpr;

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::equivariant::{
    quotient_egf, quotient_series, validate_group, BinomialCombo, FiniteActionGroup,
    GroupElementClass,
};
use crate::exactmath::{as_integer, bernoulli, factorial, int, rat};
use crate::series::TruncSeries;
use crate::{Error, Rational, Result};

pub use hyperelliptic::{
    chi_hyperelliptic, hyperelliptic_constraint, hyperelliptic_orbifold, hyperelliptic_template,
    HyperellipticConstraint, GENUS2_X, GENUS2_Y,
};
pub use linexpr::{LinExpr, Unknown};

/// Euler characteristic of a genus-2 curve.
pub const COVER_CHI: i64 = -2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub name: &'static str,
    pub group: FiniteActionGroup,
    pub stratum_chi: i64,
}

fn class(order: u32, orbits: &[(u32, u32)], multiplicity: u32) -> GroupElementClass {
    GroupElementClass::new(order, orbits, multiplicity)
}

/// The identity and the hyperelliptic involution, present in every stratum.
/// The involution fixes the 6 branch points: (1+p1 t)^6 (1+p2 t^2)^-4.
fn base_classes() -> Vec<GroupElementClass> {
    vec![GroupElementClass::identity(), class(2, &[(1, 6)], 1)]
}

fn stratum(name: &'static str, group_order: u32, extra: Vec<GroupElementClass>, stratum_chi: i64) -> Stratum {
    let mut classes = base_classes();
    classes.extend(extra);
    Stratum { name, group: FiniteActionGroup::new(group_order, classes), stratum_chi }
}

/// The seven strata of `M_2`, in the order: pentagon with centre, hexagon,
/// octahedron, two triangles, central-symmetric, central-symmetric with
/// `0, ∞`, asymmetric.
///
/// Panics if the catalog fails validation, which would be a transcription
/// error.
pub fn m2_strata() -> Vec<Stratum> {
    let strata = vec![
        stratum(
            "pentagon and centre",
            10,
            vec![
                // 4(1+p1 t)^3 (1+p5 t^5)^-1: rotations by 2πk/5
                class(5, &[(1, 3)], 4),
                // 4(1+p1 t)(1+p2 t^2)(1+p5 t^5)(1+p10 t^10)^-1: rotation composed with the involution
                class(10, &[(1, 1), (2, 1), (5, 1)], 4),
            ],
            1,
        ),
        stratum(
            "regular hexagon",
            24,
            vec![
                // 4(1+p1 t)^2 (1+p2 t^2)(1+p6 t^6)^-1
                class(6, &[(1, 2), (2, 1)], 4),
                // 2(1+p1 t)^4 (1+p3 t^3)^-2
                class(3, &[(1, 4)], 2),
                // 2(1+p2 t^2)^2 (1+p3 t^3)^2 (1+p6 t^6)^-2
                class(6, &[(2, 2), (3, 2)], 2),
                // 8(1+p1 t)^2 (1+p2 t^2)^-2
                class(2, &[(1, 2)], 8),
                // 6(1+p1 t)^2 (1+p2 t^2)^2 (1+p4 t^4)^-2
                class(4, &[(1, 2), (2, 2)], 6),
            ],
            1,
        ),
        stratum(
            "octahedron",
            48,
            vec![
                // 12(1+p1 t)^2 (1+p4 t^4)(1+p8 t^8)^-1: order-4 vertex rotations, with and without the involution
                class(8, &[(1, 2), (4, 1)], 12),
                // 6(1+p1 t)^2 (1+p2 t^2)^2 (1+p4 t^4)^-2: half-turns about vertex axes
                class(4, &[(1, 2), (2, 2)], 6),
                // 8(1+p1 t)^4 (1+p3 t^3)^-2: face rotations
                class(3, &[(1, 4)], 8),
                // 8(1+p2 t^2)^2 (1+p3 t^3)^2 (1+p6 t^6)^-2: face rotations composed with the involution
                class(6, &[(2, 2), (3, 2)], 8),
                // 12(1+p1 t)^2 (1+p2 t^2)^-2: edge half-turns
                class(2, &[(1, 2)], 12),
            ],
            1,
        ),
        stratum(
            "two triangles with a common centre",
            12,
            vec![
                // 2(1+p1 t)^4 (1+p3 t^3)^-2
                class(3, &[(1, 4)], 2),
                // 2(1+p2 t^2)^2 (1+p3 t^3)^2 (1+p6 t^6)^-2
                class(6, &[(2, 2), (3, 2)], 2),
                // 6(1+p1 t)^2 (1+p2 t^2)^-2: triangle swaps
                class(2, &[(1, 2)], 6),
            ],
            -2,
        ),
        stratum(
            "central-symmetric",
            4,
            vec![
                // 2(1+p1 t)^2 (1+p2 t^2)^-2
                class(2, &[(1, 2)], 2),
            ],
            3,
        ),
        stratum(
            "central-symmetric four points with 0 and infinity",
            8,
            vec![
                // 2(1+p1 t)^2 (1+p2 t^2)^2 (1+p4 t^4)^-2
                class(4, &[(1, 2), (2, 2)], 2),
                // 4(1+p1 t)^2 (1+p2 t^2)^-2
                class(2, &[(1, 2)], 4),
            ],
            -2,
        ),
        stratum("asymmetric", 2, vec![], -1),
    ];
    for s in &strata {
        assert!(validate_group(&s.group, COVER_CHI).is_ok(), "catalog stratum {} is inconsistent", s.name);
    }
    strata
}

/// Stratum Euler characteristics rebuilt from `χ(B(ℂ*, n)/ℂ*)` and
/// `χ(M_2) = 1` by excluding the special configurations contained in each
/// family. Same order as [`m2_strata`].
pub fn stratum_chis_from_lemma1() -> [i64; 7] {
    use crate::equivariant::lemma1_chi;
    let point = 1; // isolated configurations: pentagon, hexagon, octahedron
    let pentagon = point;
    let hexagon = point;
    let octahedron = point;
    let two_triangles = lemma1_chi(2).expect("n > 0") - hexagon - octahedron;
    let square_with_poles = lemma1_chi(2).expect("n > 0") - hexagon - octahedron;
    let central = lemma1_chi(3).expect("n > 0") - two_triangles - square_with_poles - (hexagon + octahedron);
    let asymmetric = 1 - (pentagon + hexagon + octahedron + two_triangles + central + square_with_poles);
    [pentagon, hexagon, octahedron, two_triangles, central, square_with_poles, asymmetric]
}

/// `Σ_s χ(s) · quotient_series(G_s, -2, N)` over the given strata.
pub fn strata_series(strata: &[Stratum], trunc_degree: usize) -> Result<TruncSeries> {
    let mut total = TruncSeries::zero(trunc_degree);
    for s in strata {
        let q = quotient_series(&s.group, COVER_CHI, trunc_degree)?;
        total = &total + &q.scale(&int(s.stratum_chi));
    }
    Ok(total)
}

/// `Σ_n t^n χ^{S_n}(M_{2,n})` assembled stratum by stratum.
pub fn theorem2_series(trunc_degree: usize) -> TruncSeries {
    strata_series(&m2_strata(), trunc_degree).expect("catalog is valid")
}

/// A weight `num/den` and factors `(k, e)` meaning `(1 + p_k t^k)^e`.
pub type WeightedProduct = ((i64, i64), &'static [(u32, i64)]);

/// The aggregated form of the genus-2 series: ten products with rational
/// weights.
pub const THEOREM2_TERMS: [WeightedProduct; 10] = [
    ((-1, 240), &[(1, -2)]),
    ((-1, 240), &[(1, 6), (2, -4)]),
    ((2, 5), &[(1, 3), (5, -1)]),
    ((2, 5), &[(1, 1), (2, 1), (5, 1), (10, -1)]),
    ((1, 6), &[(1, 2), (2, 1), (6, -1)]),
    ((-1, 12), &[(1, 4), (3, -2)]),
    ((-1, 12), &[(2, 2), (3, 2), (6, -2)]),
    ((1, 12), &[(1, 2), (2, -2)]),
    ((1, 4), &[(1, 2), (4, 1), (8, -1)]),
    ((-1, 8), &[(1, 2), (2, 2), (4, -2)]),
];

/// Direct expansion of [`THEOREM2_TERMS`].
pub fn theorem2_closed_form(trunc_degree: usize) -> TruncSeries {
    let mut total = TruncSeries::zero(trunc_degree);
    for &((num, den), factors) in THEOREM2_TERMS.iter() {
        let mut product = TruncSeries::one(trunc_degree);
        for &(k, e) in factors {
            product = &product * &TruncSeries::binomial_factor(k, e, trunc_degree);
        }
        total = &total + &product.scale(&rat(num, den));
    }
    total
}

/// `χ(M_{2,n}) = n! · [t^n]` of the Euler-specialized genus-2 series.
pub fn chi_m2n(n: usize) -> BigInt {
    chi_m2n_table(n).pop().expect("nonempty")
}

/// `χ(M_{2,n})` for `n = 0..=max_n`.
pub fn chi_m2n_table(max_n: usize) -> Vec<BigInt> {
    theorem2_series(max_n)
        .specialize_euler()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            let value = c * Rational::from_integer(factorial(n as u32));
            as_integer(&value).expect("Euler characteristic is an integer")
        })
        .collect()
}

/// `Σ_n t^n/n! χ(M_{2,n})` as a combination of powers of `(1 + t)`.
pub fn strata_egf(strata: &[Stratum]) -> Result<BinomialCombo> {
    let mut combo = BinomialCombo::new();
    for s in strata {
        combo = combo.add(&quotient_egf(&s.group, COVER_CHI)?.scale(&int(s.stratum_chi)));
    }
    Ok(combo)
}

pub fn eq3_combo() -> BinomialCombo {
    strata_egf(&m2_strata()).expect("catalog is valid")
}

/// Harer–Zagier: `χ_orb(M_{g,n}) = (-1)^n (2g-3+n)! (2g-1) / (2g)! · B_{2g}`.
pub fn harer_zagier(g: i64, n: u32) -> Result<Rational> {
    if g < 2 {
        return Err(Error::GenusOutOfRange(g));
    }
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let numerator = factorial((2 * g - 3) as u32 + n) * BigInt::from(2 * g - 1);
    let value = Rational::new(numerator, factorial(2 * g as u32)) * bernoulli(2 * g as u32);
    Ok(value * int(sign))
}

/// `Σ_s χ(s)/|G_s|` over the catalog: the orbifold Euler characteristic of
/// `M_2`.
pub fn orbifold_check() -> Rational {
    orbifold_sum(&m2_strata())
}

pub fn orbifold_sum(strata: &[Stratum]) -> Rational {
    strata
        .iter()
        .map(|s| rat(s.stratum_chi, i64::from(s.group.group_order)))
        .fold(Rational::zero(), |acc, r| acc + r)
}

/// The summands `χ(s)/|G_s|` written over a common `denominator`, as
/// numerators. Returns `None` if some summand does not fit.
pub fn orbifold_numerators(strata: &[Stratum], denominator: i64) -> Option<Vec<i64>> {
    strata
        .iter()
        .map(|s| {
            let r = rat(s.stratum_chi * denominator, i64::from(s.group.group_order));
            as_integer(&r).and_then(|n| i64::try_from(n).ok())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivariant::{palindrome_check, xi};
    use crate::symfunc::{Partition, SymFunc};

    #[test]
    fn catalog_shape() {
        let strata = m2_strata();
        let orders: Vec<u32> = strata.iter().map(|s| s.group.group_order).collect();
        assert_eq!(orders, vec![10, 24, 48, 12, 4, 8, 2]);
        let mults: Vec<u32> = strata[0].group.classes.iter().map(|c| c.multiplicity).collect();
        assert_eq!(mults, vec![1, 1, 4, 4]);
        let mults: Vec<u32> = strata[2].group.classes.iter().map(|c| c.multiplicity).collect();
        assert_eq!(mults, vec![1, 1, 12, 6, 8, 8, 12]);
        let chis: Vec<i64> = strata.iter().map(|s| s.stratum_chi).collect();
        assert_eq!(chis, vec![1, 1, 1, -2, 3, -2, -1]);
        assert_eq!(chis.iter().sum::<i64>(), 1);
        assert_eq!(stratum_chis_from_lemma1().to_vec(), chis);
    }

    #[test]
    fn catalog_reproduces_pentagon_summands() {
        let n = 10;
        let s = &m2_strata()[0];
        let bf = |k, e| TruncSeries::binomial_factor(k, e, n);
        assert_eq!(xi(&s.group.classes[2], COVER_CHI, n).unwrap(), &bf(1, 3) * &bf(5, -1));
        assert_eq!(
            xi(&s.group.classes[3], COVER_CHI, n).unwrap(),
            &(&(&bf(1, 1) * &bf(2, 1)) * &bf(5, 1)) * &bf(10, -1)
        );
    }

    #[test]
    fn low_degree_coefficients() {
        let s = theorem2_series(4);
        assert_eq!(s.coeff(0), SymFunc::one());
        assert_eq!(s.coeff(1), SymFunc::p(1).scale(&int(2)));
        assert_eq!(s.coeff(2), SymFunc::monomial([1, 1].into(), int(1)));
        assert!(s.coeff(3).is_zero());
        let t4 = SymFunc::from_terms([
            (Partition::single(4), rat(1, 2)),
            ([3, 1].into(), rat(2, 3)),
            ([1, 1, 1, 1].into(), rat(-1, 6)),
        ]);
        assert_eq!(s.coeff(4), t4);
        assert_eq!(s, theorem2_closed_form(4));
    }

    #[test]
    fn euler_characteristics() {
        let table: Vec<i64> = chi_m2n_table(8).iter().map(|v| i64::try_from(v).unwrap()).collect();
        assert_eq!(table, vec![1, 2, 2, 0, -4, 0, -24, 168, -1512]);
        assert_eq!(chi_m2n(4), BigInt::from(-4));
    }

    #[test]
    fn egf_combo() {
        let combo = eq3_combo();
        assert_eq!(combo.coeff(-2), Some(&rat(-1, 240)));
        assert_eq!(combo.coeff(2), Some(&rat(3, 8)));
        assert_eq!(combo.coeff(5), None);
        assert!(palindrome_check(&combo));
    }

    #[test]
    fn orbifold() {
        assert_eq!(orbifold_check(), rat(-1, 240));
        assert_eq!(harer_zagier(2, 0).unwrap(), rat(-1, 240));
        assert_eq!(harer_zagier(2, 5).unwrap(), int(3));
        assert_eq!(harer_zagier(2, 7).unwrap(), int(168));
        assert_eq!(harer_zagier(1, 3), Err(Error::GenusOutOfRange(1)));
        assert_eq!(
            orbifold_numerators(&m2_strata(), 240).unwrap(),
            vec![24, 10, 5, -40, 180, -60, -120]
        );
    }
}
