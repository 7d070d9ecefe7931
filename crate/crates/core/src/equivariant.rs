//! Equivariant Euler characteristics of `F(X, n)/G` for a finite group `G`
//! acting on a space `X` with isolated fixed points.
//!
//! The group is described by conjugacy-class data: for each class, the order
//! `v` of its elements, the number `O_k` of orbits of each length `k < v`
//! (`k | v`), and the class size. Each element contributes
//!
//! ```text
//! ξ(g) = Π_{k|v, k<v} (1 + p_k t^k)^{O_k} · (1 + p_v t^v)^{(χ(X) - Σ l·O_l)/v}
//! ```
//!
//! and the generating series of `F(X, n)/G` is the average of `ξ` over `G`.
//! [`xi_via_moebius`] evaluates the same product from the Möbius-inverted
//! Lefschetz numbers of the powers `g^d`, and is kept as an independent route.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactmath::{divisors, gen_binomial, int, moebius, rat};
use crate::series::TruncSeries;
use crate::{Error, Rational, Result};

/// One conjugacy class (or any set of elements sharing the same orbit data).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElementClass {
    pub order: u32,
    /// `k -> O_k` for proper divisors `k` of the order.
    pub orbit_counts: BTreeMap<u32, u32>,
    pub multiplicity: u32,
}

impl GroupElementClass {
    pub fn identity() -> Self {
        GroupElementClass { order: 1, orbit_counts: BTreeMap::new(), multiplicity: 1 }
    }

    pub fn new(order: u32, orbits: &[(u32, u32)], multiplicity: u32) -> Self {
        let orbit_counts = orbits.iter().copied().filter(|&(_, o)| o > 0).collect();
        GroupElementClass { order, orbit_counts, multiplicity }
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    /// `L(g) = O_1(g)`, the number of fixed points of a non-identity element.
    pub fn fixed_points(&self) -> u32 {
        self.orbit_counts.get(&1).copied().unwrap_or(0)
    }

    /// `Σ l·O_l`: points lying on orbits shorter than the order.
    pub fn points_on_short_orbits(&self) -> i64 {
        self.orbit_counts.iter().map(|(&l, &o)| i64::from(l) * i64::from(o)).sum()
    }

    /// Exponent of `(1 + p_v t^v)`: `(χ - Σ l·O_l)/v`, the Euler characteristic
    /// of the free part divided by the cyclic group.
    pub fn free_exponent(&self, chi: i64) -> Result<i64> {
        let numerator = chi - self.points_on_short_orbits();
        let v = i64::from(self.order);
        if v == 0 || numerator % v != 0 {
            return Err(Error::NonIntegerExponent { k: self.order, numerator, denominator: v });
        }
        Ok(numerator / v)
    }

    /// Lefschetz number of `g^d`: `χ` if `g^d = e`, otherwise the number of
    /// points on orbits whose length divides `d`.
    fn lefschetz_of_power(&self, d: u64, chi: i64) -> i64 {
        let v = u64::from(self.order);
        if d.is_multiple_of(v) {
            return chi;
        }
        let g = d.gcd(&v);
        self.orbit_counts
            .iter()
            .filter(|(&l, _)| g % u64::from(l) == 0 && l < self.order)
            .map(|(&l, &o)| i64::from(l) * i64::from(o))
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteActionGroup {
    pub group_order: u32,
    pub classes: Vec<GroupElementClass>,
}

impl FiniteActionGroup {
    pub fn new(group_order: u32, classes: Vec<GroupElementClass>) -> Self {
        FiniteActionGroup { group_order, classes }
    }

    /// The trivial group `{e}`.
    pub fn trivial() -> Self {
        Self::new(1, alloc::vec![GroupElementClass::identity()])
    }
}

/// A single problem found by [`validate_group`]. `class` is the index into
/// `FiniteActionGroup::classes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    ZeroGroupOrder,
    MultiplicitySum { group_order: u32, total: u64 },
    IdentityCount(usize),
    IdentityMultiplicity { class: usize, multiplicity: u32 },
    ZeroOrder { class: usize },
    ZeroMultiplicity { class: usize },
    InvalidOrbitLength { class: usize, order: u32, length: u32 },
    NonIntegerExponent { class: usize, order: u32, numerator: i64 },
}

impl ValidationIssue {
    pub fn is_non_integer_exponent(&self) -> bool {
        matches!(self, ValidationIssue::NonIntegerExponent { .. })
    }
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ValidationIssue::*;
        match self {
            ZeroGroupOrder => write!(f, "group order must be positive"),
            MultiplicitySum { group_order, total } => {
                write!(f, "class multiplicities sum to {total}, expected |G| = {group_order}")
            }
            IdentityCount(n) => write!(f, "expected exactly one identity class, found {n}"),
            IdentityMultiplicity { class, multiplicity } => {
                write!(f, "class {class}: identity class has multiplicity {multiplicity}, expected 1")
            }
            ZeroOrder { class } => write!(f, "class {class}: element order must be positive"),
            ZeroMultiplicity { class } => write!(f, "class {class}: multiplicity must be positive"),
            InvalidOrbitLength { class, order, length } => write!(
                f,
                "class {class}: orbit length {length} is not a proper divisor of the order {order}"
            ),
            NonIntegerExponent { class, order, numerator } => write!(
                f,
                "class {class}: inconsistent action data, {order} does not divide chi - sum l*O_l = {numerator}"
            ),
        }
    }
}

/// Checks the structural conditions on the class data together with the
/// integrality of every free-orbit exponent for the given `chi`.
pub fn validate_group(group: &FiniteActionGroup, chi: i64) -> core::result::Result<(), Vec<ValidationIssue>> {
    let mut issues = Vec::new();
    if group.group_order == 0 {
        issues.push(ValidationIssue::ZeroGroupOrder);
    }
    let total: u64 = group.classes.iter().map(|c| u64::from(c.multiplicity)).sum();
    if total != u64::from(group.group_order) {
        issues.push(ValidationIssue::MultiplicitySum { group_order: group.group_order, total });
    }
    let identities: Vec<usize> = group
        .classes
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_identity())
        .map(|(i, _)| i)
        .collect();
    if identities.len() != 1 {
        issues.push(ValidationIssue::IdentityCount(identities.len()));
    }
    for &i in &identities {
        let m = group.classes[i].multiplicity;
        if m != 1 {
            issues.push(ValidationIssue::IdentityMultiplicity { class: i, multiplicity: m });
        }
    }
    for (i, class) in group.classes.iter().enumerate() {
        if class.order == 0 {
            issues.push(ValidationIssue::ZeroOrder { class: i });
            continue;
        }
        if class.multiplicity == 0 {
            issues.push(ValidationIssue::ZeroMultiplicity { class: i });
        }
        let mut keys_ok = true;
        for &k in class.orbit_counts.keys() {
            if k == 0 || k >= class.order || class.order % k != 0 {
                keys_ok = false;
                issues.push(ValidationIssue::InvalidOrbitLength {
                    class: i,
                    order: class.order,
                    length: k,
                });
            }
        }
        if keys_ok {
            if let Err(Error::NonIntegerExponent { numerator, .. }) = class.free_exponent(chi) {
                issues.push(ValidationIssue::NonIntegerExponent {
                    class: i,
                    order: class.order,
                    numerator,
                });
            }
        }
    }
    if issues.is_empty() {
        Ok(())
    } else {
        Err(issues)
    }
}

/// `ξ(g)` in closed form, truncated at `t^N`.
pub fn xi(class: &GroupElementClass, chi: i64, trunc_degree: usize) -> Result<TruncSeries> {
    let mut out = TruncSeries::binomial_factor(class.order, class.free_exponent(chi)?, trunc_degree);
    for (&k, &o) in &class.orbit_counts {
        out = &out * &TruncSeries::binomial_factor(k, i64::from(o), trunc_degree);
    }
    Ok(out)
}

/// Exponent of `(1 + p_k t^k)` in `ξ(g)` from the Möbius sum
/// `(1/k) Σ_{d|k} μ(k/d) L(g^d)`.
pub fn moebius_exponent(class: &GroupElementClass, chi: i64, k: u32) -> Result<i64> {
    let k64 = u64::from(k);
    let mut numerator = 0i64;
    for d in divisors(k64)? {
        let mu = i64::from(moebius(k64 / d)?);
        if mu != 0 {
            numerator += mu * class.lefschetz_of_power(d, chi);
        }
    }
    if numerator % i64::from(k) != 0 {
        return Err(Error::NonIntegerExponent { k, numerator, denominator: i64::from(k) });
    }
    Ok(numerator / i64::from(k))
}

/// `ξ(g)` evaluated factor by factor from the Möbius-inverted Lefschetz
/// numbers, for every `k <= N`.
pub fn xi_via_moebius(class: &GroupElementClass, chi: i64, trunc_degree: usize) -> Result<TruncSeries> {
    if class.order == 0 {
        return Err(Error::NonPositiveArgument("element order"));
    }
    let mut out = TruncSeries::one(trunc_degree);
    for k in 1..=trunc_degree as u32 {
        let e = moebius_exponent(class, chi, k)?;
        if e != 0 {
            out = &out * &TruncSeries::binomial_factor(k, e, trunc_degree);
        }
    }
    Ok(out)
}

/// `Σ_n t^n χ^{S_n}(F(X, n)/G)`: the class-weighted average of `ξ`.
pub fn quotient_series(group: &FiniteActionGroup, chi: i64, trunc_degree: usize) -> Result<TruncSeries> {
    validate_group(group, chi).map_err(Error::InvalidGroup)?;
    let mut total = TruncSeries::zero(trunc_degree);
    for class in &group.classes {
        let term = xi(class, chi, trunc_degree)?.scale(&int(i64::from(class.multiplicity)));
        total = &total + &term;
    }
    Ok(total.scale(&rat(1, i64::from(group.group_order))))
}

/// `Σ_n t^n/n! χ(F(X, n)/G)` as a combination of powers of `(1 + t)`:
/// `(1/|G|)((1+t)^χ + Σ_{g≠e} (1+t)^{L(g)})`.
pub fn quotient_egf(group: &FiniteActionGroup, chi: i64) -> Result<BinomialCombo> {
    validate_group(group, chi).map_err(Error::InvalidGroup)?;
    let weight = rat(1, i64::from(group.group_order));
    let mut combo = BinomialCombo::new();
    for class in &group.classes {
        let exponent = if class.is_identity() { chi } else { i64::from(class.fixed_points()) };
        combo.add_term(exponent, &weight * int(i64::from(class.multiplicity)));
    }
    Ok(combo)
}

/// Coefficient types usable in a [`BinomialCombo`].
pub trait ComboCoefficient: Clone + PartialEq + fmt::Display {
    fn zero_value() -> Self;
    fn is_zero_value(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, c: &Rational) -> Self;
    /// The value as a plain rational, when it has no symbolic part.
    fn as_rational(&self) -> Option<Rational>;
}

impl ComboCoefficient for Rational {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, c: &Rational) -> Self {
        self * c
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// `Σ_L c_L (1 + t)^L` with integer (possibly negative) exponents `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialCombo<C = Rational> {
    terms: BTreeMap<i64, C>,
}

impl<C: ComboCoefficient> Default for BinomialCombo<C> {
    fn default() -> Self {
        BinomialCombo { terms: BTreeMap::new() }
    }
}

impl<C: ComboCoefficient> BinomialCombo<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut combo = Self::new();
        for (l, c) in terms {
            combo.add_term(l, c);
        }
        combo
    }

    pub fn add_term(&mut self, exponent: i64, c: C) {
        let merged = match self.terms.get(&exponent) {
            Some(old) => old.plus(&c),
            None => c,
        };
        if merged.is_zero_value() {
            self.terms.remove(&exponent);
        } else {
            self.terms.insert(exponent, merged);
        }
    }

    pub fn coeff(&self, exponent: i64) -> Option<&C> {
        self.terms.get(&exponent)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(&l, c)| (l, c))
    }

    pub fn exponents(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms().map(|(l, v)| (l, v.times(c))))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(l, c.clone());
        }
        out
    }

    /// Coefficient of `t^n`: `Σ_L c_L · binom(L, n)`.
    pub fn egf_coefficient(&self, n: u32) -> C {
        self.terms().fold(C::zero_value(), |acc, (l, c)| acc.plus(&c.times(&gen_binomial(l, n))))
    }

    /// Coefficients of `t^0..=t^N`.
    pub fn expand(&self, trunc_degree: usize) -> Vec<C> {
        (0..=trunc_degree as u32).map(|n| self.egf_coefficient(n)).collect()
    }

    /// True iff every present exponent `L` has a partner `2·center - L` with
    /// the same coefficient.
    pub fn is_palindromic_about(&self, center: i64) -> bool {
        self.terms().all(|(l, c)| self.terms.get(&(2 * center - l)) == Some(c))
    }
}

/// Symmetry `c_L = c_{4-L}` of a combination (fixed points of `g` and of its
/// composite with the hyperelliptic involution sum to 4).
pub fn palindrome_check<C: ComboCoefficient>(combo: &BinomialCombo<C>) -> bool {
    combo.is_palindromic_about(2)
}

fn binomial_power(l: i64) -> alloc::string::String {
    match l {
        0 => alloc::string::String::new(),
        1 => "(1+t)".into(),
        _ => alloc::format!("(1+t)^{l}"),
    }
}

impl<C: ComboCoefficient> fmt::Display for BinomialCombo<C> {
    /// `-1/240*(1+t)^-2 - 1/12 + 2/5*(1+t) + ...`; symbolic coefficients are
    /// parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (l, c) in self.terms() {
            let power = binomial_power(l);
            match c.as_rational() {
                Some(r) => {
                    let sep = match (first, r.is_negative()) {
                        (true, true) => "-",
                        (true, false) => "",
                        (false, true) => " - ",
                        (false, false) => " + ",
                    };
                    let magnitude = r.abs();
                    f.write_str(sep)?;
                    if power.is_empty() {
                        write!(f, "{magnitude}")?;
                    } else if magnitude.is_one() {
                        f.write_str(&power)?;
                    } else {
                        write!(f, "{magnitude}*{power}")?;
                    }
                }
                None => {
                    if !first {
                        f.write_str(" + ")?;
                    }
                    if power.is_empty() {
                        write!(f, "({c})")?;
                    } else {
                        write!(f, "({c})*{power}")?;
                    }
                }
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `χ(B(ℂ*, n)/ℂ*)`: 1 for odd `n`, 0 for even `n`.
pub fn lemma1_chi(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::NonPositiveArgument("lemma1_chi"));
    }
    Ok((n % 2) as i64)
}

/// Euler characteristics of the strata `U_d` of `B(ℂ*, n)/ℂ*` by maximal
/// symmetry order `d | n`.
///
/// Solves `Σ_{k|m} k·χ(U_{n/k}) = (-1)^{m-1}` for each divisor `m` of `n`,
/// by forward substitution over `m` in increasing order.
pub fn lemma1_strata(n: u64) -> Result<BTreeMap<u64, i64>> {
    let mut values: BTreeMap<u64, i64> = BTreeMap::new();
    for m in divisors(n)? {
        let rhs: i64 = if m % 2 == 1 { 1 } else { -1 };
        let known: i64 = divisors(m)?
            .into_iter()
            .filter(|&k| k < m)
            .map(|k| k as i64 * values[&(n / k)])
            .sum();
        let numerator = BigInt::from(rhs - known);
        let (q, r) = numerator.div_rem(&BigInt::from(m));
        assert!(r.is_zero(), "non-integral stratum Euler characteristic");
        values.insert(n / m, i64::try_from(q).expect("small"));
    }
    Ok(values)
}
