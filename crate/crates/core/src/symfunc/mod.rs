//! Symmetric functions in the power-sum basis.
//!
//! A [`SymFunc`] is a finite rational combination of monomials
//! `p_λ = p_{λ1} p_{λ2} ...`. Multiplication concatenates partitions, the Adams
//! operation `Ψ_k` multiplies every part by `k`, and [`to_schur`] converts to
//! the Schur basis through `p_λ = Σ_μ χ^μ(λ) s_μ`.

mod character;
mod partition;

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt::{self, Write as _};
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

pub use character::{mn_character, CharacterTable};
pub use partition::{partitions_of, Partition};

use crate::Rational;

/// A symmetric function written in the power-sum basis. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Partition::empty(), c)
    }

    /// The power sum `p_k`.
    pub fn p(k: u32) -> Self {
        Self::monomial(Partition::single(k), Rational::one())
    }

    /// `c · p_λ`.
    pub fn monomial(lambda: Partition, c: Rational) -> Self {
        let mut f = Self::zero();
        f.add_term(lambda, c);
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(terms: I) -> Self {
        let mut f = Self::zero();
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    /// Adds `c · p_λ` in place.
    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in rendering order: by weight, then reverse-lexicographically.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True if every term has weight `n` (vacuously true for zero).
    pub fn is_homogeneous(&self, n: u32) -> bool {
        self.terms.keys().all(|l| l.weight() == n)
    }

    /// The degree-`n` graded component.
    pub fn component(&self, n: u32) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.weight() == n)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    /// The Adams operation `Ψ_k`: `p_λ ↦ p_{kλ}`.
    pub fn adams(&self, k: u32) -> SymFunc {
        assert!(k >= 1, "Adams operations are indexed by positive integers");
        SymFunc {
            terms: self.terms.iter().map(|(l, c)| (l.scaled(k), c.clone())).collect(),
        }
    }

    /// Specialization `p_1 = 1`, `p_k = 0` for `k > 1`.
    pub fn specialize_euler(&self) -> Rational {
        self.terms
            .iter()
            .filter(|(l, _)| l.all_ones())
            .fold(Rational::zero(), |acc, (_, c)| acc + c)
    }

    /// Expansion in the Schur basis.
    pub fn to_schur(&self) -> SchurExpansion {
        to_schur_with(self, &mut CharacterTable::new())
    }
}

/// Linear combination of Schur functions `s_μ`, indexed by partitions.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, Rational>,
}

impl SchurExpansion {
    pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(terms: I) -> Self {
        let mut out = BTreeMap::new();
        for (mu, c) in terms {
            accumulate(&mut out, mu, c);
        }
        SchurExpansion { terms: out }
    }

    pub fn coeff(&self, mu: &Partition) -> Rational {
        self.terms.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every Schur coefficient is an integer, i.e. the expansion is
    /// a virtual character.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

fn accumulate(map: &mut BTreeMap<Partition, Rational>, key: Partition, c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(key.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

/// Converts `f` to the Schur basis, reusing the given character table.
pub fn to_schur_with(f: &SymFunc, table: &mut CharacterTable) -> SchurExpansion {
    let mut out = BTreeMap::new();
    let mut shapes: BTreeMap<u32, alloc::vec::Vec<Partition>> = BTreeMap::new();
    for (lambda, c) in f.terms() {
        let n = lambda.weight();
        let mus = shapes.entry(n).or_insert_with(|| partitions_of(n));
        for mu in mus.iter() {
            let chi = table.value(mu, lambda).expect("weights agree");
            if chi != 0 {
                accumulate(&mut out, mu.clone(), c * Rational::from_integer(chi.into()));
            }
        }
    }
    SchurExpansion { terms: out }
}

/// Convenience wrapper for [`SymFunc::to_schur`].
pub fn to_schur(f: &SymFunc) -> SchurExpansion {
    f.to_schur()
}

/// Convenience wrapper for [`SymFunc::adams`].
pub fn adams(k: u32, f: &SymFunc) -> SymFunc {
    f.adams(k)
}

impl<'a> Add<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (l, c) in rhs.terms() {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: SymFunc) -> SymFunc {
        &self + &rhs
    }
}

impl<'a> Sub<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (l, c) in rhs.terms() {
            out.add_term(l.clone(), -c.clone());
        }
        out
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: SymFunc) -> SymFunc {
        &self - &rhs
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

impl<'a> Mul<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(a.join(b), x * y);
            }
        }
        out
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: SymFunc) -> SymFunc {
        &self * &rhs
    }
}

/// Writes `c0*m0 + c1*m1 - ...`, printing a bare monomial for unit
/// coefficients and a bare coefficient for the empty monomial.
pub(crate) fn write_combination<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a Rational, String)>,
{
    let mut first = true;
    for (c, monomial) in terms {
        let negative = c.is_negative();
        let magnitude = c.abs();
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if monomial.is_empty() {
            write!(f, "{magnitude}")?;
        } else if magnitude.is_one() {
            f.write_str(&monomial)?;
        } else {
            write!(f, "{magnitude}*{monomial}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// `p3*p1`, `p1^4`; empty for the empty partition.
pub fn power_sum_monomial(lambda: &Partition) -> String {
    let mut s = String::new();
    for (i, (part, mult)) in lambda.multiplicities().into_iter().enumerate() {
        if i > 0 {
            s.push('*');
        }
        let _ = write!(s, "p{part}");
        if mult > 1 {
            let _ = write!(s, "^{mult}");
        }
    }
    s
}

/// `s[3,1]`; empty for the empty partition.
pub fn schur_monomial(mu: &Partition) -> String {
    if mu.is_empty() {
        String::new()
    } else {
        alloc::format!("s{mu}")
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.terms().map(|(l, c)| (c, power_sum_monomial(l))))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.terms().map(|(l, c)| (c, schur_monomial(l))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};
    use alloc::string::ToString;

    fn pl<const N: usize>(parts: [u32; N]) -> SymFunc {
        SymFunc::monomial(parts.into(), Rational::one())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&SymFunc::p(1) * &SymFunc::p(3), pl([3, 1]));
        let f = &SymFunc::p(1) + &SymFunc::p(2);
        assert!((&f + &f.scale(&int(-1))).is_zero());
        assert_eq!(&f * &SymFunc::p(1), &pl([1, 1]) + &pl([2, 1]));
        assert!(SymFunc::zero().scale(&int(3)).is_zero());
        assert!(f.scale(&int(0)).is_zero());
    }

    #[test]
    fn adams_examples() {
        let f = &SymFunc::p(1) + &SymFunc::p(3);
        assert_eq!(f.adams(2), &SymFunc::p(2) + &SymFunc::p(6));
        assert_eq!(f.adams(1), f);
        assert_eq!(SymFunc::p(1).adams(3).adams(2), SymFunc::p(6));
        assert_eq!(SymFunc::one().adams(5), SymFunc::one());
    }

    #[test]
    fn euler_specialization() {
        assert_eq!(pl([1, 1]).specialize_euler(), int(1));
        assert_eq!(SymFunc::p(2).specialize_euler(), int(0));
        assert_eq!(SymFunc::p(1).scale(&int(2)).specialize_euler(), int(2));
        assert_eq!(SymFunc::one().specialize_euler(), int(1));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(SymFunc::p(1).to_schur().to_string(), "s[1]");
        assert_eq!(pl([3, 1]).to_schur().to_string(), "s[4] - s[2,2] + s[1,1,1,1]");
        let f = SymFunc::from_terms([
            (Partition::single(4), rat(1, 2)),
            ([3, 1].into(), rat(2, 3)),
            ([1, 1, 1, 1].into(), rat(-1, 6)),
        ]);
        assert_eq!(f.to_schur().to_string(), "s[4] - s[3,1] - s[2,2]");
        assert_eq!(pl([1, 1]).to_schur().to_string(), "s[2] + s[1,1]");
        assert_eq!(SymFunc::one().to_schur().to_string(), "1");
    }

    #[test]
    fn rendering() {
        let f = SymFunc::from_terms([
            ([1, 1, 1, 1].into(), rat(-1, 6)),
            ([3, 1].into(), rat(2, 3)),
            (Partition::single(4), rat(1, 2)),
        ]);
        assert_eq!(f.to_string(), "1/2*p4 + 2/3*p3*p1 - 1/6*p1^4");
        assert_eq!(SymFunc::zero().to_string(), "0");
        assert_eq!(SymFunc::one().to_string(), "1");
        assert_eq!((-SymFunc::p(2)).to_string(), "-p2");
        let g = &SymFunc::constant(int(-3)) + &pl([2, 2, 1]).scale(&int(5));
        assert_eq!(g.to_string(), "-3 + 5*p2^2*p1");
    }

    #[test]
    fn components() {
        let f = &(&SymFunc::one() + &SymFunc::p(2)) + &pl([1, 1]);
        assert!(!f.is_homogeneous(2));
        assert_eq!(f.component(2), &SymFunc::p(2) + &pl([1, 1]));
        assert!(f.component(2).is_homogeneous(2));
        assert!(SymFunc::zero().is_homogeneous(7));
    }
}
