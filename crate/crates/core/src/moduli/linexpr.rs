use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Sub};

use num_traits::{One, Signed, Zero};

use crate::equivariant::ComboCoefficient;
use crate::Rational;

/// Named unknowns of the hyperelliptic generating function and table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Unknown {
    A,
    B,
    C,
    X,
    Y,
}

impl Unknown {
    pub const ALL: [Unknown; 5] = [Unknown::A, Unknown::B, Unknown::C, Unknown::X, Unknown::Y];

    pub fn name(self) -> &'static str {
        match self {
            Unknown::A => "a",
            Unknown::B => "b",
            Unknown::C => "c",
            Unknown::X => "x",
            Unknown::Y => "y",
        }
    }
}

/// `constant + Σ coeff·unknown`, with zero coefficients dropped.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinExpr {
    constant: Rational,
    coeffs: BTreeMap<Unknown, Rational>,
}

impl LinExpr {
    pub fn constant(c: Rational) -> Self {
        LinExpr { constant: c, coeffs: BTreeMap::new() }
    }

    pub fn unknown(u: Unknown) -> Self {
        Self::term(u, Rational::one())
    }

    pub fn term(u: Unknown, c: Rational) -> Self {
        let mut e = LinExpr::default();
        if !c.is_zero() {
            e.coeffs.insert(u, c);
        }
        e
    }

    pub fn constant_part(&self) -> &Rational {
        &self.constant
    }

    pub fn coeff(&self, u: Unknown) -> Rational {
        self.coeffs.get(&u).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn unknowns(&self) -> impl Iterator<Item = (Unknown, &Rational)> {
        self.coeffs.iter().map(|(&u, c)| (u, c))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.constant.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LinExpr::default();
        }
        LinExpr {
            constant: &self.constant * c,
            coeffs: self.coeffs.iter().map(|(&u, v)| (u, v * c)).collect(),
        }
    }

    /// Replaces the given unknowns by values; the others stay symbolic.
    pub fn substitute(&self, values: &BTreeMap<Unknown, Rational>) -> Self {
        let mut out = LinExpr::constant(self.constant.clone());
        for (&u, c) in &self.coeffs {
            match values.get(&u) {
                Some(v) => out.constant += c * v,
                None => out = &out + &LinExpr::term(u, c.clone()),
            }
        }
        out
    }

    /// The rational value if no unknowns remain.
    pub fn value(&self) -> Option<Rational> {
        self.is_constant().then(|| self.constant.clone())
    }
}

impl From<Rational> for LinExpr {
    fn from(c: Rational) -> Self {
        LinExpr::constant(c)
    }
}

impl<'a> Add<&'a LinExpr> for &'a LinExpr {
    type Output = LinExpr;
    fn add(self, rhs: &LinExpr) -> LinExpr {
        let mut out = self.clone();
        out.constant += &rhs.constant;
        for (&u, c) in &rhs.coeffs {
            let slot = out.coeffs.entry(u).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                out.coeffs.remove(&u);
            }
        }
        out
    }
}

impl<'a> Sub<&'a LinExpr> for &'a LinExpr {
    type Output = LinExpr;
    fn sub(self, rhs: &LinExpr) -> LinExpr {
        self + &rhs.scale(&-Rational::one())
    }
}

impl ComboCoefficient for LinExpr {
    fn zero_value() -> Self {
        LinExpr::default()
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, c: &Rational) -> Self {
        LinExpr::scale(self, c)
    }
    fn as_rational(&self) -> Option<Rational> {
        self.value()
    }
}

impl fmt::Display for LinExpr {
    /// `3x - 6`, `2a + 2b + c - 121/120`, `(1/2)y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>, negative: bool| -> fmt::Result {
            let s = match (first, negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            f.write_str(s)
        };
        for (&u, c) in &self.coeffs {
            sep(f, c.is_negative())?;
            let m = c.abs();
            if m.is_one() {
            } else if m.is_integer() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({m})")?;
            }
            f.write_str(u.name())?;
        }
        if !self.constant.is_zero() || self.coeffs.is_empty() {
            sep(f, self.constant.is_negative())?;
            write!(f, "{}", self.constant.abs())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};
    use alloc::string::ToString;

    #[test]
    fn arithmetic_and_rendering() {
        let x = LinExpr::unknown(Unknown::X);
        let e = &x.scale(&int(3)) - &LinExpr::constant(int(6));
        assert_eq!(e.to_string(), "3x - 6");
        assert!((&e - &e).is_zero());
        assert_eq!(LinExpr::default().to_string(), "0");
        assert_eq!(LinExpr::constant(int(-24)).to_string(), "-24");
        assert_eq!(LinExpr::term(Unknown::Y, rat(-1, 2)).to_string(), "-(1/2)y");
        let sum = &(&LinExpr::term(Unknown::A, int(2)) + &LinExpr::term(Unknown::B, int(2)))
            + &LinExpr::unknown(Unknown::C);
        assert_eq!(sum.to_string(), "2a + 2b + c");
    }

    #[test]
    fn substitution() {
        let e = &LinExpr::term(Unknown::X, int(3)) - &LinExpr::constant(int(6));
        let values = BTreeMap::from([(Unknown::X, int(2))]);
        assert_eq!(e.substitute(&values).value(), Some(int(0)));
        assert_eq!(e.value(), None);
        let partial = BTreeMap::from([(Unknown::Y, int(1))]);
        assert_eq!(e.substitute(&partial), e);
    }
}
