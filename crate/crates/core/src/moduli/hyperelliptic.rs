//! Hyperelliptic curves of genus `g` with marked points. The exponential
//! generating function of `χ(H_{g,n})` is a palindromic combination of powers
//! of `(1 + t)` whose middle coefficients `a, b, c` stay symbolic.

use alloc::collections::BTreeMap;

use num_bigint::BigInt;

use super::linexpr::{LinExpr, Unknown};
use crate::equivariant::BinomialCombo;
use crate::exactmath::{falling_factorial, factorial, int, rat};
use crate::{Error, Rational, Result};

/// Genus-2 values of the unknown entries `χ(H_{2,2})` and `χ(H_{2,4})`, read
/// off the `χ(M_{2,n})` table.
pub const GENUS2_X: i64 = 2;
pub const GENUS2_Y: i64 = -4;

fn check_genus(g: i64) -> Result<()> {
    if g < 2 {
        Err(Error::GenusOutOfRange(g))
    } else {
        Ok(())
    }
}

/// `4g(2g+1)(2g+2)`
fn orbifold_denominator(g: i64) -> i64 {
    4 * g * (2 * g + 1) * (2 * g + 2)
}

/// Orbifold Euler characteristic of `H_{g,0}`: `-1/(4g(2g+1)(2g+2))`.
pub fn hyperelliptic_orbifold(g: i64) -> Result<Rational> {
    check_genus(g)?;
    Ok(rat(-1, orbifold_denominator(g)))
}

/// `χ(H_{g,n})`, symbolic in `x = χ(H_{g,2})` and `y = χ(H_{g,4})`.
pub fn chi_hyperelliptic(g: i64, n: u32) -> Result<LinExpr> {
    check_genus(g)?;
    let d = hyperelliptic_orbifold(g)?;
    let top = 2 * g + 2;
    let value = match n {
        0 => LinExpr::constant(int(1)),
        1 => LinExpr::constant(int(2)),
        2 => LinExpr::unknown(Unknown::X),
        3 => &LinExpr::term(Unknown::X, int(3)) - &LinExpr::constant(int(6)),
        4 => LinExpr::unknown(Unknown::Y),
        5 => LinExpr::constant(int(0)),
        _ if i64::from(n) <= top => {
            // (2g+2)!/(2g+2-n)! + (-1)^n (2g-3+n)!/(2g-3)!
            let sign = if n.is_multiple_of(2) { 1 } else { -1 };
            let bracket = falling_factorial(top, n)
                + BigInt::from(sign) * falling_factorial(2 * g - 3 + i64::from(n), n);
            LinExpr::constant(d * Rational::from_integer(bracket))
        }
        _ => {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let numerator = BigInt::from(sign) * factorial((2 * g - 3) as u32 + n);
            let denominator = factorial((2 * g - 3) as u32) * BigInt::from(orbifold_denominator(g));
            LinExpr::constant(Rational::new(numerator, denominator))
        }
    };
    Ok(value)
}

/// The linear relation on `a, b, c` coming from `χ(H_{g,0}) = 1`, written as
/// `equation = 0`, and the outer coefficient `d` of the generating function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperellipticConstraint {
    /// `2a + 2b + c - 1 - 1/(2g(2g+1)(2g+2))`
    pub equation: LinExpr,
    /// `-1/(4g(2g+1)(2g+2))`, the coefficient at `(1+t)^{2-2g}` and `(1+t)^{2+2g}`.
    pub d: Rational,
}

impl HyperellipticConstraint {
    /// Whether the given values of `a, b, c` satisfy the relation.
    pub fn holds_for(&self, a: &Rational, b: &Rational, c: &Rational) -> bool {
        let values = BTreeMap::from([
            (Unknown::A, a.clone()),
            (Unknown::B, b.clone()),
            (Unknown::C, c.clone()),
        ]);
        self.equation.substitute(&values).value() == Some(int(0))
    }
}

pub fn hyperelliptic_constraint(g: i64) -> Result<HyperellipticConstraint> {
    check_genus(g)?;
    let lhs = &(&LinExpr::term(Unknown::A, int(2)) + &LinExpr::term(Unknown::B, int(2)))
        + &LinExpr::unknown(Unknown::C);
    let rhs = int(1) + rat(1, 2 * g * (2 * g + 1) * (2 * g + 2));
    Ok(HyperellipticConstraint {
        equation: &lhs - &LinExpr::constant(rhs),
        d: hyperelliptic_orbifold(g)?,
    })
}

/// `d(1+t)^{2-2g} + a + b(1+t) + c(1+t)^2 + b(1+t)^3 + a(1+t)^4 + d(1+t)^{2+2g}`.
pub fn hyperelliptic_template(g: i64) -> Result<BinomialCombo<LinExpr>> {
    check_genus(g)?;
    let d = LinExpr::constant(hyperelliptic_orbifold(g)?);
    let a = LinExpr::unknown(Unknown::A);
    let b = LinExpr::unknown(Unknown::B);
    let c = LinExpr::unknown(Unknown::C);
    Ok(BinomialCombo::from_terms([
        (2 - 2 * g, d.clone()),
        (0, a.clone()),
        (1, b.clone()),
        (2, c),
        (3, b),
        (4, a),
        (2 + 2 * g, d),
    ]))
}
