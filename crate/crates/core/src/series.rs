//! Truncated power series in `t` with symmetric-function coefficients.
//!
//! Every series carries the weight grading: the coefficient of `t^n` is
//! homogeneous of weight `n`, because `p_k` always enters paired with `t^k`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use num_traits::Zero;

use crate::exactmath::gen_binomial;
use crate::symfunc::{Partition, SymFunc};
use crate::{Error, Rational, Result};

/// `Σ_{n=0}^{N} c_n t^n  (mod t^{N+1})` with `c_n` homogeneous of weight `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<SymFunc>,
}

impl TruncSeries {
    pub fn zero(trunc_degree: usize) -> Self {
        TruncSeries { coeffs: vec![SymFunc::zero(); trunc_degree + 1] }
    }

    pub fn one(trunc_degree: usize) -> Self {
        let mut s = Self::zero(trunc_degree);
        s.coeffs[0] = SymFunc::one();
        s
    }

    /// Builds a series from its coefficients `c_0..=c_N`, rejecting any
    /// coefficient that breaks the weight grading. An empty vector is read as
    /// the zero series truncated at degree 0.
    pub fn from_coeffs(mut coeffs: Vec<SymFunc>) -> Result<Self> {
        if coeffs.is_empty() {
            coeffs.push(SymFunc::zero());
        }
        if let Some(degree) = coeffs
            .iter()
            .enumerate()
            .position(|(n, c)| !c.is_homogeneous(n as u32))
        {
            return Err(Error::Grading { degree });
        }
        Ok(TruncSeries { coeffs })
    }

    /// `(1 + p_k t^k)^e` truncated at `t^N`, for any integer `e`.
    pub fn binomial_factor(k: u32, e: i64, trunc_degree: usize) -> Self {
        assert!(k >= 1, "binomial factors are indexed by positive integers");
        let mut s = Self::zero(trunc_degree);
        let mut j = 0u32;
        while (k as usize) * (j as usize) <= trunc_degree {
            let c = gen_binomial(e, j);
            if c.is_zero() {
                break;
            }
            let lambda = Partition::new(vec![k; j as usize]);
            s.coeffs[(k * j) as usize] = SymFunc::monomial(lambda, c);
            j += 1;
        }
        s
    }

    pub fn trunc_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n`; zero beyond the truncation degree.
    pub fn coeff(&self, n: usize) -> SymFunc {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[SymFunc] {
        &self.coeffs
    }

    /// `(degree, coefficient)` pairs in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &SymFunc)> {
        self.coeffs.iter().enumerate()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SymFunc::is_zero)
    }

    pub fn truncate(&self, trunc_degree: usize) -> Self {
        let mut coeffs: Vec<SymFunc> = self.coeffs.iter().take(trunc_degree + 1).cloned().collect();
        coeffs.resize(trunc_degree + 1, SymFunc::zero());
        TruncSeries { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|f| f.scale(c)).collect() }
    }

    /// Entry `n` is the Euler specialization of the `t^n` coefficient. The
    /// result is an exponential generating function: `n!` times entry `n` is
    /// the ordinary Euler characteristic.
    pub fn specialize_euler(&self) -> Vec<Rational> {
        self.coeffs.iter().map(SymFunc::specialize_euler).collect()
    }

    fn check_grading(&self) {
        debug_assert!(
            self.terms().all(|(n, c)| c.is_homogeneous(n as u32)),
            "weight grading violated"
        );
    }
}

impl<'a> Add<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.trunc_degree().min(rhs.trunc_degree());
        let out = TruncSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        };
        out.check_grading();
        out
    }
}

impl Add for TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: TruncSeries) -> TruncSeries {
        &self + &rhs
    }
}

impl<'a> Mul<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.trunc_degree().min(rhs.trunc_degree());
        let mut out = TruncSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                out.coeffs[i + j] = &out.coeffs[i + j] + &prod;
            }
        }
        out.check_grading();
        out
    }
}

impl Mul for TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: TruncSeries) -> TruncSeries {
        &self * &rhs
    }
}

impl fmt::Display for TruncSeries {
    /// One line per degree: `t^n: <coefficient>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.terms() {
            if n > 0 {
                f.write_str("\n")?;
            }
            write!(f, "t^{n}: {c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn pl<const N: usize>(parts: [u32; N], c: i64) -> SymFunc {
        SymFunc::monomial(parts.into(), int(c))
    }

    #[test]
    fn one_is_identity() {
        let f = TruncSeries::binomial_factor(2, -3, 5);
        assert_eq!(&TruncSeries::one(5) * &f, f);
    }

    #[test]
    fn difference_of_squares() {
        let a = TruncSeries::binomial_factor(1, 1, 4);
        let b = TruncSeries::from_coeffs(vec![SymFunc::one(), pl([1], -1)])
            .unwrap()
            .truncate(4);
        let prod = &a * &b;
        let expected =
            TruncSeries::from_coeffs(vec![SymFunc::one(), SymFunc::zero(), pl([1, 1], -1)])
                .unwrap()
                .truncate(4);
        assert_eq!(prod, expected);
    }

    #[test]
    fn binomial_factor_examples() {
        let geometric = TruncSeries::binomial_factor(2, -1, 5);
        let expected = TruncSeries::from_coeffs(vec![
            SymFunc::one(),
            SymFunc::zero(),
            pl([2], -1),
            SymFunc::zero(),
            pl([2, 2], 1),
            SymFunc::zero(),
        ])
        .unwrap();
        assert_eq!(geometric, expected);

        let square = TruncSeries::binomial_factor(1, 2, 3);
        let expected =
            TruncSeries::from_coeffs(vec![SymFunc::one(), pl([1], 2), pl([1, 1], 1), SymFunc::zero()])
                .unwrap();
        assert_eq!(square, expected);

        let inverse_square = TruncSeries::binomial_factor(1, -2, 2);
        let expected =
            TruncSeries::from_coeffs(vec![SymFunc::one(), pl([1], -2), pl([1, 1], 3)]).unwrap();
        assert_eq!(inverse_square, expected);
        assert_eq!(
            &inverse_square * &TruncSeries::binomial_factor(1, 2, 2),
            TruncSeries::one(2)
        );
    }

    #[test]
    fn grading_violation_rejected() {
        let bad = TruncSeries::from_coeffs(vec![SymFunc::one(), SymFunc::p(2)]);
        assert_eq!(bad, Err(Error::Grading { degree: 1 }));
        assert!(TruncSeries::from_coeffs(vec![SymFunc::p(1)]).is_err());
    }

    #[test]
    fn mismatched_truncation_takes_minimum() {
        let a = TruncSeries::binomial_factor(1, 3, 6);
        let b = TruncSeries::binomial_factor(1, 2, 3);
        assert_eq!((&a * &b).trunc_degree(), 3);
        assert_eq!((&a + &b).trunc_degree(), 3);
        assert_eq!(&a * &b, TruncSeries::binomial_factor(1, 5, 3));
    }

    #[test]
    fn euler_specialization() {
        let s = TruncSeries::binomial_factor(1, -3, 6).specialize_euler();
        let expected: Vec<Rational> = (0..=6).map(|n| gen_binomial(-3, n)).collect();
        assert_eq!(s, expected);
        let s = TruncSeries::binomial_factor(2, 5, 6).specialize_euler();
        assert_eq!(s[0], int(1));
        assert!(s[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn rendering() {
        let s = TruncSeries::binomial_factor(1, 2, 3);
        assert_eq!(alloc::format!("{s}"), "t^0: 1\nt^1: 2*p1\nt^2: p1^2\nt^3: 0");
    }
}
