//! The verification report: every invariant of the genus-2 computation,
//! recomputed from the stratum catalog with exact arithmetic.

use std::collections::BTreeMap;
use std::fmt::Write;

use clap::ValueEnum;
use confchar_core::equivariant::{
    lemma1_chi, lemma1_strata, palindrome_check, quotient_egf, quotient_series, validate_group, xi,
    xi_via_moebius, BinomialCombo,
};
use confchar_core::exactmath::{as_integer, factorial, int, rat};
use confchar_core::moduli::{
    chi_hyperelliptic, harer_zagier, hyperelliptic_constraint, hyperelliptic_template, m2_strata,
    orbifold_numerators, orbifold_sum, strata_egf, strata_series, stratum_chis_from_lemma1,
    theorem2_closed_form, LinExpr, Stratum, Unknown, COVER_CHI, GENUS2_X, GENUS2_Y,
};
use confchar_core::series::TruncSeries;
use confchar_core::symfunc::{to_schur_with, CharacterTable};
use confchar_core::Rational;
use serde::Serialize;

const DEGREE: usize = 12;

/// Deliberate corruptions of the catalog, used to check that the report
/// actually fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Adds one to the multiplicity of the involution in the first stratum.
    Multiplicity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            let _ = writeln!(out, "{tag}  {}: {}", c.name, c.detail);
        }
        let _ = writeln!(
            out,
            "{} checks, {} failed",
            self.checks.iter().filter(|c| c.status != Status::Info).count(),
            self.failures()
        );
        out
    }
}

#[derive(Default)]
struct Builder {
    checks: Vec<Check>,
}

impl Builder {
    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check { name: name.into(), status, detail: detail.into() });
    }

    fn info(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Info, detail: detail.into() });
    }

    fn equal<T: PartialEq + std::fmt::Display>(&mut self, name: impl Into<String>, got: T, expected: T) {
        let ok = got == expected;
        let detail = if ok { format!("{got} = {expected}") } else { format!("{got} != {expected}") };
        self.check(name, ok, detail);
    }
}

fn catalog(fault: Option<Fault>) -> Vec<Stratum> {
    let mut strata = m2_strata();
    if let Some(Fault::Multiplicity) = fault {
        strata[0].group.classes[1].multiplicity += 1;
    }
    strata
}

pub fn run(fault: Option<Fault>) -> Report {
    let strata = catalog(fault);
    let mut b = Builder::default();

    for s in &strata {
        match validate_group(&s.group, COVER_CHI) {
            Ok(()) => {
                let total: u32 = s.group.classes.iter().map(|c| c.multiplicity).sum();
                b.check(format!("catalog {}", s.name), true, format!("sum of multiplicities {total} = |G| = {}", s.group.group_order));
            }
            Err(issues) => {
                let text: Vec<String> = issues.iter().map(ToString::to_string).collect();
                b.check(format!("catalog {}", s.name), false, text.join("; "));
            }
        }
    }

    for s in &strata {
        let agree = s.group.classes.iter().all(|c| {
            matches!((xi(c, COVER_CHI, 16), xi_via_moebius(c, COVER_CHI, 16)), (Ok(x), Ok(y)) if x == y)
        });
        b.check(format!("Moebius route {}", s.name), agree, format!("{} classes, N = 16", s.group.classes.len()));
    }

    let series = match strata_series(&strata, DEGREE) {
        Ok(series) => {
            let closed = theorem2_closed_form(DEGREE);
            b.check("closed form", series == closed, format!("strata average = aggregated form through t^{DEGREE}"));
            Some(series)
        }
        Err(e) => {
            b.check("closed form", false, format!("cannot form strata average: {e}"));
            None
        }
    };
    series_checks(&mut b, series.as_ref());

    let orbifold = orbifold_sum(&strata);
    let hz = harer_zagier(2, 0).expect("genus 2");
    b.equal("orbifold Euler characteristic", orbifold, hz);
    match orbifold_numerators(&strata, 240) {
        Some(nums) => {
            let text: Vec<String> = nums.iter().map(i64::to_string).collect();
            b.info("orbifold summands", format!("({})/240", text.join(", ")));
        }
        None => b.check("orbifold summands", false, "summands do not fit over 240"),
    }
    let hz_row = [rat(-1, 240), rat(1, 120), rat(-1, 40), rat(1, 10), rat(-1, 2), int(3), int(-21)];
    for (n, expected) in hz_row.into_iter().enumerate() {
        b.equal(format!("orbifold chi(M_2,{n})"), harer_zagier(2, n as u32).expect("genus 2"), expected);
    }

    egf_checks(&mut b, &strata);
    chi_table_checks(&mut b, series.as_ref());

    let lemma1_ok = (1..=60u64).all(|n| {
        let chi = lemma1_chi(n).expect("positive");
        let strata = lemma1_strata(n).expect("positive");
        chi == (n % 2) as i64 && strata.values().sum::<i64>() == chi
    });
    b.check("configurations of C* mod C*", lemma1_ok, "chi = 1 for odd n, 0 for even n, n <= 60");
    let from_lemma1 = stratum_chis_from_lemma1();
    let stored: Vec<i64> = strata.iter().map(|s| s.stratum_chi).collect();
    b.check(
        "stratum Euler characteristics",
        from_lemma1.to_vec() == stored,
        format!("{from_lemma1:?}"),
    );

    hyperelliptic_checks(&mut b, series.as_ref());

    let passed = b.checks.iter().all(|c| c.status != Status::Fail);
    Report { passed, checks: b.checks }
}

fn series_checks(b: &mut Builder, series: Option<&TruncSeries>) {
    let Some(series) = series else {
        b.check("series", false, "no series to check");
        return;
    };
    let expected = ["1", "2*p1", "p1^2", "0", "1/2*p4 + 2/3*p3*p1 - 1/6*p1^4"];
    for (n, e) in expected.iter().enumerate() {
        b.equal(format!("series t^{n}"), series.coeff(n).to_string(), e.to_string());
    }
    let mut table = CharacterTable::new();
    let schur: Vec<_> = series.coeffs().iter().map(|c| to_schur_with(c, &mut table)).collect();
    b.equal("Schur t^1", schur[1].to_string(), "2*s[1]".to_string());
    b.equal("Schur t^4", schur[4].to_string(), "s[4] - s[3,1] - s[2,2]".to_string());
    b.info("Schur t^2", format!("computed {} from p1^2; the printed expansion lists s_1 + s_2", schur[2]));
    let bad: Vec<usize> = (0..schur.len()).filter(|&n| !schur[n].is_integral()).collect();
    b.check(
        "Schur integrality",
        bad.is_empty(),
        if bad.is_empty() { format!("t^0..t^{DEGREE}") } else { format!("non-integral at degrees {bad:?}") },
    );
}

fn egf_checks(b: &mut Builder, strata: &[Stratum]) {
    let expected = BinomialCombo::from_terms([
        (-2, rat(-1, 240)),
        (0, rat(-1, 12)),
        (1, rat(2, 5)),
        (2, rat(3, 8)),
        (3, rat(2, 5)),
        (4, rat(-1, 12)),
        (6, rat(-1, 240)),
    ]);
    let combo = match strata_egf(strata) {
        Ok(c) => c,
        Err(e) => {
            b.check("generating function", false, e.to_string());
            return;
        }
    };
    b.equal("generating function", combo.to_string(), expected.to_string());
    b.check("palindrome about (1+t)^2", palindrome_check(&combo), "c(L) = c(4 - L)");
    let coeff = |l| combo.coeff(l).cloned().unwrap_or_else(|| int(0));
    let lhs = int(2) * coeff(0) + int(2) * coeff(1) + coeff(2);
    b.equal("linear relation 2a + 2b + c", lhs, int(1) + rat(1, 120));
    let constraint = hyperelliptic_constraint(2).expect("genus 2");
    b.check("hyperelliptic relation at g = 2", constraint.holds_for(&coeff(0), &coeff(1), &coeff(2)), format!("{} = 0", constraint.equation));

    for s in strata {
        let ok = match (quotient_series(&s.group, COVER_CHI, DEGREE), quotient_egf(&s.group, COVER_CHI)) {
            (Ok(series), Ok(egf)) => series.specialize_euler() == egf.expand(DEGREE),
            _ => false,
        };
        b.check(format!("specialization {}", s.name), ok, format!("p1 = 1, pk = 0 gives the (1+t) form through t^{DEGREE}"));
    }
}

fn chi_table_checks(b: &mut Builder, series: Option<&TruncSeries>) {
    let Some(series) = series else {
        b.check("chi(M_2,n) table", false, "no series to check");
        return;
    };
    let small = [1i64, 2, 2, 0, -4, 0, -24];
    for (n, c) in series.specialize_euler().iter().enumerate() {
        let value = c * Rational::from_integer(factorial(n as u32));
        let Some(chi) = as_integer(&value) else {
            b.check(format!("chi(M_2,{n})"), false, format!("{value} is not an integer"));
            continue;
        };
        if n < small.len() {
            b.equal(format!("chi(M_2,{n})"), chi.to_string(), small[n].to_string());
        } else {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let stable = factorial(n as u32 + 1) * sign / 240;
            let hz = harer_zagier(2, n as u32).expect("genus 2");
            let ok = chi == stable && Rational::from_integer(chi.clone()) == hz;
            b.check(
                format!("chi(M_2,{n})"),
                ok,
                format!("{chi} {} (-1)^(n+1)(n+1)!/240 = {stable}, Harer-Zagier {hz}", if ok { "=" } else { "vs" }),
            );
        }
    }
}

fn hyperelliptic_checks(b: &mut Builder, series: Option<&TruncSeries>) {
    if let Some(series) = series {
        let genus2 = BTreeMap::from([(Unknown::X, int(GENUS2_X)), (Unknown::Y, int(GENUS2_Y))]);
        let euler = series.specialize_euler();
        let ok = (0..=DEGREE).all(|n| {
            let m2 = &euler[n] * Rational::from_integer(factorial(n as u32));
            chi_hyperelliptic(2, n as u32).map(|h| h.substitute(&genus2).value() == Some(m2.clone())).unwrap_or(false)
        });
        b.check("hyperelliptic g = 2", ok, format!("x = {GENUS2_X}, y = {GENUS2_Y} reproduces chi(M_2,n), n <= {DEGREE}"));
    }
    for g in 2..=8i64 {
        let three = chi_hyperelliptic(g, 3).expect("g >= 2");
        let x = chi_hyperelliptic(g, 2).expect("g >= 2");
        let ok3 = three == &x.scale(&int(3)) - &LinExpr::constant(int(6));
        let five = chi_hyperelliptic(g, 5).expect("g >= 2");
        let template = hyperelliptic_template(g).expect("g >= 2");
        let tail_ok = (5..=(2 * g as u32 + 6)).all(|n| {
            template.egf_coefficient(n).scale(&Rational::from_integer(factorial(n)))
                == chi_hyperelliptic(g, n).expect("g >= 2")
        });
        b.check(
            format!("hyperelliptic g = {g}"),
            ok3 && five.is_zero() && tail_ok && palindrome_check(&template),
            format!("chi(H_g,3) = {three}, chi(H_g,5) = {five}, template matches n = 5..{}", 2 * g + 6),
        );
    }
}
