//! Text, JSON and LaTeX rendering. Every map is ordered, so output is
//! byte-identical across runs.

use std::fmt::Write;

use clap::ValueEnum;
use confchar_core::equivariant::BinomialCombo;
use confchar_core::series::TruncSeries;
use confchar_core::symfunc::{to_schur_with, CharacterTable, Partition};
use confchar_core::Rational;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    PowerSum,
    Schur,
}

impl Basis {
    fn name(self) -> &'static str {
        match self {
            Basis::PowerSum => "power-sum",
            Basis::Schur => "schur",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Term {
    pub partition: Vec<u32>,
    pub coefficient: String,
}

#[derive(Debug, Serialize)]
pub struct Coefficient {
    pub degree: usize,
    pub expression: String,
    #[serde(skip)]
    pub latex: String,
    pub terms: Vec<Term>,
}

#[derive(Debug, Serialize)]
pub struct RenderedSeries {
    pub basis: &'static str,
    pub max_degree: usize,
    pub coefficients: Vec<Coefficient>,
}

pub fn series(s: &TruncSeries, basis: Basis) -> RenderedSeries {
    let mut table = CharacterTable::new();
    let coefficients = s
        .terms()
        .map(|(degree, c)| {
            let (expression, pairs): (String, Vec<(Partition, Rational)>) = match basis {
                Basis::PowerSum => (c.to_string(), c.terms().map(|(l, r)| (l.clone(), r.clone())).collect()),
                Basis::Schur => {
                    let schur = to_schur_with(c, &mut table);
                    let pairs = schur.terms().map(|(l, r)| (l.clone(), r.clone())).collect();
                    (schur.to_string(), pairs)
                }
            };
            let latex = latex_combination(pairs.iter().map(|(l, r)| (r, latex_monomial(l, basis))));
            let terms = pairs
                .into_iter()
                .map(|(l, r)| Term { partition: l.parts().to_vec(), coefficient: r.to_string() })
                .collect();
            Coefficient { degree, expression, latex, terms }
        })
        .collect();
    RenderedSeries { basis: basis.name(), max_degree: s.trunc_degree(), coefficients }
}

impl RenderedSeries {
    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.coefficients {
            let _ = writeln!(out, "t^{}: {}", c.degree, c.expression);
        }
        out
    }

    pub fn latex(&self) -> String {
        let mut out = String::new();
        for c in &self.coefficients {
            let _ = writeln!(out, "t^{{{}}}: {}", c.degree, c.latex);
        }
        out
    }
}

pub fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// `p_{3} p_{1}^{4}` or `s_{3,1}`; empty for the empty partition.
fn latex_monomial(lambda: &Partition, basis: Basis) -> String {
    if lambda.is_empty() {
        return String::new();
    }
    match basis {
        Basis::PowerSum => lambda
            .multiplicities()
            .into_iter()
            .map(|(part, mult)| if mult > 1 { format!("p_{{{part}}}^{{{mult}}}") } else { format!("p_{{{part}}}") })
            .collect::<Vec<_>>()
            .join(" "),
        Basis::Schur => {
            let parts: Vec<String> = lambda.parts().iter().map(u32::to_string).collect();
            format!("s_{{{}}}", parts.join(","))
        }
    }
}

fn latex_combination<'a>(terms: impl IntoIterator<Item = (&'a Rational, String)>) -> String {
    let mut out = String::new();
    for (i, (c, monomial)) in terms.into_iter().enumerate() {
        let negative = *c.numer() < 0.into();
        let magnitude = if negative { -c } else { c.clone() };
        out.push_str(match (i == 0, negative) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        let unit = magnitude == Rational::from_integer(1.into());
        match (monomial.is_empty(), unit) {
            (true, _) => out.push_str(&latex_rational(&magnitude)),
            (false, true) => out.push_str(&monomial),
            (false, false) => {
                out.push_str(&latex_rational(&magnitude));
                out.push(' ');
                out.push_str(&monomial);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Serialize)]
pub struct EgfTerm {
    pub exponent: i64,
    pub coefficient: String,
}

pub fn egf_terms(combo: &BinomialCombo) -> Vec<EgfTerm> {
    combo
        .terms()
        .map(|(exponent, c)| EgfTerm { exponent, coefficient: c.to_string() })
        .collect()
}

pub fn egf_latex(combo: &BinomialCombo) -> String {
    let pairs: Vec<(Rational, String)> = combo
        .terms()
        .map(|(l, c)| {
            let m = match l {
                0 => String::new(),
                1 => "(1+t)".to_string(),
                _ => format!("(1+t)^{{{l}}}"),
            };
            (c.clone(), m)
        })
        .collect();
    latex_combination(pairs.iter().map(|(c, m)| (c, m.clone())))
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
