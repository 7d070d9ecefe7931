//! `confchar`: equivariant Euler characteristics of configuration-space
//! quotients, the genus-2 tables, and a verification report.

mod error;
mod groupfile;
mod render;
mod verify;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use confchar_core::equivariant::{quotient_egf, quotient_series, validate_group};
use confchar_core::moduli::{chi_hyperelliptic, chi_m2n_table, harer_zagier, theorem2_series};
use serde::Serialize;

use error::CliError;
use render::{Basis, Format};

#[derive(Debug, Parser)]
#[command(name = "confchar", version, about = "Equivariant Euler characteristics of F(X,n)/G and of M_{2,n}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The S_n-equivariant generating series of M_{2,n}.
    Series {
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Basis::PowerSum)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Euler characteristics of M_{2,n} or of the hyperelliptic locus H_{g,n}.
    Table {
        #[arg(long, value_enum, default_value_t = Space::M2)]
        space: Space,
        #[arg(long, allow_negative_numbers = true, required_if_eq("space", "hyperelliptic"))]
        genus: Option<i64>,
        #[arg(long, default_value_t = 12)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The generating series of F(X,n)/G for a group action read from a JSON file.
    Quotient {
        #[arg(long)]
        group_file: PathBuf,
        /// Euler characteristic of X; overrides the value in the file.
        #[arg(long, allow_negative_numbers = true)]
        chi: Option<i64>,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Basis::PowerSum)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also print the non-equivariant series as a combination of powers of (1+t).
        #[arg(long)]
        egf: bool,
    },
    /// Recompute every genus-2 invariant and report PASS/FAIL per check.
    Verify {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<verify::Fault>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Space {
    M2,
    Hyperelliptic,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print(&out);
            ExitCode::SUCCESS
        }
        Err((out, e)) => {
            print(&out);
            eprintln!("error: {e}");
            for issue in e.issues() {
                eprintln!("  {issue}");
            }
            e.exit_code()
        }
    }
}

fn print(out: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
}

/// On failure the partial output (the verification report) is still printed.
fn run(command: Command) -> Result<String, (String, CliError)> {
    match command {
        Command::Series { max_degree, basis, format } => {
            Ok(series_output(&render::series(&theorem2_series(max_degree), basis), format))
        }
        Command::Table { space, genus, max_n, format } => table(space, genus, max_n, format).map_err(|e| (String::new(), e)),
        Command::Quotient { group_file, chi, max_degree, basis, format, egf } => {
            quotient(&group_file, chi, max_degree, basis, format, egf).map_err(|e| (String::new(), e))
        }
        Command::Verify { format, inject_fault } => {
            let report = verify::run(inject_fault);
            let out = match format {
                Format::Json => render::json(&report),
                Format::Text | Format::Latex => report.text(),
            };
            if report.passed {
                Ok(out)
            } else {
                let failed = report.failures();
                Err((out, CliError::Verification { failed }))
            }
        }
    }
}

fn series_output(s: &render::RenderedSeries, format: Format) -> String {
    match format {
        Format::Text => s.text(),
        Format::Json => render::json(s),
        Format::Latex => s.latex(),
    }
}

#[derive(Serialize)]
struct M2Row {
    n: u32,
    chi: String,
    chi_orb: String,
}

#[derive(Serialize)]
struct HyperellipticRow {
    n: u32,
    chi: String,
}

#[derive(Serialize)]
struct Table<R> {
    space: &'static str,
    genus: i64,
    rows: Vec<R>,
}

fn table(space: Space, genus: Option<i64>, max_n: u32, format: Format) -> Result<String, CliError> {
    match space {
        Space::M2 => {
            if let Some(g) = genus.filter(|&g| g != 2) {
                return Err(CliError::Domain(format!("the m2 table is for genus 2, got --genus {g}")));
            }
            let rows: Vec<M2Row> = chi_m2n_table(max_n as usize)
                .into_iter()
                .zip(0..)
                .map(|(chi, n)| M2Row {
                    n,
                    chi: chi.to_string(),
                    chi_orb: harer_zagier(2, n).expect("genus 2").to_string(),
                })
                .collect();
            Ok(match format {
                Format::Json => render::json(&Table { space: "m2", genus: 2, rows }),
                Format::Text => {
                    let mut out = String::from("n\tchi\tchi_orb\n");
                    for r in rows {
                        out.push_str(&format!("{}\t{}\t{}\n", r.n, r.chi, r.chi_orb));
                    }
                    out
                }
                Format::Latex => {
                    let mut out = String::from("n & \\chi & \\chi^{orb} \\\\\n");
                    for (r, n) in rows.iter().zip(0..) {
                        let orb = render::latex_rational(&harer_zagier(2, n).expect("genus 2"));
                        out.push_str(&format!("{} & {} & {} \\\\\n", r.n, r.chi, orb));
                    }
                    out
                }
            })
        }
        Space::Hyperelliptic => {
            let g = genus.expect("clap requires --genus for the hyperelliptic table");
            let mut rows = Vec::new();
            for n in 0..=max_n {
                rows.push(HyperellipticRow { n, chi: chi_hyperelliptic(g, n)?.to_string() });
            }
            Ok(match format {
                Format::Json => render::json(&Table { space: "hyperelliptic", genus: g, rows }),
                Format::Text => {
                    let mut out = String::from("n\tchi\n");
                    for r in rows {
                        out.push_str(&format!("{}\t{}\n", r.n, r.chi));
                    }
                    out
                }
                Format::Latex => {
                    let mut out = String::from("n & \\chi(H_{g,n}) \\\\\n");
                    for r in rows {
                        out.push_str(&format!("{} & {} \\\\\n", r.n, r.chi));
                    }
                    out
                }
            })
        }
    }
}

#[derive(Serialize)]
struct QuotientJson {
    group_order: u32,
    chi: i64,
    series: render::RenderedSeries,
    #[serde(skip_serializing_if = "Option::is_none")]
    egf: Option<Vec<render::EgfTerm>>,
}

fn quotient(
    path: &std::path::Path,
    chi: Option<i64>,
    max_degree: usize,
    basis: Basis,
    format: Format,
    with_egf: bool,
) -> Result<String, CliError> {
    let data = groupfile::load(path)?;
    let chi = chi.unwrap_or(data.chi);
    validate_group(&data.group, chi).map_err(CliError::from_issues)?;
    let series = render::series(&quotient_series(&data.group, chi, max_degree)?, basis);
    let egf = if with_egf { Some(quotient_egf(&data.group, chi)?) } else { None };
    Ok(match format {
        Format::Json => render::json(&QuotientJson {
            group_order: data.group.group_order,
            chi,
            series,
            egf: egf.as_ref().map(render::egf_terms),
        }),
        Format::Text => {
            let mut out = series.text();
            if let Some(c) = &egf {
                out.push_str(&format!("egf: {c}\n"));
            }
            out
        }
        Format::Latex => {
            let mut out = series.latex();
            if let Some(c) = &egf {
                out.push_str(&format!("egf: {}\n", render::egf_latex(c)));
            }
            out
        }
    })
}
