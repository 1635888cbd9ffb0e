mod cache;
mod config;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use eqkl::lattice::FlatLattice;
use eqkl::{braid, uniform, GradedSchur, IntPoly, Matroid, Report, SchurExpansion};
use serde_json::json;

use crate::cache::Cache;
use crate::config::Config;
use crate::verify::{Bounds, Suite};

#[derive(Parser)]
#[command(
    name = "eqkl",
    version,
    about = "Equivariant Kazhdan-Lusztig polynomials of matroids"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Configuration file with `key = value` limits.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Skip the on-disk cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Equivariant KL polynomial of the uniform matroid U(m,d).
    Uniform {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        d: usize,
        /// Use the closed formula.
        #[arg(long, conflicts_with = "recursion")]
        closed_form: bool,
        /// Use the defining recursion (the default).
        #[arg(long)]
        recursion: bool,
        /// Print only the coefficient of t^i.
        #[arg(long)]
        coeff: Option<usize>,
    },
    /// Equivariant KL polynomial of the braid matroid B_n.
    Braid {
        #[arg(short)]
        n: usize,
        /// Print only the coefficient of t^i.
        #[arg(long)]
        coeff: Option<usize>,
        /// Check the bundled coefficient tables instead.
        #[arg(long, conflicts_with = "coeff")]
        verify_tables: bool,
    },
    /// Characteristic and KL polynomials of a matroid given as JSON.
    Matroid {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest braid n.
        #[arg(long)]
        max_n: Option<usize>,
        /// Largest m + d (identities) or m, d (logconcavity) for uniform matroids.
        #[arg(long)]
        max_md: Option<usize>,
        /// Largest symmetric-group degree for Kronecker products.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Inspect or clear the on-disk cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    Clear,
    Stats,
}

/// Exit status for a failed run.
enum Failure {
    /// A verification suite found discrepancies.
    Verification,
    /// Unusable arguments or input files.
    BadInput(anyhow::Error),
    /// A computation failed an internal consistency check.
    Internal(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        use eqkl::Error as E;
        match e.downcast_ref::<E>() {
            Some(
                E::Integrality { .. }
                | E::PlethysmConstantTerm
                | E::NotAntipalindromic { .. }
                | E::RemainderOutOfRange { .. },
            ) => Failure::Internal(e),
            _ => Failure::BadInput(e),
        }
    }
}

impl From<eqkl::Error> for Failure {
    fn from(e: eqkl::Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::BadInput(e)) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(Failure::BadInput(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<std::io::Error>()
            .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
    })
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    config.apply();
    let cache = if cli.no_cache {
        Cache::disabled()
    } else {
        Cache::new(cache::default_dir())
    };
    let format = cli.format;

    match cli.command {
        Command::Uniform {
            m,
            d,
            closed_form,
            recursion: _,
            coeff,
        } => {
            let (method, p) = if closed_form {
                ("closed-form", uniform::kl_uniform_closed(m, d))
            } else {
                let p =
                    cache.get_or_compute("uniform", &format!("m{m}-d{d}"), || uniform::kl_uniform_recursive(m, d))?;
                ("recursion", p)
            };
            let params = json!({ "m": m, "d": d, "method": method });
            emit_polynomial(out, format, params, &p, coeff)?;
        }
        Command::Braid {
            n,
            coeff,
            verify_tables,
        } => {
            if verify_tables {
                let bounds = Bounds {
                    max_n: Some(n),
                    max_md: None,
                };
                return run_suite(out, format, Suite::Tables, bounds, &config);
            }
            if n == 0 || n > braid::max_n() {
                // Checked before the cache so that hits obey the same limit.
                braid::kl_braid(n)?;
            }
            let q = cache.get_or_compute("braid", &format!("n{n}"), || braid::kl_braid(n))?;
            emit_polynomial(out, format, json!({ "n": n }), &q, coeff)?;
        }
        Command::Matroid { input } => {
            let text = std::fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            let matroid = Matroid::from_json(&text)?;
            let lattice = FlatLattice::with_limit(&matroid, config.max_ground)?;
            let chi = lattice.characteristic_polynomial();
            let p = lattice.kl_polynomial()?;
            match format {
                Format::Text => {
                    write_out(
                        out,
                        &format!("chi(t) = {}\nP(t) = {}", chi.poly.render(true), p.render(false)),
                    )?;
                }
                Format::Latex => {
                    write_out(
                        out,
                        &format!(
                            "\\chi(t) = {}\nP(t) = {}",
                            latex_int(&chi.poly, true),
                            latex_int(&p, false)
                        ),
                    )?;
                }
                Format::Json => {
                    let value = json!({
                        "size": matroid.size(),
                        "rank": matroid.rank(),
                        "flats": lattice.len(),
                        "has_loops": chi.has_loops,
                        "characteristic_polynomial": chi.poly,
                        "kl_polynomial": p,
                    });
                    write_json(out, &value)?;
                }
            }
        }
        Command::Verify {
            suite,
            max_n,
            max_md,
            max_degree,
        } => {
            if let Some(k) = max_degree {
                eqkl::logconcave::set_max_degree(k);
            }
            return run_suite(out, format, suite, Bounds { max_n, max_md }, &config);
        }
        Command::Cache { action } => {
            let dir = cache
                .dir()
                .map(|d| d.display().to_string())
                .unwrap_or_else(|| "(disabled)".to_string());
            match action {
                CacheAction::Stats => {
                    let stats = cache.stats();
                    match format {
                        Format::Json => write_json(
                            out,
                            &json!({ "dir": dir, "entries": stats.entries, "bytes": stats.bytes, "kernel": cache::kernel_version() }),
                        )?,
                        _ => write_out(
                            out,
                            &format!(
                                "dir: {dir}\nentries: {}\nbytes: {}\nkernel: {}",
                                stats.entries,
                                stats.bytes,
                                cache::kernel_version()
                            ),
                        )?,
                    }
                }
                CacheAction::Clear => {
                    let removed = cache.clear().with_context(|| format!("clearing {dir}"))?;
                    match format {
                        Format::Json => write_json(out, &json!({ "dir": dir, "removed": removed }))?,
                        _ => write_out(out, &format!("removed {removed} entries from {dir}"))?,
                    }
                }
            }
        }
    }
    Ok(())
}

fn run_suite(
    out: &mut impl Write,
    format: Format,
    suite: Suite,
    bounds: Bounds,
    config: &Config,
) -> Result<(), Failure> {
    let reports = verify::run(suite, bounds, config)?;
    let passed = reports.iter().all(Report::passed);
    match format {
        Format::Json => write_json(
            out,
            &json!({ "suite": suite.name(), "passed": passed, "reports": reports }),
        )?,
        _ => {
            let text: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
            write_out(out, text.join("\n").trim_end())?;
        }
    }
    if passed {
        return Ok(());
    }
    let failures: Vec<_> = reports
        .iter()
        .flat_map(|r| {
            r.failures()
                .map(move |c| json!({ "report": r.name, "label": c.label, "detail": c.detail }))
        })
        .collect();
    let report = json!({ "suite": suite.name(), "failures": failures });
    eprintln!(
        "{}",
        serde_json::to_string_pretty(&report).expect("JSON values serialize")
    );
    Err(Failure::Verification)
}

fn emit_polynomial(
    out: &mut impl Write,
    format: Format,
    mut params: serde_json::Value,
    p: &GradedSchur,
    coeff: Option<usize>,
) -> Result<()> {
    match coeff {
        Some(i) => {
            let c: SchurExpansion = p.coeff(i as i32);
            match format {
                Format::Text => write_out(out, &c.to_text()),
                Format::Latex => write_out(out, &c.to_latex()),
                Format::Json => {
                    params["i"] = json!(i);
                    params["value"] = serde_json::to_value(&c)?;
                    write_json(out, &params)
                }
            }
        }
        None => match format {
            Format::Text => write_out(out, &p.to_text()),
            Format::Latex => write_out(out, &p.to_latex()),
            Format::Json => {
                params["value"] = serde_json::to_value(p)?;
                write_json(out, &params)
            }
        },
    }
}

/// `t^3 - 6t^2` as `t^{3} - 6t^{2}`.
fn latex_int(p: &IntPoly, descending: bool) -> String {
    let mut out = String::new();
    let text = p.render(descending);
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            out.push('{');
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                out.push(*d);
                chars.next();
            }
            out.push('}');
        }
    }
    out
}

fn write_out(out: &mut impl Write, text: &str) -> Result<()> {
    writeln!(out, "{text}")?;
    Ok(())
}

fn write_json(out: &mut impl Write, value: &impl serde::Serialize) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}
