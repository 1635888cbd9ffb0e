//! Verification suites behind `eqkl verify`.

use clap::ValueEnum;
use eqkl::braid::{self, egf, tables};
use eqkl::lattice::{kl_polynomial, lattice_identity_checks, FlatLattice};
use eqkl::logconcave::{self, remmel, LcFamily};
use eqkl::uniform::{self, gf};
use eqkl::{Matroid, Report, Result};

use crate::config::Config;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Identities,
    Gf,
    Logconcavity,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Identities => "identities",
            Suite::Gf => "gf",
            Suite::Logconcavity => "logconcavity",
        }
    }
}

/// Optional overrides of the per-suite default ranges.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub max_n: Option<usize>,
    pub max_md: Option<usize>,
}

pub fn run(suite: Suite, bounds: Bounds, config: &Config) -> Result<Vec<Report>> {
    match suite {
        Suite::Tables => Ok(vec![tables::verify_braid_tables(bounds.max_n.unwrap_or(9))?]),
        Suite::Identities => identities(bounds.max_n.unwrap_or(8), bounds.max_md.unwrap_or(10), config),
        Suite::Gf => Ok(vec![
            gf::gf_checks(config.gf_order)?,
            egf::egf_checks(config.egf_order)?,
        ]),
        Suite::Logconcavity => Ok(vec![
            logconcave::verify_conjecture_lc(LcFamily::Uniform {
                max: bounds.max_md.unwrap_or(6),
            })?,
            logconcave::verify_conjecture_lc(LcFamily::Braid {
                max: bounds.max_n.unwrap_or(7),
            })?,
            logconcave::tensor_examples()?,
            remmel::remmel_checks(8)?,
        ]),
    }
}

/// Identities for the two families with `m + d <= max_md` and `n <= max_n`,
/// and the lattice identities on every test matroid that fits the ground-set
/// limit.
fn identities(max_n: usize, max_md: usize, config: &Config) -> Result<Vec<Report>> {
    let mut reports = Vec::new();

    let mut uniform = Report::new(format!("uniform family (m + d <= {max_md})"));
    for total in 1..=max_md {
        for d in 1..=total {
            let m = total - d;
            uniform.extend(uniform::identity_checks(m, d)?);
            let closed = uniform::kl_uniform_closed(m, d);
            let recursive = uniform::kl_uniform_recursive(m, d)?;
            uniform.push(
                format!("closed form = recursion at ({m},{d})"),
                closed == recursive,
                format!("{} vs {}", closed.to_text(), recursive.to_text()),
            );
            for i in 1..=d / 2 {
                uniform.extend(uniform::symmetry_and_stability(m, d, i)?);
            }
        }
    }
    reports.push(uniform);

    let mut braid_report = Report::new(format!("braid family (n <= {max_n})"));
    for n in 1..=max_n {
        braid_report.extend(braid::identity_checks(n)?);
    }
    reports.push(braid_report);

    let limit = config.max_ground;
    let mut lattice = Report::new(format!("flat lattices (ground set <= {limit})"));
    let mut matroids: Vec<(String, Matroid)> = Vec::new();
    for total in 1..=limit.min(8) {
        for d in 1..=total {
            matroids.push((format!("U({},{d})", total - d), Matroid::uniform(total - d, d)?));
        }
    }
    for n in 2..=max_n.min(7) {
        if n * (n - 1) / 2 <= limit {
            matroids.push((format!("B_{n}"), Matroid::braid(n)?));
        }
    }
    matroids.push((
        "prism graph".into(),
        Matroid::graphic(&[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])?,
    ));
    matroids.push((
        "triangle with a doubled edge".into(),
        Matroid::graphic(&[(0, 1), (1, 2), (2, 0), (0, 1)])?,
    ));
    for (name, m) in &matroids {
        let mut r = lattice_identity_checks(m, limit)?;
        r.name = name.clone();
        lattice.extend(r);
    }
    for total in 1..=limit.min(8) {
        for d in 1..=total {
            let m = total - d;
            let kl = kl_polynomial(&Matroid::uniform(m, d)?)?;
            let dim = uniform::kl_uniform_recursive(m, d)?.dimension();
            lattice.push(
                format!("dim P({m},{d}) = P(U({m},{d}))"),
                dim == kl,
                format!("{dim} vs {kl}"),
            );
        }
    }
    for n in 2..=max_n.min(7) {
        if n * (n - 1) / 2 > limit {
            continue;
        }
        let kl = FlatLattice::with_limit(&Matroid::braid(n)?, limit)?.kl_polynomial()?;
        let dim = braid::kl_braid(n)?.dimension();
        lattice.push(format!("dim Q_{n} = P(B_{n})"), dim == kl, format!("{dim} vs {kl}"));
    }
    reports.push(lattice);
    Ok(reports)
}
