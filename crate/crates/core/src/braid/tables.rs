//! Reference values for coefficients of `Q_n`, checked against the
//! plethysm computation.

use serde::Deserialize;

use crate::braid::{braid_coefficient, d_n1_closed, kl_braid_by_types};
use crate::error::Result;
use crate::partition::Partition;
use crate::report::Report;
use crate::schur::SchurExpansion;

const FIXTURE: &str = include_str!("../../fixtures/braid_tables.json");

#[derive(Deserialize)]
struct Term {
    partition: Vec<usize>,
    mult: i64,
}

#[derive(Deserialize)]
struct Entry {
    n: usize,
    i: usize,
    value: Vec<Term>,
}

/// `(n, i, D_{n,i})` for every tabulated coefficient.
pub fn reference_tables() -> Vec<(usize, usize, SchurExpansion)> {
    let entries: Vec<Entry> = serde_json::from_str(FIXTURE).expect("bundled braid tables parse");
    entries
        .into_iter()
        .map(|e| {
            let value = SchurExpansion::from_terms(e.value.into_iter().map(|t| {
                (
                    Partition::new(t.partition).expect("bundled partitions are valid"),
                    t.mult,
                )
            }));
            (e.n, e.i, value)
        })
        .collect()
}

/// Compare every tabulated `D_{n,i}` with `n <= max_n`, and `D_{n,1}` with
/// its closed form for `n <= max_n`.
pub fn verify_braid_tables(max_n: usize) -> Result<Report> {
    let mut report = Report::new(format!("braid coefficient tables (n <= {max_n})"));
    for n in 1..=max_n {
        let got = braid_coefficient(n, 1)?;
        let want = d_n1_closed(n);
        report.push(
            format!("D({n},1)"),
            got == want,
            format!("computed {got}, expected {want}"),
        );
    }
    for (n, i, want) in reference_tables() {
        if n > max_n {
            continue;
        }
        let got = braid_coefficient(n, i)?;
        report.push(
            format!("D({n},{i})"),
            got == want,
            format!("computed {got}, expected {want}"),
        );
        let dim = i64::try_from(want.dimension()).expect("dimension fits in i64");
        let lattice = kl_braid_by_types(n)?.coeff(i as i32);
        report.push(
            format!("dim D({n},{i}) = [t^{i}] P(B_{n})"),
            dim == lattice,
            format!("{dim} vs {lattice}"),
        );
    }
    Ok(report)
}
