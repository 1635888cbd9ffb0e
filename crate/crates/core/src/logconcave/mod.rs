//! Equivariant log concavity of graded virtual representations, checked
//! with Kronecker products.

pub mod remmel;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use crate::braid::{char_poly_braid, kl_braid};
use crate::error::{Error, Result};
use crate::graded::GradedSchur;
use crate::kronecker::{graded_kronecker, ClassFunction};
use crate::partition::Partition;
use crate::poly::IntPoly;
use crate::report::Report;
use crate::schur::SchurExpansion;
use crate::uniform::{char_poly_uniform, kl_uniform_recursive};

pub const DEFAULT_MAX_DEGREE: usize = 12;

static MAX_DEGREE: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_DEGREE);

/// Largest symmetric-group degree accepted by the Kronecker-based checks.
pub fn max_degree() -> usize {
    MAX_DEGREE.load(Ordering::Relaxed)
}

pub fn set_max_degree(n: usize) {
    MAX_DEGREE.store(n, Ordering::Relaxed);
}

/// A failure of `C_i (x) C_j - C_{i-k} (x) C_{j+k}` to be effective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub i: i32,
    pub j: i32,
    pub k: i32,
    pub partition: Partition,
    pub multiplicity: i64,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "C_{} (x) C_{} - C_{} (x) C_{} has s{} with multiplicity {}",
            self.i,
            self.j,
            self.i - self.k,
            self.j + self.k,
            self.partition,
            self.multiplicity
        )
    }
}

/// Characters of the coefficients, split by symmetric-group degree.
struct Characters {
    lo: i32,
    hi: i32,
    by_degree: BTreeMap<usize, BTreeMap<i32, ClassFunction>>,
}

impl Characters {
    fn new(f: &GradedSchur) -> Result<Self> {
        let mut by_degree: BTreeMap<usize, BTreeMap<i32, ClassFunction>> = BTreeMap::new();
        for (e, c) in f.terms() {
            let mut degrees: Vec<usize> = c.terms().map(|(lambda, _)| lambda.degree()).collect();
            degrees.dedup();
            for n in degrees {
                if n > max_degree() {
                    return Err(Error::LimitExceeded {
                        what: "Kronecker degree",
                        value: n,
                        limit: max_degree(),
                    });
                }
                by_degree.entry(n).or_default().insert(e, ClassFunction::of(c, n));
            }
        }
        Ok(Self {
            lo: f.min_exp().unwrap_or(0),
            hi: f.max_exp().unwrap_or(-1),
            by_degree,
        })
    }

    /// First negative multiplicity of `C_i (x) C_j - C_a (x) C_b`.
    fn check(&self, i: i32, j: i32, k: i32) -> Result<Option<Witness>> {
        let (a, b) = (i - k, j + k);
        for (&n, chars) in &self.by_degree {
            let mut diff = ClassFunction::zero(n);
            if let (Some(x), Some(y)) = (chars.get(&i), chars.get(&j)) {
                diff.add_assign(&x.pointwise(y));
            }
            if let (Some(x), Some(y)) = (chars.get(&a), chars.get(&b)) {
                diff.sub_assign(&x.pointwise(y));
            }
            if diff.values.iter().all(|&v| v == 0) {
                continue;
            }
            if let Some((lambda, mult)) = diff.decompose()?.first_negative() {
                return Ok(Some(Witness {
                    i,
                    j,
                    k,
                    partition: lambda.clone(),
                    multiplicity: mult,
                }));
            }
        }
        Ok(None)
    }
}

/// `None` if `C_i (x) C_i - C_{i-1} (x) C_{i+1}` is effective for every
/// `i > 0` (exponents counted from the lowest one present); otherwise the
/// first failure.
pub fn log_concavity_witness(f: &GradedSchur) -> Result<Option<Witness>> {
    let chars = Characters::new(f)?;
    for i in chars.lo + 1..=chars.hi {
        if let Some(w) = chars.check(i, i, 1)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

pub fn is_log_concave(f: &GradedSchur) -> Result<bool> {
    Ok(log_concavity_witness(f)?.is_none())
}

/// `None` if `C_i (x) C_j - C_{i-k} (x) C_{j+k}` is effective for every
/// `0 <= k <= i <= j`; otherwise the first failure.
pub fn strong_log_concavity_witness(f: &GradedSchur) -> Result<Option<Witness>> {
    let chars = Characters::new(f)?;
    for i in chars.lo..=chars.hi {
        for j in i..=chars.hi {
            for k in 1..=i - chars.lo {
                if let Some(w) = chars.check(i, j, k)? {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_strongly_log_concave(f: &GradedSchur) -> Result<bool> {
    Ok(strong_log_concavity_witness(f)?.is_none())
}

/// `a_i^2 >= a_{i-1} a_{i+1}` for the coefficients of `p`.
pub fn is_log_concave_sequence(p: &IntPoly) -> bool {
    let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
        return true;
    };
    (lo + 1..hi).all(|i| {
        let (a, b, c) = (p.coeff(i - 1) as i128, p.coeff(i) as i128, p.coeff(i + 1) as i128);
        b * b >= a * c
    })
}

fn verdict(report: &mut Report, label: String, f: &GradedSchur) -> Result<()> {
    let witness = log_concavity_witness(f)?;
    report.record(label.clone(), witness.as_ref().map_or(Ok(()), |w| Err(w.to_string())));
    if witness.is_none() {
        let dim = f.dimension().map_coeffs(|c| c.abs());
        report.push(
            format!("{label}, dimensions"),
            is_log_concave_sequence(&dim),
            dim.render(false),
        );
    }
    Ok(())
}

/// Families covered by [`verify_conjecture_lc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcFamily {
    /// `H_{m,d}` and `P_{m,d}` for `0 <= m <= max`, `1 <= d <= max`.
    Uniform { max: usize },
    /// `K_n` and `Q_n` for `1 <= n <= max`.
    Braid { max: usize },
}

/// Log concavity of the characteristic and Kazhdan-Lusztig polynomials over
/// a family, one check per instance. Absolute dimensions must also form a
/// log-concave sequence.
pub fn verify_conjecture_lc(family: LcFamily) -> Result<Report> {
    match family {
        LcFamily::Uniform { max } => {
            let mut report = Report::new(format!("uniform log concavity (m, d <= {max})"));
            for m in 0..=max {
                for d in 1..=max {
                    verdict(&mut report, format!("H({m},{d})"), &char_poly_uniform(m, d))?;
                    verdict(&mut report, format!("P({m},{d})"), &kl_uniform_recursive(m, d)?)?;
                }
            }
            Ok(report)
        }
        LcFamily::Braid { max } => {
            let mut report = Report::new(format!("braid log concavity (n <= {max})"));
            for n in 1..=max {
                verdict(&mut report, format!("K_{n}"), &char_poly_braid(n)?)?;
                verdict(&mut report, format!("Q_{n}"), &kl_braid(n)?)?;
            }
            Ok(report)
        }
    }
}

/// Graded `S_2`-representation `(1+2t+2t^2+t^3) s[2] + (3+2t+2t^2+3t^3) s[1,1]`.
pub fn two_row_example() -> GradedSchur {
    let mut f = GradedSchur::zero();
    for (e, (a, b)) in [(1, 3), (2, 2), (2, 2), (1, 3)].into_iter().enumerate() {
        let c = SchurExpansion::from_terms([(Partition::row(2), a), (Partition::column(2), b)]);
        f.add_term(e as i32, &c);
    }
    f
}

/// The example above is log concave but not strongly log concave, and its
/// tensor product with `(1+t) s[2]` is not log concave.
pub fn tensor_examples() -> Result<Report> {
    let mut report = Report::new("log concavity under tensor products");
    let f = two_row_example();
    report.push("f is log concave", is_log_concave(&f)?, "f is not log concave");
    let strong = strong_log_concavity_witness(&f)?;
    report.push("f is not strongly log concave", strong.is_some(), "no witness found");
    let g = GradedSchur::from_terms([(0, SchurExpansion::h(2)), (1, SchurExpansion::h(2))]);
    report.push("g is strongly log concave", is_strongly_log_concave(&g)?, "g fails");
    let fg = graded_kronecker(&f, &g);
    let witness = log_concavity_witness(&fg)?;
    report.push(
        "f (x) g is not log concave",
        witness.is_some(),
        "f (x) g is log concave",
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    #[test]
    fn constants_are_log_concave() {
        let f = GradedSchur::constant(SchurExpansion::h(4));
        assert!(is_log_concave(&f).unwrap());
        assert!(is_strongly_log_concave(&f).unwrap());
    }

    #[test]
    fn two_row_example_witnesses() {
        let f = two_row_example();
        assert!(is_log_concave(&f).unwrap());
        let w = strong_log_concavity_witness(&f).unwrap().unwrap();
        assert!(w.multiplicity < 0);
        let r = tensor_examples().unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn witness_names_the_partition() {
        // C_1^2 - C_0 C_2 = s[2] - 4 s[2] in degree 2.
        let f = GradedSchur::from_terms([
            (0, SchurExpansion::h(2).scale(2)),
            (1, SchurExpansion::h(2)),
            (2, SchurExpansion::h(2).scale(2)),
        ]);
        let w = log_concavity_witness(&f).unwrap().unwrap();
        assert_eq!((w.i, w.j, w.k), (1, 1, 1));
        assert_eq!(w.partition, p(&[2]));
        assert_eq!(w.multiplicity, -3);
    }

    #[test]
    fn degree_cap() {
        let f = GradedSchur::constant(SchurExpansion::h(max_degree() + 1));
        assert!(matches!(is_log_concave(&f), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn integer_sequences() {
        assert!(is_log_concave_sequence(&IntPoly::from_coeffs(vec![1, 3, 3, 1])));
        assert!(!is_log_concave_sequence(&IntPoly::from_coeffs(vec![1, 1, 3])));
    }

    #[test]
    fn small_families() {
        let r = verify_conjecture_lc(LcFamily::Uniform { max: 4 }).unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_conjecture_lc(LcFamily::Braid { max: 5 }).unwrap();
        assert!(r.passed(), "{r}");
    }
}
