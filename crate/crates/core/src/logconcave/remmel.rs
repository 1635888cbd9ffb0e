//! Multiplicities `c(lambda, i, j)` of `V[lambda]` in `V_i (x) V_j`, where
//! `V_i = V[d-i, 1^i]`, for the pairs `(i, i)` and `(i-1, i+1)`.

use crate::error::{Error, Result};
use crate::kronecker::kronecker;
use crate::partition::{partitions_of, Partition};
use crate::report::Report;
use crate::schur::SchurExpansion;

fn indicator(b: bool) -> i64 {
    i64::from(b)
}

fn hook_irrep(d: usize, i: usize) -> SchurExpansion {
    SchurExpansion::schur(Partition::hook(d - i, i))
}

/// `[q, p, 2^k, 1^l]` with `q >= p >= 2`.
fn two_row_shape(lambda: &Partition) -> Option<(i64, i64, i64, i64)> {
    let parts = lambda.parts();
    if parts.len() < 2 || parts[1] < 2 {
        return None;
    }
    let rest = &parts[2..];
    let k = rest.iter().take_while(|&&x| x == 2).count();
    if rest[k..].iter().any(|&x| x != 1) {
        return None;
    }
    Some((parts[0] as i64, parts[1] as i64, k as i64, (rest.len() - k) as i64))
}

/// `c(lambda, i, j)` from the closed formulas, for `j = i` or `j = i + 2`.
/// Partitions that are neither hooks nor of the form `[q, p, 2^k, 1^l]`
/// give zero.
pub fn remmel_hook_tensor(lambda: &Partition, i: usize, j: usize, d: usize) -> Result<i64> {
    if lambda.degree() != d || d == 0 {
        return Err(Error::MalformedShape(format!("{lambda} is not a partition of {d}")));
    }
    if i >= d || j >= d {
        return Err(Error::MalformedShape(format!(
            "V_{i} (x) V_{j} needs indices below {d}"
        )));
    }
    let (lo, hi) = (i.min(j), i.max(j));
    let spread = match hi - lo {
        0 => false,
        2 => true,
        _ => {
            return Err(Error::Unsupported(format!(
                "closed formulas cover (i, i) and (i-1, i+1), not ({i}, {j})"
            )))
        }
    };
    let mut c = if spread { lo + 1 } else { lo };
    // Twisting both factors by the sign sends V_c to V_{d-1-c}.
    if 2 * c >= d {
        c = d - 1 - c;
    }
    let (d, c) = (d as i64, c as i64);

    if lambda.is_hook() {
        let r = lambda.parts()[0] as i64;
        let top = if spread { d - 2 } else { d };
        return Ok(indicator(d - 2 * c <= r && r <= top));
    }
    let Some((q, p, k, l)) = two_row_shape(lambda) else {
        return Ok(0);
    };
    let room = if spread { d - c - 1 } else { d - c };
    if p + k > room {
        return Ok(0);
    }
    let u = p.max(d - 2 * c);
    let x = (2 * (d - c - k) - l).div_euclid(2);
    let (v0, v1) = if spread {
        (q.min(d - c - k - 2), q.min(d - c - k - 1))
    } else {
        (q.min(d - c - k - 1), q.min(d - c - k))
    };
    let first = if l % 2 == 0 {
        indicator(u < x && x - 1 <= v0)
    } else {
        indicator(u <= x && x <= v0)
    };
    Ok(first + indicator(u <= x && x <= v1))
}

/// `c(lambda, i, j)` from a Kronecker product.
pub fn hook_tensor_brute(lambda: &Partition, i: usize, j: usize, d: usize) -> i64 {
    kronecker(&hook_irrep(d, i), &hook_irrep(d, j)).mult(lambda)
}

/// Closed formulas against Kronecker products for every `lambda |- d`,
/// `2 <= d <= max_d`, and the inequalities
/// `c(lambda,i,i) >= c(lambda,i-1,i+1)` and `c(lambda,i-1,i) >= c(lambda,i-2,i+1)`.
pub fn remmel_checks(max_d: usize) -> Result<Report> {
    let mut report = Report::new(format!("hook tensor multiplicities (d <= {max_d})"));
    for d in 2..=max_d {
        let mut mismatches = Vec::new();
        let mut monotone = Vec::new();
        for i in 0..d {
            let square = kronecker(&hook_irrep(d, i), &hook_irrep(d, i));
            let outer = (i >= 1 && i + 1 < d).then(|| kronecker(&hook_irrep(d, i - 1), &hook_irrep(d, i + 1)));
            let adjacent = (i >= 1).then(|| kronecker(&hook_irrep(d, i - 1), &hook_irrep(d, i)));
            let wide = (i >= 2 && i + 1 < d).then(|| kronecker(&hook_irrep(d, i - 2), &hook_irrep(d, i + 1)));
            for lambda in partitions_of(d) {
                let formula = remmel_hook_tensor(&lambda, i, i, d)?;
                if formula != square.mult(&lambda) {
                    mismatches.push(format!("c({lambda},{i},{i}) = {} vs {formula}", square.mult(&lambda)));
                }
                if let Some(outer) = &outer {
                    let formula = remmel_hook_tensor(&lambda, i - 1, i + 1, d)?;
                    if formula != outer.mult(&lambda) {
                        mismatches.push(format!(
                            "c({lambda},{},{}) = {} vs {formula}",
                            i - 1,
                            i + 1,
                            outer.mult(&lambda)
                        ));
                    }
                    if 2 * i < d && square.mult(&lambda) < outer.mult(&lambda) {
                        monotone.push(format!("c({lambda},{i},{i}) < c({lambda},{},{})", i - 1, i + 1));
                    }
                }
                if let (Some(adjacent), Some(wide)) = (&adjacent, &wide) {
                    if 2 * i <= d && adjacent.mult(&lambda) < wide.mult(&lambda) {
                        monotone.push(format!("c({lambda},{},{i}) < c({lambda},{},{})", i - 1, i - 2, i + 1));
                    }
                }
            }
        }
        report.push(
            format!("closed formulas, d = {d}"),
            mismatches.is_empty(),
            mismatches.join("; "),
        );
        report.push(
            format!("monotonicity, d = {d}"),
            monotone.is_empty(),
            monotone.join("; "),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    #[test]
    fn small_values() {
        assert_eq!(remmel_hook_tensor(&p(&[2, 1]), 1, 1, 3).unwrap(), 1);
        assert_eq!(remmel_hook_tensor(&p(&[3]), 1, 1, 3).unwrap(), 1);
        // The sign representation is absent from V_1 (x) V_1 once d = 4.
        assert_eq!(remmel_hook_tensor(&p(&[1, 1, 1, 1]), 1, 1, 4).unwrap(), 0);
        assert_eq!(hook_tensor_brute(&p(&[1, 1, 1, 1]), 1, 1, 4), 0);
        assert_eq!(hook_tensor_brute(&p(&[2, 1]), 1, 1, 3), 1);
        let lambda = p(&[3, 3]);
        assert_eq!(
            remmel_hook_tensor(&lambda, 2, 2, 6).unwrap(),
            hook_tensor_brute(&lambda, 2, 2, 6)
        );
    }

    #[test]
    fn formulas_match_kronecker_products() {
        let r = remmel_checks(7).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(remmel_hook_tensor(&p(&[2, 1]), 1, 1, 4).is_err());
        assert!(remmel_hook_tensor(&p(&[2, 2]), 0, 1, 4).is_err());
        assert!(remmel_hook_tensor(&p(&[2, 2]), 0, 4, 4).is_err());
    }
}
