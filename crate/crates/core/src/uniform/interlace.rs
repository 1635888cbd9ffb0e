//! Multiplicities in the sums
//! `Psi(i,r,m) = sum_b sum_{k >= b-r} s[k] s[r+k+m-b+1, b+1, 2^{i-k-1}]` and
//! `Phi(i,r,m) = Psi(i+r, -r, m)`, both by interlacing counts and by direct
//! Pieri expansion.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur::SchurExpansion;
use crate::uniform::normalize;

/// Multiplicity of `s[A,B,C,2^D]` in `Psi(i,r,m)`: the number of `b` for the
/// summands `k = i-D-2` and `k = i-D-1`,
/// `max(0, eps_1 - ups_1 + 1) + max(0, eps_2 - ups_2 + 1)`.
#[allow(clippy::too_many_arguments)]
pub fn interlace_count(a: i64, b: i64, c: i64, d: i64, i: i64, r: i64, m: i64) -> Result<i64> {
    if !(a >= b && b >= c && c >= 2 && d >= 0) {
        return Err(Error::MalformedShape(format!(
            "[{a},{b},{c},2^{d}] must satisfy A >= B >= C >= 2 and D >= 0"
        )));
    }
    if a + b + c + 2 * d != 2 * i + r + m {
        return Ok(0);
    }
    let eps1 = m.min(r + i - d - 1 + m - b).min(b - 1).min(i - d - 2 + r);
    let eps2 = m.min(r + i - d + m - b).min(b - 1).min(i - d - 1 + r);
    let ups1 = (c - 1).max(r + i - d - 1 + m - a);
    let ups2 = (c - 1).max(r + i - d + m - a);
    Ok((eps1 - ups1 + 1).max(0) + (eps2 - ups2 + 1).max(0))
}

/// Multiplicity of `s[A,B,C,2^D]` in `Phi(i,r,m)`.
pub fn interlace_count_phi(a: i64, b: i64, c: i64, d: i64, i: i64, r: i64, m: i64) -> Result<i64> {
    interlace_count(a, b, c, d, i + r, -r, m)
}

/// `Psi(i,r,m)` expanded with the Pieri rule.
pub fn psi(i: i64, r: i64, m: i64) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for b in 1..=m {
        for k in (b - r).max(0)..=i {
            let Some(lambda) = shape(r + k + m - b + 1, b + 1, i - k - 1) else {
                continue;
            };
            out += &SchurExpansion::schur(lambda).pieri_row(k as usize);
        }
    }
    out
}

/// `Phi(i,r,m) = sum_b sum_{j=b}^{i} s[j+r] s[j+m-b+1, b+1, 2^{i-j-1}]`.
pub fn phi(i: i64, r: i64, m: i64) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for b in 1..=m {
        for j in b..=i {
            if j + r < 0 {
                continue;
            }
            let Some(lambda) = shape(j + m - b + 1, b + 1, i - j - 1) else {
                continue;
            };
            out += &SchurExpansion::schur(lambda).pieri_row((j + r) as usize);
        }
    }
    out
}

fn shape(a: i64, b: i64, c: i64) -> Option<Partition> {
    if a < 1 || b < 1 {
        return None;
    }
    normalize(a as usize, b as usize, c)
}

/// `(A, B, C, D)` when `lambda = [A,B,C,2^D]` with `C >= 2`.
pub fn as_interlace_shape(lambda: &Partition) -> Option<(i64, i64, i64, i64)> {
    let parts = lambda.parts();
    if parts.len() < 3 || parts[2] < 2 || parts[3..].iter().any(|&x| x != 2) {
        return None;
    }
    Some((
        parts[0] as i64,
        parts[1] as i64,
        parts[2] as i64,
        (parts.len() - 3) as i64,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{p, partitions_of};

    #[test]
    fn malformed_shapes_rejected() {
        assert!(interlace_count(2, 3, 2, 0, 1, 1, 1).is_err());
        assert!(interlace_count(3, 3, 1, 0, 1, 1, 1).is_err());
        assert_eq!(interlace_count(4, 2, 2, 0, 1, 2, 1).unwrap(), 0);
    }

    #[test]
    fn counts_match_expansions_at_samples() {
        let (i, r, m) = (1, 2, 2);
        assert_eq!(
            interlace_count(4, 2, 2, 0, i, r, m).unwrap(),
            interlace_count_phi(4, 2, 2, 0, i, r, m).unwrap()
        );
        let (i, r, m) = (1, 1, 2);
        assert_eq!(
            interlace_count(3, 3, 2, 0, i, r, m).unwrap(),
            psi(i, r, m).mult(&p(&[3, 3, 2]))
        );
    }

    #[test]
    fn exhaustive_small_range() {
        for total in 1..=9i64 {
            for i in 1..=total {
                for m in 1..=total {
                    let r = total - 2 * i - m;
                    if r < 1 - i {
                        continue;
                    }
                    let ps = psi(i, r, m);
                    assert_eq!(ps, phi(i, r, m), "(i,r,m) = ({i},{r},{m})");
                    for lambda in partitions_of(total as usize) {
                        if let Some((a, b, c, d)) = as_interlace_shape(&lambda) {
                            assert_eq!(
                                interlace_count(a, b, c, d, i, r, m).unwrap(),
                                ps.mult(&lambda),
                                "{lambda} in Psi({i},{r},{m})"
                            );
                        }
                    }
                }
            }
        }
    }
}
