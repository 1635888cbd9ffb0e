//! Uniform matroids `U_{m,d}` (rank `d` on `m + d` elements) with their
//! `S_{m+d}` symmetry.

pub mod gf;
pub mod interlace;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::graded::GradedSchur;
use crate::kl::{palindromic_solve, CoefficientData};
use crate::partition::Partition;
use crate::report::Report;
use crate::schur::SchurExpansion;

/// Character of the degree-`i` Orlik-Solomon piece of `U_{m,d}`.
pub fn os_uniform(m: usize, d: usize, i: usize) -> Result<SchurExpansion> {
    if i > d {
        return Err(Error::Unsupported(format!(
            "Orlik-Solomon degree {i} exceeds the rank {d} of U({m},{d})"
        )));
    }
    if d == 0 {
        return Ok(SchurExpansion::h(m));
    }
    if i == d {
        return Ok(SchurExpansion::schur(Partition::hook(m + 1, d - 1)));
    }
    Ok(SchurExpansion::h(m + d - i).pieri_col(i))
}

/// `H_{m,d}(t) = sum_p (-1)^p t^{d-p} OS_p`.
pub fn char_poly_uniform(m: usize, d: usize) -> GradedSchur {
    let mut h = GradedSchur::zero();
    for p in 0..=d {
        let os = os_uniform(m, d, p).expect("p <= d");
        h.add_term((d - p) as i32, &if p % 2 == 0 { os } else { -os });
    }
    h
}

fn memo() -> &'static Mutex<HashMap<(usize, usize), GradedSchur>> {
    static MEMO: OnceLock<Mutex<HashMap<(usize, usize), GradedSchur>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `P_{m,d}` from `t^d P_{m,d}(1/t) - P_{m,d}(t) = H_{m,d} + sum_{0<k<d} H_{0,d-k} P_{m,k}`.
pub fn kl_uniform_recursive(m: usize, d: usize) -> Result<GradedSchur> {
    if let Some(hit) = memo().lock().unwrap().get(&(m, d)) {
        return Ok(hit.clone());
    }
    let p = if d == 0 {
        GradedSchur::constant(SchurExpansion::h(m))
    } else {
        let mut r = char_poly_uniform(m, d);
        for k in 1..d {
            r += &char_poly_uniform(0, d - k).mul_ref(&kl_uniform_recursive(m, k)?);
        }
        palindromic_solve(d as i32, &r)?
    };
    memo().lock().unwrap().insert((m, d), p.clone());
    Ok(p)
}

/// `s[a, b, 2^c]` with the conventions `s[a, 2, 2^{-1}] = s[a]` and
/// `s[a, b, 2^{-1}] = 0` for `b > 2`; anything shorter is zero.
pub fn normalize(a: usize, b: usize, c: i64) -> Option<Partition> {
    match c {
        c if c >= 0 => {
            let mut parts = vec![a, b];
            parts.extend(std::iter::repeat_n(2, c as usize));
            Partition::new(parts).ok()
        }
        -1 if b == 2 => Some(Partition::row(a)),
        _ => None,
    }
}

/// Coefficient of `t^i` in the closed form for `P_{m,d}`.
pub fn closed_coefficient(m: usize, d: usize, i: usize) -> SchurExpansion {
    if i == 0 {
        return SchurExpansion::h(m + d);
    }
    let mut out = SchurExpansion::new();
    if 2 * i >= d {
        return out;
    }
    for b in 1..=m.min(d - 2 * i) {
        let lambda = normalize(d + m - 2 * i - b + 1, b + 1, i as i64 - 1).expect("valid shape for i >= 1");
        out.add_term(lambda, 1);
    }
    out
}

pub fn kl_uniform_closed(m: usize, d: usize) -> GradedSchur {
    if d == 0 {
        return GradedSchur::constant(SchurExpansion::h(m));
    }
    GradedSchur::from_terms((0..d.div_ceil(2)).map(|i| (i as i32, closed_coefficient(m, d, i))))
}

/// Orbit data for `U_{m,d}`: one orbit of `k`-subsets for each `k < d`, and
/// the top flat.
pub struct UniformCoefficients {
    m: usize,
    d: usize,
}

impl UniformCoefficients {
    pub fn new(m: usize, d: usize) -> Self {
        Self { m, d }
    }
}

impl CoefficientData for UniformCoefficients {
    type Coeff = SchurExpansion;

    fn rank(&self) -> usize {
        self.d
    }

    fn orbit_ranks(&self) -> Vec<usize> {
        (0..=self.d).collect()
    }

    /// `Ind_{S_k x S_{m+d-k}} (OS_{U_{0,k}, j} (x) C_{m, d-k, l})`; the top
    /// flat has localization `U_{m,d}` and trivial restriction.
    fn induced(&self, k: usize, j: usize, l: usize) -> Result<SchurExpansion> {
        if k == self.d {
            return if l == 0 {
                os_uniform(self.m, self.d, j)
            } else {
                Ok(SchurExpansion::new())
            };
        }
        let os = os_uniform(0, k, j)?;
        let c = kl_uniform_recursive(self.m, self.d - k)?.coeff(l as i32);
        Ok(os.multiply(&c))
    }
}

/// `C_{m,d,i} = C_{d-2i, m+2i, i}`, and for `d >= m + 2i` the partitions of
/// `C_{m,d,i}` are those of `C_{m,m+2i,i}` with the first row grown by
/// `d - m - 2i`. Both sides come from the recursion.
pub fn symmetry_and_stability(m: usize, d: usize, i: usize) -> Result<Report> {
    let mut report = Report::new(format!("symmetry and stability at (m,d,i) = ({m},{d},{i})"));
    if i == 0 || 2 * i > d {
        return Err(Error::Unsupported(format!("need 1 <= i <= d/2, got i = {i}, d = {d}")));
    }
    let c = kl_uniform_recursive(m, d)?.coeff(i as i32);
    let (m2, d2) = (d - 2 * i, m + 2 * i);
    let partner = kl_uniform_recursive(m2, d2)?.coeff(i as i32);
    report.push(
        format!("C({m},{d},{i}) = C({m2},{d2},{i})"),
        c == partner,
        format!("{c} vs {partner}"),
    );
    if d >= m + 2 * i {
        let base = kl_uniform_recursive(m, m + 2 * i)?.coeff(i as i32);
        let grow = d - m - 2 * i;
        let grown = SchurExpansion::from_terms(base.terms().map(|(lambda, mult)| {
            let mut parts = lambda.parts().to_vec();
            if parts.is_empty() {
                parts.push(grow);
            } else {
                parts[0] += grow;
            }
            (Partition::from_unsorted(parts), mult)
        }));
        report.push(
            format!("C({m},{d},{i}) grows from C({m},{},{i})", m + 2 * i),
            c == grown,
            format!("{c} vs {grown}"),
        );
    }
    Ok(report)
}

/// Equivariant identities for `U_{m,d}`, `d >= 1`.
pub fn identity_checks(m: usize, d: usize) -> Result<Report> {
    if d == 0 {
        return Err(Error::Unsupported("identity checks need rank d >= 1".into()));
    }
    let mut report = Report::new(format!("uniform identities (m = {m}, d = {d})"));
    let n = m + d;
    let h = char_poly_uniform(m, d);
    let at_one = h.eval_at_one();
    report.push("H(1) = 0", at_one.is_empty(), at_one.to_text());

    let mut easy = SchurExpansion::new();
    for k in 0..d {
        let term = SchurExpansion::e(k).multiply(&SchurExpansion::h(n - k));
        easy += &if k % 2 == 0 { term } else { -term };
    }
    let hook = SchurExpansion::schur(Partition::hook(m + 1, d - 1));
    easy += &if d.is_multiple_of(2) { hook } else { -hook };
    report.push(
        "alternating Orlik-Solomon sum vanishes",
        easy.is_empty(),
        easy.to_text(),
    );

    let mut dual = SchurExpansion::h(n);
    for k in 0..d {
        let term = SchurExpansion::h(k).multiply(&SchurExpansion::schur(Partition::hook(m + 1, d - k - 1)));
        dual += &if (d - k).is_multiple_of(2) { term } else { -term };
    }
    report.push(
        "alternating top Orlik-Solomon sum over flats vanishes",
        dual.is_empty(),
        dual.to_text(),
    );

    let mut counting = GradedSchur::constant(SchurExpansion::h(n));
    for k in 0..d {
        counting += &char_poly_uniform(m, d - k).map_schur(|c| SchurExpansion::h(k).multiply(c));
    }
    let expected = GradedSchur::monomial(d as i32, SchurExpansion::h(n));
    report.push(
        "sum_F Ind H(M^F) = t^d s[m+d]",
        counting == expected,
        counting.to_text(),
    );

    let p = kl_uniform_recursive(m, d)?;
    report.push(
        "P(0) = s[m+d]",
        p.coeff(0) == SchurExpansion::h(n),
        p.coeff(0).to_text(),
    );
    let negative = p.first_negative();
    report.record(
        "P effective",
        negative.map_or(Ok(()), |(e, lambda, mult)| {
            Err(format!("t^{e}: s{lambda} has multiplicity {mult}"))
        }),
    );
    Ok(report)
}
