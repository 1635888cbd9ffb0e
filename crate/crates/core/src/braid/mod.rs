//! Braid matroids `B_n` (the complete graph on `n` vertices, rank `n - 1`)
//! with their `S_n` symmetry.

pub mod egf;
pub mod tables;

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graded::GradedSchur;
use crate::kl::{palindromic_solve, CoefficientData};
use crate::partition::{factorial, partitions_of, Partition};
use crate::plethysm::{plethysm, GradedPowerSum};
use crate::poly::{IntPoly, RatPoly};
use crate::report::Report;
use crate::schur::SchurExpansion;

pub const DEFAULT_MAX_N: usize = 10;

static MAX_N: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_N);

/// Largest `n` accepted by the equivariant braid computations.
pub fn max_n() -> usize {
    MAX_N.load(Ordering::Relaxed)
}

pub fn set_max_n(n: usize) {
    MAX_N.store(n, Ordering::Relaxed);
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Unsupported("braid matroids need n >= 1".into()));
    }
    if n > max_n() {
        return Err(Error::LimitExceeded {
            what: "braid n",
            value: n,
            limit: max_n(),
        });
    }
    Ok(())
}

fn mobius_function(n: usize) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `(1/k) sum_{d | k} mu(k/d) t^d`.
fn getzler_exponent(k: usize) -> RatPoly {
    let mut out = RatPoly::zero();
    for d in (1..=k).filter(|d| k.is_multiple_of(*d)) {
        let mu = mobius_function(k / d);
        if mu != 0 {
            out.add_term(d as i32, &BigRational::new(BigInt::from(mu), BigInt::from(k)));
        }
    }
    out
}

/// `prod_k (1 + p_k)^{alpha_k(t)}` up to symmetric-function degree `max_deg`.
fn getzler_product(max_deg: usize) -> GradedPowerSum {
    let mut acc = GradedPowerSum::one();
    for k in 1..=max_deg {
        let alpha = getzler_exponent(k);
        // Binomial series sum_j binom(alpha, j) p_k^j.
        let mut factor = GradedPowerSum::one();
        let mut binom = RatPoly::one();
        for j in 1..=max_deg / k {
            let shifted = &alpha - &RatPoly::constant(BigRational::from_integer(BigInt::from(j - 1)));
            binom = binom
                .mul_ref(&shifted)
                .scale_by(&BigRational::new(BigInt::one(), BigInt::from(j)));
            factor.add_term(Partition::from_unsorted(vec![k; j]), &binom);
        }
        acc = acc.mul_truncated(&factor, max_deg);
    }
    acc
}

fn k_memo() -> &'static Mutex<Vec<GradedSchur>> {
    static MEMO: OnceLock<Mutex<Vec<GradedSchur>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(Vec::new()))
}

/// Equivariant characteristic polynomial `K_n(t)` of `B_n`, read off from
/// the degree-`n` part of the product `1 + t K = prod_k (1 + p_k)^{alpha_k}`.
pub fn char_poly_braid(n: usize) -> Result<GradedSchur> {
    check_n(n)?;
    if let Some(k) = k_memo().lock().unwrap().get(n - 1) {
        return Ok(k.clone());
    }
    let product = getzler_product(n);
    let mut all = Vec::with_capacity(n);
    for deg in 1..=n {
        let k = product.degree_part(deg).to_schur()?.shift(-1);
        all.push(k);
    }
    let mut memo = k_memo().lock().unwrap();
    if memo.len() < all.len() {
        *memo = all;
    }
    Ok(memo[n - 1].clone())
}

/// `sum_{k <= n} K_k`.
fn k_series(n: usize) -> Result<GradedSchur> {
    let mut out = GradedSchur::zero();
    for k in 1..=n {
        out += &char_poly_braid(k)?;
    }
    Ok(out)
}

fn q_memo() -> &'static Mutex<HashMap<usize, GradedSchur>> {
    static MEMO: OnceLock<Mutex<HashMap<usize, GradedSchur>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Equivariant Kazhdan-Lusztig polynomial `Q_n(t)` of `B_n`.
///
/// The degree-`n` part of `Q[K]`, with `Q = sum_k Q_k` and `K = sum_k K_k`,
/// is `t^{n-1} Q_n(1/t)`; since `K_1 = s[1]` it equals `Q_n` plus the
/// degree-`n` part of `sum_{k<n} Q_k[K]`.
pub fn kl_braid(n: usize) -> Result<GradedSchur> {
    check_n(n)?;
    if let Some(hit) = q_memo().lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let q = if n == 1 {
        GradedSchur::constant(SchurExpansion::h(1))
    } else {
        let mut lower = GradedSchur::zero();
        for k in 1..n {
            lower += &kl_braid(k)?;
        }
        let composed = plethysm(&lower, &k_series(n)?, n)?;
        let remainder = composed.map_schur(|c| c.degree_part(n));
        palindromic_solve(n as i32 - 1, &remainder)?
    };
    q_memo().lock().unwrap().insert(n, q.clone());
    Ok(q)
}

/// `D_{n,i}`, the coefficient of `t^i` in `Q_n`.
pub fn braid_coefficient(n: usize, i: usize) -> Result<SchurExpansion> {
    Ok(kl_braid(n)?.coeff(i as i32))
}

/// Closed form for `D_{n,1}`.
pub fn d_n1_closed(n: usize) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    if n <= 3 {
        return out;
    }
    let two_row = |i: usize| Partition::from_unsorted(vec![n - i, i]);
    out.add_term(two_row(0), ((n - 2) / 2) as i64);
    out.add_term(two_row(1), ((n - 3) / 2) as i64);
    out.add_term(two_row(2), ((n - 4) / 2) as i64);
    for i in 3..=n / 2 {
        let mult = if n % 2 == 1 {
            n.div_ceil(2) - i
        } else if i % 2 == 1 {
            n / 2 - i
        } else {
            (n + 2) / 2 - i
        };
        out.add_term(two_row(i), mult as i64);
    }
    out
}

fn types_memo() -> &'static Mutex<HashMap<usize, IntPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<usize, IntPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Nonequivariant `P_{B_n}`, summing the defining recursion over flats
/// grouped by partition type: `N_lambda = n! / (prod lambda_i! prod m_k!)`
/// set partitions of type `lambda`, each with localization
/// `prod B_{lambda_i}` and restriction `B_{l(lambda)}`.
pub fn kl_braid_by_types(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::Unsupported("braid matroids need n >= 1".into()));
    }
    if let Some(hit) = types_memo().lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let p = if n == 1 {
        IntPoly::one()
    } else {
        let mut r = IntPoly::zero();
        for lambda in partitions_of(n) {
            let ell = lambda.len();
            if ell == n {
                continue;
            }
            let mut den: u128 = lambda.parts().iter().map(|&x| factorial(x)).product();
            den *= lambda.multiplicities().iter().map(|&m| factorial(m)).product::<u128>();
            let count = i64::try_from(factorial(n) / den).expect("set partition count fits in i64");
            let mut term = kl_braid_by_types(ell)?.scale_by(&count);
            for &part in lambda.parts() {
                term = term.mul_ref(&IntPoly::falling_from_one(part - 1));
            }
            r += &term;
        }
        palindromic_solve(n as i32 - 1, &r)?
    };
    types_memo().lock().unwrap().insert(n, p.clone());
    Ok(p)
}

/// Orbit data for `B_n`, with flats grouped by number of blocks `l`
/// (rank `n - l`).
///
/// Summed over the block types with `l` blocks, the induced representations
/// are the degree-`n` parts of `D_{l,k}[G(s)]`, where
/// `G(s) = sum_j (-s)^j OS_j = sum_k s^{k-1} K_k(1/s)`; the sign of the
/// grading variable absorbs the Koszul signs of the wreath action, so the
/// coefficient of `s^j` is `(-1)^j` times the induced piece.
pub struct BraidCoefficients {
    n: usize,
    g: GradedSchur,
    cache: RefCell<HashMap<(usize, usize), GradedSchur>>,
}

impl BraidCoefficients {
    pub fn new(n: usize) -> Result<Self> {
        let mut g = GradedSchur::zero();
        for k in 1..=n {
            g += &char_poly_braid(k)?.reverse(k as i32 - 1);
        }
        Ok(Self {
            n,
            g,
            cache: RefCell::new(HashMap::new()),
        })
    }
}

impl CoefficientData for BraidCoefficients {
    type Coeff = SchurExpansion;

    fn rank(&self) -> usize {
        self.n - 1
    }

    fn orbit_ranks(&self) -> Vec<usize> {
        (1..=self.n).map(|blocks| self.n - blocks).collect()
    }

    fn induced(&self, orbit: usize, j: usize, l: usize) -> Result<SchurExpansion> {
        let blocks = orbit + 1;
        let key = (blocks, l);
        if !self.cache.borrow().contains_key(&key) {
            let d = braid_coefficient(blocks, l)?;
            let value = if d.is_empty() {
                GradedSchur::zero()
            } else {
                plethysm(&GradedSchur::constant(d), &self.g, self.n)?.map_schur(|c| c.degree_part(self.n))
            };
            self.cache.borrow_mut().insert(key, value);
        }
        let piece = self.cache.borrow()[&key].coeff(j as i32);
        Ok(if j.is_multiple_of(2) { piece } else { -piece })
    }
}

/// Equivariant identities for `B_n`.
pub fn identity_checks(n: usize) -> Result<Report> {
    let mut report = Report::new(format!("braid identities (n = {n})"));
    let k = char_poly_braid(n)?;
    if n >= 2 {
        let at_one = k.eval_at_one();
        report.push("K_n(1) = 0", at_one.is_empty(), format!("K_n(1) = {at_one}"));
    }
    let dim = k.dimension();
    let falling = IntPoly::falling_from_one(n - 1);
    report.push(
        "dim K_n = (t-1)...(t-n+1)",
        dim == falling,
        format!("got {}", dim.render(true)),
    );

    // Sum over set partitions of [n] of the induced characteristic
    // polynomials of the upper intervals: the degree-n part of K[sum h_k].
    let mut h_series = GradedSchur::zero();
    for j in 1..=n {
        h_series.add_term(0, &SchurExpansion::h(j));
    }
    let counting = plethysm(&k_series(n)?, &h_series, n)?.map_schur(|c| c.degree_part(n));
    let expected = GradedSchur::monomial(n as i32 - 1, SchurExpansion::h(n));
    report.push(
        "sum_F Ind H(M^F) = t^{n-1} s[n]",
        counting == expected,
        counting.to_text(),
    );
    if n >= 2 {
        let constant = counting.coeff(0);
        report.push("sum_F Ind OS_top(M^F) = 0", constant.is_empty(), constant.to_text());
    }

    let q = kl_braid(n)?;
    report.push(
        "Q_n(0) = s[n]",
        q.coeff(0) == SchurExpansion::h(n),
        q.coeff(0).to_text(),
    );
    let d1 = q.coeff(1);
    let closed = d_n1_closed(n);
    report.push("D_{n,1} closed form", d1 == closed, format!("{d1} vs {closed}"));
    let negative = q.first_negative();
    report.record(
        "Q_n effective",
        negative.map_or(Ok(()), |(e, p, m)| Err(format!("t^{e}: s{p} has multiplicity {m}"))),
    );
    let by_types = kl_braid_by_types(n)?;
    report.push(
        "dim Q_n = P(B_n) by partition types",
        q.dimension() == by_types,
        format!("{} vs {}", q.dimension(), by_types),
    );
    Ok(report)
}
