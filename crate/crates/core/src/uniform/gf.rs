//! Generating-function identities for the uniform family, checked as
//! truncated series in `u` and `x`.
//!
//! Quotients with poles on `u = x` or `tu = x` are rewritten with divided
//! differences: `(s(y) - s(x)) / (y - x) = sum_n s[n] sum_{a+b=n-1} y^a x^b`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::graded::GradedSchur;
use crate::lattice::kl_polynomial;
use crate::matroid::Matroid;
use crate::partition::{factorial, Partition};
use crate::poly::RatPoly;
use crate::report::Report;
use crate::schur::SchurExpansion;
use crate::series::TruncSeries;
use crate::uniform::{char_poly_uniform, kl_uniform_closed, kl_uniform_recursive};

pub const DEFAULT_ORDER: u32 = 8;

pub type SchurSeries = TruncSeries<SchurExpansion>;
pub type RatSeries = TruncSeries<BigRational>;

fn graded(exp: i32, f: SchurExpansion) -> GradedSchur {
    GradedSchur::monomial(exp, f)
}

/// `s(t^a u) = sum_n t^{a n} u^n s[n]`, with `a` in `{0, 1}`.
fn s_u(order: u32, scaled: bool) -> SchurSeries {
    TruncSeries::from_fn(order, |d, m| {
        if m == 0 {
            graded(if scaled { d as i32 } else { 0 }, SchurExpansion::h(d as usize))
        } else {
            GradedSchur::zero()
        }
    })
}

/// `sum_n (sign x)^n f(n)` in the `x` slot.
fn in_x(order: u32, sign: i64, f: impl Fn(usize) -> SchurExpansion) -> SchurSeries {
    TruncSeries::from_fn(order, |d, m| {
        if d == 0 {
            graded(0, f(m as usize).scale(sign.pow(m)))
        } else {
            GradedSchur::zero()
        }
    })
}

/// `1 / s(u) = sum_n (-u)^n s[1^n]`.
fn s_u_inverse(order: u32) -> SchurSeries {
    TruncSeries::from_fn(order, |d, m| {
        if m == 0 {
            let e = SchurExpansion::e(d as usize);
            graded(0, if d % 2 == 0 { e } else { -e })
        } else {
            GradedSchur::zero()
        }
    })
}

/// Divided difference `sum_n s[n] sum_{a+b=n-1} (t^c u)^a x^b`.
fn divided_difference(order: u32, scaled: bool) -> SchurSeries {
    TruncSeries::from_fn(order, |a, b| {
        graded(
            if scaled { a as i32 } else { 0 },
            SchurExpansion::h((a + b + 1) as usize),
        )
    })
}

/// `H(t,u,x) = sum_{d >= 1, m >= 0} H_{m,d}(t) u^d x^m`, assembled from the
/// Orlik-Solomon characters.
pub fn h_direct(order: u32) -> SchurSeries {
    TruncSeries::from_fn(order, |d, m| {
        if d == 0 {
            GradedSchur::zero()
        } else {
            char_poly_uniform(m as usize, d as usize)
        }
    })
}

/// `u/(u-x) (-1 + s(x)/s(u)) + tu/(tu-x) (s(tu) - s(x))/s(u)`.
pub fn h_formula(order: u32) -> SchurSeries {
    let left = divided_difference(order, false).shift(0, 1, 0).neg();
    let right = divided_difference(order, true).shift(1, 1, 0);
    left.add(&right).mul(&s_u_inverse(order))
}

/// `P(t,u,x)` from the recursion or the closed form.
pub fn p_series(order: u32, closed: bool) -> Result<SchurSeries> {
    let mut out = TruncSeries::zero(order);
    for total in 1..=order {
        for d in 1..=total {
            let m = total - d;
            let p = if closed {
                kl_uniform_closed(m as usize, d as usize)
            } else {
                kl_uniform_recursive(m as usize, d as usize)?
            };
            out.add_term(d, m, &p);
        }
    }
    Ok(out)
}

/// `R(t,u,x) = (tu/(tu-x) + P) s(tu) - tu/(tu-x) s(x) = tu DD(tu,x) + P s(tu)`.
pub fn r_series(p: &SchurSeries) -> SchurSeries {
    let order = p.order();
    divided_difference(order, true)
        .shift(1, 1, 0)
        .add(&p.mul(&s_u(order, true)))
}

fn compare<X: crate::poly::RingCoeff>(report: &mut Report, label: &str, lhs: &TruncSeries<X>, rhs: &TruncSeries<X>) {
    let outcome = match lhs.first_difference(rhs) {
        None => Ok(()),
        Some((d, m)) => Err(format!(
            "coefficient of u^{d} x^{m}: {:?} vs {:?}",
            lhs.coeff(d, m),
            rhs.coeff(d, m)
        )),
    };
    report.record(label, outcome);
}

fn rat_poly_over_factorial(c: &GradedSchur, n: u32) -> RatPoly {
    let den = BigInt::from(factorial(n as usize));
    c.dimension()
        .map_coeffs(|&k| BigRational::new(BigInt::from(k), den.clone()))
}

/// `sum_n c_n y^n / n!` in the given slot, with `y = t^a u` or `x`.
fn exp_like(order: u32, in_u: bool, scaled: bool, sign: i64) -> RatSeries {
    TruncSeries::from_fn(order, |d, m| {
        let (n, other) = if in_u { (d, m) } else { (m, d) };
        if other != 0 {
            return RatPoly::zero();
        }
        let c = BigRational::new(BigInt::from(sign.pow(n)), BigInt::from(factorial(n as usize)));
        RatPoly::monomial(if scaled { n as i32 } else { 0 }, c)
    })
}

fn divided_difference_exp(order: u32, scaled: bool) -> RatSeries {
    TruncSeries::from_fn(order, |a, b| {
        let c = BigRational::new(BigInt::from(1), BigInt::from(factorial((a + b + 1) as usize)));
        RatPoly::monomial(if scaled { a as i32 } else { 0 }, c)
    })
}

/// Every series identity for the uniform family, truncated at `order`.
pub fn gf_checks(order: u32) -> Result<Report> {
    let mut report = Report::new(format!("uniform generating functions (order {order})"));
    let one = SchurSeries::one(order);

    // (x + u) sum_{e,m} x^e u^m s[m+1,1^e] = -1 + s(u) E(x), E(x) = 1/s(-x).
    let hooks = TruncSeries::from_fn(order, |d, m| {
        graded(0, SchurExpansion::schur(Partition::hook(d as usize + 1, m as usize)))
    });
    let lhs = hooks.shift(0, 1, 0).add(&hooks.shift(0, 0, 1));
    let e_x = in_x(order, 1, SchurExpansion::e);
    let rhs = s_u(order, false).mul(&e_x).sub(&one);
    compare(&mut report, "hook generating function", &lhs, &rhs);
    compare(
        &mut report,
        "s(-x) E(x) = 1",
        &in_x(order, -1, SchurExpansion::h).mul(&e_x),
        &one,
    );
    compare(
        &mut report,
        "1/s(u) by series inversion",
        &s_u(order, false).inverse(),
        &s_u_inverse(order),
    );

    let h = h_direct(order);
    compare(&mut report, "H(t,u,x) closed form", &h_formula(order), &h);
    let h0 = one.add(&h.at_x_zero());
    compare(
        &mut report,
        "1 + H(t,u,0) = s(tu)/s(u)",
        &h0,
        &s_u(order, true).mul(&s_u_inverse(order)),
    );

    let p = p_series(order, false)?;
    compare(
        &mut report,
        "P(1/t,tu,x) = H + (1 + H(t,u,0)) P",
        &p.invert_t_scale_u(),
        &h.add(&h0.mul(&p)),
    );

    let p_closed = p_series(order, true)?;
    let r = r_series(&p_closed);
    compare(
        &mut report,
        "R(1/t,tu,x) = R(t,u,x) for the closed form",
        &r.invert_t_scale_u(),
        &r,
    );
    let no_d0 = p_closed.terms().all(|((d, _), _)| d > 0);
    report.push("closed form has P(t,0,x) = 0", no_d0, "a u^0 term is present");
    let low = p_closed
        .terms()
        .flat_map(|((d, m), c)| c.terms().map(move |(i, _)| (d, m, i)))
        .find(|&(d, _, i)| 2 * i >= d as i32);
    report.record(
        "closed form has no t^i u^d with 2i >= d",
        low.map_or(Ok(()), |(d, m, i)| Err(format!("t^{i} u^{d} x^{m}"))),
    );

    // Exponential generating functions for the dimensions.
    let h_dim = h.map(|d, m, c| rat_poly_over_factorial(c, d + m));
    let e_minus_u = exp_like(order, true, false, -1);
    let left = divided_difference_exp(order, false).shift(0, 1, 0).neg();
    let right = divided_difference_exp(order, true).shift(1, 1, 0);
    let h_exp = left.add(&right).mul(&e_minus_u);
    compare(&mut report, "H(t,u,x) exponential closed form", &h_exp, &h_dim);
    let h_exp0 = RatSeries::one(order).add(&h_exp.at_x_zero());
    compare(
        &mut report,
        "1 + H(t,u,0) = e^{tu-u}",
        &h_exp0,
        &exp_like(order, true, true, 1).mul(&e_minus_u),
    );
    let mut p_dim = RatSeries::zero(order);
    for total in 1..=order {
        for d in 1..=total {
            let m = total - d;
            let kl = kl_polynomial(&Matroid::uniform(m as usize, d as usize)?)?;
            let den = BigInt::from(factorial(total as usize));
            p_dim.add_term(
                d,
                m,
                &kl.map_coeffs(|&k| BigRational::new(BigInt::from(k), den.clone())),
            );
        }
    }
    compare(
        &mut report,
        "exponential form of the recursion",
        &p_dim.invert_t_scale_u(),
        &h_exp.add(&h_exp0.mul(&p_dim)),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::LaurentPoly;

    #[test]
    fn first_order_terms() {
        // 1 + H(t,u,0) = 1 + (t - 1) u s[1] + ...
        let h0 = h_direct(2).at_x_zero();
        assert_eq!(
            h0.coeff(1, 0),
            LaurentPoly::from_terms([(1, SchurExpansion::h(1)), (0, -SchurExpansion::h(1))])
        );
    }

    #[test]
    fn all_identities_hold_at_small_order() {
        let r = gf_checks(5).unwrap();
        assert!(r.passed(), "{r}");
    }
}
