//! Exponential generating functions in `z` for the braid dimensions.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::braid::{char_poly_braid, kl_braid};
use crate::error::{Error, Result};
use crate::partition::factorial;
use crate::poly::{IntPoly, RatPoly};
use crate::report::Report;

pub const MAX_ORDER: usize = 9;

/// Coefficients of `z^0..=z^order`.
type Series = Vec<RatPoly>;

fn over_factorial(p: &IntPoly, n: usize) -> RatPoly {
    let den = BigInt::from(factorial(n));
    p.map_coeffs(|&c| BigRational::new(BigInt::from(c), den.clone()))
}

fn mul(a: &Series, b: &Series) -> Series {
    let order = a.len().min(b.len()) - 1;
    let mut out = vec![RatPoly::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += &x.mul_ref(y);
        }
    }
    out
}

/// `exp(f)` for `f` without constant term, from `n g_n = sum_k k f_k g_{n-k}`.
fn exp(f: &Series) -> Series {
    assert!(f[0].is_zero(), "exp needs a series without constant term");
    let order = f.len() - 1;
    let mut g = vec![RatPoly::zero(); order + 1];
    g[0] = RatPoly::one();
    for n in 1..=order {
        let mut acc = RatPoly::zero();
        for k in 1..=n {
            acc += &f[k]
                .mul_ref(&g[n - k])
                .scale_by(&BigRational::from_integer(BigInt::from(k)));
        }
        g[n] = acc.scale_by(&BigRational::new(BigInt::from(1), BigInt::from(n)));
    }
    g
}

fn first_mismatch(a: &Series, b: &Series) -> Option<usize> {
    (0..a.len().min(b.len())).find(|&n| a[n] != b[n])
}

fn record(report: &mut Report, label: &str, a: &Series, b: &Series) {
    let outcome = match first_mismatch(a, b) {
        None => Ok(()),
        Some(n) => Err(format!("first failing order z^{n}: {:?} vs {:?}", a[n], b[n])),
    };
    report.record(label, outcome);
}

/// `(1 + z)^t = 1 + t K(t, z)` and `Q(t, K(t, z)) = (1/t) Q(1/t, tz)`, where
/// `K(t,z) = sum_n chi_{B_n}(t) z^n / n!` and `Q(t,z) = sum_n P_{B_n}(t) z^n / n!`.
pub fn egf_checks(max_order: usize) -> Result<Report> {
    if max_order > MAX_ORDER || max_order == 0 {
        return Err(Error::Unsupported(format!(
            "z-order must lie in 1..={MAX_ORDER}, got {max_order}"
        )));
    }
    let mut report = Report::new(format!("braid exponential generating functions (order {max_order})"));
    let len = max_order + 1;

    let mut log = vec![RatPoly::zero(); len];
    for (k, slot) in log.iter_mut().enumerate().skip(1) {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        *slot = RatPoly::monomial(1, BigRational::new(BigInt::from(sign), BigInt::from(k)));
    }
    let power = exp(&log);

    let mut k_series = vec![RatPoly::zero(); len];
    let mut one_plus_tk = vec![RatPoly::one(); 1];
    for (n, slot) in k_series.iter_mut().enumerate().skip(1) {
        *slot = over_factorial(&char_poly_braid(n)?.dimension(), n);
        one_plus_tk.push(slot.shift(1));
    }
    record(&mut report, "(1+z)^t = 1 + t K(t,z)", &power, &one_plus_tk);

    let binomials: Series = (0..len)
        .map(|n| {
            let mut falling = IntPoly::one();
            for j in 0..n {
                falling = falling.mul_ref(&IntPoly::from_terms([(1, 1), (0, -(j as i64))]));
            }
            over_factorial(&falling, n)
        })
        .collect();
    record(&mut report, "(1+z)^t = sum binom(t,n) z^n", &power, &binomials);

    let mut composed = vec![RatPoly::zero(); len];
    let mut k_power = vec![RatPoly::zero(); len];
    k_power[0] = RatPoly::one();
    let mut reflected = vec![RatPoly::zero(); len];
    for (k, reflected_k) in reflected.iter_mut().enumerate().skip(1) {
        k_power = mul(&k_power, &k_series);
        let p = kl_braid(k)?.dimension();
        let pk = over_factorial(&p, k);
        for (slot, term) in composed.iter_mut().zip(&k_power) {
            *slot += &pk.mul_ref(term);
        }
        *reflected_k = pk.reverse(k as i32 - 1);
    }
    record(&mut report, "Q(t, K(t,z)) = Q(1/t, tz)/t", &composed, &reflected);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn first_order_is_t() {
        let mut log = vec![RatPoly::zero(); 3];
        log[1] = RatPoly::monomial(1, rat(1));
        log[2] = RatPoly::monomial(1, crate::poly::ratio(-1, 2));
        let g = exp(&log);
        assert_eq!(g[1], RatPoly::monomial(1, rat(1)));
        // binom(t,2) = (t^2 - t)/2
        assert_eq!(
            g[2],
            RatPoly::from_terms([(2, crate::poly::ratio(1, 2)), (1, crate::poly::ratio(-1, 2))])
        );
    }

    #[test]
    fn identities_at_order_six() {
        let r = egf_checks(6).unwrap();
        assert!(r.passed(), "{r}");
        assert!(egf_checks(10).is_err());
    }
}
