//! The palindromic solver behind every Kazhdan-Lusztig computation, and the
//! coefficient-level form of the defining recursion.

use crate::error::{Error, Result};
use num_traits::Zero;

use crate::poly::{Coeff, LaurentPoly};

/// The unique `P` with `deg P < d/2` and `t^d P(1/t) - P(t) = R(t)`.
///
/// `R` must be supported in `[0, d]` and satisfy `t^d R(1/t) = -R(t)`; the
/// first exponent where either condition fails is reported.
pub fn palindromic_solve<C: Coeff>(d: i32, r: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    for (e, _) in r.terms() {
        if e < 0 || e > d {
            return Err(Error::RemainderOutOfRange { degree: d, exponent: e });
        }
    }
    for e in 0..=d {
        let mut sum = r.coeff(e);
        sum += &r.coeff(d - e);
        if !sum.is_zero() {
            return Err(Error::NotAntipalindromic { degree: d, exponent: e });
        }
    }
    let mut p = LaurentPoly::zero();
    let mut i = 0;
    while 2 * i < d {
        p.add_term(i, &r.coeff(d - i));
        i += 1;
    }
    Ok(p)
}

/// Orbit data for the coefficient form of the recursion.
///
/// Orbits of flats may be grouped: `induced` then returns the sum over the
/// group. Within a group all flats must share the same rank.
pub trait CoefficientData {
    type Coeff: Coeff;

    fn rank(&self) -> usize;

    /// Rank of the flats in each orbit group.
    fn orbit_ranks(&self) -> Vec<usize>;

    /// `Ind_{W_F}^W (OS_{M_F, j} (x) C_{M^F, l})`, summed over the group.
    fn induced(&self, orbit: usize, j: usize, l: usize) -> Result<Self::Coeff>;
}

/// Coefficient of `t^i` in the equivariant Kazhdan-Lusztig polynomial, for
/// `i < rk/2` (or `i = 0` in rank 0):
/// `C_i = sum_{[F], j} (-1)^j Ind(OS_{M_F,j} (x) C_{M^F, crk F - i + j})`.
pub fn coefficient_recursion<D: CoefficientData>(data: &D, i: usize) -> Result<D::Coeff> {
    let rank = data.rank();
    if 2 * i >= rank && !(rank == 0 && i == 0) {
        return Err(Error::Unsupported(format!(
            "coefficient t^{i} of a rank-{rank} Kazhdan-Lusztig polynomial is zero by degree"
        )));
    }
    let mut acc = D::Coeff::zero();
    for (orbit, rk_f) in data.orbit_ranks().into_iter().enumerate() {
        let crk = rank - rk_f;
        for j in 0..=rk_f {
            let Some(l) = (crk + j).checked_sub(i) else {
                continue;
            };
            let nonzero = if crk == 0 { l == 0 } else { 2 * l < crk };
            if !nonzero {
                continue;
            }
            let term = data.induced(orbit, j, l)?;
            if j % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
    }
    Ok(acc)
}
