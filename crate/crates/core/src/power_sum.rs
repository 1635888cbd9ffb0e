//! The power-sum basis.
//!
//! `s[lambda] = sum_mu chi^lambda(mu) p_mu / z_mu`, and conversely the Schur
//! multiplicity of `f = sum_mu c_mu p_mu` at `lambda` is the Hall inner
//! product `<f, s[lambda]> = sum_mu c_mu chi^lambda(mu)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::characters::table;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::RingCoeff;
use crate::schur::SchurExpansion;

/// A finite rational combination of power-sum monomials `p_mu`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PowerSumExpansion {
    terms: BTreeMap<Partition, BigRational>,
}

impl PowerSumExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    /// `p_mu`.
    pub fn monomial(mu: Partition) -> Self {
        let mut f = Self::new();
        f.add_term(mu, &BigRational::from_integer(1.into()));
        f
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty())
    }

    pub fn add_term(&mut self, mu: Partition, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mu) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&mu);
                }
            }
            None => {
                self.terms.insert(mu, c.clone());
            }
        }
    }

    pub fn coeff(&self, mu: &Partition) -> BigRational {
        self.terms.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Keep only terms of degree at most `max_deg`.
    pub fn truncate(&self, max_deg: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(mu, _)| mu.degree() <= max_deg)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }

    /// The Adams operation `p_mu -> p_{r mu}`.
    pub fn adams(&self, r: usize) -> Self {
        Self {
            terms: self.terms.iter().map(|(mu, c)| (mu.scale(r), c.clone())).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Debug for PowerSumExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(mu, c)| format!("{c}*p{mu}")).collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl Zero for PowerSumExpansion {
    fn zero() -> Self {
        Self::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl std::ops::Add for PowerSumExpansion {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl AddAssign<&PowerSumExpansion> for PowerSumExpansion {
    fn add_assign(&mut self, rhs: &PowerSumExpansion) {
        for (mu, c) in &rhs.terms {
            self.add_term(mu.clone(), c);
        }
    }
}

impl SubAssign<&PowerSumExpansion> for PowerSumExpansion {
    fn sub_assign(&mut self, rhs: &PowerSumExpansion) {
        for (mu, c) in &rhs.terms {
            self.add_term(mu.clone(), &-c.clone());
        }
    }
}

impl Neg for PowerSumExpansion {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(mu, c)| (mu, -c)).collect(),
        }
    }
}

impl RingCoeff for PowerSumExpansion {
    fn mul_ref(&self, other: &Self) -> Self {
        self.multiply(other)
    }
}

pub fn to_power_sums(f: &SchurExpansion) -> PowerSumExpansion {
    let mut out = PowerSumExpansion::new();
    for (lambda, m) in f.terms() {
        let t = table(lambda.degree());
        let li = t.index_of(lambda).expect("partition in its own table");
        for (ri, rho) in t.partitions().iter().enumerate() {
            let chi = t.value_at(li, ri);
            if chi != 0 {
                let c = BigRational::new(BigInt::from(chi * m), BigInt::from(t.centralizer(ri)));
                out.add_term(rho.clone(), &c);
            }
        }
    }
    out
}

pub fn from_power_sums(f: &PowerSumExpansion) -> Result<SchurExpansion> {
    let mut by_degree: BTreeMap<usize, Vec<(&Partition, &BigRational)>> = BTreeMap::new();
    for (mu, c) in f.terms() {
        by_degree.entry(mu.degree()).or_default().push((mu, c));
    }
    let mut out = SchurExpansion::new();
    for (n, terms) in by_degree {
        let t = table(n);
        let cols: Vec<(usize, &BigRational)> = terms
            .iter()
            .map(|(mu, c)| (t.index_of(mu).expect("partition in its own table"), *c))
            .collect();
        for (li, lambda) in t.partitions().iter().enumerate() {
            let mut acc = BigRational::zero();
            for &(ri, c) in &cols {
                let chi = t.value_at(li, ri);
                if chi != 0 {
                    acc += c * BigRational::from_integer(chi.into());
                }
            }
            if acc.is_zero() {
                continue;
            }
            let m = integral(&acc, || {
                format!("converting power sums to the Schur basis at s{lambda}")
            })?;
            out.add_term(lambda.clone(), m);
        }
    }
    Ok(out)
}

/// `q` as an `i64`, or an integrality error.
pub(crate) fn integral(q: &BigRational, context: impl FnOnce() -> String) -> Result<i64> {
    if !q.is_integer() {
        return Err(Error::Integrality { context: context() });
    }
    q.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Integrality { context: context() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{p, partitions_of};
    use crate::poly::ratio;

    #[test]
    fn single_box() {
        let f = to_power_sums(&SchurExpansion::schur(p(&[1])));
        assert_eq!(f, PowerSumExpansion::monomial(p(&[1])));
    }

    #[test]
    fn h2_in_power_sums() {
        // h_2 = (p_1^2 + p_2) / 2
        let f = to_power_sums(&SchurExpansion::h(2));
        assert_eq!(f.coeff(&p(&[1, 1])), ratio(1, 2));
        assert_eq!(f.coeff(&p(&[2])), ratio(1, 2));
    }

    #[test]
    fn round_trip_all_irreducibles() {
        for n in 0..=8 {
            for lambda in partitions_of(n) {
                let f = SchurExpansion::schur(lambda);
                assert_eq!(from_power_sums(&to_power_sums(&f)).unwrap(), f);
            }
        }
    }

    #[test]
    fn non_integral_is_rejected() {
        let mut f = PowerSumExpansion::new();
        f.add_term(p(&[1, 1]), &ratio(1, 2));
        assert!(matches!(from_power_sums(&f), Err(Error::Integrality { .. })));
    }

    #[test]
    fn power_sum_product_is_union() {
        let a = to_power_sums(&SchurExpansion::schur(p(&[2])));
        let b = to_power_sums(&SchurExpansion::schur(p(&[1])));
        let prod = from_power_sums(&a.multiply(&b)).unwrap();
        assert_eq!(prod, SchurExpansion::schur(p(&[2])).pieri_row(1));
    }
}
