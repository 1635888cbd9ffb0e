//! Plethysm of graded symmetric functions, computed in the power-sum basis.
//!
//! `p_r[g]` replaces every `p_s` in `g` by `p_{rs}` and the grading variable
//! `t` by `t^r`; `f[g]` is then linear in the (unsubstituted) `t`-coefficients
//! of `f` and multiplicative in its power-sum monomials.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::graded::GradedSchur;
use crate::partition::Partition;
use crate::poly::RatPoly;
use crate::power_sum::{from_power_sums, PowerSumExpansion};
use crate::schur::SchurExpansion;

/// `sum_mu c_mu(t) p_mu` with rational Laurent-polynomial coefficients.
#[derive(Clone, PartialEq, Default, Debug)]
pub struct GradedPowerSum {
    terms: BTreeMap<Partition, RatPoly>,
}

impl GradedPowerSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut f = Self::new();
        f.add_term(Partition::empty(), &RatPoly::one());
        f
    }

    pub fn add_term(&mut self, mu: Partition, c: &RatPoly) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> RatPoly {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::degree).min()
    }

    pub fn from_ungraded(f: &PowerSumExpansion) -> Self {
        let mut out = Self::new();
        for (mu, c) in f.terms() {
            out.add_term(mu.clone(), &RatPoly::constant(c.clone()));
        }
        out
    }

    pub fn from_schur(f: &GradedSchur) -> Self {
        let mut out = Self::new();
        for (e, c) in f.terms() {
            for (mu, q) in crate::power_sum::to_power_sums(c).terms() {
                out.add_term(mu.clone(), &RatPoly::monomial(e, q.clone()));
            }
        }
        out
    }

    /// Convert back to the Schur basis; fails if some multiplicity is not an integer.
    pub fn to_schur(&self) -> Result<GradedSchur> {
        let mut by_exp: BTreeMap<i32, PowerSumExpansion> = BTreeMap::new();
        for (mu, c) in &self.terms {
            for (e, q) in c.terms() {
                by_exp.entry(e).or_default().add_term(mu.clone(), q);
            }
        }
        let mut out = GradedSchur::zero();
        for (e, ps) in by_exp {
            out.add_term(e, &from_power_sums(&ps)?);
        }
        Ok(out)
    }

    pub fn degree_part(&self, n: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(mu, _)| mu.degree() == n)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }

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

    /// `p_r[self]`: `p_mu -> p_{r mu}` and `t -> t^r`.
    pub fn adams(&self, r: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| (mu.scale(r), c.substitute_power(r as i32)))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), &-c.clone());
        }
        out
    }

    pub fn scale(&self, k: &RatPoly) -> Self {
        let mut out = Self::new();
        for (mu, c) in &self.terms {
            out.add_term(mu.clone(), &c.mul_ref(k));
        }
        out
    }

    /// Product truncated to symmetric-function degree `<= max_deg`.
    pub fn mul_truncated(&self, other: &Self, max_deg: usize) -> Self {
        let mut out = Self::new();
        for (a, ca) in &self.terms {
            let da = a.degree();
            if da > max_deg {
                continue;
            }
            for (b, cb) in &other.terms {
                if da + b.degree() <= max_deg {
                    out.add_term(a.union(b), &ca.mul_ref(cb));
                }
            }
        }
        out
    }
}

/// `f[g]` in the power-sum basis, truncated to degree `<= max_deg`.
pub fn plethysm_power_sums(f: &GradedPowerSum, g: &GradedPowerSum, max_deg: usize) -> Result<GradedPowerSum> {
    let Some(g_min) = g.min_degree() else {
        // f[0] is the constant term of f.
        return Ok(f.degree_part(0));
    };
    if g_min == 0 {
        return Err(Error::PlethysmConstantTerm);
    }
    let g = g.truncate(max_deg);
    let mut adams: HashMap<usize, GradedPowerSum> = HashMap::new();
    let mut products: HashMap<Partition, GradedPowerSum> = HashMap::new();
    products.insert(Partition::empty(), GradedPowerSum::one());
    let mut out = GradedPowerSum::new();
    for (mu, c) in f.terms() {
        if mu.degree() * g_min > max_deg {
            continue;
        }
        let x = product_of_adams(mu, &g, max_deg, &mut adams, &mut products);
        for (nu, q) in x.terms() {
            out.add_term(nu.clone(), &q.mul_ref(c));
        }
    }
    Ok(out)
}

/// `prod_j p_{mu_j}[g]`, memoized on prefixes of `mu`.
fn product_of_adams(
    mu: &Partition,
    g: &GradedPowerSum,
    max_deg: usize,
    adams: &mut HashMap<usize, GradedPowerSum>,
    products: &mut HashMap<Partition, GradedPowerSum>,
) -> GradedPowerSum {
    if let Some(hit) = products.get(mu) {
        return hit.clone();
    }
    let parts = mu.parts();
    let (&last, init) = parts.split_last().expect("empty partition is pre-seeded");
    let prefix = Partition::new(init.to_vec()).expect("prefix of a partition");
    let head = product_of_adams(&prefix, g, max_deg, adams, products);
    let factor = adams
        .entry(last)
        .or_insert_with(|| g.adams(last).truncate(max_deg))
        .clone();
    let value = head.mul_truncated(&factor, max_deg);
    products.insert(mu.clone(), value.clone());
    value
}

/// `f[g]` truncated to symmetric-function degree `<= max_deg`.
pub fn plethysm(f: &GradedSchur, g: &GradedSchur, max_deg: usize) -> Result<GradedSchur> {
    let fp = GradedPowerSum::from_schur(f);
    let gp = GradedPowerSum::from_schur(g);
    plethysm_power_sums(&fp, &gp, max_deg)?.to_schur()
}

/// Plethysm of ungraded expansions, untruncated.
pub fn plethysm_schur(f: &SchurExpansion, g: &SchurExpansion) -> Result<SchurExpansion> {
    let max_deg = f.max_degree().unwrap_or(0) * g.max_degree().unwrap_or(0);
    let out = plethysm(
        &GradedSchur::constant(f.clone()),
        &GradedSchur::constant(g.clone()),
        max_deg,
    )?;
    Ok(out.coeff(0))
}
