//! Internal (Kronecker) products, via pointwise multiplication of characters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::characters::table;
use crate::error::{Error, Result};
use crate::graded::GradedSchur;
use crate::partition::factorial;
use crate::schur::SchurExpansion;

/// Character values of a homogeneous degree-`n` expansion, indexed like the
/// columns of the character table of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub n: usize,
    pub values: Vec<i128>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            values: vec![0; table(n).partitions().len()],
        }
    }

    /// Character of the degree-`n` part of `f`.
    pub fn of(f: &SchurExpansion, n: usize) -> Self {
        let t = table(n);
        let mut values = vec![0i128; t.partitions().len()];
        for (lambda, m) in f.terms() {
            if lambda.degree() != n {
                continue;
            }
            let row = t.row(t.index_of(lambda).expect("partition of n"));
            for (v, &chi) in values.iter_mut().zip(row) {
                *v += m as i128 * chi as i128;
            }
        }
        Self { n, values }
    }

    pub fn pointwise(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            *a -= b;
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            *a += b;
        }
    }

    /// Multiplicity of every irreducible: `<chi, chi^lambda> = sum_rho chi(rho) chi^lambda(rho) / z_rho`.
    pub fn decompose(&self) -> Result<SchurExpansion> {
        let t = table(self.n);
        let order = BigInt::from(factorial(self.n));
        // n!/z_rho is the size of the conjugacy class.
        let class_sizes: Vec<BigInt> = (0..t.partitions().len())
            .map(|ri| &order / BigInt::from(t.centralizer(ri)))
            .collect();
        let weighted: Vec<BigInt> = self
            .values
            .iter()
            .zip(&class_sizes)
            .map(|(&v, size)| BigInt::from(v) * size)
            .collect();
        let mut out = SchurExpansion::new();
        for (li, lambda) in t.partitions().iter().enumerate() {
            let mut acc = BigInt::zero();
            for (&chi, w) in t.row(li).iter().zip(&weighted) {
                if chi != 0 && !w.is_zero() {
                    acc += w * chi;
                }
            }
            if acc.is_zero() {
                continue;
            }
            let (q, r) = acc.div_rem(&order);
            let m = q.to_i64().filter(|_| r.is_zero()).ok_or_else(|| Error::Integrality {
                context: format!("decomposing a class function at s{lambda}"),
            })?;
            out.add_term(lambda.clone(), m);
        }
        Ok(out)
    }
}

/// Kronecker product, extended bilinearly over homogeneous components;
/// components of different degrees multiply to zero.
pub fn kronecker(f: &SchurExpansion, g: &SchurExpansion) -> SchurExpansion {
    let degrees = |h: &SchurExpansion| -> BTreeMap<usize, ()> { h.terms().map(|(p, _)| (p.degree(), ())).collect() };
    let df = degrees(f);
    let dg = degrees(g);
    let mut out = SchurExpansion::new();
    for n in df.keys().filter(|n| dg.contains_key(n)) {
        let chi = ClassFunction::of(f, *n).pointwise(&ClassFunction::of(g, *n));
        out += &chi.decompose().expect("Kronecker coefficients are integers");
    }
    out
}

/// `f (x) g` for graded expansions: product of polynomials with Kronecker
/// products of the coefficients.
pub fn graded_kronecker(f: &GradedSchur, g: &GradedSchur) -> GradedSchur {
    let mut out = GradedSchur::zero();
    for (a, fa) in f.terms() {
        for (b, gb) in g.terms() {
            out.add_term(a + b, &kronecker(fa, gb));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;
    use crate::schur::sum_of;

    fn s(parts: &[usize]) -> SchurExpansion {
        SchurExpansion::schur(p(parts))
    }

    #[test]
    fn trivial_is_identity() {
        assert_eq!(kronecker(&s(&[5]), &s(&[3, 2])), s(&[3, 2]));
        assert_eq!(kronecker(&s(&[3, 2]), &s(&[5])), s(&[3, 2]));
    }

    #[test]
    fn sign_squared() {
        assert_eq!(kronecker(&s(&[1, 1, 1, 1]), &s(&[1, 1, 1, 1])), s(&[4]));
    }

    #[test]
    fn standard_squared_s3() {
        assert_eq!(
            kronecker(&s(&[2, 1]), &s(&[2, 1])),
            sum_of(&[&[3], &[2, 1], &[1, 1, 1]])
        );
    }

    #[test]
    fn mismatched_degrees_vanish() {
        assert!(kronecker(&s(&[2]), &s(&[3])).is_empty());
    }
}
