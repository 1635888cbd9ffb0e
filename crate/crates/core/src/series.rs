//! Power series in two variables `u`, `x` with Laurent-polynomial-in-`t`
//! coefficients, truncated at total degree `deg_u + deg_x <= order`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::poly::{LaurentPoly, RingCoeff};

pub struct TruncSeries<X> {
    order: u32,
    terms: BTreeMap<(u32, u32), LaurentPoly<X>>,
}

impl<X: RingCoeff> Clone for TruncSeries<X> {
    fn clone(&self) -> Self {
        Self {
            order: self.order,
            terms: self.terms.clone(),
        }
    }
}

impl<X: RingCoeff> PartialEq for TruncSeries<X> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.terms == other.terms
    }
}

impl<X: RingCoeff> fmt::Debug for TruncSeries<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<X: RingCoeff> TruncSeries<X> {
    pub fn zero(order: u32) -> Self {
        Self {
            order,
            terms: BTreeMap::new(),
        }
    }

    /// Coefficients `f(d, m)` of `u^d x^m` for every `d + m <= order`.
    pub fn from_fn(order: u32, mut f: impl FnMut(u32, u32) -> LaurentPoly<X>) -> Self {
        let mut out = Self::zero(order);
        for total in 0..=order {
            for d in 0..=total {
                let c = f(d, total - d);
                out.add_term(d, total - d, &c);
            }
        }
        out
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn add_term(&mut self, d: u32, m: u32, c: &LaurentPoly<X>) {
        if d + m > self.order || c.is_zero() {
            return;
        }
        let entry = self.terms.entry((d, m)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(d, m));
        }
    }

    pub fn coeff(&self, d: u32, m: u32) -> LaurentPoly<X> {
        self.terms.get(&(d, m)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &LaurentPoly<X>)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.order = self.order.min(other.order);
        out.terms.retain(|(d, m), _| d + m <= out.order);
        for ((d, m), c) in other.terms() {
            out.add_term(d, m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            order: self.order,
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = Self::zero(order);
        for ((d1, m1), a) in self.terms() {
            for ((d2, m2), b) in other.terms() {
                if d1 + d2 + m1 + m2 <= order {
                    out.add_term(d1 + d2, m1 + m2, &a.mul_ref(b));
                }
            }
        }
        out
    }

    /// Multiply by `t^a u^d x^m`.
    pub fn shift(&self, a: i32, d: u32, m: u32) -> Self {
        let mut out = Self::zero(self.order);
        for ((d0, m0), c) in self.terms() {
            out.add_term(d0 + d, m0 + m, &c.shift(a));
        }
        out
    }

    /// `f(t^{-1}, t u, x)`: the coefficient of `u^d x^m` is reversed in degree `d`.
    pub fn invert_t_scale_u(&self) -> Self {
        Self {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(&(d, m), c)| ((d, m), c.reverse(d as i32)))
                .collect(),
        }
    }

    /// `f(t, u, 0)`.
    pub fn at_x_zero(&self) -> Self {
        Self {
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|((_, m), _)| *m == 0)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn map<Y: RingCoeff>(&self, mut f: impl FnMut(u32, u32, &LaurentPoly<X>) -> LaurentPoly<Y>) -> TruncSeries<Y> {
        let mut out = TruncSeries::zero(self.order);
        for ((d, m), c) in self.terms() {
            out.add_term(d, m, &f(d, m, c));
        }
        out
    }

    /// First `(d, m)`, in graded order, where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(u32, u32)> {
        let order = self.order.min(other.order);
        for total in 0..=order {
            for d in 0..=total {
                if self.coeff(d, total - d) != other.coeff(d, total - d) {
                    return Some((d, total - d));
                }
            }
        }
        None
    }
}

impl<X: RingCoeff + One> TruncSeries<X> {
    pub fn one(order: u32) -> Self {
        let mut out = Self::zero(order);
        out.add_term(0, 0, &LaurentPoly::one());
        out
    }

    /// Multiplicative inverse of a series with constant term one, built
    /// degree by degree: `g_n = -sum_{k >= 1} f_k g_{n-k}`.
    pub fn inverse(&self) -> Self {
        assert!(
            self.coeff(0, 0) == LaurentPoly::one(),
            "series must have constant term 1"
        );
        let mut g = Self::one(self.order);
        for total in 1..=self.order {
            for d in 0..=total {
                let m = total - d;
                let mut acc = LaurentPoly::<X>::zero();
                for ((d1, m1), f) in self.terms() {
                    if (d1, m1) == (0, 0) || d1 > d || m1 > m {
                        continue;
                    }
                    if let Some(gc) = g.terms.get(&(d - d1, m - m1)) {
                        acc -= &f.mul_ref(gc);
                    }
                }
                g.add_term(d, m, &acc);
            }
        }
        g
    }
}
