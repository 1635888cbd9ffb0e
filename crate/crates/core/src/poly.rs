//! Sparse Laurent polynomials in one variable `t` over an arbitrary
//! coefficient ring.
//!
//! The same container carries integer polynomials (characteristic and
//! Kazhdan-Lusztig polynomials of matroids), rational polynomials (series
//! coefficients) and graded symmetric functions, where each coefficient is a
//! [`SchurExpansion`](crate::SchurExpansion).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Additive group structure needed by [`LaurentPoly`].
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + Zero + Neg<Output = Self> + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + Neg<Output = Self>
        + for<'a> AddAssign<&'a Self>
        + for<'a> SubAssign<&'a Self>
{
}

/// Coefficients that can also be multiplied.
pub trait RingCoeff: Coeff {
    fn mul_ref(&self, other: &Self) -> Self;
}

macro_rules! ring_coeff_prim {
    ($($t:ty),*) => {$(
        impl RingCoeff for $t {
            fn mul_ref(&self, other: &Self) -> Self {
                self * other
            }
        }
    )*};
}

ring_coeff_prim!(i64, i128, BigInt, BigRational);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i32, C>,
}

pub type IntPoly = LaurentPoly<i64>;
pub type RatPoly = LaurentPoly<BigRational>;

impl<C> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: i32, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, &c);
        p
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// Coefficients `c[0] + c[1] t + c[2] t^2 + ...`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| (i as i32, c)))
    }

    pub fn add_term(&mut self, exp: i32, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `t^exp` (zero when absent).
    pub fn coeff(&self, exp: i32) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff_ref(&self, exp: i32) -> Option<&C> {
        self.terms.get(&exp)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &C)> + ExactSizeIterator {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (i32, C)> {
        self.terms.into_iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// `t^d f(1/t)`.
    pub fn reverse(&self, d: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (d - e, c.clone())).collect(),
        }
    }

    /// `t^k f(t)`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `f(t^r)` for `r >= 1`.
    pub fn substitute_power(&self, r: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e * r, c.clone())).collect(),
        }
    }

    /// Sum of all coefficients, i.e. `f(1)`.
    pub fn eval_at_one(&self) -> C {
        let mut acc = C::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(&e, c)| (e, f(c))))
    }

    pub fn scale_by(&self, k: &C) -> Self
    where
        C: RingCoeff,
    {
        self.map_coeffs(|c| c.mul_ref(k))
    }
}

impl<C: RingCoeff + One> LaurentPoly<C> {
    pub fn one() -> Self {
        Self::constant(C::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, C::one())
    }
}

impl<C: RingCoeff> LaurentPoly<C> {
    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, &c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self
    where
        C: One,
    {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

impl<C: Coeff> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coeff> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<C: Coeff> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, &-c.clone());
        }
    }
}

impl<C: Coeff> Add for LaurentPoly<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<C: Coeff> Sub for LaurentPoly<C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: RingCoeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        self.mul_ref(rhs)
    }
}

impl<C: RingCoeff> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        self.mul_ref(&rhs)
    }
}

impl<C: RingCoeff> RingCoeff for LaurentPoly<C> {
    fn mul_ref(&self, other: &Self) -> Self {
        LaurentPoly::mul_ref(self, other)
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl IntPoly {
    /// `(t - 1)(t - 2)...(t - k)`.
    pub fn falling_from_one(k: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        for j in 1..=k as i64 {
            acc = acc.mul_ref(&IntPoly::from_terms([(1, 1), (0, -j)]));
        }
        acc
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map_coeffs(|&c| BigRational::from_integer(BigInt::from(c)))
    }

    /// Human-readable form, e.g. `t^3 - 6t^2 + 11t - 6`.
    pub fn render(&self, descending: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<(i32, i64)> = if descending {
            self.terms().rev().map(|(e, &c)| (e, c)).collect()
        } else {
            self.terms().map(|(e, &c)| (e, c)).collect()
        };
        let mut out = String::new();
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let mag = c.unsigned_abs();
            if idx == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if var.is_empty() || mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push_str(&var);
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

#[derive(Serialize, Deserialize)]
struct IntTerm {
    t: i32,
    coeff: i64,
}

/// JSON: `[{"t": 0, "coeff": 1}, {"t": 1, "coeff": 1}]`, sorted by `t`.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<IntTerm> = self.terms().map(|(t, &coeff)| IntTerm { t, coeff }).collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<IntTerm>::deserialize(deserializer)?;
        Ok(IntPoly::from_terms(terms.into_iter().map(|x| (x.t, x.coeff))))
    }
}

/// Exact rational from an integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact rational `num / den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
