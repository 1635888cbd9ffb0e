//! Graded virtual representations: Laurent polynomials in `t` whose
//! coefficients are Schur expansions.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;
use crate::poly::{IntPoly, LaurentPoly};
use crate::schur::SchurExpansion;

pub type GradedSchur = LaurentPoly<SchurExpansion>;

impl LaurentPoly<SchurExpansion> {
    /// `t^exp * s[lambda]`.
    pub fn schur_term(exp: i32, lambda: Partition) -> Self {
        Self::monomial(exp, SchurExpansion::schur(lambda))
    }

    /// Graded dimension.
    pub fn dimension(&self) -> IntPoly {
        IntPoly::from_terms(self.terms().map(|(e, c)| {
            let d = i64::try_from(c.dimension()).expect("dimension fits in i64");
            (e, d)
        }))
    }

    pub fn is_effective(&self) -> bool {
        self.terms().all(|(_, c)| c.is_effective())
    }

    /// First `(exponent, partition, multiplicity)` with a negative multiplicity.
    pub fn first_negative(&self) -> Option<(i32, Partition, i64)> {
        self.terms()
            .find_map(|(e, c)| c.first_negative().map(|(p, m)| (e, p.clone(), m)))
    }

    /// Apply `f` to every coefficient.
    pub fn map_schur(&self, mut f: impl FnMut(&SchurExpansion) -> SchurExpansion) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, f(c))))
    }

    /// Render as `s[4] + t*(s[3,1] + s[2,2])`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| {
                let var = match e {
                    0 => return c.to_text(),
                    1 => "t".to_string(),
                    _ => format!("t^{e}"),
                };
                if c.len() == 1 && c.terms().next().unwrap().1 == 1 {
                    format!("{var}*{}", c.to_text())
                } else {
                    format!("{var}*({})", c.to_text())
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| {
                let var = match e {
                    0 => return c.to_latex(),
                    1 => "t".to_string(),
                    _ => format!("t^{{{e}}}"),
                };
                if c.len() == 1 {
                    format!("{var}\\,{}", c.to_latex())
                } else {
                    format!("{var}\\left({}\\right)", c.to_latex())
                }
            })
            .collect();
        parts.join(" + ")
    }
}

#[derive(Serialize, Deserialize)]
struct GradedTerm {
    t: i32,
    value: SchurExpansion,
}

impl Serialize for GradedSchur {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<GradedTerm> = self.terms().map(|(t, c)| GradedTerm { t, value: c.clone() }).collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradedSchur {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<GradedTerm>::deserialize(deserializer)?;
        Ok(GradedSchur::from_terms(terms.into_iter().map(|x| (x.t, x.value))))
    }
}
