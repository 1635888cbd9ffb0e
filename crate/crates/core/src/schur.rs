//! Virtual symmetric functions in the Schur basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;
use crate::poly::RingCoeff;

/// A finite integer combination of Schur functions `s[lambda]`, i.e. the
/// Frobenius characteristic of a virtual representation. Zero multiplicities
/// are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    /// `s[lambda]`.
    pub fn schur(lambda: Partition) -> Self {
        Self::term(lambda, 1)
    }

    pub fn term(lambda: Partition, mult: i64) -> Self {
        let mut f = Self::new();
        f.add_term(lambda, mult);
        f
    }

    /// The unit `s[]` of the ring.
    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    /// `h_n = s[n]`, the trivial representation of `S_n`.
    pub fn h(n: usize) -> Self {
        Self::schur(Partition::row(n))
    }

    /// `e_n = s[1^n]`, the sign representation of `S_n`.
    pub fn e(n: usize) -> Self {
        Self::schur(Partition::column(n))
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, i64)>>(terms: I) -> Self {
        let mut f = Self::new();
        for (lambda, m) in terms {
            f.add_term(lambda, m);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, mult: i64) {
        if mult == 0 {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += mult;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(mult);
            }
        }
    }

    pub fn mult(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    /// Terms in output order (by degree, then colexicographic).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, i64)> + ExactSizeIterator {
        self.terms.iter().map(|(p, &m)| (p, m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff every multiplicity is nonnegative (an honest representation).
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&m| m >= 0)
    }

    /// First term with a negative multiplicity.
    pub fn first_negative(&self) -> Option<(&Partition, i64)> {
        self.terms().find(|(_, m)| *m < 0)
    }

    /// Common degree of all terms, if the expansion is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Partition::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Part of degree `n`.
    pub fn degree_part(&self, n: usize) -> SchurExpansion {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.degree() == n)
                .map(|(p, &m)| (p.clone(), m))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::degree).max()
    }

    /// Replace each `s[lambda]` by the dimension of `V[lambda]`.
    pub fn dimension(&self) -> i128 {
        self.terms.iter().map(|(p, &m)| m as i128 * p.dimension() as i128).sum()
    }

    pub fn scale(&self, k: i64) -> SchurExpansion {
        if k == 0 {
            return Self::new();
        }
        Self {
            terms: self.terms.iter().map(|(p, &m)| (p.clone(), m * k)).collect(),
        }
    }

    /// `self * h_k`.
    pub fn pieri_row(&self, k: usize) -> SchurExpansion {
        let mut out = SchurExpansion::new();
        for (lambda, m) in self.terms() {
            for nu in horizontal_strips(lambda, k) {
                out.add_term(nu, m);
            }
        }
        out
    }

    /// `self * e_k`.
    pub fn pieri_col(&self, k: usize) -> SchurExpansion {
        let mut out = SchurExpansion::new();
        for (lambda, m) in self.terms() {
            for nu in vertical_strips(lambda, k) {
                out.add_term(nu, m);
            }
        }
        out
    }

    /// Littlewood-Richardson product.
    pub fn multiply(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = SchurExpansion::new();
        for (a, ma) in self.terms() {
            for (b, mb) in other.terms() {
                for (nu, c) in schur_product(a, b).iter() {
                    out.add_term(nu.clone(), ma * mb * c);
                }
            }
        }
        out
    }

    /// Render as `s[4,2] + 2*s[3,3] - s[1]`.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (lambda, m)) in self.terms().enumerate() {
            let sign = if m < 0 { "-" } else { "+" };
            if i == 0 {
                if m < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if m.abs() != 1 {
                out.push_str(&format!("{}*", m.abs()));
            }
            out.push_str(&format!("s{lambda}"));
        }
        out
    }

    /// Render as `V[4,2]\oplus V[3,3]^{\oplus 2}`.
    pub fn to_latex(&self) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (lambda, m)) in self.terms().enumerate() {
            if i == 0 {
                if m < 0 {
                    out.push_str("\\ominus ");
                }
            } else if m < 0 {
                out.push_str("\\ominus ");
            } else {
                out.push_str("\\oplus ");
            }
            out.push_str(&format!("V{lambda}"));
            if m.abs() != 1 {
                out.push_str(&format!("^{{\\oplus {}}}", m.abs()));
            }
        }
        out
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Zero for SchurExpansion {
    fn zero() -> Self {
        Self::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for SchurExpansion {
    fn one() -> Self {
        SchurExpansion::one()
    }
}

impl AddAssign<&SchurExpansion> for SchurExpansion {
    fn add_assign(&mut self, rhs: &SchurExpansion) {
        for (p, &m) in &rhs.terms {
            self.add_term(p.clone(), m);
        }
    }
}

impl SubAssign<&SchurExpansion> for SchurExpansion {
    fn sub_assign(&mut self, rhs: &SchurExpansion) {
        for (p, &m) in &rhs.terms {
            self.add_term(p.clone(), -m);
        }
    }
}

impl Add for SchurExpansion {
    type Output = SchurExpansion;
    fn add(mut self, rhs: SchurExpansion) -> SchurExpansion {
        self += &rhs;
        self
    }
}

impl Sub for SchurExpansion {
    type Output = SchurExpansion;
    fn sub(mut self, rhs: SchurExpansion) -> SchurExpansion {
        self -= &rhs;
        self
    }
}

impl Add for &SchurExpansion {
    type Output = SchurExpansion;
    fn add(self, rhs: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SchurExpansion {
    type Output = SchurExpansion;
    fn sub(self, rhs: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for SchurExpansion {
    type Output = SchurExpansion;
    fn neg(self) -> SchurExpansion {
        Self {
            terms: self.terms.into_iter().map(|(p, m)| (p, -m)).collect(),
        }
    }
}

impl Mul for &SchurExpansion {
    type Output = SchurExpansion;
    fn mul(self, rhs: &SchurExpansion) -> SchurExpansion {
        self.multiply(rhs)
    }
}

impl Mul for SchurExpansion {
    type Output = SchurExpansion;
    fn mul(self, rhs: SchurExpansion) -> SchurExpansion {
        self.multiply(&rhs)
    }
}

impl RingCoeff for SchurExpansion {
    fn mul_ref(&self, other: &Self) -> Self {
        self.multiply(other)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    mult: i64,
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms()
            .map(|(p, m)| TermRepr {
                partition: p.clone(),
                mult: m,
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        Ok(SchurExpansion::from_terms(
            terms.into_iter().map(|t| (t.partition, t.mult)),
        ))
    }
}

/// All `nu` with `nu / lambda` a horizontal strip of size `k`.
pub fn horizontal_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    let rows = lambda.parts();
    let mut out = Vec::new();
    let mut shape: Vec<usize> = rows.to_vec();
    shape.push(0);
    strip_rows(rows, 0, k, &mut shape, &mut out);
    out
}

fn strip_rows(rows: &[usize], r: usize, rem: usize, shape: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        let parts: Vec<usize> = shape.iter().copied().filter(|&p| p > 0).collect();
        out.push(Partition::from_vec_unchecked(parts));
        return;
    }
    if r > rows.len() {
        return;
    }
    let cur = rows.get(r).copied().unwrap_or(0);
    let cap = if r == 0 { rem } else { rows[r - 1] - cur };
    for a in (0..=cap.min(rem)).rev() {
        shape[r] = cur + a;
        strip_rows(rows, r + 1, rem - a, shape, out);
    }
    shape[r] = cur;
}

/// All `nu` with `nu / lambda` a vertical strip of size `k`.
pub fn vertical_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    horizontal_strips(&lambda.conjugate(), k)
        .into_iter()
        .map(|nu| nu.conjugate())
        .collect()
}

/// Littlewood-Richardson coefficients of `s[lambda] * s[mu]`, by enumerating
/// LR tableaux of shape `nu / lambda` and content `mu`.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, i64> {
    let mut out = BTreeMap::new();
    let mut shape = lambda.parts().to_vec();
    let prev: Vec<usize> = Vec::new();
    add_letter(mu.parts(), 0, &mut shape, &prev, &mut out);
    out
}

/// Place `content[letter]` copies of `letter + 1` as a horizontal strip,
/// keeping the reverse reading word a lattice word. `prev[r]` is the number of
/// copies of the previous letter in row `r`.
fn add_letter(
    content: &[usize],
    letter: usize,
    shape: &mut Vec<usize>,
    prev: &[usize],
    out: &mut BTreeMap<Partition, i64>,
) {
    if letter == content.len() {
        let parts: Vec<usize> = shape.iter().copied().filter(|&p| p > 0).collect();
        *out.entry(Partition::from_vec_unchecked(parts)).or_insert(0) += 1;
        return;
    }
    let old = shape.clone();
    let mut added = vec![0usize; old.len() + 1];
    place_row(
        content,
        letter,
        &old,
        0,
        content[letter],
        0,
        0,
        prev,
        &mut added,
        shape,
        out,
    );
}

#[allow(clippy::too_many_arguments)]
fn place_row(
    content: &[usize],
    letter: usize,
    old: &[usize],
    r: usize,
    rem: usize,
    placed_above: usize,
    prev_above: usize,
    prev: &[usize],
    added: &mut Vec<usize>,
    shape: &mut Vec<usize>,
    out: &mut BTreeMap<Partition, i64>,
) {
    if rem == 0 {
        let mut new_shape: Vec<usize> = old.to_vec();
        new_shape.push(0);
        for (row, &a) in added.iter().enumerate() {
            new_shape[row] += a;
        }
        while new_shape.last() == Some(&0) {
            new_shape.pop();
        }
        let mut counts = added.clone();
        counts.truncate(new_shape.len());
        let saved = std::mem::replace(shape, new_shape);
        add_letter(content, letter + 1, shape, &counts, out);
        *shape = saved;
        return;
    }
    if r > old.len() {
        return;
    }
    let cur = old.get(r).copied().unwrap_or(0);
    let mut cap = if r == 0 { rem } else { old[r - 1] - cur };
    if letter > 0 {
        // Copies of this letter in rows <= r may not outnumber copies of the
        // previous letter in rows < r.
        cap = cap.min(prev_above.saturating_sub(placed_above));
        if prev_above < placed_above {
            return;
        }
    }
    let prev_here = prev.get(r).copied().unwrap_or(0);
    for a in (0..=cap.min(rem)).rev() {
        added[r] = a;
        place_row(
            content,
            letter,
            old,
            r + 1,
            rem - a,
            placed_above + a,
            prev_above + prev_here,
            prev,
            added,
            shape,
            out,
        );
    }
    added[r] = 0;
}

type ProductCache = Mutex<HashMap<(Partition, Partition), Arc<Vec<(Partition, i64)>>>>;

fn product_cache() -> &'static ProductCache {
    static CACHE: OnceLock<ProductCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `s[a] * s[b]` as a list of `(nu, c^nu_{a,b})`, cached.
pub fn schur_product(a: &Partition, b: &Partition) -> Arc<Vec<(Partition, i64)>> {
    let key = if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if let Some(hit) = product_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let (x, y) = (&key.0, &key.1);
    let terms: Vec<(Partition, i64)> = if x.is_empty() {
        vec![(y.clone(), 1)]
    } else if x.len() == 1 {
        horizontal_strips(y, x.degree()).into_iter().map(|nu| (nu, 1)).collect()
    } else if x.part(0) == 1 {
        vertical_strips(y, x.degree()).into_iter().map(|nu| (nu, 1)).collect()
    } else if y.len() == 1 {
        horizontal_strips(x, y.degree()).into_iter().map(|nu| (nu, 1)).collect()
    } else if y.part(0) == 1 {
        vertical_strips(x, y.degree()).into_iter().map(|nu| (nu, 1)).collect()
    } else {
        // Fewer letters is cheaper.
        let (base, content) = if x.len() <= y.len() { (y, x) } else { (x, y) };
        littlewood_richardson(base, content).into_iter().collect()
    };
    let terms = Arc::new(terms);
    product_cache().lock().unwrap().entry(key).or_insert(terms).clone()
}

/// Multiplicity-free sum of the given partitions.
pub fn sum_of(parts: &[&[usize]]) -> SchurExpansion {
    SchurExpansion::from_terms(
        parts
            .iter()
            .map(|q| (Partition::new(q.to_vec()).expect("partition"), 1)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    fn s(parts: &[usize]) -> SchurExpansion {
        SchurExpansion::schur(p(parts))
    }

    /// Number of semistandard tableaux of skew shape `nu / lambda` filled
    /// with a fixed content, by brute force over all fillings.
    fn skew_kostka(nu: &Partition, lambda: &Partition, content: &[usize]) -> usize {
        let mut cells = Vec::new();
        for r in 0..nu.len() {
            for c in lambda.part(r)..nu.part(r) {
                cells.push((r, c));
            }
        }
        let letters = content.len();
        let mut filling = vec![0usize; cells.len()];
        let mut count = 0;
        loop {
            let mut used = vec![0usize; letters];
            for &f in &filling {
                used[f] += 1;
            }
            if used == content {
                let at = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c)).map(|i| filling[i]);
                let ok = cells.iter().enumerate().all(|(i, &(r, c))| {
                    let v = filling[i];
                    let left = c.checked_sub(1).and_then(|cc| at(r, cc)).is_none_or(|w| w <= v);
                    let up = r.checked_sub(1).and_then(|rr| at(rr, c)).is_none_or(|w| w < v);
                    left && up
                });
                if ok {
                    count += 1;
                }
            }
            let mut i = 0;
            loop {
                if i == filling.len() {
                    return count;
                }
                filling[i] += 1;
                if filling[i] < letters {
                    break;
                }
                filling[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(s(&[1]).pieri_row(1), sum_of(&[&[2], &[1, 1]]));
        assert_eq!(s(&[2]).pieri_row(0), s(&[2]));
        assert_eq!(
            s(&[2, 1]).pieri_row(2),
            sum_of(&[&[4, 1], &[3, 2], &[3, 1, 1], &[2, 2, 1]])
        );
        assert_eq!(s(&[2]).pieri_col(2), sum_of(&[&[3, 1], &[2, 1, 1]]));
        assert_eq!(s(&[1, 1, 1]).pieri_col(1), sum_of(&[&[2, 1, 1], &[1, 1, 1, 1]]));
    }

    #[test]
    fn pieri_row_matches_tableau_count() {
        // s[2,1] h_2: each nu appears K_{nu/lambda,(2)} times.
        let lambda = p(&[2, 1]);
        for (nu, c) in s(&[2, 1]).pieri_row(2).terms() {
            assert_eq!(skew_kostka(nu, &lambda, &[2]) as i64, c);
        }
    }

    #[test]
    fn lr_examples() {
        assert_eq!(&s(&[1]) * &s(&[1]), sum_of(&[&[2], &[1, 1]]));
        assert_eq!(&s(&[2]) * &s(&[3]), sum_of(&[&[5], &[4, 1], &[3, 2]]));
        let mut expected = sum_of(&[&[4, 2], &[4, 1, 1], &[3, 3], &[3, 1, 1, 1], &[2, 2, 2], &[2, 2, 1, 1]]);
        expected.add_term(p(&[3, 2, 1]), 2);
        assert_eq!(&s(&[2, 1]) * &s(&[2, 1]), expected);
    }

    #[test]
    fn lr_agrees_with_jacobi_trudi_on_hooks() {
        // s[2,1] = h_2 h_1 - h_3, so s[lambda] s[2,1] = (s[lambda] h_1) h_2 - s[lambda] h_3.
        for lambda in crate::partition::partitions_of(5) {
            let f = SchurExpansion::schur(lambda.clone());
            let via_pieri = f.pieri_row(1).pieri_row(2) - f.pieri_row(3);
            assert_eq!(&f * &s(&[2, 1]), via_pieri, "lambda = {lambda}");
        }
    }

    #[test]
    fn json_schema() {
        let f = s(&[2, 1]) + s(&[3]).scale(-2);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"[{"partition":[2,1],"mult":1},{"partition":[3],"mult":-2}]"#);
        let back: SchurExpansion = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn rendering() {
        let f = sum_of(&[&[4, 2], &[3, 3]]);
        assert_eq!(f.to_text(), "s[4,2] + s[3,3]");
        assert_eq!(f.to_latex(), "V[4,2]\\oplus V[3,3]");
        assert_eq!((s(&[2]) - s(&[1, 1]).scale(2)).to_text(), "-2*s[1,1] + s[2]");
    }
}
