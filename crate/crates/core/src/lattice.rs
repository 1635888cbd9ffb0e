//! Lattices of flats, Möbius functions, characteristic and
//! Kazhdan-Lusztig polynomials of arbitrary matroids.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::kl::{coefficient_recursion, palindromic_solve, CoefficientData};
use crate::matroid::{bits, Matroid};
use crate::poly::IntPoly;
use crate::report::Report;

pub const DEFAULT_GROUND_LIMIT: usize = 16;

#[derive(Debug)]
pub struct FlatLattice {
    flats: Vec<u64>,
    ranks: Vec<usize>,
    rank: usize,
    index: HashMap<u64, usize>,
    loops: bool,
    mobius_bottom: Vec<i64>,
    /// For each flat `F`: `(H, mu(F, H))` over all `H >= F`, by index.
    upper: OnceLock<Vec<Vec<(usize, i64)>>>,
}

/// Characteristic polynomial with a flag for matroids with loops, where it
/// is zero by convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub poly: IntPoly,
    pub has_loops: bool,
}

impl FlatLattice {
    pub fn new(m: &Matroid) -> Result<Self> {
        Self::with_limit(m, DEFAULT_GROUND_LIMIT)
    }

    pub fn with_limit(m: &Matroid, limit: usize) -> Result<Self> {
        if m.size() > limit {
            return Err(Error::LimitExceeded {
                what: "ground set",
                value: m.size(),
                limit,
            });
        }
        let bottom = m.closure(0);
        let mut levels: Vec<Vec<u64>> = vec![vec![bottom]];
        for _ in 0..m.rank() {
            let mut next: HashSet<u64> = HashSet::new();
            for &f in levels.last().unwrap() {
                let mut rest = m.full_mask() & !f;
                while rest != 0 {
                    let e = rest.trailing_zeros();
                    let g = m.closure(f | (1 << e));
                    rest &= !g;
                    next.insert(g);
                }
            }
            let mut level: Vec<u64> = next.into_iter().collect();
            level.sort_by_key(|&f| bits(f).collect::<Vec<_>>());
            levels.push(level);
        }
        let mut flats = Vec::new();
        let mut ranks = Vec::new();
        for (r, level) in levels.into_iter().enumerate() {
            for f in level {
                flats.push(f);
                ranks.push(r);
            }
        }
        let index = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut lattice = Self {
            flats,
            ranks,
            rank: m.rank(),
            index,
            loops: bottom != 0,
            mobius_bottom: Vec::new(),
            upper: OnceLock::new(),
        };
        lattice.mobius_bottom = lattice.mobius_from(0).into_iter().map(|(_, mu)| mu).collect();
        Ok(lattice)
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Flats as bitmasks, by rank and then lexicographically.
    pub fn flats(&self) -> &[u64] {
        &self.flats
    }

    pub fn rank_of(&self, idx: usize) -> usize {
        self.ranks[idx]
    }

    pub fn index_of(&self, flat: u64) -> Option<usize> {
        self.index.get(&flat).copied()
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.flats[a] & !self.flats[b] == 0
    }

    pub fn mobius_bottom(&self, idx: usize) -> i64 {
        self.mobius_bottom[idx]
    }

    /// `mu(F, 1)`.
    pub fn mobius_top(&self, idx: usize) -> i64 {
        let top = self.top();
        self.upper_mobius()[idx]
            .iter()
            .find(|(h, _)| *h == top)
            .map(|&(_, mu)| mu)
            .unwrap_or(0)
    }

    /// `(H, mu(F, H))` for every `H >= F`, in index order. Indices below `F`
    /// are skipped; the list is dense only for `F = bottom`.
    fn mobius_from(&self, f: usize) -> Vec<(usize, i64)> {
        let up: Vec<usize> = (f..self.flats.len()).filter(|&h| self.leq(f, h)).collect();
        let mut mu: Vec<i64> = Vec::with_capacity(up.len());
        for (a, &h) in up.iter().enumerate() {
            if a == 0 {
                mu.push(1);
                continue;
            }
            let mut s = 0;
            for (b, &k) in up[..a].iter().enumerate() {
                if self.ranks[k] < self.ranks[h] && self.leq(k, h) {
                    s += mu[b];
                }
            }
            mu.push(-s);
        }
        up.into_iter().zip(mu).collect()
    }

    fn upper_mobius(&self) -> &Vec<Vec<(usize, i64)>> {
        self.upper
            .get_or_init(|| (0..self.flats.len()).map(|f| self.mobius_from(f)).collect())
    }

    /// `chi_M(t) = sum_F mu(0, F) t^{crk F}`.
    pub fn characteristic_polynomial(&self) -> CharPoly {
        if self.loops {
            return CharPoly {
                poly: IntPoly::zero(),
                has_loops: true,
            };
        }
        let poly = IntPoly::from_terms(
            self.mobius_bottom
                .iter()
                .zip(&self.ranks)
                .map(|(&mu, &r)| ((self.rank - r) as i32, mu)),
        );
        CharPoly { poly, has_loops: false }
    }

    /// `chi_{M^F}(t) = sum_{G >= F} mu(F, G) t^{rk M - rk G}`.
    pub fn upper_characteristic(&self, f: usize) -> IntPoly {
        IntPoly::from_terms(
            self.upper_mobius()[f]
                .iter()
                .map(|&(g, mu)| ((self.rank - self.ranks[g]) as i32, mu)),
        )
    }

    /// `chi_{M_F}(t) = sum_{K <= F} mu(0, K) t^{rk F - rk K}`.
    pub fn lower_characteristic(&self, f: usize) -> IntPoly {
        IntPoly::from_terms(
            (0..=f)
                .filter(|&k| self.leq(k, f))
                .map(|k| ((self.ranks[f] - self.ranks[k]) as i32, self.mobius_bottom[k])),
        )
    }

    /// `P_{M^F}` for every flat `F`, by index.
    ///
    /// With `S_H = sum_{G >= H} t^{rk G} P_{M^G}`, the defining recursion for
    /// `M^F` reads `t^{crk F} P(1/t) - P = t^{-rk F} (S_F - t^{rk F} P) +
    /// sum_{H > F} mu(F, H) t^{-rk H} S_H`, so a sweep from the top computes
    /// every upper interval at once.
    pub fn kl_upper(&self) -> Result<Vec<IntPoly>> {
        let n = self.flats.len();
        let upper = self.upper_mobius();
        let mut p: Vec<IntPoly> = vec![IntPoly::zero(); n];
        let mut s: Vec<IntPoly> = vec![IntPoly::zero(); n];
        for f in (0..n).rev() {
            let rk_f = self.ranks[f] as i32;
            let crk = self.rank as i32 - rk_f;
            let mut strict = IntPoly::zero();
            let mut r = IntPoly::zero();
            for &(h, mu) in &upper[f] {
                if h == f {
                    continue;
                }
                strict += &p[h].shift(self.ranks[h] as i32);
                if mu != 0 {
                    let term = s[h].shift(-(self.ranks[h] as i32));
                    r += &term.scale_by(&mu);
                }
            }
            r += &strict.shift(-rk_f);
            p[f] = if crk == 0 {
                IntPoly::one()
            } else {
                palindromic_solve(crk, &r)?
            };
            s[f] = &strict + &p[f].shift(rk_f);
        }
        Ok(p)
    }

    pub fn kl_polynomial(&self) -> Result<IntPoly> {
        Ok(self.kl_upper()?.swap_remove(0))
    }
}

pub fn characteristic_polynomial(m: &Matroid) -> Result<CharPoly> {
    Ok(FlatLattice::new(m)?.characteristic_polynomial())
}

pub fn kl_polynomial(m: &Matroid) -> Result<IntPoly> {
    FlatLattice::new(m)?.kl_polynomial()
}

/// Trivial-group instance of the coefficient recursion: one orbit per flat.
struct TrivialGroup<'a> {
    lattice: &'a FlatLattice,
    upper_kl: &'a [IntPoly],
    /// `|OS_{M_F, j}|`, per flat and degree.
    os: Vec<Vec<i64>>,
}

impl<'a> TrivialGroup<'a> {
    fn new(lattice: &'a FlatLattice, upper_kl: &'a [IntPoly]) -> Self {
        let os = (0..lattice.len())
            .map(|f| {
                let chi = lattice.lower_characteristic(f);
                let rk = lattice.rank_of(f) as i32;
                (0..=rk).map(|j| chi.coeff(rk - j).abs()).collect()
            })
            .collect();
        Self { lattice, upper_kl, os }
    }
}

impl CoefficientData for TrivialGroup<'_> {
    type Coeff = i64;

    fn rank(&self) -> usize {
        self.lattice.rank()
    }

    fn orbit_ranks(&self) -> Vec<usize> {
        (0..self.lattice.len()).map(|f| self.lattice.rank_of(f)).collect()
    }

    fn induced(&self, orbit: usize, j: usize, l: usize) -> Result<i64> {
        Ok(self.os[orbit][j] * self.upper_kl[orbit].coeff(l as i32))
    }
}

/// Nonequivariant identities on the lattice of flats.
pub fn lattice_identity_checks(m: &Matroid, limit: usize) -> Result<Report> {
    let lattice = FlatLattice::with_limit(m, limit)?;
    let rank = lattice.rank();
    let mut report = Report::new(format!("lattice identities (rank {rank}, {} flats)", lattice.len()));

    // Every f < g two or more ranks apart has an intermediate flat one rank up.
    let n = lattice.len();
    let next: Vec<Vec<usize>> = (0..n)
        .map(|f| {
            (f + 1..n)
                .filter(|&h| lattice.rank_of(h) == lattice.rank_of(f) + 1 && lattice.leq(f, h))
                .collect()
        })
        .collect();
    let graded = (0..n).all(|f| {
        (f + 1..n).all(|g| {
            !(lattice.leq(f, g) && lattice.rank_of(g) > lattice.rank_of(f) + 1)
                || next[f].iter().any(|&h| lattice.leq(h, g))
        })
    });
    report.push("graded", graded, "a cover skips a rank");

    if rank > 0 {
        let bottom: i64 = (0..lattice.len()).map(|f| lattice.mobius_bottom(f)).sum();
        report.push("sum mu(0,F) = 0", bottom == 0, format!("sum is {bottom}"));
        let top: i64 = (0..lattice.len()).map(|f| lattice.mobius_top(f)).sum();
        report.push("sum mu(F,1) = 0", top == 0, format!("sum is {top}"));
    }

    let mut total = IntPoly::zero();
    for f in 0..lattice.len() {
        total += &lattice.upper_characteristic(f);
    }
    let expected = IntPoly::monomial(rank as i32, 1);
    report.push(
        "sum_F chi(M^F) = t^rk",
        total == expected,
        format!("got {}", total.render(true)),
    );

    let chi = lattice.characteristic_polynomial();
    if !chi.has_loops && rank > 0 {
        let at_one: i64 = chi.poly.terms().map(|(_, &c)| c).sum();
        report.push("chi(1) = 0", at_one == 0, format!("chi(1) = {at_one}"));
    }

    match lattice.kl_upper() {
        Err(e) => report.push("KL recursion solvable", false, e.to_string()),
        Ok(upper) => {
            report.push("KL recursion solvable", true, "");
            let p = &upper[0];
            let degree_ok = rank == 0 || p.max_exp().is_none_or(|e| 2 * e < rank as i32);
            report.push("deg P < rk/2", degree_ok, format!("P = {p}"));
            report.push("P(0) = 1", p.coeff(0) == 1, format!("P = {p}"));
            let data = TrivialGroup::new(&lattice, &upper);
            let mut agree = Ok(());
            for i in 0..rank.div_ceil(2).max(1) {
                let c = coefficient_recursion(&data, i)?;
                if c != p.coeff(i as i32) {
                    agree = Err(format!(
                        "coefficient {i}: recursion gives {c}, lattice sweep {}",
                        p.coeff(i as i32)
                    ));
                    break;
                }
            }
            report.record("coefficient recursion", agree);
        }
    }
    Ok(report)
}
