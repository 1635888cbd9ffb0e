//! Equivariant characteristic and KL polynomials against explicit
//! Orlik-Solomon algebras: traces of permutations on `E^i / I^i`, computed by
//! row reduction modulo a large prime, feed a character-valued version of
//! the KL recursion over the fixed flats of each permutation.

use std::collections::HashMap;

use eqkl::characters::table;
use eqkl::kronecker::ClassFunction;
use eqkl::{braid, uniform, GradedSchur, Partition};

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn signed(x: u64) -> i64 {
    if x > P / 2 {
        -((P - x) as i64)
    } else {
        x as i64
    }
}

fn from_sign(s: i64) -> u64 {
    if s < 0 {
        P - 1
    } else {
        1
    }
}

/// Row-reduced basis of a subspace of `F_P^cols`.
struct Echelon {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new() -> Self {
        Self {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn insert(&mut self, mut v: Vec<u64>) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = (*x + P - mulmod(c, *y)) % P;
                }
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return;
        };
        let inv = powmod(v[pivot], P - 2);
        for x in v.iter_mut() {
            *x = mulmod(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[pivot];
            if c != 0 {
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = (*x + P - mulmod(c, *y)) % P;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(pivot);
    }
}

/// A matroid on `0..n` given by its rank function.
struct Ranked {
    n: usize,
    rank: Vec<usize>,
}

impl Ranked {
    fn new(n: usize, rank: impl Fn(u64) -> usize) -> Self {
        Self {
            n,
            rank: (0..1u64 << n).map(rank).collect(),
        }
    }

    fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    fn r(&self, s: u64) -> usize {
        self.rank[s as usize]
    }

    fn is_flat(&self, s: u64) -> bool {
        (0..self.n).all(|e| s >> e & 1 == 1 || self.r(s | 1 << e) > self.r(s))
    }

    fn circuits(&self) -> Vec<u64> {
        (1..=self.full())
            .filter(|&s| {
                let k = s.count_ones() as usize;
                self.r(s) < k
                    && (0..self.n)
                        .filter(|e| s >> e & 1 == 1)
                        .all(|e| self.r(s & !(1 << e)) == k - 1)
            })
            .collect()
    }

    /// The interval `[f, g]` of flats as a matroid on `g \ f`.
    fn interval(&self, f: u64, g: u64) -> (Ranked, Vec<usize>) {
        let elems: Vec<usize> = (0..self.n).filter(|&e| g >> e & 1 == 1 && f >> e & 1 == 0).collect();
        let lift = |s: u64| -> u64 {
            elems
                .iter()
                .enumerate()
                .filter(|(i, _)| s >> i & 1 == 1)
                .map(|(_, &e)| 1u64 << e)
                .sum()
        };
        let base = self.r(f);
        (Ranked::new(elems.len(), |s| self.r(lift(s) | f) - base), elems)
    }
}

fn elements(s: u64) -> Vec<usize> {
    (0..64).filter(|&e| s >> e & 1 == 1).collect()
}

/// Sign of the permutation sorting `seq`.
fn sort_sign(seq: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// `sigma(e_S) = sign * e_{sigma S}`.
fn act(sigma: &[usize], s: u64) -> (i64, u64) {
    let image: Vec<usize> = elements(s).iter().map(|&e| sigma[e]).collect();
    (sort_sign(&image), image.iter().map(|&e| 1u64 << e).sum())
}

/// Traces of `sigma` on each graded piece of the Orlik-Solomon algebra.
fn os_traces(m: &Ranked, sigma: &[usize]) -> Vec<i64> {
    let circuits = m.circuits();
    let r = m.r(m.full());
    let mut out = Vec::with_capacity(r + 1);
    for i in 0..=r {
        let basis: Vec<u64> = (0..=m.full()).filter(|s| s.count_ones() as usize == i).collect();
        let index: HashMap<u64, usize> = basis.iter().enumerate().map(|(k, &s)| (s, k)).collect();

        let mut ideal = Echelon::new();
        for &c in &circuits {
            let c_elems = elements(c);
            if c_elems.len() - 1 > i {
                continue;
            }
            let extra = i + 1 - c_elems.len();
            let fronts: Vec<u64> = (0..=m.full()).filter(|s| s.count_ones() as usize == extra).collect();
            for t in fronts {
                let mut v = vec![0u64; basis.len()];
                for (j, &x) in c_elems.iter().enumerate() {
                    let s = c & !(1 << x);
                    if t & s != 0 {
                        continue;
                    }
                    let mut seq = elements(t);
                    seq.extend(elements(s));
                    let sign = sort_sign(&seq) * if j % 2 == 0 { 1 } else { -1 };
                    let k = index[&(t | s)];
                    v[k] = (v[k] + from_sign(sign)) % P;
                }
                ideal.insert(v);
            }
        }

        let mut trace_exterior = 0i64;
        for &s in &basis {
            let (sign, image) = act(sigma, s);
            if image == s {
                trace_exterior += sign;
            }
        }
        let mut trace_ideal = 0u64;
        for (row, &pivot) in ideal.rows.iter().zip(&ideal.pivots) {
            // Coefficient of e_{basis[pivot]} in sigma(row).
            for (k, &c) in row.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (sign, image) = act(sigma, basis[k]);
                if image == basis[pivot] {
                    trace_ideal = (trace_ideal + mulmod(c, from_sign(sign))) % P;
                }
            }
        }
        out.push(trace_exterior - signed(trace_ideal));
    }
    out
}

/// `H(sigma)(t) = sum_i (-1)^i tr(sigma | OS_i) t^{r-i}`, ascending in `t`.
fn char_values(m: &Ranked, sigma: &[usize]) -> Vec<i64> {
    let traces = os_traces(m, sigma);
    let r = traces.len() - 1;
    let mut out = vec![0; r + 1];
    for (i, tr) in traces.into_iter().enumerate() {
        out[r - i] = if i % 2 == 0 { tr } else { -tr };
    }
    out
}

fn restrict_perm(sigma: &[usize], elems: &[usize]) -> Vec<usize> {
    let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    elems.iter().map(|e| pos[&sigma[*e]]).collect()
}

/// `P_M(sigma)` from `t^r P(1/t) - P = sum_{F != 0, sigma F = F} H_{M_F}(sigma) P_{M^F}(sigma)`,
/// applied to every upper interval of `sigma`-stable flats.
fn kl_values(m: &Ranked, sigma: &[usize]) -> Vec<i64> {
    let stable = |s: u64| act(sigma, s).1 == s;
    let mut flats: Vec<u64> = (0..=m.full()).filter(|&s| m.is_flat(s) && stable(s)).collect();
    flats.sort_by_key(|&f| std::cmp::Reverse(m.r(f)));
    let top = m.full();
    let mut p: HashMap<u64, Vec<i64>> = HashMap::new();
    for &f in &flats {
        let r = m.r(top) - m.r(f);
        if r == 0 {
            p.insert(f, vec![1]);
            continue;
        }
        let mut rhs = vec![0i64; r + 1];
        for &g in &flats {
            if g == f || f & !g != 0 {
                continue;
            }
            let (minor, elems) = m.interval(f, g);
            let h = char_values(&minor, &restrict_perm(sigma, &elems));
            for (a, x) in h.iter().enumerate() {
                for (b, y) in p[&g].iter().enumerate() {
                    rhs[a + b] += x * y;
                }
            }
        }
        let poly: Vec<i64> = (0..r.div_ceil(2)).map(|i| -rhs[i]).collect();
        let mut check = vec![0; r + 1];
        for (i, &c) in poly.iter().enumerate() {
            check[r - i] += c;
            check[i] -= c;
        }
        assert_eq!(check, rhs, "character-valued recursion is not antipalindromic");
        p.insert(f, poly);
    }
    p.remove(&(0..=top).find(|&s| m.is_flat(s)).unwrap()).unwrap()
}

/// A permutation of `0..n` with cycle type `rho`.
fn permutation(rho: &Partition) -> Vec<usize> {
    let mut sigma = Vec::new();
    let mut start = 0;
    for &len in rho.parts() {
        for k in 0..len {
            sigma.push(start + (k + 1) % len);
        }
        start += len;
    }
    sigma
}

fn edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn braid_ranked(n: usize) -> Ranked {
    let es = edges(n);
    Ranked::new(es.len(), |s| {
        let mut comp: Vec<usize> = (0..n).collect();
        let mut r = 0;
        for (k, &(a, b)) in es.iter().enumerate() {
            if s >> k & 1 == 1 && comp[a] != comp[b] {
                let (old, new) = (comp[a], comp[b]);
                comp.iter_mut().filter(|c| **c == old).for_each(|c| *c = new);
                r += 1;
            }
        }
        r
    })
}

/// A vertex permutation acting on the edges of `K_n`.
fn edge_permutation(n: usize, sigma: &[usize]) -> Vec<usize> {
    let es = edges(n);
    let pos: HashMap<(usize, usize), usize> = es.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    es.iter()
        .map(|&(a, b)| {
            let (x, y) = (sigma[a], sigma[b]);
            pos[&(x.min(y), x.max(y))]
        })
        .collect()
}

/// Value at class `rho` of each coefficient of `f`, as a polynomial in `t`.
fn class_values(f: &GradedSchur, n: usize, rho: &Partition, len: usize) -> Vec<i64> {
    let idx = table(n).index_of(rho).unwrap();
    (0..len)
        .map(|i| ClassFunction::of(&f.coeff(i as i32), n).values[idx] as i64)
        .collect()
}

#[test]
fn os_pieces_of_uniform_matroids() {
    for total in 2..=6 {
        for d in 1..=total {
            let m = total - d;
            let ranked = Ranked::new(total, |s| (s.count_ones() as usize).min(d));
            for rho in eqkl::partition::partitions_of(total) {
                let traces = os_traces(&ranked, &permutation(&rho));
                let idx = table(total).index_of(&rho).unwrap();
                for (i, &tr) in traces.iter().enumerate() {
                    let ours = ClassFunction::of(&uniform::os_uniform(m, d, i).unwrap(), total).values[idx];
                    assert_eq!(ours as i64, tr, "OS_{i}(U({m},{d})) at {rho}");
                }
            }
        }
    }
    let expected = eqkl::SchurExpansion::schur(eqkl::partition::p(&[2, 1])) + eqkl::SchurExpansion::h(3);
    assert_eq!(uniform::os_uniform(1, 2, 1).unwrap(), expected);
}

#[test]
fn uniform_characteristic_and_kl_values() {
    for (m, d) in [(1, 2), (2, 3), (0, 4), (2, 4), (1, 4), (3, 3), (1, 5)] {
        let n = m + d;
        let ranked = Ranked::new(n, |s| (s.count_ones() as usize).min(d));
        let h = uniform::char_poly_uniform(m, d);
        let kl = uniform::kl_uniform_recursive(m, d).unwrap();
        for rho in eqkl::partition::partitions_of(n) {
            let sigma = permutation(&rho);
            assert_eq!(
                class_values(&h, n, &rho, d + 1),
                char_values(&ranked, &sigma),
                "H({m},{d}) at {rho}"
            );
            let want = kl_values(&ranked, &sigma);
            assert_eq!(class_values(&kl, n, &rho, want.len()), want, "P({m},{d}) at {rho}");
        }
    }
}

#[test]
fn braid_characteristic_and_kl_values() {
    for n in 2..=6 {
        let ranked = braid_ranked(n);
        let k = braid::char_poly_braid(n).unwrap();
        let q = braid::kl_braid(n).unwrap();
        for rho in eqkl::partition::partitions_of(n) {
            let sigma = edge_permutation(n, &permutation(&rho));
            assert_eq!(
                class_values(&k, n, &rho, n),
                char_values(&ranked, &sigma),
                "K_{n} at {rho}"
            );
            let want = kl_values(&ranked, &sigma);
            assert_eq!(class_values(&q, n, &rho, want.len()), want, "Q_{n} at {rho}");
        }
    }
}

#[test]
fn uniform_coefficient_by_hand() {
    // [t^1] P of U(2,4): the oracle character decomposes as s[3]s[3] - s[6] - s[5,1].
    let ranked = Ranked::new(6, |s| (s.count_ones() as usize).min(4));
    let mut values = ClassFunction::zero(6);
    for (idx, rho) in table(6).partitions().iter().enumerate() {
        values.values[idx] = kl_values(&ranked, &permutation(rho))[1] as i128;
    }
    let h3 = eqkl::SchurExpansion::h(3);
    let expected =
        h3.multiply(&h3) - eqkl::SchurExpansion::h(6) - eqkl::SchurExpansion::schur(eqkl::partition::p(&[5, 1]));
    assert_eq!(values.decompose().unwrap(), expected);
    assert_eq!(uniform::kl_uniform_recursive(2, 4).unwrap().coeff(1), expected);
}
