//! Irreducible characters of symmetric groups via the Murnaghan-Nakayama rule.
//!
//! Tables are built one degree at a time: removing a border strip of length
//! `rho[0]` from `lambda` lands in the table of degree `n - rho[0]`, which is
//! built (and cached) first.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::partition::{partitions_of, Partition};

#[derive(Debug)]
pub struct CharTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// Row-major: `values[lambda * len + rho]`.
    values: Vec<i64>,
    centralizers: Vec<u128>,
}

impl CharTable {
    pub fn degree(&self) -> usize {
        self.n
    }

    /// Partitions of `n` in the order used for rows and columns.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn value_at(&self, lambda: usize, rho: usize) -> i64 {
        self.values[lambda * self.partitions.len() + rho]
    }

    /// `chi^lambda(rho)`. Panics if either is not a partition of `n`.
    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.value_at(self.index[lambda], self.index[rho])
    }

    pub fn row(&self, lambda: usize) -> &[i64] {
        let len = self.partitions.len();
        &self.values[lambda * len..(lambda + 1) * len]
    }

    pub fn centralizer(&self, rho: usize) -> u128 {
        self.centralizers[rho]
    }

    fn build(n: usize) -> CharTable {
        let partitions = partitions_of(n);
        let index: HashMap<Partition, usize> = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let len = partitions.len();
        let mut values = vec![0i64; len * len];
        if n == 0 {
            values[0] = 1;
        } else {
            for (ri, rho) in partitions.iter().enumerate() {
                let r = rho.part(0);
                let rest = Partition::from_vec_unchecked(rho.parts()[1..].to_vec());
                let sub = table(n - r);
                let sub_rho = sub.index[&rest];
                for (li, lambda) in partitions.iter().enumerate() {
                    let mut acc = 0i64;
                    for (smaller, sign) in remove_border_strips(lambda, r) {
                        acc += sign * sub.value_at(sub.index[&smaller], sub_rho);
                    }
                    values[li * len + ri] = acc;
                }
            }
        }
        let centralizers = partitions.iter().map(Partition::centralizer_size).collect();
        CharTable {
            n,
            partitions,
            index,
            values,
            centralizers,
        }
    }
}

/// All ways to remove a border strip of size `r` from `lambda`, with the sign
/// `(-1)^(height)` of each strip.
pub fn remove_border_strips(lambda: &Partition, r: usize) -> Vec<(Partition, i64)> {
    // Beta-numbers: first-column hook lengths of lambda (padded by one row so
    // that 0 is always available).
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + (len - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_vec_unchecked(parts), sign));
    }
    out
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<CharTable>>> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<CharTable>>>> = OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Character table of `S_n`, cached for the life of the process.
pub fn table(n: usize) -> Arc<CharTable> {
    if let Some(t) = cache().lock().unwrap().get(&n) {
        return t.clone();
    }
    // Built outside the lock: construction recurses into smaller tables.
    // Concurrent builders produce identical tables, so the first insert wins.
    let built = Arc::new(CharTable::build(n));
    cache().lock().unwrap().entry(n).or_insert(built).clone()
}

/// `chi^lambda(rho)` for partitions of the same size.
pub fn character(lambda: &Partition, rho: &Partition) -> i64 {
    assert_eq!(lambda.degree(), rho.degree(), "character of mismatched degrees");
    table(lambda.degree()).value(lambda, rho)
}
