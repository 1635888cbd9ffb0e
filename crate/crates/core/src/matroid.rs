//! Matroids on at most 64 elements, given by a rank oracle.

use std::collections::HashSet;
use std::sync::Arc;

use serde::Deserialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
enum Oracle {
    Uniform {
        d: usize,
    },
    Graphic {
        edges: Vec<(usize, usize)>,
    },
    Bases(Vec<u64>),
    /// Ground set `map` of the parent, with `contracted` contracted.
    Minor {
        parent: Arc<Matroid>,
        map: Vec<usize>,
        contracted: u64,
    },
}

#[derive(Clone, Debug)]
pub struct Matroid {
    labels: Vec<usize>,
    oracle: Oracle,
    rank: usize,
}

/// JSON input.
#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum MatroidSpec {
    Bases { ground: Vec<usize>, bases: Vec<Vec<usize>> },
    Graph { edges: Vec<(usize, usize)> },
    Uniform { m: usize, d: usize },
}

pub const MAX_GROUND: usize = 64;

impl Matroid {
    /// `U_{m,d}`: rank `d` on `m + d` elements.
    pub fn uniform(m: usize, d: usize) -> Result<Self> {
        check_size(m + d)?;
        Ok(Self {
            labels: (0..m + d).collect(),
            oracle: Oracle::Uniform { d },
            rank: d,
        })
    }

    /// Graphic matroid of a multigraph; element `k` is edge `k`.
    pub fn graphic(edges: &[(usize, usize)]) -> Result<Self> {
        check_size(edges.len())?;
        let mut m = Self {
            labels: (0..edges.len()).collect(),
            oracle: Oracle::Graphic { edges: edges.to_vec() },
            rank: 0,
        };
        m.rank = m.rank_of(m.full_mask());
        Ok(m)
    }

    /// The braid matroid `B_n`: the graphic matroid of the complete graph `K_n`.
    pub fn braid(n: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Self::graphic(&edges)
    }

    /// Matroid from an explicit list of bases, validated against the
    /// basis-exchange axiom.
    pub fn from_bases(ground: &[usize], bases: &[Vec<usize>]) -> Result<Self> {
        check_size(ground.len())?;
        let mut seen = HashSet::new();
        if !ground.iter().all(|g| seen.insert(*g)) {
            return Err(Error::InvalidMatroid("repeated ground element".into()));
        }
        if bases.is_empty() {
            return Err(Error::InvalidMatroid("no bases".into()));
        }
        let position = |e: &usize| {
            ground
                .iter()
                .position(|g| g == e)
                .ok_or_else(|| Error::InvalidMatroid(format!("basis element {e} is not in the ground set")))
        };
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            let mut mask = 0u64;
            for e in b {
                mask |= 1 << position(e)?;
            }
            if mask.count_ones() as usize != b.len() {
                return Err(Error::InvalidMatroid(format!("basis {b:?} repeats an element")));
            }
            masks.push(mask);
        }
        masks.sort_unstable();
        masks.dedup();
        let rank = masks[0].count_ones() as usize;
        if masks.iter().any(|b| b.count_ones() as usize != rank) {
            return Err(Error::InvalidMatroid("bases have different sizes".into()));
        }
        let set: HashSet<u64> = masks.iter().copied().collect();
        for &b1 in &masks {
            for &b2 in &masks {
                for x in bits(b1 & !b2) {
                    let ok = bits(b2 & !b1).any(|y| set.contains(&((b1 & !(1 << x)) | (1 << y))));
                    if !ok {
                        return Err(Error::InvalidMatroid("basis exchange fails".into()));
                    }
                }
            }
        }
        Ok(Self {
            labels: ground.to_vec(),
            oracle: Oracle::Bases(masks),
            rank,
        })
    }

    pub fn from_spec(spec: &MatroidSpec) -> Result<Self> {
        match spec {
            MatroidSpec::Bases { ground, bases } => Self::from_bases(ground, bases),
            MatroidSpec::Graph { edges } => Self::graphic(edges),
            MatroidSpec::Uniform { m, d } => Self::uniform(*m, *d),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: MatroidSpec =
            serde_json::from_str(text).map_err(|e| Error::InvalidMatroid(format!("bad JSON: {e}")))?;
        Self::from_spec(&spec)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Element ids, in ground-set order.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn full_mask(&self) -> u64 {
        if self.size() == 64 {
            u64::MAX
        } else {
            (1u64 << self.size()) - 1
        }
    }

    pub fn rank_of(&self, set: u64) -> usize {
        match &self.oracle {
            Oracle::Uniform { d } => (set.count_ones() as usize).min(*d),
            Oracle::Graphic { edges } => graphic_rank(edges, set),
            Oracle::Bases(bases) => bases.iter().map(|b| (b & set).count_ones() as usize).max().unwrap_or(0),
            Oracle::Minor {
                parent,
                map,
                contracted,
            } => {
                let mut lifted = *contracted;
                for i in bits(set) {
                    lifted |= 1 << map[i];
                }
                parent.rank_of(lifted) - parent.rank_of(*contracted)
            }
        }
    }

    pub fn closure(&self, set: u64) -> u64 {
        let r = self.rank_of(set);
        let mut out = set;
        for e in bits(self.full_mask() & !set) {
            if self.rank_of(set | (1 << e)) == r {
                out |= 1 << e;
            }
        }
        out
    }

    pub fn is_flat(&self, set: u64) -> bool {
        set & !self.full_mask() == 0 && self.closure(set) == set
    }

    pub fn has_loops(&self) -> bool {
        self.closure(0) != 0
    }

    /// `M_F`: the matroid on `F` whose flats are the flats of `M` below `F`.
    pub fn localize(&self, flat: u64) -> Result<Matroid> {
        self.check_flat(flat)?;
        let map: Vec<usize> = bits(flat).collect();
        Ok(self.minor(map, 0))
    }

    /// `M^F`: the matroid on the complement of `F` whose flats correspond to
    /// the flats of `M` above `F` (contraction by `F`).
    pub fn restrict(&self, flat: u64) -> Result<Matroid> {
        self.check_flat(flat)?;
        let map: Vec<usize> = bits(self.full_mask() & !flat).collect();
        Ok(self.minor(map, flat))
    }

    fn minor(&self, map: Vec<usize>, contracted: u64) -> Matroid {
        let labels = map.iter().map(|&i| self.labels[i]).collect();
        let mut m = Matroid {
            labels,
            oracle: Oracle::Minor {
                parent: Arc::new(self.clone()),
                map,
                contracted,
            },
            rank: 0,
        };
        m.rank = m.rank_of(m.full_mask());
        m
    }

    fn check_flat(&self, flat: u64) -> Result<()> {
        if self.is_flat(flat) {
            Ok(())
        } else {
            Err(Error::NotAFlat(self.elements(flat)))
        }
    }

    /// Labels of the elements in `set`.
    pub fn elements(&self, set: u64) -> Vec<usize> {
        bits(set).filter(|&i| i < self.size()).map(|i| self.labels[i]).collect()
    }

    /// Mask of the given labels.
    pub fn mask_of(&self, elements: &[usize]) -> Result<u64> {
        let mut mask = 0;
        for e in elements {
            let i = self
                .labels
                .iter()
                .position(|l| l == e)
                .ok_or_else(|| Error::InvalidMatroid(format!("{e} is not a ground element")))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_GROUND {
        return Err(Error::LimitExceeded {
            what: "ground set",
            value: n,
            limit: MAX_GROUND,
        });
    }
    Ok(())
}

/// Indices of the set bits of `mask`, ascending.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

fn graphic_rank(edges: &[(usize, usize)], set: u64) -> usize {
    let mut vertices: Vec<usize> = Vec::new();
    for i in bits(set) {
        vertices.push(edges[i].0);
        vertices.push(edges[i].1);
    }
    vertices.sort_unstable();
    vertices.dedup();
    let find_index = |v: usize| vertices.binary_search(&v).unwrap();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut rank = 0;
    for i in bits(set) {
        let a = find(&mut parent, find_index(edges[i].0));
        let b = find(&mut parent, find_index(edges[i].1));
        if a != b {
            parent[a] = b;
            rank += 1;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_rank_and_closure() {
        let m = Matroid::uniform(1, 2).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.closure(0b001), 0b001);
        assert_eq!(m.closure(0b011), 0b111);
    }

    #[test]
    fn braid_is_complete_graph() {
        let b4 = Matroid::braid(4).unwrap();
        assert_eq!(b4.size(), 6);
        assert_eq!(b4.rank(), 3);
        // Edges 01, 02 span 12.
        let e01 = b4.mask_of(&[0]).unwrap();
        let e02 = b4.mask_of(&[1]).unwrap();
        assert_eq!(b4.closure(e01 | e02).count_ones(), 3);
    }

    #[test]
    fn bases_are_validated() {
        assert!(Matroid::from_bases(&[1, 2, 3], &[vec![1, 2], vec![3]]).is_err());
        // {12, 34}: exchange fails.
        assert!(Matroid::from_bases(&[1, 2, 3, 4], &[vec![1, 2], vec![3, 4]]).is_err());
        let m = Matroid::from_bases(&[1, 2, 3], &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert!(m.is_flat(m.mask_of(&[2]).unwrap()));
    }

    #[test]
    fn minors() {
        let u = Matroid::uniform(2, 4).unwrap();
        let f = 0b11;
        let loc = u.localize(f).unwrap();
        let res = u.restrict(f).unwrap();
        assert_eq!((loc.size(), loc.rank()), (2, 2));
        assert_eq!((res.size(), res.rank()), (4, 2));
        assert!(matches!(u.localize(0b111111 & !0b1), Err(Error::NotAFlat(_))));
    }

    #[test]
    fn json_specs() {
        let m = Matroid::from_json(r#"{"type":"graph","edges":[[0,1],[1,2],[0,2]]}"#).unwrap();
        assert_eq!(m.rank(), 2);
        let m = Matroid::from_json(r#"{"type":"uniform","m":1,"d":3}"#).unwrap();
        assert_eq!(m.size(), 4);
        assert!(Matroid::from_json(r#"{"type":"nope"}"#).is_err());
    }
}
