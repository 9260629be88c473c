//! Coxeter presentations of spherical type and the combinatorics of
//! generator subsets.

mod classify;
mod roots;

pub use classify::{classify, ComponentType};
pub(crate) use classify::graph_components;
pub(crate) use roots::{Perm, RootSystem};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a standard generator. Printed 1-based as `sK`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId(pub u8);

impl GeneratorId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0 + 1)
    }
}

/// A subset of the generators, stored as a bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GeneratorSet(pub u32);

impl GeneratorSet {
    pub const EMPTY: GeneratorSet = GeneratorSet(0);

    pub fn full(rank: usize) -> Self {
        if rank >= 32 {
            GeneratorSet(u32::MAX)
        } else {
            GeneratorSet((1u32 << rank) - 1)
        }
    }

    pub fn singleton(s: GeneratorId) -> Self {
        GeneratorSet(1 << s.0)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        GeneratorSet(it.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn contains(self, s: GeneratorId) -> bool {
        self.0 & (1 << s.0) != 0
    }

    pub fn insert(&mut self, s: GeneratorId) {
        self.0 |= 1 << s.0;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Self) -> Self {
        GeneratorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        GeneratorSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        GeneratorSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<GeneratorId> {
        (self.0 != 0).then(|| GeneratorId(self.0.trailing_zeros() as u8))
    }

    pub fn iter(self) -> impl Iterator<Item = GeneratorId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros();
            bits &= bits - 1;
            Some(GeneratorId(i as u8))
        })
    }

    /// All subsets of `self`, in increasing numeric order of masks.
    pub fn subsets(self) -> impl Iterator<Item = GeneratorSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some(((cur | !full).wrapping_add(1)) & full) };
            Some(GeneratorSet(cur))
        })
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

/// A Coxeter matrix. Off-diagonal entries are `m(s,t) >= 2`; `0` encodes
/// `m(s,t) = ∞`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterSpec {
    pub rank: usize,
    pub matrix: Vec<Vec<u32>>,
}

impl CoxeterSpec {
    pub fn from_matrix(matrix: Vec<Vec<u32>>) -> Result<Self> {
        let rank = matrix.len();
        if rank == 0 {
            return Err(Error::InvalidMatrix("rank 0".into()));
        }
        if rank > 32 {
            return Err(Error::InvalidMatrix(format!("rank {rank} is above 32")));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidMatrix(format!("row {} has length {}", i, row.len())));
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j {
                    if m != 1 {
                        return Err(Error::InvalidMatrix(format!("diagonal entry ({i},{j}) is {m}")));
                    }
                } else {
                    if m == 1 {
                        return Err(Error::InvalidMatrix(format!("entry ({i},{j}) is 1")));
                    }
                    if matrix[j][i] != m {
                        return Err(Error::InvalidMatrix(format!("not symmetric at ({i},{j})")));
                    }
                }
            }
        }
        Ok(CoxeterSpec { rank, matrix })
    }

    /// Parses a type token such as `A4`, `B3`, `D4`, `E6`, `F4`, `G2`,
    /// `H3`, `I2(5)`, or a product of them joined by `x`/`+`/`*`
    /// (for instance `A2xA1`).
    pub fn parse(token: &str) -> Result<Self> {
        let token = token.trim();
        let parts: Vec<&str> = token
            .split(|c| c == 'x' || c == '+' || c == '*' || c == '×')
            .map(str::trim)
            .collect();
        let mut blocks = Vec::new();
        for part in parts {
            blocks.push(Self::parse_irreducible(part)?);
        }
        let rank: usize = blocks.iter().map(|b| b.rank).sum();
        let mut matrix = vec![vec![2u32; rank]; rank];
        let mut offset = 0;
        for b in &blocks {
            for i in 0..b.rank {
                for j in 0..b.rank {
                    matrix[offset + i][offset + j] = b.matrix[i][j];
                }
            }
            offset += b.rank;
        }
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        Self::from_matrix(matrix)
    }

    fn parse_irreducible(token: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown group type `{token}`"));
        let mut chars = token.chars();
        let family = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rest: String = chars.collect();
        if family == 'I' {
            // I2(m)
            let inner = rest
                .strip_prefix('2')
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)?;
            let m: u32 = inner.trim().parse().map_err(|_| bad())?;
            if m < 2 {
                return Err(bad());
            }
            return Self::from_matrix(vec![vec![1, m], vec![m, 1]]);
        }
        let n: usize = rest.parse().map_err(|_| bad())?;
        let path = |n: usize, labels: &[(usize, u32)]| {
            let mut m = vec![vec![2u32; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 1;
            }
            for i in 0..n.saturating_sub(1) {
                m[i][i + 1] = 3;
                m[i + 1][i] = 3;
            }
            for &(i, l) in labels {
                m[i][i + 1] = l;
                m[i + 1][i] = l;
            }
            m
        };
        let matrix = match family {
            'A' if n >= 1 => path(n, &[]),
            'B' | 'C' if n >= 2 => path(n, &[(n - 2, 4)]),
            'D' if n >= 4 => {
                // path s1..s_{n-1}, with s_n attached to s_{n-2}
                let mut m = path(n - 1, &[]);
                for row in m.iter_mut() {
                    row.push(2);
                }
                m.push(vec![2; n]);
                m[n - 1][n - 1] = 1;
                m[n - 3][n - 1] = 3;
                m[n - 1][n - 3] = 3;
                m
            }
            'E' if (6..=8).contains(&n) => {
                // Bourbaki labelling: 1-3-4-5-...; 2 attached to 4.
                let mut m = vec![vec![2u32; n]; n];
                for (i, row) in m.iter_mut().enumerate() {
                    row[i] = 1;
                }
                let mut edge = |a: usize, b: usize| {
                    m[a][b] = 3;
                    m[b][a] = 3;
                };
                edge(0, 2);
                edge(1, 3);
                for i in 2..n - 1 {
                    edge(i, i + 1);
                }
                m
            }
            'F' if n == 4 => path(4, &[(1, 4)]),
            'G' if n == 2 => path(2, &[(0, 6)]),
            'H' if n == 3 || n == 4 => path(n, &[(0, 5)]),
            _ => return Err(bad()),
        };
        Self::from_matrix(matrix)
    }

    pub fn m(&self, s: GeneratorId, t: GeneratorId) -> u32 {
        self.matrix[s.index()][t.index()]
    }

    pub fn commute(&self, s: GeneratorId, t: GeneratorId) -> bool {
        s == t || self.m(s, t) == 2
    }

    pub fn generators(&self) -> impl Iterator<Item = GeneratorId> {
        (0..self.rank).map(|i| GeneratorId(i as u8))
    }

    /// Coxeter matrix of the standard parabolic subgroup on `x`, with the
    /// generators of `x` renumbered in increasing order.
    pub fn restrict(&self, x: GeneratorSet) -> CoxeterSpec {
        let idx: Vec<usize> = x.iter().map(GeneratorId::index).collect();
        let matrix = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.matrix[i][j]).collect())
            .collect();
        CoxeterSpec { rank: idx.len(), matrix }
    }
}
