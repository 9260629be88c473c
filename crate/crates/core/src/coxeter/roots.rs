//! Finite Coxeter groups acting on their root systems.
//!
//! Roots are indexed so that `0..rank` are the simple roots, `0..npos` are
//! the positive roots and `npos + i` is the negative of root `i`. A group
//! element is stored as the permutation it induces on the `2 * npos` roots.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::Arc;

use super::{CoxeterSpec, GeneratorId, GeneratorSet};

/// Permutation of the roots; `perm[i]` is the index of `w(root_i)`.
pub(crate) type Perm = Arc<[u16]>;

#[derive(Debug)]
pub(crate) struct RootSystem {
    pub rank: usize,
    pub npos: usize,
    pub gens: Vec<Perm>,
    pub identity: Perm,
}

fn key(v: &[f64]) -> Vec<i64> {
    v.iter().map(|x| (x * 1e6).round() as i64).collect()
}

impl RootSystem {
    /// Builds the positive roots by closing the simple roots under simple
    /// reflections. The caller guarantees the group is finite.
    pub fn new(spec: &CoxeterSpec) -> Self {
        let n = spec.rank;
        let bilinear: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            1.0
                        } else {
                            let m = spec.matrix[i][j];
                            -(PI / m as f64).cos()
                        }
                    })
                    .collect()
            })
            .collect();
        let reflect = |i: usize, v: &[f64]| -> Vec<f64> {
            let b: f64 = (0..n).map(|j| v[j] * bilinear[i][j]).sum();
            let mut out = v.to_vec();
            out[i] -= 2.0 * b;
            out
        };
        let mut roots: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                let mut e = vec![0.0; n];
                e[i] = 1.0;
                e
            })
            .collect();
        let mut index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, r)| (key(r), i)).collect();
        let mut head = 0;
        while head < roots.len() {
            for i in 0..n {
                let r = reflect(i, &roots[head]);
                let positive = r.iter().all(|&c| c > -1e-9);
                if positive && !index.contains_key(&key(&r)) {
                    index.insert(key(&r), roots.len());
                    roots.push(r);
                }
            }
            head += 1;
        }
        let npos = roots.len();
        let lookup = |v: &[f64]| -> u16 {
            if let Some(&i) = index.get(&key(v)) {
                return i as u16;
            }
            let neg: Vec<f64> = v.iter().map(|c| -c).collect();
            (index[&key(&neg)] + npos) as u16
        };
        let gens: Vec<Perm> = (0..n)
            .map(|i| {
                let mut p = vec![0u16; 2 * npos];
                for (j, r) in roots.iter().enumerate() {
                    let img = lookup(&reflect(i, r));
                    p[j] = img;
                    p[j + npos] = neg_index(img, npos);
                }
                p.into()
            })
            .collect();
        let identity: Perm = (0..2 * npos as u16).collect::<Vec<_>>().into();
        RootSystem { rank: n, npos, gens, identity }
    }

    #[inline]
    pub fn is_negative(&self, root: u16) -> bool {
        root as usize >= self.npos
    }

    pub fn compose(&self, a: &Perm, b: &Perm) -> Perm {
        b.iter().map(|&i| a[i as usize]).collect::<Vec<_>>().into()
    }

    pub fn inverse(&self, a: &Perm) -> Perm {
        let mut out = vec![0u16; a.len()];
        for (i, &j) in a.iter().enumerate() {
            out[j as usize] = i as u16;
        }
        out.into()
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, a: &Perm) -> usize {
        a[..self.npos].iter().filter(|&&j| self.is_negative(j)).count()
    }

    /// `s` with `l(ws) < l(w)`.
    pub fn right_descents(&self, a: &Perm) -> GeneratorSet {
        let mut m = GeneratorSet::EMPTY;
        for s in 0..self.rank {
            if self.is_negative(a[s]) {
                m.insert(GeneratorId(s as u8));
            }
        }
        m
    }

    /// `s` with `l(sw) < l(w)`, i.e. `w^{-1}(α_s) < 0`.
    pub fn left_descents(&self, a: &Perm) -> GeneratorSet {
        let mut m = GeneratorSet::EMPTY;
        for &j in &a[self.npos..] {
            if (j as usize) < self.rank {
                m.insert(GeneratorId(j as u8));
            }
        }
        m
    }

}

#[inline]
fn neg_index(i: u16, npos: usize) -> u16 {
    if (i as usize) < npos {
        i + npos as u16
    } else {
        i - npos as u16
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_roots(token: &str) -> usize {
        RootSystem::new(&CoxeterSpec::parse(token).unwrap()).npos
    }

    #[test]
    fn number_of_positive_roots() {
        assert_eq!(count_roots("A2"), 3);
        assert_eq!(count_roots("A4"), 10);
        assert_eq!(count_roots("B3"), 9);
        assert_eq!(count_roots("D4"), 12);
        assert_eq!(count_roots("F4"), 24);
        assert_eq!(count_roots("H3"), 15);
        assert_eq!(count_roots("H4"), 60);
        assert_eq!(count_roots("E8"), 120);
        assert_eq!(count_roots("I2(7)"), 7);
    }

    #[test]
    fn generators_are_involutions() {
        let rs = RootSystem::new(&CoxeterSpec::parse("H3").unwrap());
        for g in &rs.gens {
            assert_eq!(rs.compose(g, g), rs.identity);
            assert_eq!(rs.length(g), 1);
        }
    }
}
