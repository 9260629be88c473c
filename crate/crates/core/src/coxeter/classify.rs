//! Recognition of finite Coxeter groups from their Coxeter graph.

use std::fmt;

use super::{CoxeterSpec, GeneratorId, GeneratorSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl ComponentType {
    /// Order of the finite Coxeter group.
    pub fn order(self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            ComponentType::A(n) => fact(n + 1),
            ComponentType::B(n) => (1u128 << n) * fact(n),
            ComponentType::D(n) => (1u128 << (n - 1)) * fact(n),
            ComponentType::E(6) => 51_840,
            ComponentType::E(7) => 2_903_040,
            ComponentType::E(_) => 696_729_600,
            ComponentType::F4 => 1152,
            ComponentType::H(3) => 120,
            ComponentType::H(_) => 14_400,
            ComponentType::I2(m) => 2 * m as u128,
        }
    }

    /// Length of the longest element (number of reflections).
    pub fn longest_length(self) -> usize {
        match self {
            ComponentType::A(n) => n * (n + 1) / 2,
            ComponentType::B(n) => n * n,
            ComponentType::D(n) => n * (n - 1),
            ComponentType::E(6) => 36,
            ComponentType::E(7) => 63,
            ComponentType::E(_) => 120,
            ComponentType::F4 => 24,
            ComponentType::H(3) => 15,
            ComponentType::H(_) => 60,
            ComponentType::I2(m) => m as usize,
        }
    }
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentType::A(n) => write!(f, "A{n}"),
            ComponentType::B(n) => write!(f, "B{n}"),
            ComponentType::D(n) => write!(f, "D{n}"),
            ComponentType::E(n) => write!(f, "E{n}"),
            ComponentType::F4 => write!(f, "F4"),
            ComponentType::H(n) => write!(f, "H{n}"),
            ComponentType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Connected components of the Coxeter graph restricted to `x`.
pub(crate) fn graph_components(spec: &CoxeterSpec, x: GeneratorSet) -> Vec<GeneratorSet> {
    let mut seen = GeneratorSet::EMPTY;
    let mut out = Vec::new();
    for s in x.iter() {
        if seen.contains(s) {
            continue;
        }
        let mut comp = GeneratorSet::singleton(s);
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            for b in x.iter() {
                if !comp.contains(b) && !spec.commute(a, b) {
                    comp.insert(b);
                    stack.push(b);
                }
            }
        }
        seen = seen.union(comp);
        out.push(comp);
    }
    out
}

/// Classifies every connected component of the Coxeter graph, failing with
/// `NonSphericalType` if one of them is not a finite Coxeter group.
pub fn classify(spec: &CoxeterSpec) -> Result<Vec<(GeneratorSet, ComponentType)>> {
    graph_components(spec, GeneratorSet::full(spec.rank))
        .into_iter()
        .map(|c| classify_component(spec, c).map(|t| (c, t)))
        .collect()
}

fn classify_component(spec: &CoxeterSpec, comp: GeneratorSet) -> Result<ComponentType> {
    let verts: Vec<GeneratorId> = comp.iter().collect();
    let n = verts.len();
    let fail = |why: &str| Error::NonSphericalType(format!("component {comp}: {why}"));
    if n == 1 {
        return Ok(ComponentType::A(1));
    }
    let mut edges = Vec::new();
    for (i, &a) in verts.iter().enumerate() {
        for &b in &verts[i + 1..] {
            let m = spec.m(a, b);
            if m == 0 {
                return Err(fail("infinite edge label"));
            }
            if m > 2 {
                edges.push((a, b, m));
            }
        }
    }
    if n == 2 {
        return Ok(match edges[0].2 {
            3 => ComponentType::A(2),
            m => ComponentType::I2(m),
        });
    }
    if edges.len() != n - 1 {
        return Err(fail("Coxeter graph has a cycle"));
    }
    let degree = |v: GeneratorId| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let heavy: Vec<_> = edges.iter().filter(|e| e.2 > 3).collect();
    if heavy.len() > 1 {
        return Err(fail("more than one edge label above 3"));
    }
    let branch: Vec<GeneratorId> = verts.iter().copied().filter(|&v| degree(v) >= 3).collect();
    if branch.iter().any(|&v| degree(v) > 3) || branch.len() > 1 {
        return Err(fail("vertex of degree above 3 or several branch points"));
    }
    let neighbours = |v: GeneratorId| -> Vec<GeneratorId> {
        edges
            .iter()
            .filter_map(|e| {
                if e.0 == v {
                    Some(e.1)
                } else if e.1 == v {
                    Some(e.0)
                } else {
                    None
                }
            })
            .collect()
    };
    if let Some(&centre) = branch.first() {
        if !heavy.is_empty() {
            return Err(fail("branched graph with a label above 3"));
        }
        let mut arms: Vec<usize> = neighbours(centre)
            .into_iter()
            .map(|start| {
                let (mut prev, mut cur, mut len) = (centre, start, 1);
                loop {
                    let next: Vec<_> = neighbours(cur).into_iter().filter(|&w| w != prev).collect();
                    match next.as_slice() {
                        [w] => {
                            prev = cur;
                            cur = *w;
                            len += 1;
                        }
                        _ => break len,
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        return match arms.as_slice() {
            [1, 1, _] => Ok(ComponentType::D(n)),
            [1, 2, 2] => Ok(ComponentType::E(6)),
            [1, 2, 3] => Ok(ComponentType::E(7)),
            [1, 2, 4] => Ok(ComponentType::E(8)),
            _ => Err(fail("branched graph outside types D and E")),
        };
    }
    // A path: locate the heavy edge position along it.
    let Some(&&(a, b, label)) = heavy.first() else {
        return Ok(ComponentType::A(n));
    };
    let end = verts.iter().copied().find(|&v| degree(v) == 1).expect("path has an end");
    let mut order = vec![end];
    while order.len() < n {
        let last = *order.last().unwrap();
        let next = neighbours(last).into_iter().find(|w| !order.contains(w)).unwrap();
        order.push(next);
    }
    let pos = order
        .windows(2)
        .position(|w| (w[0] == a && w[1] == b) || (w[0] == b && w[1] == a))
        .unwrap();
    let at_end = pos == 0 || pos == n - 2;
    match label {
        4 if at_end => Ok(ComponentType::B(n)),
        4 if n == 4 => Ok(ComponentType::F4),
        5 if at_end && n <= 4 => Ok(ComponentType::H(n)),
        _ => Err(fail("path with an edge label outside types B, F and H")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(token: &str) -> Vec<ComponentType> {
        classify(&CoxeterSpec::parse(token).unwrap())
            .unwrap()
            .into_iter()
            .map(|(_, t)| t)
            .collect()
    }

    #[test]
    fn recognises_the_families() {
        assert_eq!(ty("A4"), vec![ComponentType::A(4)]);
        assert_eq!(ty("B3"), vec![ComponentType::B(3)]);
        assert_eq!(ty("D4"), vec![ComponentType::D(4)]);
        assert_eq!(ty("D5"), vec![ComponentType::D(5)]);
        assert_eq!(ty("E6"), vec![ComponentType::E(6)]);
        assert_eq!(ty("E8"), vec![ComponentType::E(8)]);
        assert_eq!(ty("F4"), vec![ComponentType::F4]);
        assert_eq!(ty("H4"), vec![ComponentType::H(4)]);
        assert_eq!(ty("I2(7)"), vec![ComponentType::I2(7)]);
        assert_eq!(ty("A2xA1"), vec![ComponentType::A(2), ComponentType::A(1)]);
    }

    #[test]
    fn rejects_affine_and_hyperbolic() {
        let triangle = CoxeterSpec::from_matrix(vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert!(matches!(classify(&triangle), Err(Error::NonSphericalType(_))));
        // affine C2~: 4 - 4
        let c2 = CoxeterSpec::from_matrix(vec![vec![1, 4, 2], vec![4, 1, 4], vec![2, 4, 1]]).unwrap();
        assert!(classify(&c2).is_err());
        let free = CoxeterSpec::from_matrix(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(classify(&free).is_err());
        // H5 does not exist
        let h5 = CoxeterSpec::parse("A5").unwrap();
        let mut m = h5.matrix.clone();
        m[0][1] = 5;
        m[1][0] = 5;
        assert!(classify(&CoxeterSpec::from_matrix(m).unwrap()).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(CoxeterSpec::parse("Q3").is_err());
        assert!(CoxeterSpec::parse("I2(1)").is_err());
        assert!(CoxeterSpec::parse("D3").is_err());
    }
}
