use serde::{Deserialize, Serialize};

use crate::conditions::{require, Condition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::rational;

use super::diagram::FunctionDiagram;

/// A permutation `pi` of `1..=n`, stored 0-based together with its inverse.
/// `pi.at(p)` is the value at position `p`; `pi.position(v)` is where `v` sits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    seq: Vec<usize>,
    inv: Vec<usize>,
}

/// JSON form is the 1-based sequence.
impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_based(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_based()
    }
}

impl Permutation {
    /// From a 0-based sequence.
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let inv = VertexOrdering::new(seq.clone())
            .map_err(|e| Error::Representation(format!("not a permutation: {e}")))?
            .as_slice()
            .iter()
            .enumerate()
            .fold(vec![0; seq.len()], |mut inv, (p, &v)| {
                inv[v] = p;
                inv
            });
        Ok(Permutation { seq, inv })
    }

    pub fn from_one_based(seq: &[usize]) -> Result<Self> {
        if seq.contains(&0) {
            return Err(Error::Representation("1-based permutation contains 0".into()));
        }
        Permutation::new(seq.iter().map(|&v| v - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            seq: (0..n).collect(),
            inv: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn at(&self, p: usize) -> usize {
        self.seq[p]
    }

    pub fn position(&self, v: usize) -> usize {
        self.inv[v]
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.seq.iter().map(|v| v + 1).collect()
    }
}

/// Vertices are the values; `u` and `v` are adjacent iff the pair is an
/// inversion, i.e. `(u - v)(pos(u) - pos(v)) < 0`.
pub fn permutation_graph(pi: &Permutation) -> Graph {
    Graph::from_fn(pi.len(), |u, v| {
        let value_order = u as i64 - v as i64;
        let position_order = pi.position(u) as i64 - pi.position(v) as i64;
        value_order * position_order < 0
    })
}

/// Curve `v` runs from `(0, v + 1)` to `(1, pos(v) + 1)`.
pub fn linear_diagram_from_permutation(pi: &Permutation) -> FunctionDiagram {
    let start: Vec<_> = (0..pi.len()).map(|v| rational::int(v as i64 + 1)).collect();
    let end: Vec<_> = (0..pi.len())
        .map(|v| rational::int(pi.position(v) as i64 + 1))
        .collect();
    FunctionDiagram::linear(&start, &end).expect("start and end have equal length")
}

/// A permutation whose inversion graph is `g` with the vertex at position
/// `p` of `ord` named `p`.
///
/// The ordering must satisfy both the comparability and co-comparability
/// conditions. The second linear order puts `p` before `q` (for `p < q`)
/// exactly when they are non-adjacent; the result is checked against `g`.
pub fn permutation_from_ordering(g: &Graph, ord: &VertexOrdering) -> Result<Permutation> {
    require(g, ord, Condition::Comparability)?;
    require(g, ord, Condition::CoComparability)?;
    let h = ord.position_graph(g);
    let n = h.n();
    // rank of p in the second order: earlier non-neighbours plus later neighbours
    let rank: Vec<usize> = (0..n)
        .map(|p| (0..p).filter(|&q| !h.has_edge(q, p)).count() + (p + 1..n).filter(|&q| h.has_edge(p, q)).count())
        .collect();
    let mut seq = vec![usize::MAX; n];
    for (p, &r) in rank.iter().enumerate() {
        if r >= n || seq[r] != usize::MAX {
            unreachable!("second linear order is not total");
        }
        seq[r] = p;
    }
    let pi = Permutation::new(seq)?;
    if permutation_graph(&pi) != h {
        unreachable!("inversion graph of the constructed permutation differs from the input");
    }
    Ok(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::check_ordering;
    use crate::graph::tests::{complete, cycle, path};
    use crate::representations::diagram::ordering_from_diagram;

    #[test]
    fn examples() {
        assert_eq!(permutation_graph(&Permutation::identity(4)), Graph::empty(4));
        let rev = Permutation::from_one_based(&[4, 3, 2, 1]).unwrap();
        assert_eq!(permutation_graph(&rev), complete(4));

        let pi = Permutation::from_one_based(&[3, 1, 2]).unwrap();
        let g = permutation_graph(&pi);
        // v1v3 and v2v3, 0-based (0,2) and (1,2)
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);

        let d = linear_diagram_from_permutation(&pi);
        assert!(d.is_linear());
        assert_eq!(d.intersection_graph(), g);
        let o = ordering_from_diagram(&d);
        assert_eq!(o.as_slice(), &[0, 1, 2]);
        assert!(check_ordering(&g, &o, Condition::CoComparability).unwrap().holds);

        assert_eq!(linear_diagram_from_permutation(&rev).intersection_graph(), complete(4));
        assert_eq!(
            linear_diagram_from_permutation(&Permutation::identity(3)).intersection_graph(),
            Graph::empty(3)
        );
    }

    #[test]
    fn validation() {
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
        assert!(Permutation::from_one_based(&[1, 1]).is_err());
        assert!(Permutation::from_one_based(&[1, 3]).is_err());
        let p = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        for q in 0..3 {
            assert_eq!(p.position(p.at(q)), q);
        }
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,3,1]");
    }

    #[test]
    fn realizer_from_ordering() {
        let c4 = cycle(4);
        let ord = VertexOrdering::new(vec![0, 2, 1, 3]).unwrap();
        let pi = permutation_from_ordering(&c4, &ord).unwrap();
        assert_eq!(permutation_graph(&pi), ord.position_graph(&c4));

        let p5 = path(5);
        assert!(permutation_from_ordering(&p5, &VertexOrdering::identity(5)).is_err());
    }
}
