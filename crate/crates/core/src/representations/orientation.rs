use serde::{Deserialize, Serialize};

use crate::bits;
use crate::conditions::{require, Condition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};

/// Which pairs an ordering orients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrientationMode {
    /// Edges of the graph, from earlier to later position.
    Edges,
    /// Non-edges of the graph (edges of the complement), earlier to later.
    NonEdges,
}

/// A set of arcs `u -> v` over `0..n`, with no loops and no 2-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "OrientationRepr", into = "OrientationRepr")]
pub struct Orientation {
    n: usize,
    out: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct OrientationRepr {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<OrientationRepr> for Orientation {
    type Error = Error;

    fn try_from(r: OrientationRepr) -> Result<Self> {
        Orientation::from_arcs(r.n, &r.arcs)
    }
}

impl From<Orientation> for OrientationRepr {
    fn from(o: Orientation) -> Self {
        OrientationRepr {
            n: o.n,
            arcs: o.arcs().collect(),
        }
    }
}

impl Orientation {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut out = vec![vec![0u64; bits::words_for(n)]; n];
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::Representation(format!("loop at vertex {u}")));
            }
            if bits::get(&out[v], u) {
                return Err(Error::Representation(format!("both {u}->{v} and {v}->{u} present")));
            }
            bits::set(&mut out[u], v);
        }
        Ok(Orientation { n, out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        bits::get(&self.out[u], v)
    }

    /// Arcs sorted by tail, then head.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits::ones(&self.out[u]).map(move |v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| bits::count(r)).sum()
    }

    pub fn underlying_graph(&self) -> Graph {
        let arcs: Vec<_> = self.arcs().collect();
        Graph::from_edge_list(self.n, &arcs).expect("arcs are in range and loop-free")
    }

    /// First directed 2-path `u -> v -> w` lacking the arc `u -> w`.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for u in 0..self.n {
            for v in bits::ones(&self.out[u]) {
                for (wi, (&reach, &direct)) in self.out[v].iter().zip(&self.out[u]).enumerate() {
                    let missing = reach & !direct;
                    if missing != 0 {
                        return Some((u, v, wi * 64 + missing.trailing_zeros() as usize));
                    }
                }
            }
        }
        None
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_violation().is_none()
    }
}

/// Orients pairs from earlier to later position in `ord`.
///
/// In [`OrientationMode::Edges`] the ordering must satisfy the comparability
/// condition and the result is a transitive orientation of `g`. In
/// [`OrientationMode::NonEdges`] it must satisfy the co-comparability
/// condition and the result is a transitive orientation of the complement.
pub fn orientation_from_ordering(g: &Graph, ord: &VertexOrdering, mode: OrientationMode) -> Result<Orientation> {
    let cond = match mode {
        OrientationMode::Edges => Condition::Comparability,
        OrientationMode::NonEdges => Condition::CoComparability,
    };
    require(g, ord, cond)?;
    let want_edge = mode == OrientationMode::Edges;
    let mut arcs = Vec::new();
    for i in 0..ord.len() {
        for j in i + 1..ord.len() {
            let (u, v) = (ord.at(i), ord.at(j));
            if g.has_edge(u, v) == want_edge {
                arcs.push((u, v));
            }
        }
    }
    Orientation::from_arcs(g.n(), &arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle};

    #[test]
    fn examples() {
        let k3 = complete(3);
        let o = orientation_from_ordering(&k3, &VertexOrdering::identity(3), OrientationMode::Edges).unwrap();
        assert_eq!(o.arcs().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(o.is_transitive());

        let c4 = cycle(4);
        let ord = VertexOrdering::new(vec![0, 2, 1, 3]).unwrap();
        let o = orientation_from_ordering(&c4, &ord, OrientationMode::Edges).unwrap();
        assert_eq!(o.arc_count(), 4);
        assert_eq!(o.underlying_graph(), c4);
        assert!(o.is_transitive());

        let o = orientation_from_ordering(&c4, &ord, OrientationMode::NonEdges).unwrap();
        assert_eq!(o.underlying_graph(), c4.complement());
        assert_eq!(o.arcs().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn precondition_failure() {
        let c4 = cycle(4);
        let err = orientation_from_ordering(&c4, &VertexOrdering::identity(4), OrientationMode::Edges).unwrap_err();
        assert!(matches!(
            err,
            Error::ConditionViolated {
                condition: Condition::Comparability,
                ..
            }
        ));
    }

    #[test]
    fn validation() {
        assert!(Orientation::from_arcs(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Orientation::from_arcs(2, &[(0, 0)]).is_err());
        assert!(Orientation::from_arcs(2, &[(0, 2)]).is_err());
        let path = Orientation::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.transitivity_violation(), Some((0, 1, 2)));
    }

    #[test]
    fn json_round_trip() {
        let o = Orientation::from_arcs(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let s = serde_json::to_string(&o).unwrap();
        assert_eq!(s, r#"{"n":3,"arcs":[[0,1],[0,2],[1,2]]}"#);
        assert_eq!(serde_json::from_str::<Orientation>(&s).unwrap(), o);
        assert!(serde_json::from_str::<Orientation>(r#"{"n":2,"arcs":[[0,1],[1,0]]}"#).is_err());
    }
}
