use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};

/// Independent part first, then the clique, each in index order. On a valid
/// split partition this satisfies the simple split condition.
pub fn split_ordering(g: &Graph, clique: &[usize], independent: &[usize]) -> Result<VertexOrdering> {
    let n = g.n();
    let mut side = vec![None; n];
    for (part, set) in [(0u8, clique), (1u8, independent)] {
        for &v in set {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if side[v].replace(part).is_some() {
                return Err(Error::InvalidPartition(format!("vertex {v} listed twice")));
            }
        }
    }
    if let Some(v) = side.iter().position(Option::is_none) {
        return Err(Error::InvalidPartition(format!("vertex {v} is in neither part")));
    }
    for (a, &u) in clique.iter().enumerate() {
        if let Some(&v) = clique[a + 1..].iter().find(|&&v| !g.has_edge(u, v)) {
            return Err(Error::InvalidPartition(format!(
                "clique part has non-adjacent pair ({u}, {v})"
            )));
        }
    }
    for (a, &u) in independent.iter().enumerate() {
        if let Some(&v) = independent[a + 1..].iter().find(|&&v| g.has_edge(u, v)) {
            return Err(Error::InvalidPartition(format!(
                "independent part has adjacent pair ({u}, {v})"
            )));
        }
    }
    let mut order: Vec<usize> = independent.to_vec();
    order.sort_unstable();
    let mut k = clique.to_vec();
    k.sort_unstable();
    order.extend(k);
    VertexOrdering::new(order)
}
