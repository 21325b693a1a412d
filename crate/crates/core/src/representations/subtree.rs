use crate::error::{Error, Result};
use crate::graph::Graph;

/// Intersection graph of subtrees of a host tree. Each subtree is given by
/// its vertex set and must be non-empty and connected in the host.
pub fn intersection_graph_of_subtrees(host: &Graph, subtrees: &[Vec<usize>]) -> Result<Graph> {
    let n = host.n();
    if n == 0 || host.edge_count() != n - 1 || !host.is_connected() {
        return Err(Error::Representation("host graph is not a tree".into()));
    }
    let mut members = Vec::with_capacity(subtrees.len());
    for (s, vertices) in subtrees.iter().enumerate() {
        if vertices.is_empty() {
            return Err(Error::Representation(format!("subtree {s} is empty")));
        }
        let mut set = vec![false; n];
        for &v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set[v] = true;
        }
        let mut sorted: Vec<usize> = (0..n).filter(|&v| set[v]).collect();
        sorted.dedup();
        if !host.induced_subgraph(&sorted).is_connected() {
            return Err(Error::Representation(format!(
                "subtree {s} is not connected in the host tree"
            )));
        }
        members.push(set);
    }
    Ok(Graph::from_fn(subtrees.len(), |a, b| {
        members[a].iter().zip(&members[b]).any(|(&x, &y)| x && y)
    }))
}
