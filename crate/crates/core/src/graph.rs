//! Undirected simple graphs with bitset adjacency, and vertex orderings.

use std::collections::VecDeque;
use std::fmt;

use crate::bits;
use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one bitset row per vertex. The graph is immutable
/// once built; every constructor yields a symmetric, irreflexive relation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Builds the graph whose edges are the pairs `u < v` with `adjacent(u, v)`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.insert(u, v);
                }
            }
        }
        g
    }

    /// Decodes the upper triangle from `code`, bit `t` being the `t`-th pair
    /// in graph6 order `(0,1), (0,2), (1,2), (0,3), ...`.
    pub fn from_code(n: usize, code: u64) -> Self {
        let mut t = 0;
        Graph::from_fn(n, |_, _| {
            let bit = (code >> t) & 1 == 1;
            t += 1;
            bit
        })
    }

    /// Inverse of [`Graph::from_code`]; requires `n <= 11`.
    pub fn code(&self) -> u64 {
        assert!(self.n <= 11, "code() supports at most 11 vertices");
        let mut code = 0u64;
        let mut t = 0;
        for v in 1..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    code |= 1 << t;
                }
                t += 1;
            }
        }
        code
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        let w = self.words;
        bits::set(&mut self.adj[u * w..(u + 1) * w], v);
        bits::set(&mut self.adj[v * w..(v + 1) * w], u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edge_count(&self) -> usize {
        bits::count(&self.adj) / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::get(self.row(u), v)
    }

    /// Neighbourhood of `v` as a bitset row of `ceil(n/64)` words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Neighbourhood of `v` as a single word. Only valid when `n <= 64`.
    #[inline]
    pub(crate) fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.adj[v]
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbours(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let w = self.words;
        for v in 0..self.n {
            for wi in 0..w {
                g.adj[v * w + wi] = !self.adj[v * w + wi] & bits::valid_mask(self.n, wi);
            }
            bits::clear(&mut g.adj[v * w..(v + 1) * w], v);
        }
        g
    }

    /// Subgraph induced by `vertices`; vertex `vertices[t]` becomes `t`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |a, b| self.has_edge(vertices[a], vertices[b]))
    }

    /// The graph obtained by renaming vertex `v` to `new_name[v]`.
    pub fn relabel(&self, new_name: &[usize]) -> Graph {
        assert_eq!(new_name.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.insert(new_name[u], new_name[v]);
        }
        g
    }

    /// Connected components, each sorted; components ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut comp = vec![s];
            label[s] = id;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for v in self.neighbours(u) {
                    if label[v] == usize::MAX {
                        label[v] = id;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for v in self.neighbours(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Diameter of each component, aligned with [`Graph::components`].
    pub fn component_diameters(&self) -> Vec<usize> {
        self.components()
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|&s| self.distances_from(s).into_iter().flatten().max().unwrap_or(0))
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }

    /// Largest component diameter; 0 for the empty graph.
    pub fn diameter(&self) -> usize {
        self.component_diameters().into_iter().max().unwrap_or(0)
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(a, &u)| set[a + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(a, &u)| set[a + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    /// Clique number by branch and bound over bitset candidate sets.
    pub fn max_clique_size(&self) -> usize {
        fn expand(g: &Graph, size: usize, cand: Vec<u64>, best: &mut usize) {
            let remaining = bits::count(&cand);
            if remaining == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + remaining <= *best {
                return;
            }
            let mut cand = cand;
            loop {
                let Some(v) = bits::ones(&cand).next() else { break };
                if size + bits::count(&cand) <= *best {
                    return;
                }
                let next: Vec<u64> = cand.iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
                expand(g, size + 1, next, best);
                bits::clear(&mut cand, v);
            }
        }
        let mut best = 0;
        let all: Vec<u64> = (0..self.words).map(|w| bits::valid_mask(self.n, w)).collect();
        expand(self, 0, all, &mut best);
        best
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// A total order of the vertex set: `order[i]` is the vertex at position `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl VertexOrdering {
    /// Validates that `order` is a permutation of `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!(
                    "vertex {v} out of range for {n} vertices"
                )));
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidOrdering(format!("vertex {v} appears twice")));
            }
            pos[v] = i;
        }
        Ok(VertexOrdering { order, pos })
    }

    /// Like [`VertexOrdering::new`] but also checks the length against `g`.
    pub fn for_graph(g: &Graph, order: Vec<usize>) -> Result<Self> {
        if order.len() != g.n() {
            return Err(Error::InvalidOrdering(format!(
                "ordering has {} entries but the graph has {} vertices",
                order.len(),
                g.n()
            )));
        }
        VertexOrdering::new(order)
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            order: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.order
    }

    /// Vertex at position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.order[i]
    }

    /// Position of vertex `v`.
    #[inline]
    pub fn pos(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn reversed(&self) -> Self {
        let order: Vec<usize> = self.order.iter().rev().copied().collect();
        let n = order.len();
        let pos = self.pos.iter().map(|&p| n - 1 - p).collect();
        VertexOrdering { order, pos }
    }

    /// The graph relabelled so that the vertex at position `i` becomes `i`.
    pub fn position_graph(&self, g: &Graph) -> Graph {
        g.relabel(&self.pos)
    }
}

impl fmt::Debug for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.order)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    pub(crate) fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    pub(crate) fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    #[test]
    fn edge_list_construction() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p3.has_edge(0, 1) && p3.has_edge(1, 0) && p3.has_edge(2, 1));
        assert!(!p3.has_edge(0, 2));
        assert_eq!(p3.edge_count(), 2);

        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4, cycle(4));

        let dup = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(Graph::from_edge_list(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(3).complement(), Graph::empty(3));
        let two_k2 = Graph::from_edge_list(4, &[(0, 2), (1, 3)]).unwrap();
        assert_eq!(cycle(4).complement(), two_k2);
        // C5 is self-complementary: 0->0, 1->2, 2->4, 3->1, 4->3 maps C5 onto its complement.
        let c5 = cycle(5);
        assert_eq!(c5.relabel(&[0, 2, 4, 1, 3]), c5.complement());
    }

    #[test]
    fn complement_wide_graph() {
        let g = path(130);
        let c = g.complement();
        assert_eq!(c.complement(), g);
        for v in 0..130 {
            assert_eq!(c.degree(v), 129 - g.degree(v));
            assert!(!c.has_edge(v, v));
        }
    }

    #[test]
    fn basic_queries() {
        assert_eq!(cycle(4).max_degree(), 2);
        assert_eq!(path(4).diameter(), 3);
        assert_eq!(Graph::empty(0).diameter(), 0);
        assert_eq!(Graph::empty(0).max_degree(), 0);
        assert_eq!(cycle(5).max_clique_size(), 2);
        assert_eq!(complete(6).max_clique_size(), 6);
        assert_eq!(Graph::empty(3).max_clique_size(), 1);
        assert_eq!(Graph::empty(0).max_clique_size(), 0);

        let g = Graph::from_edge_list(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3, 4]]);
        assert_eq!(g.component_diameters(), vec![1, 2]);
        assert!(g.is_clique(&[2, 3]) && !g.is_clique(&[2, 3, 4]));
        assert!(g.is_independent(&[0, 2, 4]) && !g.is_independent(&[0, 1]));
    }

    #[test]
    fn code_round_trip() {
        for code in 0..64 {
            assert_eq!(Graph::from_code(4, code).code(), code);
        }
        // bit 0 is the pair (0,1), bit 2 is (1,2)
        assert_eq!(Graph::from_code(3, 0b101), path(3));
    }

    #[test]
    fn ordering_validation() {
        assert!(VertexOrdering::new(vec![0, 0]).is_err());
        assert!(VertexOrdering::new(vec![0, 2]).is_err());
        let o = VertexOrdering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.pos(2), 0);
        assert_eq!(o.reversed().as_slice(), &[1, 0, 2]);
        assert_eq!(o.reversed().pos(2), 2);
        assert!(VertexOrdering::for_graph(&path(4), vec![0, 1, 2]).is_err());
    }
}
