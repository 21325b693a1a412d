//! Graph families, seeded random generators and exhaustive enumeration of
//! small graphs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::representations::{Interval, IntervalModel};

/// Largest `n` for exhaustive enumeration.
pub const ENUMERATION_MAX_N: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    /// Complete binary tree on `n` vertices, vertex `i` having children
    /// `2i + 1` and `2i + 2`.
    CompleteBinaryTree(usize),
    /// The split graph of maximum degree `Δ` and large bandwidth.
    SplitExtremal(usize),
    RandomInterval {
        n: usize,
        seed: u64,
    },
    RandomSplit {
        n: usize,
        seed: u64,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Cycle(n) if n < 3 => Err(Error::Parameter(format!("cycle needs at least 3 vertices, got {n}"))),
            FamilySpec::SplitExtremal(d) if d < 2 => {
                Err(Error::Parameter(format!("split-extremal needs Δ >= 2, got {d}")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "complete-bipartite:{a},{b}"),
            FamilySpec::CompleteBinaryTree(n) => write!(f, "complete-binary-tree:{n}"),
            FamilySpec::SplitExtremal(d) => write!(f, "split-extremal:{d}"),
            FamilySpec::RandomInterval { n, seed } => write!(f, "random-interval:{n},{seed}"),
            FamilySpec::RandomSplit { n, seed } => write!(f, "random-split:{n},{seed}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `family:p1[,p2]`, e.g. `cycle:5`, `complete-bipartite:3,3`,
    /// `random-interval:10,42`. Random families default to seed 0.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid family spec {s:?}"));
        let (name, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let args: Vec<u64> = args
            .split(',')
            .map(|a| a.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let size = |i: usize| -> Result<usize> {
            let v = *args.get(i).ok_or_else(bad)?;
            usize::try_from(v).map_err(|_| bad())
        };
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad()) };
        let seed = || -> Result<u64> {
            match args.len() {
                1 => Ok(0),
                2 => Ok(args[1]),
                _ => Err(bad()),
            }
        };
        let spec = match name.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "path" => arity(1).and(size(0).map(FamilySpec::Path))?,
            "cycle" => arity(1).and(size(0).map(FamilySpec::Cycle))?,
            "complete" => arity(1).and(size(0).map(FamilySpec::Complete))?,
            "empty" => arity(1).and(size(0).map(FamilySpec::Empty))?,
            "complete-bipartite" => {
                arity(2)?;
                FamilySpec::CompleteBipartite(size(0)?, size(1)?)
            }
            "complete-binary-tree" => arity(1).and(size(0).map(FamilySpec::CompleteBinaryTree))?,
            "split-extremal" => arity(1).and(size(0).map(FamilySpec::SplitExtremal))?,
            "random-interval" => FamilySpec::RandomInterval {
                n: size(0)?,
                seed: seed()?,
            },
            "random-split" => FamilySpec::RandomSplit {
                n: size(0)?,
                seed: seed()?,
            },
            _ => return Err(Error::Parse(format!("unknown family {name:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn gen(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    Ok(match *spec {
        FamilySpec::Path(n) => Graph::from_fn(n, |u, v| v == u + 1),
        FamilySpec::Cycle(n) => Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)),
        FamilySpec::Complete(n) => Graph::from_fn(n, |_, _| true),
        FamilySpec::Empty(n) => Graph::empty(n),
        FamilySpec::CompleteBipartite(a, b) => Graph::from_fn(a + b, |u, v| (u < a) != (v < a)),
        FamilySpec::CompleteBinaryTree(n) => Graph::from_fn(n, |u, v| (v - 1) / 2 == u),
        FamilySpec::SplitExtremal(d) => split_extremal(d),
        FamilySpec::RandomInterval { n, seed } => random_interval_model(n, seed).intersection_graph(),
        FamilySpec::RandomSplit { n, seed } => random_split(n, seed),
    })
}

/// `k = ⌊Δ/2⌋` clique vertices, clique vertex `j` joined to its own block of
/// `Δ - k + 1` independent vertices. Clique vertices come first.
///
/// For `Δ < 4` this would leave a single clique vertex, i.e. a star of
/// diameter 2, so `k` is raised to 2 there (giving `P_4` and a double star).
fn split_extremal(delta: usize) -> Graph {
    let k = (delta / 2).max(2);
    let block = delta - k + 1;
    let n = k + k * block;
    Graph::from_fn(n, |u, v| v < k || (u < k && (v - k) / block == u))
}

/// `n` intervals with integer endpoints drawn from a seeded generator.
pub fn random_interval_model(n: usize, seed: u64) -> IntervalModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = 4 * n.max(1) as i64;
    let intervals = (0..n)
        .map(|_| {
            let left = rng.random_range(0..span);
            let len = rng.random_range(0..=n as i64);
            Interval::from_ints(left, left + len)
        })
        .collect();
    IntervalModel::new(intervals).expect("left <= right by construction")
}

/// A random clique part of size in `0..=n`, each remaining vertex joined to
/// each clique vertex with probability 1/2, under a random labelling.
fn random_split(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(0..=n);
    let mut label: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        label.swap(i, rng.random_range(0..=i));
    }
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..n {
            if v < k || rng.random_bool(0.5) {
                edges.push((label[u], label[v]));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("labels are in range")
}

/// Every labelled graph on `n` vertices, in increasing order of
/// [`Graph::code`].
pub struct AllGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for AllGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let g = Graph::from_code(self.n, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for AllGraphs {}

fn enumeration_guard(n: usize) -> Result<()> {
    if n > ENUMERATION_MAX_N {
        return Err(Error::TooLarge {
            what: "graph enumeration",
            n,
            max: ENUMERATION_MAX_N,
        });
    }
    Ok(())
}

pub fn all_graphs(n: usize) -> Result<AllGraphs> {
    enumeration_guard(n)?;
    Ok(AllGraphs {
        n,
        next: 0,
        end: 1 << (n * n.saturating_sub(1) / 2),
    })
}

/// Smallest code over all relabellings that list vertices by non-increasing
/// degree. Isomorphic graphs get the same value.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &by_degree {
        match groups.last_mut() {
            Some(grp) if g.degree(grp[0]) == g.degree(v) => grp.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut slots = Vec::with_capacity(n);
    canonical_rec(g, &mut groups, 0, &mut slots, &mut best);
    best
}

fn canonical_rec(g: &Graph, groups: &mut [Vec<usize>], gi: usize, slots: &mut Vec<usize>, best: &mut u64) {
    if gi == groups.len() {
        // slots[p] is the vertex placed at new label p
        let mut code = 0u64;
        for b in 1..slots.len() {
            for a in 0..b {
                if g.has_edge(slots[a], slots[b]) {
                    code |= 1 << (b * (b - 1) / 2 + a);
                }
            }
        }
        *best = (*best).min(code);
        return;
    }
    permute_group(g, groups, gi, 0, slots, best);
}

fn permute_group(g: &Graph, groups: &mut [Vec<usize>], gi: usize, at: usize, slots: &mut Vec<usize>, best: &mut u64) {
    let len = groups[gi].len();
    if at == len {
        canonical_rec(g, groups, gi + 1, slots, best);
        return;
    }
    for t in at..len {
        groups[gi].swap(at, t);
        slots.push(groups[gi][at]);
        permute_group(g, groups, gi, at + 1, slots, best);
        slots.pop();
        groups[gi].swap(at, t);
    }
}

/// One representative per isomorphism class on `n` vertices, namely
/// `Graph::from_code(n, c)` for each canonical code `c`, in increasing order.
/// Classes on `n` vertices are grown from those on `n - 1` by adding a vertex
/// with every possible neighbourhood.
pub fn canonical_classes(n: usize) -> Result<Vec<Graph>> {
    enumeration_guard(n)?;
    let mut codes: BTreeSet<u64> = BTreeSet::from([0]);
    for m in 1..=n {
        let mut next = BTreeSet::new();
        for &c in &codes {
            let base = c;
            // the new vertex m-1 owns bits (m-1)(m-2)/2 .. + m-1
            let shift = (m - 1) * m.saturating_sub(2) / 2;
            for nbhd in 0..1u64 << (m - 1) {
                next.insert(canonical_code(&Graph::from_code(m, base | nbhd << shift)));
            }
        }
        codes = next;
    }
    Ok(codes.into_iter().map(|c| Graph::from_code(n, c)).collect())
}
