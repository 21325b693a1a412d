use std::collections::HashSet;

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::limits::MASK_MAX_N;

use super::bounds::{lower_bounds, ordering_width, LowerBounds};

/// Minimum width together with an ordering achieving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandwidthResult {
    pub value: usize,
    pub ordering: VertexOrdering,
    pub lower_bounds: LowerBounds,
}

/// Exact bandwidth. Components are solved separately (each subject to
/// `max_n`) and concatenated in order of their least vertex.
///
/// Each component is solved by deciding "width <= k?" for increasing `k`,
/// starting at the lower bound. The decision procedure places vertices
/// position by position in increasing index order. Each placed vertex `u`
/// imposes the deadline `pos(u) + k` on its unplaced neighbours; a branch is
/// cut once the unplaced vertices cannot all meet their deadlines. Failed
/// states are memoised on (placed set, remaining deadlines), which is all the
/// future depends on. The first ordering found is therefore the
/// lexicographically least optimal ordering of the component.
pub fn exact_bandwidth(g: &Graph, max_n: usize) -> Result<BandwidthResult> {
    let limit = max_n.min(MASK_MAX_N);
    let components = g.components();
    if let Some(big) = components.iter().find(|c| c.len() > limit) {
        return Err(Error::TooLarge {
            what: "exact bandwidth (per component)",
            n: big.len(),
            max: limit,
        });
    }
    let mut order = Vec::with_capacity(g.n());
    let mut value = 0;
    for comp in &components {
        let h = g.induced_subgraph(comp);
        let (k, local) = solve_connected(&h);
        value = value.max(k);
        order.extend(local.into_iter().map(|t| comp[t]));
    }
    let ordering = VertexOrdering::new(order).expect("components partition the vertex set");
    debug_assert_eq!(ordering_width(g, &ordering), value);
    Ok(BandwidthResult {
        value,
        ordering,
        lower_bounds: lower_bounds(g),
    })
}

fn solve_connected(h: &Graph) -> (usize, Vec<usize>) {
    let n = h.n();
    if n <= 1 {
        return (0, (0..n).collect());
    }
    let start = lower_bounds(h).max().max(1);
    for k in start..n {
        if let Some(order) = Decider::new(h, k).run() {
            return (k, order);
        }
    }
    unreachable!("every ordering of {n} vertices has width at most {}", n - 1)
}

struct Decider<'a> {
    g: &'a Graph,
    n: usize,
    k: usize,
    pos: Vec<usize>,
    order: Vec<usize>,
    placed: u64,
    failed: HashSet<(u64, Vec<u8>)>,
}

const NO_DEADLINE: usize = usize::MAX;

impl<'a> Decider<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        Decider {
            g,
            n: g.n(),
            k,
            pos: vec![usize::MAX; g.n()],
            order: Vec::with_capacity(g.n()),
            placed: 0,
            failed: HashSet::new(),
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        self.extend().then_some(self.order)
    }

    /// Latest admissible position of each unplaced vertex.
    fn deadlines(&self) -> Vec<usize> {
        (0..self.n)
            .map(|x| {
                if self.placed >> x & 1 == 1 {
                    return NO_DEADLINE;
                }
                bits::mask_ones(self.g.mask(x) & self.placed)
                    .map(|u| self.pos[u] + self.k)
                    .min()
                    .unwrap_or(NO_DEADLINE)
            })
            .collect()
    }

    /// Can the unplaced vertices still be given distinct positions from `p`
    /// onwards that respect their deadlines?
    fn schedulable(deadlines: &[usize], p: usize) -> bool {
        let mut slack: Vec<usize> = deadlines
            .iter()
            .filter(|&&d| d != NO_DEADLINE)
            .map(|&d| d.wrapping_sub(p))
            .collect();
        slack.sort_unstable();
        // the t-th most urgent vertex needs a position within slack t
        slack.iter().enumerate().all(|(t, &s)| s < usize::MAX / 2 && t <= s)
    }

    fn extend(&mut self) -> bool {
        let p = self.order.len();
        if p == self.n {
            return true;
        }
        let deadlines = self.deadlines();
        let key = (
            self.placed,
            deadlines
                .iter()
                .map(|&d| if d == NO_DEADLINE { u8::MAX } else { (d - p) as u8 })
                .collect::<Vec<u8>>(),
        );
        if self.failed.contains(&key) {
            return false;
        }
        // a vertex due now must be placed now
        let forced = (0..self.n).find(|&x| deadlines[x] == p);
        for w in 0..self.n {
            if self.placed >> w & 1 == 1 || forced.is_some_and(|f| f != w) {
                continue;
            }
            self.place(w, p);
            let ok = Self::schedulable(&self.deadlines(), p + 1) && self.extend();
            if ok {
                return true;
            }
            self.unplace(w);
        }
        self.failed.insert(key);
        false
    }

    fn place(&mut self, w: usize, p: usize) {
        self.pos[w] = p;
        self.order.push(w);
        self.placed |= 1 << w;
    }

    fn unplace(&mut self, w: usize) {
        self.pos[w] = usize::MAX;
        self.order.pop();
        self.placed &= !(1 << w);
    }
}
