/// Size guards for the exponential procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Backtracking search for a satisfying ordering.
    pub search_max_n: usize,
    /// Exact bandwidth, per connected component.
    pub bandwidth_max_n: usize,
    /// Spanning caterpillar search.
    pub caterpillar_max_n: usize,
}

/// Hard ceiling: the searches use single-word vertex masks.
pub const MASK_MAX_N: usize = 64;

pub const ENV_MAX_N: &str = "ORDERCERT_MAX_N";

impl Default for Limits {
    fn default() -> Self {
        Limits {
            search_max_n: 16,
            bandwidth_max_n: 14,
            caterpillar_max_n: 10,
        }
    }
}

impl Limits {
    /// Every guard set to `max_n`.
    pub fn uniform(max_n: usize) -> Self {
        Limits {
            search_max_n: max_n,
            bandwidth_max_n: max_n,
            caterpillar_max_n: max_n,
        }
    }

    /// Defaults, overridden by `ORDERCERT_MAX_N` when it is set to an integer.
    pub fn from_env() -> Self {
        std::env::var(ENV_MAX_N)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Limits::uniform)
            .unwrap_or_default()
    }
}
