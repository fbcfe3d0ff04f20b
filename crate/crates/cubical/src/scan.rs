//! Execution of law checks over tuple domains.
//!
//! Every law suite reduces to "evaluate a pure predicate on each tuple of a
//! finite domain and collect the failures". With the `parallel` feature the
//! scan fans out over rayon; without it (or with [`ExecMode::Sequential`])
//! the same closure runs on a plain iterator. Both paths must agree — the
//! bench suite compares them on real workloads.

use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a scan runs. `Parallel` falls back to sequential execution when the
/// crate is built without the `parallel` feature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

/// Seed used when the caller does not fix one.
pub const DEFAULT_SEED: u64 = 0x5eed_cb1c;

/// Tuple budget above which exhaustive quantification switches to
/// fixed-seed uniform sampling.
pub const DEFAULT_BUDGET: u64 = 100_000;

/// Shared knobs for every law suite: execution mode, the sampling budget,
/// and the seed recorded in reports whenever sampling replaces exhaustion.
#[derive(Debug, Clone, Copy)]
pub struct CheckConfig {
    pub mode: ExecMode,
    pub budget: u64,
    pub seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            mode: ExecMode::default(),
            budget: DEFAULT_BUDGET,
            seed: DEFAULT_SEED,
        }
    }
}

impl CheckConfig {
    pub fn with_seed(seed: u64) -> Self {
        CheckConfig {
            seed,
            ..Default::default()
        }
    }
}

/// Apply `check` to every item, collecting failure witnesses.
pub fn collect_failures<T, W, F>(mode: ExecMode, items: &[T], check: F) -> Vec<W>
where
    T: Sync,
    W: Send,
    F: Fn(&T) -> Option<W> + Sync + Send,
{
    match mode {
        ExecMode::Sequential => collect_failures_seq(items, check),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                items.par_iter().filter_map(check).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                collect_failures_seq(items, check)
            }
        }
    }
}

/// Sequential scan; the parallel path must produce the same failure set.
pub fn collect_failures_seq<T, W, F>(items: &[T], check: F) -> Vec<W>
where
    F: Fn(&T) -> Option<W>,
{
    items.iter().filter_map(check).collect()
}

/// A tuple domain to quantify a law over: either the full cartesian product
/// of `0..dims[i]`, or a fixed-seed uniform sample when the product exceeds
/// the budget.
#[derive(Debug)]
pub struct TupleDomain<const K: usize> {
    pub tuples: Vec<[usize; K]>,
    /// Seed actually used; `Some` exactly when sampling replaced exhaustion.
    pub sample_seed: Option<u64>,
}

impl<const K: usize> TupleDomain<K> {
    /// Exhaustive when `dims` multiply out to at most `budget`, otherwise
    /// `budget` tuples drawn uniformly with a ChaCha stream seeded by `seed`.
    pub fn new(dims: [usize; K], budget: u64, seed: u64) -> Self {
        let total: u128 = dims.iter().map(|&d| d as u128).product();
        if total == 0 {
            return TupleDomain {
                tuples: Vec::new(),
                sample_seed: None,
            };
        }
        if total <= budget as u128 {
            let mut tuples = Vec::with_capacity(total as usize);
            let mut t = [0usize; K];
            loop {
                tuples.push(t);
                // odometer increment, last coordinate fastest
                let mut i = K;
                loop {
                    if i == 0 {
                        return TupleDomain {
                            tuples,
                            sample_seed: None,
                        };
                    }
                    i -= 1;
                    t[i] += 1;
                    if t[i] < dims[i] {
                        break;
                    }
                    t[i] = 0;
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let samplers: Vec<Uniform<usize>> = dims.iter().map(|&d| Uniform::new(0, d)).collect();
        let tuples = (0..budget)
            .map(|_| {
                let mut t = [0usize; K];
                for (i, s) in samplers.iter().enumerate() {
                    t[i] = s.sample(&mut rng);
                }
                t
            })
            .collect();
        TupleDomain {
            tuples,
            sample_seed: Some(seed),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_covers_product() {
        let d = TupleDomain::new([2, 3], 1000, 0);
        assert_eq!(d.tuples.len(), 6);
        assert!(d.sample_seed.is_none());
        assert!(d.tuples.contains(&[1, 2]));
        assert!(d.tuples.contains(&[0, 0]));
    }

    #[test]
    fn sampling_kicks_in_over_budget() {
        let d = TupleDomain::new([100, 100], 50, 7);
        assert_eq!(d.tuples.len(), 50);
        assert_eq!(d.sample_seed, Some(7));
        let again = TupleDomain::new([100, 100], 50, 7);
        assert_eq!(d.tuples, again.tuples);
    }

    #[test]
    fn empty_dimension_gives_empty_domain() {
        let d = TupleDomain::<3>::new([4, 0, 2], 10, 0);
        assert!(d.tuples.is_empty());
    }

    #[test]
    fn seq_and_par_agree() {
        let items: Vec<u32> = (0..1000).collect();
        let f = |x: &u32| if x % 97 == 3 { Some(*x) } else { None };
        let mut a = collect_failures(ExecMode::Parallel, &items, f);
        let mut b = collect_failures_seq(&items, f);
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }
}
