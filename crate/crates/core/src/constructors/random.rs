//! Seeded random instances for property testing.
//!
//! Every generator is a pure function of its parameters and seed. Batches
//! derive the seed of instance `i` as `root.wrapping_add(i)`, so serial and
//! parallel batch runs see the same instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructors::graph::{cycle_matroid, graph_connectivity, graph_rank, Graph};
use crate::constructors::matroid::{binary_matroid, free_matroid, uniform_matroid};
use crate::constructors::matroid::{polymatroid_from_subsets, SubsetFamily};
use crate::ground::{GroundSet, Subset};
use crate::ops;
use crate::rat::{int, ratio, Rat};
use crate::setfn::SetFunction;

/// Default cap on generated ground-set sizes.
pub const DEFAULT_MAX_N: usize = 12;

pub fn instance_seed(root: u64, index: u64) -> u64 {
    root.wrapping_add(index)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Labels `e0, e1, ...`.
pub fn element_labels(n: usize) -> GroundSet {
    GroundSet::new((0..n).map(|i| format!("e{i}"))).expect("generated labels are valid")
}

/// A multigraph with `edges` edges on at most `vertices` vertices; loops and
/// parallel edges occur. Vertices meeting no edge are dropped.
pub fn random_graph(edges: usize, vertices: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let vertices = vertices.max(1);
    let names: Vec<String> = (0..vertices).map(|i| format!("v{i}")).collect();
    let edge_list: Vec<(String, String, String)> = (0..edges)
        .map(|i| {
            let u = rng.gen_range(0..vertices);
            // loops are kept rare so most edges join distinct vertices
            let v = if vertices == 1 || rng.gen_bool(0.1) {
                u
            } else {
                (u + rng.gen_range(1..vertices)) % vertices
            };
            (format!("e{i}"), names[u].clone(), names[v].clone())
        })
        .collect();
    Graph::new(names, edge_list)
        .expect("generated graph is well formed")
        .without_isolated()
}

/// A random multigraph with `n` edges and a random number of vertices.
pub fn random_multigraph(n: usize, seed: u64) -> Graph {
    random_graph_for(n, &mut rng(seed))
}

fn random_graph_for(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let vertices = rng.gen_range(1..=n.max(1) + 1);
    random_graph(n, vertices, rng.gen())
}

/// A loopless random multigraph with `n` edges.
pub fn random_loopless_graph(n: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let vertices = rng.gen_range(2..=n.max(1) + 2);
    let names: Vec<String> = (0..vertices).map(|i| format!("v{i}")).collect();
    let edge_list: Vec<(String, String, String)> = (0..n)
        .map(|i| {
            let u = rng.gen_range(0..vertices);
            let v = (u + rng.gen_range(1..vertices)) % vertices;
            (format!("e{i}"), names[u].clone(), names[v].clone())
        })
        .collect();
    Graph::new(names, edge_list)
        .expect("generated graph is well formed")
        .without_isolated()
}

/// Each element covers a random subset of a universe; `r(X)` is the size of the union.
pub fn random_coverage_polymatroid(n: usize, universe: usize, seed: u64) -> SetFunction {
    let mut rng = rng(seed);
    let universe = universe.min(24);
    let members = (0..n)
        .map(|i| (format!("e{i}"), Subset(rng.gen_range(0..1u32 << universe))))
        .collect();
    coverage(universe, members)
}

fn coverage(universe: usize, members: Vec<(String, Subset)>) -> SetFunction {
    let base = GroundSet::new((0..universe).map(|i| format!("p{i}"))).expect("valid labels");
    let family = SubsetFamily::from_masks(base.clone(), members).expect("members inside base");
    polymatroid_from_subsets(&free_matroid(base), &family).expect("free matroid")
}

/// A random matroid rank function: uniform, graphic or binary.
pub fn random_matroid(n: usize, seed: u64) -> SetFunction {
    let mut rng = rng(seed);
    let ground = element_labels(n);
    match rng.gen_range(0..3) {
        0 => uniform_matroid(rng.gen_range(0..=n), ground).expect("rank at most n"),
        1 => cycle_matroid(&random_graph_for(n, &mut rng))
            .relabel(ground)
            .expect("same size"),
        _ => {
            let rows = rng.gen_range(1..=n.max(1));
            let columns: Vec<u64> = (0..n).map(|_| rng.gen_range(0..1u64 << rows)).collect();
            binary_matroid(&columns, ground).expect("one column per element")
        }
    }
}

/// A random loopless matroid: uniform of positive rank or graphic of a loopless graph.
pub fn random_loopless_matroid(n: usize, seed: u64) -> SetFunction {
    let mut rng = rng(seed);
    let ground = element_labels(n);
    if n == 0 || rng.gen_bool(0.5) {
        uniform_matroid(rng.gen_range(n.min(1)..=n), ground).expect("rank at most n")
    } else {
        cycle_matroid(&random_loopless_graph(n, rng.gen()))
            .relabel(ground)
            .expect("same size")
    }
}

/// A random polymatroid drawn from coverage, graph-rank, matroid and
/// matroid-sum sources.
pub fn random_polymatroid(n: usize, seed: u64) -> SetFunction {
    let mut rng = rng(seed);
    let ground = element_labels(n);
    match rng.gen_range(0..4) {
        0 => {
            let universe = rng.gen_range(1..=6);
            random_coverage_polymatroid(n, universe, rng.gen())
        }
        1 => graph_rank(&random_graph_for(n, &mut rng))
            .relabel(ground)
            .expect("same size"),
        2 => random_matroid(n, rng.gen()),
        _ => {
            let a = random_matroid(n, rng.gen());
            let b = random_matroid(n, rng.gen());
            ops::sum(&a, &b).expect("same ground")
        }
    }
}

/// An integer polymatroid with every singleton value at most `k`.
pub fn random_k_polymatroid(n: usize, k: usize, seed: u64) -> SetFunction {
    let mut rng = rng(seed);
    let ground = element_labels(n);
    match rng.gen_range(0..3) {
        0 => {
            let universe = rng.gen_range(k.max(1)..=k.max(1) + 4);
            let mut points: Vec<usize> = (0..universe).collect();
            let members = (0..n)
                .map(|i| {
                    points.shuffle(&mut rng);
                    let size = rng.gen_range(0..=k.min(universe));
                    let mask = points[..size].iter().fold(Subset::EMPTY, |s, &p| s.with(p));
                    (format!("e{i}"), mask)
                })
                .collect();
            coverage(universe, members)
        }
        1 if k >= 2 => graph_rank(&random_graph_for(n, &mut rng))
            .relabel(ground)
            .expect("same size"),
        _ => (0..k).fold(SetFunction::zero(ground), |acc, _| {
            ops::sum(&acc, &random_matroid(n, rng.gen())).expect("same ground")
        }),
    }
}

/// Where a random connectivity function comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectivitySource {
    /// `λ_P` of a random coverage polymatroid.
    Coverage,
    /// `λ_G` of a random multigraph with `n` edges.
    Graph,
    /// `λ_M` of a random matroid.
    MatroidLambda,
}

impl ConnectivitySource {
    pub const ALL: [ConnectivitySource; 3] = [
        ConnectivitySource::Coverage,
        ConnectivitySource::Graph,
        ConnectivitySource::MatroidLambda,
    ];
}

pub fn random_connectivity(n: usize, seed: u64, source: ConnectivitySource) -> SetFunction {
    let mut rng = rng(seed);
    match source {
        ConnectivitySource::Coverage => {
            let universe = rng.gen_range(1..=6);
            ops::raw::connectivity(&random_coverage_polymatroid(n, universe, rng.gen()))
        }
        ConnectivitySource::Graph => {
            let g = random_graph_for(n, &mut rng);
            graph_connectivity(&g)
                .expect("isolated vertices were dropped")
                .relabel(element_labels(n))
                .expect("same size")
        }
        ConnectivitySource::MatroidLambda => ops::raw::connectivity(&random_matroid(n, rng.gen())),
    }
}

/// A random normalised table of small rationals with no structure; mostly
/// not submodular.
pub fn random_set_function(n: usize, seed: u64) -> SetFunction {
    let mut rng = rng(seed);
    let den = rng.gen_range(1..=3);
    SetFunction::from_fn(element_labels(n), |s| {
        if s.is_empty() {
            int(0)
        } else {
            ratio(rng.gen_range(0..=3 * n as i64 + 3), den)
        }
    })
}

/// `f` with one non-empty entry nudged by a small nonzero rational.
pub fn perturb(f: &SetFunction, seed: u64) -> SetFunction {
    if f.is_empty() {
        return f.clone();
    }
    let mut rng = rng(seed);
    let target = rng.gen_range(1..f.ground().table_len());
    let delta: Rat = ratio([-2, -1, 1, 2][rng.gen_range(0..4)], rng.gen_range(1..=2));
    let mut table = f.table().to_vec();
    table[target] += delta;
    SetFunction::from_table(f.ground().clone(), table).expect("same length")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check;
    use crate::constructors::matroid::matroid_check;

    #[test]
    fn generators_are_deterministic() {
        for seed in [0, 1, 99] {
            assert_eq!(
                random_coverage_polymatroid(5, 3, seed),
                random_coverage_polymatroid(5, 3, seed)
            );
            assert_eq!(random_polymatroid(6, seed), random_polymatroid(6, seed));
            assert_eq!(random_graph(5, 4, seed), random_graph(5, 4, seed));
            for source in ConnectivitySource::ALL {
                assert_eq!(
                    random_connectivity(5, seed, source),
                    random_connectivity(5, seed, source)
                );
            }
        }
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(random_coverage_polymatroid(0, 3, 7), SetFunction::empty());
        for source in ConnectivitySource::ALL {
            assert_eq!(random_connectivity(0, 7, source), SetFunction::empty());
        }
        let one = random_coverage_polymatroid(1, 3, 11);
        let v = one.singleton(0);
        assert!(*v >= int(0) && *v <= int(3));
    }

    #[test]
    fn generated_objects_have_their_contracts() {
        for seed in 0..40 {
            let n = (seed % 7) as usize;
            assert!(check::check_polymatroid(&random_polymatroid(n, seed)).holds());
            assert!(matroid_check(&random_matroid(n, seed)).holds());
            let m = random_loopless_matroid(n, seed);
            assert!(matroid_check(&m).holds());
            assert!((0..n).all(|i| *m.singleton(i) == int(1)));
            for k in 1..=3 {
                let r = random_k_polymatroid(n, k, seed);
                assert!(check::check_polymatroid(&r).holds());
                assert!(check::check_singleton_bound(&r, &int(k as i64)).holds());
                assert!(check::check_integer_valued(&r).holds());
            }
            for source in ConnectivitySource::ALL {
                let lambda = random_connectivity(n, seed, source);
                assert!(check::check_connectivity_function(&lambda).holds());
                assert_eq!(lambda.len(), n);
            }
        }
    }

    #[test]
    fn perturbation_changes_exactly_one_value() {
        let f = random_polymatroid(4, 3);
        let g = perturb(&f, 5);
        let diffs = f
            .table()
            .iter()
            .zip(g.table())
            .filter(|(a, b)| a != b)
            .count();
        assert_eq!(diffs, 1);
        assert_eq!(f.value(Subset::EMPTY), g.value(Subset::EMPTY));
    }

    #[test]
    fn seeds_are_offset_from_the_root() {
        assert_eq!(instance_seed(10, 5), 15);
        assert_eq!(instance_seed(u64::MAX, 1), 0);
    }
}
