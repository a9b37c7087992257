use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::examples::Example;
use super::fuzz::random_graph;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::Graph;
use crate::hochster::{depth_stanley_reisner, Guards};

pub const SEARCH_MAX_VERTICES: usize = 10;
pub const EXHAUSTIVE_MAX_VERTICES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub kappa: usize,
    pub source: String,
    /// 1-based edges.
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub n: usize,
    pub seed: u64,
    pub budget: usize,
    pub graphs_examined: usize,
    pub depth2_graphs: usize,
    /// First depth-2 witness found for each realized connectivity, ascending.
    pub frontier: Vec<Candidate>,
    pub max_kappa: Option<usize>,
    pub cap: usize,
    pub cap_attained: bool,
    /// Depth-2 graphs whose connectivity exceeds the cap.
    pub violations: Vec<Candidate>,
}

fn edge_mask(g: &Graph) -> u64 {
    let n = g.num_vertices();
    let mut mask = 0u64;
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n).expect("n bounded");
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v).expect("in range");
            }
            bit += 1;
        }
    }
    g
}

/// Bipartite circulant on `x_0..x_{t-1}`, `y_0..y_{t-1}`: `x_i ~ y_j` iff
/// `(j − i) mod t` lies in `shifts`.
fn bipartite_circulant(t: usize, shifts: u64) -> Graph {
    let mut g = Graph::empty(2 * t).expect("n bounded");
    for i in 0..t {
        for s in 0..t {
            if shifts >> s & 1 == 1 {
                g.add_edge(i, t + (i + s) % t).expect("in range");
            }
        }
    }
    g
}

struct Pool {
    seen: HashSet<u64>,
    graphs: Vec<(Graph, String)>,
}

impl Pool {
    fn push(&mut self, g: Graph, source: impl Into<String>) {
        if self.seen.insert(edge_mask(&g)) {
            self.graphs.push((g, source.into()));
        }
    }
}

/// Looks for depth-2 graphs on `n` vertices with large connectivity.
///
/// Structured families come first, then `budget` random candidates split
/// between edge deletions from complete bipartite graphs and Erdős–Rényi
/// graphs. For `n ≤ 6` every labeled graph is examined as well.
pub fn search_depth2(n: usize, budget: usize, seed: u64, field: FieldSpec) -> Result<SearchOutcome> {
    if n < 3 {
        return Err(Error::Invalid("depth-2 search needs n >= 3".into()));
    }
    if n > SEARCH_MAX_VERTICES {
        return Err(Error::guard("search vertex count", n, SEARCH_MAX_VERTICES));
    }
    let mut pool = Pool {
        seen: HashSet::new(),
        graphs: Vec::new(),
    };
    for a in 1..=n / 2 {
        pool.push(Example::Bipartite(a, n - a).build()?, format!("K_{{{a},{}}}", n - a));
    }
    if n.is_multiple_of(2) {
        let t = n / 2;
        for shifts in 1..1u64 << t {
            pool.push(
                bipartite_circulant(t, shifts),
                format!("bipartite circulant shifts {shifts:#b}"),
            );
        }
        if t >= 5 {
            pool.push(Example::JoinedCycles(t).build()?, format!("joined cycles t={t}"));
        }
    }
    pool.push(Example::Cycle(n).build()?, format!("C_{n}"));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..budget {
        if i % 2 == 0 {
            let a = rng.gen_range(1..=n / 2);
            let mut g = Example::Bipartite(a, n - a).build()?;
            let p: f64 = rng.gen_range(0.05..0.4);
            for (u, v) in g.edges() {
                if rng.gen_bool(p) {
                    g.remove_edge(u, v);
                }
            }
            pool.push(g, "bipartite deletion");
        } else {
            let p: f64 = rng.gen_range(0.2..0.9);
            pool.push(random_graph(&mut rng, n, p), "random");
        }
    }
    if n <= EXHAUSTIVE_MAX_VERTICES {
        let pairs = n * (n - 1) / 2;
        for mask in 0..1u64 << pairs {
            pool.push(graph_from_mask(n, mask), "exhaustive");
        }
    }

    let evaluated = pool
        .graphs
        .par_iter()
        .map(|(g, _)| -> Result<Option<usize>> {
            let kappa = g.vertex_connectivity()?.kappa;
            if kappa == 0 || g.is_complete() {
                return Ok(None);
            }
            let c = SimplicialComplex::clique_complex(g)?;
            let d = depth_stanley_reisner(&c, field, Guards::default())?.depth;
            Ok((d == 2).then_some(kappa))
        })
        .collect::<Result<Vec<_>>>()?;

    let cap = (2 * n - 2) / 3;
    let mut frontier: Vec<Candidate> = Vec::new();
    let mut violations = Vec::new();
    let mut depth2_graphs = 0;
    for ((g, source), kappa) in pool.graphs.iter().zip(evaluated) {
        let Some(kappa) = kappa else { continue };
        depth2_graphs += 1;
        let candidate = || Candidate {
            kappa,
            source: source.clone(),
            edges: g.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect(),
        };
        if kappa > cap {
            violations.push(candidate());
        }
        if !frontier.iter().any(|c| c.kappa == kappa) {
            frontier.push(candidate());
        }
    }
    frontier.sort_by_key(|c| c.kappa);
    let max_kappa = frontier.last().map(|c| c.kappa);
    Ok(SearchOutcome {
        n,
        seed,
        budget,
        graphs_examined: pool.graphs.len(),
        depth2_graphs,
        frontier,
        max_kappa,
        cap,
        cap_attained: max_kappa == Some(cap),
        violations,
    })
}
