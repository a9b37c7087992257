use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::verify::{verify_graph, VerificationReport, VerifyOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    All,
    Chordal,
    Powers,
}

impl Profile {
    pub fn max_vertices(self) -> usize {
        match self {
            Profile::All | Profile::Chordal => 10,
            Profile::Powers => 7,
        }
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Profile::All),
            "chordal" => Ok(Profile::Chordal),
            "powers" => Ok(Profile::Powers),
            _ => Err(Error::Invalid(format!("unknown profile {s:?} (all, chordal, powers)"))),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::All => "all",
            Profile::Chordal => "chordal",
            Profile::Powers => "powers",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FuzzOutcome {
    pub profile: Profile,
    pub seed: u64,
    pub n_max: usize,
    pub requested: usize,
    pub reports: Vec<VerificationReport>,
    /// Index of the first graph with a failed check; `reports` stops there.
    pub first_failure: Option<usize>,
}

impl FuzzOutcome {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

const EDGE_PROBABILITIES: [f64; 7] = [0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8];

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).expect("n checked by caller");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// A random chordal graph: a random tree with extra random edges, then the
/// fill-in of the elimination game along a random order.
pub fn random_chordal_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).expect("n checked by caller");
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).expect("in range");
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p / 3.0) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut alive = g.vertices();
    for &v in &order {
        alive.remove(v);
        let later: Vec<usize> = (g.neighbors(v) & alive).iter().collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                g.add_edge(a, b).expect("in range");
            }
        }
    }
    g
}

/// Generates `count` graphs with `2 ≤ n ≤ n_max` from `seed` and verifies them.
/// Generation is sequential, so the graph sequence and the outcome do not
/// depend on the number of worker threads.
pub fn fuzz_campaign(
    n_max: usize,
    count: usize,
    seed: u64,
    profile: Profile,
    opts: VerifyOptions,
) -> Result<FuzzOutcome> {
    let cap = profile.max_vertices();
    if n_max < 2 {
        return Err(Error::Invalid("fuzzing needs n_max >= 2".into()));
    }
    if n_max > cap {
        return Err(Error::guard("fuzz vertex count", n_max, cap));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<Graph> = (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=n_max);
            let p = *EDGE_PROBABILITIES.choose(&mut rng).expect("nonempty");
            match profile {
                Profile::Chordal => random_chordal_graph(&mut rng, n, p),
                _ => random_graph(&mut rng, n, p),
            }
        })
        .collect();
    let opts = VerifyOptions {
        include_powers: profile == Profile::Powers,
        ..opts
    };
    let mut reports = graphs
        .par_iter()
        .map(|g| verify_graph(g, opts))
        .collect::<Result<Vec<_>>>()?;
    let first_failure = reports.iter().position(|r| !r.passed());
    if let Some(i) = first_failure {
        reports.truncate(i + 1);
    }
    Ok(FuzzOutcome {
        profile,
        seed,
        n_max,
        requested: count,
        reports,
        first_failure,
    })
}
