use std::collections::VecDeque;

use serde::Serialize;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest graph the brute-force separator scan accepts.
pub const BRUTEFORCE_MAX_VERTICES: usize = 16;

/// Vertex connectivity together with a minimum separator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityResult {
    pub kappa: usize,
    /// A minimum separating set; `None` exactly when the graph is complete.
    pub witness: Option<VertexSet>,
}

impl ConnectivityResult {
    fn complete(n: usize) -> Self {
        ConnectivityResult {
            kappa: n.saturating_sub(1),
            witness: None,
        }
    }
}

pub(super) fn vertex_connectivity(g: &Graph) -> Result<ConnectivityResult> {
    let n = g.num_vertices();
    if n == 0 {
        return Err(Error::Invalid("vertex connectivity of the empty graph".into()));
    }
    if g.is_complete() {
        return Ok(ConnectivityResult::complete(n));
    }

    let mut best: Option<(usize, VertexSet)> = None;
    let mut net = SplitNetwork::new(g);
    for s in 0..n {
        for t in (s + 1)..n {
            if g.has_edge(s, t) {
                continue;
            }
            let limit = best.as_ref().map_or(usize::MAX, |b| b.0);
            if let Some(cut) = net.min_separator(s, t, limit) {
                if cut.len() < limit {
                    let done = cut.is_empty();
                    best = Some((cut.len(), cut));
                    if done {
                        break;
                    }
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.0 == 0) {
            break;
        }
    }
    let (kappa, witness) = best.expect("non-complete graph has a non-adjacent pair");
    Ok(ConnectivityResult {
        kappa,
        witness: Some(witness),
    })
}

pub(super) fn vertex_connectivity_bruteforce(g: &Graph) -> Result<ConnectivityResult> {
    let n = g.num_vertices();
    if n == 0 {
        return Err(Error::Invalid("vertex connectivity of the empty graph".into()));
    }
    if n > BRUTEFORCE_MAX_VERTICES {
        return Err(Error::guard("vertex count", n, BRUTEFORCE_MAX_VERTICES));
    }
    let all = g.vertices();
    for size in 0..=n.saturating_sub(2) {
        for w in subsets_of_size(n, size) {
            let w = VertexSet(w);
            if !g.is_connected_within(all - w) {
                return Ok(ConnectivityResult {
                    kappa: size,
                    witness: Some(w),
                });
            }
        }
    }
    Ok(ConnectivityResult::complete(n))
}

/// All `k`-subsets of `0..n` as bit masks, in increasing numeric order.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let first = if k == 0 {
        0
    } else if k > n {
        u64::MAX
    } else {
        limit >> (n - k)
    };
    let mut next = if k > n { None } else { Some(first) };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let succ = (((r ^ cur) >> 2) / c) | r;
                (succ & !limit == 0).then_some(succ)
            }
        };
        Some(cur)
    })
}

/// Vertex-split flow network: vertex `v` becomes `in(v) = 2v → out(v) = 2v+1`
/// with unit capacity; graph edges become infinite arcs `out(u) → in(v)`.
struct SplitNetwork<'a> {
    g: &'a Graph,
    cap: Vec<Vec<i32>>,
}

impl<'a> SplitNetwork<'a> {
    fn new(g: &'a Graph) -> Self {
        let m = 2 * g.num_vertices();
        SplitNetwork {
            g,
            cap: vec![vec![0; m]; m],
        }
    }

    fn reset(&mut self, s: usize, t: usize) {
        let n = self.g.num_vertices();
        let inf = n as i32 + 1;
        for row in &mut self.cap {
            row.iter_mut().for_each(|c| *c = 0);
        }
        for v in 0..n {
            self.cap[2 * v][2 * v + 1] = if v == s || v == t { inf } else { 1 };
            for u in self.g.neighbors(v) {
                self.cap[2 * v + 1][2 * u] = inf;
            }
        }
    }

    /// Minimum `s`–`t` vertex separator, or `None` once the flow reaches `limit`.
    fn min_separator(&mut self, s: usize, t: usize, limit: usize) -> Option<VertexSet> {
        self.reset(s, t);
        let m = self.cap.len();
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut parent = vec![usize::MAX; m];
        loop {
            if flow >= limit {
                return None;
            }
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for (y, p) in parent.iter_mut().enumerate() {
                    if *p == usize::MAX && self.cap[x][y] > 0 {
                        *p = x;
                        queue.push_back(y);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            // every augmenting path crosses a unit arc, so it carries one unit
            let mut y = sink;
            while y != source {
                let x = parent[y];
                self.cap[x][y] -= 1;
                self.cap[y][x] += 1;
                y = x;
            }
            flow += 1;
        }
        // vertices whose in-node is reachable but out-node is not
        let reach = |x: usize| parent[x] != usize::MAX;
        let cut: VertexSet = (0..self.g.num_vertices())
            .filter(|&v| reach(2 * v) && !reach(2 * v + 1))
            .collect();
        debug_assert_eq!(cut.len(), flow);
        Some(cut)
    }
}
