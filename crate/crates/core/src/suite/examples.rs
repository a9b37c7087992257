use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Named graph families used throughout the checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Example {
    /// Six vertices, complement edges `{2,5}` and `{3,6}`.
    Figure1,
    /// `K_{t,t,t}`.
    Multipartite(usize),
    /// `K_{a,b}`.
    Bipartite(usize, usize),
    /// Two disjoint `t`-cycles `x_1…x_t`, `x_1'…x_t'` plus every `{x_i, x_j'}`, `i ≠ j`.
    JoinedCycles(usize),
    Cycle(usize),
    Path(usize),
    Complete(usize),
}

impl Example {
    pub fn build(self) -> Result<Graph> {
        match self {
            Example::Figure1 => {
                let edges = [
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (1, 6),
                    (2, 4),
                    (4, 6),
                    (2, 6),
                    (3, 5),
                    (1, 5),
                    (1, 3),
                    (1, 4),
                ];
                Graph::from_edges(6, &edges.map(|(u, v)| (u - 1, v - 1)))
            }
            Example::Multipartite(t) => {
                if t == 0 {
                    return Err(Error::Invalid("multipartite part size must be ≥ 1".into()));
                }
                let mut g = Graph::empty(3 * t)?;
                for u in 0..3 * t {
                    for v in (u + 1)..3 * t {
                        if u / t != v / t {
                            g.add_edge(u, v)?;
                        }
                    }
                }
                Ok(g)
            }
            Example::Bipartite(a, b) => {
                let mut g = Graph::empty(a + b)?;
                for u in 0..a {
                    for v in a..a + b {
                        g.add_edge(u, v)?;
                    }
                }
                Ok(g)
            }
            Example::JoinedCycles(t) => {
                if t < 5 {
                    return Err(Error::Invalid(format!("joined cycles need t ≥ 5, got {t}")));
                }
                let mut g = Graph::empty(2 * t)?;
                for i in 0..t {
                    g.add_edge(i, (i + 1) % t)?;
                    g.add_edge(t + i, t + (i + 1) % t)?;
                    for j in 0..t {
                        if i != j {
                            g.add_edge(i, t + j)?;
                        }
                    }
                }
                Ok(g)
            }
            Example::Cycle(t) => {
                if t < 3 {
                    return Err(Error::Invalid(format!("cycles need t ≥ 3, got {t}")));
                }
                let edges: Vec<_> = (0..t).map(|i| (i, (i + 1) % t)).collect();
                Graph::from_edges(t, &edges)
            }
            Example::Path(t) => {
                let edges: Vec<_> = (1..t).map(|i| (i - 1, i)).collect();
                Graph::from_edges(t, &edges)
            }
            Example::Complete(t) => Graph::complete(t),
        }
    }

    /// Remark attached to reports about this family, if any.
    pub fn note(self) -> Option<&'static str> {
        match self {
            Example::JoinedCycles(_) => Some(
                "joined cycles on two t-cycles have 2t vertices and connectivity t + 1; \
                 the n = 10, k = 6 instance is t = 5 with n counting all vertices",
            ),
            _ => None,
        }
    }
}

impl fmt::Display for Example {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Example::Figure1 => write!(f, "figure1"),
            Example::Multipartite(t) => write!(f, "multipartite:{t}"),
            Example::Bipartite(a, b) => write!(f, "bipartite:{a},{b}"),
            Example::JoinedCycles(t) => write!(f, "joined-cycles:{t}"),
            Example::Cycle(t) => write!(f, "cycle:{t}"),
            Example::Path(t) => write!(f, "path:{t}"),
            Example::Complete(t) => write!(f, "complete:{t}"),
        }
    }
}

impl FromStr for Example {
    type Err = Error;

    /// Accepts `family:params` (e.g. `cycle:6`, `bipartite:5,5`) and the
    /// shorthands `c6`, `k4`, `k55`, `k222`, `fig1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let bad = || Error::Invalid(format!("unknown example {s:?}"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        if let Some((family, params)) = s.split_once(':') {
            return match family {
                "multipartite" | "knnn" => Ok(Example::Multipartite(num(params)?)),
                "bipartite" | "kab" => {
                    let (a, b) = params.split_once(',').ok_or_else(bad)?;
                    Ok(Example::Bipartite(num(a)?, num(b)?))
                }
                "joined-cycles" | "joined" => Ok(Example::JoinedCycles(num(params)?)),
                "cycle" => Ok(Example::Cycle(num(params)?)),
                "path" => Ok(Example::Path(num(params)?)),
                "complete" => Ok(Example::Complete(num(params)?)),
                _ => Err(bad()),
            };
        }
        match s.as_str() {
            "figure1" | "fig1" => Ok(Example::Figure1),
            "k55" => Ok(Example::Bipartite(5, 5)),
            "k222" => Ok(Example::Multipartite(2)),
            "k333" => Ok(Example::Multipartite(3)),
            _ => {
                if let Some(rest) = s.strip_prefix('c') {
                    Ok(Example::Cycle(num(rest)?))
                } else if let Some(rest) = s.strip_prefix('p') {
                    Ok(Example::Path(num(rest)?))
                } else if let Some(rest) = s.strip_prefix('k') {
                    Ok(Example::Complete(num(rest)?))
                } else {
                    Err(bad())
                }
            }
        }
    }
}
