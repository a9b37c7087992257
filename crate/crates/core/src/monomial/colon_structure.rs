use super::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The closed form of `(I(H)^2 : x_i x_j)` for `H = g_c − a` and an edge
/// `{i, j}` of `H`:
///
/// `I(H) + (x_p x_q : p ∈ N_H(i), q ∈ N_H(j), p ≠ q) + (x_k^2 : k ∈ N_H(i) ∩ N_H(j))`.
///
/// The ideal lives in the ring of `g_c`; deleted vertices simply do not occur.
pub fn colon_square_structure(g_c: &Graph, a: VertexSet, i: usize, j: usize) -> Result<MonomialIdeal> {
    let n = g_c.num_vertices();
    if i >= n || j >= n || !g_c.has_edge(i, j) {
        return Err(Error::Invalid(format!("{{{}, {}}} is not an edge", i + 1, j + 1)));
    }
    if a.contains(i) || a.contains(j) {
        return Err(Error::Invalid("deleted set contains an endpoint of the edge".into()));
    }
    if !a.is_subset(g_c.neighbors(i) | g_c.neighbors(j)) {
        return Err(Error::Invalid(format!("{a} is not inside N({}) ∪ N({})", i + 1, j + 1)));
    }

    let h = delete_keeping_labels(g_c, a);
    let ni = h.neighbors(i);
    let nj = h.neighbors(j);
    let mut gens = super::edge_ideal(&h).generators().to_vec();
    for p in ni {
        for q in nj {
            if p != q {
                gens.push(Monomial::from_support(n, 1 << p | 1 << q));
            }
        }
    }
    for k in ni & nj {
        let mut m = Monomial::one(n);
        m.exps[k] = 2;
        gens.push(m);
    }
    Ok(MonomialIdeal::minimalize(n, gens))
}

/// `g − a` with the deleted vertices left in place as isolated vertices.
pub(crate) fn delete_keeping_labels(g: &Graph, a: VertexSet) -> Graph {
    let mut h = g.clone();
    for v in a {
        for u in g.neighbors(v) {
            h.remove_edge(u, v);
        }
    }
    h
}
