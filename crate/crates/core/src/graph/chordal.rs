use super::{Graph, VertexSet};

/// Maximum cardinality search; the reverse visiting order is a perfect
/// elimination ordering exactly when the graph is chordal.
pub(super) fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let n = g.num_vertices();
    let mut weight = vec![0usize; n];
    let mut numbered = VertexSet::EMPTY;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex remains");
        numbered.insert(v);
        visit.push(v);
        for u in g.neighbors(v) - numbered {
            weight[u] += 1;
        }
    }
    visit.reverse();
    is_perfect_elimination_ordering(g, &visit).then_some(visit)
}

/// Each vertex's neighbors later in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let mut later = g.vertices();
    for &v in order {
        later.remove(v);
        if !g.is_clique(g.neighbors(v) & later) {
            return false;
        }
    }
    true
}
