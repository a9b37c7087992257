use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Vertex-count ceiling for cover enumeration.
pub const COVERS_MAX_VERTICES: usize = 20;

/// Minimal vertex covers are complements of maximal independent sets, i.e.
/// of maximal cliques of the complement; those come from Bron–Kerbosch
/// with pivoting.
pub(super) fn minimal_vertex_covers(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.num_vertices();
    if n > COVERS_MAX_VERTICES {
        return Err(Error::guard("vertex count", n, COVERS_MAX_VERTICES));
    }
    let comp = g.complement();
    let mut independent = Vec::new();
    bron_kerbosch(
        &comp,
        VertexSet::EMPTY,
        g.vertices(),
        VertexSet::EMPTY,
        &mut independent,
    );
    let all = g.vertices();
    let mut covers: Vec<VertexSet> = independent.into_iter().map(|s| all - s).collect();
    covers.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.to_labels().cmp(&b.to_labels())));
    covers.dedup();
    Ok(covers)
}

fn bron_kerbosch(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| (g.neighbors(u) & p).len())
        .expect("p ∪ x nonempty");
    for v in p - g.neighbors(pivot) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r.with(v), p & nv, x & nv, out);
        p.remove(v);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[usize]) -> VertexSet {
        labels.iter().map(|&l| l - 1).collect()
    }

    #[test]
    fn triangle() {
        let g = Graph::complete(3).unwrap();
        assert_eq!(
            g.minimal_vertex_covers().unwrap(),
            vec![set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]
        );
    }

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.minimal_vertex_covers().unwrap(), vec![set(&[1]), set(&[2])]);
    }

    #[test]
    fn four_cycle() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.minimal_vertex_covers().unwrap(), vec![set(&[1, 3]), set(&[2, 4])]);
    }

    #[test]
    fn edgeless_graph_has_the_empty_cover() {
        let g = Graph::empty(3).unwrap();
        assert_eq!(g.minimal_vertex_covers().unwrap(), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn agrees_with_brute_force_scan() {
        // path plus pendant triangle
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (4, 5)]).unwrap();
        let edges = g.edges();
        let covers_edges = |m: u64| edges.iter().all(|&(u, v)| (m >> u | m >> v) & 1 == 1);
        let mut expected: Vec<VertexSet> = (0u64..64)
            .filter(|&m| covers_edges(m))
            .filter(|&m| VertexSet(m).iter().all(|v| !covers_edges(m & !(1 << v))))
            .map(VertexSet)
            .collect();
        expected.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.to_labels().cmp(&b.to_labels())));
        assert_eq!(g.minimal_vertex_covers().unwrap(), expected);
    }

    #[test]
    fn guard() {
        assert!(Graph::empty(21).unwrap().minimal_vertex_covers().is_err());
    }
}
