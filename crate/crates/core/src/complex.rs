//! Simplicial complexes on an indexed vertex universe of at most 64 vertices.
//!
//! Faces are bit masks, stored explicitly and grouped by dimension; within a
//! dimension they are kept in lexicographic order of their sorted vertex
//! lists. A universe element that is not a face is a ghost vertex. The void
//! complex (no faces) and the irrelevant complex `{∅}` are distinct.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::monomial::{Monomial, MonomialIdeal};

/// Vertex ceiling for explicit clique complexes.
pub const CLIQUE_COMPLEX_MAX_VERTICES: usize = 24;
/// Face-count ceiling for any explicitly stored complex.
pub const MAX_FACES: usize = 1 << 24;

/// Lexicographic order of the sorted vertex lists of two equal-size faces.
pub fn lex_cmp(a: u64, b: u64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let d = a ^ b;
    if a & d & d.wrapping_neg() != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    universe: usize,
    /// `faces[k]` holds the faces with `k` vertices (dimension `k - 1`).
    faces: Vec<Vec<u64>>,
}

impl SimplicialComplex {
    pub fn void(universe: usize) -> Self {
        SimplicialComplex {
            universe,
            faces: Vec::new(),
        }
    }

    /// `{∅}`: every universe element is a ghost.
    pub fn irrelevant(universe: usize) -> Self {
        SimplicialComplex {
            universe,
            faces: vec![vec![0]],
        }
    }

    /// The full simplex on the universe.
    pub fn simplex(universe: usize) -> Result<Self> {
        Self::from_minimal_nonfaces(universe, &[])
    }

    /// The complex generated by `facets` (given as vertex sets).
    pub fn from_facets(universe: usize, facets: &[VertexSet]) -> Result<Self> {
        check_universe(universe)?;
        let mut all: HashSet<u64> = HashSet::new();
        for f in facets {
            if !f.is_subset(VertexSet::full(universe)) {
                return Err(Error::Invalid(format!("facet {f} outside universe of size {universe}")));
            }
            let m = f.bits();
            // all submasks
            let mut s = m;
            loop {
                all.insert(s);
                if all.len() > MAX_FACES {
                    return Err(Error::guard("face count", all.len(), MAX_FACES));
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & m;
            }
        }
        Ok(Self::from_face_set(universe, all))
    }

    /// Faces are the sets containing none of `nonfaces`.
    pub fn from_minimal_nonfaces(universe: usize, nonfaces: &[u64]) -> Result<Self> {
        check_universe(universe)?;
        if nonfaces.contains(&0) {
            return Ok(Self::void(universe));
        }
        let p = NonFacePresentation::new(universe, nonfaces);
        let faces = p.faces_within(VertexSet::full(universe).bits(), usize::MAX, MAX_FACES)?;
        Ok(SimplicialComplex { universe, faces })
    }

    /// `Δ(G)`: all cliques of `g`, the empty set included.
    pub fn clique_complex(g: &Graph) -> Result<Self> {
        let n = g.num_vertices();
        if n > CLIQUE_COMPLEX_MAX_VERTICES {
            return Err(Error::guard("vertex count", n, CLIQUE_COMPLEX_MAX_VERTICES));
        }
        let p = NonFacePresentation::from_graph(g);
        let faces = p.faces_within(g.vertices().bits(), usize::MAX, MAX_FACES)?;
        Ok(SimplicialComplex { universe: n, faces })
    }

    /// The complex whose faces are the supports of squarefree monomials
    /// outside `ideal`. Degree-one generators become ghost vertices.
    pub fn from_squarefree_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let mut nonfaces = Vec::with_capacity(ideal.generators().len());
        for g in ideal.generators() {
            if !g.is_squarefree() {
                return Err(Error::Invalid(format!("generator {g} is not squarefree")));
            }
            nonfaces.push(g.support()?);
        }
        Self::from_minimal_nonfaces(ideal.num_vars(), &nonfaces)
    }

    fn from_face_set(universe: usize, set: HashSet<u64>) -> Self {
        let mut faces: Vec<Vec<u64>> = Vec::new();
        for f in set {
            let k = f.count_ones() as usize;
            if faces.len() <= k {
                faces.resize(k + 1, Vec::new());
            }
            faces[k].push(f);
        }
        for layer in &mut faces {
            layer.sort_unstable_by(|a, b| lex_cmp(*a, *b));
        }
        SimplicialComplex { universe, faces }
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Dimension of the largest face; `None` for the void complex, `-1` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        (!self.faces.is_empty()).then(|| self.faces.len() as isize - 2)
    }

    /// Faces of dimension `dim` (`-1` for the empty face), lexicographically ordered.
    pub fn faces_of_dim(&self, dim: isize) -> &[u64] {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.faces.get(k))
            .map_or(&[], |v| v.as_slice())
    }

    /// Face counts `f_{-1}, f_0, …`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(|l| l.len()).collect()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(|l| l.len()).sum()
    }

    pub fn faces(&self) -> impl Iterator<Item = u64> + '_ {
        self.faces.iter().flatten().copied()
    }

    pub fn contains(&self, face: u64) -> bool {
        let k = face.count_ones() as usize;
        self.faces
            .get(k)
            .is_some_and(|l| l.binary_search_by(|f| lex_cmp(*f, face)).is_ok())
    }

    /// Position of `face` within its dimension layer.
    pub fn index_of(&self, face: u64) -> Option<usize> {
        let k = face.count_ones() as usize;
        self.faces.get(k)?.binary_search_by(|f| lex_cmp(*f, face)).ok()
    }

    /// Vertices that are faces.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet(self.faces_of_dim(0).iter().fold(0, |a, f| a | f))
    }

    pub fn ghost_vertices(&self) -> VertexSet {
        VertexSet::full(self.universe) - self.vertex_set()
    }

    /// `Δ|_W`, re-indexed so that the `k`-th smallest element of `w` becomes vertex `k`.
    pub fn restrict(&self, w: VertexSet) -> Result<Self> {
        if !w.is_subset(VertexSet::full(self.universe)) {
            return Err(Error::Invalid(format!("restriction set {w} outside universe")));
        }
        let faces = self
            .faces
            .iter()
            .map(|layer| {
                let mut out: Vec<u64> = layer
                    .iter()
                    .filter(|&&f| f & !w.bits() == 0)
                    .map(|&f| compress(f, w.bits()))
                    .collect();
                out.sort_unstable_by(|a, b| lex_cmp(*a, *b));
                out
            })
            .take_while(|l| !l.is_empty())
            .collect();
        Ok(SimplicialComplex {
            universe: w.len(),
            faces,
        })
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}` on the same universe.
    pub fn link(&self, sigma: VertexSet) -> Result<Self> {
        let s = sigma.bits();
        if !self.contains(s) {
            return Err(Error::Invalid(format!("{sigma} is not a face")));
        }
        let set: HashSet<u64> = self.faces().filter(|&f| f & s == s).map(|f| f & !s).collect();
        Ok(Self::from_face_set(self.universe, set))
    }

    /// A vertex `v` with `σ ∪ {v} ∈ Δ` for every face `σ`, if any.
    pub fn cone_apex(&self) -> Option<usize> {
        let nonfaces = self.minimal_nonfaces();
        let in_nonface = nonfaces.iter().fold(0u64, |a, g| a | g);
        (self.vertex_set() - VertexSet(in_nonface)).first()
    }

    /// Inclusion-minimal non-faces within the universe.
    pub fn minimal_nonfaces(&self) -> Vec<u64> {
        if self.is_void() {
            return vec![0];
        }
        let mut out: Vec<u64> = Vec::new();
        for face in self.faces() {
            for v in VertexSet::full(self.universe) - VertexSet(face) {
                let t = face | 1 << v;
                if v < highest_bit(face) {
                    // each candidate is reached from the face missing its top vertex
                    continue;
                }
                if !self.contains(t) && VertexSet(t).iter().all(|u| self.contains(t & !(1 << u))) {
                    out.push(t);
                }
            }
        }
        out.sort_unstable_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(lex_cmp(*a, *b)));
        out
    }

    /// `I_Δ`, generated by the minimal non-faces.
    pub fn stanley_reisner_ideal(&self) -> Result<MonomialIdeal> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let gens = self
            .minimal_nonfaces()
            .into_iter()
            .map(|m| Monomial::from_support(self.universe, m))
            .collect();
        MonomialIdeal::new(self.universe, gens)
    }

    /// Faces listed one per line, grouped by dimension, vertices 1-based.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (k, layer) in self.faces.iter().enumerate() {
            let _ = writeln!(s, "# dim {}", k as isize - 1);
            for &f in layer {
                let _ = writeln!(s, "{}", VertexSet(f));
            }
        }
        s
    }

    /// Whether every face's codimension-one subsets are faces.
    pub fn is_downward_closed(&self) -> bool {
        self.faces()
            .all(|f| VertexSet(f).iter().all(|v| self.contains(f & !(1 << v))))
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SimplicialComplex(universe={}, f={:?})",
            self.universe,
            self.f_vector()
        )
    }
}

fn highest_bit(m: u64) -> usize {
    if m == 0 {
        0
    } else {
        63 - m.leading_zeros() as usize
    }
}

fn check_universe(universe: usize) -> Result<()> {
    if universe > MAX_VERTICES {
        Err(Error::guard("universe size", universe, MAX_VERTICES))
    } else {
        Ok(())
    }
}

/// Packs the bits of `f` selected by `w` into the low bits.
fn compress(f: u64, w: u64) -> u64 {
    let mut out = 0;
    for (k, v) in VertexSet(w).iter().enumerate() {
        if f >> v & 1 == 1 {
            out |= 1 << k;
        }
    }
    out
}

/// A complex given by its minimal non-faces, for enumerating faces of many
/// restrictions without materializing the whole complex.
#[derive(Debug, Clone)]
pub(crate) struct NonFacePresentation {
    /// Vertices that are faces.
    vertices: u64,
    /// `compat[v]`: vertices `u` with `{u, v}` not containing a non-face.
    compat: Vec<u64>,
    /// Non-faces with three or more vertices, indexed by each of their members.
    large: Vec<Vec<u64>>,
    /// Union of all non-faces of size at least two, per vertex.
    nonfaces: Vec<u64>,
}

impl NonFacePresentation {
    pub(crate) fn new(universe: usize, nonfaces: &[u64]) -> Self {
        let full = VertexSet::full(universe).bits();
        let mut ghosts = 0u64;
        let mut compat = vec![full; universe];
        let mut large = vec![Vec::new(); universe];
        for &g in nonfaces {
            match g.count_ones() {
                0 => {}
                1 => ghosts |= g,
                2 => {
                    let u = g.trailing_zeros() as usize;
                    let v = highest_bit(g);
                    compat[u] &= !(1 << v);
                    compat[v] &= !(1 << u);
                }
                _ => {
                    for v in VertexSet(g) {
                        large[v].push(g);
                    }
                }
            }
        }
        for (v, c) in compat.iter_mut().enumerate() {
            *c &= !ghosts & !(1 << v);
        }
        NonFacePresentation {
            vertices: full & !ghosts,
            compat,
            large,
            nonfaces: nonfaces.iter().copied().filter(|g| g.count_ones() >= 2).collect(),
        }
    }

    pub(crate) fn from_graph(g: &Graph) -> Self {
        let n = g.num_vertices();
        NonFacePresentation {
            vertices: g.vertices().bits(),
            compat: (0..n).map(|v| g.neighbors(v).bits()).collect(),
            large: vec![Vec::new(); n],
            nonfaces: g.complement().edges().iter().map(|&(u, v)| 1 << u | 1 << v).collect(),
        }
    }

    /// Some vertex of `Δ|_W` lying in no non-face inside `w`; `Δ|_W` is then a cone.
    pub(crate) fn cone_apex_within(&self, w: u64) -> Option<usize> {
        let covered = self.nonfaces.iter().filter(|&&g| g & !w == 0).fold(0u64, |a, g| a | g);
        let apexes = w & self.vertices & !covered;
        (apexes != 0).then(|| apexes.trailing_zeros() as usize)
    }

    /// Faces of `Δ|_W` with at most `max_size` vertices, grouped by size and
    /// in lexicographic order within each size.
    pub(crate) fn faces_within(&self, w: u64, max_size: usize, max_faces: usize) -> Result<Vec<Vec<u64>>> {
        let mut faces: Vec<Vec<u64>> = vec![vec![0]];
        let mut count = 1usize;
        if max_size > 0 {
            self.extend(0, w & self.vertices, 0, max_size, &mut faces, &mut count, max_faces)?;
        }
        Ok(faces)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        face: u64,
        candidates: u64,
        size: usize,
        max_size: usize,
        faces: &mut Vec<Vec<u64>>,
        count: &mut usize,
        max_faces: usize,
    ) -> Result<()> {
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let t = face | 1 << v;
            if self.large[v].iter().any(|&g| g & !t == 0) {
                continue;
            }
            if faces.len() <= size + 1 {
                faces.push(Vec::new());
            }
            faces[size + 1].push(t);
            *count += 1;
            if *count > max_faces {
                return Err(Error::guard("face count", *count, max_faces));
            }
            if size + 1 < max_size {
                self.extend(t, rest & self.compat[v], size + 1, max_size, faces, count, max_faces)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[usize]) -> VertexSet {
        labels.iter().map(|&l| l - 1).collect()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn lex_order() {
        let mut v = [
            set(&[2, 3]).bits(),
            set(&[1, 3]).bits(),
            set(&[1, 2]).bits(),
            set(&[1, 4]).bits(),
        ];
        v.sort_by(|a, b| lex_cmp(*a, *b));
        let labels: Vec<_> = v.iter().map(|&f| VertexSet(f).to_labels()).collect();
        assert_eq!(labels, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3]]);
    }

    #[test]
    fn clique_complex_of_c4() {
        let c = SimplicialComplex::clique_complex(&cycle(4)).unwrap();
        assert_eq!(c.f_vector(), vec![1, 4, 4]);
        assert_eq!(c.dimension(), Some(1));
    }

    #[test]
    fn clique_complex_of_triangle() {
        let c = SimplicialComplex::clique_complex(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(c.num_faces(), 8);
        assert_eq!(c.f_vector(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn restriction_of_c6_to_alternate_vertices() {
        let c = SimplicialComplex::clique_complex(&cycle(6)).unwrap();
        let r = c.restrict(set(&[1, 3, 5])).unwrap();
        assert_eq!(r.universe_size(), 3);
        assert_eq!(r.f_vector(), vec![1, 3]);
        assert_eq!(c.restrict(VertexSet::full(6)).unwrap(), c);
        assert_eq!(c.restrict(VertexSet::EMPTY).unwrap(), SimplicialComplex::irrelevant(0));
    }

    #[test]
    fn restriction_of_triangle_to_edge() {
        let c = SimplicialComplex::clique_complex(&Graph::complete(3).unwrap()).unwrap();
        let r = c.restrict(set(&[1, 2])).unwrap();
        assert_eq!(r, SimplicialComplex::simplex(2).unwrap());
    }

    #[test]
    fn link_of_vertex_in_c6() {
        let c = SimplicialComplex::clique_complex(&cycle(6)).unwrap();
        let l = c.link(set(&[1])).unwrap();
        assert_eq!(l.faces_of_dim(0), &[set(&[2]).bits(), set(&[6]).bits()]);
        assert_eq!(l.dimension(), Some(0));
        assert_eq!(c.link(VertexSet::EMPTY).unwrap(), c);
        assert!(c.link(set(&[1, 3])).is_err());
    }

    #[test]
    fn link_in_full_simplex() {
        let c = SimplicialComplex::simplex(3).unwrap();
        let l = c.link(set(&[1])).unwrap();
        assert_eq!(
            l.restrict(set(&[2, 3])).unwrap(),
            SimplicialComplex::simplex(2).unwrap()
        );
        assert_eq!(l.vertex_set(), set(&[2, 3]));
    }

    #[test]
    fn cones() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(SimplicialComplex::clique_complex(&star).unwrap().cone_apex(), Some(0));
        assert_eq!(SimplicialComplex::clique_complex(&cycle(6)).unwrap().cone_apex(), None);
        assert_eq!(SimplicialComplex::simplex(1).unwrap().cone_apex(), Some(0));
        assert_eq!(SimplicialComplex::irrelevant(1).cone_apex(), None);
        assert_eq!(SimplicialComplex::void(2).cone_apex(), None);
    }

    #[test]
    fn figure_one_has_triangle_246() {
        let g = Graph::from_edges(6, &[(1, 4), (2, 5)]).unwrap().complement();
        let c = SimplicialComplex::clique_complex(&g).unwrap();
        assert!(c.contains(set(&[2, 4, 6]).bits()));
        assert!(!c.contains(set(&[2, 5]).bits()));
    }

    #[test]
    fn stanley_reisner_of_c4() {
        let c = SimplicialComplex::clique_complex(&cycle(4)).unwrap();
        let i = c.stanley_reisner_ideal().unwrap();
        assert_eq!(i.to_string(), "x1*x3, x2*x4");
    }

    #[test]
    fn simplex_has_zero_ideal() {
        let i = SimplicialComplex::simplex(4).unwrap().stanley_reisner_ideal().unwrap();
        assert!(i.is_zero());
        assert_eq!(
            SimplicialComplex::void(2).stanley_reisner_ideal(),
            Err(Error::VoidComplex)
        );
    }

    #[test]
    fn from_ideal_with_ghost() {
        let i = MonomialIdeal::parse("x1", 1).unwrap();
        let c = SimplicialComplex::from_squarefree_ideal(&i).unwrap();
        assert_eq!(c, SimplicialComplex::irrelevant(1));
        assert_eq!(c.ghost_vertices(), set(&[1]));
        let z = MonomialIdeal::zero(3);
        assert_eq!(
            SimplicialComplex::from_squarefree_ideal(&z).unwrap(),
            SimplicialComplex::simplex(3).unwrap()
        );
        assert!(SimplicialComplex::from_squarefree_ideal(&MonomialIdeal::parse("x1^2", 1).unwrap()).is_err());
        assert_eq!(
            SimplicialComplex::from_squarefree_ideal(&MonomialIdeal::unit(2)),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn from_figure_one_ideal() {
        let i = MonomialIdeal::parse("x2*x5, x3*x6", 6).unwrap();
        let c = SimplicialComplex::from_squarefree_ideal(&i).unwrap();
        assert_eq!(c.vertex_set(), VertexSet::full(6));
        let bad =
            |f: u64| f & set(&[2, 5]).bits() == set(&[2, 5]).bits() || f & set(&[3, 6]).bits() == set(&[3, 6]).bits();
        for f in 0u64..64 {
            assert_eq!(c.contains(f), !bad(f), "{}", VertexSet(f));
        }
        assert_eq!(c.stanley_reisner_ideal().unwrap(), i);
    }

    #[test]
    fn from_facets_and_nonfaces_agree() {
        // boundary of a triangle plus a pendant edge
        let facets = [set(&[1, 2]), set(&[2, 3]), set(&[1, 3]), set(&[3, 4])];
        let c = SimplicialComplex::from_facets(4, &facets).unwrap();
        assert!(c.is_downward_closed());
        let d = SimplicialComplex::from_minimal_nonfaces(4, &c.minimal_nonfaces()).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn dump_format() {
        let c = SimplicialComplex::simplex(2).unwrap();
        assert_eq!(c.dump(), "# dim -1\n{}\n# dim 0\n{1}\n{2}\n# dim 1\n{1,2}\n");
    }
}
