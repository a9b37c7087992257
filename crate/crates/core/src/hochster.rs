//! Graded Betti numbers of Stanley–Reisner rings by Hochster's formula
//!
//! `β_{i,j}(K[Δ]) = Σ_{|W| = j} dim H̃_{j−i−1}(Δ|_W; K)`,
//!
//! and the invariants read off from it: projective dimension, depth (by
//! Auslander–Buchsbaum), vertex connectivity, and the depth of arbitrary
//! monomial quotients after polarization.
//!
//! Restrictions `Δ|_W` are independent jobs and are spread over the current
//! rayon pool; results are merged by addition, so the output does not depend
//! on the worker count.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{NonFacePresentation, SimplicialComplex, MAX_FACES};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::connectivity::subsets_of_size;
use crate::graph::{Graph, VertexSet};
use crate::homology::{betti_from_layers, BettiVector};
use crate::monomial::{polarize, MonomialIdeal};

/// Size ceilings for the exponential scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Guards {
    /// Largest universe for Betti tables and Stanley–Reisner depth.
    pub max_vars: usize,
    /// Largest polarized ring for depths of non-squarefree quotients.
    pub max_polarized_vars: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_vars: 14,
            max_polarized_vars: 16,
        }
    }
}

/// `β_{i,j}` of `K[Δ]` over a fixed field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, usize), usize>,
}

#[derive(Serialize)]
struct BettiEntry {
    i: usize,
    j: usize,
    beta: usize,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<BettiEntry> = self
            .entries
            .iter()
            .map(|(&(i, j), &beta)| BettiEntry { i, j, beta })
            .collect();
        rows.serialize(s)
    }
}

impl BettiTable {
    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β_{i,j})`, ordered by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn depth(&self) -> usize {
        self.n - self.projective_dimension()
    }

    /// Largest `j − i` with a nonzero entry.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|(&(a, _), _)| a == i).map(|(_, &b)| b).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,j,beta\n");
        for ((i, j), b) in self.entries() {
            let _ = writeln!(s, "{i},{j},{b}");
        }
        s
    }

    /// Betti diagram with rows `j − i` and columns `i`, dots for zeros.
    pub fn to_diagram(&self) -> String {
        let pd = self.projective_dimension();
        let reg = self.regularity();
        let cell = |x: usize| if x == 0 { ".".to_string() } else { x.to_string() };
        let mut cols: Vec<Vec<String>> = Vec::new();
        for i in 0..=pd {
            let mut col = vec![i.to_string(), self.total(i).to_string()];
            for r in 0..=reg {
                col.push(cell(self.get(i, i + r)));
            }
            cols.push(col);
        }
        let width = cols.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
        let labels: Vec<String> = std::iter::once(String::new())
            .chain(std::iter::once("total:".to_string()))
            .chain((0..=reg).map(|r| format!("{r}:")))
            .collect();
        let lw = labels.iter().map(|l| l.len()).max().unwrap_or(0);
        let mut s = String::new();
        for (row, label) in labels.iter().enumerate() {
            let _ = write!(s, "{label:>lw$}");
            for col in &cols {
                let _ = write!(s, " {:>width$}", col[row]);
            }
            s.push('\n');
        }
        s
    }
}

/// A restriction `Δ|_W` with `H̃_ℓ(Δ|_W) ≠ 0`, attaining `pd = |W| − ℓ − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthWitness {
    pub w: VertexSet,
    pub ell: isize,
    /// Size of the ring `W` lives in (the polarized ring for monomial quotients).
    pub ring_vars: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthResult {
    pub num_vars: usize,
    pub depth: usize,
    pub projective_dimension: usize,
    pub witness: DepthWitness,
}

fn check_guard(n: usize, limit: usize, what: &'static str) -> Result<()> {
    if n > limit {
        Err(Error::guard(what, n, limit))
    } else {
        Ok(())
    }
}

fn presentation(c: &SimplicialComplex) -> Result<NonFacePresentation> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(NonFacePresentation::new(c.universe_size(), &c.minimal_nonfaces()))
}

/// Homology of `Δ|_W` up to `H̃_{max_ell}` (all of it when `max_ell` is `None`).
fn restricted_homology(
    p: &NonFacePresentation,
    w: u64,
    max_ell: Option<isize>,
    field: FieldSpec,
) -> Result<BettiVector> {
    if p.cone_apex_within(w).is_some() {
        return Ok(BettiVector::default());
    }
    let max_size = max_ell.map_or(usize::MAX, |l| (l + 2).max(0) as usize);
    let layers = p.faces_within(w, max_size, MAX_FACES)?;
    let complete = layers.len() <= max_size;
    Ok(betti_from_layers(&layers, field, complete))
}

/// The full graded Betti table of `K[Δ]`; `2^n` restrictions.
pub fn graded_betti_table(c: &SimplicialComplex, field: FieldSpec, guards: Guards) -> Result<BettiTable> {
    let n = c.universe_size();
    check_guard(n, guards.max_vars, "universe size")?;
    let p = presentation(c)?;
    let entries = (0..1u64 << n)
        .into_par_iter()
        .map(|w| -> Result<Vec<((usize, usize), usize)>> {
            let j = w.count_ones() as usize;
            let h = restricted_homology(&p, w, None, field)?;
            Ok(h.iter()
                .filter(|&(_, d)| d > 0)
                .map(|(ell, d)| (((j as isize - ell - 1) as usize, j), d))
                .collect())
        })
        .try_fold(BTreeMap::new, |mut acc, part| {
            for (k, d) in part? {
                *acc.entry(k).or_insert(0) += d;
            }
            Ok::<_, Error>(acc)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (k, d) in b {
                *a.entry(k).or_insert(0) += d;
            }
            Ok(a)
        })?;
    Ok(BettiTable { n, entries })
}

/// `depth K[Δ] = n − max{|W| − ℓ − 1 : H̃_ℓ(Δ|_W) ≠ 0}`.
///
/// Sizes of `W` are scanned from large to small and only the homology that
/// could beat the running maximum is computed.
pub fn depth_stanley_reisner(c: &SimplicialComplex, field: FieldSpec, guards: Guards) -> Result<DepthResult> {
    let n = c.universe_size();
    check_guard(n, guards.max_vars, "universe size")?;
    let p = presentation(c)?;
    let ghosts = c.ghost_vertices().len();

    // (pd, W, ℓ); W = ∅ with H̃_{-1}({∅}) gives pd 0
    let mut best: (usize, u64, isize) = (0, 0, -1);
    for s in (1..=n).rev() {
        // a W with a vertex has ℓ ≥ 0; only all-ghost W reach ℓ = −1
        let bound = if s <= ghosts { s } else { s - 1 };
        if bound <= best.0 {
            break;
        }
        let max_ell = s as isize - 2 - best.0 as isize;
        let found = subsets_of_size(n, s)
            .par_bridge()
            .map(|w| -> Result<Option<(usize, u64, isize)>> {
                let h = restricted_homology(&p, w, Some(max_ell), field)?;
                Ok(h.lowest_nonzero()
                    .filter(|&l| l <= max_ell)
                    .map(|l| ((s as isize - l - 1) as usize, w, l)))
            })
            .try_reduce(
                || None,
                |a, b| {
                    Ok(match (a, b) {
                        (None, x) | (x, None) => x,
                        // larger pd wins, then the numerically smaller W
                        (Some(x), Some(y)) => Some(if (x.0, std::cmp::Reverse(x.1)) >= (y.0, std::cmp::Reverse(y.1)) {
                            x
                        } else {
                            y
                        }),
                    })
                },
            )?;
        if let Some(f) = found {
            if f.0 > best.0 {
                best = f;
            }
        }
    }
    let (pd, w, ell) = best;
    Ok(DepthResult {
        num_vars: n,
        depth: n - pd,
        projective_dimension: pd,
        witness: DepthWitness {
            w: VertexSet(w),
            ell,
            ring_vars: n,
        },
    })
}

/// Vertex connectivity read from Hochster's formula: the least `|W|` with
/// `H̃_0(Δ(G)|_{V∖W}) ≠ 0` and `|W| ≤ n − 2`, else `n − 1`.
pub fn kappa_via_betti(g: &Graph, field: FieldSpec) -> Result<usize> {
    let n = g.num_vertices();
    if n < 2 {
        return Err(Error::Invalid("connectivity via Betti numbers needs n ≥ 2".into()));
    }
    let p = NonFacePresentation::from_graph(g);
    let all = g.vertices().bits();
    for size in 0..=n - 2 {
        for w in subsets_of_size(n, size) {
            let h = restricted_homology(&p, all & !w, Some(0), field)?;
            if h.get(0) != 0 {
                return Ok(size);
            }
        }
    }
    Ok(n - 1)
}

/// `β_{n−i, n−i+1}(K[Δ(G)])` computed directly from the restrictions to
/// `(n − i + 1)`-subsets.
pub fn linear_strand_entry(g: &Graph, i: usize, field: FieldSpec) -> Result<usize> {
    let n = g.num_vertices();
    if i > n || i == 0 {
        return Ok(0);
    }
    let p = NonFacePresentation::from_graph(g);
    let mut total = 0;
    for w in subsets_of_size(n, n - i + 1) {
        total += restricted_homology(&p, w, Some(0), field)?.get(0);
    }
    Ok(total)
}

/// Depth of `S/I` for a proper monomial ideal, via its polarization `T/J`:
/// `depth S/I = depth T/J − (#new variables)`.
pub fn depth_monomial_quotient(ideal: &MonomialIdeal, field: FieldSpec, guards: Guards) -> Result<DepthResult> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let pol = polarize(ideal)?;
    let total = pol.ideal.num_vars();
    check_guard(total, guards.max_polarized_vars, "polarized variable count")?;
    let complex = SimplicialComplex::from_squarefree_ideal(&pol.ideal)?;
    let inner = Guards {
        max_vars: guards.max_polarized_vars,
        ..guards
    };
    let r = depth_stanley_reisner(&complex, field, inner)?;
    Ok(DepthResult {
        num_vars: ideal.num_vars(),
        depth: r.depth - pol.new_var_count,
        projective_dimension: r.projective_dimension,
        witness: r.witness,
    })
}

/// Depth of `S/I(G^c) = K[Δ(G)]`.
pub fn depth_of_graph(g: &Graph, field: FieldSpec, guards: Guards) -> Result<DepthResult> {
    let c = SimplicialComplex::clique_complex(g)?;
    depth_stanley_reisner(&c, field, guards)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::reduced_betti;
    use crate::monomial::{edge_ideal, symbolic_power};

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn figure_one() -> Graph {
        Graph::from_edges(6, &[(1, 4), (2, 5)]).unwrap().complement()
    }

    fn octahedron() -> Graph {
        Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap().complement()
    }

    /// Hochster's sum evaluated by restricting the explicit complex, with no
    /// pruning or shared machinery beyond `reduced_betti`.
    fn brute_betti(c: &SimplicialComplex, field: FieldSpec) -> BTreeMap<(usize, usize), usize> {
        let n = c.universe_size();
        let mut out = BTreeMap::new();
        for w in 0..1u64 << n {
            let r = c.restrict(VertexSet(w)).unwrap();
            let j = w.count_ones() as usize;
            for (ell, d) in reduced_betti(&r, field).iter() {
                if d > 0 {
                    *out.entry(((j as isize - ell - 1) as usize, j)).or_insert(0) += d;
                }
            }
        }
        out
    }

    #[test]
    fn betti_table_of_c4() {
        let c = SimplicialComplex::clique_complex(&cycle(4)).unwrap();
        let t = graded_betti_table(&c, FieldSpec::GF2, Guards::default()).unwrap();
        let expected: BTreeMap<_, _> = [((0, 0), 1), ((1, 2), 2), ((2, 4), 1)].into_iter().collect();
        assert_eq!(brute_betti(&c, FieldSpec::GF2), expected);
        assert_eq!(t.entries, expected);
        assert_eq!(t.to_csv(), "i,j,beta\n0,0,1\n1,2,2\n2,4,1\n");
    }

    #[test]
    fn betti_table_of_complete_graph() {
        let c = SimplicialComplex::clique_complex(&Graph::complete(5).unwrap()).unwrap();
        let t = graded_betti_table(&c, FieldSpec::GF2, Guards::default()).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 1)]);
        assert_eq!(t.depth(), 5);
    }

    #[test]
    fn betti_table_of_figure_one() {
        let c = SimplicialComplex::clique_complex(&figure_one()).unwrap();
        let t = graded_betti_table(&c, FieldSpec::GF2, Guards::default()).unwrap();
        assert_eq!(t.get(1, 2), 2);
        // complete intersection of two quadrics
        assert_eq!(
            t.entries().collect::<Vec<_>>(),
            vec![((0, 0), 1), ((1, 2), 2), ((2, 4), 1)]
        );
        assert_eq!(t.entries, brute_betti(&c, FieldSpec::GF2));
    }

    #[test]
    fn diagram_layout() {
        let c = SimplicialComplex::clique_complex(&cycle(4)).unwrap();
        let t = graded_betti_table(&c, FieldSpec::GF2, Guards::default()).unwrap();
        assert_eq!(
            t.to_diagram(),
            "       0 1 2\ntotal: 1 2 1\n    0: 1 . .\n    1: . 2 .\n    2: . . 1\n"
        );
    }

    #[test]
    fn depths_of_named_graphs() {
        let g = Guards::default();
        let f = FieldSpec::GF2;
        assert_eq!(depth_of_graph(&figure_one(), f, g).unwrap().depth, 4);
        assert_eq!(depth_of_graph(&cycle(6), f, g).unwrap().depth, 2);
        assert_eq!(depth_of_graph(&Graph::complete(4).unwrap(), f, g).unwrap().depth, 4);
        assert_eq!(depth_of_graph(&octahedron(), f, g).unwrap().depth, 3);
    }

    #[test]
    fn depth_agrees_with_table_and_witness_is_real() {
        for graph in [cycle(5), cycle(6), figure_one(), octahedron(), Graph::empty(4).unwrap()] {
            let c = SimplicialComplex::clique_complex(&graph).unwrap();
            let d = depth_stanley_reisner(&c, FieldSpec::GF2, Guards::default()).unwrap();
            let t = graded_betti_table(&c, FieldSpec::GF2, Guards::default()).unwrap();
            assert_eq!(d.projective_dimension, t.projective_dimension(), "{graph:?}");
            assert_eq!(d.depth + d.projective_dimension, d.num_vars);
            let r = c.restrict(d.witness.w).unwrap();
            assert_ne!(reduced_betti(&r, FieldSpec::GF2).get(d.witness.ell), 0);
            assert_eq!(
                d.witness.w.len() as isize - d.witness.ell - 1,
                d.projective_dimension as isize
            );
        }
    }

    #[test]
    fn kappa_from_betti() {
        let f = FieldSpec::GF2;
        assert_eq!(kappa_via_betti(&cycle(6), f).unwrap(), 2);
        assert_eq!(kappa_via_betti(&figure_one(), f).unwrap(), 4);
        let disconnected = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(kappa_via_betti(&disconnected, f).unwrap(), 0);
        assert_eq!(kappa_via_betti(&Graph::complete(5).unwrap(), f).unwrap(), 4);
        assert!(kappa_via_betti(&Graph::complete(1).unwrap(), f).is_err());
    }

    #[test]
    fn linear_strand_vanishing_matches_connectivity() {
        // κ(G) ≥ i iff β_{n−i,n−i+1} = 0
        let g = figure_one();
        let f = FieldSpec::GF2;
        for i in 1..=4 {
            assert_eq!(linear_strand_entry(&g, i, f).unwrap(), 0, "i = {i}");
        }
        assert_ne!(linear_strand_entry(&g, 5, f).unwrap(), 0);
    }

    #[test]
    fn depth_of_single_square() {
        let i = MonomialIdeal::parse("x1^2", 1).unwrap();
        let d = depth_monomial_quotient(&i, FieldSpec::GF2, Guards::default()).unwrap();
        assert_eq!((d.depth, d.projective_dimension), (0, 1));
    }

    #[test]
    fn depth_of_zero_ideal() {
        let d = depth_monomial_quotient(&MonomialIdeal::zero(3), FieldSpec::GF2, Guards::default()).unwrap();
        assert_eq!(d.depth, 3);
        assert_eq!(
            depth_monomial_quotient(&MonomialIdeal::unit(3), FieldSpec::GF2, Guards::default()),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn c6_power_depths() {
        let i = edge_ideal(&cycle(6).complement());
        let g = Guards::default();
        let f = FieldSpec::GF2;
        assert_eq!(depth_monomial_quotient(&i, f, g).unwrap().depth, 2);
        let sym = symbolic_power(&cycle(6).complement(), 2).unwrap();
        assert_eq!(depth_monomial_quotient(&sym, f, g).unwrap().depth, 1);
        let sq = i.power(2).unwrap();
        assert_eq!(depth_monomial_quotient(&sq, f, g).unwrap().depth, 0);
    }

    #[test]
    fn ghost_vertices_raise_projective_dimension() {
        // (x1, x2*x3) in 3 vars: S/I ≅ K[x2,x3]/(x2 x3), depth 1, pd 2
        let i = MonomialIdeal::parse("x1, x2*x3", 3).unwrap();
        let c = SimplicialComplex::from_squarefree_ideal(&i).unwrap();
        let d = depth_stanley_reisner(&c, FieldSpec::GF2, Guards::default()).unwrap();
        assert_eq!((d.depth, d.projective_dimension), (1, 2));
        let t = graded_betti_table(&c, FieldSpec::GF2, Guards::default()).unwrap();
        assert_eq!(t.projective_dimension(), 2);
        assert_eq!(t.entries, brute_betti(&c, FieldSpec::GF2));
    }

    #[test]
    fn guards_are_enforced() {
        let c = SimplicialComplex::clique_complex(&Graph::empty(15).unwrap()).unwrap();
        assert!(matches!(
            graded_betti_table(&c, FieldSpec::GF2, Guards::default()),
            Err(Error::Guard { .. })
        ));
        let relaxed = Guards {
            max_vars: 15,
            ..Guards::default()
        };
        assert!(depth_stanley_reisner(&c, FieldSpec::GF2, relaxed).is_ok());
        assert_eq!(
            depth_stanley_reisner(&SimplicialComplex::void(2), FieldSpec::GF2, Guards::default()),
            Err(Error::VoidComplex)
        );
    }
}
