//! Reduced simplicial homology over a field, from boundary-matrix ranks.

use serde::Serialize;

use crate::complex::{lex_cmp, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{rank, IntMatrix};

/// `dims[k] = dim H̃_{k-1}`, starting at `H̃_{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct BettiVector {
    dims: Vec<usize>,
}

impl BettiVector {
    /// `dim H̃_ℓ`; zero outside the stored range.
    pub fn get(&self, ell: isize) -> usize {
        usize::try_from(ell + 1)
            .ok()
            .and_then(|k| self.dims.get(k).copied())
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `(ℓ, dim H̃_ℓ)` for every stored `ℓ`.
    pub fn iter(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims.iter().enumerate().map(|(k, &d)| (k as isize - 1, d))
    }

    /// Lowest `ℓ` with `H̃_ℓ ≠ 0`.
    pub fn lowest_nonzero(&self) -> Option<isize> {
        self.iter().find(|&(_, d)| d > 0).map(|(l, _)| l)
    }

    /// `Σ (−1)^ℓ dim H̃_ℓ`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(l, d)| if l.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// `∂_ℓ`: rows are the `(ℓ−1)`-faces, columns the `ℓ`-faces, both in
/// lexicographic order. Removing the vertex in position `k` carries sign
/// `(−1)^k`; `∂_0` is the augmentation onto the empty face.
pub fn boundary_matrix(c: &SimplicialComplex, ell: usize) -> Result<IntMatrix> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    let ell = ell as isize;
    Ok(boundary_between(c.faces_of_dim(ell - 1), c.faces_of_dim(ell)))
}

/// Boundary map from `upper` (faces with `k` vertices) to `lower` (faces
/// with `k − 1` vertices), both lexicographically sorted.
pub(crate) fn boundary_between(lower: &[u64], upper: &[u64]) -> IntMatrix {
    let mut m = IntMatrix::zeros(lower.len(), 0);
    for &face in upper {
        let mut col = Vec::with_capacity(face.count_ones() as usize);
        let mut rest = face;
        let mut pos = 0;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            let sub = face ^ bit;
            let row = lower
                .binary_search_by(|f| lex_cmp(*f, sub))
                .expect("complex is downward closed");
            col.push((row, if pos % 2 == 0 { 1 } else { -1 }));
            pos += 1;
        }
        m.push_column(col);
    }
    m
}

/// Reduced Betti numbers of a complex presented by its face layers
/// (`layers[k]` = faces with `k` vertices). Only `H̃_ℓ` with
/// `ℓ + 2 < layers.len()` or `ℓ + 2 == layers.len()` with no faces above are
/// exact; callers truncating the layers must read only the low range.
pub(crate) fn betti_from_layers(layers: &[Vec<u64>], field: FieldSpec, complete: bool) -> BettiVector {
    if layers.is_empty() {
        return BettiVector::default();
    }
    let top = layers.len();
    // ranks[k] = rank of the map from layer k to layer k-1
    let mut ranks = vec![0usize; top + 1];
    for k in 1..top {
        ranks[k] = rank(&boundary_between(&layers[k - 1], &layers[k]), field);
    }
    let exact_layers = if complete { top } else { top - 1 };
    let dims = (0..exact_layers)
        .map(|k| layers[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    BettiVector { dims }
}

/// `dim H̃_ℓ(Δ; K)` for every `ℓ`. The void complex has no homology; `{∅}`
/// has `H̃_{-1} = K`.
pub fn reduced_betti(c: &SimplicialComplex, field: FieldSpec) -> BettiVector {
    let layers: Vec<Vec<u64>> = (0..=c.dimension().map_or(-2, |d| d) + 1)
        .map(|k| c.faces_of_dim(k - 1).to_vec())
        .collect();
    betti_from_layers(&layers, field, true)
}
