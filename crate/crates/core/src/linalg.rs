//! Exact rank of small integer matrices over a chosen field.

use std::collections::HashMap;

use crate::field::{Field, FieldSpec};
use crate::Rational;

/// A sparse matrix with small integer entries, stored by columns.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds from a dense row-major description.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.rows);
        let column = &mut self.columns[col];
        match column.binary_search_by_key(&row, |e| e.0) {
            Ok(k) if value == 0 => {
                column.remove(k);
            }
            Ok(k) => column[k].1 = value,
            Err(_) if value == 0 => {}
            Err(k) => column.insert(k, (row, value)),
        }
    }

    pub(crate) fn push_column(&mut self, mut entries: Vec<(usize, i64)>) {
        entries.sort_unstable_by_key(|e| e.0);
        entries.retain(|e| e.1 != 0);
        debug_assert!(entries.iter().all(|e| e.0 < self.rows));
        self.columns.push(entries);
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        let column = &self.columns[col];
        column.binary_search_by_key(&row, |e| e.0).map_or(0, |k| column[k].1)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| (0..self.num_cols()).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Integer product `self * rhs`.
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.num_cols(), rhs.rows);
        let mut out = IntMatrix::zeros(self.rows, 0);
        for col in &rhs.columns {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(k, b) in col {
                for &(i, a) in &self.columns[k] {
                    *acc.entry(i).or_default() += a * b;
                }
            }
            out.push_column(acc.into_iter().collect());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }
}

/// Rank over the field named by `field`.
pub fn rank(m: &IntMatrix, field: FieldSpec) -> usize {
    match field.characteristic() {
        2 => rank_gf2(m),
        0 => rank_over::<Rational>(m),
        p => rank_mod_prime(m, p),
    }
}

/// Rank by column reduction over any [`Field`].
pub fn rank_over<F: Field>(m: &IntMatrix) -> usize {
    let mut pivots: HashMap<usize, Vec<F>> = HashMap::new();
    for column in &m.columns {
        let mut v = vec![F::zero(); m.rows];
        for &(i, x) in column {
            v[i] = F::from_i64(x).expect("integer embeds in every field");
        }
        while let Some(lead) = v.iter().position(|x| !x.is_zero()) {
            match pivots.get(&lead) {
                Some(p) => {
                    // p is normalized so p[lead] = 1
                    let factor = v[lead].clone();
                    for (a, b) in v.iter_mut().zip(p).skip(lead) {
                        *a = a.clone() - factor.clone() * b.clone();
                    }
                }
                None => {
                    let inv = F::one() / v[lead].clone();
                    for a in v.iter_mut().skip(lead) {
                        *a = a.clone() * inv.clone();
                    }
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Rank over `GF(2)` with bit-packed columns.
pub fn rank_gf2(m: &IntMatrix) -> usize {
    let words = m.rows.div_ceil(64).max(1);
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for column in &m.columns {
        let mut v = vec![0u64; words];
        for &(i, x) in column {
            if x & 1 == 1 {
                v[i / 64] ^= 1 << (i % 64);
            }
        }
        while let Some(w) = v.iter().position(|&x| x != 0) {
            let lead = w * 64 + v[w].trailing_zeros() as usize;
            match pivots.get(&lead) {
                Some(p) => {
                    for (a, b) in v.iter_mut().zip(p).skip(w) {
                        *a ^= b;
                    }
                }
                None => {
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Rank over `GF(p)` for a prime `p < 2^32` chosen at runtime.
pub fn rank_mod_prime(m: &IntMatrix, p: u64) -> usize {
    assert!((2..1 << 32).contains(&p));
    let inv = |x: u64| -> u64 {
        let (mut base, mut e, mut acc) = (x, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for column in &m.columns {
        let mut v = vec![0u64; m.rows];
        for &(i, x) in column {
            v[i] = x.rem_euclid(p as i64) as u64;
        }
        while let Some(lead) = v.iter().position(|&x| x != 0) {
            match pivots.get(&lead) {
                Some(piv) => {
                    let factor = v[lead];
                    for (a, &b) in v.iter_mut().zip(piv).skip(lead) {
                        *a = (*a + p - factor * b % p) % p;
                    }
                }
                None => {
                    let s = inv(v[lead]);
                    for a in v.iter_mut().skip(lead) {
                        *a = *a * s % p;
                    }
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Rank over the rationals; kept separate from [`rank`] for callers that
/// want the oracle explicitly.
pub fn rank_rational(m: &IntMatrix) -> usize {
    rank_over::<Rational>(m)
}

impl IntMatrix {
    /// Entries reduced into `F`, dense and row-major.
    pub fn to_field<F: Field>(&self) -> Vec<Vec<F>> {
        let mut out = vec![vec![F::zero(); self.num_cols()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, x) in col {
                out[i][j] = F::from_i64(x).expect("integer embeds in every field");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Gf2, Gf3};
    use proptest::prelude::*;

    fn identity(n: usize) -> IntMatrix {
        IntMatrix::from_rows(
            &(0..n)
                .map(|i| (0..n).map(|j| (i == j) as i64).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn identity_rank() {
        for field in [
            FieldSpec::GF2,
            FieldSpec::GF3,
            FieldSpec::RATIONAL,
            FieldSpec::new(101).unwrap(),
        ] {
            assert_eq!(rank(&identity(3), field), 3);
        }
    }

    #[test]
    fn all_ones_rank_one() {
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(rank_gf2(&m), 1);
        assert_eq!(rank_rational(&m), 1);
    }

    #[test]
    fn characteristic_matters() {
        // det = 2: singular only over GF(2)
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(rank_gf2(&m), 1);
        assert_eq!(rank_mod_prime(&m, 3), 2);
        assert_eq!(rank_rational(&m), 2);
        // det = 3
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(rank_mod_prime(&m, 3), 1);
        assert_eq!(rank_over::<Gf3>(&m), 1);
        assert_eq!(rank_gf2(&m), 2);
    }

    #[test]
    fn empty_shapes() {
        assert_eq!(rank_gf2(&IntMatrix::zeros(0, 3)), 0);
        assert_eq!(rank_rational(&IntMatrix::zeros(3, 0)), 0);
        assert_eq!(rank_mod_prime(&IntMatrix::zeros(1, 0), 5), 0);
    }

    #[test]
    fn set_and_get() {
        let mut m = IntMatrix::zeros(2, 2);
        m.set(1, 0, -1);
        m.set(0, 1, 3);
        m.set(0, 1, 0);
        assert_eq!(m.to_dense(), vec![vec![0, 0], vec![-1, 0]]);
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-2i64..=2, c), r))
    }

    proptest! {
        #[test]
        fn gf2_packed_matches_generic(rows in small_matrix()) {
            let m = IntMatrix::from_rows(&rows);
            prop_assert_eq!(rank_gf2(&m), rank_over::<Gf2>(&m));
        }

        #[test]
        fn runtime_prime_matches_const_prime(rows in small_matrix()) {
            let m = IntMatrix::from_rows(&rows);
            prop_assert_eq!(rank_mod_prime(&m, 3), rank_over::<Gf3>(&m));
            prop_assert_eq!(rank_mod_prime(&m, 7), rank_over::<crate::Fp<7>>(&m));
        }

        #[test]
        fn rank_is_transpose_invariant(rows in small_matrix()) {
            let m = IntMatrix::from_rows(&rows);
            let cols = rows[0].len();
            let t: Vec<Vec<i64>> = (0..cols).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
            let mt = IntMatrix::from_rows(&t);
            prop_assert_eq!(rank_rational(&m), rank_rational(&mt));
            prop_assert_eq!(rank_gf2(&m), rank_gf2(&mt));
        }

        #[test]
        fn rank_bounded_and_char_p_never_exceeds_rational(rows in small_matrix()) {
            let m = IntMatrix::from_rows(&rows);
            let r0 = rank_rational(&m);
            prop_assert!(r0 <= m.num_rows().min(m.num_cols()));
            prop_assert!(rank_gf2(&m) <= r0);
            prop_assert!(rank_mod_prime(&m, 5) <= r0);
        }
    }
}
