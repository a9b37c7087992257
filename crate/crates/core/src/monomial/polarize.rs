use super::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};

/// A squarefree ideal in an enlarged ring obtained by splitting powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    /// Variables added beyond the source ring.
    pub new_var_count: usize,
    /// `var_map[i]`: the enlarged-ring copies of source variable `i`,
    /// consecutive and starting with the one standing for `x_i` itself.
    pub var_map: Vec<Vec<usize>>,
}

impl Polarization {
    /// Collapses split copies back onto their source variable.
    pub fn depolarize(&self, m: &Monomial) -> Monomial {
        let mut exps = vec![0; self.var_map.len()];
        for (i, copies) in self.var_map.iter().enumerate() {
            exps[i] = copies.iter().map(|&c| m.exponents()[c]).sum();
        }
        Monomial::from_exponents(exps)
    }
}

/// Replaces each `x_i^e` by `x_{i,1} ⋯ x_{i,e}`.
pub fn polarize(ideal: &MonomialIdeal) -> Result<Polarization> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let copies: Vec<usize> = ideal.max_exponents().iter().map(|&e| (e as usize).max(1)).collect();
    let mut var_map = Vec::with_capacity(copies.len());
    let mut next = 0;
    for &c in &copies {
        var_map.push((next..next + c).collect::<Vec<_>>());
        next += c;
    }
    let total = next;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut exps = vec![0u32; total];
            for (i, &e) in g.exponents().iter().enumerate() {
                for &c in &var_map[i][..e as usize] {
                    exps[c] = 1;
                }
            }
            Monomial::from_exponents(exps)
        })
        .collect();
    Ok(Polarization {
        ideal: MonomialIdeal::minimalize(total, gens),
        new_var_count: total - ideal.num_vars(),
        var_map,
    })
}
