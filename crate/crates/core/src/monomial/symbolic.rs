use super::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest supported symbolic exponent.
pub const SYMBOLIC_MAX_POWER: u32 = 3;

/// `I(G) = (x_u x_v : {u, v} ∈ E(G))`.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.num_vertices();
    let gens = g
        .edges()
        .into_iter()
        .map(|(u, v)| Monomial::from_support(n, 1 << u | 1 << v))
        .collect();
    MonomialIdeal::minimalize(n, gens)
}

/// `I(G)^(m)`: the intersection over minimal vertex covers `C` of `P_C^m`,
/// where `P_C` is generated by the variables in `C`. An edgeless graph gives
/// the zero ideal.
pub fn symbolic_power(g: &Graph, m: u32) -> Result<MonomialIdeal> {
    if m == 0 || m > SYMBOLIC_MAX_POWER {
        return Err(Error::Invalid(format!(
            "symbolic power exponent {m} outside 1..={SYMBOLIC_MAX_POWER}"
        )));
    }
    let n = g.num_vertices();
    if g.num_edges() == 0 {
        return Ok(MonomialIdeal::zero(n));
    }
    let mut acc: Option<MonomialIdeal> = None;
    for cover in g.minimal_vertex_covers()? {
        let prime_power = MonomialIdeal::prime(n, cover).power(m)?;
        acc = Some(match acc {
            None => prime_power,
            Some(a) => a.intersection(&prime_power)?,
        });
    }
    Ok(acc.expect("a graph with edges has a minimal cover"))
}
