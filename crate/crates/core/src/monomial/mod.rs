//! Monomial ideals in `K[x_1, …, x_n]` held by their minimal generators.
//!
//! Text form: generators separated by commas or newlines, each a product
//! like `x1^2*x3` (caret optional for exponent one); `1` is the unit monomial.

mod colon_structure;
mod polarize;
mod symbolic;

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub use colon_structure::colon_square_structure;
pub use polarize::{polarize, Polarization};
pub use symbolic::{edge_ideal, symbolic_power, SYMBOLIC_MAX_POWER};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The squarefree monomial `∏_{v ∈ mask} x_v`.
    pub fn from_support(n: usize, mask: u64) -> Self {
        Monomial {
            exps: (0..n).map(|v| (mask >> v & 1) as u32).collect(),
        }
    }

    pub fn var(n: usize, v: usize) -> Self {
        let mut m = Monomial::one(n);
        m.exps[v] = 1;
        m
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Support as a bit mask; needs at most 64 variables.
    pub fn support(&self) -> Result<u64> {
        if self.exps.len() > MAX_VERTICES {
            return Err(Error::guard("variable count", self.exps.len(), MAX_VERTICES));
        }
        Ok(self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (v, _)| m | 1 << v))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        same_ring(self.num_vars(), other.num_vars())?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| {
                a.checked_add(*b)
                    .ok_or_else(|| Error::Invalid("exponent overflow".into()))
            })
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    /// Parses `x1^2*x3`-style text in `n` variables.
    pub fn parse(text: &str, n: usize) -> Result<Monomial> {
        let text = text.trim();
        let mut m = Monomial::one(n);
        if text == "1" {
            return Ok(m);
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (v.trim(), e.trim()),
                None => (factor, "1"),
            };
            let idx: usize = var
                .strip_prefix('x')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| Error::parse(format!("{text:?}"), format!("bad variable {var:?}")))?;
            if idx == 0 || idx > n {
                return Err(Error::parse(
                    format!("{text:?}"),
                    format!("variable x{idx} outside x1..x{n}"),
                ));
            }
            let e: u32 = exp
                .parse()
                .map_err(|_| Error::parse(format!("{text:?}"), format!("bad exponent {exp:?}")))?;
            m.exps[idx - 1] = m.exps[idx - 1]
                .checked_add(e)
                .ok_or_else(|| Error::Invalid("exponent overflow".into()))?;
        }
        Ok(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, &e) in self.exps.iter().enumerate().filter(|(_, &e)| e > 0) {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", v + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Descending lexicographic order on exponent vectors (`x1 > x2 > …`).
fn lex_desc(a: &Monomial, b: &Monomial) -> Ordering {
    b.exps.cmp(&a.exps)
}

fn same_ring(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch(a, b))
    }
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens` and sorts them.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.num_vars() != n) {
            return Err(Error::RingMismatch(n, g.num_vars()));
        }
        Ok(Self::minimalize(n, gens))
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    pub(crate) fn minimalize(n: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| lex_desc(a, b)));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort_by(lex_desc);
        MonomialIdeal { n, gens: kept }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Largest exponent of each variable among the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(&g.exps) {
                *o = (*o).max(e);
            }
        }
        out
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        same_ring(self.n, other.n)?;
        Ok(Self::minimalize(
            self.n,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        ))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        same_ring(self.n, other.n)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        Ok(Self::minimalize(self.n, gens))
    }

    /// `self^m`; `self^0` is the unit ideal.
    pub fn power(&self, m: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..m {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(self : m)`, generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        same_ring(self.n, m.num_vars())?;
        Ok(Self::minimalize(
            self.n,
            self.gens.iter().map(|g| g.quotient_by_gcd(m)).collect(),
        ))
    }

    /// `self ∩ other`, generated by pairwise lcms.
    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        same_ring(self.n, other.n)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self::minimalize(self.n, gens))
    }

    /// The ideal generated by the variables in `vars`.
    pub fn prime(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        Self::minimalize(n, vars.into_iter().map(|v| Monomial::var(n, v)).collect())
    }

    /// Parses generators separated by commas or newlines; `#` starts a
    /// comment line. An empty input or `0` is the zero ideal.
    pub fn parse(text: &str, n: usize) -> Result<MonomialIdeal> {
        let mut gens = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            for piece in line.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                if piece == "0" {
                    continue;
                }
                gens.push(Monomial::parse(piece, n).map_err(|e| match e {
                    Error::Parse { message, .. } => Error::parse(format!("line {}", lineno + 1), message),
                    other => other,
                })?);
            }
        }
        Ok(Self::minimalize(n, gens))
    }

    /// Like [`MonomialIdeal::parse`], taking the ring size from the largest
    /// variable index that appears (or `min_vars`, if larger).
    pub fn parse_infer(text: &str, min_vars: usize) -> Result<MonomialIdeal> {
        let mut n = min_vars;
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i] == b'x' {
                let start = i + 1;
                let mut end = start;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                if let Ok(k) = text[start..end].parse::<usize>() {
                    n = n.max(k);
                }
                i = end;
            } else {
                i += 1;
            }
        }
        Self::parse(text, n)
    }

    /// One generator per line.
    pub fn to_lines(&self) -> String {
        self.gens.iter().map(|g| format!("{g}\n")).collect()
    }

    /// The edge ideal `I(G)`.
    pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
        edge_ideal(g)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) in {} vars", self, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ideal(text: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(text, n).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let m = Monomial::parse("x1^2*x3", 3).unwrap();
        assert_eq!(m.exponents(), &[2, 0, 1]);
        assert_eq!(m.to_string(), "x1^2*x3");
        assert_eq!(Monomial::parse("1", 2).unwrap(), Monomial::one(2));
        assert!(Monomial::parse("x4", 3).is_err());
        assert!(Monomial::parse("y1", 3).is_err());
        assert!(Monomial::parse("x1^a", 3).is_err());
        let i = ideal("x1*x2\nx2*x3\n# comment\n", 3);
        assert_eq!(i.to_string(), "x1*x2, x2*x3");
        assert_eq!(i.to_lines(), "x1*x2\nx2*x3\n");
        assert!(
            matches!(MonomialIdeal::parse("x1\nx9", 3), Err(Error::Parse { location, .. }) if location == "line 2")
        );
        assert_eq!(MonomialIdeal::parse_infer("x2*x7", 0).unwrap().num_vars(), 7);
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal("x1^2, x1", 1), ideal("x1", 1));
        assert_eq!(ideal("x1*x2, x2*x3, x1*x2*x3", 3).generators().len(), 2);
        assert!(ideal("", 2).is_zero());
        assert_eq!(MonomialIdeal::new(2, vec![]).unwrap(), MonomialIdeal::zero(2));
    }

    #[test]
    fn products_and_powers() {
        let i = ideal("x1*x2, x2*x3", 3);
        assert_eq!(i.power(2).unwrap().to_string(), "x1^2*x2^2, x1*x2^2*x3, x2^2*x3^2");
        assert_eq!(i.product(&MonomialIdeal::unit(3)).unwrap(), i);
        assert!(i.product(&MonomialIdeal::zero(3)).unwrap().is_zero());
        assert_eq!(i.power(0).unwrap(), MonomialIdeal::unit(3));
        assert_eq!(i.product(&MonomialIdeal::zero(2)), Err(Error::RingMismatch(3, 2)));
    }

    #[test]
    fn colons() {
        let i = ideal("x1*x2, x2*x3", 3);
        let sq = i.power(2).unwrap();
        assert_eq!(sq.colon(&Monomial::parse("x1*x2", 3).unwrap()).unwrap(), i);
        assert_eq!(i.colon(&Monomial::one(3)).unwrap(), i);
        assert_eq!(ideal("x1^2", 1).colon(&Monomial::var(1, 0)).unwrap(), ideal("x1", 1));
        assert!(ideal("x1", 1).colon(&Monomial::var(1, 0)).unwrap().is_unit());
    }

    #[test]
    fn intersections() {
        assert_eq!(ideal("x1", 2).intersection(&ideal("x2", 2)).unwrap(), ideal("x1*x2", 2));
        let a = ideal("x1^2, x2", 2);
        assert_eq!(a.intersection(&MonomialIdeal::unit(2)).unwrap(), a);
        assert_eq!(a.intersection(&ideal("x1", 2)).unwrap(), ideal("x1^2, x1*x2", 2));
    }

    fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(prop::collection::vec(0u32..3, n), 0..5)
            .prop_map(move |gs| MonomialIdeal::minimalize(n, gs.into_iter().map(Monomial::from_exponents).collect()))
    }

    fn arb_monomial(n: usize) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..3, n).prop_map(Monomial::from_exponents)
    }

    proptest! {
        #[test]
        fn minimalize_is_idempotent_antichain(a in arb_ideal(4)) {
            let again = MonomialIdeal::minimalize(4, a.generators().to_vec());
            prop_assert_eq!(&again, &a);
            for (i, g) in a.generators().iter().enumerate() {
                for (j, h) in a.generators().iter().enumerate() {
                    prop_assert!(i == j || !g.divides(h));
                }
            }
        }

        #[test]
        fn colon_bracketing(a in arb_ideal(4), m in arb_monomial(4)) {
            let principal = MonomialIdeal::new(4, vec![m.clone()]).unwrap();
            // (a·(m) : m) ⊇ a
            let am = a.product(&principal).unwrap();
            prop_assert!(a.is_subset(&am.colon(&m).unwrap()));
            // (a : m)·(m) ⊆ a
            let back = a.colon(&m).unwrap().product(&principal).unwrap();
            prop_assert!(back.is_subset(&a));
        }

        #[test]
        fn intersection_is_contained_in_both(a in arb_ideal(3), b in arb_ideal(3)) {
            let c = a.intersection(&b).unwrap();
            prop_assert!(c.is_subset(&a));
            prop_assert!(c.is_subset(&b));
            prop_assert!(a.product(&b).unwrap().is_subset(&c));
        }
    }
}
