use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use super::bounds::{bounds, BoundSet};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::connectivity::BRUTEFORCE_MAX_VERTICES;
use crate::graph::{Graph, VertexSet};
use crate::hochster::{depth_monomial_quotient, depth_stanley_reisner, kappa_via_betti, linear_strand_entry, Guards};
use crate::homology::reduced_betti;
use crate::monomial::{edge_ideal, symbolic_power};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn verdict(name: &'static str, ok: bool, detail: String) -> Self {
        Check {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        }
    }

    fn skipped(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            status: Status::Skipped,
            detail: detail.into(),
        }
    }
}

/// Wall-clock milliseconds per phase. Only filled on request, since the
/// rest of a report is reproducible byte for byte.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timings {
    pub connectivity_ms: f64,
    pub depth_ms: f64,
    pub powers_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub edge_count: usize,
    /// 1-based edges of the input graph.
    pub edges: Vec<[usize; 2]>,
    pub field: FieldSpec,
    pub kappa: usize,
    pub separator: Option<VertexSet>,
    pub is_chordal: bool,
    pub depth: usize,
    pub projective_dimension: usize,
    pub depth_symbolic_square: Option<usize>,
    pub depth_square: Option<usize>,
    /// Absent for complete graphs.
    pub bounds: Option<BoundSet>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for [u, v] in &self.edges {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    pub const CSV_HEADER: &'static str = "n,edges,kappa,chordal,depth,depth_symbolic_square,depth_square,upper,lower_depth,lower_symbolic,lower_square,status";

    pub fn csv_line(&self) -> String {
        let opt = |x: Option<usize>| x.map_or(String::new(), |v| v.to_string());
        let b = |f: fn(&BoundSet) -> i64| self.bounds.as_ref().map_or(String::new(), |s| f(s).to_string());
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.edge_count,
            self.kappa,
            self.is_chordal,
            self.depth,
            opt(self.depth_symbolic_square),
            opt(self.depth_square),
            self.kappa + 1,
            b(|s| s.lower_depth),
            b(|s| s.lower_symbolic),
            b(|s| s.lower_square),
            if self.passed() { "pass" } else { "fail" }
        )
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "graph: n = {}, {} edges, field {}",
            self.n, self.edge_count, self.field
        );
        let sep = self
            .separator
            .as_ref()
            .map_or("none (complete graph)".to_string(), |w| w.to_string());
        let _ = writeln!(
            s,
            "kappa = {} (separator {sep}), chordal = {}",
            self.kappa, self.is_chordal
        );
        let _ = writeln!(s, "depth S/I(G^c) = {} (pd {})", self.depth, self.projective_dimension);
        if let Some(d) = self.depth_symbolic_square {
            let _ = writeln!(s, "depth S/I(G^c)^(2) = {d}");
        }
        if let Some(d) = self.depth_square {
            let _ = writeln!(s, "depth S/I(G^c)^2 = {d}");
        }
        if let Some(b) = &self.bounds {
            let _ = writeln!(
                s,
                "bounds: depth in [{}, {}], symbolic >= {}, square >= {}, depth-2 kappa cap {}",
                b.lower_depth, b.upper, b.lower_symbolic, b.lower_square, b.depth2_kappa_cap
            );
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = writeln!(s, "  [{tag}] {}: {}", c.name, c.detail);
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

/// Options for [`verify_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub field: FieldSpec,
    pub include_powers: bool,
    pub guards: Guards,
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            field: FieldSpec::GF2,
            include_powers: false,
            guards: Guards::default(),
            timings: false,
        }
    }
}

fn ge(name: &'static str, lhs_name: &str, lhs: i64, rhs: i64) -> Check {
    Check::verdict(name, lhs >= rhs, format!("{lhs_name} = {lhs} >= {rhs}"))
}

/// Computes every invariant of `g` and evaluates each known inequality.
/// Guard violations in the power computations become skipped checks;
/// everything else is a hard error.
pub fn verify_graph(g: &Graph, opts: VerifyOptions) -> Result<VerificationReport> {
    let n = g.num_vertices();
    if n < 2 {
        return Err(Error::Invalid("verification needs at least two vertices".into()));
    }
    let field = opts.field;
    let mut checks = Vec::new();

    let t0 = Instant::now();
    let conn = g.vertex_connectivity()?;
    let kappa = conn.kappa;
    if n <= BRUTEFORCE_MAX_VERTICES {
        let brute = g.vertex_connectivity_bruteforce()?.kappa;
        checks.push(Check::verdict(
            "kappa_flow_eq_bruteforce",
            brute == kappa,
            format!("flow {kappa}, brute force {brute}"),
        ));
    } else {
        checks.push(Check::skipped(
            "kappa_flow_eq_bruteforce",
            format!("size: n = {n} > {BRUTEFORCE_MAX_VERTICES}"),
        ));
    }
    let via_betti = kappa_via_betti(g, field)?;
    checks.push(Check::verdict(
        "kappa_via_betti_eq_kappa",
        via_betti == kappa,
        format!("Betti reading {via_betti}, graph {kappa}"),
    ));
    let connectivity_ms = t0.elapsed().as_secs_f64() * 1e3;

    let t1 = Instant::now();
    let non_edges = g.complement().num_edges();
    let beta12 = linear_strand_entry(g, n - 1, field)?;
    checks.push(Check::verdict(
        "beta_1_2_eq_complement_edges",
        beta12 == non_edges,
        format!("beta_1,2 = {beta12}, |E(G^c)| = {non_edges}"),
    ));

    let complex = SimplicialComplex::clique_complex(g)?;
    let depth = depth_stanley_reisner(&complex, field, opts.guards)?;
    let witness_ok = {
        let r = complex.restrict(depth.witness.w)?;
        reduced_betti(&r, field).get(depth.witness.ell) != 0
            && depth.witness.w.len() as isize - depth.witness.ell - 1 == depth.projective_dimension as isize
    };
    checks.push(Check::verdict(
        "auslander_buchsbaum_witness",
        witness_ok && depth.depth + depth.projective_dimension == n,
        format!(
            "W = {}, l = {}, pd = {}, depth = {}",
            depth.witness.w, depth.witness.ell, depth.projective_dimension, depth.depth
        ),
    ));
    let d = depth.depth as i64;
    checks.push(ge("depth_upper_bound", "kappa + 1", kappa as i64 + 1, d));

    let complete = g.is_complete();
    let bound_set = if complete { None } else { Some(bounds(n, kappa)?) };
    match &bound_set {
        Some(b) => checks.push(ge("depth_lower_bound", "depth", d, b.lower_depth)),
        None => checks.push(Check::skipped("depth_lower_bound", "complete graph")),
    }
    match &bound_set {
        Some(b) if depth.depth == 2 => checks.push(Check::verdict(
            "depth2_kappa_cap",
            kappa as i64 <= b.depth2_kappa_cap,
            format!("kappa = {kappa} <= {}", b.depth2_kappa_cap),
        )),
        _ => checks.push(Check::verdict("depth2_kappa_cap", true, "vacuous: depth != 2".into())),
    }
    let chordal = g.is_chordal();
    if chordal {
        checks.push(Check::verdict(
            "chordal_equality",
            depth.depth == kappa + 1,
            format!("depth = {} vs kappa + 1 = {}", depth.depth, kappa + 1),
        ));
    } else {
        checks.push(Check::verdict("chordal_equality", true, "vacuous: not chordal".into()));
    }
    let depth_ms = t1.elapsed().as_secs_f64() * 1e3;

    let t2 = Instant::now();
    let (mut depth_sym, mut depth_sq) = (None, None);
    if opts.include_powers {
        let gc = g.complement();
        let ideal = edge_ideal(&gc);
        let sym = symbolic_power(&gc, 2)?;
        let sq = ideal.power(2)?;
        checks.push(Check::verdict(
            "square_in_symbolic_in_ideal",
            sq.is_subset(&sym) && sym.is_subset(&ideal),
            format!(
                "{} / {} / {} generators",
                sq.generators().len(),
                sym.generators().len(),
                ideal.generators().len()
            ),
        ));
        let mut power_check = |name: &'static str,
                               what: &str,
                               i: &crate::MonomialIdeal,
                               lower: Option<i64>,
                               slot: &mut Option<usize>|
         -> Result<()> {
            match depth_monomial_quotient(i, field, opts.guards) {
                Ok(r) => {
                    *slot = Some(r.depth);
                    match lower {
                        Some(l) => checks.push(ge(name, what, r.depth as i64, l)),
                        None => checks.push(Check::skipped(name, "complete graph")),
                    }
                    Ok(())
                }
                Err(Error::Guard { what: w, actual, limit }) => {
                    checks.push(Check::skipped(name, format!("size: {w} {actual} > {limit}")));
                    Ok(())
                }
                Err(e) => Err(e),
            }
        };
        power_check(
            "symbolic_square_lower_bound",
            "depth S/I^(2)",
            &sym,
            bound_set.map(|b| b.lower_symbolic),
            &mut depth_sym,
        )?;
        power_check(
            "square_lower_bound",
            "depth S/I^2",
            &sq,
            bound_set.map(|b| b.lower_square),
            &mut depth_sq,
        )?;
    }
    let powers_ms = t2.elapsed().as_secs_f64() * 1e3;

    Ok(VerificationReport {
        n,
        edge_count: g.num_edges(),
        edges: g.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect(),
        field,
        kappa,
        separator: conn.witness,
        is_chordal: chordal,
        depth: depth.depth,
        projective_dimension: depth.projective_dimension,
        depth_symbolic_square: depth_sym,
        depth_square: depth_sq,
        bounds: bound_set,
        checks,
        notes: Vec::new(),
        timings: opts.timings.then_some(Timings {
            connectivity_ms,
            depth_ms,
            powers_ms,
        }),
    })
}
