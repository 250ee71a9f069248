//! Structural classification of a finite group against the shape of its
//! non-commuting non-generating graph, with the lemma-level property
//! suites that cross-validate both sides.

use crate::graph::{
    build_graph_with_mode, component_summary_with_mode, ComponentSummary, DistanceMatrix,
    GraphKind, GroupGraph,
};
use crate::group::{ConjClasses, FiniteGroup};
use crate::lattice::{
    all_subgroups, closure, frattini_of_p_group, is_soluble, maximal_data, quotient_is_cyclic,
    structure_report, sylow, two_generated_witness, Lattice, LatticeError, MaximalData,
    StructureReport,
};
use crate::par::ExecMode;
use crate::subgroup::SubgroupSet;
use serde::{Deserialize, Serialize};
use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("the group is abelian; the graph has no vertices to classify")]
    Abelian,
    #[error("no normal subgroup satisfies the witness hypotheses")]
    NoWitness,
    #[error("classification invariant violated for a finite group: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Everything the classifier and suites need about one group, computed
/// once: lattice, maximal data, conjugacy classes, the graph and its
/// component summary, plus lazily the full distance matrix.
pub struct GroupContext {
    pub group: FiniteGroup,
    pub classes: ConjClasses,
    pub lattice: Lattice,
    pub maximal: MaximalData,
    pub center: SubgroupSet,
    pub xi: GroupGraph,
    pub summary: ComponentSummary,
    pub structure: StructureReport,
    pub two_generated: Option<(usize, usize)>,
    /// Centers of the lattice subgroups, index-aligned.
    pub subgroup_centers: Vec<SubgroupSet>,
    mode: ExecMode,
    full_bfs: bool,
    dist: OnceCell<DistanceMatrix>,
}

impl GroupContext {
    pub fn build(
        group: FiniteGroup,
        lattice_cap: usize,
        full_bfs: bool,
        mode: ExecMode,
    ) -> Result<GroupContext, LatticeError> {
        let lattice = all_subgroups(&group, lattice_cap)?;
        let maximal = maximal_data(&group, &lattice);
        let classes = group.conjugacy_classes();
        let center = group.center();
        let xi = build_graph_with_mode(&group, GraphKind::Ncng, Some(&maximal), mode);
        let summary = component_summary_with_mode(&xi, &classes, full_bfs, mode);
        let structure = structure_report(&group, &lattice, &maximal);
        let two_generated = two_generated_witness(&group);
        let subgroup_centers = lattice
            .subgroups()
            .iter()
            .map(|h| group.center_of_subgroup(h))
            .collect();
        Ok(GroupContext {
            group,
            classes,
            lattice,
            maximal,
            center,
            xi,
            summary,
            structure,
            two_generated,
            subgroup_centers,
            mode,
            full_bfs,
            dist: OnceCell::new(),
        })
    }

    pub fn distances(&self) -> &DistanceMatrix {
        self.dist.get_or_init(|| self.xi.distance_matrix(self.mode))
    }

    /// Distance between two vertex elements through the cached matrix.
    fn d(&self, x: usize, y: usize) -> Option<u32> {
        let a = self.xi.vertex_index(x).expect("element is a vertex");
        let b = self.xi.vertex_index(y).expect("element is a vertex");
        self.distances().get(a, b)
    }

    fn is_vertex(&self, e: usize) -> bool {
        self.xi.is_vertex(e)
    }

    /// Context for a quotient group, with the same caps and mode.
    pub fn quotient_context(
        &self,
        n: &SubgroupSet,
        lattice_cap: usize,
    ) -> Result<(GroupContext, Vec<u16>), ClassifyError> {
        let (q, proj) = self
            .group
            .quotient(n)
            .map_err(|e| ClassifyError::TheoremViolation(e.to_string()))?;
        let ctx = GroupContext::build(q, lattice_cap, self.full_bfs, self.mode)?;
        Ok((ctx, proj))
    }

    pub fn center_of(&self, h: &SubgroupSet) -> SubgroupSet {
        // Reuse the per-lattice-subgroup cache when possible.
        if let Some(idx) = self
            .lattice
            .subgroups()
            .iter()
            .position(|s| s == h)
        {
            self.subgroup_centers[idx].clone()
        } else {
            self.group.center_of_subgroup(h)
        }
    }
}

// ---- Witness for the two-component characterization ---------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessChecks {
    pub q_cyclic: bool,
    pub q_irreducible: bool,
    pub phi_p_eq_zp: bool,
    pub zp_not_central: bool,
    pub r_normal: bool,
}

impl WitnessChecks {
    pub fn all(&self) -> bool {
        self.q_cyclic && self.q_irreducible && self.phi_p_eq_zp && self.zp_not_central
            && self.r_normal
    }

    pub fn failing(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.q_cyclic {
            out.push("q_cyclic");
        }
        if !self.q_irreducible {
            out.push("q_irreducible");
        }
        if !self.phi_p_eq_zp {
            out.push("phi_p_eq_zp");
        }
        if !self.zp_not_central {
            out.push("zp_not_central");
        }
        if !self.r_normal {
            out.push("r_normal");
        }
        out
    }
}

/// A candidate decomposition G = P . Q with P a normal Sylow p-subgroup
/// and Q a Sylow complement, carrying the five certification checks.
#[derive(Debug, Clone, Serialize)]
pub struct Witness22 {
    pub p: u32,
    pub q: u32,
    #[serde(skip)]
    pub sylow_p: SubgroupSet,
    #[serde(skip)]
    pub sylow_q: SubgroupSet,
    /// Unique maximal subgroup of Q when Q is cyclic, else trivial.
    #[serde(skip)]
    pub r: SubgroupSet,
    pub checks: WitnessChecks,
}

impl Witness22 {
    pub fn certified(&self) -> bool {
        self.checks.all()
    }
}

fn prime_factors(mut n: usize) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2usize;
    while d * d <= n {
        if n % d == 0 {
            out.push(d as u32);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u32);
    }
    out
}

/// Searches the primes dividing |G| for a normal Sylow subgroup with a
/// Sylow complement and reports the candidate with the most passing
/// checks (ties to the smaller prime). `None` when no such decomposition
/// exists (in particular when |G| has more or fewer than two prime
/// divisors).
pub fn two_class_witness(ctx: &GroupContext) -> Option<Witness22> {
    let g = &ctx.group;
    let primes = prime_factors(g.order());
    if primes.len() != 2 {
        return None;
    }
    let mut best: Option<Witness22> = None;
    for (p, q) in [(primes[0], primes[1]), (primes[1], primes[0])] {
        let sylow_p = sylow(g, p).expect("p divides the order");
        if !g.is_normal_subgroup(&sylow_p) {
            continue;
        }
        let sylow_q = sylow(g, q).expect("q divides the order");
        let candidate = evaluate_witness(ctx, p, q, sylow_p, sylow_q);
        let better = match &best {
            None => true,
            Some(b) => {
                let score = candidate.checks.failing().len();
                let best_score = b.checks.failing().len();
                score < best_score
            }
        };
        if better {
            best = Some(candidate);
        }
    }
    best
}

fn evaluate_witness(
    ctx: &GroupContext,
    p: u32,
    q: u32,
    sylow_p: SubgroupSet,
    sylow_q: SubgroupSet,
) -> Witness22 {
    let g = &ctx.group;
    let q_order = sylow_q.order();
    let q_gen = sylow_q
        .iter()
        .find(|&e| g.element_order(e) == q_order);
    let q_cyclic = q_gen.is_some();
    let phi_p = frattini_of_p_group(g, &sylow_p, p);
    let z_p = g.center_of_subgroup(&sylow_p);
    let phi_p_eq_zp = phi_p == z_p;
    let zp_not_central = !z_p.is_subset(&ctx.center);
    let q_irreducible = irreducible_on_frattini_quotient(g, &sylow_p, &phi_p, &sylow_q);
    let (r, r_normal) = match q_gen {
        Some(y) => {
            let r = closure(g, [g.power(y, q as u64)]);
            let normal = g.is_normal_subgroup(&r);
            (r, normal)
        }
        None => (SubgroupSet::from_elements(g.order(), [0]), false),
    };
    Witness22 {
        p,
        q,
        sylow_p,
        sylow_q,
        r,
        checks: WitnessChecks {
            q_cyclic,
            q_irreducible,
            phi_p_eq_zp,
            zp_not_central,
            r_normal,
        },
    }
}

/// No proper nontrivial subgroup of P/Phi(P) is stable under conjugation
/// by Q. Enumerates every additive subgroup of the elementary abelian
/// quotient and tests stability under Q's generators.
fn irreducible_on_frattini_quotient(
    g: &FiniteGroup,
    p_sub: &SubgroupSet,
    phi_p: &SubgroupSet,
    q_sub: &SubgroupSet,
) -> bool {
    // Coset structure of P/Phi(P).
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps: Vec<usize> = Vec::new();
    for e in p_sub.iter() {
        if coset_of[e] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(e);
        for h in phi_p.iter() {
            coset_of[g.mul(h, e)] = id;
        }
    }
    let v = reps.len();
    if v <= 2 {
        return true; // only trivial subgroups exist
    }
    let add = |a: usize, b: usize| coset_of[g.mul(reps[a], reps[b])];
    // Enumerate subgroups of the quotient by closing subsets.
    let mut subgroups: Vec<Vec<bool>> = Vec::new();
    let mut trivial = vec![false; v];
    trivial[0] = true;
    subgroups.push(trivial);
    let mut head = 0;
    while head < subgroups.len() {
        let base = subgroups[head].clone();
        for extend in 1..v {
            if base[extend] {
                continue;
            }
            let mut span = base.clone();
            let mut stack = vec![extend];
            span[extend] = true;
            while let Some(x) = stack.pop() {
                for y in 0..v {
                    if span[y] {
                        let s = add(x, y);
                        if !span[s] {
                            span[s] = true;
                            stack.push(s);
                        }
                    }
                }
            }
            if !subgroups.contains(&span) {
                subgroups.push(span);
            }
        }
        head += 1;
    }
    // Q acts on the quotient by conjugation; use a small generating set.
    let q_gens = minimal_gens_of(g, q_sub);
    let full = v;
    for w in &subgroups {
        let size = w.iter().filter(|&&b| b).count();
        if size == 1 || size == full {
            continue;
        }
        let stable = q_gens.iter().all(|&t| {
            (0..v).all(|c| !w[c] || w[coset_of[g.conjugate(reps[c], t)]])
        });
        if stable {
            return false;
        }
    }
    true
}

fn minimal_gens_of(g: &FiniteGroup, h: &SubgroupSet) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut have = SubgroupSet::empty(g.order());
    have.insert(FiniteGroup::IDENTITY);
    while have.order() < h.order() {
        let next = h.iter().find(|&e| !have.contains(e)).expect("closed set");
        gens.push(next);
        have = closure(g, gens.iter().copied());
    }
    gens
}

/// The witness exactly when all five certification checks hold.
pub fn assumption_22g(ctx: &GroupContext) -> Option<Witness22> {
    two_class_witness(ctx).filter(|w| w.certified())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumTwoResult {
    /// Graph side: exactly two components, both of diameter 2, no isolated
    /// vertices.
    pub graph_side: bool,
    /// Structure side: a fully certified witness exists.
    pub witness_side: bool,
}

impl SumTwoResult {
    pub fn agree(&self) -> bool {
        self.graph_side == self.witness_side
    }
}

/// Computes both sides of the two-component characterization
/// independently and reports whether they agree.
pub fn sumtwo_crosscheck(ctx: &GroupContext) -> SumTwoResult {
    let s = &ctx.summary;
    let graph_side = s.component_count() == 2
        && s.isolated_count == 0
        && s.diameters.iter().all(|&d| d == 2);
    let witness_side = assumption_22g(ctx).is_some();
    SumTwoResult {
        graph_side,
        witness_side,
    }
}

// ---- Main classification -------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseLabel {
    #[serde(rename = "T12-i")]
    IsolatedNdTwo,
    #[serde(rename = "T12-ii")]
    QuotientIsolated,
    #[serde(rename = "T12-iii")]
    ConnectedSmallDiameter,
    #[serde(rename = "T12-iv")]
    ConnectedDiameterFour,
    #[serde(rename = "T12-v")]
    TwoComponents,
    #[serde(rename = "no-edge")]
    NoEdge,
    #[serde(rename = "out-of-scope-simple-quotient")]
    OutOfScopeSimpleQuotient,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseLabel::IsolatedNdTwo => "T12-i",
            CaseLabel::QuotientIsolated => "T12-ii",
            CaseLabel::ConnectedSmallDiameter => "T12-iii",
            CaseLabel::ConnectedDiameterFour => "T12-iv",
            CaseLabel::TwoComponents => "T12-v",
            CaseLabel::NoEdge => "no-edge",
            CaseLabel::OutOfScopeSimpleQuotient => "out-of-scope-simple-quotient",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for CaseLabel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "T12-i" => CaseLabel::IsolatedNdTwo,
            "T12-ii" => CaseLabel::QuotientIsolated,
            "T12-iii" => CaseLabel::ConnectedSmallDiameter,
            "T12-iv" => CaseLabel::ConnectedDiameterFour,
            "T12-v" => CaseLabel::TwoComponents,
            "no-edge" => CaseLabel::NoEdge,
            "out-of-scope-simple-quotient" => CaseLabel::OutOfScopeSimpleQuotient,
            other => return Err(format!("unknown case label {other:?}")),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphEvidence {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub nontrivial_components: usize,
    pub isolated_count: usize,
    /// Component diameters sorted descending.
    pub diameters: Vec<u32>,
    pub nd_diameter: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub case_label: CaseLabel,
    pub evidence: GraphEvidence,
    pub witness: Option<Witness22>,
}

fn graph_evidence(ctx: &GroupContext, nd_diameter: u32) -> GraphEvidence {
    GraphEvidence {
        vertex_count: ctx.xi.vertex_count(),
        edge_count: ctx.xi.edge_count(),
        component_count: ctx.summary.component_count(),
        nontrivial_components: ctx.summary.nontrivial_count(),
        isolated_count: ctx.summary.isolated_count,
        diameters: ctx.summary.diameters_sorted(),
        nd_diameter,
    }
}

/// Largest diameter among nontrivial components = the diameter of the
/// subgraph induced by the non-isolated vertices (components are
/// preserved by the induction).
fn nd_diameter(summary: &ComponentSummary) -> u32 {
    summary
        .components
        .iter()
        .zip(&summary.diameters)
        .filter(|(c, _)| c.len() >= 2)
        .map(|(_, &d)| d)
        .max()
        .unwrap_or(0)
}

pub fn is_simple(g: &FiniteGroup) -> bool {
    if g.order() <= 1 {
        return false;
    }
    (1..g.order()).all(|x| g.normal_closure(&[x]).order() == g.order())
}

/// Decides the classification case from the graph shape. Cases
/// `T12-ii`/`T12-iv` require infinite groups and are never produced;
/// shapes that would demand them raise `TheoremViolation`.
pub fn classify_main(ctx: &GroupContext) -> Result<ClassificationReport, ClassifyError> {
    let g = &ctx.group;
    if g.is_abelian() {
        return Err(ClassifyError::Abelian);
    }
    let nd_diam = nd_diameter(&ctx.summary);
    let evidence = graph_evidence(ctx, nd_diam);
    let (quotient, _) = g.quotient(&ctx.center).expect("center is normal");
    if is_simple(&quotient) {
        return Ok(ClassificationReport {
            case_label: CaseLabel::OutOfScopeSimpleQuotient,
            evidence,
            witness: None,
        });
    }
    let s = &ctx.summary;
    let nontrivial = s.nontrivial_count();
    if nontrivial == 0 {
        return Ok(ClassificationReport {
            case_label: CaseLabel::NoEdge,
            evidence,
            witness: None,
        });
    }
    let label = if s.isolated_count > 0 {
        if nontrivial == 1 && nd_diam == 2 {
            CaseLabel::IsolatedNdTwo
        } else {
            return Err(ClassifyError::TheoremViolation(format!(
                "isolated vertices with {nontrivial} nontrivial components of diameters {:?}",
                s.diameters_sorted()
            )));
        }
    } else if nontrivial == 1 {
        match s.max_diameter() {
            2 | 3 => CaseLabel::ConnectedSmallDiameter,
            4 => {
                return Err(ClassifyError::TheoremViolation(
                    "connected of diameter 4 is an infinite-only case".to_string(),
                ))
            }
            d => {
                return Err(ClassifyError::TheoremViolation(format!(
                    "connected with diameter {d}"
                )))
            }
        }
    } else if nontrivial == 2 && s.diameters.iter().all(|&d| d == 2) {
        CaseLabel::TwoComponents
    } else {
        return Err(ClassifyError::TheoremViolation(format!(
            "{} nontrivial components with diameters {:?}",
            nontrivial,
            s.diameters_sorted()
        )));
    };
    let witness = two_class_witness(ctx);
    Ok(ClassificationReport {
        case_label: label,
        evidence,
        witness,
    })
}

/// The label must match the attached component evidence.
pub fn report_is_consistent(report: &ClassificationReport) -> bool {
    let e = &report.evidence;
    match report.case_label {
        CaseLabel::NoEdge => e.nontrivial_components == 0,
        CaseLabel::IsolatedNdTwo => {
            e.isolated_count > 0 && e.nontrivial_components == 1 && e.nd_diameter == 2
        }
        CaseLabel::ConnectedSmallDiameter => {
            e.component_count == 1 && (e.nd_diameter == 2 || e.nd_diameter == 3)
        }
        CaseLabel::TwoComponents => {
            e.component_count == 2
                && e.isolated_count == 0
                && e.diameters.iter().all(|&d| d == 2)
        }
        CaseLabel::OutOfScopeSimpleQuotient => true,
        CaseLabel::QuotientIsolated | CaseLabel::ConnectedDiameterFour => false,
    }
}

// ---- Normal-subgroup witness and the summary-theorem verifier ----------

/// First normal subgroup (canonical order) with a non-cyclic quotient that
/// is not central, together with its centralizer.
pub fn assumption_nc_witness(ctx: &GroupContext) -> Option<(SubgroupSet, SubgroupSet)> {
    nc_witnesses(ctx).into_iter().next()
}

/// All qualifying normal subgroups, canonical order.
pub fn nc_witnesses(ctx: &GroupContext) -> Vec<(SubgroupSet, SubgroupSet)> {
    let g = &ctx.group;
    ctx.lattice
        .normal_subgroups()
        .filter(|n| !n.is_subset(&ctx.center) && !quotient_is_cyclic(g, n))
        .map(|n| {
            let c = g.centralizer_of_set(n);
            (n.clone(), c)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NcCase {
    IsolatedVertices,
    Connected,
    TwoComponents,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NcSummaryOutcome {
    pub case: NcCase,
    /// (witness order |N|, regime name, pairs checked) per qualifying N.
    pub regimes: Vec<(usize, String, usize)>,
    pub failures: Vec<String>,
}

/// Verifies the summary trichotomy for every qualifying normal subgroup:
/// the graph-shape case, its structural side conditions, and the
/// region-wise distance bounds of the applicable table.
pub fn ncsummary_verify(ctx: &GroupContext) -> Result<NcSummaryOutcome, ClassifyError> {
    let witnesses = nc_witnesses(ctx);
    if witnesses.is_empty() {
        return Err(ClassifyError::NoWitness);
    }
    let s = &ctx.summary;
    let case = if s.isolated_count > 0 {
        NcCase::IsolatedVertices
    } else if s.component_count() == 1 {
        NcCase::Connected
    } else {
        NcCase::TwoComponents
    };
    let mut failures = Vec::new();
    match case {
        NcCase::IsolatedVertices => {
            if nd_diameter(s) != 2 || s.nontrivial_count() != 1 {
                failures.push("isolated case: nd not connected of diameter 2".to_string());
            }
            if !ctx.structure.is_soluble {
                failures.push("isolated case: group not soluble".to_string());
            }
        }
        NcCase::Connected => {
            let d = s.max_diameter();
            if !(2..=3).contains(&d) {
                failures.push(format!(
                    "connected case: diameter {d} outside 2..3 for a finite group"
                ));
            }
        }
        NcCase::TwoComponents => {
            if s.component_count() != 2 || s.diameters.iter().any(|&d| d != 2) {
                failures.push("two-component case: shape is not two diameter-2 components".into());
            }
        }
    }
    // Final clause: the two-component case holds iff the certified witness
    // exists.
    let witness_side = assumption_22g(ctx).is_some();
    if (case == NcCase::TwoComponents) != witness_side {
        failures.push(format!(
            "final clause: two-component case = {}, certified witness = {}",
            case == NcCase::TwoComponents,
            witness_side
        ));
    }
    let mut regimes = Vec::new();
    for (n, c) in &witnesses {
        let (regime, pairs) = verify_regime(ctx, case, n, c, &mut failures);
        regimes.push((n.order(), regime, pairs));
    }
    Ok(NcSummaryOutcome {
        case,
        regimes,
        failures,
    })
}

/// Region-wise distance bound table, symmetric, indexed by region.
struct BoundTable {
    name: &'static str,
    bounds: &'static [&'static [u32]],
}

const TABLE_C_ABELIAN_NOT_MAXIMAL: BoundTable = BoundTable {
    name: "table-c-abelian-not-maximal",
    // Regions: [Z(M)\Z(G), C\Z(M), M\C, G\M]
    bounds: &[
        &[2, 3, 3, 1],
        &[3, 2, 2, 3],
        &[3, 2, 2, 2],
        &[1, 3, 2, 2],
    ],
};

const TABLE_C_NONABELIAN_NOT_MAXIMAL: BoundTable = BoundTable {
    name: "table-c-nonabelian-not-maximal",
    // Regions: [Z(M)\Z(G), Z(C)\Z(M), C\Z(C), M\C, G\M]; finite bound 3
    // replaces the general 4 in the (C\Z(C), Z(M)\Z(G)) cell.
    bounds: &[
        &[2, 2, 3, 3, 1],
        &[2, 2, 2, 2, 3],
        &[3, 2, 2, 2, 3],
        &[3, 2, 2, 2, 2],
        &[1, 3, 3, 2, 2],
    ],
};

const TABLE_C_NONABELIAN_MAXIMAL: BoundTable = BoundTable {
    name: "table-c-nonabelian-maximal",
    // Regions: [Z(C)\Z(G), C\Z(C), G\C]; finite bounds 3 replace the
    // general 4 entries.
    bounds: &[&[2, 3, 1], &[3, 2, 3], &[1, 3, 2]],
};

fn verify_regime(
    ctx: &GroupContext,
    case: NcCase,
    n: &SubgroupSet,
    c: &SubgroupSet,
    failures: &mut Vec<String>,
) -> (String, usize) {
    let g = &ctx.group;
    let gc_cyclic = quotient_is_cyclic(g, c);
    if !gc_cyclic {
        // G/C(N) non-cyclic: the graph is connected with diameter 2 or 3,
        // and any distance-3 pair has one end in C, the other outside
        // N union C, and the ends commute.
        let mut pairs = 0usize;
        if case != NcCase::Connected {
            failures.push(format!(
                "|N|={}: G/C non-cyclic but graph not connected",
                n.order()
            ));
        }
        if ctx.summary.max_diameter() > 3 {
            failures.push(format!("|N|={}: diameter exceeds 3", n.order()));
        }
        let verts = ctx.xi.vertices();
        for (i, &x) in verts.iter().enumerate() {
            for &y in &verts[i + 1.." ".len() - 1 + verts.len() - i - 1 + 0] {
                let _ = y;
                break;
            }
            let x = x as usize;
            for &y in &verts[i + 1..] {
                let y = y as usize;
                if ctx.d(x, y) == Some(3) {
                    pairs += 1;
                    let x_in_c = c.contains(x);
                    let y_in_c = c.contains(y);
                    let (inner, outer) = if x_in_c { (x, y) } else { (y, x) };
                    if !(x_in_c ^ y_in_c)
                        || n.contains(outer)
                        || c.contains(outer)
                        || !g.commutes(inner, outer)
                    {
                        failures.push(format!(
                            "|N|={}: distance-3 pair ({x},{y}) misplaced",
                            n.order()
                        ));
                    }
                }
            }
        }
        return ("gc-noncyclic".to_string(), pairs);
    }
    let c_abelian = c.is_abelian.unwrap_or_else(|| {
        let elems = c.elements();
        elems
            .iter()
            .enumerate()
            .all(|(i, &x)| elems[i + 1..].iter().all(|&y| g.commutes(x, y)))
    });
    let c_maximal = ctx.maximal.maximals.iter().any(|m| m == c);
    // The two-generated hypothesis underpins the table bounds; without it
    // the graph is connected with diameter 2 and the tables are skipped.
    if ctx.two_generated.is_none() {
        if !(ctx.summary.is_connected() && ctx.summary.max_diameter() == 2) {
            failures.push("not 2-generated but graph is not connected of diameter 2".into());
        }
        return ("not-two-generated".to_string(), 0);
    }
    if c_abelian {
        if c_maximal {
            // Isolated vertices may exist; the non-isolated subgraph is
            // connected with diameter 2, and isolated vertices lie in C\N.
            for comp in &ctx.summary.components {
                if comp.len() == 1 {
                    let v = comp[0];
                    if !c.contains(v) || n.contains(v) {
                        failures.push(format!(
                            "|N|={}: isolated vertex {v} outside C\\N",
                            n.order()
                        ));
                    }
                }
            }
            if ctx.summary.has_edge() && nd_diameter(&ctx.summary) != 2 {
                failures.push(format!(
                    "|N|={}: C abelian maximal but nd diameter != 2",
                    n.order()
                ));
            }
            ("c-abelian-maximal".to_string(), 0)
        } else {
            let z_g = &ctx.center;
            let mut checked = 0usize;
            for m in overgroup_maximals(ctx, c) {
                let z_m = ctx.center_of(&m);
                let regions = vec![
                    z_m.difference(z_g).elements(),
                    c.difference(&z_m).elements(),
                    m.difference(c).elements(),
                    SubgroupSet::full(g.order()).difference(&m).elements(),
                ];
                checked += check_table(ctx, &TABLE_C_ABELIAN_NOT_MAXIMAL, &regions, n, failures);
            }
            ("c-abelian-not-maximal".to_string(), checked)
        }
    } else if c_maximal {
        if case == NcCase::TwoComponents {
            // One component consists exactly of C \ Z(C).
            let z_c = ctx.center_of(c);
            let expected: Vec<usize> = c.difference(&z_c).elements();
            if !ctx.summary.components.iter().any(|comp| *comp == expected) {
                failures.push(format!(
                    "|N|={}: no component equals C minus its center",
                    n.order()
                ));
            }
            ("c-nonabelian-maximal-split".to_string(), 0)
        } else {
            let z_g = &ctx.center;
            let z_c = ctx.center_of(c);
            let regions = vec![
                z_c.difference(z_g).elements(),
                c.difference(&z_c).elements(),
                SubgroupSet::full(g.order()).difference(c).elements(),
            ];
            let checked = check_table(ctx, &TABLE_C_NONABELIAN_MAXIMAL, &regions, n, failures);
            ("c-nonabelian-maximal".to_string(), checked)
        }
    } else {
        if case == NcCase::TwoComponents {
            failures.push(format!(
                "|N|={}: graph split but C is not maximal",
                n.order()
            ));
        }
        let z_g = &ctx.center;
        let z_c = ctx.center_of(c);
        let mut checked = 0usize;
        for m in overgroup_maximals(ctx, c) {
            let z_m = ctx.center_of(&m);
            let regions = vec![
                z_m.difference(z_g).elements(),
                z_c.difference(&z_m).elements(),
                c.difference(&z_c).elements(),
                m.difference(c).elements(),
                SubgroupSet::full(g.order()).difference(&m).elements(),
            ];
            checked += check_table(ctx, &TABLE_C_NONABELIAN_NOT_MAXIMAL, &regions, n, failures);
        }
        ("c-nonabelian-not-maximal".to_string(), checked)
    }
}

fn overgroup_maximals(ctx: &GroupContext, c: &SubgroupSet) -> Vec<SubgroupSet> {
    ctx.maximal
        .maximals
        .iter()
        .filter(|m| c.is_subset(m) && c.order() < m.order())
        .cloned()
        .collect()
}

/// Asserts d(x, y) <= bound for every cross-region vertex pair; returns
/// the number of pairs checked.
fn check_table(
    ctx: &GroupContext,
    table: &BoundTable,
    regions: &[Vec<usize>],
    n: &SubgroupSet,
    failures: &mut Vec<String>,
) -> usize {
    let mut checked = 0usize;
    for (i, from) in regions.iter().enumerate() {
        for (j, to) in regions.iter().enumerate().skip(i) {
            let bound = table.bounds[i][j];
            for &x in from {
                if !ctx.is_vertex(x) {
                    continue;
                }
                for &y in to {
                    if y == x || !ctx.is_vertex(y) {
                        continue;
                    }
                    checked += 1;
                    match ctx.d(x, y) {
                        Some(d) if d <= bound => {}
                        other => {
                            let shown = other.map_or("inf".to_string(), |d| d.to_string());
                            failures.push(format!(
                                "{} |N|={}: d({x},{y}) = {shown} exceeds bound {bound} (regions {i},{j})",
                                table.name,
                                n.order()
                            ));
                            if failures.len() > 16 {
                                return checked;
                            }
                        }
                    }
                }
            }
        }
    }
    checked
}
