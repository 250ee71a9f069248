//! Graphs on the non-central elements of a finite group: the
//! non-commuting non-generating graph and its companions, with exact
//! components, diameters and distances.
//!
//! Adjacency is stored as symmetric bit-packed rows. Non-generation of a
//! pair is decided by shared membership in a maximal subgroup when maximal
//! data is available (a word-parallel AND over precomputed per-element
//! rows), and by explicit closure otherwise; the two paths agree and the
//! provenance is recorded.

use crate::group::{ConjClasses, FiniteGroup};
use crate::lattice::{closure, MaximalData};
use crate::par::{map_indexed, ExecMode};
use serde::{Deserialize, Serialize};
use std::io::{self, Write};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("element {element} is not a vertex (central or out of range)")]
    NotAVertex { element: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    /// Non-commuting AND non-generating.
    Ncng,
    Commuting,
    NonCommuting,
    Generating,
    NonGenerating,
}

impl GraphKind {
    pub fn name(&self) -> &'static str {
        match self {
            GraphKind::Ncng => "ncng",
            GraphKind::Commuting => "commuting",
            GraphKind::NonCommuting => "non_commuting",
            GraphKind::Generating => "generating",
            GraphKind::NonGenerating => "non_generating",
        }
    }

    pub fn parse(name: &str) -> Option<GraphKind> {
        Some(match name {
            "ncng" => GraphKind::Ncng,
            "commuting" => GraphKind::Commuting,
            "non_commuting" => GraphKind::NonCommuting,
            "generating" => GraphKind::Generating,
            "non_generating" => GraphKind::NonGenerating,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NonGenProvenance {
    /// Pair is non-generating iff some maximal subgroup contains both.
    MaximalMembership,
    /// Pair is non-generating iff its closure is proper.
    Closure,
    /// Kind does not involve generation.
    NotApplicable,
}

#[derive(Debug, Clone)]
pub struct GroupGraph {
    kind: GraphKind,
    group_order: usize,
    /// Element indices of the vertices, ascending.
    vertices: Vec<u16>,
    /// Element index -> vertex position, or NOT_A_VERTEX.
    vertex_of: Vec<u32>,
    words: usize,
    adj: Vec<u64>,
    provenance: NonGenProvenance,
}

const NOT_A_VERTEX: u32 = u32::MAX;

impl GroupGraph {
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn provenance(&self) -> NonGenProvenance {
        self.provenance
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Element indices of the vertices, ascending.
    pub fn vertices(&self) -> &[u16] {
        &self.vertices
    }

    pub fn is_vertex(&self, element: usize) -> bool {
        element < self.vertex_of.len() && self.vertex_of[element] != NOT_A_VERTEX
    }

    pub fn vertex_index(&self, element: usize) -> Result<usize, GraphError> {
        match self.vertex_of.get(element) {
            Some(&v) if v != NOT_A_VERTEX => Ok(v as usize),
            _ => Err(GraphError::NotAVertex { element }),
        }
    }

    pub fn element_of_vertex(&self, vertex: usize) -> usize {
        self.vertices[vertex] as usize
    }

    fn row(&self, vertex: usize) -> &[u64] {
        &self.adj[vertex * self.words..(vertex + 1) * self.words]
    }

    pub fn adjacent_vertices(&self, a: usize, b: usize) -> bool {
        self.row(a)[b >> 6] & (1u64 << (b & 63)) != 0
    }

    pub fn adjacent(&self, x: usize, y: usize) -> Result<bool, GraphError> {
        let a = self.vertex_index(x)?;
        let b = self.vertex_index(y)?;
        Ok(self.adjacent_vertices(a, b))
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.row(vertex).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.vertex_count()).map(|v| self.degree(v)).sum();
        total / 2
    }

    /// Distances from one vertex to every vertex; `u16::MAX` marks
    /// unreachable.
    pub fn bfs(&self, source: usize) -> Vec<u16> {
        let n = self.vertex_count();
        let mut dist = vec![u16::MAX; n];
        if n == 0 {
            return dist;
        }
        let words = self.words;
        let mut visited = vec![0u64; words];
        let mut frontier = vec![0u64; words];
        visited[source >> 6] |= 1 << (source & 63);
        frontier[source >> 6] |= 1 << (source & 63);
        dist[source] = 0;
        let mut level: u16 = 0;
        let mut next = vec![0u64; words];
        loop {
            level += 1;
            next.iter_mut().for_each(|w| *w = 0);
            for v in BitsOf::new(&frontier) {
                let row = self.row(v);
                for (w, &bits) in row.iter().enumerate() {
                    next[w] |= bits;
                }
            }
            let mut any = false;
            for w in 0..words {
                next[w] &= !visited[w];
                if next[w] != 0 {
                    any = true;
                    visited[w] |= next[w];
                }
            }
            if !any {
                return dist;
            }
            for v in BitsOf::new(&next) {
                dist[v] = level;
            }
            std::mem::swap(&mut frontier, &mut next);
        }
    }

    /// Exact distance between two elements; `None` means distinct
    /// components.
    pub fn distance(&self, x: usize, y: usize) -> Result<Option<u32>, GraphError> {
        let a = self.vertex_index(x)?;
        let b = self.vertex_index(y)?;
        let d = self.bfs(a)[b];
        Ok(if d == u16::MAX { None } else { Some(d as u32) })
    }

    /// Full pairwise distance matrix, vertex-indexed.
    pub fn distance_matrix(&self, mode: ExecMode) -> DistanceMatrix {
        let n = self.vertex_count();
        let rows = map_indexed(n, mode, |v| self.bfs(v));
        DistanceMatrix {
            n,
            d: rows.into_iter().flatten().collect(),
        }
    }

    /// Induced subgraph on the vertices whose element passes `keep`;
    /// vertex set shrinks, the group stays the same.
    pub fn induced_subgraph(&self, keep: impl Fn(usize) -> bool) -> GroupGraph {
        let kept: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| keep(self.element_of_vertex(v)))
            .collect();
        let vertices: Vec<u16> = kept.iter().map(|&v| self.vertices[v]).collect();
        let mut vertex_of = vec![NOT_A_VERTEX; self.group_order];
        for (i, &e) in vertices.iter().enumerate() {
            vertex_of[e as usize] = i as u32;
        }
        let words = vertices.len().div_ceil(64);
        let mut adj = vec![0u64; vertices.len() * words];
        for (i, &v) in kept.iter().enumerate() {
            for (j, &w) in kept.iter().enumerate() {
                if self.adjacent_vertices(v, w) {
                    adj[i * words + (j >> 6)] |= 1 << (j & 63);
                }
            }
        }
        GroupGraph {
            kind: self.kind,
            group_order: self.group_order,
            vertices,
            vertex_of,
            words,
            adj,
            provenance: self.provenance,
        }
    }

    /// Subgraph induced by the non-isolated vertices.
    pub fn nd_subgraph(&self) -> GroupGraph {
        let isolated: Vec<bool> = (0..self.vertex_count())
            .map(|v| self.degree(v) == 0)
            .collect();
        self.induced_subgraph(|e| {
            let v = self.vertex_of[e] as usize;
            !isolated[v]
        })
    }

    /// DOT rendering with element labels and one color per component.
    pub fn write_dot(
        &self,
        name: &str,
        labels: &[String],
        out: &mut dyn Write,
    ) -> io::Result<()> {
        const PALETTE: [&str; 8] = [
            "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf",
            "#999999",
        ];
        let comp = self.component_ids();
        writeln!(out, "graph {name} {{")?;
        writeln!(out, "  node [style=filled];")?;
        for v in 0..self.vertex_count() {
            let e = self.element_of_vertex(v);
            let color = PALETTE[comp[v] % PALETTE.len()];
            writeln!(
                out,
                "  v{e} [label=\"{}\" fillcolor=\"{color}\" comp={}];",
                escape_dot(&labels[e]),
                comp[v]
            )?;
        }
        for a in 0..self.vertex_count() {
            for b in a + 1..self.vertex_count() {
                if self.adjacent_vertices(a, b) {
                    writeln!(
                        out,
                        "  v{} -- v{};",
                        self.element_of_vertex(a),
                        self.element_of_vertex(b)
                    )?;
                }
            }
        }
        writeln!(out, "}}")
    }

    /// Row-major bit matrix with an 8-byte little-endian vertex-count
    /// header; each row is ceil(V/8) bytes, least-significant bit first.
    pub fn write_adjacency_binary(&self, out: &mut dyn Write) -> io::Result<()> {
        let n = self.vertex_count();
        out.write_all(&(n as u64).to_le_bytes())?;
        let row_bytes = n.div_ceil(8);
        let mut row = vec![0u8; row_bytes];
        for v in 0..n {
            row.iter_mut().for_each(|b| *b = 0);
            for w in BitsOf::new(self.row(v)) {
                row[w >> 3] |= 1 << (w & 7);
            }
            out.write_all(&row)?;
        }
        Ok(())
    }

    /// Component id per vertex, numbered in order of first (smallest)
    /// vertex.
    fn component_ids(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let dist = self.bfs(start);
            for (v, &d) in dist.iter().enumerate() {
                if d != u16::MAX {
                    comp[v] = count;
                }
            }
            count += 1;
        }
        comp
    }
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Iterator over set bit positions of a word slice.
struct BitsOf<'a> {
    words: &'a [u64],
    idx: usize,
    current: u64,
}

impl<'a> BitsOf<'a> {
    fn new(words: &'a [u64]) -> Self {
        BitsOf {
            words,
            idx: 0,
            current: if words.is_empty() { 0 } else { words[0] },
        }
    }
}

impl Iterator for BitsOf<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some((self.idx << 6) + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.idx];
        }
    }
}

pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    pub fn get(&self, a: usize, b: usize) -> Option<u32> {
        let d = self.d[a * self.n + b];
        if d == u16::MAX {
            None
        } else {
            Some(d as u32)
        }
    }
}

/// Builds a graph of the requested kind on the non-central elements.
/// Abelian groups yield the empty graph. When `maximal` is provided,
/// generation tests use maximal-membership rows; otherwise explicit
/// closure.
pub fn build_graph(
    g: &FiniteGroup,
    kind: GraphKind,
    maximal: Option<&MaximalData>,
) -> GroupGraph {
    build_graph_with_mode(g, kind, maximal, ExecMode::default_mode())
}

pub fn build_graph_with_mode(
    g: &FiniteGroup,
    kind: GraphKind,
    maximal: Option<&MaximalData>,
    mode: ExecMode,
) -> GroupGraph {
    let order = g.order();
    let center = g.center();
    let vertices: Vec<u16> = (0..order)
        .filter(|&e| !center.contains(e))
        .map(|e| e as u16)
        .collect();
    let mut vertex_of = vec![NOT_A_VERTEX; order];
    for (i, &e) in vertices.iter().enumerate() {
        vertex_of[e as usize] = i as u32;
    }
    let n = vertices.len();
    let words = n.div_ceil(64);

    let needs_generation = matches!(
        kind,
        GraphKind::Ncng | GraphKind::Generating | GraphKind::NonGenerating
    );
    // Per-vertex rows of maximal-subgroup membership: two elements generate
    // a proper subgroup iff their rows intersect.
    let membership: Option<Vec<Vec<u64>>> = match (needs_generation, maximal) {
        (true, Some(md)) => {
            let mwords = md.maximals.len().div_ceil(64).max(1);
            Some(map_indexed(n, mode, |v| {
                let e = vertices[v] as usize;
                let mut row = vec![0u64; mwords];
                for (m, max) in md.maximals.iter().enumerate() {
                    if max.contains(e) {
                        row[m >> 6] |= 1 << (m & 63);
                    }
                }
                row
            }))
        }
        _ => None,
    };
    let provenance = if !needs_generation {
        NonGenProvenance::NotApplicable
    } else if membership.is_some() {
        NonGenProvenance::MaximalMembership
    } else {
        NonGenProvenance::Closure
    };

    let non_generating = |a: usize, b: usize| -> bool {
        if let Some(rows) = &membership {
            rows[a]
                .iter()
                .zip(&rows[b])
                .any(|(x, y)| x & y != 0)
        } else {
            let x = vertices[a] as usize;
            let y = vertices[b] as usize;
            closure(g, [x, y]).order() < order
        }
    };

    let adj_rows: Vec<Vec<u64>> = map_indexed(n, mode, |a| {
        let x = vertices[a] as usize;
        let mut row = vec![0u64; words];
        for b in 0..n {
            if a == b {
                continue;
            }
            let y = vertices[b] as usize;
            let commutes = g.commutes(x, y);
            let edge = match kind {
                GraphKind::Commuting => commutes,
                GraphKind::NonCommuting => !commutes,
                GraphKind::Generating => !non_generating(a, b),
                GraphKind::NonGenerating => non_generating(a, b),
                GraphKind::Ncng => !commutes && non_generating(a, b),
            };
            if edge {
                row[b >> 6] |= 1 << (b & 63);
            }
        }
        row
    });
    GroupGraph {
        kind,
        group_order: order,
        vertices,
        vertex_of,
        words,
        adj: adj_rows.into_iter().flatten().collect(),
        provenance,
    }
}

/// Exact components and diameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentSummary {
    /// Element indices per component, each sorted; components ordered by
    /// smallest element.
    pub components: Vec<Vec<usize>>,
    /// Diameter per component (0 for singletons), aligned with
    /// `components`.
    pub diameters: Vec<u32>,
    pub isolated_count: usize,
    /// Element indices of the non-isolated vertices.
    pub nd_vertices: Vec<usize>,
}

impl ComponentSummary {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn nontrivial_components(&self) -> impl Iterator<Item = (usize, &Vec<usize>)> {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() >= 2)
            .map(|(i, c)| (i, c))
    }

    pub fn nontrivial_count(&self) -> usize {
        self.nontrivial_components().count()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn has_edge(&self) -> bool {
        self.nontrivial_count() > 0
    }

    /// Maximum component diameter (0 for an empty or edgeless graph).
    pub fn max_diameter(&self) -> u32 {
        self.diameters.iter().copied().max().unwrap_or(0)
    }

    /// Diameters sorted descending, for report comparison.
    pub fn diameters_sorted(&self) -> Vec<u32> {
        let mut d = self.diameters.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

/// Components by BFS labeling; diameters by eccentricities. With
/// `full_bfs` every vertex is a BFS source; otherwise one representative
/// per conjugacy class (conjugation is a graph automorphism, so
/// eccentricities propagate along class orbits).
pub fn component_summary(
    graph: &GroupGraph,
    classes: &ConjClasses,
    full_bfs: bool,
) -> ComponentSummary {
    component_summary_with_mode(graph, classes, full_bfs, ExecMode::default_mode())
}

pub fn component_summary_with_mode(
    graph: &GroupGraph,
    classes: &ConjClasses,
    full_bfs: bool,
    mode: ExecMode,
) -> ComponentSummary {
    let n = graph.vertex_count();
    if n == 0 {
        return ComponentSummary {
            components: Vec::new(),
            diameters: Vec::new(),
            isolated_count: 0,
            nd_vertices: Vec::new(),
        };
    }
    let ecc: Vec<u32> = if full_bfs {
        let all = map_indexed(n, mode, |v| eccentricity(graph, v));
        all
    } else {
        // One BFS per conjugacy class intersecting the vertex set.
        let mut reps: Vec<(usize, usize)> = Vec::new(); // (class, vertex)
        for (c, &rep) in classes.representatives().iter().enumerate() {
            if graph.is_vertex(rep) {
                reps.push((c, graph.vertex_index(rep).unwrap()));
            }
        }
        let rep_ecc = map_indexed(reps.len(), mode, |i| eccentricity(graph, reps[i].1));
        let mut class_ecc = vec![0u32; classes.count()];
        for (i, &(c, _)) in reps.iter().enumerate() {
            class_ecc[c] = rep_ecc[i];
        }
        (0..n)
            .map(|v| class_ecc[classes.class_of(graph.element_of_vertex(v))])
            .collect()
    };
    let mut comp_of = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let dist = graph.bfs(start);
        let id = components.len();
        let mut members = Vec::new();
        for (v, &d) in dist.iter().enumerate() {
            if d != u16::MAX {
                comp_of[v] = id;
                members.push(graph.element_of_vertex(v));
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    let mut diameters = vec![0u32; components.len()];
    for v in 0..n {
        let c = comp_of[v];
        diameters[c] = diameters[c].max(ecc[v]);
    }
    let isolated_count = components.iter().filter(|c| c.len() == 1).count();
    let mut nd_vertices: Vec<usize> = components
        .iter()
        .filter(|c| c.len() >= 2)
        .flatten()
        .copied()
        .collect();
    nd_vertices.sort_unstable();
    ComponentSummary {
        components,
        diameters,
        isolated_count,
        nd_vertices,
    }
}

fn eccentricity(graph: &GroupGraph, v: usize) -> u32 {
    graph
        .bfs(v)
        .into_iter()
        .filter(|&d| d != u16::MAX)
        .max()
        .unwrap_or(0) as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct;
    use crate::lattice::{all_subgroups, maximal_data, DEFAULT_LATTICE_CAP};
    use crate::spec::GroupSpec;

    fn build(text: &str) -> FiniteGroup {
        construct(&GroupSpec::parse(text).unwrap()).unwrap()
    }

    fn xi(g: &FiniteGroup) -> GroupGraph {
        let lat = all_subgroups(g, DEFAULT_LATTICE_CAP).unwrap();
        let md = maximal_data(g, &lat);
        build_graph(g, GraphKind::Ncng, Some(&md))
    }

    #[test]
    fn q8_graph_is_edgeless() {
        let g = build("Q8");
        let graph = xi(&g);
        assert_eq!(graph.vertex_count(), 6);
        assert_eq!(graph.edge_count(), 0);
    }

    #[test]
    fn s4_noncommuting_graph_diameter_2() {
        let g = build("S(4)");
        let graph = build_graph(&g, GraphKind::NonCommuting, None);
        let classes = g.conjugacy_classes();
        let summary = component_summary(&graph, &classes, false);
        assert!(summary.is_connected());
        assert_eq!(summary.max_diameter(), 2);
    }

    #[test]
    fn maximal_and_closure_paths_agree() {
        for spec in ["S(4)", "D(6)", "SL23", "AGL(1,5)", "S(3)xS(3)"] {
            let g = build(spec);
            let lat = all_subgroups(&g, DEFAULT_LATTICE_CAP).unwrap();
            let md = maximal_data(&g, &lat);
            let via_maximal = build_graph(&g, GraphKind::Ncng, Some(&md));
            let via_closure = build_graph(&g, GraphKind::Ncng, None);
            assert_eq!(via_maximal.provenance(), NonGenProvenance::MaximalMembership);
            assert_eq!(via_closure.provenance(), NonGenProvenance::Closure);
            assert_eq!(via_maximal.adj, via_closure.adj, "oracle disagreement for {spec}");
        }
    }

    #[test]
    fn ncng_is_conjunction_of_companions() {
        let g = build("S(4)");
        let lat = all_subgroups(&g, DEFAULT_LATTICE_CAP).unwrap();
        let md = maximal_data(&g, &lat);
        let nc = build_graph(&g, GraphKind::NonCommuting, Some(&md));
        let ng = build_graph(&g, GraphKind::NonGenerating, Some(&md));
        let both = build_graph(&g, GraphKind::Ncng, Some(&md));
        let anded: Vec<u64> = nc.adj.iter().zip(&ng.adj).map(|(a, b)| a & b).collect();
        assert_eq!(both.adj, anded);
    }

    #[test]
    fn adjacency_has_no_self_loops_and_is_symmetric() {
        let g = build("S(4)");
        let graph = xi(&g);
        for a in 0..graph.vertex_count() {
            assert!(!graph.adjacent_vertices(a, a));
            for b in 0..graph.vertex_count() {
                assert_eq!(graph.adjacent_vertices(a, b), graph.adjacent_vertices(b, a));
            }
        }
    }

    #[test]
    fn conjugation_is_graph_automorphism() {
        let g = build("D(6)");
        let graph = xi(&g);
        for h in g.elements() {
            for a in 0..graph.vertex_count() {
                for b in a + 1..graph.vertex_count() {
                    let x = graph.element_of_vertex(a);
                    let y = graph.element_of_vertex(b);
                    let xe = g.conjugate(x, h);
                    let ye = g.conjugate(y, h);
                    assert_eq!(
                        graph.adjacent_vertices(a, b),
                        graph.adjacent(xe, ye).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn distance_basics() {
        let g = build("S(4)");
        let graph = xi(&g);
        let x = graph.element_of_vertex(0);
        assert_eq!(graph.distance(x, x).unwrap(), Some(0));
        let err = graph.distance(0, x);
        assert_eq!(err, Err(GraphError::NotAVertex { element: 0 }));
        // Any edge has distance 1.
        'outer: for a in 0..graph.vertex_count() {
            for b in 0..graph.vertex_count() {
                if graph.adjacent_vertices(a, b) {
                    let x = graph.element_of_vertex(a);
                    let y = graph.element_of_vertex(b);
                    assert_eq!(graph.distance(x, y).unwrap(), Some(1));
                    break 'outer;
                }
            }
        }
    }

    #[test]
    fn empty_graph_for_abelian_group() {
        let g = build("C(12)");
        let graph = build_graph(&g, GraphKind::Ncng, None);
        assert_eq!(graph.vertex_count(), 0);
        let summary = component_summary(&graph, &g.conjugacy_classes(), false);
        assert_eq!(summary.component_count(), 0);
        assert_eq!(summary.max_diameter(), 0);
    }

    #[test]
    fn nd_of_edgeless_graph_is_empty() {
        let g = build("Q8");
        let graph = xi(&g);
        assert_eq!(graph.nd_subgraph().vertex_count(), 0);
    }

    #[test]
    fn reduced_and_full_bfs_agree() {
        for spec in ["S(4)", "D(6)", "SL23", "AGL(1,5)", "D(8)"] {
            let g = build(spec);
            let graph = xi(&g);
            let classes = g.conjugacy_classes();
            let fast = component_summary(&graph, &classes, false);
            let full = component_summary(&graph, &classes, true);
            assert_eq!(fast.components, full.components, "{spec}");
            assert_eq!(fast.diameters, full.diameters, "{spec}");
        }
    }

    #[test]
    fn binary_dump_roundtrip() {
        let g = build("S(4)");
        let graph = xi(&g);
        let mut buf = Vec::new();
        graph.write_adjacency_binary(&mut buf).unwrap();
        let n = u64::from_le_bytes(buf[..8].try_into().unwrap()) as usize;
        assert_eq!(n, graph.vertex_count());
        let row_bytes = n.div_ceil(8);
        assert_eq!(buf.len(), 8 + n * row_bytes);
        for a in 0..n {
            for b in 0..n {
                let byte = buf[8 + a * row_bytes + (b >> 3)];
                let bit = byte >> (b & 7) & 1 != 0;
                assert_eq!(bit, graph.adjacent_vertices(a, b));
            }
        }
    }

    #[test]
    fn dot_export_labels_vertices() {
        let g = build("S(3)");
        let graph = xi(&g);
        let mut buf = Vec::new();
        graph
            .write_dot("xi_s3", g.labels(), &mut buf)
            .unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("graph xi_s3 {"));
        assert!(text.contains("label=\"(1,2)\""));
    }
}
