//! Subgroup enumeration and the structural invariants the verification
//! suites quantify over: maximal subgroups, conjugacy classes of maximals,
//! cores, the Frattini subgroup, Sylow subgroups, solubility, nilpotency,
//! primitivity and 2-generation.

use crate::group::FiniteGroup;
use crate::subgroup::SubgroupSet;
use std::collections::HashMap;
use thiserror::Error;

pub const DEFAULT_LATTICE_CAP: usize = 1000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("group order {order} exceeds the lattice cap of {cap}")]
    LatticeCapExceeded { order: usize, cap: usize },
    #[error("{p} does not divide the group order {order}")]
    PrimeNotDividing { p: u32, order: usize },
}

/// Smallest subgroup containing `seeds`: breadth-first fixed point of
/// right-multiplication by the seeds.
pub fn closure(g: &FiniteGroup, seeds: impl IntoIterator<Item = usize>) -> SubgroupSet {
    let seeds: Vec<usize> = seeds.into_iter().collect();
    let mut set = SubgroupSet::empty(g.order());
    set.insert(FiniteGroup::IDENTITY);
    let mut stack = vec![FiniteGroup::IDENTITY];
    while let Some(x) = stack.pop() {
        for &s in &seeds {
            let y = g.mul(x, s);
            if set.insert(y) {
                stack.push(y);
            }
        }
    }
    set
}

/// The complete subgroup lattice, sorted by (order, membership bits).
#[derive(Debug, Clone)]
pub struct Lattice {
    subgroups: Vec<SubgroupSet>,
    generating_sets: Vec<Vec<usize>>,
}

impl Lattice {
    pub fn subgroups(&self) -> &[SubgroupSet] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// A small generating set for each subgroup, aligned with `subgroups`.
    pub fn generating_sets(&self) -> &[Vec<usize>] {
        &self.generating_sets
    }

    pub fn normal_subgroups(&self) -> impl Iterator<Item = &SubgroupSet> {
        self.subgroups.iter().filter(|h| h.is_normal == Some(true))
    }

    pub(crate) fn from_subgroups(g: &FiniteGroup, mut subs: Vec<SubgroupSet>) -> Lattice {
        subs.sort_by(|a, b| a.canonical_cmp(b));
        for h in subs.iter_mut() {
            h.is_normal = Some(g.is_normal_subgroup(h));
            h.is_abelian = Some(set_is_abelian(g, h));
        }
        let generating_sets = subs.iter().map(|h| minimal_generating_set(g, h)).collect();
        Lattice {
            subgroups: subs,
            generating_sets,
        }
    }
}

fn set_is_abelian(g: &FiniteGroup, h: &SubgroupSet) -> bool {
    let elems = h.elements();
    elems
        .iter()
        .enumerate()
        .all(|(i, &x)| elems[i + 1..].iter().all(|&y| g.commutes(x, y)))
}

/// Greedy small generating set: repeatedly adjoin the smallest element not
/// yet generated.
fn minimal_generating_set(g: &FiniteGroup, h: &SubgroupSet) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut have = SubgroupSet::empty(g.order());
    have.insert(FiniteGroup::IDENTITY);
    while have.order() < h.order() {
        let next = h
            .iter()
            .find(|&e| !have.contains(e))
            .expect("subgroup not closed");
        gens.push(next);
        have = closure(g, gens.iter().copied());
    }
    gens
}

/// Complete duplicate-free subgroup enumeration: seed with all cyclic
/// subgroups, then close under pairwise joins until a fixed point.
pub fn all_subgroups(g: &FiniteGroup, cap: usize) -> Result<Lattice, LatticeError> {
    if g.order() > cap {
        return Err(LatticeError::LatticeCapExceeded {
            order: g.order(),
            cap,
        });
    }
    let mut index: HashMap<SubgroupSet, usize> = HashMap::new();
    let mut subs: Vec<SubgroupSet> = Vec::new();
    let mut gens: Vec<Vec<usize>> = Vec::new();
    let push = |subs: &mut Vec<SubgroupSet>,
                    gens: &mut Vec<Vec<usize>>,
                    index: &mut HashMap<SubgroupSet, usize>,
                    set: SubgroupSet,
                    gen: Vec<usize>| {
        if !index.contains_key(&set) {
            index.insert(set.clone(), subs.len());
            subs.push(set);
            gens.push(gen);
        }
    };
    for e in g.elements() {
        let cyc = closure(g, [e]);
        let gen = if e == 0 { vec![] } else { vec![e] };
        push(&mut subs, &mut gens, &mut index, cyc, gen);
    }
    let mut i = 0;
    while i < subs.len() {
        for j in 0..i {
            if subs[i].is_subset(&subs[j]) || subs[j].is_subset(&subs[i]) {
                continue;
            }
            let mut seed = gens[i].clone();
            seed.extend_from_slice(&gens[j]);
            let join = closure(g, seed);
            if !index.contains_key(&join) {
                let small = minimal_generating_set(g, &join);
                push(&mut subs, &mut gens, &mut index, join, small);
            }
        }
        i += 1;
    }
    Ok(Lattice::from_subgroups(g, subs))
}

/// Maximal subgroups with their conjugacy classes, cores and the Frattini
/// subgroup.
#[derive(Debug, Clone)]
pub struct MaximalData {
    pub maximals: Vec<SubgroupSet>,
    /// Indices into `maximals`, one sorted vector per conjugacy class.
    pub classes: Vec<Vec<usize>>,
    /// Largest normal subgroup inside each maximal, aligned with `maximals`.
    pub cores: Vec<SubgroupSet>,
    /// Intersection of all maximals (the whole group if there are none).
    pub frattini: SubgroupSet,
}

impl MaximalData {
    pub fn class_of(&self, maximal_index: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(&maximal_index))
            .expect("maximal not classified")
    }

    /// Indices of the maximals containing element `e`.
    pub fn maximals_containing(&self, e: usize) -> Vec<usize> {
        self.maximals
            .iter()
            .enumerate()
            .filter(|(_, m)| m.contains(e))
            .map(|(i, _)| i)
            .collect()
    }
}

/// Maximal elements of the proper-subgroup poset, by pairwise containment
/// scan over the materialized lattice.
pub fn maximal_data(g: &FiniteGroup, lattice: &Lattice) -> MaximalData {
    let n = g.order();
    let subs = lattice.subgroups();
    let mut maximals: Vec<SubgroupSet> = Vec::new();
    for (i, h) in subs.iter().enumerate() {
        if h.order() == n {
            continue;
        }
        let is_maximal = subs.iter().enumerate().all(|(j, k)| {
            j == i || k.order() == n || k.order() <= h.order() || !h.is_subset(k)
        });
        if is_maximal {
            maximals.push(h.clone());
        }
    }
    let frattini = match maximals.split_first() {
        None => SubgroupSet::full(n),
        Some((first, rest)) => rest
            .iter()
            .fold(first.clone(), |acc, m| acc.intersection(m)),
    };
    let lookup: HashMap<&SubgroupSet, usize> =
        maximals.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut class_of = vec![usize::MAX; maximals.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..maximals.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let class_id = classes.len();
        let mut members = Vec::new();
        for e in g.elements() {
            let conj = g.conjugate_subgroup(&maximals[i], e);
            let j = *lookup.get(&conj).expect("conjugate of maximal is maximal");
            if class_of[j] == usize::MAX {
                class_of[j] = class_id;
                members.push(j);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    let cores: Vec<SubgroupSet> = (0..maximals.len())
        .map(|i| {
            let class = &classes[class_of[i]];
            let mut core = maximals[class[0]].clone();
            for &j in &class[1..] {
                core = core.intersection(&maximals[j]);
            }
            core.is_normal = Some(true);
            core
        })
        .collect();
    MaximalData {
        maximals,
        classes,
        cores,
        frattini,
    }
}

/// A Sylow p-subgroup, grown by normalizer closure from a cyclic p-seed.
pub fn sylow(g: &FiniteGroup, p: u32) -> Result<SubgroupSet, LatticeError> {
    let n = g.order();
    if p < 2 || n % p as usize != 0 {
        return Err(LatticeError::PrimeNotDividing { p, order: n });
    }
    let mut target = 1usize;
    let mut m = n;
    while m % p as usize == 0 {
        target *= p as usize;
        m /= p as usize;
    }
    // Smallest element of order exactly p seeds the search.
    let seed = g
        .elements()
        .find(|&e| g.element_order(e) == p as usize)
        .expect("Cauchy guarantees an element of order p");
    let mut current = closure(g, [seed]);
    while current.order() < target {
        let normalizer = g.normalizer(&current);
        let next = normalizer
            .iter()
            .filter(|&y| !current.contains(y))
            .map(|y| {
                // Strip the non-p part of the order so the candidate has
                // p-power order.
                let ord = g.element_order(y) as u64;
                let mut non_p = ord;
                while non_p % p as u64 == 0 {
                    non_p /= p as u64;
                }
                g.power(y, non_p)
            })
            .find(|&z| !current.contains(z))
            .expect("normalizer growth stalled below Sylow order");
        let mut seeds: Vec<usize> = current.elements();
        seeds.push(next);
        let grown = closure(g, seeds);
        assert!(grown.order() > current.order() && target % grown.order() == 0);
        current = grown;
    }
    Ok(current)
}

/// Exhaustive 2-generation search with a witness pair; conjugation lets the
/// first element range over class representatives only.
pub fn two_generated_witness(g: &FiniteGroup) -> Option<(usize, usize)> {
    let n = g.order();
    if n == 1 {
        return Some((0, 0));
    }
    let classes = g.conjugacy_classes();
    for &x in classes.representatives() {
        if x == 0 {
            continue;
        }
        let cyc = closure(g, [x]);
        if cyc.order() == n {
            return Some((x, 0));
        }
        for y in 1..n {
            if cyc.contains(y) {
                continue;
            }
            if closure(g, [x, y]).order() == n {
                return Some((x, y));
            }
        }
    }
    None
}

/// Subgroup generated by all commutators of `within`.
pub fn derived_subgroup(g: &FiniteGroup, within: &SubgroupSet) -> SubgroupSet {
    let elems = within.elements();
    let mut seeds = Vec::new();
    for &x in &elems {
        for &y in &elems {
            seeds.push(g.commutator(x, y));
        }
    }
    seeds.sort_unstable();
    seeds.dedup();
    closure(g, seeds)
}

pub fn is_soluble(g: &FiniteGroup) -> bool {
    let mut current = SubgroupSet::full(g.order());
    loop {
        let next = derived_subgroup(g, &current);
        if next.order() == 1 {
            return true;
        }
        if next.order() == current.order() {
            return false;
        }
        current = next;
    }
}

/// Frattini subgroup of a p-group, computed as the closure of commutators
/// and p-th powers. Independent of the maximal-subgroup route.
pub fn frattini_of_p_group(g: &FiniteGroup, p_sub: &SubgroupSet, p: u32) -> SubgroupSet {
    let elems = p_sub.elements();
    let mut seeds = Vec::new();
    for &x in &elems {
        for &y in &elems {
            seeds.push(g.commutator(x, y));
        }
        seeds.push(g.power(x, p as u64));
    }
    seeds.sort_unstable();
    seeds.dedup();
    closure(g, seeds)
}

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct StructureReport {
    pub is_abelian: bool,
    pub is_soluble: bool,
    pub is_nilpotent: bool,
    pub is_primitive: bool,
    pub all_proper_quotients_cyclic: bool,
    #[serde(skip)]
    pub minimal_normals: Vec<SubgroupSet>,
}

impl Default for StructureReport {
    fn default() -> Self {
        StructureReport {
            is_abelian: false,
            is_soluble: false,
            is_nilpotent: false,
            is_primitive: false,
            all_proper_quotients_cyclic: false,
            minimal_normals: Vec::new(),
        }
    }
}

/// Quotient by `n` is cyclic iff a single coset generates it.
pub fn quotient_is_cyclic(g: &FiniteGroup, n: &SubgroupSet) -> bool {
    if n.order() == g.order() {
        return true;
    }
    let base: Vec<usize> = n.elements();
    g.elements().any(|e| {
        let mut seeds = base.clone();
        seeds.push(e);
        closure(g, seeds).order() == g.order()
    })
}

pub fn structure_report(g: &FiniteGroup, lattice: &Lattice, maximal: &MaximalData) -> StructureReport {
    let normals: Vec<&SubgroupSet> = lattice.normal_subgroups().collect();
    let nontrivial_proper_normals: Vec<&SubgroupSet> = normals
        .iter()
        .copied()
        .filter(|h| h.order() > 1 && h.order() < g.order())
        .collect();
    let minimal_normals: Vec<SubgroupSet> = nontrivial_proper_normals
        .iter()
        .filter(|h| {
            nontrivial_proper_normals
                .iter()
                .all(|k| k.order() >= h.order() || !k.is_subset(h))
        })
        .map(|h| (*h).clone())
        .collect();
    StructureReport {
        is_abelian: g.is_abelian(),
        is_soluble: is_soluble(g),
        is_nilpotent: maximal
            .maximals
            .iter()
            .all(|m| g.is_normal_subgroup(m)),
        is_primitive: maximal.cores.iter().any(|c| c.order() == 1),
        all_proper_quotients_cyclic: nontrivial_proper_normals
            .iter()
            .all(|n| quotient_is_cyclic(g, n)),
        minimal_normals,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct;
    use crate::spec::GroupSpec;

    fn build(text: &str) -> FiniteGroup {
        construct(&GroupSpec::parse(text).unwrap()).unwrap()
    }

    /// Exhaustive subset-closure oracle, feasible for tiny groups: every
    /// subset that is already closed under multiplication is a subgroup.
    fn oracle_all_subgroups(g: &FiniteGroup) -> Vec<SubgroupSet> {
        let n = g.order();
        assert!(n <= 16);
        let mut found = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&e| mask >> e & 1 != 0).collect();
            let closed = members
                .iter()
                .all(|&x| members.iter().all(|&y| mask >> g.mul(x, y) & 1 != 0));
            if closed {
                found.push(SubgroupSet::from_elements(n, members));
            }
        }
        found
    }

    #[test]
    fn closure_of_empty_seed_is_trivial() {
        let g = build("S(4)");
        assert_eq!(closure(&g, []).order(), 1);
    }

    #[test]
    fn closure_of_single_element_has_its_order() {
        let g = build("S(4)");
        for e in g.elements() {
            assert_eq!(closure(&g, [e]).order(), g.element_order(e));
        }
    }

    #[test]
    fn closure_of_two_transpositions_in_s4() {
        let g = build("S(4)");
        let a = g.element_by_label("(1,2)").unwrap();
        let b = g.element_by_label("(1,3)").unwrap();
        assert_eq!(closure(&g, [a, b]).order(), 6);
    }

    #[test]
    fn subgroup_counts_match_subset_oracle() {
        for (spec, expected) in [("C(6)", 4), ("S(3)", 6), ("Q8", 6)] {
            let g = build(spec);
            let lattice = all_subgroups(&g, DEFAULT_LATTICE_CAP).unwrap();
            let oracle = oracle_all_subgroups(&g);
            assert_eq!(lattice.len(), oracle.len(), "count for {spec}");
            assert_eq!(lattice.len(), expected, "frozen count for {spec}");
            for h in oracle {
                assert!(lattice.subgroups().contains(&h), "missing subgroup in {spec}");
            }
        }
    }

    #[test]
    fn lagrange_holds_across_lattice() {
        for spec in ["S(4)", "D(6)", "SL23", "A(4)"] {
            let g = build(spec);
            let lattice = all_subgroups(&g, DEFAULT_LATTICE_CAP).unwrap();
            for h in lattice.subgroups() {
                assert_eq!(g.order() % h.order(), 0, "Lagrange fails in {spec}");
            }
        }
    }

    #[test]
    fn s3_maximals_one_c3_three_c2() {
        let g = build("S(3)");
        let lattice = all_subgroups(&g, DEFAULT_LATTICE_CAP).unwrap();
        let md = maximal_data(&g, &lattice);
        let mut orders: Vec<usize> = md.maximals.iter().map(|m| m.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 2, 2, 3]);
        assert_eq!(md.frattini.order(), 1);
        assert_eq!(md.classes.len(), 2);
    }

    #[test]
    fn q8_frattini_equals_center() {
        let g = build("Q8");
        let lattice = all_subgroups(&g, DEFAULT_LATTICE_CAP).unwrap();
        let md = maximal_data(&g, &lattice);
        assert_eq!(md.frattini.order(), 2);
        assert_eq!(md.frattini, g.center());
    }

    #[test]
    fn sylow_orders() {
        let s4 = build("S(4)");
        assert_eq!(sylow(&s4, 2).unwrap().order(), 8);
        assert_eq!(sylow(&s4, 3).unwrap().order(), 3);
        let c12 = build("C(12)");
        assert_eq!(sylow(&c12, 2).unwrap().order(), 4);
        assert!(matches!(
            sylow(&s4, 5),
            Err(LatticeError::PrimeNotDividing { p: 5, .. })
        ));
    }

    #[test]
    fn two_generation_witnesses() {
        let s4 = build("S(4)");
        let (x, y) = two_generated_witness(&s4).expect("S4 is 2-generated");
        assert_eq!(closure(&s4, [x, y]).order(), 24);
        // The standard generating pair is a valid witness too.
        let a = s4.element_by_label("(1,2)").unwrap();
        let b = s4.element_by_label("(1,2,3,4)").unwrap();
        assert_eq!(closure(&s4, [a, b]).order(), 24);

        let q8 = build("Q8");
        assert!(two_generated_witness(&q8).is_some());

        let rank3 = build("C(2)xC(2)xC(2)");
        assert!(two_generated_witness(&rank3).is_none());
    }

    #[test]
    fn structure_of_s4() {
        let g = build("S(4)");
        let lattice = all_subgroups(&g, DEFAULT_LATTICE_CAP).unwrap();
        let md = maximal_data(&g, &lattice);
        let report = structure_report(&g, &lattice, &md);
        assert!(report.is_soluble);
        assert!(!report.is_nilpotent);
        assert!(report.is_primitive);
        assert!(!report.is_abelian);
    }

    #[test]
    fn structure_of_d4_is_nilpotent() {
        let g = build("D(4)");
        let lattice = all_subgroups(&g, DEFAULT_LATTICE_CAP).unwrap();
        let md = maximal_data(&g, &lattice);
        assert!(structure_report(&g, &lattice, &md).is_nilpotent);
    }

    #[test]
    fn structure_of_agl15() {
        let g = build("AGL(1,5)");
        let lattice = all_subgroups(&g, DEFAULT_LATTICE_CAP).unwrap();
        let md = maximal_data(&g, &lattice);
        let report = structure_report(&g, &lattice, &md);
        assert!(report.is_primitive);
        assert!(report.all_proper_quotients_cyclic);
        // Normal subgroups are 1, C5, the index-2 dihedral subgroup, and
        // the whole group; the proper quotients C4, C2 are all cyclic.
        assert_eq!(lattice.normal_subgroups().count(), 4);
    }

    #[test]
    fn lattice_cap_enforced() {
        let g = build("SzP(5)");
        assert!(matches!(
            all_subgroups(&g, DEFAULT_LATTICE_CAP),
            Err(LatticeError::LatticeCapExceeded { order: 1024, .. })
        ));
    }

    #[test]
    fn a5_is_insoluble() {
        assert!(!is_soluble(&build("A(5)")));
        assert!(is_soluble(&build("S(4)")));
    }
}
