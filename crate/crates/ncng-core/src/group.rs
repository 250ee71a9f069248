//! Finite groups as closed multiplication structures on dense indices.

use crate::subgroup::SubgroupSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("subgroup of order {order} is not normal in a group of order {group_order}")]
    NotNormal { order: usize, group_order: usize },
}

/// How each element was first reached during breadth-first closure; lets the
/// construction extend generator maps to homomorphisms on the whole group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivation {
    Identity,
    /// Index into `generators`.
    Generator(usize),
    /// Element = mul(parent, generators[gen]).
    Product { parent: u16, gen: usize },
}

/// A finite group on indices `0..order` with a full Cayley table.
/// Element 0 is the identity; the element ordering is the breadth-first
/// closure order from the construction's generators.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    labels: Vec<String>,
    generators: Vec<u16>,
    derivations: Vec<Derivation>,
}

impl FiniteGroup {
    pub(crate) fn from_parts(
        order: usize,
        mul: Vec<u16>,
        labels: Vec<String>,
        generators: Vec<u16>,
        derivations: Vec<Derivation>,
    ) -> Self {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0u16; order];
        for g in 0..order {
            for h in 0..order {
                if mul[g * order + h] == 0 {
                    inv[g] = h as u16;
                    break;
                }
            }
        }
        FiniteGroup {
            order,
            mul,
            inv,
            labels,
            generators,
            derivations,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub const IDENTITY: usize = 0;

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// [x, y] = x^-1 y^-1 x y.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    #[inline]
    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn power(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = Self::IDENTITY;
        while e != 0 {
            if e & 1 != 0 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut ord = 1;
        while x != Self::IDENTITY {
            x = self.mul(x, a);
            ord += 1;
        }
        ord
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn generators(&self) -> &[u16] {
        &self.generators
    }

    pub(crate) fn derivations(&self) -> &[Derivation] {
        &self.derivations
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    pub fn center(&self) -> SubgroupSet {
        let mut z = SubgroupSet::empty(self.order);
        for g in 0..self.order {
            if (0..self.order).all(|h| self.commutes(g, h)) {
                z.insert(g);
            }
        }
        z.is_normal = Some(true);
        z.is_abelian = Some(true);
        z
    }

    /// Elements commuting with every member of `targets`. The empty set
    /// yields the whole group.
    pub fn centralizer(&self, targets: &[usize]) -> SubgroupSet {
        let mut c = SubgroupSet::empty(self.order);
        for g in 0..self.order {
            if targets.iter().all(|&t| self.commutes(g, t)) {
                c.insert(g);
            }
        }
        c
    }

    pub fn centralizer_of_set(&self, targets: &SubgroupSet) -> SubgroupSet {
        self.centralizer(&targets.elements())
    }

    /// Elements of `h` commuting with all of `h`.
    pub fn center_of_subgroup(&self, h: &SubgroupSet) -> SubgroupSet {
        let elems = h.elements();
        let mut z = SubgroupSet::empty(self.order);
        for &x in &elems {
            if elems.iter().all(|&y| self.commutes(x, y)) {
                z.insert(x);
            }
        }
        z
    }

    /// Centralizer of `x` within the subgroup `within`.
    pub fn centralizer_in(&self, within: &SubgroupSet, x: usize) -> SubgroupSet {
        let mut c = SubgroupSet::empty(self.order);
        for g in within.iter() {
            if self.commutes(g, x) {
                c.insert(g);
            }
        }
        c
    }

    pub fn normalizer(&self, h: &SubgroupSet) -> SubgroupSet {
        let elems = h.elements();
        let mut n = SubgroupSet::empty(self.order);
        'outer: for g in 0..self.order {
            for &x in &elems {
                if !h.contains(self.conjugate(x, g)) {
                    continue 'outer;
                }
            }
            n.insert(g);
        }
        n
    }

    pub fn is_normal_subgroup(&self, h: &SubgroupSet) -> bool {
        // Invariance under the group's generators suffices.
        let gens: Vec<usize> = if self.generators.is_empty() {
            (0..self.order).collect()
        } else {
            self.generators.iter().map(|&g| g as usize).collect()
        };
        h.iter()
            .all(|x| gens.iter().all(|&g| h.contains(self.conjugate(x, g))))
    }

    pub fn conjugate_subgroup(&self, h: &SubgroupSet, g: usize) -> SubgroupSet {
        let mut out = SubgroupSet::empty(self.order);
        for x in h.iter() {
            out.insert(self.conjugate(x, g));
        }
        out
    }

    /// Largest normal subgroup contained in `h`: the intersection of all
    /// conjugates.
    pub fn core(&self, h: &SubgroupSet) -> SubgroupSet {
        let mut core = h.clone();
        for g in 0..self.order {
            if core.order() == 1 {
                break;
            }
            core = core.intersection(&self.conjugate_subgroup(h, g));
        }
        core.is_normal = Some(true);
        core
    }

    /// Normal closure of a set of elements: the subgroup generated by all
    /// conjugates.
    pub fn normal_closure(&self, elems: &[usize]) -> SubgroupSet {
        let mut seeds = Vec::new();
        for &x in elems {
            for g in 0..self.order {
                seeds.push(self.conjugate(x, g));
            }
        }
        seeds.sort_unstable();
        seeds.dedup();
        crate::lattice::closure(self, seeds.iter().copied())
    }

    pub fn conjugacy_classes(&self) -> ConjClasses {
        let mut class_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for g in 0..self.order {
                class_of[self.conjugate(x, g)] = id;
            }
        }
        let mut members = vec![Vec::new(); reps.len()];
        for x in 0..self.order {
            members[class_of[x]].push(x);
        }
        ConjClasses {
            class_of,
            reps,
            members,
        }
    }

    /// Quotient by a normal subgroup. Cosets are ordered by their minimal
    /// element, so the identity coset is element 0. Returns the coset group
    /// and the projection map.
    pub fn quotient(&self, n: &SubgroupSet) -> Result<(FiniteGroup, Vec<u16>), GroupError> {
        if !self.is_normal_subgroup(n) {
            return Err(GroupError::NotNormal {
                order: n.order(),
                group_order: self.order,
            });
        }
        let mut coset_id = vec![usize::MAX; self.order];
        let mut reps: Vec<usize> = Vec::new();
        for g in 0..self.order {
            if coset_id[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for h in n.iter() {
                coset_id[self.mul(h, g)] = id;
            }
        }
        let q_order = reps.len();
        let mut mul = vec![0u16; q_order * q_order];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mul[i * q_order + j] = coset_id[self.mul(a, b)] as u16;
            }
        }
        let labels = reps
            .iter()
            .map(|&r| format!("[{}]", self.labels[r]))
            .collect();
        let projection: Vec<u16> = coset_id.iter().map(|&c| c as u16).collect();
        let generators = self
            .generators
            .iter()
            .map(|&g| projection[g as usize])
            .filter(|&g| g != 0)
            .collect();
        let q = FiniteGroup::from_parts(q_order, mul, labels, generators, Vec::new());
        Ok((q, projection))
    }

    /// Checks every structural invariant: identity behaviour, inverses,
    /// Latin-square rows and columns, and associativity (exhaustive up to
    /// order 512, seeded random sampling of at least 1e5 triples above).
    pub fn validate(&self) -> Result<(), String> {
        let n = self.order;
        if n == 0 {
            return Err("empty group".into());
        }
        for g in 0..n {
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return Err(format!("identity law fails at {g}"));
            }
            if self.mul(g, self.inv(g)) != 0 {
                return Err(format!("inverse law fails at {g}"));
            }
        }
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for g in 0..n {
            seen_row.iter_mut().for_each(|s| *s = false);
            seen_col.iter_mut().for_each(|s| *s = false);
            for h in 0..n {
                let r = self.mul(g, h);
                let c = self.mul(h, g);
                if seen_row[r] || seen_col[c] {
                    return Err(format!("row/column {g} is not a permutation"));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        if n <= 512 {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(format!("associativity fails at ({a},{b},{c})"));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e37_79b9_7f4a_7c15u64;
            let mut next = move || {
                state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
                (z ^ (z >> 31)) as usize
            };
            for _ in 0..100_000 {
                let a = next() % n;
                let b = next() % n;
                let c = next() % n;
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(format!("associativity fails at ({a},{b},{c})"));
                }
            }
        }
        Ok(())
    }

    /// Extends a map on the construction generators to the whole group using
    /// the breadth-first derivation, then verifies it is a homomorphism into
    /// `self`. Returns `None` if the derivation is unavailable or the
    /// extension is not a homomorphism or not injective.
    pub fn extend_generator_map(&self, gen_images: &[u16]) -> Option<Vec<u16>> {
        if self.derivations.len() != self.order || gen_images.len() != self.generators.len() {
            return None;
        }
        let mut image = vec![0u16; self.order];
        for e in 0..self.order {
            image[e] = match self.derivations[e] {
                Derivation::Identity => 0,
                Derivation::Generator(k) => gen_images[k],
                Derivation::Product { parent, gen } => {
                    self.mul[image[parent as usize] as usize * self.order
                        + gen_images[gen] as usize]
                }
            };
        }
        // Exhaustive homomorphism and bijectivity check.
        let mut seen = vec![false; self.order];
        for (_, &img) in image.iter().enumerate() {
            if seen[img as usize] {
                return None;
            }
            seen[img as usize] = true;
        }
        for a in 0..self.order {
            for b in 0..self.order {
                let lhs = image[self.mul(a, b)] as usize;
                let rhs = self.mul(image[a] as usize, image[b] as usize);
                if lhs != rhs {
                    return None;
                }
            }
        }
        Some(image)
    }
}

/// Conjugacy class partition of a group.
#[derive(Debug, Clone)]
pub struct ConjClasses {
    class_of: Vec<usize>,
    reps: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl ConjClasses {
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn representative(&self, class: usize) -> usize {
        self.reps[class]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    pub fn members(&self, class: usize) -> &[usize] {
        &self.members[class]
    }
}
