//! Realizes `GroupSpec` values as `FiniteGroup` Cayley tables.
//!
//! Every construction enumerates elements by breadth-first closure from the
//! generators in spec order, so element 0 is the identity and labels are
//! reproducible across runs. Semidirect actions are validated to be
//! automorphisms of the normal factor before the product is built.

use crate::gf2k::{FieldError, GF2kField};
use crate::group::{Derivation, FiniteGroup};
use crate::spec::{GenWord, GroupSpec};
use crate::suzuki::{suzuki_mul, torus_map, SuzukiPoint};
use std::collections::HashMap;
use std::hash::Hash;
use thiserror::Error;

pub const DEFAULT_ORDER_CAP: usize = 5000;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("group order exceeds the cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("declared semidirect action is not an automorphism: {detail}")]
    InvalidAction { detail: String },
    #[error("internal consistency failure: multiplication left the element set")]
    NotClosed,
    #[error("invalid group spec: {detail}")]
    InvalidSpec { detail: String },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("torus order {r} does not divide 2^{k} - 1")]
    NotPrimitiveDivisor { r: u32, k: u32 },
    #[error("group table invariant violated: {0}")]
    BadTable(String),
}

fn invalid(detail: impl Into<String>) -> ConstructError {
    ConstructError::InvalidSpec {
        detail: detail.into(),
    }
}

/// Builds the group described by `spec` with the default order cap.
pub fn construct(spec: &GroupSpec) -> Result<FiniteGroup, ConstructError> {
    construct_capped(spec, DEFAULT_ORDER_CAP)
}

pub fn construct_capped(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup, ConstructError> {
    let g = construct_inner(spec, cap)?;
    g.validate().map_err(ConstructError::BadTable)?;
    Ok(g)
}

fn construct_inner(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup, ConstructError> {
    match spec {
        GroupSpec::Cyclic(n) => cyclic(*n, cap),
        GroupSpec::Dihedral(n) => dihedral(*n, cap),
        GroupSpec::Symmetric(n) => symmetric(*n, cap),
        GroupSpec::Alternating(n) => alternating(*n, cap),
        GroupSpec::Quaternion8 => quaternion8(cap),
        GroupSpec::SpecialLinear23 => special_linear_2_3(cap),
        GroupSpec::Affine(p) => affine(*p, cap),
        GroupSpec::SuzukiP(k) => suzuki_p(*k, cap),
        GroupSpec::SuzukiBorel(k, r) => suzuki_borel(*k, *r, cap),
        GroupSpec::Perm(perms) => explicit_perm(perms, cap),
        GroupSpec::Direct(parts) => {
            let mut parts = parts.iter();
            let first = parts.next().ok_or_else(|| invalid("empty direct product"))?;
            let mut acc = construct_inner(first, cap)?;
            for part in parts {
                let rhs = construct_inner(part, cap)?;
                acc = direct_product(&acc, &rhs, cap)?;
            }
            Ok(acc)
        }
        GroupSpec::Semidirect {
            normal,
            complement,
            action,
        } => {
            let n = construct_inner(normal, cap)?;
            let h = construct_inner(complement, cap)?;
            semidirect_product(&n, &h, action, cap)
        }
    }
}

/// Breadth-first closure from `gens`, then the full multiplication table.
fn close_and_tabulate<E, M, L>(
    identity: E,
    gens: &[E],
    mul: M,
    label: L,
    cap: usize,
) -> Result<FiniteGroup, ConstructError>
where
    E: Eq + Hash + Clone,
    M: Fn(&E, &E) -> E,
    L: Fn(&E) -> String,
{
    let mut index: HashMap<E, u16> = HashMap::new();
    let mut elems: Vec<E> = vec![identity.clone()];
    let mut derivations = vec![Derivation::Identity];
    index.insert(identity, 0);
    let mut head = 0;
    while head < elems.len() {
        for (k, g) in gens.iter().enumerate() {
            let next = mul(&elems[head], g);
            if !index.contains_key(&next) {
                if elems.len() >= cap {
                    return Err(ConstructError::OrderCapExceeded { cap });
                }
                index.insert(next.clone(), elems.len() as u16);
                derivations.push(if head == 0 {
                    Derivation::Generator(k)
                } else {
                    Derivation::Product {
                        parent: head as u16,
                        gen: k,
                    }
                });
                elems.push(next);
            }
        }
        head += 1;
    }
    let n = elems.len();
    let mut table = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            let prod = mul(&elems[a], &elems[b]);
            let idx = *index.get(&prod).ok_or(ConstructError::NotClosed)?;
            table[a * n + b] = idx;
        }
    }
    let labels = elems.iter().map(&label).collect();
    let gen_indices = gens.iter().map(|g| index[g]).collect();
    Ok(FiniteGroup::from_parts(
        n,
        table,
        labels,
        gen_indices,
        derivations,
    ))
}

// ---- permutation atoms ------------------------------------------------

type Perm = Box<[u16]>;

/// Composition applies the left permutation first: (p*q)(i) = q(p(i)).
fn perm_mul(p: &Perm, q: &Perm) -> Perm {
    p.iter().map(|&i| q[i as usize]).collect()
}

fn perm_identity(degree: usize) -> Perm {
    (0..degree as u16).collect()
}

fn perm_from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Perm, ConstructError> {
    let mut images: Vec<u16> = (0..degree as u16).collect();
    let mut touched = vec![false; degree];
    for cycle in cycles {
        for w in 0..cycle.len() {
            let from = cycle[w] as usize - 1;
            let to = cycle[(w + 1) % cycle.len()] as usize - 1;
            if from >= degree || to >= degree {
                return Err(invalid("cycle point out of range"));
            }
            if touched[from] {
                return Err(invalid(format!("point {} repeated in permutation", from + 1)));
            }
            touched[from] = true;
            images[from] = to as u16;
        }
    }
    Ok(images.into_boxed_slice())
}

/// Disjoint cycle notation on 1-based points; identity renders as "()".
fn perm_label(p: &Perm) -> String {
    let mut out = String::new();
    let mut seen = vec![false; p.len()];
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut cur = start;
        loop {
            seen[cur] = true;
            out.push_str(&(cur + 1).to_string());
            cur = p[cur] as usize;
            if cur == start {
                break;
            }
            out.push(',');
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn perm_group(degree: usize, gens: Vec<Perm>, cap: usize) -> Result<FiniteGroup, ConstructError> {
    close_and_tabulate(perm_identity(degree), &gens, perm_mul, perm_label, cap)
}

fn cyclic(n: u32, cap: usize) -> Result<FiniteGroup, ConstructError> {
    if n == 0 {
        return Err(invalid("C(n) requires n >= 1"));
    }
    let n = n as usize;
    let rot: Perm = (0..n).map(|i| ((i + 1) % n) as u16).collect();
    let gens = if n == 1 { vec![] } else { vec![rot] };
    perm_group(n, gens, cap)
}

fn dihedral(n: u32, cap: usize) -> Result<FiniteGroup, ConstructError> {
    let n = n as usize;
    match n {
        0 => Err(invalid("D(n) requires n >= 1")),
        // The natural action on n points is not faithful below n = 3.
        1 => perm_group(2, vec![perm_identity(2), vec![1u16, 0].into()], cap),
        2 => perm_group(
            4,
            vec![vec![1u16, 0, 2, 3].into(), vec![0u16, 1, 3, 2].into()],
            cap,
        ),
        _ => {
            let rot: Perm = (0..n).map(|i| ((i + 1) % n) as u16).collect();
            let refl: Perm = (0..n).map(|i| ((n - i) % n) as u16).collect();
            perm_group(n, vec![rot, refl], cap)
        }
    }
}

fn symmetric(n: u32, cap: usize) -> Result<FiniteGroup, ConstructError> {
    if n == 0 {
        return Err(invalid("S(n) requires n >= 1"));
    }
    let n = n as usize;
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t = perm_identity(n).to_vec();
        t.swap(0, 1);
        gens.push(t.into_boxed_slice());
    }
    if n >= 3 {
        let cyc: Perm = (0..n).map(|i| ((i + 1) % n) as u16).collect();
        gens.push(cyc);
    }
    perm_group(n, gens, cap)
}

fn alternating(n: u32, cap: usize) -> Result<FiniteGroup, ConstructError> {
    if n == 0 {
        return Err(invalid("A(n) requires n >= 1"));
    }
    let n = n as usize;
    let mut gens: Vec<Perm> = Vec::new();
    if n >= 3 {
        let mut three = perm_identity(n).to_vec();
        three[0] = 1;
        three[1] = 2;
        three[2] = 0;
        gens.push(three.into_boxed_slice());
    }
    if n >= 4 {
        let cyc: Perm = if n % 2 == 1 {
            (0..n).map(|i| ((i + 1) % n) as u16).collect()
        } else {
            // (2,3,...,n) fixing point 1.
            (0..n)
                .map(|i| {
                    if i == 0 {
                        0
                    } else {
                        (i % (n - 1) + 1) as u16
                    }
                })
                .collect()
        };
        gens.push(cyc);
    }
    perm_group(n, gens, cap)
}

fn explicit_perm(perms: &[Vec<Vec<u32>>], cap: usize) -> Result<FiniteGroup, ConstructError> {
    let degree = perms
        .iter()
        .flatten()
        .flatten()
        .copied()
        .max()
        .ok_or_else(|| invalid("Perm requires at least one cycle"))? as usize;
    if perms.iter().flatten().flatten().any(|&p| p == 0) {
        return Err(invalid("Perm points are 1-based"));
    }
    let gens = perms
        .iter()
        .map(|cycles| perm_from_cycles(degree, cycles))
        .collect::<Result<Vec<_>, _>>()?;
    perm_group(degree, gens, cap)
}

// ---- quaternion and matrix atoms ---------------------------------------

/// Quaternion unit: axis 0..4 encodes 1, i, j, k; `neg` the sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Quat {
    axis: u8,
    neg: bool,
}

fn quat_mul(a: &Quat, b: &Quat) -> Quat {
    // (axis, sign) products of quaternion units.
    const AXIS: [[u8; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
    const NEG: [[bool; 4]; 4] = [
        [false, false, false, false],
        [false, true, false, true],
        [false, true, true, false],
        [false, false, true, true],
    ];
    // NEG[a][b] gives the sign of unit_a * unit_b: i*i = -1, i*j = k,
    // j*i = -k, etc.
    let (ia, ib) = (a.axis as usize, b.axis as usize);
    Quat {
        axis: AXIS[ia][ib],
        neg: a.neg ^ b.neg ^ NEG[ia][ib],
    }
}

fn quaternion8(cap: usize) -> Result<FiniteGroup, ConstructError> {
    const NAMES: [&str; 4] = ["1", "i", "j", "k"];
    close_and_tabulate(
        Quat { axis: 0, neg: false },
        &[
            Quat { axis: 1, neg: false },
            Quat { axis: 2, neg: false },
        ],
        quat_mul,
        |q| {
            let mut s = String::new();
            if q.neg {
                s.push('-');
            }
            s.push_str(NAMES[q.axis as usize]);
            s
        },
        cap,
    )
}

/// 2x2 matrix over GF(3), row-major entries.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Mat3([u8; 4]);

fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let (a, b) = (&a.0, &b.0);
    Mat3([
        (a[0] * b[0] + a[1] * b[2]) % 3,
        (a[0] * b[1] + a[1] * b[3]) % 3,
        (a[2] * b[0] + a[3] * b[2]) % 3,
        (a[2] * b[1] + a[3] * b[3]) % 3,
    ])
}

fn special_linear_2_3(cap: usize) -> Result<FiniteGroup, ConstructError> {
    close_and_tabulate(
        Mat3([1, 0, 0, 1]),
        &[Mat3([0, 2, 1, 0]), Mat3([1, 1, 0, 1])],
        mat3_mul,
        |m| {
            format!(
                "[[{},{}],[{},{}]]",
                m.0[0], m.0[1], m.0[2], m.0[3]
            )
        },
        cap,
    )
}

// ---- affine atoms -------------------------------------------------------

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn smallest_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    'cand: for g in 2..p {
        let mut x = 1u64;
        for _ in 0..p - 2 {
            x = x * g as u64 % p as u64;
            if x == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("prime fields have primitive roots")
}

/// x -> ax + b over GF(p).
fn affine(p: u32, cap: usize) -> Result<FiniteGroup, ConstructError> {
    if !is_prime(p) {
        return Err(invalid(format!("AGL(1,{p}) requires a prime p")));
    }
    let modulus = p as u64;
    let mul = move |x: &(u64, u64), y: &(u64, u64)| {
        // Apply x first, then y.
        ((x.0 * y.0) % modulus, (y.0 * x.1 + y.1) % modulus)
    };
    let mut gens = vec![(1u64, 1u64)];
    if p > 2 {
        gens.push((smallest_primitive_root(p) as u64, 0));
    }
    close_and_tabulate(
        (1u64, 0u64),
        &gens,
        mul,
        |&(a, b)| match (a, b) {
            (1, 0) => "x".to_string(),
            (1, b) => format!("x+{b}"),
            (a, 0) => format!("{a}x"),
            (a, b) => format!("{a}x+{b}"),
        },
        cap,
    )
}

// ---- Suzuki atoms -------------------------------------------------------

fn suzuki_p(k: u32, cap: usize) -> Result<FiniteGroup, ConstructError> {
    let field = GF2kField::new(k)?;
    let gens: Vec<SuzukiPoint> = (0..k).map(|i| SuzukiPoint::new(1 << i, 0)).collect();
    close_and_tabulate(
        SuzukiPoint::IDENTITY,
        &gens,
        |a, b| suzuki_mul(&field, *a, *b),
        |p| format!("({},{})", p.alpha, p.beta),
        cap,
    )
}

fn suzuki_borel(k: u32, r: u32, cap: usize) -> Result<FiniteGroup, ConstructError> {
    let field = GF2kField::new(k)?;
    let q_minus_1 = field.size() - 1;
    if r == 0 || q_minus_1 % r as u64 != 0 {
        return Err(ConstructError::NotPrimitiveDivisor { r, k });
    }
    // x generates the multiplicative group for the pinned polynomials.
    let kappa = field.pow(2, q_minus_1 / r as u64);
    let kappa_pows: Vec<u64> = (0..r as u64).map(|i| field.pow(kappa, i)).collect();
    let r = r as u64;
    let mul = |a: &(SuzukiPoint, u64), b: &(SuzukiPoint, u64)| {
        let twisted = torus_map(&field, kappa_pows[a.1 as usize], b.0);
        (suzuki_mul(&field, a.0, twisted), (a.1 + b.1) % r)
    };
    let mut gens: Vec<(SuzukiPoint, u64)> = (0..k)
        .map(|i| (SuzukiPoint::new(1 << i, 0), 0))
        .collect();
    if r > 1 {
        gens.push((SuzukiPoint::IDENTITY, 1));
    }
    close_and_tabulate(
        (SuzukiPoint::IDENTITY, 0),
        &gens,
        mul,
        |&(p, j)| {
            if j == 0 {
                format!("({},{})", p.alpha, p.beta)
            } else {
                format!("({},{})*t^{j}", p.alpha, p.beta)
            }
        },
        cap,
    )
}

// ---- combinators --------------------------------------------------------

fn direct_product(
    a: &FiniteGroup,
    b: &FiniteGroup,
    cap: usize,
) -> Result<FiniteGroup, ConstructError> {
    if a.order() * b.order() > cap {
        return Err(ConstructError::OrderCapExceeded { cap });
    }
    let mul = |x: &(u16, u16), y: &(u16, u16)| {
        (
            a.mul(x.0 as usize, y.0 as usize) as u16,
            b.mul(x.1 as usize, y.1 as usize) as u16,
        )
    };
    let mut gens: Vec<(u16, u16)> = a.generators().iter().map(|&g| (g, 0)).collect();
    gens.extend(b.generators().iter().map(|&g| (0, g)));
    close_and_tabulate(
        (0u16, 0u16),
        &gens,
        mul,
        |&(x, y)| format!("({},{})", a.label(x as usize), b.label(y as usize)),
        cap,
    )
}

fn semidirect_product(
    n: &FiniteGroup,
    h: &FiniteGroup,
    action: &[Vec<GenWord>],
    cap: usize,
) -> Result<FiniteGroup, ConstructError> {
    if n.order() * h.order() > cap {
        return Err(ConstructError::OrderCapExceeded { cap });
    }
    if action.len() != h.generators().len() {
        return Err(invalid(format!(
            "action lists {} automorphisms but H has {} generators",
            action.len(),
            h.generators().len()
        )));
    }
    // One automorphism of N per generator of H, each given by generator
    // images and extended along N's breadth-first derivation.
    let mut gen_autos: Vec<Vec<u16>> = Vec::with_capacity(action.len());
    for (j, images) in action.iter().enumerate() {
        if images.len() != n.generators().len() {
            return Err(invalid(format!(
                "automorphism {} lists {} images but N has {} generators",
                j + 1,
                images.len(),
                n.generators().len()
            )));
        }
        let images: Vec<u16> = images
            .iter()
            .map(|w| eval_word(n, w))
            .collect::<Result<_, _>>()?;
        let auto = n.extend_generator_map(&images).ok_or_else(|| {
            ConstructError::InvalidAction {
                detail: format!("generator {} image map is not an automorphism of N", j + 1),
            }
        })?;
        gen_autos.push(auto);
    }
    // Extend to a map H -> Aut(N) along H's derivation: for h = p * g_k,
    // alpha(h) = alpha(p) o alpha(g_k) applied right-to-left.
    let identity_auto: Vec<u16> = (0..n.order() as u16).collect();
    let mut autos: Vec<Vec<u16>> = Vec::with_capacity(h.order());
    for e in 0..h.order() {
        let auto = match h.derivations()[e] {
            Derivation::Identity => identity_auto.clone(),
            Derivation::Generator(k) => gen_autos[k].clone(),
            Derivation::Product { parent, gen } => {
                let pa = &autos[parent as usize];
                gen_autos[gen].iter().map(|&x| pa[x as usize]).collect()
            }
        };
        autos.push(auto);
    }
    // The extension must itself be a homomorphism into Aut(N); verify when
    // affordable, otherwise table validation catches any inconsistency.
    if h.order() * h.order() * n.order() <= 50_000_000 {
        for h1 in 0..h.order() {
            for h2 in 0..h.order() {
                let prod = h.mul(h1, h2);
                for x in 0..n.order() {
                    let composed = autos[h1][autos[h2][x] as usize];
                    if autos[prod][x] != composed {
                        return Err(ConstructError::InvalidAction {
                            detail: "generator actions do not extend to a homomorphism"
                                .to_string(),
                        });
                    }
                }
            }
        }
    }
    let mul = |x: &(u16, u16), y: &(u16, u16)| {
        let twisted = autos[x.1 as usize][y.0 as usize];
        (
            n.mul(x.0 as usize, twisted as usize) as u16,
            h.mul(x.1 as usize, y.1 as usize) as u16,
        )
    };
    let mut gens: Vec<(u16, u16)> = n.generators().iter().map(|&g| (g, 0)).collect();
    gens.extend(h.generators().iter().map(|&g| (0, g)));
    close_and_tabulate(
        (0u16, 0u16),
        &gens,
        mul,
        |&(x, y)| format!("({},{})", n.label(x as usize), h.label(y as usize)),
        cap,
    )
}

fn eval_word(n: &FiniteGroup, word: &GenWord) -> Result<u16, ConstructError> {
    let mut acc = FiniteGroup::IDENTITY;
    for &(g, e) in &word.0 {
        let idx = g as usize - 1;
        let gen = *n
            .generators()
            .get(idx)
            .ok_or_else(|| invalid(format!("action word references n{g} but N has fewer generators")))?;
        acc = n.mul(acc, n.power(gen as usize, e as u64));
    }
    Ok(acc as u16)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(text: &str) -> FiniteGroup {
        construct(&GroupSpec::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn atom_orders() {
        assert_eq!(build("C(6)").order(), 6);
        assert_eq!(build("D(6)").order(), 12);
        assert_eq!(build("S(4)").order(), 24);
        assert_eq!(build("A(4)").order(), 12);
        assert_eq!(build("A(5)").order(), 60);
        assert_eq!(build("Q8").order(), 8);
        assert_eq!(build("SL23").order(), 24);
        assert_eq!(build("AGL(1,5)").order(), 20);
        assert_eq!(build("SzP(3)").order(), 64);
        assert_eq!(build("D(1)").order(), 2);
        assert_eq!(build("D(2)").order(), 4);
    }

    #[test]
    fn suzuki_borel_order_448() {
        let g = build("SzB(3,7)");
        assert_eq!(g.order(), 448);
    }

    #[test]
    fn agl15_has_trivial_center() {
        let g = build("AGL(1,5)");
        assert_eq!(g.center().order(), 1);
    }

    #[test]
    fn s3_commutator_matches_cycle_computation() {
        let g = build("S(3)");
        let a = g.element_by_label("(1,2)").unwrap();
        let b = g.element_by_label("(1,2,3)").unwrap();
        let c = g.commutator(a, b);
        assert_eq!(g.label(c), "(1,3,2)");
    }

    #[test]
    fn commutator_with_self_is_identity() {
        let g = build("S(4)");
        for x in g.elements() {
            assert_eq!(g.commutator(x, x), FiniteGroup::IDENTITY);
        }
    }

    #[test]
    fn direct_product_order_and_center() {
        let g = build("C(2)xC(2)xS(3)");
        assert_eq!(g.order(), 24);
        assert_eq!(g.center().order(), 4);
    }

    #[test]
    fn semidirect_sign_action() {
        let g = build("SD(N=C(3),H=S(3),act=[n1^2;n1])");
        assert_eq!(g.order(), 18);
        assert_eq!(g.center().order(), 1);
    }

    #[test]
    fn semidirect_rejects_non_automorphism() {
        // n1 -> n1^3 = identity is not injective on C(3).
        let err = construct(&GroupSpec::parse("SD(N=C(3),H=C(2),act=[n1^3])").unwrap());
        assert!(matches!(err, Err(ConstructError::InvalidAction { .. })));
    }

    #[test]
    fn semidirect_rejects_inconsistent_extension() {
        // Inverting C(3) is an automorphism of order 2; it cannot be the
        // image of a generator of C(3) acting on C(3).
        let err = construct(&GroupSpec::parse("SD(N=C(3),H=C(3),act=[n1^2])").unwrap());
        assert!(matches!(err, Err(ConstructError::InvalidAction { .. })));
    }

    #[test]
    fn order_cap_enforced() {
        let err = construct_capped(&GroupSpec::parse("S(5)").unwrap(), 100);
        assert!(matches!(err, Err(ConstructError::OrderCapExceeded { cap: 100 })));
    }

    #[test]
    fn borel_requires_divisor_torus_order() {
        let err = construct(&GroupSpec::parse("SzB(3,5)").unwrap());
        assert!(matches!(
            err,
            Err(ConstructError::NotPrimitiveDivisor { r: 5, k: 3 })
        ));
    }

    #[test]
    fn quotient_s4_by_v4_is_nonabelian_of_order_6() {
        let g = build("S(4)");
        let v4: Vec<usize> = g
            .elements()
            .filter(|&x| {
                x == 0 || (g.element_order(x) == 2 && g.label(x).matches('(').count() == 2)
            })
            .collect();
        assert_eq!(v4.len(), 4);
        let v4 = crate::subgroup::SubgroupSet::from_elements(g.order(), v4);
        let (q, proj) = g.quotient(&v4).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        // The projection is a surjective homomorphism with kernel V4.
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(
                    proj[g.mul(a, b)],
                    q.mul(proj[a] as usize, proj[b] as usize) as u16
                );
            }
        }
        assert_eq!(
            g.elements().filter(|&x| proj[x] == 0).count(),
            4
        );
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = build("S(3)");
        let all = crate::subgroup::SubgroupSet::full(g.order());
        let (q, _) = g.quotient(&all).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn quotient_by_trivial_is_isomorphic() {
        let g = build("S(3)");
        let trivial = crate::subgroup::SubgroupSet::from_elements(g.order(), [0]);
        let (q, proj) = g.quotient(&trivial).unwrap();
        assert_eq!(q.order(), g.order());
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(
                    proj[g.mul(a, b)] as usize,
                    q.mul(proj[a] as usize, proj[b] as usize)
                );
            }
        }
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = build("S(3)");
        let t = g.element_by_label("(1,2)").unwrap();
        let h = crate::subgroup::SubgroupSet::from_elements(g.order(), [0, t]);
        assert!(g.quotient(&h).is_err());
    }

    #[test]
    fn suzuki_center_is_alpha_zero_plane() {
        let g = build("SzP(3)");
        let z = g.center();
        assert_eq!(z.order(), 8);
        for x in z.iter() {
            assert!(g.label(x).starts_with("(0,"));
        }
    }

    #[test]
    fn centralizer_of_empty_set_is_whole_group() {
        let g = build("S(4)");
        assert_eq!(g.centralizer(&[]).order(), 24);
    }

    #[test]
    fn center_of_d6_has_order_2() {
        let g = build("D(6)");
        assert_eq!(g.center().order(), 2);
    }

    #[test]
    fn sl23_center_has_order_2() {
        let g = build("SL23");
        assert_eq!(g.center().order(), 2);
    }
}
