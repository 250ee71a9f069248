//! Suzuki 2-group arithmetic over GF(q), q = 2^k with k odd.
//!
//! The group lives on pairs (alpha, beta) of field elements with
//! `(a,b)(c,d) = (a+c, a*theta(c)+b+d)`; its center is `{(0,b)}` and every
//! square lands there. A torus element kappa of multiplicative order r acts
//! by `(a,b) -> (kappa*a, kappa^(1+theta)*b)`, which extends the group to
//! the Borel-type product used by the `SzB` constructor.

use crate::gf2k::{Fe, GF2kField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SuzukiPoint {
    pub alpha: Fe,
    pub beta: Fe,
}

impl SuzukiPoint {
    pub const IDENTITY: SuzukiPoint = SuzukiPoint { alpha: 0, beta: 0 };

    pub fn new(alpha: Fe, beta: Fe) -> Self {
        SuzukiPoint { alpha, beta }
    }
}

/// (a,b)(c,d) = (a+c, a*c^theta + b + d). Total; callers guarantee both
/// points come from `field`.
pub fn suzuki_mul(field: &GF2kField, p: SuzukiPoint, q: SuzukiPoint) -> SuzukiPoint {
    let theta_c = field.theta(q.alpha).expect("odd field degree");
    SuzukiPoint {
        alpha: field.add(p.alpha, q.alpha),
        beta: field.add(field.mul(p.alpha, theta_c), field.add(p.beta, q.beta)),
    }
}

/// Inverse in characteristic 2: (a,b)^-1 = (a, a*a^theta + b).
pub fn suzuki_inv(field: &GF2kField, p: SuzukiPoint) -> SuzukiPoint {
    let theta_a = field.theta(p.alpha).expect("odd field degree");
    SuzukiPoint {
        alpha: p.alpha,
        beta: field.add(field.mul(p.alpha, theta_a), p.beta),
    }
}

/// Torus action (a,b) -> (kappa*a, kappa^(1+theta)*b) for nonzero kappa.
/// The map is an automorphism of the point group for every such kappa.
pub fn torus_map(field: &GF2kField, kappa: Fe, p: SuzukiPoint) -> SuzukiPoint {
    assert_ne!(kappa, 0, "torus parameter must be nonzero");
    let scale_beta = field.mul(kappa, field.theta(kappa).expect("odd field degree"));
    SuzukiPoint {
        alpha: field.mul(kappa, p.alpha),
        beta: field.mul(scale_beta, p.beta),
    }
}

pub fn all_points(field: &GF2kField) -> Vec<SuzukiPoint> {
    let mut pts = Vec::with_capacity((field.size() * field.size()) as usize);
    for alpha in field.elements() {
        for beta in field.elements() {
            pts.push(SuzukiPoint { alpha, beta });
        }
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> GF2kField {
        GF2kField::new(3).unwrap()
    }

    #[test]
    fn identity_law() {
        let f = gf8();
        for p in all_points(&f) {
            assert_eq!(suzuki_mul(&f, SuzukiPoint::IDENTITY, p), p);
            assert_eq!(suzuki_mul(&f, p, SuzukiPoint::IDENTITY), p);
        }
    }

    #[test]
    fn inverse_law() {
        let f = gf8();
        for p in all_points(&f) {
            assert_eq!(suzuki_mul(&f, p, suzuki_inv(&f, p)), SuzukiPoint::IDENTITY);
            assert_eq!(suzuki_mul(&f, suzuki_inv(&f, p), p), SuzukiPoint::IDENTITY);
        }
    }

    #[test]
    fn associative_exhaustive_gf8() {
        let f = gf8();
        let pts = all_points(&f);
        for &a in &pts {
            for &b in &pts {
                let ab = suzuki_mul(&f, a, b);
                for &c in &pts {
                    assert_eq!(
                        suzuki_mul(&f, ab, c),
                        suzuki_mul(&f, a, suzuki_mul(&f, b, c))
                    );
                }
            }
        }
    }

    #[test]
    fn squares_land_in_alpha_zero() {
        // (a,b)^2 = (0, a*a^theta): all squares lie in {(0,beta)}.
        let f = gf8();
        for p in all_points(&f) {
            let sq = suzuki_mul(&f, p, p);
            assert_eq!(sq.alpha, 0);
            let expect = f.mul(p.alpha, f.theta(p.alpha).unwrap());
            assert_eq!(sq.beta, expect);
        }
    }

    #[test]
    fn torus_map_is_automorphism() {
        let f = gf8();
        let pts = all_points(&f);
        for kappa in 1..f.size() {
            for &a in &pts {
                for &b in &pts {
                    let lhs = torus_map(&f, kappa, suzuki_mul(&f, a, b));
                    let rhs = suzuki_mul(&f, torus_map(&f, kappa, a), torus_map(&f, kappa, b));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn torus_identity_for_kappa_one() {
        let f = gf8();
        for p in all_points(&f) {
            assert_eq!(torus_map(&f, 1, p), p);
        }
    }

    #[test]
    fn torus_action_irreducible_on_alpha_space_k3() {
        // The induced action on P/Phi(P) ~ GF(8) is multiplication by kappa;
        // for kappa of order 7 no proper nonzero GF(2)-subspace is stable.
        let f = gf8();
        let kappa = 2; // order 7
        assert_eq!(f.mult_order(kappa), 7);
        // Enumerate all additive subgroups of GF(8) and test stability.
        let mut subgroups: Vec<Vec<Fe>> = vec![vec![0]];
        let mut frontier = vec![vec![0u64]];
        while let Some(w) = frontier.pop() {
            for v in 1..f.size() {
                if w.contains(&v) {
                    continue;
                }
                let mut next: Vec<Fe> = w.iter().flat_map(|&x| [x, f.add(x, v)]).collect();
                next.sort_unstable();
                next.dedup();
                if !subgroups.contains(&next) {
                    subgroups.push(next.clone());
                    frontier.push(next);
                }
            }
        }
        let full_len = f.size() as usize;
        for sub in subgroups {
            if sub.len() == 1 || sub.len() == full_len {
                continue;
            }
            let stable = sub.iter().all(|&x| sub.contains(&f.mul(kappa, x)));
            assert!(!stable, "proper invariant subspace found: {sub:?}");
        }
    }
}
