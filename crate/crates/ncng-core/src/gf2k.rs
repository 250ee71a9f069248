//! Binary extension field arithmetic in the polynomial basis.
//!
//! Elements of GF(2^k) are integers `0..2^k` whose bits are the coefficients
//! of a polynomial over GF(2), reduced modulo a fixed irreducible polynomial.
//! Addition is XOR; multiplication is carry-less shift-and-add with
//! reduction.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("no reduction polynomial is pinned for degree {0} (supported: 3, 5)")]
    UnsupportedDegree(u32),
    #[error("polynomial {poly:#b} is not irreducible over GF(2)")]
    Reducible { poly: u64 },
    #[error("theta is undefined for even degree {0}")]
    EvenDegree(u32),
}

/// Fixed reduction polynomials, one per supported degree, so that field
/// element encodings are identical across runs. Any irreducible choice
/// yields an isomorphic field.
const REDUCTION_TABLE: &[(u32, u64)] = &[
    (3, 0b1011),   // x^3 + x + 1
    (5, 0b100101), // x^5 + x^2 + 1
];

/// GF(2^k) in the polynomial basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GF2kField {
    degree: u32,
    reduction: u64,
}

pub type Fe = u64;

impl GF2kField {
    /// Field with the pinned reduction polynomial for `degree`.
    pub fn new(degree: u32) -> Result<Self, FieldError> {
        let &(_, poly) = REDUCTION_TABLE
            .iter()
            .find(|(d, _)| *d == degree)
            .ok_or(FieldError::UnsupportedDegree(degree))?;
        Ok(GF2kField {
            degree,
            reduction: poly,
        })
    }

    /// Field with an explicit reduction polynomial (top bit must be x^degree).
    pub fn with_polynomial(degree: u32, poly: u64) -> Result<Self, FieldError> {
        if degree == 0 || degree > 16 || poly >> degree != 1 {
            return Err(FieldError::Reducible { poly });
        }
        if !poly_irreducible(poly, degree) {
            return Err(FieldError::Reducible { poly });
        }
        Ok(GF2kField {
            degree,
            reduction: poly,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of field elements, 2^k.
    pub fn size(&self) -> u64 {
        1u64 << self.degree
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.size()
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        a ^ b
    }

    pub fn mul(&self, mut a: Fe, mut b: Fe) -> Fe {
        let mut acc = 0u64;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a >> self.degree != 0 {
                a ^= self.reduction;
            }
        }
        acc
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = 1u64;
        while e != 0 {
            if e & 1 != 0 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self, a: Fe) -> Option<Fe> {
        if a == 0 {
            return None;
        }
        // a^(2^k - 2) = a^-1 in GF(2^k).
        Some(self.pow(a, self.size() - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Fe) -> u64 {
        assert_ne!(a, 0);
        let mut x = a;
        let mut ord = 1;
        while x != 1 {
            x = self.mul(x, a);
            ord += 1;
        }
        ord
    }

    /// The automorphism a -> a^sqrt(2q) = a^(2^((k+1)/2)), defined for odd k.
    pub fn theta(&self, a: Fe) -> Result<Fe, FieldError> {
        if self.degree % 2 == 0 {
            return Err(FieldError::EvenDegree(self.degree));
        }
        let m = (self.degree + 1) / 2;
        Ok(self.pow(a, 1u64 << m))
    }
}

/// Brute-force irreducibility over GF(2): no divisor of degree 1..=k/2.
fn poly_irreducible(poly: u64, degree: u32) -> bool {
    for d in 1..=degree / 2 {
        for q in (1u64 << d)..(1u64 << (d + 1)) {
            if poly_rem(poly, q) == 0 {
                return false;
            }
        }
    }
    true
}

fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = 63 - b.leading_zeros();
    loop {
        if a == 0 {
            return 0;
        }
        let da = 63 - a.leading_zeros();
        if da < db {
            return a;
        }
        a ^= b << (da - db);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_exhaustive_gf8() {
        let f = GF2kField::new(3).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, a), 0);
            if a != 0 {
                let inv = f.inverse(a).unwrap();
                assert_eq!(f.mul(a, inv), 1);
            }
            for b in f.elements() {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in f.elements() {
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn nonzero_elements_cyclic() {
        for k in [3u32, 5] {
            let f = GF2kField::new(k).unwrap();
            // x (encoded as 2) generates the multiplicative group for the
            // pinned polynomials; both 2^3-1 and 2^5-1 are prime.
            assert_eq!(f.mult_order(2), f.size() - 1);
        }
    }

    #[test]
    fn theta_fixes_zero_and_one() {
        let f = GF2kField::new(3).unwrap();
        assert_eq!(f.theta(0).unwrap(), 0);
        assert_eq!(f.theta(1).unwrap(), 1);
    }

    #[test]
    fn theta_is_field_automorphism() {
        for k in [3u32, 5] {
            let f = GF2kField::new(k).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    let t = |x| f.theta(x).unwrap();
                    assert_eq!(t(f.add(a, b)), f.add(t(a), t(b)));
                    assert_eq!(t(f.mul(a, b)), f.mul(t(a), t(b)));
                }
            }
        }
    }

    #[test]
    fn theta_squared_is_squaring_on_gf8() {
        // theta(theta(a)) = a^(2q) = a^2 since a^q = a in GF(q).
        let f = GF2kField::new(3).unwrap();
        for a in f.elements() {
            let t2 = f.theta(f.theta(a).unwrap()).unwrap();
            assert_eq!(t2, f.mul(a, a));
        }
    }

    #[test]
    fn even_degree_rejected_by_theta() {
        let f = GF2kField::with_polynomial(4, 0b10011).unwrap(); // x^4+x+1
        assert_eq!(f.theta(3), Err(FieldError::EvenDegree(4)));
    }

    #[test]
    fn reducible_polynomial_rejected() {
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2
        assert!(matches!(
            GF2kField::with_polynomial(4, 0b10101),
            Err(FieldError::Reducible { .. })
        ));
    }
}
