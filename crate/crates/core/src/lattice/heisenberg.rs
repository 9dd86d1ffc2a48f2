//! The discrete Heisenberg group `N = ⟨X, Y | [X, Y] central⟩`.
//!
//! An automorphism of `N` induces `A ∈ GL(2, ℤ)` on `N/Z(N) ≅ ℤ²` and
//! multiplication by `det A` on `Z(N) ≅ ℤ`. Its Reidemeister number is the
//! product of the two abelian ones, `|det(A − I)| · |det A − 1|`. The product
//! rule is checked against brute force on the finite quotients `H(ℤ/m)`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::matrix::IntMatrix;
use super::{fixed_divisors, LatticeError};
use crate::group::{Automorphism, FiniteGroup};
use crate::number::ReidemeisterNumber;
use crate::twisted;

/// Largest `m` for which `H(ℤ/m)` (order `m³`) is built as a table.
pub const HEISENBERG_MODULUS_CAP: usize = 10;

fn ensure_plane(a: &IntMatrix) -> Result<(), LatticeError> {
    if a.dim() != 2 {
        return Err(LatticeError::DimensionMismatch { expected: 2, found: a.dim() });
    }
    a.ensure_unimodular()
}

pub fn heisenberg_reidemeister(a: &IntMatrix) -> Result<ReidemeisterNumber, LatticeError> {
    ensure_plane(a)?;
    let base = a.fixed_determinant();
    let center = (a.determinant() - BigInt::from(1)).abs();
    let product = base * center;
    Ok(if product.is_zero() {
        ReidemeisterNumber::Infinite
    } else {
        ReidemeisterNumber::Finite(product.magnitude().clone())
    })
}

/// The finite quotient `H(m, k)` at which the brute-force count is expected
/// to reach the product formula: `k = |det A − 1|` and `m = 2·lcm(d_2, k)`,
/// with `d_2` the larger elementary divisor of `A − I`. The extra factor 2 is
/// needed because stabilizers in `(ℤ/m)²` shift the central fibre by a
/// half-commutator; found by exhaustive search over `m ≤ 10`.
pub fn heisenberg_separating_quotient(a: &IntMatrix) -> Result<(usize, usize), LatticeError> {
    ensure_plane(a)?;
    let divisors = fixed_divisors(a);
    let center = (a.determinant() - BigInt::from(1)).abs();
    if center.is_zero() || divisors.iter().any(Zero::is_zero) {
        return Err(LatticeError::InfiniteReidemeister);
    }
    let m: BigInt = divisors[1].lcm(&center) * 2;
    let too_large = || LatticeError::QuotientTooLarge {
        order: m.magnitude().pow(2) * center.magnitude(),
        limit: HEISENBERG_MODULUS_CAP.pow(3),
    };
    Ok((m.to_usize().ok_or_else(too_large)?, center.to_usize().ok_or_else(too_large)?))
}

/// `ℤ/m × ℤ/m × ℤ/k` with `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+a·b')`,
/// the quotient of `N` by `⟨X^m, Y^m, Z^k⟩`; needs `k | m`. `H(m, m) = H(ℤ/m)`.
pub fn heisenberg_quotient(m: usize, k: usize) -> Result<FiniteGroup, LatticeError> {
    if m == 0 || k == 0 || m % k != 0 {
        return Err(LatticeError::InvalidModulus);
    }
    if m > HEISENBERG_MODULUS_CAP {
        return Err(LatticeError::QuotientTooLarge {
            order: BigUint::from(m * m * k),
            limit: HEISENBERG_MODULUS_CAP.pow(3),
        });
    }
    let elements: Vec<(usize, usize, usize)> = (0..m)
        .flat_map(|a| (0..m).flat_map(move |b| (0..k).map(move |c| (a, b, c))))
        .collect();
    Ok(FiniteGroup::from_elements(&elements, |x, y| {
        ((x.0 + y.0) % m, (x.1 + y.1) % m, (x.2 + y.2 + x.0 * y.1) % k)
    })?)
}

/// `H(m, k)` with an automorphism inducing `A mod m` on the abelianization, or
/// `None` when `⟨X^m, Y^m, Z^k⟩` is not invariant under the lifts of `A`.
pub fn heisenberg_automorphism(
    a: &IntMatrix,
    m: usize,
    k: usize,
) -> Result<Option<(FiniteGroup, Automorphism)>, LatticeError> {
    let group = heisenberg_quotient(m, k)?;
    Ok(heisenberg_automorphism_in(&group, a, m, k)?.map(|phi| (group, phi)))
}

/// Same, on an already built `heisenberg_quotient(m, k)`.
pub fn heisenberg_automorphism_in(
    group: &FiniteGroup,
    a: &IntMatrix,
    m: usize,
    k: usize,
) -> Result<Option<Automorphism>, LatticeError> {
    ensure_plane(a)?;
    if m == 0 || k == 0 || group.order() != m * m * k {
        return Err(LatticeError::InvalidModulus);
    }
    let index = |a: usize, b: usize, c: usize| (a * m + b) * k + c;
    let r = a.reduce_mod(m);
    let generators = [index(1 % m, 0, 0), index(0, 1 % m, 0)];
    // X ↦ (p, r, c1), Y ↦ (q, s, c2); the central parts only move φ by an
    // inner automorphism, so the first consistent choice will do
    for c1 in 0..k {
        for c2 in 0..k {
            let images = [index(r[0][0], r[1][0], c1), index(r[0][1], r[1][1], c2)];
            let Some(map) = group.extend_homomorphism(group, &generators, &images) else {
                continue;
            };
            if map.contains(&usize::MAX) {
                continue;
            }
            if let Ok(phi) = Automorphism::new(group, map) {
                return Ok(Some(phi));
            }
        }
    }
    Ok(None)
}

/// Brute-force Reidemeister number on `H(m, k)`, `None` if `A` does not descend.
pub fn heisenberg_oracle(a: &IntMatrix, m: usize, k: usize) -> Result<Option<usize>, LatticeError> {
    heisenberg_oracle_in(&heisenberg_quotient(m, k)?, a, m, k)
}

pub fn heisenberg_oracle_in(
    group: &FiniteGroup,
    a: &IntMatrix,
    m: usize,
    k: usize,
) -> Result<Option<usize>, LatticeError> {
    Ok(heisenberg_automorphism_in(group, a, m, k)?.map(|phi| twisted::reidemeister_number(group, &phi)))
}

/// Product formula against brute force on one finite quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeisenbergComparison {
    pub matrix: IntMatrix,
    pub modulus: usize,
    pub center_modulus: usize,
    pub formula: ReidemeisterNumber,
    /// `None` when `A` does not descend to this quotient.
    pub oracle: Option<usize>,
    pub separating: bool,
}

impl HeisenbergComparison {
    /// Whether the oracle was applicable at all.
    pub fn tested(&self) -> bool {
        self.oracle.is_some()
    }

    /// Equality at the separating quotient, `≤` elsewhere (a quotient never
    /// has more twisted classes).
    pub fn agrees(&self) -> bool {
        let Some(oracle) = self.oracle else { return true };
        match &self.formula {
            ReidemeisterNumber::Infinite => !self.separating,
            ReidemeisterNumber::Finite(r) if self.separating => BigUint::from(oracle) == *r,
            ReidemeisterNumber::Finite(r) => BigUint::from(oracle) <= *r,
        }
    }
}

pub fn heisenberg_comparison(
    a: &IntMatrix,
    m: usize,
    k: usize,
) -> Result<HeisenbergComparison, LatticeError> {
    heisenberg_comparison_in(&heisenberg_quotient(m, k)?, a, m, k)
}

pub fn heisenberg_comparison_in(
    group: &FiniteGroup,
    a: &IntMatrix,
    m: usize,
    k: usize,
) -> Result<HeisenbergComparison, LatticeError> {
    let formula = heisenberg_reidemeister(a)?;
    let separating = match heisenberg_separating_quotient(a) {
        Ok((sm, sk)) => m % sm == 0 && k % sk == 0,
        Err(LatticeError::InfiniteReidemeister) => false,
        Err(e) => return Err(e),
    };
    Ok(HeisenbergComparison {
        matrix: a.clone(),
        modulus: m,
        center_modulus: k,
        formula,
        oracle: heisenberg_oracle_in(group, a, m, k)?,
        separating,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn finite(v: u32) -> ReidemeisterNumber {
        ReidemeisterNumber::Finite(BigUint::from(v))
    }

    #[test]
    fn product_formula() {
        let r = |rows| heisenberg_reidemeister(&IntMatrix::from_rows(rows)).unwrap();
        assert_eq!(r([[1, 0], [0, 1]]), ReidemeisterNumber::Infinite);
        assert_eq!(r([[2, 1], [1, 1]]), ReidemeisterNumber::Infinite);
        assert_eq!(r([[1, 1], [1, 0]]), finite(2));
        assert_eq!(r([[2, 1], [1, 0]]), finite(4));
        assert_eq!(r([[0, 1], [1, 3]]), finite(6));
        assert!(matches!(
            heisenberg_reidemeister(&IntMatrix::identity(3)),
            Err(LatticeError::DimensionMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn quotient_is_heisenberg() {
        let h = heisenberg_quotient(3, 3).unwrap();
        assert_eq!(h.order(), 27);
        assert_eq!(h.center().order(), 3);
        assert_eq!(h.table_rows(), corpus::heisenberg(3).table_rows());
        assert_eq!(heisenberg_quotient(4, 2).unwrap().order(), 32);
        assert!(heisenberg_quotient(4, 3).is_err());
    }

    #[test]
    fn descent() {
        // X ↦ XY needs (XY)^2 = Z ∈ ⟨X^2, Y^2, Z^2⟩, which fails
        let golden = IntMatrix::from_rows([[1, 1], [1, 0]]);
        assert_eq!(heisenberg_oracle(&golden, 2, 2).unwrap(), None);
        assert_eq!(heisenberg_oracle(&golden, 4, 4).unwrap(), None);
        assert_eq!(heisenberg_oracle(&golden, 3, 3).unwrap(), Some(1));
        assert_eq!(heisenberg_oracle(&golden, 4, 2).unwrap(), Some(2));
    }

    #[test]
    fn oracle_reaches_formula_at_separating_quotient() {
        // values (oracle at the separating quotient) found by brute force
        let cases: [([[i64; 2]; 2], (usize, usize), usize); 5] = [
            ([[1, 1], [1, 0]], (4, 2), 2),
            ([[0, 1], [1, 1]], (4, 2), 2),
            ([[2, 1], [1, 0]], (4, 2), 4),
            ([[0, 1], [1, -2]], (4, 2), 4),
            ([[4, 1], [1, 0]], (8, 2), 8),
        ];
        for (rows, quotient, value) in cases {
            let a = IntMatrix::from_rows(rows);
            assert_eq!(heisenberg_separating_quotient(&a).unwrap(), quotient);
            let c = heisenberg_comparison(&a, quotient.0, quotient.1).unwrap();
            assert!(c.separating);
            assert_eq!(c.oracle, Some(value));
            assert_eq!(c.formula, finite(value as u32));
            assert!(c.agrees());
        }
        // H(ℤ/4) itself also separates when A ≡ I or J mod 2
        let a = IntMatrix::from_rows([[2, 1], [1, 0]]);
        assert_eq!(heisenberg_oracle(&a, 4, 4).unwrap(), Some(4));
    }

    #[test]
    fn quotients_never_exceed_formula() {
        for rows in [[[1, 1], [1, 0]], [[2, 1], [1, 0]], [[0, 1], [1, 3]], [[4, 1], [1, 0]]] {
            let a = IntMatrix::from_rows(rows);
            for m in 1..=8 {
                for k in (1..=m).filter(|k| m % k == 0) {
                    let c = heisenberg_comparison(&a, m, k).unwrap();
                    assert!(c.agrees(), "{a} on H({m}, {k}): {:?}", c.oracle);
                }
            }
        }
    }
}
