//! Reidemeister theory for automorphisms of ℤⁿ and of the discrete Heisenberg
//! group.
//!
//! For `A ∈ GL(n, ℤ)` the twisted action on ℤⁿ is `g ↦ g + (I − A)x`, so the
//! Reidemeister classes are the cosets of the image of `A − I`. Everything
//! here is computed from the Smith normal form of `A − I` and cross-checked
//! against brute force on finite quotients.

mod heisenberg;
mod matrix;
mod snf;
mod spectrum;
mod torus;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::group::{Automorphism, FiniteGroup, GroupError};
use crate::number::ReidemeisterNumber;
use crate::twisted;

pub use heisenberg::{
    heisenberg_automorphism, heisenberg_automorphism_in, heisenberg_comparison,
    heisenberg_comparison_in, heisenberg_oracle, heisenberg_oracle_in, heisenberg_quotient,
    heisenberg_reidemeister, heisenberg_separating_quotient, HeisenbergComparison,
    HEISENBERG_MODULUS_CAP,
};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SnfDecomposition};
pub use spectrum::{gl2_words, spectrum_search, zn_witness, Family, SpectrumResult, SpectrumWitness};
pub use torus::{
    fixed_dual_characters, fixed_dual_residues, torus_map, FixedResidues, TorusPoint,
    TORUS_ENUMERATION_LIMIT,
};

/// Largest `mⁿ` for which a finite quotient is materialized as a group table.
pub const QUOTIENT_TABLE_LIMIT: usize = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("NotSquare: matrix rows must all have length n")]
    NotSquare,
    #[error("NotUnimodular: determinant is {determinant}, expected ±1")]
    NotUnimodular { determinant: BigInt },
    #[error("DimensionMismatch: expected a {expected}×{expected} matrix, got {found}×{found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("InfiniteFixedSet: det(A − I) = 0, the fixed dual set is a positive-dimensional subtorus")]
    InfiniteFixedSet,
    #[error("InfiniteReidemeister: det(A − I) = 0")]
    InfiniteReidemeister,
    #[error("EnumerationTooLarge: {count} points exceed the enumeration limit {limit}")]
    EnumerationTooLarge { count: BigUint, limit: usize },
    #[error("WitnessNotFound: no automorphism of ℤ^{n} with Reidemeister number {value} in the witness family")]
    WitnessNotFound { n: usize, value: u64 },
    #[error("InvalidModulus: modulus must be at least 1")]
    InvalidModulus,
    #[error("QuotientTooLarge: quotient of order {order} exceeds the table limit {limit}")]
    QuotientTooLarge { order: BigUint, limit: usize },
    #[error("InvalidBound: {0}")]
    InvalidBound(&'static str),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// `|det(A − I)|`, or infinity when `A − I` is singular.
pub fn reidemeister_number_lattice(a: &IntMatrix) -> Result<ReidemeisterNumber, LatticeError> {
    a.ensure_unimodular()?;
    Ok(fixed_determinant_number(a))
}

fn fixed_determinant_number(a: &IntMatrix) -> ReidemeisterNumber {
    let det = a.fixed_determinant();
    if det.is_zero() {
        ReidemeisterNumber::Infinite
    } else {
        ReidemeisterNumber::Finite(det.magnitude().clone())
    }
}

/// Elementary divisors of `A − I`.
pub fn fixed_divisors(a: &IntMatrix) -> Vec<BigInt> {
    smith_normal_form(&a.minus_identity()).elementary_divisors()
}

/// Reidemeister number of the automorphism induced on `(ℤ/m)ⁿ`:
/// `Π gcd(d_i, m)` over the elementary divisors of `A − I`.
pub fn finite_quotient_reidemeister(a: &IntMatrix, m: usize) -> Result<BigUint, LatticeError> {
    a.ensure_unimodular()?;
    if m == 0 {
        return Err(LatticeError::InvalidModulus);
    }
    let m = BigInt::from(m);
    // gcd(0, m) = m, as it should be: a zero divisor contributes a full ℤ/m
    let product: BigInt = fixed_divisors(a).iter().map(|d| d.gcd(&m)).product();
    Ok(product.magnitude().clone())
}

/// `(ℤ/m)ⁿ` with the automorphism induced by `A`. Elements are coordinate
/// vectors in lexicographic order.
pub fn materialize_quotient(
    a: &IntMatrix,
    m: usize,
) -> Result<(FiniteGroup, Automorphism), LatticeError> {
    a.ensure_unimodular()?;
    if m == 0 {
        return Err(LatticeError::InvalidModulus);
    }
    let n = a.dim();
    let order = BigUint::from(m).pow(n as u32);
    let size = order.to_usize().filter(|&s| s <= QUOTIENT_TABLE_LIMIT).ok_or(
        LatticeError::QuotientTooLarge { order: order.clone(), limit: QUOTIENT_TABLE_LIMIT },
    )?;

    let decode = |mut index: usize| -> Vec<usize> {
        let mut v = vec![0; n];
        for slot in v.iter_mut().rev() {
            *slot = index % m;
            index /= m;
        }
        v
    };
    let encode = |v: &[usize]| v.iter().fold(0, |acc, &x| acc * m + x);
    let elements: Vec<Vec<usize>> = (0..size).map(decode).collect();
    let group = FiniteGroup::from_elements(&elements, |x, y| {
        x.iter().zip(y).map(|(a, b)| (a + b) % m).collect()
    })?;

    let reduced = a.reduce_mod(m);
    let images = elements
        .iter()
        .map(|x| {
            let image: Vec<usize> = reduced
                .iter()
                .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum::<usize>() % m)
                .collect();
            encode(&image)
        })
        .collect();
    let phi = Automorphism::new(&group, images)?;
    Ok((group, phi))
}

/// Brute-force Reidemeister count on `(ℤ/m)ⁿ`.
pub fn finite_quotient_oracle(a: &IntMatrix, m: usize) -> Result<usize, LatticeError> {
    let (group, phi) = materialize_quotient(a, m)?;
    Ok(twisted::reidemeister_number(&group, &phi))
}

/// Smallest modulus `m` with `finite_quotient_reidemeister(A, m) = R(A)`: the
/// largest elementary divisor of `A − I`.
pub fn separability_witness(a: &IntMatrix) -> Result<usize, LatticeError> {
    a.ensure_unimodular()?;
    let divisors = fixed_divisors(a);
    match divisors.last() {
        None => Ok(1),
        Some(d) if d.is_zero() => Err(LatticeError::InfiniteReidemeister),
        Some(d) => d.abs().to_usize().ok_or(LatticeError::QuotientTooLarge {
            order: d.magnitude().clone(),
            limit: usize::MAX,
        }),
    }
}

/// `finite_quotient_reidemeister(A, separability_witness(A)) = R(A)`.
pub fn separability_check(a: &IntMatrix) -> Result<twisted::CheckReport, LatticeError> {
    let m = separability_witness(a)?;
    let at_witness = finite_quotient_reidemeister(a, m)?;
    let exact = match reidemeister_number_lattice(a)? {
        ReidemeisterNumber::Finite(r) => r,
        ReidemeisterNumber::Infinite => return Err(LatticeError::InfiniteReidemeister),
    };
    let report = if at_witness == exact {
        twisted::CheckReport::pass("separability")
    } else {
        twisted::CheckReport::fail("separability", format!("R_{m} = {at_witness}, R = {exact}"))
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: &IntMatrix) -> ReidemeisterNumber {
        reidemeister_number_lattice(a).unwrap()
    }

    #[test]
    fn lattice_reidemeister_numbers() {
        assert_eq!(r(&IntMatrix::identity(1)), ReidemeisterNumber::Infinite);
        assert_eq!(r(&IntMatrix::from_rows([[-1]])), ReidemeisterNumber::from(2));
        assert_eq!(r(&IntMatrix::from_rows([[0, 1], [-1, 0]])), ReidemeisterNumber::from(2));
        assert_eq!(r(&IntMatrix::from_rows([[2, 1], [1, 1]])), ReidemeisterNumber::from(1));
        assert!(matches!(
            reidemeister_number_lattice(&IntMatrix::from_rows([[2, 0], [0, 1]])),
            Err(LatticeError::NotUnimodular { .. })
        ));
    }

    #[test]
    fn finite_quotients() {
        let rot = IntMatrix::from_rows([[0, 1], [-1, 0]]);
        let q = |a: &IntMatrix, m| finite_quotient_reidemeister(a, m).unwrap();
        assert_eq!(q(&rot, 1), BigUint::from(1u32));
        assert_eq!(q(&rot, 2), BigUint::from(2u32));
        assert_eq!(q(&rot, 3), BigUint::from(1u32));
        assert_eq!(q(&IntMatrix::identity(2), 5), BigUint::from(25u32));
        for m in 1..=12 {
            for a in [rot.clone(), IntMatrix::from_rows([[2, 1], [1, 1]]), IntMatrix::identity(2)] {
                let oracle = finite_quotient_oracle(&a, m).unwrap();
                assert_eq!(BigUint::from(oracle), q(&a, m), "{a} mod {m}");
            }
        }
        assert!(matches!(finite_quotient_reidemeister(&rot, 0), Err(LatticeError::InvalidModulus)));
        assert!(matches!(
            finite_quotient_oracle(&IntMatrix::identity(3), 11),
            Err(LatticeError::QuotientTooLarge { .. })
        ));
    }

    #[test]
    fn separability_witnesses() {
        assert_eq!(separability_witness(&IntMatrix::from_rows([[-1]])).unwrap(), 2);
        assert_eq!(separability_witness(&IntMatrix::from_rows([[0, 1], [-1, 0]])).unwrap(), 2);
        assert_eq!(separability_witness(&IntMatrix::from_rows([[2, 1], [1, 1]])).unwrap(), 1);
        assert!(matches!(
            separability_witness(&IntMatrix::identity(2)),
            Err(LatticeError::InfiniteReidemeister)
        ));
        assert!(separability_check(&IntMatrix::from_rows([[3, 2], [1, 1]])).unwrap().passed);
    }
}
