//! Characters of ℤⁿ as points of the torus ℝⁿ/ℤⁿ.
//!
//! `x` pairs with `v ∈ ℤⁿ` by `exp(2πi x·v)`, so precomposing with `A` sends
//! `x` to `Aᵀx`. The fixed characters solve `(Aᵀ − I)x ∈ ℤⁿ`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use super::LatticeError;

pub const TORUS_ENUMERATION_LIMIT: usize = 1_000_000;

/// A torsion point of the torus, coordinates reduced into `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    coordinates: Vec<BigRational>,
    order: BigUint,
}

impl TorusPoint {
    pub fn new(coordinates: Vec<BigRational>) -> Self {
        let coordinates: Vec<BigRational> = coordinates.into_iter().map(|x| &x - x.floor()).collect();
        let order = coordinates
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
            .magnitude()
            .clone();
        TorusPoint { coordinates, order }
    }

    pub fn coordinates(&self) -> &[BigRational] {
        &self.coordinates
    }

    /// Least `k ≥ 1` with `k·x ∈ ℤⁿ`.
    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// `k·x ∈ ℤⁿ`
    pub fn is_killed_by(&self, k: &BigUint) -> bool {
        let k = BigRational::from_integer(BigInt::from(k.clone()));
        self.coordinates.iter().all(|x| (x * &k).is_integer())
    }
}

impl Serialize for TorusPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            coordinates: Vec<String>,
            order: crate::number::JsonInt,
        }
        Repr {
            coordinates: self.coordinates.iter().map(ToString::to_string).collect(),
            order: crate::number::JsonInt(BigInt::from(self.order.clone())),
        }
        .serialize(s)
    }
}

/// `x ↦ Aᵀx mod ℤⁿ`, the dual action of `A` on characters.
pub fn torus_map(a: &IntMatrix, x: &TorusPoint) -> TorusPoint {
    let n = a.dim();
    let image = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| x.coordinates[j].clone() * BigRational::from_integer(a.get(j, i).clone()))
                .fold(BigRational::zero(), |acc, t| acc + t)
        })
        .collect();
    TorusPoint::new(image)
}

/// Fixed characters of `A` over a common denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedResidues {
    /// Largest elementary divisor of `Aᵀ − I`; every fixed point lies in `(1/D)ℤⁿ`.
    pub denominator: u64,
    /// `D·x mod D` for each fixed `x`, in enumeration order.
    pub points: Vec<Vec<u64>>,
    sizes: Vec<u64>,
    /// `V⁻¹ mod D`
    inverse: Vec<Vec<u64>>,
}

impl FixedResidues {
    /// Position of `D·x` in `points`, read off from its coordinates `V⁻¹x`;
    /// `None` if `x` is not fixed.
    pub fn index_of(&self, x: &[u64]) -> Option<usize> {
        let d = self.denominator;
        let mut index = 0usize;
        for (row, &size) in self.inverse.iter().zip(&self.sizes) {
            let scaled = row.iter().zip(x).fold(0u64, |acc, (&c, &v)| (acc + c * v) % d);
            let step = d / size;
            if scaled % step != 0 {
                return None;
            }
            index = index * size as usize + (scaled / step) as usize;
        }
        Some(index)
    }
}

/// Every `x ∈ [0,1)ⁿ` with `(Aᵀ − I)x ∈ ℤⁿ`, as residues mod `D`.
///
/// With `U (Aᵀ − I) V = diag(d_i)` the solutions are `x = V y` with
/// `y_i ∈ {0, 1/d_i, …, (d_i − 1)/d_i}`.
pub fn fixed_dual_residues(a: &IntMatrix) -> Result<FixedResidues, LatticeError> {
    let snf = smith_normal_form(&a.transpose().minus_identity());
    let divisors = snf.elementary_divisors();
    if divisors.iter().any(Zero::is_zero) {
        return Err(LatticeError::InfiniteFixedSet);
    }
    let count: BigInt = divisors.iter().product();
    let count = count.magnitude().clone();
    if count > BigUint::from(TORUS_ENUMERATION_LIMIT) {
        return Err(LatticeError::EnumerationTooLarge { count, limit: TORUS_ENUMERATION_LIMIT });
    }
    let n = a.dim();
    let sizes: Vec<u64> = divisors.iter().map(|d| d.to_u64().expect("bounded by count")).collect();
    let total = count.to_usize().expect("bounded by limit");
    // D ≤ TORUS_ENUMERATION_LIMIT, so residue products fit in u64
    let denominator = sizes.last().copied().unwrap_or(1);
    let v = snf.v.reduce_mod(denominator as usize);
    let inverse = snf.v.unimodular_inverse()?.reduce_mod(denominator as usize);
    let inverse = inverse.into_iter().map(|row| row.into_iter().map(|c| c as u64).collect()).collect();

    // moving digit j by one adds (D / d_j)·V e_j; a full wrap adds D·V e_j ≡ 0,
    // so carries need no correction
    let columns: Vec<Vec<u64>> = (0..n)
        .map(|j| (0..n).map(|i| v[i][j] as u64 * (denominator / sizes[j]) % denominator).collect())
        .collect();
    let mut points = Vec::with_capacity(total);
    let mut digits = vec![0u64; n];
    let mut x = vec![0u64; n];
    for _ in 0..total {
        points.push(x.clone());
        for j in (0..n).rev() {
            for (xi, &c) in x.iter_mut().zip(&columns[j]) {
                *xi = (*xi + c) % denominator;
            }
            digits[j] += 1;
            if digits[j] < sizes[j] {
                break;
            }
            digits[j] = 0;
        }
    }
    Ok(FixedResidues { denominator, points, sizes, inverse })
}

/// Every `x ∈ [0,1)ⁿ` with `(Aᵀ − I)x ∈ ℤⁿ`, sorted.
pub fn fixed_dual_characters(a: &IntMatrix) -> Result<Vec<TorusPoint>, LatticeError> {
    let FixedResidues { denominator, points, .. } = fixed_dual_residues(a)?;
    let d = BigInt::from(denominator);
    let mut points: Vec<TorusPoint> = points
        .into_iter()
        .map(|x| TorusPoint::new(x.into_iter().map(|r| BigRational::new(BigInt::from(r), d.clone())).collect()))
        .collect();
    points.sort();
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn examples() {
        let neg = fixed_dual_characters(&IntMatrix::from_rows([[-1]])).unwrap();
        assert_eq!(neg, vec![TorusPoint::new(vec![q(0, 1)]), TorusPoint::new(vec![q(1, 2)])]);
        assert_eq!(neg[1].order(), &BigUint::from(2u32));

        let rot = fixed_dual_characters(&IntMatrix::from_rows([[0, 1], [-1, 0]])).unwrap();
        assert_eq!(
            rot,
            vec![TorusPoint::new(vec![q(0, 1), q(0, 1)]), TorusPoint::new(vec![q(1, 2), q(1, 2)])]
        );

        let cat = fixed_dual_characters(&IntMatrix::from_rows([[2, 1], [1, 1]])).unwrap();
        assert_eq!(cat, vec![TorusPoint::new(vec![q(0, 1), q(0, 1)])]);

        assert!(matches!(
            fixed_dual_characters(&IntMatrix::identity(2)),
            Err(LatticeError::InfiniteFixedSet)
        ));
    }

    #[test]
    fn reduction_and_order() {
        let p = TorusPoint::new(vec![q(-1, 3), q(5, 2)]);
        assert_eq!(p.coordinates(), &[q(2, 3), q(1, 2)]);
        assert_eq!(p.order(), &BigUint::from(6u32));
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"coordinates":["2/3","1/2"],"order":6}"#);
    }

    #[test]
    fn points_are_fixed_and_distinct() {
        let a = IntMatrix::from_rows([[0, 0, 1], [1, 0, -7], [0, 1, 3]]);
        let points = fixed_dual_characters(&a).unwrap();
        assert_eq!(BigUint::from(points.len()), *a.fixed_determinant().magnitude());
        for p in &points {
            assert_eq!(&torus_map(&a, p), p);
        }
        let mut dedup = points.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), points.len());
    }

    #[test]
    fn residue_indices() {
        for a in [
            IntMatrix::from_rows([[3, 1], [2, 1]]).pow(4),
            IntMatrix::from_rows([[0, 0, 1], [1, 0, -7], [0, 1, 3]]),
            IntMatrix::from_rows([[-1, 0], [0, -1]]),
        ] {
            let r = fixed_dual_residues(&a).unwrap();
            for (i, x) in r.points.iter().enumerate() {
                assert_eq!(r.index_of(x), Some(i));
            }
        }
        // diag(-1, -1) fixes the 2-torsion only
        let r = fixed_dual_residues(&IntMatrix::from_rows([[-1, 0], [0, -1]])).unwrap();
        assert_eq!(r.denominator, 2);
        assert_eq!(r.index_of(&[1, 0]), Some(2));
        let r = fixed_dual_residues(&IntMatrix::from_rows([[0, 1], [-1, 0]])).unwrap();
        assert_eq!(r.index_of(&[1, 0]), None);
    }
}
