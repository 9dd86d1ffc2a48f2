use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::LatticeError;
use crate::linalg;
use crate::number::JsonInt;

/// Square integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MatrixFile", into = "MatrixFile")]
pub struct IntMatrix {
    entries: Vec<Vec<BigInt>>,
}

/// On-disk form: `{"n": 2, "entries": [[2, 1], [1, 1]]}`.
#[derive(Serialize, Deserialize)]
struct MatrixFile {
    n: usize,
    entries: Vec<Vec<JsonInt>>,
}

impl TryFrom<MatrixFile> for IntMatrix {
    type Error = LatticeError;

    fn try_from(file: MatrixFile) -> Result<Self, LatticeError> {
        if file.entries.len() != file.n {
            return Err(LatticeError::NotSquare);
        }
        IntMatrix::new(
            file.entries.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()).collect(),
        )
    }
}

impl From<IntMatrix> for MatrixFile {
    fn from(m: IntMatrix) -> Self {
        MatrixFile {
            n: m.dim(),
            entries: m.entries.into_iter().map(|r| r.into_iter().map(JsonInt).collect()).collect(),
        }
    }
}

impl IntMatrix {
    pub fn new(entries: Vec<Vec<BigInt>>) -> Result<Self, LatticeError> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(LatticeError::NotSquare);
        }
        Ok(IntMatrix { entries })
    }

    pub fn from_rows<const N: usize>(rows: [[i64; N]; N]) -> Self {
        IntMatrix {
            entries: rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        }
    }

    pub fn from_vecs(rows: &[Vec<i64>]) -> Result<Self, LatticeError> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        IntMatrix { entries }
    }

    pub fn scalar(n: usize, c: i64) -> Self {
        let mut m = Self::identity(n);
        for i in 0..n {
            m.entries[i][i] = BigInt::from(c);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub(crate) fn entries_mut(&mut self) -> &mut Vec<Vec<BigInt>> {
        &mut self.entries
    }

    pub fn determinant(&self) -> BigInt {
        linalg::determinant(&self.entries)
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }

    pub fn ensure_unimodular(&self) -> Result<(), LatticeError> {
        let det = self.determinant();
        if det.abs().is_one() {
            Ok(())
        } else {
            Err(LatticeError::NotUnimodular { determinant: det })
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.dim();
        IntMatrix {
            entries: (0..n).map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect()).collect(),
        }
    }

    /// `self - I`
    pub fn minus_identity(&self) -> IntMatrix {
        let mut m = self.clone();
        for i in 0..m.dim() {
            m.entries[i][i] -= 1;
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.dim();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.entries[i][k] * &other.entries[k][j]).sum())
                    .collect()
            })
            .collect();
        IntMatrix { entries }
    }

    pub fn pow(&self, mut k: u32) -> IntMatrix {
        let mut result = IntMatrix::identity(self.dim());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        result
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.entries.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Entries reduced into `0..m`.
    pub fn reduce_mod(&self, m: usize) -> Vec<Vec<usize>> {
        let m = BigInt::from(m);
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let r = ((x % &m) + &m) % &m;
                        usize::try_from(&r).expect("reduced entry fits")
                    })
                    .collect()
            })
            .collect()
    }

    /// Inverse of a unimodular matrix, as `± adj(self)`.
    pub fn unimodular_inverse(&self) -> Result<IntMatrix, LatticeError> {
        let det = self.determinant();
        if !det.abs().is_one() {
            return Err(LatticeError::NotUnimodular { determinant: det });
        }
        let n = self.dim();
        let minor = |r: usize, c: usize| -> Vec<Vec<BigInt>> {
            (0..n)
                .filter(|&i| i != r)
                .map(|i| (0..n).filter(|&j| j != c).map(|j| self.entries[i][j].clone()).collect())
                .collect()
        };
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let cofactor = linalg::determinant(&minor(j, i));
                        let signed = if (i + j) % 2 == 0 { cofactor } else { -cofactor };
                        signed * &det
                    })
                    .collect()
            })
            .collect();
        Ok(IntMatrix { entries })
    }

    /// `|det(self - I)|`
    pub fn fixed_determinant(&self) -> BigInt {
        self.minus_identity().determinant().abs()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
