//! Smith normal form by elementary row and column operations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::matrix::IntMatrix;

/// `U · A · V = D` with `U`, `V` unimodular and `D = diag(d_1, …, d_n)`,
/// `d_i ≥ 0`, `d_1 | d_2 | … | d_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
}

impl SnfDecomposition {
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        (0..self.d.dim()).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Reconstruction, unimodularity and the divisibility chain.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        let n = a.dim();
        let diagonal = (0..n).all(|i| (0..n).all(|j| i == j || self.d.get(i, j).is_zero()));
        let divisors = self.elementary_divisors();
        let chain = divisors.iter().all(|x| !x.is_negative())
            && divisors.windows(2).all(|w| {
                if w[0].is_zero() {
                    w[1].is_zero()
                } else {
                    (&w[1] % &w[0]).is_zero()
                }
            });
        diagonal
            && chain
            && self.u.mul(a).mul(&self.v) == self.d
            && self.u.is_unimodular()
            && self.v.is_unimodular()
    }
}

/// Pivots on the entry of least nonzero absolute value, earliest in row-major
/// order on ties.
pub fn smith_normal_form(a: &IntMatrix) -> SnfDecomposition {
    let n = a.dim();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(n);
    let mut v = IntMatrix::identity(n);

    for t in 0..n {
        loop {
            let Some((pi, pj)) = min_pivot(&d, t) else {
                // remaining block is zero
                return SnfDecomposition { u, v, d };
            };
            swap_rows(&mut d, t, pi);
            swap_rows(&mut u, t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);

            let pivot = d.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..n {
                let q = d.get(i, t).div_floor(&pivot);
                if !q.is_zero() {
                    add_row_multiple(&mut d, i, t, &-&q);
                    add_row_multiple(&mut u, i, t, &-&q);
                }
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                let q = d.get(t, j).div_floor(&pivot);
                if !q.is_zero() {
                    add_col_multiple(&mut d, j, t, &-&q);
                    add_col_multiple(&mut v, j, t, &-&q);
                }
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let offender = (t + 1..n)
                .find(|&i| (t + 1..n).any(|j| !(d.get(i, j) % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    add_row_multiple(&mut d, t, i, &BigInt::from(1));
                    add_row_multiple(&mut u, t, i, &BigInt::from(1));
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    SnfDecomposition { u, v, d }
}

fn min_pivot(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let n = m.dim();
    let mut best: Option<(usize, usize)> = None;
    for i in t..n {
        for j in t..n {
            let x = m.get(i, j);
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < m.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        m.entries_mut().swap(a, b);
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        for row in m.entries_mut() {
            row.swap(a, b);
        }
    }
}

/// row_target += factor * row_source
fn add_row_multiple(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    let src = m.entries()[source].clone();
    for (x, s) in m.entries_mut()[target].iter_mut().zip(src) {
        *x += factor * s;
    }
}

/// col_target += factor * col_source
fn add_col_multiple(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    for row in m.entries_mut() {
        let s = row[source].clone();
        row[target] += factor * s;
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for x in m.entries_mut()[i].iter_mut() {
        *x = -&*x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn divisors(a: &IntMatrix) -> Vec<i64> {
        smith_normal_form(a).elementary_divisors().iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn examples() {
        let id = IntMatrix::identity(3);
        let snf = smith_normal_form(&id);
        assert_eq!(snf.d, id);
        assert_eq!(snf.u, id);
        assert_eq!(snf.v, id);
        assert_eq!(divisors(&IntMatrix::from_rows([[2, 0], [0, 3]])), vec![1, 6]);
        assert_eq!(divisors(&IntMatrix::from_rows([[0, 0], [0, 0]])), vec![0, 0]);
        assert_eq!(divisors(&IntMatrix::from_rows([[-2]])), vec![2]);
        assert_eq!(divisors(&IntMatrix::from_rows([[-1, 1], [-1, -1]])), vec![1, 2]);
        assert_eq!(divisors(&IntMatrix::from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])), vec![2, 6, 12]);
    }

    proptest! {
        #[test]
        fn decomposition_is_valid(entries in prop::collection::vec(-20i64..20, 9)) {
            let rows: Vec<Vec<i64>> = entries.chunks(3).map(<[i64]>::to_vec).collect();
            let a = IntMatrix::from_vecs(&rows).unwrap();
            let snf = smith_normal_form(&a);
            prop_assert!(snf.verify(&a));
            let product: BigInt = snf.elementary_divisors().iter().product();
            prop_assert_eq!(product, a.determinant().abs());
        }
    }
}
