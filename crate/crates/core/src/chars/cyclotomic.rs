//! Exact character values in `ℤ[ζ_e]`, recovered from the mod-p table.
//!
//! For `g` of order `o`, `χ(g)` is a sum of `o`-th roots of unity whose
//! multiplicities are `m_k = (1/o) Σ_l χ(g^l) ζ_o^{-kl}`. Those integers lie in
//! `[0, χ(1)]`, well below `p`, so they are read off exactly from their residues.

use serde::Serialize;

use super::table::CharacterTable;
use super::CharError;
use crate::group::FiniteGroup;
use crate::modp::PrimeField;

/// Arithmetic in `ℤ[x] / Φ_e(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    exponent: usize,
    modulus: Vec<i64>,
}

impl CyclotomicField {
    pub fn new(exponent: usize) -> Self {
        CyclotomicField { exponent, modulus: cyclotomic_polynomial(exponent) }
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// Remainder modulo the monic `Φ_e`, padded to `degree()` coefficients.
    pub fn reduce(&self, mut poly: Vec<i64>) -> Vec<i64> {
        let d = self.degree();
        while poly.len() > d {
            let lead = poly.pop().unwrap();
            if lead != 0 {
                let shift = poly.len() - d;
                for (i, &c) in self.modulus[..d].iter().enumerate() {
                    poly[shift + i] -= lead * c;
                }
            }
        }
        poly.resize(d, 0);
        poly
    }

    /// `ζ_e^k`
    pub fn root_power(&self, k: usize) -> Vec<i64> {
        let mut poly = vec![0; k % self.exponent + 1];
        poly[k % self.exponent] = 1;
        self.reduce(poly)
    }

    pub fn from_integer(&self, n: i64) -> Vec<i64> {
        self.reduce(vec![n])
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            if x != 0 {
                for (j, &y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
        }
        self.reduce(out)
    }

    pub fn scale(&self, a: &[i64], n: i64) -> Vec<i64> {
        a.iter().map(|x| x * n).collect()
    }

    /// The rational integer represented by `a`, if it is one.
    pub fn as_integer(&self, a: &[i64]) -> Option<i64> {
        match a.split_first() {
            None => Some(0),
            Some((&c, rest)) => rest.iter().all(|&x| x == 0).then_some(c),
        }
    }

    /// Image under `ζ_e ↦ z` in `F_p`, where `z` is a primitive e-th root of unity.
    pub fn reduce_mod_p(&self, a: &[i64], z: u64, field: &PrimeField) -> u64 {
        a.iter().rev().fold(0, |acc, &c| field.add(field.mul(acc, z), field.reduce(c)))
    }
}

/// `Φ_n`, coefficients lowest degree first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    // x^n - 1 = Π_{d | n} Φ_d
    let mut poly = vec![0i64; n + 1];
    poly[0] = -1;
    poly[n] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        poly = divide_monic(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &x) in den.iter().enumerate() {
            rem[i + j] -= c * x;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

/// Exact values of every character on every class, as coefficient vectors
/// over the power basis of `ℚ(ζ_e)` reduced modulo `Φ_e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclotomicLift {
    pub exponent: usize,
    /// Residue of `ζ_e` in `F_p` used for the reduction.
    pub root: u64,
    pub values: Vec<Vec<Vec<i64>>>,
}

impl CyclotomicLift {
    pub fn compute(table: &CharacterTable, group: &FiniteGroup) -> Result<Self, CharError> {
        let field = table.field();
        let e = table.exponent();
        let z = field.root_of_unity(e as u64);
        let cf = CyclotomicField::new(e);
        let classes = table.classes();
        let k = table.len();

        let mut values = vec![Vec::with_capacity(k); k];
        for (c, class) in classes.classes.iter().enumerate() {
            let g = class[0];
            let o = group.element_order(g);
            let step = e / o;
            let zo = field.pow(z, step as u64);
            let power_classes: Vec<usize> =
                (0..o).map(|l| classes.class_of[group.power(g, l)]).collect();
            let o_inv = field.inv(o as u64 % field.modulus());
            for (i, row) in table.rows().iter().enumerate() {
                let degree = table.degrees()[i] as u64;
                let mut poly = vec![0i64; e];
                let mut total = 0;
                for kk in 0..o {
                    let mut m = 0;
                    for (l, &pc) in power_classes.iter().enumerate() {
                        let exp = ((o - (kk * l) % o) % o) as u64;
                        m = field.add(m, field.mul(row[pc], field.pow(zo, exp)));
                    }
                    let m = field.mul(m, o_inv);
                    if m > degree {
                        return Err(CharError::LiftFailed { row: i, class: c });
                    }
                    total += m;
                    poly[kk * step] += m as i64;
                }
                if total != degree {
                    return Err(CharError::LiftFailed { row: i, class: c });
                }
                let exact = cf.reduce(poly);
                if cf.reduce_mod_p(&exact, z, &field) != row[c] {
                    return Err(CharError::LiftFailed { row: i, class: c });
                }
                values[i].push(exact);
            }
        }
        let lift = CyclotomicLift { exponent: e, root: z, values };
        lift.check_orthogonality(table)?;
        Ok(lift)
    }

    /// Row orthogonality in exact arithmetic.
    pub fn check_orthogonality(&self, table: &CharacterTable) -> Result<(), CharError> {
        let cf = CyclotomicField::new(self.exponent);
        let k = self.values.len();
        let inverse = table.inverse_class();
        for i in 0..k {
            for j in 0..k {
                let mut sum = cf.from_integer(0);
                for c in 0..k {
                    let term = cf.mul(&self.values[i][c], &self.values[j][inverse[c]]);
                    sum = cf.add(&sum, &cf.scale(&term, table.class_sizes()[c] as i64));
                }
                let expected = if i == j { table.order() as i64 } else { 0 };
                if cf.as_integer(&sum) != Some(expected) {
                    return Err(CharError::Inconsistent(format!(
                        "exact rows {i} and {j} not orthogonal"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn root_arithmetic() {
        let cf = CyclotomicField::new(3);
        // ζ^2 = -1 - ζ
        assert_eq!(cf.root_power(2), vec![-1, -1]);
        let sum = cf.add(&cf.add(&cf.root_power(0), &cf.root_power(1)), &cf.root_power(2));
        assert_eq!(cf.as_integer(&sum), Some(0));
        assert_eq!(cf.mul(&cf.root_power(1), &cf.root_power(2)), cf.from_integer(1));
    }

    #[test]
    fn exact_tables() {
        for g in [
            corpus::symmetric(3),
            corpus::cyclic(5),
            corpus::quaternion(),
            corpus::alternating(4),
            corpus::alternating(5),
            corpus::heisenberg(3),
        ] {
            let t = CharacterTable::compute_lifted(&g).unwrap();
            let lift = t.lift().unwrap();
            let cf = CyclotomicField::new(t.exponent());
            // degrees come out as integers at the identity class
            for (i, d) in t.degrees().iter().enumerate() {
                assert_eq!(cf.as_integer(&lift.values[i][t.identity_class()]), Some(*d as i64));
            }
        }
    }

    #[test]
    fn s3_exact_values_are_integers() {
        let t = CharacterTable::compute_lifted(&corpus::symmetric(3)).unwrap();
        let cf = CyclotomicField::new(6);
        let lift = t.lift().unwrap();
        let mut two_dim: Vec<i64> =
            lift.values[2].iter().map(|v| cf.as_integer(v).unwrap()).collect();
        two_dim.sort();
        assert_eq!(two_dim, vec![-1, 0, 2]);
    }
}
