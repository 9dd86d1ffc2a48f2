//! Iterates of an automorphism: Reidemeister number sequences, the Gauss
//! congruences they satisfy, and the count of periodic points of the dual
//! action by least period.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::chars::{dual_action, CharError, CharacterTable};
use crate::group::{Automorphism, FiniteGroup};
use crate::lattice::{fixed_dual_residues, reidemeister_number_lattice, IntMatrix, LatticeError};
use crate::number::{JsonInt, ReidemeisterNumber};
use crate::twisted::{self, CheckReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DynamicsError {
    #[error("InfiniteValueEncountered: R(φ^{n}) is infinite")]
    InfiniteValueEncountered { n: usize },
    #[error("InvalidLength: {0}")]
    InvalidLength(&'static str),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Char(#[from] CharError),
}

/// `μ(n)` by trial division; `μ(0)` is taken to be 0.
pub fn moebius(n: u64) -> i8 {
    if n == 0 {
        return 0;
    }
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// An automorphism to iterate.
#[derive(Clone, Debug)]
pub enum Source {
    Finite { group: FiniteGroup, phi: Automorphism },
    Lattice(IntMatrix),
}

impl Source {
    /// `R(φⁿ)`, computed from scratch.
    pub fn reidemeister_of_power(&self, n: usize) -> Result<ReidemeisterNumber, DynamicsError> {
        match self {
            Source::Finite { group, phi } => {
                // repeated composition rather than a cycle shortcut
                let mut power = phi.clone();
                for _ in 1..n {
                    power = power.compose(phi);
                }
                Ok(ReidemeisterNumber::from(twisted::reidemeister_number(group, &power)))
            }
            Source::Lattice(a) => Ok(reidemeister_number_lattice(&a.pow(n as u32))?),
        }
    }
}

/// `values[n - 1] = R(φⁿ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReidemeisterSequence {
    pub values: Vec<ReidemeisterNumber>,
}

impl ReidemeisterSequence {
    pub fn get(&self, n: usize) -> Option<&ReidemeisterNumber> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn finite(&self, n: usize) -> Result<BigInt, DynamicsError> {
        match self.get(n) {
            Some(ReidemeisterNumber::Finite(v)) => Ok(BigInt::from(v.clone())),
            Some(ReidemeisterNumber::Infinite) => Err(DynamicsError::InfiniteValueEncountered { n }),
            None => Err(DynamicsError::InvalidLength("sequence shorter than requested n")),
        }
    }
}

pub fn reidemeister_sequence(source: &Source, max_n: usize) -> Result<ReidemeisterSequence, DynamicsError> {
    if max_n == 0 {
        return Err(DynamicsError::InvalidLength("N must be at least 1"));
    }
    let values = (1..=max_n)
        .into_par_iter()
        .map(|n| source.reidemeister_of_power(n))
        .collect::<Result<_, _>>()?;
    Ok(ReidemeisterSequence { values })
}

/// One row of the congruence table: `S = Σ_{d|n} μ(d) R(φ^{n/d})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceRow {
    pub n: usize,
    pub sum: JsonInt,
    /// `S / n` when the division is exact.
    pub quotient: Option<JsonInt>,
    pub passed: bool,
}

pub fn gauss_congruence_check(seq: &ReidemeisterSequence, n: usize) -> Result<CongruenceRow, DynamicsError> {
    if n == 0 {
        return Err(DynamicsError::InvalidLength("n must be at least 1"));
    }
    let mut sum = BigInt::zero();
    for d in divisors(n as u64) {
        let mu = moebius(d);
        if mu != 0 {
            sum += seq.finite(n / d as usize)? * mu;
        }
    }
    let (q, r) = sum.div_rem(&BigInt::from(n));
    let passed = r.is_zero();
    Ok(CongruenceRow { n, sum: JsonInt(sum), quotient: passed.then_some(JsonInt(q)), passed })
}

/// Rows for `n = 1..=len`; stops at the first `n` needing an infinite value.
pub fn gauss_congruence_table(seq: &ReidemeisterSequence) -> Result<Vec<CongruenceRow>, DynamicsError> {
    (1..=seq.len()).map(|n| gauss_congruence_check(seq, n)).collect()
}

/// Periodic points of the dual action `φ̂` whose period divides `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicPointCount {
    pub n: usize,
    /// `F_d = #Fix(φ̂^d)` for `d | n`.
    pub fixed: BTreeMap<usize, usize>,
    /// `P_d`, points of least period `d`, for `d | n`.
    pub least_period: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicReport {
    pub counts: PeriodicPointCount,
    /// `P_d` by direct orbit partition.
    pub by_orbits: BTreeMap<usize, usize>,
    /// `R(φⁿ)` from the sequence source.
    pub reidemeister: ReidemeisterNumber,
    pub checks: Vec<CheckReport>,
}

impl PeriodicReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `P_n = Σ_{d|n} μ(n/d) F_d` for every divisor.
fn invert(n: usize, fixed: &BTreeMap<usize, usize>) -> BTreeMap<usize, i64> {
    divisors(n as u64)
        .into_iter()
        .map(|m| {
            let p = divisors(m)
                .into_iter()
                .map(|d| i64::from(moebius(m / d)) * fixed[&(d as usize)] as i64)
                .sum();
            (m as usize, p)
        })
        .collect()
}

pub fn periodic_point_accounting(source: &Source, n: usize) -> Result<PeriodicReport, DynamicsError> {
    accounting(source, n, None)
}

/// Same, reusing a character table of the finite group across many `n`.
pub fn periodic_point_accounting_with(
    source: &Source,
    n: usize,
    table: &CharacterTable,
) -> Result<PeriodicReport, DynamicsError> {
    accounting(source, n, Some(table))
}

fn accounting(
    source: &Source,
    n: usize,
    table: Option<&CharacterTable>,
) -> Result<PeriodicReport, DynamicsError> {
    if n == 0 {
        return Err(DynamicsError::InvalidLength("n must be at least 1"));
    }
    let reidemeister = source.reidemeister_of_power(n)?;
    let divs: Vec<usize> = divisors(n as u64).into_iter().map(|d| d as usize).collect();

    let (fixed, periods): (BTreeMap<usize, usize>, Vec<usize>) = match source {
        Source::Finite { group, phi } => {
            let computed;
            let table = match table {
                Some(t) => t,
                None => {
                    computed = CharacterTable::compute(group)?;
                    &computed
                }
            };
            let mut fixed = BTreeMap::new();
            for &d in &divs {
                fixed.insert(d, dual_action(table, &phi.pow(d))?.fixed_rows.len());
            }
            let periods = dual_action(table, phi)?.row_periods();
            (fixed, periods.into_iter().filter(|p| n % p == 0).collect())
        }
        Source::Lattice(a) => {
            for d in &divs {
                if reidemeister_number_lattice(&a.pow(*d as u32))?.is_infinite() {
                    return Err(DynamicsError::InfiniteValueEncountered { n: *d });
                }
            }
            lattice_periods(a, n, &divs)?
        }
    };

    let mut checks = Vec::new();
    let inverted = invert(n, &fixed);
    let mut least_period = BTreeMap::new();
    let mut negative = None;
    for (&d, &p) in &inverted {
        if p < 0 && negative.is_none() {
            negative = Some(format!("P_{d} = {p}"));
        }
        least_period.insert(d, p.max(0) as usize);
    }
    checks.push(CheckReport::from_first_failure("nonnegative-periods", negative));

    let mut by_orbits: BTreeMap<usize, usize> = divs.iter().map(|&d| (d, 0)).collect();
    for p in periods {
        *by_orbits.get_mut(&p).expect("period divides n") += 1;
    }
    let mismatch = divs
        .iter()
        .find(|d| by_orbits[d] != least_period[d])
        .map(|d| format!("P_{d}: inversion {} vs orbits {}", least_period[d], by_orbits[d]));
    checks.push(CheckReport::from_first_failure("inversion-matches-orbits", mismatch));

    let total: usize = least_period.values().sum();
    let accounting = match reidemeister.finite() {
        Some(r) if *r == BigUint::from(total) => None,
        _ => Some(format!("R(φ^{n}) = {reidemeister}, Σ P_d = {total}")),
    };
    checks.push(CheckReport::from_first_failure("accounting-identity", accounting));

    let divisibility = least_period
        .iter()
        .find(|(d, p)| *p % *d != 0)
        .map(|(d, p)| format!("{d} does not divide P_{d} = {p}"));
    checks.push(CheckReport::from_first_failure("period-divides-count", divisibility));

    Ok(PeriodicReport {
        counts: PeriodicPointCount { n, fixed, least_period },
        by_orbits,
        reidemeister,
        checks,
    })
}

/// Enumerates `Fix(Âⁿ)` on the torus, counts the points fixed by each `Â^d`,
/// and the least period of each point under `x ↦ Aᵀx`.
fn lattice_periods(
    a: &IntMatrix,
    n: usize,
    divs: &[usize],
) -> Result<(BTreeMap<usize, usize>, Vec<usize>), DynamicsError> {
    let residues = fixed_dual_residues(&a.pow(n as u32))?;
    let modulus = residues.denominator;
    let at = a.transpose().reduce_mod(modulus as usize);
    let step = |x: &[u64], out: &mut [u64]| {
        for (row, slot) in at.iter().zip(out.iter_mut()) {
            *slot = row.iter().zip(x).fold(0u64, |acc, (&c, &v)| (acc + c as u64 * v) % modulus);
        }
    };

    let total = residues.points.len();
    let mut period = vec![0usize; total];
    let mut orbit = Vec::new();
    let mut x = vec![0u64; a.dim()];
    let mut y = x.clone();
    for start in 0..total {
        if period[start] != 0 {
            continue;
        }
        orbit.clear();
        orbit.push(start);
        step(&residues.points[start], &mut x);
        while x != residues.points[start] {
            orbit.push(residues.index_of(&x).expect("Fix(Âⁿ) is Â-invariant"));
            step(&x, &mut y);
            std::mem::swap(&mut x, &mut y);
        }
        for &i in &orbit {
            period[i] = orbit.len();
        }
    }

    let fixed = divs
        .iter()
        .map(|&d| (d, period.iter().filter(|&&p| d % p == 0).count()))
        .collect();
    Ok((fixed, period))
}

/// Whether `|det(Aⁿ − I)|` is nonzero and small enough to enumerate.
pub fn accounting_feasible(a: &IntMatrix, n: usize) -> bool {
    a.pow(n as u32)
        .fixed_determinant()
        .to_usize()
        .is_some_and(|c| c > 0 && c <= crate::lattice::TORUS_ENUMERATION_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn finite_values(seq: &ReidemeisterSequence) -> Vec<u64> {
        seq.values.iter().map(|v| u64::try_from(v.finite().unwrap()).unwrap()).collect()
    }

    #[test]
    fn moebius_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &mu) in expected.iter().enumerate() {
            assert_eq!(moebius(i as u64 + 1), mu, "μ({})", i + 1);
        }
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(0), 0);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn sequences() {
        let cat = Source::Lattice(IntMatrix::from_rows([[2, 1], [1, 1]]));
        let seq = reidemeister_sequence(&cat, 4).unwrap();
        assert_eq!(finite_values(&seq), vec![1, 5, 16, 45]);

        let s3 = Source::Finite { group: corpus::symmetric(3), phi: Automorphism::identity(6) };
        assert_eq!(finite_values(&reidemeister_sequence(&s3, 4).unwrap()), vec![3; 4]);

        let id = Source::Lattice(IntMatrix::identity(2));
        let seq = reidemeister_sequence(&id, 3).unwrap();
        assert!(seq.values.iter().all(ReidemeisterNumber::is_infinite));
        assert!(matches!(
            gauss_congruence_check(&seq, 1),
            Err(DynamicsError::InfiniteValueEncountered { n: 1 })
        ));
    }

    #[test]
    fn congruences() {
        let cat = Source::Lattice(IntMatrix::from_rows([[2, 1], [1, 1]]));
        let table = gauss_congruence_table(&reidemeister_sequence(&cat, 3).unwrap()).unwrap();
        let rows: Vec<(i64, Option<i64>)> = table
            .iter()
            .map(|r| (i64::try_from(&r.sum.0).unwrap(), r.quotient.as_ref().map(|q| i64::try_from(&q.0).unwrap())))
            .collect();
        assert_eq!(rows, vec![(1, Some(1)), (4, Some(2)), (15, Some(5))]);
        assert!(table.iter().all(|r| r.passed));

        let s3 = Source::Finite { group: corpus::symmetric(3), phi: Automorphism::identity(6) };
        let table = gauss_congruence_table(&reidemeister_sequence(&s3, 6).unwrap()).unwrap();
        assert!(table.iter().all(|r| r.passed));
        assert!(table[1..].iter().all(|r| r.sum.0.is_zero()));
    }

    #[test]
    fn rotation_periods() {
        let rot = Source::Lattice(IntMatrix::from_rows([[0, 1], [-1, 0]]));
        let report = periodic_point_accounting(&rot, 2).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
        assert_eq!(report.counts.least_period, BTreeMap::from([(1, 2), (2, 2)]));
        assert_eq!(report.reidemeister, ReidemeisterNumber::from(4));
    }

    #[test]
    fn finite_periods() {
        let s3 = corpus::symmetric(3);
        let report = periodic_point_accounting(
            &Source::Finite { group: s3.clone(), phi: Automorphism::identity(6) },
            1,
        )
        .unwrap();
        assert_eq!(report.counts.least_period, BTreeMap::from([(1, 3)]));

        let g = corpus::z2_x_z4();
        for phi in g.automorphisms().unwrap() {
            for n in 1..=4 {
                let source = Source::Finite { group: g.clone(), phi: phi.clone() };
                let report = periodic_point_accounting(&source, n).unwrap();
                assert!(report.passed(), "{:?}", report.checks);
            }
        }
    }

    #[test]
    fn lattice_accounting() {
        let a = IntMatrix::from_rows([[2, 1], [1, 1]]);
        for n in 1..=8 {
            let report = periodic_point_accounting(&Source::Lattice(a.clone()), n).unwrap();
            assert!(report.passed(), "n = {n}: {:?}", report.checks);
        }
        let report = periodic_point_accounting(&Source::Lattice(a), 6).unwrap();
        // |det(A^d − I)| = 1, 5, 16, 45, 121, 320
        assert_eq!(report.counts.fixed, BTreeMap::from([(1, 1), (2, 5), (3, 16), (6, 320)]));
        assert_eq!(report.counts.least_period, BTreeMap::from([(1, 1), (2, 4), (3, 15), (6, 300)]));
    }
}
