//! Reidemeister spectra: which values `R(φ)` occur, each with a witness.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use super::heisenberg::heisenberg_reidemeister;
use super::matrix::IntMatrix;
use super::torus::{fixed_dual_characters, TORUS_ENUMERATION_LIMIT};
use super::{reidemeister_number_lattice, LatticeError};
use crate::number::ReidemeisterNumber;
use crate::twisted::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    /// Automorphisms of ℤ.
    Z,
    /// Automorphisms of ℤⁿ.
    Zn(usize),
    /// Automorphisms of the discrete Heisenberg group, by their action on ℤ².
    Heisenberg,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Z => f.write_str("Z"),
            Family::Zn(n) => write!(f, "Z^{n}"),
            Family::Heisenberg => f.write_str("Heisenberg"),
        }
    }
}

impl Family {
    fn value_of(&self, a: &IntMatrix) -> Result<ReidemeisterNumber, LatticeError> {
        match self {
            Family::Z | Family::Zn(_) => reidemeister_number_lattice(a),
            Family::Heisenberg => heisenberg_reidemeister(a),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumWitness {
    pub value: ReidemeisterNumber,
    pub matrix: IntMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumResult {
    pub family: String,
    #[serde(skip)]
    pub kind: Family,
    /// Finite values, ascending, one witness each.
    pub realized: Vec<SpectrumWitness>,
    pub includes_infinity: bool,
    pub infinity_witness: Option<IntMatrix>,
    /// Number of distinct automorphisms examined.
    pub examined: usize,
}

impl SpectrumResult {
    pub fn values(&self) -> Vec<BigUint> {
        self.realized.iter().filter_map(|w| w.value.finite().cloned()).collect()
    }

    /// Recomputes every witness. For lattice families the finite values are
    /// also recounted as fixed points on the dual torus.
    pub fn verify(&self) -> CheckReport {
        let failure = self.realized.iter().find_map(|w| self.witness_failure(w)).or_else(|| {
            let witness = self.infinity_witness.as_ref()?;
            match self.kind.value_of(witness) {
                Ok(ReidemeisterNumber::Infinite) => None,
                other => Some(format!("{witness}: expected infinity, got {other:?}")),
            }
        });
        CheckReport::from_first_failure("spectrum-witnesses", failure)
    }

    fn witness_failure(&self, w: &SpectrumWitness) -> Option<String> {
        let recomputed = match self.kind.value_of(&w.matrix) {
            Ok(v) => v,
            Err(e) => return Some(format!("{}: {e}", w.matrix)),
        };
        if recomputed != w.value {
            return Some(format!("{}: claimed {}, recomputed {recomputed}", w.matrix, w.value));
        }
        if matches!(self.kind, Family::Heisenberg) {
            return None;
        }
        let claimed = w.value.finite()?;
        if *claimed > BigUint::from(TORUS_ENUMERATION_LIMIT) {
            return None;
        }
        match fixed_dual_characters(&w.matrix) {
            Ok(points) if BigUint::from(points.len()) == *claimed => None,
            Ok(points) => Some(format!("{}: {} fixed torus points, claimed {claimed}", w.matrix, points.len())),
            Err(e) => Some(format!("{}: {e}", w.matrix)),
        }
    }

    /// Every finite value is even.
    pub fn evenness(&self) -> CheckReport {
        let odd = self
            .values()
            .into_iter()
            .find(|v| v.bit(0))
            .map(|v| format!("odd value {v}"));
        CheckReport::from_first_failure("even-values", odd)
    }
}

/// Automorphism of ℤⁿ with Reidemeister number `k`: `[[k+1, k], [1, 1]]` for
/// `n = 2`, the companion matrix of `xⁿ + kx − 1` for `n ≥ 3`, and `−1` for
/// `n = 1, k = 2` (the only finite value on ℤ).
pub fn zn_witness(n: usize, k: u64) -> Option<IntMatrix> {
    let k = BigInt::from(k);
    match n {
        0 => None,
        1 => (k == BigInt::from(2)).then(|| IntMatrix::from_rows([[-1]])),
        2 => {
            let rows = vec![vec![&k + 1, k.clone()], vec![BigInt::from(1), BigInt::from(1)]];
            IntMatrix::new(rows).ok()
        }
        _ => {
            let mut rows = vec![vec![BigInt::from(0); n]; n];
            for i in 1..n {
                rows[i][i - 1] = BigInt::from(1);
            }
            rows[0][n - 1] = BigInt::from(1);
            rows[1][n - 1] = -k;
            IntMatrix::new(rows).ok()
        }
    }
}

/// GL(2, ℤ) generators for the word search.
fn gl2_generators() -> [IntMatrix; 4] {
    [
        IntMatrix::from_rows([[1, 1], [0, 1]]),
        IntMatrix::from_rows([[1, -1], [0, 1]]),
        IntMatrix::from_rows([[0, -1], [1, 0]]),
        IntMatrix::from_rows([[0, 1], [1, 0]]),
    ]
}

/// Distinct products of at most `length` generators.
pub fn gl2_words(length: usize) -> BTreeSet<IntMatrix> {
    let generators = gl2_generators();
    let mut seen = BTreeSet::from([IntMatrix::identity(2)]);
    let mut frontier = vec![IntMatrix::identity(2)];
    for _ in 0..length {
        let mut next = Vec::new();
        for m in &frontier {
            for g in &generators {
                let p = m.mul(g);
                if seen.insert(p.clone()) {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    seen
}

/// `value_bound` limits the lattice families; `search_bound` is the word
/// length for the Heisenberg search.
pub fn spectrum_search(
    family: Family,
    value_bound: u64,
    search_bound: usize,
) -> Result<SpectrumResult, LatticeError> {
    if value_bound == 0 {
        return Err(LatticeError::InvalidBound("value bound must be positive"));
    }
    if search_bound == 0 {
        return Err(LatticeError::InvalidBound("search bound must be positive"));
    }
    let candidates: Vec<IntMatrix> = match family {
        Family::Z => vec![IntMatrix::identity(1), IntMatrix::from_rows([[-1]])],
        Family::Zn(0) => return Err(LatticeError::InvalidBound("dimension must be positive")),
        Family::Zn(1) => return spectrum_search(Family::Z, value_bound, search_bound).and_then(|r| {
            // ℤ¹ only realizes 2
            match (1..=value_bound).find(|&k| k != 2) {
                Some(k) => Err(LatticeError::WitnessNotFound { n: 1, value: k }),
                None => Ok(SpectrumResult { family: Family::Zn(1).to_string(), kind: Family::Zn(1), ..r }),
            }
        }),
        Family::Zn(n) => {
            let mut c = vec![IntMatrix::identity(n)];
            for k in 1..=value_bound {
                c.push(zn_witness(n, k).ok_or(LatticeError::WitnessNotFound { n, value: k })?);
            }
            c
        }
        Family::Heisenberg => gl2_words(search_bound).into_iter().collect(),
    };

    let values: Vec<ReidemeisterNumber> = candidates
        .par_iter()
        .map(|a| family.value_of(a))
        .collect::<Result<_, _>>()?;

    // smallest witness per value; independent of evaluation order
    let mut by_value: BTreeMap<ReidemeisterNumber, &IntMatrix> = BTreeMap::new();
    for (a, v) in candidates.iter().zip(values) {
        by_value.entry(v).and_modify(|w| *w = (*w).min(a)).or_insert(a);
    }
    if let Family::Zn(n) = family {
        for k in 1..=value_bound {
            if !by_value.contains_key(&ReidemeisterNumber::Finite(BigUint::from(k))) {
                return Err(LatticeError::WitnessNotFound { n, value: k });
            }
        }
    }
    let infinity_witness = by_value.remove(&ReidemeisterNumber::Infinite).cloned();
    Ok(SpectrumResult {
        family: family.to_string(),
        kind: family,
        realized: by_value
            .into_iter()
            .map(|(value, matrix)| SpectrumWitness { value, matrix: matrix.clone() })
            .collect(),
        includes_infinity: infinity_witness.is_some(),
        infinity_witness,
        examined: candidates.len(),
    })
}
