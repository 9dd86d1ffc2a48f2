//! Irreducible character tables over `F_p` by the Dixon–Schneider method.
//!
//! The class sums `K_j` span the centre of the group algebra and multiply as
//! `K_j K_r = Σ_s a_{jrs} K_s`. For each irreducible character the vector
//! `ω_j = |C_j| χ(g_j) / χ(1)` is a common eigenvector of the matrices
//! `(a_{jrs})_{r,s}`. Working modulo a prime `p ≡ 1 (mod exponent)` with
//! `p > 2|G|`, the eigenvalues all lie in `F_p` and the common eigenspaces are
//! lines, one per irreducible character.

use std::collections::HashMap;

use serde::Serialize;

use super::cyclotomic::CyclotomicLift;
use super::CharError;
use crate::group::{Automorphism, Element, FiniteGroup, Partition};
use crate::modp::{prime_congruent_one, PrimeField};

const PRIME_LIMIT: u64 = 1 << 31;

/// Irreducible characters of a finite group, reduced modulo a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    order: usize,
    exponent: usize,
    classes: Partition,
    class_sizes: Vec<usize>,
    inverse_class: Vec<usize>,
    identity_class: usize,
    prime: u64,
    rows: Vec<Vec<u64>>,
    degrees: Vec<usize>,
    lift: Option<CyclotomicLift>,
}

impl CharacterTable {
    /// Table over the smallest admissible prime.
    pub fn compute(group: &FiniteGroup) -> Result<Self, CharError> {
        Self::compute_with_prime_rank(group, 0)
    }

    /// Table over the `rank`-th admissible prime (0 = smallest).
    pub fn compute_with_prime_rank(group: &FiniteGroup, rank: usize) -> Result<Self, CharError> {
        let order = group.order();
        let exponent = group.exponent();
        let mut start = 2 * order as u64 + 1;
        let mut prime = 0;
        for _ in 0..=rank {
            prime = prime_congruent_one(exponent as u64, start, PRIME_LIMIT)
                .ok_or(CharError::PrimeSearchFailed)?;
            start = prime + 1;
        }
        let field = PrimeField::new(prime);

        let classes = group.conjugacy_classes();
        let k = classes.len();
        let class_sizes = classes.sizes();
        let inverse_class: Vec<usize> =
            classes.classes.iter().map(|c| classes.class_of[group.inv(c[0])]).collect();
        let identity_class = classes.class_of[group.identity()];

        let lines = split_class_algebra(group, &classes, &field)?;
        if lines.len() != k {
            return Err(CharError::Inconsistent(format!(
                "{} eigenlines for {k} classes",
                lines.len()
            )));
        }

        let mut characters: Vec<(usize, Vec<u64>)> = Vec::with_capacity(k);
        for line in lines {
            let scale = field.inv(line[identity_class]);
            let omega: Vec<u64> = line.iter().map(|&x| field.mul(x, scale)).collect();
            // Σ_j ω_j ω_{j*} / |C_j| = |G| / χ(1)^2
            let mut s = 0;
            for j in 0..k {
                let term = field.mul(omega[j], omega[inverse_class[j]]);
                s = field.add(s, field.mul(term, field.inv(class_sizes[j] as u64 % prime)));
            }
            if s == 0 {
                return Err(CharError::Inconsistent("degenerate central character".into()));
            }
            let target = field.mul(order as u64 % prime, field.inv(s));
            let degree = (1..=order)
                .take_while(|d| d * d <= order)
                .find(|&d| (d * d) as u64 % prime == target)
                .ok_or_else(|| CharError::Inconsistent("no integral degree".into()))?;
            let values = (0..k)
                .map(|j| {
                    let v = field.mul(omega[j], degree as u64);
                    field.mul(v, field.inv(class_sizes[j] as u64 % prime))
                })
                .collect();
            characters.push((degree, values));
        }
        characters.sort();

        let table = CharacterTable {
            order,
            exponent,
            classes,
            class_sizes,
            inverse_class,
            identity_class,
            prime,
            degrees: characters.iter().map(|c| c.0).collect(),
            rows: characters.into_iter().map(|c| c.1).collect(),
            lift: None,
        };
        table.check_orthogonality()?;
        Ok(table)
    }

    /// Same table with exact cyclotomic values attached.
    pub fn compute_lifted(group: &FiniteGroup) -> Result<Self, CharError> {
        let mut table = Self::compute(group)?;
        table.lift = Some(CyclotomicLift::compute(&table, group)?);
        Ok(table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.prime)
    }

    pub fn classes(&self) -> &Partition {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn inverse_class(&self) -> &[usize] {
        &self.inverse_class
    }

    pub fn identity_class(&self) -> usize {
        self.identity_class
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn lift(&self) -> Option<&CyclotomicLift> {
        self.lift.as_ref()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row and column orthogonality modulo `p`, plus `Σ d² = |G|`.
    pub fn check_orthogonality(&self) -> Result<(), CharError> {
        let f = self.field();
        let k = self.rows.len();
        let degree_sum: usize = self.degrees.iter().map(|d| d * d).sum();
        if degree_sum != self.order {
            return Err(CharError::Inconsistent(format!("sum of squared degrees is {degree_sum}")));
        }
        let order = self.order as u64 % self.prime;
        for i in 0..k {
            for j in 0..k {
                let mut s = 0;
                for c in 0..k {
                    let v = f.mul(self.rows[i][c], self.rows[j][self.inverse_class[c]]);
                    s = f.add(s, f.mul(self.class_sizes[c] as u64, v));
                }
                let expected = if i == j { order } else { 0 };
                if s != expected {
                    return Err(CharError::Inconsistent(format!("rows {i} and {j} not orthogonal")));
                }
            }
        }
        for c in 0..k {
            for d in 0..k {
                let mut s = 0;
                for row in &self.rows {
                    s = f.add(s, f.mul(row[c], row[self.inverse_class[d]]));
                }
                let expected = if c == d {
                    f.mul(order, f.inv(self.class_sizes[c] as u64 % self.prime))
                } else {
                    0
                };
                if s != expected {
                    return Err(CharError::Inconsistent(format!(
                        "columns {c} and {d} not orthogonal"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Serializable form.
    pub fn to_json(&self) -> CharacterTableJson {
        CharacterTableJson {
            prime: self.prime,
            exponent: self.exponent,
            degrees: self.degrees.clone(),
            classes: self.class_sizes.clone(),
            class_representatives: self.classes.representatives(),
            rows: self.rows.clone(),
            lift: self.lift.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterTableJson {
    pub prime: u64,
    pub exponent: usize,
    pub degrees: Vec<usize>,
    pub classes: Vec<usize>,
    pub class_representatives: Vec<Element>,
    pub rows: Vec<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lift: Option<CyclotomicLift>,
}

/// Splits `F_p^k` into the common eigenlines of the class matrices.
fn split_class_algebra(
    group: &FiniteGroup,
    classes: &Partition,
    field: &PrimeField,
) -> Result<Vec<Vec<u64>>, CharError> {
    let k = classes.len();
    let identity: Vec<Vec<u64>> =
        (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
    let mut done: Vec<Vec<u64>> = Vec::new();
    let mut pending: Vec<Vec<Vec<u64>>> = if k == 1 { Vec::new() } else { vec![identity] };
    if k == 1 {
        done.push(vec![1]);
    }

    for j in 0..k {
        if pending.is_empty() {
            break;
        }
        if classes.classes[j].contains(&group.identity()) {
            continue;
        }
        let matrix = class_matrix(group, classes, j, field);
        let mut next = Vec::new();
        for space in pending {
            let pieces = split_space(&space, &matrix, field)?;
            for piece in pieces {
                if piece.len() == 1 {
                    done.push(piece.into_iter().next().unwrap());
                } else {
                    next.push(piece);
                }
            }
        }
        pending = next;
    }
    if !pending.is_empty() {
        return Err(CharError::Inconsistent("class matrices do not separate characters".into()));
    }
    Ok(done)
}

/// `M[r][s] = #{x ∈ C_j : x^-1 z_s ∈ C_r}` for fixed representatives `z_s`.
fn class_matrix(
    group: &FiniteGroup,
    classes: &Partition,
    j: usize,
    field: &PrimeField,
) -> Vec<Vec<u64>> {
    let k = classes.len();
    let mut m = vec![vec![0u64; k]; k];
    for (s, class) in classes.classes.iter().enumerate() {
        let z = class[0];
        for &x in &classes.classes[j] {
            let r = classes.class_of[group.mul(group.inv(x), z)];
            m[r][s] += 1;
        }
    }
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x %= field.modulus();
        }
    }
    m
}

/// Decomposes an invariant subspace (rows in reduced echelon form) into the
/// eigenspaces of `matrix`.
fn split_space(
    basis: &[Vec<u64>],
    matrix: &[Vec<u64>],
    field: &PrimeField,
) -> Result<Vec<Vec<Vec<u64>>>, CharError> {
    let d = basis.len();
    let k = matrix.len();
    let pivots: Vec<usize> =
        basis.iter().map(|b| b.iter().position(|&x| x != 0).unwrap()).collect();

    // restricted[t'][t] = coordinate t' of matrix · b_t
    let mut restricted = vec![vec![0u64; d]; d];
    for (t, b) in basis.iter().enumerate() {
        for (tp, &pc) in pivots.iter().enumerate() {
            let mut v = 0;
            for s in 0..k {
                if b[s] != 0 {
                    v = field.add(v, field.mul(matrix[pc][s], b[s]));
                }
            }
            restricted[tp][t] = v;
        }
    }

    let roots = field.roots(&field.charpoly(&restricted));
    if roots.len() <= 1 {
        return Ok(vec![basis.to_vec()]);
    }
    let mut pieces = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lambda in roots {
        let shifted: Vec<Vec<u64>> = restricted
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, &x)| if i == c { field.sub(x, lambda) } else { x })
                    .collect()
            })
            .collect();
        let mut vectors: Vec<Vec<u64>> = field
            .nullspace(&shifted, d)
            .into_iter()
            .map(|coords| {
                let mut v = vec![0u64; k];
                for (t, &c) in coords.iter().enumerate() {
                    if c != 0 {
                        for s in 0..k {
                            v[s] = field.add(v[s], field.mul(c, basis[t][s]));
                        }
                    }
                }
                v
            })
            .collect();
        field.row_reduce(&mut vectors);
        total += vectors.len();
        pieces.push(vectors);
    }
    if total != d {
        return Err(CharError::Inconsistent("class matrix not diagonalizable".into()));
    }
    Ok(pieces)
}

/// The permutation `φ̂ : [χ] ↦ [χ ∘ φ^-1]` of irreducible characters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualAction {
    pub class_permutation: Vec<usize>,
    pub row_permutation: Vec<usize>,
    pub fixed_rows: Vec<usize>,
}

impl DualAction {
    /// Cycle length of each row under the permutation.
    pub fn row_periods(&self) -> Vec<usize> {
        (0..self.row_permutation.len())
            .map(|i| {
                let mut j = self.row_permutation[i];
                let mut len = 1;
                while j != i {
                    j = self.row_permutation[j];
                    len += 1;
                }
                len
            })
            .collect()
    }
}

pub fn dual_action(table: &CharacterTable, phi: &Automorphism) -> Result<DualAction, CharError> {
    let classes = table.classes();
    let k = table.len();
    let class_permutation: Vec<usize> =
        classes.classes.iter().map(|c| classes.class_of[phi.apply(c[0])]).collect();
    let mut class_inverse = vec![usize::MAX; k];
    for (c, &d) in class_permutation.iter().enumerate() {
        class_inverse[d] = c;
    }
    if class_inverse.contains(&usize::MAX) {
        return Err(CharError::Inconsistent("automorphism does not permute classes".into()));
    }

    let index: HashMap<&[u64], usize> =
        table.rows().iter().enumerate().map(|(i, r)| (r.as_slice(), i)).collect();
    if index.len() != k {
        return Err(CharError::RowMatchFailed { row: 0 });
    }
    let mut row_permutation = Vec::with_capacity(k);
    for (i, row) in table.rows().iter().enumerate() {
        let moved: Vec<u64> = (0..k).map(|c| row[class_inverse[c]]).collect();
        let &j = index.get(moved.as_slice()).ok_or(CharError::RowMatchFailed { row: i })?;
        row_permutation.push(j);
    }
    let fixed_rows = (0..k).filter(|&i| row_permutation[i] == i).collect();
    Ok(DualAction { class_permutation, row_permutation, fixed_rows })
}

/// Tables over two different primes; fixed-point counts must agree.
#[derive(Clone, Debug)]
pub struct TablePair {
    pub primary: CharacterTable,
    pub guard: CharacterTable,
}

impl TablePair {
    pub fn compute(group: &FiniteGroup) -> Result<Self, CharError> {
        Ok(TablePair {
            primary: CharacterTable::compute_with_prime_rank(group, 0)?,
            guard: CharacterTable::compute_with_prime_rank(group, 1)?,
        })
    }

    /// Number of irreducible characters fixed by the dual action.
    pub fn fixed_count(&self, phi: &Automorphism) -> Result<usize, CharError> {
        let a = dual_action(&self.primary, phi)?.fixed_rows.len();
        let b = dual_action(&self.guard, phi)?.fixed_rows.len();
        if a != b {
            return Err(CharError::InconsistentPrimes {
                first: self.primary.prime(),
                second: self.guard.prime(),
                first_count: a,
                second_count: b,
            });
        }
        Ok(a)
    }
}

/// `R(φ)` against the number of `φ̂`-fixed irreducible characters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TbftReport {
    pub reidemeister: usize,
    pub fixed_characters: usize,
    pub passed: bool,
}

pub fn tbft_check(group: &FiniteGroup, phi: &Automorphism) -> Result<TbftReport, CharError> {
    tbft_check_with(&TablePair::compute(group)?, group, phi)
}

pub fn tbft_check_with(
    tables: &TablePair,
    group: &FiniteGroup,
    phi: &Automorphism,
) -> Result<TbftReport, CharError> {
    let reidemeister = crate::twisted::reidemeister_number(group, phi);
    let fixed_characters = tables.fixed_count(phi)?;
    Ok(TbftReport { reidemeister, fixed_characters, passed: reidemeister == fixed_characters })
}
