//! Runs every finite-group identity over the bundled corpus.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::chars::{self, CharError, TablePair};
use crate::corpus;
use crate::group::{Automorphism, FiniteGroup, GroupError, Subgroup};
use crate::twisted::{self, CheckReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Char(#[from] CharError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub max_order: usize,
    /// Coset and shift identities run over all of `G` up to this order, and on
    /// random samples above it.
    pub exhaustive_limit: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_order: 64, exhaustive_limit: 24, samples: 100, seed: 0x7715 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub group: String,
    pub order: usize,
    pub automorphism_index: usize,
    pub reidemeister: Option<usize>,
    pub checks: Vec<CheckReport>,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub group: String,
    pub automorphism_index: usize,
    pub property: &'static str,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub group: String,
    pub order: usize,
    pub automorphisms: usize,
    /// property → (passed, total)
    pub properties: BTreeMap<&'static str, (usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub options: VerifyOptions,
    pub summary: Vec<GroupSummary>,
    pub failures: Vec<Failure>,
    pub passed: bool,
    #[serde(skip)]
    pub pairs: Vec<PairReport>,
}

impl CorpusReport {
    pub fn from_pairs(options: VerifyOptions, pairs: Vec<PairReport>) -> Self {
        let mut summary: Vec<GroupSummary> = Vec::new();
        let mut failures = Vec::new();
        for pair in &pairs {
            if summary.last().is_none_or(|s| s.group != pair.group) {
                summary.push(GroupSummary {
                    group: pair.group.clone(),
                    order: pair.order,
                    automorphisms: 0,
                    properties: BTreeMap::new(),
                });
            }
            let entry = summary.last_mut().expect("just pushed");
            entry.automorphisms += 1;
            for check in &pair.checks {
                let slot = entry.properties.entry(check.property).or_insert((0, 0));
                slot.1 += 1;
                if check.passed {
                    slot.0 += 1;
                } else {
                    failures.push(Failure {
                        group: pair.group.clone(),
                        automorphism_index: pair.automorphism_index,
                        property: check.property,
                        witness: check.witness.clone(),
                    });
                }
            }
        }
        let passed = failures.is_empty();
        CorpusReport { options, summary, failures, passed, pairs }
    }
}

/// φ-invariant normal subgroups among the normal closures of conjugacy
/// classes and the center.
fn invariant_normal_subgroups(group: &FiniteGroup, phi: &Automorphism) -> Vec<Subgroup> {
    let mut candidates: Vec<Subgroup> = group
        .conjugacy_classes()
        .classes
        .iter()
        .map(|c| group.subgroup_generated(c))
        .collect();
    candidates.push(group.center());
    candidates.sort_by(|a, b| a.members().cmp(b.members()));
    candidates.dedup();
    candidates
        .into_iter()
        .filter(|h| h.members().iter().all(|&x| h.contains(phi.apply(x))))
        .collect()
}

fn check_pair(
    group: &FiniteGroup,
    tables: &TablePair,
    phi: &Automorphism,
    options: &VerifyOptions,
    rng_seed: u64,
) -> Result<(usize, Vec<CheckReport>), VerifyError> {
    let partition = twisted::reidemeister_partition(group, phi);
    let r = partition.count;
    let mut checks = Vec::new();
    let equality = |property, lhs: usize, rhs: usize, what: &str| {
        if lhs == rhs {
            CheckReport::pass(property)
        } else {
            CheckReport::fail(property, format!("R = {lhs}, {what} = {rhs}"))
        }
    };

    let tbft = chars::tbft_check_with(tables, group, phi)?;
    checks.push(equality("tbft", tbft.reidemeister, tbft.fixed_characters, "fixed characters"));
    checks.push(equality(
        "coinvariants",
        r,
        chars::twisted_coinvariants_dimension(group, phi),
        "coinvariant dimension",
    ));
    checks.push(chars::twisted_inner_character(group, phi).check);
    let iso = chars::isogredience_count(group, phi)?;
    checks.push(if iso.passed {
        CheckReport::pass("isogredience")
    } else {
        CheckReport::fail(
            "isogredience",
            format!("S = {}, R(G/Z) = {}", iso.classes, iso.central_quotient_reidemeister),
        )
    });
    let bounds = twisted::check_bounds(group, phi);
    checks.push(if bounds.passed {
        CheckReport::pass("fixed-subgroup-bounds")
    } else {
        CheckReport::fail("fixed-subgroup-bounds", format!("|C| = {}, R = {r}", bounds.fixed_order))
    });
    checks.extend(structural_checks(group, phi, options, rng_seed)?);
    Ok((r, checks))
}

/// Orbit–stabilizer, the coset and shift identities, quotient monotonicity
/// and the Burnside orbit count. Coset and shift run over all of `G` up to
/// `options.exhaustive_limit`, and over `options.samples` random `(g, k, s)`
/// triples above it.
pub fn structural_checks(
    group: &FiniteGroup,
    phi: &Automorphism,
    options: &VerifyOptions,
    rng_seed: u64,
) -> Result<Vec<CheckReport>, VerifyError> {
    let r = twisted::reidemeister_number(group, phi);
    let mut checks = Vec::new();
    let oracle = twisted::reidemeister_burnside_oracle(group, phi);
    checks.push(if oracle == r {
        CheckReport::pass("burnside-oracle")
    } else {
        CheckReport::fail("burnside-oracle", format!("R = {r}, orbit average = {oracle}"))
    });
    checks.push(twisted::orbit_stabilizer_check(group, phi));

    // (g, k, s) triples for the coset and shift identities
    let n = group.order();
    let (pairs, shifts): (Vec<(usize, usize)>, Vec<usize>) = if n <= options.exhaustive_limit {
        (group.elements().flat_map(|g| group.elements().map(move |s| (g, s))).collect(), group.elements().collect())
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        let triples: Vec<(usize, usize, usize)> = (0..options.samples)
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
            .collect();
        let mut ks: Vec<usize> = triples.iter().map(|t| t.1).collect();
        ks.sort_unstable();
        ks.dedup();
        (triples.iter().map(|&(g, _, s)| (g, s)).collect(), ks)
    };
    let coset = pairs
        .iter()
        .map(|&(g, s)| twisted::coset_identity_check(group, phi, g, s))
        .find(|c| !c.passed)
        .unwrap_or_else(|| CheckReport::pass("coset-identity"));
    checks.push(coset);
    let mut shift = CheckReport::pass("shift-class");
    for k in shifts {
        let report = twisted::shift_class_check(group, phi, k)?;
        if !report.check.passed {
            shift = report.check;
            break;
        }
    }
    checks.push(shift);

    let mut monotone = CheckReport::pass("quotient-monotonicity");
    for h in invariant_normal_subgroups(group, phi) {
        let report = twisted::quotient_monotonicity_check(group, &h, phi)?;
        if !report.passed {
            monotone = CheckReport::fail(
                "quotient-monotonicity",
                format!("|H| = {}: R = {} < R(G/H) = {}", h.order(), report.group_reidemeister, report.quotient_reidemeister),
            );
            break;
        }
    }
    checks.push(monotone);
    Ok(checks)
}

/// Checks each candidate image vector; candidates that are not automorphisms
/// are reported as failures of `valid-automorphism`.
pub fn verify_group(
    name: &str,
    group: &FiniteGroup,
    candidates: &[Vec<usize>],
    options: &VerifyOptions,
) -> Result<Vec<PairReport>, VerifyError> {
    let tables = TablePair::compute(group)?;
    let orthogonality = tables
        .primary
        .check_orthogonality()
        .and_then(|()| tables.guard.check_orthogonality());
    candidates
        .par_iter()
        .enumerate()
        .map(|(index, images)| {
            let mut report = PairReport {
                group: name.to_owned(),
                order: group.order(),
                automorphism_index: index,
                reidemeister: None,
                checks: Vec::new(),
            };
            report.checks.push(match &orthogonality {
                Ok(()) => CheckReport::pass("character-orthogonality"),
                Err(e) => CheckReport::fail("character-orthogonality", e.to_string()),
            });
            let phi = match Automorphism::new(group, images.clone()) {
                Ok(phi) => phi,
                Err(e) => {
                    report.checks.push(CheckReport::fail("valid-automorphism", e.to_string()));
                    return Ok(report);
                }
            };
            report.checks.push(CheckReport::pass("valid-automorphism"));
            let seed = options.seed ^ (index as u64).wrapping_mul(0x9E37_79B9) ^ group.order() as u64;
            let (r, checks) = check_pair(group, &tables, &phi, options, seed)?;
            report.reidemeister = Some(r);
            report.checks.extend(checks);
            Ok(report)
        })
        .collect()
}

pub fn verify_corpus(options: &VerifyOptions) -> Result<CorpusReport, VerifyError> {
    let mut pairs = Vec::new();
    for entry in corpus::entries_up_to(options.max_order) {
        let group = entry.build();
        let candidates: Vec<Vec<usize>> =
            group.automorphisms()?.iter().map(|a| a.images().to_vec()).collect();
        pairs.extend(verify_group(&entry.name, &group, &candidates, options)?);
    }
    Ok(CorpusReport::from_pairs(options.clone(), pairs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus_passes() {
        let options = VerifyOptions { max_order: 8, ..VerifyOptions::default() };
        let report = verify_corpus(&options).unwrap();
        assert!(report.passed, "{:?}", report.failures);
        assert!(report.summary.iter().any(|s| s.group == "Q8" && s.automorphisms == 24));
    }

    #[test]
    fn trivial_only() {
        let options = VerifyOptions { max_order: 1, ..VerifyOptions::default() };
        let report = verify_corpus(&options).unwrap();
        assert_eq!(report.summary.len(), 1);
        assert_eq!(report.pairs.len(), 1);
        assert!(report.passed);
    }

    #[test]
    fn faulty_automorphism_is_named() {
        let z4 = corpus::cyclic(4);
        let candidates = vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]];
        let pairs = verify_group("Z4", &z4, &candidates, &VerifyOptions::default()).unwrap();
        let report = CorpusReport::from_pairs(VerifyOptions::default(), pairs);
        assert!(!report.passed);
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].group, "Z4");
        assert_eq!(report.failures[0].automorphism_index, 1);
        assert_eq!(report.failures[0].property, "valid-automorphism");
    }
}
