//! Twisted conjugacy on finite groups.
//!
//! An automorphism `phi` of `G` makes `G` act on itself by
//! `x · g = x g phi(x)^-1`. Its orbits are the Reidemeister classes and their
//! number is the Reidemeister number `R(phi)`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::group::{Automorphism, Element, FiniteGroup, GroupError, Partition, Subgroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistedError {
    #[error("HypothesisViolated: {0}")]
    HypothesisViolated(String),
}

/// `x g phi(x)^-1`
#[inline]
pub fn twisted_act(group: &FiniteGroup, phi: &Automorphism, x: Element, g: Element) -> Element {
    group.mul(group.mul(x, g), group.inv(phi.apply(x)))
}

/// The Reidemeister classes of an automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReidemeisterPartition {
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<Element>>,
    pub representatives: Vec<Element>,
    /// `|G| / |class|` for each class.
    pub stabilizer_orders: Vec<usize>,
    pub count: usize,
}

impl ReidemeisterPartition {
    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn class_of_element(&self, g: Element) -> &[Element] {
        &self.classes[self.class_of[g]]
    }
}

pub fn reidemeister_partition(group: &FiniteGroup, phi: &Automorphism) -> ReidemeisterPartition {
    let Partition { class_of, classes } = Partition::from_orbits(group.order(), |g| {
        group.elements().map(move |x| twisted_act(group, phi, x, g))
    });
    let representatives = classes.iter().map(|c| c[0]).collect();
    let stabilizer_orders = classes.iter().map(|c| group.order() / c.len()).collect();
    let count = classes.len();
    ReidemeisterPartition { class_of, classes, representatives, stabilizer_orders, count }
}

pub fn reidemeister_number(group: &FiniteGroup, phi: &Automorphism) -> usize {
    reidemeister_partition(group, phi).count
}

/// Solution set of `k g phi(k)^-1 = h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistedStabilizerResult {
    pub base_point: Element,
    pub target: Element,
    pub coset: Vec<Element>,
    /// Order of the stabilizer of the base point.
    pub stabilizer_order: usize,
}

pub fn twisted_stabilizer(
    group: &FiniteGroup,
    phi: &Automorphism,
    g: Element,
    h: Element,
) -> Result<TwistedStabilizerResult, GroupError> {
    group.check_element(g)?;
    group.check_element(h)?;
    let coset = group.elements().filter(|&k| twisted_act(group, phi, k, g) == h).collect();
    let stabilizer_order =
        group.elements().filter(|&k| twisted_act(group, phi, k, g) == g).count();
    Ok(TwistedStabilizerResult { base_point: g, target: h, coset, stabilizer_order })
}

/// Stabilizer subgroup of `g` under the twisted action.
pub fn stabilizer_subgroup(group: &FiniteGroup, phi: &Automorphism, g: Element) -> Subgroup {
    Subgroup::from_sorted(
        group.elements().filter(|&k| twisted_act(group, phi, k, g) == g).collect(),
    )
}

/// Elements fixed by `phi`; the twisted stabilizer of the identity.
pub fn fixed_subgroup(group: &FiniteGroup, phi: &Automorphism) -> Subgroup {
    Subgroup::from_sorted(group.elements().filter(|&k| phi.apply(k) == k).collect())
}

/// Orbit counting: the average over `x` of the number of points fixed by `x`.
pub fn reidemeister_burnside_oracle(group: &FiniteGroup, phi: &Automorphism) -> usize {
    let total: usize = group
        .elements()
        .map(|x| group.elements().filter(|&g| twisted_act(group, phi, x, g) == g).count())
        .sum();
    debug_assert_eq!(total % group.order(), 0);
    total / group.order()
}

/// Outcome of a property check; carries the first counterexample on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub property: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

impl CheckReport {
    pub fn pass(property: &'static str) -> Self {
        CheckReport { property, passed: true, witness: None }
    }

    pub fn fail(property: &'static str, witness: String) -> Self {
        CheckReport { property, passed: false, witness: Some(witness) }
    }

    pub fn from_first_failure(property: &'static str, failure: Option<String>) -> Self {
        match failure {
            None => Self::pass(property),
            Some(w) => Self::fail(property, w),
        }
    }
}

/// `|class(g)| · |St(g)| = |G|` for every `g`, with the stabilizer counted directly.
pub fn orbit_stabilizer_check(group: &FiniteGroup, phi: &Automorphism) -> CheckReport {
    let partition = reidemeister_partition(group, phi);
    let total: usize = partition.class_sizes().iter().sum();
    if total != group.order() {
        return CheckReport::fail("orbit-stabilizer", format!("class sizes sum to {total}"));
    }
    let failure = group.elements().find_map(|g| {
        let orbit = partition.class_of_element(g).len();
        let stab = stabilizer_subgroup(group, phi, g).order();
        (orbit * stab != group.order()).then(|| format!("g={g}: |orbit|={orbit}, |St|={stab}"))
    });
    CheckReport::from_first_failure("orbit-stabilizer", failure)
}

/// The solutions of `k g phi(k)^-1 = s g phi(s)^-1` form the coset `s · St(g)`.
pub fn coset_identity_check(
    group: &FiniteGroup,
    phi: &Automorphism,
    g: Element,
    s: Element,
) -> CheckReport {
    let target = twisted_act(group, phi, s, g);
    let solutions: Vec<Element> =
        group.elements().filter(|&k| twisted_act(group, phi, k, g) == target).collect();
    let stab = stabilizer_subgroup(group, phi, g);
    let mut coset: Vec<Element> = stab.members().iter().map(|&k| group.mul(s, k)).collect();
    coset.sort_unstable();
    if solutions.len() != stab.order() {
        return CheckReport::fail(
            "coset-identity",
            format!("g={g}, s={s}: {} solutions, stabilizer order {}", solutions.len(), stab.order()),
        );
    }
    if solutions != coset {
        return CheckReport::fail("coset-identity", format!("g={g}, s={s}: solutions != s*St(g)"));
    }
    CheckReport::pass("coset-identity")
}

/// Right translation by `k` carries each class of `phi` onto a class of
/// `tau_{k^-1} ∘ phi`, so both automorphisms have the same Reidemeister number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftReport {
    pub k: Element,
    pub reidemeister: usize,
    pub shifted_reidemeister: usize,
    pub check: CheckReport,
}

pub fn shift_class_check(
    group: &FiniteGroup,
    phi: &Automorphism,
    k: Element,
) -> Result<ShiftReport, GroupError> {
    group.check_element(k)?;
    let shifted = group.inner_automorphism(group.inv(k)).compose(phi);
    let original = reidemeister_partition(group, phi);
    let moved = reidemeister_partition(group, &shifted);

    let mut failure = None;
    for g in group.elements() {
        let mut translated: Vec<Element> =
            original.class_of_element(g).iter().map(|&x| group.mul(x, k)).collect();
        translated.sort_unstable();
        if translated != moved.class_of_element(group.mul(g, k)) {
            failure = Some(format!("g={g}, k={k}: translated class differs"));
            break;
        }
    }
    if failure.is_none() && original.count != moved.count {
        failure = Some(format!("R={} but shifted R={}", original.count, moved.count));
    }
    Ok(ShiftReport {
        k,
        reidemeister: original.count,
        shifted_reidemeister: moved.count,
        check: CheckReport::from_first_failure("shift-class", failure),
    })
}

/// `R_G(phi) >= R_{G/H}(phi_bar)`
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotonicityReport {
    pub group_reidemeister: usize,
    pub quotient_reidemeister: usize,
    pub quotient_order: usize,
    pub passed: bool,
}

pub fn quotient_monotonicity_check(
    group: &FiniteGroup,
    subgroup: &Subgroup,
    phi: &Automorphism,
) -> Result<MonotonicityReport, GroupError> {
    let quotient = group.quotient_with_induced(subgroup, phi)?;
    let group_reidemeister = reidemeister_number(group, phi);
    let quotient_reidemeister = reidemeister_number(&quotient.group, &quotient.induced);
    Ok(MonotonicityReport {
        group_reidemeister,
        quotient_reidemeister,
        quotient_order: quotient.group.order(),
        passed: group_reidemeister >= quotient_reidemeister,
    })
}

/// The fixed-subgroup bounds `|C| <= r^(r-1)` and `sqrt(log2 |C|) <= r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub reidemeister: usize,
    pub fixed_order: usize,
    pub power_bound_holds: bool,
    pub log_bound_holds: bool,
    pub passed: bool,
}

pub fn check_bounds(group: &FiniteGroup, phi: &Automorphism) -> BoundsReport {
    let r = reidemeister_number(group, phi);
    let c = fixed_subgroup(group, phi).order();
    let fixed = BigUint::from(c);
    let power_bound_holds = fixed <= BigUint::from(r).pow(r as u32 - 1);
    // sqrt(log2 c) <= r  <=>  c <= 2^(r^2)
    let log_bound_holds = fixed <= BigUint::one() << (r * r);
    BoundsReport {
        reidemeister: r,
        fixed_order: c,
        power_bound_holds,
        log_bound_holds,
        passed: power_bound_holds && log_bound_holds,
    }
}

/// Checks the bound `x_n <= n^(2n-1)` for a unit-fraction decomposition of 1,
/// together with each step of its inductive proof.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LandauReport {
    pub terms: Vec<u64>,
    pub largest: u64,
    pub bound: String,
    pub check: CheckReport,
}

pub fn landau_bound_check(xs: &[u64]) -> Result<LandauReport, TwistedError> {
    if xs.is_empty() {
        return Err(TwistedError::HypothesisViolated("empty sequence".into()));
    }
    if xs.contains(&0) {
        return Err(TwistedError::HypothesisViolated("terms must be positive".into()));
    }
    if xs.windows(2).any(|w| w[0] > w[1]) {
        return Err(TwistedError::HypothesisViolated("terms must be nondecreasing".into()));
    }
    let reciprocal = |x: u64| BigRational::new(BigInt::one(), BigInt::from(x));
    let sum: BigRational = xs.iter().map(|&x| reciprocal(x)).sum();
    if !sum.is_one() {
        return Err(TwistedError::HypothesisViolated(format!("reciprocals sum to {sum}, not 1")));
    }

    let n = xs.len();
    let big_n = BigInt::from(n);
    let largest = *xs.last().unwrap();
    let bound = BigInt::from(n).pow(2 * n as u32 - 1);

    let mut failure = None;
    if BigInt::from(xs[0]) > big_n {
        failure = Some(format!("x_1 = {} exceeds n = {n}", xs[0]));
    }
    let mut product = BigInt::one();
    let mut partial = BigRational::zero();
    for r in 1..n {
        if failure.is_some() {
            break;
        }
        product *= xs[r - 1];
        partial += reciprocal(xs[r - 1]);
        let rest = BigRational::one() - &partial;
        // rest = y_r / (x_1 ... x_r) with y_r a positive integer
        let y = &rest * BigRational::from_integer(product.clone());
        let tail: BigRational = xs[r..].iter().map(|&x| reciprocal(x)).sum();
        let next = BigInt::from(xs[r]);
        let remaining = BigInt::from(n - r);
        if !y.is_integer() || y <= BigRational::zero() {
            failure = Some(format!("r={r}: y_r = {y} is not a positive integer"));
        } else if BigRational::new(remaining.clone(), next.clone()) < tail {
            failure = Some(format!("r={r}: (n-r)/x_(r+1) < tail sum"));
        } else if !(&big_n * &product >= &remaining * &product && &remaining * &product >= next) {
            failure = Some(format!("r={r}: n*x_1...x_r >= (n-r)*x_1...x_r >= x_(r+1) fails"));
        }
    }
    if failure.is_none() && BigInt::from(largest) > bound {
        failure = Some(format!("x_n = {largest} exceeds {bound}"));
    }
    Ok(LandauReport {
        terms: xs.to_vec(),
        largest,
        bound: bound.to_string(),
        check: CheckReport::from_first_failure("landau-bound", failure),
    })
}

/// Every nondecreasing `x_1 ≤ … ≤ x_n` with `Σ 1/x_i = 1`.
pub fn unit_fraction_partitions(n: usize) -> Vec<Vec<u64>> {
    fn extend(rest: BigRational, left: usize, low: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            if rest.is_zero() {
                out.push(prefix.clone());
            }
            return;
        }
        if !rest.is_positive() {
            return;
        }
        // 1/x ≤ rest and left/x ≥ rest
        let smallest = (rest.recip().ceil().to_integer()).to_u64().unwrap_or(u64::MAX).max(low);
        let largest = (BigRational::from_integer(BigInt::from(left)) / &rest).floor().to_integer();
        let largest = largest.to_u64().unwrap_or(u64::MAX);
        for x in smallest..=largest {
            prefix.push(x);
            extend(&rest - BigRational::new(BigInt::one(), BigInt::from(x)), left - 1, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(BigRational::one(), n, 1, &mut Vec::new(), &mut out);
    }
    out
}
