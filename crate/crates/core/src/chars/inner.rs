//! Permutation characters of the twisted action and of coset spaces, and the
//! coinvariants of the twisted action on the group algebra.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::group::{Automorphism, FiniteGroup, Partition, Subgroup};
use crate::linalg;
use crate::twisted::{self, CheckReport};

/// Exact integer-valued class function, indexed by conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFunction {
    pub class_sizes: Vec<usize>,
    pub values: Vec<i64>,
}

impl ClassFunction {
    /// `Σ_c |c| f(c)`, i.e. `|G|` times the multiplicity of the trivial character.
    pub fn weighted_sum(&self) -> i64 {
        self.class_sizes.iter().zip(&self.values).map(|(&s, &v)| s as i64 * v).sum()
    }

    /// `<f, 1>`, or `None` if it is not an integer.
    pub fn trivial_multiplicity(&self) -> Option<i64> {
        let order: usize = self.class_sizes.iter().sum();
        let total = self.weighted_sum();
        (total % order as i64 == 0).then(|| total / order as i64)
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            class_sizes: self.class_sizes.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    fn zero(classes: &Partition) -> Self {
        ClassFunction { class_sizes: classes.sizes(), values: vec![0; classes.len()] }
    }
}

/// Permutation character of `G` on the cosets `H\G`:
/// `g ↦ #{x ∈ G : x g x^-1 ∈ H} / |H|`.
pub fn induced_trivial_character(group: &FiniteGroup, subgroup: &Subgroup) -> ClassFunction {
    let classes = group.conjugacy_classes();
    induced_trivial_on(group, &classes, subgroup)
}

fn induced_trivial_on(group: &FiniteGroup, classes: &Partition, subgroup: &Subgroup) -> ClassFunction {
    let member = subgroup.indicator(group.order());
    let values = classes
        .classes
        .iter()
        .map(|c| {
            let g = c[0];
            let hits = group.elements().filter(|&x| member[group.conjugate(x, g)]).count();
            (hits / subgroup.order()) as i64
        })
        .collect();
    ClassFunction { class_sizes: classes.sizes(), values }
}

/// The character of the twisted inner representation compared with the sum
/// of coset characters over the twisted-class stabilizers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistedInnerReport {
    /// `x ↦ #{g : x g phi(x)^-1 = g}` on conjugacy classes.
    pub character: ClassFunction,
    /// `Σ_a Ind_{St(a)}^G 1` over twisted class representatives `a`.
    pub induced_sum: ClassFunction,
    pub trivial_multiplicity: Option<i64>,
    pub reidemeister: usize,
    pub check: CheckReport,
}

pub fn twisted_inner_character(group: &FiniteGroup, phi: &Automorphism) -> TwistedInnerReport {
    let classes = group.conjugacy_classes();
    let fixed: Vec<i64> = group
        .elements()
        .map(|x| {
            group.elements().filter(|&g| twisted::twisted_act(group, phi, x, g) == g).count() as i64
        })
        .collect();

    let mut failure = None;
    for class in &classes.classes {
        if let Some(&x) = class.iter().find(|&&x| fixed[x] != fixed[class[0]]) {
            failure = Some(format!("not a class function at {x}"));
            break;
        }
    }
    let character = ClassFunction {
        class_sizes: classes.sizes(),
        values: classes.classes.iter().map(|c| fixed[c[0]]).collect(),
    };

    let partition = twisted::reidemeister_partition(group, phi);
    let induced_sum = partition
        .representatives
        .iter()
        .map(|&a| {
            induced_trivial_on(group, &classes, &twisted::stabilizer_subgroup(group, phi, a))
        })
        .fold(ClassFunction::zero(&classes), |acc, f| acc.add(&f));

    let trivial_multiplicity = character.trivial_multiplicity();
    if failure.is_none() && character != induced_sum {
        failure = Some(format!("{:?} != {:?}", character.values, induced_sum.values));
    }
    if failure.is_none() && trivial_multiplicity != Some(partition.count as i64) {
        failure = Some(format!("<chi, 1> = {trivial_multiplicity:?}, R = {}", partition.count));
    }
    TwistedInnerReport {
        character,
        induced_sum,
        trivial_multiplicity,
        reidemeister: partition.count,
        check: CheckReport::from_first_failure("twisted-inner-character", failure),
    }
}

/// Dimension of the coinvariants of the twisted action on `ℚ[G]`: the
/// codimension of `span{δ_h − δ_{g h phi(g)^-1}}`, with `g` over a generating set.
pub fn twisted_coinvariants_dimension(group: &FiniteGroup, phi: &Automorphism) -> usize {
    coinvariants_dimension_over(group, phi, &group.generating_set())
}

/// Same, spanning over every `g ∈ G`.
pub fn twisted_coinvariants_dimension_full(group: &FiniteGroup, phi: &Automorphism) -> usize {
    let all: Vec<_> = group.elements().collect();
    coinvariants_dimension_over(group, phi, &all)
}

fn coinvariants_dimension_over(group: &FiniteGroup, phi: &Automorphism, movers: &[usize]) -> usize {
    let n = group.order();
    let mut rows = Vec::new();
    for &g in movers {
        for h in group.elements() {
            let moved = twisted::twisted_act(group, phi, g, h);
            if moved == h {
                continue;
            }
            let mut row = vec![BigInt::zero(); n];
            row[h] = BigInt::one();
            row[moved] = -BigInt::one();
            rows.push(row);
        }
    }
    n - linalg::rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn induced_characters() {
        let s3 = corpus::symmetric(3);
        let whole = induced_trivial_character(&s3, &Subgroup::whole(&s3));
        assert!(whole.values.iter().all(|&v| v == 1));
        let regular = induced_trivial_character(&s3, &Subgroup::trivial(&s3));
        let classes = s3.conjugacy_classes();
        for (c, class) in classes.classes.iter().enumerate() {
            let expected = if class[0] == s3.identity() { 6 } else { 0 };
            assert_eq!(regular.values[c], expected);
        }
        let rotation = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        let a3 = s3.subgroup_generated(&[rotation]);
        let chi = induced_trivial_character(&s3, &a3);
        for (c, class) in classes.classes.iter().enumerate() {
            let expected = if s3.element_order(class[0]) == 2 { 0 } else { 2 };
            assert_eq!(chi.values[c], expected);
        }
    }

    #[test]
    fn twisted_inner_examples() {
        let z4 = corpus::cyclic(4);
        let inversion = Automorphism::new(&z4, vec![0, 3, 2, 1]).unwrap();
        let r = twisted_inner_character(&z4, &inversion);
        assert_eq!(r.character.values[0], 4);
        assert_eq!(r.trivial_multiplicity, Some(2));
        assert!(r.check.passed);

        let s3 = corpus::symmetric(3);
        let r = twisted_inner_character(&s3, &Automorphism::identity(6));
        assert!(r.check.passed);
        assert_eq!(r.character, r.induced_sum);
        assert_eq!(r.trivial_multiplicity, Some(3));
    }

    #[test]
    fn coinvariants() {
        let trivial = corpus::trivial();
        assert_eq!(twisted_coinvariants_dimension(&trivial, &Automorphism::identity(1)), 1);
        let z4 = corpus::cyclic(4);
        let inversion = Automorphism::new(&z4, vec![0, 3, 2, 1]).unwrap();
        assert_eq!(twisted_coinvariants_dimension(&z4, &inversion), 2);
        assert_eq!(twisted_coinvariants_dimension_full(&z4, &inversion), 2);
        let s3 = corpus::symmetric(3);
        assert_eq!(twisted_coinvariants_dimension(&s3, &Automorphism::identity(6)), 3);
    }
}
