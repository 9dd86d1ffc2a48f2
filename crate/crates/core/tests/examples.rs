//! End-to-end through the public API, with hand-checked values.

use num_bigint::BigUint;
use twisted_core::chars::{self, dual_action, CharacterTable};
use twisted_core::corpus;
use twisted_core::dynamics::{
    gauss_congruence_table, moebius, periodic_point_accounting, reidemeister_sequence, Source,
};
use twisted_core::io;
use twisted_core::lattice::{
    finite_quotient_oracle, finite_quotient_reidemeister, fixed_dual_characters,
    heisenberg_reidemeister, reidemeister_number_lattice, separability_witness, smith_normal_form,
    IntMatrix,
};
use twisted_core::number::ReidemeisterNumber;
use twisted_core::twisted;
use twisted_core::{FiniteGroup, Subgroup};

fn z4_with_inversion() -> (FiniteGroup, twisted_core::Automorphism) {
    let z4 = io::parse_group(
        r#"{"name": "Z4", "format": "table", "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]}"#,
        1024,
    )
    .unwrap();
    let inversion = io::parse_automorphism(r#"{"generator_images": [3]}"#, &z4).unwrap();
    (z4, inversion)
}

#[test]
fn inversion_on_z4_end_to_end() {
    let (z4, phi) = z4_with_inversion();
    let partition = twisted::reidemeister_partition(&z4, &phi);
    assert_eq!(partition.classes, vec![vec![0, 2], vec![1, 3]]);
    assert_eq!(twisted::fixed_subgroup(&z4, &phi).members(), &[0, 2]);
    assert!(twisted::twisted_stabilizer(&z4, &phi, 0, 1).unwrap().coset.is_empty());
    assert_eq!(twisted::reidemeister_burnside_oracle(&z4, &phi), 2);

    let table = CharacterTable::compute(&z4).unwrap();
    let dual = dual_action(&table, &phi).unwrap();
    assert_eq!(dual.fixed_rows.len(), 2);
    let mut periods = dual.row_periods();
    periods.sort();
    assert_eq!(periods, [1, 1, 2, 2]);
    assert!(chars::tbft_check(&z4, &phi).unwrap().passed);
    assert_eq!(chars::twisted_coinvariants_dimension(&z4, &phi), 2);
    assert_eq!(chars::twisted_inner_character(&z4, &phi).trivial_multiplicity, Some(2));

    let half = Subgroup::new(&z4, vec![0, 2]).unwrap();
    let m = twisted::quotient_monotonicity_check(&z4, &half, &phi).unwrap();
    assert_eq!((m.group_reidemeister, m.quotient_reidemeister, m.quotient_order), (2, 2, 2));
}

#[test]
fn s3_examples() {
    let s3 = FiniteGroup::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
    assert_eq!(s3.order(), 6);
    let auts = s3.automorphisms().unwrap();
    assert_eq!(auts.len(), 6);
    for phi in &auts {
        assert_eq!(twisted::reidemeister_number(&s3, phi), 3);
        assert_eq!(chars::isogredience_count(&s3, phi).unwrap().classes, 3);
    }
    let identity = &auts[0];
    assert!(identity.is_identity());
    let b = twisted::check_bounds(&s3, identity);
    assert_eq!((b.reidemeister, b.fixed_order), (3, 6));

    // A₃ ↑ S₃ = 1 + sgn on (e, transpositions, 3-cycles)
    let three_cycles: Vec<usize> = s3.elements().filter(|&g| s3.element_order(g) == 3).collect();
    let a3 = s3.subgroup_generated(&three_cycles);
    assert_eq!(a3.order(), 3);
    let induced = chars::induced_trivial_character(&s3, &a3);
    let mut by_size: Vec<(usize, i64)> = induced.class_sizes.iter().copied().zip(induced.values.iter().copied()).collect();
    by_size.sort();
    assert_eq!(by_size, [(1, 2), (2, 2), (3, 0)]);
}

#[test]
fn corpus_centers_and_classes() {
    let q8 = corpus::by_name("Q8").unwrap();
    assert_eq!(q8.conjugacy_classes().len(), 5);
    assert_eq!(q8.center().order(), 2);
    assert_eq!(CharacterTable::compute(&q8).unwrap().degrees().iter().filter(|&&d| d == 1).count(), 4);
    let identity = twisted_core::Automorphism::identity(8);
    assert_eq!(chars::isogredience_count(&q8, &identity).unwrap().classes, 4);
    let d4 = FiniteGroup::from_permutations(&[vec![1, 2, 3, 0], vec![2, 1, 0, 3]]).unwrap();
    assert_eq!(d4.order(), 8);
}

#[test]
fn lattice_examples() {
    let rot = IntMatrix::from_rows([[0, 1], [-1, 0]]);
    assert_eq!(reidemeister_number_lattice(&rot).unwrap(), ReidemeisterNumber::from(2));
    assert_eq!(separability_witness(&rot).unwrap(), 2);
    assert_eq!(finite_quotient_reidemeister(&rot, 2).unwrap(), BigUint::from(2u32));
    assert_eq!(finite_quotient_reidemeister(&rot, 3).unwrap(), BigUint::from(1u32));
    assert_eq!(finite_quotient_oracle(&rot, 2).unwrap(), 2);
    assert_eq!(finite_quotient_oracle(&rot, 3).unwrap(), 1);
    assert_eq!(fixed_dual_characters(&rot).unwrap().len(), 2);

    let snf = smith_normal_form(&IntMatrix::from_rows([[2, 0], [0, 3]]));
    assert_eq!(snf.elementary_divisors(), [1.into(), 6.into()]);

    let cat = IntMatrix::from_rows([[2, 1], [1, 1]]);
    assert_eq!(separability_witness(&cat).unwrap(), 1);
    assert_eq!(heisenberg_reidemeister(&cat).unwrap(), ReidemeisterNumber::Infinite);
    assert_eq!(
        heisenberg_reidemeister(&IntMatrix::from_rows([[1, 1], [1, 0]])).unwrap(),
        ReidemeisterNumber::from(2)
    );
}

#[test]
fn dynamics_examples() {
    assert_eq!([moebius(1), moebius(6), moebius(12)], [1, 1, 0]);

    let cat = Source::Lattice(IntMatrix::from_rows([[2, 1], [1, 1]]));
    let seq = reidemeister_sequence(&cat, 4).unwrap();
    assert_eq!(seq.values, [1usize, 5, 16, 45].map(ReidemeisterNumber::from));
    assert!(gauss_congruence_table(&seq).unwrap().iter().all(|r| r.passed));

    let rot = Source::Lattice(IntMatrix::from_rows([[0, 1], [-1, 0]]));
    let report = periodic_point_accounting(&rot, 2).unwrap();
    assert_eq!(report.counts.least_period.get(&1), Some(&2));
    assert_eq!(report.counts.least_period.get(&2), Some(&2));
    assert!(report.passed());

    let s3 = corpus::symmetric(3);
    let id = Source::Finite { phi: twisted_core::Automorphism::identity(6), group: s3 };
    let seq = reidemeister_sequence(&id, 6).unwrap();
    assert!(seq.values.iter().all(|v| *v == ReidemeisterNumber::from(3)));
    let sums: Vec<String> = gauss_congruence_table(&seq).unwrap().iter().map(|r| r.sum.0.to_string()).collect();
    assert_eq!(sums, ["3", "0", "0", "0", "0", "0"]);
}
