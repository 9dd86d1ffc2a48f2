//! Isogredience classes inside an outer automorphism class.
//!
//! Within the coset `{tau_s ∘ alpha : s ∈ G}` two automorphisms are
//! isogredient when one is `tau_h ∘ beta ∘ tau_h^-1` for the other, `beta`.
//! The class count equals the Reidemeister number of the automorphism induced
//! on `G / Z(G)`.

use std::collections::HashMap;

use serde::Serialize;

use crate::group::{Automorphism, FiniteGroup, GroupError, Partition};
use crate::twisted;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsogredienceReport {
    /// Number of isogredience classes, by direct enumeration.
    pub classes: usize,
    /// Distinct automorphisms in the outer class.
    pub outer_class_size: usize,
    /// Reidemeister number of the induced automorphism of `G / Z(G)`.
    pub central_quotient_reidemeister: usize,
    pub passed: bool,
}

pub fn isogredience_count(
    group: &FiniteGroup,
    alpha: &Automorphism,
) -> Result<IsogredienceReport, GroupError> {
    let inner: Vec<Automorphism> = group.elements().map(|h| group.inner_automorphism(h)).collect();

    let mut members: Vec<Automorphism> = Vec::new();
    let mut index: HashMap<Automorphism, usize> = HashMap::new();
    for tau in &inner {
        let beta = tau.compose(alpha);
        if !index.contains_key(&beta) {
            index.insert(beta.clone(), members.len());
            members.push(beta);
        }
    }

    let conjugated = |i: usize, h: usize| -> usize {
        let tau = &inner[h];
        let image = tau.compose(&members[i]).compose(&tau.inverse());
        index[&image]
    };
    let partition = Partition::from_orbits(members.len(), |i| {
        group.elements().map(move |h| conjugated(i, h))
    });

    let center = group.center();
    let quotient = group.quotient_with_induced(&center, alpha)?;
    let central_quotient_reidemeister =
        twisted::reidemeister_number(&quotient.group, &quotient.induced);

    Ok(IsogredienceReport {
        classes: partition.len(),
        outer_class_size: members.len(),
        central_quotient_reidemeister,
        passed: partition.len() == central_quotient_reidemeister,
    })
}
