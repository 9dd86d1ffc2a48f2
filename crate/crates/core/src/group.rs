//! Finite groups stored as Cayley tables, together with homomorphisms,
//! automorphisms, subgroups and quotients.
//!
//! Elements are plain indices `0..order`. Every group is validated on
//! construction, so downstream code may assume the group axioms.

use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a group element.
pub type Element = usize;

/// Largest group accepted by the builders unless a caller overrides it.
pub const DEFAULT_ORDER_CAP: usize = 1024;
/// Largest group for which automorphisms are enumerated by default.
pub const DEFAULT_AUTOMORPHISM_CAP: usize = 256;
/// Associativity is checked on every triple up to this order and sampled above.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 256;
const ASSOCIATIVITY_SAMPLES: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("EmptyTable: a group table needs at least one row")]
    EmptyTable,
    #[error("NotSquare at row {row}: {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("EntryOutOfRange at row {row}, column {col}: {value} is not below {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("NotLatinSquare at row {row}: element {value} appears at columns {first} and {second}")]
    RowRepeat { row: usize, value: usize, first: usize, second: usize },
    #[error("NotLatinSquare at column {col}: element {value} appears at rows {first} and {second}")]
    ColumnRepeat { col: usize, value: usize, first: usize, second: usize },
    #[error("NoIdentity: no element acts trivially on both sides")]
    NoIdentity,
    #[error("NoInverse: element {element} has no two-sided inverse")]
    NoInverse { element: Element },
    #[error("NotAssociative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: Element, b: Element, c: Element },
    #[error("OrderLimitExceeded: group order exceeds the cap of {limit}")]
    OrderLimitExceeded { limit: usize },
    #[error("InvalidPermutation: generator {index} is not a permutation of 0..{degree}")]
    InvalidPermutation { index: usize, degree: usize },
    #[error("ElementOutOfRange: {element} is not an element of a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("WrongLength: map has {len} images, expected {expected}")]
    WrongLength { len: usize, expected: usize },
    #[error("NotHomomorphism: f({a}*{b}) != f({a})*f({b})")]
    NotHomomorphism { a: Element, b: Element },
    #[error("NotBijective: elements {a} and {b} share an image")]
    NotBijective { a: Element, b: Element },
    #[error("NotSubgroup: {reason}")]
    NotSubgroup { reason: String },
    #[error("NotNormal: {g}*{h}*{g}^-1 leaves the subgroup")]
    NotNormal { g: Element, h: Element },
    #[error("NotInvariant: the automorphism maps subgroup element {element} outside the subgroup")]
    NotInvariant { element: Element },
    #[error("GeneratorImagesInconsistent: the generator images do not extend to an automorphism")]
    GeneratorImagesInconsistent,
}

/// A finite group given by its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Element>,
    identity: Element,
    inverse: Vec<Element>,
    name: Option<String>,
}

impl FiniteGroup {
    /// Validates a Cayley table and builds the group.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self, GroupError> {
        Self::from_table_with_cap(table, DEFAULT_ORDER_CAP)
    }

    pub fn from_table_with_cap(table: &[Vec<usize>], cap: usize) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::EmptyTable);
        }
        if n > cap {
            return Err(GroupError::OrderLimitExceeded { limit: cap });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::NotSquare { row, len: entries.len(), expected: n });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::EntryOutOfRange { row, col, value, order: n });
                }
                flat.push(value);
            }
        }
        Self::from_flat(n, flat)
    }

    fn from_flat(n: usize, flat: Vec<Element>) -> Result<Self, GroupError> {
        // rows, then columns
        let mut seen = vec![usize::MAX; n];
        for row in 0..n {
            seen.fill(usize::MAX);
            for col in 0..n {
                let value = flat[row * n + col];
                if seen[value] != usize::MAX {
                    return Err(GroupError::RowRepeat { row, value, first: seen[value], second: col });
                }
                seen[value] = col;
            }
        }
        for col in 0..n {
            seen.fill(usize::MAX);
            for row in 0..n {
                let value = flat[row * n + col];
                if seen[value] != usize::MAX {
                    return Err(GroupError::ColumnRepeat { col, value, first: seen[value], second: row });
                }
                seen[value] = row;
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|a| flat[e * n + a] == a && flat[a * n + e] == a))
            .ok_or(GroupError::NoIdentity)?;

        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| flat[a * n + b] == identity && flat[b * n + a] == identity)
                .ok_or(GroupError::NoInverse { element: a })?;
        }

        let group = FiniteGroup { order: n, table: flat, identity, inverse, name: None };
        group.check_associativity()?;
        Ok(group)
    }

    fn check_associativity(&self) -> Result<(), GroupError> {
        let n = self.order;
        let check = |a, b, c| {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(GroupError::NotAssociative { a, b, c })
            } else {
                Ok(())
            }
        };
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            // fixed seed: validation must be reproducible
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                check(a, b, c)?;
            }
        }
        Ok(())
    }

    /// Closure of a set of permutations of `0..degree`. The elements are the
    /// generated permutations in lexicographic order, so the identity is 0.
    /// The product `p*q` is the composition `i -> p[q[i]]`.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Result<Self, GroupError> {
        Self::from_permutations_with_cap(generators, DEFAULT_ORDER_CAP)
    }

    pub fn from_permutations_with_cap(
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self, GroupError> {
        let degree = generators.first().map_or(0, Vec::len);
        for (index, g) in generators.iter().enumerate() {
            let mut hit = vec![false; degree];
            let ok = g.len() == degree
                && g.iter().all(|&i| i < degree && !std::mem::replace(&mut hit[i], true));
            if !ok {
                return Err(GroupError::InvalidPermutation { index, degree });
            }
        }
        let compose = |p: &Vec<usize>, q: &Vec<usize>| q.iter().map(|&i| p[i]).collect::<Vec<_>>();

        let identity: Vec<usize> = (0..degree).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            for g in generators {
                let q = compose(&p, g);
                if !seen.contains(&q) {
                    if seen.len() >= cap {
                        return Err(GroupError::OrderLimitExceeded { limit: cap });
                    }
                    seen.insert(q.clone());
                    queue.push_back(q);
                }
            }
        }
        let mut elements: Vec<Vec<usize>> = seen.into_iter().collect();
        elements.sort();
        Self::from_elements_with_cap(&elements, compose, cap)
    }

    /// Builds the table of a finite set closed under `op`. Elements keep the
    /// order of the slice.
    pub fn from_elements<T, F>(elements: &[T], op: F) -> Result<Self, GroupError>
    where
        T: Eq + Hash + Clone,
        F: Fn(&T, &T) -> T,
    {
        Self::from_elements_with_cap(elements, op, DEFAULT_ORDER_CAP)
    }

    pub fn from_elements_with_cap<T, F>(elements: &[T], op: F, cap: usize) -> Result<Self, GroupError>
    where
        T: Eq + Hash + Clone,
        F: Fn(&T, &T) -> T,
    {
        let n = elements.len();
        if n == 0 {
            return Err(GroupError::EmptyTable);
        }
        if n > cap {
            return Err(GroupError::OrderLimitExceeded { limit: cap });
        }
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let mut flat = Vec::with_capacity(n * n);
        for (row, a) in elements.iter().enumerate() {
            for (col, b) in elements.iter().enumerate() {
                let c = op(a, b);
                let &value = index.get(&c).ok_or(GroupError::EntryOutOfRange {
                    row,
                    col,
                    value: n,
                    order: n,
                })?;
                flat.push(value);
            }
        }
        Self::from_flat(n, flat)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    /// The table as nested rows, as accepted by [`FiniteGroup::from_table`].
    pub fn table_rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn check_element(&self, element: usize) -> Result<(), GroupError> {
        if element < self.order {
            Ok(())
        } else {
            Err(GroupError::ElementOutOfRange { element, order: self.order })
        }
    }

    /// `g x g^-1`
    pub fn conjugate(&self, g: Element, x: Element) -> Element {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: Element) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|a| self.element_order(a))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn power(&self, a: Element, k: usize) -> Element {
        let mut result = self.identity;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    fn closure_of(&self, generators: &[Element]) -> Vec<bool> {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(a) = queue.pop_front() {
            for &g in generators {
                let b = self.mul(a, g);
                if !member[b] {
                    member[b] = true;
                    queue.push_back(b);
                }
            }
        }
        member
    }

    pub fn subgroup_generated(&self, generators: &[Element]) -> Subgroup {
        let member = self.closure_of(generators);
        Subgroup { members: (0..self.order).filter(|&a| member[a]).collect() }
    }

    /// Greedy generating set: scan elements in index order and keep every
    /// element outside the subgroup generated so far.
    pub fn generating_set(&self) -> Vec<Element> {
        let mut generators = Vec::new();
        let mut member = self.closure_of(&generators);
        for a in self.elements() {
            if !member[a] {
                generators.push(a);
                member = self.closure_of(&generators);
            }
        }
        generators
    }

    /// Ordinary conjugacy classes, sorted by minimal element.
    pub fn conjugacy_classes(&self) -> Partition {
        Partition::from_orbits(self.order, |g| {
            self.elements().map(move |x| self.conjugate(x, g))
        })
    }

    pub fn center(&self) -> Subgroup {
        Subgroup {
            members: self
                .elements()
                .filter(|&z| self.elements().all(|g| self.mul(z, g) == self.mul(g, z)))
                .collect(),
        }
    }

    /// Whether `images` defines a homomorphism from this group into `codomain`.
    pub fn check_homomorphism(
        &self,
        codomain: &FiniteGroup,
        images: &[Element],
    ) -> Result<(), GroupError> {
        if images.len() != self.order {
            return Err(GroupError::WrongLength { len: images.len(), expected: self.order });
        }
        for &y in images {
            codomain.check_element(y)?;
        }
        for a in self.elements() {
            for b in self.elements() {
                if images[self.mul(a, b)] != codomain.mul(images[a], images[b]) {
                    return Err(GroupError::NotHomomorphism { a, b });
                }
            }
        }
        Ok(())
    }

    /// Extends an assignment on `generators` to a homomorphism into `codomain`
    /// by walking the Cayley graph. Returns `None` when the assignment is
    /// inconsistent. The result is defined on the subgroup the generators
    /// span; other positions hold `usize::MAX`.
    pub fn extend_homomorphism(
        &self,
        codomain: &FiniteGroup,
        generators: &[Element],
        images: &[Element],
    ) -> Option<Vec<Element>> {
        debug_assert_eq!(generators.len(), images.len());
        let mut map = vec![usize::MAX; self.order];
        map[self.identity] = codomain.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(a) = queue.pop_front() {
            for (&g, &y) in generators.iter().zip(images) {
                let b = self.mul(a, g);
                let fb = codomain.mul(map[a], y);
                if map[b] == usize::MAX {
                    map[b] = fb;
                    queue.push_back(b);
                } else if map[b] != fb {
                    return None;
                }
            }
        }
        Some(map)
    }

    /// Automorphism determined by the images of [`FiniteGroup::generating_set`].
    pub fn automorphism_from_generator_images(
        &self,
        images: &[Element],
    ) -> Result<Automorphism, GroupError> {
        let generators = self.generating_set();
        if images.len() != generators.len() {
            return Err(GroupError::WrongLength { len: images.len(), expected: generators.len() });
        }
        for &y in images {
            self.check_element(y)?;
        }
        let map = self
            .extend_homomorphism(self, &generators, images)
            .ok_or(GroupError::GeneratorImagesInconsistent)?;
        Automorphism::new(self, map)
    }

    pub fn inner_automorphism(&self, g: Element) -> Automorphism {
        let images: Vec<_> = self.elements().map(|x| self.conjugate(g, x)).collect();
        Automorphism::from_bijection(images)
    }

    /// Every automorphism, sorted lexicographically by image vector.
    pub fn automorphisms(&self) -> Result<Vec<Automorphism>, GroupError> {
        self.automorphisms_with_cap(DEFAULT_AUTOMORPHISM_CAP)
    }

    pub fn automorphisms_with_cap(&self, cap: usize) -> Result<Vec<Automorphism>, GroupError> {
        if self.order > cap {
            return Err(GroupError::OrderLimitExceeded { limit: cap });
        }
        let generators = self.generating_set();
        let orders: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        let candidates: Vec<Vec<Element>> = generators
            .iter()
            .map(|&g| self.elements().filter(|&y| orders[y] == orders[g]).collect())
            .collect();

        let mut found = Vec::new();
        let mut images = Vec::with_capacity(generators.len());
        self.search_automorphisms(&generators, &candidates, &mut images, &mut found);
        found.sort_by(|a: &Automorphism, b| a.images.cmp(&b.images));
        Ok(found)
    }

    fn search_automorphisms(
        &self,
        generators: &[Element],
        candidates: &[Vec<Element>],
        images: &mut Vec<Element>,
        found: &mut Vec<Automorphism>,
    ) {
        let depth = images.len();
        if depth == generators.len() {
            if let Some(map) = self.extend_homomorphism(self, generators, images) {
                found.push(Automorphism::from_bijection(map));
            }
            return;
        }
        for &y in &candidates[depth] {
            images.push(y);
            let prefix = &generators[..=depth];
            if let Some(map) = self.extend_homomorphism(self, prefix, images) {
                let mut hit = vec![false; self.order];
                let injective = map
                    .iter()
                    .filter(|&&v| v != usize::MAX)
                    .all(|&v| !std::mem::replace(&mut hit[v], true));
                if injective {
                    self.search_automorphisms(generators, candidates, images, found);
                }
            }
            images.pop();
        }
    }

    pub fn is_normal(&self, h: &Subgroup) -> Result<(), GroupError> {
        let member = h.indicator(self.order);
        for g in self.elements() {
            for &x in h.members() {
                if !member[self.conjugate(g, x)] {
                    return Err(GroupError::NotNormal { g, h: x });
                }
            }
        }
        Ok(())
    }

    /// Quotient by a normal `phi`-invariant subgroup together with the
    /// projection and the induced automorphism. Cosets are ordered by their
    /// minimal element.
    pub fn quotient_with_induced(
        &self,
        h: &Subgroup,
        phi: &Automorphism,
    ) -> Result<Quotient, GroupError> {
        self.is_normal(h)?;
        let member = h.indicator(self.order);
        for &x in h.members() {
            if !member[phi.apply(x)] {
                return Err(GroupError::NotInvariant { element: x });
            }
        }

        let mut coset_of = vec![usize::MAX; self.order];
        let mut representatives = Vec::new();
        for g in self.elements() {
            if coset_of[g] == usize::MAX {
                let id = representatives.len();
                representatives.push(g);
                for &x in h.members() {
                    coset_of[self.mul(g, x)] = id;
                }
            }
        }
        let m = representatives.len();
        let table: Vec<Vec<usize>> = representatives
            .iter()
            .map(|&a| representatives.iter().map(|&b| coset_of[self.mul(a, b)]).collect())
            .collect();
        let mut group = FiniteGroup::from_table_with_cap(&table, usize::MAX)?;
        if let Some(name) = &self.name {
            group = group.with_name(format!("{name}/H"));
        }
        let induced: Vec<Element> =
            representatives.iter().map(|&r| coset_of[phi.apply(r)]).collect();
        debug_assert_eq!(induced.len(), m);
        Ok(Quotient {
            group,
            projection: GroupHom { images: coset_of },
            induced: Automorphism::from_bijection(induced),
            representatives,
        })
    }
}

/// Result of [`FiniteGroup::quotient_with_induced`].
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: GroupHom,
    pub induced: Automorphism,
    /// Minimal element of each coset, indexed by quotient element.
    pub representatives: Vec<Element>,
}

/// A homomorphism stored as its image vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupHom {
    pub images: Vec<Element>,
}

impl GroupHom {
    pub fn new(
        domain: &FiniteGroup,
        codomain: &FiniteGroup,
        images: Vec<Element>,
    ) -> Result<Self, GroupError> {
        domain.check_homomorphism(codomain, &images)?;
        Ok(GroupHom { images })
    }

    pub fn apply(&self, a: Element) -> Element {
        self.images[a]
    }

    pub fn is_surjective(&self, codomain_order: usize) -> bool {
        let mut hit = vec![false; codomain_order];
        for &y in &self.images {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

/// A bijective endomorphism of some [`FiniteGroup`]. The group itself is not
/// stored; functions taking an automorphism also take the group it acts on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    images: Vec<Element>,
    inverse_images: Vec<Element>,
}

impl Automorphism {
    /// Validates `images` as an automorphism of `group`.
    pub fn new(group: &FiniteGroup, images: Vec<Element>) -> Result<Self, GroupError> {
        group.check_homomorphism(group, &images)?;
        let mut preimage = vec![usize::MAX; images.len()];
        for (a, &y) in images.iter().enumerate() {
            if preimage[y] != usize::MAX {
                return Err(GroupError::NotBijective { a: preimage[y], b: a });
            }
            preimage[y] = a;
        }
        Ok(Automorphism { images, inverse_images: preimage })
    }

    /// Caller guarantees `images` is a bijection compatible with the group law.
    pub(crate) fn from_bijection(images: Vec<Element>) -> Self {
        let mut inverse_images = vec![0; images.len()];
        for (a, &y) in images.iter().enumerate() {
            inverse_images[y] = a;
        }
        Automorphism { images, inverse_images }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_bijection((0..order).collect())
    }

    #[inline]
    pub fn apply(&self, a: Element) -> Element {
        self.images[a]
    }

    #[inline]
    pub fn apply_inverse(&self, a: Element) -> Element {
        self.inverse_images[a]
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[Element] {
        &self.inverse_images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(a, &y)| a == y)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Self::from_bijection(other.images.iter().map(|&x| self.images[x]).collect())
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism { images: self.inverse_images.clone(), inverse_images: self.images.clone() }
    }

    pub fn pow(&self, k: usize) -> Automorphism {
        let mut result = Self::identity(self.images.len());
        for _ in 0..k {
            result = self.compose(&result);
        }
        result
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut current = self.clone();
        while !current.is_identity() {
            current = self.compose(&current);
            k += 1;
        }
        k
    }
}

/// A subgroup recorded by its sorted member list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subgroup {
    members: Vec<Element>,
}

impl Subgroup {
    /// Validates closure, inverses and the identity.
    pub fn new(group: &FiniteGroup, mut members: Vec<Element>) -> Result<Self, GroupError> {
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            group.check_element(m)?;
        }
        let member = indicator(&members, group.order());
        if !member[group.identity()] {
            return Err(GroupError::NotSubgroup { reason: "identity missing".into() });
        }
        for &a in &members {
            if !member[group.inv(a)] {
                return Err(GroupError::NotSubgroup { reason: format!("inverse of {a} missing") });
            }
            for &b in &members {
                if !member[group.mul(a, b)] {
                    return Err(GroupError::NotSubgroup {
                        reason: format!("product {a}*{b} missing"),
                    });
                }
            }
        }
        Ok(Subgroup { members })
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Subgroup { members: vec![group.identity()] }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup { members: group.elements().collect() }
    }

    pub(crate) fn from_sorted(members: Vec<Element>) -> Self {
        Subgroup { members }
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: Element) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn indicator(&self, order: usize) -> Vec<bool> {
        indicator(&self.members, order)
    }
}

fn indicator(members: &[Element], order: usize) -> Vec<bool> {
    let mut member = vec![false; order];
    for &m in members {
        member[m] = true;
    }
    member
}

/// A partition of `0..n` into blocks, numbered by increasing minimal element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<Element>>,
}

impl Partition {
    /// Orbits of an action, where `orbit_of(g)` yields every point of g's orbit.
    pub fn from_orbits<F, I>(n: usize, orbit_of: F) -> Self
    where
        F: Fn(Element) -> I,
        I: Iterator<Item = Element>,
    {
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut block = Vec::new();
            for y in orbit_of(g) {
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    block.push(y);
                }
            }
            block.sort_unstable();
            classes.push(block);
        }
        Partition { class_of, classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representatives(&self) -> Vec<Element> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}
