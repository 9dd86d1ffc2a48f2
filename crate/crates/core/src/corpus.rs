//! Named groups used by the command line and the verification driver.

use crate::group::FiniteGroup;

/// A named group in the bundled corpus.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub order: usize,
    build: Builder,
}

#[derive(Clone, Copy, Debug)]
enum Builder {
    Trivial,
    Cyclic(usize),
    KleinFour,
    Z2xZ4,
    Symmetric(usize),
    Alternating(usize),
    Dihedral(usize),
    Quaternion,
    Heisenberg(usize),
}

impl CorpusEntry {
    fn new(name: impl Into<String>, order: usize, build: Builder) -> Self {
        CorpusEntry { name: name.into(), order, build }
    }

    pub fn build(&self) -> FiniteGroup {
        let group = match self.build {
            Builder::Trivial => trivial(),
            Builder::Cyclic(n) => cyclic(n),
            Builder::KleinFour => klein_four(),
            Builder::Z2xZ4 => z2_x_z4(),
            Builder::Symmetric(n) => symmetric(n),
            Builder::Alternating(n) => alternating(n),
            Builder::Dihedral(n) => dihedral(n),
            Builder::Quaternion => quaternion(),
            Builder::Heisenberg(m) => heisenberg(m),
        };
        group.with_name(self.name.clone())
    }
}

/// The bundled corpus in its canonical order.
pub fn entries() -> Vec<CorpusEntry> {
    let mut out = vec![CorpusEntry::new("trivial", 1, Builder::Trivial)];
    for n in 2..=12 {
        out.push(CorpusEntry::new(format!("Z{n}"), n, Builder::Cyclic(n)));
    }
    out.extend([
        CorpusEntry::new("Z2xZ2", 4, Builder::KleinFour),
        CorpusEntry::new("Z2xZ4", 8, Builder::Z2xZ4),
        CorpusEntry::new("S3", 6, Builder::Symmetric(3)),
        CorpusEntry::new("S4", 24, Builder::Symmetric(4)),
        CorpusEntry::new("D4", 8, Builder::Dihedral(4)),
        CorpusEntry::new("D5", 10, Builder::Dihedral(5)),
        CorpusEntry::new("D6", 12, Builder::Dihedral(6)),
        CorpusEntry::new("Q8", 8, Builder::Quaternion),
        CorpusEntry::new("A4", 12, Builder::Alternating(4)),
        CorpusEntry::new("A5", 60, Builder::Alternating(5)),
        CorpusEntry::new("H3", 27, Builder::Heisenberg(3)),
    ]);
    out
}

/// Corpus entries of order at most `max_order`.
pub fn entries_up_to(max_order: usize) -> Vec<CorpusEntry> {
    entries().into_iter().filter(|e| e.order <= max_order).collect()
}

/// Looks up a corpus group by name. Besides the bundled names this accepts the
/// parametrized forms `Z<n>`, `D<n>`, `S<n>`, `A<n>` and `H<m>`.
pub fn by_name(name: &str) -> Option<FiniteGroup> {
    if let Some(entry) = entries().into_iter().find(|e| e.name.eq_ignore_ascii_case(name)) {
        return Some(entry.build());
    }
    let mut chars = name.chars();
    let head = chars.next()?;
    let k: usize = chars.as_str().parse().ok()?;
    let group = match head {
        'Z' if k >= 1 && k <= 1024 => cyclic(k),
        'D' if k >= 3 && k <= 512 => dihedral(k),
        'S' if (2..=6).contains(&k) => symmetric(k),
        'A' if (3..=6).contains(&k) => alternating(k),
        'H' if (2..=10).contains(&k) => heisenberg(k),
        _ => return None,
    };
    Some(group.with_name(name))
}

pub fn trivial() -> FiniteGroup {
    FiniteGroup::from_table(&[vec![0]]).expect("trivial group")
}

/// ℤ/n with element k standing for the residue k.
pub fn cyclic(n: usize) -> FiniteGroup {
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::from_table(&table).expect("cyclic group")
}

/// ℤ/m × ℤ/n, elements `(a, b)` in lexicographic order.
pub fn cyclic_product(m: usize, n: usize) -> FiniteGroup {
    let elements: Vec<(usize, usize)> =
        (0..m).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    FiniteGroup::from_elements(&elements, |x, y| ((x.0 + y.0) % m, (x.1 + y.1) % n))
        .expect("direct product")
}

pub fn klein_four() -> FiniteGroup {
    cyclic_product(2, 2)
}

pub fn z2_x_z4() -> FiniteGroup {
    cyclic_product(2, 4)
}

pub fn symmetric(n: usize) -> FiniteGroup {
    let mut cycle: Vec<usize> = (1..n).collect();
    cycle.push(0);
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    FiniteGroup::from_permutations(&[cycle, swap]).expect("symmetric group")
}

/// Alternating group, generated by the 3-cycles `(i i+1 i+2)`.
pub fn alternating(n: usize) -> FiniteGroup {
    let generators: Vec<Vec<usize>> = (0..n.saturating_sub(2))
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p[i] = i + 1;
            p[i + 1] = i + 2;
            p[i + 2] = i;
            p
        })
        .collect();
    FiniteGroup::from_permutations(&generators).expect("alternating group")
}

/// Symmetries of the regular n-gon, order 2n.
pub fn dihedral(n: usize) -> FiniteGroup {
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::from_permutations(&[rotation, reflection]).expect("dihedral group")
}

/// Quaternion group {±1, ±i, ±j, ±k}; element `2u + s` is `(-1)^s` times unit u.
pub fn quaternion() -> FiniteGroup {
    // unit products: (sign, unit) for units 1, i, j, k
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let elements: Vec<(bool, usize)> =
        (0..4).flat_map(|u| [(false, u), (true, u)]).collect();
    FiniteGroup::from_elements(&elements, |x, y| {
        let (s, u) = UNIT[x.1][y.1];
        (x.0 ^ y.0 ^ s, u)
    })
    .expect("quaternion group")
}

/// Heisenberg group over ℤ/m: unitriangular 3×3 matrices, stored as `(a, b, c)`
/// with `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+a·b')`.
pub fn heisenberg(m: usize) -> FiniteGroup {
    let elements = heisenberg_elements(m);
    FiniteGroup::from_elements(&elements, |x, y| heisenberg_mul(m, *x, *y)).expect("heisenberg group")
}

pub(crate) fn heisenberg_elements(m: usize) -> Vec<(usize, usize, usize)> {
    (0..m)
        .flat_map(|a| (0..m).flat_map(move |b| (0..m).map(move |c| (a, b, c))))
        .collect()
}

pub(crate) fn heisenberg_mul(
    m: usize,
    x: (usize, usize, usize),
    y: (usize, usize, usize),
) -> (usize, usize, usize) {
    ((x.0 + y.0) % m, (x.1 + y.1) % m, (x.2 + y.2 + x.0 * y.1) % m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_orders_match() {
        for entry in entries() {
            let g = entry.build();
            assert_eq!(g.order(), entry.order, "{}", entry.name);
            assert_eq!(g.name(), Some(entry.name.as_str()));
        }
    }

    #[test]
    fn named_lookup() {
        assert_eq!(by_name("S3").unwrap().order(), 6);
        assert_eq!(by_name("q8").unwrap().order(), 8);
        assert_eq!(by_name("Z17").unwrap().order(), 17);
        assert_eq!(by_name("D7").unwrap().order(), 14);
        assert_eq!(by_name("H2").unwrap().order(), 8);
        assert!(by_name("X3").is_none());
        assert!(by_name("").is_none());
    }

    #[test]
    fn heisenberg_is_nonabelian_with_central_commutator() {
        let h = heisenberg(3);
        assert!(!h.is_abelian());
        assert_eq!(h.center().order(), 3);
        assert_eq!(h.exponent(), 3);
    }

    #[test]
    fn alternating_orders() {
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(alternating(5).conjugacy_classes().len(), 5);
    }
}
