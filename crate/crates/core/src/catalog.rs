//! Named transitive permutation groups of degree at most 7, and labeling of
//! arbitrary permutation groups by conjugacy against them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::perm::{Permutation, PermutationGroup};

/// `(name, degree, generators)`, one entry per conjugacy class of transitive
/// subgroups of `S_d` for `d ≤ 6`, plus the seven transitive groups of degree 7.
const ENTRIES: &[(&str, usize, &[&str])] = &[
    ("S1", 1, &[]),
    ("S2", 2, &["(1,2)"]),
    ("A3", 3, &["(1,2,3)"]),
    ("S3", 3, &["(1,2,3)", "(1,2)"]),
    ("C4", 4, &["(1,2,3,4)"]),
    ("V4", 4, &["(1,2)(3,4)", "(1,3)(2,4)"]),
    ("D4", 4, &["(1,2,3,4)", "(1,3)"]),
    ("A4", 4, &["(1,2,3)", "(2,3,4)"]),
    ("S4", 4, &["(1,2,3,4)", "(1,2)"]),
    ("C5", 5, &["(1,2,3,4,5)"]),
    ("D5", 5, &["(1,2,3,4,5)", "(2,5)(3,4)"]),
    ("M5", 5, &["(1,2,3,4,5)", "(1,2,4,3)"]),
    ("A5", 5, &["(1,2,3,4,5)", "(1,2,3)"]),
    ("S5", 5, &["(1,2,3,4,5)", "(1,2)"]),
    ("C6", 6, &["(1,2,3,4,5,6)"]),
    ("S3(6)", 6, &["(1,2,3)(4,5,6)", "(1,4)(2,6)(3,5)"]),
    ("D6(6)", 6, &["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"]),
    ("A4(6)", 6, &["(1,4,2)(3,5,6)", "(2,5)(3,4)"]),
    ("F18(6)", 6, &["(1,2,3)", "(1,4)(2,5)(3,6)"]),
    (
        "2A4(6)",
        6,
        &["(1,4,2)(3,5,6)", "(2,5)(3,4)", "(1,6)(2,5)(3,4)"],
    ),
    ("S4(6d)", 6, &["(1,4,2)(3,5,6)", "(1,4,6,3)(2,5)"]),
    ("S4(6c)", 6, &["(1,4,2)(3,5,6)", "(1,3,6,4)"]),
    ("F18(6):2", 6, &["(1,2,3)", "(1,4)(2,5)(3,6)", "(2,3)(5,6)"]),
    ("F36(6)", 6, &["(1,2,3)", "(1,4)(2,5,3,6)"]),
    (
        "2S4(6)",
        6,
        &["(1,4,2)(3,5,6)", "(1,4,6,3)(2,5)", "(1,6)(2,5)(3,4)"],
    ),
    ("F36(6):2", 6, &["(1,2,3)", "(1,2)", "(1,4)(2,5)(3,6)"]),
    ("L(6)", 6, &["(1,2,3,4,5)", "(1,6)(2,5)"]),
    ("L(6):2", 6, &["(1,2,3,4,5)", "(1,6)(2,5)", "(2,3,5,4)"]),
    ("A6", 6, &["(1,2,3)", "(2,3,4,5,6)"]),
    ("S6", 6, &["(1,2,3,4,5,6)", "(1,2)"]),
    ("C7", 7, &["(1,2,3,4,5,6,7)"]),
    ("D7", 7, &["(1,2,3,4,5,6,7)", "(2,7)(3,6)(4,5)"]),
    ("F21", 7, &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]),
    ("F42", 7, &["(1,2,3,4,5,6,7)", "(2,4,3,7,5,6)"]),
    ("L(7)", 7, &["(1,2,3,4,5,6,7)", "(1,2)(3,6)"]),
    ("A7", 7, &["(1,2,3)", "(1,2,3,4,5,6,7)"]),
    ("S7", 7, &["(1,2,3,4,5,6,7)", "(1,2)"]),
];

/// Largest degree covered by the catalog.
pub const CATALOG_MAX_DEGREE: usize = 7;

/// A named catalog group.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub group: PermutationGroup,
    histogram: BTreeMap<Vec<usize>, usize>,
}

fn cycle_histogram(g: &PermutationGroup) -> BTreeMap<Vec<usize>, usize> {
    let mut h = BTreeMap::new();
    for x in g.elements() {
        *h.entry(x.cycle_type()).or_insert(0) += 1;
    }
    h
}

/// All catalog groups, built once.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        ENTRIES
            .iter()
            .map(|&(name, degree, gens)| {
                let group = PermutationGroup::from_cycle_strings(degree, gens)
                    .expect("catalog generators are valid");
                let histogram = cycle_histogram(&group);
                CatalogEntry {
                    name,
                    group,
                    histogram,
                }
            })
            .collect()
    })
}

/// Catalog entries of the given degree, in catalog order (ascending order).
pub fn transitive_groups(degree: usize) -> Vec<&'static CatalogEntry> {
    catalog()
        .iter()
        .filter(|e| e.group.degree() == degree)
        .collect()
}

pub fn by_name(name: &str) -> Option<&'static CatalogEntry> {
    catalog().iter().find(|e| e.name == name)
}

/// Finds `t` with `t A t⁻¹ = B`, for transitive `A`, `B` of equal degree.
///
/// A conjugator is determined by `t(1)` and by the images `t g t⁻¹ ∈ B` of
/// the generators `g` of `A`, so it suffices to try every assignment of
/// generator images of matching cycle type with `t(1) = 1`.
pub fn transitive_conjugator(a: &PermutationGroup, b: &PermutationGroup) -> Option<Permutation> {
    let n = a.degree();
    if b.degree() != n || a.order() != b.order() || !a.is_transitive() || !b.is_transitive() {
        return None;
    }
    let gens: Vec<Permutation> = {
        let g = a.generators();
        if g.is_empty() {
            return if n == 1 {
                Some(Permutation::identity(1))
            } else {
                None
            };
        }
        g.to_vec()
    };
    let candidates: Vec<Vec<&Permutation>> = gens
        .iter()
        .map(|g| {
            let ct = g.cycle_type();
            b.elements()
                .iter()
                .filter(|x| x.cycle_type() == ct)
                .collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    // Schreier tree of point 1 under the generators of A.
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut order = vec![0usize];
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut k = 0;
    while k < order.len() {
        let i = order[k];
        for (gi, g) in gens.iter().enumerate() {
            let j = g.apply0(i);
            if !reached[j] {
                reached[j] = true;
                parent[j] = Some((i, gi));
                order.push(j);
            }
        }
        k += 1;
    }

    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<&Permutation> = choice
            .iter()
            .enumerate()
            .map(|(k, &c)| candidates[k][c])
            .collect();
        let mut t = vec![usize::MAX; n];
        t[0] = 0;
        for &j in order.iter().skip(1) {
            let (i, gi) = parent[j].expect("tree edge");
            t[j] = images[gi].apply0(t[i]);
        }
        let mut hit = vec![false; n];
        let bijective = t
            .iter()
            .all(|&v| v < n && !std::mem::replace(&mut hit[v], true));
        if bijective
            && (0..n).all(|i| {
                gens.iter()
                    .zip(&images)
                    .all(|(g, b)| t[g.apply0(i)] == b.apply0(t[i]))
            })
        {
            return Some(Permutation::from_zero_based(
                t.into_iter().map(|v| v as u32).collect(),
            ));
        }
        // advance the mixed-radix counter
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return None;
            }
            choice[pos] += 1;
            if choice[pos] < candidates[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// Catalog entry conjugate to a transitive group of degree ≤ 7.
pub fn identify_transitive(g: &PermutationGroup) -> Option<&'static CatalogEntry> {
    if g.degree() > CATALOG_MAX_DEGREE || !g.is_transitive() {
        return None;
    }
    let n = g.degree();
    let full: usize = (1..=n).product();
    let by_order = |name: String| by_name(&name);
    if g.order() == full {
        return by_order(format!("S{n}"));
    }
    if n >= 4 && g.order() * 2 == full && g.is_even() {
        return by_order(format!("A{n}"));
    }
    let hist = cycle_histogram(g);
    catalog().iter().find(|e| {
        e.group.degree() == g.degree()
            && e.group.order() == g.order()
            && e.histogram == hist
            && transitive_conjugator(g, &e.group).is_some()
    })
}

/// A permutation group named up to conjugacy in its symmetric group.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupLabel {
    name: String,
    degree: usize,
    order: usize,
    transitive: bool,
    generators: Vec<Permutation>,
}

impl GroupLabel {
    /// Labels `g`: catalog name for transitive groups of degree ≤ 7, `I{k}`
    /// for trivial groups, `AxB` joins for direct products over orbits, and
    /// `T(degree,order,orbits)` otherwise.
    pub fn of(g: &PermutationGroup) -> Self {
        let transitive = g.is_transitive();
        let degree = g.degree();
        let order = g.order();
        if transitive {
            if let Some(e) = identify_transitive(g) {
                return Self {
                    name: e.name.to_string(),
                    degree,
                    order,
                    transitive,
                    generators: e.group.generators().to_vec(),
                };
            }
        } else if order == 1 {
            return Self {
                name: format!("I{degree}"),
                degree,
                order,
                transitive,
                generators: Vec::new(),
            };
        } else if let Some(name) = product_name(g) {
            return Self {
                name,
                degree,
                order,
                transitive,
                generators: g.generators().to_vec(),
            };
        }
        Self {
            name: format!("T({},{},{})", degree, order, g.orbits().len()),
            degree,
            order,
            transitive,
            generators: g.generators().to_vec(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_transitive(&self) -> bool {
        self.transitive
    }

    /// Catalog generators for named groups, otherwise the group's own.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn is_cataloged(&self) -> bool {
        !self.name.starts_with("T(")
    }

    pub fn to_json(&self) -> LabelJson {
        LabelJson {
            name: self.name.clone(),
            degree: self.degree,
            order: self.order,
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl fmt::Debug for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[deg {}, ord {}]", self.name, self.degree, self.order)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelJson {
    pub name: String,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

/// Restriction of `g` to one of its orbits, renumbered `1..=|orbit|` in
/// ascending point order.
pub fn restrict_to_orbit(g: &PermutationGroup, orbit: &[usize]) -> PermutationGroup {
    let mut pos = vec![usize::MAX; g.degree() + 1];
    for (k, &p) in orbit.iter().enumerate() {
        pos[p] = k;
    }
    let gens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|x| {
            Permutation::from_zero_based(orbit.iter().map(|&p| pos[x.image(p)] as u32).collect())
        })
        .collect();
    PermutationGroup::from_generators(orbit.len(), &gens, g.order().max(1))
        .expect("restriction is a quotient of g")
}

/// `AxBx…` when `g` is the full direct product of its orbit restrictions,
/// each of which is cataloged. Factors are listed by ascending orbit size.
fn product_name(g: &PermutationGroup) -> Option<String> {
    let mut orbits = g.orbits();
    orbits.sort_by_key(|o| o.len());
    let mut names = Vec::new();
    let mut product = 1usize;
    for o in &orbits {
        let r = restrict_to_orbit(g, o);
        product = product.checked_mul(r.order())?;
        names.push(identify_transitive(&r)?.name);
    }
    (product == g.order()).then(|| names.join("x"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgrp::subgroup_classes;

    #[test]
    fn catalog_orders() {
        let expect = [
            ("S1", 1),
            ("S3", 6),
            ("V4", 4),
            ("D4", 8),
            ("M5", 20),
            ("S3(6)", 6),
            ("D6(6)", 12),
            ("A4(6)", 12),
            ("F18(6)", 18),
            ("2A4(6)", 24),
            ("S4(6d)", 24),
            ("S4(6c)", 24),
            ("F18(6):2", 36),
            ("F36(6)", 36),
            ("2S4(6)", 48),
            ("F36(6):2", 72),
            ("L(6)", 60),
            ("L(6):2", 120),
            ("A6", 360),
            ("S6", 720),
            ("D7", 14),
            ("F21", 21),
            ("F42", 42),
            ("L(7)", 168),
            ("A7", 2520),
            ("S7", 5040),
        ];
        for (name, order) in expect {
            let e = by_name(name).unwrap();
            assert_eq!(e.group.order(), order, "{name}");
            assert!(e.group.is_transitive(), "{name}");
        }
    }

    #[test]
    fn parities() {
        assert!(by_name("S4(6d)").unwrap().group.is_even());
        assert!(!by_name("S4(6c)").unwrap().group.is_even());
        assert!(by_name("F36(6)").unwrap().group.is_even());
        assert!(by_name("L(7)").unwrap().group.is_even());
    }

    #[test]
    fn catalog_entries_pairwise_non_conjugate() {
        let cat = catalog();
        for (i, a) in cat.iter().enumerate() {
            for b in &cat[i + 1..] {
                if a.group.degree() == b.group.degree() && a.group.order() == b.group.order() {
                    assert!(
                        transitive_conjugator(&a.group, &b.group).is_none(),
                        "{} ~ {}",
                        a.name,
                        b.name
                    );
                }
            }
        }
    }

    #[test]
    fn catalog_is_complete_up_to_degree_6() {
        for n in 1..=6 {
            let s = PermutationGroup::symmetric(n).unwrap();
            let classes = subgroup_classes(&s).unwrap();
            let transitive: Vec<_> = classes
                .representatives()
                .iter()
                .filter(|h| h.is_transitive())
                .collect();
            assert_eq!(transitive.len(), transitive_groups(n).len(), "degree {n}");
            for h in transitive {
                assert!(identify_transitive(h).is_some(), "unlabeled {h:?}");
            }
        }
    }

    #[test]
    fn conjugator_maps_groups() {
        let a = PermutationGroup::from_cycle_strings(4, &["(1,3,2,4)", "(1,2)"]).unwrap();
        let b = &by_name("D4").unwrap().group;
        let t = transitive_conjugator(&a, b).unwrap();
        assert_eq!(&a.conjugate(&t).unwrap(), b);
    }

    #[test]
    fn labels() {
        let g = PermutationGroup::from_cycle_strings(3, &["(1,2)"]).unwrap();
        assert_eq!(GroupLabel::of(&g).name(), "S1xS2");
        assert_eq!(GroupLabel::of(&PermutationGroup::trivial(2)).name(), "I2");
        assert_eq!(GroupLabel::of(&PermutationGroup::trivial(1)).name(), "S1");
        let diag = PermutationGroup::from_cycle_strings(4, &["(1,2)(3,4)"]).unwrap();
        assert_eq!(GroupLabel::of(&diag).name(), "T(4,2,2)");
        let c10 = PermutationGroup::from_cycle_strings(10, &["(1,2,3,4,5,6,7,8,9,10)"]).unwrap();
        assert_eq!(GroupLabel::of(&c10).name(), "T(10,10,1)");
    }
}
