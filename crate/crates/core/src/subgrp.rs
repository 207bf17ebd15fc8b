//! Left cosets, subgroup conjugacy classes and normal cores inside an
//! ambient group `L`.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{small_generating_set, Permutation, PermutationGroup};

/// Largest ambient order accepted by [`subgroup_classes`].
pub const CLASS_ENUMERATION_CAP: usize = 720;

/// The left cosets `σ₁H, …, σₑH` of `H` in `L`.
#[derive(Clone, Debug)]
pub struct CosetList {
    ambient: PermutationGroup,
    subgroup: PermutationGroup,
    representatives: Vec<Permutation>,
    element_coset: HashMap<Permutation, usize>,
}

impl CosetList {
    pub fn ambient(&self) -> &PermutationGroup {
        &self.ambient
    }

    pub fn subgroup(&self) -> &PermutationGroup {
        &self.subgroup
    }

    /// `σ₁ = id, σ₂, …, σₑ`.
    pub fn representatives(&self) -> &[Permutation] {
        &self.representatives
    }

    /// The index `e = [L : H]`.
    pub fn index(&self) -> usize {
        self.representatives.len()
    }

    /// Position of the coset containing `g`, if `g ∈ L`.
    pub fn coset_of(&self, g: &Permutation) -> Option<usize> {
        self.element_coset.get(g).copied()
    }
}

/// Left cosets of `h` in `l`; representatives are the first unassigned
/// elements in canonical order, so `σ₁` is the identity.
pub fn left_cosets(l: &PermutationGroup, h: &PermutationGroup) -> Result<CosetList> {
    if !h.is_subgroup_of(l) {
        return Err(Error::NotASubgroup(format!(
            "{h:?} is not contained in {l:?}"
        )));
    }
    let mut element_coset = HashMap::with_capacity(l.order());
    let mut representatives = Vec::with_capacity(l.order() / h.order());
    for s in l.elements() {
        if element_coset.contains_key(s) {
            continue;
        }
        let idx = representatives.len();
        for x in h.elements() {
            element_coset.insert(s.compose_unchecked(x), idx);
        }
        representatives.push(s.clone());
    }
    Ok(CosetList {
        ambient: l.clone(),
        subgroup: h.clone(),
        representatives,
        element_coset,
    })
}

/// Intersection of all `L`-conjugates of `H`.
pub fn normal_core(l: &PermutationGroup, h: &PermutationGroup) -> Result<PermutationGroup> {
    let cosets = left_cosets(l, h)?;
    let conjugators: Vec<Permutation> = cosets
        .representatives()
        .iter()
        .map(|t| t.inverse())
        .collect();
    // x ∈ tHt⁻¹  ⟺  t⁻¹xt ∈ H
    let elements: Vec<Permutation> = h
        .elements()
        .iter()
        .filter(|x| conjugators.iter().all(|ti| h.contains(&x.conjugate_by(ti))))
        .cloned()
        .collect();
    let gens = small_generating_set(&elements);
    Ok(PermutationGroup::from_elements_unchecked(
        l.degree(),
        gens,
        elements,
    ))
}

/// Some `t ∈ L` with `t A t⁻¹ = B`, by exhaustive search.
pub fn conjugating_element(
    l: &PermutationGroup,
    a: &PermutationGroup,
    b: &PermutationGroup,
) -> Option<Permutation> {
    if a.order() != b.order() || a.degree() != b.degree() {
        return None;
    }
    l.elements()
        .iter()
        .find(|t| {
            a.generators()
                .iter()
                .all(|g| b.contains(&g.conjugate_by(t)))
        })
        .cloned()
}

/// Fixed-size bitset over the element indices of an ambient group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub(crate) fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }

    /// Lexicographic order of the sorted index lists of two equal-size sets:
    /// the set holding the smallest element of the symmetric difference is smaller.
    pub(crate) fn lex_cmp(&self, other: &Bits) -> std::cmp::Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            let d = a ^ b;
            if d != 0 {
                let low = d & d.wrapping_neg();
                return if a & low != 0 {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                };
            }
        }
        std::cmp::Ordering::Equal
    }
}

/// An ambient group with indexed elements and a full multiplication table.
pub(crate) struct IndexedGroup {
    pub(crate) group: PermutationGroup,
    index: HashMap<Permutation, u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl IndexedGroup {
    pub(crate) fn new(group: &PermutationGroup) -> Self {
        let els = group.elements();
        let n = els.len();
        let index: HashMap<Permutation, u32> = els
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let mut mul = vec![0u32; n * n];
        for (a, pa) in els.iter().enumerate() {
            for (b, pb) in els.iter().enumerate() {
                mul[a * n + b] = index[&pa.compose_unchecked(pb)];
            }
        }
        let inv = els.iter().map(|p| index[&p.inverse()]).collect();
        Self {
            group: group.clone(),
            index,
            mul,
            inv,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.inv.len()
    }

    #[inline]
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.len() + b as usize]
    }

    pub(crate) fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub(crate) fn bits_of(&self, g: &PermutationGroup) -> Option<Bits> {
        let mut b = Bits::new(self.len());
        for x in g.elements() {
            b.set(self.index_of(x)? as usize);
        }
        Some(b)
    }

    /// Closure of the given generator indices.
    fn closure(&self, gens: &[u32]) -> Bits {
        let mut bits = Bits::new(self.len());
        let id = 0u32; // identity is the smallest element
        bits.set(id as usize);
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(g, x);
                if !bits.get(y as usize) {
                    bits.set(y as usize);
                    queue.push(y);
                }
            }
        }
        bits
    }

    fn conjugate_bits(&self, bits: &Bits, t: u32) -> Bits {
        let ti = self.inv[t as usize];
        let mut out = Bits::new(self.len());
        for k in bits.iter() {
            out.set(self.mul(self.mul(t, k as u32), ti) as usize);
        }
        out
    }

    /// The conjugate with the lexicographically smallest sorted element list.
    fn canonical(&self, bits: &Bits) -> Bits {
        let mut best = bits.clone();
        for t in 1..self.len() as u32 {
            let c = self.conjugate_bits(bits, t);
            if c.lex_cmp(&best).is_lt() {
                best = c;
            }
        }
        best
    }

    pub(crate) fn to_group(&self, bits: &Bits) -> PermutationGroup {
        let els = self.group.elements();
        let elements: Vec<Permutation> = bits.iter().map(|i| els[i].clone()).collect();
        let gens = small_generating_set(&elements);
        PermutationGroup::from_elements_unchecked(self.group.degree(), gens, elements)
    }
}

/// One representative per conjugacy class of subgroups of an ambient group.
#[derive(Clone)]
pub struct SubgroupClassTable {
    ambient: PermutationGroup,
    representatives: Vec<PermutationGroup>,
    indexed: Arc<IndexedGroup>,
    canonical: Vec<Bits>,
}

impl std::fmt::Debug for SubgroupClassTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupClassTable")
            .field("ambient", &self.ambient)
            .field("representatives", &self.representatives)
            .finish()
    }
}

impl SubgroupClassTable {
    pub fn ambient(&self) -> &PermutationGroup {
        &self.ambient
    }

    /// `H₁, …, H_r`, ascending by order, then by canonical element list.
    pub fn representatives(&self) -> &[PermutationGroup] {
        &self.representatives
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Index of the class containing `g`, a subgroup of the ambient group.
    pub fn class_of(&self, g: &PermutationGroup) -> Result<usize> {
        let bits = self
            .indexed
            .bits_of(g)
            .filter(|_| g.is_subgroup_of(&self.ambient))
            .ok_or_else(|| Error::NotASubgroup(format!("{g:?}")))?;
        let canon = self.indexed.canonical(&bits);
        self.canonical
            .iter()
            .position(|c| *c == canon)
            .ok_or_else(|| Error::NotASubgroup(format!("{g:?} matches no class")))
    }

    /// Serializable summary: degree and cycle-notation generators per class.
    pub fn to_summary(&self) -> ClassTableSummary {
        ClassTableSummary {
            degree: self.ambient.degree(),
            ambient_order: self.ambient.order(),
            classes: self
                .representatives
                .iter()
                .map(|h| ClassSummary {
                    order: h.order(),
                    generators: h.generators().iter().map(|g| g.to_string()).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub order: usize,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTableSummary {
    pub degree: usize,
    pub ambient_order: usize,
    pub classes: Vec<ClassSummary>,
}

/// Enumerates subgroup conjugacy classes by closure-extension: starting
/// from the trivial group, each class representative is extended by one
/// element at a time, new subgroups are reduced to their canonical conjugate,
/// and every new class is extended in turn.
pub fn subgroup_classes(l: &PermutationGroup) -> Result<SubgroupClassTable> {
    if l.order() > CLASS_ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "ambient order for subgroup enumeration",
            cap: CLASS_ENUMERATION_CAP,
        });
    }
    let ig = Arc::new(IndexedGroup::new(l));
    let n = ig.len();
    let element_order: Vec<usize> = l.elements().iter().map(|p| p.order()).collect();

    let trivial = ig.closure(&[]);
    let mut classes: Vec<(Bits, Vec<u32>)> = vec![(trivial.clone(), Vec::new())];
    let mut known: HashSet<Bits> = HashSet::from([trivial]);
    let mut seen_raw: HashSet<Bits> = HashSet::new();
    let mut next = 0;
    while next < classes.len() {
        let (k_bits, k_gens) = classes[next].clone();
        next += 1;
        let k_elems: Vec<u32> = k_bits.iter().map(|i| i as u32).collect();
        let mut covered = k_bits.clone();
        for g in 0..n as u32 {
            if covered.get(g as usize) {
                continue;
            }
            // ⟨K, g⟩ = ⟨K, a gʲ b⟩ for a, b ∈ K and j coprime to ord(g)
            let ord = element_order[g as usize];
            let mut power = g;
            for j in 1..ord {
                if num_integer::gcd(j, ord) == 1 {
                    for &a in &k_elems {
                        let ag = ig.mul(a, power);
                        for &b in &k_elems {
                            covered.set(ig.mul(ag, b) as usize);
                        }
                    }
                }
                power = ig.mul(power, g);
            }
            let mut gens = k_gens.clone();
            gens.push(g);
            let m = ig.closure(&gens);
            if !seen_raw.insert(m.clone()) {
                continue;
            }
            let canon = ig.canonical(&m);
            if known.insert(canon.clone()) {
                // Generators of the canonical conjugate: conjugate the raw ones.
                let t = (0..n as u32)
                    .find(|&t| ig.conjugate_bits(&m, t) == canon)
                    .expect("canonical form is a conjugate");
                let ti = ig.inv[t as usize];
                let cgens = gens.iter().map(|&x| ig.mul(ig.mul(t, x), ti)).collect();
                classes.push((canon, cgens));
            }
        }
    }

    classes.sort_by(|a, b| {
        a.0.count()
            .cmp(&b.0.count())
            .then_with(|| a.0.lex_cmp(&b.0))
    });
    let representatives = classes.iter().map(|(b, _)| ig.to_group(b)).collect();
    let canonical = classes.into_iter().map(|(b, _)| b).collect();
    Ok(SubgroupClassTable {
        ambient: l.clone(),
        representatives,
        indexed: ig,
        canonical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::from_cycle_strings(n, gens).unwrap()
    }

    fn m5() -> PermutationGroup {
        grp(5, &["(1,2,3,4,5)", "(1,2,4,3)"])
    }

    fn d5() -> PermutationGroup {
        grp(5, &["(1,2,3,4,5)", "(2,5)(3,4)"])
    }

    #[test]
    fn cosets_of_self() {
        let s4 = PermutationGroup::symmetric(4).unwrap();
        let c = left_cosets(&s4, &s4).unwrap();
        assert_eq!(c.index(), 1);
        assert!(c.representatives()[0].is_identity());
    }

    #[test]
    fn cosets_s4_a4() {
        let s4 = PermutationGroup::symmetric(4).unwrap();
        let a4 = PermutationGroup::alternating(4).unwrap();
        let c = left_cosets(&s4, &a4).unwrap();
        assert_eq!(c.index(), 2);
        assert_eq!(c.representatives()[1].to_string(), "(3,4)");
    }

    #[test]
    fn cosets_m5_d5() {
        let c = left_cosets(&m5(), &d5()).unwrap();
        assert_eq!(c.index(), 2);
        let t = Permutation::parse_cycles(5, "(2,3,5,4)").unwrap();
        assert_eq!(c.coset_of(&t), Some(1));
        assert_eq!(c.representatives()[1], t);
    }

    #[test]
    fn cosets_reject_non_subgroup() {
        let d4 = grp(4, &["(1,2,3,4)", "(1,3)"]);
        let a4 = PermutationGroup::alternating(4).unwrap();
        assert!(matches!(left_cosets(&a4, &d4), Err(Error::NotASubgroup(_))));
    }

    #[test]
    fn m5_classes() {
        let t = subgroup_classes(&m5()).unwrap();
        let orders: Vec<usize> = t.representatives().iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 2, 4, 5, 10, 20]);
        let h2 = grp(5, &["(2,5)(3,4)"]);
        assert_eq!(t.representatives()[1], h2);
        let h3 = grp(5, &["(2,5)(3,4)", "(2,3,5,4)"]);
        assert_eq!(t.representatives()[2], h3);
        assert_eq!(t.representatives()[4], d5());
    }

    #[test]
    fn trivial_ambient_has_one_class() {
        let t = subgroup_classes(&PermutationGroup::trivial(3)).unwrap();
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| {
                subgroup_classes(&PermutationGroup::symmetric(n).unwrap())
                    .unwrap()
                    .len()
            })
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 19]);
    }

    #[test]
    fn cap_is_enforced() {
        let s7 = PermutationGroup::symmetric(7).unwrap();
        assert!(matches!(
            subgroup_classes(&s7),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn normal_cores() {
        let s4 = PermutationGroup::symmetric(4).unwrap();
        let a4 = PermutationGroup::alternating(4).unwrap();
        assert_eq!(normal_core(&s4, &a4).unwrap(), a4);
        let d4 = grp(4, &["(1,2,3,4)", "(1,3)"]);
        let v4 = grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert_eq!(normal_core(&s4, &d4).unwrap(), v4);
        let s2s2 = grp(4, &["(1,2)", "(3,4)"]);
        assert_eq!(normal_core(&s4, &s2s2).unwrap().order(), 1);
    }

    #[test]
    fn class_lookup() {
        let s4 = PermutationGroup::symmetric(4).unwrap();
        let t = subgroup_classes(&s4).unwrap();
        let d4a = grp(4, &["(1,2,3,4)", "(1,3)"]);
        let d4b = grp(4, &["(1,3,2,4)", "(1,2)"]);
        assert_eq!(t.class_of(&d4a).unwrap(), t.class_of(&d4b).unwrap());
        assert_eq!(t.representatives()[t.class_of(&d4a).unwrap()].order(), 8);
    }
}
