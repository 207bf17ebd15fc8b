//! Permutations of `1..=n` and fully enumerated permutation groups.
//!
//! Composition applies the right operand first: `compose(p, q)(i) = p(q(i))`.
//! Points are 1-based at every public boundary (constructors, cycle notation,
//! [`Permutation::image`]); internally images are stored 0-based.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default cap on the order of an enumerated group (|S_7|).
pub const DEFAULT_ORDER_CAP: usize = 5040;

/// A bijection of `{1, …, n}` stored as its dense image sequence.
///
/// Ordering is lexicographic on the image sequence, which is the canonical
/// order used for element sets, coset representatives and class tables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i-1] = σ(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={n}"
                )));
            }
            seen[img - 1] = true;
            out.push((img - 1) as u32);
        }
        Ok(Self { images: out })
    }

    /// Builds a permutation from 0-based images without validation.
    pub(crate) fn from_zero_based(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i as u32 == v)
        });
        Self { images }
    }

    /// Builds a permutation of degree `degree` from (not necessarily disjoint)
    /// 1-based cycles. Cycles are composed right to left, as written.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Self::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut c = Self::identity(degree);
            let mut distinct = cycle.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != cycle.len() {
                return Err(Error::InvalidPermutation(format!(
                    "repeated point in cycle {cycle:?}"
                )));
            }
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > degree || b == 0 || b > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point out of range 1..={degree}: {cycle:?}"
                    )));
                }
                c.images[a - 1] = (b - 1) as u32;
            }
            acc = c.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Parses cycle notation such as `(1,2,3,4)(5,6)` at the given degree.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// σ(i) for a 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn apply0(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&j| self.images[j as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `t · self · t⁻¹`.
    pub fn conjugate_by(&self, t: &Permutation) -> Permutation {
        // (t σ t⁻¹)(t(i)) = t(σ(i))
        let mut out = vec![0u32; self.images.len()];
        for (i, &s) in self.images.iter().enumerate() {
            out[t.images[i] as usize] = t.images[s as usize];
        }
        Permutation { images: out }
    }

    /// Disjoint cycles of length ≥ 2, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted cycle lengths including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = self.images[i] as usize;
            }
            if len > 0 {
                out.push(len);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_even(&self) -> bool {
        let ct = self.cycle_type();
        ct.iter().map(|&l| l - 1).sum::<usize>() % 2 == 0
    }

    /// Element order (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, num_integer::lcm)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `(1,2,3)(4,5)`; whitespace may replace commas. `()` is the empty list.
pub fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let text = text.trim();
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in cycle notation: {text:?}")))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
        let body = &open[..close];
        let points = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Parses a comma separated list of cycle-notation generators, e.g.
/// `(1,2,3,4,5),(1,2,4,3)`. Returns the generators' cycles and the largest point.
pub fn parse_generator_list(text: &str) -> Result<(Vec<Vec<Vec<usize>>>, usize)> {
    let mut gens = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced ')' in {text:?}")))?;
                current.push(ch);
            }
            ',' | ';' if depth == 0 => {
                if !current.trim().is_empty() {
                    gens.push(parse_cycle_list(&current)?);
                }
                current.clear();
            }
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced '(' in {text:?}")));
    }
    if !current.trim().is_empty() {
        gens.push(parse_cycle_list(&current)?);
    }
    let max = gens.iter().flatten().flatten().copied().max().unwrap_or(1);
    Ok((gens, max))
}

/// A finite permutation group with its full, canonically sorted element list.
#[derive(Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PartialEq for PermutationGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermutationGroup {}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "> (degree {}, order {})", self.degree, self.order())
    }
}

impl PermutationGroup {
    /// Closure of `gens` under composition, failing once it outgrows `order_cap`.
    pub fn from_generators(degree: usize, gens: &[Permutation], order_cap: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = g.compose_unchecked(&x);
                if !seen.contains(&y) {
                    if seen.len() >= order_cap {
                        return Err(Error::CapExceeded {
                            what: "group order",
                            cap: order_cap,
                        });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Self {
            degree,
            generators: gens,
            elements,
        })
    }

    /// Convenience constructor from cycle-notation generator strings.
    pub fn from_cycle_strings(degree: usize, gens: &[&str]) -> Result<Self> {
        let perms = gens
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(degree, &perms, DEFAULT_ORDER_CAP)
    }

    /// Wraps an element list already known to be a group. Sorts it.
    pub(crate) fn from_elements_unchecked(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Self {
            degree,
            generators,
            elements,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    pub fn symmetric(degree: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[(1..=degree).collect()])?);
            gens.push(Permutation::from_cycles(degree, &[vec![1, 2]])?);
        }
        Self::from_generators(degree, &gens, DEFAULT_ORDER_CAP)
    }

    pub fn alternating(degree: usize) -> Result<Self> {
        let gens = (3..=degree)
            .map(|k| Permutation::from_cycles(degree, &[vec![1, 2, k]]))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(degree, &gens, DEFAULT_ORDER_CAP)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in canonical (lexicographic image) order; identity first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    /// Position of `p` in [`Self::elements`].
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    /// `{ t g t⁻¹ : g ∈ G }`.
    pub fn conjugate(&self, t: &Permutation) -> Result<Self> {
        if t.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, t.degree()));
        }
        let gens = self.generators.iter().map(|g| g.conjugate_by(t)).collect();
        let elements = self.elements.iter().map(|g| g.conjugate_by(t)).collect();
        Ok(Self::from_elements_unchecked(self.degree, gens, elements))
    }

    /// True iff every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree
            && self.order() <= other.order()
            && other.order().is_multiple_of(self.order())
            && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn is_normal_in(&self, ambient: &PermutationGroup) -> bool {
        self.is_subgroup_of(ambient)
            && ambient.generators.iter().all(|t| {
                self.generators
                    .iter()
                    .all(|g| self.contains(&g.conjugate_by(t)))
            })
    }

    pub fn intersection(&self, other: &PermutationGroup) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|g| other.contains(g))
            .cloned()
            .collect();
        let gens = small_generating_set(&elements);
        Ok(Self::from_elements_unchecked(self.degree, gens, elements))
    }

    /// Orbits on points, 1-based, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                for g in &self.generators {
                    let y = g.apply0(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            out.push(orbit.into_iter().map(|x| x + 1).collect());
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    pub fn is_even(&self) -> bool {
        self.generators.iter().all(|g| g.is_even())
    }

    /// Subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> Result<Self> {
        let mut comms: HashSet<Permutation> = HashSet::new();
        for a in &self.generators {
            for b in &self.elements {
                let c = a
                    .compose_unchecked(b)
                    .compose_unchecked(&a.inverse())
                    .compose_unchecked(&b.inverse());
                if !c.is_identity() {
                    comms.insert(c);
                }
            }
        }
        // The normal closure of generator commutators is the derived subgroup.
        let mut gens: Vec<Permutation> = comms.into_iter().collect();
        gens.sort_unstable();
        let closure = Self::from_generators(self.degree, &gens, self.order().max(1))?;
        let mut conj = Vec::new();
        for g in closure.generators() {
            for t in &self.generators {
                conj.push(g.conjugate_by(t));
            }
        }
        let mut all = closure.generators().to_vec();
        all.extend(conj);
        let normal = Self::from_generators(self.degree, &all, self.order().max(1))?;
        let gens = small_generating_set(normal.elements());
        Ok(Self::from_elements_unchecked(
            self.degree,
            gens,
            normal.elements,
        ))
    }

    /// Derived series reaches the identity.
    pub fn is_solvable(&self) -> Result<bool> {
        let mut g = self.clone();
        loop {
            if g.order() == 1 {
                return Ok(true);
            }
            let d = g.derived_subgroup()?;
            if d.order() == g.order() {
                return Ok(false);
            }
            g = d;
        }
    }

    /// Replaces the generator list with a greedy small generating set.
    pub fn with_small_generators(mut self) -> Self {
        self.generators = small_generating_set(&self.elements);
        self
    }
}

/// Greedy generating set: scan elements in canonical order, keep any element
/// not yet in the subgroup generated so far.
pub(crate) fn small_generating_set(elements: &[Permutation]) -> Vec<Permutation> {
    let Some(first) = elements.first() else {
        return Vec::new();
    };
    let degree = first.degree();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
    // Prefer high-order elements: they tend to generate more per step.
    let mut ordered: Vec<&Permutation> = elements.iter().collect();
    ordered.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.cmp(b)));
    for g in ordered {
        if current.len() == elements.len() {
            break;
        }
        if current.contains(g) {
            continue;
        }
        gens.push(g.clone());
        let mut queue: VecDeque<Permutation> = current.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for h in &gens {
                let y = h.compose_unchecked(&x);
                if current.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    gens.sort_unstable();
    gens
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses cycle notation, taking the degree from the largest point.
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        let degree = cycles.iter().flatten().copied().max().unwrap_or(1);
        Permutation::from_cycles(degree, &cycles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    fn brute_compose(a: &Permutation, b: &Permutation) -> Vec<usize> {
        (1..=a.degree()).map(|i| a.image(b.image(i))).collect()
    }

    #[test]
    fn compose_examples() {
        let id = Permutation::identity(4);
        assert_eq!(id.compose(&p(4, "(1,2)")).unwrap(), p(4, "(1,2)"));
        assert!(p(4, "(1,2)").compose(&p(4, "(1,2)")).unwrap().is_identity());
        let a = p(4, "(1,2,3,4)");
        let b = p(4, "(1,3)");
        let c = a.compose(&b).unwrap();
        // apply (1 3) first: 1->3->4, 2->2->3, 3->1->2, 4->4->1
        assert_eq!(c.images(), vec![4, 3, 2, 1]);
        assert_eq!(c.images(), brute_compose(&a, &b));
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        assert!(matches!(
            p(3, "(1,2)").compose(&p(4, "(1,2)")),
            Err(Error::DegreeMismatch(3, 4))
        ));
    }

    #[test]
    fn inverse_examples() {
        assert!(Permutation::identity(3).inverse().is_identity());
        assert_eq!(p(4, "(1,2)").inverse(), p(4, "(1,2)"));
        let c = p(4, "(1,2,3,4)");
        assert_eq!(c.inverse(), p(4, "(1,4,3,2)"));
        assert!(c.compose(&c.inverse()).unwrap().is_identity());
    }

    #[test]
    fn cycle_notation_round_trip() {
        let q = p(6, "(1,2,3,4)(5,6)");
        assert_eq!(q.to_string(), "(1,2,3,4)(5,6)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(p(5, "(2 5)(3 4)"), p(5, "(2,5)(3,4)"));
        assert!(Permutation::parse_cycles(3, "(1,4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1,1)").is_err());
        assert!(Permutation::parse_cycles(3, "(1,2").is_err());
        assert!(Permutation::from_images(&[1, 1, 3]).is_err());
    }

    #[test]
    fn group_orders() {
        let triv = PermutationGroup::from_generators(4, &[], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(triv.order(), 1);
        let d4 = PermutationGroup::from_cycle_strings(4, &["(1,2,3,4)", "(1,3)"]).unwrap();
        assert_eq!(d4.order(), 8);
        let m5 = PermutationGroup::from_cycle_strings(5, &["(1,2,3,4,5)", "(1,2,4,3)"]).unwrap();
        assert_eq!(m5.order(), 20);
        assert_eq!(PermutationGroup::symmetric(5).unwrap().order(), 120);
        assert_eq!(PermutationGroup::alternating(5).unwrap().order(), 60);
    }

    #[test]
    fn cap_exceeded() {
        let s5 = [p(5, "(1,2,3,4,5)"), p(5, "(1,2)")];
        assert!(matches!(
            PermutationGroup::from_generators(5, &s5, 100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn conjugation_examples() {
        let d4 = PermutationGroup::from_cycle_strings(4, &["(1,2,3,4)", "(1,3)"]).unwrap();
        assert_eq!(d4.conjugate(&Permutation::identity(4)).unwrap(), d4);
        let c2 = PermutationGroup::from_cycle_strings(3, &["(1,2)"]).unwrap();
        let c2b = PermutationGroup::from_cycle_strings(3, &["(1,3)"]).unwrap();
        assert_eq!(c2.conjugate(&p(3, "(2,3)")).unwrap(), c2b);
        let t = p(4, "(3,4)");
        let conj = d4.conjugate(&t).unwrap();
        // elementwise oracle
        let oracle: Vec<Permutation> = {
            let mut v: Vec<_> = d4
                .elements()
                .iter()
                .map(|g| t.compose(g).unwrap().compose(&t.inverse()).unwrap())
                .collect();
            v.sort();
            v
        };
        assert_eq!(conj.elements(), &oracle[..]);
        assert_eq!(conj.order(), 8);
        assert!(conj.contains(&p(4, "(1,2,4,3)")));
    }

    #[test]
    fn subgroup_examples() {
        let i4 = PermutationGroup::trivial(4);
        let d4 = PermutationGroup::from_cycle_strings(4, &["(1,2,3,4)", "(1,3)"]).unwrap();
        let a4 = PermutationGroup::alternating(4).unwrap();
        assert!(i4.is_subgroup_of(&d4));
        assert!(!d4.is_subgroup_of(&a4));
        assert!(d4.elements().iter().any(|g| !g.is_even()));
        let c5 = PermutationGroup::from_cycle_strings(5, &["(1,2,3,4,5)"]).unwrap();
        let m5 = PermutationGroup::from_cycle_strings(5, &["(1,2,3,4,5)", "(1,2,4,3)"]).unwrap();
        assert!(c5.is_subgroup_of(&m5));
    }

    #[test]
    fn solvability() {
        assert!(PermutationGroup::symmetric(4)
            .unwrap()
            .is_solvable()
            .unwrap());
        assert!(!PermutationGroup::symmetric(5)
            .unwrap()
            .is_solvable()
            .unwrap());
        assert!(!PermutationGroup::alternating(5)
            .unwrap()
            .is_solvable()
            .unwrap());
        let m5 = PermutationGroup::from_cycle_strings(5, &["(1,2,3,4,5)", "(1,2,4,3)"]).unwrap();
        assert!(m5.is_solvable().unwrap());
        let d = PermutationGroup::symmetric(4)
            .unwrap()
            .derived_subgroup()
            .unwrap();
        assert_eq!(d, PermutationGroup::alternating(4).unwrap());
    }

    #[test]
    fn small_generators_generate() {
        let s5 = PermutationGroup::symmetric(5).unwrap();
        let gens = small_generating_set(s5.elements());
        let g = PermutationGroup::from_generators(5, &gens, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g, s5);
        assert!(gens.len() <= 3);
    }
}
