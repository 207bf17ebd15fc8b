//! Specialized resolvents `R(x) = ∏_{σ ∈ L/H} (x − (σ.P)(α))` computed from
//! certified root disks, with exact integer coefficient recovery.

mod ball;
mod roots;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use ball::{eval_int_poly, CBall};
pub use roots::{complex_roots, RootVector};

use crate::error::{Error, Result};
use crate::invariants::InvariantSpec;
use crate::matrices::{coset_action, Partition};
use crate::perm::{Permutation, PermutationGroup};
use crate::polyint::{Factorization, IntPoly};
use crate::subgrp::{left_cosets, CosetList};

pub const DEFAULT_PRECISION: u32 = 128;
pub const PRECISION_CAP: u32 = 8192;

/// Starting precision and escalation cap, in bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    pub start: u32,
    pub cap: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Self {
            start: DEFAULT_PRECISION,
            cap: PRECISION_CAP,
        }
    }
}

/// A recovered resolvent with its numeric provenance.
#[derive(Clone, Debug)]
pub struct ResolventReport {
    resolvent: IntPoly,
    invariant: InvariantSpec,
    separable: bool,
    cosets: CosetList,
    orbit_values: Vec<CBall>,
    coset_map: Vec<usize>,
    roots: RootVector,
}

impl ResolventReport {
    pub fn resolvent(&self) -> &IntPoly {
        &self.resolvent
    }

    pub fn invariant(&self) -> &InvariantSpec {
        &self.invariant
    }

    pub fn ambient(&self) -> &PermutationGroup {
        self.invariant.ambient()
    }

    pub fn separable(&self) -> bool {
        self.separable
    }

    /// Resolvent roots `β`, numbered by (real, imaginary) order.
    pub fn orbit_values(&self) -> &[CBall] {
        &self.orbit_values
    }

    /// For each root index, the coset whose representative `σ` gives
    /// `β = (σ.P)(α)`.
    pub fn coset_map(&self) -> &[usize] {
        &self.coset_map
    }

    pub fn cosets(&self) -> &CosetList {
        &self.cosets
    }

    pub fn coset_representative(&self, root_index: usize) -> &Permutation {
        &self.cosets.representatives()[self.coset_map[root_index]]
    }

    pub fn orbit_size(&self) -> usize {
        self.orbit_values.len()
    }

    pub fn precision_used(&self) -> u32 {
        self.roots.precision_bits()
    }

    pub fn roots(&self) -> &RootVector {
        &self.roots
    }

    pub fn to_json(&self) -> ReportJson {
        ReportJson {
            resolvent: self.resolvent.to_string(),
            separable: self.separable,
            orbit_size: self.orbit_size(),
            precision_used: self.precision_used(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub resolvent: String,
    pub separable: bool,
    pub orbit_size: usize,
    pub precision_used: u32,
}

fn require_monic(f: &IntPoly) -> Result<()> {
    if f.is_monic() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "resolvents need a monic input; use the monic transform of {f}"
        )))
    }
}

/// The absolute resolvent of `f` by an `Sₙ`-relative invariant.
pub fn absolute_resolvent(f: &IntPoly, inv: &InvariantSpec) -> Result<ResolventReport> {
    absolute_resolvent_with(f, inv, Precision::default())
}

pub fn absolute_resolvent_with(
    f: &IntPoly,
    inv: &InvariantSpec,
    prec: Precision,
) -> Result<ResolventReport> {
    require_monic(f)?;
    let n = f.deg() as usize;
    if inv.ambient().order() != (1..=n).product::<usize>() || inv.degree() != n {
        return Err(Error::Unsupported(
            "absolute resolvents need the symmetric group as ambient".into(),
        ));
    }
    let roots = complex_roots(f, prec.start)?;
    resolvent_from_roots(inv, &roots, prec.cap)
}

/// The `L`-relative resolvent for a root numbering asserted to put the
/// Galois group inside `L`; non-integral coefficients reject the assertion.
pub fn relative_resolvent(
    f: &IntPoly,
    inv: &InvariantSpec,
    ordering: &RootVector,
) -> Result<ResolventReport> {
    relative_resolvent_with(f, inv, ordering, PRECISION_CAP)
}

pub fn relative_resolvent_with(
    f: &IntPoly,
    inv: &InvariantSpec,
    ordering: &RootVector,
    cap: u32,
) -> Result<ResolventReport> {
    require_monic(f)?;
    if ordering.poly() != f {
        return Err(Error::Unsupported(
            "ordering belongs to another polynomial".into(),
        ));
    }
    if inv.degree() != ordering.len() {
        return Err(Error::DegreeMismatch(inv.degree(), ordering.len()));
    }
    resolvent_from_roots(inv, ordering, cap)
}

/// Evaluates the orbit at the given numbering and recovers the integer
/// coefficients, doubling precision until every coefficient is certified.
pub fn resolvent_from_roots(
    inv: &InvariantSpec,
    roots: &RootVector,
    cap: u32,
) -> Result<ResolventReport> {
    require_monic(roots.poly())?;
    let cosets = left_cosets(inv.ambient(), inv.stabilizer())?;
    let mut bits = roots.precision_bits();
    loop {
        let current = roots.refine_to(bits)?;
        let values: Vec<CBall> = cosets
            .representatives()
            .iter()
            .map(|s| eval_invariant(inv, &current, s))
            .collect();
        if let Some(coeffs) = recover(&values)? {
            let resolvent = IntPoly::new(coeffs);
            let separable = resolvent.is_squarefree();
            let mut order: Vec<usize> = (0..values.len()).collect();
            order.sort_by_cached_key(|&i| values[i].order_key());
            return Ok(ResolventReport {
                resolvent,
                invariant: inv.clone(),
                separable,
                orbit_values: order.iter().map(|&i| values[i].clone()).collect(),
                coset_map: order,
                cosets,
                roots: current,
            });
        }
        if bits >= cap {
            return Err(Error::PrecisionCapExceeded { cap });
        }
        bits = (bits * 2).min(cap);
    }
}

/// `(σ.P)(α) = P(α_{σ(1)}, …, α_{σ(n)})`.
fn eval_invariant(inv: &InvariantSpec, roots: &RootVector, sigma: &Permutation) -> CBall {
    let prec = roots.precision_bits();
    let xs: Vec<&CBall> = (1..=roots.len())
        .map(|i| &roots.roots()[sigma.image(i) - 1])
        .collect();
    let mut powers: Vec<Vec<CBall>> = xs
        .iter()
        .map(|x| vec![CBall::from_int(&BigInt::from(1), prec), (*x).clone()])
        .collect();
    let mut acc = CBall::zero(prec);
    for (exps, c) in inv.poly().terms() {
        let mut term = CBall::from_int(c, prec);
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let e = e as usize;
            while powers[i].len() <= e {
                let next = powers[i].last().unwrap().mul(xs[i]);
                powers[i].push(next);
            }
            term = term.mul(&powers[i][e]);
        }
        acc = acc.add(&term);
    }
    acc
}

/// Coefficients of `∏(x − βⱼ)` if all are certified integers, `None` if the
/// precision was insufficient.
fn recover(values: &[CBall]) -> Result<Option<Vec<BigInt>>> {
    let prec = values[0].prec();
    let mut poly = vec![CBall::from_int(&BigInt::from(1), prec)];
    for b in values {
        let mut next = vec![CBall::zero(prec); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(b));
        }
        poly = next;
    }
    let mut out = Vec::with_capacity(poly.len());
    for c in &poly {
        match c.integer_inside()? {
            Some(k) => out.push(k),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// A root numbering from substitution polynomials `αᵢ = sᵢ(α₁)` for
/// `i = 2..n`; each root is tried as `α₁` in turn.
pub fn ordering_from_substitutions(
    f: &IntPoly,
    subs: &[IntPoly],
    prec: Precision,
) -> Result<RootVector> {
    let n = f.deg() as usize;
    if subs.len() + 1 != n {
        return Err(Error::DegreeMismatch(n - 1, subs.len()));
    }
    let mut bits = prec.start;
    loop {
        let roots = complex_roots(f, bits)?;
        let mut ambiguous = false;
        for first in 0..n {
            let a1 = &roots.roots()[first];
            let mut perm = vec![first];
            let mut ok = true;
            for s in subs {
                let v = eval_int_poly(s.coeffs(), a1);
                let hits: Vec<usize> = (0..n).filter(|&j| v.overlaps(&roots.roots()[j])).collect();
                match hits.as_slice() {
                    [j] if !perm.contains(j) => perm.push(*j),
                    [] => {
                        ok = false;
                        break;
                    }
                    _ => {
                        ambiguous = true;
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return roots.permuted(&perm);
            }
        }
        if !ambiguous || bits >= prec.cap {
            return Err(Error::Unsupported(
                "the substitutions do not permute the roots".into(),
            ));
        }
        bits = (bits * 2).min(prec.cap);
    }
}

/// How `G` acts on the cosets, as far as the caller knows it.
#[derive(Clone, Copy, Debug)]
pub enum OrbitEvidence<'a> {
    /// The Galois group itself, in the numbering used by the report.
    Group(&'a PermutationGroup),
    /// Only the orbit sizes `P_L(G,H)`.
    Partition(&'a Partition),
}

/// Origin of a repeated factor `F^m` of a resolvent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MultiplicityCase {
    /// One orbit whose values coincide `m` at a time (case i).
    Collapse,
    /// Several orbits of equal size sharing the same values (case ii).
    Shared,
    /// Both at once.
    Mixed,
    /// The partition admits assignments of different kinds.
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTag {
    pub factor: IntPoly,
    pub multiplicity: usize,
    /// `(orbit size, values collapsing per root)` for each orbit producing
    /// the factor.
    pub orbits: Vec<(usize, usize)>,
    pub case: MultiplicityCase,
}

fn classify(orbits: &[(usize, usize)]) -> MultiplicityCase {
    let collapse = orbits.iter().any(|&(_, m)| m >= 2);
    match (orbits.len() >= 2, collapse) {
        (false, _) => MultiplicityCase::Collapse,
        (true, false) => MultiplicityCase::Shared,
        (true, true) => MultiplicityCase::Mixed,
    }
}

/// Groups orbit values into clusters and attaches each to the factor
/// vanishing on it. Returns the factor index of every value.
fn cluster_values(report: &ResolventReport, factors: &Factorization) -> Result<Vec<usize>> {
    let vals = report.orbit_values();
    let e = vals.len();
    let mut parent: Vec<usize> = (0..e).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..e {
        for j in i + 1..e {
            if vals[i].overlaps(&vals[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut clusters: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..e {
        let r = find(&mut parent, i);
        clusters.entry(r).or_default().push(i);
    }
    let distinct: usize = factors.factors.iter().map(|(f, _)| f.deg() as usize).sum();
    if clusters.len() != distinct {
        return Err(Error::AmbiguousCluster);
    }
    let mut owner = vec![usize::MAX; e];
    for members in clusters.values() {
        let z = &vals[members[0]];
        let hits: Vec<usize> = factors
            .factors
            .iter()
            .enumerate()
            .filter(|(_, (f, _))| eval_int_poly(f.coeffs(), z).contains_zero())
            .map(|(k, _)| k)
            .collect();
        let [k] = hits.as_slice() else {
            return Err(Error::AmbiguousCluster);
        };
        if members.len() != factors.factors[*k].1 {
            return Err(Error::AmbiguousCluster);
        }
        for &m in members {
            owner[m] = *k;
        }
    }
    Ok(owner)
}

/// Classifies every repeated factor of the resolvent as arising from a
/// single collapsing orbit (case i) or from equal-size orbits sharing
/// values (case ii). A separable resolvent yields no tags.
pub fn multiplicity_structure(
    report: &ResolventReport,
    factors: &Factorization,
    evidence: OrbitEvidence<'_>,
) -> Result<Vec<MultiplicityTag>> {
    if factors.expand().primitive_part() != report.resolvent().primitive_part() {
        return Err(Error::Unsupported(
            "factorization of another polynomial".into(),
        ));
    }
    if factors.is_squarefree() {
        return Ok(Vec::new());
    }
    let owner = cluster_values(report, factors)?;
    let per_factor: Vec<Vec<Vec<(usize, usize)>>> = match evidence {
        OrbitEvidence::Group(g) => vec![orbits_from_group(report, factors, &owner, g)?],
        OrbitEvidence::Partition(p) => orbits_from_partition(factors, p)?,
    };
    let mut tags = Vec::new();
    for (k, (f, m)) in factors.factors.iter().enumerate() {
        if *m < 2 {
            continue;
        }
        let cases: Vec<MultiplicityCase> = per_factor.iter().map(|a| classify(&a[k])).collect();
        let case = if cases.iter().all(|c| *c == cases[0]) {
            cases[0]
        } else {
            MultiplicityCase::Undetermined
        };
        tags.push(MultiplicityTag {
            factor: f.clone(),
            multiplicity: *m,
            orbits: per_factor[0][k].clone(),
            case,
        });
    }
    Ok(tags)
}

/// Orbits of `G` on the cosets, read against the clustered values.
fn orbits_from_group(
    report: &ResolventReport,
    factors: &Factorization,
    owner: &[usize],
    g: &PermutationGroup,
) -> Result<Vec<Vec<(usize, usize)>>> {
    let l = report.ambient();
    let action = coset_action(g, l, report.invariant().stabilizer())?;
    let mut root_of_coset = vec![0usize; owner.len()];
    for (root, &c) in report.coset_map().iter().enumerate() {
        root_of_coset[c] = root;
    }
    let mut out = vec![Vec::new(); factors.factors.len()];
    for orbit in action.orbits() {
        let roots: Vec<usize> = orbit
            .iter()
            .map(|&pos| root_of_coset[action.position_cosets()[pos - 1]])
            .collect();
        let k = owner[roots[0]];
        if roots.iter().any(|&r| owner[r] != k) {
            return Err(Error::Unsupported(
                "the group does not match the numbering of the roots".into(),
            ));
        }
        let d = factors.factors[k].0.deg() as usize;
        out[k].push((roots.len(), roots.len() / d));
    }
    Ok(out)
}

/// Per factor, the `(orbit size, multiplicity)` pairs it receives.
type Assignment = Vec<Vec<(usize, usize)>>;

/// Every way to hand the parts of `P(G,H)` to the factors: a part of size
/// `s` carries one irreducible factor of degree `d | s`, repeated `s/d`
/// times, and the repeats add up to each factor's multiplicity.
fn orbits_from_partition(factors: &Factorization, p: &Partition) -> Result<Vec<Assignment>> {
    let fs: Vec<(usize, usize)> = factors
        .factors
        .iter()
        .map(|(f, m)| (f.deg() as usize, *m))
        .collect();
    let mut solutions = Vec::new();
    let mut remaining: Vec<usize> = fs.iter().map(|&(_, m)| m).collect();
    let mut current = vec![Vec::new(); fs.len()];
    fn rec(
        parts: &[usize],
        fs: &[(usize, usize)],
        remaining: &mut [usize],
        current: &mut Vec<Vec<(usize, usize)>>,
        out: &mut Vec<Assignment>,
    ) {
        let Some((&s, rest)) = parts.split_first() else {
            if remaining.iter().all(|&r| r == 0) {
                let mut sol = current.clone();
                sol.iter_mut().for_each(|v| v.sort_unstable());
                if !out.contains(&sol) {
                    out.push(sol);
                }
            }
            return;
        };
        for (k, &(d, _)) in fs.iter().enumerate() {
            if s % d != 0 || remaining[k] < s / d {
                continue;
            }
            remaining[k] -= s / d;
            current[k].push((s, s / d));
            rec(rest, fs, remaining, current, out);
            current[k].pop();
            remaining[k] += s / d;
        }
    }
    rec(p.parts(), &fs, &mut remaining, &mut current, &mut solutions);
    if solutions.is_empty() {
        return Err(Error::Unsupported(format!(
            "partition {p} is inconsistent with the factorization {factors}"
        )));
    }
    Ok(solutions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::builtin;
    use crate::polyint::factor_rational;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    const QUARTIC: &str = "x^4 - x^3 - 3*x^2 + x + 1";

    #[test]
    fn quartic_resolvents() {
        let f = p(QUARTIC);
        let v = absolute_resolvent(&f, &builtin("vandermonde", 4).unwrap()).unwrap();
        assert_eq!(v.resolvent(), &p("x^2 - 725"));
        assert!(v.separable());
        let r1 = absolute_resolvent(&f, &builtin("pair_sum", 4).unwrap()).unwrap();
        assert_eq!(
            r1.resolvent(),
            &p("x^6 - 3*x^5 - 3*x^4 + 11*x^3 - 2*x^2 - 4*x + 1")
        );
        let r2 = absolute_resolvent(&f, &builtin("pair_prod", 4).unwrap()).unwrap();
        assert_eq!(
            r2.resolvent(),
            &p("x^6 + 3*x^5 - 2*x^4 - 8*x^3 - 2*x^2 + 3*x + 1")
        );
        assert!(!r2.separable());
        assert_eq!(r2.orbit_size(), 6);
    }

    #[test]
    fn tchirnhaus_returns_f() {
        for f in ["x^2 - 1", QUARTIC, "x^5 - x - 1"] {
            let f = p(f);
            let n = f.deg() as usize;
            let r = absolute_resolvent(&f, &builtin("tchirnhaus", n).unwrap()).unwrap();
            assert_eq!(r.resolvent(), &f);
        }
    }

    #[test]
    fn quintic_relative_d5() {
        let f = p("x^5 - x^4 - 4*x^3 + 3*x^2 + 3*x - 1");
        let subs = [
            "x^3 - 3*x",
            "2 - x^2",
            "x^4 - x^3 - 3*x^2 + 2*x + 1",
            "4*x^2 - x^4 - 2",
        ]
        .map(p);
        let ord = ordering_from_substitutions(&f, &subs, Precision::default()).unwrap();
        let inv = builtin("d5_m5", 5).unwrap();
        let r = relative_resolvent(&f, &inv, &ord).unwrap();
        assert_eq!(r.resolvent(), &p("(x + 2)^2"));
        let fac = factor_rational(r.resolvent()).unwrap();
        let c5 = Partition::new(vec![1, 1]);
        let tags = multiplicity_structure(&r, &fac, OrbitEvidence::Partition(&c5)).unwrap();
        assert_eq!(tags.len(), 1);
        assert_eq!(tags[0].case, MultiplicityCase::Shared);
    }

    #[test]
    fn pair_prod_collapse() {
        let f = p(QUARTIC);
        let r2 = absolute_resolvent(&f, &builtin("pair_prod", 4).unwrap()).unwrap();
        let fac = factor_rational(r2.resolvent()).unwrap();
        let d4 = Partition::new(vec![2, 4]);
        let tags = multiplicity_structure(&r2, &fac, OrbitEvidence::Partition(&d4)).unwrap();
        assert_eq!(tags.len(), 1);
        assert_eq!(tags[0].factor, p("x + 1"));
        assert_eq!(tags[0].orbits, vec![(2, 2)]);
        assert_eq!(tags[0].case, MultiplicityCase::Collapse);
    }

    #[test]
    fn wrong_ordering_is_rejected() {
        // x^3 - 2 has group S3; the trivial invariant relative to C3 cannot
        // give integers for the default numbering.
        let f = p("x^3 - 2");
        let c3 = PermutationGroup::from_cycle_strings(3, &["(1,2,3)"]).unwrap();
        let inv = builtin("linear_galois", 3)
            .unwrap()
            .with_ambient(&c3)
            .unwrap();
        let ord = complex_roots(&f, 128).unwrap();
        assert!(matches!(
            relative_resolvent(&f, &inv, &ord),
            Err(Error::CoefficientsNotIntegral)
        ));
    }

    #[test]
    fn non_monic_rejected() {
        let inv = builtin("vandermonde", 2).unwrap();
        assert!(absolute_resolvent(&p("2*x^2 - 1"), &inv).is_err());
    }
}
