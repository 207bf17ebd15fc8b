//! Galois group identification by matching resolvent factorization
//! patterns against the partition matrix of `Sₙ`, plus the group-level
//! predictions used to read resolvents.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, GroupLabel, LabelJson};
use crate::error::{Error, Result};
use crate::invariants::{
    builtin, orbit_sum_invariant, rescue_invariant, substituted_invariant, InvariantSpec,
    BUILTIN_NAMES,
};
use crate::matrices::{
    coset_action, group_sequence, partition_matrix_for, partition_of, ColumnCosets, Partition,
};
use crate::perm::{Permutation, PermutationGroup};
use crate::polyint::{factor_rational, Factorization, IntPoly};
use crate::resolvent::{absolute_resolvent_with, Precision, ResolventReport};
use crate::subgrp::{conjugating_element, normal_core, subgroup_classes};

pub const DEFAULT_MAX_RESCUES: usize = 5;

/// Highest degree `identify` handles.
pub const MAX_DEGREE: usize = 7;

/// Columns above this index are used only when no cheaper column splits the
/// remaining candidates.
pub const COLUMN_INDEX_SOFT_CAP: usize = 60;

/// `Gr`'s full image: the predicted Galois group of a separable resolvent.
pub fn group_of_resolvent(
    g: &PermutationGroup,
    l: &PermutationGroup,
    h: &PermutationGroup,
) -> Result<GroupLabel> {
    let action = coset_action(g, l, h)?;
    Ok(GroupLabel::of(&action.image_group()?))
}

/// `(P_L(G,H), Gr_L(G,H))`.
pub fn predict_factors(
    g: &PermutationGroup,
    l: &PermutationGroup,
    h: &PermutationGroup,
) -> Result<(Partition, Vec<GroupLabel>)> {
    let action = coset_action(g, l, h)?;
    Ok((partition_of(&action), group_sequence(&action)?))
}

/// `|G / (G ∩ J)|` with `J` the normal core of `H` in `L`.
pub fn resolvent_kernel_quotient(
    g: &PermutationGroup,
    l: &PermutationGroup,
    h: &PermutationGroup,
) -> Result<usize> {
    if !g.is_subgroup_of(l) {
        return Err(Error::NotASubgroup(format!(
            "{g:?} is not contained in {l:?}"
        )));
    }
    let j = normal_core(l, h)?;
    Ok(g.order() / g.intersection(&j)?.order())
}

/// Knobs for [`identify_with`].
#[derive(Clone, Copy, Debug)]
pub struct IdentifyOptions {
    pub max_rescues: usize,
    pub precision: Precision,
}

impl Default for IdentifyOptions {
    fn default() -> Self {
        Self {
            max_rescues: DEFAULT_MAX_RESCUES,
            precision: Precision::default(),
        }
    }
}

/// Which candidates a resolvent eliminated, and why.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    /// Separable: the factor degrees must equal `P(G,H)`.
    PartitionMatch,
    /// A simple rational root: `G` lies in a conjugate of `H`.
    SimpleRationalRoot,
    /// No rational root at all: `G` lies in no conjugate of `H`.
    NoRationalRoot,
    /// Nothing usable; only rational roots of higher multiplicity.
    None,
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::PartitionMatch => "partition",
            Filter::SimpleRationalRoot => "simple rational root",
            Filter::NoRationalRoot => "no rational root",
            Filter::None => "none",
        })
    }
}

/// One resolvent computed during identification.
#[derive(Clone, Debug)]
pub struct EvidenceStep {
    pub column: usize,
    pub column_order: usize,
    pub index: usize,
    pub invariant: String,
    pub resolvent: IntPoly,
    pub factorization: Factorization,
    pub separable: bool,
    pub filter: Filter,
    pub remaining: usize,
}

impl EvidenceStep {
    /// Observed factor degrees, meaningful when separable.
    pub fn observed(&self) -> Partition {
        Partition::new(self.factorization.degree_multiset())
    }
}

#[derive(Clone, Debug)]
pub struct GaloisReport {
    pub degree: usize,
    pub label: GroupLabel,
    pub representative: PermutationGroup,
    pub evidence: Vec<EvidenceStep>,
    pub solvable: bool,
    pub initial_candidates: usize,
}

impl GaloisReport {
    pub fn to_json(&self) -> GaloisJson {
        GaloisJson {
            group_name: self.label.name().to_string(),
            order: self.label.order(),
            degree: self.degree,
            transitive: self.label.is_transitive(),
            solvable: self.solvable,
            group: self.label.to_json(),
            evidence: self
                .evidence
                .iter()
                .map(|e| EvidenceJson {
                    column: e.column,
                    column_order: e.column_order,
                    index: e.index,
                    invariant: e.invariant.clone(),
                    resolvent: e.resolvent.to_string(),
                    factorization: e.factorization.to_string(),
                    separable: e.separable,
                    filter: e.filter,
                    remaining: e.remaining,
                })
                .collect(),
        }
    }

    /// Aligned text table of the evidence log.
    pub fn render_evidence(&self) -> String {
        let mut rows = vec![[
            "column".to_string(),
            "index".to_string(),
            "invariant".to_string(),
            "factor degrees".to_string(),
            "separable".to_string(),
            "filter".to_string(),
            "left".to_string(),
        ]];
        for e in &self.evidence {
            rows.push([
                format!("H{} (order {})", e.column + 1, e.column_order),
                e.index.to_string(),
                e.invariant.clone(),
                e.observed().to_string(),
                if e.separable { "yes" } else { "no" }.to_string(),
                e.filter.to_string(),
                e.remaining.to_string(),
            ]);
        }
        let widths: Vec<usize> = (0..7)
            .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        rows.iter()
            .map(|r| {
                r.iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceJson {
    pub column: usize,
    pub column_order: usize,
    pub index: usize,
    pub invariant: String,
    pub resolvent: String,
    pub factorization: String,
    pub separable: bool,
    pub filter: Filter,
    pub remaining: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisJson {
    pub group_name: String,
    pub order: usize,
    pub degree: usize,
    pub transitive: bool,
    pub solvable: bool,
    pub group: LabelJson,
    pub evidence: Vec<EvidenceJson>,
}

/// Candidate groups, columns and their partitions for one degree.
pub struct Tables {
    pub degree: usize,
    pub ambient: PermutationGroup,
    pub candidates: Vec<PermutationGroup>,
    pub columns: Vec<PermutationGroup>,
    /// `cells[i][j] = P(candidates[i], columns[j])`.
    pub cells: Vec<Vec<Partition>>,
    pub point_orbits: Vec<Partition>,
    /// Whether the candidates are all subgroup classes of `Sₙ`
    /// (rather than only the transitive ones).
    pub complete: bool,
}

impl Tables {
    fn build(n: usize) -> Result<Self> {
        let ambient = PermutationGroup::symmetric(n)?;
        let (candidates, columns, cells, complete) = if n < MAX_DEGREE {
            let classes = subgroup_classes(&ambient)?;
            let reps = classes.representatives().to_vec();
            let m = partition_matrix_for(classes)?;
            (reps.clone(), reps, m.cells, true)
        } else {
            let candidates: Vec<PermutationGroup> = catalog::transitive_groups(n)
                .into_iter()
                .map(|e| e.group.clone())
                .collect();
            let columns = vec![
                PermutationGroup::alternating(n)?,
                young(n, 2)?,
                young(n, 3)?,
            ];
            let cc = ColumnCosets::for_subgroups(&ambient, &columns)?;
            let cells = candidates
                .iter()
                .map(|g| (0..columns.len()).map(|j| cc.partition(g, j)).collect())
                .collect();
            (candidates, columns, cells, false)
        };
        let point_orbits = candidates
            .iter()
            .map(|g| Partition::new(g.orbits().iter().map(Vec::len).collect()))
            .collect();
        Ok(Self {
            degree: n,
            ambient,
            candidates,
            columns,
            cells,
            point_orbits,
            complete,
        })
    }

    fn index(&self, j: usize) -> usize {
        self.ambient.order() / self.columns[j].order()
    }
}

/// `S_k × S_{n−k}` on `{1..k}` and `{k+1..n}`.
fn young(n: usize, k: usize) -> Result<PermutationGroup> {
    let mut gens = Vec::new();
    for block in [(1..=k).collect::<Vec<_>>(), (k + 1..=n).collect()] {
        if block.len() >= 2 {
            gens.push(Permutation::from_cycles(n, std::slice::from_ref(&block))?);
            gens.push(Permutation::from_cycles(n, &[block[..2].to_vec()])?);
        }
    }
    PermutationGroup::from_generators(n, &gens, crate::perm::DEFAULT_ORDER_CAP)
}

/// Shared per-degree tables, built on first use.
pub fn tables(n: usize) -> Result<Arc<Tables>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Tables>>>> = OnceLock::new();
    if !(1..=MAX_DEGREE).contains(&n) {
        return Err(Error::Unsupported(format!(
            "degree {n} (supported: 1..={MAX_DEGREE})"
        )));
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&n) {
        return Ok(t.clone());
    }
    let t = Arc::new(Tables::build(n)?);
    cache.lock().expect("cache lock").insert(n, t.clone());
    Ok(t)
}

/// The Galois group of a squarefree `f` with default options.
pub fn identify(f: &IntPoly, max_rescues: usize) -> Result<GaloisReport> {
    identify_with(
        f,
        IdentifyOptions {
            max_rescues,
            ..Default::default()
        },
    )
}

fn is_conjugate(l: &PermutationGroup, a: &PermutationGroup, b: &PermutationGroup) -> bool {
    a.order() == b.order() && conjugating_element(l, a, b).is_some()
}

/// First invariant for column `h`: a builtin whose stabilizer is conjugate
/// to `h`, else an orbit sum of a monomial.
fn column_invariant(t: &Tables, h: &PermutationGroup) -> Result<InvariantSpec> {
    for name in BUILTIN_NAMES {
        if claimed_order(name, t.degree) != Some(h.order()) {
            continue;
        }
        if let Some(inv) = cached_builtin(name, t.degree) {
            if inv.ambient() == &t.ambient && is_conjugate(&t.ambient, inv.stabilizer(), h) {
                return Ok(inv);
            }
        }
    }
    orbit_sum_invariant(&t.ambient, h)
}

/// Stabilizer order of each builtin inside `Sₙ`, so that large builtins are
/// only built for columns they can serve.
fn claimed_order(name: &str, n: usize) -> Option<usize> {
    let fact = |k: usize| (1..=k).product::<usize>();
    match (name, n) {
        ("vandermonde", n) if n >= 2 => Some(fact(n) / 2),
        ("pair_sum" | "pair_prod", n) if n >= 2 => Some(2 * fact(n - 2)),
        ("d4", 4) => Some(8),
        ("cayley_m5", 5) => Some(20),
        ("linear_galois", _) => Some(1),
        ("tchirnhaus", n) => Some(fact(n - 1)),
        _ => None,
    }
}

fn cached_builtin(name: &str, n: usize) -> Option<InvariantSpec> {
    type Cache = Mutex<HashMap<(&'static str, usize), Option<InvariantSpec>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = BUILTIN_NAMES.iter().find(|b| **b == name).copied()?;
    if let Some(v) = cache.lock().expect("cache lock").get(&(key, n)) {
        return v.clone();
    }
    let v = builtin(name, n).ok();
    cache
        .lock()
        .expect("cache lock")
        .insert((key, n), v.clone());
    v
}

/// A replacement for an invariant whose resolvent was not separable.
fn rescued(inv: &InvariantSpec, attempt: u32) -> Result<InvariantSpec> {
    match rescue_invariant(inv, attempt) {
        Err(Error::SizeOverflow { .. }) => {
            for c in attempt as i64.. {
                match substituted_invariant(inv, &[0, c, 1]) {
                    Err(Error::StabilizerMismatch { .. }) => continue,
                    other => return other,
                }
            }
            unreachable!("the loop only exits by returning")
        }
        other => other,
    }
}

fn invariant_name(inv: &InvariantSpec) -> String {
    inv.name().unwrap_or("custom").to_string()
}

/// Chooses the unused column that splits the candidates most evenly:
/// smallest largest class of equal partitions, then smallest index.
fn choose_column(t: &Tables, cands: &[usize], used: &[bool]) -> Option<usize> {
    let score = |j: usize| {
        let mut groups: BTreeMap<&Partition, usize> = BTreeMap::new();
        for &c in cands {
            *groups.entry(&t.cells[c][j]).or_default() += 1;
        }
        groups.values().copied().max().unwrap_or(0)
    };
    let pick = |cap: usize| {
        (0..t.columns.len())
            .filter(|&j| !used[j] && t.index(j) <= cap)
            .map(|j| (score(j), t.index(j), j))
            .filter(|&(s, _, _)| s < cands.len())
            .min()
            .map(|(_, _, j)| j)
    };
    pick(COLUMN_INDEX_SOFT_CAP).or_else(|| pick(usize::MAX))
}

/// The Galois group of a squarefree `f` of degree at most seven.
pub fn identify_with(f: &IntPoly, opts: IdentifyOptions) -> Result<GaloisReport> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => {
            return Err(Error::DegreeTooSmall {
                min: 1,
                got: f.deg(),
            })
        }
    };
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let t = tables(n)?;
    let fac = factor_rational(f)?;
    let degrees = Partition::new(fac.degree_multiset());
    let mut cands: Vec<usize> = (0..t.candidates.len())
        .filter(|&i| {
            if fac.is_irreducible() {
                t.candidates[i].is_transitive()
            } else {
                t.point_orbits[i] == degrees
            }
        })
        .collect();
    if !fac.is_irreducible() && !t.complete {
        return Err(Error::Unsupported(format!("reducible input of degree {n}")));
    }
    let initial = cands.len();
    let g = f.primitive_part().monic_transform();
    let mut used = vec![false; t.columns.len()];
    let mut evidence = Vec::new();
    let mut rescues = 0usize;
    while cands.len() > 1 {
        let j = choose_column(&t, &cands, &used).ok_or(Error::CandidatesExhausted)?;
        used[j] = true;
        let h = &t.columns[j];
        let mut inv = column_invariant(&t, h)?;
        let mut attempt = 0u32;
        loop {
            let report = absolute_resolvent_with(&g, &inv, opts.precision)?;
            let rfac = factor_rational(report.resolvent())?;
            let separable = report.separable();
            let filter = if separable {
                let observed = Partition::new(rfac.degree_multiset());
                cands.retain(|&c| t.cells[c][j] == observed);
                Filter::PartitionMatch
            } else {
                let simple = rfac.factors.iter().any(|(p, m)| p.deg() == 1 && *m == 1);
                let any = rfac.factors.iter().any(|(p, _)| p.deg() == 1);
                if simple {
                    cands.retain(|&c| t.cells[c][j].has_part(1));
                    Filter::SimpleRationalRoot
                } else if !any {
                    cands.retain(|&c| !t.cells[c][j].has_part(1));
                    Filter::NoRationalRoot
                } else {
                    Filter::None
                }
            };
            evidence.push(EvidenceStep {
                column: j,
                column_order: h.order(),
                index: t.index(j),
                invariant: invariant_name(&inv),
                resolvent: report.resolvent().clone(),
                factorization: rfac,
                separable,
                filter,
                remaining: cands.len(),
            });
            if cands.is_empty() {
                return Err(Error::CandidatesExhausted);
            }
            if separable || cands.len() <= 1 {
                break;
            }
            if rescues >= opts.max_rescues {
                return Err(Error::RescueBudgetExhausted {
                    budget: opts.max_rescues,
                });
            }
            rescues += 1;
            attempt += 1;
            inv = rescued(&inv, attempt)?;
        }
    }
    let rep = match cands.as_slice() {
        [c] => t.candidates[*c].clone(),
        _ => return Err(Error::CandidatesExhausted),
    };
    Ok(GaloisReport {
        degree: n,
        label: GroupLabel::of(&rep),
        solvable: rep.is_solvable()?,
        representative: rep,
        evidence,
        initial_candidates: initial,
    })
}

/// Outcome of the quintic solvability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuinticVerdict {
    pub solvable: bool,
    /// A simple integer root of the Cayley resolvent.
    pub witness: Option<BigInt>,
    pub resolvent: IntPoly,
    pub invariant: String,
}

/// Decides solvability by radicals of an irreducible quintic: the Cayley
/// resolvent (stabilizer `M₅`) has a simple rational root iff `G ≤ M₅`.
pub fn solvable_quintic(f: &IntPoly) -> Result<QuinticVerdict> {
    solvable_quintic_with(f, IdentifyOptions::default())
}

pub fn solvable_quintic_with(f: &IntPoly, opts: IdentifyOptions) -> Result<QuinticVerdict> {
    if f.deg() != 5 {
        return Err(Error::NotDegree5(f.deg()));
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if !factor_rational(f)?.is_irreducible() {
        return Err(Error::ReducibleInput);
    }
    let g = f.primitive_part().monic_transform();
    let mut inv = builtin("cayley_m5", 5)?;
    let mut attempt = 0u32;
    loop {
        let report = absolute_resolvent_with(&g, &inv, opts.precision)?;
        let rfac = factor_rational(report.resolvent())?;
        let witness = rfac
            .factors
            .iter()
            .find(|(p, m)| p.deg() == 1 && *m == 1)
            .map(|(p, _)| -p.coeff(0) / p.coeff(1));
        if witness.is_some() || report.separable() {
            return Ok(QuinticVerdict {
                solvable: witness.is_some(),
                witness,
                resolvent: report.resolvent().clone(),
                invariant: invariant_name(&inv),
            });
        }
        if attempt as usize >= opts.max_rescues {
            return Err(Error::RescueBudgetExhausted {
                budget: opts.max_rescues,
            });
        }
        attempt += 1;
        inv = rescued(&inv, attempt)?;
    }
}

/// The irreducible factor of the resolvent vanishing at root `which_root`
/// (numbered as in [`ResolventReport::orbit_values`]); the root must be simple.
pub fn subfield_minpoly_in(report: &ResolventReport, which_root: usize) -> Result<IntPoly> {
    let beta = report
        .orbit_values()
        .get(which_root)
        .ok_or_else(|| Error::Unsupported(format!("no resolvent root {which_root}")))?;
    let fac = factor_rational(report.resolvent())?;
    let hits: Vec<&(IntPoly, usize)> = fac
        .factors
        .iter()
        .filter(|(p, _)| crate::resolvent::eval_int_poly(p.coeffs(), beta).contains_zero())
        .collect();
    match hits.as_slice() {
        [(p, 1)] => Ok(p.clone()),
        [(_, _)] => Err(Error::MultipleRoot(which_root)),
        _ => Err(Error::AmbiguousCluster),
    }
}

/// Minimal polynomial of the primitive element `β` of the fixed field of
/// `G ∩ H^σ`, from the absolute resolvent of a monic `f`.
pub fn subfield_minpoly(f: &IntPoly, inv: &InvariantSpec, which_root: usize) -> Result<IntPoly> {
    let report = absolute_resolvent_with(f, inv, Precision::default())?;
    subfield_minpoly_in(&report, which_root)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn grp(n: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::from_cycle_strings(n, gens).unwrap()
    }

    #[test]
    fn resolvent_groups() {
        let s4 = PermutationGroup::symmetric(4).unwrap();
        let d4 = grp(4, &["(1,2,3,4)", "(1,3)"]);
        let a4 = PermutationGroup::alternating(4).unwrap();
        assert_eq!(group_of_resolvent(&d4, &s4, &a4).unwrap().name(), "S2");
        let c4 = grp(4, &["(1,2,3,4)"]);
        let lab = group_of_resolvent(&c4, &s4, &d4).unwrap();
        assert_eq!((lab.degree(), lab.order()), (3, 2));
        let triv = PermutationGroup::trivial(4);
        let lab = group_of_resolvent(&triv, &s4, &d4).unwrap();
        assert_eq!((lab.degree(), lab.order()), (3, 1));
    }

    #[test]
    fn kernel_quotients() {
        let s4 = PermutationGroup::symmetric(4).unwrap();
        let d4 = grp(4, &["(1,2,3,4)", "(1,3)"]);
        let a4 = PermutationGroup::alternating(4).unwrap();
        let v4 = grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert_eq!(resolvent_kernel_quotient(&a4, &s4, &d4).unwrap(), 3);
        assert_eq!(resolvent_kernel_quotient(&v4, &s4, &d4).unwrap(), 1);
        assert_eq!(
            resolvent_kernel_quotient(&PermutationGroup::trivial(4), &s4, &d4).unwrap(),
            1
        );
        assert!(resolvent_kernel_quotient(&s4, &a4, &v4).is_err());
    }

    #[test]
    fn factor_predictions() {
        let s4 = PermutationGroup::symmetric(4).unwrap();
        let d4 = grp(4, &["(1,2,3,4)", "(1,3)"]);
        let s2s2 = grp(4, &["(1,2)", "(3,4)"]);
        let (part, labels) = predict_factors(&d4, &s4, &s2s2).unwrap();
        assert_eq!(part.to_string(), "2,4");
        assert_eq!(
            labels.iter().map(|l| l.name()).collect::<Vec<_>>(),
            ["S2", "D4"]
        );
    }

    #[test]
    fn fixture_groups() {
        let cases = [
            ("x^4 - x^3 - 3*x^2 + x + 1", "D4"),
            ("x^5 - x^4 - 4*x^3 + 3*x^2 + 3*x - 1", "C5"),
            ("x^2 - 1", "I2"),
            ("x^2 + 1", "S2"),
            ("x^3 - 2", "S3"),
            ("x^3 - 3*x + 1", "A3"),
            ("x^4 + 1", "V4"),
            ("x^4 - 2", "D4"),
            ("x^5 - x - 1", "S5"),
            ("x^5 - 2", "M5"),
        ];
        for (f, want) in cases {
            let r = identify(&p(f), DEFAULT_MAX_RESCUES).unwrap();
            assert_eq!(r.label.name(), want, "{f}\n{}", r.render_evidence());
        }
    }

    #[test]
    fn quintic_solvability() {
        let v = solvable_quintic(&p("x^5 - x^4 - 4*x^3 + 3*x^2 + 3*x - 1")).unwrap();
        assert!(v.solvable);
        assert!(v.witness.is_some());
        assert!(!solvable_quintic(&p("x^5 - x - 1")).unwrap().solvable);
        assert!(solvable_quintic(&p("x^5 - 2")).unwrap().solvable);
        assert!(matches!(
            solvable_quintic(&p("x^4 - 2")),
            Err(Error::NotDegree5(4))
        ));
        assert!(matches!(
            solvable_quintic(&p("(x^2 + 1)*(x^3 - 2)")),
            Err(Error::ReducibleInput)
        ));
    }

    #[test]
    fn subfields() {
        let f = p("x^4 - x^3 - 3*x^2 + x + 1");
        let v = builtin("vandermonde", 4).unwrap();
        assert_eq!(subfield_minpoly(&f, &v, 0).unwrap(), p("x^2 - 725"));
        let ps = builtin("pair_sum", 4).unwrap();
        let report = absolute_resolvent_with(&f, &ps, Precision::default()).unwrap();
        let quad = p("x^2 - x - 1");
        let found: Vec<IntPoly> = (0..6)
            .map(|k| subfield_minpoly_in(&report, k).unwrap())
            .collect();
        assert_eq!(found.iter().filter(|q| **q == quad).count(), 2);
        let pp = builtin("pair_prod", 4).unwrap();
        let report = absolute_resolvent_with(&f, &pp, Precision::default()).unwrap();
        let errs = (0..6)
            .filter(|&k| matches!(subfield_minpoly_in(&report, k), Err(Error::MultipleRoot(_))))
            .count();
        assert_eq!(errs, 2);
    }
}
