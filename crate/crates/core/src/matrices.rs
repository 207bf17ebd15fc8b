//! The action of `G` on the left cosets `L/H`, its orbit partition
//! `P_L(G,H)` and induced transitive groups `Gr_L(G,H)`, and the partition
//! and group matrices over the subgroup classes of `L`.
//!
//! Coset positions are renumbered so that orbits appear by ascending size,
//! with equal-size orbits ordered by their smallest coset index, and each
//! orbit occupies consecutive positions in ascending coset order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog::{GroupLabel, LabelJson};
use crate::error::{Error, Result};
use crate::perm::{Permutation, PermutationGroup};
use crate::subgrp::{left_cosets, normal_core, subgroup_classes, CosetList, SubgroupClassTable};

/// Multiset of orbit sizes, ascending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable();
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn has_part(&self, p: usize) -> bool {
        self.parts.contains(&p)
    }

    /// `(part, multiplicity)` pairs, ascending.
    pub fn grouped(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Exponent notation with superscripts, e.g. `1²,2⁴`.
    pub fn pretty(&self) -> String {
        self.grouped()
            .into_iter()
            .map(|(p, m)| {
                if m == 1 {
                    p.to_string()
                } else {
                    format!("{p}{}", superscript(m))
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// `1^2,2^4` style.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .grouped()
            .into_iter()
            .map(|(p, m)| {
                if m == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{m}")
                }
            })
            .collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `2,4`, `1^2,2^4` and `1²,2⁴`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (base, exp) = split_exponent(item)
                .ok_or_else(|| Error::Parse(format!("bad partition item {item:?}")))?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Ok(Partition::new(parts))
    }
}

fn split_exponent(item: &str) -> Option<(usize, usize)> {
    if let Some((b, e)) = item.split_once('^') {
        return Some((b.trim().parse().ok()?, e.trim().parse().ok()?));
    }
    let digits: String = item.chars().take_while(|c| c.is_ascii_digit()).collect();
    let rest = &item[digits.len()..];
    let base = digits.parse().ok()?;
    if rest.is_empty() {
        return Some((base, 1));
    }
    let exp: String = rest.chars().map(from_superscript).collect::<Option<_>>()?;
    Some((base, exp.parse().ok()?))
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn superscript(m: usize) -> String {
    m.to_string()
        .chars()
        .map(|c| SUPERSCRIPTS[c.to_digit(10).unwrap() as usize])
        .collect()
}

fn from_superscript(c: char) -> Option<char> {
    SUPERSCRIPTS
        .iter()
        .position(|&s| s == c)
        .map(|d| char::from(b'0' + d as u8))
}

/// `G` acting on `L/H` by left multiplication, positions renumbered by orbit.
#[derive(Clone, Debug)]
pub struct CosetActionImage {
    source: PermutationGroup,
    cosets: CosetList,
    order: Vec<usize>,
    generator_images: Vec<Permutation>,
    orbits: Vec<Vec<usize>>,
}

impl CosetActionImage {
    pub fn source(&self) -> &PermutationGroup {
        &self.source
    }

    pub fn cosets(&self) -> &CosetList {
        &self.cosets
    }

    /// Coset representatives in position order.
    pub fn representatives(&self) -> Vec<&Permutation> {
        self.order
            .iter()
            .map(|&i| &self.cosets.representatives()[i])
            .collect()
    }

    /// Original coset index at each 1-based position.
    pub fn position_cosets(&self) -> &[usize] {
        &self.order
    }

    /// Image of each generator of `G`, on positions `1..=e`.
    pub fn generator_images(&self) -> &[Permutation] {
        &self.generator_images
    }

    /// Orbits as lists of 1-based positions.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn index(&self) -> usize {
        self.order.len()
    }

    /// The image `Ψ(G) ≤ S_e`.
    pub fn image_group(&self) -> Result<PermutationGroup> {
        PermutationGroup::from_generators(
            self.index(),
            &self.generator_images,
            self.source.order().max(1),
        )
    }
}

fn check_subgroup(g: &PermutationGroup, l: &PermutationGroup) -> Result<()> {
    if g.is_subgroup_of(l) {
        Ok(())
    } else {
        Err(Error::NotASubgroup(format!(
            "{g:?} is not contained in {l:?}"
        )))
    }
}

/// Raw images of `G`'s generators on coset indices.
fn raw_images(g: &PermutationGroup, cosets: &CosetList) -> Vec<Vec<usize>> {
    g.generators()
        .iter()
        .map(|x| {
            cosets
                .representatives()
                .iter()
                .map(|s| {
                    cosets
                        .coset_of(&x.compose_unchecked(s))
                        .expect("G lies in the ambient group")
                })
                .collect()
        })
        .collect()
}

/// Orbits on coset indices, each ascending, ordered by (size, smallest index).
fn raw_orbits(e: usize, images: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; e];
    let mut orbits = Vec::new();
    for start in 0..e {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for img in images {
                let y = img[x];
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits.sort_by(|a, b| a.len().cmp(&b.len()).then(a[0].cmp(&b[0])));
    orbits
}

/// The action of `G` on the left cosets of `H` in `L`.
pub fn coset_action(
    g: &PermutationGroup,
    l: &PermutationGroup,
    h: &PermutationGroup,
) -> Result<CosetActionImage> {
    check_subgroup(g, l)?;
    let cosets = left_cosets(l, h)?;
    Ok(action_on(g, cosets))
}

fn action_on(g: &PermutationGroup, cosets: CosetList) -> CosetActionImage {
    let e = cosets.index();
    let images = raw_images(g, &cosets);
    let raw = raw_orbits(e, &images);
    let order: Vec<usize> = raw.iter().flatten().copied().collect();
    let mut position = vec![0usize; e];
    for (p, &c) in order.iter().enumerate() {
        position[c] = p;
    }
    let generator_images = images
        .iter()
        .map(|img| {
            Permutation::from_zero_based(order.iter().map(|&c| position[img[c]] as u32).collect())
        })
        .collect();
    let mut next = 1;
    let orbits = raw
        .iter()
        .map(|o| {
            let v: Vec<usize> = (next..next + o.len()).collect();
            next += o.len();
            v
        })
        .collect();
    CosetActionImage {
        source: g.clone(),
        cosets,
        order,
        generator_images,
        orbits,
    }
}

/// `P_L(G,H)`: the orbit sizes of the action.
pub fn partition_of(action: &CosetActionImage) -> Partition {
    Partition::new(action.orbits().iter().map(Vec::len).collect())
}

/// `Gr_L(G,H)`: the transitive group induced on each orbit, positions
/// renumbered `1..=p_j`, labeled against the catalog.
pub fn group_sequence(action: &CosetActionImage) -> Result<Vec<GroupLabel>> {
    action
        .orbits()
        .iter()
        .map(|orbit| {
            let start = orbit[0];
            let gens: Vec<Permutation> = action
                .generator_images()
                .iter()
                .map(|x| {
                    Permutation::from_zero_based(
                        orbit.iter().map(|&p| (x.image(p) - start) as u32).collect(),
                    )
                })
                .collect();
            let grp = PermutationGroup::from_generators(
                orbit.len(),
                &gens,
                action.source().order().max(1),
            )?;
            Ok(GroupLabel::of(&grp))
        })
        .collect()
}

/// `|J ∩ G|` with `J` the normal core of `H` in `L`.
pub fn multi_isomorphism_order(
    g: &PermutationGroup,
    l: &PermutationGroup,
    h: &PermutationGroup,
) -> Result<usize> {
    check_subgroup(g, l)?;
    let j = normal_core(l, h)?;
    Ok(g.elements().iter().filter(|x| j.contains(x)).count())
}

/// Coset lists for every class representative, shared across a matrix row.
pub struct ColumnCosets {
    columns: Vec<CosetList>,
}

impl ColumnCosets {
    pub fn new(classes: &SubgroupClassTable) -> Result<Self> {
        let l = classes.ambient();
        let columns = classes
            .representatives()
            .iter()
            .map(|h| left_cosets(l, h))
            .collect::<Result<_>>()?;
        Ok(Self { columns })
    }

    /// Builds the coset lists of the given subgroups of `l`.
    pub fn for_subgroups(l: &PermutationGroup, hs: &[PermutationGroup]) -> Result<Self> {
        let columns = hs
            .iter()
            .map(|h| left_cosets(l, h))
            .collect::<Result<_>>()?;
        Ok(Self { columns })
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// `P_L(G, H_j)` without building the image group.
    pub fn partition(&self, g: &PermutationGroup, j: usize) -> Partition {
        let cosets = &self.columns[j];
        let images = raw_images(g, cosets);
        Partition::new(
            raw_orbits(cosets.index(), &images)
                .iter()
                .map(Vec::len)
                .collect(),
        )
    }

    pub fn action(&self, g: &PermutationGroup, j: usize) -> CosetActionImage {
        action_on(g, self.columns[j].clone())
    }
}

/// `𝔓`: cell `(i, j) = P_L(H_i, H_j)`.
#[derive(Clone, Debug)]
pub struct PartitionMatrix {
    pub classes: SubgroupClassTable,
    pub cells: Vec<Vec<Partition>>,
}

/// `𝔊`: cell `(i, j) = Gr_L(H_i, H_j)`.
#[derive(Clone, Debug)]
pub struct GroupMatrix {
    pub classes: SubgroupClassTable,
    pub cells: Vec<Vec<Vec<GroupLabel>>>,
}

pub fn partition_matrix(l: &PermutationGroup) -> Result<PartitionMatrix> {
    let classes = subgroup_classes(l)?;
    partition_matrix_for(classes)
}

pub fn partition_matrix_for(classes: SubgroupClassTable) -> Result<PartitionMatrix> {
    let cols = ColumnCosets::new(&classes)?;
    let cells = classes
        .representatives()
        .iter()
        .map(|g| (0..cols.len()).map(|j| cols.partition(g, j)).collect())
        .collect();
    Ok(PartitionMatrix { classes, cells })
}

pub fn group_matrix(l: &PermutationGroup) -> Result<GroupMatrix> {
    let classes = subgroup_classes(l)?;
    group_matrix_for(classes)
}

pub fn group_matrix_for(classes: SubgroupClassTable) -> Result<GroupMatrix> {
    let cols = ColumnCosets::new(&classes)?;
    let cells = classes
        .representatives()
        .iter()
        .map(|g| {
            (0..cols.len())
                .map(|j| group_sequence(&cols.action(g, j)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(GroupMatrix { classes, cells })
}

/// True iff no two rows of the matrix are equal.
pub fn check_rows_distinct(m: &PartitionMatrix) -> bool {
    let rows = &m.cells;
    (0..rows.len()).all(|i| (i + 1..rows.len()).all(|k| rows[i] != rows[k]))
}

/// Compresses a group sequence as `S1²,D4`.
pub fn render_sequence(labels: &[GroupLabel]) -> String {
    let mut out: Vec<(String, usize)> = Vec::new();
    for l in labels {
        match out.last_mut() {
            Some((name, m)) if name == l.name() => *m += 1,
            _ => out.push((l.name().to_string(), 1)),
        }
    }
    out.into_iter()
        .map(|(n, m)| {
            if m == 1 {
                n
            } else {
                format!("{n}{}", superscript(m))
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn pad_table(header: &[String], rows: &[(String, Vec<String>)]) -> String {
    let cols = header.len();
    let mut width = vec![0usize; cols + 1];
    width[0] = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
    for (j, h) in header.iter().enumerate() {
        width[j + 1] = h.chars().count();
    }
    for (_, cells) in rows {
        for (j, c) in cells.iter().enumerate() {
            width[j + 1] = width[j + 1].max(c.chars().count());
        }
    }
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));
    let mut out = String::new();
    out.push_str(&pad("", width[0]));
    for (j, h) in header.iter().enumerate() {
        out.push_str("  ");
        out.push_str(&pad(h, width[j + 1]));
    }
    out.push('\n');
    for (name, cells) in rows {
        out.push_str(&pad(name, width[0]));
        for (j, c) in cells.iter().enumerate() {
            out.push_str("  ");
            out.push_str(&pad(c, width[j + 1]));
        }
        out.push('\n');
    }
    out
}

/// Short class names `H1..Hr`, annotated with catalog names when transitive.
pub fn class_names(classes: &SubgroupClassTable) -> Vec<String> {
    classes
        .representatives()
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let label = GroupLabel::of(h);
            if label.is_cataloged() {
                format!("H{}={}", i + 1, label.name())
            } else {
                format!("H{}", i + 1)
            }
        })
        .collect()
}

impl PartitionMatrix {
    pub fn render(&self) -> String {
        let names = class_names(&self.classes);
        let rows: Vec<(String, Vec<String>)> = names
            .iter()
            .zip(&self.cells)
            .map(|(n, row)| (n.clone(), row.iter().map(Partition::pretty).collect()))
            .collect();
        pad_table(&names, &rows)
    }
}

impl GroupMatrix {
    pub fn render(&self) -> String {
        let names = class_names(&self.classes);
        let rows: Vec<(String, Vec<String>)> = names
            .iter()
            .zip(&self.cells)
            .map(|(n, row)| (n.clone(), row.iter().map(|c| render_sequence(c)).collect()))
            .collect();
        pad_table(&names, &rows)
    }
}

/// Serialized form of both matrices over one ambient group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub degree: usize,
    pub ambient_generators: Vec<String>,
    pub classes: Vec<ClassJson>,
    pub partitions: Vec<Vec<Partition>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groups: Option<Vec<Vec<Vec<LabelJson>>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub order: usize,
    pub generators: Vec<String>,
}

impl MatrixJson {
    pub fn new(p: &PartitionMatrix, g: Option<&GroupMatrix>) -> Self {
        let summary = p.classes.to_summary();
        Self {
            degree: summary.degree,
            ambient_generators: p
                .classes
                .ambient()
                .generators()
                .iter()
                .map(|x| x.to_string())
                .collect(),
            classes: summary
                .classes
                .into_iter()
                .map(|c| ClassJson {
                    order: c.order,
                    generators: c.generators,
                })
                .collect(),
            partitions: p.cells.clone(),
            groups: g.map(|g| {
                g.cells
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|c| c.iter().map(GroupLabel::to_json).collect())
                            .collect()
                    })
                    .collect()
            }),
        }
    }
}
