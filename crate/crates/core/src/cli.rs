//! The `lagrange` command line: `matrix`, `resolvent`, `galois` and
//! `solvable`, with an optional key=value config file and a matrix cache.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::catalog::{self, GroupLabel};
use crate::error::{Error, Result};
use crate::galois::{self, IdentifyOptions};
use crate::invariants::{builtin, InvariantSpec, MultiPoly, BUILTIN_NAMES};
use crate::matrices::{
    class_names, group_matrix_for, partition_matrix_for, render_sequence, MatrixJson, Partition,
};
use crate::perm::{parse_generator_list, Permutation, PermutationGroup, DEFAULT_ORDER_CAP};
use crate::polyint::{factor_rational, Factorization, IntPoly};
use crate::resolvent::{
    absolute_resolvent_with, multiplicity_structure, ordering_from_substitutions,
    relative_resolvent_with, OrbitEvidence, Precision, ReportJson, ResolventReport,
};
use crate::subgrp::subgroup_classes;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNSOLVABLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Output {
    Text,
    Json,
}

/// Effective settings: defaults, then the config file, then flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub precision_bits: u32,
    pub max_rescues: usize,
    pub cache_dir: Option<PathBuf>,
    pub output: Output,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            precision_bits: crate::resolvent::DEFAULT_PRECISION,
            max_rescues: galois::DEFAULT_MAX_RESCUES,
            cache_dir: None,
            output: Output::Text,
        }
    }
}

impl Config {
    /// Applies `key = value` lines; `#` starts a comment.
    pub fn apply_file_text(&mut self, text: &str) -> Result<()> {
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("config line {}: expected key = value", no + 1))
            })?;
            let (k, v) = (k.trim(), v.trim());
            let bad =
                |what: &str| Error::Parse(format!("config line {}: bad {what} {v:?}", no + 1));
            match k {
                "precision" | "precision_bits" => {
                    self.precision_bits = v.parse().map_err(|_| bad(k))?
                }
                "rescues" | "max_rescues" => self.max_rescues = v.parse().map_err(|_| bad(k))?,
                "cache_dir" => self.cache_dir = Some(PathBuf::from(v)),
                "output" => {
                    self.output = match v {
                        "text" => Output::Text,
                        "json" => Output::Json,
                        _ => return Err(bad(k)),
                    }
                }
                _ => {
                    return Err(Error::Parse(format!(
                        "config line {}: unknown key {k:?}",
                        no + 1
                    )))
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if !(64..=crate::resolvent::PRECISION_CAP).contains(&self.precision_bits) {
            return Err(Error::Parse(format!(
                "precision {} outside [64, {}]",
                self.precision_bits,
                crate::resolvent::PRECISION_CAP
            )));
        }
        Ok(())
    }

    fn precision(&self) -> Precision {
        Precision {
            start: self.precision_bits,
            cap: crate::resolvent::PRECISION_CAP,
        }
    }

    fn identify_options(&self) -> IdentifyOptions {
        IdentifyOptions {
            max_rescues: self.max_rescues,
            precision: self.precision(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "lagrange",
    version,
    about = "Galois groups from Lagrange resolvents"
)]
pub struct Cli {
    /// Initial working precision in bits (64..=8192).
    #[arg(long, global = true)]
    pub precision: Option<u32>,
    /// Separability rescues allowed per run.
    #[arg(long, global = true)]
    pub rescues: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Directory for cached matrices.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// key = value config file; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partition and group matrices of an ambient group.
    Matrix {
        /// `S4`, `A5`, a catalog name, or generators such as
        /// `M5 := (1,2,3,4,5),(1,2,4,3)`.
        ambient: String,
        /// Skip the group matrix.
        #[arg(long)]
        partitions_only: bool,
    },
    /// The resolvent of a polynomial by an invariant.
    Resolvent {
        poly: String,
        /// Builtin name (`pair_sum`, `tchirnhaus:x1^2`, ...) or an expression in x1..xn.
        invariant: String,
        /// Ambient group for a relative resolvent.
        #[arg(long)]
        ambient: Option<String>,
        /// Lines `xk = s(x1)` fixing the root numbering.
        #[arg(long)]
        ordering_file: Option<PathBuf>,
    },
    /// Identify the Galois group.
    Galois { poly: String },
    /// Decide whether an irreducible quintic is solvable by radicals.
    Solvable { poly: String },
}

impl Cli {
    pub fn config(&self) -> Result<Config> {
        let mut c = Config::default();
        if let Some(path) = &self.config {
            c.apply_file_text(&fs::read_to_string(path)?)?;
        }
        if let Some(p) = self.precision {
            c.precision_bits = p;
        }
        if let Some(r) = self.rescues {
            c.max_rescues = r;
        }
        if self.json {
            c.output = Output::Json;
        }
        if let Some(d) = &self.cache_dir {
            c.cache_dir = Some(d.clone());
        }
        c.validate()?;
        Ok(c)
    }
}

/// Exit code for an error: input problems are usage errors.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidPermutation(_)
        | Error::UnknownInvariant(_)
        | Error::Json(_)
        | Error::Io(_) => EXIT_USAGE,
        _ => EXIT_COMPUTATION,
    }
}

/// Parses the arguments, runs one command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = cli
        .config()
        .and_then(|config| dispatch(&cli.command, &config));
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: &Command, config: &Config) -> Result<(String, i32)> {
    match cmd {
        Command::Matrix {
            ambient,
            partitions_only,
        } => cmd_matrix(ambient, !partitions_only, config).map(|s| (s, EXIT_OK)),
        Command::Resolvent {
            poly,
            invariant,
            ambient,
            ordering_file,
        } => {
            let ordering = match ordering_file {
                Some(p) => Some(fs::read_to_string(p)?),
                None => None,
            };
            cmd_resolvent(
                poly,
                invariant,
                ambient.as_deref(),
                ordering.as_deref(),
                config,
            )
            .map(|s| (s, EXIT_OK))
        }
        Command::Galois { poly } => cmd_galois(poly, config).map(|s| (s, EXIT_OK)),
        Command::Solvable { poly } => cmd_solvable(poly, config),
    }
}

/// A group from `S4`, `A5`, a catalog name, or `[name :=] generators`.
pub fn parse_ambient(spec: &str) -> Result<(String, PermutationGroup)> {
    let (name, body) = match spec.split_once(":=") {
        Some((n, b)) => (Some(n.trim().to_string()), b.trim()),
        None => (None, spec.trim()),
    };
    let numbered = |prefix: char| -> Option<usize> {
        body.strip_prefix(prefix)?.parse().ok().filter(|&n| n >= 1)
    };
    let group = if let Some(n) = numbered('S') {
        PermutationGroup::symmetric(n)?
    } else if let Some(n) = numbered('A') {
        PermutationGroup::alternating(n)?
    } else if let Some(e) = catalog::by_name(body) {
        e.group.clone()
    } else if body.starts_with('(') {
        let (gens, max) = parse_generator_list(body)?;
        let perms = gens
            .iter()
            .map(|c| Permutation::from_cycles(max, c))
            .collect::<Result<Vec<_>>>()?;
        PermutationGroup::from_generators(max, &perms, DEFAULT_ORDER_CAP)?
    } else {
        return Err(Error::Parse(format!("unrecognized ambient group {spec:?}")));
    };
    Ok((name.unwrap_or_else(|| body.to_string()), group))
}

fn parse_poly(text: &str) -> Result<IntPoly> {
    text.parse()
}

fn generator_text(g: &PermutationGroup) -> String {
    let gens: Vec<String> = g.generators().iter().map(|x| x.to_string()).collect();
    if gens.is_empty() {
        "()".into()
    } else {
        gens.join(", ")
    }
}

/// SHA-256 of the degree and the ambient's generators, in canonical form.
pub fn cache_key(g: &PermutationGroup, with_groups: bool) -> String {
    let mut gens: Vec<String> = g.generators().iter().map(|x| x.to_string()).collect();
    gens.sort();
    let material = format!(
        "degree={};gens={};groups={}",
        g.degree(),
        gens.join(";"),
        with_groups
    );
    Sha256::digest(material.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[derive(Serialize, Deserialize)]
struct CachedMatrix {
    key: String,
    json: MatrixJson,
    text: String,
}

fn cache_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("matrix-{key}.json"))
}

/// The matrices of `ambient` as `(json, text)`, served from the cache when
/// one is configured.
pub fn matrices_cached(
    name: &str,
    ambient: &PermutationGroup,
    with_groups: bool,
    cache_dir: Option<&Path>,
) -> Result<(MatrixJson, String)> {
    let key = cache_key(ambient, with_groups);
    if let Some(dir) = cache_dir {
        if let Ok(text) = fs::read_to_string(cache_path(dir, &key)) {
            if let Ok(c) = serde_json::from_str::<CachedMatrix>(&text) {
                if c.key == key {
                    return Ok((c.json, c.text));
                }
            }
        }
    }
    let classes = subgroup_classes(ambient)?;
    let names = class_names(&classes);
    let mut text = format!(
        "ambient {name}: degree {}, order {}, generators {}\nclasses:\n",
        ambient.degree(),
        ambient.order(),
        generator_text(ambient)
    );
    for (n, h) in names.iter().zip(classes.representatives()) {
        text.push_str(&format!(
            "  {n}: order {}, generators {}\n",
            h.order(),
            generator_text(h)
        ));
    }
    let pm = partition_matrix_for(classes.clone())?;
    text.push_str("partition matrix:\n");
    text.push_str(&pm.render());
    let json = if with_groups {
        let gm = group_matrix_for(classes)?;
        text.push_str("group matrix:\n");
        text.push_str(&gm.render());
        MatrixJson::new(&pm, Some(&gm))
    } else {
        MatrixJson::new(&pm, None)
    };
    if let Some(dir) = cache_dir {
        fs::create_dir_all(dir)?;
        let entry = CachedMatrix {
            key: key.clone(),
            json: json.clone(),
            text: text.clone(),
        };
        fs::write(cache_path(dir, &key), serde_json::to_string(&entry)?)?;
    }
    Ok((json, text))
}

pub fn cmd_matrix(spec: &str, with_groups: bool, config: &Config) -> Result<String> {
    let (name, ambient) = parse_ambient(spec)?;
    let (json, text) = matrices_cached(&name, &ambient, with_groups, config.cache_dir.as_deref())?;
    Ok(match config.output {
        Output::Text => text,
        Output::Json => serde_json::to_string_pretty(&json)? + "\n",
    })
}

/// A builtin name, or an expression in `x1..xn` with its stabilizer in `L`.
pub fn parse_invariant(
    text: &str,
    n: usize,
    ambient: Option<&PermutationGroup>,
) -> Result<InvariantSpec> {
    let base = text.split(':').next().unwrap_or("").trim();
    let inv = if BUILTIN_NAMES.contains(&base) {
        builtin(text, n)?
    } else {
        let poly = MultiPoly::parse(text, n)?;
        InvariantSpec::from_poly(poly, PermutationGroup::symmetric(n)?)?
    };
    match ambient {
        Some(l) if l != inv.ambient() => inv.with_ambient(l),
        _ => Ok(inv),
    }
}

/// Substitution polynomials from lines `xk = s(x1)` (or `s(x)`), `k = 2..n`.
pub fn parse_ordering(text: &str, n: usize) -> Result<Vec<IntPoly>> {
    let mut subs: Vec<Option<IntPoly>> = vec![None; n.saturating_sub(1)];
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("ordering line {line:?}: expected xk = s(x1)")))?;
        let k: usize = lhs
            .trim()
            .strip_prefix('x')
            .and_then(|s| s.parse().ok())
            .filter(|k| (2..=n).contains(k))
            .ok_or_else(|| {
                Error::Parse(format!(
                    "ordering line {line:?}: left side must be x2..x{n}"
                ))
            })?;
        let mp = crate::expr::parse_poly(rhs, 1, |v| (v == "x1" || v == "x").then_some(0))?;
        subs[k - 2] = Some(IntPoly::from_univariate(&mp));
    }
    subs.into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| Error::Parse(format!("ordering misses x{}", i + 2))))
        .collect()
}

/// A group consistent with a resolvent, with its predictions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateJson {
    pub name: String,
    pub order: usize,
    pub partition: Partition,
    pub groups: String,
    pub multiplicity: Vec<TagJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TagJson {
    pub factor: String,
    pub multiplicity: usize,
    pub case: crate::resolvent::MultiplicityCase,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolventJson {
    #[serde(flatten)]
    pub report: ReportJson,
    pub factorization: String,
    pub ambient_order: usize,
    pub stabilizer_order: usize,
    pub candidates: Vec<CandidateJson>,
}

/// Subgroup classes of `L` that could be the Galois group given this
/// resolvent: factor degrees when separable, rational roots and a valid
/// orbit assignment otherwise.
fn surviving_candidates(
    f: &IntPoly,
    report: &ResolventReport,
    fac: &Factorization,
) -> Result<Vec<CandidateJson>> {
    let l = report.ambient();
    if l.order() > crate::subgrp::CLASS_ENUMERATION_CAP {
        return Ok(Vec::new());
    }
    let irreducible = factor_rational(f)?.is_irreducible();
    let point_degrees = Partition::new(factor_rational(f)?.degree_multiset());
    let h = report.invariant().stabilizer();
    let observed = Partition::new(fac.degree_multiset());
    let simple_rational = fac.factors.iter().any(|(p, m)| p.deg() == 1 && *m == 1);
    let any_rational = fac.factors.iter().any(|(p, _)| p.deg() == 1);
    let mut out = Vec::new();
    for g in subgroup_classes(l)?.representatives() {
        let orbits = Partition::new(g.orbits().iter().map(Vec::len).collect());
        if (irreducible && !g.is_transitive()) || (!irreducible && orbits != point_degrees) {
            continue;
        }
        let (part, labels) = galois::predict_factors(g, l, h)?;
        let keep = if report.separable() {
            part == observed
        } else if simple_rational {
            part.has_part(1)
        } else if !any_rational {
            !part.has_part(1)
        } else {
            true
        };
        if !keep {
            continue;
        }
        let tags = if report.separable() {
            Vec::new()
        } else {
            match multiplicity_structure(report, fac, OrbitEvidence::Partition(&part)) {
                Ok(tags) => tags,
                Err(Error::Unsupported(_)) => continue,
                Err(e) => return Err(e),
            }
        };
        out.push(CandidateJson {
            name: GroupLabel::of(g).name().to_string(),
            order: g.order(),
            partition: part,
            groups: render_sequence(&labels),
            multiplicity: tags
                .into_iter()
                .map(|t| TagJson {
                    factor: t.factor.to_string(),
                    multiplicity: t.multiplicity,
                    case: t.case,
                })
                .collect(),
        });
    }
    Ok(out)
}

pub fn cmd_resolvent(
    poly: &str,
    invariant: &str,
    ambient: Option<&str>,
    ordering: Option<&str>,
    config: &Config,
) -> Result<String> {
    let f = parse_poly(poly)?;
    let n = f.deg();
    if n < 1 {
        return Err(Error::DegreeTooSmall { min: 1, got: n });
    }
    let n = n as usize;
    let amb = ambient.map(parse_ambient).transpose()?;
    let inv = parse_invariant(invariant, n, amb.as_ref().map(|a| &a.1))?;
    let sn_order: usize = (1..=n).product();
    let report = if inv.ambient().order() == sn_order && ordering.is_none() {
        absolute_resolvent_with(&f, &inv, config.precision())?
    } else {
        let text = ordering
            .ok_or_else(|| Error::Parse("a relative resolvent needs --ordering-file".into()))?;
        let subs = parse_ordering(text, n)?;
        let ord = ordering_from_substitutions(&f, &subs, config.precision())?;
        relative_resolvent_with(&f, &inv, &ord, crate::resolvent::PRECISION_CAP)?
    };
    let fac = factor_rational(report.resolvent())?;
    let candidates = surviving_candidates(&f, &report, &fac)?;
    let json = ResolventJson {
        report: report.to_json(),
        factorization: fac.to_string(),
        ambient_order: report.ambient().order(),
        stabilizer_order: inv.stabilizer().order(),
        candidates,
    };
    if config.output == Output::Json {
        return Ok(serde_json::to_string_pretty(&json)? + "\n");
    }
    let mut s = String::new();
    s.push_str(&format!("resolvent: {}\n", json.report.resolvent));
    s.push_str(&format!("factorization: {}\n", json.factorization));
    s.push_str(&format!(
        "separable: {}\n",
        if json.report.separable { "yes" } else { "no" }
    ));
    s.push_str(&format!("orbit size: {}\n", json.report.orbit_size));
    s.push_str(&format!("precision: {} bits\n", json.report.precision_used));
    s.push_str(&format!(
        "ambient order {}, stabilizer order {}\n",
        json.ambient_order, json.stabilizer_order
    ));
    s.push_str("candidates:\n");
    for c in &json.candidates {
        s.push_str(&format!(
            "  {} (order {}): partition {}, factor groups {}\n",
            c.name,
            c.order,
            c.partition.pretty(),
            c.groups
        ));
        for t in &c.multiplicity {
            let case = match t.case {
                crate::resolvent::MultiplicityCase::Collapse => "case i",
                crate::resolvent::MultiplicityCase::Shared => "case ii",
                crate::resolvent::MultiplicityCase::Mixed => "cases i and ii",
                crate::resolvent::MultiplicityCase::Undetermined => "undetermined",
            };
            s.push_str(&format!("    ({})^{}: {case}\n", t.factor, t.multiplicity));
        }
    }
    Ok(s)
}

pub fn cmd_galois(poly: &str, config: &Config) -> Result<String> {
    let f = parse_poly(poly)?;
    let r = galois::identify_with(&f, config.identify_options())?;
    if config.output == Output::Json {
        return Ok(serde_json::to_string_pretty(&r.to_json())? + "\n");
    }
    let mut s = String::new();
    s.push_str(&format!("group: {}\n", r.label.name()));
    s.push_str(&format!("order: {}\n", r.label.order()));
    s.push_str(&format!("degree: {}\n", r.degree));
    s.push_str(&format!(
        "transitive: {}\n",
        if r.label.is_transitive() { "yes" } else { "no" }
    ));
    s.push_str(&format!(
        "solvable: {}\n",
        if r.solvable { "yes" } else { "no" }
    ));
    s.push_str(&format!(
        "generators: {}\n",
        generator_text(&r.representative)
    ));
    if !r.evidence.is_empty() {
        s.push_str("evidence:\n");
        s.push_str(&r.render_evidence());
        s.push('\n');
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvableJson {
    pub solvable: bool,
    pub witness: Option<String>,
    pub resolvent: String,
    pub invariant: String,
}

pub fn cmd_solvable(poly: &str, config: &Config) -> Result<(String, i32)> {
    let f = parse_poly(poly)?;
    let v = galois::solvable_quintic_with(&f, config.identify_options())?;
    let code = if v.solvable { EXIT_OK } else { EXIT_UNSOLVABLE };
    let json = SolvableJson {
        solvable: v.solvable,
        witness: v.witness.as_ref().map(|w| w.to_string()),
        resolvent: v.resolvent.to_string(),
        invariant: v.invariant.clone(),
    };
    let text = if config.output == Output::Json {
        serde_json::to_string_pretty(&json)? + "\n"
    } else {
        let mut s = format!("solvable: {}\n", json.solvable);
        if let Some(w) = &json.witness {
            s.push_str(&format!("witness: {w}\n"));
        }
        s.push_str(&format!("cayley resolvent: {}\n", json.resolvent));
        s
    };
    Ok((text, code))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("lagrange").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn config_file_and_flags() {
        let mut c = Config::default();
        c.apply_file_text("# comment\nprecision = 256\nrescues=2\noutput = json\n")
            .unwrap();
        assert_eq!(c.precision_bits, 256);
        assert_eq!(c.max_rescues, 2);
        assert_eq!(c.output, Output::Json);
        assert!(c.apply_file_text("colour = red").is_err());
        c.precision_bits = 32;
        assert!(c.validate().is_err());
    }

    #[test]
    fn ambient_specs() {
        assert_eq!(parse_ambient("S4").unwrap().1.order(), 24);
        assert_eq!(parse_ambient("A5").unwrap().1.order(), 60);
        let (name, m5) = parse_ambient("M5 := (1,2,3,4,5),(1,2,4,3)").unwrap();
        assert_eq!((name.as_str(), m5.order()), ("M5", 20));
        assert_eq!(parse_ambient("D4").unwrap().1.order(), 8);
        assert!(parse_ambient("Q8").is_err());
    }

    #[test]
    fn orderings() {
        let subs = parse_ordering("x2 = x1^3 - 3*x1\nx3 = 2 - x1^2\n", 3).unwrap();
        assert_eq!(subs[1], "2 - x^2".parse().unwrap());
        assert!(parse_ordering("x2 = x1", 3).is_err());
        assert!(parse_ordering("y = x1", 2).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            run_args(&["galois", "x^4 - x^3 - 3*x^2 + x + 1"]).0,
            EXIT_OK
        );
        assert_eq!(run_args(&["solvable", "x^5 - x - 1"]).0, EXIT_UNSOLVABLE);
        assert_eq!(run_args(&["galois", "x^^2"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["galois", "(x-1)^2"]).0, EXIT_COMPUTATION);
        assert_eq!(
            run_args(&["--precision", "10", "galois", "x^2+1"]).0,
            EXIT_USAGE
        );
    }
}
