//! Family specifications, truncation sweeps, transversals, verification
//! suites and the JSON report envelope used by the command-line tool.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::endostructure::{endosocle, family_endosocle, power_endosocle, relative_endosocle_series};
use crate::error::{Error, Result};
use crate::family::{analyze, Family};
use crate::homalg::{are_isomorphic, hom_basis, hom_dim, IsoCertificate};
use crate::linalg::{Field, Subspace};
use crate::matsub::{check_endo_invariant, evaluate, random_pointed_matrix};
use crate::quiver::kronecker;
use crate::representation::{
    direct_sum, dual, kronecker_preinjective, kronecker_preinjective_right, kronecker_preprojective, kronecker_regular,
    Eigenvalue, Representation, RepresentationJson, SubspaceFamily,
};
use crate::scalar::Scalar;
use crate::tnilpotence::{harada_sai_check, radical_profile};

/// Parses `a..b` (inclusive) or a single index `a`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index {t:?} in range {s:?}")));
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => {
            let n = num(s)?;
            n..=n
        }
    };
    if r.is_empty() {
        return Err(Error::InvalidArgument(format!("empty range {s:?}")));
    }
    Ok(r)
}

/// Parses a comma-separated list of points of the projective line.
pub fn parse_lambdas(s: &str) -> Result<Vec<Eigenvalue>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
}

/// Builds a module from `+`-separated summands: `I<n>`, `P<n>`, `R<n>(λ)`,
/// `S1`, `S2`, or `@file.json`.
pub fn parse_module(spec: &str) -> Result<Representation> {
    let parts = spec.split('+').map(|t| parse_summand(t.trim())).collect::<Result<Vec<_>>>()?;
    match parts.as_slice() {
        [] => Err(Error::Parse("empty module spec".into())),
        [one] => Ok(one.clone()),
        many => Ok(direct_sum(many[0].presentation(), many)?.sum),
    }
}

fn parse_summand(t: &str) -> Result<Representation> {
    let bad = || Error::Parse(format!("unrecognized module {t:?}"));
    if let Some(path) = t.strip_prefix('@') {
        let j: RepresentationJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        return Representation::from_json(&j);
    }
    match t {
        "S1" => return kronecker_preinjective(1),
        "S2" => return kronecker_preprojective(1),
        _ => {}
    }
    let (head, rest) = t.split_at(t.char_indices().nth(1).map_or(t.len(), |(i, _)| i));
    match head {
        "I" => kronecker_preinjective(rest.parse().map_err(|_| bad())?),
        "P" => kronecker_preprojective(rest.parse().map_err(|_| bad())?),
        "R" => {
            let (n, lam) = rest.split_once('(').ok_or_else(bad)?;
            let lam = lam.strip_suffix(')').ok_or_else(bad)?;
            kronecker_regular(n.parse().map_err(|_| bad())?, &lam.parse()?)
        }
        _ => Err(bad()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Preinjective,
    Preprojective,
    Regular,
    File,
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "preinj" | "kronecker-preinjective" => Ok(FamilyKind::Preinjective),
            "preproj" | "kronecker-preprojective" => Ok(FamilyKind::Preprojective),
            "regular" | "kronecker-regular" => Ok(FamilyKind::Regular),
            "file" => Ok(FamilyKind::File),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// A family by builtin name plus an index range or parameter list, or a
/// JSON file holding an array of representations.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub range: Option<RangeInclusive<usize>>,
    /// Regular families: points of the projective line.
    pub lambdas: Vec<Eigenvalue>,
    /// Regular families: quasi-length.
    pub block: usize,
    pub path: Option<PathBuf>,
}

impl FamilySpec {
    pub fn preinjective(range: RangeInclusive<usize>) -> Self {
        FamilySpec { kind: FamilyKind::Preinjective, range: Some(range), lambdas: Vec::new(), block: 1, path: None }
    }

    pub fn preprojective(range: RangeInclusive<usize>) -> Self {
        FamilySpec { kind: FamilyKind::Preprojective, ..FamilySpec::preinjective(range) }
    }

    pub fn regular(block: usize, lambdas: Vec<Eigenvalue>) -> Self {
        FamilySpec { kind: FamilyKind::Regular, range: None, lambdas, block, path: None }
    }

    fn integer_points(range: RangeInclusive<usize>) -> Vec<Eigenvalue> {
        range.map(|l| Eigenvalue::Finite(Scalar::from_int(l as i64))).collect()
    }

    pub fn build(&self) -> Result<Family> {
        let range = || self.range.clone().ok_or_else(|| Error::InvalidArgument("family needs an index range".into()));
        match self.kind {
            FamilyKind::Preinjective => Family::preinjective(range()?),
            FamilyKind::Preprojective => Family::preprojective(range()?),
            FamilyKind::Regular => {
                let lambdas = match (&self.range, self.lambdas.is_empty()) {
                    (_, false) => self.lambdas.clone(),
                    (Some(r), true) => Self::integer_points(r.clone()),
                    (None, true) => return Err(Error::InvalidArgument("regular family needs parameters".into())),
                };
                Family::regular(self.block, &lambdas)
            }
            FamilyKind::File => {
                let path = self.path.as_ref().ok_or_else(|| Error::InvalidArgument("file family needs a path".into()))?;
                let reps: Vec<RepresentationJson> = serde_json::from_str(&std::fs::read_to_string(path)?)?;
                let reps = reps.iter().map(Representation::from_json).collect::<Result<Vec<_>>>()?;
                Family::from_reps(reps)
            }
        }
    }

    /// The family cut off at truncation `n`: indices `start..=n` for
    /// index families, the first `n` parameters for regular families
    /// (integers `0..n` when no list was given).
    pub fn truncated(&self, n: usize) -> Result<Family> {
        match self.kind {
            FamilyKind::Preinjective | FamilyKind::Preprojective => {
                let start = self.range.as_ref().map_or(1, |r| *r.start());
                let spec = FamilySpec { range: Some(start..=n), ..self.clone() };
                spec.build()
            }
            FamilyKind::Regular => {
                let lambdas = if self.lambdas.is_empty() {
                    Self::integer_points(0..=n.saturating_sub(1))
                } else if self.lambdas.len() >= n {
                    self.lambdas[..n].to_vec()
                } else {
                    return Err(Error::InvalidArgument(format!("only {} parameters for truncation {n}", self.lambdas.len())));
                };
                if n == 0 {
                    return Err(Error::InvalidArgument("truncation must be positive".into()));
                }
                Family::regular(self.block, &lambdas)
            }
            FamilyKind::File => {
                let fam = self.build()?;
                if n == 0 || n > fam.len() {
                    return Err(Error::InvalidArgument(format!("truncation {n} outside 1..={}", fam.len())));
                }
                Ok(fam.select(&(0..n).collect::<Vec<_>>()))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransversalReport {
    /// Member indices chosen as class representatives.
    pub representatives: Vec<usize>,
    pub multiplicities: BTreeMap<usize, usize>,
    pub classes: Vec<Vec<usize>>,
    pub warnings: Vec<String>,
}

/// Groups members into isomorphism classes using verified certificates.
/// Presumed non-isomorphic pairs are kept apart and reported.
pub fn transversal(family: &Family) -> Result<TransversalReport> {
    let members = family.members();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut warnings = Vec::new();
    for (p, m) in members.iter().enumerate() {
        let mut home = None;
        for (c, class) in classes.iter().enumerate() {
            let rep = &members[class[0]];
            match are_isomorphic(&rep.rep, &m.rep)? {
                IsoCertificate::Iso { .. } => {
                    home = Some(c);
                    break;
                }
                IsoCertificate::PresumedNo => {
                    warnings.push(format!("{} and {}: no isomorphism found, not certified", rep.label, m.label))
                }
                IsoCertificate::CertifiedNo(_) => {}
            }
        }
        match home {
            Some(c) => classes[c].push(p),
            None => classes.push(vec![p]),
        }
    }
    let classes: Vec<Vec<usize>> =
        classes.into_iter().map(|c| c.into_iter().map(|p| members[p].index).collect()).collect();
    Ok(TransversalReport {
        representatives: classes.iter().map(|c| c[0]).collect(),
        multiplicities: classes.iter().map(|c| (c[0], c.len())).collect(),
        classes,
        warnings,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Invariant {
    EndosocSupport,
    EndosocDim,
    RelativeLength,
    RadicalDepth,
}

impl Invariant {
    pub const ALL: [Invariant; 4] =
        [Invariant::EndosocSupport, Invariant::EndosocDim, Invariant::RelativeLength, Invariant::RadicalDepth];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::EndosocSupport => "endosoc-support",
            Invariant::EndosocDim => "endosoc-dim",
            Invariant::RelativeLength => "relative-length",
            Invariant::RadicalDepth => "radical-depth",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown invariant {s:?}")))
    }
}

/// Depth cap for the radical-depth invariant.
pub const SWEEP_DEPTH_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub truncation: usize,
    pub invariant: Invariant,
    /// `None` when the radical profile did not vanish within the cap.
    pub value: Option<usize>,
    /// Whether a boundary member contributed to the raw computation. The
    /// endosocle invariants exclude boundary members from `value`.
    pub boundary_flag: bool,
}

fn sweep_point(spec: &FamilySpec, invariant: Invariant, n: usize) -> Result<SweepRow> {
    let fam = spec.truncated(n)?;
    let a = analyze(&fam)?;
    let (value, boundary_flag) = match invariant {
        Invariant::EndosocSupport | Invariant::EndosocDim => {
            let r = family_endosocle(&a);
            let flag = r.support.iter().any(|i| fam.is_boundary(*i));
            let v = if invariant == Invariant::EndosocSupport { r.interior_support().len() } else { r.interior_dim() };
            (Some(v), flag)
        }
        Invariant::RelativeLength => {
            let s = relative_endosocle_series(&a)?;
            let flag = s.steps.iter().flat_map(|st| &st.support).any(|i| fam.is_boundary(*i));
            (Some(s.length), flag)
        }
        Invariant::RadicalDepth => (radical_profile(&a, SWEEP_DEPTH_CAP)?.vanishing_depth, false),
    };
    Ok(SweepRow { truncation: n, invariant, value, boundary_flag })
}

/// One row per truncation, computed concurrently and returned in
/// truncation order.
pub fn sweep(spec: &FamilySpec, invariant: Invariant, truncations: RangeInclusive<usize>) -> Result<Vec<SweepRow>> {
    truncations.collect::<Vec<_>>().par_iter().map(|&n| sweep_point(spec, invariant, n)).collect()
}

pub fn sweep_csv(rows: &[SweepRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["truncation", "invariant", "value", "boundary_flag"]).map_err(csv_err)?;
    for r in rows {
        let value = r.value.map_or_else(|| "none".to_string(), |v| v.to_string());
        w.write_record([r.truncation.to_string(), r.invariant.to_string(), value, u8::from(r.boundary_flag).to_string()])
            .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub anchor: String,
    pub pass: bool,
    pub checks: Vec<Check>,
}

type SuiteFn = fn(u64) -> Result<Vec<Check>>;

/// Registered suites: name, anchor text, body.
pub const SUITES: [(&str, &str, SuiteFn); 11] = [
    ("preinjective-endosocle", "endosocle of the preinjective sum is I1 plus the socle of I2", suite_preinjective),
    ("trimmed-preinjective", "endosocle of the sum of I_n for n >= m is all of I_m", suite_trimmed),
    ("preprojective-vanishing", "endosocle of the sum of P_n for n >= m is zero", suite_preprojective),
    ("relative-series", "relative endosocle series of the preinjectives", suite_relative),
    ("homogeneous-power", "endosocle of a power is a single homogeneous component", suite_power),
    ("duality", "vector-space duality exchanges left and right Kronecker modules", suite_duality),
    ("hom-table", "dim Hom(I_i, I_j) = max(0, i - j + 1)", suite_hom_table),
    ("harada-sai", "composites of 2^b - 1 non-isomorphisms of length <= b vanish", suite_harada_sai),
    ("regular-support", "support of the endosocle of orthogonal regular modules grows without bound", suite_regular),
    ("matrix-subgroups", "matrix subgroups are endo-submodules and commute with direct sums", suite_matsub),
    ("two-route", "family endosocle agrees with the radical kernel of the direct sum", suite_two_route),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.0).collect()
}

/// Runs one suite, or every suite for `"all"`. Errors inside a suite are
/// recorded as failed checks.
pub fn verify(suite: &str, seed: u64) -> Result<Vec<SuiteResult>> {
    let chosen: Vec<_> = if suite == "all" {
        SUITES.iter().collect()
    } else {
        let s = SUITES.iter().find(|s| s.0 == suite).ok_or_else(|| Error::InvalidArgument(format!("unknown suite {suite:?}")))?;
        vec![s]
    };
    Ok(chosen
        .into_iter()
        .map(|(name, anchor, body)| {
            let checks = body(seed).unwrap_or_else(|e| vec![check("run", false, format!("error: {e}"))]);
            SuiteResult { suite: name.to_string(), anchor: anchor.to_string(), pass: checks.iter().all(|c| c.pass), checks }
        })
        .collect())
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into() }
}

fn suite_preinjective(_: u64) -> Result<Vec<Check>> {
    (4..=12)
        .into_par_iter()
        .map(|n| {
            let r = family_endosocle(&analyze(&Family::preinjective(1..=n)?)?);
            let rest_zero = (3..=n).all(|i| r.dim_at(i) == 0);
            let pass = r.support == [1, 2] && r.dim_at(1) == 1 && r.dim_at(2) == 1 && rest_zero;
            Ok(check(format!("N={n}"), pass, format!("support {:?}, total dim {}", r.support, r.total_dim)))
        })
        .collect()
}

fn suite_trimmed(_: u64) -> Result<Vec<Check>> {
    (2..=6usize)
        .into_par_iter()
        .map(|m| {
            let n = m + 6;
            let fam = Family::preinjective(m..=n)?;
            let r = family_endosocle(&analyze(&fam)?);
            let full = r.part(m).is_some_and(|b| b.is_full_in(&fam.members()[0].rep));
            let pass = r.interior_support() == [m] && full && r.dim_at(m) == 2 * m - 1 && fam.is_boundary(n);
            Ok(check(format!("m={m}"), pass, format!("support {:?}, dim B_m {}", r.support, r.dim_at(m))))
        })
        .collect()
}

fn suite_preprojective(_: u64) -> Result<Vec<Check>> {
    (3..=10)
        .into_par_iter()
        .map(|n| {
            let r = family_endosocle(&analyze(&Family::preprojective(1..=n)?)?);
            let pass = (1..n).all(|i| r.dim_at(i) == 0);
            Ok(check(format!("N={n}"), pass, format!("support {:?}, boundary {:?}", r.support, r.boundary)))
        })
        .collect()
}

fn suite_relative(_: u64) -> Result<Vec<Check>> {
    [5usize, 8]
        .into_iter()
        .map(|n| {
            let s = relative_endosocle_series(&analyze(&Family::preinjective(1..=n)?)?)?;
            let mut want = vec![vec![1, 2]];
            want.extend((3..=n).map(|i| vec![i]));
            let pass = s.supports() == want && s.length == n - 1;
            Ok(check(format!("N={n}"), pass, format!("supports {:?}", s.supports())))
        })
        .collect()
}

fn suite_power(_: u64) -> Result<Vec<Check>> {
    let mods = [("I2", kronecker_preinjective(2)?), ("R2(0)", kronecker_regular(2, &Eigenvalue::Finite(Scalar::zero()))?)];
    let mut out = Vec::new();
    for (name, m) in &mods {
        let base = endosocle(m)?;
        for k in [2usize, 3] {
            let ds = direct_sum(m.presentation(), &vec![m.clone(); k])?;
            let expected = ds.assemble(&vec![base.clone(); k])?;
            let got = power_endosocle(m, k)?;
            let pass = got == expected && got.total_dim() == k * base.total_dim();
            out.push(check(format!("{name}^{k}"), pass, format!("dim {} vs {} copies of {}", got.total_dim(), k, base.total_dim())));
        }
    }
    Ok(out)
}

/// Preinjectives, preprojectives and regulars at `0, 1, inf`, indices up to 5.
pub fn duality_corpus() -> Result<Vec<(String, Representation)>> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.push((format!("I{n}"), kronecker_preinjective(n)?));
        out.push((format!("P{n}"), kronecker_preprojective(n)?));
        for l in [Eigenvalue::Finite(Scalar::zero()), Eigenvalue::Finite(Scalar::one()), Eigenvalue::Infinity] {
            out.push((format!("R{n}({l})"), kronecker_regular(n, &l)?));
        }
    }
    Ok(out)
}

fn suite_duality(_: u64) -> Result<Vec<Check>> {
    let corpus = duality_corpus()?;
    let duals: Vec<Representation> = corpus.iter().map(|(_, m)| dual(m)).collect();
    let mut out = Vec::new();
    let double_ok = corpus.iter().all(|(_, m)| are_isomorphic(&dual(&dual(m)), m).map(|c| c.is_iso()).unwrap_or(false));
    out.push(check("double dual", double_ok, format!("{} modules", corpus.len())));
    let pairs: Vec<(usize, usize)> = (0..corpus.len()).flat_map(|i| (0..corpus.len()).map(move |j| (i, j))).collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let l = hom_basis(&corpus[i].1, &corpus[j].1).map(|h| h.dim());
            let r = hom_basis(&duals[j], &duals[i]).map(|h| h.dim());
            match (l, r) {
                (Ok(a), Ok(b)) if a == b => None,
                _ => Some(format!("{} -> {}", corpus[i].0, corpus[j].0)),
            }
        })
        .collect();
    out.push(check("hom dimensions", bad.is_empty(), format!("{} pairs, mismatches {bad:?}", pairs.len())));
    let shapes = (1..=5).all(|n| {
        kronecker_preinjective_right(n).is_ok_and(|r| dual(&r).dims() == [n - 1, n] && dual(&r) == kronecker_preprojective(n).unwrap())
    });
    out.push(check("right preinjective dual", shapes, "dual dims (n-1, n)"));
    Ok(out)
}

fn suite_hom_table(_: u64) -> Result<Vec<Check>> {
    let mods = (1..=6).map(kronecker_preinjective).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for i in 1..=6usize {
        for j in 1..=6usize {
            let want = (i + 1).saturating_sub(j);
            let exact = hom_basis(&mods[i - 1], &mods[j - 1])?.dim();
            let modp = hom_dim(&mods[i - 1], &mods[j - 1], Field::Prime(101))?;
            out.push(check(format!("Hom(I{i},I{j})"), exact == want && modp == want, format!("{exact} (mod 101: {modp}), expected {want}")));
        }
    }
    Ok(out)
}

/// Kronecker indecomposables of length at most 5, regulars at `0, 1, inf`.
pub fn short_indecomposables() -> Result<Family> {
    let mut reps = Vec::new();
    for n in 1..=3 {
        reps.push(kronecker_preprojective(n)?);
        reps.push(kronecker_preinjective(n)?);
    }
    for n in 1..=2 {
        for l in [Eigenvalue::Finite(Scalar::zero()), Eigenvalue::Finite(Scalar::one()), Eigenvalue::Infinity] {
            reps.push(kronecker_regular(n, &l)?);
        }
    }
    Family::from_reps(reps)
}

fn suite_harada_sai(_: u64) -> Result<Vec<Check>> {
    let r = harada_sai_check(&analyze(&short_indecomposables()?)?, 5)?;
    Ok(vec![check("length <= 5", r.pass, format!("depth {:?}, bound {}", r.depth, r.bound))])
}

fn suite_regular(_: u64) -> Result<Vec<Check>> {
    (3..=10)
        .into_par_iter()
        .map(|n| {
            let r = family_endosocle(&analyze(&FamilySpec::regular(1, Vec::new()).truncated(n)?)?);
            Ok(check(format!("N={n}"), r.support.len() == n, format!("support size {}", r.support.len())))
        })
        .collect()
}

/// The embedded images of per-summand subspaces inside a direct sum.
pub fn embed_summands(ds: &crate::representation::DirectSum, parts: &[Subspace]) -> Subspace {
    let cols: Vec<Vec<Scalar>> =
        parts.iter().zip(&ds.embeddings).flat_map(|(s, e)| s.image(&e.total_matrix()).vectors()).collect();
    Subspace::from_columns(ds.sum.total_dim(), &cols)
}

pub const MATSUB_SAMPLES: usize = 100;

fn suite_matsub(seed: u64) -> Result<Vec<Check>> {
    let k = kronecker();
    let pairs = [("I1+I2", kronecker_preinjective(1)?, kronecker_preinjective(2)?), ("P2+I2", kronecker_preprojective(2)?, kronecker_preinjective(2)?)];
    let mut out = Vec::new();
    for (name, a, b) in pairs {
        let ds = direct_sum(&k, &[a.clone(), b.clone()])?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut invariant, mut additive) = (0, 0);
        for t in 0..MATSUB_SAMPLES {
            let pm = random_pointed_matrix(&mut rng, &k, 1 + t % 3, 1 + (t / 3) % 3);
            let whole = evaluate(&pm, &ds.sum)?;
            invariant += usize::from(check_endo_invariant(&whole, &ds.sum)?);
            additive += usize::from(whole == embed_summands(&ds, &[evaluate(&pm, &a)?, evaluate(&pm, &b)?]));
        }
        out.push(check(format!("{name} endo-invariant"), invariant == MATSUB_SAMPLES, format!("{invariant}/{MATSUB_SAMPLES}")));
        out.push(check(format!("{name} additive"), additive == MATSUB_SAMPLES, format!("{additive}/{MATSUB_SAMPLES}")));
    }
    Ok(out)
}

/// Five families of pairwise non-isomorphic indecomposables.
pub fn mixed_families() -> Vec<Vec<&'static str>> {
    vec![
        vec!["I1", "I2", "I3"],
        vec!["P1", "P2", "I2", "R1(0)"],
        vec!["R2(0)", "R1(0)", "R1(1)", "I2"],
        vec!["P3", "R2(inf)", "I1"],
        vec!["P2", "I3", "R1(1/2)", "R3(1)"],
    ]
}

fn suite_two_route(_: u64) -> Result<Vec<Check>> {
    mixed_families()
        .into_iter()
        .map(|names| {
            let reps = names.iter().map(|n| parse_module(n)).collect::<Result<Vec<_>>>()?;
            let fam = Family::from_reps(reps.clone())?;
            let r = family_endosocle(&analyze(&fam)?);
            let ds = direct_sum(&kronecker(), &reps)?;
            let assembled: SubspaceFamily = ds.assemble(&r.parts)?;
            let direct = endosocle(&ds.sum)?;
            Ok(check(names.join("+"), assembled == direct, format!("dims {:?} vs {:?}", assembled.dims(), direct.dims())))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Config {
    pub seed: u64,
    pub field: String,
    pub truncation: Option<String>,
}

/// Report envelope shared by every subcommand.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub config: Config,
    pub results: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report with the timing field removed, for determinism checks.
    pub fn without_timing(&self) -> Report {
        Report { timing_ms: None, ..self.clone() }
    }
}
