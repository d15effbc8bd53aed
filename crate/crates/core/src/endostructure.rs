//! Endosocles: common kernels of the radical of `End(M)` or of all
//! non-isomorphisms leaving a family member, and the series built from them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{analyze, Family, FamilyAnalysis};
use crate::homalg::{end_ring, Morphism};
use crate::linalg::{Mat, Subspace};
use crate::representation::{direct_sum, sub_from_family, Representation, SubspaceFamily};

/// Vertexwise common kernel of the given morphisms out of a module with
/// dimension vector `dims`.
pub fn common_kernel<'a>(dims: &[usize], maps: impl IntoIterator<Item = &'a Morphism>) -> SubspaceFamily {
    let mut stacks: Vec<Vec<&Mat>> = vec![Vec::new(); dims.len()];
    for f in maps {
        for (v, m) in f.maps().iter().enumerate() {
            stacks[v].push(m);
        }
    }
    SubspaceFamily::new(stacks.iter().zip(dims).map(|(s, &d)| Mat::vstack(s, d).kernel_basis()).collect())
}

/// Common kernel of `J(End m)`.
pub fn endosocle(m: &Representation) -> Result<SubspaceFamily> {
    let e = end_ring(m)?;
    Ok(common_kernel(m.dims(), &e.radical_morphisms()))
}

/// Endosocle of `m^k`.
pub fn power_endosocle(m: &Representation, k: usize) -> Result<SubspaceFamily> {
    let copies = vec![m.clone(); k];
    endosocle(&direct_sum(m.presentation(), &copies)?.sum)
}

#[derive(Clone, Debug)]
pub struct EndosocleReport {
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    /// `B_i` inside `M_i`, in member order.
    pub parts: Vec<SubspaceFamily>,
    pub support: Vec<usize>,
    pub boundary: Vec<usize>,
    pub total_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndosocleJson {
    pub members: Vec<String>,
    #[serde(rename = "B")]
    pub b: BTreeMap<usize, Vec<usize>>,
    pub support: Vec<usize>,
    pub boundary: Vec<usize>,
    pub total_dim: usize,
}

impl EndosocleReport {
    pub fn part(&self, index: usize) -> Option<&SubspaceFamily> {
        self.indices.iter().position(|&i| i == index).map(|p| &self.parts[p])
    }

    pub fn dim_at(&self, index: usize) -> usize {
        self.part(index).map_or(0, SubspaceFamily::total_dim)
    }

    /// Support with boundary indices removed.
    pub fn interior_support(&self) -> Vec<usize> {
        self.support.iter().copied().filter(|i| !self.boundary.contains(i)).collect()
    }

    /// Total dimension over non-boundary members.
    pub fn interior_dim(&self) -> usize {
        self.indices.iter().zip(&self.parts).filter(|(i, _)| !self.boundary.contains(i)).map(|(_, p)| p.total_dim()).sum()
    }

    pub fn to_json(&self) -> EndosocleJson {
        EndosocleJson {
            members: self.labels.clone(),
            b: self.indices.iter().copied().zip(self.parts.iter().map(SubspaceFamily::dims)).collect(),
            support: self.support.clone(),
            boundary: self.boundary.clone(),
            total_dim: self.total_dim,
        }
    }
}

/// `B_i` = common kernel of every non-isomorphism `M_i -> M_j`, `j` ranging
/// over the whole family.
pub fn family_endosocle(a: &FamilyAnalysis) -> EndosocleReport {
    let fam = a.family();
    let n = a.len();
    let parts: Vec<SubspaceFamily> = (0..n)
        .map(|i| {
            let maps = (0..n).flat_map(|j| a.noniso(i, j).basis());
            common_kernel(fam.members()[i].rep.dims(), maps)
        })
        .collect();
    let indices = fam.indices();
    let mut support: Vec<usize> =
        indices.iter().zip(&parts).filter(|(_, p)| !p.is_zero()).map(|(&i, _)| i).collect();
    support.sort_unstable();
    EndosocleReport {
        labels: fam.members().iter().map(|m| m.label.clone()).collect(),
        total_dim: parts.iter().map(SubspaceFamily::total_dim).sum(),
        boundary: fam.boundary().to_vec(),
        indices,
        parts,
        support,
    }
}

/// [`family_endosocle`] after building the family analysis.
pub fn family_endosocle_of(family: &Family) -> Result<EndosocleReport> {
    Ok(family_endosocle(&analyze(family)?))
}

#[derive(Clone, Debug)]
pub struct SeriesStep {
    /// `(member index, term inside that member)` for every member touched.
    pub parts: Vec<(usize, SubspaceFamily)>,
    pub support: Vec<usize>,
    pub total_dim: usize,
}

#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub steps: Vec<SeriesStep>,
    /// Number of steps until the series stops.
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesJson {
    pub supports: Vec<Vec<usize>>,
    pub dims: Vec<usize>,
    pub length: usize,
}

impl SeriesReport {
    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.steps.iter().map(|s| s.support.clone()).collect()
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            supports: self.supports(),
            dims: self.steps.iter().map(|s| s.total_dim).collect(),
            length: self.length,
        }
    }
}

/// Ascending endosocle series of `m` over `S = End(m)`: each term is the set
/// of `x` with `J(S) x` inside the previous term.
pub fn endosocle_series(m: &Representation) -> Result<SeriesReport> {
    let e = end_ring(m)?;
    let radical = e.radical_morphisms();
    let mut term = SubspaceFamily::zero(m);
    let mut steps = Vec::new();
    loop {
        let next = SubspaceFamily::new(
            (0..m.dims().len())
                .map(|v| {
                    radical.iter().try_fold(Subspace::full(m.dims()[v]), |acc, f| acc.intersect(&term.parts()[v].preimage(&f.maps()[v])))
                })
                .collect::<Result<_>>()?,
        );
        if next == term {
            break;
        }
        let total = next.total_dim();
        steps.push(SeriesStep { parts: vec![(1, next.clone())], support: vec![1], total_dim: total });
        term = next;
        if steps.len() > m.total_dim() {
            return Err(Error::Inconclusive("endosocle series failed to stabilize".into()));
        }
    }
    Ok(SeriesReport { length: steps.len(), steps })
}

/// Relative endosocle series: repeatedly take the family endosocle of the
/// remaining members and remove its support. The recorded terms are checked
/// to form a direct sum inside the full family's direct sum.
pub fn relative_endosocle_series(a: &FamilyAnalysis) -> Result<SeriesReport> {
    let fam = a.family();
    let mut remaining: Vec<usize> = (0..a.len()).collect();
    let mut steps = Vec::new();
    while !remaining.is_empty() {
        let report = family_endosocle(&a.restrict(&remaining));
        if report.support.is_empty() {
            break;
        }
        let parts: Vec<(usize, SubspaceFamily)> = report
            .indices
            .iter()
            .zip(&report.parts)
            .filter(|(i, _)| report.support.contains(i))
            .map(|(&i, p)| (i, p.clone()))
            .collect();
        steps.push(SeriesStep { parts, support: report.support.clone(), total_dim: report.total_dim });
        remaining.retain(|&p| !report.support.contains(&fam.members()[p].index));
    }
    verify_direct(fam, &steps)?;
    Ok(SeriesReport { length: steps.len(), steps })
}

fn verify_direct(fam: &Family, steps: &[SeriesStep]) -> Result<()> {
    let reps = fam.reps();
    let Some(first) = reps.first() else { return Ok(()) };
    let ds = direct_sum(first.presentation(), &reps)?;
    let mut acc = SubspaceFamily::zero(&ds.sum);
    let mut expected = 0;
    for step in steps {
        let families: Vec<SubspaceFamily> = fam
            .members()
            .iter()
            .map(|m| {
                step.parts.iter().find(|(i, _)| *i == m.index).map_or_else(|| SubspaceFamily::zero(&m.rep), |(_, p)| p.clone())
            })
            .collect();
        acc = acc.sum(&ds.assemble(&families)?)?;
        expected += step.total_dim;
    }
    if acc.total_dim() != expected {
        return Err(Error::Inconclusive("relative endosocle terms are not independent".into()));
    }
    Ok(())
}

/// The subrepresentation carried by an endosocle term.
pub fn endosocle_module(m: &Representation, term: &SubspaceFamily) -> Result<Representation> {
    sub_from_family(m, term)
}
