//! Powers of the radical of a family: spans of composites of
//! non-isomorphisms, their vanishing depth, and witness chains.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{analyze, Family, FamilyAnalysis};
use crate::homalg::{HomSpace, Morphism};
use crate::linalg::Subspace;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct RadicalProfile {
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    /// `dims[i][j][d] = dim rad^d(M_i, M_j)`, with `d = 0` the full Hom.
    pub dims: Vec<Vec<Vec<usize>>>,
    /// Smallest `d >= 1` with every `rad^d` zero, if reached by `d_max`.
    pub vanishing_depth: Option<usize>,
    pub d_max: usize,
    /// `spans[d-1][i][j]`: basis of `rad^d(M_i, M_j)`.
    spans: Vec<Vec<Vec<Vec<Morphism>>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileJson {
    pub members: Vec<String>,
    pub pairs: BTreeMap<String, Vec<usize>>,
    pub vanishing_depth: Option<usize>,
    pub d_max: usize,
}

fn span_in(hom: &HomSpace, maps: impl IntoIterator<Item = Morphism>) -> Result<Vec<Morphism>> {
    let coords: Vec<Vec<Scalar>> = maps
        .into_iter()
        .map(|f| hom.coordinates(&f).ok_or_else(|| Error::Inconclusive("composite left its Hom-space".into())))
        .collect::<Result<_>>()?;
    let s = Subspace::from_columns(hom.dim(), &coords);
    Ok(s.vectors().iter().map(|c| hom.combination(c)).collect())
}

/// `rad^1` is the non-isomorphism subspace; `rad^{d+1}(i, j)` is spanned by
/// `g ∘ f` with `f` in `rad^d(i, k)` and `g` in `rad^1(k, j)`.
pub fn radical_profile(a: &FamilyAnalysis, d_max: usize) -> Result<RadicalProfile> {
    let n = a.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let rad1: Vec<Vec<Vec<Morphism>>> =
        (0..n).map(|i| (0..n).map(|j| a.noniso(i, j).basis().to_vec()).collect()).collect();
    let mut spans = vec![rad1];
    while spans.len() < d_max && spans.last().expect("nonempty").iter().flatten().any(|b| !b.is_empty()) {
        let prev = spans.last().expect("nonempty");
        let flat: Vec<Vec<Morphism>> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let composites = (0..n).flat_map(|k| {
                    let (first, second) = (&prev[i][k], &spans[0][k][j]);
                    first.iter().flat_map(move |f| second.iter().map(move |g| g.compose(f).expect("composable")))
                });
                let next = span_in(a.hom(i, j), composites.collect::<Vec<_>>())?;
                // rad^{d+1} must sit inside rad^d
                let within = span_in(a.hom(i, j), prev[i][j].iter().chain(&next).cloned())?;
                if within.len() != prev[i][j].len() {
                    return Err(Error::Inconclusive("radical powers are not descending".into()));
                }
                Ok(next)
            })
            .collect::<Result<_>>()?;
        spans.push(flat.chunks(n).map(<[Vec<Morphism>]>::to_vec).collect());
    }
    let vanishing_depth = spans.iter().position(|level| level.iter().flatten().all(Vec::is_empty)).map(|p| p + 1);
    let dims = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| std::iter::once(a.hom(i, j).dim()).chain(spans.iter().map(|l| l[i][j].len())).collect())
                .collect()
        })
        .collect();
    let fam = a.family();
    Ok(RadicalProfile {
        indices: fam.indices(),
        labels: fam.members().iter().map(|m| m.label.clone()).collect(),
        dims,
        vanishing_depth,
        d_max,
        spans,
    })
}

impl RadicalProfile {
    /// `dim rad^d(M_i, M_j)` by member position; zero beyond the computed depth.
    pub fn dim(&self, i: usize, j: usize, d: usize) -> usize {
        self.dims[i][j].get(d).copied().unwrap_or(0)
    }

    pub fn basis(&self, i: usize, j: usize, d: usize) -> &[Morphism] {
        assert!(d >= 1);
        self.spans.get(d - 1).map_or(&[], |l| &l[i][j])
    }

    pub fn to_json(&self) -> ProfileJson {
        let mut pairs = BTreeMap::new();
        for (i, a) in self.indices.iter().enumerate() {
            for (j, b) in self.indices.iter().enumerate() {
                pairs.insert(format!("{a}->{b}"), self.dims[i][j].clone());
            }
        }
        ProfileJson { members: self.labels.clone(), pairs, vanishing_depth: self.vanishing_depth, d_max: self.d_max }
    }
}

/// Profile of the dual family: left vanishing of the family is right
/// vanishing of its duals.
pub fn left_profile(family: &Family, d_max: usize) -> Result<RadicalProfile> {
    radical_profile(&analyze(&family.dual())?, d_max)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HaradaSaiReport {
    pub length_bound: usize,
    pub max_length: usize,
    pub bound: usize,
    pub depth: Option<usize>,
    pub pass: bool,
}

/// Compares the vanishing depth with `2^b - 1`. The profile is computed one
/// level past the bound so a failure is observable.
pub fn harada_sai_check(a: &FamilyAnalysis, b: usize) -> Result<HaradaSaiReport> {
    if b == 0 || b >= 20 {
        return Err(Error::InvalidArgument(format!("length bound {b} outside 1..20")));
    }
    let max_length = a.family().members().iter().map(|m| m.rep.length()).max().unwrap_or(0);
    if max_length > b {
        return Err(Error::InvalidArgument(format!("a member has length {max_length} > {b}")));
    }
    let bound = (1usize << b) - 1;
    let profile = radical_profile(a, bound + 1)?;
    let depth = profile.vanishing_depth;
    Ok(HaradaSaiReport { length_bound: b, max_length, bound, depth, pass: depth.is_some_and(|d| d <= bound) })
}

#[derive(Clone, Debug)]
pub struct WitnessChain {
    /// Member indices visited, starting with the start member.
    pub indices: Vec<usize>,
    pub morphisms: Vec<Morphism>,
    /// `x` followed by its image after each step; all nonzero.
    pub trail: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessJson {
    pub indices: Vec<usize>,
    pub morphisms: Vec<crate::homalg::MorphismJson>,
    pub trail: Vec<Vec<Scalar>>,
}

impl WitnessChain {
    pub fn to_json(&self, vertices: &[String]) -> WitnessJson {
        WitnessJson {
            indices: self.indices.clone(),
            morphisms: self.morphisms.iter().map(|f| f.to_json(vertices)).collect(),
            trail: self.trail.clone(),
        }
    }
}

struct Search<'a> {
    profile: &'a RadicalProfile,
    distinct: bool,
    dead: HashSet<(usize, Vec<Scalar>, usize)>,
}

impl Search<'_> {
    fn run(&mut self, k: usize, x: &[Scalar], left: usize, visited: &mut Vec<usize>, steps: &mut Vec<(usize, Morphism, Vec<Scalar>)>) -> bool {
        if left == 0 {
            return true;
        }
        let key = (k, x.to_vec(), left);
        if !self.distinct && self.dead.contains(&key) {
            return false;
        }
        let n = self.profile.indices.len();
        for j in 0..n {
            if self.distinct && visited.contains(&j) {
                continue;
            }
            for f in self.profile.basis(k, j, 1) {
                let y = f.apply(x);
                if y.iter().all(Scalar::is_zero) {
                    continue;
                }
                visited.push(j);
                steps.push((j, f.clone(), y.clone()));
                if self.run(j, &y, left - 1, visited, steps) {
                    return true;
                }
                steps.pop();
                visited.pop();
            }
        }
        if !self.distinct {
            self.dead.insert(key);
        }
        false
    }
}

/// A chain of `d` basis non-isomorphisms starting at member position
/// `start` whose composite does not kill `x`. By multilinearity, absence
/// means every composite of `d` non-isomorphisms kills `x`. With `distinct`
/// the chain visits pairwise different members.
pub fn right_witness(profile: &RadicalProfile, start: usize, x: &[Scalar], d: usize, distinct: bool) -> Option<WitnessChain> {
    if x.iter().all(Scalar::is_zero) {
        return None;
    }
    let mut search = Search { profile, distinct, dead: HashSet::new() };
    let mut visited = vec![start];
    let mut steps = Vec::new();
    if !search.run(start, x, d, &mut visited, &mut steps) {
        return None;
    }
    let mut indices = vec![profile.indices[start]];
    let mut trail = vec![x.to_vec()];
    let mut morphisms = Vec::new();
    for (j, f, y) in steps {
        indices.push(profile.indices[j]);
        morphisms.push(f);
        trail.push(y);
    }
    Some(WitnessChain { indices, morphisms, trail })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representation::{kronecker_regular, Eigenvalue};

    fn preinj(n: usize) -> FamilyAnalysis {
        analyze(&Family::preinjective(1..=n).unwrap()).unwrap()
    }

    #[test]
    fn profile_of_first_preinjectives() {
        let p = radical_profile(&preinj(3), 10).unwrap();
        assert_eq!(p.dim(1, 0, 1), 2);
        assert_eq!(p.dim(2, 1, 1), 2);
        assert_eq!(p.dim(2, 0, 1), 3);
        for i in 0..3 {
            assert_eq!(p.dim(i, i, 1), 0);
        }
        assert_eq!(p.dim(2, 0, 2), 3);
        assert_eq!(p.vanishing_depth, Some(3));
        let json = p.to_json();
        assert_eq!(json.pairs["3->1"], vec![3, 3, 3, 0]);
    }

    #[test]
    fn singleton_profiles() {
        let p = radical_profile(&analyze(&Family::preinjective(2..=2).unwrap()).unwrap(), 5).unwrap();
        assert_eq!(p.vanishing_depth, Some(1));
        let r = Family::from_reps(vec![kronecker_regular(2, &Eigenvalue::Finite(Scalar::zero())).unwrap()]).unwrap();
        let p = radical_profile(&analyze(&r).unwrap(), 5).unwrap();
        assert_eq!(p.dims[0][0], vec![2, 1, 0]);
        assert_eq!(p.vanishing_depth, Some(2));
    }

    #[test]
    fn harada_sai_examples() {
        let r = harada_sai_check(&preinj(3), 5).unwrap();
        assert_eq!((r.depth, r.bound, r.pass), (Some(3), 31, true));
        let s = harada_sai_check(&analyze(&Family::preinjective(1..=1).unwrap()).unwrap(), 1).unwrap();
        assert_eq!((s.depth, s.pass), (Some(1), true));
        assert!(harada_sai_check(&preinj(3), 4).is_err());
    }

    #[test]
    fn witness_examples() {
        let p = radical_profile(&preinj(3), 10).unwrap();
        // top generator of I_3: first basis vector at vertex 1
        let x: Vec<Scalar> = (0..5).map(|i| if i == 0 { Scalar::one() } else { Scalar::zero() }).collect();
        let w = right_witness(&p, 2, &x, 2, false).unwrap();
        assert_eq!(w.indices, vec![3, 2, 1]);
        assert!(w.trail.iter().all(|v| v.iter().any(|c| !c.is_zero())));
        assert!(right_witness(&p, 2, &x, 3, false).is_none());
        // socle vector of I_2 is killed by both maps to I_1
        let soc = vec![Scalar::zero(), Scalar::zero(), Scalar::one()];
        assert!(right_witness(&p, 1, &soc, 1, false).is_none());
    }

    #[test]
    fn left_profile_of_preprojectives() {
        let fam = Family::preprojective(1..=3).unwrap();
        let left = left_profile(&fam, 10).unwrap();
        assert_eq!(left.vanishing_depth, Some(3));
        let lambdas = [Eigenvalue::Finite(Scalar::zero()), Eigenvalue::Finite(Scalar::one())];
        let reg = Family::regular(1, &lambdas).unwrap();
        let right = radical_profile(&analyze(&reg).unwrap(), 5).unwrap();
        assert_eq!(left_profile(&reg, 5).unwrap().vanishing_depth, right.vanishing_depth);
        assert_eq!(right.vanishing_depth, Some(1));
    }

    #[test]
    fn dual_profile_transposes() {
        let fam = Family::preinjective(1..=4).unwrap();
        let right = radical_profile(&analyze(&fam).unwrap(), 8).unwrap();
        let left = left_profile(&fam, 8).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                for d in 0..5 {
                    assert_eq!(right.dim(i, j, d), left.dim(j, i, d));
                }
            }
        }
    }
}
