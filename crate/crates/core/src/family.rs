//! Finite families of indecomposable modules and the pairwise data shared by
//! the endosocle and radical-profile computations.

use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homalg::{end_ring, hom_basis, iso_from_parts, noniso_from_parts, EndoRing, HomSpace, IsoCertificate, IsoSearch, Locality};
use crate::representation::{
    dual, kronecker_preinjective, kronecker_preprojective, kronecker_regular, Eigenvalue, Representation,
};

#[derive(Clone, Debug)]
pub struct Member {
    /// Index reported in supports and tables.
    pub index: usize,
    pub label: String,
    pub rep: Representation,
}

/// An ordered finite family. Boundary indices mark members whose values are
/// artifacts of truncating an infinite family.
#[derive(Clone, Debug)]
pub struct Family {
    members: Vec<Member>,
    boundary: Vec<usize>,
}

impl Family {
    pub fn new(members: Vec<Member>, boundary: Vec<usize>) -> Result<Family> {
        let mut seen: Vec<usize> = members.iter().map(|m| m.index).collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("family indices must be distinct".into()));
        }
        if let Some(w) = members.windows(2).find(|w| !w[0].rep.same_presentation(&w[1].rep)) {
            return Err(Error::InvalidArgument(format!("{} and {} use different algebras", w[0].label, w[1].label)));
        }
        let boundary = boundary.into_iter().filter(|b| seen.binary_search(b).is_ok()).collect();
        Ok(Family { members, boundary })
    }

    /// Members indexed `1..` in the given order, no boundary.
    pub fn from_reps(reps: Vec<Representation>) -> Result<Family> {
        let members =
            reps.into_iter().enumerate().map(|(i, rep)| Member { index: i + 1, label: format!("M{}", i + 1), rep }).collect();
        Family::new(members, Vec::new())
    }

    /// Preinjectives `I_n` for `n` in the range; the last index is boundary.
    pub fn preinjective(range: RangeInclusive<usize>) -> Result<Family> {
        Family::indexed(range, "I", kronecker_preinjective)
    }

    /// Preprojectives `P_n` for `n` in the range; the last index is boundary.
    pub fn preprojective(range: RangeInclusive<usize>) -> Result<Family> {
        Family::indexed(range, "P", kronecker_preprojective)
    }

    fn indexed(range: RangeInclusive<usize>, prefix: &str, build: fn(usize) -> Result<Representation>) -> Result<Family> {
        if range.is_empty() {
            return Err(Error::InvalidArgument("empty index range".into()));
        }
        let last = *range.end();
        let members = range
            .map(|n| Ok(Member { index: n, label: format!("{prefix}{n}"), rep: build(n)? }))
            .collect::<Result<Vec<_>>>()?;
        Family::new(members, vec![last])
    }

    /// Regular modules `R_n(λ)` for the listed points, indexed `1..` in list
    /// order. Parameter families have no boundary.
    pub fn regular(n: usize, lambdas: &[Eigenvalue]) -> Result<Family> {
        if lambdas.is_empty() {
            return Err(Error::InvalidArgument("empty parameter list".into()));
        }
        let members = lambdas
            .iter()
            .enumerate()
            .map(|(i, l)| Ok(Member { index: i + 1, label: format!("R{n}({l})"), rep: kronecker_regular(n, l)? }))
            .collect::<Result<Vec<_>>>()?;
        Family::new(members, Vec::new())
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn reps(&self) -> Vec<Representation> {
        self.members.iter().map(|m| m.rep.clone()).collect()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.index).collect()
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn is_boundary(&self, index: usize) -> bool {
        self.boundary.contains(&index)
    }

    pub fn position(&self, index: usize) -> Option<usize> {
        self.members.iter().position(|m| m.index == index)
    }

    /// Member-wise duals over the opposite algebra, same indices.
    pub fn dual(&self) -> Family {
        let members = self
            .members
            .iter()
            .map(|m| Member { index: m.index, label: format!("D{}", m.label), rep: dual(&m.rep) })
            .collect();
        Family { members, boundary: self.boundary.clone() }
    }

    /// The members at the given positions, in order.
    pub fn select(&self, positions: &[usize]) -> Family {
        let members: Vec<Member> = positions.iter().map(|&p| self.members[p].clone()).collect();
        let boundary = self.boundary.iter().copied().filter(|b| members.iter().any(|m| m.index == *b)).collect();
        Family { members, boundary }
    }
}

/// Pairwise Hom-spaces, isomorphism certificates and non-isomorphism
/// subspaces of a family whose members all have local endomorphism rings.
#[derive(Clone, Debug)]
pub struct FamilyAnalysis {
    family: Family,
    ends: Vec<EndoRing>,
    /// `homs[i][j] = Hom(M_i, M_j)`.
    homs: Vec<Vec<HomSpace>>,
    certs: Vec<Vec<IsoCertificate>>,
    noniso: Vec<Vec<HomSpace>>,
}

fn locality_error(e: &EndoRing, label: &str) -> Option<Error> {
    match e.is_local() {
        Locality::Local => None,
        Locality::NotLocal => Some(Error::NotLocal { member: label.to_string() }),
        Locality::Inconclusive => Some(Error::LocalityInconclusive { member: label.to_string() }),
    }
}

pub fn analyze(family: &Family) -> Result<FamilyAnalysis> {
    analyze_with(family, IsoSearch::default())
}

pub fn analyze_with(family: &Family, search: IsoSearch) -> Result<FamilyAnalysis> {
    let members = family.members();
    let n = members.len();
    let ends: Vec<EndoRing> = members.par_iter().map(|m| end_ring(&m.rep)).collect::<Result<_>>()?;
    if let Some(err) = ends.iter().zip(members).find_map(|(e, m)| locality_error(e, &m.label)) {
        return Err(err);
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let flat: Vec<HomSpace> = pairs
        .par_iter()
        .map(|&(i, j)| if i == j { Ok(ends[i].hom().clone()) } else { hom_basis(&members[i].rep, &members[j].rep) })
        .collect::<Result<_>>()?;
    let homs: Vec<Vec<HomSpace>> = flat.chunks(n.max(1)).map(<[HomSpace]>::to_vec).collect();

    let upper: Vec<((usize, usize), IsoCertificate)> = pairs
        .par_iter()
        .filter(|&&(i, j)| i <= j)
        .map(|&(i, j)| {
            let (m, k) = (&members[i].rep, &members[j].rep);
            ((i, j), iso_from_parts(m, k, &homs[i][j], &homs[j][i], &ends[i], search))
        })
        .collect();
    let mut certs = vec![vec![IsoCertificate::PresumedNo; n]; n];
    for ((i, j), c) in upper {
        certs[j][i] = c.swapped();
        certs[i][j] = c;
    }

    let flat: Vec<HomSpace> = pairs
        .par_iter()
        .map(|&(i, j)| noniso_from_parts(&members[i].rep, &members[j].rep, &homs[i][j], &ends[i], &certs[i][j]))
        .collect::<Result<_>>()?;
    let noniso = flat.chunks(n.max(1)).map(<[HomSpace]>::to_vec).collect();
    Ok(FamilyAnalysis { family: family.clone(), ends, homs, certs, noniso })
}

impl FamilyAnalysis {
    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn end(&self, i: usize) -> &EndoRing {
        &self.ends[i]
    }

    pub fn hom(&self, i: usize, j: usize) -> &HomSpace {
        &self.homs[i][j]
    }

    pub fn certificate(&self, i: usize, j: usize) -> &IsoCertificate {
        &self.certs[i][j]
    }

    /// Non-isomorphisms `M_i -> M_j`.
    pub fn noniso(&self, i: usize, j: usize) -> &HomSpace {
        &self.noniso[i][j]
    }

    /// The analysis of the sub-family at the given positions; pairwise data is
    /// reused unchanged.
    pub fn restrict(&self, positions: &[usize]) -> FamilyAnalysis {
        let pick = |table: &Vec<Vec<HomSpace>>| -> Vec<Vec<HomSpace>> {
            positions.iter().map(|&i| positions.iter().map(|&j| table[i][j].clone()).collect()).collect()
        };
        FamilyAnalysis {
            family: self.family.select(positions),
            ends: positions.iter().map(|&i| self.ends[i].clone()).collect(),
            homs: pick(&self.homs),
            certs: positions.iter().map(|&i| positions.iter().map(|&j| self.certs[i][j].clone()).collect()).collect(),
            noniso: pick(&self.noniso),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn builtin_families() {
        let f = Family::preinjective(2..=5).unwrap();
        assert_eq!(f.indices(), vec![2, 3, 4, 5]);
        assert_eq!(f.boundary(), &[5]);
        assert_eq!(f.members()[1].label, "I3");
        let r = Family::regular(1, &[Eigenvalue::Finite(Scalar::zero()), Eigenvalue::Infinity]).unwrap();
        assert!(r.boundary().is_empty());
        assert_eq!(r.members()[1].label, "R1(inf)");
        assert!(Family::preprojective(3..=2).is_err());
    }

    #[test]
    fn analysis_of_preinjectives() {
        let a = analyze(&Family::preinjective(1..=4).unwrap()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i >= j { i - j + 1 } else { 0 };
                assert_eq!(a.hom(i, j).dim(), expect);
                assert_eq!(a.certificate(i, j).is_iso(), i == j);
                let non = if i == j { 0 } else { expect };
                assert_eq!(a.noniso(i, j).dim(), non);
            }
        }
        let sub = a.restrict(&[1, 3]);
        assert_eq!(sub.family().indices(), vec![2, 4]);
        assert_eq!(sub.family().boundary(), &[4]);
        assert_eq!(sub.hom(1, 0).dim(), 3);
    }

    #[test]
    fn rejects_decomposable_members() {
        let i1 = kronecker_preinjective(1).unwrap();
        let s = crate::representation::direct_sum(&crate::quiver::kronecker(), &[i1.clone(), i1]).unwrap().sum;
        let f = Family::from_reps(vec![s]).unwrap();
        assert!(matches!(analyze(&f), Err(Error::NotLocal { .. })));
    }

    #[test]
    fn repeated_member_uses_radical_composites() {
        let i2 = kronecker_preinjective(2).unwrap();
        let r = kronecker_regular(2, &Eigenvalue::Finite(Scalar::one())).unwrap();
        let f = Family::from_reps(vec![i2.clone(), i2, r.clone(), r]).unwrap();
        let a = analyze(&f).unwrap();
        assert!(a.certificate(0, 1).is_iso());
        assert_eq!(a.noniso(0, 1).dim(), 0);
        assert!(a.certificate(2, 3).is_iso());
        assert_eq!(a.noniso(2, 3).dim(), 1);
    }
}
