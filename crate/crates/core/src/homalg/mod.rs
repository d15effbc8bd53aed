//! Hom-spaces, endomorphism rings and their radicals, isomorphism tests and
//! indecomposable decomposition.

mod endo;
mod fitting;
mod iso;

pub use endo::{end_ring, jacobson_radical, EndoRing, Locality};
pub use fitting::{characteristic_polynomial, indecompose, rational_roots};
pub use iso::{are_isomorphic, are_isomorphic_with, iso_from_parts, noniso_from_parts, noniso_subspace, IsoCertificate, IsoSearch, NonIsoReason};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{modp, CoordinateMap, Field, Mat};
use crate::representation::Representation;
use crate::scalar::Scalar;

/// A tuple of vertex matrices `f_v : M_v -> N_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    maps: Vec<Mat>,
}

impl Morphism {
    pub fn new(maps: Vec<Mat>) -> Morphism {
        Morphism { maps }
    }

    pub fn identity(rep: &Representation) -> Morphism {
        Morphism { maps: rep.dims().iter().map(|&d| Mat::identity(d)).collect() }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Morphism {
        Morphism { maps: source.dims().iter().zip(target.dims()).map(|(&s, &t)| Mat::zeros(t, s)).collect() }
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn source_dims(&self) -> Vec<usize> {
        self.maps.iter().map(Mat::cols).collect()
    }

    pub fn target_dims(&self) -> Vec<usize> {
        self.maps.iter().map(Mat::rows).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Mat::is_zero)
    }

    /// Checks `f_t M_a = N_a f_s` for every arrow.
    pub fn is_homomorphism(&self, source: &Representation, target: &Representation) -> bool {
        if self.source_dims() != source.dims() || self.target_dims() != target.dims() {
            return false;
        }
        let q = source.presentation().quiver();
        q.arrows().iter().enumerate().all(|(i, a)| {
            self.maps[a.target].mul(source.arrow_matrix(i)) == target.arrow_matrix(i).mul(&self.maps[a.source])
        })
    }

    /// `self ∘ inner` (apply `inner` first).
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if self.source_dims() != inner.target_dims() {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose: outer source {:?}, inner target {:?}",
                self.source_dims(),
                inner.target_dims()
            )));
        }
        Ok(Morphism { maps: self.maps.iter().zip(&inner.maps).map(|(a, b)| a.mul(b)).collect() })
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        Morphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Morphism {
        Morphism { maps: self.maps.iter().map(|a| a.scale(s)).collect() }
    }

    /// Every vertex matrix square and invertible.
    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(Mat::is_invertible)
    }

    pub fn inverse(&self) -> Option<Morphism> {
        self.maps.iter().map(Mat::inverse).collect::<Option<Vec<_>>>().map(Morphism::new)
    }

    /// Block-diagonal matrix on the total spaces.
    pub fn total_matrix(&self) -> Mat {
        Mat::block_diag(&self.maps.iter().collect::<Vec<_>>())
    }

    /// Applies the morphism to a total-space vector.
    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::new();
        let mut off = 0;
        for m in &self.maps {
            out.extend(m.mul_vec(&x[off..off + m.cols()]));
            off += m.cols();
        }
        out
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        self.maps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    fn unflatten(v: &[Scalar], source: &[usize], target: &[usize]) -> Morphism {
        let mut off = 0;
        let maps = source
            .iter()
            .zip(target)
            .map(|(&s, &t)| {
                let m = Mat::from_vec(t, s, v[off..off + s * t].to_vec()).expect("sizes match");
                off += s * t;
                m
            })
            .collect();
        Morphism { maps }
    }

    pub fn to_json(&self, vertices: &[String]) -> MorphismJson {
        MorphismJson { maps: vertices.iter().cloned().zip(self.maps.iter().map(Mat::to_rows)).collect() }
    }
}

/// `{"maps":{vertex:[["p/q",...],...]}}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub maps: BTreeMap<String, Vec<Vec<Scalar>>>,
}

/// A subspace of `Hom(M, N)` with an explicit basis.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source_dims: Vec<usize>,
    target_dims: Vec<usize>,
    basis: Vec<Morphism>,
    coords: CoordinateMap,
}

impl HomSpace {
    /// Fails if the basis is linearly dependent or has the wrong shapes.
    pub fn from_basis(source_dims: Vec<usize>, target_dims: Vec<usize>, basis: Vec<Morphism>) -> Result<HomSpace> {
        for f in &basis {
            if f.source_dims() != source_dims || f.target_dims() != target_dims {
                return Err(Error::DimensionMismatch("basis morphism has the wrong shape".into()));
            }
        }
        let flat_len: usize = source_dims.iter().zip(&target_dims).map(|(s, t)| s * t).sum();
        let cols: Vec<Vec<Scalar>> = basis.iter().map(Morphism::flatten).collect();
        let coords = CoordinateMap::new(Mat::from_columns(flat_len, &cols))?;
        Ok(HomSpace { source_dims, target_dims, basis, coords })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Morphism] {
        &self.basis
    }

    pub fn source_dims(&self) -> &[usize] {
        &self.source_dims
    }

    pub fn target_dims(&self) -> &[usize] {
        &self.target_dims
    }

    pub fn coordinates(&self, f: &Morphism) -> Option<Vec<Scalar>> {
        if f.source_dims() != self.source_dims || f.target_dims() != self.target_dims {
            return None;
        }
        self.coords.coordinates(&f.flatten())
    }

    pub fn contains(&self, f: &Morphism) -> bool {
        self.coordinates(f).is_some()
    }

    pub fn combination(&self, coeffs: &[Scalar]) -> Morphism {
        assert_eq!(coeffs.len(), self.basis.len());
        let mut acc = Morphism::new(
            self.source_dims.iter().zip(&self.target_dims).map(|(&s, &t)| Mat::zeros(t, s)).collect(),
        );
        for (c, f) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&f.scale(c));
            }
        }
        acc
    }
}

fn check_presentations(m: &Representation, n: &Representation) -> Result<()> {
    if !m.same_presentation(n) {
        return Err(Error::PresentationMismatch);
    }
    Ok(())
}

/// Coefficient matrix of `f_t M_a - N_a f_s = 0` in the entries of the
/// `f_v` (vertex blocks in order, each row-major).
fn commuting_system(m: &Representation, n: &Representation) -> Mat {
    let q = m.presentation().quiver();
    let (md, nd) = (m.dims(), n.dims());
    let mut offsets = Vec::with_capacity(md.len());
    let mut unknowns = 0;
    for v in 0..md.len() {
        offsets.push(unknowns);
        unknowns += md[v] * nd[v];
    }
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * md[v] + c;

    let mut rows = Vec::new();
    for (i, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let ma = m.arrow_matrix(i);
        let na = n.arrow_matrix(i);
        for r in 0..nd[t] {
            for c in 0..md[s] {
                let mut row = vec![Scalar::zero(); unknowns];
                // (f_t M_a)[r][c] = sum_k f_t[r][k] M_a[k][c]
                for k in 0..md[t] {
                    let x = &ma[(k, c)];
                    if !x.is_zero() {
                        row[var(t, r, k)] += x;
                    }
                }
                // (N_a f_s)[r][c] = sum_k N_a[r][k] f_s[k][c]
                for k in 0..nd[s] {
                    let x = &na[(r, k)];
                    if !x.is_zero() {
                        row[var(s, k, c)] -= x;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    Mat::from_rows(rows, unknowns).expect("rows have the unknown count")
}

/// Basis of `Hom(m, n)`: the nullspace of the commuting-square system.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<HomSpace> {
    check_presentations(m, n)?;
    let system = commuting_system(m, n);
    let basis = system
        .kernel_vectors()
        .into_iter()
        .map(|v| Morphism::unflatten(&v, m.dims(), n.dims()))
        .collect();
    HomSpace::from_basis(m.dims().to_vec(), n.dims().to_vec(), basis)
}

/// `dim Hom(m, n)` over the chosen field; over `F_p` the rational arrow
/// matrices are reduced modulo `p`.
pub fn hom_dim(m: &Representation, n: &Representation, field: Field) -> Result<usize> {
    check_presentations(m, n)?;
    let system = commuting_system(m, n);
    match field {
        Field::Rationals => Ok(system.cols() - system.rank()),
        Field::Prime(p) => modp::nullity(&system, p),
    }
}

/// `f ∘ g`. Only shapes are checked.
pub fn compose(f: &Morphism, g: &Morphism) -> Result<Morphism> {
    f.compose(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::kronecker;
    use crate::representation::{
        direct_sum, kronecker_preinjective as inj, kronecker_preprojective as proj, kronecker_regular, Eigenvalue,
    };

    fn s1() -> Representation {
        inj(1).unwrap()
    }

    fn s2() -> Representation {
        proj(1).unwrap()
    }

    #[test]
    fn hom_examples() {
        assert_eq!(hom_basis(&s1(), &s1()).unwrap().dim(), 1);
        assert_eq!(hom_basis(&s2(), &s1()).unwrap().dim(), 0);
        assert_eq!(hom_basis(&inj(2).unwrap(), &s1()).unwrap().dim(), 2);
    }

    #[test]
    fn hom_basis_elements_commute() {
        let reps = [inj(3).unwrap(), proj(3).unwrap(), kronecker_regular(2, &Eigenvalue::Finite(Scalar::zero())).unwrap()];
        for m in &reps {
            for n in &reps {
                let h = hom_basis(m, n).unwrap();
                for f in h.basis() {
                    assert!(f.is_homomorphism(m, n));
                }
            }
        }
    }

    #[test]
    fn compose_examples() {
        let i3 = inj(3).unwrap();
        let i2 = inj(2).unwrap();
        let i1 = inj(1).unwrap();
        let h32 = hom_basis(&i3, &i2).unwrap();
        let f = &h32.basis()[0];
        assert_eq!(&compose(f, &Morphism::identity(&i3)).unwrap(), f);
        assert_eq!(&compose(&Morphism::identity(&i2), f).unwrap(), f);
        let h31 = hom_basis(&i3, &i1).unwrap();
        for g in hom_basis(&i2, &i1).unwrap().basis() {
            for f in hom_basis(&i3, &i2).unwrap().basis() {
                let c = compose(g, f).unwrap();
                assert!(h31.contains(&c));
                assert!(c.is_homomorphism(&i3, &i1));
            }
        }
        assert!(compose(f, f).is_err());
    }

    #[test]
    fn is_isomorphism_examples() {
        let i2 = inj(2).unwrap();
        assert!(Morphism::identity(&i2).is_isomorphism());
        for f in hom_basis(&i2, &s1()).unwrap().basis() {
            assert!(!f.is_isomorphism());
        }
        assert!(!Morphism::zero(&i2, &i2).is_isomorphism());
    }

    #[test]
    fn end_of_direct_sum_dimension_formula() {
        let k = kronecker();
        let pairs = [(inj(1).unwrap(), inj(3).unwrap()), (proj(2).unwrap(), inj(2).unwrap()), (s2(), proj(3).unwrap())];
        for (m, n) in pairs {
            let sum = direct_sum(&k, &[m.clone(), n.clone()]).unwrap().sum;
            let lhs = hom_basis(&sum, &sum).unwrap().dim();
            let rhs = hom_basis(&m, &m).unwrap().dim()
                + hom_basis(&n, &n).unwrap().dim()
                + hom_basis(&m, &n).unwrap().dim()
                + hom_basis(&n, &m).unwrap().dim();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn hom_dim_over_prime_field() {
        let i2 = inj(2).unwrap();
        assert_eq!(hom_dim(&i2, &s1(), Field::Prime(5)).unwrap(), 2);
        // R_1(0) and R_1(5) are orthogonal over Q but coincide over F_5
        let r0 = kronecker_regular(1, &Eigenvalue::Finite(Scalar::zero())).unwrap();
        let r5 = kronecker_regular(1, &Eigenvalue::Finite(Scalar::from_int(5))).unwrap();
        assert_eq!(hom_dim(&r0, &r5, Field::Rationals).unwrap(), 0);
        assert_eq!(hom_dim(&r0, &r5, Field::Prime(5)).unwrap(), 1);
    }

    #[test]
    fn presentation_mismatch() {
        let right = crate::representation::kronecker_preinjective_right(2).unwrap();
        assert!(matches!(hom_basis(&right, &s1()), Err(Error::PresentationMismatch)));
    }

    #[test]
    fn morphism_apply_matches_total_matrix() {
        let i3 = inj(3).unwrap();
        let i2 = inj(2).unwrap();
        let f = hom_basis(&i3, &i2).unwrap().combination(&[Scalar::from_int(2), Scalar::new(-1, 3)]);
        let x: Vec<Scalar> = (1..=5).map(Scalar::from_int).collect();
        assert_eq!(f.apply(&x), f.total_matrix().mul_vec(&x));
    }
}
