//! Finite matrix subgroups: the projection onto one column of the solution
//! set of a homogeneous system with algebra-element coefficients.

use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homalg::hom_basis;
use crate::linalg::{Mat, Subspace};
use crate::quiver::{AlgebraElement, AlgebraPresentation, Path, TermJson};
use crate::representation::{AlgebraRef, Representation};
use crate::scalar::Scalar;

/// A finite `I x J` matrix over the path algebra with a pointer column.
#[derive(Clone, Debug, PartialEq)]
pub struct PointedMatrix {
    presentation: Arc<AlgebraPresentation>,
    entries: Vec<Vec<AlgebraElement>>,
    cols: usize,
    pointer: usize,
}

impl PointedMatrix {
    pub fn new(presentation: Arc<AlgebraPresentation>, entries: Vec<Vec<AlgebraElement>>, pointer: usize) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        if cols == 0 {
            return Err(Error::InvalidArgument("pointed matrix needs at least one column".into()));
        }
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged pointed matrix".into()));
        }
        if pointer >= cols {
            return Err(Error::InvalidArgument(format!("pointer {pointer} outside {cols} columns")));
        }
        Ok(PointedMatrix { presentation, entries, cols, pointer })
    }

    pub fn presentation(&self) -> &Arc<AlgebraPresentation> {
        &self.presentation
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pointer(&self) -> usize {
        self.pointer
    }

    pub fn entries(&self) -> &[Vec<AlgebraElement>] {
        &self.entries
    }

    /// The same matrix with one more row.
    pub fn with_row(&self, row: Vec<AlgebraElement>) -> Result<Self> {
        let mut entries = self.entries.clone();
        entries.push(row);
        PointedMatrix::new(self.presentation.clone(), entries, self.pointer)
    }

    pub fn to_json(&self) -> PointedMatrixJson {
        PointedMatrixJson {
            algebra: algebra_ref(&self.presentation),
            entries: self.entries.iter().map(|r| r.iter().map(|e| self.presentation.element_to_json(e)).collect()).collect(),
            pointer: self.pointer,
        }
    }

    pub fn from_json(j: &PointedMatrixJson) -> Result<Self> {
        let pres = j.algebra.resolve()?;
        let entries = j
            .entries
            .iter()
            .map(|r| r.iter().map(|e| pres.element_from_json(e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PointedMatrix::new(pres, entries, j.pointer)
    }
}

fn algebra_ref(pres: &Arc<AlgebraPresentation>) -> AlgebraRef {
    if **pres == *crate::quiver::kronecker() {
        AlgebraRef::Named("kronecker".into())
    } else if **pres == *crate::quiver::kronecker_opposite() {
        AlgebraRef::Named("kronecker-op".into())
    } else {
        AlgebraRef::Explicit(pres.to_json())
    }
}

/// `{"algebra":..., "entries":[[[term,...],...],...], "pointer":α}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointedMatrixJson {
    pub algebra: AlgebraRef,
    pub entries: Vec<Vec<Vec<TermJson>>>,
    pub pointer: usize,
}

/// Projection onto the pointer block of `{X in M^J : sum_j a_ij X_j = 0}`.
pub fn evaluate(pm: &PointedMatrix, m: &Representation) -> Result<Subspace> {
    if **pm.presentation() != **m.presentation() {
        return Err(Error::PresentationMismatch);
    }
    let t = m.total_dim();
    let mut system = Mat::zeros(pm.rows() * t, pm.cols() * t);
    for (i, row) in pm.entries.iter().enumerate() {
        for (j, a) in row.iter().enumerate() {
            if !a.is_zero() {
                system.set_block(i * t, j * t, &a.act(m)?);
            }
        }
    }
    Ok(system.kernel_basis().project(pm.pointer * t, t))
}

/// `rM`, encoded as the pointed matrix `[[1, -r]]` at the first column.
pub fn image_subgroup(r: &AlgebraElement, m: &Representation) -> Result<Subspace> {
    let pres = m.presentation().clone();
    let pm = PointedMatrix::new(pres.clone(), vec![vec![AlgebraElement::identity(&pres), r.neg()]], 0)?;
    evaluate(&pm, m)
}

/// Whether every endomorphism of `m` maps `sub` into itself.
pub fn check_endo_invariant(sub: &Subspace, m: &Representation) -> Result<bool> {
    if sub.ambient_dim() != m.total_dim() {
        return Err(Error::AmbientMismatch { left: sub.ambient_dim(), right: m.total_dim() });
    }
    let end = hom_basis(m, m)?;
    Ok(end.basis().iter().all(|f| sub.image(&f.total_matrix()).is_subspace_of(sub).unwrap_or(false)))
}

/// Intersection of all inputs; fails on an empty list.
pub fn meet(subs: &[Subspace]) -> Result<Subspace> {
    let (first, rest) = subs.split_first().ok_or_else(|| Error::InvalidArgument("meet of no subspaces".into()))?;
    rest.iter().try_fold(first.clone(), |acc, s| acc.intersect(s))
}

/// An entry drawn uniformly from `0`, a vertex idempotent, an arrow, or a
/// sum of two arrows.
pub fn random_entry<R: Rng>(rng: &mut R, pres: &AlgebraPresentation) -> AlgebraElement {
    let q = pres.quiver();
    let arrow = |rng: &mut R| {
        let a = rng.random_range(0..q.arrows().len());
        AlgebraElement::from_path(Path::new(q, vec![a]).expect("single arrow"), Scalar::one())
    };
    match rng.random_range(0..4) {
        0 => AlgebraElement::zero(),
        1 => AlgebraElement::from_path(Path::trivial(rng.random_range(0..q.vertex_count())), Scalar::one()),
        2 if !q.arrows().is_empty() => arrow(rng),
        3 if !q.arrows().is_empty() => {
            let a = arrow(rng);
            a.add(&arrow(rng))
        }
        _ => AlgebraElement::identity(pres),
    }
}

pub fn random_pointed_matrix<R: Rng>(rng: &mut R, pres: &Arc<AlgebraPresentation>, rows: usize, cols: usize) -> PointedMatrix {
    let entries = (0..rows).map(|_| (0..cols).map(|_| random_entry(rng, pres)).collect()).collect();
    let pointer = rng.random_range(0..cols);
    PointedMatrix::new(pres.clone(), entries, pointer).expect("well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::kronecker;
    use crate::representation::{direct_sum, kronecker_preinjective as inj, kronecker_preprojective as proj};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pm(entries: Vec<Vec<AlgebraElement>>) -> PointedMatrix {
        PointedMatrix::new(kronecker(), entries, 0).unwrap()
    }

    fn alpha() -> AlgebraElement {
        AlgebraElement::arrow(&kronecker(), "alpha").unwrap()
    }

    fn beta() -> AlgebraElement {
        AlgebraElement::arrow(&kronecker(), "beta").unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let i2 = inj(2).unwrap();
        assert!(evaluate(&pm(vec![vec![AlgebraElement::identity(&kronecker())]]), &i2).unwrap().is_zero());
        assert!(evaluate(&pm(vec![vec![AlgebraElement::zero()]]), &i2).unwrap().is_full());
        assert_eq!(evaluate(&pm(vec![vec![alpha()]]), &i2).unwrap().dim(), 2);
    }

    #[test]
    fn image_examples() {
        let i2 = inj(2).unwrap();
        assert!(image_subgroup(&AlgebraElement::identity(&kronecker()), &i2).unwrap().is_full());
        assert!(image_subgroup(&AlgebraElement::zero(), &i2).unwrap().is_zero());
        let img = image_subgroup(&alpha(), &i2).unwrap();
        assert_eq!(img.dim(), 1);
        assert_eq!(img, alpha().act(&i2).unwrap().column_space());
    }

    #[test]
    fn endo_invariance_examples() {
        let s = direct_sum(&kronecker(), &[inj(1).unwrap(), inj(2).unwrap()]).unwrap().sum;
        assert!(check_endo_invariant(&Subspace::full(4), &s).unwrap());
        // the line through the I_1 generator plus the top of I_2 is moved by
        // the projection onto I_1
        let line = Subspace::from_columns(4, &[vec![1.into(), 1.into(), 0.into(), 0.into()]]);
        assert!(!check_endo_invariant(&line, &s).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let p = random_pointed_matrix(&mut rng, &kronecker(), 2, 2);
            assert!(check_endo_invariant(&evaluate(&p, &s).unwrap(), &s).unwrap());
        }
    }

    #[test]
    fn meet_examples() {
        let i2 = inj(2).unwrap();
        let x = evaluate(&pm(vec![vec![alpha()]]), &i2).unwrap();
        assert_eq!(meet(std::slice::from_ref(&x)).unwrap(), x);
        assert_eq!(meet(&[Subspace::full(3), x.clone()]).unwrap(), x);
        let y = evaluate(&pm(vec![vec![beta()]]), &i2).unwrap();
        let both = meet(&[x, y]).unwrap();
        let direct = Mat::vstack(&[&alpha().act(&i2).unwrap(), &beta().act(&i2).unwrap()], 3).kernel_basis();
        assert_eq!(both, direct);
        assert_eq!(both.dim(), 1);
        assert!(meet(&[]).is_err());
    }

    #[test]
    fn appending_rows_shrinks() {
        let p2 = proj(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut p = random_pointed_matrix(&mut rng, &kronecker(), 1, 3);
        let mut prev = evaluate(&p, &p2).unwrap();
        for _ in 0..4 {
            p = p.with_row((0..3).map(|_| random_entry(&mut rng, &kronecker())).collect()).unwrap();
            let next = evaluate(&p, &p2).unwrap();
            assert!(next.is_subspace_of(&prev).unwrap());
            prev = next;
        }
    }

    #[test]
    fn json_round_trip() {
        let p = PointedMatrix::new(kronecker(), vec![vec![alpha(), beta().neg()], vec![AlgebraElement::zero(), alpha()]], 1).unwrap();
        let text = serde_json::to_string(&p.to_json()).unwrap();
        let back = PointedMatrix::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, p);
    }
}
