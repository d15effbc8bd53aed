use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Subspace};
use crate::representation::Representation;
use crate::scalar::Scalar;

use super::{fitting, hom_basis, HomSpace, Morphism};

/// `End(M)` with the identity as first basis element, structure constants
/// and the Jacobson radical as a subspace of coordinate space.
#[derive(Clone, Debug)]
pub struct EndoRing {
    module: Representation,
    hom: HomSpace,
    /// `structure[a][b]` = coordinates of `e_a ∘ e_b`.
    structure: Vec<Vec<Vec<Scalar>>>,
    radical: Subspace,
}

/// Outcome of the locality test on an endomorphism ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Locality {
    Local,
    NotLocal,
    Inconclusive,
}

/// Endomorphism ring of `m` with its radical (characteristic zero).
pub fn end_ring(m: &Representation) -> Result<EndoRing> {
    let raw = hom_basis(m, m)?;
    let id = Morphism::identity(m);
    let hom = if raw.dim() == 0 {
        raw
    } else {
        let c = raw.coordinates(&id).expect("identity is an endomorphism");
        let pivot = c.iter().position(|x| !x.is_zero()).expect("identity is nonzero");
        let mut basis = vec![id];
        basis.extend(raw.basis().iter().enumerate().filter(|&(i, _)| i != pivot).map(|(_, f)| f.clone()));
        HomSpace::from_basis(m.dims().to_vec(), m.dims().to_vec(), basis)?
    };
    let d = hom.dim();
    let structure: Vec<Vec<Vec<Scalar>>> = hom
        .basis()
        .iter()
        .map(|a| {
            hom.basis()
                .iter()
                .map(|b| hom.coordinates(&a.compose(b).expect("same module")).expect("End is closed under composition"))
                .collect()
        })
        .collect();

    // trace form tr(L_x L_y) = tr(L_{xy}); tr(L_{e_k}) = sum_i c[k][i][i]
    let traces: Vec<Scalar> = (0..d).map(|k| (0..d).map(|i| &structure[k][i][i]).sum()).collect();
    let mut form = Mat::zeros(d, d);
    for a in 0..d {
        for b in 0..d {
            form[(a, b)] = structure[a][b].iter().zip(&traces).map(|(c, t)| c * t).sum();
        }
    }
    let radical = form.kernel_basis();
    let ring = EndoRing { module: m.clone(), hom, structure, radical };
    ring.verify_radical()?;
    Ok(ring)
}

/// The Jacobson radical; only available in characteristic zero.
pub fn jacobson_radical(e: &EndoRing, field: Field) -> Result<Subspace> {
    field.require_char_zero()?;
    Ok(e.radical.clone())
}

impl EndoRing {
    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.hom.dim()
    }

    pub fn hom(&self) -> &HomSpace {
        &self.hom
    }

    pub fn basis(&self) -> &[Morphism] {
        self.hom.basis()
    }

    pub fn radical(&self) -> &Subspace {
        &self.radical
    }

    pub fn radical_dim(&self) -> usize {
        self.radical.dim()
    }

    /// `dim End/J`.
    pub fn top_dim(&self) -> usize {
        self.dim() - self.radical_dim()
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Scalar>>] {
        &self.structure
    }

    pub fn element(&self, coords: &[Scalar]) -> Morphism {
        self.hom.combination(coords)
    }

    pub fn coordinates(&self, f: &Morphism) -> Option<Vec<Scalar>> {
        self.hom.coordinates(f)
    }

    /// Basis of `J(End M)` as endomorphisms.
    pub fn radical_morphisms(&self) -> Vec<Morphism> {
        self.radical.vectors().iter().map(|c| self.element(c)).collect()
    }

    pub fn in_radical(&self, f: &Morphism) -> bool {
        self.coordinates(f).is_some_and(|c| self.radical.contains(&c))
    }

    /// Product of coordinate vectors.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (a, ua) in u.iter().enumerate() {
            if ua.is_zero() {
                continue;
            }
            for (b, vb) in v.iter().enumerate() {
                if vb.is_zero() {
                    continue;
                }
                let s = ua * vb;
                for (k, c) in self.structure[a][b].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&s * c);
                    }
                }
            }
        }
        out
    }

    /// Dimensions of `J, J^2, ...` up to and including the first zero power.
    pub fn radical_power_dims(&self) -> Vec<usize> {
        let j = self.radical.vectors();
        let mut power = self.radical.clone();
        let mut dims = vec![power.dim()];
        while !power.is_zero() && dims.len() <= self.dim() + 1 {
            let products: Vec<Vec<Scalar>> =
                j.iter().flat_map(|x| power.vectors().into_iter().map(move |y| (x.clone(), y))).map(|(x, y)| self.multiply(&x, &y)).collect();
            power = Subspace::from_columns(self.dim(), &products);
            dims.push(power.dim());
        }
        dims
    }

    /// Smallest `k` with `J^k = 0`.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let dims = self.radical_power_dims();
        dims.iter().position(|&d| d == 0).map(|p| p + 1)
    }

    fn verify_radical(&self) -> Result<()> {
        let d = self.dim();
        for r in self.radical.vectors() {
            for b in 0..d {
                let mut e = vec![Scalar::zero(); d];
                e[b] = Scalar::one();
                if !self.radical.contains(&self.multiply(&r, &e)) || !self.radical.contains(&self.multiply(&e, &r)) {
                    return Err(Error::Inconclusive("trace-form radical is not an ideal".into()));
                }
            }
        }
        match self.nilpotency_index() {
            Some(k) if k <= d.max(1) => Ok(()),
            _ => Err(Error::Inconclusive("trace-form radical is not nilpotent".into())),
        }
    }

    /// Local when `End/J` is one-dimensional; not local when a Fitting split
    /// (hence a nontrivial idempotent) is found.
    pub fn is_local(&self) -> Locality {
        if self.top_dim() == 1 {
            return Locality::Local;
        }
        if self.dim() == 0 {
            // End of the zero module is the zero ring
            return Locality::NotLocal;
        }
        match fitting::find_split(self) {
            Some(_) => Locality::NotLocal,
            None => Locality::Inconclusive,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::kronecker;
    use crate::representation::{direct_sum, kronecker_preinjective as inj, kronecker_regular, Eigenvalue};

    fn sum(parts: &[Representation]) -> Representation {
        direct_sum(&kronecker(), parts).unwrap().sum
    }

    #[test]
    fn end_ring_examples() {
        let e = end_ring(&inj(1).unwrap()).unwrap();
        assert_eq!((e.dim(), e.radical_dim()), (1, 0));
        let e = end_ring(&inj(2).unwrap()).unwrap();
        assert_eq!((e.dim(), e.radical_dim()), (1, 0));
        let e = end_ring(&sum(&[inj(1).unwrap(), inj(2).unwrap()])).unwrap();
        assert_eq!((e.dim(), e.radical_dim()), (4, 2));
        assert_eq!(e.basis()[0], Morphism::identity(e.module()));
    }

    #[test]
    fn radical_examples() {
        let e = end_ring(&sum(&[inj(1).unwrap(), inj(2).unwrap()])).unwrap();
        assert_eq!(e.radical_power_dims(), vec![2, 0]);
        for f in e.radical_morphisms() {
            for g in e.radical_morphisms() {
                assert!(f.compose(&g).unwrap().is_zero());
            }
        }
        let i1 = inj(1).unwrap();
        let e = end_ring(&sum(&[i1.clone(), i1.clone(), i1])).unwrap();
        assert_eq!((e.dim(), e.radical_dim()), (9, 0));
        let r20 = kronecker_regular(2, &Eigenvalue::Finite(Scalar::zero())).unwrap();
        let e = end_ring(&r20).unwrap();
        assert_eq!((e.dim(), e.radical_dim()), (2, 1));
        assert_eq!(e.nilpotency_index(), Some(2));
    }

    #[test]
    fn radical_matches_faithful_trace_form() {
        // In characteristic zero the radical is also the kernel of
        // (x, y) -> tr(x y) computed on the module itself.
        let reps = [
            sum(&[inj(1).unwrap(), inj(2).unwrap(), inj(3).unwrap()]),
            kronecker_regular(3, &Eigenvalue::Infinity).unwrap(),
            sum(&[inj(2).unwrap(), inj(2).unwrap()]),
        ];
        for m in reps {
            let e = end_ring(&m).unwrap();
            let d = e.dim();
            let mats: Vec<Mat> = e.basis().iter().map(Morphism::total_matrix).collect();
            let mut form = Mat::zeros(d, d);
            for a in 0..d {
                for b in 0..d {
                    form[(a, b)] = mats[a].mul(&mats[b]).trace();
                }
            }
            assert_eq!(form.kernel_basis(), *e.radical());
        }
    }

    #[test]
    fn positive_characteristic_rejected() {
        let e = end_ring(&inj(2).unwrap()).unwrap();
        assert!(matches!(jacobson_radical(&e, Field::Prime(3)), Err(Error::UnsupportedField(_))));
        assert!(jacobson_radical(&e, Field::Rationals).unwrap().is_zero());
    }

    #[test]
    fn locality_examples() {
        assert_eq!(end_ring(&inj(2).unwrap()).unwrap().is_local(), Locality::Local);
        assert_eq!(end_ring(&inj(1).unwrap()).unwrap().is_local(), Locality::Local);
        assert_eq!(end_ring(&sum(&[inj(1).unwrap(), inj(2).unwrap()])).unwrap().is_local(), Locality::NotLocal);
    }

    #[test]
    fn quadratic_point_is_inconclusive() {
        // alpha = I, beta = companion of x^2 + 1: End is Q(i), a field of dimension 2
        let k = kronecker();
        let m = Representation::new(k, vec![2, 2], vec![Mat::identity(2), Mat::from_ints(&[&[0, -1], &[1, 0]])]).unwrap();
        let e = end_ring(&m).unwrap();
        assert_eq!((e.dim(), e.radical_dim()), (2, 0));
        assert_eq!(e.is_local(), Locality::Inconclusive);
    }
}
