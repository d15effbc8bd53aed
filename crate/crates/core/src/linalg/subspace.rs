use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::Mat;

/// A linear subspace of `Q^n`, stored in canonical form: the basis columns
/// are the nonzero rows of the reduced row echelon form of the transposed
/// spanning set. Two subspaces are equal iff their canonical bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    /// ambient x dim
    basis: Mat,
    /// Leading coordinate of each basis column.
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::zeros(ambient, 0), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of arbitrary (possibly dependent) column vectors.
    pub fn from_columns(ambient: usize, columns: &[Vec<Scalar>]) -> Subspace {
        let rows: Vec<Vec<Scalar>> = columns.to_vec();
        let m = Mat::from_rows(rows, ambient).expect("vector length must equal the ambient dimension");
        Self::from_row_matrix(&m)
    }

    pub(super) fn from_canonical_columns(ambient: usize, columns: Vec<Vec<Scalar>>) -> Subspace {
        Self::from_columns(ambient, &columns)
    }

    /// Span of the rows of `m`.
    pub fn from_row_matrix(m: &Mat) -> Subspace {
        let ambient = m.cols();
        let (r, pivots) = m.rref();
        let k = pivots.len();
        let top = r.block(0, 0, k, ambient);
        Subspace { ambient, basis: top.transpose(), pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// ambient x dim matrix with the canonical basis as columns.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.columns()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut rest = v.to_vec();
        for (j, &p) in self.pivots.iter().enumerate() {
            let c = rest[p].clone();
            if c.is_zero() {
                continue;
            }
            for i in 0..self.ambient {
                let b = &self.basis[(i, j)];
                if !b.is_zero() {
                    rest[i] -= &(&c * b);
                }
            }
        }
        rest.iter().all(Scalar::is_zero)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.basis.columns().iter().all(|v| other.contains(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut cols = self.vectors();
        cols.extend(other.vectors());
        Ok(Subspace::from_columns(self.ambient, &cols))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        // a x = b y  <=>  [A | -B] (x, y) = 0
        let neg_b = other.basis.scale(&Scalar::from_int(-1));
        let joined = Mat::hstack(&[&self.basis, &neg_b]);
        let ka = self.dim();
        let vectors: Vec<Vec<Scalar>> = joined
            .kernel_vectors()
            .into_iter()
            .map(|w| self.basis.mul_vec(&w[..ka]))
            .collect();
        Ok(Subspace::from_columns(self.ambient, &vectors))
    }

    /// Image under a linear map with `self.ambient_dim()` columns.
    pub fn image(&self, map: &Mat) -> Subspace {
        assert_eq!(map.cols(), self.ambient);
        map.mul(&self.basis).column_space()
    }

    /// `{x : map * x in self}` for a map into this subspace's ambient space.
    pub fn preimage(&self, map: &Mat) -> Subspace {
        assert_eq!(map.rows(), self.ambient);
        self.annihilator().mul(map).kernel_basis()
    }

    /// A matrix whose kernel is exactly this subspace.
    pub fn annihilator(&self) -> Mat {
        let rows = self.basis.transpose().kernel_vectors();
        Mat::from_rows(rows, self.ambient).expect("kernel vectors have ambient length")
    }

    /// Block embedding into a larger ambient space at `offset`.
    pub fn embed(&self, ambient: usize, offset: usize) -> Subspace {
        assert!(offset + self.ambient <= ambient);
        let cols: Vec<Vec<Scalar>> = self
            .vectors()
            .into_iter()
            .map(|v| {
                let mut w = vec![Scalar::zero(); ambient];
                w[offset..offset + self.ambient].clone_from_slice(&v);
                w
            })
            .collect();
        Subspace::from_columns(ambient, &cols)
    }

    /// Coordinates `offset..offset+len` of every vector, spanned.
    pub fn project(&self, offset: usize, len: usize) -> Subspace {
        let cols: Vec<Vec<Scalar>> = self.vectors().into_iter().map(|v| v[offset..offset + len].to_vec()).collect();
        Subspace::from_columns(len, &cols)
    }
}

/// Reads off coordinates with respect to a fixed basis (columns of an
/// `n x d` matrix with independent columns).
#[derive(Clone, Debug)]
pub struct CoordinateMap {
    basis: Mat,
    rows: Vec<usize>,
    inv: Mat,
}

impl CoordinateMap {
    pub fn new(basis: Mat) -> Result<CoordinateMap> {
        let d = basis.cols();
        let (_, rows) = basis.transpose().rref();
        if rows.len() != d {
            return Err(Error::DimensionMismatch("basis columns are linearly dependent".into()));
        }
        let inv = basis.select_rows(&rows).inverse().expect("selected rows are independent");
        Ok(CoordinateMap { basis, rows, inv })
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.basis.rows());
        let picked: Vec<Scalar> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inv.mul_vec(&picked);
        (self.basis.mul_vec(&c) == v).then_some(c)
    }
}
