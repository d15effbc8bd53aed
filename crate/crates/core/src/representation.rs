//! Finite-dimensional quiver representations.
//!
//! Total-space layout: vertex blocks concatenated in declared vertex order.
//! Direct sums place the summands consecutively inside each vertex block.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homalg::Morphism;
use crate::linalg::{CoordinateMap, Mat, Subspace};
use crate::quiver::{kronecker, kronecker_opposite, AlgebraPresentation, PresentationJson};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Representation {
    presentation: Arc<AlgebraPresentation>,
    dims: Vec<usize>,
    maps: Vec<Mat>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.same_presentation(other) && self.dims == other.dims && self.maps == other.maps
    }
}

impl Eq for Representation {}

impl Representation {
    /// Checks matrix shapes against `dims` and that every relation acts as zero.
    pub fn new(presentation: Arc<AlgebraPresentation>, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Self> {
        let q = presentation.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::InvalidRepresentation(format!(
                "{} vertex dimensions for {} vertices",
                dims.len(),
                q.vertex_count()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for {} arrows",
                maps.len(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            let want = (dims[a.target], dims[a.source]);
            if m.shape() != want {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow {} has a {}x{} matrix, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                )));
            }
        }
        let rep = Representation { presentation, dims, maps };
        for (i, rel) in rep.presentation.relations().iter().enumerate() {
            if !rel.act(&rep)?.is_zero() {
                return Err(Error::InvalidRepresentation(format!("relation {i} does not act as zero")));
            }
        }
        Ok(rep)
    }

    pub fn zero(presentation: Arc<AlgebraPresentation>) -> Self {
        let q = presentation.quiver();
        let maps = vec![Mat::zeros(0, 0); q.arrows().len()];
        let dims = vec![0; q.vertex_count()];
        Representation { presentation, dims, maps }
    }

    /// The one-dimensional simple at `vertex`.
    pub fn simple(presentation: Arc<AlgebraPresentation>, vertex: usize) -> Result<Self> {
        let q = presentation.quiver();
        if vertex >= q.vertex_count() {
            return Err(Error::InvalidArgument(format!("vertex index {vertex} out of range")));
        }
        let dims: Vec<usize> = (0..q.vertex_count()).map(|v| usize::from(v == vertex)).collect();
        let maps = q.arrows().iter().map(|a| Mat::zeros(dims[a.target], dims[a.source])).collect();
        Representation::new(presentation, dims, maps)
    }

    pub fn presentation(&self) -> &Arc<AlgebraPresentation> {
        &self.presentation
    }

    pub fn same_presentation(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.presentation, &other.presentation) || self.presentation == other.presentation
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Composition length; every simple of a path algebra is one-dimensional.
    pub fn length(&self) -> usize {
        self.total_dim()
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.dims
            .iter()
            .map(|d| {
                let o = acc;
                acc += d;
                o
            })
            .collect()
    }

    pub fn arrow_matrix(&self, arrow: usize) -> &Mat {
        &self.maps[arrow]
    }

    pub fn arrow_matrices(&self) -> &[Mat] {
        &self.maps
    }

    pub fn arrow_matrix_by_name(&self, name: &str) -> Option<&Mat> {
        self.presentation.quiver().arrow_index(name).map(|i| &self.maps[i])
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Change of basis by invertible vertex matrices `g_v`: arrow `a` becomes
    /// `g_t a g_s^{-1}`. The map `g` is then an isomorphism from `self`.
    pub fn rebase(&self, change: &[Mat]) -> Result<Representation> {
        if change.len() != self.dims.len() {
            return Err(Error::DimensionMismatch("one basis change per vertex".into()));
        }
        let inverses = change
            .iter()
            .zip(&self.dims)
            .map(|(g, &d)| {
                if g.shape() != (d, d) {
                    return Err(Error::DimensionMismatch("basis change has the wrong shape".into()));
                }
                g.inverse().ok_or_else(|| Error::InvalidArgument("basis change is singular".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let maps = self
            .presentation
            .quiver()
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| change[a.target].mul(m).mul(&inverses[a.source]))
            .collect();
        Representation::new(self.presentation.clone(), self.dims.clone(), maps)
    }

    /// Embeds a vertexwise vector family into the total space.
    pub fn total_vector(&self, parts: &[Vec<Scalar>]) -> Vec<Scalar> {
        parts.iter().flatten().cloned().collect()
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rep dims {:?}", self.dims)
    }
}

/// One subspace per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceFamily {
    parts: Vec<Subspace>,
}

impl SubspaceFamily {
    pub fn new(parts: Vec<Subspace>) -> Self {
        SubspaceFamily { parts }
    }

    pub fn full(rep: &Representation) -> Self {
        SubspaceFamily { parts: rep.dims.iter().map(|&d| Subspace::full(d)).collect() }
    }

    pub fn zero(rep: &Representation) -> Self {
        SubspaceFamily { parts: rep.dims.iter().map(|&d| Subspace::zero(d)).collect() }
    }

    pub fn parts(&self) -> &[Subspace] {
        &self.parts
    }

    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(Subspace::dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.parts.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn check_fits(&self, rep: &Representation) -> Result<()> {
        let ambient: Vec<usize> = self.parts.iter().map(Subspace::ambient_dim).collect();
        if ambient != rep.dims {
            return Err(Error::DimensionMismatch(format!(
                "subspace family lives in {ambient:?}, representation has dims {:?}",
                rep.dims
            )));
        }
        Ok(())
    }

    pub fn is_full_in(&self, rep: &Representation) -> bool {
        self.parts.iter().zip(&rep.dims).all(|(s, &d)| s.ambient_dim() == d && s.dim() == d)
    }

    /// The graded subspace of the total space.
    pub fn to_total(&self) -> Subspace {
        let total: usize = self.parts.iter().map(Subspace::ambient_dim).sum();
        let mut cols = Vec::new();
        let mut off = 0;
        for s in &self.parts {
            cols.extend(s.embed(total, off).vectors());
            off += s.ambient_dim();
        }
        Subspace::from_columns(total, &cols)
    }

    pub fn intersect(&self, other: &SubspaceFamily) -> Result<SubspaceFamily> {
        if self.parts.len() != other.parts.len() {
            return Err(Error::DimensionMismatch("vertex counts differ".into()));
        }
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| a.intersect(b)).collect::<Result<_>>()?;
        Ok(SubspaceFamily { parts })
    }

    pub fn sum(&self, other: &SubspaceFamily) -> Result<SubspaceFamily> {
        if self.parts.len() != other.parts.len() {
            return Err(Error::DimensionMismatch("vertex counts differ".into()));
        }
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| a.sum(b)).collect::<Result<_>>()?;
        Ok(SubspaceFamily { parts })
    }

    pub fn is_subfamily_of(&self, other: &SubspaceFamily) -> Result<bool> {
        for (a, b) in self.parts.iter().zip(&other.parts) {
            if !a.is_subspace_of(b)? {
                return Ok(false);
            }
        }
        Ok(self.parts.len() == other.parts.len())
    }

    /// Closed under every arrow action of `rep`.
    pub fn is_arrow_closed(&self, rep: &Representation) -> bool {
        self.first_unclosed_arrow(rep).is_none()
    }

    fn first_unclosed_arrow(&self, rep: &Representation) -> Option<usize> {
        rep.presentation.quiver().arrows().iter().enumerate().find_map(|(i, a)| {
            let img = self.parts[a.source].image(&rep.maps[i]);
            (!img.is_subspace_of(&self.parts[a.target]).unwrap_or(false)).then_some(i)
        })
    }
}

/// Result of [`direct_sum`]: the sum plus the structure maps `in_i`, `pr_i`.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub sum: Representation,
    pub embeddings: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

impl DirectSum {
    /// Offsets of each summand inside every vertex block: `offsets[i][v]`.
    pub fn summand_offsets(&self) -> Vec<Vec<usize>> {
        let nv = self.sum.dims.len();
        let mut acc = vec![0; nv];
        self.embeddings
            .iter()
            .map(|e| {
                let here = acc.clone();
                for v in 0..nv {
                    acc[v] += e.maps()[v].cols();
                }
                here
            })
            .collect()
    }

    /// Places one subspace family per summand into the sum.
    pub fn assemble(&self, families: &[SubspaceFamily]) -> Result<SubspaceFamily> {
        if families.len() != self.embeddings.len() {
            return Err(Error::DimensionMismatch("one family per summand".into()));
        }
        let nv = self.sum.dims.len();
        let parts = (0..nv)
            .map(|v| {
                let mut cols = Vec::new();
                for (fam, emb) in families.iter().zip(&self.embeddings) {
                    cols.extend(fam.parts[v].image(&emb.maps()[v]).vectors());
                }
                Subspace::from_columns(self.sum.dims[v], &cols)
            })
            .collect();
        Ok(SubspaceFamily::new(parts))
    }
}

/// Blockwise direct sum; an empty list gives the zero representation.
pub fn direct_sum(presentation: &Arc<AlgebraPresentation>, parts: &[Representation]) -> Result<DirectSum> {
    for p in parts {
        if !(Arc::ptr_eq(&p.presentation, presentation) || *p.presentation == **presentation) {
            return Err(Error::PresentationMismatch);
        }
    }
    let q = presentation.quiver();
    let nv = q.vertex_count();
    let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let maps = (0..q.arrows().len())
        .map(|a| Mat::block_diag(&parts.iter().map(|p| &p.maps[a]).collect::<Vec<_>>()))
        .collect();
    let sum = Representation { presentation: presentation.clone(), dims: dims.clone(), maps };

    let mut embeddings = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    let mut offsets = vec![0usize; nv];
    for p in parts {
        let mut emb = Vec::with_capacity(nv);
        let mut proj = Vec::with_capacity(nv);
        for v in 0..nv {
            let mut e = Mat::zeros(dims[v], p.dims[v]);
            e.set_block(offsets[v], 0, &Mat::identity(p.dims[v]));
            proj.push(e.transpose());
            emb.push(e);
            offsets[v] += p.dims[v];
        }
        embeddings.push(Morphism::new(emb));
        projections.push(Morphism::new(proj));
    }
    Ok(DirectSum { sum, embeddings, projections })
}

fn opposite_of(pres: &Arc<AlgebraPresentation>) -> Arc<AlgebraPresentation> {
    let k = kronecker();
    if Arc::ptr_eq(pres, &k) || **pres == *k {
        return kronecker_opposite();
    }
    let kop = kronecker_opposite();
    if Arc::ptr_eq(pres, &kop) || **pres == *kop {
        return k;
    }
    Arc::new(pres.opposite())
}

/// Vector-space dual over the opposite presentation (transposed arrow matrices).
pub fn dual(rep: &Representation) -> Representation {
    Representation {
        presentation: opposite_of(&rep.presentation),
        dims: rep.dims.clone(),
        maps: rep.maps.iter().map(Mat::transpose).collect(),
    }
}

fn zigzag(n: usize) -> (Mat, Mat) {
    // tops t_0..t_{n-1}, valleys v_0..v_{n-2}; beta: t_j -> v_j, alpha: t_j -> v_{j-1}
    let mut alpha = Mat::zeros(n - 1, n);
    let mut beta = Mat::zeros(n - 1, n);
    for j in 0..n - 1 {
        beta[(j, j)] = Scalar::one();
        alpha[(j, j + 1)] = Scalar::one();
    }
    (alpha, beta)
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("family index must be at least 1".into()));
    }
    Ok(())
}

/// Preinjective Kronecker module with `n` copies of `S_1` in its top:
/// dimension vector `(n, n-1)`, the zig-zag string module.
pub fn kronecker_preinjective(n: usize) -> Result<Representation> {
    require_positive(n)?;
    let (alpha, beta) = zigzag(n);
    Representation::new(kronecker(), vec![n, n - 1], vec![alpha, beta])
}

/// The same string over the opposite quiver (a right module): top dimension
/// `n` at vertex 2, dimension vector `(n-1, n)`.
pub fn kronecker_preinjective_right(n: usize) -> Result<Representation> {
    require_positive(n)?;
    let (alpha, beta) = zigzag(n);
    Representation::new(kronecker_opposite(), vec![n - 1, n], vec![alpha, beta])
}

/// Preprojective Kronecker module, the dual of the right preinjective:
/// dimension vector `(n-1, n)`.
pub fn kronecker_preprojective(n: usize) -> Result<Representation> {
    Ok(dual(&kronecker_preinjective_right(n)?))
}

/// Point of the projective line parametrizing regular Kronecker modules.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Eigenvalue {
    Finite(Scalar),
    Infinity,
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Finite(x) => write!(f, "{x}"),
            Eigenvalue::Infinity => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for Eigenvalue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Eigenvalue::Infinity),
            t => t.parse().map(Eigenvalue::Finite).map_err(|e| Error::Parse(format!("{e}"))),
        }
    }
}

fn jordan(n: usize, lambda: &Scalar) -> Mat {
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = lambda.clone();
        if i + 1 < n {
            m[(i, i + 1)] = Scalar::one();
        }
    }
    m
}

/// Regular Kronecker module of quasi-length `n` at `lambda`: `alpha = I`,
/// `beta = J_n(lambda)`; at infinity the roles are swapped.
pub fn kronecker_regular(n: usize, lambda: &Eigenvalue) -> Result<Representation> {
    require_positive(n)?;
    let (alpha, beta) = match lambda {
        Eigenvalue::Finite(l) => (Mat::identity(n), jordan(n, l)),
        Eigenvalue::Infinity => (jordan(n, &Scalar::zero()), Mat::identity(n)),
    };
    Representation::new(kronecker(), vec![n, n], vec![alpha, beta])
}

/// Largest semisimple subrepresentation: at each vertex, the vectors killed
/// by every arrow leaving it.
pub fn socle(rep: &Representation) -> SubspaceFamily {
    let q = rep.presentation.quiver();
    let parts = (0..q.vertex_count())
        .map(|v| {
            let outgoing: Vec<&Mat> =
                q.arrows().iter().enumerate().filter(|(_, a)| a.source == v).map(|(i, _)| &rep.maps[i]).collect();
            Mat::vstack(&outgoing, rep.dims[v]).kernel_basis()
        })
        .collect();
    SubspaceFamily::new(parts)
}

/// Subrepresentation on an arrow-closed subspace family, in the family's
/// canonical bases.
pub fn sub_from_family(rep: &Representation, fam: &SubspaceFamily) -> Result<Representation> {
    fam.check_fits(rep)?;
    if let Some(a) = fam.first_unclosed_arrow(rep) {
        return Err(Error::ClosureViolation { arrow: rep.presentation.quiver().arrows()[a].name.clone() });
    }
    let coords = fam
        .parts
        .iter()
        .map(|s| CoordinateMap::new(s.basis().clone()))
        .collect::<Result<Vec<_>>>()?;
    let q = rep.presentation.quiver();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let src = &fam.parts[a.source];
            let image = rep.maps[i].mul(src.basis());
            let cols: Vec<Vec<Scalar>> = image
                .columns()
                .iter()
                .map(|c| coords[a.target].coordinates(c).expect("closure checked"))
                .collect();
            Mat::from_columns(fam.parts[a.target].dim(), &cols)
        })
        .collect();
    Representation::new(rep.presentation.clone(), fam.dims(), maps)
}

/// Presentation reference inside a serialized representation: either a
/// built-in name (`kronecker`, `kronecker-op`) or an explicit presentation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Named(String),
    Explicit(PresentationJson),
}

impl AlgebraRef {
    pub fn resolve(&self) -> Result<Arc<AlgebraPresentation>> {
        match self {
            AlgebraRef::Named(n) => match n.as_str() {
                "kronecker" => Ok(kronecker()),
                "kronecker-op" => Ok(kronecker_opposite()),
                other => Err(Error::Parse(format!("unknown algebra {other:?}"))),
            },
            AlgebraRef::Explicit(j) => {
                let p = AlgebraPresentation::from_json(j)?;
                if p == *kronecker() {
                    return Ok(kronecker());
                }
                if p == *kronecker_opposite() {
                    return Ok(kronecker_opposite());
                }
                Ok(Arc::new(p))
            }
        }
    }
}

/// `{"algebra":..., "dims":{vertex:count}, "matrices":{arrow:[["p/q",...],...]}}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub algebra: AlgebraRef,
    pub dims: BTreeMap<String, usize>,
    pub matrices: BTreeMap<String, Vec<Vec<Scalar>>>,
}

impl Representation {
    pub fn to_json(&self) -> RepresentationJson {
        let q = self.presentation.quiver();
        let algebra = if *self.presentation == *kronecker() {
            AlgebraRef::Named("kronecker".into())
        } else if *self.presentation == *kronecker_opposite() {
            AlgebraRef::Named("kronecker-op".into())
        } else {
            AlgebraRef::Explicit(self.presentation.to_json())
        };
        RepresentationJson {
            algebra,
            dims: q.vertices().iter().cloned().zip(self.dims.iter().copied()).collect(),
            matrices: q.arrows().iter().map(|a| a.name.clone()).zip(self.maps.iter().map(Mat::to_rows)).collect(),
        }
    }

    pub fn from_json(j: &RepresentationJson) -> Result<Representation> {
        let pres = j.algebra.resolve()?;
        let q = pres.quiver();
        let dims = q
            .vertices()
            .iter()
            .map(|v| {
                j.dims.get(v).copied().ok_or_else(|| Error::InvalidRepresentation(format!("missing dimension for vertex {v:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        for key in j.dims.keys() {
            if q.vertex_index(key).is_none() {
                return Err(Error::InvalidRepresentation(format!("unknown vertex {key:?}")));
            }
        }
        let maps = q
            .arrows()
            .iter()
            .map(|a| {
                let (rows, cols) = (dims[a.target], dims[a.source]);
                match j.matrices.get(&a.name) {
                    None if rows == 0 || cols == 0 => Ok(Mat::zeros(rows, cols)),
                    None => Err(Error::InvalidRepresentation(format!("missing matrix for arrow {:?}", a.name))),
                    Some(r) if r.is_empty() && rows > 0 && cols == 0 => Ok(Mat::zeros(rows, 0)),
                    Some(r) => {
                        if r.len() != rows {
                            return Err(Error::InvalidRepresentation(format!(
                                "arrow {:?} has {} rows, expected {rows}",
                                a.name,
                                r.len()
                            )));
                        }
                        Mat::from_rows(r.clone(), cols)
                    }
                }
            })
            .collect::<Result<Vec<_>>>()?;
        for key in j.matrices.keys() {
            if q.arrow_index(key).is_none() {
                return Err(Error::InvalidRepresentation(format!("unknown arrow {key:?}")));
            }
        }
        Representation::new(pres, dims, maps)
    }
}
