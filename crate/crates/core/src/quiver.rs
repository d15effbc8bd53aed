//! Quivers, paths and bound path-algebra presentations.
//!
//! A path is written in composition order: the path `[a, b]` is the product
//! `a·b`, which applies `b` first and then `a`. Trivial paths `e_v` have no
//! arrows and carry their vertex.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::representation::Representation;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// `arrows` are `(name, source, target)` with vertex names.
    pub fn new(vertices: Vec<String>, arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        let mut q = Quiver { vertices, arrows: Vec::new() };
        for w in 0..q.vertices.len() {
            if q.vertices[..w].contains(&q.vertices[w]) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {:?}", q.vertices[w])));
            }
        }
        for &(name, s, t) in arrows {
            if q.arrow_index(name).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {name:?}")));
            }
            let source = q.vertex_index(s).ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex {s:?}")))?;
            let target = q.vertex_index(t).ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex {t:?}")))?;
            q.arrows.push(Arrow { name: name.to_string(), source, target });
        }
        Ok(q)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen == n
    }
}

/// A path in composition order (see module docs).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    source: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Path {
        Path { source: vertex, arrows: Vec::new() }
    }

    /// Validates composability of `arrows` (given in composition order).
    pub fn new(quiver: &Quiver, arrows: Vec<usize>) -> Result<Path> {
        let Some(&last) = arrows.last() else {
            return Err(Error::InvalidPath("use Path::trivial for the empty path".into()));
        };
        for w in arrows.windows(2) {
            let (outer, inner) = (&quiver.arrows[w[0]], &quiver.arrows[w[1]]);
            if inner.target != outer.source {
                return Err(Error::InvalidPath(format!("{} then {} is not composable", inner.name, outer.name)));
            }
        }
        Ok(Path { source: quiver.arrows[last].source, arrows })
    }

    pub fn from_names(quiver: &Quiver, names: &[&str]) -> Result<Path> {
        let idx = names
            .iter()
            .map(|n| quiver.arrow_index(n).ok_or_else(|| Error::InvalidPath(format!("unknown arrow {n:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Path::new(quiver, idx)
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self, quiver: &Quiver) -> usize {
        self.arrows.first().map_or(self.source, |&a| quiver.arrows[a].target)
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    fn contains_subpath(&self, sub: &Path) -> bool {
        !sub.arrows.is_empty() && self.arrows.windows(sub.arrows.len()).any(|w| w == sub.arrows.as_slice())
    }

    fn opposite(&self, quiver: &Quiver) -> Path {
        let target = self.target(quiver);
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: target, arrows }
    }
}

/// Finite linear combination of paths with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Path, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(path: Path, coeff: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(path, coeff);
        e
    }

    pub fn vertex(pres: &AlgebraPresentation, name: &str) -> Result<Self> {
        let v = pres
            .quiver
            .vertex_index(name)
            .ok_or_else(|| Error::InvalidPath(format!("unknown vertex {name:?}")))?;
        Ok(Self::from_path(Path::trivial(v), Scalar::one()))
    }

    pub fn arrow(pres: &AlgebraPresentation, name: &str) -> Result<Self> {
        Ok(Self::from_path(Path::from_names(&pres.quiver, &[name])?, Scalar::one()))
    }

    /// The unit `sum_v e_v`.
    pub fn identity(pres: &AlgebraPresentation) -> Self {
        let mut e = Self::zero();
        for v in 0..pres.quiver.vertex_count() {
            e.add_term(Path::trivial(v), Scalar::one());
        }
        e
    }

    pub fn add_term(&mut self, path: Path, coeff: Scalar) {
        let entry = self.terms.entry(path).or_insert_with(Scalar::zero);
        *entry += &coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c * s);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    /// Product `self·other` (apply `other`, then `self`), with paths that
    /// contain a monomial relation dropped.
    pub fn multiply(&self, other: &Self, pres: &AlgebraPresentation) -> Self {
        let q = &pres.quiver;
        let mut out = Self::zero();
        for (p, x) in &self.terms {
            for (r, y) in &other.terms {
                if p.source != r.target(q) {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.extend_from_slice(&r.arrows);
                let path = Path { source: r.source, arrows };
                if pres.is_killed_by_monomial(&path) {
                    continue;
                }
                out.add_term(path, x * y);
            }
        }
        out
    }

    fn to_json(&self, quiver: &Quiver) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(p, c)| TermJson {
                coeff: c.clone(),
                path: p.arrows.iter().map(|&a| quiver.arrows[a].name.clone()).collect(),
                vertex: p.is_trivial().then(|| quiver.vertices[p.source].clone()),
            })
            .collect()
    }

    fn from_json(terms: &[TermJson], quiver: &Quiver) -> Result<Self> {
        let mut e = Self::zero();
        for t in terms {
            let path = if t.path.is_empty() {
                let name = t
                    .vertex
                    .as_deref()
                    .ok_or_else(|| Error::InvalidPath("trivial path needs a \"vertex\" field".into()))?;
                let v = quiver.vertex_index(name).ok_or_else(|| Error::InvalidPath(format!("unknown vertex {name:?}")))?;
                Path::trivial(v)
            } else {
                let names: Vec<&str> = t.path.iter().map(String::as_str).collect();
                Path::from_names(quiver, &names)?
            };
            e.add_term(path, t.coeff.clone());
        }
        Ok(e)
    }

    /// The linear map induced on the total space `⊕_v rep_v` (vertex blocks in
    /// declared order).
    pub fn act(&self, rep: &Representation) -> Result<Mat> {
        let pres = rep.presentation();
        let q = &pres.quiver;
        let offsets = rep.offsets();
        let total = rep.total_dim();
        let mut out = Mat::zeros(total, total);
        for (p, c) in &self.terms {
            if p.source >= q.vertex_count() || p.arrows.iter().any(|&a| a >= q.arrows.len()) {
                return Err(Error::PresentationMismatch);
            }
            let (s, t) = (p.source, p.target(q));
            let mut block = Mat::identity(rep.dims()[s]);
            for &a in p.arrows.iter().rev() {
                block = rep.arrow_matrix(a).mul(&block);
            }
            let scaled = block.scale(c);
            for r in 0..scaled.rows() {
                for col in 0..scaled.cols() {
                    let x = &scaled[(r, col)];
                    if !x.is_zero() {
                        out[(offsets[t] + r, offsets[s] + col)] += x;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(p, c)| {
                let word = if p.is_trivial() {
                    format!("e{}", quiver.vertices[p.source])
                } else {
                    p.arrows.iter().map(|&a| quiver.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
                };
                if c.is_one() {
                    word
                } else {
                    format!("{c}*{word}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Path algebra of a quiver modulo relations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraPresentation {
    quiver: Quiver,
    relations: Vec<AlgebraElement>,
}

impl AlgebraPresentation {
    pub fn new(quiver: Quiver, relations: Vec<AlgebraElement>) -> Result<Self> {
        for (i, rel) in relations.iter().enumerate() {
            if rel.is_zero() {
                return Err(Error::InvalidQuiver(format!("relation {i} is zero")));
            }
            let mut ends = None;
            for (p, _) in rel.terms() {
                if p.len() < 2 {
                    return Err(Error::InvalidQuiver(format!("relation {i} has a term of length < 2")));
                }
                if p.arrows.iter().any(|&a| a >= quiver.arrows.len()) {
                    return Err(Error::InvalidQuiver(format!("relation {i} uses an unknown arrow")));
                }
                let e = (p.source, p.target(&quiver));
                if *ends.get_or_insert(e) != e {
                    return Err(Error::InvalidQuiver(format!("relation {i} mixes non-parallel paths")));
                }
            }
        }
        Ok(AlgebraPresentation { quiver, relations })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[AlgebraElement] {
        &self.relations
    }

    pub fn opposite(&self) -> AlgebraPresentation {
        let relations = self
            .relations
            .iter()
            .map(|r| {
                let mut e = AlgebraElement::zero();
                for (p, c) in r.terms() {
                    e.add_term(p.opposite(&self.quiver), c.clone());
                }
                e
            })
            .collect();
        AlgebraPresentation { quiver: self.quiver.opposite(), relations }
    }

    fn is_killed_by_monomial(&self, path: &Path) -> bool {
        self.relations.iter().any(|r| {
            let mut it = r.terms();
            match (it.next(), it.next()) {
                (Some((p, _)), None) => path.contains_subpath(p),
                _ => false,
            }
        })
    }

    /// All nonzero paths (modulo monomial relations) of length at most `max_len`.
    pub fn paths(&self, max_len: usize) -> Vec<Path> {
        let q = &self.quiver;
        let mut all: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
        let mut frontier = all.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                let t = p.target(q);
                for (ai, a) in q.arrows.iter().enumerate() {
                    if a.source != t {
                        continue;
                    }
                    let mut arrows = vec![ai];
                    arrows.extend_from_slice(&p.arrows);
                    let np = Path { source: p.source, arrows };
                    if !self.is_killed_by_monomial(&np) {
                        next.push(np);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all
    }

    /// Dimension of the algebra, for acyclic quivers.
    pub fn dimension(&self) -> Option<usize> {
        if !self.quiver.is_acyclic() {
            return None;
        }
        let paths = self.paths(self.quiver.arrows.len());
        let non_monomial: Vec<&AlgebraElement> = self.relations.iter().filter(|r| r.terms.len() > 1).collect();
        if non_monomial.is_empty() {
            return Some(paths.len());
        }
        // ideal spanned by p·r·s
        let index: BTreeMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut rows = Vec::new();
        for r in non_monomial {
            for p in &paths {
                let left = AlgebraElement::from_path(p.clone(), Scalar::one()).multiply(r, self);
                if left.is_zero() {
                    continue;
                }
                for s in &paths {
                    let e = left.multiply(&AlgebraElement::from_path(s.clone(), Scalar::one()), self);
                    if e.is_zero() {
                        continue;
                    }
                    let mut v = vec![Scalar::zero(); paths.len()];
                    for (path, c) in e.terms() {
                        v[index[path]] = c.clone();
                    }
                    rows.push(v);
                }
            }
        }
        let rank = Mat::from_rows(rows, paths.len()).ok()?.rank();
        Some(paths.len() - rank)
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            vertices: self.quiver.vertices.clone(),
            arrows: self
                .quiver
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    name: a.name.clone(),
                    source: self.quiver.vertices[a.source].clone(),
                    target: self.quiver.vertices[a.target].clone(),
                })
                .collect(),
            relations: self.relations.iter().map(|r| r.to_json(&self.quiver)).collect(),
        }
    }

    pub fn from_json(j: &PresentationJson) -> Result<Self> {
        let arrows: Vec<(&str, &str, &str)> =
            j.arrows.iter().map(|a| (a.name.as_str(), a.source.as_str(), a.target.as_str())).collect();
        let quiver = Quiver::new(j.vertices.clone(), &arrows)?;
        let relations = j
            .relations
            .iter()
            .map(|r| AlgebraElement::from_json(r, &quiver))
            .collect::<Result<Vec<_>>>()?;
        AlgebraPresentation::new(quiver, relations)
    }

    pub fn element_to_json(&self, e: &AlgebraElement) -> Vec<TermJson> {
        e.to_json(&self.quiver)
    }

    pub fn element_from_json(&self, terms: &[TermJson]) -> Result<AlgebraElement> {
        AlgebraElement::from_json(terms, &self.quiver)
    }
}

impl fmt::Display for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices, {} arrows, {} relations", self.quiver.vertex_count(), self.quiver.arrows.len(), self.relations.len())
    }
}

/// Serialized presentation:
/// `{"vertices":[..], "arrows":[{"name","source","target"}], "relations":[[{"coeff","path"}]]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<Vec<TermJson>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// One term of an algebra element. Trivial paths have an empty `path` and
/// name their vertex in `vertex`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: Scalar,
    pub path: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
}

/// The Kronecker algebra: vertices `1`, `2` and arrows `alpha`, `beta: 1 -> 2`.
pub fn kronecker() -> Arc<AlgebraPresentation> {
    static KRONECKER: OnceLock<Arc<AlgebraPresentation>> = OnceLock::new();
    KRONECKER
        .get_or_init(|| {
            let q = Quiver::new(vec!["1".into(), "2".into()], &[("alpha", "1", "2"), ("beta", "1", "2")])
                .expect("static quiver");
            Arc::new(AlgebraPresentation::new(q, Vec::new()).expect("no relations"))
        })
        .clone()
}

/// The opposite Kronecker algebra (arrows `2 -> 1`), whose modules are the
/// right modules of [`kronecker`].
pub fn kronecker_opposite() -> Arc<AlgebraPresentation> {
    static KRONECKER_OP: OnceLock<Arc<AlgebraPresentation>> = OnceLock::new();
    KRONECKER_OP.get_or_init(|| Arc::new(kronecker().opposite())).clone()
}
