use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::representation::Representation;
use crate::scalar::Scalar;

use super::{end_ring, hom_basis, EndoRing, HomSpace, Locality, Morphism};

/// Why two modules are known not to be isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NonIsoReason {
    /// Dimension vectors differ.
    DimensionVector,
    /// `Hom(m, n)` or `Hom(n, m)` is zero.
    ZeroHom,
    /// `dim Hom(m, n)` or `dim Hom(n, m)` differs from `dim End(m)`.
    HomDimension,
    /// `m` is local and every composite `m -> n -> m` lies in `J(End m)`.
    RadicalComposites,
}

#[derive(Clone, Debug, PartialEq)]
pub enum IsoCertificate {
    /// A verified isomorphism together with its verified inverse.
    Iso { forward: Morphism, inverse: Morphism },
    CertifiedNo(NonIsoReason),
    /// No isomorphism found by the search; not a proof.
    PresumedNo,
}

impl IsoCertificate {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoCertificate::Iso { .. })
    }

    pub fn is_certified_no(&self) -> bool {
        matches!(self, IsoCertificate::CertifiedNo(_))
    }

    pub fn forward(&self) -> Option<&Morphism> {
        match self {
            IsoCertificate::Iso { forward, .. } => Some(forward),
            _ => None,
        }
    }

    /// The certificate for the swapped pair.
    pub fn swapped(&self) -> IsoCertificate {
        match self {
            IsoCertificate::Iso { forward, inverse } => {
                IsoCertificate::Iso { forward: inverse.clone(), inverse: forward.clone() }
            }
            other => other.clone(),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            IsoCertificate::Iso { .. } => "iso",
            IsoCertificate::CertifiedNo(_) => "certified-no",
            IsoCertificate::PresumedNo => "presumed-no",
        }
    }
}

/// Budget for the invertible-element search in `Hom(m, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoSearch {
    pub seed: u64,
    /// Deterministic sweep trials.
    pub sweep: usize,
    /// Seeded random trials.
    pub random: usize,
}

impl Default for IsoSearch {
    fn default() -> Self {
        IsoSearch { seed: 0, sweep: 64, random: 64 }
    }
}

const SWEEP_RADIUS: i64 = 3;
const RANDOM_RADIUS: i64 = 7;

// Additive recurrence with irrational steps sqrt(p_i), mapped to
// [-SWEEP_RADIUS, SWEEP_RADIUS].
fn sweep_vector(t: usize, len: usize) -> Vec<Scalar> {
    const PRIMES: [f64; 16] = [2., 3., 5., 7., 11., 13., 17., 19., 23., 29., 31., 37., 41., 43., 47., 53.];
    let width = (2 * SWEEP_RADIUS + 1) as f64;
    (0..len)
        .map(|i| {
            let step = PRIMES[i % PRIMES.len()].sqrt() + (i / PRIMES.len()) as f64 * 0.5;
            let frac = (t as f64 * step).fract();
            Scalar::from_int((frac * width).floor() as i64 - SWEEP_RADIUS)
        })
        .collect()
}

fn check_iso(f: &Morphism, m: &Representation, n: &Representation) -> Option<IsoCertificate> {
    if !f.is_isomorphism() {
        return None;
    }
    let inverse = f.inverse()?;
    let verified = f.is_homomorphism(m, n)
        && inverse.is_homomorphism(n, m)
        && inverse.compose(f).ok()? == Morphism::identity(m)
        && f.compose(&inverse).ok()? == Morphism::identity(n);
    verified.then(|| IsoCertificate::Iso { forward: f.clone(), inverse })
}

/// `are_isomorphic_with` using the default search budget.
pub fn are_isomorphic(m: &Representation, n: &Representation) -> Result<IsoCertificate> {
    are_isomorphic_with(m, n, IsoSearch::default())
}

/// Decides `m ≅ n` where possible. Positive answers carry a verified
/// isomorphism and inverse. For local `m` the answer is always certified.
pub fn are_isomorphic_with(m: &Representation, n: &Representation, search: IsoSearch) -> Result<IsoCertificate> {
    if !m.same_presentation(n) {
        return Err(Error::PresentationMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(IsoCertificate::CertifiedNo(NonIsoReason::DimensionVector));
    }
    let hom_mn = hom_basis(m, n)?;
    let hom_nm = hom_basis(n, m)?;
    let end = end_ring(m)?;
    Ok(iso_from_parts(m, n, &hom_mn, &hom_nm, &end, search))
}

/// The decision procedure of [`are_isomorphic_with`] on precomputed
/// `Hom(m, n)`, `Hom(n, m)` and `End(m)`.
pub fn iso_from_parts(
    m: &Representation,
    n: &Representation,
    hom_mn: &HomSpace,
    hom_nm: &HomSpace,
    end: &EndoRing,
    search: IsoSearch,
) -> IsoCertificate {
    if m.dims() != n.dims() {
        return IsoCertificate::CertifiedNo(NonIsoReason::DimensionVector);
    }
    if m.is_zero() {
        let id = Morphism::identity(m);
        return IsoCertificate::Iso { forward: id.clone(), inverse: id };
    }
    if hom_mn.is_zero() || hom_nm.is_zero() {
        return IsoCertificate::CertifiedNo(NonIsoReason::ZeroHom);
    }
    if hom_mn.dim() != end.dim() || hom_nm.dim() != end.dim() {
        return IsoCertificate::CertifiedNo(NonIsoReason::HomDimension);
    }
    if let Some(c) = hom_mn.basis().iter().find_map(|f| check_iso(f, m, n)) {
        return c;
    }
    if end.top_dim() == 1 {
        return local_decision(m, n, end, hom_mn, hom_nm);
    }
    for t in 1..=search.sweep {
        let f = hom_mn.combination(&sweep_vector(t, hom_mn.dim()));
        if let Some(c) = check_iso(&f, m, n) {
            return c;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    for _ in 0..search.random {
        let coeffs: Vec<Scalar> =
            (0..hom_mn.dim()).map(|_| Scalar::from_int(rng.random_range(-RANDOM_RADIUS..=RANDOM_RADIUS))).collect();
        if let Some(c) = check_iso(&hom_mn.combination(&coeffs), m, n) {
            return c;
        }
    }
    IsoCertificate::PresumedNo
}

// For local m: a composite g∘f outside J(End m) is invertible, so f is a
// split mono between spaces of equal dimension, hence an isomorphism. If all
// basis composites lie in J, so does every composite and no iso exists.
fn local_decision(
    m: &Representation,
    n: &Representation,
    end: &EndoRing,
    hom_mn: &HomSpace,
    hom_nm: &HomSpace,
) -> IsoCertificate {
    for f in hom_mn.basis() {
        for g in hom_nm.basis() {
            let gf = g.compose(f).expect("shapes match");
            if !end.in_radical(&gf) {
                if let Some(c) = check_iso(f, m, n) {
                    return c;
                }
            }
        }
    }
    IsoCertificate::CertifiedNo(NonIsoReason::RadicalComposites)
}

fn require_local(e: &EndoRing, label: &str) -> Result<()> {
    match e.is_local() {
        Locality::Local => Ok(()),
        Locality::NotLocal => Err(Error::NotLocal { member: label.to_string() }),
        Locality::Inconclusive => Err(Error::LocalityInconclusive { member: label.to_string() }),
    }
}

/// Non-isomorphisms `m -> n` for local `m` and `n`: all of `Hom(m, n)` when
/// the modules are not isomorphic, `φ ∘ J(End m)` when `φ: m ≅ n`.
pub fn noniso_subspace(m: &Representation, n: &Representation) -> Result<HomSpace> {
    let end_m = end_ring(m)?;
    require_local(&end_m, &format!("{:?}", m.dims()))?;
    if !std::ptr::eq(m, n) {
        let end_n = end_ring(n)?;
        require_local(&end_n, &format!("{:?}", n.dims()))?;
    }
    let cert = are_isomorphic(m, n)?;
    noniso_from_parts(m, n, &hom_basis(m, n)?, &end_m, &cert)
}

/// Assembles the non-isomorphism subspace from precomputed pieces.
pub fn noniso_from_parts(
    m: &Representation,
    n: &Representation,
    hom_mn: &HomSpace,
    end_m: &EndoRing,
    cert: &IsoCertificate,
) -> Result<HomSpace> {
    match cert {
        IsoCertificate::CertifiedNo(_) => Ok(hom_mn.clone()),
        IsoCertificate::PresumedNo => {
            Err(Error::IsoUnresolved { left: format!("{:?}", m.dims()), right: format!("{:?}", n.dims()) })
        }
        IsoCertificate::Iso { forward, .. } => {
            let basis: Vec<Morphism> =
                end_m.radical_morphisms().iter().map(|r| forward.compose(r).expect("shapes match")).collect();
            if basis.iter().any(Morphism::is_isomorphism) {
                return Err(Error::Inconclusive("radical image contains an isomorphism".into()));
            }
            HomSpace::from_basis(m.dims().to_vec(), n.dims().to_vec(), basis)
        }
    }
}
