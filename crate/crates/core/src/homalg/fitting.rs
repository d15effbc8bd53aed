//! Fitting-lemma splitting: an endomorphism `g` with `ker g^k` and
//! `im g^k` both nonzero (k = total dimension) decomposes the module as
//! their direct sum.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::representation::{sub_from_family, Representation, SubspaceFamily};
use crate::scalar::Scalar;

use super::{end_ring, EndoRing, Morphism};

/// Coefficients `c_0, ..., c_n` of `det(x I - a)` (monic, `c_n = 1`),
/// by the Faddeev–LeVerrier recursion.
pub fn characteristic_polynomial(a: &Mat) -> Vec<Scalar> {
    assert!(a.is_square());
    let n = a.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut m = Mat::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m).add(&Mat::identity(n).scale(&coeffs[n - k + 1]));
        let t = a.mul(&m).trace();
        coeffs[n - k] = -(&t / &Scalar::from_int(k as i64));
    }
    coeffs
}

fn eval(poly: &[Scalar], x: &Scalar) -> Scalar {
    poly.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
}

// Divisor enumeration is capped; roots with larger numerator or denominator
// are not searched for.
const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64().filter(|&n| n <= DIVISOR_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// Distinct rational roots of a polynomial given by ascending coefficients.
pub fn rational_roots(poly: &[Scalar]) -> Vec<Scalar> {
    let mut p: Vec<Scalar> = poly.to_vec();
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    if p[0].is_zero() {
        roots.push(Scalar::zero());
        let shift = p.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
        p.drain(..shift);
    }
    if p.len() > 1 {
        let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let lead = ints.last().expect("nonempty");
        if let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(lead)) {
            for &num in &ps {
                for &den in &qs {
                    if num.gcd(&den) != 1 || num > i64::MAX as u64 || den > i64::MAX as u64 {
                        continue;
                    }
                    for sign in [1i64, -1] {
                        let x = Scalar::new(sign * num as i64, den as i64);
                        if eval(&p, &x).is_zero() && !roots.contains(&x) {
                            roots.push(x);
                        }
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Kernel and image of `h^k` vertexwise, if both are nonzero.
fn fitting_pair(m: &Representation, h: &Morphism) -> Option<(SubspaceFamily, SubspaceFamily)> {
    let k = m.total_dim() as u32;
    let (mut ker, mut im) = (Vec::new(), Vec::new());
    for hv in h.maps() {
        let p = hv.pow(k);
        ker.push(p.kernel_basis());
        im.push(p.column_space());
    }
    let (ker, im) = (SubspaceFamily::new(ker), SubspaceFamily::new(im));
    (!ker.is_zero() && !im.is_zero()).then_some((ker, im))
}

fn try_split(m: &Representation, g: &Morphism) -> Option<(SubspaceFamily, SubspaceFamily)> {
    let mut eigen: Vec<Scalar> = Vec::new();
    for gv in g.maps() {
        for r in rational_roots(&characteristic_polynomial(gv)) {
            if !eigen.contains(&r) {
                eigen.push(r);
            }
        }
    }
    eigen.sort();
    let id = Morphism::identity(m);
    eigen.iter().find_map(|c| fitting_pair(m, &g.sub(&id.scale(c))))
}

/// Candidates: every basis element, then all pairwise sums.
fn candidates(e: &EndoRing) -> impl Iterator<Item = Morphism> + '_ {
    let b = e.basis();
    let singles = b.iter().cloned();
    let pairs = (0..b.len()).flat_map(move |i| (i + 1..b.len()).map(move |j| b[i].add(&b[j])));
    singles.chain(pairs)
}

/// A nontrivial Fitting decomposition of `e.module()`, if one is found
/// within the candidate budget.
pub(super) fn find_split(e: &EndoRing) -> Option<(SubspaceFamily, SubspaceFamily)> {
    let m = e.module();
    candidates(e).find_map(|g| try_split(m, &g))
}

/// Splits `m` into indecomposable summands, sorted by total dimension then
/// dimension vector. Fails as inconclusive when some summand has
/// `dim End/J > 1` and no split is found.
pub fn indecompose(m: &Representation) -> Result<Vec<Representation>> {
    let mut out = Vec::new();
    split_into(m, &mut out)?;
    out.sort_by(|a, b| a.total_dim().cmp(&b.total_dim()).then_with(|| a.dims().cmp(b.dims())));
    Ok(out)
}

fn split_into(m: &Representation, out: &mut Vec<Representation>) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let e = end_ring(m)?;
    if e.top_dim() == 1 {
        out.push(m.clone());
        return Ok(());
    }
    let Some((ker, im)) = find_split(&e) else {
        return Err(Error::Inconclusive(format!(
            "module with dims {:?} has dim End/J = {} and no Fitting split was found",
            m.dims(),
            e.top_dim()
        )));
    };
    debug_assert!(ker.to_total().intersect(&im.to_total()).map(|s| s.is_zero()).unwrap_or(false));
    split_into(&sub_from_family(m, &ker)?, out)?;
    split_into(&sub_from_family(m, &im)?, out)
}
