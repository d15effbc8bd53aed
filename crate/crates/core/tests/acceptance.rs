//! Acceptance gate: one line per criterion, nonzero exit on any failure.
//! All comparisons are exact; runtime limits are pinned below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use endoscope::endostructure::{endosocle, family_endosocle, power_endosocle, relative_endosocle_series};
use endoscope::family::{analyze, Family};
use endoscope::harness::{embed_summands, parse_module, short_indecomposables};
use endoscope::homalg::{are_isomorphic, hom_basis};
use endoscope::matsub::{check_endo_invariant, evaluate, random_pointed_matrix};
use endoscope::quiver::kronecker;
use endoscope::representation::{
    direct_sum, dual, kronecker_preinjective as inj, kronecker_preinjective_right, kronecker_preprojective as proj,
    kronecker_regular, Eigenvalue, Representation,
};
use endoscope::scalar::Scalar;
use endoscope::tnilpotence::harada_sai_check;

const LIMIT_PREINJECTIVE: Duration = Duration::from_secs(10);
const LIMIT_TRIMMED: Duration = Duration::from_secs(10);
const LIMIT_PREPROJECTIVE: Duration = Duration::from_secs(10);
const LIMIT_HARADA_SAI: Duration = Duration::from_secs(60);
const LIMIT_MATSUB: Duration = Duration::from_secs(30);
/// Criteria without a stated limit still get a ceiling so a hang fails.
const LIMIT_DEFAULT: Duration = Duration::from_secs(120);

/// Exact arithmetic throughout: the only admissible difference is zero.
const TOLERANCE: usize = 0;

const MATSUB_SEED: u64 = 2024;
const MATSUB_SAMPLES: usize = 100;
const HARADA_SAI_LENGTH: usize = 5;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn preinjective_endosocle() -> Outcome {
    for n in 4..=12 {
        let r = family_endosocle(&analyze(&Family::preinjective(1..=n).map_err(err)?).map_err(err)?);
        ensure(r.support == [1, 2], || format!("N={n}: support {:?}", r.support))?;
        ensure(r.dim_at(1) == 1 && r.dim_at(2) == 1, || format!("N={n}: dims {} {}", r.dim_at(1), r.dim_at(2)))?;
        ensure((3..=n).all(|i| r.dim_at(i) == TOLERANCE), || format!("N={n}: nonzero B_i for i >= 3"))?;
    }
    Ok("N=4..12 support {1,2}, dims 1,1".into())
}

fn trimmed_preinjective() -> Outcome {
    for m in 2..=6 {
        let n = m + 6;
        let fam = Family::preinjective(m..=n).map_err(err)?;
        ensure(fam.boundary() == [n], || format!("m={m}: boundary {:?}", fam.boundary()))?;
        let r = family_endosocle(&analyze(&fam).map_err(err)?);
        ensure(r.interior_support() == [m], || format!("m={m}: support {:?}", r.support))?;
        let b = r.part(m).ok_or("missing B_m")?;
        ensure(b.is_full_in(&inj(m).map_err(err)?) && b.total_dim() == 2 * m - 1, || format!("m={m}: dim {}", b.total_dim()))?;
    }
    Ok("m=2..6 support {m}, B_m = I_m".into())
}

fn preprojective_vanishing() -> Outcome {
    for n in 3..=10 {
        let fam = Family::preprojective(1..=n).map_err(err)?;
        let r = family_endosocle(&analyze(&fam).map_err(err)?);
        for i in 1..n {
            ensure(!fam.is_boundary(i) && r.dim_at(i) == 0, || format!("N={n}: B_{i} has dim {}", r.dim_at(i)))?;
        }
    }
    Ok("N=3..10 interior B_i = 0".into())
}

fn relative_series() -> Outcome {
    for n in [5usize, 8] {
        let s = relative_endosocle_series(&analyze(&Family::preinjective(1..=n).map_err(err)?).map_err(err)?).map_err(err)?;
        let mut want = vec![vec![1, 2]];
        want.extend((3..=n).map(|i| vec![i]));
        ensure(s.supports() == want, || format!("N={n}: supports {:?}", s.supports()))?;
        ensure(s.length == n - 1, || format!("N={n}: length {}", s.length))?;
    }
    Ok("N=5,8 supports {1,2},{3},...,{N}; length N-1".into())
}

fn homogeneous_power() -> Outcome {
    let mods = [inj(2).map_err(err)?, kronecker_regular(2, &Eigenvalue::Finite(Scalar::zero())).map_err(err)?];
    for m in &mods {
        let base = endosocle(m).map_err(err)?;
        for k in [2usize, 3] {
            let ds = direct_sum(m.presentation(), &vec![m.clone(); k]).map_err(err)?;
            let expected = ds.assemble(&vec![base.clone(); k]).map_err(err)?;
            let got = power_endosocle(m, k).map_err(err)?;
            ensure(got.total_dim() == k * base.total_dim(), || format!("{m} k={k}: dim {}", got.total_dim()))?;
            ensure(got == expected, || format!("{m} k={k}: subspaces differ"))?;
        }
    }
    Ok("I2, R2(0) with k=2,3".into())
}

fn duality() -> Outcome {
    let mut corpus: Vec<Representation> = Vec::new();
    for n in 1..=5 {
        corpus.push(inj(n).map_err(err)?);
        corpus.push(proj(n).map_err(err)?);
        for l in [Eigenvalue::Finite(Scalar::zero()), Eigenvalue::Finite(Scalar::one()), Eigenvalue::Infinity] {
            corpus.push(kronecker_regular(n, &l).map_err(err)?);
        }
    }
    for m in &corpus {
        let dd = dual(&dual(m));
        let c = are_isomorphic(&dd, m).map_err(err)?;
        let f = c.forward().ok_or_else(|| format!("D(D({m})) not isomorphic"))?;
        ensure(f.is_homomorphism(&dd, m), || "certificate is not a homomorphism".into())?;
    }
    let duals: Vec<Representation> = corpus.iter().map(dual).collect();
    for (i, m) in corpus.iter().enumerate() {
        for (j, n) in corpus.iter().enumerate() {
            let a = hom_basis(m, n).map_err(err)?.dim();
            let b = hom_basis(&duals[j], &duals[i]).map_err(err)?.dim();
            ensure(a == b, || format!("pair ({i},{j}): {a} vs {b}"))?;
        }
    }
    for n in 1..=5 {
        let d = dual(&kronecker_preinjective_right(n).map_err(err)?);
        ensure(d.dims() == [n - 1, n], || format!("n={n}: dims {:?}", d.dims()))?;
    }
    Ok(format!("{} modules, {} pairs", corpus.len(), corpus.len() * corpus.len()))
}

/// Straightforward nullspace dimension over `BigRational`, independent of
/// the library's linear algebra.
mod oracle {
    use super::*;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    /// Zig-zag string module with `n` tops: `(alpha, beta)` as row lists,
    /// each `(n-1) x n`.
    pub fn preinjective(n: usize) -> (Vec<Vec<Q>>, Vec<Vec<Q>>) {
        let mut alpha = vec![vec![q(0); n]; n - 1];
        let mut beta = vec![vec![q(0); n]; n - 1];
        for j in 0..n - 1 {
            beta[j][j] = q(1);
            alpha[j][j + 1] = q(1);
        }
        (alpha, beta)
    }

    fn rank(mut rows: Vec<Vec<Q>>, cols: usize) -> usize {
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
            rows.swap(r, p);
            let inv = Q::one() / rows[r][c].clone();
            for x in rows[r].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let f = rows[i][c].clone();
                    for k in 0..cols {
                        let v = rows[r][k].clone() * f.clone();
                        rows[i][k] = rows[i][k].clone() - v;
                    }
                }
            }
            r += 1;
        }
        r
    }

    /// `dim Hom(I_i, I_j)`: unknowns `f1 (j x i)` and `f2 ((j-1) x (i-1))`,
    /// equations `f2 A = A' f1` for both arrows.
    pub fn hom_dim(i: usize, j: usize) -> usize {
        let (m, mm) = (preinjective(i), preinjective(j));
        let (s1, s2, t1, t2) = (i, i - 1, j, j - 1);
        let nvars = t1 * s1 + t2 * s2;
        let f1 = |r: usize, c: usize| r * s1 + c;
        let f2 = |r: usize, c: usize| t1 * s1 + r * s2 + c;
        let mut rows = Vec::new();
        for (a, b) in [(&m.0, &mm.0), (&m.1, &mm.1)] {
            for r in 0..t2 {
                for c in 0..s1 {
                    let mut row = vec![q(0); nvars];
                    for k in 0..s2 {
                        row[f2(r, k)] = row[f2(r, k)].clone() + a[k][c].clone();
                    }
                    for k in 0..t1 {
                        row[f1(k, c)] = row[f1(k, c)].clone() - b[r][k].clone();
                    }
                    rows.push(row);
                }
            }
        }
        nvars - rank(rows, nvars)
    }
}

fn hom_table() -> Outcome {
    for i in 1..=6usize {
        for j in 1..=6usize {
            let want = (i + 1).saturating_sub(j);
            let fast = hom_basis(&inj(i).map_err(err)?, &inj(j).map_err(err)?).map_err(err)?.dim();
            let slow = oracle::hom_dim(i, j);
            ensure(fast == want && slow == want, || format!("Hom(I{i},I{j}): library {fast}, oracle {slow}, formula {want}"))?;
        }
    }
    Ok("36 pairs agree with oracle and formula".into())
}

fn harada_sai() -> Outcome {
    let fam = short_indecomposables().map_err(err)?;
    ensure(fam.members().iter().all(|m| m.rep.length() <= HARADA_SAI_LENGTH), || "member too long".into())?;
    let r = harada_sai_check(&analyze(&fam).map_err(err)?, HARADA_SAI_LENGTH).map_err(err)?;
    ensure(r.bound == 31, || format!("bound {}", r.bound))?;
    ensure(r.pass, || format!("depth {:?} exceeds {}", r.depth, r.bound))?;
    Ok(format!("{} members, depth {} <= {}", fam.len(), r.depth.unwrap_or(0), r.bound))
}

fn regular_support() -> Outcome {
    for n in 3..=10i64 {
        let lambdas: Vec<Eigenvalue> = (0..n).map(|l| Eigenvalue::Finite(Scalar::from_int(l))).collect();
        let r = family_endosocle(&analyze(&Family::regular(1, &lambdas).map_err(err)?).map_err(err)?);
        ensure(r.support.len() == n as usize, || format!("N={n}: support size {}", r.support.len()))?;
    }
    Ok("support size N for N=3..10".into())
}

fn matrix_subgroups() -> Outcome {
    let k = kronecker();
    for (a, b) in [(inj(1).map_err(err)?, inj(2).map_err(err)?), (proj(2).map_err(err)?, inj(2).map_err(err)?)] {
        let ds = direct_sum(&k, &[a.clone(), b.clone()]).map_err(err)?;
        let mut rng = ChaCha8Rng::seed_from_u64(MATSUB_SEED);
        for t in 0..MATSUB_SAMPLES {
            let pm = random_pointed_matrix(&mut rng, &k, 1 + t % 3, 1 + (t / 3) % 3);
            let whole = evaluate(&pm, &ds.sum).map_err(err)?;
            ensure(check_endo_invariant(&whole, &ds.sum).map_err(err)?, || format!("sample {t}: not endo-invariant"))?;
            let parts = [evaluate(&pm, &a).map_err(err)?, evaluate(&pm, &b).map_err(err)?];
            ensure(whole == embed_summands(&ds, &parts), || format!("sample {t}: not additive"))?;
        }
    }
    Ok(format!("{MATSUB_SAMPLES} samples on I1+I2 and P2+I2"))
}

fn two_route() -> Outcome {
    let families: [&[&str]; 5] = [
        &["I1", "I2", "I3"],
        &["P1", "P2", "I2", "R1(0)"],
        &["R2(0)", "R1(0)", "R1(1)", "I2"],
        &["P3", "R2(inf)", "I1"],
        &["P2", "I3", "R1(1/2)", "R3(1)"],
    ];
    for names in families {
        let reps = names.iter().map(|n| parse_module(n)).collect::<Result<Vec<_>, _>>().map_err(err)?;
        let r = family_endosocle(&analyze(&Family::from_reps(reps.clone()).map_err(err)?).map_err(err)?);
        let ds = direct_sum(&kronecker(), &reps).map_err(err)?;
        let assembled = ds.assemble(&r.parts).map_err(err)?;
        let direct = endosocle(&ds.sum).map_err(err)?;
        ensure(assembled == direct, || format!("{names:?}: {:?} vs {:?}", assembled.dims(), direct.dims()))?;
    }
    Ok("5 mixed families agree".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 11] = [
        ("preinjective endosocle", preinjective_endosocle, LIMIT_PREINJECTIVE),
        ("trimmed preinjectives", trimmed_preinjective, LIMIT_TRIMMED),
        ("preprojective vanishing", preprojective_vanishing, LIMIT_PREPROJECTIVE),
        ("relative endosocle series", relative_series, LIMIT_DEFAULT),
        ("homogeneous power endosocle", homogeneous_power, LIMIT_DEFAULT),
        ("duality", duality, LIMIT_DEFAULT),
        ("hom-dimension table", hom_table, LIMIT_DEFAULT),
        ("radical depth bound", harada_sai, LIMIT_HARADA_SAI),
        ("regular support growth", regular_support, LIMIT_DEFAULT),
        ("matrix-subgroup invariance", matrix_subgroups, LIMIT_MATSUB),
        ("two-route endosocle", two_route, LIMIT_DEFAULT),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= *limit => (true, d),
            Ok(d) => (false, format!("{d}; took {elapsed:?}, limit {limit:?}")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} {:>2} {name} ({:.2}s, limit {}s): {detail}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
