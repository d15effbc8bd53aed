use proptest::prelude::*;

use endoscope::endostructure::{common_kernel, endosocle, family_endosocle};
use endoscope::family::{analyze, Family};
use endoscope::homalg::{are_isomorphic, end_ring, hom_basis, IsoCertificate, Morphism};
use endoscope::linalg::{Mat, Subspace};
use endoscope::matsub::{check_endo_invariant, evaluate, random_pointed_matrix};
use endoscope::quiver::kronecker;
use endoscope::representation::{
    direct_sum, dual, kronecker_preinjective as inj, kronecker_preprojective as proj, kronecker_regular, Eigenvalue,
    Representation,
};
use endoscope::scalar::Scalar;
use endoscope::tnilpotence::radical_profile;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Scalar::new(n, d))
}

fn big() -> impl Strategy<Value = Scalar> {
    (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Scalar::new(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    // sparse small entries give nontrivial kernels
    proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..4], rows * cols)
        .prop_map(move |v| Mat::from_vec(rows, cols, v.into_iter().map(Scalar::from_int).collect()).unwrap())
}

fn any_matrix() -> impl Strategy<Value = Mat> {
    (0usize..6, 0usize..6).prop_flat_map(|(r, c)| matrix(r, c))
}

fn module() -> impl Strategy<Value = Representation> {
    prop_oneof![
        (1usize..5).prop_map(|n| inj(n).unwrap()),
        (1usize..5).prop_map(|n| proj(n).unwrap()),
        (1usize..4, prop_oneof![Just(None), (-2i64..3).prop_map(Some)]).prop_map(|(n, l)| {
            let l = l.map_or(Eigenvalue::Infinity, |x| Eigenvalue::Finite(Scalar::from_int(x)));
            kronecker_regular(n, &l).unwrap()
        }),
    ]
}

fn invertible(n: usize) -> impl Strategy<Value = Mat> {
    matrix(n, n).prop_filter("invertible", Mat::is_invertible)
}

fn rebased(m: Representation) -> impl Strategy<Value = (Representation, Representation)> {
    let dims = m.dims().to_vec();
    (invertible(dims[0]), invertible(dims[1])).prop_map(move |(a, b)| {
        let other = m.rebase(&[a, b]).unwrap();
        (m.clone(), other)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_matches_bigrational(a in big(), b in big()) {
        let (x, y) = (a.to_ratio(), b.to_ratio());
        prop_assert_eq!((&a + &b).to_ratio(), &x + &y);
        prop_assert_eq!((&a - &b).to_ratio(), &x - &y);
        prop_assert_eq!((&a * &b).to_ratio(), &x * &y);
        if !b.is_zero() {
            prop_assert_eq!((&a / &b).to_ratio(), &x / &y);
        }
        prop_assert_eq!(a.cmp(&b), x.cmp(&y));
        prop_assert_eq!(Scalar::from_ratio(x.clone()), a.clone());
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if let Some(inv) = a.recip() {
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn rank_nullity_and_kernel(m in any_matrix()) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
        }
        prop_assert_eq!(m.column_space().dim(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn inverse_is_two_sided(m in (1usize..5).prop_flat_map(invertible)) {
        let inv = m.inverse().unwrap();
        prop_assert_eq!(m.mul(&inv), Mat::identity(m.rows()));
        prop_assert_eq!(inv.mul(&m), Mat::identity(m.rows()));
    }

    #[test]
    fn subspace_dimension_formula(a in matrix(5, 3), b in matrix(5, 3)) {
        let u = Subspace::from_columns(5, &a.columns());
        let v = Subspace::from_columns(5, &b.columns());
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(i.is_subspace_of(&u).unwrap() && i.is_subspace_of(&v).unwrap());
        prop_assert!(u.is_subspace_of(&s).unwrap());
        // canonical form: equal spans compare equal
        let doubled: Vec<Vec<Scalar>> = a.columns().iter().map(|c| c.iter().map(|x| x * &Scalar::from_int(2)).collect()).collect();
        prop_assert_eq!(Subspace::from_columns(5, &doubled), u);
    }

    #[test]
    fn hom_elements_commute(m in module(), n in module()) {
        let h = hom_basis(&m, &n).unwrap();
        for f in h.basis() {
            prop_assert!(f.is_homomorphism(&m, &n));
        }
    }

    #[test]
    fn end_of_sum_formula(m in module(), n in module()) {
        let s = direct_sum(&kronecker(), &[m.clone(), n.clone()]).unwrap().sum;
        let d = |a: &Representation, b: &Representation| hom_basis(a, b).unwrap().dim();
        prop_assert_eq!(d(&s, &s), d(&m, &m) + d(&n, &n) + d(&m, &n) + d(&n, &m));
    }

    #[test]
    fn duality_reverses_hom(m in module(), n in module()) {
        let a = hom_basis(&m, &n).unwrap().dim();
        let b = hom_basis(&dual(&n), &dual(&m)).unwrap().dim();
        prop_assert_eq!(a, b);
        prop_assert_eq!(dual(&dual(&m)), m);
    }

    #[test]
    fn radical_is_nilpotent_ideal(m in module(), n in module()) {
        let s = direct_sum(&kronecker(), &[m, n]).unwrap().sum;
        let e = end_ring(&s).unwrap();
        let j = e.radical_morphisms();
        for r in &j {
            for b in e.basis() {
                prop_assert!(e.in_radical(&r.compose(b).unwrap()));
                prop_assert!(e.in_radical(&b.compose(r).unwrap()));
            }
        }
        let k = e.nilpotency_index().unwrap();
        prop_assert!(k <= e.dim().max(1));
    }

    #[test]
    fn isomorphism_is_an_equivalence((m, other) in module().prop_flat_map(rebased), third in module()) {
        let c = are_isomorphic(&m, &other).unwrap();
        prop_assert!(c.is_iso());
        let back = are_isomorphic(&other, &m).unwrap();
        prop_assert!(back.is_iso());
        let f = c.forward().unwrap();
        let g = back.forward().unwrap();
        prop_assert!(g.compose(f).unwrap().is_isomorphism());
        // a certified answer against an unrelated module is symmetric
        let x = are_isomorphic(&m, &third).unwrap();
        let y = are_isomorphic(&third, &m).unwrap();
        prop_assert_eq!(x.is_iso(), y.is_iso());
        prop_assert!(!matches!(x, IsoCertificate::PresumedNo));
    }

    #[test]
    fn matrix_subgroups_are_endo_submodules(seed in any::<u64>(), m in module(), n in module()) {
        let s = direct_sum(&kronecker(), &[m, n]).unwrap().sum;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pm = random_pointed_matrix(&mut rng, &kronecker(), 2, 2);
        prop_assert!(check_endo_invariant(&evaluate(&pm, &s).unwrap(), &s).unwrap());
    }
}

fn lengths_ok(fam: &Family) -> bool {
    fam.members().iter().all(|m| m.rep.length() > 0)
}

#[test]
fn family_endosocle_is_killed_by_radical_and_nonisos() {
    let fams = [Family::preinjective(1..=6).unwrap(), Family::preprojective(1..=5).unwrap(), {
        let reps = vec![inj(2).unwrap(), proj(3).unwrap(), kronecker_regular(2, &Eigenvalue::Infinity).unwrap()];
        Family::from_reps(reps).unwrap()
    }];
    for fam in fams {
        assert!(lengths_ok(&fam));
        let a = analyze(&fam).unwrap();
        let r = family_endosocle(&a);
        for (i, b) in r.parts.iter().enumerate() {
            assert!(b.is_arrow_closed(&fam.members()[i].rep));
            for f in a.end(i).radical_morphisms() {
                for (v, part) in b.parts().iter().enumerate() {
                    assert!(part.image(&f.maps()[v]).is_zero());
                }
            }
            for j in 0..a.len() {
                for f in a.noniso(i, j).basis() {
                    for (v, part) in b.parts().iter().enumerate() {
                        assert!(part.image(&f.maps()[v]).is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn trimming_only_enlarges_endosocles() {
    let full = analyze(&Family::preinjective(1..=7).unwrap()).unwrap();
    let base = family_endosocle(&full);
    for start in 1..7 {
        let positions: Vec<usize> = (start..7).collect();
        let trimmed = family_endosocle(&full.restrict(&positions));
        for (k, &p) in positions.iter().enumerate() {
            assert!(base.parts[p].is_subfamily_of(&trimmed.parts[k]).unwrap());
        }
    }
}

#[test]
fn embedded_chain_has_trivial_endosocle_below_top() {
    // P_1 -> P_2 -> ... -> P_6 are monomorphisms
    let fam = Family::preprojective(1..=6).unwrap();
    let a = analyze(&fam).unwrap();
    for i in 0..5 {
        assert!(a.noniso(i, i + 1).basis().iter().any(|f| f.maps().iter().all(|m| m.rank() == m.cols())));
    }
    let r = family_endosocle(&a);
    assert!((1..6).all(|i| r.dim_at(i) == 0));
}

#[test]
fn radical_profile_descends_and_dualizes() {
    let fam = Family::from_reps(vec![
        proj(1).unwrap(),
        proj(2).unwrap(),
        kronecker_regular(2, &Eigenvalue::Finite(Scalar::zero())).unwrap(),
        kronecker_regular(1, &Eigenvalue::Finite(Scalar::zero())).unwrap(),
        inj(2).unwrap(),
        inj(1).unwrap(),
    ])
    .unwrap();
    let right = radical_profile(&analyze(&fam).unwrap(), 16).unwrap();
    let depth = right.vanishing_depth.unwrap();
    let left = radical_profile(&analyze(&fam.dual()).unwrap(), 16).unwrap();
    assert_eq!(left.vanishing_depth, Some(depth));
    for i in 0..fam.len() {
        for j in 0..fam.len() {
            let dims = &right.dims[i][j];
            assert!(dims.windows(2).skip(1).all(|w| w[0] >= w[1]));
            assert_eq!(right.dim(i, j, depth), 0);
            for d in 0..=depth {
                assert_eq!(right.dim(i, j, d), left.dim(j, i, d));
            }
            // every composite of basis non-isomorphisms of length d+1 lies in rad^d
            for d in 1..depth {
                let h = hom_basis(&fam.members()[i].rep, &fam.members()[j].rep).unwrap();
                let span = right.basis(i, j, d);
                let mut comp: Vec<Morphism> = Vec::new();
                for k in 0..fam.len() {
                    for f in right.basis(i, k, d) {
                        for g in right.basis(k, j, 1) {
                            comp.push(g.compose(f).unwrap());
                        }
                    }
                }
                let coords = |fs: &[Morphism]| fs.iter().map(|f| h.coordinates(f).unwrap()).collect::<Vec<_>>();
                let s = Subspace::from_columns(h.dim(), &coords(span));
                for c in coords(&comp) {
                    assert!(s.contains(&c));
                }
            }
        }
    }
}

#[test]
fn endosocle_of_sum_matches_common_kernel() {
    let s = direct_sum(&kronecker(), &[inj(1).unwrap(), inj(2).unwrap(), inj(3).unwrap()]).unwrap().sum;
    let e = end_ring(&s).unwrap();
    assert_eq!(endosocle(&s).unwrap(), common_kernel(s.dims(), &e.radical_morphisms()));
}
