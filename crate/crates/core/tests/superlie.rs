use lssa_core::linalg::Matrix;
use lssa_core::superlie::*;
use lssa_core::{RatFun, Rational, Scalar};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

#[test]
fn superdim_examples() {
    assert_eq!(LieSuperalgebra::sl(2, 1).superdim(), (4, 4));
    assert_eq!(LieSuperalgebra::gl(2, 0).superdim(), (4, 0));
    for m in 1..=4 {
        let d = 2 * m * (m + 1);
        assert_eq!(LieSuperalgebra::sl(m + 1, m).superdim(), (d, d));
    }
    let g = LieSuperalgebra::sl(2, 1);
    let labels: Vec<&str> = g.labels().collect();
    assert_eq!(labels, ["x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"]);
}

#[test]
fn odd_anticommutator_in_basis_coordinates() {
    let g = LieSuperalgebra::sl(2, 1);
    let e = |i, j| elementary::<Rational>(3, i, j);
    let c = supercommutator(&e(0, 2), &e(2, 0), 2).unwrap();
    assert_eq!(c, e(0, 0).add(&e(2, 2)));
    // (x3 + x4) / 2
    let coords = g.coords(&c).unwrap();
    let half = Rational::new(1, 2);
    assert_eq!(&coords[2..4], &[half.clone(), half]);
    assert!(coords.iter().enumerate().all(|(i, x)| i == 2 || i == 3 || x.is_zero()));
}

#[test]
fn supertrace_examples() {
    assert_eq!(supertrace(&Matrix::<Rational>::identity(5), 3), q(1));
    assert_eq!(supertrace(&Matrix::<Rational>::identity(3), 1), q(-1));
    let g = LieSuperalgebra::sl(2, 1);
    assert!(supertrace(&g.basis()[3].matrix, 2).is_zero());
}

#[test]
fn neg_st_has_order_four_on_odd_elements() {
    let e = |i, j| elementary::<Rational>(3, i, j);
    assert_eq!(neg_supertranspose(&e(0, 1), 2), e(1, 0).neg());
    let twice = neg_supertranspose(&neg_supertranspose(&e(0, 2), 2), 2);
    assert_eq!(twice, e(0, 2).neg());
    let g = LieSuperalgebra::sl(3, 1);
    for b in g.basis() {
        let t2 = neg_supertranspose(&neg_supertranspose(&b.matrix, 3), 3);
        if b.odd {
            assert_eq!(t2, b.matrix.neg());
        } else {
            assert_eq!(t2, b.matrix);
        }
    }
}

#[test]
fn neg_st_sends_roots_to_negatives() {
    let g = LieSuperalgebra::sl(3, 2);
    let theta = g.neg_st_map();
    for (i, b) in g.basis().iter().enumerate() {
        let Some(root) = &b.root else { continue };
        let image: Vec<usize> = theta[i].iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, _)| j).collect();
        assert_eq!(image.len(), 1);
        let target = g.basis()[image[0]].root.clone().unwrap();
        assert_eq!(target, root.scale(&q(-1)));
    }
}

#[test]
fn weight_pairing_examples() {
    let gen = |i| WeightMN::<Rational>::generator(2, 1, i);
    let a = gen(0).sub(&gen(1));
    assert_eq!(weight_pairing(&a, &a), q(2));
    let b = gen(0).sub(&gen(2));
    assert!(weight_pairing(&b, &b).is_zero());
}

/// For sl(2|1) and `lambda = (i, k)`, `(lambda + rho, eps2 - delta) = (k - i)/2`.
#[test]
fn typicality_pairing_is_half_k_minus_i() {
    let g = LieSuperalgebra::sl(2, 1);
    let (i, k) = (RatFun::var("i"), RatFun::var("k"));
    let lambda = g.weight_from_values(&[i.clone(), k.clone()]).unwrap();
    let rho = g.rho().canonical();
    let rho = WeightMN { eps: rho.eps.iter().map(RatFun::from_rational).collect(), delta: rho.delta.iter().map(RatFun::from_rational).collect() };
    let root = WeightMN::<RatFun>::generator(2, 1, 1).sub(&WeightMN::generator(2, 1, 2));
    let got = weight_pairing(&lambda.add(&rho), &root);
    assert_eq!(got, k.minus(&i).times(&RatFun::from_rational(&Rational::new(1, 2))));
}

#[test]
fn sl_is_perfect_and_graded() {
    for (m, n) in [(2, 1), (3, 1), (3, 2)] {
        let g = LieSuperalgebra::sl(m, n);
        assert_eq!(g.derived_rank(), g.dim());
        for b in g.basis() {
            assert!(supertrace(&b.matrix, m).is_zero());
        }
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let t = (g.basis()[i].grade + g.basis()[j].grade) as i32;
                for (l, _) in g.bracket(i, j) {
                    assert_eq!(g.basis()[*l].grade as i32, t);
                }
            }
        }
    }
}

#[test]
fn basis_jacobi() {
    for g in [LieSuperalgebra::sl(2, 1), LieSuperalgebra::gl(2, 1), LieSuperalgebra::sl(3, 2)] {
        assert_eq!(g.jacobi_violation(), None, "{}", g.name());
    }
}

#[test]
fn non_automorphism_rejected() {
    let g = LieSuperalgebra::sl(2, 1);
    let mut theta = g.neg_st_map();
    theta[0] = theta[0].iter().map(|x| x.times(&q(2))).collect();
    assert!(g.check_automorphism(&theta).is_err());
}

fn algebra() -> impl Strategy<Value = Algebra> {
    prop_oneof![Just((2usize, 1usize, true)), Just((3, 1, true)), Just((2, 2, false)), Just((3, 2, true))]
        .prop_map(|(m, n, sl)| if sl { LieSuperalgebra::sl(m, n) } else { LieSuperalgebra::gl(m, n) })
}

/// A homogeneous element with small integer coordinates and its parity.
fn homogeneous(g: &Algebra, odd: bool) -> impl Strategy<Value = (Vec<Rational>, bool)> {
    let idx: Vec<bool> = (0..g.dim()).map(|i| g.is_odd(i) == odd).collect();
    prop::collection::vec(-3i64..4, g.dim()).prop_map(move |v| (v.iter().zip(&idx).map(|(x, keep)| if *keep { q(*x) } else { q(0) }).collect(), odd))
}

fn algebra_with_triple() -> impl Strategy<Value = (Algebra, [(Vec<Rational>, bool); 3])> {
    algebra().prop_flat_map(|g| {
        let parts = (any::<bool>(), any::<bool>(), any::<bool>());
        (Just(g), parts).prop_flat_map(|(g, (a, b, c))| {
            let s = (homogeneous(&g, a), homogeneous(&g, b), homogeneous(&g, c));
            (Just(g), s).prop_map(|(g, (x, y, z))| (g, [x, y, z]))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, ..ProptestConfig::default() })]

    #[test]
    fn super_jacobi_on_random_homogeneous_triples((g, [x, y, z]) in algebra_with_triple()) {
        prop_assert!(g.jacobi_holds(&x.0, &y.0, &z.0, x.1, y.1, z.1));
    }

    #[test]
    fn supertrace_of_supercommutator_vanishes((g, [x, y, _]) in algebra_with_triple()) {
        let m = g.m();
        let c = supercommutator(&g.element(&x.0), &g.element(&y.0), m).unwrap();
        prop_assert!(supertrace(&c, m).is_zero());
        // the coordinate bracket agrees with the matrix one
        prop_assert_eq!(g.element(&g.bracket_vec(&x.0, &y.0)), c);
    }

    #[test]
    fn neg_st_preserves_brackets((g, [x, y, _]) in algebra_with_triple()) {
        let m = g.m();
        let (a, b) = (g.element(&x.0), g.element(&y.0));
        let lhs = supercommutator(&neg_supertranspose(&a, m), &neg_supertranspose(&b, m), m).unwrap();
        let rhs = neg_supertranspose(&supercommutator(&a, &b, m).unwrap(), m);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coords_invert_element(g in algebra(), v in prop::collection::vec(-5i64..6, 32)) {
        let c: Vec<Rational> = (0..g.dim()).map(|i| q(v[i % v.len()])).collect();
        prop_assert_eq!(g.coords(&g.element(&c)).unwrap(), c);
    }
}
