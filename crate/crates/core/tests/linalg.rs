use lssa_core::linalg::{max_rank_over_affine_family, Matrix};
use lssa_core::scalar::Var;
use lssa_core::sl21::{build_family, Family};
use lssa_core::{Error, RatFun, Rational, Scalar};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

#[test]
fn rank_examples() {
    assert_eq!(Matrix::<Rational>::identity(8).rank(), 8);
    assert_eq!(Matrix::<Rational>::zeros(3, 4).rank(), 0);
    let a = build_family(Family::A, &[RatFun::var("k")]).unwrap();
    assert_eq!(a.cocycle.q.rank(), 8);
}

#[test]
fn kernel_examples() {
    assert!(Matrix::<Rational>::identity(4).kernel().is_empty());
    let m = Matrix::<Rational>::from_i64(&[&[1, 1], &[1, 1]]);
    let k = m.kernel();
    assert_eq!(k.len(), 1);
    assert_eq!(k[0][0], k[0][1].negated());
}

#[test]
fn solve_examples() {
    let b = vec![q(3), q(-1), Rational::new(1, 2)];
    assert_eq!(Matrix::<Rational>::identity(3).solve(&b).unwrap(), b);
    let d = Matrix::<Rational>::from_i64(&[&[2, 0], &[0, 3]]);
    assert_eq!(d.solve(&[q(4), q(9)]).unwrap(), vec![q(2), q(3)]);
    let s = Matrix::<Rational>::from_i64(&[&[1, 1], &[1, 1]]);
    assert!(matches!(s.solve(&[q(1), q(2)]), Err(Error::Inconsistent)));
}

/// Solving against the evaluation map column by column gives the stored products.
#[test]
fn solve_reproduces_products() {
    let inst = build_family(Family::A, &[RatFun::var("k")]).unwrap();
    let reference = Family::A.fixture();
    for i in 0..8 {
        for j in 0..8 {
            let rhs = inst.module.action(i).mul_vec(&inst.cocycle.q.column(j));
            let x = inst.cocycle.q.solve(&rhs).unwrap();
            for (l, c) in x.iter().enumerate() {
                assert_eq!(*c, reference.coeff(i, j, l));
            }
        }
    }
}

#[test]
fn affine_family_examples() {
    assert_eq!(max_rank_over_affine_family(&[Matrix::<Rational>::identity(2)]), 2);
    let e11 = Matrix::<Rational>::from_i64(&[&[1, 0], &[0, 0]]);
    let e22 = Matrix::<Rational>::from_i64(&[&[0, 0], &[0, 1]]);
    assert_eq!(max_rank_over_affine_family(&[Matrix::zeros(2, 2), e11.clone(), e22]), 2);
    // t E11 + t' E11 never exceeds rank 1
    assert_eq!(max_rank_over_affine_family(&[Matrix::zeros(2, 2), e11.clone(), e11.scale(&q(3))]), 1);
}

fn matrix_of(r: usize, c: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..4], r * c).prop_map(move |v| Matrix::from_fn(r, c, |i, j| q(v[i * c + j])))
}

fn small_matrix() -> impl Strategy<Value = Matrix<Rational>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix_of(r, c))
}

fn matrix_pair() -> impl Strategy<Value = (Matrix<Rational>, Matrix<Rational>)> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| (matrix_of(r, c), matrix_of(r, c)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, ..ProptestConfig::default() })]

    #[test]
    fn rank_plus_nullity(m in small_matrix()) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solutions_satisfy_the_system(m in small_matrix(), seed in prop::collection::vec(-3i64..4, 6)) {
        let b: Vec<Rational> = (0..m.rows()).map(|i| q(seed[i])).collect();
        if let Ok(x) = m.solve(&b) {
            prop_assert_eq!(m.mul_vec(&x), b);
        }
        // a right-hand side in the image is always solvable
        let x0: Vec<Rational> = (0..m.cols()).map(|j| q(seed[j])).collect();
        let b2 = m.mul_vec(&x0);
        prop_assert_eq!(m.mul_vec(&m.solve(&b2).unwrap()), b2);
    }

    #[test]
    fn specialization_never_raises_rank((a, b) in matrix_pair(), t in -4i64..5) {
        let k = RatFun::var("k");
        let sym = Matrix::from_fn(a.rows(), a.cols(), |i, j| RatFun::constant(a[(i, j)].clone()).plus(&k.times(&RatFun::constant(b[(i, j)].clone()))));
        let at = sym.try_map(|x| x.evaluate(&[(Var::new("k"), q(t))])).unwrap();
        prop_assert!(at.rank() <= sym.rank());
        prop_assert_eq!(max_rank_over_affine_family(&[a, b]), sym.rank());
    }
}
