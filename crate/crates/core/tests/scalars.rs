use lssa_core::scalar::{parse_ratfun, Monomial, Poly, Var};
use lssa_core::{Error, RatFun, Rational, Scalar};
use proptest::prelude::*;

fn r(s: &str) -> RatFun {
    parse_ratfun(s).unwrap()
}

#[test]
fn cancellation_examples() {
    assert_eq!(r("(k+2)/(k+1)").times(&r("k+1")), r("k+2"));
    assert_eq!(r("1/(2*(k+1))").plus(&r("1/(2*(k+1))")), r("1/(k+1)"));
    assert_eq!(r("(k^2-1)/(k+1)"), r("k-1"));
    assert_eq!(r("(k^2-1)/(k+1)").to_string(), "k-1");
}

#[test]
fn canonical_form_examples() {
    assert_eq!(r("(k+1)*(k+1)").to_string(), "k^2+2*k+1");
    assert_eq!(r("(k^2+2*k+2)/(k+1)").to_string(), "(k^2+2*k+2)/(k+1)");
    // denominators are monic
    let x = r("1/(2*k+2)");
    assert_eq!(x.denominator(), &r("k+1").numerator().clone());
    assert_eq!(r("0/(k+3)"), RatFun::zero());
}

#[test]
fn rational_invariants() {
    let x = Rational::new(6, -4);
    assert_eq!(x.to_string(), "-3/2");
    assert_eq!(x.denom().to_string(), "2");
    assert_eq!(Rational::new(0, -7).to_string(), "0");
    assert!(matches!(Rational::from(0).inverse(), Err(Error::DivisionByZero)));
    assert!(matches!(RatFun::zero().inverse(), Err(Error::DivisionByZero)));
}

#[test]
fn substitution_examples() {
    let k = Var::new("k");
    assert_eq!(r("1/(2*(k+1))").evaluate(&[(k, Rational::from(0))]).unwrap(), Rational::new(1, 2));
    assert_eq!(r("(k+3)/4").evaluate(&[(k, Rational::from(1))]).unwrap(), Rational::from(1));
    assert!(matches!(r("1/(k+1)").evaluate(&[(k, Rational::from(-1))]), Err(Error::DenominatorVanishes(_))));
    // partial substitution stays in the function field
    let k1 = Var::new("k1");
    assert_eq!(r("k1*k2/(k1+k2)").substitute(&[(k1, Rational::from(1))]).unwrap(), r("k2/(k2+1)"));
}

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| Rational::new(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-4i64..5, 0u32..3, 0u32..2), 1..4).prop_map(|ts| {
        let (a, b) = (Var::new("k1"), Var::new("k2"));
        Poly::from_terms(ts.into_iter().map(|(c, e1, e2)| (Monomial::var(a, e1).mul(&Monomial::var(b, e2)), Rational::from(c))))
    })
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(), poly()).prop_map(|(n, d)| if d.is_zero() { RatFun::from_poly(n) } else { RatFun::new(n, d).unwrap() })
}

fn nonzero_ratfun() -> impl Strategy<Value = RatFun> {
    ratfun().prop_filter("nonzero", |x| !x.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational()) {
        prop_assert_eq!(a.plus(&b).minus(&b), a.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.times(&b).over(&b).unwrap(), a.clone());
        }
        prop_assert_eq!(a.plus(&b), b.plus(&a));
    }

    #[test]
    fn ratfun_field_axioms(a in ratfun(), b in nonzero_ratfun()) {
        prop_assert_eq!(a.plus(&b).minus(&b), a.clone());
        prop_assert_eq!(a.times(&b).over(&b).unwrap(), a.clone());
        prop_assert_eq!(a.times(&b), b.times(&a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn canonical_is_idempotent(a in ratfun()) {
        let s = a.canonical();
        let back = parse_ratfun(&s).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.canonical(), s);
    }

    #[test]
    fn distributive(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
    }

    #[test]
    fn substitution_is_a_homomorphism(f in ratfun(), g in ratfun(), x in rational(), y in rational()) {
        let at = [(Var::new("k1"), x), (Var::new("k2"), y)];
        if let (Ok(fv), Ok(gv)) = (f.evaluate(&at), g.evaluate(&at)) {
            prop_assert_eq!(f.times(&g).evaluate(&at).unwrap(), fv.times(&gv));
            prop_assert_eq!(f.plus(&g).evaluate(&at).unwrap(), fv.plus(&gv));
        }
    }
}
