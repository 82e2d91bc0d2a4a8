use lssa_core::nonexist::*;
use lssa_core::reps::Representation;
use lssa_core::superlie::LieSuperalgebra;
use lssa_core::{Error, Rational, Scalar};

#[test]
fn superdimensions() {
    assert_eq!(build_p(3).unwrap().superdim(), (9, 6));
    assert_eq!(build_q3().unwrap().superdim(), (9, 6));
    assert_eq!(Candidate::PDual(5).build().unwrap().superdim(), (25, 10));
    assert_eq!(Candidate::Q3Dual.build().unwrap().superdim(), (9, 6));
    for m in 3..=5 {
        let g = LieSuperalgebra::sl(m, 1);
        assert_eq!(build_p(m).unwrap().dim(), g.dim());
    }
}

#[test]
fn candidates_are_modules() {
    for c in Candidate::all(3).into_iter().chain(Candidate::all(4)) {
        assert!(c.build().unwrap().check(), "{c}");
    }
}

#[test]
fn all_witnesses_certify() {
    for m in 3..=5 {
        let reports = certify_all(m).unwrap();
        assert_eq!(reports.len(), if m == 3 { 4 } else { 2 });
        for r in &reports {
            assert!(r.certified(), "{r:?}");
        }
    }
}

#[test]
fn q3_designated_ranks_are_two() {
    for c in [Candidate::Q3, Candidate::Q3Dual] {
        let r = certify_no_bijective_ev(c, &c.build().unwrap()).unwrap();
        assert_eq!((r.certified_rank, r.required_rank), (2, 3), "{c}");
    }
}

#[test]
fn p4_witness_element() {
    let r = certify_no_bijective_ev(Candidate::P(4), &build_p(4).unwrap()).unwrap();
    assert_eq!(r.elements, vec!["E_1_5".to_string()]);
    assert_eq!(r.certified_rank, 0);
    let r = certify_no_bijective_ev(Candidate::PDual(3), &Candidate::PDual(3).build().unwrap()).unwrap();
    assert_eq!(r.elements, vec!["E_4_1".to_string()]);
}

/// The certificates are not vacuous: the same test fails on modules of the other kind.
#[test]
fn sanity_inversions() {
    for m in 3..=5 {
        let g = LieSuperalgebra::sl(m, 1);
        let std: Representation<Rational> = Representation::standard(&g);
        let down = std.action(g.e_index(m, 0).unwrap());
        assert!(std.space().even_range().any(|c| (0..std.dim()).any(|r| !down[(r, c)].is_zero())));
        let dual = std.dual();
        let up = dual.action(g.e_index(0, m).unwrap());
        assert!(dual.space().even_range().any(|c| (0..dual.dim()).any(|r| !up[(r, c)].is_zero())));
        // P's witness applied to P*, and the reverse
        assert!(matches!(certify_no_bijective_ev(Candidate::P(m), &Candidate::PDual(m).build().unwrap()), Err(Error::CertificationFailed(_))));
        assert!(matches!(certify_no_bijective_ev(Candidate::PDual(m), &build_p(m).unwrap()), Err(Error::CertificationFailed(_))));
    }
    // the Q3 triple has full rank on the dual candidate
    let q3 = build_q3().unwrap();
    let g = q3.algebra().clone();
    let down: Vec<usize> = (0..3).map(|j| g.e_index(3, j).unwrap()).collect();
    assert_eq!(designated_generic_rank(&q3, &down), 3);
}

#[test]
fn even_part_of_p_is_m_copies_of_the_standard_module() {
    for m in 3..=5 {
        let p = build_p(m).unwrap();
        let g = p.algebra().clone();
        let std: Representation<Rational> = Representation::standard(&g);
        let top = std.even_highest_vectors().unwrap();
        let e1 = top.iter().find(|(_, v)| !v[0].is_zero()).unwrap().0.clone();
        let even = p.space().even_range();
        let found: Vec<_> = p
            .even_highest_vectors()
            .unwrap()
            .into_iter()
            .filter(|(_, v)| v.iter().enumerate().all(|(i, c)| c.is_zero() || even.contains(&i)))
            .collect();
        assert_eq!(found.len(), m);
        assert!(found.iter().all(|(w, _)| *w == e1));
        assert_eq!(p.space().even_dim(), m * m);
    }
}

#[test]
fn small_m_rejected() {
    assert!(matches!(build_p(2), Err(Error::Invalid(_))));
    assert!(certify_all(1).is_err());
}
