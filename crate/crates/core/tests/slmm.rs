use lssa_core::scalar::parse_ratfun;
use lssa_core::superlie::supertrace;
use lssa_core::slmm::*;
use lssa_core::{RatFun, Rational, Scalar};

#[test]
fn module_superdims() {
    for m in 1..=3 {
        let inst = build_instance(m).unwrap();
        let d = 2 * m * (m + 1);
        assert_eq!(inst.module.superdim(), (d, d));
        assert_eq!(inst.algebra.superdim(), (d, d));
        assert!(inst.module.check());
    }
}

#[test]
fn m1_and_m2_are_left_symmetric() {
    for m in 1..=2 {
        let inst = build_instance(m).unwrap();
        assert_eq!(inst.cocycle.q.rank(), 4 * m * (m + 1));
        assert!(inst.cocycle.check());
        let t = &inst.table;
        assert!(t.respects_parity());
        assert!(t.check_lssa(), "m={m}");
        assert!(t.brackets_match(), "m={m}");
    }
}

#[test]
fn left_multiplications_have_zero_supertrace() {
    let inst = build_instance(2).unwrap();
    let reg = inst.table.left_regular().unwrap();
    let even = reg.space().even_dim();
    for i in 0..inst.algebra.dim() {
        assert!(supertrace(reg.action(i), even).is_zero());
    }
}

#[test]
fn kernel_systems() {
    for m in 1..=3 {
        let k = kernel_system_check(m).unwrap();
        assert!(k.passed(), "{k:?}");
    }
    let k = kernel_system_check(2).unwrap();
    assert_eq!(k.gl_kernel_dim, 1);
    assert_eq!(k.supertrace, Some(Rational::from(5)));
}

/// The coefficient of `e'_p xi'_s` is `a_{p,s+1} + [p >= 2] d_{s,p-1}`.
#[test]
fn mixed_wedge_coefficients() {
    for m in 1..=3 {
        let exp = symbolic_expansion(m).unwrap();
        for p in 1..=m + 1 {
            for s in 1..=m {
                let label = format!("e{p}∧xi{s}'");
                let got = &exp.iter().find(|(l, _)| *l == label).unwrap().1;
                let mut want = RatFun::var(&format!("a{p}_{}", s + 1));
                if p >= 2 {
                    want = want.plus(&RatFun::var(&format!("d{s}_{}", p - 1)));
                }
                assert_eq!(*got, want, "m={m} {label}");
            }
        }
    }
}

/// Specializing the symbolic expansion agrees with applying the matrix of `ev_a`.
#[test]
fn expansion_specializes() {
    use lssa_core::scalar::Var;
    use lssa_core::superlie::LieSuperalgebra;
    let m = 2;
    let gl = LieSuperalgebra::gl(m + 1, m);
    let c = evaluation_cocycle::<Rational>(&gl).unwrap();
    let mut x = vec![Rational::from(0); gl.dim()];
    let mut bindings = Vec::new();
    for i in 0..2 * m + 1 {
        for j in 0..2 * m + 1 {
            let v = Rational::new((3 * i + 7 * j) as i64 % 11 - 5, 1 + (i % 3) as i64);
            x[gl.e_index(i, j).unwrap()] = v.clone();
            bindings.push((Var::new(&block_entry_name(m, i, j)), v));
        }
    }
    let direct = c.q.mul_vec(&x);
    for ((_, f), d) in symbolic_expansion(m).unwrap().into_iter().zip(direct) {
        assert_eq!(f.evaluate(&bindings).unwrap(), d);
    }
    assert_eq!(parse_ratfun("a1_2").unwrap(), RatFun::var("a1_2"));
}

#[test]
fn m_zero_rejected() {
    assert!(build_instance(0).is_err());
    assert!(kernel_system_check(0).is_err());
}
