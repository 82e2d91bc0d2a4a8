//! Verification suites as [`Report`]s, shared by the command line and the tests.

use crate::error::{Error, Result};
use crate::json::table_to_json;
use crate::linalg::Matrix;
use crate::lssa::{cocycles_vanishing_on_even, difference_is_even_module_map, evaluation_map, lssa_from_cocycle, Cocycle, ProductTable};
use crate::nonexist;
use crate::report::{Check, Report};
use crate::reps::Representation;
use crate::scalar::{RatFun, Rational, Scalar};
use crate::sl21::{self, Family, Weight21};
use crate::slmm;
use crate::superlie::{neg_supertranspose, supercommutator, supertrace, Algebra, LieSuperalgebra};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

/// Default seed of the randomized suites.
pub const DEFAULT_SEED: u64 = 0x5eed_1a55;

/// Parity, left-symmetry, bracket recovery and vanishing supertraces of `rho` and `gamma`.
pub fn product_checks<F: Scalar>(t: &ProductTable<F>) -> Vec<Check> {
    let g = t.algebra().clone();
    let label = |i: usize| g.basis()[i].label.clone();
    let mut out = vec![Check::new("parity", t.respects_parity(), "products respect the grading")];
    out.push(match t.lssa_violation() {
        None => Check::new("left-symmetry", true, format!("all {} ordered triples", g.dim().pow(3))),
        Some((i, j, l)) => Check::new("left-symmetry", false, "associator not supersymmetric").with_payload(json!({"triple": [label(i), label(j), label(l)]})),
    });
    out.push(match t.bracket_mismatch() {
        None => Check::new("bracket", true, format!("supercommutator equals the bracket of {}", g.name())),
        Some((i, j)) => Check::new("bracket", false, "supercommutator differs").with_payload(json!({"pair": [label(i), label(j)]})),
    });
    let rho = t.left_regular_unchecked();
    let even = g.superdim().0;
    let bad: Vec<String> =
        (0..g.dim()).filter(|&x| !supertrace(rho.action(x), even).is_zero() || !supertrace(&t.right_mul(x), even).is_zero()).map(label).collect();
    out.push(Check::new("supertrace", bad.is_empty(), "str rho(x) = str gamma(x) = 0 on the basis").with_payload(if bad.is_empty() { Value::Null } else { json!(bad) }));
    out
}

pub fn check_product(t: &ProductTable<RatFun>) -> Report {
    let mut r = Report::new(format!("check-product {}", t.algebra().name()));
    r.extend(product_checks(t));
    r
}

/// Evenness, the cocycle identity, bijectivity and, when bijective, the induced product.
pub fn check_cocycle(c: &Cocycle<RatFun>) -> Report {
    let g = c.rep.algebra().clone();
    let mut r = Report::new(format!("check-cocycle {}", g.name()));
    r.push(Check::new("module", c.rep.check(), format!("superdim {}|{}", c.rep.superdim().0, c.rep.superdim().1)));
    r.push(Check::new("even", c.is_even(), "q preserves parity"));
    r.push(match c.violation() {
        None => Check::new("cocycle", true, "identity holds on all basis pairs"),
        Some((i, j)) => Check::new("cocycle", false, "identity fails").with_payload(json!([g.basis()[i].label, g.basis()[j].label])),
    });
    match lssa_from_cocycle(c) {
        Ok(t) => {
            r.push(Check::new("bijective", true, format!("rank {}", g.dim())));
            r.extend(product_checks(&t).into_iter().map(|mut ch| {
                ch.name = format!("product {}", ch.name);
                ch
            }));
        }
        Err(e) => r.push(Check::new("bijective", false, e.to_string())),
    }
    r
}

pub fn verify_tables_symbolic() -> Result<Report> {
    let mut r = Report::new("verify-tables (symbolic)");
    for c in sl21::verify_reference_tables()? {
        r.extend(c.entry_checks(&c.family.to_string()));
    }
    Ok(r)
}

pub fn verify_tables_at(bindings: &[(String, Rational)]) -> Result<Report> {
    let point: Vec<String> = bindings.iter().map(|(n, v)| format!("{n}={v}")).collect();
    let mut r = Report::new(format!("verify-tables at {}", point.join(",")));
    for (fam, res) in sl21::verify_reference_tables_at(bindings)? {
        match res {
            Ok(c) => r.extend(c.entry_checks(&fam.to_string())),
            Err(e) => r.push(Check::new(format!("table {fam}"), false, e.to_string())),
        }
    }
    Ok(r)
}

/// Builds a family member; parameters may be numbers or expressions in the parameter names.
pub fn build(fam: Family, params: &[RatFun]) -> Result<(Report, Value)> {
    let inst = sl21::build_family(fam, params)?;
    let mut r = Report::new(format!("build {fam}"));
    r.extend(product_checks(&inst.table));
    Ok((r, table_to_json(&inst.table)))
}

/// Bijectivity, the kernel computation over gl and the product checks for sl(m+1|m).
pub fn sl_mm(m: usize, max_m: usize) -> Result<(Report, Value)> {
    if m == 0 || m > max_m {
        return Err(Error::Invalid(format!("m must lie in 1..={max_m}")));
    }
    let mut r = Report::new(format!("sl({}|{})", m + 1, m));
    let inst = slmm::build_instance(m)?;
    let dim = inst.algebra.dim();
    let (e, o) = inst.module.superdim();
    r.push(Check::new("bijective", inst.cocycle.q.rank() == dim, format!("rank {dim}, U of superdim {e}|{o}")));
    let k = slmm::kernel_system_check(m)?;
    r.push(Check::new("kernel", k.passed(), format!("gl kernel dim {}, str of generator {:?}", k.gl_kernel_dim, k.supertrace.as_ref().map(|s| s.to_string())))
        .with_payload(serde_json::to_value(&k).expect("serializable")));
    r.extend(product_checks(&inst.table));
    Ok((r, table_to_json(&inst.table)))
}

/// Witnesses for `P_m` and its dual, plus the fixed sl(3|1) pair `Q_3`, `Q_3*`.
pub fn nonexistence(m: usize) -> Result<Report> {
    use nonexist::Candidate;
    let mut r = Report::new(format!("nonexist m={m}"));
    // out-of-range m is an input error, not a failed check
    Candidate::P(m).build()?;
    for c in [Candidate::P(m), Candidate::PDual(m), Candidate::Q3, Candidate::Q3Dual] {
        let check = match c.build().and_then(|v| nonexist::certify_no_bijective_ev(c, &v)) {
            Ok(w) => Check::new(
                w.module.clone(),
                w.certified(),
                format!("{}: rank {} < {} for {}", w.method, w.certified_rank, w.required_rank, w.elements.join(", ")),
            )
            .with_payload(serde_json::to_value(&w).expect("serializable")),
            Err(e) => Check::new(c.to_string(), false, e.to_string()),
        };
        r.push(check);
    }
    Ok(r)
}

pub fn kac_dimensions(max_i: u32) -> Result<Report> {
    let mut r = Report::new(format!("kacdim i<={max_i}"));
    r.extend(sl21::verify_kac_grid(max_i)?);
    Ok(r)
}

pub fn negst() -> Result<Report> {
    let mut r = Report::new("negst");
    r.extend(sl21::verify_negst_relations()?);
    r.extend(sl21::verify_degenerate_failures());
    Ok(r)
}

fn random_algebra(rng: &mut ChaCha8Rng) -> Algebra {
    match rng.gen_range(0..4) {
        0 => LieSuperalgebra::sl(2, 1),
        1 => LieSuperalgebra::sl(3, 1),
        2 => LieSuperalgebra::gl(2, 2),
        _ => LieSuperalgebra::sl(3, 2),
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-4..5), rng.gen_range(1..4))
}

fn random_homogeneous(rng: &mut ChaCha8Rng, g: &Algebra) -> (Vec<Rational>, bool) {
    let odd = rng.gen_bool(0.5);
    ((0..g.dim()).map(|i| if g.is_odd(i) == odd { random_rational(rng) } else { Rational::from(0) }).collect(), odd)
}

fn run_cases(name: &str, cases: usize, rng: &mut ChaCha8Rng, mut case: impl FnMut(&mut ChaCha8Rng) -> Result<Option<String>>) -> Check {
    Check::timed(name, || {
        for n in 0..cases {
            if let Some(msg) = case(rng)? {
                return Ok((false, format!("case {n}: {msg}")));
            }
        }
        Ok((true, format!("{cases} cases")))
    })
}

/// Random-instance checks of the algebraic identities, reproducible from `seed`.
pub fn properties(seed: u64, cases: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Report::new(format!("properties seed={seed:#x}"));
    r.push(run_cases("super-Jacobi", cases, &mut rng, |rng| {
        let g = random_algebra(rng);
        let (x, y, z) = (random_homogeneous(rng, &g), random_homogeneous(rng, &g), random_homogeneous(rng, &g));
        Ok((!g.jacobi_holds(&x.0, &y.0, &z.0, x.1, y.1, z.1)).then(|| g.name().to_string()))
    }));
    r.push(run_cases("str of supercommutator", cases, &mut rng, |rng| {
        let g = random_algebra(rng);
        let (x, y) = (random_homogeneous(rng, &g), random_homogeneous(rng, &g));
        let c = supercommutator(&g.element(&x.0), &g.element(&y.0), g.m())?;
        Ok((!supertrace(&c, g.m()).is_zero()).then(|| g.name().to_string()))
    }));
    r.push(run_cases("-st automorphism", cases, &mut rng, |rng| {
        let g = random_algebra(rng);
        let m = g.m();
        let (x, y) = (g.element(&random_homogeneous(rng, &g).0), g.element(&random_homogeneous(rng, &g).0));
        let lhs = supercommutator(&neg_supertranspose(&x, m), &neg_supertranspose(&y, m), m)?;
        let rhs = neg_supertranspose(&supercommutator(&x, &y, m)?, m);
        Ok((lhs != rhs).then(|| g.name().to_string()))
    }));
    r.push(run_cases("regular cocycle round trip", cases, &mut rng, |rng| {
        let fam = Family::ALL[rng.gen_range(0..3)];
        let params: Vec<Rational> = loop {
            let p: Vec<Rational> = fam.parameter_names().iter().map(|_| Rational::new(rng.gen_range(-8..9), rng.gen_range(1..4))).collect();
            if !fam.is_excluded(&p) {
                break p;
            }
        };
        let inst = sl21::build_family(fam, &params)?;
        let c = Cocycle::new(inst.table.left_regular()?, Matrix::identity(inst.table.algebra().dim()))?;
        Ok((!lssa_from_cocycle(&c)?.diff(&inst.table).is_empty()).then(|| format!("{inst:?}")))
    }));
    let g = sl21::algebra();
    let q = Rational::from;
    let modules: Vec<Representation<Rational>> = vec![
        Representation::direct_sum_all(&[&Representation::adjoint(&g), &sl21::kac_module(&Weight21::from_ints(0, 0)), &sl21::kac_double(&q(0))])
            .expect("same algebra"),
        Representation::adjoint(&LieSuperalgebra::gl(2, 1)),
        Representation::adjoint(&LieSuperalgebra::sl(3, 1)),
    ];
    let bases: Vec<Vec<Matrix<Rational>>> = modules.iter().map(cocycles_vanishing_on_even).collect();
    r.push(run_cases("cocycle difference", cases, &mut rng, |rng| {
        let w = rng.gen_range(0..modules.len());
        let m = &modules[w];
        let a: Vec<Rational> = (0..m.dim()).map(|i| if m.space().is_odd(i) { q(0) } else { q(rng.gen_range(-3..4)) }).collect();
        let ev = evaluation_map(m, &a)?;
        let mut shifted = || -> Result<Cocycle<Rational>> {
            let qm = bases[w].iter().fold(ev.q.clone(), |acc, z| acc.add(&z.scale(&q(rng.gen_range(-3..4)))));
            Cocycle::new(m.clone(), qm)
        };
        let (x, y) = (shifted()?, shifted()?);
        let ok = !bases[w].is_empty() && x.check() && y.check() && difference_is_even_module_map(&x, &y);
        Ok((!ok).then(|| format!("module {w}")))
    }));
    r
}
