//! A left-symmetric structure on sl(m+1|m) from the evaluation map of
//! `U = Pi wedge^2 W + Pi wedge^2 W`, `W = C^{m+1|m}`, at
//! `a = sum_i e'_{i+1} xi'_i + e''_i xi''_i`.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::lssa::{evaluation_map, lssa_from_cocycle, Cocycle, ProductTable};
use crate::reps::Representation;
use crate::scalar::{RatFun, Rational, Scalar};
use crate::superlie::{supertrace, Algebra, LieSuperalgebra};
use serde::Serialize;

/// Default upper bound on `m` for the command line.
pub const DEFAULT_MAX_M: usize = 6;

#[derive(Clone, Debug)]
pub struct SlmmInstance {
    pub m: usize,
    pub algebra: Algebra,
    pub module: Representation<Rational>,
    pub base_point: Vec<Rational>,
    pub cocycle: Cocycle<Rational>,
    pub table: ProductTable<Rational>,
}

/// `U` for `g = sl(m+1|m)` or `gl(m+1|m)`. Labels: `e2∧xi1'` is `e'_2 xi'_1`.
pub fn build_module<F: Scalar>(g: &Algebra) -> Result<Representation<F>> {
    let w2 = Representation::standard(g).exterior_square().parity_shift();
    w2.direct_sum(&w2)
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::Invalid("m must be at least 1".into()));
    }
    Ok(())
}

/// Coordinates of `a` in `module`.
pub fn base_point<F: Scalar>(module: &Representation<F>, m: usize) -> Vec<F> {
    let mut a = vec![F::zero(); module.dim()];
    for i in 1..=m {
        for label in [format!("e{}∧xi{i}'", i + 1), format!("e{i}∧xi{i}''")] {
            let idx = module.space().index_of(&label).expect("wedge basis vector");
            a[idx] = F::one();
        }
    }
    a
}

pub fn evaluation_cocycle<F: Scalar>(g: &Algebra) -> Result<Cocycle<F>> {
    let m = g.n();
    let module = build_module(g)?;
    let a = base_point(&module, m);
    evaluation_map(&module, &a)
}

/// Builds the module, checks `ev_a` is bijective and forms the product.
pub fn build_instance(m: usize) -> Result<SlmmInstance> {
    check_m(m)?;
    let g = LieSuperalgebra::sl(m + 1, m);
    let cocycle: Cocycle<Rational> = evaluation_cocycle(&g)?;
    let table = lssa_from_cocycle(&cocycle)?;
    Ok(SlmmInstance { m, algebra: g, module: cocycle.rep.clone(), base_point: base_point(&cocycle.rep, m), cocycle, table })
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelCheck {
    pub m: usize,
    /// Dimension of the kernel of `ev_a` on gl(m+1|m).
    pub gl_kernel_dim: usize,
    /// Whether the kernel is spanned by `diag(I_{m+1}, -I_m)`.
    pub scalar_blocks: bool,
    /// Supertrace of the kernel generator normalized to `c = 1`.
    pub supertrace: Option<Rational>,
    /// Dimension of the kernel on sl(m+1|m).
    pub sl_kernel_dim: usize,
}

impl KernelCheck {
    pub fn passed(&self) -> bool {
        let want = Rational::from(2 * self.m as i64 + 1);
        self.gl_kernel_dim == 1 && self.scalar_blocks && self.supertrace.as_ref() == Some(&want) && self.sl_kernel_dim == 0
    }
}

/// Kernel of `ev_a` over gl(m+1|m), where the supertrace condition is dropped.
pub fn kernel_system_check(m: usize) -> Result<KernelCheck> {
    check_m(m)?;
    let gl = LieSuperalgebra::gl(m + 1, m);
    let c: Cocycle<Rational> = evaluation_cocycle(&gl)?;
    let kernel = c.q.kernel();
    let s = 2 * m + 1;
    let mut scalar_blocks = false;
    let mut str_value = None;
    if kernel.len() == 1 {
        let x = gl.element(&kernel[0]);
        let c0 = x[(0, 0)].clone();
        let target = Matrix::from_fn(s, s, |i, j| if i != j { Rational::from(0) } else if i <= m { c0.clone() } else { c0.negated() });
        scalar_blocks = !c0.is_zero() && x == target;
        if scalar_blocks {
            let normalized = x.scale(&c0.inverse()?);
            str_value = Some(supertrace(&normalized, m + 1));
        }
    }
    let sl = LieSuperalgebra::sl(m + 1, m);
    let csl: Cocycle<Rational> = evaluation_cocycle(&sl)?;
    Ok(KernelCheck { m, gl_kernel_dim: kernel.len(), scalar_blocks, supertrace: str_value, sl_kernel_dim: csl.q.kernel().len() })
}

/// Block-entry name of `E_{ij}` (0-based) in `X = (A B; C D)`, 1-based within its block.
pub fn block_entry_name(m: usize, i: usize, j: usize) -> String {
    let p = m + 1;
    match (i < p, j < p) {
        (true, true) => format!("a{}_{}", i + 1, j + 1),
        (true, false) => format!("b{}_{}", i + 1, j - p + 1),
        (false, true) => format!("c{}_{}", i - p + 1, j + 1),
        (false, false) => format!("d{}_{}", i - p + 1, j - p + 1),
    }
}

/// `ev_a(X)` on gl(m+1|m) for the generic `X` whose entries are the indeterminates of
/// [`block_entry_name`], as (label, coefficient) pairs of `U`.
pub fn symbolic_expansion(m: usize) -> Result<Vec<(String, RatFun)>> {
    check_m(m)?;
    let gl = LieSuperalgebra::gl(m + 1, m);
    let c: Cocycle<RatFun> = evaluation_cocycle(&gl)?;
    let s = 2 * m + 1;
    let mut x = vec![RatFun::zero(); gl.dim()];
    for i in 0..s {
        for j in 0..s {
            x[gl.e_index(i, j).expect("gl basis")] = RatFun::var(&block_entry_name(m, i, j));
        }
    }
    let v = c.q.mul_vec(&x);
    Ok(c.rep.space().labels().iter().cloned().zip(v).collect())
}
