//! Candidate modules for sl(m|1), m >= 3, and certificates that none of them admits a
//! bijective evaluation map.

use crate::error::{Error, Result};
use crate::linalg::{max_rank_over_affine_family, Matrix};
use crate::reps::Representation;
use crate::scalar::{Rational, Scalar};
use crate::superlie::{Algebra, LieSuperalgebra};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Candidate {
    /// `m C^{m|1} + m Pi(trivial)`
    P(usize),
    PDual(usize),
    /// `2 C^{3|1} + Pi wedge^2 C^{3|1}`
    Q3,
    Q3Dual,
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Candidate::P(m) => write!(f, "P_{m}"),
            Candidate::PDual(m) => write!(f, "P_{m}*"),
            Candidate::Q3 => write!(f, "Q_3"),
            Candidate::Q3Dual => write!(f, "Q_3*"),
        }
    }
}

impl Candidate {
    /// The four candidates for a given `m` (the `Q` modules only exist for `m = 3`).
    pub fn all(m: usize) -> Vec<Candidate> {
        let mut v = vec![Candidate::P(m), Candidate::PDual(m)];
        if m == 3 {
            v.extend([Candidate::Q3, Candidate::Q3Dual]);
        }
        v
    }

    pub fn m(self) -> usize {
        match self {
            Candidate::P(m) | Candidate::PDual(m) => m,
            Candidate::Q3 | Candidate::Q3Dual => 3,
        }
    }

    pub fn build(self) -> Result<Representation<Rational>> {
        match self {
            Candidate::P(m) => build_p(m),
            Candidate::PDual(m) => Ok(build_p(m)?.dual()),
            Candidate::Q3 => build_q3(),
            Candidate::Q3Dual => Ok(build_q3()?.dual()),
        }
    }

    /// Odd elements whose evaluation columns are claimed to be dependent for every `a`.
    pub fn designated(self) -> Vec<(usize, usize)> {
        let m = self.m();
        match self {
            Candidate::P(_) => vec![(0, m)],
            Candidate::PDual(_) => vec![(m, 0)],
            Candidate::Q3 => (0..3).map(|i| (i, 3)).collect(),
            Candidate::Q3Dual => (0..3).map(|j| (3, j)).collect(),
        }
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 3 {
        return Err(Error::Invalid(format!("m = {m}: the candidates are defined for m >= 3")));
    }
    Ok(())
}

pub fn build_p(m: usize) -> Result<Representation<Rational>> {
    check_m(m)?;
    let g = LieSuperalgebra::sl(m, 1);
    let std = Representation::standard(&g);
    let tr = Representation::trivial(&g).parity_shift();
    let mut parts = vec![&std; m];
    parts.extend(std::iter::repeat_n(&tr, m));
    Representation::direct_sum_all(&parts)
}

pub fn build_q3() -> Result<Representation<Rational>> {
    let g = LieSuperalgebra::sl(3, 1);
    let std = Representation::standard(&g);
    let w2 = std.exterior_square().parity_shift();
    Representation::direct_sum_all(&[&std, &std, &w2])
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub module: String,
    pub algebra: String,
    pub superdim: (usize, usize),
    /// Odd elements whose evaluation columns are dependent.
    pub elements: Vec<String>,
    /// Generic rank of those columns over all even base points.
    pub certified_rank: usize,
    pub required_rank: usize,
    pub method: String,
}

impl WitnessReport {
    pub fn certified(&self) -> bool {
        self.certified_rank < self.required_rank
    }
}

fn e_label(g: &Algebra, i: usize, j: usize) -> String {
    g.basis()[g.e_index(i, j).expect("basis element")].label.clone()
}

/// Checks that the columns `ev_a(x)` for the designated odd `x` have rank below their
/// number for every even `a`. A single element is certified by its action on the even
/// part being zero; several by the rank with the coordinates of `a` as indeterminates.
pub fn certify_no_bijective_ev(c: Candidate, v: &Representation<Rational>) -> Result<WitnessReport> {
    let g = v.algebra().clone();
    let els: Vec<usize> = c.designated().iter().map(|&(i, j)| g.e_index(i, j).expect("odd basis element")).collect();
    let even: Vec<usize> = v.space().even_range().collect();
    let (rank, method) = if els.len() == 1 {
        let a = v.action(els[0]);
        let zero = even.iter().all(|&col| (0..v.dim()).all(|r| a[(r, col)].is_zero()));
        (usize::from(!zero), "action restricted to the even part is zero".to_string())
    } else {
        (designated_generic_rank(v, &els), format!("generic rank over {} indeterminate coordinates", even.len()))
    };
    let report = WitnessReport {
        module: c.to_string(),
        algebra: g.name().to_string(),
        superdim: v.superdim(),
        elements: c.designated().iter().map(|&(i, j)| e_label(&g, i, j)).collect(),
        certified_rank: rank,
        required_rank: els.len(),
        method,
    };
    if !report.certified() {
        return Err(Error::CertificationFailed(format!("{}: rank {} of {:?}", report.module, rank, report.elements)));
    }
    Ok(report)
}

/// Generic rank of `[f(x1) a, .., f(xr) a]` over even `a`.
pub fn designated_generic_rank<F: Scalar>(v: &Representation<F>, els: &[usize]) -> usize {
    let n = v.dim();
    let mut family = vec![Matrix::zeros(n, els.len())];
    for col in v.space().even_range() {
        let cols: Vec<Vec<F>> = els.iter().map(|&x| v.action(x).column(col)).collect();
        family.push(Matrix::from_columns(n, &cols));
    }
    max_rank_over_affine_family(&family)
}

/// Witnesses for every candidate at `m`.
pub fn certify_all(m: usize) -> Result<Vec<WitnessReport>> {
    check_m(m)?;
    let cands = Candidate::all(m);
    std::thread::scope(|s| {
        let hs: Vec<_> = cands.iter().map(|&c| s.spawn(move || certify_no_bijective_ev(c, &c.build()?))).collect();
        hs.into_iter().map(|h| h.join().expect("certification thread")).collect()
    })
}
