//! sl(2|1): weights, Kac modules and the three families of left-symmetric structures.
//!
//! Basis of sl(2|1): x1 = E12, x2 = E21, x3 = h = E11 - E22, x4 = z = E11 + E22 + 2E33,
//! y1 = E31, y2 = E32 (lowering), y3 = E13, y4 = E23 (raising).

use crate::error::{Error, Result};
use crate::json::table_from_json;
use crate::linalg::{max_rank_over_affine_family, Matrix};
use crate::lssa::{evaluation_map, lssa_from_cocycle, Cocycle, Mismatch, ProductTable};
use crate::reps::{has_invertible_intertwiner, induced_module, Representation};
use crate::report::Check;
use crate::scalar::{RatFun, Rational, Scalar, Var};
use crate::superlie::{Algebra, LieSuperalgebra};
use serde_json::json;
use std::fmt;
use std::str::FromStr;

pub const X1: usize = 0;
pub const X2: usize = 1;
pub const H: usize = 2;
pub const Z: usize = 3;
pub const Y1: usize = 4;
pub const Y2: usize = 5;
pub const Y3: usize = 6;
pub const Y4: usize = 7;

pub fn algebra() -> Algebra {
    LieSuperalgebra::sl(2, 1)
}

/// Highest weight with `lambda(h) = i`, `lambda(z) = k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Weight21<F = Rational> {
    pub i: u32,
    pub k: F,
}

impl<F: Scalar> fmt::Display for Weight21<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.k)
    }
}

impl<F: Scalar> Weight21<F> {
    pub fn new(i: u32, k: F) -> Self {
        Weight21 { i, k }
    }
    pub fn from_ints(i: u32, k: i64) -> Self {
        Weight21 { i, k: F::from_i64(k) }
    }
    fn upper(&self) -> F {
        F::from_i64(self.i as i64)
    }
    fn lower(&self) -> F {
        F::from_i64(-(self.i as i64) - 2)
    }
    /// Typical iff `k` is neither `i` nor `-i-2`.
    pub fn is_typical(&self) -> bool {
        self.k != self.upper() && self.k != self.lower()
    }

    /// Highest weight of the proper submodule of `K(i,k)` for atypical `(i,k)`.
    pub fn t_minus(&self) -> Result<Self> {
        let i = self.i as i64;
        if self.k == self.upper() {
            Ok(Self::from_ints(self.i + 1, i + 1))
        } else if self.k == self.lower() {
            if self.i == 0 {
                Ok(Self::from_ints(0, 0))
            } else {
                Ok(Self::from_ints(self.i - 1, -i - 1))
            }
        } else {
            Err(Error::TypicalWeight(self.to_string()))
        }
    }

    /// Inverse of [`Self::t_minus`].
    pub fn t_plus(&self) -> Result<Self> {
        let j = AtypicalIndex::of(self).ok_or_else(|| Error::TypicalWeight(self.to_string()))?;
        Ok(AtypicalIndex(j.0 - 1).weight())
    }
}

/// Enumeration of the atypical weights: `j >= 0` is `(j, j)`, `j < 0` is `(-j-1, j-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AtypicalIndex(pub i64);

impl AtypicalIndex {
    pub fn weight<F: Scalar>(self) -> Weight21<F> {
        let j = self.0;
        if j >= 0 {
            Weight21::from_ints(j as u32, j)
        } else {
            Weight21::from_ints((-j - 1) as u32, j - 1)
        }
    }
    pub fn of<F: Scalar>(w: &Weight21<F>) -> Option<Self> {
        let i = w.i as i64;
        if w.k == F::from_i64(i) {
            Some(AtypicalIndex(i))
        } else if w.k == F::from_i64(-i - 2) {
            Some(AtypicalIndex(-i - 1))
        } else {
            None
        }
    }
}

/// The simple gl(2)-module `S_i` with z acting by `k`, on `v0..vi` with `v_{j+1} = E21 v_j`.
pub fn simple_even_module<F: Scalar>(i: u32, k: &F) -> Vec<Matrix<F>> {
    let d = i as usize + 1;
    let mut e12 = Matrix::zeros(d, d);
    let mut e21 = Matrix::zeros(d, d);
    let mut h = Matrix::zeros(d, d);
    let mut z = Matrix::zeros(d, d);
    for j in 0..d {
        if j + 1 < d {
            e21[(j + 1, j)] = F::one();
        }
        if j > 0 {
            e12[(j - 1, j)] = F::from_i64((j * (d - j)) as i64);
        }
        h[(j, j)] = F::from_i64(i as i64 - 2 * j as i64);
        z[(j, j)] = k.clone();
    }
    vec![e12, e21, h, z]
}

/// `K(i,k)`, superdimension `2(i+1)|2(i+1)`.
pub fn kac_module<F: Scalar>(w: &Weight21<F>) -> Representation<F> {
    let labels: Vec<String> = (0..=w.i).map(|j| format!("v{j}")).collect();
    induced_module(&algebra(), &simple_even_module(w.i, &w.k), &labels).expect("gl(2)-module of the right shape")
}

/// `K(0,k)^(2)`: induced from the 2-dimensional module with sl(2) trivial and
/// `z = k I + N`, `N u1 = u2`.
pub fn kac_double<F: Scalar>(k: &F) -> Representation<F> {
    let mut z = Matrix::zeros(2, 2);
    z[(0, 0)] = k.clone();
    z[(1, 1)] = k.clone();
    z[(1, 0)] = F::one();
    let zero = Matrix::zeros(2, 2);
    let lmats = vec![zero.clone(), zero.clone(), zero, z];
    induced_module(&algebra(), &lmats, &["u1".to_string(), "u2".to_string()]).expect("gl(2)-module of the right shape")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::A, Family::B, Family::C];

    pub fn parameter_names(self) -> &'static [&'static str] {
        match self {
            Family::A | Family::C => &["k"],
            Family::B => &["k1", "k2"],
        }
    }

    pub fn symbolic_parameters(self) -> Vec<RatFun> {
        self.parameter_names().iter().map(|n| RatFun::var(n)).collect()
    }

    /// Parameters of the family member related by `-st`: `k -> -2-k` componentwise.
    pub fn mirror<F: Scalar>(self, params: &[F]) -> Vec<F> {
        params.iter().map(|k| F::from_i64(-2).minus(k)).collect()
    }

    /// Whether a rational parameter point is outside the family.
    pub fn is_excluded(self, params: &[Rational]) -> bool {
        let z = |x: &Rational, v: i64| *x == Rational::from(v);
        match self {
            Family::A => z(&params[0], -1) || z(&params[0], -3),
            Family::B => z(&params[0], 0) || z(&params[1], 0) || z(&(params[0].clone() + params[1].clone()), -2),
            Family::C => z(&params[0], 0) || z(&params[0], -1),
        }
    }

    /// Stored reference table.
    pub fn fixture(self) -> ProductTable<RatFun> {
        let text = match self {
            Family::A => include_str!("../fixtures/table_A.json"),
            Family::B => include_str!("../fixtures/table_B.json"),
            Family::C => include_str!("../fixtures/table_C.json"),
        };
        table_from_json(text).expect("bundled fixture parses")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            _ => Err(Error::Invalid(format!("unknown family {s:?}"))),
        }
    }
}

fn check_arity<F>(fam: Family, params: &[F]) -> Result<()> {
    let want = fam.parameter_names().len();
    if params.len() != want {
        return Err(Error::Invalid(format!("family {fam} takes {want} parameter(s), got {}", params.len())));
    }
    Ok(())
}

fn describe<F: Scalar>(fam: Family, params: &[F]) -> String {
    let parts: Vec<String> = fam.parameter_names().iter().zip(params).map(|(n, v)| format!("{n}={v}")).collect();
    format!("{fam}({})", parts.join(", "))
}

/// The module carrying the family: `K(1,k)`, `PiK(0,k1) + PiK(0,k2)`, or `PiK(0,k)^(2)`.
pub fn family_module<F: Scalar>(fam: Family, params: &[F]) -> Result<Representation<F>> {
    check_arity(fam, params)?;
    Ok(match fam {
        Family::A => kac_module(&Weight21::new(1, params[0].clone())),
        Family::B => {
            let a = kac_module(&Weight21::new(0, params[0].clone())).parity_shift();
            let b = kac_module(&Weight21::new(0, params[1].clone())).parity_shift();
            a.direct_sum(&b)?
        }
        Family::C => kac_double(&params[0]).parity_shift(),
    })
}

fn unit<F: Scalar>(r: &Representation<F>, label: &str) -> Vec<F> {
    let idx = r.space().index_of(label).unwrap_or_else(|| panic!("basis vector {label} present"));
    (0..r.dim()).map(|j| if j == idx { F::one() } else { F::zero() }).collect()
}

fn combine<F: Scalar>(a: &[F], c: &F, b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.plus(&c.times(y))).collect()
}

/// `v0 + c w1` in `K(1,k)`, with `v0` the highest vector and `w1 = E21 E31 E32 v0`.
pub fn kac_base_point<F: Scalar>(module: &Representation<F>, c: &F) -> Vec<F> {
    let v0 = unit(module, "v0");
    let w1 = module.action(X2).mul_vec(&module.action(Y1).mul_vec(&module.action(Y2).mul_vec(&v0)));
    combine(&v0, c, &w1)
}

/// The even vector `v0 + w1` used for each family.
pub fn base_point<F: Scalar>(fam: Family, module: &Representation<F>) -> Vec<F> {
    match fam {
        Family::A => kac_base_point(module, &F::from_rational(&Rational::new(-1, 2))),
        Family::B => combine(&unit(module, "y2·v0'"), &F::one(), &unit(module, "y1·v0''")),
        Family::C => combine(&unit(module, "y2·u1"), &F::from_i64(-1), &unit(module, "y1·u2")),
    }
}

#[derive(Clone)]
pub struct FamilyInstance<F> {
    pub family: Family,
    pub params: Vec<F>,
    pub module: Representation<F>,
    pub base_point: Vec<F>,
    pub cocycle: Cocycle<F>,
    pub table: ProductTable<F>,
}

/// Module, base point and the product `x . y = ev_a^{-1}(f(x) ev_a(y))`.
pub fn build_family<F: Scalar>(fam: Family, params: &[F]) -> Result<FamilyInstance<F>> {
    let module = family_module(fam, params)?;
    let a = base_point(fam, &module);
    let cocycle = evaluation_map(&module, &a)?;
    let table = match lssa_from_cocycle(&cocycle) {
        Ok(t) => t,
        Err(Error::NotBijective { .. }) => return Err(Error::ExcludedParameter(describe(fam, params))),
        Err(e) => return Err(e),
    };
    let table = table.with_parameters(fam.parameter_names().iter().map(|s| s.to_string()).collect());
    Ok(FamilyInstance { family: fam, params: params.to_vec(), module, base_point: a, cocycle, table })
}

impl<F: Scalar> fmt::Debug for FamilyInstance<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", describe(self.family, &self.params))
    }
}

/// One disagreement between a computed and a stored product, with both values printed.
#[derive(Clone, Debug, PartialEq)]
pub struct EntryMismatch {
    pub product: String,
    pub ours: String,
    pub theirs: String,
}

#[derive(Clone, Debug)]
pub struct TableComparison {
    pub family: Family,
    pub entries: usize,
    pub mismatches: Vec<EntryMismatch>,
}

impl TableComparison {
    pub fn matches(&self) -> usize {
        self.entries - self.mismatches.len()
    }
    pub fn to_check(&self, name: &str) -> Check {
        let payload = self.mismatches.iter().map(|m| json!({"product": m.product, "ours": m.ours, "theirs": m.theirs})).collect::<Vec<_>>();
        let c = Check::new(name, self.mismatches.is_empty(), format!("{}/{} entries match", self.matches(), self.entries));
        if payload.is_empty() {
            c
        } else {
            c.with_payload(json!(payload))
        }
    }
    /// One check per product `xi*xj`, named `"{prefix} xi*xj"`.
    pub fn entry_checks(&self, prefix: &str) -> Vec<Check> {
        let g = algebra();
        let labels: Vec<&str> = g.labels().collect();
        let mut out = Vec::with_capacity(self.entries);
        for a in &labels {
            for b in &labels {
                let product = format!("{a}*{b}");
                let name = format!("{prefix} {product}");
                out.push(match self.mismatches.iter().find(|m| m.product == product) {
                    None => Check::new(name, true, "equal"),
                    Some(m) => Check::new(name, false, format!("ours {} vs stored {}", m.ours, m.theirs)),
                });
            }
        }
        out
    }
}

fn render<F: Scalar>(g: &Algebra, v: &[(usize, F)]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter().map(|(l, c)| format!("({c})*{}", g.basis()[*l].label)).collect::<Vec<_>>().join(" + ")
}

pub fn compare_tables<F: Scalar>(fam: Family, ours: &ProductTable<F>, theirs: &ProductTable<F>) -> TableComparison {
    let g = ours.algebra();
    let labels = g.basis();
    let mismatches = ours
        .diff(theirs)
        .into_iter()
        .map(|Mismatch { left, right, ours, theirs }| EntryMismatch {
            product: format!("{}*{}", labels[left].label, labels[right].label),
            ours: render(g, &ours),
            theirs: render(g, &theirs),
        })
        .collect();
    TableComparison { family: fam, entries: g.dim() * g.dim(), mismatches }
}

/// Symbolic comparison of one family against a reference table.
pub fn verify_family_against(fam: Family, reference: &ProductTable<RatFun>) -> Result<TableComparison> {
    let inst = build_family(fam, &fam.symbolic_parameters())?;
    Ok(compare_tables(fam, &inst.table, reference))
}

/// All three families against the stored tables, over the rational function fields.
pub fn verify_reference_tables() -> Result<Vec<TableComparison>> {
    std::thread::scope(|s| {
        let handles: Vec<_> = Family::ALL.iter().map(|&f| s.spawn(move || verify_family_against(f, &f.fixture()))).collect();
        handles.into_iter().map(|h| h.join().expect("verification thread")).collect()
    })
}

/// Comparison after substituting rational values, for each family whose parameters are
/// all bound. Families excluded at the point yield `ExcludedParameter`.
pub fn verify_reference_tables_at(bindings: &[(String, Rational)]) -> Result<Vec<(Family, Result<TableComparison>)>> {
    let mut out = Vec::new();
    for fam in Family::ALL {
        let values: Option<Vec<Rational>> =
            fam.parameter_names().iter().map(|n| bindings.iter().find(|(b, _)| b == n).map(|(_, v)| v.clone())).collect();
        let Some(values) = values else { continue };
        out.push((fam, compare_at(fam, &values)));
    }
    if out.is_empty() {
        return Err(Error::Invalid("bindings do not cover the parameters of any family".into()));
    }
    Ok(out)
}

fn compare_at(fam: Family, values: &[Rational]) -> Result<TableComparison> {
    let vars: Vec<(Var, Rational)> = fam.parameter_names().iter().zip(values).map(|(n, v)| (Var::new(n), v.clone())).collect();
    let reference = match fam.fixture().specialize(&vars) {
        Ok(t) => t,
        Err(Error::DenominatorVanishes(_)) => return Err(Error::ExcludedParameter(describe(fam, values))),
        Err(e) => return Err(e),
    };
    let inst = build_family(fam, values)?;
    Ok(compare_tables(fam, &inst.table, &reference))
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

/// `K(i,k)^{-st}` against `K(i,-k-2)`.
pub fn kac_negst(i: u32, k: &Rational) -> Result<Check> {
    let k2 = q(-2) - k.clone();
    let twisted = kac_module(&Weight21::new(i, k.clone())).twist_neg_st();
    let ok = has_invertible_intertwiner(&twisted, &kac_module(&Weight21::new(i, k2.clone())))?;
    Ok(Check::new(format!("K({i},{k})^-st ~ K({i},{k2})"), ok, if ok { "invertible intertwiner found" } else { "no invertible intertwiner" }))
}

/// The family module twisted by `-st` against the module at mirrored parameters.
pub fn family_negst(fam: Family, params: &[Rational]) -> Result<Check> {
    let mirrored = fam.mirror(params);
    let twisted = family_module(fam, params)?.twist_neg_st();
    let ok = has_invertible_intertwiner(&twisted, &family_module(fam, &mirrored)?)?;
    Ok(Check::new(
        format!("{}^-st ~ {}", describe(fam, params), describe(fam, &mirrored)),
        ok,
        if ok { "invertible intertwiner found" } else { "no invertible intertwiner" },
    ))
}

/// Asserts that the two modules are not isomorphic.
pub fn families_distinct(f1: Family, p1: &[Rational], f2: Family, p2: &[Rational]) -> Result<Check> {
    let iso = has_invertible_intertwiner(&family_module(f1, p1)?, &family_module(f2, p2)?)?;
    Ok(Check::new(
        format!("{} !~ {}", describe(f1, p1), describe(f2, p2)),
        !iso,
        if iso { "unexpected invertible intertwiner" } else { "no invertible intertwiner" },
    ))
}

/// The default sample set for the `-st` relations and the distinctness checks.
pub fn verify_negst_relations() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for k in [0, 2, 5] {
        out.push(kac_negst(1, &q(k))?);
    }
    for k in [0, 2] {
        out.push(family_negst(Family::A, &[q(k)])?);
    }
    for (k1, k2) in [(1, 3), (2, 5)] {
        out.push(family_negst(Family::B, &[q(k1), q(k2)])?);
        let swapped = has_invertible_intertwiner(&family_module(Family::B, &[q(k1), q(k2)])?, &family_module(Family::B, &[q(k2), q(k1)])?)?;
        out.push(Check::new(format!("B(k1={k1}, k2={k2}) ~ B(k1={k2}, k2={k1})"), swapped, "summands exchanged"));
    }
    for k in [1, 2] {
        out.push(family_negst(Family::C, &[q(k)])?);
    }
    out.push(families_distinct(Family::A, &[q(0)], Family::B, &[q(1), q(1)])?);
    out.push(families_distinct(Family::A, &[q(2)], Family::C, &[q(1)])?);
    out.push(families_distinct(Family::B, &[q(1), q(3)], Family::C, &[q(1)])?);
    out.push(families_distinct(Family::A, &[q(1)], Family::A, &[q(2)])?);
    out.push(families_distinct(Family::C, &[q(1)], Family::C, &[q(2)])?);
    Ok(out)
}

/// Rank of `ev_a` for a generic even `a`, i.e. with the coordinates of `a` as indeterminates.
pub fn generic_ev_rank<F: Scalar>(module: &Representation<F>) -> usize {
    let g = module.algebra();
    let n = module.dim();
    let mut family = vec![Matrix::zeros(n, g.dim())];
    for v in module.space().even_range() {
        let cols: Vec<Vec<F>> = module.actions().iter().map(|m| m.column(v)).collect();
        family.push(Matrix::from_columns(n, &cols));
    }
    max_rank_over_affine_family(&family)
}

fn rank_check(name: String, module: &Representation<Rational>, want_full: bool) -> Check {
    let rank = generic_ev_rank(module);
    let d = module.algebra().dim();
    let ok = if want_full { rank == d } else { rank < d };
    Check::new(name, ok, format!("generic rank {rank}, dim g = {d}")).with_payload(json!({"rank": rank, "required": d}))
}

/// Modules at the family boundaries admit no bijective evaluation map.
pub fn verify_degenerate_failures() -> Vec<Check> {
    let mut out = vec![rank_check("K(1,-1): generic ev_a rank < 8".into(), &kac_module(&Weight21::from_ints(1, -1)), false)];
    for k1 in [1, 3] {
        let m = family_module(Family::B, &[q(k1), q(-2 - k1)]).expect("two parameters");
        out.push(rank_check(format!("PiK(0,{k1}) + PiK(0,{}): generic ev_a rank < 8", -2 - k1), &m, false));
    }
    out.push(rank_check("PiK(0,-1)^(2): generic ev_a rank < 8".into(), &kac_double(&q(-1)).parity_shift(), false));
    out.push(rank_check("control K(1,1): generic ev_a rank = 8".into(), &kac_module(&Weight21::from_ints(1, 1)), true));
    out
}

/// A vector killed by the even and odd raising operators, other than the top vector.
#[derive(Clone, Debug)]
pub struct SingularVector<F> {
    pub weight: Weight21<F>,
    pub vector: Vec<F>,
}

/// Singular vectors of `K(i,k)` below the generating one, one per weight space.
pub fn singular_vectors<F: Scalar>(module: &Representation<F>) -> Result<Vec<SingularVector<F>>> {
    let n = module.dim();
    let (h, z) = (module.action(H), module.action(Z));
    if (0..n).any(|r| (0..n).any(|c| r != c && (!h[(r, c)].is_zero() || !z[(r, c)].is_zero()))) {
        return Err(Error::Invalid("h and z must act diagonally".into()));
    }
    let mut groups: Vec<((F, F), Vec<usize>)> = Vec::new();
    for c in 0..n {
        let w = (h[(c, c)].clone(), z[(c, c)].clone());
        match groups.iter_mut().find(|g| g.0 == w) {
            Some(g) => g.1.push(c),
            None => groups.push((w, vec![c])),
        }
    }
    let top = groups.first().map(|g| g.0.clone());
    let mut out = Vec::new();
    for (w, idx) in groups {
        if Some(&w) == top.as_ref() {
            continue;
        }
        let rows: Vec<Vec<F>> = [X1, Y3, Y4]
            .iter()
            .flat_map(|&e| (0..n).map(move |r| (e, r)))
            .map(|(e, r)| idx.iter().map(|&c| module.action(e)[(r, c)].clone()).collect())
            .collect();
        for k in Matrix::from_rows(rows).kernel() {
            let mut v = vec![F::zero(); n];
            for (c, &i) in idx.iter().enumerate() {
                v[i] = k[c].clone();
            }
            let i = w.0.to_ratfun().as_constant().and_then(|r| r.to_i64()).filter(|&i| i >= 0);
            let i = i.ok_or_else(|| Error::Invalid(format!("h-eigenvalue {} is not a dominant integer", w.0)))?;
            out.push(SingularVector { weight: Weight21::new(i as u32, w.1.clone()), vector: v });
        }
    }
    Ok(out)
}

/// Structure of `K(i,k)`: its superdimension and, when atypical, the submodule generated by
/// the singular vector and the simple quotient.
#[derive(Clone)]
pub struct KacAnalysis<F> {
    pub weight: Weight21<F>,
    pub superdim: (usize, usize),
    pub singular: Vec<SingularVector<F>>,
    pub submodule: Option<(usize, usize)>,
    pub quotient: (usize, usize),
}

pub fn analyze_kac<F: Scalar>(w: &Weight21<F>) -> Result<KacAnalysis<F>> {
    let module = kac_module(w);
    let superdim = module.superdim();
    let singular = singular_vectors(&module)?;
    let submodule = match singular.first() {
        Some(s) => Some(module.subspace_superdim(&module.submodule_generated(&s.vector)?)),
        None => None,
    };
    let quotient = submodule.map_or(superdim, |(e, o)| (superdim.0 - e, superdim.1 - o));
    Ok(KacAnalysis { weight: w.clone(), superdim, singular, submodule, quotient })
}

/// Dimension grid for `0 <= i <= max_i` and `k` in {symbolic, 7, i, -i-2}.
pub fn verify_kac_grid(max_i: u32) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for i in 0..=max_i {
        let n = i as usize + 1;
        let ks: Vec<(String, RatFun)> = vec![
            ("k".into(), RatFun::var("k")),
            ("7".into(), RatFun::from_i64(7)),
            (i.to_string(), RatFun::from_i64(i as i64)),
            ((-(i as i64) - 2).to_string(), RatFun::from_i64(-(i as i64) - 2)),
        ];
        for (name, k) in ks {
            let w = Weight21::new(i, k);
            let a = analyze_kac(&w)?;
            let label = format!("K({i},{name})");
            let mut ok = a.superdim == (2 * n, 2 * n);
            let mut detail = format!("superdim {}|{}", a.superdim.0, a.superdim.1);
            if w.is_typical() {
                ok &= a.singular.is_empty();
                detail.push_str(", typical, no singular vector");
            } else {
                let expect_t = w.t_minus()?;
                let expect_q = if w.k == RatFun::from_i64(i as i64) { (n, n - 1) } else { (n, n + 1) };
                let found = a.singular.iter().map(|s| s.weight.to_string()).collect::<Vec<_>>().join(", ");
                ok &= a.singular.len() == 1 && a.singular[0].weight == expect_t && a.quotient == expect_q;
                detail.push_str(&format!(", singular weight(s) [{found}], T^- = {expect_t}, simple quotient {}|{}", a.quotient.0, a.quotient.1));
            }
            out.push(Check::new(label, ok, detail));
        }
    }
    Ok(out)
}
