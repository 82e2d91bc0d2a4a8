//! Left-symmetric products, their regular representations and 1-cocycles.

use crate::error::{Error, Result};
use crate::linalg::{sparse_combine, sparse_from_dense, sparse_to_dense, Matrix, SparseCols, SparseVec};
use crate::reps::Representation;
use crate::scalar::{koszul, signed, RatFun, Rational, Scalar};
use crate::superlie::Algebra;
use rayon::prelude::*;

/// Bilinear product `x_i . x_j = sum_l c[i][j][l] x_l` on the algebra's basis.
#[derive(Clone)]
pub struct ProductTable<F> {
    algebra: Algebra,
    parameters: Vec<String>,
    products: Vec<Vec<SparseVec<F>>>,
}

impl<F: Scalar> std::fmt::Debug for ProductTable<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "product table on {}", self.algebra.name())
    }
}

impl<F: Scalar> PartialEq for ProductTable<F> {
    fn eq(&self, o: &Self) -> bool {
        *self.algebra == *o.algebra && self.products == o.products
    }
}

/// One entry where two tables disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch<F> {
    pub left: usize,
    pub right: usize,
    pub ours: SparseVec<F>,
    pub theirs: SparseVec<F>,
}

impl<F: Scalar> ProductTable<F> {
    pub fn new(algebra: Algebra, parameters: Vec<String>, products: Vec<Vec<SparseVec<F>>>) -> Result<Self> {
        let d = algebra.dim();
        if products.len() != d || products.iter().any(|r| r.len() != d) {
            return Err(Error::Invalid("product table has the wrong shape".into()));
        }
        Ok(ProductTable { algebra, parameters, products })
    }
    pub fn zero(algebra: Algebra) -> Self {
        let d = algebra.dim();
        ProductTable { algebra, parameters: Vec::new(), products: vec![vec![Vec::new(); d]; d] }
    }
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }
    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }
    pub fn with_parameters(mut self, p: Vec<String>) -> Self {
        self.parameters = p;
        self
    }
    pub fn product(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.products[i][j]
    }
    pub fn set_product(&mut self, i: usize, j: usize, v: SparseVec<F>) {
        self.products[i][j] = v.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    }
    /// Coefficient of `x_l` in `x_i . x_j`.
    pub fn coeff(&self, i: usize, j: usize, l: usize) -> F {
        self.products[i][j].iter().find(|(k, _)| *k == l).map_or_else(F::zero, |(_, x)| x.clone())
    }
    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G + Sync) -> ProductTable<G> {
        ProductTable {
            algebra: self.algebra.clone(),
            parameters: self.parameters.clone(),
            products: self.products.iter().map(|r| r.iter().map(|v| sparse_from_dense(&sparse_to_dense(v, self.algebra.dim()).iter().map(&f).collect::<Vec<_>>())).collect()).collect(),
        }
    }
    pub fn try_map<G: Scalar>(&self, f: impl Fn(&F) -> Result<G>) -> Result<ProductTable<G>> {
        let mut products = Vec::with_capacity(self.products.len());
        for r in &self.products {
            let mut row = Vec::with_capacity(r.len());
            for v in r {
                let mut out = Vec::new();
                for (l, x) in v {
                    let y = f(x)?;
                    if !y.is_zero() {
                        out.push((*l, y));
                    }
                }
                row.push(out);
            }
            products.push(row);
        }
        Ok(ProductTable { algebra: self.algebra.clone(), parameters: self.parameters.clone(), products })
    }

    /// Entries where `self` and `other` differ.
    pub fn diff(&self, other: &Self) -> Vec<Mismatch<F>> {
        let d = self.algebra.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if self.products[i][j] != other.products[i][j] {
                    out.push(Mismatch { left: i, right: j, ours: self.products[i][j].clone(), theirs: other.products[i][j].clone() });
                }
            }
        }
        out
    }

    /// Parity additivity: `x_l` occurs in `x_i . x_j` only if `|x_l| = |x_i| + |x_j|`.
    pub fn respects_parity(&self) -> bool {
        let g = &self.algebra;
        (0..g.dim()).all(|i| (0..g.dim()).all(|j| self.products[i][j].iter().all(|(l, _)| g.is_odd(*l) == (g.is_odd(i) ^ g.is_odd(j)))))
    }

    fn left_times(&self, v: &SparseVec<F>, l: usize) -> SparseVec<F> {
        sparse_combine(v.iter().map(|(t, c)| (c.clone(), &self.products[*t][l])))
    }
    fn times_right(&self, i: usize, v: &SparseVec<F>) -> SparseVec<F> {
        sparse_combine(v.iter().map(|(t, c)| (c.clone(), &self.products[i][*t])))
    }

    /// First basis triple where `(x,y,z) != (-1)^{|x||y|} (y,x,z)`, with
    /// `(x,y,z) = (xy)z - x(yz)`.
    pub fn lssa_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.algebra.dim();
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i..d).map(move |j| (i, j))).collect();
        pairs.par_iter().find_map_first(|&(i, j)| {
            let s = koszul(self.algebra.is_odd(i), self.algebra.is_odd(j));
            let xy = &self.products[i][j];
            let yx = &self.products[j][i];
            (0..d).find_map(|l| {
                let a = self.left_times(xy, l);
                let b = self.times_right(i, &self.products[j][l]);
                let c = self.left_times(yx, l);
                let e = self.times_right(j, &self.products[i][l]);
                let sf = F::from_i64(s);
                let lhs = sparse_combine([(F::one(), &a), (F::from_i64(-1), &b)]);
                let rhs = sparse_combine([(sf.clone(), &c), (sf.negated(), &e)]);
                (lhs != rhs).then_some((i, j, l))
            })
        })
    }

    pub fn check_lssa(&self) -> bool {
        self.lssa_violation().is_none()
    }

    /// `x . y - (-1)^{|x||y|} y . x` on basis pairs.
    pub fn associated_bracket(&self) -> Vec<Vec<SparseVec<F>>> {
        let d = self.algebra.dim();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let s = koszul(self.algebra.is_odd(i), self.algebra.is_odd(j));
                        sparse_combine([(F::one(), &self.products[i][j]), (F::from_i64(-s), &self.products[j][i])])
                    })
                    .collect()
            })
            .collect()
    }

    /// First basis pair whose associated bracket differs from the algebra's.
    pub fn bracket_mismatch(&self) -> Option<(usize, usize)> {
        let br = self.associated_bracket();
        let d = self.algebra.dim();
        for i in 0..d {
            for j in 0..d {
                let want: SparseVec<F> = self.algebra.bracket(i, j).iter().map(|(l, c)| (*l, F::from_rational(c))).collect();
                if br[i][j] != want {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn brackets_match(&self) -> bool {
        self.bracket_mismatch().is_none()
    }

    /// `rho(x_i) y = x_i . y` without checking the axiom.
    pub fn left_regular_unchecked(&self) -> Representation<F> {
        let d = self.algebra.dim();
        let action = (0..d).map(|i| SparseCols { rows: d, cols: self.products[i].clone() }.to_dense()).collect();
        Representation::new(self.algebra.clone(), self.algebra.space(), action).expect("square table")
    }

    /// The left regular representation; fails unless the product is left-symmetric.
    pub fn left_regular(&self) -> Result<Representation<F>> {
        if let Some((i, j, l)) = self.lssa_violation() {
            let b = self.algebra.basis();
            return Err(Error::NotLeftSymmetric(format!("triple ({}, {}, {})", b[i].label, b[j].label, b[l].label)));
        }
        Ok(self.left_regular_unchecked())
    }

    /// `gamma(x_i) y = (-1)^{|x_i||y|} y . x_i`.
    pub fn right_mul(&self, i: usize) -> Matrix<F> {
        let d = self.algebra.dim();
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            let s = koszul(self.algebra.is_odd(i), self.algebra.is_odd(j));
            for (l, c) in &self.products[j][i] {
                m[(*l, j)] = signed(s, c);
            }
        }
        m
    }

    /// Affine space of even `e` with `x . e = x` for every basis `x`:
    /// a particular solution and a basis of directions.
    pub fn find_right_identities(&self) -> Option<(Vec<F>, Vec<Vec<F>>)> {
        let d = self.algebra.dim();
        let even = self.algebra.even_part();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..d {
            for l in 0..d {
                rows.push(even.iter().map(|&k| self.coeff(i, k, l)).collect::<Vec<F>>());
                rhs.push(if i == l { F::one() } else { F::zero() });
            }
        }
        let sys = Matrix::from_rows(rows);
        let sol = sys.solve(&rhs).ok()?;
        let embed = |v: &[F]| {
            let mut e = vec![F::zero(); d];
            for (c, &k) in even.iter().enumerate() {
                e[k] = v[c].clone();
            }
            e
        };
        Some((embed(&sol), sys.kernel().iter().map(|k| embed(k)).collect()))
    }

    /// Some `e` with `rho(e) = id`, if any.
    pub fn find_left_unit(&self) -> Option<Vec<F>> {
        let d = self.algebra.dim();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..d {
            for l in 0..d {
                rows.push((0..d).map(|k| self.coeff(k, j, l)).collect::<Vec<F>>());
                rhs.push(if j == l { F::one() } else { F::zero() });
            }
        }
        Matrix::from_rows(rows).solve(&rhs).ok()
    }
}

impl ProductTable<RatFun> {
    /// Specialize every parameter.
    pub fn specialize(&self, bindings: &[(crate::scalar::Var, Rational)]) -> Result<ProductTable<Rational>> {
        self.try_map(|x| x.evaluate(bindings))
    }
}

/// An even linear map `q: g -> V` together with the module structure `f` on `V`.
#[derive(Clone)]
pub struct Cocycle<F> {
    pub rep: Representation<F>,
    pub q: Matrix<F>,
}

impl<F: Scalar> std::fmt::Debug for Cocycle<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "cocycle into {:?}", self.rep)
    }
}

impl<F: Scalar> Cocycle<F> {
    pub fn new(rep: Representation<F>, q: Matrix<F>) -> Result<Self> {
        if q.rows() != rep.dim() || q.cols() != rep.algebra().dim() {
            return Err(Error::Invalid("cocycle map has the wrong shape".into()));
        }
        Ok(Cocycle { rep, q })
    }

    pub fn is_even(&self) -> bool {
        let g = self.rep.algebra();
        (0..self.q.rows()).all(|v| (0..self.q.cols()).all(|i| self.q[(v, i)].is_zero() || self.rep.space().is_odd(v) == g.is_odd(i)))
    }

    /// First basis pair violating `q([x,y]) = f(x)q(y) - (-1)^{|x||y|} f(y)q(x)`.
    pub fn violation(&self) -> Option<(usize, usize)> {
        let g = self.rep.algebra();
        let d = g.dim();
        let qs = SparseCols::from_dense(&self.q);
        let fs: Vec<SparseCols<F>> = self.rep.actions().iter().map(SparseCols::from_dense).collect();
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i..d).map(move |j| (i, j))).collect();
        pairs
            .par_iter()
            .find_first(|&&(i, j)| {
                let s = koszul(g.is_odd(i), g.is_odd(j));
                let lhs = sparse_combine(g.bracket(i, j).iter().map(|(l, c)| (F::from_rational(c), &qs.cols[*l])));
                let a = fs[i].apply(&qs.cols[j]);
                let b = fs[j].apply(&qs.cols[i]);
                lhs != sparse_combine([(F::one(), &a), (F::from_i64(-s), &b)])
            })
            .copied()
    }

    pub fn check(&self) -> bool {
        self.is_even() && self.violation().is_none()
    }
}

/// `ev_a(x) = f(x) a` for an even vector `a`.
pub fn evaluation_map<F: Scalar>(rep: &Representation<F>, a: &[F]) -> Result<Cocycle<F>> {
    if rep.space().parity_of(a) != Some(false) {
        return Err(Error::OddBasePoint);
    }
    let cols: Vec<Vec<F>> = rep.actions().iter().map(|m| m.mul_vec(a)).collect();
    Cocycle::new(rep.clone(), Matrix::from_columns(rep.dim(), &cols))
}

/// The product `x . y = q^{-1}(f(x) q(y))`.
pub fn lssa_from_cocycle<F: Scalar>(c: &Cocycle<F>) -> Result<ProductTable<F>> {
    let qinv = SparseCols::from_dense(&c.q.inverse()?);
    let qs = SparseCols::from_dense(&c.q);
    let g = c.rep.algebra().clone();
    let d = g.dim();
    let products = (0..d)
        .into_par_iter()
        .map(|i| {
            let f = SparseCols::from_dense(c.rep.action(i));
            (0..d).map(|j| qinv.apply(&f.apply(&qs.cols[j]))).collect()
        })
        .collect();
    ProductTable::new(g, Vec::new(), products)
}

/// Matrix whose columns are the images of the basis under `t`.
fn automorphism_matrix<F: Scalar>(t: &[Vec<Rational>]) -> Matrix<F> {
    Matrix::from_columns(t.len(), &t.iter().map(|c| c.iter().map(F::from_rational).collect()).collect::<Vec<_>>())
}

/// Whether `phi f2(x) = f1(T x) phi` for all basis `x` and `phi q2 = q1 T`, with `phi`
/// invertible and `T` an automorphism.
pub fn check_equivalence<F: Scalar>(c1: &Cocycle<F>, c2: &Cocycle<F>, phi: &Matrix<F>, t: &[Vec<Rational>]) -> bool {
    let g = c1.rep.algebra();
    if g != c2.rep.algebra() || g.check_automorphism(t).is_err() {
        return false;
    }
    if phi.rows() != c1.rep.dim() || phi.cols() != c2.rep.dim() || !phi.is_square() || phi.rank() != phi.rows() {
        return false;
    }
    for (i, ti) in t.iter().enumerate() {
        let f1t = c1.rep.act_element(&ti.iter().map(F::from_rational).collect::<Vec<_>>());
        if phi.mul(c2.rep.action(i)) != f1t.mul(phi) {
            return false;
        }
    }
    phi.mul(&c2.q) == c1.q.mul(&automorphism_matrix(t))
}

/// Basis of the even cocycles `(f, q)` with `q` vanishing on the even subalgebra.
pub fn cocycles_vanishing_on_even<F: Scalar>(rep: &Representation<F>) -> Vec<Matrix<F>> {
    let g = rep.algebra();
    let d = g.dim();
    let n = rep.dim();
    let odd_g: Vec<usize> = (0..d).filter(|&i| g.is_odd(i)).collect();
    let odd_v: Vec<usize> = rep.space().odd_range().collect();
    let unknown = |v: usize, i: usize| -> Option<usize> {
        let a = odd_v.iter().position(|&w| w == v)?;
        let b = odd_g.iter().position(|&j| j == i)?;
        Some(a * odd_g.len() + b)
    };
    let count = odd_v.len() * odd_g.len();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in i..d {
            let s = koszul(g.is_odd(i), g.is_odd(j));
            for v in 0..n {
                let mut row = vec![F::zero(); count];
                for (l, c) in g.bracket(i, j) {
                    if let Some(u) = unknown(v, *l) {
                        row[u] = row[u].plus(&F::from_rational(c));
                    }
                }
                for w in 0..n {
                    if let Some(u) = unknown(w, j) {
                        row[u] = row[u].minus(&rep.action(i)[(v, w)]);
                    }
                    if let Some(u) = unknown(w, i) {
                        row[u] = row[u].plus(&signed(s, &rep.action(j)[(v, w)]));
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..count).map(|u| (0..count).map(|v| if u == v { F::one() } else { F::zero() }).collect()).collect()
    } else {
        Matrix::from_rows(rows).kernel()
    };
    kernel
        .into_iter()
        .map(|k| {
            let mut q = Matrix::zeros(n, d);
            for &v in &odd_v {
                for &i in &odd_g {
                    q[(v, i)] = k[unknown(v, i).unwrap()].clone();
                }
            }
            q
        })
        .collect()
}

/// For cocycles agreeing on the even subalgebra: `(q1 - q2) ad_x = f(x) (q1 - q2)` on the
/// odd part, for every even basis `x`.
pub fn difference_is_even_module_map<F: Scalar>(c1: &Cocycle<F>, c2: &Cocycle<F>) -> bool {
    let g = c1.rep.algebra();
    let diff = c1.q.sub(&c2.q);
    let d = g.dim();
    for x in g.even_part() {
        if !diff.column(x).iter().all(|v| v.is_zero()) {
            return false;
        }
    }
    for x in g.even_part() {
        for y in (0..d).filter(|&y| g.is_odd(y)) {
            let br: SparseVec<F> = g.bracket(x, y).iter().map(|(l, c)| (*l, F::from_rational(c))).collect();
            let br = sparse_to_dense(&br, d);
            let lhs = diff.mul_vec(&br);
            let rhs = c1.rep.action(x).mul_vec(&diff.column(y));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
