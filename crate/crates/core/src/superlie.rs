//! Super vector spaces, gl(m|n) and sl(m|n), roots, weights, supertrace and -st.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseVec};
use crate::scalar::{koszul, signed, Rational, Scalar};
use std::fmt;
use std::sync::Arc;

/// Graded space with an ordered basis, even labels first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    labels: Vec<String>,
    even: usize,
}

impl SuperSpace {
    pub fn new(even: Vec<String>, odd: Vec<String>) -> Self {
        let n = even.len();
        let mut labels = even;
        labels.extend(odd);
        SuperSpace { labels, even: n }
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn even_dim(&self) -> usize {
        self.even
    }
    pub fn odd_dim(&self) -> usize {
        self.labels.len() - self.even
    }
    pub fn superdim(&self) -> (usize, usize) {
        (self.even_dim(), self.odd_dim())
    }
    pub fn is_odd(&self, i: usize) -> bool {
        i >= self.even
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
    pub fn even_range(&self) -> std::ops::Range<usize> {
        0..self.even
    }
    pub fn odd_range(&self) -> std::ops::Range<usize> {
        self.even..self.labels.len()
    }
    /// Parity of a vector, `None` if it has both even and odd components.
    pub fn parity_of<F: Scalar>(&self, v: &[F]) -> Option<bool> {
        let e = v[..self.even].iter().any(|x| !x.is_zero());
        let o = v[self.even..].iter().any(|x| !x.is_zero());
        match (e, o) {
            (true, true) => None,
            (false, true) => Some(true),
            _ => Some(false),
        }
    }
}

/// Parity of an (m+n)-square matrix in block form, `None` if mixed.
pub fn block_parity<F: Scalar>(x: &Matrix<F>, m: usize) -> Option<bool> {
    let n = x.rows();
    let mut even = false;
    let mut odd = false;
    for i in 0..n {
        for j in 0..n {
            if !x[(i, j)].is_zero() {
                if (i < m) == (j < m) {
                    even = true;
                } else {
                    odd = true;
                }
            }
        }
    }
    match (even, odd) {
        (true, true) => None,
        (false, true) => Some(true),
        _ => Some(false),
    }
}

/// `[X, Y] = XY - (-1)^{|X||Y|} YX` for homogeneous block matrices.
pub fn supercommutator<F: Scalar>(x: &Matrix<F>, y: &Matrix<F>, m: usize) -> Result<Matrix<F>> {
    let px = block_parity(x, m).ok_or(Error::MixedParityInput)?;
    let py = block_parity(y, m).ok_or(Error::MixedParityInput)?;
    let xy = x.mul(y);
    let yx = y.mul(x);
    Ok(if px && py { xy.add(&yx) } else { xy.sub(&yx) })
}

pub fn supertrace<F: Scalar>(x: &Matrix<F>, m: usize) -> F {
    let mut acc = F::zero();
    for i in 0..x.rows() {
        acc = if i < m { acc.plus(&x[(i, i)]) } else { acc.minus(&x[(i, i)]) };
    }
    acc
}

/// `-X^{st}` with `X^{st} = (X1^t, X3^t; -X2^t, X4^t)`.
pub fn neg_supertranspose<F: Scalar>(x: &Matrix<F>, m: usize) -> Matrix<F> {
    let n = x.rows();
    Matrix::from_fn(n, n, |i, j| {
        let t = x[(j, i)].clone();
        // Entry (i,j) of X^st: X2^t sits in the lower-left block with a minus sign.
        if i >= m && j < m {
            t
        } else {
            t.negated()
        }
    })
}

pub fn elementary<F: Scalar>(size: usize, i: usize, j: usize) -> Matrix<F> {
    let mut e = Matrix::zeros(size, size);
    e[(i, j)] = F::one();
    e
}

/// A weight `sum a_i eps_i + sum b_j delta_j`.
#[derive(Clone, PartialEq)]
pub struct WeightMN<F = Rational> {
    pub eps: Vec<F>,
    pub delta: Vec<F>,
}

impl<F: Scalar> WeightMN<F> {
    pub fn zero(m: usize, n: usize) -> Self {
        WeightMN { eps: vec![F::zero(); m], delta: vec![F::zero(); n] }
    }
    /// Generator `eps_i` (i < m) or `delta_{i-m}` (i >= m), zero-based.
    pub fn generator(m: usize, n: usize, i: usize) -> Self {
        let mut w = Self::zero(m, n);
        if i < m {
            w.eps[i] = F::one();
        } else {
            w.delta[i - m] = F::one();
        }
        w
    }
    pub fn add(&self, o: &Self) -> Self {
        WeightMN {
            eps: self.eps.iter().zip(&o.eps).map(|(a, b)| a.plus(b)).collect(),
            delta: self.delta.iter().zip(&o.delta).map(|(a, b)| a.plus(b)).collect(),
        }
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one().negated()))
    }
    pub fn scale(&self, c: &F) -> Self {
        WeightMN { eps: self.eps.iter().map(|a| a.times(c)).collect(), delta: self.delta.iter().map(|a| a.times(c)).collect() }
    }
    /// Representative with the last delta coefficient eliminated via
    /// `eps_1 + ... + eps_m = delta_1 + ... + delta_n`.
    pub fn canonical(&self) -> Self {
        let Some(bn) = self.delta.last().cloned() else { return self.clone() };
        let n = self.delta.len();
        WeightMN {
            eps: self.eps.iter().map(|a| a.plus(&bn)).collect(),
            delta: self.delta.iter().enumerate().map(|(j, b)| if j + 1 == n { F::zero() } else { b.minus(&bn) }).collect(),
        }
    }
    /// Value on a diagonal matrix with entries `d`.
    pub fn evaluate(&self, d: &[F]) -> F {
        let m = self.eps.len();
        let mut acc = F::zero();
        for (i, x) in d.iter().enumerate() {
            let c = if i < m { &self.eps[i] } else { &self.delta[i - m] };
            acc = acc.plus(&c.times(x));
        }
        acc
    }
}

/// `(eps_i, eps_i) = 1`, `(delta_j, delta_j) = -1`, all other generator pairings zero.
/// On sl(m|n) this is only meaningful when one argument lies in the root span, which
/// is orthogonal to the relation; pass such arguments unreduced.
pub fn weight_pairing<F: Scalar>(a: &WeightMN<F>, b: &WeightMN<F>) -> F {
    let mut acc = F::zero();
    for (x, y) in a.eps.iter().zip(&b.eps) {
        acc = acc.plus(&x.times(y));
    }
    for (x, y) in a.delta.iter().zip(&b.delta) {
        acc = acc.minus(&x.times(y));
    }
    acc
}

impl<F: Scalar> fmt::Debug for WeightMN<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.eps.iter().map(|x| x.to_string()).collect();
        let d: Vec<String> = self.delta.iter().map(|x| x.to_string()).collect();
        write!(f, "({} | {})", e.join(", "), d.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Gl,
    Sl,
}

#[derive(Clone, Debug)]
pub struct BasisElement {
    pub label: String,
    pub odd: bool,
    pub matrix: Matrix<Rational>,
    /// -1 for the lower-left odd block, +1 for the upper-right one.
    pub grade: i8,
    pub root: Option<WeightMN>,
}

/// A Lie superalgebra of supermatrices with a fixed homogeneous basis.
pub struct LieSuperalgebra {
    name: String,
    kind: Kind,
    m: usize,
    n: usize,
    basis: Vec<BasisElement>,
    brackets: Vec<Vec<SparseVec<Rational>>>,
    offdiag: Vec<Option<usize>>,
    diag: Vec<usize>,
    diag_rows: Vec<usize>,
    diag_solve: Matrix<Rational>,
}

impl fmt::Debug for LieSuperalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl PartialEq for LieSuperalgebra {
    fn eq(&self, o: &Self) -> bool {
        self.name == o.name && self.labels().eq(o.labels())
    }
}

pub type Algebra = Arc<LieSuperalgebra>;

fn label_e(i: usize, j: usize) -> String {
    format!("E_{}_{}", i + 1, j + 1)
}

impl LieSuperalgebra {
    pub fn gl(m: usize, n: usize) -> Algebra {
        let s = m + n;
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for i in 0..s {
            for j in 0..s {
                let b = (label_e(i, j), elementary::<Rational>(s, i, j));
                if (i < m) == (j < m) {
                    even.push(b);
                } else {
                    odd.push(b);
                }
            }
        }
        Arc::new(Self::assemble(format!("gl({m}|{n})"), Kind::Gl, m, n, even, odd))
    }

    /// sl(m|n). For (2,1) the basis is x1..x4, y1..y4 with x1=E12, x2=E21,
    /// x3=E11-E22, x4=E11+E22+2E33, y1=E31, y2=E32, y3=E13, y4=E23.
    pub fn sl(m: usize, n: usize) -> Algebra {
        assert!(m >= 1 && n >= 1, "sl(m|n) needs m, n >= 1");
        let s = m + n;
        let e = |i: usize, j: usize| elementary::<Rational>(s, i, j);
        if (m, n) == (2, 1) {
            let even = vec![
                ("x1".to_string(), e(0, 1)),
                ("x2".to_string(), e(1, 0)),
                ("x3".to_string(), e(0, 0).sub(&e(1, 1))),
                ("x4".to_string(), e(0, 0).add(&e(1, 1)).add(&e(2, 2).scale(&Rational::from(2)))),
            ];
            let odd = vec![
                ("y1".to_string(), e(2, 0)),
                ("y2".to_string(), e(2, 1)),
                ("y3".to_string(), e(0, 2)),
                ("y4".to_string(), e(1, 2)),
            ];
            return Arc::new(Self::assemble("sl(2|1)".into(), Kind::Sl, m, n, even, odd));
        }
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for i in 0..s {
            for j in 0..s {
                if i == j {
                    continue;
                }
                if (i < m) == (j < m) {
                    even.push((label_e(i, j), e(i, j)));
                } else {
                    odd.push((label_e(i, j), e(i, j)));
                }
            }
        }
        for i in 0..s - 1 {
            let h = if i + 1 == m { e(i, i).add(&e(i + 1, i + 1)) } else { e(i, i).sub(&e(i + 1, i + 1)) };
            even.push((format!("H_{}", i + 1), h));
        }
        Arc::new(Self::assemble(format!("sl({m}|{n})"), Kind::Sl, m, n, even, odd))
    }

    fn assemble(
        name: String,
        kind: Kind,
        m: usize,
        n: usize,
        even: Vec<(String, Matrix<Rational>)>,
        odd: Vec<(String, Matrix<Rational>)>,
    ) -> Self {
        let s = m + n;
        let mut basis = Vec::new();
        for (odd_flag, list) in [(false, even), (true, odd)] {
            for (label, matrix) in list {
                let mut grade = 0;
                let mut root = None;
                let nz: Vec<(usize, usize)> =
                    (0..s).flat_map(|i| (0..s).map(move |j| (i, j))).filter(|&(i, j)| !matrix[(i, j)].is_zero()).collect();
                if let [(i, j)] = nz.as_slice() {
                    if i != j {
                        root = Some(WeightMN::generator(m, n, *i).sub(&WeightMN::generator(m, n, *j)));
                        if odd_flag {
                            grade = if *i >= m { -1 } else { 1 };
                        }
                    }
                }
                basis.push(BasisElement { label, odd: odd_flag, matrix, grade, root });
            }
        }
        let mut offdiag = vec![None; s * s];
        let mut diag = Vec::new();
        for (b, el) in basis.iter().enumerate() {
            match &el.root {
                Some(_) => {
                    let (i, j) = (0..s)
                        .flat_map(|i| (0..s).map(move |j| (i, j)))
                        .find(|&(i, j)| !el.matrix[(i, j)].is_zero())
                        .unwrap();
                    offdiag[i * s + j] = Some(b);
                }
                None => {
                    diag.push(b);
                    // diagonal elementary matrices are basis elements of gl
                    let nz: Vec<usize> = (0..s).filter(|&i| !el.matrix[(i, i)].is_zero()).collect();
                    if nz.len() == 1 && el.matrix[(nz[0], nz[0])] == Rational::from(1) {
                        offdiag[nz[0] * s + nz[0]] = Some(b);
                    }
                }
            }
        }
        // Left inverse of the diagonal part restricted to independent rows.
        let dmat = Matrix::from_fn(s, diag.len(), |i, c| basis[diag[c]].matrix[(i, i)].clone());
        let (_, rows) = dmat.transpose().rref();
        let sq = dmat.submatrix(&rows, &(0..diag.len()).collect::<Vec<_>>());
        let diag_solve = sq.inverse().expect("diagonal basis is independent");
        let mut alg = LieSuperalgebra {
            name,
            kind,
            m,
            n,
            basis,
            brackets: Vec::new(),
            offdiag,
            diag,
            diag_rows: rows,
            diag_solve,
        };
        let d = alg.basis.len();
        let mut brackets = vec![vec![Vec::new(); d]; d];
        for (i, row) in brackets.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let c = supercommutator(&alg.basis[i].matrix, &alg.basis[j].matrix, m).unwrap();
                *slot = crate::linalg::sparse_from_dense(&alg.coords(&c).expect("bracket closes"));
            }
        }
        alg.brackets = brackets;
        alg
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn kind(&self) -> Kind {
        self.kind
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn superdim(&self) -> (usize, usize) {
        let odd = self.basis.iter().filter(|b| b.odd).count();
        (self.dim() - odd, odd)
    }
    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }
    pub fn is_odd(&self, i: usize) -> bool {
        self.basis[i].odd
    }
    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.basis.iter().map(|b| b.label.as_str())
    }
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }
    /// Basis index of the elementary matrix `E_ij` (zero-based), if it is a basis element.
    pub fn e_index(&self, i: usize, j: usize) -> Option<usize> {
        self.offdiag[i * (self.m + self.n) + j]
    }
    pub fn bracket(&self, i: usize, j: usize) -> &SparseVec<Rational> {
        &self.brackets[i][j]
    }
    pub fn space(&self) -> SuperSpace {
        let (e, _) = self.superdim();
        SuperSpace::new(
            self.basis[..e].iter().map(|b| b.label.clone()).collect(),
            self.basis[e..].iter().map(|b| b.label.clone()).collect(),
        )
    }

    /// Coordinates of a supermatrix in the basis; fails if it is not in the algebra.
    pub fn coords<F: Scalar>(&self, x: &Matrix<F>) -> Result<Vec<F>> {
        let s = self.m + self.n;
        let mut c = vec![F::zero(); self.dim()];
        for i in 0..s {
            for j in 0..s {
                if i != j && !x[(i, j)].is_zero() {
                    let b = self.offdiag[i * s + j].ok_or_else(|| Error::Invalid(format!("entry ({i},{j}) outside {}", self.name)))?;
                    c[b] = x[(i, j)].clone();
                }
            }
        }
        let rhs: Vec<F> = self.diag_rows.iter().map(|&r| x[(r, r)].clone()).collect();
        let sol = self.diag_solve.map(F::from_rational).mul_vec(&rhs);
        for (k, &b) in self.diag.iter().enumerate() {
            c[b] = sol[k].clone();
        }
        for i in 0..s {
            let mut acc = F::zero();
            for (k, &b) in self.diag.iter().enumerate() {
                acc = acc.plus(&sol[k].times(&F::from_rational(&self.basis[b].matrix[(i, i)])));
            }
            if acc != x[(i, i)] {
                return Err(Error::Invalid(format!("diagonal not in {}", self.name)));
            }
        }
        Ok(c)
    }

    /// The supermatrix with the given coordinates.
    pub fn element<F: Scalar>(&self, c: &[F]) -> Matrix<F> {
        let s = self.m + self.n;
        let mut out = Matrix::zeros(s, s);
        for (b, x) in c.iter().enumerate() {
            if !x.is_zero() {
                out = out.add(&self.basis[b].matrix.map(F::from_rational).scale(x));
            }
        }
        out
    }

    /// Bracket of coordinate vectors of homogeneous elements.
    pub fn bracket_vec<F: Scalar>(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.times(b);
                for (l, c) in &self.brackets[i][j] {
                    out[*l] = out[*l].plus(&ab.times(&F::from_rational(c)));
                }
            }
        }
        out
    }

    /// Images of the basis under `x -> -x^{st}`, as coordinate vectors.
    pub fn neg_st_map(&self) -> Vec<Vec<Rational>> {
        self.basis.iter().map(|b| self.coords(&neg_supertranspose(&b.matrix, self.m)).expect("-st preserves the algebra")).collect()
    }

    /// Check that a linear map given on the basis preserves all brackets.
    pub fn check_automorphism(&self, theta: &[Vec<Rational>]) -> Result<()> {
        let d = self.dim();
        if theta.len() != d || theta.iter().any(|v| v.len() != d) {
            return Err(Error::NotAnAutomorphism("wrong shape".into()));
        }
        for i in 0..d {
            if let Some(p) = self.space().parity_of(&theta[i]) {
                if !theta[i].iter().all(|x| x.is_zero()) && p != self.is_odd(i) {
                    return Err(Error::NotAnAutomorphism(format!("{} changes parity", self.basis[i].label)));
                }
            } else {
                return Err(Error::NotAnAutomorphism(format!("{} maps to a mixed element", self.basis[i].label)));
            }
        }
        let m = Matrix::from_columns(d, theta);
        if m.rank() < d {
            return Err(Error::NotAnAutomorphism("not invertible".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = self.bracket_vec(&theta[i], &theta[j]);
                let mut rhs = vec![Rational::zero(); d];
                for (l, c) in &self.brackets[i][j] {
                    for (r, t) in theta[*l].iter().enumerate() {
                        rhs[r] = rhs[r].plus(&c.times(t));
                    }
                }
                if lhs != rhs {
                    return Err(Error::NotAnAutomorphism(format!(
                        "bracket of {} and {} not preserved",
                        self.basis[i].label, self.basis[j].label
                    )));
                }
            }
        }
        Ok(())
    }

    /// First basis triple violating super Jacobi, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        let unit = |i: usize| {
            let mut v = vec![Rational::zero(); d];
            v[i] = Rational::one();
            v
        };
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if !self.jacobi_holds(&unit(i), &unit(j), &unit(k), self.is_odd(i), self.is_odd(j), self.is_odd(k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0`.
    pub fn jacobi_holds<F: Scalar>(&self, x: &[F], y: &[F], z: &[F], px: bool, py: bool, pz: bool) -> bool {
        let t1 = self.bracket_vec(x, &self.bracket_vec(y, z));
        let t2 = self.bracket_vec(y, &self.bracket_vec(z, x));
        let t3 = self.bracket_vec(z, &self.bracket_vec(x, y));
        (0..self.dim()).all(|l| {
            signed(koszul(px, pz), &t1[l]).plus(&signed(koszul(py, px), &t2[l])).plus(&signed(koszul(pz, py), &t3[l])).is_zero()
        })
    }

    /// Rank of the span of all basis brackets.
    pub fn derived_rank(&self) -> usize {
        let d = self.dim();
        let cols: Vec<Vec<Rational>> = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .map(|(i, j)| crate::linalg::sparse_to_dense(&self.brackets[i][j], d))
            .collect();
        Matrix::from_columns(d, &cols).rank()
    }

    /// `rho_0 - rho_1` for the Borel of upper triangular matrices.
    pub fn rho(&self) -> WeightMN {
        let half = Rational::new(1, 2);
        let mut r = WeightMN::zero(self.m, self.n);
        for b in &self.basis {
            if let (Some(root), true) = (&b.root, self.is_positive_root_vector(b)) {
                let c = if b.odd { half.negated() } else { half.clone() };
                r = r.add(&root.scale(&c));
            }
        }
        r
    }

    fn is_positive_root_vector(&self, b: &BasisElement) -> bool {
        let s = self.m + self.n;
        (0..s).any(|i| (i + 1..s).any(|j| !b.matrix[(i, j)].is_zero())) && b.root.is_some()
    }

    /// Indices of the positive even root vectors `E_ij`, `i < j` in the same block.
    pub fn even_raising(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&b| !self.basis[b].odd && self.basis[b].root.is_some() && self.is_positive_root_vector(&self.basis[b])).collect()
    }
    /// Indices of the odd raising operators (upper-right block).
    pub fn odd_raising(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].grade == 1).collect()
    }
    pub fn odd_lowering(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].grade == -1).collect()
    }
    /// Even basis elements.
    pub fn even_part(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&b| !self.basis[b].odd).collect()
    }
    /// The weight taking the given values on [`Self::cartan`], in canonical form.
    pub fn weight_from_values<F: Scalar>(&self, values: &[F]) -> Result<WeightMN<F>> {
        let s = self.m + self.n;
        let unknowns = if self.kind == Kind::Sl { s - 1 } else { s };
        let sys = Matrix::from_fn(self.diag.len(), unknowns, |c, i| F::from_rational(&self.basis[self.diag[c]].matrix[(i, i)]));
        let sol = sys.solve(values)?;
        let mut w = WeightMN::zero(self.m, self.n);
        for (i, x) in sol.into_iter().enumerate() {
            if i < self.m {
                w.eps[i] = x;
            } else {
                w.delta[i - self.m] = x;
            }
        }
        Ok(w)
    }
    /// Diagonal (Cartan) basis elements.
    pub fn cartan(&self) -> Vec<usize> {
        self.diag.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Rational;

    #[test]
    fn dimensions() {
        assert_eq!(LieSuperalgebra::sl(2, 1).superdim(), (4, 4));
        for m in 1..4 {
            let d = 2 * m * (m + 1);
            assert_eq!(LieSuperalgebra::sl(m + 1, m).superdim(), (d, d));
        }
        assert_eq!(LieSuperalgebra::gl(2, 0).superdim(), (4, 0));
        assert_eq!(LieSuperalgebra::sl(3, 3).superdim(), (17, 18));
    }

    #[test]
    fn commutators() {
        let e = |i, j| elementary::<Q>(3, i, j);
        assert_eq!(supercommutator(&e(0, 1), &e(1, 0), 2).unwrap(), e(0, 0).sub(&e(1, 1)));
        assert_eq!(supercommutator(&e(0, 2), &e(2, 0), 2).unwrap(), e(0, 0).add(&e(2, 2)));
        assert!(supercommutator(&e(0, 2), &e(0, 2), 2).unwrap().is_zero());
        assert_eq!(supercommutator(&e(0, 2).add(&e(0, 1)), &e(1, 0), 2), Err(Error::MixedParityInput));
        let g = LieSuperalgebra::sl(2, 1);
        let c = g.coords(&e(0, 0).add(&e(2, 2))).unwrap();
        let h = Q::new(1, 2);
        assert_eq!(c, vec![Q::zero(), Q::zero(), h.clone(), h, Q::zero(), Q::zero(), Q::zero(), Q::zero()]);
    }

    #[test]
    fn supertraces() {
        assert_eq!(supertrace(&Matrix::<Q>::identity(5), 3), Q::from(1));
        let g = LieSuperalgebra::sl(2, 1);
        assert_eq!(supertrace(&g.basis()[3].matrix, 2), Q::zero());
        for b in LieSuperalgebra::sl(3, 2).basis() {
            assert!(supertrace(&b.matrix, 3).is_zero());
        }
    }

    #[test]
    fn neg_st_orders() {
        let e = |i, j| elementary::<Q>(3, i, j);
        assert_eq!(neg_supertranspose(&e(0, 1), 2), e(1, 0).neg());
        let once = neg_supertranspose(&e(0, 2), 2);
        assert_eq!(once, e(2, 0));
        assert_eq!(neg_supertranspose(&once, 2), e(0, 2).neg());
        let g = LieSuperalgebra::sl(2, 1);
        g.check_automorphism(&g.neg_st_map()).unwrap();
    }

    #[test]
    fn jacobi_and_perfect() {
        for g in [LieSuperalgebra::sl(2, 1), LieSuperalgebra::sl(3, 1), LieSuperalgebra::gl(1, 1)] {
            assert_eq!(g.jacobi_violation(), None, "{}", g.name());
        }
        let g = LieSuperalgebra::sl(3, 2);
        assert_eq!(g.derived_rank(), g.dim());
    }

    #[test]
    fn z_grading() {
        let g = LieSuperalgebra::sl(3, 2);
        let grade = |i: usize| g.basis()[i].grade as i32;
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let t = grade(i) + grade(j);
                for (l, _) in g.bracket(i, j) {
                    if t.abs() <= 1 {
                        assert_eq!(grade(*l), t);
                    } else {
                        panic!("bracket outside the grading");
                    }
                }
            }
        }
    }

    #[test]
    fn pairings() {
        let a = WeightMN::<Q>::generator(2, 1, 0).sub(&WeightMN::generator(2, 1, 1));
        assert_eq!(weight_pairing(&a, &a), Q::from(2));
        let b = WeightMN::<Q>::generator(2, 1, 0).sub(&WeightMN::generator(2, 1, 2));
        assert_eq!(weight_pairing(&b, &b), Q::zero());
        let g = LieSuperalgebra::sl(2, 1);
        assert_eq!(g.rho().canonical(), WeightMN::generator(2, 1, 0));
    }
}
