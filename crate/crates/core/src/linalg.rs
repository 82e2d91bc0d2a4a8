//! Dense exact linear algebra over any [`Scalar`] field.

use crate::error::{Error, Result};
use crate::scalar::{Poly, RatFun, Rational, Scalar, Var};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Index, IndexMut};

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect())
    }
    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<F>]) -> Self {
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn entries(&self) -> &[F] {
        &self.data
    }
    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
    pub fn try_map<G: Scalar>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Matrix<G>> {
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.plus(b)).collect() }
    }
    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.minus(b)).collect() }
    }
    pub fn scale(&self, c: &F) -> Self {
        self.map(|x| x.times(c))
    }
    pub fn neg(&self) -> Self {
        self.map(|x| x.negated())
    }
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        let t = a.times(b);
                        let e = &mut out[(i, j)];
                        *e = e.plus(&t);
                    }
                }
            }
        }
        out
    }
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.plus(&a.times(b));
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns. Pivots are the first nonzero
    /// entry in column order.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inverse().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m[(r, j)].times(&inv);
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = m[(i, j)].minus(&f.times(&m[(r, j)]));
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = r[(row, f)].negated();
                }
                v
            })
            .collect()
    }

    /// One solution of `self * x = b`.
    pub fn solve(&self, b: &[F]) -> Result<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| if j < self.cols { self[(i, j)].clone() } else { b[i].clone() });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::Inconsistent);
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Invalid("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::NotBijective { rank: pivots.iter().filter(|&&p| p < n).count(), dim: n });
        }
        Ok(Self::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }

    pub fn trace(&self) -> F {
        let mut acc = F::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.plus(&self[(i, i)]);
        }
        acc
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Scalar> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally maintained row-reduced spanning set.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    dim: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Scalar> Echelon<F> {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new() }
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.minus(&f.times(r));
                }
            }
        }
        w
    }
    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
    /// Add `v` to the span; returns false if it was already in it.
    pub fn insert(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else { return false };
        let inv = w[p].inverse().expect("nonzero pivot");
        for x in w.iter_mut() {
            *x = x.times(&inv);
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, r) in row.iter_mut().zip(&w) {
                    if !r.is_zero() {
                        *x = x.minus(&f.times(r));
                    }
                }
            }
        }
        self.rows.push((p, w));
        true
    }
    /// Reduced basis of the span, ordered by pivot.
    pub fn basis(&self) -> Vec<Vec<F>> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|r| r.0);
        rows.into_iter().map(|r| r.1).collect()
    }
}

/// Sparse vector: sorted `(index, nonzero value)` pairs.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn sparse_from_dense<F: Scalar>(v: &[F]) -> SparseVec<F> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn sparse_to_dense<F: Scalar>(v: &SparseVec<F>, n: usize) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `sum c_i * v_i` over sparse vectors.
pub fn sparse_combine<'a, F: Scalar>(parts: impl IntoIterator<Item = (F, &'a SparseVec<F>)>) -> SparseVec<F> {
    let mut acc: BTreeMap<usize, F> = BTreeMap::new();
    for (c, v) in parts {
        if c.is_zero() {
            continue;
        }
        for (i, x) in v {
            let t = c.times(x);
            match acc.get_mut(i) {
                Some(e) => *e = e.plus(&t),
                None => {
                    acc.insert(*i, t);
                }
            }
        }
    }
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// Column-sparse matrix used for fast products on large, mostly-zero operators.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseCols<F> {
    pub rows: usize,
    pub cols: Vec<SparseVec<F>>,
}

impl<F: Scalar> SparseCols<F> {
    pub fn from_dense(m: &Matrix<F>) -> Self {
        SparseCols { rows: m.rows(), cols: (0..m.cols()).map(|j| sparse_from_dense(&m.column(j))).collect() }
    }
    pub fn to_dense(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.rows, self.cols.len());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col {
                m[(*i, j)] = x.clone();
            }
        }
        m
    }
    pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        sparse_combine(v.iter().map(|(j, c)| (c.clone(), &self.cols[*j])))
    }
    pub fn mul(&self, o: &SparseCols<F>) -> SparseCols<F> {
        SparseCols { rows: self.rows, cols: o.cols.iter().map(|c| self.apply(c)).collect() }
    }
    pub fn combine(parts: &[(F, &SparseCols<F>)], rows: usize, ncols: usize) -> SparseCols<F> {
        SparseCols {
            rows,
            cols: (0..ncols).map(|j| sparse_combine(parts.iter().map(|(c, m)| (c.clone(), &m.cols[j])))).collect(),
        }
    }
    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }
}

/// Fresh parameter names for symbolic certificates.
pub fn fresh_vars(n: usize) -> Vec<Var> {
    (1..=n).map(|i| Var::new(&format!("_t{i}"))).collect()
}

/// Rank of `B0 + sum t_i B_i` over Q(params)(t_1..t_d), which is the largest
/// rank attained at any specialization of the `t_i`.
pub fn max_rank_over_affine_family<F: Scalar>(family: &[Matrix<F>]) -> usize {
    let Some(first) = family.first() else { return 0 };
    let (rows, cols) = (first.rows(), first.cols());
    let ts = fresh_vars(family.len().saturating_sub(1));
    let mut entries = vec![vec![RatFun::zero(); cols]; rows];
    for (n, b) in family.iter().enumerate() {
        assert_eq!((b.rows(), b.cols()), (rows, cols), "family members differ in shape");
        let coeff = if n == 0 { RatFun::one() } else { RatFun::from_poly(Poly::var(ts[n - 1])) };
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                let x = &b[(i, j)];
                if !x.is_zero() {
                    *e = e.plus(&coeff.times(&x.to_ratfun()));
                }
            }
        }
    }
    let polys = entries.into_iter().map(clear_row_denominators).collect();
    fraction_free_rank(polys)
}

fn clear_row_denominators(row: Vec<RatFun>) -> Vec<Poly> {
    let mut l = Poly::one();
    for x in &row {
        let d = x.denominator();
        if !d.is_one() {
            let g = crate::scalar::poly_gcd(&l, d);
            l = l.mul(&d.div_exact(&g).expect("gcd divides"));
        }
    }
    row.iter().map(|x| x.numerator().mul(&l.div_exact(x.denominator()).expect("lcm multiple"))).collect()
}

/// Rank over the fraction field by Bareiss elimination; every division is exact.
pub fn fraction_free_rank(mut a: Vec<Vec<Poly>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = Poly::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let piv = a[r][c].clone();
        for i in r + 1..rows {
            let f = a[i][c].clone();
            for j in c + 1..cols {
                let num = piv.mul(&a[i][j]).sub(&f.mul(&a[r][j]));
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][c] = Poly::zero();
        }
        prev = piv;
        r += 1;
    }
    r
}

/// Convert a rational matrix into any field.
pub fn lift<F: Scalar>(m: &Matrix<Rational>) -> Matrix<F> {
    m.map(F::from_rational)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_ratfun;

    type Q = Rational;

    #[test]
    fn small_ranks() {
        assert_eq!(Matrix::<Q>::identity(8).rank(), 8);
        assert_eq!(Matrix::<Q>::zeros(3, 4).rank(), 0);
        let m = Matrix::<Q>::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.kernel(), vec![vec![Q::from(-1), Q::from(1)]]);
        assert!(Matrix::<Q>::identity(5).kernel().is_empty());
    }

    #[test]
    fn solving() {
        let d = Matrix::<Q>::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(d.solve(&[Q::from(4), Q::from(9)]).unwrap(), vec![Q::from(2), Q::from(3)]);
        let b = vec![Q::from(7), Q::new(1, 3)];
        assert_eq!(Matrix::<Q>::identity(2).solve(&b).unwrap(), b);
        let s = Matrix::<Q>::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(s.solve(&[Q::from(1), Q::from(2)]), Err(Error::Inconsistent));
        assert!(matches!(s.inverse(), Err(Error::NotBijective { rank: 1, dim: 2 })));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::<Q>::from_i64(&[&[2, 1, 0], &[0, 1, 4], &[1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
    }

    #[test]
    fn symbolic_rank_and_specialization() {
        let k = |s: &str| parse_ratfun(s).unwrap();
        let m = Matrix::from_rows(vec![vec![k("k+1"), k("1")], vec![k("0"), k("k")]]);
        assert_eq!(m.rank(), 2);
        let at = m.try_map(|x| x.substitute(&[(Var::new("k"), Q::from(-1))])).unwrap();
        assert_eq!(at.rank(), 1);
    }

    #[test]
    fn affine_family_ranks() {
        let i2 = Matrix::<Q>::identity(2);
        assert_eq!(max_rank_over_affine_family(&[i2]), 2);
        let e11 = Matrix::<Q>::from_i64(&[&[1, 0], &[0, 0]]);
        let e22 = Matrix::<Q>::from_i64(&[&[0, 0], &[0, 1]]);
        assert_eq!(max_rank_over_affine_family(&[Matrix::zeros(2, 2), e11.clone(), e22]), 2);
        assert_eq!(max_rank_over_affine_family(&[Matrix::zeros(2, 2), e11.clone(), e11]), 1);
        // t1*[[1,1],[1,1]] + t2*[[1,-1],[-1,1]] has determinant 4 t1 t2.
        let a = Matrix::<Q>::from_i64(&[&[1, 1], &[1, 1]]);
        let b = Matrix::<Q>::from_i64(&[&[1, -1], &[-1, 1]]);
        assert_eq!(max_rank_over_affine_family(&[Matrix::zeros(2, 2), a, b]), 2);
    }
}
