//! Finite-dimensional representations of matrix Lie superalgebras.

use crate::error::{Error, Result};
use crate::linalg::{max_rank_over_affine_family, Echelon, Matrix, SparseCols};
use crate::scalar::{koszul, signed, Rational, Scalar};
use crate::superlie::{Algebra, SuperSpace, WeightMN};
use rayon::prelude::*;
use std::collections::HashMap;

/// An even action of an algebra on a super space, one matrix per basis element.
#[derive(Clone)]
pub struct Representation<F> {
    algebra: Algebra,
    space: SuperSpace,
    action: Vec<Matrix<F>>,
}

impl<F: Scalar> std::fmt::Debug for Representation<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (e, o) = self.superdim();
        write!(f, "{}-module of superdimension {e}|{o}", self.algebra.name())
    }
}

impl<F: Scalar> Representation<F> {
    pub fn new(algebra: Algebra, space: SuperSpace, action: Vec<Matrix<F>>) -> Result<Self> {
        let n = space.dim();
        if action.len() != algebra.dim() {
            return Err(Error::Invalid(format!("{} action matrices for a {}-dimensional algebra", action.len(), algebra.dim())));
        }
        if action.iter().any(|a| a.rows() != n || a.cols() != n) {
            return Err(Error::Invalid("action matrix has the wrong shape".into()));
        }
        Ok(Representation { algebra, space, action })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }
    pub fn space(&self) -> &SuperSpace {
        &self.space
    }
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn superdim(&self) -> (usize, usize) {
        self.space.superdim()
    }
    pub fn action(&self, i: usize) -> &Matrix<F> {
        &self.action[i]
    }
    pub fn actions(&self) -> &[Matrix<F>] {
        &self.action
    }
    /// Operator of the element with coordinates `c`.
    pub fn act_element(&self, c: &[F]) -> Matrix<F> {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (i, x) in c.iter().enumerate() {
            if !x.is_zero() {
                out = out.add(&self.action[i].scale(x));
            }
        }
        out
    }
    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Representation<G> {
        Representation { algebra: self.algebra.clone(), space: self.space.clone(), action: self.action.iter().map(|a| a.map(&f)).collect() }
    }
    pub fn try_map<G: Scalar>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Representation<G>> {
        Ok(Representation {
            algebra: self.algebra.clone(),
            space: self.space.clone(),
            action: self.action.iter().map(|a| a.try_map(&f)).collect::<Result<_>>()?,
        })
    }
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        let e = self.space.even_dim();
        let odd = labels[e..].to_vec();
        let even = labels[..e].to_vec();
        self.space = SuperSpace::new(even, odd);
        self
    }

    /// The natural module of a matrix algebra, basis `e1..em, xi1..xin`.
    pub fn standard(g: &Algebra) -> Self {
        let space = SuperSpace::new((1..=g.m()).map(|i| format!("e{i}")).collect(), (1..=g.n()).map(|s| format!("xi{s}")).collect());
        let action = g.basis().iter().map(|b| b.matrix.map(F::from_rational)).collect();
        Representation { algebra: g.clone(), space, action }
    }

    /// The adjoint module on the algebra's own basis.
    pub fn adjoint(g: &Algebra) -> Self {
        let d = g.dim();
        let action = (0..d)
            .map(|x| {
                let mut a = Matrix::zeros(d, d);
                for j in 0..d {
                    for (l, c) in g.bracket(x, j) {
                        a[(*l, j)] = F::from_rational(c);
                    }
                }
                a
            })
            .collect();
        Representation { algebra: g.clone(), space: g.space(), action }
    }

    /// The 1|0 trivial module.
    pub fn trivial(g: &Algebra) -> Self {
        Representation { algebra: g.clone(), space: SuperSpace::new(vec!["1".into()], vec![]), action: vec![Matrix::zeros(1, 1); g.dim()] }
    }

    /// `(x.phi)(v) = -(-1)^{|x||phi|} phi(x v)` on the dual basis.
    pub fn dual(&self) -> Self {
        let n = self.dim();
        let action = self
            .action
            .iter()
            .enumerate()
            .map(|(x, a)| {
                let px = self.algebra.is_odd(x);
                Matrix::from_fn(n, n, |i, j| signed(-koszul(px, self.space.is_odd(j)), &a[(j, i)]))
            })
            .collect();
        let space = SuperSpace::new(
            self.space.labels()[self.space.even_range()].iter().map(|l| format!("{l}*")).collect(),
            self.space.labels()[self.space.odd_range()].iter().map(|l| format!("{l}*")).collect(),
        );
        Representation { algebra: self.algebra.clone(), space, action }
    }

    /// Parity change: the odd basis vectors become the even ones; entries unchanged.
    pub fn parity_shift(&self) -> Self {
        let e = self.space.even_dim();
        let n = self.dim();
        let perm: Vec<usize> = (e..n).chain(0..e).collect();
        let labels = self.space.labels();
        let space = SuperSpace::new(perm[..n - e].iter().map(|&i| labels[i].clone()).collect(), perm[n - e..].iter().map(|&i| labels[i].clone()).collect());
        let action = self.action.iter().map(|a| Matrix::from_fn(n, n, |i, j| a[(perm[i], perm[j])].clone())).collect();
        Representation { algebra: self.algebra.clone(), space, action }
    }

    /// Direct sum with labels tagged `'` and `''`.
    pub fn direct_sum(&self, o: &Self) -> Result<Self> {
        direct_sum_tagged(&[(self, "'"), (o, "''")])
    }

    /// Direct sum of several modules, labels tagged `#1`, `#2`, ...
    pub fn direct_sum_all(parts: &[&Self]) -> Result<Self> {
        let tags: Vec<String> = (1..=parts.len()).map(|k| format!("#{k}")).collect();
        let tagged: Vec<(&Self, &str)> = parts.iter().zip(&tags).map(|(r, t)| (*r, t.as_str())).collect();
        direct_sum_tagged(&tagged)
    }

    /// `x(u (x) v) = (xu) (x) v + (-1)^{|x||u|} u (x) (xv)`.
    pub fn tensor(&self, o: &Self) -> Result<Self> {
        if self.algebra != o.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let (n1, n2) = (self.dim(), o.dim());
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for want_odd in [false, true] {
            for i in 0..n1 {
                for j in 0..n2 {
                    if (self.space.is_odd(i) ^ o.space.is_odd(j)) == want_odd {
                        pairs.push((i, j));
                    }
                }
            }
        }
        let even = pairs.iter().filter(|&&(i, j)| !(self.space.is_odd(i) ^ o.space.is_odd(j))).count();
        let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let n = pairs.len();
        let action = (0..self.algebra.dim())
            .map(|x| {
                let px = self.algebra.is_odd(x);
                let (a, b) = (&self.action[x], &o.action[x]);
                let mut m = Matrix::<F>::zeros(n, n);
                for (col, &(i, j)) in pairs.iter().enumerate() {
                    for k in 0..n1 {
                        if !a[(k, i)].is_zero() {
                            let r = index[&(k, j)];
                            m[(r, col)] = m[(r, col)].plus(&a[(k, i)]);
                        }
                    }
                    let s = koszul(px, self.space.is_odd(i));
                    for k in 0..n2 {
                        if !b[(k, j)].is_zero() {
                            let r = index[&(i, k)];
                            m[(r, col)] = m[(r, col)].plus(&signed(s, &b[(k, j)]));
                        }
                    }
                }
                m
            })
            .collect();
        let labels: Vec<String> = pairs.iter().map(|&(i, j)| format!("{}⊗{}", self.space.label(i), o.space.label(j))).collect();
        let space = SuperSpace::new(labels[..even].to_vec(), labels[even..].to_vec());
        Ok(Representation { algebra: self.algebra.clone(), space, action })
    }

    /// Quotient of the tensor square by `uv = -(-1)^{|u||v|} vu`. Basis: `e_i e_j` (i<j),
    /// `xi_s xi_t` (s<=t), then `e_i xi_s`.
    pub fn exterior_square(&self) -> Self {
        self.graded_square(-1)
    }

    /// Quotient of the tensor square by `uv = (-1)^{|u||v|} vu`. Basis: `e_i e_j` (i<=j),
    /// `xi_s xi_t` (s<t), then `e_i xi_s`.
    pub fn symmetric_square(&self) -> Self {
        self.graded_square(1)
    }

    fn graded_square(&self, eps: i64) -> Self {
        let sp = &self.space;
        let n0 = self.dim();
        let ev: Vec<usize> = sp.even_range().collect();
        let od: Vec<usize> = sp.odd_range().collect();
        let mut pairs = Vec::new();
        for (group, diag_ok) in [(&ev, eps == 1), (&od, eps == -1)] {
            for (a, &i) in group.iter().enumerate() {
                for &j in &group[a..] {
                    if i != j || diag_ok {
                        pairs.push((i, j));
                    }
                }
            }
        }
        let even = pairs.len();
        for &i in &ev {
            for &s in &od {
                pairs.push((i, s));
            }
        }
        let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        // u_a u_b as (basis index, sign), or None when it vanishes.
        let normal = |a: usize, b: usize| -> Option<(usize, i64)> {
            if let Some(&k) = index.get(&(a, b)) {
                return Some((k, 1));
            }
            let s = eps * koszul(sp.is_odd(a), sp.is_odd(b));
            if a == b {
                return None;
            }
            index.get(&(b, a)).map(|&k| (k, s))
        };
        let n = pairs.len();
        let action = (0..self.algebra.dim())
            .map(|x| {
                let px = self.algebra.is_odd(x);
                let a = &self.action[x];
                let mut m = Matrix::<F>::zeros(n, n);
                for (col, &(i, j)) in pairs.iter().enumerate() {
                    let s = koszul(px, sp.is_odd(i));
                    for k in 0..n0 {
                        if !a[(k, i)].is_zero() {
                            if let Some((r, t)) = normal(k, j) {
                                m[(r, col)] = m[(r, col)].plus(&signed(t, &a[(k, i)]));
                            }
                        }
                        if !a[(k, j)].is_zero() {
                            if let Some((r, t)) = normal(i, k) {
                                m[(r, col)] = m[(r, col)].plus(&signed(s * t, &a[(k, j)]));
                            }
                        }
                    }
                }
                m
            })
            .collect();
        let sep = if eps == -1 { "∧" } else { "·" };
        let labels: Vec<String> = pairs.iter().map(|&(i, j)| format!("{}{sep}{}", sp.label(i), sp.label(j))).collect();
        let space = SuperSpace::new(labels[..even].to_vec(), labels[even..].to_vec());
        Representation { algebra: self.algebra.clone(), space, action }
    }

    /// The module `x -> f(theta(x))` for an automorphism given on the basis.
    pub fn twist(&self, theta: &[Vec<Rational>]) -> Result<Self> {
        self.algebra.check_automorphism(theta)?;
        let action = theta.iter().map(|c| self.act_element(&c.iter().map(F::from_rational).collect::<Vec<_>>())).collect();
        Ok(Representation { algebra: self.algebra.clone(), space: self.space.clone(), action })
    }

    /// Twist by `x -> -x^{st}`.
    pub fn twist_neg_st(&self) -> Self {
        self.twist(&self.algebra.neg_st_map()).expect("-st is an automorphism")
    }

    /// Every operator is even: even basis elements act block-diagonally, odd ones swap blocks.
    pub fn is_parity_respecting(&self) -> bool {
        let n = self.dim();
        self.action.iter().enumerate().all(|(x, a)| {
            let px = self.algebra.is_odd(x);
            (0..n).all(|i| (0..n).all(|j| a[(i, j)].is_zero() || (self.space.is_odd(i) ^ self.space.is_odd(j)) == px))
        })
    }

    /// First basis pair where `f([x,y]) != f(x)f(y) - (-1)^{|x||y|} f(y)f(x)`.
    pub fn bracket_violation(&self) -> Option<(usize, usize)> {
        let d = self.algebra.dim();
        let n = self.dim();
        let sparse: Vec<SparseCols<F>> = self.action.iter().map(SparseCols::from_dense).collect();
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i..d).map(move |j| (i, j))).collect();
        pairs
            .par_iter()
            .find_first(|&&(i, j)| {
                let s = koszul(self.algebra.is_odd(i), self.algebra.is_odd(j));
                let lhs: Vec<(F, &SparseCols<F>)> =
                    self.algebra.bracket(i, j).iter().map(|(l, c)| (F::from_rational(c), &sparse[*l])).collect();
                let lhs = SparseCols::combine(&lhs, n, n);
                let ab = sparse[i].mul(&sparse[j]);
                let ba = sparse[j].mul(&sparse[i]);
                let rhs = SparseCols::combine(&[(F::one(), &ab), (F::from_i64(-s), &ba)], n, n);
                lhs != rhs
            })
            .copied()
    }

    /// The bracket compatibility holds on all basis pairs and every operator is even.
    pub fn check(&self) -> bool {
        self.is_parity_respecting() && self.bracket_violation().is_none()
    }

    /// Smallest invariant subspace containing `v`, as a reduced basis.
    pub fn submodule_generated(&self, v: &[F]) -> Result<Vec<Vec<F>>> {
        if self.space.parity_of(v).is_none() {
            return Err(Error::MixedParityInput);
        }
        let mut ech = Echelon::new(self.dim());
        let mut queue = Vec::new();
        if ech.insert(v) {
            queue.push(v.to_vec());
        }
        while let Some(w) = queue.pop() {
            for a in &self.action {
                let u = a.mul_vec(&w);
                if ech.insert(&u) {
                    queue.push(u);
                }
            }
        }
        Ok(ech.basis())
    }

    /// Superdimension of a graded subspace given by a spanning set.
    pub fn subspace_superdim(&self, basis: &[Vec<F>]) -> (usize, usize) {
        let e = self.space.even_dim();
        let rank_of = |range: std::ops::Range<usize>| {
            let mut ech = Echelon::new(range.len());
            for v in basis {
                ech.insert(&v[range.clone()]);
            }
            ech.rank()
        };
        (rank_of(0..e), rank_of(e..self.dim()))
    }

    /// Vectors killed by every positive even root vector, grouped by weight.
    /// Requires the Cartan elements to act diagonally in the given basis.
    pub fn even_highest_vectors(&self) -> Result<Vec<(WeightMN<F>, Vec<F>)>> {
        let n = self.dim();
        let cartan = self.algebra.cartan();
        for &h in &cartan {
            let a = &self.action[h];
            if (0..n).any(|i| (0..n).any(|j| i != j && !a[(i, j)].is_zero())) {
                return Err(Error::Invalid("Cartan elements do not act diagonally".into()));
            }
        }
        let mut groups: Vec<(Vec<F>, Vec<usize>)> = Vec::new();
        for i in 0..n {
            let w: Vec<F> = cartan.iter().map(|&h| self.action[h][(i, i)].clone()).collect();
            match groups.iter_mut().find(|g| g.0 == w) {
                Some(g) => g.1.push(i),
                None => groups.push((w, vec![i])),
            }
        }
        let raising = self.algebra.even_raising();
        let mut out = Vec::new();
        for (w, idx) in groups {
            let rows: Vec<Vec<F>> =
                raising.iter().flat_map(|&e| (0..n).map(move |r| (e, r))).map(|(e, r)| idx.iter().map(|&c| self.action[e][(r, c)].clone()).collect()).collect();
            let sys = if rows.is_empty() { Matrix::zeros(0, idx.len()) } else { Matrix::from_rows(rows) };
            let weight = self.algebra.weight_from_values(&w)?;
            for k in sys.kernel() {
                let mut v = vec![F::zero(); n];
                for (c, &i) in idx.iter().enumerate() {
                    v[i] = k[c].clone();
                }
                out.push((weight.clone(), v));
            }
        }
        Ok(out)
    }
}

/// Module induced from an even module `L` of the even subalgebra, extended by zero on
/// the upper-right odd block. `lmats[c]` is the action of the `c`-th even basis
/// element. Basis: `y_S (x) u` for ordered subsets `S` of the lower-left odd basis
/// elements, even `|S|` first, then by size and lexicographically, then by `u`.
pub fn induced_module<F: Scalar>(g: &Algebra, lmats: &[Matrix<F>], lower_labels: &[String]) -> Result<Representation<F>> {
    let even = g.even_part();
    if lmats.len() != even.len() {
        return Err(Error::Invalid("one matrix per even basis element expected".into()));
    }
    let dl = lower_labels.len();
    let lows = g.odd_lowering();
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    for size in 0..=lows.len() {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            subsets.push(combo.iter().map(|&c| lows[c]).collect());
            // next combination in lexicographic order
            let Some(p) = (0..size).rev().find(|&p| combo[p] < lows.len() - size + p) else { break };
            combo[p] += 1;
            for q in p + 1..size {
                combo[q] = combo[q - 1] + 1;
            }
        }
    }
    let mut basis: Vec<(Vec<usize>, usize)> = Vec::new();
    for parity in [0, 1] {
        for s in subsets.iter().filter(|s| s.len() % 2 == parity) {
            for u in 0..dl {
                basis.push((s.clone(), u));
            }
        }
    }
    let n_even = basis.iter().filter(|(s, _)| s.len() % 2 == 0).count();
    let index: HashMap<(Vec<usize>, usize), usize> = basis.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
    let ctx = Induction { g, lmats, even: &even };
    let n = basis.len();
    let action = (0..g.dim())
        .map(|x| {
            let mut m = Matrix::<F>::zeros(n, n);
            for (col, (s, u)) in basis.iter().enumerate() {
                for ((t, v), c) in ctx.act(x, s, *u) {
                    let r = index[&(t, v)];
                    m[(r, col)] = m[(r, col)].plus(&c);
                }
            }
            m
        })
        .collect();
    let labels: Vec<String> = basis
        .iter()
        .map(|(s, u)| {
            let ys: String = s.iter().map(|&y| g.basis()[y].label.clone()).collect();
            if ys.is_empty() {
                lower_labels[*u].clone()
            } else {
                format!("{ys}·{}", lower_labels[*u])
            }
        })
        .collect();
    let space = SuperSpace::new(labels[..n_even].to_vec(), labels[n_even..].to_vec());
    Representation::new(g.clone(), space, action)
}

struct Induction<'a, F> {
    g: &'a Algebra,
    lmats: &'a [Matrix<F>],
    even: &'a [usize],
}

type Terms<F> = Vec<((Vec<usize>, usize), F)>;

impl<F: Scalar> Induction<'_, F> {
    fn add(acc: &mut Terms<F>, key: (Vec<usize>, usize), c: F) {
        match acc.iter_mut().find(|(k, _)| *k == key) {
            Some((_, e)) => *e = e.plus(&c),
            None => acc.push((key, c)),
        }
    }

    /// `y . (y_T (x) u)` for a lower odd `y`.
    fn left_mul(y: usize, t: &[usize], u: usize, c: F, out: &mut Terms<F>) {
        if t.contains(&y) {
            return;
        }
        let before = t.iter().filter(|&&s| s < y).count();
        let mut t2 = t.to_vec();
        t2.insert(before, y);
        Self::add(out, (t2, u), signed(if before % 2 == 1 { -1 } else { 1 }, &c));
    }

    fn act(&self, x: usize, s: &[usize], u: usize) -> Terms<F> {
        let b = &self.g.basis()[x];
        let mut out = Vec::new();
        if b.grade == -1 {
            Self::left_mul(x, s, u, F::one(), &mut out);
        } else if s.is_empty() {
            if b.grade == 0 {
                let c = self.even.iter().position(|&e| e == x).expect("even element");
                let l = &self.lmats[c];
                for v in 0..l.rows() {
                    if !l[(v, u)].is_zero() {
                        Self::add(&mut out, (Vec::new(), v), l[(v, u)].clone());
                    }
                }
            }
        } else {
            // x (y_s w) = [x, y_s] w + (-1)^{|x|} y_s (x w)
            let (first, rest) = (s[0], &s[1..]);
            for (l, c) in self.g.bracket(x, first) {
                for (k, v) in self.act(*l, rest, u) {
                    Self::add(&mut out, k, v.times(&F::from_rational(c)));
                }
            }
            let sign = if b.odd { -1 } else { 1 };
            for ((t, v), c) in self.act(x, rest, u) {
                Self::left_mul(first, &t, v, signed(sign, &c), &mut out);
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        out
    }
}

fn direct_sum_tagged<F: Scalar>(parts: &[(&Representation<F>, &str)]) -> Result<Representation<F>> {
    let g = parts[0].0.algebra.clone();
    if parts.iter().any(|(r, _)| r.algebra != g) {
        return Err(Error::AlgebraMismatch);
    }
    // (summand, local index) in the new order: all even parts, then all odd parts.
    let mut order = Vec::new();
    for odd in [false, true] {
        for (p, (r, _)) in parts.iter().enumerate() {
            let range = if odd { r.space.odd_range() } else { r.space.even_range() };
            order.extend(range.map(|i| (p, i)));
        }
    }
    let even: usize = parts.iter().map(|(r, _)| r.space.even_dim()).sum();
    let n = order.len();
    let action = (0..g.dim())
        .map(|x| {
            Matrix::from_fn(n, n, |i, j| {
                let (pi, li) = order[i];
                let (pj, lj) = order[j];
                if pi == pj {
                    parts[pi].0.action[x][(li, lj)].clone()
                } else {
                    F::zero()
                }
            })
        })
        .collect();
    let labels: Vec<String> = order.iter().map(|&(p, i)| format!("{}{}", parts[p].0.space.label(i), parts[p].1)).collect();
    Ok(Representation { algebra: g, space: SuperSpace::new(labels[..even].to_vec(), labels[even..].to_vec()), action })
}

/// Basis of the even maps `phi: r1 -> r2` with `phi f1(x) = f2(x) phi` for all basis `x`.
pub fn intertwiners<F: Scalar>(r1: &Representation<F>, r2: &Representation<F>) -> Result<Vec<Matrix<F>>> {
    if r1.algebra != r2.algebra {
        return Err(Error::AlgebraMismatch);
    }
    let (n1, n2) = (r1.dim(), r2.dim());
    let mut unknown = vec![vec![None; n1]; n2];
    let mut count = 0;
    for (p, row) in unknown.iter_mut().enumerate() {
        for (q, slot) in row.iter_mut().enumerate() {
            if r2.space.is_odd(p) == r1.space.is_odd(q) {
                *slot = Some(count);
                count += 1;
            }
        }
    }
    let mut rows = Vec::new();
    for x in 0..r1.algebra.dim() {
        let (a, b) = (&r1.action[x], &r2.action[x]);
        for i in 0..n2 {
            for j in 0..n1 {
                let mut row = vec![F::zero(); count];
                let mut any = false;
                for q in 0..n1 {
                    if let (Some(u), false) = (unknown[i][q], a[(q, j)].is_zero()) {
                        row[u] = row[u].plus(&a[(q, j)]);
                        any = true;
                    }
                }
                for p in 0..n2 {
                    if let (Some(u), false) = (unknown[p][j], b[(i, p)].is_zero()) {
                        row[u] = row[u].minus(&b[(i, p)]);
                        any = true;
                    }
                }
                if any && row.iter().any(|c| !c.is_zero()) {
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
    Ok(kernel
        .into_iter()
        .map(|k| Matrix::from_fn(n2, n1, |p, q| unknown[p][q].map_or_else(F::zero, |u| k[u].clone())))
        .collect())
}

/// Whether some linear combination of the intertwiners is invertible.
pub fn has_invertible_intertwiner<F: Scalar>(r1: &Representation<F>, r2: &Representation<F>) -> Result<bool> {
    if r1.superdim() != r2.superdim() {
        return Ok(false);
    }
    let basis = intertwiners(r1, r2)?;
    if basis.is_empty() {
        return Ok(r1.dim() == 0);
    }
    let mut family = vec![Matrix::zeros(r2.dim(), r1.dim())];
    family.extend(basis);
    Ok(max_rank_over_affine_family(&family) == r1.dim())
}
