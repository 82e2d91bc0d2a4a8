use super::{Rational, Scalar};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// An interned parameter name. Ordered by name with trailing digits compared
/// numerically, so `k < k1 < k2 < k10 < t1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Var(&'static str);

impl Var {
    pub fn new(name: &str) -> Var {
        static POOL: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();
        let mut pool = POOL.get_or_init(Default::default).lock().unwrap();
        if let Some(s) = pool.get(name) {
            return Var(s);
        }
        let s: &'static str = Box::leak(name.to_string().into_boxed_str());
        pool.insert(s);
        Var(s)
    }
    pub fn name(&self) -> &'static str {
        self.0
    }
    fn split(&self) -> (&str, Option<u64>) {
        let cut = self.0.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        let (head, digits) = self.0.split_at(cut);
        (head, digits.parse().ok())
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        let (ha, na) = self.split();
        let (hb, nb) = other.split();
        ha.cmp(hb).then(na.cmp(&nb)).then(self.0.cmp(other.0))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

/// Power product, variables ascending, exponents positive.
/// `Ord` is graded lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }
    pub fn var(v: Var, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }
    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }
    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }
    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + o.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < o.0.len() {
            match (self.0.get(i), o.0.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) => match a.cmp(&b) {
                    Ordering::Less => {
                        out.push((a, ea));
                        i += 1;
                    }
                    Ordering::Greater => {
                        out.push((b, eb));
                        j += 1;
                    }
                    Ordering::Equal => {
                        out.push((a, ea + eb));
                        i += 1;
                        j += 1;
                    }
                },
                (Some(&t), None) => {
                    out.push(t);
                    i += 1;
                }
                (None, Some(&t)) => {
                    out.push(t);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    /// `self / o` if `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            let mut d = e;
            if let Some(&(w, f)) = o.0.get(j) {
                if w < v {
                    return None;
                }
                if w == v {
                    if f > e {
                        return None;
                    }
                    d = e - f;
                    j += 1;
                }
            }
            if d > 0 {
                out.push((v, d));
            }
        }
        if j < o.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Drop variable `v`, returning its exponent.
    fn split_off(&self, v: Var) -> (u32, Monomial) {
        let e = self.exponent(v);
        (e, Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect()))
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.0.get(i), o.0.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(a, ea)), Some(&(b, eb))) => match a.cmp(&b) {
                        // `a` is absent from `o`, so `self` has the larger exponent there.
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, &(v, e)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            f.write_str(v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial over Q, terms in strictly decreasing grlex order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }
    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }
    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(Monomial::one(), c)] }
        }
    }
    pub fn var(v: Var) -> Self {
        Poly { terms: vec![(Monomial::var(v, 1), Rational::one())] }
    }
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert_with(Rational::zero);
            *e = e.plus(&c);
        }
        Poly { terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }
    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }
    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }
    pub fn leading_coeff(&self) -> Rational {
        self.terms.first().map_or_else(Rational::zero, |t| t.1.clone())
    }
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }
    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.iter().flat_map(|t| t.0.factors().iter().map(|&(v, _)| v)).collect()
    }
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|t| t.0.exponent(v)).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.merge(o, false)
    }
    pub fn sub(&self, o: &Poly) -> Poly {
        self.merge(o, true)
    }
    fn merge(&self, o: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let oc = |c: &Rational| if negate { c.negated() } else { c.clone() };
        while i < self.terms.len() && j < o.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &o.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), oc(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { ca.minus(cb) } else { ca.plus(cb) };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(o.terms[j..].iter().map(|(m, c)| (m.clone(), oc(c))));
        Poly { terms: out }
    }
    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negated())).collect() }
    }
    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a.times(c))).collect() }
    }
    /// The positive rational multiple with coprime integer coefficients.
    fn integer_primitive(&self) -> Poly {
        use num_integer::Integer;
        let mut l = num_bigint::BigInt::from(1);
        let mut g = num_bigint::BigInt::from(0);
        for (_, c) in &self.terms {
            l = l.lcm(c.denom());
            g = g.gcd(c.numer());
        }
        if g == num_bigint::BigInt::from(0) {
            return self.clone();
        }
        let f = Rational::from_big(l, g).expect("nonzero content");
        self.scale(&f)
    }
    fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        // Multiplying by a monomial preserves the grlex order.
        Poly { terms: self.terms.iter().map(|(a, x)| (a.mul(m), x.times(c))).collect() }
    }
    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        let (small, big) = if self.terms.len() <= o.terms.len() { (self, o) } else { (o, self) };
        let mut acc = Poly::zero();
        for (m, c) in &small.terms {
            acc = acc.add(&big.mul_term(m, c));
        }
        acc
    }
    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (lm, lc) = d.leading()?;
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.inverse().ok()?));
        }
        let mut r = self.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = r.leading().cloned() {
            let t = m.div(lm)?;
            let tc = c.over(lc).ok()?;
            r = r.sub(&d.mul_term(&t, &tc));
            q.push((t, tc));
        }
        Some(Poly { terms: q })
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inverse().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, bind: &dyn Fn(Var) -> Option<Rational>) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.factors() {
                match bind(v) {
                    Some(x) => coeff = coeff.times(&x.pow(e)),
                    None => rest.push((v, e)),
                }
            }
            out.push((Monomial(rest), coeff));
        }
        Poly::from_terms(out)
    }

    /// Coefficients as a polynomial in `v`, indexed by degree.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let mut parts: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            parts[e as usize].push((rest, c.clone()));
        }
        parts.into_iter().map(Poly::from_terms).collect()
    }
    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut acc = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&c.mul_term(&Monomial::var(v, e as u32), &Rational::one()));
            }
        }
        acc
    }
}

/// Monic greatest common divisor (zero only if both inputs are zero).
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    if a == b {
        return a.monic();
    }
    if b.div_exact(a).is_some() {
        return a.monic();
    }
    if a.div_exact(b).is_some() {
        return b.monic();
    }
    let va = a.vars();
    let vb = b.vars();
    let Some(&v) = va.intersection(&vb).next() else {
        return Poly::one();
    };
    let (ca, pa) = split_content(a, v);
    let (cb, pb) = split_content(b, v);
    let c = gcd(&ca, &cb);
    let g = primitive_prs(pa, pb, v);
    c.mul(&g).monic()
}

/// Content with respect to `v` and the primitive part.
fn split_content(p: &Poly, v: Var) -> (Poly, Poly) {
    let mut c = Poly::zero();
    for co in p.coeffs_in(v) {
        if !co.is_zero() {
            c = gcd(&c, &co);
            if c.is_one() {
                break;
            }
        }
    }
    let pp = p.div_exact(&c).expect("content divides");
    (c, pp)
}

fn primitive_part(p: &Poly, v: Var) -> Poly {
    split_content(p, v).1
}

fn pseudo_rem(a: &Poly, b: &Poly, v: Var) -> Poly {
    let db = b.degree_in(v);
    let bc = b.coeffs_in(v);
    let lb = bc[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.coeffs_in(v)[dr as usize].clone();
        let shift = Poly::from_coeffs_in(v, &{
            let mut t = vec![Poly::zero(); (dr - db) as usize + 1];
            t[(dr - db) as usize] = lr;
            t
        });
        r = r.mul(&lb).sub(&b.mul(&shift));
    }
    r
}

fn primitive_prs(a: Poly, b: Poly, v: Var) -> Poly {
    let (a, b) = (a.integer_primitive(), b.integer_primitive());
    let (mut p, mut q) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    loop {
        if q.is_zero() {
            return p.monic();
        }
        if q.degree_in(v) == 0 {
            return Poly::one();
        }
        let r = pseudo_rem(&p, &q, v);
        p = q;
        // keep coefficient size bounded
        q = if r.is_zero() { r } else { primitive_part(&r, v).integer_primitive() };
    }
}

fn write_coeff_term(f: &mut fmt::Formatter<'_>, m: &Monomial, c: &Rational, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    if neg {
        f.write_str("-")?;
    } else if !first {
        f.write_str("+")?;
    }
    if m.is_one() {
        write!(f, "{a}")
    } else if a.is_one() {
        write!(f, "{m}")
    } else {
        write!(f, "{a}*{m}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            write_coeff_term(f, m, c, n == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
