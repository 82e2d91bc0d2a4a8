use super::poly::gcd;
use super::{Poly, Rational, Scalar, Var};
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of Q(k1, ..., kr): coprime numerator and monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn constant(c: Rational) -> Self {
        RatFun { num: Poly::constant(c), den: Poly::one() }
    }
    pub fn var(name: &str) -> Self {
        RatFun { num: Poly::var(Var::new(name)), den: Poly::one() }
    }
    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::one() }
    }
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }
    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFun { num, den: Poly::one() };
        }
        let (num, den) = if den.as_constant().is_some() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFun { num, den }
        } else {
            let inv = lc.inverse().expect("nonzero denominator");
            RatFun { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }
    pub fn denominator(&self) -> &Poly {
        &self.den
    }
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }
    pub fn vars(&self) -> BTreeSet<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    /// Substitute rational values for some parameters.
    pub fn substitute(&self, bindings: &[(Var, Rational)]) -> Result<RatFun> {
        let bind = |v: Var| bindings.iter().find(|(w, _)| *w == v).map(|(_, r)| r.clone());
        let den = self.den.eval(&bind);
        if den.is_zero() {
            let at: Vec<String> = bindings.iter().map(|(v, r)| format!("{}={}", v.name(), r)).collect();
            return Err(Error::DenominatorVanishes(format!("{} at {}", self.den, at.join(","))));
        }
        Ok(Self::reduce(self.num.eval(&bind), den))
    }

    /// Substitute for every parameter, yielding a rational.
    pub fn evaluate(&self, bindings: &[(Var, Rational)]) -> Result<Rational> {
        let r = self.substitute(bindings)?;
        r.as_constant().ok_or_else(|| Error::Invalid(format!("unbound parameters remain in {r}")))
    }
}

impl Scalar for RatFun {
    fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }
    fn one() -> Self {
        RatFun { num: Poly::one(), den: Poly::one() }
    }
    fn from_rational(r: &Rational) -> Self {
        RatFun::constant(r.clone())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn plus(&self, o: &Self) -> Self {
        if self.den == o.den {
            let num = self.num.add(&o.num);
            return if self.den.is_one() { RatFun::from_poly(num) } else { Self::reduce(num, self.den.clone()) };
        }
        let g = gcd(&self.den, &o.den);
        let a = self.den.div_exact(&g).unwrap();
        let b = o.den.div_exact(&g).unwrap();
        Self::reduce(self.num.mul(&b).add(&o.num.mul(&a)), a.mul(&o.den))
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }
    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFun::from_poly(self.num.mul(&o.num));
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = o.den.div_exact(&g1).unwrap();
        let n2 = o.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        Self::reduce(n1.mul(&n2), d1.mul(&d2))
    }
    fn negated(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }
    fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }
    fn to_ratfun(&self) -> RatFun {
        self.clone()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.terms().len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        let bare = matches!(self.den.terms(), [(m, _)] if m.factors().len() == 1);
        if bare {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for RatFun {
    fn from(n: i64) -> Self {
        RatFun::constant(Rational::from(n))
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, o: RatFun) -> RatFun {
        self.plus(&o)
    }
}
impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, o: RatFun) -> RatFun {
        self.minus(&o)
    }
}
impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, o: RatFun) -> RatFun {
        self.times(&o)
    }
}
impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        self.negated()
    }
}
