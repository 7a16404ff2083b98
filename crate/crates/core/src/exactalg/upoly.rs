use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ring::{q, Ring, Q};

/// Dense univariate polynomial over Q, coefficients by ascending degree.
/// Trailing zeros are never stored, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UPoly {
    c: Vec<Q>,
}

impl UPoly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        UPoly::new(c.iter().map(|&x| q(x)).collect())
    }

    pub fn zero() -> Self {
        UPoly { c: vec![] }
    }

    pub fn one() -> Self {
        UPoly::constant(Q::one())
    }

    pub fn constant(a: Q) -> Self {
        UPoly::new(vec![a])
    }

    /// The polynomial t.
    pub fn t() -> Self {
        UPoly::new(vec![Q::zero(), Q::one()])
    }

    /// a·t + b
    pub fn linear(a: Q, b: Q) -> Self {
        UPoly::new(vec![b, a])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Q]) -> Self {
        roots
            .iter()
            .fold(UPoly::one(), |acc, r| &acc * &UPoly::linear(Q::one(), -r))
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.c.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with deg(0) = 0, for places where the zero case is excluded earlier.
    pub fn degree(&self) -> usize {
        self.deg().unwrap_or(0)
    }

    pub fn lc(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_ring<R: Ring>(&self, x: &R) -> R {
        let mut acc = R::zero_like(x);
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(&R::embed(a, x));
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for a in self.c.iter().rev() {
            acc = acc * x + a.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn scale(&self, s: &Q) -> Self {
        UPoly::new(self.c.iter().map(|a| a * s).collect())
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * q(i as i64))
                .collect(),
        )
    }

    /// Index of the lowest nonzero coefficient: the order of vanishing at t = 0.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.c.iter().position(|a| !a.is_zero())
    }

    /// Drops the factor t^k (the caller guarantees divisibility).
    pub fn shift_down(&self, k: usize) -> Self {
        UPoly::new(self.c.iter().skip(k).cloned().collect())
    }

    /// p(−t)
    pub fn reflect(&self) -> Self {
        UPoly::new(
            self.c
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() })
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree();
        let lc = d.lc();
        let mut r = self.c.clone();
        if r.len() < d.c.len() {
            return (UPoly::zero(), self.clone());
        }
        let mut qt = vec![Q::zero(); r.len() - dd];
        for i in (0..qt.len()).rev() {
            let coef = &r[i + dd] / &lc;
            if !coef.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[i + j] -= &coef * b;
                }
            }
            qt[i] = coef;
        }
        r.truncate(dd);
        (UPoly::new(qt), UPoly::new(r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn exact_div(&self, d: &UPoly) -> UPoly {
        let (qt, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        qt
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    /// Positive rational multiple with coprime integer coefficients.
    /// Sign is preserved, so Sturm sign patterns are unaffected.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for a in &self.c {
            den = den.lcm(a.denom());
        }
        let mut g = BigInt::zero();
        for a in &self.c {
            let n = a.numer() * (&den / a.denom());
            g = g.gcd(&n);
        }
        let s = Q::new(den, g.abs());
        self.scale(&s)
    }

    /// Integer coefficients of `primitive()`.
    pub fn primitive_ints(&self) -> Vec<BigInt> {
        self.primitive().c.iter().map(|a| a.numer().clone()).collect()
    }

    /// Monic gcd; gcd(0,0) = 0. Remainders are kept primitive to curb coefficient growth.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let mut a = self.primitive();
        let mut b = o.primitive();
        while !b.is_zero() {
            let r = a.rem(&b).primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn squarefree_part(&self) -> UPoly {
        assert!(!self.is_zero());
        if self.degree() == 0 {
            return UPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// Yun's square-free decomposition: monic pairwise coprime square-free
    /// factors f_i with self = lc · Π f_i^{m_i}. Constant factors are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, usize)> {
        assert!(!self.is_zero());
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree() == 0 {
            return out;
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0);
        let c = df.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            let nb = b.exact_div(&a);
            let nc = d.exact_div(&a);
            d = &nc - &nb.derivative();
            if a.degree() > 0 {
                out.push((a.monic(), i));
            }
            b = nb;
            i += 1;
        }
        out
    }

    /// 1 + max |a_i / a_n|: every root has absolute value below this.
    pub fn cauchy_bound(&self) -> Q {
        let lc = self.lc().abs();
        let mut m = Q::zero();
        for a in &self.c[..self.c.len().saturating_sub(1)] {
            let r = a.abs() / &lc;
            if r > m {
                m = r;
            }
        }
        m + Q::one()
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::new(c)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.c.iter().map(|a| -a).collect())
    }
}

impl Ring for UPoly {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn vanishes(&self) -> bool {
        self.c.is_empty()
    }
    fn embed(c: &Q, _like: &Self) -> Self {
        UPoly::constant(c.clone())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let abs = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "t")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}
