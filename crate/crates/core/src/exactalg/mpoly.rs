use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ring::{q, Ring, Q};
use super::upoly::UPoly;
use crate::error::{Error, Result};

pub type Exponent = Vec<u32>;

/// Sparse multivariate polynomial over Q. Keys are ordered lexicographically
/// (x0 > x1 > …), which doubles as the monomial order for exact division.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, Q>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        MPoly::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, Q::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::monomial(nvars, e, Q::one())
    }

    pub fn monomial(nvars: usize, e: Exponent, c: Q) -> Self {
        assert_eq!(e.len(), nvars, "exponent length must equal nvars");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MPoly { nvars, terms }
    }

    /// Sums repeated exponents and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, Q)>>(nvars: usize, it: I) -> Self {
        let mut p = MPoly::zero(nvars);
        for (e, c) in it {
            assert_eq!(e.len(), nvars, "exponent length must equal nvars");
            p.add_term(e, c);
        }
        p
    }

    /// Σ c_i x_i
    pub fn linear_form(c: &[Q]) -> Self {
        let n = c.len();
        MPoly::from_terms(
            n,
            c.iter().enumerate().map(|(i, a)| {
                let mut e = vec![0; n];
                e[i] = 1;
                (e, a.clone())
            }),
        )
    }

    fn add_term(&mut self, e: Exponent, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn leading_term(&self) -> Option<(&Exponent, &Q)> {
        self.terms.iter().next_back()
    }

    /// Maximum total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Degree if every term has the same total degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = MPoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        MPoly::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
                let mut e2 = e.clone();
                e2[i] -= 1;
                (e2, c * q(e[i] as i64))
            }),
        )
    }

    /// D_e f = Σ e_i ∂f/∂x_i
    pub fn directional_derivative(&self, e: &[Q]) -> Result<Self> {
        self.check_dim(e.len())?;
        let mut acc = MPoly::zero(self.nvars);
        for (i, ei) in e.iter().enumerate() {
            if !ei.is_zero() {
                acc = &acc + &self.derivative(i).scale(ei);
            }
        }
        Ok(acc)
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.nvars {
            return Err(Error::Dimension { expected: self.nvars, got: n });
        }
        Ok(())
    }

    fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0; self.nvars];
        for e in self.terms.keys() {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).max(*b);
            }
        }
        m
    }

    /// Evaluation in any commutative ring containing Q.
    pub fn eval_ring<R: Ring>(&self, x: &[R]) -> Result<R> {
        self.check_dim(x.len())?;
        let like = x.first().cloned().ok_or_else(|| {
            Error::Invalid("cannot evaluate a polynomial in zero variables".into())
        })?;
        let pows = powers(x, &self.max_exponents(), &like);
        let mut acc = R::zero_like(&like);
        for (e, c) in &self.terms {
            let mut t = R::embed(c, &like);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&pows[i][k as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &[Q]) -> Result<Q> {
        self.eval_ring(x)
    }

    /// t ↦ f(base + t·dir)
    pub fn substitute_affine(&self, base: &[Q], dir: &[Q]) -> Result<UPoly> {
        self.check_dim(base.len())?;
        self.check_dim(dir.len())?;
        let lines: Vec<UPoly> = base
            .iter()
            .zip(dir)
            .map(|(b, d)| UPoly::linear(d.clone(), b.clone()))
            .collect();
        let like = UPoly::one();
        let pows = powers(&lines, &self.max_exponents(), &like);
        let mut acc = UPoly::zero();
        for (e, c) in &self.terms {
            let mut t = UPoly::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &pows[i][k as usize];
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// t ↦ f(t·e − v)
    pub fn restrict_line(&self, e: &[Q], v: &[Q]) -> Result<UPoly> {
        self.check_dim(e.len())?;
        self.check_dim(v.len())?;
        let base: Vec<Q> = v.iter().map(|x| -x).collect();
        self.substitute_affine(&base, e)
    }

    /// Substitutes polynomials for the variables: f(g_0, …, g_{n−1}).
    pub fn compose(&self, g: &[MPoly]) -> Result<MPoly> {
        self.check_dim(g.len())?;
        let like = match g.first() {
            Some(p) => MPoly::one(p.nvars),
            None => return Ok(self.clone()),
        };
        let pows = powers(g, &self.max_exponents(), &like);
        let mut acc = MPoly::zero(like.nvars);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(like.nvars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &pows[i][k as usize];
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / den`, or `None` when `den` does not divide `self`.
    pub fn divide_exact(&self, den: &MPoly) -> Result<Option<MPoly>> {
        self.check_dim(den.nvars)?;
        let (de, dc) = match den.leading_term() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        if self.is_zero() {
            return Ok(Some(MPoly::zero(self.nvars)));
        }
        let max_qdeg = self.total_degree() as i64 - den.total_degree() as i64;
        if max_qdeg < 0 {
            return Ok(None);
        }
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        while let Some((e, c)) = rem.leading_term() {
            if !e.iter().zip(&de).all(|(a, b)| a >= b) {
                return Ok(None);
            }
            let qe: Exponent = e.iter().zip(&de).map(|(a, b)| a - b).collect();
            if qe.iter().sum::<u32>() as i64 > max_qdeg {
                return Ok(None);
            }
            let t = MPoly::monomial(self.nvars, qe, c / &dc);
            rem = &rem - &(&t * den);
            quot = &quot + &t;
        }
        Ok(Some(quot))
    }

    pub fn divides(&self, num: &MPoly) -> Result<bool> {
        Ok(num.divide_exact(self)?.is_some())
    }
}

fn powers<R: Ring>(x: &[R], maxe: &[u32], like: &R) -> Vec<Vec<R>> {
    x.iter()
        .zip(maxe)
        .map(|(xi, &m)| {
            let mut v = Vec::with_capacity(m as usize + 1);
            v.push(R::one_like(like));
            for k in 1..=m as usize {
                let nx = v[k - 1].mul(xi);
                v.push(nx);
            }
            v
        })
        .collect()
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        assert_eq!(self.nvars, o.nvars, "nvars mismatch");
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        assert_eq!(self.nvars, o.nvars, "nvars mismatch");
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), -c);
        }
        r
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        assert_eq!(self.nvars, o.nvars, "nvars mismatch");
        let mut r = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Q::one())
    }
}

impl Ring for MPoly {
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
        self.terms.is_empty()
    }
    fn embed(c: &Q, like: &Self) -> Self {
        MPoly::constant(like.nvars, c.clone())
    }
}
