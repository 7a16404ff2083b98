//! Exact arithmetic in quadratic extensions of Q.
//!
//! Real curves of positive genus have almost no rational points, so points on
//! them are represented over Q(√r) or Q(√r₁,…,√r_m).

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::ring::{rational_sqrt, sign, Field, OrderedField, Ring, Q};

/// Element of Q[y₁,…,y_m]/(y_i² − r_i). Monomials are bitmasks over the y_i.
#[derive(Clone, Debug)]
pub struct MultiQuad {
    squares: Arc<Vec<Q>>,
    terms: BTreeMap<u32, Q>,
}

impl MultiQuad {
    pub fn scalar(squares: Arc<Vec<Q>>, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        MultiQuad { squares, terms }
    }

    /// The generator y_i with y_i² = squares[i].
    pub fn generator(squares: Arc<Vec<Q>>, i: usize) -> Self {
        assert!(i < squares.len() && i < 32);
        let mut terms = BTreeMap::new();
        terms.insert(1u32 << i, Q::one());
        MultiQuad { squares, terms }
    }

    pub fn squares(&self) -> &[Q] {
        &self.squares
    }

    /// Rational part if the element has no irrational component.
    pub fn as_rational(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    fn ctx(&self, o: &Self) -> Arc<Vec<Q>> {
        if self.squares.is_empty() {
            o.squares.clone()
        } else {
            debug_assert!(o.squares.is_empty() || *o.squares == *self.squares);
            self.squares.clone()
        }
    }
}

impl PartialEq for MultiQuad {
    fn eq(&self, o: &Self) -> bool {
        self.terms == o.terms
    }
}

impl Ring for MultiQuad {
    fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            let e = terms.entry(*m).or_insert_with(Q::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        MultiQuad { squares: self.ctx(o), terms }
    }

    fn mul(&self, o: &Self) -> Self {
        let squares = self.ctx(o);
        let mut terms: BTreeMap<u32, Q> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let mut c = c1 * c2;
                let mut common = m1 & m2;
                while common != 0 {
                    let i = common.trailing_zeros() as usize;
                    c *= &squares[i];
                    common &= common - 1;
                }
                let e = terms.entry(m1 ^ m2).or_insert_with(Q::zero);
                *e += c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiQuad { squares, terms }
    }

    fn neg(&self) -> Self {
        MultiQuad {
            squares: self.squares.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }

    fn embed(c: &Q, like: &Self) -> Self {
        MultiQuad::scalar(like.squares.clone(), c.clone())
    }
}

impl std::fmt::Display for MultiQuad {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let neg = sign(c) < 0;
            let a = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let radicals: Vec<String> = (0..32)
                .filter(|i| m & (1 << i) != 0)
                .map(|i| format!("sqrt({})", self.squares[i]))
                .collect();
            if radicals.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", radicals.join("*"))?;
            } else {
                write!(f, "{a}*{}", radicals.join("*"))?;
            }
        }
        Ok(())
    }
}

/// a + b·√r with r ≥ 0 and r not a rational square (otherwise b is folded into a).
#[derive(Clone, Debug)]
pub struct RealQuad {
    pub a: Q,
    pub b: Q,
    pub r: Q,
}

impl RealQuad {
    pub fn new(a: Q, b: Q, r: Q) -> Self {
        assert!(sign(&r) >= 0, "RealQuad needs r >= 0");
        match rational_sqrt(&r) {
            Some(s) => RealQuad { a: a + b * s, b: Q::zero(), r },
            None => RealQuad { a, b, r },
        }
    }

    pub fn rational(a: Q) -> Self {
        RealQuad { a, b: Q::zero(), r: Q::zero() }
    }

    /// √r itself.
    pub fn sqrt(r: Q) -> Self {
        RealQuad::new(Q::zero(), Q::one(), r)
    }

    fn radicand(&self, o: &Self) -> Q {
        if self.b.is_zero() {
            o.r.clone()
        } else {
            debug_assert!(o.b.is_zero() || o.r == self.r);
            self.r.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN)
            + self.b.to_f64().unwrap_or(f64::NAN) * self.r.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl PartialEq for RealQuad {
    fn eq(&self, o: &Self) -> bool {
        self.sub(o).vanishes()
    }
}

impl Ring for RealQuad {
    fn add(&self, o: &Self) -> Self {
        RealQuad { a: &self.a + &o.a, b: &self.b + &o.b, r: self.radicand(o) }
    }
    fn mul(&self, o: &Self) -> Self {
        let r = self.radicand(o);
        RealQuad {
            a: &self.a * &o.a + &self.b * &o.b * &r,
            b: &self.a * &o.b + &self.b * &o.a,
            r,
        }
    }
    fn neg(&self) -> Self {
        RealQuad { a: -&self.a, b: -&self.b, r: self.r.clone() }
    }
    fn vanishes(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn embed(c: &Q, like: &Self) -> Self {
        RealQuad { a: c.clone(), b: Q::zero(), r: like.r.clone() }
    }
}

impl Field for RealQuad {
    fn inv(&self) -> Self {
        let n = &self.a * &self.a - &self.b * &self.b * &self.r;
        assert!(!n.is_zero(), "division by zero in Q(√r)");
        RealQuad { a: &self.a / &n, b: -&self.b / &n, r: self.r.clone() }
    }
}

impl OrderedField for RealQuad {
    fn signum(&self) -> i8 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        if sa == 0 {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2r = &self.b * &self.b * &self.r;
        if a2 > b2r {
            sa
        } else {
            sb
        }
    }
}
