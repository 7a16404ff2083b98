use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Commutative ring with unit. `embed` lifts a rational into the ring of `like`,
/// which lets context-carrying rings (extension fields) share one trait.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn embed(c: &Q, like: &Self) -> Self;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn zero_like(like: &Self) -> Self {
        Self::embed(&Q::zero(), like)
    }
    fn one_like(like: &Self) -> Self {
        Self::embed(&Q::one(), like)
    }
    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one_like(self);
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }
}

pub trait Field: Ring {
    /// Panics on zero.
    fn inv(&self) -> Self;
    fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }
}

pub trait OrderedField: Field {
    fn signum(&self) -> i8;
}

impl Ring for Q {
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
        Zero::is_zero(self)
    }
    fn embed(c: &Q, _like: &Self) -> Self {
        c.clone()
    }
}

impl Field for Q {
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl OrderedField for Q {
    fn signum(&self) -> i8 {
        sign(self)
    }
}

pub fn sign(x: &Q) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Exact rational square root, if there is one.
pub fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}
