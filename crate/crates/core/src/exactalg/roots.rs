//! Sturm sequences, real root counting with multiplicity, and isolation.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ring::{sign, Q};
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// A point of the extended real line with rational finite part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ext {
    NegInf,
    Fin(Q),
    PosInf,
}

impl Ext {
    fn rank(&self) -> (i8, Option<&Q>) {
        match self {
            Ext::NegInf => (-1, None),
            Ext::Fin(x) => (0, Some(x)),
            Ext::PosInf => (1, None),
        }
    }

    pub fn lt(&self, o: &Ext) -> bool {
        match (self.rank(), o.rank()) {
            ((0, Some(a)), (0, Some(b))) => a < b,
            ((a, _), (b, _)) => a < b,
        }
    }
}

impl From<Q> for Ext {
    fn from(x: Q) -> Self {
        Ext::Fin(x)
    }
}

fn sign_at(p: &UPoly, x: &Ext) -> i8 {
    match x {
        Ext::Fin(x) => sign(&p.eval(x)),
        Ext::PosInf => sign(&p.lc()),
        Ext::NegInf => {
            let s = sign(&p.lc());
            if p.degree() % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

/// Sturm chain of a square-free polynomial; every member is kept primitive
/// (positive rescaling), which leaves sign sequences intact.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<UPoly>,
}

impl SturmChain {
    pub fn new(p: &UPoly) -> Self {
        assert!(!p.is_zero(), "Sturm chain of zero polynomial");
        let mut chain = vec![p.primitive()];
        let d = p.derivative().primitive();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let n = chain.len();
                let r = (-&chain[n - 2].rem(&chain[n - 1])).primitive();
                if r.is_zero() {
                    break;
                }
                chain.push(r);
            }
        }
        SturmChain { chain }
    }

    pub fn poly(&self) -> &UPoly {
        &self.chain[0]
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn variations(&self, x: &Ext) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for p in &self.chain {
            let s = sign_at(p, x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Distinct roots in (lo, hi].
    pub fn count(&self, lo: &Ext, hi: &Ext) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    pub fn count_q(&self, lo: &Q, hi: &Q) -> usize {
        self.count(&Ext::Fin(lo.clone()), &Ext::Fin(hi.clone()))
    }
}

/// Number of real roots of `p` in (lo, hi], counted with multiplicity.
pub fn real_root_count(p: &UPoly, lo: &Ext, hi: &Ext) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !lo.lt(hi) {
        return Err(Error::EmptyInterval);
    }
    Ok(p.squarefree_decomposition()
        .iter()
        .map(|(f, m)| m * SturmChain::new(f).count(lo, hi))
        .sum())
}

/// All real roots of `p` counted with multiplicity.
pub fn total_real_roots(p: &UPoly) -> Result<usize> {
    real_root_count(p, &Ext::NegInf, &Ext::PosInf)
}

/// A half-open interval (lo, hi] holding exactly one distinct real root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInterval {
    #[serde(with = "crate::io::qser")]
    pub lo: Q,
    #[serde(with = "crate::io::qser")]
    pub hi: Q,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolationList {
    pub intervals: Vec<RootInterval>,
    #[serde(with = "crate::io::qmult_ser")]
    pub exact_roots: Vec<(Q, usize)>,
}

/// Real roots of a polynomial, isolated by Sturm bisection from the Cauchy bound.
/// Keeps the chains around so intervals can be refined and signs of other
/// polynomials at the roots decided exactly.
#[derive(Clone, Debug)]
pub struct RealRoots {
    sqf: SturmChain,
    factors: Vec<(SturmChain, usize)>,
    roots: Vec<RootInterval>,
}

impl RealRoots {
    pub fn new(p: &UPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sqf = SturmChain::new(&p.squarefree_part());
        let factors: Vec<(SturmChain, usize)> = p
            .squarefree_decomposition()
            .into_iter()
            .map(|(f, m)| (SturmChain::new(&f), m))
            .collect();
        let mut rr = RealRoots { sqf, factors, roots: Vec::new() };
        if p.degree() == 0 {
            return Ok(rr);
        }
        let b = rr.sqf.poly().cauchy_bound();
        let lo = -b.clone();
        let n = rr.sqf.count_q(&lo, &b);
        let mut stack = vec![(lo, b, n)];
        let mut found = Vec::new();
        while let Some((lo, hi, n)) = stack.pop() {
            if n == 0 {
                continue;
            }
            if n == 1 {
                found.push((lo, hi));
                continue;
            }
            let mid = (&lo + &hi) / Q::from_integer(2.into());
            let left = rr.sqf.count_q(&lo, &mid);
            // push right first so that the left half is processed first
            stack.push((mid.clone(), hi, n - left));
            stack.push((lo, mid, left));
        }
        for (lo, hi) in found {
            let multiplicity = rr.multiplicity_in(&lo, &hi);
            rr.roots.push(RootInterval { lo, hi, multiplicity });
        }
        Ok(rr)
    }

    fn multiplicity_in(&self, lo: &Q, hi: &Q) -> usize {
        self.factors
            .iter()
            .find(|(c, _)| c.count_q(lo, hi) > 0)
            .map(|(_, m)| *m)
            .expect("isolated root belongs to a square-free factor")
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn intervals(&self) -> &[RootInterval] {
        &self.roots
    }

    pub fn square_free(&self) -> &UPoly {
        self.sqf.poly()
    }

    /// Total count with multiplicity.
    pub fn count_with_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn bisect(&mut self, i: usize) {
        let r = &mut self.roots[i];
        let mid = (&r.lo + &r.hi) / Q::from_integer(2.into());
        if self.sqf.count_q(&r.lo, &mid) == 1 {
            r.hi = mid;
        } else {
            r.lo = mid;
        }
    }

    pub fn refine(&mut self, i: usize, width: &Q) {
        while &self.roots[i].width() > width {
            self.bisect(i);
        }
    }

    pub fn refine_all(&mut self, width: &Q) {
        for i in 0..self.roots.len() {
            self.refine(i, width);
        }
    }

    /// The root as a rational, if it is one. Candidates p/q need q | lc of the
    /// primitive square-free part, so once the interval is narrower than 1/lc
    /// at most one candidate remains.
    pub fn exact_root(&mut self, i: usize) -> Option<Q> {
        let ints = self.sqf.poly().primitive_ints();
        let lc = Q::from_integer(ints.last().expect("nonconstant").abs());
        let w = lc.recip();
        while self.roots[i].width() >= w {
            self.bisect(i);
        }
        let r = &self.roots[i];
        let m = (&r.hi * &lc).floor();
        let c = m / &lc;
        if c > r.lo && self.sqf.poly().eval(&c).is_zero() {
            Some(c)
        } else {
            None
        }
    }

    /// Sign of `q` at the i-th root, decided exactly.
    pub fn sign_at_root(&mut self, i: usize, q: &UPoly) -> i8 {
        if q.is_zero() {
            return 0;
        }
        let g = self.sqf.poly().gcd(q);
        if g.degree() > 0 {
            let r = &self.roots[i];
            if SturmChain::new(&g).count_q(&r.lo, &r.hi) > 0 {
                return 0;
            }
        }
        let qc = SturmChain::new(&q.squarefree_part());
        loop {
            let r = &self.roots[i];
            if qc.count_q(&r.lo, &r.hi) == 0 {
                return sign(&q.eval(&r.hi));
            }
            self.bisect(i);
        }
    }

    /// Rational points strictly between consecutive roots, plus one below the
    /// first and one above the last: `len() + 1` points, one per open gap.
    pub fn gap_points(&mut self) -> Vec<Q> {
        let n = self.roots.len();
        if n == 0 {
            return vec![Q::zero()];
        }
        let mut pts = vec![&self.roots[0].lo - Q::one()];
        for i in 0..n - 1 {
            let h = self.roots[i].hi.clone();
            if !self.sqf.poly().eval(&h).is_zero() {
                pts.push(h);
                continue;
            }
            while self.roots[i + 1].lo <= h {
                self.bisect(i + 1);
            }
            pts.push((&h + &self.roots[i + 1].lo) / Q::from_integer(2.into()));
        }
        pts.push(&self.roots[n - 1].hi + Q::one());
        pts
    }

    pub fn isolation_list(&mut self) -> IsolationList {
        let mut exact_roots = Vec::new();
        for i in 0..self.roots.len() {
            if let Some(r) = self.exact_root(i) {
                exact_roots.push((r, self.roots[i].multiplicity));
            }
        }
        IsolationList { intervals: self.roots.clone(), exact_roots }
    }
}

pub fn isolate(p: &UPoly) -> Result<IsolationList> {
    Ok(RealRoots::new(p)?.isolation_list())
}

/// Isolation refined until every interval has width at most `width`.
pub fn isolate_to_width(p: &UPoly, width: &Q) -> Result<IsolationList> {
    let mut rr = RealRoots::new(p)?;
    rr.refine_all(width);
    Ok(rr.isolation_list())
}

/// Distinct real roots of several polynomials merged into one ordered list,
/// each carrying its multiplicity in every input.
#[derive(Clone, Debug)]
pub struct MergedRoot {
    pub interval: RootInterval,
    pub multiplicities: Vec<usize>,
}

pub fn merged_roots(polys: &[&UPoly]) -> Result<Vec<MergedRoot>> {
    let mut w = UPoly::one();
    let mut decs = Vec::new();
    for p in polys {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let s = p.squarefree_part();
        let g = w.gcd(&s);
        w = &w * &s.exact_div(&g);
        decs.push(
            p.squarefree_decomposition()
                .into_iter()
                .map(|(f, m)| (SturmChain::new(&f), m))
                .collect::<Vec<_>>(),
        );
    }
    let rr = RealRoots::new(&w)?;
    Ok(rr
        .roots
        .iter()
        .map(|iv| MergedRoot {
            interval: iv.clone(),
            multiplicities: decs
                .iter()
                .map(|dec| {
                    dec.iter()
                        .filter(|(c, _)| c.count_q(&iv.lo, &iv.hi) > 0)
                        .map(|(_, m)| *m)
                        .sum()
                })
                .collect(),
        })
        .collect())
}

/// Pairwise coprime square-free monic polynomials with the same roots as the
/// nonconstant inputs (gcd-based factor refinement).
pub fn coprime_basis(polys: &[&UPoly]) -> Vec<UPoly> {
    let mut basis: Vec<UPoly> = Vec::new();
    for p in polys {
        if p.is_zero() || p.degree() == 0 {
            continue;
        }
        let mut s = p.squarefree_part();
        let mut next = Vec::with_capacity(basis.len() + 1);
        for b in basis {
            let g = b.gcd(&s);
            if g.degree() == 0 {
                next.push(b);
                continue;
            }
            let rest = b.exact_div(&g).monic();
            if rest.degree() > 0 {
                next.push(rest);
            }
            s = s.exact_div(&g).monic();
            next.push(g);
        }
        if s.degree() > 0 {
            next.push(s);
        }
        basis = next;
    }
    basis
}

/// All real roots of a family of polynomials in increasing order. Each root
/// belongs to one coprime basis factor and the isolating intervals of
/// different roots are disjoint, so the sign of any input (or product of
/// inputs) at a root is its sign at the interval's right end unless the
/// root's factor divides it.
#[derive(Clone, Debug)]
pub struct SortedRoots {
    factors: Vec<RealRoots>,
    /// (factor, root index within factor), ascending
    order: Vec<(usize, usize)>,
}

fn overlap(a: &RootInterval, b: &RootInterval) -> bool {
    a.lo < b.hi && b.lo < a.hi
}

impl SortedRoots {
    pub fn new(polys: &[&UPoly]) -> Result<Self> {
        let factors = coprime_basis(polys).iter().map(RealRoots::new).collect::<Result<Vec<_>>>()?;
        let mut sr = SortedRoots { factors, order: Vec::new() };
        let mut all: Vec<(usize, usize)> =
            sr.factors.iter().enumerate().flat_map(|(f, rr)| (0..rr.len()).map(move |i| (f, i))).collect();
        // different factors have different roots: bisect until disjoint
        loop {
            let mut clash = None;
            'scan: for x in 0..all.len() {
                for y in x + 1..all.len() {
                    let (a, b) = (all[x], all[y]);
                    if a.0 != b.0 && overlap(&sr.factors[a.0].roots[a.1], &sr.factors[b.0].roots[b.1]) {
                        clash = Some((a, b));
                        break 'scan;
                    }
                }
            }
            let Some((a, b)) = clash else { break };
            sr.factors[a.0].bisect(a.1);
            sr.factors[b.0].bisect(b.1);
        }
        all.sort_by(|a, b| sr.factors[a.0].roots[a.1].lo.cmp(&sr.factors[b.0].roots[b.1].lo));
        sr.order = all;
        Ok(sr)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn interval(&self, k: usize) -> &RootInterval {
        let (f, i) = self.order[k];
        &self.factors[f].roots[i]
    }

    /// The basis factor vanishing at the k-th root.
    pub fn factor(&self, k: usize) -> &UPoly {
        self.factors[self.order[k].0].square_free()
    }

    /// Sign at the k-th root of `p`, whose roots must all be roots of the family.
    pub fn sign_at(&self, k: usize, p: &UPoly) -> i8 {
        if p.is_zero() || p.rem(self.factor(k)).is_zero() {
            return 0;
        }
        sign(&p.eval(&self.interval(k).hi))
    }

    pub fn exact_root(&mut self, k: usize) -> Option<Q> {
        let (f, i) = self.order[k];
        self.factors[f].exact_root(i)
    }

    /// `len() + 1` rational points, one in each open gap between roots.
    pub fn gap_points(&mut self) -> Vec<Q> {
        let n = self.order.len();
        if n == 0 {
            return vec![Q::zero()];
        }
        let mut pts = vec![&self.interval(0).lo - Q::one()];
        for k in 0..n - 1 {
            let h = self.interval(k).hi.clone();
            if !self.factor(k).eval(&h).is_zero() {
                pts.push(h);
                continue;
            }
            let (f, i) = self.order[k + 1];
            while self.factors[f].roots[i].lo <= h {
                self.factors[f].bisect(i);
            }
            pts.push((&h + &self.factors[f].roots[i].lo) / Q::from_integer(2.into()));
        }
        pts.push(&self.interval(n - 1).hi + Q::one());
        pts
    }
}
