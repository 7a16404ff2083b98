//! Vastly real linear systems on M-curves from alternating points on S₀.
//!
//! Two sets Z₀, Z₁ of n = d−k−g points alternate along S₀. The sections
//! vanishing on Zᵢ form a (k+1)-dimensional space Vᵢ and V₀ + V₁ is the
//! system. A second pair of alternating sets of d−g points each cuts out
//! single sections a₀, a₁; their pencil is real fibered.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::{eval_point, CurveEmbedding, CurveModel, CurveParam};
use crate::error::{Error, Result};
use crate::exactalg::linalg::nullspace;
use crate::exactalg::ring::{q, qf};
use crate::exactalg::Q;
use crate::io::{qmat_ser, qvec_ser};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderEntry {
    pub set: u8,
    pub index: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VastlyRealSystem {
    pub base_curve: CurveEmbedding,
    pub k: usize,
    pub n: usize,
    pub points_p0: Vec<CurveParam>,
    pub points_p1: Vec<CurveParam>,
    /// Cyclic order of all 2n points along S₀.
    pub alternation_order: Vec<OrderEntry>,
    #[serde(with = "qmat_ser")]
    pub v0: Vec<Vec<Q>>,
    #[serde(with = "qmat_ser")]
    pub v1: Vec<Vec<Q>>,
    pub pencil_p0: Vec<CurveParam>,
    pub pencil_p1: Vec<CurveParam>,
    pub pencil_order: Vec<OrderEntry>,
    #[serde(with = "qvec_ser")]
    pub a0: Vec<Q>,
    #[serde(with = "qvec_ser")]
    pub a1: Vec<Q>,
}

impl VastlyRealSystem {
    /// μ·a₁ − λ·a₀
    pub fn pencil_member(&self, lambda: &Q, mu: &Q) -> Vec<Q> {
        self.a1.iter().zip(&self.a0).map(|(x, y)| mu * x - lambda * y).collect()
    }

    /// Σ cᵢ·(basis of V₀ followed by basis of V₁)
    pub fn system_member(&self, coeffs: &[Q]) -> Result<Vec<Q>> {
        let basis: Vec<&Vec<Q>> = self.v0.iter().chain(&self.v1).collect();
        if coeffs.len() != basis.len() {
            return Err(Error::Dimension { expected: basis.len(), got: coeffs.len() });
        }
        let mut out = vec![Q::zero(); self.base_curve.nvars()];
        for (c, b) in coeffs.iter().zip(basis) {
            for (o, x) in out.iter_mut().zip(b) {
                *o += c * x;
            }
        }
        Ok(out)
    }

    pub fn system_dim(&self) -> usize {
        self.v0.len() + self.v1.len()
    }

    pub fn alternates(&self) -> bool {
        is_alternating(&self.alternation_order, self.n) && is_alternating(&self.pencil_order, self.pencil_p0.len())
    }
}

fn is_alternating(order: &[OrderEntry], n: usize) -> bool {
    let len = order.len();
    if len != 2 * n || len == 0 {
        return false;
    }
    let mut seen = [vec![false; n], vec![false; n]];
    for (i, e) in order.iter().enumerate() {
        let s = e.set as usize;
        if s > 1 || e.index >= n || seen[s][e.index] {
            return false;
        }
        seen[s][e.index] = true;
        if order[(i + 1) % len].set == e.set {
            return false;
        }
    }
    true
}

/// Placement along S₀: the interior chart values for the two sets.
#[derive(Clone, Debug, Default)]
pub struct Placement {
    pub set0: Vec<Q>,
    pub set1: Vec<Q>,
}

struct Alternating {
    z0: Vec<CurveParam>,
    z1: Vec<CurveParam>,
    order: Vec<OrderEntry>,
}

fn entry(set: u8, index: usize) -> OrderEntry {
    OrderEntry { set, index }
}

/// Two sets of `count` points alternating along S₀.
fn alternate(c: &CurveEmbedding, count: usize, custom: Option<&Placement>) -> Result<Alternating> {
    let s0 = c.components.first().ok_or_else(|| Error::Invalid("curve has no S0 chart".into()))?;
    match &c.model {
        CurveModel::Rational { .. } => {
            // P¹ is the circle: t = 0, 1, 2, … alternate
            let (t0, t1): (Vec<Q>, Vec<Q>) = match custom {
                Some(p) => (p.set0.clone(), p.set1.clone()),
                None => ((0..count).map(|i| q(2 * i as i64)).collect(), (0..count).map(|i| q(2 * i as i64 + 1)).collect()),
            };
            if t0.len() != count || t1.len() != count {
                return Err(Error::Invalid(format!("need {count} parameters per set")));
            }
            let mut all: Vec<(Q, u8, usize)> = t0.iter().enumerate().map(|(i, t)| (t.clone(), 0, i)).collect();
            all.extend(t1.iter().enumerate().map(|(i, t)| (t.clone(), 1, i)));
            all.sort();
            Ok(Alternating {
                z0: t0.into_iter().map(CurveParam::t).collect(),
                z1: t1.into_iter().map(CurveParam::t).collect(),
                order: all.into_iter().map(|(_, s, i)| entry(s, i)).collect(),
            })
        }
        CurveModel::DoubleCover { .. } => {
            let range = s0.range.as_ref().filter(|r| s0.oval && r.len() == 2).ok_or_else(|| {
                Error::Invalid("S0 must be an oval with rational ends".into())
            })?;
            let (l, r) = (range[0].clone(), range[1].clone());
            // odd count: Z₀ = {L} ∪ pairs over set0, Z₁ = {R} ∪ pairs over set1
            // even count: Z₀ = pairs over set0, Z₁ = {L, R} ∪ pairs over set1
            let odd = count % 2 == 1;
            let (m0, m1) = if odd { (count / 2, count / 2) } else { (count / 2, count / 2 - 1) };
            let (x0, x1) = match custom {
                Some(p) => (p.set0.clone(), p.set1.clone()),
                None => {
                    let slots = m0 + m1;
                    let den = slots as i64 + 1;
                    let xs: Vec<Q> = (1..=slots).map(|j| &l + (&r - &l) * qf(j as i64, den)).collect();
                    // odd: set1 first (b₁ < a₁ < b₂ < …); even: set0 first
                    let first = if odd { 1 } else { 0 };
                    let mut s = (Vec::new(), Vec::new());
                    for (j, x) in xs.into_iter().enumerate() {
                        if (j % 2 == 0) == (first == 0) {
                            s.0.push(x);
                        } else {
                            s.1.push(x);
                        }
                    }
                    s
                }
            };
            if x0.len() != m0 || x1.len() != m1 {
                return Err(Error::Invalid(format!("need {m0} and {m1} interior x values")));
            }
            // sort interior values and check they interleave strictly inside (L, R)
            let mut inner: Vec<(Q, u8, usize)> = Vec::new();
            for (i, x) in x0.iter().enumerate() {
                inner.push((x.clone(), 0, i));
            }
            for (i, x) in x1.iter().enumerate() {
                inner.push((x.clone(), 1, i));
            }
            inner.sort();
            if inner.iter().any(|(x, _, _)| *x <= l || *x >= r) {
                return Err(Error::Invalid("interior points must lie strictly inside S0".into()));
            }
            let mut z: [Vec<CurveParam>; 2] = [Vec::new(), Vec::new()];
            let mut order = Vec::new();
            let push = |z: &mut [Vec<CurveParam>; 2], order: &mut Vec<OrderEntry>, set: u8, p: CurveParam| {
                let s = set as usize;
                order.push(entry(set, z[s].len()));
                z[s].push(p);
            };
            let left = CurveParam::Point { x: l.clone(), y: Q::zero() };
            let right = CurveParam::Point { x: r.clone(), y: Q::zero() };
            let (ls, rs) = if odd { (0u8, 1u8) } else { (1u8, 1u8) };
            push(&mut z, &mut order, ls, left);
            for (x, s, _) in &inner {
                push(&mut z, &mut order, *s, CurveParam::branch(x.clone(), true));
            }
            push(&mut z, &mut order, rs, right);
            for (x, s, _) in inner.iter().rev() {
                push(&mut z, &mut order, *s, CurveParam::branch(x.clone(), false));
            }
            let [z0, z1] = z;
            Ok(Alternating { z0, z1, order })
        }
    }
}

/// Linear conditions "the hyperplane passes through each point".
fn condition_rows(c: &CurveEmbedding, pts: &[CurveParam]) -> Result<Vec<Vec<Q>>> {
    let mut rows = Vec::new();
    match &c.model {
        CurveModel::Rational { .. } => {
            for p in pts {
                rows.push(eval_point(c, p)?);
            }
        }
        CurveModel::DoubleCover { a, b, .. } => {
            // conjugate branches over the same x impose A(x)·c = B(x)·c = 0
            let mut by_x: BTreeMap<Q, Vec<&CurveParam>> = BTreeMap::new();
            for p in pts {
                match p {
                    CurveParam::Branch { x, .. } | CurveParam::Point { x, .. } => by_x.entry(x.clone()).or_default().push(p),
                    CurveParam::Infinity => rows.push(eval_point(c, p)?),
                    CurveParam::Affine { .. } => return Err(Error::Invalid("affine parameter on a double cover".into())),
                }
            }
            for (x, ps) in by_x {
                if ps.len() >= 2 {
                    rows.push(a.iter().map(|ai| ai.eval(&x)).collect());
                    rows.push(b.iter().map(|bi| bi.eval(&x)).collect());
                } else {
                    rows.push(eval_point(c, ps[0])?);
                }
            }
        }
    }
    Ok(rows)
}

fn sections_through(c: &CurveEmbedding, pts: &[CurveParam], want: usize) -> Result<Vec<Vec<Q>>> {
    let rows = condition_rows(c, pts)?;
    let ns = nullspace(&rows, c.nvars());
    if ns.len() != want {
        return Err(Error::Invalid(format!(
            "sections through the chosen points form a space of dimension {}, expected {want}",
            ns.len()
        )));
    }
    Ok(ns)
}

pub fn build_vastly_real(c: &CurveEmbedding, k: usize) -> Result<VastlyRealSystem> {
    build_vastly_real_with(c, k, None, None)
}

/// Like `build_vastly_real` with explicit interior chart values for the
/// system points and/or the pencil points.
pub fn build_vastly_real_with(
    c: &CurveEmbedding,
    k: usize,
    system: Option<&Placement>,
    pencil: Option<&Placement>,
) -> Result<VastlyRealSystem> {
    let (d, g) = (c.degree, c.genus);
    if d < 2 * k + g + 1 {
        return Err(Error::DegreeTooSmall { d, g, k });
    }
    if !c.m_curve {
        return Err(Error::Invalid(format!("{} is not an M-curve", c.name)));
    }
    let n = d - k - g;
    let sys = alternate(c, n, system)?;
    let v0 = sections_through(c, &sys.z0, k + 1)?;
    let v1 = sections_through(c, &sys.z1, k + 1)?;
    let np = d - g;
    let pen = alternate(c, np, pencil)?;
    let a0 = sections_through(c, &pen.z0, 1)?.remove(0);
    let a1 = sections_through(c, &pen.z1, 1)?.remove(0);
    Ok(VastlyRealSystem {
        base_curve: c.clone(),
        k,
        n,
        points_p0: sys.z0,
        points_p1: sys.z1,
        alternation_order: sys.order,
        v0,
        v1,
        pencil_p0: pen.z0,
        pencil_p1: pen.z1,
        pencil_order: pen.order,
        a0,
        a1,
    })
}
