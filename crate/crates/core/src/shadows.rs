//! Membership in hyperbolicity cones, Hankel spectrahedra and one-slack
//! semidefinite shadows {z : ∃t, M(z, t) semidefinite}.
//!
//! With one slack variable every principal minor of M(z, t) is a univariate
//! polynomial in t, so the feasible t form a finite union of closed intervals
//! whose ends are roots of minors. We split the line at all those roots and
//! decide every cell exactly.

use num_traits::Zero;
use serde::Serialize;

use crate::curves::formulas::gen_binom;
use crate::detrep::{hankel_pencil, SymPencil};
use crate::error::{Error, Result};
use crate::exactalg::linalg::{det_field, det_laplace, sym_ldlt};
use crate::exactalg::roots::SortedRoots;
use crate::exactalg::ring::sign;
use crate::exactalg::{Definiteness, MPoly, OrderedField, RealQuad, Ring, UPoly, Q};
use crate::hyperbolic::{cone_membership, ConeReport};
use crate::io::{qopt_ser, qser, qvec_opt_ser};

pub fn hyperbolicity_cone_member(f: &MPoly, e: &[Q], v: &[Q]) -> Result<ConeReport> {
    cone_membership(f, e, v)
}

#[derive(Clone, Debug, Serialize)]
pub struct HankelVerdict {
    pub k: usize,
    pub psd: bool,
    pub definiteness: Definiteness,
    pub rank: usize,
    /// x with xᵀH x < 0 when not PSD
    #[serde(with = "qvec_opt_ser")]
    pub witness: Option<Vec<Q>>,
}

/// PSD test of the (k+1)×(k+1) Hankel matrix of v, |v| = 2k+1.
pub fn hankel_membership(v: &[Q]) -> Result<HankelVerdict> {
    if v.len() < 3 || v.len() % 2 == 0 {
        return Err(Error::Invalid(format!("need 2k+1 >= 3 entries, got {}", v.len())));
    }
    let k = (v.len() - 1) / 2;
    let h = hankel_pencil(k)?.eval(v)?;
    let r = sym_ldlt(&h);
    Ok(HankelVerdict { k, psd: r.definiteness.is_psd(), definiteness: r.definiteness, rank: r.rank, witness: r.negative })
}

#[derive(Clone, Debug)]
pub struct ShadowRep {
    pub pencil: SymPencil,
    pub n_visible: usize,
    pub n_slack: usize,
}

impl ShadowRep {
    /// Visible variables first, slack variables last.
    pub fn new(pencil: SymPencil, n_slack: usize) -> Result<Self> {
        if n_slack >= pencil.nvars() {
            return Err(Error::Invalid("no visible variables".into()));
        }
        Ok(ShadowRep { n_visible: pencil.nvars() - n_slack, n_slack, pencil })
    }

    /// The pencil as a matrix of polynomials in the slack variable t.
    fn slack_matrix(&self, z: &[Q]) -> Result<Vec<Vec<UPoly>>> {
        if self.n_slack > 1 {
            return Err(Error::MultiSlack);
        }
        if z.len() != self.n_visible {
            return Err(Error::Dimension { expected: self.n_visible, got: z.len() });
        }
        let n = self.pencil.size();
        let mats = self.pencil.matrices();
        Ok((0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c0: Q = z.iter().zip(mats).map(|(zi, m)| zi * m.get(i, j)).sum();
                        let c1 = if self.n_slack == 1 { mats[self.n_visible].get(i, j).clone() } else { Q::zero() };
                        UPoly::new(vec![c0, c1])
                    })
                    .collect()
            })
            .collect())
    }

    /// Principal index sets S whose submatrix does not involve the slack.
    fn slack_free(&self, mask: u32) -> bool {
        if self.n_slack == 0 {
            return true;
        }
        let s = &self.pencil.matrices()[self.n_visible];
        let idx = bits(mask);
        idx.iter().all(|&i| idx.iter().all(|&j| s.get(i, j).is_zero()))
    }
}

fn bits(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// One end of a feasible interval.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Endpoint {
    NegInf,
    PosInf,
    Rational {
        #[serde(with = "qser")]
        value: Q,
    },
    /// The unique root of `poly` in (lo, hi].
    Algebraic {
        #[serde(with = "qser")]
        lo: Q,
        #[serde(with = "qser")]
        hi: Q,
        poly: String,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct FeasibleIntervals {
    /// Closed, disjoint, sorted.
    pub intervals: Vec<(Endpoint, Endpoint)>,
}

impl FeasibleIntervals {
    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// A cell of the t-line together with a principal minor that is negative there.
#[derive(Clone, Debug, Serialize)]
pub struct CellViolation {
    pub from: Endpoint,
    pub to: Endpoint,
    /// rows/cols of the minor
    pub minor: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShadowVerdict {
    /// M(z, t) ⪰ 0 for some real t
    pub member: bool,
    #[serde(with = "qopt_ser")]
    pub slack_witness: Option<Q>,
    /// Set when the only feasible slack values are irrational points.
    pub algebraic_witness: Option<Endpoint>,
    pub psd_set: FeasibleIntervals,
    /// M(z, t) ⪯ 0 for some t, i.e. −z is a member: [z] lies in the
    /// projective shadow even though z itself does not.
    pub negation_member: bool,
    pub nsd_set: FeasibleIntervals,
    /// Covers the whole line when not a member.
    pub separator: Vec<CellViolation>,
}

enum Cell {
    Gap(Q),
    Root(usize),
}

fn nsd_sign(s: i8, mask: u32) -> i8 {
    if mask.count_ones() % 2 == 1 {
        -s
    } else {
        s
    }
}

pub fn shadow_membership(rep: &ShadowRep, z: &[Q]) -> Result<ShadowVerdict> {
    let m = rep.slack_matrix(z)?;
    let n = m.len();
    let like = UPoly::zero();
    let minors: Vec<(u32, UPoly)> = (1u32..1 << n)
        .map(|mask| {
            let idx = bits(mask);
            let sub: Vec<Vec<UPoly>> = idx.iter().map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect()).collect();
            (mask, det_laplace(&sub, &like))
        })
        .collect();
    // critical points: roots of all nonconstant minors
    let polys: Vec<&UPoly> = minors.iter().map(|(_, p)| p).collect();
    let mut rr = SortedRoots::new(&polys)?;
    let gaps = rr.gap_points();
    let nroots = rr.len();
    // cells in order: gap0, root0, gap1, root1, …, gap_n
    let mut cells = Vec::with_capacity(2 * nroots + 1);
    for i in 0..nroots {
        cells.push(Cell::Gap(gaps[i].clone()));
        cells.push(Cell::Root(i));
    }
    cells.push(Cell::Gap(gaps[nroots].clone()));
    let root_end = |rr: &mut SortedRoots, i: usize| -> Endpoint {
        match rr.exact_root(i) {
            Some(v) => Endpoint::Rational { value: v },
            None => {
                let iv = rr.interval(i);
                Endpoint::Algebraic { lo: iv.lo.clone(), hi: iv.hi.clone(), poly: rr.factor(i).to_string() }
            }
        }
    };
    let ends: Vec<Endpoint> = (0..nroots).map(|i| root_end(&mut rr, i)).collect();
    let cell_bounds = |c: usize| -> (Endpoint, Endpoint) {
        if c % 2 == 1 {
            let e = ends[c / 2].clone();
            return (e.clone(), e);
        }
        let r = c / 2;
        let lo = if r == 0 { Endpoint::NegInf } else { ends[r - 1].clone() };
        let hi = if r == nroots { Endpoint::PosInf } else { ends[r].clone() };
        (lo, hi)
    };
    let mut psd_ok = Vec::with_capacity(cells.len());
    let mut nsd_ok = Vec::with_capacity(cells.len());
    let mut separator = Vec::new();
    for (ci, cell) in cells.iter().enumerate() {
        let mut psd_bad = None;
        let mut nsd_bad = None;
        for (mask, p) in &minors {
            let s = match cell {
                Cell::Gap(t) => sign(&p.eval(t)),
                Cell::Root(i) => rr.sign_at(*i, p),
            };
            if s < 0 && psd_bad.is_none() {
                psd_bad = Some(*mask);
            }
            if nsd_sign(s, *mask) < 0 && nsd_bad.is_none() {
                nsd_bad = Some(*mask);
            }
            if psd_bad.is_some() && nsd_bad.is_some() {
                break;
            }
        }
        psd_ok.push(psd_bad.is_none());
        nsd_ok.push(nsd_bad.is_none());
        if let Some(a) = psd_bad {
            let (from, to) = cell_bounds(ci);
            separator.push(CellViolation { from, to, minor: bits(a) });
        }
    }
    let collect = |ok: &[bool]| -> FeasibleIntervals {
        let mut intervals = Vec::new();
        let mut c = 0;
        while c < ok.len() {
            if !ok[c] {
                c += 1;
                continue;
            }
            let start = c;
            while c + 1 < ok.len() && ok[c + 1] {
                c += 1;
            }
            intervals.push((cell_bounds(start).0, cell_bounds(c).1));
            c += 1;
        }
        FeasibleIntervals { intervals }
    };
    let psd_set = collect(&psd_ok);
    let nsd_set = collect(&nsd_ok);
    // prefer a rational witness from an open cell, then a rational root
    let mut witness = None;
    let mut algebraic = None;
    let open = cells.iter().enumerate().find_map(|(ci, c)| match c {
        Cell::Gap(t) if psd_ok[ci] => Some(t.clone()),
        _ => None,
    });
    if open.is_some() {
        witness = open;
    } else if let Some(i) = cells.iter().enumerate().find_map(|(ci, c)| match c {
        Cell::Root(i) if psd_ok[ci] => Some(*i),
        _ => None,
    }) {
        match &ends[i] {
            Endpoint::Rational { value } => witness = Some(value.clone()),
            e => algebraic = Some(e.clone()),
        }
    }
    let member = !psd_set.is_empty();
    Ok(ShadowVerdict {
        member,
        slack_witness: witness,
        algebraic_witness: algebraic,
        psd_set,
        negation_member: !nsd_set.is_empty(),
        nsd_set,
        separator: if member { Vec::new() } else { separator },
    })
}

/// Certificate that z (coordinates in Q(√r)) is not a member: a principal
/// minor free of the slack variable that is negative at z. `None` means this
/// test is inconclusive.
#[derive(Clone, Debug, Serialize)]
pub struct QuadSeparator {
    pub minor: Vec<usize>,
}

pub fn slack_free_separator(rep: &ShadowRep, z: &[RealQuad]) -> Result<Option<QuadSeparator>> {
    if rep.n_slack > 1 {
        return Err(Error::MultiSlack);
    }
    if z.len() != rep.n_visible {
        return Err(Error::Dimension { expected: rep.n_visible, got: z.len() });
    }
    let like = z.first().cloned().unwrap_or_else(|| RealQuad::rational(Q::zero()));
    let mats = rep.pencil.matrices();
    let n = rep.pencil.size();
    let entry = |i: usize, j: usize| -> RealQuad {
        z.iter()
            .zip(mats)
            .fold(RealQuad::zero_like(&like), |acc, (zi, m)| acc.add(&zi.mul(&RealQuad::embed(m.get(i, j), &like))))
    };
    for mask in 1u32..1 << n {
        if !rep.slack_free(mask) {
            continue;
        }
        let idx = bits(mask);
        let sub: Vec<Vec<RealQuad>> = idx.iter().map(|&i| idx.iter().map(|&j| entry(i, j)).collect()).collect();
        if det_field(sub).signum() < 0 {
            return Ok(Some(QuadSeparator { minor: idx }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShadowBounds {
    pub dim_bound: usize,
    /// Closed form (d+2−g)·2^{g−1} when g ≤ ⌊d/2⌋, the general sum otherwise.
    pub degree_bound: i128,
    /// The general sum (⌊d/2⌋+1)·Σ binom(g,i) − g·Σ binom(g−1,i).
    pub degree_formula: i128,
    /// Matrix size for M-curves (g ≤ 1).
    pub matrix_size_bound_m_curve: Option<usize>,
    /// Matrix size without the M-curve assumption (g ≤ 1).
    pub matrix_size_bound: Option<usize>,
}

pub fn shadow_size_bounds(d: usize, g: usize) -> Result<ShadowBounds> {
    if d < 1 {
        return Err(Error::Invalid("d must be >= 1".into()));
    }
    let h = (d / 2) as i64;
    let gi = g as i64;
    let a: i128 = (0..=h).map(|i| gen_binom(gi, i)).sum();
    let b: i128 = if g == 0 { 0 } else { (0..h).map(|i| gen_binom(gi - 1, i)).sum() };
    let degree_formula = (h as i128 + 1) * a - gi as i128 * b;
    let degree_bound = if gi <= h {
        (d as i128 + 2 - gi as i128) * (1i128 << g) / 2
    } else {
        degree_formula
    };
    let (m, general) = match g {
        0 => (Some(d / 2 + 1), Some(d / 2 + 1)),
        1 => (Some(d + 1), Some(2 * d + 1)),
        _ => (None, None),
    };
    Ok(ShadowBounds {
        dim_bound: d + 1,
        degree_bound,
        degree_formula,
        matrix_size_bound_m_curve: m,
        matrix_size_bound: general,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detrep::uniform_moments;
    use crate::exactalg::ring::{q, qf, qvec};

    fn toy() -> ShadowRep {
        // diag(z0, t, z0 − t, z0, z0)
        let p = SymPencil::parse(
            "x0, 0, 0, 0, 0\n0, x1, 0, 0, 0\n0, 0, x0 - x1, 0, 0\n0, 0, 0, x0, 0\n0, 0, 0, 0, x0",
            2,
        )
        .unwrap();
        ShadowRep::new(p, 1).unwrap()
    }

    #[test]
    fn toy_interval() {
        let v = shadow_membership(&toy(), &[q(1)]).unwrap();
        assert!(v.member && !v.negation_member);
        let w = v.slack_witness.unwrap();
        assert!(w > q(0) && w < q(1));
        assert_eq!(
            v.psd_set.intervals,
            vec![(Endpoint::Rational { value: q(0) }, Endpoint::Rational { value: q(1) })]
        );
        // z0 = −1: only the mirrored interval, which is NSD
        let v = shadow_membership(&toy(), &[q(-1)]).unwrap();
        assert!(!v.member && v.negation_member);
        assert_eq!(
            v.nsd_set.intervals,
            vec![(Endpoint::Rational { value: q(-1) }, Endpoint::Rational { value: q(0) })]
        );
    }

    #[test]
    fn point_interval_gives_root_witness() {
        // diag(t, −t, 1): only t = 0
        let p = SymPencil::parse("x1, 0, 0\n0, -x1, 0\n0, 0, x0", 2).unwrap();
        let v = shadow_membership(&ShadowRep::new(p, 1).unwrap(), &[q(1)]).unwrap();
        assert!(v.member);
        assert_eq!(v.slack_witness, Some(q(0)));
        // [[t, 1], [1, t]] ⊕ [2 − t]: PSD for 1 ≤ t ≤ 2
        let p = SymPencil::parse("x1, x0, 0\nx0, x1, 0\n0, 0, 2*x0 - x1", 2).unwrap();
        let v = shadow_membership(&ShadowRep::new(p, 1).unwrap(), &[q(1)]).unwrap();
        assert!(v.member);
        let w = v.slack_witness.unwrap();
        assert!(w >= q(1) && w <= q(2));
    }

    #[test]
    fn separator_covers_line() {
        // diag(1, −1, t): never semidefinite
        let p = SymPencil::parse("x0, 0, 0\n0, -x0, 0\n0, 0, x1", 2).unwrap();
        let v = shadow_membership(&ShadowRep::new(p, 1).unwrap(), &[q(1)]).unwrap();
        assert!(!v.member);
        assert!(!v.separator.is_empty());
        assert!(v.psd_set.is_empty() && v.nsd_set.is_empty());
    }

    #[test]
    fn multi_slack_rejected() {
        let p = SymPencil::parse("x0, x1\nx1, x2", 3).unwrap();
        let r = ShadowRep::new(p, 2).unwrap();
        assert!(matches!(shadow_membership(&r, &[q(1)]), Err(Error::MultiSlack)));
    }

    #[test]
    fn block_extension_keeps_membership() {
        let base = toy();
        let p = SymPencil::parse(
            "x0, 0, 0, 0, 0, 0\n0, x1, 0, 0, 0, 0\n0, 0, x0 - x1, 0, 0, 0\n0, 0, 0, x0, 0, 0\n0, 0, 0, 0, x0, 0\n0, 0, 0, 0, 0, x0",
            2,
        )
        .unwrap();
        let ext = ShadowRep::new(p, 1).unwrap();
        for z in [q(1), qf(1, 3), q(-2)] {
            assert_eq!(shadow_membership(&base, &[z.clone()]).unwrap().member, shadow_membership(&ext, &[z]).unwrap().member);
        }
    }

    #[test]
    fn hankel_cases() {
        assert!(hankel_membership(&uniform_moments(5)).unwrap().psd);
        let v = hankel_membership(&qvec(&[1, 0, 0, 0, -1])).unwrap();
        assert!(!v.psd);
        assert!(v.witness.is_some());
        let t = qf(3, 2);
        let pts: Vec<Q> = (0..5).map(|i| num_traits::pow(t.clone(), i)).collect();
        let v = hankel_membership(&pts).unwrap();
        assert!(v.psd);
        assert_eq!(v.rank, 1);
        assert!(hankel_membership(&qvec(&[1, 2])).is_err());
    }

    #[test]
    fn bounds() {
        for d in 1..12 {
            let b = shadow_size_bounds(d, 0).unwrap();
            assert_eq!(b.degree_bound, (d / 2 + 1) as i128);
            assert_eq!(b.degree_formula, b.degree_bound);
            assert_eq!(b.matrix_size_bound, Some(d / 2 + 1));
        }
        let b = shadow_size_bounds(5, 1).unwrap();
        assert_eq!(b.degree_bound, 6);
        assert_eq!(b.degree_formula, 5);
        assert_eq!(b.matrix_size_bound_m_curve, Some(6));
        assert_eq!(b.matrix_size_bound, Some(11));
        assert_eq!(shadow_size_bounds(6, 2).unwrap().matrix_size_bound, None);
        // monotone in d
        for g in 0..=5 {
            let mut prev = i128::MIN;
            for d in 1..=30 {
                let b = shadow_size_bounds(d, g).unwrap().degree_bound;
                assert!(b >= prev, "d={d} g={g}");
                prev = b;
            }
        }
    }
}
