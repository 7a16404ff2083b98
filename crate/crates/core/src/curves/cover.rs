//! The genus-one double cover w² = t⁴ + at² + b → y² = x(x² + ax + b).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::ring::q;
use crate::exactalg::{MPoly, UPoly, Q};
use crate::io::{poly_ser, qser};

#[derive(Clone, Debug, Serialize)]
pub struct DoubleCoverData {
    #[serde(with = "qser")]
    pub a: Q,
    #[serde(with = "qser")]
    pub b: Q,
    /// w² − (t⁴ + at² + b) in variables (t, w)
    #[serde(with = "poly_ser")]
    pub cover_curve: MPoly,
    /// y² − x(x² + ax + b) in variables (x, y)
    #[serde(with = "poly_ser")]
    pub target_curve: MPoly,
    /// (x, y) = (t², tw)
    #[serde(with = "poly_ser")]
    pub map_x: MPoly,
    #[serde(with = "poly_ser")]
    pub map_y: MPoly,
    /// Pullback of the target equation reduced mod the cover equation.
    #[serde(with = "poly_ser")]
    pub residual: MPoly,
    pub identity_holds: bool,
}

/// Replaces w² by r(t) until w has degree ≤ 1. Variables are (t, w).
pub fn reduce_mod_w2(f: &MPoly, r: &UPoly) -> MPoly {
    let r2 = upoly_in_t(r);
    let mut out = MPoly::zero(2);
    for (e, c) in f.terms() {
        let (tq, wq) = (e[0], e[1]);
        let term = MPoly::monomial(2, vec![tq, wq % 2], c.clone());
        out = &out + &(&term * &r2.pow(wq / 2));
    }
    out
}

fn upoly_in_t(p: &UPoly) -> MPoly {
    MPoly::from_terms(2, p.coeffs().iter().enumerate().map(|(i, c)| (vec![i as u32, 0], c.clone())))
}

pub fn double_cover(a: Q, b: Q) -> Result<DoubleCoverData> {
    if num_traits::Zero::is_zero(&b) || q(4) * &b <= &a * &a {
        return Err(Error::Invalid(format!("need b != 0 and 4b > a^2 (a = {a}, b = {b})")));
    }
    let t = MPoly::var(2, 0);
    let w = MPoly::var(2, 1);
    let r = UPoly::new(vec![b.clone(), q(0), a.clone(), q(0), q(1)]);
    let cover_curve = &w.pow(2) - &upoly_in_t(&r);
    let (x, y) = (MPoly::var(2, 0), MPoly::var(2, 1));
    let cubic = &(&(&x.pow(2) + &x.scale(&a)) + &MPoly::constant(2, b.clone())) * &x;
    let target_curve = &y.pow(2) - &cubic;
    let map_x = t.pow(2);
    let map_y = &t * &w;
    let pulled = target_curve.compose(&[map_x.clone(), map_y.clone()])?;
    let residual = reduce_mod_w2(&pulled, &r);
    let identity_holds = residual.is_zero();
    Ok(DoubleCoverData { a, b, cover_curve, target_curve, map_x, map_y, residual, identity_holds })
}
