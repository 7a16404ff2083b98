//! Hyperbolicity, hyperbolicity cones and interlacing, decided line by line
//! through exact root counting.
//!
//! Certification samples lines from a seeded generator. A refutation is a
//! proof; "certified-on-samples" is only evidence, and the status says so.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::roots::merged_roots;
use crate::exactalg::{q, real_root_count, Ext, MPoly, UPoly, Q};
use crate::io::{poly_ser, qvec_opt_ser, qvec_ser};

pub const DEFAULT_HEIGHT: u64 = 10;

/// Pseudorandom integer vectors with entries in [−height, height].
pub fn sample_directions(seed: u64, count: usize, dim: usize, height: u64) -> Vec<Vec<Q>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = height as i64;
    (0..count)
        .map(|_| (0..dim).map(|_| q(rng.gen_range(-h..=h))).collect())
        .collect()
}

fn degree_of(f: &MPoly) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.homogeneous_degree().ok_or(Error::NotHomogeneous)
}

fn check_point(f: &MPoly, e: &[Q]) -> Result<()> {
    if f.eval(e)?.is_zero() {
        return Err(Error::OnHypersurface);
    }
    Ok(())
}

fn all_real(p: &UPoly) -> Result<usize> {
    real_root_count(p, &Ext::NegInf, &Ext::PosInf)
}

/// True iff t ↦ f(te − v) has deg f real roots counted with multiplicity.
pub fn is_real_rooted_on_line(f: &MPoly, e: &[Q], v: &[Q]) -> Result<bool> {
    let d = degree_of(f)?;
    check_point(f, e)?;
    let p = f.restrict_line(e, v)?;
    Ok(all_real(&p)? == d as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertStatus {
    CertifiedOnSamples,
    Refuted,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HyperbolicityCertificate {
    #[serde(with = "poly_ser")]
    pub f: MPoly,
    #[serde(with = "qvec_ser")]
    pub e: Vec<Q>,
    pub lines_tested: usize,
    pub seed: u64,
    pub height: u64,
    pub status: CertStatus,
    #[serde(with = "qvec_opt_ser")]
    pub refutation_witness: Option<Vec<Q>>,
    pub reason: Option<String>,
}

pub fn certify_hyperbolic(f: &MPoly, e: &[Q], n_lines: usize, seed: u64) -> Result<HyperbolicityCertificate> {
    certify_hyperbolic_with(f, e, n_lines, seed, DEFAULT_HEIGHT)
}

pub fn certify_hyperbolic_with(
    f: &MPoly,
    e: &[Q],
    n_lines: usize,
    seed: u64,
    height: u64,
) -> Result<HyperbolicityCertificate> {
    let d = degree_of(f)? as usize;
    if e.len() != f.nvars() {
        return Err(Error::Dimension { expected: f.nvars(), got: e.len() });
    }
    let mut cert = HyperbolicityCertificate {
        f: f.clone(),
        e: e.to_vec(),
        lines_tested: 0,
        seed,
        height,
        status: CertStatus::CertifiedOnSamples,
        refutation_witness: None,
        reason: None,
    };
    if f.eval(e)?.is_zero() {
        cert.status = CertStatus::Refuted;
        cert.reason = Some("f(e) = 0".into());
        return Ok(cert);
    }
    for v in sample_directions(seed, n_lines, f.nvars(), height) {
        cert.lines_tested += 1;
        let real = all_real(&f.restrict_line(e, &v)?)?;
        if real < d {
            cert.status = CertStatus::Refuted;
            cert.reason = Some(format!("f(te - v) has {real} real roots, degree {d}"));
            cert.refutation_witness = Some(v);
            break;
        }
    }
    Ok(cert)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConeClass {
    Interior,
    Boundary,
    Outside,
}

/// Root census of f(te − v): the eigenvalues of v with respect to e.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeReport {
    pub class: ConeClass,
    pub zero_multiplicity: usize,
    pub negative_roots: usize,
    pub positive_roots: usize,
    pub nonreal_roots: usize,
}

/// Classifies v against the hyperbolicity cone of f at e. The multiplicity of
/// the root t = 0 is read off the low coefficients; the remaining roots are
/// counted on (−∞, 0) and (0, ∞) separately.
pub fn cone_membership(f: &MPoly, e: &[Q], v: &[Q]) -> Result<ConeReport> {
    let d = degree_of(f)? as usize;
    check_point(f, e)?;
    let p = f.restrict_line(e, v)?;
    let k = p.order_at_zero().expect("f(e) != 0 keeps the restriction nonzero");
    let rest = p.shift_down(k);
    let zero = Ext::Fin(Q::zero());
    let (neg, pos) = if rest.degree() == 0 {
        (0, 0)
    } else {
        (
            real_root_count(&rest, &Ext::NegInf, &zero)?,
            real_root_count(&rest, &zero, &Ext::PosInf)?,
        )
    };
    let nonreal = d - k - neg - pos;
    let class = if neg > 0 || nonreal > 0 {
        ConeClass::Outside
    } else if k > 0 {
        ConeClass::Boundary
    } else {
        ConeClass::Interior
    };
    Ok(ConeReport { class, zero_multiplicity: k, negative_roots: neg, positive_roots: pos, nonreal_roots: nonreal })
}

/// Order of vanishing of t ↦ f(x + te) at t = 0.
pub fn multiplicity_at(f: &MPoly, e: &[Q], x: &[Q]) -> Result<usize> {
    degree_of(f)?;
    if x.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroPoint);
    }
    check_point(f, e)?;
    let p = f.substitute_affine(x, e)?;
    Ok(p.order_at_zero().expect("f(e) != 0 keeps the restriction nonzero"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InterlaceStatus {
    InterlacesOnSamples,
    Refuted,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InterlacingReport {
    #[serde(with = "poly_ser")]
    pub f: MPoly,
    #[serde(with = "poly_ser")]
    pub g: MPoly,
    #[serde(with = "qvec_ser")]
    pub e: Vec<Q>,
    pub lines_tested: usize,
    pub seed: u64,
    pub status: InterlaceStatus,
    #[serde(with = "qvec_opt_ser")]
    pub refutation_witness: Option<Vec<Q>>,
    pub reason: Option<String>,
}

/// Checks a₁ ≤ b₁ ≤ a₂ ≤ … ≤ b_{d−1} ≤ a_d on one line. Returns the reason on failure.
pub fn interlacing_failure_on_line(f: &MPoly, g: &MPoly, e: &[Q], v: &[Q]) -> Result<Option<String>> {
    let d = degree_of(f)? as usize;
    let p = f.restrict_line(e, v)?;
    let r = g.restrict_line(e, v)?;
    if p.degree() != d || all_real(&p)? != d {
        return Ok(Some("f is not real-rooted on this line".into()));
    }
    if r.is_zero() || r.degree() != d - 1 {
        return Ok(Some("g(te - v) does not have degree deg f - 1".into()));
    }
    if all_real(&r)? != d - 1 {
        return Ok(Some("g is not real-rooted on this line".into()));
    }
    // Merged distinct roots; A, B count roots of f, g with multiplicity.
    // b_i ≥ a_i  ⇔  A(≤x) ≥ B(≤x) for all x;  b_i ≤ a_{i+1}  ⇔  A(<x) − B(<x) ≤ 1.
    let (mut a, mut b) = (0i64, 0i64);
    for root in merged_roots(&[&p, &r])? {
        if a - b > 1 {
            return Ok(Some(format!("two roots of f before ({}, {}] without a root of g between", root.interval.lo, root.interval.hi)));
        }
        a += root.multiplicities[0] as i64;
        b += root.multiplicities[1] as i64;
        if a < b {
            return Ok(Some(format!("two roots of g up to ({}, {}] without a root of f between", root.interval.lo, root.interval.hi)));
        }
    }
    Ok(None)
}

pub fn check_interlaces(f: &MPoly, g: &MPoly, e: &[Q], n_lines: usize, seed: u64) -> Result<InterlacingReport> {
    check_interlaces_with(f, g, e, n_lines, seed, DEFAULT_HEIGHT)
}

pub fn check_interlaces_with(
    f: &MPoly,
    g: &MPoly,
    e: &[Q],
    n_lines: usize,
    seed: u64,
    height: u64,
) -> Result<InterlacingReport> {
    let df = degree_of(f)?;
    let dg = degree_of(g)?;
    if df == 0 || dg + 1 != df {
        return Err(Error::DegreeMismatch(format!("deg g = {dg} but deg f = {df}")));
    }
    if g.nvars() != f.nvars() {
        return Err(Error::Dimension { expected: f.nvars(), got: g.nvars() });
    }
    check_point(f, e)?;
    let mut rep = InterlacingReport {
        f: f.clone(),
        g: g.clone(),
        e: e.to_vec(),
        lines_tested: 0,
        seed,
        status: InterlaceStatus::InterlacesOnSamples,
        refutation_witness: None,
        reason: None,
    };
    for v in sample_directions(seed, n_lines, f.nvars(), height) {
        rep.lines_tested += 1;
        if let Some(reason) = interlacing_failure_on_line(f, g, e, &v)? {
            rep.status = InterlaceStatus::Refuted;
            rep.reason = Some(reason);
            rep.refutation_witness = Some(v);
            break;
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_poly, qvec};

    fn p(s: &str, n: usize) -> MPoly {
        parse_poly(s, Some(n)).unwrap()
    }

    #[test]
    fn lines() {
        let h = p("x0*x2 - x1^2", 3);
        assert!(is_real_rooted_on_line(&h, &qvec(&[1, 0, 1]), &qvec(&[0, 1, 0])).unwrap());
        let s = p("x0^2 + x1^2", 2);
        assert!(!is_real_rooted_on_line(&s, &qvec(&[1, 0]), &qvec(&[0, 3])).unwrap());
        assert_eq!(
            is_real_rooted_on_line(&h, &qvec(&[1, 0, 0]), &qvec(&[0, 1, 0])).unwrap_err(),
            Error::OnHypersurface
        );
    }

    #[test]
    fn lorentz_certified_and_sphere_refuted() {
        let l = p("x0^2 - x1^2 - x2^2", 3);
        let c = certify_hyperbolic(&l, &qvec(&[1, 0, 0]), 100, 7).unwrap();
        assert_eq!(c.status, CertStatus::CertifiedOnSamples);
        assert_eq!(c.lines_tested, 100);
        let s = p("x0^2 + x1^2 + x2^2", 3);
        let c = certify_hyperbolic(&s, &qvec(&[1, 0, 0]), 100, 7).unwrap();
        assert_eq!(c.status, CertStatus::Refuted);
        let w = c.refutation_witness.unwrap();
        assert!(!is_real_rooted_on_line(&s, &qvec(&[1, 0, 0]), &w).unwrap());
        assert!(certify_hyperbolic(&p("x0^2 + x1", 2), &qvec(&[1, 0]), 1, 0).is_err());
    }

    #[test]
    fn hankel_cone() {
        let h = p("x0*x2 - x1^2", 3);
        let e = qvec(&[1, 0, 1]);
        assert_eq!(cone_membership(&h, &e, &qvec(&[1, 0, 1])).unwrap().class, ConeClass::Interior);
        assert_eq!(cone_membership(&h, &e, &qvec(&[1, 1, 1])).unwrap().class, ConeClass::Boundary);
        assert_eq!(cone_membership(&h, &e, &qvec(&[1, 2, 1])).unwrap().class, ConeClass::Outside);
    }

    #[test]
    fn multiplicities() {
        let h = p("x0*x2 - x1^2", 3);
        let e = qvec(&[1, 0, 1]);
        assert_eq!(multiplicity_at(&h, &e, &qvec(&[1, 1, 1])).unwrap(), 1);
        assert_eq!(multiplicity_at(&h, &e, &qvec(&[1, 0, 2])).unwrap(), 0);
        assert_eq!(multiplicity_at(&h, &e, &qvec(&[0, 0, 0])).unwrap_err(), Error::ZeroPoint);
    }

    #[test]
    fn derivative_interlaces_and_bad_linear_form_does_not() {
        let l = p("x0^2 - x1^2 - x2^2", 3);
        let e = qvec(&[1, 0, 0]);
        let r = check_interlaces(&l, &p("x0", 3), &e, 100, 3).unwrap();
        assert_eq!(r.status, InterlaceStatus::InterlacesOnSamples);
        let r = check_interlaces(&l, &p("x1", 3), &e, 100, 3).unwrap();
        assert_eq!(r.status, InterlaceStatus::Refuted);
        assert!(check_interlaces(&l, &l, &e, 1, 0).is_err());
    }
}
