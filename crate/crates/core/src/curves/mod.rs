//! Parametrized real curves, secant points, hyperplane sections.
//!
//! Two chart types cover everything needed here: rational curves
//! t ↦ (c₀(t):…:c_n(t)), and double covers y² = P(x) whose embedding is
//! (x, y) ↦ A(x) + y·B(x) coordinatewise.

pub mod cover;
pub mod formulas;
pub mod vastly;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::ring::{q, qf, rational_sqrt, sign};
use crate::exactalg::{MPoly, MultiQuad, RealRoots, Ring, UPoly, Q};
use crate::io::{qser, qvec_ser};

pub use cover::{double_cover, DoubleCoverData};
pub use formulas::{beta, chi_symprod, gen_binom, secant_degree, secant_degree_closed, secant_degree_special};
pub use vastly::{build_vastly_real, build_vastly_real_with, VastlyRealSystem};

fn upoly_str<S: Serializer>(p: &UPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

fn upolys_str<S: Serializer>(ps: &[UPoly], s: S) -> std::result::Result<S::Ok, S::Error> {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().serialize(s)
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CurveModel {
    Rational {
        #[serde(serialize_with = "upolys_str")]
        coords: Vec<UPoly>,
    },
    DoubleCover {
        #[serde(serialize_with = "upoly_str")]
        p: UPoly,
        #[serde(serialize_with = "upolys_str")]
        a: Vec<UPoly>,
        #[serde(serialize_with = "upolys_str")]
        b: Vec<UPoly>,
        /// Common factor of every A_c² − P·B_c² coming from base points of
        /// the coordinate functions; divided out before counting.
        #[serde(serialize_with = "upoly_str")]
        base: UPoly,
        /// Image of the point(s) over x = ∞ when they are real.
        #[serde(with = "crate::io::qvec_opt_ser")]
        infinity_point: Option<Vec<Q>>,
    },
}

/// A connected piece of the real locus, as a range of the chart coordinate
/// (t for rational curves, x for double covers). `None` ends are infinite.
#[derive(Clone, Debug, Serialize)]
pub struct Component {
    pub label: String,
    #[serde(with = "crate::io::qvec_opt_ser")]
    pub range: Option<Vec<Q>>,
    /// For an oval x ∈ [L, R] of a double cover: both ends are ramification
    /// points and the two branches y ≷ 0 are the two arcs.
    pub oval: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveEmbedding {
    pub name: String,
    pub ambient_dim: usize,
    pub genus: usize,
    pub degree: usize,
    pub m_curve: bool,
    pub model: CurveModel,
    /// components[0] is S₀
    pub components: Vec<Component>,
    /// Forms in ambient coordinates vanishing on the curve.
    #[serde(skip)]
    pub equations: Vec<MPoly>,
}

/// A point on a curve chart.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CurveParam {
    Affine {
        #[serde(with = "qser")]
        t: Q,
    },
    Infinity,
    /// A rational point (x, y) of a double cover.
    Point {
        #[serde(with = "qser")]
        x: Q,
        #[serde(with = "qser")]
        y: Q,
    },
    /// (x, ±√P(x)) on a double cover; √P(x) may be irrational.
    Branch {
        #[serde(with = "qser")]
        x: Q,
        upper: bool,
    },
}

impl CurveParam {
    pub fn t(t: Q) -> Self {
        CurveParam::Affine { t }
    }
    pub fn branch(x: Q, upper: bool) -> Self {
        CurveParam::Branch { x, upper }
    }
}

/// Identity of a point for duplicate detection: x and the sign of y.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum PointKey {
    T(Q),
    Inf,
    X(Q, i8),
}

fn ambient_vars(n: usize) -> usize {
    n + 1
}

impl CurveEmbedding {
    pub fn nvars(&self) -> usize {
        ambient_vars(self.ambient_dim)
    }

    fn cover_parts(&self) -> Option<(&UPoly, &[UPoly], &[UPoly])> {
        match &self.model {
            CurveModel::DoubleCover { p, a, b, .. } => Some((p, a, b)),
            _ => None,
        }
    }

    fn key(&self, param: &CurveParam) -> Result<PointKey> {
        match (&self.model, param) {
            (CurveModel::Rational { .. }, CurveParam::Affine { t }) => Ok(PointKey::T(t.clone())),
            (_, CurveParam::Infinity) => Ok(PointKey::Inf),
            (CurveModel::DoubleCover { p, .. }, CurveParam::Point { x, y }) => {
                if y * y != p.eval(x) {
                    return Err(not_on_curve(param, "y^2 != P(x)"));
                }
                Ok(PointKey::X(x.clone(), sign(y)))
            }
            (CurveModel::DoubleCover { p, .. }, CurveParam::Branch { x, upper }) => {
                let px = p.eval(x);
                match sign(&px) {
                    -1 => Err(not_on_curve(param, "P(x) < 0, no real point")),
                    0 => Ok(PointKey::X(x.clone(), 0)),
                    _ => Ok(PointKey::X(x.clone(), if *upper { 1 } else { -1 })),
                }
            }
            _ => Err(not_on_curve(param, "parameter kind does not match the chart")),
        }
    }
}

fn not_on_curve(param: &CurveParam, reason: &str) -> Error {
    Error::NotOnCurve { param: format!("{param:?}"), reason: reason.to_string() }
}

fn check_nonzero(v: &[Q], param: &CurveParam) -> Result<()> {
    if v.iter().all(|c| c.is_zero()) {
        return Err(Error::BasePoint(format!("all coordinates vanish at {param:?}")));
    }
    Ok(())
}

/// Homogeneous coordinates of a point with rational coordinates.
pub fn eval_point(c: &CurveEmbedding, param: &CurveParam) -> Result<Vec<Q>> {
    c.key(param)?;
    let v = match (&c.model, param) {
        (CurveModel::Rational { coords }, CurveParam::Affine { t }) => coords.iter().map(|p| p.eval(t)).collect(),
        (CurveModel::Rational { coords }, CurveParam::Infinity) => {
            coords.iter().map(|p| p.coeff(c.degree)).collect()
        }
        (CurveModel::DoubleCover { infinity_point, .. }, CurveParam::Infinity) => match infinity_point {
            Some(v) => v.clone(),
            None => return Err(not_on_curve(param, "the points at infinity are not real")),
        },
        (CurveModel::DoubleCover { p, a, b, .. }, CurveParam::Point { x, .. } | CurveParam::Branch { x, .. }) => {
            let y = match param {
                CurveParam::Point { .. } => y_of(param).unwrap(),
                _ => {
                    let r = rational_sqrt(&p.eval(x))
                        .ok_or_else(|| not_on_curve(param, "y is irrational; use eval_points_ext"))?;
                    if matches!(param, CurveParam::Branch { upper: false, .. }) {
                        -r
                    } else {
                        r
                    }
                }
            };
            a.iter().zip(b).map(|(ai, bi)| ai.eval(x) + &y * bi.eval(x)).collect()
        }
        _ => unreachable!("rejected by key()"),
    };
    check_nonzero(&v, param)?;
    Ok(v)
}

fn y_of(param: &CurveParam) -> Option<Q> {
    match param {
        CurveParam::Point { y, .. } => Some(y.clone()),
        _ => None,
    }
}

/// Points whose coordinates live in Q(√r₁,…,√r_m), one generator per
/// distinct x with irrational √P(x).
#[derive(Clone, Debug)]
pub struct ExtPoints {
    pub squares: Arc<Vec<Q>>,
    pub points: Vec<Vec<MultiQuad>>,
}

pub fn eval_points_ext(c: &CurveEmbedding, params: &[CurveParam]) -> Result<ExtPoints> {
    let mut radicands: Vec<Q> = Vec::new();
    let mut slot: BTreeMap<Q, usize> = BTreeMap::new();
    if let Some((p, _, _)) = c.cover_parts() {
        for prm in params {
            if let CurveParam::Branch { x, .. } = prm {
                let px = p.eval(x);
                if sign(&px) > 0 && rational_sqrt(&px).is_none() && !slot.contains_key(x) {
                    slot.insert(x.clone(), radicands.len());
                    radicands.push(px);
                }
            }
        }
    }
    let squares = Arc::new(radicands);
    let lift = |v: Vec<Q>| v.into_iter().map(|x| MultiQuad::scalar(squares.clone(), x)).collect::<Vec<_>>();
    let mut points = Vec::with_capacity(params.len());
    for prm in params {
        match (prm, c.cover_parts()) {
            (CurveParam::Branch { x, upper }, Some((_, a, b))) if slot.contains_key(x) => {
                c.key(prm)?;
                let mut y = MultiQuad::generator(squares.clone(), slot[x]);
                if !upper {
                    y = y.neg();
                }
                let v: Vec<MultiQuad> = a
                    .iter()
                    .zip(b)
                    .map(|(ai, bi)| MultiQuad::scalar(squares.clone(), ai.eval(x)).add(&y.mul(&MultiQuad::scalar(squares.clone(), bi.eval(x)))))
                    .collect();
                if v.iter().all(|z| z.vanishes()) {
                    return Err(Error::BasePoint(format!("all coordinates vanish at {prm:?}")));
                }
                points.push(v);
            }
            _ => points.push(lift(eval_point(c, prm)?)),
        }
    }
    Ok(ExtPoints { squares, points })
}

/// A point on the span of k+1 curve points.
#[derive(Clone, Debug, Serialize)]
pub struct SecantSample {
    pub k: usize,
    pub parameters: Vec<CurveParam>,
    #[serde(with = "qvec_ser")]
    pub barycentric: Vec<Q>,
    /// Radicands r_i; `sqrt(r_i)` appears in the printed coordinates.
    #[serde(with = "qvec_ser")]
    pub radicands: Vec<Q>,
    #[serde(rename = "span_point")]
    pub span_text: Vec<String>,
    #[serde(skip)]
    pub span_point: Vec<MultiQuad>,
}

impl SecantSample {
    pub fn rational_span_point(&self) -> Option<Vec<Q>> {
        self.span_point.iter().map(|z| z.as_rational()).collect()
    }

    /// Evaluates a form at the span point, exactly.
    pub fn eval(&self, f: &MPoly) -> Result<MultiQuad> {
        f.eval_ring(&self.span_point)
    }
}

pub fn sample_secant_point(c: &CurveEmbedding, k: usize, params: &[CurveParam], weights: &[Q]) -> Result<SecantSample> {
    if params.len() != k + 1 {
        return Err(Error::Dimension { expected: k + 1, got: params.len() });
    }
    if weights.len() != k + 1 {
        return Err(Error::Dimension { expected: k + 1, got: weights.len() });
    }
    if weights.iter().all(|w| w.is_zero()) {
        return Err(Error::Invalid("weights are all zero".into()));
    }
    let mut keys = Vec::with_capacity(params.len());
    for p in params {
        let key = c.key(p)?;
        if keys.contains(&key) {
            return Err(Error::DuplicateParams);
        }
        keys.push(key);
    }
    let ext = eval_points_ext(c, params)?;
    let zero = MultiQuad::scalar(ext.squares.clone(), Q::zero());
    let mut span = vec![zero; c.nvars()];
    for (pt, w) in ext.points.iter().zip(weights) {
        let w = MultiQuad::scalar(ext.squares.clone(), w.clone());
        for (s, z) in span.iter_mut().zip(pt) {
            *s = s.add(&w.mul(z));
        }
    }
    Ok(SecantSample {
        k,
        parameters: params.to_vec(),
        barycentric: weights.to_vec(),
        radicands: ext.squares.to_vec(),
        span_text: span.iter().map(|z| z.to_string()).collect(),
        span_point: span,
    })
}

fn random_q_between<R: Rng>(rng: &mut R, lo: &Q, hi: &Q, den: i64) -> Q {
    let j = rng.gen_range(1..den);
    lo + (hi - lo) * qf(j, den)
}

/// A random real point on a component (interior of its range).
pub fn random_point_on<R: Rng>(c: &CurveEmbedding, comp: usize, rng: &mut R) -> Result<CurveParam> {
    let cp = c.components.get(comp).ok_or_else(|| Error::Invalid(format!("no component {comp}")))?;
    let (lo, hi) = match &cp.range {
        Some(r) => (Some(r[0].clone()), r.get(1).cloned()),
        None => (None, None),
    };
    let den = 997;
    let x = match (lo, hi) {
        (Some(l), Some(h)) => random_q_between(rng, &l, &h, den),
        (Some(l), None) => l + qf(rng.gen_range(1..20 * den), den),
        (None, Some(h)) => h - qf(rng.gen_range(1..20 * den), den),
        (None, None) => qf(rng.gen_range(-20 * den..20 * den), den),
    };
    Ok(match c.model {
        CurveModel::Rational { .. } => CurveParam::t(x),
        CurveModel::DoubleCover { .. } => CurveParam::branch(x, rng.gen_bool(0.5)),
    })
}

/// k+1 distinct random real points on the curve with random nonzero weights.
pub fn random_secant_sample<R: Rng>(c: &CurveEmbedding, k: usize, rng: &mut R) -> Result<SecantSample> {
    let mut params: Vec<CurveParam> = Vec::new();
    let mut keys = Vec::new();
    while params.len() < k + 1 {
        let comp = rng.gen_range(0..c.components.len());
        let p = random_point_on(c, comp, rng)?;
        let key = c.key(&p)?;
        if !keys.contains(&key) {
            keys.push(key);
            params.push(p);
        }
    }
    let weights: Vec<Q> = (0..=k)
        .map(|_| {
            let n = rng.gen_range(1..=9);
            qf(if rng.gen_bool(0.5) { n } else { -n }, rng.gen_range(1..=5))
        })
        .collect();
    sample_secant_point(c, k, &params, &weights)
}

/// How a hyperplane Σ cᵢzᵢ = 0 meets the curve (with multiplicity).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionCount {
    pub real: usize,
    pub nonreal: usize,
    pub degree: usize,
}

/// The univariate polynomial whose roots are the chart coordinates of the
/// intersection points with the hyperplane c.
pub fn section_polynomial(curve: &CurveEmbedding, c: &[Q]) -> Result<UPoly> {
    if c.len() != curve.nvars() {
        return Err(Error::Dimension { expected: curve.nvars(), got: c.len() });
    }
    let comb = |ps: &[UPoly]| {
        ps.iter().zip(c).fold(UPoly::zero(), |acc, (p, ci)| &acc + &p.scale(ci))
    };
    let poly = match &curve.model {
        CurveModel::Rational { coords } => comb(coords),
        CurveModel::DoubleCover { p, a, b, base, .. } => {
            let ac = comb(a);
            let bc = comb(b);
            let n = &(&ac * &ac) - &(&(p * &bc) * &bc);
            let (quo, rem) = n.divrem(base);
            if !rem.is_zero() {
                return Err(Error::Invalid("section polynomial not divisible by the base factor".into()));
            }
            quo
        }
    };
    if poly.is_zero() {
        return Err(Error::Invalid("hyperplane contains the curve".into()));
    }
    Ok(poly)
}

pub fn hyperplane_real_count(curve: &CurveEmbedding, c: &[Q]) -> Result<SectionCount> {
    let poly = section_polynomial(curve, c)?;
    let d = curve.degree;
    let finite = poly.degree();
    if finite > d {
        return Err(Error::DegreeMismatch(format!("section polynomial of degree {finite} > {d}")));
    }
    let mut rr = RealRoots::new(&poly)?;
    let real = match &curve.model {
        CurveModel::Rational { .. } => rr.count_with_multiplicity() + (d - finite),
        CurveModel::DoubleCover { p, infinity_point, .. } => {
            let mut real = 0;
            for i in 0..rr.len() {
                if rr.sign_at_root(i, p) >= 0 {
                    real += rr.intervals()[i].multiplicity;
                }
            }
            if infinity_point.is_some() {
                real += d - finite;
            }
            real
        }
    };
    Ok(SectionCount { real, nonreal: d - real, degree: d })
}

// ---------------------------------------------------------------- fixtures

fn up(c: &[i64]) -> UPoly {
    UPoly::from_ints(c)
}

fn form(nvars: usize, text: &str) -> MPoly {
    crate::exactalg::parse_poly(text, Some(nvars)).expect("built-in form")
}

/// (1 : t : … : t^d)
pub fn rational_normal_curve(d: usize) -> Result<CurveEmbedding> {
    if d == 0 {
        return Err(Error::Invalid("rnc degree must be >= 1".into()));
    }
    let coords = (0..=d)
        .map(|i| {
            let mut c = vec![Q::zero(); i + 1];
            c[i] = Q::one();
            UPoly::new(c)
        })
        .collect();
    let nv = d + 1;
    let mut equations = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            // z_i z_{j+1} − z_{i+1} z_j
            equations.push(form(nv, &format!("x{i}*x{} - x{}*x{j}", j + 1, i + 1)));
        }
    }
    Ok(CurveEmbedding {
        name: format!("rnc:{d}"),
        ambient_dim: d,
        genus: 0,
        degree: d,
        m_curve: true,
        model: CurveModel::Rational { coords },
        components: vec![Component { label: "S0".into(), range: None, oval: false }],
        equations,
    })
}

/// The plane cubic x₀³ − x₀x₂² − x₁²x₂ embedded by all quadrics
/// (x₀²:x₀x₁:x₀x₂:x₁x₂:x₂²); in the chart x₂ = 1 this is y² = x³ − x.
pub fn elliptic_quintic() -> CurveEmbedding {
    let nv = 5;
    CurveEmbedding {
        name: "elliptic-quintic".into(),
        ambient_dim: 4,
        genus: 1,
        degree: 5,
        m_curve: true,
        model: CurveModel::DoubleCover {
            p: up(&[0, -1, 0, 1]),
            a: vec![up(&[0, 0, 1]), up(&[]), up(&[0, 1]), up(&[]), up(&[1])],
            b: vec![up(&[]), up(&[0, 1]), up(&[]), up(&[1]), up(&[])],
            base: UPoly::one(),
            infinity_point: Some(vec![q(0), q(1), q(0), q(0), q(0)]),
        },
        components: vec![
            Component { label: "S0".into(), range: Some(vec![q(-1), q(0)]), oval: true },
            Component { label: "S1".into(), range: Some(vec![q(1)]), oval: false },
        ],
        equations: vec![
            form(nv, "x0*x4 - x2^2"),
            form(nv, "x1*x4 - x2*x3"),
            form(nv, "x0*x3 - x1*x2"),
            form(nv, "x3^2 - x0*x2 + x2*x4"),
            form(nv, "x1*x3 - x0^2 + x0*x4"),
        ],
    }
}

/// y² = (1−x²)(4−x²)(9−x²) embedded by (y : x²−9 : x³−9x : xy : x⁴−81).
pub fn genus2_sextic() -> CurveEmbedding {
    let p = &(&up(&[1, 0, -1]) * &up(&[4, 0, -1])) * &up(&[9, 0, -1]);
    CurveEmbedding {
        name: "genus2-sextic".into(),
        ambient_dim: 4,
        genus: 2,
        degree: 6,
        m_curve: true,
        model: CurveModel::DoubleCover {
            p,
            a: vec![up(&[]), up(&[-9, 0, 1]), up(&[0, -9, 0, 1]), up(&[]), up(&[-81, 0, 0, 0, 1])],
            b: vec![up(&[1]), up(&[]), up(&[]), up(&[0, 1]), up(&[])],
            base: up(&[-9, 0, 1]),
            infinity_point: None,
        },
        components: vec![
            Component { label: "S0".into(), range: Some(vec![q(-1), q(1)]), oval: true },
            Component { label: "S1".into(), range: Some(vec![q(2), q(3)]), oval: true },
            Component { label: "S2".into(), range: Some(vec![q(-3), q(-2)]), oval: true },
        ],
        equations: Vec::new(),
    }
}

/// y² = x³ + ax + b as the plane cubic (x : y : 1).
pub fn weierstrass(a: Q, b: Q) -> Result<CurveEmbedding> {
    let disc = -q(4) * &a * &a * &a - q(27) * &b * &b;
    if disc.is_zero() {
        return Err(Error::Invalid("x^3 + ax + b has a repeated root".into()));
    }
    let p = UPoly::new(vec![b.clone(), a.clone(), Q::zero(), Q::one()]);
    let mut rr = RealRoots::new(&p)?;
    let roots: Vec<Option<Q>> = (0..rr.len()).map(|i| rr.exact_root(i)).collect();
    let m_curve = roots.len() == 3;
    let components = match roots.as_slice() {
        [Some(e1), Some(e2), Some(e3)] => vec![
            Component { label: "S0".into(), range: Some(vec![e1.clone(), e2.clone()]), oval: true },
            Component { label: "S1".into(), range: Some(vec![e3.clone()]), oval: false },
        ],
        [Some(e)] => vec![Component { label: "S0".into(), range: Some(vec![e.clone()]), oval: false }],
        // irrational branch points: no rational chart for the components
        _ => Vec::new(),
    };
    let nv = 3;
    Ok(CurveEmbedding {
        name: format!("weierstrass:{a},{b}"),
        ambient_dim: 2,
        genus: 1,
        degree: 3,
        m_curve,
        model: CurveModel::DoubleCover {
            p,
            a: vec![up(&[0, 1]), up(&[]), up(&[1])],
            b: vec![up(&[]), up(&[1]), up(&[])],
            base: UPoly::one(),
            infinity_point: Some(vec![q(0), q(1), q(0)]),
        },
        components,
        equations: vec![&(&form(nv, "x1^2*x2 - x0^3") - &form(nv, "x0*x2^2").scale(&a)) - &form(nv, "x2^3").scale(&b)],
    })
}

/// Looks a curve up by registry name: `rnc:<d>`, `elliptic-quintic`,
/// `genus2-sextic`, `weierstrass:<a>,<b>`.
pub fn curve_fixture(name: &str) -> Result<CurveEmbedding> {
    let name = name.trim();
    if let Some(d) = name.strip_prefix("rnc:") {
        let d: usize = d.parse().map_err(|_| Error::UnknownFixture(name.into()))?;
        return rational_normal_curve(d);
    }
    if let Some(ab) = name.strip_prefix("weierstrass:") {
        let parts: Vec<&str> = ab.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::UnknownFixture(name.into()));
        }
        let a = crate::io::parse_rational(parts[0])?;
        let b = crate::io::parse_rational(parts[1])?;
        return weierstrass(a, b);
    }
    match name {
        "elliptic-quintic" => Ok(elliptic_quintic()),
        "genus2-sextic" => Ok(genus2_sextic()),
        _ => Err(Error::UnknownFixture(name.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ring::qvec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn on_equations(c: &CurveEmbedding, v: &[Q]) -> bool {
        c.equations.iter().all(|f| f.eval(v).unwrap().is_zero())
    }

    #[test]
    fn documented_points() {
        let e = elliptic_quintic();
        let v = eval_point(&e, &CurveParam::Point { x: q(0), y: q(0) }).unwrap();
        assert_eq!(v, qvec(&[0, 0, 0, 0, 1]));
        let g = genus2_sextic();
        let v = eval_point(&g, &CurveParam::Point { x: q(1), y: q(0) }).unwrap();
        assert_eq!(v, qvec(&[0, -8, -8, 0, -80]));
        let r = rational_normal_curve(4).unwrap();
        assert_eq!(eval_point(&r, &CurveParam::t(q(0))).unwrap(), qvec(&[1, 0, 0, 0, 0]));
        assert_eq!(eval_point(&r, &CurveParam::Infinity).unwrap(), qvec(&[0, 0, 0, 0, 1]));
    }

    #[test]
    fn points_satisfy_equations() {
        let e = elliptic_quintic();
        for (x, y) in [(0, 0), (1, 0), (-1, 0)] {
            let v = eval_point(&e, &CurveParam::Point { x: q(x), y: q(y) }).unwrap();
            assert!(on_equations(&e, &v));
        }
        let v = eval_point(&e, &CurveParam::Infinity).unwrap();
        assert!(on_equations(&e, &v));
        let r = rational_normal_curve(5).unwrap();
        for t in -3..4 {
            assert!(on_equations(&r, &eval_point(&r, &CurveParam::t(q(t))).unwrap()));
        }
        let w = weierstrass(q(-1), q(0)).unwrap();
        assert!(on_equations(&w, &eval_point(&w, &CurveParam::Infinity).unwrap()));
        assert!(w.m_curve);
    }

    #[test]
    fn off_curve_and_base_points() {
        let e = elliptic_quintic();
        assert!(matches!(
            eval_point(&e, &CurveParam::Point { x: q(2), y: q(1) }),
            Err(Error::NotOnCurve { .. })
        ));
        assert!(matches!(eval_point(&e, &CurveParam::branch(qf(1, 2), true)), Err(Error::NotOnCurve { .. })));
        let g = genus2_sextic();
        assert!(matches!(eval_point(&g, &CurveParam::Point { x: q(3), y: q(0) }), Err(Error::BasePoint(_))));
        assert!(eval_point(&g, &CurveParam::Infinity).is_err());
    }

    #[test]
    fn secant_points_are_exact_combinations() {
        let r = rational_normal_curve(4).unwrap();
        let s = sample_secant_point(&r, 1, &[CurveParam::t(q(1)), CurveParam::t(q(2))], &qvec(&[1, 1])).unwrap();
        assert_eq!(s.rational_span_point().unwrap(), qvec(&[2, 3, 5, 9, 17]));
        // k = 0 lands on the curve
        let e = elliptic_quintic();
        let s = sample_secant_point(&e, 0, &[CurveParam::branch(qf(-1, 2), true)], &qvec(&[1])).unwrap();
        assert_eq!(s.radicands, vec![qf(3, 8)]);
        for f in &e.equations {
            assert!(s.eval(f).unwrap().vanishes());
        }
        assert!(matches!(
            sample_secant_point(&r, 1, &[CurveParam::t(q(1)), CurveParam::t(q(1))], &qvec(&[1, 2])),
            Err(Error::DuplicateParams)
        ));
        assert!(sample_secant_point(&r, 1, &[CurveParam::t(q(1)), CurveParam::t(q(2))], &qvec(&[0, 0])).is_err());
    }

    #[test]
    fn rnc_sections_count_all_real_roots() {
        let r = rational_normal_curve(4).unwrap();
        // (t−1)(t−2)(t²+1) → 2 real, 2 non-real
        let c = UPoly::from_roots(&qvec(&[1, 2]));
        let c = &c * &up(&[1, 0, 1]);
        let sc = hyperplane_real_count(&r, c.coeffs()).unwrap();
        assert_eq!(sc, SectionCount { real: 2, nonreal: 2, degree: 4 });
        // z_0 = 0 meets the curve only at t = ∞, four times
        let sc = hyperplane_real_count(&r, &qvec(&[1, 0, 0, 0, 0])).unwrap();
        assert_eq!(sc.real, 4);
    }

    #[test]
    fn elliptic_sections() {
        let e = elliptic_quintic();
        // z_2 = x: the ramification point x = 0 twice, infinity three times
        let sc = hyperplane_real_count(&e, &qvec(&[0, 0, 1, 0, 0])).unwrap();
        assert_eq!(sc.degree, 5);
        assert_eq!(sc.real + sc.nonreal, 5);
        assert_eq!(sc.real, 5);
        // z_0 − 4 z_4 = x² − 4: x = ±2; x = 2 gives two real points, x = −2 two non-real
        let sc = hyperplane_real_count(&e, &qvec(&[1, 0, 0, 0, -4])).unwrap();
        assert_eq!(sc, SectionCount { real: 3, nonreal: 2, degree: 5 });
    }

    #[test]
    fn random_samples_stay_on_components() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = genus2_sextic();
        for _ in 0..20 {
            let s = random_secant_sample(&g, 1, &mut rng).unwrap();
            assert_eq!(s.parameters.len(), 2);
        }
    }

    #[test]
    fn registry_names() {
        assert_eq!(curve_fixture("rnc:4").unwrap().degree, 4);
        assert_eq!(curve_fixture("elliptic-quintic").unwrap().genus, 1);
        assert_eq!(curve_fixture("genus2-sextic").unwrap().degree, 6);
        let w = curve_fixture("weierstrass:0,1").unwrap();
        assert!(!w.m_curve);
        assert!(matches!(curve_fixture("weierstrass:0,0"), Err(Error::Invalid(_))));
        assert!(matches!(curve_fixture("nope"), Err(Error::UnknownFixture(_))));
        let js = serde_json::to_value(elliptic_quintic()).unwrap();
        assert_eq!(js["model"]["kind"], "double-cover");
    }
}
