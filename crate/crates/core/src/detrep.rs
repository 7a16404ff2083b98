//! Symmetric determinantal representations: linear pencils, their
//! determinants and adjugates, definiteness at a point, and completion of a
//! matrix of forms from its first row (h₁₁h_ij ≡ h₁ih₁j mod f).

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::linalg::{det_laplace, solve_multi, sym_ldlt};
use crate::exactalg::{parse_poly, Definiteness, MPoly, SymRatMatrix, Q};
use crate::io::{parse_rational, qser, qvec_ser};

/// A(x) = Σ xᵢAᵢ with symmetric rational Aᵢ.
#[derive(Clone, Debug, PartialEq)]
pub struct SymPencil {
    matrices: Vec<SymRatMatrix>,
    size: usize,
}

#[derive(Serialize, Deserialize)]
struct PencilJson {
    size: usize,
    nvars: usize,
    matrices: Vec<Vec<Vec<String>>>,
}

impl SymPencil {
    pub fn new(matrices: Vec<SymRatMatrix>) -> Result<Self> {
        let size = matrices.first().map(|m| m.size()).ok_or_else(|| Error::Invalid("empty pencil".into()))?;
        if let Some(m) = matrices.iter().find(|m| m.size() != size) {
            return Err(Error::Dimension { expected: size, got: m.size() });
        }
        Ok(SymPencil { matrices, size })
    }

    /// From a symmetric matrix of linear forms.
    pub fn from_forms(rows: &[Vec<MPoly>]) -> Result<Self> {
        let n = rows.len();
        let nvars = rows.first().and_then(|r| r.first()).map(|p| p.nvars()).ok_or_else(|| Error::Invalid("empty pencil".into()))?;
        let mut mats = vec![vec![vec![Q::zero(); n]; n]; nvars];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Dimension { expected: n, got: row.len() });
            }
            for (j, p) in row.iter().enumerate() {
                if p.nvars() != nvars {
                    return Err(Error::Dimension { expected: nvars, got: p.nvars() });
                }
                for (e, c) in p.terms() {
                    if e.iter().sum::<u32>() != 1 {
                        return Err(Error::DegreeMismatch(format!("entry ({i},{j}) is not a linear form")));
                    }
                    let v = e.iter().position(|&x| x == 1).unwrap();
                    mats[v][i][j] = c.clone();
                }
            }
        }
        SymPencil::new(mats.into_iter().map(SymRatMatrix::new).collect::<Result<Vec<_>>>()?)
    }

    /// One row per line, entries separated by commas, in the polynomial text
    /// format. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let mut rows = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split(',')
                .map(|s| {
                    parse_poly(s, Some(nvars)).map_err(|e| match e {
                        Error::Parse { col, msg, .. } => Error::Parse { line: ln + 1, col, msg },
                        other => other,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Self::from_forms(&rows)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn nvars(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[SymRatMatrix] {
        &self.matrices
    }

    pub fn eval(&self, x: &[Q]) -> Result<SymRatMatrix> {
        if x.len() != self.nvars() {
            return Err(Error::Dimension { expected: self.nvars(), got: x.len() });
        }
        let mut acc = SymRatMatrix::zero(self.size);
        for (m, xi) in self.matrices.iter().zip(x) {
            if !xi.is_zero() {
                acc = acc.add_scaled(m, xi);
            }
        }
        Ok(acc)
    }

    pub fn to_forms(&self) -> Vec<Vec<MPoly>> {
        let n = self.size;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c: Vec<Q> = self.matrices.iter().map(|m| m.get(i, j).clone()).collect();
                        MPoly::linear_form(&c)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let matrices = self
            .matrices
            .iter()
            .map(|m| m.rows().iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect())
            .collect();
        serde_json::to_value(PencilJson { size: self.size, nvars: self.nvars(), matrices }).expect("pencil json")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let pj: PencilJson = serde_json::from_value(v.clone()).map_err(|e| Error::Format(e.to_string()))?;
        if pj.matrices.len() != pj.nvars {
            return Err(Error::Dimension { expected: pj.nvars, got: pj.matrices.len() });
        }
        let mats = pj
            .matrices
            .iter()
            .map(|m| {
                let rows = m.iter().map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
                SymRatMatrix::new(rows)
            })
            .collect::<Result<Vec<_>>>()?;
        let p = SymPencil::new(mats)?;
        if p.size != pj.size {
            return Err(Error::Dimension { expected: pj.size, got: p.size });
        }
        Ok(p)
    }

    /// Reads JSON or the row-per-line text form.
    pub fn read(text: &str, nvars: Option<usize>) -> Result<Self> {
        let t = text.trim_start();
        if t.starts_with('{') {
            let v: serde_json::Value = serde_json::from_str(t).map_err(|e| Error::Format(e.to_string()))?;
            return Self::from_json(&v);
        }
        let nvars = nvars.ok_or_else(|| Error::Format("text pencils need the number of variables".into()))?;
        Self::parse(text, nvars)
    }
}

pub fn pencil_det(p: &SymPencil) -> MPoly {
    let forms = p.to_forms();
    det_laplace(&forms, &MPoly::zero(p.nvars()))
}

/// Adjugate of a square matrix of polynomials: adj_ij = (−1)^{i+j} M_ji.
pub fn adjugate(a: &[Vec<MPoly>]) -> Vec<Vec<MPoly>> {
    let n = a.len();
    let like = a[0][0].clone();
    let minor = |skip_r: usize, skip_c: usize| -> MPoly {
        let sub: Vec<Vec<MPoly>> = (0..n)
            .filter(|&r| r != skip_r)
            .map(|r| (0..n).filter(|&c| c != skip_c).map(|c| a[r][c].clone()).collect())
            .collect();
        det_laplace(&sub, &like)
    };
    let mut adj = vec![vec![MPoly::zero(like.nvars()); n]; n];
    for i in 0..n {
        for j in 0..n {
            let m = minor(j, i);
            adj[i][j] = if (i + j) % 2 == 0 { m } else { -&m };
        }
    }
    adj
}

/// A·adj(A) = det(A)·I, exactly.
pub fn adjugate_identity_holds(p: &SymPencil) -> bool {
    let a = p.to_forms();
    let adj = adjugate(&a);
    let det = pencil_det(p);
    let n = a.len();
    let zero = MPoly::zero(p.nvars());
    (0..n).all(|i| {
        (0..n).all(|j| {
            let s = (0..n).fold(zero.clone(), |acc, k| &acc + &(&a[i][k] * &adj[k][j]));
            if i == j {
                s == det
            } else {
                s.is_zero()
            }
        })
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub monomial: Vec<u32>,
    #[serde(with = "qser")]
    pub det_coeff: Q,
    #[serde(with = "qser")]
    pub expected_coeff: Q,
}

#[derive(Clone, Debug, Serialize)]
pub struct DefiniteRepReport {
    /// det A(x) = scalar·f(x) when the identity holds
    #[serde(with = "crate::io::qopt_ser")]
    pub scalar: Option<Q>,
    pub identity_holds: bool,
    pub mismatch: Option<Mismatch>,
    pub definiteness: Definiteness,
    pub definite: bool,
    #[serde(with = "qser")]
    pub det_at_e: Q,
    #[serde(with = "qser")]
    pub f_at_e: Q,
    #[serde(with = "qvec_ser")]
    pub e: Vec<Q>,
}

pub fn verify_definite_rep(p: &SymPencil, f: &MPoly, e: &[Q]) -> Result<DefiniteRepReport> {
    if f.nvars() != p.nvars() {
        return Err(Error::Dimension { expected: p.nvars(), got: f.nvars() });
    }
    match f.homogeneous_degree() {
        Some(d) if d as usize == p.size() => {}
        Some(d) => return Err(Error::DegreeMismatch(format!("f has degree {d}, pencil has size {}", p.size()))),
        None if f.is_zero() => return Err(Error::ZeroPolynomial),
        None => return Err(Error::NotHomogeneous),
    }
    let det = pencil_det(p);
    let (lm, lc) = f.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
    let c = det.coeff(&lm) / &lc;
    let expected = f.scale(&c);
    let diff = &det - &expected;
    let (identity_holds, scalar, mismatch) = match diff.leading_term() {
        None if !c.is_zero() => (true, Some(c.clone()), None),
        None => (false, None, None),
        Some((m, _)) => {
            let m = m.clone();
            (false, None, Some(Mismatch { det_coeff: det.coeff(&m), expected_coeff: expected.coeff(&m), monomial: m }))
        }
    };
    let a_e = p.eval(e)?;
    let definiteness = sym_ldlt(&a_e).definiteness;
    Ok(DefiniteRepReport {
        scalar,
        identity_holds,
        mismatch,
        definite: definiteness.is_definite(),
        definiteness,
        det_at_e: det.eval(e)?,
        f_at_e: f.eval(e)?,
        e: e.to_vec(),
    })
}

/// (k+1)×(k+1) Hankel pencil, entry (i, j) = x_{i+j}.
pub fn hankel_pencil(k: usize) -> Result<SymPencil> {
    if k < 1 {
        return Err(Error::Invalid("hankel pencil needs k >= 1".into()));
    }
    let n = k + 1;
    let mats = (0..2 * k + 1)
        .map(|m| {
            let mut a = vec![vec![Q::zero(); n]; n];
            for (i, row) in a.iter_mut().enumerate() {
                if m >= i && m - i < n {
                    row[m - i] = Q::one();
                }
            }
            SymRatMatrix::new(a)
        })
        .collect::<Result<Vec<_>>>()?;
    SymPencil::new(mats)
}

/// Moments of the uniform probability measure on [−1, 1]: 1/(i+1) for even
/// i, 0 for odd i. H_k at this point is positive definite.
pub fn uniform_moments(count: usize) -> Vec<Q> {
    (0..count)
        .map(|i| if i % 2 == 0 { Q::new(1.into(), (i as i64 + 1).into()) } else { Q::zero() })
        .collect()
}

/// Symmetric matrix of homogeneous forms of one common degree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FormMatrix {
    pub nvars: usize,
    pub degree: u32,
    #[serde(serialize_with = "forms_str")]
    pub entries: Vec<Vec<MPoly>>,
}

fn forms_str<S: serde::Serializer>(m: &[Vec<MPoly>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect();
    v.serialize(s)
}

impl FormMatrix {
    pub fn new(entries: Vec<Vec<MPoly>>) -> Result<Self> {
        let n = entries.len();
        let nvars = entries.first().and_then(|r| r.first()).map(|p| p.nvars()).ok_or_else(|| Error::Invalid("empty matrix".into()))?;
        let mut degree = None;
        for i in 0..n {
            if entries[i].len() != n {
                return Err(Error::Dimension { expected: n, got: entries[i].len() });
            }
            for j in 0..n {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::NotSymmetric(i, j));
                }
                let p = &entries[i][j];
                if p.is_zero() {
                    continue;
                }
                let d = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
                match degree {
                    None => degree = Some(d),
                    Some(d0) if d0 != d => {
                        return Err(Error::DegreeMismatch(format!("entry ({i},{j}) has degree {d}, expected {d0}")))
                    }
                    _ => {}
                }
            }
        }
        Ok(FormMatrix { nvars, degree: degree.unwrap_or(0), entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }
}

/// Something whose 2×2 minors should all vanish on V(f).
pub trait RankOneTarget {
    fn rank_one_entries(&self) -> Vec<Vec<MPoly>>;
}

/// For a pencil the adjugate is the matrix of rank one on V(det).
impl RankOneTarget for SymPencil {
    fn rank_one_entries(&self) -> Vec<Vec<MPoly>> {
        adjugate(&self.to_forms())
    }
}

impl RankOneTarget for FormMatrix {
    fn rank_one_entries(&self) -> Vec<Vec<MPoly>> {
        self.entries.clone()
    }
}

/// First 2×2 minor (rows i<k, cols j<l) not divisible by f.
pub fn first_nondivisible_minor(m: &[Vec<MPoly>], f: &MPoly) -> Result<Option<[usize; 4]>> {
    let n = m.len();
    for i in 0..n {
        for k in i + 1..n {
            for j in 0..n {
                for l in j + 1..n {
                    let minor = &(&m[i][j] * &m[k][l]) - &(&m[i][l] * &m[k][j]);
                    if !f.divides(&minor)? {
                        return Ok(Some([i, k, j, l]));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// True iff every 2×2 minor of the adjugate (pencils) or of the matrix
/// itself (form matrices) is divisible by f.
pub fn adjugate_rank1_check<T: RankOneTarget>(m: &T, f: &MPoly) -> Result<bool> {
    Ok(first_nondivisible_minor(&m.rank_one_entries(), f)?.is_none())
}

#[derive(Clone, Debug)]
pub struct DixonProblem {
    pub f: MPoly,
    pub first_row: Vec<MPoly>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum DixonOutcome {
    Complete {
        matrix: FormMatrix,
        /// Dimension of the solution space of each cell's linear system;
        /// a positive value means the returned entry is one representative.
        nullity: usize,
        h_degree: u32,
        mu_degree: u32,
    },
    Infeasible {
        i: usize,
        j: usize,
    },
}

/// Exponent vectors of degree d in n variables, ascending lex.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == n {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in 0..=d {
            cur.push(a);
            rec(n, d - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Solves h₁₁·h_ij − μ_ij·f = h₁i·h₁j for every cell i ≤ j off the first row.
/// All cells share one coefficient matrix, so one elimination serves all.
pub fn dixon_complete(d: &DixonProblem) -> Result<DixonOutcome> {
    let n = d.first_row.len();
    if n < 2 {
        return Err(Error::Invalid("first row needs at least two entries".into()));
    }
    let nv = d.f.nvars();
    let df = d.f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let h11 = &d.first_row[0];
    if h11.is_zero() {
        return Err(Error::Invalid("h11 vanishes".into()));
    }
    let dh = h11.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    for (j, h) in d.first_row.iter().enumerate() {
        if h.nvars() != nv {
            return Err(Error::Dimension { expected: nv, got: h.nvars() });
        }
        if !h.is_zero() && h.homogeneous_degree() != Some(dh) {
            return Err(Error::DegreeMismatch(format!("first-row entry {j} is not a form of degree {dh}")));
        }
    }
    if 2 * dh < df {
        return Err(Error::DegreeMismatch(format!("2·deg h = {} < deg f = {df}", 2 * dh)));
    }
    if d.f.divides(h11)? {
        return Err(Error::Invalid("h11 vanishes on the hypersurface".into()));
    }
    let dmu = 2 * dh - df;
    let hm = monomials(nv, dh);
    let mm = monomials(nv, dmu);
    let target = monomials(nv, 2 * dh);
    let row_of: HashMap<&Vec<u32>, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let ncols = hm.len() + mm.len();
    let mut a = vec![vec![Q::zero(); ncols]; target.len()];
    let neg_f = -&d.f;
    for (col, (mono, poly)) in hm
        .iter()
        .map(|m| (m, h11))
        .chain(mm.iter().map(|m| (m, &neg_f)))
        .enumerate()
    {
        for (e, c) in poly.terms() {
            let ex: Vec<u32> = e.iter().zip(mono).map(|(x, y)| x + y).collect();
            a[row_of[&ex]][col] += c;
        }
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let rhs: Vec<Vec<Q>> = cells
        .iter()
        .map(|&(i, j)| {
            let mut b = vec![Q::zero(); target.len()];
            for (e, c) in (&d.first_row[i] * &d.first_row[j]).terms() {
                b[row_of[e]] += c;
            }
            b
        })
        .collect();
    let sol = solve_multi(&a, &rhs);
    let mut entries = vec![vec![MPoly::zero(nv); n]; n];
    for j in 0..n {
        entries[0][j] = d.first_row[j].clone();
        entries[j][0] = d.first_row[j].clone();
    }
    for (&(i, j), s) in cells.iter().zip(&sol.solutions) {
        let Some(x) = s else {
            return Ok(DixonOutcome::Infeasible { i, j });
        };
        let h = MPoly::from_terms(nv, hm.iter().cloned().zip(x.iter().cloned()));
        entries[i][j] = h.clone();
        entries[j][i] = h;
    }
    Ok(DixonOutcome::Complete { matrix: FormMatrix::new(entries)?, nullity: sol.nullity, h_degree: dh, mu_degree: dmu })
}
