//! Exact symmetric linear algebra: LDLᵀ inertia, principal minors, determinants
//! over arbitrary rings and fields, and rational row reduction.

use std::collections::HashMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::ring::{sign, Field, Ring, Q};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymRatMatrix {
    n: usize,
    entries: Vec<Vec<Q>>,
}

impl SymRatMatrix {
    pub fn new(entries: Vec<Vec<Q>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Dimension { expected: n, got: row.len() });
            }
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymRatMatrix { n, entries })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        SymRatMatrix::new(rows.iter().map(|r| super::ring::qvec(r)).collect())
    }

    pub fn zero(n: usize) -> Self {
        SymRatMatrix { n, entries: vec![vec![Q::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SymRatMatrix::zero(n);
        for i in 0..n {
            m.entries[i][i] = Q::from_integer(1.into());
        }
        m
    }

    pub fn diag(d: &[Q]) -> Self {
        let mut m = SymRatMatrix::zero(d.len());
        for (i, x) in d.iter().enumerate() {
            m.entries[i][i] = x.clone();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|x| x.is_zero())
    }

    /// self + s·o
    pub fn add_scaled(&self, o: &SymRatMatrix, s: &Q) -> SymRatMatrix {
        assert_eq!(self.n, o.n);
        SymRatMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y * s).collect())
                .collect(),
        }
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> Vec<Vec<Q>> {
        idx.iter()
            .map(|&i| idx.iter().map(|&j| self.entries[i][j].clone()).collect())
            .collect()
    }

    /// xᵀ M x
    pub fn quadratic_form(&self, x: &[Q]) -> Q {
        let mut acc = Q::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                acc += &x[i] * &self.entries[i][j] * &x[j];
            }
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Definiteness {
    PosDef,
    NegDef,
    PosSemi,
    NegSemi,
    Indefinite,
}

impl Definiteness {
    pub fn is_definite(self) -> bool {
        matches!(self, Definiteness::PosDef | Definiteness::NegDef)
    }

    pub fn is_psd(self) -> bool {
        matches!(self, Definiteness::PosDef | Definiteness::PosSemi)
    }
}

/// Outcome of the pivoted LDLᵀ. `pivots` lists (index, d) in elimination order;
/// for an indefinite matrix `positive`/`negative` are vectors x with xᵀMx of that sign.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LdltReport {
    pub definiteness: Definiteness,
    pub rank: usize,
    #[serde(with = "crate::io::qpairs_ser")]
    pub pivots: Vec<(usize, Q)>,
    #[serde(with = "crate::io::qvec_opt_ser")]
    pub positive: Option<Vec<Q>>,
    #[serde(with = "crate::io::qvec_opt_ser")]
    pub negative: Option<Vec<Q>>,
}

/// Exact classification by symmetric (diagonal) pivoting. The reduction is a
/// congruence MT = Tᵀ M T, so Sylvester's law of inertia makes the pivot signs
/// decisive.
pub fn sym_ldlt(m: &SymRatMatrix) -> LdltReport {
    let n = m.n;
    let mut a = m.entries.clone();
    let mut t: Vec<Vec<Q>> = SymRatMatrix::identity(n).entries;
    let mut active: Vec<usize> = (0..n).collect();
    let mut pivots: Vec<(usize, Q)> = Vec::new();
    let mut vecs: Vec<Vec<Q>> = Vec::new();
    let col = |t: &Vec<Vec<Q>>, j: usize| -> Vec<Q> { t.iter().map(|r| r[j].clone()).collect() };

    loop {
        let p = active.iter().position(|&i| !a[i][i].is_zero());
        let Some(pp) = p else {
            // Zero diagonal left. A nonzero off-diagonal entry spans a
            // hyperbolic plane; substituting x_i -> x_i + x_j puts 2·a_ij on
            // the diagonal and elimination carries on.
            let pair = active.iter().enumerate().find_map(|(x, &i)| {
                active[x + 1..].iter().find(|&&j| !a[i][j].is_zero()).map(|&j| (i, j))
            });
            let Some((i, j)) = pair else { break };
            for &k in &active {
                let v = a[k][j].clone();
                a[k][i] += v;
            }
            for &k in &active {
                let v = a[j][k].clone();
                a[i][k] += v;
            }
            for row in t.iter_mut() {
                let v = row[j].clone();
                row[i] += v;
            }
            continue;
        };
        let p = active.remove(pp);
        let d = a[p][p].clone();
        for &j in &active {
            let l = &a[p][j] / &d;
            if l.is_zero() {
                continue;
            }
            for row in t.iter_mut() {
                let tp = row[p].clone();
                row[j] -= &l * tp;
            }
        }
        for &j in &active {
            for &k in &active {
                let v = &a[j][p] * &a[p][k] / &d;
                a[j][k] -= v;
            }
        }
        for &j in &active {
            a[p][j] = Q::zero();
            a[j][p] = Q::zero();
        }
        vecs.push(col(&t, p));
        pivots.push((p, d));
    }

    let rank = pivots.len();
    let pos = pivots.iter().position(|(_, d)| sign(d) > 0);
    let neg = pivots.iter().position(|(_, d)| sign(d) < 0);
    let mut rep = LdltReport {
        definiteness: Definiteness::Indefinite,
        rank,
        pivots,
        positive: pos.map(|i| vecs[i].clone()),
        negative: neg.map(|i| vecs[i].clone()),
    };
    rep.definiteness = match (pos.is_some(), neg.is_some()) {
        (true, true) => Definiteness::Indefinite,
        (_, false) if rank == n => Definiteness::PosDef,
        (false, true) if rank == n => Definiteness::NegDef,
        (_, false) => Definiteness::PosSemi,
        (false, true) => Definiteness::NegSemi,
    };
    rep
}

/// All principal minors, keyed by index bitmask (bit i = row/column i).
pub fn principal_minors(m: &SymRatMatrix) -> Vec<(u32, Q)> {
    let n = m.n;
    assert!(n < 32);
    (1u32..(1u32 << n))
        .map(|mask| {
            let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            (mask, det_field(m.principal_submatrix(&idx)))
        })
        .collect()
}

/// Brute-force oracle: PSD iff every principal minor is ≥ 0, NSD iff
/// (−1)^|I| det M_I ≥ 0 for every I. The zero matrix counts as pos-semi.
pub fn classify_by_minors(m: &SymRatMatrix) -> Definiteness {
    let n = m.n;
    if n == 0 {
        return Definiteness::PosDef;
    }
    let minors = principal_minors(m);
    let psd = minors.iter().all(|(_, d)| sign(d) >= 0);
    let nsd = minors
        .iter()
        .all(|(mask, d)| if mask.count_ones() % 2 == 0 { sign(d) >= 0 } else { sign(d) <= 0 });
    let full = minors.last().map(|(_, d)| !d.is_zero()).unwrap_or(true);
    match (psd, nsd) {
        (true, true) => Definiteness::PosSemi,
        (true, false) if full => Definiteness::PosDef,
        (true, false) => Definiteness::PosSemi,
        (false, true) if full => Definiteness::NegDef,
        (false, true) => Definiteness::NegSemi,
        (false, false) => Definiteness::Indefinite,
    }
}

/// Determinant by Gaussian elimination over a field.
pub fn det_field<F: Field>(mut a: Vec<Vec<F>>) -> F {
    let n = a.len();
    if n == 0 {
        panic!("det_field needs a nonempty matrix to fix the scalar context");
    }
    let like = a[0][0].clone();
    let mut det = F::one_like(&like);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].vanishes()) else {
            return F::zero_like(&like);
        };
        if p != c {
            a.swap(p, c);
            det = det.neg();
        }
        let piv = a[c][c].clone();
        det = det.mul(&piv);
        let inv = piv.inv();
        for r in c + 1..n {
            if a[r][c].vanishes() {
                continue;
            }
            let f = a[r][c].mul(&inv);
            for k in c..n {
                let v = f.mul(&a[c][k]);
                a[r][k] = a[r][k].sub(&v);
            }
        }
    }
    det
}

/// Determinant by Laplace expansion along rows with memoized minors, for
/// matrices over rings without division (polynomial entries).
pub fn det_laplace<R: Ring>(a: &[Vec<R>], like: &R) -> R {
    let n = a.len();
    assert!(n <= 63);
    if n == 0 {
        return R::one_like(like);
    }
    let mut memo: HashMap<u64, R> = HashMap::new();
    laplace(a, 0, (1u64 << n) - 1, like, &mut memo)
}

fn laplace<R: Ring>(a: &[Vec<R>], row: usize, cols: u64, like: &R, memo: &mut HashMap<u64, R>) -> R {
    if cols.count_ones() == 1 {
        return a[row][cols.trailing_zeros() as usize].clone();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = R::zero_like(like);
    let mut pos = 0;
    for j in 0..a.len() {
        if cols >> j & 1 == 0 {
            continue;
        }
        let entry = &a[row][j];
        if !entry.vanishes() {
            let minor = laplace(a, row + 1, cols & !(1u64 << j), like, memo);
            let term = entry.mul(&minor);
            acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        pos += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Reduced row echelon form in place; returns pivot columns. Only the first
/// `ncols` columns are eligible as pivots (the rest are right-hand sides).
pub fn rref(a: &mut [Vec<Q>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let prow = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of { x : A x = 0 } for an m×n rational matrix.
pub fn nullspace(a: &[Vec<Q>], n: usize) -> Vec<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = a.to_vec();
    let pivots = rref(&mut m, n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); n];
            v[f] = Q::from_integer(1.into());
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Result of solving A x = b_k for several right-hand sides at once.
#[derive(Clone, Debug)]
pub struct MultiSolve {
    /// One entry per right-hand side: `None` if inconsistent, otherwise the
    /// solution with every free variable set to zero.
    pub solutions: Vec<Option<Vec<Q>>>,
    pub nullity: usize,
}

pub fn solve_multi(a: &[Vec<Q>], rhs: &[Vec<Q>]) -> MultiSolve {
    let n = a.first().map(|r| r.len()).unwrap_or(0);
    let k = rhs.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(rhs.iter().map(|b| b[i].clone()));
            r
        })
        .collect();
    let pivots = rref(&mut m, n);
    let rank = pivots.len();
    let solutions = (0..k)
        .map(|j| {
            if m[rank..].iter().any(|row| !row[n + j].is_zero()) {
                return None;
            }
            let mut x = vec![Q::zero(); n];
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = m[r][n + j].clone();
            }
            Some(x)
        })
        .collect();
    MultiSolve { solutions, nullity: n - rank }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ring::q;

    #[test]
    fn identity_and_diag() {
        assert_eq!(sym_ldlt(&SymRatMatrix::identity(3)).definiteness, Definiteness::PosDef);
        let d = SymRatMatrix::diag(&[q(1), q(0)]);
        let r = sym_ldlt(&d);
        assert_eq!(r.definiteness, Definiteness::PosSemi);
        assert_eq!(sym_ldlt(&SymRatMatrix::diag(&[q(-1), q(-2)])).definiteness, Definiteness::NegDef);
    }

    #[test]
    fn zero_diagonal_is_indefinite_with_witnesses() {
        let m = SymRatMatrix::from_ints(&[&[0, 2, 0], &[2, 0, 0], &[0, 0, 1]]).unwrap();
        let r = sym_ldlt(&m);
        assert_eq!(r.definiteness, Definiteness::Indefinite);
        assert!(sign(&m.quadratic_form(r.positive.as_ref().unwrap())) > 0);
        assert!(sign(&m.quadratic_form(r.negative.as_ref().unwrap())) < 0);
    }

    #[test]
    fn leading_minors_are_not_enough() {
        // leading minors 0, 0 but a negative 1x1 minor further down
        let m = SymRatMatrix::from_ints(&[&[0, 0], &[0, -1]]).unwrap();
        assert_eq!(sym_ldlt(&m).definiteness, Definiteness::NegSemi);
        assert_eq!(classify_by_minors(&m), Definiteness::NegSemi);
    }

    #[test]
    fn laplace_matches_gauss() {
        let a = vec![
            vec![q(2), q(-1), q(0), q(3)],
            vec![q(1), q(4), q(-2), q(0)],
            vec![q(0), q(5), q(1), q(1)],
            vec![q(7), q(0), q(2), q(-3)],
        ];
        assert_eq!(det_laplace(&a, &q(0)), det_field(a.clone()));
    }

    #[test]
    fn nullspace_and_solve() {
        let a = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.iter().all(|r| r.iter().zip(v).map(|(x, y)| x * y).sum::<Q>().is_zero()));
        }
        let s = solve_multi(&a, &[vec![q(1), q(2)], vec![q(1), q(3)]]);
        assert_eq!(s.nullity, 2);
        assert_eq!(s.solutions[0], Some(vec![q(1), q(0), q(0)]));
        assert_eq!(s.solutions[1], None);
    }
}
