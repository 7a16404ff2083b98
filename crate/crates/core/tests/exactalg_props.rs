use hypsec_core::exactalg::linalg::principal_minors;
use hypsec_core::exactalg::roots::{isolate_to_width, total_real_roots, Ext, SturmChain};
use hypsec_core::exactalg::{
    classify_by_minors, q, qf, real_root_count, sym_ldlt, Definiteness, MPoly, RealRoots, SymRatMatrix, UPoly, Q,
};
use nalgebra::DMatrix;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn upoly(c: Vec<i64>) -> UPoly {
    UPoly::from_ints(&c)
}

fn nonzero_poly() -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-9i64..=9, 1..7).prop_map(upoly).prop_filter("nonzero", |p| !p.is_zero())
}

fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -5i64..=5), 1..6)
        .prop_map(|ts| MPoly::from_terms(3, ts.into_iter().map(|(e, c)| (e, q(c)))))
}

fn bound() -> impl Strategy<Value = (Ext, Ext)> {
    (-6i64..=6, 1i64..=8).prop_map(|(a, w)| (Ext::Fin(qf(a, 2)), Ext::Fin(qf(a + w, 2))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn root_count_is_multiplicative(p in nonzero_poly(), r in nonzero_poly(), (lo, hi) in bound()) {
        let pr = &p * &r;
        for (a, b) in [(Ext::NegInf, Ext::PosInf), (lo, hi)] {
            prop_assert_eq!(
                real_root_count(&pr, &a, &b).unwrap(),
                real_root_count(&p, &a, &b).unwrap() + real_root_count(&r, &a, &b).unwrap()
            );
        }
    }

    #[test]
    fn sturm_count_matches_isolation(p in nonzero_poly()) {
        let sqf = p.squarefree_part();
        let rr = RealRoots::new(&p).unwrap();
        prop_assert_eq!(SturmChain::new(&sqf).count(&Ext::NegInf, &Ext::PosInf), rr.len());
        prop_assert_eq!(rr.count_with_multiplicity(), total_real_roots(&p).unwrap());
    }

    #[test]
    fn exact_division_recovers_cofactor(f in mpoly(), g in mpoly()) {
        prop_assume!(!f.is_zero());
        let fg = &f * &g;
        prop_assert_eq!(fg.divide_exact(&f).unwrap(), Some(g));
    }

    #[test]
    fn ldlt_matches_minors_on_random_4x4(entries in prop::collection::vec(-2i64..=2, 10)) {
        let m = from_upper(4, &entries);
        prop_assert_eq!(sym_ldlt(&m).definiteness, classify_by_minors(&m));
    }
}

fn from_upper(n: usize, v: &[i64]) -> SymRatMatrix {
    let mut a = vec![vec![q(0); n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            a[i][j] = q(v[k]);
            a[j][i] = q(v[k]);
            k += 1;
        }
    }
    SymRatMatrix::new(a).unwrap()
}

fn check_ldlt(m: &SymRatMatrix) {
    let r = sym_ldlt(m);
    let oracle = classify_by_minors(m);
    assert_eq!(r.definiteness, oracle, "{:?}", m.rows());
    if let Some(x) = &r.negative {
        assert!(m.quadratic_form(x) < Q::zero());
    }
    if let Some(x) = &r.positive {
        assert!(m.quadratic_form(x) > Q::zero());
    }
    if oracle != Definiteness::Indefinite {
        let rank = principal_minors(m).iter().filter(|(_, d)| !d.is_zero()).map(|(s, _)| s.count_ones()).max();
        assert_eq!(r.rank, rank.unwrap_or(0) as usize);
    }
}

fn sweep(n: usize) -> usize {
    let slots = n * (n + 1) / 2;
    let total = 5usize.pow(slots as u32);
    let mut v = vec![0i64; slots];
    for code in 0..total {
        let mut c = code;
        for x in v.iter_mut() {
            *x = (c % 5) as i64 - 2;
            c /= 5;
        }
        check_ldlt(&from_upper(n, &v));
    }
    total
}

#[test]
fn ldlt_exhaustive_up_to_3() {
    assert_eq!(sweep(1) + sweep(2) + sweep(3), 5 + 125 + 15625);
}

/// All 5¹⁰ symmetric 4×4 matrices over {−2..2}; minutes even in release.
#[test]
#[ignore]
fn ldlt_exhaustive_4() {
    assert_eq!(sweep(4), 9_765_625);
}

#[test]
fn ldlt_random_4x4_low_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for _ in 0..2000 {
        let s = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mut a = vec![vec![q(0); 4]; 4];
        for _ in 0..rng.gen_range(0..=3) {
            let u: Vec<i64> = (0..4).map(|_| rng.gen_range(-2..=2)).collect();
            for i in 0..4 {
                for j in 0..4 {
                    a[i][j] += q(s * u[i] * u[j]);
                }
            }
        }
        check_ldlt(&SymRatMatrix::new(a).unwrap());
    }
}

fn numeric_real_roots(p: &UPoly) -> Vec<f64> {
    let n = p.degree();
    let c: Vec<f64> = p.monic().coeffs().iter().map(|x| x.to_f64().unwrap()).collect();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -c[i];
    }
    let mut r: Vec<f64> =
        m.complex_eigenvalues().iter().filter(|z| z.im.abs() <= 1e-6 * z.re.abs().max(1.0)).map(|z| z.re).collect();
    r.sort_by(|a, b| a.partial_cmp(b).unwrap());
    r
}

#[test]
fn refined_isolation_matches_numeric_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let eps = qf(1, 1 << 20);
    for i in 0..1000 {
        let deg = rng.gen_range(1..=8);
        let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-10..=10)).collect();
        if c[deg] == 0 {
            c[deg] = 1;
        }
        let p = upoly(c).squarefree_part();
        if p.degree() == 0 {
            continue;
        }
        let iso = isolate_to_width(&p, &eps).unwrap();
        let mids: Vec<f64> =
            iso.intervals.iter().map(|r| ((&r.lo + &r.hi) / q(2)).to_f64().unwrap()).collect();
        let num = numeric_real_roots(&p);
        assert_eq!(mids.len(), num.len(), "poly {i}: {p}");
        for (a, b) in mids.iter().zip(&num) {
            assert!((a - b).abs() <= 1e-4 * b.abs().max(1.0), "poly {i}: {p}: {a} vs {b}");
        }
    }
}
