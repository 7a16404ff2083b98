use hypsec_core::curves::{elliptic_quintic, eval_point, random_point_on, CurveParam};
use hypsec_core::detrep::{
    adjugate, adjugate_identity_holds, adjugate_rank1_check, dixon_complete, hankel_pencil, pencil_det,
    uniform_moments, verify_definite_rep, DixonOutcome, DixonProblem, SymPencil,
};
use hypsec_core::exactalg::ring::sign;
use hypsec_core::exactalg::{q, qf, RealQuad, SymRatMatrix, Q};
use hypsec_core::fixtures::{e_quintic, elliptic_pencil, quintic, slack_pencil, slack_shadow};
use hypsec_core::hyperbolic::{certify_hyperbolic, CertStatus};
use hypsec_core::shadows::{shadow_membership, shadow_size_bounds, slack_free_separator, ShadowRep};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn hankel_determinants_are_hyperbolic() {
    for k in 1..=4 {
        let f = pencil_det(&hankel_pencil(k).unwrap());
        let c = certify_hyperbolic(&f, &uniform_moments(2 * k + 1), 30, k as u64).unwrap();
        assert_eq!(c.status, CertStatus::CertifiedOnSamples, "k = {k}");
    }
}

#[test]
fn definite_rep_orientation() {
    let f = quintic();
    let p = elliptic_pencil();
    let r = verify_definite_rep(&p, &f, &e_quintic()).unwrap();
    let c = r.scalar.clone().unwrap();
    assert!(r.identity_holds && r.definite);
    assert_eq!(r.det_at_e, &c * &r.f_at_e);
    // det A(e) has the sign of (±1)^5 for a definite 5×5 matrix
    let s = if r.definiteness == hypsec_core::exactalg::Definiteness::PosDef { 1 } else { -1 };
    assert_eq!(sign(&r.det_at_e), s);
    // Hankel pencils represent their own determinant
    for k in 1..=3 {
        let h = hankel_pencil(k).unwrap();
        let r = verify_definite_rep(&h, &pencil_det(&h), &uniform_moments(2 * k + 1)).unwrap();
        assert!(r.identity_holds && r.definite);
        assert_eq!(r.scalar, Some(q(1)));
    }
}

#[test]
fn perturbed_pencil_reports_first_mismatch() {
    let p = elliptic_pencil();
    let mut mats: Vec<SymRatMatrix> = p.matrices().to_vec();
    let mut rows = mats[1].rows().to_vec();
    rows[0][0] += q(1);
    mats[1] = SymRatMatrix::new(rows).unwrap();
    let bad = SymPencil::new(mats).unwrap();
    let r = verify_definite_rep(&bad, &quintic(), &e_quintic()).unwrap();
    assert!(!r.identity_holds);
    let m = r.mismatch.unwrap();
    assert_ne!(m.det_coeff, m.expected_coeff);
}

#[test]
fn adjugate_identity_on_pencil_fixtures() {
    let mut all = vec![elliptic_pencil(), slack_pencil()];
    all.extend((1..=4).map(|k| hankel_pencil(k).unwrap()));
    for p in &all {
        assert!(adjugate_identity_holds(p));
    }
    assert!(adjugate_rank1_check(&elliptic_pencil(), &quintic()).unwrap());
}

#[test]
fn dixon_output_invariants() {
    let f = quintic();
    let adj = adjugate(&elliptic_pencil().to_forms());
    for row in [0, 2] {
        // reorder so that the diagonal entry of the chosen row comes first
        let mut perm: Vec<usize> = (0..5).filter(|&i| i != row).collect();
        perm.insert(0, row);
        let first_row: Vec<_> = perm.iter().map(|&j| adj[row][j].clone()).collect();
        let out = dixon_complete(&DixonProblem { f: f.clone(), first_row: first_row.clone() }).unwrap();
        let DixonOutcome::Complete { matrix, h_degree, nullity, .. } = out else { panic!("row {row}: {out:?}") };
        assert_eq!(h_degree, 4);
        assert_eq!(matrix.entries[0], first_row);
        if nullity == 0 {
            // the completion is unique, so it is the permuted adjugate
            for i in 0..5 {
                for j in 0..5 {
                    assert_eq!(matrix.entries[i][j], adj[perm[i]][perm[j]]);
                }
            }
        }
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(matrix.entries[i][j], matrix.entries[j][i]);
                let e = &matrix.entries[i][j];
                assert!(e.is_zero() || e.homogeneous_degree() == Some(4));
            }
        }
        assert!(adjugate_rank1_check(&matrix, &f).unwrap());
        // contact interlacer: h11 has even degree 2(k+1) with k = 1
        assert_eq!(matrix.entries[0][0].homogeneous_degree(), Some(4));
    }
}

fn block_extend(p: &SymPencil) -> SymPencil {
    // M ⊕ [x0]: the new diagonal entry is the first visible variable
    let n = p.size();
    let mats = p
        .matrices()
        .iter()
        .enumerate()
        .map(|(v, m)| {
            let mut rows: Vec<Vec<Q>> = m.rows().iter().map(|r| {
                let mut r = r.clone();
                r.push(q(0));
                r
            }).collect();
            let mut last = vec![q(0); n + 1];
            if v == 0 {
                last[n] = q(1);
            }
            rows.push(last);
            SymRatMatrix::new(rows).unwrap()
        })
        .collect();
    SymPencil::new(mats).unwrap()
}

fn toy() -> ShadowRep {
    let p = SymPencil::parse("x0, x2, 0\nx2, x1, 0\n0, 0, x0 - x2", 3).unwrap();
    ShadowRep::new(p, 1).unwrap()
}

#[test]
fn block_extension_keeps_members() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let base = toy();
    let ext = ShadowRep::new(block_extend(&base.pencil), 1).unwrap();
    let mut members = 0;
    for _ in 0..200 {
        let z = vec![q(rng.gen_range(0..=4)), qf(rng.gen_range(-8..=8), rng.gen_range(1..=3))];
        let a = shadow_membership(&base, &z).unwrap();
        if a.member {
            members += 1;
            let b = shadow_membership(&ext, &z).unwrap();
            assert!(b.member, "{z:?}");
        }
    }
    assert!(members > 10);
}

/// (x² : x : 0 : 1), the midpoint of the conjugate pair over x.
fn atom(x: &Q) -> Vec<Q> {
    vec![x * x, x.clone(), q(0), q(1)]
}

#[test]
fn convex_hull_of_compact_oval() {
    let rep = slack_shadow();
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let c = elliptic_quintic();
    for i in 0..100 {
        // up to three conjugate pairs over x ∈ [−1, 0]
        let n = rng.gen_range(1..=3);
        let ws: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=9)).collect();
        let total: i64 = ws.iter().sum();
        let mut z = vec![q(0); 4];
        for w in &ws {
            let x = qf(-rng.gen_range(0..=40), 40);
            for (zi, ai) in z.iter_mut().zip(atom(&x)) {
                *zi += qf(*w, total) * ai;
            }
        }
        let v = shadow_membership(&rep, &z).unwrap();
        assert!(v.member, "sample {i}: {z:?}");
        assert!(v.slack_witness.is_some() || v.algebraic_witness.is_some());
    }
    // atoms on the other oval are separated by a slack-free minor
    for _ in 0..20 {
        let CurveParam::Branch { x, .. } = random_point_on(&c, 1, &mut rng).unwrap() else { panic!() };
        let v = shadow_membership(&rep, &atom(&x)).unwrap();
        assert!(!v.member, "x = {x}");
        assert!(!v.separator.is_empty());
        let z: Vec<RealQuad> = atom(&x).into_iter().map(RealQuad::rational).collect();
        assert!(slack_free_separator(&rep, &z).unwrap().is_some());
    }
    // the negative of a member is not a member, only its projective class is
    let far = vec![q(-1), q(1), q(0), q(-1)];
    let v = shadow_membership(&rep, &far).unwrap();
    assert!(!v.member && v.negation_member);
    assert!(!v.separator.is_empty());
    let p = eval_point(&c, &CurveParam::Point { x: q(0), y: q(0) }).unwrap();
    assert!(shadow_membership(&rep, &[p[0].clone(), p[2].clone(), p[3].clone(), p[4].clone()]).unwrap().member);
}

#[test]
fn degree_bound_is_monotone() {
    for g in 0..=5 {
        let mut last = 0;
        for d in 1..=30 {
            let b = shadow_size_bounds(d, g).unwrap();
            assert!(b.degree_bound >= last, "d = {d}, g = {g}");
            last = b.degree_bound;
            assert_eq!(b.dim_bound, d + 1);
        }
    }
    assert_eq!(shadow_size_bounds(7, 0).unwrap().degree_bound, 4);
    let b = shadow_size_bounds(5, 1).unwrap();
    assert_eq!((b.degree_bound, b.matrix_size_bound_m_curve, b.matrix_size_bound), (6, Some(6), Some(11)));
    assert_eq!(shadow_size_bounds(5, 2).unwrap().matrix_size_bound, None);
}

#[test]
fn multi_slack_is_refused() {
    let p = SymPencil::parse("x0, x1\nx1, x2", 3).unwrap();
    let rep = ShadowRep::new(p, 2).unwrap();
    assert!(shadow_membership(&rep, &[q(1)]).is_err());
}
