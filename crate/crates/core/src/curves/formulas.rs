//! Closed-form counts: secant degrees, β and χ.

/// Binomial coefficient for integer n of any sign via n(n−1)⋯(n−k+1)/k!,
/// so binom(n, k) = (−1)^k binom(−n−1+k, k) for n < 0. Zero for k < 0.
pub fn gen_binom(n: i64, k: i64) -> i128 {
    if k < 0 {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..k as i128 {
        // r = binom(n, i) here; the next value is again an integer
        r = r * (n as i128 - i) / (i + 1);
    }
    r
}

/// Degree of σ_k(C) for a curve of degree d and genus g:
/// Σ_{j=0}^{k+1} (−1)^j binom(g+2k−d, j) binom(g, k+1−j).
pub fn secant_degree(d: i64, g: i64, k: i64) -> i128 {
    let n = g + 2 * k - d;
    (0..=k + 1)
        .map(|j| {
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * gen_binom(n, j) * gen_binom(g, k + 1 - j)
        })
        .sum()
}

/// The d = 2k+g+2 specialisation:
/// (k+2)·Σ_{i=0}^{k+1} binom(g,i) − g·Σ_{i=0}^{k} binom(g−1,i).
pub fn secant_degree_special(k: i64, g: i64) -> i128 {
    let a: i128 = (0..=k + 1).map(|i| gen_binom(g, i)).sum();
    let b: i128 = if g == 0 { 0 } else { (0..=k).map(|i| gen_binom(g - 1, i)).sum() };
    (k as i128 + 2) * a - g as i128 * b
}

/// (2k+4−g)·2^{g−1}, valid when g ≤ k+1; computed as (2k+4−g)·2^g / 2.
pub fn secant_degree_closed(k: i64, g: i64) -> i128 {
    (2 * k as i128 + 4 - g as i128) * (1i128 << g) / 2
}

/// β(r, m) = binom(m−r, r) + binom(m−r−1, r−1)
pub fn beta(r: i64, m: i64) -> i128 {
    gen_binom(m - r, r) + gen_binom(m - r - 1, r - 1)
}

/// χ = binom(b+n, n) + (a−1)·binom(b+n−1, n−1)
pub fn chi_symprod(a: i64, b: i64, n: i64) -> i128 {
    gen_binom(b + n, n) + (a as i128 - 1) * gen_binom(b + n - 1, n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_of_negative_top() {
        assert_eq!(gen_binom(-2, 2), 3);
        assert_eq!(gen_binom(-2, 3), -4);
        assert_eq!(gen_binom(5, 2), 10);
        assert_eq!(gen_binom(2, 5), 0);
        assert_eq!(gen_binom(3, -1), 0);
        // the reflection rule
        for n in -6..0 {
            for k in 0..6 {
                let s = if k % 2 == 0 { 1 } else { -1 };
                assert_eq!(gen_binom(n, k), s * gen_binom(-n - 1 + k, k));
            }
        }
    }

    #[test]
    fn secant_degrees() {
        assert_eq!(secant_degree(5, 1, 1), 5);
        assert_eq!(secant_degree(6, 2, 1), 8);
        assert_eq!(secant_degree(4, 0, 1), 3);
        assert_eq!(secant_degree_special(1, 1), 5);
        assert_eq!(secant_degree_special(1, 2), 8);
        assert_eq!(secant_degree_special(2, 0), 4);
    }

    #[test]
    fn beta_chi() {
        assert_eq!(beta(2, 5), 5);
        assert_eq!(beta(3, 7), 7);
        assert_eq!(beta(1, 9), 9);
        assert_eq!(chi_symprod(2, 1, 2), 5);
        assert_eq!(chi_symprod(4, 2, 2), 15);
        assert_eq!(chi_symprod(1, 0, 3), 1);
    }
}
