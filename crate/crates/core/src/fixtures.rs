//! Named polynomials, pencils and points.

use sha2::{Digest, Sha256};

use crate::detrep::{hankel_pencil, pencil_det, uniform_moments, SymPencil};
use crate::error::{Error, Result};
use crate::exactalg::ring::qvec;
use crate::exactalg::{parse_poly, MPoly, Q};
use crate::shadows::ShadowRep;

const QUINTIC: &str = include_str!("../data/elliptic_quintic.txt");
const OCTIC: &str = include_str!("../data/genus2_octic.txt");
const ELLIPTIC_PENCIL: &str = include_str!("../data/elliptic_pencil.txt");
const SLACK_PENCIL: &str = include_str!("../data/slack_pencil.txt");

/// (name, contents) of every bundled data file.
pub const DATA_FILES: [(&str, &str); 4] = [
    ("elliptic_quintic.txt", QUINTIC),
    ("genus2_octic.txt", OCTIC),
    ("elliptic_pencil.txt", ELLIPTIC_PENCIL),
    ("slack_pencil.txt", SLACK_PENCIL),
];

pub fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

/// Quintic secant hypersurface of the elliptic normal quintic in P⁴.
pub fn quintic() -> MPoly {
    parse_poly(QUINTIC, Some(5)).expect("bundled quintic")
}

/// Octic secant hypersurface of the genus-2 sextic in P⁴.
pub fn genus2_octic() -> MPoly {
    parse_poly(OCTIC, Some(5)).expect("bundled octic")
}

/// 5×5 linear pencil with det = −quintic.
pub fn elliptic_pencil() -> SymPencil {
    SymPencil::parse(ELLIPTIC_PENCIL, 5).expect("bundled pencil")
}

/// 5×5 pencil in (z₀, z₁, z₂, z₃, t); its one-slack shadow is the convex
/// hull of the compact oval of (x² : x : y : 1), y² = x³ − x.
pub fn slack_pencil() -> SymPencil {
    SymPencil::parse(SLACK_PENCIL, 5).expect("bundled slack pencil")
}

pub fn slack_shadow() -> ShadowRep {
    ShadowRep::new(slack_pencil(), 1).expect("one slack variable")
}

pub fn e_quintic() -> Vec<Q> {
    qvec(&[2, 0, -3, 0, 6])
}

pub fn e_octic() -> Vec<Q> {
    qvec(&[0, 3, -1, 0, 28])
}

/// Bumped whenever a fixture changes meaning or contents.
pub const REGISTRY_VERSION: u32 = 1;

pub const POLY_NAMES: [&str; 4] = ["elliptic-quintic", "genus2-sextic-secant", "sum-of-squares-quadric", "hankel-det:<k>"];
pub const PENCIL_NAMES: [&str; 3] = ["elliptic-pencil", "slack-pencil", "hankel:<k>"];
pub const POINT_NAMES: [&str; 3] = ["e-quintic", "e-octic", "uniform:<n>"];

/// x0² + x1² + x2², not hyperbolic in any direction.
pub fn sum_of_squares_quadric() -> MPoly {
    parse_poly("x0^2 + x1^2 + x2^2", Some(3)).expect("quadric")
}

fn indexed(name: &str, prefix: &str) -> Result<Option<usize>> {
    match name.strip_prefix(prefix) {
        None => Ok(None),
        Some(k) => k.parse().map(Some).map_err(|_| Error::UnknownFixture(name.into())),
    }
}

/// Names may carry a `fixture:` prefix.
pub fn poly_fixture(name: &str) -> Result<MPoly> {
    let name = name.strip_prefix("fixture:").unwrap_or(name);
    if let Some(k) = indexed(name, "hankel-det:")? {
        return Ok(pencil_det(&hankel_pencil(k)?));
    }
    match name {
        "elliptic-quintic" | "quintic" => Ok(quintic()),
        "genus2-sextic-secant" | "genus2-octic" | "octic" => Ok(genus2_octic()),
        "sum-of-squares-quadric" => Ok(sum_of_squares_quadric()),
        _ => Err(Error::UnknownFixture(name.into())),
    }
}

pub fn pencil_fixture(name: &str) -> Result<SymPencil> {
    let name = name.strip_prefix("fixture:").unwrap_or(name);
    if let Some(k) = indexed(name, "hankel:")? {
        return hankel_pencil(k);
    }
    match name {
        "elliptic-pencil" => Ok(elliptic_pencil()),
        "slack-pencil" => Ok(slack_pencil()),
        _ => Err(Error::UnknownFixture(name.into())),
    }
}

pub fn point_fixture(name: &str) -> Result<Vec<Q>> {
    let name = name.strip_prefix("fixture:").unwrap_or(name);
    if let Some(n) = indexed(name, "uniform:")? {
        return Ok(uniform_moments(n));
    }
    match name {
        "e-quintic" => Ok(e_quintic()),
        "e-octic" => Ok(e_octic()),
        _ => Err(Error::UnknownFixture(name.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detrep::pencil_det;
    use crate::exactalg::ring::{q, qf};

    #[test]
    fn data_files_unchanged() {
        let expected = [
            "397b250f0eaafa752c6084b7f6e34930722be9238ae0e764aefc8bf1b2346f8c",
            "f89d2e55b95803f0e9bcfb5a09b88c8d3438070f7899527ca40ee019aa1f4d52",
            "5ecb336364e2b0e121b9f90dd881a9ad915f157c69cad07375af72c1ee2ef78a",
            "2d86a050e794fab9418c31a784e264d18d83a19830da60b46d0904393303c073",
        ];
        for ((name, text), want) in DATA_FILES.iter().zip(expected) {
            assert_eq!(sha256_hex(text), want, "{name}");
        }
    }

    #[test]
    fn shapes() {
        let f = quintic();
        assert_eq!(f.homogeneous_degree(), Some(5));
        assert_eq!(f.eval(&e_quintic()).unwrap(), q(-60));
        let g = genus2_octic();
        assert_eq!(g.homogeneous_degree(), Some(8));
        assert_eq!(g.num_terms(), 117);
        assert_eq!(g.eval(&e_octic()).unwrap(), q(42240));
        assert_eq!(pencil_det(&elliptic_pencil()), -&f);
        assert_eq!(slack_pencil().nvars(), 5);
    }

    #[test]
    fn registry() {
        assert!(poly_fixture("quintic").is_ok());
        assert_eq!(poly_fixture("fixture:genus2-sextic-secant").unwrap(), genus2_octic());
        assert_eq!(poly_fixture("hankel-det:2").unwrap().homogeneous_degree(), Some(3));
        assert_eq!(point_fixture("uniform:3").unwrap(), vec![q(1), q(0), qf(1, 3)]);
        assert_eq!(pencil_fixture("hankel:3").unwrap().size(), 4);
        assert!(matches!(pencil_fixture("hankel:x"), Err(Error::UnknownFixture(_))));
        assert!(point_fixture("e-octic").is_ok());
    }
}
