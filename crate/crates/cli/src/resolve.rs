//! Argument resolution: a registry name wins, otherwise the argument is a path
//! (or, for points, an inline comma-separated vector).

use std::path::Path;

use hypsec_core::detrep::SymPencil;
use hypsec_core::exactalg::{MPoly, Q};
use hypsec_core::{fixtures, io, Error};

fn read_file(arg: &str, what: &str, fixture_err: Error) -> Result<String, String> {
    if !Path::new(arg).is_file() {
        return Err(format!("{fixture_err}; no {what} file named {arg:?} either"));
    }
    std::fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))
}

pub fn read_poly(arg: &str) -> Result<MPoly, String> {
    match fixtures::poly_fixture(arg) {
        Ok(f) => Ok(f),
        Err(e @ Error::UnknownFixture(_)) => {
            let text = read_file(arg, "polynomial", e)?;
            io::read_poly(&text, None).map_err(|e| format!("{arg}: {e}"))
        }
        Err(e) => Err(e.to_string()),
    }
}

/// The pencil, plus the slack count when a JSON file records one.
pub fn read_pencil(arg: &str, nvars: Option<usize>) -> Result<(SymPencil, Option<usize>), String> {
    match fixtures::pencil_fixture(arg) {
        Ok(p) => Ok((p, None)),
        Err(e @ Error::UnknownFixture(_)) => {
            let text = read_file(arg, "pencil", e)?;
            let p = SymPencil::read(&text, nvars).map_err(|e| format!("{arg}: {e}"))?;
            let slack = serde_json::from_str::<serde_json::Value>(&text)
                .ok()
                .and_then(|v| v.get("slack").and_then(|s| s.as_u64()))
                .map(|s| s as usize);
            Ok((p, slack))
        }
        Err(e) => Err(e.to_string()),
    }
}

pub fn read_point(arg: &str) -> Result<Vec<Q>, String> {
    match fixtures::point_fixture(arg) {
        Ok(v) => Ok(v),
        Err(Error::UnknownFixture(_)) => io::parse_rational_vec(arg).map_err(|e| format!("point {arg:?}: {e}")),
        Err(e) => Err(e.to_string()),
    }
}
