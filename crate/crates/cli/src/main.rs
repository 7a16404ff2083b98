//! `hypsec`: certification, construction, verification and membership queries.
//!
//! Exit codes: 0 success / member / interior, 2 refuted / mismatch / outside,
//! 3 boundary, 1 usage or input error.

mod resolve;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use hypsec_core::curves::{
    beta, build_vastly_real, chi_symprod, curve_fixture, double_cover, random_secant_sample, secant_degree,
};
use hypsec_core::detrep::{adjugate, dixon_complete, hankel_pencil, pencil_det, verify_definite_rep, DixonOutcome, DixonProblem};
use hypsec_core::exactalg::{Definiteness, Q};
use hypsec_core::fixtures;
use hypsec_core::hyperbolic::{certify_hyperbolic_with, cone_membership, CertStatus, ConeClass, DEFAULT_HEIGHT};
use hypsec_core::io::parse_rational;
use hypsec_core::shadows::{hankel_membership, shadow_membership, shadow_size_bounds, ShadowRep};

use resolve::{read_pencil, read_point, read_poly};

#[derive(Parser)]
#[command(name = "hypsec", version, about = "Exact certificates for hyperbolic secant hypersurfaces")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Variable count for text-format pencil files.
    #[arg(long, global = true)]
    nvars: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample lines through e and check f(te − v) is real-rooted on each.
    Certify {
        /// fixture name or polynomial file
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        #[arg(long, default_value_t = 200)]
        lines: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Bound on the height of sampled direction coordinates.
        #[arg(long, env = "HYPSEC_MAX_HEIGHT", default_value_t = DEFAULT_HEIGHT)]
        max_height: u64,
    },
    /// Check det A = c·f exactly and that A(e) is definite.
    VerifyRep {
        pencil: String,
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        e: String,
    },
    /// Membership in a hyperbolicity cone, Hankel spectrahedron or shadow.
    Member {
        #[command(subcommand)]
        kind: MemberKind,
    },
    /// Closed-form counts.
    Formulas {
        #[command(subcommand)]
        which: Formula,
    },
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// A random point of the k-th secant variety of a curve fixture.
    Sample {
        curve: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// List the fixture registry, or print one fixture.
    Fixtures {
        #[arg(value_parser = ["poly", "pencil", "point", "curve"])]
        kind: Option<String>,
        name: Option<String>,
    },
}

#[derive(Subcommand)]
enum MemberKind {
    Cone {
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    Hankel {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        /// Optional consistency check: |v| must be 2k+1.
        #[arg(long)]
        k: Option<usize>,
    },
    Shadow {
        pencil: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Number of trailing slack variables (default: the file's "slack", else 1).
        #[arg(long)]
        slack: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Formula {
    SecantDegree { d: i64, g: i64, k: i64 },
    Beta { r: i64, m: i64 },
    Chi { a: i64, b: i64, n: i64 },
    ShadowBounds { d: usize, g: usize },
}

#[derive(Subcommand)]
enum ConstructKind {
    Hankel {
        #[arg(long)]
        k: usize,
    },
    VastlyReal {
        curve: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Completes a row of the adjugate of a pencil to a matrix of forms of
    /// rank one on the hypersurface.
    Dixon {
        pencil: String,
        #[arg(long, default_value_t = 0)]
        row: usize,
        /// The hypersurface; defaults to det of the pencil.
        #[arg(long)]
        f: Option<String>,
    },
    DoubleCover {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
}

type Outcome = Result<(Value, u8), String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn to_json<T: serde::Serialize>(x: &T) -> Result<Value, String> {
    serde_json::to_value(x).map_err(err)
}

fn run(cli: &Cli) -> Outcome {
    let nv = cli.nvars;
    match &cli.cmd {
        Cmd::Certify { poly, e, lines, seed, max_height } => {
            let f = read_poly(poly)?;
            let e = read_point(e)?;
            let cert = certify_hyperbolic_with(&f, &e, *lines, *seed, *max_height).map_err(err)?;
            let code = if cert.status == CertStatus::CertifiedOnSamples { 0 } else { 2 };
            Ok((to_json(&cert)?, code))
        }
        Cmd::VerifyRep { pencil, poly, e } => {
            let (p, _) = read_pencil(pencil, nv)?;
            let f = read_poly(poly)?;
            let r = verify_definite_rep(&p, &f, &read_point(e)?).map_err(err)?;
            let code = if r.identity_holds && r.definite { 0 } else { 2 };
            Ok((to_json(&r)?, code))
        }
        Cmd::Member { kind } => member(kind, nv),
        Cmd::Formulas { which } => Ok((formula(which)?, 0)),
        Cmd::Construct { kind } => construct(kind, nv),
        Cmd::Sample { curve, k, seed } => {
            let c = curve_fixture(curve).map_err(err)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let s = random_secant_sample(&c, *k, &mut rng).map_err(err)?;
            let mut v = to_json(&s)?;
            if let Some(p) = s.rational_span_point() {
                v["rational_span_point"] = json!(p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
            }
            Ok((v, 0))
        }
        Cmd::Fixtures { kind, name } => fixtures_cmd(kind.as_deref(), name.as_deref()),
    }
}

fn member(kind: &MemberKind, nv: Option<usize>) -> Outcome {
    match kind {
        MemberKind::Cone { poly, e, v } => {
            let f = read_poly(poly)?;
            let r = cone_membership(&f, &read_point(e)?, &read_point(v)?).map_err(err)?;
            let code = match r.class {
                ConeClass::Interior => 0,
                ConeClass::Boundary => 3,
                ConeClass::Outside => 2,
            };
            Ok((to_json(&r)?, code))
        }
        MemberKind::Hankel { v, k } => {
            let v = read_point(v)?;
            if let Some(k) = k {
                if v.len() != 2 * k + 1 {
                    return Err(format!("--k {k} needs {} entries, got {}", 2 * k + 1, v.len()));
                }
            }
            let h = hankel_membership(&v).map_err(err)?;
            let code = match h.definiteness {
                Definiteness::PosDef => 0,
                Definiteness::PosSemi => 3,
                _ => 2,
            };
            Ok((to_json(&h)?, code))
        }
        MemberKind::Shadow { pencil, z, slack } => {
            let (p, from_file) = read_pencil(pencil, nv)?;
            let rep = ShadowRep::new(p, slack.or(from_file).unwrap_or(1)).map_err(err)?;
            let s = shadow_membership(&rep, &read_point(z)?).map_err(err)?;
            Ok((to_json(&s)?, if s.member { 0 } else { 2 }))
        }
    }
}

fn formula(which: &Formula) -> Result<Value, String> {
    Ok(match *which {
        Formula::SecantDegree { d, g, k } => json!({ "secant_degree": secant_degree(d, g, k) as i64 }),
        Formula::Beta { r, m } => json!({ "beta": beta(r, m) as i64 }),
        Formula::Chi { a, b, n } => {
            if n < 1 || b < 0 {
                return Err("chi needs b >= 0 and n >= 1".into());
            }
            json!({ "chi": chi_symprod(a, b, n) as i64 })
        }
        Formula::ShadowBounds { d, g } => {
            let b = shadow_size_bounds(d, g).map_err(err)?;
            json!({
                "dim_bound": b.dim_bound,
                "degree_bound": b.degree_bound as i64,
                "degree_formula": b.degree_formula as i64,
                "matrix_size_bound_m_curve": b.matrix_size_bound_m_curve,
                "matrix_size_bound": b.matrix_size_bound,
            })
        }
    })
}

fn construct(kind: &ConstructKind, nv: Option<usize>) -> Outcome {
    match kind {
        ConstructKind::Hankel { k } => Ok((hankel_pencil(*k).map_err(err)?.to_json(), 0)),
        ConstructKind::VastlyReal { curve, k } => {
            let c = curve_fixture(curve).map_err(err)?;
            let s = build_vastly_real(&c, *k).map_err(err)?;
            Ok((to_json(&s)?, 0))
        }
        ConstructKind::Dixon { pencil, row, f } => {
            let (p, _) = read_pencil(pencil, nv)?;
            if *row >= p.size() {
                return Err(format!("row {row} out of range for a {0}×{0} pencil", p.size()));
            }
            let f = match f {
                Some(name) => read_poly(name)?,
                None => pencil_det(&p),
            };
            // the chosen row's diagonal entry must sit in the corner
            let mut order: Vec<usize> = (0..p.size()).filter(|i| i != row).collect();
            order.insert(0, *row);
            let adj = adjugate(&p.to_forms());
            let first_row = order.iter().map(|&j| adj[*row][j].clone()).collect();
            let out = dixon_complete(&DixonProblem { f, first_row }).map_err(err)?;
            let code = if matches!(out, DixonOutcome::Complete { .. }) { 0 } else { 2 };
            let mut v = to_json(&out)?;
            v["order"] = json!(order);
            Ok((v, code))
        }
        ConstructKind::DoubleCover { a, b } => {
            let a: Q = parse_rational(a).map_err(err)?;
            let b: Q = parse_rational(b).map_err(err)?;
            let d = double_cover(a, b).map_err(err)?;
            Ok((to_json(&d)?, if d.identity_holds { 0 } else { 2 }))
        }
    }
}

fn fixtures_cmd(kind: Option<&str>, name: Option<&str>) -> Outcome {
    let Some(kind) = kind else {
        let files: Vec<Value> = fixtures::DATA_FILES
            .iter()
            .map(|(n, t)| json!({ "file": n, "sha256": fixtures::sha256_hex(t) }))
            .collect();
        return Ok((
            json!({
                "version": fixtures::REGISTRY_VERSION,
                "polys": fixtures::POLY_NAMES,
                "pencils": fixtures::PENCIL_NAMES,
                "points": fixtures::POINT_NAMES,
                "curves": ["rnc:<d>", "elliptic-quintic", "genus2-sextic", "weierstrass:<a>,<b>"],
                "data_files": files,
            }),
            0,
        ));
    };
    let name = name.ok_or("fixture name required")?;
    let v = match kind {
        "poly" => {
            let f = fixtures::poly_fixture(name).map_err(err)?;
            json!({ "nvars": f.nvars(), "text": f.to_string() })
        }
        "pencil" => fixtures::pencil_fixture(name).map_err(err)?.to_json(),
        "point" => json!(fixtures::point_fixture(name).map_err(err)?.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        _ => to_json(&curve_fixture(name).map_err(err)?)?,
    };
    Ok((v, 0))
}

fn render_text(v: &Value) -> String {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, x)| match x {
                Value::String(s) => format!("{k}: {s}"),
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (value, code) = match run(&cli) {
        Ok(x) => x,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let mut text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&value).expect("json"),
        Format::Text => render_text(&value),
    };
    text.push('\n');
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}
