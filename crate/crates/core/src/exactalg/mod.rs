//! Exact arithmetic: rationals, univariate and sparse multivariate
//! polynomials, Sturm root counting and isolation, symmetric linear algebra.

pub mod ext;
pub mod format;
pub mod linalg;
pub mod mpoly;
pub mod ring;
pub mod roots;
pub mod upoly;

pub use ext::{MultiQuad, RealQuad};
pub use format::parse_poly;
pub use linalg::{classify_by_minors, sym_ldlt, Definiteness, LdltReport, SymRatMatrix};
pub use mpoly::MPoly;
pub use ring::{q, qf, qvec, Field, OrderedField, Ring, Q};
pub use roots::{isolate, real_root_count, Ext, IsolationList, RealRoots, RootInterval, SturmChain};
pub use upoly::UPoly;

use crate::error::Result;

/// Real roots of `p` in (lo, hi], counted with multiplicity.
pub fn upoly_real_root_count(p: &UPoly, lo: &Ext, hi: &Ext) -> Result<usize> {
    real_root_count(p, lo, hi)
}

pub fn upoly_isolate(p: &UPoly) -> Result<IsolationList> {
    isolate(p)
}

pub fn mpoly_restrict_line(f: &MPoly, e: &[Q], v: &[Q]) -> Result<UPoly> {
    f.restrict_line(e, v)
}

pub fn mpoly_divide_exact(num: &MPoly, den: &MPoly) -> Result<Option<MPoly>> {
    num.divide_exact(den)
}
