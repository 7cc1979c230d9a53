//! Ternary primitive BCH codes and LCD BCH codes built from first principles.
//!
//! The crate covers the whole pipeline from the ambient field GF(3^m) to
//! weight distributions:
//!
//! - [`field`]: log/antilog arithmetic in GF(3^m) with a deterministic
//!   primitive modulus, absolute and relative traces, quadratic residuosity.
//! - [`cosets`]: 3-cyclotomic cosets modulo `3^m - 1`, absolute coset
//!   leaders, the closed forms for the three largest ones, and a brute-force
//!   ranking oracle.
//! - [`polyring`]: dense polynomials over F₃, minimal polynomials, generator
//!   polynomials from defining sets, reciprocals.
//! - [`codes`]: cyclic codes, the seven code families, exhaustive and
//!   trace-form weight enumeration, duals, LCD tests, BCH bound.
//! - [`charsums`]: exact character sums in Z[ω], quadratic Gauss sums and
//!   Kloosterman sums.
//! - [`verify`]: the end-to-end verification sweep used by the CLI.

pub mod charsums;
pub mod codes;
pub mod cosets;
mod error;
pub mod field;
pub mod parse;
pub mod polyring;
mod trit;
pub mod verify;

pub use error::{Error, Result};
pub use trit::TritVec;

/// Runs `f` on a pool of `workers` threads (`0` = rayon's default pool).
pub(crate) fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if workers == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Capacity(format!("cannot start {workers} workers: {e}")))?;
    Ok(pool.install(f))
}

/// `3^e` as a `u64`.
pub(crate) const fn pow3(e: u32) -> u64 {
    let mut r = 1u64;
    let mut i = 0;
    while i < e {
        r *= 3;
        i += 1;
    }
    r
}
