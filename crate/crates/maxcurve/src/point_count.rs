//! Streaming rational point counts of the explicit curve models over F_{q^r}.
//!
//! Suzuki family: `y^q + y = x^q0 (x^q + x)`, cover adds `t^m = x^q + x`.
//! Ree family: `y^q - y = x^q0 (x^q - x)`, `z^q - z = x^(2 q0) (x^q - x)`,
//! cover adds `t^m = x^q - x`.
//!
//! For each x the number of (y, z, t) above it is a product of Artin-Schreier
//! and Kummer counts, so no point is ever materialized. One place at infinity
//! is added at the end.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use thiserror::Error;

use crate::curve_models::{genus, hasse_weil_target, CurveParams, Family};
use crate::gf::{ArtinSchreier, FieldElement, FieldSpec, GfError, LinearMap, PowerResidue};

/// Elements per work unit. Chunk boundaries depend only on the field size.
pub const CHUNK: u64 = 1 << 14;

#[derive(Debug, Error)]
pub enum CountError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("field F_{{{q}^{r}}} is outside the supported range")]
    Unsupported { q: u64, r: u32 },
    #[error("the F_{{{q}^{r}}} count is long-running and was not enabled")]
    LongRunning { q: u64, r: u32 },
    #[error("field {got} does not have characteristic {p} and degree {k}")]
    FieldMismatch { got: String, p: u32, k: u32 },
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Clone, Debug, Default)]
pub struct CountOptions {
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Allows the F_{q^6} Ree count.
    pub allow_long: bool,
}

#[derive(Clone, Debug)]
pub struct CountReport {
    pub family: Family,
    pub params: CurveParams,
    pub r: u32,
    pub field_size: u64,
    pub modulus: String,
    pub points: u64,
    pub hasse_weil_target: Option<BigInt>,
    pub is_maximal: bool,
    pub note: Option<String>,
    pub wall_time: Duration,
}

struct Kernel<'a> {
    field: &'a FieldSpec,
    family: Family,
    q: u64,
    frob_q: LinearMap,
    frob_q0: LinearMap,
    artin: ArtinSchreier,
    kummer: Option<PowerResidue>,
}

impl Kernel<'_> {
    #[inline]
    fn fiber(&self, x: FieldElement) -> u64 {
        let f = self.field;
        let xq = self.frob_q.apply(x);
        let suzuki = self.family.is_suzuki();
        let s = if suzuki { f.add(xq, x) } else { f.sub(xq, x) };
        let xq0 = self.frob_q0.apply(x);
        let n_y = self.artin.count(f.mul(xq0, s));
        if n_y == 0 {
            return 0;
        }
        let mut n = n_y;
        if !suzuki {
            let n_z = self.artin.count(f.mul(f.square(xq0), s));
            if n_z == 0 {
                return 0;
            }
            n *= n_z;
        }
        if let Some(k) = &self.kummer {
            n *= k.count(f, s);
        }
        n
    }
}

/// The field F_{q^r} with its default modulus.
pub fn default_field(params: &CurveParams, r: u32) -> Result<FieldSpec, CountError> {
    let k = (2 * params.s + 1) * r;
    FieldSpec::default_for(params.p(), k).map_err(|_| CountError::Unsupported { q: params.q, r })
}

/// Count F_{q^r}-rational places using the default modulus.
pub fn count_points(
    params: &CurveParams,
    r: u32,
    opts: &CountOptions,
) -> Result<CountReport, CountError> {
    let field = default_field(params, r)?;
    count_points_in(&field, params, r, opts)
}

/// Count F_{q^r}-rational places in a caller-supplied model of F_{q^r}.
pub fn count_points_in(
    field: &FieldSpec,
    params: &CurveParams,
    r: u32,
    opts: &CountOptions,
) -> Result<CountReport, CountError> {
    let d = 2 * params.s + 1;
    let k = d * r;
    if field.characteristic() != params.p() || field.degree() != k {
        return Err(CountError::FieldMismatch {
            got: field.to_string(),
            p: params.p(),
            k,
        });
    }
    if params.family == Family::ReeCover && r >= 6 && !opts.allow_long {
        return Err(CountError::LongRunning { q: params.q, r });
    }
    let start = Instant::now();
    let ell = field.order();
    let kummer = if params.family.is_cover() {
        let g = params.m.gcd(&(ell - 1));
        (g > 1).then(|| PowerResidue::new(field, g)).transpose()?
    } else {
        None
    };
    let kernel = Kernel {
        field,
        family: params.family,
        q: params.q,
        frob_q: field.frobenius_map(d),
        frob_q0: field.frobenius_map(params.s),
        artin: ArtinSchreier::new(field, params.q)?,
        kummer,
    };
    debug_assert_eq!(kernel.q, params.q);
    let chunks = ell.div_ceil(CHUNK);
    let run = || {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let lo = c * CHUNK;
                let hi = (lo + CHUNK).min(ell);
                (lo..hi)
                    .map(|i| kernel.fiber(field.element_at(i)))
                    .sum::<u64>()
            })
            .sum::<u64>()
    };
    let affine = match opts.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CountError::Pool(e.to_string()))?
            .install(run),
        None => run(),
    };
    let points = affine + 1;

    let ell_big = BigInt::from(ell);
    let target = hasse_weil_target(&ell_big, &genus(params)).ok();
    let note = if target.is_none() {
        Some(format!(
            "field size {ell} is not a square; maximality is not defined"
        ))
    } else {
        None
    };
    let is_maximal = target.as_ref() == Some(&BigInt::from(points));
    Ok(CountReport {
        family: params.family,
        params: *params,
        r,
        field_size: ell,
        modulus: field.modulus_string(),
        points,
        hasse_weil_target: target,
        is_maximal,
        note,
        wall_time: start.elapsed(),
    })
}

/// Whether the count over F_{q^r} attains the Hasse-Weil bound.
pub fn verify_maximal(
    params: &CurveParams,
    r: u32,
    opts: &CountOptions,
) -> Result<bool, CountError> {
    Ok(count_points(params, r, opts)?.is_maximal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve_models::params_from_s;

    #[test]
    fn suzuki_small_counts() {
        let p = params_from_s(Family::SuzukiCover, 1).unwrap();
        let o = CountOptions::default();
        assert_eq!(count_points(&p, 1, &o).unwrap().points, 65);
        let rep = count_points(&p, 4, &o).unwrap();
        assert_eq!(rep.points, 29185);
        assert!(rep.is_maximal);
    }

    #[test]
    fn ree_long_guard() {
        let p = params_from_s(Family::ReeCover, 1).unwrap();
        assert!(matches!(
            count_points(&p, 6, &CountOptions::default()),
            Err(CountError::LongRunning { .. })
        ));
    }
}
