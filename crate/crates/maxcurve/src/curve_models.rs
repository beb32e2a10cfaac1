//! Parameters, genera and the Hermitian-cover identities of the four curve families.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("s must be positive")]
    BadS,
    #[error("parameter s = {0} is too large")]
    TooLarge(u32),
    #[error("field size {0} is not a perfect square")]
    NotASquare(BigInt),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{0} is not a cover family")]
    NotACover(Family),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    SuzukiBase,
    SuzukiCover,
    ReeBase,
    ReeCover,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::SuzukiBase => "suzuki-base",
            Family::SuzukiCover => "suzuki-cover",
            Family::ReeBase => "ree-base",
            Family::ReeCover => "ree-cover",
        }
    }

    pub fn is_suzuki(self) -> bool {
        matches!(self, Family::SuzukiBase | Family::SuzukiCover)
    }

    pub fn is_cover(self) -> bool {
        matches!(self, Family::SuzukiCover | Family::ReeCover)
    }

    pub fn characteristic(self) -> u32 {
        if self.is_suzuki() {
            2
        } else {
            3
        }
    }

    /// The cover family over the same group type.
    pub fn cover(self) -> Family {
        if self.is_suzuki() {
            Family::SuzukiCover
        } else {
            Family::ReeCover
        }
    }

    /// The base family over the same group type.
    pub fn base(self) -> Family {
        if self.is_suzuki() {
            Family::SuzukiBase
        } else {
            Family::ReeBase
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = CurveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "suzuki-base" => Ok(Family::SuzukiBase),
            "suzuki-cover" => Ok(Family::SuzukiCover),
            "ree-base" => Ok(Family::ReeBase),
            "ree-cover" => Ok(Family::ReeCover),
            other => Err(CurveError::UnknownFamily(other.to_string())),
        }
    }
}

/// Family tag with s, q0, q and m.
///
/// Suzuki: q0 = 2^s, q = 2 q0^2, m = q - 2 q0 + 1.
/// Ree: q0 = 3^s, q = 3 q0^2, m = q - 3 q0 + 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveParams {
    pub family: Family,
    pub s: u32,
    pub q0: u64,
    pub q: u64,
    pub m: u64,
}

pub fn params_from_s(family: Family, s: u32) -> Result<CurveParams, CurveError> {
    if s == 0 {
        return Err(CurveError::BadS);
    }
    let p = family.characteristic() as u64;
    let e = 2 * s + 1;
    let q = p.checked_pow(e).ok_or(CurveError::TooLarge(s))?;
    let q0 = p.pow(s);
    let m = q - p * q0 + 1;
    let params = CurveParams {
        family,
        s,
        q0,
        q,
        m,
    };
    let qb = BigInt::from(q);
    if family.is_suzuki() {
        assert_eq!(
            &qb * &qb + 1u32,
            BigInt::from(q + 2 * q0 + 1) * BigInt::from(m)
        );
    } else {
        assert_eq!(
            qb.pow(3) + 1u32,
            BigInt::from(q + 1) * BigInt::from(q + 3 * q0 + 1) * BigInt::from(m)
        );
    }
    Ok(params)
}

impl CurveParams {
    pub fn p(&self) -> u32 {
        self.family.characteristic()
    }

    pub fn is_suzuki(&self) -> bool {
        self.family.is_suzuki()
    }

    /// The same s with another family tag.
    pub fn with_family(&self, family: Family) -> CurveParams {
        params_from_s(family, self.s).expect("same s")
    }

    pub fn q_big(&self) -> BigInt {
        BigInt::from(self.q)
    }

    /// Number of F_q-rational places of the cover: q^2 + 1 or q^3 + 1.
    pub fn rational_places(&self) -> BigInt {
        let q = self.q_big();
        if self.is_suzuki() {
            &q * &q + 1u32
        } else {
            q.pow(3) + 1u32
        }
    }

    /// 2g - 2 of the cover curve.
    pub fn cover_two_g_minus_2(&self) -> BigInt {
        self.rational_places() * (self.q_big() - 2u32)
    }

    /// 2g - 2 of the base curve.
    pub fn base_two_g_minus_2(&self) -> BigInt {
        genus(&self.with_family(self.family.base())) * 2u32 - 2u32
    }

    /// Extension degree r at which the cover is maximal: 4 (Suzuki) or 6 (Ree).
    pub fn maximal_degree(&self) -> u32 {
        if self.is_suzuki() {
            4
        } else {
            6
        }
    }
}

pub fn genus(params: &CurveParams) -> BigInt {
    let q = params.q_big();
    let q0 = BigInt::from(params.q0);
    match params.family {
        Family::SuzukiBase => &q0 * (&q - 1u32),
        Family::SuzukiCover => (q.pow(3) - &q * &q * 2u32 + &q) / 2u32,
        Family::ReeBase => (&q0 * 3u32 * (&q - 1u32) * (&q + &q0 + 1u32)) / 2u32,
        Family::ReeCover => (q.pow(4) - q.pow(3) * 2u32 + &q) / 2u32,
    }
}

/// ell + 1 + 2 g sqrt(ell), defined when ell is a perfect square.
pub fn hasse_weil_target(ell: &BigInt, g: &BigInt) -> Result<BigInt, CurveError> {
    let root = ell.sqrt();
    if &(&root * &root) != ell || ell.is_negative() {
        return Err(CurveError::NotASquare(ell.clone()));
    }
    Ok(ell + 1u32 + g * 2u32 * root)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianCoverRecord {
    pub group_order: BigInt,
    /// Degree of the different of H -> H/G forced by H/G having the cover's genus.
    pub delta: BigInt,
    pub window: (BigInt, BigInt),
    pub in_window: bool,
    /// Orders inside the window ruled out separately (Ree only).
    pub excluded: bool,
}

/// 2g - 2 of the Hermitian curve of degree sqrt(ell) + 1 with ell = q^4 (Suzuki) or q^6 (Ree).
pub fn hermitian_two_g_minus_2(params: &CurveParams) -> BigInt {
    let q = params.q_big();
    if params.is_suzuki() {
        q.pow(4) - &q * &q - 2u32
    } else {
        q.pow(6) - q.pow(3) - 2u32
    }
}

/// Bounds on |G| from comparing point counts (lower) and 2g - 2 (upper).
pub fn hermitian_window(params: &CurveParams) -> (BigInt, BigInt) {
    let q = params.q_big();
    let (h_points, c_points) = if params.is_suzuki() {
        (q.pow(6) + 1u32, q.pow(5) - q.pow(4) + q.pow(3) + 1u32)
    } else {
        (q.pow(9) + 1u32, q.pow(7) - q.pow(6) + q.pow(4) + 1u32)
    };
    let lo = Integer::div_ceil(&h_points, &c_points);
    let hi = hermitian_two_g_minus_2(params).div_floor(&params.cover_two_g_minus_2());
    (lo, hi)
}

pub fn hermitian_cover_analysis(
    params: &CurveParams,
    group_order: &BigInt,
) -> Result<HermitianCoverRecord, CurveError> {
    if !params.family.is_cover() {
        return Err(CurveError::NotACover(params.family));
    }
    let delta = hermitian_two_g_minus_2(params) - group_order * params.cover_two_g_minus_2();
    let window = hermitian_window(params);
    let in_window = group_order >= &window.0 && group_order <= &window.1;
    let excluded = if params.is_suzuki() {
        false
    } else {
        let q = params.q_big();
        group_order == &(&q * &q + &q + 1u32) || group_order == &((&q + 1u32) * (&q + 1u32))
    };
    Ok(HermitianCoverRecord {
        group_order: group_order.clone(),
        delta,
        window,
        in_window,
        excluded,
    })
}

/// Genus of H/G from Riemann-Hurwitz for a Hermitian quotient with different degree `delta`.
pub fn hermitian_quotient_genus(
    params: &CurveParams,
    group_order: &BigInt,
    delta: &BigInt,
) -> Option<BigInt> {
    let num = hermitian_two_g_minus_2(params) - delta + group_order * 2u32;
    let den = group_order * 2u32;
    if den.is_zero() || !(&num % &den).is_zero() {
        return None;
    }
    let g = num / den;
    (!g.is_negative()).then_some(g)
}

/// Order of PGU(3, ell) for ell = q^2 (Suzuki comparison) or q^3 (Ree comparison).
pub fn pgu3_order(params: &CurveParams) -> BigInt {
    let n = if params.is_suzuki() {
        params.q_big().pow(2)
    } else {
        params.q_big().pow(3)
    };
    (n.pow(3) + 1u32) * n.pow(3) * (&n * &n - BigInt::one())
}
