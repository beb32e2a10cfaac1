//! Contributions i(sigma) to the different, the ramification filtration at the
//! infinite place, and the Riemann-Hurwitz solve.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::curve_models::CurveParams;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RamificationError {
    #[error("class {0} does not occur for this family")]
    UnknownClass(ContributionClass),
    #[error("(2g-2 - delta + 2|L|) / 2|L| = {num}/{den} is not an integer")]
    NonIntegral { num: BigInt, den: BigInt },
    #[error("Riemann-Hurwitz gives negative genus {0}")]
    Negative(BigInt),
    #[error("group order must be positive")]
    EmptyGroup,
    #[error("|L cap C_m| = {l} does not divide m = {m}")]
    NotADivisorOfM { l: u64, m: u64 },
    #[error("negative multiplicity {0}")]
    NegativeMultiplicity(BigInt),
}

/// Element types of S(q) (Suzuki) and R(q) (Ree), plus the powers of tau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassTag {
    TauPower,
    Order2,
    Order4,
    Order3Central,
    Order3Noncentral,
    Order9,
    Order6,
    DivQMinus1,
    DivQPlus1,
    /// Singer type of order dividing q + 2 q0 + 1 (Suzuki) or q + 3 q0 + 1 (Ree).
    DivSingerPlus,
    DivMPlain,
    DivMSpecialJ,
}

impl ClassTag {
    pub fn name(self, suzuki: bool) -> &'static str {
        match self {
            ClassTag::TauPower => "tau_power",
            ClassTag::Order2 => "order2",
            ClassTag::Order4 => "order4",
            ClassTag::Order3Central => "order3_central",
            ClassTag::Order3Noncentral => "order3_noncentral",
            ClassTag::Order9 => "order9",
            ClassTag::Order6 => "order6",
            ClassTag::DivQMinus1 => "div_q_minus_1",
            ClassTag::DivQPlus1 => "div_q_plus_1",
            ClassTag::DivSingerPlus if suzuki => "div_q_plus_2q0_plus_1",
            ClassTag::DivSingerPlus => "div_q_plus_3q0_plus_1",
            ClassTag::DivMPlain => "div_m_plain",
            ClassTag::DivMSpecialJ => "div_m_special_j",
        }
    }

    fn occurs(self, suzuki: bool) -> bool {
        match self {
            ClassTag::Order4 => suzuki,
            ClassTag::Order3Central
            | ClassTag::Order3Noncentral
            | ClassTag::Order9
            | ClassTag::Order6
            | ClassTag::DivQPlus1 => !suzuki,
            _ => true,
        }
    }
}

/// An element type: sigma in the class (`twisted = false`) or sigma tau^k with
/// tau^k a nontrivial element of C_m (`twisted = true`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ContributionClass {
    pub tag: ClassTag,
    pub twisted: bool,
}

impl ContributionClass {
    pub const fn plain(tag: ClassTag) -> Self {
        ContributionClass {
            tag,
            twisted: false,
        }
    }

    pub const fn twisted(tag: ClassTag) -> Self {
        ContributionClass { tag, twisted: true }
    }
}

impl fmt::Display for ContributionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twisted {
            write!(f, "{:?}*tau^k", self.tag)
        } else {
            write!(f, "{:?}", self.tag)
        }
    }
}

/// i(sigma) for an element of the given class.
pub fn i_sigma(
    class: ContributionClass,
    params: &CurveParams,
) -> Result<BigInt, RamificationError> {
    let suzuki = params.is_suzuki();
    let tag = class.tag;
    let bad = || RamificationError::UnknownClass(class);
    if !tag.occurs(suzuki)
        || (tag == ClassTag::TauPower && class.twisted)
        || (tag == ClassTag::DivMSpecialJ && !class.twisted)
    {
        return Err(bad());
    }
    let q = BigInt::from(params.q);
    let q0 = BigInt::from(params.q0);
    let m = BigInt::from(params.m);
    let v: BigInt = if suzuki {
        match (tag, class.twisted) {
            (ClassTag::TauPower, _) => &q * &q + 1u32,
            (ClassTag::Order2, false) => &m * (&q0 * 2u32 + 1u32) + 1u32,
            (ClassTag::Order4, false) => &m + 1u32,
            (ClassTag::Order2 | ClassTag::Order4, true) => 1.into(),
            (ClassTag::DivQMinus1, _) => 2.into(),
            (ClassTag::DivSingerPlus | ClassTag::DivMPlain, _) => 0.into(),
            (ClassTag::DivMSpecialJ, _) => &m * 4u32,
            _ => return Err(bad()),
        }
    } else {
        match (tag, class.twisted) {
            (ClassTag::TauPower, _) => q.pow(3) + 1u32,
            (ClassTag::Order3Central, false) => &m * (&q + &q0 * 3u32 + 1u32) + 1u32,
            (ClassTag::Order3Noncentral, false) => &m * (&q0 * 3u32 + 1u32) + 1u32,
            (ClassTag::Order9, false) => &m + 1u32,
            (ClassTag::Order3Central | ClassTag::Order3Noncentral | ClassTag::Order9, true) => {
                1.into()
            }
            (ClassTag::Order2, _) => &q + 1u32,
            (ClassTag::Order6, _) => 1.into(),
            (ClassTag::DivQMinus1, _) => 2.into(),
            (ClassTag::DivQPlus1 | ClassTag::DivSingerPlus | ClassTag::DivMPlain, _) => 0.into(),
            (ClassTag::DivMSpecialJ, _) => &m * 6u32,
            _ => return Err(bad()),
        }
    };
    Ok(v)
}

/// Every class that occurs for the family, plain and twisted.
pub fn all_classes(params: &CurveParams) -> Vec<ContributionClass> {
    use ClassTag::*;
    let tags = [
        TauPower,
        Order2,
        Order4,
        Order3Central,
        Order3Noncentral,
        Order9,
        Order6,
        DivQMinus1,
        DivQPlus1,
        DivSingerPlus,
        DivMPlain,
        DivMSpecialJ,
    ];
    let mut out = Vec::new();
    for t in tags {
        for tw in [false, true] {
            let c = ContributionClass {
                tag: t,
                twisted: tw,
            };
            if i_sigma(c, params).is_ok() {
                out.push(c);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationStep {
    pub label: &'static str,
    pub size: BigInt,
    /// Largest i >= 1 with this subgroup equal to G^(i).
    pub last_index: BigInt,
}

/// Higher ramification groups of the stabilizer of the infinite place, i >= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationFiltration {
    pub steps: Vec<FiltrationStep>,
}

impl RamificationFiltration {
    /// i(sigma) = 1 + (number of i >= 1 with sigma in G^(i)) for sigma whose
    /// deepest group is `steps[depth]`.
    pub fn i_from_membership(&self, depth: usize) -> BigInt {
        self.steps[depth].last_index.clone() + 1u32
    }

    /// Index of the deepest filtration group containing a wild element of the class.
    pub fn depth_of(&self, tag: ClassTag, suzuki: bool) -> Option<usize> {
        match (tag, suzuki) {
            (ClassTag::Order4, true) => Some(0),
            (ClassTag::Order2, true) => Some(1),
            (ClassTag::Order9, false) => Some(0),
            (ClassTag::Order3Noncentral, false) => Some(1),
            (ClassTag::Order3Central, false) => Some(2),
            _ => None,
        }
    }
}

pub fn filtration(params: &CurveParams) -> RamificationFiltration {
    let q = BigInt::from(params.q);
    let q0 = BigInt::from(params.q0);
    let m = BigInt::from(params.m);
    let steps = if params.is_suzuki() {
        vec![
            FiltrationStep {
                label: "sylow-2",
                size: &q * &q,
                last_index: m.clone(),
            },
            FiltrationStep {
                label: "involutions",
                size: q.clone(),
                last_index: &m * (&q0 * 2u32 + 1u32),
            },
        ]
    } else {
        vec![
            FiltrationStep {
                label: "T",
                size: q.pow(3),
                last_index: m.clone(),
            },
            FiltrationStep {
                label: "T'",
                size: &q * &q,
                last_index: &m * (&q0 * 3u32 + 1u32),
            },
            FiltrationStep {
                label: "Z(T)",
                size: q.clone(),
                last_index: &m * (&q + &q0 * 3u32 + 1u32),
            },
        ]
    };
    RamificationFiltration { steps }
}

/// Sum of multiplicity times i(sigma) over a composition of L minus the identity.
pub fn delta_from_composition(
    composition: &[(ContributionClass, BigInt)],
    params: &CurveParams,
) -> Result<BigInt, RamificationError> {
    let mut total = BigInt::zero();
    for (class, mult) in composition {
        if mult.is_negative() {
            return Err(RamificationError::NegativeMultiplicity(mult.clone()));
        }
        total += mult * i_sigma(*class, params)?;
    }
    Ok(total)
}

/// g_L from 2g - 2 = |L| (2 g_L - 2) + delta.
pub fn genus_from_rh(
    two_g_minus_2_cover: &BigInt,
    order: &BigInt,
    delta: &BigInt,
) -> Result<BigInt, RamificationError> {
    if !order.is_positive() {
        return Err(RamificationError::EmptyGroup);
    }
    let num = two_g_minus_2_cover - delta + order * 2u32;
    let den = order * 2u32;
    if !(&num % &den).is_zero() {
        return Err(RamificationError::NonIntegral { num, den });
    }
    let g = num / den;
    if g.is_negative() {
        return Err(RamificationError::Negative(g));
    }
    Ok(g)
}

/// Delta for a tame L in terms of |L cap C_m| and the fixed-place counts n1, n2 on the base curve.
pub fn delta_tame_general(
    l_cm: u64,
    n1: &BigInt,
    n2: &BigInt,
    params: &CurveParams,
) -> Result<BigInt, RamificationError> {
    if l_cm == 0 || params.m % l_cm != 0 {
        return Err(RamificationError::NotADivisorOfM {
            l: l_cm,
            m: params.m,
        });
    }
    let l = BigInt::from(l_cm);
    Ok((&l - 1u32) * params.rational_places() + &l * n1 + &l * n2)
}
