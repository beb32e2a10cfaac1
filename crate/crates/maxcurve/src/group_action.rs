//! The automorphism group of the Suzuki cover at q = 8, realized as explicit
//! permutations of its 29185 F_{q^4}-rational places.
//!
//! Places are affine solutions (x, y, t) of `y^q + y = x^q0 (x^q + x)`,
//! `t^m = x^q + x` over F_{q^4}, plus P∞ which always has the last id.

use std::collections::{HashMap, HashSet, VecDeque};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::curve_models::{CurveParams, Family};
use crate::gf::{FieldElement, FieldSpec, GfError};
use crate::ramification::{filtration, i_sigma, ClassTag, ContributionClass};

/// Seed for every random element search.
pub const SEARCH_SEED: u64 = 0x5a5a_0008;
/// Retry bound for random element searches.
pub const SEARCH_RETRIES: usize = 100_000;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("only q = 8 is materialized (got q = {0})")]
    Unsupported(u64),
    #[error("expected a Suzuki cover parameter set")]
    WrongFamily,
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("field F_{got} is not F_{{q^4}} = F_{want}")]
    FieldMismatch { got: u64, want: u64 },
    #[error("{0} is not an element of F_q")]
    NotInFq(&'static str),
    #[error("A must be nonzero")]
    ZeroScale,
    #[error("delta^m != A")]
    BadDelta,
    #[error("lambda does not have exact order m")]
    BadLambda,
    #[error("image of place {0} violates a curve equation")]
    Equation(usize),
    #[error("map is not a bijection of the places")]
    NotBijective,
    #[error("phi completion is not unique: {0} exceptional places")]
    Completion(usize),
    #[error("no element of order {0} found within the retry bound")]
    SearchExhausted(u64),
}

/// Indexed places of the cover over F_{q^4}.
#[derive(Clone, Debug)]
pub struct PlaceSet {
    field: FieldSpec,
    params: CurveParams,
    coords: Vec<[FieldElement; 3]>,
    index: HashMap<[FieldElement; 3], u32>,
}

impl PlaceSet {
    pub fn len(&self) -> usize {
        self.coords.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn infinity(&self) -> u32 {
        self.coords.len() as u32
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn params(&self) -> &CurveParams {
        &self.params
    }

    /// Affine coordinates, `None` for P∞.
    pub fn coords(&self, id: u32) -> Option<[FieldElement; 3]> {
        self.coords.get(id as usize).copied()
    }

    pub fn id_of(&self, p: &[FieldElement; 3]) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn on_curve(&self, [x, y, t]: [FieldElement; 3]) -> bool {
        let f = &self.field;
        let q = self.params.q as u128;
        let s = f.add(f.pow(x, q), x);
        f.add(f.pow(y, q), y) == f.mul(f.pow(x, self.params.q0 as u128), s)
            && f.pow(t, self.params.m as u128) == s
    }

    /// Places with x, y in F_q and t = 0, plus P∞.
    pub fn fq_rational(&self) -> usize {
        let f = &self.field;
        1 + self
            .coords
            .iter()
            .filter(|[x, y, t]| t.is_zero() && f.in_subfield(*x, 3) && f.in_subfield(*y, 3))
            .count()
    }

    pub fn with_t_zero(&self) -> usize {
        1 + self.coords.iter().filter(|c| c[2].is_zero()).count()
    }
}

fn check_params(params: &CurveParams) -> Result<(), GroupError> {
    if params.family != Family::SuzukiCover {
        return Err(GroupError::WrongFamily);
    }
    if params.q != 8 {
        return Err(GroupError::Unsupported(params.q));
    }
    Ok(())
}

/// Places over F_{q^4} with its default modulus.
pub fn build_places(params: &CurveParams) -> Result<PlaceSet, GroupError> {
    check_params(params)?;
    let field = FieldSpec::default_for(2, 4 * (2 * params.s + 1))?;
    build_places_in(field, params)
}

/// Places over a caller-supplied model of F_{q^4}.
pub fn build_places_in(field: FieldSpec, params: &CurveParams) -> Result<PlaceSet, GroupError> {
    check_params(params)?;
    let want = params.q.pow(4);
    if field.characteristic() != 2 || field.order() != want {
        return Err(GroupError::FieldMismatch {
            got: field.order(),
            want,
        });
    }
    let f = &field;
    let q = params.q as u128;
    let mut as_roots: HashMap<FieldElement, Vec<FieldElement>> = HashMap::new();
    let mut m_roots: HashMap<FieldElement, Vec<FieldElement>> = HashMap::new();
    for e in f.elements() {
        as_roots.entry(f.add(f.pow(e, q), e)).or_default().push(e);
        m_roots
            .entry(f.pow(e, params.m as u128))
            .or_default()
            .push(e);
    }
    let mut coords = Vec::new();
    for x in f.elements() {
        let s = f.add(f.pow(x, q), x);
        let (Some(ys), Some(ts)) = (
            as_roots.get(&f.mul(f.pow(x, params.q0 as u128), s)),
            m_roots.get(&s),
        ) else {
            continue;
        };
        for &y in ys {
            for &t in ts {
                coords.push([x, y, t]);
            }
        }
    }
    let index = coords
        .iter()
        .enumerate()
        .map(|(i, c)| (*c, i as u32))
        .collect();
    Ok(PlaceSet {
        field,
        params: *params,
        coords,
        index,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutTag {
    Identity,
    Stabilizer {
        a: FieldElement,
        b: FieldElement,
        c: FieldElement,
        delta: FieldElement,
    },
    Gamma(FieldElement),
    Phi,
    Composite,
}

/// A permutation of place ids.
#[derive(Clone, Debug)]
pub struct Automorphism {
    pub perm: Vec<u32>,
    pub tag: AutTag,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
    }
}

impl Eq for Automorphism {}

impl Automorphism {
    pub fn identity(places: &PlaceSet) -> Self {
        Automorphism {
            perm: (0..places.len() as u32).collect(),
            tag: AutTag::Identity,
        }
    }

    pub fn apply(&self, id: u32) -> u32 {
        self.perm[id as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }
}

/// Builds a permutation from an affine rule; `None` sends a place to P∞,
/// and P∞ is fixed.
fn from_affine<F>(places: &PlaceSet, tag: AutTag, rule: F) -> Result<Automorphism, GroupError>
where
    F: Fn([FieldElement; 3]) -> Option<[FieldElement; 3]>,
{
    let inf = places.infinity();
    let mut perm = Vec::with_capacity(places.len());
    for (i, c) in places.coords.iter().enumerate() {
        match rule(*c) {
            None => perm.push(inf),
            Some(img) => {
                if !places.on_curve(img) {
                    return Err(GroupError::Equation(i));
                }
                perm.push(places.id_of(&img).ok_or(GroupError::Equation(i))?);
            }
        }
    }
    perm.push(inf);
    let a = Automorphism { perm, tag };
    check_bijective(&a)?;
    Ok(a)
}

fn check_bijective(a: &Automorphism) -> Result<(), GroupError> {
    let mut seen = vec![false; a.perm.len()];
    for &p in &a.perm {
        if std::mem::replace(&mut seen[p as usize], true) {
            return Err(GroupError::NotBijective);
        }
    }
    Ok(())
}

/// (x, y, t) ↦ (Ax + b, A^{q0+1} y + A b^{q0} x + c, δ t), fixing P∞.
pub fn gen_stabilizer(
    places: &PlaceSet,
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
    delta: FieldElement,
) -> Result<Automorphism, GroupError> {
    let f = &places.field;
    let p = &places.params;
    for (name, e) in [("A", a), ("b", b), ("c", c)] {
        if !f.in_subfield(e, 3) {
            return Err(GroupError::NotInFq(name));
        }
    }
    if a.is_zero() {
        return Err(GroupError::ZeroScale);
    }
    if f.pow(delta, p.m as u128) != a {
        return Err(GroupError::BadDelta);
    }
    let a_y = f.pow(a, (p.q0 + 1) as u128);
    let b_x = f.mul(a, f.pow(b, p.q0 as u128));
    let tag = AutTag::Stabilizer { a, b, c, delta };
    from_affine(places, tag, |[x, y, t]| {
        Some([
            f.add(f.mul(a, x), b),
            f.add(f.add(f.mul(a_y, y), f.mul(b_x, x)), c),
            f.mul(delta, t),
        ])
    })
}

/// The affine rule (x, y, t) ↦ (ax + b, a^{q0+1} y + b^{q0} x + c, a t), kept to
/// test which reading of the stabilizer preserves the curve.
pub fn literal_theta(
    places: &PlaceSet,
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
) -> Result<Automorphism, GroupError> {
    let f = &places.field;
    let p = &places.params;
    let a_y = f.pow(a, (p.q0 + 1) as u128);
    let b_x = f.pow(b, p.q0 as u128);
    from_affine(places, AutTag::Composite, |[x, y, t]| {
        Some([
            f.add(f.mul(a, x), b),
            f.add(f.add(f.mul(a_y, y), f.mul(b_x, x)), c),
            f.mul(a, t),
        ])
    })
}

/// t ↦ λ t.
pub fn gen_gamma(places: &PlaceSet, lambda: FieldElement) -> Result<Automorphism, GroupError> {
    let f = &places.field;
    if lambda.is_zero() || f.multiplicative_order(lambda)? != places.params.m {
        return Err(GroupError::BadLambda);
    }
    from_affine(places, AutTag::Gamma(lambda), |[x, y, t]| {
        Some([x, y, f.mul(lambda, t)])
    })
}

/// The lifted involution (x, y, t) ↦ (α/β, y/β, t/β) with α = y^{2q0} + x^{2q0+1}
/// and β = x y^{2q0} + α^{2q0}. Places with β = 0 and P∞ are paired by the only
/// bijective completion.
pub fn gen_phi(places: &PlaceSet) -> Result<Automorphism, GroupError> {
    let f = &places.field;
    let e = 2 * places.params.q0 as u128;
    let inf = places.infinity();
    let n = places.len();
    let mut perm = vec![u32::MAX; n];
    let mut hit = vec![false; n];
    let mut exceptional = Vec::new();
    for (i, &[x, y, t]) in places.coords.iter().enumerate() {
        let alpha = f.add(f.pow(y, e), f.pow(x, e + 1));
        let beta = f.add(f.mul(x, f.pow(y, e)), f.pow(alpha, e));
        if beta.is_zero() {
            exceptional.push(i);
            continue;
        }
        let img = [f.div(alpha, beta)?, f.div(y, beta)?, f.div(t, beta)?];
        if !places.on_curve(img) {
            return Err(GroupError::Equation(i));
        }
        let j = places.id_of(&img).ok_or(GroupError::Equation(i))?;
        if std::mem::replace(&mut hit[j as usize], true) {
            return Err(GroupError::NotBijective);
        }
        perm[i] = j;
    }
    let unhit: Vec<u32> = (0..n as u32).filter(|&j| !hit[j as usize]).collect();
    if exceptional.len() != 1 || unhit.len() != 2 || !unhit.contains(&inf) {
        return Err(GroupError::Completion(exceptional.len()));
    }
    perm[exceptional[0]] = inf;
    perm[inf as usize] = unhit.into_iter().find(|&j| j != inf).unwrap();
    let a = Automorphism {
        perm,
        tag: AutTag::Phi,
    };
    check_bijective(&a)?;
    Ok(a)
}

/// a ∘ b: apply b first.
pub fn compose(a: &Automorphism, b: &Automorphism) -> Automorphism {
    assert_eq!(
        a.perm.len(),
        b.perm.len(),
        "permutations on different place sets"
    );
    Automorphism {
        perm: b.perm.iter().map(|&p| a.perm[p as usize]).collect(),
        tag: AutTag::Composite,
    }
}

pub fn inverse(a: &Automorphism) -> Automorphism {
    let mut perm = vec![0u32; a.perm.len()];
    for (i, &p) in a.perm.iter().enumerate() {
        perm[p as usize] = i as u32;
    }
    Automorphism {
        perm,
        tag: AutTag::Composite,
    }
}

pub fn power(a: &Automorphism, n: u64) -> Automorphism {
    let mut perm = vec![0u32; a.perm.len()];
    let mut seen = vec![false; a.perm.len()];
    let mut cycle = Vec::new();
    for start in 0..a.perm.len() {
        if seen[start] {
            continue;
        }
        cycle.clear();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            cycle.push(p as u32);
            p = a.perm[p] as usize;
        }
        let len = cycle.len();
        let shift = (n % len as u64) as usize;
        for (i, &c) in cycle.iter().enumerate() {
            perm[c as usize] = cycle[(i + shift) % len];
        }
    }
    Automorphism {
        perm,
        tag: AutTag::Composite,
    }
}

pub fn commutator(a: &Automorphism, b: &Automorphism) -> Automorphism {
    compose(&compose(&inverse(a), &inverse(b)), &compose(a, b))
}

pub fn fixed_points(a: &Automorphism) -> usize {
    a.perm
        .iter()
        .enumerate()
        .filter(|(i, &p)| *i as u32 == p)
        .count()
}

/// Order as the lcm of the cycle lengths.
pub fn element_order(a: &Automorphism) -> u64 {
    let mut seen = vec![false; a.perm.len()];
    let mut ord = 1u64;
    for start in 0..a.perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = a.perm[p] as usize;
            len += 1;
        }
        ord = ord.lcm(&len);
    }
    ord
}

/// Orbit sizes of the group generated by `gens`, sorted ascending.
pub fn orbits(n: usize, gens: &[Automorphism]) -> Vec<usize> {
    let mut comp = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        comp[start] = id;
        let mut queue = VecDeque::from([start]);
        let mut size = 0;
        while let Some(p) = queue.pop_front() {
            size += 1;
            for g in gens {
                let j = g.perm[p] as usize;
                if comp[j] == usize::MAX {
                    comp[j] = id;
                    queue.push_back(j);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes
}

/// Order of the group generated by `gens`, by closure. Aborts past `limit`.
pub fn closure_order(gens: &[Automorphism], limit: usize) -> Option<usize> {
    let first = gens.first()?;
    let id: Vec<u32> = (0..first.perm.len() as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let next: Vec<u32> = p.iter().map(|&i| g.perm[i as usize]).collect();
            if seen.insert(next.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(next);
            }
        }
    }
    Some(seen.len())
}

/// Standard generators of the group at q = 8.
#[derive(Clone, Debug)]
pub struct Generators {
    /// Stabilizer of P∞ with δ = A^r, r m ≡ 1 mod (q - 1).
    pub stabilizer: Vec<Automorphism>,
    pub gamma: Automorphism,
    pub phi: Automorphism,
    /// Primitive element of F_q used for A.
    pub fq_primitive: FieldElement,
    /// Exponent r with δ = A^r.
    pub delta_exponent: u64,
}

impl Generators {
    /// Elements of the simple factor only (no C_m component).
    pub fn simple_part(&self) -> Vec<Automorphism> {
        let mut v = self.stabilizer.clone();
        v.push(self.phi.clone());
        v
    }

    pub fn all(&self) -> Vec<Automorphism> {
        let mut v = self.simple_part();
        v.push(self.gamma.clone());
        v
    }
}

/// Elements of F_q inside the ambient field, zero first.
pub fn fq_elements(places: &PlaceSet) -> Vec<FieldElement> {
    let f = &places.field;
    f.elements().filter(|&e| f.in_subfield(e, 3)).collect()
}

/// An element of F_{q^4} of exact order m.
pub fn primitive_mth_root(places: &PlaceSet) -> FieldElement {
    let f = &places.field;
    let g = f.primitive_element();
    f.pow(g, ((f.order() - 1) / places.params.m) as u128)
}

/// r with r m ≡ 1 mod (q - 1), so that δ = A^r satisfies δ^m = A for A in F_q^*.
pub fn delta_exponent(params: &CurveParams) -> u64 {
    let n = params.q - 1;
    (1..n)
        .find(|r| (r * params.m) % n == 1)
        .expect("gcd(m, q - 1) = 1")
}

pub fn generators(places: &PlaceSet) -> Result<Generators, GroupError> {
    let f = &places.field;
    let zero = FieldElement::ZERO;
    let one = f.constant(1);
    let fq = fq_elements(places);
    let prim = fq
        .iter()
        .copied()
        .skip(1)
        .find(|&e| f.multiplicative_order(e).ok() == Some(places.params.q - 1))
        .expect("F_q^* is cyclic");
    let r = delta_exponent(&places.params);
    let mut stabilizer = vec![gen_stabilizer(
        places,
        prim,
        zero,
        zero,
        f.pow(prim, r as u128),
    )?];
    // b and c over an F_2-basis of F_q.
    let basis: Vec<FieldElement> = (0..3).map(|i| f.pow(prim, i)).collect();
    for &b in &basis {
        stabilizer.push(gen_stabilizer(places, one, b, zero, one)?);
    }
    for &c in &basis {
        stabilizer.push(gen_stabilizer(places, one, zero, c, one)?);
    }
    let gamma = gen_gamma(places, primitive_mth_root(places))?;
    let phi = gen_phi(places)?;
    Ok(Generators {
        stabilizer,
        gamma,
        phi,
        fq_primitive: prim,
        delta_exponent: r,
    })
}

/// Random products of commutators of `pool`, powered down to exact order `target`.
pub fn search_order(
    pool: &[Automorphism],
    target: u64,
    seed: u64,
) -> Result<Automorphism, GroupError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ target);
    for _ in 0..SEARCH_RETRIES {
        let len = rng.gen_range(1..=4);
        let mut g = commutator(
            &pool[rng.gen_range(0..pool.len())],
            &pool[rng.gen_range(0..pool.len())],
        );
        for _ in 1..len {
            let h = commutator(
                &pool[rng.gen_range(0..pool.len())],
                &pool[rng.gen_range(0..pool.len())],
            );
            g = compose(&g, &h);
        }
        let o = element_order(&g);
        if o % target == 0 {
            return Ok(power(&g, o / target));
        }
    }
    Err(GroupError::SearchExhausted(target))
}

/// One line of the brute-force verification.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub check: String,
    pub expected: Vec<u64>,
    pub observed: Vec<u64>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub q: u64,
    pub modulus: String,
    pub places: usize,
    pub orbit_sizes: Vec<usize>,
    pub rows: Vec<CheckRow>,
    pub pass: bool,
}

fn row(check: impl Into<String>, expected: Vec<u64>, observed: Vec<u64>) -> CheckRow {
    CheckRow {
        check: check.into(),
        pass: expected == observed,
        expected,
        observed,
    }
}

/// Runs the full q = 8 suite: place counts, orbits, stabilizer order,
/// commutation, and the fixed-place count of a representative of every class.
pub fn verify(places: &PlaceSet) -> Result<GroupReport, GroupError> {
    let p = places.params;
    let q = p.q;
    let m = p.m;
    let f = &places.field;
    let gens = generators(places)?;
    let mut rows = Vec::new();

    rows.push(row(
        "places",
        vec![q.pow(4) + 1 + 2 * 196 * q * q],
        vec![places.len() as u64],
    ));
    rows.push(row(
        "fq_rational_places",
        vec![q * q + 1],
        vec![places.fq_rational() as u64],
    ));
    rows.push(row(
        "t_zero_places",
        vec![q * q + 1],
        vec![places.with_t_zero() as u64],
    ));

    let orbit_sizes = orbits(places.len(), &gens.all());
    let tame = q * q * (q * q + 1) * (q - 1);
    rows.push(row(
        "orbits",
        vec![q * q + 1, tame],
        orbit_sizes.iter().map(|&s| s as u64).collect(),
    ));

    let stab_order = closure_order(&gens.stabilizer, 10_000).unwrap_or(0) as u64;
    rows.push(row(
        "stabilizer_order",
        vec![q * q * (q - 1)],
        vec![stab_order],
    ));

    let commute = gens
        .simple_part()
        .iter()
        .all(|g| compose(g, &gens.gamma) == compose(&gens.gamma, g));
    rows.push(row("gamma_commutes", vec![1], vec![commute as u64]));

    rows.push(row(
        "gamma_order",
        vec![m],
        vec![element_order(&gens.gamma)],
    ));
    let tau_val = i_sigma(ContributionClass::plain(ClassTag::TauPower), &p)
        .map_err(|_| GroupError::WrongFamily)?;
    let tau_val = u64::try_from(tau_val).unwrap_or(u64::MAX);
    for k in 1..m {
        let tk = power(&gens.gamma, k);
        rows.push(row(
            format!("tau^{k}"),
            vec![tau_val],
            vec![fixed_points(&tk) as u64],
        ));
    }

    let phi = &gens.phi;
    rows.push(row(
        "phi_involution",
        vec![1],
        vec![compose(phi, phi).is_identity() as u64],
    ));
    let origin = places
        .id_of(&[FieldElement::ZERO, FieldElement::ZERO, FieldElement::ZERO])
        .expect("origin is a place");
    let swaps = phi.apply(places.infinity()) == origin && phi.apply(origin) == places.infinity();
    rows.push(row(
        "phi_swaps_infinity_origin",
        vec![1],
        vec![swaps as u64],
    ));
    rows.push(row("phi_fixed", vec![1], vec![fixed_points(phi) as u64]));

    let zero = FieldElement::ZERO;
    let one = f.constant(1);
    let a7 = gens.fq_primitive;
    let order2 = gen_stabilizer(places, one, zero, one, one)?;
    let order4 = gen_stabilizer(places, one, one, zero, one)?;
    let order7 = gen_stabilizer(
        places,
        a7,
        zero,
        zero,
        f.pow(a7, gens.delta_exponent as u128),
    )?;
    let simple = gens.simple_part();
    let order13 = search_order(&simple, q + 2 * p.q0 + 1, SEARCH_SEED)?;
    let order5 = search_order(&simple, m, SEARCH_SEED)?;

    let val = |c: ContributionClass| -> Result<u64, GroupError> {
        let v = i_sigma(c, &p).map_err(|_| GroupError::WrongFamily)?;
        Ok(u64::try_from(v).expect("small"))
    };
    let filt = filtration(&p);
    let reps: [(ClassTag, &Automorphism, u64); 5] = [
        (ClassTag::Order2, &order2, 2),
        (ClassTag::Order4, &order4, 4),
        (ClassTag::DivQMinus1, &order7, q - 1),
        (ClassTag::DivSingerPlus, &order13, q + 2 * p.q0 + 1),
        (ClassTag::DivMPlain, &order5, m),
    ];
    for (tag, rep, ord) in reps {
        let name = tag.name(true);
        rows.push(row(
            format!("{name}_order"),
            vec![ord],
            vec![element_order(rep)],
        ));
        let fixed = fixed_points(rep) as u64;
        match filt.depth_of(tag, true) {
            Some(d) => {
                rows.push(row(format!("{name}_fixed"), vec![1], vec![fixed]));
                let from_filt = u64::try_from(filt.i_from_membership(d)).expect("small");
                rows.push(row(
                    format!("{name}_i_from_filtration"),
                    vec![val(ContributionClass::plain(tag))?],
                    vec![from_filt],
                ));
            }
            None => rows.push(row(
                format!("{name}_fixed"),
                vec![val(ContributionClass::plain(tag))?],
                vec![fixed],
            )),
        }
        if tag != ClassTag::DivMPlain {
            let tw = ContributionClass::twisted(tag);
            let observed: Vec<u64> = (1..m)
                .map(|j| fixed_points(&compose(rep, &power(&gens.gamma, j))) as u64)
                .collect();
            rows.push(row(
                format!("{name}_twisted_fixed"),
                vec![val(tw)?; (m - 1) as usize],
                observed,
            ));
        }
    }
    let mut twisted5: Vec<u64> = (1..m)
        .map(|j| fixed_points(&compose(&order5, &power(&gens.gamma, j))) as u64)
        .collect();
    let total5 = twisted5.iter().sum::<u64>();
    rows.push(row("div_m_twisted_fixed_total", vec![4 * m], vec![total5]));
    twisted5.sort_unstable();
    let mut expected5 =
        vec![val(ContributionClass::twisted(ClassTag::DivMPlain))?; (m - 2) as usize];
    expected5.push(val(ContributionClass::twisted(ClassTag::DivMSpecialJ))?);
    expected5.sort_unstable();
    rows.push(row("div_m_twisted_fixed_sorted", expected5, twisted5));

    let pass = rows.iter().all(|r| r.pass);
    Ok(GroupReport {
        q,
        modulus: f.modulus_string(),
        places: places.len(),
        orbit_sizes,
        rows,
        pass,
    })
}
