//! Arithmetic in GF(2^k) and GF(3^k).
//!
//! Elements are packed into a single `u64`. In characteristic 2 bit `i` is the
//! coefficient of `x^i`. In characteristic 3 two bitplanes are used: bit `i`
//! of the low word marks coefficient 1, bit `i` of the high word marks
//! coefficient 2.
//!
//! Linear maps over GF(p) (Frobenius powers, subfield traces) are stored as the
//! images of the basis `1, x, ..., x^(k-1)` and applied column by column.

use std::fmt;

use thiserror::Error;

/// Largest supported extension degree in characteristic 2.
pub const MAX_DEGREE_GF2: u32 = 20;
/// Largest supported extension degree in characteristic 3.
pub const MAX_DEGREE_GF3: u32 = 18;

const HI: u32 = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("unsupported field GF({p}^{k})")]
    Unsupported { p: u32, k: u32 },
    #[error("modulus {0} is not irreducible")]
    Reducible(String),
    #[error("modulus must be monic of degree {expected}, got {got:?}")]
    BadModulus { expected: u32, got: Vec<u8> },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{d} does not divide {k}")]
    NotADivisor { d: u32, k: u32 },
    #[error("{m} does not divide {order}")]
    NotAnMthPowerGroup { m: u64, order: u64 },
    #[error("subfield size {0} is not a power of the characteristic")]
    NotASubfieldSize(u64),
}

/// Default moduli for characteristic 2, by degree: exponents of the nonzero terms.
///
/// Each is the first irreducible trinomial `x^k + x^a + 1` in increasing `a`,
/// or, when none exists, the first irreducible pentanomial in lexicographic
/// order of its middle exponents. Degree 1 uses `x`.
const DEFAULT_GF2: [&[u32]; 20] = [
    &[1],
    &[2, 1, 0],
    &[3, 1, 0],
    &[4, 1, 0],
    &[5, 2, 0],
    &[6, 1, 0],
    &[7, 1, 0],
    &[8, 4, 3, 2, 0],
    &[9, 1, 0],
    &[10, 3, 0],
    &[11, 2, 0],
    &[12, 3, 0],
    &[13, 4, 3, 1, 0],
    &[14, 5, 0],
    &[15, 1, 0],
    &[16, 5, 3, 2, 0],
    &[17, 3, 0],
    &[18, 3, 0],
    &[19, 5, 2, 1, 0],
    &[20, 3, 0],
];

/// Default moduli for characteristic 3, by degree: `(exponent, coefficient)` terms.
///
/// Each is the first irreducible `x^k + c1 x^a + c0` in increasing `a`, then
/// `c1`, then `c0`. Degree 1 uses `x`.
const DEFAULT_GF3: [&[(u32, u8)]; 18] = [
    &[(1, 1)],
    &[(2, 1), (1, 1), (0, 2)],
    &[(3, 1), (1, 2), (0, 1)],
    &[(4, 1), (1, 1), (0, 2)],
    &[(5, 1), (1, 2), (0, 1)],
    &[(6, 1), (1, 1), (0, 2)],
    &[(7, 1), (2, 1), (0, 2)],
    &[(8, 1), (2, 1), (0, 2)],
    &[(9, 1), (4, 1), (0, 2)],
    &[(10, 1), (2, 2), (0, 1)],
    &[(11, 1), (2, 1), (0, 2)],
    &[(12, 1), (2, 1), (0, 2)],
    &[(13, 1), (1, 2), (0, 1)],
    &[(14, 1), (1, 1), (0, 2)],
    &[(15, 1), (2, 1), (0, 2)],
    &[(16, 1), (4, 1), (0, 2)],
    &[(17, 1), (1, 2), (0, 1)],
    &[(18, 1), (7, 1), (0, 2)],
];

/// The default modulus of GF(p^k) as a coefficient list, constant term first.
pub fn default_modulus(p: u32, k: u32) -> Result<Vec<u8>, GfError> {
    check_supported(p, k)?;
    let mut c = vec![0u8; k as usize + 1];
    match p {
        2 => {
            for &e in DEFAULT_GF2[k as usize - 1] {
                c[e as usize] = 1;
            }
        }
        _ => {
            for &(e, v) in DEFAULT_GF3[k as usize - 1] {
                c[e as usize] = v;
            }
        }
    }
    Ok(c)
}

fn check_supported(p: u32, k: u32) -> Result<(), GfError> {
    let ok = match p {
        2 => (1..=MAX_DEGREE_GF2).contains(&k),
        3 => (1..=MAX_DEGREE_GF3).contains(&k),
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(GfError::Unsupported { p, k })
    }
}

/// An element of some GF(p^k), in the packed encoding of its [`FieldSpec`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct FieldElement(pub u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A GF(p)-linear map on GF(p^k), stored by the images of the power basis.
#[derive(Clone, Debug)]
pub struct LinearMap {
    p: u32,
    cols: Vec<u64>,
}

impl LinearMap {
    #[inline]
    pub fn apply(&self, e: FieldElement) -> FieldElement {
        let mut acc = 0u64;
        if self.p == 2 {
            let mut bits = e.0;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                acc ^= self.cols[i];
                bits &= bits - 1;
            }
            FieldElement(acc)
        } else {
            let mut ones = e.0 & 0xffff_ffff;
            let mut twos = e.0 >> HI;
            while ones != 0 {
                let i = ones.trailing_zeros() as usize;
                acc = add3(acc, self.cols[i]);
                ones &= ones - 1;
            }
            while twos != 0 {
                let i = twos.trailing_zeros() as usize;
                acc = add3(acc, neg3(self.cols[i]));
                twos &= twos - 1;
            }
            FieldElement(acc)
        }
    }
}

#[inline]
fn neg3(a: u64) -> u64 {
    (a >> HI) | (a << HI)
}

#[inline]
fn add3(a: u64, b: u64) -> u64 {
    let (a1, a2) = (a & 0xffff_ffff, a >> HI);
    let (b1, b2) = (b & 0xffff_ffff, b >> HI);
    let a0 = !(a1 | a2);
    let b0 = !(b1 | b2);
    let r1 = (a1 & b0) | (a0 & b1) | (a2 & b2);
    let r2 = (a2 & b0) | (a0 & b2) | (a1 & b1);
    (r1 & 0xffff_ffff) | ((r2 & 0xffff_ffff) << HI)
}

/// An immutable field context GF(p^k) = GF(p)[x]/(f).
#[derive(Clone, Debug)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    modulus: Vec<u8>,
    order: u64,
    mask: u64,
    /// x^k reduced mod f, i.e. the negated low part of f.
    xk: u64,
    /// f as a bit pattern including x^k (characteristic 2 only).
    fbits: u64,
    frob: LinearMap,
}

impl FieldSpec {
    /// Build GF(p^k), using the documented default modulus when none is given.
    pub fn new(p: u32, k: u32, modulus: Option<&[u8]>) -> Result<Self, GfError> {
        check_supported(p, k)?;
        let modulus = match modulus {
            Some(m) => {
                let m: Vec<u8> = m.iter().map(|&c| c % p as u8).collect();
                if m.len() != k as usize + 1 || m[k as usize] != 1 {
                    return Err(GfError::BadModulus {
                        expected: k,
                        got: m,
                    });
                }
                m
            }
            None => default_modulus(p, k)?,
        };
        let spec = Self::unchecked(p, k, modulus);
        if !spec.modulus_is_irreducible() {
            return Err(GfError::Reducible(spec.modulus_string()));
        }
        Ok(spec)
    }

    /// GF(p^k) with its default modulus.
    pub fn default_for(p: u32, k: u32) -> Result<Self, GfError> {
        Self::new(p, k, None)
    }

    fn unchecked(p: u32, k: u32, modulus: Vec<u8>) -> Self {
        let order = (p as u64).pow(k);
        let mask = (1u64 << k) - 1;
        let mut xk = 0u64;
        let mut fbits = 0u64;
        for (i, &c) in modulus.iter().enumerate().take(k as usize) {
            let neg = (p as u8 - c) % p as u8;
            xk |= encode_coeff(p, i as u32, neg);
            if c != 0 {
                fbits |= 1 << i;
            }
        }
        fbits |= 1 << k;
        let mut spec = FieldSpec {
            p,
            k,
            modulus,
            order,
            mask,
            xk,
            fbits,
            frob: LinearMap {
                p,
                cols: Vec::new(),
            },
        };
        let cols = (0..k)
            .map(|i| spec.pow_small(spec.basis(i), p as u64).0)
            .collect();
        spec.frob = LinearMap { p, cols };
        spec
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Number of elements p^k.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// Human readable modulus such as `x^12 + x^3 + 1`.
    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            terms.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}{mono}"),
            });
        }
        terms.join(" + ")
    }

    /// The basis element x^i, for i < k.
    pub fn basis(&self, i: u32) -> FieldElement {
        assert!(i < self.k, "basis index out of range");
        FieldElement(1 << i)
    }

    /// The generator `x` of the power basis (reduced when k = 1).
    pub fn x(&self) -> FieldElement {
        if self.k == 1 {
            FieldElement(self.xk)
        } else {
            FieldElement(2)
        }
    }

    /// Embed an element of GF(p).
    pub fn constant(&self, c: u64) -> FieldElement {
        FieldElement(encode_coeff(self.p, 0, (c % self.p as u64) as u8))
    }

    /// Element with the given coefficients, constant term first.
    pub fn from_coeffs(&self, coeffs: &[u8]) -> FieldElement {
        let mut v = 0u64;
        for (i, &c) in coeffs.iter().enumerate().take(self.k as usize) {
            v |= encode_coeff(self.p, i as u32, c % self.p as u8);
        }
        FieldElement(v)
    }

    /// Coefficient vector of length k, constant term first.
    pub fn to_coeffs(&self, e: FieldElement) -> Vec<u8> {
        (0..self.k).map(|i| self.coeff(e, i)).collect()
    }

    #[inline]
    pub fn coeff(&self, e: FieldElement, i: u32) -> u8 {
        if self.p == 2 {
            ((e.0 >> i) & 1) as u8
        } else if (e.0 >> i) & 1 == 1 {
            1
        } else if (e.0 >> (i + HI)) & 1 == 1 {
            2
        } else {
            0
        }
    }

    /// The element at position `index` of the lexicographic enumeration:
    /// the base-p digits of `index` are the coefficients, constant term first.
    #[inline]
    pub fn element_at(&self, index: u64) -> FieldElement {
        if self.p == 2 {
            return FieldElement(index & self.mask);
        }
        let mut v = 0u64;
        let mut n = index;
        let mut i = 0;
        while n > 0 {
            match n % 3 {
                1 => v |= 1 << i,
                2 => v |= 1 << (i + HI),
                _ => {}
            }
            n /= 3;
            i += 1;
        }
        FieldElement(v)
    }

    /// Inverse of [`FieldSpec::element_at`].
    pub fn index_of(&self, e: FieldElement) -> u64 {
        if self.p == 2 {
            return e.0;
        }
        (0..self.k)
            .rev()
            .fold(0u64, |acc, i| acc * 3 + self.coeff(e, i) as u64)
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            FieldElement(a.0 ^ b.0)
        } else {
            FieldElement(add3(a.0, b.0))
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            a
        } else {
            FieldElement(neg3(a.0))
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            self.mul2(a.0, b.0)
        } else {
            self.mul3(a.0, b.0)
        }
    }

    #[inline]
    fn mul2(&self, a: u64, b: u64) -> FieldElement {
        let mut prod = 0u64;
        let mut bb = b;
        while bb != 0 {
            let i = bb.trailing_zeros();
            prod ^= a << i;
            bb &= bb - 1;
        }
        let k = self.k;
        let mut i = 2 * k;
        while i > k {
            i -= 1;
            if (prod >> i) & 1 == 1 {
                prod ^= self.fbits << (i - k);
            }
        }
        FieldElement(prod & self.mask)
    }

    #[inline]
    fn mul3(&self, a: u64, b: u64) -> FieldElement {
        let k = self.k;
        let top = k - 1;
        let mask = self.mask | (self.mask << HI);
        let na = neg3(a);
        let nx = neg3(self.xk);
        let mut acc = 0u64;
        let mut i = k;
        while i > 0 {
            i -= 1;
            let t1 = (acc >> top) & 1;
            let t2 = (acc >> (top + HI)) & 1;
            acc = (acc << 1) & mask;
            if t1 == 1 {
                acc = add3(acc, self.xk);
            } else if t2 == 1 {
                acc = add3(acc, nx);
            }
            if (b >> i) & 1 == 1 {
                acc = add3(acc, a);
            } else if (b >> (i + HI)) & 1 == 1 {
                acc = add3(acc, na);
            }
        }
        FieldElement(acc)
    }

    #[inline]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    fn pow_small(&self, a: FieldElement, mut n: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.constant(1);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// `a^n`. Exponents are reduced modulo p^k - 1 for nonzero `a`.
    pub fn pow(&self, a: FieldElement, n: u128) -> FieldElement {
        if n == 0 {
            return self.constant(1);
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let r = (n % (self.order as u128 - 1)) as u64;
        self.pow_small(a, r)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, GfError> {
        if a.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        Ok(self.pow_small(a, self.order - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The absolute Frobenius e -> e^p.
    pub fn frobenius(&self, e: FieldElement) -> FieldElement {
        self.frob.apply(e)
    }

    /// The map e -> e^(p^d) as a precomputed linear map.
    pub fn frobenius_map(&self, d: u32) -> LinearMap {
        let cols = (0..self.k)
            .map(|i| {
                let mut e = self.basis(i);
                for _ in 0..d % self.k {
                    e = self.frob.apply(e);
                }
                e.0
            })
            .collect();
        LinearMap { p: self.p, cols }
    }

    /// The trace to GF(p^d) as a precomputed linear map.
    pub fn trace_map(&self, d: u32) -> Result<LinearMap, GfError> {
        if d == 0 || self.k % d != 0 {
            return Err(GfError::NotADivisor { d, k: self.k });
        }
        let step = self.frobenius_map(d);
        let cols = (0..self.k)
            .map(|i| {
                let mut e = self.basis(i);
                let mut acc = FieldElement::ZERO;
                for _ in 0..self.k / d {
                    acc = self.add(acc, e);
                    e = step.apply(e);
                }
                acc.0
            })
            .collect();
        Ok(LinearMap { p: self.p, cols })
    }

    /// Tr_{GF(p^k)/GF(p^d)}(e).
    pub fn subfield_trace(&self, e: FieldElement, d: u32) -> Result<FieldElement, GfError> {
        let t = self.trace_map(d)?.apply(e);
        debug_assert!(self.in_subfield(t, d));
        Ok(t)
    }

    /// Whether `e^(p^d) = e`.
    pub fn in_subfield(&self, e: FieldElement, d: u32) -> bool {
        let mut f = e;
        for _ in 0..d {
            f = self.frob.apply(f);
        }
        f == e
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, e: FieldElement) -> Result<u64, GfError> {
        if e.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        let mut ord = self.order - 1;
        for (prime, _) in factorize(self.order - 1) {
            while ord % prime == 0 && self.pow_small(e, ord / prime) == self.constant(1) {
                ord /= prime;
            }
        }
        Ok(ord)
    }

    /// A generator of the multiplicative group (smallest in enumeration order).
    pub fn primitive_element(&self) -> FieldElement {
        self.elements()
            .skip(1)
            .find(|&e| self.multiplicative_order(e) == Ok(self.order - 1))
            .expect("multiplicative group is cyclic")
    }

    /// Rabin's test: x^(p^k) = x mod f and gcd(x^(p^d) - x, f) = 1 for every proper divisor d of k.
    fn modulus_is_irreducible(&self) -> bool {
        let x = self.x();
        let mut powers = Vec::with_capacity(self.k as usize + 1);
        let mut e = x;
        powers.push(e);
        for _ in 0..self.k {
            e = self.frob.apply(e);
            powers.push(e);
        }
        if powers[self.k as usize] != x {
            return false;
        }
        (1..self.k).filter(|d| self.k % d == 0).all(|d| {
            let diff = self.to_coeffs(self.sub(powers[d as usize], x));
            let g = poly_gcd(self.p, &diff, &self.modulus);
            g.len() == 1
        })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {}", self.p, self.k, self.modulus_string())
    }
}

#[inline]
fn encode_coeff(p: u32, i: u32, c: u8) -> u64 {
    match (p, c) {
        (_, 0) => 0,
        (2, _) => 1 << i,
        (_, 1) => 1 << i,
        _ => 1 << (i + HI),
    }
}

fn trim(mut a: Vec<u8>) -> Vec<u8> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
    a
}

fn poly_rem(p: u32, a: &[u8], b: &[u8]) -> Vec<u8> {
    let p8 = p as u8;
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = if b[db] == 1 { 1 } else { 2 };
    while r.len() > db && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let factor = (r[dr] * lead_inv) % p8;
        for i in 0..=db {
            let sub = (factor * b[i]) % p8;
            r[dr - db + i] = (r[dr - db + i] + p8 - sub) % p8;
        }
        r = trim(r);
        if dr == 0 {
            break;
        }
    }
    r
}

fn poly_gcd(p: u32, a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(p, &a, &b);
        a = b;
        b = r;
    }
    a
}

/// Prime factorization by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Counts solutions of `y^q - y = c` (`y^q + y = c` in characteristic 2) in GF(p^k).
#[derive(Clone, Debug)]
pub struct ArtinSchreier {
    q: u64,
    trace: LinearMap,
}

impl ArtinSchreier {
    pub fn new(field: &FieldSpec, q: u64) -> Result<Self, GfError> {
        let d = subfield_degree(field.characteristic(), q)?;
        Ok(ArtinSchreier {
            q,
            trace: field.trace_map(d)?,
        })
    }

    #[inline]
    pub fn count(&self, c: FieldElement) -> u64 {
        if self.trace.apply(c).is_zero() {
            self.q
        } else {
            0
        }
    }
}

fn subfield_degree(p: u32, q: u64) -> Result<u32, GfError> {
    let mut d = 0;
    let mut v = 1u64;
    while v < q {
        v *= p as u64;
        d += 1;
    }
    if v != q || d == 0 {
        return Err(GfError::NotASubfieldSize(q));
    }
    Ok(d)
}

/// Counts m-th roots of field elements, for m dividing p^k - 1.
#[derive(Clone, Debug)]
pub struct PowerResidue {
    m: u64,
    exponent: u64,
}

impl PowerResidue {
    pub fn new(field: &FieldSpec, m: u64) -> Result<Self, GfError> {
        let group = field.order() - 1;
        if m == 0 || group % m != 0 {
            return Err(GfError::NotAnMthPowerGroup { m, order: group });
        }
        Ok(PowerResidue {
            m,
            exponent: group / m,
        })
    }

    #[inline]
    pub fn count(&self, field: &FieldSpec, s: FieldElement) -> u64 {
        if s.is_zero() {
            1
        } else if self.m == 1 || field.pow_small(s, self.exponent) == field.constant(1) {
            self.m
        } else {
            0
        }
    }
}

/// Number of y in GF(p^k) with y^q - y = c, q = p^d, d | k.
pub fn artin_schreier_count(field: &FieldSpec, c: FieldElement, q: u64) -> Result<u64, GfError> {
    Ok(ArtinSchreier::new(field, q)?.count(c))
}

/// Number of t in GF(p^k) with t^m = s, m | p^k - 1.
pub fn mth_root_count(field: &FieldSpec, s: FieldElement, m: u64) -> Result<u64, GfError> {
    Ok(PowerResidue::new(field, m)?.count(field, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_irreducible() {
        for k in 1..=MAX_DEGREE_GF2 {
            FieldSpec::default_for(2, k).unwrap();
        }
        for k in 1..=MAX_DEGREE_GF3 {
            FieldSpec::default_for(3, k).unwrap();
        }
    }

    #[test]
    fn reducible_rejected() {
        // x^4 + 1 = (x + 1)^4
        assert!(matches!(
            FieldSpec::new(2, 4, Some(&[1, 0, 0, 0, 1])),
            Err(GfError::Reducible(_))
        ));
        // (x^2 + x + 1)(x^3 + x + 1) has no roots and no factor of degree dividing 5
        let f = [1, 0, 0, 0, 1, 1];
        assert!(FieldSpec::new(2, 5, Some(&f)).is_err());
        assert!(FieldSpec::new(5, 2, None).is_err());
        assert!(FieldSpec::new(2, 21, None).is_err());
    }

    #[test]
    fn gf4_table() {
        let f = FieldSpec::default_for(2, 2).unwrap();
        let x = f.x();
        let x2 = f.mul(x, x);
        assert_eq!(x2, f.add(x, f.constant(1)));
        assert_eq!(f.mul(x2, x), f.constant(1));
    }

    #[test]
    fn gf9_arith() {
        let f = FieldSpec::default_for(3, 2).unwrap();
        // x^2 = 2x + 1 mod x^2 + x + 2
        let x = f.x();
        assert_eq!(f.mul(x, x), f.from_coeffs(&[1, 2]));
        assert_eq!(f.add(f.constant(2), f.constant(2)), f.constant(1));
        assert_eq!(f.multiplicative_order(x).unwrap(), 8);
    }

    #[test]
    fn index_roundtrip() {
        let f = FieldSpec::default_for(3, 5).unwrap();
        for i in 0..f.order() {
            assert_eq!(f.index_of(f.element_at(i)), i);
        }
    }

    #[test]
    fn modulus_string_format() {
        let f = FieldSpec::default_for(2, 12).unwrap();
        assert_eq!(f.modulus_string(), "x^12 + x^3 + 1");
        let g = FieldSpec::default_for(3, 18).unwrap();
        assert_eq!(g.modulus_string(), "x^18 + x^7 + 2");
    }
}
