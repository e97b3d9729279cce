//! Arithmetic in `GF(p^e)`.
//!
//! Elements are stored as base-`p` integers: the element
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` (mod the field modulus) is the
//! integer `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`. The integers `0..p` are
//! therefore the prime subfield and element order is plain integer order.
//!
//! Every field carries a designated primitive element `w`. For `e > 1` it is
//! the class of `x`, so the modulus must be a primitive polynomial. For
//! `e = 1` it is the least primitive root unless a degree-one modulus names
//! another one. The default moduli for `GF(49)`, `GF(121)` and `GF(169)` are
//! the Conway polynomials, which is the representation computer algebra
//! systems use for `w`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Fields up to this order get log/antilog tables.
pub const TABLE_LIMIT: u32 = 1 << 20;

const MAX_DEGREE: usize = 32;

/// Conway polynomials, coefficients in ascending powers.
const CONWAY: &[(u32, u32, &[u32])] = &[
    (7, 2, &[3, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
];

/// A field element: a base-`p` integer in `0..q`, meaningful only together
/// with its [`Field`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Polynomial arithmetic modulo a monic polynomial over `GF(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct PolyRing {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
}

impl PolyRing {
    fn digits(&self, mut x: u32) -> [u64; MAX_DEGREE] {
        let mut d = [0u64; MAX_DEGREE];
        for slot in d.iter_mut().take(self.e as usize) {
            *slot = u64::from(x % self.p);
            x /= self.p;
        }
        d
    }

    fn encode(&self, d: &[u64]) -> u32 {
        d.iter()
            .take(self.e as usize)
            .rev()
            .fold(0u64, |acc, &c| acc * u64::from(self.p) + c) as u32
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let p = u64::from(self.p);
        if self.e == 1 {
            return ((u64::from(a) + u64::from(b)) % p) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut out = [0u64; MAX_DEGREE];
        for i in 0..self.e as usize {
            out[i] = (da[i] + db[i]) % p;
        }
        self.encode(&out)
    }

    fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let p = u64::from(self.p);
        let da = self.digits(a);
        let mut out = [0u64; MAX_DEGREE];
        for i in 0..self.e as usize {
            out[i] = (p - da[i]) % p;
        }
        self.encode(&out)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = u64::from(self.p);
        if self.e == 1 {
            return ((u64::from(a) * u64::from(b)) % p) as u32;
        }
        let e = self.e as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..e {
            if da[i] == 0 {
                continue;
            }
            for j in 0..e {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        // x^e = -(m_0 + ... + m_{e-1} x^{e-1})
        for deg in (e..2 * e - 1).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for i in 0..e {
                let m = u64::from(self.modulus[i]);
                prod[deg - e + i] = (prod[deg - e + i] + (p - c) * m) % p;
            }
        }
        self.encode(&prod)
    }

    fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative order of `x`, or `None` when `x^(q-1) != 1`
    /// (possible only when the modulus is reducible).
    fn order(&self, x: u32, factors: &[u64]) -> Option<u64> {
        let group = u64::from(self.q) - 1;
        if self.pow(x, group) != 1 {
            return None;
        }
        let mut order = group;
        for &r in factors {
            while order % r == 0 && self.pow(x, order / r) == 1 {
                order /= r;
            }
        }
        Some(order)
    }
}

/// `GF(p^e)` with a designated primitive element `w`.
///
/// Construction validates the modulus and, for `q <= 2^20`, builds
/// log/antilog tables so that multiplication and inversion are table
/// lookups. Larger fields fall back to polynomial arithmetic; both paths
/// agree.
#[derive(Clone)]
pub struct Field {
    ring: PolyRing,
    generator: u32,
    /// Distinct prime factors of `q - 1`.
    group_factors: Vec<u64>,
    tables: Option<Tables>,
}

#[derive(Clone)]
struct Tables {
    /// `exp[i] = w^i` for `i < 2(q-1)`.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.generator == other.generator
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.ring.p)
            .field("e", &self.ring.e)
            .field("modulus", &self.ring.modulus)
            .field("w", &self.generator)
            .finish()
    }
}

impl Field {
    /// Builds `GF(p^e)`.
    ///
    /// With `modulus = None`: for `e = 1` the least primitive root becomes
    /// `w`; for `(7,2)`, `(11,2)`, `(13,2)` the Conway polynomial is used;
    /// otherwise the lexicographically least primitive polynomial.
    pub fn new(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(u64::from(p)) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = match p.checked_pow(e) {
            Some(q) if (e as usize) < MAX_DEGREE => q,
            _ => return Err(Error::FieldTooLarge { p, e }),
        };
        let group_factors = prime_factors(u64::from(q) - 1);

        let (modulus, generator) = match modulus {
            Some(m) => {
                let ring = validate_modulus(p, e, q, m)?;
                if e == 1 {
                    let root = ((u64::from(p) - u64::from(m[0])) % u64::from(p)) as u32;
                    (ring.modulus, root)
                } else {
                    if !is_irreducible(&ring) {
                        return Err(Error::ReducibleModulus);
                    }
                    (ring.modulus, p)
                }
            }
            None if e == 1 => {
                let ring = PolyRing { p, e, q, modulus: alloc::vec![0, 1] };
                let root = (1..p)
                    .find(|&g| ring.order(g, &group_factors) == Some(u64::from(p) - 1))
                    .expect("every prime field has a primitive root");
                (ring.modulus, root)
            }
            None => {
                let conway = CONWAY
                    .iter()
                    .find(|(cp, ce, _)| *cp == p && *ce == e)
                    .map(|(_, _, m)| m.to_vec());
                let m = match conway {
                    Some(m) => m,
                    None => least_primitive_modulus(p, e, q, &group_factors),
                };
                (m, p)
            }
        };

        let ring = PolyRing { p, e, q, modulus };
        let tables = if q <= TABLE_LIMIT {
            Some(build_tables(&ring, generator)?)
        } else {
            if ring.order(generator, &group_factors) != Some(u64::from(q) - 1) {
                return Err(Error::NonPrimitiveModulus);
            }
            None
        };
        Ok(Field {
            ring,
            generator,
            group_factors,
            tables,
        })
    }

    /// The prime field `GF(p)`.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    pub fn characteristic(&self) -> u32 {
        self.ring.p
    }

    pub fn degree(&self) -> u32 {
        self.ring.e
    }

    /// Number of elements `q = p^e`.
    pub fn order(&self) -> u32 {
        self.ring.q
    }

    /// Modulus coefficients in ascending powers (monic, length `e + 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.ring.modulus
    }

    /// The designated primitive element `w`.
    pub fn generator(&self) -> Elem {
        Elem(self.generator)
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// All elements in increasing integer order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.ring.q).map(Elem)
    }

    pub fn element(&self, value: u32) -> Result<Elem> {
        if value >= self.ring.q {
            return Err(Error::ElementOutOfRange {
                value,
                order: self.ring.q,
            });
        }
        Ok(Elem(value))
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.0 < self.ring.q
    }

    /// Builds an element from its coefficient vector (ascending powers of `x`).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.ring.e as usize {
            return Err(Error::DimensionMismatch {
                expected: self.ring.e as usize,
                found: coeffs.len(),
            });
        }
        let mut d = [0u64; MAX_DEGREE];
        for (slot, &c) in d.iter_mut().zip(coeffs) {
            if c >= self.ring.p {
                return Err(Error::ElementOutOfRange {
                    value: c,
                    order: self.ring.p,
                });
            }
            *slot = u64::from(c);
        }
        Ok(Elem(self.ring.encode(&d)))
    }

    /// Coefficient vector of `x`, length `e`.
    pub fn coeffs(&self, x: Elem) -> Vec<u32> {
        let d = self.ring.digits(x.0);
        d[..self.ring.e as usize].iter().map(|&c| c as u32).collect()
    }

    /// The image of an integer in the prime subfield (`1 + 1 + ... + 1`).
    pub fn from_int(&self, value: i64) -> Elem {
        Elem(value.rem_euclid(i64::from(self.ring.p)) as u32)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.ring.add(a.0, b.0))
    }

    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.ring.neg(a.0))
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.ring.add(a.0, self.ring.neg(b.0)))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                Elem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
            }
            None => Elem(self.ring.mul(a.0, b.0)),
        }
    }

    /// Multiplication by polynomial arithmetic, bypassing the tables.
    pub fn mul_poly(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.ring.mul(a.0, b.0))
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let group = self.ring.q - 1;
        Ok(match &self.tables {
            Some(t) => Elem(t.exp[((group - t.log[a.0 as usize]) % group) as usize]),
            None => Elem(self.ring.pow(a.0, u64::from(group) - 1)),
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, exp: u64) -> Elem {
        if exp == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let group = u64::from(self.ring.q - 1);
                let l = u64::from(t.log[a.0 as usize]);
                Elem(t.exp[((l * (exp % group)) % group) as usize])
            }
            None => Elem(self.ring.pow(a.0, exp)),
        }
    }

    /// `w^i`, exponent reduced mod `q - 1`.
    pub fn w_pow(&self, i: u64) -> Elem {
        let group = u64::from(self.ring.q - 1);
        let i = i % group;
        match &self.tables {
            Some(t) => Elem(t.exp[i as usize]),
            None => Elem(self.ring.pow(self.generator, i)),
        }
    }

    /// Discrete logarithm base `w`, in `0..q-1`. `None` for zero.
    pub fn dlog(&self, x: Elem) -> Option<u32> {
        if x.0 == 0 {
            return None;
        }
        if let Some(t) = &self.tables {
            return Some(t.log[x.0 as usize]);
        }
        Some(self.baby_step_giant_step(x.0))
    }

    fn baby_step_giant_step(&self, x: u32) -> u32 {
        let group = u64::from(self.ring.q) - 1;
        let m = isqrt_ceil(group);
        let mut baby = BTreeMap::new();
        let mut cur = 1u32;
        for j in 0..m {
            baby.entry(cur).or_insert(j);
            cur = self.ring.mul(cur, self.generator);
        }
        let giant = self.ring.pow(self.generator, group - m % group);
        let mut gamma = x;
        for i in 0..=m {
            if let Some(&j) = baby.get(&gamma) {
                return ((i * m + j) % group) as u32;
            }
            gamma = self.ring.mul(gamma, giant);
        }
        unreachable!("w generates the multiplicative group")
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: Elem) -> Result<u64> {
        if x.0 == 0 {
            return Err(Error::ZeroElement);
        }
        let group = u64::from(self.ring.q) - 1;
        if let Some(t) = &self.tables {
            let l = u64::from(t.log[x.0 as usize]);
            return Ok(group / gcd(group, l));
        }
        Ok(self
            .ring
            .order(x.0, &self.group_factors)
            .expect("nonzero elements of a field are units"))
    }

    pub fn is_primitive(&self, x: Elem) -> Result<bool> {
        Ok(self.element_order(x)? == u64::from(self.ring.q) - 1)
    }

    /// Parses `0`, a decimal integer (read mod `p`), `w`, or `w^i`.
    pub fn parse(&self, token: &str) -> Result<Elem> {
        let tok = token.trim();
        let malformed = || Error::MalformedElement(token.to_string());
        if tok.is_empty() {
            return Err(malformed());
        }
        if tok.bytes().all(|b| b.is_ascii_digit()) {
            let p = u128::from(self.ring.p);
            let value = tok
                .bytes()
                .fold(0u128, |acc, b| (acc * 10 + u128::from(b - b'0')) % p);
            return Ok(Elem(value as u32));
        }
        let exp = match tok.strip_prefix('w') {
            Some("") => 1u64,
            Some(rest) => {
                let digits = rest.strip_prefix('^').ok_or_else(malformed)?;
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(malformed());
                }
                let group = u128::from(self.ring.q - 1);
                digits
                    .bytes()
                    .fold(0u128, |acc, b| (acc * 10 + u128::from(b - b'0')) % group)
                    as u64
            }
            None => return Err(malformed()),
        };
        Ok(self.w_pow(exp))
    }

    /// Formats as `0`, `1` or `w^i` with `0 < i < q - 1`.
    pub fn format(&self, x: Elem) -> String {
        match self.dlog(x) {
            None => "0".to_string(),
            Some(0) => "1".to_string(),
            Some(i) => format!("w^{i}"),
        }
    }

    pub fn format_word(&self, word: &[Elem]) -> Vec<String> {
        word.iter().map(|&x| self.format(x)).collect()
    }

    /// Returns an error unless every element lies in this field.
    pub fn check_all(&self, xs: &[Elem]) -> Result<()> {
        match xs.iter().find(|x| !self.contains(**x)) {
            Some(x) => Err(Error::ElementOutOfRange {
                value: x.0,
                order: self.ring.q,
            }),
            None => Ok(()),
        }
    }
}

fn validate_modulus(p: u32, e: u32, q: u32, m: &[u32]) -> Result<PolyRing> {
    if m.len() != e as usize + 1 {
        return Err(Error::InvalidModulus(format!(
            "expected {} coefficients, got {}",
            e + 1,
            m.len()
        )));
    }
    if m[e as usize] != 1 {
        return Err(Error::InvalidModulus("leading coefficient must be 1".into()));
    }
    if let Some(c) = m.iter().find(|&&c| c >= p) {
        return Err(Error::InvalidModulus(format!("coefficient {c} not below {p}")));
    }
    Ok(PolyRing {
        p,
        e,
        q,
        modulus: m.to_vec(),
    })
}

/// Trial division by every monic polynomial of degree `1..=e/2`.
fn is_irreducible(ring: &PolyRing) -> bool {
    let e = ring.e as usize;
    let p = u64::from(ring.p);
    let modulus: Vec<u64> = ring.modulus.iter().map(|&c| u64::from(c)).collect();
    for deg in 1..=e / 2 {
        let count = p.pow(deg as u32);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(deg + 1);
            let mut c = code;
            for _ in 0..deg {
                divisor.push(c % p);
                c /= p;
            }
            divisor.push(1);
            if poly_rem_is_zero(&modulus, &divisor, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(dividend: &[u64], monic_divisor: &[u64], p: u64) -> bool {
    let mut r = dividend.to_vec();
    let d = monic_divisor.len() - 1;
    for top in (d..r.len()).rev() {
        let c = r[top];
        if c == 0 {
            continue;
        }
        for (i, &m) in monic_divisor.iter().enumerate() {
            let idx = top - d + i;
            r[idx] = (r[idx] + (p - c) * m) % p;
        }
    }
    r.iter().all(|&c| c == 0)
}

fn least_primitive_modulus(p: u32, e: u32, q: u32, factors: &[u64]) -> Vec<u32> {
    let group = u64::from(q) - 1;
    for code in 1..q {
        let mut m = Vec::with_capacity(e as usize + 1);
        let mut c = code;
        for _ in 0..e {
            m.push(c % p);
            c /= p;
        }
        if m[0] == 0 {
            continue;
        }
        m.push(1);
        let ring = PolyRing { p, e, q, modulus: m };
        // x of order q - 1 forces the quotient ring to be a field
        if ring.order(p, factors) == Some(group) {
            return ring.modulus;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

fn build_tables(ring: &PolyRing, generator: u32) -> Result<Tables> {
    let group = (ring.q - 1) as usize;
    let mut exp = Vec::with_capacity(2 * group);
    let mut log = alloc::vec![u32::MAX; ring.q as usize];
    let mut cur = 1u32;
    for i in 0..group {
        if log[cur as usize] != u32::MAX || cur == 0 {
            return Err(Error::NonPrimitiveModulus);
        }
        log[cur as usize] = i as u32;
        exp.push(cur);
        cur = ring.mul(cur, generator);
    }
    if cur != 1 {
        return Err(Error::NonPrimitiveModulus);
    }
    exp.extend_from_within(..group);
    log[0] = 0;
    Ok(Tables { exp, log })
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn isqrt_ceil(n: u64) -> u64 {
    let mut r = 1u64;
    while r * r < n {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn gf49() -> Field {
        Field::new(7, 2, None).unwrap()
    }

    #[test]
    fn gf2_generator_is_one() {
        let f = Field::prime(2).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.generator(), Elem::ONE);
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert_eq!(Field::new(4, 1, None), Err(Error::NonPrimeCharacteristic(4)));
        assert_eq!(Field::new(1, 1, None), Err(Error::NonPrimeCharacteristic(1)));
        assert_eq!(Field::new(5, 0, None), Err(Error::ZeroDegree));
    }

    #[test]
    fn default_gf49_modulus_is_conway() {
        let f = gf49();
        assert_eq!(f.modulus(), &[3, 6, 1]);
        assert_eq!(Field::new(11, 2, None).unwrap().modulus(), &[2, 7, 1]);
        assert_eq!(Field::new(13, 2, None).unwrap().modulus(), &[2, 12, 1]);
    }

    #[test]
    fn generator_order_by_repeated_multiplication() {
        // powering by hand, independent of the tables
        for (p, order) in [(7u32, 48u32), (11, 120), (13, 168)] {
            let f = Field::new(p, 2, None).unwrap();
            let w = f.generator();
            let mut x = w;
            let mut k = 1;
            while x != Elem::ONE {
                x = f.mul_poly(x, w);
                k += 1;
            }
            assert_eq!(k, order);
        }
        assert_eq!(gf49().element_order(gf49().generator()), Ok(48));
    }

    #[test]
    fn rejects_bad_moduli() {
        // x^2 + 1 = (x + 2)(x + 3) over GF(5)
        assert_eq!(Field::new(5, 2, Some(&[1, 0, 1])), Err(Error::ReducibleModulus));
        // x^2 + 1 is irreducible over GF(7) but x has order 4
        assert_eq!(
            Field::new(7, 2, Some(&[1, 0, 1])),
            Err(Error::NonPrimitiveModulus)
        );
        assert!(matches!(
            Field::new(7, 2, Some(&[3, 6, 2])),
            Err(Error::InvalidModulus(_))
        ));
        assert!(matches!(
            Field::new(7, 2, Some(&[3, 1])),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn prime_field_uses_least_primitive_root() {
        assert_eq!(Field::prime(7).unwrap().generator(), Elem(3));
        assert_eq!(Field::prime(3).unwrap().generator(), Elem(2));
        assert_eq!(Field::prime(13).unwrap().generator(), Elem(2));
        // x - 5 names 5 as w in GF(7)
        assert_eq!(Field::new(7, 1, Some(&[2, 1])).unwrap().generator(), Elem(5));
    }

    #[test]
    fn small_arithmetic_examples() {
        let f = gf49();
        let x = f.w_pow(5);
        assert_eq!(f.add(Elem::ZERO, x), x);
        assert_eq!(f.add(Elem::ONE, Elem::ONE), Elem(2));
        assert_eq!(f.mul(f.w_pow(28), f.w_pow(10)), f.w_pow(38));
        assert_eq!(f.inv(f.w_pow(13)), Ok(f.w_pow(35)));
        assert_eq!(f.mul(x, Elem::ZERO), Elem::ZERO);
        assert_eq!(f.inv(Elem::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn add_w_and_w_squared_in_gf49() {
        // w = x, w^2 = x^2 = -6x - 3 = x + 4 (mod 7), so w + w^2 = 2x + 4
        let f = gf49();
        let w = f.generator();
        let w2 = f.w_pow(2);
        assert_eq!(f.coeffs(w2), vec![4, 1]);
        let sum = f.add(w, w2);
        assert_eq!(f.coeffs(sum), vec![4, 2]);
        assert_eq!(f.format(sum), f.format(f.from_coeffs(&[4, 2]).unwrap()));
    }

    #[test]
    fn parse_tokens() {
        let f = gf49();
        assert_eq!(f.dlog(f.parse("w^13").unwrap()), Some(13));
        assert_eq!(f.parse("2"), Ok(f.add(Elem::ONE, Elem::ONE)));
        assert_eq!(f.parse("0"), Ok(Elem::ZERO));
        assert_eq!(f.parse("9"), Ok(Elem(2)));
        assert_eq!(f.parse("w"), Ok(f.generator()));
        assert_eq!(f.parse("w^49"), Ok(f.w_pow(1)));
        for bad in ["", "w^", "x^2", "w2", "-1", "w^-1", "w^1.5"] {
            assert!(matches!(f.parse(bad), Err(Error::MalformedElement(_))), "{bad}");
        }
    }

    #[test]
    fn format_emits_canonical_tokens() {
        let f = gf49();
        assert_eq!(f.format(Elem::ZERO), "0");
        assert_eq!(f.format(Elem::ONE), "1");
        assert_eq!(f.format(f.w_pow(48)), "1");
        assert_eq!(f.format(f.w_pow(38)), "w^38");
    }

    #[test]
    fn element_order_and_primitivity() {
        let f = gf49();
        assert_eq!(f.element_order(Elem::ONE), Ok(1));
        assert_eq!(f.is_primitive(f.w_pow(2)), Ok(false));
        assert_eq!(f.is_primitive(f.w_pow(5)), Ok(true));
        assert_eq!(f.element_order(Elem::ZERO), Err(Error::ZeroElement));
    }

    #[test]
    fn untabled_field_agrees_with_polynomial_path() {
        // GF(2^21) is above the table limit
        let f = Field::new(2, 21, None).unwrap();
        assert!(!f.has_tables());
        let w = f.generator();
        assert_eq!(f.element_order(w), Ok((1 << 21) - 1));
        let a = f.w_pow(123_456);
        assert_eq!(f.dlog(a), Some(123_456));
        assert_eq!(f.mul(f.inv(a).unwrap(), a), Elem::ONE);
        assert_eq!(f.parse(&f.format(a)), Ok(a));
    }

    #[test]
    fn least_primitive_default_for_other_fields() {
        // x^2 + x + 1 is the only irreducible quadratic over GF(2)
        assert_eq!(Field::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        // x^3 + x + 1 precedes x^3 + x^2 + 1
        assert_eq!(Field::new(2, 3, None).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn field_too_large() {
        assert_eq!(Field::new(2, 40, None), Err(Error::FieldTooLarge { p: 2, e: 40 }));
    }
}
