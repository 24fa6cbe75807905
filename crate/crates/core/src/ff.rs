//! Prime fields, their extensions, and the point space `GF(p)^n`.
//!
//! Points of `GF(p)^n` are addressed by a [`Space`] index: the big-endian
//! base-`p` reading of the coordinates, so `x_0` is the most significant
//! digit. Every table in the crate (function values, spectra, graph
//! connection sets) uses this order.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest point space we are willing to tabulate.
pub const MAX_POINTS: usize = 1 << 26;

/// An odd prime `p >= 3`, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u32) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenPrime(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.0 as u64 - (b % self.0) as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        (self.0 - a % self.0) % self.0
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.0;
        let mut acc = 1 % self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        let a = a % self.0;
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.0 as u64 - 2))
        }
    }

    /// Reduce a signed integer into `[0, p)`.
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }
}

impl core::fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The point space `GF(p)^n` with its fixed big-endian ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Space {
    p: PrimeModulus,
    n: u32,
    size: usize,
}

impl Space {
    pub fn new(p: PrimeModulus, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::SpaceTooLarge { p: p.get(), n });
        }
        let mut size: usize = 1;
        for _ in 0..n {
            size = size
                .checked_mul(p.get() as usize)
                .filter(|s| *s <= MAX_POINTS)
                .ok_or(Error::SpaceTooLarge { p: p.get(), n })?;
        }
        Ok(Space { p, n, size })
    }

    #[inline]
    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of points, `p^n`.
    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn index_to_point(&self, index: usize) -> Result<Vec<u32>> {
        if index >= self.size {
            return Err(Error::IndexOutOfRange { index, size: self.size });
        }
        let mut out = vec![0u32; self.n as usize];
        self.digits_into(index, &mut out);
        Ok(out)
    }

    /// Writes the coordinates of `index` into `out` (length `n`). The index
    /// must be in range.
    pub fn digits_into(&self, mut index: usize, out: &mut [u32]) {
        let p = self.p.get() as usize;
        for slot in out.iter_mut().rev() {
            *slot = (index % p) as u32;
            index /= p;
        }
    }

    pub fn point_to_index(&self, point: &[u32]) -> Result<usize> {
        if point.len() != self.n as usize {
            return Err(Error::LengthMismatch { left: point.len(), right: self.n as usize });
        }
        let p = self.p.get();
        let mut index = 0usize;
        for &c in point {
            if c >= p {
                return Err(Error::InvalidTable(alloc::format!("coordinate {c} not below {p}")));
            }
            index = index * p as usize + c as usize;
        }
        Ok(index)
    }

    /// Index of `x + y`.
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.combine(x, y, |a, b| a + b)
    }

    /// Index of `x - y`.
    pub fn sub(&self, x: usize, y: usize) -> usize {
        let p = self.p.get() as usize;
        self.combine(x, y, move |a, b| a + p - b)
    }

    /// Index of `-x`.
    pub fn neg(&self, x: usize) -> usize {
        self.sub(0, x)
    }

    fn combine(&self, mut x: usize, mut y: usize, op: impl Fn(usize, usize) -> usize) -> usize {
        let p = self.p.get() as usize;
        let mut out = 0usize;
        let mut place = 1usize;
        for _ in 0..self.n {
            let d = op(x % p, y % p) % p;
            out += d * place;
            place *= p;
            x /= p;
            y /= p;
        }
        out
    }

    /// `<x, y>` for two point indices.
    pub fn dot(&self, mut x: usize, mut y: usize) -> u32 {
        let p = self.p.get() as usize;
        let mut acc = 0usize;
        for _ in 0..self.n {
            acc += (x % p) * (y % p);
            x /= p;
            y /= p;
        }
        (acc % p) as u32
    }

    /// Table of `-x` for every index `x`.
    pub fn negation_table(&self) -> Vec<usize> {
        (0..self.size).map(|x| self.neg(x)).collect()
    }
}

/// The standard inner product `sum x_i y_i mod p`.
pub fn inner_product(x: &[u32], y: &[u32], p: PrimeModulus) -> Result<u32> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    Ok(x.iter().zip(y).fold(0u32, |acc, (&a, &b)| p.add(acc, p.mul(a, b))))
}

/// `GF(p^m)` built on the lexicographically smallest monic irreducible
/// polynomial of degree `m` (coefficients compared from the constant term
/// upward).
///
/// Elements are `u32` indices in `[0, p^m)`; the index of an element is the
/// big-endian reading of its coordinates `(c_0, ..., c_{m-1})` on the basis
/// `1, t, ..., t^{m-1}`, so enumeration order is lexicographic on
/// coordinates and coordinates embed directly into `GF(p)^m`.
#[derive(Debug, Clone)]
pub struct ExtField {
    p: PrimeModulus,
    m: u32,
    order: u32,
    /// Low-to-high coefficients of the monic modulus, length `m + 1`.
    modulus: Vec<u32>,
    mul_table: Option<Vec<u32>>,
}

const MUL_TABLE_LIMIT: u32 = 256;

impl ExtField {
    pub fn new(p: PrimeModulus, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::SpaceTooLarge { p: p.get(), n: m });
        }
        let order = (p.get() as u64)
            .checked_pow(m)
            .filter(|o| *o <= MAX_POINTS as u64)
            .ok_or(Error::SpaceTooLarge { p: p.get(), n: m })? as u32;
        let modulus = smallest_irreducible(p, m);
        let mut field = ExtField { p, m, order, modulus, mul_table: None };
        if order <= MUL_TABLE_LIMIT {
            let mut table = vec![0u32; (order * order) as usize];
            for a in 0..order {
                for b in 0..order {
                    table[(a * order + b) as usize] = field.mul_slow(a, b);
                }
            }
            field.mul_table = Some(table);
        }
        Ok(field)
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Number of elements, `p^m`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// The monic modulus, coefficients from the constant term upward.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order
    }

    /// Coordinates `(c_0, ..., c_{m-1})` of `a`.
    pub fn coords(&self, a: u32) -> Vec<u32> {
        let p = self.p.get();
        let mut out = vec![0u32; self.m as usize];
        let mut v = a;
        for slot in out.iter_mut().rev() {
            *slot = v % p;
            v /= p;
        }
        out
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<u32> {
        if coords.len() != self.m as usize {
            return Err(Error::LengthMismatch { left: coords.len(), right: self.m as usize });
        }
        let p = self.p.get();
        let mut v = 0u32;
        for &c in coords {
            if c >= p {
                return Err(Error::InvalidTable(alloc::format!("coordinate {c} not below {p}")));
            }
            v = v * p + c;
        }
        Ok(v)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.digitwise(a, b, |x, y| self.p.add(x, y))
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.digitwise(a, b, |x, y| self.p.sub(x, y))
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    fn digitwise(&self, mut a: u32, mut b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
        let p = self.p.get();
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.m {
            out += op(a % p, b % p) * place;
            place = place.wrapping_mul(p);
            a /= p;
            b /= p;
        }
        out
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.mul_table {
            Some(t) => t[(a * self.order + b) as usize],
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let m = self.m as usize;
        // coords are (c_0, ..., c_{m-1}): already low-to-high polynomial order.
        let pa = self.coords(a);
        let pb = self.coords(b);
        let mut prod = vec![0u32; 2 * m - 1];
        for (i, &x) in pa.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in pb.iter().enumerate() {
                prod[i + j] = p.add(prod[i + j], p.mul(x, y));
            }
        }
        for deg in (m..prod.len()).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            for k in 0..m {
                let t = p.mul(lead, self.modulus[k]);
                prod[deg - m + k] = p.sub(prod[deg - m + k], t);
            }
            prod[deg] = 0;
        }
        prod.truncate(m);
        self.from_coords(&prod).expect("reduced coordinates are in range")
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.order as u64 - 2))
        }
    }

    pub fn one(&self) -> u32 {
        // c_0 is the most significant digit of the index
        self.p.get().pow(self.m - 1)
    }
}

/// Polynomials over GF(p), low-to-high coefficients.
fn poly_rem(p: PrimeModulus, num: &[u32], den: &[u32]) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let lead_inv = p.inv(den[dd]).expect("nonzero leading coefficient");
    while r.len() > dd {
        let top = *r.last().unwrap();
        if top != 0 {
            let factor = p.mul(top, lead_inv);
            let shift = r.len() - 1 - dd;
            for (k, &c) in den.iter().enumerate() {
                r[shift + k] = p.sub(r[shift + k], p.mul(factor, c));
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(p: PrimeModulus, poly: &[u32]) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p.get() as usize).pow(d as u32);
        for tail in 0..count {
            let mut cand = vec![0u32; d + 1];
            let mut t = tail;
            for c in cand.iter_mut().take(d) {
                *c = (t % p.get() as usize) as u32;
                t /= p.get() as usize;
            }
            cand[d] = 1;
            if poly_rem(p, poly, &cand).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: PrimeModulus, m: u32) -> Vec<u32> {
    let m = m as usize;
    let count = (p.get() as u64).pow(m as u32);
    for t in 0..count {
        // c_0 is the most significant digit of t: lexicographic from the
        // constant term upward.
        let mut poly = vec![0u32; m + 1];
        let mut v = t;
        for k in (0..m).rev() {
            poly[k] = (v % p.get() as u64) as u32;
            v /= p.get() as u64;
        }
        poly[m] = 1;
        if is_irreducible(p, &poly) {
            return poly;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}
