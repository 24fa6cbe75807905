//! Exact arithmetic in `Z[ζ_p]`, the ring of cyclotomic integers.
//!
//! An element is stored in the power basis `{1, ζ, ..., ζ^{p-2}}`. Any
//! length-`p` coefficient vector `(d_0, ..., d_{p-1})` (the group-ring form,
//! where multiplication by `ζ` is a rotation) reduces to the basis by
//! subtracting `d_{p-1}` from every coordinate, using
//! `1 + ζ + ... + ζ^{p-1} = 0`. The reduced form is unique, so equality is
//! coefficient equality.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ff::PrimeModulus;

const MISMATCH_PANIC_MSG: &str = "cyclotomic integers over different primes";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycInt {
    p: PrimeModulus,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(p: PrimeModulus) -> Self {
        CycInt { p, coeffs: vec![BigInt::zero(); p.get() as usize - 1] }
    }

    pub fn from_int(p: PrimeModulus, v: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(p);
        out.coeffs[0] = v.into();
        out
    }

    pub fn one(p: PrimeModulus) -> Self {
        Self::from_int(p, 1)
    }

    /// `ζ^k`, with `k` taken mod `p`.
    pub fn zeta_pow(p: PrimeModulus, k: u64) -> Self {
        let mut d = vec![0i64; p.get() as usize];
        d[(k % p.get() as u64) as usize] = 1;
        Self::from_group_ring(p, &d)
    }

    /// Reduces a length-`p` vector `(d_0, ..., d_{p-1})` meaning
    /// `sum d_k ζ^k`.
    pub fn from_group_ring<T: Clone + Into<BigInt>>(p: PrimeModulus, d: &[T]) -> Self {
        let pu = p.get() as usize;
        assert_eq!(d.len(), pu, "group-ring vector must have length p");
        let top: BigInt = d[pu - 1].clone().into();
        let coeffs = d[..pu - 1]
            .iter()
            .map(|c| {
                let c: BigInt = c.clone().into();
                c - &top
            })
            .collect();
        CycInt { p, coeffs }
    }

    /// Builds from power-basis coefficients `(c_0, ..., c_{p-2})`.
    pub fn from_coeffs(p: PrimeModulus, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != p.get() as usize - 1 {
            return Err(Error::LengthMismatch { left: coeffs.len(), right: p.get() as usize - 1 });
        }
        Ok(CycInt { p, coeffs })
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    /// Power-basis coefficients `(c_0, ..., c_{p-2})`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Group-ring form with `d_{p-1} = 0`.
    fn group_ring(&self) -> Vec<BigInt> {
        let mut d = self.coeffs.clone();
        d.push(BigInt::zero());
        d
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Like [`as_integer`](Self::as_integer), narrowed to `i64`.
    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|v| i64::try_from(v).ok())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            Err(Error::ModulusMismatch { left: self.p.get(), right: other.p.get() })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycInt { p: self.p, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CycInt { p: self.p, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_rational() {
            return Ok(other.scale(&self.coeffs[0]));
        }
        if other.is_rational() {
            return Ok(self.scale(&other.coeffs[0]));
        }
        let pu = self.p.get() as usize;
        let mut d = vec![BigInt::zero(); pu];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                d[(i + j) % pu] += a * b;
            }
        }
        Ok(Self::from_group_ring(self.p, &d))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        CycInt { p: self.p, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Multiplication by `ζ^k`.
    pub fn rotate(&self, k: u64) -> Self {
        let pu = self.p.get() as usize;
        let shift = (k % pu as u64) as usize;
        let d = self.group_ring();
        let mut out = vec![BigInt::zero(); pu];
        for (i, c) in d.into_iter().enumerate() {
            out[(i + shift) % pu] = c;
        }
        Self::from_group_ring(self.p, &out)
    }

    /// Complex conjugation, `ζ^k -> ζ^{p-k}`.
    pub fn conj(&self) -> Self {
        let pu = self.p.get() as usize;
        let d = self.group_ring();
        let mut out = vec![BigInt::zero(); pu];
        for (k, c) in d.into_iter().enumerate() {
            out[(pu - k) % pu] = c;
        }
        Self::from_group_ring(self.p, &out)
    }

    /// `a * conj(a)`, which is `|a|^2` under every embedding.
    pub fn norm_sq(&self) -> Self {
        self * &self.conj()
    }

    /// Decides whether `self = ε ζ^j p^m` and returns `(ε, j)` if so.
    pub fn classify_root_multiple(&self, m: u32) -> Option<(i8, u32)> {
        let scale = BigInt::from(self.p.get()).pow(m);
        let pu = self.p.get() as usize;
        let nonzero: Vec<usize> = (0..pu - 1).filter(|&k| !self.coeffs[k].is_zero()).collect();
        let sign_of = |c: &BigInt| -> Option<i8> {
            if c.abs() != scale {
                None
            } else if c.is_positive() {
                Some(1)
            } else {
                Some(-1)
            }
        };
        match nonzero.as_slice() {
            [k] => sign_of(&self.coeffs[*k]).map(|s| (s, *k as u32)),
            // ζ^{p-1} = -(1 + ζ + ... + ζ^{p-2})
            all if all.len() == pu - 1 => {
                let first = &self.coeffs[0];
                if self.coeffs.iter().all(|c| c == first) {
                    sign_of(first).map(|s| (-s, pu as u32 - 1))
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.checked_add(rhs).expect(MISMATCH_PANIC_MSG)
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.checked_sub(rhs).expect(MISMATCH_PANIC_MSG)
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.checked_mul(rhs).expect(MISMATCH_PANIC_MSG)
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt { p: self.p, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for CycInt {
    type Output = CycInt;
    fn add(self, rhs: CycInt) -> CycInt {
        &self + &rhs
    }
}

impl Sub for CycInt {
    type Output = CycInt;
    fn sub(self, rhs: CycInt) -> CycInt {
        &self - &rhs
    }
}

impl Mul for CycInt {
    type Output = CycInt;
    fn mul(self, rhs: CycInt) -> CycInt {
        &self * &rhs
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        -&self
    }
}

/// Renders `c0 + c1*z + c2*z^2 ...`, omitting zero terms.
impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => String::from("z"),
                _ => alloc::format!("z^{k}"),
            };
            if k == 0 {
                out.push_str(&alloc::format!("{mag}"));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&alloc::format!("{mag}*{mono}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}
