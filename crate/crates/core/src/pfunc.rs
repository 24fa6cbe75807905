//! p-ary functions as value tables, their level sets, and the algebraic
//! normal form codec.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ff::{PrimeModulus, Space};

/// `f: GF(p)^n -> GF(p)`, stored as its full value table in point-index
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PAryFunction {
    space: Space,
    values: Vec<u32>,
}

impl PAryFunction {
    pub fn new(space: Space, values: Vec<u32>) -> Result<Self> {
        if values.len() != space.size() {
            return Err(Error::InvalidTable(format!("expected {} values, got {}", space.size(), values.len())));
        }
        let p = space.p().get();
        if let Some((i, v)) = values.iter().enumerate().find(|(_, &v)| v >= p) {
            return Err(Error::InvalidTable(format!("value {v} at index {i} is not below {p}")));
        }
        Ok(PAryFunction { space, values })
    }

    /// Tabulates `f` from a closure over point coordinates. Values are
    /// reduced mod `p`.
    pub fn from_fn(space: Space, mut f: impl FnMut(&[u32]) -> u32) -> Self {
        let p = space.p().get();
        let mut pt = vec![0u32; space.n() as usize];
        let values = (0..space.size())
            .map(|i| {
                space.digits_into(i, &mut pt);
                f(&pt) % p
            })
            .collect();
        PAryFunction { space, values }
    }

    /// The constant zero function.
    pub fn zero(space: Space) -> Self {
        let values = vec![0; space.size()];
        PAryFunction { space, values }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn p(&self) -> PrimeModulus {
        self.space.p()
    }

    pub fn n(&self) -> u32 {
        self.space.n()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    #[inline]
    pub fn value(&self, index: usize) -> u32 {
        self.values[index]
    }

    /// First point index `x` with `f(x) != f(-x)`, if any.
    pub fn evenness_witness(&self) -> Option<usize> {
        (0..self.space.size()).find(|&x| self.values[x] != self.values[self.space.neg(x)])
    }

    pub fn is_even(&self) -> bool {
        self.evenness_witness().is_none()
    }

    /// `f - f(0)`.
    pub fn normalized(&self) -> Self {
        let p = self.p();
        let c = self.values[0];
        let values = self.values.iter().map(|&v| p.sub(v, c)).collect();
        PAryFunction { space: self.space.clone(), values }
    }

    /// Checks the standing hypotheses `f(0) = 0` and `f` even.
    pub fn require_even_vanishing(&self) -> Result<()> {
        if self.values[0] != 0 {
            return Err(Error::NonzeroAtOrigin(self.values[0]));
        }
        if let Some(witness) = self.evenness_witness() {
            return Err(Error::NotEven { witness });
        }
        Ok(())
    }

    pub fn level_sets(&self) -> Result<LevelSets> {
        if self.values[0] != 0 {
            return Err(Error::NonzeroAtOrigin(self.values[0]));
        }
        let p = self.p().get() as usize;
        let mut sets = vec![Vec::new(); p + 1];
        sets[0].push(0);
        for (x, &v) in self.values.iter().enumerate().skip(1) {
            let label = if v == 0 { p } else { v as usize };
            sets[label].push(x);
        }
        Ok(LevelSets { space: self.space.clone(), sets })
    }
}

/// `D_0 = {0}`, `D_i = f^{-1}(i)` for `1 <= i < p`, and
/// `D_p = f^{-1}(0) \ {0}`. Each set is sorted by point index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSets {
    space: Space,
    sets: Vec<Vec<usize>>,
}

impl LevelSets {
    pub fn space(&self) -> &Space {
        &self.space
    }

    /// `D_i` for `0 <= i <= p`.
    pub fn set(&self, i: usize) -> &[usize] {
        &self.sets[i]
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// `(|D_1|, ..., |D_p|)`.
    pub fn sizes(&self) -> Vec<usize> {
        self.sets[1..].iter().map(Vec::len).collect()
    }

    /// Class label (`0..=p`) of each point.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.space.size()];
        for (i, set) in self.sets.iter().enumerate() {
            for &x in set {
                out[x] = i;
            }
        }
        out
    }
}

/// Level-set size profile for one sign of `N = ±p^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeProfile {
    /// `N`, signed.
    pub n_value: i64,
    /// `(r_1, ..., r_p)` with `r_i = N/p` for `i < p` and `r_p = N/p + 1`.
    pub r: Vec<i64>,
    /// `(|D_1|, ..., |D_p|) = ((N-1) r_i)`.
    pub sizes: Vec<i64>,
    /// False when some class would need a negative `λ` or `μ`, so no
    /// function of this profile can have strongly regular components.
    pub possible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleSizes {
    pub lst: SizeProfile,
    pub nlst: SizeProfile,
}

/// Feasible level-set sizes of an even bent function on `GF(p)^{2m}`
/// vanishing at 0, for `N = p^m` and `N = -p^m`.
pub fn feasible_sizes(p: PrimeModulus, m: u32) -> FeasibleSizes {
    let pm = (p.get() as i64).pow(m);
    let profile = |n_value: i64| {
        let r0 = n_value / p.get() as i64;
        let mut r = vec![r0; p.get() as usize - 1];
        r.push(r0 + 1);
        let sizes = r.iter().map(|ri| (n_value - 1) * ri).collect();
        let possible = r.iter().filter(|&&ri| ri != 0).all(|&ri| n_value + ri * ri - 3 * ri >= 0 && ri * ri - ri >= 0);
        SizeProfile { n_value, r, sizes, possible }
    };
    FeasibleSizes { lst: profile(pm), nlst: profile(-pm) }
}

/// Algebraic normal form: a reduced polynomial with every exponent in
/// `[0, p)`. Keys are exponent tuples `(e_0, ..., e_{n-1})`; values are the
/// nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anf {
    space: Space,
    terms: BTreeMap<Vec<u32>, u32>,
}

impl Anf {
    pub fn new(space: Space) -> Self {
        Anf { space, terms: BTreeMap::new() }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, u32> {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff * x^exps`, reducing exponents with `x^p = x`.
    pub fn add_term(&mut self, exps: &[u32], coeff: u32) -> Result<()> {
        if exps.len() != self.space.n() as usize {
            return Err(Error::LengthMismatch { left: exps.len(), right: self.space.n() as usize });
        }
        let p = self.space.p();
        let key: Vec<u32> = exps.iter().map(|&e| reduce_exponent(e as u64, p)).collect();
        let slot = self.terms.entry(key.clone()).or_insert(0);
        *slot = p.add(*slot, coeff % p.get());
        if *slot == 0 {
            self.terms.remove(&key);
        }
        Ok(())
    }

    /// Interpolates the unique reduced polynomial agreeing with `f`.
    pub fn interpolate(f: &PAryFunction) -> Self {
        let p = f.p();
        let inv = vandermonde_inverse(p);
        let coeffs = apply_along_axes(f.space(), f.values(), &inv);
        let mut terms = BTreeMap::new();
        let mut exps = vec![0u32; f.n() as usize];
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                f.space().digits_into(i, &mut exps);
                terms.insert(exps.clone(), c);
            }
        }
        Anf { space: f.space().clone(), terms }
    }

    /// The value table of the polynomial.
    pub fn evaluate(&self) -> PAryFunction {
        let p = self.space.p();
        let mut coeffs = vec![0u32; self.space.size()];
        for (exps, &c) in &self.terms {
            let idx = self.space.point_to_index(exps).expect("reduced exponents index the space");
            coeffs[idx] = c;
        }
        let vander = vandermonde(p);
        let values = apply_along_axes(&self.space, &coeffs, &vander);
        PAryFunction { space: self.space.clone(), values }
    }

    /// Terms in display order: ascending total degree, then descending
    /// exponent tuple (so `x0` terms come before `x1` terms).
    pub fn ordered_terms(&self) -> Vec<(&Vec<u32>, u32)> {
        let mut out: Vec<(&Vec<u32>, u32)> = self.terms.iter().map(|(k, &v)| (k, v)).collect();
        out.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| b.0.cmp(a.0))
        });
        out
    }
}

fn reduce_exponent(e: u64, p: PrimeModulus) -> u32 {
    if e == 0 {
        0
    } else {
        ((e - 1) % (p.get() as u64 - 1)) as u32 + 1
    }
}

impl Anf {
    /// Like the `Display` form, except a coefficient of `p - 1` is written
    /// as a minus sign: `x0^2-x1^2` rather than `x0^2+2*x1^2`.
    pub fn to_signed_string(&self) -> String {
        self.render(true)
    }

    fn render(&self, signed: bool) -> String {
        let p = self.space.p().get();
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (exps, c) in self.ordered_terms() {
            let negative = signed && c == p - 1;
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mut factors: Vec<String> = Vec::new();
            if !negative && c != 1 {
                factors.push(format!("{c}"));
            }
            for (k, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{k}")),
                    _ => factors.push(format!("x{k}^{e}")),
                }
            }
            if factors.is_empty() {
                factors.push(String::from("1"));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// Renders e.g. `2*x0*x3+x1*x2+x0^2*x1*x2`, coefficients in `[1, p)`. The
/// output re-parses to the same polynomial.
impl fmt::Display for Anf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// `V[a][e] = a^e` over GF(p), with `0^0 = 1`.
fn vandermonde(p: PrimeModulus) -> Vec<Vec<u32>> {
    let pu = p.get();
    (0..pu).map(|a| (0..pu).map(|e| p.pow(a, e as u64)).collect()).collect()
}

/// Inverse of [`vandermonde`] by Gauss-Jordan elimination mod p.
fn vandermonde_inverse(p: PrimeModulus) -> Vec<Vec<u32>> {
    let size = p.get() as usize;
    let mut a = vandermonde(p);
    let mut inv: Vec<Vec<u32>> = (0..size).map(|i| (0..size).map(|j| u32::from(i == j)).collect()).collect();
    for col in 0..size {
        let pivot = (col..size).find(|&r| a[r][col] != 0).expect("Vandermonde matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let s = p.inv(a[col][col]).expect("nonzero pivot");
        for j in 0..size {
            a[col][j] = p.mul(a[col][j], s);
            inv[col][j] = p.mul(inv[col][j], s);
        }
        for r in 0..size {
            if r != col && a[r][col] != 0 {
                let factor = a[r][col];
                for j in 0..size {
                    a[r][j] = p.sub(a[r][j], p.mul(factor, a[col][j]));
                    inv[r][j] = p.sub(inv[r][j], p.mul(factor, inv[col][j]));
                }
            }
        }
    }
    inv
}

/// Applies the `p x p` matrix `mat` (as `out[i] = sum_j mat[i][j] in[j]`)
/// independently along every coordinate axis.
fn apply_along_axes(space: &Space, input: &[u32], mat: &[Vec<u32>]) -> Vec<u32> {
    let p = space.p();
    let pu = p.get() as usize;
    let mut data = input.to_vec();
    let mut line = vec![0u32; pu];
    let mut stride = 1usize;
    for _ in 0..space.n() {
        let block = stride * pu;
        for base in (0..space.size()).step_by(block) {
            for offset in 0..stride {
                let start = base + offset;
                for (k, slot) in line.iter_mut().enumerate() {
                    *slot = data[start + k * stride];
                }
                for (i, row) in mat.iter().enumerate() {
                    let v = row.iter().zip(&line).fold(0u32, |acc, (&m, &x)| p.add(acc, p.mul(m, x)));
                    data[start + i * stride] = v;
                }
            }
        }
        stride = block;
    }
    data
}

/// Parses a polynomial such as `2*x0*x3 + x1*x2 - x0^2` over `GF(p)^n`.
///
/// Grammar: a signed sum of terms; a term is a `*`-separated product of
/// integer constants and powers `xK` or `xK^E`. Whitespace is ignored.
/// Coefficients are reduced mod `p` and exponents with `x^p = x`.
pub fn parse_poly(src: &str, p: PrimeModulus, n: u32) -> Result<Anf> {
    let space = Space::new(p, n)?;
    Parser { src: src.as_bytes(), pos: 0, p, n }.parse(space)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    p: PrimeModulus,
    n: u32,
}

impl Parser<'_> {
    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(&c) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as u64))
                .map_or_else(|| self.err(start, "number too large"), Ok)?;
            self.pos += 1;
        }
        if self.pos == start {
            return self.err(start, "expected a number");
        }
        Ok(v)
    }

    fn parse(mut self, space: Space) -> Result<Anf> {
        let mut anf = Anf::new(space);
        if self.peek().is_none() {
            return self.err(0, "empty input");
        }
        let mut first = true;
        loop {
            let mut negative = false;
            match self.peek() {
                Some(b'+') => self.pos += 1,
                Some(b'-') => {
                    negative = true;
                    self.pos += 1;
                }
                Some(_) if first => {}
                Some(c) => return self.err(self.pos, format!("expected '+' or '-', found '{}'", c as char)),
                None => break,
            }
            first = false;
            let (exps, coeff) = self.term()?;
            let coeff = if negative { self.p.neg(coeff) } else { coeff };
            anf.add_term(&exps, coeff)?;
        }
        Ok(anf)
    }

    fn term(&mut self) -> Result<(Vec<u32>, u32)> {
        let p = self.p;
        let mut coeff = 1u32;
        let mut exps = vec![0u64; self.n as usize];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let v = self.number()?;
                    coeff = p.mul(coeff, (v % p.get() as u64) as u32);
                }
                Some(b'x') => {
                    let start = self.pos;
                    self.pos += 1;
                    if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                        return self.err(start, "expected a variable index after 'x'");
                    }
                    let var = self.number()?;
                    if var >= self.n as u64 {
                        let end = self.pos;
                        let token = core::str::from_utf8(&self.src[start..end]).unwrap_or("x?");
                        return self.err(start, format!("unknown variable {token} (n = {})", self.n));
                    }
                    let mut e = 1u64;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        e = self.number()?;
                    }
                    exps[var as usize] = exps[var as usize].saturating_add(e);
                }
                Some(c) => {
                    return self.err(self.pos, format!("unexpected '{}'", c as char));
                }
                None => return self.err(self.pos, "expected a term"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        let exps = exps.into_iter().map(|e| reduce_exponent(e, p)).collect();
        Ok((exps, coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn space(p: u32, n: u32) -> Space {
        Space::new(PrimeModulus::new(p).unwrap(), n).unwrap()
    }

    fn poly(src: &str, p: u32, n: u32) -> PAryFunction {
        parse_poly(src, PrimeModulus::new(p).unwrap(), n).unwrap().evaluate()
    }

    /// Direct evaluation of every term at every point: the oracle for
    /// `Anf::evaluate`.
    fn eval_direct(anf: &Anf) -> Vec<u32> {
        let s = anf.space();
        let p = s.p();
        (0..s.size())
            .map(|i| {
                let pt = s.index_to_point(i).unwrap();
                anf.terms().iter().fold(0u32, |acc, (exps, &c)| {
                    let mono = exps.iter().zip(&pt).fold(1u32, |m, (&e, &x)| p.mul(m, p.pow(x, e as u64)));
                    p.add(acc, p.mul(c, mono))
                })
            })
            .collect()
    }

    #[test]
    fn evenness_examples() {
        assert!(poly("x0^2+x1^2", 3, 2).is_even());
        assert!(!poly("x0", 3, 1).is_even());
        assert!(poly("3*x0^4+2*x0^2+2*x0*x1", 5, 2).is_even());
    }

    #[test]
    fn level_set_examples() {
        let ls = poly("-x0^2+x1^2", 3, 2).level_sets().unwrap();
        assert_eq!(ls.sizes(), vec![2, 2, 4]);
        assert_eq!(ls.set(0), &[0]);

        let zero = PAryFunction::zero(space(3, 2));
        assert_eq!(zero.level_sets().unwrap().sizes(), vec![0, 0, 8]);

        let f = poly("3*x0^4+2*x0^2+2*x0*x1", 5, 2);
        let s = f.space().clone();
        let d1: Vec<Vec<u32>> = f.level_sets().unwrap().set(1).iter().map(|&x| s.index_to_point(x).unwrap()).collect();
        assert_eq!(d1, vec![vec![1, 3], vec![2, 0], vec![3, 0], vec![4, 2]]);
    }

    #[test]
    fn level_sets_reject_nonzero_origin() {
        let f = poly("x0^2+1", 3, 1);
        assert_eq!(f.level_sets(), Err(Error::NonzeroAtOrigin(1)));
        assert_eq!(f.normalized().value(0), 0);
    }

    #[test]
    fn level_sets_partition_and_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (p, n) in [(3u32, 2u32), (3, 4), (5, 2)] {
            let s = space(p, n);
            for _ in 0..20 {
                let f = random_even(&s, &mut rng);
                let ls = f.level_sets().unwrap();
                let total: usize = ls.sets().iter().map(Vec::len).sum();
                assert_eq!(total, s.size());
                let labels = ls.labels();
                for (i, set) in ls.sets().iter().enumerate() {
                    for &x in set {
                        assert_eq!(labels[x], i);
                        assert_eq!(labels[s.neg(x)], i);
                    }
                }
            }
        }
    }

    fn random_even(s: &Space, rng: &mut ChaCha8Rng) -> PAryFunction {
        let p = s.p().get();
        let mut values = vec![0u32; s.size()];
        for x in 1..s.size() {
            let nx = s.neg(x);
            if nx > x {
                let v = rng.gen_range(0..p);
                values[x] = v;
                values[nx] = v;
            }
        }
        PAryFunction::new(s.clone(), values).unwrap()
    }

    #[test]
    fn feasible_size_examples() {
        let p3 = PrimeModulus::new(3).unwrap();
        let f = feasible_sizes(p3, 1);
        assert_eq!(f.lst.sizes, vec![2, 2, 4]);
        assert_eq!(f.nlst.sizes, vec![4, 4, 0]);
        assert!(f.lst.possible && f.nlst.possible);
        let f = feasible_sizes(p3, 2);
        assert_eq!(f.lst.sizes, vec![24, 24, 32]);
        assert_eq!(f.nlst.sizes, vec![30, 30, 20]);
        let f = feasible_sizes(PrimeModulus::new(5).unwrap(), 1);
        assert!(!f.nlst.possible);
        assert!(f.lst.possible);
    }

    #[test]
    fn anf_examples() {
        let zero = PAryFunction::zero(space(3, 2));
        assert!(Anf::interpolate(&zero).is_empty());

        let f = PAryFunction::from_fn(space(3, 2), |x| x[0] * x[0] + x[1] * x[1]);
        let anf = Anf::interpolate(&f);
        let expect: BTreeMap<Vec<u32>, u32> = [(vec![2, 0], 1), (vec![0, 2], 1)].into_iter().collect();
        assert_eq!(anf.terms(), &expect);

        // 2x0x3 + x1x2 + x0^2x1x2 + 2x0x1^2x3, tabulated by hand-written closure
        let g = PAryFunction::from_fn(space(3, 4), |x| {
            2 * x[0] * x[3] + x[1] * x[2] + x[0] * x[0] * x[1] * x[2] + 2 * x[0] * x[1] * x[1] * x[3]
        });
        let anf = Anf::interpolate(&g);
        let expect: BTreeMap<Vec<u32>, u32> =
            [(vec![1, 0, 0, 1], 2), (vec![0, 1, 1, 0], 1), (vec![2, 1, 1, 0], 1), (vec![1, 2, 0, 1], 2)]
                .into_iter()
                .collect();
        assert_eq!(anf.terms(), &expect);
        assert_eq!(anf.to_string(), "2*x0*x3+x1*x2+x0^2*x1*x2+2*x0*x1^2*x3");
    }

    #[test]
    fn anf_round_trip_on_random_tables() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for (p, n) in [(3u32, 2u32), (3, 4), (5, 2), (7, 2)] {
            let s = space(p, n);
            for _ in 0..200 {
                let values: Vec<u32> = (0..s.size()).map(|_| rng.gen_range(0..p)).collect();
                let f = PAryFunction::new(s.clone(), values).unwrap();
                let anf = Anf::interpolate(&f);
                assert_eq!(anf.evaluate(), f);
                assert_eq!(eval_direct(&anf), f.values());
            }
        }
    }

    #[test]
    fn parse_examples() {
        let p3 = PrimeModulus::new(3).unwrap();
        let anf = parse_poly("2*x0*x3 + x1*x2 + x0^2*x1*x2 + 2*x0*x1^2*x3", p3, 4).unwrap();
        assert_eq!(anf.terms().len(), 4);
        assert_eq!(anf.terms()[&vec![1, 2, 0, 1]], 2);

        let anf = parse_poly("x0^3", p3, 1).unwrap();
        let expect: BTreeMap<Vec<u32>, u32> = [(vec![1], 1)].into_iter().collect();
        assert_eq!(anf.terms(), &expect);

        match parse_poly("x5", p3, 2) {
            Err(Error::Parse { pos: 0, msg }) => assert!(msg.contains("x5"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        let p = PrimeModulus::new(5).unwrap();
        assert!(matches!(parse_poly("", p, 2), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_poly("   ", p, 2), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_poly("x0 + y1", p, 2), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_poly("x0 +", p, 2), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("x0 x1", p, 2), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_poly("x0^", p, 2), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_poly("x", p, 2), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn parse_reduces_and_combines() {
        let p = PrimeModulus::new(5).unwrap();
        let a = parse_poly("-x0^2 + 2*x1^2", p, 2).unwrap();
        let b = parse_poly("4*x0^2+2*x1*x1", p, 2).unwrap();
        assert_eq!(a, b);
        let c = parse_poly("x0 - x0 + 7", p, 2).unwrap();
        assert_eq!(c.to_string(), "2");
        assert_eq!(parse_poly("x1^0", p, 2).unwrap().to_string(), "1");
        assert_eq!(parse_poly("x0^9", p, 1).unwrap().to_string(), "x0");
    }

    #[test]
    fn display_round_trips_through_parser() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (p, n) in [(3u32, 3u32), (5, 2), (7, 2)] {
            let s = space(p, n);
            for _ in 0..50 {
                let values: Vec<u32> = (0..s.size()).map(|_| rng.gen_range(0..p)).collect();
                let anf = Anf::interpolate(&PAryFunction::new(s.clone(), values).unwrap());
                let back = parse_poly(&anf.to_string(), s.p(), n).unwrap();
                assert_eq!(back, anf);
            }
        }
    }

    #[test]
    fn display_reduces_negative_coefficients() {
        let p = PrimeModulus::new(3).unwrap();
        assert_eq!(parse_poly("x0^2 - x1^2", p, 2).unwrap().to_string(), "x0^2+2*x1^2");
        assert_eq!(parse_poly("-x0^2-x1^2", p, 2).unwrap().to_string(), "2*x0^2+2*x1^2");
        let a = parse_poly("-x0^2-x1^2", p, 2).unwrap();
        assert_eq!(a.to_signed_string(), "-x0^2-x1^2");
        assert_eq!(parse_poly(&a.to_signed_string(), p, 2).unwrap(), a);
        let b = parse_poly("x0^2-x1^2", p, 2).unwrap();
        assert_eq!(b.to_signed_string(), "x0^2-x1^2");
    }
}
