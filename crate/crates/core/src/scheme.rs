//! Translation-invariant association schemes from level sets.
//!
//! The relations are `R_i = {(x, y) : x - y ∈ D_i}` for `0 <= i <= p`. For
//! such relations `ρ_{ij}^k(x, y)` depends only on `z = x - y`, so the scheme
//! test is a difference convolution:
//! `ρ_{ij}(z) = |{w ∈ D_i : z - w ∈ D_j}|` must be constant on each `D_k`.
//! Tables are indexed `ρ[k][i][j] = ρ_{ij}^k`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cayley::{component_graphs, feasibility_verdict, Feasibility};
use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::ff::{PrimeModulus, Space};
use crate::pfunc::PAryFunction;
use crate::spectral::{component_eigenvalues, FourierSpectrum};

/// `ρ_{ij}^k` for `0 <= i, j, k <= p`. Entries for an empty class `k` are
/// zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeConstants {
    p: PrimeModulus,
    class_sizes: Vec<usize>,
    rho: Vec<i64>,
}

impl SchemeConstants {
    fn zeroed(p: PrimeModulus, class_sizes: Vec<usize>) -> Self {
        let d = class_sizes.len();
        SchemeConstants { p, class_sizes, rho: vec![0; d * d * d] }
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    /// Number of relation indices, `p + 1`.
    pub fn dim(&self) -> usize {
        self.class_sizes.len()
    }

    /// `|D_0|, ..., |D_p|`.
    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Indices of the nonempty classes.
    pub fn active_classes(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.class_sizes[i] > 0).collect()
    }

    /// `ρ_{ij}^k`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        let d = self.dim();
        self.rho[(k * d + i) * d + j]
    }

    fn set(&mut self, i: usize, j: usize, k: usize, v: i64) {
        let d = self.dim();
        self.rho[(k * d + i) * d + j] = v;
    }

    /// The array `ρ^k` restricted to the nonempty classes: rows `i`,
    /// columns `j`.
    pub fn matrix(&self, k: usize) -> Vec<Vec<i64>> {
        let active = self.active_classes();
        active.iter().map(|&i| active.iter().map(|&j| self.get(i, j, k)).collect()).collect()
    }
}

/// Where the constancy test failed: `ρ_{ij}(z) != ρ_{ij}(z2)` although `z`
/// and `z2` are both in class `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SchemeWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub z: usize,
    pub z2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchemeVerdict {
    Scheme(SchemeConstants),
    NotScheme(SchemeWitness),
}

impl SchemeVerdict {
    pub fn constants(&self) -> Option<&SchemeConstants> {
        match self {
            SchemeVerdict::Scheme(c) => Some(c),
            SchemeVerdict::NotScheme(_) => None,
        }
    }

    pub fn is_scheme(&self) -> bool {
        matches!(self, SchemeVerdict::Scheme(_))
    }
}

/// `conv[(z * d + i) * d + j] = |{w ∈ D_i : z - w ∈ D_j}|`.
struct Convolution {
    d: usize,
    counts: Vec<u32>,
}

impl Convolution {
    fn new(space: &Space, labels: &[usize], d: usize) -> Self {
        let size = space.size();
        let mut counts = vec![0u32; size * d * d];
        // z - w = z + (-w); walk w and accumulate into every z
        let neg = space.negation_table();
        for (w, &i) in labels.iter().enumerate() {
            let nw = neg[w];
            for z in 0..size {
                let j = labels[space.add(z, nw)];
                counts[(z * d + i) * d + j] += 1;
            }
        }
        Convolution { d, counts }
    }

    fn at(&self, z: usize, i: usize, j: usize) -> u32 {
        self.counts[(z * self.d + i) * self.d + j]
    }

    /// Constancy test after merging original classes by `group` (original
    /// class -> fused class, fused class count `g`). Returns the fused
    /// constants or a witness in fused indices.
    fn check(&self, labels: &[usize], group: &[usize], g: usize) -> core::result::Result<Vec<i64>, SchemeWitness> {
        let mut table = vec![0i64; g * g * g];
        let mut rep: Vec<Option<usize>> = vec![None; g];
        let mut fused = vec![0i64; g * g];
        for (z, &lz) in labels.iter().enumerate() {
            fused.iter_mut().for_each(|v| *v = 0);
            for i in 0..self.d {
                for j in 0..self.d {
                    fused[group[i] * g + group[j]] += self.at(z, i, j) as i64;
                }
            }
            let k = group[lz];
            match rep[k] {
                None => {
                    rep[k] = Some(z);
                    table[k * g * g..(k + 1) * g * g].copy_from_slice(&fused);
                }
                Some(z0) => {
                    let stored = &table[k * g * g..(k + 1) * g * g];
                    if let Some(pos) = (0..g * g).find(|&t| stored[t] != fused[t]) {
                        return Err(SchemeWitness { i: pos / g, j: pos % g, k, z: z0, z2: z });
                    }
                }
            }
        }
        Ok(table)
    }
}

fn class_labels(f: &PAryFunction) -> Result<(Vec<usize>, Vec<usize>)> {
    f.require_even_vanishing()?;
    let ls = f.level_sets()?;
    let sizes = ls.sets().iter().map(Vec::len).collect();
    Ok((ls.labels(), sizes))
}

/// Counting test for the relations `R_0, ..., R_p` of `f`.
pub fn scheme_check(f: &PAryFunction) -> Result<SchemeVerdict> {
    let (labels, sizes) = class_labels(f)?;
    let d = sizes.len();
    let conv = Convolution::new(f.space(), &labels, d);
    let identity: Vec<usize> = (0..d).collect();
    Ok(match conv.check(&labels, &identity, d) {
        Ok(rho) => SchemeVerdict::Scheme(SchemeConstants { p: f.p(), class_sizes: sizes, rho }),
        Err(w) => SchemeVerdict::NotScheme(w),
    })
}

/// `ρ_{ij}^k = (1 / (p^n |D_k|)) sum_x λ_i(x) λ_j(x) λ_k(x)`, with `λ_0 = 1`.
pub fn constants_by_trace(f: &PAryFunction) -> Result<SchemeConstants> {
    let lambdas = component_eigenvalues(f)?;
    constants_by_trace_with(f, &lambdas)
}

/// As [`constants_by_trace`], reusing `lambdas[i - 1] = λ_i`.
pub fn constants_by_trace_with(f: &PAryFunction, lambdas: &[FourierSpectrum]) -> Result<SchemeConstants> {
    let (_, sizes) = class_labels(f)?;
    let p = f.p();
    let d = sizes.len();
    let size = f.space().size();
    if lambdas.len() + 1 != d {
        return Err(Error::LengthMismatch { left: lambdas.len() + 1, right: d });
    }
    let column = |i: usize, x: usize| -> &CycInt { lambdas[i - 1].value(x) };
    let rational: Option<Vec<Vec<i128>>> = lambdas
        .iter()
        .map(|l| l.values().iter().map(|v| v.as_i64().map(i128::from)).collect::<Option<Vec<_>>>())
        .collect();

    let triple = |i: usize, j: usize, k: usize| -> Result<BigInt> {
        if let Some(r) = &rational {
            let val = |c: usize, x: usize| if c == 0 { 1 } else { r[c - 1][x] };
            let s: i128 = (0..size).map(|x| val(i, x) * val(j, x) * val(k, x)).sum();
            return Ok(BigInt::from(s));
        }
        let one = CycInt::one(p);
        let mut acc = CycInt::zero(p);
        for x in 0..size {
            let a = if i == 0 { &one } else { column(i, x) };
            let b = if j == 0 { &one } else { column(j, x) };
            let c = if k == 0 { &one } else { column(k, x) };
            acc = &acc + &(&(a * b) * c);
        }
        acc.as_integer().ok_or_else(|| Error::Inconsistency("trace sum is not rational".into()))
    };

    let mut out = SchemeConstants::zeroed(p, sizes.clone());
    for i in 0..d {
        for j in i..d {
            for k in j..d {
                let t = triple(i, j, k)?;
                for (a, b, c) in [(i, j, k), (j, i, k), (i, k, j), (k, i, j), (j, k, i), (k, j, i)] {
                    if sizes[c] == 0 {
                        continue;
                    }
                    let denom = BigInt::from(size) * BigInt::from(sizes[c]);
                    if &t % &denom != BigInt::from(0) {
                        return Err(Error::Inconsistency(format!(
                            "trace sum for ({a},{b},{c}) is not divisible by p^n |D_{c}|"
                        )));
                    }
                    let v = i64::try_from(&t / &denom).map_err(|_| Error::Inconsistency("constant overflow".into()))?;
                    out.set(a, b, c, v);
                }
            }
        }
    }
    Ok(out)
}

/// Number of `x` with `D_b f(x) = j` for `b ∈ D_i`:
/// `(sum_{k=0}^p ρ^i_{(j+k) mod p, k}) + ρ^i_{p, p-j}`.
pub fn derivative_count_by_constants(c: &SchemeConstants, i: usize, j: usize) -> Result<i64> {
    let p = c.p().get() as usize;
    if !(1..=p).contains(&i) {
        return Err(Error::ClassOutOfRange { index: i, max: p });
    }
    if !(1..p).contains(&j) {
        return Err(Error::ClassOutOfRange { index: j, max: p - 1 });
    }
    let sum: i64 = (0..=p).map(|k| c.get((j + k) % p, k, i)).sum();
    Ok(sum + c.get(p, p - j, i))
}

/// First `(i, j)` (nonempty `D_i`, `1 <= j < p`) whose derivative count
/// differs from `p^{n-1}`.
pub fn constants_bent_witness(c: &SchemeConstants, n: u32) -> Option<(usize, usize)> {
    let p = c.p().get() as usize;
    let target = (p as i64).pow(n - 1);
    (1..=p)
        .filter(|&i| c.class_sizes()[i] > 0)
        .flat_map(|i| (1..p).map(move |j| (i, j)))
        .find(|&(i, j)| derivative_count_by_constants(c, i, j).expect("indices in range") != target)
}

/// Structure-constant bent test.
pub fn is_bent_by_constants(f: &PAryFunction) -> Result<bool> {
    match scheme_check(f)? {
        SchemeVerdict::Scheme(c) => Ok(constants_bent_witness(&c, f.n()).is_none()),
        SchemeVerdict::NotScheme(_) => Err(Error::NotAScheme),
    }
}

/// The constants predicted for an amorphic scheme of (negative) Latin
/// square type with parameters `N` and `r_1, ..., r_p`. Classes with
/// `r_k = 0` are empty and their `ρ^k` is zero.
pub fn imy_predicted(p: PrimeModulus, n_value: i64, r: &[i64]) -> Result<SchemeConstants> {
    let pu = p.get() as usize;
    if r.len() != pu {
        return Err(Error::LengthMismatch { left: r.len(), right: pu });
    }
    let mut sizes = vec![1usize];
    for &ri in r {
        let k = (n_value - 1) * ri;
        if k < 0 {
            return Err(Error::InvalidPartition(format!("(N, r) = ({n_value}, {ri}) gives a negative degree")));
        }
        sizes.push(k as usize);
    }
    let mut out = SchemeConstants::zeroed(p, sizes.clone());
    let rr = |t: usize| r[t - 1];
    out.set(0, 0, 0, 1);
    for (j, &size) in sizes.iter().enumerate().skip(1) {
        out.set(j, j, 0, size as i64);
    }
    for k in (1..=pu).filter(|&k| sizes[k] > 0) {
        out.set(0, k, k, 1);
        out.set(k, 0, k, 1);
        for i in 1..=pu {
            for j in 1..=pu {
                let v = if i == k && j == k {
                    n_value + rr(k) * rr(k) - 3 * rr(k)
                } else if i == j {
                    (rr(j) - 1) * rr(j)
                } else if i == k {
                    (rr(k) - 1) * rr(j)
                } else if j == k {
                    (rr(k) - 1) * rr(i)
                } else {
                    rr(i) * rr(j)
                };
                out.set(i, j, k, v);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum AmorphicMode {
    /// Van Dam criterion on the component graphs, confirmed by fusion
    /// enumeration when `p <= 5`.
    #[default]
    Auto,
    /// Every fusion of the nonempty classes is checked to be a scheme.
    Fusion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AmorphicMethod {
    SpectralSrg,
    FusionExhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeType {
    Lst,
    Nlst,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmorphicVerdict {
    pub is_scheme: bool,
    pub is_amorphic: bool,
    pub method: AmorphicMethod,
    pub kind: SchemeType,
    /// Number of nonempty classes `D_1, ..., D_p`.
    pub classes: usize,
    /// A fusion (as a restricted growth string over the nonempty classes)
    /// that is not a scheme, when fusion enumeration ran and failed.
    pub fusion_witness: Option<Vec<usize>>,
}

/// Largest `p` for which fusion enumeration is allowed.
pub const FUSION_LIMIT: u32 = 7;

/// Calls `visit` on every set partition of `0..n` as a restricted growth
/// string, in lexicographic order, stopping early when `visit` returns
/// false.
pub fn for_each_set_partition(n: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if n == 0 {
        visit(&[]);
        return;
    }
    let mut a = vec![0usize; n];
    let mut maxes = vec![0usize; n];
    loop {
        if !visit(&a) {
            return;
        }
        let mut t = n - 1;
        loop {
            if t == 0 {
                return;
            }
            if a[t] <= maxes[t - 1] {
                a[t] += 1;
                maxes[t] = maxes[t - 1].max(a[t]);
                for u in t + 1..n {
                    a[u] = 0;
                    maxes[u] = maxes[t];
                }
                break;
            }
            t -= 1;
        }
    }
}

fn fusion_failure(f: &PAryFunction) -> Result<(bool, Option<Vec<usize>>)> {
    let (labels, sizes) = class_labels(f)?;
    let d = sizes.len();
    let conv = Convolution::new(f.space(), &labels, d);
    let active: Vec<usize> = (1..d).filter(|&i| sizes[i] > 0).collect();
    let is_scheme = conv.check(&labels, &(0..d).collect::<Vec<_>>(), d).is_ok();
    let mut witness = None;
    let mut group = vec![0usize; d];
    for_each_set_partition(active.len(), |rgs| {
        let blocks = rgs.iter().max().map_or(0, |m| m + 1);
        for (pos, &c) in active.iter().enumerate() {
            group[c] = rgs[pos] + 1;
        }
        // empty classes never occur as labels; park them with class 0
        for c in (1..d).filter(|&c| sizes[c] == 0) {
            group[c] = 0;
        }
        if conv.check(&labels, &group, blocks + 1).is_err() {
            witness = Some(rgs.to_vec());
            false
        } else {
            true
        }
    });
    Ok((is_scheme, witness))
}

pub fn amorphic_check(f: &PAryFunction, mode: AmorphicMode) -> Result<AmorphicVerdict> {
    let p = f.p().get();
    let graphs = component_graphs(f)?;
    let nonempty: Vec<_> = graphs.iter().filter(|g| g.degree() > 0).collect();
    let classes = nonempty.len();

    let srg: Vec<_> = nonempty.iter().map(|g| g.srg_check()).collect();
    let lst: Vec<_> = srg.iter().map(|v| v.lst()).collect();
    let all_lst = lst.iter().all(|c| c.as_ref().is_some_and(|c| c.is_lst));
    let all_nlst = lst.iter().all(|c| c.as_ref().is_some_and(|c| c.is_nlst));
    let feasible = if f.n().is_multiple_of(2) { feasibility_verdict(f)?.overall } else { Feasibility::Neither };
    let kind = match feasible {
        Feasibility::Lst if all_lst => SchemeType::Lst,
        Feasibility::Nlst if all_nlst => SchemeType::Nlst,
        _ if all_lst && classes > 0 => SchemeType::Lst,
        _ if all_nlst && classes > 0 => SchemeType::Nlst,
        _ => SchemeType::None,
    };

    match mode {
        AmorphicMode::Fusion => {
            if p > FUSION_LIMIT {
                return Err(Error::FusionRefused(p));
            }
            let (is_scheme, witness) = fusion_failure(f)?;
            Ok(AmorphicVerdict {
                is_scheme,
                is_amorphic: witness.is_none(),
                method: AmorphicMethod::FusionExhaustive,
                kind: if witness.is_none() { kind } else { SchemeType::None },
                classes,
                fusion_witness: witness,
            })
        }
        AmorphicMode::Auto => {
            let is_scheme = scheme_check(f)?.is_scheme();
            let is_amorphic = if classes <= 2 { is_scheme } else { is_scheme && kind != SchemeType::None };
            let mut fusion_witness = None;
            if p <= 5 {
                let (_, witness) = fusion_failure(f)?;
                if witness.is_none() != is_amorphic {
                    return Err(Error::Inconsistency(format!(
                        "amorphic by component graphs: {is_amorphic}; by fusion enumeration: {}",
                        witness.is_none()
                    )));
                }
                fusion_witness = witness;
            }
            Ok(AmorphicVerdict {
                is_scheme,
                is_amorphic,
                method: AmorphicMethod::SpectralSrg,
                kind: if is_amorphic { kind } else { SchemeType::None },
                classes,
                fusion_witness,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pfunc::parse_poly;

    fn pm(p: u32) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn poly(src: &str, p: u32, n: u32) -> PAryFunction {
        parse_poly(src, pm(p), n).unwrap().evaluate()
    }

    fn case1() -> Vec<Vec<Vec<i64>>> {
        vec![
            vec![vec![1, 0, 0, 0], vec![0, 2, 0, 0], vec![0, 0, 2, 0], vec![0, 0, 0, 4]],
            vec![vec![0, 1, 0, 0], vec![1, 1, 0, 0], vec![0, 0, 0, 2], vec![0, 0, 2, 2]],
            vec![vec![0, 0, 1, 0], vec![0, 0, 0, 2], vec![1, 0, 1, 0], vec![0, 2, 0, 2]],
            vec![vec![0, 0, 0, 1], vec![0, 0, 1, 1], vec![0, 1, 0, 1], vec![1, 1, 1, 1]],
        ]
    }

    fn case2() -> Vec<Vec<Vec<i64>>> {
        vec![
            vec![vec![1, 0, 0], vec![0, 4, 0], vec![0, 0, 4]],
            vec![vec![0, 1, 0], vec![1, 1, 2], vec![0, 2, 2]],
            vec![vec![0, 0, 1], vec![0, 2, 2], vec![1, 2, 1]],
        ]
    }

    fn arrays(c: &SchemeConstants) -> Vec<Vec<Vec<i64>>> {
        c.active_classes().into_iter().map(|k| c.matrix(k)).collect()
    }

    #[test]
    fn counting_constants_match_printed_arrays() {
        let c = scheme_check(&poly("-x0^2+x1^2", 3, 2)).unwrap();
        let c = c.constants().unwrap();
        assert_eq!(arrays(c), case1());
        assert_eq!((c.get(1, 1, 1), c.get(3, 3, 3), c.get(3, 3, 0)), (1, 1, 4));

        let c = scheme_check(&poly("x0^2+x1^2", 3, 2)).unwrap();
        let c = c.constants().unwrap();
        assert_eq!(c.active_classes(), vec![0, 1, 2]);
        assert_eq!(arrays(c), case2());
        assert_eq!((c.get(1, 1, 1), c.get(2, 2, 2), c.get(1, 2, 1)), (1, 1, 2));
    }

    #[test]
    fn counter3_is_not_a_scheme() {
        let v = scheme_check(&poly("2*x0*x1^3+x1^4-x1^2", 5, 2)).unwrap();
        assert!(matches!(v, SchemeVerdict::NotScheme(_)));
    }

    #[test]
    fn trace_constants_agree_with_counting() {
        for (src, p, n) in [("-x0^2+x1^2", 3, 2), ("x0^2+x1^2", 3, 2), ("x0^3*x1+2*x1^4", 5, 2)] {
            let f = poly(src, p, n);
            let counted = scheme_check(&f).unwrap();
            let traced = constants_by_trace(&f).unwrap();
            assert_eq!(counted.constants(), Some(&traced), "{src}");
            for j in 0..traced.dim() {
                assert_eq!(traced.get(j, j, 0), traced.class_sizes()[j] as i64);
                for i in traced.active_classes() {
                    assert_eq!(traced.get(0, j, i), (i == j) as i64);
                }
            }
        }
    }

    #[test]
    fn derivative_count_examples() {
        let f = poly("-x0^2+x1^2", 3, 2);
        let c = scheme_check(&f).unwrap().constants().unwrap().clone();
        let parts = c.get(2, 0, 1) + c.get(0, 1, 1) + c.get(1, 2, 1) + c.get(2, 3, 1) + c.get(3, 1, 1);
        assert_eq!(parts, 3);
        assert_eq!(derivative_count_by_constants(&c, 1, 2).unwrap(), 3);
        for i in 1..=3 {
            for j in 1..=2 {
                assert_eq!(derivative_count_by_constants(&c, i, j).unwrap(), 3);
            }
        }
        assert!(derivative_count_by_constants(&c, 0, 1).is_err());
        assert!(derivative_count_by_constants(&c, 1, 3).is_err());

        let g = poly("x0^2+x1^2", 3, 2);
        let c = scheme_check(&g).unwrap().constants().unwrap().clone();
        assert_eq!(derivative_count_by_constants(&c, 1, 1).unwrap(), 3);
    }

    #[test]
    fn bent_by_constants_examples() {
        assert!(is_bent_by_constants(&poly("-x0^2+x1^2", 3, 2)).unwrap());
        assert!(is_bent_by_constants(&poly("x0^2+x1^2", 3, 2)).unwrap());
        assert!(!is_bent_by_constants(&poly("0", 3, 2)).unwrap());
        assert_eq!(is_bent_by_constants(&poly("2*x0*x1^3+x1^4-x1^2", 5, 2)), Err(Error::NotAScheme));
    }

    /// D_1 = the punctured axes, D_2 = empty, D_3 = the rest: a scheme
    /// (the axes form a subgroup union) that is not bent.
    #[test]
    fn non_bent_scheme_control() {
        let s = Space::new(pm(3), 2).unwrap();
        let f = PAryFunction::from_fn(s, |x| match (x[0], x[1]) {
            (0, 0) => 0,
            (0, _) | (_, 0) => 1,
            _ => 0,
        });
        assert!(scheme_check(&f).unwrap().is_scheme());
        assert!(!is_bent_by_constants(&f).unwrap());
        assert!(!crate::spectral::is_bent(&f).is_bent());
    }

    #[test]
    fn imy_examples() {
        let c = imy_predicted(pm(3), 3, &[1, 1, 2]).unwrap();
        assert_eq!((c.get(1, 1, 1), c.get(3, 3, 3), c.get(1, 3, 1), c.get(1, 3, 2)), (1, 1, 0, 2));
        assert_eq!(arrays(&c), case1());

        let c = imy_predicted(pm(3), -3, &[-1, -1, 0]).unwrap();
        assert_eq!((c.get(1, 1, 1), c.get(2, 2, 1)), (1, 2));
        assert_eq!(arrays(&c), case2());

        let c = imy_predicted(pm(5), 5, &[1, 1, 1, 1, 2]).unwrap();
        assert_eq!(c.get(1, 2, 3), 1);
    }

    #[test]
    fn amorphic_examples() {
        let v = amorphic_check(&poly("-x0^2+x1^2", 3, 2), AmorphicMode::Auto).unwrap();
        assert!(v.is_amorphic);
        assert_eq!(v.kind, SchemeType::Lst);

        let v = amorphic_check(&poly("x0^2+x1^2", 3, 2), AmorphicMode::Auto).unwrap();
        assert!(v.is_amorphic);
        assert_eq!(v.kind, SchemeType::Nlst);
        assert_eq!(v.classes, 2);

        let f = poly("3*x0^4+2*x0^2+2*x0*x1", 5, 2);
        let v = amorphic_check(&f, AmorphicMode::Auto).unwrap();
        assert!(!v.is_amorphic);
        let v = amorphic_check(&f, AmorphicMode::Fusion).unwrap();
        assert!(!v.is_amorphic);
        assert!(v.fusion_witness.is_some());

        let g = poly("x0^3*x1+2*x1^4", 5, 2);
        let v = amorphic_check(&g, AmorphicMode::Fusion).unwrap();
        assert!(v.is_amorphic && v.is_scheme);
    }

    #[test]
    fn fusion_refused_above_seven() {
        let f = poly("x0^2+x1^2", 11, 2);
        assert_eq!(amorphic_check(&f, AmorphicMode::Fusion), Err(Error::FusionRefused(11)));
    }

    #[test]
    fn set_partitions_in_rgs_order() {
        let mut seen = Vec::new();
        for_each_set_partition(3, |a| {
            seen.push(a.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1], vec![0, 1, 2]]);
        let bell: Vec<usize> = (0..=7)
            .map(|n| {
                let mut c = 0;
                for_each_set_partition(n, |_| {
                    c += 1;
                    true
                });
                c
            })
            .collect();
        assert_eq!(bell, vec![1, 1, 2, 5, 15, 52, 203, 877]);
    }
}
