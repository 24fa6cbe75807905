//! Exact Walsh and Fourier transforms over `GF(p)^n`, and the bent tests
//! built on them.
//!
//! Transform kernels work on group-ring vectors: a length-`p` coefficient
//! list per point, where multiplication by `ζ^k` is an index rotation.
//! Values are converted to [`CycInt`] only at the end.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::AddAssign;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::ff::{PrimeModulus, Space};
use crate::pfunc::PAryFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TransformMethod {
    /// The direct double sum, `O(p^{2n})`.
    Naive,
    /// One `p`-point character transform per coordinate axis.
    #[default]
    Fast,
}

/// `W_f(x) = sum_y ζ^{f(y) - <x,y>}` for every point `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    space: Space,
    values: Vec<CycInt>,
}

/// `ĝ(x) = sum_y g(y) ζ^{-<x,y>}` for every point `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierSpectrum {
    space: Space,
    values: Vec<CycInt>,
}

macro_rules! spectrum_accessors {
    ($t:ty) => {
        impl $t {
            pub fn space(&self) -> &Space {
                &self.space
            }

            pub fn values(&self) -> &[CycInt] {
                &self.values
            }

            pub fn value(&self, x: usize) -> &CycInt {
                &self.values[x]
            }

            pub fn into_values(self) -> Vec<CycInt> {
                self.values
            }
        }
    };
}

spectrum_accessors!(WalshSpectrum);
spectrum_accessors!(FourierSpectrum);

impl WalshSpectrum {
    /// First point with `|W_f(x)|^2 != p^n`. Nonzero points are scanned
    /// before the origin.
    pub fn bent_witness(&self) -> Option<usize> {
        let target = CycInt::from_int(self.space.p(), BigInt::from(self.space.p().get()).pow(self.space.n()));
        let bad = |x: &usize| self.values[*x].norm_sq() != target;
        (1..self.space.size()).chain(core::iter::once(0)).find(bad)
    }

    /// `sum_x |W_f(x)|^2`, which Parseval fixes at `p^{2n}`.
    pub fn energy(&self) -> CycInt {
        self.values.iter().fold(CycInt::zero(self.space.p()), |acc, w| &acc + &w.norm_sq())
    }
}

/// Outcome of a bent test; the witness is a point index (for the Walsh
/// test) or a direction `b` (for the derivative test).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BentVerdict {
    Bent,
    NotBent { witness: usize },
}

impl BentVerdict {
    pub fn is_bent(self) -> bool {
        self == BentVerdict::Bent
    }

    pub fn witness(self) -> Option<usize> {
        match self {
            BentVerdict::Bent => None,
            BentVerdict::NotBent { witness } => Some(witness),
        }
    }

    fn from_witness(w: Option<usize>) -> Self {
        w.map_or(BentVerdict::Bent, |witness| BentVerdict::NotBent { witness })
    }
}

pub fn walsh_transform(f: &PAryFunction, method: TransformMethod) -> WalshSpectrum {
    let space = f.space().clone();
    let pu = space.p().get() as usize;
    let counts = match method {
        TransformMethod::Naive => {
            let mut out = vec![0u64; space.size() * pu];
            for x in 0..space.size() {
                let acc = &mut out[x * pu..(x + 1) * pu];
                for (y, &fy) in f.values().iter().enumerate() {
                    let e = (fy as usize + pu - space.dot(x, y) as usize) % pu;
                    acc[e] += 1;
                }
            }
            out
        }
        TransformMethod::Fast => {
            let mut data = vec![0u64; space.size() * pu];
            for (y, &fy) in f.values().iter().enumerate() {
                data[y * pu + fy as usize] = 1;
            }
            character_transform(&space, data)
        }
    };
    let values = to_cycints(space.p(), &counts);
    WalshSpectrum { space, values }
}

/// `1_D^(x) = sum_{y in D} ζ^{-<x,y>}`.
pub fn fourier_indicator(space: &Space, d: &[usize], method: TransformMethod) -> Result<FourierSpectrum> {
    let pu = space.p().get() as usize;
    if let Some(&bad) = d.iter().find(|&&y| y >= space.size()) {
        return Err(Error::IndexOutOfRange { index: bad, size: space.size() });
    }
    let counts = match method {
        TransformMethod::Naive => {
            let mut out = vec![0u64; space.size() * pu];
            for x in 0..space.size() {
                for &y in d {
                    let e = (pu - space.dot(x, y) as usize) % pu;
                    out[x * pu + e] += 1;
                }
            }
            out
        }
        TransformMethod::Fast => {
            let mut data = vec![0u64; space.size() * pu];
            for &y in d {
                data[y * pu] += 1;
            }
            character_transform(space, data)
        }
    };
    Ok(FourierSpectrum { space: space.clone(), values: to_cycints(space.p(), &counts) })
}

/// Fourier transform of an arbitrary `Z[ζ]`-valued function on the space.
pub fn fourier_transform(space: &Space, g: &[CycInt]) -> Result<FourierSpectrum> {
    if g.len() != space.size() {
        return Err(Error::LengthMismatch { left: g.len(), right: space.size() });
    }
    let p = space.p();
    let pu = p.get() as usize;
    let mut data = vec![BigInt::zero(); space.size() * pu];
    for (y, v) in g.iter().enumerate() {
        if v.p() != p {
            return Err(Error::ModulusMismatch { left: v.p().get(), right: p.get() });
        }
        for (k, c) in v.coeffs().iter().enumerate() {
            data[y * pu + k] = c.clone();
        }
    }
    let out = character_transform(space, data);
    let values = out.chunks(pu).map(|d| CycInt::from_group_ring(p, d)).collect();
    Ok(FourierSpectrum { space: space.clone(), values })
}

fn to_cycints(p: PrimeModulus, counts: &[u64]) -> Vec<CycInt> {
    counts.chunks(p.get() as usize).map(|d| CycInt::from_group_ring(p, d)).collect()
}

/// Applies `v(x) <- sum_y ζ^{-<x,y>} v(y)` to a table of group-ring
/// vectors (`data[y * p + k]` is the coefficient of `ζ^k` at `y`), one axis
/// at a time.
fn character_transform<T>(space: &Space, mut data: Vec<T>) -> Vec<T>
where
    T: Clone + Zero + for<'a> AddAssign<&'a T>,
{
    let pu = space.p().get() as usize;
    let mut line: Vec<T> = vec![T::zero(); pu * pu];
    let mut stride = 1usize;
    for _ in 0..space.n() {
        let block = stride * pu;
        for base in (0..space.size()).step_by(block) {
            for offset in 0..stride {
                let start = base + offset;
                for yk in 0..pu {
                    let src = (start + yk * stride) * pu;
                    line[yk * pu..(yk + 1) * pu].clone_from_slice(&data[src..src + pu]);
                }
                for xk in 0..pu {
                    let dst = (start + xk * stride) * pu;
                    let out = &mut data[dst..dst + pu];
                    out.iter_mut().for_each(|c| *c = T::zero());
                    for yk in 0..pu {
                        let shift = (pu - (xk * yk) % pu) % pu;
                        let src = &line[yk * pu..(yk + 1) * pu];
                        for (e, c) in src.iter().enumerate() {
                            out[(e + shift) % pu] += c;
                        }
                    }
                }
            }
        }
        stride = block;
    }
    data
}

/// Walsh test: `|W_f(x)|^2 = p^n` for all `x`.
pub fn is_bent(f: &PAryFunction) -> BentVerdict {
    BentVerdict::from_witness(walsh_transform(f, TransformMethod::Fast).bent_witness())
}

/// `D_b f(x) = f(x + b) - f(x)`.
pub fn derivative(f: &PAryFunction, b: usize) -> Result<PAryFunction> {
    let space = f.space();
    if b >= space.size() {
        return Err(Error::IndexOutOfRange { index: b, size: space.size() });
    }
    let p = f.p();
    let values = (0..space.size()).map(|x| p.sub(f.value(space.add(x, b)), f.value(x))).collect();
    PAryFunction::new(space.clone(), values)
}

/// Derivative test: `D_b f` is balanced for every `b != 0`. The witness is
/// the first failing `b`.
pub fn is_bent_by_derivatives(f: &PAryFunction) -> BentVerdict {
    let space = f.space();
    let pu = f.p().get() as usize;
    let expected = space.size() / pu;
    let mut counts = vec![0usize; pu];
    let witness = (1..space.size()).find(|&b| {
        counts.iter_mut().for_each(|c| *c = 0);
        for x in 0..space.size() {
            let v = f.p().sub(f.value(space.add(x, b)), f.value(x));
            counts[v as usize] += 1;
        }
        counts.iter().any(|&c| c != expected)
    });
    BentVerdict::from_witness(witness)
}

/// The eigenvalue tables `λ_1, ..., λ_p` of the component Cayley graphs,
/// `λ_i = 1_{D_i}^`. Entry `i - 1` holds `λ_i`.
pub fn component_eigenvalues(f: &PAryFunction) -> Result<Vec<FourierSpectrum>> {
    f.require_even_vanishing()?;
    let ls = f.level_sets()?;
    let p = f.p().get() as usize;
    (1..=p).map(|i| fourier_indicator(f.space(), ls.set(i), TransformMethod::Fast)).collect()
}

/// `W_f(x) = 1 + sum_{i=1}^p ζ^i λ_i(x)`, assembled from the component
/// spectra.
pub fn walsh_from_eigenvalues(f: &PAryFunction) -> Result<WalshSpectrum> {
    let lambdas = component_eigenvalues(f)?;
    let p = f.p();
    let space = f.space().clone();
    let values = (0..space.size())
        .map(|x| lambdas.iter().enumerate().fold(CycInt::one(p), |acc, (i, l)| &acc + &l.value(x).rotate(i as u64 + 1)))
        .collect();
    Ok(WalshSpectrum { space, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pfunc::parse_poly;

    fn poly(src: &str, p: u32, n: u32) -> PAryFunction {
        parse_poly(src, PrimeModulus::new(p).unwrap(), n).unwrap().evaluate()
    }

    fn pm(p: u32) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn int(p: u32, v: i64) -> CycInt {
        CycInt::from_int(pm(p), v)
    }

    #[test]
    fn zero_function_spectrum() {
        for (p, n) in [(3u32, 2u32), (5, 2), (3, 3)] {
            let s = Space::new(pm(p), n).unwrap();
            let w = walsh_transform(&PAryFunction::zero(s.clone()), TransformMethod::Naive);
            assert_eq!(w.value(0), &int(p, s.size() as i64));
            assert!(w.values()[1..].iter().all(CycInt::is_zero));
        }
    }

    #[test]
    fn walsh_at_origin_examples() {
        for method in [TransformMethod::Naive, TransformMethod::Fast] {
            assert_eq!(walsh_transform(&poly("-x0^2+x1^2", 3, 2), method).value(0), &int(3, 3));
            assert_eq!(walsh_transform(&poly("x0^2+x1^2", 3, 2), method).value(0), &int(3, -3));
        }
    }

    #[test]
    fn fourier_indicator_examples() {
        let s = Space::new(pm(3), 2).unwrap();
        let empty = fourier_indicator(&s, &[], TransformMethod::Fast).unwrap();
        assert!(empty.values().iter().all(CycInt::is_zero));

        let all: Vec<usize> = (0..9).collect();
        let full = fourier_indicator(&s, &all, TransformMethod::Fast).unwrap();
        assert_eq!(full.value(0), &int(3, 9));
        assert!(full.values()[1..].iter().all(CycInt::is_zero));

        let f = poly("-x0^2+x1^2", 3, 2);
        let ls = f.level_sets().unwrap();
        let l1 = fourier_indicator(&s, ls.set(1), TransformMethod::Naive).unwrap();
        for x in 1..9 {
            let v = l1.value(x).as_i64().unwrap();
            assert!(v == 2 || v == -1, "{v}");
        }
    }

    #[test]
    fn bent_examples() {
        assert!(is_bent(&poly("x0^2+x1^2", 3, 2)).is_bent());
        assert!(is_bent(&poly("3*x0^4+2*x0^2+2*x0*x1", 5, 2)).is_bent());
        let zero = PAryFunction::zero(Space::new(pm(3), 2).unwrap());
        // (0,1) has index 1
        assert_eq!(is_bent(&zero), BentVerdict::NotBent { witness: 1 });
    }

    #[test]
    fn derivative_examples() {
        let lin = poly("x0+2*x1", 3, 2);
        assert!(!is_bent_by_derivatives(&lin).is_bent());
        let f = poly("-x0^2+x1^2", 3, 2);
        let b = f.space().point_to_index(&[1, 0]).unwrap();
        let d = derivative(&f, b).unwrap();
        assert_eq!(d, poly("-2*x0-1", 3, 2));
        assert!(is_bent_by_derivatives(&poly("3*x0^4+2*x0^2+2*x0*x1", 5, 2)).is_bent());
    }

    #[test]
    fn eigenvalue_reconstruction_examples() {
        for src in ["-x0^2+x1^2", "x0^2+x1^2", "0"] {
            let f = poly(src, 3, 2);
            assert_eq!(walsh_from_eigenvalues(&f).unwrap(), walsh_transform(&f, TransformMethod::Naive));
        }
        let f = poly("x0", 3, 2);
        assert!(matches!(walsh_from_eigenvalues(&f), Err(Error::NotEven { .. })));
    }

    #[test]
    fn fourier_transform_matches_indicator_path() {
        let f = poly("3*x0^4+2*x0^2+2*x0*x1", 5, 2);
        let s = f.space().clone();
        let ls = f.level_sets().unwrap();
        let g: Vec<CycInt> = (0..s.size()).map(|x| int(5, ls.set(2).contains(&x) as i64)).collect();
        assert_eq!(
            fourier_transform(&s, &g).unwrap(),
            fourier_indicator(&s, ls.set(2), TransformMethod::Naive).unwrap()
        );
    }
}
