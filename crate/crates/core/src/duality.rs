//! Regularity of bent functions and their duals.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::cayley::{component_graphs, distinguished_index_from, feasibility_verdict, SrgVerdict};
use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::pfunc::PAryFunction;
use crate::spectral::{component_eigenvalues, fourier_indicator, walsh_transform, TransformMethod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regularity {
    /// `W_f(x) = ζ^{f*(x)} p^{n/2}`.
    Regular,
    /// `W_f(x) = -ζ^{f*(x)} p^{n/2}`.
    WeaklyRegular,
    /// The sign of `W_f(x) / ζ^j` varies with `x`.
    NotWeaklyRegular,
}

impl core::fmt::Display for Regularity {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Regularity::Regular => "regular",
            Regularity::WeaklyRegular => "(-1)-weakly regular",
            Regularity::NotWeaklyRegular => "not weakly regular",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub kind: Regularity,
    pub w0: CycInt,
    /// `μ = ε ζ^{j0}` as `(ε, j0)`, for the weakly regular kinds.
    pub mu: Option<(i8, u32)>,
    pub dual: Option<PAryFunction>,
}

/// Factors every `W_f(x)` as `ε ζ^j p^{n/2}`. The dual is `f*(x) = j`
/// whenever `ε` is constant.
pub fn classify_regularity(f: &PAryFunction) -> Result<RegularityReport> {
    if !f.n().is_multiple_of(2) {
        return Err(Error::OddDimension(f.n()));
    }
    let spectrum = walsh_transform(f, TransformMethod::Fast);
    if let Some(witness) = spectrum.bent_witness() {
        return Err(Error::NotBent { witness });
    }
    let m = f.n() / 2;
    let mut signs = Vec::with_capacity(spectrum.values().len());
    let mut exps = Vec::with_capacity(spectrum.values().len());
    for (x, w) in spectrum.values().iter().enumerate() {
        let (eps, j) = w.classify_root_multiple(m).ok_or_else(|| {
            Error::Inconsistency(format!("W_f at point index {x} is not ±ζ^j p^{m} although f is bent"))
        })?;
        signs.push(eps);
        exps.push(j);
    }
    let w0 = spectrum.value(0).clone();
    let eps = signs[0];
    if signs.iter().any(|&s| s != eps) {
        return Ok(RegularityReport { kind: Regularity::NotWeaklyRegular, w0, mu: None, dual: None });
    }
    let kind = if eps > 0 { Regularity::Regular } else { Regularity::WeaklyRegular };
    let dual = PAryFunction::new(f.space().clone(), exps)?;
    Ok(RegularityReport { kind, w0, mu: Some((eps, 0)), dual: Some(dual) })
}

/// `f*(x) = j` where `λ_j(x) = N - r_j` is the distinguished eigenvalue,
/// with `j = p` read as 0.
pub fn dual_by_distinguished_index(f: &PAryFunction) -> Result<PAryFunction> {
    let verdict = feasibility_verdict(f)?;
    let lambdas = component_eigenvalues(f)?;
    let j = distinguished_index_from(&verdict, &lambdas)?;
    let p = f.p().get();
    PAryFunction::new(f.space().clone(), j.into_iter().map(|j| j % p).collect())
}

/// One failed sub-check of [`verify_dual_structure`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DualFailure {
    /// 1: `|D_i*| = |D_i|`; 2: `f_i*` from `f_i^`; 3: `(f_i*)^` from `f_i`;
    /// 4: equal SRG parameters of `Γ_i` and `Γ_i*`.
    pub check: u8,
    pub i: usize,
    pub x: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualStructureReport {
    pub dual: PAryFunction,
    /// `|D_1*|, ..., |D_p*|`.
    pub dual_sizes: Vec<usize>,
    pub dual_srg: Vec<SrgVerdict>,
    /// `set_matches[i - 1] = Some(j)` when `D_i* = D_j`.
    pub set_matches: Vec<Option<usize>>,
    pub failures: Vec<DualFailure>,
}

impl DualStructureReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn check_passed(&self, check: u8) -> bool {
        self.failures.iter().all(|fl| fl.check != check)
    }
}

/// Checks the level-set, indicator and graph relations between a feasible
/// `f` and its dual.
pub fn verify_dual_structure(f: &PAryFunction) -> Result<DualStructureReport> {
    let verdict = feasibility_verdict(f)?;
    let profile = verdict.profile().ok_or(Error::NotFeasible)?.clone();
    let lambdas = component_eigenvalues(f)?;
    let dual = classify_regularity(f)?.dual.ok_or(Error::NotFeasible)?;
    let j = distinguished_index_from(&verdict, &lambdas)?;
    let p = f.p();
    let pu = p.get() as usize;
    if j.iter().zip(dual.values()).any(|(&a, &b)| a % p.get() != b) {
        return Err(Error::Inconsistency("dual from the Walsh spectrum differs from the distinguished index".into()));
    }

    let space = f.space().clone();
    let ls = f.level_sets()?;
    let dls = dual.level_sets()?;
    let graphs = component_graphs(f)?;
    let dual_graphs = component_graphs(&dual)?;
    let n_value = profile.n_value;
    let mut failures = Vec::new();
    let mut set_matches = vec![None; pu];
    let mut dual_srg = Vec::with_capacity(pu);

    for i in 1..=pu {
        let r = profile.r[i - 1];
        if dls.set(i).len() != ls.set(i).len() || ls.set(i).len() as i64 != (n_value - 1) * r {
            failures.push(DualFailure { check: 1, i, x: None });
        }
        let lam = &lambdas[i - 1];
        let mut dual_ind = vec![0i64; space.size()];
        for &x in dls.set(i) {
            dual_ind[x] = 1;
        }
        let mut ind = vec![0i64; space.size()];
        for &x in ls.set(i) {
            ind[x] = 1;
        }
        let delta = |x: usize| i64::from(x == 0);
        // N f_i*(x) = f_i^(x) + r_i - N r_i δ_0(x)
        let bad2 = (0..space.size()).find(|&x| {
            let rhs = lam.value(x) + &CycInt::from_int(p, r - n_value * r * delta(x));
            CycInt::from_int(p, n_value * dual_ind[x]) != rhs
        });
        if let Some(x) = bad2 {
            failures.push(DualFailure { check: 2, i, x: Some(x) });
        }
        // (f_i*)^(x) = N f_i(x) + N r_i δ_0(x) - r_i
        let dual_hat = fourier_indicator(&space, dls.set(i), TransformMethod::Fast)?;
        let bad3 = (0..space.size())
            .find(|&x| *dual_hat.value(x) != CycInt::from_int(p, n_value * ind[x] + n_value * r * delta(x) - r));
        if let Some(x) = bad3 {
            failures.push(DualFailure { check: 3, i, x: Some(x) });
        }
        let srg = graphs[i - 1].srg_check();
        let dsrg = dual_graphs[i - 1].srg_check();
        let same = match (srg, dsrg) {
            (SrgVerdict::Srg(a), SrgVerdict::Srg(b)) => a == b,
            (SrgVerdict::Empty { .. }, SrgVerdict::Empty { .. }) => true,
            _ => false,
        };
        if !same {
            failures.push(DualFailure { check: 4, i, x: None });
        }
        dual_srg.push(dsrg);
        set_matches[i - 1] = (1..=pu).find(|&k| dls.set(i) == ls.set(k));
    }

    Ok(DualStructureReport { dual_sizes: dls.sizes(), dual, dual_srg, set_matches, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeModulus;
    use crate::pfunc::parse_poly;

    fn poly(src: &str, p: u32, n: u32) -> PAryFunction {
        parse_poly(src, PrimeModulus::new(p).unwrap(), n).unwrap().evaluate()
    }

    #[test]
    fn regularity_examples() {
        let r = classify_regularity(&poly("-x0^2+x1^2", 3, 2)).unwrap();
        assert_eq!(r.kind, Regularity::Regular);
        assert_eq!(r.dual.unwrap(), poly("x0^2-x1^2", 3, 2));

        let r = classify_regularity(&poly("x0^2+x1^2", 3, 2)).unwrap();
        assert_eq!(r.kind, Regularity::WeaklyRegular);
        assert_eq!(r.mu, Some((-1, 0)));
        assert_eq!(r.dual.unwrap(), poly("-x0^2-x1^2", 3, 2));

        let f = poly("2*x0*x3+x1*x2+x0^2*x1*x2+2*x0*x1^2*x3", 3, 4);
        let r = classify_regularity(&f).unwrap();
        assert_eq!(r.kind, Regularity::Regular);
        assert_eq!(r.dual.unwrap(), poly("x0*x3+2*x1*x2+x0*x2^2*x3+2*x1*x2*x3^2", 3, 4));
    }

    #[test]
    fn regularity_preconditions() {
        assert_eq!(classify_regularity(&poly("0", 3, 2)), Err(Error::NotBent { witness: 1 }));
        assert_eq!(classify_regularity(&poly("x0^2", 3, 1)), Err(Error::OddDimension(1)));
    }

    #[test]
    fn distinguished_index_duals() {
        assert_eq!(dual_by_distinguished_index(&poly("-x0^2+x1^2", 3, 2)).unwrap(), poly("x0^2-x1^2", 3, 2));
        assert_eq!(dual_by_distinguished_index(&poly("x0^2+x1^2", 3, 2)).unwrap(), poly("-x0^2-x1^2", 3, 2));
        assert_eq!(dual_by_distinguished_index(&poly("-x0*x1^3+x1^4", 5, 2)).unwrap(), poly("x0^4+x0^3*x1", 5, 2));
        assert_eq!(dual_by_distinguished_index(&poly("-x0^2+2*x1^2", 5, 2)), Err(Error::NotFeasible));
    }

    #[test]
    fn dual_structure_examples() {
        let rep = verify_dual_structure(&poly("-x0^2+x1^2", 3, 2)).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        assert_eq!(rep.dual_sizes, vec![2, 2, 4]);

        let rep = verify_dual_structure(&poly("-x0^2-x1^2+x2*x3", 3, 4)).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        assert_eq!(rep.set_matches, vec![Some(2), Some(1), Some(3)]);
    }
}
