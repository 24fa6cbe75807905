//! Component Cayley graphs, strong regularity and Latin square type.
//!
//! All graphs here are Cayley graphs on `GF(p)^n` with a symmetric
//! connection set `D` not containing 0: `x ~ y` iff `x - y ∈ D`. The number
//! of common neighbours of `x` and `y` depends only on `x - y`, so strong
//! regularity reduces to one autocorrelation of `D`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Roots;

use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::ff::Space;
use crate::pfunc::{feasible_sizes, PAryFunction, SizeProfile};
use crate::spectral::{component_eigenvalues, fourier_indicator, FourierSpectrum, TransformMethod};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGraph {
    space: Space,
    connection: Vec<usize>,
    member: Vec<bool>,
}

impl CayleyGraph {
    /// Builds the graph with connection set `d`, which must avoid 0 and be
    /// closed under negation. Duplicates are ignored.
    pub fn new(space: Space, d: &[usize]) -> Result<Self> {
        let mut member = vec![false; space.size()];
        for &x in d {
            if x >= space.size() {
                return Err(Error::IndexOutOfRange { index: x, size: space.size() });
            }
            member[x] = true;
        }
        if member[0] {
            return Err(Error::InvalidTable("connection set contains 0".into()));
        }
        if let Some(x) = (0..space.size()).find(|&x| member[x] && !member[space.neg(x)]) {
            return Err(Error::InvalidTable(format!("connection set not symmetric at point index {x}")));
        }
        let connection = (0..space.size()).filter(|&x| member[x]).collect();
        Ok(CayleyGraph { space, connection, member })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn connection_set(&self) -> &[usize] {
        &self.connection
    }

    pub fn contains(&self, x: usize) -> bool {
        self.member[x]
    }

    pub fn degree(&self) -> usize {
        self.connection.len()
    }

    pub fn order(&self) -> usize {
        self.space.size()
    }

    /// The graph with connection set `D ∪ D'`.
    pub fn union(&self, other: &CayleyGraph) -> Result<CayleyGraph> {
        if self.space != other.space {
            return Err(Error::LengthMismatch { left: self.space.size(), right: other.space.size() });
        }
        let mut d = self.connection.clone();
        d.extend_from_slice(&other.connection);
        CayleyGraph::new(self.space.clone(), &d)
    }

    /// `c(z) = |D ∩ (D + z)|`, the number of common neighbours of `0` and
    /// `z`.
    pub fn common_neighbor_counts(&self) -> Vec<usize> {
        let mut c = vec![0usize; self.space.size()];
        for &w in &self.connection {
            for &u in &self.connection {
                c[self.space.sub(w, u)] += 1;
            }
        }
        c
    }

    pub fn srg_check(&self) -> SrgVerdict {
        let nu = self.order() as u64;
        let k = self.degree() as u64;
        if k == 0 {
            return SrgVerdict::Empty { nu };
        }
        if k == nu - 1 {
            return SrgVerdict::Complete { nu };
        }
        let c = self.common_neighbor_counts();
        let mut lambda: Option<(usize, usize)> = None;
        let mut mu: Option<(usize, usize)> = None;
        for (z, &cz) in c.iter().enumerate().skip(1) {
            let slot = if self.member[z] { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some((z, cz)),
                Some((first, v)) if v != cz => {
                    return SrgVerdict::NotSrg { witness: (first, z) };
                }
                Some(_) => {}
            }
        }
        let (lambda, mu) = (lambda.expect("k > 0").1 as u64, mu.expect("k < nu - 1").1 as u64);
        SrgVerdict::Srg(SrgParams { nu, k, lambda, mu })
    }

    /// Eigenvalue census. The eigenvalue for the character at `x` is
    /// `1_D^(x)`.
    pub fn spectrum(&self) -> EigenReport {
        let spec = fourier_indicator(&self.space, &self.connection, TransformMethod::Fast)
            .expect("connection set indices are in range");
        EigenReport::from_values(spec.values())
    }
}

/// Parameters `(ν, k, λ, μ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SrgParams {
    pub nu: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    /// `k (k - λ - 1) = (ν - k - 1) μ`.
    pub fn satisfies_counting_identity(&self) -> bool {
        let (nu, k, l, m) = (self.nu as i128, self.k as i128, self.lambda as i128, self.mu as i128);
        k * (k - l - 1) == (nu - k - 1) * m
    }
}

impl core::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({},{},{},{})", self.nu, self.k, self.lambda, self.mu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SrgVerdict {
    Srg(SrgParams),
    /// No edges. Strongly regular only vacuously.
    Empty {
        nu: u64,
    },
    /// `K_ν`; `μ` is undefined, so never reported as SRG.
    Complete {
        nu: u64,
    },
    /// Two nonzero points of the same adjacency kind with different
    /// common-neighbour counts.
    NotSrg {
        witness: (usize, usize),
    },
}

impl SrgVerdict {
    pub fn params(&self) -> Option<SrgParams> {
        match self {
            SrgVerdict::Srg(p) => Some(*p),
            _ => None,
        }
    }

    pub fn is_srg(&self) -> bool {
        matches!(self, SrgVerdict::Srg(_))
    }

    /// Latin square classification of the parameters; the empty graph gets
    /// the degenerate classification.
    pub fn lst(&self) -> Option<LstClassification> {
        match self {
            SrgVerdict::Srg(p) => Some(classify_lst(p)),
            SrgVerdict::Empty { nu } => Some(LstClassification::empty(*nu)),
            _ => None,
        }
    }
}

/// The `(N, r)` solutions of `(ν, k, λ, μ) = (N², (N-1) r, N + r² - 3r, r² - r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LstClassification {
    pub solutions: Vec<(i64, i64)>,
    /// Some solution has `N, r > 0`.
    pub is_lst: bool,
    /// Some solution has `N, r < 0`.
    pub is_nlst: bool,
    /// Set for the empty graph, whose only solutions are `(±√ν, 0)`.
    pub degenerate_empty: bool,
}

impl LstClassification {
    pub fn empty(nu: u64) -> Self {
        let solutions = match isqrt_exact(nu) {
            Some(s) => vec![(s as i64, 0), (-(s as i64), 0)],
            None => Vec::new(),
        };
        LstClassification { solutions, is_lst: false, is_nlst: false, degenerate_empty: true }
    }
}

fn isqrt_exact(v: u64) -> Option<u64> {
    let s = v.sqrt();
    (s * s == v).then_some(s)
}

pub fn classify_lst(params: &SrgParams) -> LstClassification {
    let mut out = LstClassification { solutions: Vec::new(), is_lst: false, is_nlst: false, degenerate_empty: false };
    let Some(s) = isqrt_exact(params.nu) else {
        return out;
    };
    let (k, lambda, mu) = (params.k as i64, params.lambda as i64, params.mu as i64);
    for n in [s as i64, -(s as i64)] {
        if n == 1 || k % (n - 1) != 0 {
            continue;
        }
        let r = k / (n - 1);
        if r != 0 && (r > 0) != (n > 0) {
            continue;
        }
        if lambda == n + r * r - 3 * r && mu == r * r - r {
            out.solutions.push((n, r));
            out.is_lst |= n > 0 && r > 0;
            out.is_nlst |= n < 0 && r < 0;
        }
    }
    out
}

/// Distinct eigenvalues with multiplicities, ordered by value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenReport {
    pub distinct: Vec<(CycInt, usize)>,
}

impl EigenReport {
    pub fn from_values(values: &[CycInt]) -> Self {
        let mut census: BTreeMap<&CycInt, usize> = BTreeMap::new();
        for v in values {
            *census.entry(v).or_insert(0) += 1;
        }
        EigenReport { distinct: census.into_iter().map(|(v, m)| (v.clone(), m)).collect() }
    }

    pub fn distinct_count(&self) -> usize {
        self.distinct.len()
    }

    pub fn all_rational(&self) -> bool {
        self.distinct.iter().all(|(v, _)| v.is_rational())
    }

    pub fn total_multiplicity(&self) -> usize {
        self.distinct.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity(&self, value: &CycInt) -> usize {
        self.distinct.iter().find(|(v, _)| v == value).map_or(0, |(_, m)| *m)
    }

    /// `(value, multiplicity)` pairs as integers, if every eigenvalue is
    /// rational and fits.
    pub fn integer_values(&self) -> Option<Vec<(i64, usize)>> {
        self.distinct.iter().map(|(v, m)| v.as_i64().map(|i| (i, *m))).collect()
    }
}

/// Strong regularity read off the spectrum of a `k`-regular graph on `ν`
/// vertices: one eigenvalue means empty, two (`k` and `-1`) a disjoint
/// union of cliques, three (`k`, `θ`, `τ`) a connected SRG with
/// `λ = k + θ + τ + θτ` and `μ = k + θτ`.
pub fn srg_from_spectrum(report: &EigenReport, nu: u64, k: u64) -> Option<SrgVerdict> {
    let p = report.distinct.first()?.0.p();
    let kc = CycInt::from_int(p, k);
    if report.multiplicity(&kc) == 0 {
        return None;
    }
    let others: Vec<&CycInt> = report.distinct.iter().map(|(v, _)| v).filter(|v| **v != kc).collect();
    match others.as_slice() {
        [] if k == 0 => Some(SrgVerdict::Empty { nu }),
        [t] if **t == CycInt::from_int(p, -1) && k == nu - 1 => Some(SrgVerdict::Complete { nu }),
        [t] if **t == CycInt::from_int(p, -1) => {
            Some(SrgVerdict::Srg(SrgParams { nu, k, lambda: k.checked_sub(1)?, mu: 0 }))
        }
        [a, b] => {
            let (a, b) = (*a, *b);
            let prod = a * b;
            let lambda = (&(&(&kc + a) + b) + &prod).as_integer()?;
            let mu = (&kc + &prod).as_integer()?;
            let lambda = u64::try_from(lambda).ok()?;
            let mu = u64::try_from(mu).ok()?;
            Some(SrgVerdict::Srg(SrgParams { nu, k, lambda, mu }))
        }
        _ => None,
    }
}

/// `Γ_1, ..., Γ_p`; entry `i - 1` is `Γ_i`.
pub fn component_graphs(f: &PAryFunction) -> Result<Vec<CayleyGraph>> {
    f.require_even_vanishing()?;
    let ls = f.level_sets()?;
    let p = f.p().get() as usize;
    (1..=p).map(|i| CayleyGraph::new(f.space().clone(), ls.set(i))).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Feasibility {
    Lst,
    Nlst,
    Neither,
}

impl core::fmt::Display for Feasibility {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Feasibility::Lst => "feasible-LST",
            Feasibility::Nlst => "feasible-NLST",
            Feasibility::Neither => "neither",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphVerdict {
    /// `i` in `1..=p`.
    pub index: usize,
    pub degree: usize,
    pub srg: SrgVerdict,
    pub lst: Option<LstClassification>,
    pub fits_lst: bool,
    pub fits_nlst: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub overall: Feasibility,
    /// `n = 2m`.
    pub m: u32,
    pub graphs: Vec<GraphVerdict>,
    pub lst_profile: SizeProfile,
    pub nlst_profile: SizeProfile,
}

impl FeasibilityVerdict {
    /// The size profile matching the overall verdict.
    pub fn profile(&self) -> Option<&SizeProfile> {
        match self.overall {
            Feasibility::Lst => Some(&self.lst_profile),
            Feasibility::Nlst => Some(&self.nlst_profile),
            Feasibility::Neither => None,
        }
    }
}

fn fits(srg: &SrgVerdict, n_value: i64, r: i64) -> bool {
    if r == 0 {
        return matches!(srg, SrgVerdict::Empty { .. });
    }
    let Some(params) = srg.params() else {
        return false;
    };
    let expect = [n_value * n_value, (n_value - 1) * r, n_value + r * r - 3 * r, r * r - r];
    let got = [params.nu as i64, params.k as i64, params.lambda as i64, params.mu as i64];
    expect == got
}

pub fn feasibility_verdict(f: &PAryFunction) -> Result<FeasibilityVerdict> {
    if !f.n().is_multiple_of(2) {
        return Err(Error::OddDimension(f.n()));
    }
    let graphs = component_graphs(f)?;
    let m = f.n() / 2;
    let sizes = feasible_sizes(f.p(), m);
    let verdicts: Vec<GraphVerdict> = graphs
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let srg = g.srg_check();
            GraphVerdict {
                index: i + 1,
                degree: g.degree(),
                lst: srg.lst(),
                fits_lst: fits(&srg, sizes.lst.n_value, sizes.lst.r[i]),
                fits_nlst: fits(&srg, sizes.nlst.n_value, sizes.nlst.r[i]),
                srg,
            }
        })
        .collect();
    let overall = if verdicts.iter().all(|g| g.fits_lst) {
        Feasibility::Lst
    } else if verdicts.iter().all(|g| g.fits_nlst) {
        Feasibility::Nlst
    } else {
        Feasibility::Neither
    };
    Ok(FeasibilityVerdict { overall, m, graphs: verdicts, lst_profile: sizes.lst, nlst_profile: sizes.nlst })
}

/// For each `x != 0`, the unique `j` with `λ_j(x) = N - r_j`; entry 0 is 0.
pub fn distinguished_index(f: &PAryFunction) -> Result<Vec<u32>> {
    let verdict = feasibility_verdict(f)?;
    let lambdas = component_eigenvalues(f)?;
    distinguished_index_from(&verdict, &lambdas)
}

/// As [`distinguished_index`], from precomputed feasibility and eigenvalue
/// tables (`lambdas[i - 1] = λ_i`).
pub fn distinguished_index_from(verdict: &FeasibilityVerdict, lambdas: &[FourierSpectrum]) -> Result<Vec<u32>> {
    let profile = verdict.profile().ok_or(Error::NotFeasible)?;
    let space = lambdas.first().ok_or(Error::NotFeasible)?.space();
    let p = space.p();
    let n_value = profile.n_value;
    let theta: Vec<CycInt> = profile.r.iter().map(|&r| CycInt::from_int(p, BigInt::from(n_value - r))).collect();
    let tau: Vec<CycInt> = profile.r.iter().map(|&r| CycInt::from_int(p, -r)).collect();
    let mut out = vec![0u32; space.size()];
    for (x, slot) in out.iter_mut().enumerate().skip(1) {
        let mut found: Option<usize> = None;
        for (i, l) in lambdas.iter().enumerate() {
            let v = l.value(x);
            if *v == theta[i] && found.is_none() {
                found = Some(i);
            } else if *v != tau[i] {
                return Err(Error::Inconsistency(format!(
                    "eigenvalue of component {} at point index {x} is neither N - r nor -r",
                    i + 1
                )));
            }
        }
        *slot = found.ok_or_else(|| Error::Inconsistency(format!("no distinguished eigenvalue at point index {x}")))?
            as u32
            + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeModulus;
    use crate::pfunc::parse_poly;

    fn poly(src: &str, p: u32, n: u32) -> PAryFunction {
        parse_poly(src, PrimeModulus::new(p).unwrap(), n).unwrap().evaluate()
    }

    fn srg(nu: u64, k: u64, lambda: u64, mu: u64) -> SrgParams {
        SrgParams { nu, k, lambda, mu }
    }

    fn degrees(f: &PAryFunction) -> Vec<usize> {
        component_graphs(f).unwrap().iter().map(CayleyGraph::degree).collect()
    }

    #[test]
    fn component_graph_examples() {
        assert_eq!(degrees(&poly("-x0^2+x1^2", 3, 2)), vec![2, 2, 4]);
        assert_eq!(degrees(&poly("x0^2+x1^2", 3, 2)), vec![4, 4, 0]);
        assert_eq!(degrees(&poly("0", 3, 2)), vec![0, 0, 8]);
        assert!(component_graphs(&poly("x0", 3, 2)).is_err());
    }

    #[test]
    fn graph_rejects_bad_connection_sets() {
        let s = Space::new(PrimeModulus::new(3).unwrap(), 2).unwrap();
        assert!(CayleyGraph::new(s.clone(), &[0, 1, 2]).is_err());
        assert!(CayleyGraph::new(s.clone(), &[1]).is_err());
        assert!(CayleyGraph::new(s, &[1, 2]).is_ok());
    }

    #[test]
    fn srg_examples() {
        let g = &component_graphs(&poly("-x0^2+x1^2", 3, 2)).unwrap()[0];
        assert_eq!(g.srg_check(), SrgVerdict::Srg(srg(9, 2, 1, 0)));
        let g = &component_graphs(&poly("-x0*x1+x1^2", 5, 2)).unwrap()[4];
        assert_eq!(g.srg_check(), SrgVerdict::Srg(srg(25, 8, 3, 2)));
        let g = &component_graphs(&poly("3*x0^4+2*x0^2+2*x0*x1", 5, 2)).unwrap()[0];
        assert!(matches!(g.srg_check(), SrgVerdict::NotSrg { .. }));
    }

    #[test]
    fn empty_and_complete_graphs() {
        let s = Space::new(PrimeModulus::new(3).unwrap(), 2).unwrap();
        let empty = CayleyGraph::new(s.clone(), &[]).unwrap();
        assert_eq!(empty.srg_check(), SrgVerdict::Empty { nu: 9 });
        let all: Vec<usize> = (1..9).collect();
        let complete = CayleyGraph::new(s, &all).unwrap();
        assert_eq!(complete.srg_check(), SrgVerdict::Complete { nu: 9 });
        let lst = empty.srg_check().lst().unwrap();
        assert!(lst.degenerate_empty);
        assert_eq!(lst.solutions, vec![(3, 0), (-3, 0)]);
    }

    #[test]
    fn spectrum_examples() {
        let g = &component_graphs(&poly("-x0^2+x1^2", 3, 2)).unwrap()[0];
        let report = g.spectrum();
        assert_eq!(report.integer_values().unwrap(), vec![(-1, 6), (2, 3)]);

        let graphs = component_graphs(&poly("3*x0^4+2*x0^2+2*x0*x1", 5, 2)).unwrap();
        let counts: Vec<usize> = graphs.iter().map(|g| g.spectrum().distinct_count()).collect();
        assert_eq!(counts, vec![6, 6, 2, 6, 7]);
    }

    #[test]
    fn classify_lst_examples() {
        let c = classify_lst(&srg(9, 4, 1, 2));
        assert_eq!(c.solutions, vec![(3, 2), (-3, -1)]);
        assert!(c.is_lst && c.is_nlst);
        let c = classify_lst(&srg(9, 2, 1, 0));
        assert_eq!(c.solutions, vec![(3, 1)]);
        assert!(c.is_lst && !c.is_nlst);
        // both signs solve (25,12,5,6): k = 4*3 = (-6)*(-2)
        let c = classify_lst(&srg(25, 12, 5, 6));
        assert_eq!(c.solutions, vec![(5, 3), (-5, -2)]);
        assert!(c.is_lst && c.is_nlst);
        assert!(classify_lst(&srg(10, 3, 0, 1)).solutions.is_empty());
    }

    #[test]
    fn feasibility_examples() {
        assert_eq!(feasibility_verdict(&poly("-x0^2+x1^2", 3, 2)).unwrap().overall, Feasibility::Lst);
        assert_eq!(feasibility_verdict(&poly("x0^2+x1^2", 3, 2)).unwrap().overall, Feasibility::Nlst);
        assert_eq!(feasibility_verdict(&poly("-x0^2+2*x1^2", 5, 2)).unwrap().overall, Feasibility::Neither);
        assert_eq!(feasibility_verdict(&poly("x0^2", 3, 1)), Err(Error::OddDimension(1)));
    }

    #[test]
    fn distinguished_index_examples() {
        let f = poly("-x0^2+x1^2", 3, 2);
        let s = f.space().clone();
        let j = distinguished_index(&f).unwrap();
        assert_eq!(j[s.point_to_index(&[1, 0]).unwrap()], 1);
        assert_eq!(j[s.point_to_index(&[0, 1]).unwrap()], 2);
        assert_eq!(j[s.point_to_index(&[1, 1]).unwrap()], 3);
        assert_eq!(distinguished_index(&poly("-x0^2+2*x1^2", 5, 2)), Err(Error::NotFeasible));
    }

    #[test]
    fn spectral_and_combinatorial_srg_agree() {
        for (src, p) in [
            ("-x0^2+x1^2", 3),
            ("x0^2+x1^2", 3),
            ("3*x0^4+2*x0^2+2*x0*x1", 5),
            ("-x0^2+2*x1^2", 5),
            ("-x0*x1+x1^2", 5),
            ("2*x0*x1^3+x1^4-x1^2", 5),
        ] {
            let graphs = component_graphs(&poly(src, p, 2)).unwrap();
            for a in &graphs {
                for b in &graphs {
                    let g = if a == b { a.clone() } else { a.union(b).unwrap() };
                    let combinatorial = g.srg_check();
                    let spectral = srg_from_spectrum(&g.spectrum(), g.order() as u64, g.degree() as u64);
                    match combinatorial {
                        SrgVerdict::NotSrg { .. } => assert_eq!(spectral, None, "{src}"),
                        v => assert_eq!(spectral, Some(v), "{src}"),
                    }
                }
            }
        }
    }
}
