//! The analysis pipeline and its report.
//!
//! Verdicts reached by more than one route are compared; a disagreement is
//! returned as [`Error::Inconsistency`] instead of a report.

use std::fmt::Write as _;

use pbent_core::cayley::{feasibility_verdict, srg_from_spectrum, EigenReport, SrgVerdict};
use pbent_core::duality::{classify_regularity, dual_by_distinguished_index};
use pbent_core::pfunc::feasible_sizes;
use pbent_core::scheme::{
    amorphic_check, constants_bent_witness, constants_by_trace_with, imy_predicted, scheme_check, SchemeType,
    SchemeVerdict,
};
use pbent_core::spectral::{
    component_eigenvalues, is_bent_by_derivatives, walsh_from_eigenvalues, walsh_transform, TransformMethod,
};
use pbent_core::{AmorphicMode, Anf, Error, Feasibility, PAryFunction, Regularity, Result};
use serde::Serialize;

use crate::formats::table_digest;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub input: InputEcho,
    pub evenness: Evenness,
    pub level_sets: Option<LevelSetSection>,
    pub walsh: Option<WalshSection>,
    pub graphs: Option<GraphSection>,
    pub feasibility: Option<String>,
    pub scheme: Option<SchemeSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputEcho {
    pub p: u32,
    pub n: u32,
    pub anf: String,
    pub anf_canonical: String,
    pub table_sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evenness {
    /// `f(0)` of the input, before any normalization.
    pub f0: u32,
    pub normalized: bool,
    pub even: bool,
    pub witness: Option<usize>,
    /// Why the bent analysis did not run.
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelSetSection {
    /// `|D_1|, ..., |D_p|`.
    pub sizes: Vec<usize>,
    pub lst_sizes: Option<Vec<i64>>,
    pub nlst_sizes: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalshSection {
    pub w0: String,
    pub bent: bool,
    pub witness: Option<usize>,
    pub bent_by_derivatives: bool,
    pub regularity: String,
    pub dual: Option<String>,
    pub dual_canonical: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphEntry {
    pub index: usize,
    pub degree: usize,
    pub srg: String,
    pub lst_solutions: Vec<(i64, i64)>,
    pub latin: String,
    pub distinct_eigenvalues: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSection {
    pub graphs: Vec<GraphEntry>,
    pub distinct_eigenvalue_counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoBlock {
    pub k: usize,
    /// Row and column labels.
    pub classes: Vec<usize>,
    pub rows: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchemeSection {
    pub is_scheme: bool,
    /// `(i, j, k, z, z2)` with `ρ_ij(z) != ρ_ij(z2)` for `z, z2 ∈ D_k`.
    pub witness: Option<[usize; 5]>,
    pub class_sizes: Vec<usize>,
    pub constants: Vec<RhoBlock>,
    pub bent_by_constants: Option<bool>,
    pub amorphic: bool,
    pub scheme_type: String,
    pub imy: String,
}

fn anf_strings(f: &PAryFunction) -> (String, String) {
    let anf = Anf::interpolate(f);
    (anf.to_signed_string(), anf.to_string())
}

fn srg_text(v: &SrgVerdict) -> String {
    match v {
        SrgVerdict::Srg(p) => format!("SRG {p}"),
        SrgVerdict::Empty { .. } => "empty".into(),
        SrgVerdict::Complete { nu } => format!("complete K_{nu}"),
        SrgVerdict::NotSrg { witness: (a, b) } => format!("not SRG (points {a}, {b})"),
    }
}

fn inconsistent(msg: String) -> Error {
    Error::Inconsistency(msg)
}

/// Runs the full pipeline on `f`. With `normalize`, `f - f(0)` is analysed.
pub fn analyze(f: &PAryFunction, normalize: bool) -> Result<AnalysisReport> {
    let f0 = f.value(0);
    let work = if normalize { f.normalized() } else { f.clone() };
    let (anf, anf_canonical) = anf_strings(f);
    let input = InputEcho { p: f.p().get(), n: f.n(), anf, anf_canonical, table_sha256: table_digest(f) };

    let witness = work.evenness_witness();
    let skipped = if witness.is_some() {
        Some("not even".to_string())
    } else if work.value(0) != 0 {
        Some(format!("f(0) = {} != 0 (use --normalize)", work.value(0)))
    } else {
        None
    };
    let evenness = Evenness { f0, normalized: normalize, even: witness.is_none(), witness, skipped };
    if evenness.skipped.is_some() {
        return Ok(AnalysisReport {
            input,
            evenness,
            level_sets: None,
            walsh: None,
            graphs: None,
            feasibility: None,
            scheme: None,
        });
    }
    let f = &work;
    let p = f.p();
    let pu = p.get() as usize;
    let even_n = f.n() % 2 == 0;

    let ls = f.level_sets()?;
    let profiles = even_n.then(|| feasible_sizes(p, f.n() / 2));
    let level_sets = LevelSetSection {
        sizes: ls.sizes(),
        lst_sizes: profiles.as_ref().map(|s| s.lst.sizes.clone()),
        nlst_sizes: profiles.as_ref().map(|s| s.nlst.sizes.clone()),
    };

    // Walsh spectrum, directly and through the component eigenvalues.
    let spectrum = walsh_transform(f, TransformMethod::Fast);
    let lambdas = component_eigenvalues(f)?;
    if walsh_from_eigenvalues(f)?.values() != spectrum.values() {
        return Err(inconsistent("Walsh spectrum differs from 1 + sum of zeta^i lambda_i".into()));
    }
    let bent_witness = spectrum.bent_witness();
    let bent = bent_witness.is_none();
    let bent_by_derivatives = is_bent_by_derivatives(f).is_bent();
    if bent != bent_by_derivatives {
        return Err(inconsistent(format!("bent by Walsh: {bent}; by derivatives: {bent_by_derivatives}")));
    }

    let feasibility = if even_n { Some(feasibility_verdict(f)?) } else { None };

    let (regularity, dual) = if !bent {
        ("n/a (not bent)".to_string(), None)
    } else if !even_n {
        ("n/a (odd n)".to_string(), None)
    } else {
        let rep = classify_regularity(f)?;
        if let (Some(d), Some(Feasibility::Lst | Feasibility::Nlst)) =
            (&rep.dual, feasibility.as_ref().map(|v| v.overall))
        {
            if dual_by_distinguished_index(f)? != *d {
                return Err(inconsistent("dual from the Walsh spectrum differs from the distinguished index".into()));
            }
        }
        (rep.kind.to_string(), rep.dual)
    };
    let (dual, dual_canonical) = match dual.as_ref().map(anf_strings) {
        Some((s, c)) => (Some(s), Some(c)),
        None => (None, None),
    };
    let walsh = WalshSection {
        w0: spectrum.value(0).to_string(),
        bent,
        witness: bent_witness,
        bent_by_derivatives,
        regularity,
        dual,
        dual_canonical,
    };

    // Component graphs: counting verdicts against spectral ones.
    let graphs = pbent_core::cayley::component_graphs(f)?;
    let nu = f.space().size() as u64;
    let mut entries = Vec::with_capacity(pu);
    for (i, g) in graphs.iter().enumerate() {
        let check = g.srg_check();
        let eig = EigenReport::from_values(lambdas[i].values());
        let k = g.degree() as u64;
        let connected = eig.multiplicity(&pbent_core::CycInt::from_int(p, k)) == 1;
        let agree = match (&check, srg_from_spectrum(&eig, nu, k)) {
            (a, Some(b)) if *a == b => true,
            (SrgVerdict::NotSrg { .. }, None) => true,
            (SrgVerdict::NotSrg { .. }, Some(_)) => !connected,
            _ => false,
        };
        if !agree {
            return Err(inconsistent(format!("graph {}: counting and spectral SRG verdicts differ", i + 1)));
        }
        let lst = check.lst();
        let latin = match &lst {
            Some(c) if c.degenerate_empty => "degenerate",
            Some(c) if c.is_lst && c.is_nlst => "LST+NLST",
            Some(c) if c.is_lst => "LST",
            Some(c) if c.is_nlst => "NLST",
            _ => "-",
        };
        entries.push(GraphEntry {
            index: i + 1,
            degree: g.degree(),
            srg: srg_text(&check),
            lst_solutions: lst.map(|c| c.solutions).unwrap_or_default(),
            latin: latin.into(),
            distinct_eigenvalues: eig.distinct_count(),
        });
    }
    let counts = entries.iter().map(|e| e.distinct_eigenvalues).collect();
    let graphs = GraphSection { graphs: entries, distinct_eigenvalue_counts: counts };

    // Association scheme.
    let verdict = scheme_check(f)?;
    let amorphic = amorphic_check(f, AmorphicMode::Auto)?;
    if amorphic.is_scheme != verdict.is_scheme() {
        return Err(inconsistent("scheme verdicts of the counting and amorphic checks differ".into()));
    }
    let scheme = match &verdict {
        SchemeVerdict::NotScheme(w) => SchemeSection {
            is_scheme: false,
            witness: Some([w.i, w.j, w.k, w.z, w.z2]),
            class_sizes: ls.sets().iter().map(Vec::len).collect(),
            constants: Vec::new(),
            bent_by_constants: None,
            amorphic: false,
            scheme_type: "none".into(),
            imy: "n/a (not a scheme)".into(),
        },
        SchemeVerdict::Scheme(c) => {
            if constants_by_trace_with(f, &lambdas)? != *c {
                return Err(inconsistent("structure constants by counting and by trace differ".into()));
            }
            let bent_c = constants_bent_witness(c, f.n()).is_none();
            if bent_c != bent {
                return Err(inconsistent(format!("bent by Walsh: {bent}; by structure constants: {bent_c}")));
            }
            let active = c.active_classes();
            let constants =
                active.iter().map(|&k| RhoBlock { k, classes: active.clone(), rows: c.matrix(k) }).collect();
            let profile = feasibility.as_ref().and_then(|v| v.profile());
            let imy = match profile {
                Some(prof) if amorphic.is_amorphic => {
                    if imy_predicted(p, prof.n_value, &prof.r)? != *c {
                        return Err(inconsistent("amorphic constants differ from the predicted ones".into()));
                    }
                    "match".to_string()
                }
                _ if !amorphic.is_amorphic => "n/a (not amorphic)".to_string(),
                _ => "n/a (not feasible)".to_string(),
            };
            SchemeSection {
                is_scheme: true,
                witness: None,
                class_sizes: c.class_sizes().to_vec(),
                constants,
                bent_by_constants: Some(bent_c),
                amorphic: amorphic.is_amorphic,
                scheme_type: match amorphic.kind {
                    SchemeType::Lst => "LST",
                    SchemeType::Nlst => "NLST",
                    SchemeType::None => "none",
                }
                .into(),
                imy,
            }
        }
    };

    Ok(AnalysisReport {
        input,
        evenness,
        level_sets: Some(level_sets),
        walsh: Some(walsh),
        graphs: Some(graphs),
        feasibility: Some(match &feasibility {
            Some(v) => v.overall.to_string(),
            None => "n/a (odd n)".into(),
        }),
        scheme: Some(scheme),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize") + "\n"
    }

    pub fn is_bent(&self) -> Option<bool> {
        self.walsh.as_ref().map(|w| w.bent)
    }

    pub fn regularity(&self) -> Option<Regularity> {
        match self.walsh.as_ref()?.regularity.as_str() {
            "regular" => Some(Regularity::Regular),
            "(-1)-weakly regular" => Some(Regularity::WeaklyRegular),
            "not weakly regular" => Some(Regularity::NotWeaklyRegular),
            _ => None,
        }
    }

    /// Plain-text rendering with fixed section headers.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let i = &self.input;
        let _ = writeln!(s, "== input ==");
        let _ = writeln!(s, "p: {}", i.p);
        let _ = writeln!(s, "n: {}", i.n);
        let _ = writeln!(s, "anf: {}", i.anf);
        let _ = writeln!(s, "anf (canonical): {}", i.anf_canonical);
        let _ = writeln!(s, "table sha256: {}", i.table_sha256);

        let e = &self.evenness;
        let _ = writeln!(s, "\n== evenness ==");
        let _ = writeln!(s, "f(0): {}", e.f0);
        let _ = writeln!(s, "normalized: {}", yes_no(e.normalized));
        match e.witness {
            None => {
                let _ = writeln!(s, "even: yes");
            }
            Some(w) => {
                let _ = writeln!(s, "even: no (not even: f({w}) != f(-{w}))");
            }
        }
        if let Some(why) = &e.skipped {
            let _ = writeln!(s, "bent analysis: skipped ({why})");
            return s;
        }

        if let Some(l) = &self.level_sets {
            let _ = writeln!(s, "\n== level sets ==");
            let _ = writeln!(s, "sizes |D_1|..|D_p|: {}", join(&l.sizes));
            if let Some(v) = &l.lst_sizes {
                let _ = writeln!(s, "feasible-LST sizes: {}", join(v));
            }
            if let Some(v) = &l.nlst_sizes {
                let _ = writeln!(s, "feasible-NLST sizes: {}", join(v));
            }
        }

        if let Some(w) = &self.walsh {
            let _ = writeln!(s, "\n== walsh ==");
            let _ = writeln!(s, "W_f(0): {}", w.w0);
            match w.witness {
                None => {
                    let _ = writeln!(s, "bent: yes");
                }
                Some(x) => {
                    let _ = writeln!(s, "bent: no (|W_f| differs at point {x})");
                }
            }
            let _ = writeln!(s, "bent by derivatives: {}", yes_no(w.bent_by_derivatives));
            let _ = writeln!(s, "regularity: {}", w.regularity);
            if let (Some(d), Some(c)) = (&w.dual, &w.dual_canonical) {
                let _ = writeln!(s, "dual: {d}");
                let _ = writeln!(s, "dual (canonical): {c}");
            }
        }

        if let Some(g) = &self.graphs {
            let _ = writeln!(s, "\n== graphs ==");
            for e in &g.graphs {
                let sols: Vec<String> = e.lst_solutions.iter().map(|(n, r)| format!("(N={n}, r={r})")).collect();
                let _ = writeln!(
                    s,
                    "G{}: degree {}; {}; latin {}{}; distinct eigenvalues {}",
                    e.index,
                    e.degree,
                    e.srg,
                    e.latin,
                    if sols.is_empty() { String::new() } else { format!(" {}", sols.join(" ")) },
                    e.distinct_eigenvalues
                );
            }
            let _ = writeln!(s, "distinct eigenvalue counts: {}", join(&g.distinct_eigenvalue_counts));
        }

        if let Some(fz) = &self.feasibility {
            let _ = writeln!(s, "\n== feasibility ==");
            let _ = writeln!(s, "verdict: {fz}");
        }

        if let Some(c) = &self.scheme {
            let _ = writeln!(s, "\n== scheme ==");
            match c.witness {
                None => {
                    let _ = writeln!(s, "association scheme: yes");
                }
                Some([i, j, k, z, z2]) => {
                    let _ =
                        writeln!(s, "association scheme: no (rho_{i}{j} differs at points {z} and {z2} of class {k})");
                }
            }
            let _ = writeln!(s, "class sizes |D_0|..|D_p|: {}", join(&c.class_sizes));
            for b in &c.constants {
                let _ = writeln!(s, "rho^{} (rows i, columns j over classes {}):", b.k, join(&b.classes));
                for row in &b.rows {
                    let _ = writeln!(s, "  {}", join(row));
                }
            }
            if let Some(b) = c.bent_by_constants {
                let _ = writeln!(s, "bent by structure constants: {}", yes_no(b));
            }
            let _ = writeln!(s, "amorphic: {}", yes_no(c.amorphic));
            let _ = writeln!(s, "scheme type: {}", c.scheme_type);
            let _ = writeln!(s, "IMY constants: {}", c.imy);
        }
        s
    }
}
