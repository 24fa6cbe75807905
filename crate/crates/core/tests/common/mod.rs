#![allow(dead_code)]

use pbent_core::construct::{bent_from_oa, bush_construct};
use pbent_core::pfunc::parse_poly;
use pbent_core::{PAryFunction, PrimeModulus, RowPartition};

pub fn pm(p: u32) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

pub fn poly(src: &str, p: u32, n: u32) -> PAryFunction {
    parse_poly(src, pm(p), n).unwrap().evaluate()
}

/// Even bent functions of feasible (negative) Latin square type.
pub fn feasible_catalog() -> Vec<(String, PAryFunction)> {
    let mut out: Vec<(String, PAryFunction)> = [
        ("-x0^2+x1^2", 3, 2),
        ("x0^2+x1^2", 3, 2),
        ("x0^3*x1+2*x1^4", 5, 2),
        ("-x0*x1^3+x1^4", 5, 2),
        ("-x0^3*x1+x1^4", 5, 2),
        ("2*x0*x3+x1*x2+x0^2*x1*x2+2*x0*x1^2*x3", 3, 4),
        ("-x0^2-x1^2+x2*x3", 3, 4),
        ("x0^2+x1^2+x0*x2+2*x2*x3", 3, 4),
    ]
    .into_iter()
    .map(|(s, p, n)| (format!("{s} over GF({p})^{n}"), poly(s, p, n)))
    .collect();
    for (p, m) in [(3u32, 1u32), (3, 2), (5, 1), (7, 1)] {
        out.push((format!("Bush({p},{m}) default partition"), bush_bent(p, m)));
    }
    out
}

/// Even bent functions that are not of feasible type.
pub fn other_bent() -> Vec<(String, PAryFunction)> {
    [("3*x0^4+2*x0^2+2*x0*x1", 5, 2), ("-x0^2+2*x1^2", 5, 2), ("-x0*x1+x1^2", 5, 2), ("2*x0*x1^3+x1^4-x1^2", 5, 2)]
        .into_iter()
        .map(|(s, p, n)| (format!("{s} over GF({p})^{n}"), poly(s, p, n)))
        .collect()
}

pub fn bush_bent(p: u32, m: u32) -> PAryFunction {
    let oa = bush_construct(pm(p), m).unwrap();
    bent_from_oa(&oa, &RowPartition::default_for(&oa).unwrap()).unwrap()
}
