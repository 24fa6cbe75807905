//! Orthogonal arrays over `GF(p^m)`, the Bush construction, and bent
//! functions built from row partitions.
//!
//! Column `a * N + b` of a Bush array belongs to the pair `(a, b)`, which is
//! also the point `(coords(a), coords(b))` of `GF(p)^{2m}` under the crate's
//! big-endian indexing. Columns and points are therefore interchangeable.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cayley::{CayleyGraph, SrgParams, SrgVerdict};
use crate::error::{Error, Result};
use crate::ff::{ExtField, PrimeModulus, Space};
use crate::pfunc::PAryFunction;

/// An `r x N^2` array over `GF(p^m)`, `N = p^m`. Symbols are field element
/// indices in `[0, N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrthogonalArray {
    p: PrimeModulus,
    m: u32,
    rows: Vec<Vec<u32>>,
}

/// Two rows whose column pairs repeat: columns `c1` and `c2` both show
/// `pair`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OaWitness {
    pub rows: (usize, usize),
    pub columns: (usize, usize),
    pub pair: (u32, u32),
}

impl OrthogonalArray {
    /// Checks the shape only; see [`validate`](Self::validate) for
    /// orthogonality.
    pub fn new(p: PrimeModulus, m: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        let n_sym = (p.get() as u64)
            .checked_pow(m)
            .filter(|&v| v <= 1 << 13)
            .ok_or(Error::SpaceTooLarge { p: p.get(), n: 2 * m })?;
        let cols = (n_sym * n_sym) as usize;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidArray(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            if let Some(c) = row.iter().position(|&v| v as u64 >= n_sym) {
                return Err(Error::InvalidArray(format!("row {i}, column {c}: symbol {} out of range", row[c])));
            }
        }
        Ok(OrthogonalArray { p, m, rows })
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `N = p^m`.
    pub fn symbols(&self) -> u32 {
        self.p.get().pow(self.m)
    }

    pub fn columns(&self) -> usize {
        let n = self.symbols() as usize;
        n * n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// The column space `GF(p)^{2m}`.
    pub fn space(&self) -> Result<Space> {
        Space::new(self.p, 2 * self.m)
    }

    pub fn is_normalized(&self) -> bool {
        self.rows.iter().all(|r| r[0] == 0)
    }

    /// Every pair of distinct rows shows each ordered symbol pair exactly
    /// once. Returns the first collision otherwise.
    pub fn validate(&self) -> core::result::Result<(), OaWitness> {
        let n = self.symbols() as usize;
        let mut seen = vec![usize::MAX; n * n];
        for a in 0..self.rows.len() {
            for b in a + 1..self.rows.len() {
                seen.iter_mut().for_each(|s| *s = usize::MAX);
                for c in 0..self.columns() {
                    let (u, v) = (self.rows[a][c], self.rows[b][c]);
                    let slot = &mut seen[u as usize * n + v as usize];
                    if *slot != usize::MAX {
                        return Err(OaWitness { rows: (a, b), columns: (*slot, c), pair: (u, v) });
                    }
                    *slot = c;
                }
            }
        }
        Ok(())
    }
}

/// Bush's `OA(N + 1, N)`: row `a`, then rows `a c + b` for `c` in
/// enumeration order, columns `(a, b)` in lexicographic order.
pub fn bush_construct(p: PrimeModulus, m: u32) -> Result<OrthogonalArray> {
    let field = ExtField::new(p, m)?;
    let n = field.order();
    let cols = (n as usize) * (n as usize);
    let mut rows = Vec::with_capacity(n as usize + 1);
    rows.push((0..cols).map(|col| col as u32 / n).collect());
    for c in field.elements() {
        let row = (0..cols)
            .map(|col| {
                let (a, b) = (col as u32 / n, col as u32 % n);
                field.add(field.mul(a, c), b)
            })
            .collect();
        rows.push(row);
    }
    OrthogonalArray::new(p, m, rows)
}

/// Connection set of the graph on columns where two columns are adjacent
/// iff they agree in some row of `rows`. Requires every selected row to be
/// additive in the column point, which makes the graph a Cayley graph.
fn connection_set(oa: &OrthogonalArray, rows: &[usize]) -> Result<Vec<usize>> {
    let space = oa.space()?;
    let digits = Space::new(oa.p, oa.m)?;
    let add = |a: u32, b: u32| digits.add(a as usize, b as usize) as u32;
    for &r in rows {
        if r >= oa.row_count() {
            return Err(Error::InvalidPartition(format!("row {r} out of range (array has {} rows)", oa.row_count())));
        }
        let row = &oa.rows[r];
        // additive iff row(x + y) = row(x) + row(y); check x against every
        // coordinate unit vector, which generates the group
        let mut unit = 1usize;
        for _ in 0..space.n() {
            for x in 0..space.size() {
                if row[space.add(x, unit)] != add(row[x], row[unit]) {
                    return Err(Error::InvalidArray(format!(
                        "row {r} is not additive in the column point, so its graph is not a Cayley graph"
                    )));
                }
            }
            unit *= oa.p.get() as usize;
        }
    }
    Ok((1..space.size()).filter(|&w| rows.iter().any(|&r| oa.rows[r][w] == 0)).collect())
}

/// The graph of a row subset, with its strong regularity verdict.
pub fn lst_graph_from_oa(oa: &OrthogonalArray, rows: &[usize]) -> Result<(CayleyGraph, SrgVerdict)> {
    if rows.is_empty() {
        return Err(Error::InvalidPartition("empty row subset".into()));
    }
    let d = connection_set(oa, rows)?;
    let g = CayleyGraph::new(oa.space()?, &d)?;
    let v = g.srg_check();
    Ok((g, v))
}

/// What the Latin square lemma predicts for `q` rows of an `OA(·, N)`:
/// `(N², (N-1)q, N+q²-3q, q²-q)`, or `K_{N²}` when `q = N + 1`.
pub fn lemma_verdict(n_sym: u64, q: u64) -> SrgVerdict {
    let nu = n_sym * n_sym;
    if q == n_sym + 1 {
        return SrgVerdict::Complete { nu };
    }
    let (n, q) = (n_sym as i64, q as i64);
    SrgVerdict::Srg(SrgParams {
        nu,
        k: ((n - 1) * q) as u64,
        lambda: (n + q * q - 3 * q) as u64,
        mu: (q * q - q) as u64,
    })
}

/// Disjoint groups of rows covering the array, each assigned a distinct
/// value of `GF(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowPartition {
    groups: Vec<Vec<usize>>,
    values: Vec<u32>,
}

impl RowPartition {
    pub fn new(groups: Vec<Vec<usize>>, values: Vec<u32>, row_count: usize, p: PrimeModulus) -> Result<Self> {
        if groups.len() != values.len() {
            return Err(Error::InvalidPartition(format!("{} groups but {} values", groups.len(), values.len())));
        }
        if groups.len() > p.get() as usize {
            return Err(Error::InvalidPartition(format!("{} groups exceed p = {p}", groups.len())));
        }
        let mut owner = vec![None; row_count];
        for (g, rows) in groups.iter().enumerate() {
            if rows.is_empty() {
                return Err(Error::InvalidPartition(format!("group {g} is empty")));
            }
            for &r in rows {
                let slot = owner.get_mut(r).ok_or_else(|| {
                    Error::InvalidPartition(format!("row {r} out of range (array has {row_count} rows)"))
                })?;
                if slot.is_some() {
                    return Err(Error::InvalidPartition(format!("row {r} appears twice")));
                }
                *slot = Some(g);
            }
        }
        if let Some(r) = owner.iter().position(Option::is_none) {
            return Err(Error::InvalidPartition(format!("row {r} is not in any group")));
        }
        for (a, &v) in values.iter().enumerate() {
            if v >= p.get() {
                return Err(Error::InvalidPartition(format!("value {v} not below p = {p}")));
            }
            if values[..a].contains(&v) {
                return Err(Error::InvalidPartition(format!("value {v} assigned twice")));
            }
        }
        Ok(RowPartition { groups, values })
    }

    /// Contiguous groups of `N/p, ..., N/p, N/p + 1` rows valued
    /// `1, ..., p-1, 0`. Needs the full `N + 1` rows.
    pub fn default_for(oa: &OrthogonalArray) -> Result<Self> {
        let p = oa.p.get() as usize;
        let n = oa.symbols() as usize;
        if oa.row_count() != n + 1 {
            return Err(Error::InvalidPartition(format!(
                "default partition needs {} rows, array has {}",
                n + 1,
                oa.row_count()
            )));
        }
        let q = n / p;
        let mut groups = Vec::with_capacity(p);
        let mut next = 0;
        for g in 0..p {
            let len = if g + 1 == p { q + 1 } else { q };
            groups.push((next..next + len).collect());
            next += len;
        }
        let values = (1..p as u32).chain(core::iter::once(0)).collect();
        RowPartition::new(groups, values, oa.row_count(), oa.p)
    }

    /// Parses `"0|1|2,3:0"`: groups separated by `|`, rows by `,`, and an
    /// optional `:v` value. Groups without a value take the unused values
    /// in the order `1, ..., p-1, 0`.
    pub fn parse(spec: &str, row_count: usize, p: PrimeModulus) -> Result<Self> {
        let mut groups = Vec::new();
        let mut explicit = Vec::new();
        for part in spec.split('|') {
            let (rows, value) = match part.split_once(':') {
                Some((rows, v)) => {
                    let v = v.trim().parse::<u32>().map_err(|_| bad_spec(spec, "value is not a number"))?;
                    (rows, Some(v))
                }
                None => (part, None),
            };
            let rows = rows
                .split(',')
                .map(|r| r.trim().parse::<usize>().map_err(|_| bad_spec(spec, "row is not a number")))
                .collect::<Result<Vec<_>>>()?;
            groups.push(rows);
            explicit.push(value);
        }
        let mut free = (1..p.get()).chain(core::iter::once(0)).filter(|v| !explicit.contains(&Some(*v)));
        let mut values = Vec::with_capacity(groups.len());
        for v in &explicit {
            match *v {
                Some(v) => values.push(v),
                None => values.push(free.next().ok_or_else(|| bad_spec(spec, "too many groups"))?),
            }
        }
        RowPartition::new(groups, values, row_count, p)
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

fn bad_spec(spec: &str, why: &str) -> Error {
    Error::InvalidPartition(format!("{why} in \"{spec}\""))
}

impl core::fmt::Display for RowPartition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let parts: Vec<String> = self
            .groups
            .iter()
            .zip(&self.values)
            .map(|(g, v)| {
                let rows: Vec<String> = g.iter().map(|r| format!("{r}")).collect();
                format!("{}:{v}", rows.join(","))
            })
            .collect();
        f.write_str(&parts.join("|"))
    }
}

/// `f(x) = v` when column `x != 0` has a zero entry in some row of the
/// group valued `v`; all other points map to 0.
pub fn bent_from_oa(oa: &OrthogonalArray, part: &RowPartition) -> Result<PAryFunction> {
    if !oa.is_normalized() {
        return Err(Error::InvalidArray("first column is not all zero".into()));
    }
    let space = oa.space()?;
    let mut values = vec![0u32; space.size()];
    let mut owner: Vec<Option<usize>> = vec![None; space.size()];
    for (g, rows) in part.groups().iter().enumerate() {
        for x in 1..space.size() {
            if rows.iter().any(|&r| oa.rows[r][x] == 0) {
                if let Some(prev) = owner[x] {
                    return Err(Error::InvalidPartition(format!("groups {prev} and {g} both claim column {x}")));
                }
                owner[x] = Some(g);
                values[x] = part.values()[g];
            }
        }
    }
    PAryFunction::new(space, values)
}
