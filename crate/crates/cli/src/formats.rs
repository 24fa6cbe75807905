//! On-disk formats: function tables (JSON), orthogonal arrays (text) and
//! spectrum dumps.

use pbent_core::{CycInt, Error as CoreError, OrthogonalArray, PAryFunction, PrimeModulus, Space};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Errors reading or writing one of the formats.
#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed function table: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {msg}")]
    Text { line: usize, msg: String },
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// `{"p": 3, "n": 2, "values": [...]}` with values in point-index order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionTable {
    pub p: u32,
    pub n: u32,
    pub values: Vec<u32>,
}

impl FunctionTable {
    pub fn from_function(f: &PAryFunction) -> Self {
        FunctionTable { p: f.p().get(), n: f.n(), values: f.values().to_vec() }
    }

    pub fn into_function(self) -> Result<PAryFunction, FormatError> {
        let space = Space::new(PrimeModulus::new(self.p)?, self.n)?;
        Ok(PAryFunction::new(space, self.values)?)
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tables always serialize")
    }
}

/// SHA-256 of the canonical JSON form of the table.
pub fn table_digest(f: &PAryFunction) -> String {
    let digest = Sha256::digest(FunctionTable::from_function(f).to_json().as_bytes());
    format!("{digest:x}")
}

/// Header `p m r`, then one line per row; each symbol is its `m` base-`p`
/// digits (coordinate `c_0` first) and symbols are separated by one space.
pub fn write_oa(oa: &OrthogonalArray) -> String {
    let p = oa.p().get();
    let m = oa.m() as usize;
    let mut out = format!("{} {} {}\n", p, m, oa.row_count());
    let mut digits = vec![0u8; m];
    for row in oa.rows() {
        let symbols: Vec<String> = row
            .iter()
            .map(|&v| {
                let mut v = v;
                for d in digits.iter_mut().rev() {
                    *d = b'0' + (v % p) as u8;
                    v /= p;
                }
                String::from_utf8(digits.clone()).expect("ascii digits")
            })
            .collect();
        out.push_str(&symbols.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_oa(text: &str) -> Result<OrthogonalArray, FormatError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or(FormatError::Text { line: 1, msg: "empty file".into() })?;
    let nums: Vec<u32> = header
        .split_whitespace()
        .map(|t| t.parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| FormatError::Text { line: hl + 1, msg: "header must be three integers \"p m r\"".into() })?;
    let [p, m, r] = nums[..] else {
        return Err(FormatError::Text { line: hl + 1, msg: "header must be three integers \"p m r\"".into() });
    };
    if p > 10 {
        return Err(FormatError::Text { line: hl + 1, msg: format!("p = {p} does not fit single-digit symbols") });
    }
    if m == 0 {
        return Err(FormatError::Text { line: hl + 1, msg: "m must be positive".into() });
    }
    let pm = PrimeModulus::new(p)?;
    let mut rows = Vec::with_capacity(r as usize);
    for (ln, line) in lines {
        let mut row = Vec::new();
        for tok in line.split_whitespace() {
            if tok.len() != m as usize {
                return Err(FormatError::Text {
                    line: ln + 1,
                    msg: format!("symbol \"{tok}\" should have {m} digits"),
                });
            }
            let mut v = 0u32;
            for ch in tok.chars() {
                let d = ch
                    .to_digit(10)
                    .filter(|&d| d < p)
                    .ok_or_else(|| FormatError::Text { line: ln + 1, msg: format!("bad digit '{ch}' in \"{tok}\"") })?;
                v = v * p + d;
            }
            row.push(v);
        }
        rows.push(row);
    }
    if rows.len() != r as usize {
        return Err(FormatError::Text {
            line: hl + 1,
            msg: format!("header announces {r} rows, found {}", rows.len()),
        });
    }
    Ok(OrthogonalArray::new(pm, m, rows)?)
}

/// One line per point index: `index<TAB>c0 c1 ... c_{p-2}`.
pub fn spectrum_dump(values: &[CycInt]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        let coeffs: Vec<String> = v.coeffs().iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("{i}\t{}\n", coeffs.join(" ")));
    }
    out
}
