use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A vector in `[m]^t` with symbols `1..=m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SymbolVector {
    m: u32,
    symbols: Vec<u32>,
}

impl SymbolVector {
    pub fn new(m: u32, symbols: Vec<u32>) -> Result<Self> {
        if m == 0 || symbols.is_empty() {
            return Err(Error::Domain("need m >= 1 and t >= 1".into()));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s == 0 || s > m) {
            return Err(Error::Domain(format!("symbol {s} outside [1, {m}]")));
        }
        Ok(SymbolVector { m, symbols })
    }

    /// Parses a comma list such as `1,2,3`.
    pub fn parse(m: u32, s: &str) -> Result<Self> {
        let symbols = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Domain(format!("bad symbol {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        SymbolVector::new(m, symbols)
    }

    /// All of `[m]^t` in lexicographic order.
    pub fn all(m: u32, t: usize) -> Vec<SymbolVector> {
        let mut out = Vec::new();
        let mut cur = vec![1u32; t];
        loop {
            out.push(SymbolVector { m, symbols: cur.clone() });
            let Some(k) = (0..t).rev().find(|&k| cur[k] < m) else {
                return out;
            };
            cur[k] += 1;
            cur[k + 1..].iter_mut().for_each(|s| *s = 1);
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }
}

impl fmt::Display for SymbolVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for SymbolVector {
    type Err = Error;

    /// Without an explicit `m`, the largest symbol is taken as the alphabet size.
    fn from_str(s: &str) -> Result<Self> {
        let v = SymbolVector::parse(u32::MAX, s)?;
        let m = *v.symbols.iter().max().unwrap();
        SymbolVector::new(m, v.symbols)
    }
}

/// Mubayi's color: the value pair at the first differing coordinate, that
/// coordinate, and the difference pattern.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum MubayiColor {
    Zero,
    Diff { pair: (u32, u32), index: usize, pattern: Vec<bool> },
}

pub fn mubayi_color(v: &SymbolVector, w: &SymbolVector) -> Result<MubayiColor> {
    if v.m != w.m || v.symbols.len() != w.symbols.len() {
        return Err(Error::Domain(format!(
            "vectors live in different spaces: [{}]^{} vs [{}]^{}",
            v.m,
            v.symbols.len(),
            w.m,
            w.symbols.len()
        )));
    }
    let pattern: Vec<bool> = v.symbols.iter().zip(&w.symbols).map(|(a, b)| a != b).collect();
    let Some(k) = pattern.iter().position(|&b| b) else {
        return Ok(MubayiColor::Zero);
    };
    let (x, y) = (v.symbols[k], w.symbols[k]);
    Ok(MubayiColor::Diff { pair: (x.min(y), x.max(y)), index: k + 1, pattern })
}
