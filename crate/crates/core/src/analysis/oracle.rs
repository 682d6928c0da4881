//! Exact `f(n, p, q)` for tiny `n` by exhaustive search.
//!
//! Edges of `K_n` are colored in lexicographic order `(0,1), (0,2), …` as a
//! restricted-growth string: each edge takes a used color or the next fresh
//! one, which visits every coloring once up to renaming colors. A branch is
//! cut as soon as some `p`-subset cannot reach `q` colors even if all its
//! remaining edges got fresh colors.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::verifier::{binomial, Colex};

/// Largest `n` the oracle accepts.
pub const ORACLE_MAX_N: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    /// `f(n, p, q)`.
    pub colors: usize,
    /// Color of each edge `(i, j)`, `i < j`, in lexicographic edge order.
    pub witness: Vec<u32>,
}

impl OracleResult {
    /// `(i, j, color)` rows of the witness.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        lex_edges(self.n).into_iter().zip(&self.witness).map(|((i, j), &c)| (i, j, c)).collect()
    }
}

fn lex_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

struct Search {
    k: u32,
    q: usize,
    /// Edge indices of each `p`-subset, ascending.
    subsets: Vec<Vec<usize>>,
    /// Subsets containing each edge.
    touching: Vec<Vec<usize>>,
    colors: Vec<u32>,
    /// Scratch stamps for counting distinct colors.
    stamp: Vec<u32>,
    epoch: u32,
}

impl Search {
    /// Whether every subset through `edge` can still reach `q` colors after
    /// edges `0..=edge` are fixed.
    fn feasible(&mut self, edge: usize) -> bool {
        for &s in &self.touching[edge] {
            self.epoch += 1;
            let mut distinct = 0;
            let mut open = 0;
            for &e in &self.subsets[s] {
                if e > edge {
                    open += 1;
                } else if self.stamp[self.colors[e] as usize] != self.epoch {
                    self.stamp[self.colors[e] as usize] = self.epoch;
                    distinct += 1;
                }
            }
            if distinct + open < self.q {
                return false;
            }
        }
        true
    }

    fn run(&mut self, edge: usize, used: u32) -> bool {
        if edge == self.colors.len() {
            return true;
        }
        for c in 0..(used + 1).min(self.k) {
            self.colors[edge] = c;
            if self.feasible(edge) && self.run(edge + 1, used.max(c + 1)) {
                return true;
            }
        }
        false
    }
}

/// `f(n, p, q)`, the least number of colors for which `K_n` has an edge
/// coloring where every `p` vertices span at least `q` colors, with a witness.
pub fn exact_min_colors(n: usize, p: usize, q: usize) -> Result<OracleResult> {
    let max_q = binomial(p as u64, 2) as usize;
    if q < 2 || q > max_q {
        return Err(Error::Domain(format!("need 2 <= q <= C(p,2) = {max_q}, got p={p}, q={q}")));
    }
    if n > ORACLE_MAX_N {
        return Err(Error::Infeasible {
            needed: format!("n = {n}"),
            budget: ORACLE_MAX_N as u64,
            hint: " (the oracle only searches K_n for n <= 6)".into(),
        });
    }
    let edges = lex_edges(n);
    if n < p {
        return Ok(OracleResult { n, p, q, colors: 1, witness: vec![0; edges.len()] });
    }
    let index = |i: usize, j: usize| edges.iter().position(|&e| e == (i, j)).expect("edge exists");
    let subsets: Vec<Vec<usize>> = Colex::new(n, p)
        .map(|s| {
            let mut es: Vec<usize> = s
                .iter()
                .enumerate()
                .flat_map(|(a, &i)| s[a + 1..].iter().map(move |&j| (i, j)))
                .map(|(i, j)| index(i, j))
                .collect();
            es.sort_unstable();
            es
        })
        .collect();
    let mut touching = vec![Vec::new(); edges.len()];
    for (s, es) in subsets.iter().enumerate() {
        for &e in es {
            touching[e].push(s);
        }
    }
    for k in 1..=edges.len() as u32 {
        let mut search = Search {
            k,
            q,
            subsets: subsets.clone(),
            touching: touching.clone(),
            colors: vec![0; edges.len()],
            stamp: vec![0; k as usize],
            epoch: 0,
        };
        if search.run(0, 0) {
            return Ok(OracleResult { n, p, q, colors: k as usize, witness: search.colors });
        }
    }
    unreachable!("the rainbow coloring always works")
}
