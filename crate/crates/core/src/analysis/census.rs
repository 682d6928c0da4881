//! Color censuses and the grid counterexample for Mubayi's coloring.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::colorings::{encode, mubayi_color, SymbolVector};
use crate::error::{Error, Result};
use crate::table::{block_encoding, ColorTable, Coloring, Universe};
use crate::vectors::BitVector;
use crate::verifier::{verify_pq, VerifyOptions, SAMPLE_BLOCK};

/// Refuse exact censuses needing more than this many `pairs · α` steps.
pub const CENSUS_GUARD: u64 = 1 << 30;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub coloring: String,
    pub universe: String,
    pub vertices: u64,
    /// Pairs examined: all of them when exact, else the sample count.
    pub pairs: u64,
    pub colors: u64,
    pub exact: bool,
}

enum Points {
    Binary(Vec<BitVector>),
    Symbols(Vec<SymbolVector>),
}

impl Points {
    fn len(&self) -> usize {
        match self {
            Points::Binary(v) => v.len(),
            Points::Symbols(v) => v.len(),
        }
    }
}

fn dimension(universe: &Universe) -> u64 {
    match universe {
        Universe::AllBinary(alpha) => *alpha as u64,
        Universe::Binary(vs) => vs.first().map_or(1, |v| v.len() as u64),
        Universe::AllSymbols { t, .. } => *t as u64,
        Universe::Symbols(vs) => vs.first().map_or(1, |v| v.symbols().len() as u64),
    }
}

/// Estimated work of an exact census, `pairs · dimension`, saturating.
pub fn census_cost(universe: &Universe) -> u128 {
    let n = universe.size().map_or(u128::MAX, u128::from);
    (n.saturating_mul(n.saturating_sub(1)) / 2).saturating_mul(dimension(universe) as u128)
}

fn materialize(coloring: &Coloring, universe: &Universe) -> Result<Points> {
    match (coloring, universe) {
        (Coloring::Block { .. }, Universe::AllBinary(alpha)) => Ok(Points::Binary(BitVector::all(*alpha).collect())),
        (Coloring::Block { .. }, Universe::Binary(vs)) => {
            if let Some(w) = vs.iter().find(|w| w.len() != vs[0].len()) {
                return Err(Error::LengthMismatch { left: vs[0].len(), right: w.len() });
            }
            Ok(Points::Binary(vs.clone()))
        }
        (Coloring::Mubayi, Universe::AllSymbols { m, t }) => Ok(Points::Symbols(SymbolVector::all(*m, *t))),
        (Coloring::Mubayi, Universe::Symbols(vs)) => {
            for w in vs {
                mubayi_color(&vs[0], w)?;
            }
            Ok(Points::Symbols(vs.clone()))
        }
        _ => Err(Error::Domain(format!("coloring {coloring} cannot act on {universe}"))),
    }
}

fn encoder<'a>(coloring: &'a Coloring, points: &'a Points) -> impl Fn(usize, usize) -> String + Sync + 'a {
    move |i, j| match (coloring, points) {
        (Coloring::Block { chain, variant }, Points::Binary(vs)) => {
            block_encoding(chain, *variant, vs[i].bits(), vs[j].bits())
        }
        (_, Points::Symbols(vs)) => encode(&mubayi_color(&vs[i], &vs[j]).expect("validated")),
        _ => unreachable!("materialize pairs colorings with universes"),
    }
}

/// Exact number of distinct colors over all pairs of distinct vertices.
pub fn count_colors(coloring: &Coloring, universe: &Universe) -> Result<Census> {
    let cost = census_cost(universe);
    if cost > CENSUS_GUARD as u128 {
        return Err(Error::Infeasible {
            needed: cost.to_string(),
            budget: CENSUS_GUARD,
            hint: " (use a sampled census for a lower bound)".into(),
        });
    }
    let points = materialize(coloring, universe)?;
    let n = points.len();
    let enc = encoder(coloring, &points);
    let colors = (1..n)
        .into_par_iter()
        .fold(HashSet::new, |mut seen, j| {
            seen.extend((0..j).map(|i| enc(i, j)));
            seen
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        })
        .len();
    Ok(Census {
        coloring: coloring.to_string(),
        universe: universe.to_string(),
        vertices: n as u64,
        pairs: (n * n.saturating_sub(1) / 2) as u64,
        colors: colors as u64,
        exact: true,
    })
}

fn random_pair_codes(
    coloring: &Coloring,
    universe: &Universe,
    points: Option<&Points>,
    rng: &mut ChaCha8Rng,
    count: u64,
) -> Result<Vec<String>> {
    let mut out = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let code = match (coloring, universe) {
            (Coloring::Block { chain, variant }, Universe::AllBinary(alpha)) => {
                let v: Vec<bool> = (0..*alpha).map(|_| rng.gen()).collect();
                let mut w: Vec<bool> = (0..*alpha).map(|_| rng.gen()).collect();
                while w == v {
                    w = (0..*alpha).map(|_| rng.gen()).collect();
                }
                block_encoding(chain, *variant, &v, &w)
            }
            (Coloring::Mubayi, Universe::AllSymbols { m, t }) => {
                let draw = |rng: &mut ChaCha8Rng| (0..*t).map(|_| rng.gen_range(1..=*m)).collect::<Vec<u32>>();
                let v = draw(rng);
                let mut w = draw(rng);
                while w == v {
                    w = draw(rng);
                }
                encode(&mubayi_color(&SymbolVector::new(*m, v)?, &SymbolVector::new(*m, w)?)?)
            }
            _ => {
                let points = points.expect("explicit universes are materialized");
                let pair = rand::seq::index::sample(rng, points.len(), 2);
                let (i, j) = (pair.index(0), pair.index(1));
                encoder(coloring, points)(i.min(j), i.max(j))
            }
        };
        out.push(code);
    }
    Ok(out)
}

/// Lower bound on the color count from `samples` uniform random pairs.
///
/// Block `b` of [`SAMPLE_BLOCK`] draws uses `ChaCha8Rng::seed_from_u64(seed)`
/// on stream `b`, so the result does not depend on the worker count.
pub fn sample_colors(coloring: &Coloring, universe: &Universe, seed: u64, samples: u64) -> Result<Census> {
    let vertices = universe.size().unwrap_or(u64::MAX);
    if vertices < 2 {
        return Err(Error::Domain(format!("{universe} has fewer than two vertices")));
    }
    let points = match (coloring, universe) {
        (Coloring::Block { .. }, Universe::AllBinary(_)) | (Coloring::Mubayi, Universe::AllSymbols { .. }) => None,
        _ => Some(materialize(coloring, universe)?),
    };
    let blocks = samples.div_ceil(SAMPLE_BLOCK);
    let codes: Vec<Vec<String>> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let count = SAMPLE_BLOCK.min(samples - b * SAMPLE_BLOCK);
            random_pair_codes(coloring, universe, points.as_ref(), &mut rng, count)
        })
        .collect::<Result<_>>()?;
    let colors = codes.iter().flatten().collect::<HashSet<_>>().len();
    Ok(Census {
        coloring: coloring.to_string(),
        universe: universe.to_string(),
        vertices,
        pairs: samples,
        colors: colors as u64,
        exact: false,
    })
}

/// Mubayi's coloring on a full grid `[m]^t` and the clique statement it breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridCounterexample {
    pub m: u32,
    pub t: usize,
    pub vertices: u64,
    pub colors: u64,
    /// `(p, q)` such that the coloring is not a `(p, q)`-coloring, when the
    /// census yields one.
    pub violated: Option<(u64, u64)>,
    /// A `p`-subset spanning fewer than `q` colors, as vertex indices.
    pub witness: Option<Vec<usize>>,
    pub statement: String,
}

fn grid_report(m: u32, t: usize, violated: impl Fn(u64, u64) -> Option<(u64, u64)>) -> Result<GridCounterexample> {
    let census = count_colors(&Coloring::Mubayi, &Universe::AllSymbols { m, t })?;
    let (n, k) = (census.vertices, census.colors);
    let violated = violated(n, k);
    let witness = match violated {
        Some((p, q)) => {
            let table = ColorTable::mubayi_full(m, t)?;
            let report = verify_pq(&table, p as usize, q as usize, &VerifyOptions::exhaustive())?;
            report.violations.first().map(|v| v.subset.clone())
        }
        None => None,
    };
    let statement = match violated {
        Some((p, q)) => format!("[{m}]^{t}: {n} vertices, {k} colors; fails to be a ({p},{q})-coloring"),
        None => format!("[{m}]^{t}: {n} vertices, {k} colors"),
    };
    Ok(GridCounterexample { m, t, vertices: n, colors: k, violated, witness, statement })
}

/// The grid `{1, …, 2^s}^s` under Mubayi's coloring, for `1 ≤ s ≤ 3`.
///
/// With `N = 2^{s²}` vertices and `k` colors, the whole grid is an
/// `N`-subset spanning `k` colors, so the coloring is not an `(N, k+1)`-coloring
/// whenever `k + 1 ≤ C(N, 2)`.
pub fn grid_counterexample(s: u32) -> Result<GridCounterexample> {
    if !(1..=3).contains(&s) {
        return Err(Error::Domain(format!("grid needs 1 <= s <= 3, got {s}")));
    }
    grid_report(1 << s, s as usize, |n, k| (k < n * (n - 1) / 2).then_some((n, k + 1)))
}

/// `[3]^3` under Mubayi's coloring: any 26 of the 27 vertices span at most
/// `k < 25` colors, so it is not a `(26, 25)`-coloring.
pub fn three_cube_counterexample() -> Result<GridCounterexample> {
    grid_report(3, 3, |n, k| (k + 2 < n).then_some((n - 1, n - 2)))
}
