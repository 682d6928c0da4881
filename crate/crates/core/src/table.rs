//! Edge-color tables: a finite vertex set together with the interned
//! canonical color of every unordered pair.
//!
//! Colors are interned by their canonical encoding, in colex pair order, so
//! ids are deterministic.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::colorings::{encode, mubayi_color, product_slices, EtaValue, HValue, SymbolVector};
use crate::error::{Error, Result};
use crate::vectors::{BitVector, ResolutionChain};

/// Which per-block function the product coloring is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockVariant {
    Eta,
    H,
}

/// A coloring the verifier can tabulate: a block coloring of binary vectors
/// or Mubayi's coloring of symbol vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coloring {
    Block { chain: ResolutionChain, variant: BlockVariant },
    Mubayi,
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coloring::Block { chain, variant: BlockVariant::Eta } => write!(f, "c_{} chain={chain}", chain.p()),
            Coloring::Block { chain, variant: BlockVariant::H } => {
                write!(f, "c_{} (h variant) chain={chain}", chain.p())
            }
            Coloring::Mubayi => f.write_str("mubayi"),
        }
    }
}

/// A finite vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Universe {
    /// All of `{0,1}^α` in lexicographic order.
    AllBinary(usize),
    Binary(Vec<BitVector>),
    /// All of `[m]^t` in lexicographic order.
    AllSymbols {
        m: u32,
        t: usize,
    },
    Symbols(Vec<SymbolVector>),
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Universe::AllBinary(alpha) => write!(f, "{{0,1}}^{alpha}"),
            Universe::Binary(vs) => write!(f, "{} binary vectors", vs.len()),
            Universe::AllSymbols { m, t } => write!(f, "[{m}]^{t}"),
            Universe::Symbols(vs) => write!(f, "{} symbol vectors", vs.len()),
        }
    }
}

impl Universe {
    /// Number of vertices, if it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        match self {
            Universe::AllBinary(alpha) => 1u64.checked_shl(*alpha as u32),
            Universe::Binary(vs) => Some(vs.len() as u64),
            Universe::AllSymbols { m, t } => (*m as u64).checked_pow(*t as u32),
            Universe::Symbols(vs) => Some(vs.len() as u64),
        }
    }
}

/// Encodes the block coloring of one pair.
pub fn block_encoding(chain: &ResolutionChain, variant: BlockVariant, v: &[bool], w: &[bool]) -> String {
    match variant {
        BlockVariant::Eta => encode(&product_slices::<EtaValue>(chain.p(), chain, v, w)),
        BlockVariant::H => encode(&product_slices::<HValue>(chain.p(), chain, v, w)),
    }
}

/// Position of the unordered pair `{i, j}` (`i < j`) in colex order.
#[inline]
pub fn pair_rank(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Vertices plus interned pair colors.
#[derive(Clone, Debug)]
pub struct ColorTable {
    labels: Vec<String>,
    ids: Vec<u32>,
    palette: Vec<String>,
}

/// Refuse tables with more pairs than this.
pub const MAX_TABLE_PAIRS: u64 = 1 << 28;

fn check_pairs(n: usize) -> Result<()> {
    let pairs = (n as u64) * (n as u64).saturating_sub(1) / 2;
    if pairs > MAX_TABLE_PAIRS {
        return Err(Error::Infeasible {
            needed: pairs.to_string(),
            budget: MAX_TABLE_PAIRS,
            hint: " (pair table too large; use sampled mode on a smaller universe)".into(),
        });
    }
    Ok(())
}

impl ColorTable {
    /// Tabulates `encoder(i, j)` for every `i < j < labels.len()`.
    pub fn from_encoder<F>(labels: Vec<String>, encoder: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> String + Sync,
    {
        let n = labels.len();
        check_pairs(n)?;
        let mut ids = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        let mut index: HashMap<String, u32> = HashMap::new();
        let mut palette = Vec::new();
        // rows in chunks keep memory bounded while still fanning out
        let rows: Vec<usize> = (1..n).collect();
        for chunk in rows.chunks(256) {
            let encoded: Vec<Vec<String>> =
                chunk.par_iter().map(|&j| (0..j).map(|i| encoder(i, j)).collect()).collect();
            for row in encoded {
                for code in row {
                    let next = palette.len() as u32;
                    let id = *index.entry(code).or_insert_with_key(|k| {
                        palette.push(k.clone());
                        next
                    });
                    ids.push(id);
                }
            }
        }
        Ok(ColorTable { labels, ids, palette })
    }

    /// Block coloring on an explicit vertex list (all of equal length).
    pub fn block(vertices: &[BitVector], chain: &ResolutionChain, variant: BlockVariant) -> Result<Self> {
        if let Some(w) = vertices.iter().find(|w| w.len() != vertices[0].len()) {
            return Err(Error::LengthMismatch { left: vertices[0].len(), right: w.len() });
        }
        let labels = vertices.iter().map(|v| v.to_string()).collect();
        ColorTable::from_encoder(labels, |i, j| block_encoding(chain, variant, vertices[i].bits(), vertices[j].bits()))
    }

    /// Block coloring on all of `{0,1}^alpha`, in lexicographic vertex order.
    pub fn block_full(alpha: usize, chain: &ResolutionChain, variant: BlockVariant) -> Result<Self> {
        if alpha == 0 || alpha > 28 {
            return Err(Error::Domain(format!("full universe needs 1 <= alpha <= 28, got {alpha}")));
        }
        check_pairs(1usize << alpha)?;
        let vertices: Vec<BitVector> = BitVector::all(alpha).collect();
        ColorTable::block(&vertices, chain, variant)
    }

    /// Mubayi's coloring on an explicit list of symbol vectors.
    pub fn mubayi(vertices: &[SymbolVector]) -> Result<Self> {
        for w in vertices {
            mubayi_color(&vertices[0], w)?;
        }
        let labels = vertices.iter().map(|v| v.to_string()).collect();
        ColorTable::from_encoder(labels, |i, j| encode(&mubayi_color(&vertices[i], &vertices[j]).unwrap()))
    }

    /// Mubayi's coloring on all of `[m]^t`.
    pub fn mubayi_full(m: u32, t: usize) -> Result<Self> {
        let n = (m as u64).checked_pow(t as u32).filter(|&n| n <= 1 << 24);
        let Some(n) = n else {
            return Err(Error::Domain(format!("[{m}]^{t} is too large to enumerate")));
        };
        check_pairs(n as usize)?;
        ColorTable::mubayi(&SymbolVector::all(m, t))
    }

    pub fn build(coloring: &Coloring, universe: &Universe) -> Result<Self> {
        match (coloring, universe) {
            (Coloring::Block { chain, variant }, Universe::AllBinary(a)) => ColorTable::block_full(*a, chain, *variant),
            (Coloring::Block { chain, variant }, Universe::Binary(vs)) => ColorTable::block(vs, chain, *variant),
            (Coloring::Mubayi, Universe::AllSymbols { m, t }) => ColorTable::mubayi_full(*m, *t),
            (Coloring::Mubayi, Universe::Symbols(vs)) => ColorTable::mubayi(vs),
            _ => Err(Error::Domain(format!("coloring {coloring} cannot act on {universe}"))),
        }
    }

    /// Explicit edge colors for `K_n`, edges listed in lexicographic order
    /// `(0,1), (0,2), …, (n-2,n-1)`.
    pub fn from_edge_colors(n: usize, colors: &[u32]) -> Result<Self> {
        let edges = n * n.saturating_sub(1) / 2;
        if colors.len() != edges {
            return Err(Error::Domain(format!("K_{n} has {edges} edges, got {} colors", colors.len())));
        }
        let mut lex = HashMap::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                lex.insert((i, j), colors[k]);
                k += 1;
            }
        }
        ColorTable::from_encoder((0..n).map(|i| i.to_string()).collect(), |i, j| lex[&(i, j)].to_string())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Interned color id of `{i, j}`, `i ≠ j`.
    #[inline]
    pub fn id(&self, i: usize, j: usize) -> u32 {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.ids[pair_rank(a, b)]
    }

    pub fn encoding(&self, i: usize, j: usize) -> &str {
        &self.palette[self.id(i, j) as usize]
    }

    /// Number of distinct colors over all pairs.
    pub fn num_colors(&self) -> usize {
        self.palette.len()
    }

    /// `(i, j, encoding)` for every pair in colex order.
    pub fn rows(&self) -> impl Iterator<Item = (usize, usize, &str)> + '_ {
        (1..self.len()).flat_map(move |j| (0..j).map(move |i| (i, j, self.encoding(i, j))))
    }

    /// The TSV form: `v<TAB>w<TAB>encoding` per pair, colex order.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (i, j, code) in self.rows() {
            out.push_str(&self.labels[i]);
            out.push('\t');
            out.push_str(&self.labels[j]);
            out.push('\t');
            out.push_str(code);
            out.push('\n');
        }
        out
    }
}
