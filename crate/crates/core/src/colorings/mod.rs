//! The block colorings `η_d`, `ξ_d`, `c_d`, their index-free variant built
//! from `h_d`, the split coloring `γ_d`, and Mubayi's coloring of `[m]^t`.
//!
//! Every value here has a canonical text encoding, see [`encoding`].

pub mod encoding;
mod mubayi;

use std::fmt;

use crate::error::{Error, Result};
use crate::vectors::{blocks, BitVector, ResolutionChain};

pub use encoding::{decode, encode, Canonical};
pub use mubayi::{mubayi_color, MubayiColor, SymbolVector};

/// An unordered pair of distinct, equal-length blocks, stored smaller-first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BlockPair {
    lo: BitVector,
    hi: BitVector,
}

impl BlockPair {
    pub fn new(a: BitVector, b: BitVector) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
        }
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(BlockPair { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Ok(BlockPair { lo: b, hi: a }),
            std::cmp::Ordering::Equal => Err(Error::Domain("a block pair needs two distinct blocks".into())),
        }
    }

    fn from_slices(a: &[bool], b: &[bool]) -> Self {
        let (a, b) = (BitVector::from_slice(a), BitVector::from_slice(b));
        if a < b {
            BlockPair { lo: a, hi: b }
        } else {
            BlockPair { lo: b, hi: a }
        }
    }

    pub fn lo(&self) -> &BitVector {
        &self.lo
    }

    pub fn hi(&self) -> &BitVector {
        &self.hi
    }

    pub fn block_len(&self) -> usize {
        self.lo.len()
    }
}

/// Value of `η_d`: the first differing block of resolution `d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum EtaValue {
    Zero,
    Diff { index: usize, pair: BlockPair },
}

/// Value of `h_d`: `η_d` with the block index dropped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum HValue {
    Zero,
    Diff(BlockPair),
}

impl EtaValue {
    pub fn is_zero(&self) -> bool {
        matches!(self, EtaValue::Zero)
    }

    /// Erases the index.
    pub fn to_h(&self) -> HValue {
        match self {
            EtaValue::Zero => HValue::Zero,
            EtaValue::Diff { pair, .. } => HValue::Diff(pair.clone()),
        }
    }
}

impl HValue {
    pub fn is_zero(&self) -> bool {
        matches!(self, HValue::Zero)
    }
}

/// Per-block entry of a product coloring; implemented by [`EtaValue`] and
/// [`HValue`].
pub trait BlockEntry: Clone + Eq + Ord + std::hash::Hash + Canonical + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// Compare `v` and `w` block by block at block length `r`.
    fn first_difference(r: usize, v: &[bool], w: &[bool]) -> Self;
}

/// Position (1-based) and contents of the first differing length-`r` block.
fn first_differing_block<'a>(r: usize, v: &'a [bool], w: &'a [bool]) -> Option<(usize, &'a [bool], &'a [bool])> {
    blocks(v, r).zip(blocks(w, r)).enumerate().find(|(_, (x, y))| x != y).map(|(i, (x, y))| (i + 1, x, y))
}

impl BlockEntry for EtaValue {
    fn zero() -> Self {
        EtaValue::Zero
    }

    fn is_zero(&self) -> bool {
        EtaValue::is_zero(self)
    }

    fn first_difference(r: usize, v: &[bool], w: &[bool]) -> Self {
        match first_differing_block(r, v, w) {
            None => EtaValue::Zero,
            Some((index, x, y)) => EtaValue::Diff { index, pair: BlockPair::from_slices(x, y) },
        }
    }
}

impl BlockEntry for HValue {
    fn zero() -> Self {
        HValue::Zero
    }

    fn is_zero(&self) -> bool {
        HValue::is_zero(self)
    }

    fn first_difference(r: usize, v: &[bool], w: &[bool]) -> Self {
        match first_differing_block(r, v, w) {
            None => HValue::Zero,
            Some((_, x, y)) => HValue::Diff(BlockPair::from_slices(x, y)),
        }
    }
}

/// Value of `ξ_d`: one entry per block of resolution `d+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct XiValue<E = EtaValue>(pub Vec<E>);

impl<E: BlockEntry> XiValue<E> {
    pub fn entries(&self) -> &[E] {
        &self.0
    }

    pub fn is_all_zero(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }
}

/// Value of `c_d = ξ_d × ξ_{d-1} × … × ξ_0`, stored from level `d` down to 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProductColor<E = EtaValue>(pub Vec<XiValue<E>>);

/// Color of the main construction.
pub type Color = ProductColor<EtaValue>;
/// Color of the variant built from `h_d`.
pub type HColor = ProductColor<HValue>;

impl<E: BlockEntry> ProductColor<E> {
    /// Components ordered from the top level down to level 0.
    pub fn levels(&self) -> &[XiValue<E>] {
        &self.0
    }

    /// The `ξ_d` component.
    pub fn level(&self, d: usize) -> Option<&XiValue<E>> {
        let top = self.0.len().checked_sub(1)?;
        (d <= top).then(|| &self.0[top - d])
    }

    pub fn is_all_zero(&self) -> bool {
        self.0.iter().all(XiValue::is_all_zero)
    }
}

impl Color {
    /// Erases every index, giving the value of the `h_d` variant.
    pub fn erase_indices(&self) -> HColor {
        ProductColor(self.0.iter().map(|xi| XiValue(xi.0.iter().map(EtaValue::to_h).collect())).collect())
    }
}

fn check_pair(v: &BitVector, w: &BitVector) -> Result<()> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch { left: v.len(), right: w.len() });
    }
    Ok(())
}

fn xi_slices<E: BlockEntry>(d: usize, chain: &ResolutionChain, v: &[bool], w: &[bool]) -> XiValue<E> {
    let (outer, inner) = (chain.r(d + 1), chain.r(d));
    XiValue(blocks(v, outer).zip(blocks(w, outer)).map(|(x, y)| E::first_difference(inner, x, y)).collect())
}

pub(crate) fn product_slices<E: BlockEntry>(
    d: usize,
    chain: &ResolutionChain,
    v: &[bool],
    w: &[bool],
) -> ProductColor<E> {
    ProductColor((0..=d).rev().map(|k| xi_slices(k, chain, v, w)).collect())
}

/// `η_d(v, w)` for `0 ≤ d ≤ p+1`.
pub fn eta(d: usize, v: &BitVector, w: &BitVector, chain: &ResolutionChain) -> Result<EtaValue> {
    check_pair(v, w)?;
    chain.check_level(d, chain.p() + 1)?;
    Ok(EtaValue::first_difference(chain.r(d), v.bits(), w.bits()))
}

/// `h_d(v, w)` for `0 ≤ d ≤ p+1`.
pub fn h(d: usize, v: &BitVector, w: &BitVector, chain: &ResolutionChain) -> Result<HValue> {
    check_pair(v, w)?;
    chain.check_level(d, chain.p() + 1)?;
    Ok(HValue::first_difference(chain.r(d), v.bits(), w.bits()))
}

/// `ξ_d(v, w)` for `0 ≤ d ≤ p`.
pub fn xi(d: usize, v: &BitVector, w: &BitVector, chain: &ResolutionChain) -> Result<XiValue> {
    check_pair(v, w)?;
    chain.check_level(d, chain.p())?;
    Ok(xi_slices(d, chain, v.bits(), w.bits()))
}

/// `ξ_d` with `h_d` in place of `η_d`.
pub fn xi_h(d: usize, v: &BitVector, w: &BitVector, chain: &ResolutionChain) -> Result<XiValue<HValue>> {
    check_pair(v, w)?;
    chain.check_level(d, chain.p())?;
    Ok(xi_slices(d, chain, v.bits(), w.bits()))
}

/// `c_d(v, w)` for `0 ≤ d ≤ p`.
pub fn color_level(d: usize, v: &BitVector, w: &BitVector, chain: &ResolutionChain) -> Result<Color> {
    check_pair(v, w)?;
    chain.check_level(d, chain.p())?;
    Ok(product_slices(d, chain, v.bits(), w.bits()))
}

/// The full coloring `c_p(v, w)`.
pub fn color(v: &BitVector, w: &BitVector, chain: &ResolutionChain) -> Result<Color> {
    color_level(chain.p(), v, w, chain)
}

/// `c_p` with every `η_d` replaced by `h_d`.
pub fn color_h_variant(v: &BitVector, w: &BitVector, chain: &ResolutionChain) -> Result<HColor> {
    check_pair(v, w)?;
    Ok(product_slices(chain.p(), chain, v.bits(), w.bits()))
}

/// Largest multiple of `r` strictly below `alpha`, or `None` when `alpha ≤ r`.
pub fn split_point(alpha: usize, r: usize) -> Option<usize> {
    (alpha > r).then(|| r * ((alpha - 1) / r))
}

/// `γ_d(v, w) = (c_p(v', w'), η_{d-1}(v'', w''))` where `v = (v', v'')` is split
/// at the largest multiple of `r_d` below `α`. Defined for `1 ≤ d ≤ p+1` and
/// `α > r_d`.
pub fn gamma(d: usize, v: &BitVector, w: &BitVector, chain: &ResolutionChain) -> Result<(Color, EtaValue)> {
    check_pair(v, w)?;
    if d == 0 || d > chain.p() + 1 {
        return Err(Error::ResolutionOutOfRange { d, min: 1, max: chain.p() + 1 });
    }
    let alpha = v.len();
    let cut = split_point(alpha, chain.r(d)).ok_or(Error::TooShort { alpha, d, r: chain.r(d) })?;
    let (v1, v2) = v.bits().split_at(cut);
    let (w1, w2) = w.bits().split_at(cut);
    Ok((product_slices(chain.p(), chain, v1, w1), EtaValue::first_difference(chain.r(d - 1), v2, w2)))
}

macro_rules! display_via_encoding {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&encode(self))
            }
        }
    )*};
}

display_via_encoding!(EtaValue, HValue, XiValue<EtaValue>, XiValue<HValue>, Color, HColor, MubayiColor);
