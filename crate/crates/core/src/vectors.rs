//! Binary vectors, prefix projections and block decompositions.
//!
//! Coordinates are 1-based in every public signature: coordinate 1 is the
//! leftmost character of the textual form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vector in `{0,1}^α`, `α ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector(Vec<bool>);

impl BitVector {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidVector("vectors must have length at least 1".into()));
        }
        Ok(BitVector(bits))
    }

    /// Builds a vector from a non-empty slice. Panics on empty input.
    pub(crate) fn from_slice(bits: &[bool]) -> Self {
        assert!(!bits.is_empty(), "empty bit vector");
        BitVector(bits.to_vec())
    }

    /// The `index`-th vector of `{0,1}^alpha` in lexicographic order
    /// (coordinate 1 is the most significant bit).
    pub fn from_index(index: u64, alpha: usize) -> Self {
        assert!((1..=64).contains(&alpha));
        let bits = (0..alpha).map(|k| (index >> (alpha - 1 - k)) & 1 == 1).collect();
        BitVector(bits)
    }

    /// All of `{0,1}^alpha` in lexicographic order.
    pub fn all(alpha: usize) -> impl Iterator<Item = BitVector> {
        assert!((1..64).contains(&alpha), "alpha must lie in [1, 63]");
        (0..1u64 << alpha).map(move |i| BitVector::from_index(i, alpha))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Coordinate `i`, 1-based.
    pub fn get(&self, i: usize) -> Option<bool> {
        i.checked_sub(1).and_then(|k| self.0.get(k).copied())
    }

    /// `π_i`: the first `i` coordinates.
    pub fn prefix(&self, i: usize) -> Result<BitVector> {
        project(self, &Projection::Prefix(i))
    }

    /// Coordinates `i+1..=α`; the complement of [`prefix`](Self::prefix).
    pub fn suffix_after(&self, i: usize) -> Result<BitVector> {
        if i >= self.len() {
            return Err(Error::IndexOutOfRange { index: i + 1, len: self.len() });
        }
        Ok(BitVector(self.0[i..].to_vec()))
    }

    pub fn concat(&self, other: &BitVector) -> BitVector {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&other.0);
        BitVector(bits)
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bits(f, &self.0)
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

pub(crate) fn write_bits(out: &mut impl fmt::Write, bits: &[bool]) -> fmt::Result {
    for &b in bits {
        out.write_char(if b { '1' } else { '0' })?;
    }
    Ok(())
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(k, ch)| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidVector(format!("unexpected character {other:?} at coordinate {}", k + 1))),
            })
            .collect::<Result<Vec<_>>>()?;
        BitVector::new(bits)
    }
}

impl Serialize for BitVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Index set for [`project`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Projection {
    /// `π_i`, coordinates `1..=i`.
    Prefix(usize),
    /// `π_I` for an explicit list of 1-based coordinates, in the given order.
    Indices(Vec<usize>),
}

/// The canonical projection `π_I`.
pub fn project(v: &BitVector, idx: &Projection) -> Result<BitVector> {
    let len = v.len();
    match idx {
        Projection::Prefix(i) => {
            if *i == 0 || *i > len {
                return Err(Error::IndexOutOfRange { index: *i, len });
            }
            Ok(BitVector(v.0[..*i].to_vec()))
        }
        Projection::Indices(list) => {
            let bits = list
                .iter()
                .map(|&i| v.get(i).ok_or(Error::IndexOutOfRange { index: i, len }))
                .collect::<Result<Vec<_>>>()?;
            BitVector::new(bits)
        }
    }
}

/// Resolution chain `r_0 = 1 | r_1 | … | r_{p+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ResolutionChain {
    r: Vec<usize>,
}

impl ResolutionChain {
    /// Validates `r_0 = 1`, positivity and divisibility. The chain must have
    /// at least three entries so that `p ≥ 1`.
    pub fn new(r: Vec<usize>) -> Result<Self> {
        if r.len() < 3 {
            return Err(Error::InvalidChain(format!("need at least 3 entries (p >= 1), got {}", r.len())));
        }
        if r[0] != 1 {
            return Err(Error::InvalidChain(format!("must start with 1, got {}", r[0])));
        }
        for w in r.windows(2) {
            if w[1] == 0 || w[1] % w[0] != 0 {
                return Err(Error::InvalidChain(format!("{} does not divide {}", w[0], w[1])));
            }
        }
        Ok(ResolutionChain { r })
    }

    /// `r_d = β^d` for `0 ≤ d ≤ p+1`.
    pub fn geometric(beta: usize, p: usize) -> Result<Self> {
        if beta < 2 || p < 1 {
            return Err(Error::InvalidChain(format!("need beta >= 2 and p >= 1 (beta={beta}, p={p})")));
        }
        let mut r = Vec::with_capacity(p + 2);
        let mut x = 1usize;
        for _ in 0..=p + 1 {
            r.push(x);
            x = x.checked_mul(beta).ok_or_else(|| Error::InvalidChain("resolution overflow".into()))?;
        }
        ResolutionChain::new(r)
    }

    pub fn p(&self) -> usize {
        self.r.len() - 2
    }

    /// `r_d`; panics unless `d ≤ p+1`.
    pub fn r(&self, d: usize) -> usize {
        self.r[d]
    }

    pub fn resolutions(&self) -> &[usize] {
        &self.r
    }

    pub(crate) fn check_level(&self, d: usize, max: usize) -> Result<()> {
        if d > max {
            return Err(Error::ResolutionOutOfRange { d, min: 0, max });
        }
        Ok(())
    }
}

impl fmt::Display for ResolutionChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.r.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ResolutionChain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let r = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::InvalidChain(format!("{t:?} is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        ResolutionChain::new(r)
    }
}

/// `(a, b)` with `len = a·r + b`, `a ≥ 0` and `1 ≤ b ≤ r`.
pub(crate) fn block_shape(len: usize, r: usize) -> (usize, usize) {
    debug_assert!(len >= 1 && r >= 1);
    let a = (len - 1) / r;
    (a, len - a * r)
}

/// Splits a slice into consecutive blocks of length `r`, the last one of
/// length `b` per [`block_shape`].
pub(crate) fn blocks(bits: &[bool], r: usize) -> std::slice::Chunks<'_, bool> {
    bits.chunks(r)
}

/// Blocks of resolution `d` of a vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockDecomposition {
    pub resolution: usize,
    pub blocks: Vec<BitVector>,
    pub a: usize,
    pub b: usize,
}

/// Blocks of resolution `d`; requires `0 ≤ d ≤ p+1`.
pub fn decompose(v: &BitVector, d: usize, chain: &ResolutionChain) -> Result<BlockDecomposition> {
    chain.check_level(d, chain.p() + 1)?;
    let r = chain.r(d);
    let (a, b) = block_shape(v.len(), r);
    Ok(BlockDecomposition { resolution: d, blocks: blocks(v.bits(), r).map(BitVector::from_slice).collect(), a, b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn chain(s: &str) -> ResolutionChain {
        s.parse().unwrap()
    }

    #[test]
    fn prefix_projection_of_worked_example() {
        assert_eq!(bv("0010110").prefix(4).unwrap(), bv("0010"));
        assert_eq!(bv("0010110").prefix(7).unwrap(), bv("0010110"));
        assert_eq!(project(&bv("1"), &Projection::Indices(vec![1])).unwrap(), bv("1"));
    }

    #[test]
    fn projection_out_of_range() {
        assert!(matches!(bv("01").prefix(3), Err(Error::IndexOutOfRange { .. })));
        assert!(bv("01").prefix(0).is_err());
        assert!(project(&bv("01"), &Projection::Indices(vec![0])).is_err());
        assert_eq!(project(&bv("0110"), &Projection::Indices(vec![4, 1])).unwrap(), bv("00"));
    }

    #[test]
    fn decompose_worked_example() {
        let c = chain("1,2,4");
        let v = bv("0010110");
        let d1 = decompose(&v, 1, &c).unwrap();
        assert_eq!(d1.blocks, vec![bv("00"), bv("10"), bv("11"), bv("0")]);
        assert_eq!((d1.a, d1.b), (3, 1));
        let d2 = decompose(&v, 2, &c).unwrap();
        assert_eq!(d2.blocks, vec![bv("0010"), bv("110")]);
        assert_eq!((d2.a, d2.b), (1, 3));
        let d0 = decompose(&v, 0, &c).unwrap();
        assert_eq!(d0.blocks.len(), 7);
        assert!(decompose(&v, 3, &c).is_err());
    }

    #[test]
    fn divisible_length_keeps_full_last_block() {
        let c = chain("1,2,4");
        let d = decompose(&bv("0110"), 2, &c).unwrap();
        assert_eq!((d.a, d.b), (0, 4));
        let d = decompose(&bv("011011"), 1, &c).unwrap();
        assert_eq!((d.a, d.b), (2, 2));
        // shorter than the resolution: one block
        let d = decompose(&bv("01"), 2, &c).unwrap();
        assert_eq!(d.blocks, vec![bv("01")]);
    }

    #[test]
    fn chain_validation() {
        assert!("1,2,4".parse::<ResolutionChain>().is_ok());
        assert!("1,3,4".parse::<ResolutionChain>().is_err());
        assert!("2,4,8".parse::<ResolutionChain>().is_err());
        assert!("1,2".parse::<ResolutionChain>().is_err());
        assert!("1,0,0".parse::<ResolutionChain>().is_err());
        assert!("1,x,4".parse::<ResolutionChain>().is_err());
        assert_eq!(ResolutionChain::geometric(3, 1).unwrap().to_string(), "1,3,9");
    }

    #[test]
    fn text_form() {
        assert!("".parse::<BitVector>().is_err());
        assert!("0120".parse::<BitVector>().is_err());
        assert_eq!(BitVector::from_index(5, 4).to_string(), "0101");
        let all: Vec<String> = BitVector::all(2).map(|v| v.to_string()).collect();
        assert_eq!(all, ["00", "01", "10", "11"]);
    }

    fn arb_vector(max_len: usize) -> impl Strategy<Value = BitVector> {
        prop::collection::vec(any::<bool>(), 1..=max_len).prop_map(|b| BitVector::new(b).unwrap())
    }

    proptest! {
        #[test]
        fn decomposition_round_trips(v in arb_vector(40), d in 0usize..4) {
            let c = chain("1,2,6,12,24");
            let dec = decompose(&v, d, &c).unwrap();
            let joined: Vec<bool> = dec.blocks.iter().flat_map(|b| b.bits().to_vec()).collect();
            prop_assert_eq!(joined.as_slice(), v.bits());
            let r = c.r(d);
            prop_assert_eq!(dec.blocks.len(), v.len().div_ceil(r));
            prop_assert_eq!(dec.a * r + dec.b, v.len());
            prop_assert!(dec.b >= 1 && dec.b <= r);
            prop_assert!(dec.blocks[..dec.a].iter().all(|b| b.len() == r));
            prop_assert_eq!(dec.blocks[dec.a].len(), dec.b);
        }

        #[test]
        fn prefix_projections_compose(v in arb_vector(30), i in 1usize..30, j in 1usize..30) {
            let (i, j) = (i.min(j).min(v.len()), i.max(j).min(v.len()));
            let direct = v.prefix(i).unwrap();
            let composed = v.prefix(j).unwrap().prefix(i).unwrap();
            prop_assert_eq!(direct, composed);
        }
    }
}
