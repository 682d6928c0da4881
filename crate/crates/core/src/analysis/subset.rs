//! Decomposition of the colors inside a vertex subset by a prefix split.
//!
//! For a resolution `d`, `α_d` is the largest multiple of `r_d` below `α`.
//! Pairs whose `α_d`-prefixes differ are *inherited*; pairs inside one
//! prefix class (a fiber `T_{v'}`) are *emerging*.

use std::collections::{BTreeMap, BTreeSet};

use crate::colorings::{color, eta, gamma, h, split_point, BlockPair, Color, EtaValue, HValue};
use crate::error::{Error, Result};
use crate::vectors::{BitVector, ResolutionChain};

#[derive(Clone, Debug)]
pub struct SubsetAnalysis {
    pub d: usize,
    pub alpha: usize,
    pub alpha_d: usize,
    /// `S`, sorted and deduplicated.
    pub vertices: Vec<BitVector>,
    /// `T_{v'}` keyed by `v' ∈ S'`.
    pub fibers: BTreeMap<BitVector, Vec<BitVector>>,
    /// Full colors of pairs in different fibers.
    pub lambda_i: BTreeSet<Color>,
    /// Full colors of distinct pairs within a fiber.
    pub lambda_e: BTreeSet<Color>,
    /// `(c_p(v', w'), η_{d-1}(v'', w''))` over pairs in different fibers.
    pub c_i: BTreeSet<(Color, EtaValue)>,
    /// Suffix pairs `{v'', w''}` within fibers, with multiplicities `μ`.
    pub c_e: BTreeMap<BlockPair, usize>,
    /// Colors on distinct pairs of `S'`.
    pub c_b: BTreeSet<Color>,
}

fn check_level(d: usize, chain: &ResolutionChain) -> Result<()> {
    if d == 0 || d > chain.p() + 1 {
        return Err(Error::ResolutionOutOfRange { d, min: 1, max: chain.p() + 1 });
    }
    Ok(())
}

fn common_length(s: &[BitVector]) -> Result<usize> {
    let first = s.first().ok_or_else(|| Error::Domain("subset is empty".into()))?;
    if let Some(w) = s.iter().find(|w| w.len() != first.len()) {
        return Err(Error::LengthMismatch { left: first.len(), right: w.len() });
    }
    Ok(first.len())
}

fn suffix_pair(v: &BitVector, w: &BitVector, cut: usize) -> Result<BlockPair> {
    BlockPair::new(v.suffix_after(cut)?, w.suffix_after(cut)?)
}

/// Computes every set of the decomposition at resolution `1 ≤ d ≤ p+1`.
pub fn analyze_subset(s: &[BitVector], d: usize, chain: &ResolutionChain) -> Result<SubsetAnalysis> {
    check_level(d, chain)?;
    let alpha = common_length(s)?;
    let alpha_d = split_point(alpha, chain.r(d)).ok_or(Error::TooShort { alpha, d, r: chain.r(d) })?;
    let vertices: Vec<BitVector> = s.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();

    let mut fibers: BTreeMap<BitVector, Vec<BitVector>> = BTreeMap::new();
    for v in &vertices {
        fibers.entry(v.prefix(alpha_d)?).or_default().push(v.clone());
    }

    let mut out = SubsetAnalysis {
        d,
        alpha,
        alpha_d,
        vertices,
        fibers,
        lambda_i: BTreeSet::new(),
        lambda_e: BTreeSet::new(),
        c_i: BTreeSet::new(),
        c_e: BTreeMap::new(),
        c_b: BTreeSet::new(),
    };
    for (j, w) in out.vertices.iter().enumerate() {
        for v in &out.vertices[..j] {
            let full = color(v, w, chain)?;
            if v.prefix(alpha_d)? == w.prefix(alpha_d)? {
                out.lambda_e.insert(full);
                *out.c_e.entry(suffix_pair(v, w, alpha_d)?).or_insert(0) += 1;
            } else {
                out.lambda_i.insert(full);
                out.c_i.insert(gamma(d, v, w, chain)?);
            }
        }
    }
    let prefixes: Vec<&BitVector> = out.fibers.keys().collect();
    for (j, y) in prefixes.iter().enumerate() {
        for x in &prefixes[..j] {
            out.c_b.insert(color(x, y, chain)?);
        }
    }
    Ok(out)
}

impl SubsetAnalysis {
    /// `S'`, the distinct prefixes.
    pub fn prefixes(&self) -> impl Iterator<Item = &BitVector> {
        self.fibers.keys()
    }

    pub fn mu_sum(&self) -> usize {
        self.c_e.values().sum()
    }

    /// Number of distinct colors inside `S`.
    pub fn num_colors(&self) -> usize {
        self.lambda_i.len() + self.lambda_e.len()
    }

    /// Lists every structural invariant that fails; empty when all hold.
    pub fn invariant_failures(&self) -> Vec<String> {
        let mut bad = Vec::new();
        if self.lambda_i.intersection(&self.lambda_e).next().is_some() {
            bad.push("inherited and emerging full colors overlap".to_string());
        }
        let fiber_sum: usize = self.fibers.values().map(Vec::len).sum();
        if fiber_sum != self.vertices.len() {
            bad.push(format!("fiber sizes sum to {fiber_sum}, |S| = {}", self.vertices.len()));
        }
        if self.c_i.len() > self.lambda_i.len() {
            bad.push(format!("|C_I| = {} > |Λ_I| = {}", self.c_i.len(), self.lambda_i.len()));
        }
        if self.c_e.len() > self.lambda_e.len() {
            bad.push(format!("|C_E| = {} > |Λ_E| = {}", self.c_e.len(), self.lambda_e.len()));
        }
        let within: usize = self.fibers.values().map(|t| t.len() * (t.len().saturating_sub(1)) / 2).sum();
        if self.mu_sum() != within {
            bad.push(format!("Σμ = {} but Σ C(|T|,2) = {within}", self.mu_sum()));
        }
        bad
    }

    /// Whether `η_{d-1}` takes distinct values on the suffix pairs of `C_E`.
    pub fn eta_injective_on_emerging(&self, chain: &ResolutionChain) -> Result<bool> {
        let mut seen = BTreeSet::new();
        for pair in self.c_e.keys() {
            if !seen.insert(eta(self.d - 1, pair.lo(), pair.hi(), chain)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The map `ȷ_d : C_E^{(d-1)} → C_E^{(d)}` together with its checks.
#[derive(Clone, Debug)]
pub struct EmergingInjection {
    pub map: BTreeMap<BlockPair, BlockPair>,
    pub injective: bool,
    pub lands_in_target: bool,
    /// `h_{d-1} ∘ ȷ_d` is the identity.
    pub left_inverse: bool,
}

impl EmergingInjection {
    pub fn holds(&self) -> bool {
        self.injective && self.lands_in_target && self.left_inverse
    }
}

/// Builds `ȷ_d` for `2 ≤ d ≤ p`: each `{x, y} ∈ C_E^{(d-1)}` is realized by
/// the first pair `v_x = (v_0, x)`, `v_y = (v_0, y)` of `S` in sorted order,
/// and mapped to `h_d(v_x, v_y)`.
pub fn emerging_injection(s: &[BitVector], d: usize, chain: &ResolutionChain) -> Result<EmergingInjection> {
    if d < 2 || d > chain.p() {
        return Err(Error::ResolutionOutOfRange { d, min: 2, max: chain.p() });
    }
    let lower = analyze_subset(s, d - 1, chain)?;
    let upper = analyze_subset(s, d, chain)?;
    let vs = &lower.vertices;
    let mut map = BTreeMap::new();
    for (j, w) in vs.iter().enumerate() {
        for v in &vs[..j] {
            if v.prefix(lower.alpha_d)? != w.prefix(lower.alpha_d)? {
                continue;
            }
            let key = suffix_pair(v, w, lower.alpha_d)?;
            if map.contains_key(&key) {
                continue;
            }
            let HValue::Diff(image) = h(d, v, w, chain)? else {
                return Err(Error::Domain("distinct vertices with a zero h value".into()));
            };
            map.insert(key, image);
        }
    }
    let images: BTreeSet<&BlockPair> = map.values().collect();
    let injective = images.len() == map.len();
    let lands_in_target = images.iter().all(|c| upper.c_e.contains_key(*c));
    let mut left_inverse = true;
    for (src, img) in &map {
        left_inverse &= h(d - 1, img.lo(), img.hi(), chain)? == HValue::Diff(src.clone());
    }
    Ok(EmergingInjection { map, injective, lands_in_target, left_inverse })
}

/// Outcome of searching for an index `d` with `η_{d-1}` injective on `C_E^{(d)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSearch {
    /// `|C_I^{(p)}| + |C_E^{(p)}| ≤ |S| - 2`.
    pub premise: bool,
    /// Least `d ∈ 1..=p` with the injectivity property.
    pub index: Option<usize>,
}

impl IndexSearch {
    /// The implication premise ⇒ index exists.
    pub fn holds(&self) -> bool {
        !self.premise || self.index.is_some()
    }
}

pub fn injective_index(s: &[BitVector], chain: &ResolutionChain) -> Result<IndexSearch> {
    let p = chain.p();
    let top = analyze_subset(s, p, chain)?;
    let premise = top.c_i.len() + top.c_e.len() + 2 <= top.vertices.len();
    for d in 1..=p {
        if analyze_subset(s, d, chain)?.eta_injective_on_emerging(chain)? {
            return Ok(IndexSearch { premise, index: Some(d) });
        }
    }
    Ok(IndexSearch { premise, index: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::binomial;
    use proptest::prelude::*;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn chain(s: &str) -> ResolutionChain {
        s.parse().unwrap()
    }

    #[test]
    fn three_vertex_example() {
        let s = [bv("0010110"), bv("0011100"), bv("0010111")];
        let a = analyze_subset(&s, 2, &chain("1,2,4")).unwrap();
        assert_eq!(a.alpha_d, 4);
        let sizes: Vec<(String, usize)> = a.fibers.iter().map(|(k, t)| (k.to_string(), t.len())).collect();
        assert_eq!(sizes, vec![("0010".to_string(), 2), ("0011".to_string(), 1)]);
        assert_eq!(a.mu_sum(), 1);
        assert_eq!(a.c_e.keys().next().unwrap(), &BlockPair::new(bv("110"), bv("111")).unwrap());
        assert_eq!(a.c_b.len(), 1);
        // both cross pairs agree on the prefix color and on η_1 of the suffixes
        assert_eq!(a.c_i.len(), 1);
        assert_eq!(a.lambda_i.len(), 2);
        assert!(a.invariant_failures().is_empty());
    }

    #[test]
    fn singleton_subset() {
        let a = analyze_subset(&[bv("0101")], 1, &chain("1,2,4")).unwrap();
        assert!(a.lambda_i.is_empty() && a.lambda_e.is_empty() && a.c_i.is_empty());
        assert!(a.c_e.is_empty() && a.c_b.is_empty());
        assert_eq!(a.fibers.len(), 1);
    }

    #[test]
    fn one_fiber_has_no_inherited_colors() {
        let s = [bv("0000000"), bv("0000001"), bv("0000010")];
        let a = analyze_subset(&s, 2, &chain("1,2,4")).unwrap();
        assert_eq!(a.alpha_d, 4);
        assert!(a.lambda_i.is_empty() && a.c_i.is_empty());
        assert_eq!(a.fibers.len(), 1);
        assert!(!a.c_e.is_empty());
    }

    #[test]
    fn short_vectors_are_rejected() {
        let err = analyze_subset(&[bv("0101")], 2, &chain("1,2,4")).unwrap_err();
        assert!(matches!(err, Error::TooShort { .. }));
        assert!(analyze_subset(&[], 1, &chain("1,2,4")).is_err());
        assert!(emerging_injection(&[bv("01010101")], 1, &chain("1,2,4,8")).is_err());
    }

    #[test]
    fn injection_trivial_cases() {
        let c = chain("1,2,4,8");
        let j = emerging_injection(&[bv("01010101")], 2, &c).unwrap();
        assert!(j.map.is_empty() && j.holds());
        let j = emerging_injection(&[bv("01010101"), bv("01010100")], 2, &c).unwrap();
        assert!(j.map.len() <= 1 && j.holds());
    }

    fn arb_subset(alpha: usize, max: usize) -> impl Strategy<Value = Vec<BitVector>> {
        prop::collection::btree_set(0u64..1 << alpha, 1..=max)
            .prop_map(move |xs| xs.into_iter().map(|x| BitVector::from_index(x, alpha)).collect())
    }

    proptest! {
        #[test]
        fn invariants_on_random_subsets(s in arb_subset(8, 5), d in 1usize..=2) {
            let a = analyze_subset(&s, d, &chain("1,2,4,8")).unwrap();
            prop_assert!(a.invariant_failures().is_empty(), "{:?}", a.invariant_failures());
            let colors: BTreeSet<Color> = s.iter().enumerate()
                .flat_map(|(j, w)| s[..j].iter().map(move |v| (v, w)))
                .map(|(v, w)| color(v, w, &chain("1,2,4,8")).unwrap())
                .collect();
            prop_assert_eq!(a.num_colors(), colors.len());
        }

        #[test]
        fn emerging_counts_are_monotone(s in arb_subset(8, 5)) {
            let c = chain("1,2,4,8");
            let j = emerging_injection(&s, 2, &c).unwrap();
            prop_assert!(j.holds());
            let lo = analyze_subset(&s, 1, &c).unwrap().c_e.len();
            let hi = analyze_subset(&s, 2, &c).unwrap().c_e.len();
            prop_assert!(lo <= hi);
        }

        #[test]
        fn index_exists_under_premise(s in arb_subset(8, 5)) {
            prop_assert!(injective_index(&s, &chain("1,2,4,8")).unwrap().holds());
        }

        #[test]
        fn no_inherited_colors_forces_many_emerging(prefix in 0u64..16, tails in prop::collection::btree_set(0u64..16, 1..6)) {
            let s: Vec<BitVector> = tails.iter().map(|&t| BitVector::from_index(prefix << 4 | t, 8)).collect();
            let a = analyze_subset(&s, 2, &chain("1,2,4,8")).unwrap();
            prop_assert!(a.c_i.is_empty());
            prop_assert!(a.c_e.len() as u128 >= binomial(s.len() as u64, 2));
        }
    }
}
