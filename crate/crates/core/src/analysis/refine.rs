//! Refinement of finite functions: `f` refines `g` when `f(a) = f(a')`
//! forces `g(a) = g(a')`.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use crate::vectors::BitVector;

/// Outcome of [`refines`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refinement<D> {
    Holds,
    /// `f(first) = f(second)` but `g(first) ≠ g(second)`.
    Fails {
        first: D,
        second: D,
    },
}

impl<D> Refinement<D> {
    pub fn holds(&self) -> bool {
        matches!(self, Refinement::Holds)
    }

    pub fn witness(self) -> Option<(D, D)> {
        match self {
            Refinement::Holds => None,
            Refinement::Fails { first, second } => Some((first, second)),
        }
    }
}

/// Checks whether `f` refines `g` on `domain`.
///
/// Elements are bucketed by their `f`-value; each bucket must be constant
/// under `g`. The first element of a bucket serves as its representative,
/// so a returned witness pairs that representative with the first element
/// that disagrees with it.
pub fn refines<D, A, B, F, G>(domain: impl IntoIterator<Item = D>, f: F, g: G) -> Refinement<D>
where
    A: Hash + Eq,
    B: PartialEq,
    F: Fn(&D) -> A,
    G: Fn(&D) -> B,
{
    let mut classes: HashMap<A, (D, B)> = HashMap::new();
    for a in domain {
        let gv = g(&a);
        match classes.entry(f(&a)) {
            Entry::Vacant(slot) => {
                slot.insert((a, gv));
            }
            Entry::Occupied(slot) => {
                if slot.get().1 != gv {
                    let (first, _) = slot.remove();
                    return Refinement::Fails { first, second: a };
                }
            }
        }
    }
    Refinement::Holds
}

/// `|f(A')|`, the number of distinct values on a subset.
pub fn image_size<D, A: Hash + Eq>(subset: impl IntoIterator<Item = D>, f: impl Fn(&D) -> A) -> usize {
    subset.into_iter().map(|a| f(&a)).collect::<HashSet<_>>().len()
}

/// All ordered pairs over `{0,1}^alpha`, the domain of the projection checks.
pub fn all_pairs(alpha: usize) -> Vec<(BitVector, BitVector)> {
    let vs: Vec<BitVector> = BitVector::all(alpha).collect();
    vs.iter().flat_map(|v| vs.iter().map(move |w| (v.clone(), w.clone()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{eta, h};
    use crate::vectors::ResolutionChain;
    use proptest::prelude::*;

    #[test]
    fn identity_refines_itself() {
        assert!(refines(0..100u32, |x| x % 7, |x| x % 7).holds());
    }

    #[test]
    fn coarser_function_does_not_refine_finer() {
        let w = refines(0..100u32, |x| x % 3, |x| x % 6).witness().unwrap();
        assert_eq!(w.0 % 3, w.1 % 3);
        assert_ne!(w.0 % 6, w.1 % 6);
        assert!(refines(0..100u32, |x| x % 6, |x| x % 3).holds());
    }

    #[test]
    fn eta_survives_projection_but_h_does_not() {
        let chain: ResolutionChain = "1,2,4".parse().unwrap();
        let cut = |(v, w): &(BitVector, BitVector)| (v.prefix(3).unwrap(), w.prefix(3).unwrap());
        let eta_cut = |pair: &(BitVector, BitVector)| {
            let (v, w) = cut(pair);
            eta(1, &v, &w, &chain).unwrap()
        };
        let h_cut = |pair: &(BitVector, BitVector)| {
            let (v, w) = cut(pair);
            h(1, &v, &w, &chain).unwrap()
        };
        assert!(refines(all_pairs(4), |(v, w)| eta(1, v, w, &chain).unwrap(), eta_cut).holds());
        let (a, b) =
            refines(all_pairs(4), |(v, w)| h(1, v, w, &chain).unwrap(), h_cut).witness().expect("h_1 has a witness");
        assert_eq!(h(1, &a.0, &a.1, &chain).unwrap(), h(1, &b.0, &b.1, &chain).unwrap());
        assert_ne!(h_cut(&a), h_cut(&b));
    }

    /// A random function on `0..n` with at most `k` values.
    fn arb_fn(n: usize, k: u8) -> impl Strategy<Value = Vec<u8>> {
        prop::collection::vec(0..k, n)
    }

    /// A function that refines `base`: a function of `base`'s value.
    fn coarsen(base: &[u8], map: &[u8]) -> Vec<u8> {
        base.iter().map(|&x| map[x as usize]).collect()
    }

    const N: usize = 40;

    proptest! {
        #[test]
        fn transitivity(f1 in arb_fn(N, 12), m2 in arb_fn(12, 6), m3 in arb_fn(6, 3)) {
            let f2 = coarsen(&f1, &m2);
            let f3 = coarsen(&f2, &m3);
            prop_assert!(refines(0..N, |&a| f1[a], |&a| f2[a]).holds());
            prop_assert!(refines(0..N, |&a| f2[a], |&a| f3[a]).holds());
            prop_assert!(refines(0..N, |&a| f1[a], |&a| f3[a]).holds());
        }

        #[test]
        fn product_laws(f1 in arb_fn(N, 8), f2 in arb_fn(N, 8), m3 in arb_fn(8, 4), m4 in arb_fn(8, 4), m5 in arb_fn(8, 4)) {
            let f3 = coarsen(&f1, &m3);
            let f4 = coarsen(&f2, &m4);
            let f5 = coarsen(&f1, &m5);
            // (iii) f1 refines f3 => f1 x f2 refines f3
            prop_assert!(refines(0..N, |&a| (f1[a], f2[a]), |&a| f3[a]).holds());
            // (iv) f1 refines f3 and f5 => f1 refines f3 x f5
            prop_assert!(refines(0..N, |&a| f1[a], |&a| (f3[a], f5[a])).holds());
            // (v) f1 refines f3, f2 refines f4 => f1 x f2 refines f3 x f4
            prop_assert!(refines(0..N, |&a| (f1[a], f2[a]), |&a| (f3[a], f4[a])).holds());
        }

        #[test]
        fn refinement_bounds_image_sizes(f1 in arb_fn(N, 10), m2 in arb_fn(10, 5), g in arb_fn(N, 10),
                                         subset in prop::collection::btree_set(0..N, 0..N)) {
            let f2 = coarsen(&f1, &m2);
            prop_assert!(image_size(subset.iter().copied(), |&a| f1[a]) >= image_size(subset.iter().copied(), |&a| f2[a]));
            // and whenever the check succeeds on arbitrary pairs, the same inequality holds
            if refines(0..N, |&a| g[a], |&a| f1[a]).holds() {
                prop_assert!(image_size(subset.iter().copied(), |&a| g[a]) >= image_size(subset.iter().copied(), |&a| f1[a]));
            }
        }

        #[test]
        fn check_agrees_with_pairwise_definition(f in arb_fn(25, 6), g in arb_fn(25, 6)) {
            let brute = (0..25).all(|a| (0..25).all(|b| f[a] != f[b] || g[a] == g[b]));
            prop_assert_eq!(refines(0..25usize, |&a| f[a], |&a| g[a]).holds(), brute);
        }
    }
}
