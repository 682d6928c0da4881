//! Parameter selection, the color-count bound, and the lower-bound recursion.
//!
//! Padding `n` up to `N = 2^{β^{p+1}}` turns the bound
//! `2^{4 (log N)^{1-1/(p+1)} log log N}` into the integer
//! `β^{4 (p+1) β^p}`, which is what [`bound`] reports exactly.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::vectors::ResolutionChain;

/// Parameters of the construction for `K_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub beta: usize,
    /// `α = β^{p+1}`, so the padded vertex count is `2^α`.
    pub alpha: usize,
    pub chain: ResolutionChain,
}

/// `⌈log₂ n⌉` for `n ≥ 1`.
fn ceil_log2(n: &BigUint) -> u64 {
    if n.is_one() {
        0
    } else {
        (n - 1u32).bits()
    }
}

/// The least `β ≥ 2` with `2^{β^{p+1}} ≥ n`, with `α = β^{p+1}` and
/// `r_d = β^d`.
pub fn choose_params(n: &BigUint, p: usize) -> Result<Params> {
    if *n < BigUint::from(2u32) || p < 1 {
        return Err(Error::Domain(format!("need n >= 2 and p >= 1 (n={n}, p={p})")));
    }
    let need = ceil_log2(n);
    let exp = u32::try_from(p + 1).map_err(|_| Error::Domain("p too large".into()))?;
    let mut beta: u64 = 2;
    while beta.checked_pow(exp).is_some_and(|a| a < need) {
        beta += 1;
    }
    let alpha = beta
        .checked_pow(exp)
        .and_then(|a| usize::try_from(a).ok())
        .ok_or_else(|| Error::Domain(format!("β^(p+1) overflows for n={n}, p={p}")))?;
    let beta = beta as usize;
    Ok(Params { beta, alpha, chain: ResolutionChain::geometric(beta, p)? })
}

/// Bound exponents above this many bits are reported by logarithm only.
pub const EXACT_BOUND_BITS: f64 = (1u64 << 20) as f64;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: String,
    pub p: usize,
    pub beta: usize,
    pub alpha: usize,
    /// `log₂ N` for the padded `N = 2^α`.
    pub padded_log2: usize,
    /// `β^{4(p+1)β^p}` in decimal, unless too large to print.
    pub bound: Option<String>,
    /// `log₂` of the bound at `N`, exact when `β` is a power of two.
    pub bound_log2_exact: Option<String>,
    pub bound_log2: f64,
    /// The formula evaluated directly at `n` rather than at `N`.
    pub bound_log2_at_n: f64,
    /// Exact color count of `c_p` on `{0,1}^α`, when computed.
    pub colors: Option<u64>,
}

/// `4 (log x)^{1 - 1/(p+1)} log log x` in `f64`, the `log₂` of the bound
/// where `log x = log2x`.
pub fn formula_log2(log2x: f64, p: usize) -> f64 {
    if log2x <= 1.0 {
        return 0.0;
    }
    4.0 * log2x.powf(1.0 - 1.0 / (p as f64 + 1.0)) * log2x.log2()
}

pub fn bound(n: &BigUint, p: usize) -> Result<BoundReport> {
    let params = choose_params(n, p)?;
    let beta = BigUint::from(params.beta);
    let exponent = BigUint::from(4 * (p + 1)) * beta.pow(p as u32);
    let exp_f = exponent.to_f64().unwrap_or(f64::INFINITY);
    let bound_log2 = exp_f * (params.beta as f64).log2();
    let bound =
        (bound_log2 <= EXACT_BOUND_BITS).then(|| beta.pow(exponent.to_u32().expect("small exponent")).to_string());
    let bound_log2_exact = params.beta.is_power_of_two().then(|| (exponent * params.beta.trailing_zeros()).to_string());
    let log2n = match n.to_f64() {
        Some(x) if x.is_finite() => x.log2(),
        _ => n.bits() as f64,
    };
    Ok(BoundReport {
        n: n.to_string(),
        p,
        beta: params.beta,
        alpha: params.alpha,
        padded_log2: params.alpha,
        bound,
        bound_log2_exact,
        bound_log2,
        bound_log2_at_n: formula_log2(log2n, p),
        colors: None,
    })
}

/// One certified lower bound `f(n, p, q) ≥ k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub n: String,
    pub p: usize,
    pub q: usize,
    pub k: String,
}

/// Iterates `f(n·f(n,p-1,q-1), p, q) ≥ f(n,p-1,q-1)` from a base bound
/// `f(n₀, p₀, q₀) ≥ k₀`: `N ← N·k`, `p ← p+1`, `q ← q+1`, `k` unchanged.
pub fn lower_bound_chain(n0: &BigUint, p0: usize, q0: usize, k0: &BigUint, steps: usize) -> Result<Vec<ChainStep>> {
    if *n0 < BigUint::one() || *k0 < BigUint::one() {
        return Err(Error::Domain("base needs n >= 1 and k >= 1".into()));
    }
    let mut n = n0.clone();
    let mut out = vec![ChainStep { n: n.to_string(), p: p0, q: q0, k: k0.to_string() }];
    for i in 1..=steps {
        n *= k0;
        out.push(ChainStep { n: n.to_string(), p: p0 + i, q: q0 + i, k: k0.to_string() });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn params_for_sixteen() {
        let p = choose_params(&big(16), 1).unwrap();
        assert_eq!((p.beta, p.alpha, p.chain.to_string()), (2, 4, "1,2,4".to_string()));
        assert_eq!(choose_params(&big(17), 1).unwrap().beta, 3);
        assert_eq!(choose_params(&big(512), 1).unwrap().alpha, 9);
        assert_eq!(choose_params(&big(256), 2).unwrap().chain.to_string(), "1,2,4,8");
        assert!(choose_params(&big(1), 1).is_err());
    }

    #[test]
    fn padding_identity_and_least_beta() {
        for p in 1..4usize {
            for beta in 2..5u32 {
                let alpha = beta.pow(p as u32 + 1);
                let n = BigUint::one() << alpha;
                let got = choose_params(&n, p).unwrap();
                assert_eq!((got.beta, got.alpha), (beta as usize, alpha as usize));
                let above = choose_params(&(n + 1u32), p).unwrap();
                assert_eq!(above.beta, beta as usize + 1);
            }
        }
    }

    #[test]
    fn bound_values() {
        let b = bound(&big(16), 1).unwrap();
        assert_eq!(b.bound.as_deref(), Some("65536"));
        assert_eq!(b.bound_log2_exact.as_deref(), Some("16"));
        assert!((b.bound_log2 - 16.0).abs() < 1e-9);
        assert!((b.bound_log2_at_n - 16.0).abs() < 1e-9);
        let b = bound(&big(512), 1).unwrap();
        assert_eq!(b.bound, Some(big(3).pow(24).to_string()));
        assert_eq!(b.bound_log2_exact, None);
        let b = bound(&big(256), 2).unwrap();
        assert_eq!(b.bound, Some((BigUint::one() << 48u32).to_string()));
    }

    #[test]
    fn float_formula_agrees_with_exact_form() {
        for (p, beta) in [(1usize, 2u32), (1, 3), (2, 2), (3, 2), (2, 5)] {
            let alpha = beta.pow(p as u32 + 1) as f64;
            let exact = 4.0 * (p as f64 + 1.0) * (beta as f64).powi(p as i32) * (beta as f64).log2();
            assert!((formula_log2(alpha, p) - exact).abs() < 1e-6 * exact);
        }
    }

    #[test]
    fn huge_n_is_handled_by_logarithm() {
        let n = BigUint::one() << 5000u32;
        let b = bound(&n, 1).unwrap();
        assert_eq!(b.beta, 71);
        assert!(b.bound.is_some());
        let b = bound(&n, 3).unwrap();
        assert!(b.bound_log2 > 0.0);
    }

    #[test]
    fn recursion() {
        let c = lower_bound_chain(&big(3), 3, 2, &big(2), 1).unwrap();
        assert_eq!(c[1], ChainStep { n: "6".into(), p: 4, q: 3, k: "2".into() });
        let ones = lower_bound_chain(&big(7), 3, 2, &big(1), 5).unwrap();
        assert!(ones.iter().all(|s| s.k == "1" && s.n == "7"));
        let c = lower_bound_chain(&big(10), 4, 3, &big(5), 1).unwrap();
        assert_eq!((c[1].n.as_str(), c[1].p, c[1].q, c[1].k.as_str()), ("50", 5, 4, "5"));
        let long = lower_bound_chain(&big(3), 3, 2, &big(2), 100).unwrap();
        assert_eq!(long[100].n, (big(3) << 100u32).to_string());
    }
}
