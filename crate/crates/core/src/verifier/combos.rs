//! k-subsets of `0..n` in colexicographic order.

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is exact at every step
        let Some(next) = acc.checked_mul((n - i) as u128) else {
            return u128::MAX;
        };
        acc = next / (i + 1) as u128;
    }
    acc
}

/// Colex rank of a sorted subset: `Σ C(c_i, i+1)`.
pub fn rank(subset: &[usize]) -> u128 {
    subset.iter().enumerate().map(|(i, &c)| binomial(c as u64, i as u64 + 1)).sum()
}

/// The subset of size `k` with colex rank `r`.
pub fn unrank(mut r: u128, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for i in (0..k).rev() {
        let slot = i as u64 + 1;
        // largest c with C(c, slot) <= r
        let mut c = i as u64;
        while binomial(c + 1, slot) <= r {
            c += 1;
        }
        r -= binomial(c, slot);
        out[i] = c as usize;
    }
    out
}

/// Advances `subset` to its colex successor within `0..n`; returns false
/// after the last subset.
pub fn next_colex(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    for i in 0..k {
        let limit = if i + 1 < k { subset[i + 1] } else { n };
        if subset[i] + 1 < limit {
            subset[i] += 1;
            for (j, s) in subset[..i].iter_mut().enumerate() {
                *s = j;
            }
            return true;
        }
    }
    false
}

/// Iterator over all k-subsets of `0..n` in colex order.
pub struct Colex {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Colex {
    pub fn new(n: usize, k: usize) -> Self {
        Colex { n, current: (k <= n).then(|| (0..k).collect()) }
    }
}

impl Iterator for Colex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        if cur.is_empty() || !next_colex(cur, self.n) {
            self.current = None;
        }
        Some(out)
    }
}
