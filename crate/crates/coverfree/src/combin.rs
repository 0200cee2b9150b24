//! Binomial coefficients, canonical subset orderings, and small bit tricks.
//!
//! Two orderings of the `k`-element subsets of the naturals are used
//! throughout the crate:
//!
//! - **colex** (colexicographic): compare the largest differing element.
//!   The `k`-subsets of `{0, …, n-1}` form an initial segment of this order,
//!   which makes colex ranks the canonical point labels for designs whose
//!   points are subsets.
//! - **lex** (lexicographic on the sorted tuple): the order verifiers scan
//!   in, so the reported witness is always the lexicographically first
//!   violation.

/// `C(n, k)`, saturating at `u128::MAX`.
///
/// Uses the multiplicative form with division at every step, so the result
/// is exact whenever it fits. Values within a factor of `n` of `u128::MAX`
/// may saturate early; every quantity this crate computes is far below that.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 1..=k {
        let f = (n - k + i) as u128;
        r = match r.checked_mul(f) {
            Some(p) => p / i as u128,
            None => return u128::MAX,
        };
    }
    r
}

/// Smallest `e` with `2^e >= x`. By convention `ceil_log2(0) == 0`.
pub fn ceil_log2(x: usize) -> u32 {
    if x <= 1 {
        0
    } else {
        usize::BITS - (x - 1).leading_zeros()
    }
}

fn assert_strictly_increasing(subset: &[usize]) {
    for w in subset.windows(2) {
        assert!(w[0] < w[1], "subset must be sorted strictly increasing");
    }
}

/// Colex rank of a strictly increasing subset: `Σ C(s_i, i+1)`.
pub fn colex_rank(subset: &[usize]) -> u128 {
    assert_strictly_increasing(subset);
    subset
        .iter()
        .enumerate()
        .map(|(i, &s)| binomial(s, i + 1))
        .sum()
}

/// Inverse of [`colex_rank`] for subsets of size `k`.
pub fn colex_unrank(mut rank: u128, k: usize) -> Vec<usize> {
    let mut out = vec![0usize; k];
    for i in (1..=k).rev() {
        // Largest c with C(c, i) <= rank. C(i-1, i) == 0 so the scan starts
        // at the smallest legal element for this position.
        let mut c = i - 1;
        while binomial(c + 1, i) <= rank {
            c += 1;
        }
        rank -= binomial(c, i);
        out[i - 1] = c;
    }
    out
}

/// Lex rank of a `k`-subset of `{0, …, n-1}` among all such subsets.
pub fn lex_rank(subset: &[usize], n: usize) -> u128 {
    assert_strictly_increasing(subset);
    let k = subset.len();
    assert!(subset.last().map_or(true, |&s| s < n), "element out of range");
    let mut rank: u128 = 0;
    let mut prev = 0usize;
    for (i, &s) in subset.iter().enumerate() {
        for c in prev..s {
            rank += binomial(n - 1 - c, k - 1 - i);
        }
        prev = s + 1;
    }
    rank
}

/// Inverse of [`lex_rank`]: the `rank`-th `k`-subset of `{0, …, n-1}`.
pub fn lex_unrank(mut rank: u128, k: usize, n: usize) -> Vec<usize> {
    assert!(k <= n, "k must be at most n");
    debug_assert!(rank < binomial(n, k), "rank out of range");
    let mut out = Vec::with_capacity(k);
    let mut c = 0usize;
    for i in 0..k {
        loop {
            let count = binomial(n - 1 - c, k - 1 - i);
            if rank < count {
                break;
            }
            rank -= count;
            c += 1;
        }
        out.push(c);
        c += 1;
    }
    out
}

/// Iterator over the `k`-subsets of `{0, …, n-1}` in lex order.
pub struct LexSubsets {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl LexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        let cur = if k <= n { Some((0..k).collect()) } else { None };
        LexSubsets { n, cur }
    }
}

impl Iterator for LexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.cur.take()?;
        let k = cur.len();
        let mut next = cur.clone();
        // Rightmost position that can still advance.
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - (k - i) {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.cur = Some(next);
                return Some(cur);
            }
        }
        Some(cur)
    }
}

/// Iterator over all `k`-subsets of the naturals in colex order.
///
/// The first `C(n, k)` items are exactly the `k`-subsets of `{0, …, n-1}`.
pub struct ColexSubsets {
    cur: Vec<usize>,
    started: bool,
    done: bool,
}

impl ColexSubsets {
    pub fn new(k: usize) -> Self {
        ColexSubsets { cur: (0..k).collect(), started: false, done: false }
    }
}

impl Iterator for ColexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.cur.is_empty() {
                self.done = true;
                return Some(Vec::new());
            }
            return Some(self.cur.clone());
        }
        let k = self.cur.len();
        // Smallest position whose element can grow without colliding with
        // its right neighbour; everything below it resets to 0, 1, ….
        let mut i = 0;
        while i + 1 < k && self.cur[i] + 1 == self.cur[i + 1] {
            i += 1;
        }
        self.cur[i] += 1;
        for j in 0..i {
            self.cur[j] = j;
        }
        Some(self.cur.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_small_table() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(5, 7), 0);
        assert_eq!(binomial(52, 5), 2_598_960);
        assert_eq!(binomial(40, 20), 137_846_528_820);
    }

    #[test]
    fn binomial_saturates_instead_of_overflowing() {
        assert_eq!(binomial(200, 100), u128::MAX);
        // C(130, 65) still fits in a u128.
        assert!(binomial(130, 65) < u128::MAX);
    }

    #[test]
    fn binomial_pascal_identity() {
        for n in 1..40 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn ceil_log2_values() {
        assert_eq!(ceil_log2(0), 0);
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(4), 2);
        assert_eq!(ceil_log2(5), 3);
        assert_eq!(ceil_log2(64), 6);
        assert_eq!(ceil_log2(65), 7);
    }

    #[test]
    fn colex_known_values() {
        assert_eq!(colex_rank(&[0]), 0);
        assert_eq!(colex_unrank(0, 2), vec![0, 1]);
        assert_eq!(colex_rank(&[1, 3]), 4);
        assert_eq!(colex_unrank(4, 2), vec![1, 3]);
        assert_eq!(colex_unrank(0, 0), Vec::<usize>::new());
        assert_eq!(colex_rank(&[]), 0);
    }

    #[test]
    fn colex_initial_segment_is_subsets_of_n() {
        for n in 0..=10usize {
            for k in 0..=n {
                let count = binomial(n, k) as usize;
                let subs: Vec<Vec<usize>> = ColexSubsets::new(k).take(count).collect();
                assert_eq!(subs.len(), count);
                for (i, s) in subs.iter().enumerate() {
                    assert!(s.iter().all(|&x| x < n));
                    assert_eq!(colex_rank(s), i as u128);
                    assert_eq!(colex_unrank(i as u128, k), *s);
                }
            }
        }
    }

    #[test]
    fn lex_enumeration_matches_rank_and_unrank() {
        for n in 0..=10usize {
            for k in 0..=n {
                let subs: Vec<Vec<usize>> = LexSubsets::new(n, k).collect();
                assert_eq!(subs.len(), binomial(n, k) as usize);
                for (i, s) in subs.iter().enumerate() {
                    assert_eq!(lex_rank(s, n), i as u128);
                    assert_eq!(lex_unrank(i as u128, k, n), *s);
                }
                // Lex order on sorted tuples.
                for w in subs.windows(2) {
                    assert!(w[0] < w[1]);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn colex_rank_unrank_roundtrip(items in proptest::collection::btree_set(0usize..64, 0..8)) {
            let subset: Vec<usize> = items.iter().copied().collect();
            let rank = colex_rank(&subset);
            prop_assert_eq!(colex_unrank(rank, subset.len()), subset);
        }

        #[test]
        fn lex_rank_unrank_roundtrip(items in proptest::collection::btree_set(0usize..12, 0..12)) {
            let subset: Vec<usize> = items.iter().copied().collect();
            let rank = lex_rank(&subset, 12);
            prop_assert_eq!(lex_unrank(rank, subset.len(), 12), subset);
        }
    }
}
