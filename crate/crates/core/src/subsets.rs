//! Enumeration of fixed-size index subsets in colexicographic order.

/// Iterates over all `k`-subsets of `0..n` in colex order: `{0,1}, {0,2},
/// {1,2}, {0,3}, ...` (compare largest elements first).
#[derive(Clone, Debug)]
pub struct Colex {
    current: Vec<usize>,
    n: usize,
    done: bool,
}

impl Colex {
    pub fn new(n: usize, k: usize) -> Self {
        Colex {
            current: (0..k).collect(),
            n,
            done: k > n,
        }
    }
}

impl Iterator for Colex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        // Bump the lowest position that can move without colliding with its
        // successor, then reset everything below it.
        let mut i = 0;
        loop {
            if i == k {
                self.done = true;
                break;
            }
            let limit = if i + 1 < k { self.current[i + 1] } else { self.n };
            if self.current[i] + 1 < limit {
                self.current[i] += 1;
                for (j, slot) in self.current[..i].iter_mut().enumerate() {
                    *slot = j;
                }
                break;
            }
            i += 1;
        }
        Some(out)
    }
}

/// Colex rank of a sorted subset; inverse of the enumeration position.
pub fn colex_rank(subset: &[usize]) -> u128 {
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c as u64, i as u64 + 1))
        .sum()
}

/// `C(n, k)` with `C(n, k) = 0` for `k > n`. Saturates at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
