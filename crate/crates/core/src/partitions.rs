//! Streaming enumeration of the index sets behind the Bell-type sums.
//!
//! * `pi(n, k)`: tuples `(j_1, ..., j_{n-k+1})` with `sum j_i = k` and
//!   `sum i*j_i = n`.
//! * `lambda(n, k, rho)`: pairs `(k_i)_{i>=1}`, `(r_i)_{i>=0}` with
//!   `sum k_i = k`, `sum r_i = rho` and `sum i*(k_i + r_i) = n`.
//!
//! Both streams run a depth-first search over slot counts, trying the
//! largest feasible count first, so witnesses come out in reverse
//! lexicographic order of the tuple read from index 1 upward.

use num_traits::Zero;

use crate::exact::{factorial_table, ExactInteger};

/// A member of `pi(n, k)`. `j[0]` holds `j_1`; length is always `n - k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiWitness {
    pub j: Vec<usize>,
}

impl PiWitness {
    /// `sum j_i`.
    pub fn parts(&self) -> usize {
        self.j.iter().sum()
    }

    /// `sum i * j_i`.
    pub fn weight(&self) -> usize {
        self.j.iter().enumerate().map(|(i, &c)| (i + 1) * c).sum()
    }
}

/// A member of `lambda(n, k, rho)`.
///
/// `k_part[0]` is `k_1`, `r_part[0]` is `r_0`. Trailing zeros are trimmed so
/// that equal witnesses compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaWitness {
    pub k_part: Vec<usize>,
    pub r_part: Vec<usize>,
}

impl LambdaWitness {
    pub fn k_total(&self) -> usize {
        self.k_part.iter().sum()
    }

    pub fn r_total(&self) -> usize {
        self.r_part.iter().sum()
    }

    /// `sum_{i>=1} i * (k_i + r_i)`.
    pub fn weight(&self) -> usize {
        let from_k: usize = self
            .k_part
            .iter()
            .enumerate()
            .map(|(i, &c)| (i + 1) * c)
            .sum();
        let from_r: usize = self.r_part.iter().enumerate().map(|(i, &c)| i * c).sum();
        from_k + from_r
    }
}

#[derive(Debug, Clone, Copy)]
struct Slot {
    group: usize,
    weight: usize,
}

/// Depth-first search over nonnegative counts `c_s`, one per slot, subject to
/// `sum_{s in group g} c_s = target_g` (or free when the target is `None`)
/// and `sum c_s * weight_s = total_weight`.
#[derive(Debug, Clone)]
struct SlotSearch {
    slots: Vec<Slot>,
    targets: Vec<Option<usize>>,
    // suffix_bounds[p][g] = (min, max) weight among slots p.. of group g
    suffix_bounds: Vec<Vec<Option<(usize, usize)>>>,
    values: Vec<usize>,
    rem_count: Vec<usize>,
    rem_weight: usize,
    depth: usize,
    state: SearchState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SearchState {
    Fresh,
    Running,
    Done,
}

impl SlotSearch {
    fn new(slots: Vec<Slot>, targets: Vec<Option<usize>>, total_weight: usize) -> Self {
        let groups = targets.len();
        let mut suffix_bounds: Vec<Vec<Option<(usize, usize)>>> =
            vec![vec![None; groups]; slots.len() + 1];
        for p in (0..slots.len()).rev() {
            suffix_bounds[p] = suffix_bounds[p + 1].clone();
            let s = slots[p];
            suffix_bounds[p][s.group] = Some(match suffix_bounds[p + 1][s.group] {
                Some((lo, hi)) => (lo.min(s.weight), hi.max(s.weight)),
                None => (s.weight, s.weight),
            });
        }
        for (g, t) in targets.iter().enumerate() {
            if t.is_none() {
                assert!(
                    slots.iter().all(|s| s.group != g || s.weight > 0),
                    "free groups need positive weights"
                );
            }
        }
        let rem_count = targets.iter().map(|t| t.unwrap_or(0)).collect();
        SlotSearch {
            values: vec![0; slots.len()],
            slots,
            targets,
            suffix_bounds,
            rem_count,
            rem_weight: total_weight,
            depth: 0,
            state: SearchState::Fresh,
        }
    }

    /// Can slots `p..` still absorb the remaining counts and weight?
    fn feasible(&self, p: usize) -> bool {
        let mut lo = 0usize;
        let mut hi = 0usize;
        let mut unbounded = false;
        for (g, target) in self.targets.iter().enumerate() {
            match (target, self.suffix_bounds[p][g]) {
                (Some(_), None) if self.rem_count[g] > 0 => return false,
                (Some(_), None) => {}
                (Some(_), Some((min_w, max_w))) => {
                    lo += self.rem_count[g] * min_w;
                    hi += self.rem_count[g] * max_w;
                }
                (None, Some(_)) => unbounded = true,
                (None, None) => {}
            }
        }
        self.rem_weight >= lo && (unbounded || self.rem_weight <= hi)
    }

    fn assign(&mut self, p: usize, v: usize) {
        let s = self.slots[p];
        self.values[p] = v;
        if self.targets[s.group].is_some() {
            self.rem_count[s.group] -= v;
        }
        self.rem_weight -= v * s.weight;
    }

    fn unassign(&mut self, p: usize) -> usize {
        let s = self.slots[p];
        let v = std::mem::take(&mut self.values[p]);
        if self.targets[s.group].is_some() {
            self.rem_count[s.group] += v;
        }
        self.rem_weight += v * s.weight;
        v
    }

    fn max_count(&self, p: usize) -> usize {
        let s = self.slots[p];
        let by_weight = self.rem_weight.checked_div(s.weight);
        match (self.targets[s.group], by_weight) {
            (Some(_), Some(w)) => self.rem_count[s.group].min(w),
            (Some(_), None) => self.rem_count[s.group],
            (None, Some(w)) => w,
            (None, None) => unreachable!("free groups have positive weights"),
        }
    }

    /// Tries counts `start, start-1, ..., 0` at slot `p` and keeps the first
    /// that leaves a feasible suffix.
    fn place(&mut self, p: usize, start: usize) -> bool {
        for v in (0..=start).rev() {
            self.assign(p, v);
            if self.feasible(p + 1) {
                return true;
            }
            self.unassign(p);
        }
        false
    }

    fn complete(&self) -> bool {
        self.rem_weight == 0 && self.rem_count.iter().all(|&c| c == 0)
    }

    /// Greedy descent from `self.depth`; true when a full valid leaf is hit.
    fn descend(&mut self) -> bool {
        while self.depth < self.slots.len() {
            let p = self.depth;
            let start = self.max_count(p);
            if !self.place(p, start) {
                return false;
            }
            self.depth += 1;
        }
        self.complete()
    }

    fn advance(&mut self) -> bool {
        loop {
            if self.depth == 0 {
                return false;
            }
            self.depth -= 1;
            let p = self.depth;
            let v = self.unassign(p);
            if v == 0 {
                continue;
            }
            if self.place(p, v - 1) {
                self.depth += 1;
                if self.descend() {
                    return true;
                }
            }
        }
    }
}

impl Iterator for SlotSearch {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let found = match self.state {
            SearchState::Done => return None,
            SearchState::Fresh => {
                self.state = SearchState::Running;
                (self.feasible(0) && self.descend()) || self.advance()
            }
            SearchState::Running => self.advance(),
        };
        if found {
            Some(self.values.clone())
        } else {
            self.state = SearchState::Done;
            None
        }
    }
}

/// Stream over `pi(n, k)`.
#[derive(Debug, Clone)]
pub struct PiStream {
    search: Option<SlotSearch>,
}

impl Iterator for PiStream {
    type Item = PiWitness;

    fn next(&mut self) -> Option<PiWitness> {
        self.search.as_mut()?.next().map(|j| PiWitness { j })
    }
}

/// Enumerates `pi(n, k)`; empty when `k > n`.
pub fn enumerate_pi(n: usize, k: usize) -> PiStream {
    if k > n {
        return PiStream { search: None };
    }
    let slots = (1..=n - k + 1)
        .map(|i| Slot {
            group: 0,
            weight: i,
        })
        .collect();
    PiStream {
        search: Some(SlotSearch::new(slots, vec![Some(k)], n)),
    }
}

/// Stream over `lambda(n, k, rho)`.
#[derive(Debug, Clone)]
pub struct LambdaStream {
    search: Option<SlotSearch>,
    n: usize,
}

impl Iterator for LambdaStream {
    type Item = LambdaWitness;

    fn next(&mut self) -> Option<LambdaWitness> {
        let values = self.search.as_mut()?.next()?;
        let (ks, rs) = values.split_at(self.n);
        Some(LambdaWitness {
            k_part: trimmed(ks),
            r_part: trimmed(rs),
        })
    }
}

/// Enumerates `lambda(n, k, rho)`; empty when `k > n`.
pub fn enumerate_lambda(n: usize, k: usize, rho: usize) -> LambdaStream {
    if k > n {
        return LambdaStream { search: None, n };
    }
    let slots = (1..=n)
        .map(|i| Slot {
            group: 0,
            weight: i,
        })
        .chain((0..=n).map(|i| Slot {
            group: 1,
            weight: i,
        }))
        .collect();
    LambdaStream {
        search: Some(SlotSearch::new(slots, vec![Some(k), Some(rho)], n)),
        n,
    }
}

/// Multiplicity vectors `(m_1, ..., m_n)` with `sum i*m_i = n`, i.e. the
/// integer partitions of `n`, largest `m_1` first.
pub(crate) fn partition_multiplicities(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let slots = (1..=n)
        .map(|i| Slot {
            group: 0,
            weight: i,
        })
        .collect();
    SlotSearch::new(slots, vec![None], n)
}

/// Ordered tuples of `parts` nonnegative integers summing to `total`.
pub(crate) fn weak_compositions(total: usize, parts: usize) -> impl Iterator<Item = Vec<usize>> {
    // every slot has weight 1 in one counted group; the counts are the parts
    let slots = (0..parts)
        .map(|_| Slot {
            group: 0,
            weight: 1,
        })
        .collect();
    let targets = vec![Some(total)];
    SlotSearch::new(slots, targets, total)
}

fn trimmed(values: &[usize]) -> Vec<usize> {
    let end = values.iter().rposition(|&v| v != 0).map_or(0, |p| p + 1);
    values[..end].to_vec()
}

/// `L(n, k)` as the `pi(n, k)` sum of `n! / prod j_i!`.
pub fn lah_via_pi(n: usize, k: usize) -> ExactInteger {
    let fact = factorial_table(n.max(1));
    enumerate_pi(n, k)
        .map(|w| {
            let den: ExactInteger = w.j.iter().map(|&c| &fact[c]).product();
            &fact[n] / den
        })
        .sum()
}

/// `L_r(n, k)` as the `lambda(n, k, 2r)` sum of
/// `n!/prod k_i! * (2r)!/prod r_i!`.
pub fn rlah_via_lambda(n: usize, k: usize, r: usize) -> ExactInteger {
    let fact = factorial_table(n.max(2 * r));
    enumerate_lambda(n, k, 2 * r)
        .map(|w| {
            let k_den: ExactInteger = w.k_part.iter().map(|&c| &fact[c]).product();
            let r_den: ExactInteger = w.r_part.iter().map(|&c| &fact[c]).product();
            (&fact[n] / k_den) * (&fact[2 * r] / r_den)
        })
        .fold(ExactInteger::zero(), |acc, t| acc + t)
}
