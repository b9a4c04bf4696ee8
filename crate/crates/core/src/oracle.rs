//! Brute-force enumerators used to check every closed form.
//!
//! Nothing here relies on the star-word machinery except
//! [`Oracle::filter_by_star_signature`], which reads the r-s array directly.
//! Parallel counts split the search by word prefix and merge commutative
//! tallies, so results do not depend on the worker count.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::words::{binomial, Axis, CatalanWord, DyckWord, MotzkinWord, StarWord, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBounds {
    /// Largest semilength for Dyck enumeration.
    pub dyck_n: usize,
    /// Largest `n` for Catalan words of length `3n`.
    pub catalan_n: usize,
    /// Largest permutation length.
    pub permutation_m: usize,
    /// Largest Motzkin word length.
    pub motzkin_len: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            dyck_n: 14,
            catalan_n: 6,
            permutation_m: 9,
            motzkin_len: 16,
        }
    }
}

fn bound(what: &'static str, requested: usize, bound: usize) -> Result<()> {
    if requested > bound {
        return Err(Error::OracleBoundExceeded {
            what,
            requested,
            bound,
        });
    }
    Ok(())
}

/// Enumeration entry point. `workers == 0` uses the global rayon pool.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Oracle {
    pub bounds: OracleBounds,
    pub workers: usize,
}

/// Dyck words of one semilength in lexicographic order (`u < d`).
#[derive(Clone, Debug)]
pub struct DyckWords {
    current: Option<Vec<Step>>,
}

impl DyckWords {
    fn new(n: usize) -> Self {
        let mut first = vec![Step::U; n];
        first.extend(std::iter::repeat_n(Step::D, n));
        DyckWords {
            current: Some(first),
        }
    }
}

/// Lexicographic successor: the rightmost `u` that can become `d`, followed
/// by the smallest completion.
fn successor(w: &[Step]) -> Option<Vec<Step>> {
    let n = w.len() / 2;
    let mut height = 0usize;
    let mut ups = 0usize;
    let mut pivot = None;
    for (i, &s) in w.iter().enumerate() {
        if s == Step::U {
            if height >= 1 {
                pivot = Some((i, height, ups));
            }
            height += 1;
            ups += 1;
        } else {
            height -= 1;
        }
    }
    let (i, height, ups) = pivot?;
    let mut next = w[..i].to_vec();
    next.push(Step::D);
    let remaining_ups = n - ups;
    next.extend(std::iter::repeat_n(Step::U, remaining_ups));
    next.extend(std::iter::repeat_n(Step::D, height - 1 + remaining_ups));
    Some(next)
}

impl Iterator for DyckWords {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        let w = self.current.take()?;
        self.current = successor(&w);
        Some(DyckWord::from_steps(w).expect("successor preserves the Dyck property"))
    }
}

/// Calls `f` on every Dyck word of semilength `n` starting with `prefix`.
fn complete_dyck(
    n: usize,
    prefix: &mut Vec<Step>,
    ups: usize,
    height: usize,
    f: &mut impl FnMut(&DyckWord),
) {
    if prefix.len() == 2 * n {
        f(&DyckWord::from_steps(prefix.clone()).expect("built as a Dyck word"));
        return;
    }
    if ups < n {
        prefix.push(Step::U);
        complete_dyck(n, prefix, ups + 1, height + 1, f);
        prefix.pop();
    }
    if height > 0 {
        prefix.push(Step::D);
        complete_dyck(n, prefix, ups, height - 1, f);
        prefix.pop();
    }
}

/// Valid Dyck prefixes of length `len` with their up counts and heights.
fn dyck_prefixes(n: usize, len: usize) -> Vec<(Vec<Step>, usize, usize)> {
    let mut out = vec![(Vec::new(), 0, 0)];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * 2);
        for (p, ups, h) in out {
            if ups < n {
                let mut q = p.clone();
                q.push(Step::U);
                next.push((q, ups + 1, h + 1));
            }
            if h > 0 {
                let mut q = p;
                q.push(Step::D);
                next.push((q, ups, h - 1));
            }
        }
        out = next;
    }
    out
}

fn merge_counts<K: Ord>(mut a: BTreeMap<K, u64>, b: BTreeMap<K, u64>) -> BTreeMap<K, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

impl Oracle {
    pub fn new(bounds: OracleBounds) -> Self {
        Oracle { bounds, workers: 0 }
    }

    pub fn with_workers(self, workers: usize) -> Self {
        Oracle { workers, ..self }
    }

    pub fn enum_dyck(&self, n: usize) -> Result<DyckWords> {
        bound("Dyck semilength", n, self.bounds.dyck_n)?;
        Ok(DyckWords::new(n))
    }

    /// Tallies `key(D)` over all of `D_n`, in parallel by prefix.
    pub fn tally<K, F>(&self, n: usize, key: F) -> Result<BTreeMap<K, u64>>
    where
        K: Ord + Send,
        F: Fn(&DyckWord) -> Option<K> + Sync,
    {
        bound("Dyck semilength", n, self.bounds.dyck_n)?;
        let prefixes = dyck_prefixes(n, (2 * n).min(10));
        let run = || {
            prefixes
                .into_par_iter()
                .map(|(mut prefix, ups, height)| {
                    let mut local = BTreeMap::new();
                    complete_dyck(n, &mut prefix, ups, height, &mut |d| {
                        if let Some(k) = key(d) {
                            *local.entry(k).or_insert(0) += 1;
                        }
                    });
                    local
                })
                .reduce(BTreeMap::new, merge_counts)
        };
        if self.workers == 0 {
            Ok(run())
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.workers)
                .build()
                .map_err(|e| Error::DomainViolation(format!("cannot start worker pool: {e}")))?;
            Ok(pool.install(run))
        }
    }

    /// Number of `D` in `D_n` with each value of `L(D)`.
    pub fn l_histogram(&self, n: usize) -> Result<BTreeMap<BigUint, u64>> {
        self.tally(n, |d| Some(d.l_statistic()))
    }

    /// Number of `D` in `D_n` with each pair `(L(D), returns(D))`.
    pub fn joint_histogram(&self, n: usize) -> Result<BTreeMap<(BigUint, usize), u64>> {
        self.tally(n, |d| Some((d.l_statistic(), d.returns())))
    }

    /// Number of `D` in `D_n` whose star columns contribute exactly the
    /// binomial factors in `signature` (as a multiset).
    pub fn filter_by_star_signature(&self, n: usize, signature: &[u64]) -> Result<u64> {
        let mut want: Vec<BigUint> = signature.iter().map(|&v| BigUint::from(v)).collect();
        want.sort();
        let counts = self.tally(n, |d| {
            let mut got: Vec<BigUint> = d
                .rs_array()
                .columns
                .iter()
                .filter(|(r, s)| *r > 0 && *s > 0)
                .map(|&(r, s)| binomial(r + s, r))
                .collect();
            got.sort();
            (got == want).then_some(())
        })?;
        Ok(counts.get(&()).copied().unwrap_or(0))
    }

    /// All Motzkin words of length `len`, ordered `u < d < h`.
    pub fn enum_motzkin(&self, len: usize) -> Result<Vec<MotzkinWord>> {
        bound("Motzkin length", len, self.bounds.motzkin_len)?;
        fn go(len: usize, acc: &mut Vec<Step>, height: usize, out: &mut Vec<MotzkinWord>) {
            let left = len - acc.len();
            if left == 0 {
                out.push(MotzkinWord::from_steps(acc.clone()).expect("built as a Motzkin word"));
                return;
            }
            if height + 2 <= left {
                acc.push(Step::U);
                go(len, acc, height + 1, out);
                acc.pop();
            }
            if height > 0 {
                acc.push(Step::D);
                go(len, acc, height - 1, out);
                acc.pop();
            }
            if height < left {
                acc.push(Step::H);
                go(len, acc, height, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(len, &mut Vec::new(), 0, &mut out);
        Ok(out)
    }

    /// All star words of length `len`: Motzkin words whose flat steps may
    /// each be `h` or `*`.
    pub fn enum_star_words(&self, len: usize) -> Result<Vec<StarWord>> {
        let mut out = Vec::new();
        for m in self.enum_motzkin(len)? {
            let flats: Vec<usize> = (0..len).filter(|&i| m.steps()[i] == Step::H).collect();
            for mask in 0u64..(1 << flats.len()) {
                let mut steps = m.steps().to_vec();
                for (bit, &i) in flats.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        steps[i] = Step::Star;
                    }
                }
                out.push(StarWord::from_steps(steps).expect("stars replace flat steps"));
            }
        }
        Ok(out)
    }

    /// Motzkin words of length `len` in the ballot class `T_{len,k}`.
    pub fn enum_ballot(&self, len: usize, k: usize) -> Result<Vec<MotzkinWord>> {
        Ok(self
            .enum_motzkin(len)?
            .into_iter()
            .filter(|p| p.in_ballot_class(k))
            .collect())
    }

    /// Catalan words of length `3n`, ordered `x < y < z`.
    pub fn enum_catalan_words(&self, n: usize) -> Result<Vec<CatalanWord>> {
        bound("Catalan word size", n, self.bounds.catalan_n)?;
        let mut out = Vec::new();
        catalan_dfs(n, &mut Vec::new(), [0; 3], &mut |_, _| true, &mut out);
        Ok(out)
    }

    /// Catalan words `C` with `D_xy(C) = D_yz(C) = D`.
    pub fn words_matching(&self, d: &DyckWord) -> Result<u64> {
        let n = d.semilength();
        bound("Catalan word size", n, self.bounds.catalan_n)?;
        let target = d.steps();
        // Prune on the projections as letters are placed; the full check is
        // repeated on every completed word.
        let mut consistent = |w: &[Axis], next: Axis| {
            let mut w = w.to_vec();
            w.push(next);
            let xy = project(&w, Axis::X, Axis::Y);
            let yz = project(&w, Axis::Y, Axis::Z);
            target.starts_with(&xy) && target.starts_with(&yz)
        };
        let mut out = Vec::new();
        catalan_dfs(n, &mut Vec::new(), [0; 3], &mut consistent, &mut out);
        Ok(out
            .iter()
            .filter(|c| c.xy_projection() == *d && c.yz_projection() == *d)
            .count() as u64)
    }

    /// Permutations of `1..=m` made only of 3-cycles and avoiding 321.
    pub fn enum_321_3cycle(&self, m: usize) -> Result<u64> {
        bound("permutation length", m, self.bounds.permutation_m)?;
        if !m.is_multiple_of(3) {
            return Err(Error::DomainViolation(format!(
                "permutation length {m} is not a multiple of 3"
            )));
        }
        Ok(all_three_cycle_permutations(m)
            .iter()
            .filter(|p| avoids_321(p))
            .count() as u64)
    }
}

fn project(w: &[Axis], up: Axis, down: Axis) -> Vec<Step> {
    w.iter()
        .filter_map(|&a| {
            if a == up {
                Some(Step::U)
            } else if a == down {
                Some(Step::D)
            } else {
                None
            }
        })
        .collect()
}

fn catalan_dfs(
    n: usize,
    acc: &mut Vec<Axis>,
    counts: [usize; 3],
    allow: &mut impl FnMut(&[Axis], Axis) -> bool,
    out: &mut Vec<CatalanWord>,
) {
    if acc.len() == 3 * n {
        out.push(CatalanWord::from_letters_unchecked(acc.clone()));
        return;
    }
    let [x, y, z] = counts;
    let options = [
        (Axis::X, x < n, [x + 1, y, z]),
        (Axis::Y, y < x, [x, y + 1, z]),
        (Axis::Z, z < y, [x, y, z + 1]),
    ];
    for (letter, ok, next) in options {
        if ok && allow(acc, letter) {
            acc.push(letter);
            catalan_dfs(n, acc, next, allow, out);
            acc.pop();
        }
    }
}

/// Every permutation of `1..=m` (one-line, 1-based values) whose cycles all
/// have length 3. Each cycle is opened at its smallest remaining element.
pub fn all_three_cycle_permutations(m: usize) -> Vec<Vec<usize>> {
    fn go(perm: &mut Vec<usize>, free: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if free.is_empty() {
            out.push(perm.clone());
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            for j in 0..free.len() {
                if i == j {
                    continue;
                }
                let (b, c) = (free[i], free[j]);
                perm[a - 1] = b;
                perm[b - 1] = c;
                perm[c - 1] = a;
                let mut rest: Vec<usize> =
                    free.iter().copied().filter(|&v| v != b && v != c).collect();
                go(perm, &mut rest, out);
            }
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    if m.is_multiple_of(3) {
        go(&mut vec![0; m], &mut (1..=m).collect(), &mut out);
    }
    out
}

/// No `i < j < k` with `p_i > p_j > p_k`.
pub fn avoids_321(p: &[usize]) -> bool {
    (0..p.len()).all(|j| {
        let bigger_left = p[..j].iter().any(|&a| a > p[j]);
        let smaller_right = p[j + 1..].iter().any(|&c| c < p[j]);
        !(bigger_left && smaller_right)
    })
}

/// Cycle lengths of a one-line permutation with 1-based values.
pub fn cycle_lengths(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut lengths = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] - 1;
            len += 1;
        }
        lengths.push(len);
    }
    lengths
}
