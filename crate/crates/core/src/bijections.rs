//! The correspondence between Dyck paths of semilength `n` and star words of
//! length `n - 1`, and the constructive bijections built on top of it.
//!
//! Every constructive map is a short sequence of insertions into a star word.
//! Each insertion is "before the k-th X, or at the end" or "after the k-th X,
//! or at the beginning"; all of them go through [`insertion_index`]. Inverse
//! maps check their domain and return [`Error::DomainViolation`] instead of
//! guessing.

use crate::error::{Error, Result};
use crate::words::{AscDesc, DyckWord, MotzkinWord, StarInfo, StarWord, Step};

/// Where a block goes relative to the k-th occurrence of a letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Anchor {
    /// Before the k-th occurrence, or at the end if there is none.
    Before,
    /// After the k-th occurrence, or at the beginning when `k == 0`.
    After,
}

/// 0-based index of the k-th (1-based) letter matching `pred`.
fn nth_index(word: &[Step], k: usize, pred: impl Fn(Step) -> bool) -> Option<usize> {
    if k == 0 {
        return None;
    }
    word.iter()
        .enumerate()
        .filter(|(_, &s)| pred(s))
        .nth(k - 1)
        .map(|(i, _)| i)
}

fn nth_of(word: &[Step], letter: Step, k: usize) -> Option<usize> {
    nth_index(word, k, |s| s == letter)
}

/// The single positional primitive behind every insertion recipe.
pub fn insertion_index(word: &[Step], letter: Step, k: usize, anchor: Anchor) -> usize {
    match anchor {
        Anchor::Before => nth_of(word, letter, k).unwrap_or(word.len()),
        Anchor::After if k == 0 => 0,
        Anchor::After => nth_of(word, letter, k).map_or(word.len(), |i| i + 1),
    }
}

fn insert_block(word: &mut Vec<Step>, at: usize, block: &[Step]) {
    word.splice(at..at, block.iter().copied());
}

fn remove_indices(word: &[Step], mut indices: Vec<usize>) -> Vec<Step> {
    indices.sort_unstable();
    indices.dedup();
    word.iter()
        .enumerate()
        .filter(|(i, _)| indices.binary_search(i).is_err())
        .map(|(_, &s)| s)
        .collect()
}

/// Length of the longest prefix of `steps` that is a Motzkin path.
fn max_motzkin_prefix(steps: &[Step]) -> usize {
    let mut height = 0i64;
    let mut best = 0;
    for (i, &s) in steps.iter().enumerate() {
        match s {
            Step::U => height += 1,
            Step::D => height -= 1,
            Step::H => {}
            Step::Star => break,
        }
        if height < 0 {
            break;
        }
        if height == 0 {
            best = i + 1;
        }
    }
    best
}

/// Length of the longest suffix of `steps` that is a Motzkin path.
fn max_motzkin_suffix(steps: &[Step]) -> usize {
    let flipped: Vec<Step> = steps.iter().rev().map(|s| s.flipped()).collect();
    max_motzkin_prefix(&flipped)
}

fn missing(what: &str) -> Error {
    Error::DomainViolation(format!("star word has no {what}"))
}

// ---------------------------------------------------------------------------
// Dyck paths <-> star words

/// Encodes column `i` of the r-s array as letter `i` of the star word.
pub fn to_star_word(d: &DyckWord) -> Result<StarWord> {
    if d.semilength() == 0 {
        return Err(Error::EmptyPath);
    }
    let steps = d
        .rs_array()
        .columns
        .iter()
        .map(|&(r, s)| match (r > 0, s > 0) {
            (true, true) => Step::Star,
            (false, true) => Step::U,
            (true, false) => Step::D,
            (false, false) => Step::H,
        })
        .collect();
    Ok(StarWord::from_steps_unchecked(steps))
}

/// The Dyck path whose ascent sequence lists the positions of `d`/`*` and
/// whose descent sequence lists the positions of `u`/`*`, each closed by `n`.
pub fn from_star_word(w: &StarWord) -> DyckWord {
    let n = w.len() + 1;
    let positions = |keep: Step| -> Vec<usize> {
        w.steps()
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == keep || s == Step::Star)
            .map(|(i, _)| i + 1)
            .chain(std::iter::once(n))
            .collect()
    };
    let ad = AscDesc {
        asc: positions(Step::D),
        des: positions(Step::U),
    };
    ad.to_dyck()
        .expect("a star word always yields ascent/descent sequences with a_i >= b_i")
}

// ---------------------------------------------------------------------------
// Ballot decomposition

/// A ballot path `P` in `T_{n, r+s-1}` cut into `P_r` in `T_{l, r}` and
/// `P_s` in `T_{n-l, s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallotPair {
    pub p_r: MotzkinWord,
    pub p_s: MotzkinWord,
    pub r: usize,
    pub s: usize,
}

fn check_rs(r: usize, s: usize) -> Result<()> {
    if r == 0 || s == 0 {
        return Err(Error::BallotPreconditionViolated(format!(
            "r and s must be positive (got r={r}, s={s})"
        )));
    }
    Ok(())
}

/// Cuts out `P_s`, the maximal Motzkin subpath starting at entry `r`; what is
/// left is `P_r`.
pub fn split_ballot(p: &MotzkinWord, r: usize, s: usize) -> Result<BallotPair> {
    check_rs(r, s)?;
    let k = r + s - 1;
    if !p.in_ballot_class(k) {
        return Err(Error::BallotPreconditionViolated(format!(
            "{p} does not have its first down at position {k} and is not h^{}",
            k - 1
        )));
    }
    let steps = p.steps();
    let start = r - 1;
    let len = max_motzkin_prefix(&steps[start..]);
    let p_s = steps[start..start + len].to_vec();
    let mut p_r = steps[..start].to_vec();
    p_r.extend_from_slice(&steps[start + len..]);
    Ok(BallotPair {
        p_r: MotzkinWord::from_steps_unchecked(p_r),
        p_s: MotzkinWord::from_steps_unchecked(p_s),
        r,
        s,
    })
}

/// Inserts `P_s` after the `(r-1)`-st letter of `P_r`.
pub fn join_ballot(pair: &BallotPair) -> Result<MotzkinWord> {
    let BallotPair { p_r, p_s, r, s } = pair;
    check_rs(*r, *s)?;
    if !p_r.in_ballot_class(*r) {
        return Err(Error::BallotPreconditionViolated(format!(
            "P_r = {p_r} is not in T_(*, {r})"
        )));
    }
    if !p_s.in_ballot_class(*s) {
        return Err(Error::BallotPreconditionViolated(format!(
            "P_s = {p_s} is not in T_(*, {s})"
        )));
    }
    let mut steps = p_r.steps().to_vec();
    insert_block(&mut steps, r - 1, p_s.steps());
    Ok(MotzkinWord::from_steps_unchecked(steps))
}

/// Letter and column data of a Dyck path whose star word has exactly
/// `expected` stars.
fn starred(d: &DyckWord, expected: usize) -> Result<(StarWord, Vec<StarInfo>)> {
    let w = to_star_word(d)?;
    let stars = w.star_context().stars;
    if stars.len() != expected {
        return Err(Error::WrongStarCount {
            expected,
            found: stars.len(),
        });
    }
    Ok((w, stars))
}

// ---------------------------------------------------------------------------
// Single-star paths with two returns

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoReturnPreimage {
    pub p: MotzkinWord,
    pub r: usize,
    pub s: usize,
}

/// The star word `P_r^R * P_s` for `P` in `T_{n-2, r+s-1}`.
pub fn rs_two_returns_star_word(p: &MotzkinWord, r: usize, s: usize) -> Result<StarWord> {
    let pair = split_ballot(p, r, s)?;
    let mut steps = pair.p_r.reversed().into_steps();
    steps.push(Step::Star);
    steps.extend_from_slice(pair.p_s.steps());
    Ok(StarWord::from_steps_unchecked(steps))
}

/// Maps `P` in `T_{n-2, r+s-1}` to a path of semilength `n = |P| + 2` with a
/// single `(r, s)` star column and exactly two returns.
pub fn rs_two_returns_forward(p: &MotzkinWord, r: usize, s: usize) -> Result<DyckWord> {
    Ok(from_star_word(&rs_two_returns_star_word(p, r, s)?))
}

pub fn rs_two_returns_inverse(d: &DyckWord) -> Result<TwoReturnPreimage> {
    let (w, stars) = starred(d, 1)?;
    if d.returns() != 2 {
        return Err(Error::DomainViolation(format!(
            "expected exactly two returns, found {}",
            d.returns()
        )));
    }
    let k = stars[0].position;
    let (r, s) = d.rs_array().column(k);
    let before = MotzkinWord::from_steps(w.steps()[..k - 1].to_vec())
        .map_err(|_| Error::DomainViolation("prefix before the star is not Motzkin".into()))?;
    let after = MotzkinWord::from_steps(w.steps()[k..].to_vec())
        .map_err(|_| Error::DomainViolation("suffix after the star is not Motzkin".into()))?;
    let p = join_ballot(&BallotPair {
        p_r: before.reversed(),
        p_s: after,
        r,
        s,
    })?;
    Ok(TwoReturnPreimage { p, r, s })
}

// ---------------------------------------------------------------------------
// Single-star paths with one return

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneReturnPreimage {
    pub m: MotzkinWord,
    pub p: MotzkinWord,
    /// 1-based insertion point of the star into `m`, in `1..=|m|+1`.
    pub j: usize,
    pub r: usize,
    pub s: usize,
}

fn check_slot(name: &'static str, j: usize, high: usize) -> Result<()> {
    if j == 0 || j > high {
        return Err(Error::IndexOutOfRange {
            name,
            value: j,
            low: 1,
            high,
        });
    }
    Ok(())
}

/// Star word built from `M` (length `i`), `P` in `T_{n-4-i, r+s-1}` and a
/// star slot `j` in `1..=i+1`.
pub fn rs_one_return_star_word(
    m: &MotzkinWord,
    p: &MotzkinWord,
    j: usize,
    r: usize,
    s: usize,
) -> Result<StarWord> {
    let pair = split_ballot(p, r, s)?;
    check_slot("j", j, m.len() + 1)?;
    let mut w = m.steps().to_vec();
    w.insert(j - 1, Step::Star);
    let x_bar = w[..j - 1].iter().filter(|&&c| c == Step::U).count();
    let y_bar = w[..j - 1].iter().filter(|&&c| c == Step::D).count();

    let mut block = vec![Step::D];
    block.extend_from_slice(pair.p_s.steps());
    let at = insertion_index(&w, Step::D, x_bar + 1, Anchor::Before);
    insert_block(&mut w, at, &block);

    let mut block = pair.p_r.reversed().into_steps();
    block.push(Step::U);
    let at = insertion_index(&w, Step::U, y_bar, Anchor::After);
    insert_block(&mut w, at, &block);

    Ok(StarWord::from_steps_unchecked(w))
}

pub fn rs_one_return_forward(
    m: &MotzkinWord,
    p: &MotzkinWord,
    j: usize,
    r: usize,
    s: usize,
) -> Result<DyckWord> {
    Ok(from_star_word(&rs_one_return_star_word(m, p, j, r, s)?))
}

pub fn rs_one_return_inverse(d: &DyckWord) -> Result<OneReturnPreimage> {
    let (w, stars) = starred(d, 1)?;
    if d.returns() != 1 {
        return Err(Error::DomainViolation(format!(
            "expected a single return, found {}",
            d.returns()
        )));
    }
    let star = stars[0];
    let (r, s) = d.rs_array().column(star.position);
    let (x, y) = (star.ups_before, star.downs_before);
    let steps = w.steps();

    let inserted_d = nth_of(steps, Step::D, x).ok_or_else(|| missing("x-th down"))?;
    let p1_len = max_motzkin_prefix(&steps[inserted_d + 1..]);
    let inserted_u = nth_of(steps, Step::U, y + 1).ok_or_else(|| missing("(y+1)-st up"))?;
    let p2_len = max_motzkin_suffix(&steps[..inserted_u]);

    let p1 = steps[inserted_d + 1..inserted_d + 1 + p1_len].to_vec();
    let p2 = steps[inserted_u - p2_len..inserted_u].to_vec();

    let mut drop: Vec<usize> = (inserted_u - p2_len..=inserted_u).collect();
    drop.extend(inserted_d..=inserted_d + p1_len);
    let m_bar = remove_indices(steps, drop);
    let j = m_bar
        .iter()
        .position(|&c| c == Step::Star)
        .ok_or_else(|| missing("star after deletions"))?
        + 1;
    let m = StarWord::from_steps(m_bar)
        .map_err(|e| Error::DomainViolation(format!("remainder is not a star word: {e}")))?
        .without_stars();
    let p = join_ballot(&BallotPair {
        p_r: MotzkinWord::from_steps_unchecked(p2).reversed(),
        p_s: MotzkinWord::from_steps_unchecked(p1),
        r,
        s,
    })?;
    Ok(OneReturnPreimage { m, p, j, r, s })
}

// ---------------------------------------------------------------------------
// Two-star paths with L = 4

fn is_ds(s: Step) -> bool {
    matches!(s, Step::D | Step::Star)
}

fn is_us(s: Step) -> bool {
    matches!(s, Step::U | Step::Star)
}

/// Decides, from the letters alone, whether both star columns of a
/// two-star word equal `(1, 1)`.
pub fn dm_check(w: &StarWord) -> Result<bool> {
    let stars = w.star_context().stars;
    if stars.len() != 2 {
        return Err(Error::WrongStarCount {
            expected: 2,
            found: stars.len(),
        });
    }
    let steps = w.steps();
    let (x1, y1) = (stars[0].ups_before, stars[0].downs_before);
    let (x2, y2) = (stars[1].ups_before, stars[1].downs_before);
    let followed_by = |idx: Option<usize>, pred: fn(Step) -> bool| {
        idx.and_then(|i| steps.get(i + 1)).is_some_and(|&c| pred(c))
    };

    let first = followed_by(nth_index(steps, x1 + 1, is_ds), is_ds);
    let second = followed_by(nth_index(steps, x2 + 2, is_ds), is_ds)
        || (x2 == w.count(Step::D) && steps.last().is_some_and(|&c| is_ds(c)));
    let third = if y1 == 0 {
        steps.first().is_some_and(|&c| is_us(c))
    } else {
        followed_by(nth_index(steps, y1, is_us), is_us)
    };
    let fourth = followed_by(nth_index(steps, y2 + 1, is_us), is_us);
    Ok(first && second && third && fourth)
}

/// The four disjoint kinds of two-star `L = 4` paths, keyed on how the ups
/// before the first star compare with the downs before the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum L4Kind {
    /// `x1` not in `{y2, y2 + 1}`.
    Type1,
    /// `x1 = 1`, `y2 = 0`.
    Type2,
    /// `x1 = y2 + 1 >= 2`.
    Type3,
    /// `x1 = y2`.
    Type4,
}

impl L4Kind {
    pub const ALL: [L4Kind; 4] = [L4Kind::Type1, L4Kind::Type2, L4Kind::Type3, L4Kind::Type4];

    fn of(x1: usize, y2: usize) -> L4Kind {
        if x1 == y2 {
            L4Kind::Type4
        } else if x1 == y2 + 1 {
            if x1 == 1 {
                L4Kind::Type2
            } else {
                L4Kind::Type3
            }
        } else {
            L4Kind::Type1
        }
    }
}

/// Star data of a path in the two-star `L = 4` class, or a domain error.
struct TwoStar {
    word: Vec<Step>,
    x1: usize,
    y1: usize,
    x2: usize,
    y2: usize,
}

fn two_star(d: &DyckWord) -> Result<TwoStar> {
    let (w, stars) = starred(d, 2)?;
    let rs = d.rs_array();
    for st in &stars {
        if rs.column(st.position) != (1, 1) {
            return Err(Error::DomainViolation(format!(
                "star column {} is {:?}, not (1, 1)",
                st.position,
                rs.column(st.position)
            )));
        }
    }
    Ok(TwoStar {
        word: w.into_steps(),
        x1: stars[0].ups_before,
        y1: stars[0].downs_before,
        x2: stars[1].ups_before,
        y2: stars[1].downs_before,
    })
}

/// Which of the four kinds a path belongs to; `None` outside the two-star
/// `L = 4` class.
pub fn l4_kind(d: &DyckWord) -> Option<L4Kind> {
    two_star(d).ok().map(|t| L4Kind::of(t.x1, t.y2))
}

fn expect_kind(t: &TwoStar, kind: L4Kind) -> Result<()> {
    let found = L4Kind::of(t.x1, t.y2);
    if found != kind {
        return Err(Error::DomainViolation(format!(
            "x1 = {}, y2 = {} puts the path in {found:?}, not {kind:?}",
            t.x1, t.y2
        )));
    }
    Ok(())
}

fn star_positions(w: &[Step]) -> Vec<usize> {
    w.iter()
        .enumerate()
        .filter(|(_, &c)| c == Step::Star)
        .map(|(i, _)| i)
        .collect()
}

fn ups_downs(w: &[Step]) -> (usize, usize) {
    (
        w.iter().filter(|&&c| c == Step::U).count(),
        w.iter().filter(|&&c| c == Step::D).count(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Type1Preimage {
    pub m: MotzkinWord,
    pub j1: usize,
    pub j2: usize,
}

/// `M` has length `n - 7`; the stars go to positions `j1 < j2 <= n - 5` of
/// the intermediate word.
pub fn l4_type1_star_word(m: &MotzkinWord, j1: usize, j2: usize) -> Result<StarWord> {
    let high = m.len() + 2;
    check_slot("j2", j2, high)?;
    check_slot("j1", j1, j2 - 1)?;
    let mut w = m.steps().to_vec();
    w.insert(j1 - 1, Step::Star);
    w.insert(j2 - 1, Step::Star);
    let (x1, y1) = ups_downs(&w[..j1 - 1]);
    let (x2, y2) = ups_downs(&w[..j2 - 1]);

    let at = insertion_index(&w, Step::D, x2 + 1, Anchor::Before);
    w.insert(at, Step::D);
    let at = insertion_index(&w, Step::D, x1 + 1, Anchor::Before);
    w.insert(at, Step::D);
    let at = insertion_index(&w, Step::U, y2, Anchor::After);
    w.insert(at, Step::U);
    let at = insertion_index(&w, Step::U, y1, Anchor::After);
    w.insert(at, Step::U);
    Ok(StarWord::from_steps_unchecked(w))
}

pub fn l4_type1_forward(m: &MotzkinWord, j1: usize, j2: usize) -> Result<DyckWord> {
    Ok(from_star_word(&l4_type1_star_word(m, j1, j2)?))
}

pub fn l4_type1_inverse(d: &DyckWord) -> Result<Type1Preimage> {
    let t = two_star(d)?;
    expect_kind(&t, L4Kind::Type1)?;
    let w = &t.word;
    // The second inserted up lands after the first star exactly when x1 < y2;
    // otherwise both inserted ups precede the first star and both inserted
    // downs follow the second, shifting the ranks below by one.
    let (d_ranks, u_ranks) = if t.x1 < t.y2 {
        ([t.x2, t.x1], [t.y2 + 1, t.y1 + 1])
    } else {
        ([t.x2, t.x1 - 1], [t.y2 + 2, t.y1 + 1])
    };
    let mut drop = Vec::with_capacity(4);
    for k in d_ranks {
        drop.push(nth_of(w, Step::D, k).ok_or_else(|| missing("inserted down"))?);
    }
    for k in u_ranks {
        drop.push(nth_of(w, Step::U, k).ok_or_else(|| missing("inserted up"))?);
    }
    let m_bar = remove_indices(w, drop);
    let stars = star_positions(&m_bar);
    let m = StarWord::from_steps(m_bar)
        .map_err(|e| Error::DomainViolation(e.to_string()))?
        .without_stars();
    Ok(Type1Preimage {
        m,
        j1: stars[0] + 1,
        j2: stars[1] + 1,
    })
}

/// `M` has length `n - 5`.
pub fn l4_type2_star_word(m: &MotzkinWord) -> StarWord {
    let mut w = m.steps().to_vec();
    let first_down = w.iter().position(|&c| c == Step::D).unwrap_or(w.len());
    let (x2, _) = ups_downs(&w[..first_down]);
    let at = insertion_index(&w, Step::D, x2 + 1, Anchor::Before);
    w.insert(at, Step::D);
    let at = insertion_index(&w, Step::D, 1, Anchor::Before);
    w.insert(at, Step::Star);
    insert_block(&mut w, 0, &[Step::U, Step::Star]);
    StarWord::from_steps_unchecked(w)
}

pub fn l4_type2_forward(m: &MotzkinWord) -> DyckWord {
    from_star_word(&l4_type2_star_word(m))
}

pub fn l4_type2_inverse(d: &DyckWord) -> Result<MotzkinWord> {
    let t = two_star(d)?;
    expect_kind(&t, L4Kind::Type2)?;
    let w = &t.word;
    if w.len() < 2 || w[..2] != [Step::U, Step::Star] {
        return Err(Error::DomainViolation(
            "star word does not start with u*".into(),
        ));
    }
    let mut drop = star_positions(w);
    drop.push(0);
    drop.push(nth_of(w, Step::D, t.x2).ok_or_else(|| missing("x2-th down"))?);
    let rest = remove_indices(w, drop);
    MotzkinWord::from_steps(rest).map_err(|e| Error::DomainViolation(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPreimage {
    pub m: MotzkinWord,
    pub p: MotzkinWord,
    /// 1-based slot in `1..=|m|+1` where the block was inserted.
    pub j: usize,
}

/// Shared tail of the type 3 and type 4 constructions: place the second
/// star, then one up and one down.
fn finish_pair_word(
    mut w: Vec<Step>,
    second_star_at: impl Fn(&[Step], usize) -> usize,
) -> Vec<Step> {
    let star = w
        .iter()
        .position(|&c| c == Step::Star)
        .expect("block holds a star");
    let (x1, y1) = ups_downs(&w[..star]);
    let at = second_star_at(&w, x1);
    w.insert(at, Step::Star);
    let (x2, _) = ups_downs(&w[..at]);
    let at = insertion_index(&w, Step::U, y1, Anchor::After);
    w.insert(at, Step::U);
    let at = insertion_index(&w, Step::D, x2 + 1, Anchor::Before);
    w.insert(at, Step::D);
    w
}

fn pair_base(m: &MotzkinWord, p: &MotzkinWord, j: usize, head: [Step; 2]) -> Result<Vec<Step>> {
    check_slot("j", j, m.len() + 1)?;
    let mut block = head.to_vec();
    block.extend_from_slice(p.steps());
    block.push(Step::D);
    let mut w = m.steps().to_vec();
    insert_block(&mut w, j - 1, &block);
    Ok(w)
}

/// `M` has length `i`, `P` length `n - 7 - i`; the block `u*Pd` goes in
/// front of entry `j` of `M`.
pub fn l4_type3_star_word(m: &MotzkinWord, p: &MotzkinWord, j: usize) -> Result<StarWord> {
    let w = pair_base(m, p, j, [Step::U, Step::Star])?;
    let w = finish_pair_word(w, |w, x1| {
        insertion_index(w, Step::D, x1 + 1, Anchor::Before)
    });
    Ok(StarWord::from_steps_unchecked(w))
}

pub fn l4_type3_forward(m: &MotzkinWord, p: &MotzkinWord, j: usize) -> Result<DyckWord> {
    Ok(from_star_word(&l4_type3_star_word(m, p, j)?))
}

/// Undoes the up/star/down insertions common to types 3 and 4.
fn strip_pair_word(t: &TwoStar) -> Result<Vec<Step>> {
    let w = &t.word;
    let stars = star_positions(w);
    let drop = vec![
        nth_of(w, Step::D, t.x2).ok_or_else(|| missing("x2-th down"))?,
        stars[1],
        nth_of(w, Step::U, t.y1 + 1).ok_or_else(|| missing("(y1+1)-st up"))?,
    ];
    Ok(remove_indices(w, drop))
}

fn motzkin(steps: &[Step]) -> Result<MotzkinWord> {
    MotzkinWord::from_steps(steps.to_vec()).map_err(|e| Error::DomainViolation(e.to_string()))
}

pub fn l4_type3_inverse(d: &DyckWord) -> Result<PairPreimage> {
    let t = two_star(d)?;
    expect_kind(&t, L4Kind::Type3)?;
    let w = strip_pair_word(&t)?;
    let star = w
        .iter()
        .position(|&c| c == Step::Star)
        .ok_or_else(|| missing("star"))?;
    if star == 0 || w[star - 1] != Step::U {
        return Err(Error::DomainViolation("star is not preceded by u".into()));
    }
    let p_len = max_motzkin_prefix(&w[star + 1..]);
    let close = star + 1 + p_len;
    if w.get(close) != Some(&Step::D) {
        return Err(Error::DomainViolation("block is not closed by d".into()));
    }
    let p = motzkin(&w[star + 1..close])?;
    let rest = remove_indices(&w, (star - 1..=close).collect());
    Ok(PairPreimage {
        m: motzkin(&rest)?,
        p,
        j: star,
    })
}

/// `M` has length `i`, `P` length `n - 7 - i`; the block `*uPd` goes in
/// front of entry `j` of `M`.
pub fn l4_type4_star_word(m: &MotzkinWord, p: &MotzkinWord, j: usize) -> Result<StarWord> {
    let w = pair_base(m, p, j, [Step::Star, Step::U])?;
    let w = finish_pair_word(w, |w, x1| {
        insertion_index(w, Step::D, x1 + 1, Anchor::After)
    });
    Ok(StarWord::from_steps_unchecked(w))
}

pub fn l4_type4_forward(m: &MotzkinWord, p: &MotzkinWord, j: usize) -> Result<DyckWord> {
    Ok(from_star_word(&l4_type4_star_word(m, p, j)?))
}

/// The lone semilength-3 member of the type 4 class, with star word `**`.
pub fn l4_type4_singleton() -> DyckWord {
    from_star_word(&StarWord::from_steps_unchecked(vec![
        Step::Star,
        Step::Star,
    ]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Type4Preimage {
    Singleton,
    Pair(PairPreimage),
}

pub fn l4_type4_inverse(d: &DyckWord) -> Result<Type4Preimage> {
    let t = two_star(d)?;
    expect_kind(&t, L4Kind::Type4)?;
    if t.word == [Step::Star, Step::Star] {
        return Ok(Type4Preimage::Singleton);
    }
    let w = strip_pair_word(&t)?;
    let star = w
        .iter()
        .position(|&c| c == Step::Star)
        .ok_or_else(|| missing("star"))?;
    if w.get(star + 1) != Some(&Step::U) {
        return Err(Error::DomainViolation("star is not followed by u".into()));
    }
    let p_len = max_motzkin_prefix(&w[star + 2..]);
    let close = star + 2 + p_len;
    if w.get(close) != Some(&Step::D) {
        return Err(Error::DomainViolation("block is not closed by d".into()));
    }
    let p = motzkin(&w[star + 2..close])?;
    let rest = remove_indices(&w, (star..=close).collect());
    Ok(Type4Preimage::Pair(PairPreimage {
        m: motzkin(&rest)?,
        p,
        j: star + 1,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn mw(s: &str) -> MotzkinWord {
        MotzkinWord::parse(s).unwrap()
    }

    fn sw(s: &str) -> StarWord {
        StarWord::parse(s).unwrap()
    }

    fn dyck(s: &str) -> DyckWord {
        DyckWord::parse(s).unwrap()
    }

    #[test]
    fn insertion_primitive_boundaries() {
        let w = sw("udhud").into_steps();
        assert_eq!(insertion_index(&w, Step::D, 1, Anchor::Before), 1);
        assert_eq!(insertion_index(&w, Step::D, 3, Anchor::Before), 5);
        assert_eq!(insertion_index(&w, Step::U, 0, Anchor::After), 0);
        assert_eq!(insertion_index(&w, Step::U, 2, Anchor::After), 4);
        assert_eq!(insertion_index(&[], Step::D, 1, Anchor::Before), 0);
    }

    #[test]
    fn star_word_examples() {
        let d = dyck("uudduuduuudduuududdudduuuddddd");
        assert_eq!(to_star_word(&d).unwrap().to_string(), "h*uduuduh*ddhh");
        let d = dyck("uuuuudduudddduuduudddd");
        assert_eq!(to_star_word(&d).unwrap().to_string(), "huhhdu*hdh");
        assert!(to_star_word(&dyck("ud")).unwrap().is_empty());
        assert_eq!(to_star_word(&dyck("")), Err(Error::EmptyPath));

        let back = from_star_word(&sw("h*uduuduh*ddhh"));
        let ad = back.asc_desc();
        assert_eq!(ad.asc, vec![2, 4, 7, 10, 11, 12, 15]);
        assert_eq!(ad.des, vec![2, 3, 5, 6, 8, 10, 15]);
        assert_eq!(from_star_word(&sw("hhhh")), DyckWord::pyramid(5));
        let rs = from_star_word(&sw("udud")).rs_array();
        assert_eq!(rs.r_row(), vec![0, 1, 0, 2]);
        assert_eq!(rs.s_row(), vec![2, 0, 1, 0]);
        assert_eq!(from_star_word(&sw("")).to_string(), "ud");
    }

    #[test]
    fn ballot_split_and_join() {
        let pair = split_ballot(&mw("uhuhhdhhdudud"), 3, 4).unwrap();
        assert_eq!(pair.p_s.to_string(), "uhhdhh");
        assert_eq!(pair.p_r.to_string(), "uhdudud");
        assert_eq!(join_ballot(&pair).unwrap().to_string(), "uhuhhdhhdudud");

        for (r, s) in [(1, 1), (2, 3), (4, 1)] {
            let flat = MotzkinWord::flat(r + s - 2);
            let pair = split_ballot(&flat, r, s).unwrap();
            assert_eq!(pair.p_r, MotzkinWord::flat(r - 1));
            assert_eq!(pair.p_s, MotzkinWord::flat(s - 1));
            assert_eq!(join_ballot(&pair).unwrap(), flat);
        }

        assert!(matches!(
            split_ballot(&mw("uhuhhdhhdudud"), 2, 4),
            Err(Error::BallotPreconditionViolated(_))
        ));
        assert!(split_ballot(&mw("hhh"), 1, 2).is_err());
        assert!(split_ballot(&mw(""), 0, 1).is_err());
    }

    #[test]
    fn two_return_example() {
        let p = mw("uhuhhdhhdudud");
        let w = rs_two_returns_star_word(&p, 3, 4).unwrap();
        assert_eq!(w.to_string(), "ududuhd*uhhdhh");
        let d = rs_two_returns_forward(&p, 3, 4).unwrap();
        assert_eq!(d.to_string(), "uuduudduuudduddduuuuduuudddddd");
        let ad = d.asc_desc();
        assert_eq!(ad.asc, vec![2, 4, 7, 8, 12, 15]);
        assert_eq!(ad.des, vec![1, 3, 5, 8, 9, 15]);
        assert_eq!(d.returns(), 2);
        assert_eq!(d.l_statistic(), BigUint::from(35u32));
        let back = rs_two_returns_inverse(&d).unwrap();
        assert_eq!(back, TwoReturnPreimage { p, r: 3, s: 4 });

        let d = rs_two_returns_forward(&MotzkinWord::empty(), 1, 1).unwrap();
        assert_eq!(d.to_string(), "udud");
    }

    #[test]
    fn one_return_boundaries() {
        let m = mw("uudhudd");
        let p = mw("uhuhhdhhdudud");
        let first = rs_one_return_star_word(&m, &p, 1, 3, 4).unwrap();
        assert_eq!(first.to_string(), "ududuhdu*uuduhhdhhdhudd");
        let last = rs_one_return_star_word(&m, &p, 8, 3, 4).unwrap();
        assert_eq!(last.to_string(), "uudhuududuhdudd*duhhdhh");
        assert!(matches!(
            rs_one_return_forward(&m, &p, 9, 3, 4),
            Err(Error::IndexOutOfRange {
                name: "j",
                value: 9,
                ..
            })
        ));
        assert!(rs_one_return_forward(&m, &p, 0, 3, 4).is_err());
        let d =
            rs_one_return_forward(&MotzkinWord::empty(), &MotzkinWord::empty(), 1, 1, 1).unwrap();
        assert_eq!(to_star_word(&d).unwrap().to_string(), "u*d");
        assert_eq!(d.returns(), 1);
        assert_eq!(
            rs_one_return_inverse(&d).unwrap(),
            OneReturnPreimage {
                m: MotzkinWord::empty(),
                p: MotzkinWord::empty(),
                j: 1,
                r: 1,
                s: 1
            }
        );
    }

    #[test]
    fn inverses_reject_foreign_inputs() {
        let two = rs_two_returns_forward(&mw("uhuhhdhhdudud"), 3, 4).unwrap();
        assert!(matches!(
            rs_one_return_inverse(&two),
            Err(Error::DomainViolation(_))
        ));
        assert!(matches!(
            rs_two_returns_inverse(&DyckWord::pyramid(4)),
            Err(Error::WrongStarCount {
                expected: 1,
                found: 0
            })
        ));
        // ududud has two stars
        assert!(matches!(
            rs_two_returns_inverse(&dyck("ududud")),
            Err(Error::WrongStarCount {
                expected: 1,
                found: 2
            })
        ));
        let t1 = l4_type1_forward(&mw("hudh"), 2, 5).unwrap();
        assert!(matches!(
            l4_type2_inverse(&t1),
            Err(Error::DomainViolation(_))
        ));
        assert!(matches!(
            l4_type3_inverse(&t1),
            Err(Error::DomainViolation(_))
        ));
        assert!(matches!(
            l4_type4_inverse(&t1),
            Err(Error::DomainViolation(_))
        ));
    }

    #[test]
    fn dm_check_examples() {
        assert_eq!(dm_check(&sw("uh*uudd*hd")), Ok(true));
        assert_eq!(dm_check(&sw("**")), Ok(true));
        assert_eq!(from_star_word(&sw("**")).to_string(), "ududud");
        // the flat step between the stars widens both columns
        let w = sw("*h*");
        assert_eq!(dm_check(&w), Ok(false));
        let d = from_star_word(&w);
        assert_ne!(d.l_statistic(), BigUint::from(4u32));
        assert_eq!(
            dm_check(&sw("u*d")),
            Err(Error::WrongStarCount {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn l4_examples() {
        let m = mw("hudh");
        let w = l4_type1_star_word(&m, 2, 5).unwrap();
        assert_eq!(w.to_string(), "uh*uudd*hd");
        let w = l4_type1_star_word(&m, 2, 4).unwrap();
        assert_eq!(w.to_string(), "uuh*u*ddhd");
        assert!(l4_type1_star_word(&m, 4, 4).is_err());
        assert!(l4_type1_star_word(&m, 1, 7).is_err());

        assert_eq!(l4_type2_star_word(&mw("huudhd")).to_string(), "u*huu*dhdd");
        let w = l4_type2_star_word(&MotzkinWord::empty());
        assert_eq!(w.to_string(), "u**d");
        assert_eq!(from_star_word(&w).l_statistic(), BigUint::from(4u32));

        let w = l4_type3_star_word(&mw("ud"), &mw("hh"), 1).unwrap();
        assert_eq!(w.to_string(), "uu*hhdu*dd");
        let w = l4_type4_star_word(&mw("ud"), &mw("hh"), 1).unwrap();
        assert_eq!(w.to_string(), "u*uhhd*udd");

        let single = l4_type4_singleton();
        assert_eq!(single.to_string(), "ududud");
        assert_eq!(l4_type4_inverse(&single), Ok(Type4Preimage::Singleton));

        for w in [
            "uh*uudd*hd",
            "uuh*u*ddhd",
            "u*huu*dhdd",
            "uu*hhdu*dd",
            "u*uhhd*udd",
        ] {
            let d = from_star_word(&sw(w));
            assert_eq!(d.l_statistic(), BigUint::from(4u32), "{w}");
        }
    }

    #[test]
    fn l4_inverse_examples() {
        let d = l4_type1_forward(&mw("hudh"), 2, 4).unwrap();
        assert_eq!(
            l4_type1_inverse(&d).unwrap(),
            Type1Preimage {
                m: mw("hudh"),
                j1: 2,
                j2: 4
            }
        );
        let d = l4_type2_forward(&mw("huudhd"));
        assert_eq!(l4_type2_inverse(&d).unwrap(), mw("huudhd"));
        let d = l4_type3_forward(&mw("ud"), &mw("hh"), 1).unwrap();
        assert_eq!(
            l4_type3_inverse(&d).unwrap(),
            PairPreimage {
                m: mw("ud"),
                p: mw("hh"),
                j: 1
            }
        );
        let d = l4_type4_forward(&mw("ud"), &mw("hh"), 1).unwrap();
        assert_eq!(
            l4_type4_inverse(&d).unwrap(),
            Type4Preimage::Pair(PairPreimage {
                m: mw("ud"),
                p: mw("hh"),
                j: 1
            })
        );
    }
}
