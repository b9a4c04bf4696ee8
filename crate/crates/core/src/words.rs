//! Lattice words: Dyck, Motzkin, star-decorated Motzkin, and 3-dimensional
//! Catalan words, together with the path statistics defined on Dyck words.
//!
//! All words serialize to lowercase ASCII: `u`, `d`, `h`, `*` for path steps
//! and `x`, `y`, `z` for Catalan letters. Positions reported to callers are
//! 1-based.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// One letter of a path word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
    H,
    /// The marker letter `*` of a star word.
    Star,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::U => 'u',
            Step::D => 'd',
            Step::H => 'h',
            Step::Star => '*',
        }
    }

    pub fn from_char(ch: char) -> Option<Step> {
        match ch {
            'u' => Some(Step::U),
            'd' => Some(Step::D),
            'h' => Some(Step::H),
            '*' => Some(Step::Star),
            _ => None,
        }
    }

    /// Swaps `U` and `D`, leaving other letters alone.
    pub fn flipped(self) -> Step {
        match self {
            Step::U => Step::D,
            Step::D => Step::U,
            other => other,
        }
    }
}

pub(crate) fn render(steps: &[Step]) -> String {
    steps.iter().map(|s| s.as_char()).collect()
}

fn parse_steps(text: &str, allowed: &[Step], alphabet: &'static str) -> Result<Vec<Step>> {
    text.chars()
        .enumerate()
        .map(|(i, ch)| match Step::from_char(ch) {
            Some(step) if allowed.contains(&step) => Ok(step),
            _ => Err(Error::InvalidCharacter {
                ch,
                position: i + 1,
                alphabet,
            }),
        })
        .collect()
}

/// Checks that the non-star letters of `steps` never dip below the axis and
/// end on it.
fn check_path(steps: &[Step]) -> Result<()> {
    let mut height: i64 = 0;
    for (i, step) in steps.iter().enumerate() {
        match step {
            Step::U => height += 1,
            Step::D => height -= 1,
            Step::H | Step::Star => {}
        }
        if height < 0 {
            return Err(Error::PrefixViolation { position: i + 1 });
        }
    }
    if height != 0 {
        return Err(Error::UnbalancedWord(format!(
            "path ends at height {height}"
        )));
    }
    Ok(())
}

macro_rules! word_common {
    ($ty:ident) => {
        impl $ty {
            pub fn steps(&self) -> &[Step] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn into_steps(self) -> Vec<Step> {
                self.0
            }

            pub fn count(&self, step: Step) -> usize {
                self.0.iter().filter(|&&s| s == step).count()
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&render(&self.0))
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                $ty::parse(s)
            }
        }
    };
}

/// A Dyck path of semilength `n`, stored as its `2n` steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWord(Vec<Step>);

/// A Motzkin path: `u`, `d`, `h` steps that never dip below the axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MotzkinWord(Vec<Step>);

/// A modified Motzkin word: deleting every `*` leaves a Motzkin path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StarWord(Vec<Step>);

word_common!(DyckWord);
word_common!(MotzkinWord);
word_common!(StarWord);

impl DyckWord {
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_steps(parse_steps(text, &[Step::U, Step::D], "dyck")?)
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        if let Some(pos) = steps.iter().position(|s| !matches!(s, Step::U | Step::D)) {
            return Err(Error::InvalidCharacter {
                ch: steps[pos].as_char(),
                position: pos + 1,
                alphabet: "dyck",
            });
        }
        check_path(&steps)?;
        Ok(DyckWord(steps))
    }

    /// `u^n d^n`.
    pub fn pyramid(n: usize) -> Self {
        let mut steps = vec![Step::U; n];
        steps.extend(std::iter::repeat_n(Step::D, n));
        DyckWord(steps)
    }

    /// `(ud)^n`.
    pub fn zigzag(n: usize) -> Self {
        DyckWord([Step::U, Step::D].repeat(n))
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    pub fn asc_desc(&self) -> AscDesc {
        let mut asc = Vec::new();
        let mut des = Vec::new();
        let (mut ups, mut downs) = (0, 0);
        for (i, &step) in self.0.iter().enumerate() {
            let next = self.0.get(i + 1).copied();
            match step {
                Step::U => {
                    ups += 1;
                    if next != Some(Step::U) {
                        asc.push(ups);
                    }
                }
                Step::D => {
                    downs += 1;
                    if next != Some(Step::D) {
                        des.push(downs);
                    }
                }
                _ => unreachable!("dyck words hold only u and d"),
            }
        }
        AscDesc { asc, des }
    }

    /// The `n - 1` columns `(r_i, s_i)` computed from the ascent and descent
    /// sequences.
    pub fn rs_array(&self) -> RsArray {
        let n = self.semilength();
        let AscDesc { asc, des } = self.asc_desc();
        let width = n.saturating_sub(1);
        let mut columns = vec![(0usize, 0usize); width];
        for (i, &a) in asc.iter().enumerate() {
            if a <= width {
                let prev = if i == 0 { 0 } else { des[i - 1] };
                columns[a - 1].0 = des[i] - prev;
            }
        }
        for (i, &b) in des.iter().enumerate() {
            if b <= width {
                columns[b - 1].1 = asc[i + 1] - asc[i];
            }
        }
        RsArray { columns }
    }

    /// Number of Catalan words whose xy- and yz-projections both equal this
    /// path: the product of `C(r_i + s_i, r_i)` over all columns.
    pub fn l_statistic(&self) -> BigUint {
        self.rs_array().l_value()
    }

    /// Number of down steps that land on the axis.
    pub fn returns(&self) -> usize {
        let mut height = 0i64;
        let mut count = 0;
        for step in &self.0 {
            match step {
                Step::U => height += 1,
                _ => {
                    height -= 1;
                    if height == 0 {
                        count += 1;
                    }
                }
            }
        }
        count
    }
}

impl MotzkinWord {
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_steps(parse_steps(text, &[Step::U, Step::D, Step::H], "motzkin")?)
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        if let Some(pos) = steps.iter().position(|&s| s == Step::Star) {
            return Err(Error::InvalidCharacter {
                ch: '*',
                position: pos + 1,
                alphabet: "motzkin",
            });
        }
        check_path(&steps)?;
        Ok(MotzkinWord(steps))
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(Self::from_steps(steps.clone()).is_ok());
        MotzkinWord(steps)
    }

    pub fn empty() -> Self {
        MotzkinWord(Vec::new())
    }

    /// `h^m`.
    pub fn flat(m: usize) -> Self {
        MotzkinWord(vec![Step::H; m])
    }

    /// The word read backwards with `u` and `d` exchanged.
    pub fn reversed(&self) -> MotzkinWord {
        MotzkinWord(self.0.iter().rev().map(|s| s.flipped()).collect())
    }

    /// 1-based position of the first down step, if any.
    pub fn first_down(&self) -> Option<usize> {
        self.0.iter().position(|&s| s == Step::D).map(|i| i + 1)
    }

    /// Whether the word lies in the ballot class `T_{len, k}`: its first down
    /// is at position `k`, or it is exactly `h^{k-1}`.
    pub fn in_ballot_class(&self, k: usize) -> bool {
        match self.first_down() {
            Some(pos) => pos == k,
            None => k >= 1 && self.0.len() == k - 1 && self.0.iter().all(|&s| s == Step::H),
        }
    }

    pub fn to_star_word(&self) -> StarWord {
        StarWord(self.0.clone())
    }
}

impl StarWord {
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_steps(parse_steps(
            text,
            &[Step::U, Step::D, Step::H, Step::Star],
            "star",
        )?)
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        check_path(&steps)?;
        Ok(StarWord(steps))
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(check_path(&steps).is_ok());
        StarWord(steps)
    }

    pub fn star_count(&self) -> usize {
        self.count(Step::Star)
    }

    /// For each star in order: its 1-based position and the numbers of `u`
    /// and `d` letters strictly before it.
    pub fn star_context(&self) -> StarContext {
        let mut stars = Vec::new();
        let (mut ups, mut downs) = (0, 0);
        for (i, &step) in self.0.iter().enumerate() {
            match step {
                Step::U => ups += 1,
                Step::D => downs += 1,
                Step::Star => stars.push(StarInfo {
                    position: i + 1,
                    ups_before: ups,
                    downs_before: downs,
                }),
                Step::H => {}
            }
        }
        StarContext { stars }
    }

    /// Drops the stars, leaving the underlying Motzkin word.
    pub fn without_stars(&self) -> MotzkinWord {
        MotzkinWord(
            self.0
                .iter()
                .copied()
                .filter(|&s| s != Step::Star)
                .collect(),
        )
    }
}

/// Cumulative ascent and descent lengths of a Dyck path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscDesc {
    pub asc: Vec<usize>,
    pub des: Vec<usize>,
}

impl AscDesc {
    /// Rebuilds the unique Dyck word with these sequences, checking the
    /// defining conditions on the way.
    pub fn to_dyck(&self) -> Result<DyckWord> {
        let (asc, des) = (&self.asc, &self.des);
        if asc.len() != des.len() {
            return Err(Error::UnbalancedWord(format!(
                "{} ascents but {} descents",
                asc.len(),
                des.len()
            )));
        }
        if asc.last() != des.last() {
            return Err(Error::UnbalancedWord(
                "ascent and descent sequences end at different values".into(),
            ));
        }
        let mut steps = Vec::with_capacity(2 * asc.last().copied().unwrap_or(0));
        let (mut prev_a, mut prev_b) = (0, 0);
        for (&a, &b) in asc.iter().zip(des) {
            if a <= prev_a || b <= prev_b {
                return Err(Error::UnbalancedWord(
                    "sequences must be strictly increasing".into(),
                ));
            }
            if a < b {
                return Err(Error::PrefixViolation {
                    position: 2 * b.min(a) + 1,
                });
            }
            steps.extend(std::iter::repeat_n(Step::U, a - prev_a));
            steps.extend(std::iter::repeat_n(Step::D, b - prev_b));
            prev_a = a;
            prev_b = b;
        }
        Ok(DyckWord(steps))
    }
}

/// The `2 x (n-1)` array of `(r_i, s_i)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RsArray {
    pub columns: Vec<(usize, usize)>,
}

impl RsArray {
    pub fn width(&self) -> usize {
        self.columns.len()
    }

    /// `(r_i, s_i)` for 1-based `i`.
    pub fn column(&self, i: usize) -> (usize, usize) {
        self.columns[i - 1]
    }

    pub fn r_row(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.0).collect()
    }

    pub fn s_row(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.1).collect()
    }

    pub fn l_value(&self) -> BigUint {
        self.columns
            .iter()
            .filter(|(r, s)| *r > 0 && *s > 0)
            .fold(BigUint::one(), |acc, &(r, s)| acc * binomial(r + s, r))
    }
}

/// Exact `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarInfo {
    /// 1-based position in the word.
    pub position: usize,
    pub ups_before: usize,
    pub downs_before: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StarContext {
    pub stars: Vec<StarInfo>,
}

/// One of the three Catalan-word letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn as_char(self) -> char {
        match self {
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        }
    }
}

/// A 3-dimensional Catalan word: every prefix has `#x >= #y >= #z` and the
/// three letters occur equally often.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalanWord(Vec<Axis>);

impl CatalanWord {
    pub fn parse(text: &str) -> Result<Self> {
        let letters = text
            .chars()
            .enumerate()
            .map(|(i, ch)| match ch {
                'x' => Ok(Axis::X),
                'y' => Ok(Axis::Y),
                'z' => Ok(Axis::Z),
                _ => Err(Error::InvalidCharacter {
                    ch,
                    position: i + 1,
                    alphabet: "catalan",
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_letters(letters)
    }

    pub fn from_letters(letters: Vec<Axis>) -> Result<Self> {
        let mut counts = [0usize; 3];
        for (i, &a) in letters.iter().enumerate() {
            counts[a as usize] += 1;
            if counts[1] > counts[0] || counts[2] > counts[1] {
                return Err(Error::PrefixViolation { position: i + 1 });
            }
        }
        if counts[0] != counts[1] || counts[1] != counts[2] {
            return Err(Error::UnbalancedWord(format!(
                "letter counts x={} y={} z={}",
                counts[0], counts[1], counts[2]
            )));
        }
        Ok(CatalanWord(letters))
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<Axis>) -> Self {
        CatalanWord(letters)
    }

    pub fn letters(&self) -> &[Axis] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len() / 3
    }

    fn projection(&self, up: Axis, down: Axis) -> DyckWord {
        DyckWord(
            self.0
                .iter()
                .filter_map(|&a| {
                    if a == up {
                        Some(Step::U)
                    } else if a == down {
                        Some(Step::D)
                    } else {
                        None
                    }
                })
                .collect(),
        )
    }

    /// Subword on `{x, y}` with `x -> u`, `y -> d`.
    pub fn xy_projection(&self) -> DyckWord {
        self.projection(Axis::X, Axis::Y)
    }

    /// Subword on `{y, z}` with `y -> u`, `z -> d`.
    pub fn yz_projection(&self) -> DyckWord {
        self.projection(Axis::Y, Axis::Z)
    }
}

impl fmt::Display for CatalanWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|a| write!(f, "{}", a.as_char()))
    }
}

impl FromStr for CatalanWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalanWord::parse(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    Dyck,
    Motzkin,
    Star,
    Catalan,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Word {
    Dyck(DyckWord),
    Motzkin(MotzkinWord),
    Star(StarWord),
    Catalan(CatalanWord),
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Dyck(w) => w.fmt(f),
            Word::Motzkin(w) => w.fmt(f),
            Word::Star(w) => w.fmt(f),
            Word::Catalan(w) => w.fmt(f),
        }
    }
}

pub fn parse_word(text: &str, alphabet: Alphabet) -> Result<Word> {
    Ok(match alphabet {
        Alphabet::Dyck => Word::Dyck(DyckWord::parse(text)?),
        Alphabet::Motzkin => Word::Motzkin(MotzkinWord::parse(text)?),
        Alphabet::Star => Word::Star(StarWord::parse(text)?),
        Alphabet::Catalan => Word::Catalan(CatalanWord::parse(text)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG2: &str = "uudduuduuudduuududdudduuuddddd";

    fn dyck(s: &str) -> DyckWord {
        DyckWord::parse(s).unwrap()
    }

    /// r_i and s_i read straight off the word, without going through the
    /// ascent/descent sequences.
    fn rs_by_scan(d: &DyckWord) -> Vec<(usize, usize)> {
        let n = d.semilength();
        let between = |first: Step, other: Step, i: usize| {
            let idx: Vec<usize> = d
                .steps()
                .iter()
                .enumerate()
                .filter(|(_, &s)| s == first)
                .map(|(k, _)| k)
                .collect();
            d.steps()[idx[i - 1]..idx[i]]
                .iter()
                .filter(|&&s| s == other)
                .count()
        };
        (1..n)
            .map(|i| (between(Step::U, Step::D, i), between(Step::D, Step::U, i)))
            .collect()
    }

    #[test]
    fn parse_accepts_and_rejects() {
        assert_eq!(dyck("uudd").steps(), &[Step::U, Step::U, Step::D, Step::D]);
        let w = StarWord::parse("h*uduuduh*ddhh").unwrap();
        assert_eq!(w.len(), 14);
        assert!(matches!(
            DyckWord::parse("udu"),
            Err(Error::UnbalancedWord(_))
        ));
        assert_eq!(
            DyckWord::parse("du"),
            Err(Error::PrefixViolation { position: 1 })
        );
        assert!(matches!(
            DyckWord::parse("uxd"),
            Err(Error::InvalidCharacter {
                ch: 'x',
                position: 2,
                ..
            })
        ));
        assert!(matches!(
            DyckWord::parse("uUdd"),
            Err(Error::InvalidCharacter { ch: 'U', .. })
        ));
        assert!(MotzkinWord::parse("u*d").is_err());
        assert!(StarWord::parse("*d*").is_err());
        assert!(CatalanWord::parse("xyyz").is_err());
        assert_eq!(
            CatalanWord::parse("xzy"),
            Err(Error::PrefixViolation { position: 2 })
        );
        assert!(matches!(
            parse_word("xyzx", Alphabet::Catalan),
            Err(Error::UnbalancedWord(_))
        ));
        assert_eq!(DyckWord::parse("").unwrap().semilength(), 0);
    }

    #[test]
    fn ascent_descent_sequences() {
        let ad = dyck(FIG2).asc_desc();
        assert_eq!(ad.asc, vec![2, 4, 7, 10, 11, 12, 15]);
        assert_eq!(ad.des, vec![2, 3, 5, 6, 8, 10, 15]);
        for n in 1..6 {
            let ad = DyckWord::pyramid(n).asc_desc();
            assert_eq!((ad.asc, ad.des), (vec![n], vec![n]));
            let ad = DyckWord::zigzag(n).asc_desc();
            let seq: Vec<usize> = (1..=n).collect();
            assert_eq!((ad.asc, ad.des), (seq.clone(), seq));
        }
    }

    #[test]
    fn rs_array_examples() {
        let rs = dyck(FIG2).rs_array();
        assert_eq!(rs.width(), 14);
        assert_eq!(rs.r_row(), vec![0, 2, 0, 1, 0, 0, 2, 0, 0, 1, 2, 2, 0, 0]);
        assert_eq!(rs.s_row(), vec![0, 2, 3, 0, 3, 1, 0, 1, 0, 3, 0, 0, 0, 0]);

        // r_5 = 2: the first ascent (length 5) is followed by two downs.
        let d = dyck("uuuuudduudddduuduudddd");
        let ad = d.asc_desc();
        assert_eq!(ad.asc, vec![5, 7, 9, 11]);
        assert_eq!(ad.des, vec![2, 6, 7, 11]);
        let rs = d.rs_array();
        assert_eq!(rs.r_row(), vec![0, 0, 0, 0, 2, 0, 4, 0, 1, 0]);
        assert_eq!(rs.s_row(), vec![0, 2, 0, 0, 0, 2, 2, 0, 0, 0]);
        assert_eq!(rs.column(7), (4, 2));
        assert_eq!(d.l_statistic(), BigUint::from(15u32));

        assert!(DyckWord::pyramid(6)
            .rs_array()
            .columns
            .iter()
            .all(|&c| c == (0, 0)));

        let d = AscDesc {
            asc: vec![3, 6, 7, 8, 10, 11],
            des: vec![1, 3, 4, 5, 8, 11],
        }
        .to_dyck()
        .unwrap();
        assert_eq!(d.to_string(), "uuuduuuddududuuddduddd");
        let rs = d.rs_array();
        assert_eq!(rs.r_row(), vec![0, 0, 1, 0, 0, 2, 1, 1, 0, 3]);
        assert_eq!(rs.s_row(), vec![3, 0, 1, 1, 2, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn l_statistic_examples() {
        assert_eq!(dyck(FIG2).l_statistic(), BigUint::from(24u32));
        assert_eq!(dyck("ududud").l_statistic(), BigUint::from(4u32));
        assert_eq!(dyck("uuddud").l_statistic(), BigUint::from(3u32));
        assert_eq!(dyck("").l_statistic(), BigUint::one());
    }

    #[test]
    fn returns_examples() {
        for n in 1..8 {
            assert_eq!(DyckWord::pyramid(n).returns(), 1);
            assert_eq!(DyckWord::zigzag(n).returns(), n);
        }
        // heights after each step return to zero only at steps 4 and 30
        assert_eq!(dyck(FIG2).returns(), 2);
    }

    #[test]
    fn motzkin_reverse() {
        let m = MotzkinWord::parse("huuhdhd").unwrap();
        assert_eq!(m.reversed().to_string(), "uhuhddh");
        assert_eq!(MotzkinWord::flat(4).reversed(), MotzkinWord::flat(4));
        let m = MotzkinWord::parse("uhdudud").unwrap();
        assert_eq!(m.reversed().reversed(), m);
    }

    #[test]
    fn star_context_examples() {
        let ctx = StarWord::parse("uh*uudd*hd").unwrap().star_context();
        assert_eq!(
            ctx.stars,
            vec![
                StarInfo {
                    position: 3,
                    ups_before: 1,
                    downs_before: 0
                },
                StarInfo {
                    position: 8,
                    ups_before: 3,
                    downs_before: 2
                },
            ]
        );
        let ctx = StarWord::parse("huhhdu*hdh").unwrap().star_context();
        assert_eq!(
            ctx.stars,
            vec![StarInfo {
                position: 7,
                ups_before: 2,
                downs_before: 1
            }]
        );
        assert!(StarWord::parse("hhhh")
            .unwrap()
            .star_context()
            .stars
            .is_empty());
    }

    #[test]
    fn catalan_projections() {
        let c = CatalanWord::parse("xxyxyzzxyyzz").unwrap();
        assert_eq!(c.xy_projection().to_string(), "uudududd");
        assert_eq!(c.yz_projection().to_string(), "uudduudd");
    }

    #[test]
    fn rs_scan_agrees_on_examples() {
        for w in [FIG2, "uuuuudduudddduuduudddd", "ududud", "uuddud"] {
            let d = dyck(w);
            assert_eq!(d.rs_array().columns, rs_by_scan(&d), "{w}");
        }
    }
}
