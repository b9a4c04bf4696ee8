//! Named check suites shared by the command line and the acceptance tests.
//!
//! A failed check is data, not an error: suites return `Err` only when a
//! requested size is beyond the oracle bounds.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::bijections::{
    self, from_star_word, l4_kind, to_star_word, L4Kind, OneReturnPreimage, PairPreimage,
    TwoReturnPreimage, Type1Preimage, Type4Preimage,
};
use crate::counting::{
    self, count_l1, count_l2, count_l4, count_lp, count_rs, CountQuery, CountTarget,
};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::series::{self, ballot_number, motzkin_gf, motzkin_numbers, TruncatedSeries};
use crate::words::{binomial, DyckWord, MotzkinWord, StarWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(name: impl Into<String>, expected: T, got: T) -> Self {
        let passed = expected == got;
        let detail = if passed {
            format!("{got:?}")
        } else {
            format!("expected {expected:?}, got {got:?}")
        };
        Check::new(name, passed, detail)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Figures,
    Bijections,
    Eq1,
    Gf,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "all" => Suite::All,
            "figures" => Suite::Figures,
            "bijections" => Suite::Bijections,
            "eq1" => Suite::Eq1,
            "gf" => Suite::Gf,
            _ => return None,
        })
    }
}

/// `n` overrides each suite's default size: 10 for bijections, 3 for eq1,
/// 10 for the oracle half of gf. Figures ignore it.
pub fn run_suite(suite: Suite, n: Option<usize>, oracle: &Oracle) -> Result<Vec<Check>> {
    match suite {
        Suite::All => {
            let mut out = figure_checks(oracle)?;
            out.extend(run_suite(Suite::Bijections, n, oracle)?);
            out.extend(run_suite(Suite::Eq1, n.map(|n| n.min(3)), oracle)?);
            out.extend(run_suite(Suite::Gf, n, oracle)?);
            Ok(out)
        }
        Suite::Figures => figure_checks(oracle),
        Suite::Bijections => {
            let n = n.unwrap_or(10);
            bijection_checks(n, n, oracle)
        }
        Suite::Eq1 => eq1_checks(n.unwrap_or(3), oracle),
        Suite::Gf => {
            let mut out = gf_checks(20)?;
            out.extend(histogram_checks(n.unwrap_or(10), oracle)?);
            Ok(out)
        }
    }
}

fn dyck(s: &str) -> DyckWord {
    DyckWord::parse(s).expect("golden Dyck word")
}

fn motzkin(s: &str) -> MotzkinWord {
    MotzkinWord::parse(s).expect("golden Motzkin word")
}

fn star(s: &str) -> StarWord {
    StarWord::parse(s).expect("golden star word")
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// Dyck words of semilength 3 with `L` and the Catalan words over them.
pub const FIG_CATALAN: [(&str, u64, &[&str]); 5] = [
    ("uuuddd", 1, &["xxxyyyzzz"]),
    ("uududd", 1, &["xxyxyzyzz"]),
    ("uuddud", 3, &["xxyyzzxyz", "xxyyzxzyz", "xxyyxzzyz"]),
    ("uduudd", 3, &["xyzxxyyzz", "xyxzxyyzz", "xyxxzyyzz"]),
    (
        "ududud",
        4,
        &["xyzxyzxyz", "xyzxyxzyz", "xyxzyzxyz", "xyxzyxzyz"],
    ),
];

/// `(k, first n, values)` for the table of `|D_n^k|`.
pub const TABLE_ROWS: [(u64, usize, &[u64]); 7] = [
    (1, 1, &[1, 1, 2, 4, 9, 21, 51, 127, 323]),
    (2, 2, &[1, 0, 1, 2, 6, 16, 45, 126, 357]),
    (3, 3, &[2, 2, 4, 10, 26, 70, 192, 534]),
    (4, 4, &[2, 5, 9, 25, 65, 181, 505, 1434]),
    (5, 5, &[2, 6, 14, 36, 96, 262, 726, 2034]),
    (6, 6, &[14, 34, 92, 252, 710, 2026, 5844]),
    (7, 7, &[2, 10, 32, 94, 272, 784, 2260, 6524]),
];

/// `|D_n^6|` and its mixed two-star part for `n = 4..=12`.
pub const L6_TOTALS: [u64; 9] = [3, 6, 14, 34, 92, 252, 710, 2026, 5844];
pub const L6_MIXED: [u64; 9] = [2, 4, 8, 16, 44, 122, 352, 1028, 3036];

/// The nine paths of semilength 5 with `L = 1` and their Motzkin words.
pub const FIG_L1: [(&str, &str); 9] = [
    ("uuuuuddddd", "hhhh"),
    ("uuuududddd", "uhhd"),
    ("uuuudduddd", "huhd"),
    ("uuuudddudd", "hhud"),
    ("uuuduudddd", "uhdh"),
    ("uuudduuddd", "hudh"),
    ("uuduuudddd", "udhh"),
    ("uuudududdd", "uudd"),
    ("uuduuddudd", "udud"),
];

/// `(M, M*, D)` for the six paths of semilength 6 with `L = 2`, three star
/// slots per `M`.
pub const FIG_L2: [(&str, &str, &str); 6] = [
    ("hh", "u*hhd", "uuduuududddd"),
    ("hh", "uh*hd", "uuuduudduddd"),
    ("hh", "uhh*d", "uuuududddudd"),
    ("ud", "u*udd", "uuduudududdd"),
    ("ud", "uu*dd", "uuududududdd"),
    ("ud", "uud*d", "uuudududdudd"),
];

/// One-return example: `M`, `P`, `r`, `s` and the star word for each `j`.
pub const FIG_ONE_RETURN_M: &str = "uudhudd";
pub const FIG_ONE_RETURN_P: &str = "uhuhhdhhdudud";
pub const FIG_ONE_RETURN: [&str; 8] = [
    "ududuhdu*uuduhhdhhdhudd",
    "ududuhduu*udhuduhhdhhdd",
    "ududuhduuu*dhudduhhdhhd",
    "uududuhduud*hudduhhdhhd",
    "uududuhduudh*udduhhdhhd",
    "uududuhduudhu*ddduhhdhh",
    "uuududuhdudhud*dduhhdhh",
    "uudhuududuhdudd*duhhdhh",
];

pub fn figure_checks(oracle: &Oracle) -> Result<Vec<Check>> {
    let mut out = Vec::new();

    let catalan3 = oracle.enum_catalan_words(3)?;
    for (word, l, expected) in FIG_CATALAN {
        let d = dyck(word);
        out.push(Check::eq(
            format!("catalan-table/{word}/L"),
            big(l),
            d.l_statistic(),
        ));
        let mut got: Vec<String> = catalan3
            .iter()
            .filter(|c| c.xy_projection() == d && c.yz_projection() == d)
            .map(|c| c.to_string())
            .collect();
        got.sort();
        let mut want: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
        want.sort();
        out.push(Check::eq(format!("catalan-table/{word}/words"), want, got));
    }

    for (k, start, values) in TABLE_ROWS {
        let got: Vec<BigUint> = (start..start + values.len())
            .map(|n| closed_form_l(k, n, oracle))
            .collect::<Result<_>>()?;
        let want: Vec<BigUint> = values.iter().map(|&v| big(v)).collect();
        out.push(Check::eq(format!("table/L={k}"), want, got));
    }
    let mut totals = Vec::new();
    let mut mixed = Vec::new();
    for n in 4..=12 {
        let parts = counting::count_l6(n, oracle)?;
        totals.push(parts.total());
        mixed.push(parts.mixed);
    }
    out.push(Check::eq("l6/totals", L6_TOTALS.map(big).to_vec(), totals));
    out.push(Check::eq("l6/mixed", L6_MIXED.map(big).to_vec(), mixed));

    for (d, m) in FIG_L1 {
        let dw = dyck(d);
        let forward = to_star_word(&dw).map(|w| w.to_string());
        let back = from_star_word(&star(m));
        let ok = forward.as_deref() == Ok(m) && back == dw && dw.l_statistic() == BigUint::one();
        out.push(Check::new(
            format!("l1-table/{d}"),
            ok,
            format!("{d} <-> {m}"),
        ));
    }

    // Each M* is M with a star in slot j, wrapped by one up and one down.
    for (row, (m, w, d)) in FIG_L2.iter().enumerate() {
        let sw = star(w);
        let built = from_star_word(&sw);
        let made = bijections::rs_one_return_star_word(
            &motzkin(m),
            &MotzkinWord::empty(),
            row % 3 + 1,
            1,
            1,
        )?;
        let ok = made == sw
            && built == dyck(d)
            && built.l_statistic() == big(2)
            && to_star_word(&built).as_ref() == Ok(&sw);
        out.push(Check::new(
            format!("l2-table/{w}"),
            ok,
            format!("{m} -> {w} -> {d}"),
        ));
    }

    let m = motzkin(FIG_ONE_RETURN_M);
    let p = motzkin(FIG_ONE_RETURN_P);
    for (j, expected) in FIG_ONE_RETURN.iter().enumerate() {
        let j = j + 1;
        let got = bijections::rs_one_return_star_word(&m, &p, j, 3, 4)?;
        let d = from_star_word(&got);
        let back = bijections::rs_one_return_inverse(&d)?;
        let ok = got.to_string() == *expected
            && d.returns() == 1
            && d.l_statistic() == big(35)
            && back
                == OneReturnPreimage {
                    m: m.clone(),
                    p: p.clone(),
                    j,
                    r: 3,
                    s: 4,
                };
        out.push(Check::new(
            format!("one-return-table/j={j}"),
            ok,
            got.to_string(),
        ));
    }
    Ok(out)
}

/// The closed form for `|D_n^k|`, for `k` in `1..=7`.
fn closed_form_l(k: u64, n: usize, oracle: &Oracle) -> Result<BigUint> {
    Ok(match k {
        1 => count_l1(n),
        2 => count_l2(n),
        4 => count_l4(n),
        6 => counting::count_l6(n, oracle)?.total(),
        p => count_lp(n, p)?,
    })
}

/// Paths of one semilength sorted by what each inverse map expects.
#[derive(Default)]
struct Classified {
    two_return: BTreeMap<(usize, usize), BTreeSet<DyckWord>>,
    one_return: BTreeMap<(usize, usize), BTreeSet<DyckWord>>,
    l4: BTreeMap<L4Kind, BTreeSet<DyckWord>>,
}

fn classify(n: usize, oracle: &Oracle) -> Result<Classified> {
    let mut c = Classified::default();
    for d in oracle.enum_dyck(n)? {
        let stars: Vec<(usize, usize)> = d
            .rs_array()
            .columns
            .into_iter()
            .filter(|&(r, s)| r > 0 && s > 0)
            .collect();
        match stars.as_slice() {
            [rs] if d.returns() == 2 => {
                c.two_return.entry(*rs).or_default().insert(d);
            }
            [rs] if d.returns() == 1 => {
                c.one_return.entry(*rs).or_default().insert(d);
            }
            [(1, 1), (1, 1)] => {
                let kind = l4_kind(&d).expect("both star columns are (1, 1)");
                c.l4.entry(kind).or_default().insert(d);
            }
            _ => {}
        }
    }
    Ok(c)
}

/// Compares a forward image with the enumerated class and checks both
/// compositions with the inverse.
fn image_check<T: PartialEq>(
    name: String,
    inputs: Vec<T>,
    forward: impl Fn(&T) -> Result<DyckWord>,
    inverse: impl Fn(&DyckWord) -> Result<T>,
    class: Option<&BTreeSet<DyckWord>>,
    formula: BigUint,
) -> Result<Check> {
    let empty = BTreeSet::new();
    let class = class.unwrap_or(&empty);
    let mut image = BTreeSet::new();
    let mut left_ok = true;
    for x in &inputs {
        let d = forward(x)?;
        left_ok &= inverse(&d).ok().as_ref() == Some(x);
        image.insert(d);
    }
    let right_ok = class
        .iter()
        .all(|d| inverse(d).and_then(|x| forward(&x)).ok().as_ref() == Some(d));
    let sizes_ok = image.len() == inputs.len() && BigUint::from(image.len()) == formula;
    let passed = left_ok && right_ok && sizes_ok && image == *class;
    Ok(Check::new(
        name,
        passed,
        format!(
            "inputs {}, image {}, class {}, formula {formula}, inv.fwd {left_ok}, fwd.inv {right_ok}",
            inputs.len(),
            image.len(),
            class.len()
        ),
    ))
}

fn motzkins(oracle: &Oracle, len: i64) -> Result<Vec<MotzkinWord>> {
    if len < 0 {
        return Ok(Vec::new());
    }
    oracle.enum_motzkin(len as usize)
}

fn m_num(i: i64) -> BigUint {
    series::motzkin_number(i)
}

/// Exhaustive checks of every bijection for semilengths up to `max_n`
/// (`max_n_l4` for the two-star family).
pub fn bijection_checks(max_n: usize, max_n_l4: usize, oracle: &Oracle) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n.max(max_n_l4) {
        let c = classify(n, oracle)?;
        if n <= max_n {
            out.push(theta_check(n, oracle)?);
            out.extend(rs_checks(n, &c, oracle)?);
        }
        if n <= max_n_l4 {
            out.extend(l4_checks(n, &c, oracle)?);
        }
    }
    Ok(out)
}

fn theta_check(n: usize, oracle: &Oracle) -> Result<Check> {
    let paths: Vec<DyckWord> = oracle.enum_dyck(n)?.collect();
    let words = oracle.enum_star_words(n - 1)?;
    let there = paths
        .iter()
        .all(|d| to_star_word(d).map(|w| from_star_word(&w)).as_ref() == Ok(d));
    let back = words
        .iter()
        .all(|w| to_star_word(&from_star_word(w)).as_ref() == Ok(w));
    Ok(Check::new(
        format!("bijection/star-word n={n}"),
        there && back && paths.len() == words.len(),
        format!("{} paths, {} star words", paths.len(), words.len()),
    ))
}

fn rs_checks(n: usize, c: &Classified, oracle: &Oracle) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for total in 2..=n {
        let k = total - 1;
        for r in 1..total {
            let s = total - r;
            let inputs: Vec<TwoReturnPreimage> = oracle
                .enum_ballot(n - 2, k)?
                .into_iter()
                .map(|p| TwoReturnPreimage { p, r, s })
                .collect();
            out.push(image_check(
                format!("bijection/two-return n={n} r={r} s={s}"),
                inputs,
                |x| bijections::rs_two_returns_forward(&x.p, x.r, x.s),
                bijections::rs_two_returns_inverse,
                c.two_return.get(&(r, s)),
                ballot_number(n as i64 - 2, k as i64),
            )?);

            let mut inputs = Vec::new();
            let mut formula = BigUint::default();
            for i in 0..=(n as i64 - 2 - total as i64) {
                // i <= n - 2 - (r + s) keeps this length >= r + s - 2
                let ps = oracle.enum_ballot((n as i64 - 4 - i) as usize, k)?;
                formula += BigUint::from((i + 1) as u64)
                    * m_num(i)
                    * ballot_number(n as i64 - 4 - i, k as i64);
                for m in motzkins(oracle, i)? {
                    for p in &ps {
                        for j in 1..=m.len() + 1 {
                            inputs.push(OneReturnPreimage {
                                m: m.clone(),
                                p: p.clone(),
                                j,
                                r,
                                s,
                            });
                        }
                    }
                }
            }
            out.push(image_check(
                format!("bijection/one-return n={n} r={r} s={s}"),
                inputs,
                |x| bijections::rs_one_return_forward(&x.m, &x.p, x.j, x.r, x.s),
                bijections::rs_one_return_inverse,
                c.one_return.get(&(r, s)),
                formula,
            )?);
        }
    }
    Ok(out)
}

fn pair_inputs(n: usize, oracle: &Oracle) -> Result<Vec<PairPreimage>> {
    let mut inputs = Vec::new();
    for i in 0..=(n as i64 - 7) {
        let ps = motzkins(oracle, n as i64 - 7 - i)?;
        for m in motzkins(oracle, i)? {
            for p in &ps {
                for j in 1..=m.len() + 1 {
                    inputs.push(PairPreimage {
                        m: m.clone(),
                        p: p.clone(),
                        j,
                    });
                }
            }
        }
    }
    Ok(inputs)
}

fn pair_formula(n: usize) -> BigUint {
    let n = n as i64;
    (0..=n - 7)
        .map(|i| BigUint::from((i + 1) as u64) * m_num(i) * m_num(n - 7 - i))
        .sum()
}

fn l4_checks(n: usize, c: &Classified, oracle: &Oracle) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let ni = n as i64;

    let mut inputs = Vec::new();
    for m in motzkins(oracle, ni - 7)? {
        for j2 in 1..=m.len() + 2 {
            for j1 in 1..j2 {
                inputs.push(Type1Preimage {
                    m: m.clone(),
                    j1,
                    j2,
                });
            }
        }
    }
    let c5 = if n >= 5 {
        binomial(n - 5, 2)
    } else {
        BigUint::default()
    };
    out.push(image_check(
        format!("bijection/l4-type1 n={n}"),
        inputs,
        |x| bijections::l4_type1_forward(&x.m, x.j1, x.j2),
        bijections::l4_type1_inverse,
        c.l4.get(&L4Kind::Type1),
        c5 * m_num(ni - 7),
    )?);

    out.push(image_check(
        format!("bijection/l4-type2 n={n}"),
        motzkins(oracle, ni - 5)?,
        |m| Ok(bijections::l4_type2_forward(m)),
        bijections::l4_type2_inverse,
        c.l4.get(&L4Kind::Type2),
        m_num(ni - 5),
    )?);

    out.push(image_check(
        format!("bijection/l4-type3 n={n}"),
        pair_inputs(n, oracle)?,
        |x| bijections::l4_type3_forward(&x.m, &x.p, x.j),
        bijections::l4_type3_inverse,
        c.l4.get(&L4Kind::Type3),
        pair_formula(n),
    )?);

    let mut inputs: Vec<Type4Preimage> = pair_inputs(n, oracle)?
        .into_iter()
        .map(Type4Preimage::Pair)
        .collect();
    let mut formula = pair_formula(n);
    if n == 3 {
        inputs.push(Type4Preimage::Singleton);
        formula += 1u32;
    }
    out.push(image_check(
        format!("bijection/l4-type4 n={n}"),
        inputs,
        |x| match x {
            Type4Preimage::Singleton => Ok(bijections::l4_type4_singleton()),
            Type4Preimage::Pair(x) => bijections::l4_type4_forward(&x.m, &x.p, x.j),
        },
        bijections::l4_type4_inverse,
        c.l4.get(&L4Kind::Type4),
        formula,
    )?);

    let two_star: usize = c.l4.values().map(BTreeSet::len).sum();
    let by_signature = oracle.filter_by_star_signature(n, &[2, 2])?;
    out.push(Check::eq(
        format!("bijection/l4-partition n={n}"),
        by_signature,
        two_star as u64,
    ));
    Ok(out)
}

pub fn eq1_checks(max_n: usize, oracle: &Oracle) -> Result<Vec<Check>> {
    (1..=max_n)
        .map(|n| {
            let sum = counting::weighted_sum_eq1(n, oracle)?;
            let perms = BigUint::from(oracle.enum_321_3cycle(3 * n)?);
            Ok(Check::eq(format!("eq1/n={n}"), perms, sum))
        })
        .collect()
}

fn to_big(values: impl IntoIterator<Item = BigUint>) -> Vec<BigInt> {
    values.into_iter().map(BigInt::from).collect()
}

/// Generating functions against the closed forms through `order`.
pub fn gf_checks(order: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let m = motzkin_gf(order);
    let rhs = &(&TruncatedSeries::one(order) + &m.shift(1)) + &(&m * &m).shift(2);
    out.push(Check::eq(
        "gf/motzkin-equation",
        m.clone(),
        rhs.truncate(order),
    ));
    out.push(Check::eq(
        "gf/motzkin-recurrence",
        to_big(motzkin_numbers(order)),
        m.coeffs().to_vec(),
    ));

    for k in 1..=7 {
        let g = series::ballot_gf(k, order)?;
        let direct = to_big((0..=order).map(|n| ballot_number(n as i64, k as i64)));
        out.push(Check::eq(
            format!("gf/ballot k={k}"),
            direct,
            g.coeffs().to_vec(),
        ));
    }

    let range = 0..=order;
    out.push(Check::eq(
        "gf/L=2",
        to_big(range.clone().map(count_l2)),
        series::gf_l2(order).coeffs().to_vec(),
    ));
    for p in [3u64, 5, 7, 11, 13] {
        let closed: Vec<BigUint> = range
            .clone()
            .map(|n| count_lp(n, p))
            .collect::<Result<_>>()?;
        out.push(Check::eq(
            format!("gf/L={p}"),
            to_big(closed),
            series::gf_lp(p, order)?.coeffs().to_vec(),
        ));
    }
    for total in 2..=7 {
        for r in 1..total {
            let s = total - r;
            let closed: Vec<BigUint> = range
                .clone()
                .map(|n| count_rs(n, r, s))
                .collect::<Result<_>>()?;
            out.push(Check::eq(
                format!("gf/rs={r},{s}"),
                to_big(closed),
                series::gf_rs(r, s, order)?.coeffs().to_vec(),
            ));
        }
    }
    Ok(out)
}

/// Exhaustive histograms against every closed form and generating function
/// for `n <= max_n`. Every `L` value that occurs is checked, as are all
/// `k <= 13` and the single-star classes with `r + s <= 7`.
pub fn histogram_checks(max_n: usize, oracle: &Oracle) -> Result<Vec<Check>> {
    if max_n > oracle.bounds.dyck_n {
        return Err(Error::OracleBoundExceeded {
            what: "Dyck semilength",
            requested: max_n,
            bound: oracle.bounds.dyck_n,
        });
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        let hist = oracle.l_histogram(n)?;
        let total: u64 = hist.values().sum();
        let catalan = binomial(2 * n, n) / big(n as u64 + 1);
        out.push(Check::eq(
            format!("histogram/n={n}/total"),
            catalan,
            big(total),
        ));

        let mut ks: BTreeSet<u64> = (1..=13).collect();
        ks.extend(
            hist.keys()
                .map(|k| u64::try_from(k).expect("L fits in u64 at oracle scale")),
        );
        let mut want = Vec::new();
        let mut got = Vec::new();
        for k in ks {
            let q = CountQuery::new(n, CountTarget::L(k));
            let seen = big(hist.get(&big(k)).copied().unwrap_or(0));
            if let (Some(closed), _) = q.closed_form(oracle)? {
                want.push((k, "closed", closed));
                got.push((k, "closed", seen.clone()));
            }
            if let Some(gf) = q.gf_value()? {
                want.push((k, "gf", gf));
                got.push((k, "gf", seen));
            }
        }
        for total in 2..=7 {
            for r in 1..total {
                let q = CountQuery::new(n, CountTarget::Rs(r, total - r));
                let seen = q.oracle_value(oracle)?;
                let tag = (r * 10 + total - r) as u64;
                want.push((tag, "rs-closed", count_rs(n, r, total - r)?));
                got.push((tag, "rs-closed", seen.clone()));
                want.push((tag, "rs-gf", q.gf_value()?.unwrap_or_default()));
                got.push((tag, "rs-gf", seen));
            }
        }
        out.push(Check::new(
            format!("histogram/n={n}/formulas"),
            want == got,
            if want == got {
                format!("{} comparisons", want.len())
            } else {
                let bad: Vec<_> = want.iter().zip(&got).filter(|(a, b)| a != b).collect();
                format!("mismatches (expected, oracle): {bad:?}")
            },
        ));
    }
    Ok(out)
}
