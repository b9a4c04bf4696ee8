//! The eight acceptance criteria. Runs without the libtest harness so that
//! every criterion prints one PASS/FAIL line; exits non-zero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dyckl::counting::{
    count_l1, count_l2, count_l4, count_l6, count_lp, count_rs, weighted_sum_eq1,
};
use dyckl::oracle::Oracle;
use dyckl::series::{motzkin_gf, TruncatedSeries};
use dyckl::verify::{self, Check};
use dyckl::words::binomial;
use num_bigint::BigUint;

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
        }
    }

    fn expect<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, expected: T, got: T) {
        if expected != got {
            self.failures
                .push(format!("{what}: expected {expected:?}, got {got:?}"));
        }
    }

    fn checks(&mut self, checks: dyckl::Result<Vec<Check>>) -> usize {
        match checks {
            Ok(checks) => {
                for c in checks.iter().filter(|c| !c.passed) {
                    self.failures.push(c.to_string());
                }
                checks.len()
            }
            Err(e) => {
                self.failures.push(format!("error: {e}"));
                0
            }
        }
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn bigs(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| big(x)).collect()
}

fn table_reproduction(o: &mut Outcome) {
    let row = |f: &dyn Fn(usize) -> BigUint, start: usize, len: usize| -> Vec<BigUint> {
        (start..start + len).map(f).collect()
    };
    let rows: [(u64, usize, &[u64]); 6] = [
        (1, 1, &[1, 1, 2, 4, 9, 21, 51, 127, 323]),
        (2, 2, &[1, 0, 1, 2, 6, 16, 45, 126, 357]),
        (3, 3, &[2, 2, 4, 10, 26, 70, 192, 534]),
        (4, 4, &[2, 5, 9, 25, 65, 181, 505, 1434]),
        (5, 5, &[2, 6, 14, 36, 96, 262, 726, 2034]),
        (7, 7, &[2, 10, 32, 94, 272, 784, 2260, 6524]),
    ];
    for (k, start, values) in rows {
        let got = match k {
            1 => row(&count_l1, start, values.len()),
            2 => row(&count_l2, start, values.len()),
            4 => row(&count_l4, start, values.len()),
            p => row(&|n| count_lp(n, p).unwrap(), start, values.len()),
        };
        o.expect(&format!("L={k}"), bigs(values), got);
    }
}

fn three_way_agreement(o: &mut Outcome) {
    let single = Oracle::default().with_workers(1);
    let n = o.checks(verify::histogram_checks(12, &single));
    let g = o.checks(verify::gf_checks(20));
    o.expect("histogram and gf check count", true, n > 0 && g > 0);
    let hist = single.l_histogram(12).unwrap();
    o.expect("Catalan(12)", 208012u64, hist.values().sum());
}

fn l6_sequences(o: &mut Outcome) {
    let oracle = Oracle::default();
    let mut totals = Vec::new();
    let mut mixed = Vec::new();
    for n in 4..=12 {
        let parts = count_l6(n, &oracle).unwrap();
        totals.push(parts.total());
        mixed.push(parts.mixed);
    }
    o.expect(
        "totals",
        bigs(&[3, 6, 14, 34, 92, 252, 710, 2026, 5844]),
        totals,
    );
    o.expect(
        "mixed",
        bigs(&[2, 4, 8, 16, 44, 122, 352, 1028, 3036]),
        mixed,
    );
}

fn bijection_roundtrips(o: &mut Outcome) {
    let count = o.checks(verify::bijection_checks(10, 11, &Oracle::default()));
    // per n <= 10: one star-word check and 2(r+s-1) single-star checks per
    // r+s <= n; per n <= 11: five two-star checks
    let expected: usize = (1..=10).map(|n| 1 + n * (n - 1)).sum::<usize>() + 5 * 11;
    o.expect("bijection checks run", expected, count);
}

fn central_identity(o: &mut Outcome) {
    let oracle = Oracle::default();
    for n in 1..=5 {
        let mut sum = 0u64;
        for d in oracle.enum_dyck(n).unwrap() {
            let matching = oracle.words_matching(&d).unwrap();
            o.expect(&format!("words over {d}"), d.l_statistic(), big(matching));
            sum += matching;
        }
        let closed = binomial(3 * n, n) / big(2 * n as u64 + 1);
        o.expect(&format!("sum n={n}"), closed.clone(), big(sum));
        let agreeing = oracle
            .enum_catalan_words(n)
            .unwrap()
            .iter()
            .filter(|c| c.xy_projection() == c.yz_projection())
            .count() as u64;
        o.expect(
            &format!("words with equal projections n={n}"),
            closed,
            big(agreeing),
        );
        if n == 5 {
            o.expect("n=5 sum", 273, sum);
        }
    }
}

fn eq1(o: &mut Outcome) {
    let oracle = Oracle::default();
    let mut sums = Vec::new();
    for n in 1..=3 {
        let perms = big(oracle.enum_321_3cycle(3 * n).unwrap());
        let sum = weighted_sum_eq1(n, &oracle).unwrap();
        o.expect(&format!("n={n}"), perms, sum.clone());
        sums.push(sum);
    }
    o.expect("values", bigs(&[2, 10, 60]), sums);
}

fn figures(o: &mut Outcome) {
    let count = o.checks(verify::figure_checks(&Oracle::default()));
    o.expect("figure rows checked", 42, count);
}

fn property_suites(o: &mut Outcome) {
    for n in 0..=14 {
        for total in 2..=7usize {
            let base = count_rs(n, 1, total - 1).unwrap();
            for r in 2..total {
                o.expect(
                    &format!("rs n={n} r={r} s={}", total - r),
                    &base,
                    &count_rs(n, r, total - r).unwrap(),
                );
            }
        }
    }
    let m = motzkin_gf(20);
    let rhs = &(&TruncatedSeries::one(20) + &m.shift(1)) + &(&m * &m).shift(2);
    o.expect("m = 1 + x m + x^2 m^2", m, rhs.truncate(20));
    let one = Oracle::default().with_workers(1);
    let many = Oracle::default().with_workers(8);
    for n in [6, 10, 12] {
        o.expect(
            &format!("histogram n={n} 1 vs 8 workers"),
            one.l_histogram(n).unwrap(),
            many.l_histogram(n).unwrap(),
        );
    }
}

type Criterion = (u32, &'static str, Duration, fn(&mut Outcome));

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            1,
            "table reproduction",
            Duration::from_secs(1),
            table_reproduction,
        ),
        (
            2,
            "three-way agreement n <= 12",
            Duration::from_secs(60),
            three_way_agreement,
        ),
        (3, "L = 6 sequences", Duration::from_secs(60), l6_sequences),
        (
            4,
            "bijection roundtrips",
            Duration::from_secs(60),
            bijection_roundtrips,
        ),
        (
            5,
            "central identity",
            Duration::from_secs(60),
            central_identity,
        ),
        (6, "weighted sum", Duration::from_secs(10), eq1),
        (7, "figure golden tests", Duration::from_secs(60), figures),
        (
            8,
            "property suites",
            Duration::from_secs(60),
            property_suites,
        ),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let mut outcome = Outcome::new();
        let start = Instant::now();
        run(&mut outcome);
        let elapsed = start.elapsed();
        if elapsed > limit {
            outcome
                .failures
                .push(format!("took {elapsed:.2?}, limit {limit:?}"));
        }
        let status = if outcome.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!("criterion {id} ({name}): {status} [{elapsed:.2?}]");
        for f in outcome.failures.iter().take(10) {
            println!("    {f}");
        }
        if !outcome.failures.is_empty() {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: 8/8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 8 criteria failed");
        ExitCode::FAILURE
    }
}
