//! Worked values for individual operations, each recomputed here by an
//! independent route (exhaustive filtering or a direct formula).

use std::collections::BTreeMap;

use dyckl::bijections::{from_star_word, rs_two_returns_forward, to_star_word};
use dyckl::counting::{count_l2, count_rs, CountQuery, CountTarget};
use dyckl::oracle::{all_three_cycle_permutations, avoids_321, Oracle};
use dyckl::series::{ballot_gf, ballot_number, motzkin_numbers};
use dyckl::{DyckWord, Error, MotzkinWord, OracleBounds, StarWord};
use num_bigint::{BigInt, BigUint};

fn oracle() -> Oracle {
    Oracle::default()
}

#[test]
fn ballot_numbers_match_filtered_motzkin_words() {
    for len in 0..=12 {
        let words = oracle().enum_motzkin(len).unwrap();
        for k in 1..=7 {
            let filtered = words.iter().filter(|p| p.in_ballot_class(k)).count();
            let gf = ballot_gf(k, 12).unwrap();
            assert_eq!(BigInt::from(filtered), gf.coeffs()[len], "T_({len},{k})");
            assert_eq!(BigUint::from(filtered), ballot_number(len as i64, k as i64));
        }
    }
    let t13_6 = oracle()
        .enum_motzkin(13)
        .unwrap()
        .iter()
        .filter(|p| p.in_ballot_class(6))
        .count();
    assert_eq!(BigInt::from(t13_6), ballot_gf(6, 13).unwrap().coeffs()[13]);
}

#[test]
fn motzkin_numbers_count_motzkin_words() {
    let m = motzkin_numbers(10);
    for (len, expected) in m.iter().enumerate() {
        assert_eq!(
            BigUint::from(oracle().enum_motzkin(len).unwrap().len()),
            *expected
        );
    }
}

#[test]
fn single_star_class_with_l_15() {
    // one star column (4, 2): C(6, 4) = 15
    let filtered = oracle()
        .enum_dyck(11)
        .unwrap()
        .filter(|d| {
            let stars: Vec<_> = d
                .rs_array()
                .columns
                .into_iter()
                .filter(|&(r, s)| r > 0 && s > 0)
                .collect();
            stars == [(4, 2)]
        })
        .count();
    assert_eq!(count_rs(11, 4, 2).unwrap(), BigUint::from(filtered));
    assert!(filtered > 0);
}

#[test]
fn l2_at_four_is_a_single_path() {
    let hist = oracle().l_histogram(4).unwrap();
    assert_eq!(hist[&BigUint::from(2u32)], 1);
    assert_eq!(count_l2(4), BigUint::from(1u32));
    let paths: Vec<String> = oracle()
        .enum_dyck(4)
        .unwrap()
        .filter(|d| d.l_statistic() == BigUint::from(2u32))
        .map(|d| to_star_word(&d).unwrap().to_string())
        .collect();
    assert_eq!(paths, ["u*d"]);
}

#[test]
fn three_cycle_filters() {
    let six = all_three_cycle_permutations(6);
    assert_eq!(six.len(), 40);
    assert_eq!(six.iter().filter(|p| avoids_321(p)).count(), 10);
    let nine = all_three_cycle_permutations(9);
    assert_eq!(nine.iter().filter(|p| avoids_321(p)).count(), 60);
}

#[test]
fn words_matching_examples() {
    let o = oracle();
    for (word, expected) in [("ududud", 4), ("uuuddd", 1), ("uuddud", 3)] {
        assert_eq!(
            o.words_matching(&DyckWord::parse(word).unwrap()).unwrap(),
            expected
        );
    }
    // projections of a longer word
    let c: dyckl::CatalanWord = "xxyxyzzxyyzz".parse().unwrap();
    assert_eq!(c.xy_projection().to_string(), "uudududd");
    assert_eq!(c.yz_projection().to_string(), "uudduudd");
}

#[test]
fn joint_histogram_marginals() {
    let o = oracle();
    for n in 1..=9 {
        let joint = o.joint_histogram(n).unwrap();
        let mut marginal: BTreeMap<BigUint, u64> = BTreeMap::new();
        for ((l, _), c) in &joint {
            *marginal.entry(l.clone()).or_default() += c;
        }
        assert_eq!(marginal, o.l_histogram(n).unwrap());
        // returns range over 1..=n
        assert!(joint.keys().all(|(_, h)| (1..=n).contains(h)));
    }
}

#[test]
fn bounds_are_enforced() {
    let tight = Oracle::new(OracleBounds {
        dyck_n: 5,
        catalan_n: 2,
        permutation_m: 6,
        motzkin_len: 4,
    });
    assert!(matches!(
        tight.l_histogram(6),
        Err(Error::OracleBoundExceeded {
            requested: 6,
            bound: 5,
            ..
        })
    ));
    assert!(tight.enum_catalan_words(3).is_err());
    assert!(tight.enum_321_3cycle(9).is_err());
    assert!(tight.enum_motzkin(5).is_err());
    assert!(tight.words_matching(&DyckWord::zigzag(3)).is_err());
    let q = CountQuery::new(6, CountTarget::L(6));
    assert!(matches!(
        q.closed_form(&tight),
        Err(Error::OracleBoundExceeded { .. })
    ));
}

#[test]
fn worked_examples_through_the_star_word() {
    let d = rs_two_returns_forward(&MotzkinWord::parse("uhuhhdhhdudud").unwrap(), 3, 4).unwrap();
    assert_eq!(to_star_word(&d).unwrap().to_string(), "ududuhd*uhhdhh");
    let w: StarWord = "h*uduuduh*ddhh".parse().unwrap();
    let d = from_star_word(&w);
    assert_eq!(d.to_string(), "uudduuduuudduuududdudduuuddddd");
    assert_eq!(d.l_statistic(), BigUint::from(24u32));
}
