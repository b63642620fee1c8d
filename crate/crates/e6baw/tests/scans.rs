//! Deterministic scan sweeps over the classical families at the ranks the
//! E6 reduction actually needs, plus the combinatorial oracles behind them.

use e6baw::cyclopoly::{Sign, ValuationContext};
use e6baw::degrees::{
    defect_gap, degree_a, degree_d, default_scan_prime, hook_degree_a, min_gap_a, order_spin,
    scan_dz_a, scan_dz_d,
};
use e6baw::symbols::{enumerate_partitions, enumerate_symbols, LusztigSymbol};

#[test]
fn hook_oracle_all_partitions_to_8() {
    for n in 1..=8 {
        for alpha in enumerate_partitions(n) {
            let split = degree_a(&alpha, Sign::Plus);
            assert_eq!(split, hook_degree_a(&alpha), "{alpha}");
            // the twisted degree is the Ennola transform up to sign
            let twisted = degree_a(&alpha, Sign::Minus);
            assert_eq!(twisted, split.ennola().abs(), "{alpha}");
        }
    }
}

#[test]
fn type_a_never_reaches_defect_zero_to_rank_10() {
    for n in 2..=10 {
        for eps in [Sign::Plus, Sign::Minus] {
            assert!(scan_dz_a(n, eps).is_empty(), "n = {n}");
            let gap = min_gap_a(n, eps);
            assert_eq!((gap.alpha, gap.beta), (i64::from(n) - 1, 0), "n = {n}");
        }
    }
}

#[test]
fn type_d_e1_hits_exactly_at_even_square_ranks() {
    for n in 1..=16 {
        let hits = scan_dz_d(n, Sign::Plus, 1);
        if n == 4 {
            assert_eq!(hits, vec![LusztigSymbol::new(vec![0, 1, 2, 3], vec![])]);
        } else if n == 16 {
            assert_eq!(
                hits,
                vec![LusztigSymbol::new((0..=7).collect(), vec![])]
            );
        } else {
            assert!(hits.is_empty(), "n = {n}: {hits:?}");
        }
    }
}

#[test]
fn type_d_e1_gap_closed_form_to_rank_12() {
    // gap = (n - ((a-b)/2)^2) a for every untwisted symbol; defect zero is
    // possible exactly when the rank is the square of half the defect
    for n in 1..=12 {
        let ctx = ValuationContext::new(default_scan_prime(n, 1), 1);
        let order = order_spin(n, Sign::Plus).value;
        for s in enumerate_symbols(n, 0) {
            let gap = defect_gap(&degree_d(&s), &order, &ctx);
            let h = i64::from(s.defect()) / 2;
            assert_eq!((gap.alpha, gap.beta), (i64::from(n) - h * h, 0), "{s}");
        }
    }
}

#[test]
fn symbol_multiplicities_count_characters() {
    // the number of unipotent characters of Spin_2n^+ / Spin_2n^- follows
    // from symbols with degenerate ones counted twice; cross-count at small
    // rank against the classical values
    let count = |n: u32, class: u32| -> u32 {
        enumerate_symbols(n, class).iter().map(|s| s.multiplicity()).sum()
    };
    // Spin_8^+: 12 symbols, two degenerate: 14 characters
    assert_eq!(count(4, 0), 14);
    assert_eq!(count(4, 2), 10);
    // Spin_4^+ is A1 x A1 (4 characters), Spin_6^+ is A3 (5 = p(4))
    assert_eq!(count(2, 0), 4);
    assert_eq!(count(3, 0), 5);
}

#[test]
fn partition_counts_follow_euler_recurrence() {
    // p(n) via the pentagonal number recurrence, as an oracle for the
    // enumerator's completeness
    let top = 30usize;
    let mut p = vec![0i64; top + 1];
    p[0] = 1;
    for n in 1..=top {
        let mut acc = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 as usize > n {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            acc += sign * p[n - g1 as usize];
            if g2 as usize <= n {
                acc += sign * p[n - g2 as usize];
            }
            k += 1;
        }
        p[n] = acc;
    }
    for n in 1..=top {
        assert_eq!(
            enumerate_partitions(n as u32).len() as i64,
            p[n],
            "p({n})"
        );
    }
}
