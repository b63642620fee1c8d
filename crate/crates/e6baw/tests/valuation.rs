//! Randomized cross-checks of the symbolic l-valuation against plain
//! big-integer arithmetic, plus property tests for the factored forms.
//!
//! The valuation of a factored product at a context (l, e) is a formal
//! `alpha * a + beta` with `a = nu_l(Phi_e(q))`.  For any concrete prime
//! power q coprime to l and of order e mod l, that form must equal the
//! honest valuation of the evaluated rational number.

use e6baw::cyclopoly::{phi_eval, CycloProduct, ValuationContext};
use num::{BigInt, BigRational, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn nu_int(n: &BigInt, l: u64) -> i64 {
    assert!(!n.is_zero());
    let l = BigInt::from(l);
    let mut n = n.abs();
    let mut count = 0;
    loop {
        let (q, r) = num::Integer::div_rem(&n, &l);
        if !r.is_zero() {
            return count;
        }
        n = q;
        count += 1;
    }
}

fn nu_rat(r: &BigRational, l: u64) -> i64 {
    nu_int(r.numer(), l) - nu_int(r.denom(), l)
}

fn mult_order(q0: u64, l: u64) -> u32 {
    let mut pow = q0 % l;
    let mut e = 1;
    while pow != 1 {
        pow = pow * q0 % l;
        e += 1;
    }
    e
}

fn prime_powers_up_to(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for p in 2..=limit {
        let mut d = 2;
        let mut composite = false;
        while d * d <= p {
            if p % d == 0 {
                composite = true;
                break;
            }
            d += 1;
        }
        if composite {
            continue;
        }
        let mut pk = p;
        while pk <= limit {
            out.push(pk);
            match pk.checked_mul(p) {
                Some(next) => pk = next,
                None => break,
            }
        }
    }
    out.sort_unstable();
    out
}

#[test]
fn valuation_matches_integer_arithmetic_on_random_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6ba3);
    let qs = prime_powers_up_to(1000);
    let primes = [5u64, 7, 11, 13];
    let mut done = 0;
    while done < 200 {
        let l = primes[rng.gen_range(0..primes.len())];
        let q0 = qs[rng.gen_range(0..qs.len())];
        if q0 % l == 0 {
            continue;
        }
        let e = mult_order(q0, l);
        let ctx = ValuationContext::new(l, e);

        // random factored product: a constant with an explicit l-part, a
        // power of q, and a handful of cyclotomic factors
        let j = rng.gen_range(0..=2u32);
        let num = (l as i64).pow(j) * rng.gen_range(1..=9i64) * [1, -1][rng.gen_range(0..2)];
        let den = rng.gen_range(1..=9i64);
        let mut p = CycloProduct::fraction(num, den) * CycloProduct::q_power(rng.gen_range(-5..=5));
        for _ in 0..rng.gen_range(0..=6) {
            p *= CycloProduct::phi(rng.gen_range(1..=36), rng.gen_range(-3..=3));
        }

        let form = p.valuation(&ctx);
        let a = nu_int(&phi_eval(e, q0 as i64), l);
        assert!(a >= 1, "q0 = {q0} has order {e} mod {l}, so l | Phi_e(q0)");
        let direct = nu_rat(&p.evaluate(q0 as i64), l);
        assert_eq!(
            direct,
            form.alpha * a + form.beta,
            "p = {p}, q0 = {q0}, l = {l}, e = {e}, a = {a}"
        );
        done += 1;
    }
}

#[test]
fn scan_primes_give_valuation_one() {
    // at the default scan prime, a = 1: the formal alpha is the honest
    // exponent; spot-check the generic identity once with a > 1
    let ctx = ValuationContext::new(5, 1);
    let p = CycloProduct::phi(1, 3) * CycloProduct::phi(5, 1);
    // q0 = 7: ord_5(7) = 4, so pick q0 = 11: 11 = 1 mod 5, e = 1
    // nu_5(Phi_1(11)) = nu_5(10) = 1, nu_5(Phi_5(11)) = 1
    assert_eq!(nu_rat(&p.evaluate(11), 5), 3 + 1);
    let form = p.valuation(&ctx);
    assert_eq!((form.alpha, form.beta), (3, 1));
    // q0 = 57 = 3*19 is not a prime power but evaluation still works;
    // the oracle test above sticks to prime powers per the group setting
    let a2 = nu_int(&phi_eval(1, 251), 5);
    assert_eq!(a2, 3, "251 - 1 = 250 = 2 * 5^3");
    assert_eq!(nu_rat(&p.evaluate(251), 5), form.alpha * a2 + form.beta);
}

fn arb_product() -> impl Strategy<Value = CycloProduct> {
    (
        1..=9i64,
        prop::bool::ANY,
        1..=9i64,
        -4..=4i64,
        prop::collection::vec((1..=18u32, -2..=2i64), 0..5),
    )
        .prop_map(|(num, neg, den, qexp, factors)| {
            let mut p = CycloProduct::fraction(if neg { -num } else { num }, den)
                * CycloProduct::q_power(qexp);
            for (d, m) in factors {
                p *= CycloProduct::phi(d, m);
            }
            p
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn evaluation_is_multiplicative(a in arb_product(), b in arb_product(), q0 in 2i64..=9) {
        let lhs = (a.clone() * b.clone()).evaluate(q0);
        prop_assert_eq!(lhs, a.evaluate(q0) * b.evaluate(q0));
    }

    #[test]
    fn valuation_is_additive(a in arb_product(), b in arb_product(), l in prop::sample::select(vec![5u64, 7, 11]), e in 1u32..=6) {
        let ctx = ValuationContext::new(l, e);
        let (va, vb) = (a.valuation(&ctx), b.valuation(&ctx));
        let vab = (a * b).valuation(&ctx);
        prop_assert_eq!(vab.alpha, va.alpha + vb.alpha);
        prop_assert_eq!(vab.beta, va.beta + vb.beta);
    }

    #[test]
    fn text_round_trip(p in arb_product()) {
        let again: CycloProduct = p.to_string().parse().unwrap();
        prop_assert_eq!(p, again);
    }

    #[test]
    fn ennola_is_an_involution(p in arb_product()) {
        prop_assert_eq!(p.clone().ennola().ennola(), p);
    }

    #[test]
    fn inverse_cancels(p in arb_product()) {
        prop_assert!((p.clone() * p.inverse()).is_one());
    }
}
