//! Generic degrees of unipotent characters, group orders, and the
//! defect-zero scans built from them.
//!
//! Everything returns a [`CycloProduct`], so defect computations reduce to
//! valuation arithmetic.  Two independent degree routes exist for type A
//! (beta-set quotient formula and the q-hook formula) and the tests hold
//! them equal.
//!
//! One sign subtlety is worth recording.  The cross factors of the type A
//! formula are `(q^{lambda_i} - eps^{lambda_i - lambda_i'} q^{lambda_i'})`:
//! the sign exponent follows the parity of the entry difference, which is
//! what makes the quotient a polynomial with positive values for eps = -1.
//! (Exponent conventions that instead use the index parity `i + i'` break
//! already at the partition 2+1 of 3.)

use crate::cyclopoly::{CycloProduct, Sign, ValuationContext, ValuationForm};
use crate::symbols::{enumerate_partitions, enumerate_symbols, LusztigSymbol, Partition};

/// Which order formula a [`GroupOrder`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Linear (eps = +1) / unitary (eps = -1) groups.
    A,
    /// Even orthogonal spin groups, split (Plus) or twisted (Minus).
    D,
    /// The two forms of E6.
    E6,
}

/// A group order in factored form, tagged with its family data.
#[derive(Debug, Clone)]
pub struct GroupOrder {
    pub family: Family,
    pub rank: u32,
    pub twist: Sign,
    pub value: CycloProduct,
}

/// `|GL_n^eps(q)| = q^{n(n-1)/2} prod_{k=1}^{n} (q^k - eps^k)`.
pub fn order_gl(n: u32, eps: Sign) -> GroupOrder {
    let mut value = CycloProduct::q_power(i64::from(n) * (i64::from(n) - 1) / 2);
    for k in 1..=n {
        value *= CycloProduct::signed_qpow_minus(k, eps.pow(u64::from(k)));
    }
    GroupOrder {
        family: Family::A,
        rank: n,
        twist: eps,
        value,
    }
}

/// `|SL_n^eps(q)|`: the GL order divided by `q - eps`.
pub fn order_sl(n: u32, eps: Sign) -> GroupOrder {
    let gl = order_gl(n, eps);
    GroupOrder {
        value: gl.value / CycloProduct::signed_qpow_minus(1, eps),
        ..gl
    }
}

/// `|Spin_{2n}^eta(q)| = q^{n(n-1)} (q^n - eta) prod_{k=1}^{n-1} (q^{2k} - 1)`.
pub fn order_spin(n: u32, eta: Sign) -> GroupOrder {
    let mut value = CycloProduct::q_power(i64::from(n) * (i64::from(n) - 1));
    value *= CycloProduct::signed_qpow_minus(n, eta);
    for k in 1..n {
        value *= CycloProduct::signed_qpow_minus(2 * k, Sign::Plus);
    }
    GroupOrder {
        family: Family::D,
        rank: n,
        twist: eta,
        value,
    }
}

/// `|E6^eps(q)| = q^36 (q^2-1)(q^5-eps)(q^6-1)(q^8-1)(q^9-eps)(q^12-1)`.
pub fn order_e6(eps: Sign) -> GroupOrder {
    let mut value = CycloProduct::q_power(36);
    for (k, s) in [
        (2, Sign::Plus),
        (5, eps),
        (6, Sign::Plus),
        (8, Sign::Plus),
        (9, eps),
        (12, Sign::Plus),
    ] {
        value *= CycloProduct::signed_qpow_minus(k, s);
    }
    GroupOrder {
        family: Family::E6,
        rank: 6,
        twist: eps,
        value,
    }
}

/// Generic degree of the unipotent character of `GL_n^eps(q)` (equally of
/// `SL_n^eps(q)`) labeled by a partition of `n`.
///
/// # Panics
///
/// Panics on the empty partition.
pub fn degree_a(alpha: &Partition, eps: Sign) -> CycloProduct {
    degree_a_padded(alpha, eps, alpha.len())
}

/// Same degree computed from a beta-set padded to `rows` entries; the
/// result is independent of `rows` (shift invariance of the formula).
pub fn degree_a_padded(alpha: &Partition, eps: Sign, rows: usize) -> CycloProduct {
    assert!(!alpha.is_empty(), "degree of the empty partition is undefined");
    let n = alpha.n();
    let lambda = alpha.beta_set(rows);
    let m = lambda.len();

    let mut num = CycloProduct::one();
    for k in 1..=n {
        num *= CycloProduct::signed_qpow_minus(k, eps.pow(u64::from(k)));
    }
    for i in 1..m {
        for i_prime in 0..i {
            // (q^{l_i} - eps^{l_i - l_i'} q^{l_i'}), the sign exponent
            // carried by the difference parity.
            let diff = lambda[i] - lambda[i_prime];
            num *= CycloProduct::q_power(i64::from(lambda[i_prime]))
                * CycloProduct::signed_qpow_minus(diff, eps.pow(u64::from(diff)));
        }
    }

    let mut den = CycloProduct::q_power((1..m as i64).map(|j| j * (j - 1) / 2).sum());
    for &l in &lambda {
        for k in 1..=l {
            den *= CycloProduct::signed_qpow_minus(k, eps.pow(u64::from(k)));
        }
    }
    num / den
}

/// Independent oracle for `degree_a(alpha, +1)`: the q-analog hook formula
/// `q^{n(alpha)} prod_{k=1}^{n}(q^k - 1) / prod_{boxes}(q^{hook} - 1)`.
pub fn hook_degree_a(alpha: &Partition) -> CycloProduct {
    assert!(!alpha.is_empty(), "degree of the empty partition is undefined");
    // Work with descending parts for the classical hook picture.
    let desc: Vec<u32> = alpha.parts().iter().rev().copied().collect();
    let n_stat: i64 = desc
        .iter()
        .enumerate()
        .map(|(i, &p)| i as i64 * i64::from(p))
        .sum();
    let mut value = CycloProduct::q_power(n_stat);
    for k in 1..=alpha.n() {
        value *= CycloProduct::signed_qpow_minus(k, Sign::Plus);
    }
    for (i, &p) in desc.iter().enumerate() {
        for j in 1..=p {
            let arm = p - j;
            let leg = desc[i + 1..].iter().filter(|&&r| r >= j).count() as u32;
            value = value / CycloProduct::signed_qpow_minus(arm + leg + 1, Sign::Plus);
        }
    }
    value
}

/// Generic degree of the unipotent character of `Spin_{2n}^{+}(q)`
/// (defect 0 mod 4) or `Spin_{2n}^{-}(q)` (defect 2 mod 4) labeled by a
/// reduced symbol; the twist is read off the symbol.
///
/// The constant is `2^-c` with `c = (a+b-2)/2`, bumped by one for
/// degenerate symbols (which label two characters of this same degree).
pub fn degree_d(s: &LusztigSymbol) -> CycloProduct {
    let n = s.rank();
    if n == 0 {
        return CycloProduct::one();
    }
    let (x, y) = (s.row_x(), s.row_y());
    let (a, b) = (x.len(), y.len());

    let mut num = CycloProduct::one();
    for k in 1..n {
        num *= CycloProduct::signed_qpow_minus(2 * k, Sign::Plus);
    }
    num *= CycloProduct::signed_qpow_minus(n, s.twist());
    num *= row_differences(x) * row_differences(y);
    for &xi in x {
        for &yj in y {
            // (q^{xi} + q^{yj}); equal entries leave 2 q^{xi}.
            num *= if xi == yj {
                CycloProduct::from_integer(2) * CycloProduct::q_power(i64::from(xi))
            } else {
                CycloProduct::q_power(i64::from(xi.min(yj)))
                    * CycloProduct::signed_qpow_minus(xi.abs_diff(yj), Sign::Minus)
            };
        }
    }

    let mut c = (a + b) as i64 / 2 - 1;
    if s.is_degenerate() {
        c += 1;
    }
    let mut den = CycloProduct::from_integer(2);
    den = pow(&den, c);
    let mut qe = 0i64;
    let mut t = (a + b) as i64 - 2;
    while t >= 2 {
        qe += t * (t - 1) / 2;
        t -= 2;
    }
    den *= CycloProduct::q_power(qe);
    for &l in x.iter().chain(y.iter()) {
        for k in 1..=l {
            den *= CycloProduct::signed_qpow_minus(2 * k, Sign::Plus);
        }
    }
    num / den
}

// prod_{i'<i} (q^{r_i} - q^{r_i'}) over one strictly increasing row.
fn row_differences(row: &[u32]) -> CycloProduct {
    let mut out = CycloProduct::one();
    for i in 1..row.len() {
        for i_prime in 0..i {
            out *= CycloProduct::q_power(i64::from(row[i_prime]))
                * CycloProduct::signed_qpow_minus(row[i] - row[i_prime], Sign::Plus);
        }
    }
    out
}

fn pow(base: &CycloProduct, e: i64) -> CycloProduct {
    let mut out = CycloProduct::one();
    let factor = if e >= 0 { base.clone() } else { base.inverse() };
    for _ in 0..e.unsigned_abs() {
        out *= factor.clone();
    }
    out
}

/// `valuation(order) - valuation(degree)`: the l-part a block of positive
/// defect keeps above the character.  Identically zero means defect zero.
pub fn defect_gap(
    degree: &CycloProduct,
    order: &CycloProduct,
    ctx: &ValuationContext,
) -> ValuationForm {
    order.valuation(ctx).sub(&degree.valuation(ctx))
}

/// One scanned character: label, degree, gap, and whether the gap vanished.
#[derive(Debug, Clone)]
pub struct ScanRecord {
    pub label: String,
    pub degree: CycloProduct,
    pub gap: ValuationForm,
    pub defect_zero: bool,
}

/// Smallest prime `l >= 5` with `l > n` and `e | l - 1`, so the closed-form
/// hypotheses (`l` larger than every hook/entry) hold in the scans.
pub fn default_scan_prime(n: u32, e: u32) -> u64 {
    let mut l = u64::from(n.max(4)) + 1;
    loop {
        if is_prime_u64(l) && (l - 1) % u64::from(e) == 0 {
            return l;
        }
        l += 1;
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Scan records for all partitions of `n` against `|SL_n^eps(q)|` in the
/// given context.
pub fn scan_records_a(n: u32, eps: Sign, ctx: &ValuationContext) -> Vec<ScanRecord> {
    let order = order_sl(n, eps).value;
    enumerate_partitions(n)
        .into_iter()
        .map(|alpha| {
            let degree = degree_a(&alpha, eps);
            let gap = defect_gap(&degree, &order, ctx);
            ScanRecord {
                label: alpha.to_string(),
                degree,
                gap,
                defect_zero: gap.is_zero(),
            }
        })
        .collect()
}

/// Defect-zero partitions of `SL_n^eps(q)` in the regime `l | q - eps`
/// (`e = 1` for eps = +1, `e = 2` for eps = -1), with `l` chosen internally
/// above `n`.  Expected empty for every `n >= 2`.
pub fn scan_dz_a(n: u32, eps: Sign) -> Vec<Partition> {
    let e = match eps {
        Sign::Plus => 1,
        Sign::Minus => 2,
    };
    let ctx = ValuationContext::new(default_scan_prime(n, e), e);
    scan_dz_a_ctx(n, eps, &ctx)
}

/// The same scan in an explicit context.
pub fn scan_dz_a_ctx(n: u32, eps: Sign, ctx: &ValuationContext) -> Vec<Partition> {
    let order = order_sl(n, eps).value;
    enumerate_partitions(n)
        .into_iter()
        .filter(|alpha| defect_gap(&degree_a(alpha, eps), &order, ctx).is_zero())
        .collect()
}

/// Minimum over partitions of `n` of the gap form, compared at `a = 1`
/// (ties broken by smaller alpha).  Equals `(n-1) a` exactly in scope.
pub fn min_gap_a(n: u32, eps: Sign) -> ValuationForm {
    let e = match eps {
        Sign::Plus => 1,
        Sign::Minus => 2,
    };
    let ctx = ValuationContext::new(default_scan_prime(n, e), e);
    let order = order_sl(n, eps).value;
    enumerate_partitions(n)
        .into_iter()
        .map(|alpha| defect_gap(&degree_a(&alpha, eps), &order, &ctx))
        .min_by_key(|g| (g.alpha + g.beta, g.alpha))
        .expect("n >= 1 has partitions")
}

/// Scan records for all rank-`n` symbols of the class matching `twist`
/// against the corresponding spin group order.
pub fn scan_records_d(n: u32, twist: Sign, ctx: &ValuationContext) -> Vec<ScanRecord> {
    let class = match twist {
        Sign::Plus => 0,
        Sign::Minus => 2,
    };
    let order = order_spin(n, twist).value;
    enumerate_symbols(n, class)
        .into_iter()
        .map(|s| {
            let degree = degree_d(&s);
            let gap = defect_gap(&degree, &order, ctx);
            ScanRecord {
                label: s.to_string(),
                degree,
                gap,
                defect_zero: gap.is_zero(),
            }
        })
        .collect()
}

/// Defect-zero symbols of `Spin_{2n}^{twist}(q)` at the order-`e` context,
/// with `l` chosen internally above `n`.
pub fn scan_dz_d(n: u32, twist: Sign, e: u32) -> Vec<LusztigSymbol> {
    let ctx = ValuationContext::new(default_scan_prime(n, e), e);
    scan_dz_d_ctx(n, twist, &ctx)
}

/// The same scan in an explicit context.
pub fn scan_dz_d_ctx(n: u32, twist: Sign, ctx: &ValuationContext) -> Vec<LusztigSymbol> {
    let class = match twist {
        Sign::Plus => 0,
        Sign::Minus => 2,
    };
    let order = order_spin(n, twist).value;
    enumerate_symbols(n, class)
        .into_iter()
        .filter(|s| defect_gap(&degree_d(s), &order, ctx).is_zero())
        .collect()
}

/// Number of defect-zero unipotent characters behind [`scan_dz_d`]
/// (degenerate symbols count twice).
pub fn dz_char_count_d(n: u32, twist: Sign, e: u32) -> u32 {
    scan_dz_d(n, twist, e).iter().map(|s| s.multiplicity()).sum()
}

/// The binomial identity behind the type D defect computation:
/// `C(a,2) + C(b,2) = floor(((a+b-1)/2)^2) + floor(((a-b)/2)^2)`.
pub fn symbol_identity_check(a: u64, b: u64) -> bool {
    let choose2 = |x: i64| x * (x - 1) / 2;
    let (a, b) = (a as i64, b as i64);
    let lhs = choose2(a) + choose2(b);
    let rhs = (a + b - 1) * (a + b - 1) / 4 + (a - b) * (a - b) / 4;
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn sym(x: &[u32], y: &[u32]) -> LusztigSymbol {
        LusztigSymbol::new(x.to_vec(), y.to_vec())
    }

    fn cp(s: &str) -> CycloProduct {
        s.parse().unwrap()
    }

    #[test]
    fn order_phi_vectors() {
        let e6 = order_e6(Sign::Plus).value;
        assert_eq!(
            e6,
            cp("q^36*(q-1)^6*(q+1)^4*PHI(3)^3*PHI(4)^2*PHI(5)^1*PHI(6)^2*PHI(8)^1*PHI(9)^1*PHI(12)^1")
        );
        let e6m = order_e6(Sign::Minus).value;
        // Ennola swaps 1<->2, 3<->6, 5<->10, 9<->18 in the order.
        assert_eq!(e6m, e6.ennola().abs());
        assert_eq!(e6m.factor_mult(2), 6);
        assert_eq!(e6m.factor_mult(10), 1);
        assert_eq!(e6m.factor_mult(18), 1);
    }

    #[test]
    fn sl_spin_orders() {
        assert_eq!(
            order_sl(2, Sign::Plus).value,
            cp("q^1*(q^2-1)")
        );
        // |Spin8+| = q^12 (q^4-1)(q^2-1)(q^4-1)(q^6-1).
        let spin8 = order_spin(4, Sign::Plus).value;
        assert_eq!(spin8.qexp(), 12);
        assert_eq!(spin8.factor_mult(1), 4);
        assert_eq!(spin8.factor_mult(2), 4);
        let spin8m = order_spin(4, Sign::Minus).value;
        assert_eq!(spin8m.factor_mult(1), 3);
        assert_eq!(spin8m.factor_mult(2), 3);
        assert_eq!(spin8m.factor_mult(8), 1);
    }

    #[test]
    fn degree_a_small_cases() {
        for eps in [Sign::Plus, Sign::Minus] {
            for n in 1..=5 {
                assert!(degree_a(&part(&[n]), eps).is_one(), "trivial, n={n}");
            }
        }
        // Steinberg: q^{n(n-1)/2}.
        assert_eq!(degree_a(&part(&[1, 1, 1]), Sign::Plus), cp("1*q^3"));
        assert_eq!(degree_a(&part(&[1, 1, 1]), Sign::Minus), cp("1*q^3"));
        // The standard-series character of GL3 / its unitary twin.
        assert_eq!(degree_a(&part(&[2, 1]), Sign::Plus), cp("1*q^1*PHI(2)^1"));
        assert_eq!(degree_a(&part(&[2, 1]), Sign::Minus), cp("1*q^1*PHI(1)^1"));
    }

    #[test]
    fn degree_a_is_shift_invariant() {
        for eps in [Sign::Plus, Sign::Minus] {
            for n in 1..=6 {
                for alpha in enumerate_partitions(n) {
                    let base = degree_a(&alpha, eps);
                    assert_eq!(base, degree_a_padded(&alpha, eps, alpha.len() + 1));
                    assert_eq!(base, degree_a_padded(&alpha, eps, alpha.len() + 3));
                }
            }
        }
    }

    #[test]
    fn hook_oracle_matches() {
        for n in 1..=7 {
            for alpha in enumerate_partitions(n) {
                assert_eq!(
                    degree_a(&alpha, Sign::Plus),
                    hook_degree_a(&alpha),
                    "partition {alpha} of {n}"
                );
            }
        }
    }

    #[test]
    fn unitary_degrees_are_ennola_twists() {
        for n in 1..=6 {
            for alpha in enumerate_partitions(n) {
                assert_eq!(
                    degree_a(&alpha, Sign::Minus),
                    degree_a(&alpha, Sign::Plus).ennola().abs(),
                    "partition {alpha} of {n}"
                );
            }
        }
    }

    #[test]
    fn degree_d_paper_example() {
        // The rank 4, e = 2 defect zero character: 1/2 q^3 (q+1)^3 (q^3+1).
        let d = degree_d(&sym(&[1, 3], &[0, 2]));
        assert_eq!(d, cp("1/2*q^3*(q+1)^3*(q^3+1)"));
        assert!(d.is_polynomial());
        assert_eq!(
            d.evaluate(3),
            num::BigRational::from_integer(24192.into())
        );
    }

    #[test]
    fn degree_d_trivial_cases() {
        for n in 1..=8 {
            assert!(degree_d(&sym(&[n], &[0])).is_one(), "split trivial, n={n}");
            assert!(degree_d(&sym(&[0, n], &[])).is_one(), "twisted trivial, n={n}");
        }
    }

    #[test]
    fn degree_d_rank4_cuspidal() {
        // The unique rank 4 defect zero symbol at e = 1.
        let d = degree_d(&sym(&[0, 1, 2, 3], &[]));
        assert_eq!(d, cp("1/2*q^3*(q-1)^4*PHI(3)^1"));
    }

    #[test]
    fn degree_d_shift_invariant() {
        for n in 1..=6 {
            for class in [0, 2] {
                for s in enumerate_symbols(n, class) {
                    assert_eq!(degree_d(&s), degree_d(&s.shift()), "{s}");
                    assert_eq!(degree_d(&s), degree_d(&s.shift().shift()), "{s}");
                }
            }
        }
    }

    #[test]
    fn degree_d_degenerate_constant() {
        // Degenerate symbols halve once more.
        let s = sym(&[1, 2], &[1, 2]);
        assert!(s.is_degenerate());
        let d = degree_d(&s);
        assert!(d.is_polynomial());
        let q0 = d.evaluate(2);
        assert!(q0.is_integer() && q0 > num::BigRational::from_integer(0.into()));
    }

    #[test]
    fn degrees_integral_at_prime_powers() {
        for n in 1..=6 {
            for class in [0, 2] {
                for s in enumerate_symbols(n, class) {
                    let d = degree_d(&s);
                    assert!(d.is_polynomial(), "{s}");
                    for q0 in [2i64, 3, 4, 5, 7, 8, 9] {
                        let v = d.evaluate(q0);
                        assert!(v.is_integer(), "{s} at {q0} -> {v}");
                        assert!(v > num::BigRational::from_integer(0.into()));
                    }
                }
            }
            for eps in [Sign::Plus, Sign::Minus] {
                for alpha in enumerate_partitions(n) {
                    let d = degree_a(&alpha, eps);
                    assert!(d.is_polynomial(), "{alpha}");
                    for q0 in [2i64, 3, 5] {
                        assert!(d.evaluate(q0).is_integer(), "{alpha} at {q0}");
                    }
                }
            }
        }
    }

    #[test]
    fn scan_a_empty_and_min_gap() {
        for eps in [Sign::Plus, Sign::Minus] {
            for n in 2..=7 {
                assert!(scan_dz_a(n, eps).is_empty(), "n={n}");
                let g = min_gap_a(n, eps);
                assert_eq!((g.alpha, g.beta), (i64::from(n) - 1, 0), "n={n}");
            }
        }
    }

    #[test]
    fn scan_d_hits() {
        let hits = scan_dz_d(4, Sign::Plus, 1);
        assert_eq!(hits, vec![sym(&[0, 1, 2, 3], &[])]);
        let hits = scan_dz_d(4, Sign::Plus, 2);
        assert_eq!(hits, vec![sym(&[1, 3], &[0, 2])]);
        assert!(scan_dz_d(5, Sign::Minus, 2).is_empty());
        assert!(scan_dz_d(5, Sign::Plus, 1).is_empty());
        assert!(scan_dz_d(6, Sign::Plus, 1).is_empty());
    }

    #[test]
    fn binomial_symbol_identity() {
        for a in 0..=20 {
            for b in 0..=20 {
                assert!(symbol_identity_check(a, b), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn lemma_gap_identity_a() {
        // gap(order_SL, degree) = val(prod_i prod_{k<=l_i}(q^k - eps^k))
        //                       - val(prod_{i'<i}(q^{l_i - l_i'} - eps^{l_i - l_i'}))
        //                       - val(q - eps), symbolically.
        for (eps, e) in [(Sign::Plus, 1u32), (Sign::Minus, 2u32)] {
            for n in 2..=6 {
                let ctx = ValuationContext::new(default_scan_prime(n, e), e);
                let order = order_sl(n, eps).value;
                for alpha in enumerate_partitions(n) {
                    let lambda = alpha.beta_set(alpha.len());
                    let mut den = CycloProduct::one();
                    for &l in &lambda {
                        for k in 1..=l {
                            den *= CycloProduct::signed_qpow_minus(k, eps.pow(u64::from(k)));
                        }
                    }
                    let mut cross = CycloProduct::one();
                    for i in 1..lambda.len() {
                        for ip in 0..i {
                            let diff = lambda[i] - lambda[ip];
                            cross *=
                                CycloProduct::signed_qpow_minus(diff, eps.pow(u64::from(diff)));
                        }
                    }
                    let expected = den
                        .valuation(&ctx)
                        .sub(&cross.valuation(&ctx))
                        .sub(&CycloProduct::signed_qpow_minus(1, eps).valuation(&ctx));
                    let gap = defect_gap(&degree_a(&alpha, eps), &order, &ctx);
                    assert_eq!(gap, expected, "{alpha}, eps {eps}");
                }
            }
        }
    }

    #[test]
    fn lemma_gap_closed_form_d() {
        // Untwisted, e = 1: gap = (n - ((a-b)/2)^2) a for every symbol.
        for n in 1..=8 {
            let ctx = ValuationContext::new(default_scan_prime(n, 1), 1);
            let order = order_spin(n, Sign::Plus).value;
            for s in enumerate_symbols(n, 0) {
                let gap = defect_gap(&degree_d(&s), &order, &ctx);
                let half_defect = i64::from(s.defect()) / 2;
                assert_eq!(
                    (gap.alpha, gap.beta),
                    (i64::from(n) - half_defect * half_defect, 0),
                    "{s}"
                );
            }
        }
    }
}
