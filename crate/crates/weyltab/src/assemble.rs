//! Assembles the full list of 30 unipotent character degrees of E6(q).
//!
//! Characters fall into families: 14 singletons whose degree equals the fake
//! degree outright, two four-member families with a two-element twist group,
//! and one eight-member family governed by S3.  Within a family the degree
//! vector is the Fourier matrix applied to the fake degrees placed at the
//! reflection-group slots (zero elsewhere); the slot dimensions are forced by
//! evaluation at q = 1, where principal-series degrees recover the character
//! dimension and the other members vanish.
//!
//! The three members induced from the cuspidal of a D4 Levi are pinned by an
//! independent identity: weighted by the multiplicities 1, 2, 1 they sum to
//! the cuspidal degree times the prime-to-q part of the parabolic index,
//!
//! ```text
//!   (1/2) q^3 PHI1^4 PHI3^3 PHI5 PHI6 PHI8 PHI9 PHI12.
//! ```

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed};

use e6baw::cyclopoly::{phi_poly, CycloProduct, Sign, ValuationContext};
use e6baw::degrees::{defect_gap, order_e6};

use crate::chartab::character_table;
use crate::fake::fake_degrees;
use crate::poly::{self, RPoly};
use crate::weyl::WeylGroup;

pub struct Entry {
    pub label: String,
    pub degree: CycloProduct,
    pub poly: RPoly,
}

/// Factors a polynomial that is known to be a constant times a power of q
/// times cyclotomics; panics if any other irreducible factor shows up.
fn to_cyclo(p: &RPoly) -> CycloProduct {
    let mut body = p.clone();
    poly::trim(&mut body);
    assert!(!body.is_empty(), "zero degree polynomial");
    let a = poly::low_degree(&body);
    body.drain(..a);
    let c = body.last().unwrap().clone();
    assert!(c.is_positive(), "degree with nonpositive leading coefficient");
    let cinv = c.recip();
    body = poly::scale(&body, &cinv);
    let mut out = CycloProduct::constant(c) * CycloProduct::q_power(a as i64);
    for d in 1..=36u32 {
        let phi = poly::from_int_coeffs(&phi_poly(d));
        while let Some(q) = poly::div_exact(&body, &phi) {
            body = q;
            out *= CycloProduct::phi(d, 1);
        }
    }
    assert_eq!(body, vec![BigRational::one()], "non-cyclotomic factor left");
    assert_eq!(out.evaluate(7), poly::eval_int(p, 7), "factorization mismatch");
    out
}

fn lin(terms: &[(i64, i64, &RPoly)]) -> RPoly {
    let mut acc = poly::zero();
    for (num, den, p) in terms {
        let c = BigRational::new(BigInt::from(*num), BigInt::from(*den));
        acc = poly::add(&acc, &poly::scale(p, &c));
    }
    acc
}

fn phi_rpoly(d: u32) -> RPoly {
    poly::from_int_coeffs(&phi_poly(d))
}

pub fn unipotent_degrees() -> Vec<Entry> {
    let w = WeylGroup::build();
    let table = character_table(&w);
    let fakes = fake_degrees(&w, &table.values);

    // label every character by (dimension, valuation of fake degree)
    let mut by_db: BTreeMap<(u64, usize), RPoly> = BTreeMap::new();
    for (i, f) in fakes.iter().enumerate() {
        let key = (table.degrees[i], poly::low_degree(f));
        let prev = by_db.insert(key, f.clone());
        assert!(prev.is_none(), "characters share a (dimension, b) label");
    }
    assert_eq!(by_db.len(), 25);
    // fake degrees pair up under tensoring with sign: q^36 f(1/q) is again one
    for f in by_db.values() {
        let dual = poly::reciprocal(f, 36);
        assert!(
            by_db.values().any(|g| *g == dual),
            "fake degrees not closed under duality"
        );
    }

    let fake_of = |d: u64, b: usize| -> RPoly {
        by_db
            .get(&(d, b))
            .unwrap_or_else(|| panic!("expected a character with (d, b) = ({d}, {b})"))
            .clone()
    };

    const FAMILY8: [(u64, usize); 5] = [(80, 7), (60, 8), (90, 8), (10, 9), (20, 10)];
    const FAMILY4A: [(u64, usize); 3] = [(30, 3), (15, 4), (15, 5)];
    const FAMILY4B: [(u64, usize); 3] = [(30, 15), (15, 16), (15, 17)];

    let mut entries: Vec<Entry> = Vec::new();
    let mut push = |label: String, p: RPoly| {
        let degree = to_cyclo(&p);
        entries.push(Entry {
            label,
            degree,
            poly: p,
        });
    };

    // singleton families: degree = fake degree
    let in_family = |key: &(u64, usize)| {
        FAMILY8.contains(key) || FAMILY4A.contains(key) || FAMILY4B.contains(key)
    };
    for (key, f) in &by_db {
        if !in_family(key) {
            push(format!("phi[{},{}]", key.0, key.1), f.clone());
        }
    }

    // the S3 family: slots (1,1), (g2,1), (g3,1), (1,r), (1,eps) carry the
    // fake degrees of phi[80,7], phi[60,8], phi[10,9], phi[90,8], phi[20,10];
    // the remaining three slots are the D4 member and the two cuspidals
    let f80 = fake_of(80, 7);
    let f60 = fake_of(60, 8);
    let f90 = fake_of(90, 8);
    let f10 = fake_of(10, 9);
    let f20 = fake_of(20, 10);
    for f in [&f80, &f60, &f90, &f10, &f20] {
        assert_eq!(poly::reciprocal(f, 36), **f, "S3-family fake not self-dual");
    }
    let deg80 = lin(&[(1, 6, &f80), (3, 6, &f60), (2, 6, &f10), (2, 6, &f90), (1, 6, &f20)]);
    let deg60 = lin(&[(1, 2, &f80), (1, 2, &f60), (-1, 2, &f20)]);
    let deg10 = lin(&[(1, 3, &f80), (2, 3, &f10), (-1, 3, &f90), (1, 3, &f20)]);
    let deg90 = lin(&[(1, 3, &f80), (-1, 3, &f10), (2, 3, &f90), (1, 3, &f20)]);
    let deg20 = lin(&[(1, 6, &f80), (-3, 6, &f60), (2, 6, &f10), (2, 6, &f90), (1, 6, &f20)]);
    let deg_d4_r = lin(&[(1, 2, &f80), (-1, 2, &f60), (-1, 2, &f20)]);
    let deg_theta = lin(&[(1, 3, &f80), (-1, 3, &f10), (-1, 3, &f90), (1, 3, &f20)]);
    for (p, dim) in [
        (&deg80, 80),
        (&deg60, 60),
        (&deg10, 10),
        (&deg90, 90),
        (&deg20, 20),
        (&deg_d4_r, 0),
        (&deg_theta, 0),
    ] {
        // principal members recover the Weyl-group dimension at q = 1, the
        // cuspidal and D4 members vanish there
        assert_eq!(
            poly::eval_int(p, 1),
            BigRational::from_integer(BigInt::from(dim)),
            "family degree at q = 1"
        );
        assert_eq!(poly::reciprocal(p, 36), *p, "S3-family degree not self-dual");
    }
    push("phi[80,7]".into(), deg80);
    push("phi[60,8]".into(), deg60);
    push("phi[90,8]".into(), deg90);
    push("phi[10,9]".into(), deg10);
    push("phi[20,10]".into(), deg20);
    push("D4:r".into(), deg_d4_r.clone());
    push("E6[theta]".into(), deg_theta.clone());
    push("E6[theta^2]".into(), deg_theta);

    // the two Z/2 families, dual to each other slot by slot
    let f30a = fake_of(30, 3);
    let f15a = fake_of(15, 4);
    let f15b = fake_of(15, 5);
    let f30b = fake_of(30, 15);
    let f15c = fake_of(15, 16); // dual partner of phi[15,4]
    let f15d = fake_of(15, 17); // dual partner of phi[15,5]
    assert_eq!(poly::reciprocal(&f30a, 36), f30b);
    assert_eq!(poly::reciprocal(&f15a, 36), f15c);
    assert_eq!(poly::reciprocal(&f15b, 36), f15d);
    let deg30a = lin(&[(1, 2, &f30a), (1, 2, &f15a), (1, 2, &f15b)]);
    let deg15a = lin(&[(1, 2, &f30a), (1, 2, &f15a), (-1, 2, &f15b)]);
    let deg15b = lin(&[(1, 2, &f30a), (-1, 2, &f15a), (1, 2, &f15b)]);
    let deg_d4_1 = lin(&[(1, 2, &f30a), (-1, 2, &f15a), (-1, 2, &f15b)]);
    let deg30b = lin(&[(1, 2, &f30b), (1, 2, &f15c), (1, 2, &f15d)]);
    let deg15c = lin(&[(1, 2, &f30b), (1, 2, &f15c), (-1, 2, &f15d)]);
    let deg15d = lin(&[(1, 2, &f30b), (-1, 2, &f15c), (1, 2, &f15d)]);
    let deg_d4_eps = lin(&[(1, 2, &f30b), (-1, 2, &f15c), (-1, 2, &f15d)]);
    assert_eq!(poly::reciprocal(&deg30a, 36), deg30b);
    assert_eq!(poly::reciprocal(&deg15a, 36), deg15c);
    assert_eq!(poly::reciprocal(&deg15b, 36), deg15d);
    assert_eq!(poly::reciprocal(&deg_d4_1, 36), deg_d4_eps);

    // the D4 Harish-Chandra series satisfies the induction degree identity
    let mut expected = vec![BigRational::new(BigInt::from(1), BigInt::from(2))];
    for (d, mult) in [(1u32, 4), (3, 3), (5, 1), (6, 1), (8, 1), (9, 1), (12, 1)] {
        for _ in 0..mult {
            expected = poly::mul(&expected, &phi_rpoly(d));
        }
    }
    let mut shifted = vec![BigRational::from_integer(BigInt::from(0)); 3];
    shifted.extend(expected);
    let hc_sum = lin(&[(1, 1, &deg_d4_1), (2, 1, &deg_d4_r), (1, 1, &deg_d4_eps)]);
    assert_eq!(hc_sum, shifted, "D4 series degree sum identity");

    push("phi[30,3]".into(), deg30a);
    push("phi[15,4]".into(), deg15a);
    push("phi[15,5]".into(), deg15b);
    push("D4:1".into(), deg_d4_1);
    push("phi[30,15]".into(), deg30b);
    push("phi[15,16]".into(), deg15c);
    push("phi[15,17]".into(), deg15d);
    push("D4:eps".into(), deg_d4_eps);

    drop(push);
    validate(&mut entries);
    entries
}

fn validate(entries: &mut Vec<Entry>) {
    assert_eq!(entries.len(), 30);
    {
        let mut labels: Vec<&str> = entries.iter().map(|e| e.label.as_str()).collect();
        labels.sort_unstable();
        labels.dedup();
        assert_eq!(labels.len(), 30, "labels must be distinct");
    }
    assert_eq!(
        entries
            .iter()
            .filter(|e| e.label.starts_with("E6["))
            .count(),
        2
    );

    // every degree is integral and positive at prime powers, divides the
    // group order in the factored sense, and the degree list is closed under
    // q -> 1/q duality
    let order = order_e6(Sign::Plus).value;
    for e in entries.iter() {
        assert!(e.degree.is_polynomial(), "{}: not a polynomial", e.label);
        let ratio = order.clone() / e.degree.clone();
        assert!(ratio.is_polynomial(), "{}: does not divide order", e.label);
        for q0 in [2i64, 3, 4, 5, 7, 8, 9, 11, 13] {
            let v = e.degree.evaluate(q0);
            assert!(v.is_integer(), "{}: not integral at q = {}", e.label, q0);
            assert!(v.is_positive(), "{}: not positive at q = {}", e.label, q0);
        }
    }
    let mut multiset: BTreeMap<RPoly, i64> = BTreeMap::new();
    for e in entries.iter() {
        *multiset.entry(e.poly.clone()).or_insert(0) += 1;
    }
    for e in entries.iter() {
        let dual = poly::reciprocal(&e.poly, 36);
        assert!(
            multiset.contains_key(&dual),
            "{}: dual degree missing",
            e.label
        );
    }

    // defect-zero counts per cyclotomic case, and the two characters that are
    // alone in their blocks when l divides q - 1 are the cuspidal pair
    for (l, e6e, expect) in [
        (5u64, 1u32, 2usize),
        (5, 2, 3),
        (7, 3, 3),
        (5, 4, 10),
        (7, 6, 9),
    ] {
        let ctx = ValuationContext::new(l, e6e);
        let dz: Vec<&Entry> = entries
            .iter()
            .filter(|en| defect_gap(&en.degree, &order, &ctx).is_zero())
            .collect();
        assert_eq!(dz.len(), expect, "defect-zero count at e = {}", e6e);
        if e6e == 1 {
            let mut names: Vec<&str> = dz.iter().map(|en| en.label.as_str()).collect();
            names.sort_unstable();
            assert_eq!(names, ["E6[theta]", "E6[theta^2]"]);
        }
    }

    entries.sort_by(|a, b| {
        (a.degree.qexp(), a.degree.poly_degree(), &a.label).cmp(&(
            b.degree.qexp(),
            b.degree.poly_degree(),
            &b.label,
        ))
    });
}
