//! Graded multiplicities of each character in the coinvariant algebra.
//!
//! For a character chi the generating function is
//!
//! ```text
//!   F_chi(q) = prod_i (1 - q^{d_i}) * (1/|W|) sum_j |C_j| chi(g_j) / det(1 - q w_j)
//! ```
//!
//! with d_i the fundamental degrees 2, 5, 6, 8, 9, 12.  The right-hand side
//! is evaluated exactly at enough integer points to pin down the polynomial,
//! which has degree at most 36 (the number of positive roots).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::poly::{self, RPoly};
use crate::weyl::{Mat, WeylGroup, RANK};

pub const FUNDAMENTAL_DEGREES: [u32; 6] = [2, 5, 6, 8, 9, 12];
pub const NPOSROOTS: usize = 36;

/// Exact determinant of a 6x6 integer matrix by fraction-free elimination.
fn det6(mut m: [[i128; RANK]; RANK]) -> i128 {
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..RANK - 1 {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..RANK).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..RANK {
            for j in k + 1..RANK {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[RANK - 1][RANK - 1]
}

fn det_one_minus_q(mat: &Mat, q0: i64) -> BigInt {
    let mut m = [[0i128; RANK]; RANK];
    for i in 0..RANK {
        for j in 0..RANK {
            m[i][j] = i128::from(i64::from(i == j)) - i128::from(q0) * i128::from(mat[i][j]);
        }
    }
    BigInt::from(det6(m))
}

fn prefactor(q0: i64) -> BigInt {
    let q = BigInt::from(q0);
    let mut acc = BigInt::one();
    for d in FUNDAMENTAL_DEGREES {
        acc *= BigInt::one() - q.pow(d);
    }
    acc
}

/// All 25 fake degree polynomials, aligned with the character table rows.
pub fn fake_degrees(w: &WeylGroup, values: &[Vec<i64>]) -> Vec<RPoly> {
    let ncls = w.num_classes();
    let order = BigInt::from(w.order());
    let rep_dets: Vec<Vec<BigInt>> = (0..ncls)
        .map(|j| {
            let m = w.rep_matrix(j);
            (2..=38).map(|q0| det_one_minus_q(&m, q0)).collect()
        })
        .collect();
    let prefactors: Vec<BigInt> = (2..=38).map(prefactor).collect();

    let fakes: Vec<RPoly> = values
        .iter()
        .map(|chi| {
            let points: Vec<(i64, BigRational)> = (2i64..=38)
                .enumerate()
                .map(|(t, q0)| {
                    let mut total = BigRational::zero();
                    for j in 0..ncls {
                        let num = BigInt::from(w.class_sizes[j] as i64 * chi[j]);
                        total += BigRational::new(num, rep_dets[j][t].clone());
                    }
                    let val = total * BigRational::new(prefactors[t].clone(), order.clone());
                    (q0, val)
                })
                .collect();
            let p = poly::interpolate(&points);
            assert!(p.len() <= NPOSROOTS + 1, "fake degree exceeds q^36");
            assert!(poly::is_integral(&p), "fake degree not integral");
            assert!(poly::is_nonnegative(&p), "fake degree has negative coefficient");
            assert_eq!(
                poly::eval_int(&p, 1),
                BigRational::from_integer(BigInt::from(chi[w.identity_class])),
                "fake degree at 1 must be the character degree"
            );
            p
        })
        .collect();

    // the graded pieces of the coinvariant algebra sum to the length
    // generating function prod_i (q^{d_i} - 1) / (q - 1)
    let mut total = poly::zero();
    for (chi, f) in values.iter().zip(&fakes) {
        let deg = BigRational::from_integer(BigInt::from(chi[w.identity_class]));
        total = poly::add(&total, &poly::scale(f, &deg));
    }
    let mut poincare = vec![BigRational::one()];
    for d in FUNDAMENTAL_DEGREES {
        let mut f = vec![BigRational::zero(); d as usize + 1];
        f[0] = -BigRational::one();
        f[d as usize] = BigRational::one();
        poincare = poly::mul(&poincare, &f);
    }
    let q_minus_1 = poly::from_int_coeffs(&[-1, 1]);
    for _ in 0..RANK {
        poincare = poly::div_exact(&poincare, &q_minus_1).expect("Poincare division");
    }
    assert_eq!(total, poincare, "graded sum over all characters");

    fakes
}
