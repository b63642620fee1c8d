//! Ordinary character table of W(E6) by eigenvector splitting of the class
//! algebra over a prime field.
//!
//! The class-sum multiplication matrices commute and are simultaneously
//! diagonalizable over F_p once p = 1 (mod exponent of the group); their
//! common eigenvectors are the central character vectors, from which degrees
//! and character values lift to the integers because every value is a
//! rational integer bounded by the largest degree.

use crate::weyl::WeylGroup;

// 2161 = 6 * 360 + 1 is prime and 360 is the exponent of W(E6), so F_p
// contains all needed roots of unity; character values lie in (-p/2, p/2).
const P: u64 = 2161;

fn addm(a: u64, b: u64) -> u64 {
    (a + b) % P
}

fn subm(a: u64, b: u64) -> u64 {
    (a + P - b % P) % P
}

fn mulm(a: u64, b: u64) -> u64 {
    (a * b) % P
}

fn powm(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, b);
        }
        b = mulm(b, b);
        e >>= 1;
    }
    acc
}

fn invm(a: u64) -> u64 {
    assert!(a % P != 0, "division by zero mod p");
    powm(a, P - 2)
}

type Vecp = Vec<u64>;
type Matp = Vec<Vec<u64>>;

fn mat_vec(m: &Matp, v: &Vecp) -> Vecp {
    let n = m.len();
    let mut out = vec![0u64; n];
    for (r, row) in m.iter().enumerate() {
        let mut acc = 0u64;
        for (c, &x) in row.iter().enumerate() {
            acc = addm(acc, mulm(x, v[c]));
        }
        out[r] = acc;
    }
    out
}

/// Coordinates of each target in the given independent spanning set, by
/// Gaussian elimination on the augmented system.
fn express_in_basis(basis: &[Vecp], targets: &[Vecp]) -> Vec<Vecp> {
    let ambient = basis[0].len();
    let d = basis.len();
    let t = targets.len();
    let mut aug: Vec<Vecp> = (0..ambient)
        .map(|r| {
            let mut row = Vec::with_capacity(d + t);
            for b in basis {
                row.push(b[r]);
            }
            for v in targets {
                row.push(v[r]);
            }
            row
        })
        .collect();
    let mut pivot_row = 0usize;
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..d {
        let Some(sel) = (pivot_row..ambient).find(|&r| aug[r][col] != 0) else {
            panic!("basis vectors are dependent");
        };
        aug.swap(pivot_row, sel);
        let inv = invm(aug[pivot_row][col]);
        for c in col..d + t {
            aug[pivot_row][c] = mulm(aug[pivot_row][c], inv);
        }
        for r in 0..ambient {
            if r != pivot_row && aug[r][col] != 0 {
                let f = aug[r][col];
                for c in col..d + t {
                    let v = mulm(f, aug[pivot_row][c]);
                    aug[r][c] = subm(aug[r][c], v);
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    // rows below the pivots must be clean or the targets left the span
    for r in pivot_row..ambient {
        for c in d..d + t {
            assert_eq!(aug[r][c], 0, "target outside subspace");
        }
    }
    (0..t)
        .map(|k| (0..d).map(|i| aug[pivots[i]][d + k]).collect())
        .collect()
}

fn determinant(mut m: Matp) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(sel) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if sel != col {
            m.swap(sel, col);
            det = subm(0, det);
        }
        det = mulm(det, m[col][col]);
        let inv = invm(m[col][col]);
        for r in col + 1..n {
            if m[r][col] != 0 {
                let f = mulm(m[r][col], inv);
                for c in col..n {
                    let v = mulm(f, m[col][c]);
                    m[r][c] = subm(m[r][c], v);
                }
            }
        }
    }
    det
}

/// Coefficients of det(xI - C), low degree first, by interpolation.
fn char_poly(c: &Matp) -> Vecp {
    let d = c.len();
    let pts: Vec<(u64, u64)> = (0..=d as u64)
        .map(|x| {
            let mut m = c.clone();
            for i in 0..d {
                m[i][i] = subm(x, m[i][i]);
                for j in 0..d {
                    if j != i {
                        m[i][j] = subm(0, m[i][j]);
                    }
                }
            }
            (x, determinant(m))
        })
        .collect();
    // Lagrange interpolation over F_p
    let mut coeffs = vec![0u64; d + 1];
    for (i, &(xi, yi)) in pts.iter().enumerate() {
        // basis polynomial for node i, times yi
        let mut num = vec![1u64]; // product of (x - xj)
        let mut den = 1u64;
        for (j, &(xj, _)) in pts.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![0u64; num.len() + 1];
            for (k, &a) in num.iter().enumerate() {
                next[k + 1] = addm(next[k + 1], a);
                next[k] = subm(next[k], mulm(a, xj));
            }
            num = next;
            den = mulm(den, subm(xi, xj));
        }
        let scale = mulm(yi, invm(den));
        for (k, &a) in num.iter().enumerate() {
            coeffs[k] = addm(coeffs[k], mulm(a, scale));
        }
    }
    coeffs
}

fn poly_eval(p: &Vecp, x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in p.iter().rev() {
        acc = addm(mulm(acc, x), c);
    }
    acc
}

/// Basis of the kernel of m (square), as vectors in its column space.
fn kernel(mut m: Matp) -> Vec<Vecp> {
    let n = m.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut row = 0usize;
    for col in 0..n {
        let Some(sel) = (row..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, sel);
        let inv = invm(m[row][col]);
        for c in 0..n {
            m[row][c] = mulm(m[row][c], inv);
        }
        for r in 0..n {
            if r != row && m[r][col] != 0 {
                let f = m[r][col];
                for c in 0..n {
                    let v = mulm(f, m[row][c]);
                    m[r][c] = subm(m[r][c], v);
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for col in 0..n {
            if let Some(r) = pivot_of_col[col] {
                v[col] = subm(0, m[r][free]);
            }
        }
        basis.push(v);
    }
    basis
}

/// The full character table: `values[chi][class]`, integer entries.
pub struct CharTable {
    pub values: Vec<Vec<i64>>,
    pub degrees: Vec<u64>,
}

impl CharTable {
    pub fn degree(&self, chi: usize) -> u64 {
        self.degrees[chi]
    }
}

pub fn character_table(w: &WeylGroup) -> CharTable {
    let ncls = w.num_classes();
    let order = w.order();

    // class-sum multiplication matrices N_i[k][j] = a_{ikj} mod p
    let mats: Vec<Matp> = (0..ncls)
        .map(|i| {
            (0..ncls)
                .map(|k| (0..ncls).map(|j| w.class_constants[i][k][j] % P).collect())
                .collect()
        })
        .collect();

    // split the ambient space into common eigenlines
    let identity_basis: Vec<Vecp> = (0..ncls)
        .map(|i| {
            let mut v = vec![0u64; ncls];
            v[i] = 1;
            v
        })
        .collect();
    let mut spaces: Vec<Vec<Vecp>> = vec![identity_basis];
    for m in &mats {
        let mut next: Vec<Vec<Vecp>> = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let images: Vec<Vecp> = basis.iter().map(|v| mat_vec(m, v)).collect();
            let restricted_cols = express_in_basis(&basis, &images);
            let d = basis.len();
            // express_in_basis returned columns; assemble row-major C
            let c: Matp = (0..d)
                .map(|r| (0..d).map(|cc| restricted_cols[cc][r]).collect())
                .collect();
            let cp = char_poly(&c);
            let mut split_dim = 0usize;
            for lambda in 0..P {
                if poly_eval(&cp, lambda) != 0 {
                    continue;
                }
                let mut shifted = c.clone();
                for i in 0..d {
                    shifted[i][i] = subm(shifted[i][i], lambda);
                }
                let ker = kernel(shifted);
                assert!(!ker.is_empty());
                split_dim += ker.len();
                let lifted: Vec<Vecp> = ker
                    .iter()
                    .map(|coord| {
                        let mut v = vec![0u64; ncls];
                        for (i, &ci) in coord.iter().enumerate() {
                            for (r, slot) in v.iter_mut().enumerate() {
                                *slot = addm(*slot, mulm(ci, basis[i][r]));
                            }
                        }
                        v
                    })
                    .collect();
                next.push(lifted);
                if split_dim == d {
                    break;
                }
            }
            assert_eq!(split_dim, d, "class matrix not split completely");
        }
        spaces = next;
    }
    assert!(
        spaces.iter().all(|s| s.len() == 1),
        "common eigenlines not separated"
    );
    assert_eq!(spaces.len(), ncls);

    // normalize so the identity-class entry is 1: entries are then the
    // central character values omega(K_j) = |C_j| chi(g_j) / chi(1)
    let idc = w.identity_class;
    let omegas: Vec<Vecp> = spaces
        .into_iter()
        .map(|s| {
            let v = &s[0];
            assert!(v[idc] != 0, "degenerate eigenvector");
            let inv = invm(v[idc]);
            v.iter().map(|&x| mulm(x, inv)).collect()
        })
        .collect();

    let class_inv_sizes: Vec<u64> = w.class_sizes.iter().map(|&s| invm(s % P)).collect();
    let order_mod = order % P;

    let mut rows: Vec<(u64, Vec<i64>)> = omegas
        .iter()
        .map(|om| {
            // 1/chi(1)^2 = (1/|G|) sum_j omega_j omega_{j*} / |C_j|
            let mut s = 0u64;
            for j in 0..ncls {
                let t = mulm(mulm(om[j], om[w.inverse_class[j]]), class_inv_sizes[j]);
                s = addm(s, t);
            }
            let dsq = mulm(order_mod, invm(s));
            let deg = (1..=(P - 1) / 2)
                .find(|&d| mulm(d, d) == dsq)
                .expect("degree not a square mod p");
            assert!(deg <= 90, "degree lift out of range");
            let vals: Vec<i64> = (0..ncls)
                .map(|j| {
                    let c = mulm(mulm(deg, om[j]), class_inv_sizes[j]);
                    let lifted = if c > P / 2 {
                        c as i64 - P as i64
                    } else {
                        c as i64
                    };
                    assert!(lifted.unsigned_abs() <= deg, "value exceeds degree");
                    lifted
                })
                .collect();
            assert_eq!(vals[idc], deg as i64);
            (deg, vals)
        })
        .collect();
    rows.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

    let table = CharTable {
        degrees: rows.iter().map(|r| r.0).collect(),
        values: rows.into_iter().map(|r| r.1).collect(),
    };
    validate(w, &table);
    table
}

fn validate(w: &WeylGroup, t: &CharTable) {
    let ncls = w.num_classes();
    let order = w.order() as i64;
    let sum_sq: u64 = t.degrees.iter().map(|d| d * d).sum();
    assert_eq!(sum_sq, w.order(), "sum of squared degrees");
    for a in 0..ncls {
        for b in 0..ncls {
            let dot: i64 = (0..ncls)
                .map(|j| {
                    w.class_sizes[j] as i64 * t.values[a][j] * t.values[b][w.inverse_class[j]]
                })
                .sum();
            assert_eq!(dot, if a == b { order } else { 0 }, "row orthogonality");
        }
    }
}
