//! The Weyl group of type E6 as a permutation group on its 72 roots.
//!
//! Elements are stored as permutations of the root list, which keeps the
//! group multiplication and conjugacy-class machinery cheap.  A parent
//! pointer per element lets us rebuild the 6x6 reflection-representation
//! matrix for the handful of class representatives that need it.

use std::collections::HashMap;

pub const NROOTS: usize = 72;
pub const RANK: usize = 6;

pub type Perm = [u8; NROOTS];
pub type Mat = [[i64; RANK]; RANK];

// Bourbaki numbering: the chain 1-3-4-5-6 with node 2 attached to node 4.
const CARTAN: [[i64; RANK]; RANK] = [
    [2, 0, -1, 0, 0, 0],
    [0, 2, 0, -1, 0, 0],
    [-1, 0, 2, -1, 0, 0],
    [0, -1, -1, 2, -1, 0],
    [0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, -1, 2],
];

fn reflect(v: [i64; RANK], i: usize) -> [i64; RANK] {
    // s_i(v) = v - <v, alpha_i^vee> alpha_i, pairing read off the Cartan matrix
    let pairing: i64 = (0..RANK).map(|j| CARTAN[i][j] * v[j]).sum();
    let mut w = v;
    w[i] -= pairing;
    w
}

fn root_system() -> Vec<[i64; RANK]> {
    let mut roots: Vec<[i64; RANK]> = Vec::new();
    let mut seen: HashMap<[i64; RANK], usize> = HashMap::new();
    let mut queue: Vec<[i64; RANK]> = Vec::new();
    for i in 0..RANK {
        let mut alpha = [0i64; RANK];
        alpha[i] = 1;
        seen.insert(alpha, roots.len());
        roots.push(alpha);
        queue.push(alpha);
    }
    while let Some(v) = queue.pop() {
        for i in 0..RANK {
            let w = reflect(v, i);
            if !seen.contains_key(&w) {
                seen.insert(w, roots.len());
                roots.push(w);
                queue.push(w);
            }
        }
    }
    roots.sort();
    roots
}

fn compose(p: &Perm, q: &Perm) -> Perm {
    // (p . q)(t) = p(q(t))
    let mut r = [0u8; NROOTS];
    for t in 0..NROOTS {
        r[t] = p[q[t] as usize];
    }
    r
}

fn invert(p: &Perm) -> Perm {
    let mut r = [0u8; NROOTS];
    for t in 0..NROOTS {
        r[p[t] as usize] = t as u8;
    }
    r
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[0i64; RANK]; RANK];
    for i in 0..RANK {
        for k in 0..RANK {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..RANK {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

pub struct WeylGroup {
    pub perms: Vec<Perm>,
    pub class_of: Vec<u8>,
    pub class_reps: Vec<u32>,
    pub class_sizes: Vec<u64>,
    pub inverse_class: Vec<usize>,
    pub identity_class: usize,
    pub reflection_class: usize,
    // a[i][k][j] = #\{x in C_i : x^{-1} z_j in C_k\} for fixed reps z_j
    pub class_constants: Vec<Vec<Vec<u64>>>,
    gen_mats: [Mat; RANK],
    parent: Vec<(u32, u8)>,
}

impl WeylGroup {
    pub fn build() -> WeylGroup {
        let roots = root_system();
        assert_eq!(roots.len(), NROOTS, "E6 has 72 roots");
        let root_index: HashMap<[i64; RANK], u8> = roots
            .iter()
            .enumerate()
            .map(|(t, &v)| (v, t as u8))
            .collect();

        let mut gen_perms: Vec<Perm> = Vec::with_capacity(RANK);
        let mut gen_mats = [[[0i64; RANK]; RANK]; RANK];
        for i in 0..RANK {
            let mut p = [0u8; NROOTS];
            for (t, &v) in roots.iter().enumerate() {
                p[t] = root_index[&reflect(v, i)];
            }
            gen_perms.push(p);
            // matrix of s_i on the simple-root basis, columns are images
            let mut m = [[0i64; RANK]; RANK];
            for j in 0..RANK {
                let mut e = [0i64; RANK];
                e[j] = 1;
                let img = reflect(e, i);
                for r in 0..RANK {
                    m[r][j] = img[r];
                }
            }
            gen_mats[i] = m;
        }

        // breadth-first closure under right multiplication by generators
        let mut identity = [0u8; NROOTS];
        for t in 0..NROOTS {
            identity[t] = t as u8;
        }
        let mut perms: Vec<Perm> = vec![identity];
        let mut parent: Vec<(u32, u8)> = vec![(0, u8::MAX)];
        let mut index: HashMap<Perm, u32> = HashMap::new();
        index.insert(identity, 0);
        let mut head = 0usize;
        while head < perms.len() {
            let cur = perms[head];
            for (gi, g) in gen_perms.iter().enumerate() {
                let nxt = compose(&cur, g);
                if !index.contains_key(&nxt) {
                    index.insert(nxt, perms.len() as u32);
                    perms.push(nxt);
                    parent.push((head as u32, gi as u8));
                }
            }
            head += 1;
        }
        assert_eq!(perms.len(), 51840, "order of W(E6)");

        // conjugacy classes by orbit closure under conjugation by generators
        let n = perms.len();
        let mut class_of = vec![u8::MAX; n];
        let mut class_reps: Vec<u32> = Vec::new();
        let mut class_sizes: Vec<u64> = Vec::new();
        for start in 0..n {
            if class_of[start] != u8::MAX {
                continue;
            }
            let cid = class_reps.len() as u8;
            class_reps.push(start as u32);
            let mut orbit = vec![start as u32];
            class_of[start] = cid;
            let mut h = 0usize;
            while h < orbit.len() {
                let x = perms[orbit[h] as usize];
                for g in gen_perms.iter() {
                    // generators are involutions, so g x g^{-1} = g x g
                    let y = compose(g, &compose(&x, g));
                    let yi = index[&y] as usize;
                    if class_of[yi] == u8::MAX {
                        class_of[yi] = cid;
                        orbit.push(yi as u32);
                    }
                }
                h += 1;
            }
            class_sizes.push(orbit.len() as u64);
        }
        let ncls = class_reps.len();
        assert_eq!(ncls, 25, "W(E6) has 25 conjugacy classes");
        assert_eq!(class_sizes.iter().sum::<u64>(), 51840);

        let mut inv_idx: Vec<u32> = Vec::with_capacity(n);
        for p in perms.iter() {
            inv_idx.push(index[&invert(p)]);
        }
        let mut inverse_class = vec![0usize; ncls];
        for (c, &rep) in class_reps.iter().enumerate() {
            inverse_class[c] = class_of[inv_idx[rep as usize] as usize] as usize;
        }

        let identity_class = class_of[0] as usize;
        let reflection_class = class_of[index[&gen_perms[0]] as usize] as usize;

        // class multiplication constants, one sweep of the group per rep z_j
        let mut a = vec![vec![vec![0u64; ncls]; ncls]; ncls];
        for (j, &zj) in class_reps.iter().enumerate() {
            let z = perms[zj as usize];
            for x in 0..n {
                let y = compose(&perms[inv_idx[x] as usize], &z);
                let k = class_of[index[&y] as usize] as usize;
                a[class_of[x] as usize][k][j] += 1;
            }
        }
        for i in 0..ncls {
            for j in 0..ncls {
                let row: u64 = (0..ncls).map(|k| a[i][k][j]).sum();
                assert_eq!(row, class_sizes[i], "class constant row sum");
            }
        }

        WeylGroup {
            perms,
            class_of,
            class_reps,
            class_sizes,
            inverse_class,
            identity_class,
            reflection_class,
            class_constants: a,
            gen_mats,
            parent,
        }
    }

    pub fn order(&self) -> u64 {
        self.perms.len() as u64
    }

    pub fn num_classes(&self) -> usize {
        self.class_reps.len()
    }

    /// Matrix of the class representative in the reflection representation.
    pub fn rep_matrix(&self, class: usize) -> Mat {
        let mut word: Vec<u8> = Vec::new();
        let mut at = self.class_reps[class];
        while at != 0 {
            let (par, gi) = self.parent[at as usize];
            word.push(gi);
            at = par;
        }
        let mut m = [[0i64; RANK]; RANK];
        for i in 0..RANK {
            m[i][i] = 1;
        }
        // element = parent * generator, so multiply generators on the right
        for &gi in word.iter().rev() {
            m = mat_mul(&m, &self.gen_mats[gi as usize]);
        }
        m
    }
}
