//! Partitions and Lusztig symbols.
//!
//! Partitions label unipotent characters of the linear and unitary groups;
//! symbols (pairs of strictly increasing rows) label those of the orthogonal
//! groups, with the twisted forms picked out by the defect residue mod 4.
//! Both carry a text form for the CLI: `2+1+1` and `[1,3|0,2]`.

use crate::cyclopoly::Sign;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// A partition with parts stored ascending, so that the derived beta-set
/// `lambda_i = alpha_i + i - 1` is strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds from parts in any order; zero parts are rejected.
    ///
    /// # Panics
    ///
    /// Panics if any part is zero.
    pub fn new(mut parts: Vec<u32>) -> Partition {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable();
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// Ascending parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The partitioned number.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Beta-set of a given length: pad with zero parts in front (ascending),
    /// then `lambda_i = part_i + i - 1`.  Strictly increasing by
    /// construction.
    ///
    /// # Panics
    ///
    /// Panics if `len` is smaller than the number of parts.
    pub fn beta_set(&self, len: usize) -> Vec<u32> {
        assert!(len >= self.parts.len(), "beta-set length too small");
        let pad = len - self.parts.len();
        (0..len)
            .map(|i| {
                let part = if i < pad { 0 } else { self.parts[i - pad] };
                part + i as u32
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    /// Parts descending, joined by `+`; the empty partition prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for &p in self.parts.iter().rev() {
            if !first {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> Result<Partition, String> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split('+') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| format!("bad partition part {tok:?}"))?;
            if p == 0 {
                return Err("partition parts must be positive".into());
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

/// All partitions of `n`, each exactly once, in deterministic order
/// (descending lexicographic by largest part first).
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, &mut stack, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.iter().rev().copied().collect(),
        });
        return;
    }
    let mut p = max_part.min(remaining);
    while p >= 1 {
        stack.push(p);
        descend(remaining - p, p, stack, out);
        stack.pop();
        p -= 1;
    }
}

/// An unordered pair of strictly increasing nonnegative rows.
///
/// Canonical form keeps the longer row first; rows of equal length are
/// ordered lexicographically descending.  This puts the defect
/// `rowX.len() - rowY.len()` at `>= 0` and makes derived equality the
/// row-swap equivalence test.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LusztigSymbol {
    x: Vec<u32>,
    y: Vec<u32>,
}

impl LusztigSymbol {
    /// # Panics
    ///
    /// Panics unless both rows are strictly increasing.
    pub fn new(x: Vec<u32>, y: Vec<u32>) -> LusztigSymbol {
        assert!(strictly_increasing(&x), "row X must be strictly increasing");
        assert!(strictly_increasing(&y), "row Y must be strictly increasing");
        if (y.len(), &y) > (x.len(), &x) {
            LusztigSymbol { x: y, y: x }
        } else {
            LusztigSymbol { x, y }
        }
    }

    pub fn row_x(&self) -> &[u32] {
        &self.x
    }

    pub fn row_y(&self) -> &[u32] {
        &self.y
    }

    /// Row-length difference; nonnegative in canonical form.
    pub fn defect(&self) -> u32 {
        (self.x.len() - self.y.len()) as u32
    }

    /// Defect residue mod 4: 0 (untwisted D) or 2 (twisted 2D).
    ///
    /// # Panics
    ///
    /// Panics on odd defect (types B/C, out of scope).
    pub fn twist_class(&self) -> u32 {
        let d = self.defect();
        assert!(d % 2 == 0, "odd-defect symbols are out of scope");
        d % 4
    }

    /// Plus for defect 0 mod 4, Minus for 2 mod 4.
    pub fn twist(&self) -> Sign {
        if self.twist_class() == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `sum(entries) - floor(((a+b-1)/2)^2)`.
    pub fn rank(&self) -> u32 {
        let total: u32 = self.x.iter().chain(self.y.iter()).sum();
        let ab = (self.x.len() + self.y.len()) as i64;
        let corr = ((ab - 1) * (ab - 1)) / 4;
        (i64::from(total) - corr) as u32
    }

    /// The first entries of the two rows are not both zero.  A symbol with
    /// an empty row is reduced.
    pub fn is_reduced(&self) -> bool {
        !(self.x.first() == Some(&0) && self.y.first() == Some(&0))
    }

    /// Equal rows; such symbols label two unipotent characters.
    pub fn is_degenerate(&self) -> bool {
        self.x == self.y
    }

    /// Number of unipotent characters the symbol labels.
    pub fn multiplicity(&self) -> u32 {
        if self.is_degenerate() {
            2
        } else {
            1
        }
    }

    /// Prepend a zero to both rows and increment every entry: the standard
    /// equivalence step.  Preserves rank and defect.
    pub fn shift(&self) -> LusztigSymbol {
        let bump = |row: &[u32]| {
            std::iter::once(0)
                .chain(row.iter().map(|&v| v + 1))
                .collect::<Vec<_>>()
        };
        LusztigSymbol {
            x: bump(&self.x),
            y: bump(&self.y),
        }
    }

    /// Undo shifts until reduced.
    pub fn reduce(&self) -> LusztigSymbol {
        let mut s = self.clone();
        while !s.is_reduced() {
            s = LusztigSymbol {
                x: s.x[1..].iter().map(|&v| v - 1).collect(),
                y: s.y[1..].iter().map(|&v| v - 1).collect(),
            };
        }
        s
    }
}

fn strictly_increasing(row: &[u32]) -> bool {
    row.windows(2).all(|w| w[0] < w[1])
}

impl fmt::Display for LusztigSymbol {
    /// `[1,3|0,2]`; an empty row leaves its side blank.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |row: &[u32]| {
            row.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "[{}|{}]", join(&self.x), join(&self.y))
    }
}

impl FromStr for LusztigSymbol {
    type Err = String;

    fn from_str(s: &str) -> Result<LusztigSymbol, String> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| format!("symbol must look like [1,3|0,2], got {s:?}"))?;
        let (xs, ys) = body
            .split_once('|')
            .ok_or_else(|| "symbol needs a | separator".to_string())?;
        let parse_row = |part: &str| -> Result<Vec<u32>, String> {
            let part = part.trim();
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|t| t.trim().parse().map_err(|_| format!("bad entry {t:?}")))
                .collect()
        };
        let x = parse_row(xs)?;
        let y = parse_row(ys)?;
        if !strictly_increasing(&x) || !strictly_increasing(&y) {
            return Err("symbol rows must be strictly increasing".into());
        }
        Ok(LusztigSymbol::new(x, y))
    }
}

/// All reduced symbols of the given rank and twist class (0 or 2 mod 4),
/// one per row-swap equivalence class, in deterministic order.
pub fn enumerate_symbols(n: u32, twist_class: u32) -> Vec<LusztigSymbol> {
    enumerate_symbols_depth(n, twist_class, 0)
}

/// Enumeration with extra internal padding; the output must not depend on
/// `depth` (stability property), which the tests exercise.
pub fn enumerate_symbols_depth(n: u32, twist_class: u32, depth: usize) -> Vec<LusztigSymbol> {
    assert!(twist_class == 0 || twist_class == 2, "twist class is 0 or 2");
    let mut set = BTreeSet::new();
    // Reduced symbols of defect D and rank n correspond to pairs of
    // partitions with |alpha| + |beta| = n - (D/2)^2: spread alpha over the
    // long row and beta over the short row, then reduce.
    let mut d = twist_class;
    while (d / 2) * (d / 2) <= n {
        let m = n - (d / 2) * (d / 2);
        for ka in 0..=m {
            for alpha in enumerate_partitions(ka) {
                for beta in enumerate_partitions(m - ka) {
                    let t = m as usize + depth;
                    let x = beta_row(&alpha, t + d as usize);
                    let y = beta_row(&beta, t);
                    let sym = LusztigSymbol::new(x, y).reduce();
                    debug_assert_eq!(sym.rank(), n);
                    debug_assert_eq!(sym.defect() % 4, twist_class);
                    set.insert(sym);
                }
            }
        }
        d += 4;
    }
    set.into_iter().collect()
}

fn beta_row(p: &Partition, len: usize) -> Vec<u32> {
    p.beta_set(len)
}
