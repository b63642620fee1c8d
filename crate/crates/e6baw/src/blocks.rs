//! Distribution of the thirty unipotent characters into l-blocks.
//!
//! A case fixes the sign of the group form and which cyclotomic factor of
//! the generic order the prime l divides; that determines the order e of q
//! mod l.  Positive-defect blocks are headed by cuspidal pairs from the
//! dataset and contain as many unipotent characters as the relative Weyl
//! group has irreducible ones.  Every character not accounted for this way
//! must have defect zero, which is where the valuation gap computation
//! comes in: the classification cross-checks the two counts.

use std::fmt;

use crate::cyclopoly::{Sign, ValuationContext};
use crate::degrees::{defect_gap, order_e6};
use crate::groupdata::{DataError, Dataset};

/// Which cyclotomic factor of the generic group order l divides.  The
/// factors are written in terms of the sign eps of the form, so one token
/// covers both signs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    QMinusEps,
    QPlusEps,
    Q2PlusEpsQ1,
    Q2Plus1,
    Q2MinusEpsQ1,
}

impl Condition {
    pub const ALL: [Condition; 5] = [
        Condition::QMinusEps,
        Condition::QPlusEps,
        Condition::Q2PlusEpsQ1,
        Condition::Q2Plus1,
        Condition::Q2MinusEpsQ1,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Condition::QMinusEps => "q-e",
            Condition::QPlusEps => "q+e",
            Condition::Q2PlusEpsQ1 => "q2+eq+1",
            Condition::Q2Plus1 => "q2+1",
            Condition::Q2MinusEpsQ1 => "q2-eq+1",
        }
    }

    pub fn parse(s: &str) -> Option<Condition> {
        Condition::ALL.into_iter().find(|c| c.token() == s)
    }

    /// The maximal torus whose order soaks up the full l-part in this case,
    /// when the Sylow subgroup is abelian.  The q-e case has a non-abelian
    /// Sylow subgroup and no such torus.
    pub fn torus_label(self) -> Option<&'static str> {
        match self {
            Condition::QMinusEps => None,
            Condition::QPlusEps => Some("T1"),
            Condition::Q2PlusEpsQ1 => Some("T2"),
            Condition::Q2Plus1 => Some("T3"),
            Condition::Q2MinusEpsQ1 => Some("T4"),
        }
    }
}

/// A sign together with a divisibility condition on l.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseKey {
    pub eps: Sign,
    pub cond: Condition,
}

impl CaseKey {
    pub fn new(eps: Sign, cond: Condition) -> CaseKey {
        CaseKey { eps, cond }
    }

    /// Multiplicative order of q mod l.  Substituting the sign into the
    /// condition yields a product of cyclotomic polynomials in q; e is the
    /// index of the one l can divide for l >= 5.
    pub fn e(&self) -> u32 {
        match (self.cond, self.eps) {
            (Condition::QMinusEps, Sign::Plus) => 1,
            (Condition::QMinusEps, Sign::Minus) => 2,
            (Condition::QPlusEps, Sign::Plus) => 2,
            (Condition::QPlusEps, Sign::Minus) => 1,
            (Condition::Q2PlusEpsQ1, Sign::Plus) => 3,
            (Condition::Q2PlusEpsQ1, Sign::Minus) => 6,
            (Condition::Q2Plus1, _) => 4,
            (Condition::Q2MinusEpsQ1, Sign::Plus) => 6,
            (Condition::Q2MinusEpsQ1, Sign::Minus) => 3,
        }
    }

    /// Smallest prime >= 5 compatible with the case: l = 1 mod e must be
    /// solvable, which rules out 5 when 3 divides e.
    pub fn default_l(&self) -> u64 {
        match self.e() {
            3 | 6 => 7,
            _ => 5,
        }
    }

    pub fn context(&self, l: u64) -> ValuationContext {
        ValuationContext::new(l, self.e())
    }
}

impl fmt::Display for CaseKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eps = match self.eps {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        };
        write!(f, "eps={eps} case={}", self.cond.token())
    }
}

#[derive(Debug, Clone)]
pub struct BlockRow {
    pub block: String,
    pub pair: String,
    pub chars: u32,
    pub principal: bool,
    pub defect_zero: bool,
}

#[derive(Debug, Clone)]
pub struct BlockTable {
    pub case: CaseKey,
    pub l: u64,
    pub rows: Vec<BlockRow>,
}

impl BlockTable {
    pub fn positive_rows(&self) -> impl Iterator<Item = &BlockRow> {
        self.rows.iter().filter(|r| !r.defect_zero)
    }

    pub fn defect_zero_count(&self) -> usize {
        self.rows.iter().filter(|r| r.defect_zero).count()
    }

    /// Irreducible Brauer character count of a positive-defect block, which
    /// for these blocks equals the number of unipotent ordinary characters
    /// in it.
    pub fn ibr(&self, block: &str) -> Option<u32> {
        self.positive_rows()
            .find(|r| r.block == block)
            .map(|r| r.chars)
    }

    pub fn render_table(&self) -> String {
        let mut out = format!("{} l={} e={}\n", self.case, self.l, self.case.e());
        out.push_str("block  pair            chars  principal  defect_zero\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{:<5}  {:<14}  {:<5}  {:<9}  {}\n",
                r.block,
                r.pair,
                r.chars,
                if r.principal { "yes" } else { "no" },
                if r.defect_zero { "yes" } else { "no" },
            ));
        }
        out
    }

    pub fn render_jsonl(&self) -> String {
        let eps = match self.case.eps {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        };
        let mut out = String::new();
        for r in &self.rows {
            let obj = serde_json::json!({
                "kind": "block",
                "eps": eps,
                "case": self.case.cond.token(),
                "l": self.l,
                "e": self.case.e(),
                "block": r.block,
                "pair": r.pair,
                "chars": r.chars,
                "principal": r.principal,
                "defect_zero": r.defect_zero,
            });
            out.push_str(&obj.to_string());
            out.push('\n');
        }
        out
    }
}

/// Splits the unipotent characters of the chosen form into l-blocks.
///
/// Positive-defect blocks come from the cuspidal pair records; defect-zero
/// characters are found by the valuation gap scan over the degree dataset
/// (through the Ennola correspondence for the twisted form).  The two views
/// must cover the thirty characters exactly, otherwise the data is
/// inconsistent and an error is returned.
pub fn classify(case: CaseKey, l: u64, data: &Dataset) -> Result<BlockTable, DataError> {
    let degrees = data.require_degrees()?;
    let ctx = case.context(l);
    let order = order_e6(case.eps).value;

    let mut rows = Vec::new();
    let mut positive_total = 0u32;
    let mut next_id = 2u32;
    for p in data.pairs.iter().filter(|p| p.case == case.cond.token()) {
        let weyl = data.group(&p.weyl)?;
        let block = if p.principal {
            "B1".to_string()
        } else {
            let id = format!("B{next_id}");
            next_id += 1;
            id
        };
        positive_total += weyl.nirr;
        rows.push(BlockRow {
            block,
            pair: p.label.clone(),
            chars: weyl.nirr,
            principal: p.principal,
            defect_zero: false,
        });
    }
    if rows.iter().filter(|r| r.principal).count() != 1 {
        return Err(DataError::Inconsistent(format!(
            "case {} needs exactly one principal pair",
            case.cond.token()
        )));
    }

    let mut dz = Vec::new();
    for entry in degrees {
        let degree = match case.eps {
            Sign::Plus => entry.degree.clone(),
            Sign::Minus => entry.degree.ennola().abs(),
        };
        if defect_gap(&degree, &order, &ctx).is_zero() {
            dz.push(entry.label.clone());
        }
    }

    let expected = (degrees.len() as u32)
        .checked_sub(positive_total)
        .ok_or_else(|| {
            DataError::Inconsistent(format!(
                "positive-defect blocks of {case} claim more than {} characters",
                degrees.len()
            ))
        })?;
    if dz.len() as u32 != expected {
        return Err(DataError::Inconsistent(format!(
            "{case}: {} defect-zero characters found, residual count demands {expected}",
            dz.len()
        )));
    }

    for (i, label) in dz.into_iter().enumerate() {
        rows.push(BlockRow {
            block: format!("dz{}", i + 1),
            pair: label,
            chars: 1,
            principal: false,
            defect_zero: true,
        });
    }
    Ok(BlockTable { case, l, rows })
}
