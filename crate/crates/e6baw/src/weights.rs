//! Weight counts for the unipotent blocks, and the final bookkeeping check
//! that each positive-defect block has as many weights as irreducible Brauer
//! characters.
//!
//! Two routes, depending on whether the Sylow l-subgroup is abelian.  In the
//! q-e case it is not, and weights are accumulated over the radical class
//! table: a class carries weights only when its centralizer core
//! concentrates a defect-zero character (or when the dataset asserts the
//! Sylow-containment shortcut for the extra l = 5 classes), and then it
//! contributes the defect-zero character count of its canonical quotient.
//! In the remaining four cases the Sylow subgroup is a chunk of a maximal
//! torus and each block gets one weight per irreducible character of its
//! relative Weyl group.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::blocks::{classify, BlockTable, CaseKey, Condition};
use crate::cyclopoly::Sign;
use crate::degrees::{scan_dz_a_ctx, scan_dz_d_ctx};
use crate::groupdata::{
    dz_count, nu_torus_check, DataError, Dataset, LiePart, RadicalClassRecord, SylowFlag,
};

/// How many unipotent blocks of the centralizer core a candidate weight on
/// this radical class can sit over: the number of defect-zero unipotent
/// characters of the semisimple part (a torus core trivially gives one).
///
/// Errors when the record carries no centralizer core data at all, since
/// then the reduction has nothing to run on.
pub fn unipotent_block_test(
    r: &RadicalClassRecord,
    case: CaseKey,
    l: u64,
) -> Result<u32, DataError> {
    let Some(liepart) = &r.liepart else {
        return Err(DataError::Unsupported(format!(
            "radical {} has no centralizer core data",
            r.label
        )));
    };
    let ctx = case.context(l);
    Ok(match liepart {
        LiePart::Torus => 1,
        LiePart::A { rank, twist } => {
            scan_dz_a_ctx(*rank, twist.resolve(case.eps), &ctx).len() as u32
        }
        LiePart::D { rank, twist } => {
            scan_dz_d_ctx(*rank, twist.resolve(case.eps), &ctx).len() as u32
        }
    })
}

/// Weight contribution of one radical class.
///
/// Gate first: classes with a centralizer core must pass the defect-zero
/// reduction with exactly one hit; the extra l = 5 classes instead use the
/// recorded Sylow-containment flag.  A class that passes the gate must name
/// a canonical quotient whose characters are known to extend, otherwise the
/// count would be unfounded and we error out rather than guess.
pub fn clifford_weight_count(
    r: &RadicalClassRecord,
    case: CaseKey,
    l: u64,
    data: &Dataset,
) -> Result<u32, DataError> {
    let eligible = match &r.liepart {
        Some(_) => unipotent_block_test(r, case, l)? == 1,
        None => r.sylow_in_rc != SylowFlag::No,
    };
    if !eligible {
        return Ok(0);
    }
    let Some(ncq) = &r.ncq else {
        return Err(DataError::Unsupported(format!(
            "radical {} carries weights but names no canonical quotient",
            r.label
        )));
    };
    if !r.extends {
        return Err(DataError::Unsupported(format!(
            "radical {}: character extension to the quotient is not established",
            r.label
        )));
    }
    dz_count(data.group(ncq)?, l)
}

#[derive(Debug, Clone)]
pub struct WeightRow {
    pub source: String,
    pub block: Option<String>,
    pub weights: u32,
}

#[derive(Debug, Clone)]
pub struct WeightReport {
    pub case: CaseKey,
    pub l: u64,
    pub rows: Vec<WeightRow>,
    pub totals: BTreeMap<String, u32>,
    pub verified: bool,
}

fn totals_of(rows: &[WeightRow]) -> BTreeMap<String, u32> {
    let mut totals = BTreeMap::new();
    for row in rows {
        if let Some(b) = &row.block {
            *totals.entry(b.clone()).or_insert(0) += row.weights;
        }
    }
    totals
}

fn totals_match(table: &BlockTable, totals: &BTreeMap<String, u32>) -> bool {
    let all_blocks_covered = table
        .positive_rows()
        .all(|r| totals.get(&r.block) == Some(&r.chars));
    let no_stray_totals = totals
        .keys()
        .all(|b| table.positive_rows().any(|r| &r.block == b));
    all_blocks_covered && no_stray_totals
}

/// Weight report for the q-e case, where the Sylow subgroup is non-abelian
/// and the count runs over the radical class table.  Only classes whose
/// declared l-domain admits l are consulted.
pub fn weight_report_linear(
    case: CaseKey,
    l: u64,
    data: &Dataset,
) -> Result<WeightReport, DataError> {
    if case.cond != Condition::QMinusEps {
        return Err(DataError::Unsupported(format!(
            "radical-table route only applies to the q-e case, not {}",
            case.cond.token()
        )));
    }
    let table = classify(case, l, data)?;
    let mut rows = Vec::new();
    for r in data.radicals.iter().filter(|r| r.ldomain.admits(l)) {
        let weights = clifford_weight_count(r, case, l, data)?;
        let block = if weights > 0 {
            Some(r.block.clone().ok_or_else(|| {
                DataError::Inconsistent(format!(
                    "radical {} carries weights but names no block",
                    r.label
                ))
            })?)
        } else {
            None
        };
        rows.push(WeightRow {
            source: r.label.clone(),
            block,
            weights,
        });
    }
    let totals = totals_of(&rows);
    let verified = totals_match(&table, &totals);
    Ok(WeightReport {
        case,
        l,
        rows,
        totals,
        verified,
    })
}

/// Weight report for the four cases with abelian Sylow subgroup: one weight
/// per irreducible character of each block's relative Weyl group, all on
/// the Sylow torus.  The torus is checked to actually swallow the full
/// l-valuation of the group order first.
pub fn weight_report_abelian(
    case: CaseKey,
    l: u64,
    data: &Dataset,
) -> Result<WeightReport, DataError> {
    let Some(torus_label) = case.cond.torus_label() else {
        return Err(DataError::Unsupported(
            "q-e case has a non-abelian Sylow subgroup; use the radical-table route".into(),
        ));
    };
    let torus = data
        .tori
        .get(torus_label)
        .ok_or_else(|| DataError::Inconsistent(format!("no torus record {torus_label}")))?;
    if !nu_torus_check(torus, case.eps, &case.context(l)) {
        return Err(DataError::Inconsistent(format!(
            "torus {torus_label} does not hold a full Sylow subgroup in case {case}"
        )));
    }
    let table = classify(case, l, data)?;
    let mut rows = Vec::new();
    for p in data.pairs.iter().filter(|p| p.case == case.cond.token()) {
        let weyl = data.group(&p.weyl)?;
        let block = table
            .positive_rows()
            .find(|r| r.pair == p.label)
            .map(|r| r.block.clone())
            .ok_or_else(|| {
                DataError::Inconsistent(format!("pair {} missing from block table", p.label))
            })?;
        rows.push(WeightRow {
            source: format!("{torus_label} <- {}", p.label),
            block: Some(block),
            weights: weyl.nirr,
        });
    }
    let totals = totals_of(&rows);
    let verified = totals_match(&table, &totals);
    Ok(WeightReport {
        case,
        l,
        rows,
        totals,
        verified,
    })
}

/// Weight report by whichever route the case demands.
pub fn weight_report(case: CaseKey, l: u64, data: &Dataset) -> Result<WeightReport, DataError> {
    match case.cond {
        Condition::QMinusEps => weight_report_linear(case, l, data),
        _ => weight_report_abelian(case, l, data),
    }
}

/// The blockwise weight count check: every positive-defect unipotent block
/// has exactly as many weights as irreducible Brauer characters.
pub fn verify_baw(case: CaseKey, l: u64, data: &Dataset) -> Result<bool, DataError> {
    Ok(weight_report(case, l, data)?.verified)
}

impl WeightReport {
    pub fn render_table(&self) -> String {
        let mut out = format!("{} l={} e={}\n", self.case, self.l, self.case.e());
        out.push_str("source          block  weights\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<14}  {:<5}  {}",
                r.source,
                r.block.as_deref().unwrap_or("-"),
                r.weights
            );
        }
        for (block, total) in &self.totals {
            let _ = writeln!(out, "total {block} = {total}");
        }
        let _ = writeln!(out, "verified = {}", if self.verified { "yes" } else { "no" });
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
                "kind": "weight",
                "eps": eps,
                "case": self.case.cond.token(),
                "l": self.l,
                "e": self.case.e(),
                "source": r.source,
                "block": r.block,
                "weights": r.weights,
            });
            out.push_str(&obj.to_string());
            out.push('\n');
        }
        let summary = serde_json::json!({
            "kind": "weight_summary",
            "eps": eps,
            "case": self.case.cond.token(),
            "l": self.l,
            "totals": self.totals,
            "verified": self.verified,
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupdata::{LDomain, TwistRule};

    fn bare_radical(label: &str) -> RadicalClassRecord {
        RadicalClassRecord {
            label: label.to_string(),
            ldomain: LDomain::Ge5,
            abelian: true,
            liepart: None,
            ncq: None,
            sylow_in_rc: SylowFlag::No,
            extends: false,
            block: None,
            note: None,
        }
    }

    #[test]
    fn torus_core_always_passes() {
        let mut r = bare_radical("R");
        r.liepart = Some(LiePart::Torus);
        let case = CaseKey::new(Sign::Plus, Condition::QMinusEps);
        assert_eq!(unipotent_block_test(&r, case, 5).unwrap(), 1);
    }

    #[test]
    fn type_a_core_never_passes() {
        let mut r = bare_radical("R");
        r.liepart = Some(LiePart::A {
            rank: 4,
            twist: TwistRule::Eps,
        });
        for eps in [Sign::Plus, Sign::Minus] {
            let case = CaseKey::new(eps, Condition::QMinusEps);
            assert_eq!(unipotent_block_test(&r, case, 5).unwrap(), 0);
        }
    }

    #[test]
    fn missing_core_is_an_error() {
        let r = bare_radical("R");
        let case = CaseKey::new(Sign::Plus, Condition::QMinusEps);
        assert!(matches!(
            unipotent_block_test(&r, case, 5),
            Err(DataError::Unsupported(_))
        ));
    }

    #[test]
    fn eligible_record_without_extension_errors() {
        let mut r = bare_radical("R");
        r.liepart = Some(LiePart::Torus);
        r.ncq = Some("S3".to_string());
        let mut data = Dataset::default();
        data.merge(
            crate::groupdata::parse_str("group S3\norder = 6\nnirr = 3\nabelian = no\n").unwrap(),
        )
        .unwrap();
        let case = CaseKey::new(Sign::Plus, Condition::QMinusEps);
        let err = clifford_weight_count(&r, case, 5, &data).unwrap_err();
        assert!(err.to_string().contains("extension"), "{err}");
        r.extends = true;
        assert_eq!(clifford_weight_count(&r, case, 5, &data).unwrap(), 3);
    }

    #[test]
    fn ineligible_record_contributes_zero_without_touching_quotient() {
        // sylow_in_rc = no and no core: the gate returns 0 and never asks
        // for the (absent) quotient record
        let mut r = bare_radical("R");
        r.liepart = None;
        r.sylow_in_rc = SylowFlag::No;
        r.ncq = None;
        let data = Dataset::default();
        let case = CaseKey::new(Sign::Plus, Condition::QMinusEps);
        assert_eq!(clifford_weight_count(&r, case, 5, &data).unwrap(), 0);
    }
}
