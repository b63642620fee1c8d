//! Record types and the line-oriented data format behind the block and
//! weight machinery: finite-group facts (order, character counts, defect-zero
//! counts), radical subgroup classes, maximal tori, cuspidal-pair tables, and
//! the external degree dataset for the two forms of E6.
//!
//! Format: stanzas opened by `group <name>`, `radical <label>`,
//! `torus <label>`, `pair <case> <label>`, or `e6char <label>`, followed by
//! `key = value` lines.  `#` starts a full-line comment.  Supported keys:
//!
//! ```text
//! group:   order = <integer or factored form>   nirr = <int>
//!          dz[<prime>] = <int>   dz[coprime] = <int>   abelian = yes|no
//! radical: ldomain = ge5|ge7|eq5   abelian = yes|no
//!          liepart = torus | A,<rank>,<twist> | D,<rank>,<twist>
//!          ncq = <group name>   sylow_in_rc = yes|no|paper
//!          extends = yes|no   block = <block id>   note = <text>
//! torus:   order(+1) = <factored form>   order(-1) = <factored form>
//! pair:    weyl = <group name>   principal = yes|no
//! e6char:  degree = <factored form>
//! ```
//!
//! Twist rules: `plus` and `minus` are fixed forms, `eps` follows the sign of
//! the ambient E6 case.  Unknown keys are parse errors.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use crate::cyclopoly::{CycloProduct, Sign, ValuationContext};
use crate::degrees::order_e6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderValue {
    Int(u64),
    Factored(CycloProduct),
}

impl fmt::Display for OrderValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderValue::Int(n) => write!(f, "{n}"),
            OrderValue::Factored(c) => write!(f, "{c}"),
        }
    }
}

/// Key into a group's defect-zero table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DzKey {
    Prime(u64),
    Coprime,
}

impl fmt::Display for DzKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DzKey::Prime(l) => write!(f, "{l}"),
            DzKey::Coprime => write!(f, "coprime"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GroupRecord {
    pub name: String,
    pub order: OrderValue,
    pub nirr: u32,
    pub dz: BTreeMap<DzKey, u32>,
    pub abelian: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LDomain {
    Ge5,
    Ge7,
    Eq5,
}

impl LDomain {
    pub fn admits(self, l: u64) -> bool {
        match self {
            LDomain::Ge5 => l >= 5,
            LDomain::Ge7 => l >= 7,
            LDomain::Eq5 => l == 5,
        }
    }
}

impl fmt::Display for LDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LDomain::Ge5 => "ge5",
            LDomain::Ge7 => "ge7",
            LDomain::Eq5 => "eq5",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistRule {
    Plus,
    Minus,
    Eps,
}

impl TwistRule {
    /// Resolve against the sign of the ambient case.
    pub fn resolve(self, eps: Sign) -> Sign {
        match self {
            TwistRule::Plus => Sign::Plus,
            TwistRule::Minus => Sign::Minus,
            TwistRule::Eps => eps,
        }
    }
}

impl fmt::Display for TwistRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwistRule::Plus => "plus",
            TwistRule::Minus => "minus",
            TwistRule::Eps => "eps",
        })
    }
}

/// Semisimple core of a radical class centralizer, as far as the defect-zero
/// reduction needs it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiePart {
    Torus,
    A { rank: u32, twist: TwistRule },
    D { rank: u32, twist: TwistRule },
}

impl fmt::Display for LiePart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiePart::Torus => f.write_str("torus"),
            LiePart::A { rank, twist } => write!(f, "A,{rank},{twist}"),
            LiePart::D { rank, twist } => write!(f, "D,{rank},{twist}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SylowFlag {
    Yes,
    No,
    Paper,
}

impl fmt::Display for SylowFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SylowFlag::Yes => "yes",
            SylowFlag::No => "no",
            SylowFlag::Paper => "paper",
        })
    }
}

#[derive(Debug, Clone)]
pub struct RadicalClassRecord {
    pub label: String,
    pub ldomain: LDomain,
    pub abelian: bool,
    pub liepart: Option<LiePart>,
    pub ncq: Option<String>,
    pub sylow_in_rc: SylowFlag,
    pub extends: bool,
    pub block: Option<String>,
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct TorusRecord {
    pub label: String,
    pub order_plus: CycloProduct,
    pub order_minus: CycloProduct,
}

impl TorusRecord {
    pub fn order(&self, eps: Sign) -> &CycloProduct {
        match eps {
            Sign::Plus => &self.order_plus,
            Sign::Minus => &self.order_minus,
        }
    }
}

/// A cuspidal pair heading a positive-defect unipotent block.
#[derive(Debug, Clone)]
pub struct PairRecord {
    pub case: String,
    pub label: String,
    pub weyl: String,
    pub principal: bool,
}

#[derive(Debug, Clone)]
pub struct DegreeEntry {
    pub label: String,
    pub degree: CycloProduct,
}

#[derive(Debug, Clone, Default)]
pub struct Dataset {
    pub groups: BTreeMap<String, GroupRecord>,
    pub radicals: Vec<RadicalClassRecord>,
    pub tori: BTreeMap<String, TorusRecord>,
    pub pairs: Vec<PairRecord>,
    pub degrees: Vec<DegreeEntry>,
}

#[derive(Debug, thiserror::Error)]
pub enum DataError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("no group record named {0}")]
    MissingGroup(String),
    #[error("group {group} is non-abelian and has no dz entry at l = {l}")]
    MissingDzEntry { group: String, l: u64 },
    #[error("group {0} needs an integer order for divisibility tests")]
    NonIntegerOrder(String),
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("E6 degree dataset required but not loaded")]
    DatasetRequired,
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
}

fn perr(line: usize, msg: impl Into<String>) -> DataError {
    DataError::Parse {
        line,
        msg: msg.into(),
    }
}

enum Stanza {
    Group(GroupRecord),
    Radical(RadicalClassRecord),
    Torus(TorusRecord),
    Pair(PairRecord),
    Char(DegreeEntry),
}

struct StanzaBuilder {
    kind: String,
    name: String,
    line: usize,
    keys: Vec<(String, String, usize)>,
}

fn parse_bool(v: &str, line: usize) -> Result<bool, DataError> {
    match v {
        "yes" | "true" => Ok(true),
        "no" | "false" => Ok(false),
        _ => Err(perr(line, format!("expected yes/no, got `{v}`"))),
    }
}

fn parse_cyclo(v: &str, line: usize) -> Result<CycloProduct, DataError> {
    v.parse::<CycloProduct>()
        .map_err(|e| perr(line, format!("bad factored form `{v}`: {e}")))
}

impl StanzaBuilder {
    fn take(&mut self, key: &str) -> Option<(String, usize)> {
        let pos = self.keys.iter().position(|(k, _, _)| k == key)?;
        let (_, v, l) = self.keys.remove(pos);
        Some((v, l))
    }

    fn require(&mut self, key: &str) -> Result<(String, usize), DataError> {
        self.take(key).ok_or_else(|| {
            perr(
                self.line,
                format!("{} {} is missing `{key}`", self.kind, self.name),
            )
        })
    }

    fn finish_checked(&self) -> Result<(), DataError> {
        if let Some((k, _, l)) = self.keys.first() {
            return Err(perr(*l, format!("unknown key `{k}` in {} stanza", self.kind)));
        }
        Ok(())
    }

    fn build(mut self) -> Result<Stanza, DataError> {
        let out = match self.kind.as_str() {
            "group" => {
                let (order, oline) = self.require("order")?;
                let order = if order.chars().all(|c| c.is_ascii_digit()) {
                    OrderValue::Int(
                        order
                            .parse::<u64>()
                            .map_err(|_| perr(oline, "order out of range"))?,
                    )
                } else {
                    OrderValue::Factored(parse_cyclo(&order, oline)?)
                };
                let (nirr, nline) = self.require("nirr")?;
                let nirr = nirr
                    .parse::<u32>()
                    .map_err(|_| perr(nline, "nirr must be a count"))?;
                let (ab, aline) = self.require("abelian")?;
                let abelian = parse_bool(&ab, aline)?;
                let mut dz = BTreeMap::new();
                let dz_keys: Vec<String> = self
                    .keys
                    .iter()
                    .filter(|(k, _, _)| k.starts_with("dz["))
                    .map(|(k, _, _)| k.clone())
                    .collect();
                for k in dz_keys {
                    let (v, vline) = self.take(&k).unwrap();
                    let inner = k
                        .strip_prefix("dz[")
                        .and_then(|s| s.strip_suffix(']'))
                        .ok_or_else(|| perr(vline, format!("malformed key `{k}`")))?;
                    let key = if inner == "coprime" {
                        DzKey::Coprime
                    } else {
                        DzKey::Prime(
                            inner
                                .parse::<u64>()
                                .map_err(|_| perr(vline, format!("bad prime in `{k}`")))?,
                        )
                    };
                    let count = v
                        .parse::<u32>()
                        .map_err(|_| perr(vline, "dz count must be an integer"))?;
                    dz.insert(key, count);
                }
                Stanza::Group(GroupRecord {
                    name: self.name.clone(),
                    order,
                    nirr,
                    dz,
                    abelian,
                })
            }
            "radical" => {
                let (ld, lline) = self.require("ldomain")?;
                let ldomain = match ld.as_str() {
                    "ge5" => LDomain::Ge5,
                    "ge7" => LDomain::Ge7,
                    "eq5" => LDomain::Eq5,
                    other => return Err(perr(lline, format!("bad ldomain `{other}`"))),
                };
                let (ab, aline) = self.require("abelian")?;
                let abelian = parse_bool(&ab, aline)?;
                let liepart = match self.take("liepart") {
                    None => None,
                    Some((v, vline)) => Some(parse_liepart(&v, vline)?),
                };
                let ncq = self.take("ncq").map(|(v, _)| v);
                let sylow_in_rc = match self.take("sylow_in_rc") {
                    None => SylowFlag::No,
                    Some((v, vline)) => match v.as_str() {
                        "yes" => SylowFlag::Yes,
                        "no" => SylowFlag::No,
                        "paper" => SylowFlag::Paper,
                        other => {
                            return Err(perr(vline, format!("bad sylow_in_rc `{other}`")))
                        }
                    },
                };
                let extends = match self.take("extends") {
                    None => false,
                    Some((v, vline)) => parse_bool(&v, vline)?,
                };
                let block = self.take("block").map(|(v, _)| v);
                let note = self.take("note").map(|(v, _)| v);
                Stanza::Radical(RadicalClassRecord {
                    label: self.name.clone(),
                    ldomain,
                    abelian,
                    liepart,
                    ncq,
                    sylow_in_rc,
                    extends,
                    block,
                    note,
                })
            }
            "torus" => {
                let (p, pline) = self.require("order(+1)")?;
                let (m, mline) = self.require("order(-1)")?;
                Stanza::Torus(TorusRecord {
                    label: self.name.clone(),
                    order_plus: parse_cyclo(&p, pline)?,
                    order_minus: parse_cyclo(&m, mline)?,
                })
            }
            "pair" => {
                let header = self.name.clone();
                let (case, label) = header
                    .split_once(' ')
                    .ok_or_else(|| perr(self.line, "pair stanza needs `<case> <label>`"))?;
                let (weyl, _) = self.require("weyl")?;
                let principal = match self.take("principal") {
                    None => false,
                    Some((v, vline)) => parse_bool(&v, vline)?,
                };
                Stanza::Pair(PairRecord {
                    case: case.to_string(),
                    label: label.to_string(),
                    weyl,
                    principal,
                })
            }
            "e6char" => {
                let (d, dline) = self.require("degree")?;
                Stanza::Char(DegreeEntry {
                    label: self.name.clone(),
                    degree: parse_cyclo(&d, dline)?,
                })
            }
            other => return Err(perr(self.line, format!("unknown stanza kind `{other}`"))),
        };
        self.finish_checked()?;
        Ok(out)
    }
}

fn parse_liepart(v: &str, line: usize) -> Result<LiePart, DataError> {
    if v == "torus" {
        return Ok(LiePart::Torus);
    }
    let parts: Vec<&str> = v.split(',').collect();
    if parts.len() != 3 {
        return Err(perr(line, format!("bad liepart `{v}`")));
    }
    let rank = parts[1]
        .parse::<u32>()
        .map_err(|_| perr(line, format!("bad rank in liepart `{v}`")))?;
    let twist = match parts[2] {
        "plus" => TwistRule::Plus,
        "minus" => TwistRule::Minus,
        "eps" => TwistRule::Eps,
        other => return Err(perr(line, format!("bad twist rule `{other}`"))),
    };
    match parts[0] {
        "A" => Ok(LiePart::A { rank, twist }),
        "D" => Ok(LiePart::D { rank, twist }),
        other => Err(perr(line, format!("bad family `{other}` in liepart"))),
    }
}

pub fn parse_str(text: &str) -> Result<Dataset, DataError> {
    let mut dataset = Dataset::default();
    let mut current: Option<StanzaBuilder> = None;
    let close = |b: Option<StanzaBuilder>, ds: &mut Dataset| -> Result<(), DataError> {
        let Some(b) = b else { return Ok(()) };
        let line = b.line;
        match b.build()? {
            Stanza::Group(g) => {
                if ds.groups.insert(g.name.clone(), g).is_some() {
                    return Err(perr(line, "duplicate group record"));
                }
            }
            Stanza::Radical(r) => {
                if ds.radicals.iter().any(|x| x.label == r.label) {
                    return Err(perr(line, "duplicate radical record"));
                }
                ds.radicals.push(r);
            }
            Stanza::Torus(t) => {
                if ds.tori.insert(t.label.clone(), t).is_some() {
                    return Err(perr(line, "duplicate torus record"));
                }
            }
            Stanza::Pair(p) => {
                if ds
                    .pairs
                    .iter()
                    .any(|x| x.case == p.case && x.label == p.label)
                {
                    return Err(perr(line, "duplicate pair record"));
                }
                ds.pairs.push(p);
            }
            Stanza::Char(c) => {
                ds.degrees.push(c);
            }
        }
        Ok(())
    };
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some((key, value)) = line.split_once('=') {
            // a key line only when the left side carries no stanza opener
            let key = key.trim();
            let known_opener = ["group ", "radical ", "torus ", "pair ", "e6char "]
                .iter()
                .any(|p| line.starts_with(p));
            if !known_opener {
                let Some(b) = current.as_mut() else {
                    return Err(perr(lineno, "key line outside any stanza"));
                };
                b.keys
                    .push((key.to_string(), value.trim().to_string(), lineno));
                continue;
            }
        }
        let Some((kind, name)) = line.split_once(' ') else {
            return Err(perr(lineno, format!("cannot parse stanza header `{line}`")));
        };
        close(current.take(), &mut dataset)?;
        current = Some(StanzaBuilder {
            kind: kind.to_string(),
            name: name.trim().to_string(),
            line: lineno,
            keys: Vec::new(),
        });
    }
    close(current.take(), &mut dataset)?;
    Ok(dataset)
}

pub fn load(path: impl AsRef<Path>) -> Result<Dataset, DataError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| DataError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_str(&text)
}

impl Dataset {
    /// Folds another dataset into this one; duplicate labels are errors.
    pub fn merge(&mut self, other: Dataset) -> Result<(), DataError> {
        for (name, g) in other.groups {
            if self.groups.insert(name.clone(), g).is_some() {
                return Err(DataError::Inconsistent(format!("duplicate group {name}")));
            }
        }
        for r in other.radicals {
            if self.radicals.iter().any(|x| x.label == r.label) {
                return Err(DataError::Inconsistent(format!(
                    "duplicate radical {}",
                    r.label
                )));
            }
            self.radicals.push(r);
        }
        for (name, t) in other.tori {
            if self.tori.insert(name.clone(), t).is_some() {
                return Err(DataError::Inconsistent(format!("duplicate torus {name}")));
            }
        }
        for p in other.pairs {
            if self
                .pairs
                .iter()
                .any(|x| x.case == p.case && x.label == p.label)
            {
                return Err(DataError::Inconsistent(format!(
                    "duplicate pair {} {}",
                    p.case, p.label
                )));
            }
            self.pairs.push(p);
        }
        self.degrees.extend(other.degrees);
        Ok(())
    }

    pub fn group(&self, name: &str) -> Result<&GroupRecord, DataError> {
        self.groups
            .get(name)
            .ok_or_else(|| DataError::MissingGroup(name.to_string()))
    }

    pub fn radical(&self, label: &str) -> Option<&RadicalClassRecord> {
        self.radicals.iter().find(|r| r.label == label)
    }

    pub fn require_degrees(&self) -> Result<&[DegreeEntry], DataError> {
        if self.degrees.is_empty() {
            Err(DataError::DatasetRequired)
        } else {
            Ok(&self.degrees)
        }
    }
}

/// Canonical text form; parse(render(d)) reproduces d.
pub fn render(d: &Dataset) -> String {
    let mut out = String::new();
    let mut first = true;
    let mut sep = |out: &mut String| {
        if !first {
            out.push('\n');
        }
        first = false;
    };
    for g in d.groups.values() {
        sep(&mut out);
        out.push_str(&format!("group {}\n", g.name));
        out.push_str(&format!("order = {}\n", g.order));
        out.push_str(&format!("nirr = {}\n", g.nirr));
        for (k, v) in &g.dz {
            out.push_str(&format!("dz[{k}] = {v}\n"));
        }
        out.push_str(&format!(
            "abelian = {}\n",
            if g.abelian { "yes" } else { "no" }
        ));
    }
    for r in &d.radicals {
        sep(&mut out);
        out.push_str(&format!("radical {}\n", r.label));
        out.push_str(&format!("ldomain = {}\n", r.ldomain));
        out.push_str(&format!(
            "abelian = {}\n",
            if r.abelian { "yes" } else { "no" }
        ));
        if let Some(lp) = &r.liepart {
            out.push_str(&format!("liepart = {lp}\n"));
        }
        if let Some(n) = &r.ncq {
            out.push_str(&format!("ncq = {n}\n"));
        }
        out.push_str(&format!("sylow_in_rc = {}\n", r.sylow_in_rc));
        if r.extends {
            out.push_str("extends = yes\n");
        }
        if let Some(b) = &r.block {
            out.push_str(&format!("block = {b}\n"));
        }
        if let Some(n) = &r.note {
            out.push_str(&format!("note = {n}\n"));
        }
    }
    for t in d.tori.values() {
        sep(&mut out);
        out.push_str(&format!("torus {}\n", t.label));
        out.push_str(&format!("order(+1) = {}\n", t.order_plus));
        out.push_str(&format!("order(-1) = {}\n", t.order_minus));
    }
    for p in &d.pairs {
        sep(&mut out);
        out.push_str(&format!("pair {} {}\n", p.case, p.label));
        out.push_str(&format!("weyl = {}\n", p.weyl));
        out.push_str(&format!(
            "principal = {}\n",
            if p.principal { "yes" } else { "no" }
        ));
    }
    for c in &d.degrees {
        sep(&mut out);
        out.push_str(&format!("e6char {}\n", c.label));
        out.push_str(&format!("degree = {}\n", c.degree));
    }
    out
}

/// Defect-zero character count of a finite group at the prime l.
///
/// Coprime order means full defect zero everywhere (every block has defect
/// zero), abelian groups with order divisible by l have none, and anything
/// else must carry an explicit table entry.
pub fn dz_count(g: &GroupRecord, l: u64) -> Result<u32, DataError> {
    let order = match g.order {
        OrderValue::Int(n) => n,
        OrderValue::Factored(_) => return Err(DataError::NonIntegerOrder(g.name.clone())),
    };
    if order % l != 0 {
        return Ok(g.nirr);
    }
    if g.abelian {
        return Ok(0);
    }
    g.dz
        .get(&DzKey::Prime(l))
        .copied()
        .ok_or_else(|| DataError::MissingDzEntry {
            group: g.name.clone(),
            l,
        })
}

/// True when the torus soaks up the full l-valuation of the ambient group,
/// i.e. a Sylow l-subgroup fits inside the torus.
pub fn nu_torus_check(t: &TorusRecord, eps: Sign, ctx: &ValuationContext) -> bool {
    t.order(eps).valuation(ctx) == order_e6(eps).value.valuation(ctx)
}

/// One validation failure: which record and which rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub record: String,
    pub rule: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.record, self.rule)
    }
}

pub fn validate(d: &Dataset) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut push = |record: &str, rule: &str| {
        out.push(Violation {
            record: record.to_string(),
            rule: rule.to_string(),
        })
    };

    for g in d.groups.values() {
        for (key, &count) in &g.dz {
            if count > g.nirr {
                push(&g.name, "dz_exceeds_nirr");
            }
            if let (DzKey::Prime(l), OrderValue::Int(n)) = (key, &g.order) {
                if n % l != 0 && count != g.nirr {
                    push(&g.name, "dz_coprime_must_equal_nirr");
                }
                if n % l == 0 && g.abelian && count != 0 {
                    push(&g.name, "abelian_dz_must_vanish");
                }
            }
            if *key == DzKey::Coprime && count != g.nirr {
                push(&g.name, "dz_coprime_must_equal_nirr");
            }
        }
    }

    for r in &d.radicals {
        if let Some(n) = &r.ncq {
            if !d.groups.contains_key(n) {
                push(&r.label, "unresolved_ncq");
            }
        }
        let counts = r.sylow_in_rc != SylowFlag::No;
        if counts && r.ncq.is_none() {
            push(&r.label, "counting_record_needs_ncq");
        }
    }

    for t in d.tori.values() {
        for eps in [Sign::Plus, Sign::Minus] {
            let ratio = order_e6(eps).value / t.order(eps).clone();
            if !ratio.is_polynomial() {
                push(&t.label, "torus_must_divide_group_order");
            }
        }
    }

    let mut principal_seen: BTreeMap<&str, u32> = BTreeMap::new();
    for p in &d.pairs {
        if !d.groups.contains_key(&p.weyl) {
            push(&format!("{} {}", p.case, p.label), "unresolved_relative_weyl");
        }
        if p.principal {
            *principal_seen.entry(p.case.as_str()).or_insert(0) += 1;
        }
    }
    for (case, n) in principal_seen {
        if n > 1 {
            push(case, "multiple_principal_pairs");
        }
    }

    if !d.degrees.is_empty() {
        if d.degrees.len() != 30 {
            push("e6-degrees", "must_have_30_entries");
        }
        for c in &d.degrees {
            if !c.degree.is_polynomial() {
                push(&c.label, "degree_not_polynomial");
            }
            for q0 in [2i64, 3, 4, 5, 7, 8, 9] {
                let v = c.degree.evaluate(q0);
                if !v.is_integer() || !num::Signed::is_positive(&v) {
                    push(&c.label, "degree_not_positive_integer_at_prime_power");
                    break;
                }
            }
        }
        // every degree divides the order in every case context
        for eps in [Sign::Plus, Sign::Minus] {
            let order = order_e6(eps).value;
            for (l, e) in case_contexts(eps) {
                let ctx = ValuationContext::new(l, e);
                for c in &d.degrees {
                    let deg = match eps {
                        Sign::Plus => c.degree.clone(),
                        Sign::Minus => c.degree.ennola().abs(),
                    };
                    let gap = order.valuation(&ctx).sub(&deg.valuation(&ctx));
                    if gap.alpha < 0 || gap.beta < 0 {
                        push(&c.label, "degree_gap_negative");
                    }
                }
            }
        }
    }
    out
}

/// The (l, e) contexts of the five cyclotomic cases at the given sign, using
/// the smallest admissible prime for each.
pub fn case_contexts(eps: Sign) -> [(u64, u32); 5] {
    match eps {
        Sign::Plus => [(5, 1), (5, 2), (7, 3), (5, 4), (7, 6)],
        Sign::Minus => [(5, 2), (5, 1), (7, 6), (5, 4), (7, 3)],
    }
}
