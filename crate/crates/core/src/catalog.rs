//! The classification tables as checksum-pinned data, with parameter
//! enumeration, lookup of embeddings, and computational verification.
//!
//! Rank and argument fields use a small language of linear integer
//! expressions in the row parameters (`2n+1`, `p+q-1`, `k`). Constraints are
//! comparisons (`q>=p+2`), finite sets (`n in {3,4}`), or disjunctions of
//! those joined by ` or `.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::criteria::{decide_with_catalog, Verdict};
use crate::error::{Error, Result};
use crate::lie::{Family, SimpleFactor};
use crate::sampling::Config;
use crate::subalgebra::{canonical_origin, construct, Embedding, Origin, Param};

const BUILTIN: &str = include_str!("../data/catalog.json");
pub const SCHEMA_VERSION: u32 = 1;
/// Largest ambient rank `enumerate` accepts.
pub const MAX_ENUMERATION_RANK: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TableId {
    #[serde(rename = "T1_h_ess")]
    HEss,
    #[serde(rename = "T2_levi")]
    Levi,
    #[serde(rename = "T3_symmetric")]
    Symmetric,
    #[serde(rename = "T4_spherical")]
    Spherical,
    #[serde(rename = "T5_not_regular")]
    NotRegular,
}

impl TableId {
    pub const ALL: [TableId; 5] = [
        TableId::HEss,
        TableId::Levi,
        TableId::Symmetric,
        TableId::Spherical,
        TableId::NotRegular,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TableId::HEss => "T1_h_ess",
            TableId::Levi => "T2_levi",
            TableId::Symmetric => "T3_symmetric",
            TableId::Spherical => "T4_spherical",
            TableId::NotRegular => "T5_not_regular",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str() == s || t.as_str()[..2] == *s)
            .ok_or_else(|| Error::Catalog(format!("unknown table `{s}`")))
    }

    /// Lookup precedence; higher wins when several rows match.
    fn precedence(self) -> u8 {
        match self {
            TableId::Symmetric => 5,
            TableId::Spherical => 4,
            TableId::NotRegular => 3,
            TableId::Levi => 2,
            TableId::HEss => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamKind {
    Int,
    Family,
    Composition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSpec {
    pub name: String,
    pub kind: ParamKind,
    /// For compositions: the expression being partitioned.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub of: Option<String>,
}

/// A simple factor of the ambient algebra; `family` is a letter, a family
/// parameter name, or `SO` (rank then means matrix size).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypePattern {
    pub family: String,
    pub rank: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructorPattern {
    pub name: String,
    pub args: Vec<serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub id: String,
    pub table: TableId,
    pub line: u32,
    pub sub: Option<String>,
    pub g: String,
    pub h: String,
    pub g_types: Vec<TypePattern>,
    pub params: Vec<ParamSpec>,
    pub constraints: Vec<String>,
    /// Tabled a-regularity; `None` for metadata rows.
    pub verdict: Option<bool>,
    /// Metadata row: verified against the computed verdict, expected YES.
    pub informational: bool,
    pub constructor: Option<ConstructorPattern>,
    pub notes: String,
}

impl CatalogRow {
    /// Verdict a verification run expects.
    pub fn expected(&self) -> bool {
        self.verdict.unwrap_or(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BindingValue {
    Int(i64),
    List(Vec<i64>),
    Family(Family),
}

pub type Binding = BTreeMap<String, BindingValue>;

/// One parameter instantiation of a row.
#[derive(Clone, Debug)]
pub struct Instance<'a> {
    pub row: &'a CatalogRow,
    pub binding: Binding,
    pub g: Vec<SimpleFactor>,
    /// Canonical constructor call, when the row has a constructor.
    pub origin: Option<Origin>,
}

impl Instance<'_> {
    pub fn build(&self) -> Result<Option<Embedding>> {
        match &self.origin {
            Some(o) => construct(&o.constructor, &o.params).map(Some),
            None => Ok(None),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Match {
    pub row: CatalogRow,
    pub binding: Binding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Match,
    Mismatch,
    Skipped,
    Error,
}

#[derive(Clone, Debug)]
pub struct RowCheck {
    pub row_id: String,
    pub binding: Binding,
    pub status: CheckStatus,
    pub tabled: Option<bool>,
    pub expected: bool,
    pub computed: Option<Verdict>,
    pub message: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct TableSummary {
    pub checks: Vec<RowCheck>,
    /// Rows without a constructor.
    pub skipped_rows: Vec<String>,
    /// Constructible rows with no admissible parameters in range.
    pub empty_rows: Vec<String>,
}

impl TableSummary {
    pub fn count(&self, status: &CheckStatus) -> usize {
        self.checks.iter().filter(|c| &c.status == status).count()
    }

    pub fn rows_verified(&self) -> usize {
        let ids: alloc::collections::BTreeSet<&str> = self
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Match)
            .map(|c| c.row_id.as_str())
            .collect();
        ids.len()
    }

    pub fn is_clean(&self) -> bool {
        self.count(&CheckStatus::Mismatch) == 0 && self.count(&CheckStatus::Error) == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    rows: Vec<CatalogRow>,
    sha256: String,
}

#[derive(Deserialize)]
struct CatalogFile {
    schema: u32,
    sha256: String,
    rows: serde_json::Value,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

impl Catalog {
    pub fn builtin() -> Result<Self> {
        Self::from_json(BUILTIN)
    }

    pub fn builtin_json() -> &'static str {
        BUILTIN
    }

    /// Parses a catalog file, checking the schema version and the checksum of
    /// the canonical (sorted-key, compact) serialization of `rows`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CatalogFile =
            serde_json::from_str(text).map_err(|e| Error::Catalog(format!("malformed catalog: {e}")))?;
        if file.schema != SCHEMA_VERSION {
            return Err(Error::Catalog(format!(
                "schema {} is not supported (expected {SCHEMA_VERSION})",
                file.schema
            )));
        }
        let canonical = serde_json::to_string(&file.rows).map_err(|e| Error::Catalog(e.to_string()))?;
        let computed = hex(&Sha256::digest(canonical.as_bytes()));
        if computed != file.sha256 {
            return Err(Error::Checksum {
                expected: file.sha256,
                computed,
            });
        }
        let rows: Vec<CatalogRow> =
            serde_json::from_value(file.rows).map_err(|e| Error::Catalog(format!("malformed row: {e}")))?;
        let mut seen = alloc::collections::BTreeSet::new();
        for r in &rows {
            if !seen.insert(r.id.as_str()) {
                return Err(Error::Catalog(format!("duplicate row id {}", r.id)));
            }
        }
        Ok(Self {
            rows,
            sha256: computed,
        })
    }

    pub fn rows(&self) -> &[CatalogRow] {
        &self.rows
    }

    pub fn sha256(&self) -> &str {
        &self.sha256
    }

    pub fn row(&self, id: &str) -> Option<&CatalogRow> {
        self.rows.iter().find(|r| r.id == id)
    }

    pub fn table(&self, t: TableId) -> impl Iterator<Item = &CatalogRow> {
        self.rows.iter().filter(move |r| r.table == t)
    }

    /// All instances of the rows of `table` with ambient rank `<= max_rank`.
    pub fn enumerate(&self, table: TableId, max_rank: usize) -> Result<Vec<Instance<'_>>> {
        if max_rank > MAX_ENUMERATION_RANK {
            return Err(Error::Catalog(format!(
                "max_rank {max_rank} exceeds {MAX_ENUMERATION_RANK}"
            )));
        }
        let mut out = Vec::new();
        for row in self.table(table) {
            out.extend(instances(row, max_rank)?);
        }
        Ok(out)
    }

    /// Finds the row an embedding was built from. Matching is structural on
    /// the canonical constructor call and the ambient factors; when several
    /// rows match, the table precedence symmetric > spherical > not-regular >
    /// Levi > h_ess decides, and rows with contradicting verdicts are an
    /// ambiguity error.
    pub fn lookup(&self, e: &Embedding) -> Result<Option<Match>> {
        let Some(origin) = e.origin() else {
            return Ok(None);
        };
        let target = canonical_origin(&origin.constructor, &origin.params);
        let rank = e.ambient().rank();
        let mut hits: Vec<(&CatalogRow, Binding)> = Vec::new();
        for row in &self.rows {
            if row.constructor.is_none() {
                continue;
            }
            for inst in instances(row, rank)? {
                if inst.g.as_slice() == e.ambient().factors() && inst.origin.as_ref() == Some(&target) {
                    hits.push((row, inst.binding));
                    break;
                }
            }
        }
        let verdicts: alloc::collections::BTreeSet<bool> =
            hits.iter().filter_map(|(r, _)| r.verdict).collect();
        if verdicts.len() > 1 {
            return Err(Error::AmbiguousMatch(hits.iter().map(|(r, _)| r.id.clone()).collect()));
        }
        Ok(hits
            .into_iter()
            .max_by_key(|(r, _)| r.table.precedence())
            .map(|(r, binding)| Match {
                row: r.clone(),
                binding,
            }))
    }

    /// Builds the instance, decides it, and compares with the table.
    pub fn verify_instance(&self, inst: &Instance<'_>, cfg: &Config) -> RowCheck {
        let mut check = RowCheck {
            row_id: inst.row.id.clone(),
            binding: inst.binding.clone(),
            status: CheckStatus::Skipped,
            tabled: inst.row.verdict,
            expected: inst.row.expected(),
            computed: None,
            message: None,
        };
        let e = match inst.build() {
            Ok(Some(e)) => e,
            Ok(None) => return check,
            Err(err) => {
                check.status = CheckStatus::Error;
                check.message = Some(err.to_string());
                return check;
            }
        };
        // The table itself is not consulted: the computed verdict must stand
        // on its own.
        match decide_with_catalog(&e, cfg, None) {
            Ok(v) => {
                check.status = if v.a_regular == check.expected {
                    CheckStatus::Match
                } else {
                    CheckStatus::Mismatch
                };
                check.computed = Some(v);
            }
            Err(err) => {
                check.status = CheckStatus::Error;
                check.message = Some(err.to_string());
            }
        }
        check
    }

    /// Verifies every constructible instance with ambient rank `<= max_rank`.
    pub fn verify_tables(&self, max_rank: usize, cfg: &Config) -> Result<TableSummary> {
        self.verify_tables_with(max_rank, cfg, |_| {})
    }

    /// As `verify_tables`, reporting each check as it finishes.
    pub fn verify_tables_with(
        &self,
        max_rank: usize,
        cfg: &Config,
        mut progress: impl FnMut(&RowCheck),
    ) -> Result<TableSummary> {
        let mut summary = TableSummary::default();
        for t in TableId::ALL {
            for row in self.table(t) {
                if row.constructor.is_none() {
                    summary.skipped_rows.push(row.id.clone());
                    continue;
                }
                if max_rank > MAX_ENUMERATION_RANK {
                    return Err(Error::Catalog(format!(
                        "max_rank {max_rank} exceeds {MAX_ENUMERATION_RANK}"
                    )));
                }
                let insts = instances(row, max_rank)?;
                if insts.is_empty() {
                    summary.empty_rows.push(row.id.clone());
                }
                for inst in &insts {
                    let check = self.verify_instance(inst, cfg);
                    progress(&check);
                    summary.checks.push(check);
                }
            }
        }
        Ok(summary)
    }
}

// ---------------------------------------------------------------------------
// Expressions and constraints.

/// Evaluates a linear expression such as `2n+1` or `p+q-1`.
pub fn eval_expr(expr: &str, binding: &Binding) -> Result<i64> {
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Catalog("empty expression".into()));
    }
    let mut total = 0i64;
    let mut rest = s.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let sign = match rest.as_bytes()[0] {
            b'+' => {
                rest = &rest[1..];
                1
            }
            b'-' => {
                rest = &rest[1..];
                -1
            }
            _ if first => 1,
            _ => return Err(Error::Catalog(format!("bad expression `{expr}`"))),
        };
        first = false;
        let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
        let coeff: Option<i64> = if digits > 0 {
            Some(rest[..digits].parse().map_err(|_| Error::Catalog(format!("bad number in `{expr}`")))?)
        } else {
            None
        };
        rest = &rest[digits..];
        let letters = rest.bytes().take_while(u8::is_ascii_alphabetic).count();
        let term = if letters > 0 {
            let name = &rest[..letters];
            rest = &rest[letters..];
            match binding.get(name) {
                Some(BindingValue::Int(v)) => coeff.unwrap_or(1) * v,
                _ => return Err(Error::Catalog(format!("`{name}` is not an integer parameter in `{expr}`"))),
            }
        } else {
            coeff.ok_or_else(|| Error::Catalog(format!("bad expression `{expr}`")))?
        };
        total += sign * term;
    }
    Ok(total)
}

fn eval_atom(atom: &str, binding: &Binding) -> Result<bool> {
    if let Some((lhs, set)) = atom.split_once(" in ") {
        let v = eval_expr(lhs, binding)?;
        let inner = set
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::Catalog(format!("bad set in `{atom}`")))?;
        for item in inner.split(',') {
            if eval_expr(item, binding)? == v {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    for op in [">=", "<=", "!=", "==", ">", "<"] {
        if let Some((l, r)) = atom.split_once(op) {
            let (a, b) = (eval_expr(l, binding)?, eval_expr(r, binding)?);
            return Ok(match op {
                ">=" => a >= b,
                "<=" => a <= b,
                "!=" => a != b,
                "==" => a == b,
                ">" => a > b,
                _ => a < b,
            });
        }
    }
    Err(Error::Catalog(format!("bad constraint `{atom}`")))
}

pub fn eval_constraint(c: &str, binding: &Binding) -> Result<bool> {
    for atom in c.split(" or ") {
        if eval_atom(atom.trim(), binding)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn compositions(n: usize) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut tail in compositions(n - first) {
            tail.insert(0, first as i64);
            out.push(tail);
        }
    }
    out
}

fn resolve_factor(t: &TypePattern, binding: &Binding) -> Result<Option<SimpleFactor>> {
    let rank = eval_expr(&t.rank, binding)?;
    if rank < 0 {
        return Ok(None);
    }
    let rank = rank as usize;
    let built = match t.family.as_str() {
        "SO" => SimpleFactor::so(rank),
        letter if letter.len() == 1 && "ABCD".contains(letter) => SimpleFactor::new(Family::parse(letter)?, rank),
        name => match binding.get(name) {
            Some(BindingValue::Family(f)) => SimpleFactor::new(*f, rank),
            _ => return Err(Error::Catalog(format!("unknown family `{name}`"))),
        },
    };
    Ok(built.ok())
}

fn resolve_arg(v: &serde_json::Value, binding: &Binding) -> Result<Option<Param>> {
    use serde_json::Value;
    Ok(match v {
        Value::String(s) => Some(Param::Int(eval_expr(s, binding)?)),
        Value::Array(items) => {
            let mut out = Vec::new();
            for item in items {
                let s = item
                    .as_str()
                    .ok_or_else(|| Error::Catalog("list arguments hold strings".into()))?;
                if let Some(name) = s.strip_prefix('*') {
                    match binding.get(name) {
                        Some(BindingValue::List(l)) => out.extend(l.iter().copied()),
                        _ => return Err(Error::Catalog(format!("`{name}` is not a list parameter"))),
                    }
                } else {
                    out.push(eval_expr(s, binding)?);
                }
            }
            Some(Param::List(out))
        }
        Value::Object(_) => {
            let t: TypePattern =
                serde_json::from_value(v.clone()).map_err(|e| Error::Catalog(e.to_string()))?;
            resolve_factor(&t, binding)?.map(Param::Factor)
        }
        _ => return Err(Error::Catalog(format!("unsupported argument {v}"))),
    })
}

/// All admissible instances of `row` with ambient rank at most `max_rank`.
pub fn instances(row: &CatalogRow, max_rank: usize) -> Result<Vec<Instance<'_>>> {
    let bound = 2 * max_rank as i64 + 2;
    let mut partial: Vec<Binding> = vec![Binding::new()];
    for spec in &row.params {
        let mut next = Vec::new();
        for b in &partial {
            match spec.kind {
                ParamKind::Int => {
                    for v in 0..=bound {
                        let mut nb = b.clone();
                        nb.insert(spec.name.clone(), BindingValue::Int(v));
                        next.push(nb);
                    }
                }
                ParamKind::Family => {
                    for f in [Family::A, Family::B, Family::C, Family::D] {
                        let mut nb = b.clone();
                        nb.insert(spec.name.clone(), BindingValue::Family(f));
                        next.push(nb);
                    }
                }
                ParamKind::Composition => {
                    let of = spec
                        .of
                        .as_deref()
                        .ok_or_else(|| Error::Catalog(format!("{}: composition without `of`", row.id)))?;
                    let n = eval_expr(of, b)?;
                    if n < 0 || n > bound {
                        continue;
                    }
                    for c in compositions(n as usize) {
                        let mut nb = b.clone();
                        nb.insert(spec.name.clone(), BindingValue::List(c));
                        next.push(nb);
                    }
                }
            }
        }
        partial = next;
    }
    let mut out = Vec::new();
    'bindings: for binding in partial {
        for c in &row.constraints {
            if !eval_constraint(c, &binding)? {
                continue 'bindings;
            }
        }
        let mut g = Vec::with_capacity(row.g_types.len());
        for t in &row.g_types {
            match resolve_factor(t, &binding)? {
                Some(f) => g.push(f),
                None => continue 'bindings,
            }
        }
        if g.is_empty() || g.iter().map(|f| f.rank).sum::<usize>() > max_rank {
            continue;
        }
        let origin = match &row.constructor {
            Some(c) => {
                let mut params = Vec::with_capacity(c.args.len());
                for a in &c.args {
                    match resolve_arg(a, &binding)? {
                        Some(p) => params.push(p),
                        None => continue 'bindings,
                    }
                }
                Some(canonical_origin(&c.name, &params))
            }
            None => None,
        };
        out.push(Instance {
            row,
            binding,
            g,
            origin,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subalgebra::{block_sgl, so_in_sl, sp_in_sl_odd};

    fn b(pairs: &[(&str, i64)]) -> Binding {
        pairs
            .iter()
            .map(|(k, v)| (String::from(*k), BindingValue::Int(*v)))
            .collect()
    }

    #[test]
    fn expressions() {
        let bind = b(&[("n", 3), ("p", 2), ("q", 5)]);
        assert_eq!(eval_expr("2n+1", &bind).unwrap(), 7);
        assert_eq!(eval_expr("p+q-1", &bind).unwrap(), 6);
        assert_eq!(eval_expr("4", &bind).unwrap(), 4);
        assert!(eval_constraint("q>=p+2", &bind).unwrap());
        assert!(eval_constraint("n in {3,4}", &bind).unwrap());
        assert!(!eval_constraint("n>6 or p>2", &bind).unwrap());
    }

    #[test]
    fn builtin_row_counts() {
        let cat = Catalog::builtin().unwrap();
        let counts: Vec<usize> = TableId::ALL.iter().map(|&t| cat.table(t).count()).collect();
        assert_eq!(counts, vec![7, 4, 14, 12, 7]);
        let t3_lines: alloc::collections::BTreeSet<u32> =
            cat.table(TableId::Symmetric).map(|r| r.line).collect();
        assert_eq!(t3_lines.len(), 11);
    }

    #[test]
    fn spot_content() {
        let cat = Catalog::builtin().unwrap();
        let r = cat.row("T5-5").unwrap();
        assert_eq!((r.g.as_str(), r.h.as_str()), ("sp(2n)", "sp(2n-2)+C"));
        assert_eq!(r.constraints, vec![String::from("n>2")]);
        let r = cat.row("T4-9").unwrap();
        assert_eq!(r.h, "sp(2n-2)+sp(2)+sp(2m-2)");
        assert_eq!(cat.row("T3-3c").unwrap().h, "so(n-1)+so(n+1)");
        assert_eq!(cat.row("T2-3").unwrap().g, "e(6)");
    }

    #[test]
    fn corrupted_catalog_fails_checksum() {
        let text = Catalog::builtin_json().replace("sp(2n-2)+C", "sp(2n-2)+C+C");
        assert!(matches!(Catalog::from_json(&text), Err(Error::Checksum { .. })));
    }

    #[test]
    fn enumeration_examples() {
        let cat = Catalog::builtin().unwrap();
        let ns = |id: &str, max: usize| -> Vec<Binding> {
            instances(cat.row(id).unwrap(), max).unwrap().into_iter().map(|i| i.binding).collect()
        };
        assert_eq!(ns("T3-1", 3), vec![b(&[("n", 3)]), b(&[("n", 4)])]);
        assert_eq!(ns("T5-5", 4), vec![b(&[("n", 3)]), b(&[("n", 4)])]);
        assert_eq!(ns("T4-9", 4).len(), 4);
        assert!(ns("T5-7", 4).is_empty());
        assert!(cat.enumerate(TableId::HEss, 9).is_err());
    }

    #[test]
    fn lookup_examples() {
        let cat = Catalog::builtin().unwrap();
        let id = |e: &Embedding| cat.lookup(e).unwrap().map(|m| m.row.id);
        assert_eq!(id(&block_sgl(2, 2).unwrap()).as_deref(), Some("T3-2b"));
        assert_eq!(
            id(&crate::subalgebra::construct("sp_c_in_sl_odd", &[Param::Int(2)]).unwrap()).as_deref(),
            Some("T4-2")
        );
        assert_eq!(id(&block_sgl(2, 5).unwrap()).as_deref(), Some("T5-1"));
        assert_eq!(id(&so_in_sl(3).unwrap()).as_deref(), Some("T3-1"));
        assert_eq!(id(&sp_in_sl_odd(2, false).unwrap()).as_deref(), Some("T4-3"));
    }
}
