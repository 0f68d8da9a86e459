//! The classification of potentials of degree `a+b+c` as data, with the
//! invariants recorded for each normal form and a runner that recomputes them.
//!
//! Rows live in `data/catalog.txt`; see the header of that file for the
//! format. Symbolic weight families are stored at one concrete representative
//! per branch, and parameter families at a few sampled values.

mod conditions;
mod verify;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poisson::potential_degree;
use crate::polyring::{Field, Polynomial, Weights};
use crate::textio::{parse_poly, parse_weights};

pub use conditions::Condition;
pub use verify::{verify_all, verify_entry, Check, CatalogReport, EntryReport, Status};

const BUILTIN: &str = include_str!("../../data/catalog.txt");

/// The five kinds of potential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    /// Isolated singularity.
    #[serde(rename = "i")]
    Isolated,
    /// Quantum type: the projective curve `Ω = 0` has a node.
    #[serde(rename = "q")]
    Q,
    /// Balanced Weyl type: a cusp, and `Ω_x Ω_y Ω_z != 0` in every generator choice.
    #[serde(rename = "bw")]
    BalancedW,
    /// Non-balanced Weyl type.
    #[serde(rename = "nw")]
    NonBalancedW,
    /// Reducible.
    #[serde(rename = "r")]
    Reducible,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::Isolated => "i",
            Kind::Q => "q",
            Kind::BalancedW => "bw",
            Kind::NonBalancedW => "nw",
            Kind::Reducible => "r",
        }
    }

    /// Balanced irreducible: the kinds with the closed-form cohomology.
    pub fn is_balanced_irreducible(self) -> bool {
        matches!(self, Kind::Isolated | Kind::Q | Kind::BalancedW)
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" => Ok(Kind::Isolated),
            "q" => Ok(Kind::Q),
            "bw" => Ok(Kind::BalancedW),
            "nw" => Ok(Kind::NonBalancedW),
            "r" => Ok(Kind::Reducible),
            _ => Err(Error::Catalog(format!("unknown type `{s}`"))),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// An expected integer invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Expect {
    Exact(i64),
    AtMost(i64),
    OneOf(Vec<i64>),
}

impl Expect {
    pub fn admits(&self, v: i64) -> bool {
        match self {
            Expect::Exact(e) => v == *e,
            Expect::AtMost(e) => v <= *e,
            Expect::OneOf(es) => es.contains(&v),
        }
    }
}

impl FromStr for Expect {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let int = |t: &str| t.trim().parse::<i64>().map_err(|_| Error::Catalog(format!("bad integer `{t}`")));
        if let Some(rest) = s.strip_prefix("<=") {
            Ok(Expect::AtMost(int(rest)?))
        } else if s.contains('|') {
            Ok(Expect::OneOf(s.split('|').map(int).collect::<Result<_>>()?))
        } else {
            Ok(Expect::Exact(int(s)?))
        }
    }
}

impl fmt::Display for Expect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expect::Exact(e) => write!(f, "{e}"),
            Expect::AtMost(e) => write!(f, "<={e}"),
            Expect::OneOf(es) => {
                let parts: Vec<String> = es.iter().map(i64::to_string).collect();
                f.write_str(&parts.join("|"))
            }
        }
    }
}

/// yes / no / unknown.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Yes,
    No,
    Unknown,
}

impl Claim {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Claim::Yes => Some(true),
            Claim::No => Some(false),
            Claim::Unknown => None,
        }
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "yes" => Ok(Claim::Yes),
            "no" => Ok(Claim::No),
            "unknown" => Ok(Claim::Unknown),
            _ => Err(Error::Catalog(format!("expected yes/no/unknown, got `{s}`"))),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::Yes => "yes",
            Claim::No => "no",
            Claim::Unknown => "unknown",
        })
    }
}

fn yes_no(s: &str) -> Result<bool> {
    Claim::from_str(s)?.as_bool().ok_or_else(|| Error::Catalog("`unknown` is not allowed here".into()))
}

/// Which classification table a row comes from, keyed by the shape of the
/// weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Table {
    #[serde(rename = "111")]
    T111,
    #[serde(rename = "112")]
    T112,
    /// `a = b < c`, other than `(1,1,2)`.
    #[serde(rename = "aak")]
    EqualLow,
    /// `a < b = c`.
    #[serde(rename = "abb")]
    EqualHigh,
    #[serde(rename = "123")]
    T123,
    /// `a < b < c`, other than `(1,2,3)`.
    #[serde(rename = "abc")]
    Distinct,
}

impl Table {
    pub const ALL: [Table; 6] =
        [Table::T111, Table::T112, Table::EqualLow, Table::EqualHigh, Table::T123, Table::Distinct];

    pub fn key(self) -> &'static str {
        match self {
            Table::T111 => "111",
            Table::T112 => "112",
            Table::EqualLow => "aak",
            Table::EqualHigh => "abb",
            Table::T123 => "123",
            Table::Distinct => "abc",
        }
    }

    fn from_key(s: &str) -> Option<Table> {
        Table::ALL.into_iter().find(|t| t.key() == s)
    }

    pub fn admits(self, w: &Weights) -> bool {
        let (a, b, c) = (w.a, w.b, w.c);
        match self {
            Table::T111 => (a, b, c) == (1, 1, 1),
            Table::T112 => (a, b, c) == (1, 1, 2),
            Table::EqualLow => a == b && b < c && (a, b, c) != (1, 1, 2),
            Table::EqualHigh => a < b && b == c,
            Table::T123 => (a, b, c) == (1, 2, 3),
            Table::Distinct => a < b && b < c && (a, b, c) != (1, 2, 3),
        }
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// One normal form with its recorded invariants.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub table: Table,
    pub weights: Weights,
    /// Ω as written in the data file.
    pub omega_text: String,
    pub omega: Polynomial,
    pub kind: Kind,
    pub irreducible: bool,
    pub rgt: Expect,
    pub gk: Expect,
    pub vacant: Claim,
    pub sealed: Claim,
    pub isolated: bool,
    pub conditions: Vec<Condition>,
    /// Remaining note tags, e.g. `lambda:5` or `star`.
    pub notes: Vec<String>,
}

impl CatalogEntry {
    /// `deg Ω = a + b + c`.
    pub fn degree(&self) -> i64 {
        self.weights.total()
    }

    pub fn parameter(&self) -> Option<&str> {
        self.notes.iter().find_map(|t| t.strip_prefix("lambda:"))
    }

    pub fn is_starred(&self) -> bool {
        self.notes.iter().any(|t| t == "star")
    }

    fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Catalog(format!("{}: {msg}", self.id)));
        if !self.table.admits(&self.weights) {
            return fail(format!("weights ({}) do not fit table {}", self.weights, self.table));
        }
        match potential_degree(&self.omega) {
            Ok(n) if n == self.degree() => {}
            _ => return fail(format!("`{}` is not homogeneous of degree {}", self.omega_text, self.degree())),
        }
        for c in &self.conditions {
            if !c.holds(&self.weights) {
                return fail(format!("side condition `{c}` fails for ({})", self.weights));
            }
        }
        if self.irreducible == (self.kind == Kind::Reducible) {
            return fail(format!("type {} contradicts irreducible = {}", self.kind, self.irreducible));
        }
        if self.isolated != (self.kind == Kind::Isolated) {
            return fail(format!("type {} contradicts isolated = {}", self.kind, self.isolated));
        }
        if self.irreducible && self.rgt != Expect::Exact(0) {
            return fail("an irreducible potential must be rigid".into());
        }
        let vacant = if self.kind.is_balanced_irreducible() { Claim::Yes } else { Claim::No };
        if self.vacant != vacant {
            return fail(format!("type {} requires vacant = {vacant}", self.kind));
        }
        let sealed_ok = match self.kind {
            Kind::Isolated => self.sealed == Claim::Yes,
            Kind::Q | Kind::BalancedW => true,
            Kind::NonBalancedW | Kind::Reducible => self.sealed == Claim::No,
        };
        if !sealed_ok {
            return fail(format!("sealed = {} is inconsistent with type {}", self.sealed, self.kind));
        }
        Ok(())
    }
}

/// Parses one data line; `None` for blank lines and comments.
fn parse_line(line: &str, number: usize) -> Result<Option<CatalogEntry>> {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return Ok(None);
    }
    let at = |e: Error| Error::Catalog(format!("line {number}: {e}"));
    // Fields are separated by ` | `; a bare `|` belongs to a value (`1|2`, `a|b`).
    let padded = format!("{line} ");
    let fields: Vec<&str> = padded.split(" | ").map(str::trim).collect();
    if fields.len() != 11 {
        return Err(Error::Catalog(format!("line {number}: expected 11 fields, got {}", fields.len())));
    }
    let id = fields[0].to_string();
    let table_key = id.split('-').next().unwrap_or_default();
    let table = Table::from_key(table_key)
        .ok_or_else(|| Error::Catalog(format!("line {number}: unknown table prefix in `{id}`")))?;
    let weights = parse_weights(fields[1]).map_err(at)?;
    let omega = parse_poly(fields[2], weights, &Field::rationals()).map_err(at)?;
    let mut conditions = Vec::new();
    let mut notes = Vec::new();
    for tag in fields[10].split(';').map(str::trim).filter(|t| !t.is_empty()) {
        match tag.strip_prefix("when:") {
            Some(c) => conditions.push(c.parse().map_err(at)?),
            None => notes.push(tag.to_string()),
        }
    }
    let entry = CatalogEntry {
        id,
        table,
        weights,
        omega_text: fields[2].to_string(),
        omega,
        kind: fields[3].parse().map_err(at)?,
        irreducible: yes_no(fields[4]).map_err(at)?,
        rgt: fields[5].parse().map_err(at)?,
        gk: fields[6].parse().map_err(at)?,
        vacant: fields[7].parse().map_err(at)?,
        sealed: fields[8].parse().map_err(at)?,
        isolated: yes_no(fields[9]).map_err(at)?,
        conditions,
        notes,
    };
    entry.validate()?;
    Ok(Some(entry))
}

/// A loaded, validated catalog in file order.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<CatalogEntry> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if let Some(e) = parse_line(line, i + 1)? {
                if entries.iter().any(|o| o.id == e.id) {
                    return Err(Error::Catalog(format!("duplicate id `{}`", e.id)));
                }
                entries.push(e);
            }
        }
        Ok(Catalog { entries })
    }

    /// The catalog shipped with the crate.
    pub fn builtin() -> Self {
        Catalog::parse(BUILTIN).expect("built-in catalog is valid")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Catalog::parse(&text)
    }

    pub fn all(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Entries matching every filter, in file order. Filters are
    /// `table:KEY`, `type:LABEL`, `weights:a,b,c` and `id:ID`.
    pub fn entries(&self, filters: &[&str]) -> Result<Vec<&CatalogEntry>> {
        let preds: Vec<Filter> = filters.iter().map(|f| Filter::parse(f)).collect::<Result<_>>()?;
        Ok(self.entries.iter().filter(|e| preds.iter().all(|p| p.matches(e))).collect())
    }
}

enum Filter {
    Table(Table),
    Kind(Kind),
    Weights(Weights),
    Id(String),
}

impl Filter {
    fn parse(s: &str) -> Result<Filter> {
        let (key, value) = s
            .split_once(':')
            .ok_or_else(|| Error::Config(format!("filter `{s}` is not of the form key:value")))?;
        let value = value.trim();
        match key.trim() {
            "table" => Table::from_key(value)
                .map(Filter::Table)
                .ok_or_else(|| Error::Config(format!("unknown table `{value}`"))),
            "type" => Ok(Filter::Kind(value.parse().map_err(|_| Error::Config(format!("unknown type `{value}`")))?)),
            "weights" => Ok(Filter::Weights(parse_weights(value)?)),
            "id" => Ok(Filter::Id(value.to_string())),
            other => Err(Error::Config(format!("unknown filter key `{other}`"))),
        }
    }

    fn matches(&self, e: &CatalogEntry) -> bool {
        match self {
            Filter::Table(t) => e.table == *t,
            Filter::Kind(k) => e.kind == *k,
            Filter::Weights(w) => e.weights == *w,
            Filter::Id(id) => e.id == *id,
        }
    }
}

/// Entries of the built-in catalog matching `filters`.
pub fn entries(filters: &[&str]) -> Result<Vec<CatalogEntry>> {
    Ok(Catalog::builtin().entries(filters)?.into_iter().cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_loads() {
        let cat = Catalog::builtin();
        assert_eq!(cat.entries(&[]).unwrap().len(), cat.all().len());
        assert_eq!(cat.entries(&["table:112"]).unwrap().len(), 24);
        assert_eq!(cat.entries(&["weights:1,2,3"]).unwrap().len(), 31);
    }

    #[test]
    fn isolated_entries_are_the_three_families() {
        let cat = Catalog::builtin();
        let iso = cat.entries(&["type:i"]).unwrap();
        let mut shapes: Vec<String> = iso.iter().map(|e| e.weights.to_string()).collect();
        shapes.dedup();
        assert_eq!(shapes, ["1,1,1", "1,1,2", "1,2,3"]);
        assert!(iso.iter().all(|e| e.parameter().is_some()));
    }

    #[test]
    fn filters_compose_and_reject_unknown_keys() {
        let cat = Catalog::builtin();
        let q123 = cat.entries(&["table:123", "type:q"]).unwrap();
        assert_eq!(q123.len(), 5);
        assert!(cat.entries(&["colour:red"]).is_err());
        assert!(cat.entries(&["table:999"]).is_err());
        assert!(cat.entries(&["type:x"]).is_err());
        assert!(cat.entries(&["id:nope"]).unwrap().is_empty());
    }

    #[test]
    fn expectations_parse() {
        assert_eq!("<=-1".parse::<Expect>().unwrap(), Expect::AtMost(-1));
        assert_eq!("1|2".parse::<Expect>().unwrap(), Expect::OneOf(vec![1, 2]));
        assert_eq!("-5".parse::<Expect>().unwrap(), Expect::Exact(-5));
        assert!(Expect::AtMost(-1).admits(-3));
        assert!(!Expect::OneOf(vec![1, 2]).admits(0));
    }

    #[test]
    fn load_time_validation() {
        let ok = "112-01 | 1,1,2 | z^2+x^3*y | bw | yes | 0 | 1 | yes | yes | no |";
        assert!(Catalog::parse(ok).is_ok());
        let inhomogeneous = "112-01 | 1,1,2 | z^2+x^3 | r | no | -1 | 1 | no | no | no |";
        assert!(Catalog::parse(inhomogeneous).is_err());
        let wrong_degree = "112-01 | 1,1,2 | z^3 | r | no | -1 | 1 | no | no | no |";
        assert!(Catalog::parse(wrong_degree).is_err());
        let side = "aak-01 | 2,2,3 | x*y*z | r | no | -2 | 1 | no | no | no | when:c=ka";
        assert!(Catalog::parse(side).is_err());
        let table = "111-01 | 1,1,2 | z^2 | r | no | -3 | 2 | no | no | no |";
        assert!(Catalog::parse(table).is_err());
        let kind = "112-01 | 1,1,2 | z^2 | i | no | -3 | 2 | no | no | no |";
        assert!(Catalog::parse(kind).is_err());
        let dup = format!("{ok}\n{ok}");
        assert!(Catalog::parse(&dup).is_err());
    }
}
