//! The catalog of Segre quartic surfaces, the class formula and the
//! degeneration graph.

pub mod catalog;

use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::cover::{covers_of, CoverReport};
use crate::error::{Error, Result};
use crate::symbol::SegreSymbol;

pub use catalog::TableRow;

/// Rational double point type of a singularity on a Segre surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularityType {
    A(u32),
    D(u32),
}

impl SingularityType {
    /// Euler number of the extended-Dynkin fiber attached to the point:
    /// `e(A_n) = n + 1`, `e(D_n) = n + 2`.
    pub fn euler(self) -> u32 {
        match self {
            SingularityType::A(n) => n + 1,
            SingularityType::D(n) => n + 2,
        }
    }

    pub fn is_valid(self) -> bool {
        match self {
            SingularityType::A(n) => n >= 1,
            SingularityType::D(n) => n >= 4,
        }
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityType::A(n) => write!(f, "A{n}"),
            SingularityType::D(n) => write!(f, "D{n}"),
        }
    }
}

impl Serialize for SingularityType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Identity component of the automorphism group, as recorded in the tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AutE {
    #[serde(rename = "{id}")]
    Trivial,
    #[serde(rename = "C*")]
    CStar,
    #[serde(rename = "C*xC*")]
    CStarSquared,
    /// Left undecided by the source tables.
    #[serde(rename = "C* or {id}")]
    CStarOrTrivial,
}

impl fmt::Display for AutE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AutE::Trivial => "{id}",
            AutE::CStar => "C*",
            AutE::CStarSquared => "C*xC*",
            AutE::CStarOrTrivial => "C* or {id}",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NotSegreReason {
    /// Some member of the pencil has rank at most 2.
    Reducible,
    Cone,
    /// Singular along a line.
    NonIsolatedSingularities,
    /// Every member of the pencil is singular.
    NoSmoothMember,
}

impl fmt::Display for NotSegreReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotSegreReason::Reducible => "reducible (a member of the pencil has rank <= 2)",
            NotSegreReason::Cone => "cone",
            NotSegreReason::NonIsolatedSingularities => "singular along a line",
            NotSegreReason::NoSmoothMember => "the pencil has no smooth member",
        })
    }
}

/// A distinct Segre quartic surface with its table data merged across rows.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Canonical symbol.
    pub symbol: SegreSymbol,
    pub rows: Vec<&'static TableRow>,
    pub singularities: &'static [SingularityType],
    pub class: u32,
    pub lines: u32,
    pub planes_in_dual: u32,
    pub aut_e: AutE,
}

impl CatalogEntry {
    pub fn tables(&self) -> Vec<u8> {
        let mut t: Vec<u8> = self.rows.iter().map(|r| r.table).collect();
        t.dedup();
        t
    }

    pub fn notes(&self) -> Vec<String> {
        self.rows
            .iter()
            .filter(|r| r.printed_class != r.class)
            .map(|r| {
                format!(
                    "table {} row {} prints class {}; the class formula gives {}, which is stored",
                    r.table, r.label, r.printed_class, r.class
                )
            })
            .collect()
    }
}

fn parse_static(label: &str) -> SegreSymbol {
    label
        .parse::<SegreSymbol>()
        .and_then(|s| s.canonicalize())
        .expect("catalog labels are well-formed")
}

pub fn table_rows() -> &'static [TableRow] {
    &catalog::TABLE_ROWS
}

/// Canonical symbol of a printed table row.
pub fn row_symbol(row: &TableRow) -> SegreSymbol {
    parse_static(row.label)
}

/// The sixteen surfaces, in the usual listing order.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        catalog::SYMBOL_LIST
            .iter()
            .map(|label| {
                let symbol = parse_static(label);
                let rows: Vec<&'static TableRow> = catalog::TABLE_ROWS
                    .iter()
                    .filter(|r| parse_static(r.label) == symbol)
                    .collect();
                let first = rows[0];
                CatalogEntry {
                    symbol,
                    singularities: first.singularities,
                    class: first.class,
                    lines: first.lines,
                    planes_in_dual: rows.iter().find_map(|r| r.planes_in_dual).unwrap_or(0),
                    aut_e: first.aut_e,
                    rows,
                }
            })
            .collect()
    })
}

pub fn lookup(s: &SegreSymbol) -> Option<&'static CatalogEntry> {
    catalog().iter().find(|e| e.symbol == *s)
}

/// `12 - Σ e(X_i)`.
pub fn class_degree(singularities: &[SingularityType]) -> Result<u32> {
    if let Some(bad) = singularities.iter().find(|s| !s.is_valid()) {
        return Err(Error::domain(format!("invalid singularity type {bad}")));
    }
    let euler: u32 = singularities.iter().map(|s| s.euler()).sum();
    12u32.checked_sub(euler).ok_or_else(|| {
        Error::domain(format!("Euler numbers sum to {euler} > 12; not a Segre surface"))
    })
}

/// Degenerations listed for a catalog surface.
pub fn transitions(s: &SegreSymbol) -> Result<Vec<SegreSymbol>> {
    if lookup(s).is_none() {
        return Err(Error::domain(format!("{s} is not a Segre quartic surface symbol")));
    }
    Ok(transition_edges()
        .into_iter()
        .filter(|(from, _)| from == s)
        .map(|(_, to)| to)
        .collect())
}

/// All edges of the degeneration graph, canonicalized.
pub fn transition_edges() -> Vec<(SegreSymbol, SegreSymbol)> {
    catalog::TRANSITIONS
        .iter()
        .map(|(a, b)| (parse_static(a), parse_static(b)))
        .collect()
}

fn non_segre_reason(s: &SegreSymbol) -> NotSegreReason {
    let groups = s.groups();
    if groups.iter().any(|g| g.exponents.len() >= 3) {
        NotSegreReason::Reducible
    } else if groups.len() == 1 {
        NotSegreReason::Cone
    } else {
        NotSegreReason::NonIsolatedSingularities
    }
}

fn serialize_symbols<S: Serializer>(v: &[SegreSymbol], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

/// Everything known about the surface cut out by a pencil with a given
/// Segre symbol. Field order is the serialization order.
#[derive(Clone, Debug, Serialize)]
pub struct SurfaceReport {
    pub symbol: SegreSymbol,
    pub is_segre: bool,
    pub reason: Option<NotSegreReason>,
    pub singularities: Vec<SingularityType>,
    pub euler_sum: Option<u32>,
    pub class_degree: Option<u32>,
    pub q_star_count: usize,
    pub lines_total: Option<u32>,
    pub planes_in_dual: Option<u32>,
    pub aut_e: Option<AutE>,
    pub tables: Vec<u8>,
    pub covers: Vec<CoverReport>,
    #[serde(serialize_with = "serialize_symbols")]
    pub transitions: Vec<SegreSymbol>,
    /// Arithmetic genus of a generic hyperplane section.
    pub genus: Option<u32>,
    /// `C² = 2 + 2g` for the minitwistor lines.
    pub embedding_degree: Option<u32>,
    pub hyperplane_class: Option<&'static str>,
    pub notes: Vec<String>,
}

impl SurfaceReport {
    pub fn not_segre(symbol: SegreSymbol, reason: NotSegreReason) -> Self {
        SurfaceReport {
            q_star_count: symbol.unbracketed_ones(),
            symbol,
            is_segre: false,
            reason: Some(reason),
            singularities: Vec::new(),
            euler_sum: None,
            class_degree: None,
            lines_total: None,
            planes_in_dual: None,
            aut_e: None,
            tables: Vec::new(),
            covers: Vec::new(),
            transitions: Vec::new(),
            genus: None,
            embedding_degree: None,
            hyperplane_class: None,
            notes: Vec::new(),
        }
    }
}

/// Full report for a weight-5 symbol.
pub fn classify_symbol(s: &SegreSymbol) -> Result<SurfaceReport> {
    let symbol = s.canonicalize_with_weight(5)?;
    let Some(entry) = lookup(&symbol) else {
        let reason = non_segre_reason(&symbol);
        return Ok(SurfaceReport::not_segre(symbol, reason));
    };
    let class = class_degree(entry.singularities)?;
    if class != entry.class {
        return Err(Error::Consistency(format!(
            "class formula gives {class} for {symbol}, catalog stores {}",
            entry.class
        )));
    }
    let covers = covers_of(&symbol)?;
    let mut notes = entry.notes();
    if covers.iter().any(|c| c.structure_derived) {
        notes.push(
            "branch structures of cone covers are read from the space-quartic structure table"
                .to_string(),
        );
    }
    Ok(SurfaceReport {
        q_star_count: symbol.unbracketed_ones(),
        is_segre: true,
        reason: None,
        singularities: entry.singularities.to_vec(),
        euler_sum: Some(entry.singularities.iter().map(|s| s.euler()).sum()),
        class_degree: Some(class),
        lines_total: Some(entry.lines),
        planes_in_dual: Some(entry.planes_in_dual),
        aut_e: Some(entry.aut_e),
        tables: entry.tables(),
        covers,
        transitions: transitions(&symbol)?,
        genus: Some(1),
        embedding_degree: Some(4),
        hyperplane_class: Some("anticanonical"),
        notes,
        symbol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use SingularityType::{A, D};

    fn sym(s: &str) -> SegreSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn class_formula_examples() {
        assert_eq!(class_degree(&[]).unwrap(), 12);
        assert_eq!(class_degree(&[A(1)]).unwrap(), 10);
        assert_eq!(class_degree(&[A(1), A(1), A(2)]).unwrap(), 5);
        assert_eq!(class_degree(&[D(5)]).unwrap(), 5);
        assert!(class_degree(&[A(4), A(4), A(4)]).is_err());
        assert!(class_degree(&[D(2)]).is_err());
    }

    #[test]
    fn sixteen_distinct_surfaces() {
        let cat = catalog();
        assert_eq!(cat.len(), 16);
        for (i, a) in cat.iter().enumerate() {
            assert!(cat[i + 1..].iter().all(|b| b.symbol != a.symbol));
            assert!(!a.rows.is_empty());
        }
        // every table row belongs to some catalog entry
        assert_eq!(cat.iter().map(|e| e.rows.len()).sum::<usize>(), table_rows().len());
    }

    #[test]
    fn duplicated_rows_agree() {
        for e in catalog() {
            for r in &e.rows {
                assert_eq!(r.singularities, e.singularities, "{}", r.label);
                assert_eq!(r.class, e.class, "{}", r.label);
                assert_eq!(r.lines, e.lines, "{}", r.label);
                assert_eq!(r.aut_e, e.aut_e, "{}", r.label);
            }
        }
    }

    #[test]
    fn smooth_surface_report() {
        let r = classify_symbol(&sym("[11111]")).unwrap();
        assert!(r.is_segre);
        assert!(r.singularities.is_empty());
        assert_eq!(r.class_degree, Some(12));
        assert_eq!(r.lines_total, Some(16));
        assert_eq!(r.planes_in_dual, Some(16));
        assert_eq!(r.q_star_count, 5);
        assert_eq!(r.genus, Some(1));
        assert_eq!(r.embedding_degree, Some(4));
    }

    #[test]
    fn cone_is_not_segre() {
        let r = classify_symbol(&sym("[(32)]")).unwrap();
        assert!(!r.is_segre);
        assert_eq!(r.reason, Some(NotSegreReason::Cone));
        let r = classify_symbol(&sym("[(111)11]")).unwrap();
        assert_eq!(r.reason, Some(NotSegreReason::Reducible));
        let r = classify_symbol(&sym("[(22)1]")).unwrap();
        assert_eq!(r.reason, Some(NotSegreReason::NonIsolatedSingularities));
    }

    #[test]
    fn surface_without_covers() {
        let r = classify_symbol(&sym("[23]")).unwrap();
        assert_eq!(r.singularities, vec![A(1), A(2)]);
        assert_eq!(r.class_degree, Some(7));
        assert_eq!(r.lines_total, Some(6));
        assert_eq!(r.planes_in_dual, Some(3));
        assert!(r.covers.is_empty());
    }

    #[test]
    fn misprinted_class_is_flagged() {
        let r = classify_symbol(&sym("[1112]")).unwrap();
        assert_eq!(r.class_degree, Some(10));
        assert!(r.notes.iter().any(|n| n.contains("prints class 8")));
    }

    #[test]
    fn wrong_weight_rejected() {
        assert!(classify_symbol(&sym("[1111]")).is_err());
    }

    #[test]
    fn transition_lists() {
        assert_eq!(transitions(&sym("[11111]")).unwrap(), vec![sym("[1112]")]);
        assert_eq!(transitions(&sym("[122]")).unwrap(), vec![sym("[14]")]);
        assert!(transitions(&sym("[5]")).unwrap().is_empty());
        assert_eq!(transitions(&sym("[1112]")).unwrap().len(), 2);
        assert!(transitions(&sym("[(32)]")).is_err());
    }

    #[test]
    fn planes_bounded_by_lines() {
        for r in table_rows() {
            if let Some(p) = r.planes_in_dual {
                assert!(p <= r.lines, "{}", r.label);
            }
        }
        for e in catalog() {
            if e.tables() == [2] {
                assert_eq!(e.planes_in_dual, 0);
            }
        }
    }
}
