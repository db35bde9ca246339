//! Double covers of a quadric surface, their branch quartics, and the
//! hyperplane section of the dual variety cut by the base quadric.

use std::fmt;

use serde::Serialize;

use crate::classify::{self, row_symbol};
use crate::error::{Error, Result};
use crate::symbol::{Group, SegreSymbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverBase {
    SmoothQuadric,
    QuadraticCone,
}

/// Where the cone vertex sits relative to the branch curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexPosition {
    NotApplicable,
    OffBranch,
    Node,
    Cusp,
    #[serde(rename = "is_singular_locus")]
    SingularLocus,
}

impl VertexPosition {
    /// Multiplicity of the dual plane of the vertex in the section, as
    /// forced by the vertex position.
    pub fn vertex_multiplicity(self) -> Option<u32> {
        match self {
            VertexPosition::NotApplicable => None,
            VertexPosition::OffBranch => Some(0),
            VertexPosition::Node => Some(2),
            VertexPosition::Cusp | VertexPosition::SingularLocus => Some(1),
        }
    }

    fn from_group(exponents: &[u32]) -> Result<Self> {
        let mut rest: Vec<u32> = exponents.to_vec();
        rest.sort_unstable();
        match rest.as_slice() {
            [1, 1] => Ok(VertexPosition::OffBranch),
            [1, 2] => Ok(VertexPosition::Node),
            [1, 3] => Ok(VertexPosition::Cusp),
            [1, 4] => Ok(VertexPosition::SingularLocus),
            _ => Err(Error::domain(format!("no cone cover from group {exponents:?}"))),
        }
    }
}

impl fmt::Display for VertexPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexPosition::NotApplicable => "-",
            VertexPosition::OffBranch => "off B",
            VertexPosition::Node => "node of B",
            VertexPosition::Cusp => "cusp of B",
            VertexPosition::SingularLocus => "Sing B = {v}",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchKind {
    Elliptic,
    NodalRational,
    CuspidalRational,
    Conic,
    Line,
    RationalNormalCubic,
}

impl BranchKind {
    /// Degree of the dual surface of the curve, lines counted as 0.
    pub fn dual_degree(self) -> u32 {
        match self {
            BranchKind::Elliptic => 8,
            BranchKind::NodalRational => 6,
            BranchKind::CuspidalRational => 5,
            BranchKind::Conic => 2,
            BranchKind::Line => 0,
            BranchKind::RationalNormalCubic => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BranchComponent {
    pub kind: BranchKind,
    pub dual_degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchStructure {
    pub components: Vec<BranchComponent>,
    pub configuration: &'static str,
}

impl BranchStructure {
    fn new(kinds: &[BranchKind], configuration: &'static str) -> Self {
        BranchStructure {
            components: kinds
                .iter()
                .map(|&kind| BranchComponent {
                    kind,
                    dual_degree: kind.dual_degree(),
                })
                .collect(),
            configuration,
        }
    }
}

/// Sum of the component dual degrees.
pub fn branch_dual_degree(b: &BranchStructure) -> u32 {
    b.components.iter().map(|c| c.dual_degree).sum()
}

/// Component structure of a space quartic curve with the given weight-4
/// symbol, for the symbols that occur as branch curves.
pub fn branch_structure(b: &SegreSymbol) -> Result<BranchStructure> {
    use BranchKind::*;
    let shape = b.canonicalize_with_weight(4)?.shape();
    let shape: Vec<&[u32]> = shape.iter().map(Vec::as_slice).collect();
    let s = match shape.as_slice() {
        [[1], [1], [1], [1]] => BranchStructure::new(&[Elliptic], "smooth elliptic curve"),
        [[2], [1], [1]] => BranchStructure::new(&[NodalRational], "1-nodal rational curve"),
        [[3], [1]] => BranchStructure::new(&[CuspidalRational], "1-cuspidal rational curve"),
        [[1, 1], [1], [1]] => BranchStructure::new(
            &[Conic, Conic],
            "two conics intersecting transversally at two points",
        ),
        [[2, 1], [1]] => BranchStructure::new(&[Conic, Conic], "two conics touching at one point"),
        [[2], [2]] => BranchStructure::new(
            &[Line, RationalNormalCubic],
            "one line and one rational normal curve intersecting transversally at two points",
        ),
        [[4]] => BranchStructure::new(
            &[Line, RationalNormalCubic],
            "one line and one rational normal curve touching at one point",
        ),
        [[2], [1, 1]] => BranchStructure::new(
            &[Line, Line, Conic],
            "two lines and one conic, forming a triangle",
        ),
        [[3, 1]] => BranchStructure::new(
            &[Line, Line, Conic],
            "two lines and one conic, sharing one point",
        ),
        [[1, 1], [1, 1]] => BranchStructure::new(&[Line, Line, Line, Line], "a square of four lines"),
        _ => {
            return Err(Error::domain(format!(
                "{b} does not occur as the branch curve of a Segre surface"
            )))
        }
    };
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SectionComponent {
    #[serde(rename = "Q_star")]
    QStar,
    #[serde(rename = "B_star")]
    BStar,
    #[serde(rename = "v_star")]
    VStar,
}

impl fmt::Display for SectionComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SectionComponent::QStar => "Q*",
            SectionComponent::BStar => "B*",
            SectionComponent::VStar => "v*",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SectionTerm {
    pub component: SectionComponent,
    pub multiplicity: u32,
    pub degree: u32,
}

/// `S* ∩ w*` as a divisor on the hyperplane `w*` dual to the base's vertex
/// (or the base quadric itself).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionDivisor {
    pub terms: Vec<SectionTerm>,
}

impl SectionDivisor {
    pub fn total(&self) -> u32 {
        self.terms.iter().map(|t| t.multiplicity * t.degree).sum()
    }
}

impl fmt::Display for SectionDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| match t.multiplicity {
                1 => format!("{}(deg {})", t.component, t.degree),
                m => format!("{m}{}(deg {})", t.component, t.degree),
            })
            .collect();
        write!(f, "{} = {}", parts.join(" + "), self.total())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverReport {
    pub base: CoverBase,
    /// Position of the removed `1` among the entries of the canonical symbol.
    pub source_entry: usize,
    pub branch_symbol: SegreSymbol,
    pub branch_structure: BranchStructure,
    pub branch_dual_degree: u32,
    pub vertex_on_branch: VertexPosition,
    pub section: SectionDivisor,
    /// Printed table row this cover realizes.
    pub table_row: Option<&'static str>,
    /// The branch structure comes from the space-quartic table rather than
    /// from a list of cone covers.
    pub structure_derived: bool,
}

fn catalog_class(s: &SegreSymbol) -> Result<u32> {
    classify::lookup(s)
        .map(|e| e.class)
        .ok_or_else(|| Error::domain(format!("{s} is not a Segre quartic surface symbol")))
}

/// Every double-cover presentation of the surface with symbol `s`.
pub fn covers_of(s: &SegreSymbol) -> Result<Vec<CoverReport>> {
    let s = s.canonicalize_with_weight(5)?;
    let class = catalog_class(&s)?;
    let groups = s.groups();
    let mut out = Vec::new();
    let mut entry = 0;
    for (gi, g) in groups.iter().enumerate() {
        let first_one = g.exponents.iter().position(|&e| e == 1);
        let removed = match (g.is_bracketed(), first_one) {
            (_, None) => None,
            (false, Some(_)) => Some((CoverBase::SmoothQuadric, entry, VertexPosition::NotApplicable, Vec::new())),
            (true, Some(k)) => {
                let mut rest = g.exponents.clone();
                rest.remove(k);
                let vertex = VertexPosition::from_group(&g.exponents)?;
                // the brackets go, the remaining entries become separate groups
                Some((CoverBase::QuadraticCone, entry + k, vertex, rest))
            }
        };
        entry += g.exponents.len();
        let Some((base, source_entry, vertex, rest)) = removed else {
            continue;
        };
        let mut branch_groups: Vec<Group> = Vec::new();
        for (hi, h) in groups.iter().enumerate() {
            if hi == gi {
                branch_groups.extend(rest.iter().map(|&e| Group::new(vec![e])));
            } else {
                branch_groups.push(Group::new(h.exponents.clone()));
            }
        }
        let branch_symbol = SegreSymbol::new(branch_groups).canonicalize_with_weight(4)?;
        let branch_structure = branch_structure(&branch_symbol)?;
        let mut cover = CoverReport {
            base,
            source_entry,
            branch_dual_degree: branch_dual_degree(&branch_structure),
            branch_symbol,
            branch_structure,
            vertex_on_branch: vertex,
            section: SectionDivisor { terms: Vec::new() },
            table_row: None,
            structure_derived: base == CoverBase::QuadraticCone,
        };
        cover.table_row = table_row_for(&s, &cover)?;
        cover.section = section_for(&s, class, &cover)?;
        out.push(cover);
    }
    Ok(out)
}

fn table_row_for(s: &SegreSymbol, cover: &CoverReport) -> Result<Option<&'static str>> {
    let table = match cover.base {
        CoverBase::SmoothQuadric => 1,
        CoverBase::QuadraticCone => 2,
    };
    let rows: Vec<_> = classify::table_rows()
        .iter()
        .filter(|r| r.table == table && row_symbol(r) == *s)
        .collect();
    if rows.is_empty() {
        return Err(Error::Consistency(format!(
            "{s} has a {:?} cover but no row in table {table}",
            cover.base
        )));
    }
    if table == 1 {
        return Ok(Some(rows[0].label));
    }
    let row = rows
        .iter()
        .find(|r| r.vertex == Some(cover.vertex_on_branch))
        .ok_or_else(|| {
            Error::Consistency(format!(
                "cone cover of {s} with vertex {} matches no table row",
                cover.vertex_on_branch
            ))
        })?;
    Ok(Some(row.label))
}

fn section_for(s: &SegreSymbol, class: u32, cover: &CoverReport) -> Result<SectionDivisor> {
    let b = SectionTerm {
        component: SectionComponent::BStar,
        multiplicity: 1,
        degree: cover.branch_dual_degree,
    };
    let terms = match cover.base {
        CoverBase::SmoothQuadric => {
            let q = SectionTerm {
                component: SectionComponent::QStar,
                multiplicity: 2,
                degree: 2,
            };
            vec![q, b]
        }
        CoverBase::QuadraticCone => {
            let m = i64::from(class) - i64::from(cover.branch_dual_degree);
            if !(0..=2).contains(&m) {
                return Err(Error::Consistency(format!(
                    "{s}: class {class} minus branch dual degree {} is {m}",
                    cover.branch_dual_degree
                )));
            }
            let m = m as u32;
            let expected = cover.vertex_on_branch.vertex_multiplicity();
            if expected != Some(m) {
                return Err(Error::Consistency(format!(
                    "{s}: vertex {} needs multiplicity {expected:?}, degrees give {m}",
                    cover.vertex_on_branch
                )));
            }
            if m == 0 {
                vec![b]
            } else {
                let v = SectionTerm {
                    component: SectionComponent::VStar,
                    multiplicity: m,
                    degree: 1,
                };
                vec![b, v]
            }
        }
    };
    let section = SectionDivisor { terms };
    if section.total() != class {
        return Err(Error::Consistency(format!(
            "{s}: section {section} does not add up to class {class}"
        )));
    }
    Ok(section)
}

/// The divisor `S* ∩ w*` for one of the covers of `s`.
pub fn dual_section(s: &SegreSymbol, cover: &CoverReport) -> Result<SectionDivisor> {
    let s = s.canonicalize_with_weight(5)?;
    let listed = covers_of(&s)?;
    if !listed
        .iter()
        .any(|c| c.source_entry == cover.source_entry && c.base == cover.base && c.branch_symbol == cover.branch_symbol)
    {
        return Err(Error::domain(format!(
            "no {:?} cover of {s} removes entry {}",
            cover.base, cover.source_entry
        )));
    }
    section_for(&s, catalog_class(&s)?, cover)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> SegreSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn three_covers_with_nodal_branch() {
        let covers = covers_of(&sym("[1112]")).unwrap();
        assert_eq!(covers.len(), 3);
        for c in &covers {
            assert_eq!(c.base, CoverBase::SmoothQuadric);
            assert_eq!(c.branch_symbol, sym("[112]"));
            assert_eq!(c.branch_structure.components[0].kind, BranchKind::NodalRational);
            assert_eq!(c.section.to_string(), "2Q*(deg 2) + B*(deg 6) = 10");
        }
        let entries: Vec<usize> = covers.iter().map(|c| c.source_entry).collect();
        assert_eq!(entries, vec![1, 2, 3]);
    }

    #[test]
    fn mixed_bases() {
        let covers = covers_of(&sym("[12(11)]")).unwrap();
        assert_eq!(covers.len(), 2);
        let q: Vec<_> = covers.iter().filter(|c| c.base == CoverBase::SmoothQuadric).collect();
        let k: Vec<_> = covers.iter().filter(|c| c.base == CoverBase::QuadraticCone).collect();
        assert_eq!(q[0].branch_symbol, sym("[2(11)]"));
        assert_eq!(k[0].branch_symbol, sym("[112]"));
        assert_eq!(k[0].vertex_on_branch, VertexPosition::OffBranch);
        assert_eq!(k[0].table_row, Some("[(11)12]"));
    }

    #[test]
    fn no_covers() {
        assert!(covers_of(&sym("[5]")).unwrap().is_empty());
        assert!(covers_of(&sym("[23]")).unwrap().is_empty());
        assert!(covers_of(&sym("[(32)]")).is_err());
    }

    #[test]
    fn vertex_sections() {
        let c = &covers_of(&sym("[(14)]")).unwrap()[0];
        assert_eq!(c.branch_symbol, sym("[4]"));
        assert_eq!(c.vertex_on_branch, VertexPosition::SingularLocus);
        assert_eq!(c.section.to_string(), "B*(deg 4) + v*(deg 1) = 5");

        let c = &covers_of(&sym("[(12)2]")).unwrap()[0];
        assert_eq!(c.section.to_string(), "B*(deg 4) + 2v*(deg 1) = 6");

        let c = &covers_of(&sym("[(11)111]"))
            .unwrap()
            .into_iter()
            .find(|c| c.base == CoverBase::QuadraticCone)
            .unwrap();
        assert_eq!(c.section.to_string(), "B*(deg 8) = 8");
    }

    #[test]
    fn both_cone_covers_of_the_double_bracket() {
        let covers = covers_of(&sym("[(12)(11)]")).unwrap();
        let rows: Vec<_> = covers.iter().map(|c| (c.table_row.unwrap(), c.vertex_on_branch)).collect();
        assert_eq!(
            rows,
            vec![("[(11)(12)]", VertexPosition::Node), ("[(12)(11)]", VertexPosition::OffBranch)]
        );
    }

    #[test]
    fn branch_degrees() {
        let d = |s: &str| branch_dual_degree(&branch_structure(&sym(s)).unwrap());
        assert_eq!(d("[1111]"), 8);
        assert_eq!(d("[11(11)]"), 4);
        assert_eq!(d("[22]"), 4);
        assert_eq!(d("[(11)(11)]"), 0);
        assert_eq!(d("[13]"), 5);
        assert!(branch_structure(&sym("[(22)]")).is_err());
        assert!(branch_structure(&sym("[11111]")).is_err());
    }

    #[test]
    fn dual_section_checks_membership() {
        let s = sym("[1112]");
        let c = covers_of(&s).unwrap().remove(0);
        assert_eq!(dual_section(&s, &c).unwrap().total(), 10);
        assert!(dual_section(&sym("[11111]"), &c).is_err());
        assert!(dual_section(&sym("[(14)]"), &c).is_err());
    }
}
