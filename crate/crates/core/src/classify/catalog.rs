//! Table data for the sixteen Segre quartic surfaces.
//!
//! Rows are stored as printed (symbol written the way the table writes it);
//! the catalog of distinct surfaces is derived from them by canonicalizing.

use super::{AutE, SingularityType};
use crate::cover::VertexPosition;

use AutE::*;
use SingularityType::{A, D};

/// One printed row of one of the three tables.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub table: u8,
    /// Symbol exactly as printed in the row.
    pub label: &'static str,
    pub singularities: &'static [SingularityType],
    /// Class column as printed.
    pub printed_class: u32,
    /// Class after resolving known misprints.
    pub class: u32,
    pub lines: u32,
    /// `#{Q* ⊂ S*}`, printed in the smooth-quadric table only.
    pub q_star: Option<u32>,
    /// `#{CP_2 ⊂ S*}`; the cone-cover table has no such column.
    pub planes_in_dual: Option<u32>,
    /// Vertex position column of the cone-cover table.
    pub vertex: Option<VertexPosition>,
    pub aut_e: AutE,
}

#[allow(clippy::too_many_arguments)]
const fn row(
    table: u8,
    label: &'static str,
    singularities: &'static [SingularityType],
    class: u32,
    lines: u32,
    q_star: Option<u32>,
    planes_in_dual: Option<u32>,
    vertex: Option<VertexPosition>,
    aut_e: AutE,
) -> TableRow {
    TableRow {
        table,
        label,
        singularities,
        printed_class: class,
        class,
        lines,
        q_star,
        planes_in_dual,
        vertex,
        aut_e,
    }
}

use VertexPosition::{Cusp, Node, OffBranch, SingularLocus};

pub static TABLE_ROWS: [TableRow; 22] = [
    // double covers of a smooth quadric
    row(1, "[11111]", &[], 12, 16, Some(5), Some(16), None, Trivial),
    TableRow {
        // printed as 8; the class formula with one A1 gives 12 - 2 = 10,
        // which the degeneration 12 -> 10 -> 9 also uses
        printed_class: 8,
        ..row(1, "[1112]", &[A(1)], 10, 12, Some(3), Some(8), None, Trivial)
    },
    row(1, "[111(11)]", &[A(1), A(1)], 8, 8, Some(3), Some(0), None, CStar),
    row(1, "[12(11)]", &[A(1), A(1), A(1)], 6, 6, Some(1), Some(0), None, CStar),
    row(1, "[1(11)(11)]", &[A(1), A(1), A(1), A(1)], 4, 4, Some(1), Some(0), None, CStarSquared),
    row(1, "[113]", &[A(2)], 9, 8, Some(2), Some(4), None, Trivial),
    row(1, "[122]", &[A(1), A(1)], 8, 9, Some(1), Some(4), None, Trivial),
    row(1, "[11(12)]", &[A(3)], 8, 4, Some(2), Some(0), None, Trivial),
    row(1, "[14]", &[A(3)], 8, 5, Some(1), Some(2), None, CStar),
    row(1, "[1(13)]", &[D(4)], 6, 2, Some(1), Some(0), None, CStarOrTrivial),
    // double covers of the cone over a conic
    row(2, "[(11)111]", &[A(1), A(1)], 8, 8, None, None, Some(OffBranch), CStar),
    row(2, "[(12)11]", &[A(3)], 8, 4, None, None, Some(Node), Trivial),
    row(2, "[(11)12]", &[A(1), A(1), A(1)], 6, 6, None, None, Some(OffBranch), CStar),
    row(2, "[(11)(11)1]", &[A(1), A(1), A(1), A(1)], 4, 4, None, None, Some(OffBranch), CStarSquared),
    row(2, "[(11)3]", &[A(1), A(1), A(2)], 5, 4, None, None, Some(OffBranch), CStarSquared),
    row(2, "[(13)1]", &[D(4)], 6, 2, None, None, Some(Cusp), CStarOrTrivial),
    row(2, "[(12)2]", &[A(1), A(3)], 6, 3, None, None, Some(Node), CStar),
    row(2, "[(11)(12)]", &[A(1), A(1), A(3)], 4, 2, None, None, Some(Node), CStarSquared),
    row(2, "[(12)(11)]", &[A(1), A(1), A(3)], 4, 2, None, None, Some(OffBranch), CStarSquared),
    row(2, "[(14)]", &[D(5)], 5, 1, None, None, Some(SingularLocus), CStarOrTrivial),
    // no double cover over a quadric
    row(3, "[23]", &[A(1), A(2)], 7, 6, None, Some(3), None, CStar),
    row(3, "[5]", &[A(4)], 7, 3, None, Some(1), None, CStar),
];

/// Degenerations between catalog surfaces, as printed.
pub static TRANSITIONS: [(&str, &str); 8] = [
    ("[11111]", "[1112]"),
    ("[1112]", "[113]"),
    ("[1112]", "[111(11)]"),
    ("[111(11)]", "[12(11)]"),
    ("[12(11)]", "[1(11)(11)]"),
    ("[122]", "[14]"),
    ("[(11)3]", "[(13)1]"),
    ("[(12)2]", "[(14)]"),
];

/// The sixteen symbols in the order they are usually listed (by number of
/// distinct roots), as printed.
pub static SYMBOL_LIST: [&str; 16] = [
    "[11111]",
    "[2111]",
    "[(11)111]",
    "[(11)(11)1]",
    "[(11)21]",
    "[311]",
    "[221]",
    "[(12)11]",
    "[41]",
    "[(31)1]",
    "[3(11)]",
    "[32]",
    "[(12)2]",
    "[(12)(11)]",
    "[5]",
    "[(41)]",
];
