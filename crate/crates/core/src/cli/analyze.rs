//! The `analyze` pipeline and its report.

use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::{classify_symbol, SurfaceReport};
use crate::error::{Error, Result};
use crate::pencil::{degeneracy_report, invariant_factors, select_nonsingular_member, DegeneracyReport, InvariantFactors, QuadricPencil};
use crate::symbol::{compute_symbol, SegreSymbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Segre,
    NotSegre,
    Degenerate,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootEntry {
    pub exponents: Vec<u32>,
    pub root: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub verdict: Verdict,
    pub symbol: Option<SegreSymbol>,
    /// Whether the pencil basis was changed to get a nonsingular `V`; roots
    /// then refer to the new basis.
    pub basis_changed: bool,
    pub roots: Vec<RootEntry>,
    pub invariant_factors: Option<InvariantFactors>,
    pub surface: Option<SurfaceReport>,
    pub degeneracy: Option<DegeneracyReport>,
}

pub fn analyze(p: &QuadricPencil) -> Result<AnalysisReport> {
    let selected = match select_nonsingular_member(p) {
        Ok(q) => q,
        Err(Error::NoSmoothMember) => return Ok(degenerate(p)),
        Err(e) => return Err(e),
    };
    let symbol = match compute_symbol(&selected) {
        Ok(s) => s,
        Err(Error::DegeneratePencil) => return Ok(degenerate(p)),
        Err(e) => return Err(e),
    };
    let factors = invariant_factors(&selected)?;
    let surface = classify_symbol(&symbol)?;
    Ok(AnalysisReport {
        verdict: if surface.is_segre { Verdict::Segre } else { Verdict::NotSegre },
        basis_changed: selected != *p,
        roots: symbol
            .groups()
            .iter()
            .map(|g| RootEntry {
                exponents: g.exponents.clone(),
                root: g.root.to_string(),
            })
            .collect(),
        symbol: Some(symbol),
        invariant_factors: Some(factors),
        surface: Some(surface),
        degeneracy: None,
    })
}

fn degenerate(p: &QuadricPencil) -> AnalysisReport {
    AnalysisReport {
        verdict: Verdict::Degenerate,
        symbol: None,
        basis_changed: false,
        roots: Vec::new(),
        invariant_factors: None,
        surface: None,
        degeneracy: Some(degeneracy_report(p)),
    }
}

impl AnalysisReport {
    /// 0 for a Segre surface; 3 for a degenerate pencil, and for any other
    /// non-Segre verdict when `strict`.
    pub fn exit_code(&self, strict: bool) -> i32 {
        match self.verdict {
            Verdict::Segre => 0,
            Verdict::NotSegre if !strict => 0,
            _ => 3,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(out, "{k:<22}{v}");
        };
        line(
            "verdict",
            match self.verdict {
                Verdict::Segre => "Segre quartic surface".into(),
                Verdict::NotSegre => "not a Segre quartic surface".into(),
                Verdict::Degenerate => "degenerate pencil".into(),
            },
        );
        if let Some(d) = &self.degeneracy {
            line("common radical", d.common_radical.to_string());
            line("detail", d.verdict.clone());
        }
        if let Some(s) = &self.symbol {
            line("segre symbol", s.to_string());
        }
        for r in &self.roots {
            let exps: Vec<String> = r.exponents.iter().map(u32::to_string).collect();
            line("  root", format!("{}  exponents {}", r.root, exps.join(",")));
        }
        if let Some(f) = &self.invariant_factors {
            let nontrivial: Vec<String> = f
                .factors()
                .iter()
                .filter(|d| !d.is_one())
                .map(ToString::to_string)
                .collect();
            line("invariant factors", nontrivial.join(" | "));
        }
        let Some(s) = &self.surface else {
            return out;
        };
        if let Some(r) = s.reason {
            line("reason", r.to_string());
        }
        if !s.is_segre {
            return out;
        }
        let sing: Vec<String> = s.singularities.iter().map(ToString::to_string).collect();
        line(
            "singularities",
            if sing.is_empty() { "none".into() } else { sing.join(" + ") },
        );
        let opt = |v: Option<u32>| v.map_or("-".into(), |v| v.to_string());
        line("class", opt(s.class_degree));
        line("lines", opt(s.lines_total));
        line("planes in S*", opt(s.planes_in_dual));
        line("quadrics Q* in S*", s.q_star_count.to_string());
        line("Aut_e", s.aut_e.map_or("-".into(), |a| a.to_string()));
        line("genus", opt(s.genus));
        line("C.C", opt(s.embedding_degree));
        for c in &s.covers {
            line(
                "cover",
                format!(
                    "{:?} branch {} ({}), vertex {}, S*|w* = {}",
                    c.base, c.branch_symbol, c.branch_structure.configuration, c.vertex_on_branch, c.section
                ),
            );
        }
        let t: Vec<String> = s.transitions.iter().map(ToString::to_string).collect();
        if !t.is_empty() {
            line("degenerates to", t.join(", "));
        }
        for n in &s.notes {
            line("note", n.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::input::pencil_from_forms;

    #[test]
    fn smooth_diagonal_pencil() {
        let p = pencil_from_forms(
            "X0^2 + 2*X1^2 + 3*X2^2 + 4*X3^2 + 5*X4^2; X0^2 + X1^2 + X2^2 + X3^2 + X4^2",
        )
        .unwrap();
        let r = analyze(&p).unwrap();
        assert_eq!(r.verdict, Verdict::Segre);
        let s = r.surface.as_ref().unwrap();
        assert_eq!(s.class_degree, Some(12));
        assert_eq!(s.lines_total, Some(16));
        assert_eq!(r.exit_code(true), 0);
    }

    #[test]
    fn normal_form_2111() {
        let p = pencil_from_forms(
            "4*X0*X1 + X1^2 + 3*X2^2 + 4*X3^2 + 5*X4^2; 2*X0*X1 + X2^2 + X3^2 + X4^2",
        )
        .unwrap();
        let r = analyze(&p).unwrap();
        assert_eq!(r.symbol.as_ref().unwrap().to_string(), "[2111]");
        let s = r.surface.unwrap();
        assert_eq!(s.class_degree, Some(10));
        assert_eq!(s.singularities.len(), 1);
    }

    #[test]
    fn degenerate_pair() {
        let p = pencil_from_forms("2*X0*X1 + 2*X3^2 + 3*X4^2; 2*X1*X2 + X3^2 + X4^2").unwrap();
        let r = analyze(&p).unwrap();
        assert_eq!(r.verdict, Verdict::Degenerate);
        assert_eq!(r.exit_code(false), 3);
        assert_eq!(r.degeneracy.unwrap().common_radical, 0);
    }

    #[test]
    fn cone_is_reported_but_not_strict_failure() {
        // [(32)]: the two blocks share the root 2
        let p = pencil_from_forms(
            "4*X0*X2 + 2*X1^2 + 2*X1*X2 + 4*X3*X4 + X4^2; 2*X0*X2 + X1^2 + 2*X3*X4",
        )
        .unwrap();
        let r = analyze(&p).unwrap();
        assert_eq!(r.verdict, Verdict::NotSegre);
        assert_eq!(r.exit_code(false), 0);
        assert_eq!(r.exit_code(true), 3);
    }

    #[test]
    fn reports_are_deterministic() {
        let p = pencil_from_forms("X0^2 - X1^2 + 2*X2*X3 + X4^2; X0*X1 + X2^2 + X3^2 + 7*X4^2").unwrap();
        assert_eq!(analyze(&p).unwrap().to_json(), analyze(&p).unwrap().to_json());
    }
}
