use std::fmt::Write as _;

use serde::Serialize;

use super::config::Task;
use crate::minkowski::{MetricConvention, Signature};
use crate::noether::verify::FormStatus;
use crate::noether::{Formulation, IdentityReport, Mutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    AtMost,
    AtLeast,
}

/// One numeric diagnostic with its pinned bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericCheck {
    pub task: Task,
    pub solution: String,
    pub check: String,
    pub value: f64,
    pub comparison: Comparison,
    pub bound: f64,
    pub pass: bool,
}

impl NumericCheck {
    pub fn at_most(task: Task, solution: &str, check: impl Into<String>, value: f64, bound: f64) -> Self {
        Self {
            task,
            solution: solution.into(),
            check: check.into(),
            value,
            comparison: Comparison::AtMost,
            bound,
            // NaN fails both ways
            pass: value <= bound,
        }
    }

    pub fn at_least(task: Task, solution: &str, check: impl Into<String>, value: f64, bound: f64) -> Self {
        Self {
            comparison: Comparison::AtLeast,
            pass: value >= bound,
            ..Self::at_most(task, solution, check, value, bound)
        }
    }
}

/// Result of one task under one convention; files are written by the
/// caller, in order.
#[derive(Debug, Clone)]
pub struct TaskOutput {
    pub task: Task,
    pub identities: Vec<IdentityReport>,
    pub formula_table: Vec<TableRow>,
    pub form_status: Vec<FormStatus>,
    pub numeric: Vec<NumericCheck>,
    pub files: Vec<(String, Vec<u8>)>,
}

impl TaskOutput {
    pub fn new(task: Task) -> Self {
        Self {
            task,
            identities: Vec::new(),
            formula_table: Vec::new(),
            form_status: Vec::new(),
            numeric: Vec::new(),
            files: Vec::new(),
        }
    }
}

/// A row of the formula summary: one quantity, the identities that verify
/// it in each formulation, and whether all of them are exactly zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub quantity: &'static str,
    pub symbol: &'static str,
    pub real: Vec<String>,
    pub complex: Vec<String>,
    pub all_zero: bool,
}

const ROWS: [(&str, &str, &[&str]); 5] = [
    ("duality-symmetric Lagrangian", "L", &["lagrangian.", "euler.", "duality.complex_lagrangian_phase"]),
    ("zilch symmetry", "v_ab", &["characteristic.", "scaling.", "duality.characteristic_covariance", "duality.complex_characteristic_phase"]),
    ("Lagrangian transformation", "pr v_ab(L)", &["symmetry."]),
    (
        "zilch tensor",
        "Z_abc",
        &["noether.", "trivial.", "modified.", "kibble.", "algebra.", "complex.", "duality.zilch_invariance", "reduction.duality", "reduction.boundary", "reduction.noether"],
    ),
    ("equivalent zilch tensor", "Z'_abc", &["equivalent.", "lipkin.", "reduction.complex_zprime"]),
];

/// Group identity results under the quantities of the formula summary.
/// Each identity lands in the row of its longest matching prefix.
pub fn formula_table(ids: &[IdentityReport]) -> Vec<TableRow> {
    ROWS.iter()
        .map(|(quantity, symbol, _)| {
            let mine: Vec<&IdentityReport> = ids.iter().filter(|r| row_of(&r.name) == Some(*quantity)).collect();
            let names = |complex: bool| {
                mine.iter()
                    .filter(|r| (r.formulation == Formulation::Complex) == complex)
                    .map(|r| r.name.clone())
                    .collect()
            };
            TableRow {
                quantity,
                symbol,
                real: names(false),
                complex: names(true),
                all_zero: mine.iter().all(|r| r.residual_zero),
            }
        })
        .collect()
}

/// The row an identity belongs to: the longest matching prefix wins.
pub fn row_of(name: &str) -> Option<&'static str> {
    ROWS.iter()
        .flat_map(|(q, _, ps)| ps.iter().map(move |p| (*q, *p)))
        .filter(|(_, p)| name.starts_with(p))
        .max_by_key(|(_, p)| p.len())
        .map(|(q, _)| q)
}

/// The convention block embedded in every pass of a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConventionBlock {
    pub label: String,
    pub signature: Signature,
    pub epsilon0123: i8,
    /// diagonal of `g_ab`
    pub metric: [i64; 4],
    /// `g_00 eps_0123`, the sign relating `Z_000` to minus the optical chirality
    pub zilch_sign: f64,
}

impl From<&MetricConvention> for ConventionBlock {
    fn from(c: &MetricConvention) -> Self {
        Self {
            label: c.to_string(),
            signature: c.signature,
            epsilon0123: c.epsilon0123,
            metric: std::array::from_fn(|a| c.g(a)),
            zilch_sign: c.zilch_sign(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConventionPass {
    pub convention: ConventionBlock,
    pub identities: Vec<IdentityReport>,
    pub formula_table: Vec<TableRow>,
    pub form_status: Vec<FormStatus>,
    pub numeric: Vec<NumericCheck>,
    /// witness files for identities that failed, relative to the output directory
    pub witness_files: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub seed: u64,
    pub tasks: Vec<Task>,
    pub mutation: Option<Mutation>,
    pub passes: Vec<ConventionPass>,
    /// every file written, relative to the output directory, sorted
    pub artifacts: Vec<String>,
    pub pass: bool,
}

impl Report {
    /// Plain-text summary, one line per identity and per numeric check.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for p in &self.passes {
            let _ = writeln!(s, "convention {}", p.convention.label);
            if !p.identities.is_empty() {
                let zero = p.identities.iter().filter(|r| r.residual_zero).count();
                let _ = writeln!(s, "  identities: {zero}/{} exactly zero", p.identities.len());
                for r in &p.identities {
                    let mark = if r.residual_zero { "zero" } else { "NONZERO" };
                    let _ = writeln!(s, "    {:<44} {:>4}  {mark}", r.name, r.assignments);
                }
                for row in &p.formula_table {
                    let mark = if row.all_zero { "ok" } else { "FAIL" };
                    let _ = writeln!(s, "    [{mark}] {} ({}): {} real, {} complex", row.quantity, row.symbol, row.real.len(), row.complex.len());
                }
            }
            if !p.numeric.is_empty() {
                let passed = p.numeric.iter().filter(|c| c.pass).count();
                let _ = writeln!(s, "  numeric checks: {passed}/{} within bounds", p.numeric.len());
                for c in &p.numeric {
                    let op = match c.comparison {
                        Comparison::AtMost => "<=",
                        Comparison::AtLeast => ">=",
                    };
                    let mark = if c.pass { "ok" } else { "FAIL" };
                    let bound = if (1e-3..1e3).contains(&c.bound.abs()) { c.bound.to_string() } else { format!("{:.0e}", c.bound) };
                    let _ = writeln!(
                        s,
                        "    [{mark}] {:<12} {:<12} {:<52} {:>10.3e} {op} {bound}",
                        c.task.name(),
                        c.solution,
                        c.check,
                        c.value,
                    );
                }
            }
            for w in &p.witness_files {
                let _ = writeln!(s, "  witness: {w}");
            }
        }
        let _ = writeln!(s, "status: {}", if self.pass { "pass" } else { "fail" });
        s
    }
}
