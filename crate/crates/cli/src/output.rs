//! JSON schemas and text rendering.

use std::fmt::Write as _;

use normbundle::{
    Component, CurveSummary, EnumerationReport, PhiTable, SplittingType, ValidatedSpace,
};
use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentOut {
    pub blocks: Vec<[usize; 2]>,
    pub b: Vec<usize>,
    pub lambda: usize,
    pub partition: Vec<usize>,
}

impl From<&Component> for ComponentOut {
    fn from(comp: &Component) -> Self {
        Self {
            blocks: comp.blocks().iter().map(|b| [b.alpha, b.beta]).collect(),
            b: comp.b_values(),
            lambda: comp.lambda(),
            partition: comp.partition().parts().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Envelope {
    pub schema_version: &'static str,
    pub degree: usize,
    pub dim_center: usize,
    pub e: usize,
    pub s: usize,
    pub center: Vec<usize>,
    pub components: Vec<ComponentOut>,
    pub phi: Vec<usize>,
    pub c: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

impl Envelope {
    pub fn new(
        space: &ValidatedSpace,
        summary: &CurveSummary,
        phi: &PhiTable,
        c: &SplittingType,
    ) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            degree: summary.degree(),
            dim_center: summary.e() + 1,
            e: summary.e(),
            s: summary.s(),
            center: space.exponents().to_vec(),
            components: summary.components().iter().map(ComponentOut::from).collect(),
            phi: phi.values().to_vec(),
            c: c.values().to_vec(),
            verified: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("envelope serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "degree {}  dim T {}  e {}  s {}",
            self.degree, self.dim_center, self.e, self.s
        );
        let _ = writeln!(out, "center {}", join(&self.center));
        for (n, comp) in self.components.iter().enumerate() {
            let blocks: Vec<String> = comp
                .blocks
                .iter()
                .map(|[a, b]| format!("[{a},{b}]"))
                .collect();
            let _ = writeln!(
                out,
                "component {}: blocks {}  b ({})  lambda {}  partition ({})",
                n + 1,
                blocks.join(" "),
                join(&comp.b),
                comp.lambda,
                join(&comp.partition)
            );
        }
        let _ = writeln!(out, "phi {}", join(&self.phi));
        let _ = writeln!(out, "c ({})", join(&self.c));
        if let Some(v) = self.verified {
            let _ = writeln!(out, "verified {v}");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiRow {
    pub k: usize,
    pub phi: usize,
    pub d2phi: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub schema_version: &'static str,
    pub degree: usize,
    pub rows: Vec<PhiRow>,
}

impl PhiReport {
    pub fn new(degree: usize, table: &PhiTable) -> Self {
        let rows = table
            .values()
            .iter()
            .zip(table.second_differences())
            .enumerate()
            .map(|(k, (&phi, d2phi))| PhiRow { k, phi, d2phi })
            .collect();
        Self {
            schema_version: SCHEMA_VERSION,
            degree,
            rows,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("phi report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("k\tphi\td2phi\n");
        for row in &self.rows {
            let _ = writeln!(out, "{}\t{}\t{}", row.k, row.phi, row.d2phi);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeLine<'a> {
    pub c: &'a [usize],
    pub count: usize,
    pub witness: &'a [usize],
}

/// One JSON object per splitting type, newline terminated.
pub fn jsonl(report: &EnumerationReport) -> String {
    let mut out = String::new();
    for (c, entry) in &report.histogram {
        let line = TypeLine {
            c: c.values(),
            count: entry.count,
            witness: &entry.witness,
        };
        out.push_str(&serde_json::to_string(&line).expect("type line serializes"));
        out.push('\n');
    }
    out
}

/// Side-by-side φ tables, marking rows that differ.
pub fn phi_diff(formula: &[usize], oracle: &[usize]) -> String {
    let mut out = String::from("k\tformula\toracle\n");
    for k in 0..formula.len().max(oracle.len()) {
        let cell = |v: &[usize]| v.get(k).map_or("-".to_string(), |x| x.to_string());
        let (a, b) = (cell(formula), cell(oracle));
        let mark = if formula.get(k) != oracle.get(k) { "\t<<" } else { "" };
        let _ = writeln!(out, "{k}\t{a}\t{b}{mark}");
    }
    out
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diff_marks_disagreements() {
        let diff = phi_diff(&[8, 6, 4, 2, 0, 0], &[8, 6, 4, 3, 0]);
        let lines: Vec<&str> = diff.lines().collect();
        assert_eq!(lines[4], "3\t2\t3\t<<");
        assert_eq!(lines[6], "5\t0\t-\t<<");
        assert_eq!(lines[1], "0\t8\t8");
    }
}
