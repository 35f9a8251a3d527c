//! Reports, wire records and text tables.
//!
//! Triangle record: `{"sides": [a, b, c], "perimeter": p, "area": A}`.
//! Candidate records add `xyz` and a `filters` object; pair records
//! restate both cross equalities as fields.

use std::collections::BTreeSet;

use clap::ValueEnum;
use serde::Serialize;

use crate::arith::Nat;
use crate::error::Result;
use crate::oracle::{
    find_amicable, find_perimeter_exceeds_area, AmicablePair, PartnerSearch, SearchBound,
};
use crate::pipeline::{
    lemma1_filter, verify_theorem, CandidateRecord, EliminationMethod, EliminationVerdict,
};
use crate::triangle::{xyz_to_sides, HeronTriangle, SideTriple, XyzTriple};

pub const THEOREM_SCOPE: &str = "uniqueness rests on the finite case analysis (x <= 3, y <= 9, \
z | 64(x+y)^3) evaluated exhaustively above; it involves no perimeter bound";

pub const CROSS_CHECK_SCOPE: &str = "brute-force enumeration confirms the pipeline only for \
perimeters up to p_max; global uniqueness comes from the finite case analysis";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    Equable,
    Candidates,
    Elimination,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Verified,
    Discrepancy { stage: Stage, description: String },
}

/// Result of the full case analysis, with every intermediate record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub equable_triangles: Vec<HeronTriangle>,
    pub candidates: Vec<CandidateRecord>,
    pub verdicts: Vec<EliminationVerdict>,
    pub conclusion: Option<AmicablePair>,
    pub status: Status,
}

impl TheoremReport {
    pub fn survivor_count(&self) -> usize {
        self.candidates.iter().filter(|c| c.survives()).count()
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleRecord {
    pub sides: [u64; 3],
    pub perimeter: u64,
    pub area: u64,
}

impl From<&HeronTriangle> for TriangleRecord {
    fn from(h: &HeronTriangle) -> Self {
        TriangleRecord {
            sides: h.sides().as_array(),
            perimeter: h.perimeter(),
            area: h.area(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub first: TriangleRecord,
    pub second: TriangleRecord,
    /// `area(first) = perimeter(second)`
    pub first_area_eq_second_perimeter: u64,
    /// `perimeter(first) = area(second)`
    pub first_perimeter_eq_second_area: u64,
}

impl From<&AmicablePair> for PairRecord {
    fn from(pair: &AmicablePair) -> Self {
        PairRecord {
            first: pair.first().into(),
            second: pair.second().into(),
            first_area_eq_second_perimeter: pair.first().area(),
            first_perimeter_eq_second_area: pair.first().perimeter(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterBits {
    pub lemma2: bool,
    pub square_area: bool,
    pub lemma1: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateJson {
    pub xyz: [u64; 3],
    pub xy_sum: u64,
    pub sides: [u64; 3],
    pub perimeter: u64,
    pub area_sq: u128,
    pub area: Option<u64>,
    pub filters: FilterBits,
    pub survivor: bool,
}

impl From<&CandidateRecord> for CandidateJson {
    fn from(c: &CandidateRecord) -> Self {
        CandidateJson {
            xyz: c.xyz.as_array(),
            xy_sum: c.xy_sum,
            sides: c.sides.as_array(),
            perimeter: c.perimeter,
            area_sq: c.area_sq.get(),
            area: c.area,
            filters: FilterBits {
                lemma2: c.passed_lemma2,
                square_area: c.passed_square_area,
                lemma1: c.passed_lemma1,
            },
            survivor: c.survives(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XyzRecord {
    pub xyz: [u64; 3],
    pub sides: [u64; 3],
}

impl From<&XyzTriple> for XyzRecord {
    fn from(t: &XyzTriple) -> Self {
        XyzRecord {
            xyz: t.as_array(),
            sides: xyz_to_sides(*t).as_array(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictJson {
    pub sides: [u64; 3],
    pub xyz: [u64; 3],
    pub partner_required_perimeter: u64,
    pub partner_required_area: u64,
    pub partner_xyz_product: Option<u128>,
    pub method: &'static str,
    pub examined: Option<u64>,
    pub partners: Option<Vec<XyzRecord>>,
}

fn method_name(m: EliminationMethod) -> &'static str {
    match m {
        EliminationMethod::Enumeration => "enumeration",
        EliminationMethod::ParityShortcut => "parity-shortcut",
    }
}

impl From<&EliminationVerdict> for VerdictJson {
    fn from(v: &EliminationVerdict) -> Self {
        VerdictJson {
            sides: v.candidate.sides.as_array(),
            xyz: v.candidate.xyz.as_array(),
            partner_required_perimeter: v.partner_required_p,
            partner_required_area: v.partner_required_area,
            partner_xyz_product: v.partner_xyz_product.map(Nat::get),
            method: method_name(v.method),
            examined: v.examined,
            partners: v
                .partner_found
                .as_ref()
                .map(|found| found.iter().map(XyzRecord::from).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyJson {
    pub stage: Stage,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReportJson {
    pub status: &'static str,
    pub discrepancy: Option<DiscrepancyJson>,
    pub conclusion: Option<PairRecord>,
    pub survivor_count: usize,
    pub scope: &'static str,
    pub equable_triangles: Vec<TriangleRecord>,
    pub candidates: Vec<CandidateJson>,
    pub verdicts: Vec<VerdictJson>,
}

impl From<&TheoremReport> for TheoremReportJson {
    fn from(r: &TheoremReport) -> Self {
        let (status, discrepancy) = match &r.status {
            Status::Verified => ("verified", None),
            Status::Discrepancy { stage, description } => (
                "discrepancy",
                Some(DiscrepancyJson {
                    stage: *stage,
                    description: description.clone(),
                }),
            ),
        };
        TheoremReportJson {
            status,
            discrepancy,
            conclusion: r.conclusion.as_ref().map(PairRecord::from),
            survivor_count: r.survivor_count(),
            scope: THEOREM_SCOPE,
            equable_triangles: r
                .equable_triangles
                .iter()
                .map(TriangleRecord::from)
                .collect(),
            candidates: r.candidates.iter().map(CandidateJson::from).collect(),
            verdicts: r.verdicts.iter().map(VerdictJson::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartnerJson {
    pub perimeter: u64,
    pub area: u64,
    pub examined: u64,
    pub partners: Vec<XyzRecord>,
}

impl PartnerJson {
    pub fn new(perimeter: u64, area: u64, search: &PartnerSearch) -> Self {
        PartnerJson {
            perimeter,
            area,
            examined: search.examined,
            partners: search.partners.iter().map(XyzRecord::from).collect(),
        }
    }
}

/// Oracle against pipeline on one perimeter bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub p_max: u64,
    /// Brute force: `p > A` and `A | 2p^2`.
    pub oracle_set: BTreeSet<SideTriple>,
    /// Pipeline survivors with perimeter `<= p_max`.
    pub pipeline_set: BTreeSet<SideTriple>,
    pub oracle_pairs: Vec<AmicablePair>,
    /// The pipeline's conclusion, when both members fit in the bound.
    pub pipeline_pairs: Vec<AmicablePair>,
    pub theorem_verified: bool,
}

impl CrossCheckReport {
    pub fn agrees(&self) -> bool {
        self.theorem_verified
            && self.oracle_set == self.pipeline_set
            && self.oracle_pairs == self.pipeline_pairs
    }
}

pub fn cross_check(bound: SearchBound) -> Result<CrossCheckReport> {
    let oracle_set = find_perimeter_exceeds_area(bound)?
        .iter()
        .filter(|h| lemma1_filter(h.perimeter(), h.area()))
        .map(HeronTriangle::sides)
        .collect();
    let theorem = verify_theorem()?;
    let pipeline_set = theorem
        .candidates
        .iter()
        .filter(|c| c.survives() && c.perimeter <= bound.p_max())
        .map(|c| c.sides)
        .collect();
    let pipeline_pairs = theorem
        .conclusion
        .into_iter()
        .filter(|pair| pair.first().perimeter().max(pair.second().perimeter()) <= bound.p_max())
        .collect();
    Ok(CrossCheckReport {
        p_max: bound.p_max(),
        oracle_set,
        pipeline_set,
        oracle_pairs: find_amicable(bound)?,
        pipeline_pairs,
        theorem_verified: theorem.status == Status::Verified,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheckJson {
    pub p_max: u64,
    pub agreement: bool,
    pub theorem_verified: bool,
    pub oracle_set: Vec<[u64; 3]>,
    pub pipeline_set: Vec<[u64; 3]>,
    pub oracle_pairs: Vec<PairRecord>,
    pub pipeline_pairs: Vec<PairRecord>,
    pub scope: &'static str,
}

impl From<&CrossCheckReport> for CrossCheckJson {
    fn from(r: &CrossCheckReport) -> Self {
        CrossCheckJson {
            p_max: r.p_max,
            agreement: r.agrees(),
            theorem_verified: r.theorem_verified,
            oracle_set: r.oracle_set.iter().map(SideTriple::as_array).collect(),
            pipeline_set: r.pipeline_set.iter().map(SideTriple::as_array).collect(),
            oracle_pairs: r.oracle_pairs.iter().map(PairRecord::from).collect(),
            pipeline_pairs: r.pipeline_pairs.iter().map(PairRecord::from).collect(),
            scope: CROSS_CHECK_SCOPE,
        }
    }
}

/// Lines of a record stream: one JSON object per line for `Jsonl`, a
/// pretty array for `Json`, an aligned table for `Text`.
pub fn render_records<T: Serialize>(
    records: &[T],
    format: Format,
    header: &[&str],
    row: impl Fn(&T) -> Vec<String>,
) -> String {
    match format {
        Format::Jsonl => records.iter().map(|r| to_json_line(r) + "\n").collect(),
        Format::Json => to_json_pretty(&records) + "\n",
        Format::Text => render_table(header, records.iter().map(row).collect()),
    }
}

/// A single document: compact line for `Jsonl`, pretty for `Json`.
pub fn render_document<T: Serialize>(
    doc: &T,
    format: Format,
    text: impl FnOnce() -> String,
) -> String {
    match format {
        Format::Jsonl => to_json_line(doc) + "\n",
        Format::Json => to_json_pretty(doc) + "\n",
        Format::Text => text(),
    }
}

fn to_json_line<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("records serialize")
}

fn to_json_pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("records serialize")
}

/// Left-aligned columns separated by two spaces, header first.
pub fn render_table(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in &rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

pub fn triple(v: [u64; 3]) -> String {
    format!("({}, {}, {})", v[0], v[1], v[2])
}

pub fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub const TRIANGLE_HEADER: [&str; 3] = ["sides", "perimeter", "area"];

pub fn triangle_row(r: &TriangleRecord) -> Vec<String> {
    vec![triple(r.sides), r.perimeter.to_string(), r.area.to_string()]
}

pub const PAIR_HEADER: [&str; 4] = ["first", "second", "A1=p2", "p1=A2"];

pub fn pair_row(r: &PairRecord) -> Vec<String> {
    vec![
        triple(r.first.sides),
        triple(r.second.sides),
        r.first_area_eq_second_perimeter.to_string(),
        r.first_perimeter_eq_second_area.to_string(),
    ]
}

pub const CANDIDATE_HEADER: [&str; 9] = [
    "xyz",
    "sides",
    "perimeter",
    "area_sq",
    "area",
    "lemma2",
    "square",
    "lemma1",
    "survivor",
];

pub fn candidate_row(c: &CandidateJson) -> Vec<String> {
    vec![
        triple(c.xyz),
        triple(c.sides),
        c.perimeter.to_string(),
        c.area_sq.to_string(),
        opt(c.area),
        c.filters.lemma2.to_string(),
        c.filters.square_area.to_string(),
        opt(c.filters.lemma1),
        c.survivor.to_string(),
    ]
}

pub fn theorem_text(r: &TheoremReportJson) -> String {
    let mut out = String::new();
    out += &format!("status: {}\n", r.status);
    if let Some(d) = &r.discrepancy {
        out += &format!("discrepancy at {:?}: {}\n", d.stage, d.description);
    }
    match &r.conclusion {
        Some(pair) => {
            out += &format!(
                "conclusion: {} and {} (A1 = p2 = {}, p1 = A2 = {})\n",
                triple(pair.first.sides),
                triple(pair.second.sides),
                pair.first_area_eq_second_perimeter,
                pair.first_perimeter_eq_second_area
            )
        }
        None => out += "conclusion: none\n",
    }
    out += &format!("scope: {}\n", r.scope);
    out += &format!("\nequable triangles ({}):\n", r.equable_triangles.len());
    out += &render_table(
        &TRIANGLE_HEADER,
        r.equable_triangles.iter().map(triangle_row).collect(),
    );
    out += &format!(
        "\ncandidates ({} generated, {} survivors):\n",
        r.candidates.len(),
        r.survivor_count
    );
    out += &render_table(
        &CANDIDATE_HEADER,
        r.candidates
            .iter()
            .filter(|c| c.survivor)
            .map(candidate_row)
            .collect(),
    );
    out += "\neliminations:\n";
    let rows = r
        .verdicts
        .iter()
        .map(|v| {
            vec![
                triple(v.sides),
                v.partner_required_perimeter.to_string(),
                v.partner_required_area.to_string(),
                opt(v.partner_xyz_product),
                v.method.to_string(),
                opt(v.examined),
                v.partners.as_ref().map_or_else(
                    || "-".to_string(),
                    |ps| {
                        let list: Vec<String> = ps.iter().map(|p| triple(p.sides)).collect();
                        format!("[{}]", list.join(", "))
                    },
                ),
            ]
        })
        .collect();
    out += &render_table(
        &[
            "candidate",
            "partner_p",
            "partner_A",
            "partner_xyz",
            "method",
            "examined",
            "partners",
        ],
        rows,
    );
    out
}

pub fn cross_check_text(r: &CrossCheckJson) -> String {
    let set = |v: &[[u64; 3]]| {
        let items: Vec<String> = v.iter().map(|t| triple(*t)).collect();
        format!("{{{}}}", items.join(", "))
    };
    let pairs = |v: &[PairRecord]| {
        let items: Vec<String> = v
            .iter()
            .map(|p| format!("{{{}, {}}}", triple(p.first.sides), triple(p.second.sides)))
            .collect();
        format!("[{}]", items.join(", "))
    };
    format!(
        "p_max: {}\nagreement: {}\ntheorem verified: {}\noracle set: {}\npipeline set: {}\n\
         oracle pairs: {}\npipeline pairs: {}\nscope: {}\n",
        r.p_max,
        r.agreement,
        r.theorem_verified,
        set(&r.oracle_set),
        set(&r.pipeline_set),
        pairs(&r.oracle_pairs),
        pairs(&r.pipeline_pairs),
        r.scope
    )
}
