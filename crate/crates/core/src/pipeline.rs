//! The finite case analysis behind the uniqueness of the amicable pair.
//!
//! If neither triangle of an amicable pair is equable, one of them has
//! perimeter greater than area. For that triangle:
//!
//! * `4(x+y+z) > xyz` (perimeter exceeds area), which forces `x <= 3` and `y <= 9`;
//! * its area divides `2p^2`, because `2A^2/p = xyz` is an integer for the partner;
//! * hence `z` divides `64(x+y)^3`.
//!
//! [`generate_candidates`] walks that finite box, [`eliminate_candidate`]
//! rules out or confirms a partner for each survivor, and
//! [`verify_theorem`] ties everything into a [`TheoremReport`].

use std::collections::BTreeSet;

use crate::arith::{divisors, perfect_square_root, Nat};
use crate::error::{Error, Result};
use crate::oracle::{partner_enumerate, AmicablePair};
use crate::report::{Stage, Status, TheoremReport};
use crate::triangle::{area_squared, xyz_to_sides, HeronTriangle, SideTriple, XyzTriple};

/// Largest `x` allowed by the perimeter-exceeds-area inequality.
pub const X_MAX: u64 = 3;
/// Largest `y` allowed by the perimeter-exceeds-area inequality.
pub const Y_MAX: u64 = 9;
/// `z` divides `DIVISOR_SCALE * (x + y)^3`.
pub const DIVISOR_SCALE: u64 = 64;

/// Strictness of the perimeter-exceeds-area comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Lemma2Comparison {
    #[default]
    Strict,
    /// Admits equable triangles. Mutation testing only.
    NonStrict,
}

/// Knobs for mutation testing. The default is the sound pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineConfig {
    pub lemma2: Lemma2Comparison,
    /// Generate only `z >= y`.
    pub require_z_ge_y: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            lemma2: Lemma2Comparison::Strict,
            require_z_ge_y: true,
        }
    }
}

/// `A | 2p^2`.
pub fn lemma1_filter(perimeter: u64, area: u64) -> bool {
    if area == 0 {
        return false;
    }
    let (p, a) = (u128::from(perimeter), u128::from(area));
    // both residues are below 2^64, so the product cannot overflow
    (2 * p % a) * (p % a) % a == 0
}

/// `xyz = 2A^2 / p` for any triangle with this perimeter and area.
pub fn xyz_from_lemma1(perimeter: u64, area: u64) -> Result<Nat> {
    let twice_a2 = Nat::from(area).try_pow(2)?.try_mul(Nat::new(2))?;
    let p = Nat::from(perimeter);
    if perimeter == 0 || !p.divides(twice_a2) {
        return Err(Error::NotDivisible { perimeter, area });
    }
    Ok(Nat::new(twice_a2.get() / p.get()))
}

fn lemma2_compare(t: XyzTriple, cmp: Lemma2Comparison) -> bool {
    let four_s = 4 * Nat::from(t.semiperimeter()).get();
    match t.product() {
        Ok(xyz) => match cmp {
            Lemma2Comparison::Strict => four_s > xyz.get(),
            Lemma2Comparison::NonStrict => four_s >= xyz.get(),
        },
        // xyz beyond u128 is certainly larger than 4s
        Err(_) => false,
    }
}

/// `4(x+y+z) > xyz`, i.e. perimeter strictly greater than area.
pub fn lemma2_filter(t: XyzTriple) -> bool {
    lemma2_compare(t, Lemma2Comparison::Strict)
}

/// One triple of the finite search with the outcome of every filter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateRecord {
    pub xyz: XyzTriple,
    /// `x + y`.
    pub xy_sum: u64,
    pub sides: SideTriple,
    pub perimeter: u64,
    pub area_sq: Nat,
    pub area: Option<u64>,
    pub passed_lemma2: bool,
    pub passed_square_area: bool,
    /// Only evaluated when the area is an integer.
    pub passed_lemma1: Option<bool>,
}

impl CandidateRecord {
    pub fn evaluate(xyz: XyzTriple, config: &PipelineConfig) -> Result<Self> {
        let area_sq = area_squared(xyz)?;
        let area = perfect_square_root(area_sq).map(Nat::to_u64).transpose()?;
        let perimeter = xyz.perimeter();
        Ok(CandidateRecord {
            xyz,
            xy_sum: xyz.x() + xyz.y(),
            sides: xyz_to_sides(xyz),
            perimeter,
            area_sq,
            area,
            passed_lemma2: lemma2_compare(xyz, config.lemma2),
            passed_square_area: area.is_some(),
            passed_lemma1: area.map(|a| lemma1_filter(perimeter, a)),
        })
    }

    pub fn survives(&self) -> bool {
        self.passed_lemma2 && self.passed_square_area && self.passed_lemma1 == Some(true)
    }

    pub fn triangle(&self) -> Option<HeronTriangle> {
        self.area
            .and_then(|_| HeronTriangle::from_xyz(self.xyz).ok().flatten())
    }
}

pub fn generate_candidates() -> Result<Vec<CandidateRecord>> {
    generate_candidates_with(&PipelineConfig::default())
}

/// Every `(x, y, z)` with `x <= 3`, `x <= y <= 9`, `z | 64(x+y)^3` and
/// `z >= y`, sorted by `(x, y, z)`, with all filters evaluated.
pub fn generate_candidates_with(config: &PipelineConfig) -> Result<Vec<CandidateRecord>> {
    let mut records = Vec::new();
    for x in 1..=X_MAX {
        for y in x..=Y_MAX {
            let bound = Nat::from(DIVISOR_SCALE).try_mul(Nat::from(x + y).try_pow(3)?)?;
            for z in divisors(bound)? {
                let z = z.to_u64()?;
                if config.require_z_ge_y && z < y {
                    continue;
                }
                records.push(CandidateRecord::evaluate(XyzTriple::new(x, y, z)?, config)?);
            }
        }
    }
    records.sort_by_key(|r| r.xyz);
    Ok(records)
}

/// How a survivor's hypothetical partner was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EliminationMethod {
    /// Exhaustive scan of the partner's semiperimeter.
    Enumeration,
    /// The partner's `xyz` is odd, so `x, y, z` are odd and their sum is
    /// odd, but the required semiperimeter is even (or the required
    /// perimeter is odd outright).
    ParityShortcut,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationVerdict {
    pub candidate: CandidateRecord,
    /// The candidate's area.
    pub partner_required_p: u64,
    /// The candidate's perimeter.
    pub partner_required_area: u64,
    /// `2 * area^2 / p` for the partner, when the perimeter is even.
    pub partner_xyz_product: Option<Nat>,
    pub method: EliminationMethod,
    /// Triples scanned; `None` for the parity shortcut.
    pub examined: Option<u64>,
    /// `None` for the parity shortcut.
    pub partner_found: Option<Vec<XyzTriple>>,
}

impl EliminationVerdict {
    pub fn partners(&self) -> &[XyzTriple] {
        self.partner_found.as_deref().unwrap_or(&[])
    }

    pub fn confirms_partner(&self) -> bool {
        !self.partners().is_empty()
    }
}

/// Decides whether a surviving candidate has an amicable partner.
pub fn eliminate_candidate(c: &CandidateRecord) -> Result<EliminationVerdict> {
    let (Some(area), true) = (c.area, c.survives()) else {
        return Err(Error::Inconsistent(format!(
            "candidate {} did not survive the filters",
            c.xyz
        )));
    };
    let partner_p = area;
    let partner_area = c.perimeter;
    let mut verdict = EliminationVerdict {
        candidate: c.clone(),
        partner_required_p: partner_p,
        partner_required_area: partner_area,
        partner_xyz_product: None,
        method: EliminationMethod::ParityShortcut,
        examined: None,
        partner_found: None,
    };
    if partner_p % 2 == 1 {
        return Ok(verdict);
    }
    let s = partner_p / 2;
    let product = xyz_from_lemma1(partner_p, partner_area)?;
    verdict.partner_xyz_product = Some(product);
    if product.is_odd() && s % 2 == 0 {
        return Ok(verdict);
    }
    let search = partner_enumerate(s, partner_area)?;
    verdict.method = EliminationMethod::Enumeration;
    verdict.examined = Some(search.examined);
    verdict.partner_found = Some(search.partners);
    Ok(verdict)
}

/// All equable triangles, found by solving `xyz = 4(x+y+z)` exactly.
///
/// The same argument as for `x <= 3` applies; for fixed `x`, `y` the
/// equation gives `z = 4(x+y) / (xy - 4)`, and `z >= y` caps `y`.
pub fn equable_triangles() -> Result<Vec<HeronTriangle>> {
    let mut found = Vec::new();
    for x in 1..=X_MAX {
        for y in x.. {
            if x * y <= 4 {
                continue;
            }
            let denom = x * y - 4;
            let numer = 4 * (x + y);
            if y * denom > numer {
                break;
            }
            if numer % denom == 0 {
                let t = XyzTriple::new(x, y, numer / denom)?;
                let h = HeronTriangle::from_xyz(t)?.ok_or_else(|| {
                    Error::Inconsistent(format!("equable solution {t} has no integer area"))
                })?;
                found.push(h);
            }
        }
    }
    found.sort();
    Ok(found)
}

pub fn verify_theorem() -> Result<TheoremReport> {
    verify_theorem_with(&PipelineConfig::default())
}

pub fn verify_theorem_with(config: &PipelineConfig) -> Result<TheoremReport> {
    let equable = equable_triangles()?;
    let candidates = generate_candidates_with(config)?;
    let mut verdicts = Vec::new();
    for c in candidates.iter().filter(|c| c.survives()) {
        verdicts.push(eliminate_candidate(c)?);
    }
    let (status, conclusion) = assess(&equable, &candidates, &verdicts)?;
    Ok(TheoremReport {
        equable_triangles: equable,
        candidates,
        verdicts,
        conclusion,
        status,
    })
}

fn discrepancy(stage: Stage, description: String) -> Status {
    Status::Discrepancy { stage, description }
}

fn assess(
    equable: &[HeronTriangle],
    candidates: &[CandidateRecord],
    verdicts: &[EliminationVerdict],
) -> Result<(Status, Option<AmicablePair>)> {
    // Equable triangles would need a partner of equal perimeter and area.
    let perimeters: BTreeSet<u64> = equable.iter().map(|h| h.perimeter()).collect();
    if perimeters.len() != equable.len() {
        return Ok((
            discrepancy(
                Stage::Equable,
                "two equable triangles share a perimeter".into(),
            ),
            None,
        ));
    }

    let survivors: Vec<&CandidateRecord> = candidates.iter().filter(|c| c.survives()).collect();
    let distinct: BTreeSet<XyzTriple> = survivors.iter().map(|c| c.xyz).collect();
    if survivors.len() != 4 || distinct.len() != 4 {
        let list: Vec<String> = survivors.iter().map(|c| c.xyz.to_string()).collect();
        return Ok((
            discrepancy(
                Stage::Candidates,
                format!(
                    "expected 4 distinct survivors, got {}: {}",
                    survivors.len(),
                    list.join(", ")
                ),
            ),
            None,
        ));
    }

    let confirmed: Vec<&EliminationVerdict> =
        verdicts.iter().filter(|v| v.confirms_partner()).collect();
    let [verdict] = confirmed.as_slice() else {
        let list: Vec<String> = confirmed
            .iter()
            .map(|v| v.candidate.sides.to_string())
            .collect();
        return Ok((
            discrepancy(
                Stage::Elimination,
                format!(
                    "expected exactly one candidate with a partner, got [{}]",
                    list.join(", ")
                ),
            ),
            None,
        ));
    };
    let [partner_xyz] = verdict.partners() else {
        return Ok((
            discrepancy(
                Stage::Elimination,
                format!(
                    "candidate {} has {} partners",
                    verdict.candidate.sides,
                    verdict.partners().len()
                ),
            ),
            None,
        ));
    };
    let first = verdict.candidate.triangle();
    let second = HeronTriangle::from_xyz(*partner_xyz)?;
    match first.zip(second).and_then(|(a, b)| AmicablePair::new(a, b)) {
        Some(pair) => Ok((Status::Verified, Some(pair))),
        None => Ok((
            discrepancy(
                Stage::Elimination,
                format!(
                    "partner {} of {} does not form an amicable pair",
                    partner_xyz, verdict.candidate.sides
                ),
            ),
            None,
        )),
    }
}
