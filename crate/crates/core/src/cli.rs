//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification discrepancy, 2 usage error,
//! 3 arithmetic overflow.

use std::ffi::OsString;
use std::io::Write;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::oracle::{
    enumerate_heron, find_amicable, find_equable, find_perimeter_exceeds_area, partner_enumerate,
    PartnerSearch, SearchBound,
};
use crate::pipeline::{generate_candidates, verify_theorem_with, Lemma2Comparison, PipelineConfig};
use crate::report::{
    self, cross_check, render_document, render_records, CandidateJson, CrossCheckJson, Format,
    PairRecord, PartnerJson, TheoremReportJson, TriangleRecord,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "amicable-heron",
    version,
    about = "Search and verify amicable Heron triangles"
)]
struct Cli {
    /// Maximum perimeter (inclusive) for brute-force searches.
    #[arg(long, global = true, default_value_t = 200)]
    p_max: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// All Heron triangles with perimeter <= p-max.
    Enumerate,
    /// Heron triangles with perimeter equal to area.
    Equable,
    /// Amicable pairs with both perimeters <= p-max.
    Amicable,
    /// Heron triangles with perimeter greater than area.
    Skinny,
    /// Every triple of the finite case analysis with its filter outcomes.
    Candidates,
    /// Exhaustive search for a triangle with the given perimeter and area.
    Partner {
        #[arg(long)]
        perimeter: u64,
        #[arg(long)]
        area: u64,
    },
    /// Run the full case analysis and report the amicable pair.
    VerifyTheorem {
        /// Deliberately break one filter (mutation testing).
        #[arg(long, value_enum, hide = true)]
        mutate: Option<Mutation>,
    },
    /// Compare the brute-force oracle with the case analysis up to p-max.
    CrossCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mutation {
    Lemma2NonStrict,
    NoZGeY,
}

impl Mutation {
    fn config(self) -> PipelineConfig {
        let base = PipelineConfig::default();
        match self {
            Mutation::Lemma2NonStrict => PipelineConfig {
                lemma2: Lemma2Comparison::NonStrict,
                ..base
            },
            Mutation::NoZGeY => PipelineConfig {
                require_z_ge_y: false,
                ..base
            },
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok((code, text)) => {
            if let Err(e) = out.write_all(text.as_bytes()) {
                let _ = writeln!(err, "error: writing output: {e}");
                return EXIT_DISCREPANCY;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Overflow(_) => EXIT_OVERFLOW,
                Error::BoundTooSmall(_) | Error::InvalidArgument(_) => EXIT_USAGE,
                _ => EXIT_DISCREPANCY,
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<(i32, String), Error> {
    let format = cli.format;
    let bound = || SearchBound::new(cli.p_max);
    let triangles = |list: Vec<crate::triangle::HeronTriangle>| {
        let records: Vec<TriangleRecord> = list.iter().map(TriangleRecord::from).collect();
        render_records(
            &records,
            format,
            &report::TRIANGLE_HEADER,
            report::triangle_row,
        )
    };
    let text = match &cli.command {
        Command::Enumerate => triangles(enumerate_heron(bound()?)?),
        Command::Equable => triangles(find_equable(bound()?)?),
        Command::Skinny => triangles(find_perimeter_exceeds_area(bound()?)?),
        Command::Amicable => {
            let records: Vec<PairRecord> = find_amicable(bound()?)?
                .iter()
                .map(PairRecord::from)
                .collect();
            render_records(&records, format, &report::PAIR_HEADER, report::pair_row)
        }
        Command::Candidates => {
            let records: Vec<CandidateJson> = generate_candidates()?
                .iter()
                .map(CandidateJson::from)
                .collect();
            render_records(
                &records,
                format,
                &report::CANDIDATE_HEADER,
                report::candidate_row,
            )
        }
        Command::Partner { perimeter, area } => {
            if *perimeter == 0 || *area == 0 {
                return Err(Error::InvalidArgument(
                    "--perimeter and --area must be positive".into(),
                ));
            }
            // odd perimeters have no integer semiperimeter and hence no xyz triple
            let search = if perimeter % 2 == 0 {
                partner_enumerate(perimeter / 2, *area)?
            } else {
                PartnerSearch {
                    examined: 0,
                    partners: Vec::new(),
                }
            };
            let doc = PartnerJson::new(*perimeter, *area, &search);
            render_document(&doc, format, || partner_text(&doc))
        }
        Command::VerifyTheorem { mutate } => {
            let config = mutate.map(Mutation::config).unwrap_or_default();
            let theorem = verify_theorem_with(&config)?;
            let doc = TheoremReportJson::from(&theorem);
            let code = if theorem.is_verified() {
                EXIT_OK
            } else {
                EXIT_DISCREPANCY
            };
            return Ok((
                code,
                render_document(&doc, format, || report::theorem_text(&doc)),
            ));
        }
        Command::CrossCheck => {
            let check = cross_check(bound()?)?;
            let doc = CrossCheckJson::from(&check);
            let code = if check.agrees() {
                EXIT_OK
            } else {
                EXIT_DISCREPANCY
            };
            return Ok((
                code,
                render_document(&doc, format, || report::cross_check_text(&doc)),
            ));
        }
    };
    Ok((EXIT_OK, text))
}

fn partner_text(doc: &PartnerJson) -> String {
    let mut out = format!(
        "perimeter {} area {}: examined {} triples, {} partners\n",
        doc.perimeter,
        doc.area,
        doc.examined,
        doc.partners.len()
    );
    out += &report::render_table(
        &["xyz", "sides"],
        doc.partners
            .iter()
            .map(|p| vec![report::triple(p.xyz), report::triple(p.sides)])
            .collect(),
    );
    out
}
