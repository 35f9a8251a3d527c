//! Acceptance gate. Each criterion prints one PASS/FAIL line; run with
//! `cargo test -p amicable-heron --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

use amicable_heron::arith::{divisors, is_perfect_square, Nat};
use amicable_heron::oracle::{
    enumerate_heron, find_odd_perimeter_heron, partner_enumerate, SearchBound,
};
use amicable_heron::pipeline::{
    eliminate_candidate, generate_candidates, generate_candidates_with, xyz_from_lemma1,
    EliminationMethod, Lemma2Comparison, PipelineConfig,
};
use amicable_heron::report::cross_check;
use amicable_heron::triangle::{area_squared, sides_to_xyz, xyz_to_sides, XyzTriple};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn bin(args: &[&str]) -> (i32, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_amicable-heron"))
        .args(args)
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
        elapsed,
    )
}

fn json_lines(text: &str) -> Vec<Value> {
    text.lines()
        .map(|l| serde_json::from_str(l).expect("valid JSON line"))
        .collect()
}

fn sides_of(v: &Value) -> [u64; 3] {
    let a = v.as_array().expect("sides array");
    [
        a[0].as_u64().unwrap(),
        a[1].as_u64().unwrap(),
        a[2].as_u64().unwrap(),
    ]
}

fn xyz(x: u64, y: u64, z: u64) -> XyzTriple {
    XyzTriple::new(x, y, z).unwrap()
}

fn survivor_xyz(config: &PipelineConfig) -> Vec<[u64; 3]> {
    generate_candidates_with(config)
        .unwrap()
        .iter()
        .filter(|c| c.survives())
        .map(|c| c.xyz.as_array())
        .collect()
}

fn ac1_equable_census() -> Check {
    let (code, out, elapsed) = bin(&["equable", "--p-max", "200", "--format", "jsonl"]);
    ensure!(code == 0, "exit code {code}");
    let records = json_lines(&out);
    let got: BTreeSet<[u64; 3]> = records.iter().map(|r| sides_of(&r["sides"])).collect();
    let want: BTreeSet<[u64; 3]> = [
        [5, 12, 13],
        [6, 8, 10],
        [6, 25, 29],
        [7, 15, 20],
        [9, 10, 17],
    ]
    .into();
    ensure!(records.len() == 5 && got == want, "got {got:?}");
    for r in &records {
        ensure!(r["area"] == r["perimeter"], "not equable: {r}");
        let [a, b, c] = sides_of(&r["sides"]);
        let p = a + b + c;
        let area = r["area"].as_u64().unwrap();
        ensure!(
            16 * area * area == p * (p - 2 * a) * (p - 2 * b) * (p - 2 * c),
            "Heron identity fails for {r}"
        );
    }
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(())
}

fn ac2_unique_pair_to_2000() -> Check {
    let (code, out, elapsed) = bin(&["amicable", "--p-max", "2000", "--format", "jsonl"]);
    ensure!(code == 0, "exit code {code}");
    let records = json_lines(&out);
    ensure!(records.len() == 1, "{} pairs", records.len());
    let pair = &records[0];
    let members = [&pair["first"], &pair["second"]];
    let big = members
        .iter()
        .find(|m| sides_of(&m["sides"]) == [3, 25, 26])
        .ok_or("no (3,25,26)")?;
    let small = members
        .iter()
        .find(|m| sides_of(&m["sides"]) == [9, 12, 15])
        .ok_or("no (9,12,15)")?;
    ensure!(
        big["area"] == 36 && small["perimeter"] == 36,
        "area(3,25,26) != p(9,12,15)"
    );
    ensure!(
        big["perimeter"] == 54 && small["area"] == 54,
        "p(3,25,26) != area(9,12,15)"
    );
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    Ok(())
}

fn ac3_survivor_set() -> Check {
    let got = survivor_xyz(&PipelineConfig::default());
    ensure!(
        got == vec![[1, 2, 3], [1, 2, 24], [1, 2, 864], [1, 4, 4]],
        "survivors {got:?}"
    );
    let sides: BTreeSet<[u64; 3]> = got
        .iter()
        .map(|t| xyz_to_sides(xyz(t[0], t[1], t[2])).as_array())
        .collect();
    let want: BTreeSet<[u64; 3]> = [[3, 4, 5], [3, 25, 26], [3, 865, 866], [5, 5, 8]].into();
    ensure!(sides == want, "sides {sides:?}");
    Ok(())
}

fn ac4_worked_example_counts() -> Check {
    let sharpened: Vec<u64> = divisors(Nat::new(16 * 125))
        .unwrap()
        .iter()
        .map(|d| d.to_u64().unwrap())
        .filter(|&d| d >= 4)
        .collect();
    ensure!(sharpened.len() == 18, "{} divisors >= 4", sharpened.len());
    let square: Vec<u64> = sharpened
        .iter()
        .copied()
        .filter(|&z| is_perfect_square(area_squared(xyz(1, 4, z)).unwrap()))
        .collect();
    ensure!(square == vec![4], "integer-area z values {square:?}");

    // the generator's superset for this sub-case agrees
    let records = generate_candidates().unwrap();
    let generated: BTreeSet<u64> = records
        .iter()
        .filter(|c| c.xyz.x() == 1 && c.xyz.y() == 4)
        .map(|c| c.xyz.z())
        .collect();
    ensure!(
        sharpened.iter().all(|z| generated.contains(z)),
        "sharpened set not generated"
    );
    let gen_square: Vec<u64> = records
        .iter()
        .filter(|c| c.xyz.x() == 1 && c.xyz.y() == 4 && c.passed_square_area)
        .map(|c| c.xyz.z())
        .collect();
    ensure!(
        gen_square == vec![4],
        "generator integer-area z values {gen_square:?}"
    );
    Ok(())
}

fn ac5_partner_eliminations() -> Check {
    let records = generate_candidates().unwrap();
    let record = |t: XyzTriple| records.iter().find(|c| c.xyz == t).unwrap();

    // (a) (5, 5, 8)
    let a = partner_enumerate(6, 18).unwrap();
    ensure!(a.examined == 3 && a.partners.is_empty(), "s=6: {a:?}");
    let v = eliminate_candidate(record(xyz(1, 4, 4))).unwrap();
    ensure!(
        v.method == EliminationMethod::Enumeration
            && v.examined == Some(3)
            && !v.confirms_partner(),
        "(5,5,8) verdict {v:?}"
    );

    // (b) (3, 4, 5)
    let b = partner_enumerate(3, 6).unwrap();
    ensure!(b.partners.is_empty(), "s=3, area=6: {b:?}");
    let v = eliminate_candidate(record(xyz(1, 2, 3))).unwrap();
    ensure!(
        (v.partner_required_p, v.partner_required_area) == (6, 12) && !v.confirms_partner(),
        "(3,4,5) verdict {v:?}"
    );

    // (c) (3, 865, 866): parity shortcut and exhaustive scan must agree
    let product = xyz_from_lemma1(1224, 1734).unwrap();
    ensure!(
        product == Nat::new(4913) && product.is_odd(),
        "xyz = {product}"
    );
    let v = eliminate_candidate(record(xyz(1, 2, 864))).unwrap();
    ensure!(
        v.method == EliminationMethod::ParityShortcut
            && v.partner_xyz_product == Some(Nat::new(4913)),
        "(3,865,866) verdict {v:?}"
    );
    let semiperimeter = v.partner_required_p / 2;
    ensure!(
        semiperimeter == 612 && semiperimeter.is_multiple_of(2),
        "semiperimeter {semiperimeter}"
    );
    let start = Instant::now();
    let c = partner_enumerate(612, 1734).unwrap();
    let elapsed = start.elapsed();
    ensure!(
        c.partners.is_empty(),
        "exhaustive scan found {:?}",
        c.partners
    );
    ensure!(elapsed < Duration::from_secs(30), "scan took {elapsed:?}");
    Ok(())
}

fn ac6_oracle_pipeline_cross_check() -> Check {
    for p_max in [54, 200, 2000] {
        let r = cross_check(SearchBound::new(p_max).unwrap()).unwrap();
        ensure!(
            r.oracle_set == r.pipeline_set,
            "p_max {p_max}: oracle {:?} vs pipeline {:?}",
            r.oracle_set,
            r.pipeline_set
        );
        ensure!(r.agrees(), "p_max {p_max}: amicable pairs disagree");
    }
    Ok(())
}

fn ac7_parametrization_round_trip() -> Check {
    let mut rng = StdRng::seed_from_u64(0x4845_524f);
    for _ in 0..10_000 {
        let t = xyz(
            rng.gen_range(1..1_000_000),
            rng.gen_range(1..1_000_000),
            rng.gen_range(1..1_000_000),
        );
        let back = sides_to_xyz(xyz_to_sides(t)).map_err(|e| e.to_string())?;
        ensure!(back == t, "{t} -> {back}");
    }
    let all = enumerate_heron(SearchBound::new(500).unwrap()).unwrap();
    ensure!(!all.is_empty(), "no Heron triangles up to 500");
    for h in &all {
        let [a, b, c] = h.sides().as_array().map(u128::from);
        let p = a + b + c;
        let side_form = p * (p - 2 * a) * (p - 2 * b) * (p - 2 * c);
        let t = sides_to_xyz(h.sides()).map_err(|e| e.to_string())?;
        ensure!(
            16 * area_squared(t).unwrap().get() == side_form,
            "mismatch for {h}"
        );
    }
    Ok(())
}

fn ac8_even_perimeter() -> Check {
    let odd = find_odd_perimeter_heron(SearchBound::new(1000).unwrap()).unwrap();
    ensure!(odd.is_empty(), "odd-perimeter Heron triangles: {odd:?}");
    Ok(())
}

fn ac9_end_to_end_and_mutations() -> Check {
    let (code, out, _) = bin(&["verify-theorem", "--format", "json"]);
    ensure!(code == 0, "exit code {code}");
    let report: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure!(
        report["status"] == "verified",
        "status {}",
        report["status"]
    );
    let conclusion: BTreeSet<[u64; 3]> = [
        sides_of(&report["conclusion"]["first"]["sides"]),
        sides_of(&report["conclusion"]["second"]["sides"]),
    ]
    .into();
    ensure!(
        conclusion == [[3, 25, 26], [9, 12, 15]].into(),
        "conclusion {conclusion:?}"
    );
    ensure!(
        report["scope"]
            .as_str()
            .is_some_and(|s| s.contains("no perimeter bound")),
        "report lacks the bounded-vs-proof statement"
    );

    let baseline = survivor_xyz(&PipelineConfig::default());
    for (flag, config) in [
        (
            "lemma2-non-strict",
            PipelineConfig {
                lemma2: Lemma2Comparison::NonStrict,
                ..PipelineConfig::default()
            },
        ),
        (
            "no-z-ge-y",
            PipelineConfig {
                require_z_ge_y: false,
                ..PipelineConfig::default()
            },
        ),
    ] {
        let (code, _, _) = bin(&["verify-theorem", "--mutate", flag]);
        let mutated = survivor_xyz(&config);
        ensure!(
            code == 1 || mutated != baseline,
            "mutation {flag} went unnoticed (exit {code})"
        );
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("AC1 equable census (p_max 200)", ac1_equable_census),
        (
            "AC2 unique amicable pair (p_max 2000)",
            ac2_unique_pair_to_2000,
        ),
        ("AC3 pipeline survivor set", ac3_survivor_set),
        (
            "AC4 worked example x=1, y=4 counts",
            ac4_worked_example_counts,
        ),
        ("AC5 partner eliminations", ac5_partner_eliminations),
        (
            "AC6 oracle-pipeline cross-check",
            ac6_oracle_pipeline_cross_check,
        ),
        (
            "AC7 parametrization round trip",
            ac7_parametrization_round_trip,
        ),
        (
            "AC8 even-perimeter property (p_max 1000)",
            ac8_even_perimeter,
        ),
        (
            "AC9 end-to-end verify-theorem and mutations",
            ac9_end_to_end_and_mutations,
        ),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS  {name}  ({:.2?})", start.elapsed()),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
