//! One line per acceptance criterion. Exits non-zero if any fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use adlv_core::verify::{self, CriterionReport};

struct Line {
    id: u8,
    passed: bool,
    detail: String,
}

fn timed(id: u8, limit: Option<Duration>, f: fn() -> CriterionReport) -> Line {
    let start = Instant::now();
    let r = f();
    let elapsed = start.elapsed();
    let in_time = limit.map_or(true, |l| elapsed < l);
    let mut detail = format!(
        "{}: {} checks, {} violations, {:.2?}",
        r.title, r.tally.checked, r.tally.violations, elapsed
    );
    if let Some(l) = limit {
        detail.push_str(&format!(" (limit {l:?})"));
    }
    if !r.passed {
        let stats: Vec<String> = r.tally.stats.iter().map(|(k, v)| format!("{k}={v}")).collect();
        detail.push_str(&format!("; stats {}", stats.join(" ")));
        if let Some(s) = r.tally.samples.first() {
            detail.push_str(&format!("; first: {s}"));
        }
    }
    Line {
        id,
        passed: r.passed && in_time,
        detail,
    }
}

fn run(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_adlv"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code(), out.stdout)
}

fn golden(name: &str) -> Vec<u8> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read(path).expect("golden file")
}

fn determinism() -> Line {
    let mut problems = Vec::new();
    let (c1, first) = run(&["verify-all"]);
    let (c2, second) = run(&["verify-all"]);
    if first != second || c1 != c2 {
        problems.push("verify-all output differs between runs".to_string());
    }
    if first.is_empty() || !first.ends_with(b"}\n") {
        problems.push("verify-all report is empty or unterminated".to_string());
    }
    let cases: [(&str, &[&str]); 4] = [
        ("chart_n0.json", &["chart", "--json", r#"{"n":7,"m_vec":[5],"minima":[[0,1,2,3,4,5,6]]}"#]),
        ("cells_gl7.json", &["cells", "--n", "7", "--m", "5", "--d", "1", "--mu", "1,1,1,1,1,0,0"]),
        ("cells_gl7.csv", &["cells", "--n", "7", "--m", "5", "--mu", "1,1,1,1,1,0,0", "--format", "csv"]),
        ("cells_res2_gl3.json", &["cells", "--n", "3", "--m-vec", "1,1", "--mu", "1,0,0;1,0,0"]),
    ];
    for (name, args) in cases {
        let (code, out) = run(args);
        if code != Some(0) || out != golden(name) {
            problems.push(format!("{name} does not match"));
        }
    }
    Line {
        id: 9,
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            format!(
                "verify-all byte-identical over two runs ({} bytes, exit {c1:?}); 4 golden files match",
                first.len()
            )
        } else {
            problems.join("; ")
        },
    }
}

fn main() {
    let secs = Duration::from_secs;
    let lines = vec![
        timed(1, Some(secs(1)), verify::worked_example),
        timed(2, Some(secs(60)), verify::sweep_grid),
        timed(3, Some(secs(120)), verify::cotype_grid),
        timed(4, None, verify::cells_split_example),
        timed(5, None, verify::cells_res_example),
        timed(6, None, verify::lambda_properties),
        timed(7, Some(secs(60)), verify::affine_weyl_checks),
        timed(8, None, verify::counting_checks),
        determinism(),
    ];
    for l in &lines {
        println!(
            "criterion {}: {} | {}",
            l.id,
            if l.passed { "PASS" } else { "FAIL" },
            l.detail
        );
    }
    let failed = lines.iter().filter(|l| !l.passed).count();
    println!("acceptance: {} passed, {failed} failed", lines.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
