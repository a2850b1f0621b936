//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lattice_loom_cli::claims::{Registry, Status, CRITERIA};

fn main() -> ExitCode {
    let registry = Registry::standard();
    let start = Instant::now();
    let reports = registry.run("*").expect("valid glob");
    let mut failed = 0;
    println!("acceptance: {} claims in {:.2}s", reports.len(), start.elapsed().as_secs_f64());
    for (k, title, budget) in CRITERIA {
        let mine: Vec<_> = reports.iter().filter(|r| r.criterion == k).collect();
        let runtime: Duration = mine.iter().map(|r| r.runtime).sum();
        let over = runtime > Duration::from_secs(budget);
        let bad: Vec<&str> = mine.iter().filter(|r| !r.status.passed()).map(|r| r.id.as_str()).collect();
        let window = mine.iter().any(|r| r.status == Status::WindowRelative);
        let verdict = match (mine.is_empty() || !bad.is_empty() || over, window) {
            (true, _) => "FAIL",
            (false, true) => "PASS (window-relative)",
            (false, false) => "PASS",
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        let mut line = format!(
            "criterion {k:>2}: {verdict:<22} {:>3} claims {:>8.3}s / {budget}s  {title}",
            mine.len(),
            runtime.as_secs_f64()
        );
        if !bad.is_empty() {
            line.push_str(&format!("  failing: {}", bad.join(", ")));
        }
        if over {
            line.push_str("  over budget");
        }
        println!("{line}");
        for r in mine.iter().filter(|r| !r.status.passed()) {
            println!("    {}: expected {} computed {} ({})", r.id, r.expected, r.computed, r.note);
        }
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
