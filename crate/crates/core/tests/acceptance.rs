//! Runs the fourteen numbered checks and prints one line per check.

use std::process::ExitCode;

use tppa_core::verify::all_criteria;

fn main() -> ExitCode {
    let checks = all_criteria();
    let mut failed = Vec::new();
    for c in &checks {
        let status = if c.ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {status}  {} ({} ms)", c.id, c.name, c.millis);
        if !c.ok {
            println!("    {}", c.detail);
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: {} of {} passed", checks.len(), checks.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
