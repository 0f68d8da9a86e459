//! Recomputes the recorded invariants of part of the catalog.
//!
//! `cargo run --release --example catalog -- table:112` restricts by filter.

use graded_poisson::catalog::{verify_all, Catalog, Status};

fn main() -> graded_poisson::Result<()> {
    let filters: Vec<String> = std::env::args().skip(1).collect();
    let filters: Vec<&str> = if filters.is_empty() { vec!["table:111"] } else { filters.iter().map(String::as_str).collect() };
    let catalog = Catalog::builtin();
    let selected = catalog.entries(&filters)?;
    let report = verify_all(&selected, Some(10));
    for e in &report.entries {
        let failed: Vec<&str> = e.failures().map(|c| c.name).collect();
        let rgt = e.check("rgt").map(|c| c.computed.as_str()).unwrap_or("?");
        let gk = e.check("gkdim").map(|c| c.computed.as_str()).unwrap_or("?");
        println!("{:<7} ({}) {:<28} {:<2} rgt {rgt:>3} GK {gk} {}", e.id, e.weights, e.omega, e.kind, if failed.is_empty() { "ok".to_string() } else { format!("FAIL {failed:?}") });
    }
    let infos = report.entries.iter().flat_map(|e| &e.checks).filter(|c| c.status == Status::Info).count();
    println!("{} passed, {} failed, {infos} informational", report.passed, report.failed);
    Ok(())
}
