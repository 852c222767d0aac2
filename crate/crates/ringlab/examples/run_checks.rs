//! Run the full theorem-check suite over the default corpus and print the
//! outcome table (one ring at a time, so progress is visible).

use ringlab::harness::{run_suite, Bounds, DEFAULT_CORPUS};

fn main() {
    let mut all_ok = true;
    let mut total = 0u128;
    for spec in DEFAULT_CORPUS {
        let corpus = vec![spec.to_string()];
        let report = run_suite(&corpus, &[], &Bounds::default());
        for c in &report.checks {
            let s = format!("{:?}", c.status);
            if s != "Pass" {
                println!("[{s:5}] {:28} {:20} {}", c.ring, c.check, c.detail);
            }
        }
        all_ok &= report.all_passed();
        total += report.timing.total_ms;
        eprintln!("  ... {spec}: {} ms", report.timing.total_ms);
    }
    println!("total: {total} ms; all passed: {all_ok}");
    std::process::exit(if all_ok { 0 } else { 1 });
}
