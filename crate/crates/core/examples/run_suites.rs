//! Driving the suites as a library: the same report the binary prints.

use superpl::cli::{run, RunConfig, Suite};

fn main() {
    let cfg = RunConfig::new(1, 2, 2, vec![Suite::Baxter, Suite::Jacobi, Suite::Duality]).unwrap();
    let report = run(&cfg).unwrap();
    print!("{}", report.to_markdown());
    std::process::exit(if report.pass { 0 } else { 1 });
}
