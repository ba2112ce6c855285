// End-to-end: build a verified cube representation, dump it, read it back
// and check it again.
//
// cargo run --example build_and_verify

use cubicity::dump::{read_dump, render_report_human, write_dump};
use cubicity::{build_representation, gen_random_bipartite, verify, BuildParams};

fn main() {
    let g = gen_random_bipartite(10, 20, 0.3, 2024).unwrap();
    let build = build_representation(&g, &BuildParams::with_seed(1)).expect("build succeeds");
    print!("{}", render_report_human(&build.report));

    let dump = write_dump(&build.representation, Some(&build.report));
    println!("dump: {} bytes", dump.len());

    let (rep, report) = read_dump(&dump).expect("own dump parses");
    let check = verify(&rep, &g).expect("same vertex set");
    println!(
        "re-verified: {} (k = {})",
        if check.passed() { "pass" } else { "fail" },
        report.map_or(0, |r| r.k)
    );
    assert!(check.passed());

    // Too few random dimensions: the Las Vegas loop gives up and lists what survived.
    let params = BuildParams {
        max_retries: 3,
        ..BuildParams::with_seed(1).t(1)
    };
    match build_representation(&g, &params) {
        Ok(b) => println!("t = 1 happened to work, k = {}", b.report.k),
        Err(e) => println!("t = 1: {e}"),
    }
}
