// Running `catcom` in-process and reading its structured report.

use catcom::cli::{parse_structured, run};

pub fn run_example() {
    let file = concat!(env!("CARGO_MANIFEST_DIR"), "/data/latt.alg");
    let mut out = Vec::new();
    let code =
        run(["catcom", "commute", file, "--ops", "and,or", "--format", "structured"], &mut out, &mut std::io::sink());
    let report = parse_structured(&String::from_utf8(out).unwrap());
    for (k, v) in &report {
        if k.starts_with("witness") || k == "verdict" {
            println!("{k}: {v}");
        }
    }
    assert_eq!(code, 1);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
