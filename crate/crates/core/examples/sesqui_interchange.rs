// A sesquicategory whose interchange law fails on one pair of 2-cells,
// and the quotient where the two whiskered composites are identified.

use catcom::structcat::{interchange_sides, is_2_category, sesqui_validate, SesquiData};

pub fn run_example() {
    for identify in [false, true] {
        let s = SesquiData::free_on_two_cells(identify);
        assert!(sesqui_validate(&s).passed());
        let report = is_2_category(&s).unwrap();
        println!("{}: 2-category {}", s.name, report.holds());
        for &(alpha, beta) in &report.interchange_failures {
            let (l, r) = interchange_sides(&s, alpha, beta).unwrap();
            println!("  {} and {}: {} != {}", s.cell_name(alpha), s.cell_name(beta), s.cell_name(l), s.cell_name(r));
        }
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
