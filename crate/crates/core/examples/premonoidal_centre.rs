// A premonoidal category from a non-commutative monoid: its centre, the
// centre inclusion as a Freyd category, and a pair that fails to commute.

use catcom::structcat::{
    freyd_cospan_witness, freyd_validate, premonoidal_centre, premonoidal_validate, PremonoidalData,
};
use catcom::tensor::FiniteMonoid;

pub fn run_example() {
    let left_zero = FiniteMonoid::new("lz", 3, 0, vec![0, 1, 2, 1, 1, 1, 2, 2, 2]).unwrap();
    let p = PremonoidalData::pointed_monoid(&left_zero);
    let report = premonoidal_validate(&p);
    assert!(report.passed());
    let name = |f: usize| p.base().arrow_name(f).to_string();
    println!("non-central arrows: {:?}", report.non_central.iter().map(|&f| name(f)).collect::<Vec<_>>());
    let centre = premonoidal_centre(&p).unwrap();
    println!("centre: {:?}, monoidal {}", centre.arrows.iter().map(|&f| name(f)).collect::<Vec<_>>(), centre.monoidal);
    assert!(freyd_validate(&centre.data, &p, &centre.inclusion).unwrap().passed());
    let all: Vec<usize> = (0..p.base().arrow_count()).collect();
    if let Some((x, y)) = freyd_cospan_witness(&p, &all, &all) {
        println!("{} and {} do not commute", name(x), name(y));
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
