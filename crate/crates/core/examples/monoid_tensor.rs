// Commuting cospans of finite monoids: the product is the tensor, and
// centralizers detect which maps commute.

use catcom::tensor::{
    monoid_centralizer, monoid_cospan_commutes, monoid_tensor_universal_check, FiniteMonoid, MonoidMap,
};

pub fn run_example() {
    let (z2, z3) = (FiniteMonoid::cyclic(2), FiniteMonoid::cyclic(3));
    let report = monoid_tensor_universal_check(&z2, &z3, 4).expect("probe enumeration");
    assert!(report.passed());
    println!("Z/2 x Z/3: {} probes, {} commuting cospans, all factor uniquely", report.probes, report.cospans_tested);

    let s3 = FiniteMonoid::symmetric(3);
    let id = MonoidMap::new(&s3, &s3, (0..s3.order()).collect()).unwrap();
    println!("S3 commutes with itself: {}", monoid_cospan_commutes(&id, &id).unwrap());
    println!("centre of S3: {:?}", monoid_centralizer(&id).elements);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
