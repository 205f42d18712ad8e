// The funny tensor of two walking arrows has two arrows (0,0) -> (1,1)
// where the product has one.

use catcom::structcat::{funny_tensor, FiniteCategory};

pub fn run_example() {
    let arrow = FiniteCategory::walking_arrow();
    let tensor = funny_tensor(&arrow, &arrow);
    let hom = tensor.hom((0, 0), (1, 1), 8);
    for w in &hom.words {
        println!("{}", tensor.render_word(w));
    }
    let cmp = tensor.compare_with_product((0, 0), (1, 1), 8);
    assert_eq!((cmp.funny, cmp.product), (2, 1));
    let confluence = tensor.local_confluence(4);
    assert!(confluence.failure.is_none());
    println!("funny {} vs product {}; {} critical pairs joinable", cmp.funny, cmp.product, confluence.critical_pairs);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
