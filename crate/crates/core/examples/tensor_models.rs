// Models of the commuting tensor of two theories against commuting pairs
// of models. For monoid with monoid this is Eckmann-Hilton: every model is
// a commutative monoid.

use catcom::model::{verify_tensor_correspondence, EnumConfig};
use catcom::term::parse_presentation;

pub fn run_example() {
    let monoid = parse_presentation(include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/monoid.thy")))
        .expect("bundled theory")
        .into_arc();
    for k in 0..=2 {
        let c = verify_tensor_correspondence(&monoid, &monoid, k, &EnumConfig::default()).expect("small carrier");
        assert_eq!(c.tensor_models, c.commuting_pairs);
        println!(
            "carrier {k}: {} tensor models, {} commuting pairs out of {}x{} monoids",
            c.tensor_models, c.commuting_pairs, c.left_models, c.right_models
        );
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
