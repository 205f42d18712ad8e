// Bounded equational reasoning: a proof certificate for the semilattice
// interchange law and a counter-model for the monoid one.

use catcom::term::{
    commutation_equation, decide_equal, generic_application, parse_presentation, DecideConfig, Verdict,
};

pub fn run_example() {
    let config = DecideConfig::new(5, 4);
    for (source, op) in [
        (include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/sl.thy")), "join"),
        (include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/monoid.thy")), "mul"),
    ] {
        let pres = parse_presentation(source).expect("bundled theory");
        let f = generic_application(op, 2);
        let goal = commutation_equation(&f, 2, &f, 2).expect("binary pair");
        match decide_equal(&pres, &goal, &config).expect("within resource ceilings") {
            Verdict::Proved(cert) => {
                assert!(cert.verify(&pres));
                println!("{}: {goal} proved in {} steps", pres.name(), cert.steps.len());
            }
            Verdict::Refuted { model, assignment } => {
                println!("{}: {goal} fails in a model of size {} at {assignment:?}", pres.name(), model.carrier());
            }
            Verdict::Unknown { depth_bound, model_bound } => {
                println!("{}: undecided at depth {depth_bound}, models up to {model_bound}", pres.name());
            }
        }
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
