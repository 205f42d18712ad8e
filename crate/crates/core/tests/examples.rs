mod decide_equations {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/decide_equations.rs"));
}

mod clone_commutation {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/clone_commutation.rs"));
}

mod tensor_models {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tensor_models.rs"));
}

mod monoid_tensor {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/monoid_tensor.rs"));
}

mod graded_braiding {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/graded_braiding.rs"));
}

mod operad_interchange {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/operad_interchange.rs"));
}

mod funny_tensor {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/funny_tensor.rs"));
}

mod sesqui_interchange {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sesqui_interchange.rs"));
}

mod premonoidal_centre {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/premonoidal_centre.rs"));
}

mod cli_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_report.rs"));
}

#[test]
fn decide_equations_runs() {
    decide_equations::run_example();
}

#[test]
fn clone_commutation_runs() {
    clone_commutation::run_example();
}

#[test]
fn tensor_models_runs() {
    tensor_models::run_example();
}

#[test]
fn monoid_tensor_runs() {
    monoid_tensor::run_example();
}

#[test]
fn graded_braiding_runs() {
    graded_braiding::run_example();
}

#[test]
fn operad_interchange_runs() {
    operad_interchange::run_example();
}

#[test]
fn funny_tensor_runs() {
    funny_tensor::run_example();
}

#[test]
fn sesqui_interchange_runs() {
    sesqui_interchange::run_example();
}

#[test]
fn premonoidal_centre_runs() {
    premonoidal_centre::run_example();
}

#[test]
fn cli_report_runs() {
    cli_report::run_example();
}
