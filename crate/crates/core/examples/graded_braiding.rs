// The quantum plane over F_5 with q = 2: commuting up to the braiding
// q^(rs) is not symmetric in the two sides.

use catcom::tensor::{graded_q_cospan_commutes, GradedAlgebra};

pub fn run_example() {
    let plane = GradedAlgebra::quantum_plane(5, 2, 2).expect("q is a unit mod 5");
    let (x, y) = (plane.element("x").unwrap(), plane.element("y").unwrap());
    println!("x*y = {}, y*x = {}", plane.render_element(&plane.mul(&x, &y)), plane.render_element(&plane.mul(&y, &x)));
    let (left, right) = graded_q_cospan_commutes(&plane, &x, &y).unwrap();
    let (left_swapped, right_swapped) = graded_q_cospan_commutes(&plane, &y, &x).unwrap();
    assert_ne!(left, right);
    assert_eq!((left, right), (right_swapped, left_swapped));
    println!("(x, y): left {left}, right {right}");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
