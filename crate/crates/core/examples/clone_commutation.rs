// Clones of small algebras: which term operations commute, checked by the
// interchange law and again by the duoidal sigma/tau formula.

use catcom::clone::{
    admissible_pairs, clone_of_algebra, is_commutative_clone, op_commutes, op_commutes_duoidal, parse_algebra,
    CloneVerdict,
};

pub fn run_example() {
    for source in [
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/or.alg")),
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/latt.alg")),
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/z2.alg")),
    ] {
        let alg = parse_algebra(source).expect("bundled algebra");
        let clone = clone_of_algebra(&alg, 4).expect("small clone");
        let sizes: Vec<usize> = (0..=4).map(|n| clone.size(n)).collect();
        let pairs = admissible_pairs(&clone);
        let agree = pairs
            .iter()
            .all(|&(f, g)| op_commutes(&clone, f, g).unwrap() == op_commutes_duoidal(&clone, f, g).unwrap());
        assert!(agree);
        let verdict = match is_commutative_clone(&clone).unwrap() {
            CloneVerdict::CommutativeUpTo(n) => format!("commutative up to arity {n}"),
            CloneVerdict::NotCommutative(f, g) => {
                format!("{} and {} do not commute", clone.describe(f), clone.describe(g))
            }
        };
        println!("{}: sizes {sizes:?}, {} pairs, {verdict}", clone.name, pairs.len());
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
