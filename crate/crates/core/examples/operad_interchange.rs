// Symmetric operads: interchange of operations in Ass and Com, and the
// Boardman-Vogt tensor of unital Ass with itself.

use catcom::model::EnumConfig;
use catcom::operad::{
    bv_tensor_presentation, enumerate_operad_algebras, operad_pair_commutes, OperadPresentation, SymOperadTruncation,
};

pub fn run_example() {
    for operad in [SymOperadTruncation::ass(4), SymOperadTruncation::com(4)] {
        let mut total = 0;
        let mut commuting = 0;
        for n in 0..=2 {
            for m in 0..=2 {
                for psi in operad.elements(n) {
                    for phi in operad.elements(m) {
                        total += 1;
                        commuting += usize::from(operad_pair_commutes(&operad, psi, phi).unwrap());
                    }
                }
            }
        }
        println!("{}: {commuting} of {total} pairs up to arity 2 commute", operad.name);
    }

    let ass = OperadPresentation::ass_unital();
    let bv = bv_tensor_presentation(&ass, &ass);
    let algebras = enumerate_operad_algebras(&bv, 2, &EnumConfig::default()).unwrap();
    assert_eq!(algebras.len(), 4);
    println!("{}: {} generators, {} algebras on 2 elements", bv.name, bv.generators.len(), algebras.len());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
