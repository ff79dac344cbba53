//! Paths between codes of propositions match equivalences of their
//! decodings, and the universe stays a set.

use vkernel::universe::{verify_partial_univalence, verify_truncated, CodeBudget, CodeUniverse, PredicateSpec, VSignature};

fn main() -> vkernel::Result<()> {
    let sig = VSignature::standard();
    let budget = CodeBudget { max_nodes: 4, max_el: 6 };
    let cu = CodeUniverse::build(&sig, budget)?;
    println!("{} codes with at most {} nodes", cu.len(), budget.max_nodes);
    println!("{}", verify_partial_univalence(&cu, PredicateSpec::IsProp)?.summary());
    for pred in [PredicateSpec::IsProp, PredicateSpec::IsContr, PredicateSpec::None] {
        println!("{}", verify_truncated(&cu, pred)?.summary());
    }
    Ok(())
}
