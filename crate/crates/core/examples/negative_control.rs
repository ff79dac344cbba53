//! Letting a predicate hold on a set with automorphisms breaks truncation:
//! bool then has two distinct self-paths.

use vkernel::universe::{
    negative_control, verify_truncated, verify_truncated_forced, Code, CodeBudget, CodeUniverse, PredicateSpec,
    Universe, VSignature,
};

fn main() -> vkernel::Result<()> {
    let sig = VSignature::standard();
    let pred = PredicateSpec::SizeEq(2);
    let bool_ = Code::n("bool");
    let total = Universe::new(&sig, pred).eqv_total(&bool_, &bool_)?;
    for (p, w) in &total {
        println!("bool = bool over {p}: {w}");
    }

    let cu = CodeUniverse::build(&sig, CodeBudget { max_nodes: 3, max_el: 6 })?;
    match verify_truncated(&cu, pred) {
        Err(e) => println!("unforced: {e}"),
        Ok(r) => println!("unforced: {}", r.summary()),
    }
    let forced = verify_truncated_forced(&cu, pred)?;
    println!("{}", forced.summary());
    let search = negative_control(&cu, pred)?;
    for n in &search.notes {
        println!("  {n}");
    }
    Ok(())
}
