//! Codes, their decodings, and equality of codes under several predicates.

use vkernel::fincore::{Bij, FinSet};
use vkernel::universe::{el, Code, PredicateSpec, Universe, VSignature};

fn main() -> vkernel::Result<()> {
    let sig = VSignature::standard();
    let bool_ = || Code::n("bool");
    let codes = [
        Code::pi(bool_(), vec![Code::n("tri"), Code::Unit]),
        Code::sigma(bool_(), vec![Code::Unit, Code::n("bool")]),
        Code::po0(Code::Unit, bool_(), bool_(), vec![0], vec![0]),
        Code::id(Code::n("tri"), 1, 1),
    ];
    for c in &codes {
        println!("{c} decodes to {} elements", el(&sig, c)?.size());
    }

    let unit_pair = Code::sum(Code::Unit, Code::Unit);
    for pred in [PredicateSpec::None, PredicateSpec::IsProp, PredicateSpec::All] {
        let mut u = Universe::new(&sig, pred);
        println!(
            "pred {pred:>6}: bool = bool via {} path(s); unit+unit = bool: {}; (id tri 1 1) = unit: {}",
            u.eqv_count(&bool_(), &bool_())?,
            u.is_equal(&unit_pair, &bool_())?,
            u.is_equal(&codes[3], &Code::Unit)?,
        );
    }

    let mut u = Universe::new(&sig, PredicateSpec::None);
    let id = Bij::identity(FinSet(3));
    let w = u.eqv_witnesses(&id, &Code::n("tri"), &Code::n("tri"))?;
    println!("tri = tri over the identity: {:?}", w.witnesses.iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(())
}
