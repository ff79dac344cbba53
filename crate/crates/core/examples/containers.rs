//! A finite container table, its extension, and the retains check, which
//! passes for every standard former and fails for `nbad`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vkernel::container::{
    ext_enumerate, retains_check, sample_family, FamilyAssignment, FiniteContainerTable, LabelPath, TableShape,
};
use vkernel::fincore::FinSet;
use vkernel::universe::{Former, NullarySignature, VSignature};

fn main() -> vkernel::Result<()> {
    // Lists of `a`s, one level deep: nil, or a cons with a head and a tail.
    let table = FiniteContainerTable::new(
        vec!["a".into(), "list".into()],
        vec![
            TableShape { name: "nil".into(), target: 1, positions: vec![] },
            TableShape {
                name: "cons".into(),
                target: 1,
                positions: vec![("head".into(), 0), ("tail".into(), 1)],
            },
        ],
    )?;
    let mut family = FamilyAssignment::<LabelPath>::new();
    family.set_inhabitants(0, 2, false);
    family.set_inhabitants(1, 2, false);
    for e in ext_enumerate(&table, &family, &1)? {
        println!("ext(list) element: shape {} args {:?}", table.shapes()[e.shape].name, e.args);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let indices: Vec<FinSet> = (0..=2).map(FinSet).collect();
    for former in Former::ALL {
        let sig = VSignature::new(NullarySignature::default(), [former]);
        let fam = sample_family(&sig, &indices, &mut rng)?;
        let r = retains_check(&sig, &fam)?;
        println!("{former:>6}: pairs {:>3}, violations {}", r.pairs_checked, r.violation_count);
    }

    let bad = VSignature::new(NullarySignature::default(), []).with_nbad(true);
    for _ in 0..50 {
        let fam = sample_family(&bad, &indices, &mut rng)?;
        let r = retains_check(&bad, &fam)?;
        if let Some(v) = r.violations.first() {
            println!("  nbad: {} {:?} and {} {:?} have {} paths", v.shape0, v.args0, v.shape1, v.args1, v.witnesses);
            break;
        }
    }
    Ok(())
}
