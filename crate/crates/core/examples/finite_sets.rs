//! Finite sets, maps and bijections: the objects paths are built from.

use vkernel::fincore::{compose_bij, count_maps, enum_bijs, enum_maps, invert_bij, trunc_level, FinSet};

fn main() -> vkernel::Result<()> {
    let (two, three) = (FinSet(2), FinSet(3));
    println!("maps 2 -> 3: {} (counted {})", enum_maps(two, three)?.len(), count_maps(two, three));

    let bijs = enum_bijs(three, three)?;
    println!("bijections of 3: {}", bijs.len());
    for p in &bijs {
        let back = compose_bij(p, &invert_bij(p))?;
        println!("  {p}  inverse {}  p;p^-1 identity: {}", invert_bij(p), back.is_identity());
    }

    for n in 0..4 {
        println!("|A| = {n}: {:?}", trunc_level(FinSet(n)));
    }
    Ok(())
}
