//! Acts, subacts, Rees quotients and factor acts by congruences.
//!
//! `cargo run --example acts_and_quotients`

use std::sync::Arc;

use hopfian::congruence::principal_congruence;
use hopfian::monoid::zmod_mult_monoid;
use hopfian::{Act, Monoid};

fn main() -> hopfian::Result<()> {
    let z4 = Act::regular(Arc::new(zmod_mult_monoid(4)));
    println!("regular Z/4: {:?}", z4.rows());
    println!("generated by {:?}", z4.minimal_generating_set());
    for b in z4.subacts() {
        println!("  subact {:?}", b.members());
    }

    let ideal = z4.subact_generated(&[2])?;
    let (rees, pi) = z4.rees_quotient(&ideal);
    println!(
        "Rees quotient by {:?}: {:?} via {:?}",
        ideal.members(),
        rees.rows(),
        pi.map()
    );

    let rho = principal_congruence(&z4, 2, 3);
    let (factor, pi) = z4.quotient(&rho);
    println!(
        "factor by classes {:?}: {:?} via {:?}",
        rho.classes(),
        factor.rows(),
        pi.map()
    );

    // Row a lists a·s; the identity column must be the identity.
    let m2 = Arc::new(Monoid::from_rows(&[vec![0, 1], vec![1, 1]])?);
    match Act::new(m2, &[vec![1, 1], vec![1, 1]]) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
