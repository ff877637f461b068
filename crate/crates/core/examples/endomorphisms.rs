//! Endomorphism monoids, retracts and strong pi-regularity.
//!
//! `cargo run --example endomorphisms`

use std::sync::Arc;

use hopfian::endo::{end_monoid, is_retract_of, is_strongly_pi_regular};
use hopfian::monoid::zmod_mult_monoid;
use hopfian::Act;

fn main() -> hopfian::Result<()> {
    let z4 = Act::regular(Arc::new(zmod_mult_monoid(4)));
    let end = end_monoid(&z4)?;
    println!(
        "|End| = {}, commutative: {}",
        end.len(),
        end.is_commutative()
    );
    for (i, f) in end.elements().iter().enumerate() {
        println!("  f{i} = {:?} bijective: {}", f.map(), f.is_bijective());
    }
    println!("End as a table: {:?}", end.monoid().rows());

    let pi = is_strongly_pi_regular(&end);
    println!("strongly pi-regular: {}", pi.holds);
    for (i, w) in pi.witnesses.iter().enumerate() {
        println!("  f{i}: {w:?}");
    }

    let ideal = z4.subact_generated(&[2])?;
    let (retract, _) = z4.restrict(&ideal);
    match is_retract_of(&retract, &z4)? {
        Some(found) => println!(
            "{:?} is a retract, proper: {}",
            ideal.members(),
            found.is_proper()
        ),
        None => println!("{:?} is not a retract", ideal.members()),
    }
    Ok(())
}
