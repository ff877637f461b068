//! Every congruence of an act, finest first, with the lattice operations.
//!
//! `cargo run --example congruence_lattice`

use std::sync::Arc;

use hopfian::congruence::{enumerate_congruences, longest_chain};
use hopfian::decide::chain_conditions_of;
use hopfian::monoid::zmod_mult_monoid;
use hopfian::Act;

fn main() -> hopfian::Result<()> {
    let act = Act::regular(Arc::new(zmod_mult_monoid(6)));
    let lattice = enumerate_congruences(&act)?;
    println!("{} congruences on regular Z/6", lattice.len());
    for c in &lattice {
        println!("  {:?}", c.classes());
    }
    let (a, b) = (&lattice[1], &lattice[2]);
    println!("meet {:?}", a.meet(b)?.classes());
    println!("join {:?}", a.join(b)?.classes());
    println!("longest chain has {} links", longest_chain(&lattice));
    let chains = chain_conditions_of(&lattice);
    println!(
        "noetherian {}, artinian {}",
        chains.noetherian, chains.artinian
    );
    Ok(())
}
