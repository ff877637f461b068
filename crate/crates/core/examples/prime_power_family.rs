//! The products Z/p × Z/p² × ... × Z/p^N and the element x = (p, ..., p),
//! whose right-relation chain takes exactly N steps to settle.
//!
//! `cargo run --release --example prime_power_family`

use hopfian::decide::r_chain_index;
use hopfian::monoid::prime_power_product;

fn main() -> hopfian::Result<()> {
    for p in [2, 3] {
        let max_n = if p == 2 { 4 } else { 3 };
        for n in 1..=max_n {
            let (m, x) = prime_power_product(p, n)?;
            let index = r_chain_index(&m, x).expect("finite monoids stabilize");
            println!(
                "p = {p}, N = {n}: |M| = {:>4}, r-index of x = {index}",
                m.size()
            );
        }
    }
    println!("p = 4: {}", prime_power_product(4, 1).unwrap_err());
    Ok(())
}
