//! Building and validating monoid tables, products, and Z/m under multiplication.
//!
//! `cargo run --example monoids`

use hopfian::monoid::{
    direct_product, split_index, validate_monoid, zmod_mult_monoid, zmod_residue,
};
use hopfian::Monoid;

fn main() -> hopfian::Result<()> {
    // The identity may sit anywhere; validation moves it to index 0.
    let rows = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]];
    let (m, relabel) = validate_monoid(3, &rows)?;
    println!("relabeling {relabel:?} gives {:?}", m.rows());

    let broken = vec![vec![0, 1], vec![1, 0], vec![0, 0]];
    println!("bad shape: {}", validate_monoid(2, &broken).unwrap_err());

    let z6 = zmod_mult_monoid(6);
    for s in z6.elements() {
        let r = z6.right_relation(s);
        println!(
            "residue {} has {} right-relation classes, idempotent: {}",
            zmod_residue(6, s),
            r.num_classes(),
            z6.is_idempotent(s)
        );
    }

    let semilattice = Monoid::from_rows(&[vec![0, 1], vec![1, 1]])?;
    let product = direct_product(&[semilattice.clone(), zmod_mult_monoid(3)])?;
    let sizes = [semilattice.size(), 3];
    let x = 5;
    println!(
        "in the product of size {}, element {x} = {:?} squares to {:?}",
        product.size(),
        split_index(&sizes, x),
        split_index(&sizes, product.power(x, 2))
    );
    Ok(())
}
