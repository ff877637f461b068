//! The full property report for a few acts, and the chain data behind it.
//!
//! `cargo run --example classify`

use std::sync::Arc;

use hopfian::decide::Criterion;
use hopfian::format::{render_report, ActReport};
use hopfian::monoid::zmod_mult_monoid;
use hopfian::{Act, Decider, Monoid};

fn main() -> hopfian::Result<()> {
    let decider = Decider::default();
    let m2 = Arc::new(Monoid::from_rows(&[vec![0, 1], vec![1, 1]])?);
    let acts = [
        ("A2", Act::new(m2, &[vec![0, 1], vec![1, 1]])?),
        ("regular Z/4", Act::regular(Arc::new(zmod_mult_monoid(4)))),
        ("regular Z/8", Act::regular(Arc::new(zmod_mult_monoid(8)))),
    ];
    for (name, act) in &acts {
        print!(
            "{}",
            render_report(&ActReport::new(*name, decider.classify(act)?))
        );
        for criterion in Criterion::ALL {
            let v = decider.is_strongly_hopfian(act, criterion)?;
            println!(
                "  criterion {}: holds {} at n = {}",
                criterion.number(),
                v.holds,
                v.index
            );
        }
    }
    Ok(())
}
