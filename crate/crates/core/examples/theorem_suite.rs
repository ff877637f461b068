//! Runs the theorem registry over a small corpus plus seeded random samples,
//! then shows a single-instance check with its log.
//!
//! `cargo run --release --example theorem_suite`

use hopfian::format::render_verdicts;
use hopfian::harness::{check_theorem, run_suite, CorpusSpec, Instance, TheoremId};
use hopfian::monoid::zmod_mult_monoid;
use hopfian::{Act, Decider};

fn main() -> hopfian::Result<()> {
    let spec = CorpusSpec {
        seed: Some(1),
        samples: 20,
        ..CorpusSpec::default()
    };
    let decider = Decider::default();
    let verdicts = run_suite(&spec, &decider)?;
    print!("{}", render_verdicts(&verdicts));

    let act = Act::regular(std::sync::Arc::new(zmod_mult_monoid(8)));
    let v = check_theorem(TheoremId::T4, &Instance::Act(act), &decider)?;
    println!("T4 on regular Z/8: passed {} {:?}", v.passed, v.log);
    Ok(())
}
