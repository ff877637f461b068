//! Parsing the text format, reporting errors with positions, and emitting the
//! sorted JSON report.
//!
//! `cargo run --example text_format`

use hopfian::format::{parse_input, ActReport, ReportDocument};
use hopfian::Decider;

const INPUT: &str = "\
# semilattice and a three-element act over it
monoid M2 2
0 1
1 1
act B over M2 3
0 1
1 1
2 1
";

fn main() -> hopfian::Result<()> {
    let doc = parse_input(INPUT)?;
    print!("round trip:\n{}", doc.to_text());

    let report = ActReport::new("B", Decider::default().classify(doc.act("B")?)?);
    let json = ReportDocument::new(INPUT.as_bytes(), vec![report], Vec::new()).to_json();
    print!("{json}");

    for bad in [
        "monoid M 2\n0 1\n1 1 1\n",
        "act A over N 1\n0\n",
        "monoid M 2\n1 0\n0 1\n",
    ] {
        println!("error: {}", parse_input(bad).unwrap_err());
    }
    Ok(())
}
