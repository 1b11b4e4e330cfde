//! An array that is a linear function of another is not stored at all.
//! Reads go through a macro that applies the function to the source.

use compactor::parse_spec;
use compactor::report::compact_and_emit;

fn main() {
    let spec = parse_spec(include_str!("../fixtures/mapping.json")).expect("fixture parses");
    let out = compact_and_emit(&spec, false, false).expect("compaction succeeds");
    for acc in &out.result.accessors {
        println!(
            "{} = ({}[{} + i] * {}) / {} + {}",
            acc.target_row, acc.source_row, acc.window, acc.decl.num, acc.decl.den, acc.decl.add
        );
    }
    println!("\n{}", out.unit.source);
    println!(
        "{} input bytes stored in {}",
        out.report.input_bytes, out.report.output_bytes
    );
}
