//! Allowing rows to be stored back to front.
//!
//! A descending ramp is contained in the ascending one once reversed. Rows
//! stored reversed are read through generated `_GET` macros.

use compactor::parse_spec;
use compactor::report::compact_and_emit;

fn main() {
    let mut spec = parse_spec(include_str!("../fixtures/reverse.json")).expect("fixture parses");
    let with = compact_and_emit(&spec, false, false).expect("compaction succeeds");

    spec.options.methods.remove(&compactor::model::Method::Reverse);
    let without = compact_and_emit(&spec, false, false).expect("compaction succeeds");

    println!("forward only:  {:?}", without.result.compacted);
    println!("with reversal: {:?}\n", with.result.compacted);
    println!("{}", with.unit.source);
}
