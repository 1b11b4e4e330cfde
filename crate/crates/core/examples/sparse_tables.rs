//! Sparse 3-D table: missing rows and planes become NULL pointers at the
//! highest level where they occur, and occupy no bytes.

use compactor::parse_spec;
use compactor::report::compact_and_emit;

fn main() {
    let spec = parse_spec(include_str!("../fixtures/sparse.json")).expect("fixture parses");
    let out = compact_and_emit(&spec, false, true).expect("compaction succeeds");
    println!("{}", out.reference.unwrap());
    println!("{}", out.unit.source);
    println!("{} pointer slots", out.unit.pointer_slots);
}
