//! Two small arrays compacted into nine bytes.
//!
//! ```text
//! cargo run --example nutshell
//! ```

use compactor::codegen::{emit_compacted, emit_reference, EmitOptions};
use compactor::compact::{compact_spec, Placement};
use compactor::parse_spec;

fn main() {
    let spec = parse_spec(include_str!("../fixtures/nutshell.json")).expect("fixture parses");
    let result = compact_spec(&spec, false).expect("compaction succeeds");

    println!("bytes: {:?}", result.compacted);
    for entry in &result.placements {
        if let Placement::At { offset, len, .. } = entry.placement {
            println!("  {:<8} at c[{offset}], {len} bytes", entry.row.to_string());
        }
    }

    let emit = EmitOptions::from(&spec.options);
    println!("\n{}", emit_reference(&spec.arrays, &spec.scalars, &emit).unwrap());
    let unit = emit_compacted(&result, &spec.arrays, &spec.scalars, &spec.platform, &emit).unwrap();
    println!("{}", unit.source);
}
