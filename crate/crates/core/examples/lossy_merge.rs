//! Lossy merging of near-identical byte tables.
//!
//! Two calibration curves that differ by at most a few counts share storage
//! once the mean difference falls under the threshold. Each merged byte is
//! the rounded average, so neither table drifts by more than half the gap.

use compactor::codegen::verify_placements;
use compactor::compact::compact_spec;
use compactor::parse_spec;
use compactor::transform::decode_row;

fn main() {
    let spec = parse_spec(include_str!("../fixtures/lossy.json")).expect("fixture parses");
    let result = compact_spec(&spec, false).expect("compaction succeeds");
    verify_placements(&result, &spec.arrays, &spec.platform).expect("rows read back");

    for m in &result.lossy_merges {
        println!(
            "merged at offset {} over {} bytes: mean distance {:.2}, largest change {}",
            m.offset, m.window, m.distance, m.max_change
        );
    }
    for (row, bytes) in &result.adjusted_rows {
        let t = spec.array(&row.array).unwrap().elem_type;
        println!("{row} now reads {:?}", decode_row(bytes, t, &spec.platform).unwrap());
    }
    println!("compacted: {:?}", result.compacted);
}
