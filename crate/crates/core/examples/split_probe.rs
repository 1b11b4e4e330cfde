//! How much smaller would the data get if rows were split into halves or
//! thirds? Rotated rows share their pieces.

use compactor::compact::GreedyConfig;
use compactor::parse_spec;
use compactor::report::probe_split;
use compactor::transform::flatten;

fn main() {
    let spec = parse_spec(include_str!("../fixtures/split.json")).expect("fixture parses");
    let segments = flatten(&spec.arrays, &spec.platform);
    for parts in 2..=4 {
        let p = probe_split(&segments, parts, &GreedyConfig::default()).unwrap();
        println!(
            "{parts} parts: {} pieces, {} bytes (unsplit {})",
            p.pieces, p.split_bytes, p.unsplit_bytes
        );
    }
}
