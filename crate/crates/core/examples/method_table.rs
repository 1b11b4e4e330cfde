//! Sizes of a twelve-array fixture under each method combination and tie
//! strategy, printed as a table.

use compactor::model::{Method, TieStrategy};
use compactor::parse_spec;
use compactor::report::{compact_and_emit, strategy_name};

fn main() {
    let base = parse_spec(include_str!("../fixtures/example_a.json")).expect("fixture parses");
    let runs: &[(&str, &[Method])] = &[
        ("remove sub-arrays", &[Method::RemoveSubarrays]),
        ("+ greedy", &[Method::RemoveSubarrays, Method::Greedy]),
        (
            "+ greedy + reverse",
            &[Method::RemoveSubarrays, Method::Greedy, Method::Reverse],
        ),
    ];

    println!(
        "{:<20} {:<7} {:>6} {:>7} {:>9} {:>8}",
        "methods", "ties", "input", "output", "ratio %", "net"
    );
    for (label, methods) in runs {
        for strategy in [TieStrategy::First, TieStrategy::Last, TieStrategy::Random] {
            let mut spec = base.clone();
            spec.options.methods = methods.iter().copied().collect();
            spec.options.tie_strategy = strategy;
            let r = compact_and_emit(&spec, false, false)
                .expect("compaction succeeds")
                .report;
            println!(
                "{:<20} {:<7} {:>6} {:>7} {:>9.2} {:>8}",
                label,
                strategy_name(strategy),
                r.input_bytes,
                r.output_bytes,
                r.ratio_percent,
                r.net_bytes
            );
        }
    }
    println!("\nnet = output plus {}-byte pointers", base.platform.pointer_bytes);
}
