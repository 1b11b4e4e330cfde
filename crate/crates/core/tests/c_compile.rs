//! Compiles reference and compacted units with the system C compiler and
//! checks that both print exactly the input values. Skipped when no
//! compiler is available (`COMPACTOR_CC`, default `cc`).

mod common;

use std::fmt::Write as _;
use std::path::Path;
use std::process::Command;

use common::{fixture, lossless_methods, random_spec, SpecShape};
use compactor::compact::Placement;
use compactor::model::{Endianness, Method, PlatformConfig, TieStrategy};
use compactor::report::compact_and_emit;
use compactor::{parse_spec, CompactionResult, CompactionSpec, RowPath};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn compiler() -> Option<String> {
    let cc = std::env::var("COMPACTOR_CC").unwrap_or_else(|_| "cc".into());
    let ok = Command::new(&cc)
        .arg("--version")
        .output()
        .is_ok_and(|o| o.status.success());
    ok.then_some(cc)
}

/// Host layout: 4-byte little-endian int.
fn host_platform() -> PlatformConfig {
    PlatformConfig::new(4, Endianness::Little)
}

enum Access {
    Subscript,
    /// `<name>_GET(indices..., i)`
    Macro,
}

fn access(result: Option<&CompactionResult>, name: &str) -> Access {
    let Some(result) = result else {
        return Access::Subscript;
    };
    let special = result.placements.iter().any(|e| {
        e.row.array == name && matches!(e.placement, Placement::Mapped(_) | Placement::At { reversed: true, .. })
    });
    if special {
        Access::Macro
    } else {
        Access::Subscript
    }
}

fn subscript(indices: &[usize]) -> String {
    indices.iter().map(|i| format!("[{i}]")).collect()
}

/// A `main` printing each array on one line, `NULL` for NULL slots.
fn dump_program(spec: &CompactionSpec, result: Option<&CompactionResult>, unit_file: &str) -> String {
    let mut src = format!("#include <stdio.h>\n#include \"{unit_file}\"\nint main(void) {{\n");
    for a in &spec.arrays {
        let how = access(result, &a.name);
        let _ = writeln!(src, "    printf(\"{}:\");", a.name);
        for slot in a.slots() {
            let Some(values) = slot.row else {
                let _ = writeln!(
                    src,
                    "    printf(\" %s\", {}{} == NULL ? \"NULL\" : \"BAD\");",
                    a.name,
                    subscript(&slot.indices)
                );
                continue;
            };
            for i in 0..values.len() {
                let expr = match how {
                    Access::Subscript => {
                        let mut idx = slot.indices.clone();
                        idx.push(i);
                        format!("{}{}", a.name, subscript(&idx))
                    }
                    Access::Macro => {
                        let mut args: Vec<String> = slot.indices.iter().map(usize::to_string).collect();
                        args.push(i.to_string());
                        format!("{}_GET({})", a.name, args.join(","))
                    }
                };
                let _ = writeln!(src, "    printf(\" %ld\", (long)({expr}));");
            }
        }
        src.push_str("    printf(\"\\n\");\n");
    }
    src.push_str("    return 0;\n}\n");
    src
}

fn expected_dump(spec: &CompactionSpec) -> String {
    let mut out = String::new();
    for a in &spec.arrays {
        out.push_str(&a.name);
        out.push(':');
        for slot in a.slots() {
            match slot.row {
                None => out.push_str(" NULL"),
                Some(values) => values.iter().for_each(|v| {
                    let _ = write!(out, " {v}");
                }),
            }
        }
        out.push('\n');
    }
    out
}

fn compile_and_run(cc: &str, dir: &Path, main_name: &str, main_src: &str) -> String {
    let main_path = dir.join(main_name);
    std::fs::write(&main_path, main_src).unwrap();
    let exe = dir.join(main_name.trim_end_matches(".c"));
    let build = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Wextra", "-Werror", "-Wno-unused-variable", "-o"])
        .arg(&exe)
        .arg(&main_path)
        .current_dir(dir)
        .output()
        .unwrap();
    assert!(
        build.status.success(),
        "{main_name} failed to compile:\n{}\n{}",
        String::from_utf8_lossy(&build.stderr),
        std::fs::read_to_string(dir.join(if main_name.contains("cmp") {
            "compacted.c"
        } else {
            "reference.c"
        }))
        .unwrap_or_default()
    );
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "{main_name} exited with {}", run.status);
    String::from_utf8(run.stdout).unwrap()
}

/// Returns (reversed rows, mapped arrays) seen in the compacted unit.
fn check(cc: &str, spec: &CompactionSpec, label: &str) -> (usize, usize) {
    let dir = tempfile::tempdir().unwrap();
    let out = compact_and_emit(spec, false, true).unwrap();
    std::fs::write(dir.path().join("compacted.c"), &out.unit.source).unwrap();
    std::fs::write(dir.path().join("reference.c"), out.reference.as_deref().unwrap()).unwrap();

    let expected = expected_dump(spec);
    let reference = compile_and_run(cc, dir.path(), "main_ref.c", &dump_program(spec, None, "reference.c"));
    let compacted = compile_and_run(
        cc,
        dir.path(),
        "main_cmp.c",
        &dump_program(spec, Some(&out.result), "compacted.c"),
    );
    assert_eq!(reference, expected, "{label}: reference dump differs");
    assert_eq!(
        compacted, expected,
        "{label}: compacted dump differs\n{}",
        out.unit.source
    );
    let placements = &out.result.placements;
    (
        placements
            .iter()
            .filter(|e| matches!(e.placement, Placement::At { reversed: true, .. }))
            .count(),
        placements
            .iter()
            .filter(|e| matches!(e.placement, Placement::Mapped(_)))
            .count(),
    )
}

#[test]
fn fixtures_compile_and_match() {
    let Some(cc) = compiler() else {
        eprintln!("skipped: no C compiler");
        return;
    };
    for name in [
        "nutshell.json",
        "example_a.json",
        "sparse.json",
        "reverse.json",
        "mapping.json",
        "superstring.json",
    ] {
        let mut spec = parse_spec(&fixture(name)).unwrap();
        spec.platform = host_platform();
        spec.validate().unwrap();
        for s in [TieStrategy::First, TieStrategy::Last] {
            spec.options.tie_strategy = s;
            check(&cc, &spec, name);
        }
    }
}

#[test]
fn random_specs_compile_and_match() {
    let Some(cc) = compiler() else {
        eprintln!("skipped: no C compiler");
        return;
    };
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let (mut reversed, mut mapped) = (0, 0);
    for i in 0..50 {
        let mut spec = random_spec(&mut rng, &SpecShape::default(), host_platform());
        spec.options = lossless_methods(i % 16);
        // Favour runs with reversal and mapping so the accessor macros are exercised.
        if i % 3 == 0 {
            spec.options.methods.extend([
                Method::RemoveSubarrays,
                Method::Greedy,
                Method::Reverse,
                Method::Mapping,
            ]);
        }
        spec.options.emit_static = i % 2 == 0;
        let (r, m) = check(&cc, &spec, &format!("random #{i}"));
        reversed += r;
        mapped += m;
    }
    assert!(
        reversed > 0 && mapped > 0,
        "accessor paths not exercised: {reversed} reversed, {mapped} mapped"
    );
}

#[test]
fn rows_are_located_where_reported() {
    // Guards the dump helper itself: a reversed row must be read via macro.
    let mut spec = parse_spec(&fixture("reverse.json")).unwrap();
    spec.platform = host_platform();
    let out = compact_and_emit(&spec, false, false).unwrap();
    let reversed = out
        .result
        .placements
        .iter()
        .filter(|e| matches!(e.placement, Placement::At { reversed: true, .. }))
        .count();
    assert_eq!(reversed, 1);
    assert!(out.result.placement(&RowPath::new("rampDown", vec![])).is_some());
}
