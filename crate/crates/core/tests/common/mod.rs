#![allow(dead_code)]

use std::path::PathBuf;

use compactor::model::{
    ArraySpec, CompactionOptions, CompactionSpec, ElementType, Endianness, MappingDecl, Method, Node, PlatformConfig,
    Scalar,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub const TYPES: [ElementType; 4] = [
    ElementType::UChar,
    ElementType::SChar,
    ElementType::UInt,
    ElementType::Int,
];

/// Values drawn mostly from a small pool so rows overlap often.
fn value(rng: &mut ChaCha8Rng, t: ElementType, p: &PlatformConfig) -> i64 {
    let (lo, hi) = t.range(p);
    let pool = [0, 1, 2, 16, -1, -16, lo, hi];
    if rng.gen_bool(0.7) {
        let v = *pool.choose(rng).unwrap();
        if t.contains(v, p) {
            return v;
        }
    }
    rng.gen_range(lo..=hi)
}

fn node(rng: &mut ChaCha8Rng, t: ElementType, dims: &[usize], p: &PlatformConfig, nulls: bool) -> Node {
    if dims.len() == 1 {
        return Node::Elems((0..dims[0]).map(|_| value(rng, t, p)).collect());
    }
    Node::Sub(
        (0..dims[0])
            .map(|_| {
                if nulls && rng.gen_bool(0.15) {
                    Node::Null
                } else {
                    node(rng, t, &dims[1..], p, nulls)
                }
            })
            .collect(),
    )
}

pub struct SpecShape {
    pub max_arrays: usize,
    pub max_dims: usize,
    pub max_extent: usize,
    pub nulls: bool,
    pub mappings: bool,
}

impl Default for SpecShape {
    fn default() -> Self {
        Self {
            max_arrays: 20,
            max_dims: 3,
            max_extent: 4,
            nulls: true,
            mappings: true,
        }
    }
}

pub fn random_platform(rng: &mut ChaCha8Rng) -> PlatformConfig {
    let int_bytes = if rng.gen_bool(0.5) { 2 } else { 4 };
    let endianness = if rng.gen_bool(0.5) {
        Endianness::Little
    } else {
        Endianness::Big
    };
    PlatformConfig::new(int_bytes, endianness)
}

/// A random lossless spec. Methods are left at their defaults.
pub fn random_spec(rng: &mut ChaCha8Rng, shape: &SpecShape, platform: PlatformConfig) -> CompactionSpec {
    let p = platform;
    let n = rng.gen_range(1..=shape.max_arrays);
    let mut arrays = Vec::with_capacity(n);
    for i in 0..n {
        let t = *TYPES.choose(rng).unwrap();
        let rank = rng.gen_range(1..=shape.max_dims);
        let dims: Vec<usize> = (0..rank).map(|_| rng.gen_range(1..=shape.max_extent)).collect();
        let data = node(rng, t, &dims, &p, shape.nulls);
        arrays.push(ArraySpec {
            name: format!("a{i}x"),
            elem_type: t,
            dims,
            data,
        });
    }

    let mut mappings = Vec::new();
    if shape.mappings && rng.gen_bool(0.3) {
        let sources: Vec<usize> = (0..arrays.len())
            .filter(|&i| arrays[i].dims.len() == 1 && arrays[i].dims[0] >= 2)
            .collect();
        if let Some(&s) = sources.choose(rng) {
            let src = arrays[s].clone();
            let values = src.values_1d().unwrap();
            let window = rng.gen_range(0..values.len());
            let len = rng.gen_range(1..=values.len() - window);
            let decl = MappingDecl {
                source: src.name.clone(),
                target: format!("m{s}x"),
                num: *[1, 1, 3, -1].choose(rng).unwrap(),
                den: *[1, 2, 4].choose(rng).unwrap(),
                add: rng.gen_range(-2..=2),
            };
            let mapped: Vec<i64> = values[window..window + len].iter().map(|&x| decl.apply(x)).collect();
            if mapped.iter().all(|&v| src.elem_type.contains(v, &p)) {
                arrays.push(ArraySpec {
                    name: decl.target.clone(),
                    elem_type: src.elem_type,
                    dims: vec![len],
                    data: Node::Elems(mapped),
                });
                mappings.push(decl);
            }
        }
    }

    let scalars = if rng.gen_bool(0.2) {
        vec![Scalar {
            name: "count".into(),
            elem_type: ElementType::UChar,
            value: n as i64,
        }]
    } else {
        Vec::new()
    };

    let spec = CompactionSpec {
        platform: p,
        options: CompactionOptions::default(),
        scalars,
        arrays,
        mappings,
    };
    spec.validate().expect("generated spec is valid");
    spec
}

/// The 16 combinations of the lossless methods, indexed by bit mask.
pub fn lossless_methods(mask: usize) -> CompactionOptions {
    let all = [
        Method::Mapping,
        Method::RemoveSubarrays,
        Method::Greedy,
        Method::Reverse,
    ];
    let chosen: Vec<Method> = all
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, m)| *m)
        .collect();
    CompactionOptions::with_methods(&chosen)
}
