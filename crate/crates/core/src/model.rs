//! Input data model and the JSON specification format.
//!
//! A specification declares the target platform, the compaction options, a
//! list of scalars (passed through verbatim), the read-only arrays and any
//! user-declared mapping functions:
//!
//! ```json
//! { "platform": {"int_bytes": 2, "endianness": "little", "pointer_bytes": 4},
//!   "options": {"methods": ["remove_subarrays", "greedy"], "tie_strategy": "first"},
//!   "scalars": [{"name": "arrayLen", "ctype": "unsigned char", "value": 2}],
//!   "arrays":  [{"name": "iA", "ctype": "int", "dims": [2, 2],
//!                "data": [[-32768, -1], [0, 32767]]}],
//!   "mappings": [] }
//! ```
//!
//! `null` may replace any sub-array (a row, or a whole plane of a 3-D array),
//! never a single element.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{owner}: unknown type name `{name}`")]
    UnknownType { owner: String, name: String },
    #[error("array `{array}`: dimension/data mismatch: {detail}")]
    Shape { array: String, detail: String },
    #[error("array `{array}`: NULL at element level (at {path:?})")]
    NullElement { array: String, path: Vec<usize> },
    #[error("{owner}: value out of range: {value} does not fit `{ctype}`")]
    OutOfRange {
        owner: String,
        value: i64,
        ctype: &'static str,
    },
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("`{0}` is not a valid C identifier")]
    InvalidIdentifier(String),
    #[error("invalid platform: {0}")]
    Platform(String),
    #[error("invalid options: {0}")]
    Options(String),
    #[error("mapping {source_name} -> {target}: dangling name `{missing}`")]
    DanglingName {
        source_name: String,
        target: String,
        missing: String,
    },
    #[error("mapping {source_name} -> {target}: dimension mismatch (both arrays must be 1-D)")]
    MappingDimension { source_name: String, target: String },
    #[error("mapping {source_name} -> {target}: type mismatch")]
    MappingType { source_name: String, target: String },
    #[error("mapping {source_name} -> {target}: {detail}")]
    MappingInvalid {
        source_name: String,
        target: String,
        detail: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementType {
    UChar,
    SChar,
    UInt,
    Int,
}

impl ElementType {
    pub const ALL: [ElementType; 4] = [Self::UChar, Self::SChar, Self::UInt, Self::Int];

    pub fn from_c_name(name: &str) -> Option<Self> {
        match name.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["unsigned", "char"] => Some(Self::UChar),
            ["signed", "char"] => Some(Self::SChar),
            ["unsigned", "int"] | ["unsigned"] => Some(Self::UInt),
            ["int"] | ["signed", "int"] | ["signed"] => Some(Self::Int),
            _ => None,
        }
    }

    pub fn c_name(self) -> &'static str {
        match self {
            Self::UChar => "unsigned char",
            Self::SChar => "signed char",
            Self::UInt => "unsigned int",
            Self::Int => "int",
        }
    }

    /// Size in bytes on the given platform.
    pub fn width(self, p: &PlatformConfig) -> usize {
        match self {
            Self::UChar | Self::SChar => 1,
            Self::UInt | Self::Int => p.int_bytes as usize,
        }
    }

    pub fn is_signed(self) -> bool {
        matches!(self, Self::SChar | Self::Int)
    }

    /// Inclusive value range on the given platform (two's complement).
    pub fn range(self, p: &PlatformConfig) -> (i64, i64) {
        let bits = 8 * self.width(p) as u32;
        if self.is_signed() {
            (-(1i64 << (bits - 1)), (1i64 << (bits - 1)) - 1)
        } else {
            (0, (1i64 << bits) - 1)
        }
    }

    pub fn contains(self, value: i64, p: &PlatformConfig) -> bool {
        let (lo, hi) = self.range(p);
        (lo..=hi).contains(&value)
    }
}

impl fmt::Display for ElementType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.c_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Endianness {
    Little,
    Big,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NegativeRepr {
    #[default]
    TwosComplement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlatformConfig {
    pub int_bytes: u8,
    pub endianness: Endianness,
    #[serde(default)]
    pub negative_repr: NegativeRepr,
    /// Only used for overhead reporting.
    #[serde(default = "default_pointer_bytes")]
    pub pointer_bytes: u32,
}

fn default_pointer_bytes() -> u32 {
    4
}

impl PlatformConfig {
    pub fn new(int_bytes: u8, endianness: Endianness) -> Self {
        Self {
            int_bytes,
            endianness,
            negative_repr: NegativeRepr::TwosComplement,
            pointer_bytes: default_pointer_bytes(),
        }
    }

    pub fn validate(&self) -> Result<(), SpecError> {
        if !matches!(self.int_bytes, 2 | 4) {
            return Err(SpecError::Platform(format!(
                "int_bytes must be 2 or 4, got {}",
                self.int_bytes
            )));
        }
        if self.pointer_bytes == 0 {
            return Err(SpecError::Platform("pointer_bytes must be at least 1".into()));
        }
        Ok(())
    }
}

/// Nested array data. `Elems` is always the innermost level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Null,
    Sub(Vec<Node>),
    Elems(Vec<i64>),
}

/// One position in an array's slot walk: either a row of elements or a NULL
/// standing in for a row or a whole sub-array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slot<'a> {
    pub indices: Vec<usize>,
    pub row: Option<&'a [i64]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArraySpec {
    pub name: String,
    pub elem_type: ElementType,
    pub dims: Vec<usize>,
    pub data: Node,
}

impl ArraySpec {
    /// Rows and NULL markers in row-major order. A NULL contributes a single
    /// slot at the level where it appears, so `indices` is shorter than
    /// `dims.len() - 1` for a NULL plane.
    pub fn slots(&self) -> Vec<Slot<'_>> {
        fn walk<'a>(node: &'a Node, prefix: &mut Vec<usize>, out: &mut Vec<Slot<'a>>) {
            match node {
                Node::Null => out.push(Slot {
                    indices: prefix.clone(),
                    row: None,
                }),
                Node::Elems(values) => out.push(Slot {
                    indices: prefix.clone(),
                    row: Some(values),
                }),
                Node::Sub(children) => {
                    for (i, child) in children.iter().enumerate() {
                        prefix.push(i);
                        walk(child, prefix, out);
                        prefix.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.data, &mut Vec::new(), &mut out);
        out
    }

    pub fn row_len(&self) -> usize {
        *self.dims.last().expect("validated arrays have at least one dimension")
    }

    pub fn element_count(&self) -> usize {
        self.slots().iter().filter_map(|s| s.row).map(<[i64]>::len).sum()
    }

    pub fn byte_size(&self, p: &PlatformConfig) -> usize {
        self.element_count() * self.elem_type.width(p)
    }

    pub fn has_null(&self) -> bool {
        self.slots().iter().any(|s| s.row.is_none())
    }

    /// Values of a one-dimensional array.
    pub fn values_1d(&self) -> Option<&[i64]> {
        match &self.data {
            Node::Elems(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    pub name: String,
    pub elem_type: ElementType,
    pub value: i64,
}

/// `target[i] == (source[window + i] * num) / den + add` for some window,
/// with division truncating toward zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MappingDecl {
    pub source: String,
    pub target: String,
    pub num: i64,
    pub den: i64,
    pub add: i64,
}

impl MappingDecl {
    pub fn apply(&self, x: i64) -> i64 {
        let scaled = i128::from(x) * i128::from(self.num) / i128::from(self.den);
        (scaled + i128::from(self.add)) as i64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Mapping,
    Lossy,
    RemoveSubarrays,
    Greedy,
    Reverse,
}

impl Method {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "mapping" => Self::Mapping,
            "lossy" => Self::Lossy,
            "remove_subarrays" => Self::RemoveSubarrays,
            "greedy" => Self::Greedy,
            "reverse" => Self::Reverse,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Mapping => "mapping",
            Self::Lossy => "lossy",
            Self::RemoveSubarrays => "remove_subarrays",
            Self::Greedy => "greedy",
            Self::Reverse => "reverse",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TieStrategy {
    #[default]
    First,
    Last,
    Random,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompactionOptions {
    pub methods: BTreeSet<Method>,
    pub tie_strategy: TieStrategy,
    pub seed: Option<u64>,
    pub lossy_threshold: Option<f64>,
    pub var_name: String,
    pub emit_static: bool,
    pub emit_const: bool,
}

impl Default for CompactionOptions {
    fn default() -> Self {
        Self {
            methods: [Method::RemoveSubarrays, Method::Greedy].into_iter().collect(),
            tie_strategy: TieStrategy::First,
            seed: Some(0),
            lossy_threshold: None,
            var_name: "c".to_string(),
            emit_static: false,
            emit_const: true,
        }
    }
}

impl CompactionOptions {
    pub fn with_methods(methods: &[Method]) -> Self {
        Self {
            methods: methods.iter().copied().collect(),
            ..Self::default()
        }
    }

    pub fn has(&self, m: Method) -> bool {
        self.methods.contains(&m)
    }

    pub fn validate(&self) -> Result<(), SpecError> {
        if self.has(Method::Lossy) {
            match self.lossy_threshold {
                None => return Err(SpecError::Options("lossy requires lossy_threshold".into())),
                Some(t) if !(t >= 0.0 && t.is_finite()) => {
                    return Err(SpecError::Options(format!(
                        "lossy_threshold must be a finite non-negative number, got {t}"
                    )))
                }
                _ => {}
            }
        }
        if self.tie_strategy == TieStrategy::Random && self.seed.is_none() {
            return Err(SpecError::Options("random tie strategy requires a seed".into()));
        }
        if !is_c_identifier(&self.var_name) {
            return Err(SpecError::InvalidIdentifier(self.var_name.clone()));
        }
        Ok(())
    }
}

/// A fully parsed and validated specification.
#[derive(Debug, Clone, PartialEq)]
pub struct CompactionSpec {
    pub platform: PlatformConfig,
    pub options: CompactionOptions,
    pub scalars: Vec<Scalar>,
    pub arrays: Vec<ArraySpec>,
    pub mappings: Vec<MappingDecl>,
}

impl CompactionSpec {
    pub fn input_bytes(&self) -> usize {
        self.arrays.iter().map(|a| a.byte_size(&self.platform)).sum()
    }

    pub fn array(&self, name: &str) -> Option<&ArraySpec> {
        self.arrays.iter().find(|a| a.name == name)
    }

    pub fn validate(&self) -> Result<(), SpecError> {
        self.platform.validate()?;
        self.options.validate()?;
        let mut seen = HashSet::new();
        for name in self
            .scalars
            .iter()
            .map(|s| &s.name)
            .chain(self.arrays.iter().map(|a| &a.name))
        {
            if !is_c_identifier(name) {
                return Err(SpecError::InvalidIdentifier(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(SpecError::DuplicateName(name.clone()));
            }
        }
        for s in &self.scalars {
            if !s.elem_type.contains(s.value, &self.platform) {
                return Err(SpecError::OutOfRange {
                    owner: format!("scalar `{}`", s.name),
                    value: s.value,
                    ctype: s.elem_type.c_name(),
                });
            }
        }
        for a in &self.arrays {
            validate_array(a, &self.platform)?;
        }
        validate_mapping_decls(&self.arrays, &self.mappings)
    }

    pub fn to_json(&self) -> String {
        let raw = RawSpec::from(self);
        serde_json::to_string_pretty(&raw).expect("spec serialization cannot fail")
    }
}

pub fn is_c_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c == '_' || c.is_ascii_alphabetic())
        && chars.all(|c| c == '_' || c.is_ascii_alphanumeric())
}

fn validate_array(a: &ArraySpec, p: &PlatformConfig) -> Result<(), SpecError> {
    let shape = |detail: String| SpecError::Shape {
        array: a.name.clone(),
        detail,
    };
    if a.dims.is_empty() || a.dims.len() > 3 {
        return Err(shape(format!("{} dimensions (1 to 3 supported)", a.dims.len())));
    }
    if let Some(d) = a.dims.iter().find(|&&d| d == 0) {
        return Err(shape(format!("extent {d} is not positive")));
    }
    fn check(
        a: &ArraySpec,
        node: &Node,
        level: usize,
        path: &mut Vec<usize>,
        p: &PlatformConfig,
    ) -> Result<(), SpecError> {
        let innermost = level + 1 == a.dims.len();
        let extent = a.dims[level];
        match node {
            Node::Null if level == 0 => Err(SpecError::Shape {
                array: a.name.clone(),
                detail: "the whole array cannot be NULL".into(),
            }),
            Node::Null => Ok(()),
            Node::Elems(values) if innermost => {
                if values.len() != extent {
                    return Err(SpecError::Shape {
                        array: a.name.clone(),
                        detail: format!("row {path:?} has {} elements, expected {extent}", values.len()),
                    });
                }
                match values.iter().find(|&&v| !a.elem_type.contains(v, p)) {
                    Some(&v) => Err(SpecError::OutOfRange {
                        owner: format!("array `{}`", a.name),
                        value: v,
                        ctype: a.elem_type.c_name(),
                    }),
                    None => Ok(()),
                }
            }
            Node::Sub(children) if !innermost => {
                if children.len() != extent {
                    return Err(SpecError::Shape {
                        array: a.name.clone(),
                        detail: format!(
                            "level {level} at {path:?} has {} entries, expected {extent}",
                            children.len()
                        ),
                    });
                }
                for (i, child) in children.iter().enumerate() {
                    path.push(i);
                    check(a, child, level + 1, path, p)?;
                    path.pop();
                }
                Ok(())
            }
            _ => Err(SpecError::Shape {
                array: a.name.clone(),
                detail: format!("nesting at {path:?} does not match {} dimensions", a.dims.len()),
            }),
        }
    }
    check(a, &a.data, 0, &mut Vec::new(), p)
}

/// Checks that every mapping names existing one-dimensional arrays of the
/// same element type, and that mappings do not chain or collide.
pub fn validate_mapping_decls(arrays: &[ArraySpec], mappings: &[MappingDecl]) -> Result<(), SpecError> {
    let by_name: HashMap<&str, &ArraySpec> = arrays.iter().map(|a| (a.name.as_str(), a)).collect();
    let targets: HashSet<&str> = mappings.iter().map(|m| m.target.as_str()).collect();
    let mut seen_targets = HashSet::new();
    for m in mappings {
        let invalid = |detail: &str| SpecError::MappingInvalid {
            source_name: m.source.clone(),
            target: m.target.clone(),
            detail: detail.to_string(),
        };
        let lookup = |name: &str| {
            by_name.get(name).copied().ok_or_else(|| SpecError::DanglingName {
                source_name: m.source.clone(),
                target: m.target.clone(),
                missing: name.to_string(),
            })
        };
        let source = lookup(&m.source)?;
        let target = lookup(&m.target)?;
        if m.source == m.target {
            return Err(invalid("source and target must differ"));
        }
        if source.dims.len() != 1 || target.dims.len() != 1 {
            return Err(SpecError::MappingDimension {
                source_name: m.source.clone(),
                target: m.target.clone(),
            });
        }
        if source.elem_type != target.elem_type {
            return Err(SpecError::MappingType {
                source_name: m.source.clone(),
                target: m.target.clone(),
            });
        }
        if m.den == 0 {
            return Err(invalid("den must be nonzero"));
        }
        if targets.contains(m.source.as_str()) {
            return Err(invalid("a mapped array cannot serve as a mapping source"));
        }
        if !seen_targets.insert(m.target.as_str()) {
            return Err(invalid("target is mapped more than once"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// JSON layer
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    platform: PlatformConfig,
    #[serde(default)]
    options: RawOptions,
    #[serde(default)]
    scalars: Vec<RawScalar>,
    #[serde(default)]
    arrays: Vec<RawArray>,
    #[serde(default)]
    mappings: Vec<MappingDecl>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct RawOptions {
    methods: Vec<String>,
    tie_strategy: TieStrategy,
    seed: Option<u64>,
    lossy_threshold: Option<f64>,
    var_name: String,
    #[serde(rename = "static")]
    emit_static: bool,
    #[serde(rename = "const")]
    emit_const: bool,
}

impl Default for RawOptions {
    fn default() -> Self {
        let o = CompactionOptions::default();
        Self {
            methods: o.methods.iter().map(|m| m.as_str().to_string()).collect(),
            tie_strategy: o.tie_strategy,
            seed: o.seed,
            lossy_threshold: o.lossy_threshold,
            var_name: o.var_name,
            emit_static: o.emit_static,
            emit_const: o.emit_const,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScalar {
    name: String,
    ctype: String,
    value: i64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArray {
    name: String,
    ctype: String,
    dims: Vec<usize>,
    data: Value,
}

impl From<&CompactionSpec> for RawSpec {
    fn from(spec: &CompactionSpec) -> Self {
        let o = &spec.options;
        RawSpec {
            platform: spec.platform,
            options: RawOptions {
                methods: o.methods.iter().map(|m| m.as_str().to_string()).collect(),
                tie_strategy: o.tie_strategy,
                seed: o.seed,
                lossy_threshold: o.lossy_threshold,
                var_name: o.var_name.clone(),
                emit_static: o.emit_static,
                emit_const: o.emit_const,
            },
            scalars: spec
                .scalars
                .iter()
                .map(|s| RawScalar {
                    name: s.name.clone(),
                    ctype: s.elem_type.c_name().to_string(),
                    value: s.value,
                })
                .collect(),
            arrays: spec
                .arrays
                .iter()
                .map(|a| RawArray {
                    name: a.name.clone(),
                    ctype: a.elem_type.c_name().to_string(),
                    dims: a.dims.clone(),
                    data: node_to_value(&a.data),
                })
                .collect(),
            mappings: spec.mappings.clone(),
        }
    }
}

fn node_to_value(node: &Node) -> Value {
    match node {
        Node::Null => Value::Null,
        Node::Elems(v) => Value::Array(v.iter().map(|&x| Value::from(x)).collect()),
        Node::Sub(children) => Value::Array(children.iter().map(node_to_value).collect()),
    }
}

/// Converts JSON data into a node tree of the declared depth. Shape against
/// extents is checked later by `validate_array`.
fn value_to_node(array: &str, v: &Value, depth: usize, path: &mut Vec<usize>) -> Result<Node, SpecError> {
    let shape = |detail: String| SpecError::Shape {
        array: array.to_string(),
        detail,
    };
    match v {
        Value::Null => Ok(Node::Null),
        Value::Array(items) if depth == 1 => {
            let mut values = Vec::with_capacity(items.len());
            for (i, item) in items.iter().enumerate() {
                match item {
                    Value::Number(n) => match n.as_i64() {
                        Some(x) => values.push(x),
                        None => {
                            return Err(SpecError::OutOfRange {
                                owner: format!("array `{array}`"),
                                value: n.as_f64().map_or(i64::MAX, |f| f as i64),
                                ctype: "integer",
                            })
                        }
                    },
                    Value::Null => {
                        path.push(i);
                        return Err(SpecError::NullElement {
                            array: array.to_string(),
                            path: path.clone(),
                        });
                    }
                    other => return Err(shape(format!("expected an integer at {path:?}[{i}], found {other}"))),
                }
            }
            Ok(Node::Elems(values))
        }
        Value::Array(items) => {
            let mut children = Vec::with_capacity(items.len());
            for (i, item) in items.iter().enumerate() {
                path.push(i);
                children.push(value_to_node(array, item, depth - 1, path)?);
                path.pop();
            }
            Ok(Node::Sub(children))
        }
        other => Err(shape(format!("expected a list at {path:?}, found {other}"))),
    }
}

/// Parses and validates a JSON specification document.
pub fn parse_spec(text: &str) -> Result<CompactionSpec, SpecError> {
    let raw: RawSpec = serde_json::from_str(text).map_err(|e| SpecError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    let mut methods = BTreeSet::new();
    for m in &raw.options.methods {
        methods.insert(Method::parse(m).ok_or_else(|| SpecError::Options(format!("unknown method `{m}`")))?);
    }
    let options = CompactionOptions {
        methods,
        tie_strategy: raw.options.tie_strategy,
        seed: raw.options.seed,
        lossy_threshold: raw.options.lossy_threshold,
        var_name: raw.options.var_name,
        emit_static: raw.options.emit_static,
        emit_const: raw.options.emit_const,
    };

    let scalars = raw
        .scalars
        .into_iter()
        .map(|s| {
            let elem_type = ElementType::from_c_name(&s.ctype).ok_or_else(|| SpecError::UnknownType {
                owner: format!("scalar `{}`", s.name),
                name: s.ctype.clone(),
            })?;
            Ok(Scalar {
                name: s.name,
                elem_type,
                value: s.value,
            })
        })
        .collect::<Result<Vec<_>, SpecError>>()?;

    let arrays = raw
        .arrays
        .into_iter()
        .map(|a| {
            let elem_type = ElementType::from_c_name(&a.ctype).ok_or_else(|| SpecError::UnknownType {
                owner: format!("array `{}`", a.name),
                name: a.ctype.clone(),
            })?;
            if a.dims.is_empty() || a.dims.len() > 3 {
                return Err(SpecError::Shape {
                    array: a.name.clone(),
                    detail: format!("{} dimensions (1 to 3 supported)", a.dims.len()),
                });
            }
            let data = value_to_node(&a.name, &a.data, a.dims.len(), &mut Vec::new())?;
            Ok(ArraySpec {
                name: a.name,
                elem_type,
                dims: a.dims,
                data,
            })
        })
        .collect::<Result<Vec<_>, SpecError>>()?;

    let spec = CompactionSpec {
        platform: raw.platform,
        options,
        scalars,
        arrays,
        mappings: raw.mappings,
    };
    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wrap(arrays: &str) -> String {
        format!(r#"{{"platform": {{"int_bytes": 2, "endianness": "little"}}, "arrays": [{arrays}]}}"#)
    }

    #[test]
    fn parses_two_dimensional_int_array() {
        let spec = parse_spec(&wrap(
            r#"{"name": "iA", "ctype": "int", "dims": [2,2], "data": [[-32768,-1],[0,32767]]}"#,
        ))
        .unwrap();
        assert_eq!(spec.arrays.len(), 1);
        assert_eq!(spec.arrays[0].dims, vec![2, 2]);
        assert_eq!(spec.arrays[0].elem_type, ElementType::Int);
        assert_eq!(spec.input_bytes(), 8);
    }

    #[test]
    fn parses_minimal_spec() {
        let spec = parse_spec(&wrap(
            r#"{"name": "u", "ctype": "unsigned char", "dims": [1], "data": [0]}"#,
        ))
        .unwrap();
        assert_eq!(spec.arrays[0].dims, vec![1]);
        assert_eq!(spec.options, CompactionOptions::default());
    }

    #[test]
    fn rejects_out_of_range_value() {
        let err = parse_spec(&wrap(
            r#"{"name": "x", "ctype": "unsigned char", "dims": [2], "data": [0, 300]}"#,
        ))
        .unwrap_err();
        assert!(matches!(err, SpecError::OutOfRange { value: 300, .. }));
        assert!(err.to_string().contains("value out of range"));
        assert!(err.to_string().contains("`x`"));
    }

    #[test]
    fn int_range_follows_platform_width() {
        let arr = r#"{"name": "x", "ctype": "int", "dims": [1], "data": [40000]}"#;
        assert!(parse_spec(&wrap(arr)).is_err());
        let four = format!(r#"{{"platform": {{"int_bytes": 4, "endianness": "big"}}, "arrays": [{arr}]}}"#);
        assert!(parse_spec(&four).is_ok());
    }

    #[test]
    fn reports_syntax_position() {
        let err = parse_spec("{\n  \"platform\": ,\n}").unwrap_err();
        match err {
            SpecError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_type() {
        let err = parse_spec(&wrap(r#"{"name": "f", "ctype": "float", "dims": [1], "data": [0]}"#)).unwrap_err();
        assert!(matches!(err, SpecError::UnknownType { .. }));
    }

    #[test]
    fn rejects_shape_mismatch() {
        let err = parse_spec(&wrap(
            r#"{"name": "s", "ctype": "int", "dims": [2,2], "data": [[1,2],[3]]}"#,
        ))
        .unwrap_err();
        assert!(matches!(err, SpecError::Shape { ref array, .. } if array == "s"));
        let err = parse_spec(&wrap(
            r#"{"name": "s", "ctype": "int", "dims": [2], "data": [[1],[2]]}"#,
        ))
        .unwrap_err();
        assert!(matches!(err, SpecError::Shape { .. }));
    }

    #[test]
    fn null_rows_allowed_but_not_elements() {
        let ok = parse_spec(&wrap(
            r#"{"name": "n", "ctype": "unsigned char", "dims": [2,2,2], "data": [[null,[8,16]],null]}"#,
        ))
        .unwrap();
        let slots = ok.arrays[0].slots();
        assert_eq!(slots.len(), 3);
        assert_eq!(slots[0].indices, vec![0, 0]);
        assert!(slots[0].row.is_none());
        assert_eq!(slots[2].indices, vec![1]);

        let err = parse_spec(&wrap(
            r#"{"name": "n", "ctype": "unsigned char", "dims": [2], "data": [1, null]}"#,
        ))
        .unwrap_err();
        assert!(matches!(err, SpecError::NullElement { .. }));
        let err = parse_spec(&wrap(
            r#"{"name": "n", "ctype": "unsigned char", "dims": [2,2], "data": null}"#,
        ))
        .unwrap_err();
        assert!(matches!(err, SpecError::Shape { .. }));
    }

    #[test]
    fn rejects_duplicate_names() {
        let a = r#"{"name": "d", "ctype": "int", "dims": [1], "data": [1]}"#;
        let err = parse_spec(&wrap(&format!("{a},{a}"))).unwrap_err();
        assert_eq!(err, SpecError::DuplicateName("d".into()));
    }

    #[test]
    fn option_invariants() {
        let base = r#"{"platform": {"int_bytes": 2, "endianness": "little"}, "options": OPTS}"#;
        let lossy = base.replace("OPTS", r#"{"methods": ["lossy"]}"#);
        assert!(matches!(parse_spec(&lossy), Err(SpecError::Options(_))));
        let random = base.replace("OPTS", r#"{"tie_strategy": "random", "seed": null}"#);
        assert!(matches!(parse_spec(&random), Err(SpecError::Options(_))));
        let bad = base.replace("OPTS", r#"{"methods": ["zip"]}"#);
        assert!(matches!(parse_spec(&bad), Err(SpecError::Options(_))));
        let width = r#"{"platform": {"int_bytes": 3, "endianness": "little"}}"#;
        assert!(matches!(parse_spec(width), Err(SpecError::Platform(_))));
    }

    fn one_d(name: &str, ty: ElementType, values: Vec<i64>) -> ArraySpec {
        ArraySpec {
            name: name.into(),
            elem_type: ty,
            dims: vec![values.len()],
            data: Node::Elems(values),
        }
    }

    fn decl(source: &str, target: &str) -> MappingDecl {
        MappingDecl {
            source: source.into(),
            target: target.into(),
            num: 1,
            den: 2,
            add: 0,
        }
    }

    #[test]
    fn mapping_validation() {
        let a = one_d("a", ElementType::UChar, vec![0, 16, 32]);
        let b = one_d("b", ElementType::UChar, vec![0, 8]);
        let arrays = vec![a.clone(), b.clone()];
        assert!(validate_mapping_decls(&arrays, &[decl("a", "b")]).is_ok());

        let err = validate_mapping_decls(&arrays, &[decl("zz", "b")]).unwrap_err();
        assert!(err.to_string().contains("dangling name"));

        let two_d = ArraySpec {
            name: "m".into(),
            elem_type: ElementType::UChar,
            dims: vec![1, 2],
            data: Node::Sub(vec![Node::Elems(vec![0, 8])]),
        };
        let err = validate_mapping_decls(&[a.clone(), two_d], &[decl("a", "m")]).unwrap_err();
        assert!(err.to_string().contains("dimension mismatch"));

        let s = one_d("s", ElementType::SChar, vec![0, 8]);
        let err = validate_mapping_decls(&[a.clone(), s], &[decl("a", "s")]).unwrap_err();
        assert!(matches!(err, SpecError::MappingType { .. }));

        let mut zero = decl("a", "b");
        zero.den = 0;
        assert!(validate_mapping_decls(&arrays, &[zero]).is_err());
        assert!(validate_mapping_decls(&arrays, &[decl("a", "b"), decl("b", "a")]).is_err());
    }

    #[test]
    fn mapping_division_truncates_toward_zero() {
        let m = MappingDecl {
            source: "a".into(),
            target: "b".into(),
            num: 1,
            den: 2,
            add: 0,
        };
        assert_eq!(m.apply(-3), -1);
        assert_eq!(m.apply(3), 1);
        assert_eq!(m.apply(16), 8);
    }
}
