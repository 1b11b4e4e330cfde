//! Step 3: C source generation.
//!
//! The compacted unit declares one `unsigned char` array holding every row
//! and replaces each input array by a pointer (1-D), a pointer array (2-D)
//! or per-plane pointer arrays plus a pointer-to-pointer array (3-D, planes
//! named `<name>0`, `<name>1`, ...). NULL rows and planes become NULL
//! pointer slots at the level where they occur.
//!
//! Rows stored byte-reversed cannot be read through a typed pointer. An
//! array with any reversed row is emitted as a table of `unsigned char`
//! pointers to each row's first byte in access order, a `<name>_DIR` table
//! of +1/-1 steps for multi-dimensional arrays, and a `<name>_GET(...)`
//! macro that assembles elements byte by byte. Mapped arrays likewise get a
//! `<name>_GET(i)` macro that applies the declared function.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::compact::{CompactionResult, MappingAccessor, Placement};
use crate::model::{ArraySpec, CompactionOptions, ElementType, Endianness, Node, PlatformConfig, Scalar};
use crate::transform::{decode_row, RowPath};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodegenError {
    #[error("generated name `{0}` collides with another declaration")]
    NameCollision(String),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("{row}: element {element} reads {actual}, expected {expected}")]
    Mismatch {
        row: RowPath,
        element: usize,
        expected: i64,
        actual: i64,
    },
    #[error("{row}: placement [{offset}, {end}) exceeds compacted length {len}")]
    OutOfBounds {
        row: RowPath,
        offset: usize,
        end: usize,
        len: usize,
    },
    #[error("{row}: {detail}")]
    Structure { row: RowPath, detail: String },
}

impl VerifyError {
    pub fn row(&self) -> &RowPath {
        match self {
            Self::Mismatch { row, .. } | Self::OutOfBounds { row, .. } | Self::Structure { row, .. } => row,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmitOptions {
    pub var_name: String,
    pub emit_static: bool,
    pub emit_const: bool,
    /// Emit a guarded `#define NULL 0` when NULL slots are used.
    pub null_macro: bool,
}

impl Default for EmitOptions {
    fn default() -> Self {
        Self {
            var_name: "c".into(),
            emit_static: false,
            emit_const: true,
            null_macro: true,
        }
    }
}

impl From<&CompactionOptions> for EmitOptions {
    fn from(o: &CompactionOptions) -> Self {
        Self {
            var_name: o.var_name.clone(),
            emit_static: o.emit_static,
            emit_const: o.emit_const,
            null_macro: true,
        }
    }
}

impl EmitOptions {
    fn storage(&self) -> String {
        let mut s = String::new();
        if self.emit_static {
            s.push_str("static ");
        }
        if self.emit_const {
            s.push_str("const ");
        }
        s
    }

    fn qual(&self) -> &'static str {
        if self.emit_const {
            "const "
        } else {
            ""
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmittedUnit {
    pub source: String,
    /// Pointer-sized slots declared by the unit, NULL slots included.
    pub pointer_slots: usize,
}

const RESTRICTIONS: &str = concat!(
    " * The arrays below are pointers into one shared byte array. Subscript\n",
    " * access works unchanged, but:\n",
    " *  - rows of a multi-dimensional array are not contiguous in memory;\n",
    " *    never walk one row into the next through a pointer;\n",
    " *  - do not memcpy a multi-dimensional array as a whole or across rows;\n",
    " *  - sizeof and & yield pointer properties, not array properties;\n",
    " *  - functions expecting array parameters must accept pointers.\n",
);

struct Names {
    taken: HashSet<String>,
}

impl Names {
    fn new(arrays: &[ArraySpec], scalars: &[Scalar]) -> Self {
        Self {
            taken: arrays
                .iter()
                .map(|a| a.name.clone())
                .chain(scalars.iter().map(|s| s.name.clone()))
                .collect(),
        }
    }

    fn claim(&mut self, name: String) -> Result<String, CodegenError> {
        if self.taken.insert(name.clone()) {
            Ok(name)
        } else {
            Err(CodegenError::NameCollision(name))
        }
    }
}

fn format_list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn emit_scalars(out: &mut String, scalars: &[Scalar], o: &EmitOptions) {
    for s in scalars {
        let _ = writeln!(out, "{}{} {} = {};", o.storage(), s.elem_type.c_name(), s.name, s.value);
    }
}

/// How a row's first element is reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RowRef {
    Null,
    /// Typed pointer to `c[offset]`.
    Forward(usize),
    /// Byte pointer to `c[base]`, elements advance by `dir` bytes.
    Bytes {
        base: usize,
        dir: i8,
    },
}

fn row_ref(p: Placement) -> Result<RowRef, CodegenError> {
    match p {
        Placement::Null => Ok(RowRef::Null),
        Placement::At {
            offset,
            reversed: false,
            ..
        } => Ok(RowRef::Forward(offset)),
        Placement::At {
            offset,
            len,
            reversed: true,
        } => Ok(RowRef::Bytes {
            base: offset + len - 1,
            dir: -1,
        }),
        Placement::Mapped(_) => Err(CodegenError::Internal("mapped row inside a pointer table".into())),
    }
}

/// C expression reading element `index` of type `t` through byte pointer
/// `ptr` stepping `dir` bytes per byte of the row.
fn read_bytes_expr(ptr: &str, dir: &str, index: &str, t: ElementType, p: &PlatformConfig) -> String {
    let width = t.width(p);
    let byte = |k: usize| {
        if width == 1 {
            format!("{ptr}[({dir})*({index})]")
        } else {
            format!("{ptr}[({dir})*(({index})*{width}+{k})]")
        }
    };
    if width == 1 {
        let b = byte(0);
        return match t {
            ElementType::SChar => format!("((signed char)((int){b} - (({b} & 0x80) << 1)))"),
            _ => format!("({b})"),
        };
    }
    let parts: Vec<String> = (0..width)
        .map(|k| {
            let shift = match p.endianness {
                Endianness::Little => 8 * k,
                Endianness::Big => 8 * (width - 1 - k),
            };
            if shift == 0 {
                format!("(unsigned long){}", byte(k))
            } else {
                format!("((unsigned long){} << {shift})", byte(k))
            }
        })
        .collect();
    let raw = format!("({})", parts.join(" | "));
    let mask = if width == 2 { "0xFFFFUL" } else { "0xFFFFFFFFUL" };
    let sign = if width == 2 { "0x8000UL" } else { "0x80000000UL" };
    match t {
        ElementType::UInt => format!("((unsigned int){raw})"),
        // Sign-extend without relying on out-of-range conversions.
        _ => format!("((int)(({raw} & {sign}) ? -(long)(~{raw} & {mask}) - 1 : (long){raw}))"),
    }
}

fn placements_by_row(result: &CompactionResult) -> BTreeMap<&RowPath, Placement> {
    result.placements.iter().map(|e| (&e.row, e.placement)).collect()
}

fn pointer_to(cvar: &str, r: RowRef, t: ElementType, bytes: bool, o: &EmitOptions) -> String {
    let q = o.qual();
    match r {
        RowRef::Null => "NULL".to_string(),
        RowRef::Forward(off) if !bytes => format!("({q}{}*)&{cvar}[{off}]", t.c_name()),
        RowRef::Forward(off) => format!("&{cvar}[{off}]"),
        RowRef::Bytes { base, .. } => format!("&{cvar}[{base}]"),
    }
}

fn dir_of(r: RowRef) -> i8 {
    match r {
        RowRef::Bytes { dir, .. } => dir,
        _ => 1,
    }
}

/// Emits the pointer tables for one array. Returns whether NULL was used.
#[allow(clippy::too_many_arguments)]
fn emit_array(
    out: &mut String,
    array: &ArraySpec,
    placements: &BTreeMap<&RowPath, Placement>,
    accessors: &[MappingAccessor],
    p: &PlatformConfig,
    o: &EmitOptions,
    names: &mut Names,
    slots: &mut usize,
) -> Result<bool, CodegenError> {
    let cvar = &o.var_name;
    let t = array.elem_type;
    let q = o.qual();
    let storage = if o.emit_static { "static " } else { "" };
    let placement_of = |indices: Vec<usize>| -> Result<Placement, CodegenError> {
        let row = RowPath::new(array.name.clone(), indices);
        placements
            .get(&row)
            .copied()
            .ok_or_else(|| CodegenError::Internal(format!("no placement for {row}")))
    };

    if array.dims.len() == 1 {
        let placement = placement_of(vec![])?;
        *slots += 1;
        if let Placement::Mapped(i) = placement {
            return emit_mapped(out, array, &accessors[i], placements, p, o, names).map(|_| false);
        }
        let r = row_ref(placement)?;
        if let RowRef::Bytes { dir, .. } = r {
            let _ = writeln!(
                out,
                "/* {} is stored byte-reversed; read it with {}_GET(i). */",
                array.name, array.name
            );
            let _ = writeln!(
                out,
                "{storage}{q}unsigned char *{} = {};",
                array.name,
                pointer_to(cvar, r, t, true, o)
            );
            let get = names.claim(format!("{}_GET", array.name))?;
            let _ = writeln!(
                out,
                "#define {get}(i) {}",
                read_bytes_expr(&array.name, &dir.to_string(), "i", t, p)
            );
        } else {
            let _ = writeln!(
                out,
                "{storage}{q}{} *{} = {};",
                t.c_name(),
                array.name,
                pointer_to(cvar, r, t, false, o)
            );
        }
        return Ok(false);
    }

    // Multi-dimensional: collect row references in slot order.
    let mut refs: BTreeMap<Vec<usize>, RowRef> = BTreeMap::new();
    for slot in array.slots() {
        refs.insert(slot.indices.clone(), row_ref(placement_of(slot.indices)?)?);
    }
    let bytes = refs.values().any(|r| matches!(r, RowRef::Bytes { .. }));
    let uses_null = refs.values().any(|r| *r == RowRef::Null);
    let elem = if bytes { "unsigned char" } else { t.c_name() };
    if bytes {
        let _ = writeln!(
            out,
            "/* {} has byte-reversed rows; read it with {}_GET(...). */",
            array.name, array.name
        );
    }

    let Node::Sub(outer) = &array.data else {
        return Err(CodegenError::Internal(format!("{} is not nested", array.name)));
    };
    let row_list = |prefix: &[usize], count: usize| -> Vec<String> {
        (0..count)
            .map(|i| {
                let mut idx = prefix.to_vec();
                idx.push(i);
                pointer_to(cvar, refs[&idx], t, bytes, o)
            })
            .collect()
    };
    let dir_list = |prefix: &[usize], count: usize| -> Vec<String> {
        (0..count)
            .map(|i| {
                let mut idx = prefix.to_vec();
                idx.push(i);
                dir_of(refs.get(&idx).copied().unwrap_or(RowRef::Null)).to_string()
            })
            .collect()
    };

    if array.dims.len() == 2 {
        let rows = array.dims[0];
        *slots += rows;
        let _ = writeln!(
            out,
            "{storage}{q}{elem} *{}[{rows}] = {{{}}};",
            array.name,
            row_list(&[], rows).join(",")
        );
        if bytes {
            let dir = names.claim(format!("{}_DIR", array.name))?;
            let get = names.claim(format!("{}_GET", array.name))?;
            let _ = writeln!(
                out,
                "static const signed char {dir}[{rows}] = {{{}}};",
                dir_list(&[], rows).join(",")
            );
            let _ = writeln!(
                out,
                "#define {get}(x,i) {}",
                read_bytes_expr(&format!("{}[x]", array.name), &format!("{dir}[x]"), "i", t, p)
            );
        }
        return Ok(uses_null);
    }

    let (planes, rows) = (array.dims[0], array.dims[1]);
    let mut plane_names = Vec::with_capacity(planes);
    let mut dir_planes = Vec::with_capacity(planes);
    for (x, plane) in outer.iter().enumerate() {
        if *plane == Node::Null {
            plane_names.push("NULL".to_string());
            dir_planes.push(format!("{{{}}}", vec!["0"; rows].join(",")));
            continue;
        }
        let plane_name = names.claim(format!("{}{x}", array.name))?;
        *slots += rows;
        let _ = writeln!(
            out,
            "{storage}{q}{elem} *{plane_name}[{rows}] = {{{}}};",
            row_list(&[x], rows).join(",")
        );
        dir_planes.push(format!("{{{}}}", dir_list(&[x], rows).join(",")));
        plane_names.push(plane_name);
    }
    *slots += planes;
    let _ = writeln!(
        out,
        "{storage}{q}{elem} **{}[{planes}] = {{{}}};",
        array.name,
        plane_names.join(",")
    );
    if bytes {
        let dir = names.claim(format!("{}_DIR", array.name))?;
        let get = names.claim(format!("{}_GET", array.name))?;
        let _ = writeln!(
            out,
            "static const signed char {dir}[{planes}][{rows}] = {{{}}};",
            dir_planes.join(",")
        );
        let _ = writeln!(
            out,
            "#define {get}(x,y,i) {}",
            read_bytes_expr(&format!("{}[x][y]", array.name), &format!("{dir}[x][y]"), "i", t, p)
        );
    }
    Ok(uses_null || plane_names.iter().any(|n| n == "NULL"))
}

fn emit_mapped(
    out: &mut String,
    array: &ArraySpec,
    acc: &MappingAccessor,
    placements: &BTreeMap<&RowPath, Placement>,
    p: &PlatformConfig,
    o: &EmitOptions,
    names: &mut Names,
) -> Result<(), CodegenError> {
    let cvar = &o.var_name;
    let t = array.elem_type;
    let q = o.qual();
    let storage = if o.emit_static { "static " } else { "" };
    let width = t.width(p);
    let source = placements
        .get(&acc.source_row)
        .copied()
        .ok_or_else(|| CodegenError::Internal(format!("mapping source {} unplaced", acc.source_row)))?;
    let d = &acc.decl;
    let get = names.claim(format!("{}_GET", array.name))?;
    let _ = writeln!(
        out,
        "/* {name} is derived from {src}: {name}[i] = ({src}[{w} + i] * {num}) / {den} + {add}.\n   Subscript syntax is not preserved for {name}; read it with {get}(i). */",
        name = array.name,
        src = d.source,
        w = acc.window,
        num = d.num,
        den = d.den,
        add = d.add,
    );
    let read = match row_ref(source)? {
        RowRef::Forward(off) => {
            let _ = writeln!(
                out,
                "{storage}{q}{} *{} = ({q}{}*)&{cvar}[{}];",
                t.c_name(),
                array.name,
                t.c_name(),
                off + acc.window * width
            );
            format!("{}[i]", array.name)
        }
        RowRef::Bytes { base, dir } => {
            let start = base - acc.window * width;
            let _ = writeln!(out, "{storage}{q}unsigned char *{} = &{cvar}[{start}];", array.name);
            read_bytes_expr(&array.name, &dir.to_string(), "i", t, p)
        }
        RowRef::Null => return Err(CodegenError::Internal("mapping source is NULL".into())),
    };
    let _ = writeln!(
        out,
        "#define {get}(i) (({})(((long)({read}) * {}L) / {}L + {}L))",
        t.c_name(),
        d.num,
        d.den,
        d.add
    );
    Ok(())
}

fn format_bytes(bytes: &[u8]) -> String {
    let lines: Vec<String> = bytes.chunks(20).map(format_list).collect();
    if lines.len() <= 1 {
        format!("{{{}}}", lines.join(""))
    } else {
        format!("{{\n    {}\n}}", lines.join(",\n    "))
    }
}

/// Renders the compacted translation unit.
pub fn emit_compacted(
    result: &CompactionResult,
    arrays: &[ArraySpec],
    scalars: &[Scalar],
    p: &PlatformConfig,
    o: &EmitOptions,
) -> Result<EmittedUnit, CodegenError> {
    let mut names = Names::new(arrays, scalars);
    let cvar = names.claim(o.var_name.clone())?;
    let placements = placements_by_row(result);
    for (row, pl) in &placements {
        if let Placement::At { offset, len, .. } = pl {
            if offset + len > result.compacted.len() {
                return Err(CodegenError::Internal(format!("placement of {row} out of bounds")));
            }
        }
    }

    let mut body = String::new();
    let mut slots = 0;
    let mut uses_null = false;
    for array in arrays {
        uses_null |= emit_array(
            &mut body,
            array,
            &placements,
            &result.accessors,
            p,
            o,
            &mut names,
            &mut slots,
        )?;
    }

    let mut out = String::new();
    let _ = writeln!(out, "/* Compacted read-only data.\n *");
    out.push_str(RESTRICTIONS);
    out.push_str(" */\n");
    if uses_null && o.null_macro {
        out.push_str("#ifndef NULL\n#define NULL 0\n#endif\n");
    }
    if !result.compacted.is_empty() {
        let _ = writeln!(
            out,
            "{}unsigned char {cvar}[{}] = {};",
            o.storage(),
            result.compacted.len(),
            format_bytes(&result.compacted)
        );
    }
    emit_scalars(&mut out, scalars, o);
    out.push_str(&body);
    Ok(EmittedUnit {
        source: out,
        pointer_slots: slots,
    })
}

fn initializer(node: &Node) -> String {
    match node {
        Node::Elems(v) => format!("{{{}}}", format_list(v)),
        Node::Sub(children) => format!("{{{}}}", children.iter().map(initializer).collect::<Vec<_>>().join(",")),
        Node::Null => "NULL".into(),
    }
}

/// Renders the uncompacted reference unit. Arrays containing NULL cannot be
/// plain C arrays; they are emitted as separate row arrays plus pointer
/// tables with the same access syntax as the compacted form.
pub fn emit_reference(arrays: &[ArraySpec], scalars: &[Scalar], o: &EmitOptions) -> Result<String, CodegenError> {
    let mut names = Names::new(arrays, scalars);
    let storage = o.storage();
    let q = o.qual();
    let mut out = String::from("/* Uncompacted reference data. */\n");
    let mut body = String::new();
    let mut uses_null = false;
    for a in arrays {
        let t = a.elem_type.c_name();
        if !a.has_null() {
            let dims: String = a.dims.iter().map(|d| format!("[{d}]")).collect();
            let _ = writeln!(body, "{storage}{t} {}{dims} = {};", a.name, initializer(&a.data));
            continue;
        }
        uses_null = true;
        let st = if o.emit_static { "static " } else { "" };
        let row_name = |idx: &[usize]| -> String {
            let suffix: Vec<String> = idx.iter().map(usize::to_string).collect();
            format!("{}_r{}", a.name, suffix.join("_"))
        };
        let mut row_names: BTreeMap<Vec<usize>, String> = BTreeMap::new();
        for slot in a.slots() {
            if let Some(values) = slot.row {
                let name = names.claim(row_name(&slot.indices))?;
                let _ = writeln!(
                    body,
                    "{storage}{t} {name}[{}] = {{{}}};",
                    values.len(),
                    format_list(values)
                );
                row_names.insert(slot.indices, name);
            }
        }
        let Node::Sub(outer) = &a.data else {
            return Err(CodegenError::Internal(format!("{} has NULL but no nesting", a.name)));
        };
        let entry = |idx: &[usize]| row_names.get(idx).cloned().unwrap_or_else(|| "NULL".into());
        if a.dims.len() == 2 {
            let list: Vec<String> = (0..a.dims[0]).map(|i| entry(&[i])).collect();
            let _ = writeln!(body, "{st}{q}{t} *{}[{}] = {{{}}};", a.name, a.dims[0], list.join(","));
        } else {
            let mut planes = Vec::new();
            for (x, plane) in outer.iter().enumerate() {
                if *plane == Node::Null {
                    planes.push("NULL".to_string());
                    continue;
                }
                let plane_name = names.claim(format!("{}{x}", a.name))?;
                let list: Vec<String> = (0..a.dims[1]).map(|y| entry(&[x, y])).collect();
                let _ = writeln!(
                    body,
                    "{st}{q}{t} *{plane_name}[{}] = {{{}}};",
                    a.dims[1],
                    list.join(",")
                );
                planes.push(plane_name);
            }
            let _ = writeln!(
                body,
                "{st}{q}{t} **{}[{}] = {{{}}};",
                a.name,
                a.dims[0],
                planes.join(",")
            );
        }
    }
    if uses_null && o.null_macro {
        out.push_str("#ifndef NULL\n#define NULL 0\n#endif\n");
    }
    emit_scalars(&mut out, scalars, o);
    out.push_str(&body);
    Ok(out)
}

/// Checks in memory that every row reads back correctly from the compacted
/// bytes. Lossy runs are checked against the post-merge rows; mapped rows
/// against the declared function applied to their source.
pub fn verify_placements(
    result: &CompactionResult,
    arrays: &[ArraySpec],
    p: &PlatformConfig,
) -> Result<(), VerifyError> {
    let placements = placements_by_row(result);
    let mut expected_slots = 0;
    for array in arrays {
        for slot in array.slots() {
            expected_slots += 1;
            let row = RowPath::new(array.name.clone(), slot.indices.clone());
            let placement = placements.get(&row).copied().ok_or_else(|| VerifyError::Structure {
                row: row.clone(),
                detail: "no placement".into(),
            })?;
            let Some(values) = slot.row else {
                if placement != Placement::Null {
                    return Err(VerifyError::Structure {
                        row,
                        detail: "NULL slot placed as data".into(),
                    });
                }
                continue;
            };
            let expected: Vec<i64> = match result.adjusted_rows.get(&row) {
                Some(bytes) => decode_row(bytes, array.elem_type, p).map_err(|e| VerifyError::Structure {
                    row: row.clone(),
                    detail: e.to_string(),
                })?,
                None => values.to_vec(),
            };
            let actual = match placement {
                Placement::Null => {
                    return Err(VerifyError::Structure {
                        row,
                        detail: "data row placed as NULL".into(),
                    })
                }
                Placement::At { .. } => read_placed(result, &row, placement, array.elem_type, p)?,
                Placement::Mapped(i) => {
                    let acc = result.accessors.get(i).ok_or_else(|| VerifyError::Structure {
                        row: row.clone(),
                        detail: format!("accessor {i} missing"),
                    })?;
                    let source_array = arrays.iter().find(|a| a.name == acc.source_row.array).ok_or_else(|| {
                        VerifyError::Structure {
                            row: row.clone(),
                            detail: "mapping source missing".into(),
                        }
                    })?;
                    let source_placement = placements.get(&acc.source_row).copied().unwrap_or(Placement::Null);
                    let source = read_placed(result, &acc.source_row, source_placement, source_array.elem_type, p)?;
                    source
                        .get(acc.window..acc.window + acc.len)
                        .ok_or_else(|| VerifyError::Structure {
                            row: row.clone(),
                            detail: "mapping window outside source".into(),
                        })?
                        .iter()
                        .map(|&x| acc.decl.apply(x))
                        .collect()
                }
            };
            if actual.len() != expected.len() {
                return Err(VerifyError::Structure {
                    row,
                    detail: format!("{} elements placed, {} expected", actual.len(), expected.len()),
                });
            }
            if let Some(k) = (0..expected.len()).find(|&k| actual[k] != expected[k]) {
                return Err(VerifyError::Mismatch {
                    row,
                    element: k,
                    expected: expected[k],
                    actual: actual[k],
                });
            }
        }
    }
    if expected_slots != result.placements.len() {
        return Err(VerifyError::Structure {
            row: RowPath::new("*", vec![]),
            detail: format!("{} placements for {expected_slots} slots", result.placements.len()),
        });
    }
    Ok(())
}

fn read_placed(
    result: &CompactionResult,
    row: &RowPath,
    placement: Placement,
    t: ElementType,
    p: &PlatformConfig,
) -> Result<Vec<i64>, VerifyError> {
    let Placement::At { offset, len, reversed } = placement else {
        return Err(VerifyError::Structure {
            row: row.clone(),
            detail: "expected a byte placement".into(),
        });
    };
    let end = offset + len;
    if end > result.compacted.len() {
        return Err(VerifyError::OutOfBounds {
            row: row.clone(),
            offset,
            end,
            len: result.compacted.len(),
        });
    }
    let mut bytes = result.compacted[offset..end].to_vec();
    if reversed {
        bytes.reverse();
    }
    decode_row(&bytes, t, p).map_err(|e| VerifyError::Structure {
        row: row.clone(),
        detail: e.to_string(),
    })
}
