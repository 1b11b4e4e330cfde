//! Platform encoding of typed arrays into one-dimensional byte segments.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::model::{ArraySpec, ElementType, Endianness, PlatformConfig};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("value {value} out of range for `{ctype}`")]
    OutOfRange { value: i64, ctype: &'static str },
    #[error("expected {expected} bytes for `{ctype}`, got {actual}")]
    ByteCount {
        expected: usize,
        actual: usize,
        ctype: &'static str,
    },
}

/// Addresses one slot of an array: a full row when `indices.len()` is
/// `dims.len() - 1`, or a NULL sub-array at a shallower level.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowPath {
    pub array: String,
    pub indices: Vec<usize>,
}

impl RowPath {
    pub fn new(array: impl Into<String>, indices: Vec<usize>) -> Self {
        Self {
            array: array.into(),
            indices,
        }
    }
}

impl fmt::Display for RowPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.array)?;
        for i in &self.indices {
            write!(f, "[{i}]")?;
        }
        Ok(())
    }
}

/// One row served by a segment. The row's bytes are
/// `segment.bytes[offset..offset + len]`, byte-reversed when `reversed`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Consumer {
    pub row: RowPath,
    pub offset: usize,
    pub len: usize,
    pub reversed: bool,
    /// Element width in bytes of the row's type.
    pub width: usize,
}

impl Consumer {
    /// The consumer's view after its host segment of length `host_len` is
    /// reversed.
    pub fn flipped(&self, host_len: usize) -> Consumer {
        Consumer {
            offset: host_len - self.offset - self.len,
            reversed: !self.reversed,
            ..self.clone()
        }
    }

    pub fn shifted(&self, by: usize) -> Consumer {
        Consumer {
            offset: self.offset + by,
            ..self.clone()
        }
    }

    /// Extracts this consumer's row bytes (in row order) from its host.
    pub fn read(&self, host: &[u8]) -> Vec<u8> {
        let mut bytes = host[self.offset..self.offset + self.len].to_vec();
        if self.reversed {
            bytes.reverse();
        }
        bytes
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub bytes: Vec<u8>,
    pub consumers: Vec<Consumer>,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    /// A segment from raw bytes with no consumers; handy for the pure string
    /// algorithms and tests.
    pub fn bare(bytes: Vec<u8>) -> Self {
        Self {
            bytes,
            consumers: Vec::new(),
        }
    }

    pub fn reversed(&self) -> Segment {
        let n = self.bytes.len();
        Segment {
            bytes: self.bytes.iter().rev().copied().collect(),
            consumers: self.consumers.iter().map(|c| c.flipped(n)).collect(),
        }
    }

    /// Moves all consumers of `other` into `self`, with `other` found at
    /// `at` (reversed if `flip`).
    pub fn absorb(&mut self, other: Segment, at: usize, flip: bool) {
        let n = other.len();
        for c in other.consumers {
            let c = if flip { c.flipped(n) } else { c };
            self.consumers.push(c.shifted(at));
        }
    }

    pub fn max_width(&self) -> usize {
        self.consumers.iter().map(|c| c.width).max().unwrap_or(1)
    }
}

pub fn encode_scalar(value: i64, t: ElementType, p: &PlatformConfig) -> Result<Vec<u8>, TransformError> {
    if !t.contains(value, p) {
        return Err(TransformError::OutOfRange {
            value,
            ctype: t.c_name(),
        });
    }
    let width = t.width(p);
    // Two's complement: the low `width` bytes of the 64-bit representation.
    let le = value.to_le_bytes();
    let mut bytes = le[..width].to_vec();
    if p.endianness == Endianness::Big {
        bytes.reverse();
    }
    Ok(bytes)
}

pub fn decode_scalar(bytes: &[u8], t: ElementType, p: &PlatformConfig) -> Result<i64, TransformError> {
    let width = t.width(p);
    if bytes.len() != width {
        return Err(TransformError::ByteCount {
            expected: width,
            actual: bytes.len(),
            ctype: t.c_name(),
        });
    }
    let mut raw: u64 = 0;
    for (k, &b) in bytes.iter().enumerate() {
        let shift = match p.endianness {
            Endianness::Little => 8 * k,
            Endianness::Big => 8 * (width - 1 - k),
        };
        raw |= u64::from(b) << shift;
    }
    let bits = 8 * width as u32;
    if t.is_signed() && raw >> (bits - 1) & 1 == 1 {
        Ok(raw as i64 - (1i64 << bits))
    } else {
        Ok(raw as i64)
    }
}

pub fn encode_row(values: &[i64], t: ElementType, p: &PlatformConfig) -> Result<Vec<u8>, TransformError> {
    let mut out = Vec::with_capacity(values.len() * t.width(p));
    for &v in values {
        out.extend(encode_scalar(v, t, p)?);
    }
    Ok(out)
}

pub fn decode_row(bytes: &[u8], t: ElementType, p: &PlatformConfig) -> Result<Vec<i64>, TransformError> {
    let width = t.width(p);
    if !bytes.len().is_multiple_of(width) {
        return Err(TransformError::ByteCount {
            expected: bytes.len().next_multiple_of(width),
            actual: bytes.len(),
            ctype: t.c_name(),
        });
    }
    bytes.chunks(width).map(|c| decode_scalar(c, t, p)).collect()
}

/// Decomposes every array into its rows and encodes them. Rows with
/// identical bytes share one segment; NULL slots produce nothing.
///
/// Panics if a value is out of range, which `parse_spec` rules out.
pub fn flatten(arrays: &[ArraySpec], p: &PlatformConfig) -> Vec<Segment> {
    let mut segments: Vec<Segment> = Vec::new();
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    for array in arrays {
        let width = array.elem_type.width(p);
        for slot in array.slots() {
            let Some(values) = slot.row else { continue };
            let bytes = encode_row(values, array.elem_type, p)
                .unwrap_or_else(|e| panic!("array `{}` was not validated: {e}", array.name));
            let consumer = Consumer {
                row: RowPath::new(array.name.clone(), slot.indices),
                offset: 0,
                len: bytes.len(),
                reversed: false,
                width,
            };
            match index.get(&bytes) {
                Some(&i) => segments[i].consumers.push(consumer),
                None => {
                    index.insert(bytes.clone(), segments.len());
                    segments.push(Segment {
                        bytes,
                        consumers: vec![consumer],
                    });
                }
            }
        }
    }
    segments
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Node;

    fn p(int_bytes: u8, e: Endianness) -> PlatformConfig {
        PlatformConfig::new(int_bytes, e)
    }

    #[test]
    fn encode_examples() {
        for e in [Endianness::Little, Endianness::Big] {
            assert_eq!(encode_scalar(-1, ElementType::Int, &p(2, e)).unwrap(), vec![255, 255]);
            assert_eq!(encode_scalar(0, ElementType::UChar, &p(2, e)).unwrap(), vec![0]);
        }
        let le = p(2, Endianness::Little);
        assert_eq!(encode_scalar(-32768, ElementType::Int, &le).unwrap(), vec![0, 128]);
        assert_eq!(encode_scalar(-4096, ElementType::Int, &le).unwrap(), vec![0, 240]);
        assert_eq!(encode_scalar(4, ElementType::UInt, &le).unwrap(), vec![4, 0]);
        let be = p(2, Endianness::Big);
        assert_eq!(encode_scalar(-32768, ElementType::Int, &be).unwrap(), vec![128, 0]);
        let be4 = p(4, Endianness::Big);
        assert_eq!(encode_scalar(258, ElementType::UInt, &be4).unwrap(), vec![0, 0, 1, 2]);
    }

    #[test]
    fn encode_rejects_out_of_range() {
        let le = p(2, Endianness::Little);
        assert!(encode_scalar(300, ElementType::UChar, &le).is_err());
        assert!(encode_scalar(-129, ElementType::SChar, &le).is_err());
        assert!(encode_scalar(65536, ElementType::UInt, &le).is_err());
        assert!(encode_scalar(-1, ElementType::UInt, &le).is_err());
    }

    #[test]
    fn decode_examples() {
        let le = p(2, Endianness::Little);
        assert_eq!(decode_scalar(&[255, 255], ElementType::Int, &le).unwrap(), -1);
        assert_eq!(decode_scalar(&[0, 128], ElementType::Int, &le).unwrap(), -32768);
        assert_eq!(decode_scalar(&[127], ElementType::SChar, &le).unwrap(), 127);
        assert_eq!(decode_scalar(&[255, 255], ElementType::UInt, &le).unwrap(), 65535);
        assert!(matches!(
            decode_scalar(&[1, 2, 3], ElementType::Int, &le),
            Err(TransformError::ByteCount {
                expected: 2,
                actual: 3,
                ..
            })
        ));
    }

    #[test]
    fn flatten_nutshell_int_array() {
        let ia = ArraySpec {
            name: "iA".into(),
            elem_type: ElementType::Int,
            dims: vec![2, 2],
            data: Node::Sub(vec![Node::Elems(vec![-32768, -1]), Node::Elems(vec![0, 32767])]),
        };
        let segs = flatten(&[ia], &p(2, Endianness::Little));
        assert_eq!(segs.len(), 2);
        assert_eq!(segs[0].bytes, vec![0, 128, 255, 255]);
        assert_eq!(segs[1].bytes, vec![0, 0, 255, 127]);
        assert_eq!(segs[1].consumers[0].row, RowPath::new("iA", vec![1]));
    }

    #[test]
    fn flatten_skips_null_slots() {
        let a = ArraySpec {
            name: "n".into(),
            elem_type: ElementType::UChar,
            dims: vec![2, 2, 2],
            data: Node::Sub(vec![Node::Sub(vec![Node::Null, Node::Elems(vec![8, 16])]), Node::Null]),
        };
        let segs = flatten(&[a], &p(2, Endianness::Little));
        assert_eq!(segs.len(), 1);
        assert_eq!(segs[0].bytes, vec![8, 16]);
        assert_eq!(segs[0].consumers.len(), 1);
        assert_eq!(segs[0].consumers[0].row.indices, vec![0, 1]);
    }

    #[test]
    fn flatten_shares_identical_rows() {
        let a = ArraySpec {
            name: "a".into(),
            elem_type: ElementType::UChar,
            dims: vec![2],
            data: Node::Elems(vec![2, 4]),
        };
        let b = ArraySpec {
            name: "b".into(),
            ..a.clone()
        };
        let segs = flatten(&[a, b], &p(2, Endianness::Little));
        assert_eq!(segs.len(), 1);
        assert_eq!(segs[0].consumers.len(), 2);
    }

    #[test]
    fn flip_and_read() {
        let c = Consumer {
            row: RowPath::new("x", vec![]),
            offset: 1,
            len: 2,
            reversed: false,
            width: 1,
        };
        let host = [9, 1, 2, 7];
        assert_eq!(c.read(&host), vec![1, 2]);
        let rev: Vec<u8> = host.iter().rev().copied().collect();
        assert_eq!(c.flipped(4).read(&rev), vec![1, 2]);
    }
}
