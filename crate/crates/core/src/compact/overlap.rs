//! Byte-string primitives shared by the compaction stages.

/// Length of the longest suffix of `a` that is also a prefix of `b`
/// (possibly all of the shorter string). Linear time via the KMP failure
/// function of `b`.
pub fn overlap_len(a: &[u8], b: &[u8]) -> usize {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let fail = failure(b);
    let mut q = 0;
    for &x in a {
        // A full match of b that ends before the end of a is not a suffix.
        if q == b.len() {
            q = fail[q - 1];
        }
        while q > 0 && b[q] != x {
            q = fail[q - 1];
        }
        if b[q] == x {
            q += 1;
        }
    }
    q
}

fn failure(pattern: &[u8]) -> Vec<usize> {
    let mut fail = vec![0; pattern.len()];
    let mut k = 0;
    for i in 1..pattern.len() {
        while k > 0 && pattern[i] != pattern[k] {
            k = fail[k - 1];
        }
        if pattern[i] == pattern[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// First position of `needle` inside `hay`.
pub fn find(hay: &[u8], needle: &[u8]) -> Option<usize> {
    if needle.is_empty() {
        return Some(0);
    }
    if needle.len() > hay.len() {
        return None;
    }
    let first = needle[0];
    (0..=hay.len() - needle.len()).find(|&i| hay[i] == first && &hay[i..i + needle.len()] == needle)
}

pub fn reversed(bytes: &[u8]) -> Vec<u8> {
    bytes.iter().rev().copied().collect()
}
