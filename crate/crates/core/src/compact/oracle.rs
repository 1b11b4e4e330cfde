//! Exact shortest-superstring search for small instances.
//!
//! Deliberately self-contained: it shares no code with the greedy path it
//! is used to check.

use super::CompactError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_segments: usize,
    pub max_len: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            max_segments: 6,
            max_len: 8,
        }
    }
}

fn contains(hay: &[u8], needle: &[u8]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

fn max_overlap(a: &[u8], b: &[u8]) -> usize {
    (0..=a.len().min(b.len()))
        .rev()
        .find(|&k| a[a.len() - k..] == b[..k])
        .unwrap_or(0)
}

/// A minimum-length superstring of `strings`. After dropping duplicates and
/// strings contained in others, every ordering is tried, chaining
/// neighbours at their maximal overlap; for substring-free sets some
/// ordering attains the optimum.
pub fn brute_force_superstring(strings: &[Vec<u8>], limits: OracleLimits) -> Result<Vec<u8>, CompactError> {
    if strings.len() > limits.max_segments {
        return Err(CompactError::TooLarge(format!(
            "{} segments (limit {})",
            strings.len(),
            limits.max_segments
        )));
    }
    if let Some(s) = strings.iter().find(|s| s.len() > limits.max_len) {
        return Err(CompactError::TooLarge(format!(
            "segment of {} bytes (limit {})",
            s.len(),
            limits.max_len
        )));
    }

    let mut core: Vec<&[u8]> = Vec::new();
    for (i, s) in strings.iter().enumerate() {
        let swallowed = strings
            .iter()
            .enumerate()
            .any(|(j, t)| j != i && contains(t, s) && (t.len() > s.len() || j < i));
        if !swallowed && !s.is_empty() {
            core.push(s);
        }
    }
    if core.is_empty() {
        return Ok(Vec::new());
    }

    let mut order: Vec<usize> = (0..core.len()).collect();
    let mut best: Option<Vec<u8>> = None;
    permute(&mut order, 0, &mut |perm| {
        let mut s = core[perm[0]].to_vec();
        for w in perm.windows(2) {
            let k = max_overlap(core[w[0]], core[w[1]]);
            s.extend_from_slice(&core[w[1]][k..]);
        }
        if best.as_ref().is_none_or(|b| s.len() < b.len()) {
            best = Some(s);
        }
    });
    Ok(best.expect("at least one ordering"))
}

fn permute(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}
