use crate::transform::Segment;

/// Record of one lossy merge, kept for drift accounting.
#[derive(Debug, Clone, PartialEq)]
pub struct LossyMerge {
    /// Mean absolute byte difference at the chosen alignment.
    pub distance: f64,
    /// Position of the shorter segment inside the longer one.
    pub offset: usize,
    pub window: usize,
    /// Largest |merged - contributor| over the window, for either side.
    pub max_change: u8,
    /// Largest |x - y| between the two contributors over the window.
    pub max_gap: u8,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LossyOutcome {
    pub segments: Vec<Segment>,
    pub merges: Vec<LossyMerge>,
}

/// Best alignment of `short` inside `long`: (offset, sum of |x - y|).
/// The earliest offset wins ties.
fn best_alignment(long: &[u8], short: &[u8]) -> (usize, u64) {
    (0..=long.len() - short.len())
        .map(|off| {
            let sum = long[off..off + short.len()]
                .iter()
                .zip(short)
                .map(|(&x, &y)| u64::from(x.abs_diff(y)))
                .sum::<u64>();
            (off, sum)
        })
        .min_by_key(|&(off, sum)| (sum, off))
        .expect("short fits in long")
}

fn mean_rounded(x: u8, y: u8) -> u8 {
    // Half rounds away from zero.
    (u16::from(x) + u16::from(y)).div_ceil(2) as u8
}

/// Merges similar segments: a pair qualifies when the mean absolute
/// difference at its best alignment is strictly below `threshold`. The
/// longer segment (the earlier one on equal length) hosts the merge and
/// its window becomes the rounded per-position mean. Pairs are scanned in
/// list order and the scan restarts after every merge.
///
/// Only segments for which `eligible` holds take part.
pub fn lossy_merge(segments: Vec<Segment>, threshold: f64, eligible: impl Fn(&Segment) -> bool) -> LossyOutcome {
    let mut segments = segments;
    let mut merges = Vec::new();
    'scan: loop {
        for i in 0..segments.len() {
            if !eligible(&segments[i]) {
                continue;
            }
            for j in i + 1..segments.len() {
                if !eligible(&segments[j]) {
                    continue;
                }
                let (host, guest) = if segments[i].len() >= segments[j].len() {
                    (i, j)
                } else {
                    (j, i)
                };
                let (offset, sum) = best_alignment(&segments[host].bytes, &segments[guest].bytes);
                let window = segments[guest].len();
                // Strict: a distance equal to the threshold does not merge.
                if sum as f64 >= threshold * window as f64 {
                    continue;
                }

                let guest_seg = segments.remove(guest);
                let host = if guest < host { host - 1 } else { host };
                let target = &mut segments[host];
                let mut max_change = 0;
                let mut max_gap = 0;
                for (k, &y) in guest_seg.bytes.iter().enumerate() {
                    let x = target.bytes[offset + k];
                    let m = mean_rounded(x, y);
                    max_change = max_change.max(m.abs_diff(x)).max(m.abs_diff(y));
                    max_gap = max_gap.max(x.abs_diff(y));
                    target.bytes[offset + k] = m;
                }
                target.absorb(guest_seg, offset, false);
                // Keep the merged segment at the earlier list position.
                let lo = i.min(host);
                if host != lo {
                    let merged = segments.remove(host);
                    segments.insert(lo, merged);
                }
                merges.push(LossyMerge {
                    distance: sum as f64 / window as f64,
                    offset,
                    window,
                    max_change,
                    max_gap,
                });
                continue 'scan;
            }
        }
        break;
    }
    LossyOutcome { segments, merges }
}
