use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::overlap::{find, overlap_len, reversed};
use super::{CompactError, Orientation};
use crate::model::TieStrategy;
use crate::transform::Segment;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GreedyConfig {
    pub strategy: TieStrategy,
    /// Seeds the ChaCha8 generator used by [`TieStrategy::Random`].
    pub seed: u64,
    pub orientation: Orientation,
    /// Evaluate overlap scans on the rayon pool. Never changes the result.
    pub parallel: bool,
}

impl Default for GreedyConfig {
    fn default() -> Self {
        Self {
            strategy: TieStrategy::First,
            seed: 0,
            orientation: Orientation::Forward,
            parallel: false,
        }
    }
}

/// One merge of the greedy loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MergeStep {
    pub overlap: usize,
    /// Segments swallowed by the merged segment after the merge.
    pub absorbed: usize,
    pub bytes_before: usize,
    pub bytes_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyOutcome {
    pub merged: Segment,
    pub steps: Vec<MergeStep>,
}

/// Best way to put `b` after `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Candidate {
    overlap: usize,
    flip_a: bool,
    flip_b: bool,
}

fn best_candidate(a: &[u8], b: &[u8], orientation: Orientation) -> Candidate {
    let mut best = Candidate {
        overlap: overlap_len(a, b),
        flip_a: false,
        flip_b: false,
    };
    if orientation.allows_reversal() {
        // (rev a, rev b) is the pair (b, a) mirrored, so it is covered by
        // the opposite ordered pair.
        let rb = reversed(b);
        let ra = reversed(a);
        for (flip_a, flip_b, ov) in [(false, true, overlap_len(a, &rb)), (true, false, overlap_len(&ra, b))] {
            if ov > best.overlap {
                best = Candidate {
                    overlap: ov,
                    flip_a,
                    flip_b,
                };
            }
        }
    }
    best
}

/// Repeatedly merges the ordered pair with the largest suffix/prefix
/// overlap until one segment remains or no pair overlaps; leftovers are
/// concatenated in list order.
///
/// The merged segment takes the lower of the two list positions. Ties are
/// broken over ordered pairs `(i, j)` enumerated row-major. After each merge
/// any segment now contained in the merged one is absorbed.
pub fn greedy_compact(segments: Vec<Segment>, cfg: &GreedyConfig) -> Result<GreedyOutcome, CompactError> {
    if segments.is_empty() {
        return Err(CompactError::Empty);
    }
    let orientation = cfg.orientation;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut pieces = segments;
    let mut steps = Vec::new();

    // cand[i][j]: best way to append pieces[j] after pieces[i].
    let row = |pieces: &[Segment], i: usize| -> Vec<Candidate> {
        pieces
            .iter()
            .map(|other| best_candidate(&pieces[i].bytes, &other.bytes, orientation))
            .collect()
    };
    let mut cand: Vec<Vec<Candidate>> = if cfg.parallel {
        (0..pieces.len()).into_par_iter().map(|i| row(&pieces, i)).collect()
    } else {
        (0..pieces.len()).map(|i| row(&pieces, i)).collect()
    };

    while pieces.len() > 1 {
        let Some((i, j)) = select(&cand, cfg.strategy, &mut rng) else {
            break;
        };
        let c = cand[i][j];
        let bytes_before: usize = pieces.iter().map(Segment::len).sum();

        let (lo, hi) = (i.min(j), i.max(j));
        let b = pieces.remove(hi);
        let a = std::mem::replace(&mut pieces[lo], Segment::bare(Vec::new()));
        let (a, b) = if i < j { (a, b) } else { (b, a) };
        let a = if c.flip_a { a.reversed() } else { a };
        let b = if c.flip_b { b.reversed() } else { b };

        let shift = a.len() - c.overlap;
        let mut merged = a;
        merged.bytes.extend_from_slice(&b.bytes[c.overlap..]);
        merged.absorb(b, shift, false);
        cand.remove(hi);
        for r in cand.iter_mut() {
            r.remove(hi);
        }

        // Absorb whatever the merged segment now contains.
        let hits: Vec<(usize, (usize, bool))> = (0..pieces.len())
            .filter(|&k| k != lo)
            .filter_map(|k| containment(&merged.bytes, &pieces[k].bytes, orientation).map(|h| (k, h)))
            .collect();
        let mut inners = Vec::with_capacity(hits.len());
        for &(k, hit) in hits.iter().rev() {
            inners.push((pieces.remove(k), hit));
            cand.remove(k);
            for r in cand.iter_mut() {
                r.remove(k);
            }
        }
        for (inner, (at, flip)) in inners.into_iter().rev() {
            merged.absorb(inner, at, flip);
        }
        let absorbed = hits.len();
        let lo = lo - hits.iter().filter(|&&(k, _)| k < lo).count();
        pieces[lo] = merged;

        // Refresh the merged segment's row and column.
        let n = pieces.len();
        let refresh = |x: usize| -> (Candidate, Candidate) {
            (
                best_candidate(&pieces[lo].bytes, &pieces[x].bytes, orientation),
                best_candidate(&pieces[x].bytes, &pieces[lo].bytes, orientation),
            )
        };
        let fresh: Vec<(Candidate, Candidate)> = if cfg.parallel {
            (0..n).into_par_iter().map(refresh).collect()
        } else {
            (0..n).map(refresh).collect()
        };
        for (x, (out, inc)) in fresh.into_iter().enumerate() {
            cand[lo][x] = out;
            cand[x][lo] = inc;
        }

        let bytes_after: usize = pieces.iter().map(Segment::len).sum();
        steps.push(MergeStep {
            overlap: c.overlap,
            absorbed,
            bytes_before,
            bytes_after,
        });
    }

    let mut iter = pieces.into_iter();
    let mut merged = iter.next().expect("nonempty");
    for next in iter {
        let at = merged.len();
        merged.bytes.extend_from_slice(&next.bytes);
        merged.absorb(next, at, false);
    }
    Ok(GreedyOutcome { merged, steps })
}

fn containment(host: &[u8], inner: &[u8], orientation: Orientation) -> Option<(usize, bool)> {
    find(host, inner).map(|at| (at, false)).or_else(|| {
        if orientation.allows_reversal() {
            find(host, &reversed(inner)).map(|at| (at, true))
        } else {
            None
        }
    })
}

/// Picks the maximal-overlap ordered pair under the tie strategy, or `None`
/// when nothing overlaps.
fn select(cand: &[Vec<Candidate>], strategy: TieStrategy, rng: &mut ChaCha8Rng) -> Option<(usize, usize)> {
    let mut best = 0;
    let mut ties: Vec<(usize, usize)> = Vec::new();
    for (i, row) in cand.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if i == j || c.overlap == 0 || c.overlap < best {
                continue;
            }
            if c.overlap > best {
                best = c.overlap;
                ties.clear();
            }
            ties.push((i, j));
        }
    }
    match strategy {
        TieStrategy::First => ties.first().copied(),
        TieStrategy::Last => ties.last().copied(),
        TieStrategy::Random if ties.is_empty() => None,
        TieStrategy::Random => Some(ties[rng.gen_range(0..ties.len())]),
    }
}
