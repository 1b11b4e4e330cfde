use super::overlap::{find, reversed};
use super::Orientation;
use crate::transform::Segment;

/// Drops every segment that occurs inside another one, re-attaching its
/// consumers to the container at the position found. Equal segments count
/// as contained; the earlier one survives. Survivors keep input order.
pub fn remove_subarrays(segments: Vec<Segment>, orientation: Orientation) -> Vec<Segment> {
    let mut by_len: Vec<usize> = (0..segments.len()).collect();
    // Stable, so among equal lengths the earlier segment is visited first.
    by_len.sort_by(|&a, &b| segments[b].len().cmp(&segments[a].len()));

    let mut slots: Vec<Option<Segment>> = segments.into_iter().map(Some).collect();
    let mut survivors: Vec<usize> = Vec::new();

    for i in by_len {
        let candidate = slots[i].as_ref().expect("visited once");
        // Containment in a dropped segment implies containment in that
        // segment's host, so only survivors need checking.
        let mut host = survivors
            .iter()
            .find_map(|&s| find(&slots[s].as_ref().unwrap().bytes, &candidate.bytes).map(|at| (s, at, false)));
        if host.is_none() && orientation.allows_reversal() {
            let flipped = reversed(&candidate.bytes);
            host = survivors
                .iter()
                .find_map(|&s| find(&slots[s].as_ref().unwrap().bytes, &flipped).map(|at| (s, at, true)));
        }
        match host {
            Some((s, at, flip)) => {
                let inner = slots[i].take().unwrap();
                slots[s].as_mut().unwrap().absorb(inner, at, flip);
            }
            None => survivors.push(i),
        }
    }
    slots.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::{Consumer, RowPath};
    use proptest::prelude::*;

    fn seg(name: &str, bytes: &[u8]) -> Segment {
        Segment {
            bytes: bytes.to_vec(),
            consumers: vec![Consumer {
                row: RowPath::new(name, vec![]),
                offset: 0,
                len: bytes.len(),
                reversed: false,
                width: 1,
            }],
        }
    }

    fn bytes(segs: &[Segment]) -> Vec<Vec<u8>> {
        segs.iter().map(|s| s.bytes.clone()).collect()
    }

    #[test]
    fn removes_contained_arrays() {
        let input = vec![
            seg("a", &[0, 16, 32]),
            seg("b", &[0, 16, 32, 128]),
            seg("c", &[1, 17]),
            seg("d", &[17]),
        ];
        let out = remove_subarrays(input.clone(), Orientation::Forward);
        assert_eq!(bytes(&out), vec![vec![0, 16, 32, 128], vec![1, 17]]);
        let d = out[1].consumers.iter().find(|c| c.row.array == "d").unwrap();
        assert_eq!((d.offset, d.reversed), (1, false));
        for s in &out {
            for c in &s.consumers {
                let orig = input.iter().find(|x| x.consumers[0].row == c.row).unwrap();
                assert_eq!(c.read(&s.bytes), orig.bytes);
            }
        }
    }

    #[test]
    fn single_segment_unchanged() {
        let input = vec![seg("a", &[3, 4])];
        assert_eq!(remove_subarrays(input.clone(), Orientation::Forward), input);
    }

    #[test]
    fn equal_segments_merge() {
        let out = remove_subarrays(vec![seg("a", &[5, 6]), seg("b", &[5, 6])], Orientation::Forward);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].consumers.len(), 2);
        assert_eq!(out[0].consumers[0].row.array, "a");
    }

    #[test]
    fn reversed_containment() {
        let input = vec![seg("a", &[0, 16, 32]), seg("b", &[32, 16, 0]), seg("c", &[16, 0])];
        let fwd = remove_subarrays(input.clone(), Orientation::Forward);
        assert_eq!(fwd.len(), 2);
        let out = remove_subarrays(input, Orientation::WithReversal);
        assert_eq!(bytes(&out), vec![vec![0, 16, 32]]);
        let b = out[0].consumers.iter().find(|c| c.row.array == "b").unwrap();
        assert!(b.reversed);
        assert_eq!(b.read(&out[0].bytes), vec![32, 16, 0]);
        let c = out[0].consumers.iter().find(|c| c.row.array == "c").unwrap();
        assert_eq!(c.read(&out[0].bytes), vec![16, 0]);
    }

    #[test]
    fn palindrome_needs_no_flag() {
        let out = remove_subarrays(
            vec![seg("a", &[1, 2, 1]), seg("b", &[1, 2, 1])],
            Orientation::WithReversal,
        );
        assert!(out[0].consumers.iter().all(|c| !c.reversed));
    }

    fn arb_segments() -> impl Strategy<Value = Vec<Segment>> {
        prop::collection::vec(prop::collection::vec(0u8..3, 1..6), 1..8)
            .prop_map(|v| v.iter().enumerate().map(|(i, b)| seg(&format!("s{i}"), b)).collect())
    }

    proptest! {
        #[test]
        fn idempotent_and_containment_free(input in arb_segments(), rev in any::<bool>()) {
            let o = if rev { Orientation::WithReversal } else { Orientation::Forward };
            let once = remove_subarrays(input.clone(), o);
            let twice = remove_subarrays(once.clone(), o);
            prop_assert_eq!(&once, &twice);
            for (i, a) in once.iter().enumerate() {
                for (j, b) in once.iter().enumerate() {
                    if i != j {
                        prop_assert!(find(&b.bytes, &a.bytes).is_none());
                    }
                }
                for c in &a.consumers {
                    let orig = input.iter().find(|x| x.consumers[0].row == c.row).unwrap();
                    prop_assert_eq!(c.read(&a.bytes), orig.bytes.clone());
                }
            }
        }
    }
}
