//! Test-only oracles, independent of the library's implementation paths.

#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

/// Smallest `|src| + |tgt|` over every contiguous replacement that turns
/// `pos` into `neg`: keep `pos[..i]`, drop `pos[i..j]`, insert `neg[i..l]`,
/// keep `pos[j..]`. `None` when the sequences are equal.
///
/// For fixed `(i, j)` the kept suffix length pins `l = m - (n - j)`, so the
/// search is over `(i, j)` only.
pub fn min_replacement_cost<T: PartialEq>(pos: &[T], neg: &[T]) -> Option<usize> {
    if pos == neg {
        return None;
    }
    let (n, m) = (pos.len(), neg.len());
    let mut best: Option<usize> = None;
    for i in 0..=n.min(m) {
        if pos[..i] != neg[..i] {
            break;
        }
        for j in i..=n {
            let kept = n - j;
            if kept > m || m - kept < i {
                continue;
            }
            let l = m - kept;
            if pos[j..] == neg[l..] {
                let cost = (j - i) + (l - i);
                best = Some(best.map_or(cost, |b: usize| b.min(cost)));
            }
        }
    }
    best
}

/// Applies a replacement described by ranges, for reconstruction checks.
pub fn reconstruct<T: Clone>(
    pos: &[T],
    neg: &[T],
    src: std::ops::Range<usize>,
    tgt: std::ops::Range<usize>,
) -> Vec<T> {
    let mut out = pos[..src.start].to_vec();
    out.extend_from_slice(&neg[tgt]);
    out.extend_from_slice(&pos[src.end..]);
    out
}

/// Every sequence over `alphabet` of length `0..=max_len`.
pub fn all_sequences(alphabet: &[u8], max_len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for seq in &frontier {
            for &c in alphabet {
                let mut s: Vec<u8> = seq.clone();
                s.push(c);
                next.push(s);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
