//! Word-level helpers for bit-packed vertex sets.

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[inline]
pub(crate) fn test(words: &[u64], i: usize) -> bool {
    (words[i >> 6] >> (i & 63)) & 1 == 1
}

#[inline]
pub(crate) fn set(words: &mut [u64], i: usize) {
    words[i >> 6] |= 1u64 << (i & 63);
}

#[inline]
pub(crate) fn clear(words: &mut [u64], i: usize) {
    words[i >> 6] &= !(1u64 << (i & 63));
}

#[inline]
pub(crate) fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

pub(crate) fn and_assign(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
    }
}

/// Bitset with the low `bits` positions set.
pub(crate) fn full(bits: usize) -> Vec<u64> {
    let mut out = vec![u64::MAX; words_for(bits)];
    if !bits.is_multiple_of(64) {
        if let Some(last) = out.last_mut() {
            *last = (1u64 << (bits % 64)) - 1;
        }
    }
    out
}

/// Ascending iterator over set positions.
pub(crate) fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + tz)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_masks_tail_word() {
        assert_eq!(full(0), Vec::<u64>::new());
        assert_eq!(full(3), vec![0b111]);
        assert_eq!(full(64), vec![u64::MAX]);
        assert_eq!(count(&full(130)), 130);
    }

    #[test]
    fn iter_ones_is_ascending() {
        let mut w = vec![0u64; 3];
        for i in [0, 5, 63, 64, 100, 191] {
            set(&mut w, i);
        }
        assert_eq!(iter_ones(&w).collect::<Vec<_>>(), vec![0, 5, 63, 64, 100, 191]);
        clear(&mut w, 64);
        assert!(!test(&w, 64));
        assert_eq!(count(&w), 5);
    }
}
