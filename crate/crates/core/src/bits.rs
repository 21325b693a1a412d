//! Word-level helpers for bitset rows.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn get(row: &[u64], i: usize) -> bool {
    (row[i / 64] >> (i % 64)) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], i: usize) {
    row[i / 64] &= !(1 << (i % 64));
}

/// Mask of valid bits in word `w` of a row over `n` elements.
#[inline]
pub(crate) fn valid_mask(n: usize, w: usize) -> u64 {
    let lo = w * 64;
    if n >= lo + 64 {
        u64::MAX
    } else if n <= lo {
        0
    } else {
        (1u64 << (n - lo)) - 1
    }
}

/// Mask of bits strictly above `j` within word `w`.
#[inline]
pub(crate) fn above_mask(j: usize, w: usize) -> u64 {
    let lo = w * 64;
    if j < lo {
        u64::MAX
    } else if j + 1 >= lo + 64 {
        0
    } else {
        !((1u64 << (j + 1 - lo)) - 1)
    }
}

pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        let mut word = w;
        std::iter::from_fn(move || {
            if word == 0 {
                return None;
            }
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(wi * 64 + b)
        })
    })
}

/// Iterate set bits of a single 64-bit mask.
pub(crate) fn mask_ones(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            return None;
        }
        let b = word.trailing_zeros() as usize;
        word &= word - 1;
        Some(b)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks() {
        assert_eq!(valid_mask(3, 0), 0b111);
        assert_eq!(valid_mask(64, 0), u64::MAX);
        assert_eq!(valid_mask(65, 1), 1);
        assert_eq!(above_mask(2, 0), !0b111);
        assert_eq!(above_mask(63, 0), 0);
        assert_eq!(above_mask(63, 1), u64::MAX);
        assert_eq!(above_mask(64, 1), !1);
    }

    #[test]
    fn iterate_ones() {
        let row = [0b1010u64, 1];
        assert_eq!(ones(&row).collect::<Vec<_>>(), vec![1, 3, 64]);
        assert_eq!(count(&row), 3);
    }
}
