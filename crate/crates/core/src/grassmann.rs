//! Sign bookkeeping for monomials in four odd generators.
//!
//! A monomial `ξ_I` is a bitmask with bit `i-1` set for each `i ∈ I`, read in
//! increasing index order.

pub type Mask = u8;

pub const FULL: Mask = 0b1111;

pub fn bit(i: usize) -> Mask {
    1 << (i - 1)
}

pub fn len(m: Mask) -> u32 {
    m.count_ones()
}

/// Indices in increasing order.
pub fn indices(m: Mask) -> impl Iterator<Item = usize> {
    (1..=4).filter(move |&i| m & bit(i) != 0)
}

/// `ξ_I · ξ_J = sign · ξ_{I∪J}`, or `None` when `I ∩ J ≠ ∅`.
pub fn mul(a: Mask, b: Mask) -> Option<(i64, Mask)> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0;
    for j in indices(b) {
        // each ξ_j of b passes over the elements of a with larger index
        swaps += (a >> j).count_ones();
    }
    Some((if swaps % 2 == 0 { 1 } else { -1 }, a | b))
}

/// Left derivative `∂_i ξ_I = sign · ξ_{I∖i}`, or `None` when `i ∉ I`.
pub fn deriv(i: usize, m: Mask) -> Option<(i64, Mask)> {
    if m & bit(i) == 0 {
        return None;
    }
    let before = (m & (bit(i) - 1)).count_ones();
    Some((if before % 2 == 0 { 1 } else { -1 }, m & !bit(i)))
}

pub fn fmt_indices(m: Mask) -> String {
    indices(m).map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs() {
        assert_eq!(mul(bit(2), bit(1)), Some((-1, 0b11)));
        assert_eq!(mul(bit(1), bit(2)), Some((1, 0b11)));
        assert_eq!(mul(0b11, 0b1100), Some((1, FULL)));
        assert_eq!(mul(0b1010, 0b0101), Some((-1, FULL)));
        assert_eq!(mul(bit(1), bit(1)), None);
        assert_eq!(deriv(2, 0b11), Some((-1, 0b01)));
        assert_eq!(deriv(1, FULL), Some((1, 0b1110)));
        assert_eq!(deriv(4, FULL), Some((-1, 0b0111)));
        assert_eq!(deriv(3, 0b11), None);
    }
}
