//! Small number-theory helpers shared by the constructions.

use num_integer::Integer;

/// Inverse of `a` modulo `modulus`, if `gcd(a, modulus) = 1`.
pub fn mod_inverse(a: i64, modulus: i64) -> Option<i64> {
    if modulus <= 0 {
        return None;
    }
    let egcd = a.rem_euclid(modulus).extended_gcd(&modulus);
    if egcd.gcd != 1 {
        return None;
    }
    Some(egcd.x.rem_euclid(modulus))
}

/// `floor(log2(r))` for `r >= 1`.
pub fn floor_log2(r: usize) -> u32 {
    debug_assert!(r >= 1);
    usize::BITS - 1 - r.leading_zeros()
}

pub fn gcd(a: usize, b: usize) -> usize {
    a.gcd(&b)
}

/// Cyclic distance between two vertices of `Z_n`.
pub fn cyclic_distance(a: usize, b: usize, n: usize) -> usize {
    let diff = (a + n - b % n) % n;
    diff.min(n - diff)
}
