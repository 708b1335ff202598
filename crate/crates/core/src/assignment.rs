//! Fixed-length Boolean assignments.
//!
//! Variable `i` (0-based) is stored at bit `n - 1 - i`, so the derived
//! ordering of two assignments of the same dimension is the lexicographic
//! order of their bit strings with `x_1` leftmost.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Largest supported dimension.
pub const MAX_DIM: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    n: u8,
    bits: u64,
}

#[inline]
fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n > MAX_DIM {
        Err(Error::DimensionTooLarge(n))
    } else {
        Ok(())
    }
}

impl Assignment {
    /// The all-zero assignment `0^n`.
    ///
    /// Panics if `n > 64`.
    pub fn zeros(n: usize) -> Self {
        assert!(n <= MAX_DIM, "dimension {n} exceeds {MAX_DIM}");
        Self { n: n as u8, bits: 0 }
    }

    /// The all-one assignment `1^n`.
    pub fn ones(n: usize) -> Self {
        assert!(n <= MAX_DIM, "dimension {n} exceeds {MAX_DIM}");
        Self { n: n as u8, bits: mask(n) }
    }

    /// Builds an assignment from its lexicographic rank, i.e. the bit string
    /// read as a binary number with `x_1` as the most significant bit.
    pub fn from_rank(n: usize, rank: u64) -> Self {
        assert!(n <= MAX_DIM, "dimension {n} exceeds {MAX_DIM}");
        Self { n: n as u8, bits: rank & mask(n) }
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        check_dim(bits.len())?;
        let n = bits.len();
        let mut a = Self::zeros(n);
        for (i, &b) in bits.iter().enumerate() {
            if b {
                a = a.with(i, true);
            }
        }
        Ok(a)
    }

    /// `0^i 1^(n-i-j) 0^j`.
    pub fn block(n: usize, leading_zeros: usize, trailing_zeros: usize) -> Self {
        assert!(leading_zeros + trailing_zeros <= n);
        let ones = n - leading_zeros - trailing_zeros;
        Self::from_rank(n, mask(ones) << trailing_zeros)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn rank(&self) -> u64 {
        self.bits
    }

    #[inline]
    fn bit(&self, i: usize) -> u64 {
        debug_assert!(i < self.dim());
        1u64 << (self.dim() - 1 - i)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.dim(), "variable {i} out of range for dimension {}", self.n);
        self.bits & self.bit(i) != 0
    }

    /// Copy with variable `i` set to `value` (the restriction `a|x_i=value`).
    #[inline]
    #[must_use]
    pub fn with(&self, i: usize, value: bool) -> Self {
        assert!(i < self.dim(), "variable {i} out of range for dimension {}", self.n);
        let bit = self.bit(i);
        let bits = if value { self.bits | bit } else { self.bits & !bit };
        Self { n: self.n, bits }
    }

    #[inline]
    #[must_use]
    pub fn flipped(&self, i: usize) -> Self {
        assert!(i < self.dim(), "variable {i} out of range for dimension {}", self.n);
        Self { n: self.n, bits: self.bits ^ self.bit(i) }
    }

    /// Overwrites every listed coordinate with `value` (`a|_{S <- value}`).
    #[must_use]
    pub fn with_all(&self, vars: &[usize], value: bool) -> Self {
        vars.iter().fold(*self, |a, &i| a.with(i, value))
    }

    /// Takes coordinates in `vars` from `other` and the rest from `self`.
    #[must_use]
    pub fn splice(&self, other: &Assignment, vars: &[usize]) -> Self {
        assert_eq!(self.n, other.n);
        vars.iter().fold(*self, |a, &i| a.with(i, other.get(i)))
    }

    /// Copy with variables `i` and `j` exchanged.
    #[must_use]
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let (vi, vj) = (self.get(i), self.get(j));
        self.with(i, vj).with(j, vi)
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Hamming distance. Panics on dimension mismatch.
    #[inline]
    pub fn distance(&self, other: &Assignment) -> usize {
        assert_eq!(self.n, other.n, "dimension mismatch");
        (self.bits ^ other.bits).count_ones() as usize
    }

    /// Indices of the variables set to 1, ascending.
    pub fn ones_indices(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.dim();
        (0..n).filter(move |&i| self.bits & (1u64 << (n - 1 - i)) != 0)
    }

    /// Indices of the variables set to 0, ascending.
    pub fn zeros_indices(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.dim();
        (0..n).filter(move |&i| self.bits & (1u64 << (n - 1 - i)) == 0)
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.dim()).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }

    pub fn to_vec(&self) -> Vec<bool> {
        (0..self.dim()).map(|i| self.get(i)).collect()
    }

    #[inline]
    pub(crate) fn raw_xor(&self, flips: u64) -> Self {
        Self { n: self.n, bits: self.bits ^ flips }
    }
}

impl FromStr for Assignment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::MalformedAssignment),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(&bits)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Assignment({self})")
    }
}

/// Every assignment of dimension `n` in lexicographic order.
pub fn cube(n: usize) -> impl Iterator<Item = Assignment> {
    assert!(n < MAX_DIM, "cannot enumerate the full cube of dimension {n}");
    (0..1u64 << n).map(move |r| Assignment::from_rank(n, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::string::ToString;

    fn a(s: &str) -> Assignment {
        s.parse().unwrap()
    }

    #[test]
    fn lexicographic_order_has_first_variable_most_significant() {
        assert!(a("01") < a("10"));
        assert!(a("011") < a("100"));
        let all: Vec<_> = cube(2).map(|x| x.to_bitstring()).collect();
        assert_eq!(all, vec!["00", "01", "10", "11"]);
    }

    #[test]
    fn positional_ops() {
        let x = a("1010");
        assert!(x.get(0) && !x.get(1) && x.get(2) && !x.get(3));
        assert_eq!(x.with(1, true), a("1110"));
        assert_eq!(x.with(0, false), a("0010"));
        assert_eq!(x.flipped(3), a("1011"));
        assert_eq!(x.swapped(0, 1), a("0110"));
        assert_eq!(x.with_all(&[1, 3], true), a("1111"));
        assert_eq!(x.splice(&a("0101"), &[0, 1]), a("0110"));
        assert_eq!(x.weight(), 2);
        assert_eq!(x.distance(&a("0110")), 2);
        assert_eq!(x.ones_indices().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(x.zeros_indices().collect::<Vec<_>>(), vec![1, 3]);
    }

    #[test]
    fn blocks() {
        assert_eq!(Assignment::block(5, 1, 2), a("01100"));
        assert_eq!(Assignment::block(3, 0, 0), a("111"));
        assert_eq!(Assignment::block(3, 3, 0), a("000"));
    }

    #[test]
    fn parsing() {
        assert_eq!(a("0110").to_string(), "0110");
        assert_eq!("01x".parse::<Assignment>(), Err(Error::MalformedAssignment));
        assert_eq!(Assignment::ones(64).weight(), 64);
        assert!(Assignment::from_bits(&[false; 65]).is_err());
        assert_eq!(a(""), Assignment::zeros(0));
    }
}
