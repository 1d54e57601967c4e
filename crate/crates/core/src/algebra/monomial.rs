use core::fmt;

use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 16;

/// A power product `x_1^a_1 ... x_n^a_n` with its total degree cached.
///
/// Exponents past `nvars` are always zero, so the derived `Eq`/`Hash` are
/// structural. The derived `Ord` is only a storage order (used for map keys);
/// term orders live in [`TermOrder`](super::TermOrder).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u32; MAX_VARS],
    degree: u32,
    nvars: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Self {
            exps: [0; MAX_VARS],
            degree: 0,
            nvars: nvars as u8,
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut m = Self::one(exps.len());
        let mut degree = 0u32;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = e;
            degree = degree
                .checked_add(e)
                .ok_or_else(|| Error::InvalidParameter("degree overflow".into()))?;
        }
        m.degree = degree;
        Ok(m)
    }

    /// The variable `x_index` in a ring with `nvars` variables.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars);
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: other.nvars(),
            });
        }
        Ok(())
    }

    /// `self | other`
    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.nvars, other.nvars);
        if self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, defined only when `self | other`.
    pub fn quotient_of(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        if !self.divides(other) {
            return Err(Error::NotDivisible);
        }
        Ok(self.quotient_unchecked(other))
    }

    #[inline]
    pub(crate) fn quotient_unchecked(&self, other: &Self) -> Self {
        let mut q = *other;
        for (e, d) in q.exps.iter_mut().zip(&self.exps) {
            *e -= d;
        }
        q.degree -= self.degree;
        q
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut r = *self;
        for (e, o) in r.exps.iter_mut().zip(&other.exps) {
            *e = e.checked_add(*o)?;
        }
        r.degree = self.degree.checked_add(other.degree)?;
        Some(r)
    }

    /// Product; exponent overflow is a hard error.
    #[inline]
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut r = *self;
        let mut degree = 0;
        for (e, o) in r.exps.iter_mut().zip(&other.exps) {
            *e = (*e).max(*o);
            degree += *e;
        }
        r.degree = degree;
        r
    }

    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut r = *self;
        let mut degree = 0;
        for (e, o) in r.exps.iter_mut().zip(&other.exps) {
            *e = (*e).min(*o);
            degree += *e;
        }
        r.degree = degree;
        r
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Same exponents over `nvars + 1` variables with the new last exponent set.
    pub fn extend(&self, last: u32) -> Self {
        let n = self.nvars();
        assert!(n < MAX_VARS, "at most {MAX_VARS} variables");
        let mut r = *self;
        r.exps[n] = last;
        r.nvars += 1;
        r.degree = self.degree.checked_add(last).expect("monomial exponent overflow");
        r
    }

    /// Drops the last variable.
    pub fn truncate_last(&self) -> Self {
        let n = self.nvars();
        assert!(n > 0);
        let mut r = *self;
        r.degree -= r.exps[n - 1];
        r.exps[n - 1] = 0;
        r.nvars -= 1;
        r
    }

    /// Writes the monomial with the given variable names, `1` for the unit.
    pub fn write_with<W: fmt::Write>(&self, out: &mut W, names: &[&str]) -> fmt::Result {
        if self.is_one() {
            return out.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.write_char('*')?;
            }
            first = false;
            out.write_str(names[i])?;
            if e > 1 {
                write!(out, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn lcm_gcd_divide() {
        // x>y>z
        let yz3 = m(&[0, 1, 3]);
        let xz2 = m(&[1, 0, 2]);
        assert_eq!(yz3.lcm(&xz2), m(&[1, 1, 3]));
        assert_eq!(m(&[2, 1, 0]).gcd(&m(&[1, 0, 1])), m(&[1, 0, 0]));
        assert!(Monomial::one(3).divides(&yz3));
        assert_eq!(xz2.quotient_of(&m(&[1, 1, 3])).unwrap(), m(&[0, 1, 1]));
        assert_eq!(yz3.quotient_of(&xz2), Err(Error::NotDivisible));
        assert!(matches!(
            m(&[1]).quotient_of(&m(&[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn degree_is_cached() {
        let a = m(&[2, 0, 5]);
        assert_eq!(a.degree(), 7);
        assert_eq!(a.mul(&m(&[1, 1, 1])).degree(), 10);
        assert_eq!(a.extend(3).degree(), 10);
        assert_eq!(a.extend(3).truncate_last(), a);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_fatal() {
        let big = m(&[u32::MAX - 1]);
        let _ = big.mul(&m(&[2]));
    }
}
