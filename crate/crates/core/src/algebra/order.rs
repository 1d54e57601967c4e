use alloc::vec::Vec;
use core::cmp::Ordering;

use super::Monomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

/// An admissible term order on the monomials of a ring.
///
/// `precedence[0]` is the largest variable. The default precedence is
/// `x_0 > x_1 > ... > x_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        Self {
            kind,
            precedence: (0..nvars).collect(),
        }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::new(OrderKind::DegRevLex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Result<Self> {
        let n = precedence.len();
        let mut seen = alloc::vec![false; n];
        for &v in &precedence {
            if v >= n || seen[v] {
                return Err(Error::InvalidParameter(
                    "variable precedence is not a permutation".into(),
                ));
            }
            seen[v] = true;
        }
        Ok(Self { kind, precedence })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            OrderKind::Lex => "lex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }

    /// Same order over one more variable, appended as the smallest.
    pub fn extended(&self) -> Self {
        let mut precedence = self.precedence.clone();
        precedence.push(precedence.len());
        Self {
            kind: self.kind,
            precedence,
        }
    }

    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.nvars() != self.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: self.nvars(),
                    found: m.nvars(),
                });
            }
        }
        Ok(self.compare(a, b))
    }

    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.nvars());
        debug_assert_eq!(b.nvars(), self.nvars());
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.precedence {
                    match a.exponent(v).cmp(&b.exponent(v)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for &v in self.precedence.iter().rev() {
                    match a.exponent(v).cmp(&b.exponent(v)) {
                        Ordering::Equal => continue,
                        // smaller power of the last differing variable wins
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn degrevlex_examples() {
        // x>y>z>t
        let ord = TermOrder::degrevlex(4);
        assert_eq!(ord.compare(&m(&[0, 1, 3, 0]), &m(&[2, 0, 0, 2])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[1, 2, 0, 0]), &m(&[1, 2, 0, 0])), Ordering::Equal);
        // xy^2 > xz^2 in x>y>z
        let ord3 = TermOrder::degrevlex(3);
        assert_eq!(ord3.compare(&m(&[1, 2, 0]), &m(&[1, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn lex_examples() {
        let ord = TermOrder::lex(2);
        assert_eq!(ord.compare(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
        let rev = TermOrder::with_precedence(OrderKind::Lex, alloc::vec![1, 0]).unwrap();
        assert_eq!(rev.compare(&m(&[1, 0]), &m(&[0, 2])), Ordering::Less);
        assert!(TermOrder::with_precedence(OrderKind::Lex, alloc::vec![0, 0]).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let ord = TermOrder::lex(2);
        assert!(matches!(
            ord.try_compare(&m(&[1, 0]), &m(&[1, 0, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    fn mono3() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, 3).prop_map(|e| Monomial::from_exponents(&e).unwrap())
    }

    fn order3() -> impl Strategy<Value = TermOrder> {
        (any::<bool>(), Just(alloc::vec![0usize, 1, 2]).prop_shuffle()).prop_map(|(lex, p)| {
            let kind = if lex { OrderKind::Lex } else { OrderKind::DegRevLex };
            TermOrder::with_precedence(kind, p).unwrap()
        })
    }

    proptest! {
        #[test]
        fn admissible(ord in order3(), s in mono3(), t in mono3(), u in mono3()) {
            prop_assert_ne!(ord.compare(&Monomial::one(3), &t), Ordering::Greater);
            if ord.compare(&t, &u) == Ordering::Less {
                prop_assert_eq!(ord.compare(&s.mul(&t), &s.mul(&u)), Ordering::Less);
            }
            prop_assert_eq!(ord.compare(&t, &u), ord.compare(&u, &t).reverse());
            prop_assert_eq!(ord.compare(&t, &u) == Ordering::Equal, t == u);
        }
    }
}
