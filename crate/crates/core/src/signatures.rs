//! Module terms `t·e_i` of the free module, module orders and the set `L` of
//! known syzygy leading terms.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::algebra::{Monomial, MonomialIdeal, TermOrder};
use crate::error::{Error, Result};

/// `mon · e_index`. The index is zero-based; it prints as `e1, e2, ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleTerm {
    pub mon: Monomial,
    pub index: usize,
}

impl ModuleTerm {
    pub fn new(mon: Monomial, index: usize) -> Self {
        Self { mon, index }
    }

    /// The basis vector `e_index`.
    pub fn unit(nvars: usize, index: usize) -> Self {
        Self::new(Monomial::one(nvars), index)
    }

    /// `t · self`
    #[inline]
    pub fn mul(&self, t: &Monomial) -> Self {
        Self::new(self.mon.mul(t), self.index)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.index == other.index && self.mon.divides(&other.mon)
    }
}

impl fmt::Debug for ModuleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ModuleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mon.is_one() {
            write!(f, "e{}", self.index + 1)
        } else {
            write!(f, "{}*e{}", self.mon, self.index + 1)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModuleOrderKind {
    /// Position over term: index first, then the term order.
    Pot,
    /// Term over position: term order first, then index.
    Top,
    /// The three-variable, two-component order that is multiplicative but
    /// disagrees with degrevlex inside a component: total degree, then
    /// `deg_z`, then `e1 < e2`, then `deg_y`, then `deg_x`.
    Appendix,
}

impl ModuleOrderKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Pot => "pot",
            Self::Top => "top",
            Self::Appendix => "appendix",
        }
    }

    /// Whether `t < u ⇒ t·e_i < u·e_i` for the underlying term order.
    pub fn is_compatible(&self) -> bool {
        !matches!(self, Self::Appendix)
    }
}

/// A module order on `T^n_m` built over a term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleOrder {
    kind: ModuleOrderKind,
    term: TermOrder,
}

impl ModuleOrder {
    pub fn new(kind: ModuleOrderKind, term: TermOrder) -> Result<Self> {
        if kind == ModuleOrderKind::Appendix && term.nvars() != 3 {
            return Err(Error::UnsupportedOrder(alloc::format!(
                "appendix order needs exactly 3 variables, got {}",
                term.nvars()
            )));
        }
        Ok(Self { kind, term })
    }

    pub fn pot(term: TermOrder) -> Self {
        Self {
            kind: ModuleOrderKind::Pot,
            term,
        }
    }

    pub fn top(term: TermOrder) -> Self {
        Self {
            kind: ModuleOrderKind::Top,
            term,
        }
    }

    pub fn kind(&self) -> ModuleOrderKind {
        self.kind
    }

    pub fn term_order(&self) -> &TermOrder {
        &self.term
    }

    pub fn try_compare(&self, a: &ModuleTerm, b: &ModuleTerm) -> Result<Ordering> {
        a.mon.check_same_dim(&b.mon)?;
        a.mon.check_same_dim(&Monomial::one(self.term.nvars()))?;
        Ok(self.compare(a, b))
    }

    #[inline]
    pub fn compare(&self, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        match self.kind {
            ModuleOrderKind::Pot => a
                .index
                .cmp(&b.index)
                .then_with(|| self.term.compare(&a.mon, &b.mon)),
            ModuleOrderKind::Top => self
                .term
                .compare(&a.mon, &b.mon)
                .then_with(|| a.index.cmp(&b.index)),
            ModuleOrderKind::Appendix => {
                let (s, t) = (&a.mon, &b.mon);
                s.degree()
                    .cmp(&t.degree())
                    .then_with(|| s.exponent(2).cmp(&t.exponent(2)))
                    .then_with(|| a.index.cmp(&b.index))
                    .then_with(|| s.exponent(1).cmp(&t.exponent(1)))
                    .then_with(|| s.exponent(0).cmp(&t.exponent(0)))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a ModuleTerm, b: &'a ModuleTerm) -> &'a ModuleTerm {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// The monomial submodule `⟨L⟩` of known syzygy leading terms, stored as one
/// minimal monomial ideal per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyLeadSet {
    slices: Vec<MonomialIdeal>,
}

impl SyzygyLeadSet {
    pub fn new(components: usize) -> Self {
        Self {
            slices: alloc::vec![MonomialIdeal::new(); components],
        }
    }

    pub fn components(&self) -> usize {
        self.slices.len()
    }

    pub fn slice(&self, index: usize) -> &MonomialIdeal {
        &self.slices[index]
    }

    #[inline]
    pub fn contains(&self, sig: &ModuleTerm) -> bool {
        self.slices
            .get(sig.index)
            .is_some_and(|s| s.contains(&sig.mon))
    }

    /// Adds `sig`; returns `false` if it was already in `⟨L⟩`.
    pub fn insert(&mut self, sig: ModuleTerm) -> bool {
        self.slices[sig.index].add(sig.mon)
    }

    /// Minimal generators, component by component.
    pub fn generators(&self) -> impl Iterator<Item = ModuleTerm> + '_ {
        self.slices.iter().enumerate().flat_map(|(i, s)| {
            s.generators().iter().map(move |m| ModuleTerm::new(*m, i))
        })
    }

    pub fn len(&self) -> usize {
        self.slices.iter().map(|s| s.generators().len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    fn sig(e: &[u32], i: usize) -> ModuleTerm {
        ModuleTerm::new(m(e), i)
    }

    #[test]
    fn pot_index_first() {
        let ord = ModuleOrder::pot(TermOrder::degrevlex(3));
        // y·e1 < x·e2
        assert_eq!(ord.compare(&sig(&[0, 1, 0], 0), &sig(&[1, 0, 0], 1)), Ordering::Less);
        let top = ModuleOrder::top(TermOrder::degrevlex(3));
        assert_eq!(top.compare(&sig(&[0, 1, 0], 0), &sig(&[1, 0, 0], 1)), Ordering::Less);
        assert_eq!(top.compare(&sig(&[1, 0, 0], 0), &sig(&[0, 1, 0], 1)), Ordering::Greater);
    }

    #[test]
    fn appendix_chain() {
        let ord = ModuleOrder::new(ModuleOrderKind::Appendix, TermOrder::degrevlex(3)).unwrap();
        // x e1 < y e1 < x e2 < y e2 < z e1 < z e2
        let chain = [
            sig(&[1, 0, 0], 0),
            sig(&[0, 1, 0], 0),
            sig(&[1, 0, 0], 1),
            sig(&[0, 1, 0], 1),
            sig(&[0, 0, 1], 0),
            sig(&[0, 0, 1], 1),
        ];
        for w in chain.windows(2) {
            assert_eq!(ord.compare(&w[0], &w[1]), Ordering::Less, "{} < {}", w[0], w[1]);
        }
        assert!(ModuleOrder::new(ModuleOrderKind::Appendix, TermOrder::degrevlex(4)).is_err());
    }

    #[test]
    fn sig_mul_examples() {
        let s = sig(&[1, 0, 0], 1);
        assert_eq!(s.mul(&Monomial::one(3)), s);
        assert_eq!(s.mul(&m(&[1, 0, 0])), sig(&[2, 0, 0], 1));
        assert_eq!(sig(&[0, 1, 0], 0).mul(&m(&[1, 0, 0])), sig(&[1, 1, 0], 0));
    }

    #[test]
    fn lead_set_membership() {
        let mut l = SyzygyLeadSet::new(2);
        assert!(!l.contains(&sig(&[1, 1, 1], 0)));
        assert!(l.insert(sig(&[0, 0, 2], 0)));
        assert!(l.contains(&sig(&[1, 0, 2], 0)));
        assert!(!l.contains(&sig(&[0, 0, 2], 1)));
        assert!(!l.insert(sig(&[1, 0, 2], 0)));
        assert_eq!(l.generators().collect::<Vec<_>>(), vec![sig(&[0, 0, 2], 0)]);
        assert!(l.insert(sig(&[0, 0, 1], 0)));
        assert_eq!(l.generators().collect::<Vec<_>>(), vec![sig(&[0, 0, 1], 0)]);
    }

    fn all_terms(max_deg: u32, m_count: usize) -> Vec<ModuleTerm> {
        let mut out = Vec::new();
        for a in 0..=max_deg {
            for b in 0..=max_deg - a {
                for c in 0..=max_deg - a - b {
                    for i in 0..m_count {
                        out.push(sig(&[a, b, c], i));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn appendix_order_is_total_and_multiplicative() {
        let ord = ModuleOrder::new(ModuleOrderKind::Appendix, TermOrder::degrevlex(3)).unwrap();
        let terms = all_terms(3, 2);
        let shifts: Vec<Monomial> = all_terms(2, 1).into_iter().map(|s| s.mon).collect();
        for a in &terms {
            for b in &terms {
                let o = ord.compare(a, b);
                assert_eq!(o, ord.compare(b, a).reverse());
                assert_eq!(o == Ordering::Equal, a == b);
                if o == Ordering::Less {
                    for t in &shifts {
                        assert_eq!(ord.compare(&a.mul(t), &b.mul(t)), Ordering::Less);
                    }
                }
            }
        }
    }

    /// Brute force over degree ≤ 3: some `t < u` under degrevlex has
    /// `t·e_i >' u·e_i`.
    #[test]
    fn appendix_order_is_not_compatible() {
        let term = TermOrder::degrevlex(3);
        let ord = ModuleOrder::new(ModuleOrderKind::Appendix, term.clone()).unwrap();
        let terms = all_terms(3, 2);
        let witness = terms.iter().find_map(|a| {
            terms.iter().find(|b| {
                a.index == b.index
                    && term.compare(&a.mon, &b.mon) == Ordering::Less
                    && ord.compare(a, b) == Ordering::Greater
            })
            .map(|b| (*a, *b))
        });
        let (a, b) = witness.expect("a non-compatibility witness exists");
        assert!(term.compare(&a.mon, &b.mon) == Ordering::Less);
        // the smallest witness found: xz < xy under degrevlex, xz·e1 >' xy·e1
        assert!(ord.compare(&sig(&[1, 0, 1], 0), &sig(&[1, 1, 0], 0)) == Ordering::Greater);
        assert!(term.compare(&m(&[1, 0, 1]), &m(&[1, 1, 0])) == Ordering::Less);
    }

    fn mterm() -> impl Strategy<Value = ModuleTerm> {
        ([0u32..4, 0u32..4, 0u32..4], 0usize..3).prop_map(|(e, i)| sig(&e, i))
    }

    proptest! {
        #[test]
        fn pot_top_compatible(a in mterm(), b in mterm(), t in [0u32..3, 0u32..3, 0u32..3], lex in any::<bool>()) {
            let term = if lex { TermOrder::lex(3) } else { TermOrder::degrevlex(3) };
            let t = m(&t);
            for ord in [ModuleOrder::pot(term.clone()), ModuleOrder::top(term.clone())] {
                if ord.compare(&a, &b) == Ordering::Less {
                    prop_assert_eq!(ord.compare(&a.mul(&t), &b.mul(&t)), Ordering::Less);
                }
                if a.index == b.index && term.compare(&a.mon, &b.mon) == Ordering::Less {
                    prop_assert_eq!(ord.compare(&a, &b), Ordering::Less);
                }
            }
        }

        #[test]
        fn membership_monotone_under_insert(ins in proptest::collection::vec(mterm(), 1..6), probe in mterm()) {
            let mut l = SyzygyLeadSet::new(3);
            let mut seen = false;
            for s in ins {
                l.insert(s);
                let now = l.contains(&probe);
                prop_assert!(!seen || now);
                seen = now;
            }
        }
    }
}
