use alloc::vec::Vec;

use super::Monomial;

/// A monomial ideal kept as its divisibility-minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_generators<I: IntoIterator<Item = Monomial>>(gens: I) -> Self {
        let mut ideal = Self::new();
        for g in gens {
            ideal.add(g);
        }
        ideal
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Adds `m`; returns `false` when it was already a member.
    pub fn add(&mut self, m: Monomial) -> bool {
        if self.contains(&m) {
            return false;
        }
        self.gens.retain(|g| !m.divides(g));
        self.gens.push(m);
        true
    }

    /// Sum of two ideals.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for g in &other.gens {
            out.add(*g);
        }
        out
    }

    /// `self : ⟨m⟩`, generated by `u / gcd(u, m)` for every generator `u`.
    pub fn quotient(&self, m: &Monomial) -> Self {
        Self::from_generators(self.gens.iter().map(|u| u.gcd(m).quotient_unchecked(u)))
    }
}
