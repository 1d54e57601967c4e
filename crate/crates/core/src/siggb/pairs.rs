use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algebra::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::signatures::{ModuleOrder, ModuleOrderKind, ModuleTerm, SyzygyLeadSet};
use crate::stats::RunStats;

use super::certify::ModuleElement;
use super::{Basis, BasisElement, LabeledPolynomial};

/// S-polynomial `u1·g1/LC(g1) − u2·g2/LC(g2)` together with the monomial
/// multipliers `u1 = lcm/LM(g1)` and `u2 = lcm/LM(g2)`.
pub fn spol(
    ring: &Ring,
    g1: &Polynomial,
    g2: &Polynomial,
) -> Result<(Polynomial, Monomial, Monomial)> {
    if g1.is_zero() {
        return Err(Error::InvalidParameter("S-polynomial of a zero polynomial".into()));
    }
    if g2.is_zero() {
        return Err(Error::InvalidParameter("S-polynomial of a zero polynomial".into()));
    }
    let (u1, u2) = multipliers(g1, g2);
    Ok((ring.spoly(g1, g2), u1, u2))
}

fn multipliers(g1: &Polynomial, g2: &Polynomial) -> (Monomial, Monomial) {
    let l = g1.lm().lcm(g2.lm());
    (
        g1.lm().quotient_unchecked(&l),
        g2.lm().quotient_unchecked(&l),
    )
}

/// Normal-pair test with condition 2 weakened to membership in `⟨L⟩`:
/// both elements primitive, neither `u_i·σ_i` in `⟨L⟩`, and the two
/// products distinct.
pub fn is_normal_pair(g1: &BasisElement, g2: &BasisElement, syz: &SyzygyLeadSet) -> bool {
    if !g1.primitive || !g2.primitive {
        return false;
    }
    let (u1, u2) = multipliers(&g1.labeled.poly, &g2.labeled.poly);
    let s1 = g1.labeled.sig.mul(&u1);
    let s2 = g2.labeled.sig.mul(&u2);
    !syz.contains(&s1) && !syz.contains(&s2) && s1 != s2
}

/// `f` is primitive unless some basis element `g` and monomial `t ≠ 1`
/// satisfy `t·LM(g) = LM(f)`, `t·σ_g = σ_f` and `t·σ_g ∉ ⟨L⟩`.
///
/// Witnesses are only searched in `basis`.
pub fn is_primitive(f: &LabeledPolynomial, basis: &Basis, syz: &SyzygyLeadSet) -> bool {
    if f.poly.is_zero() {
        return false;
    }
    !basis.iter().any(|g| {
        let g = &g.labeled;
        if !g.sig.divides(&f.sig) {
            return false;
        }
        let t = g.sig.mon.quotient_unchecked(&f.sig.mon);
        !t.is_one() && g.poly.lm().mul(&t) == *f.poly.lm() && !syz.contains(&f.sig)
    })
}

/// Pending `(polynomial, signature)` entries, at most one per signature.
#[derive(Debug, Clone, Default)]
pub struct PairQueue {
    entries: BTreeMap<ModuleTerm, LabeledPolynomial>,
}

/// Whether `a` has a smaller leading monomial than `b`; zero is smallest.
fn lm_less(ring: &Ring, a: &Polynomial, b: &Polynomial) -> bool {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => false,
        (true, false) => true,
        (false, true) => false,
        (false, false) => ring.cmp(a.lm(), b.lm()) == Ordering::Less,
    }
}

impl PairQueue {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &LabeledPolynomial> {
        self.entries.values()
    }

    pub fn get(&self, sig: &ModuleTerm) -> Option<&LabeledPolynomial> {
        self.entries.get(sig)
    }

    /// Inserts `p`; on a signature collision the entry with the smaller
    /// leading monomial stays, the incumbent on ties. Returns whether `p`
    /// was kept.
    pub fn insert(&mut self, ring: &Ring, p: LabeledPolynomial) -> bool {
        match self.entries.get_mut(&p.sig) {
            Some(old) => {
                if lm_less(ring, &p.poly, &old.poly) {
                    *old = p;
                    true
                } else {
                    false
                }
            }
            None => {
                self.entries.insert(p.sig, p);
                true
            }
        }
    }

    pub fn min_signature(&self, ord: &ModuleOrder) -> Option<ModuleTerm> {
        self.entries
            .keys()
            .copied()
            .reduce(|a, b| if ord.compare(&b, &a) == Ordering::Less { b } else { a })
    }

    pub fn remove(&mut self, sig: &ModuleTerm) -> Option<LabeledPolynomial> {
        self.entries.remove(sig)
    }

    /// Removes and returns the entry with minimal signature.
    pub fn pop_min(&mut self, ord: &ModuleOrder) -> Option<LabeledPolynomial> {
        let sig = self.min_signature(ord)?;
        self.entries.remove(&sig)
    }
}

/// `(f', σ')` rewrites `(f, σ)` when `t·σ' = σ` and `t·LM(f') < LM(f)`.
fn rewrites(ring: &Ring, by: &LabeledPolynomial, target: &LabeledPolynomial) -> bool {
    if by.sig == target.sig || !by.sig.divides(&target.sig) || by.poly.is_zero() {
        return false;
    }
    if target.poly.is_zero() {
        return false;
    }
    let t = by.sig.mon.quotient_unchecked(&target.sig.mon);
    ring.cmp(&by.poly.lm().mul(&t), target.poly.lm()) == Ordering::Less
}

/// Whether some element of `basis` or `queue` rewrites `f`.
pub fn is_rewritable(
    ring: &Ring,
    f: &LabeledPolynomial,
    basis: &Basis,
    queue: &PairQueue,
) -> bool {
    basis.iter().any(|g| rewrites(ring, &g.labeled, f)) || queue.iter().any(|q| rewrites(ring, q, f))
}

/// Drops entries whose signature lies in `⟨L⟩`, then (if `rewritable`)
/// entries rewritten by an element of the basis or another queue entry.
pub fn prune_queue(
    ring: &Ring,
    queue: &mut PairQueue,
    syz: &SyzygyLeadSet,
    basis: &Basis,
    rewritable: bool,
    stats: &mut RunStats,
) {
    let before = queue.len();
    queue.entries.retain(|sig, _| !syz.contains(sig));
    stats.pruned_by_syzygy += (before - queue.len()) as u64;
    if !rewritable {
        return;
    }
    let doomed: Vec<ModuleTerm> = queue
        .iter()
        .filter(|p| is_rewritable(ring, p, basis, queue))
        .map(|p| p.sig)
        .collect();
    for sig in &doomed {
        queue.entries.remove(sig);
    }
    stats.pruned_rewritable += doomed.len() as u64;
}

/// Adds the S-polynomial of every normal pair `(new, g)`, `g` in the basis,
/// with signature `max(u1·σ_new, u2·σ_g)`. Non-primitive `new` yields nothing.
pub fn update_pairs(
    ring: &Ring,
    ord: &ModuleOrder,
    syz: &SyzygyLeadSet,
    basis: &Basis,
    queue: &mut PairQueue,
    new: &BasisElement,
    stats: &mut RunStats,
) {
    if !new.primitive {
        stats.pruned_nonprimitive += 1;
        return;
    }
    for g in basis.iter() {
        if !is_normal_pair(new, g, syz) {
            stats.pruned_criteria += 1;
            continue;
        }
        let entry = s_pair(ring, ord, &new.labeled, &g.labeled);
        stats.pairs_generated += 1;
        queue.insert(ring, entry);
    }
}

pub(crate) fn s_pair(
    ring: &Ring,
    ord: &ModuleOrder,
    a: &LabeledPolynomial,
    b: &LabeledPolynomial,
) -> LabeledPolynomial {
    let (u1, u2) = multipliers(&a.poly, &b.poly);
    let s1 = a.sig.mul(&u1);
    let s2 = b.sig.mul(&u2);
    let k = &ring.field;
    let c1 = k.inv(a.poly.lc());
    let c2 = k.inv(b.poly.lc());
    let left = ring.mul_term(&a.poly, c1, &u1);
    let poly = ring.axpy(&left, c2, &u2, &b.poly);
    let cert = match (&a.cert, &b.cert) {
        (Some(ca), Some(cb)) => {
            let left = ModuleElement::from_components(
                ca.components()
                    .iter()
                    .map(|p| ring.mul_term(p, c1, &u1))
                    .collect(),
            );
            Some(left.axpy(ring, c2, &u2, cb))
        }
        _ => None,
    };
    LabeledPolynomial {
        poly,
        sig: *ord.max(&s1, &s2),
        cert,
    }
}

/// Adds `LM(f)·e_j` for every `j` past the component of `f.sig`; these are
/// leading terms of principal syzygies under position-over-term.
pub fn pot_augment(
    syz: &mut SyzygyLeadSet,
    f: &LabeledPolynomial,
    components: usize,
    ord: &ModuleOrder,
) -> Result<Vec<ModuleTerm>> {
    if ord.kind() != ModuleOrderKind::Pot {
        return Err(Error::UnsupportedOrder(
            "principal syzygy augmentation needs position-over-term".into(),
        ));
    }
    if f.poly.is_zero() {
        return Ok(Vec::new());
    }
    let lm = *f.poly.lm();
    let mut added = Vec::new();
    for j in f.sig.index + 1..components {
        let s = ModuleTerm::new(lm, j);
        if syz.insert(s) {
            added.push(s);
        }
    }
    Ok(added)
}
