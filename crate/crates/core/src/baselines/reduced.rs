use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algebra::{Polynomial, Ring};
use crate::error::{Error, Result};

/// True iff every pairwise S-polynomial of `basis` reduces to zero modulo it.
pub fn verify_gb(ring: &Ring, basis: &[Polynomial]) -> bool {
    let gens: Vec<Polynomial> = basis.iter().filter(|f| !f.is_zero()).cloned().collect();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let s = ring.spoly(&gens[i], &gens[j]);
            if !ring.normal_form(&s, &gens).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Interreduces a Gröbner basis into the unique reduced one, sorted by
/// ascending leading monomial.
pub fn reduced_gb(ring: &Ring, basis: &[Polynomial]) -> Result<Vec<Polynomial>> {
    for f in basis {
        if let Some(t) = f.leading_term() {
            if t.mon.nvars() != ring.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: ring.nvars(),
                    found: t.mon.nvars(),
                });
            }
        }
    }
    let mut gens: Vec<Polynomial> = basis
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| ring.monic(f))
        .collect();
    gens.sort_by(|a, b| ring.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<Polynomial> = Vec::with_capacity(gens.len());
    for f in gens {
        if !minimal.iter().any(|g| g.lm().divides(f.lm())) {
            minimal.push(f);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let lead = ring.monomial(1, *minimal[i].lm());
        let tail = ring.sub(&minimal[i], &lead);
        reduced.push(ring.add(&lead, &ring.normal_form(&tail, &others)));
    }
    // `reduced ⊆ ⟨basis⟩` always; if `reduced` is a basis containing every
    // input, both generate the same ideal and the input is a basis too.
    if !verify_gb(ring, &reduced) || basis.iter().any(|f| !ring.normal_form(f, &reduced).is_zero()) {
        return Err(Error::NotAGroebnerBasis);
    }
    debug_assert!(reduced
        .windows(2)
        .all(|w| ring.cmp(w[0].lm(), w[1].lm()) == Ordering::Less));
    Ok(reduced)
}
