use core::cmp::Ordering;

use crate::algebra::Ring;
use crate::error::{Error, Result};
use crate::signatures::{ModuleOrder, ModuleTerm};
use crate::stats::RunStats;

use super::{Basis, LabeledPolynomial};

/// Top-reduces `f` by basis elements whose multiple has a signature strictly
/// below `f.sig`, keeping `f` monic after every step.
///
/// Every element of `basis` must have a signature below `f.sig`. When several
/// reductors apply, the smallest multiplied signature wins, then the smaller
/// leading monomial, then the earlier basis element.
pub fn s_reduce(
    ring: &Ring,
    ord: &ModuleOrder,
    mut f: LabeledPolynomial,
    basis: &Basis,
    stats: &mut RunStats,
) -> Result<LabeledPolynomial> {
    if let Some(g) = basis
        .iter()
        .find(|g| ord.compare(&g.labeled.sig, &f.sig) != Ordering::Less)
    {
        return Err(Error::ContractViolation(alloc::format!(
            "basis signature {} is not below {}",
            g.labeled.sig,
            f.sig
        )));
    }
    f.make_monic(ring);
    while !f.poly.is_zero() {
        let lm = *f.poly.lm();
        let mut best: Option<(usize, ModuleTerm)> = None;
        for (i, g) in basis.iter().enumerate() {
            let gl = &g.labeled;
            if !gl.poly.lm().divides(&lm) {
                continue;
            }
            let t = gl.poly.lm().quotient_unchecked(&lm);
            let sig = gl.sig.mul(&t);
            if ord.compare(&sig, &f.sig) != Ordering::Less {
                continue;
            }
            let better = match &best {
                None => true,
                Some((bi, bsig)) => match ord.compare(&sig, bsig) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => {
                        ring.cmp(gl.poly.lm(), basis.get(*bi).labeled.poly.lm()) == Ordering::Less
                    }
                },
            };
            if better {
                best = Some((i, sig));
            }
        }
        let Some((gi, _)) = best else { break };
        let g = &basis.get(gi).labeled;
        let t = g.poly.lm().quotient_unchecked(&lm);
        let alpha = ring.field.div(f.poly.lc(), g.poly.lc());
        f.poly = ring.axpy(&f.poly, alpha, &t, &g.poly);
        if let (Some(fc), Some(gc)) = (&f.cert, &g.cert) {
            f.cert = Some(fc.axpy(ring, alpha, &t, gc));
        }
        stats.reduction_steps += 1;
        f.make_monic(ring);
    }
    Ok(f)
}
