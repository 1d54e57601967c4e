//! Reference algorithms: Buchberger with the Gebauer–Möller criteria, the
//! staggered linear basis method, and reduced-basis utilities.

mod buchberger;
mod reduced;
mod slb;

pub use buchberger::buchberger;
pub use reduced::{reduced_gb, verify_gb};
pub use slb::{slb, slb_state, SlbRule, SlbState};

use core::cmp::Ordering;

use crate::algebra::{Monomial, Ring};

/// Normal selection strategy: lcm degree, then the term order, then indices.
pub(crate) fn normal_cmp(ring: &Ring, a: (&Monomial, (usize, usize)), b: (&Monomial, (usize, usize))) -> Ordering {
    a.0.degree()
        .cmp(&b.0.degree())
        .then_with(|| ring.cmp(a.0, b.0))
        .then_with(|| a.1.cmp(&b.1))
}
