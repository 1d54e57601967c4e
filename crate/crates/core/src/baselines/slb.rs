use alloc::vec::Vec;

use super::normal_cmp;
use crate::algebra::{Monomial, MonomialIdeal, Polynomial, Ring};
use crate::stats::RunStats;

/// How critical pairs are rejected and how new elements are seeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SlbRule {
    /// Reject `(i, j)` when `t_ij/t_i ∈ Z_i` or `t_ij/t_j ∈ Z_j`; a new
    /// element `f_k` starts with `⟨t_1, …, t_{k−1}⟩`. Always returns a
    /// Gröbner basis.
    #[default]
    Sound,
    /// Reject `(i, j)` when `t_ij/t_j ∈ Z_i`; a new element starts with
    /// `(Z_j + ⟨t_i⟩) : (t_ij/t_j) + ⟨t_1, …, t_{k−1}⟩`, `Z_j` taken before
    /// it gains `t_ij/t_j`. Kept for comparison: on some inputs the result
    /// is not a Gröbner basis.
    AsPrinted,
}

/// Working state of the staggered linear basis method: the basis so far and
/// one monomial ideal per element. `t ∈ Z_k` means `t·f_k` is a linear
/// combination of other kept multiples.
#[derive(Debug, Clone)]
pub struct SlbState {
    pub basis: Vec<Polynomial>,
    pub redundant: Vec<MonomialIdeal>,
    pending: Vec<(usize, usize, Monomial)>,
}

impl SlbState {
    fn new() -> Self {
        Self {
            basis: Vec::new(),
            redundant: Vec::new(),
            pending: Vec::new(),
        }
    }

    fn push(&mut self, f: Polynomial, mut z: MonomialIdeal) {
        let k = self.basis.len();
        for g in &self.basis {
            z.add(*g.lm());
        }
        for (i, g) in self.basis.iter().enumerate() {
            self.pending.push((i, k, g.lm().lcm(f.lm())));
        }
        self.basis.push(f);
        self.redundant.push(z);
    }
}

/// Staggered linear basis computation with the normal selection strategy and
/// [`SlbRule::Sound`]. Returns every element produced, so leading monomials
/// are pairwise distinct but the basis is not minimal.
pub fn slb(ring: &Ring, inputs: &[Polynomial]) -> (Vec<Polynomial>, RunStats) {
    let (state, stats) = slb_state(ring, inputs, SlbRule::Sound);
    (state.basis, stats)
}

/// Runs the method and returns the final state alongside the counters.
///
/// Inputs are reduced against the earlier ones before insertion. A pair
/// that is not rejected adds `t_ij/t_j` to `Z_j`, and its S-polynomial is
/// fully reduced; a nonzero remainder becomes a new element.
pub fn slb_state(ring: &Ring, inputs: &[Polynomial], rule: SlbRule) -> (SlbState, RunStats) {
    let mut st = SlbState::new();
    let mut stats = RunStats::default();
    for f in inputs {
        let (h, steps) = ring.normal_form_counted(f, &st.basis);
        stats.reduction_steps += steps;
        if h.is_zero() {
            continue;
        }
        stats.pairs_generated += st.basis.len() as u64;
        st.push(ring.monic(&h), MonomialIdeal::new());
    }
    loop {
        let best = (0..st.pending.len()).min_by(|&a, &b| {
            let (p, q) = (&st.pending[a], &st.pending[b]);
            normal_cmp(ring, (&p.2, (p.0, p.1)), (&q.2, (q.0, q.1)))
        });
        let Some(best) = best else { break };
        let (i, j, lcm) = st.pending.swap_remove(best);
        let lm_i = *st.basis[i].lm();
        let u = st.basis[j].lm().quotient_unchecked(&lcm);
        let reject = match rule {
            SlbRule::Sound => {
                st.redundant[i].contains(&lm_i.quotient_unchecked(&lcm))
                    || st.redundant[j].contains(&u)
            }
            SlbRule::AsPrinted => st.redundant[i].contains(&u),
        };
        if reject {
            stats.pruned_criteria += 1;
            continue;
        }
        let old = st.redundant[j].clone();
        st.redundant[j].add(u);
        stats.iterations += 1;
        let s = ring.spoly(&st.basis[i], &st.basis[j]);
        let (h, steps) = ring.normal_form_counted(&s, &st.basis);
        stats.reduction_steps += steps;
        if h.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        let seed = match rule {
            SlbRule::Sound => MonomialIdeal::new(),
            SlbRule::AsPrinted => {
                let mut seed = old;
                seed.add(lm_i);
                seed.quotient(&u)
            }
        };
        stats.pairs_generated += st.basis.len() as u64;
        st.push(ring.monic(&h), seed);
    }
    stats.basis_size = st.basis.len() as u64;
    (st, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baselines::verify_gb;

    #[test]
    fn variables() {
        let r = Ring::default_for(2);
        let (g, stats) = slb(&r, &[r.var(0), r.var(1)]);
        assert_eq!(g.len(), 2);
        assert!(verify_gb(&r, &g));
        assert!(stats.iterations <= 1);
    }

    #[test]
    fn initial_ideals() {
        let r = Ring::default_for(3);
        let f1 = r.poly(&[(1, &[2, 0, 0]), (1, &[1, 1, 0])]);
        let f2 = r.poly(&[(1, &[1, 1, 0]), (1, &[0, 0, 2])]);
        for rule in [SlbRule::Sound, SlbRule::AsPrinted] {
            let (st, _) = slb_state(&r, &[f1.clone(), f2.clone()], rule);
            // Z_2 starts as ⟨x^2⟩ and gains lcm(x^2, xy)/xy = x.
            assert!(st.redundant[1].contains(&Monomial::var(3, 0)));
            assert!(verify_gb(&r, &st.basis));
        }
    }

    #[test]
    fn staggered_leading_terms() {
        let r = Ring::default_for(3);
        let f1 = r.poly(&[(1, &[2, 0, 0]), (1, &[1, 1, 0])]);
        let f2 = r.poly(&[(1, &[1, 1, 0]), (1, &[0, 0, 2])]);
        let (g, _) = slb(&r, &[f1, f2]);
        for (a, f) in g.iter().enumerate() {
            for h in &g[a + 1..] {
                assert_ne!(f.lm(), h.lm());
            }
        }
        assert!(verify_gb(&r, &g));
    }

    #[test]
    fn equal_leading_terms_in_input() {
        let r = Ring::default_for(2);
        let f1 = r.poly(&[(1, &[2, 0]), (1, &[0, 1])]);
        let f2 = r.poly(&[(1, &[2, 0]), (2, &[0, 0])]);
        let (g, _) = slb(&r, &[f1, f2]);
        assert!(verify_gb(&r, &g));
        assert!(g.iter().any(|p| p.lm() == &Monomial::from_exponents(&[0, 1]).unwrap()));
    }

    #[test]
    fn printed_rule_can_miss_a_pair() {
        // homogeneous, GF(7), degrevlex x>y>z
        let r = Ring::new(
            crate::PrimeField::new(7).unwrap(),
            crate::TermOrder::degrevlex(3),
        );
        let f = [
            r.poly(&[(1, &[3, 0, 0]), (3, &[1, 0, 2])]),
            r.poly(&[(4, &[2, 0, 0]), (1, &[0, 2, 0])]),
            r.poly(&[(5, &[1, 0, 1])]),
        ];
        let (printed, _) = slb_state(&r, &f, SlbRule::AsPrinted);
        assert!(!verify_gb(&r, &printed.basis));
        let (g, _) = slb(&r, &f);
        assert!(verify_gb(&r, &g));
    }
}
