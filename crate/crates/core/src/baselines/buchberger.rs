use alloc::vec::Vec;

use super::normal_cmp;
use crate::algebra::{Monomial, Polynomial, Ring};
use crate::stats::RunStats;

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<'a> {
    ring: &'a Ring,
    polys: Vec<Polynomial>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    use_criteria: bool,
    stats: RunStats,
}

impl State<'_> {
    fn pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.polys[i].lm().lcm(self.polys[j].lm());
        Pair { i: i.min(j), j: i.max(j), lcm }
    }

    /// Gebauer–Möller update for the new element `h` (an index into `polys`).
    fn update(&mut self, h: usize) {
        let lm_h = *self.polys[h].lm();
        let fresh: Vec<Pair> = self.active.iter().map(|&g| self.pair(g, h)).collect();
        self.stats.pairs_generated += fresh.len() as u64;
        if !self.use_criteria {
            self.pairs.extend(fresh);
            self.active.push(h);
            return;
        }
        let before = self.pairs.len() + fresh.len();

        // Chain criterion among the new pairs, keeping coprime ones for now.
        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in fresh.iter().enumerate() {
            let other = if p.i == h { p.j } else { p.i };
            let coprime = lm_h.is_coprime(self.polys[other].lm());
            let dominated = fresh[k + 1..]
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(Pair { i: p.i, j: p.j, lcm: p.lcm });
            }
        }
        // Product criterion.
        kept.retain(|p| {
            let other = if p.i == h { p.j } else { p.i };
            !lm_h.is_coprime(self.polys[other].lm())
        });
        // Chain criterion on old pairs.
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !lm_h.divides(&p.lcm)
                || lm_h.lcm(polys[p.i].lm()) == p.lcm
                || lm_h.lcm(polys[p.j].lm()) == p.lcm
        });
        self.pairs.extend(kept);
        self.stats.pruned_criteria += (before - self.pairs.len()) as u64;

        self.active.retain(|&g| !lm_h.divides(polys[g].lm()));
        self.active.push(h);
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let ring = self.ring;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            normal_cmp(ring, (&p.lcm, (p.i, p.j)), (&q.lcm, (q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn basis(&self) -> Vec<Polynomial> {
        self.active.iter().map(|&i| self.polys[i].clone()).collect()
    }
}

/// Buchberger's algorithm with the normal selection strategy. With
/// `use_criteria` the product and chain criteria prune pairs (Gebauer–Möller)
/// and the returned basis omits elements whose leading monomial is a multiple
/// of a later one; without it every pair is reduced.
pub fn buchberger(ring: &Ring, inputs: &[Polynomial], use_criteria: bool) -> (Vec<Polynomial>, RunStats) {
    let mut st = State {
        ring,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        use_criteria,
        stats: RunStats::default(),
    };
    for f in inputs.iter().filter(|f| !f.is_zero()) {
        st.polys.push(ring.monic(f));
        st.update(st.polys.len() - 1);
    }
    while let Some(p) = st.pop_pair() {
        st.stats.iterations += 1;
        let s = ring.spoly(&st.polys[p.i], &st.polys[p.j]);
        let reducers = st.basis();
        let (h, steps) = ring.normal_form_counted(&s, &reducers);
        st.stats.reduction_steps += steps;
        if h.is_zero() {
            st.stats.zero_reductions += 1;
            continue;
        }
        st.polys.push(ring.monic(&h));
        st.update(st.polys.len() - 1);
    }
    let basis = st.basis();
    st.stats.basis_size = basis.len() as u64;
    (basis, st.stats)
}
