//! The signature-based Gröbner basis algorithm.
//!
//! Each polynomial is tracked together with a signature, a module term
//! `t·e_i` standing for the leading term of a representation `Σ c_i·f_i`.
//! Pairs are processed in ascending signature order; a reduction to zero
//! certifies its signature as the leading term of a syzygy and is recorded in
//! `L`, which prunes every later pair whose signature it divides.
//!
//! The main loop of [`sgb`]:
//!
//! 1. drop queue entries with signature in `⟨L⟩`;
//! 2. drop queue entries rewritten by a basis element or another entry
//!    (same signature up to a monomial multiple, smaller leading monomial);
//! 3. take the entry with minimal signature and [`s_reduce`] it;
//! 4. a nonzero result is added to the basis after generating its normal
//!    pairs ([`update_pairs`]); a zero result adds its signature to `L`.
//!
//! With position-over-term ordering, every new basis element `f` with
//! signature `t·e_i` also contributes `LM(f)·e_j`, `j > i`, to `L`
//! ([`pot_augment`]). On regular sequences this avoids all reductions to zero.

mod certify;
mod pairs;
mod reduce;

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algebra::{Polynomial, Ring};
use crate::error::{Error, Result};
use crate::signatures::{ModuleOrder, ModuleOrderKind, ModuleTerm, SyzygyLeadSet};
use crate::stats::RunStats;

pub use certify::{certify, ModuleElement};
pub use pairs::{
    is_normal_pair, is_primitive, is_rewritable, pot_augment, prune_queue, spol, update_pairs,
    PairQueue,
};
pub use reduce::s_reduce;

/// A polynomial with its signature and, in certified mode, a module element
/// `cert` with `ν(cert) = poly` and leading module term `sig`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPolynomial {
    pub poly: Polynomial,
    pub sig: ModuleTerm,
    pub cert: Option<ModuleElement>,
}

impl LabeledPolynomial {
    pub fn new(poly: Polynomial, sig: ModuleTerm) -> Self {
        Self {
            poly,
            sig,
            cert: None,
        }
    }

    fn make_monic(&mut self, ring: &Ring) {
        if self.poly.is_zero() || self.poly.lc() == 1 {
            return;
        }
        let c = ring.field.inv(self.poly.lc());
        self.poly = ring.scale(&self.poly, c);
        if let Some(cert) = &self.cert {
            self.cert = Some(cert.scale(ring, c));
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub labeled: LabeledPolynomial,
    /// Primitive S-irreducible at insertion time; only primitive elements
    /// take part in normal pairs.
    pub primitive: bool,
}

/// Basis elements in insertion order; signatures are pairwise distinct.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Basis {
    elements: Vec<BasisElement>,
}

impl Basis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &BasisElement {
        &self.elements[i]
    }

    pub fn iter(&self) -> core::slice::Iter<'_, BasisElement> {
        self.elements.iter()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|e| e.labeled.poly.clone()).collect()
    }

    pub fn push(&mut self, element: BasisElement) -> Result<()> {
        if let Some(dup) = self
            .elements
            .iter()
            .find(|e| e.labeled.sig == element.labeled.sig)
        {
            return Err(Error::ContractViolation(alloc::format!(
                "signature {} already in the basis",
                dup.labeled.sig
            )));
        }
        self.elements.push(element);
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SgbOptions {
    /// Add principal syzygy leading terms after each new basis element
    /// (position-over-term only).
    pub pot_augmentation: bool,
    /// Apply the rewritable criterion to queue entries.
    pub rewritable: bool,
    /// Track module representations and check them after every step.
    pub certified: bool,
    /// Stop after this many reductions.
    pub iteration_cap: Option<u64>,
    /// Prune the whole queue every iteration instead of checking the
    /// selected entry only. Both give the same result; eager is slower.
    pub eager_prune: bool,
}

impl Default for SgbOptions {
    fn default() -> Self {
        Self {
            pot_augmentation: true,
            rewritable: true,
            certified: false,
            iteration_cap: None,
            eager_prune: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunStatus {
    Complete,
    /// The iteration cap was reached with pairs still pending.
    Capped,
}

/// A syzygy leading term together with the module element proving it
/// (certified mode only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyWitness {
    pub sig: ModuleTerm,
    pub cert: ModuleElement,
}

#[derive(Debug, Clone)]
pub struct SgbOutput {
    pub basis: Basis,
    pub syzygies: SyzygyLeadSet,
    pub stats: RunStats,
    pub status: RunStatus,
    /// Signatures in the order they were reduced.
    pub trace: Vec<ModuleTerm>,
    pub witnesses: Vec<SyzygyWitness>,
}

impl SgbOutput {
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.basis.polynomials()
    }
}

struct Run<'a> {
    ring: &'a Ring,
    ord: ModuleOrder,
    inputs: &'a [Polynomial],
    opts: SgbOptions,
    syz: SyzygyLeadSet,
    basis: Basis,
    queue: PairQueue,
    stats: RunStats,
    trace: Vec<ModuleTerm>,
    witnesses: Vec<SyzygyWitness>,
}

/// Computes a signature Gröbner basis of the ideal generated by `inputs`.
///
/// The polynomials of the returned basis form a Gröbner basis of the ideal
/// under the ring's term order (when the run completes).
pub fn sgb(
    ring: &Ring,
    inputs: &[Polynomial],
    module_order: ModuleOrderKind,
    opts: SgbOptions,
) -> Result<SgbOutput> {
    if inputs.is_empty() {
        return Err(Error::EmptySystem);
    }
    for (i, f) in inputs.iter().enumerate() {
        if f.is_zero() {
            return Err(Error::ZeroGenerator(i));
        }
        if f.lm().nvars() != ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(),
                found: f.lm().nvars(),
            });
        }
    }
    let ord = ModuleOrder::new(module_order, ring.order.clone())?;
    if module_order == ModuleOrderKind::Appendix {
        if inputs.len() != 2 {
            return Err(Error::UnsupportedOrder(
                "appendix order is defined for two generators".into(),
            ));
        }
        if opts.iteration_cap.is_none() {
            return Err(Error::CapRequired);
        }
    }
    let m = inputs.len();
    let mut run = Run {
        ring,
        ord,
        inputs,
        opts,
        syz: SyzygyLeadSet::new(m),
        basis: Basis::new(),
        queue: PairQueue::new(),
        stats: RunStats::default(),
        trace: Vec::new(),
        witnesses: Vec::new(),
    };
    for (i, f) in inputs.iter().enumerate() {
        let mut entry = LabeledPolynomial::new(f.clone(), ModuleTerm::unit(ring.nvars(), i));
        if opts.certified {
            entry.cert = Some(ModuleElement::unit(ring, m, i));
        }
        run.queue.insert(ring, entry);
    }
    let status = run.main_loop()?;
    run.stats.basis_size = run.basis.len() as u64;
    Ok(SgbOutput {
        basis: run.basis,
        syzygies: run.syz,
        stats: run.stats,
        status,
        trace: run.trace,
        witnesses: run.witnesses,
    })
}

impl Run<'_> {
    fn main_loop(&mut self) -> Result<RunStatus> {
        let mut last: Option<ModuleTerm> = None;
        while let Some(entry) = self.select() {
            if self
                .opts
                .iteration_cap
                .is_some_and(|cap| self.stats.iterations >= cap)
            {
                self.queue.insert(self.ring, entry);
                return Ok(RunStatus::Capped);
            }
            if let Some(prev) = last {
                if self.ord.compare(&prev, &entry.sig) != Ordering::Less {
                    return Err(Error::ContractViolation(alloc::format!(
                        "selected signature {} does not exceed {}",
                        entry.sig,
                        prev
                    )));
                }
            }
            last = Some(entry.sig);
            self.stats.iterations += 1;
            self.trace.push(entry.sig);
            self.check_certificate(&entry)?;

            let reduced = s_reduce(self.ring, &self.ord, entry, &self.basis, &mut self.stats)?;
            self.check_certificate(&reduced)?;
            if reduced.poly.is_zero() {
                self.stats.zero_reductions += 1;
                if let Some(cert) = &reduced.cert {
                    self.witnesses.push(SyzygyWitness {
                        sig: reduced.sig,
                        cert: cert.clone(),
                    });
                }
                self.syz.insert(reduced.sig);
            } else {
                self.add_to_basis(reduced)?;
            }
        }
        Ok(RunStatus::Complete)
    }

    /// Pops the minimal entry that survives the `⟨L⟩` and rewritable checks.
    fn select(&mut self) -> Option<LabeledPolynomial> {
        loop {
            if self.opts.eager_prune {
                prune_queue(
                    self.ring,
                    &mut self.queue,
                    &self.syz,
                    &self.basis,
                    self.opts.rewritable,
                    &mut self.stats,
                );
                return self.queue.pop_min(&self.ord);
            }
            let entry = self.queue.pop_min(&self.ord)?;
            if self.syz.contains(&entry.sig) {
                self.stats.pruned_by_syzygy += 1;
                continue;
            }
            if self.opts.rewritable
                && is_rewritable(self.ring, &entry, &self.basis, &self.queue)
            {
                self.stats.pruned_rewritable += 1;
                continue;
            }
            return Some(entry);
        }
    }

    fn add_to_basis(&mut self, f: LabeledPolynomial) -> Result<()> {
        let primitive = is_primitive(&f, &self.basis, &self.syz);
        let element = BasisElement {
            labeled: f,
            primitive,
        };
        let queued_before = self.queue.len();
        update_pairs(
            self.ring,
            &self.ord,
            &self.syz,
            &self.basis,
            &mut self.queue,
            &element,
            &mut self.stats,
        );
        if self.opts.certified && self.queue.len() != queued_before {
            for entry in self.queue.iter() {
                self.check_certificate(entry)?;
            }
        }
        if self.opts.pot_augmentation && self.ord.kind() == ModuleOrderKind::Pot {
            let added = pot_augment(
                &mut self.syz,
                &element.labeled,
                self.inputs.len(),
                &self.ord,
            )?;
            if let Some(cert) = &element.labeled.cert {
                for sig in added {
                    let witness = self.principal_syzygy(&element.labeled, cert, sig.index);
                    self.check_syzygy(sig, &witness)?;
                    self.witnesses.push(SyzygyWitness { sig, cert: witness });
                }
            }
        }
        self.basis.push(element)
    }

    /// `f_j·cert(f) − f·e_j`
    fn principal_syzygy(
        &self,
        f: &LabeledPolynomial,
        cert: &ModuleElement,
        j: usize,
    ) -> ModuleElement {
        let ring = self.ring;
        let mut out = ModuleElement::from_components(
            cert.components()
                .iter()
                .map(|c| ring.mul(c, &self.inputs[j]))
                .collect(),
        );
        let cj = out.components()[j].clone();
        out.components_mut()[j] = ring.sub(&cj, &f.poly);
        out
    }

    fn check_certificate(&self, p: &LabeledPolynomial) -> Result<()> {
        if !self.opts.certified {
            return Ok(());
        }
        if certify(self.ring, p, self.inputs, &self.ord)? {
            Ok(())
        } else {
            Err(Error::CertificateMismatch(alloc::format!("{}", p.sig)))
        }
    }

    fn check_syzygy(&self, sig: ModuleTerm, cert: &ModuleElement) -> Result<()> {
        let p = LabeledPolynomial {
            poly: Polynomial::zero(),
            sig,
            cert: Some(cert.clone()),
        };
        self.check_certificate(&p)
    }
}

/// Post-hoc check of the criterion the algorithm establishes on its output:
/// every `e_i` outside `⟨L⟩` is the signature of a basis element, and for
/// every normal pair the larger of `u_1·σ_1`, `u_2·σ_2` is a multiple of
/// some basis signature.
pub fn satisfies_f5_criterion(ring: &Ring, output: &SgbOutput, module_order: &ModuleOrder) -> bool {
    let basis = &output.basis;
    let syz = &output.syzygies;
    for i in 0..syz.components() {
        let e = ModuleTerm::unit(ring.nvars(), i);
        if !syz.contains(&e) && !basis.iter().any(|g| g.labeled.sig == e) {
            return false;
        }
    }
    for (a, g1) in basis.iter().enumerate() {
        for g2 in basis.iter().skip(a + 1) {
            if !is_normal_pair(g1, g2, syz) {
                continue;
            }
            let p1 = &g1.labeled.poly;
            let p2 = &g2.labeled.poly;
            let l = p1.lm().lcm(p2.lm());
            let s1 = g1.labeled.sig.mul(&p1.lm().quotient_of(&l).expect("lcm"));
            let s2 = g2.labeled.sig.mul(&p2.lm().quotient_of(&l).expect("lcm"));
            let sig = *module_order.max(&s1, &s2);
            let covered = basis
                .iter()
                .any(|g| g.labeled.sig.divides(&sig) && !syz.contains(&sig));
            if !covered {
                return false;
            }
        }
    }
    true
}
