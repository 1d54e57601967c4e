use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;

use super::{Monomial, PrimeField, TermOrder};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u32,
    pub mon: Monomial,
}

/// A sparse polynomial: nonzero terms, strictly descending under the ring's
/// term order. The zero polynomial has no terms.
///
/// Polynomials do not carry their ring; every operation goes through a
/// [`Ring`], and mixing rings is a logic error.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Leading monomial; panics on zero.
    #[inline]
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].mon
    }

    /// Leading coefficient; panics on zero.
    #[inline]
    pub fn lc(&self) -> u32 {
        self.terms[0].coeff
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mon.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mon.degree() == t.mon.degree()),
        }
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }
}

/// Coefficient field plus term order: the context for all polynomial
/// arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    pub field: PrimeField,
    pub order: TermOrder,
}

impl Ring {
    pub fn new(field: PrimeField, order: TermOrder) -> Self {
        Self { field, order }
    }

    /// `GF(32003)` with degrevlex on `nvars` variables.
    pub fn default_for(nvars: usize) -> Self {
        Self::new(PrimeField::default(), TermOrder::degrevlex(nvars))
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    pub fn one(&self) -> Polynomial {
        self.monomial(1, Monomial::one(self.nvars()))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.monomial(1, Monomial::var(self.nvars(), i))
    }

    pub fn monomial(&self, coeff: u32, mon: Monomial) -> Polynomial {
        let coeff = coeff % self.field.characteristic();
        if coeff == 0 {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: alloc::vec![Term { coeff, mon }],
            }
        }
    }

    /// Canonical polynomial from arbitrary (coefficient, monomial) pairs:
    /// sorts, merges duplicates and drops zeros.
    pub fn from_terms<I>(&self, terms: I) -> Result<Polynomial>
    where
        I: IntoIterator<Item = (i64, Monomial)>,
    {
        let mut raw = Vec::new();
        for (c, m) in terms {
            if m.nvars() != self.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: self.nvars(),
                    found: m.nvars(),
                });
            }
            raw.push(Term {
                coeff: self.field.from_i64(c),
                mon: m,
            });
        }
        Ok(self.canonicalize(raw))
    }

    /// Builds from exponent slices; convenient for fixtures.
    pub fn poly(&self, terms: &[(i64, &[u32])]) -> Polynomial {
        self.from_terms(
            terms
                .iter()
                .map(|(c, e)| (*c, Monomial::from_exponents(e).expect("bad exponents"))),
        )
        .expect("bad polynomial fixture")
    }

    fn canonicalize(&self, mut raw: Vec<Term>) -> Polynomial {
        raw.sort_by(|a, b| self.cmp(&b.mon, &a.mon));
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match out.last_mut() {
                Some(last) if last.mon == t.mon => {
                    last.coeff = self.field.add(last.coeff, t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        Polynomial { terms: out }
    }

    /// Sorted, no zero coefficients, no repeated monomials.
    pub fn is_canonical(&self, f: &Polynomial) -> bool {
        let p = self.field.characteristic();
        f.terms
            .iter()
            .all(|t| t.coeff != 0 && t.coeff < p && t.mon.nvars() == self.nvars())
            && f.terms
                .windows(2)
                .all(|w| self.cmp(&w[0].mon, &w[1].mon) == Ordering::Greater)
    }

    pub fn scale(&self, f: &Polynomial, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(t.coeff, c),
                    mon: t.mon,
                })
                .collect(),
        }
    }

    /// `c·t·f`
    pub fn mul_term(&self, f: &Polynomial, c: u32, t: &Monomial) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|s| Term {
                    coeff: self.field.mul(s.coeff, c),
                    mon: s.mon.mul(t),
                })
                .collect(),
        }
    }

    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        if f.is_zero() || f.lc() == 1 {
            return f.clone();
        }
        self.scale(f, self.field.inv(f.lc()))
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(1))
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.axpy(f, self.field.neg(1), &Monomial::one(self.nvars()), g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.axpy(f, 1, &Monomial::one(self.nvars()), g)
    }

    /// `f − α·t·g` in canonical form.
    pub fn axpy(&self, f: &Polynomial, alpha: u32, t: &Monomial, g: &Polynomial) -> Polynomial {
        let out = Polynomial {
            terms: self.axpy_slice(&f.terms, alpha, t, &g.terms),
        };
        debug_assert!(self.is_canonical(&out));
        out
    }

    pub(crate) fn axpy_slice(
        &self,
        f: &[Term],
        alpha: u32,
        t: &Monomial,
        g: &[Term],
    ) -> Vec<Term> {
        let k = &self.field;
        let neg_alpha = k.neg(alpha % k.characteristic());
        if neg_alpha == 0 {
            return f.to_vec();
        }
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut i = 0;
        let mut j = 0;
        let mut next_g = g.first().map(|s| s.mon.mul(t));
        while i < f.len() {
            let Some(gm) = next_g else { break };
            match self.cmp(&f[i].mon, &gm) {
                Ordering::Greater => {
                    out.push(f[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: k.mul(g[j].coeff, neg_alpha),
                        mon: gm,
                    });
                    j += 1;
                    next_g = g.get(j).map(|s| s.mon.mul(t));
                }
                Ordering::Equal => {
                    let c = k.add(f[i].coeff, k.mul(g[j].coeff, neg_alpha));
                    if c != 0 {
                        out.push(Term { coeff: c, mon: gm });
                    }
                    i += 1;
                    j += 1;
                    next_g = g.get(j).map(|s| s.mon.mul(t));
                }
            }
        }
        out.extend_from_slice(&f[i..]);
        while j < g.len() {
            out.push(Term {
                coeff: k.mul(g[j].coeff, neg_alpha),
                mon: g[j].mon.mul(t),
            });
            j += 1;
        }
        out
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let mut raw = Vec::with_capacity(f.len() * g.len());
        for a in &f.terms {
            for b in &g.terms {
                raw.push(Term {
                    coeff: self.field.mul(a.coeff, b.coeff),
                    mon: a.mon.mul(&b.mon),
                });
            }
        }
        self.canonicalize(raw)
    }

    /// Classical S-polynomial `(L/LT f)·f/LC f − (L/LT g)·g/LC g` with `L` the lcm.
    pub fn spoly(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let l = f.lm().lcm(g.lm());
        let uf = f.lm().quotient_unchecked(&l);
        let ug = g.lm().quotient_unchecked(&l);
        let left = self.mul_term(f, self.field.inv(f.lc()), &uf);
        self.axpy(&left, self.field.inv(g.lc()), &ug, g)
    }

    /// Fully reduces `f` modulo `basis`.
    ///
    /// Among reductors whose leading monomial divides the current term, the
    /// one with the smallest leading monomial wins, then the earliest index.
    /// The result is not rescaled.
    pub fn normal_form(&self, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
        self.normal_form_counted(f, basis).0
    }

    pub(crate) fn normal_form_counted(
        &self,
        f: &Polynomial,
        basis: &[Polynomial],
    ) -> (Polynomial, u64) {
        let mut rem: Vec<Term> = Vec::new();
        let mut p = f.terms.clone();
        let mut pos = 0;
        let mut steps = 0u64;
        while pos < p.len() {
            let lead = p[pos];
            match self.pick_reductor(&lead.mon, basis) {
                Some(gi) => {
                    let g = &basis[gi];
                    let t = g.lm().quotient_unchecked(&lead.mon);
                    let alpha = self.field.div(lead.coeff, g.lc());
                    p = self.axpy_slice(&p[pos..], alpha, &t, &g.terms);
                    pos = 0;
                    steps += 1;
                }
                None => {
                    rem.push(lead);
                    pos += 1;
                }
            }
        }
        let out = Polynomial { terms: rem };
        debug_assert!(self.is_canonical(&out));
        (out, steps)
    }

    fn pick_reductor(&self, m: &Monomial, basis: &[Polynomial]) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, g) in basis.iter().enumerate() {
            if g.is_zero() || !g.lm().divides(m) {
                continue;
            }
            match best {
                Some(b) if self.cmp(g.lm(), basis[b].lm()) != Ordering::Less => {}
                _ => best = Some(i),
            }
        }
        best
    }

    /// Multiplies every term by a power of a new last variable `h` so the
    /// result is homogeneous of degree `deg f`. The result lives in
    /// [`Ring::homogenized`].
    pub fn homogenize(&self, f: &Polynomial) -> Polynomial {
        let target = self.homogenized();
        let d = f.total_degree().unwrap_or(0);
        let raw = f
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff,
                mon: t.mon.extend(d - t.mon.degree()),
            })
            .collect();
        target.canonicalize(raw)
    }

    /// Ring with one extra variable, appended as the smallest.
    pub fn homogenized(&self) -> Ring {
        Ring::new(self.field, self.order.extended())
    }

    /// Sets the last variable to 1; `self` is the homogenized ring.
    pub fn dehomogenize(&self, f: &Polynomial) -> Polynomial {
        let mut order = self.order.precedence().to_vec();
        let last = self.nvars() - 1;
        order.retain(|&v| v != last);
        let target = Ring::new(
            self.field,
            TermOrder::with_precedence(self.order.kind(), order).expect("valid precedence"),
        );
        let raw = f
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff,
                mon: t.mon.truncate_last(),
            })
            .collect();
        target.canonicalize(raw)
    }

    /// Canonical text form: descending terms, least non-negative residues,
    /// `0` for the zero polynomial.
    pub fn format(&self, f: &Polynomial, names: &[&str]) -> String {
        let mut s = String::new();
        if f.is_zero() {
            s.push('0');
            return s;
        }
        for (i, t) in f.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            if t.mon.is_one() {
                let _ = write!(s, "{}", t.coeff);
            } else {
                if t.coeff != 1 {
                    let _ = write!(s, "{}*", t.coeff);
                }
                let _ = t.mon.write_with(&mut s, names);
            }
        }
        s
    }

    /// Format with default names `x0, x1, ...`.
    pub fn display(&self, f: &Polynomial) -> String {
        let names: Vec<String> = (0..self.nvars()).map(|i| alloc::format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.format(f, &refs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // x > y > z
    fn r3() -> Ring {
        Ring::default_for(3)
    }

    #[test]
    fn axpy_cancellation() {
        let r = r3();
        let one = Monomial::one(3);
        let f = r.poly(&[(1, &[2, 0, 0]), (1, &[1, 1, 0])]);
        assert!(r.axpy(&f, 1, &one, &f).is_zero());
        let x2y = r.poly(&[(1, &[2, 1, 0])]);
        let x2 = r.poly(&[(1, &[2, 0, 0])]);
        let y = Monomial::from_exponents(&[0, 1, 0]).unwrap();
        assert!(r.axpy(&x2y, 1, &y, &x2).is_zero());
    }

    #[test]
    fn axpy_appendix_step() {
        // y·f1 − x·f2 with f1 = x^2+xy, f2 = xy+z^2 gives xy^2 − xz^2
        let r = r3();
        let one = Monomial::one(3);
        let f1 = r.poly(&[(1, &[2, 0, 0]), (1, &[1, 1, 0])]);
        let f2 = r.poly(&[(1, &[1, 1, 0]), (1, &[0, 0, 2])]);
        let y = Monomial::from_exponents(&[0, 1, 0]).unwrap();
        let x = Monomial::from_exponents(&[1, 0, 0]).unwrap();
        let yf1 = r.mul_term(&f1, 1, &y);
        let got = r.axpy(&yf1, 1, &x, &f2);
        // y f1 − x f2 = xy^2 − xz^2
        assert_eq!(got, r.poly(&[(1, &[1, 2, 0]), (-1, &[1, 0, 2])]));
        let _ = one;
    }

    #[test]
    fn normal_form_examples() {
        let r = r3();
        let x = r.var(0);
        let y = r.var(1);
        let z = r.var(2);
        let x2 = r.mul(&x, &x);
        assert!(r.normal_form(&x2, core::slice::from_ref(&x)).is_zero());
        assert_eq!(r.normal_form(&z, &[x.clone(), y.clone()]), z);

        let f1 = r.poly(&[(1, &[2, 0, 0]), (1, &[1, 1, 0])]);
        let f2 = r.poly(&[(1, &[1, 1, 0]), (1, &[0, 0, 2])]);
        let s = r.spoly(&f1, &f2);
        // y f1 − x f2 = xy^2 − xz^2; reducible by nothing: xy^2 not divisible by x^2 or xy?
        // xy | xy^2, so the normal form continues: xy^2 − y(xy+z^2) = −yz^2, then − xz^2 stays.
        let nf = r.normal_form(&s, &[f1.clone(), f2.clone()]);
        assert!(!nf.is_zero());
        for t in nf.terms() {
            assert!(!f1.lm().divides(&t.mon) && !f2.lm().divides(&t.mon));
        }
        // hand expansion: xy^2 − xz^2 → −xz^2 − yz^2
        assert_eq!(nf, r.poly(&[(-1, &[1, 0, 2]), (-1, &[0, 1, 2])]));
    }

    #[test]
    fn homogenize_examples() {
        let r = r3();
        // x^2 y + z − 1  →  x^2 y + z h^2 − h^3
        let f = r.poly(&[(1, &[2, 1, 0]), (1, &[0, 0, 1]), (-1, &[0, 0, 0])]);
        let h = r.homogenize(&f);
        let rh = r.homogenized();
        assert_eq!(
            h,
            rh.poly(&[(1, &[2, 1, 0, 0]), (1, &[0, 0, 1, 2]), (-1, &[0, 0, 0, 3])])
        );
        assert!(h.is_homogeneous());
        assert_eq!(rh.dehomogenize(&h), f);

        // MMT92 f2 = xz^2 − y^2 t is homogeneous already
        let r4 = Ring::default_for(4);
        let f2 = r4.poly(&[(1, &[1, 0, 2, 0]), (-1, &[0, 2, 0, 1])]);
        let h2 = r4.homogenize(&f2);
        assert_eq!(r4.homogenized().dehomogenize(&h2), f2);
        assert!(h2.terms().iter().all(|t| t.mon.exponent(4) == 0));
    }

    #[test]
    fn format_is_canonical() {
        let r = Ring::new(PrimeField::new(7).unwrap(), TermOrder::lex(1));
        let f = r.poly(&[(1, &[2]), (-1, &[0])]);
        assert_eq!(r.format(&f, &["x"]), "x^2 + 6");
        assert_eq!(r.format(&Polynomial::zero(), &["x"]), "0");
    }

    fn small_poly() -> impl Strategy<Value = Vec<(i64, [u32; 3])>> {
        proptest::collection::vec((-3i64..4, [0u32..3, 0u32..3, 0u32..3]), 0..6)
    }

    fn build(r: &Ring, raw: &[(i64, [u32; 3])]) -> Polynomial {
        r.from_terms(
            raw.iter()
                .map(|(c, e)| (*c, Monomial::from_exponents(e).unwrap())),
        )
        .unwrap()
    }

    proptest! {
        #[test]
        fn axpy_stays_canonical(a in small_poly(), b in small_poly(), alpha in 0u32..7, e in [0u32..2, 0u32..2, 0u32..2]) {
            let r = Ring::new(PrimeField::new(7).unwrap(), TermOrder::degrevlex(3));
            let f = build(&r, &a);
            let g = build(&r, &b);
            let t = Monomial::from_exponents(&e).unwrap();
            let out = r.axpy(&f, alpha, &t, &g);
            prop_assert!(r.is_canonical(&out));
            // compare against the naive construction
            let naive = r.sub(&f, &r.mul_term(&g, alpha, &t));
            prop_assert_eq!(out, naive);
        }

        #[test]
        fn normal_form_idempotent(a in small_poly(), b in small_poly(), c in small_poly()) {
            let r = Ring::new(PrimeField::new(7).unwrap(), TermOrder::degrevlex(3));
            let f = build(&r, &a);
            let basis: Vec<_> = [build(&r, &b), build(&r, &c)].into_iter().filter(|p| !p.is_zero()).collect();
            let nf = r.normal_form(&f, &basis);
            prop_assert_eq!(r.normal_form(&nf, &basis), nf.clone());
            for t in nf.terms() {
                prop_assert!(basis.iter().all(|g| !g.lm().divides(&t.mon)));
            }
        }
    }
}
