use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algebra::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::signatures::{ModuleOrder, ModuleTerm};

use super::LabeledPolynomial;

/// An element `Σ c_i·e_i` of the free module, used as a certificate that a
/// polynomial equals `Σ c_i·f_i` for the input generators `f_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleElement {
    components: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn zero(components: usize) -> Self {
        Self {
            components: alloc::vec![Polynomial::zero(); components],
        }
    }

    /// `c · e_index`
    pub fn unit(ring: &Ring, components: usize, index: usize) -> Self {
        let mut out = Self::zero(components);
        out.components[index] = ring.one();
        out
    }

    pub fn from_components(components: Vec<Polynomial>) -> Self {
        Self { components }
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn components_mut(&mut self) -> &mut [Polynomial] {
        &mut self.components
    }

    pub fn scale(&self, ring: &Ring, c: u32) -> Self {
        Self {
            components: self.components.iter().map(|p| ring.scale(p, c)).collect(),
        }
    }

    /// `self − α·t·other`
    pub fn axpy(&self, ring: &Ring, alpha: u32, t: &Monomial, other: &Self) -> Self {
        Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| ring.axpy(a, alpha, t, b))
                .collect(),
        }
    }

    /// `ν(self) = Σ c_i·f_i`
    pub fn evaluate(&self, ring: &Ring, inputs: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (c, f) in self.components.iter().zip(inputs) {
            if !c.is_zero() {
                acc = ring.add(&acc, &ring.mul(c, f));
            }
        }
        acc
    }

    /// Leading module term under `ord`, scanning every term.
    pub fn leading_term(&self, ord: &ModuleOrder) -> Option<ModuleTerm> {
        let mut best: Option<ModuleTerm> = None;
        for (i, c) in self.components.iter().enumerate() {
            for t in c.terms() {
                let cand = ModuleTerm::new(t.mon, i);
                if best.is_none_or(|b| ord.compare(&cand, &b) == Ordering::Greater) {
                    best = Some(cand);
                }
            }
        }
        best
    }
}

/// Checks `ν(cert) = p.poly` and that the leading module term of the
/// certificate is `p.sig`.
///
/// For a zero polynomial this certifies `p.sig ∈ LT(syz F)`.
pub fn certify(
    ring: &Ring,
    p: &LabeledPolynomial,
    inputs: &[Polynomial],
    ord: &ModuleOrder,
) -> Result<bool> {
    let cert = p.cert.as_ref().ok_or(Error::CertificateMissing)?;
    Ok(cert.evaluate(ring, inputs) == p.poly && cert.leading_term(ord) == Some(p.sig))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TermOrder;

    fn appendix_setup() -> (Ring, Vec<Polynomial>) {
        let r = Ring::default_for(3);
        let f1 = r.poly(&[(1, &[2, 0, 0]), (1, &[1, 1, 0])]);
        let f2 = r.poly(&[(1, &[1, 1, 0]), (1, &[0, 0, 2])]);
        (r, alloc::vec![f1, f2])
    }

    #[test]
    fn generators_certify() {
        let (r, f) = appendix_setup();
        let ord = ModuleOrder::pot(TermOrder::degrevlex(3));
        for i in 0..2 {
            let p = LabeledPolynomial {
                poly: f[i].clone(),
                sig: ModuleTerm::unit(3, i),
                cert: Some(ModuleElement::unit(&r, 2, i)),
            };
            assert!(certify(&r, &p, &f, &ord).unwrap());
        }
    }

    #[test]
    fn koszul_syzygy_certifies_z2_e1() {
        use crate::signatures::ModuleOrderKind;
        let (r, f) = appendix_setup();
        // f2·e1 − f1·e2
        let cert = ModuleElement::from_components(alloc::vec![f[1].clone(), r.neg(&f[0])]);
        let z2e1 = ModuleTerm::new(Monomial::from_exponents(&[0, 0, 2]).unwrap(), 0);
        let p = LabeledPolynomial {
            poly: Polynomial::zero(),
            sig: z2e1,
            cert: Some(cert.clone()),
        };
        let appendix = ModuleOrder::new(ModuleOrderKind::Appendix, TermOrder::degrevlex(3)).unwrap();
        assert!(certify(&r, &p, &f, &appendix).unwrap());
        // under POT the leading term sits in component 2 instead
        let pot = ModuleOrder::pot(TermOrder::degrevlex(3));
        assert!(!certify(&r, &p, &f, &pot).unwrap());
        assert_eq!(
            cert.leading_term(&pot),
            Some(ModuleTerm::new(Monomial::from_exponents(&[2, 0, 0]).unwrap(), 1))
        );

        // negative control: perturb one coefficient
        let mut bad = cert.clone();
        let c0 = bad.components()[0].clone();
        bad.components_mut()[0] = r.add(&c0, &r.one());
        let q = LabeledPolynomial {
            cert: Some(bad),
            ..p.clone()
        };
        assert!(!certify(&r, &q, &f, &appendix).unwrap());

        let missing = LabeledPolynomial { cert: None, ..p };
        assert_eq!(certify(&r, &missing, &f, &appendix), Err(Error::CertificateMissing));
    }
}
