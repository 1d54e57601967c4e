use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigbasis::baselines::{buchberger, reduced_gb, slb, verify_gb};
use sigbasis::siggb::{sgb, SgbOptions};
use sigbasis::{ModuleOrderKind, Monomial, Polynomial, PrimeField, Ring, TermOrder};

fn random_poly(r: &Ring, rng: &mut ChaCha8Rng) -> Polynomial {
    loop {
        let nterms = rng.gen_range(1..=4);
        let terms = (0..nterms).map(|_| {
            let deg = rng.gen_range(0..=3u32);
            let a = rng.gen_range(0..=deg);
            let b = rng.gen_range(0..=deg - a);
            let mon = Monomial::from_exponents(&[a, b, deg - a - b]).unwrap();
            (rng.gen_range(1..7i64), mon)
        });
        let f = r.from_terms(terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

#[test]
fn fifty_random_systems_over_gf7() {
    let r = Ring::new(PrimeField::new(7).unwrap(), TermOrder::degrevlex(3));
    let mut rng = ChaCha8Rng::seed_from_u64(20240607);
    for case in 0..50 {
        let f: Vec<Polynomial> = (0..3).map(|_| random_poly(&r, &mut rng)).collect();
        let g_sgb = sgb(&r, &f, ModuleOrderKind::Pot, SgbOptions::default())
            .unwrap()
            .polynomials();
        let (g_bb, _) = buchberger(&r, &f, true);
        let (g_slb, _) = slb(&r, &f);
        assert!(verify_gb(&r, &g_sgb), "case {case}: sgb");
        assert!(verify_gb(&r, &g_bb), "case {case}: buchberger");
        assert!(verify_gb(&r, &g_slb), "case {case}: slb");
        let reference = reduced_gb(&r, &g_bb).unwrap();
        assert_eq!(reduced_gb(&r, &g_sgb).unwrap(), reference, "case {case}");
        assert_eq!(reduced_gb(&r, &g_slb).unwrap(), reference, "case {case}");
    }
}

fn random_homogeneous(r: &Ring, rng: &mut ChaCha8Rng) -> Polynomial {
    let n = r.nvars();
    let deg = rng.gen_range(1..=3u32);
    loop {
        let terms = (0..rng.gen_range(1..=4)).map(|_| {
            let mut e = vec![0u32; n];
            for _ in 0..deg {
                e[rng.gen_range(0..n)] += 1;
            }
            (rng.gen_range(1..7i64), Monomial::from_exponents(&e).unwrap())
        });
        let f = r.from_terms(terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

#[test]
fn homogeneous_systems_in_four_variables() {
    let r = Ring::new(PrimeField::new(7).unwrap(), TermOrder::degrevlex(4));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..300 {
        let f: Vec<Polynomial> = (0..4).map(|_| random_homogeneous(&r, &mut rng)).collect();
        let (g_slb, _) = slb(&r, &f);
        let (g_bb, _) = buchberger(&r, &f, true);
        assert!(verify_gb(&r, &g_slb), "case {case}");
        assert_eq!(reduced_gb(&r, &g_slb).unwrap(), reduced_gb(&r, &g_bb).unwrap(), "case {case}");
    }
}
