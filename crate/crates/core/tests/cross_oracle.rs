use sigbasis::baselines::{buchberger, reduced_gb, slb, verify_gb};
use sigbasis::bench::{builtin, homogenize_system, BenchmarkSystem};
use sigbasis::siggb::{sgb, SgbOptions};
use sigbasis::ModuleOrderKind;

fn system(name: &str) -> BenchmarkSystem {
    homogenize_system(&builtin(name).unwrap())
}

fn check(name: &str) {
    let s = system(name);
    let r = &s.ring;
    let g_sgb = sgb(r, &s.polynomials, ModuleOrderKind::Pot, SgbOptions::default())
        .unwrap()
        .polynomials();
    let (g_bb, _) = buchberger(r, &s.polynomials, true);
    let (g_slb, _) = slb(r, &s.polynomials);
    let a = reduced_gb(r, &g_sgb).unwrap();
    let b = reduced_gb(r, &g_bb).unwrap();
    let c = reduced_gb(r, &g_slb).unwrap();
    assert_eq!(a, b, "{name}: sgb vs buchberger");
    assert_eq!(b, c, "{name}: buchberger vs slb");
    assert!(verify_gb(r, &a));
}

#[test]
fn mmt92() {
    check("mmt92");
}

#[test]
fn cyclic5() {
    check("cyclic-5");
}

#[test]
fn katsura5() {
    check("katsura-5");
}

#[test]
fn cyclic6() {
    check("cyclic-6");
}

#[test]
fn top_order_agrees() {
    for name in ["mmt92", "cyclic-4", "katsura-3"] {
        let s = system(name);
        let r = &s.ring;
        let pot = sgb(r, &s.polynomials, ModuleOrderKind::Pot, SgbOptions::default()).unwrap();
        let top = sgb(r, &s.polynomials, ModuleOrderKind::Top, SgbOptions::default()).unwrap();
        assert_eq!(
            reduced_gb(r, &pot.polynomials()).unwrap(),
            reduced_gb(r, &top.polynomials()).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn options_do_not_change_the_ideal() {
    let s = system("cyclic-4");
    let r = &s.ring;
    let reference = reduced_gb(r, &buchberger(r, &s.polynomials, false).0).unwrap();
    for (aug, rw) in [(false, false), (false, true), (true, false), (true, true)] {
        let opts = SgbOptions {
            pot_augmentation: aug,
            rewritable: rw,
            ..SgbOptions::default()
        };
        let g = sgb(r, &s.polynomials, ModuleOrderKind::Pot, opts).unwrap().polynomials();
        assert_eq!(reduced_gb(r, &g).unwrap(), reference, "augment={aug} rewritable={rw}");
    }
}
