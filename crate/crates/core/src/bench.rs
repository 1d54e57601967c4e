//! Benchmark systems: MMT92, Cyclic-n and Katsura-n.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Buchberger,
    Slb,
    Sgb,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Slb, Algorithm::Sgb, Algorithm::Buchberger];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Buchberger => "buchberger",
            Self::Slb => "slb",
            Self::Sgb => "sgb",
        }
    }
}

/// Published `(zero reductions, basis size)` pairs for one system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expected {
    pub slb: (u64, u64),
    pub f5: (u64, u64),
    pub sgb: (u64, u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchmarkSystem {
    pub name: String,
    pub variables: Vec<String>,
    pub ring: Ring,
    pub polynomials: Vec<Polynomial>,
    pub homogenized: bool,
    pub expected: Option<Expected>,
}

impl BenchmarkSystem {
    pub fn variable_names(&self) -> Vec<&str> {
        self.variables.iter().map(String::as_str).collect()
    }
}

fn named_vars(prefix: &str, range: core::ops::Range<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

/// `{yz^3 − x^2t^2, xz^2 − y^2t, x^2y − z^2t}` in `x > y > z > t`.
pub fn gen_mmt92() -> BenchmarkSystem {
    let ring = Ring::default_for(4);
    let polynomials = alloc::vec![
        ring.poly(&[(1, &[0, 1, 3, 0]), (-1, &[2, 0, 0, 2])]),
        ring.poly(&[(1, &[1, 0, 2, 0]), (-1, &[0, 2, 0, 1])]),
        ring.poly(&[(1, &[2, 1, 0, 0]), (-1, &[0, 0, 2, 1])]),
    ];
    BenchmarkSystem {
        name: "mmt92".into(),
        variables: ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect(),
        ring,
        polynomials,
        homogenized: false,
        expected: Some(Expected {
            slb: (3, 8),
            f5: (0, 10),
            sgb: (0, 10),
        }),
    }
}

/// Cyclic-n: for `k = 1..n−1` the sum over cyclic shifts of `x_i···x_{i+k−1}`,
/// then `x_1···x_n − 1`.
pub fn gen_cyclic(n: usize) -> Result<BenchmarkSystem> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("cyclic-{n}: need n >= 2")));
    }
    if n > crate::MAX_VARS - 1 {
        return Err(Error::TooManyVariables(n));
    }
    let ring = Ring::default_for(n);
    let mut polynomials = Vec::with_capacity(n);
    for k in 1..n {
        let terms = (0..n).map(|i| {
            let mut e = alloc::vec![0u32; n];
            for j in 0..k {
                e[(i + j) % n] += 1;
            }
            (1i64, Monomial::from_exponents(&e).expect("exponents"))
        });
        polynomials.push(ring.from_terms(terms)?);
    }
    let all = Monomial::from_exponents(&alloc::vec![1u32; n])?;
    polynomials.push(ring.from_terms([(1, all), (-1, Monomial::one(n))])?);
    let expected = match n {
        5 => Some(Expected {
            slb: (46, 38),
            f5: (0, 39),
            sgb: (0, 39),
        }),
        6 => Some(Expected {
            slb: (446, 99),
            f5: (16, 202),
            sgb: (8, 155),
        }),
        _ => None,
    };
    Ok(BenchmarkSystem {
        name: format!("cyclic-{n}"),
        variables: named_vars("x", 1..n + 1),
        ring,
        polynomials,
        homogenized: false,
        expected,
    })
}

/// Katsura-n in `u_0 > ... > u_n`: `u_0 + 2·Σ u_i − 1`, then for `k < n`
/// `Σ_{i=−n..n} u_|i|·u_|k−i| − u_k` (terms with `|k−i| > n` dropped).
pub fn gen_katsura(n: usize) -> Result<BenchmarkSystem> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("katsura-{n}: need n >= 2")));
    }
    let nv = n + 1;
    if nv > crate::MAX_VARS - 1 {
        return Err(Error::TooManyVariables(nv));
    }
    let ring = Ring::default_for(nv);
    let var = |i: usize| Monomial::var(nv, i);
    let mut polynomials = Vec::with_capacity(nv);
    let mut linear: Vec<(i64, Monomial)> = alloc::vec![(1, var(0)), (-1, Monomial::one(nv))];
    linear.extend((1..nv).map(|i| (2, var(i))));
    polynomials.push(ring.from_terms(linear)?);
    let n = n as i64;
    for k in 0..n {
        let mut terms: Vec<(i64, Monomial)> = Vec::new();
        for i in -n..=n {
            let j = (k - i).abs();
            if j > n {
                continue;
            }
            terms.push((1, var(i.unsigned_abs() as usize).mul(&var(j as usize))));
        }
        terms.push((-1, var(k as usize)));
        polynomials.push(ring.from_terms(terms)?);
    }
    let expected = (n == 5).then_some(Expected {
        slb: (10, 22),
        f5: (0, 30),
        sgb: (0, 30),
    });
    Ok(BenchmarkSystem {
        name: format!("katsura-{n}"),
        variables: named_vars("u", 0..nv),
        ring,
        polynomials,
        homogenized: false,
        expected,
    })
}

/// Homogenizes every generator with a shared new smallest variable `h`.
/// Systems that are already homogeneous come back unchanged.
pub fn homogenize_system(system: &BenchmarkSystem) -> BenchmarkSystem {
    if system.polynomials.iter().all(Polynomial::is_homogeneous) {
        return system.clone();
    }
    let ring = system.ring.homogenized();
    let mut name = String::from("h");
    while system.variables.contains(&name) {
        name.push('_');
    }
    let mut variables = system.variables.clone();
    variables.push(name);
    BenchmarkSystem {
        name: system.name.clone(),
        variables,
        polynomials: system
            .polynomials
            .iter()
            .map(|f| system.ring.homogenize(f))
            .collect(),
        ring,
        homogenized: true,
        expected: system.expected,
    }
}

/// Resolves `mmt92`, `cyclic-N` and `katsura-N`.
pub fn builtin(name: &str) -> Result<BenchmarkSystem> {
    let lower = name.to_ascii_lowercase();
    let parse_n = |rest: &str| {
        rest.parse::<usize>()
            .map_err(|_| Error::InvalidParameter(format!("bad size in builtin {name:?}")))
    };
    if lower == "mmt92" {
        Ok(gen_mmt92())
    } else if let Some(rest) = lower.strip_prefix("cyclic-") {
        gen_cyclic(parse_n(rest)?)
    } else if let Some(rest) = lower.strip_prefix("katsura-") {
        gen_katsura(parse_n(rest)?)
    } else {
        Err(Error::InvalidParameter(format!("unknown builtin system {name:?}")))
    }
}
