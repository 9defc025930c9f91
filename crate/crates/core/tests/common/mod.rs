//! Helpers shared by the integration targets: random inputs and oracles that
//! avoid the library's own reduction code.

#![allow(dead_code)]

use kmcomplex::gb::FreeModuleMap;
use kmcomplex::ring::{Coeff, Field, Monomial, MonomialOrder, PolyRing, Polynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::path::PathBuf;

pub mod props;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn ring(n: usize, field: Field, order: MonomialOrder) -> PolyRing {
    let names: Vec<String> = (1..=n).map(|i| format!("x_{i}")).collect();
    PolyRing::new(&names, &vec![1; n], field, order).unwrap()
}

/// Exponent vectors of all monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u16) -> Vec<Vec<u16>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

/// Homogeneous polynomial of degree `d`: `picks` are (monomial index, coefficient).
pub fn poly_from_picks(ring: &PolyRing, d: u16, picks: &[(usize, i64)]) -> Polynomial {
    let monos = monomials_of_degree(ring.nvars(), d);
    let f = ring.field();
    let terms = picks
        .iter()
        .map(|&(k, c)| (Monomial::from_exponents(&monos[k % monos.len()]), f.from_i64(c)))
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn lead(p: &Polynomial) -> (Monomial, Coeff) {
    let ring = p.ring();
    let (m, c) = p
        .terms()
        .iter()
        .max_by(|a, b| ring.cmp_monomials(&a.0, &b.0))
        .expect("nonzero polynomial");
    (m.clone(), c.clone())
}

fn term(ring: &PolyRing, m: Monomial, c: Coeff) -> Polynomial {
    Polynomial::from_terms(ring, vec![(m, c)])
}

/// Remainder of multivariate division of `p` by `divisors`, textbook style.
pub fn remainder(p: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let ring = p.ring().clone();
    let leads: Vec<_> = divisors.iter().map(lead).collect();
    let mut p = p.clone();
    let mut rem = ring.zero();
    while !p.is_zero() {
        let (m, c) = lead(&p);
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(k) => {
                let (lm, lc) = &leads[k];
                let q = term(&ring, m.div(lm).unwrap(), &c * &lc.inv().unwrap());
                p = &p - &(&q * &divisors[k]);
            }
            None => {
                let t = term(&ring, m, c);
                rem = &rem + &t;
                p = &p - &t;
            }
        }
    }
    rem
}

/// `S(f, g)` with monic leading coefficients.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring();
    let (mf, cf) = lead(f);
    let (mg, cg) = lead(g);
    let l = mf.lcm(&mg);
    let a = term(ring, l.div(&mf).unwrap(), cf.inv().unwrap());
    let b = term(ring, l.div(&mg).unwrap(), cg.inv().unwrap());
    &(&a * f) - &(&b * g)
}

/// Buchberger's criterion checked pair by pair.
pub fn is_groebner_basis(g: &[Polynomial]) -> bool {
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            if !remainder(&s_polynomial(&g[i], &g[j]), g).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Determinant by Gaussian elimination over the rationals.
pub fn det_rational(m: &[Vec<i64>]) -> BigRational {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= a[col][col].clone();
        for r in col + 1..n {
            let f = &a[r][col] / &a[col][col];
            for c in col..n {
                let v = &f * &a[col][c];
                a[r][c] -= v;
            }
        }
    }
    det
}

/// Determinant by the Leibniz formula.
pub fn det_leibniz(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    let ring = m[0][0].ring().clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = ring.zero();
    permute(&mut perm, 0, &mut |p| {
        let mut prod = ring.one();
        for (i, &j) in p.iter().enumerate() {
            prod = &prod * &m[i][j];
        }
        if sign(p) < 0 {
            prod = -&prod;
        }
        total = &total + &prod;
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

fn sign(p: &[usize]) -> i32 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// Product `a·b` computed entrywise, independent of `FreeModuleMap::compose`.
pub fn mat_mul(a: &FreeModuleMap, b: &FreeModuleMap) -> Vec<Vec<Polynomial>> {
    let ring = a.ring();
    (0..a.rows())
        .map(|r| {
            (0..b.cols())
                .map(|c| {
                    (0..a.cols()).fold(ring.zero(), |acc, k| &acc + &(a.get(r, k) * b.get(k, c)))
                })
                .collect()
        })
        .collect()
}

pub fn rows_of(m: &FreeModuleMap) -> Vec<Vec<Polynomial>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}
