//! Strategies and checks for the randomized suites; the acceptance target
//! runs the same checks with a fixed case count.

use super::*;
use kmcomplex::gb::{lift_through, syzygies, FreeModuleMap, Ideal};
use kmcomplex::resolve::{koszul_complex, pfaffian, SkewMatrix};
use kmcomplex::ring::{Field, MonomialOrder, PolyRing, Polynomial};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Picks = Vec<(usize, i64)>;
pub type Gens = Vec<(u16, Picks)>;
type Check = Result<(), TestCaseError>;

pub fn picks(max_terms: usize) -> impl Strategy<Value = Picks> {
    prop::collection::vec((0usize..64, -5i64..=5), 1..=max_terms)
}

pub fn gens_strategy() -> impl Strategy<Value = Gens> {
    prop::collection::vec((1u16..=3, picks(4)), 1..=5)
}

pub fn ring_strategy() -> impl Strategy<Value = PolyRing> {
    (
        prop_oneof![Just(Field::Rationals), Just(Field::Prime(32003)), Just(Field::Prime(7))],
        prop_oneof![Just(MonomialOrder::GRevLex), Just(MonomialOrder::Lex)],
        3usize..=4,
    )
        .prop_map(|(f, o, n)| ring(n, f, o))
}

pub fn build(ring: &PolyRing, gens: &[(u16, Picks)]) -> Vec<Polynomial> {
    gens.iter()
        .map(|(d, p)| poly_from_picks(ring, *d, p))
        .filter(|p| !p.is_zero())
        .collect()
}

pub fn check_groebner(r: &PolyRing, g: &Gens) -> Check {
    let gens = build(r, g);
    prop_assume!(!gens.is_empty());
    let gb = Ideal::new(r, gens.clone()).unwrap().reduced_gb();
    prop_assert!(is_groebner_basis(&gb));
    for f in &gens {
        prop_assert!(remainder(f, &gb).is_zero(), "{} does not reduce to zero", f);
    }
    for f in &gb {
        prop_assert!(f.lead().unwrap().1.is_one());
    }
    Ok(())
}

pub fn lift_strategy() -> impl Strategy<Value = (PolyRing, Gens, Vec<Picks>, Picks)> {
    (
        ring_strategy(),
        prop::collection::vec((1u16..=2, picks(3)), 1..=3),
        prop::collection::vec(picks(3), 6),
        picks(3),
    )
}

/// One column in the image of `b` must lift; an arbitrary column may fail,
/// but any returned lift must satisfy `b·X = c`.
pub fn check_lift(r: &PolyRing, g: &Gens, mult: &[Picks], extra: &Picks) -> Check {
    let b_gens = build(r, g);
    prop_assume!(!b_gens.is_empty());
    let b = FreeModuleMap::row_of(r, &b_gens).unwrap();
    let top = 3u16;
    let mut in_image = r.zero();
    for (k, f) in b_gens.iter().enumerate() {
        let d = f.homogeneous_degree().unwrap() as u16;
        let m = poly_from_picks(r, top - d, &mult[k % mult.len()]);
        in_image = &in_image + &(&m * f);
    }
    let arbitrary = poly_from_picks(r, top, extra);
    for (c_poly, must_lift) in [(in_image, true), (arbitrary, false)] {
        let c = FreeModuleMap::new(r, vec![0], vec![top as i64], 0, vec![c_poly]).unwrap();
        match lift_through(&b, &c) {
            Ok(x) => prop_assert_eq!(mat_mul(&b, &x), rows_of(&c)),
            Err(e) => prop_assert!(!must_lift, "in-image column failed to lift: {}", e),
        }
    }
    Ok(())
}

pub fn check_syzygies(r: &PolyRing, g: &Gens) -> Check {
    let gens = build(r, g);
    prop_assume!(!gens.is_empty());
    let m = FreeModuleMap::row_of(r, &gens).unwrap();
    let s = syzygies(&m).unwrap();
    prop_assert!(mat_mul(&m, &s).iter().flatten().all(Polynomial::is_zero));
    let s2 = syzygies(&s).unwrap();
    prop_assert!(mat_mul(&s, &s2).iter().flatten().all(Polynomial::is_zero));
    Ok(())
}

pub fn dual_strategy() -> impl Strategy<Value = (PolyRing, Gens, i64)> {
    (ring_strategy(), prop::collection::vec((1u16..=3, picks(3)), 1..=4), -4i64..=4)
}

pub fn check_dual_involution(r: &PolyRing, g: &Gens, shift: i64) -> Check {
    let seq = build(r, g);
    prop_assume!(!seq.is_empty());
    let c = koszul_complex(&seq).unwrap().twist(shift);
    prop_assert_eq!(c.dualize().dualize(), c);
    Ok(())
}

pub fn skew_strategy() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (1usize..=3, prop::collection::vec(-9i64..=9, 15))
}

/// `Pf² = det` for an integer skew matrix of size `2·half`, against a
/// rational Gaussian-elimination determinant.
pub fn check_pfaffian_constant(half: usize, upper: &[i64]) -> Check {
    let n = 2 * half;
    let r = ring(1, Field::Rationals, MonomialOrder::GRevLex);
    let mut ints = vec![vec![0i64; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            ints[i][j] = upper[k];
            ints[j][i] = -upper[k];
            k += 1;
        }
    }
    let rows = ints
        .iter()
        .map(|row| row.iter().map(|&v| Polynomial::constant(&r, r.field().from_i64(v))).collect())
        .collect();
    let pf = pfaffian(&SkewMatrix::new(&r, rows).unwrap()).unwrap();
    let det = det_rational(&ints);
    let expected = Polynomial::constant(&r, r.field().from_ratio(det.numer(), det.denom()).unwrap());
    prop_assert_eq!(&pf * &pf, expected);
    Ok(())
}

pub fn check_pfaffian_linear(half: usize, upper: &[Picks]) -> Check {
    let n = 2 * half;
    let r = ring(3, Field::Rationals, MonomialOrder::GRevLex);
    let mut rows = vec![vec![r.zero(); n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            let e = poly_from_picks(&r, 1, &upper[k]);
            rows[j][i] = -&e;
            rows[i][j] = e;
            k += 1;
        }
    }
    let det = det_leibniz(&rows);
    let pf = pfaffian(&SkewMatrix::new(&r, rows).unwrap()).unwrap();
    prop_assert_eq!(&pf * &pf, det);
    Ok(())
}
