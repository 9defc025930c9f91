use super::*;
use crate::complex::{betti, verify_complex, verify_resolution};
use crate::fixtures;
use crate::gb::Ideal;
use crate::ring::{Field, PolyRing};

fn qq(names: &[&str]) -> PolyRing {
    PolyRing::standard(names, Field::Rationals).unwrap()
}

fn skew(r: &PolyRing, rows: &[&[&str]]) -> SkewMatrix {
    let rows = rows.iter().map(|row| row.iter().map(|s| r.parse(s).unwrap()).collect()).collect();
    SkewMatrix::new(r, rows).unwrap()
}

#[test]
fn pfaffian_small_cases() {
    let r = qq(&["a", "b", "c", "d", "e", "f"]);
    assert_eq!(pfaffian(&skew(&r, &[&["0", "c"], &["-c", "0"]])).unwrap().to_string(), "c");
    let m = skew(
        &r,
        &[
            &["0", "a", "b", "c"],
            &["-a", "0", "d", "e"],
            &["-b", "-d", "0", "f"],
            &["-c", "-e", "-f", "0"],
        ],
    );
    assert_eq!(pfaffian(&m).unwrap(), r.parse("a*f-b*e+c*d").unwrap());
    assert!(pfaffian(&skew(&r, &[&["0", "a", "b"], &["-a", "0", "c"], &["-b", "-c", "0"]])).is_err());
}

#[test]
fn rejects_non_skew() {
    let r = qq(&["a"]);
    let rows = vec![vec![r.zero(), r.parse("a").unwrap()], vec![r.parse("a").unwrap(), r.zero()]];
    assert!(SkewMatrix::new(&r, rows).is_err());
}

#[test]
fn pfaffian_of_worked_example_minor() {
    let r = fixtures::segre_ring();
    let b2 = SkewMatrix::from_map(&fixtures::segre_skew_matrix(&r).unwrap()).unwrap();
    assert_eq!(pfaffian(&b2.delete(0)).unwrap().to_string(), "z_2*z_3-z_1*z_4");
}

#[test]
fn buchsbaum_eisenbud_worked_example() {
    let r = fixtures::segre_ring();
    let b2 = SkewMatrix::from_map(&fixtures::segre_skew_matrix(&r).unwrap()).unwrap();
    let c = buchsbaum_eisenbud_complex(&b2).unwrap();
    let d1: Vec<String> = c.d(1).entries().iter().map(|p| p.to_string()).collect();
    assert_eq!(d1, fixtures::segre_pfaffians());
    assert_eq!(c.ranks(), vec![1, 5, 5, 1]);
    assert_eq!(c.module(3), &[5]);
    assert!(verify_complex(&c));
    let i = Ideal::new(&r, c.d(1).entries().to_vec()).unwrap();
    assert!(verify_resolution(&c, &i));
    assert_eq!(
        betti(&c).to_string(),
        "       0 1 2 3\ntotal: 1 5 5 1\n    0: 1 . . .\n    1: . 5 5 .\n    2: . . . 1\n"
    );
}

#[test]
fn buchsbaum_eisenbud_three_by_three() {
    let r = qq(&["a", "b", "c"]);
    let m = skew(&r, &[&["0", "a", "b"], &["-a", "0", "c"], &["-b", "-c", "0"]]);
    let c = buchsbaum_eisenbud_complex(&m).unwrap();
    let d1: Vec<String> = c.d(1).entries().iter().map(|p| p.to_string()).collect();
    assert_eq!(d1, ["c", "-b", "a"]);
    assert!(verify_complex(&c));
}

#[test]
fn buchsbaum_eisenbud_generic_five() {
    let names: Vec<String> = (1..=10).map(|i| format!("m_{i}")).collect();
    let r = PolyRing::standard(&names, Field::Rationals).unwrap();
    let mut rows = vec![vec![r.zero(); 5]; 5];
    let mut k = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            rows[i][j] = r.var(k);
            rows[j][i] = -&r.var(k);
            k += 1;
        }
    }
    let c = buchsbaum_eisenbud_complex(&SkewMatrix::new(&r, rows.clone()).unwrap()).unwrap();
    // independent expansion: Pf of the 4x4 with upper entries (a..f) is af - be + cd
    for del in 0..5 {
        let keep: Vec<usize> = (0..5).filter(|&x| x != del).collect();
        let e = |p: usize, q: usize| rows[keep[p]][keep[q]].clone();
        let pf = &(&(&e(0, 1) * &e(2, 3)) - &(&e(0, 2) * &e(1, 3))) + &(&e(0, 3) * &e(1, 2));
        let want = if del % 2 == 0 { pf } else { -&pf };
        assert_eq!(c.d(1).get(0, del), &want);
    }
    assert!(c.d(1).compose(c.d(2)).unwrap().is_zero());
    assert!(verify_complex(&c));
}

#[test]
fn koszul_examples() {
    let r = fixtures::segre_ring();
    let z: Vec<_> = ["z_1", "z_2", "z_3", "z_4"].iter().map(|s| r.parse(s).unwrap()).collect();
    let k = koszul_complex(&z).unwrap();
    assert_eq!(k.ranks(), vec![1, 4, 6, 4, 1]);
    assert!(verify_complex(&k));
    assert_eq!(
        betti(&k).to_string(),
        "       0 1 2 3 4\ntotal: 1 4 6 4 1\n    0: 1 4 6 4 1\n"
    );
    // colex basis: the third element of F_2 is e_1 ∧ e_2 (0-based)
    let col: Vec<String> = (0..4).map(|i| k.d(2).get(i, 2).to_string()).collect();
    assert_eq!(col, ["0", "-z_3", "z_2", "0"]);
    assert_eq!(k.d(2).get(0, 3).to_string(), "-z_4");

    let s = PolyRing::standard(&["x", "y"], Field::Rationals).unwrap();
    let x = s.parse("x").unwrap();
    let k1 = koszul_complex(std::slice::from_ref(&x)).unwrap();
    assert_eq!(k1.ranks(), vec![1, 1]);
    assert_eq!(k1.module(1), &[1]);
    let k2 = koszul_complex(&[x, s.parse("y").unwrap()]).unwrap();
    assert_eq!(k2.d(2).get(0, 0).to_string(), "-y");
    assert_eq!(k2.d(2).get(1, 0).to_string(), "x");
}

#[test]
fn minimal_resolution_examples() {
    let r = fixtures::segre_ring();
    let j = fixtures::segre_locus(&r).unwrap();
    let c = minimal_free_resolution(&j).unwrap();
    assert_eq!(betti(&c).totals(), vec![1, 4, 6, 4, 1]);
    assert!(verify_resolution(&c, &j));
    assert!(!c.has_unit_entry());

    let zero = Ideal::new(&r, vec![]).unwrap();
    let c0 = minimal_free_resolution(&zero).unwrap();
    assert_eq!(c0.len(), 0);
    assert_eq!(c0.ranks(), vec![1]);

    let p = qq(&["x_1", "x_2", "x_3", "x_4", "x_5"]);
    let pent = Ideal::parse(&p, &["x_1*x_3", "x_1*x_4", "x_2*x_4", "x_2*x_5", "x_3*x_5"]).unwrap();
    let c = minimal_free_resolution(&pent).unwrap();
    assert_eq!(betti(&c).totals(), vec![1, 5, 5, 1]);
    assert!(verify_resolution(&c, &pent));
    // oracle: the Pfaffian complex of the pentagon's skew presentation
    let m = skew(
        &p,
        &[
            &["0", "x_1", "0", "0", "-x_5"],
            &["-x_1", "0", "x_2", "0", "0"],
            &["0", "-x_2", "0", "x_3", "0"],
            &["0", "0", "-x_3", "0", "x_4"],
            &["x_5", "0", "0", "-x_4", "0"],
        ],
    );
    let be = buchsbaum_eisenbud_complex(&m).unwrap();
    assert_eq!(betti(&be), betti(&c));
    let be_ideal = Ideal::new(&p, be.d(1).entries().to_vec()).unwrap();
    assert!(crate::gb::ideal_equal(&be_ideal, &pent).unwrap());
}
