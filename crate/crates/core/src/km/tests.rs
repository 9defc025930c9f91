use super::*;
use crate::complex::{betti, verify_resolution};
use crate::fixtures;
use crate::gb::{ideal_equal, Ideal};
use crate::resolve::{buchsbaum_eisenbud_complex, koszul_complex, SkewMatrix};
use crate::unproj::unprojection_ideal;

fn segre_input() -> KMInput {
    let r = fixtures::segre_ring();
    let b2 = SkewMatrix::from_map(&fixtures::segre_skew_matrix(&r).unwrap()).unwrap();
    let c_i = buchsbaum_eisenbud_complex(&b2).unwrap();
    let c_j = koszul_complex(fixtures::segre_locus(&r).unwrap().gens()).unwrap();
    KMInput::from_resolutions(c_i, c_j, "T", None).unwrap()
}

#[test]
fn degree_of_t() {
    let inp = segre_input();
    assert_eq!(deg_t(inp.c_i(), inp.c_j()).unwrap(), 1);
    assert!(deg_t(inp.c_j(), inp.c_j()).is_err());
}

#[test]
fn alpha_beta_commute() {
    let inp = segre_input();
    let (alpha, _) = compute_alpha(&inp).unwrap();
    assert!(alpha.verify());
    assert_eq!(alpha.at(0).get(0, 0), &inp.c_i().ring().one());
    let beta = compute_beta(&inp).unwrap();
    assert!(beta.verify());
    let l: Vec<String> = beta.at(1).entries().iter().map(|p| p.to_string()).collect();
    assert_eq!(l, ["-x_1*x_3", "-x_1*x_4", "-x_2*x_3", "-x_2*x_4"]);
}

#[test]
fn homotopy_identity() {
    let inp = segre_input();
    let (alpha, _) = compute_alpha(&inp).unwrap();
    let beta = compute_beta(&inp).unwrap();
    let h = compute_homotopy(&alpha, &beta, inp.c_i()).unwrap();
    let g = inp.g();
    assert_eq!(h.len(), g);
    assert!(h[0].is_zero() && h[g - 1].is_zero());
    for i in 1..g {
        let lhs = beta.at(i).compose(alpha.at(i)).unwrap();
        let mut rhs = h[i - 1].compose(inp.c_i().d(i)).unwrap();
        if i < g - 1 {
            rhs = rhs.add(&inp.c_i().d(i).compose(&h[i]).unwrap()).unwrap();
        }
        assert_eq!(lhs.entries(), rhs.entries(), "index {i}");
    }
    for m in &h {
        assert!(m.check_homogeneous().is_ok());
        assert_eq!(m.degree(), 1);
    }
}

#[test]
fn zero_beta_gives_zero_homotopy() {
    let inp = segre_input();
    let (alpha, _) = compute_alpha(&inp).unwrap();
    let beta = compute_beta(&inp).unwrap().scale(&inp.c_i().ring().field().zero());
    let h = compute_homotopy(&alpha, &beta, inp.c_i()).unwrap();
    assert!(h.iter().all(|m| m.is_zero()));
}

#[test]
fn worked_example_complex() {
    let inp = segre_input();
    let out = kustin_miller_complex(&inp).unwrap();
    let c = &out.complex;
    assert_eq!(c.ranks(), vec![1, 9, 16, 9, 1]);
    assert_eq!(
        betti(c).to_string(),
        "       0 1  2 3 4\ntotal: 1 9 16 9 1\n    0: 1 .  . . .\n    1: . 9 16 9 .\n    2: . .  . . 1\n"
    );
    let f1: Vec<String> = c.d(1).entries().iter().map(|p| p.to_string()).collect();
    let mut want: Vec<String> = fixtures::segre_pfaffians().iter().map(|s| s.to_string()).collect();
    want.extend(["-x_1*x_3+z_1*T", "-x_1*x_4+z_2*T", "-x_2*x_3+z_3*T", "-x_2*x_4+z_4*T"].map(String::from));
    assert_eq!(f1, want);
    // f_2: b_2 in the corner, zero block below it, T on the diagonal of the
    // right block
    let f2 = c.d(2);
    let b2 = inp.c_i().d(2);
    let rt = c.ring();
    for r in 0..5 {
        for col in 0..5 {
            assert_eq!(f2.get(r, col), &b2.get(r, col).promote(rt).unwrap());
        }
    }
    for r in 5..9 {
        for col in 0..5 {
            assert!(f2.get(r, col).is_zero());
        }
    }
    let t = rt.parse("T").unwrap();
    for k in 0..5 {
        let e = f2.get(k, 11 + k);
        assert!(e.terms().iter().any(|(m, c)| c.is_one() && *m == t.terms()[0].0), "{e}");
    }
    let u = unprojection_ideal(inp.data()).unwrap();
    assert!(verify_resolution(c, &u));
    assert!(ideal_equal(&u, &fixtures::segre_minors(rt).unwrap()).unwrap());
    assert!(!c.has_unit_entry());
}

#[test]
fn short_inputs_rejected() {
    let r = fixtures::segre_ring();
    let i = Ideal::parse(&r, &["x_1*x_2"]).unwrap();
    let j = Ideal::parse(&r, &["x_1", "x_2"]).unwrap();
    assert!(matches!(KMInput::from_ideals(&i, &j, "T", None), Err(Error::InvalidArgument(_))));
}

fn octahedron_input(z_weight: i64) -> KMInput {
    let names = ["z", "x_1", "x_2", "x_3", "x_4", "x_5", "x_6"];
    let mut w = vec![1; 7];
    w[0] = z_weight;
    let r = crate::ring::PolyRing::new(&names, &w, crate::ring::Field::Rationals, Default::default()).unwrap();
    let i = Ideal::parse(&r, &["x_1*x_2", "x_3*x_4", "x_5*x_6"]).unwrap();
    let j = Ideal::parse(&r, &["z", "x_2", "x_4", "x_6"]).unwrap().mingens();
    KMInput::from_ideals(&i, &j, "x_7", None).unwrap()
}

#[test]
fn octahedron_degrees() {
    // z of degree 1: d_B = 6, d_A = 4
    let inp = octahedron_input(1);
    assert_eq!(inp.data().deg_t(), 2);
    for (u, l) in inp.data().gens().iter().zip(inp.data().lifts()) {
        if !l.is_zero() {
            assert_eq!(l.homogeneous_degree().unwrap() - u.homogeneous_degree().unwrap(), 2);
        }
    }
    assert_eq!(inp.data().lifts()[0].terms()[0].0, inp.c_i().ring().parse("x_1*x_3*x_5").unwrap().terms()[0].0);
    let out = kustin_miller_complex(&inp).unwrap();
    let u = unprojection_ideal(inp.data()).unwrap();
    assert!(verify_resolution(&out.complex, &u));
    assert!(out.alpha.verify() && out.beta.verify());
    // z of degree 2 makes the new vertex linear
    assert_eq!(octahedron_input(2).data().deg_t(), 1);
}

#[test]
fn octahedron_homotopy_identity() {
    for w in [1, 2] {
        let inp = octahedron_input(w);
        let out = kustin_miller_complex(&inp).unwrap();
        let g = inp.g();
        let h = &out.homotopy;
        for i in 1..g {
            let lhs = out.beta.at(i).compose(out.alpha.at(i)).unwrap();
            let mut rhs = h[i - 1].compose(inp.c_i().d(i)).unwrap();
            if i < g - 1 {
                rhs = rhs.add(&inp.c_i().d(i).compose(&h[i]).unwrap()).unwrap();
            }
            assert_eq!(lhs.entries(), rhs.entries(), "weight {w}, index {i}");
        }
    }
}

#[test]
fn top_correction_repairs_perturbed_lift() {
    let inp = octahedron_input(1);
    let (alpha, _) = compute_alpha(&inp).unwrap();
    let beta = compute_beta(&inp).unwrap();
    let h = compute_homotopy(&alpha, &beta, inp.c_i()).unwrap();
    let c_i = inp.c_i();
    let b3 = c_i.d(3);
    // another valid lift at 2: h_2 + b_3·y with y constant (degrees 4 -> 6, T of degree 2)
    let ring = c_i.ring();
    let y = FreeModuleMap::new(ring, c_i.module(3).to_vec(), c_i.module(2).to_vec(), 2, vec![ring.one(), ring.zero(), ring.zero()]).unwrap();
    let moved = h[2].add(&b3.compose(&y).unwrap()).unwrap();
    assert_eq!(c_i.d(2).compose(&moved).unwrap(), c_i.d(2).compose(&h[2]).unwrap());
    let residual = beta.at(3).compose(alpha.at(3)).unwrap().sub(&moved.compose(b3).unwrap()).unwrap();
    assert!(!residual.is_zero());
    let fixed = close_at_top(&moved, &alpha, &beta, c_i).unwrap();
    let residual = beta.at(3).compose(alpha.at(3)).unwrap().sub(&fixed.compose(b3).unwrap()).unwrap();
    assert!(residual.is_zero());
}
