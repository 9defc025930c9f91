mod common;

use common::data;
use kmcomplex::cli::format::{read_complex, read_ring, write_complex_file, Document, RingOverrides};
use kmcomplex::complex::betti;
use kmcomplex::fixtures::{segre_ring, segre_skew_matrix};
use kmcomplex::resolve::{buchsbaum_eisenbud_complex, minimal_free_resolution, SkewMatrix};
use kmcomplex::simplicial::{stanley_reisner_ideal, stellar_subdivide, SimplicialComplex};
use kmcomplex::ring::{Field, PolyRing};
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const KM_GRID: &str = "       0 1  2 3 4\ntotal: 1 9 16 9 1\n    0: 1 .  . . .\n    1: . 9 16 9 .\n    2: . .  . . 1\n";

fn kmc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmcomplex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn km_on_worked_example_prints_grid() {
    let b2 = data("segre_b2.txt");
    let j = data("segre_J.txt");
    let o = kmc(&["km", "--ideal-I", p(&b2), "--ideal-J", p(&j), "--new-var", "T", "--koszul"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), KM_GRID);

    let pf = data("segre_pfaff.txt");
    let o = kmc(&["km", "--ideal-I", p(&pf), "--ideal-J", p(&j), "--new-var", "T"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), KM_GRID);
}

#[test]
fn km_over_a_prime_field() {
    let o = kmc(&[
        "--field",
        "fp:32003",
        "km",
        "--ideal-I",
        p(&data("segre_pfaff.txt")),
        "--ideal-J",
        p(&data("segre_J.txt")),
        "--strict",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), KM_GRID);
}

#[test]
fn resbe_prints_pfaffians_then_grid() {
    let o = kmc(&["resbe", "--matrix", p(&data("segre_b2.txt"))]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let expected = "z_2*z_3-z_1*z_4\n-x_4*z_3+x_3*z_4\nx_4*z_1-x_3*z_2\nx_2*z_2-x_1*z_4\n-x_2*z_1+x_1*z_3\n\n\
                    \x20      0 1 2 3\ntotal: 1 5 5 1\n    0: 1 . . .\n    1: . 5 5 .\n    2: . . . 1\n";
    assert_eq!(stdout(&o), expected);
}

#[test]
fn koszul_and_resolve() {
    let o = kmc(&["koszul", "--ideal", p(&data("segre_J.txt"))]);
    assert_eq!(stdout(&o), "       0 1 2 3 4\ntotal: 1 4 6 4 1\n    0: 1 4 6 4 1\n");
    let o = kmc(&["resolve", "--ideal", p(&data("segre_pfaff.txt")), "--strict"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("total: 1 5 5 1"));
}

#[test]
fn unproject_then_verify_own_output() {
    let dir = tempfile::tempdir().unwrap();
    let u = dir.path().join("U.txt");
    let cplx = dir.path().join("out.cplx");
    let (pf, j) = (data("segre_pfaff.txt"), data("segre_J.txt"));
    let o = kmc(&["unproject", "--ideal-I", p(&pf), "--ideal-J", p(&j), "--out", p(&u)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = fs::read_to_string(&u).unwrap();
    assert_eq!(text, stdout(&o));
    for rel in ["-x_1*x_3+z_1*T", "-x_1*x_4+z_2*T", "-x_2*x_3+z_3*T", "-x_2*x_4+z_4*T"] {
        assert!(text.lines().any(|l| l == rel), "missing {rel}");
    }
    assert!(text.contains("z_1 -> x_1*x_3\n"));

    let o = kmc(&["km", "--ideal-I", p(&pf), "--ideal-J", p(&j), "--out", p(&cplx)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = kmc(&["verify", "--complex", p(&cplx), "--ideal", p(&u)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "ok: resolution of length 4\n");
}

#[test]
fn user_lifts_are_accepted_and_checked() {
    let dir = tempfile::tempdir().unwrap();
    let (pf, j) = (data("segre_pfaff.txt"), data("segre_J.txt"));
    let good = dir.path().join("phi.txt");
    // generators given up to a scalar and out of order
    fs::write(
        &good,
        "[phi]\nz_4 -> x_2*x_4+x_1*z_4\n2*z_1 -> 2*x_1*x_3+2*x_1*z_1\nz_3 -> x_2*x_3+x_1*z_3\nz_2 -> x_1*x_4+x_1*z_2\n",
    )
    .unwrap();
    let o = kmc(&["km", "--ideal-I", p(&pf), "--ideal-J", p(&j), "--phi", p(&good), "--strict"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("total: 1 9 16 9 1"));

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "[phi]\nz_1 -> x_1*x_3\nz_2 -> x_1*x_4\nz_3 -> x_2*x_3\nz_4 -> x_1*x_3\n").unwrap();
    let o = kmc(&["km", "--ideal-I", p(&pf), "--ideal-J", p(&j), "--phi", p(&bad)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("error[hypothesis-failed]"));
}

#[test]
fn serialized_complex_round_trips() {
    let ring = segre_ring();
    let c = buchsbaum_eisenbud_complex(&SkewMatrix::from_map(&segre_skew_matrix(&ring).unwrap()).unwrap())
        .unwrap();
    let text = write_complex_file(&c);
    let doc = Document::parse(&text).unwrap();
    let ring2 = read_ring(&doc, RingOverrides::default()).unwrap();
    assert_eq!(ring2, ring);
    let back = read_complex(&doc, &ring2).unwrap();
    assert_eq!(back, c);
    assert_eq!(write_complex_file(&back), text);

    let weighted = PolyRing::new(&["a", "b"], &[1, 3], Field::Prime(101), kmcomplex::ring::MonomialOrder::Lex)
        .unwrap();
    let i = kmcomplex::gb::Ideal::parse(&weighted, &["a^3-b", "a*b"]).unwrap();
    let c = minimal_free_resolution(&i).unwrap();
    let doc = Document::parse(&write_complex_file(&c)).unwrap();
    let r = read_ring(&doc, RingOverrides::default()).unwrap();
    assert_eq!(read_complex(&doc, &r).unwrap(), c);
}

#[test]
fn km_output_file_reloads_to_same_betti() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.cplx");
    let o = kmc(&[
        "km",
        "--ideal-I",
        p(&data("segre_b2.txt")),
        "--ideal-J",
        p(&data("segre_J.txt")),
        "--koszul",
        "--out",
        p(&out),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc = Document::parse(&fs::read_to_string(&out).unwrap()).unwrap();
    let r = read_ring(&doc, RingOverrides::default()).unwrap();
    let c = read_complex(&doc, &r).unwrap();
    assert_eq!(betti(&c).to_string(), KM_GRID);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let mut seen = Vec::new();
    for k in 0..2 {
        let out = dir.path().join(format!("c{k}.cplx"));
        let o = kmc(&[
            "km",
            "--ideal-I",
            p(&data("segre_pfaff.txt")),
            "--ideal-J",
            p(&data("segre_J.txt")),
            "--out",
            p(&out),
        ]);
        seen.push((o.stdout, fs::read(&out).unwrap()));
    }
    assert_eq!(seen[0], seen[1]);
}

#[test]
fn simplicial_drivers() {
    let o = kmc(&["cyclic", "--d", "4", "--n", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("total: 1 16 30 16 1"));

    let facets = data("octahedron.txt");
    let o = kmc(&["stellar", "--facets", p(&facets), "--face", "x_1 x_2 x_3", "--new-vertex", "x_7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let sc = SimplicialComplex::parse(&fs::read_to_string(&facets).unwrap()).unwrap();
    let sub = stellar_subdivide(&sc, &["x_1", "x_2", "x_3"], "x_7").unwrap();
    let ring = PolyRing::standard(sub.vertices(), Field::Rationals).unwrap();
    let direct = minimal_free_resolution(&stanley_reisner_ideal(&sub, &ring).unwrap()).unwrap();
    assert_eq!(stdout(&o), betti(&direct).to_string());
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "[ring]\nvars = x y\n[ideal]\nx*+y\n").unwrap();
    let o = kmc(&["resolve", "--ideal", p(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[parse]"), "{}", stderr(&o));

    let o = kmc(&["resolve", "--ideal", p(&dir.path().join("missing.txt"))]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[io]"));

    let o = kmc(&["--field", "fp:12", "koszul", "--ideal", p(&data("segre_J.txt"))]);
    assert_eq!(o.status.code(), Some(2));

    let o = kmc(&["cyclic", "--d", "5", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[invalid-argument]"));

    let o = kmc(&["resolve", "--no-such-flag"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hypothesis_failures_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let cubic = dir.path().join("cubic.txt");
    fs::write(&cubic, "[ring]\nvars = a b c d\n[ideal]\na*c-b^2\na*d-b*c\nb*d-c^2\n").unwrap();
    let o = kmc(&["resolve", "--ideal", p(&cubic), "--strict"]);
    assert_eq!(o.status.code(), Some(3));
    let o = kmc(&["resolve", "--ideal", p(&cubic)]);
    assert_eq!(o.status.code(), Some(0));

    let j = dir.path().join("j.txt");
    fs::write(&j, "[ring]\nvars = x_1 x_2 x_3 x_4 z_1 z_2 z_3 z_4\n[ideal]\nx_1\nz_1\nz_2\nz_3\n").unwrap();
    let o = kmc(&["km", "--ideal-I", p(&data("segre_pfaff.txt")), "--ideal-J", p(&j)]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn failed_verification_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let cplx = dir.path().join("i.cplx");
    let o = kmc(&["resolve", "--ideal", p(&data("segre_pfaff.txt")), "--out", p(&cplx)]);
    assert_eq!(o.status.code(), Some(0));
    let o = kmc(&["verify", "--complex", p(&cplx), "--ideal", p(&data("segre_J.txt"))]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).starts_with("error[verification]"));
}
