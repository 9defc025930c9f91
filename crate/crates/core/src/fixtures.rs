//! Ready-made inputs: the codimension 3 to 4 example whose unprojection is the
//! Segre embedding of P²×P² in P⁸, and a few small ideals.

use crate::error::Result;
use crate::gb::{FreeModuleMap, Ideal};
use crate::ring::{Field, PolyRing, Polynomial};

/// `QQ[x_1..x_4, z_1..z_4]`.
pub fn segre_ring() -> PolyRing {
    let names = ["x_1", "x_2", "x_3", "x_4", "z_1", "z_2", "z_3", "z_4"];
    PolyRing::standard(&names, Field::Rationals).expect("valid ring")
}

/// The 5x5 skew matrix with first row `(0, x_1, x_2, x_3, x_4)`.
pub fn segre_skew_rows() -> [[&'static str; 5]; 5] {
    [
        ["0", "x_1", "x_2", "x_3", "x_4"],
        ["-x_1", "0", "0", "z_1", "z_2"],
        ["-x_2", "0", "0", "z_3", "z_4"],
        ["-x_3", "-z_1", "-z_3", "0", "0"],
        ["-x_4", "-z_2", "-z_4", "0", "0"],
    ]
}

pub fn segre_skew_matrix(ring: &PolyRing) -> Result<FreeModuleMap> {
    let rows = segre_skew_rows()
        .iter()
        .map(|r| r.iter().map(|s| ring.parse(s)).collect::<Result<Vec<Polynomial>>>())
        .collect::<Result<Vec<_>>>()?;
    // second differential of the Pfaffian complex: R(-3)^5 -> R(-2)^5
    FreeModuleMap::from_rows_infer(ring, vec![2; 5], rows, 3)
}

/// The unprojection locus `(z_1, z_2, z_3, z_4)`.
pub fn segre_locus(ring: &PolyRing) -> Result<Ideal> {
    Ideal::parse(ring, &["z_1", "z_2", "z_3", "z_4"])
}

/// The five Pfaffians in the order and with the signs printed by Macaulay2.
pub fn segre_pfaffians() -> [&'static str; 5] {
    [
        "z_2*z_3-z_1*z_4",
        "-x_4*z_3+x_3*z_4",
        "x_4*z_1-x_3*z_2",
        "x_2*z_2-x_1*z_4",
        "-x_2*z_1+x_1*z_3",
    ]
}

/// 2x2 minors of `((T, x_1, x_2), (x_3, z_1, z_3), (x_4, z_2, z_4))`.
pub fn segre_minors(ring_t: &PolyRing) -> Result<Ideal> {
    let m = [["T", "x_1", "x_2"], ["x_3", "z_1", "z_3"], ["x_4", "z_2", "z_4"]];
    let mut gens = Vec::new();
    for (r1, r2) in [(0, 1), (0, 2), (1, 2)] {
        for (c1, c2) in [(0, 1), (0, 2), (1, 2)] {
            let s = format!("{}*{}-{}*{}", m[r1][c1], m[r2][c2], m[r1][c2], m[r2][c1]);
            gens.push(ring_t.parse(&s)?);
        }
    }
    Ideal::new(ring_t, gens)
}
