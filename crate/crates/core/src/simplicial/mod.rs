//! Simplicial complexes, Stanley-Reisner ideals, and resolutions of
//! Stanley-Reisner rings of stellar subdivisions and cyclic polytopes built
//! by one unprojection step.


use std::collections::BTreeSet;
use std::fmt;

use crate::complex::{eliminate_variable, minimize, ChainComplex};
use crate::error::{Error, Result};
use crate::gb::{ideal_quotient, Ideal};
use crate::km::{kustin_miller_complex, KMInput};
use crate::resolve::{minimal_free_resolution, subsets_of};
use crate::ring::{Field, MonomialOrder, PolyRing, Polynomial};

/// A simplicial complex given by its facets. Faces are sets of vertex
/// indices.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<BTreeSet<usize>>,
}

/// Equal if the facets agree as sets of vertex names.
impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        let named = |c: &SimplicialComplex| -> BTreeSet<BTreeSet<String>> {
            c.facets
                .iter()
                .map(|f| f.iter().map(|&k| c.vertices[k].clone()).collect())
                .collect()
        };
        named(self) == named(other)
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds a complex from facets named by vertex; non-maximal faces are
    /// dropped. Vertices are kept in order of first appearance.
    pub fn new<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self> {
        let mut vertices: Vec<String> = Vec::new();
        let mut out = Vec::with_capacity(facets.len());
        for f in facets {
            let mut face = BTreeSet::new();
            for v in f {
                let v = v.as_ref();
                let k = match vertices.iter().position(|w| w == v) {
                    Some(k) => k,
                    None => {
                        vertices.push(v.to_string());
                        vertices.len() - 1
                    }
                };
                face.insert(k);
            }
            out.push(face);
        }
        Ok(Self::from_parts(vertices, out))
    }

    fn from_parts(vertices: Vec<String>, facets: Vec<BTreeSet<usize>>) -> Self {
        let mut maximal: Vec<BTreeSet<usize>> = Vec::new();
        for f in &facets {
            if facets.iter().any(|g| g != f && f.is_subset(g)) || maximal.contains(f) {
                continue;
            }
            maximal.push(f.clone());
        }
        maximal.sort();
        // drop vertices that occur in no facet, keeping the order
        let used: BTreeSet<usize> = maximal.iter().flatten().copied().collect();
        let map: Vec<Option<usize>> = {
            let mut next = 0;
            (0..vertices.len())
                .map(|k| {
                    used.contains(&k).then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        };
        let vertices = vertices
            .into_iter()
            .enumerate()
            .filter(|(k, _)| used.contains(k))
            .map(|(_, v)| v)
            .collect();
        let mut facets: Vec<BTreeSet<usize>> = maximal
            .into_iter()
            .map(|f| f.into_iter().map(|k| map[k].unwrap()).collect())
            .collect();
        facets.sort();
        SimplicialComplex { vertices, facets }
    }

    /// Parses one facet per line, vertices separated by whitespace. Blank
    /// lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let facets: Vec<Vec<&str>> = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty())
            .map(|l| l.split_whitespace().collect())
            .collect();
        if facets.is_empty() {
            return Err(Error::Parse("no facets".into()));
        }
        Self::new(&facets)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Facets as sorted lists of vertex names.
    pub fn facets(&self) -> Vec<Vec<&str>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|&k| self.vertices[k].as_str()).collect())
            .collect()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    fn index_set<S: AsRef<str>>(&self, face: &[S]) -> Result<BTreeSet<usize>> {
        face.iter()
            .map(|v| {
                let v = v.as_ref();
                self.vertices
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown vertex `{v}`")))
            })
            .collect()
    }

    fn contains_face(&self, f: &BTreeSet<usize>) -> bool {
        self.facets.iter().any(|g| f.is_subset(g))
    }

    pub fn is_face<S: AsRef<str>>(&self, face: &[S]) -> bool {
        self.index_set(face).is_ok_and(|f| self.contains_face(&f))
    }

    /// Minimal non-faces, ordered by size then lexicographically.
    pub fn minimal_nonfaces(&self) -> Vec<Vec<&str>> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for k in 1..=n {
            for s in subsets_of(n, k) {
                let set: BTreeSet<usize> = s.iter().copied().collect();
                if self.contains_face(&set) {
                    continue;
                }
                let minimal = s.iter().all(|x| {
                    let mut t = set.clone();
                    t.remove(x);
                    self.contains_face(&t)
                });
                if minimal {
                    out.push(s.iter().map(|&i| self.vertices[i].as_str()).collect());
                }
            }
        }
        out
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for facet in self.facets() {
            writeln!(f, "{}", facet.join(" "))?;
        }
        Ok(())
    }
}

/// The ideal of `R` generated by the products over minimal non-faces.
pub fn stanley_reisner_ideal(c: &SimplicialComplex, ring: &PolyRing) -> Result<Ideal> {
    let mut gens = Vec::new();
    for nf in c.minimal_nonfaces() {
        let mut p = ring.one();
        for v in nf {
            p = &p * &ring.var_by_name(v)?;
        }
        gens.push(p);
    }
    for v in c.vertices() {
        ring.var_by_name(v)?;
    }
    Ideal::new(ring, gens)
}

/// Boundary of the cyclic `d`-polytope on `x_1..x_n` (Gale evenness).
pub fn cyclic_polytope_boundary(d: usize, n: usize) -> Result<SimplicialComplex> {
    let names: Vec<String> = (1..=n).map(|i| format!("x_{i}")).collect();
    cyclic_polytope_on(d, &names)
}

/// Boundary of the cyclic `d`-polytope whose vertices, in moment-curve order,
/// are `names`. A `d`-subset is a facet iff every maximal block of
/// consecutive elements not containing the first or last vertex has even
/// size.
pub fn cyclic_polytope_on<S: AsRef<str>>(d: usize, names: &[S]) -> Result<SimplicialComplex> {
    let n = names.len();
    if d < 2 || n < d + 1 {
        return Err(Error::InvalidArgument(format!(
            "cyclic polytope needs d >= 2 and n >= d + 1, got d = {d}, n = {n}"
        )));
    }
    let facets = subsets_of(n, d)
        .into_iter()
        .filter(|s| gale_even(s, n))
        .map(|s| s.into_iter().collect())
        .collect();
    let vertices = names.iter().map(|v| v.as_ref().to_string()).collect();
    Ok(SimplicialComplex::from_parts(vertices, facets))
}

fn gale_even(s: &[usize], n: usize) -> bool {
    let mut k = 0;
    while k < s.len() {
        let mut e = k;
        while e + 1 < s.len() && s[e + 1] == s[e] + 1 {
            e += 1;
        }
        let touches_end = s[k] == 0 || s[e] == n - 1;
        if !touches_end && (e - k + 1) % 2 == 1 {
            return false;
        }
        k = e + 1;
    }
    true
}

/// `lk(F) = { G : G ∩ F = ∅, G ∪ F ∈ C }`.
pub fn link<S: AsRef<str>>(c: &SimplicialComplex, face: &[S]) -> Result<SimplicialComplex> {
    let f = c.index_set(face)?;
    if !c.contains_face(&f) {
        return Err(Error::InvalidArgument("not a face".into()));
    }
    let facets = c
        .facets
        .iter()
        .filter(|g| f.is_subset(g))
        .map(|g| g.difference(&f).copied().collect())
        .collect();
    Ok(SimplicialComplex::from_parts(c.vertices.clone(), facets))
}

/// Replaces the star of `F` by the cone from `v` over `∂F * lk(F)`: each facet
/// `G ⊇ F` becomes the facets `G - {f} + {v}` for `f ∈ F`.
pub fn stellar_subdivide<S: AsRef<str>>(c: &SimplicialComplex, face: &[S], v: &str) -> Result<SimplicialComplex> {
    if c.vertices.iter().any(|w| w == v) {
        return Err(Error::InvalidArgument(format!("vertex `{v}` already present")));
    }
    let f = c.index_set(face)?;
    if f.is_empty() || !c.contains_face(&f) {
        return Err(Error::InvalidArgument("not a nonempty face".into()));
    }
    let mut vertices = c.vertices.clone();
    vertices.push(v.to_string());
    let new = vertices.len() - 1;
    let mut facets = Vec::new();
    for g in &c.facets {
        if !f.is_subset(g) {
            facets.push(g.clone());
            continue;
        }
        for x in &f {
            let mut h = g.clone();
            h.remove(x);
            h.insert(new);
            facets.push(h);
        }
    }
    Ok(SimplicialComplex::from_parts(vertices, facets))
}

fn fresh_name(taken: &[String], base: &str) -> String {
    let mut name = base.to_string();
    let mut k = 0;
    while taken.contains(&name) {
        k += 1;
        name = format!("{base}_{k}");
    }
    name
}

/// Resolution of the Stanley-Reisner ring of the stellar subdivision of `c` at
/// `face`, with new vertex `v`, by one unprojection step.
///
/// `I` is the ideal of `c` in `k[z, vertices]` and `J = (z) + I : ∏F`; the
/// resolution of the unprojection ring is taken mod `z` and minimized. `z`
/// gets degree `|F| - 1`, which makes the new vertex linear.
pub fn stellar_resolution<S: AsRef<str>>(
    c: &SimplicialComplex,
    face: &[S],
    v: &str,
    field: Field,
) -> Result<ChainComplex> {
    let f = c.index_set(face)?;
    if !c.contains_face(&f) {
        return Err(Error::InvalidArgument("not a face".into()));
    }
    if f.len() < 2 {
        return Err(Error::InvalidArgument(
            "subdividing at a vertex only renames it; need a face with at least two vertices".into(),
        ));
    }
    if c.vertices.iter().any(|w| w == v) {
        return Err(Error::InvalidArgument(format!("vertex `{v}` already present")));
    }
    let z = fresh_name(&c.vertices, "z");
    let mut names = vec![z.clone()];
    names.extend(c.vertices.iter().cloned());
    let mut weights = vec![f.len() as i64 - 1];
    weights.extend(std::iter::repeat_n(1, c.vertices.len()));
    let ring = PolyRing::new(&names, &weights, field, MonomialOrder::GRevLex)?;
    let i = stanley_reisner_ideal(c, &ring)?;
    let names_f: Vec<&str> = f.iter().map(|&k| c.vertices[k].as_str()).collect();
    let prod = face_monomial(&ring, &names_f)?;
    let mut jg = vec![ring.var_by_name(&z)?];
    jg.extend(ideal_quotient(&i, &prod)?.gens().iter().cloned());
    let j = Ideal::new(&ring, jg)?.mingens();
    let c_i = minimal_free_resolution(&i)?;
    let c_j = minimal_free_resolution(&j)?;
    let input = KMInput::from_resolutions(c_i, c_j, v, None)?;
    let out = kustin_miller_complex(&input)?;
    Ok(minimize(&eliminate_variable(&out.complex, &z)?))
}

/// Resolution of `I_d(k[x_1..x_n])` for even `d`: one unprojection step from
/// `I = I_d(k[x_1..x_{n-1}])` and `J = I_{d-2}(k[z, x_2..x_{n-2}])` in
/// `k[z, x_1..x_{n-1}]` with `T = x_n`, then `z ↦ 0`.
pub fn cyclic_resolution(d: usize, n: usize, field: Field) -> Result<ChainComplex> {
    if d % 2 == 1 {
        return Err(Error::InvalidArgument(format!("odd d = {d} is not supported")));
    }
    if d < 4 {
        return Err(Error::InvalidArgument(format!("need d >= 4, got {d}")));
    }
    if n < d + 4 {
        return Err(Error::InvalidArgument(format!(
            "need n - d >= 4 so that the codimension is at least 4, got n = {n}"
        )));
    }
    let x = |i: usize| format!("x_{i}");
    let mut names = vec!["z".to_string()];
    names.extend((1..n).map(x));
    let ring = PolyRing::standard(&names, field)?;
    let outer: Vec<String> = (1..n).map(x).collect();
    let i = stanley_reisner_ideal(&cyclic_polytope_on(d, &outer)?, &ring)?;
    let mut inner = vec!["z".to_string()];
    inner.extend((2..n - 1).map(x));
    let j = stanley_reisner_ideal(&cyclic_polytope_on(d - 2, &inner)?, &ring)?;
    let c_i = minimal_free_resolution(&i)?;
    let c_j = minimal_free_resolution(&j)?;
    let input = KMInput::from_resolutions(c_i, c_j, &x(n), None)?;
    let out = kustin_miller_complex(&input)?;
    eliminate_variable(&out.complex, "z")
}

/// Product of the named variables.
pub fn face_monomial<S: AsRef<str>>(ring: &PolyRing, face: &[S]) -> Result<Polynomial> {
    face.iter()
        .try_fold(ring.one(), |acc, v| Ok(&acc * &ring.var_by_name(v.as_ref())?))
}
