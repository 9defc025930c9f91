//! The homomorphism `φ ∈ Hom(J, R/I)` and the unprojection ideal
//! `U = (I, T·u - φ(u) : u ∈ J)` in `R[T]`.


use crate::error::{Error, Result};
use crate::gb::{groebner_of_vectors, minimal_generator_indices, syzygies, FreeModuleMap, GroebnerBasis, Ideal, Vector};
use crate::ring::{PolyRing, Polynomial};

/// A homomorphism `J -> R/I` of degree `degree`, given by lifts to `R` of the
/// images of the generators of `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hom {
    pub degree: i64,
    pub images: Vec<Polynomial>,
}

/// Everything the construction needs to know about `I ⊂ J` and `φ`.
#[derive(Clone, Debug)]
pub struct UnprojectionData {
    ring: PolyRing,
    ideal_i: Ideal,
    gens: Vec<Polynomial>,
    lifts: Vec<Polynomial>,
    deg_t: i64,
    t_name: String,
}

impl UnprojectionData {
    /// Validates a homomorphism given by `lifts[k]`, a lift of `φ(gens[k])`.
    pub fn new(
        ideal_i: &Ideal,
        gens: Vec<Polynomial>,
        lifts: Vec<Polynomial>,
        deg_t: i64,
        t_name: &str,
    ) -> Result<Self> {
        let ring = ideal_i.ring().clone();
        if deg_t <= 0 {
            return Err(Error::HypothesisFailed(format!(
                "the new variable must have positive degree, got {deg_t}"
            )));
        }
        if ring.index_of(t_name).is_some() {
            return Err(Error::InvalidArgument(format!("`{t_name}` is already a variable")));
        }
        if gens.len() != lifts.len() {
            return Err(Error::Shape(format!(
                "{} generators but {} images",
                gens.len(),
                lifts.len()
            )));
        }
        let j = Ideal::new(&ring, gens.clone())?;
        if j.gens().len() != gens.len() {
            return Err(Error::InvalidArgument("generators of J must be nonzero".into()));
        }
        if !ideal_i.is_subset_of(&j)? {
            return Err(Error::HypothesisFailed("I is not contained in J".into()));
        }
        for (u, l) in gens.iter().zip(&lifts) {
            if l.ring() != &ring {
                return Err(Error::RingMismatch(format!("image `{l}` is over another ring")));
            }
            let want = u.homogeneous_degree().unwrap() + deg_t;
            if !l.is_zero() && l.homogeneous_degree() != Some(want) {
                return Err(Error::Inhomogeneous(format!(
                    "image `{l}` of `{u}` should be homogeneous of degree {want}"
                )));
            }
        }
        let hom = Hom {
            degree: deg_t,
            images: lifts.clone(),
        };
        if !is_homomorphism(&hom, &gens, ideal_i)? {
            return Err(Error::HypothesisFailed(
                "the given images do not define a homomorphism J -> R/I".into(),
            ));
        }
        Ok(UnprojectionData {
            ring,
            ideal_i: ideal_i.clone(),
            gens,
            lifts,
            deg_t,
            t_name: t_name.to_string(),
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn ideal_i(&self) -> &Ideal {
        &self.ideal_i
    }

    /// The generators `u_k` of `J`, in the order used for the lifts.
    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn lifts(&self) -> &[Polynomial] {
        &self.lifts
    }

    pub fn deg_t(&self) -> i64 {
        self.deg_t
    }

    pub fn t_name(&self) -> &str {
        &self.t_name
    }

    /// `R[T]` with `T` of degree `deg_t`.
    pub fn ring_t(&self) -> Result<PolyRing> {
        self.ring.extend(&self.t_name, self.deg_t)
    }

    /// Lifts of `φ(ĉ_k)` for elements `ĉ = u·Q` of `J`: `l̂ = l·Q`.
    pub fn images_of(&self, q: &FreeModuleMap) -> Vec<Polynomial> {
        (0..q.cols())
            .map(|c| {
                self.lifts
                    .iter()
                    .enumerate()
                    .fold(self.ring.zero(), |acc, (r, l)| &acc + &(l * q.get(r, c)))
            })
            .collect()
    }
}

/// Syzygies of the generators of `J` modulo `I`: columns `s` with
/// `Σ s_k u_k ∈ I`. Target twists are the degrees of the `u_k`.
fn relations_mod(gens: &[Polynomial], i: &Ideal) -> Result<FreeModuleMap> {
    let mut row = gens.to_vec();
    row.extend(i.gens().iter().cloned());
    let syz = syzygies(&FreeModuleMap::row_of(i.ring(), &row)?)?;
    let rows: Vec<usize> = (0..gens.len()).collect();
    let s = syz.submatrix(&rows, &(0..syz.cols()).collect::<Vec<_>>());
    let keep: Vec<usize> = (0..s.cols()).filter(|&c| !s.column(c).is_zero()).collect();
    Ok(s.submatrix(&rows, &keep))
}

/// True if `Σ s_k φ(u_k) ∈ I` for every relation `s` of the `u_k` mod `I`.
fn is_homomorphism(hom: &Hom, gens: &[Polynomial], i: &Ideal) -> Result<bool> {
    let s = relations_mod(gens, i)?;
    let gb = i.groebner();
    for c in 0..s.cols() {
        let p = (0..gens.len()).fold(i.ring().zero(), |acc, k| &acc + &(&hom.images[k] * s.get(k, c)));
        if !gb.contains(&Vector::from_polys([(0, &p)]))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vectors `g·e_k` spanning `I·R^t`, with twists `-deg(u_k)`.
fn ideal_multiples(i: &Ideal, t: usize) -> Vec<Vector> {
    (0..t)
        .flat_map(|k| i.gens().iter().map(move |g| Vector::from_polys([(k, g)])))
        .collect()
}

fn hom_twists(gens: &[Polynomial]) -> Vec<i64> {
    gens.iter().map(|u| -u.homogeneous_degree().unwrap()).collect()
}

fn hom_vector(h: &Hom) -> Vector {
    Vector::from_polys(h.images.iter().enumerate())
}

/// Minimal generators of `Hom_R(J, R/I)` (maps vanishing on `I`), sorted by
/// degree. Each is a vector of images of `gens`, reduced modulo `I`.
///
/// The module is the kernel of `Sᵀ` over `R/I`, where `S` holds the relations
/// among `gens` modulo `I`.
pub fn hom_module(gens: &[Polynomial], i: &Ideal) -> Result<Vec<Hom>> {
    let ring = i.ring();
    let j = Ideal::new(ring, gens.to_vec())?;
    if j.gens().len() != gens.len() || gens.is_empty() {
        return Err(Error::InvalidArgument("generators of J must be nonzero".into()));
    }
    if !i.is_subset_of(&j)? {
        return Err(Error::HypothesisFailed("I is not contained in J".into()));
    }
    let t = gens.len();
    let s = relations_mod(gens, i)?;
    let st = s.transpose();
    // [Sᵀ | g·I for each row of Sᵀ]
    let mut src = st.source_twists().to_vec();
    let mut extra: Vec<(usize, Polynomial)> = Vec::new();
    for (k, &tw) in st.target_twists().iter().enumerate() {
        for g in i.gens() {
            src.push(tw + g.homogeneous_degree().unwrap());
            extra.push((k, g.clone()));
        }
    }
    let mut entries = Vec::with_capacity(st.rows() * src.len());
    for r in 0..st.rows() {
        entries.extend(st.row(r).iter().cloned());
        for (k, g) in &extra {
            entries.push(if *k == r { g.clone() } else { ring.zero() });
        }
    }
    let n = FreeModuleMap::new(ring, st.target_twists().to_vec(), src, 0, entries)?;
    let kernel = syzygies(&n)?;
    let gb = i.groebner();
    let twists = hom_twists(gens);
    let mut vectors = ideal_multiples(i, t);
    let base = vectors.len();
    let mut degrees = Vec::new();
    for c in 0..kernel.cols() {
        let images: Vec<Polynomial> = (0..t)
            .map(|k| reduce(&gb, kernel.get(k, c)))
            .collect::<Result<_>>()?;
        degrees.push(kernel.source_twists()[c]);
        vectors.push(Vector::from_polys(images.iter().enumerate()));
    }
    let keep = minimal_generator_indices(ring, &twists, vectors.clone());
    let mut homs: Vec<Hom> = keep
        .into_iter()
        .filter(|&k| k >= base)
        .map(|k| Hom {
            degree: degrees[k - base],
            images: vectors[k].to_polys(ring, t),
        })
        .collect();
    homs.sort_by_key(|h| h.degree);
    Ok(homs)
}

fn reduce(gb: &GroebnerBasis, p: &Polynomial) -> Result<Polynomial> {
    let v = gb.normal_form(&Vector::from_polys([(0, p)]))?;
    Ok(v.component(gb.ring(), 0))
}

/// Picks the first generator `φ` of degree `deg_t` such that `φ` and the
/// inclusion generate the Hom module. `φ` is reduced modulo the inclusion and
/// `I`, and scaled to a monic vector.
pub fn select_phi(
    homs: &[Hom],
    ideal_i: &Ideal,
    gens: &[Polynomial],
    deg_t: i64,
    t_name: &str,
) -> Result<UnprojectionData> {
    let ring = ideal_i.ring();
    let t = gens.len();
    let twists = hom_twists(gens);
    let inclusion = Vector::from_polys(gens.iter().enumerate());
    let mut span = ideal_multiples(ideal_i, t);
    span.push(inclusion);
    let base_gb = groebner_of_vectors(ring, &twists, span.clone())?;
    for h in homs.iter().filter(|h| h.degree == deg_t) {
        let phi = hom_vector(h);
        let mut with_phi = span.clone();
        with_phi.push(phi.clone());
        let gb = groebner_of_vectors(ring, &twists, with_phi)?;
        let mut ok = true;
        for other in homs {
            if !gb.contains(&hom_vector(other))? {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        let phi = base_gb.normal_form(&phi)?.monic();
        if phi.is_zero() {
            continue;
        }
        return UnprojectionData::new(ideal_i, gens.to_vec(), phi.to_polys(ring, t), deg_t, t_name);
    }
    Err(Error::HypothesisFailed(format!(
        "no homomorphism of degree {deg_t} completes the inclusion to a generating pair"
    )))
}

/// `U = (I, T·u_k - l_k)` in `R[T]`.
pub fn unprojection_ideal(d: &UnprojectionData) -> Result<Ideal> {
    let rt = d.ring_t()?;
    let t = rt.var_by_name(&d.t_name)?;
    let mut gens = Vec::new();
    for g in d.ideal_i.gens() {
        gens.push(g.promote(&rt)?);
    }
    for (u, l) in d.gens.iter().zip(&d.lifts) {
        gens.push(&(&t * &u.promote(&rt)?) - &l.promote(&rt)?);
    }
    Ideal::new(&rt, gens)
}
