//! Command-line front end.

pub mod format;

use crate::complex::{betti, first_failure, ChainComplex};
use crate::gb::Ideal;
use crate::km::{kustin_miller_complex, KMInput};
use crate::resolve::{buchsbaum_eisenbud_complex, koszul_complex, minimal_free_resolution, SkewMatrix};
use crate::ring::{Field, MonomialOrder, Polynomial};
use crate::simplicial::{cyclic_resolution, stellar_resolution, SimplicialComplex};
use crate::unproj::unprojection_ideal;
use crate::{Error, ErrorCategory, Result};
use clap::{Parser, Subcommand};
use format::{Document, RingOverrides};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(name = "kmcomplex", version, about = "Unprojection and Kustin-Miller complexes")]
pub struct JobSpec {
    /// Coefficient field: `qq` or `fp:<p>`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Monomial order: `grevlex` or `lex`.
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Also require symmetric Betti tables and verify the output resolution.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Write the resulting complex (or ideal, for `unproject`) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal free resolution of an ideal.
    Resolve {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Pfaffian complex of a skew-symmetric matrix of odd size.
    Resbe {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Koszul complex on the listed generators.
    Koszul {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Unprojection ideal of the pair `I ⊂ J`.
    Unproject {
        #[arg(long = "ideal-I")]
        ideal_i: PathBuf,
        #[arg(long = "ideal-J")]
        ideal_j: PathBuf,
        #[arg(long = "new-var", default_value = "T")]
        new_var: String,
        #[arg(long)]
        phi: Option<PathBuf>,
    },
    /// Resolution of the unprojection ring. An `--ideal-I` file with a
    /// `[matrix]` section is resolved by its Pfaffian complex.
    Km {
        #[arg(long = "ideal-I")]
        ideal_i: PathBuf,
        #[arg(long = "ideal-J")]
        ideal_j: PathBuf,
        #[arg(long = "new-var", default_value = "T")]
        new_var: String,
        #[arg(long)]
        phi: Option<PathBuf>,
        /// Resolve `J` by the Koszul complex on its listed generators.
        #[arg(long)]
        koszul: bool,
    },
    /// Resolution of the Stanley-Reisner ring of a cyclic polytope boundary (even d).
    Cyclic {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
    /// Resolution of a stellar subdivision of a simplicial complex.
    Stellar {
        /// Facet list, one facet per line.
        #[arg(long)]
        facets: PathBuf,
        /// Face to subdivide, vertices separated by spaces or commas.
        #[arg(long)]
        face: String,
        #[arg(long = "new-vertex")]
        new_vertex: String,
    },
    /// Checks that a complex resolves an ideal.
    Verify {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        ideal: PathBuf,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e.category() {
        ErrorCategory::Input => 2,
        ErrorCategory::Hypothesis => 3,
        ErrorCategory::Internal => 4,
    }
}

fn read_doc(path: &Path) -> Result<Document> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Document::parse(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn overrides(job: &JobSpec) -> Result<RingOverrides> {
    Ok(RingOverrides {
        field: job.field.as_deref().map(Field::parse).transpose()?,
        order: job.order.as_deref().map(MonomialOrder::parse).transpose()?,
    })
}

fn read_ideal_file(path: &Path, ov: RingOverrides) -> Result<Ideal> {
    let doc = read_doc(path)?;
    let ring = format::read_ring(&doc, ov)?;
    format::read_ideal(&doc, &ring)
}

fn write_out(job: &JobSpec, text: &str) -> Result<()> {
    if let Some(p) = &job.out {
        fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn require_symmetric(c: &ChainComplex, what: &str) -> Result<()> {
    if betti(c).is_palindromic() {
        Ok(())
    } else {
        Err(Error::HypothesisFailed(format!("Betti table of {what} is not symmetric")))
    }
}

fn require_resolution(c: &ChainComplex, ideal: &Ideal) -> Result<()> {
    match first_failure(c, ideal) {
        None => Ok(()),
        Some(i) => Err(Error::Verification(format!("not a resolution at position {i}"))),
    }
}

/// Reorders user lifts `generator -> lift` to match `gens`, rescaling when a
/// generator was given up to a constant.
fn match_phi(pairs: &[(Polynomial, Polynomial)], gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    gens.iter()
        .map(|g| {
            let (k, l) = pairs
                .iter()
                .find(|(k, _)| !k.is_zero() && k.monic() == g.monic())
                .ok_or_else(|| Error::InvalidArgument(format!("no lift given for generator `{g}`")))?;
            let (_, cg) = g.lead().expect("generators are nonzero");
            let (_, ck) = k.lead().expect("checked nonzero");
            let s = cg * &ck.inv().expect("nonzero coefficient");
            Ok(l.scale(&s))
        })
        .collect()
}

fn km_input(job: &JobSpec, ideal_i: &Path, ideal_j: &Path, t: &str, phi: Option<&Path>, koszul: bool) -> Result<KMInput> {
    let ov = overrides(job)?;
    let doc_i = read_doc(ideal_i)?;
    let ring = format::read_ring(&doc_i, ov)?;
    let c_i = if doc_i.has("matrix") {
        buchsbaum_eisenbud_complex(&SkewMatrix::from_map(&format::read_matrix(&doc_i, &ring)?)?)?
    } else {
        minimal_free_resolution(&format::read_ideal(&doc_i, &ring)?)?
    };
    let j = read_ideal_file(ideal_j, ov)?;
    if j.ring() != &ring {
        return Err(Error::RingMismatch(format!("J is over {}, I over {}", j.ring(), ring)));
    }
    let c_j = if koszul { koszul_complex(j.gens())? } else { minimal_free_resolution(&j)? };
    if job.strict {
        require_symmetric(&c_i, "R/I")?;
        require_symmetric(&c_j, "R/J")?;
    }
    let lifts = match phi {
        Some(p) => {
            let pairs = format::read_phi(&read_doc(p)?, &ring)?;
            Some(match_phi(&pairs, c_j.d(1).row(0))?)
        }
        None => None,
    };
    KMInput::from_resolutions(c_i, c_j, t, lifts)
}

fn finish_complex(job: &JobSpec, c: &ChainComplex, ideal: Option<&Ideal>, out: &mut String) -> Result<()> {
    if job.strict {
        require_symmetric(c, "the output")?;
        if let Some(i) = ideal {
            require_resolution(c, i)?;
        }
    }
    let _ = write!(out, "{}", betti(c));
    write_out(job, &format::write_complex_file(c))
}

/// Runs one job and returns what goes to standard output.
pub fn run(job: &JobSpec) -> Result<String> {
    let ov = overrides(job)?;
    let mut out = String::new();
    match &job.command {
        Command::Resolve { ideal } => {
            let i = read_ideal_file(ideal, ov)?;
            let c = minimal_free_resolution(&i)?;
            finish_complex(job, &c, Some(&i), &mut out)?;
        }
        Command::Resbe { matrix } => {
            let doc = read_doc(matrix)?;
            let ring = format::read_ring(&doc, ov)?;
            let c = buchsbaum_eisenbud_complex(&SkewMatrix::from_map(&format::read_matrix(&doc, &ring)?)?)?;
            for p in c.d(1).row(0) {
                let _ = writeln!(out, "{p}");
            }
            out.push('\n');
            finish_complex(job, &c, None, &mut out)?;
        }
        Command::Koszul { ideal } => {
            let i = read_ideal_file(ideal, ov)?;
            let c = koszul_complex(i.gens())?;
            finish_complex(job, &c, None, &mut out)?;
        }
        Command::Unproject { ideal_i, ideal_j, new_var, phi } => {
            let input = km_input(job, ideal_i, ideal_j, new_var, phi.as_deref(), false)?;
            let d = input.data();
            let u = unprojection_ideal(d)?;
            let pairs: Vec<_> = d.gens().iter().cloned().zip(d.lifts().iter().cloned()).collect();
            let text = format!(
                "{}\n{}\n{}",
                format::write_ring(u.ring()),
                format::write_ideal(u.gens()),
                format::write_phi(&pairs)
            );
            out.push_str(&text);
            write_out(job, &text)?;
        }
        Command::Km { ideal_i, ideal_j, new_var, phi, koszul } => {
            let input = km_input(job, ideal_i, ideal_j, new_var, phi.as_deref(), *koszul)?;
            let res = kustin_miller_complex(&input)?;
            let u = unprojection_ideal(input.data())?;
            finish_complex(job, &res.complex, Some(&u), &mut out)?;
        }
        Command::Cyclic { d, n } => {
            let c = cyclic_resolution(*d, *n, ov.field.unwrap_or(Field::Rationals))?;
            finish_complex(job, &c, None, &mut out)?;
        }
        Command::Stellar { facets, face, new_vertex } => {
            let text = fs::read_to_string(facets)
                .map_err(|e| Error::Io(format!("{}: {e}", facets.display())))?;
            let sc = SimplicialComplex::parse(&text)?;
            let face: Vec<&str> = face
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .collect();
            let c = stellar_resolution(&sc, &face, new_vertex, ov.field.unwrap_or(Field::Rationals))?;
            finish_complex(job, &c, None, &mut out)?;
        }
        Command::Verify { complex, ideal } => {
            let doc = read_doc(complex)?;
            let ring = format::read_ring(&doc, ov)?;
            let c = format::read_complex(&doc, &ring)?;
            let i = read_ideal_file(ideal, ov)?;
            if i.ring() != &ring {
                return Err(Error::RingMismatch(format!("ideal is over {}, complex over {}", i.ring(), ring)));
            }
            if job.strict {
                require_symmetric(&c, "the complex")?;
            }
            require_resolution(&c, &i)?;
            let _ = writeln!(out, "ok: resolution of length {}", c.len());
        }
    }
    Ok(out)
}
