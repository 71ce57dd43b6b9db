use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use knotcolor::knotio::{load_dt_fixtures, BraidWord};
use knotcolor::quandle::{library_generate, library_load, trivial, GenerationSpec, Library};
use knotcolor::{affine, dihedral, fixtures, parse_braid, parse_dt, parse_gauss, torus_braid};
use knotcolor::{braid_to_diagram, KnotDiagram, Quandle};

/// A knot given as `kind:value`, e.g. `gauss:O1+ U1+`, `braid:2: 1 1 1`,
/// `torus:2,3`, `dt:4 6 2`, `fixture:trefoil-gauss` or
/// `file:knots.csv#4_1`.
#[derive(Debug, Clone)]
pub enum KnotSpec {
    Gauss(String),
    Braid(String),
    Torus(usize, usize),
    Dt(String),
    Fixture(String),
    File(PathBuf, Option<String>),
}

pub struct LoadedKnot {
    pub name: String,
    pub diagram: KnotDiagram,
    pub braid: Option<BraidWord>,
}

impl FromStr for KnotSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, value) = s
            .split_once(':')
            .ok_or_else(|| format!("knot spec `{s}` must look like kind:value"))?;
        Ok(match kind {
            "gauss" => KnotSpec::Gauss(value.into()),
            "braid" => KnotSpec::Braid(value.into()),
            "dt" => KnotSpec::Dt(value.into()),
            "torus" => {
                let (p, q) = parse_pair(value)?;
                KnotSpec::Torus(p, q)
            }
            "fixture" => KnotSpec::Fixture(value.into()),
            "file" => match value.split_once('#') {
                Some((path, name)) => KnotSpec::File(path.into(), Some(name.into())),
                None => KnotSpec::File(value.into(), None),
            },
            _ => return Err(format!("unknown knot kind `{kind}`")),
        })
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotSpec::Gauss(g) => write!(f, "gauss:{g}"),
            KnotSpec::Braid(b) => write!(f, "braid:{b}"),
            KnotSpec::Torus(p, q) => write!(f, "torus:{p},{q}"),
            KnotSpec::Dt(d) => write!(f, "dt:{d}"),
            KnotSpec::Fixture(n) => write!(f, "fixture:{n}"),
            KnotSpec::File(p, Some(n)) => write!(f, "file:{}#{n}", p.display()),
            KnotSpec::File(p, None) => write!(f, "file:{}", p.display()),
        }
    }
}

pub fn parse_pair(value: &str) -> Result<(usize, usize), String> {
    let (a, b) = value
        .split_once(',')
        .ok_or_else(|| format!("expected two numbers `a,b`, got `{value}`"))?;
    let num = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{x}` is not a number"))
    };
    Ok((num(a)?, num(b)?))
}

impl KnotSpec {
    pub fn load(&self) -> Result<LoadedKnot, String> {
        let from_braid = |b: BraidWord, name: String| -> Result<LoadedKnot, String> {
            let diagram = braid_to_diagram(&b).map_err(|e| e.to_string())?;
            Ok(LoadedKnot {
                name,
                diagram,
                braid: Some(b),
            })
        };
        let plain = |diagram: KnotDiagram, name: String| LoadedKnot {
            name,
            diagram,
            braid: None,
        };
        let err = |e: knotcolor::KnotError| e.to_string();
        match self {
            KnotSpec::Gauss(g) => Ok(plain(parse_gauss(g).map_err(err)?, self.to_string())),
            KnotSpec::Dt(d) => Ok(plain(parse_dt(d).map_err(err)?, self.to_string())),
            KnotSpec::Braid(b) => from_braid(parse_braid(b).map_err(err)?, self.to_string()),
            KnotSpec::Torus(p, q) => {
                from_braid(torus_braid(*p, *q).map_err(err)?, format!("T({p},{q})"))
            }
            KnotSpec::Fixture(name) => {
                let f =
                    fixtures::fixture(name).ok_or_else(|| format!("no fixture named `{name}`"))?;
                Ok(LoadedKnot {
                    name: f.name.to_string(),
                    diagram: f.diagram,
                    braid: f.braid,
                })
            }
            KnotSpec::File(path, name) => {
                let mut all = load_knot_file(path)?;
                let index = match name {
                    Some(n) => all
                        .iter()
                        .position(|k| k.name == *n)
                        .ok_or_else(|| format!("no knot named `{n}` in {}", path.display()))?,
                    None if all.is_empty() => {
                        return Err(format!("{} holds no knots", path.display()))
                    }
                    None => 0,
                };
                Ok(all.swap_remove(index))
            }
        }
    }
}

/// Reads a `name,dt_code` CSV, warning about rows that fail to decode.
pub fn load_knot_file(path: &PathBuf) -> Result<Vec<LoadedKnot>, String> {
    let file = std::fs::File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let (knots, rejected) =
        load_dt_fixtures(file).map_err(|e| format!("{}: {e}", path.display()))?;
    for r in rejected {
        eprintln!(
            "warning: {} row {} ({}): {}",
            path.display(),
            r.row,
            r.name,
            r.reason
        );
    }
    Ok(knots
        .into_iter()
        .map(|d| LoadedKnot {
            name: d.name().unwrap_or("").to_string(),
            diagram: d,
            braid: None,
        })
        .collect())
}

/// `dihedral:N`, `affine:N,T`, `trivial:N` or `file:PATH#NAME`.
#[derive(Debug, Clone)]
pub struct QuandleSpec(String);

impl FromStr for QuandleSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let spec = QuandleSpec(s.to_string());
        if !s.starts_with("file:") {
            spec.build()?;
        }
        Ok(spec)
    }
}

impl QuandleSpec {
    pub fn build(&self) -> Result<Quandle, String> {
        let s = &self.0;
        let (kind, value) = s
            .split_once(':')
            .ok_or_else(|| format!("quandle spec `{s}` must look like kind:value"))?;
        let num = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{x}` is not a number"))
        };
        let q = match kind {
            "dihedral" => dihedral(num(value)?),
            "trivial" => trivial(num(value)?),
            "affine" => {
                let (n, t) = parse_pair(value)?;
                affine(n, t)
            }
            "file" => {
                let (path, name) = value
                    .split_once('#')
                    .ok_or("file quandle spec needs `file:PATH#NAME`")?;
                let library = load_library_file(&PathBuf::from(path))?;
                return library
                    .iter()
                    .find(|q| q.name() == Some(name))
                    .cloned()
                    .ok_or_else(|| format!("no quandle named `{name}` in {path}"));
            }
            _ => return Err(format!("unknown quandle kind `{kind}`")),
        };
        q.map_err(|e| e.to_string())
    }
}

pub fn load_library_file(path: &PathBuf) -> Result<Library, String> {
    let (library, rejected) = library_load(path).map_err(|e| format!("{}: {e}", path.display()))?;
    for r in rejected {
        eprintln!(
            "warning: {} record {} ({}): {}",
            path.display(),
            r.record,
            r.name,
            r.error
        );
    }
    Ok(library)
}

/// `standard`, `dihedral-primes:B` or `affine:B` (connected affine
/// quandles over `Z_n`, `n <= B`).
#[derive(Debug, Clone)]
pub struct GenerateSpec(GenerationSpec);

impl FromStr for GenerateSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bound = |v: &str| {
            v.parse::<usize>()
                .map_err(|_| format!("`{v}` is not a number"))
        };
        let spec = match s.split_once(':') {
            None if s == "standard" => GenerationSpec::standard(),
            Some(("dihedral-primes", v)) => GenerationSpec::dihedral_primes(bound(v)?),
            Some(("affine", v)) => GenerationSpec {
                connected_affine_up_to: Some(bound(v)?),
                ..GenerationSpec::default()
            },
            _ => return Err(format!("unknown library generator `{s}`")),
        };
        Ok(GenerateSpec(spec))
    }
}

impl GenerateSpec {
    pub fn generate(&self) -> Library {
        library_generate(&self.0)
    }
}
