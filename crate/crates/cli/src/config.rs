use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nilrep::catalog::{default_eps_samples, ids_of_dim, AlgebraId, Variant, FAMILIES};
use nilrep::exactnum::Rational;
use nilrep::symbolic::{DEFAULT_RANDOM_CHECKS, DEFAULT_SEED};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "nilrep",
    version,
    about = "Faithful representations of nilpotent Lie algebras of dimension at most 6"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// ε samples for families: `LIST` for every family or `J=LIST` for `L6,J`;
    /// `LIST` is comma-separated rationals. Repeatable.
    #[arg(long = "eps-samples", global = true, allow_hyphen_values = true)]
    pub eps_samples: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Resolve μ and μ_nil for every algebra of a dimension and compare with the published table.
    Table {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(1..=6))]
        dim: u8,
    },
    /// Verify corpus representations: `L6_19?eps=1 pi1`, `L6_19 --eps -1`, `--all`, or a representation file.
    Verify {
        #[command(flatten)]
        select: Selection,
        /// Check the matrices exactly as printed, even where a patch is registered.
        #[arg(long)]
        published: bool,
    },
    /// Structural invariants of catalog algebras.
    Invariants {
        #[command(flatten)]
        select: Selection,
    },
    /// Run the commutator identity suite exactly and at random rational points.
    Identities {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long = "random-checks", default_value_t = DEFAULT_RANDOM_CHECKS)]
        random_checks: usize,
    },
    /// Check a user JSON file: an algebra (`dim`, `basis`, `brackets`) or a representation (`algebra`, `target_dim`, `images`).
    CheckFile { path: PathBuf },
}

#[derive(Args, Debug, Clone)]
pub struct Selection {
    /// Algebra id, optionally followed by a variant (`table_nilrep`, `table_rep`, `pi1`, `pi2`, `remark_624`).
    pub selector: Vec<String>,
    /// Every catalog algebra (restricted by `--dim` if given).
    #[arg(long, conflicts_with = "selector")]
    pub all: bool,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
    pub dim: Option<u8>,
    /// Family parameter for a selector without one.
    #[arg(long, allow_hyphen_values = true)]
    pub eps: Option<String>,
}

/// Parsed ε sample overrides.
#[derive(Clone, Debug, Default)]
pub struct EpsSamples {
    all: Option<Vec<Rational>>,
    per_family: BTreeMap<u8, Vec<Rational>>,
}

impl EpsSamples {
    pub fn parse(specs: &[String]) -> Result<Self, CliError> {
        let mut out = EpsSamples::default();
        for spec in specs {
            let (family, list) = match spec.split_once('=') {
                Some((f, l)) => {
                    let f: u8 = f
                        .trim()
                        .trim_start_matches("L6_")
                        .trim_start_matches("L6,")
                        .parse()
                        .map_err(|_| {
                            CliError::Input(format!("bad family in --eps-samples {spec:?}"))
                        })?;
                    if !FAMILIES.contains(&f) {
                        return Err(CliError::Input(format!("L6,{f} is not a family")));
                    }
                    (Some(f), l)
                }
                None => (None, spec.as_str()),
            };
            let values = parse_list(list)?;
            if values.is_empty() {
                return Err(CliError::Input(format!("empty sample list in {spec:?}")));
            }
            match family {
                Some(f) => {
                    out.per_family.insert(f, values);
                }
                None => out.all = Some(values),
            }
        }
        Ok(out)
    }

    pub fn samples(&self, family: u8) -> Vec<Rational> {
        self.per_family
            .get(&family)
            .or(self.all.as_ref())
            .cloned()
            .unwrap_or_else(|| default_eps_samples(family))
    }

    pub fn ids_of_dim(&self, dim: u8) -> Vec<AlgebraId> {
        ids_of_dim(dim, |f| self.samples(f))
    }
}

fn parse_list(list: &str) -> Result<Vec<Rational>, CliError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_rational)
        .collect()
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Input(format!("not a rational number: {s:?}")))
}

/// What a selection resolves to.
#[derive(Debug)]
pub enum Target {
    Catalog(Vec<(AlgebraId, Option<Variant>)>),
    File(PathBuf),
}

/// Splits `L6_19?eps=1 pi1` into tokens whether passed as one or several arguments.
fn tokens(selector: &[String]) -> Vec<String> {
    selector
        .iter()
        .flat_map(|s| s.split_whitespace().map(str::to_string).collect::<Vec<_>>())
        .collect()
}

/// `L{d}_{i}` or `L{d},{i}` without parameter.
fn parse_family_name(s: &str) -> Option<(u8, u8)> {
    let rest = s.strip_prefix('L')?;
    let (d, i) = rest.split_once(['_', ','])?;
    Some((d.parse().ok()?, i.parse().ok()?))
}

fn resolve_id(
    token: &str,
    eps: Option<&Rational>,
    samples: &EpsSamples,
) -> Result<Vec<AlgebraId>, CliError> {
    if let Ok(id) = token.parse::<AlgebraId>() {
        return match eps {
            Some(_) => Err(CliError::Input(format!(
                "--eps given but {id} already fixes its parameter"
            ))),
            None => Ok(vec![id]),
        };
    }
    let (dim, index) = parse_family_name(token)
        .ok_or_else(|| CliError::Input(format!("unknown selector {token:?}")))?;
    let probe = AlgebraId::new(dim, index, Some(Rational::from(0)));
    if probe.is_err() {
        return Err(CliError::Input(format!("unknown algebra {token:?}")));
    }
    let values = match eps {
        Some(e) => vec![e.clone()],
        None => samples.samples(index),
    };
    values
        .into_iter()
        .map(|e| AlgebraId::new(dim, index, Some(e)).map_err(|e| CliError::Input(e.to_string())))
        .collect()
}

impl Selection {
    pub fn resolve(&self, samples: &EpsSamples) -> Result<Target, CliError> {
        let eps = self.eps.as_deref().map(parse_rational).transpose()?;
        if self.all || (self.selector.is_empty() && self.dim.is_some()) {
            if eps.is_some() {
                return Err(CliError::Input(
                    "--eps needs a single algebra selector".into(),
                ));
            }
            let dims: Vec<u8> = self.dim.map_or_else(|| (1..=6).collect(), |d| vec![d]);
            let ids = dims
                .into_iter()
                .flat_map(|d| samples.ids_of_dim(d))
                .map(|id| (id, None))
                .collect();
            return Ok(Target::Catalog(ids));
        }
        let toks = tokens(&self.selector);
        let (first, rest) = toks
            .split_first()
            .ok_or_else(|| CliError::Input("give an algebra selector, a file, or --all".into()))?;
        if rest.is_empty() && std::path::Path::new(first).is_file() {
            return Ok(Target::File(PathBuf::from(first)));
        }
        let variant = match rest {
            [] => None,
            [v] => Some(
                v.parse::<Variant>()
                    .map_err(|e| CliError::Input(e.to_string()))?,
            ),
            _ => {
                return Err(CliError::Input(format!(
                    "unexpected selector tokens {rest:?}"
                )))
            }
        };
        let ids = resolve_id(first, eps.as_ref(), samples)?;
        if let Some(d) = self.dim {
            if ids.iter().any(|id| id.dim() != d) {
                return Err(CliError::Input(format!("{first} is not of dimension {d}")));
            }
        }
        Ok(Target::Catalog(
            ids.into_iter().map(|id| (id, variant)).collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sel(selector: &[&str], eps: Option<&str>) -> Selection {
        Selection {
            selector: selector.iter().map(|s| s.to_string()).collect(),
            all: false,
            dim: None,
            eps: eps.map(Into::into),
        }
    }

    #[test]
    fn family_without_parameter_expands_to_samples() {
        let samples = EpsSamples::parse(&["19=-1,2".into()]).unwrap();
        let Target::Catalog(ids) = sel(&["L6_19"], None).resolve(&samples).unwrap() else {
            panic!()
        };
        let names: Vec<String> = ids.iter().map(|(i, _)| i.to_string()).collect();
        assert_eq!(names, ["L6_19?eps=-1", "L6_19?eps=2"]);
    }

    #[test]
    fn one_argument_selector_with_variant() {
        let Target::Catalog(ids) = sel(&["L6_19?eps=1 pi1"], None)
            .resolve(&EpsSamples::default())
            .unwrap()
        else {
            panic!()
        };
        assert_eq!(
            ids,
            vec![("L6_19?eps=1".parse().unwrap(), Some(Variant::Pi1))]
        );
    }

    #[test]
    fn explicit_eps_and_errors() {
        let Target::Catalog(ids) = sel(&["L6,24"], Some("-3/2"))
            .resolve(&EpsSamples::default())
            .unwrap()
        else {
            panic!()
        };
        assert_eq!(ids[0].0.to_string(), "L6_24?eps=-3/2");
        assert!(sel(&["L6_3"], Some("1"))
            .resolve(&EpsSamples::default())
            .is_err());
        assert!(sel(&["L7_1"], None)
            .resolve(&EpsSamples::default())
            .is_err());
        assert!(sel(&["L6_3", "pi9"], None)
            .resolve(&EpsSamples::default())
            .is_err());
        assert!(EpsSamples::parse(&["20=1".into()]).is_err());
        assert!(EpsSamples::parse(&["x".into()]).is_err());
    }

    #[test]
    fn global_samples_apply_to_every_family_unless_overridden() {
        let s = EpsSamples::parse(&["5".into(), "24=1".into()]).unwrap();
        assert_eq!(s.samples(19), vec![Rational::from(5)]);
        assert_eq!(s.samples(24), vec![Rational::from(1)]);
        assert_eq!(EpsSamples::default().samples(22), default_eps_samples(22));
    }
}
