use std::process::ExitCode;

use asinv::scalars::parse_rational;
use asinv::{AlgebraSpec, CycloScalar, Error, GroupSpec};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "asinv", version, about = "Invariants of finite groups acting on the quantum and Jordan planes")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum AlgebraArg {
    Qminus1,
    Jordan,
    Commutative,
    Quantum,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// Ambient plane.
    #[arg(long, value_enum, default_value_t = AlgebraArg::Qminus1)]
    algebra: AlgebraArg,
    /// Quantum parameter for `--algebra quantum`: `root:m` for a primitive m-th root of unity, or a rational `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// `gnk N K`, `cyclic N A`, `dihedral M Q` or `trivial`.
    #[arg(long, num_args = 1..=3, value_name = "KIND [PARAMS]", required = true)]
    group: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smallness, homological determinant and related flags.
    Classify {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Trace series of every group element.
    Trace {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "N", default_value_t = 10)]
        n: usize,
    },
    /// Molien series coefficients through degree N.
    Molien {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "N", default_value_t = 20)]
        n: usize,
    },
    /// Hirzebruch-Jung expansion of p/q and the derived series.
    Hj { p: i64, q: i64 },
    /// Explicit generators of the invariant ring.
    Generators {
        #[command(flatten)]
        group: GroupArgs,
        /// Check generation against the Molien series through this degree.
        #[arg(long)]
        verify: Option<u32>,
    },
    /// Emit a presentation of the invariant ring.
    Present {
        #[command(flatten)]
        group: GroupArgs,
        /// Degree bound for relation discovery when no closed form is known.
        #[arg(long = "N")]
        n: Option<u32>,
    },
    /// Verify a presentation read as JSON from stdin.
    VerifyPres {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "N")]
        n: Option<u32>,
    },
    /// Search for a degree beyond which the ideal of the averaging element is everything.
    Auslander {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "N")]
        n: Option<u32>,
    },
    /// Basis of the degree d invariants of G(n, k) from the closed formula.
    GnkBasis { n: u32, k: u32, d: u32 },
}

fn parse_u32(s: &str, what: &str) -> Result<u32, Error> {
    s.parse().map_err(|_| Error::InvalidParameters(format!("{what} must be a non-negative integer, got {s:?}")))
}

impl GroupArgs {
    fn algebra(&self) -> Result<AlgebraSpec, Error> {
        if self.q.is_some() && self.algebra != AlgebraArg::Quantum {
            return Err(Error::InvalidParameters("--q is only meaningful with --algebra quantum".into()));
        }
        match self.algebra {
            AlgebraArg::Qminus1 => Ok(AlgebraSpec::qminus1()),
            AlgebraArg::Jordan => Ok(AlgebraSpec::jordan()),
            AlgebraArg::Commutative => Ok(AlgebraSpec::commutative()),
            AlgebraArg::Quantum => {
                let q = self.q.as_deref().ok_or_else(|| Error::InvalidParameters("--algebra quantum needs --q".into()))?;
                if let Some(m) = q.strip_prefix("root:") {
                    let m = parse_u32(m, "root order")?;
                    if m == 0 {
                        return Err(Error::InvalidParameters("root order must be positive".into()));
                    }
                    Ok(AlgebraSpec::quantum_root(m))
                } else {
                    AlgebraSpec::quantum(CycloScalar::from_rational(&parse_rational(q)?))
                }
            }
        }
    }

    pub fn group(&self) -> Result<GroupSpec, Error> {
        let spec = self.algebra()?;
        let kind = self.group[0].as_str();
        let params = self.group[1..].iter().map(|s| parse_u32(s, "group parameter")).collect::<Result<Vec<u32>, _>>()?;
        let want = |n: usize| {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::InvalidParameters(format!("--group {kind} takes {n} parameters, got {}", params.len())))
            }
        };
        match kind {
            "trivial" => {
                want(0)?;
                Ok(GroupSpec::trivial(spec))
            }
            "cyclic" => {
                want(2)?;
                GroupSpec::cyclic(spec, params[0], params[1])
            }
            "gnk" => {
                want(2)?;
                if !spec.is_qminus1() || spec.is_jordan() {
                    return Err(Error::InvalidParameters("G(n, k) acts on the q = -1 plane only; use --algebra qminus1".into()));
                }
                GroupSpec::gnk(params[0], params[1])
            }
            "dihedral" => {
                want(2)?;
                GroupSpec::dihedral(spec, params[0], params[1])
            }
            other => Err(Error::InvalidParameters(format!("unknown group kind {other:?}"))),
        }
    }
}

fn run(cli: Cli) -> Result<String, Error> {
    let payload = match &cli.command {
        Command::Classify { group } => commands::classify(group)?,
        Command::Trace { group, n } => commands::trace(group, *n)?,
        Command::Molien { group, n } => commands::molien(group, *n)?,
        Command::Hj { p, q } => commands::hj(*p, *q)?,
        Command::Generators { group, verify } => commands::generators(group, *verify)?,
        Command::Present { group, n } => commands::present(group, *n)?,
        Command::VerifyPres { group, n } => {
            let mut input = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut input)
                .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
            commands::verify_pres(group, *n, &input)?
        }
        Command::Auslander { group, n } => commands::auslander(group, *n)?,
        Command::GnkBasis { n, k, d } => commands::gnk_basis(*n, *k, *d)?,
    };
    Ok(commands::render(&payload, cli.format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 2 } else { 1 })
        }
    }
}
