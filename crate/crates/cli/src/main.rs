//! Command-line front end: print counting triangles by independent backends,
//! verify the library's identities over exhaustive ranges, and apply the
//! bijections to user-supplied paths and tableaux.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 identity verification
//! failure. Results go to stdout, diagnostics to stderr.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use motzkin_humps::bijections::{
    cap_phi_forward_traced, cap_phi_inverse_traced, f_forward_traced, f_inverse_traced,
    move_flat_inverse_traced, move_flat_traced, phi_forward_traced, phi_inverse_traced,
    psi_forward_traced, psi_inverse_traced, psi_star_forward_traced, psi_star_inverse_traced,
    rho1_forward_traced, rho1_inverse_traced, rho2_forward_traced, rho2_inverse_traced,
    varphi_forward_traced, varphi_inverse_traced, Decomposition, HumpedPath,
};
use motzkin_humps::error::Error;
use motzkin_humps::parse_path;
use motzkin_humps::tables::{build_triangle, Backend, TriangleKind};
use motzkin_humps::tableaux::HookTableau;
use motzkin_humps::verify::{verify, Identity, VerificationReport, ALL_IDENTITIES};

/// Enumeration bound when neither `--cap` nor the environment sets one.
/// Lower than the library default: 3^14 words is where interactive use stops
/// being instant.
const CLI_DEFAULT_CAP: usize = 14;
const CAP_ENV_VAR: &str = "MOTZKIN_HUMPS_CAP";

#[derive(Parser)]
#[command(
    name = "motzkin-humps",
    version,
    about = "Exact counts and bijections for Motzkin-path humps and hook tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a counting triangle (hm, pm, s, or mp) to stdout.
    Triangle {
        /// Which triangle: hm (humps), pm (peaks), s (hook tableaux), mp
        /// (prefixes by end height).
        kind: String,
        /// How to compute it: enum, formula, or series.
        #[arg(long, default_value = "enum")]
        backend: String,
        /// Last row; defaults to 12 for the enumeration backend, 40 otherwise.
        #[arg(long)]
        n_max: Option<usize>,
        /// Output format: csv or json.
        #[arg(long, default_value = "csv")]
        format: String,
        /// Enumeration size cap (also settable via MOTZKIN_HUMPS_CAP).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Check one identity (or all of them) exhaustively and report.
    Verify {
        /// Identity name, or "all". See --help for the list.
        #[arg(long_help = identity_long_help())]
        identity: String,
        /// Check up to this order; each identity has a documented default.
        #[arg(long)]
        n_max: Option<usize>,
        /// Enumeration size cap (also settable via MOTZKIN_HUMPS_CAP).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Apply one of the bijections to a path word or tableau.
    Bijection {
        /// psi | psi-star | rho1 | rho2 | phi | varphi | cap-phi | f |
        /// move-flat
        map: String,
        /// A path word over U/D/F (optionally WORD@INDEX to mark a hump), or
        /// a tableau as JSON {"row1":[..],"row2":[..],"column":[..]}.
        #[arg(long)]
        input: String,
        /// Apply the inverse map instead.
        #[arg(long)]
        inverse: bool,
        /// Index of the up step opening the marked hump (alternative to @).
        #[arg(long)]
        hump: Option<usize>,
        /// Target order for maps that change the order (rho1, f inverses).
        #[arg(long)]
        n: Option<usize>,
        /// Height parameter for the rho2 inverse.
        #[arg(long)]
        k: Option<usize>,
        /// Print input, output, and the input's segment decomposition as JSON.
        #[arg(long)]
        trace: bool,
    },
}

fn identity_long_help() -> String {
    let mut lines = vec!["Identity name, or \"all\". Available identities:".to_string()];
    for id in ALL_IDENTITIES {
        lines.push(format!(
            "  {:<20} {} (default n_max {})",
            id.name(),
            id.description(),
            id.default_n_max()
        ));
    }
    lines.join("\n")
}

fn effective_cap(flag: Option<usize>) -> Result<usize, Error> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(CAP_ENV_VAR) {
        Ok(s) => s.parse().map_err(|_| {
            Error::Domain(format!("{CAP_ENV_VAR} must be a nonnegative integer; got \"{s}\""))
        }),
        Err(_) => Ok(CLI_DEFAULT_CAP),
    }
}

fn run_triangle(
    kind: &str,
    backend: &str,
    n_max: Option<usize>,
    format: &str,
    cap: Option<usize>,
) -> Result<ExitCode, Error> {
    let kind: TriangleKind = kind.parse()?;
    let backend: Backend = backend.parse()?;
    let n_max = n_max.unwrap_or(match backend {
        Backend::Enumeration => 12,
        Backend::Formula | Backend::Series => 40,
    });
    let cap = effective_cap(cap)?;
    let triangle = build_triangle(kind, backend, n_max, cap)?;
    match format {
        "csv" => print!("{}", triangle.to_csv()),
        "json" => println!("{}", triangle.to_json()),
        other => {
            return Err(Error::Domain(format!(
                "unknown format \"{other}\"; expected csv or json"
            )))
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(
    identity: &str,
    n_max: Option<usize>,
    cap: Option<usize>,
) -> Result<ExitCode, Error> {
    let cap = effective_cap(cap)?;
    let ids: Vec<Identity> = if identity == "all" {
        ALL_IDENTITIES.to_vec()
    } else {
        vec![identity.parse()?]
    };
    let mut all_pass = true;
    for id in ids {
        let report: VerificationReport = verify(id, n_max.unwrap_or(id.default_n_max()), cap)?;
        all_pass &= report.pass;
        println!("{report}");
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

/// The three shapes a bijection's input or output can take.
enum Object {
    Word(motzkin_humps::PathWord),
    Marked(HumpedPath),
    Tableau(HookTableau),
}

impl Object {
    fn render(&self) -> String {
        match self {
            Object::Word(w) => w.to_string(),
            Object::Marked(hp) => format!("{}@{}", hp.path(), hp.hump().up_index),
            Object::Tableau(t) => t.to_json(),
        }
    }

    fn to_value(&self) -> serde_json::Value {
        match self {
            Object::Tableau(t) => {
                serde_json::from_str(&t.to_json()).expect("tableau JSON is valid")
            }
            other => json!(other.render()),
        }
    }
}

fn parse_word_input(input: &str, hump: Option<usize>) -> Result<Object, Error> {
    match input.split_once('@') {
        Some((word, index)) => {
            let index: usize = index.parse().map_err(|_| {
                Error::Domain(format!("hump index after '@' must be an integer; got \"{index}\""))
            })?;
            if hump.is_some_and(|h| h != index) {
                return Err(Error::Domain(
                    "conflicting hump indices given via '@' and --hump".into(),
                ));
            }
            Ok(Object::Marked(HumpedPath::new(parse_path(word)?, index)?))
        }
        None => match hump {
            Some(index) => Ok(Object::Marked(HumpedPath::new(parse_path(input)?, index)?)),
            None => Ok(Object::Word(parse_path(input)?)),
        },
    }
}

fn parse_marked_input(input: &str, hump: Option<usize>) -> Result<HumpedPath, Error> {
    match parse_word_input(input, hump)? {
        Object::Marked(hp) => Ok(hp),
        _ => Err(Error::Domain(
            "this map needs a marked hump: pass WORD@INDEX or --hump INDEX".into(),
        )),
    }
}

fn parse_plain_word(input: &str) -> Result<motzkin_humps::PathWord, Error> {
    match input.split_once('@') {
        Some((word, _)) => {
            // Accept a marked word where only the underlying word matters.
            parse_path(word)
        }
        None => parse_path(input),
    }
}

fn require(param: Option<usize>, flag: &str, why: &str) -> Result<usize, Error> {
    param.ok_or_else(|| Error::Domain(format!("this map needs {flag} ({why})")))
}

struct BijectionArgs {
    inverse: bool,
    hump: Option<usize>,
    n: Option<usize>,
    k: Option<usize>,
}

fn apply_bijection(
    map: &str,
    input: &str,
    args: &BijectionArgs,
) -> Result<(Object, Decomposition), Error> {
    let inv = args.inverse;
    match (map, inv) {
        ("psi", false) => {
            let hp = parse_marked_input(input, args.hump)?;
            let (out, d) = psi_forward_traced(&hp);
            Ok((Object::Word(out), d))
        }
        ("psi", true) => {
            let (hp, d) = psi_inverse_traced(&parse_plain_word(input)?)?;
            Ok((Object::Marked(hp), d))
        }
        ("psi-star", false) => {
            let hp = parse_marked_input(input, args.hump)?;
            let (out, d) = psi_star_forward_traced(&hp);
            Ok((Object::Word(out), d))
        }
        ("psi-star", true) => {
            let (hp, d) = psi_star_inverse_traced(&parse_plain_word(input)?)?;
            Ok((Object::Marked(hp), d))
        }
        ("rho1", false) => {
            let (out, d) = rho1_forward_traced(&parse_plain_word(input)?)?;
            Ok((Object::Word(out), d))
        }
        ("rho1", true) => {
            let n = require(args.n, "--n", "the order of the word to rebuild")?;
            let (out, d) = rho1_inverse_traced(&parse_plain_word(input)?, n)?;
            Ok((Object::Word(out), d))
        }
        ("rho2", false) => {
            let (out, d) = rho2_forward_traced(&parse_plain_word(input)?)?;
            Ok((Object::Word(out), d))
        }
        ("rho2", true) => {
            let k = require(args.k, "--k", "half the end height of the preimage")?;
            let (out, d) = rho2_inverse_traced(&parse_plain_word(input)?, k)?;
            Ok((Object::Word(out), d))
        }
        ("phi", false) => {
            let t = HookTableau::from_json(input)?;
            let (out, d) = phi_forward_traced(&t)?;
            Ok((Object::Word(out), d))
        }
        ("phi", true) => {
            let (t, d) = phi_inverse_traced(&parse_plain_word(input)?)?;
            Ok((Object::Tableau(t), d))
        }
        ("varphi", false) => {
            let (out, d) = varphi_forward_traced(&parse_plain_word(input)?)?;
            Ok((Object::Word(out), d))
        }
        ("varphi", true) => {
            let (out, d) = varphi_inverse_traced(&parse_plain_word(input)?)?;
            Ok((Object::Word(out), d))
        }
        ("cap-phi", false) => {
            let hp = parse_marked_input(input, args.hump)?;
            let (t, d) = cap_phi_forward_traced(&hp)?;
            Ok((Object::Tableau(t), d))
        }
        ("cap-phi", true) => {
            let t = HookTableau::from_json(input)?;
            let (hp, d) = cap_phi_inverse_traced(&t)?;
            Ok((Object::Marked(hp), d))
        }
        ("f", false) => {
            let (out, d) = f_forward_traced(&parse_plain_word(input)?)?;
            Ok((Object::Word(out), d))
        }
        ("f", true) => {
            let n = require(args.n, "--n", "the order of the preimage")?;
            let (out, d) = f_inverse_traced(&parse_plain_word(input)?, n)?;
            Ok((Object::Word(out), d))
        }
        ("move-flat", false) => {
            let (out, d) = move_flat_traced(&parse_plain_word(input)?)?;
            Ok((Object::Word(out), d))
        }
        ("move-flat", true) => {
            let (out, d) = move_flat_inverse_traced(&parse_plain_word(input)?)?;
            Ok((Object::Word(out), d))
        }
        (other, _) => Err(Error::Domain(format!(
            "unknown map \"{other}\"; expected psi, psi-star, rho1, rho2, phi, \
             varphi, cap-phi, f, or move-flat"
        ))),
    }
}

fn run_bijection(
    map: &str,
    input: &str,
    args: &BijectionArgs,
    trace: bool,
) -> Result<ExitCode, Error> {
    let (output, decomposition) = apply_bijection(map, input, args)?;
    if trace {
        let input_value = match (map, args.inverse) {
            ("phi", false) | ("cap-phi", true) => {
                Object::Tableau(HookTableau::from_json(input)?).to_value()
            }
            _ => json!(input),
        };
        let traced = json!({
            "input": input_value,
            "segments": decomposition.segments,
            "output": output.to_value(),
        });
        println!("{traced}");
    } else {
        println!("{}", output.render());
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Triangle { kind, backend, n_max, format, cap } => {
            run_triangle(kind, backend, *n_max, format, *cap)
        }
        Command::Verify { identity, n_max, cap } => run_verify(identity, *n_max, *cap),
        Command::Bijection { map, input, inverse, hump, n, k, trace } => {
            let args =
                BijectionArgs { inverse: *inverse, hump: *hump, n: *n, k: *k };
            run_bijection(map, input, &args, *trace)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version print to stdout and succeed; genuine
            // usage errors are diagnostics and exit 1 per the contract.
            let to_stderr = e.use_stderr();
            let _ = e.print();
            return if to_stderr { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
