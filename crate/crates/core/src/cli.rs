//! Command-line front end. Every subcommand prints one JSON document (JSONL for a census
//! written to stdout) or, with `--format text`, a plain rendering of the same data.
//!
//! Exit codes: 0 on success, 1 on a domain error (JSON error object on stderr) or a
//! failed check, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::census::{census, omega_brute, omega_closed, selfdual_count, selfdual_enumerate};
use crate::code::make_code;
use crate::cyclo::coset_table;
use crate::error::{Error, Result};
use crate::factor::{factor_unity_field, factor_xn_minus_r0};
use crate::gf::field_of_order;
use crate::oracle::verify_instance;
use crate::poly::CoeffRing;
use crate::ring::{make_ring, RingSpec};

#[derive(Parser, Debug)]
#[command(name = "chainforge", version, about = "Cyclic codes over finite chain rings")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Brute,
    Both,
}

fn parse_ring(s: &str) -> std::result::Result<RingSpec, String> {
    make_ring(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// q-cyclotomic cosets mod n with the reciprocal pairing
    Cosets {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
    },
    /// Factor X^n - 1 over F_q, or X^n - r0 over a chain ring
    Factor {
        #[arg(long, conflicts_with = "ring", required_unless_present = "ring")]
        q: Option<u64>,
        /// gr:p,t,m or fqu:p,alpha,t
        #[arg(long, value_parser = parse_ring)]
        ring: Option<RingSpec>,
        #[arg(long)]
        n: u64,
        /// Unit mu in r0 = 1 + mu * gamma (ring only)
        #[arg(long, requires = "ring")]
        mu: Option<String>,
    },
    /// Describe the code with exponents k (listed in ascending representative order)
    Code {
        #[arg(long, value_parser = parse_ring)]
        ring: RingSpec,
        #[arg(long)]
        n: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<u32>,
    },
    /// Count, and optionally list, the self-dual codes
    Selfdual {
        #[arg(long, value_parser = parse_ring)]
        ring: RingSpec,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        list: bool,
    },
    /// Number of self-reciprocal irreducible factors of X^n - 1 over F_q
    Omega {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// One census row per n in [n-from, n-to] coprime to q
    Census {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        n_from: u64,
        #[arg(long)]
        n_to: u64,
        /// JSONL destination; rows go to stdout when omitted
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Run the brute-force oracle battery on one instance
    Verify {
        #[arg(long, value_parser = parse_ring)]
        ring: RingSpec,
        #[arg(long)]
        n: u64,
    },
}

/// Output of a successful command: a document, its text rendering, and whether it reports a failure.
struct Output {
    json: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, failed: false }
    }
}

/// Runs the tool on `args` (program name first) and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    if let Command::Census { q, t, n_from, n_to, out: None } = cli.command {
        return match census(q, t, n_from, n_to) {
            Ok(rows) => {
                for row in rows {
                    let _ = writeln!(stdout, "{}", serde_json::to_string(&row).expect("serializable"));
                }
                0
            }
            Err(e) => domain_error(stderr, &e),
        };
    }
    match execute(&cli.command) {
        Ok(out) => {
            let _ = match cli.format {
                Format::Json => writeln!(stdout, "{}", out.json),
                Format::Text => write!(stdout, "{}", out.text),
            };
            i32::from(out.failed)
        }
        Err(e) => domain_error(stderr, &e),
    }
}

fn domain_error(stderr: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(stderr, "{}", json!({"error": e.kind(), "message": e.to_string()}));
    1
}

fn execute(command: &Command) -> Result<Output> {
    match command {
        Command::Cosets { q, n } => {
            let table = coset_table(*q, *n)?;
            let mut text = String::new();
            for (i, (rep, coset)) in table.reps().iter().zip(table.cosets()).enumerate() {
                let partner = table.reps()[table.partner_index(i)];
                text += &format!("{rep}: {coset:?} <-> {partner}\n");
            }
            Ok(Output::ok(table.to_json(), text))
        }
        Command::Factor { q: Some(q), n, .. } => {
            let field = field_of_order(*q)?;
            let factors = factor_unity_field(&field, *n)?;
            let list: Vec<Value> = factors
                .iter()
                .map(|(rep, h)| json!({"rep": rep, "h": field.format_poly(h)}))
                .collect();
            let text = factors
                .iter()
                .map(|(rep, h)| format!("{rep}: {}\n", field.format_poly(h)))
                .collect();
            Ok(Output::ok(json!({"q": q, "n": n, "factors": list}), text))
        }
        Command::Factor { ring, n, mu, .. } => {
            let ring = ring.as_ref().expect("clap requires --q or --ring");
            let mu = match mu {
                Some(text) => ring.parse_elem(text)?,
                None => ring.one(),
            };
            let fact = factor_xn_minus_r0(ring, *n, mu)?;
            let mut text = format!(
                "r0 = {}, delta = {}\n",
                ring.format_elem(fact.r0()),
                ring.format_elem(fact.delta())
            );
            for e in fact.entries() {
                text += &format!(
                    "{}: h = {}  g = {}  f = {}\n",
                    e.rep,
                    ring.residue_field().format_poly(&e.h),
                    ring.format_poly(&e.g),
                    ring.format_poly(&e.f)
                );
            }
            Ok(Output::ok(fact.to_json(), text))
        }
        Command::Code { ring, n, k } => {
            let fact = Arc::new(factor_xn_minus_r0(ring, *n, ring.one())?);
            let code = make_code(&fact, k)?;
            let text = format!(
                "exponents {:?}\ndual {:?}\n|C| = {}\nself-dual: {}\n",
                code.exponents(),
                code.dual().exponents(),
                code.cardinality(),
                code.is_self_dual()
            );
            Ok(Output::ok(code.to_json(), text))
        }
        Command::Selfdual { ring, n, list } => {
            let count = selfdual_count(ring.t(), ring.q(), *n)?;
            let mut json = json!({"ring": ring.name(), "n": n, "count": count.to_string()});
            let mut text = format!("{count}\n");
            if *list {
                let fact = Arc::new(factor_xn_minus_r0(ring, *n, ring.one())?);
                let vectors: Vec<Vec<u32>> = if ring.t() % 2 == 0 {
                    selfdual_enumerate(&fact)?.map(|c| c.exponents().to_vec()).collect()
                } else {
                    Vec::new()
                };
                for v in &vectors {
                    text += &format!("{v:?}\n");
                }
                json["exponents"] = json!(vectors);
            }
            Ok(Output::ok(json, text))
        }
        Command::Omega { q, n, method } => match method {
            Method::Closed | Method::Brute => {
                let d = if *method == Method::Closed { omega_closed(*q, *n)? } else { omega_brute(*q, *n)? };
                let text = format!("{} ({})\n", d.value, d.route.name());
                Ok(Output::ok(serde_json::to_value(&d).expect("serializable"), text))
            }
            Method::Both => {
                let closed = omega_closed(*q, *n)?;
                let brute = omega_brute(*q, *n)?;
                let agree = closed.value == brute.value;
                let json = json!({
                    "q": q,
                    "n": n,
                    "value": closed.value,
                    "routes": [closed.route.name(), brute.route.name()],
                    "agree": agree,
                    "derivations": [closed, brute],
                });
                let text = format!("closed {} brute {} agree {agree}\n", closed.value, brute.value);
                Ok(Output { json, text, failed: !agree })
            }
        },
        Command::Census { q, t, n_from, n_to, out } => {
            let rows = census(*q, *t, *n_from, *n_to)?;
            let path = out.as_ref().expect("stdout census handled in run");
            let mut body = String::new();
            for row in &rows {
                body += &serde_json::to_string(row).expect("serializable");
                body.push('\n');
            }
            std::fs::write(path, body).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let text = format!("{} rows written to {}\n", rows.len(), path.display());
            Ok(Output::ok(json!({"rows": rows.len(), "out": path.display().to_string()}), text))
        }
        Command::Verify { ring, n } => {
            let report = verify_instance(ring, *n)?;
            let failed = report.iter().any(|r| !r.pass);
            let text = report
                .iter()
                .map(|r| format!("{} {}: {}\n", if r.pass { "ok  " } else { "FAIL" }, r.check, r.detail))
                .collect();
            Ok(Output { json: serde_json::to_value(&report).expect("serializable"), text, failed })
        }
    }
}
