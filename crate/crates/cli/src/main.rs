//! `seifert`: exact Seifert fibered space computations from the shell.
//!
//! Data goes to stdout, diagnostics to stderr. Exit status is 0 on success,
//! 2 on malformed input and 3 when the input is well formed but the
//! computation is undefined for it; the error name is printed on stderr.

mod family;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use seifert_core::foundation::format_rational;
use seifert_core::hj::{chain_from_hull, expand, lattice_hull_oracle, resolve_sheaf_chern};
use seifert_core::moduli::{
    cs_coefficient, enumerate_components, floer_table, interpolation_dimension, Endpoint, Sign,
};
use seifert_core::notation::{bundle_list, format_manifold, parse_bundle, parse_manifold};
use seifert_core::orbifold::SeifertFibration;
use seifert_core::resolution::{
    build_lattice, chern_coefficients, dim_closed_form_as_printed, dim_y, solve_coefficients,
};
use seifert_core::{BundleData, Error};

use family::{parse_range, FamilySpec};

#[derive(Parser)]
#[command(name = "seifert", version, about = "Exact Seiberg-Witten data of Seifert fibered spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Format {
    /// Emit JSON.
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct JsonFlag {
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible Floer homology ranks by grading.
    Hf {
        /// `Sigma(a1,...,an)` or `M(g;b;(a,b),...)`.
        manifold: String,
        #[command(flatten)]
        format: Format,
    },
    /// One rank table per member of a family such as `2,3,6k-1`.
    Family {
        pattern: String,
        /// Inclusive range `LO..HI`.
        #[arg(long = "k", allow_hyphen_values = true)]
        k: String,
        #[command(flatten)]
        format: Format,
    },
    /// Riemann-Roch dimension `dim_Y` of bundle data `(e;eps...)`.
    Dim {
        manifold: String,
        bundle: String,
        /// Cross-check the closed form against an exact solve and report
        /// the printed-layout closed form.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        format: JsonFlag,
    },
    /// Expected dimension of flows between two critical points.
    Flowdim {
        manifold: String,
        from: String,
        /// Target bundle data; omit with `--to-reducible`.
        to: Option<String>,
        #[arg(long, conflicts_with = "to")]
        to_reducible: bool,
        /// Sign of the irreducible endpoints.
        #[arg(long, default_value = "+", value_parser = ["+", "-"])]
        sign: String,
        #[command(flatten)]
        format: JsonFlag,
    },
    /// Critical components with degrees, dimensions and cs coefficients.
    Enumerate {
        manifold: String,
        /// Restrict to the Spin^c class of this bundle.
        #[arg(long)]
        spinc: Option<String>,
        #[command(flatten)]
        format: JsonFlag,
    },
    /// Chern-Simons coefficient `r` with `cs = 4 pi^2 r`.
    Cs {
        manifold: String,
        bundle: String,
        #[command(flatten)]
        format: JsonFlag,
    },
    /// Hirzebruch-Jung expansion of `p/q`.
    Hj {
        p: i64,
        q: i64,
        /// Recompute from the lattice hull and compare.
        #[arg(long)]
        oracle: bool,
        /// Chern data of the resolved sheaf `O_j`.
        #[arg(long)]
        sheaf: Option<i64>,
        #[command(flatten)]
        format: JsonFlag,
    },
    /// Invariant factors of the torsion Picard group modulo `N`.
    Picard {
        manifold: String,
        #[command(flatten)]
        format: JsonFlag,
    },
}

enum Failure {
    Parse(String),
    Domain(Error),
    /// An internal consistency check failed.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse_error() {
            Failure::Parse(format!("{}: {e}", e.name()))
        } else {
            Failure::Domain(e)
        }
    }
}

impl From<family::SpecError> for Failure {
    fn from(e: family::SpecError) -> Self {
        Failure::Parse(format!("ParseError: {e}"))
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(3)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Hf { manifold, format } => hf(&manifold, &format),
        Command::Family { pattern, k, format } => family(&pattern, &k, &format),
        Command::Dim { manifold, bundle, verify, format } => dim(&manifold, &bundle, verify, format.json),
        Command::Flowdim { manifold, from, to, to_reducible, sign, format } => {
            flowdim(&manifold, &from, to.as_deref(), to_reducible, &sign, format.json)
        }
        Command::Enumerate { manifold, spinc, format } => enumerate(&manifold, spinc.as_deref(), format.json),
        Command::Cs { manifold, bundle, format } => cs(&manifold, &bundle, format.json),
        Command::Hj { p, q, oracle, sheaf, format } => hj(p, q, oracle, sheaf, format.json),
        Command::Picard { manifold, format } => picard(&manifold, format.json),
    }
}

fn manifold_and_bundle(manifold: &str, bundle: &str) -> Result<(SeifertFibration, BundleData), Failure> {
    let y = parse_manifold(manifold)?;
    let e = parse_bundle(bundle, y.base())?;
    Ok((y, e))
}

fn hf(manifold: &str, format: &Format) -> Outcome {
    let y = parse_manifold(manifold)?;
    let table = floer_table(&y)?;
    if format.csv {
        let mut out = String::from("grading,rank\n");
        for (g, r) in &table.ranks {
            out.push_str(&format!("{g},{r}\n"));
        }
        return Ok(out);
    }
    let set = enumerate_components(&y, None)?;
    if format.json {
        let components: Vec<Value> = set.irreducibles().map(render::component).collect();
        return Ok(render::line(&json!({
            "manifold": format_manifold(&y),
            "components": components,
            "hf": render::ranks(&table),
        })));
    }
    let mut out = format!("{}\n", format_manifold(&y));
    out.push_str(&render::columns(&render::COMPONENT_HEADER, &render::component_rows(set.irreducibles())));
    out.push('\n');
    out.push_str(&render::columns(&["grading", "rank"], &render::rank_rows(&table)));
    out.push_str(&format!("total {}\n", table.total_rank()));
    Ok(out)
}

enum Member {
    Table { alphas: Vec<i64>, table: seifert_core::FloerTable },
    Skipped { alphas: Vec<i64>, reason: String },
}

fn family(pattern: &str, k: &str, format: &Format) -> Outcome {
    let spec = FamilySpec::parse(pattern)?;
    let (lo, hi) = parse_range(k)?;
    let ks: Vec<i64> = (lo..=hi).collect();
    let members: Vec<(i64, Member)> = ks
        .par_iter()
        .map(|&k| {
            let Some(alphas) = spec.instantiate(k) else {
                return (k, Member::Skipped { alphas: Vec::new(), reason: "Overflow".into() });
            };
            let member = match SeifertFibration::brieskorn(&alphas).and_then(|y| floer_table(&y)) {
                Ok(table) => Member::Table { alphas, table },
                Err(e) => Member::Skipped { alphas, reason: format!("{}: {e}", e.name()) },
            };
            (k, member)
        })
        .collect();
    let sigma = |alphas: &[i64]| {
        let parts: Vec<String> = alphas.iter().map(i64::to_string).collect();
        format!("Sigma({})", parts.join(","))
    };

    if format.json {
        let rows: Vec<Value> = members
            .iter()
            .map(|(k, m)| match m {
                Member::Table { alphas, table } => json!({
                    "k": k,
                    "multiplicities": alphas,
                    "manifold": format_manifold(&table.manifold),
                    "hf": render::ranks(table),
                }),
                Member::Skipped { alphas, reason } => json!({
                    "k": k,
                    "multiplicities": alphas,
                    "skipped": reason,
                }),
            })
            .collect();
        return Ok(render::line(&json!({ "family": spec.text(), "members": rows })));
    }
    let mut out = String::new();
    if format.csv {
        out.push_str("k,manifold,grading,rank\n");
        for (k, m) in &members {
            match m {
                Member::Table { alphas, table } => {
                    if table.ranks.is_empty() {
                        out.push_str(&format!("{k},\"{}\",,0\n", sigma(alphas)));
                    }
                    for (g, r) in &table.ranks {
                        out.push_str(&format!("{k},\"{}\",{g},{r}\n", sigma(alphas)));
                    }
                }
                Member::Skipped { alphas, .. } => {
                    out.push_str(&format!("{k},\"{}\",skipped,\n", sigma(alphas)));
                }
            }
        }
        return Ok(out);
    }
    for (k, m) in &members {
        match m {
            Member::Table { alphas, table } => {
                let ranks: Vec<String> = table.ranks.iter().map(|(g, r)| format!("{g}:{r}")).collect();
                let ranks = if ranks.is_empty() { "0".to_string() } else { ranks.join(" ") };
                out.push_str(&format!("k={k}  {}  {ranks}\n", sigma(alphas)));
            }
            Member::Skipped { alphas, reason } => {
                out.push_str(&format!("k={k}  {}  skipped ({reason})\n", sigma(alphas)));
            }
        }
    }
    Ok(out)
}

fn dim(manifold: &str, bundle: &str, verify: bool, as_json: bool) -> Outcome {
    let (y, e) = manifold_and_bundle(manifold, bundle)?;
    let value = dim_y(&y, &e)?;
    if verify {
        let lat = build_lattice(&y)?;
        let closed = chern_coefficients(&lat, &e)?;
        let solved = solve_coefficients(&lat, &e)?;
        if closed != solved {
            return Err(Failure::Check(format!("closed form disagrees with the exact solve on {y} {e}")));
        }
        eprintln!("verify: closed form agrees with the exact solve");
        let printed = dim_closed_form_as_printed(&y, &e)?;
        if printed.agrees {
            eprintln!("verify: printed layout agrees");
        } else {
            eprintln!(
                "verify: printed layout gives {} instead of {}",
                format_rational(&printed.value),
                format_rational(&value)
            );
        }
    }
    if as_json {
        return Ok(render::line(&json!({
            "manifold": format_manifold(&y),
            "data": bundle_list(&e),
            "dim": render::rational(&value),
        })));
    }
    Ok(format!("{}\n", format_rational(&value)))
}

fn flowdim(
    manifold: &str,
    from: &str,
    to: Option<&str>,
    to_reducible: bool,
    sign: &str,
    as_json: bool,
) -> Outcome {
    let (y, e1) = manifold_and_bundle(manifold, from)?;
    let sign = if sign == "-" { Sign::Minus } else { Sign::Plus };
    let start = Endpoint::Irreducible { sign, data: e1.clone() };
    let (end, target) = if to_reducible {
        (Endpoint::Reducible, Value::String("reducible".into()))
    } else {
        let Some(to) = to else {
            return Err(Failure::Parse("ParseError: need target bundle data or --to-reducible".into()));
        };
        let e2 = parse_bundle(to, y.base())?;
        let list = json!(bundle_list(&e2));
        (Endpoint::Irreducible { sign, data: e2 }, list)
    };
    let value = interpolation_dimension(&y, &start, &end)?;
    if as_json {
        return Ok(render::line(&json!({
            "manifold": format_manifold(&y),
            "from": bundle_list(&e1),
            "to": target,
            "sign": sign.as_str(),
            "dim": render::rational(&value),
        })));
    }
    Ok(format!("{}\n", format_rational(&value)))
}

fn enumerate(manifold: &str, spinc: Option<&str>, as_json: bool) -> Outcome {
    let y = parse_manifold(manifold)?;
    let spinc = spinc.map(|s| parse_bundle(s, y.base())).transpose()?;
    let set = enumerate_components(&y, spinc.as_ref())?;
    if !set.boundary.is_empty() {
        let labels: Vec<String> = set.boundary.iter().map(BundleData::to_string).collect();
        eprintln!("warning: excluded data with deg E = deg K/2: {}", labels.join(" "));
    }
    let status = y.reducible_nondegenerate()?;
    if as_json {
        let components: Vec<Value> = set.components.iter().map(render::component).collect();
        let boundary: Vec<Vec<i64>> = set.boundary.iter().map(bundle_list).collect();
        return Ok(render::line(&json!({
            "manifold": format_manifold(&y),
            "reducible": status.as_str(),
            "components": components,
            "boundary": boundary,
        })));
    }
    let mut out = format!("{}\nreducible locus: {}\n", format_manifold(&y), status.as_str());
    out.push_str(&render::columns(&render::COMPONENT_HEADER, &render::component_rows(set.components.iter())));
    Ok(out)
}

fn cs(manifold: &str, bundle: &str, as_json: bool) -> Outcome {
    let (y, e) = manifold_and_bundle(manifold, bundle)?;
    let value = cs_coefficient(&y, &e)?;
    if as_json {
        return Ok(render::line(&json!({
            "manifold": format_manifold(&y),
            "data": bundle_list(&e),
            "cs": format_rational(&value),
        })));
    }
    Ok(format!("{}\n", format_rational(&value)))
}

fn hj(p: i64, q: i64, oracle: bool, sheaf: Option<i64>, as_json: bool) -> Outcome {
    let chain = expand(p, q)?;
    let mut doc = json!({
        "p": p,
        "q": q,
        "coefficients": chain.coefficients(),
        "denominators": chain.denominators(),
    });
    let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
    let mut out = format!(
        "{p}/{q} = [{}]\na: {}\nd: {}\n",
        join(chain.coefficients()).replace(' ', ","),
        join(chain.coefficients()),
        join(chain.denominators())
    );
    if oracle {
        let hull = lattice_hull_oracle(p, q)?;
        let agrees = chain_from_hull(&hull)
            .is_some_and(|(d, a)| d == chain.denominators() && a == chain.coefficients());
        if !agrees {
            return Err(Failure::Check(format!("lattice hull disagrees with the expansion of {p}/{q}")));
        }
        let points: Vec<String> = hull.iter().map(|(x, y)| format!("({x},{y})")).collect();
        out.push_str(&format!("hull: {}\noracle: agrees\n", points.join(" ")));
        doc["hull"] = json!(hull.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>());
        doc["oracle_agrees"] = json!(agrees);
    }
    if let Some(j) = sheaf {
        let chern = resolve_sheaf_chern(p, q, j)?;
        out.push_str(&format!("sheaf {j}: {}\n", join(&chern)));
        doc["sheaf"] = json!({ "j": j, "chern": chern });
    }
    Ok(if as_json { render::line(&doc) } else { out })
}

fn picard(manifold: &str, as_json: bool) -> Outcome {
    let y = parse_manifold(manifold)?;
    let pic = y.picard_quotient()?;
    if as_json {
        let factors: Vec<Value> = pic.invariant_factors.iter().map(render::big).collect();
        return Ok(render::line(&json!({
            "manifold": format_manifold(&y),
            "invariant_factors": factors,
            "order": render::big(&pic.order),
        })));
    }
    let factors: Vec<String> = pic.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
    let group = if factors.is_empty() { "0".to_string() } else { factors.join(" + ") };
    Ok(format!("{}\ngroup: {group}\norder: {}\n", format_manifold(&y), pic.order))
}
