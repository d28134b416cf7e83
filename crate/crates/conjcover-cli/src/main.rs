//! Command-line interface: covering numbers, ranks, explicit factorizations,
//! alternating-sum sets, verification suites and corpus surveys.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use conjcover::error::Error;
use conjcover::product::rank;
use conjcover::search::{gamma_bruteforce_oracle, gamma_cp_exact, SearchConfig};
use conjcover::solvable::{
    dihedral_factorization, solvable_bounds, solvable_covering, x_set, x_set_mod_coverage,
};
use conjcover::structure::is_nilpotent;
use conjcover::subgroup::{point_stabilizer, subgroup_closure, Subgroup};
use conjcover::table::{GroupTable, DEFAULT_ORDER_CAP};
use conjcover::witness::{rank_factorization, verify_witness};
use conjcover::Perm;

use conjcover_cli::corpus::build_corpus;
use conjcover_cli::report::{gamma_value_json, GammaJson, WitnessJson};
use conjcover_cli::spec::{split_generator_list, GroupSpec};
use conjcover_cli::suites::{run_suite, SuiteOptions};

#[derive(Parser)]
#[command(
    name = "conjcover",
    about = "Covering numbers of finite permutation groups by products of conjugate subgroups",
    version
)]
struct Cli {
    /// Output format for structured results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on the order of any enumerated group (overrides CONJCOVER_MAX_ORDER).
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Worker threads for suites and surveys.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Drop search states dominated by a sibling at the same depth.
    #[arg(long, global = true, default_value_t = false)]
    domination_pruning: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the covering number of a group.
    Gamma {
        /// Group spec: shorthand like `dihedral:7`, `sym:5`, `agl1:13:4`,
        /// `perm:4:(1 2 3 4),(1 2)`, `m11`, or a JSON object.
        spec: String,
        /// Cap on the admissible covering length.
        #[arg(long)]
        limit: Option<u32>,
        /// Cross-check with the exhaustive oracle (tiny groups only).
        #[arg(long, default_value_t = false)]
        oracle: bool,
    },
    /// Rank of the action on the cosets of a subgroup.
    Rank {
        spec: String,
        /// Subgroup: comma-separated cycle strings, or `stabilizer:PT` for
        /// the stabilizer of a 1-based point.
        #[arg(long)]
        subgroup: String,
    },
    /// Produce and verify an explicit covering witness.
    Factor {
        spec: String,
        #[arg(long, value_enum, default_value_t = Method::Bfs)]
        method: Method,
    },
    /// Alternating-sum sets of powers of two.
    Xset {
        n: u32,
        /// Also report residue coverage of 1..k modulo k+1.
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Run a named verification suite.
    Suite { name: String },
    /// Covering numbers across the standard corpus.
    Survey {
        #[arg(long, default_value_t = 200)]
        max_order: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Exact search over conjugacy classes of maximal subgroups.
    Bfs,
    /// Power-chain factorization from the best non-normal maximal class.
    Rank,
    /// Rotation-tower covering of a dihedral group of prime order.
    Dihedral,
    /// Commutator-solved covering of an affine frame.
    Solvable,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn order_cap(cli: &Cli) -> usize {
    cli.cap
        .or_else(|| {
            std::env::var("CONJCOVER_MAX_ORDER")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_ORDER_CAP)
}

fn search_config(cli: &Cli, limit: Option<u32>) -> SearchConfig {
    SearchConfig {
        limit,
        domination_pruning: cli.domination_pruning,
        ..SearchConfig::default()
    }
}

fn run(cli: &Cli) -> conjcover::Result<ExitCode> {
    let cap = order_cap(cli);
    match &cli.command {
        Command::Gamma {
            spec,
            limit,
            oracle,
        } => {
            let resolved = GroupSpec::parse(spec)?.resolve(cap)?;
            let cfg = search_config(cli, *limit);
            let result = gamma_cp_exact(&resolved.table, &cfg)?;
            let extra = resolved
                .frame
                .as_ref()
                .and_then(|f| solvable_bounds(f.p, f.n, f.k.order() as u64).ok());
            let payload = GammaJson::from_result(&resolved.name, &resolved.table, &result, extra);
            if *oracle {
                let oracle_result = gamma_bruteforce_oracle(&resolved.table, limit.unwrap_or(6))?;
                if oracle_result.value != result.value {
                    eprintln!(
                        "oracle disagreement: search {} vs oracle {}",
                        result.value, oracle_result.value
                    );
                    return Ok(ExitCode::FAILURE);
                }
                eprintln!("oracle agrees: {}", oracle_result.value);
            }
            emit(cli, &payload, |p| p.render_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Rank { spec, subgroup } => {
            let resolved = GroupSpec::parse(spec)?.resolve(cap)?;
            let sub = parse_subgroup(&resolved.table, subgroup)?;
            let info = rank(&resolved.table, &sub)?;
            let payload = json!({
                "group": resolved.name,
                "order": resolved.table.order(),
                "subgroup_order": sub.order(),
                "coset_count": info.coset_count,
                "rank": info.rank,
                "double_coset_reps": info.double_coset_reps.iter()
                    .map(|&g| resolved.table.element(g).to_string())
                    .collect::<Vec<_>>(),
            });
            emit(cli, &payload, |p| {
                format!(
                    "rank {} on {} cosets of a subgroup of order {}\n",
                    p["rank"], p["coset_count"], p["subgroup_order"]
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Factor { spec, method } => {
            let payload = factor_command(cli, spec, *method, cap)?;
            emit(cli, &payload, render_factor_text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Xset { n, modulus } => {
            let xs = x_set(*n)?;
            let coverage = match modulus {
                Some(k) => Some(x_set_mod_coverage(*n, *k)?),
                None => None,
            };
            let payload = json!({
                "n": n,
                "cardinality": xs.values.len(),
                "min": xs.values.first(),
                "max": xs.values.last(),
                "values": if xs.values.len() <= 128 { json!(xs.values) } else { json!(null) },
                "mod": modulus,
                "covers_residues": coverage,
            });
            emit(cli, &payload, |p| {
                let mut out = format!(
                    "|X| = {} spanning [{}, {}]\n",
                    p["cardinality"], p["min"], p["max"]
                );
                if let Some(c) = coverage {
                    out.push_str(&format!("residues 1..k covered mod k+1: {c}\n"));
                }
                out
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Suite { name } => {
            let opts = SuiteOptions {
                threads: cli.threads.max(1),
                config: search_config(cli, None),
            };
            let started = Instant::now();
            let report = run_suite(name, &opts)?;
            eprintln!(
                "suite {} finished in {:.1}s",
                report.suite,
                started.elapsed().as_secs_f64()
            );
            emit(cli, &report, |r| r.render_text());
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Survey { max_order } => {
            let cfg = search_config(cli, None);
            let rows: Vec<serde_json::Value> = build_corpus(*max_order)
                .into_iter()
                .map(|entry| -> conjcover::Result<serde_json::Value> {
                    let table = entry.spec.resolve(cap)?.table;
                    let nilpotent = is_nilpotent(&table);
                    let gamma = match gamma_cp_exact(&table, &cfg) {
                        Ok(result) => gamma_value_json(result.value),
                        Err(Error::LatticeCapExceeded { .. }) => json!("skipped (lattice cap)"),
                        Err(e) => return Err(e),
                    };
                    Ok(json!({
                        "name": entry.name,
                        "order": table.order(),
                        "nilpotent": nilpotent,
                        "gamma": gamma,
                    }))
                })
                .collect::<conjcover::Result<_>>()?;
            let payload = json!(rows);
            emit(cli, &payload, |rows| {
                let mut out = format!(
                    "{:<16} {:>6} {:>10} {:>22}\n",
                    "group", "order", "nilpotent", "gamma"
                );
                for r in rows.as_array().unwrap() {
                    out.push_str(&format!(
                        "{:<16} {:>6} {:>10} {:>22}\n",
                        r["name"].as_str().unwrap_or("?"),
                        r["order"].as_u64().unwrap_or(0),
                        r["nilpotent"].as_bool().unwrap_or(false),
                        r["gamma"].to_string().trim_matches('"')
                    ));
                }
                out
            });
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn factor_command(
    cli: &Cli,
    spec: &str,
    method: Method,
    cap: usize,
) -> conjcover::Result<serde_json::Value> {
    let parsed = GroupSpec::parse(spec)?;
    let resolved = parsed.resolve(cap)?;
    let table = &resolved.table;
    match method {
        Method::Bfs => {
            let result = gamma_cp_exact(table, &search_config(cli, None))?;
            let witness = result
                .witness
                .as_ref()
                .map(|w| WitnessJson::from_witness(table, w));
            Ok(json!({
                "group": resolved.name,
                "method": "bfs",
                "gamma": gamma_value_json(result.value),
                "length": result.witness.as_ref().map(|w| w.len()),
                "witness": witness,
                "verified": result.witness.as_ref()
                    .map(|w| verify_witness(table, w).map(|r| r.valid))
                    .transpose()?,
            }))
        }
        Method::Rank => {
            if is_nilpotent(table) {
                return Err(Error::InvalidParameter(
                    "nilpotent groups have no non-normal maximal subgroup".into(),
                ));
            }
            let result = gamma_cp_exact(table, &search_config(cli, None))?;
            let best = result
                .per_class
                .iter()
                .min_by_key(|c| c.rank)
                .ok_or(Error::NormalSubgroup)?;
            let fact = rank_factorization(table, &best.representative)?;
            let report = verify_witness(table, &fact.witness)?;
            Ok(json!({
                "group": resolved.name,
                "method": "rank",
                "rank": fact.rank,
                "k0": fact.k0,
                "length": fact.witness.len(),
                "witness": WitnessJson::from_witness(table, &fact.witness),
                "verified": report.valid,
            }))
        }
        Method::Dihedral => {
            let GroupSpec::Dihedral { n } = parsed else {
                return Err(Error::InvalidParameter(
                    "the dihedral method needs a dihedral:<p> spec".into(),
                ));
            };
            let fact = dihedral_factorization(n as u64)?;
            let report = verify_witness(&fact.table, &fact.witness)?;
            Ok(json!({
                "group": resolved.name,
                "method": "dihedral",
                "length": fact.witness.len(),
                "witness": WitnessJson::from_witness(&fact.table, &fact.witness),
                "verified": report.valid,
            }))
        }
        Method::Solvable => {
            let frame = resolved.frame.ok_or_else(|| {
                Error::InvalidParameter("the solvable method needs an agl1:<p>:<k> spec".into())
            })?;
            let witness = solvable_covering(&frame)?;
            let report = verify_witness(&frame.table, &witness)?;
            Ok(json!({
                "group": resolved.name,
                "method": "solvable",
                "length": witness.len(),
                "witness": WitnessJson::from_witness(&frame.table, &witness),
                "verified": report.valid,
            }))
        }
    }
}

fn render_factor_text(payload: &serde_json::Value) -> String {
    let mut out = format!(
        "group {} via {}: length {}, verified {}\n",
        payload["group"], payload["method"], payload["length"], payload["verified"]
    );
    if let Some(w) = payload.get("witness").filter(|w| !w.is_null()) {
        out.push_str(&format!("  base: {}\n", w["base_generators"]));
        out.push_str(&format!("  conjugators: {}\n", w["conjugators"]));
    }
    out
}

fn parse_subgroup(table: &GroupTable, text: &str) -> conjcover::Result<Subgroup> {
    if let Some(point) = text.strip_prefix("stabilizer:") {
        let point: usize = point
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad stabilizer point '{point}'")))?;
        if point == 0 {
            return Err(Error::InvalidParameter("points are 1-based".into()));
        }
        return point_stabilizer(table, point - 1);
    }
    let gens: Vec<u32> = split_generator_list(text)
        .iter()
        .map(|s| {
            let perm = Perm::parse_cycles(s, table.degree())?;
            table
                .index_of(&perm)
                .ok_or_else(|| Error::InvalidParameter(format!("'{s}' is not in the group")))
        })
        .collect::<conjcover::Result<_>>()?;
    Ok(subgroup_closure(table, &gens))
}

fn emit<T: serde::Serialize>(cli: &Cli, payload: &T, text: impl Fn(&T) -> String) {
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(payload).unwrap()),
        Format::Text => print!("{}", text(payload)),
    }
}
