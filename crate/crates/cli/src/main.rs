//! `twisted`: twisted conjugacy, characters and Reidemeister spectra from the
//! command line. Every command prints a JSON `RunReport`, or a plain-text
//! table with `--pretty`.

mod report;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use twisted_core::chars::{self, CharacterTable, TablePair};
use twisted_core::corpus;
use twisted_core::dynamics::{
    accounting_feasible, gauss_congruence_table, periodic_point_accounting,
    periodic_point_accounting_with, reidemeister_sequence, Source,
};
use twisted_core::group::DEFAULT_ORDER_CAP;
use twisted_core::io::{self, GroupFile};
use twisted_core::lattice::{spectrum_search, Family};
use twisted_core::twisted::{self, CheckReport};
use twisted_core::verify::{self, CorpusReport, VerifyOptions};
use twisted_core::{Automorphism, FiniteGroup, GroupError};

use report::{CliError, InputDigest, Outcome, RunReport};

#[derive(Parser)]
#[command(name = "twisted", version, about = "Twisted conjugacy classes and Reidemeister numbers")]
struct Cli {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reidemeister classes of an automorphism, with stabilizer orders.
    Classes {
        #[command(flatten)]
        group: GroupInput,
        #[command(flatten)]
        aut: AutInput,
    },
    /// Reidemeister number against the fixed irreducible characters.
    Tbft {
        #[command(flatten)]
        group: GroupInput,
        #[command(flatten)]
        aut: OptionalAutInput,
        /// Check every automorphism of the group.
        #[arg(long, conflicts_with_all = ["aut", "aut_index"])]
        all_automorphisms: bool,
        /// Also compare with the dimension of the twisted coinvariants.
        #[arg(long)]
        deep: bool,
    },
    /// Realized Reidemeister numbers of a family, with witnesses.
    Spectrum {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Rank for `--family zn`.
        #[arg(long, required_if_eq("family", "zn"))]
        n: Option<usize>,
        #[arg(long, default_value_t = 20)]
        value_bound: u64,
        /// Word length for the Heisenberg search.
        #[arg(long, default_value_t = 6)]
        search_bound: usize,
    },
    /// Gauss congruences for the sequence R(φⁿ).
    Congruence {
        /// Unimodular matrix file.
        #[arg(long, conflicts_with_all = ["group", "corpus"])]
        matrix: Option<PathBuf>,
        #[command(flatten)]
        group: OptionalGroupInput,
        #[command(flatten)]
        aut: OptionalAutInput,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Also account for periodic points of the dual action.
        #[arg(long)]
        periods: bool,
    },
    /// Isogredience classes in the outer class of an automorphism.
    Isogredience {
        #[command(flatten)]
        group: GroupInput,
        #[command(flatten)]
        aut: AutInput,
    },
    /// Irreducible character table modulo a prime.
    CharTable {
        #[command(flatten)]
        group: GroupInput,
        /// Lift the values to cyclotomic integers.
        #[arg(long)]
        lift: bool,
    },
    /// Every identity on every automorphism of the bundled groups.
    VerifyCorpus {
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        /// Extra group with candidate automorphisms to check alongside the
        /// corpus: {"group": <group file>, "automorphisms": [[...], ...]}.
        #[arg(long)]
        extra: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Z,
    Zn,
    Heisenberg,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupInput {
    /// Group file (table or permutations).
    #[arg(long)]
    group: Option<PathBuf>,
    /// Bundled group by name, e.g. S3, Q8, Z12, D5.
    #[arg(long)]
    corpus: Option<String>,
}

#[derive(Args)]
#[group(multiple = false)]
struct OptionalGroupInput {
    #[arg(long)]
    group: Option<PathBuf>,
    #[arg(long)]
    corpus: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct AutInput {
    /// Automorphism file: {"images": [...]} or {"generator_images": [...]}.
    #[arg(long)]
    aut: Option<PathBuf>,
    /// Position in the enumerated automorphism list; 0 is the identity.
    #[arg(long)]
    aut_index: Option<usize>,
}

#[derive(Args)]
#[group(multiple = false)]
struct OptionalAutInput {
    #[arg(long)]
    aut: Option<PathBuf>,
    #[arg(long)]
    aut_index: Option<usize>,
}

impl From<&OptionalGroupInput> for GroupInput {
    fn from(g: &OptionalGroupInput) -> Self {
        GroupInput { group: g.group.clone(), corpus: g.corpus.clone() }
    }
}

impl From<&OptionalAutInput> for AutInput {
    fn from(a: &OptionalAutInput) -> Self {
        AutInput { aut: a.aut.clone(), aut_index: a.aut_index }
    }
}

fn order_cap() -> Result<usize, CliError> {
    match std::env::var("TWISTED_ORDER_CAP") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| CliError::Input(format!("TWISTED_ORDER_CAP must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

fn read(path: &Path, digest: &mut InputDigest) -> Result<String, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    digest.add("file", text.as_bytes());
    Ok(text)
}

fn load_group(input: &GroupInput, digest: &mut InputDigest) -> Result<FiniteGroup, CliError> {
    let cap = order_cap()?;
    if let Some(path) = &input.group {
        return Ok(io::parse_group(&read(path, digest)?, cap)?);
    }
    let name = input.corpus.as_deref().ok_or_else(|| CliError::Input("no group given".into()))?;
    digest.add("corpus", name.as_bytes());
    let group = corpus::by_name(name).ok_or_else(|| CliError::Input(format!("unknown corpus group {name:?}")))?;
    if group.order() > cap {
        return Err(GroupError::OrderLimitExceeded { limit: cap }.into());
    }
    Ok(group)
}

fn load_aut(input: &AutInput, group: &FiniteGroup, digest: &mut InputDigest) -> Result<Automorphism, CliError> {
    if let Some(path) = &input.aut {
        return Ok(io::parse_automorphism(&read(path, digest)?, group)?);
    }
    let index = input.aut_index.ok_or_else(|| CliError::Input("no automorphism given".into()))?;
    digest.add("aut-index", index.to_string().as_bytes());
    let all = group.automorphisms()?;
    let count = all.len();
    all.into_iter()
        .nth(index)
        .ok_or_else(|| CliError::Input(format!("automorphism index {index} out of range ({count} automorphisms)")))
}

fn group_label(group: &FiniteGroup) -> String {
    group.name().map_or_else(|| format!("group of order {}", group.order()), str::to_owned)
}

fn cmd_classes(group: &FiniteGroup, phi: &Automorphism) -> Result<Outcome, CliError> {
    let partition = twisted::reidemeister_partition(group, phi);
    let classes: Vec<_> = partition
        .classes
        .iter()
        .zip(&partition.representatives)
        .zip(&partition.stabilizer_orders)
        .map(|((members, rep), stab)| json!({"representative": rep, "members": members, "stabilizer_order": stab}))
        .collect();
    let results = json!({
        "group": group.name(),
        "order": group.order(),
        "automorphism": phi.images(),
        "reidemeister": partition.count,
        "classes": classes,
    });
    let checks = vec![twisted::orbit_stabilizer_check(group, phi)];

    let mut pretty = format!("{}: R(φ) = {}\n", group_label(group), partition.count);
    writeln!(pretty, "{:>6}  {:>5}  {:>10}  members", "class", "size", "stabilizer").unwrap();
    for (i, members) in partition.classes.iter().enumerate() {
        writeln!(pretty, "{:>6}  {:>5}  {:>10}  {:?}", i, members.len(), partition.stabilizer_orders[i], members).unwrap();
    }
    Outcome::new(results, checks, pretty)
}

fn cmd_tbft(group: &FiniteGroup, auts: &[(Option<usize>, Automorphism)], deep: bool) -> Result<Outcome, CliError> {
    let tables = TablePair::compute(group)?;
    let mut rows = Vec::new();
    let (mut tbft_failure, mut coinvariant_failure) = (None, None);
    let mut pretty = format!("{}\n{:>5}  {:>4}  {:>5}", group_label(group), "aut", "R", "fixed");
    pretty.push_str(if deep { "  coinvariants\n" } else { "\n" });
    for (index, phi) in auts {
        let label = index.map_or_else(|| "file".to_owned(), |i| i.to_string());
        let report = chars::tbft_check_with(&tables, group, phi)?;
        let coinvariants = deep.then(|| chars::twisted_coinvariants_dimension(group, phi));
        if !report.passed && tbft_failure.is_none() {
            tbft_failure = Some(format!("automorphism {label}: R = {}, fixed = {}", report.reidemeister, report.fixed_characters));
        }
        if let Some(dim) = coinvariants.filter(|&d| d != report.reidemeister) {
            coinvariant_failure.get_or_insert(format!("automorphism {label}: R = {}, dimension = {dim}", report.reidemeister));
        }
        write!(pretty, "{label:>5}  {:>4}  {:>5}", report.reidemeister, report.fixed_characters).unwrap();
        match coinvariants {
            Some(dim) => writeln!(pretty, "  {dim:>12}").unwrap(),
            None => pretty.push('\n'),
        }
        rows.push(json!({
            "automorphism_index": index,
            "reidemeister": report.reidemeister,
            "fixed_characters": report.fixed_characters,
            "coinvariants": coinvariants,
            "passed": report.passed && coinvariants.is_none_or(|d| d == report.reidemeister),
        }));
    }
    let mut checks = vec![CheckReport::from_first_failure("tbft", tbft_failure)];
    if deep {
        checks.push(CheckReport::from_first_failure("coinvariants", coinvariant_failure));
    }
    let results = json!({
        "group": group.name(),
        "order": group.order(),
        "primes": [tables.primary.prime(), tables.guard.prime()],
        "automorphisms": rows,
    });
    Outcome::new(results, checks, pretty)
}

fn cmd_spectrum(family: Family, value_bound: u64, search_bound: usize) -> Result<Outcome, CliError> {
    let result = spectrum_search(family, value_bound, search_bound)?;
    let mut checks = vec![result.verify()];
    if family == Family::Heisenberg {
        checks.push(result.evenness());
    }
    let mut pretty = format!("Spec({}) over {} automorphisms\n", result.family, result.examined);
    for w in &result.realized {
        writeln!(pretty, "{:>8}  {}", w.value.to_string(), w.matrix).unwrap();
    }
    if let Some(w) = &result.infinity_witness {
        writeln!(pretty, "{:>8}  {w}", "inf").unwrap();
    }
    Outcome::new(&result, checks, pretty)
}

fn cmd_congruence(source: &Source, max_n: usize, periods: bool) -> Result<Outcome, CliError> {
    let sequence = reidemeister_sequence(source, max_n)?;
    let rows = gauss_congruence_table(&sequence)?;
    let mut checks: Vec<CheckReport> = vec![CheckReport::from_first_failure(
        "gauss-congruence",
        rows.iter().find(|r| !r.passed).map(|r| format!("n = {}: sum = {}", r.n, r.sum.0)),
    )];

    let mut pretty = format!("{:>4}  {:>24}  {:>24}  {:>20}  pass\n", "n", "R(φⁿ)", "Σ μ(d) R(φ^(n/d))", "Σ / n");
    for (row, value) in rows.iter().zip(&sequence.values) {
        let quotient = row.quotient.as_ref().map_or_else(|| "-".to_owned(), |q| q.0.to_string());
        writeln!(pretty, "{:>4}  {:>24}  {:>24}  {:>20}  {}", row.n, value.to_string(), row.sum.0, quotient, row.passed).unwrap();
    }

    let mut accounting = Vec::new();
    let mut skipped = Vec::new();
    if periods {
        let table = match source {
            Source::Finite { group, .. } => Some(CharacterTable::compute(group)?),
            Source::Lattice(_) => None,
        };
        for n in 1..=max_n {
            let report = match (source, &table) {
                (Source::Finite { .. }, Some(t)) => periodic_point_accounting_with(source, n, t)?,
                (Source::Lattice(a), _) if !accounting_feasible(a, n) => {
                    skipped.push(n);
                    continue;
                }
                _ => periodic_point_accounting(source, n)?,
            };
            checks.extend(report.checks.iter().filter(|c| !c.passed).cloned());
            accounting.push(report);
        }
        if checks.iter().all(|c| c.passed) {
            checks.push(CheckReport::pass("periodic-points"));
        }
        pretty.push_str("\nperiodic points (n: P_d for d | n)\n");
        for r in &accounting {
            let parts: Vec<String> = r.counts.least_period.iter().map(|(d, p)| format!("P_{d} = {p}")).collect();
            writeln!(pretty, "{:>4}: {}", r.counts.n, parts.join(", ")).unwrap();
        }
        if !skipped.is_empty() {
            writeln!(pretty, "skipped (too many points to enumerate): {skipped:?}").unwrap();
        }
    }
    let results = json!({
        "sequence": sequence.values,
        "rows": rows,
        "periods": periods.then_some(json!({"reports": accounting, "skipped": skipped})),
    });
    Outcome::new(results, checks, pretty)
}

fn cmd_isogredience(group: &FiniteGroup, phi: &Automorphism) -> Result<Outcome, CliError> {
    let report = chars::isogredience_count(group, phi)?;
    let check = if report.passed {
        CheckReport::pass("isogredience")
    } else {
        CheckReport::fail("isogredience", format!("S = {}, R(G/Z) = {}", report.classes, report.central_quotient_reidemeister))
    };
    let pretty = format!(
        "{}\nS(Φ) = {}\nR_G/Z(ᾱ) = {}\nouter class size = {}\nequal: {}\n",
        group_label(group),
        report.classes,
        report.central_quotient_reidemeister,
        report.outer_class_size,
        report.passed
    );
    Outcome::new(&report, vec![check], pretty)
}

fn cmd_char_table(group: &FiniteGroup, lift: bool) -> Result<Outcome, CliError> {
    let table = if lift { CharacterTable::compute_lifted(group)? } else { CharacterTable::compute(group)? };
    let check = CheckReport::from_first_failure("orthogonality", table.check_orthogonality().err().map(|e| e.to_string()));
    let json = table.to_json();
    let mut pretty = format!("{}: {} irreducible characters mod {}\n", group_label(group), table.len(), table.prime());
    writeln!(pretty, "class sizes {:?}", json.classes).unwrap();
    for (degree, row) in json.degrees.iter().zip(&json.rows) {
        writeln!(pretty, "deg {degree:>3}: {row:?}").unwrap();
    }
    Outcome::new(&json, vec![check], pretty)
}

#[derive(Deserialize)]
struct ExtraGroup {
    group: GroupFile,
    automorphisms: Vec<Vec<usize>>,
}

fn cmd_verify_corpus(max_order: usize, extra: Option<(FiniteGroup, Vec<Vec<usize>>)>) -> Result<Outcome, CliError> {
    let options = VerifyOptions { max_order, ..VerifyOptions::default() };
    let mut report = verify::verify_corpus(&options)?;
    if let Some((group, candidates)) = extra {
        let name = group_label(&group);
        let mut pairs = report.pairs;
        pairs.extend(verify::verify_group(&name, &group, &candidates, &options)?);
        report = CorpusReport::from_pairs(options, pairs);
    }

    let mut properties: Vec<&'static str> =
        report.summary.iter().flat_map(|s| s.properties.keys().copied()).collect();
    properties.sort_unstable();
    properties.dedup();
    let checks = properties
        .iter()
        .map(|&p| {
            let failure = report.failures.iter().find(|f| f.property == p).map(|f| {
                format!("{} automorphism {}: {}", f.group, f.automorphism_index, f.witness.clone().unwrap_or_default())
            });
            CheckReport::from_first_failure(p, failure)
        })
        .collect();

    let mut pretty = format!("{:<8} {:>5} {:>5}  failed properties\n", "group", "order", "auts");
    for s in &report.summary {
        let failed: Vec<&str> = s.properties.iter().filter(|(_, (ok, total))| ok != total).map(|(p, _)| *p).collect();
        writeln!(pretty, "{:<8} {:>5} {:>5}  {}", s.group, s.order, s.automorphisms, if failed.is_empty() { "-".to_owned() } else { failed.join(", ") }).unwrap();
    }
    Outcome::new(&report, checks, pretty)
}

fn run(cli: &Cli) -> Result<(&'static str, Outcome, InputDigest), CliError> {
    let mut digest = InputDigest::default();
    let (command, outcome) = match &cli.command {
        Command::Classes { group, aut } => {
            digest.add("command", b"classes");
            let g = load_group(group, &mut digest)?;
            let phi = load_aut(aut, &g, &mut digest)?;
            ("classes", cmd_classes(&g, &phi)?)
        }
        Command::Tbft { group, aut, all_automorphisms, deep } => {
            digest.add("command", b"tbft");
            digest.add("options", format!("all={all_automorphisms} deep={deep}").as_bytes());
            let g = load_group(group, &mut digest)?;
            let auts = if *all_automorphisms {
                g.automorphisms()?.into_iter().enumerate().map(|(i, a)| (Some(i), a)).collect()
            } else {
                let input = AutInput::from(aut);
                if input.aut.is_none() && input.aut_index.is_none() {
                    return Err(CliError::Input("give --aut, --aut-index or --all-automorphisms".into()));
                }
                vec![(input.aut_index, load_aut(&input, &g, &mut digest)?)]
            };
            ("tbft", cmd_tbft(&g, &auts, *deep)?)
        }
        Command::Spectrum { family, n, value_bound, search_bound } => {
            let family = match family {
                FamilyArg::Z => Family::Z,
                FamilyArg::Zn => Family::Zn(n.expect("required by clap")),
                FamilyArg::Heisenberg => Family::Heisenberg,
            };
            digest.add("command", b"spectrum");
            digest.add("options", format!("{family} {value_bound} {search_bound}").as_bytes());
            ("spectrum", cmd_spectrum(family, *value_bound, *search_bound)?)
        }
        Command::Congruence { matrix, group, aut, max_n, periods } => {
            digest.add("command", b"congruence");
            digest.add("options", format!("{max_n} {periods}").as_bytes());
            let source = match matrix {
                Some(path) => Source::Lattice(io::parse_matrix(&read(path, &mut digest)?)?),
                None => {
                    let input = GroupInput::from(group);
                    if input.group.is_none() && input.corpus.is_none() {
                        return Err(CliError::Input("give --matrix, or --group/--corpus with an automorphism".into()));
                    }
                    let g = load_group(&input, &mut digest)?;
                    let phi = load_aut(&AutInput::from(aut), &g, &mut digest)?;
                    Source::Finite { group: g, phi }
                }
            };
            if let Source::Lattice(a) = &source {
                a.ensure_unimodular()?;
            }
            ("congruence", cmd_congruence(&source, *max_n, *periods)?)
        }
        Command::Isogredience { group, aut } => {
            digest.add("command", b"isogredience");
            let g = load_group(group, &mut digest)?;
            let phi = load_aut(aut, &g, &mut digest)?;
            ("isogredience", cmd_isogredience(&g, &phi)?)
        }
        Command::CharTable { group, lift } => {
            digest.add("command", b"char-table");
            digest.add("options", format!("lift={lift}").as_bytes());
            let g = load_group(group, &mut digest)?;
            ("char-table", cmd_char_table(&g, *lift)?)
        }
        Command::VerifyCorpus { max_order, extra } => {
            digest.add("command", b"verify-corpus");
            digest.add("options", max_order.to_string().as_bytes());
            let extra = match extra {
                Some(path) => {
                    let parsed: ExtraGroup = serde_json::from_str(&read(path, &mut digest)?)
                        .map_err(|e| CliError::Input(format!("MalformedJson: {e}")))?;
                    Some((parsed.group.build(order_cap()?)?, parsed.automorphisms))
                }
                None => None,
            };
            ("verify-corpus", cmd_verify_corpus(*max_order, extra)?)
        }
    };
    Ok((command, outcome, digest))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (command, outcome, digest) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let passed = outcome.checks.iter().all(|c| c.passed);
    let failures: Vec<String> = outcome
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("check failed: {}: {}", c.property, c.witness.as_deref().unwrap_or("")))
        .collect();
    if cli.pretty {
        print!("{}", outcome.pretty);
        for c in &outcome.checks {
            match &c.witness {
                None => println!("[{}] {}", if c.passed { "pass" } else { "FAIL" }, c.property),
                Some(w) => println!("[{}] {}: {w}", if c.passed { "pass" } else { "FAIL" }, c.property),
            }
        }
    } else {
        let report = RunReport {
            command,
            inputs_digest: digest.finish(),
            results: outcome.results,
            checks: outcome.checks,
            passed,
            wall_time_ms: start.elapsed().as_millis(),
        };
        match serde_json::to_string(&report) {
            Ok(text) => println!("{text}"),
            Err(e) => {
                eprintln!("error: internal inconsistency: {e}");
                return ExitCode::from(4);
            }
        }
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        for f in failures {
            eprintln!("{f}");
        }
        ExitCode::from(1)
    }
}
