//! Command line front end: load semigroups or acts from JSON, run the
//! structure/metric analyses, build the glued constructions, and drive the
//! verification suites. Exit codes: 0 success, 1 verification failure,
//! 2 malformed input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use pseudofin::acts::{self, FiniteRightAct};
use pseudofin::constructions::{self, ExtensionSpec};
use pseudofin::io::{
    resolve_element, ActJson, ConstructSpecJson, DiameterReportJson, SemigroupInput,
    SemigroupJson,
};
use pseudofin::metric::{self, GenSet, MetricBudget, SearchMode};
use pseudofin::semigroup::{
    random_transformation_monoid_with, FiniteSemigroup, RandomMonoidParams,
};
use pseudofin::structure::kernel::{kernel, minimal_one_sided_ideals, ReesMatrixData, Side};
use pseudofin::structure::predicates::predicates_with_green;
use pseudofin::structure::green;
use pseudofin::theorems::{self, CheckKind, SuiteConfig, SuiteEntry, SuiteReport};

#[derive(Parser)]
#[command(
    name = "pseudofin",
    version,
    about = "Finite semigroup structure, diameters of universal congruences, and glued constructions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a semigroup: order, Green classes, predicates, kernel.
    Info {
        /// Table or generator JSON file.
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Diameter of the universal right (or left) congruence.
    Diameter {
        /// Table or generator JSON file.
        input: PathBuf,
        /// Comma-separated generating elements (labels or indices).
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<String>>,
        /// Generating pairs "a:b,c:d" (labels or indices).
        #[arg(long)]
        pairs: Option<String>,
        /// Minimize over generating sets of at most this size.
        #[arg(long, conflicts_with_all = ["set", "pairs"])]
        min_size: Option<usize>,
        /// Minimize over pair sets instead of symmetric sets.
        #[arg(long, requires = "min_size")]
        pairs_mode: bool,
        /// Left congruence (act on the opposite semigroup).
        #[arg(long)]
        left: bool,
        #[arg(long)]
        json: bool,
    },
    /// Right congruence generated by point pairs on an act.
    Congruence {
        /// Act JSON (carrier/semigroup/action) or semigroup JSON.
        input: PathBuf,
        /// Generating pairs "a:b,c:d".
        #[arg(long)]
        pairs: String,
        #[arg(long)]
        json: bool,
    },
    /// Green's relation classes.
    Green {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Minimal ideal decomposition and its coordinates.
    Kernel {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build a semigroup from a construction spec file.
    Construct {
        /// Spec JSON with a "kind" tag: rees, extension, e_of, constants.
        spec: PathBuf,
        /// Emit compact JSON instead of pretty-printed.
        #[arg(long)]
        compact: bool,
    },
    /// Run verification suites; exit 1 if any check fails.
    Verify {
        /// Suites: all, csmi, rr, jtrivial, minideal, con1, diag, orthodox.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        /// Add this many random transformation monoids to the corpus.
        #[arg(long, default_value_t = 0)]
        random: usize,
        /// Fixed transformation degree for random draws (default: mix of 2-4).
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Redraw random instances above this order.
        #[arg(long, default_value_t = 60)]
        order_cap: usize,
        /// Check this single instance instead of the built-in corpus.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Where to dump failing instances (default pseudofin-failures.json).
        #[arg(long)]
        dump: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Generate a seeded random transformation monoid as table JSON.
    Random {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 2)]
        gens: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Reject draws whose closure exceeds this order.
        #[arg(long, default_value_t = 500)]
        cap: usize,
    },
}

type AnyError = Box<dyn std::error::Error>;

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`pseudofin ... | head`) instead of
    // panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, AnyError> {
    match cmd {
        Command::Info { input, json } => cmd_info(&input, json),
        Command::Diameter { input, set, pairs, min_size, pairs_mode, left, json } => {
            cmd_diameter(&input, set, pairs, min_size, pairs_mode, left, json)
        }
        Command::Congruence { input, pairs, json } => cmd_congruence(&input, &pairs, json),
        Command::Green { input, json } => cmd_green(&input, json),
        Command::Kernel { input, json } => cmd_kernel(&input, json),
        Command::Construct { spec, compact } => cmd_construct(&spec, compact),
        Command::Verify { suite, random, degree, seed, order_cap, input, dump, json } => {
            cmd_verify(&suite, random, degree, seed, order_cap, input.as_deref(), dump, json)
        }
        Command::Random { degree, gens, seed, cap } => cmd_random(degree, gens, seed, cap),
    }
}

fn load_value(path: &Path) -> Result<serde_json::Value, AnyError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(value)
}

fn load_semigroup(path: &Path) -> Result<FiniteSemigroup, AnyError> {
    let value = load_value(path)?;
    if value.get("action").is_some() {
        return Err(format!("{}: this is an act file; expected a semigroup", path.display()).into());
    }
    let input: SemigroupInput = serde_json::from_value(value)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(input.to_semigroup()?)
}

/// An act plus, when the points are semigroup elements, the semigroup whose
/// labels name them.
fn load_act(path: &Path) -> Result<(FiniteRightAct, Option<FiniteSemigroup>), AnyError> {
    let value = load_value(path)?;
    if value.get("action").is_some() {
        let act_json: ActJson = serde_json::from_value(value)
            .map_err(|e| format!("{}: {e}", path.display()))?;
        Ok((act_json.to_act()?, None))
    } else {
        let input: SemigroupInput = serde_json::from_value(value)
            .map_err(|e| format!("{}: {e}", path.display()))?;
        let s = input.to_semigroup()?;
        Ok((acts::act_of_semigroup(&s), Some(s)))
    }
}

fn budget_from_env() -> MetricBudget {
    if let Ok(text) = std::env::var("PSEUDOFIN_BUDGET") {
        if let Ok(v) = text.trim().parse::<u64>() {
            return MetricBudget { max_edges: v, max_search: v };
        }
        eprintln!("warning: ignoring unparsable PSEUDOFIN_BUDGET={text:?}");
    }
    MetricBudget::default()
}

fn quoted(s: &FiniteSemigroup, a: usize) -> String {
    format!("'{}'", s.label(a))
}

fn set_line(s: &FiniteSemigroup, set: &[usize]) -> String {
    let inner = set.iter().map(|&a| s.label(a)).collect::<Vec<_>>().join(", ");
    format!("{{{inner}}}")
}

fn kernel_shape(rd: &ReesMatrixData) -> String {
    let g = rd.group.order();
    match (rd.i_size, rd.j_size, g) {
        (1, 1, 1) => "trivial".into(),
        (1, 1, _) => format!("group of order {g}"),
        (1, j, 1) => format!("right zero semigroup of size {j}"),
        (i, 1, 1) => format!("left zero semigroup of size {i}"),
        (i, j, 1) => format!("{i}x{j} rectangular band"),
        (1, j, _) => format!("right group: {j} copies of a group of order {g}"),
        (i, 1, _) => format!("left group: {i} copies of a group of order {g}"),
        (i, j, _) => format!("{i}x{j} coordinates over a group of order {g}"),
    }
}

fn predicate_names(p: &pseudofin::structure::Predicates) -> Vec<&'static str> {
    let mut names = Vec::new();
    let mut add = |flag: bool, name: &'static str| {
        if flag {
            names.push(name);
        }
    };
    add(p.regular, "regular");
    add(p.inverse, "inverse");
    add(p.orthodox, "orthodox");
    add(p.completely_regular, "completely-regular");
    add(p.band, "band");
    add(p.semilattice, "semilattice");
    add(p.commutative, "commutative");
    add(p.group, "group");
    add(p.j_trivial, "j-trivial");
    add(p.left_cancellative, "left-cancellative");
    add(p.right_reversible, "right-reversible");
    names
}

fn cmd_info(input: &Path, as_json: bool) -> Result<ExitCode, AnyError> {
    let s = load_semigroup(input)?;
    let g = green(&s);
    let preds = predicates_with_green(&s, &g);
    let kd = kernel(&s, &g)?;
    let zero = pseudofin::structure::has_zero(&s);
    if as_json {
        let out = json!({
            "order": s.order(),
            "identity": s.identity(),
            "zero": zero,
            "labels": s.labels(),
            "green": {
                "l_classes": g.l.len(),
                "r_classes": g.r.len(),
                "h_classes": g.h.len(),
                "d_classes": g.d.len(),
                "j_classes": g.j.len(),
                "d_equals_j": g.d_equals_j,
            },
            "predicates": preds,
            "kernel": {
                "size": kd.elements.len(),
                "elements": kd.elements,
                "completely_simple": kd.is_completely_simple,
                "minimal_left_ideals": kd.minimal_left_ideals.len(),
                "minimal_right_ideals": kd.minimal_right_ideals.len(),
                "shape": kd.rees.as_ref().map(kernel_shape),
            },
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(ExitCode::SUCCESS);
    }
    match s.identity() {
        Some(e) => println!("order {}, identity {}", s.order(), quoted(&s, e)),
        None => println!("order {}, no identity", s.order()),
    }
    println!(
        "green: {} L-classes, {} R-classes, {} H-classes, {} D-classes, {} J-classes (D = J: {})",
        g.l.len(),
        g.r.len(),
        g.h.len(),
        g.d.len(),
        g.j.len(),
        g.d_equals_j
    );
    let names = predicate_names(&preds);
    if names.is_empty() {
        println!("predicates: none of the tracked classes");
    } else {
        println!("predicates: {}", names.join(", "));
    }
    let shape = kd
        .rees
        .as_ref()
        .map(kernel_shape)
        .unwrap_or_else(|| "not completely simple".into());
    println!(
        "kernel: size {}, {}; {} minimal left ideal(s), {} minimal right ideal(s)",
        kd.elements.len(),
        shape,
        kd.minimal_left_ideals.len(),
        kd.minimal_right_ideals.len()
    );
    if let Some(z) = zero {
        println!("zero: {}", quoted(&s, z));
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_pair_list(
    text: &str,
    mut resolve: impl FnMut(&str) -> Result<usize, AnyError>,
) -> Result<Vec<(usize, usize)>, AnyError> {
    let mut pairs = Vec::new();
    for chunk in text.split(',').filter(|c| !c.trim().is_empty()) {
        let (a, b) = chunk
            .split_once(':')
            .ok_or_else(|| format!("pair {chunk:?} is not of the form a:b"))?;
        pairs.push((resolve(a.trim())?, resolve(b.trim())?));
    }
    if pairs.is_empty() {
        return Err("empty pair list".into());
    }
    Ok(pairs)
}

fn print_witness(s: &FiniteSemigroup, act: &FiniteRightAct, w: &pseudofin::metric::DiameterWitness) {
    let lab = |p: usize| s.label(p);
    println!(
        "witness pair: ({}, {}) at distance {}",
        lab(w.pair.0),
        lab(w.pair.1),
        w.sequence.len()
    );
    for step in &w.sequence {
        let apply = |p: usize| step.s.map_or(p, |t| act.act(p, t));
        let s_name = step.s.map_or_else(|| "1".to_string(), |t| s.label(t));
        println!(
            "  {} = {}.{} | {}.{} = {}",
            lab(apply(step.x)),
            lab(step.x),
            s_name,
            lab(step.y),
            s_name,
            lab(apply(step.y))
        );
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_diameter(
    input: &Path,
    set: Option<Vec<String>>,
    pairs: Option<String>,
    min_size: Option<usize>,
    pairs_mode: bool,
    left: bool,
    as_json: bool,
) -> Result<ExitCode, AnyError> {
    let loaded = load_semigroup(input)?;
    let s = if left { loaded.opposite() } else { loaded };
    let side = if left { "left" } else { "right" };
    let act = acts::act_of_semigroup(&s);
    let budget = budget_from_env();

    if let Some(k) = min_size {
        let mode = if pairs_mode { SearchMode::Pairs } else { SearchMode::Symmetric };
        let res = metric::min_diameter_with_budget(&act, k, mode, &budget)?;
        if as_json {
            let out = json!({
                "side": side,
                "min_size": k,
                "diameter": res.diameter,
                "genset": res.genset,
                "exhausted": res.exhausted,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        } else {
            match res.diameter {
                Some(d) => println!("minimum {side} diameter over sets of size <= {k}: {d}"),
                None => println!("no generating set of size <= {k}"),
            }
            if let Some(gs) = &res.genset {
                match gs {
                    GenSet::Symmetric(m) => println!("achieved by {}", set_line(&s, m)),
                    GenSet::Pairs(ps) => {
                        let body = ps
                            .iter()
                            .map(|&(a, b)| format!("({}, {})", s.label(a), s.label(b)))
                            .collect::<Vec<_>>()
                            .join(", ");
                        println!("achieved by pairs {{{body}}}");
                    }
                }
            }
            if !res.exhausted {
                println!("note: search budget hit; result may not be optimal");
            }
        }
        return Ok(ExitCode::SUCCESS);
    }

    let genset = if let Some(tokens) = set {
        let mut members = Vec::with_capacity(tokens.len());
        for t in &tokens {
            members.push(resolve_element(&s, t)?);
        }
        GenSet::Symmetric(members)
    } else if let Some(text) = &pairs {
        GenSet::Pairs(parse_pair_list(text, |tok| Ok(resolve_element(&s, tok)?))?)
    } else {
        GenSet::Symmetric(s.elements().collect())
    };
    let report = metric::distance_matrix_with_budget(&act, &genset, &budget)?;
    if as_json {
        let out = json!({
            "side": side,
            "report": DiameterReportJson::from_report(&report),
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(ExitCode::SUCCESS);
    }
    match report.diameter {
        Some(d) => println!("{side} diameter: {d}"),
        None => {
            println!("{side} diameter: infinite (the set does not generate)");
            if let Some((a, b)) = report.disconnected_pair {
                println!("unreachable pair: ({}, {})", s.label(a), s.label(b));
            }
        }
    }
    if let Some(w) = &report.witness {
        print_witness(&s, &act, w);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_congruence(input: &Path, pairs: &str, as_json: bool) -> Result<ExitCode, AnyError> {
    let (act, named) = load_act(input)?;
    let resolve = |tok: &str| -> Result<usize, AnyError> {
        if let Some(s) = &named {
            return Ok(resolve_element(s, tok)?);
        }
        let idx: usize = tok.parse().map_err(|_| format!("invalid point {tok:?}"))?;
        if idx >= act.carrier() {
            return Err(format!("point {idx} out of range (carrier {})", act.carrier()).into());
        }
        Ok(idx)
    };
    let pair_list = parse_pair_list(pairs, resolve)?;
    let cong = acts::generated_congruence(&act, &pair_list);
    if as_json {
        let out = json!({
            "carrier": act.carrier(),
            "pairs": pair_list,
            "classes": cong.classes(),
            "universal": cong.is_universal(),
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(ExitCode::SUCCESS);
    }
    println!(
        "congruence on {} points from {} pair(s): {} class(es)",
        act.carrier(),
        pair_list.len(),
        cong.len()
    );
    for class in cong.classes() {
        match &named {
            Some(s) => println!("  {}", set_line(s, class)),
            None => println!("  {class:?}"),
        }
    }
    println!("universal: {}", cong.is_universal());
    Ok(ExitCode::SUCCESS)
}

fn cmd_green(input: &Path, as_json: bool) -> Result<ExitCode, AnyError> {
    let s = load_semigroup(input)?;
    let g = green(&s);
    if as_json {
        let out = json!({
            "order": s.order(),
            "l": g.l.classes(),
            "r": g.r.classes(),
            "h": g.h.classes(),
            "d": g.d.classes(),
            "j": g.j.classes(),
            "d_equals_j": g.d_equals_j,
            "minimal_j_class": g.j.class(g.minimal_j_class()),
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(ExitCode::SUCCESS);
    }
    let show = |name: &str, p: &pseudofin::util::Partition| {
        let body = p.classes().iter().map(|c| set_line(&s, c)).collect::<Vec<_>>().join(" ");
        println!("{name} ({} classes): {body}", p.len());
    };
    show("L", &g.l);
    show("R", &g.r);
    show("H", &g.h);
    show("D", &g.d);
    show("J", &g.j);
    println!("D = J: {}", g.d_equals_j);
    println!("minimal J-class: {}", set_line(&s, g.j.class(g.minimal_j_class())));
    Ok(ExitCode::SUCCESS)
}

fn cmd_kernel(input: &Path, as_json: bool) -> Result<ExitCode, AnyError> {
    let s = load_semigroup(input)?;
    let g = green(&s);
    let kd = kernel(&s, &g)?;
    let lefts = minimal_one_sided_ideals(&s, &g, Side::Left);
    let rights = minimal_one_sided_ideals(&s, &g, Side::Right);
    if as_json {
        let rees = kd.rees.as_ref().map(|r| {
            json!({
                "i_size": r.i_size,
                "j_size": r.j_size,
                "group": SemigroupJson::from_semigroup(&r.group),
                "group_members": r.group_members,
                "idempotent": r.idempotent,
                "sandwich": r.p,
                "coords": r.coords,
            })
        });
        let out = json!({
            "kernel": kd.elements,
            "completely_simple": kd.is_completely_simple,
            "minimal_left_ideals": lefts,
            "minimal_right_ideals": rights,
            "rees": rees,
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(ExitCode::SUCCESS);
    }
    println!("kernel ({} elements): {}", kd.elements.len(), set_line(&s, &kd.elements));
    println!("completely simple: {}", kd.is_completely_simple);
    println!("minimal left ideals ({}):", lefts.len());
    for ideal in &lefts {
        println!("  {}", set_line(&s, ideal));
    }
    println!("minimal right ideals ({}):", rights.len());
    for ideal in &rights {
        println!("  {}", set_line(&s, ideal));
    }
    if let Some(r) = &kd.rees {
        println!(
            "coordinates: {} x {} over a group of order {} ({}), base idempotent {}",
            r.i_size,
            r.j_size,
            r.group.order(),
            kernel_shape(r),
            quoted(&s, r.idempotent)
        );
        println!("sandwich (rows = right coordinates, entries in the group):");
        for row in &r.p {
            let body = row.iter().map(|&v| r.group.label(v)).collect::<Vec<_>>().join(" ");
            println!("  [{body}]");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_construct(spec_path: &Path, compact: bool) -> Result<ExitCode, AnyError> {
    let value = load_value(spec_path)?;
    let spec: ConstructSpecJson = serde_json::from_value(value)
        .map_err(|e| format!("{}: {e}", spec_path.display()))?;
    let built: FiniteSemigroup = match spec {
        ConstructSpecJson::Rees { t, i_size, j_size, p } => {
            let t = t.to_semigroup()?;
            constructions::rees_matrix(&t, i_size, j_size, &p)?.semigroup
        }
        ConstructSpecJson::Extension { s, t, left_action, right_action, p } => {
            let spec = ExtensionSpec {
                s: s.map(|v| v.to_semigroup()).transpose()?,
                t: t.to_semigroup()?,
                left_action,
                right_action,
                p,
            };
            let ext = constructions::extension(&spec)?;
            if !ext.exhaustive_check {
                eprintln!("note: associativity verified on a sample (order > exhaustive limit)");
            }
            ext.semigroup
        }
        ConstructSpecJson::EOf { s, x, y } => {
            let s = s.to_semigroup()?;
            constructions::e_of(&s, x, y.as_deref())?.semigroup
        }
        ConstructSpecJson::Constants { s } => {
            let s = s.to_semigroup()?;
            constructions::extension_by_constants(&s)?
        }
    };
    let out = SemigroupJson::from_semigroup(&built);
    if compact {
        println!("{}", serde_json::to_string(&out)?);
    } else {
        println!("{}", serde_json::to_string_pretty(&out)?);
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_suites(tokens: &[String]) -> Result<Vec<CheckKind>, AnyError> {
    let mut kinds: Vec<CheckKind> = Vec::new();
    for token in tokens {
        let parsed = CheckKind::parse(token)
            .ok_or_else(|| format!("unknown suite {token:?} (try: all, csmi, rr, jtrivial, minideal, con1, diag, orthodox)"))?;
        for k in parsed {
            if !kinds.contains(&k) {
                kinds.push(k);
            }
        }
    }
    Ok(kinds)
}

fn print_entries(entries: &[SuiteEntry]) {
    for e in entries {
        let status = if e.status == theorems::CheckStatus::NotApplicable {
            " n/a"
        } else if e.pass {
            "PASS"
        } else {
            "FAIL"
        };
        let measured = if e.measured < 0 { "inf".to_string() } else { e.measured.to_string() };
        println!(
            "[{status}] {:<24} bound {:>3}  measured {:>4}  {}",
            e.theorem_id, e.bound, measured, e.instance
        );
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: &[String],
    random: usize,
    degree: Option<usize>,
    seed: u64,
    order_cap: usize,
    input: Option<&Path>,
    dump: Option<PathBuf>,
    as_json: bool,
) -> Result<ExitCode, AnyError> {
    let checks = parse_suites(suite)?;
    let report: SuiteReport = match input {
        Some(path) => {
            let loaded = load_semigroup(path)?;
            let (s, lifted) = match loaded.identity() {
                Some(_) => (loaded, false),
                None => (loaded.adjoin_identity(), true),
            };
            if lifted && !as_json {
                println!(
                    "input has no identity; checking the lifted monoid of order {}",
                    s.order()
                );
            }
            let entries = theorems::run_checks_on("input", &s, None, &checks);
            let failures = if entries.iter().any(|e| !e.pass) {
                vec![serde_json::to_string(&SemigroupJson::from_semigroup(&s))?]
            } else {
                Vec::new()
            };
            let all_pass = entries.iter().all(|e| e.pass);
            SuiteReport { entries, failures, all_pass }
        }
        None => {
            let cfg = SuiteConfig { random_count: random, seed, order_cap, degree, checks };
            theorems::run_suite(&cfg)
        }
    };
    if as_json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print_entries(&report.entries);
        let total = report.entries.len();
        let failed = report.entries.iter().filter(|e| !e.pass).count();
        let na = report
            .entries
            .iter()
            .filter(|e| e.status == theorems::CheckStatus::NotApplicable)
            .count();
        println!("{total} checks: {} passed, {failed} failed, {na} not applicable", total - failed);
    }
    if !report.all_pass {
        let path = dump.unwrap_or_else(|| PathBuf::from("pseudofin-failures.json"));
        let body = format!("[{}]\n", report.failures.join(",\n"));
        std::fs::write(&path, body)?;
        eprintln!("failing instance tables dumped to {}", path.display());
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_random(degree: usize, gens: usize, seed: u64, cap: usize) -> Result<ExitCode, AnyError> {
    let mut params = RandomMonoidParams::new(degree, gens, seed);
    params.cap = cap;
    let (s, _maps) = random_transformation_monoid_with(params)?;
    eprintln!(
        "order {} monoid from {gens} random generator(s) on {degree} points (seed {seed})",
        s.order()
    );
    println!("{}", serde_json::to_string_pretty(&SemigroupJson::from_semigroup(&s))?);
    Ok(ExitCode::SUCCESS)
}
