use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use knotcolor::coloring::{
    color_backtrack, color_braid, color_brute, decode_model, emit_dimacs, encode_cnf,
    external_decide, parse_dimacs, sat_decide, Answer, BudgetLimit, SatResult,
};
use knotcolor::fixtures::fixtures;
use knotcolor::knotio::torus_braid;
use knotcolor::quandle::Library;
use knotcolor::recognize::certify_knotted_parallel;
use knotcolor::{
    affine_prefilter, alexander_polynomial, braid_to_diagram, certify_knotted,
    count_colorings_with_budget, distinguish as run_distinguish, find_coloring, fox_count,
    knot_determinant, Budget, CertifyOutcome, Coloring, ColoringError, DistinguishOptions,
    DistinguishOutcome, Mode, Quandle,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::spec::{load_knot_file, load_library_file, LoadedKnot};
use crate::{
    AlexanderArgs, BenchArgs, BudgetArgs, CertifyArgs, ColorArgs, DistinguishArgs, EncodeArgs,
    Engine, EngineArgs, Format, LibraryArgs, EXIT_BUDGET, EXIT_INCONCLUSIVE, SCHEMA,
};

type CmdResult = Result<u8, String>;

impl BudgetArgs {
    fn budget(&self) -> Result<Budget, String> {
        let time_limit = match self.time_limit {
            Some(s) if !(s > 0.0 && s.is_finite()) => {
                return Err(format!("--time-limit must be positive, got {s}"))
            }
            Some(s) => Some(Duration::from_secs_f64(s)),
            None => None,
        };
        Ok(Budget {
            max_assignments: self.max_assignments,
            max_nodes: self.max_nodes,
            time_limit,
        })
    }
}

impl LibraryArgs {
    fn load(&self) -> Result<Library, String> {
        let library = match &self.library {
            Some(path) => load_library_file(path)?,
            None => self.generate.generate(),
        };
        if library.is_empty() {
            return Err("the quandle library is empty".into());
        }
        Ok(library)
    }
}

fn big(n: u128) -> Value {
    u64::try_from(n).map_or_else(|_| json!(n.to_string()), |v| json!(v))
}

fn budget_json(limit: &BudgetLimit) -> Value {
    serde_json::to_value(limit).expect("budget limit serializes")
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON output")
    );
}

fn check_engine(engine: Engine, knot: &LoadedKnot, mode: Mode) -> Result<(), String> {
    if engine == Engine::Braid && knot.braid.is_none() {
        return Err(format!(
            "engine `braid` needs a braid or torus input ({})",
            knot.name
        ));
    }
    if mode == Mode::Count && matches!(engine, Engine::Sat | Engine::External) {
        return Err(format!(
            "engine `{}` cannot count; use brute, backtrack or braid",
            engine.name()
        ));
    }
    Ok(())
}

/// Runs `engine` in decide or count mode. Decide mode also returns a
/// witness when the engine produces one.
fn run_engine(
    engine: Engine,
    knot: &LoadedKnot,
    q: &Quandle,
    mode: Mode,
    budget: &Budget,
    solver: Option<&Path>,
) -> Result<(Answer, Option<Coloring>), ColoringError> {
    let k = &knot.diagram;
    match (engine, mode) {
        (Engine::Brute, _) => Ok((color_brute(k, q, mode, budget)?, None)),
        (Engine::Backtrack, Mode::Decide) => Ok((color_backtrack(k, q, mode, budget)?, None)),
        (Engine::Backtrack, Mode::Count) => Ok((
            Answer::Count(count_colorings_with_budget(k, q, budget)?),
            None,
        )),
        (Engine::Braid, _) => {
            let b = knot.braid.as_ref().expect("checked by check_engine");
            Ok((color_braid(b, q, mode, budget)?, None))
        }
        (Engine::Sat, Mode::Decide) => {
            let c = find_coloring(k, q, budget)?;
            Ok((Answer::Colorable(c.is_some()), c))
        }
        (Engine::External, Mode::Decide) => {
            let solver = solver.ok_or_else(|| {
                ColoringError::External("--solver (or KNOTCOLOR_SOLVER) is required".into())
            })?;
            if k.crossing_count() == 0 || q.size() < 2 {
                return Ok((Answer::Colorable(false), None));
            }
            let inst = encode_cnf(k, q, q.is_connected(), true)?;
            match external_decide(solver, &inst)? {
                SatResult::Unsat => Ok((Answer::Colorable(false), None)),
                SatResult::Sat(model) => {
                    let c = decode_model(&model, k.arc_count(), q.size());
                    Ok((Answer::Colorable(true), Some(c)))
                }
            }
        }
        (Engine::Sat | Engine::External, Mode::Count) => unreachable!("checked by check_engine"),
    }
}

/// Brute-force cross-check; `Ok(false)` when brute force is over budget.
fn cross_check(
    knot: &LoadedKnot,
    q: &Quandle,
    mode: Mode,
    answer: &Answer,
    budget: &Budget,
) -> Result<bool, String> {
    match color_brute(&knot.diagram, q, mode, budget) {
        Ok(reference) if reference == *answer => Ok(true),
        Ok(reference) => Err(format!(
            "cross-check failed: engine says {answer:?}, brute force says {reference:?}"
        )),
        Err(ColoringError::BudgetExceeded(_)) => Ok(false),
        Err(e) => Err(e.to_string()),
    }
}

pub fn color(args: ColorArgs, count: bool) -> CmdResult {
    let knot = args.knot.spec()?.load()?;
    let q = args.quandle.build()?;
    let budget = args.budget.budget()?;
    let EngineArgs {
        engine,
        solver,
        check,
    } = &args.engine;
    let engine = &engine.unwrap_or(if count {
        Engine::Backtrack
    } else {
        Engine::Sat
    });
    let mode = if count { Mode::Count } else { Mode::Decide };
    check_engine(*engine, &knot, mode)?;
    let start = Instant::now();
    let outcome = run_engine(*engine, &knot, &q, mode, &budget, solver.as_deref());
    let millis = start.elapsed().as_millis() as u64;
    let (answer, coloring) = match outcome {
        Ok(r) => r,
        Err(ColoringError::BudgetExceeded(limit)) => {
            match args.format {
                Format::Json => print_json(&json!({
                    "schema": SCHEMA,
                    "command": if count { "count" } else { "color" },
                    "knot": knot.name,
                    "quandle": q.label(),
                    "engine": engine.name(),
                    "millis": millis,
                    "status": "budget",
                    "budget": budget_json(&limit),
                })),
                Format::Text => println!("budget exceeded: {limit}"),
            }
            return Ok(EXIT_BUDGET);
        }
        Err(e) => return Err(e.to_string()),
    };
    let checked = if *check {
        Some(cross_check(&knot, &q, mode, &answer, &budget)?)
    } else {
        None
    };
    match args.format {
        Format::Json => {
            let mut out = json!({
                "schema": SCHEMA,
                "command": if count { "count" } else { "color" },
                "knot": knot.name,
                "quandle": q.label(),
                "quandle_size": q.size(),
                "engine": engine.name(),
                "colorable": answer.is_colorable(),
                "millis": millis,
                "status": "ok",
            });
            if let Some(n) = answer.count() {
                out["count"] = json!(n);
            }
            if let Some(c) = &coloring {
                out["coloring"] = json!(c.colors());
            }
            if let Some(done) = checked {
                out["check"] = json!(if done { "agreed" } else { "skipped" });
            }
            print_json(&out);
        }
        Format::Text => {
            match answer {
                Answer::Count(n) => println!("count: {n}"),
                Answer::Colorable(b) => println!("colorable: {b}"),
            }
            if let Some(c) = &coloring {
                let colors: Vec<String> = c.colors().iter().map(|x| x.to_string()).collect();
                println!("coloring: {}", colors.join(" "));
            }
            if checked == Some(false) {
                eprintln!("note: brute-force check skipped (over budget)");
            }
        }
    }
    Ok(0)
}

pub fn encode(args: EncodeArgs) -> CmdResult {
    let knot = args.knot.spec()?.load()?;
    let q = args.quandle.build()?;
    let sb = !args.no_sb && q.is_connected();
    if !args.no_sb && !sb {
        eprintln!(
            "note: {} is not connected; symmetry-breaking clause omitted",
            q.label()
        );
    }
    let inst = encode_cnf(&knot.diagram, &q, sb, !args.no_nontrivial).map_err(|e| e.to_string())?;
    let text = emit_dimacs(&inst);
    match &args.output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(0)
}

pub fn certify(args: CertifyArgs) -> CmdResult {
    let knot = args.knot.spec()?.load()?;
    let mut library = args.library.load()?;
    if args.prefilter {
        library = affine_prefilter(&knot.diagram, &library);
        if library.is_empty() {
            eprintln!("note: the prefilter removed every quandle");
        }
    }
    let budget = args.budget.budget()?;
    let outcome = if library.is_empty() {
        CertifyOutcome::Exhausted(knotcolor::recognize::ExhaustionReport {
            outcomes: Vec::new(),
        })
    } else if args.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(args.jobs)
            .build()
            .map_err(|e| e.to_string())?;
        pool.install(|| certify_knotted_parallel(&knot.diagram, &library, &budget))
            .map_err(|e| e.to_string())?
    } else {
        certify_knotted(&knot.diagram, &library, &budget).map_err(|e| e.to_string())?
    };
    match args.format {
        Format::Json => {
            let mut out = serde_json::to_value(&outcome).expect("outcome serializes");
            out["schema"] = json!(SCHEMA);
            out["knot_name"] = json!(knot.name);
            print_json(&out);
        }
        Format::Text => match &outcome {
            CertifyOutcome::Certified(c) => {
                let colors: Vec<String> =
                    c.coloring.colors().iter().map(|x| x.to_string()).collect();
                println!(
                    "knotted: colored by {} (library index {})",
                    c.quandle.name, c.library_index
                );
                println!("coloring: {}", colors.join(" "));
            }
            CertifyOutcome::Exhausted(r) => println!(
                "inconclusive: none of {} quandles colors the knot ({} over budget)",
                r.outcomes.len(),
                r.budget_hits()
            ),
        },
    }
    Ok(if outcome.is_certified() {
        0
    } else {
        EXIT_INCONCLUSIVE
    })
}

pub fn distinguish(args: DistinguishArgs) -> CmdResult {
    let first = args.first.load()?;
    let second = args.second.load()?;
    let library = args.library.load()?;
    let options = DistinguishOptions {
        alexander: !args.no_alexander,
        count: !args.no_count,
        budget: args.budget.budget()?,
    };
    let outcome = run_distinguish(&first.diagram, &second.diagram, &library, &options);
    match args.format {
        Format::Json => {
            let mut out = serde_json::to_value(&outcome).expect("outcome serializes");
            out["schema"] = json!(SCHEMA);
            out["knots"] = json!([first.name, second.name]);
            print_json(&out);
        }
        Format::Text => match &outcome {
            DistinguishOutcome::Distinguished(w) => {
                println!("different: {}", serde_json::to_string(w).unwrap())
            }
            DistinguishOutcome::Indistinguishable(r) => println!(
                "not distinguished by {} quandles (Alexander polynomial {})",
                r.compared.len(),
                r.alexander.0
            ),
        },
    }
    Ok(match outcome {
        DistinguishOutcome::Distinguished(_) => 0,
        DistinguishOutcome::Indistinguishable(_) => EXIT_INCONCLUSIVE,
    })
}

pub fn alexander(args: AlexanderArgs) -> CmdResult {
    let knot = args.knot.spec()?.load()?;
    let delta = alexander_polynomial(&knot.diagram);
    let det = knot_determinant(&knot.diagram);
    let fox: Vec<(u64, u128)> = args
        .fox
        .iter()
        .map(|&n| (n, fox_count(&knot.diagram, n)))
        .collect();
    match args.format {
        Format::Json => print_json(&json!({
            "schema": SCHEMA,
            "knot": knot.name,
            "alexander": delta.coefficients(),
            "polynomial": delta.to_string(),
            "determinant": big(det),
            "fox": fox.iter().map(|&(n, c)| json!({"modulus": n, "count": big(c)})).collect::<Vec<_>>(),
        })),
        Format::Text => {
            println!("alexander: {delta}");
            println!("determinant: {det}");
            for (n, c) in fox {
                println!("fox {n}: {c}");
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct BenchRow {
    knot: String,
    quandle: String,
    size: usize,
    engine: &'static str,
    verdict: &'static str,
    millis: u64,
    status: String,
}

fn family(spec: &str) -> Result<Vec<LoadedKnot>, String> {
    if spec == "fixtures" {
        return Ok(fixtures()
            .into_iter()
            .map(|f| LoadedKnot {
                name: f.name.to_string(),
                diagram: f.diagram,
                braid: f.braid,
            })
            .collect());
    }
    match spec.split_once(':') {
        Some(("torus2", ns)) => ns
            .split(',')
            .map(|n| {
                let n: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| format!("`{n}` is not a number"))?;
                let b = torus_braid(2, n).map_err(|e| e.to_string())?;
                let diagram = braid_to_diagram(&b).map_err(|e| e.to_string())?;
                Ok(LoadedKnot {
                    name: format!("T(2,{n})"),
                    diagram,
                    braid: Some(b),
                })
            })
            .collect(),
        Some(("file", path)) => load_knot_file(&PathBuf::from(path)),
        _ => Err(format!("unknown family `{spec}`")),
    }
}

pub fn bench(args: BenchArgs) -> CmdResult {
    let knots = family(&args.family)?;
    let library = args.library.load()?;
    let budget = args.budget.budget()?;
    let EngineArgs {
        engine,
        solver,
        check,
    } = &args.engine;
    let engine = &engine.unwrap_or(Engine::Backtrack);
    let jobs: Vec<(&LoadedKnot, &Quandle)> = knots
        .iter()
        .flat_map(|k| library.iter().map(move |q| (k, q)))
        .collect();
    let run_row = |&(k, q): &(&LoadedKnot, &Quandle)| -> Result<BenchRow, String> {
        if let Err(e) = check_engine(*engine, k, Mode::Decide) {
            return Ok(BenchRow {
                knot: k.name.clone(),
                quandle: q.label(),
                size: q.size(),
                engine: engine.name(),
                verdict: "unknown",
                millis: 0,
                status: format!("error: {e}"),
            });
        }
        let start = Instant::now();
        let result = run_engine(*engine, k, q, Mode::Decide, &budget, solver.as_deref());
        let millis = start.elapsed().as_millis() as u64;
        let (verdict, status) = match result {
            Ok((answer, _)) => {
                if *check {
                    cross_check(k, q, Mode::Decide, &answer, &budget)?;
                }
                (
                    if answer.is_colorable() {
                        "colorable"
                    } else {
                        "not-colorable"
                    },
                    "ok".to_string(),
                )
            }
            Err(ColoringError::BudgetExceeded(limit)) => ("unknown", format!("budget: {limit}")),
            Err(e) => ("unknown", format!("error: {e}")),
        };
        Ok(BenchRow {
            knot: k.name.clone(),
            quandle: q.label(),
            size: q.size(),
            engine: engine.name(),
            verdict,
            millis,
            status,
        })
    };
    let rows: Vec<BenchRow> = if args.jobs > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(args.jobs)
            .build()
            .map_err(|e| e.to_string())?;
        pool.install(|| jobs.par_iter().map(run_row).collect::<Result<_, _>>())?
    } else {
        jobs.iter().map(run_row).collect::<Result<_, _>>()?
    };
    let sink: Box<dyn Write> = match &args.output {
        Some(path) => {
            Box::new(fs::File::create(path).map_err(|e| format!("{}: {e}", path.display()))?)
        }
        None => Box::new(std::io::stdout().lock()),
    };
    let mut writer = csv::Writer::from_writer(sink);
    for row in &rows {
        writer.serialize(row).map_err(|e| e.to_string())?;
    }
    writer.flush().map_err(|e| e.to_string())?;
    Ok(0)
}

/// Competition-style output; exit code 10 for SAT and 20 for UNSAT.
pub fn solve(file: &Path) -> CmdResult {
    let text = fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let inst = parse_dimacs(&text).map_err(|e| e.to_string())?;
    match sat_decide(&inst) {
        SatResult::Sat(model) => {
            println!("s SATISFIABLE");
            let lits: Vec<String> = model
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    if v {
                        (i + 1).to_string()
                    } else {
                        format!("-{}", i + 1)
                    }
                })
                .collect();
            println!("v {} 0", lits.join(" "));
            Ok(10)
        }
        SatResult::Unsat => {
            println!("s UNSATISFIABLE");
            Ok(20)
        }
    }
}
