use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hfmap::coords::enumerate_coords;
use hfmap::group::{parson_index, FiniteHeckeGroup, HeckeParams, DEFAULT_MAX_GROUP};
use hfmap::map::build_algebraic_map_bounded;
use hfmap::names::{pretty, NameTable};
use hfmap::polygon::{
    boundary_from_circuit, pairing_rule_check, search_circuits, validate_circuit, vertex_classes, Circuit,
    PairingTable, SideLabelTable,
};
use hfmap::render::{render_polygon, render_quotient, render_universal, Model, QuotientFormat, RenderConfig};
use hfmap::verify::{paper_layout, plain_layout, run_all, VerifyOptions};
use hfmap::Error;

/// `println!` that ignores a closed stdout instead of panicking.
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "hfmap", version, about = "Hecke group quotients, Farey coordinates and Bring's 20-gon")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct Params {
    #[arg(long, default_value_t = 4)]
    q: u32,
    #[arg(long, default_value_t = 5)]
    n: u32,
}

#[derive(Subcommand)]
enum Cmd {
    /// Index of the principal congruence subgroup.
    Index {
        #[command(flatten)]
        p: Params,
        /// Also enumerate the quotient and compare.
        #[arg(long)]
        check: bool,
    },
    /// Vertices, edges, faces and genus of the quotient map.
    Map {
        #[command(flatten)]
        p: Params,
        #[arg(long)]
        json: bool,
    },
    /// Hecke–Farey coordinates of the vertices.
    Coords {
        #[command(flatten)]
        p: Params,
        /// Use the printed names, in table order.
        #[arg(long)]
        names: bool,
    },
    /// Farey circuits on M₄(5).
    Circuit {
        /// `paper` or a file of comma-separated names.
        #[arg(long, value_name = "paper|FILE")]
        verify: Option<String>,
        /// List closed walks from --start with poles exactly at --poles.
        #[arg(long)]
        search: bool,
        #[arg(long, default_value = "H2")]
        start: String,
        #[arg(long, default_value_t = 12)]
        length: usize,
        #[arg(long, value_delimiter = ',', default_value = "0,3,6,9")]
        poles: Vec<usize>,
    },
    /// Side pairing of the 20-gon.
    Polygon {
        #[arg(long)]
        classes: bool,
        #[arg(long)]
        genus: bool,
        #[arg(long)]
        rule_check: bool,
        /// Pairing table file (`i j` per line) instead of the published one.
        #[arg(long)]
        pairing: Option<PathBuf>,
    },
    /// SVG or DOT output.
    Render {
        #[arg(value_enum)]
        what: RenderTarget,
        #[command(flatten)]
        p: Params,
        #[arg(long, default_value = "disk")]
        model: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, default_value = "svg")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        pairing: Option<PathBuf>,
    },
    /// Run every acceptance check.
    VerifyAll {
        #[arg(long)]
        json: bool,
        #[arg(long)]
        pairing: Option<PathBuf>,
        #[arg(long)]
        circuit: Option<PathBuf>,
        #[arg(long)]
        side_labels: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderTarget {
    Universal,
    Quotient,
    Polygon,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn max_group() -> std::result::Result<usize, Failure> {
    match std::env::var("HFMAP_MAX_GROUP") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("HFMAP_MAX_GROUP=`{v}` is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_GROUP),
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn bring() -> (HeckeParams, NameTable) {
    let p = HeckeParams::new(4, 5).expect("valid");
    let t = NameTable::for_params(&p).expect("table for (4, 5)");
    (p, t)
}

fn load_pairing(path: &Option<PathBuf>) -> std::result::Result<PairingTable, Failure> {
    match path {
        Some(f) => Ok(PairingTable::parse(&read(f)?)?),
        None => Ok(PairingTable::paper()),
    }
}

fn emit(doc: &str, out: &Option<PathBuf>) -> Outcome {
    match out {
        Some(f) => fs::write(f, doc).map_err(|e| Failure::Usage(format!("{}: {e}", f.display()))),
        None => {
            let _ = std::io::Write::write_all(&mut std::io::stdout(), doc.as_bytes());
            Ok(())
        }
    }
}

fn cmd_index(p: Params, check: bool) -> Outcome {
    let hp = HeckeParams::new(p.q, p.n)?;
    let mu = parson_index(&hp);
    say!("{mu}");
    if check {
        let order = FiniteHeckeGroup::enumerate_bounded(hp, max_group()?)?.order() as u64;
        if order != mu {
            return Err(Failure::Check(format!("check FAILED: enumeration gives {order}")));
        }
        say!("check OK: enumeration gives {order}");
    }
    Ok(())
}

fn cmd_map(p: Params, json: bool) -> Outcome {
    let hp = HeckeParams::new(p.q, p.n)?;
    let m = build_algebraic_map_bounded(hp, max_group()?)?;
    let i = m.invariants();
    if json {
        say!("{}", i.to_json());
    } else {
        say!("darts {}", i.darts);
        say!("vertices {}", i.vertices);
        say!("edges {}", i.edges);
        say!("faces {}", i.faces);
        say!("genus {}", i.genus);
        if let (Some(v), Some(f)) = (i.vertex_valency, i.face_size) {
            say!("type {{{v},{f}}}");
        }
    }
    let mut problems = Vec::new();
    if i.euler_characteristic() != 2 - 2 * i.genus {
        problems.push("Euler characteristic is odd");
    }
    if i.vertex_valency.is_none_or(|v| v * i.vertices != 2 * i.edges) {
        problems.push("vertex valencies do not sum to 2E");
    }
    if i.face_size.is_none_or(|f| f * i.faces != 2 * i.edges) {
        problems.push("face sizes do not sum to 2E");
    }
    if i.darts as u64 != parson_index(&hp) {
        problems.push("dart count differs from the index formula");
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(problems.join("; ")))
    }
}

fn cmd_coords(p: Params, with_names: bool) -> Outcome {
    let hp = HeckeParams::new(p.q, p.n)?;
    if with_names {
        let t = NameTable::for_params(&hp)
            .ok_or_else(|| Failure::Usage(format!("no name table for q={} n={}", p.q, p.n)))?;
        for (name, u) in t.entries() {
            say!("{name}\t{}\t{}", u.fraction(&hp), u);
        }
    } else {
        for u in enumerate_coords(&hp)? {
            say!("{}\t{}", u.fraction(&hp), u);
        }
    }
    Ok(())
}

fn cmd_circuit(verify: Option<String>, search: bool, start: &str, length: usize, poles: &[usize]) -> Outcome {
    let (p, t) = bring();
    if verify.is_none() && !search {
        return Err(Failure::Usage("circuit needs --verify or --search".into()));
    }
    if let Some(src) = verify {
        let c = if src == "paper" { Circuit::paper() } else { Circuit::parse(&read(Path::new(&src))?, &p, Some(&t))? };
        say!("{}", c.format(Some(&t)));
        if !validate_circuit(&c, &p) {
            return Err(Failure::Check("FAIL: consecutive vertices not adjacent".into()));
        }
        match boundary_from_circuit(&c, &p) {
            Ok(b) => {
                let ms: Vec<String> =
                    b.pole_multiset().iter().map(|(u, k)| format!("{}:{k}", pretty(&t.label(u)))).collect();
                say!("OK: {} vertices, boundary of {} slots, poles {{{}}}", c.len(), b.len(), ms.join(", "));
            }
            Err(e) => return Err(Failure::Check(format!("FAIL: {e}"))),
        }
    }
    if search {
        let s = hfmap::names::resolve(start, &p, Some(&t))?;
        let poles: BTreeSet<usize> = poles.iter().copied().collect();
        let found = search_circuits(&s, length, &poles, &p)?;
        say!("{} circuits", found.len());
        for c in found {
            say!("{}", c.format(Some(&t)));
        }
    }
    Ok(())
}

fn cmd_polygon(classes: bool, genus: bool, rule_check: bool, pairing: &Option<PathBuf>) -> Outcome {
    let t = load_pairing(pairing)?;
    let all = !(classes || genus || rule_check);
    let c = vertex_classes(&t);
    if classes || all {
        for class in &c.classes {
            let names: Vec<String> = class.iter().map(|k| format!("a{k}")).collect();
            say!("{} ({})", names.join(" "), class.len());
        }
    }
    if genus || all {
        say!("V={} E={} F={} chi={} genus={}", c.vertices, c.edges, c.faces, c.euler, c.genus);
    }
    if rule_check || all {
        if pairing_rule_check(&t) {
            say!("rule OK");
        } else {
            return Err(Failure::Check("rule FAILED".into()));
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_render(
    what: RenderTarget,
    p: Params,
    model: &str,
    depth: usize,
    format: &str,
    out: &Option<PathBuf>,
    pairing: &Option<PathBuf>,
) -> Outcome {
    let doc = match what {
        RenderTarget::Universal => {
            let model: Model = model.parse()?;
            render_universal(p.q, &RenderConfig { model, depth, ..RenderConfig::default() })?
        }
        RenderTarget::Quotient => render_quotient(HeckeParams::new(p.q, p.n)?, format.parse::<QuotientFormat>()?)?,
        RenderTarget::Polygon => {
            let (hp, names) = bring();
            let b = boundary_from_circuit(&Circuit::paper(), &hp)?;
            let t = load_pairing(pairing)?;
            let layout = paper_layout(&b, &SideLabelTable::paper()).unwrap_or_else(|_| plain_layout());
            render_polygon(&b, &t, &layout, Some(&names))?
        }
    };
    emit(&doc, out)
}

fn cmd_verify_all(
    json: bool,
    pairing: &Option<PathBuf>,
    circuit: &Option<PathBuf>,
    side_labels: &Option<PathBuf>,
) -> Outcome {
    let (p, t) = bring();
    let mut o = VerifyOptions { max_group: max_group()?, pairing: load_pairing(pairing)?, ..VerifyOptions::default() };
    if let Some(f) = circuit {
        o.circuit = Circuit::parse(&read(f)?, &p, Some(&t))?;
    }
    if let Some(f) = side_labels {
        o.side_labels = SideLabelTable::parse(&read(f)?, &p, Some(&t))?;
    }
    let results = run_all(&o);
    if json {
        say!("{}", serde_json::to_string_pretty(&results).expect("results serialize"));
    } else {
        for r in &results {
            say!("{:>2}  {:<4}  {:<22}  {}", r.id, if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail);
        }
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!("{failed} of {} checks failed", results.len())))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.cmd {
        Cmd::Index { p, check } => cmd_index(p, check),
        Cmd::Map { p, json } => cmd_map(p, json),
        Cmd::Coords { p, names } => cmd_coords(p, names),
        Cmd::Circuit { verify, search, start, length, poles } => cmd_circuit(verify, search, &start, length, &poles),
        Cmd::Polygon { classes, genus, rule_check, pairing } => cmd_polygon(classes, genus, rule_check, &pairing),
        Cmd::Render { what, p, model, depth, format, out, pairing } => {
            cmd_render(what, p, &model, depth, &format, &out, &pairing)
        }
        Cmd::VerifyAll { json, pairing, circuit, side_labels } => {
            cmd_verify_all(json, &pairing, &circuit, &side_labels)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
