use std::fmt::Write as _;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use actreedy::fincat::json::parse_action;
use actreedy::nerve::nerve_cell;
use actreedy::reedyver::{
    verify_elegance, verify_generalized, verify_reedy, DadCandidate, DaoCandidate, DeltaCandidate, OmegaCandidate,
    TrivialGroup,
};
use actreedy::symact::{self, SymCandidate};
use actreedy::{dad, dao, CatAction, DadMorphism, DadObject, DaoMorphism, DaoObject, Report, VerifyOptions};

#[derive(Parser)]
#[command(name = "actreedy", version, about = "Categories of actions and their Reedy structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build ⟨n↻k⟩ (`n:k`) or ⟨n↻S⟩ (`n:TREE`) and summarize it.
    Build {
        object: String,
        #[arg(long)]
        json: bool,
    },
    /// List the maps SRC → TGT.
    Hom {
        src: String,
        tgt: String,
        /// List maps of the symmetric category (tree objects only).
        #[arg(long)]
        symmetric: bool,
    },
    /// Compose the I-th map SRC → MID with the J-th map MID → TGT.
    Compose {
        src: String,
        mid: String,
        tgt: String,
        i: usize,
        j: usize,
        #[arg(long)]
        symmetric: bool,
    },
    /// Factor the INDEX-th map SRC → TGT as a minus map followed by a plus map.
    Factorize {
        src: String,
        tgt: String,
        index: usize,
        /// Normalize a symmetric map into a group element and a planar map.
        #[arg(long)]
        symmetric: bool,
    },
    /// Run a windowed verification and report violations.
    Verify {
        check: Check,
        #[arg(long, value_enum, default_value = "dad")]
        family: Family,
        /// Largest n (and k for dad, ordinal size for delta).
        #[arg(long)]
        bound: Option<u32>,
        /// Largest number of tree vertices.
        #[arg(long, default_value_t = 3)]
        vertices: usize,
        /// Largest vertex arity.
        #[arg(long, default_value_t = 2)]
        arity: usize,
        /// Same as `--family sym`.
        #[arg(long)]
        symmetric: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 10)]
        probe_degree: usize,
        #[arg(long, default_value_t = 4)]
        law_degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// List the (n, k)-cells of an action read from a JSON file.
    Nerve {
        #[arg(long)]
        action: std::path::PathBuf,
        #[arg(long)]
        shape: String,
        /// Print the acted category as DOT instead of the cells.
        #[arg(long)]
        dot: bool,
    },
    /// Graphviz rendering of an object.
    ExportDot { object: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Reedy,
    Elegance,
    Generalized,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Delta,
    Omega,
    Dad,
    Dao,
    Sym,
}

enum Object {
    Dad(Arc<DadObject>),
    Dao(Arc<DaoObject>),
}

fn parse_object(s: &str) -> Result<Object> {
    let (_, rest) = s.split_once(':').with_context(|| format!("expected `n:k` or `n:TREE`, got `{s}`"))?;
    if rest.trim().parse::<i32>().is_ok() {
        let (n, k) = dad::parse_object(s)?;
        Ok(Object::Dad(DadObject::get(n, k)))
    } else {
        let (n, t) = dao::parse_object(s)?;
        Ok(Object::Dao(DaoObject::get(n, &t)))
    }
}

fn class_name(plus: bool, minus: bool, identity: bool) -> &'static str {
    match (identity, plus, minus) {
        (true, _, _) => "identity",
        (_, true, true) => "iso",
        (_, true, false) => "plus",
        (_, false, true) => "minus",
        _ => "neither",
    }
}

fn dad_line(f: &DadMorphism) -> String {
    format!("{f}  [{}]", class_name(f.is_plus(), f.is_minus(), f.is_identity()))
}

fn dao_line(f: &DaoMorphism) -> String {
    format!("{f}  [{}]", class_name(f.is_plus(), f.is_minus(), f.is_identity()))
}

fn build(object: &str, json: bool) -> Result<String> {
    let mut out = String::new();
    match parse_object(object)? {
        Object::Dad(o) => {
            if json {
                let objects: Vec<_> = (0..o.num_objects())
                    .map(|x| serde_json::json!({ "name": o.name(x), "moment": o.moment(x).to_string() }))
                    .collect();
                let v = serde_json::json!({
                    "object": o.literal(),
                    "acted_objects": o.num_objects(),
                    "acting_objects": o.acting_objects().len(),
                    "degree": o.degree(),
                    "objects": objects,
                });
                return Ok(serde_json::to_string_pretty(&v)? + "\n");
            }
            writeln!(out, "object {}", o.literal())?;
            writeln!(out, "acting objects: {}", o.acting_objects().len())?;
            writeln!(out, "acted objects: {}", o.num_objects())?;
            writeln!(out, "morphisms: {}", o.morphisms().len())?;
            writeln!(out, "degree: {}", o.degree())?;
            for x in 0..o.num_objects() {
                let parent = o.parent(x).map(|p| o.name(p)).unwrap_or_else(|| "-".into());
                writeln!(out, "  {:<24} moment {:<4} parent {}", o.name(x), o.moment(x), parent)?;
            }
        }
        Object::Dao(o) => {
            if json {
                let colors: Vec<_> = (0..o.num_colors())
                    .map(|c| serde_json::json!({ "name": o.name(c), "moment": o.moment(c).to_string() }))
                    .collect();
                let v = serde_json::json!({
                    "object": o.literal(),
                    "colors": o.num_colors(),
                    "generators": o.num_generators(),
                    "acting_objects": o.acting_objects().len(),
                    "degree": o.degree(),
                    "color_list": colors,
                });
                return Ok(serde_json::to_string_pretty(&v)? + "\n");
            }
            writeln!(out, "object {}", o.literal())?;
            writeln!(out, "acting objects: {}", o.acting_objects().len())?;
            writeln!(out, "colors: {}", o.num_colors())?;
            writeln!(out, "generators: {}", o.num_generators())?;
            writeln!(out, "operations: {}", o.operations().len())?;
            writeln!(out, "degree: {}", o.degree())?;
            for c in 0..o.num_colors() {
                let generator = match o.generator_sources(c) {
                    Some(s) => {
                        let names: Vec<String> = s.iter().map(|&x| o.name(x)).collect();
                        format!("[{}]", names.join(","))
                    }
                    None => "leaf".into(),
                };
                writeln!(out, "  {:<24} moment {:<4} generator {}", o.name(c), o.moment(c), generator)?;
            }
        }
    }
    Ok(out)
}

fn hom(src: &str, tgt: &str, symmetric: bool) -> Result<String> {
    let lines: Vec<String> = match (parse_object(src)?, parse_object(tgt)?) {
        (Object::Dad(a), Object::Dad(b)) if !symmetric => dad::hom(&a, &b).iter().map(dad_line).collect(),
        (Object::Dao(a), Object::Dao(b)) if symmetric => symact::sym_hom(&a, &b)
            .iter()
            .map(|f| format!("{f}  [{}]", if f.is_planar() { "planar" } else { "nonplanar" }))
            .collect(),
        (Object::Dao(a), Object::Dao(b)) => dao::hom(&a, &b).iter().map(dao_line).collect(),
        _ => bail!("source and target must be of the same kind; --symmetric needs tree objects"),
    };
    let mut out = format!("{} maps {src} -> {tgt}\n", lines.len());
    for (i, l) in lines.iter().enumerate() {
        writeln!(out, "{i:>5}  {l}")?;
    }
    Ok(out)
}

fn pick<T: Clone>(maps: Vec<T>, i: usize, what: &str) -> Result<T> {
    let len = maps.len();
    maps.get(i).cloned().with_context(|| format!("index {i} out of range: {what} has {len} maps"))
}

fn compose(src: &str, mid: &str, tgt: &str, i: usize, j: usize, symmetric: bool) -> Result<String> {
    let first = format!("{src} -> {mid}");
    let second = format!("{mid} -> {tgt}");
    Ok(match (parse_object(src)?, parse_object(mid)?, parse_object(tgt)?) {
        (Object::Dad(a), Object::Dad(b), Object::Dad(c)) if !symmetric => {
            let f = pick(dad::hom(&a, &b), i, &first)?;
            let g = pick(dad::hom(&b, &c), j, &second)?;
            let h = dad::compose(&f, &g)?;
            format!("first:  {}\nthen:   {}\nresult: {}\n", dad_line(&f), dad_line(&g), dad_line(&h))
        }
        (Object::Dao(a), Object::Dao(b), Object::Dao(c)) if symmetric => {
            let f = pick(symact::sym_hom(&a, &b), i, &first)?;
            let g = pick(symact::sym_hom(&b, &c), j, &second)?;
            let h = symact::sym_compose(&f, &g)?;
            format!("first:  {f}\nthen:   {g}\nresult: {h}\n")
        }
        (Object::Dao(a), Object::Dao(b), Object::Dao(c)) => {
            let f = pick(dao::hom(&a, &b), i, &first)?;
            let g = pick(dao::hom(&b, &c), j, &second)?;
            let h = dao::compose(&f, &g)?;
            format!("first:  {}\nthen:   {}\nresult: {}\n", dao_line(&f), dao_line(&g), dao_line(&h))
        }
        _ => bail!("all three objects must be of the same kind; --symmetric needs tree objects"),
    })
}

fn factorize(src: &str, tgt: &str, index: usize, symmetric: bool) -> Result<String> {
    let what = format!("{src} -> {tgt}");
    Ok(match (parse_object(src)?, parse_object(tgt)?) {
        (Object::Dad(a), Object::Dad(b)) if !symmetric => {
            let f = pick(dad::hom(&a, &b), index, &what)?;
            let (minus, plus) = dad::reedy_factorize(&f);
            format!(
                "map:     {}\nminus:   {}\nplus:    {}\nthrough: {}\n",
                dad_line(&f),
                dad_line(&minus),
                dad_line(&plus),
                minus.tgt().literal()
            )
        }
        (Object::Dao(a), Object::Dao(b)) if symmetric => {
            let f = pick(symact::sym_hom(&a, &b), index, &what)?;
            match symact::normalize(&f) {
                Some((g, h)) => {
                    let (minus, plus) = dao::reedy_factorize(&h);
                    format!(
                        "map:     {f}\ngroup:   {g:?}\nplanar:  {}\nminus:   {}\nplus:    {}\nthrough: {}\n",
                        dao_line(&h),
                        dao_line(&minus),
                        dao_line(&plus),
                        minus.tgt().literal()
                    )
                }
                None => format!("map:     {f}\nno normal form\n"),
            }
        }
        (Object::Dao(a), Object::Dao(b)) => {
            let f = pick(dao::hom(&a, &b), index, &what)?;
            let (minus, plus) = dao::reedy_factorize(&f);
            format!(
                "map:     {}\nminus:   {}\nplus:    {}\nthrough: {}\n",
                dao_line(&f),
                dao_line(&minus),
                dao_line(&plus),
                minus.tgt().literal()
            )
        }
        _ => bail!("source and target must be of the same kind; --symmetric needs tree objects"),
    })
}

struct VerifyArgs {
    check: Check,
    family: Family,
    bound: Option<u32>,
    vertices: usize,
    arity: usize,
    opts: VerifyOptions,
}

fn verify(a: &VerifyArgs) -> Result<Report> {
    let o = &a.opts;
    Ok(match (a.family, a.check) {
        (Family::Delta, check) => {
            let c = DeltaCandidate { max_n: a.bound.unwrap_or(4) as i32, augmented: true };
            match check {
                Check::Reedy => verify_reedy(&c, o),
                Check::Elegance => verify_elegance(&c, o),
                Check::Generalized => verify_generalized(&TrivialGroup(c), o),
            }
        }
        (Family::Omega, check) => {
            let c = OmegaCandidate { max_vertices: a.vertices, max_arity: a.arity, broken_minus: false };
            match check {
                Check::Reedy => verify_reedy(&c, o),
                Check::Elegance => verify_elegance(&c, o),
                Check::Generalized => verify_generalized(&TrivialGroup(c), o),
            }
        }
        (Family::Dad, check) => {
            let b = a.bound.unwrap_or(3);
            let c = DadCandidate { max_n: b, max_k: b as i32 };
            match check {
                Check::Reedy => verify_reedy(&c, o),
                Check::Elegance => verify_elegance(&c, o),
                Check::Generalized => verify_generalized(&TrivialGroup(c), o),
            }
        }
        (Family::Dao, check) => {
            let c = DaoCandidate::new(a.bound.unwrap_or(2), a.vertices, a.arity);
            match check {
                Check::Reedy => verify_reedy(&c, o),
                Check::Elegance => verify_elegance(&c, o),
                Check::Generalized => verify_generalized(&TrivialGroup(c), o),
            }
        }
        (Family::Sym, Check::Elegance) => bail!("elegance is not asserted for the symmetric family"),
        (Family::Sym, check) => {
            let c = SymCandidate::new(a.bound.unwrap_or(1), a.vertices, a.arity);
            match check {
                Check::Generalized => verify_generalized(&c, o),
                _ => verify_reedy(&c, o),
            }
        }
    })
}

fn action_dot(a: &CatAction) -> String {
    let mut out = String::from("digraph action {\n  rankdir=BT;\n");
    for (x, name) in a.acted.objects.iter().enumerate() {
        let _ = writeln!(out, "  n{x} [label=\"{name}\\n{}\"];", a.acting.objects[a.moment[x]]);
    }
    for (f, arrow) in a.acted.arrows.iter().enumerate() {
        if !a.acted.is_identity(f) {
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", arrow.src, arrow.tgt, arrow.name);
        }
    }
    out.push_str("}\n");
    out
}

fn nerve(path: &std::path::Path, shape: &str, dot: bool) -> Result<String> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let a = parse_action(&text)?;
    let report = actreedy::fincat::check_cat_action(&a);
    if !report.is_ok() {
        bail!("{} is not an action:\n{report}", path.display());
    }
    if dot {
        return Ok(action_dot(&a));
    }
    let (n, k) = dad::parse_object(shape)?;
    let cells = nerve_cell(&a, n, k);
    let mut out = format!("{} cells of shape {n}:{k}\n", cells.len());
    for c in &cells {
        writeln!(out, "  {}", c.describe(&a))?;
    }
    Ok(out)
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) -> Result<()> {
    use std::io::Write;
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<bool> {
    let text = match cli.command {
        Command::Build { object, json } => build(&object, json)?,
        Command::Hom { src, tgt, symmetric } => hom(&src, &tgt, symmetric)?,
        Command::Compose { src, mid, tgt, i, j, symmetric } => compose(&src, &mid, &tgt, i, j, symmetric)?,
        Command::Factorize { src, tgt, index, symmetric } => factorize(&src, &tgt, index, symmetric)?,
        Command::Verify { check, family, bound, vertices, arity, symmetric, jobs, probe_degree, law_degree, json } => {
            let family = if symmetric { Family::Sym } else { family };
            let opts = VerifyOptions { jobs: jobs.max(1), probe_degree, law_degree };
            let report = verify(&VerifyArgs { check, family, bound, vertices, arity, opts })?;
            emit(&if json { report.to_json() + "\n" } else { report.to_string() })?;
            return Ok(report.passed());
        }
        Command::Nerve { action, shape, dot } => nerve(&action, &shape, dot)?,
        Command::ExportDot { object } => match parse_object(&object)? {
            Object::Dad(o) => o.to_dot(),
            Object::Dao(o) => o.to_dot(),
        },
    };
    emit(&text)?;
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
