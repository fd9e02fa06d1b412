use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use inertia::arrangement::{
    build_reflection_arrangement, load_arrangement, Arrangement, CartanType, CoxeterFamily,
    ReflectionGroup,
};
use inertia::building::{codec_label, minimal_building_set, BuildingSet};
use inertia::caps::Caps;
use inertia::garside::{center_report, inertia_element, left_greedy_nf, words_equal, BraidWord};
use inertia::verify::{run_verify, Scope};
use inertia::wonderful::{normalize_point_encoding, stabilizer_of_point, stratification, PointInput};
use inertia::Error;

mod config;

macro_rules! outln {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).expect("writing to a String")
    };
}

#[derive(Parser)]
#[command(name = "inertia", version, about = "Wonderful models and Garside normal forms for Coxeter arrangements")]
struct Cli {
    /// TOML file overriding the computation caps.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Override one cap, e.g. `--cap group_order=500000`. Repeatable.
    #[arg(long = "cap", global = true, value_name = "KEY=VALUE")]
    caps: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build, load and describe arrangements.
    #[command(subcommand)]
    Arr(ArrCommand),
    /// The minimal building set.
    #[command(subcommand)]
    Building(BuildingCommand),
    /// Nested sets of the minimal building set.
    #[command(subcommand)]
    Nested(NestedCommand),
    /// Boundary strata of the wonderful model.
    #[command(subcommand)]
    Strata(StrataCommand),
    /// Stabilizer of a boundary point given as JSON.
    Stab(StabArgs),
    /// Braid words and Garside normal forms.
    #[command(subcommand)]
    Garside(GarsideCommand),
    /// Run the conformance checks.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct TypeArgs {
    /// Coxeter type: A, B, D or G2.
    #[arg(long = "type", value_name = "TYPE")]
    family: CoxeterFamily,
    /// Rank (may be omitted for G2).
    #[arg(long)]
    rank: Option<usize>,
}

impl TypeArgs {
    fn cartan(&self) -> Result<CartanType, Error> {
        let rank = match (self.family, self.rank) {
            (_, Some(r)) => r,
            (CoxeterFamily::G2, None) => 2,
            _ => return Err(Error::Parse("--rank is required".into())),
        };
        CartanType::new(self.family, rank)
    }

    fn group(&self) -> Result<ReflectionGroup, Error> {
        ReflectionGroup::new(self.cartan()?)
    }
}

/// An arrangement given either by type and rank or by a JSON file.
#[derive(Args)]
struct Source {
    /// Coxeter type: A, B, D or G2.
    #[arg(long = "type", value_name = "TYPE", conflicts_with = "file", required_unless_present = "file")]
    family: Option<CoxeterFamily>,
    #[arg(long)]
    rank: Option<usize>,
    /// Arrangement JSON file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Quotient a loaded arrangement by its common intersection.
    #[arg(long)]
    essentialize: bool,
}

struct Loaded {
    arr: Arrangement,
    group: Option<ReflectionGroup>,
}

impl Source {
    fn load(&self) -> Result<Loaded, CliError> {
        match (&self.file, self.family) {
            (Some(path), _) => Ok(Loaded {
                arr: load_arrangement(&read(path)?, self.essentialize)?,
                group: None,
            }),
            (None, Some(family)) => {
                let t = TypeArgs {
                    family,
                    rank: self.rank,
                };
                let c = t.cartan()?;
                let (arr, g) = build_reflection_arrangement(c.family, c.rank)?;
                Ok(Loaded { arr, group: Some(g) })
            }
            (None, None) => Err(Error::Parse("give --type or --file".into()).into()),
        }
    }

    fn building(&self, caps: &Caps) -> Result<(Loaded, BuildingSet), CliError> {
        let l = self.load()?;
        let f = minimal_building_set(&l.arr, l.group.as_ref(), caps)?;
        Ok((l, f))
    }
}

fn label_fn<'a>(l: &'a Loaded, f: &'a BuildingSet) -> impl Fn(usize) -> String + 'a {
    move |p| {
        l.group
            .as_ref()
            .and_then(|g| codec_label(g.cartan().family, f.element(p)))
            .unwrap_or_else(|| format!("F{p}"))
    }
}

#[derive(Subcommand)]
enum ArrCommand {
    /// Reflection arrangement of a type, as JSON.
    Build(TypeArgs),
    /// Load, canonicalize and print an arrangement file.
    Load {
        file: PathBuf,
        #[arg(long)]
        essentialize: bool,
    },
    /// Summary of an arrangement.
    Info(Source),
}

#[derive(Subcommand)]
enum BuildingCommand {
    /// Elements of ℱ with their bases.
    List {
        #[command(flatten)]
        source: Source,
        /// Show S_n / D_n labels.
        #[arg(long)]
        codec: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum NestedCommand {
    /// Number of nested sets of each size.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List the nested sets.
    Enumerate {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum StrataCommand {
    /// The strata poset as Graphviz or JSON.
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        format: Format,
    },
}

#[derive(Args)]
struct StabArgs {
    #[command(flatten)]
    group: TypeArgs,
    /// Point JSON: `{"x": [...], "lines": [...]}`.
    #[arg(long)]
    point: PathBuf,
}

#[derive(Subcommand)]
enum GarsideCommand {
    /// Left-greedy normal form of a word.
    Nf {
        #[command(flatten)]
        group: TypeArgs,
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Whether two words are equal in B(W).
    Equal {
        #[command(flatten)]
        group: TypeArgs,
        u: String,
        v: String,
    },
    /// Generators of the centers of B(W) and P(W).
    Center {
        #[command(flatten)]
        group: TypeArgs,
        #[arg(long)]
        json: bool,
    },
    /// z_A and ζ_A for a standard parabolic.
    Inertia {
        #[command(flatten)]
        group: TypeArgs,
        /// Generators, e.g. `1,2` or `s1,s1'`.
        #[arg(long)]
        parabolic: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// `all` or one of exact-arith, arrangement, building-nested, wonderful,
    /// garside.
    #[arg(long, default_value = "all")]
    scope: String,
    #[arg(long)]
    json: bool,
}

enum CliError {
    Core(Error),
    Usage(String),
    VerificationFailed,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = match config::load_caps(cli.config.as_deref(), &cli.caps) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut out = String::new();
    let result = run(cli.command, &caps, &mut out);
    // a closed pipe is not an error
    let _ = io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerificationFailed) => ExitCode::from(1),
        Err(CliError::Core(e @ Error::CapExceeded { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, caps: &Caps, out: &mut String) -> Result<(), CliError> {
    match command {
        Command::Arr(c) => arr(c, out),
        Command::Building(BuildingCommand::List { source, codec, json }) => {
            building_list(&source, codec, json, caps, out)
        }
        Command::Nested(c) => nested(c, caps, out),
        Command::Strata(StrataCommand::Export { source, format }) => {
            let (l, f) = source.building(caps)?;
            let s = stratification(&f, caps)?;
            let label = label_fn(&l, &f);
            match format {
                Format::Dot => out.push_str(&s.to_dot(label)),
                Format::Json => outln!(out, "{}", pretty(&s.to_json(label))),
            }
            Ok(())
        }
        Command::Stab(a) => stab(&a, caps, out),
        Command::Garside(c) => garside(c, caps, out),
        Command::Verify(a) => {
            let scope: Scope = a.scope.parse()?;
            let suite = run_verify(scope, caps);
            if a.json {
                outln!(out, "{}", pretty(&suite.to_json()));
            } else {
                out.push_str(&suite.to_table());
            }
            if suite.all_pass() {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
    }
}

fn arr(c: ArrCommand, out: &mut String) -> Result<(), CliError> {
    match c {
        ArrCommand::Build(t) => {
            let c = t.cartan()?;
            let (a, _) = build_reflection_arrangement(c.family, c.rank)?;
            outln!(out, "{}", serde_json::to_string_pretty(&a.to_json()).unwrap());
        }
        ArrCommand::Load { file, essentialize } => {
            let a = load_arrangement(&read(&file)?, essentialize)?;
            outln!(out, "{}", serde_json::to_string_pretty(&a.to_json()).unwrap());
        }
        ArrCommand::Info(source) => {
            let l = source.load()?;
            let a = &l.arr;
            outln!(out, "ambient dimension  {}", a.ambient_dim());
            outln!(out, "dimension          {}", a.dim());
            outln!(out, "rank               {}", a.rank());
            outln!(out, "hyperplanes        {}", a.hyperplanes().len());
            outln!(out, "essential          {}", a.is_essential());
            if let Some(g) = &l.group {
                let degrees: Vec<String> = g.degrees().iter().map(u32::to_string).collect();
                outln!(out, "type               {}", g.cartan());
                outln!(out, "degrees            {}", degrees.join(" "));
                outln!(out, "|W|                {}", g.group_order());
                outln!(out, "Coxeter number     {}", g.cartan().coxeter_number());
                outln!(out, "generators         {}", g.labels().join(" "));
            }
        }
    }
    Ok(())
}

fn building_list(source: &Source, codec: bool, json: bool, caps: &Caps, out: &mut String) -> Result<(), CliError> {
    let (l, f) = source.building(caps)?;
    let family = l.group.as_ref().map(|g| g.cartan().family);
    let label = |p: usize| {
        if codec {
            family.and_then(|fam| codec_label(fam, f.element(p)))
        } else {
            None
        }
    };
    if json {
        let items: Vec<serde_json::Value> = (0..f.len())
            .map(|p| {
                let mut v = json!({
                    "index": p,
                    "dim": f.dim(p),
                    "basis": f.element(p).to_strings(),
                });
                if let Some(s) = label(p) {
                    v["label"] = json!(s);
                }
                v
            })
            .collect();
        outln!(out, "{}", pretty(&json!({ "size": f.len(), "elements": items })));
        return Ok(());
    }
    outln!(out, "|ℱ| = {}", f.len());
    for p in 0..f.len() {
        let basis: Vec<String> = f
            .element(p)
            .to_strings()
            .iter()
            .map(|r| format!("({})", r.join(", ")))
            .collect();
        match label(p) {
            Some(s) => outln!(out, "{p:>4}  dim {}  {s:<12}  {}", f.dim(p), basis.join(" ")),
            None => outln!(out, "{p:>4}  dim {}  {}", f.dim(p), basis.join(" ")),
        }
    }
    Ok(())
}

fn nested(c: NestedCommand, caps: &Caps, out: &mut String) -> Result<(), CliError> {
    match c {
        NestedCommand::Count { source, max_size, json } => {
            let (_, f) = source.building(caps)?;
            let counts = f.count_nested_sets(max_size, caps)?;
            let total: u64 = counts.iter().sum();
            if json {
                outln!(out, "{}", pretty(&json!({ "by_size": counts, "total": total })));
            } else {
                for (k, n) in counts.iter().enumerate() {
                    outln!(out, "size {k}: {n}");
                }
                outln!(out, "total: {total}");
            }
        }
        NestedCommand::Enumerate { source, max_size, json } => {
            let (l, f) = source.building(caps)?;
            let sets = f.enumerate_nested_sets(max_size, caps)?;
            let label = label_fn(&l, &f);
            if json {
                let items: Vec<serde_json::Value> = sets
                    .iter()
                    .map(|s| {
                        json!({
                            "members": s.members,
                            "labels": s.members.iter().map(|&p| label(p)).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                outln!(out, "{}", pretty(&json!(items)));
            } else {
                for s in &sets {
                    let names: Vec<String> = s.members.iter().map(|&p| label(p)).collect();
                    outln!(out, "{{{}}}", names.join(", "));
                }
            }
        }
    }
    Ok(())
}

fn stab(a: &StabArgs, caps: &Caps, out: &mut String) -> Result<(), CliError> {
    let g = a.group.group()?;
    let input: PointInput = serde_json::from_str(&read(&a.point)?)
        .map_err(|e| Error::Parse(format!("point: {e}")))?;
    let x = input
        .x
        .iter()
        .map(|s| inertia::arith::parse_rational(s))
        .collect::<Result<Vec<_>, _>>()?;
    let lines = input
        .lines
        .iter()
        .map(|v| v.parse())
        .collect::<Result<Vec<_>, _>>()?;
    let f = minimal_building_set(&g.arrangement(), Some(&g), caps)?;
    let omega = normalize_point_encoding(&x, &lines, &f)?;
    let rep = stabilizer_of_point(&omega, &g, caps)?;
    let words: Vec<String> = rep
        .elements
        .iter()
        .map(|w| {
            let word: Vec<&str> = g.reduced_word(w).iter().map(|&i| g.labels()[i].as_str()).collect();
            if word.is_empty() {
                "1".to_string()
            } else {
                word.join(" ")
            }
        })
        .collect();
    let enc = omega.to_json();
    let point = PointInput {
        x: enc.x.clone(),
        lines: enc.chain.iter().map(|s| s.line.clone()).collect(),
    };
    let doc = json!({
        "point": point,
        "encoding": enc,
        "stabilizer_order": rep.order,
        "scalar": rep.is_cyclic_scalar,
        "elements": words,
    });
    outln!(out, "{}", pretty(&doc));
    Ok(())
}

fn parse_parabolic(g: &ReflectionGroup, text: &str) -> Result<Vec<usize>, Error> {
    let w = BraidWord::parse(g, text)?;
    if let Some(bad) = w.letters().iter().find(|&&l| l < 0) {
        return Err(Error::Parse(format!("parabolic generators must be positive, got {bad}")));
    }
    Ok(w.letters().iter().map(|&l| l as usize - 1).collect())
}

fn garside(c: GarsideCommand, caps: &Caps, out: &mut String) -> Result<(), CliError> {
    match c {
        GarsideCommand::Nf { group, word, json } => {
            let g = group.group()?;
            let w = BraidWord::parse(&g, &word)?;
            let nf = left_greedy_nf(&g, &w)?;
            if json {
                outln!(out, "{}", pretty(&serde_json::to_value(nf.to_json(&g)).unwrap()));
            } else {
                outln!(out, "{}", nf.describe(&g));
                outln!(out, "{}", nf.to_word(&g).to_string_with(&g));
            }
        }
        GarsideCommand::Equal { group, u, v } => {
            let g = group.group()?;
            let u = BraidWord::parse(&g, &u)?;
            let v = BraidWord::parse(&g, &v)?;
            outln!(out, "{}", words_equal(&g, &u, &v)?);
        }
        GarsideCommand::Center { group, json } => {
            let g = group.group()?;
            let r = center_report(&g, caps)?;
            if json {
                let doc = json!({
                    "beta": r.beta.to_string_with(&g),
                    "pi": r.pi.to_string_with(&g),
                    "z_of_w": r.z_of_w,
                    "z_brute_force": r.z_brute_force,
                    "relation_checked": r.relation_checked,
                });
                outln!(out, "{}", pretty(&doc));
            } else {
                outln!(out, "β      {}", r.beta.to_string_with(&g));
                outln!(out, "π      {}", r.pi.to_string_with(&g));
                outln!(out, "|Z(W)| {}", r.z_of_w);
                if let Some(z) = r.z_brute_force {
                    outln!(out, "|Z(W)| by enumeration {z}");
                }
                outln!(out, "β^|Z(W)| = π: {}", r.relation_checked);
            }
        }
        GarsideCommand::Inertia { group, parabolic, json } => {
            let g = group.group()?;
            let subset = parse_parabolic(&g, &parabolic)?;
            let e = inertia_element(&g, &subset)?;
            if json {
                outln!(out, "{}", pretty(&e.to_json(&g)));
            } else {
                outln!(out, "z  {}", e.z.to_string_with(&g));
                outln!(out, "ζ  {}", e.zeta.to_string_with(&g));
            }
        }
    }
    Ok(())
}
