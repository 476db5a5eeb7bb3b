use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxeter_cfc::combinatorics::{
    decide_logarithmic, detect_bands, is_cfc, is_cyclically_reduced, is_fc, is_full_support,
    is_torsion_free, Direction, DEFAULT_CLASS_CAP,
};
use coxeter_cfc::enumeration::{enumerate_cfc, enumerate_fc, family_count, table_families, Kind, Mode};
use coxeter_cfc::orientations::{
    acyclic_orientations, conjugacy_classes_of_coxeter_elements, kappa_partition,
    orientation_to_coxeter, DEFAULT_GROUP_CAP,
};
use coxeter_cfc::tutte::{tutte_polynomial, Graph};
use coxeter_cfc::{CoxeterSystem, Error, RootEngine, Word};

/// Exact computations in Coxeter groups: reduced words, FC/CFC elements, bands, orientations.
#[derive(Parser)]
#[command(name = "coxcfc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Report on one word: reducedness, FC, CFC, support, bands, logarithmic verdict.
    Check {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        word: WordArgs,
        /// Bound for the fallback power-length check.
        #[arg(long, default_value_t = 6)]
        k: usize,
        #[command(flatten)]
        caps: Caps,
    },
    /// Print the reduced form of a word.
    Reduce {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        word: WordArgs,
    },
    /// Lengths of the powers w, w^2, ..., w^k.
    Power {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value_t = 6)]
        k: usize,
    },
    /// Enumerate FC or CFC elements.
    Enumerate {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value_t = KindArg::Cfc)]
        kind: KindArg,
        /// Only elements of at most this length (required for infinite sets).
        #[arg(long)]
        max_length: Option<usize>,
        /// Print every element.
        #[arg(long)]
        list: bool,
    },
    /// Counts of FC and CFC elements in the CFC-finite families.
    Table {
        #[arg(long, value_delimiter = ',', default_value = "A,B,D,E,F,H")]
        families: Vec<String>,
        #[arg(long, default_value_t = 7)]
        max_rank: usize,
        /// Also count FC elements above rank 7.
        #[arg(long)]
        long: bool,
    },
    /// Acyclic orientations of the Coxeter graph with their Coxeter words.
    Orientations {
        #[command(flatten)]
        system: SystemArgs,
    },
    /// Tutte polynomial of the Coxeter graph.
    Tutte {
        #[command(flatten)]
        system: SystemArgs,
    },
    /// Classes of Coxeter elements under source-to-sink flips.
    Kappa {
        #[command(flatten)]
        system: SystemArgs,
    },
    /// Conjugacy classes of Coxeter elements (finite groups).
    Conjugacy {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        caps: Caps,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SystemArgs {
    /// Named system, e.g. "A 3", "H4", "I2 5", "affC 4", "affE6".
    #[arg(long)]
    system: Option<String>,
    /// Graph file: `rank N` then `bond i j m` lines.
    #[arg(long)]
    graph_file: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct WordArgs {
    /// Whitespace-separated generator labels.
    #[arg(long, allow_hyphen_values = true)]
    word: Option<String>,
    /// File holding one word; `#` starts a comment line.
    #[arg(long)]
    word_file: Option<PathBuf>,
}

#[derive(Args)]
struct Caps {
    /// Cap on commutation and braid closures.
    #[arg(long, default_value_t = DEFAULT_CLASS_CAP)]
    cap_class: usize,
    /// Cap on group enumeration.
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    cap_group: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Fc,
    Cfc,
}

enum Failure {
    Input(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_cap_exceeded() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Out = Result<String, Failure>;

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

impl SystemArgs {
    fn load(&self) -> Result<(CoxeterSystem, String), Failure> {
        match (&self.system, &self.graph_file) {
            (Some(spec), _) => {
                let sys = CoxeterSystem::named(spec)?;
                Ok((sys, spec.clone()))
            }
            (_, Some(path)) => {
                let sys = CoxeterSystem::parse_graph(&read_file(path)?)?;
                Ok((sys, path.display().to_string()))
            }
            _ => unreachable!("clap enforces one system source"),
        }
    }
}

impl WordArgs {
    fn load(&self, sys: &CoxeterSystem) -> Result<Word, Failure> {
        let text = match (&self.word, &self.word_file) {
            (Some(w), _) => w.clone(),
            (_, Some(path)) => read_file(path)?
                .lines()
                .filter(|l| !l.trim_start().starts_with('#'))
                .collect::<Vec<_>>()
                .join(" "),
            _ => unreachable!("clap enforces one word source"),
        };
        let text = text.trim();
        if text == "e" {
            return Ok(Word::empty());
        }
        Ok(sys.parse_word(text)?)
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Key/value report, aligned in text mode or `key,value` in CSV mode.
fn kv(format: Format, rows: &[(&str, String)]) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("key,value\n");
            for (k, v) in rows {
                let _ = writeln!(out, "{k},{}", csv_field(v));
            }
        }
        Format::Text => {
            let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in rows {
                let _ = writeln!(out, "{k:width$}  {v}");
            }
        }
    }
    out
}

fn csv_field(v: &str) -> String {
    if v.contains([',', '"']) {
        format!("\"{}\"", v.replace('"', "\"\""))
    } else {
        v.to_string()
    }
}

fn check(sys: &CoxeterSystem, name: &str, w: &Word, k: usize, caps: &Caps, format: Format) -> Out {
    let eng = RootEngine::new(sys);
    let reduced = eng.reduce(w);
    let mut rows = vec![
        ("system", name.to_string()),
        ("word", sys.format_word(w)),
        ("length", reduced.len().to_string()),
        ("reduced", yes(reduced == *w).to_string()),
    ];
    if reduced != *w {
        rows.push(("reduced form", sys.format_word(&reduced)));
    }
    let x = &reduced;
    let cfc = is_cfc(&eng, x);
    rows.push(("FC", yes(is_fc(&eng, x)).to_string()));
    rows.push(("CFC", yes(cfc).to_string()));
    rows.push(("cyclically reduced", yes(cfc || is_cyclically_reduced(&eng, x, caps.cap_class)?).to_string()));
    let support: Vec<&str> = x.support().into_iter().map(|s| sys.label(s)).collect();
    let full = if is_full_support(sys, x) { " (full)" } else { "" };
    rows.push(("support", format!("{}{full}", support.join(" "))));
    rows.push(("torsion-free", yes(is_torsion_free(sys, x)).to_string()));
    let bands = if cfc {
        let found = detect_bands(&eng, x, caps.cap_class)?;
        if found.is_empty() {
            "none".to_string()
        } else {
            found
                .iter()
                .map(|b| {
                    let (a, c) = match b.direction {
                        Direction::St => (b.s, b.t),
                        Direction::Ts => (b.t, b.s),
                    };
                    let size = if b.is_large { "large" } else { "small" };
                    format!("{}{} {size} (m={})", sys.label(a), sys.label(c), b.strength)
                })
                .collect::<Vec<_>>()
                .join("; ")
        }
    } else {
        "n/a (not CFC)".to_string()
    };
    rows.push(("bands", bands));
    let log = if x.is_empty() {
        "n/a (identity)".to_string()
    } else {
        decide_logarithmic(&eng, x, k, caps.cap_class)?.to_string()
    };
    rows.push(("logarithmic", log));
    Ok(kv(format, &rows))
}

fn power(sys: &CoxeterSystem, w: &Word, k: usize, format: Format) -> Out {
    let eng = RootEngine::new(sys);
    let l = eng.length(w);
    let mut out = String::new();
    let mut first_drop = None;
    if format == Format::Csv {
        out.push_str("k,length,k_times_length\n");
    } else {
        let _ = writeln!(out, "{:>3}  {:>8}  {:>8}", "k", "l(w^k)", "k*l(w)");
    }
    for j in 1..=k {
        let lj = eng.power_length(w, j);
        if lj != j * l && first_drop.is_none() {
            first_drop = Some(j);
        }
        match format {
            Format::Csv => {
                let _ = writeln!(out, "{j},{lj},{}", j * l);
            }
            Format::Text => {
                let _ = writeln!(out, "{j:>3}  {lj:>8}  {:>8}", j * l);
            }
        }
    }
    if format == Format::Text {
        match first_drop {
            Some(j) => {
                let _ = writeln!(out, "non-logarithmic: length drops at k={j}");
            }
            None => {
                let _ = writeln!(out, "no length drop up to k={k}");
            }
        }
    }
    Ok(out)
}

fn enumerate(sys: &CoxeterSystem, name: &str, kind: KindArg, max_length: Option<usize>, list: bool, format: Format) -> Out {
    let r = match kind {
        KindArg::Cfc => {
            let mode = max_length.map_or(Mode::Exhaustive, Mode::UpToLength);
            enumerate_cfc(sys, mode, list)?
        }
        KindArg::Fc => enumerate_fc(sys, max_length, list)?,
    };
    let kind = match r.kind {
        Kind::Fc => "FC",
        Kind::Cfc => "CFC",
    };
    let mut rows = vec![
        ("system", name.to_string()),
        ("kind", kind.to_string()),
        ("count", r.count.to_string()),
        ("exhaustive", yes(r.exhaustive).to_string()),
    ];
    if let Some(cap) = r.length_cap {
        rows.push(("length cap", cap.to_string()));
    }
    let mut out = kv(format, &rows);
    if let Some(elements) = r.elements {
        for w in &elements {
            let _ = writeln!(out, "{}", sys.format_word(w));
        }
    }
    Ok(out)
}

fn table(families: &[String], max_rank: usize, long: bool, format: Format) -> Out {
    let mut fams = Vec::new();
    for f in families {
        let c = match f.trim() {
            s if s.len() == 1 => s.chars().next().unwrap().to_ascii_uppercase(),
            s => return Err(Failure::Input(format!("unknown family `{s}`"))),
        };
        if !table_families().contains(&c) {
            return Err(Failure::Input(format!("unknown family `{c}`")));
        }
        fams.push(c);
    }
    let fc_limit = if long { max_rank } else { max_rank.min(7) };
    let mut rows: Vec<(char, &str, Vec<(usize, usize)>)> = Vec::new();
    for &f in &fams {
        let lo = if f == 'E' { 3 } else { 1 };
        let fc = (lo..=fc_limit).map(|n| Ok((n, family_count(f, n, Kind::Fc)?))).collect::<Result<Vec<_>, Error>>()?;
        let cfc = (lo..=max_rank).map(|n| Ok((n, family_count(f, n, Kind::Cfc)?))).collect::<Result<Vec<_>, Error>>()?;
        rows.push((f, "FC", fc));
        rows.push((f, "CFC", cfc));
    }
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("family,rank,kind,count\n");
            for (f, kind, cells) in &rows {
                for (n, c) in cells {
                    let _ = writeln!(out, "{f},{n},{kind},{c}");
                }
            }
        }
        Format::Text => {
            let width = rows
                .iter()
                .flat_map(|r| r.2.iter().map(|c| c.1.to_string().len()))
                .max()
                .unwrap_or(1)
                .max(3);
            let _ = write!(out, "{:<10}", "");
            for n in 1..=max_rank {
                let _ = write!(out, " {:>width$}", format!("n={n}"));
            }
            out.push('\n');
            for (f, kind, cells) in &rows {
                let _ = write!(out, "{:<10}", format!("{kind} {f}"));
                for n in 1..=max_rank {
                    let cell = cells.iter().find(|c| c.0 == n).map_or("-".to_string(), |c| c.1.to_string());
                    let _ = write!(out, " {cell:>width$}");
                }
                out.push('\n');
            }
            if fc_limit < max_rank {
                let _ = writeln!(out, "(FC ranks above 7 need --long)");
            }
        }
    }
    Ok(out)
}

fn orientations(sys: &CoxeterSystem, format: Format) -> Out {
    let g = Graph::of_system(sys);
    let all = acyclic_orientations(&g);
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("index,arcs,coxeter_word\n");
    }
    for (k, o) in all.iter().enumerate() {
        let arcs = o
            .arcs()
            .iter()
            .map(|&(a, b)| format!("{}>{}", sys.label(a), sys.label(b)))
            .collect::<Vec<_>>()
            .join(" ");
        let word = sys.format_word(&orientation_to_coxeter(o)?);
        match format {
            Format::Csv => {
                let _ = writeln!(out, "{k},{arcs},{word}");
            }
            Format::Text => {
                let _ = writeln!(out, "{k:>4}  {word:<width$}  {arcs}", width = 2 * sys.rank());
            }
        }
    }
    if format == Format::Text {
        let _ = writeln!(out, "{} acyclic orientations", all.len());
    }
    Ok(out)
}

fn tutte(sys: &CoxeterSystem, format: Format) -> Out {
    let t = tutte_polynomial(&Graph::of_system(sys));
    let rows = [
        ("T(x,y)", t.to_string()),
        ("T(1,1)", t.eval(1, 1).to_string()),
        ("T(2,0) acyclic orientations", t.eval(2, 0).to_string()),
        ("T(1,0) kappa classes", t.eval(1, 0).to_string()),
    ];
    Ok(kv(format, &rows))
}

fn classes(sys: &CoxeterSystem, classes: &[Vec<Word>], label: &str, format: Format) -> String {
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("class,coxeter_word\n");
    }
    for (k, class) in classes.iter().enumerate() {
        let words: Vec<String> = class.iter().map(|w| sys.format_word(w)).collect();
        match format {
            Format::Csv => {
                for w in words {
                    let _ = writeln!(out, "{k},{w}");
                }
            }
            Format::Text => {
                let _ = writeln!(out, "{k:>3} ({}): {}", class.len(), words.join(", "));
            }
        }
    }
    if format == Format::Text {
        let _ = writeln!(out, "{} {label}", classes.len());
    }
    out
}

fn run(cli: Cli) -> Out {
    let format = cli.format;
    match cli.command {
        Command::Check { system, word, k, caps } => {
            let (sys, name) = system.load()?;
            let w = word.load(&sys)?;
            check(&sys, &name, &w, k, &caps, format)
        }
        Command::Reduce { system, word } => {
            let (sys, _) = system.load()?;
            let w = word.load(&sys)?;
            let r = RootEngine::new(&sys).reduce(&w);
            Ok(format!("{}\n", sys.format_word(&r)))
        }
        Command::Power { system, word, k } => {
            let (sys, _) = system.load()?;
            let w = word.load(&sys)?;
            power(&sys, &w, k, format)
        }
        Command::Enumerate { system, kind, max_length, list } => {
            let (sys, name) = system.load()?;
            enumerate(&sys, &name, kind, max_length, list, format)
        }
        Command::Table { families, max_rank, long } => table(&families, max_rank, long, format),
        Command::Orientations { system } => {
            let (sys, _) = system.load()?;
            orientations(&sys, format)
        }
        Command::Tutte { system } => {
            let (sys, _) = system.load()?;
            tutte(&sys, format)
        }
        Command::Kappa { system } => {
            let (sys, _) = system.load()?;
            let parts: Vec<Vec<Word>> = kappa_partition(&Graph::of_system(&sys))
                .iter()
                .map(|c| c.iter().map(orientation_to_coxeter).collect::<Result<_, _>>())
                .collect::<Result<_, _>>()?;
            Ok(classes(&sys, &parts, "kappa classes", format))
        }
        Command::Conjugacy { system, caps } => {
            let (sys, _) = system.load()?;
            let parts = conjugacy_classes_of_coxeter_elements(&sys, caps.cap_group)?;
            Ok(classes(&sys, &parts, "conjugacy classes", format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
