use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bck_core::closure::{derived_ideal, derived_subalgebra, ideal_closure, ideal_violation};
use bck_core::enumerate::wronski::{Wronski, WronskiElement};
use bck_core::enumerate::{chain_algebra, sweep, MAX_ENUMERATION_ORDER};
use bck_core::format::{parse_bck, parse_element_set, write_bck, CatalogRecord, MAX_FILE_ORDER};
use bck_core::quotient::{direct_product, is_isomorphic, quotient};
use bck_core::series::{
    derived_series, lower_central_series, nilpotence_class, pseudo_center, solvability_class,
    upper_central_series,
};
use bck_core::{validate, BckError, FiniteBck};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bck", version, about = "Compute with finite BCK-algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms; exit 0 iff the table is a BCK-algebra.
    Validate { file: PathBuf },
    /// Print the main invariants of an algebra.
    Info { file: PathBuf },
    /// Print derived, lower central and upper central series.
    Series {
        file: PathBuf,
        #[arg(value_enum)]
        kind: Option<SeriesArg>,
    },
    /// Quotient by an ideal given as `0,1,2` or `derived`; 0 is always included.
    Quotient {
        file: PathBuf,
        ideal: String,
        /// Use the ideal generated by the given elements.
        #[arg(long)]
        close: bool,
    },
    /// Direct product; pair (a,b) becomes a*|B|+b.
    Product { left: PathBuf, right: PathBuf },
    /// Look for an isomorphism; exit 1 if there is none.
    Iso { left: PathBuf, right: PathBuf },
    /// The chain 0 < 1 < .. < n.
    Chain { n: usize },
    /// Pseudo-commutator in the infinite algebra U, e.g. `a 2 b 5` or `a2 b5`.
    #[command(name = "wronski-comm")]
    WronskiComm {
        #[arg(num_args = 2..=4, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// All algebras of order up to n, one per isomorphism class.
    Enumerate {
        n: usize,
        /// Write catalog lines here instead of standard output.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    Derived,
    Lower,
    Upper,
}

/// Failure classes, one per exit code.
enum Failure {
    /// Domain-level negative answer; exit 1.
    Negative(String),
    /// Unreadable input or bad arguments; exit 2.
    Input(String),
    /// Refused as too large; exit 3.
    Refused(String),
}

impl From<BckError> for Failure {
    fn from(e: BckError) -> Self {
        let msg = e.to_string();
        match e {
            BckError::Axioms(_)
            | BckError::NotAnIdeal { .. }
            | BckError::NotAHomomorphism { .. }
            | BckError::NotCommutative
            | BckError::NotNilpotent { .. } => Failure::Negative(msg),
            BckError::TooLarge(_) | BckError::IndexCap { .. } => Failure::Refused(msg),
            BckError::Malformed(_)
            | BckError::EmptyCommutator
            | BckError::OutOfRange { .. }
            | BckError::UniverseMismatch { .. } => Failure::Input(msg),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read_table(path: &Path) -> Result<(Vec<String>, Vec<Vec<usize>>), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let file = parse_bck(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok((file.labels, file.rows))
}

fn load_labeled(path: &Path) -> Result<(Vec<String>, FiniteBck), Failure> {
    let (labels, rows) = read_table(path)?;
    let a = FiniteBck::new(&rows).map_err(|e| match e {
        BckError::Axioms(report) => Failure::Negative(format!("{}: {report}", path.display())),
        other => other.into(),
    })?;
    Ok((labels, a))
}

fn load(path: &Path) -> Result<FiniteBck, Failure> {
    load_labeled(path).map(|(_, a)| a)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_validate(path: &Path) -> Outcome {
    let (_, rows) = read_table(path)?;
    let report = validate(&rows)?;
    if report.is_valid() {
        Ok(format!("{report}\n"))
    } else {
        Err(Failure::Negative(report.to_string()))
    }
}

fn cmd_info(path: &Path) -> Outcome {
    let (labels, a) = load_labeled(path)?;
    let mut out = String::new();
    let numeric = labels.iter().enumerate().all(|(i, l)| *l == i.to_string());
    writeln!(out, "order = {}", a.order()).unwrap();
    if !numeric {
        let named: Vec<String> = labels.iter().enumerate().map(|(i, l)| format!("{i}={l}")).collect();
        writeln!(out, "labels = {}", named.join(" ")).unwrap();
    }
    let upper = upper_central_series(&a);
    writeln!(out, "commutative = {}", yes_no(a.is_commutative())).unwrap();
    writeln!(out, "A' = {}", derived_subalgebra(&a)).unwrap();
    writeln!(out, "DI = {}", derived_ideal(&a)).unwrap();
    writeln!(out, "Z1 = {}", upper.term(1)).unwrap();
    writeln!(out, "pseudo-center = {}", pseudo_center(&a)).unwrap();
    writeln!(out, "commuting center = {}", a.commuting_center()).unwrap();
    writeln!(out, "maximal = {}", a.maximal_elements()).unwrap();
    writeln!(out, "nilpotence class = {}", nilpotence_class(&a)).unwrap();
    match solvability_class(&a) {
        Some(s) => writeln!(out, "solvability class = {s}").unwrap(),
        None => writeln!(out, "solvability class = none").unwrap(),
    }
    writeln!(out, "lower central series:\n{}", lower_central_series(&a)).unwrap();
    writeln!(out, "upper central series:\n{upper}").unwrap();
    Ok(out)
}

fn cmd_series(path: &Path, kind: Option<SeriesArg>) -> Outcome {
    let a = load(path)?;
    let reports = match kind {
        Some(SeriesArg::Derived) => vec![derived_series(&a)],
        Some(SeriesArg::Lower) => vec![lower_central_series(&a)],
        Some(SeriesArg::Upper) => vec![upper_central_series(&a)],
        None => vec![
            derived_series(&a),
            lower_central_series(&a),
            upper_central_series(&a),
        ],
    };
    let mut out = String::new();
    for r in reports {
        writeln!(out, "# {}\n{r}", r.kind.name()).unwrap();
    }
    Ok(out)
}

fn cmd_quotient(path: &Path, spec: &str, close: bool) -> Outcome {
    let a = load(path)?;
    let mut ideal = if spec.trim() == "derived" {
        derived_ideal(&a)
    } else {
        let mut s = parse_element_set(spec, a.order())
            .map_err(|e| Failure::Input(format!("ideal: {e}")))?;
        s.insert(0);
        s
    };
    if close {
        ideal = ideal_closure(&a, &ideal);
    } else if let Some(reason) = ideal_violation(&a, &ideal) {
        return Err(Failure::Negative(format!(
            "{ideal} is not an ideal: {reason}\n\
             rerun with --close to use the generated ideal {}",
            ideal_closure(&a, &ideal)
        )));
    }
    let q = quotient(&a, &ideal)?;
    let mut out = format!("# quotient by {}\n", q.ideal);
    for (c, &r) in q.representative.iter().enumerate() {
        writeln!(out, "# class {c}: rep {r}, members {}", q.class(c)).unwrap();
    }
    out.push_str(&write_bck(&q.algebra));
    Ok(out)
}

fn cmd_product(left: &Path, right: &Path) -> Outcome {
    let a = load(left)?;
    let b = load(right)?;
    let p = direct_product(&a, &b);
    Ok(format!(
        "# ({},{}) product, pair (x,y) is x*{}+y\n{}",
        a.order(),
        b.order(),
        b.order(),
        write_bck(&p)
    ))
}

fn cmd_iso(left: &Path, right: &Path) -> Outcome {
    let a = load(left)?;
    let b = load(right)?;
    match is_isomorphic(&a, &b) {
        Some(f) => {
            let pairs: Vec<String> = a.elements().map(|x| format!("{x}->{}", f.apply(x))).collect();
            Ok(format!("ISOMORPHIC\n{}\n", pairs.join(" ")))
        }
        None => Err(Failure::Negative("NOT ISOMORPHIC".into())),
    }
}

fn cmd_chain(n: usize) -> Outcome {
    if n >= MAX_FILE_ORDER {
        return Err(Failure::Refused(format!(
            "chains are limited to {} elements",
            MAX_FILE_ORDER
        )));
    }
    Ok(write_bck(&chain_algebra(n)))
}

fn cmd_wronski_comm(args: &[String]) -> Outcome {
    let tokens: Vec<String> = match args.len() {
        2 => args.to_vec(),
        4 => vec![
            format!("{}{}", args[0], args[1]),
            format!("{}{}", args[2], args[3]),
        ],
        k => return Err(Failure::Input(format!("expected 2 or 4 arguments, found {k}"))),
    };
    let parse = |s: &str| -> Result<WronskiElement, Failure> { s.parse().map_err(Failure::Input) };
    let x = parse(&tokens[0])?;
    let y = parse(&tokens[1])?;
    let v = Wronski::default().commutator(x, y)?;
    Ok(format!("{v}\n"))
}

fn cmd_enumerate(n: usize, catalog: Option<&Path>, max_order: usize, jobs: Option<usize>) -> Outcome {
    if max_order > MAX_ENUMERATION_ORDER {
        return Err(Failure::Refused(format!(
            "--max-order is capped at {MAX_ENUMERATION_ORDER}"
        )));
    }
    if n > max_order {
        return Err(Failure::Refused(format!(
            "order {n} exceeds --max-order {max_order}"
        )));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = jobs {
        if k == 0 {
            return Err(Failure::Input("--jobs must be positive".into()));
        }
        builder = builder.num_threads(k);
    }
    let pool = builder
        .build()
        .map_err(|e| Failure::Refused(format!("thread pool: {e}")))?;
    let records = pool.install(|| sweep(n))?;

    let mut lines = String::new();
    for r in &records {
        lines.push_str(&CatalogRecord::from(r).to_line());
        lines.push('\n');
    }
    match catalog {
        None => Ok(lines),
        Some(path) => {
            std::fs::write(path, &lines)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let mut out = String::new();
            for order in 1..=n {
                let count = records.iter().filter(|r| r.order == order).count();
                writeln!(out, "order {order}: {count}").unwrap();
            }
            Ok(out)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Info { file } => cmd_info(&file),
        Command::Series { file, kind } => cmd_series(&file, kind),
        Command::Quotient { file, ideal, close } => cmd_quotient(&file, &ideal, close),
        Command::Product { left, right } => cmd_product(&left, &right),
        Command::Iso { left, right } => cmd_iso(&left, &right),
        Command::Chain { n } => cmd_chain(n),
        Command::WronskiComm { args } => cmd_wronski_comm(&args),
        Command::Enumerate {
            n,
            catalog,
            max_order,
            jobs,
        } => cmd_enumerate(n, catalog.as_deref(), max_order, jobs),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Negative(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Refused(msg)) => {
            eprintln!("refused: {msg}");
            ExitCode::from(3)
        }
    }
}
