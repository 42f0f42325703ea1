use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cellman_core::classification::{
    brute_force_enumerate, count_excess1, count_neighbourly, count_reducible_excess2,
    enumerate_excess1, enumerate_reducible_excess2, Family,
};
use cellman_core::constructions::{
    barycentric, cartesian, cross_polytope, cycle, dual, join, projective_plane_6, standard_sphere,
    tensor,
};
use cellman_core::gale::{gale_search, gale_validate, shift_point, sphere_from_diagram};
use cellman_core::io::{
    diagram_to_json, lattice_to_json, load_diagram, load_lattice, parse_multiplicities,
    write_catalog,
};
use cellman_core::symmetry::{
    decompose, inflate, is_primitive, is_proper, is_reducible, quotient, tilde_partition,
};
use cellman_core::{Error, FaceLattice, IoError, Shadow, ValidationReport};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "cellman",
    version,
    about = "Cellular pseudomanifolds with few vertices"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the lattice axioms.
    Validate { file: PathBuf },
    /// Dimension, vertex count, excess and f-vector.
    Info {
        file: PathBuf,
        #[arg(long)]
        raw: bool,
    },
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Tensor, join or cartesian product of two lattices.
    Op {
        op: Product,
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Barycentric subdivision.
    Bsd {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Transposition-symmetry classes.
    Classes { file: PathBuf },
    /// Split off standard-sphere join factors.
    Decompose {
        file: PathBuf,
        /// Where to write the irreducible part.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    Quotient {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    Inflate {
        file: PathBuf,
        /// Multiplicities as `a=2,b=1`; unnamed vertices keep multiplicity 1.
        #[arg(short, long, default_value = "")]
        mult: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Find a vertex bijection inducing a lattice isomorphism.
    Iso { a: PathBuf, b: PathBuf },
    /// Whether every pair of vertices spans an edge.
    Neighbourly { file: PathBuf },
    /// List the excess-1 or reducible excess-2 families in a dimension.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        excess: u8,
        #[arg(long)]
        dim: i32,
        #[arg(long)]
        count_only: bool,
        /// Keep only neighbourly items (excess 2).
        #[arg(long)]
        neighbourly: bool,
        /// Write the catalog and its manifest to this directory.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search over small posets, deduplicated up to isomorphism.
    Oracle {
        #[arg(long)]
        dim: i32,
        #[arg(long)]
        n: usize,
        /// Write each lattice into this directory.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build a named lattice.
    Make {
        #[command(subcommand)]
        what: Make,
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    #[command(subcommand)]
    Gale(Gale),
}

#[derive(Clone, Copy, ValueEnum)]
enum Product {
    Tensor,
    Join,
    Cartesian,
}

#[derive(Subcommand)]
enum Make {
    /// The standard sphere with d + 2 vertices.
    Sphere {
        #[arg(allow_hyphen_values = true)]
        d: i32,
    },
    Cycle {
        n: usize,
    },
    Cross {
        k: usize,
    },
    /// The six-vertex projective plane.
    Rp2,
    /// A family member such as `JoinTensor(0,0,-1)`.
    Family {
        family: String,
    },
}

#[derive(Subcommand)]
enum Gale {
    /// Check that a diagram is valid.
    Validate { file: PathBuf },
    /// The sphere encoded by a diagram.
    Sphere {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Search for a diagram of an excess-2 lattice.
    Search {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Move one point to another ray.
    Shift {
        file: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        to: u32,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Negative(String),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Failure {
        match e {
            IoError::Invalid(_) => Failure::Negative(e.to_string()),
            IoError::Lattice(inner) => inner.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::NotProper(_)
            | Error::BlockedShift { .. }
            | Error::DegenerateDiagram(_)
            | Error::InvalidDiagram(_) => Failure::Negative(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_lattice(l: &FaceLattice, out: Option<&Path>) -> Outcome {
    emit(&lattice_to_json(l), out)?;
    Ok(true)
}

fn print_json(mut value: Value) {
    if let Value::Object(map) = &mut value {
        map.insert("schema".into(), json!(1));
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("json values serialize")
    );
}

fn labelled(s: Shadow, labels: &[String]) -> Vec<String> {
    s.iter().map(|v| labels[v].clone()).collect()
}

fn f_vector_text(l: &FaceLattice) -> String {
    let f: Vec<String> = l.f_vector().iter().map(|x| x.to_string()).collect();
    format!("({})", f.join(","))
}

fn report_json(report: &ValidationReport, labels: &[String]) -> Value {
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            let witnesses: Vec<Vec<String>> =
                v.witnesses.iter().map(|w| labelled(*w, labels)).collect();
            json!({"check": v.check, "witnesses": witnesses, "detail": v.detail})
        })
        .collect();
    json!({"valid": report.verdict, "violations": violations})
}

fn print_report(report: &ValidationReport, labels: &[String], json_out: bool) -> Outcome {
    if json_out {
        print_json(report_json(report, labels));
    } else if report.verdict {
        println!("valid");
    } else {
        println!("invalid: {} violations", report.violations.len());
        for v in &report.violations {
            let w: Vec<String> = v
                .witnesses
                .iter()
                .map(|s| s.display(labels).to_string())
                .collect();
            println!("  {} {} {}", v.check, w.join(" "), v.detail);
        }
    }
    Ok(report.verdict)
}

fn verdict(name: &str, value: bool, json_out: bool) -> Outcome {
    if json_out {
        print_json(json!({ name: value }));
    } else {
        println!("{value}");
    }
    Ok(value)
}

fn run(cli: Cli) -> Outcome {
    let js = cli.json;
    match cli.command {
        Command::Validate { file } => {
            let l = load_lattice(&file, true)?;
            print_report(&l.validate(), l.labels(), js)
        }
        Command::Info { file, raw } => {
            let l = load_lattice(&file, raw)?;
            if js {
                print_json(json!({
                    "n": l.n(),
                    "dim": l.dim(),
                    "excess": l.excess(),
                    "f_vector": l.f_vector(),
                    "simplicial": l.is_simplicial(),
                    "neighbourly": l.is_neighbourly(),
                }));
            } else {
                println!(
                    "dim={} n={} excess={} f={}",
                    l.dim(),
                    l.n(),
                    l.excess(),
                    f_vector_text(&l)
                );
            }
            Ok(true)
        }
        Command::Dual { file, out } => {
            emit_lattice(&dual(&load_lattice(&file, false)?)?, out.as_deref())
        }
        Command::Op { op, a, b, out } => {
            let (a, b) = (load_lattice(&a, false)?, load_lattice(&b, false)?);
            let l = match op {
                Product::Tensor => tensor(&a, &b)?,
                Product::Join => join(&a, &b)?,
                Product::Cartesian => cartesian(&a, &b)?,
            };
            emit_lattice(&l, out.as_deref())
        }
        Command::Bsd { file, out } => {
            emit_lattice(&barycentric(&load_lattice(&file, false)?)?, out.as_deref())
        }
        Command::Classes { file } => {
            let l = load_lattice(&file, false)?;
            let p = tilde_partition(&l);
            if js {
                let classes: Vec<Vec<String>> =
                    p.classes.iter().map(|c| labelled(*c, l.labels())).collect();
                print_json(json!({
                    "classes": classes,
                    "proper": is_proper(&l),
                    "primitive": is_primitive(&l),
                    "reducible": is_reducible(&l),
                }));
            } else {
                println!("{}", p.display(l.labels()));
            }
            Ok(true)
        }
        Command::Decompose { file, out } => {
            let l = load_lattice(&file, false)?;
            let d = decompose(&l)?;
            if let Some(path) = &out {
                emit(&lattice_to_json(&d.irreducible_part), Some(path))?;
            }
            let spheres: Vec<Vec<String>> = d
                .sphere_classes
                .iter()
                .map(|c| labelled(*c, l.labels()))
                .collect();
            if js {
                let part = &d.irreducible_part;
                print_json(json!({
                    "spheres": spheres,
                    "irreducible": {"n": part.n(), "dim": part.dim(), "f_vector": part.f_vector()},
                }));
            } else {
                for s in &d.sphere_classes {
                    println!("sphere {}", s.display(l.labels()));
                }
                let part = &d.irreducible_part;
                println!(
                    "irreducible dim={} n={} f={}",
                    part.dim(),
                    part.n(),
                    f_vector_text(part)
                );
            }
            Ok(true)
        }
        Command::Quotient { file, out } => {
            emit_lattice(&quotient(&load_lattice(&file, false)?)?, out.as_deref())
        }
        Command::Inflate { file, mult, out } => {
            let l = load_lattice(&file, false)?;
            let m = parse_multiplicities(&mult, l.labels())?;
            emit_lattice(&inflate(&l, &m)?, out.as_deref())
        }
        Command::Iso { a, b } => {
            let (a, b) = (load_lattice(&a, false)?, load_lattice(&b, false)?);
            let map = a.isomorphism(&b);
            let pairs: Option<Vec<(String, String)>> = map.as_ref().map(|m| {
                m.iter()
                    .enumerate()
                    .map(|(i, &j)| (a.labels()[i].clone(), b.labels()[j].clone()))
                    .collect()
            });
            if js {
                let mapping = pairs.as_ref().map(|p| {
                    p.iter()
                        .map(|(x, y)| (x.clone(), json!(y)))
                        .collect::<serde_json::Map<_, _>>()
                });
                print_json(json!({"isomorphic": map.is_some(), "mapping": mapping}));
            } else {
                match &pairs {
                    Some(p) => {
                        for (x, y) in p {
                            println!("{x} -> {y}");
                        }
                    }
                    None => println!("not isomorphic"),
                }
            }
            Ok(map.is_some())
        }
        Command::Neighbourly { file } => verdict(
            "neighbourly",
            load_lattice(&file, false)?.is_neighbourly(),
            js,
        ),
        Command::Enumerate {
            excess,
            dim,
            count_only,
            neighbourly,
            out,
        } => {
            if excess == 1 && neighbourly {
                return Err(Failure::Usage("--neighbourly applies to --excess 2".into()));
            }
            if count_only && out.is_none() {
                let count = match (excess, neighbourly) {
                    (1, _) if dim >= 1 => count_excess1(dim as i64),
                    (2, false) if dim >= 2 => count_reducible_excess2(dim as i64),
                    (2, true) if dim >= 2 => count_neighbourly(dim as i64),
                    _ => {
                        return Err(Failure::Usage(format!(
                            "no excess-{excess} families in dimension {dim}"
                        )))
                    }
                };
                if js {
                    print_json(json!({"excess": excess, "dim": dim, "count": count}));
                } else {
                    println!("{count}");
                }
                return Ok(true);
            }
            let items = match excess {
                1 => enumerate_excess1(dim)?,
                _ => enumerate_reducible_excess2(dim, neighbourly)?,
            };
            if let Some(dir) = &out {
                write_catalog(&items, dir)?;
            }
            if count_only {
                println!("{}", items.len());
            } else if js {
                let list: Vec<Value> = items
                    .iter()
                    .map(|it| json!({"family": it.family, "n": it.lattice.n(), "f_vector": it.lattice.f_vector()}))
                    .collect();
                print_json(json!({"excess": excess, "dim": dim, "items": list}));
            } else {
                for it in &items {
                    println!(
                        "{} n={} f={}",
                        it.family,
                        it.lattice.n(),
                        f_vector_text(&it.lattice)
                    );
                }
            }
            Ok(true)
        }
        Command::Oracle { dim, n, out } => {
            let found = brute_force_enumerate(dim, n)?;
            if let Some(dir) = &out {
                std::fs::create_dir_all(dir)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
                for (i, l) in found.iter().enumerate() {
                    emit(
                        &lattice_to_json(l),
                        Some(&dir.join(format!("oracle_{}.json", i + 1))),
                    )?;
                }
            }
            if js {
                let list: Vec<Value> = found
                    .iter()
                    .map(|l| json!({"f_vector": l.f_vector()}))
                    .collect();
                print_json(json!({"dim": dim, "n": n, "count": found.len(), "items": list}));
            } else {
                println!("{}", found.len());
                for l in &found {
                    println!("f={}", f_vector_text(l));
                }
            }
            Ok(true)
        }
        Command::Make { what, out } => {
            let l = match what {
                Make::Sphere { d } => standard_sphere(d)?,
                Make::Cycle { n } => cycle(n)?,
                Make::Cross { k } => cross_polytope(k)?,
                Make::Rp2 => projective_plane_6(),
                Make::Family { family } => family.parse::<Family>()?.build()?,
            };
            emit_lattice(&l, out.as_deref())
        }
        Command::Gale(g) => run_gale(g, js),
    }
}

fn run_gale(command: Gale, js: bool) -> Outcome {
    match command {
        Gale::Validate { file } => {
            let g = load_diagram(&file)?;
            print_report(&gale_validate(&g), g.labels(), js)
        }
        Gale::Sphere { file, out } => {
            emit_lattice(&sphere_from_diagram(&load_diagram(&file)?)?, out.as_deref())
        }
        Gale::Search { file, out } => {
            let l = load_lattice(&file, false)?;
            match gale_search(&l)? {
                Some(g) => {
                    emit(&diagram_to_json(&g), out.as_deref())?;
                    Ok(true)
                }
                None => {
                    if js {
                        print_json(json!({"found": false}));
                    } else {
                        println!("no diagram");
                    }
                    Ok(false)
                }
            }
        }
        Gale::Shift {
            file,
            vertex,
            to,
            out,
        } => {
            let g = load_diagram(&file)?;
            let v = g
                .labels()
                .iter()
                .position(|l| *l == vertex)
                .ok_or_else(|| Failure::Usage(format!("unknown vertex {vertex:?}")))?;
            emit(&diagram_to_json(&shift_point(&g, v, to)?), out.as_deref())?;
            Ok(true)
        }
    }
}

fn configure_threads() {
    if let Some(k) = std::env::var("CELLMAN_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        if k > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Negative(msg)) => {
            eprintln!("cellman: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("cellman: {msg}");
            ExitCode::from(2)
        }
    }
}
