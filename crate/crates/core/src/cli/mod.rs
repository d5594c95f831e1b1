//! The `gray2cat` command line: every command prints a JSON report on
//! stdout and exits with 0 on success, 1 on a mathematical failure, 2 on a
//! resource bound and 3 on malformed input.

pub mod document;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::homs::{build_hom, HomKind};
use crate::kernel::{catalog, Fin2Category, TwoFunctor};
use crate::ofs::{factor_2functor, is_boba, is_lff, solve_lifting, LeftLegData, LiftingSquare};
use crate::tensor::{funny_full, funny_underlying, gray_tensor, product};
use crate::theory::{
    coherence_check, factor_operations, Axiom, Discrete, DiscreteMap, FinCat, MonoidalSetup,
};
use document::{parse_json, read_text, CatRef, FunctorDocument, Resolver, SquareDocument, TwoCatDocument};

#[derive(Debug, Parser)]
#[command(name = "gray2cat", version, about = "Finite 2-categories, Gray tensors and monoidal coherence")]
pub struct Cli {
    /// Longest reduced word the funny tensor closure may produce.
    #[arg(long, global = true)]
    pub max_word_len: Option<usize>,
    /// Bound on the 1-cells or 2-cells of any constructed 2-category.
    #[arg(long, global = true)]
    pub max_cells: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load and validate a 2-category.
    Validate { file: String },
    /// The cartesian product.
    Product { a: String, b: String },
    /// The funny tensor product.
    Funny {
        a: String,
        b: String,
        /// Also build its 2-cells.
        #[arg(long)]
        full: bool,
    },
    /// The Gray tensor product, as the factorisation of K.
    Gray {
        a: String,
        b: String,
        /// Include the tensor, P and Q as documents.
        #[arg(long)]
        emit_pq: bool,
    },
    /// A hom 2-category of 2-functors.
    Hom {
        a: String,
        b: String,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Factor a 2-functor as boba followed by lff.
    Factor { file: PathBuf },
    /// Solve a lifting square with boba left leg and lff right leg.
    Lift { file: PathBuf },
    /// Check a coherence axiom of the derived Gray structure.
    Coherence {
        #[arg(long, value_enum)]
        axiom: AxiomArg,
        /// Probe tuples: names separated by `,`, tuples by `;`.
        #[arg(long)]
        probes: String,
        /// Ambient in which to run the engine.
        #[arg(long, value_enum, default_value = "2cat")]
        ambient: AmbientArg,
    },
    /// The built-in and external fixtures.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Export a 2-category.
    Export {
        /// Graphviz output: objects as nodes, 1-cells as edges.
        #[arg(long)]
        dot: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Show { name: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    Strict,
    Funny,
    Ps,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AxiomArg {
    Pentagon,
    Triangle,
    Symmetry,
    Hexagon,
    Inverses,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AmbientArg {
    #[value(name = "2cat")]
    TwoCat,
    Cat,
}

/// Output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut limits = Limits::default();
    if let Some(n) = cli.max_word_len {
        limits.max_word_len = n;
    }
    if let Some(n) = cli.max_cells {
        limits.max_cells = n;
    }
    let mut resolver = Resolver::from_env();
    let name = command_name(&cli.command);
    match execute(&cli.command, &mut resolver, &limits) {
        Ok(Report::Json(v)) => Outcome {
            code: 0,
            stdout: pretty(&v),
            stderr: String::new(),
        },
        Ok(Report::Text(t)) => Outcome {
            code: 0,
            stdout: t,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: pretty(&json!({
                "command": name,
                "error": { "kind": e.kind(), "message": e.to_string() },
            })),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Entry point for the binary.
pub fn main_exit() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

enum Report {
    Json(Value),
    Text(String),
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialise");
    s.push('\n');
    s
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Product { .. } => "product",
        Command::Funny { .. } => "funny",
        Command::Gray { .. } => "gray",
        Command::Hom { .. } => "hom",
        Command::Factor { .. } => "factor",
        Command::Lift { .. } => "lift",
        Command::Coherence { .. } => "coherence",
        Command::Catalog { .. } => "catalog",
        Command::Export { .. } => "export",
    }
}

fn counts(c: &Fin2Category) -> Value {
    let (a, b, s) = c.counts();
    json!({ "objects": a, "one_cells": b, "two_cells": s })
}

fn inline(c: &Fin2Category) -> CatRef {
    CatRef::Inline(Box::new(TwoCatDocument::from_category(c, None)))
}

fn functor_doc(f: &TwoFunctor, domain: CatRef, codomain: CatRef) -> Value {
    serde_json::to_value(FunctorDocument::from_functor(f, domain, codomain)).expect("documents serialise")
}

fn execute(cmd: &Command, r: &mut Resolver, limits: &Limits) -> Result<Report> {
    let out = match cmd {
        Command::Validate { file } => {
            let c = r.resolve(file)?;
            c.validate()?;
            json!({
                "command": "validate",
                "input": file,
                "valid": true,
                "counts": counts(&c),
                "locally_discrete": c.is_locally_discrete(),
                "locally_contractible": c.is_locally_contractible(),
            })
        }
        Command::Product { a, b } => {
            let (x, y) = (r.resolve(a)?, r.resolve(b)?);
            let p = product(&x, &y, limits)?;
            json!({ "command": "product", "inputs": [a, b], "counts": counts(&p.cat) })
        }
        Command::Funny { a, b, full } => {
            let (x, y) = (r.resolve(a)?, r.resolve(b)?);
            let u = funny_underlying(&x, &y, limits)?;
            let mut v = json!({
                "command": "funny",
                "inputs": [a, b],
                "objects": u.cat.num_objects(),
                "one_cells": u.cat.num_arrows(),
                "words": u.words().iter().map(|w| w.name(&u.factors())).collect::<Vec<_>>(),
            });
            if *full {
                let f = funny_full(&x, &y, limits)?;
                v["counts"] = counts(&f.cat);
            }
            v
        }
        Command::Gray { a, b, emit_pq } => {
            let (x, y) = (r.resolve(a)?, r.resolve(b)?);
            let g = gray_tensor(&x, &y, limits)?;
            let p = g.p.full().cloned();
            let mut v = json!({
                "command": "gray",
                "inputs": [a, b],
                "counts": counts(&g.cat),
                "q_is_lff": is_lff(&g.q),
                "p_is_boba": p.as_ref().map(is_boba),
                "q_after_p_is_k": g.p.underlying().then(&g.q.underlying())? == g.k,
            });
            if *emit_pq {
                let prod = inline(&g.product.cat);
                v["tensor"] = serde_json::to_value(TwoCatDocument::from_category(&g.cat, None)).unwrap();
                v["q"] = functor_doc(&g.q, inline(&g.cat), prod);
                if let (Some(p), Some(ff)) = (&p, &g.funny_full) {
                    v["p"] = functor_doc(p, inline(&ff.cat), inline(&g.cat));
                }
            }
            v
        }
        Command::Hom { a, b, kind } => {
            let (x, y) = (r.resolve(a)?, r.resolve(b)?);
            let k = match kind {
                KindArg::Strict => HomKind::Strict,
                KindArg::Funny => HomKind::Funny,
                KindArg::Ps => HomKind::Pseudo,
            };
            let h = build_hom(&x, &y, k, limits)?;
            json!({
                "command": "hom",
                "inputs": [a, b],
                "kind": format!("{k:?}").to_lowercase(),
                "counts": counts(&h.cat),
            })
        }
        Command::Factor { file } => {
            let doc: FunctorDocument = parse_json(&read_text(file)?)?;
            let f = doc.load(r)?;
            let fac = factor_2functor(&f, limits)?;
            let mid = || inline(&fac.middle);
            json!({
                "command": "factor",
                "middle": TwoCatDocument::from_category(&fac.middle, None),
                "middle_counts": counts(&fac.middle),
                "e_is_boba": is_boba(&fac.e),
                "m_is_lff": is_lff(&fac.m),
                "composite_is_input": fac.e.then(&fac.m)? == f,
                "e": functor_doc(&fac.e, doc.domain.clone(), mid()),
                "m": functor_doc(&fac.m, mid(), doc.codomain.clone()),
            })
        }
        Command::Lift { file } => {
            let doc: SquareDocument = parse_json(&read_text(file)?)?;
            let sq = LiftingSquare {
                e: LeftLegData::Full(doc.e.load(r)?),
                m: doc.m.load(r)?,
                top: LeftLegData::Full(doc.top.load(r)?),
                bottom: doc.bottom.load(r)?,
            };
            let d = solve_lifting(&sq)?;
            json!({
                "command": "lift",
                "filler": functor_doc(&d, doc.e.codomain.clone(), doc.m.domain.clone()),
            })
        }
        Command::Coherence { axiom, probes, ambient } => coherence(*axiom, probes, *ambient, r, limits)?,
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let builtin: Vec<Value> = catalog::NAMES
                    .iter()
                    .map(|n| {
                        let c = catalog::get(n).unwrap();
                        json!({ "name": n, "description": catalog::describe(n), "counts": counts(&c) })
                    })
                    .collect();
                json!({ "command": "catalog", "builtin": builtin, "external": r.directory_entries() })
            }
            CatalogAction::Show { name } => {
                let path = std::path::Path::new(name);
                let doc = if path.is_file() {
                    // a file keeps its own name
                    let d = document::read_document(path)?;
                    TwoCatDocument::from_category(&d.load()?, d.name.as_deref())
                } else {
                    TwoCatDocument::from_category(&*r.resolve(name)?, Some(name))
                };
                serde_json::to_value(doc).unwrap()
            }
        },
        Command::Export { dot } => return Ok(Report::Text(to_dot(&*r.resolve(dot)?, dot))),
    };
    Ok(Report::Json(out))
}

fn parse_probes(r: &mut Resolver, s: &str) -> Result<Vec<Vec<Arc<Fin2Category>>>> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.split(',').map(|n| r.resolve(n.trim())).collect())
        .collect()
}

fn coherence(axiom: AxiomArg, probes: &str, ambient: AmbientArg, r: &mut Resolver, limits: &Limits) -> Result<Value> {
    let ax = match axiom {
        AxiomArg::Pentagon => Axiom::Pentagon,
        AxiomArg::Triangle => Axiom::Triangle,
        AxiomArg::Symmetry => Axiom::Symmetry,
        AxiomArg::Hexagon => Axiom::Hexagon,
        AxiomArg::Inverses => Axiom::Inverses,
    };
    let tuples = parse_probes(r, probes)?;
    if tuples.is_empty() {
        return Err(Error::malformed("no probe tuples given"));
    }
    let setup = MonoidalSetup::new(*limits);
    let k = setup.k();
    let report = match ambient {
        AmbientArg::TwoCat => {
            let z = factor_operations(&setup.ambient, &k);
            coherence_check(&setup.ambient, &z, ax, &tuples)?
        }
        AmbientArg::Cat => {
            let x = Discrete::new(&setup.x);
            let y = Discrete::sharing(&setup.y, &x);
            let dk = DiscreteMap {
                inner: &k,
                source: &x,
                target: &y,
            };
            let z = factor_operations(&FinCat, &dk);
            let cats = tuples
                .iter()
                .map(|t| {
                    t.iter()
                        .map(|c| {
                            if c.is_locally_discrete() {
                                Ok(c.underlying().clone())
                            } else {
                                Err(Error::UnsupportedInput("the Cat ambient takes locally discrete probes".into()))
                            }
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            coherence_check(&FinCat, &z, ax, &cats)?
        }
    };
    Ok(json!({
        "command": "coherence",
        "axiom": report.axiom,
        "ambient": match ambient { AmbientArg::TwoCat => "2cat", AmbientArg::Cat => "cat" },
        "probes": report.probes,
        "equations_checked": report.equations_checked,
        "holds": true,
    }))
}

/// Objects as nodes, nonidentity 1-cells as edges labelled with the number
/// of nonidentity 2-cells out of them.
pub fn to_dot(c: &Fin2Category, name: &str) -> String {
    let mut s = String::new();
    let q = |t: &str| format!("\"{}\"", t.replace('\\', "\\\\").replace('"', "\\\""));
    writeln!(s, "digraph {} {{", q(name)).unwrap();
    for x in 0..c.num_objects() {
        writeln!(s, "  {};", q(c.object_name(x))).unwrap();
    }
    for f in 0..c.num_one_cells() {
        if c.is_identity1(f) {
            continue;
        }
        let cells = c.cells_from(f).iter().filter(|&&t| !c.is_identity2(t)).count();
        let label = if cells == 0 {
            c.one_cell_name(f).to_string()
        } else {
            format!("{} [{cells}]", c.one_cell_name(f))
        };
        writeln!(
            s,
            "  {} -> {} [label={}];",
            q(c.object_name(c.src1(f))),
            q(c.object_name(c.tgt1(f))),
            q(&label)
        )
        .unwrap();
    }
    s.push_str("}\n");
    s
}
