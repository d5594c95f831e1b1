use std::path::PathBuf;

use gray2cat::cli::document::{CatRef, FunctorDocument, SquareDocument, TwoCatDocument, CATALOG_ENV};
use gray2cat::cli::{run, Outcome};
use gray2cat::kernel::{catalog, TwoFunctor};
use serde_json::Value;

fn go(args: &[&str]) -> Outcome {
    let mut v = vec!["gray2cat"];
    v.extend_from_slice(args);
    run(v)
}

fn report(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gray2cat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn gray_of_two_arrows_is_the_pseudo_square() {
    let o = go(&["gray", "S1", "S1"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let r = report(&o);
    assert_eq!(r["counts"]["objects"], 4);
    assert_eq!(r["counts"]["one_cells"], 10);
    assert_eq!(r["counts"]["two_cells"], 12);
    assert_eq!(r["q_is_lff"], true);
    assert_eq!(r["p_is_boba"], true);
    assert_eq!(r["q_after_p_is_k"], true);
    let o = go(&["gray", "S1", "S1", "--emit-pq"]);
    let r = report(&o);
    assert!(r["tensor"]["homs"].is_array());
    assert!(r["p"]["one_cells"].is_object());
    assert!(r["q"]["one_cells"].is_object());
}

#[test]
fn exit_codes() {
    assert_eq!(go(&["validate", "S0"]).code, 0);
    let o = go(&["funny", "loop", "loop"]);
    assert_eq!(o.code, 2);
    assert_eq!(report(&o)["error"]["kind"], "WordExplosion");
    let o = go(&["validate", "no-such-thing"]);
    assert_eq!(o.code, 3);
    assert_eq!(report(&o)["error"]["kind"], "MalformedSpec");
    assert_eq!(go(&["frobnicate"]).code, 3);
    assert_eq!(go(&["--help"]).code, 0);
    let o = go(&["coherence", "--axiom", "pentagon", "--probes", "S1,S1"]);
    assert_eq!(o.code, 3);
    assert_eq!(report(&o)["error"]["kind"], "ArityMismatch");
}

#[test]
fn basic_commands() {
    let r = report(&go(&["product", "S2", "S1"]));
    assert_eq!((r["counts"]["objects"].clone(), r["counts"]["one_cells"].clone()), (4.into(), 12.into()));
    assert_eq!(r["counts"]["two_cells"], 15);
    let r = report(&go(&["funny", "S1", "S1", "--full"]));
    assert_eq!(r["one_cells"], 10);
    assert_eq!(r["counts"]["two_cells"], 10);
    let r = report(&go(&["hom", "S1", "S1", "--kind", "ps"]));
    assert_eq!(r["counts"]["objects"], 3);
    let r = report(&go(&["catalog", "list"]));
    assert_eq!(r["builtin"].as_array().unwrap().len(), catalog::NAMES.len());
    let o = go(&["export", "--dot", "S2"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("digraph \"S2\" {"));
    assert!(o.stdout.contains("\"0\" -> \"1\" [label=\"f [1]\"];"), "{}", o.stdout);
}

#[test]
fn coherence_command_in_both_ambients() {
    let o = go(&["coherence", "--axiom", "pentagon", "--probes", "S1,S1,S1,S1"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert_eq!(report(&o)["holds"], true);
    let o = go(&["coherence", "--axiom", "hexagon", "--probes", "S1,S1,S2;S2,S1,S1"]);
    assert_eq!(report(&o)["equations_checked"], 4);
    let o = go(&["coherence", "--axiom", "triangle", "--probes", "S1,path2", "--ambient", "cat"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let o = go(&["coherence", "--axiom", "triangle", "--probes", "S2,S1", "--ambient", "cat"]);
    assert_eq!(o.code, 2);
}

#[test]
fn documents_round_trip_through_files() {
    for name in catalog::NAMES {
        let shown = go(&["catalog", "show", name]);
        assert_eq!(shown.code, 0);
        let path = scratch(&format!("{name}.json"));
        std::fs::write(&path, &shown.stdout).unwrap();
        let p = path.to_str().unwrap();
        assert_eq!(go(&["validate", p]).code, 0);
        // load, save, load: a fixpoint
        let once = go(&["catalog", "show", p]).stdout;
        let path2 = scratch(&format!("{name}-again.json"));
        std::fs::write(&path2, &once).unwrap();
        let twice = go(&["catalog", "show", path2.to_str().unwrap()]).stdout;
        assert_eq!(once, twice, "{name}");
    }
}

#[test]
fn reports_are_deterministic() {
    for args in [&["gray", "S2", "S1", "--emit-pq"][..], &["catalog", "show", "gray-s2-s1"], &["hom", "S1", "S2", "--kind", "funny"]] {
        assert_eq!(go(args).stdout, go(args).stdout);
    }
}

fn map(name: &str) -> TwoFunctor {
    catalog::maps().into_iter().find(|(n, _)| *n == name).unwrap().1
}

#[test]
fn factor_and_lift_from_documents() {
    let f = map("S2->S1 collapse");
    let doc = FunctorDocument::from_functor(&f, CatRef::Name("S2".into()), CatRef::Name("S1".into()));
    let path = scratch("collapse.json");
    std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    let o = go(&["factor", path.to_str().unwrap()]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let r = report(&o);
    assert_eq!(r["e_is_boba"], true);
    assert_eq!(r["m_is_lff"], true);
    assert_eq!(r["composite_is_input"], true);
    // the middle has S2's 1-cells and one 2-cell between f and g
    assert_eq!(r["middle_counts"]["one_cells"], 4);
    assert_eq!(r["middle_counts"]["two_cells"], 6);

    // identity square on S2 → S1: the filler is the collapse itself
    let s2 = TwoFunctor::identity(catalog::get_arc("S2").unwrap());
    let s1 = TwoFunctor::identity(catalog::get_arc("S1").unwrap());
    let name = |n: &str| CatRef::Name(n.into());
    let sq = SquareDocument {
        format: 1,
        e: FunctorDocument::from_functor(&s2, name("S2"), name("S2")),
        m: FunctorDocument::from_functor(&s1, name("S1"), name("S1")),
        top: FunctorDocument::from_functor(&f, name("S2"), name("S1")),
        bottom: FunctorDocument::from_functor(&f, name("S2"), name("S1")),
    };
    let path = scratch("square.json");
    std::fs::write(&path, serde_json::to_string_pretty(&sq).unwrap()).unwrap();
    let o = go(&["lift", path.to_str().unwrap()]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert_eq!(report(&o)["filler"]["one_cells"]["f"], "u");

    // a square that does not commute
    let mut bad = sq.clone();
    bad.bottom = FunctorDocument::from_functor(&map("S2->walking-iso"), name("S2"), name("walking-iso"));
    bad.m = FunctorDocument::from_functor(&map("walking-iso->S1 collapse"), name("walking-iso"), name("S1"));
    std::fs::write(&path, serde_json::to_string_pretty(&bad).unwrap()).unwrap();
    let o = go(&["lift", path.to_str().unwrap()]);
    assert_eq!(o.code, 1, "{}", o.stdout);
}

#[test]
fn external_catalog_directory() {
    let dir = scratch("catalog-dir");
    std::fs::create_dir_all(&dir).unwrap();
    let doc = TwoCatDocument::from_category(&catalog::get("pseudo-square").unwrap(), Some("square"));
    std::fs::write(dir.join("my-square.json"), doc.to_json()).unwrap();
    std::env::set_var(CATALOG_ENV, &dir);
    let r = report(&go(&["catalog", "list"]));
    assert_eq!(r["external"][0], "my-square");
    let r = report(&go(&["validate", "my-square"]));
    assert_eq!(r["counts"]["two_cells"], 12);
}
