mod common;

use std::path::{Path, PathBuf};

use serde_json::Value;

use flamingo::cli::{render, run_with, tutte_layout, Format};
use flamingo::plabic::{star, PlabicGraph};
use flamingo::webs::enumerate_aw;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("flamingo").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("flamingo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, value: &Value) -> PathBuf {
    let path = scratch(name);
    std::fs::write(&path, serde_json::to_string(value).unwrap()).unwrap();
    path
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn enumerate_ten_three_is_stable() {
    let (code, first, _) = run(&["enumerate", "--n", "10", "--d", "3", "--kind", "aw"]);
    assert_eq!(code, 0);
    let (_, second, _) = run(&["enumerate", "--n", "10", "--d", "3", "--kind", "aw"]);
    assert_eq!(first, second);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["count"], 210);
    let expected: Vec<Value> = enumerate_aw(10, 3).unwrap().iter().map(|w| w.graph().to_json()).collect();
    assert_eq!(v["items"].as_array().unwrap(), &expected);
    assert_eq!(json(&["enumerate", "--n", "7", "--d", "2", "--r", "3", "--kind", "syt"])["count"], 14);
    assert_eq!(json(&["enumerate", "--n", "7", "--d", "2", "--r", "2", "--kind", "wnc"])["count"], 14);
    assert_eq!(json(&["enumerate", "--n", "8", "--d", "2", "--r", "4", "--kind", "rect"])["count"], 14);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["enumerate", "--n", "3"]).0, 2);
    assert_eq!(run(&["enumerate", "--n", "7", "--d", "2", "--kind", "tree"]).0, 2);
    assert_eq!(run(&["enumerate", "--n", "5", "--d", "2", "--kind", "syt"]).0, 2);
    assert_eq!(run(&["enumerate", "--n", "8", "--d", "2", "--r", "4", "--kind", "aw"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn malformed_json_reports_its_location() {
    let path = scratch("bad.json");
    std::fs::write(&path, "{\"n\": 3,\n \"edges\" [] }").unwrap();
    let (code, _, err) = run(&["invariant", "--web", arg(&path)]);
    assert_eq!(code, 2);
    assert!(err.contains("bad.json:2:"), "{err}");
    let (code, _, err) = run(&["decompose", "--web", "/nonexistent/web.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent/web.json"));
    let not_a_web = write("not-a-web.json", &serde_json::json!({"n": 3}));
    assert_eq!(run(&["render", "--web", arg(&not_a_web)]).0, 2);
}

#[test]
fn csp_report_at_ten_three() {
    let (code, text, _) = run(&["--pretty", "csp", "--n", "10", "--d", "3"]);
    assert_eq!(code, 0);
    let row = text.lines().find(|l| l.trim_start().starts_with("5 ")).unwrap();
    let fields: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(fields, ["5", "2", "10", "10", "pass"]);
    let v = json(&["csp", "--n", "10", "--d", "3"]);
    assert_eq!(v["rows"][4]["fixed"], 10);
    assert_eq!(v["total"], 210);
}

#[test]
fn verify_basis_at_seven_two() {
    let (code, text, _) = run(&["--pretty", "verify", "--suite", "basis", "--n", "7", "--d", "2"]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("rank 14 = 14"));
    let v = json(&["verify", "--suite", "basis", "--n", "7", "--d", "2"]);
    assert_eq!(v["pass"], true);
}

#[test]
fn every_suite_passes_at_six_two() {
    for suite in ["bijections", "skein", "basis", "csp", "signs", "sl3"] {
        let v = json(&["verify", "--suite", suite, "--n", "6", "--d", "2"]);
        assert_eq!(v["pass"], true, "{suite}: {v}");
        assert!(!v["checks"].as_array().unwrap().is_empty());
    }
}

#[test]
fn stated_reflection_sign_is_reported_not_gating() {
    let v = json(&["verify", "--suite", "signs", "--n", "7", "--d", "2"]);
    let checks = v["checks"].as_array().unwrap();
    let stated = checks.iter().find(|c| c["name"] == "w0[W,O] = (-1)^(n-1)[refl W, refl O]").unwrap();
    assert_eq!(stated["pass"], false);
    assert_eq!(stated["gating"], false);
    assert_eq!(v["pass"], true);
}

#[test]
fn biject_round_trip() {
    let syt = json(&["enumerate", "--n", "7", "--d", "2", "--kind", "syt"])["items"].clone();
    let input = write("syt.json", &syt);
    let webs = json(&["biject", "--from", "syt", "--to", "aw", "--input", arg(&input)]);
    assert_eq!(webs.as_array().unwrap().len(), 14);
    let webs_file = write("webs.json", &webs);
    let back = json(&["biject", "--from", "aw", "--to", "syt", "--input", arg(&webs_file)]);
    assert_eq!(back, syt);
    let one = write("one.json", &syt[0]);
    let wnc = json(&["biject", "--from", "syt", "--to", "wnc", "--input", arg(&one)]);
    assert!(wnc["blocks"].is_array());
}

#[test]
fn invariant_skein_and_decompose() {
    let tripod = write("tripod.json", &star(3).to_json());
    let v = json(&["invariant", "--web", arg(&tripod), "--jellyfish", "1,2,3"]);
    assert_eq!(v["equal"], true);
    assert_eq!(v["invariant"]["terms"].as_array().unwrap().len(), 6);
    assert_eq!(json(&["invariant", "--jellyfish", "1,2,4|3,5,6"])["jellyfish"]["partition"][1][0], 3);
    assert_eq!(run(&["invariant"]).0, 2);
    assert_eq!(run(&["invariant", "--jellyfish", "1,,2"]).0, 2);

    let w = &enumerate_aw(7, 2).unwrap()[5];
    let web = write("w72.json", &w.graph().to_json());
    let s = json(&["skein", "--web", arg(&web), "--si", "3"]);
    assert_eq!(s["consistent"], true);
    assert!(!s["reduced"].as_array().unwrap().is_empty());
    assert_eq!(run(&["skein", "--web", arg(&web), "--si", "7"]).0, 2);

    let dec = json(&["decompose", "--web", arg(&web)]);
    assert!(dec["groups"].as_array().unwrap().iter().all(|g| g["epsilon"].is_i64()));
}

#[test]
fn orientation_in_web_file_is_used() {
    let g = enumerate_aw(6, 2).unwrap()[0].graph().clone();
    let all = flamingo::invariants::enumerate_perfect_orientations(&g);
    let o = all.last().unwrap();
    let file = write("oriented.json", &serde_json::json!({"web": g.to_json(), "orientation": o.to_json()}));
    let v = json(&["invariant", "--web", arg(&file)]);
    assert_eq!(v["orientation"], o.to_json());
    let expected = flamingo::invariants::web_invariant(&g, o).unwrap().to_json();
    assert_eq!(v["invariant"], expected);
}

#[test]
fn cache_round_trip() {
    let dir = scratch("cache");
    let _ = std::fs::remove_dir_all(&dir);
    let first = json(&["--cache", arg(&dir), "enumerate", "--n", "9", "--d", "3", "--kind", "aw"]);
    let entry = dir.join("aw-9-3.v1.json");
    assert!(entry.exists());
    let second = json(&["--cache", arg(&dir), "enumerate", "--n", "9", "--d", "3", "--kind", "aw"]);
    assert_eq!(first, second);
    std::fs::write(&entry, "{\"format\": \"something else\"}").unwrap();
    let third = json(&["--cache", arg(&dir), "enumerate", "--n", "9", "--d", "3", "--kind", "aw"]);
    assert_eq!(first, third);
}

#[test]
fn tripod_renders_three_spokes() {
    let g = star(3);
    let svg = render(&g, Format::Svg).unwrap();
    assert_eq!(svg.matches("<line ").count(), 3);
    assert_eq!(svg.matches("r=\"6\"").count(), 1);
    assert!(svg.starts_with("<?xml") && svg.ends_with("</svg>\n"));
    let dot = render(&g, Format::Dot).unwrap();
    assert_eq!(dot.matches(" -- ").count(), 3);
    let tikz = render(&g, Format::Tikz).unwrap();
    assert!(tikz.contains("\\begin{tikzpicture}"));
}

#[test]
fn render_is_byte_deterministic() {
    let g = common::aw_10_3();
    let web = write("fig.json", &g.to_json());
    for format in ["svg", "dot", "tikz"] {
        let out = scratch(&format!("fig.{format}"));
        let (code, _, _) = run(&["render", "--web", arg(&web), "--format", format, "--out", arg(&out)]);
        assert_eq!(code, 0);
        let first = std::fs::read(&out).unwrap();
        run(&["render", "--web", arg(&web), "--format", format, "--out", arg(&out)]);
        assert_eq!(first, std::fs::read(&out).unwrap());
    }
    let svg = render(&g, Format::Svg).unwrap();
    assert_eq!(svg.matches("r=\"6\"").count(), 9);
}

fn cross(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

/// Segments `pq` and `rs` cross at a point interior to both.
fn segments_cross(p: [f64; 2], q: [f64; 2], r: [f64; 2], s: [f64; 2]) -> bool {
    let eps = 1e-9;
    let (d1, d2) = (cross(p, q, r), cross(p, q, s));
    let (d3, d4) = (cross(r, s, p), cross(r, s, q));
    d1 * d2 < -eps && d3 * d4 < -eps
}

fn is_planar_drawing(g: &PlabicGraph) -> bool {
    let pos = tutte_layout(g).unwrap();
    let edges = g.edges();
    for (i, &[a, b]) in edges.iter().enumerate() {
        for &[c, d] in &edges[i + 1..] {
            if [a, b].iter().any(|x| *x == c || *x == d) {
                continue;
            }
            if segments_cross(pos[a], pos[b], pos[c], pos[d]) {
                return false;
            }
        }
    }
    true
}

#[test]
fn tutte_layouts_are_planar() {
    for (n, d) in [(6, 2), (7, 2), (8, 2), (9, 3), (10, 3)] {
        for w in enumerate_aw(n, d).unwrap() {
            assert!(is_planar_drawing(w.graph()), "({n},{d})");
        }
    }
    assert!(is_planar_drawing(&common::aw_10_3()));
}

#[test]
fn tutte_vertices_are_barycenters() {
    let g = common::aw_10_3();
    let pos = tutte_layout(&g).unwrap();
    for v in g.interior_vertices() {
        let nbrs: Vec<usize> = g.rotation(v).iter().map(|&e| g.other_end(e, v)).collect();
        for c in 0..2 {
            let mean = nbrs.iter().map(|&u| pos[u][c]).sum::<f64>() / nbrs.len() as f64;
            assert!((mean - pos[v][c]).abs() < 1e-9);
        }
    }
}
