use std::process::Command;

use proptest::prelude::*;
use serde_json::{json, Value};
use ybasis::json as codec;
use ybasis_core::coefficients::rational;
use ybasis_core::{AlgebraElement, Permutation, Surd};

fn ybasis(args: &[&str]) -> (i32, String, String) {
    ybasis_env(args, &[])
}

fn ybasis_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ybasis"))
        .args(args)
        .envs(env.iter().copied())
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn parse(out: &str) -> Value {
    serde_json::from_str(out).expect("valid JSON")
}

#[test]
fn dims_of_four_boxes() {
    let (code, out, _) = ybasis(&["dims", "--m", "4", "--format", "text"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        [
            "(4)  1/24*N^4 + 1/4*N^3 + 11/24*N^2 + 1/4*N",
            "(3,1)  1/8*N^4 + 1/4*N^3 - 1/8*N^2 - 1/4*N",
            "(2,2)  1/12*N^4 - 1/12*N^2",
            "(2,1,1)  1/8*N^4 - 1/4*N^3 - 1/8*N^2 + 1/4*N",
            "(1,1,1,1)  1/24*N^4 - 1/4*N^3 + 11/24*N^2 - 1/4*N",
        ]
    );
    let v = parse(&ybasis(&["dims", "--m", "4"]).1);
    assert_eq!(v["dimensions"][2]["diagram"], json!([2, 2]));
    assert_eq!(
        v["dimensions"][2]["dimension"],
        json!([[2, [[1, "-1/12"]]], [4, [[1, "1/12"]]]])
    );
}

#[test]
fn output_is_deterministic() {
    let a = ybasis(&["basis", "--m", "4"]).1;
    let b = ybasis_env(&["basis", "--m", "4"], &[("YBASIS_THREADS", "3")]).1;
    assert_eq!(a, b);
    let c = ybasis(&["verify", "--m", "4", "--threads", "2"]).1;
    assert_eq!(c, ybasis(&["verify", "--m", "4"]).1);
}

#[test]
fn basis_json_round_trips() {
    let (code, out, _) = ybasis(&["basis", "--m", "4", "--verify", "all"]);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(v["report"]["passed"], json!(true));
    let core = ybasis_core::basis::assemble(4, ybasis_core::BasisKind::Hermitian).unwrap();
    for (blk, jb) in core.blocks.iter().zip(v["blocks"].as_array().unwrap()) {
        assert_eq!(codec::parse_tableau(&jb["tableaux"][0]).unwrap(), blk.tableaux[0]);
        for (i, row) in blk.operators.iter().enumerate() {
            for (j, op) in row.iter().enumerate() {
                assert_eq!(&codec::parse_operator(&jb["operators"][i][j]).unwrap(), op);
            }
        }
    }
}

#[test]
fn young_basis_flags() {
    let (code, out, _) = ybasis(&["basis", "--m", "3", "--kind", "young", "--verify", "table"]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out)["kind"], json!("young"));
    let (code, _, err) = ybasis(&["basis", "--m", "3", "--kind", "young", "--verify", "ortho"]);
    assert_eq!(code, 2);
    assert!(err.contains("orthonormality"));
    let (code, _, err) = ybasis(&["basis", "--m", "5", "--kind", "young"]);
    assert_eq!(code, 2);
    assert!(err.contains("beyond m=4"), "{err}");
}

#[test]
fn projector_and_transition_commands() {
    let v = parse(&ybasis(&["projector", "--tableau", "[[1,2],[3]]"]).1);
    assert_eq!(v["word"], json!("4/3·S{1,2}·A{1,3}·S{1,2}"));
    assert_eq!(v["kind"], json!("mold"));
    let y = parse(
        &ybasis(&[
            "projector",
            "--tableau",
            "{\"shape\":[2,1],\"rows\":[[1,2],[3]]}",
            "--kind",
            "young",
        ])
        .1,
    );
    assert_eq!(y["normalization"], json!([[1, "4/3"]]));
    let (_, latex, _) = ybasis(&["projector", "--tableau", "[[1],[2]]", "--format", "latex"]);
    assert!(latex.starts_with("P_{[[1],[2]]} = "), "{latex}");
    let t = parse(&ybasis(&["transition", "--to", "[[1,4],[2],[3]]", "--from", "[[1,3],[2],[4]]"]).1);
    assert_eq!(t["tau_squared"], json!("2/1"));
    assert_eq!(t["word"], json!("√2·A{1,2,3}·(3 4)·S{1,3}·A{1,2}"));
    let (code, _, _) = ybasis(&["transition", "--to", "[[1,2]]", "--from", "[[1],[2]]"]);
    assert_eq!(code, 2);
}

#[test]
fn represent_command() {
    let op = r#"{"m":3,"terms":[{"perm":[1,2,3],"coeff":[[1,"1/1"]]},{"perm":[2,1,3],"coeff":[[1,"1/1"]]}]}"#;
    let (code, out, _) = ybasis(&["represent", "--N", "2", "--op", op, "--rank"]);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(v["dim"], json!(8));
    assert_eq!(v["rank"], json!(6));
    let a123 = parse(&ybasis(&["projector", "--tableau", "[[1],[2],[3]]"]).1)["operator"].to_string();
    let v = parse(&ybasis(&["represent", "--m", "3", "--N", "2", "--op", &a123, "--rank"]).1);
    assert_eq!(v["entries"], json!([]));
    assert_eq!(v["rank"], json!(0));
    let (code, _, err) = ybasis(&["represent", "--N", "30", "--op", op]);
    assert_eq!(code, 2);
    assert!(err.contains("27000"), "{err}");
    assert_eq!(
        ybasis(&["represent", "--N", "30", "--op", op, "--size-cap", "30000"]).0,
        0
    );
    assert_eq!(ybasis(&["represent", "--m", "2", "--N", "2", "--op", op]).0, 2);
}

#[test]
fn config_file_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    let out = dir.path().join("dims.txt");
    std::fs::write(
        &cfg,
        format!("m = 3\nformat = \"text\"\nout = {:?}\n", out.display().to_string()),
    )
    .unwrap();
    let (code, stdout, _) = ybasis(&["dims", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("(3)  1/6*N^3"), "{text}");
    std::fs::write(&cfg, "m = 3\nkind = \"sideways\"\n").unwrap();
    assert_eq!(ybasis(&["basis", "--config", cfg.to_str().unwrap()]).0, 2);
    std::fs::write(&cfg, "wrong = 1\n").unwrap();
    assert_eq!(ybasis(&["dims", "--config", cfg.to_str().unwrap()]).0, 2);
    assert_eq!(ybasis_env(&["dims", "--m", "2"], &[("YBASIS_THREADS", "zero")]).0, 2);
}

#[test]
fn verify_reports() {
    let (code, out, _) = ybasis(&["verify", "--m", "3", "--suite", "all"]);
    assert_eq!(code, 0);
    let v = parse(&out);
    let checks = v["report"]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["passed"] == json!(true)));
    assert!(checks
        .iter()
        .any(|c| c["identity"].as_str().unwrap().starts_with("young:")));
    let (_, text, _) = ybasis(&["verify", "--m", "2", "--suite", "table", "--format", "text"]);
    assert!(text.starts_with("m = 2\npass m_ij m_jl = m_il"), "{text}");
}

fn arb_operator() -> impl Strategy<Value = AlgebraElement> {
    let term = (0usize..24, -6i64..7, 1i64..5, prop::sample::select(vec![1u64, 2, 3, 6]));
    prop::collection::vec(term, 0..8).prop_map(|terms| {
        let perms: Vec<Permutation> = Permutation::all(4).collect();
        AlgebraElement::from_terms(
            4,
            terms
                .into_iter()
                .map(|(p, n, d, r)| (perms[p].clone(), Surd::term(r, rational(n, d)))),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn operators_round_trip(a in arb_operator()) {
        let text = serde_json::to_string(&codec::operator(&a)).unwrap();
        let back = codec::parse_operator(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }
}
