#![allow(dead_code)]

use std::path::PathBuf;

/// A pinned invocation: golden file stem, argv after `boole`, stdin, exit code.
pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: &'static str,
    pub code: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], code: i32) -> Case {
    Case {
        name,
        args,
        stdin: "",
        code,
    }
}

pub const CASES: &[Case] = &[
    case("normalize_absorption", &["normalize", "x*(x + y - x*y)"], 0),
    case("normalize_zero", &["normalize", "0"], 0),
    case("normalize_cube", &["normalize", "x ^ 3"], 0),
    case("develop_sum", &["develop", "x + y"], 0),
    case("develop_one", &["develop", "1"], 0),
    case("develop_with_vars", &["develop", "x", "--vars=x,y"], 0),
    case("equal_absorption", &["equal", "x*(x+y-x*y)", "x"], 0),
    case("equal_sum_vs_union", &["equal", "x+y", "x+y-x*y"], 1),
    case("equal_zero", &["equal", "0", "0"], 0),
    case("eliminate_y", &["eliminate", "y - x", "--elim=y"], 0),
    case("r01_disjoint_sum", &["r01", "x+y=z -> x*y*z=0"], 0),
    case("eval_overlap", &["eval", "x + y", "--classes", "U=2; x={0}; y={0}"], 1),
    // Beyond the pinned examples.
    case("reduce_pair", &["reduce", "x = y", "y"], 0),
    case("solve_containment", &["solve", "x*y - x", "--for=y"], 0),
    case("solve_vacuous", &["solve", "x", "--for=y"], 0),
    case("solve_iterated", &["solve", "x*y - z", "--for=y,z"], 0),
    case("interpretable_sum", &["interpretable", "x + y"], 0),
    case("interpretable_disjoint", &["interpretable", "x + (1-x)*y"], 0),
    case("setexpr_disjoint", &["setexpr", "x + (1-x)*y"], 0),
    case("setexpr_difference", &["setexpr", "x - x*y"], 0),
    case("setexpr_rejects_sum", &["setexpr", "x + y"], 1),
    case("r01_fails", &["r01", "x + y = x + y - x*y"], 1),
    case("eval_union", &["eval", "x + (1-x)*y", "--classes", "U=3; x={0}; y={1,2}"], 0),
    case("eval_multisets", &["eval", "x - 2*y", "--multisets", "x=(1,2,0); y=(0,1,1)"], 0),
    case("json_normalize", &["--format", "json-lines", "normalize", "x + y - 2*x*y"], 0),
    case("json_equal", &["--format=json-lines", "equal", "x+y", "x+y-x*y"], 1),
    Case {
        name: "r01_stdin",
        args: &["r01"],
        stdin: "# disjoint sums\nx+y=z -> x*y*z=0\n(x+y)*(x+y)=x+y -> x*y=0\n\nx*y=0 -> x=0\nx*x = x\n",
        code: 1,
    },
    case("normalize_leading_minus", &["normalize", "-x + 1"], 0),
    case("parse_error", &["normalize", "x ++ y"], 2),
    case("cap_error", &["--max-vars=1", "develop", "x*y"], 2),
    case("usage_error", &["frobnicate"], 2),
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.out"))
}

pub fn invoke(c: &Case) -> boole_cli::Outcome {
    let argv = std::iter::once("boole").chain(c.args.iter().copied());
    boole_cli::run(argv, &mut c.stdin.as_bytes())
}

/// Compares every case with its golden stdout and exit code; returns failures.
pub fn check_all() -> Vec<String> {
    let mut failures = Vec::new();
    for c in CASES {
        let out = invoke(c);
        let path = golden_path(c.name);
        if std::env::var_os("BOOLE_BLESS").is_some() {
            std::fs::write(&path, &out.stdout).unwrap();
        }
        match std::fs::read_to_string(&path) {
            Ok(want) if want == out.stdout => {}
            Ok(want) => failures.push(format!(
                "{}: stdout {:?}, want {want:?}",
                c.name, out.stdout
            )),
            Err(e) => failures.push(format!("{}: {e}", c.name)),
        }
        if out.code != c.code {
            failures.push(format!("{}: exit {}, want {}", c.name, out.code, c.code));
        }
        if c.code == 2 && !out.stderr.contains("error") {
            failures.push(format!("{}: no error on stderr", c.name));
        }
    }
    failures
}
