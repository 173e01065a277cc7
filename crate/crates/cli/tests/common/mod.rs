#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn superpoint<S: AsRef<str>>(args: &[S]) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_superpoint"))
        .args(args.iter().map(|a| a.as_ref()))
        .output()
        .expect("binary runs");
    Outcome {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap_or(-1),
    }
}

fn render(o: &Outcome) -> String {
    format!("{}--- stderr\n{}--- exit {}\n", o.stdout, o.stderr, o.code)
}

/// Runs every `*.args` file (one argument per line) and compares against the
/// matching `*.out`. With `UPDATE_GOLDEN` set the `.out` files are rewritten.
pub fn check_goldens() -> Result<usize, String> {
    let mut cases: Vec<PathBuf> = fs::read_dir(golden_dir())
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "args"))
        .collect();
    cases.sort();
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for case in &cases {
        let text = fs::read_to_string(case).map_err(|e| e.to_string())?;
        let args: Vec<&str> = text.lines().collect();
        let first = render(&superpoint(&args));
        let second = render(&superpoint(&args));
        if first != second {
            return Err(format!("{} is not deterministic", case.display()));
        }
        let out_path = case.with_extension("out");
        if update {
            fs::write(&out_path, &first).map_err(|e| e.to_string())?;
            continue;
        }
        let expected = fs::read_to_string(&out_path).map_err(|e| format!("{}: {e}", out_path.display()))?;
        if expected != first {
            return Err(format!(
                "{} differs\n--- expected\n{expected}--- got\n{first}",
                case.display()
            ));
        }
    }
    Ok(cases.len())
}
