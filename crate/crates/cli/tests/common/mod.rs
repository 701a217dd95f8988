#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

/// The binary with any ambient settings file hidden.
pub fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_noneuclid"));
    c.env_remove("NONEUCLID_CONFIG")
        .env("XDG_CONFIG_HOME", "/nonexistent/noneuclid-test")
        .env("HOME", "/nonexistent/noneuclid-test");
    c
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

/// A pinned invocation; `{svg}` and `{json}` stand for output files.
pub struct Fixture {
    pub name: &'static str,
    pub args: &'static [&'static str],
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "sphere_octant",
        args: &[
            "sphere", "triangle", "--points", "90,0", "0,0", "0,90", "--json", "--out", "{json}", "--svg", "{svg}",
        ],
    },
    Fixture {
        name: "geometry_quarter_sphere",
        args: &[
            "geometry",
            "--curvature",
            "1",
            "--area",
            "1.570796",
            "--json",
            "--out",
            "{json}",
        ],
    },
    Fixture {
        name: "tiling_soccer_ball",
        args: &[
            "tiling", "--config", "5,6,6", "--rings", "99", "--out", "{svg}", "--report", "{json}",
        ],
    },
    Fixture {
        name: "tiling_heptagon_ring",
        args: &[
            "tiling",
            "--config",
            "7,6,6",
            "--rings",
            "1",
            "--edge-mm",
            "30",
            "--out",
            "{svg}",
            "--report",
            "{json}",
        ],
    },
    Fixture {
        name: "fold_sixty_degrees",
        args: &[
            "fold",
            "--inner",
            "30",
            "--outer",
            "120",
            "--creases",
            "6",
            "--fold-angle",
            "60",
            "--out",
            "{svg}",
            "--report",
            "{json}",
        ],
    },
];

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Runs a fixture in `dir` and returns `(file name, bytes)` for each output.
pub fn run_fixture(f: &Fixture, dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut outputs = Vec::new();
    let args: Vec<String> = f
        .args
        .iter()
        .map(|a| match *a {
            "{svg}" | "{json}" => {
                let name = format!("{}.{}", f.name, &a[1..a.len() - 1]);
                let path = dir.join(&name);
                outputs.push((name, path.clone()));
                path.display().to_string()
            }
            _ => a.to_string(),
        })
        .collect();
    let o = bin().args(&args).output().expect("binary runs");
    assert!(o.status.success(), "{}: {}", f.name, stderr(&o));
    outputs
        .into_iter()
        .map(|(name, path)| (name, std::fs::read(path).expect("output written")))
        .collect()
}

/// Compares against the committed golden file, or rewrites it when
/// `UPDATE_GOLDENS` is set.
pub fn check_golden(name: &str, bytes: &[u8]) -> Result<(), String> {
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDENS").is_some() {
        std::fs::create_dir_all(golden_dir()).map_err(|e| e.to_string())?;
        std::fs::write(&path, bytes).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let want = std::fs::read(&path)
        .map_err(|e| format!("missing golden {} ({e}); run with UPDATE_GOLDENS=1", path.display()))?;
    if want != bytes {
        return Err(format!("{name} differs from its golden file"));
    }
    Ok(())
}
