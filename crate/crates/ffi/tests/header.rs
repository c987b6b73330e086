use std::path::Path;
use std::process::Command;

fn read(rel: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join(rel)).unwrap()
}

fn exported_functions(src: &str) -> Vec<String> {
    src.lines()
        .filter_map(|l| l.trim_start().strip_prefix("pub ").filter(|r| r.contains("extern \"C\" fn ")))
        .filter_map(|r| r.split("fn ").nth(1))
        .map(|r| r.split('(').next().unwrap().to_string())
        .collect()
}

#[test]
fn header_declares_every_export() {
    let (src, header) = (read("src/lib.rs"), read("include/hypersoft.h"));
    let exports = exported_functions(&src);
    assert!(exports.len() >= 15, "{exports:?}");
    for f in &exports {
        assert!(header.contains(&format!("{f}(")), "header is missing {f}; regenerate with cbindgen");
    }
    for ty in ["HsStatus", "HsMode", "HsOp", "HsDocument", "HsSpace", "HsSoftSet"] {
        assert!(header.contains(ty), "header is missing {ty}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/hypersoft.h"))
        .status()
    else {
        eprintln!("no C compiler on PATH; skipping");
        return;
    };
    assert!(status.success());
}
