// Usage: cargo run --release --example selftest [full]

use spchar::selftest::{run, Level};

fn main() {
    let level = match std::env::args().nth(1).as_deref() {
        Some("full") => Level::Full,
        _ => Level::Quick,
    };
    let checks = run(level);
    for c in &checks {
        println!("{} {}{}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default());
    }
    if checks.iter().any(|c| !c.passed) {
        std::process::exit(1);
    }
}
