//! Run the built-in verification suite; pass `full` for the grid oracles.

use thermopurity::verify::{verify, Level};

fn main() {
    let level = match std::env::args().nth(1).as_deref() {
        Some("full") => Level::Full,
        _ => Level::Quick,
    };
    let report = verify(level);
    println!("{report}");
    if !report.passed() {
        std::process::exit(3);
    }
}
