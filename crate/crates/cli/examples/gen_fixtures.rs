//! Regenerates the fixture bundle. By default it writes into the
//! `fixtures/` directory at the workspace root; pass a directory to
//! write elsewhere.
//!
//! ```text
//! cargo run -p fincat-cli --example gen_fixtures [-- <dir>]
//! ```

use std::path::PathBuf;

fn main() -> std::io::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"));
    fincat_cli::bundle::write_bundle(&dir)?;
    println!(
        "wrote {} files to {}",
        fincat_cli::bundle::bundle().len(),
        dir.display()
    );
    Ok(())
}
