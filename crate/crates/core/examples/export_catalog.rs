//! Write the bundled rings and modular data as JSON files and read them back.
//!
//! `cargo run --example export_catalog -- [dir]`

use mtclab::catalog;
use mtclab::modular::parse_modular_with_base;
use mtclab::ring::parse_ring;

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "catalog".to_string());
    let dir = std::path::Path::new(&dir);
    for path in catalog::export(dir)? {
        let text = std::fs::read_to_string(&path)?;
        let ok = if path.extension().is_some_and(|e| e == "ring") {
            parse_ring(&text).is_ok()
        } else {
            parse_modular_with_base(&text, Some(dir)).is_ok()
        };
        println!("{}  round trip: {ok}", path.display());
    }
    Ok(())
}
