//! Writes an SVG figure for every gallery scene into `target/figures`.
//!
//! `cargo run --example figures`

use convex_components::cli::{execute, Command, Format, GalleryAction, RunConfig};
use convex_components::gallery::GalleryId;

fn main() -> convex_components::Result<()> {
    let dir = std::path::Path::new("target/figures");
    std::fs::create_dir_all(dir).map_err(|e| convex_components::Error::InvalidInput(e.to_string()))?;
    for id in GalleryId::ALL {
        let mut cfg = RunConfig::new(Command::Gallery(GalleryAction::Build(id)));
        cfg.format = Format::Svg;
        let path = dir.join(format!("{id}.svg"));
        cfg.output = Some(path.clone());
        execute(&cfg)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
