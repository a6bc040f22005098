//! Drawing a web: Tutte embedding with the boundary on a circle, written as
//! SVG, Graphviz DOT and TikZ into the system temporary directory.
//!
//! Run with `cargo run --example render`.

use flamingo::cli::{render, Format};
use flamingo::webs::enumerate_aw;

fn main() -> flamingo::Result<()> {
    let webs = enumerate_aw(10, 3)?;
    let w = webs.iter().max_by_key(|w| w.graph().num_vertices()).expect("AW(10, 3) is nonempty");
    let dir = std::env::temp_dir();
    for (format, ext) in [(Format::Svg, "svg"), (Format::Dot, "dot"), (Format::Tikz, "tex")] {
        let path = dir.join(format!("flamingo-web.{ext}"));
        let doc = render(w.graph(), format)?;
        std::fs::write(&path, &doc)?;
        println!("wrote {} ({} bytes)", path.display(), doc.len());
    }
    Ok(())
}
